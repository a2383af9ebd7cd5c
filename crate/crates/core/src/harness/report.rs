use std::fmt;

/// Witnesses kept per report; the violation count is always exact.
pub const MAX_WITNESSES: usize = 32;

/// Outcome of one property suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub checked: u64,
    /// Total number of violations found.
    pub violation_count: u64,
    /// Replayable witnesses, the first [`MAX_WITNESSES`] in discovery order.
    pub witnesses: Vec<String>,
    /// Sampling domain and seed, for suites that do not enumerate exhaustively.
    pub sampling: Option<String>,
}

impl PropertyReport {
    pub fn new(name: impl Into<String>) -> Self {
        PropertyReport {
            name: name.into(),
            checked: 0,
            violation_count: 0,
            witnesses: Vec::new(),
            sampling: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn check(&mut self) {
        self.checked += 1;
    }

    pub fn violation(&mut self, witness: impl Into<String>) {
        self.violation_count += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness.into());
        }
    }

    /// Checks `ok`, recording `witness()` on failure.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.check();
        if !ok {
            self.violation(witness());
        }
    }

    pub fn merge(&mut self, other: PropertyReport) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }
}

/// `PROP <name> <pass|fail> checked=<n> violations=<k>` followed by one
/// `WITNESS` line per kept witness.
impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PROP {} {} checked={} violations={}",
            self.name,
            if self.passed() { "pass" } else { "fail" },
            self.checked,
            self.violation_count
        )?;
        for w in &self.witnesses {
            write!(f, "\nWITNESS {w}")?;
        }
        Ok(())
    }
}

pub fn serialize_reports(reports: &[PropertyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
