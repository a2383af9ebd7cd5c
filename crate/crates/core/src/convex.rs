//! Convex hulls of cyclic ladders `{seedⁿ}` and bounded-search membership.
//!
//! Membership in a hull is only semi-decidable here, so verdicts are
//! `In(n)` or `Unknown`, never a definite "out".

use std::cmp::Ordering;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::{Group, OrderedGroup};
use crate::harness::ball::Ball;
use crate::harness::report::PropertyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `seed⁻ⁿ ≤ x ≤ seedⁿ`, with `n` least.
    In(u64),
    /// No witness up to the search limit.
    Unknown { limit: u64 },
}

impl Verdict {
    pub fn is_in(self) -> bool {
        matches!(self, Verdict::In(_))
    }
}

/// The ladder `seedⁿ` in a host group, searched up to `limit`.
#[derive(Clone, Debug)]
pub struct ConvexLadder {
    group: Group,
    seed: Element,
    limit: u64,
}

impl ConvexLadder {
    pub fn new(group: Group, seed: Element, limit: usize) -> Result<ConvexLadder> {
        group.check(&seed)?;
        if group.sign(&seed)? != Ordering::Greater {
            return Err(Error::Precondition(format!(
                "ladder seed {} is not positive",
                group.render(&seed)
            )));
        }
        Ok(ConvexLadder {
            group,
            seed,
            limit: limit as u64,
        })
    }

    pub fn with_limit(&self, limit: usize) -> ConvexLadder {
        ConvexLadder {
            limit: limit as u64,
            ..self.clone()
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn seed(&self) -> &Element {
        &self.seed
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Least `n ≥ start` with `seed⁻ⁿ ≤ x ≤ seedⁿ`.
    fn search(&self, x: &Element, start: u64) -> Result<Verdict> {
        let g = &self.group;
        let seed_inv = g.inv(&self.seed);
        let mut hi = g.pow(&self.seed, start as i64);
        let mut lo = g.pow(&seed_inv, start as i64);
        for n in start..=self.limit {
            if g.compare(&lo, x)? != Ordering::Greater && g.compare(x, &hi)? != Ordering::Greater {
                return Ok(Verdict::In(n));
            }
            hi = g.mul(&hi, &self.seed);
            lo = g.mul(&lo, &seed_inv);
        }
        Ok(Verdict::Unknown { limit: self.limit })
    }

    /// Direct membership of `x` in the convex hull of the ladder.
    pub fn member(&self, x: &Element) -> Result<Verdict> {
        self.group.check(x)?;
        self.search(x, 0)
    }

    /// Membership decided through the subgroup floor of `x` in an amalgam.
    ///
    /// Needs the seed in the amalgamated subgroup. Then `a_min ≤ seed`, and
    /// `floor ≤ x < floor·a_min` puts `x` within one rung of its floor: if the
    /// floor needs `n` rungs, `x` needs `n` or `n + 1`.
    pub fn member_via_floor(&self, x: &Element) -> Result<Verdict> {
        let amalgam = self.group.require_amalgam()?;
        if !amalgam.in_subgroup(&self.seed) {
            return Err(Error::Precondition(format!(
                "ladder seed {} is not in the amalgamated subgroup",
                self.group.render(&self.seed)
            )));
        }
        self.group.check(x)?;
        let floor = amalgam.a_floor(x)?;
        match self.search(&floor, 0)? {
            Verdict::In(n) => {
                let hi = self.group.pow(&self.seed, n as i64);
                if self.group.compare(x, &hi)? != Ordering::Greater {
                    Ok(Verdict::In(n))
                } else if n < self.limit {
                    Ok(Verdict::In(n + 1))
                } else {
                    Ok(Verdict::Unknown { limit: self.limit })
                }
            }
            unknown => Ok(unknown),
        }
    }

    /// Ball elements verdicted `In`, as a mask over `ball.elements`.
    pub fn in_set(&self, ball: &Ball) -> Result<Vec<bool>> {
        ball.elements
            .iter()
            .map(|z| self.member(z).map(Verdict::is_in))
            .collect()
    }
}

/// Closure of the hull under products and inverses, sampled on ball elements
/// verdicted `In`. A product verdicted `Unknown` is not a counterexample; the
/// report records how many closures were witnessed and how many stayed open.
pub fn strongly_convex_check(ladder: &ConvexLadder, ball: &Ball) -> PropertyReport {
    let g = ladder.group();
    let mut r = PropertyReport::new("strongly-convex");
    let inside: Vec<&Element> = ball
        .elements
        .iter()
        .filter(|z| matches!(ladder.member(z), Ok(Verdict::In(_))))
        .collect();
    let mut witnessed = 0u64;
    let mut open = 0u64;
    let mut tally = |r: &mut PropertyReport, what: String, v: Result<Verdict>| {
        r.check();
        match v {
            Ok(Verdict::In(_)) => witnessed += 1,
            Ok(Verdict::Unknown { .. }) => open += 1,
            Err(e) => r.violation(format!("{what} error: {e}")),
        }
    };
    for u in &inside {
        tally(&mut r, format!("u^-1 u={}", g.render(u)), ladder.member(&g.inv(u)));
        for v in &inside {
            tally(
                &mut r,
                format!("u*v u={} v={}", g.render(u), g.render(v)),
                ladder.member(&g.mul(u, v)),
            );
        }
    }
    r.sampling = Some(if open == 0 {
        format!("closure witnessed for all {witnessed} products")
    } else {
        format!("no counterexample found; witnessed={witnessed} unknown={open}")
    });
    r
}
