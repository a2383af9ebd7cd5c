use std::fmt;
use std::str::FromStr;

use crate::group::Group;
use crate::harness::ball::{enumerate_ball, Ball};
use crate::harness::properties as p;
use crate::harness::report::PropertyReport;
use crate::Result;

/// Property suites, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyId {
    TotalOrder,
    LeftInvariance,
    Discreteness,
    Charset,
    Extension,
    BaseOrder,
    PingPong,
    Stepping,
    Partition,
    Decomposition,
    Subgroup,
    Convex,
}

impl PropertyId {
    pub const ALL: [PropertyId; 12] = [
        PropertyId::TotalOrder,
        PropertyId::LeftInvariance,
        PropertyId::Discreteness,
        PropertyId::Charset,
        PropertyId::Extension,
        PropertyId::BaseOrder,
        PropertyId::PingPong,
        PropertyId::Stepping,
        PropertyId::Partition,
        PropertyId::Decomposition,
        PropertyId::Subgroup,
        PropertyId::Convex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::TotalOrder => "total-order",
            PropertyId::LeftInvariance => "left-invariance",
            PropertyId::Discreteness => "discreteness",
            PropertyId::Charset => "charset",
            PropertyId::Extension => "extension",
            PropertyId::BaseOrder => "base-order",
            PropertyId::PingPong => "ping-pong",
            PropertyId::Stepping => "stepping",
            PropertyId::Partition => "partition",
            PropertyId::Decomposition => "decomposition",
            PropertyId::Subgroup => "subgroup",
            PropertyId::Convex => "convex",
        }
    }

    /// Suites that only make sense for an amalgam.
    pub fn needs_amalgam(self) -> bool {
        !matches!(
            self,
            PropertyId::TotalOrder
                | PropertyId::LeftInvariance
                | PropertyId::Discreteness
                | PropertyId::Charset
        )
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        PropertyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = PropertyId::ALL.iter().map(|id| id.name()).collect();
                format!("unknown suite '{s}', expected one of: {}", names.join(", "))
            })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub radius: usize,
    pub seed: u64,
    /// Largest ball the harness will enumerate.
    pub cap: usize,
    /// Random triples for left-invariance.
    pub samples: usize,
    /// Longest random word for left-invariance.
    pub word_len: usize,
    /// Random pairs for the decomposition suite.
    pub pairs: usize,
    /// Largest search limit for the convex suite.
    pub convex_limit: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            radius: 4,
            seed: 0,
            cap: 200_000,
            samples: 10_000,
            word_len: 12,
            pairs: 2_000,
            convex_limit: 8,
        }
    }
}

/// Runs the selected suites on `group`, one report per suite in
/// [`PropertyId`] order. Amalgam-only suites report nothing checked on a
/// cyclic group.
pub fn run_suite(group: &Group, config: &SuiteConfig, which: &[PropertyId]) -> Result<Vec<PropertyReport>> {
    let mut ids = which.to_vec();
    ids.sort();
    ids.dedup();
    let needs_ball = ids.iter().any(|id| {
        !matches!(
            id,
            PropertyId::LeftInvariance | PropertyId::Charset | PropertyId::Extension | PropertyId::Subgroup
        )
    });
    let ball = if needs_ball {
        enumerate_ball(group, config.radius, config.cap)?
    } else {
        Ball {
            radius: config.radius,
            elements: Vec::new(),
        }
    };
    let amalgam = group.as_amalgam();
    let mut out = Vec::with_capacity(ids.len());
    for id in ids {
        let report = match (id, amalgam) {
            (PropertyId::TotalOrder, _) => p::total_order(group, &ball),
            (PropertyId::LeftInvariance, _) => {
                p::left_invariance(group, config.samples, config.word_len, config.seed)
            }
            (PropertyId::Discreteness, _) => p::discreteness(group, &ball),
            (PropertyId::Charset, _) => p::charset_signs(group),
            (_, None) => {
                let mut r = PropertyReport::new(id.name());
                r.sampling = Some("not applicable to a cyclic group".into());
                r
            }
            (PropertyId::Extension, Some(x)) => p::extension(x, config.radius, config.cap),
            (PropertyId::BaseOrder, Some(x)) => p::base_order(x, &ball),
            (PropertyId::PingPong, Some(x)) => p::ping_pong(x, &ball),
            (PropertyId::Stepping, Some(x)) => p::stepping_on_amalgam(x, &ball),
            (PropertyId::Partition, Some(x)) => p::partition(x, &ball),
            (PropertyId::Decomposition, Some(x)) => {
                p::decomposition(x, &ball, config.pairs, config.seed)
            }
            (PropertyId::Subgroup, Some(x)) => p::stepping_subgroup(x, config.radius, config.cap),
            (PropertyId::Convex, Some(x)) => p::convex(x, group, &ball, config.convex_limit),
        };
        out.push(report);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_names() {
        for id in PropertyId::ALL {
            assert_eq!(id.name().parse::<PropertyId>(), Ok(id));
        }
        assert!("nope".parse::<PropertyId>().is_err());
    }

    #[test]
    fn cyclic_group_passes_everything() {
        let z = Group::cyclic("x");
        let cfg = SuiteConfig {
            samples: 200,
            ..SuiteConfig::default()
        };
        let reports = run_suite(&z, &cfg, &PropertyId::ALL).unwrap();
        assert_eq!(reports.len(), PropertyId::ALL.len());
        assert!(reports.iter().all(|r| r.passed()), "{reports:?}");
        assert_eq!(reports[0].name, "total-order");
    }
}
