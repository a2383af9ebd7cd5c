use thiserror::Error;

/// The hypothesis of the construction that a validation step found violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Assumption {
    /// Both ambient orders restrict to the same order on the amalgamated subgroup.
    SameRestriction,
    /// The amalgamated subgroup is a stepping in both ambient orders.
    Stepping,
    /// The recorded minimal positive subgroup element is inconsistent.
    MinimalSubgroupElement,
    /// The subgroup is the whole ambient group.
    ProperSubgroup,
}

impl std::fmt::Display for Assumption {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Assumption::SameRestriction => "(a) equal restriction to the subgroup",
            Assumption::Stepping => "(b) stepping subgroup",
            Assumption::MinimalSubgroupElement => "minimal positive subgroup element",
            Assumption::ProperSubgroup => "proper subgroup",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("ordering is not discrete: {0}")]
    NotDiscrete(String),
    #[error("assumption {assumption} violated: {detail}")]
    Assumption {
        assumption: Assumption,
        detail: String,
    },
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("engine invariant violated: {0}")]
    Engine(String),
    #[error("missing characteristic set: {0}")]
    MissingCharSet(String),
    #[error("ball exceeds the cap of {cap} elements at radius {radius}")]
    BallOverflow { cap: usize, radius: usize },
}

impl Error {
    pub(crate) fn assumption(assumption: Assumption, detail: impl Into<String>) -> Self {
        Error::Assumption {
            assumption,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
