//! Cayley-ball enumeration and the property suites.

pub mod ball;
pub mod properties;
pub mod report;
pub mod suite;

pub use ball::{enumerate_ball, Ball};
pub use report::PropertyReport;
pub use suite::{run_suite, PropertyId, SuiteConfig};
