//! Isolated left-orderings on amalgamated free products `G ∗_A H`.
//!
//! Starting from infinite cyclic groups, [`Group::amalgam`] builds the
//! amalgam of two discretely ordered groups over a stepping subgroup and
//! equips it with an exact comparison. The result is again discrete with a
//! stepping structure, so towers can be iterated.
//!
//! ```
//! use amalgam_order::{load_tower, parse_word, OrderedGroup};
//!
//! let tower = load_tower(
//!     "group Zx = Z(x)\n\
//!      group Zy = Z(y)\n\
//!      subgroup A = cyclic(Zx: x^2, Zy: y^3)\n\
//!      group T = amalgam(Zx, Zy, A, variant=1)",
//! )
//! .unwrap();
//! let t = tower.group("T").unwrap();
//! let m = t.min_positive().unwrap();
//! assert_eq!(t.render(&m), "y^-2*x");
//! assert_eq!(parse_word("x^2*y^-3", t).unwrap(), t.identity());
//! ```

pub mod amalgam;
pub mod convex;
pub mod dsl;
pub mod element;
pub mod error;
pub mod group;
pub mod harness;
pub mod stepping;

pub use amalgam::{AmalgamGroup, FiltrationLevel, Mutation, Split, Variant};
pub use convex::{strongly_convex_check, ConvexLadder, Verdict};
pub use dsl::{load_tower, parse_tower, parse_word, Diagnostic, Tower};
pub use element::{Element, Side};
pub use error::{Assumption, Error, Result};
pub use group::{CyclicGroup, Group, OrderedGroup};
pub use harness::{enumerate_ball, run_suite, Ball, PropertyId, PropertyReport, SuiteConfig};
pub use stepping::{ExponentMap, SteppingSubgroup};
