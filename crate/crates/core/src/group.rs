//! Left-ordered groups: the shared interface, the infinite cyclic group, and
//! the [`Group`] handle used to build towers.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::amalgam::{AmalgamGroup, Mutation, Variant};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::stepping::SteppingSubgroup;

/// A group with a decidable left-invariant total order.
///
/// `compare` is fallible only because the amalgam engine reports broken
/// internal invariants instead of guessing; on well-formed inputs it always
/// returns a value.
pub trait OrderedGroup {
    fn identity(&self) -> Element;

    /// Named generators, in declaration order.
    fn generators(&self) -> Vec<(String, Element)>;

    /// Whether `x` is a well-formed element of this group in normal form.
    fn contains(&self, x: &Element) -> bool;

    fn mul(&self, x: &Element, y: &Element) -> Element;

    fn inv(&self, x: &Element) -> Element;

    fn compare(&self, x: &Element, y: &Element) -> Result<Ordering>;

    /// The successor of the identity, when the ordering is discrete.
    fn min_positive(&self) -> Option<Element>;

    /// A finite set whose signs pin the ordering down.
    fn char_set(&self) -> Option<&[Element]>;

    /// A finite set whose signs pin the ordering down among orderings with a
    /// fixed restriction to the amalgamated subgroup.
    fn relative_char_set(&self) -> Option<&[Element]>;

    /// Generator-power factors of `x`, e.g. `[("y", -2), ("x", 1)]`.
    fn render_factors(&self, x: &Element) -> Vec<(String, i64)>;

    fn render(&self, x: &Element) -> String {
        render_factor_list(&self.render_factors(x))
    }

    fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{x:?} is not an element of this group")))
        }
    }

    fn try_mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    fn try_inv(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(self.inv(x))
    }

    fn try_compare(&self, x: &Element, y: &Element) -> Result<Ordering> {
        self.check(x)?;
        self.check(y)?;
        self.compare(x, y)
    }

    fn pow(&self, x: &Element, n: i64) -> Element {
        let mut base = if n < 0 { self.inv(x) } else { x.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Sign of `x`: `Greater` for positive elements.
    fn sign(&self, x: &Element) -> Result<Ordering> {
        self.compare(x, &self.identity())
    }

    fn require_min_positive(&self) -> Result<Element> {
        self.min_positive()
            .ok_or_else(|| Error::NotDiscrete("no minimal positive element is known".into()))
    }

    /// The immediate successor `x·m` of `x`.
    fn successor(&self, x: &Element) -> Result<Element> {
        let m = self.require_min_positive()?;
        Ok(self.mul(x, &m))
    }

    fn predecessor(&self, x: &Element) -> Result<Element> {
        let m = self.require_min_positive()?;
        Ok(self.mul(x, &self.inv(&m)))
    }
}

pub(crate) fn render_factor_list(factors: &[(String, i64)]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|(name, k)| {
            if *k == 1 {
                name.clone()
            } else {
                format!("{name}^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// The infinite cyclic group on one named generator with its standard order.
#[derive(Clone, Debug)]
pub struct CyclicGroup {
    generator: String,
    char_set: [Element; 1],
}

impl CyclicGroup {
    pub fn new(generator: impl Into<String>) -> Self {
        CyclicGroup {
            generator: generator.into(),
            char_set: [Element::Cyclic(1)],
        }
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }
}

impl OrderedGroup for CyclicGroup {
    fn identity(&self) -> Element {
        Element::Cyclic(0)
    }

    fn generators(&self) -> Vec<(String, Element)> {
        vec![(self.generator.clone(), Element::Cyclic(1))]
    }

    fn contains(&self, x: &Element) -> bool {
        matches!(x, Element::Cyclic(_))
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        Element::Cyclic(exponent(x) + exponent(y))
    }

    fn inv(&self, x: &Element) -> Element {
        Element::Cyclic(-exponent(x))
    }

    fn compare(&self, x: &Element, y: &Element) -> Result<Ordering> {
        match (x, y) {
            (Element::Cyclic(a), Element::Cyclic(b)) => Ok(a.cmp(b)),
            _ => Err(Error::Domain("amalgam element passed to a cyclic group".into())),
        }
    }

    fn min_positive(&self) -> Option<Element> {
        Some(Element::Cyclic(1))
    }

    fn char_set(&self) -> Option<&[Element]> {
        Some(&self.char_set)
    }

    fn relative_char_set(&self) -> Option<&[Element]> {
        Some(&self.char_set)
    }

    fn render_factors(&self, x: &Element) -> Vec<(String, i64)> {
        match exponent(x) {
            0 => Vec::new(),
            k => vec![(self.generator.clone(), k)],
        }
    }

    fn pow(&self, x: &Element, n: i64) -> Element {
        Element::Cyclic(exponent(x) * n)
    }
}

fn exponent(x: &Element) -> i64 {
    debug_assert!(x.as_cyclic().is_some(), "cyclic group given {x:?}");
    x.as_cyclic().unwrap_or(0)
}

#[derive(Debug)]
pub enum GroupKind {
    Cyclic(CyclicGroup),
    Amalgam(AmalgamGroup),
}

/// Shared handle to a group in a tower. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct Group(Arc<GroupKind>);

impl Group {
    pub fn cyclic(generator: impl Into<String>) -> Group {
        Group(Arc::new(GroupKind::Cyclic(CyclicGroup::new(generator))))
    }

    pub fn amalgam(
        left: &Group,
        right: &Group,
        stepping: SteppingSubgroup,
        variant: Variant,
    ) -> Result<Group> {
        let x = AmalgamGroup::build(left, right, stepping, variant)?;
        Ok(Group(Arc::new(GroupKind::Amalgam(x))))
    }

    /// Builds an amalgam whose comparison is deliberately corrupted, for
    /// checking that the property suites can fail.
    pub fn amalgam_with_mutation(
        left: &Group,
        right: &Group,
        stepping: SteppingSubgroup,
        variant: Variant,
        mutation: Mutation,
    ) -> Result<Group> {
        let x = AmalgamGroup::build_with_mutation(left, right, stepping, variant, Some(mutation))?;
        Ok(Group(Arc::new(GroupKind::Amalgam(x))))
    }

    pub fn kind(&self) -> &GroupKind {
        &self.0
    }

    pub fn as_amalgam(&self) -> Option<&AmalgamGroup> {
        match &*self.0 {
            GroupKind::Amalgam(x) => Some(x),
            GroupKind::Cyclic(_) => None,
        }
    }

    pub fn as_cyclic(&self) -> Option<&CyclicGroup> {
        match &*self.0 {
            GroupKind::Cyclic(z) => Some(z),
            GroupKind::Amalgam(_) => None,
        }
    }

    pub fn require_amalgam(&self) -> Result<&AmalgamGroup> {
        self.as_amalgam()
            .ok_or_else(|| Error::Precondition("operation needs an amalgam group".into()))
    }

    /// Identity of the underlying group object.
    pub fn same_as(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    fn inner(&self) -> &dyn OrderedGroup {
        match &*self.0 {
            GroupKind::Cyclic(z) => z,
            GroupKind::Amalgam(x) => x,
        }
    }
}

impl OrderedGroup for Group {
    fn identity(&self) -> Element {
        self.inner().identity()
    }

    fn generators(&self) -> Vec<(String, Element)> {
        self.inner().generators()
    }

    fn contains(&self, x: &Element) -> bool {
        self.inner().contains(x)
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        self.inner().mul(x, y)
    }

    fn inv(&self, x: &Element) -> Element {
        self.inner().inv(x)
    }

    fn compare(&self, x: &Element, y: &Element) -> Result<Ordering> {
        self.inner().compare(x, y)
    }

    fn min_positive(&self) -> Option<Element> {
        self.inner().min_positive()
    }

    fn char_set(&self) -> Option<&[Element]> {
        self.inner().char_set()
    }

    fn relative_char_set(&self) -> Option<&[Element]> {
        self.inner().relative_char_set()
    }

    fn render_factors(&self, x: &Element) -> Vec<(String, i64)> {
        self.inner().render_factors(x)
    }

    fn pow(&self, x: &Element, n: i64) -> Element {
        self.inner().pow(x, n)
    }
}
