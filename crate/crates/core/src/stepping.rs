//! Stepping subgroups: subgroups `A` for which every element has a greatest
//! `A`-element below it and a least one strictly above it. Both constructors
//! supply the floor in closed form; nothing here searches for a maximum.

use std::cmp::Ordering;

use crate::amalgam::AmalgamGroup;
use crate::element::{Element, Side};
use crate::error::{Error, Result};
use crate::group::{Group, GroupKind, OrderedGroup};
use crate::harness::ball::enumerate_ball;

/// Radius of the balls used for construction-time sample checks.
const SAMPLE_RADIUS: usize = 2;
const SAMPLE_CAP: usize = 4096;

/// A homomorphism to the integers, given by its values on generators.
///
/// On an amalgam it is the map that restricts to the two factor maps; it is
/// evaluated syllable by syllable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExponentMap {
    Cyclic(i64),
    Amalgam {
        left: Box<ExponentMap>,
        right: Box<ExponentMap>,
    },
}

impl ExponentMap {
    pub fn eval(&self, x: &Element) -> i64 {
        match (self, x) {
            (ExponentMap::Cyclic(v), Element::Cyclic(k)) => v * k,
            (ExponentMap::Amalgam { left, right }, Element::Amalgam(w)) => {
                let mut total = left.eval(&w.head);
                for s in &w.syllables {
                    total += match s.side {
                        Side::Left => left.eval(&s.value),
                        Side::Right => right.eval(&s.value),
                    };
                }
                total
            }
            _ => {
                debug_assert!(false, "exponent map shape does not match {x:?}");
                0
            }
        }
    }

    /// Whether the map has the same tree shape as `group`.
    pub fn fits(&self, group: &Group) -> bool {
        match (self, group.kind()) {
            (ExponentMap::Cyclic(_), GroupKind::Cyclic(_)) => true,
            (ExponentMap::Amalgam { left, right }, GroupKind::Amalgam(x)) => {
                left.fits(x.factor(Side::Left)) && right.fits(x.factor(Side::Right))
            }
            _ => false,
        }
    }

    /// The homomorphism on `x` restricting to `left` and `right` on the
    /// factors. Rejected when the two disagree on sampled subgroup elements.
    pub fn pushforward(
        left: ExponentMap,
        right: ExponentMap,
        x: &AmalgamGroup,
    ) -> Result<ExponentMap> {
        if !left.fits(x.factor(Side::Left)) || !right.fits(x.factor(Side::Right)) {
            return Err(Error::Construction(
                "exponent map does not match the factor groups".into(),
            ));
        }
        let stepping = x.stepping();
        for a in x.subgroup_samples()? {
            let via_left = left.eval(&a);
            let via_right = right.eval(&stepping.translate(Side::Left, &a));
            if via_left != via_right {
                return Err(Error::Construction(format!(
                    "exponent maps disagree on the amalgamated subgroup: {} on the left, {} on the right for {}",
                    via_left,
                    via_right,
                    x.factor(Side::Left).render(&a)
                )));
            }
        }
        Ok(ExponentMap::Amalgam {
            left: Box::new(left),
            right: Box::new(right),
        })
    }

    /// Builds the map on `group` from `name = value` generator assignments.
    /// Every generator must be assigned exactly once.
    pub fn from_assignments(group: &Group, assignments: &[(String, i64)]) -> Result<ExponentMap> {
        let known: Vec<String> = group.generators().into_iter().map(|(n, _)| n).collect();
        for (i, (name, _)) in assignments.iter().enumerate() {
            if !known.contains(name) {
                return Err(Error::Construction(format!("unknown generator `{name}`")));
            }
            if assignments[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::Construction(format!("generator `{name}` assigned twice")));
            }
        }
        let lookup = |name: &str| {
            assignments
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| *v)
        };
        build_map(group, &lookup)
    }

    /// Checks `e(uv) = e(u) + e(v)` on all pairs from a small ball of `group`.
    pub fn check_homomorphism(&self, group: &Group) -> Result<()> {
        if !self.fits(group) {
            return Err(Error::Construction(
                "exponent map does not match the group".into(),
            ));
        }
        let ball = enumerate_ball(group, SAMPLE_RADIUS, SAMPLE_CAP)?;
        for u in &ball.elements {
            for v in &ball.elements {
                let uv = group.mul(u, v);
                if self.eval(&uv) != self.eval(u) + self.eval(v) {
                    return Err(Error::Construction(format!(
                        "exponent map is not a homomorphism: e({}) != e({}) + e({})",
                        group.render(&uv),
                        group.render(u),
                        group.render(v)
                    )));
                }
            }
        }
        Ok(())
    }
}

fn build_map(group: &Group, lookup: &dyn Fn(&str) -> Option<i64>) -> Result<ExponentMap> {
    match group.kind() {
        GroupKind::Cyclic(z) => lookup(z.generator_name())
            .map(ExponentMap::Cyclic)
            .ok_or_else(|| {
                Error::Construction(format!("generator `{}` has no value", z.generator_name()))
            }),
        GroupKind::Amalgam(x) => {
            let left = build_map(x.factor(Side::Left), &|n| lookup(&x.qualify(Side::Left, n)))?;
            let right = build_map(x.factor(Side::Right), &|n| lookup(&x.qualify(Side::Right, n)))?;
            ExponentMap::pushforward(left, right, x)
        }
    }
}

#[derive(Clone, Debug)]
enum SteppingKind {
    /// `A = ⟨x^left⟩ = ⟨y^right⟩` with `x^(left·k) ↔ y^(right·k)`.
    Cyclic { left: i64, right: i64 },
    /// Kernel of `x ↦ sign·e(x) mod modulus` inside a single group, both sides.
    ModKernel {
        map: ExponentMap,
        sign: i64,
        modulus: i64,
        step: Element,
        a_min: Element,
    },
}

/// A subgroup `A` embedded in two ambient groups, with floor maps in both and
/// the translation between its two representations.
#[derive(Clone, Debug)]
pub struct SteppingSubgroup {
    left: Group,
    right: Group,
    kind: SteppingKind,
}

impl SteppingSubgroup {
    /// `A ≅ ℤ` embedded as `x ↦ x^p` on the left and `y ↦ y^q` on the right.
    ///
    /// Negative exponents are accepted here; an orientation mismatch is caught
    /// when the amalgam is built.
    pub fn cyclic(left: &Group, p: i64, right: &Group, q: i64) -> Result<SteppingSubgroup> {
        if left.as_cyclic().is_none() || right.as_cyclic().is_none() {
            return Err(Error::Construction(
                "cyclic stepping needs infinite cyclic ambient groups".into(),
            ));
        }
        if p.abs() < 2 || q.abs() < 2 {
            return Err(Error::Construction(format!(
                "degenerate cyclic stepping with exponents {p} and {q}: both need |exponent| >= 2"
            )));
        }
        Ok(SteppingSubgroup {
            left: left.clone(),
            right: right.clone(),
            kind: SteppingKind::Cyclic { left: p, right: q },
        })
    }

    /// The kernel of `x ↦ ê(x) mod p` in a discrete group `group`, used on both
    /// sides. `ê` is `e` with its sign flipped if needed so `ê(m) = 1` on the
    /// minimal positive element `m`.
    pub fn modkernel(group: &Group, map: ExponentMap, p: i64) -> Result<SteppingSubgroup> {
        if p < 2 {
            return Err(Error::Construction(format!("modulus p = {p} must be at least 2")));
        }
        if !map.fits(group) {
            return Err(Error::Construction(
                "exponent map does not match the group".into(),
            ));
        }
        let m = group.require_min_positive()?;
        let em = map.eval(&m);
        if em.abs() != 1 {
            return Err(Error::Construction(format!(
                "exponent map takes the value {em} on the minimal positive element {}; it must be ±1",
                group.render(&m)
            )));
        }
        if em == -1 {
            log::info!(
                "exponent map negated so that it is 1 on the minimal positive element {}",
                group.render(&m)
            );
        }
        map.check_homomorphism(group)?;
        let a_min = group.pow(&m, p);
        Ok(SteppingSubgroup {
            left: group.clone(),
            right: group.clone(),
            kind: SteppingKind::ModKernel {
                map,
                sign: em,
                modulus: p,
                step: m,
                a_min,
            },
        })
    }

    pub fn group(&self, side: Side) -> &Group {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// The sign-normalized exponent, for mod-kernel steppings.
    pub fn normalized_exponent(&self, x: &Element) -> Option<i64> {
        match &self.kind {
            SteppingKind::ModKernel { map, sign, .. } => Some(sign * map.eval(x)),
            SteppingKind::Cyclic { .. } => None,
        }
    }

    pub fn is_member(&self, side: Side, x: &Element) -> bool {
        match &self.kind {
            SteppingKind::Cyclic { left, right } => {
                let d = match side {
                    Side::Left => *left,
                    Side::Right => *right,
                };
                x.as_cyclic().is_some_and(|n| n % d == 0)
            }
            SteppingKind::ModKernel {
                map, sign, modulus, ..
            } => (sign * map.eval(x)).rem_euclid(*modulus) == 0,
        }
    }

    /// The greatest member `≤ x` in the ambient order of `side`.
    pub fn floor(&self, side: Side, x: &Element) -> Element {
        match &self.kind {
            SteppingKind::Cyclic { left, right } => {
                let d = match side {
                    Side::Left => left.abs(),
                    Side::Right => right.abs(),
                };
                let n = x.as_cyclic().unwrap_or(0);
                Element::Cyclic(d * n.div_euclid(d))
            }
            SteppingKind::ModKernel {
                map,
                sign,
                modulus,
                step,
                ..
            } => {
                let r = (sign * map.eval(x)).rem_euclid(*modulus);
                if r == 0 {
                    x.clone()
                } else {
                    let g = self.group(side);
                    g.mul(x, &g.pow(step, -r))
                }
            }
        }
    }

    /// The least member strictly above `x`: `floor(x)·a_min`.
    pub fn ceil(&self, side: Side, x: &Element) -> Element {
        let g = self.group(side);
        g.mul(&self.floor(side, x), &self.a_min(side))
    }

    /// The minimal positive member, in the representation of `side`.
    pub fn a_min(&self, side: Side) -> Element {
        match &self.kind {
            SteppingKind::Cyclic { left, right } => Element::Cyclic(match side {
                Side::Left => left.abs(),
                Side::Right => right.abs(),
            }),
            SteppingKind::ModKernel { a_min, .. } => a_min.clone(),
        }
    }

    /// Moves a member from the representation of `from` to the other side.
    pub fn translate(&self, from: Side, a: &Element) -> Element {
        match &self.kind {
            SteppingKind::Cyclic { left, right } => {
                let n = a.as_cyclic().unwrap_or(0);
                let (src, dst) = match from {
                    Side::Left => (*left, *right),
                    Side::Right => (*right, *left),
                };
                debug_assert!(n % src == 0, "translating a non-member");
                Element::Cyclic(n / src * dst)
            }
            SteppingKind::ModKernel { .. } => a.clone(),
        }
    }

    /// Floor-contract check on one element: membership, `floor ≤ x`, and
    /// `x < floor·a_min`. Returns a description of the first failure.
    pub fn check_floor_at(&self, side: Side, x: &Element) -> Result<Option<String>> {
        let g = self.group(side);
        let f = self.floor(side, x);
        if !self.is_member(side, &f) {
            return Ok(Some(format!("floor {} is not a member", g.render(&f))));
        }
        if g.compare(&f, x)? == Ordering::Greater {
            return Ok(Some(format!("floor {} exceeds {}", g.render(&f), g.render(x))));
        }
        let c = self.ceil(side, x);
        if g.compare(x, &c)? != Ordering::Less {
            return Ok(Some(format!(
                "{} is not below floor·a_min = {}",
                g.render(x),
                g.render(&c)
            )));
        }
        Ok(None)
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            SteppingKind::Cyclic { left, right } => format!("cyclic(p={left}, q={right})"),
            SteppingKind::ModKernel { modulus, sign, .. } => {
                format!("modkernel(p={modulus}, sign={sign})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::Variant;

    fn zx() -> Group {
        Group::cyclic("x")
    }

    fn zy() -> Group {
        Group::cyclic("y")
    }

    #[test]
    fn cyclic_floor_is_floored_division() {
        let a = SteppingSubgroup::cyclic(&zx(), 2, &zy(), 3).unwrap();
        assert_eq!(a.floor(Side::Left, &Element::Cyclic(3)), Element::Cyclic(2));
        assert_eq!(a.floor(Side::Left, &Element::Cyclic(-1)), Element::Cyclic(-2));
        assert_eq!(a.floor(Side::Right, &Element::Cyclic(4)), Element::Cyclic(3));
        assert_eq!(a.ceil(Side::Right, &Element::Cyclic(4)), Element::Cyclic(6));
        assert_eq!(a.translate(Side::Left, &Element::Cyclic(4)), Element::Cyclic(6));
        assert_eq!(a.translate(Side::Right, &Element::Cyclic(-3)), Element::Cyclic(-2));
    }

    #[test]
    fn cyclic_floor_contract_on_a_range() {
        let a = SteppingSubgroup::cyclic(&zx(), 2, &zy(), 3).unwrap();
        for n in -20..=20 {
            for side in [Side::Left, Side::Right] {
                assert_eq!(a.check_floor_at(side, &Element::Cyclic(n)), Ok(None));
            }
        }
    }

    #[test]
    fn degenerate_cyclic_stepping_is_rejected() {
        assert!(SteppingSubgroup::cyclic(&zx(), 1, &zy(), 3).is_err());
        assert!(SteppingSubgroup::cyclic(&zx(), 2, &zy(), 0).is_err());
    }

    fn trefoil() -> Group {
        let (x, y) = (zx(), zy());
        let a = SteppingSubgroup::cyclic(&x, 2, &y, 3).unwrap();
        Group::amalgam(&x, &y, a, Variant::One).unwrap()
    }

    #[test]
    fn pushforward_evaluates_by_syllables() {
        let t = trefoil();
        let e = ExponentMap::from_assignments(&t, &[("x".into(), 3), ("y".into(), 2)]).unwrap();
        let tx = t.as_amalgam().unwrap();
        let x = tx.embed(Side::Left, &Element::Cyclic(1));
        let y = tx.embed(Side::Right, &Element::Cyclic(1));
        assert_eq!(e.eval(&t.pow(&x, 2)), 6);
        assert_eq!(e.eval(&t.pow(&y, 3)), 6);
        let xyx = t.mul(&t.mul(&x, &y), &x);
        assert_eq!(e.eval(&xyx), 8);
    }

    #[test]
    fn incompatible_pushforward_is_rejected() {
        let t = trefoil();
        let err = ExponentMap::from_assignments(&t, &[("x".into(), 1), ("y".into(), 1)]);
        assert!(matches!(err, Err(Error::Construction(_))));
    }

    #[test]
    fn assignments_must_cover_every_generator_once() {
        let t = trefoil();
        assert!(ExponentMap::from_assignments(&t, &[("x".into(), 3)]).is_err());
        assert!(ExponentMap::from_assignments(
            &t,
            &[("x".into(), 3), ("y".into(), 2), ("x".into(), 3)]
        )
        .is_err());
        assert!(ExponentMap::from_assignments(
            &t,
            &[("x".into(), 3), ("y".into(), 2), ("z".into(), 1)]
        )
        .is_err());
    }

    #[test]
    fn modkernel_normalizes_sign_and_floors() {
        let t = trefoil();
        let tx = t.as_amalgam().unwrap();
        let e = ExponentMap::from_assignments(&t, &[("x".into(), 3), ("y".into(), 2)]).unwrap();
        let a2 = SteppingSubgroup::modkernel(&t, e, 2).unwrap();
        let x = tx.embed(Side::Left, &Element::Cyclic(1));
        let y = tx.embed(Side::Right, &Element::Cyclic(1));
        let m = t.min_positive().unwrap();
        assert_eq!(a2.normalized_exponent(&m), Some(1));
        // floor(x) = x·m⁻¹ = y²
        assert_eq!(a2.floor(Side::Left, &x), t.pow(&y, 2));
        assert_eq!(t.successor(&t.pow(&y, 2)).unwrap(), x);
        assert_eq!(a2.floor(Side::Left, &y), y);
        assert_eq!(a2.floor(Side::Left, &m), t.identity());
        assert_eq!(a2.a_min(Side::Left), t.pow(&m, 2));
        assert!(a2.is_member(Side::Right, &t.pow(&y, 2)));
        assert!(!a2.is_member(Side::Right, &x));
    }

    #[test]
    fn modkernel_rejects_non_unit_value_on_min_positive() {
        let t = trefoil();
        // e(x)=3, e(y)=2 doubled: e(m) = -2
        let e = ExponentMap::from_assignments(&t, &[("x".into(), 6), ("y".into(), 4)]).unwrap();
        assert!(matches!(
            SteppingSubgroup::modkernel(&t, e, 2),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn modkernel_rejects_small_modulus() {
        let t = trefoil();
        let e = ExponentMap::from_assignments(&t, &[("x".into(), 3), ("y".into(), 2)]).unwrap();
        assert!(SteppingSubgroup::modkernel(&t, e, 1).is_err());
    }

    #[test]
    fn modkernel_floor_contract_on_ball() {
        let t = trefoil();
        let e = ExponentMap::from_assignments(&t, &[("x".into(), 3), ("y".into(), 2)]).unwrap();
        for p in 2..=4 {
            let a = SteppingSubgroup::modkernel(&t, e.clone(), p).unwrap();
            let ball = enumerate_ball(&t, 3, 10_000).unwrap();
            for z in &ball.elements {
                assert_eq!(a.check_floor_at(Side::Left, z), Ok(None), "p={p}");
            }
        }
    }
}
