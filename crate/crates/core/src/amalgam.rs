//! The amalgamated free product `X = G ∗_A H` and its isolated ordering.
//!
//! Elements live in a normal form built from the floor maps of the stepping
//! subgroup (see [`Word`]). The comparison follows the filtration
//! `A ⊂ H ⊂ G∪H ⊂ GH ⊂ HGH ⊂ ⋯`: elements of `G∪H` are compared with the
//! gap-block rule, elements of `GH` by their `g·a(h)` anchor, and anything
//! higher by recursing through the `c`-map, which sends an element to the
//! greatest element of the previous filtration layer below it.
//!
//! "G-role" and "H-role" below refer to the ordering roles. In variant 1 the
//! left factor plays the G-role; variant 2 swaps the roles and nothing else.

use std::cmp::Ordering;
use std::fmt;

use crate::element::{Element, Side, Syllable, Word};
use crate::error::{Assumption, Error, Result};
use crate::group::{Group, OrderedGroup};
use crate::harness::ball::enumerate_ball;
use crate::stepping::SteppingSubgroup;

/// Radius of the factor balls scanned when validating a construction.
const VALIDATION_RADIUS: usize = 3;
const VALIDATION_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    One,
    Two,
}

impl Variant {
    pub fn from_index(v: i64) -> Option<Variant> {
        match v {
            1 => Some(Variant::One),
            2 => Some(Variant::Two),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Variant::One => 1,
            Variant::Two => 2,
        }
    }
}

/// Deliberate faults for checking that the property suites have teeth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Reverse the result of the `GH`-layer tie-break `h` vs `(g⁻¹g′)h′`.
    InvertLevelOneTieBreak,
    /// Put the G-block before the H-block inside each subgroup gap.
    InvertBaseGapOrder,
}

/// Position in the filtration, stored doubled so the half steps are exact:
/// `-1 ↔ A`, `0 ↔ H`, `1 ↔ G∪H`, `2 ↔ GH`, `4 ↔ HGH`, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiltrationLevel(i64);

impl FiltrationLevel {
    pub fn from_twice(twice: i64) -> Self {
        FiltrationLevel(twice)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    /// Least integer `n ≥ 0` with the element in `F_n`.
    pub fn integer_index(self) -> i64 {
        ((self.0 + 1).div_euclid(2)).max(0)
    }

    /// Membership in `F_j` for the doubled index `twice_j`. `F_{-1}` is empty.
    pub fn within(self, twice_j: i64) -> bool {
        twice_j > -2 && self.0 <= twice_j
    }
}

impl fmt::Display for FiltrationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else if self.0 < 0 {
            write!(f, "-{}.5", (-self.0) / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

/// An element written as `top · rest` with `top` in a single factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub side: Side,
    /// Factor element on `side`.
    pub top: Element,
    /// Amalgam element.
    pub rest: Element,
}

/// Normal-form arithmetic; independent of the ordering.
#[derive(Debug)]
struct Parts {
    left: Group,
    right: Group,
    stepping: SteppingSubgroup,
}

impl Parts {
    fn factor(&self, side: Side) -> &Group {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// Moves a subgroup element between representations.
    fn shift(&self, from: Side, a: &Element, to: Side) -> Element {
        if from == to {
            a.clone()
        } else {
            self.stepping.translate(from, a)
        }
    }

    fn identity(&self) -> Element {
        Element::word(self.left.identity(), Vec::new())
    }

    /// Prepends raw syllables (in order) to an already normal word.
    fn normalize_onto<I>(&self, prefix: I, suffix: &Word) -> Element
    where
        I: DoubleEndedIterator<Item = (Side, Element)>,
    {
        let mut head = suffix.head.clone();
        // reversed tail: the last entry is the front syllable
        let mut rev: Vec<Syllable> = suffix.syllables.iter().rev().cloned().collect();
        for (side, s) in prefix.rev() {
            let g = self.factor(side);
            let mut v = g.mul(&s, &self.shift(Side::Left, &head, side));
            if let Some(front) = rev.pop_if(|front| front.side == side) {
                v = g.mul(&v, &front.value);
            }
            let f = self.stepping.floor(side, &v);
            let rep = g.mul(&g.inv(&f), &v);
            if rep != g.identity() {
                rev.push(Syllable { side, value: rep });
            }
            head = self.shift(side, &f, Side::Left);
        }
        rev.reverse();
        Element::word(head, rev)
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        let (wx, wy) = (word(x), word(y));
        if wx.syllables.is_empty() && wx.head == self.left.identity() {
            return y.clone();
        }
        let prefix = std::iter::once((Side::Left, wx.head.clone()))
            .chain(wx.syllables.iter().map(|s| (s.side, s.value.clone())));
        let prefix: Vec<_> = prefix.collect();
        self.normalize_onto(prefix.into_iter(), wy)
    }

    fn inv(&self, x: &Element) -> Element {
        let wx = word(x);
        let mut prefix: Vec<(Side, Element)> = wx
            .syllables
            .iter()
            .rev()
            .map(|s| (s.side, self.factor(s.side).inv(&s.value)))
            .collect();
        prefix.push((Side::Left, self.left.inv(&wx.head)));
        let id = self.identity();
        self.normalize_onto(prefix.into_iter(), word(&id))
    }

    fn embed(&self, side: Side, s: &Element) -> Element {
        let id = self.identity();
        self.normalize_onto(std::iter::once((side, s.clone())), word(&id))
    }
}

fn word(x: &Element) -> &Word {
    match x {
        Element::Amalgam(w) => w,
        Element::Cyclic(_) => {
            debug_assert!(false, "cyclic element given to an amalgam");
            static EMPTY: std::sync::OnceLock<Word> = std::sync::OnceLock::new();
            EMPTY.get_or_init(|| Word {
                head: Element::Cyclic(0),
                syllables: Vec::new(),
            })
        }
    }
}

#[derive(Debug)]
struct Constants {
    a_min: Element,
    g_min: Element,
    h_min: Element,
    g_m: Element,
    h_m: Element,
    /// `h_M` as an H-role factor element.
    h_m_factor: Element,
    min_positive: Element,
}

/// `G ∗_A H` with one of its two isolated orderings.
#[derive(Debug)]
pub struct AmalgamGroup {
    parts: Parts,
    variant: Variant,
    g_side: Side,
    prefixed: bool,
    mutation: Option<Mutation>,
    consts: Constants,
    char_set: Option<Vec<Element>>,
}

impl AmalgamGroup {
    pub fn build(
        left: &Group,
        right: &Group,
        stepping: SteppingSubgroup,
        variant: Variant,
    ) -> Result<AmalgamGroup> {
        Self::build_with_mutation(left, right, stepping, variant, None)
    }

    pub fn build_with_mutation(
        left: &Group,
        right: &Group,
        stepping: SteppingSubgroup,
        variant: Variant,
        mutation: Option<Mutation>,
    ) -> Result<AmalgamGroup> {
        let parts = Parts {
            left: left.clone(),
            right: right.clone(),
            stepping,
        };
        validate(&parts)?;

        let g_side = match variant {
            Variant::One => Side::Left,
            Variant::Two => Side::Right,
        };
        let h_side = g_side.other();
        let (gg, hh) = (parts.factor(g_side), parts.factor(h_side));
        let g_min_f = gg.require_min_positive()?;
        let h_min_f = hh.require_min_positive()?;
        let a_min_g = parts.stepping.a_min(g_side);
        let a_min_h = parts.stepping.a_min(h_side);
        let g_m_f = gg.mul(&a_min_g, &gg.inv(&g_min_f));
        let h_m_f = hh.mul(&a_min_h, &hh.inv(&h_min_f));

        let a_min = parts.embed(g_side, &a_min_g);
        let g_min = parts.embed(g_side, &g_min_f);
        let h_min = parts.embed(h_side, &h_min_f);
        let g_m = parts.embed(g_side, &g_m_f);
        let h_m = parts.embed(h_side, &h_m_f);
        let min_positive = parts.mul(&parts.mul(&h_min, &parts.inv(&a_min)), &g_min);

        let char_set = match (gg.char_set(), hh.relative_char_set()) {
            (Some(gs), Some(hs)) => {
                let mut by_side: [Vec<Element>; 2] = [Vec::new(), Vec::new()];
                by_side[side_index(g_side)] = gs.iter().map(|e| parts.embed(g_side, e)).collect();
                by_side[side_index(h_side)] = hs.iter().map(|e| parts.embed(h_side, e)).collect();
                let [mut all, rights] = by_side;
                all.extend(rights);
                all.push(min_positive.clone());
                Some(all)
            }
            _ => None,
        };

        let prefixed = {
            let l: Vec<String> = left.generators().into_iter().map(|(n, _)| n).collect();
            right.generators().iter().any(|(n, _)| l.contains(n))
        };

        Ok(AmalgamGroup {
            parts,
            variant,
            g_side,
            prefixed,
            mutation,
            consts: Constants {
                a_min,
                g_min,
                h_min,
                g_m,
                h_m,
                h_m_factor: h_m_f,
                min_positive,
            },
            char_set,
        })
    }

    pub fn factor(&self, side: Side) -> &Group {
        self.parts.factor(side)
    }

    pub fn stepping(&self) -> &SteppingSubgroup {
        &self.parts.stepping
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    /// The factor playing the G-role of the ordering.
    pub fn g_side(&self) -> Side {
        self.g_side
    }

    pub fn h_side(&self) -> Side {
        self.g_side.other()
    }

    pub fn a_min(&self) -> &Element {
        &self.consts.a_min
    }

    pub fn g_min(&self) -> &Element {
        &self.consts.g_min
    }

    pub fn h_min(&self) -> &Element {
        &self.consts.h_min
    }

    /// `a_min·g_min⁻¹`, the predecessor of `a_min` in the G-role factor.
    pub fn g_m(&self) -> &Element {
        &self.consts.g_m
    }

    /// `a_min·h_min⁻¹`, the predecessor of `a_min` in the H-role factor.
    pub fn h_m(&self) -> &Element {
        &self.consts.h_m
    }

    /// Whether generator names carry `L.`/`R.` prefixes.
    pub fn is_prefixed(&self) -> bool {
        self.prefixed
    }

    /// The name under which a factor generator is exposed in this group.
    pub fn qualify(&self, side: Side, name: &str) -> String {
        if self.prefixed {
            format!("{}.{}", side.prefix(), name)
        } else {
            name.to_string()
        }
    }

    /// The factor element `s` as an element of the amalgam.
    pub fn embed(&self, side: Side, s: &Element) -> Element {
        self.parts.embed(side, s)
    }

    /// Normal form of a raw product of factor elements.
    pub fn reduce<I>(&self, raw: I) -> Element
    where
        I: IntoIterator<Item = (Side, Element)>,
    {
        let raw: Vec<_> = raw.into_iter().collect();
        let id = self.parts.identity();
        self.parts.normalize_onto(raw.into_iter(), word(&id))
    }

    /// Whether `x` lies in the amalgamated subgroup.
    pub fn in_subgroup(&self, x: &Element) -> bool {
        word(x).syllables.is_empty()
    }

    /// For `x ∈ G ∪ H`: its factor and value. `None` for the factor means
    /// `x ∈ A`, returned in its left representation.
    pub fn factor_view(&self, x: &Element) -> Option<(Option<Side>, Element)> {
        let w = word(x);
        match w.syllables.as_slice() {
            [] => Some((None, w.head.clone())),
            [s] => {
                let g = self.factor(s.side);
                let head = self.parts.shift(Side::Left, &w.head, s.side);
                Some((Some(s.side), g.mul(&head, &s.value)))
            }
            _ => None,
        }
    }

    pub fn level(&self, x: &Element) -> FiltrationLevel {
        let w = word(x);
        let k = w.syllables.len() as i64;
        let twice = match w.syllables.last() {
            None => -1,
            Some(s) if k == 1 => {
                if s.side == self.g_side {
                    1
                } else {
                    0
                }
            }
            Some(s) => {
                let padded = if s.side == self.g_side { k + 1 } else { k };
                2 * (padded - 1)
            }
        };
        FiltrationLevel(twice)
    }

    fn twice(&self, x: &Element) -> i64 {
        self.level(x).twice()
    }

    /// First syllable (with the subgroup head folded in) and the remainder.
    pub fn split_top(&self, x: &Element) -> Option<Split> {
        let w = word(x);
        let first = w.syllables.first()?;
        let g = self.factor(first.side);
        let top = g.mul(&self.parts.shift(Side::Left, &w.head, first.side), &first.value);
        let rest = Element::word(self.parts.left.identity(), w.syllables[1..].to_vec());
        Some(Split {
            side: first.side,
            top,
            rest,
        })
    }

    /// `x = g·h` with `g` in the G-role factor and `h` in the H-role factor,
    /// for `x ∈ GH`.
    fn split_gh(&self, x: &Element) -> Result<(Element, Element)> {
        let (gs, hs) = (self.g_side, self.h_side());
        let (gg, hh) = (self.factor(gs), self.factor(hs));
        let w = word(x);
        match w.syllables.as_slice() {
            [] => Ok((gg.identity(), self.parts.shift(Side::Left, &w.head, hs))),
            [s] if s.side == hs => Ok((
                gg.identity(),
                hh.mul(&self.parts.shift(Side::Left, &w.head, hs), &s.value),
            )),
            [s] => Ok((
                gg.mul(&self.parts.shift(Side::Left, &w.head, gs), &s.value),
                hh.identity(),
            )),
            [s, t] if s.side == gs => Ok((
                gg.mul(&self.parts.shift(Side::Left, &w.head, gs), &s.value),
                t.value.clone(),
            )),
            _ => Err(Error::Engine(format!(
                "{} is not in the GH layer",
                self.render(x)
            ))),
        }
    }

    /// Floor in the G-role or H-role factor, for `x ∈ G ∪ H` (the base map).
    fn base_floor(&self, x: &Element) -> Result<Element> {
        match self.factor_view(x) {
            Some((None, _)) => Ok(x.clone()),
            Some((Some(side), e)) => {
                let f = self.stepping().floor(side, &e);
                Ok(self.embed(side, &f))
            }
            None => Err(Error::Precondition(format!(
                "base floor needs an element of G ∪ H, got {}",
                self.render(x)
            ))),
        }
    }

    /// The order on `G ∪ H`: each factor keeps its own order, and inside the
    /// gap above every subgroup element `a` the H-elements with floor `a`
    /// come before the G-elements with floor `a`.
    pub fn base_compare(&self, u: &Element, v: &Element) -> Result<Ordering> {
        let (Some((su, eu)), Some((sv, ev))) = (self.factor_view(u), self.factor_view(v)) else {
            return Err(Error::Precondition(format!(
                "base comparison needs elements of G ∪ H, got {} and {}",
                self.render(u),
                self.render(v)
            )));
        };
        let st = self.stepping();
        match (su, sv) {
            (None, None) => self.parts.left.compare(&eu, &ev),
            (None, Some(s)) => self
                .factor(s)
                .compare(&self.parts.shift(Side::Left, &eu, s), &ev),
            (Some(s), None) => self
                .factor(s)
                .compare(&eu, &self.parts.shift(Side::Left, &ev, s)),
            (Some(a), Some(b)) if a == b => self.factor(a).compare(&eu, &ev),
            (Some(a), Some(b)) => {
                let fu = self.parts.shift(a, &st.floor(a, &eu), Side::Left);
                let fv = self.parts.shift(b, &st.floor(b, &ev), Side::Left);
                let floors = self.parts.left.compare(&fu, &fv)?;
                // orient as (H-role element, G-role element)
                let (h_vs_g, u_is_h) = if a == self.h_side() {
                    (floors, true)
                } else {
                    (floors.reverse(), false)
                };
                let h_first = match self.mutation {
                    Some(Mutation::InvertBaseGapOrder) => h_vs_g == Ordering::Less,
                    _ => h_vs_g != Ordering::Greater,
                };
                let h_cmp_g = if h_first {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
                Ok(if u_is_h { h_cmp_g } else { h_cmp_g.reverse() })
            }
        }
    }

    /// The `GH` layer: compare the anchors `g·a(h)`, then break ties inside
    /// the inserted block by `h` against `(g⁻¹g′)·h′`.
    fn compare_gh(&self, x: &Element, y: &Element) -> Result<Ordering> {
        let (gs, hs) = (self.g_side, self.h_side());
        let (gg, hh) = (self.factor(gs), self.factor(hs));
        let st = self.stepping();
        let (g1, h1) = self.split_gh(x)?;
        let (g2, h2) = self.split_gh(y)?;
        let anchor1 = gg.mul(&g1, &self.parts.shift(hs, &st.floor(hs, &h1), gs));
        let anchor2 = gg.mul(&g2, &self.parts.shift(hs, &st.floor(hs, &h2), gs));
        match gg.compare(&anchor1, &anchor2)? {
            Ordering::Equal => {}
            r => return Ok(r),
        }
        let d = gg.mul(&gg.inv(&g1), &g2);
        if !st.is_member(gs, &d) {
            return Err(Error::Engine(format!(
                "equal anchors but g⁻¹g′ = {} is outside the subgroup",
                gg.render(&d)
            )));
        }
        let shifted = hh.mul(&self.parts.shift(gs, &d, hs), &h2);
        let r = hh.compare(&h1, &shifted)?;
        Ok(match self.mutation {
            Some(Mutation::InvertLevelOneTieBreak) => r.reverse(),
            _ => r,
        })
    }

    /// The greatest element of the previous filtration layer below `x`.
    ///
    /// On `GH ∖ H` this is `a(g·a(h))·h_M`; higher up it is `s·c(y)` for the
    /// top decomposition `x = s·y`.
    pub fn c_map(&self, x: &Element) -> Result<Element> {
        let t = self.twice(x);
        if t < 1 {
            return Err(Error::Precondition(format!(
                "c-map is undefined on H, got {}",
                self.render(x)
            )));
        }
        if t <= 2 {
            let (gs, hs) = (self.g_side, self.h_side());
            let (gg, hh) = (self.factor(gs), self.factor(hs));
            let st = self.stepping();
            let (g, h) = self.split_gh(x)?;
            let anchor = gg.mul(&g, &self.parts.shift(hs, &st.floor(hs, &h), gs));
            let a = self.parts.shift(gs, &st.floor(gs, &anchor), hs);
            return Ok(self.embed(hs, &hh.mul(&a, &self.consts.h_m_factor)));
        }
        let split = self.split_top(x).expect("level >= 1 has a syllable");
        self.c_map_split(&split)
    }

    /// `c(x)` computed from an explicit decomposition `x = top·rest`.
    pub fn c_map_split(&self, split: &Split) -> Result<Element> {
        let c = self.c_map(&split.rest)?;
        Ok(self.parts.mul(&self.embed(split.side, &split.top), &c))
    }

    fn join(&self, split: &Split) -> Element {
        self.parts.mul(&self.embed(split.side, &split.top), &split.rest)
    }

    /// Compares two elements given through explicit top decompositions on the
    /// same side. The result does not depend on which decomposition is used.
    pub fn compare_splits(&self, a: &Split, b: &Split) -> Result<Ordering> {
        if a.side != b.side {
            return Err(Error::Precondition(
                "decompositions must lead with the same factor".into(),
            ));
        }
        let top = self.twice(&self.join(a)).max(self.twice(&self.join(b)));
        self.compare_split_pair(a, b, top)
    }

    fn compare_split_pair(&self, a: &Split, b: &Split, top: i64) -> Result<Ordering> {
        let ca = self.c_map_split(a)?;
        let cb = self.c_map_split(b)?;
        match self.compare_below(&ca, &cb, top)? {
            Ordering::Equal => {}
            r => return Ok(r),
        }
        let g = self.factor(a.side);
        let d = g.mul(&g.inv(&a.top), &b.top);
        if !self.stepping().is_member(a.side, &d) {
            return Err(Error::Engine(format!(
                "equal c-values but s⁻¹s′ = {} is outside the subgroup",
                g.render(&d)
            )));
        }
        let shifted = self.parts.mul(&self.embed(a.side, &d), &b.rest);
        self.compare_below(&a.rest, &shifted, top)
    }

    /// Recursive step; both operands must sit strictly below `ceiling`.
    fn compare_below(&self, x: &Element, y: &Element, ceiling: i64) -> Result<Ordering> {
        let top = self.twice(x).max(self.twice(y));
        if top >= ceiling {
            return Err(Error::Engine(format!(
                "comparison recursion did not descend (level {} at ceiling {})",
                FiltrationLevel(top),
                FiltrationLevel(ceiling)
            )));
        }
        self.compare_at(x, y)
    }

    fn compare_at(&self, x: &Element, y: &Element) -> Result<Ordering> {
        if x == y {
            return Ok(Ordering::Equal);
        }
        let (tx, ty) = (self.twice(x), self.twice(y));
        let top = tx.max(ty);
        if top <= 1 {
            return self.base_compare(x, y);
        }
        if top == 2 {
            return self.compare_gh(x, y);
        }
        match (tx == top, ty == top) {
            (true, true) => {
                let a = self.split_top(x).expect("top-level element");
                let b = self.split_top(y).expect("top-level element");
                self.compare_split_pair(&a, &b, top)
            }
            // y sits in the open gap (c(y), c(y)·h_min), which holds no
            // element of a lower layer
            (false, true) => {
                let c = self.c_map(y)?;
                Ok(match self.compare_below(x, &c, top)? {
                    Ordering::Greater => Ordering::Greater,
                    _ => Ordering::Less,
                })
            }
            (true, false) => {
                let c = self.c_map(x)?;
                Ok(match self.compare_below(&c, y, top)? {
                    Ordering::Less => Ordering::Less,
                    _ => Ordering::Greater,
                })
            }
            (false, false) => unreachable!("one operand attains the top level"),
        }
    }

    /// The greatest subgroup element `≤ x`.
    pub fn a_floor(&self, x: &Element) -> Result<Element> {
        let mut cur = x.clone();
        while self.twice(&cur) > 1 {
            let next = self.c_map(&cur)?;
            if self.twice(&next) >= self.twice(&cur) {
                return Err(Error::Engine("c-map did not lower the level".into()));
            }
            cur = next;
        }
        self.base_floor(&cur)
    }

    /// The least subgroup element strictly above `x`.
    pub fn a_ceil(&self, x: &Element) -> Result<Element> {
        Ok(self.parts.mul(&self.a_floor(x)?, &self.consts.a_min))
    }

    /// Characteristic positive set: the G-role factor's set, the H-role
    /// factor's relative set, and the minimal positive element.
    pub fn characteristic_set(&self) -> Result<Vec<Element>> {
        self.char_set.clone().ok_or_else(|| {
            Error::MissingCharSet(
                "the G-role factor needs a characteristic set and the H-role factor a relative one"
                    .into(),
            )
        })
    }

    /// Subgroup elements (left representation) used for sample checks.
    pub fn subgroup_samples(&self) -> Result<Vec<Element>> {
        subgroup_samples(&self.parts)
    }
}

fn side_index(side: Side) -> usize {
    match side {
        Side::Left => 0,
        Side::Right => 1,
    }
}

fn subgroup_samples(parts: &Parts) -> Result<Vec<Element>> {
    let st = &parts.stepping;
    let left = &parts.left;
    let a_min = st.a_min(Side::Left);
    let mut out: Vec<Element> = (-3..=3).map(|k| left.pow(&a_min, k)).collect();
    for side in [Side::Left, Side::Right] {
        let ball = enumerate_ball(parts.factor(side), 2, VALIDATION_CAP)?;
        for z in &ball.elements {
            let f = parts.shift(side, &st.floor(side, z), Side::Left);
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    Ok(out)
}

fn validate(parts: &Parts) -> Result<()> {
    let st = &parts.stepping;
    if !st.group(Side::Left).same_as(&parts.left) || !st.group(Side::Right).same_as(&parts.right) {
        return Err(Error::Construction(
            "the stepping subgroup was declared for different ambient groups".into(),
        ));
    }
    let left_min = parts
        .left
        .min_positive()
        .ok_or_else(|| Error::NotDiscrete("left factor".into()))?;
    let right_min = parts
        .right
        .min_positive()
        .ok_or_else(|| Error::NotDiscrete("right factor".into()))?;

    for a in subgroup_samples(parts)? {
        let b = st.translate(Side::Left, &a);
        if st.translate(Side::Right, &b) != a {
            return Err(Error::assumption(
                Assumption::SameRestriction,
                "translation maps are not mutually inverse",
            ));
        }
        let sl = parts.left.sign(&a)?;
        let sr = parts.right.sign(&b)?;
        if sl != sr {
            return Err(Error::assumption(
                Assumption::SameRestriction,
                format!(
                    "{} and its image {} have different signs",
                    parts.left.render(&a),
                    parts.right.render(&b)
                ),
            ));
        }
    }

    let a_left = st.a_min(Side::Left);
    let a_right = st.a_min(Side::Right);
    if a_left == left_min || a_right == right_min {
        return Err(Error::assumption(
            Assumption::ProperSubgroup,
            "the subgroup contains the minimal positive element, so it is the whole group",
        ));
    }
    for (side, a, m) in [
        (Side::Left, &a_left, &left_min),
        (Side::Right, &a_right, &right_min),
    ] {
        let g = parts.factor(side);
        let below = g.mul(a, &g.inv(m));
        if !st.is_member(side, a)
            || g.sign(a)? != Ordering::Greater
            || st.floor(side, &below) != g.identity()
        {
            return Err(Error::assumption(
                Assumption::MinimalSubgroupElement,
                format!("{} is not the minimal positive subgroup element", g.render(a)),
            ));
        }
    }
    if st.translate(Side::Left, &a_left) != a_right {
        return Err(Error::assumption(
            Assumption::MinimalSubgroupElement,
            "the two minimal positive subgroup elements do not correspond",
        ));
    }

    for side in [Side::Left, Side::Right] {
        let ball = enumerate_ball(parts.factor(side), VALIDATION_RADIUS, VALIDATION_CAP)?;
        for z in &ball.elements {
            if let Some(problem) = st.check_floor_at(side, z)? {
                return Err(Error::assumption(Assumption::Stepping, problem));
            }
        }
    }
    Ok(())
}

impl OrderedGroup for AmalgamGroup {
    fn identity(&self) -> Element {
        self.parts.identity()
    }

    fn generators(&self) -> Vec<(String, Element)> {
        let mut out = Vec::new();
        for side in [Side::Left, Side::Right] {
            for (name, e) in self.factor(side).generators() {
                out.push((self.qualify(side, &name), self.embed(side, &e)));
            }
        }
        out
    }

    fn contains(&self, x: &Element) -> bool {
        let Element::Amalgam(w) = x else {
            return false;
        };
        let st = self.stepping();
        if !self.parts.left.contains(&w.head) || !st.is_member(Side::Left, &w.head) {
            return false;
        }
        let mut prev: Option<Side> = None;
        for s in &w.syllables {
            let g = self.factor(s.side);
            if prev == Some(s.side)
                || !g.contains(&s.value)
                || s.value == g.identity()
                || st.floor(s.side, &s.value) != g.identity()
            {
                return false;
            }
            prev = Some(s.side);
        }
        true
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        self.parts.mul(x, y)
    }

    fn inv(&self, x: &Element) -> Element {
        self.parts.inv(x)
    }

    fn compare(&self, x: &Element, y: &Element) -> Result<Ordering> {
        self.compare_at(x, y)
    }

    fn min_positive(&self) -> Option<Element> {
        Some(self.consts.min_positive.clone())
    }

    fn char_set(&self) -> Option<&[Element]> {
        self.char_set.as_deref()
    }

    /// An isolated ordering is in particular relatively isolated.
    fn relative_char_set(&self) -> Option<&[Element]> {
        self.char_set.as_deref()
    }

    fn render_factors(&self, x: &Element) -> Vec<(String, i64)> {
        let w = word(x);
        let qualify = |side: Side, fs: Vec<(String, i64)>| {
            fs.into_iter()
                .map(move |(n, k)| (self.qualify(side, &n), k))
                .collect::<Vec<_>>()
        };
        if w.syllables.is_empty() {
            return qualify(Side::Left, self.parts.left.render_factors(&w.head));
        }
        let mut out = Vec::new();
        for (i, s) in w.syllables.iter().enumerate() {
            let g = self.factor(s.side);
            let value = if i == 0 {
                g.mul(&self.parts.shift(Side::Left, &w.head, s.side), &s.value)
            } else {
                s.value.clone()
            };
            out.extend(qualify(s.side, g.render_factors(&value)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Trefoil {
        t: Group,
        x: Element,
        y: Element,
    }

    impl Trefoil {
        fn new(variant: Variant) -> Self {
            let (zx, zy) = (Group::cyclic("x"), Group::cyclic("y"));
            let a = SteppingSubgroup::cyclic(&zx, 2, &zy, 3).unwrap();
            let t = Group::amalgam(&zx, &zy, a, variant).unwrap();
            let tx = t.as_amalgam().unwrap();
            let x = tx.embed(Side::Left, &Element::Cyclic(1));
            let y = tx.embed(Side::Right, &Element::Cyclic(1));
            Trefoil { t, x, y }
        }

        fn ax(&self) -> &AmalgamGroup {
            self.t.as_amalgam().unwrap()
        }

        /// Product of `x^a` / `y^b` powers, e.g. `&[('y', -2), ('x', 1)]`.
        fn w(&self, factors: &[(char, i64)]) -> Element {
            factors.iter().fold(self.t.identity(), |acc, &(c, k)| {
                let g = if c == 'x' { &self.x } else { &self.y };
                self.t.mul(&acc, &self.t.pow(g, k))
            })
        }
    }

    #[test]
    fn reduction_merges_and_absorbs() {
        let tr = Trefoil::new(Variant::One);
        let ax = tr.ax();
        let x2 = ax.reduce([(Side::Left, Element::Cyclic(1)), (Side::Left, Element::Cyclic(1))]);
        assert_eq!(x2, tr.w(&[('x', 2)]));
        assert!(ax.in_subgroup(&x2));
        assert_eq!(ax.level(&x2), FiltrationLevel(-1));
        let x3 = ax.reduce([(Side::Left, Element::Cyclic(1)), (Side::Right, Element::Cyclic(3))]);
        assert_eq!(x3, tr.w(&[('x', 3)]));
        let y5 = ax.reduce([
            (Side::Right, Element::Cyclic(1)),
            (Side::Left, Element::Cyclic(2)),
            (Side::Right, Element::Cyclic(1)),
        ]);
        assert_eq!(y5, tr.w(&[('y', 5)]));
    }

    #[test]
    fn relation_and_inverse() {
        let tr = Trefoil::new(Variant::One);
        let t = &tr.t;
        assert_eq!(t.mul(&tr.x, &t.pow(&tr.y, 3)), tr.w(&[('x', 3)]));
        assert_eq!(tr.w(&[('x', 2), ('y', -3)]), t.identity());
        let xy = t.mul(&tr.x, &tr.y);
        let expected = t.mul(&t.inv(&tr.y), &t.inv(&tr.x));
        assert_eq!(t.inv(&xy), expected);
        // y^-1*x^-1 = y^-1*x^-2*x = y^-4*x, x being the representative of x^-1
        assert_eq!(t.render(&t.inv(&xy)), "y^-4*x");
        assert_eq!(t.mul(&t.inv(&xy), &xy), t.identity());
    }

    #[test]
    fn x_squared_differs_from_y_squared() {
        let tr = Trefoil::new(Variant::One);
        assert_ne!(tr.w(&[('x', 2)]), tr.w(&[('y', 2)]));
    }

    #[test]
    fn levels() {
        let tr = Trefoil::new(Variant::One);
        let ax = tr.ax();
        let lv = |f: &[(char, i64)]| ax.level(&tr.w(f)).to_string();
        assert_eq!(lv(&[]), "-0.5");
        assert_eq!(lv(&[('y', 1)]), "0");
        assert_eq!(lv(&[('x', 1)]), "0.5");
        assert_eq!(lv(&[('x', 1), ('y', 1)]), "1");
        assert_eq!(lv(&[('y', 1), ('x', 1)]), "2");
        assert_eq!(lv(&[('x', 1), ('y', 1), ('x', 1)]), "3");
        assert_eq!(lv(&[('y', -2), ('x', 1)]), "2");
    }

    #[test]
    fn filtration_membership_by_syllable_parity() {
        // Independent oracle: x ∈ F_n iff x is a product of n+1 alternating
        // factors ending in the H-role factor (factors may be trivial).
        let tr = Trefoil::new(Variant::One);
        let ax = tr.ax();
        let fits = |x: &Element, n: usize| {
            let sides: Vec<Side> = word(x).syllables.iter().map(|s| s.side).collect();
            // pattern from the right: H, G, H, G, ...
            let pattern: Vec<Side> = (0..=n)
                .map(|j| if j % 2 == 0 { Side::Right } else { Side::Left })
                .collect();
            // a reduced word fits iff it embeds as a suffix-aligned subsequence
            let mut j = 0;
            for s in sides.iter().rev() {
                while j < pattern.len() && pattern[j] != *s {
                    j += 1;
                }
                if j == pattern.len() {
                    return false;
                }
                j += 1;
            }
            true
        };
        let ball = enumerate_ball(&tr.t, 4, 10_000).unwrap();
        for z in &ball.elements {
            let lv = ax.level(z);
            if lv.twice() < 2 {
                continue;
            }
            let n = lv.integer_index() as usize;
            assert!(fits(z, n), "{} should be in F_{n}", tr.t.render(z));
            assert!(!fits(z, n - 1), "{} should not be in F_{}", tr.t.render(z), n - 1);
        }
    }

    #[test]
    fn base_compare_clauses() {
        let tr = Trefoil::new(Variant::One);
        let ax = tr.ax();
        let c = |a: &[(char, i64)], b: &[(char, i64)]| ax.base_compare(&tr.w(a), &tr.w(b)).unwrap();
        assert_eq!(c(&[('y', 1)], &[('x', 1)]), Ordering::Less);
        assert_eq!(c(&[('x', 1)], &[('y', 4)]), Ordering::Less);
        assert_eq!(c(&[('x', 3)], &[('y', 4)]), Ordering::Greater);
        let high = tr.w(&[('x', 1), ('y', 1)]);
        assert!(matches!(ax.base_compare(&high, &tr.x), Err(Error::Precondition(_))));
    }

    #[test]
    fn constants() {
        let tr = Trefoil::new(Variant::One);
        let ax = tr.ax();
        assert_eq!(ax.a_min(), &tr.w(&[('x', 2)]));
        assert_eq!(ax.h_m(), &tr.w(&[('y', 2)]));
        assert_eq!(ax.g_m(), &tr.w(&[('x', 1)]));
        assert_eq!(tr.t.min_positive().unwrap(), tr.w(&[('y', -2), ('x', 1)]));
        assert_eq!(tr.t.render(&tr.t.min_positive().unwrap()), "y^-2*x");
    }

    #[test]
    fn variant_two_min_positive() {
        let tr = Trefoil::new(Variant::Two);
        assert_eq!(tr.t.min_positive().unwrap(), tr.w(&[('x', 1), ('y', -2)]));
    }

    #[test]
    fn c_map_values() {
        let tr = Trefoil::new(Variant::One);
        let ax = tr.ax();
        assert_eq!(ax.c_map(&tr.x).unwrap(), tr.w(&[('y', 2)]));
        assert_eq!(ax.c_map(&tr.w(&[('y', -2), ('x', 1)])).unwrap(), tr.t.identity());
        assert_eq!(
            ax.c_map(&tr.w(&[('x', 1), ('y', 1), ('x', 1)])).unwrap(),
            tr.w(&[('x', 3)])
        );
        assert!(matches!(ax.c_map(&tr.y), Err(Error::Precondition(_))));
    }

    #[test]
    fn compare_examples() {
        let tr = Trefoil::new(Variant::One);
        let t = &tr.t;
        let m = tr.w(&[('y', -2), ('x', 1)]);
        assert_eq!(t.compare(&t.identity(), &m), Ok(Ordering::Less));
        assert_eq!(t.compare(&m, &tr.y), Ok(Ordering::Less));
        assert_eq!(t.compare(&tr.y, &tr.x), Ok(Ordering::Less));
        assert_eq!(t.compare(&tr.x, &tr.y), Ok(Ordering::Greater));
    }

    #[test]
    fn base_chain() {
        let tr = Trefoil::new(Variant::One);
        let chain: Vec<Element> = [
            vec![],
            vec![('y', 1)],
            vec![('y', 2)],
            vec![('x', 1)],
            vec![('x', 2)],
            vec![('y', 4)],
            vec![('y', 5)],
            vec![('x', 3)],
        ]
        .iter()
        .map(|f| tr.w(f))
        .collect();
        for i in 0..chain.len() {
            for j in 0..chain.len() {
                assert_eq!(tr.t.compare(&chain[i], &chain[j]), Ok(i.cmp(&j)), "{i} vs {j}");
            }
        }
    }

    #[test]
    fn floors_on_the_amalgam() {
        let tr = Trefoil::new(Variant::One);
        let ax = tr.ax();
        let id = tr.t.identity();
        assert_eq!(ax.a_floor(&tr.w(&[('y', -2), ('x', 1)])).unwrap(), id);
        assert_eq!(ax.a_floor(&tr.w(&[('x', 1), ('y', 1)])).unwrap(), id);
        assert_eq!(ax.a_floor(&tr.w(&[('y', 4)])).unwrap(), tr.w(&[('y', 3)]));
        assert_eq!(ax.a_ceil(&tr.w(&[('y', 4)])).unwrap(), tr.w(&[('y', 6)]));
    }

    #[test]
    fn characteristic_sets() {
        let tr = Trefoil::new(Variant::One);
        let cs = tr.ax().characteristic_set().unwrap();
        assert_eq!(cs, vec![tr.x.clone(), tr.y.clone(), tr.w(&[('y', -2), ('x', 1)])]);
        let tr2 = Trefoil::new(Variant::Two);
        let cs2 = tr2.ax().characteristic_set().unwrap();
        assert_eq!(cs2, vec![tr2.x.clone(), tr2.y.clone(), tr2.w(&[('x', 1), ('y', -2)])]);
    }

    #[test]
    fn mismatched_sign_is_rejected_as_assumption_a() {
        let (zx, zy) = (Group::cyclic("x"), Group::cyclic("y"));
        let a = SteppingSubgroup::cyclic(&zx, 2, &zy, -3).unwrap();
        let err = Group::amalgam(&zx, &zy, a, Variant::One).unwrap_err();
        assert!(matches!(
            err,
            Error::Assumption {
                assumption: Assumption::SameRestriction,
                ..
            }
        ));
    }

    #[test]
    fn stepping_for_other_groups_is_rejected() {
        let (zx, zy, zz) = (Group::cyclic("x"), Group::cyclic("y"), Group::cyclic("z"));
        let a = SteppingSubgroup::cyclic(&zx, 2, &zy, 3).unwrap();
        assert!(matches!(
            Group::amalgam(&zx, &zz, a, Variant::One),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn decomposition_shift_does_not_change_comparison() {
        let tr = Trefoil::new(Variant::One);
        let ax = tr.ax();
        let t = &tr.t;
        let u = tr.w(&[('y', 1), ('x', 1), ('y', -1), ('x', 1)]);
        let v = tr.w(&[('y', -1), ('x', -1), ('y', 1), ('x', 1)]);
        let (su, sv) = (ax.split_top(&u).unwrap(), ax.split_top(&v).unwrap());
        let base = ax.compare_splits(&su, &sv).unwrap();
        assert_eq!(base, t.compare(&u, &v).unwrap());
        let hh = ax.factor(su.side);
        for k in -2..=2 {
            let a = Element::Cyclic(3 * k);
            let shifted = Split {
                side: su.side,
                top: hh.mul(&su.top, &a),
                rest: t.mul(&ax.embed(su.side, &hh.inv(&a)), &su.rest),
            };
            assert_eq!(ax.compare_splits(&shifted, &sv).unwrap(), base);
            assert_eq!(ax.c_map_split(&shifted).unwrap(), ax.c_map(&u).unwrap());
        }
    }

    #[test]
    fn display_of_levels() {
        assert_eq!(FiltrationLevel(-1).to_string(), "-0.5");
        assert_eq!(FiltrationLevel(3).to_string(), "1.5");
        assert_eq!(FiltrationLevel(4).to_string(), "2");
        assert!(!FiltrationLevel(-1).within(-2));
        assert!(FiltrationLevel(-1).within(0));
        assert_eq!(FiltrationLevel(1).integer_index(), 1);
        assert_eq!(FiltrationLevel(-1).integer_index(), 0);
    }
}
