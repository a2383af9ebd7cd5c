use std::fmt;
use std::sync::Arc;

/// Which factor of an amalgam a syllable comes from, as declared by the user.
///
/// This is the declaration side, not the ordering role: a variant-2 amalgam
/// puts the right factor in the leading role.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
        }
    }
}

/// A group element as an immutable tree.
///
/// Cyclic groups store the exponent of their generator. Amalgam elements
/// store a [`Word`] in normal form; see [`Word`] for the invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Cyclic(i64),
    Amalgam(Arc<Word>),
}

/// One factor of an amalgam word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub side: Side,
    pub value: Element,
}

/// Normal form of an amalgam element: `head · t₁ ⋯ t_k`.
///
/// `head` is a member of the amalgamated subgroup, stored in its left-factor
/// representation. Each `tᵢ` is the canonical representative `a(s)⁻¹·s` of
/// its right coset `A·s` (the floor of `s` pushed out to the left), never the
/// identity, and consecutive syllables alternate sides. Because the
/// representatives are canonical, two words are equal in the group iff they
/// are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub head: Element,
    pub syllables: Vec<Syllable>,
}

impl Element {
    pub fn word(head: Element, syllables: Vec<Syllable>) -> Element {
        Element::Amalgam(Arc::new(Word { head, syllables }))
    }

    pub fn as_cyclic(&self) -> Option<i64> {
        match self {
            Element::Cyclic(k) => Some(*k),
            Element::Amalgam(_) => None,
        }
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Element::Cyclic(_) => None,
            Element::Amalgam(w) => Some(w),
        }
    }

    /// Number of non-trivial syllables; zero for cyclic elements.
    pub fn syllable_count(&self) -> usize {
        self.as_word().map_or(0, |w| w.syllables.len())
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.prefix())
    }
}
