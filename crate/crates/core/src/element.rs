//! Atom kinds and the element-count grading.

use std::fmt;
use std::ops::Add;

/// The five atom kinds the engine knows about.
///
/// H and F are padding: they fill unused valences and never root a branch.
/// C, N and O are the heavy atoms that define structure size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomKind {
    H,
    C,
    N,
    O,
    F,
}

impl AtomKind {
    /// Heavy elements in canonical iteration order.
    pub const HEAVY: [AtomKind; 3] = [AtomKind::C, AtomKind::N, AtomKind::O];

    pub fn symbol(self) -> char {
        match self {
            AtomKind::H => 'H',
            AtomKind::C => 'C',
            AtomKind::N => 'N',
            AtomKind::O => 'O',
            AtomKind::F => 'F',
        }
    }

    pub fn from_symbol(ch: char) -> Option<AtomKind> {
        match ch {
            'H' => Some(AtomKind::H),
            'C' => Some(AtomKind::C),
            'N' => Some(AtomKind::N),
            'O' => Some(AtomKind::O),
            'F' => Some(AtomKind::F),
            _ => None,
        }
    }

    pub fn is_heavy(self) -> bool {
        matches!(self, AtomKind::C | AtomKind::N | AtomKind::O)
    }

    /// Branches a non-root tree node of this kind can carry
    /// (valence minus the stem toward the root).
    pub fn branch_count(self) -> usize {
        match self {
            AtomKind::C => 3,
            AtomKind::N => 2,
            AtomKind::O => 1,
            AtomKind::H | AtomKind::F => 0,
        }
    }

    /// Total bonds the atom forms in a free molecule.
    pub fn valence(self) -> usize {
        match self {
            AtomKind::C => 4,
            AtomKind::N => 3,
            AtomKind::O => 2,
            AtomKind::H | AtomKind::F => 1,
        }
    }
}

impl fmt::Display for AtomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Grading key of a series coefficient: how many of each heavy element,
/// plus the fluorine count when fluorine participates in the grading.
///
/// Hydrogen is never tracked; it is padding and derivable from the rest.
/// Fluorine is tracked but does not contribute to [`total`](Self::total):
/// size is the heavy-atom count, the sum of C, N and O.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementVector {
    pub c: u16,
    pub n: u16,
    pub o: u16,
    pub f: u16,
}

impl ElementVector {
    pub const ZERO: ElementVector = ElementVector { c: 0, n: 0, o: 0, f: 0 };

    /// The unit vector for one atom of the given kind (not H).
    pub fn single(kind: AtomKind) -> ElementVector {
        let mut v = ElementVector::ZERO;
        match kind {
            AtomKind::C => v.c = 1,
            AtomKind::N => v.n = 1,
            AtomKind::O => v.o = 1,
            AtomKind::F => v.f = 1,
            AtomKind::H => panic!("hydrogen is not a grading variable"),
        }
        v
    }

    /// Heavy-atom count: C + N + O. Fluorine is padding and excluded.
    pub fn total(&self) -> usize {
        self.c as usize + self.n as usize + self.o as usize
    }

    /// Every component multiplied by `k` (plethystic substitution).
    pub fn scaled(&self, k: usize) -> ElementVector {
        let k = k as u16;
        ElementVector {
            c: self.c * k,
            n: self.n * k,
            o: self.o * k,
            f: self.f * k,
        }
    }
}

impl Add for ElementVector {
    type Output = ElementVector;

    fn add(self, rhs: ElementVector) -> ElementVector {
        ElementVector {
            c: self.c + rhs.c,
            n: self.n + rhs.n,
            o: self.o + rhs.o,
            f: self.f + rhs.f,
        }
    }
}

impl fmt::Display for ElementVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C:{} N:{} O:{} F:{}", self.c, self.n, self.o, self.f)
    }
}

/// Full atom tally of one structure, hydrogen included.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AtomCounts {
    pub h: usize,
    pub c: usize,
    pub n: usize,
    pub o: usize,
    pub f: usize,
}

impl AtomCounts {
    pub fn add_atom(&mut self, kind: AtomKind) {
        match kind {
            AtomKind::H => self.h += 1,
            AtomKind::C => self.c += 1,
            AtomKind::N => self.n += 1,
            AtomKind::O => self.o += 1,
            AtomKind::F => self.f += 1,
        }
    }

    /// Heavy-atom count.
    pub fn heavy(&self) -> usize {
        self.c + self.n + self.o
    }
}
