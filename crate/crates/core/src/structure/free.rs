//! Canonical free molecules rooted at the heavy-skeleton centroid.

use std::rc::Rc;

use crate::element::{AtomCounts, AtomKind};

use super::rooted::RootedStructure;
use super::Structure;

/// Where the canonical form of a free molecule is anchored.
#[derive(Debug)]
pub enum FreeCenter {
    /// The heavy-skeleton centroid is a node: a heavy center with exactly
    /// `valence` branches, each of heavy size at most floor((n-1)/2).
    Node {
        center: AtomKind,
        branches: Vec<Rc<RootedStructure>>,
    },
    /// The centroid is an edge: two heavy-rooted halves of equal heavy
    /// size, stored with `left <= right` by code.
    Edge {
        left: Rc<RootedStructure>,
        right: Rc<RootedStructure>,
    },
}

/// One term of the free-molecule series phi.
#[derive(Debug)]
pub struct FreeStructure {
    center: FreeCenter,
    code: String,
    heavy_size: usize,
}

impl FreeStructure {
    /// Centroid-node form. Panics if the centroid bound is violated; the
    /// generator only proposes branch multisets that satisfy it.
    pub fn node_centered(
        center: AtomKind,
        mut branches: Vec<Rc<RootedStructure>>,
    ) -> Rc<FreeStructure> {
        assert!(center.is_heavy(), "the center atom must be heavy");
        assert_eq!(
            branches.len(),
            center.valence(),
            "{center} takes exactly {} branches as a free-molecule center",
            center.valence()
        );
        branches.sort_by(|a, b| a.bare_code().cmp(b.bare_code()));
        let heavy_size = 1 + branches.iter().map(|b| b.heavy_size()).sum::<usize>();
        for branch in &branches {
            assert!(
                branch.heavy_size() <= (heavy_size - 1) / 2,
                "branch violates the centroid bound"
            );
        }
        let mut code = String::new();
        code.push('!');
        code.push(center.symbol());
        code.push('(');
        for (i, branch) in branches.iter().enumerate() {
            if i > 0 {
                code.push(',');
            }
            code.push_str(branch.bare_code());
        }
        code.push(')');
        Rc::new(FreeStructure {
            center: FreeCenter::Node { center, branches },
            code,
            heavy_size,
        })
    }

    /// Bicentroid form: two heavy-rooted halves of exactly equal heavy size.
    pub fn edge_centered(
        a: Rc<RootedStructure>,
        b: Rc<RootedStructure>,
    ) -> Rc<FreeStructure> {
        assert!(
            a.is_heavy_rooted() && b.is_heavy_rooted(),
            "edge halves must be heavy-rooted"
        );
        assert_eq!(
            a.heavy_size(),
            b.heavy_size(),
            "edge halves must have equal heavy size"
        );
        let (left, right) = if a.bare_code() <= b.bare_code() {
            (a, b)
        } else {
            (b, a)
        };
        let code = format!("=({},{})", left.bare_code(), right.bare_code());
        let heavy_size = left.heavy_size() + right.heavy_size();
        Rc::new(FreeStructure {
            center: FreeCenter::Edge { left, right },
            code,
            heavy_size,
        })
    }

    pub fn center(&self) -> &FreeCenter {
        &self.center
    }

    pub fn code(&self) -> &str {
        &self.code
    }
}

impl Structure for FreeStructure {
    fn sort_key(&self) -> &str {
        &self.code
    }

    fn canonical_code(&self) -> String {
        self.code.clone()
    }

    fn heavy_size(&self) -> usize {
        self.heavy_size
    }

    fn atom_counts(&self) -> AtomCounts {
        let mut counts = AtomCounts::default();
        match &self.center {
            FreeCenter::Node { center, branches } => {
                counts.add_atom(*center);
                for branch in branches {
                    let c = branch.atom_counts();
                    counts.h += c.h;
                    counts.c += c.c;
                    counts.n += c.n;
                    counts.o += c.o;
                    counts.f += c.f;
                }
            }
            FreeCenter::Edge { left, right } => {
                for half in [left, right] {
                    let c = half.atom_counts();
                    counts.h += c.h;
                    counts.c += c.c;
                    counts.n += c.n;
                    counts.o += c.o;
                    counts.f += c.f;
                }
            }
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Rc<RootedStructure> {
        RootedStructure::leaf(AtomKind::H)
    }

    fn methyl() -> Rc<RootedStructure> {
        RootedStructure::branch(AtomKind::C, vec![h(), h(), h()])
    }

    fn ethyl() -> Rc<RootedStructure> {
        RootedStructure::branch(AtomKind::C, vec![methyl(), h(), h()])
    }

    #[test]
    fn methane_code_and_counts() {
        let methane = FreeStructure::node_centered(AtomKind::C, vec![h(), h(), h(), h()]);
        assert_eq!(methane.code(), "!C(H,H,H,H)");
        let counts = methane.atom_counts();
        assert_eq!((counts.c, counts.h), (1, 4));
    }

    #[test]
    fn n_butane_is_edge_centered() {
        let butane = FreeStructure::edge_centered(ethyl(), ethyl());
        assert_eq!(butane.code(), "=(C(C(H,H,H),H,H),C(C(H,H,H),H,H))");
        assert_eq!(butane.heavy_size(), 4);
    }

    #[test]
    fn isobutane_is_node_centered() {
        let isobutane =
            FreeStructure::node_centered(AtomKind::C, vec![methyl(), methyl(), methyl(), h()]);
        assert_eq!(isobutane.code(), "!C(C(H,H,H),C(H,H,H),C(H,H,H),H)");
        let counts = isobutane.atom_counts();
        assert_eq!((counts.c, counts.h), (4, 10));
    }

    #[test]
    fn edge_halves_are_ordered() {
        let hydroxyl = RootedStructure::branch(AtomKind::O, vec![h()]);
        let methanol = FreeStructure::edge_centered(hydroxyl, methyl());
        assert_eq!(methanol.code(), "=(C(H,H,H),O(H))");
    }

    #[test]
    #[should_panic(expected = "centroid bound")]
    fn centroid_bound_is_enforced() {
        // ethyl branch on a two-carbon-total candidate center: size 2 > 1
        let propane_wrong =
            FreeStructure::node_centered(AtomKind::C, vec![ethyl(), h(), h(), h()]);
        let _ = propane_wrong;
    }
}
