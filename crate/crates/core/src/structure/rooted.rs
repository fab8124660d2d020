//! Canonical rooted radicals.

use std::rc::Rc;

use crate::element::{AtomCounts, AtomKind};

use super::Structure;

/// A valence-exact rooted tree of atoms: one term of the rooted series.
///
/// A heavy root carries exactly `branch_count` children (hydrogen padding
/// makes degrees exact); H and F are bare leaf radicals. Children are kept
/// in ascending canonical-code order, so the cached code is canonical by
/// construction: equal codes mean isomorphic structures.
#[derive(Debug)]
pub struct RootedStructure {
    kind: AtomKind,
    children: Vec<Rc<RootedStructure>>,
    /// Bare code without the `*` radical prefix; children embed this form.
    code: String,
    heavy_size: usize,
}

impl RootedStructure {
    /// The bare leaf radical `.H` or `.F`.
    pub fn leaf(kind: AtomKind) -> Rc<RootedStructure> {
        assert!(!kind.is_heavy(), "leaves are H or F only");
        Rc::new(RootedStructure {
            kind,
            children: Vec::new(),
            code: kind.symbol().to_string(),
            heavy_size: 0,
        })
    }

    /// A heavy node over exactly `branch_count` children. Children are
    /// sorted into canonical order here; callers may pass them in any order.
    pub fn branch(kind: AtomKind, mut children: Vec<Rc<RootedStructure>>) -> Rc<RootedStructure> {
        assert!(kind.is_heavy(), "only heavy atoms carry branches");
        assert_eq!(
            children.len(),
            kind.branch_count(),
            "{kind} takes exactly {} branches",
            kind.branch_count()
        );
        children.sort_by(|a, b| a.code.cmp(&b.code));
        let mut code = String::new();
        code.push(kind.symbol());
        code.push('(');
        for (i, child) in children.iter().enumerate() {
            if i > 0 {
                code.push(',');
            }
            code.push_str(&child.code);
        }
        code.push(')');
        let heavy_size = 1 + children.iter().map(|c| c.heavy_size).sum::<usize>();
        Rc::new(RootedStructure {
            kind,
            children,
            code,
            heavy_size,
        })
    }

    pub fn kind(&self) -> AtomKind {
        self.kind
    }

    pub fn children(&self) -> &[Rc<RootedStructure>] {
        &self.children
    }

    pub fn is_heavy_rooted(&self) -> bool {
        self.kind.is_heavy()
    }

    /// Code without the radical prefix, as embedded in parent codes.
    pub fn bare_code(&self) -> &str {
        &self.code
    }

    /// The public `*`-prefixed radical code.
    pub fn radical_code(&self) -> String {
        format!("*{}", self.code)
    }
}

impl Structure for RootedStructure {
    fn sort_key(&self) -> &str {
        &self.code
    }

    fn canonical_code(&self) -> String {
        self.radical_code()
    }

    fn heavy_size(&self) -> usize {
        self.heavy_size
    }

    fn atom_counts(&self) -> AtomCounts {
        let mut counts = AtomCounts::default();
        count_atoms(self, &mut counts);
        counts
    }
}

fn count_atoms(node: &RootedStructure, counts: &mut AtomCounts) {
    counts.add_atom(node.kind);
    for child in &node.children {
        count_atoms(child, counts);
    }
}
