//! Independent brute-force regeneration of small instances.
//!
//! The oracle shares only the code grammar with the generator: it builds
//! ordered child tuples instead of multisets, and canonicalizes free
//! molecules by exhaustive re-rooting instead of constructing them at the
//! centroid. Agreement certifies that the engine is exclusive and
//! exhaustive.

use std::collections::BTreeSet;
use std::fmt;
use std::rc::Rc;

use crate::element::AtomKind;
use crate::structure::{parse_code, FreeStructure, Parsed, RootedStructure, Structure, StructureSet};

/// Per-degree engine/oracle comparison with the exact code differences.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub per_degree: Vec<DegreeCounts>,
    /// Codes the oracle produced but the engine did not.
    pub missing: Vec<String>,
    /// Codes the engine produced but the oracle did not.
    pub extra: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct DegreeCounts {
    pub degree: usize,
    pub engine: usize,
    pub oracle: usize,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.missing.is_empty()
            && self.extra.is_empty()
            && self.per_degree.iter().all(|d| d.engine == d.oracle)
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", if self.pass() { "pass" } else { "FAIL" })?;
        for counts in &self.per_degree {
            writeln!(
                f,
                "degree {}: engine {} oracle {}",
                counts.degree, counts.engine, counts.oracle
            )?;
        }
        for code in &self.missing {
            writeln!(f, "missing from engine: {code}")?;
        }
        for code in &self.extra {
            writeln!(f, "extra in engine: {code}")?;
        }
        Ok(())
    }
}

/// Symmetric difference of two structure sets by canonical code.
pub fn compare<T: Structure>(engine: &StructureSet<T>, oracle: &StructureSet<T>) -> OracleReport {
    let n_max = engine.n_max().min(oracle.n_max());
    let mut report = OracleReport {
        per_degree: Vec::new(),
        missing: Vec::new(),
        extra: Vec::new(),
    };
    for degree in 0..=n_max {
        let engine_codes: BTreeSet<String> = engine
            .degree(degree)
            .map(|s| s.canonical_code())
            .collect();
        let oracle_codes: BTreeSet<String> = oracle
            .degree(degree)
            .map(|s| s.canonical_code())
            .collect();
        report.per_degree.push(DegreeCounts {
            degree,
            engine: engine_codes.len(),
            oracle: oracle_codes.len(),
        });
        report
            .missing
            .extend(oracle_codes.difference(&engine_codes).cloned());
        report
            .extra
            .extend(engine_codes.difference(&oracle_codes).cloned());
    }
    report
}

fn ordered_elements(elements: &[AtomKind]) -> Vec<AtomKind> {
    assert!(!elements.is_empty(), "element set must be nonempty");
    assert!(elements.iter().all(|e| e.is_heavy()));
    AtomKind::HEAVY
        .into_iter()
        .filter(|e| elements.contains(e))
        .collect()
}

/// Ordered k-tuples of nonnegative sizes summing to `total`.
fn compositions(total: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Brute-force rooted generation: every ORDERED child tuple is built and
/// deduplication happens purely through the canonical code.
pub fn oracle_rooted(
    elements: &[AtomKind],
    include_f: bool,
    n_max: usize,
) -> StructureSet<RootedStructure> {
    let elements = ordered_elements(elements);
    let mut set = StructureSet::new(n_max);
    set.insert(RootedStructure::leaf(AtomKind::H));
    if include_f {
        set.insert(RootedStructure::leaf(AtomKind::F));
    }
    for degree in 1..=n_max {
        let mut built = Vec::new();
        {
            let pools: Vec<Vec<&Rc<RootedStructure>>> =
                (0..degree).map(|d| set.degree(d).collect()).collect();
            for &element in &elements {
                let k = element.branch_count();
                for sizes in compositions(degree - 1, k) {
                    let mut tuple: Vec<Rc<RootedStructure>> = Vec::with_capacity(k);
                    cartesian(&pools, &sizes, 0, &mut tuple, &mut |children| {
                        built.push(RootedStructure::branch(element, children.to_vec()));
                    });
                }
            }
        }
        for structure in built {
            set.insert(structure);
        }
    }
    set
}

fn cartesian(
    pools: &[Vec<&Rc<RootedStructure>>],
    sizes: &[usize],
    idx: usize,
    tuple: &mut Vec<Rc<RootedStructure>>,
    emit: &mut impl FnMut(&[Rc<RootedStructure>]),
) {
    if idx == sizes.len() {
        emit(tuple);
        return;
    }
    for member in &pools[sizes[idx]] {
        tuple.push(Rc::clone(member));
        cartesian(pools, sizes, idx + 1, tuple, emit);
        tuple.pop();
    }
}

/// The oracle's own adjacency view; deliberately not shared with the
/// structure domain.
struct Graph {
    kinds: Vec<AtomKind>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    fn new() -> Graph {
        Graph {
            kinds: Vec::new(),
            adjacency: Vec::new(),
        }
    }

    fn add_atom(&mut self, kind: AtomKind) -> usize {
        self.kinds.push(kind);
        self.adjacency.push(Vec::new());
        self.kinds.len() - 1
    }

    fn bond(&mut self, a: usize, b: usize) {
        self.adjacency[a].push(b);
        self.adjacency[b].push(a);
    }

    fn add_tree(&mut self, node: &RootedStructure) -> usize {
        let idx = self.add_atom(node.kind());
        for child in node.children() {
            let child_idx = self.add_tree(child);
            self.bond(idx, child_idx);
        }
        idx
    }

    fn heavy_count(&self) -> usize {
        self.kinds.iter().filter(|k| k.is_heavy()).count()
    }

    fn heavy_subtree_size(&self, v: usize, parent: usize) -> usize {
        let own = usize::from(self.kinds[v].is_heavy());
        self.adjacency[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| self.heavy_subtree_size(u, v))
            .sum::<usize>()
            + own
    }

    fn code_at(&self, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = self.adjacency[v]
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| self.code_at(u, Some(v)))
            .collect();
        if children.is_empty() {
            return self.kinds[v].symbol().to_string();
        }
        children.sort();
        format!("{}({})", self.kinds[v].symbol(), children.join(","))
    }

    /// Canonical code found by re-rooting at every heavy atom and every
    /// heavy edge: the rooting whose largest remaining heavy component is
    /// smallest is the centroid, a node or a single central edge.
    fn canonical_free_code(&self) -> String {
        let n = self.heavy_count();
        assert!(n >= 1);
        for v in 0..self.kinds.len() {
            if !self.kinds[v].is_heavy() {
                continue;
            }
            let worst = self.adjacency[v]
                .iter()
                .map(|&u| self.heavy_subtree_size(u, v))
                .max()
                .unwrap_or(0);
            if worst <= (n - 1) / 2 {
                return format!("!{}", self.code_at(v, None));
            }
        }
        // bicentroid: the unique heavy edge splitting the skeleton in half
        for v in 0..self.kinds.len() {
            for &u in &self.adjacency[v] {
                if u <= v || !self.kinds[v].is_heavy() || !self.kinds[u].is_heavy() {
                    continue;
                }
                if self.heavy_subtree_size(v, u) == n / 2 {
                    let a = self.code_at(v, Some(u));
                    let b = self.code_at(u, Some(v));
                    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                    return format!("=({lo},{hi})");
                }
            }
        }
        unreachable!("every tree has a centroid node or a bicentroid edge")
    }

    /// Plain byte-wise minimum over every heavy-node and heavy-edge
    /// rooting. Not the canonical code, but an isomorphism invariant; used
    /// to cross-check that the centroid canonicalization separates
    /// molecules exactly as an exhaustive one does.
    fn min_rooting_key(&self) -> String {
        let mut best: Option<String> = None;
        let mut consider = |candidate: String| {
            if best.as_ref().map_or(true, |b| candidate < *b) {
                best = Some(candidate);
            }
        };
        for v in 0..self.kinds.len() {
            if self.kinds[v].is_heavy() {
                consider(format!("!{}", self.code_at(v, None)));
            }
        }
        for v in 0..self.kinds.len() {
            for &u in &self.adjacency[v] {
                if u <= v || !self.kinds[v].is_heavy() || !self.kinds[u].is_heavy() {
                    continue;
                }
                let a = self.code_at(v, Some(u));
                let b = self.code_at(u, Some(v));
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                consider(format!("=({lo},{hi})"));
            }
        }
        best.expect("molecule has at least one heavy atom")
    }
}

fn graph_of_pair(left: &RootedStructure, right: &RootedStructure) -> Graph {
    let mut graph = Graph::new();
    let a = graph.add_tree(left);
    let b = graph.add_tree(right);
    graph.bond(a, b);
    graph
}

fn leaf_tuples(valence: usize, include_f: bool) -> Vec<Vec<Rc<RootedStructure>>> {
    let mut choices = vec![RootedStructure::leaf(AtomKind::H)];
    if include_f {
        choices.push(RootedStructure::leaf(AtomKind::F));
    }
    let mut out: Vec<Vec<Rc<RootedStructure>>> = vec![Vec::new()];
    for _ in 0..valence {
        out = out
            .into_iter()
            .flat_map(|tuple| {
                choices.iter().map(move |leaf| {
                    let mut next = tuple.clone();
                    next.push(Rc::clone(leaf));
                    next
                })
            })
            .collect();
    }
    out
}

/// Brute-force free generation: every bonded pair of heavy-rooted radicals
/// (single heavy atoms padded directly), canonicalized by exhaustive
/// re-rooting, then deduplicated.
pub fn oracle_free(
    elements: &[AtomKind],
    include_f: bool,
    n_max: usize,
) -> StructureSet<FreeStructure> {
    let elements = ordered_elements(elements);
    let mut codes: BTreeSet<String> = BTreeSet::new();

    if n_max >= 1 {
        for &element in &elements {
            for leaves in leaf_tuples(element.valence(), include_f) {
                let mut graph = Graph::new();
                let center = graph.add_atom(element);
                for leaf in &leaves {
                    let idx = graph.add_tree(leaf);
                    graph.bond(center, idx);
                }
                codes.insert(graph.canonical_free_code());
            }
        }
    }

    if n_max >= 2 {
        let rooted = oracle_rooted(&elements, include_f, n_max - 1);
        for total in 2..=n_max {
            for left_size in 1..=total / 2 {
                let right_size = total - left_size;
                for left in rooted.degree(left_size) {
                    for right in rooted.degree(right_size) {
                        let graph = graph_of_pair(left, right);
                        codes.insert(graph.canonical_free_code());
                    }
                }
            }
        }
    }

    let mut set = StructureSet::new(n_max);
    for code in codes {
        match parse_code(&code).expect("oracle emitted an invalid code") {
            Parsed::Free(molecule) => {
                set.insert(molecule);
            }
            Parsed::Rooted(_) => unreachable!("free codes only"),
        }
    }
    set
}

/// Both oracle canonicalizations of every pairing at the given bound:
/// (centroid code, byte-wise minimum rooting key). Exposed for the test
/// that the two induce the same partition into molecules.
pub fn canonicalization_pairs(
    elements: &[AtomKind],
    include_f: bool,
    n_max: usize,
) -> Vec<(String, String)> {
    let elements = ordered_elements(elements);
    let mut out = Vec::new();
    if n_max < 2 {
        return out;
    }
    let rooted = oracle_rooted(&elements, include_f, n_max - 1);
    for total in 2..=n_max {
        for left_size in 1..=total / 2 {
            let right_size = total - left_size;
            for left in rooted.degree(left_size) {
                for right in rooted.degree(right_size) {
                    let graph = graph_of_pair(left, right);
                    out.push((graph.canonical_free_code(), graph.min_rooting_key()));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_propyl_radicals() {
        let set = oracle_rooted(&[AtomKind::C], false, 3);
        assert_eq!(set.counts()[3], 2);
    }

    #[test]
    fn bare_hydrogen_at_degree_zero() {
        let set = oracle_rooted(&[AtomKind::C], false, 0);
        assert_eq!(set.counts()[0], 1);
    }

    #[test]
    fn nine_chno_radicals_at_degree_two() {
        let set = oracle_rooted(&AtomKind::HEAVY, false, 2);
        assert_eq!(set.counts()[2], 9);
    }

    #[test]
    fn two_butanes() {
        let set = oracle_free(&[AtomKind::C], false, 4);
        assert_eq!(set.counts()[4], 2);
    }

    #[test]
    fn three_one_heavy_molecules() {
        let set = oracle_free(&AtomKind::HEAVY, false, 1);
        assert_eq!(set.counts()[1], 3);
    }

    #[test]
    fn chno_degree_four_count() {
        let set = oracle_free(&AtomKind::HEAVY, false, 4);
        assert_eq!(set.counts()[4], 65);
    }

    #[test]
    fn compare_flags_differences() {
        let full = oracle_rooted(&[AtomKind::C], false, 3);
        let mut partial = StructureSet::new(3);
        for structure in full.iter() {
            partial.insert(Rc::clone(structure));
        }
        assert!(compare(&partial, &full).pass());

        let mut missing_one = StructureSet::new(3);
        for structure in full.iter().skip(1) {
            missing_one.insert(Rc::clone(structure));
        }
        let report = compare(&missing_one, &full);
        assert!(!report.pass());
        assert_eq!(report.missing.len(), 1);
        assert!(report.extra.is_empty());
    }

    #[test]
    fn dedup_is_idempotent() {
        let mut set = oracle_rooted(&[AtomKind::C], false, 2);
        let h = RootedStructure::leaf(AtomKind::H);
        assert!(!set.insert(h));
        assert_eq!(set.counts()[0], 1);
    }
}
