//! Per-molecule node/edge orbit counts: the structural face of the
//! dissimilarity identity p - q + r = 1.

use std::collections::BTreeSet;
use std::rc::Rc;

use crate::element::AtomKind;

use super::free::{FreeCenter, FreeStructure};
use super::rooted::RootedStructure;

/// Flat adjacency view of one molecule, H and F leaves included.
struct MoleculeGraph {
    kinds: Vec<AtomKind>,
    adjacency: Vec<Vec<usize>>,
}

impl MoleculeGraph {
    fn from_free(molecule: &FreeStructure) -> MoleculeGraph {
        let mut graph = MoleculeGraph {
            kinds: Vec::new(),
            adjacency: Vec::new(),
        };
        match molecule.center() {
            FreeCenter::Node { center, branches } => {
                let root = graph.add_node(*center);
                for branch in branches {
                    let child = graph.add_subtree(branch);
                    graph.add_edge(root, child);
                }
            }
            FreeCenter::Edge { left, right } => {
                let a = graph.add_subtree(left);
                let b = graph.add_subtree(right);
                graph.add_edge(a, b);
            }
        }
        graph
    }

    fn add_node(&mut self, kind: AtomKind) -> usize {
        self.kinds.push(kind);
        self.adjacency.push(Vec::new());
        self.kinds.len() - 1
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adjacency[a].push(b);
        self.adjacency[b].push(a);
    }

    fn add_subtree(&mut self, node: &Rc<RootedStructure>) -> usize {
        let idx = self.add_node(node.kind());
        for child in node.children() {
            let child_idx = self.add_subtree(child);
            self.add_edge(idx, child_idx);
        }
        idx
    }

    /// Code of the whole molecule rooted at `v`, `parent` excluded.
    fn rooted_code(&self, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = self.adjacency[v]
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| self.rooted_code(u, Some(v)))
            .collect();
        if children.is_empty() {
            return self.kinds[v].symbol().to_string();
        }
        children.sort();
        format!("{}({})", self.kinds[v].symbol(), children.join(","))
    }

    fn heavy_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.kinds.len()).filter(|&v| self.kinds[v].is_heavy())
    }

    fn heavy_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for v in self.heavy_nodes() {
            for &u in &self.adjacency[v] {
                if u > v && self.kinds[u].is_heavy() {
                    edges.push((v, u));
                }
            }
        }
        edges
    }
}

/// Count the orbits of heavy nodes and heavy edges under the molecule's
/// automorphisms, plus whether a heavy edge joins two isomorphic halves.
/// For every acyclic molecule, p1 - q1 + r1 = 1.
pub fn heavy_orbits(molecule: &FreeStructure) -> (usize, usize, usize) {
    let graph = MoleculeGraph::from_free(molecule);

    let node_codes: BTreeSet<String> = graph
        .heavy_nodes()
        .map(|v| graph.rooted_code(v, None))
        .collect();

    let mut edge_codes = BTreeSet::new();
    let mut symmetric_edge = 0;
    for (u, v) in graph.heavy_edges() {
        let side_u = graph.rooted_code(u, Some(v));
        let side_v = graph.rooted_code(v, Some(u));
        if side_u == side_v {
            symmetric_edge = 1;
        }
        let (lo, hi) = if side_u <= side_v {
            (side_u, side_v)
        } else {
            (side_v, side_u)
        };
        edge_codes.insert((lo, hi));
    }

    (node_codes.len(), edge_codes.len(), symmetric_edge)
}
