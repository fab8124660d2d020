//! The generation side: canonical valence-exact trees for radicals and
//! free molecules, and the graded deduplicated sets holding them.

mod free;
mod generate;
mod orbits;
mod parse;
mod rooted;

pub use free::{FreeCenter, FreeStructure};
pub use generate::{assemble_free, grow_rooted, k_multisets};
pub use orbits::heavy_orbits;
pub use parse::{parse_code, Parsed};
pub use rooted::RootedStructure;

use std::collections::BTreeMap;
use std::rc::Rc;

use num_bigint::BigUint;

use crate::element::AtomCounts;
use crate::error::{Error, Result};
use crate::series::GradedSeries;

/// Common surface of rooted radicals and free molecules.
pub trait Structure {
    /// Key used for ordering and deduplication within a set.
    fn sort_key(&self) -> &str;
    /// The full public line-notation code, prefix included.
    fn canonical_code(&self) -> String;
    fn heavy_size(&self) -> usize;
    fn atom_counts(&self) -> AtomCounts;
}

/// Deduplicated structures graded by heavy-atom count, iterated in
/// ascending (degree, code) order.
#[derive(Debug, Clone)]
pub struct StructureSet<T> {
    slices: Vec<BTreeMap<String, Rc<T>>>,
}

impl<T: Structure> StructureSet<T> {
    pub fn new(n_max: usize) -> StructureSet<T> {
        StructureSet {
            slices: vec![BTreeMap::new(); n_max + 1],
        }
    }

    pub fn n_max(&self) -> usize {
        self.slices.len() - 1
    }

    /// Insert, returning whether the structure was new.
    pub fn insert(&mut self, structure: Rc<T>) -> bool {
        let degree = structure.heavy_size();
        assert!(degree <= self.n_max(), "structure exceeds the set bound");
        self.slices[degree]
            .insert(structure.sort_key().to_owned(), structure)
            .is_none()
    }

    pub fn degree(&self, degree: usize) -> impl Iterator<Item = &Rc<T>> {
        self.slices[degree].values()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rc<T>> {
        self.slices.iter().flat_map(|slice| slice.values())
    }

    pub fn len(&self) -> usize {
        self.slices.iter().map(|slice| slice.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Per-degree cardinalities, index = heavy-atom count.
    pub fn counts(&self) -> Vec<usize> {
        self.slices.iter().map(|slice| slice.len()).collect()
    }

    pub fn contains(&self, degree: usize, sort_key: &str) -> bool {
        self.slices[degree].contains_key(sort_key)
    }

    /// Self-test: every degree slice from `start_degree` up must have
    /// exactly as many members as the series counts.
    pub fn check_against(&self, series: &GradedSeries, start_degree: usize) -> Result<()> {
        let coeffs = series.total_degree_coeffs();
        for degree in start_degree..=self.n_max().min(series.n_max()) {
            let actual = self.slices[degree].len();
            if BigUint::from(actual) != coeffs[degree] {
                return Err(Error::CardinalityMismatch {
                    degree,
                    expected: coeffs[degree].to_string(),
                    actual,
                });
            }
        }
        Ok(())
    }
}
