//! Exact enumeration and exhaustive generation of saturated acyclic
//! molecules built from H, C, N, O and F.
//!
//! The same recurrences are evaluated twice: once over truncated integer
//! power series ([`counting`]) to count structures by heavy-atom degree,
//! and once over canonical trees ([`structure`]) to emit every rooted
//! radical and free molecule exactly once. An independent brute-force
//! [`oracle`] certifies that the two routes agree on small instances.
//!
//! ```
//! use molegen_core::element::AtomKind;
//! use molegen_core::counting::solve_rooted_series;
//! use molegen_core::structure::grow_rooted;
//!
//! let elements = [AtomKind::C];
//! let series = solve_rooted_series(&elements, false, 3).unwrap();
//! let set = grow_rooted(&elements, false, 3);
//! // two propyl radicals, both ways
//! assert_eq!(series.total_degree_coeffs()[3], 2u32.into());
//! assert_eq!(set.counts()[3], 2);
//! ```

pub mod counting;
pub mod element;
pub mod error;
pub mod formats;
pub mod oracle;
pub mod series;
pub mod structure;

pub use element::{AtomCounts, AtomKind, ElementVector};
pub use error::{Error, Result};
pub use series::{CycleIndex, GradedSeries};
