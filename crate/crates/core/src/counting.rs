//! The counting side: rooted-radical series, rooted-tree series, Otter
//! unrooting, and the dissimilarity-characteristic unrooting into free
//! molecules.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::element::{AtomKind, ElementVector};
use crate::error::Result;
use crate::series::{CycleIndex, GradedSeries};

/// The leaf (padding) term the rooted iteration is seeded with: H, plus a
/// degree-zero F monomial when fluorine participates.
pub fn leaf_term(include_f: bool, n_max: usize) -> GradedSeries {
    let mut leaf = GradedSeries::one(n_max);
    if include_f {
        leaf = leaf
            .add(&GradedSeries::monomial(
                n_max,
                ElementVector::single(AtomKind::F),
                1u32,
            ))
            .expect("same bound");
    }
    leaf
}

fn check_elements(elements: &[AtomKind]) {
    assert!(!elements.is_empty(), "element set must be nonempty");
    assert!(
        elements.iter().all(|e| e.is_heavy()),
        "element set must contain heavy atoms only"
    );
}

/// One application of the update map
/// `a <- leaf + sum_e e * Z(S_branch(e); a)`.
fn rooted_update(
    elements: &[AtomKind],
    leaf: &GradedSeries,
    a: &GradedSeries,
) -> Result<GradedSeries> {
    let n_max = a.n_max();
    let mut next = leaf.clone();
    for &element in elements {
        let index = CycleIndex::symmetric(element.branch_count());
        let branches = index.apply(a)?;
        let rooted = GradedSeries::monomial(n_max, ElementVector::single(element), 1u32)
            .mul(&branches)?;
        next = next.add(&rooted)?;
    }
    Ok(next)
}

/// Run a fixed number of iterations from the seed. Iteration `n` fixes all
/// coefficients of heavy degree `<= n`.
pub fn rooted_series_iterations(
    elements: &[AtomKind],
    include_f: bool,
    n_max: usize,
    steps: usize,
) -> Result<GradedSeries> {
    check_elements(elements);
    let leaf = leaf_term(include_f, n_max);
    let mut a = leaf.clone();
    for _ in 0..steps {
        a = rooted_update(elements, &leaf, &a)?;
    }
    Ok(a)
}

/// Solve the rooted-radical equation to its fixed point: the series whose
/// coefficient at an element vector counts valence-exact rooted structures
/// with that composition. Convergence is literal equality of consecutive
/// iterates.
pub fn solve_rooted_series(
    elements: &[AtomKind],
    include_f: bool,
    n_max: usize,
) -> Result<GradedSeries> {
    check_elements(elements);
    let leaf = leaf_term(include_f, n_max);
    let mut a = leaf.clone();
    loop {
        let next = rooted_update(elements, &leaf, &a)?;
        if next == a {
            return Ok(a);
        }
        a = next;
    }
}

/// Unlabeled rooted trees by node count, via the Euler-transform
/// coefficient recurrence for f = x * MSET(f). The internal division by n
/// is exact for genuine tree counts.
pub fn rooted_trees_series(n_max: usize) -> GradedSeries {
    let mut t = vec![BigUint::zero(); n_max + 1];
    if n_max >= 1 {
        t[1] = BigUint::from(1u32);
    }
    for n in 1..n_max {
        // s[k] = sum over divisors d of k of d * t[d]
        let mut sum = BigUint::zero();
        for k in 1..=n {
            let mut s_k = BigUint::zero();
            for d in 1..=k {
                if k % d == 0 {
                    s_k += &t[d] * BigUint::from(d);
                }
            }
            sum += s_k * &t[n + 1 - k];
        }
        let (quot, rem) = sum.div_rem(&BigUint::from(n));
        assert!(rem.is_zero(), "Euler transform division must be exact");
        t[n + 1] = quot;
    }
    let mut out = GradedSeries::zero(n_max);
    for (n, coeff) in t.into_iter().enumerate() {
        if !coeff.is_zero() {
            out = out
                .add(&GradedSeries::monomial(
                    n_max,
                    ElementVector::single(AtomKind::C).scaled(n),
                    coeff,
                ))
                .expect("same bound");
        }
    }
    out
}

/// Otter's formula F = f - (f^2 - f(x^2)) / 2: free trees from rooted trees.
pub fn otter_unroot(f: &GradedSeries) -> Result<GradedSeries> {
    let squared = f.mul(f)?;
    let doubled = f.plethysm_power(2);
    let half = squared
        .checked_sub(&doubled, "Otter bracket")?
        .div_exact(2)?;
    f.checked_sub(&half, "Otter unrooting")
}

/// The four series of the dissimilarity-characteristic unrooting.
#[derive(Debug, Clone)]
pub struct DctSeries {
    /// p: molecules with one heavy node labeled.
    pub node_labeled: GradedSeries,
    /// q: molecules with one heavy edge labeled.
    pub edge_labeled: GradedSeries,
    /// r: molecules whose labeled edge joins two isomorphic halves.
    pub symmetric_edge: GradedSeries,
    /// phi = p - q + r: free molecules.
    pub free: GradedSeries,
}

/// Unroot a rooted-radical series into free-molecule counts:
/// p sums `e * Z(S_valence(e); a)` over the heavy elements,
/// q = ((a - leaf)^2 + (a - leaf)(x^2)) / 2, r = (a - leaf)(x^2),
/// and phi = p - q + r.
pub fn dct_unroot(a: &GradedSeries, elements: &[AtomKind], include_f: bool) -> Result<DctSeries> {
    check_elements(elements);
    let n_max = a.n_max();
    let leaf = leaf_term(include_f, n_max);
    let radicals = a.checked_sub(&leaf, "heavy-rooted radicals")?;

    let mut node_labeled = GradedSeries::zero(n_max);
    for &element in elements {
        let index = CycleIndex::symmetric(element.valence());
        let branches = index.apply(a)?;
        let rooted = GradedSeries::monomial(n_max, ElementVector::single(element), 1u32)
            .mul(&branches)?;
        node_labeled = node_labeled.add(&rooted)?;
    }

    let symmetric_edge = radicals.plethysm_power(2);
    let edge_labeled = radicals
        .mul(&radicals)?
        .add(&symmetric_edge)?
        .div_exact(2)?;
    let free = node_labeled
        .add(&symmetric_edge)?
        .checked_sub(&edge_labeled, "free-molecule count")?;

    Ok(DctSeries {
        node_labeled,
        edge_labeled,
        symmetric_edge,
        free,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(series: &GradedSeries) -> Vec<u64> {
        series
            .total_degree_coeffs()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn alkyl_radicals_through_degree_four() {
        let a = solve_rooted_series(&[AtomKind::C], false, 4).unwrap();
        assert_eq!(coeffs(&a), vec![1, 1, 1, 2, 4]);
    }

    #[test]
    fn two_iterations_fix_only_low_degrees() {
        let a = rooted_series_iterations(&[AtomKind::C], false, 4, 2).unwrap();
        // 1 + x + x^2 + x^3 + x^4, of which only degrees <= 2 are final
        assert_eq!(coeffs(&a), vec![1, 1, 1, 1, 1]);
        let solved = solve_rooted_series(&[AtomKind::C], false, 4).unwrap();
        assert_eq!(coeffs(&a)[..3], coeffs(&solved)[..3]);
    }

    #[test]
    fn fixed_point_property() {
        let a = solve_rooted_series(&[AtomKind::C, AtomKind::N], false, 6).unwrap();
        let leaf = leaf_term(false, 6);
        let again = rooted_update(&[AtomKind::C, AtomKind::N], &leaf, &a).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn alkyl_bracket_reproduces_tail() {
        // x * Z(S3; a) == a - 1 for the alkyl series
        let a = solve_rooted_series(&[AtomKind::C], false, 8).unwrap();
        let bracket = CycleIndex::symmetric(3).apply(&a).unwrap();
        let shifted = GradedSeries::monomial(8, ElementVector::single(AtomKind::C), 1u32)
            .mul(&bracket)
            .unwrap();
        let tail = a.checked_sub(&GradedSeries::one(8), "tail").unwrap();
        assert_eq!(shifted, tail);
    }

    #[test]
    fn chno_rooted_series_published_values() {
        let a = solve_rooted_series(&AtomKind::HEAVY, false, 10).unwrap();
        assert_eq!(
            coeffs(&a),
            vec![1, 3, 9, 39, 181, 921, 4920, 27408, 156948, 919361, 5480371]
        );
    }

    #[test]
    fn chno_free_series_published_values() {
        let a = solve_rooted_series(&AtomKind::HEAVY, false, 10).unwrap();
        let dct = dct_unroot(&a, &AtomKind::HEAVY, false).unwrap();
        assert_eq!(
            coeffs(&dct.free),
            vec![0, 3, 6, 18, 65, 258, 1140, 5436, 27262, 142311, 766073]
        );
    }

    #[test]
    fn butane_dct_breakdown() {
        let a = solve_rooted_series(&[AtomKind::C], false, 4).unwrap();
        let dct = dct_unroot(&a, &[AtomKind::C], false).unwrap();
        assert_eq!(coeffs(&dct.node_labeled)[4], 4);
        assert_eq!(coeffs(&dct.edge_labeled)[4], 3);
        assert_eq!(coeffs(&dct.symmetric_edge)[4], 1);
        assert_eq!(coeffs(&dct.free)[4], 2);
    }

    #[test]
    fn methane_is_the_only_one_carbon_alkane() {
        let a = solve_rooted_series(&[AtomKind::C], false, 1).unwrap();
        let dct = dct_unroot(&a, &[AtomKind::C], false).unwrap();
        assert_eq!(coeffs(&dct.free)[1], 1);
    }

    #[test]
    fn chno_degree_one_slices() {
        let a = solve_rooted_series(&AtomKind::HEAVY, false, 1).unwrap();
        let dct = dct_unroot(&a, &AtomKind::HEAVY, false).unwrap();
        assert_eq!(coeffs(&a)[1], 3);
        assert_eq!(coeffs(&dct.free)[1], 3);
    }

    #[test]
    fn rooted_trees_small_counts() {
        // frozen from the ordered-tree brute-force oracle (see acceptance)
        let f = rooted_trees_series(7);
        assert_eq!(coeffs(&f), vec![0, 1, 1, 2, 4, 9, 20, 48]);
    }

    #[test]
    fn free_trees_small_counts() {
        let f = rooted_trees_series(10);
        let free = otter_unroot(&f).unwrap();
        assert_eq!(coeffs(&free), vec![0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn fluorinated_leaf_seeds_two_terms() {
        let a = solve_rooted_series(&[AtomKind::C], true, 2).unwrap();
        let degree_zero: u64 = a
            .iter()
            .filter(|(k, _)| k.total() == 0)
            .map(|(_, c)| u64::try_from(c).unwrap())
            .sum();
        // .H and .F
        assert_eq!(degree_zero, 2);
        // one-carbon radicals: .CH3, .CH2F, .CHF2, .CF3
        assert_eq!(coeffs(&a)[1], 4);
    }
}
