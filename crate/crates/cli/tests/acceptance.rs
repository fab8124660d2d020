//! Acceptance suite: one test per release criterion, each printing a
//! pass line (run with `--nocapture` to see them).

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use molegen_core::counting::{dct_unroot, otter_unroot, rooted_trees_series, solve_rooted_series};
use molegen_core::element::AtomKind;
use molegen_core::oracle::{compare, oracle_free, oracle_rooted};
use molegen_core::structure::{
    assemble_free, grow_rooted, heavy_orbits, parse_code, Structure,
};

fn coeffs(series: &molegen_core::series::GradedSeries) -> Vec<BigUint> {
    series.total_degree_coeffs()
}

fn big(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

fn element_subsets() -> Vec<Vec<AtomKind>> {
    let mut out = Vec::new();
    for mask in 1u8..8 {
        out.push(
            AtomKind::HEAVY
                .into_iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e)
                .collect(),
        );
    }
    out
}

#[test]
fn criterion_01_rooted_chno_series_regression() {
    let start = Instant::now();
    let a = solve_rooted_series(&AtomKind::HEAVY, false, 10).unwrap();
    assert_eq!(
        coeffs(&a),
        big(&[1, 3, 9, 39, 181, 921, 4920, 27408, 156948, 919361, 5480371])
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS criterion 1: rooted CHNO series, degrees 0..=10, in {elapsed:?}");
}

#[test]
fn criterion_02_free_chno_series_regression() {
    let start = Instant::now();
    let a = solve_rooted_series(&AtomKind::HEAVY, false, 10).unwrap();
    let phi = dct_unroot(&a, &AtomKind::HEAVY, false).unwrap().free;
    assert_eq!(
        coeffs(&phi),
        big(&[0, 3, 6, 18, 65, 258, 1140, 5436, 27262, 142311, 766073])
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS criterion 2: free CHNO series, degrees 1..=10, in {elapsed:?}");
}

#[test]
fn criterion_03_butane_dct_decomposition() {
    let a = solve_rooted_series(&[AtomKind::C], false, 4).unwrap();
    let dct = dct_unroot(&a, &[AtomKind::C], false).unwrap();
    let at = |series| coeffs(series).swap_remove(4);
    assert_eq!(at(&dct.node_labeled), BigUint::from(4u32));
    assert_eq!(at(&dct.edge_labeled), BigUint::from(3u32));
    assert_eq!(at(&dct.symmetric_edge), BigUint::from(1u32));
    assert_eq!(at(&dct.free), BigUint::from(2u32));
    println!("PASS criterion 3: butane decomposition (p, q, r, phi) = (4, 3, 1, 2)");
}

#[test]
fn criterion_04_generation_counting_agreement() {
    let start = Instant::now();
    let n_max = 8;
    for elements in element_subsets() {
        let a = solve_rooted_series(&elements, false, n_max).unwrap();
        let rooted = grow_rooted(&elements, false, n_max);
        rooted.check_against(&a, 0).unwrap();

        let phi = dct_unroot(&a, &elements, false).unwrap().free;
        let free = assemble_free(&rooted, &elements, n_max);
        free.check_against(&phi, 1).unwrap();
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("PASS criterion 4: catalog slices equal series coefficients, n <= 8, in {elapsed:?}");
}

#[test]
fn criterion_05_oracle_equivalence() {
    for elements in element_subsets() {
        let engine = grow_rooted(&elements, false, 6);
        let brute = oracle_rooted(&elements, false, 6);
        let report = compare(&engine, &brute);
        assert!(report.pass(), "rooted {elements:?}:\n{report}");

        let pool = grow_rooted(&elements, false, 2);
        let engine = assemble_free(&pool, &elements, 5);
        let brute = oracle_free(&elements, false, 5);
        let report = compare(&engine, &brute);
        assert!(report.pass(), "free {elements:?}:\n{report}");
    }
    println!("PASS criterion 5: oracle and engine sets identical, rooted <= 6, free <= 5");
}

#[test]
fn criterion_06_per_molecule_dct_identity() {
    let mut checked = 0usize;
    for (elements, include_f, bound) in [
        (vec![AtomKind::C], false, 7),
        (AtomKind::HEAVY.to_vec(), false, 7),
        (vec![AtomKind::C], true, 5),
        (AtomKind::HEAVY.to_vec(), true, 5),
    ]
    .into_iter()
    .chain(element_subsets().into_iter().map(|e| (e, false, 6)))
    {
        let pool = grow_rooted(&elements, include_f, bound / 2);
        let free = assemble_free(&pool, &elements, bound);
        for molecule in free.iter() {
            let (p1, q1, r1) = heavy_orbits(molecule);
            assert_eq!(
                p1 + r1,
                q1 + 1,
                "identity fails for {}",
                molecule.canonical_code()
            );
            checked += 1;
        }
    }
    println!("PASS criterion 6: p1 - q1 + r1 = 1 for all {checked} generated molecules");
}

/// Brute-force tree counts, independent of the Euler-transform recurrence:
/// canonical codes of all rooted trees built from ordered child lists, and
/// free trees deduplicated by the minimum code over all rootings.
mod tree_oracle {
    use std::collections::BTreeSet;

    /// Canonical codes of unlabeled rooted trees with 1..=n_max nodes.
    pub fn rooted_codes(n_max: usize) -> Vec<BTreeSet<String>> {
        let mut by_size: Vec<BTreeSet<String>> = vec![BTreeSet::new(); n_max + 1];
        if n_max >= 1 {
            by_size[1].insert("()".to_string());
        }
        for size in 2..=n_max {
            let mut codes = BTreeSet::new();
            let mut children = Vec::new();
            ordered_forests(size - 1, &by_size, &mut children, &mut codes);
            by_size[size] = codes;
        }
        by_size
    }

    /// Every ORDERED list of subtrees with the given total size; the code
    /// is canonicalized by sorting only at the very end.
    fn ordered_forests(
        remaining: usize,
        by_size: &[BTreeSet<String>],
        children: &mut Vec<String>,
        codes: &mut BTreeSet<String>,
    ) {
        if remaining == 0 {
            let mut sorted = children.clone();
            sorted.sort();
            codes.insert(format!("({})", sorted.concat()));
            return;
        }
        for first in 1..=remaining {
            for code in &by_size[first] {
                children.push(code.clone());
                ordered_forests(remaining - first, by_size, children, codes);
                children.pop();
            }
        }
    }

    /// Free-tree counts via exhaustive re-rooting: isomorphic free trees
    /// share the minimum rooted code over all roots.
    pub fn free_counts(n_max: usize) -> Vec<usize> {
        let rooted = rooted_codes(n_max);
        let mut counts = vec![0usize; n_max + 1];
        for size in 1..=n_max {
            let mut keys = BTreeSet::new();
            for code in &rooted[size] {
                let adjacency = parse_tree(code);
                let key = (0..adjacency.len())
                    .map(|v| code_at(&adjacency, v, usize::MAX))
                    .min()
                    .expect("nonempty tree");
                keys.insert(key);
            }
            counts[size] = keys.len();
        }
        counts
    }

    fn parse_tree(code: &str) -> Vec<Vec<usize>> {
        let mut adjacency: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        for byte in code.bytes() {
            match byte {
                b'(' => {
                    adjacency.push(Vec::new());
                    let node = adjacency.len() - 1;
                    if let Some(&parent) = stack.last() {
                        adjacency[parent].push(node);
                        adjacency[node].push(parent);
                    }
                    stack.push(node);
                }
                b')' => {
                    stack.pop();
                }
                _ => unreachable!(),
            }
        }
        adjacency
    }

    fn code_at(adjacency: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut children: Vec<String> = adjacency[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| code_at(adjacency, u, v))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }
}

#[test]
fn criterion_07_tree_series_match_brute_force() {
    let n_max = 10;
    let rooted_counts: Vec<BigUint> = tree_oracle::rooted_codes(n_max)
        .iter()
        .map(|codes| BigUint::from(codes.len()))
        .collect();
    assert_eq!(coeffs(&rooted_trees_series(n_max)), rooted_counts);

    let free_counts: Vec<BigUint> = tree_oracle::free_counts(n_max)
        .into_iter()
        .map(BigUint::from)
        .collect();
    let free = otter_unroot(&rooted_trees_series(n_max)).unwrap();
    assert_eq!(coeffs(&free), free_counts);
    println!("PASS criterion 7: tree series match the brute-force oracle, n <= 10");
}

#[test]
fn criterion_08_propyl_distinctness() {
    let set = grow_rooted(&[AtomKind::C], false, 3);
    let codes: BTreeSet<String> = set.degree(3).map(|s| s.canonical_code()).collect();
    assert_eq!(codes.len(), 2);
    assert_eq!(
        codes.into_iter().collect::<Vec<_>>(),
        vec!["*C(C(C(H,H,H),H,H),H,H)", "*C(C(H,H,H),C(H,H,H),H)"]
    );
    println!("PASS criterion 8: exactly 2 distinct propyl radicals");
}

#[test]
fn criterion_09_determinism_and_round_trip() {
    let bin = env!("CARGO_BIN_EXE_molegen");
    let dir = tempfile::tempdir().unwrap();
    for args in [
        ["generate", "--family", "chno", "--free", "--max", "5"],
        ["generate", "--family", "alkane", "--free", "--max", "8"],
        ["generate", "--family", "chnof", "--rooted", "--max", "4"],
    ] {
        let mut catalogs = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("catalog-{run}"));
            let status = Command::new(bin)
                .args(args)
                .arg("--out")
                .arg(&path)
                .status()
                .unwrap();
            assert!(status.success());
            catalogs.push(std::fs::read(&path).unwrap());
        }
        assert_eq!(catalogs[0], catalogs[1], "catalogs differ for {args:?}");
        assert!(!catalogs[0].is_empty());
    }

    let rooted = grow_rooted(&AtomKind::HEAVY, true, 6);
    let pool = grow_rooted(&AtomKind::HEAVY, true, 3);
    let free = assemble_free(&pool, &AtomKind::HEAVY, 6);
    let mut records = 0usize;
    for code in rooted
        .iter()
        .map(|s| s.canonical_code())
        .chain(free.iter().map(|s| s.canonical_code()))
    {
        assert_eq!(parse_code(&code).unwrap().canonical_code(), code);
        records += 1;
    }
    println!("PASS criterion 9: byte-identical catalogs; {records} codes round-trip");
}

#[test]
fn criterion_10_hydrogen_count_law() {
    let rooted = grow_rooted(&AtomKind::HEAVY, true, 5);
    for structure in rooted.iter() {
        let c = structure.atom_counts();
        assert_eq!(
            c.h + c.f,
            2 * c.c + c.n + 1,
            "rooted law fails for {}",
            structure.canonical_code()
        );
    }
    let pool = grow_rooted(&AtomKind::HEAVY, true, 3);
    let free = assemble_free(&pool, &AtomKind::HEAVY, 6);
    for molecule in free.iter() {
        let c = molecule.atom_counts();
        assert_eq!(
            c.h + c.f,
            2 * c.c + c.n + 2,
            "free law fails for {}",
            molecule.canonical_code()
        );
    }
    println!("PASS criterion 10: hydrogen-count laws hold on every record");
}
