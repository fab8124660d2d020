//! Structural reinterpretation of the counting recurrences: unordered
//! branch multisets instead of cycle-index terms.

use std::rc::Rc;

use crate::element::AtomKind;

use super::free::FreeStructure;
use super::rooted::RootedStructure;
use super::{Structure, StructureSet};

/// One degree class of a branch pool: (heavy size, members in code order).
type Classes<'a, T> = Vec<(usize, Vec<&'a Rc<T>>)>;

fn classes_up_to<'a, T: Structure>(
    pool: &'a StructureSet<T>,
    max_degree: usize,
) -> Classes<'a, T> {
    (0..=max_degree.min(pool.n_max()))
        .map(|d| (d, pool.degree(d).collect()))
        .collect()
}

/// Enumerate every multiset of `k` members whose heavy sizes sum to a value
/// in `min_sum..=max_sum`, each exactly once, calling `emit` for each.
///
/// Order is deterministic: per degree class (ascending) the member count is
/// chosen from high to low, then members expand in code order. Count
/// vectors are pruned before any member expansion, so the cost is
/// proportional to the number of multisets emitted.
fn for_each_multiset<T: Structure>(
    classes: &Classes<'_, T>,
    k: usize,
    min_sum: usize,
    max_sum: usize,
    emit: &mut impl FnMut(&[Rc<T>]),
) {
    let mut count_vector = vec![0usize; classes.len()];
    enumerate_counts(classes, 0, k, min_sum, max_sum, &mut count_vector, emit);
}

fn enumerate_counts<T: Structure>(
    classes: &Classes<'_, T>,
    class_idx: usize,
    k_left: usize,
    min_sum: usize,
    max_sum: usize,
    count_vector: &mut Vec<usize>,
    emit: &mut impl FnMut(&[Rc<T>]),
) {
    if k_left == 0 {
        if min_sum == 0 {
            expand_counts(classes, count_vector, &mut Vec::new(), 0, emit);
        }
        return;
    }
    if class_idx == classes.len() {
        return;
    }
    // Remaining classes all have degree >= this one, so the achievable sum
    // over the remaining picks is bounded below by k_left * degree here and
    // above by k_left * highest remaining degree.
    let (degree, ref members) = classes[class_idx];
    let top_degree = classes.last().map(|(d, _)| *d).unwrap_or(0);
    let upper = if degree == 0 {
        k_left
    } else {
        (max_sum / degree).min(k_left)
    };
    for count in (0..=upper).rev() {
        let used = count * degree;
        if used > max_sum {
            continue;
        }
        let rest = k_left - count;
        // the remaining picks cannot exceed rest * top_degree
        if min_sum > used + rest * top_degree {
            continue;
        }
        if members.is_empty() && count > 0 {
            continue;
        }
        count_vector[class_idx] = count;
        enumerate_counts(
            classes,
            class_idx + 1,
            rest,
            min_sum.saturating_sub(used),
            max_sum - used,
            count_vector,
            emit,
        );
        count_vector[class_idx] = 0;
    }
}

/// Expand a feasible count vector into concrete multisets: within each
/// class, combinations with repetition in nondecreasing member order.
fn expand_counts<T: Structure>(
    classes: &Classes<'_, T>,
    count_vector: &[usize],
    chosen: &mut Vec<Rc<T>>,
    class_idx: usize,
    emit: &mut impl FnMut(&[Rc<T>]),
) {
    if class_idx == classes.len() {
        emit(chosen);
        return;
    }
    let count = count_vector[class_idx];
    let members = &classes[class_idx].1;
    combos_with_repetition(members, count, 0, chosen, &mut |chosen| {
        expand_counts(classes, count_vector, chosen, class_idx + 1, emit);
    });
}

fn combos_with_repetition<T>(
    members: &[&Rc<T>],
    count: usize,
    start: usize,
    chosen: &mut Vec<Rc<T>>,
    emit: &mut impl FnMut(&mut Vec<Rc<T>>),
) {
    if count == 0 {
        emit(chosen);
        return;
    }
    for i in start..members.len() {
        chosen.push(Rc::clone(members[i]));
        combos_with_repetition(members, count - 1, i, chosen, emit);
        chosen.pop();
    }
}

/// Every multiset of `k` pool members (repetition allowed) whose heavy
/// sizes sum to at most `degree_budget`, each exactly once, in
/// deterministic order.
pub fn k_multisets<T: Structure>(
    pool: &StructureSet<T>,
    k: usize,
    degree_budget: usize,
) -> Vec<Vec<Rc<T>>> {
    let classes = classes_up_to(pool, degree_budget);
    let mut out = Vec::new();
    for_each_multiset(&classes, k, 0, degree_budget, &mut |ms| {
        out.push(ms.to_vec());
    });
    out
}

fn heavy_elements(elements: &[AtomKind]) -> Vec<AtomKind> {
    assert!(!elements.is_empty(), "element set must be nonempty");
    assert!(
        elements.iter().all(|e| e.is_heavy()),
        "element set must contain heavy atoms only"
    );
    AtomKind::HEAVY
        .into_iter()
        .filter(|e| elements.contains(e))
        .collect()
}

/// Generate every valence-exact rooted structure with heavy size at most
/// `n_max` over the element set, each exactly once. Degree `d` structures
/// are a heavy root over a branch multiset of total size `d - 1`, so every
/// slice is complete once built.
pub fn grow_rooted(
    elements: &[AtomKind],
    include_f: bool,
    n_max: usize,
) -> StructureSet<RootedStructure> {
    let elements = heavy_elements(elements);
    let mut set = StructureSet::new(n_max);
    set.insert(RootedStructure::leaf(AtomKind::H));
    if include_f {
        set.insert(RootedStructure::leaf(AtomKind::F));
    }
    for degree in 1..=n_max {
        let mut grown = Vec::new();
        {
            let classes = classes_up_to(&set, degree - 1);
            for &element in &elements {
                for_each_multiset(
                    &classes,
                    element.branch_count(),
                    degree - 1,
                    degree - 1,
                    &mut |branches| {
                        grown.push(RootedStructure::branch(element, branches.to_vec()));
                    },
                );
            }
        }
        for structure in grown {
            set.insert(structure);
        }
    }
    set
}

/// Assemble every free molecule with 1..=n_max heavy atoms from a complete
/// rooted pool: centroid-node candidates obey the branch bound, bicentroid
/// candidates are unordered pairs of equal-size heavy-rooted halves. The
/// rooted pool must be complete through floor(n_max / 2).
pub fn assemble_free(
    rooted: &StructureSet<RootedStructure>,
    elements: &[AtomKind],
    n_max: usize,
) -> StructureSet<FreeStructure> {
    let elements = heavy_elements(elements);
    assert!(
        rooted.n_max() >= n_max / 2,
        "rooted pool must be complete through floor(n_max / 2)"
    );
    let mut set = StructureSet::new(n_max);
    for degree in 1..=n_max {
        let bound = (degree - 1) / 2;
        let mut built = Vec::new();
        let classes = classes_up_to(rooted, bound);
        for &element in &elements {
            for_each_multiset(
                &classes,
                element.valence(),
                degree - 1,
                degree - 1,
                &mut |branches| {
                    built.push(FreeStructure::node_centered(element, branches.to_vec()));
                },
            );
        }
        if degree % 2 == 0 {
            let halves: Vec<&Rc<RootedStructure>> = rooted.degree(degree / 2).collect();
            for i in 0..halves.len() {
                for j in i..halves.len() {
                    built.push(FreeStructure::edge_centered(
                        Rc::clone(halves[i]),
                        Rc::clone(halves[j]),
                    ));
                }
            }
        }
        for structure in built {
            set.insert(structure);
        }
    }
    set
}
