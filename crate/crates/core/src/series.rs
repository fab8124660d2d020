//! Truncated multivariate power series with exact integer coefficients,
//! and the symmetric-group cycle indices that drive branch counting.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::element::ElementVector;
use crate::error::{Error, Result};

/// A power series in the heavy-element variables (and F), truncated at a
/// heavy-atom degree bound. Coefficients are exact nonnegative integers;
/// an absent key is a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    n_max: usize,
    coeffs: BTreeMap<ElementVector, BigUint>,
}

impl GradedSeries {
    pub fn zero(n_max: usize) -> GradedSeries {
        GradedSeries {
            n_max,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant series 1.
    pub fn one(n_max: usize) -> GradedSeries {
        GradedSeries::monomial(n_max, ElementVector::ZERO, 1u32)
    }

    pub fn monomial(n_max: usize, key: ElementVector, coeff: impl Into<BigUint>) -> GradedSeries {
        let mut s = GradedSeries::zero(n_max);
        s.insert_add(key, coeff.into());
        s
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, key: &ElementVector) -> BigUint {
        self.coeffs.get(key).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ElementVector, &BigUint)> {
        self.coeffs.iter()
    }

    /// The collapsed univariate view: coefficient at index `n` is the sum of
    /// all coefficients of heavy-atom degree `n`. Length is `n_max + 1`.
    pub fn total_degree_coeffs(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); self.n_max + 1];
        for (key, coeff) in &self.coeffs {
            out[key.total()] += coeff;
        }
        out
    }

    fn insert_add(&mut self, key: ElementVector, coeff: BigUint) {
        if coeff.is_zero() || key.total() > self.n_max {
            return;
        }
        *self.coeffs.entry(key).or_insert_with(BigUint::zero) += coeff;
    }

    fn check_bound(&self, other: &GradedSeries) -> Result<()> {
        if self.n_max != other.n_max {
            return Err(Error::TruncationMismatch {
                left: self.n_max,
                right: other.n_max,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (key, coeff) in &other.coeffs {
            out.insert_add(*key, coeff.clone());
        }
        Ok(out)
    }

    /// Coefficient-wise subtraction that fails on any negative result.
    pub fn checked_sub(&self, other: &GradedSeries, context: &'static str) -> Result<GradedSeries> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (key, coeff) in &other.coeffs {
            let have = out.coeffs.get(key).cloned().unwrap_or_else(BigUint::zero);
            if have < *coeff {
                return Err(Error::NegativeCoefficient {
                    key: key.to_string(),
                    context,
                });
            }
            let rest = have - coeff;
            if rest.is_zero() {
                out.coeffs.remove(key);
            } else {
                out.coeffs.insert(*key, rest);
            }
        }
        Ok(out)
    }

    /// Cauchy product; keys add component-wise and anything past the
    /// truncation bound is dropped.
    pub fn mul(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_bound(other)?;
        let mut out = GradedSeries::zero(self.n_max);
        for (ka, ca) in &self.coeffs {
            if ka.total() > self.n_max {
                continue;
            }
            for (kb, cb) in &other.coeffs {
                if ka.total() + kb.total() > self.n_max {
                    continue;
                }
                out.insert_add(*ka + *kb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: u64) -> GradedSeries {
        let factor = BigUint::from(factor);
        let mut out = GradedSeries::zero(self.n_max);
        for (key, coeff) in &self.coeffs {
            out.insert_add(*key, coeff * &factor);
        }
        out
    }

    /// Substitute every variable by its `k`-th power: the coefficient at
    /// `v` moves to `k * v`. Results past the bound are dropped.
    pub fn plethysm_power(&self, k: usize) -> GradedSeries {
        assert!(k >= 1, "plethysm power must be positive");
        let mut out = GradedSeries::zero(self.n_max);
        for (key, coeff) in &self.coeffs {
            out.insert_add(key.scaled(k), coeff.clone());
        }
        out
    }

    /// Exact division of every coefficient; nonzero remainder is an error.
    pub fn div_exact(&self, divisor: u64) -> Result<GradedSeries> {
        let divisor_big = BigUint::from(divisor);
        let mut out = GradedSeries::zero(self.n_max);
        for (key, coeff) in &self.coeffs {
            let (quot, rem) = coeff.div_rem(&divisor_big);
            if !rem.is_zero() {
                return Err(Error::Divisibility {
                    key: key.to_string(),
                    divisor,
                });
            }
            out.insert_add(*key, quot);
        }
        Ok(out)
    }
}

impl fmt::Display for GradedSeries {
    /// Sorted `degree<TAB>coefficient` lines of the collapsed view.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (degree, coeff) in self.total_degree_coeffs().iter().enumerate() {
            if !coeff.is_zero() {
                writeln!(f, "{degree}\t{coeff}")?;
            }
        }
        Ok(())
    }
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Cycle index of the symmetric group S_k as an integer table: a list of
/// (coefficient, cycle type) terms with the overall divisor k! applied only
/// at the end of [`apply`](Self::apply), so all intermediate arithmetic
/// stays in the integers.
#[derive(Debug, Clone)]
pub struct CycleIndex {
    order: usize,
    terms: Vec<(u64, Vec<usize>)>,
}

impl CycleIndex {
    /// Z(S_k). For k = 3 the terms are 1*a1^3 + 3*a1*a2 + 2*a3 over 6.
    pub fn symmetric(k: usize) -> CycleIndex {
        assert!(k >= 1);
        let mut terms = Vec::new();
        let mut parts = Vec::new();
        collect_partitions(k, k, &mut parts, &mut terms);
        let index = CycleIndex { order: k, terms };
        debug_assert_eq!(
            index.terms.iter().map(|(c, _)| *c).sum::<u64>(),
            factorial(k)
        );
        index
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Pólya multiset counting: evaluates
    /// (1/k!) * sum coeff * prod a(x^cycle) with a single exact division.
    pub fn apply(&self, a: &GradedSeries) -> Result<GradedSeries> {
        let mut bracket = GradedSeries::zero(a.n_max());
        let mut plethysms: BTreeMap<usize, GradedSeries> = BTreeMap::new();
        for (coeff, cycle_type) in &self.terms {
            let mut term = GradedSeries::one(a.n_max());
            for &len in cycle_type {
                let powered = plethysms
                    .entry(len)
                    .or_insert_with(|| a.plethysm_power(len));
                term = term.mul(powered)?;
            }
            bracket = bracket.add(&term.scale(*coeff))?;
        }
        bracket.div_exact(factorial(self.order))
    }
}

/// Enumerate partitions of `remaining` with parts <= `max_part`; each
/// partition with multiplicities m_i of part i contributes the conjugacy
/// class size k! / prod(i^m_i * m_i!).
fn collect_partitions(
    remaining: usize,
    max_part: usize,
    parts: &mut Vec<usize>,
    terms: &mut Vec<(u64, Vec<usize>)>,
) {
    if remaining == 0 {
        let k: usize = parts.iter().sum();
        let mut class_size = factorial(k);
        let mut mult = BTreeMap::new();
        for &p in parts.iter() {
            *mult.entry(p).or_insert(0u64) += 1;
        }
        for (&part, &m) in &mult {
            class_size /= (part as u64).pow(m as u32) * (1..=m).product::<u64>();
        }
        terms.push((class_size, parts.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        collect_partitions(remaining - part, part, parts, terms);
        parts.pop();
    }
}
