//! Stable serialization: line-delimited structure catalogs and
//! tab-separated counts tables.
//!
//! Catalog lines are `code<TAB>formula<TAB>n_heavy<TAB>nC<TAB>nN<TAB>nO<TAB>nF`,
//! ordered by (n_heavy, code), UTF-8 with LF endings, byte-identical across
//! runs. Counts lines are `degree<TAB>coefficient` (or an element-vector
//! key in per-element mode); `#`-prefixed comment lines are allowed.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use num_bigint::BigUint;

use crate::element::{AtomCounts, ElementVector};
use crate::error::{Error, Result};
use crate::series::GradedSeries;
use crate::structure::{Structure, StructureSet};

/// One catalog line: canonical code, Hill-order formula, and atom counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRecord {
    pub code: String,
    pub formula: String,
    pub n_heavy: usize,
    pub counts: AtomCounts,
}

impl CatalogRecord {
    pub fn for_structure<T: Structure>(structure: &T) -> CatalogRecord {
        let counts = structure.atom_counts();
        CatalogRecord {
            code: structure.canonical_code(),
            formula: hill_formula(&counts),
            n_heavy: structure.heavy_size(),
            counts,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.code,
            self.formula,
            self.n_heavy,
            self.counts.c,
            self.counts.n,
            self.counts.o,
            self.counts.f
        )
    }
}

/// Hill-order formula string: C first, H second, then F, N, O
/// alphabetically. Counts of one drop the subscript, absent elements drop
/// out entirely.
pub fn hill_formula(counts: &AtomCounts) -> String {
    let mut out = String::new();
    for (symbol, count) in [
        ('C', counts.c),
        ('H', counts.h),
        ('F', counts.f),
        ('N', counts.n),
        ('O', counts.o),
    ] {
        match count {
            0 => {}
            1 => out.push(symbol),
            _ => {
                let _ = write!(out, "{symbol}{count}");
            }
        }
    }
    out
}

/// Stream a finalized set as one record per line.
pub fn emit_catalog<T: Structure, W: Write>(set: &StructureSet<T>, sink: &mut W) -> io::Result<()> {
    for structure in set.iter() {
        let record = CatalogRecord::for_structure(structure.as_ref());
        writeln!(sink, "{}", record.line())?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountsMode {
    Total,
    PerElement,
}

/// Key of one counts row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountsKey {
    Degree(usize),
    Vector(ElementVector),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountsTable {
    pub rows: Vec<(CountsKey, BigUint)>,
}

impl CountsTable {
    /// Total-degree rows only, as (degree, coefficient) pairs.
    pub fn degree_rows(&self) -> Vec<(usize, BigUint)> {
        self.rows
            .iter()
            .filter_map(|(key, coeff)| match key {
                CountsKey::Degree(d) => Some((*d, coeff.clone())),
                CountsKey::Vector(_) => None,
            })
            .collect()
    }
}

/// Build the counts table for a series: nonzero rows only, ascending.
pub fn counts_table(series: &GradedSeries, mode: CountsMode) -> CountsTable {
    let mut rows = Vec::new();
    match mode {
        CountsMode::Total => {
            for (degree, coeff) in series.total_degree_coeffs().into_iter().enumerate() {
                if coeff != BigUint::default() {
                    rows.push((CountsKey::Degree(degree), coeff));
                }
            }
        }
        CountsMode::PerElement => {
            let mut keyed: Vec<(&ElementVector, &BigUint)> = series.iter().collect();
            keyed.sort_by_key(|(v, _)| (v.total(), v.c, v.n, v.o, v.f));
            for (vector, coeff) in keyed {
                rows.push((CountsKey::Vector(*vector), coeff.clone()));
            }
        }
    }
    CountsTable { rows }
}

/// Write a counts table: a comment header, then tab-separated rows with
/// exact decimal coefficients.
pub fn emit_counts<W: Write>(
    series: &GradedSeries,
    mode: CountsMode,
    sink: &mut W,
) -> io::Result<()> {
    match mode {
        CountsMode::Total => writeln!(sink, "# degree\tcoefficient")?,
        CountsMode::PerElement => writeln!(sink, "# elements\tcoefficient")?,
    }
    for (key, coeff) in counts_table(series, mode).rows {
        match key {
            CountsKey::Degree(degree) => writeln!(sink, "{degree}\t{coeff}")?,
            CountsKey::Vector(vector) => writeln!(sink, "{vector}\t{coeff}")?,
        }
    }
    Ok(())
}

/// Parse counts-table text; `origin` names the source in errors.
pub fn parse_counts(text: &str, origin: &str) -> Result<CountsTable> {
    let mut rows = Vec::new();
    let mut last_degree: Option<usize> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let fail = |msg: String| Error::Fixture {
            origin: origin.to_owned(),
            line: lineno,
            msg,
        };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split('\t');
        let (key_text, coeff_text) = match (fields.next(), fields.next(), fields.next()) {
            (Some(k), Some(v), None) => (k, v),
            _ => return Err(fail("expected exactly two tab-separated fields".into())),
        };
        if !coeff_text.chars().all(|c| c.is_ascii_digit()) || coeff_text.is_empty() {
            return Err(fail(format!(
                "coefficient {coeff_text:?} is not a plain decimal integer"
            )));
        }
        let coeff: BigUint = coeff_text.parse().expect("digits only");
        let key = if key_text.chars().all(|c| c.is_ascii_digit()) && !key_text.is_empty() {
            let degree: usize = key_text
                .parse()
                .map_err(|_| fail(format!("degree {key_text:?} out of range")))?;
            if let Some(last) = last_degree {
                if degree <= last {
                    return Err(fail("degrees must be strictly ascending".into()));
                }
            }
            last_degree = Some(degree);
            CountsKey::Degree(degree)
        } else {
            CountsKey::Vector(parse_vector_key(key_text).ok_or_else(|| {
                fail(format!("key {key_text:?} is neither a degree nor an element vector"))
            })?)
        };
        rows.push((key, coeff));
    }
    Ok(CountsTable { rows })
}

fn parse_vector_key(text: &str) -> Option<ElementVector> {
    let mut vector = ElementVector::ZERO;
    let mut fields = text.split(' ');
    for symbol in ['C', 'N', 'O', 'F'] {
        let field = fields.next()?;
        let (head, value) = field.split_once(':')?;
        if head.len() != 1 || head.chars().next() != Some(symbol) {
            return None;
        }
        let count: u16 = value.parse().ok()?;
        match symbol {
            'C' => vector.c = count,
            'N' => vector.n = count,
            'O' => vector.o = count,
            _ => vector.f = count,
        }
    }
    if fields.next().is_some() {
        return None;
    }
    Some(vector)
}

/// Read a counts table from a file in [`emit_counts`] format.
pub fn read_fixture(path: &Path) -> Result<CountsTable> {
    let text = std::fs::read_to_string(path)?;
    parse_counts(&text, &path.display().to_string())
}
