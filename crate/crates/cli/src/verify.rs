//! The `verify` subcommand: oracle comparison, orbit identity sweep,
//! parser round-trip sweep, and regression against the bundled series
//! fixtures.

use std::path::Path;
use std::process::ExitCode;

use clap::ValueEnum;

use molegen_core::counting::{dct_unroot, solve_rooted_series};
use molegen_core::element::AtomKind;
use molegen_core::formats::{parse_counts, read_fixture, CountsTable};
use molegen_core::oracle::{compare, oracle_free, oracle_rooted};
use molegen_core::structure::{
    assemble_free, grow_rooted, heavy_orbits, parse_code, Structure,
};

const ROOTED_FIXTURE: &str = include_str!("../fixtures/chno_rooted.tsv");
const FREE_FIXTURE: &str = include_str!("../fixtures/chno_free.tsv");

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Tier {
    Fast,
    Slow,
}

impl Tier {
    fn rooted_bound(self) -> usize {
        match self {
            Tier::Fast => 5,
            Tier::Slow => 7,
        }
    }

    fn free_bound(self) -> usize {
        match self {
            Tier::Fast => 4,
            Tier::Slow => 6,
        }
    }

    fn orbit_bound(self) -> usize {
        match self {
            Tier::Fast => 5,
            Tier::Slow => 7,
        }
    }
}

struct Suite {
    failures: usize,
}

impl Suite {
    fn report(&mut self, name: &str, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => println!("ok - {name}"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL - {name}");
                for line in detail.lines() {
                    println!("    {line}");
                }
            }
        }
    }
}

pub fn run(tier: &Tier, fixtures: Option<&Path>) -> Result<ExitCode, String> {
    let tier = *tier;
    let mut suite = Suite { failures: 0 };

    let (rooted_fixture, free_fixture) = load_fixtures(fixtures)?;
    suite.report(
        "rooted CHNO series matches fixture",
        regress_series(&rooted_fixture, true),
    );
    suite.report(
        "free CHNO series matches fixture",
        regress_series(&free_fixture, false),
    );

    for elements in element_subsets() {
        let label = elements
            .iter()
            .map(|e| e.symbol())
            .collect::<String>();
        suite.report(
            &format!("oracle agreement, rooted <= {}, {{{label}}}", tier.rooted_bound()),
            oracle_rooted_check(&elements, tier.rooted_bound()),
        );
        suite.report(
            &format!("oracle agreement, free <= {}, {{{label}}}", tier.free_bound()),
            oracle_free_check(&elements, tier.free_bound()),
        );
    }

    suite.report(
        &format!("orbit identity p - q + r = 1, free <= {}", tier.orbit_bound()),
        orbit_sweep(tier.orbit_bound()),
    );
    suite.report(
        &format!("parser round-trip, <= {}", tier.free_bound()),
        round_trip_sweep(tier.free_bound()),
    );

    if suite.failures == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
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

fn load_fixtures(dir: Option<&Path>) -> Result<(CountsTable, CountsTable), String> {
    match dir {
        Some(dir) => {
            let rooted = read_fixture(&dir.join("chno_rooted.tsv")).map_err(|e| e.to_string())?;
            let free = read_fixture(&dir.join("chno_free.tsv")).map_err(|e| e.to_string())?;
            Ok((rooted, free))
        }
        None => Ok((
            parse_counts(ROOTED_FIXTURE, "builtin chno_rooted.tsv").map_err(|e| e.to_string())?,
            parse_counts(FREE_FIXTURE, "builtin chno_free.tsv").map_err(|e| e.to_string())?,
        )),
    }
}

fn regress_series(fixture: &CountsTable, rooted: bool) -> Result<(), String> {
    let rows = fixture.degree_rows();
    let n_max = rows.iter().map(|(d, _)| *d).max().unwrap_or(0);
    let a = solve_rooted_series(&AtomKind::HEAVY, false, n_max).map_err(|e| e.to_string())?;
    let series = if rooted {
        a
    } else {
        dct_unroot(&a, &AtomKind::HEAVY, false)
            .map_err(|e| e.to_string())?
            .free
    };
    let coeffs = series.total_degree_coeffs();
    let mut mismatches = Vec::new();
    for (degree, expected) in rows {
        let actual = &coeffs[degree];
        if *actual != expected {
            mismatches.push(format!(
                "degree {degree}: computed {actual}, fixture says {expected}"
            ));
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(mismatches.join("\n"))
    }
}

fn oracle_rooted_check(elements: &[AtomKind], bound: usize) -> Result<(), String> {
    let engine = grow_rooted(elements, false, bound);
    let brute = oracle_rooted(elements, false, bound);
    let report = compare(&engine, &brute);
    if report.pass() {
        Ok(())
    } else {
        Err(report.to_string())
    }
}

fn oracle_free_check(elements: &[AtomKind], bound: usize) -> Result<(), String> {
    let pool = grow_rooted(elements, false, bound / 2);
    let engine = assemble_free(&pool, elements, bound);
    let brute = oracle_free(elements, false, bound);
    let report = compare(&engine, &brute);
    if report.pass() {
        Ok(())
    } else {
        Err(report.to_string())
    }
}

fn orbit_sweep(bound: usize) -> Result<(), String> {
    let mut checked = 0usize;
    for elements in element_subsets() {
        let pool = grow_rooted(&elements, false, bound / 2);
        let free = assemble_free(&pool, &elements, bound);
        for molecule in free.iter() {
            let (p1, q1, r1) = heavy_orbits(molecule);
            if p1 + r1 != q1 + 1 {
                return Err(format!(
                    "({p1}, {q1}, {r1}) for {}",
                    molecule.canonical_code()
                ));
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err("no molecules were generated".into());
    }
    Ok(())
}

fn round_trip_sweep(bound: usize) -> Result<(), String> {
    let rooted = grow_rooted(&AtomKind::HEAVY, true, bound);
    let pool = grow_rooted(&AtomKind::HEAVY, true, bound / 2);
    let free = assemble_free(&pool, &AtomKind::HEAVY, bound);
    let rooted_codes = rooted.iter().map(|s| s.canonical_code());
    let free_codes = free.iter().map(|s| s.canonical_code());
    for code in rooted_codes.chain(free_codes) {
        let back = parse_code(&code)
            .map_err(|e| format!("{code}: {e}"))?
            .canonical_code();
        if back != code {
            return Err(format!("{code} re-emitted as {back}"));
        }
    }
    Ok(())
}
