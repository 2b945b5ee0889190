//! Dispatch from a parsed command line to the core crate and assembly of the
//! report.

use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;

use zhelobenko_core::exact::scalar::{self, Scalar};
use zhelobenko_core::filtration::{exponents, principal_filtration};
use zhelobenko_core::pbw::sl2_pbw_oracle;
use zhelobenko_core::verifier::{KostantContext, VerificationReport};
use zhelobenko_core::zhelobenko::{extract_generators_upto, solve_invariants, DenominatorScalar};
use zhelobenko_core::{LieAlgebra, LieType, RootSystem};

use crate::config::{Cli, Command, DEFAULT_TYPES};
use crate::report::*;

/// Scalars verified for each type by `all`.
pub const ALL_SCALARS: [i64; 3] = [1, 2, 3];
/// Degree bound of the oracle run by `all`.
pub const ALL_ORACLE_MMAX: u32 = 4;

pub fn run(cli: &Cli) -> Result<Report> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.output.workers {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().context("building the worker pool")?;
    pool.install(|| dispatch(&cli.command, cli.output.timing))
}

fn dispatch(command: &Command, timing: bool) -> Result<Report> {
    let (name, items) = match command {
        Command::Roots { lie_type, debug } => {
            ("roots", vec![timed(timing, || roots(*lie_type, *debug))?])
        }
        Command::Solve { lie_type, c, dmax } => {
            ("solve", vec![timed(timing, || solve(*lie_type, c, *dmax))?])
        }
        Command::Filtration { lie_type } => {
            ("filtration", vec![timed(timing, || filtration(*lie_type))?])
        }
        Command::Verify { lie_type, s, mmax } => (
            "verify",
            vec![timed(timing, || verify(*lie_type, s, *mmax))?],
        ),
        Command::Scan {
            lie_type,
            candidates,
            mmax,
        } => (
            "scan",
            vec![timed(timing, || scan(*lie_type, candidates, *mmax))?],
        ),
        Command::Oracle { mmax } => ("oracle", vec![timed(timing, || oracle(*mmax))?]),
        Command::All => ("all", all(timing)?),
    };
    Ok(Report::new(name, items))
}

fn timed(timing: bool, f: impl FnOnce() -> Result<Item>) -> Result<Item> {
    let start = Instant::now();
    let mut item = f()?;
    if timing {
        let ms = Some(start.elapsed().as_millis() as u64);
        match &mut item {
            Item::Roots(x) => x.timing_ms = ms,
            Item::Solve(x) => x.timing_ms = ms,
            Item::Filtration(x) => x.timing_ms = ms,
            Item::Verify(x) => x.timing_ms = ms,
            Item::Scan(x) => x.timing_ms = ms,
            Item::Oracle(x) => x.timing_ms = ms,
        }
    }
    Ok(item)
}

fn top_exponent(t: LieType) -> Result<u32> {
    Ok(exponents(t)?.into_iter().max().unwrap_or(1))
}

fn text_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(scalar::to_text).collect()
}

pub fn roots(t: LieType, debug: bool) -> Result<Item> {
    let rs = RootSystem::new(t);
    let brackets = if debug {
        let g = LieAlgebra::new(&rs)?;
        let mut out = Vec::new();
        for a in 0..g.dim() {
            for b in a + 1..g.dim() {
                let terms = g.basis_bracket(a, b);
                if terms.is_empty() {
                    continue;
                }
                let mut value = String::new();
                for &(k, c) in terms.iter() {
                    match (value.is_empty(), c < 0) {
                        (true, false) => {}
                        (true, true) => value.push('-'),
                        (false, false) => value.push_str(" + "),
                        (false, true) => value.push_str(" - "),
                    }
                    if c.abs() != 1 {
                        value.push_str(&format!("{}*", c.abs()));
                    }
                    value.push_str(&g.basis_label(k));
                }
                out.push(Bracket {
                    left: g.basis_label(a),
                    right: g.basis_label(b),
                    value,
                });
            }
        }
        Some(out)
    } else {
        None
    };
    Ok(Item::Roots(RootsItem {
        lie_type: t.to_string(),
        rank: rs.rank(),
        dimension: 2 * rs.positive_roots().len() + rs.rank(),
        weyl_group_order: t.weyl_group_order(),
        cartan_matrix: rs.cartan().to_vec(),
        positive_roots: rs.positive_roots().to_vec(),
        highest_root: rs.highest_root().to_vec(),
        brackets,
        timing_ms: None,
    }))
}

pub fn solve(t: LieType, c: &Scalar, dmax: Option<u32>) -> Result<Item> {
    let rs = RootSystem::new(t);
    let ex = exponents(t)?;
    let dmax = dmax.unwrap_or(ex.iter().max().copied().unwrap_or(1) - 1);
    let c = DenominatorScalar::new(c.clone());
    let sol = solve_invariants(&rs, &c, dmax)?;
    let gens = extract_generators_upto(&rs, &c, dmax)?;
    let generator_degrees: Vec<u32> = gens.iter().map(|g| g.q_degree).collect();
    let expected_degrees: Vec<u32> = ex.into_iter().filter(|&m| m <= dmax + 1).collect();
    let mut sorted = generator_degrees.clone();
    sorted.sort_unstable();
    Ok(Item::Solve(SolveItem {
        lie_type: t.to_string(),
        c: scalar::to_text(&c.c),
        dmax,
        graded_dimensions: sol.graded_dims(),
        verdict: Verdict::of(sorted == expected_degrees),
        generator_degrees,
        expected_degrees,
        generators: gens
            .iter()
            .map(|g| GeneratorItem {
                q_degree: g.q_degree,
                p: g.p.to_text(),
            })
            .collect(),
        timing_ms: None,
    }))
}

pub fn filtration(t: LieType) -> Result<Item> {
    // `exponents` cross-checks the flag against the ad h∨ spectrum
    let ex = exponents(t)?;
    let flag = principal_filtration(t)?;
    debug_assert_eq!(ex, flag.exponents);
    Ok(Item::Filtration(FiltrationItem {
        lie_type: t.to_string(),
        exponents: ex,
        dims: flag.dims(),
        subspaces: flag
            .subspaces
            .iter()
            .map(|s| s.iter().map(|v| text_vec(v)).collect())
            .collect(),
        summands: flag
            .summands
            .iter()
            .map(|(m, b)| SummandItem {
                m: *m,
                basis: b.iter().map(|v| text_vec(v)).collect(),
            })
            .collect(),
        timing_ms: None,
    }))
}

fn verify_item(rep: &VerificationReport, mmax: u32) -> VerifyItem {
    VerifyItem {
        lie_type: rep.lie_type.to_string(),
        s: scalar::to_text(&rep.s),
        mmax,
        records: rep
            .records
            .iter()
            .map(|r| DegreeItem {
                m: r.m,
                dim_image: r.dim_image,
                dim_f: r.dim_f,
                equal: r.equal,
            })
            .collect(),
        verdict: Verdict::of(rep.passed()),
        timing_ms: None,
    }
}

pub fn verify(t: LieType, s: &Scalar, mmax: Option<u32>) -> Result<Item> {
    let mmax = match mmax {
        Some(m) => m,
        None => top_exponent(t)?,
    };
    let rep = KostantContext::new(t, mmax)?.verify(s)?;
    Ok(Item::Verify(verify_item(&rep, mmax)))
}

fn is_positive_integer(s: &Scalar) -> bool {
    s.is_integer() && *s > Scalar::from_integer(0.into())
}

pub fn scan(t: LieType, candidates: &[Scalar], mmax: Option<u32>) -> Result<Item> {
    let mmax = match mmax {
        Some(m) => m,
        None => top_exponent(t)?,
    };
    let ctx = KostantContext::new(t, mmax)?;
    let reports: Vec<VerificationReport> = candidates
        .par_iter()
        .map(|s| ctx.verify(s))
        .collect::<zhelobenko_core::Result<_>>()?;
    let entries: Vec<ScanEntry> = reports
        .iter()
        .map(|r| ScanEntry {
            s: scalar::to_text(&r.s),
            verdict: Verdict::of(r.passed()),
            failing_degrees: r.records.iter().filter(|x| !x.equal).map(|x| x.m).collect(),
        })
        .collect();
    let ok = reports
        .iter()
        .all(|r| r.passed() || !is_positive_integer(&r.s));
    Ok(Item::Scan(ScanItem {
        lie_type: t.to_string(),
        mmax,
        failing: entries
            .iter()
            .filter(|e| !e.verdict.is_pass())
            .map(|e| e.s.clone())
            .collect(),
        entries,
        verdict: Verdict::of(ok),
        timing_ms: None,
    }))
}

pub fn oracle(mmax: u32) -> Result<Item> {
    let rep = sl2_pbw_oracle(mmax)?;
    let conv = |rs: &[zhelobenko_core::pbw::OracleRecord]| {
        rs.iter()
            .map(|r| OracleRecordItem {
                m: r.m,
                spin: r.spin,
                dim_image: r.dim_image,
                dim_expected: r.dim_expected,
                equal: r.equal,
            })
            .collect()
    };
    Ok(Item::Oracle(OracleItem {
        mmax,
        adjoint: conv(&rep.adjoint),
        isotypic: conv(&rep.isotypic),
        spin2_divisible: rep.spin2_divisible,
        verdict: Verdict::of(rep.passed()),
        timing_ms: None,
    }))
}

enum Job {
    Filtration(LieType),
    Solve(LieType),
    Verify(LieType, i64),
    Oracle,
}

fn all(timing: bool) -> Result<Vec<Item>> {
    let mut types: Vec<LieType> = DEFAULT_TYPES
        .iter()
        .map(|s| s.parse().expect("built-in type"))
        .collect();
    types.sort();
    let mut jobs = Vec::new();
    for &t in &types {
        jobs.push(Job::Filtration(t));
        jobs.push(Job::Solve(t));
        jobs.extend(ALL_SCALARS.iter().map(|&s| Job::Verify(t, s)));
    }
    jobs.push(Job::Oracle);
    jobs.par_iter()
        .map(|job| match job {
            Job::Filtration(t) => timed(timing, || filtration(*t)),
            Job::Solve(t) => timed(timing, || solve(*t, &scalar::int(-1), None)),
            Job::Verify(t, s) => timed(timing, || verify(*t, &scalar::int(*s), None)),
            Job::Oracle => timed(timing, || oracle(ALL_ORACLE_MMAX)),
        })
        .collect()
}
