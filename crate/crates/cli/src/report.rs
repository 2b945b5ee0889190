//! Report documents. Every rational is a string `"p"` or `"p/q"` and every
//! polynomial is in canonical text form, so a report never contains a float.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "zhelobenko-report/1";

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn of(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub verdict: Verdict,
    pub results: Vec<Item>,
}

impl Report {
    /// A report whose verdict is the conjunction of its items'.
    pub fn new(command: &str, results: Vec<Item>) -> Self {
        let verdict = Verdict::of(results.iter().all(|r| r.verdict().is_pass()));
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            verdict,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {}: {}",
            SCHEMA,
            self.command,
            self.verdict.as_str()
        );
        for item in &self.results {
            out.push('\n');
            item.write_text(&mut out);
        }
        out
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Item {
    Roots(RootsItem),
    Solve(SolveItem),
    Filtration(FiltrationItem),
    Verify(VerifyItem),
    Scan(ScanItem),
    Oracle(OracleItem),
}

impl Item {
    pub fn verdict(&self) -> Verdict {
        match self {
            Item::Roots(_) | Item::Filtration(_) => Verdict::Pass,
            Item::Solve(x) => x.verdict,
            Item::Verify(x) => x.verdict,
            Item::Scan(x) => x.verdict,
            Item::Oracle(x) => x.verdict,
        }
    }

    fn write_text(&self, out: &mut String) {
        match self {
            Item::Roots(x) => x.write_text(out),
            Item::Solve(x) => x.write_text(out),
            Item::Filtration(x) => x.write_text(out),
            Item::Verify(x) => x.write_text(out),
            Item::Scan(x) => x.write_text(out),
            Item::Oracle(x) => x.write_text(out),
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RootsItem {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub dimension: usize,
    pub weyl_group_order: u64,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, by height.
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<Bracket>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub left: String,
    pub right: String,
    pub value: String,
}

impl RootsItem {
    fn write_text(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "roots {}: rank {}, dim {}, |W| = {}",
            self.lie_type, self.rank, self.dimension, self.weyl_group_order
        );
        for row in &self.cartan_matrix {
            let _ = writeln!(out, "  [{}]", join(row));
        }
        let _ = writeln!(
            out,
            "  {} positive roots, highest [{}]",
            self.positive_roots.len(),
            join(&self.highest_root)
        );
        for r in &self.positive_roots {
            let _ = writeln!(out, "    [{}]", join(r));
        }
        for b in self.brackets.iter().flatten() {
            let _ = writeln!(out, "  [{}, {}] = {}", b.left, b.right, b.value);
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GeneratorItem {
    pub q_degree: u32,
    /// `P_1 … P_ℓ`.
    pub p: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SolveItem {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub c: String,
    pub dmax: u32,
    /// `dim{solutions with deg P ≤ d}` for `d = 0 … dmax`.
    pub graded_dimensions: Vec<usize>,
    pub generator_degrees: Vec<u32>,
    /// Exponents that can occur as generator degrees at this `dmax`.
    pub expected_degrees: Vec<u32>,
    pub generators: Vec<GeneratorItem>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl SolveItem {
    fn write_text(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "solve {} c = {} dmax = {}: {}",
            self.lie_type,
            self.c,
            self.dmax,
            self.verdict.as_str()
        );
        let _ = writeln!(
            out,
            "  graded dimensions  {}",
            join(&self.graded_dimensions)
        );
        let _ = writeln!(
            out,
            "  generator degrees  {}",
            join(&self.generator_degrees)
        );
        let _ = writeln!(out, "  expected degrees   {}", join(&self.expected_degrees));
        for g in &self.generators {
            let _ = writeln!(out, "  J of degree {}:", g.q_degree);
            for (i, p) in g.p.iter().enumerate() {
                let _ = writeln!(out, "    P{} = {}", i + 1, p);
            }
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SummandItem {
    pub m: u32,
    pub basis: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FiltrationItem {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub exponents: Vec<u32>,
    /// `dim F^m` for `m = 0, 1, …` up to the top exponent.
    pub dims: Vec<usize>,
    /// Bases in the Cartan basis of the dual algebra.
    pub subspaces: Vec<Vec<Vec<String>>>,
    pub summands: Vec<SummandItem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl FiltrationItem {
    fn write_text(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "filtration {}: exponents {}",
            self.lie_type,
            join(&self.exponents)
        );
        let _ = writeln!(out, "  dim F^m  {}", join(&self.dims));
        for s in &self.summands {
            let vs: Vec<String> = s
                .basis
                .iter()
                .map(|v| format!("({})", v.join(", ")))
                .collect();
            let _ = writeln!(out, "  V({})_0  {}", s.m, vs.join(" "));
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DegreeItem {
    pub m: u32,
    pub dim_image: usize,
    pub dim_f: usize,
    pub equal: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VerifyItem {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub s: String,
    pub mmax: u32,
    pub records: Vec<DegreeItem>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl VerifyItem {
    fn write_text(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "verify {} s = {} mmax = {}: {}",
            self.lie_type,
            self.s,
            self.mmax,
            self.verdict.as_str()
        );
        let _ = writeln!(out, "  {:>3} {:>9} {:>5}  equal", "m", "dim image", "dim F");
        for r in &self.records {
            let _ = writeln!(
                out,
                "  {:>3} {:>9} {:>5}  {}",
                r.m, r.dim_image, r.dim_f, r.equal
            );
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub s: String,
    pub verdict: Verdict,
    pub failing_degrees: Vec<u32>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ScanItem {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub mmax: u32,
    pub entries: Vec<ScanEntry>,
    /// Candidates that failed, in input order.
    pub failing: Vec<String>,
    /// Pass iff no positive integer candidate fails; other failures are
    /// recorded without affecting the verdict.
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl ScanItem {
    fn write_text(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "scan {} mmax = {}: {}",
            self.lie_type,
            self.mmax,
            self.verdict.as_str()
        );
        for e in &self.entries {
            let _ = writeln!(
                out,
                "  s = {:>5}  {}  [{}]",
                e.s,
                e.verdict.as_str(),
                join(&e.failing_degrees)
            );
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct OracleRecordItem {
    pub m: u32,
    pub spin: u32,
    pub dim_image: usize,
    pub dim_expected: usize,
    pub equal: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct OracleItem {
    pub mmax: u32,
    pub adjoint: Vec<OracleRecordItem>,
    pub isotypic: Vec<OracleRecordItem>,
    pub spin2_divisible: bool,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl OracleItem {
    fn write_text(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "oracle sl2 mmax = {}: {}",
            self.mmax,
            self.verdict.as_str()
        );
        let _ = writeln!(
            out,
            "  {:<9} {:>3} {:>4} {:>9} {:>8}  equal",
            "check", "m", "spin", "dim image", "expected"
        );
        for (label, rs) in [("adjoint", &self.adjoint), ("isotypic", &self.isotypic)] {
            for r in rs {
                let _ = writeln!(
                    out,
                    "  {:<9} {:>3} {:>4} {:>9} {:>8}  {}",
                    label, r.m, r.spin, r.dim_image, r.dim_expected, r.equal
                );
            }
        }
        let _ = writeln!(
            out,
            "  spin-2 images divisible by ψ_2: {}",
            self.spin2_divisible
        );
    }
}
