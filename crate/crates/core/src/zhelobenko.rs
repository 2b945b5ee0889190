//! Analogue Zhelobenko operators `ξ_i` on `V₀ ⊗ S(𝔥)` for the adjoint
//! module, and the linear system whose solutions are their common fixed
//! points.
//!
//! An element `J = Σ ϖ_k ⊗ q_k` is `ξ`-invariant iff every `q_i = h_i·p_i`
//! with `p_i` dot-invariant under `s_i`. Writing `P_i = θ⁻¹(p_i)` turns the
//! invariance conditions into the polynomial system
//!
//! ```text
//! (c + s_i(h_j))·A_i P_j = α_i(h_j)·(P_i − P_j)      for all i, j
//! ```
//!
//! at `c = −1`. Other values of `c` give the parametric family (`c = 0` is the
//! symmetric-algebra case). Solutions form a module over the linear
//! `W`-invariants, so generators are found degree by degree modulo products
//! of lower generators.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::scalar::{self, Scalar};
use crate::exact::sparse::{echelon_basis, SparseEchelon};
use crate::exact::{LinearFraction, Monomial, Poly};
use crate::root_system::RootSystem;
use crate::weyl_calculus::{self as wc, ActionKind, Direction};

/// `Σ_k ϖ_k ⊗ q_k`, stored by its coordinates in the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroWeightElement {
    coords: Vec<Poly>,
}

impl ZeroWeightElement {
    pub fn new(rs: &RootSystem, coords: Vec<Poly>) -> Result<Self> {
        check_tuple(rs, &coords)?;
        Ok(ZeroWeightElement { coords })
    }

    /// `Σ ϖ_i ⊗ h_i`, the degree-one invariant.
    pub fn identity(rs: &RootSystem) -> Self {
        let l = rs.rank();
        ZeroWeightElement {
            coords: (0..l).map(|i| Poly::var(l, i)).collect(),
        }
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Largest degree among the coordinates; `None` for the zero element.
    pub fn degree(&self) -> Option<u32> {
        self.coords.iter().filter_map(|q| q.degree().finite()).max()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }
}

/// The tuple `(P_1, …, P_ℓ)` with `P_i = θ⁻¹(q_i / h_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PTuple {
    entries: Vec<Poly>,
}

impl PTuple {
    pub fn new(rs: &RootSystem, entries: Vec<Poly>) -> Result<Self> {
        check_tuple(rs, &entries)?;
        Ok(PTuple { entries })
    }

    pub fn ones(rs: &RootSystem) -> Self {
        PTuple {
            entries: vec![Poly::one(rs.rank()); rs.rank()],
        }
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn degree(&self) -> Option<u32> {
        self.entries
            .iter()
            .filter_map(|p| p.degree().finite())
            .max()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Entrywise product with a single polynomial.
    pub fn mul_poly(&self, f: &Poly) -> PTuple {
        PTuple {
            entries: self.entries.iter().map(|p| p * f).collect(),
        }
    }

    /// Homogeneous top-degree part (all entries cut at the tuple's degree).
    pub fn top_part(&self) -> PTuple {
        let d = self.degree().unwrap_or(0);
        PTuple {
            entries: self.entries.iter().map(|p| p.homogeneous_part(d)).collect(),
        }
    }

    pub fn to_text(&self) -> Vec<String> {
        self.entries.iter().map(Poly::to_text).collect()
    }
}

fn check_tuple(rs: &RootSystem, entries: &[Poly]) -> Result<()> {
    if entries.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: entries.len(),
        });
    }
    match entries.iter().find(|p| p.rank() != rs.rank()) {
        Some(p) => Err(Error::RankMismatch {
            left: rs.rank(),
            right: p.rank(),
        }),
        None => Ok(()),
    }
}

/// The scalar `c` in the denominators `c + s_i(h_j)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DenominatorScalar {
    pub c: Scalar,
}

impl DenominatorScalar {
    pub fn new(c: Scalar) -> Self {
        DenominatorScalar { c }
    }

    /// `c = −1`, the invariants of the enveloping algebra.
    pub fn enveloping() -> Self {
        DenominatorScalar::new(scalar::int(-1))
    }
}

impl From<i64> for DenominatorScalar {
    fn from(c: i64) -> Self {
        DenominatorScalar::new(scalar::int(c))
    }
}

/// `ξ_i(J)` as ϖ-coordinates with rational-function entries.
///
/// Each `v ∈ V₀` splits as `t·α_i + v⊥` with `t = ⟨v, h_i⟩/2`, and
/// `ξ_i(v ⊗ q) = v⊥ ⊗ s_i.q − t·α_i ⊗ h_i/(h_i + 2)·s_i.q`.
pub fn xi(rs: &RootSystem, i: usize, j: &ZeroWeightElement) -> Result<Vec<LinearFraction>> {
    rs.check_index(i)?;
    check_tuple(rs, &j.coords)?;
    let l = rs.rank();
    let alpha: Vec<Scalar> = rs
        .simple_root_in_weights(i)
        .into_iter()
        .map(scalar::int)
        .collect();
    let two = scalar::int(2);
    let ratio = LinearFraction::new(Poly::var(l, i), [(i, two.clone())])?;
    let mut out = vec![LinearFraction::from_poly(Poly::zero(l)); l];
    for (k, q) in j.coords.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let sq = LinearFraction::from_poly(wc::act_simple(rs, ActionKind::Dot, i, q)?);
        let mut v = vec![Scalar::zero(); l];
        v[k] = Scalar::one();
        let t = &v[i] / &two;
        let perp: Vec<Scalar> = v.iter().zip(&alpha).map(|(x, a)| x - &t * a).collect();
        let along = ratio.mul(&sq).scale(&t);
        for r in 0..l {
            let term = sq.scale(&perp[r]).sub(&along.scale(&alpha[r]));
            out[r] = out[r].add(&term);
        }
    }
    Ok(out)
}

/// Outcome of the three conditions characterising `ξ`-invariance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvarianceConditions {
    /// `h_i·s_i.q_i = −(h_i + 2)·q_i` for all `i`.
    pub sign_condition: bool,
    /// `h_i | q_i` with `s_i.`-invariant quotient for all `i`.
    pub divisibility: bool,
    /// `q_j − s_i.q_j = ½·α_i(h_j)·(q_i − s_i.q_i)` for all `i, j`.
    pub coupling: bool,
}

impl InvarianceConditions {
    pub fn all(&self) -> bool {
        self.sign_condition && self.divisibility && self.coupling
    }
}

pub fn invariance_conditions(
    rs: &RootSystem,
    j: &ZeroWeightElement,
) -> Result<InvarianceConditions> {
    check_tuple(rs, &j.coords)?;
    let l = rs.rank();
    let q = &j.coords;
    let mut report = InvarianceConditions {
        sign_condition: true,
        divisibility: true,
        coupling: true,
    };
    for i in 0..l {
        let hi = Poly::var(l, i);
        let hi2 = Poly::linear_factor(l, i, scalar::int(2));
        let s: Vec<Poly> = q
            .iter()
            .map(|qk| wc::act_simple(rs, ActionKind::Dot, i, qk))
            .collect::<Result<_>>()?;
        if &hi * &s[i] != -(&hi2 * &q[i]) {
            report.sign_condition = false;
        }
        let divisible = match q[i].divide_exact(&hi) {
            Ok(p) => wc::act_simple(rs, ActionKind::Dot, i, &p)? == p,
            Err(Error::NotDivisible) => false,
            Err(e) => return Err(e),
        };
        report.divisibility &= divisible;
        let base = &q[i] - &s[i];
        for jj in 0..l {
            let half = scalar::ratio(rs.pairing(jj, i), 2);
            if &q[jj] - &s[jj] != base.scale(&half) {
                report.coupling = false;
            }
        }
    }
    Ok(report)
}

/// `ξ_i(J) = J` for all `i`, decided both by cross-multiplying the operator
/// output and by the three-condition criterion. The two must agree.
pub fn is_invariant(rs: &RootSystem, j: &ZeroWeightElement) -> Result<bool> {
    let mut by_operator = true;
    for i in 0..rs.rank() {
        let image = xi(rs, i, j)?;
        let fixed = image
            .iter()
            .zip(&j.coords)
            .all(|(f, q)| f.equals(&LinearFraction::from_poly(q.clone())));
        by_operator &= fixed;
    }
    let report = invariance_conditions(rs, j)?;
    if report.sign_condition != report.divisibility {
        return Err(Error::Inconsistency(String::from(
            "sign condition and divisibility disagree",
        )));
    }
    if by_operator != report.all() {
        return Err(Error::Inconsistency(format!(
            "operator route says {by_operator}, condition route says {}",
            report.all()
        )));
    }
    Ok(by_operator)
}

/// `P_i = θ⁻¹(q_i / h_i)`; fails with `NotDivisible` if some `h_i ∤ q_i`.
#[allow(non_snake_case)]
pub fn q_to_P(rs: &RootSystem, j: &ZeroWeightElement) -> Result<PTuple> {
    check_tuple(rs, &j.coords)?;
    let l = rs.rank();
    let entries = j
        .coords
        .iter()
        .enumerate()
        .map(|(i, q)| {
            Ok(wc::theta(
                &q.divide_exact(&Poly::var(l, i))?,
                Direction::Inverse,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(PTuple { entries })
}

/// Inverse of [`q_to_P`]: `q_i = h_i·θ(P_i)`.
#[allow(non_snake_case)]
pub fn P_to_q(rs: &RootSystem, p: &PTuple) -> Result<ZeroWeightElement> {
    check_tuple(rs, &p.entries)?;
    let l = rs.rank();
    Ok(ZeroWeightElement {
        coords: p
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| Poly::var(l, i) * wc::theta(e, Direction::Forward))
            .collect(),
    })
}

/// `c + s_i(h_j) = c + h_j − α_i(h_j)·h_i`.
fn denominator(rs: &RootSystem, c: &DenominatorScalar, i: usize, j: usize) -> Poly {
    let l = rs.rank();
    Poly::linear_factor(l, j, c.c.clone()) - Poly::var(l, i).scale(&scalar::int(rs.pairing(j, i)))
}

/// `(c + s_i(h_j))·A_i P_j − α_i(h_j)·(P_i − P_j)`; zero iff the `(i, j)`
/// equation holds.
pub fn p_residual(
    rs: &RootSystem,
    p: &PTuple,
    c: &DenominatorScalar,
    i: usize,
    j: usize,
) -> Result<Poly> {
    rs.check_index(i)?;
    rs.check_index(j)?;
    check_tuple(rs, &p.entries)?;
    let a = wc::bgg(rs, i, &p.entries[j])?;
    let diff = &p.entries[i] - &p.entries[j];
    Ok(denominator(rs, c, i, j) * a - diff.scale(&scalar::int(rs.pairing(j, i))))
}

/// Whether every residual vanishes.
pub fn satisfies_p_system(rs: &RootSystem, p: &PTuple, c: &DenominatorScalar) -> Result<bool> {
    for i in 0..rs.rank() {
        for j in 0..rs.rank() {
            if !p_residual(rs, p, c, i, j)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solutions of the system with every `deg P_i ≤ dmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSolution {
    pub c: DenominatorScalar,
    pub dmax: u32,
    /// Reduced echelon basis, ascending in degree.
    pub basis: Vec<PTuple>,
    /// `P`-degree of each basis element.
    pub degrees: Vec<u32>,
}

impl GradedSolution {
    /// `dim{solutions with deg P ≤ d}` for `d = 0 … dmax`.
    pub fn graded_dims(&self) -> Vec<usize> {
        (0..=self.dmax)
            .map(|d| self.degrees.iter().filter(|&&e| e <= d).count())
            .collect()
    }

    /// Basis of the solutions with `deg q ≤ m`, i.e. `deg P ≤ m − 1`.
    pub fn upto_q_degree(&self, m: u32) -> Vec<&PTuple> {
        self.basis
            .iter()
            .zip(&self.degrees)
            .filter(|(_, &d)| d < m)
            .map(|(b, _)| b)
            .collect()
    }
}

/// Column layout of the ansatz: monomials by degree then deglex, both
/// descending, each repeated for `P_1 … P_ℓ`. Reduced echelon form with
/// pivot at the first nonzero entry then places each solution's top-degree
/// term first.
struct Ansatz {
    rank: usize,
    monos: Vec<Monomial>,
}

impl Ansatz {
    fn new(rank: usize, dmax: u32) -> Self {
        Ansatz {
            rank,
            monos: Monomial::up_to_degree(rank, dmax),
        }
    }

    fn cols(&self) -> usize {
        self.monos.len() * self.rank
    }

    fn column(&self, col: usize) -> (&Monomial, usize) {
        (&self.monos[col / self.rank], col % self.rank)
    }

    fn tuple(&self, v: &[(usize, Scalar)]) -> PTuple {
        let mut terms: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); self.rank];
        for (col, x) in v {
            let (m, k) = self.column(*col);
            terms[k].push((m.clone(), x.clone()));
        }
        PTuple {
            entries: terms
                .into_iter()
                .map(|t| Poly::from_terms(self.rank, t))
                .collect(),
        }
    }

    fn coordinates(&self, p: &PTuple) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.cols()];
        for (idx, m) in self.monos.iter().enumerate() {
            for (k, e) in p.entries.iter().enumerate() {
                v[idx * self.rank + k] = e.coefficient(m);
            }
        }
        v
    }
}

/// Exact solution space of the parametric system with `deg P_i ≤ dmax`.
pub fn solve_invariants(
    rs: &RootSystem,
    c: &DenominatorScalar,
    dmax: u32,
) -> Result<GradedSolution> {
    let l = rs.rank();
    let ansatz = Ansatz::new(l, dmax);
    let denominators: Vec<Vec<Poly>> = (0..l)
        .map(|i| (0..l).map(|j| denominator(rs, c, i, j)).collect())
        .collect();
    // residual (i, j) coefficient of a monomial -> row entries
    let mut rows: BTreeMap<(usize, usize, Monomial), Vec<(usize, Scalar)>> = BTreeMap::new();
    for (idx, m) in ansatz.monos.iter().enumerate() {
        let mp = Poly::monomial(l, m.clone(), Scalar::one());
        for k in 0..l {
            let col = idx * l + k;
            for i in 0..l {
                let a = if m.degree() == 0 {
                    Poly::zero(l)
                } else {
                    wc::bgg(rs, i, &mp)?
                };
                for j in 0..l {
                    let mut r = Poly::zero(l);
                    if j == k {
                        r = &denominators[i][j] * &a;
                    }
                    let sign = i64::from(i == k) - i64::from(j == k);
                    if sign != 0 {
                        r = r - mp.scale(&scalar::int(sign * rs.pairing(j, i)));
                    }
                    for (tm, x) in r.terms() {
                        rows.entry((i, j, tm.clone()))
                            .or_default()
                            .push((col, x.clone()));
                    }
                }
            }
        }
    }
    let mut system = SparseEchelon::new(ansatz.cols());
    for row in rows.into_values() {
        system.insert(row);
    }
    let kernel = system.nullspace();
    let reduced = echelon_basis(ansatz.cols(), &kernel);
    let mut basis = Vec::with_capacity(reduced.len());
    let mut degrees = Vec::with_capacity(reduced.len());
    for v in reduced.iter().rev() {
        let sparse: Vec<(usize, Scalar)> = v
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        let lead = sparse
            .first()
            .map(|(col, _)| ansatz.column(*col).0.degree());
        let Some(d) = lead else { continue };
        basis.push(ansatz.tuple(&sparse));
        degrees.push(d);
    }
    // stable sort keeps the deglex-ascending order inside each degree
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by_key(|&k| degrees[k]);
    Ok(GradedSolution {
        c: c.clone(),
        dmax,
        basis: order.iter().map(|&k| basis[k].clone()).collect(),
        degrees: order.iter().map(|&k| degrees[k]).collect(),
    })
}

/// A module generator of the solution space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub p: PTuple,
    /// Degree of the corresponding `J` (one more than the `P`-degree).
    pub q_degree: u32,
}

/// Generators of the solutions with `deg P ≤ dmax` as a module over the
/// `W`-invariants: at each degree, the echelon basis elements not in the
/// span of `f·G` for invariants `f` and earlier generators `G` are kept.
pub fn extract_generators_upto(
    rs: &RootSystem,
    c: &DenominatorScalar,
    dmax: u32,
) -> Result<Vec<Generator>> {
    let sol = solve_invariants(rs, c, dmax)?;
    let ansatz = Ansatz::new(rs.rank(), dmax);
    let invariants: Vec<Vec<Poly>> = (0..=dmax)
        .map(|d| wc::invariant_basis(rs, d))
        .collect::<Result<_>>()?;
    let mut generators: Vec<Generator> = Vec::new();
    for d in 0..=dmax {
        let mut span = SparseEchelon::new(ansatz.cols());
        for g in &generators {
            let gd = g.q_degree - 1;
            for fd in 0..=(d - gd) {
                for f in &invariants[fd as usize] {
                    span.insert(sparse_coords(&ansatz, &g.p.mul_poly(f)));
                }
            }
        }
        for (b, _) in sol.basis.iter().zip(&sol.degrees).filter(|(_, &e)| e == d) {
            if span.insert(sparse_coords(&ansatz, b)) {
                generators.push(Generator {
                    p: b.clone(),
                    q_degree: d + 1,
                });
            }
        }
    }
    Ok(generators)
}

/// Generators up to the largest exponent, where all of them live.
pub fn extract_generators(rs: &RootSystem, c: &DenominatorScalar) -> Result<Vec<Generator>> {
    let top = crate::filtration::exponents(rs.lie_type())?
        .into_iter()
        .max()
        .unwrap_or(1);
    extract_generators_upto(rs, c, top - 1)
}

fn sparse_coords(ansatz: &Ansatz, p: &PTuple) -> Vec<(usize, Scalar)> {
    ansatz
        .coordinates(p)
        .into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// Predicted `dim{solutions with deg q ≤ d}` for a free module with
/// generators in degrees `exponents` over a polynomial ring with generators
/// in degrees `exponents + 1`.
pub fn free_module_dimension(exponents: &[u32], d: u32) -> usize {
    let invariant_degrees: Vec<u32> = exponents.iter().map(|m| m + 1).collect();
    // counts[k] = number of invariant monomials of degree exactly k
    let mut counts = vec![0usize; d as usize + 1];
    counts[0] = 1;
    for &e in &invariant_degrees {
        for k in e as usize..=d as usize {
            counts[k] += counts[k - e as usize];
        }
    }
    exponents
        .iter()
        .filter(|&&m| m <= d)
        .map(|&m| counts[..=(d - m) as usize].iter().sum::<usize>())
        .sum()
}
