//! Brute-force check at rank one: the enveloping algebra of `sl₂` in the PBW
//! basis `y^a h^b x^c`, invariants of `V ⊗ F^m U` computed as the joint
//! kernel of `x` and `y`, and their Harish-Chandra projections.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::scalar::{self, Scalar};
use crate::exact::sparse::SparseEchelon;
use crate::exact::{Monomial, Poly};
use crate::root_system::{LieType, RootSystem};
use crate::weyl_calculus::{self as wc, is_psi_fixed};
use crate::zhelobenko::{solve_invariants, DenominatorScalar, P_to_q};

/// Exponents `(a, b, c)` of `y^a h^b x^c`.
pub type PbwMonomial = (u32, u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    H,
    Y,
}

/// An element of `U(sl₂)` in straightened form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwElement {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl PbwElement {
    pub fn zero() -> Self {
        PbwElement::default()
    }

    pub fn one() -> Self {
        PbwElement::monomial((0, 0, 0), Scalar::one())
    }

    pub fn letter(l: Letter) -> Self {
        let m = match l {
            Letter::X => (0, 0, 1),
            Letter::H => (0, 1, 0),
            Letter::Y => (1, 0, 0),
        };
        PbwElement::monomial(m, Scalar::one())
    }

    pub fn monomial(m: PbwMonomial, c: Scalar) -> Self {
        let mut e = PbwElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `a + b + c` among the terms.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b, c)| a + b + c).max()
    }

    fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * k);
        }
        out
    }

    /// `self · letter`, straightened.
    pub fn mul_letter(&self, l: Letter) -> PbwElement {
        let mut out = PbwElement::zero();
        for (&(a, b, c), k) in &self.terms {
            match l {
                Letter::X => out.add_term((a, b, c + 1), k.clone()),
                // x^c h = (h − 2c) x^c
                Letter::H => {
                    out.add_term((a, b + 1, c), k.clone());
                    out.add_term((a, b, c), k * scalar::int(-2 * i64::from(c)));
                }
                // h^b x^c y = y (h − 2)^b x^c + c·h^b (h − c + 1) x^{c−1}
                Letter::Y => {
                    for (j, binom) in binomials(b).into_iter().enumerate() {
                        let coeff = scalar::int(binom * (-2i64).pow(b - j as u32));
                        out.add_term((a + 1, j as u32, c), k * coeff);
                    }
                    if c > 0 {
                        let kc = k * scalar::int(i64::from(c));
                        out.add_term((a, b + 1, c - 1), kc.clone());
                        out.add_term((a, b, c - 1), kc * scalar::int(1 - i64::from(c)));
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (&(a, b, c), k) in &other.terms {
            let mut acc = self.clone();
            let word = core::iter::repeat_n(Letter::Y, a as usize)
                .chain(core::iter::repeat_n(Letter::H, b as usize))
                .chain(core::iter::repeat_n(Letter::X, c as usize));
            for l in word {
                acc = acc.mul_letter(l);
            }
            out = out.add(&acc.scale(k));
        }
        out
    }

    /// `[z, self]`.
    pub fn ad(&self, z: Letter) -> PbwElement {
        let zl = PbwElement::letter(z);
        zl.mul(self).add(&self.mul_letter(z).scale(&-Scalar::one()))
    }
}

fn binomials(n: u32) -> Vec<i64> {
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row
}

/// PBW monomials with `a + b + c ≤ m`.
pub fn pbw_basis(m: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for total in 0..=m {
        for a in 0..=total {
            for b in 0..=total - a {
                out.push((a, b, total - a - b));
            }
        }
    }
    out
}

/// A finite-dimensional `sl₂`-module given by the matrices of `x`, `h`, `y`
/// (columns are images) in a weight basis.
#[derive(Clone, Debug)]
pub struct Sl2Module {
    pub dim: usize,
    x: Vec<Vec<(usize, Scalar)>>,
    y: Vec<Vec<(usize, Scalar)>>,
    weights: Vec<i64>,
}

impl Sl2Module {
    /// `V(n)` of highest weight `2n`: `h u_j = (2n − 2j) u_j`,
    /// `y u_j = (j + 1) u_{j+1}`, `x u_j = (2n − j + 1) u_{j−1}`.
    pub fn spin(n: u32) -> Self {
        let d = 2 * n as usize + 1;
        let lam = 2 * i64::from(n);
        let x = (0..d)
            .map(|j| {
                if j == 0 {
                    vec![]
                } else {
                    vec![(j - 1, scalar::int(lam - j as i64 + 1))]
                }
            })
            .collect();
        let y = (0..d)
            .map(|j| {
                if j + 1 == d {
                    vec![]
                } else {
                    vec![(j + 1, scalar::int(j as i64 + 1))]
                }
            })
            .collect();
        Sl2Module {
            dim: d,
            x,
            y,
            weights: (0..d).map(|j| lam - 2 * j as i64).collect(),
        }
    }

    /// The adjoint module on the basis `(x, h, y)`.
    pub fn adjoint() -> Self {
        Sl2Module {
            dim: 3,
            // [x, x] = 0, [x, h] = −2x, [x, y] = h
            x: vec![
                vec![],
                vec![(0, scalar::int(-2))],
                vec![(1, scalar::int(1))],
            ],
            // [y, x] = −h, [y, h] = 2y, [y, y] = 0
            y: vec![
                vec![(1, scalar::int(-1))],
                vec![(2, scalar::int(2))],
                vec![],
            ],
            weights: vec![2, 0, -2],
        }
    }

    fn act(&self, z: Letter, k: usize) -> &[(usize, Scalar)] {
        match z {
            Letter::X => &self.x[k],
            Letter::Y => &self.y[k],
            Letter::H => unreachable!("h acts diagonally"),
        }
    }

    fn zero_weight(&self) -> Option<usize> {
        self.weights.iter().position(|&w| w == 0)
    }
}

/// Harish-Chandra images of a basis of `(V ⊗ F^m U)^{sl₂}`: the coefficient
/// polynomials of `v₀ ⊗ h^b`, written in the variable `h_1`.
pub fn harish_chandra_images(module: &Sl2Module, m: u32) -> Vec<Poly> {
    let basis = pbw_basis(m);
    let nb = basis.len();
    let cols = module.dim * nb;
    let mut rows: BTreeMap<(u8, usize, PbwMonomial), Vec<(usize, Scalar)>> = BTreeMap::new();
    for (zi, z) in [Letter::X, Letter::Y].into_iter().enumerate() {
        for (bk, b) in basis.iter().enumerate() {
            let u = PbwElement::monomial(*b, Scalar::one());
            let adu = u.ad(z);
            for k in 0..module.dim {
                let col = k * nb + bk;
                // z·(v_k ⊗ u) = z v_k ⊗ u + v_k ⊗ [z, u]
                for (k2, c) in module.act(z, k) {
                    rows.entry((zi as u8, *k2, *b))
                        .or_default()
                        .push((col, c.clone()));
                }
                for (mono, c) in adu.terms() {
                    rows.entry((zi as u8, k, *mono))
                        .or_default()
                        .push((col, c.clone()));
                }
            }
        }
    }
    let mut system = SparseEchelon::new(cols);
    for r in rows.into_values() {
        system.insert(r);
    }
    let Some(v0) = module.zero_weight() else {
        return Vec::new();
    };
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            Poly::from_terms(
                1,
                basis
                    .iter()
                    .enumerate()
                    .filter(|(_, (a, _, c))| *a == 0 && *c == 0)
                    .map(|(bk, (_, b, _))| (Monomial::new(vec![*b]), v[v0 * nb + bk].clone())),
            )
        })
        .filter(|p| !p.is_zero())
        .collect()
}

/// Dimension of the span of polynomials of degree at most `d` (rank one).
fn poly_span(polys: &[Poly], d: u32) -> SparseEchelon {
    let mut e = SparseEchelon::new(d as usize + 1);
    for p in polys {
        e.insert(
            p.terms()
                .map(|(m, c)| (m.exponents()[0] as usize, c.clone())),
        );
    }
    e
}

fn same_poly_span(a: &[Poly], b: &[Poly], d: u32) -> bool {
    let ea = poly_span(a, d);
    let eb = poly_span(b, d);
    ea.rank() == eb.rank()
        && b.iter().all(|p| {
            ea.contains(
                p.terms()
                    .map(|(m, c)| (m.exponents()[0] as usize, c.clone())),
            )
        })
}

/// `S(𝔥)^{s.}·ψ_n` truncated at degree `m`, from the dot-invariants.
pub fn dot_invariants_times_psi(n: u32, m: u32) -> Result<Vec<Poly>> {
    let rs = RootSystem::new(LieType::new(crate::root_system::Family::A, 1)?);
    let psi = wc::psi(&rs, n, 0)?;
    let mut out = Vec::new();
    if m < n {
        return Ok(out);
    }
    for d in 0..=(m - n) {
        for f in wc::dot_invariant_basis(&rs, d)? {
            out.push(&f * &psi);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRecord {
    pub m: u32,
    pub spin: u32,
    /// Dimension of the Harish-Chandra image.
    pub dim_image: usize,
    /// Dimension of the space it is compared with.
    pub dim_expected: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub mmax: u32,
    /// Spin 1 in the adjoint realisation against the `ξ`-invariants.
    pub adjoint: Vec<OracleRecord>,
    /// Spins 0, 1, 2 against dot-invariants times `ψ_n`.
    pub isotypic: Vec<OracleRecord>,
    /// Every spin-2 image satisfies the `ψ_2` divisibility criterion.
    pub spin2_divisible: bool,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.spin2_divisible && self.adjoint.iter().chain(&self.isotypic).all(|r| r.equal)
    }
}

pub const ORACLE_MAX_DEGREE: u32 = 6;

/// Rank-one oracle for `m = 0 … mmax`.
pub fn sl2_pbw_oracle(mmax: u32) -> Result<OracleReport> {
    if mmax > ORACLE_MAX_DEGREE {
        return Err(Error::OutOfRange {
            what: "mmax",
            value: u64::from(mmax),
            max: u64::from(ORACLE_MAX_DEGREE),
        });
    }
    let rs = RootSystem::new(LieType::new(crate::root_system::Family::A, 1)?);
    let sol = solve_invariants(
        &rs,
        &DenominatorScalar::enveloping(),
        mmax.saturating_sub(1),
    )?;
    let xi_polys: Vec<(u32, Poly)> = sol
        .basis
        .iter()
        .zip(&sol.degrees)
        .map(|(p, &d)| Ok((d + 1, P_to_q(&rs, p)?.coords()[0].clone())))
        .collect::<Result<_>>()?;
    let adjoint = Sl2Module::adjoint();
    let mut report = OracleReport {
        mmax,
        adjoint: Vec::new(),
        isotypic: Vec::new(),
        spin2_divisible: true,
    };
    for m in 0..=mmax {
        let hc = harish_chandra_images(&adjoint, m);
        let xi: Vec<Poly> = xi_polys
            .iter()
            .filter(|(d, _)| *d <= m)
            .map(|(_, q)| q.clone())
            .collect();
        report.adjoint.push(record(m, 1, &hc, &xi));
        for spin in 0..=2 {
            let hc = harish_chandra_images(&Sl2Module::spin(spin), m);
            let expected = dot_invariants_times_psi(spin, m)?;
            report.isotypic.push(record(m, spin, &hc, &expected));
            if spin == 2 {
                for q in &hc {
                    report.spin2_divisible &= is_psi_fixed(&rs, 2, 0, q)?;
                }
            }
        }
    }
    Ok(report)
}

fn record(m: u32, spin: u32, image: &[Poly], expected: &[Poly]) -> OracleRecord {
    OracleRecord {
        m,
        spin,
        dim_image: poly_span(image, m).rank(),
        dim_expected: poly_span(expected, m).rank(),
        equal: same_poly_span(image, expected, m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(ls: &[Letter]) -> PbwElement {
        ls.iter()
            .fold(PbwElement::one(), |acc, l| acc.mul_letter(*l))
    }

    #[test]
    fn commutation_relations() {
        use Letter::*;
        let xy = word(&[X, Y]);
        let yx = word(&[Y, X]);
        assert_eq!(xy.add(&yx.scale(&-Scalar::one())), PbwElement::letter(H));
        let hx = word(&[H, X]);
        let xh = word(&[X, H]);
        assert_eq!(
            hx.add(&xh.scale(&-Scalar::one())),
            PbwElement::letter(X).scale(&scalar::int(2))
        );
        let hy = word(&[H, Y]);
        let yh = word(&[Y, H]);
        assert_eq!(
            hy.add(&yh.scale(&-Scalar::one())),
            PbwElement::letter(Y).scale(&scalar::int(-2))
        );
    }

    #[test]
    fn multiplication_is_associative() {
        use Letter::*;
        let a = word(&[X, H, Y]).add(&word(&[Y]));
        let b = word(&[X, X, Y]);
        let c = word(&[H, Y, X]).add(&PbwElement::one());
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn casimir_projection() {
        // centre in degree ≤ 2: 1 and the Casimir, projecting to h²/2 + h
        let hc = harish_chandra_images(&Sl2Module::spin(0), 2);
        assert_eq!(poly_span(&hc, 2).rank(), 2);
        let cas = Poly::parse(1, "h1^2 + 2*h1").unwrap();
        assert!(poly_span(&hc, 2).contains(
            cas.terms()
                .map(|(m, c)| (m.exponents()[0] as usize, c.clone()))
        ));
    }

    #[test]
    fn adjoint_and_spin_one_agree() {
        for m in 0..=4 {
            let a = harish_chandra_images(&Sl2Module::adjoint(), m);
            let b = harish_chandra_images(&Sl2Module::spin(1), m);
            assert!(same_poly_span(&a, &b, m), "m = {m}");
        }
    }

    #[test]
    fn low_degree_images() {
        assert!(harish_chandra_images(&Sl2Module::adjoint(), 0).is_empty());
        let one = harish_chandra_images(&Sl2Module::adjoint(), 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].degree().finite(), Some(1));
        let two = harish_chandra_images(&Sl2Module::spin(2), 2);
        assert!(same_poly_span(
            &two,
            &[Poly::parse(1, "h1^2 - h1").unwrap()],
            2
        ));
    }

    #[test]
    fn oracle_passes_to_degree_four() {
        let r = sl2_pbw_oracle(4).unwrap();
        let dims: Vec<usize> = r.adjoint.iter().map(|x| x.dim_image).collect();
        assert_eq!(dims, vec![0, 1, 1, 2, 2]);
        assert!(r.passed(), "{r:?}");
    }
}
