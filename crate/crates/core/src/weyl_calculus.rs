//! Weyl group actions on `S(𝔥)`, viewed as polynomial functions on `𝔥*`.
//!
//! * linear action: `(s_i p)(λ) = p(s_i λ)`, i.e. `h_j ↦ h_j − α_i(h_j)·h_i`;
//! * dot action: `(s_i.p)(λ) = p(s_i.λ)` with `w.λ = w(λ + ρ) − ρ`, i.e.
//!   `h_j ↦ h_j − α_i(h_j)·(h_i + 1)`;
//! * `θ(q)(λ) = q(λ + ρ)`, i.e. `h_i ↦ h_i + 1`, which intertwines them:
//!   `s_i.θ(q) = θ(s_i q)`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::scalar::{self, Scalar};
use crate::exact::sparse::SparseEchelon;
use crate::exact::{Monomial, Poly};
use crate::root_system::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    Linear,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Images of the generators `h_j` under `s_i` for the given action.
pub fn generator_images(rs: &RootSystem, kind: ActionKind, i: usize) -> Result<Vec<Poly>> {
    rs.check_index(i)?;
    let l = rs.rank();
    let hi = match kind {
        ActionKind::Linear => Poly::var(l, i),
        ActionKind::Dot => Poly::linear_factor(l, i, Scalar::one()),
    };
    Ok((0..l)
        .map(|j| Poly::var(l, j) - hi.scale(&scalar::int(rs.pairing(j, i))))
        .collect())
}

/// `s_i` applied to `p` under the linear or dot action.
pub fn act_simple(rs: &RootSystem, kind: ActionKind, i: usize, p: &Poly) -> Result<Poly> {
    check_rank(rs, p)?;
    p.compose(&generator_images(rs, kind, i)?)
}

/// Applies `s_{w[0]} s_{w[1]} … s_{w[k-1]}` to `p` (rightmost factor first).
pub fn act_word(rs: &RootSystem, kind: ActionKind, word: &[usize], p: &Poly) -> Result<Poly> {
    word.iter()
        .rev()
        .try_fold(p.clone(), |acc, &i| act_simple(rs, kind, i, &acc))
}

fn check_rank(rs: &RootSystem, p: &Poly) -> Result<()> {
    if p.rank() == rs.rank() {
        Ok(())
    } else {
        Err(Error::RankMismatch {
            left: rs.rank(),
            right: p.rank(),
        })
    }
}

/// The ρ-shift `θ` (forward: `h_i ↦ h_i + 1`) or its inverse.
pub fn theta(p: &Poly, direction: Direction) -> Poly {
    let l = p.rank();
    let shift = match direction {
        Direction::Forward => Scalar::one(),
        Direction::Inverse => -Scalar::one(),
    };
    let images: Vec<Poly> = (0..l)
        .map(|i| Poly::linear_factor(l, i, shift.clone()))
        .collect();
    p.compose(&images).expect("images match rank")
}

/// `ψ_{n,i} = Π_{m=1}^{n} (h_i − (m − 1))`; `ψ_{0,i} = 1`.
pub fn psi(rs: &RootSystem, n: u32, i: usize) -> Result<Poly> {
    rs.check_index(i)?;
    let l = rs.rank();
    Ok((1..=n).fold(Poly::one(l), |acc, m| {
        acc * Poly::linear_factor(l, i, scalar::int(-(i64::from(m) - 1)))
    }))
}

/// BGG operator `A_i f = (f − s_i f)/h_i` with the linear action.
pub fn bgg(rs: &RootSystem, i: usize, f: &Poly) -> Result<Poly> {
    let diff = f - &act_simple(rs, ActionKind::Linear, i, f)?;
    diff.divide_exact(&Poly::var(rs.rank(), i)).map_err(|_| {
        Error::Inconsistency(format!("f − s_{} f not divisible by h_{}", i + 1, i + 1))
    })
}

/// `ψ_{n,i}/s_i.ψ_{n,i} · s_i.q = q`, checked as `q · s_i.ψ = ψ · s_i.q`.
pub fn fixed_by_cross_multiplication(rs: &RootSystem, n: u32, i: usize, q: &Poly) -> Result<bool> {
    let psi_n = psi(rs, n, i)?;
    let s_psi = act_simple(rs, ActionKind::Dot, i, &psi_n)?;
    let s_q = act_simple(rs, ActionKind::Dot, i, q)?;
    Ok(q * &s_psi == &psi_n * &s_q)
}

/// The same condition as a divisibility criterion: `ψ_{n,i} | q` and `q/ψ` is
/// `s_i.`-invariant.
pub fn fixed_by_divisibility(rs: &RootSystem, n: u32, i: usize, q: &Poly) -> Result<bool> {
    let psi_n = psi(rs, n, i)?;
    match q.divide_exact(&psi_n) {
        Ok(p) => Ok(act_simple(rs, ActionKind::Dot, i, &p)? == p),
        Err(Error::NotDivisible) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Whether `v_0(n) ⊗ q` is fixed by `ξ_i`; both routes must agree.
pub fn is_psi_fixed(rs: &RootSystem, n: u32, i: usize, q: &Poly) -> Result<bool> {
    let a = fixed_by_cross_multiplication(rs, n, i, q)?;
    let b = fixed_by_divisibility(rs, n, i, q)?;
    if a != b {
        return Err(Error::Inconsistency(format!(
            "ψ-ratio routes disagree for n = {n}, i = {i}, q = {q}"
        )));
    }
    Ok(a)
}

/// Largest Weyl group enumerated element by element.
pub const WEYL_ENUMERATION_LIMIT: u64 = 60_000;

/// Basis (reduced echelon, deglex) of the homogeneous `W`-invariants of
/// degree `d` under the linear action, by averaging every monomial over `W`.
pub fn invariants_by_averaging(rs: &RootSystem, d: u32) -> Result<Vec<Poly>> {
    let group = rs.weyl_group(WEYL_ENUMERATION_LIMIT)?;
    let l = rs.rank();
    let monos = Monomial::of_degree(l, d);
    let images: Vec<Vec<Poly>> = group
        .iter()
        .map(|w| {
            w.iter()
                .map(|row| {
                    Poly::from_terms(
                        l,
                        row.iter()
                            .enumerate()
                            .map(|(k, &c)| (Monomial::var(l, k), scalar::int(c))),
                    )
                })
                .collect()
        })
        .collect();
    let averages = monos.iter().map(|m| {
        let p = Poly::monomial(l, m.clone(), Scalar::one());
        images.iter().fold(Poly::zero(l), |acc, img| {
            acc + p.compose(img).expect("rank")
        })
    });
    Ok(homogeneous_echelon(l, d, averages))
}

/// Same space as [`invariants_by_averaging`], computed instead as the common
/// kernel of `s_i − 1` on the degree-`d` polynomials.
pub fn invariants_by_kernel(rs: &RootSystem, d: u32) -> Result<Vec<Poly>> {
    let l = rs.rank();
    let monos = Monomial::of_degree(l, d);
    let pos = |m: &Monomial| monos.iter().position(|x| x == m).expect("same degree");
    let mut rows = SparseEchelon::new(monos.len());
    let mut eqs: alloc::collections::BTreeMap<(usize, usize), Vec<(usize, Scalar)>> =
        alloc::collections::BTreeMap::new();
    for i in 0..l {
        for (col, m) in monos.iter().enumerate() {
            let p = Poly::monomial(l, m.clone(), Scalar::one());
            let diff = act_simple(rs, ActionKind::Linear, i, &p)? - p;
            for (tm, c) in diff.terms() {
                eqs.entry((i, pos(tm))).or_default().push((col, c.clone()));
            }
        }
    }
    for row in eqs.into_values() {
        rows.insert(row);
    }
    let kernel = rows.nullspace();
    let polys = kernel
        .into_iter()
        .map(|v| Poly::from_terms(l, monos.iter().cloned().zip(v)));
    Ok(homogeneous_echelon(l, d, polys))
}

/// Homogeneous `W`-invariants of degree `d`; averages over `W` when it is
/// small enough to enumerate and solves the kernel equations otherwise.
pub fn invariant_basis(rs: &RootSystem, d: u32) -> Result<Vec<Poly>> {
    match invariants_by_averaging(rs, d) {
        Err(Error::GroupTooLarge { .. }) => invariants_by_kernel(rs, d),
        other => other,
    }
}

/// Homogeneous-degree-`d` pieces of the dot-invariants: `θ` of the linear
/// invariants (these are inhomogeneous).
pub fn dot_invariant_basis(rs: &RootSystem, d: u32) -> Result<Vec<Poly>> {
    Ok(invariant_basis(rs, d)?
        .iter()
        .map(|p| theta(p, Direction::Forward))
        .collect())
}

/// Reduced echelon basis of a family of degree-`d` forms, normalised so each
/// leading coefficient is 1.
fn homogeneous_echelon(l: usize, d: u32, polys: impl Iterator<Item = Poly>) -> Vec<Poly> {
    let monos = Monomial::of_degree(l, d);
    let mut e = SparseEchelon::new(monos.len());
    for p in polys {
        let row: Vec<(usize, Scalar)> = monos
            .iter()
            .enumerate()
            .map(|(k, m)| (k, p.coefficient(m)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        e.insert(row);
    }
    e.rref()
        .into_iter()
        .map(|(_, row)| Poly::from_terms(l, row.into_iter().map(|(k, c)| (monos[k].clone(), c))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::LieType;

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(t.parse::<LieType>().unwrap())
    }

    fn p(l: usize, s: &str) -> Poly {
        Poly::parse(l, s).unwrap()
    }

    #[test]
    fn dot_action_examples() {
        let a2 = rs("A2");
        let h1 = Poly::var(2, 0);
        assert_eq!(
            act_simple(&a2, ActionKind::Dot, 0, &h1).unwrap(),
            p(2, "-h1 - 2")
        );
        // s_1.h_2 = h_2 − α_1(h_2)(h_1 + 1) = h_2 + h_1 + 1
        assert_eq!(
            act_simple(&a2, ActionKind::Dot, 0, &Poly::var(2, 1)).unwrap(),
            p(2, "h1 + h2 + 1")
        );
        assert_eq!(
            act_simple(&a2, ActionKind::Linear, 0, &h1).unwrap(),
            p(2, "-h1")
        );
    }

    #[test]
    fn theta_examples() {
        let l = 2;
        assert_eq!(theta(&p(l, "h1 + 5"), Direction::Forward), p(l, "h1 + 6"));
        assert_eq!(theta(&Poly::one(l), Direction::Forward), Poly::one(l));
        assert_eq!(
            theta(&p(l, "h1*h2"), Direction::Inverse),
            p(l, "h1 - 1") * p(l, "h2 - 1")
        );
    }

    #[test]
    fn psi_examples() {
        let a1 = rs("A1");
        assert_eq!(psi(&a1, 0, 0).unwrap(), Poly::one(1));
        assert_eq!(psi(&a1, 2, 0).unwrap(), p(1, "h1^2 - h1"));
        assert_eq!(
            psi(&a1, 2, 0).unwrap().eval(&[scalar::int(1)]).unwrap(),
            scalar::int(0)
        );
    }

    #[test]
    fn bgg_examples() {
        let b2 = rs("B2");
        assert_eq!(
            bgg(&b2, 0, &Poly::var(2, 0)).unwrap(),
            Poly::constant(2, scalar::int(2))
        );
        assert_eq!(
            bgg(&b2, 1, &Poly::constant(2, scalar::int(7))).unwrap(),
            Poly::zero(2)
        );
        // A_i h_j = α_i(h_j)
        for (i, j) in [(0, 1), (1, 0)] {
            assert_eq!(
                bgg(&b2, i, &Poly::var(2, j)).unwrap(),
                Poly::constant(2, scalar::int(b2.pairing(j, i)))
            );
        }
    }

    #[test]
    fn psi_fixed_examples() {
        let a1 = rs("A1");
        assert!(is_psi_fixed(&a1, 1, 0, &Poly::var(1, 0)).unwrap());
        assert!(!is_psi_fixed(&a1, 1, 0, &Poly::one(1)).unwrap());
        // n = 0: any dot-invariant, e.g. (h1 + 1)^2.
        assert!(is_psi_fixed(&a1, 0, 0, &p(1, "h1^2 + 2*h1 + 1")).unwrap());
    }

    #[test]
    fn invariant_routes_agree() {
        for t in ["A2", "B2", "G2", "A3"] {
            let r = rs(t);
            for d in 0..=6 {
                assert_eq!(
                    invariants_by_averaging(&r, d).unwrap(),
                    invariants_by_kernel(&r, d).unwrap(),
                    "{t} degree {d}"
                );
            }
        }
    }

    #[test]
    fn a2_invariants_in_degrees_two_and_three() {
        let a2 = rs("A2");
        assert!(invariant_basis(&a2, 1).unwrap().is_empty());
        assert_eq!(invariant_basis(&a2, 2).unwrap().len(), 1);
        assert_eq!(invariant_basis(&a2, 3).unwrap().len(), 1);
        assert_eq!(invariant_basis(&a2, 4).unwrap().len(), 1);
        assert_eq!(invariant_basis(&a2, 6).unwrap().len(), 2);
    }
}
