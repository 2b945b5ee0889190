//! The filtration `F^m(𝔥) = ker (ad e∨)^{m+1} ∩ 𝔥` cut out by the principal
//! nilpotent of the Langlands dual, its Killing-orthogonal summands, and the
//! exponents.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::matrix::{same_span, span_rank};
use crate::exact::scalar::{self, Scalar};
use crate::exact::sparse::echelon_basis;
use crate::exact::ExactMatrix;
use crate::lie::{Element, LieAlgebra};
use crate::root_system::{LieType, RootSystem};

/// The flag `F⁰ ⊂ F¹ ⊂ …` in the Cartan basis `{h_i∨}` of the dual algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationFlag {
    pub lie_type: LieType,
    /// `subspaces[m]` is a reduced echelon basis of `F^m`; the last entry is
    /// the whole Cartan subalgebra.
    pub subspaces: Vec<Vec<Vec<Scalar>>>,
    /// Jump degrees with multiplicity, ascending.
    pub exponents: Vec<u32>,
    /// `(m, basis of F^m ∩ (F^{m−1})^⊥)` for each distinct exponent.
    pub summands: Vec<(u32, Vec<Vec<Scalar>>)>,
}

impl FiltrationFlag {
    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Vec::len).collect()
    }

    /// `F^m`, saturating at the top of the flag.
    pub fn subspace(&self, m: u32) -> &[Vec<Scalar>] {
        let k = (m as usize).min(self.subspaces.len() - 1);
        &self.subspaces[k]
    }

    /// `F^m` in fundamental-weight coordinates of the original algebra,
    /// via `h_i∨ ↦ α_i`.
    pub fn subspace_in_weights(&self, rs: &RootSystem, m: u32) -> Vec<Vec<Scalar>> {
        self.subspace(m)
            .iter()
            .map(|v| coroot_to_weights(rs, v))
            .collect()
    }
}

/// `Σ v_i h_i∨ ↦ Σ v_i α_i`, written in the `ϖ`-basis.
pub fn coroot_to_weights(rs: &RootSystem, v: &[Scalar]) -> Vec<Scalar> {
    let c = rs.cartan();
    (0..rs.rank())
        .map(|r| {
            v.iter()
                .enumerate()
                .fold(Scalar::zero(), |acc, (i, x)| acc + x * scalar::int(c[r][i]))
        })
        .collect()
}

pub fn principal_filtration(t: LieType) -> Result<FiltrationFlag> {
    let dual = RootSystem::new(t).langlands_dual();
    let g = LieAlgebra::new(&dual)?;
    let triple = g.principal_sl2()?;
    kernel_flag(&g, t, &triple.e)
}

/// The flag of kernels of powers of `ad e` on the Cartan subalgebra of `g`.
pub fn kernel_flag(g: &LieAlgebra, t: LieType, e: &Element) -> Result<FiltrationFlag> {
    let l = g.rank();
    let n = g.dim();
    let ad = g.ad_matrix(e);
    let mut images: Vec<Element> = (0..l).map(|i| g.basis_element(g.cartan_index(i))).collect();
    let mut subspaces: Vec<Vec<Vec<Scalar>>> = Vec::new();
    let mut exponents = Vec::new();
    let mut m = 0u32;
    while subspaces.last().is_none_or(|s| s.len() < l) {
        if m as usize > n {
            return Err(Error::Inconsistency(String::from(
                "ad e is not nilpotent on 𝔥",
            )));
        }
        for v in images.iter_mut() {
            *v = ad.mul_vec(v)?;
        }
        // columns are the images of h_1 … h_ℓ under (ad e)^{m+1}
        let mut mat = ExactMatrix::zeros(n, l);
        for (i, v) in images.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                mat[(r, i)] = x.clone();
            }
        }
        let kernel = echelon_basis(l, &mat.nullspace());
        let prev = subspaces.last().map_or(0, Vec::len);
        if kernel.len() < prev {
            return Err(Error::Inconsistency(format!("F^{m} shrinks")));
        }
        exponents.extend(core::iter::repeat_n(m, kernel.len() - prev));
        subspaces.push(kernel);
        m += 1;
    }
    let killing = cartan_killing(g);
    let mut summands = Vec::new();
    let mut distinct = exponents.clone();
    distinct.dedup();
    for &m in &distinct {
        let lower: &[Vec<Scalar>] = if m == 0 {
            &[]
        } else {
            &subspaces[m as usize - 1]
        };
        let summand = orthogonal_part(&killing, &subspaces[m as usize], lower)?;
        let expected = exponents.iter().filter(|&&x| x == m).count();
        if summand.len() != expected {
            return Err(Error::Inconsistency(format!(
                "summand for m = {m} has dimension {}, expected {expected}",
                summand.len()
            )));
        }
        summands.push((m, summand));
    }
    let flag = FiltrationFlag {
        lie_type: t,
        subspaces,
        exponents,
        summands,
    };
    check_summands(&killing, &flag)?;
    Ok(flag)
}

/// Killing form of the ambient algebra restricted to its Cartan subalgebra.
pub fn cartan_killing(g: &LieAlgebra) -> ExactMatrix {
    let l = g.rank();
    let k = g.killing();
    let mut out = ExactMatrix::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            out[(i, j)] = k[(g.cartan_index(i), g.cartan_index(j))].clone();
        }
    }
    out
}

fn bilinear(form: &ExactMatrix, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let fb = form.mul_vec(b).expect("Cartan vector");
    a.iter()
        .zip(&fb)
        .fold(Scalar::zero(), |s, (x, y)| s + x * y)
}

/// Basis of `{x ∈ span(upper) : form(x, y) = 0 for y ∈ lower}`.
fn orthogonal_part(
    form: &ExactMatrix,
    upper: &[Vec<Scalar>],
    lower: &[Vec<Scalar>],
) -> Result<Vec<Vec<Scalar>>> {
    let l = form.rows();
    if lower.is_empty() {
        return Ok(upper.to_vec());
    }
    // x = Σ c_k upper_k; the conditions are rows indexed by lower
    let rows: Vec<Vec<Scalar>> = lower
        .iter()
        .map(|y| upper.iter().map(|u| bilinear(form, u, y)).collect())
        .collect();
    let coeffs = ExactMatrix::from_rows(upper.len(), rows)?.nullspace();
    let vectors: Vec<Vec<Scalar>> = coeffs
        .iter()
        .map(|c| {
            (0..l)
                .map(|r| {
                    c.iter()
                        .zip(upper)
                        .fold(Scalar::zero(), |acc, (ck, u)| acc + ck * &u[r])
                })
                .collect()
        })
        .collect();
    Ok(echelon_basis(l, &vectors))
}

fn check_summands(form: &ExactMatrix, flag: &FiltrationFlag) -> Result<()> {
    for (a, (ma, sa)) in flag.summands.iter().enumerate() {
        for (mb, sb) in &flag.summands[a + 1..] {
            for x in sa {
                for y in sb {
                    if !bilinear(form, x, y).is_zero() {
                        return Err(Error::Inconsistency(format!(
                            "summands for m = {ma} and m = {mb} are not orthogonal"
                        )));
                    }
                }
            }
        }
    }
    let all: Vec<Vec<Scalar>> = flag
        .summands
        .iter()
        .flat_map(|(_, s)| s.iter().cloned())
        .collect();
    if all.len() != flag.rank() || span_rank(flag.rank(), &all) != flag.rank() {
        return Err(Error::Inconsistency(String::from(
            "summands do not form a direct sum decomposition of 𝔥",
        )));
    }
    let mut acc: Vec<Vec<Scalar>> = Vec::new();
    for (m, s) in &flag.summands {
        acc.extend(s.iter().cloned());
        if !same_span(flag.rank(), &acc, flag.subspace(*m)) {
            return Err(Error::Inconsistency(format!(
                "F^{m} is not the sum of the summands"
            )));
        }
    }
    Ok(())
}

/// Exponents read off the `ad h∨` spectrum of the dual algebra: the number of
/// exponents equal to `k` is `mult(2k) − mult(2k + 2)`.
pub fn exponents_from_spectrum(t: LieType) -> Result<Vec<u32>> {
    let dual = RootSystem::new(t).langlands_dual();
    let g = LieAlgebra::new(&dual)?;
    let h = g.principal_sl2()?.h;
    let ad = g.ad_matrix(&h);
    let n = g.dim();
    let mut mult: alloc::collections::BTreeMap<i64, usize> = alloc::collections::BTreeMap::new();
    for r in 0..n {
        for c in 0..n {
            if r != c && !ad[(r, c)].is_zero() {
                return Err(Error::Inconsistency(String::from("ad h∨ is not diagonal")));
            }
        }
        let ev = scalar::to_i64(&ad[(r, r)])
            .ok_or_else(|| Error::Inconsistency(String::from("non-integral ad h∨ eigenvalue")))?;
        *mult.entry(ev).or_insert(0) += 1;
    }
    let at = |k: i64| mult.get(&k).copied().unwrap_or(0);
    let top = mult.keys().copied().max().unwrap_or(0) / 2;
    let mut out = Vec::new();
    for k in 1..=top {
        let drop = at(2 * k).checked_sub(at(2 * k + 2)).ok_or_else(|| {
            Error::Inconsistency(format!("ad h∨ multiplicities increase at {}", 2 * k))
        })?;
        out.extend(core::iter::repeat_n(k as u32, drop));
    }
    Ok(out)
}

/// The exponents, computed from the kernel flag and from the `ad h∨`
/// spectrum; the two must agree.
pub fn exponents(t: LieType) -> Result<Vec<u32>> {
    let from_flag = principal_filtration(t)?.exponents;
    let from_spectrum = exponents_from_spectrum(t)?;
    if from_flag != from_spectrum {
        return Err(Error::Inconsistency(format!(
            "exponents disagree: kernel flag {from_flag:?}, spectrum {from_spectrum:?}"
        )));
    }
    Ok(from_flag)
}

/// Classical closed forms, used only by tests as a third opinion.
pub fn known_exponents(t: LieType) -> Vec<u32> {
    use crate::root_system::Family::*;
    let l = t.rank() as u32;
    let mut e: Vec<u32> = match t.family() {
        A => (1..=l).collect(),
        B | C => (1..=l).map(|k| 2 * k - 1).collect(),
        D => (1..l).map(|k| 2 * k - 1).chain([l - 1]).collect(),
        E if l == 6 => vec![1, 4, 5, 7, 8, 11],
        E if l == 7 => vec![1, 5, 7, 9, 11, 13, 17],
        E => vec![1, 7, 11, 13, 17, 19, 23, 29],
        F => vec![1, 5, 7, 11],
        G => vec![1, 5],
    };
    e.sort_unstable();
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn rank_one_flag() {
        let f = principal_filtration(t("A1")).unwrap();
        assert_eq!(f.dims(), vec![0, 1]);
        assert_eq!(f.exponents, vec![1]);
    }

    #[test]
    fn a2_and_g2_flags() {
        let f = principal_filtration(t("A2")).unwrap();
        assert_eq!(f.dims(), vec![0, 1, 2]);
        let g = principal_filtration(t("G2")).unwrap();
        assert_eq!(g.exponents, vec![1, 5]);
        assert_eq!(g.dims(), vec![0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn exponent_oracles_agree() {
        for s in ["A3", "B3", "C3", "D4", "G2", "F4", "D5"] {
            assert_eq!(exponents(t(s)).unwrap(), known_exponents(t(s)), "{s}");
        }
        assert_eq!(exponents(t("D4")).unwrap(), vec![1, 3, 3, 5]);
    }

    #[test]
    fn top_of_flag_in_weights_is_everything() {
        let rs = RootSystem::new(t("B2"));
        let f = principal_filtration(t("B2")).unwrap();
        assert_eq!(span_rank(2, &f.subspace_in_weights(&rs, 3)), 2);
    }
}
