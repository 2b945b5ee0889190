//! Root systems of the simple Lie types A–G, their Langlands duals and Weyl
//! groups.
//!
//! Conventions: nodes follow Bourbaki numbering, and the Cartan matrix is
//! stored with `cartan[i][j] = α_j(h_i)`, the pairing of the simple root
//! `α_j` with the simple coroot `h_i`. The invariant form is normalised so
//! that long roots have squared length 2.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::scalar::{self, Scalar};
use crate::exact::ExactMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let legal = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if legal {
            Ok(LieType { family, rank })
        } else {
            Err(Error::IllegalType(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Type of the Langlands dual (B and C swap; all others are self-dual).
    pub fn dual(&self) -> LieType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        // B2 and C2 are isomorphic but keep their labels swapped.
        LieType {
            family,
            rank: self.rank,
        }
    }

    /// `|W|`, from the classical order formulas.
    pub fn weyl_group_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Squared lengths of the simple roots in units where short roots have
    /// length 1, plus the Dynkin edges.
    fn dynkin(&self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |k: usize| {
            (0..k.saturating_sub(1))
                .map(|i| (i, i + 1))
                .collect::<Vec<_>>()
        };
        match self.family {
            Family::A => (vec![1; n], chain(n)),
            Family::B => {
                let mut l = vec![2; n];
                l[n - 1] = 1;
                (l, chain(n))
            }
            Family::C => {
                let mut l = vec![1; n];
                l[n - 1] = 2;
                (l, chain(n))
            }
            Family::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                (vec![1; n], e)
            }
            Family::E => {
                // 1-3-4-5-6(-7-8), with 2 attached to 4 (Bourbaki).
                let mut e = vec![(0, 2), (2, 3), (1, 3)];
                for k in 3..n - 1 {
                    e.push((k, k + 1));
                }
                (vec![1; n], e)
            }
            Family::F => (vec![2, 2, 1, 1], chain(4)),
            Family::G => (vec![1, 3], chain(2)),
        }
    }

    /// Bourbaki Cartan matrix with `C[i][j] = α_j(h_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let (len, edges) = self.dynkin();
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in edges {
            let m = len[i].max(len[j]);
            c[i][j] = -m / len[i];
            c[j][i] = -m / len[j];
        }
        c
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Parses `"A1"`, `"b3"`, `"G2"`, … case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::IllegalType(String::from(t));
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        LieType::new(family, rank)
    }
}

/// Which basis a [`Weight`]'s coordinates refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Fundamental weights `ϖ_i`; coordinates are the values `λ(h_i)`.
    Fundamental,
    /// Simple roots `α_i`.
    SimpleRoot,
    /// Simple coroots `α_i∨ = 2α_i/(α_i, α_i)`, viewed in `𝔥*` via the form.
    Coroot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub coords: Vec<Scalar>,
    pub basis: Basis,
}

impl Weight {
    pub fn new(coords: Vec<Scalar>, basis: Basis) -> Self {
        Weight { coords, basis }
    }

    pub fn from_i64(coords: &[i64], basis: Basis) -> Self {
        Weight::new(coords.iter().map(|&v| scalar::int(v)).collect(), basis)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    root_index: BTreeMap<Vec<i64>, usize>,
    form: ExactMatrix,
    root_to_weight: ExactMatrix,
    weight_to_root: ExactMatrix,
}

impl RootSystem {
    pub fn new(t: LieType) -> Self {
        Self::from_cartan(t, t.cartan_matrix())
    }

    /// Builds the system for a known type from a Cartan matrix in the
    /// `C[i][j] = α_j(h_i)` convention.
    pub fn from_cartan(lie_type: LieType, cartan: Vec<Vec<i64>>) -> Self {
        let n = cartan.len();
        assert_eq!(n, lie_type.rank(), "Cartan matrix size must equal the rank");
        // Squared lengths from C[i][j]/C[j][i] = l_j/l_i along the Dynkin graph.
        let mut len: Vec<Option<Scalar>> = vec![None; n];
        len[0] = Some(Scalar::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && len[j].is_none() {
                    let lj = len[i].clone().unwrap() * scalar::ratio(cartan[i][j], cartan[j][i]);
                    len[j] = Some(lj);
                    queue.push_back(j);
                }
            }
        }
        let len: Vec<Scalar> = len
            .into_iter()
            .map(|l| l.expect("Dynkin diagram of a simple type is connected"))
            .collect();
        let longest = len.iter().max().unwrap().clone();
        let norm = scalar::int(2) / longest;
        let mut form = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                // (α_i, α_j) = C[i][j]·(α_i, α_i)/2
                form[(i, j)] = scalar::int(cartan[i][j]) * &len[i] * &norm / scalar::int(2);
            }
        }
        let mut root_to_weight = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                root_to_weight[(i, j)] = scalar::int(cartan[i][j]);
            }
        }
        let weight_to_root = root_to_weight
            .inverse()
            .expect("Cartan matrix of a simple type is invertible");
        let positive_roots = close_positive_roots(&cartan);
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        RootSystem {
            lie_type,
            cartan,
            positive_roots,
            root_index,
            form,
            root_to_weight,
            weight_to_root,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `α_j(h_i)`.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// Positive roots in the simple-root basis, ordered by height and then
    /// descending lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots followed by their negatives, in matching order.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut all = self.positive_roots.clone();
        all.extend(
            self.positive_roots
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        all
    }

    pub fn positive_root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.root_index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.root_index.contains_key(&neg)
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// `β(h_i)` for `β` in the simple-root basis.
    pub fn root_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan[i]).map(|(b, c)| b * c).sum()
    }

    /// Invariant form of two vectors given in the simple-root basis.
    pub fn inner(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let n = self.rank();
        let mut s = Scalar::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[j].is_zero() {
                    s += &a[i] * &self.form[(i, j)] * &b[j];
                }
            }
        }
        s
    }

    pub fn inner_roots(&self, a: &[i64], b: &[i64]) -> Scalar {
        let a: Vec<Scalar> = a.iter().map(|&x| scalar::int(x)).collect();
        let b: Vec<Scalar> = b.iter().map(|&x| scalar::int(x)).collect();
        self.inner(&a, &b)
    }

    pub fn form(&self) -> &ExactMatrix {
        &self.form
    }

    /// Coefficients of the coroot `β∨ = 2β/(β, β)` in the simple coroots `h_i`.
    pub fn coroot_coefficients(&self, beta: &[i64]) -> Vec<i64> {
        let bb = self.inner_roots(beta, beta);
        (0..self.rank())
            .map(|i| {
                let c = scalar::int(beta[i]) * &self.form[(i, i)] / &bb;
                scalar::to_i64(&c).expect("coroot coefficients are integers")
            })
            .collect()
    }

    /// Change of basis α-coordinates → ϖ-coordinates (equals the Cartan matrix).
    pub fn root_to_weight(&self) -> &ExactMatrix {
        &self.root_to_weight
    }

    pub fn weight_to_root(&self) -> &ExactMatrix {
        &self.weight_to_root
    }

    /// Simple root `α_i` in the ϖ-basis.
    pub fn simple_root_in_weights(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|k| self.cartan[k][i]).collect()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// Re-expresses a weight in another basis.
    pub fn convert(&self, w: &Weight, to: Basis) -> Weight {
        if w.basis == to {
            return w.clone();
        }
        let root = match w.basis {
            Basis::SimpleRoot => w.coords.clone(),
            Basis::Fundamental => self.weight_to_root.mul_vec(&w.coords).expect("rank"),
            Basis::Coroot => w
                .coords
                .iter()
                .enumerate()
                .map(|(i, c)| c * scalar::int(2) / &self.form[(i, i)])
                .collect(),
        };
        let coords = match to {
            Basis::SimpleRoot => root,
            Basis::Fundamental => self.root_to_weight.mul_vec(&root).expect("rank"),
            Basis::Coroot => root
                .iter()
                .enumerate()
                .map(|(i, c)| c * &self.form[(i, i)] / scalar::int(2))
                .collect(),
        };
        Weight::new(coords, to)
    }

    /// `s_i(w) = w − w(h_i)·α_i`, returned in the basis of `w`.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        if w.coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: w.coords.len(),
            });
        }
        let fund = self.convert(w, Basis::Fundamental);
        let t = fund.coords[i].clone();
        let coords = fund
            .coords
            .iter()
            .enumerate()
            .map(|(k, c)| c - &t * scalar::int(self.cartan[k][i]))
            .collect();
        Ok(self.convert(&Weight::new(coords, Basis::Fundamental), w.basis))
    }

    /// Half-sum of the positive roots, in the ϖ-basis.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![Scalar::one(); self.rank()], Basis::Fundamental)
    }

    /// Half-sum of positive roots computed directly in the α-basis.
    pub fn rho_by_summation(&self) -> Weight {
        let n = self.rank();
        let mut s = vec![Scalar::zero(); n];
        for r in &self.positive_roots {
            for (acc, x) in s.iter_mut().zip(r) {
                *acc += scalar::int(*x);
            }
        }
        Weight::new(
            s.into_iter().map(|x| x / scalar::int(2)).collect(),
            Basis::SimpleRoot,
        )
    }

    /// The Langlands dual: transposed Cartan matrix, roots = coroots.
    pub fn langlands_dual(&self) -> RootSystem {
        let n = self.rank();
        let t = (0..n)
            .map(|i| (0..n).map(|j| self.cartan[j][i]).collect())
            .collect();
        RootSystem::from_cartan(self.lie_type.dual(), t)
    }

    /// Matrix of `s_i` acting on the coordinate functions:
    /// `h_j ↦ h_j − α_i(h_j)·h_i` is row `j`.
    pub fn reflection_substitution(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| i64::from(j == k) - if k == i { self.cartan[j][i] } else { 0 })
                    .collect()
            })
            .collect()
    }

    /// Every Weyl group element as a substitution matrix on the coordinates
    /// `h_1 … h_ℓ`, found by closing the simple reflections under products.
    pub fn weyl_group(&self, limit: u64) -> Result<Vec<Vec<Vec<i64>>>> {
        let order = self.lie_type.weyl_group_order();
        if order > limit {
            return Err(Error::GroupTooLarge { order_bound: order });
        }
        let n = self.rank();
        let gens: Vec<_> = (0..n).map(|i| self.reflection_substitution(i)).collect();
        let id: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen = BTreeSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let p = int_mat_mul(&w, g);
                if seen.insert(p.clone()) {
                    out.push(p.clone());
                    queue.push_back(p);
                }
            }
        }
        Ok(out)
    }
}

pub(crate) fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

/// All positive roots, by closing the simple roots under simple reflections.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = beta.iter().zip(&cartan[i]).map(|(b, c)| b * c).sum();
            let mut r = beta.clone();
            r[i] -= p;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&x| x >= 0))
        .collect();
    pos.sort_by(|a, b| {
        RootSystem::height(a)
            .cmp(&RootSystem::height(b))
            .then_with(|| b.cmp(a))
    });
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn parses_types_case_insensitively() {
        assert_eq!("g2".parse::<LieType>().unwrap().to_string(), "G2");
        assert!("B1".parse::<LieType>().is_err());
        assert!("E9".parse::<LieType>().is_err());
        assert!("D2".parse::<LieType>().is_err());
        assert!("X3".parse::<LieType>().is_err());
        assert!("A".parse::<LieType>().is_err());
    }

    #[test]
    fn positive_root_examples() {
        assert_eq!(rs("A2").positive_roots().len(), 3);
        assert_eq!(rs("G2").positive_roots().len(), 6);
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.cartan(), &[vec![2]]);
    }

    #[test]
    fn bourbaki_cartan_matrices() {
        assert_eq!(rs("B2").cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs("C2").cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs("G2").cartan(), &[vec![2, -3], vec![-1, 2]]);
        // E6: node 2 hangs off node 4.
        let e6 = rs("E6");
        assert_eq!(e6.pairing(1, 3), -1);
        assert_eq!(e6.pairing(0, 2), -1);
        assert_eq!(e6.pairing(0, 1), 0);
    }

    #[test]
    fn rho_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.rho().coords, vec![scalar::int(1), scalar::int(1)]);
        assert_eq!(
            a2.convert(&a2.rho(), Basis::SimpleRoot),
            Weight::from_i64(&[1, 1], Basis::SimpleRoot)
        );
        assert_eq!(
            a2.rho_by_summation(),
            Weight::from_i64(&[1, 1], Basis::SimpleRoot)
        );
        let a1 = rs("A1");
        assert_eq!(a1.rho().coords[0], scalar::int(1));
    }

    #[test]
    fn langlands_dual_examples() {
        let b2 = rs("B2");
        assert_eq!(b2.langlands_dual().cartan(), rs("C2").cartan());
        assert_eq!(rs("A3").langlands_dual().cartan(), rs("A3").cartan());
        let g2 = rs("G2");
        assert_eq!(g2.langlands_dual().langlands_dual().cartan(), g2.cartan());
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        let w1 = Weight::from_i64(&[1, 0], Basis::Fundamental);
        let w2 = Weight::from_i64(&[0, 1], Basis::Fundamental);
        let a1 = Weight::from_i64(&[1, 0], Basis::SimpleRoot);
        // s1(ϖ1) = ϖ1 − α1
        let expect = Weight::from_i64(&[-1, 1], Basis::Fundamental);
        assert_eq!(a2.simple_reflection(0, &w1).unwrap(), expect);
        assert_eq!(a2.simple_reflection(0, &w2).unwrap(), w2);
        assert_eq!(
            a2.simple_reflection(0, &a1).unwrap(),
            Weight::from_i64(&[-1, 0], Basis::SimpleRoot)
        );
        assert!(a2.simple_reflection(2, &w1).is_err());
    }

    #[test]
    fn form_normalisation() {
        let g2 = rs("G2");
        assert_eq!(g2.form()[(1, 1)], scalar::int(2));
        assert_eq!(g2.form()[(0, 0)], scalar::ratio(2, 3));
        assert!(g2.form().is_positive_definite());
        let b3 = rs("B3");
        assert_eq!(b3.form()[(2, 2)], scalar::int(1));
    }

    #[test]
    fn weyl_group_orders_match_formula() {
        for t in ["A1", "A3", "B3", "C3", "D4", "G2", "F4"] {
            let r = rs(t);
            let w = r.weyl_group(10_000).unwrap();
            assert_eq!(w.len() as u64, r.lie_type().weyl_group_order(), "{t}");
        }
        assert!(rs("E8").weyl_group(10_000).is_err());
    }
}
