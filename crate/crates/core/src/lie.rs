//! Simple Lie algebras in a Chevalley basis.
//!
//! Structure constants `N_{α,β}` are fixed by declaring `N = +(p+1)` on every
//! extraspecial pair and deriving all others from the standard relations
//! among the `N`'s; the whole bracket table is then certified by checking the
//! Jacobi identity on every basis triple before the algebra is handed out.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::scalar::{self, Scalar};
use crate::exact::ExactMatrix;
use crate::root_system::RootSystem;

/// Sparse bracket of two basis vectors: `(basis index, coefficient)` pairs.
pub type SparseVec = Vec<(usize, i64)>;

/// An element of the algebra as a coordinate vector over the basis.
pub type Element = Vec<Scalar>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    /// Positive roots followed by their negatives.
    roots: Vec<Vec<i64>>,
    table: Vec<Vec<SparseVec>>,
    killing: ExactMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Element,
    pub h: Element,
    pub f: Element,
}

struct ConstantSolver<'a> {
    rs: &'a RootSystem,
    index: BTreeMap<Vec<i64>, usize>,
    roots: &'a [Vec<i64>],
    n_pos: usize,
    memo: BTreeMap<(usize, usize), Scalar>,
}

impl ConstantSolver<'_> {
    fn len2(&self, r: usize) -> Scalar {
        self.rs.inner_roots(&self.roots[r], &self.roots[r])
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a]
            .iter()
            .zip(&self.roots[b])
            .map(|(x, y)| x + y)
            .collect();
        self.index.get(&s).copied()
    }

    fn neg(&self, a: usize) -> usize {
        if a < self.n_pos {
            a + self.n_pos
        } else {
            a - self.n_pos
        }
    }

    fn is_pos(&self, a: usize) -> bool {
        a < self.n_pos
    }

    /// The extraspecial pair of a non-simple positive root: the first
    /// positive root `α` (in the height order) with `ξ − α` a positive root.
    fn extraspecial(&self, xi: usize) -> (usize, usize) {
        (0..self.n_pos)
            .find_map(|a| {
                let d: Vec<i64> = self.roots[xi]
                    .iter()
                    .zip(&self.roots[a])
                    .map(|(x, y)| x - y)
                    .collect();
                self.index
                    .get(&d)
                    .copied()
                    .filter(|&b| self.is_pos(b))
                    .map(|b| (a, b))
            })
            .expect("non-simple positive root has a decomposition")
    }

    /// Largest `p` with `β − pα` a root.
    fn string_p(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut cur = self.roots[b].clone();
        loop {
            for (c, x) in cur.iter_mut().zip(&self.roots[a]) {
                *c -= x;
            }
            if self.index.contains_key(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    fn n(&mut self, a: usize, b: usize) -> Scalar {
        let Some(c) = self.sum(a, b) else {
            return Scalar::zero();
        };
        if let Some(v) = self.memo.get(&(a, b)) {
            return v.clone();
        }
        let v = match (self.is_pos(a), self.is_pos(b)) {
            (true, true) => {
                let (a0, b0) = self.extraspecial(c);
                let p1 = scalar::int(self.string_p(a0, b0) + 1);
                if (a, b) == (a0, b0) {
                    p1
                } else if (a, b) == (b0, a0) {
                    -p1
                } else {
                    // Four-root relation on (a, b, −α0, −β0).
                    let (na0, nb0) = (self.neg(a0), self.neg(b0));
                    let mut acc = Scalar::zero();
                    if let Some(t) = self.sum(b, na0) {
                        acc -= self.n(b, na0) * self.n(a, nb0) / self.len2(t);
                    }
                    if let Some(t) = self.sum(a, na0) {
                        acc -= self.n(na0, a) * self.n(b, nb0) / self.len2(t);
                    }
                    acc * self.len2(c) / -p1
                }
            }
            (false, false) => {
                let (na, nb) = (self.neg(a), self.neg(b));
                -self.n(na, nb)
            }
            _ => {
                // Three-root relation on (a, b, −c).
                let nc = self.neg(c);
                let lc = self.len2(c);
                let use_first = self.is_pos(b) == self.is_pos(nc);
                if use_first {
                    lc / self.len2(a) * self.n(b, nc)
                } else {
                    lc / self.len2(b) * self.n(nc, a)
                }
            }
        };
        self.memo.insert((a, b), v.clone());
        v
    }
}

impl LieAlgebra {
    /// Builds the algebra and validates the Jacobi identity on all triples.
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let rs = rs.clone();
        let roots = rs.roots();
        let n_pos = rs.positive_roots().len();
        let l = rs.rank();
        let dim = roots.len() + l;
        let index: BTreeMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let mut solver = ConstantSolver {
            rs: &rs,
            index: index.clone(),
            roots: &roots,
            n_pos,
            memo: BTreeMap::new(),
        };
        let mut table = vec![vec![SparseVec::new(); dim]; dim];
        for a in 0..roots.len() {
            for b in 0..roots.len() {
                let s: Vec<i64> = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
                if s.iter().all(|&x| x == 0) {
                    let co = rs.coroot_coefficients(&roots[a]);
                    table[a][b] = co
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (roots.len() + i, c))
                        .collect();
                } else if let Some(&c) = index.get(&s) {
                    let v = solver.n(a, b);
                    let v = scalar::to_i64(&v).ok_or_else(|| {
                        Error::Inconsistency(format!(
                            "non-integral structure constant N({a},{b}) = {v}"
                        ))
                    })?;
                    table[a][b] = vec![(c, v)];
                }
            }
            for i in 0..l {
                let p = rs.root_pairing(&roots[a], i);
                if p != 0 {
                    table[roots.len() + i][a] = vec![(a, p)];
                    table[a][roots.len() + i] = vec![(a, -p)];
                }
            }
        }
        let mut alg = LieAlgebra {
            rs,
            roots,
            table,
            killing: ExactMatrix::zeros(0, 0),
        };
        alg.check_jacobi()?;
        alg.killing = alg.compute_killing();
        Ok(alg)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Root of a root-vector basis index.
    pub fn root_of(&self, basis_index: usize) -> Option<&[i64]> {
        self.roots.get(basis_index).map(Vec::as_slice)
    }

    /// Basis index of `x_γ`.
    pub fn root_vector(&self, root: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    /// Basis index of the simple coroot `h_i`.
    pub fn cartan_index(&self, i: usize) -> usize {
        self.roots.len() + i
    }

    pub fn simple_root_vector(&self, i: usize) -> usize {
        i
    }

    pub fn simple_negative_root_vector(&self, i: usize) -> usize {
        i + self.rs.positive_roots().len()
    }

    /// Human-readable name of a basis vector: `x[1,1]`, `x[-1,0]`, `h2`.
    pub fn basis_label(&self, k: usize) -> String {
        match self.roots.get(k) {
            Some(r) => {
                let parts: Vec<String> = r.iter().map(|x| format!("{x}")).collect();
                format!("x[{}]", parts.join(","))
            }
            None => format!("h{}", k - self.roots.len() + 1),
        }
    }

    /// `[e_a, e_b]` on basis vectors.
    pub fn basis_bracket(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a][b]
    }

    pub fn basis_element(&self, k: usize) -> Element {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[k] = Scalar::one();
        v
    }

    pub fn bracket(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for (k, c) in &self.table[i][j] {
                    out[*k] += x * y * scalar::int(*c);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ [a, x]` in the basis (columns are images).
    pub fn ad_matrix(&self, a: &[Scalar]) -> ExactMatrix {
        let n = self.dim();
        let mut m = ExactMatrix::zeros(n, n);
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for j in 0..n {
                for (k, c) in &self.table[i][j] {
                    m[(*k, j)] += x * scalar::int(*c);
                }
            }
        }
        m
    }

    fn sparse_bracket(&self, a: &[(usize, i64)], b: &[(usize, i64)]) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                for (k, c) in &self.table[*i][*j] {
                    *out.entry(*k).or_insert(0) += x * y * c;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Jacobi identity on every basis triple `a < b < c` (the identity is
    /// alternating, so this covers all triples).
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let mut total: BTreeMap<usize, i64> = BTreeMap::new();
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        let yz: Vec<(usize, i64)> = self.table[y][z].clone();
                        for (k, v) in self.sparse_bracket(&[(x, 1)], &yz) {
                            *total.entry(k).or_insert(0) += v;
                        }
                    }
                    if total.values().any(|&v| v != 0) {
                        return Err(Error::Inconsistency(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            self.basis_label(a),
                            self.basis_label(b),
                            self.basis_label(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_killing(&self) -> ExactMatrix {
        let n = self.dim();
        let mut m = ExactMatrix::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                // trace of ad a ∘ ad b
                let mut tr = 0i64;
                for k in 0..n {
                    for (j, c1) in &self.table[b][k] {
                        for (i, c2) in &self.table[a][*j] {
                            if *i == k {
                                tr += c1 * c2;
                            }
                        }
                    }
                }
                if tr != 0 {
                    m[(a, b)] = scalar::int(tr);
                    m[(b, a)] = scalar::int(tr);
                }
            }
        }
        m
    }

    /// Gram matrix `κ(e_a, e_b) = tr(ad e_a ∘ ad e_b)`.
    pub fn killing(&self) -> &ExactMatrix {
        &self.killing
    }

    pub fn killing_form(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let kb = self.killing.mul_vec(b).expect("element of the algebra");
        a.iter()
            .zip(&kb)
            .map(|(x, y)| x * y)
            .fold(Scalar::zero(), |s, t| s + t)
    }

    /// The principal `sl₂`: `e = Σ x_{α_i}`, `f = Σ d_i x_{−α_i}` with `d` chosen
    /// so that `α_i(h) = 2` for every `i`, and `h = [e, f]`.
    pub fn principal_sl2(&self) -> Result<Sl2Triple> {
        let l = self.rank();
        let n = self.dim();
        let cartan = ExactMatrix::from_rows(
            l,
            self.rs
                .cartan()
                .iter()
                .map(|r| r.iter().map(|&x| scalar::int(x)).collect())
                .collect(),
        )?;
        // α_j(h) = Σ_i d_i α_j(h_i) = Σ_i d_i C[i][j] = 2, i.e. Cᵀ d = 2.
        let d = cartan
            .transpose()
            .inverse()?
            .mul_vec(&vec![scalar::int(2); l])?;
        let mut e = vec![Scalar::zero(); n];
        let mut f = vec![Scalar::zero(); n];
        for i in 0..l {
            e[self.simple_root_vector(i)] = Scalar::one();
            f[self.simple_negative_root_vector(i)] = d[i].clone();
        }
        let h = self.bracket(&e, &f);
        let triple = Sl2Triple { e, h, f };
        self.check_sl2(&triple)?;
        Ok(triple)
    }

    pub fn check_sl2(&self, t: &Sl2Triple) -> Result<()> {
        let two = scalar::int(2);
        let scaled = |v: &Element, c: &Scalar| -> Element { v.iter().map(|x| x * c).collect() };
        let ok = self.bracket(&t.h, &t.e) == scaled(&t.e, &two)
            && self.bracket(&t.h, &t.f) == scaled(&t.f, &-two.clone())
            && self.bracket(&t.e, &t.f) == t.h;
        if ok {
            Ok(())
        } else {
            Err(Error::Inconsistency(String::from("sl2 relations fail")))
        }
    }
}
