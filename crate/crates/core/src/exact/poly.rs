//! Multivariate polynomials over ℚ in the coroot coordinates `h1 … hℓ`.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! degree-lexicographic order with `h1 > h2 > … > hℓ`. No zero coefficient is
//! ever stored, so structural equality is polynomial equality.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn var(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// All monomials of exactly `degree` in `rank` variables, deglex descending.
    pub fn of_degree(rank: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; rank];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e;
                rec(pos + 1, left - e, cur, out);
            }
        }
        if rank == 0 {
            if degree == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(0, degree, &mut cur, &mut out);
        out
    }

    /// All monomials of degree `<= max_degree`, deglex descending.
    pub fn up_to_degree(rank: usize, max_degree: u32) -> Vec<Monomial> {
        (0..=max_degree)
            .rev()
            .flat_map(|d| Monomial::of_degree(rank, d))
            .collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    rank: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(rank: usize) -> Self {
        Poly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, Scalar::one())
    }

    pub fn constant(rank: usize, c: Scalar) -> Self {
        Self::monomial(rank, Monomial::one(rank), c)
    }

    /// The coordinate function `h_{i+1}` (indices are 0-based).
    pub fn var(rank: usize, i: usize) -> Self {
        assert!(i < rank, "variable index {i} out of range for rank {rank}");
        Self::monomial(rank, Monomial::var(rank, i), Scalar::one())
    }

    /// `h_i + shift`.
    pub fn linear_factor(rank: usize, i: usize, shift: Scalar) -> Self {
        Self::var(rank, i) + Self::constant(rank, shift)
    }

    pub fn monomial(rank: usize, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.0.len(), rank, "monomial length must equal rank");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { rank, terms }
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Poly::zero(rank);
        for (m, c) in terms {
            assert_eq!(m.0.len(), rank, "monomial length must equal rank");
            p.add_term(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |m| Degree::Finite(m.degree()))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending deglex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous part of top degree (zero for the zero polynomial).
    pub fn top_part(&self) -> Poly {
        match self.degree() {
            Degree::NegInfinity => self.clone(),
            Degree::Finite(d) => self.homogeneous_part(d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Poly) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_rank(other)?;
        let mut out = Poly::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.rank);
        }
        Poly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.rank);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Value at the point whose `i`-th coordinate is `λ(h_i)`.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: point.len(),
            });
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, e) in point.iter().zip(&m.0) {
                if *e > 0 {
                    v *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes `h_i ↦ images[i]` for every variable.
    ///
    /// The images may live in a ring of a different rank; the result has the
    /// rank of the images.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, |p| p.rank);
        if let Some(bad) = images.iter().find(|p| p.rank != target) {
            return Err(Error::RankMismatch {
                left: target,
                right: bad.rank,
            });
        }
        let mut max_exp = vec![0u32; self.rank];
        for m in self.terms.keys() {
            for (slot, e) in max_exp.iter_mut().zip(&m.0) {
                *slot = (*slot).max(*e);
            }
        }
        let powers: Vec<Vec<Poly>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &top)| {
                let mut ps = vec![Poly::one(target)];
                for k in 1..=top as usize {
                    let next = &ps[k - 1] * img;
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    t = &t * &powers[i][*e as usize];
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / d`.
    ///
    /// Returns `Err(Error::NotDivisible)` when `d` does not divide `self`;
    /// that is an ordinary outcome used by the invariance tests.
    pub fn divide_exact(&self, d: &Poly) -> Result<Poly> {
        self.check_rank(d)?;
        let (dm, dc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.rank);
        while let Some((lm, lc)) = rem.leading_term() {
            let Some(qm) = lm.checked_div(&dm) else {
                return Err(Error::NotDivisible);
            };
            let qc = lc / &dc;
            let t = Poly::monomial(self.rank, qm, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Whether `h_i + shift` divides `self`, i.e. `self` vanishes on the
    /// hyperplane `h_i = -shift`.
    pub fn vanishes_on(&self, i: usize, shift: &Scalar) -> bool {
        let images: Vec<Poly> = (0..self.rank)
            .map(|j| {
                if j == i {
                    Poly::constant(self.rank, -shift.clone())
                } else {
                    Poly::var(self.rank, j)
                }
            })
            .collect();
        self.compose(&images).map(|p| p.is_zero()).unwrap_or(false)
    }

    /// Canonical text form: deglex descending, `h1 … hℓ`, explicit signs.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_text(m);
            if mono.is_empty() {
                out.push_str(&scalar::to_text(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&scalar::to_text(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Parses the canonical text form (whitespace-insensitive).
    pub fn parse(rank: usize, text: &str) -> Result<Poly> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse(format!("{why} in polynomial {text:?}"));
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = Poly::zero(rank);
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut pieces = Vec::new();
        for k in 1..=bytes.len() {
            if k == bytes.len() || ((bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^')
            {
                pieces.push(&compact[start..k]);
                start = k;
            }
        }
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (Scalar::one(), &piece[1..]),
                b'-' => (-Scalar::one(), &piece[1..]),
                _ => (Scalar::one(), piece),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut coeff = sign;
            let mut exps = vec![0u32; rank];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('h') {
                    let (idx, e) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad("bad variable"))?;
                    if idx == 0 || idx > rank {
                        return Err(bad("variable out of range"));
                    }
                    exps[idx - 1] += e;
                } else {
                    coeff *= scalar::parse(factor)?;
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }
}

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("h{}", i + 1)),
            _ => parts.push(format!("h{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator impls panic on rank mismatch; use the `checked_*` forms when the
// ranks are not known to agree.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs)
            .expect("rank mismatch in Poly addition")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs)
            .expect("rank mismatch in Poly subtraction")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs)
            .expect("rank mismatch in Poly multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    fn p(rank: usize, s: &str) -> Poly {
        Poly::parse(rank, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let h1 = Poly::var(1, 0);
        let a = &h1 + &Poly::constant(1, int(2));
        let b = &h1 - &Poly::one(1);
        assert_eq!(&a * &b, p(1, "h1^2 + h1 - 2"));
        let q = p(2, "h1^2 - 3*h2 + 1/2");
        assert_eq!(&q + &Poly::zero(2), q);
        assert_eq!(p(2, "h1 + h2") * p(2, "h1 - h2"), p(2, "h1^2 - h2^2"));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let err = Poly::one(1).checked_add(&Poly::one(2)).unwrap_err();
        assert_eq!(err, Error::RankMismatch { left: 1, right: 2 });
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(1, "h1^2 + 1").eval(&[int(3)]).unwrap(), int(10));
        assert_eq!(p(2, "h1*h2").eval(&[int(0), int(5)]).unwrap(), int(0));
        assert_eq!(p(1, "h1^2 - h1").eval(&[int(1)]).unwrap(), int(0));
        assert!(p(2, "h1").eval(&[int(1)]).is_err());
    }

    #[test]
    fn divide_exact_examples() {
        assert_eq!(
            p(1, "h1^2 - 1").divide_exact(&p(1, "h1 - 1")).unwrap(),
            p(1, "h1 + 1")
        );
        assert_eq!(
            p(1, "h1^2 + 1").divide_exact(&p(1, "h1")),
            Err(Error::NotDivisible)
        );
        let num = p(2, "h1^2 - h1") * p(2, "h2 + 3");
        assert_eq!(
            num.divide_exact(&p(2, "h1^2 - h1")).unwrap(),
            p(2, "h2 + 3")
        );
        assert_eq!(
            p(1, "h1").divide_exact(&Poly::zero(1)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn zero_degree_is_negative_infinity() {
        assert_eq!(Poly::zero(3).degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(p(2, "h1*h2^2 + h1").degree(), Degree::Finite(3));
    }

    #[test]
    fn canonical_text_is_deglex() {
        let q = p(2, "h2^2 + 3 - 1/2*h1*h2 + h1^2");
        assert_eq!(q.to_text(), "h1^2 - 1/2*h1*h2 + h2^2 + 3");
        assert_eq!(p(3, "-h3 + h1").to_text(), "h1 - h3");
        assert_eq!(Poly::zero(2).to_text(), "0");
        assert_eq!(p(1, "-2").to_text(), "-2");
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(Monomial::up_to_degree(2, 3).len(), 10);
        assert_eq!(Monomial::of_degree(4, 4).len(), 35);
        let ms = Monomial::up_to_degree(3, 2);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn vanishing_on_hyperplane() {
        let q = p(2, "h1^2 + 2*h1 + h1*h2 + 2*h2");
        assert!(q.vanishes_on(0, &int(2)));
        assert!(!q.vanishes_on(1, &int(2)));
    }
}
