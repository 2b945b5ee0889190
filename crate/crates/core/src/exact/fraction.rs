//! Rational functions whose denominator is a product of shifted coordinates
//! `(h_i + k)`. This is the only kind of denominator the Zhelobenko operators
//! of the adjoint module produce, so no multivariate gcd is needed.

use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::Zero;

use super::poly::Poly;
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFraction {
    numerator: Poly,
    /// `(variable, shift) -> multiplicity` for the factor `h_var + shift`.
    denominators: BTreeMap<(usize, Scalar), u32>,
}

impl LinearFraction {
    pub fn from_poly(p: Poly) -> Self {
        LinearFraction {
            numerator: p,
            denominators: BTreeMap::new(),
        }
    }

    /// `numerator / Π (h_i + k)` over the listed factors, fully cancelled.
    pub fn new(
        numerator: Poly,
        factors: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Result<Self> {
        let rank = numerator.rank();
        let mut denominators = BTreeMap::new();
        for (i, k) in factors {
            if i >= rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            *denominators.entry((i, k)).or_insert(0) += 1;
        }
        let mut f = LinearFraction {
            numerator,
            denominators,
        };
        f.cancel();
        Ok(f)
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&(usize, Scalar), &u32)> {
        self.denominators.iter()
    }

    pub fn rank(&self) -> usize {
        self.numerator.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The polynomial this fraction equals, if its denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.denominators.is_empty().then_some(&self.numerator)
    }

    /// The denominator expanded as a polynomial.
    pub fn denominator(&self) -> Poly {
        let rank = self.rank();
        let mut d = Poly::one(rank);
        for ((i, k), m) in &self.denominators {
            d = &d * &Poly::linear_factor(rank, *i, k.clone()).pow(*m);
        }
        d
    }

    fn cancel(&mut self) {
        let rank = self.rank();
        if self.numerator.is_zero() {
            self.denominators.clear();
            return;
        }
        let keys: alloc::vec::Vec<_> = self.denominators.keys().cloned().collect();
        for key in keys {
            let factor = Poly::linear_factor(rank, key.0, key.1.clone());
            let mult = self.denominators.get_mut(&key).expect("key present");
            while *mult > 0 && self.numerator.vanishes_on(key.0, &key.1) {
                self.numerator = self
                    .numerator
                    .divide_exact(&factor)
                    .expect("vanishing on a hyperplane implies divisibility");
                *mult -= 1;
            }
            if *mult == 0 {
                self.denominators.remove(&key);
            }
        }
    }

    fn lift_to(&self, target: &BTreeMap<(usize, Scalar), u32>) -> Poly {
        let rank = self.rank();
        let mut n = self.numerator.clone();
        for (key, m) in target {
            let have = self.denominators.get(key).copied().unwrap_or(0);
            if *m > have {
                n = &n * &Poly::linear_factor(rank, key.0, key.1.clone()).pow(m - have);
            }
        }
        n
    }

    fn common_denominator(&self, other: &Self) -> BTreeMap<(usize, Scalar), u32> {
        let mut d = self.denominators.clone();
        for (k, m) in &other.denominators {
            let e = d.entry(k.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        d
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.common_denominator(other);
        let mut f = LinearFraction {
            numerator: self.lift_to(&d) + other.lift_to(&d),
            denominators: d,
        };
        f.cancel();
        f
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut d = self.denominators.clone();
        for (k, m) in &other.denominators {
            *d.entry(k.clone()).or_insert(0) += m;
        }
        let mut f = LinearFraction {
            numerator: &self.numerator * &other.numerator,
            denominators: d,
        };
        f.cancel();
        f
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        self.mul(&LinearFraction::from_poly(p.clone()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return LinearFraction::from_poly(Poly::zero(self.rank()));
        }
        LinearFraction {
            numerator: self.numerator.scale(c),
            denominators: self.denominators.clone(),
        }
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        self.numerator.clone() * other.denominator() == other.numerator.clone() * self.denominator()
    }
}

impl fmt::Display for LinearFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominators.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({})/(", self.numerator)?;
        for (n, ((i, k), m)) in self.denominators.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "(h{} + {})", i + 1, scalar::to_text(k))?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;
    use alloc::vec;

    #[test]
    fn cancels_common_factors() {
        let n = Poly::parse(2, "h1^2 + 3*h1 + 2").unwrap(); // (h1+1)(h1+2)
        let f = LinearFraction::new(n, vec![(0, int(2)), (1, int(0))]).unwrap();
        assert_eq!(f.numerator(), &Poly::parse(2, "h1 + 1").unwrap());
        assert_eq!(f.denominator_factors().count(), 1);
    }

    #[test]
    fn canonical_regardless_of_factor_order() {
        let n = Poly::parse(2, "h1*h2 + 2*h2").unwrap() * Poly::parse(2, "h2 - 1").unwrap();
        let a =
            LinearFraction::new(n.clone(), vec![(0, int(2)), (1, int(3)), (1, int(-1))]).unwrap();
        let b = LinearFraction::new(n, vec![(1, int(-1)), (1, int(3)), (0, int(2))]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.numerator(), &Poly::parse(2, "h2").unwrap());
    }

    #[test]
    fn sum_of_partial_fractions() {
        // 1/(h1) - 1/(h1+2) = 2/(h1(h1+2))
        let one = Poly::one(1);
        let a = LinearFraction::new(one.clone(), vec![(0, int(0))]).unwrap();
        let b = LinearFraction::new(one, vec![(0, int(2))]).unwrap();
        let d = a.sub(&b);
        let expect =
            LinearFraction::new(Poly::constant(1, int(2)), vec![(0, int(2)), (0, int(0))]).unwrap();
        assert_eq!(d, expect);
        assert!(d.equals(&expect));
        let zero = a.sub(&a);
        assert_eq!(zero.as_poly(), Some(&Poly::zero(1)));
    }
}
