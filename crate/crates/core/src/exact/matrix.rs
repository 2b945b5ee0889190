//! Dense exact matrices and fraction-free (Bareiss) elimination.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| scalar::int(v)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .fold(Scalar::zero(), |acc, x| acc + x)
            })
            .collect())
    }

    /// Fraction-free forward elimination followed by exact back-substitution.
    ///
    /// Each row is first scaled to integers; Bareiss steps then keep every
    /// intermediate entry an integer minor of the scaled matrix. Pivots are
    /// chosen as the first nonzero entry scanning rows top to bottom, columns
    /// left to right, so the result is deterministic.
    pub fn rref(&self) -> Rref {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                let r = self.row(i);
                let l = scalar::denominator_lcm(r);
                r.iter()
                    .map(|x| (x * Scalar::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..rows {
                if a[i][c].is_zero() {
                    // Bareiss still needs the rescale of this row.
                    for j in c + 1..cols {
                        let v = &a[r][c] * &a[i][j];
                        a[i][j] = v / &prev;
                    }
                    continue;
                }
                for j in c + 1..cols {
                    let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        // Back-substitution over ℚ on the (small) echelon part.
        let mut m: Vec<Vec<Scalar>> = a
            .into_iter()
            .take(pivots.len())
            .map(|row| row.into_iter().map(Scalar::from_integer).collect())
            .collect();
        for k in (0..pivots.len()).rev() {
            let pc = pivots[k];
            let lead = m[k][pc].clone();
            for x in m[k].iter_mut() {
                *x /= &lead;
            }
            for i in 0..k {
                let f = m[i][pc].clone();
                if f.is_zero() {
                    continue;
                }
                for j in pc..cols {
                    let d = &f * &m[k][j];
                    m[i][j] -= d;
                }
            }
        }
        let matrix = ExactMatrix::from_rows(cols, m).expect("row lengths preserved");
        Rref { matrix, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Exact basis of `{v : self · v = 0}`, one vector per free column in
    /// ascending column order; the vector for free column `f` has a 1 at
    /// `f` and zeros at every other free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = matrix[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Sylvester's criterion on leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        (1..=self.rows).all(|k| {
            let mut sub = Self::zeros(k, k);
            for i in 0..k {
                for j in 0..k {
                    sub[(i, j)] = self[(i, j)].clone();
                }
            }
            sub.determinant().is_positive()
        })
    }

    /// Determinant by exact elimination.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.row_vecs();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            let lead = m[c][c].clone();
            det *= &lead;
            for i in c + 1..n {
                let f = &m[i][c] / &lead;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let d = &f * &m[c][j];
                    m[i][j] -= d;
                }
            }
        }
        det
    }
}

impl core::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<_> = self.row(i).iter().map(scalar::to_text).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Dimension of the span of `vectors` (all of the same length).
pub fn span_rank(len: usize, vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(len, vectors.to_vec())
        .expect("vectors of equal length")
        .rank()
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(len: usize, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    let ra = span_rank(len, a);
    let rb = span_rank(len, b);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    span_rank(len, &all) == ra
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_examples() {
        assert!(ExactMatrix::identity(2).nullspace().is_empty());
        assert_eq!(ExactMatrix::zeros(2, 3).nullspace().len(), 3);
        let m = ExactMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![scalar::int(-1), scalar::int(1)]);
    }

    #[test]
    fn rref_with_skipped_columns() {
        let m = ExactMatrix::from_i64(&[&[0, 2, 4, 1], &[0, 1, 2, 3], &[0, 3, 6, 4]]);
        let r = m.rref();
        assert_eq!(r.pivots, vec![1, 3]);
        assert_eq!(
            r.matrix.row(0),
            &[
                scalar::int(0),
                scalar::int(1),
                scalar::int(2),
                scalar::int(0)
            ]
        );
        for v in m.nullspace() {
            assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let c = ExactMatrix::from_i64(&[&[2, -1], &[-1, 2]]);
        let inv = c.inverse().unwrap();
        assert_eq!(inv[(0, 0)], scalar::ratio(2, 3));
        assert_eq!(c.mul(&inv).unwrap(), ExactMatrix::identity(2));
        assert_eq!(c.determinant(), scalar::int(3));
        assert!(ExactMatrix::from_i64(&[&[1, 2], &[2, 4]])
            .inverse()
            .is_err());
    }

    #[test]
    fn rational_entries() {
        let m = ExactMatrix::from_rows(
            2,
            vec![
                vec![scalar::ratio(1, 2), scalar::ratio(1, 3)],
                vec![scalar::ratio(3, 2), scalar::int(1)],
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert!(m.mul_vec(&ns[0]).unwrap().iter().all(Zero::is_zero));
    }
}
