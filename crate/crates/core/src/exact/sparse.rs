//! Incremental fraction-free echelon form for large sparse systems.
//!
//! Rows are stored as primitive integer vectors (content divided out, leading
//! entry positive). Reducing an incoming row `r` by a pivot row `p` with lead
//! column `c` is the cross-multiplication `p[c]·r − r[c]·p`, followed by
//! removal of the content, so no rational arithmetic happens until the final
//! back-substitution.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{self, Scalar};

type IntRow = Vec<(usize, BigInt)>;

#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    cols: usize,
    rows: BTreeMap<usize, IntRow>,
}

fn make_primitive(row: &mut IntRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    let flip = row.first().is_some_and(|(_, v)| v.is_negative());
    if g.is_zero() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v = &*v / &g;
        if flip {
            *v = -&*v;
        }
    }
}

/// `a·x − b·y` on sparse rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Inserts a rational row given as `(column, value)` pairs (any order,
    /// duplicates summed). Returns `true` when the rank grew.
    pub fn insert(&mut self, entries: impl IntoIterator<Item = (usize, Scalar)>) -> bool {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column {c} out of range");
            *acc.entry(c).or_insert_with(Scalar::zero) += v;
        }
        acc.retain(|_, v| !v.is_zero());
        let l = scalar::denominator_lcm(acc.values());
        let lq = Scalar::from_integer(l);
        let mut row: IntRow = acc
            .into_iter()
            .map(|(c, v)| (c, (v * &lq).to_integer()))
            .collect();
        make_primitive(&mut row);
        loop {
            let Some((lead, lv)) = row.first().cloned() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(p) => {
                    let pv = &p[0].1;
                    let g = pv.gcd(&lv);
                    row = combine(&(pv / &g), &row, &(&lv / &g), p);
                    make_primitive(&mut row);
                }
                None => {
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Whether a rational vector lies in the row span.
    pub fn contains(&self, entries: impl IntoIterator<Item = (usize, Scalar)>) -> bool {
        let mut probe = self.clone();
        !probe.insert(entries)
    }

    /// Fully reduced echelon rows over ℚ, ascending by pivot column; each
    /// row has leading coefficient 1 and zeros in all other pivot columns.
    pub fn rref(&self) -> Vec<(usize, Vec<(usize, Scalar)>)> {
        let mut done: BTreeMap<usize, IntRow> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            // Eliminate later pivot columns; the reduced rows there are final.
            loop {
                let hit = r
                    .iter()
                    .skip(1)
                    .find(|(c, _)| done.contains_key(c))
                    .cloned();
                let Some((c, v)) = hit else { break };
                let q = &done[&c];
                let qv = &q[0].1;
                let g = qv.gcd(&v);
                r = combine(&(qv / &g), &r, &(&v / &g), q);
                make_primitive(&mut r);
            }
            done.insert(p, r);
        }
        done.into_iter()
            .map(|(p, r)| {
                let lead = Scalar::from_integer(r[0].1.clone());
                (
                    p,
                    r.into_iter()
                        .map(|(c, v)| (c, Scalar::from_integer(v) / &lead))
                        .collect(),
                )
            })
            .collect()
    }

    /// Basis of the right nullspace of the inserted rows, as dense vectors,
    /// one per free column (ascending), with a 1 in that column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (p, row) in &rref {
                if *p > f {
                    break;
                }
                if let Ok(k) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    v[*p] = -row[k].1.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

/// Reduced echelon basis (pivot = first nonzero) of the span of dense vectors.
pub fn echelon_basis(len: usize, vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut e = SparseEchelon::new(len);
    for v in vectors {
        e.insert(v.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()));
    }
    e.rref()
        .into_iter()
        .map(|(_, row)| {
            let mut d = vec![Scalar::zero(); len];
            for (c, x) in row {
                d[c] = x;
            }
            d
        })
        .collect()
}
