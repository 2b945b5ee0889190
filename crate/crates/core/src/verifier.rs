//! Evaluation of invariants at `sρ` and the comparison of their span with the
//! principal filtration.

use alloc::vec::Vec;

use crate::error::Result;
use crate::exact::matrix::{same_span, span_rank};
use crate::exact::Scalar;
use crate::filtration::{principal_filtration, FiltrationFlag};
use crate::root_system::{Basis, LieType, RootSystem, Weight};
use crate::zhelobenko::{
    solve_invariants, DenominatorScalar, GradedSolution, P_to_q, ZeroWeightElement,
};

/// `Σ ϖ_i · q_i(sρ)`; `sρ` has every coroot coordinate equal to `s`.
pub fn evaluate_invariant(rs: &RootSystem, j: &ZeroWeightElement, s: &Scalar) -> Result<Weight> {
    let point = alloc::vec![s.clone(); rs.rank()];
    let coords = j
        .coords()
        .iter()
        .map(|q| q.eval(&point))
        .collect::<Result<_>>()?;
    Ok(Weight::new(coords, Basis::Fundamental))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRecord {
    pub m: u32,
    pub dim_image: usize,
    pub dim_f: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub lie_type: LieType,
    pub s: Scalar,
    pub records: Vec<DegreeRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.equal)
    }
}

/// The solution space at `c = −1` and the filtration of one type, shared by
/// every scalar tested against them.
#[derive(Clone, Debug)]
pub struct KostantContext {
    rs: RootSystem,
    mmax: u32,
    flag: FiltrationFlag,
    invariants: Vec<(u32, ZeroWeightElement)>,
}

impl KostantContext {
    pub fn new(t: LieType, mmax: u32) -> Result<Self> {
        let rs = RootSystem::new(t);
        let flag = principal_filtration(t)?;
        let sol = solve_invariants(
            &rs,
            &DenominatorScalar::enveloping(),
            mmax.saturating_sub(1),
        )?;
        Self::from_parts(rs, mmax, flag, &sol)
    }

    /// Uses a given solution basis; any basis of the same space gives the
    /// same verdicts.
    pub fn from_parts(
        rs: RootSystem,
        mmax: u32,
        flag: FiltrationFlag,
        sol: &GradedSolution,
    ) -> Result<Self> {
        let invariants = sol
            .basis
            .iter()
            .zip(&sol.degrees)
            .filter(|(_, &d)| d < mmax)
            .map(|(p, &d)| Ok((d + 1, P_to_q(&rs, p)?)))
            .collect::<Result<_>>()?;
        Ok(KostantContext {
            rs,
            mmax,
            flag,
            invariants,
        })
    }

    pub fn flag(&self) -> &FiltrationFlag {
        &self.flag
    }

    pub fn verify(&self, s: &Scalar) -> Result<VerificationReport> {
        let l = self.rs.rank();
        let values: Vec<(u32, Vec<Scalar>)> = self
            .invariants
            .iter()
            .map(|(d, j)| Ok((*d, evaluate_invariant(&self.rs, j, s)?.coords)))
            .collect::<Result<_>>()?;
        let records = (0..=self.mmax)
            .map(|m| {
                let image: Vec<Vec<Scalar>> = values
                    .iter()
                    .filter(|(d, _)| *d <= m)
                    .map(|(_, v)| v.clone())
                    .collect();
                let target = self.flag.subspace_in_weights(&self.rs, m);
                DegreeRecord {
                    m,
                    dim_image: span_rank(l, &image),
                    dim_f: target.len(),
                    equal: same_span(l, &image, &target),
                }
            })
            .collect();
        Ok(VerificationReport {
            lie_type: self.rs.lie_type(),
            s: s.clone(),
            records,
        })
    }
}

/// Compares the span of all invariants with `deg q ≤ m`, evaluated at `sρ`,
/// against `F^m(𝔥)` for `m = 0 … mmax`.
pub fn verify_kostant(t: LieType, s: &Scalar, mmax: u32) -> Result<VerificationReport> {
    KostantContext::new(t, mmax)?.verify(s)
}

/// Runs [`verify_kostant`] for each candidate, in the order given.
pub fn scan_scalars(
    t: LieType,
    candidates: &[Scalar],
    mmax: u32,
) -> Result<Vec<VerificationReport>> {
    let ctx = KostantContext::new(t, mmax)?;
    candidates.iter().map(|s| ctx.verify(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    #[test]
    fn evaluate_identity_element() {
        let b2 = RootSystem::new("B2".parse().unwrap());
        let j = ZeroWeightElement::identity(&b2);
        assert_eq!(
            evaluate_invariant(&b2, &j, &int(1)).unwrap().coords,
            alloc::vec![int(1); 2]
        );
        assert_eq!(
            evaluate_invariant(&b2, &j, &int(0)).unwrap().coords,
            alloc::vec![int(0); 2]
        );
        let a1 = RootSystem::new("A1".parse().unwrap());
        let j1 = ZeroWeightElement::identity(&a1);
        assert_eq!(
            evaluate_invariant(&a1, &j1, &int(3)).unwrap().coords,
            alloc::vec![int(3)]
        );
    }

    #[test]
    fn rank_one_conversion() {
        // F¹ is spanned by h∨ = h_1∨ ↦ α_1 = 2ϖ_1, the same line as ϖ_1
        let r = verify_kostant("A1".parse().unwrap(), &int(1), 1).unwrap();
        assert_eq!(
            r.records[1],
            DegreeRecord {
                m: 1,
                dim_image: 1,
                dim_f: 1,
                equal: true
            }
        );
        assert!(r.passed());
    }

    #[test]
    fn a2_passes_at_one() {
        let r = verify_kostant("A2".parse().unwrap(), &int(1), 2).unwrap();
        let dims: Vec<(usize, usize)> = r.records.iter().map(|x| (x.dim_image, x.dim_f)).collect();
        assert_eq!(dims, alloc::vec![(0, 0), (1, 1), (2, 2)]);
        assert!(r.passed());
    }
}
