use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zhelobenko_core::exact::scalar::{int, Scalar};
use zhelobenko_core::exact::Poly;
use zhelobenko_core::filtration::{exponents, kernel_flag, known_exponents, principal_filtration};
use zhelobenko_core::verifier::{scan_scalars, verify_kostant, KostantContext};
use zhelobenko_core::zhelobenko::*;
use zhelobenko_core::{LieAlgebra, LieType, RootSystem};

fn rs(t: &str) -> RootSystem {
    RootSystem::new(t.parse().unwrap())
}

#[test]
fn graded_dimensions_match_a_free_module() {
    // deg q ≤ d  ⇔  deg P ≤ d − 1
    for t in ["A1", "A2", "B2", "A3"] {
        let r = rs(t);
        let ex = known_exponents(r.lie_type());
        let sol = solve_invariants(&r, &DenominatorScalar::enveloping(), 5).unwrap();
        let dims = sol.graded_dims();
        for d in 1..=6u32 {
            assert_eq!(
                dims[d as usize - 1],
                free_module_dimension(&ex, d),
                "{t}, deg q ≤ {d}"
            );
        }
    }
}

#[test]
fn parametric_family_has_the_same_graded_dimensions() {
    let r = rs("B2");
    let reference = solve_invariants(&r, &(-1).into(), 4).unwrap().graded_dims();
    for c in [0, 1, 3] {
        assert_eq!(
            solve_invariants(&r, &c.into(), 4).unwrap().graded_dims(),
            reference,
            "c = {c}"
        );
    }
}

#[test]
fn no_new_generators_past_the_top_exponent() {
    for (t, extra) in [("A2", 3), ("B2", 2), ("A1", 4)] {
        let r = rs(t);
        let gens =
            extract_generators_upto(&r, &DenominatorScalar::enveloping(), extra + 2).unwrap();
        let degrees: Vec<u32> = gens.iter().map(|g| g.q_degree).collect();
        assert_eq!(degrees, known_exponents(r.lie_type()), "{t}");
    }
}

#[test]
fn generators_are_invariants() {
    for t in ["A2", "B2", "G2", "A3"] {
        let r = rs(t);
        for g in extract_generators(&r, &DenominatorScalar::enveloping()).unwrap() {
            let j = P_to_q(&r, &g.p).unwrap();
            assert!(is_invariant(&r, &j).unwrap(), "{t}");
            assert_eq!(j.degree(), Some(g.q_degree));
        }
    }
}

#[test]
fn solver_is_deterministic() {
    let r = rs("G2");
    let a = solve_invariants(&r, &DenominatorScalar::enveloping(), 4).unwrap();
    let b = solve_invariants(&r, &DenominatorScalar::enveloping(), 4).unwrap();
    assert_eq!(a, b);
}

#[test]
fn verification_ignores_the_choice_of_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (t, s) in [("A2", 1), ("B2", 2), ("A3", 1)] {
        let r = rs(t);
        let lt = r.lie_type();
        let top = *exponents(lt).unwrap().last().unwrap();
        let sol = solve_invariants(&r, &DenominatorScalar::enveloping(), top - 1).unwrap();
        // a random triangular change of basis within each filtration level
        let n = sol.basis.len();
        let mut mixed = sol.clone();
        for k in 0..n {
            let mut entries: Vec<Poly> = sol.basis[k].entries().to_vec();
            let lead = int(rng.gen_range(1..=5));
            entries.iter_mut().for_each(|e| *e = e.scale(&lead));
            for j in (0..n).filter(|&j| sol.degrees[j] <= sol.degrees[k] && j != k) {
                let c = int(rng.gen_range(-3..=3));
                for (e, b) in entries.iter_mut().zip(sol.basis[j].entries()) {
                    *e = &*e + &b.scale(&c);
                }
            }
            mixed.basis[k] = PTuple::new(&r, entries).unwrap();
        }
        let flag = principal_filtration(lt).unwrap();
        let a = KostantContext::from_parts(r.clone(), top, flag.clone(), &sol).unwrap();
        let b = KostantContext::from_parts(r.clone(), top, flag, &mixed).unwrap();
        assert_eq!(
            a.verify(&int(s)).unwrap(),
            b.verify(&int(s)).unwrap(),
            "{t}"
        );
    }
}

#[test]
fn kostant_examples() {
    let b2: LieType = "B2".parse().unwrap();
    assert!(verify_kostant(b2, &int(2), 3).unwrap().passed());
    let a1: LieType = "A1".parse().unwrap();
    let scalars: Vec<Scalar> = [1, 5, 7].map(int).to_vec();
    assert!(scan_scalars(a1, &scalars, 1)
        .unwrap()
        .iter()
        .all(|r| r.passed()));
    let a2: LieType = "A2".parse().unwrap();
    let scalars: Vec<Scalar> = [1, 2, 3].map(int).to_vec();
    assert!(scan_scalars(a2, &scalars, 2)
        .unwrap()
        .iter()
        .all(|r| r.passed()));
    let half = verify_kostant(a2, &Scalar::new(1.into(), 2.into()), 2).unwrap();
    assert!(half.passed());
}

#[test]
fn beyond_the_top_exponent_everything_is_full() {
    for t in ["A2", "B2", "G2"] {
        let lt: LieType = t.parse().unwrap();
        let top = *exponents(lt).unwrap().last().unwrap();
        let rep = verify_kostant(lt, &int(1), top + 2).unwrap();
        for rec in &rep.records[top as usize..] {
            assert_eq!(
                (rec.dim_image, rec.dim_f),
                (lt.rank(), lt.rank()),
                "{t} m = {}",
                rec.m
            );
        }
    }
}

#[test]
fn filtration_does_not_depend_on_the_scale_of_e() {
    for t in ["B3", "G2", "A3"] {
        let lt: LieType = t.parse().unwrap();
        let dual = RootSystem::new(lt).langlands_dual();
        let g = LieAlgebra::new(&dual).unwrap();
        let e = g.principal_sl2().unwrap().e;
        let reference = kernel_flag(&g, lt, &e).unwrap();
        let scaled: Vec<Scalar> = e.iter().map(|x| x * int(3)).collect();
        assert_eq!(kernel_flag(&g, lt, &scaled).unwrap(), reference, "{t}");
        // independent rescaling of each simple root vector
        let mut uneven = e.clone();
        for i in 0..g.rank() {
            uneven[g.simple_root_vector(i)] = int(i as i64 + 2);
        }
        // a torus conjugate of e, and the torus fixes 𝔥 pointwise
        assert_eq!(kernel_flag(&g, lt, &uneven).unwrap(), reference, "{t}");
    }
}
