use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zhelobenko_core::exact::scalar::int;
use zhelobenko_core::{Basis, LieAlgebra, LieType, RootSystem, Weight};

const TYPES: &[&str] = &[
    "A1", "A2", "A4", "B2", "B3", "C3", "C4", "D4", "D5", "G2", "F4", "E6",
];

fn rs(t: &str) -> RootSystem {
    RootSystem::new(t.parse().unwrap())
}

#[test]
fn dimensions_and_root_counts() {
    for (t, dim) in [
        ("A2", 8),
        ("B2", 10),
        ("G2", 14),
        ("D4", 28),
        ("F4", 52),
        ("E6", 78),
        ("E7", 133),
        ("E8", 248),
    ] {
        let r = rs(t);
        assert_eq!(2 * r.positive_roots().len() + r.rank(), dim, "{t}");
    }
}

#[test]
fn highest_root_heights() {
    // the highest root has height h − 1
    for (t, coxeter) in [
        ("A4", 5),
        ("B3", 6),
        ("C3", 6),
        ("D4", 6),
        ("G2", 6),
        ("F4", 12),
        ("E6", 12),
        ("E8", 30),
    ] {
        let r = rs(t);
        assert_eq!(RootSystem::height(r.highest_root()), coxeter - 1, "{t}");
    }
}

#[test]
fn rho_two_ways() {
    for t in TYPES {
        let r = rs(t);
        let a = r.convert(&r.rho(), Basis::SimpleRoot);
        let b = r.convert(&r.rho_by_summation(), Basis::SimpleRoot);
        assert_eq!(a, b, "{t}");
    }
}

#[test]
fn weyl_group_orders() {
    for t in ["A1", "A3", "B3", "C3", "D4", "G2", "F4"] {
        let r = rs(t);
        let lt: LieType = t.parse().unwrap();
        assert_eq!(
            r.weyl_group(2000).unwrap().len() as u64,
            lt.weyl_group_order(),
            "{t}"
        );
    }
    assert!(rs("E8").weyl_group(60_000).is_err());
}

#[test]
fn simple_reflections_are_involutions() {
    let r = rs("F4");
    let w = Weight::from_i64(&[3, -1, 2, 5], Basis::Fundamental);
    for i in 0..4 {
        let once = r.simple_reflection(i, &w).unwrap();
        assert_eq!(r.simple_reflection(i, &once).unwrap(), w);
    }
}

#[test]
fn langlands_dual_transposes() {
    for t in ["B3", "C4", "G2", "F4"] {
        let r = rs(t);
        let d = r.langlands_dual();
        for i in 0..r.rank() {
            for j in 0..r.rank() {
                assert_eq!(d.pairing(i, j), r.pairing(j, i));
            }
        }
        assert_eq!(d.positive_roots().len(), r.positive_roots().len());
    }
}

#[test]
fn killing_form_is_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in TYPES {
        let g = LieAlgebra::new(&rs(t)).unwrap();
        let n = g.dim();
        for _ in 0..40 {
            let [a, b, c] = [0; 3].map(|_| g.basis_element(rng.gen_range(0..n)));
            let lhs = g.killing_form(&g.bracket(&a, &b), &c);
            let rhs = g.killing_form(&a, &g.bracket(&b, &c));
            assert_eq!(lhs, rhs, "{t}");
        }
        assert!(g.killing().is_symmetric());
    }
}

#[test]
fn killing_form_on_cartan_is_a_multiple_of_the_root_form() {
    // κ(h_i, h_j) = Σ_β β(h_i)β(h_j)
    for t in TYPES {
        let r = rs(t);
        let g = LieAlgebra::new(&r).unwrap();
        for i in 0..r.rank() {
            for j in 0..r.rank() {
                let expected: i64 = r
                    .roots()
                    .iter()
                    .map(|b| r.root_pairing(b, i) * r.root_pairing(b, j))
                    .sum();
                assert_eq!(
                    g.killing()[(g.cartan_index(i), g.cartan_index(j))],
                    int(expected),
                    "{t}"
                );
            }
        }
    }
}

#[test]
fn principal_triples_everywhere() {
    for t in ["A1", "A5", "B4", "C5", "D6", "E7", "F4", "G2"] {
        let g = LieAlgebra::new(&rs(t)).unwrap();
        let tr = g.principal_sl2().unwrap();
        g.check_sl2(&tr).unwrap();
        // α_i(h) = 2 for every simple root
        for i in 0..g.rank() {
            let x = g.basis_element(g.simple_root_vector(i));
            let hx = g.bracket(&tr.h, &x);
            assert_eq!(hx[g.simple_root_vector(i)], int(2), "{t}");
        }
    }
}

#[test]
fn illegal_types_are_rejected() {
    for s in [
        "A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X2", "", "A",
    ] {
        assert!(s.parse::<LieType>().is_err(), "{s}");
    }
    assert_eq!("g2".parse::<LieType>().unwrap().to_string(), "G2");
}
