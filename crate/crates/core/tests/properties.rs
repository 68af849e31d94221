use proptest::prelude::*;

use quadrics::rational::{frac, int};
use quadrics::twistor::{self, SpinorSpace, TwoForm};
use quadrics::{Monomial, Poly, PolyMatrix, PolyRing, QuadForm, RatMatrix, Rational};

fn ring() -> PolyRing {
    PolyRing::new(["x", "y", "z"])
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), rational()), 0..6).prop_map(|terms| {
        let r = ring();
        terms.into_iter().fold(r.zero(), |acc, ((a, b, c), k)| &acc + &r.monomial(Monomial::new(vec![a, b, c]), k))
    })
}

fn rat_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-5i64..=5, n * n)
        .prop_map(move |v| RatMatrix::from_rows(v.chunks(n).map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap())
}

fn symmetric(n: usize) -> impl Strategy<Value = RatMatrix> {
    rat_matrix(n).prop_map(|m| m.add(&m.transpose()).unwrap().scale(&frac(1, 2)))
}

fn point3() -> impl Strategy<Value = [Rational; 4]> {
    prop::array::uniform4(-4i64..=4)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| v.map(int))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_parse_round_trip(a in poly()) {
        let back = ring().parse(&a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division_and_square_root(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        let s = b.pow(2).perfect_square_root().expect("square");
        prop_assert!(s == b || s == -&b);
    }

    #[test]
    fn coefficients_reconstruct(a in poly()) {
        let r = ring();
        let mut sum = r.zero();
        for k in 0..=a.degree_in("x") {
            sum = &sum + &(&a.coefficient_of("x", k).unwrap() * &r.var("x").pow(k));
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn det_is_multiplicative(a in rat_matrix(4), b in rat_matrix(4)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        let r = ring();
        let pa = a.to_poly_matrix(&r);
        prop_assert_eq!(pa.det().unwrap().constant_value().unwrap(), a.det().unwrap());
    }

    #[test]
    fn symbolic_det_agrees_with_bareiss(entries in prop::collection::vec(poly(), 9)) {
        let m = PolyMatrix::new(3, 3, entries).unwrap();
        prop_assert_eq!(m.det().unwrap(), m.det_bareiss().unwrap());
    }

    #[test]
    fn congruence_reconstructs(g in symmetric(4)) {
        let q = QuadForm::from_rational(&["a", "b", "c", "d"], &g).unwrap();
        let (t, d) = q.diagonalize_congruence().unwrap();
        prop_assert!(t.det().unwrap() != int(0));
        prop_assert_eq!(t.transpose().mul(&g).unwrap().mul(&t).unwrap(), RatMatrix::diagonal(&d));
        let back = QuadForm::from_poly(&q.to_poly(), &["a", "b", "c", "d"]).unwrap();
        prop_assert_eq!(back.rational_gram().unwrap(), g);
    }

    #[test]
    fn incidence_matches_rank(a in point3(), b in point3(), c in point3(), d in point3()) {
        let rank = |rows: &[&[Rational; 4]]| RatMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap().rank();
        prop_assume!(rank(&[&a, &b]) == 2 && rank(&[&c, &d]) == 2);
        let l1 = twistor::plucker_from_points(&a, &b).unwrap();
        let l2 = twistor::plucker_from_points(&c, &d).unwrap();
        prop_assert_eq!(twistor::klein_value(l1.coords()), int(0));
        prop_assert_eq!(twistor::lines_incident(&l1, &l2), rank(&[&a, &b, &c, &d]) < 4);
    }

    #[test]
    fn spinor_round_trip(v in prop::array::uniform6(rational())) {
        let spin = SpinorSpace::standard();
        let w = TwoForm(v);
        let (sd, asd) = twistor::sd_asd_project(&w, &spin);
        prop_assert!(sd.is_symmetric() && asd.is_symmetric());
        prop_assert_eq!(twistor::sd_asd_reconstruct(&sd, &asd, &spin).unwrap(), w.clone());
        let p = twistor::self_dual_part(&w, &spin);
        prop_assert_eq!(twistor::self_dual_part(&p, &spin), p);
    }
}
