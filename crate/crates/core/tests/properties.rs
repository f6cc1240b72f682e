use proptest::prelude::*;

use rathyp_core::arith::{rat, MPoly, Rat, SymbolSet};
use rathyp_core::cyclo::{cyc_degree, cyc_minpoly, cyc_trig, CycNum, Trig};
use rathyp_core::exppoly::{ExpPoly, LinForm};
use rathyp_core::trig::{solve_hyperbolic_from_angles, solve_triangle_sas, Curvature};

fn syms() -> SymbolSet {
    SymbolSet::new(["x", "y", "z"])
}

fn lengths() -> SymbolSet {
    SymbolSet::new(["a", "b"])
}

fn coeff_syms() -> SymbolSet {
    SymbolSet::new(["u", "E"])
}

prop_compose! {
    fn small_rat()(n in -6i64..=6, d in 1i64..=4) -> Rat {
        rat(n, d)
    }
}

prop_compose! {
    fn mpoly()(terms in prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), small_rat()), 0..6)) -> MPoly<Rat> {
        MPoly::from_terms(&syms(), terms.into_iter().map(|((a, b, c), r)| (vec![a, b, c], r))).unwrap()
    }
}

prop_compose! {
    fn point()(x in small_rat(), y in small_rat(), z in small_rat()) -> [Rat; 3] {
        [x, y, z]
    }
}

prop_compose! {
    fn coeff_poly(max_e: u32)(terms in prop::collection::vec(((0u32..3, 0..=max_e), small_rat()), 1..4)) -> MPoly<Rat> {
        MPoly::from_terms(&coeff_syms(), terms.into_iter().map(|((u, e), r)| (vec![u, e], r))).unwrap()
    }
}

prop_compose! {
    fn exppoly(max_e: u32)(terms in prop::collection::vec(((-2i32..=2, -2i32..=2), coeff_poly(max_e)), 0..5)) -> ExpPoly<Rat> {
        let mut acc = ExpPoly::zero(&lengths(), &coeff_syms());
        for ((i, j), p) in terms {
            acc = &acc + &ExpPoly::monomial(&lengths(), LinForm::new(&[i, j]), p).unwrap();
        }
        acc
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in mpoly(), q in mpoly(), r in mpoly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &MPoly::one(&syms()), p.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in mpoly(), q in mpoly(), v in point()) {
        let ev = |f: &MPoly<Rat>| f.eval::<Rat>(&v).unwrap();
        prop_assert_eq!(ev(&(&p * &q)), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&(&p + &q)), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&p.pow(3)), ev(&p) * ev(&p) * ev(&p));
    }

    #[test]
    fn canonical_text_round_trips(p in mpoly()) {
        let text = p.to_string();
        prop_assert_eq!(MPoly::parse(&syms(), &text).unwrap(), p);
    }

    #[test]
    fn exppoly_numeric_homomorphism(p in exppoly(2), q in exppoly(2), a in 0.1f64..1.5, b in 0.1f64..1.5, u in -1.0f64..1.0, e in 1.0f64..2.0) {
        let ev = |f: &ExpPoly<Rat>| f.eval_numeric::<f64>(&[a, b], &[u, e]).unwrap();
        let (lhs, rhs) = (ev(&(&p * &q)), ev(&p) * ev(&q));
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs().max(rhs.abs())));
    }

    #[test]
    fn hyperbolic_identity(a in 0.0f64..3.0) {
        let c = ExpPoly::<Rat>::cosh(&lengths(), &coeff_syms(), "a").unwrap();
        let s = ExpPoly::<Rat>::sinh(&lengths(), &coeff_syms(), "a").unwrap();
        let one = &(&c * &c) - &(&s * &s);
        prop_assert_eq!(one.clone(), ExpPoly::one(&lengths(), &coeff_syms()));
        let cv = c.eval_numeric::<f64>(&[a, 0.0], &[0.0, 0.0]).unwrap();
        prop_assert!((cv - a.cosh()).abs() < 1e-12 * a.cosh());
    }

    #[test]
    fn aux_quadratic_round_trip(p in exppoly(2)) {
        let q = p.extract_aux_quadratic("E").unwrap();
        prop_assert_eq!(q.reassemble().unwrap(), p);
    }

    #[test]
    fn cyclotomic_field_laws(k1 in 1i64..12, n1 in 2u64..13, k2 in 1i64..12, n2 in 2u64..13, k3 in 1i64..8, n3 in 2u64..9) {
        let a = cyc_trig(k1, n1, Trig::Cos);
        let b = cyc_trig(k2, n2, Trig::Sin);
        let c = &cyc_trig(k3, n3, Trig::Cos) + &CycNum::from_rat(rat(1, 3));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let prod = (&a * &b).to_complex();
        let num = a.to_complex() * b.to_complex();
        prop_assert!((prod - num).norm() < 1e-10);
        prop_assert_eq!(&c * &c.inv().unwrap(), CycNum::one());
    }

    #[test]
    fn minimal_polynomial_annihilates(k in 1i64..30, n in 3u64..31) {
        let v = cyc_trig(k, n, Trig::Cos);
        let p = cyc_minpoly(&v).unwrap();
        prop_assert!(p.eval_cyc(&v).is_zero());
        prop_assert_eq!(p.degree(), Some(cyc_degree(&v)));
        prop_assert!(p.is_monic());
    }

    #[test]
    fn hyperbolic_triangles_satisfy_laws(p in 0.05f64..1.0, q in 0.05f64..1.0, r in 0.05f64..1.0) {
        let s = p + q + r;
        let scale = std::f64::consts::PI * 0.95 / s.max(1.0);
        let (al, be, ga) = (p * scale.min(1.0), q * scale.min(1.0), r * scale.min(1.0));
        prop_assume!(al + be + ga < std::f64::consts::PI - 1e-3);
        let k = Curvature::hyperbolic_unit();
        let t = solve_hyperbolic_from_angles(al, be, ga, k).unwrap();
        prop_assert!(t.law_of_sines_residual(k) < 1e-9);
        let back = solve_triangle_sas(t.sides[0], ga, t.sides[1], k).unwrap();
        prop_assert!((back.sides[2] - t.sides[2]).abs() < 1e-8 * (1.0 + t.sides[2]));
    }
}

#[test]
fn planted_polynomials_are_recovered() {
    use rathyp_core::evidence::{eval_constant, scan_algebraicity_at, ConstantSpec, DEFAULT_BUDGET};
    let cases = [
        ("sqrt(3)", 2, 3, vec![-3, 0, 1]),
        ("1+sqrt(2)", 2, 2, vec![-1, -2, 1]),
        ("(2+sqrt(3))/3", 2, 12, vec![1, -12, 9]),
    ];
    for (expr, d, h, want) in cases {
        let v = eval_constant(&ConstantSpec::lookup(expr, 60).unwrap()).unwrap();
        let r = scan_algebraicity_at(&v.value, d, h, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.argmin, want, "{expr}");
        assert!(r.algebraic);
    }
}

#[test]
fn enlarging_bounds_never_increases_the_minimum() {
    use rathyp_core::evidence::{eval_constant, scan_algebraicity_at, ConstantSpec, DEFAULT_BUDGET};
    let v = eval_constant(&ConstantSpec::lookup("ideal-pi3", 60).unwrap()).unwrap();
    let mut last = f64::INFINITY;
    for (d, h) in [(1, 1), (1, 3), (2, 3), (2, 6), (3, 6), (3, 10)] {
        let r = scan_algebraicity_at(&v.value, d, h, DEFAULT_BUDGET).unwrap();
        assert!(r.minimum <= last);
        assert!(r.certified);
        last = r.minimum;
    }
}

#[test]
fn scan_error_bound_encloses_high_precision_value() {
    use rathyp_core::evidence::{scan_algebraicity_at, Expr};
    let coarse = Expr::parse("arccosh(1+sqrt(2))").unwrap().eval_interval(80).unwrap();
    let r = scan_algebraicity_at(&coarse, 3, 5, 1_000_000).unwrap();
    let fine = Expr::parse("arccosh(1+sqrt(2))").unwrap().eval_interval(400).unwrap();
    let mut p = rathyp_core::evidence::Interval::from_int(0, 400);
    for (i, &c) in r.argmin.iter().enumerate() {
        p = p.add(&fine.powi(i as i32).unwrap().mul(&rathyp_core::evidence::Interval::from_int(c, 400)));
    }
    let truth = p.to_f64().abs();
    assert!((truth - r.minimum).abs() <= r.error_bound);
}
