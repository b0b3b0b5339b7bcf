use proptest::prelude::*;

use scrollkit::exactalg::{
    determinant, discriminant, field_determinant, format_poly, parse_poly, resultant, UniPoly,
};
use scrollkit::invariants::bonnesen;
use scrollkit::{Form, Poly, Rational};

const VARS: [&str; 3] = ["x", "y", "z"];

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != Rational::from_integer(0.into()))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), rational()), 0..5)
        .prop_map(|terms| Poly::from_terms(&VARS, terms).unwrap())
}

fn form(deg: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Form> {
    deg.prop_flat_map(|d| prop::collection::vec(rational(), d + 1))
        .prop_filter_map("nonzero form", |c| Form::from_scalars("v0", "v1", c).ok())
}

fn mul(f: &Form, g: &Form) -> Form {
    Form::from_poly(&(&f.to_poly() * &g.to_poly()), "v0", "v1").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), r in poly()) {
        let sub = |p: &Poly| p.substitute(&[("y", r.clone())]).unwrap();
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        f in form(1..=3),
        g in form(1..=3),
        l in form(1..=1),
        share in any::<bool>(),
    ) {
        let (f, g) = if share { (mul(&f, &l), mul(&g, &l)) } else { (f, g) };
        let res = resultant(&f, &g).unwrap();
        prop_assert_eq!(res.is_zero(), f.gcd_degree(&g).unwrap() > 0);
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root(
        f in form(2..=4),
        l in form(1..=1),
        h in form(0..=2),
        square in any::<bool>(),
    ) {
        let f = if square { mul(&mul(&l, &l), &h) } else { f };
        let disc = discriminant(&f).unwrap();
        prop_assert_eq!(disc.is_zero(), !f.is_squarefree().unwrap());
    }

    #[test]
    fn resultant_is_antisymmetric_by_degree(f in form(1..=3), g in form(1..=3)) {
        let sign = if (f.degree() * g.degree()) % 2 == 0 { 1 } else { -1 };
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        prop_assert_eq!(fg, gf.scale(&Rational::from_integer(sign.into())));
    }
}

proptest! {
    #[test]
    fn print_parse_round_trip(p in poly()) {
        let text = format_poly(&p);
        let back = parse_poly(&text, Some(&VARS)).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn bareiss_agrees_with_elimination(rows in prop::collection::vec(prop::collection::vec(rational(), 4), 4)) {
        let as_poly: Vec<Vec<Poly>> = rows.iter().map(|r| r.iter().cloned().map(Poly::constant).collect()).collect();
        let d = determinant(as_poly).unwrap();
        let want = field_determinant(rows).unwrap();
        prop_assert_eq!(d.constant_value().unwrap_or_else(|| Rational::from_integer(0.into())), want);
    }

    #[test]
    fn interpolation_recovers_polynomial(c in prop::collection::vec(rational(), 0..6), shift in -3i64..=3) {
        let p = UniPoly::from_coeffs(c);
        let pts: Vec<(Rational, Rational)> = (0..6)
            .map(|i| {
                let x = Rational::from_integer((i + shift).into());
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        prop_assert_eq!(UniPoly::interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn gcd_divides_both(a in prop::collection::vec(rational(), 1..5), b in prop::collection::vec(rational(), 1..5), c in prop::collection::vec(nonzero_rational(), 1..3)) {
        let (a, b, c) = (UniPoly::from_coeffs(a), UniPoly::from_coeffs(b), UniPoly::from_coeffs(c));
        let (ac, bc) = (&a * &c, &b * &c);
        prop_assume!(!ac.is_zero() && !bc.is_zero());
        let g = ac.gcd(&bc);
        prop_assert!(ac.rem(&g).unwrap().is_zero());
        prop_assert!(bc.rem(&g).unwrap().is_zero());
        prop_assert!(g.rem(&c.monic()).unwrap().is_zero());
    }

    #[test]
    fn bonnesen_internal_identities(d in 5i64..40, g in 0i64..60) {
        let s = bonnesen(d, g).unwrap();
        prop_assert_eq!(s.gamma_tilde, 2 * (s.gamma + g) + d - 3);
        prop_assert_eq!(s.t >= 0, 6 * g <= (d - 2) * (d - 3));
        prop_assert_eq!(s.c1_sq + s.c2, 12 * s.chi);
    }
}
