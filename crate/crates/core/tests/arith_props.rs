use num_rational::BigRational;
use proptest::prelude::*;
use torusamp::arith::gcd::{gcd, gcd_reference};
use torusamp::arith::{Int, LaurentPoly, RatFunc};
use torusamp::cli::expr::{parse, render, Display};

fn poly(max_terms: usize, half: bool) -> impl Strategy<Value = LaurentPoly> {
    let step = if half { 1 } else { 2 };
    prop::collection::vec(((-3i32..=3, -3i32..=3), -4i64..=4), 1..=max_terms).prop_map(move |ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|((a, b), c)| ((a * step, b * step), Int::from(c))))
    })
}

fn nonzero(max_terms: usize, half: bool) -> impl Strategy<Value = LaurentPoly> {
    poly(max_terms, half).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc(half: bool) -> impl Strategy<Value = RatFunc> {
    (poly(4, half), nonzero(3, half)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

// rational points with rational square roots, so half powers evaluate exactly
fn point() -> impl Strategy<Value = (BigRational, BigRational)> {
    ((1i64..=7, 1i64..=7), (1i64..=7, 1i64..=7))
        .prop_map(|((a, b), (c, d))| (rat(a * a, b * b), rat(c * c, d * d)))
}

fn same_value(f: &RatFunc, g: &RatFunc, p: &(BigRational, BigRational)) -> bool {
    match (f.evaluate(&p.0, &p.1), g.evaluate(&p.0, &p.1)) {
        (Ok(x), Ok(y)) => x == y,
        _ => true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold_pointwise(f in ratfunc(false), g in ratfunc(false), h in ratfunc(false), p in point()) {
        let l = &(&f + &g) + &h;
        let r = &f + &(&g + &h);
        prop_assert_eq!(&l, &r);
        prop_assert!(same_value(&l, &r, &p));
        let l = &f * &(&g + &h);
        let r = &(&f * &g) + &(&f * &h);
        prop_assert_eq!(&l, &r);
        prop_assert!(same_value(&l, &r, &p));
    }

    #[test]
    fn normalize_is_idempotent_and_value_preserving(n in poly(4, true), d in nonzero(3, true), p in point()) {
        let f = RatFunc::new(n.clone(), d.clone()).unwrap();
        let again = RatFunc::new(f.numer().clone(), f.denom().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        if let (Ok(x), Ok(nv), Ok(dv)) = (
            f.evaluate(&p.0, &p.1),
            RatFunc::from_poly(n).evaluate(&p.0, &p.1),
            RatFunc::from_poly(d).evaluate(&p.0, &p.1),
        ) {
            if dv != BigRational::from_integer(0.into()) {
                prop_assert_eq!(x, nv / dv);
            }
        }
    }

    #[test]
    fn equal_constructions_give_identical_forms(a in nonzero(4, true), b in nonzero(4, true), c in nonzero(3, true)) {
        let ab = RatFunc::new(a.clone(), b.clone()).unwrap();
        let ba = RatFunc::new(b.clone(), a.clone()).unwrap();
        prop_assert!((&ab * &ba).is_one());
        let scaled = RatFunc::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(scaled.numer().terms(), ab.numer().terms());
        prop_assert_eq!(scaled.denom().terms(), ab.denom().terms());
    }

    #[test]
    fn modular_gcd_matches_reference(a in nonzero(4, false), b in nonzero(4, false), c in nonzero(3, false)) {
        let x = &a * &c;
        let y = &b * &c;
        prop_assert_eq!(gcd(&x, &y), gcd_reference(&x, &y));
    }

    #[test]
    fn render_then_parse_is_identity(f in ratfunc(true)) {
        for mode in [Display::QT, Display::Tau] {
            let s = render(&f, mode);
            prop_assert_eq!(parse(&s).unwrap(), f.clone(), "{}", s);
        }
    }
}

#[test]
fn tau_display_is_inverse_t() {
    let f = parse("1+q*tau+q^2*tau^3").unwrap();
    let g = parse("1+q/t+q^2/t^3").unwrap();
    assert_eq!(f, g);
}
