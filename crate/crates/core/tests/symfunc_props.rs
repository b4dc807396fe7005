use proptest::prelude::*;
use torusamp::arith::{Field, RatFunc, Var};
use torusamp::cli::expr::parse;
use torusamp::partitions::{enumerate, Partition};
use torusamp::symfunc::{expand_in_basis, monomial, multiply, qt_inner, scale_power_sums, schur, to_canonical, Basis, SymFunc};
use torusamp::part;

fn r(s: &str) -> RatFunc {
    parse(s).unwrap()
}

fn complete(k: usize) -> SymFunc {
    SymFunc::from_terms(
        Basis::PowerSum,
        enumerate(k).into_iter().map(|mu| {
            let z = mu.z() as i64;
            (mu, RatFunc::ratio(1, z))
        }),
    )
}

fn det_jacobi_trudi(lambda: &Partition) -> SymFunc {
    let l = lambda.len();
    let mut acc = SymFunc::zero(Basis::PowerSum);
    let mut perm: Vec<usize> = (0..l).collect();
    permutations(&mut perm, 0, &mut |p, sign| {
        let mut term = SymFunc::one();
        for (i, &j) in p.iter().enumerate() {
            let k = lambda.part(i) as i64 - i as i64 + j as i64;
            if k < 0 {
                return;
            }
            term = multiply(&term, &complete(k as usize));
        }
        let s = RatFunc::from_i64(sign);
        acc = acc.add(&term.scale(&s));
    });
    acc
}

fn permutations(p: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize], i64)) {
    fn go(p: &mut Vec<usize>, at: usize, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
        if at == p.len() {
            f(p, sign);
            return;
        }
        for i in at..p.len() {
            p.swap(at, i);
            go(p, at + 1, if i == at { sign } else { -sign }, f);
            p.swap(at, i);
        }
    }
    go(p, at, 1, f)
}

// number of semistandard tableaux of shape lambda and content mu, peeling horizontal strips
fn kostka(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&last, rest)) = mu.split_last() else {
        return lambda.iter().all(|&x| x == 0) as i64;
    };
    let mut total = 0;
    let mut nu = vec![0; lambda.len()];
    fn strips(lambda: &[usize], i: usize, left: usize, nu: &mut Vec<usize>, rest: &[usize], total: &mut i64) {
        if i == lambda.len() {
            if left == 0 {
                *total += kostka(nu, rest);
            }
            return;
        }
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        for v in lo..=lambda[i] {
            let take = lambda[i] - v;
            if take <= left {
                nu[i] = v;
                strips(lambda, i + 1, left - take, nu, rest, total);
            }
        }
    }
    strips(lambda, 0, last, &mut nu, rest, &mut total);
    total
}

#[test]
fn monomial_and_schur_round_trip_through_power_sums() {
    for d in 0..=10 {
        for lambda in enumerate(d) {
            let m = expand_in_basis(&monomial(&lambda), Basis::Monomial).unwrap();
            assert_eq!(m, SymFunc::term(Basis::Monomial, lambda.clone(), RatFunc::one()), "m{lambda}");
            let s = expand_in_basis(&schur(&lambda), Basis::Schur).unwrap();
            assert_eq!(s, SymFunc::term(Basis::Schur, lambda.clone(), RatFunc::one()), "s{lambda}");
        }
    }
}

#[test]
fn schur_agrees_with_jacobi_trudi() {
    for d in 1..=6 {
        for lambda in enumerate(d) {
            assert_eq!(schur(&lambda), to_canonical(&det_jacobi_trudi(&lambda)), "s{lambda}");
        }
    }
}

#[test]
fn schur_to_monomial_gives_kostka_numbers() {
    for d in 1..=7 {
        for lambda in enumerate(d) {
            let m = expand_in_basis(&schur(&lambda), Basis::Monomial).unwrap();
            for mu in enumerate(d) {
                let k = kostka(lambda.parts(), mu.parts());
                assert_eq!(m.coeff(&mu), RatFunc::from_i64(k), "K({lambda},{mu})");
            }
        }
    }
}

#[test]
fn schur_is_orthonormal_at_q_equals_t() {
    for d in 1..=6 {
        let parts = enumerate(d);
        for a in &parts {
            for b in &parts {
                let v = qt_inner(&schur(a), &schur(b)).substitute(Var::Q, &RatFunc::t()).unwrap();
                let want = if a == b { RatFunc::one() } else { RatFunc::zero() };
                assert_eq!(v, want, "<s{a}, s{b}>");
            }
        }
    }
}

#[test]
fn worked_examples() {
    let f = SymFunc::from_terms(Basis::Schur, [(part![2], RatFunc::one()), (part![1, 1], RatFunc::one())]);
    assert_eq!(to_canonical(&f), SymFunc::p(part![1, 1]));
    let p1 = SymFunc::p(part![1]);
    assert_eq!(multiply(&p1, &p1), SymFunc::p(part![1, 1]));
    assert_eq!(qt_inner(&p1, &p1), r("(1-q)/(1-t)"));
    assert_eq!(qt_inner(&SymFunc::p(part![2]), &SymFunc::p(part![2])), r("2(1-q^2)/(1-t^2)"));
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::PowerSum), Just(Basis::Monomial), Just(Basis::Schur)]
}

fn coeff() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, -2i64..=2, 0i32..=2).prop_map(|(a, b, e)| {
        RatFunc::from_i64(a).add(&RatFunc::from_i64(b).mul(&RatFunc::q().pow(e).unwrap()))
    })
}

fn symfunc(max_deg: usize) -> impl Strategy<Value = SymFunc> {
    let terms = prop::collection::vec((0..=max_deg, 0usize..16, coeff()), 1..=3);
    (basis(), terms).prop_map(|(b, ts)| {
        let f = SymFunc::from_terms(
            b,
            ts.into_iter().map(|(d, i, c)| {
                let parts = enumerate(d);
                (parts[i % parts.len()].clone(), c)
            }),
        );
        to_canonical(&f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn multiplication_is_commutative(f in symfunc(4), g in symfunc(4)) {
        prop_assert_eq!(multiply(&f, &g), multiply(&g, &f));
    }

    #[test]
    fn multiplication_is_associative(f in symfunc(3), g in symfunc(3), h in symfunc(3)) {
        prop_assert_eq!(multiply(&multiply(&f, &g), &h), multiply(&f, &multiply(&g, &h)));
    }

    #[test]
    fn inner_product_is_symmetric(f in symfunc(4), g in symfunc(4)) {
        prop_assert_eq!(qt_inner(&f, &g), qt_inner(&g, &f));
    }

    #[test]
    fn rescaling_undoes(f in symfunc(5), a in 1i64..=3) {
        let c = move |k: usize| RatFunc::from_i64(a).add(&RatFunc::q().pow(k as i32).unwrap())
            .div(&RatFunc::one().sub(&RatFunc::t().pow(k as i32).unwrap())).unwrap();
        let there = scale_power_sums(&f, c);
        let back = scale_power_sums(&there, move |k| c(k).inv().unwrap());
        prop_assert_eq!(back, f);
    }
}
