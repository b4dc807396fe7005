use proptest::prelude::*;
use torusamp::arith::{Field, RatFunc, Var};
use torusamp::macdonald::{
    dual_hall_littlewood, hall_littlewood, lr_coeff, macdonald_p, norm_g, principal_spec, q_whittaker,
    topological_locus,
};
use torusamp::partitions::{enumerate, Dominance, Partition};
use torusamp::symfunc::{exact, expand_in_basis, multiply, qt_inner, scale_power_sums, schur, Basis, SymFunc};
use torusamp::part;

const MAX_DEG: usize = 7;

fn at_q(f: &RatFunc, v: &RatFunc) -> RatFunc {
    f.substitute(Var::Q, v).unwrap()
}

fn specialize_q(f: &SymFunc, v: &RatFunc) -> SymFunc {
    SymFunc::from_terms(Basis::PowerSum, f.terms().iter().map(|(l, c)| (l.clone(), at_q(c, v))))
}

// Littlewood-Richardson numbers: fillings of a/r with content b, rows weak, columns
// strict, reverse reading word a lattice word
fn lr_number(r: &Partition, b: &Partition, a: &Partition) -> i64 {
    if !a.contains(r) || a.size() != r.size() + b.size() {
        return 0;
    }
    let mut cells = Vec::new();
    for i in 0..a.len() {
        for j in (r.part(i)..a.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut grid = vec![vec![0usize; a.part(0)]; a.len()];
    let mut used = vec![0usize; b.len() + 1];
    fn go(k: usize, cells: &[(usize, usize)], r: &Partition, b: &Partition, grid: &mut Vec<Vec<usize>>, used: &mut Vec<usize>) -> i64 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let mut total = 0;
        for v in 1..=b.len() {
            if used[v] == b.part(v - 1) || (v > 1 && used[v] + 1 > used[v - 1]) {
                continue;
            }
            // row weakly increasing: the cell to the right, already filled, must be >= v
            if j + 1 < grid[i].len() && grid[i][j + 1] != 0 && grid[i][j + 1] < v {
                continue;
            }
            // column strict: the cell above, if part of the skew shape, must be < v
            if i > 0 && j >= r.part(i - 1) && grid[i - 1][j] >= v {
                continue;
            }
            grid[i][j] = v;
            used[v] += 1;
            total += go(k + 1, cells, r, b, grid, used);
            used[v] -= 1;
            grid[i][j] = 0;
        }
        total
    }
    go(0, &cells, r, b, &mut grid, &mut used)
}

#[test]
fn orthogonal_monic_triangular_with_norms() {
    for d in 1..=MAX_DEG {
        let parts = enumerate(d);
        let ps: Vec<SymFunc> = parts.iter().map(macdonald_p).collect();
        for (i, a) in parts.iter().enumerate() {
            let m = expand_in_basis(&ps[i], Basis::Monomial).unwrap();
            assert!(m.coeff(a).is_one(), "M{a} is not monic");
            for mu in m.terms().keys() {
                assert_eq!(mu.dominance_leq(a).unwrap(), Dominance::LessEqual, "M{a} has m{mu}");
            }
            assert_eq!(qt_inner(&ps[i], &ps[i]), norm_g(a), "norm of M{a}");
            for j in 0..i {
                assert!(qt_inner(&ps[i], &ps[j]).is_zero(), "<M{a}, M{}>", parts[j]);
            }
        }
    }
}

#[test]
fn lr_coefficients_expand_products() {
    for total in 1..=MAX_DEG {
        for rd in 1..total {
            for r in enumerate(rd) {
                for b in enumerate(total - rd) {
                    let prod = multiply(&macdonald_p(&r), &macdonald_p(&b));
                    let col = exact().lr_column(&r, &b);
                    assert_eq!(col, exact().lr_column(&b, &r), "N_({r},{b}) not symmetric");
                    let mut sum = SymFunc::zero(Basis::PowerSum);
                    for (a, c) in enumerate(total).iter().zip(&col) {
                        sum = sum.add(&macdonald_p(a).scale(c));
                    }
                    assert_eq!(sum, prod, "M{r} M{b}");
                    assert_eq!(lr_coeff(&r, &b, &part![total]), col[0]);
                }
            }
        }
    }
}

#[test]
fn lr_coefficients_at_q_equals_t_are_littlewood_richardson_numbers() {
    for total in 2..=6 {
        for rd in 1..total {
            for r in enumerate(rd) {
                for b in enumerate(total - rd) {
                    let col = exact().lr_column(&r, &b);
                    for (a, c) in enumerate(total).iter().zip(&col) {
                        let got = at_q(c, &RatFunc::t());
                        assert_eq!(got, RatFunc::from_i64(lr_number(&r, &b, a)), "c^{a}_({r},{b})");
                    }
                }
            }
        }
    }
}

#[test]
fn degenerations() {
    for d in 1..=6 {
        for l in enumerate(d) {
            let p = macdonald_p(&l);
            assert_eq!(specialize_q(&p, &RatFunc::zero()), hall_littlewood(&l), "q=0 at {l}");
            assert_eq!(specialize_q(&p, &RatFunc::t()), schur(&l), "q=t at {l}");
        }
    }
}

#[test]
fn dual_hall_littlewood_is_rescaled_q_whittaker() {
    for d in 0..=5 {
        for l in enumerate(d) {
            let rescaled = scale_power_sums(&q_whittaker(&l), |k| RatFunc::one().sub(&RatFunc::t().pow(k as i32).unwrap()));
            assert_eq!(dual_hall_littlewood(&l), rescaled, "{l}");
        }
    }
}

#[test]
fn hall_littlewood_is_q_free() {
    for d in 1..=6 {
        for l in enumerate(d) {
            for c in hall_littlewood(&l).terms().values() {
                assert_eq!(at_q(c, &RatFunc::from_i64(5)), *c);
            }
        }
    }
}

#[test]
fn topological_locus_examples() {
    let p1 = SymFunc::p(part![1]);
    for n in 1..=5usize {
        let want = (0..n as i32).fold(RatFunc::zero(), |acc, i| acc.add(&RatFunc::t().pow(-i).unwrap()));
        assert_eq!(topological_locus(&p1, n), want, "N={n}");
    }
    // at N = 1 only one-row shapes survive
    assert!(topological_locus(&macdonald_p(&part![1, 1]), 1).is_zero());
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max, 0usize..8).prop_map(|(d, i)| {
        let ps = enumerate(d);
        ps[i % ps.len()].clone()
    })
}

fn symfunc() -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition(3), -3i64..=3, 0i32..=1), 1..=3).prop_map(|ts| {
        SymFunc::from_terms(
            Basis::PowerSum,
            ts.into_iter()
                .map(|(l, a, e)| (l, RatFunc::from_i64(a).mul(&RatFunc::q().pow(e).unwrap()))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn principal_specialization_is_a_ring_map(f in symfunc(), g in symfunc(), a in partition(3)) {
        let lhs = principal_spec(&multiply(&f, &g), &a);
        let rhs = principal_spec(&f, &a).mul(&principal_spec(&g, &a));
        prop_assert_eq!(lhs, rhs);
        let sum = principal_spec(&f.add(&g), &a);
        prop_assert_eq!(sum, principal_spec(&f, &a).add(&principal_spec(&g, &a)));
    }
}
