use torusamp::partitions::{enumerate, Dominance, Partition};

fn all_upto(n: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(enumerate)
}

#[test]
fn conjugation_is_an_involution() {
    for l in all_upto(12) {
        assert_eq!(l.conjugate().conjugate(), l);
        assert_eq!(l.conjugate().size(), l.size());
    }
}

#[test]
fn sq_norm_has_size_parity() {
    for l in all_upto(12) {
        assert_eq!(l.sq_norm() % 2, l.size() % 2, "{l:?}");
    }
}

#[test]
fn enumeration_refines_dominance() {
    for d in 0..=9 {
        let ps = enumerate(d);
        for (i, mu) in ps.iter().enumerate() {
            for lambda in &ps[i + 1..] {
                // a later partition never strictly dominates an earlier one
                assert_ne!(mu.dominance_leq(lambda).unwrap(), Dominance::LessEqual, "{mu:?} {lambda:?}");
            }
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn hook_lengths_sum_to_norm_average() {
    for l in all_upto(10) {
        let mut direct = 0;
        // brute-force arm and leg by scanning the diagram
        for (r, &len) in l.parts().iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = l.parts()[r + 1..].iter().filter(|&&p| p > c).count();
                direct += arm + leg + 1;
                assert_eq!(l.arm_leg(r + 1, c + 1).unwrap(), (arm, leg));
            }
        }
        assert_eq!(2 * direct, l.sq_norm() + l.conjugate().sq_norm(), "{l:?}");
    }
}
