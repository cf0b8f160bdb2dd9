use krdenom::invariants::{d_invariant, dual_shift, lambda, lambda_inf, Interval};
use krdenom::root_data::all_types;
use krdenom::univcoeff::{lambda_from_coeff, lambda_inf_from_coeff};
use krdenom::{AffineType, KRModule, Kind, QPoint};

fn sweep_pairs(max_rank: usize, max_level: usize) -> Vec<(KRModule, KRModule)> {
    let mut out = vec![];
    for t in all_types(max_rank) {
        if t.kind == Kind::G1 {
            continue;
        }
        let step = t.minus_chq(1);
        for k in t.nodes() {
            for l in t.nodes() {
                for m in 1..=max_level {
                    for p in 1..=max_level {
                        let mm = KRModule::new(t, k, m, QPoint::one()).unwrap();
                        for s in -6..=6 {
                            let nn = KRModule::new(t, l, p, step.pow(s)).unwrap();
                            out.push((mm, nn));
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn symmetric_and_nonnegative() {
    for (m, n) in sweep_pairs(4, 3) {
        let a = d_invariant(&m, &n, true).unwrap();
        assert_eq!(a, d_invariant(&n, &m, true).unwrap(), "{m} {n}");
        assert!(a.lo >= 0);
        assert!(a.is_exact());
    }
}

#[test]
fn lambda_matches_coefficient_degree() {
    for (m, n) in sweep_pairs(3, 2) {
        let l = lambda(&m, &n, true).unwrap();
        assert_eq!(l, Interval::exact(lambda_from_coeff(&m, &n, true).unwrap()), "{m} {n}");
        let li = lambda_inf(&m, &n, true).unwrap();
        assert_eq!(li, Interval::exact(lambda_inf_from_coeff(&m, &n, true).unwrap()), "{m} {n}");
    }
}

#[test]
fn d_is_half_symmetrized_lambda() {
    for (m, n) in sweep_pairs(3, 2) {
        let d = d_invariant(&m, &n, true).unwrap().lo;
        let s = lambda(&m, &n, true).unwrap().lo + lambda(&n, &m, true).unwrap().lo;
        assert_eq!(2 * d, s, "{m} {n}");
    }
}

#[test]
fn lambda_dual_rotation() {
    for (m, n) in sweep_pairs(3, 2).into_iter().step_by(7) {
        assert_eq!(lambda(&m, &n, true).unwrap(), lambda(&dual_shift(&n, -1), &m, true).unwrap(), "{m} {n}");
    }
}

#[test]
fn fundamentals_are_root_modules() {
    for t in all_types(5) {
        for k in t.nodes() {
            let m = KRModule::fundamental(t, k, QPoint::one()).unwrap();
            for s in -3..=3i64 {
                let want = i64::from(s.abs() == 1);
                assert_eq!(d_invariant(&m, &dual_shift(&m, s), false).unwrap(), Interval::exact(want), "{t} {k} {s}");
            }
        }
    }
}

#[test]
fn type_a_first_row_kr_are_root_modules() {
    for n in 3..=6 {
        let t = AffineType::a(n);
        for lev in 1..n {
            let m = KRModule::new(t, 1, lev, QPoint::one()).unwrap();
            for s in -3..=3i64 {
                let want = i64::from(s.abs() == 1);
                assert_eq!(d_invariant(&m, &dual_shift(&m, s), false).unwrap(), Interval::exact(want));
            }
        }
    }
}

#[test]
fn c3_ambiguity_resolution_pairs() {
    let t = AffineType::c(3);
    let v1 = KRModule::new(t, 2, 3, QPoint::mqs(-1)).unwrap();
    let v2 = KRModule::new(t, 2, 5, QPoint::mqs(5)).unwrap();
    assert_eq!(lambda_inf(&v1, &v2, true).unwrap(), Interval::exact(4));
    assert_eq!(lambda_inf(&v1, &v2, false).unwrap(), Interval { lo: 2, hi: 4 });
    // 4 + 2 e_8 with e_8 the open multiplicity at qs^8
    let v3 = KRModule::new(t, 2, 5, QPoint::mqs(7)).unwrap();
    assert_eq!(lambda_inf(&v1, &v3, true).unwrap(), Interval::exact(6));
    assert_eq!(lambda_inf(&v1, &v3, false).unwrap(), Interval { lo: 4, hi: 6 });
    let v4 = KRModule::new(t, 2, 7, QPoint::mqs(7)).unwrap();
    assert_eq!(lambda_inf(&v1, &v4, true).unwrap(), Interval::exact(2));
}
