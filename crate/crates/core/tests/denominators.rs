use krdenom::denominators::{alt, denom_fundamental, denom_kr, in_c_ambiguity_regime};
use krdenom::qfield::rat;
use krdenom::root_data::all_types;
use krdenom::{AffineType, FactoredLaurent, Kind, QPoint};
use proptest::prelude::*;

fn non_g2() -> Vec<AffineType> {
    all_types(4).into_iter().filter(|t| t.kind != Kind::G1).collect()
}

#[test]
fn fusion_divisibility() {
    for t in non_g2() {
        for l in t.nodes() {
            let c = t.minus_chq(l);
            for k in t.nodes() {
                for m in 1..=4 {
                    for p in 2..=4 {
                        let d = denom_kr(t, l, p, k, m, true).unwrap().certain;
                        let a = denom_kr(t, l, p - 1, k, m, true).unwrap().certain.scale_roots(c);
                        let b = denom_kr(t, l, 1, k, m, true).unwrap().certain.scale_roots(c.pow(1 - p as i64));
                        assert!(d.divides(&a.mul(&b)), "{t} {l}^{p} {k}^{m}");
                    }
                }
            }
        }
    }
}

#[test]
fn symmetric_with_positive_roots() {
    for t in non_g2() {
        for l in t.nodes() {
            for k in t.nodes() {
                for m in 1..=4 {
                    for p in 1..=4 {
                        let d = denom_kr(t, l, p, k, m, true).unwrap();
                        assert_eq!(d, denom_kr(t, k, m, l, p, true).unwrap(), "{t} {l}^{p} {k}^{m}");
                        for (r, _) in d.certain.roots() {
                            assert!(r.qexp() > rat(0, 1), "{t} {l}^{p} {k}^{m}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn fundamental_case_agrees_with_table() {
    for t in all_types(5) {
        for l in t.nodes() {
            for k in t.nodes() {
                assert_eq!(denom_kr(t, k, 1, l, 1, false).unwrap(), denom_fundamental(t, k, l).unwrap());
            }
        }
    }
}

#[test]
fn g2_higher_levels_unsupported() {
    assert!(denom_kr(AffineType::g2(), 1, 2, 2, 1, false).is_err());
}

#[test]
fn c_sign_forms_agree_exactly_when_expected() {
    for n in 2..=4i64 {
        let t = AffineType::c(n as usize);
        for m in 1..=4i64 {
            for p in 1..=4i64 {
                for l in 1..n {
                    let got = denom_kr(t, l as usize, p as usize, n as usize, m as usize, true).unwrap().certain;
                    let tab = alt::c_spin_mixed_table(n, l, p, m);
                    assert_eq!(got == tab, m % 2 == 1, "C{n} {l}^{p} {n}^{m}");
                }
                let got = denom_kr(t, n as usize, p as usize, n as usize, m as usize, true).unwrap().certain;
                let tab = alt::c_spin_spin_table(n, p, m);
                assert_eq!(got == tab, (m + p) % 2 == 0, "C{n} {n}^{p} {n}^{m}");
            }
        }
    }
}

#[test]
fn d2_mixed_matches_squared_table_at_odd_level() {
    for n in 2..=4i64 {
        let t = AffineType::d2(n as usize);
        for l in 1..n {
            for p in 1..=4i64 {
                for m in 1..=4i64 {
                    let got = denom_kr(t, l as usize, p as usize, n as usize, m as usize, true).unwrap().certain;
                    let mut w = FactoredLaurent::one();
                    for tt in 0..p.min(m) {
                        for s in 1..=l {
                            let e = n - l + (p - m).abs() + 2 * (s + tt);
                            w.add_root(QPoint::sign(1).mul(QPoint::sign(e)).mul(QPoint::qi(2 * e)), 1);
                        }
                    }
                    let tab = w.compose_power(2);
                    if m % 2 == 1 {
                        assert_eq!(got, tab, "D2 n={n} {l}^{p} {n}^{m}");
                    }
                    assert_eq!(got.degree(), tab.degree());
                }
            }
        }
    }
}

#[test]
fn c_ambiguity_regime_membership() {
    let c4 = AffineType::c(4);
    assert!(in_c_ambiguity_regime(c4, 2, 3, 2, 5));
    assert!(in_c_ambiguity_regime(c4, 3, 3, 3, 3));
    assert!(!in_c_ambiguity_regime(c4, 2, 1, 2, 5));
    assert!(!in_c_ambiguity_regime(c4, 2, 3, 2, 4));
    assert!(!in_c_ambiguity_regime(c4, 1, 3, 1, 5));
    assert!(!in_c_ambiguity_regime(c4, 4, 3, 4, 5));
    assert!(!in_c_ambiguity_regime(AffineType::b(4), 2, 3, 2, 5));
}

proptest! {
    #[test]
    fn ambiguous_bounds_bracket_conjectural_value(k in 2usize..4, m in 1usize..4, p in 1usize..4) {
        let t = AffineType::c(4);
        let (m, p) = (2 * m + 1, 2 * p + 1);
        let off = denom_kr(t, k, m, k, p, false).unwrap();
        let on = denom_kr(t, k, m, k, p, true).unwrap();
        prop_assert!(off.lower().divides(&on.certain));
        prop_assert!(on.certain.divides(&off.upper()));
        prop_assert!(off.exact_or_err().is_err());
    }

    #[test]
    fn degree_grows_with_level(ti in 0usize..9, k in 1usize..4, l in 1usize..4, m in 1usize..4, p in 1usize..4) {
        let ts = non_g2();
        let t = ts[ti % ts.len()];
        let r = t.rank();
        let (k, l) = ((k - 1) % r + 1, (l - 1) % r + 1);
        let a = denom_kr(t, k, m, l, p, true).unwrap().certain.degree();
        let b = denom_kr(t, k, m, l, p + 1, true).unwrap().certain.degree();
        prop_assert!(a <= b);
    }
}
