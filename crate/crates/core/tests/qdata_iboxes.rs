use krdenom::invariants::{d_invariant, dual_shift, Interval};
use krdenom::qdata_iboxes::{iboxes_commute, reaches_commute, IBox, QDatum, Reading, Strategy};
use krdenom::root_data::all_types;
use krdenom::{AffineType, Kind};

const STRATEGIES: [Strategy; 3] = [Strategy::NE, Strategy::SE, Strategy::N];

#[test]
fn height_functions_are_valid() {
    for t in all_types(5) {
        QDatum::new(t).unwrap().check().unwrap_or_else(|e| panic!("{t}: {e}"));
    }
}

#[test]
fn readings_are_compatible_bijections() {
    for t in all_types(4) {
        for s in STRATEGIES {
            let r = Reading::standard(t, s).unwrap();
            for k in -40..40 {
                let v = r.at(k);
                assert_eq!(r.index_of(v).unwrap(), k, "{t} {s}");
                for w in r.qd.arrows_from(v) {
                    assert!(r.index_of(w).unwrap() > k, "{t} {s} {v:?}->{w:?}");
                }
                let (i, p) = v;
                assert_eq!(r.at(r.plus(k)), (i, p + 2 * r.qd.d[i]), "{t} {s}");
            }
        }
    }
}

fn boxes(r: &Reading, lo: i64, hi: i64, max_width: usize) -> Vec<IBox> {
    let mut out = vec![];
    for a in lo..=hi {
        let mut b = a;
        for _ in 0..max_width {
            out.push(IBox { a, b });
            b = r.plus(b);
        }
    }
    out
}

fn check_reading(r: &Reading, span: i64, max_width: usize) {
    let bs = boxes(r, -span, span, max_width);
    let mods: Vec<_> = bs.iter().map(|b| b.module(r)).collect();
    for (x, mx) in bs.iter().zip(&mods) {
        for (y, my) in bs.iter().zip(&mods) {
            let equal_d = r.qd.d[x.color(r)] == r.qd.d[y.color(r)];
            if iboxes_commute(r, *x, *y) {
                assert_eq!(d_invariant(mx, my, true).unwrap(), Interval::exact(0), "{} {x:?} {y:?}", r.qd.ty);
            }
            if equal_d && reaches_commute(r, *x, *y) {
                assert_eq!(d_invariant(mx, my, true).unwrap(), Interval::exact(0), "{} {x:?} {y:?}", r.qd.ty);
            }
        }
    }
}

fn check_d_values(r: &Reading, span: i64, max_width: usize) {
    let one = Interval::exact(1);
    for bx in boxes(r, -span, span, max_width) {
        let (a, b) = (bx.a, bx.b);
        let m = bx.module(r);
        for s in r.minus(a) + 1..r.plus(b) {
            assert_eq!(d_invariant(&m, &r.fundamental(s), true).unwrap(), Interval::exact(0));
        }
        assert_eq!(d_invariant(&r.fundamental(r.plus(b)), &m, true).unwrap(), one);
        assert_eq!(d_invariant(&r.fundamental(r.minus(a)), &m, true).unwrap(), one);
        let shifted = IBox { a: r.minus(a), b: r.minus(b) }.module(r);
        assert_eq!(d_invariant(&m, &shifted, true).unwrap(), one);
        assert_eq!(d_invariant(&dual_shift(&r.fundamental(b), 1), &m, true).unwrap(), one);
        assert_eq!(d_invariant(&dual_shift(&r.fundamental(a), -1), &m, true).unwrap(), one);
    }
}

#[test]
fn b3_and_a4_commuting_boxes() {
    for t in [AffineType::b(3), AffineType::a(5)] {
        for s in STRATEGIES {
            let r = Reading::standard(t, s).unwrap();
            check_reading(&r, 6, 4);
            check_d_values(&r, 6, 4);
        }
    }
}

#[test]
fn reach_form_overshoots_for_mixed_lengths() {
    let r = Reading::standard(AffineType::b(3), Strategy::NE).unwrap();
    let (x, y) = (IBox { a: -6, b: -3 }, IBox { a: 1, b: 1 });
    assert_eq!((x.color(&r), y.color(&r)), (3, 2));
    assert_eq!(x.extended_reach(&r, 2), (-12, 4));
    assert_eq!(y.reach(&r), (0, 0));
    assert!(reaches_commute(&r, x, y));
    assert!(!iboxes_commute(&r, x, y));
    assert_eq!(d_invariant(&x.module(&r), &y.module(&r), true).unwrap(), Interval::exact(1));
}

#[test]
fn commuting_boxes_sweep() {
    for t in all_types(4) {
        if t.kind == Kind::G1 {
            continue;
        }
        for s in STRATEGIES {
            let r = Reading::standard(t, s).unwrap();
            check_reading(&r, 3, 4);
            check_d_values(&r, 3, 4);
        }
    }
}
