use std::collections::BTreeMap;

use krdenom::characters::*;
use krdenom::crystals::{Weight, G0};
use num_bigint::BigInt;
use proptest::prelude::*;

fn w(g0: G0, s: &str) -> Weight {
    Weight::parse(s, g0.rank).unwrap()
}

fn dim(g0: G0, s: &str) -> BigInt {
    weyl_dim(g0, &w(g0, s)).unwrap()
}

#[test]
fn weyl_dimensions() {
    let a3 = G0::a(3);
    let table = [("L1", 4), ("L2", 6), ("2L1", 10), ("2L2", 20), ("L1+L2", 20), ("L1+2L2", 60), ("2L1+L2", 45), ("2L1+2L2", 126), ("L1+L2+L3", 64), ("2L3", 10)];
    for (s, d) in table {
        assert_eq!(dim(a3, s), d.into(), "{s}");
    }
    // natural, spin and adjoint dimensions
    assert_eq!(dim(G0::b(4), "L1"), 9.into());
    assert_eq!(dim(G0::b(4), "L4"), 16.into());
    assert_eq!(dim(G0::d(5), "L5"), 16.into());
    assert_eq!(dim(G0::c(3), "L3"), 14.into());
    assert_eq!(dim(G0::g2(), "L2"), 14.into());
    assert_eq!(dim(G0::g2(), "L1"), 7.into());
    // dim V(mΛ_1) of sl_{r+1} is C(m+r, r)
    assert_eq!(dim(G0::a(9), "30L1"), BigInt::from(211915132u64));
}

#[test]
fn positive_coroot_counts() {
    for (g0, n) in [(G0::a(4), 10), (G0::b(3), 9), (G0::c(3), 9), (G0::d(4), 12), (G0::g2(), 6)] {
        assert_eq!(positive_coroots(g0).len(), n, "{g0}");
    }
}

#[test]
fn type_a_decompositions() {
    let a3 = G0::a(3);
    let got = decompose_tensor_type_a(a3, &w(a3, "2L1"), &w(a3, "L2")).unwrap();
    let want = BTreeMap::from([(w(a3, "2L1+L2"), 1), (w(a3, "L1+L3"), 1)]);
    assert_eq!(got, want);
    let got = decompose_tensor_type_a(a3, &w(a3, "L1"), &w(a3, "2L2")).unwrap();
    assert_eq!(got, BTreeMap::from([(w(a3, "L1+2L2"), 1), (w(a3, "L2+L3"), 1)]));
    let a2 = G0::a(2);
    let got = decompose_tensor_type_a(a2, &w(a2, "L1"), &w(a2, "L1")).unwrap();
    assert_eq!(got, BTreeMap::from([(w(a2, "2L1"), 1), (w(a2, "L2"), 1)]));
    let got = decompose_tensor_type_a(a3, &w(a3, "L1+L2"), &Weight::zero(3)).unwrap();
    assert_eq!(got, BTreeMap::from([(w(a3, "L1+L2"), 1)]));
    assert!(decompose_tensor_type_a(G0::c(2), &w(G0::c(2), "L1"), &w(G0::c(2), "L1")).is_err());
    // the socle of V(2Λ_1) ⊗ V(2Λ_2) carries the top two summands
    let got = decompose_tensor_type_a(a3, &w(a3, "2L1"), &w(a3, "2L2")).unwrap();
    assert_eq!(got.len(), 3);
    assert_eq!(dim(a3, "2L1+2L2") + dim(a3, "L1+L2+L3"), 190.into());
}

#[test]
fn prime_socle_example() {
    let rep = prime_socle_check().unwrap();
    assert_eq!(rep.headline, vec![4, 6, 10, 20, 24, 45, 60, 60, 80, 190]);
    assert_eq!(rep.socle_dim, 190);
    assert!(rep.prime);
    assert_eq!(rep.splits.len(), 7);
    let find = |m: &str| rep.entries.iter().find(|e| e.monomial == m).unwrap().clone();
    assert_eq!(find("Y1,-1 Y2,0 Y2,2").dim, 80);
    assert_eq!(find("Y1,-1 Y2,0 Y2,2").via, "simple tensor product");
    assert_eq!(find("Y1,-3 Y2,0").dim, 20);
    assert_eq!(find("Y1,-1 Y2,2").dim, 20);
    assert_eq!(find("Y2,0 Y2,2").dim, 20);
    assert_eq!(find("Y1,-3 Y2,2").dim, 24);
    assert_eq!(find("Y1,-1 Y2,0").dim, 24);
    assert_eq!(find("Y1,-3 Y1,-1 Y2,2").dim, 45);
    assert_eq!(find("Y1,-3 Y2,0 Y2,2").dim, 60);
    assert_eq!(find("Y1,-3 Y1,-1 Y2,0").dim, 60);
    assert!(rep.splits.iter().all(|s| s.2 != 190));
}

#[test]
fn monotonicity_examples() {
    let a2 = G0::a(2);
    let r = hom_dim_monotonicity(a2, KrProduct::FixedNode(1), &[2], &[1, 1], &w(a2, "L2")).unwrap();
    assert_eq!(r, (0, 1, true));
    let r = hom_dim_monotonicity(a2, KrProduct::FixedNode(1), &[2, 1], &[2, 1], &w(a2, "L1+L2")).unwrap();
    assert_eq!((r.0, r.2), (r.1, true));
    assert!(hom_dim_monotonicity(a2, KrProduct::FixedNode(1), &[1, 1], &[2], &w(a2, "L2")).is_err());
    assert!(hom_dim_monotonicity(G0::b(2), KrProduct::FixedNode(1), &[2], &[1, 1], &w(G0::b(2), "L2")).is_err());
}

#[test]
fn monotonicity_sweep_rank_three() {
    let a3 = G0::a(3);
    for kind in [KrProduct::FixedNode(1), KrProduct::FixedNode(2), KrProduct::FixedMult(1), KrProduct::FixedMult(2)] {
        let rep = monotonicity_sweep(a3, kind, 3).unwrap();
        assert!(rep.pairs > 0);
        assert!(rep.failures.is_empty(), "{kind:?}: {:?}", rep.failures);
    }
}

#[test]
fn reverse_dominance_is_a_partial_order_on_small_k() {
    for k in 1..=6 {
        let ps = partitions(k);
        for a in &ps {
            assert!(reverse_dominance_leq(a, a));
            for b in &ps {
                if a != b && reverse_dominance_leq(a, b) {
                    assert!(!reverse_dominance_leq(b, a), "{a:?} {b:?}");
                }
            }
        }
    }
}

fn a_case() -> impl Strategy<Value = (G0, Weight, Weight)> {
    (2usize..=3).prop_flat_map(|r| {
        let wt = prop::collection::vec(0i64..=2, r).prop_map(Weight);
        (Just(G0::a(r)), wt.clone(), wt)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dimensions_multiply_over_decompositions((g0, lam, mu) in a_case()) {
        let dec = decompose_tensor(g0, &lam, &mu).unwrap();
        let total: BigInt = dec.iter().map(|(nu, &c)| weyl_dim(g0, nu).unwrap() * BigInt::from(c)).sum();
        prop_assert_eq!(total, weyl_dim(g0, &lam).unwrap() * weyl_dim(g0, &mu).unwrap());
    }
}
