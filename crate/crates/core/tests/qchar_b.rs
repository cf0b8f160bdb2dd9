use krdenom::qchar_b::*;
use krdenom::QPoint;

fn y(i: usize, a: QPoint, e: i64) -> YMonomial {
    YMonomial::y(i, a, e)
}

/// `A_{i,b}` for `B_n^{(1)}` with `q_i = qs^2` for `i < n` and `q_n = qs`.
fn a_root(n: usize, i: usize, b: QPoint) -> YMonomial {
    let qi = if i < n { 2 } else { 1 };
    let mut m = y(i, b.mul(QPoint::qs(-qi)), 1).mul(&y(i, b.mul(QPoint::qs(qi)), 1));
    for j in [i.wrapping_sub(1), i + 1] {
        if j == 0 || j > n {
            continue;
        }
        if i == n - 1 && j == n {
            m = m.mul(&y(n, b.mul(QPoint::qs(-1)), -1)).mul(&y(n, b.mul(QPoint::qs(1)), -1));
        } else {
            m = m.mul(&y(j, b, -1));
        }
    }
    m
}

#[test]
fn box_weight_table() {
    let a = QPoint::one();
    assert_eq!(letter_weight(3, 2, a).unwrap(), y(1, QPoint::qs(4), -1).mul(&y(2, QPoint::qs(2), 1)));
    assert_eq!(letter_weight(3, 0, a).unwrap(), y(3, QPoint::qs(7), -1).mul(&y(3, QPoint::qs(3), 1)));
    assert_eq!(letter_weight(3, 3, a).unwrap(), y(2, QPoint::qs(6), -1).mul(&y(3, QPoint::qs(3), 1)).mul(&y(3, QPoint::qs(5), 1)));
    assert_eq!(letter_weight(3, -3, a).unwrap(), y(2, QPoint::qs(4), 1).mul(&y(3, QPoint::qs(5), -1)).mul(&y(3, QPoint::qs(7), -1)));
    assert_eq!(letter_weight(3, -1, a).unwrap(), y(1, QPoint::qs(10), -1));
}

#[test]
fn natural_column_has_2n_plus_1_monomials() {
    for n in 2..=4 {
        let a = QPoint::mq(2);
        let ch = qchar_rectangle(n, 1, 1, a).unwrap();
        assert_eq!(ch.values().sum::<usize>(), 2 * n + 1);
        assert_eq!(dominant_monomials(&ch), vec![(y(1, a, 1), 1)]);
    }
}

#[test]
fn consecutive_letters_differ_by_a_root() {
    for n in 2..=4 {
        let word: Vec<i8> = (1..=n as i8).chain([0]).chain((1..=n as i8).rev().map(|i| -i)).collect();
        for w in word.windows(2) {
            let lo = letter_weight(n, w[0], QPoint::one()).unwrap();
            let hi = letter_weight(n, w[1], QPoint::one()).unwrap();
            let ratio = lo.mul(&hi_inv(&hi));
            let found = (1..=n).any(|i| (-20..=20).any(|e| ratio == a_root(n, i, QPoint::qs(e))));
            assert!(found, "B{n}: {} -> {}", w[0], w[1]);
        }
    }
}

fn hi_inv(m: &YMonomial) -> YMonomial {
    m.factors().fold(YMonomial::one(), |acc, (i, a, e)| acc.mul(&y(i, a, -e)))
}

#[test]
fn column_of_height_two_in_b3() {
    let ch = qchar_rectangle(3, 2, 1, QPoint::one()).unwrap();
    assert_eq!(ch.values().sum::<usize>(), 22);
    let top = top_monomial(3, 2, 1, QPoint::one()).unwrap();
    assert_eq!(top, y(2, QPoint::one(), 1));
}

#[test]
fn rectangles_have_one_dominant_monomial() {
    for n in 2..=3 {
        for rows in 1..n {
            for cols in 1..=2 {
                let a = QPoint::qs(3);
                let ch = qchar_rectangle(n, rows, cols, a).unwrap();
                let dom = dominant_monomials(&ch);
                assert_eq!(dom.len(), 1, "B{n} {rows}x{cols}: {dom:?}");
                assert_eq!(dom[0], (top_monomial(n, rows, cols, a).unwrap(), 1));
                let string: YMonomial = (0..cols as i64).map(|j| y(rows, a.mul(QPoint::qs(4 * j - 2 * (cols as i64 - 1))), 1)).fold(YMonomial::one(), |x, m| x.mul(&m));
                assert_eq!(dom[0].0, string);
            }
        }
    }
}

#[test]
fn printed_row_shift_breaks_the_top_column() {
    // with a' = a qs^(-1 - 2M + 4j + K - 2r) the column (1, 2) does not telescope
    let printed = |r: i64| QPoint::qs(-1 - 2 + 4 + 2 - 2 * r);
    let m = letter_weight(3, 1, printed(1)).unwrap().mul(&letter_weight(3, 2, printed(2)).unwrap());
    assert!(!m.is_dominant());
    assert!(top_monomial(3, 2, 1, QPoint::one()).unwrap().is_dominant());
}

#[test]
fn dorey_head_appears_with_signed_roots() {
    // V(1)_{(-q)^-1} ⊗ V(1)_{-q} has head V(2)_1 in B3
    let n = 3;
    let p = product(&[kr_qchar(n, 1, 1, QPoint::mq(-1)).unwrap(), kr_qchar(n, 1, 1, QPoint::mq(1)).unwrap()]);
    let head = kr_top(n, 2, 1, QPoint::one()).unwrap();
    assert_eq!(p.get(&head), Some(&1));
}

#[test]
fn folded_uniqueness_b3() {
    for m in 1..=2 {
        let rep = folded_uniqueness(3, 4, 1, m).unwrap();
        assert_eq!(rep.counts, vec![1, 1, 1], "m={m}");
        assert!(rep.holds());
    }
}

#[test]
fn folded_uniqueness_b4() {
    for (k, l) in [(5, 1), (5, 2), (6, 1)] {
        let rep = folded_uniqueness(4, k, l, 1).unwrap();
        assert!(rep.holds(), "k={k} l={l}: {:?}", rep.counts);
    }
    assert!(folded_uniqueness(3, 3, 1, 1).is_err());
    assert!(folded_uniqueness(4, 6, 2, 1).is_err());
}

#[test]
fn empty_filter() {
    let ch = qchar_rectangle(2, 1, 1, QPoint::one()).unwrap();
    let none: QChar = ch.into_iter().filter(|(m, _)| !m.is_dominant() && m.is_dominant()).collect();
    assert!(dominant_monomials(&none).is_empty());
}

#[test]
fn fusion_top_appears_in_fundamental_string() {
    let n = 3;
    for k in [1, 2, 4, 5] {
        let c = QPoint::mq(1);
        let p = product(&[kr_qchar(n, k, 1, c.mul(QPoint::mq(-1))).unwrap(), kr_qchar(n, k, 1, c.mul(QPoint::mq(1))).unwrap()]);
        let top = kr_top(n, k, 2, c).unwrap();
        assert_eq!(p.get(&top), Some(&1), "k={k}");
        let q2 = kr_qchar(n, k, 2, c).unwrap();
        for (mono, mult) in &q2 {
            assert!(p.get(mono).copied().unwrap_or(0) >= *mult, "k={k}: {mono}");
        }
    }
}
