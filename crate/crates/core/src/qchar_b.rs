//! Tableau q-characters of rectangles in type `B_n^{(1)}` and dominant
//! monomial counts in products of them.
//!
//! Entries are `1..n`, `0`, `-n..-1` (barred) in the order
//! `1 < .. < n < 0 < n̄ < .. < 1̄`. The box in row `r`, column `j` of a
//! `K x M` rectangle at `a` carries the spectral parameter
//! `a' = a * qs^(4j - 2M + 2K - 4r)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qfield::{QPoint, Style};

/// Laurent monomial in `Y_{i,a}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YMonomial(BTreeMap<(usize, QPoint), i64>);

impl YMonomial {
    pub fn one() -> Self {
        YMonomial::default()
    }

    pub fn y(i: usize, a: QPoint, e: i64) -> Self {
        let mut m = YMonomial::one();
        m.mul_y(i, a, e);
        m
    }

    fn mul_y(&mut self, i: usize, a: QPoint, e: i64) {
        if i == 0 || e == 0 {
            return;
        }
        let v = self.0.entry((i, a)).or_insert(0);
        *v += e;
        if *v == 0 {
            self.0.remove(&(i, a));
        }
    }

    pub fn mul(&self, o: &YMonomial) -> YMonomial {
        let mut out = self.clone();
        for (&(i, a), &e) in &o.0 {
            out.mul_y(i, a, e);
        }
        out
    }

    pub fn is_dominant(&self) -> bool {
        self.0.values().all(|&e| e >= 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, i: usize, a: QPoint) -> i64 {
        self.0.get(&(i, a)).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, QPoint, i64)> + '_ {
        self.0.iter().map(|(&(i, a), &e)| (i, a, e))
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(i, a, e)| {
                let base = format!("Y{i}[{}]", a.display(Style::QS));
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for YMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A q-character as a multiset of monomials.
pub type QChar = BTreeMap<YMonomial, usize>;

fn qs(a: QPoint, e: i64) -> QPoint {
    a.mul(QPoint::qs(e))
}

fn check_entry(n: usize, entry: i8) -> Result<()> {
    if entry.unsigned_abs() as usize > n {
        return Err(Error::Precondition(format!("entry {entry} outside the B{n} alphabet")));
    }
    Ok(())
}

/// Monomial of a single box with entry `entry` at shifted parameter `ap`.
pub fn letter_weight(n: usize, entry: i8, ap: QPoint) -> Result<YMonomial> {
    check_entry(n, entry)?;
    let n64 = n as i64;
    let mut m = YMonomial::one();
    match entry {
        0 => {
            m.mul_y(n, qs(ap, 2 * n64 + 1), -1);
            m.mul_y(n, qs(ap, 2 * n64 - 3), 1);
        }
        x if x as usize == n => {
            m.mul_y(n - 1, qs(ap, 2 * n64), -1);
            m.mul_y(n, qs(ap, 2 * n64 - 3), 1);
            m.mul_y(n, qs(ap, 2 * n64 - 1), 1);
        }
        x if x > 0 => {
            let i = x as i64;
            m.mul_y(x as usize - 1, qs(ap, 2 * i), -1);
            m.mul_y(x as usize, qs(ap, 2 * (i - 1)), 1);
        }
        x if (-x) as usize == n => {
            m.mul_y(n - 1, qs(ap, 2 * n64 - 2), 1);
            m.mul_y(n, qs(ap, 2 * n64 - 1), -1);
            m.mul_y(n, qs(ap, 2 * n64 + 1), -1);
        }
        x => {
            let i = -x as i64;
            m.mul_y(i as usize - 1, qs(ap, 2 * (2 * n64 - i - 1)), 1);
            m.mul_y(i as usize, qs(ap, 2 * (2 * n64 - i)), -1);
        }
    }
    Ok(m)
}

/// Exponent of `qs` in `a'` for the box in row `r`, column `j` (1-based).
pub fn box_shift(rows: usize, cols: usize, r: usize, j: usize) -> i64 {
    4 * j as i64 - 2 * cols as i64 + 2 * rows as i64 - 4 * r as i64
}

pub fn box_weight(n: usize, entry: i8, r: usize, j: usize, rows: usize, cols: usize, a: QPoint) -> Result<YMonomial> {
    if r == 0 || j == 0 || r > rows || j > cols {
        return Err(Error::Precondition(format!("box ({r},{j}) outside a {rows}x{cols} rectangle")));
    }
    letter_weight(n, entry, qs(a, box_shift(rows, cols, r, j)))
}

/// Position in `1 < .. < n < 0 < n̄ < .. < 1̄`.
fn order(n: usize, x: i8) -> usize {
    match x {
        0 => n,
        x if x > 0 => x as usize - 1,
        x => 2 * n + 1 - (-x) as usize,
    }
}

fn alphabet(n: usize) -> Vec<i8> {
    let n = n as i8;
    (1..=n).chain([0]).chain((1..=n).rev().map(|i| -i)).collect()
}

fn columns(n: usize, k: usize) -> Vec<Vec<i8>> {
    fn go(n: usize, k: usize, cur: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in alphabet(n) {
            let ok = match cur.last() {
                None => true,
                Some(&y) => order(n, y) < order(n, x) || (x == 0 && y == 0),
            };
            if ok {
                cur.push(x);
                go(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = vec![];
    go(n, k, &mut vec![], &mut out);
    out
}

fn rows_ok(n: usize, left: &[i8], right: &[i8]) -> bool {
    left.iter().zip(right).all(|(&x, &y)| if x == y { x != 0 } else { order(n, x) < order(n, y) })
}

/// Semistandard `rows x cols` tableaux, as lists of columns top to bottom.
pub fn tableaux(n: usize, rows: usize, cols: usize, budget: usize) -> Result<Vec<Vec<Vec<i8>>>> {
    if n < 2 || rows == 0 || rows > 2 * n - 1 || cols == 0 {
        return Err(Error::Precondition(format!("rectangle {rows}x{cols} for B{n}")));
    }
    let cs = columns(n, rows);
    let mut out: Vec<Vec<usize>> = cs.iter().enumerate().map(|(i, _)| vec![i]).collect();
    for _ in 1..cols {
        let mut next = vec![];
        for t in &out {
            let last = &cs[*t.last().unwrap()];
            for (i, c) in cs.iter().enumerate() {
                if rows_ok(n, last, c) {
                    if next.len() >= budget {
                        return Err(Error::Budget(budget));
                    }
                    let mut s = t.clone();
                    s.push(i);
                    next.push(s);
                }
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|t| t.into_iter().map(|i| cs[i].clone()).collect()).collect())
}

pub const DEFAULT_BUDGET: usize = 1_000_000;

pub fn tableau_monomial(n: usize, t: &[Vec<i8>], a: QPoint) -> Result<YMonomial> {
    let cols = t.len();
    let rows = t.first().map_or(0, |c| c.len());
    let mut m = YMonomial::one();
    for (j, c) in t.iter().enumerate() {
        for (r, &x) in c.iter().enumerate() {
            m = m.mul(&box_weight(n, x, r + 1, j + 1, rows, cols, a)?);
        }
    }
    Ok(m)
}

pub fn qchar_rectangle(n: usize, rows: usize, cols: usize, a: QPoint) -> Result<QChar> {
    let mut out = QChar::new();
    for t in tableaux(n, rows, cols, DEFAULT_BUDGET)? {
        *out.entry(tableau_monomial(n, &t, a)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// Monomial of the tableau whose row `r` is filled with `r`.
pub fn top_monomial(n: usize, rows: usize, cols: usize, a: QPoint) -> Result<YMonomial> {
    let t: Vec<Vec<i8>> = (0..cols).map(|_| (1..=rows as i8).collect()).collect();
    tableau_monomial(n, &t, a)
}

/// Rectangle height and parameter for the KR module `W^{(k^m)}_x`; nodes
/// `k > n` use height `2n - k`, and the rectangle sits at `(-1)^(K+m-1) x`.
pub fn kr_rectangle(n: usize, k: usize, m: usize, x: QPoint) -> Result<(usize, QPoint)> {
    if k == 0 || k == n || k >= 2 * n {
        return Err(Error::Precondition(format!("node {k} has no rectangle in B{n}")));
    }
    let rows = if k < n { k } else { 2 * n - k };
    Ok((rows, x.mul(QPoint::sign((rows + m) as i64 - 1))))
}

pub fn kr_qchar(n: usize, k: usize, m: usize, x: QPoint) -> Result<QChar> {
    if m == 0 {
        return Ok(QChar::from([(YMonomial::one(), 1)]));
    }
    let (rows, a) = kr_rectangle(n, k, m, x)?;
    qchar_rectangle(n, rows, m, a)
}

pub fn kr_top(n: usize, k: usize, m: usize, x: QPoint) -> Result<YMonomial> {
    let (rows, a) = kr_rectangle(n, k, m, x)?;
    top_monomial(n, rows, m, a)
}

pub fn product(chars: &[QChar]) -> QChar {
    let mut acc = QChar::from([(YMonomial::one(), 1)]);
    for c in chars {
        let mut next = QChar::new();
        for (x, &p) in &acc {
            for (y, &q) in c {
                *next.entry(x.mul(y)).or_insert(0) += p * q;
            }
        }
        acc = next;
    }
    acc
}

pub fn dominant_monomials(c: &QChar) -> Vec<(YMonomial, usize)> {
    c.iter().filter(|(m, _)| m.is_dominant()).map(|(m, &k)| (m.clone(), k)).collect()
}

/// A KR factor `W^{(node^mult)}_center`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BFactor {
    pub node: usize,
    pub mult: usize,
    #[serde(serialize_with = "ser_point")]
    pub center: QPoint,
}

fn ser_point<S: serde::Serializer>(p: &QPoint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.display(Style::MINUS_Q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub target: YMonomial,
    pub products: Vec<Vec<BFactor>>,
    pub counts: Vec<usize>,
}

impl UniquenessReport {
    pub fn holds(&self) -> bool {
        self.counts.iter().all(|&c| c == 1)
    }
}

/// The three products whose q-characters should each contain the dominant
/// monomial of `W^{((k+l)^m)}_{-1}` exactly once.
pub fn folded_products(n: usize, k: usize, l: usize, m: usize) -> Result<(Vec<Vec<BFactor>>, BFactor)> {
    if !(1 <= l && l < n && n < k && k < 2 * n - 1 && k + l < 2 * n && m >= 1) {
        return Err(Error::Precondition(format!("need 1 <= l < n < k < 2n-1, k+l <= 2n-1, m >= 1; got n={n} k={k} l={l} m={m}")));
    }
    let (ki, li, mi) = (k as i64, l as i64, m as i64);
    let f = |node: usize, mult: usize, center: QPoint| BFactor { node, mult, center };
    let products = vec![
        vec![f(l, m, QPoint::mq(1 - ki)), f(k, m, QPoint::mq(li).neg())],
        vec![f(k, m - 1, QPoint::mq(li - 1).neg()), f(l, m, QPoint::mq(1 - ki)), f(k, 1, QPoint::mq(mi + li - 1).neg())],
        vec![f(k, m - 1, QPoint::mq(li - 1).neg()), f(l, m - 1, QPoint::mq(-ki)), f(k + l, 1, QPoint::mq(mi - 1).neg())],
    ];
    Ok((products, f(k + l, m, QPoint::minus_one())))
}

pub fn folded_uniqueness(n: usize, k: usize, l: usize, m: usize) -> Result<UniquenessReport> {
    let (products, target) = folded_products(n, k, l, m)?;
    let top = kr_top(n, target.node, target.mult, target.center)?;
    let mut counts = vec![];
    for p in &products {
        let chars = p.iter().map(|b| kr_qchar(n, b.node, b.mult, b.center)).collect::<Result<Vec<_>>>()?;
        counts.push(product(&chars).get(&top).copied().unwrap_or(0));
    }
    Ok(UniquenessReport { target: top, products, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_letter_has_no_y0() {
        let m = letter_weight(3, 1, QPoint::one()).unwrap();
        assert_eq!(m, YMonomial::y(1, QPoint::one(), 1));
    }

    #[test]
    fn bad_entries() {
        assert!(letter_weight(3, 4, QPoint::one()).is_err());
        assert!(box_weight(3, 1, 2, 1, 1, 1, QPoint::one()).is_err());
    }
}
