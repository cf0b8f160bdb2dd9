//! `d`, `Lambda` and `Lambda^inf` invariants between KR modules, dual shifts,
//! and the simplicity test for tensor products.

use std::fmt;
use std::ops::{Add, Neg};

use serde::Serialize;

use crate::denominators::{denom_kr, KRModule};
use crate::error::{Error, Result};
use num_traits::Signed;

use crate::qfield::rat;

/// Closed integer interval; exact when `lo == hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn exact(v: i64) -> Self {
        Interval { lo: v, hi: v }
    }
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
    pub fn value(&self) -> Option<i64> {
        self.is_exact().then_some(self.lo)
    }
    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval { lo: self.lo + o.lo, hi: self.hi + o.hi }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// `D^k M`: dualize the node `|k|` times and multiply the parameter by `p*^k`.
pub fn dual_shift(m: &KRModule, k: i64) -> KRModule {
    let t = m.ty;
    let node = if k.rem_euclid(2) == 1 { t.node_dual(m.node).expect("valid node") } else { m.node };
    KRModule { ty: t, node, mult: m.mult, param: m.param.mul(t.p_star().pow(k)) }
}

fn check_pair(m: &KRModule, n: &KRModule) -> Result<()> {
    if m.ty != n.ty {
        return Err(Error::Precondition(format!("modules over {} and {}", m.ty, n.ty)));
    }
    Ok(())
}

/// `d(M_x, N_y) = ord_{z=x/y} d_{M,N} + ord_{z=y/x} d_{N,M}`.
pub fn d_invariant(m: &KRModule, n: &KRModule, assume_conjecture: bool) -> Result<Interval> {
    check_pair(m, n)?;
    let t = m.ty;
    let dmn = denom_kr(t, m.node, m.mult, n.node, n.mult, assume_conjecture)?;
    let dnm = denom_kr(t, n.node, n.mult, m.node, m.mult, assume_conjecture)?;
    let w = m.param.div(n.param);
    let (a, b) = dmn.order_range(w);
    let (c, d) = dnm.order_range(w.inv());
    Ok(Interval { lo: a + c, hi: b + d })
}

/// Largest `k` with `d(M, D^{+-k} N)` possibly nonzero.
fn shift_window(m: &KRModule, n: &KRModule, assume_conjecture: bool) -> Result<i64> {
    let t = m.ty;
    let mut span = rat(0, 1);
    for node in [n.node, t.node_dual(n.node)?] {
        let d = denom_kr(t, m.node, m.mult, node, n.mult, assume_conjecture)?.upper();
        for (r, _) in d.roots() {
            span = span.max(r.qexp());
        }
    }
    let off = (m.param.qexp() - n.param.qexp()).abs();
    let step = t.p_star().qexp();
    Ok(((span + off) / step).ceil().to_integer() + 1)
}

fn alternating(m: &KRModule, n: &KRModule, assume_conjecture: bool, sign: impl Fn(i64) -> bool) -> Result<Interval> {
    check_pair(m, n)?;
    let w = shift_window(m, n, assume_conjecture)?;
    let mut acc = Interval::exact(0);
    for k in -w..=w {
        let d = d_invariant(m, &dual_shift(n, k), assume_conjecture)?;
        acc = if sign(k) { acc + -d } else { acc + d };
    }
    Ok(acc)
}

/// `Lambda(M,N) = sum_k (-1)^{k + [k<0]} d(M, D^k N)`.
pub fn lambda(m: &KRModule, n: &KRModule, assume_conjecture: bool) -> Result<Interval> {
    alternating(m, n, assume_conjecture, |k| (k + i64::from(k < 0)).rem_euclid(2) == 1)
}

/// `Lambda^inf(M,N) = sum_k (-1)^k d(M, D^k N)`.
pub fn lambda_inf(m: &KRModule, n: &KRModule, assume_conjecture: bool) -> Result<Interval> {
    alternating(m, n, assume_conjecture, |k| k.rem_euclid(2) == 1)
}

/// `d(M,N) = 0`; decided from the zero set even when multiplicities are ambiguous.
pub fn strongly_commute(m: &KRModule, n: &KRModule, assume_conjecture: bool) -> Result<bool> {
    let d = d_invariant(m, n, assume_conjecture)?;
    if d.hi == 0 {
        Ok(true)
    } else if d.lo > 0 {
        Ok(false)
    } else {
        Err(Error::Ambiguous(format!("d({m}, {n}) in {d}")))
    }
}

/// A tensor product of KR modules is simple iff the factors pairwise strongly commute.
pub fn is_simple_tensor(mods: &[KRModule], assume_conjecture: bool) -> Result<bool> {
    for (i, a) in mods.iter().enumerate() {
        for b in &mods[i + 1..] {
            if !strongly_commute(a, b, assume_conjecture)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::QPoint;
    use crate::root_data::AffineType;

    #[test]
    fn dual_shift_a3() {
        let t = AffineType::a(4);
        let m = KRModule::new(t, 1, 2, QPoint::one()).unwrap();
        let d = dual_shift(&m, 1);
        assert_eq!((d.node, d.param), (3, QPoint::mq(4)));
        assert_eq!(dual_shift(&m, 0), m);
        let d2 = dual_shift(&m, 2);
        assert_eq!((d2.node, d2.param), (1, QPoint::mq(8)));
    }

    #[test]
    fn d_values() {
        let a3 = AffineType::a(4);
        let m = KRModule::new(a3, 1, 2, QPoint::mq(-2)).unwrap();
        let n = KRModule::new(a3, 2, 2, QPoint::mq(1)).unwrap();
        assert_eq!(d_invariant(&m, &n, false).unwrap(), Interval::exact(1));
        assert!(!is_simple_tensor(&[m, n], false).unwrap());
        assert!(is_simple_tensor(&[m], false).unwrap());
        assert_eq!(d_invariant(&m, &m, false).unwrap(), Interval::exact(0));
        let a6 = AffineType::a(7);
        let m = KRModule::new(a6, 3, 3, QPoint::mq(-2)).unwrap();
        let n = KRModule::new(a6, 3, 3, QPoint::mq(2)).unwrap();
        assert_eq!(d_invariant(&m, &n, false).unwrap(), Interval::exact(2));
        let m = KRModule::new(a3, 1, 1, QPoint::one()).unwrap();
        let n = KRModule::new(a3, 3, 1, QPoint::mq(2)).unwrap();
        assert!(is_simple_tensor(&[m, n], false).unwrap());
    }

    #[test]
    fn interval_arithmetic() {
        let a = Interval { lo: 1, hi: 3 };
        assert_eq!(-a, Interval { lo: -3, hi: -1 });
        assert_eq!(a + Interval::exact(2), Interval { lo: 3, hi: 5 });
        assert_eq!(a.to_string(), "[1, 3]");
    }
}
