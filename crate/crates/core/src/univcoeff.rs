//! Universal coefficients `a_{l^p,k^m}(z)` as phi-products over `p~ = p*^2`,
//! both from denominators and from the closed bracket formulas.

use crate::denominators::{denom_kr, KRModule};
use crate::error::{Error, Result};
use crate::qfield::{FactoredLaurent, PhiProduct, QPoint};
use crate::root_data::{AffineType, Kind};

/// `a_{l^p,k^m}(z)` built from the roots `x` of `d_{l^p,k^m}` and `y` of
/// `d_{(l*)^p,k^m}`:
/// `prod phi(p* y z) phi(p* ybar z) / prod phi(x z) phi(p~ xbar z)`.
pub fn univ_coeff_derived(t: AffineType, l: usize, p: usize, k: usize, m: usize, assume_conjecture: bool) -> Result<PhiProduct> {
    let ls = t.node_dual(l)?;
    let x = denom_kr(t, l, p, k, m, assume_conjecture)?.exact_or_err()?;
    let y = denom_kr(t, ls, p, k, m, assume_conjecture)?.exact_or_err()?;
    Ok(from_roots(t, &x, &y))
}

fn from_roots(t: AffineType, x: &FactoredLaurent, y: &FactoredLaurent) -> PhiProduct {
    let ps = t.p_star();
    let pt = t.p_tilde();
    let mut a = PhiProduct::one(pt);
    for (r, mult) in y.roots() {
        a.add(ps.mul(r), mult);
        a.add(ps.mul(r.bar()), mult);
    }
    for (r, mult) in x.roots() {
        a.add(r, -mult);
        a.add(pt.mul(r.bar()), -mult);
    }
    a
}

/// Accumulates bracket factors `phi(point z)^{+-1}`.
struct Brackets {
    a: PhiProduct,
}

impl Brackets {
    fn new(t: AffineType) -> Self {
        Brackets { a: PhiProduct::one(t.p_tilde()) }
    }
    fn num(&mut self, pt: QPoint) {
        self.a.add(pt, 1);
    }
    fn den(&mut self, pt: QPoint) {
        self.a.add(pt, -1);
    }
}

/// `[k]`: `(-q)^k` in types A, B, D and `(-qs)^k` in type C.
fn br(t: AffineType, k: i64) -> QPoint {
    if t.kind == Kind::C1 {
        QPoint::mqs(k)
    } else {
        QPoint::mq(k)
    }
}

/// `<k>` of type B: `-(-q)^k`.
fn pa(k: i64) -> QPoint {
    QPoint::mq(k).neg()
}

/// `_s[k]_(d)`: `(-1)^d qs^k`.
fn sbr(k: i64, d: i64) -> QPoint {
    QPoint::sign(d).mul(QPoint::qs(k))
}

/// Closed bracket formulas for untwisted types A, B, C, D.
pub fn univ_coeff_closed(t: AffineType, l: usize, p: usize, k: usize, m: usize) -> Result<PhiProduct> {
    t.check_node(l)?;
    t.check_node(k)?;
    if p == 0 || m == 0 {
        return Err(Error::Precondition("multiplicities must be at least 1".into()));
    }
    let n = t.n as i64;
    // spin/longer node second
    let (l, p, k, m) = if l <= k { (l as i64, p as i64, k as i64, m as i64) } else { (k as i64, m as i64, l as i64, p as i64) };
    let e = (m - p).abs();
    let mut b = Brackets::new(t);
    match t.kind {
        Kind::A1 => {
            let g = (n - k - l).abs();
            let dkl = (k - l).abs();
            for s in 1..=[k, l, n - k, n - l].into_iter().min().unwrap() {
                for tt in 0..p.min(m) {
                    let u = e + 2 * (s + tt);
                    b.num(br(t, n + g + u));
                    b.num(br(t, n - g - u));
                    b.den(br(t, dkl + u));
                    b.den(br(t, 2 * n - dkl - u));
                }
            }
        }
        Kind::B1 => {
            if k < n {
                let dkl = k - l;
                for s in 1..=l {
                    for tt in 0..p.min(m) {
                        let u = e + 2 * (s + tt);
                        b.num(br(t, k + l - u));
                        b.num(pa(2 * n - dkl - 1 - u));
                        b.den(br(t, dkl + u));
                        b.den(pa(2 * n + k + l - 1 - u));
                        b.num(pa(2 * n + dkl - 1 + u));
                        b.num(br(t, 4 * n - k - l - 2 + u));
                        b.den(pa(2 * n - k - l - 1 + u));
                        b.den(br(t, 4 * n - dkl - 2 - u));
                    }
                }
            } else if l < n {
                // l carries p, spin node carries m
                let d = m + n + l + p;
                let f = (2 * p - m).abs();
                for s in 1..=l {
                    for tt in 0..(2 * p).min(m) {
                        b.num(sbr(2 * n + 2 * l - f - 4 * s - 2 * tt, d));
                        b.num(sbr(6 * n - 2 * l - 4 + f + 4 * s + 2 * tt, d));
                        b.den(sbr(2 * n - 2 * l - 2 + f + 4 * s + 2 * tt, d));
                        b.den(sbr(6 * n - 2 + 2 * l - f - 4 * s - 2 * tt, d));
                    }
                }
            } else {
                for s in 1..=n {
                    for tt in 0..p.min(m) {
                        b.num(sbr(4 * n + 4 * s + 2 * tt - 4 + e, e));
                        b.num(sbr(4 * n - 4 * s - 2 * tt - e, e));
                        b.den(sbr(4 * s + 2 * tt - 2 + e, e));
                        b.den(sbr(8 * n - 2 - 4 * s - 2 * tt - e, e));
                    }
                }
            }
        }
        Kind::C1 => {
            if k < n {
                let dkl = k - l;
                for s in 1..=l {
                    for tt in 0..p.min(m) {
                        let u = e + 2 * s + 2 * tt;
                        b.num(br(t, k + l - u));
                        b.num(br(t, 4 * n + 4 - k - l + u));
                        b.den(br(t, dkl + u));
                        b.den(br(t, 4 * n + 4 - dkl - u));
                        b.num(br(t, 2 * n + 2 + dkl + u));
                        b.num(br(t, 2 * n + 2 - dkl - u));
                        b.den(br(t, 2 * n + 2 - k - l + u));
                        b.den(br(t, 2 * n + 2 + k + l - u));
                    }
                }
            } else if l < n {
                let d = m + n + l + p;
                let f = (2 * m - p).abs();
                for s in 1..=l {
                    for tt in 0..p.min(2 * m) {
                        b.num(sbr(n + 1 + l - f - 2 * s - 2 * tt, d));
                        b.num(sbr(3 * n + 3 - l + f + 2 * s + 2 * tt, d));
                        b.den(sbr(n + 1 - l + f + 2 * s + 2 * tt, d));
                        b.den(sbr(3 * n + 3 + l - f - 2 * s - 2 * tt, d));
                    }
                }
            } else {
                let f = 2 * e;
                for s in 1..=n {
                    for tt in 0..p.min(m) {
                        b.num(sbr(2 * n + 4 + f + 2 * s + 4 * tt, m + p));
                        b.num(sbr(2 * n - f - 2 * s - 4 * tt, m + p));
                        b.den(sbr(2 + f + 2 * s + 4 * tt, m + p));
                        b.den(sbr(4 * n + 2 - f - 2 * s - 4 * tt, m + p));
                    }
                }
            }
        }
        Kind::D1 => {
            if k < n - 1 {
                let dkl = k - l;
                for s in 1..=l {
                    for tt in 0..p.min(m) {
                        let u = e + 2 * (s + tt);
                        b.num(br(t, k + l - u));
                        b.num(br(t, 2 * n - 2 + dkl + u));
                        b.den(br(t, dkl + u));
                        b.den(br(t, 2 * n - 2 + k + l - u));
                        b.num(br(t, 2 * n - 2 - dkl - u));
                        b.num(br(t, 4 * n - k - l - 4 + u));
                        b.den(br(t, 2 * n - k - l - 2 + u));
                        b.den(br(t, 4 * n - 4 - dkl - u));
                    }
                }
            } else if l < n - 1 {
                for s in 1..=l {
                    for tt in 0..p.min(m) {
                        let u = e + 2 * (s + tt);
                        b.num(br(t, 3 * n - l - 3 + u));
                        b.num(br(t, n - 1 + l - u));
                        b.den(br(t, n - l - 1 + u));
                        b.den(br(t, 3 * n - 3 + l - u));
                    }
                }
            } else {
                // x from d_{k,l}; y from d_{k*,l}, which swaps the spin pair for n odd
                let x_same = k == l;
                let y_same = x_same == (n % 2 == 0);
                for tt in 0..p.min(m) {
                    if x_same {
                        for s in 1..=n / 2 {
                            b.den(br(t, 4 * s + 2 * tt - 2 + e));
                            b.den(br(t, 4 * n - 2 - 4 * s - 2 * tt - e));
                        }
                    } else {
                        for s in 1..=(n - 1) / 2 {
                            b.den(br(t, 4 * s + 2 * tt + e));
                            b.den(br(t, 4 * n - 4 * s - 2 * tt - e - 4));
                        }
                    }
                    if y_same {
                        for s in 1..=n / 2 {
                            b.num(br(t, 2 * n + 4 * s + 2 * tt - 4 + e));
                            b.num(br(t, 2 * n - 4 * s - 2 * tt - e));
                        }
                    } else {
                        for s in 1..=(n - 1) / 2 {
                            b.num(br(t, 2 * n + 4 * s + 2 * tt + e - 2));
                            b.num(br(t, 2 * n - 4 * s - 2 * tt - e - 2));
                        }
                    }
                }
            }
        }
        _ => return Err(Error::Unsupported(format!("closed universal coefficients for {}", t))),
    }
    Ok(b.a)
}

/// `(d_{M,N}, a_{M,N})` for KR modules with parameters, evaluated so that
/// `c_{M,N}(z) = d/a`.
pub fn renorm_coeff(mm: &KRModule, nn: &KRModule, assume_conjecture: bool) -> Result<(FactoredLaurent, PhiProduct)> {
    if mm.ty != nn.ty {
        return Err(Error::Precondition("modules of different types".into()));
    }
    let t = mm.ty;
    let d = denom_kr(t, mm.node, mm.mult, nn.node, nn.mult, assume_conjecture)?.exact_or_err()?;
    let a = univ_coeff_derived(t, mm.node, mm.mult, nn.node, nn.mult, assume_conjecture)?;
    // d_{M_x,N_y}(z) = d_{M,N}(z y/x)
    let w = nn.param.div(mm.param);
    Ok((d.scale_roots(w.inv()), a.scale_arg(w)))
}

/// `Deg(c_{M,N})`.
pub fn lambda_from_coeff(mm: &KRModule, nn: &KRModule, assume_conjecture: bool) -> Result<i64> {
    let (d, a) = renorm_coeff(mm, nn, assume_conjecture)?;
    Ok(d.to_phi_product(mm.ty.p_tilde()).div(&a).deg())
}

/// `Deg^inf(c_{M,N})`.
pub fn lambda_inf_from_coeff(mm: &KRModule, nn: &KRModule, assume_conjecture: bool) -> Result<i64> {
    let (d, a) = renorm_coeff(mm, nn, assume_conjecture)?;
    Ok(d.to_phi_product(mm.ty.p_tilde()).div(&a).deg_inf())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_fundamental_pair() {
        let t = AffineType::a(4);
        let a = univ_coeff_derived(t, 1, 1, 1, 1, false).unwrap();
        let c = univ_coeff_closed(t, 1, 1, 1, 1).unwrap();
        assert_eq!(a, c);
        // [0][2n] / ([2][2n-2])
        let mut want = PhiProduct::one(t.p_tilde());
        want.add(QPoint::mq(2), -1);
        want.add(QPoint::mq(6), -1);
        want.add(QPoint::mq(0), 1);
        want.add(QPoint::mq(8), 1);
        assert_eq!(a, want);
    }

    #[test]
    fn empty_denominator_gives_identity() {
        let t = AffineType::a(4);
        assert!(from_roots(t, &FactoredLaurent::one(), &FactoredLaurent::one()).is_one());
    }
}
