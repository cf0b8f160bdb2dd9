//! Denominator formulas `d_{k,l}(z)` between fundamental modules and
//! `d_{l^p,k^m}(z)` between KR modules, with the type C ambiguity.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::qfield::{rat, FactoredLaurent, QPoint, Style};
use crate::root_data::{AffineType, Kind};

/// A denominator whose certain roots are known, plus roots whose
/// multiplicity may be one higher than recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenomPoly {
    pub certain: FactoredLaurent,
    pub ambiguous: Vec<QPoint>,
}

impl DenomPoly {
    pub fn exact(f: FactoredLaurent) -> Self {
        DenomPoly { certain: f, ambiguous: Vec::new() }
    }

    pub fn is_exact(&self) -> bool {
        self.ambiguous.is_empty()
    }

    /// The polynomial with every ambiguous bonus set to one.
    pub fn upper(&self) -> FactoredLaurent {
        let mut f = self.certain.clone();
        for r in &self.ambiguous {
            f.add_root(*r, 1);
        }
        f
    }

    pub fn lower(&self) -> FactoredLaurent {
        self.certain.clone()
    }

    /// `(lo, hi)` order of zero at `x`.
    pub fn order_range(&self, x: QPoint) -> (i64, i64) {
        let lo = self.certain.zero_order_at(x);
        let extra = self.ambiguous.iter().filter(|r| **r == x).count() as i64;
        (lo, lo + extra)
    }

    pub fn exact_or_err(&self) -> Result<FactoredLaurent> {
        if self.is_exact() {
            Ok(self.certain.clone())
        } else {
            Err(Error::Ambiguous(format!(
                "unresolved roots {}",
                self.ambiguous.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
            )))
        }
    }

    pub fn display(&self, style: Style) -> String {
        let mut s = self.certain.display(style);
        if !self.ambiguous.is_empty() {
            let amb: Vec<String> =
                self.ambiguous.iter().map(|r| format!("{}^e", crate::qfield::fmt_factor(*r, style))).collect();
            s.push_str(" * [");
            s.push_str(&amb.join(""));
            s.push_str("], e in {0,1}");
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "certain": self.certain.to_json(),
            "ambiguous": self.ambiguous,
        })
    }
}

/// `W^{(node)}_{mult}` at spectral parameter `param`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KRModule {
    pub ty: AffineType,
    pub node: usize,
    pub mult: usize,
    pub param: QPoint,
}

impl KRModule {
    pub fn new(ty: AffineType, node: usize, mult: usize, param: QPoint) -> Result<Self> {
        ty.check_node(node)?;
        if mult == 0 {
            return Err(Error::Precondition("multiplicity must be at least 1".into()));
        }
        Ok(KRModule { ty, node, mult, param })
    }

    pub fn fundamental(ty: AffineType, node: usize, param: QPoint) -> Result<Self> {
        KRModule::new(ty, node, 1, param)
    }

    pub fn shifted(&self, c: QPoint) -> KRModule {
        KRModule { param: self.param.mul(c), ..*self }
    }

    /// Parameter up to the identification `x ~ y` iff `x^{m_k} = y^{m_k}`.
    pub fn canonical_param(&self) -> QPoint {
        self.param.canonical_mod(self.ty.m_ident(self.node))
    }

    pub fn same_module(&self, o: &KRModule) -> bool {
        self.ty == o.ty && self.node == o.node && self.mult == o.mult && self.canonical_param() == o.canonical_param()
    }

    /// Parses `k^m@point` (or `k@point`, `k^m` at parameter 1).
    pub fn parse(ty: AffineType, s: &str) -> Result<Self> {
        let (km, pt) = match s.split_once('@') {
            Some((a, b)) => (a.trim(), b.trim().parse::<QPoint>()?),
            None => (s.trim(), QPoint::one()),
        };
        let (k, m) = parse_node_mult(km)?;
        KRModule::new(ty, k, m, pt)
    }
}

impl serde::Serialize for KRModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("KRModule", 4)?;
        st.serialize_field("type", &self.ty.to_string())?;
        st.serialize_field("node", &self.node)?;
        st.serialize_field("mult", &self.mult)?;
        st.serialize_field("param", &self.param)?;
        st.end()
    }
}

impl fmt::Display for KRModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({})^{}@{}", self.node, self.mult, self.param.display(self.ty.style()))
    }
}

/// `k^m` or `k`.
pub fn parse_node_mult(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("expected k^m, got '{}'", s));
    let (k, m) = match s.split_once('^') {
        Some((k, m)) => (k, m),
        None => (s, "1"),
    };
    let k = usize::from_str(k.trim()).map_err(|_| bad())?;
    let m = usize::from_str(m.trim()).map_err(|_| bad())?;
    Ok((k, m))
}

fn mq(a: i64) -> QPoint {
    QPoint::mq(a)
}

/// `(-q^2)^a`
fn mq2(a: i64) -> QPoint {
    QPoint::new(rat(a, 2), rat(2 * a, 1))
}

fn imin(xs: &[i64]) -> i64 {
    xs.iter().copied().min().unwrap_or(0)
}

/// `A_{nn-1}^{(1)}` KR denominator, valid for any `nn >= 2`.
fn a_kr(nn: i64, k: i64, m: i64, l: i64, p: i64) -> FactoredLaurent {
    let mut f = FactoredLaurent::one();
    for s in 1..=imin(&[k, l, nn - k, nn - l]) {
        for t in 0..m.min(p) {
            f.add_root(mq((k - l).abs() + (p - m).abs() + 2 * (s + t)), 1);
        }
    }
    f
}

/// `D_nn^{(1)}` KR denominator in `(-q)`-powers; `nn = 3` is allowed for
/// use through `D_3^{(2)}`.
fn d_kr(nn: i64, k: i64, m: i64, l: i64, p: i64) -> FactoredLaurent {
    let (k, m, l, p) = if k > l { (l, p, k, m) } else { (k, m, l, p) };
    let d = (p - m).abs();
    let mut f = FactoredLaurent::one();
    for t in 0..m.min(p) {
        if l <= nn - 2 {
            for s in 1..=k.min(l) {
                f.add_root(mq((k - l).abs() + d + 2 * (s + t)), 1);
                f.add_root(mq(2 * nn - k - l + d - 2 + 2 * (s + t)), 1);
            }
        } else if k <= nn - 2 {
            for s in 1..=k {
                f.add_root(mq(nn - k - 1 + d + 2 * (s + t)), 1);
            }
        } else if k != l {
            for s in 1..=(nn - 1) / 2 {
                f.add_root(mq(4 * s + 2 * t + d), 1);
            }
        } else {
            for s in 1..=nn / 2 {
                f.add_root(mq(4 * s + 2 * t - 2 + d), 1);
            }
        }
    }
    f
}

/// `(-q)^a -> (-q^2)^a`
fn double_q(f: &FactoredLaurent) -> FactoredLaurent {
    let mut g = FactoredLaurent::one();
    for (r, m) in f.roots() {
        g.add_root(QPoint::new(r.phase(), r.qexp() * 2), m);
    }
    g
}

fn check_nodes(t: AffineType, k: usize, l: usize) -> Result<()> {
    t.check_node(k)?;
    t.check_node(l)
}

/// Denominator between fundamental modules `V(w_k)` and `V(w_l)`.
pub fn denom_fundamental(t: AffineType, k: usize, l: usize) -> Result<DenomPoly> {
    check_nodes(t, k, l)?;
    let n = t.n as i64;
    let (k, l) = (k.min(l) as i64, k.max(l) as i64);
    let mut f = FactoredLaurent::one();
    match t.kind {
        Kind::A1 => {
            for s in 1..=imin(&[k, l, n - k, n - l]) {
                f.add_root(mq(2 * s + (k - l).abs()), 1);
            }
        }
        Kind::B1 => {
            if l < n {
                for s in 1..=k {
                    f.add_root(mq(l - k + 2 * s), 1);
                    f.add_root(mq(2 * n - k - l - 1 + 2 * s).neg(), 1);
                }
            } else if k < n {
                for s in 1..=k {
                    f.add_root(QPoint::sign(n + k).mul(QPoint::qs(2 * n - 2 * k - 1 + 4 * s)), 1);
                }
            } else {
                for s in 1..=n {
                    f.add_root(QPoint::qs(4 * s - 2), 1);
                }
            }
        }
        Kind::C1 => {
            for s in 1..=imin(&[k, l, n - k, n - l]) {
                f.add_root(QPoint::mqs(l - k + 2 * s), 1);
            }
            for s in 1..=k {
                f.add_root(QPoint::mqs(2 * n + 2 - k - l + 2 * s), 1);
            }
        }
        Kind::D1 => {
            if l <= n - 2 {
                for s in 1..=k {
                    f.add_root(mq(l - k + 2 * s), 1);
                    f.add_root(mq(2 * n - 2 - k - l + 2 * s), 1);
                }
            } else if k <= n - 2 {
                for s in 1..=k {
                    f.add_root(mq(n - k - 1 + 2 * s), 1);
                }
            } else if k != l {
                for s in 1..=(n - 1) / 2 {
                    f.add_root(mq(4 * s), 1);
                }
            } else {
                for s in 1..=n / 2 {
                    f.add_root(mq(4 * s - 2), 1);
                }
            }
        }
        Kind::A2Odd => {
            for s in 1..=k {
                f.add_root(mq(l - k + 2 * s), 1);
                f.add_root(mq(2 * n - k - l + 2 * s).neg(), 1);
            }
        }
        Kind::A2Even => {
            for s in 1..=k {
                f.add_root(mq(l - k + 2 * s), 1);
                f.add_root(mq(2 * n + 1 - k - l + 2 * s), 1);
            }
        }
        Kind::D2 => {
            let mut w = FactoredLaurent::one();
            if l < n {
                for s in 1..=k {
                    w.add_root(mq2(l - k + 2 * s), 1);
                    w.add_root(mq2(2 * n - k - l + 2 * s), 1);
                }
                f = w.compose_power(2);
            } else if k < n {
                for s in 1..=k {
                    w.add_root(mq2(n - k + 2 * s).neg(), 1);
                }
                f = w.compose_power(2);
            } else {
                for s in 1..=n {
                    f.add_root(mq2(s).neg(), 1);
                }
            }
        }
        Kind::D3 => {
            let w = QPoint::omega();
            match (k, l) {
                (1, 1) => {
                    f.add_root(QPoint::qi(2), 1);
                    f.add_root(QPoint::qi(6), 1);
                    f.add_root(w.mul(QPoint::qi(4)), 1);
                    f.add_root(w.pow(2).mul(QPoint::qi(4)), 1);
                }
                (1, 2) => {
                    let mut c = FactoredLaurent::one();
                    c.add_root(QPoint::qi(9).neg(), 1);
                    c.add_root(QPoint::qi(15).neg(), 1);
                    f = c.compose_power(3);
                }
                _ => {
                    let mut c = FactoredLaurent::one();
                    c.add_root(QPoint::qi(6), 1);
                    c.add_root(QPoint::qi(12), 2);
                    c.add_root(QPoint::qi(18), 1);
                    f = c.compose_power(3);
                }
            }
        }
        Kind::G1 => {
            let e: &[i64] = match (k, l) {
                (1, 1) => &[6, 8, 10, 12],
                (1, 2) => &[-7, -11],
                _ => &[2, 8, 12],
            };
            for &a in e {
                let r = QPoint::qt(a.abs());
                f.add_root(if a < 0 { r.neg() } else { r }, 1);
            }
        }
    }
    Ok(DenomPoly::exact(f))
}

/// Whether `d_{l^p,k^m}` falls in the type C regime where only the zero set
/// is determined.
pub fn in_c_ambiguity_regime(t: AffineType, k: usize, m: usize, l: usize, p: usize) -> bool {
    t.kind == Kind::C1 && k == l && k >= 2 && k < t.n && m % 2 == 1 && p % 2 == 1 && m.min(p) >= 3
}

/// Generic shape: `prod_{t < min(m,p)} f(c^{-|p-m|-2t} z)`.
fn generic(f: &FactoredLaurent, c: QPoint, m: i64, p: i64) -> FactoredLaurent {
    let mut out = FactoredLaurent::one();
    for t in 0..m.min(p) {
        out = out.mul(&f.scale_roots(c.pow((p - m).abs() + 2 * t)));
    }
    out
}

/// Denominator `d_{k^m,l^p}(z)` between KR modules. With `assume_conjecture`
/// the type C odd-odd case uses the conjectured closed form.
pub fn denom_kr(t: AffineType, k: usize, m: usize, l: usize, p: usize, assume_conjecture: bool) -> Result<DenomPoly> {
    check_nodes(t, k, l)?;
    if m == 0 || p == 0 {
        return Err(Error::Precondition("multiplicities must be at least 1".into()));
    }
    if m == 1 && p == 1 {
        return denom_fundamental(t, k, l);
    }
    if t.kind == Kind::G1 {
        return Err(Error::Unsupported("KR denominators for G2~1".into()));
    }
    if in_c_ambiguity_regime(t, k, m, l, p) && !assume_conjecture {
        return Ok(c_ambiguous(t.n as i64, k as i64, m.max(p) as i64, m.min(p) as i64));
    }
    let n = t.n as i64;
    // order so that the second node is the larger one
    let (k, m, l, p) = if k <= l { (k as i64, m as i64, l as i64, p as i64) } else { (l as i64, p as i64, k as i64, m as i64) };
    let d = (p - m).abs();
    let fund = || denom_fundamental(t, k as usize, l as usize).map(|x| x.certain);
    let f = match t.kind {
        Kind::A1 => a_kr(n, k, m, l, p),
        Kind::D1 => d_kr(n, k, m, l, p),
        Kind::D3 => generic(&fund()?, QPoint::mq(1), m, p),
        Kind::B1 => {
            if l < n {
                generic(&fund()?, QPoint::mq(1), m, p)
            } else if k == n {
                generic(&fund()?, QPoint::mqs(1), m, p)
            } else {
                // k < n with multiplicity m, spin node with multiplicity p
                let mut f = FactoredLaurent::one();
                for tt in 0..(2 * m).min(p) {
                    for s in 1..=k {
                        let e = 2 * n - 2 * k - 2 + (2 * m - p).abs() + 4 * s + 2 * tt;
                        f.add_root(QPoint::sign(n + k + m + p).mul(QPoint::qs(e)), 1);
                    }
                }
                f
            }
        }
        Kind::C1 => {
            let mut f = FactoredLaurent::one();
            if l < n {
                for tt in 0..m.min(p) {
                    for s in 1..=k {
                        f.add_root(QPoint::mqs(l - k + d + 2 * s + 2 * tt), 1);
                        f.add_root(QPoint::mqs(2 * n + 2 - k - l + d + 2 * s + 2 * tt), 1);
                    }
                }
            } else if k < n {
                for tt in 0..m.min(2 * p) {
                    for s in 1..=k {
                        let e = n + 1 - k + (2 * p - m).abs() + 2 * s + 2 * tt;
                        f.add_root(QPoint::sign(n + m + k + p).mul(QPoint::qs(e)), 1);
                    }
                }
            } else {
                for tt in 0..m.min(p) {
                    for s in 1..=n {
                        let e = 2 + 2 * d + 2 * s + 4 * tt;
                        f.add_root(QPoint::sign(m + p).mul(QPoint::qs(e)), 1);
                    }
                }
            }
            f
        }
        Kind::A2Odd => a_kr(2 * n, k, m, l, p).mul(&a_kr(2 * n, k, m, 2 * n - l, p).negate_var()),
        Kind::A2Even => a_kr(2 * n + 1, k, m, l, p).mul(&a_kr(2 * n + 1, k, m, 2 * n + 1 - l, p)),
        Kind::D2 => {
            if l < n {
                double_q(&d_kr(n + 1, k, m, l, p)).compose_power(2)
            } else if k < n {
                // k carries multiplicity m
                let mut w = FactoredLaurent::one();
                for tt in 0..m.min(p) {
                    for s in 1..=k {
                        let r = QPoint::sign(n - k + m).mul(QPoint::qi(2 * (n - k + d + 2 * s + 2 * tt)));
                        w.add_root(r, 1);
                    }
                }
                w.compose_power(2)
            } else {
                generic(&fund()?, QPoint::mq(1), m, p)
            }
        }
        Kind::G1 => unreachable!(),
    };
    Ok(DenomPoly::exact(f))
}

/// Type C, `d_{k^big, k^small}` with both multiplicities odd: certain part
/// and the roots carrying an undetermined bonus.
fn c_ambiguous(n: i64, k: i64, big: i64, small: i64) -> DenomPoly {
    let d = big - small;
    let mut f = FactoredLaurent::one();
    let mut amb = Vec::new();
    for t in 0..small {
        for s in 1..k {
            f.add_root(QPoint::mqs(d + 2 * s + 2 * t), 1);
            f.add_root(QPoint::mqs(2 * n + 2 - 2 * k + d + 2 * s + 2 * t), 1);
        }
        f.add_root(QPoint::mqs(2 * n + 2 + d + 2 * t), 1);
        amb.push(QPoint::mqs(2 * k + d + 2 * t));
    }
    amb.sort();
    DenomPoly { certain: f, ambiguous: amb }
}

/// Type C tables with roots written as powers of `-qs`.
pub mod alt {
    use super::*;

    /// Type C `d_{l^p, n^m}` with every root written as `(-qs)^e`.
    pub fn c_spin_mixed_table(n: i64, l: i64, p: i64, m: i64) -> FactoredLaurent {
        let mut f = FactoredLaurent::one();
        for t in 0..p.min(2 * m) {
            for s in 1..=l {
                f.add_root(QPoint::mqs(n + 1 - l + (2 * m - p).abs() + 2 * s + 2 * t), 1);
            }
        }
        f
    }

    /// Type C `d_{n^p, n^m}` with every root written as `(-qs)^e`.
    pub fn c_spin_spin_table(n: i64, p: i64, m: i64) -> FactoredLaurent {
        let mut f = FactoredLaurent::one();
        for t in 0..p.min(m) {
            for s in 1..=n {
                f.add_root(QPoint::mqs(2 + (2 * m - 2 * p).abs() + 2 * s + 4 * t), 1);
            }
        }
        f
    }
}
