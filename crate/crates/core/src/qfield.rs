//! Spectral parameters `zeta * q^e`, factored Laurent polynomials over them,
//! and formal products of `phi(z) = prod_{s>=0} (1 - pt^s z)`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

fn int(n: i64) -> Q {
    Ratio::from_integer(n)
}

fn frac_part(x: Q) -> Q {
    x - x.floor()
}

/// `e^{2 pi i phase} * q^qexp`. Field order makes the derived `Ord` sort by
/// `qexp` first, which is what printers want.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoint {
    qexp: Q,
    phase: Q,
}

impl QPoint {
    pub fn new(phase: Q, qexp: Q) -> Self {
        QPoint { qexp, phase: frac_part(phase) }
    }

    pub fn one() -> Self {
        QPoint::new(Q::zero(), Q::zero())
    }

    pub fn minus_one() -> Self {
        QPoint::new(rat(1, 2), Q::zero())
    }

    pub fn i() -> Self {
        QPoint::new(rat(1, 4), Q::zero())
    }

    pub fn omega() -> Self {
        QPoint::new(rat(1, 3), Q::zero())
    }

    pub fn root_of_unity(phase: Q) -> Self {
        QPoint::new(phase, Q::zero())
    }

    /// `q^e`
    pub fn q(e: Q) -> Self {
        QPoint::new(Q::zero(), e)
    }

    pub fn qi(e: i64) -> Self {
        QPoint::q(int(e))
    }

    /// `(-q)^a`
    pub fn mq(a: i64) -> Self {
        QPoint::new(rat(a, 2), int(a))
    }

    /// `qs^a` with `qs^2 = q`
    pub fn qs(a: i64) -> Self {
        QPoint::new(Q::zero(), rat(a, 2))
    }

    /// `(-qs)^a`
    pub fn mqs(a: i64) -> Self {
        QPoint::new(rat(a, 2), rat(a, 2))
    }

    /// `qt^a` with `qt^3 = q`
    pub fn qt(a: i64) -> Self {
        QPoint::new(Q::zero(), rat(a, 3))
    }

    /// `(-qt)^a`
    pub fn mqt(a: i64) -> Self {
        QPoint::new(rat(a, 2), rat(a, 3))
    }

    /// `(-1)^a`
    pub fn sign(a: i64) -> Self {
        QPoint::new(rat(a, 2), Q::zero())
    }

    pub fn phase(&self) -> Q {
        self.phase
    }

    pub fn qexp(&self) -> Q {
        self.qexp
    }

    pub fn mul(self, o: QPoint) -> QPoint {
        QPoint::new(self.phase + o.phase, self.qexp + o.qexp)
    }

    pub fn inv(self) -> QPoint {
        QPoint::new(-self.phase, -self.qexp)
    }

    pub fn div(self, o: QPoint) -> QPoint {
        self.mul(o.inv())
    }

    pub fn pow(self, k: i64) -> QPoint {
        QPoint::new(self.phase * k, self.qexp * k)
    }

    pub fn neg(self) -> QPoint {
        self.mul(QPoint::minus_one())
    }

    /// `q -> q^{-1}`, phases fixed.
    pub fn bar(self) -> QPoint {
        QPoint::new(self.phase, -self.qexp)
    }

    pub fn is_one(&self) -> bool {
        self.phase.is_zero() && self.qexp.is_zero()
    }

    /// `Some(k)` when `self = base^k`.
    pub fn log_base(&self, base: QPoint) -> Option<i64> {
        if base.qexp.is_zero() {
            return None;
        }
        let k = self.qexp / base.qexp;
        if !k.is_integer() {
            return None;
        }
        let k = k.to_integer();
        if base.pow(k) == *self {
            Some(k)
        } else {
            None
        }
    }

    /// Representative of the coset `self * base^Z` with qexp in `[0, qexp(base))`.
    pub fn coset_rep(&self, base: QPoint) -> (QPoint, i64) {
        let k = (self.qexp / base.qexp).floor().to_integer();
        (self.mul(base.pow(-k)), k)
    }

    /// `self^m`: identification of spectral parameters in twisted types.
    pub fn canonical_mod(self, m: i64) -> QPoint {
        self.pow(m)
    }
}

impl fmt::Debug for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn phase_prefix(p: Q) -> String {
    if p.is_zero() {
        String::new()
    } else if p == rat(1, 2) {
        "-".into()
    } else if p == rat(1, 4) {
        "i*".into()
    } else if p == rat(3, 4) {
        "-i*".into()
    } else if p == rat(1, 3) {
        "w*".into()
    } else if p == rat(2, 3) {
        "w^2*".into()
    } else if p == rat(5, 6) {
        "-w*".into()
    } else if p == rat(1, 6) {
        "-w^2*".into()
    } else {
        format!("zeta({})*", p)
    }
}

fn fmt_exp(e: Q) -> String {
    if e.is_integer() {
        e.to_integer().to_string()
    } else {
        format!("({})", e)
    }
}

/// Printing preference: which `q`-root to write exponents in, and whether
/// to prefer `(-q)^a` over `+-q^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub den: i64,
    pub minus: bool,
}

impl Style {
    pub const MINUS_Q: Style = Style { den: 1, minus: true };
    pub const QS: Style = Style { den: 2, minus: false };
    pub const QT: Style = Style { den: 3, minus: false };
}

impl QPoint {
    pub fn display(&self, style: Style) -> String {
        let e = self.qexp;
        if e.is_zero() {
            return match phase_prefix(self.phase).as_str() {
                "" => "1".to_string(),
                "-" => "-1".to_string(),
                p => p.trim_end_matches('*').to_string(),
            };
        }
        let mut dens = vec![style.den];
        dens.extend([1, 2, 3, 6].into_iter().filter(|d| *d != style.den));
        for den in dens {
            let a = e * den;
            if !a.is_integer() {
                continue;
            }
            let a = a.to_integer();
            let sym = match den {
                1 => "q",
                2 => "qs",
                3 => "qt",
                _ => "q6",
            };
            let minus_ok = style.minus || den != style.den;
            if minus_ok && frac_part(rat(a, 2)) == self.phase && !(den != 1 && style.den == den) {
                return format!("(-{})^{}", sym, a);
            }
            return format!("{}{}^{}", phase_prefix(self.phase), sym, a);
        }
        format!("{}q^{}", phase_prefix(self.phase), fmt_exp(e))
    }

    fn default_style(&self) -> Style {
        if self.qexp.is_integer() {
            Style::MINUS_Q
        } else if (self.qexp * 2).is_integer() {
            Style::QS
        } else {
            Style::QT
        }
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(self.default_style()))
    }
}

#[derive(Serialize, Deserialize)]
struct QPointRepr {
    phase: String,
    qexp: String,
}

fn parse_q(s: &str) -> Result<Q> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| Error::Parse(format!("bad rational '{}'", s)))
}

impl Serialize for QPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPointRepr { phase: self.phase.to_string(), qexp: self.qexp.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = QPointRepr::deserialize(d)?;
        let phase = parse_q(&r.phase).map_err(serde::de::Error::custom)?;
        let qexp = parse_q(&r.qexp).map_err(serde::de::Error::custom)?;
        Ok(QPoint::new(phase, qexp))
    }
}

fn take_exponent(s: &str) -> Result<(Q, &str)> {
    let s = s.strip_prefix('^').ok_or_else(|| Error::Parse(format!("expected '^' in '{}'", s)))?;
    if let Some(rest) = s.strip_prefix('(') {
        let end = rest.find(')').ok_or_else(|| Error::Parse("unclosed exponent".into()))?;
        return Ok((parse_q(&rest[..end])?, &rest[end + 1..]));
    }
    let end = s
        .char_indices()
        .find(|&(i, c)| !(c.is_ascii_digit() || c == '/' || (i == 0 && c == '-')))
        .map(|(i, _)| i)
        .unwrap_or(s.len());
    Ok((parse_q(&s[..end])?, &s[end..]))
}

impl std::str::FromStr for QPoint {
    type Err = Error;

    /// Products of `-`, `i`, `w`, `(-1)`, `q^e`, `qs^e`, `qt^e`, `(-q)^e`,
    /// `(-qs)^e`, `(-qt)^e`, optionally separated by `*`.
    fn from_str(src: &str) -> Result<QPoint> {
        let cleaned: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut s = cleaned.as_str();
        if s.is_empty() {
            return Err(Error::Parse("empty spectral parameter".into()));
        }
        let mut acc = QPoint::one();
        while !s.is_empty() {
            if let Some(r) = s.strip_prefix('*') {
                s = r;
                continue;
            }
            let mut matched = false;
            for (lit, den, neg) in [
                ("(-qs)", 2, true),
                ("(-qt)", 3, true),
                ("(-q)", 1, true),
                ("qs", 2, false),
                ("qt", 3, false),
                ("q", 1, false),
            ] {
                if let Some(rest) = s.strip_prefix(lit) {
                    let (e, rest) = if rest.starts_with('^') { take_exponent(rest)? } else { (Q::one(), rest) };
                    let phase = if neg { e / 2 } else { Q::zero() };
                    acc = acc.mul(QPoint::new(phase, e / den));
                    s = rest;
                    matched = true;
                    break;
                }
            }
            if matched {
                continue;
            }
            if let Some(r) = s.strip_prefix("(-1)") {
                let (e, rest) = if r.starts_with('^') { take_exponent(r)? } else { (Q::one(), r) };
                acc = acc.mul(QPoint::new(e / 2, Q::zero()));
                s = rest;
            } else if let Some(r) = s.strip_prefix('-') {
                acc = acc.neg();
                s = r;
            } else if let Some(r) = s.strip_prefix('i') {
                acc = acc.mul(QPoint::i());
                s = r;
            } else if let Some(r) = s.strip_prefix('w') {
                let (e, rest) = if r.starts_with('^') { take_exponent(r)? } else { (Q::one(), r) };
                acc = acc.mul(QPoint::new(e / 3, Q::zero()));
                s = rest;
            } else if let Some(r) = s.strip_prefix('1') {
                s = r;
            } else {
                return Err(Error::Parse(format!("cannot parse spectral parameter '{}'", src)));
            }
        }
        Ok(acc)
    }
}

/// `prod (z - r)^{mult}` up to units of `k[z, z^{-1}]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredLaurent {
    roots: BTreeMap<QPoint, i64>,
}

impl FactoredLaurent {
    pub fn one() -> Self {
        FactoredLaurent::default()
    }

    pub fn from_roots<I: IntoIterator<Item = QPoint>>(roots: I) -> Self {
        let mut f = FactoredLaurent::one();
        for r in roots {
            f.add_root(r, 1);
        }
        f
    }

    pub fn add_root(&mut self, r: QPoint, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.roots.entry(r).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.roots.remove(&r);
        }
    }

    pub fn roots(&self) -> impl Iterator<Item = (QPoint, i64)> + '_ {
        self.roots.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn zero_order_at(&self, x: QPoint) -> i64 {
        self.roots.get(&x).copied().unwrap_or(0)
    }

    pub fn mul(&self, o: &FactoredLaurent) -> FactoredLaurent {
        let mut r = self.clone();
        for (p, m) in o.roots() {
            r.add_root(p, m);
        }
        r
    }

    pub fn inv(&self) -> FactoredLaurent {
        FactoredLaurent { roots: self.roots.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    pub fn div(&self, o: &FactoredLaurent) -> FactoredLaurent {
        self.mul(&o.inv())
    }

    pub fn pow(&self, k: i64) -> FactoredLaurent {
        let mut r = FactoredLaurent::one();
        for (p, m) in self.roots() {
            r.add_root(p, m * k);
        }
        r
    }

    /// `f(c^{-1} z)`: every root multiplied by `c`.
    pub fn scale_roots(&self, c: QPoint) -> FactoredLaurent {
        let mut r = FactoredLaurent::one();
        for (p, m) in self.roots() {
            r.add_root(p.mul(c), m);
        }
        r
    }

    /// `f(-z)`
    pub fn negate_var(&self) -> FactoredLaurent {
        self.scale_roots(QPoint::minus_one())
    }

    /// Roots `r` of `f(z)` replaced by every `w` with `w^k = r`: `f(z^k)`.
    pub fn compose_power(&self, k: i64) -> FactoredLaurent {
        let mut out = FactoredLaurent::one();
        for (p, m) in self.roots() {
            let base = QPoint::new(p.phase / k, p.qexp / k);
            for j in 0..k {
                out.add_root(base.mul(QPoint::root_of_unity(rat(j, k))), m);
            }
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.roots.values().all(|m| *m >= 0)
    }

    pub fn degree(&self) -> i64 {
        self.roots.values().sum()
    }

    /// Root-multiset containment.
    pub fn divides(&self, o: &FactoredLaurent) -> bool {
        o.div(self).is_polynomial()
    }

    pub fn to_phi_product(&self, base: QPoint) -> PhiProduct {
        let mut p = PhiProduct::one(base);
        for (r, m) in self.roots() {
            let a = r.inv();
            p.add(a, m);
            p.add(a.mul(base), -m);
        }
        p
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "roots": self.roots().map(|(p, m)| serde_json::json!({"point": p, "mult": m})).collect::<Vec<_>>()
        })
    }
}

pub(crate) fn fmt_factor(r: QPoint, style: Style) -> String {
    let rs = r.display(style);
    let ns = r.neg().display(style);
    if rs.starts_with('-') && !ns.starts_with('-') {
        format!("(z + {})", ns)
    } else {
        format!("(z - {})", rs)
    }
}

impl FactoredLaurent {
    pub fn display(&self, style: Style) -> String {
        let part = |sign: i64| -> String {
            self.roots()
                .filter(|(_, m)| m.signum() == sign)
                .map(|(p, m)| {
                    let m = m.abs();
                    if m == 1 {
                        fmt_factor(p, style)
                    } else {
                        format!("{}^{}", fmt_factor(p, style), m)
                    }
                })
                .collect()
        };
        let num = part(1);
        let den = part(-1);
        let num = if num.is_empty() { "1".to_string() } else { num };
        if den.is_empty() {
            num
        } else {
            format!("{} / {}", num, den)
        }
    }
}

impl fmt::Display for FactoredLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let style = self.roots.keys().next().map(|p| p.default_style()).unwrap_or(Style::MINUS_Q);
        write!(f, "{}", self.display(style))
    }
}

impl fmt::Debug for FactoredLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `prod_a phi(a z)^{eta_a}` with `phi(z) = (z; base)_infty`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PhiProduct {
    base: QPoint,
    factors: BTreeMap<QPoint, i64>,
}

impl PhiProduct {
    pub fn one(base: QPoint) -> Self {
        assert!(base.qexp.is_positive(), "phi base must have positive q-exponent");
        PhiProduct { base, factors: BTreeMap::new() }
    }

    pub fn base(&self) -> QPoint {
        self.base
    }

    pub fn add(&mut self, a: QPoint, eta: i64) {
        if eta == 0 {
            return;
        }
        let e = self.factors.entry(a).or_insert(0);
        *e += eta;
        if *e == 0 {
            self.factors.remove(&a);
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = (QPoint, i64)> + '_ {
        self.factors.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, o: &PhiProduct) -> PhiProduct {
        assert_eq!(self.base, o.base, "phi products over different bases");
        let mut r = self.clone();
        for (a, e) in o.factors() {
            r.add(a, e);
        }
        r
    }

    pub fn inv(&self) -> PhiProduct {
        PhiProduct { base: self.base, factors: self.factors.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    pub fn div(&self, o: &PhiProduct) -> PhiProduct {
        self.mul(&o.inv())
    }

    /// `c(w z)` as a function of `z`.
    pub fn scale_arg(&self, w: QPoint) -> PhiProduct {
        let mut r = PhiProduct::one(self.base);
        for (a, e) in self.factors() {
            r.add(a.mul(w), e);
        }
        r
    }

    /// `(a z; base)_infty`
    pub fn pochhammer(base: QPoint, a: QPoint) -> PhiProduct {
        let mut p = PhiProduct::one(base);
        p.add(a, 1);
        p
    }

    pub fn deg(&self) -> i64 {
        self.factors()
            .filter_map(|(a, e)| a.log_base(self.base).map(|k| if k <= 0 { e } else { -e }))
            .sum()
    }

    pub fn deg_inf(&self) -> i64 {
        self.factors().filter(|(a, _)| a.log_base(self.base).is_some()).map(|(_, e)| e).sum()
    }

    /// Telescopes each `base^Z`-coset. Returns the finite product
    /// `prod (1 - c z)^{mu}` written as roots `c^{-1}`, or `None` when some
    /// coset has nonzero total exponent (an honest infinite product).
    pub fn to_laurent(&self) -> Option<FactoredLaurent> {
        let mut cosets: BTreeMap<QPoint, BTreeMap<i64, i64>> = BTreeMap::new();
        for (a, e) in self.factors() {
            let (rep, k) = a.coset_rep(self.base);
            *cosets.entry(rep).or_default().entry(k).or_insert(0) += e;
        }
        let mut out = FactoredLaurent::one();
        for (rep, ks) in cosets {
            let total: i64 = ks.values().sum();
            if total != 0 {
                return None;
            }
            let lo = *ks.keys().next().unwrap();
            let hi = *ks.keys().last().unwrap();
            let mut run = 0;
            for j in lo..=hi {
                run += ks.get(&j).copied().unwrap_or(0);
                if run != 0 {
                    out.add_root(rep.mul(self.base.pow(j)).inv(), run);
                }
            }
        }
        Some(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base": self.base,
            "factors": self.factors().map(|(a, e)| serde_json::json!({"point": a, "eta": e})).collect::<Vec<_>>()
        })
    }
}

impl fmt::Display for PhiProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(a, e)| {
                if e == 1 {
                    format!("phi({} z)", a)
                } else {
                    format!("phi({} z)^{}", a, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for PhiProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[base {}] {}", self.base, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law_examples() {
        assert_eq!(QPoint::mq(1).pow(2), QPoint::qi(2));
        assert_eq!(QPoint::mqs(1).mul(QPoint::mqs(3)), QPoint::qi(2));
        assert_eq!(QPoint::i().mul(QPoint::i()), QPoint::minus_one());
    }

    #[test]
    fn zero_orders() {
        let mut f = FactoredLaurent::one();
        f.add_root(QPoint::qi(4), 2);
        assert_eq!(f.zero_order_at(QPoint::qi(4)), 2);
        assert_eq!(f.zero_order_at(QPoint::qi(2)), 0);
        let mut g = FactoredLaurent::one();
        g.add_root(QPoint::qi(4), 1);
        g.add_root(QPoint::qi(2), -1);
        assert_eq!(g.zero_order_at(QPoint::qi(2)), -1);
    }

    #[test]
    fn deg_examples() {
        let base = QPoint::qi(8);
        let mut p = PhiProduct::one(base);
        p.add(QPoint::one(), 1);
        assert_eq!((p.deg(), p.deg_inf()), (1, 1));
        let mut p = PhiProduct::one(base);
        p.add(base, 1);
        assert_eq!((p.deg(), p.deg_inf()), (-1, 1));
        let mut p = PhiProduct::one(base);
        p.add(QPoint::qi(1), 1);
        assert_eq!((p.deg(), p.deg_inf()), (0, 0));
    }

    #[test]
    fn printing() {
        assert_eq!(QPoint::mq(4).to_string(), "(-q)^4");
        assert_eq!(QPoint::mq(3).to_string(), "(-q)^3");
        assert_eq!(QPoint::qs(7).to_string(), "qs^7");
        assert_eq!(QPoint::qt(7).neg().to_string(), "-qt^7");
        assert_eq!(fmt_factor(QPoint::qt(7).neg(), Style::QT), "(z + qt^7)");
        assert_eq!(fmt_factor(QPoint::qs(6).neg(), Style::QS), "(z + qs^6)");
        assert_eq!(QPoint::qs(4).display(Style::QS), "qs^4");
        assert_eq!(QPoint::mqs(3).display(Style::QS), "-qs^3");
        assert_eq!(QPoint::mq(3).display(Style::MINUS_Q), "(-q)^3");
        assert_eq!(QPoint::mqs(3).display(Style::MINUS_Q), "(-qs)^3");
        let f = FactoredLaurent::from_roots([QPoint::mq(4), QPoint::mq(4)]);
        assert_eq!(f.to_string(), "(z - (-q)^4)^2");
    }

    #[test]
    fn parsing() {
        let p: QPoint = "(-q)^-2".parse().unwrap();
        assert_eq!(p, QPoint::mq(-2));
        let p: QPoint = "(-1)*qs^0".parse().unwrap();
        assert_eq!(p, QPoint::minus_one());
        let p: QPoint = "-q^3".parse().unwrap();
        assert_eq!(p, QPoint::qi(3).neg());
        let p: QPoint = "i*q^(1/2)".parse().unwrap();
        assert_eq!(p, QPoint::new(rat(1, 4), rat(1, 2)));
        let p: QPoint = "w^2q^4".parse().unwrap();
        assert_eq!(p, QPoint::new(rat(2, 3), int(4)));
        for s in ["(-q)^3", "qs^7", "-qt^7", "(-qs)^-1", "w*q^4", "i", "-1", "1"] {
            let p: QPoint = s.parse().unwrap();
            assert_eq!(p.to_string().parse::<QPoint>().unwrap(), p, "{}", s);
        }
    }

    #[test]
    fn compose_power_splits() {
        let f = FactoredLaurent::from_roots([QPoint::qi(6)]).compose_power(3);
        assert_eq!(f.degree(), 3);
        assert_eq!(f.zero_order_at(QPoint::qi(2)), 1);
        assert_eq!(f.zero_order_at(QPoint::new(rat(1, 3), int(2))), 1);
    }

    #[test]
    fn json_roundtrip() {
        let p = QPoint::mqs(5);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"phase":"1/2","qexp":"5/2"}"#);
        assert_eq!(serde_json::from_str::<QPoint>(&s).unwrap(), p);
    }
}
