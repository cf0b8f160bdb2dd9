//! Q-data, repetition quivers, compatible readings and i-boxes.
//!
//! Vertices are pairs `(i, p)` with `i` an unfolded node (1-based) of the
//! simply-laced diagram attached to the type. Twisted types reuse the quiver
//! of their untwisted partner.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::denominators::KRModule;
use crate::error::{Error, Result};
use crate::qfield::QPoint;
use crate::root_data::{AffineType, Family, Kind};

pub type Vertex = (usize, i64);

/// `(Delta, sigma, xi)` for one affine type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDatum {
    pub ty: AffineType,
    /// Adjacency of the unfolded diagram, index 0 unused.
    pub adj: Vec<Vec<usize>>,
    /// Folded node of each unfolded node (`pi` for twisted types).
    pub fold: Vec<usize>,
    /// `d_{fold(i)}` on the quiver.
    pub d: Vec<i64>,
    /// `sigma` on unfolded nodes.
    pub sigma: Vec<usize>,
    pub xi: Vec<i64>,
    /// Row height used to order the NE and SE readings.
    pub h: Vec<i64>,
}

fn chain(n: usize) -> Vec<Vec<usize>> {
    let mut adj = vec![vec![]; n + 1];
    for i in 1..n {
        adj[i].push(i + 1);
        adj[i + 1].push(i);
    }
    adj
}

fn d_diagram(n: usize) -> Vec<Vec<usize>> {
    let mut adj = chain(n - 1);
    adj.push(vec![]);
    adj[n - 2].push(n);
    adj[n].push(n - 2);
    adj
}

impl QDatum {
    pub fn new(ty: AffineType) -> Result<Self> {
        let n = ty.n;
        let (adj, fold, sigma): (Vec<Vec<usize>>, Vec<usize>, Vec<usize>) = match ty.kind {
            Kind::A1 | Kind::A2Odd | Kind::A2Even | Kind::D2 | Kind::D3 => {
                let g = ty.g_fin();
                let m = g.rank;
                let adj = if g.family == Family::D { d_diagram(m) } else { chain(m) };
                (adj, (0..=m).collect(), (0..=m).collect())
            }
            Kind::B1 => {
                let m = 2 * n - 1;
                let fold = (0..=m).map(|i| i.min(2 * n - i)).collect();
                let sigma = (0..=m).map(|i| if i == 0 { 0 } else { 2 * n - i }).collect();
                (chain(m), fold, sigma)
            }
            Kind::C1 => {
                let m = n + 1;
                let fold = (0..=m).map(|i| i.min(n)).collect();
                let mut sigma: Vec<usize> = (0..=m).collect();
                sigma.swap(n, n + 1);
                (d_diagram(m), fold, sigma)
            }
            Kind::D1 => (d_diagram(n), (0..=n).collect(), (0..=n).collect()),
            Kind::G1 => (d_diagram(4), vec![0, 1, 2, 1, 1], vec![0, 4, 2, 1, 3]),
        };
        let size = adj.len() - 1;
        let d_shaped = adj.iter().any(|a| a.len() == 3);
        let d: Vec<i64> = if ty.is_untwisted() {
            let qmin = ty.nodes().map(|k| ty.q_exp(k)).min().unwrap();
            (0..=size).map(|i| if i == 0 { 0 } else { (ty.q_exp(fold[i]) / qmin).to_integer() }).collect()
        } else {
            vec![1; size + 1]
        };
        let fold = if ty.is_untwisted() { fold } else { (0..=size).map(|i| twisted_pi(ty, i)).collect() };
        let mut qd = QDatum { ty, adj, fold, d, sigma, xi: vec![0; size + 1], h: vec![0; size + 1] };
        let last = size;
        let h: Vec<i64> = (0..=size)
            .map(|i| {
                if i == 0 || (d_shaped && i == size - 1) {
                    0
                } else {
                    qd.td(i, last)
                }
            })
            .collect();
        qd.h = h.clone();
        let shift = h[1].rem_euclid(2);
        qd.xi = match ty.kind {
            Kind::G1 => vec![0, 3, 2, 7, 5],
            Kind::C1 => {
                let mut xi: Vec<i64> = h.iter().map(|v| v + shift).collect();
                xi[0] = 0;
                xi[n] = xi[n - 1] - 1;
                xi[n + 1] = xi[n - 1] + 1;
                xi
            }
            Kind::B1 => h.clone(),
            _ => h.iter().enumerate().map(|(i, v)| if i == 0 { 0 } else { v + shift }).collect(),
        };
        Ok(qd)
    }

    pub fn size(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.size()
    }

    fn min_d(&self, i: usize, j: usize) -> i64 {
        self.d[i].min(self.d[j])
    }

    /// `sum of min(d, d')` along the unique path from `i` to `j`.
    pub fn td(&self, i: usize, j: usize) -> i64 {
        let mut dist = vec![-1i64; self.size() + 1];
        dist[i] = 0;
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] < 0 {
                    dist[v] = dist[u] + self.min_d(u, v);
                    queue.push_back(v);
                }
            }
        }
        dist[j]
    }

    /// Unweighted graph distance.
    pub fn dist(&self, i: usize, j: usize) -> usize {
        let mut dist = vec![usize::MAX; self.size() + 1];
        dist[i] = 0;
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist[j]
    }

    pub fn is_vertex(&self, v: Vertex) -> bool {
        let (i, p) = v;
        (1..=self.size()).contains(&i) && (p - self.xi[i]).rem_euclid(2 * self.d[i]) == 0
    }

    /// Arrows out of `v`.
    pub fn arrows_from(&self, v: Vertex) -> Vec<Vertex> {
        let (i, p) = v;
        self.adj[i].iter().map(|&j| (j, p + self.min_d(i, j))).filter(|&w| self.is_vertex(w)).collect()
    }

    /// Height-function axioms for equal-`d` neighbours and `sigma`-orbits.
    pub fn check(&self) -> Result<()> {
        let bad = |s: String| Err(Error::Precondition(s));
        for i in self.nodes() {
            for &j in &self.adj[i] {
                if self.d[i] == self.d[j] && (self.xi[i] - self.xi[j]).abs() != self.d[i] {
                    return bad(format!("|xi_{i} - xi_{j}| != d"));
                }
            }
        }
        for i in self.nodes().filter(|&i| self.d[i] == 1) {
            let mut folded: Vec<usize> = self.adj[i].iter().map(|&j| self.fold[j]).collect();
            folded.sort();
            folded.dedup();
            for f in folded {
                let orbit: Vec<usize> = self.adj[i].iter().copied().filter(|&j| self.fold[j] == f).collect();
                let r = self.d[orbit[0]];
                if r == 1 {
                    continue;
                }
                let ok = orbit.iter().filter(|&&j| {
                    (self.xi[i] - self.xi[j]).abs() == 1 && {
                        let mut cur = j;
                        (1..r).all(|k| {
                            cur = self.sigma[cur];
                            self.xi[cur] == self.xi[j] + 2 * k
                        })
                    }
                });
                if ok.count() != 1 {
                    return bad(format!("sigma-orbit condition at node {i}"));
                }
            }
        }
        Ok(())
    }

    /// `V(w_{fold i})` at the spectral parameter assigned to `(i, p)`.
    pub fn fundamental_param(&self, v: Vertex) -> QPoint {
        let (i, p) = v;
        let t = self.ty;
        let n = t.n as i64;
        match t.kind {
            Kind::A1 | Kind::D1 => QPoint::mq(p),
            Kind::B1 => QPoint::sign(n + self.fold[i] as i64).mul(QPoint::qs(p)),
            Kind::C1 => QPoint::mqs(p),
            Kind::G1 => QPoint::mqt(p),
            Kind::A2Odd | Kind::A2Even => {
                let nn = self.size();
                if i > nn.div_ceil(2) {
                    QPoint::sign(nn as i64).mul(QPoint::mq(p))
                } else {
                    QPoint::mq(p)
                }
            }
            Kind::D2 => {
                if (i as i64) < n {
                    QPoint::i().pow(n + 1 - i as i64).mul(QPoint::mq(p))
                } else {
                    QPoint::sign(i as i64).mul(QPoint::mq(p))
                }
            }
            Kind::D3 => {
                let c = match i {
                    1 => QPoint::one(),
                    2 => QPoint::minus_one(),
                    3 => QPoint::omega(),
                    _ => QPoint::omega().pow(2),
                };
                c.mul(QPoint::mq(p))
            }
        }
    }

    pub fn fundamental(&self, v: Vertex) -> KRModule {
        KRModule { ty: self.ty, node: self.fold[v.0], mult: 1, param: self.fundamental_param(v) }
    }

    /// Largest `r <= p` with `(j, r)` a vertex.
    pub fn p_le(&self, p: i64, j: usize) -> i64 {
        p - (p - self.xi[j]).rem_euclid(2 * self.d[j])
    }

    /// Smallest `r >= p` with `(j, r)` a vertex.
    pub fn p_ge(&self, p: i64, j: usize) -> i64 {
        p + (self.xi[j] - p).rem_euclid(2 * self.d[j])
    }
}

fn twisted_pi(ty: AffineType, i: usize) -> usize {
    if i == 0 {
        return 0;
    }
    match ty.kind {
        Kind::A2Odd | Kind::A2Even => {
            let nn = ty.untwisted_partner().n - 1;
            if i <= nn.div_ceil(2) {
                i
            } else {
                nn + 1 - i
            }
        }
        Kind::D2 => i.min(ty.n),
        Kind::D3 => {
            if i == 2 {
                2
            } else {
                1
            }
        }
        _ => i,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Strategy {
    NE,
    SE,
    N,
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "NE" => Ok(Strategy::NE),
            "SE" => Ok(Strategy::SE),
            "N" => Ok(Strategy::N),
            _ => Err(Error::Parse(format!("unknown reading '{s}' (NE, SE, N)"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A compatible reading `Z -> vertices`, anchored by `at(anchor_index) = anchor`.
#[derive(Clone, Debug)]
pub struct Reading {
    pub qd: QDatum,
    pub strategy: Strategy,
    anchor: Vertex,
    anchor_index: i64,
}

impl Reading {
    pub fn new(qd: QDatum, strategy: Strategy, anchor: Vertex, anchor_index: i64) -> Result<Self> {
        if !qd.is_vertex(anchor) {
            return Err(Error::Precondition(format!("{anchor:?} is not a vertex")));
        }
        Ok(Reading { qd, strategy, anchor, anchor_index })
    }

    /// Anchored so that index 1 is the first vertex with `p >= 0`.
    pub fn standard(ty: AffineType, strategy: Strategy) -> Result<Self> {
        let qd = QDatum::new(ty)?;
        let hmax = *qd.h.iter().max().unwrap();
        let mut r = Reading { qd, strategy, anchor: (0, 0), anchor_index: 1 };
        let mut c = -hmax - 1;
        loop {
            if let Some(&v) = r.layer(c).iter().find(|v| v.1 >= 0) {
                r.anchor = v;
                return Ok(r);
            }
            c += 1;
        }
    }

    fn key(&self, v: Vertex) -> i64 {
        match self.strategy {
            Strategy::NE => v.1 - self.qd.h[v.0],
            Strategy::SE => v.1 + self.qd.h[v.0],
            Strategy::N => v.1,
        }
    }

    /// Vertices with primary key `c`, in reading order.
    fn layer(&self, c: i64) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .qd
            .nodes()
            .map(|i| {
                let p = match self.strategy {
                    Strategy::NE => c + self.qd.h[i],
                    Strategy::SE => c - self.qd.h[i],
                    Strategy::N => c,
                };
                (i, p)
            })
            .filter(|&v| self.qd.is_vertex(v))
            .collect();
        out.sort_by_key(|&(i, p)| (p, i));
        out
    }

    pub fn at(&self, k: i64) -> Vertex {
        let mut c = self.key(self.anchor);
        let mut layer = self.layer(c);
        let pos = layer.iter().position(|&v| v == self.anchor).unwrap() as i64;
        // offset of k inside the current layer
        let mut off = pos + k - self.anchor_index;
        while off >= layer.len() as i64 {
            off -= layer.len() as i64;
            c += 1;
            layer = self.layer(c);
        }
        while off < 0 {
            c -= 1;
            layer = self.layer(c);
            off += layer.len() as i64;
        }
        layer[off as usize]
    }

    pub fn index_of(&self, v: Vertex) -> Result<i64> {
        if !self.qd.is_vertex(v) {
            return Err(Error::Precondition(format!("{v:?} is not a vertex")));
        }
        let (ca, cv) = (self.key(self.anchor), self.key(v));
        let pos = |layer: &[Vertex], x: Vertex| layer.iter().position(|&w| w == x).unwrap() as i64;
        let la = self.layer(ca);
        if ca == cv {
            return Ok(self.anchor_index + pos(&self.layer(cv), v) - pos(&la, self.anchor));
        }
        let (lo, hi, sign) = if ca < cv { (ca, cv, 1) } else { (cv, ca, -1) };
        let (lo_v, hi_v) = if sign == 1 { (self.anchor, v) } else { (v, self.anchor) };
        let l_lo = self.layer(lo);
        let mut n = l_lo.len() as i64 - pos(&l_lo, lo_v);
        for c in lo + 1..hi {
            n += self.layer(c).len() as i64;
        }
        n += pos(&self.layer(hi), hi_v);
        Ok(self.anchor_index + sign * n)
    }

    pub fn node(&self, k: i64) -> usize {
        self.at(k).0
    }

    /// `s^+`: next index of the same node.
    pub fn plus(&self, s: i64) -> i64 {
        let i = self.node(s);
        (s + 1..).find(|&t| self.node(t) == i).unwrap()
    }

    /// `s^-`: previous index of the same node.
    pub fn minus(&self, s: i64) -> i64 {
        let i = self.node(s);
        (0..).map(|k| s - 1 - k).find(|&t| self.node(t) == i).unwrap()
    }

    /// `R[s]`.
    pub fn fundamental(&self, s: i64) -> KRModule {
        self.qd.fundamental(self.at(s))
    }

    pub fn ibox(&self, a: i64, b: i64) -> Result<IBox> {
        if a > b || self.node(a) != self.node(b) {
            return Err(Error::Precondition(format!("[{a},{b}] is not an i-box")));
        }
        Ok(IBox { a, b })
    }
}

/// `[a, b]` with `i_a = i_b`, relative to one reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IBox {
    pub a: i64,
    pub b: i64,
}

impl IBox {
    /// `|[a,b]|_phi`.
    pub fn width(&self, r: &Reading) -> usize {
        let i = r.node(self.a);
        (self.a..=self.b).filter(|&s| r.node(s) == i).count()
    }

    pub fn color(&self, r: &Reading) -> usize {
        r.node(self.a)
    }

    /// `R[a,b]` as a KR module.
    pub fn module(&self, r: &Reading) -> KRModule {
        let (i, pa) = r.at(self.a);
        let m = self.width(r);
        let node = r.qd.fold[i];
        let param = r.qd.fundamental_param((i, pa)).mul(r.qd.ty.minus_chq(node).pow(m as i64 - 1));
        KRModule { ty: r.qd.ty, node, mult: m, param }
    }

    /// `[p_a, p_b]`.
    pub fn reach(&self, r: &Reading) -> (i64, i64) {
        (r.at(self.a).1, r.at(self.b).1)
    }

    /// `j`-extended reach.
    pub fn extended_reach(&self, r: &Reading, j: usize) -> (i64, i64) {
        let i = self.color(r);
        let (pa, pb) = self.reach(r);
        let t = r.qd.td(i, j);
        let dj = r.qd.d[j];
        (r.qd.p_le(pa - t, j) - 2 * dj, r.qd.p_ge(pb + t, j) + 2 * dj)
    }
}

/// `a1^- < a2 <= b2 < b1^+` or the same with the boxes exchanged.
pub fn iboxes_commute(r: &Reading, b1: IBox, b2: IBox) -> bool {
    let nested = |x: IBox, y: IBox| r.minus(x.a) < y.a && y.b < r.plus(x.b);
    nested(b1, b2) || nested(b2, b1)
}

/// Reach form: `p'_{a2} < p_{a1} <= p_{b1} < p'_{b2}` or the exchanged version,
/// with primes denoting the extended reach toward the other color.
pub fn reaches_commute(r: &Reading, b1: IBox, b2: IBox) -> bool {
    let inside = |x: IBox, y: IBox| {
        let (pa, pb) = x.reach(r);
        let (qa, qb) = y.extended_reach(r, x.color(r));
        qa < pa && pb < qb
    };
    inside(b1, b2) || inside(b2, b1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b3_ne() -> Reading {
        let qd = QDatum::new(AffineType::b(3)).unwrap();
        Reading::new(qd, Strategy::NE, (2, 0), 1).unwrap()
    }

    #[test]
    fn b3_quiver() {
        let qd = QDatum::new(AffineType::b(3)).unwrap();
        assert!(qd.is_vertex((1, -6)));
        assert!(!qd.is_vertex((1, -5)));
        assert!(qd.arrows_from((3, -1)).contains(&(2, 0)));
        assert_eq!(qd.td(1, 5), 6);
        qd.check().unwrap();
    }

    #[test]
    fn b3_readings() {
        let r = b3_ne();
        let got: Vec<Vertex> = (-2..=8).map(|k| r.at(k)).collect();
        assert_eq!(got, vec![(5, -4), (4, -2), (3, -1), (2, 0), (1, 2), (3, 1), (5, 0), (4, 2), (3, 3), (2, 4), (1, 6)]);
        let qd = QDatum::new(AffineType::b(3)).unwrap();
        let se = Reading::new(qd.clone(), Strategy::SE, (1, -6), 0).unwrap();
        let got: Vec<Vertex> = (0..=10).map(|k| se.at(k)).collect();
        assert_eq!(got, vec![(1, -6), (2, -4), (3, -3), (4, -2), (5, 0), (3, -1), (1, -2), (2, 0), (3, 1), (4, 2), (5, 4)]);
        let n = Reading::new(qd, Strategy::N, (2, -4), 0).unwrap();
        let got: Vec<Vertex> = (0..=10).map(|k| n.at(k)).collect();
        assert_eq!(got, vec![(2, -4), (5, -4), (3, -3), (1, -2), (4, -2), (3, -1), (2, 0), (5, 0), (3, 1), (1, 2), (4, 2)]);
        for k in -10..10 {
            assert_eq!(r.index_of(r.at(k)).unwrap(), k);
        }
    }

    #[test]
    fn b3_reaches() {
        let r = b3_ne();
        let b = r.ibox(0, 3).unwrap();
        assert_eq!(b.reach(&r), (-1, 1));
        assert_eq!(b.extended_reach(&r, 3), (-3, 3));
        assert_eq!(r.ibox(-2, 4).unwrap().extended_reach(&r, 1), (-14, 10));
        assert_eq!(r.ibox(-1, 5).unwrap().extended_reach(&r, 5), (-8, 8));
    }

    #[test]
    fn b3_fundamental_assignment() {
        let qd = QDatum::new(AffineType::b(3)).unwrap();
        let m = qd.fundamental((4, -2));
        assert_eq!((m.node, m.param), (2, QPoint::qs(-2).neg()));
        let qd = QDatum::new(AffineType::c(3)).unwrap();
        assert_eq!(qd.fundamental_param((1, 3)), QPoint::mqs(3));
    }
}
