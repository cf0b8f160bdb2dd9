//! Affine Cartan data, the duality constant `p*`, node involution and the
//! unfolded simply-laced type attached to each affine type.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qfield::{rat, QPoint, Style, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

/// `A(n, 1)` is `A_{n-1}^{(1)}`, `A(n, 2)` with odd
/// subscript `2n-1` or even subscript `2n`, `D(n, 2)` is `D_{n+1}^{(2)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A1,
    B1,
    C1,
    D1,
    G1,
    A2Odd,
    A2Even,
    D2,
    D3,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineType {
    pub kind: Kind,
    pub n: usize,
}

impl AffineType {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        let ok = match kind {
            Kind::A1 => n >= 2,
            Kind::B1 => n >= 3,
            Kind::C1 => n >= 2,
            Kind::D1 => n >= 4,
            Kind::A2Odd => n >= 3,
            Kind::A2Even => n >= 1,
            Kind::D2 => n >= 2,
            Kind::D3 => n == 2,
            Kind::G1 => n == 2,
        };
        let t = AffineType { kind, n };
        if ok {
            Ok(t)
        } else {
            Err(Error::Inadmissible(format!("{:?} with parameter {}", kind, n)))
        }
    }

    pub fn a(n: usize) -> Self {
        AffineType::new(Kind::A1, n).unwrap()
    }
    pub fn b(n: usize) -> Self {
        AffineType::new(Kind::B1, n).unwrap()
    }
    pub fn c(n: usize) -> Self {
        AffineType::new(Kind::C1, n).unwrap()
    }
    pub fn d(n: usize) -> Self {
        AffineType::new(Kind::D1, n).unwrap()
    }
    pub fn g2() -> Self {
        AffineType { kind: Kind::G1, n: 2 }
    }
    pub fn d43() -> Self {
        AffineType { kind: Kind::D3, n: 2 }
    }
    pub fn a2_odd(n: usize) -> Self {
        AffineType::new(Kind::A2Odd, n).unwrap()
    }
    pub fn a2_even(n: usize) -> Self {
        AffineType::new(Kind::A2Even, n).unwrap()
    }
    pub fn d2(n: usize) -> Self {
        AffineType::new(Kind::D2, n).unwrap()
    }

    pub fn family(&self) -> Family {
        match self.kind {
            Kind::A1 | Kind::A2Odd | Kind::A2Even => Family::A,
            Kind::B1 => Family::B,
            Kind::C1 => Family::C,
            Kind::D1 | Kind::D2 | Kind::D3 => Family::D,
            Kind::G1 => Family::G,
        }
    }

    pub fn twist(&self) -> u8 {
        match self.kind {
            Kind::A1 | Kind::B1 | Kind::C1 | Kind::D1 | Kind::G1 => 1,
            Kind::A2Odd | Kind::A2Even | Kind::D2 => 2,
            Kind::D3 => 3,
        }
    }

    pub fn is_untwisted(&self) -> bool {
        self.twist() == 1
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.kind, Kind::G1 | Kind::D3)
    }

    /// Number of nodes in `I_0`.
    pub fn rank(&self) -> usize {
        match self.kind {
            Kind::A1 => self.n - 1,
            _ => self.n,
        }
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank()
    }

    pub fn check_node(&self, k: usize) -> Result<()> {
        if k >= 1 && k <= self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: k, max: self.rank() })
        }
    }

    /// Entries `(i, j, a_ij)` off the diagonal, nodes `0..=rank`.
    fn edges(&self) -> Vec<(usize, usize, i64, i64)> {
        let n = self.n;
        let chain = |from: usize, to: usize| (from..to).map(|i| (i, i + 1, -1, -1)).collect::<Vec<_>>();
        match self.kind {
            Kind::A1 if n == 2 => vec![(0, 1, -2, -2)],
            Kind::A1 => {
                let mut e = chain(0, n - 1);
                e.push((n - 1, 0, -1, -1));
                e
            }
            Kind::B1 => {
                let mut e = vec![(0, 2, -1, -1)];
                e.extend(chain(1, n - 1));
                e.push((n - 1, n, -1, -2));
                e
            }
            Kind::C1 => {
                let mut e = vec![(0, 1, -1, -2)];
                e.extend(chain(1, n - 1));
                e.push((n - 1, n, -2, -1));
                e
            }
            Kind::D1 => {
                let mut e = vec![(0, 2, -1, -1)];
                e.extend(chain(1, n - 1));
                e.push((n - 2, n, -1, -1));
                e
            }
            Kind::A2Odd => {
                let mut e = vec![(0, 2, -1, -1)];
                e.extend(chain(1, n - 1));
                e.push((n - 1, n, -2, -1));
                e
            }
            Kind::A2Even if n == 1 => vec![(0, 1, -1, -4)],
            Kind::A2Even => {
                let mut e = vec![(0, 1, -1, -2)];
                e.extend(chain(1, n - 1));
                e.push((n - 1, n, -1, -2));
                e
            }
            Kind::D2 => {
                let mut e = vec![(0, 1, -2, -1)];
                e.extend(chain(1, n - 1));
                e.push((n - 1, n, -1, -2));
                e
            }
            Kind::D3 => vec![(0, 1, -1, -1), (1, 2, -3, -1)],
            Kind::G1 => vec![(0, 1, -1, -1), (1, 2, -1, -3)],
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let size = self.rank() + 1;
        let mut a = vec![vec![0i64; size]; size];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j, aij, aji) in self.edges() {
            a[i][j] = aij;
            a[j][i] = aji;
        }
        a
    }

    /// Coefficients of the null root `delta` in the simple roots.
    pub fn null_root(&self) -> Vec<i64> {
        let n = self.n;
        let size = self.rank() + 1;
        match self.kind {
            Kind::A1 => vec![1; size],
            Kind::B1 | Kind::A2Odd => (0..size).map(|i| if i <= 1 { 1 } else if self.kind == Kind::A2Odd && i == n { 1 } else { 2 }).collect(),
            Kind::C1 => (0..size).map(|i| if i == 0 || i == n { 1 } else { 2 }).collect(),
            Kind::D1 => (0..size).map(|i| if i <= 1 || i >= n - 1 { 1 } else { 2 }).collect(),
            Kind::A2Even => (0..size).map(|i| if i == 0 { 1 } else { 2 }).collect(),
            Kind::D2 => vec![1; size],
            Kind::D3 => vec![1, 2, 1],
            Kind::G1 => vec![1, 2, 3],
        }
    }

    /// Integer symmetrizer with `D A` symmetric and minimum 1, nodes `0..=rank`.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.n;
        let size = self.rank() + 1;
        match self.kind {
            Kind::A1 | Kind::D1 => vec![1; size],
            Kind::B1 => (0..size).map(|i| if i == n { 1 } else { 2 }).collect(),
            Kind::C1 => (0..size).map(|i| if i == 0 || i == n { 2 } else { 1 }).collect(),
            Kind::A2Odd => (0..size).map(|i| if i == n { 2 } else { 1 }).collect(),
            Kind::A2Even if n == 1 => vec![4, 1],
            Kind::A2Even => (0..size).map(|i| if i == 0 { 4 } else if i == n { 1 } else { 2 }).collect(),
            Kind::D2 => (0..size).map(|i| if i == 0 || i == n { 1 } else { 2 }).collect(),
            Kind::D3 => vec![1, 1, 3],
            Kind::G1 => vec![3, 3, 1],
        }
    }

    /// `(alpha_k, alpha_k) / 2` normalized so that the shortest untwisted
    /// long root has value 1; `q_k = q^{norm_k}`.
    pub fn q_exp(&self, k: usize) -> Q {
        let n = self.n;
        match self.kind {
            Kind::A1 | Kind::D1 => rat(1, 1),
            Kind::B1 => if k == n { rat(1, 2) } else { rat(1, 1) },
            Kind::C1 => if k == n { rat(1, 1) } else { rat(1, 2) },
            Kind::G1 => if k == 2 { rat(1, 3) } else { rat(1, 1) },
            Kind::A2Odd => if k == n { rat(2, 1) } else { rat(1, 1) },
            Kind::A2Even => if k == n { rat(1, 2) } else { rat(1, 1) },
            Kind::D2 => if k == n { rat(1, 1) } else { rat(2, 1) },
            Kind::D3 => if k == 2 { rat(3, 1) } else { rat(1, 1) },
        }
    }

    /// `m_k` with `V(w_k)_x = V(w_k)_y` iff `x^{m_k} = y^{m_k}`.
    pub fn m_ident(&self, k: usize) -> i64 {
        let n = self.n;
        match self.kind {
            Kind::A2Odd if k == n => 2,
            Kind::D2 if k < n => 2,
            Kind::D3 if k == 2 => 3,
            _ => 1,
        }
    }

    /// Exponent `e` with `chq_k = q^e` in the spectral variable used for the
    /// module. For twisted types parameters are written as `m_k`-th roots, so
    /// the effective step is `q_k^{1/m_k}`, and `A_{2n}^{(2)}` node `n` uses `q`.
    pub fn chq_exp(&self, k: usize) -> Q {
        if self.kind == Kind::A2Even && k == self.n {
            return rat(1, 1);
        }
        self.q_exp(k) / self.m_ident(k)
    }

    /// `-chq_k` as a spectral shift.
    /// For `D_{n+1}^{(2)}` and `k < n` this is the square root `i q` of
    /// `-q_k = -q^2`, acting on the `z^2` coordinate as `-q_k`.
    pub fn minus_chq(&self, k: usize) -> QPoint {
        if self.kind == Kind::D2 && k < self.n {
            return QPoint::new(rat(1, 4), rat(1, 1));
        }
        QPoint::q(self.chq_exp(k)).neg()
    }

    /// `p*`; type B is computed as `-(-q)^{2n-1}`.
    pub fn p_star(&self) -> QPoint {
        let n = self.n as i64;
        match self.kind {
            Kind::A1 => QPoint::mq(n),
            Kind::B1 => QPoint::mq(2 * n - 1).neg(),
            Kind::C1 => QPoint::mqs(2 * n + 2),
            Kind::D1 => QPoint::mq(2 * n - 2),
            Kind::G1 => QPoint::qi(4),
            Kind::A2Odd => QPoint::mq(2 * n).neg(),
            Kind::A2Even => QPoint::mq(2 * n + 1),
            Kind::D2 => QPoint::new(rat(n, 2), rat(2 * n, 1)).neg(),
            Kind::D3 => QPoint::qi(6),
        }
    }

    /// The type B value of `p*`, `q^{2n-1}`.
    pub fn p_star_table_b(&self) -> Option<QPoint> {
        (self.kind == Kind::B1).then(|| QPoint::qi(2 * self.n as i64 - 1))
    }

    pub fn p_tilde(&self) -> QPoint {
        self.p_star().pow(2)
    }

    pub fn node_dual(&self, k: usize) -> Result<usize> {
        self.check_node(k)?;
        let n = self.n;
        Ok(match self.kind {
            Kind::A1 => n - k,
            Kind::D1 if n % 2 == 1 && k >= n - 1 => 2 * n - 1 - k,
            _ => k,
        })
    }

    pub fn g_fin(&self) -> FinType {
        let n = self.n;
        match self.kind {
            Kind::A1 => FinType { family: Family::A, rank: n - 1, sigma: Sigma::Id },
            Kind::B1 => FinType { family: Family::A, rank: 2 * n - 1, sigma: Sigma::Vee },
            Kind::C1 => FinType { family: Family::D, rank: n + 1, sigma: Sigma::Vee },
            Kind::D1 => FinType { family: Family::D, rank: n, sigma: Sigma::Id },
            Kind::G1 => FinType { family: Family::D, rank: 4, sigma: Sigma::Triality },
            Kind::A2Odd => FinType { family: Family::A, rank: 2 * n - 1, sigma: Sigma::Id },
            Kind::A2Even => FinType { family: Family::A, rank: 2 * n, sigma: Sigma::Id },
            Kind::D2 => FinType { family: Family::D, rank: n + 1, sigma: Sigma::Id },
            Kind::D3 => FinType { family: Family::D, rank: 4, sigma: Sigma::Id },
        }
    }

    /// Untwisted type whose repetition quiver is reused.
    pub fn untwisted_partner(&self) -> AffineType {
        let n = self.n;
        match self.kind {
            Kind::A2Odd => AffineType::a(2 * n),
            Kind::A2Even => AffineType::a(2 * n + 1),
            Kind::D2 => AffineType::d(n + 1),
            Kind::D3 => AffineType::d(4),
            _ => *self,
        }
    }

    pub fn style(&self) -> Style {
        match self.kind {
            Kind::B1 | Kind::C1 => Style::QS,
            Kind::G1 => Style::QT,
            _ => Style::MINUS_Q,
        }
    }

    /// Type of `g_0` as a finite family and rank.
    pub fn classical(&self) -> (Family, usize) {
        let n = self.n;
        match self.kind {
            Kind::A1 => (Family::A, n - 1),
            Kind::B1 | Kind::A2Even | Kind::D2 => (Family::B, n),
            Kind::C1 | Kind::A2Odd => (Family::C, n),
            Kind::D1 => (Family::D, n),
            Kind::G1 | Kind::D3 => (Family::G, 2),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sigma {
    Id,
    Vee,
    Triality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinType {
    pub family: Family,
    pub rank: usize,
    pub sigma: Sigma,
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        let (fam, sub, tw) = match self.kind {
            Kind::A1 => ("A", n - 1, 1),
            Kind::B1 => ("B", n, 1),
            Kind::C1 => ("C", n, 1),
            Kind::D1 => ("D", n, 1),
            Kind::G1 => ("G", 2, 1),
            Kind::A2Odd => ("A", 2 * n - 1, 2),
            Kind::A2Even => ("A", 2 * n, 2),
            Kind::D2 => ("D", n + 1, 2),
            Kind::D3 => ("D", 4, 3),
        };
        write!(f, "{}{}~{}", fam, sub, tw)
    }
}

impl fmt::Debug for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for AffineType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tw) = match s.split_once('~') {
            Some((h, t)) => (h, t.parse::<u8>().map_err(|_| Error::Parse(format!("bad twist in '{}'", s)))?),
            None => (s, 1),
        };
        let mut chars = head.chars();
        let fam = chars.next().ok_or_else(|| Error::Parse("empty type".into()))?.to_ascii_uppercase();
        let sub: usize = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad rank in '{}'", s)))?;
        let t = match (fam, tw) {
            ('A', 1) => AffineType::new(Kind::A1, sub + 1),
            ('B', 1) => AffineType::new(Kind::B1, sub),
            ('C', 1) => AffineType::new(Kind::C1, sub),
            ('D', 1) => AffineType::new(Kind::D1, sub),
            ('G', 1) if sub == 2 => Ok(AffineType::g2()),
            ('A', 2) if sub % 2 == 1 => AffineType::new(Kind::A2Odd, (sub + 1) / 2),
            ('A', 2) => AffineType::new(Kind::A2Even, sub / 2),
            ('D', 2) if sub >= 1 => AffineType::new(Kind::D2, sub - 1),
            ('D', 3) if sub == 4 => Ok(AffineType::d43()),
            _ => Err(Error::Inadmissible(s.to_string())),
        }?;
        Ok(t)
    }
}

/// Admissible types up to the given rank of `I_0`, used by sweeps.
pub fn all_types(max_rank: usize) -> Vec<AffineType> {
    let mut out = Vec::new();
    for n in 1..=max_rank + 1 {
        for kind in [Kind::A1, Kind::B1, Kind::C1, Kind::D1, Kind::A2Odd, Kind::A2Even, Kind::D2] {
            if let Ok(t) = AffineType::new(kind, n) {
                if t.rank() <= max_rank {
                    out.push(t);
                }
            }
        }
    }
    if max_rank >= 2 {
        out.push(AffineType::g2());
        out.push(AffineType::d43());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_examples() {
        let a2 = AffineType::a(3).cartan_matrix();
        assert_eq!(a2, vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let c2 = AffineType::c(2).cartan_matrix();
        assert_eq!((c2[0][1], c2[1][0]), (-1, -2));
        assert_eq!(AffineType::d43().rank(), 2);
        assert_eq!(AffineType::d43().cartan_matrix().len(), 3);
    }

    #[test]
    fn null_root_kernel_and_symmetry() {
        for t in all_types(6) {
            let a = t.cartan_matrix();
            let delta = t.null_root();
            let d = t.symmetrizer();
            for i in 0..a.len() {
                assert_eq!(a[i][i], 2);
                let s: i64 = (0..a.len()).map(|j| a[i][j] * delta[j]).sum();
                assert_eq!(s, 0, "{} row {}", t, i);
                for j in 0..a.len() {
                    assert_eq!(d[i] * a[i][j], d[j] * a[j][i], "{} ({},{})", t, i, j);
                }
            }
            assert_eq!(*d.iter().min().unwrap(), 1, "{}", t);
        }
    }

    #[test]
    fn p_star_table() {
        assert_eq!(AffineType::a(4).p_star(), QPoint::mq(4));
        assert_eq!(AffineType::c(3).p_star(), QPoint::qi(4));
        assert_eq!(AffineType::d(5).p_star(), QPoint::qi(8));
        assert_eq!(AffineType::b(3).p_star(), QPoint::qi(5));
        assert_eq!(AffineType::b(3).p_star_table_b(), Some(QPoint::qi(5)));
        assert_eq!(AffineType::b(4).p_star(), QPoint::qi(7));
        assert_eq!(AffineType::d2(3).p_star(), QPoint::qi(6));
        assert_eq!(AffineType::d2(2).p_star(), QPoint::qi(4).neg());
        assert_eq!(AffineType::a2_odd(3).p_star(), QPoint::qi(6).neg());
        assert_eq!(AffineType::a2_even(2).p_star(), QPoint::qi(5).neg());
    }

    #[test]
    fn node_duals() {
        assert_eq!(AffineType::a(4).node_dual(1).unwrap(), 3);
        assert_eq!(AffineType::d(5).node_dual(5).unwrap(), 4);
        assert_eq!(AffineType::d(4).node_dual(4).unwrap(), 4);
        assert_eq!(AffineType::b(3).node_dual(2).unwrap(), 2);
        assert!(AffineType::b(3).node_dual(4).is_err());
        for t in all_types(6) {
            for k in t.nodes() {
                assert_eq!(t.node_dual(t.node_dual(k).unwrap()).unwrap(), k);
            }
        }
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["A3~1", "B3~1", "C2~1", "D5~1", "A5~2", "A4~2", "D5~2", "D4~3", "G2~1"] {
            let t: AffineType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("B2~1".parse::<AffineType>().is_err());
        assert!("E6~1".parse::<AffineType>().is_err());
        let t: AffineType = "A3~1".parse().unwrap();
        assert_eq!(t.n, 4);
    }

    #[test]
    fn g_fin_examples() {
        assert_eq!(AffineType::b(3).g_fin(), FinType { family: Family::A, rank: 5, sigma: Sigma::Vee });
        assert_eq!(AffineType::d(4).g_fin(), FinType { family: Family::D, rank: 4, sigma: Sigma::Id });
        assert_eq!(AffineType::a2_even(2).g_fin().rank, 4);
    }

    #[test]
    fn chq_values() {
        assert_eq!(AffineType::b(3).chq_exp(3), rat(1, 2));
        assert_eq!(AffineType::c(3).chq_exp(1), rat(1, 2));
        assert_eq!(AffineType::a2_even(3).chq_exp(3), rat(1, 1));
        assert_eq!(AffineType::a2_even(3).q_exp(3), rat(1, 2));
    }
}
