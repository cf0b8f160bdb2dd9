//! Weyl dimensions, tensor decompositions, the prime socle dimension count
//! in type `A_3^{(1)}` and hom-dimension monotonicity for products of KR
//! restrictions in type A.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::crystals::{generate_crystal, tensor_decomposition, CrystalGraph, Weight, G0};
use crate::error::{Error, Result};
use crate::invariants::is_simple_tensor;
use crate::morphisms::{generalized_tsystem, higher_dorey, DoreyRule, MorphismRecord};
use crate::root_data::Family;
use crate::{AffineType, KRModule, QPoint};

/// Positive coroots as coefficient vectors over the simple coroots.
pub fn positive_coroots(g0: G0) -> Vec<Vec<i64>> {
    let a = g0.cartan_matrix();
    let n = g0.rank;
    let simple: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut roots = simple.clone();
    let mut k = 0;
    while k < roots.len() {
        let beta = roots[k].clone();
        for i in 0..n {
            let pair: i64 = (0..n).map(|j| a[j][i] * beta[j]).sum();
            let mut r = beta.clone();
            r[i] -= pair;
            if r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0) && !roots.contains(&r) {
                roots.push(r);
            }
        }
        k += 1;
    }
    roots
}

pub fn weyl_dim(g0: G0, lambda: &Weight) -> Result<BigInt> {
    if lambda.rank() != g0.rank {
        return Err(Error::Precondition(format!("weight {lambda} has wrong rank for {g0}")));
    }
    if !lambda.is_dominant() {
        return Err(Error::Precondition(format!("weight {lambda} is not dominant")));
    }
    let mut prod = BigRational::one();
    for c in positive_coroots(g0) {
        let num: i64 = c.iter().zip(&lambda.0).map(|(ci, li)| ci * (li + 1)).sum();
        let den: i64 = c.iter().sum();
        prod *= BigRational::new(num.into(), den.into());
    }
    debug_assert!(prod.is_integer());
    Ok(prod.to_integer())
}

fn small_dim(g0: G0, lambda: &Weight) -> Result<u64> {
    weyl_dim(g0, lambda)?.to_u64().ok_or_else(|| Error::Unsupported("dimension exceeds u64".into()))
}

/// Weight multiplicities of `V(λ)` read off its crystal.
pub fn character(cg: &CrystalGraph) -> BTreeMap<Weight, usize> {
    let mut ch = BTreeMap::new();
    for w in &cg.weights {
        *ch.entry(w.clone()).or_insert(0) += 1;
    }
    ch
}

fn height(coroots: &[Vec<i64>], w: &Weight) -> i64 {
    coroots.iter().map(|c| c.iter().zip(&w.0).map(|(a, b)| a * b).sum::<i64>()).sum()
}

/// Decomposes `V(λ) ⊗ V(μ)` by multiplying characters and peeling off the
/// highest remaining dominant weight.
pub fn decompose_by_characters(g0: G0, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, usize>> {
    let cl = character(&generate_crystal(g0, lambda)?);
    let cm = character(&generate_crystal(g0, mu)?);
    let mut prod: BTreeMap<Weight, i64> = BTreeMap::new();
    for (a, x) in &cl {
        for (b, y) in &cm {
            *prod.entry(a.add(b)).or_insert(0) += (x * y) as i64;
        }
    }
    let coroots = positive_coroots(g0);
    let mut out = BTreeMap::new();
    loop {
        prod.retain(|_, c| *c != 0);
        let Some((top, &c)) = prod.iter().filter(|(w, _)| w.is_dominant()).max_by_key(|(w, _)| height(&coroots, w)) else {
            break;
        };
        if c < 0 {
            return Err(Error::Precondition(format!("negative multiplicity at {top}")));
        }
        let top = top.clone();
        for (w, k) in character(&generate_crystal(g0, &top)?) {
            *prod.entry(w).or_insert(0) -= c * k as i64;
        }
        out.insert(top, c as usize);
    }
    Ok(out)
}

/// Decomposition of `V(λ) ⊗ V(μ)` by counting highest weight elements.
pub fn decompose_tensor(g0: G0, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, usize>> {
    let a = generate_crystal(g0, lambda)?;
    let b = generate_crystal(g0, mu)?;
    tensor_decomposition(&[&a, &b])
}

pub fn decompose_tensor_type_a(g0: G0, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, usize>> {
    if g0.family != Family::A {
        return Err(Error::Unsupported(format!("tensor decomposition is limited to type A, got {g0}")));
    }
    decompose_tensor(g0, lambda, mu)
}

/// One simple module `V(Y...)` of the example with its dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimEntry {
    pub monomial: String,
    pub dim: u64,
    pub via: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSocleReport {
    pub entries: Vec<DimEntry>,
    /// The ten headline dimensions in increasing order.
    pub headline: Vec<u64>,
    pub socle_dim: u64,
    pub splits: Vec<(String, String, u64)>,
    pub prime: bool,
}

/// Variables `Y_{i,k}` with `Y_{i,k} = Y_{i,(-q)^k}`.
const VARS: [(usize, i64); 4] = [(1, -3), (1, -1), (2, 0), (2, 2)];

fn monomial_name(vars: &[(usize, i64)]) -> String {
    vars.iter().map(|(i, k)| format!("Y{i},{k}")).collect::<Vec<_>>().join(" ")
}

/// KR modules whose head is `V(∏ Y)`, one q-string per node.
fn strings(t: AffineType, vars: &[(usize, i64)]) -> Result<Vec<KRModule>> {
    let mut by_node: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for &(i, k) in vars {
        by_node.entry(i).or_default().push(k);
    }
    by_node
        .into_iter()
        .map(|(i, mut ks)| {
            ks.sort();
            if ks.windows(2).any(|w| w[1] - w[0] != 2) {
                return Err(Error::Precondition(format!("Y{i} exponents {ks:?} are not a q-string")));
            }
            let center = (ks[0] + ks[ks.len() - 1]) / 2;
            KRModule::new(t, i, ks.len(), QPoint::mq(center))
        })
        .collect()
}

/// Shift taking the record's sources onto `mods`, if any.
fn matches_sources(rec: &MorphismRecord, mods: &[KRModule]) -> bool {
    if rec.sources.len() != mods.len() {
        return false;
    }
    let c = mods[0].param.div(rec.sources[0].param);
    rec.sources.iter().zip(mods).all(|(s, m)| s.shifted(c) == *m)
}

fn kr_dim(g0: G0, m: &KRModule) -> Result<u64> {
    small_dim(g0, &Weight::from_terms(g0.rank, &[(m.node, m.mult as i64)]))
}

pub fn prime_socle_check() -> Result<PrimeSocleReport> {
    let t = AffineType::a(4);
    let g0 = G0::a(3);
    let dorey = higher_dorey(t, DoreyRule::KlLess, 2, 1, 1, false)?;
    let tsys = generalized_tsystem(t, 3, 2, 2)?;
    let mut entries = vec![];
    let mut dims: BTreeMap<Vec<(usize, i64)>, u64> = BTreeMap::new();
    for mask in 1u32..16 {
        let vars: Vec<(usize, i64)> = (0..4).filter(|b| mask >> b & 1 == 1).map(|b| VARS[b]).collect();
        let mods = strings(t, &vars)?;
        let (dim, via) = if mods.len() == 1 {
            (kr_dim(g0, &mods[0])?, "KR module".to_string())
        } else if is_simple_tensor(&mods, false)? {
            (mods.iter().map(|m| kr_dim(g0, m)).product::<Result<u64>>()?, "simple tensor product".into())
        } else if let Some(rec) = [&dorey, &tsys].into_iter().find(|r| matches_sources(r, &mods)) {
            let src: u64 = mods.iter().map(|m| kr_dim(g0, m)).product::<Result<u64>>()?;
            let head: u64 = rec.head.iter().map(|m| kr_dim(g0, m)).product::<Result<u64>>()?;
            (src - head, format!("{} sequence", rec.tag))
        } else {
            let ws: Vec<Weight> = mods.iter().map(|m| Weight::from_terms(3, &[(m.node, m.mult as i64)])).collect();
            let dec = decompose_tensor_type_a(g0, &ws[0], &ws[1])?;
            if dec.values().sum::<usize>() != 2 {
                return Err(Error::Precondition(format!("{} has more than two classical summands", monomial_name(&vars))));
            }
            (small_dim(g0, &ws[0].add(&ws[1]))?, "top summand of a length-two product".into())
        };
        dims.insert(vars.clone(), dim);
        entries.push(DimEntry { monomial: monomial_name(&vars), dim, via });
    }
    let socle_dim = dims[&VARS.to_vec()];
    let pick = |v: &[(usize, i64)]| dims[&v.to_vec()];
    let mut headline = vec![
        pick(&VARS[0..1]),
        pick(&VARS[2..3]),
        pick(&VARS[0..2]),
        pick(&[VARS[0], VARS[2]]),
        pick(&[VARS[0], VARS[3]]),
        pick(&[VARS[1], VARS[2], VARS[3]]),
        pick(&[VARS[0], VARS[2], VARS[3]]),
        pick(&[VARS[0], VARS[1], VARS[3]]),
        pick(&VARS[0..3]),
        socle_dim,
    ];
    headline.sort();
    let mut splits = vec![];
    for mask in 1u32..8 {
        let left: Vec<_> = (0..4).filter(|b| mask >> b & 1 == 1).map(|b| VARS[b]).collect();
        let right: Vec<_> = (0..4).filter(|b| mask >> b & 1 == 0).map(|b| VARS[b]).collect();
        splits.push((monomial_name(&left), monomial_name(&right), dims[&left] * dims[&right]));
    }
    let prime = splits.iter().all(|s| s.2 != socle_dim);
    Ok(PrimeSocleReport { entries, headline, socle_dim, splits, prime })
}

/// Reverse dominance `λ ⪯ μ`: partial sums of `λ` dominate those of `μ`
/// up to the shorter length.
pub fn reverse_dominance_leq(lambda: &[usize], mu: &[usize]) -> bool {
    let len = lambda.len().min(mu.len());
    let (mut a, mut b) = (0, 0);
    for j in 0..len {
        a += lambda[j];
        b += mu[j];
        if a < b {
            return false;
        }
    }
    true
}

pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(k, k, &mut vec![], &mut out);
    out
}

/// Products of classical KR restrictions indexed by a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KrProduct {
    /// `⊗_s B(λ_s Λ_i)`.
    FixedNode(usize),
    /// `⊗_s B(m Λ_{λ_s})`.
    FixedMult(usize),
}

pub fn kr_product_weights(g0: G0, kind: KrProduct, part: &[usize]) -> Result<Vec<Weight>> {
    if g0.family != Family::A {
        return Err(Error::Unsupported(format!("KR restrictions are single simples only in type A, got {g0}")));
    }
    let r = g0.rank;
    part.iter()
        .map(|&p| match kind {
            KrProduct::FixedNode(i) if (1..=r).contains(&i) => Ok(Weight::from_terms(r, &[(i, p as i64)])),
            KrProduct::FixedMult(m) if p <= r => Ok(Weight::from_terms(r, &[(p, m as i64)])),
            _ => Err(Error::Precondition(format!("partition part {p} out of range for {g0}"))),
        })
        .collect()
}

pub fn kr_product_decomposition(g0: G0, kind: KrProduct, part: &[usize]) -> Result<BTreeMap<Weight, usize>> {
    let crystals = kr_product_weights(g0, kind, part)?.iter().map(|w| generate_crystal(g0, w)).collect::<Result<Vec<_>>>()?;
    tensor_decomposition(&crystals.iter().collect::<Vec<_>>())
}

/// Multiplicities of `V(τ)` in the products for `λ ⪯ μ` and whether the
/// first is at most the second.
pub fn hom_dim_monotonicity(g0: G0, kind: KrProduct, lambda: &[usize], mu: &[usize], tau: &Weight) -> Result<(usize, usize, bool)> {
    if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() || !reverse_dominance_leq(lambda, mu) {
        return Err(Error::Precondition(format!("{lambda:?} is not below {mu:?} in reverse dominance")));
    }
    let a = kr_product_decomposition(g0, kind, lambda)?.get(tau).copied().unwrap_or(0);
    let b = kr_product_decomposition(g0, kind, mu)?.get(tau).copied().unwrap_or(0);
    Ok((a, b, a <= b))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub pairs: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

/// Every comparable pair of partitions of `k` and every `τ` occurring in
/// either product.
pub fn monotonicity_sweep(g0: G0, kind: KrProduct, k: usize) -> Result<SweepReport> {
    let parts: Vec<Vec<usize>> = partitions(k)
        .into_iter()
        .filter(|p| matches!(kind, KrProduct::FixedNode(_)) || p[0] <= g0.rank)
        .collect();
    let decs = parts.iter().map(|p| kr_product_decomposition(g0, kind, p)).collect::<Result<Vec<_>>>()?;
    let mut rep = SweepReport::default();
    for (x, lam) in parts.iter().enumerate() {
        for (y, mu) in parts.iter().enumerate() {
            if x == y || !reverse_dominance_leq(lam, mu) {
                continue;
            }
            rep.pairs += 1;
            for tau in decs[x].keys().chain(decs[y].keys()) {
                rep.checks += 1;
                let a = decs[x].get(tau).copied().unwrap_or(0);
                let b = decs[y].get(tau).copied().unwrap_or(0);
                if a > b {
                    rep.failures.push(format!("{lam:?} vs {mu:?} at {tau}: {a} > {b}"));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dims() {
        let a3 = G0::a(3);
        assert_eq!(weyl_dim(a3, &Weight::fundamental(3, 1)).unwrap(), 4.into());
        assert_eq!(weyl_dim(a3, &Weight::fundamental(3, 2)).unwrap(), 6.into());
        assert_eq!(weyl_dim(a3, &Weight::zero(3)).unwrap(), 1.into());
        assert!(weyl_dim(a3, &Weight(vec![-1, 0, 0])).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert!(reverse_dominance_leq(&[2], &[1, 1]));
        assert!(!reverse_dominance_leq(&[1, 1], &[2]));
    }
}
