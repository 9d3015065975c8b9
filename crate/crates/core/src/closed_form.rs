//! Invariants of `S(G,t)` computed from base-graph data alone.
//!
//! Everything here is exact and costs polynomial time in `t`, `Δ(G)` and
//! `alpha`, independent of `n^t`.
//!
//! With `g = 1 + n + ... + n^(t-2)` and `V_k` the base vertices of degree `k`:
//!
//! ```text
//! count[k] = |V_k| n^(t-1) - g (k |V_k| - (k-1) |V_(k-1)|)
//! Z_a      = (n^t - n^(t-1) + (n^(t-1) - 1) a) / (n-1) * Z_a(G)
//!            + g * sum_{j=1}^{a-1} C(a, j-1) Z_j(G)
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::base_graph::big_pow;
use crate::error::{Error, Result};
use crate::sierpinski::SierpinskiParams;

/// Exact degree → vertex count map. Zero counts are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeHistogram {
    counts: BTreeMap<usize, BigUint>,
}

impl DegreeHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I, C>(counts: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigUint>,
    {
        let mut h = Self::new();
        for (k, c) in counts {
            h.add(k, c.into());
        }
        h
    }

    pub fn add(&mut self, degree: usize, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(degree).or_default() += count;
    }

    /// Adds every count of `other` into `self`.
    pub fn merge(&mut self, other: &DegreeHistogram) {
        for (&k, c) in &other.counts {
            self.add(k, c.clone());
        }
    }

    pub fn count(&self, degree: usize) -> BigUint {
        self.counts.get(&degree).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &BTreeMap<usize, BigUint> {
        &self.counts
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&k, c)| (k, c))
    }

    /// `Σ_k count[k]`, the number of vertices.
    pub fn mass(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `Σ_k k count[k]`, twice the number of edges.
    pub fn degree_sum(&self) -> BigUint {
        self.moment(1)
    }

    /// `Σ_k k^alpha count[k]`.
    pub fn moment(&self, alpha: u32) -> BigUint {
        self.counts
            .iter()
            .map(|(&k, c)| c * Pow::pow(BigUint::from(k), alpha))
            .sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }
}

/// One `k: count` line per occurring degree.
impl fmt::Display for DegreeHistogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in &self.counts {
            writeln!(f, "{k}: {c}")?;
        }
        Ok(())
    }
}

/// Exact `alpha → Z_alpha` map.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZagrebTable {
    values: BTreeMap<u32, BigUint>,
}

impl ZagrebTable {
    pub fn get(&self, alpha: u32) -> Option<&BigUint> {
        self.values.get(&alpha)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.values.iter().map(|(&a, v)| (a, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for ZagrebTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, v) in &self.values {
            writeln!(f, "{a}: {v}")?;
        }
        Ok(())
    }
}

/// `1 + n + ... + n^(terms-1)`, accumulated term by term.
pub fn geometric_sum(n: usize, terms: usize) -> BigUint {
    let n = BigUint::from(n);
    let mut power = BigUint::one();
    let mut sum = BigUint::zero();
    for _ in 0..terms {
        sum += &power;
        power *= &n;
    }
    sum
}

/// `(n^(t-1) - 1) / (n - 1)`.
fn level_factor(params: &SierpinskiParams) -> BigUint {
    geometric_sum(params.base().order(), params.t() - 1)
}

pub fn degree_histogram_closed(params: &SierpinskiParams) -> DegreeHistogram {
    let base = params.base();
    let classes = base.degree_classes();
    let spread = BigInt::from(big_pow(base.order(), params.t() - 1));
    let factor = BigInt::from(level_factor(params));
    let size = |k: Option<usize>| BigInt::from(k.map_or(0, |k| classes.count(k)));

    let mut degrees: Vec<usize> = classes.iter().flat_map(|(k, _)| [k, k + 1]).collect();
    degrees.sort_unstable();
    degrees.dedup();

    let mut hist = DegreeHistogram::new();
    for k in degrees {
        let v_k = size(Some(k));
        let v_prev = size(k.checked_sub(1));
        let k_big = BigInt::from(k);
        let weight = &k_big * &v_k - (k_big - 1) * v_prev;
        let count: BigInt = &v_k * &spread - &factor * weight;
        debug_assert!(!count.is_negative(), "negative count at degree {k}");
        hist.add(k, count.to_biguint().unwrap_or_default());
    }
    hist
}

/// `δ(S(G,t)) = δ(G)`.
pub fn min_degree(params: &SierpinskiParams) -> usize {
    params.base().min_degree()
}

/// `Δ(G)` for `t = 1` or an edgeless base, otherwise `Δ(G) + 1`.
pub fn max_degree(params: &SierpinskiParams) -> usize {
    let base = params.base();
    if params.t() == 1 || base.edge_count() == 0 {
        base.max_degree()
    } else {
        base.max_degree() + 1
    }
}

fn exact_div(numerator: BigUint, divisor: usize, what: &str) -> Result<BigUint> {
    let (q, r) = numerator.div_rem(&BigUint::from(divisor));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InternalInconsistency(format!(
            "{what} is not divisible by {divisor}"
        )))
    }
}

/// General first Zagreb index of `S(G,t)` for integer `alpha >= 0`.
pub fn zagreb_closed(params: &SierpinskiParams, alpha: u32) -> Result<BigUint> {
    let base = params.base();
    let n = base.order();
    let nt = big_pow(n, params.t());
    let nt1 = big_pow(n, params.t() - 1);

    let numerator = nt - &nt1 + (nt1 - 1u32) * alpha;
    let lead = exact_div(numerator, n - 1, "leading Zagreb coefficient")?;

    let alpha_big = BigUint::from(alpha);
    let tail: BigUint = (1..alpha)
        .map(|j| num_integer::binomial(alpha_big.clone(), BigUint::from(j - 1)) * base.zagreb(j))
        .sum();

    Ok(lead * base.zagreb(alpha) + level_factor(params) * tail)
}

pub fn zagreb_table(params: &SierpinskiParams, alphas: &[u32]) -> Result<ZagrebTable> {
    let mut values = BTreeMap::new();
    for &a in alphas {
        values.insert(a, zagreb_closed(params, a)?);
    }
    Ok(ZagrebTable { values })
}

/// `n^t`.
pub fn vertex_count(params: &SierpinskiParams) -> BigUint {
    params.vertex_count()
}

/// `(n^t - 1) / (n - 1) * m`.
pub fn edge_count(params: &SierpinskiParams) -> BigUint {
    geometric_sum(params.base().order(), params.t()) * params.base().edge_count()
}

/// `M_1 = Z_2`, checked against its specialized expansion.
pub fn first_zagreb(params: &SierpinskiParams) -> Result<BigUint> {
    let general = zagreb_closed(params, 2)?;
    let base = params.base();
    let n = base.order();
    let coeff = exact_div(
        big_pow(n, params.t()) + big_pow(n, params.t() - 1) - 2u32,
        n - 1,
        "M1 coefficient",
    )?;
    let special = coeff * base.zagreb(2) + level_factor(params) * (2 * base.edge_count());
    agree("first Zagreb index", general, special)
}

/// `F = Z_3`, checked against its specialized expansion.
pub fn forgotten_index(params: &SierpinskiParams) -> Result<BigUint> {
    let general = zagreb_closed(params, 3)?;
    let base = params.base();
    let n = base.order();
    let coeff = exact_div(
        big_pow(n, params.t()) + big_pow(n, params.t() - 1) * 2u32 - 3u32,
        n - 1,
        "F coefficient",
    )?;
    let inner = BigUint::from(2 * base.edge_count()) + base.zagreb(2) * 3u32;
    let special = coeff * base.zagreb(3) + level_factor(params) * inner;
    agree("forgotten index", general, special)
}

fn agree(what: &str, general: BigUint, special: BigUint) -> Result<BigUint> {
    if general == special {
        Ok(general)
    } else {
        Err(Error::InternalInconsistency(format!(
            "{what}: general formula gives {general}, specialized expansion gives {special}"
        )))
    }
}

/// Leaves of `S(T,t)` for a tree `T`: `ε(T) (n^t - 2n^(t-1) + 1) / (n - 1)`.
pub fn tree_leaf_count(params: &SierpinskiParams) -> Result<BigUint> {
    let base = params.base();
    if !base.is_tree() {
        return Err(Error::NotATree);
    }
    let n = base.order();
    let numerator = big_pow(n, params.t()) + 1u32 - big_pow(n, params.t() - 1) * 2u32;
    let per_leaf = exact_div(numerator, n - 1, "leaf count")?;
    Ok(per_leaf * base.leaf_count())
}
