//! Brute-force oracles over an explicitly constructed `S(G,t)`.
//!
//! Degrees come from counting incidences in the edge stream. The per-word
//! degree formula is evaluated alongside and compared word by word, but the
//! oracle results never depend on it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::closed_form::{self, DegreeHistogram};
use crate::error::{Error, Result};
use crate::sierpinski::SierpinskiParams;

/// Result of sweeping every word and every edge of `S(G,t)`.
#[derive(Debug, Clone)]
pub struct Census {
    /// Edge-stream degree of each word, indexed by rank.
    pub incidence: Vec<u32>,
    pub edge_count: u64,
    /// Words where the per-word formula disagrees with the incidence count.
    pub formula_mismatches: u64,
    pub first_mismatch: Option<u64>,
}

impl Census {
    pub fn run(params: &SierpinskiParams) -> Result<Self> {
        let words = params.explicit_vertex_count()?;
        let mut incidence = vec![0u32; words as usize];
        let mut edge_count = 0u64;
        for (u, v) in params.edge_ranks()? {
            incidence[u as usize] += 1;
            incidence[v as usize] += 1;
            edge_count += 1;
        }

        let mut formula_mismatches = 0;
        let mut first_mismatch = None;
        let mut letters = vec![0; params.t()];
        for (rank, &deg) in incidence.iter().enumerate() {
            params.unrank_into(rank as u64, &mut letters);
            if params.degree_of_letters(&letters) != deg as usize {
                formula_mismatches += 1;
                first_mismatch.get_or_insert(rank as u64);
            }
        }

        Ok(Self {
            incidence,
            edge_count,
            formula_mismatches,
            first_mismatch,
        })
    }

    pub fn vertex_count(&self) -> u64 {
        self.incidence.len() as u64
    }

    pub fn histogram(&self) -> DegreeHistogram {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for &d in &self.incidence {
            *counts.entry(d as usize).or_default() += 1;
        }
        DegreeHistogram::from_counts(counts)
    }

    /// `Σ_words deg^alpha`, powers built by repeated multiplication.
    pub fn zagreb(&self, alpha: u32) -> BigUint {
        let max = self.incidence.iter().copied().max().unwrap_or(0) as usize;
        let powers: Vec<BigUint> = (0..=max)
            .map(|d| {
                let base = BigUint::from(d);
                (0..alpha).fold(BigUint::one(), |acc, _| acc * &base)
            })
            .collect();
        self.incidence
            .iter()
            .fold(BigUint::zero(), |acc, &d| acc + &powers[d as usize])
    }

    pub fn min_degree(&self) -> u32 {
        self.incidence.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.incidence.iter().copied().max().unwrap_or(0)
    }
}

/// Degree census of the explicit graph, built from edge-stream incidences.
pub fn histogram_bruteforce(params: &SierpinskiParams) -> Result<DegreeHistogram> {
    let census = Census::run(params)?;
    if let Some(rank) = census.first_mismatch {
        return Err(Error::InternalInconsistency(format!(
            "{} words disagree between formula degree and incidence count (first at rank {rank})",
            census.formula_mismatches
        )));
    }
    Ok(census.histogram())
}

pub fn zagreb_bruteforce(params: &SierpinskiParams, alpha: u32) -> Result<BigUint> {
    Ok(Census::run(params)?.zagreb(alpha))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub closed: String,
    pub oracle: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub graph_id: String,
    pub t: usize,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl CrossCheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cross-check {} t={}", self.graph_id, self.t)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = if c.pass { "pass" } else { "FAIL" };
            writeln!(
                f,
                "  {verdict}  {:<width$}  closed={}  oracle={}",
                c.name, c.closed, c.oracle
            )?;
        }
        writeln!(f, "overall: {}", if self.overall { "pass" } else { "FAIL" })
    }
}

fn compact(h: &DegreeHistogram) -> String {
    let parts: Vec<String> = h.iter().map(|(k, c)| format!("{k}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn check<A: fmt::Display, B: fmt::Display>(
    name: impl Into<String>,
    closed: Result<A>,
    oracle: B,
) -> Check {
    let oracle = oracle.to_string();
    let (closed, pass) = match closed {
        Ok(v) => {
            let v = v.to_string();
            let pass = v == oracle;
            (v, pass)
        }
        Err(e) => (format!("error: {e}"), false),
    };
    Check {
        name: name.into(),
        closed,
        oracle,
        pass,
    }
}

/// Compares every closed form against the explicit construction. Never
/// stops at the first failing check.
pub fn cross_check(
    params: &SierpinskiParams,
    graph_id: &str,
    alpha_max: u32,
) -> Result<CrossCheckReport> {
    let census = Census::run(params)?;
    let oracle_hist = census.histogram();
    let mut checks = vec![
        check(
            "degree formula mismatches",
            Ok(0),
            census.formula_mismatches,
        ),
        check(
            "degree histogram",
            Ok(compact(&closed_form::degree_histogram_closed(params))),
            compact(&oracle_hist),
        ),
        check(
            "vertex count",
            Ok(closed_form::vertex_count(params)),
            census.vertex_count(),
        ),
        check(
            "edge count",
            Ok(closed_form::edge_count(params)),
            census.edge_count,
        ),
        check(
            "min degree",
            Ok(closed_form::min_degree(params)),
            census.min_degree(),
        ),
        check(
            "max degree",
            Ok(closed_form::max_degree(params)),
            census.max_degree(),
        ),
    ];
    for alpha in 0..=alpha_max {
        checks.push(check(
            format!("Z_{alpha}"),
            closed_form::zagreb_closed(params, alpha),
            census.zagreb(alpha),
        ));
    }
    checks.push(check(
        "first Zagreb M1",
        closed_form::first_zagreb(params),
        census.zagreb(2),
    ));
    checks.push(check(
        "forgotten index F",
        closed_form::forgotten_index(params),
        census.zagreb(3),
    ));
    if params.base().is_tree() {
        checks.push(check(
            "tree leaf count",
            closed_form::tree_leaf_count(params),
            oracle_hist.count(1),
        ));
    }

    let overall = checks.iter().all(|c| c.pass);
    Ok(CrossCheckReport {
        graph_id: graph_id.to_string(),
        t: params.t(),
        checks,
        overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_graph::BaseGraph;

    fn params(g: BaseGraph, t: usize) -> SierpinskiParams {
        SierpinskiParams::new(g, t).unwrap()
    }

    #[test]
    fn histogram_examples() {
        let c4 = params(BaseGraph::cycle(4).unwrap(), 3);
        assert_eq!(
            histogram_bruteforce(&c4).unwrap(),
            DegreeHistogram::from_counts([(2, 24u32), (3, 40)])
        );
        let k3 = params(BaseGraph::complete(3).unwrap(), 2);
        assert_eq!(
            histogram_bruteforce(&k3).unwrap(),
            DegreeHistogram::from_counts([(2, 3u32), (3, 6)])
        );
        let p4 = BaseGraph::path(4).unwrap();
        assert_eq!(
            histogram_bruteforce(&params(p4, 1)).unwrap(),
            DegreeHistogram::from_counts([(1, 2u32), (2, 2)])
        );
    }

    #[test]
    fn zagreb_examples() {
        let c4 = params(BaseGraph::cycle(4).unwrap(), 3);
        assert_eq!(zagreb_bruteforce(&c4, 2).unwrap(), BigUint::from(456u32));
        assert_eq!(zagreb_bruteforce(&c4, 0).unwrap(), BigUint::from(64u32));
        let k2 = params(BaseGraph::complete(2).unwrap(), 3);
        assert_eq!(zagreb_bruteforce(&k2, 1).unwrap(), BigUint::from(14u32));
    }

    #[test]
    fn oracle_respects_cap() {
        let big = params(BaseGraph::cycle(4).unwrap(), 12);
        assert!(matches!(
            histogram_bruteforce(&big),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            cross_check(&big, "C4", 4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn cross_check_examples() {
        let c4 = cross_check(&params(BaseGraph::cycle(4).unwrap(), 3), "C4", 4).unwrap();
        assert!(c4.overall, "{c4}");
        assert_eq!(c4.failures().count(), 0);

        let p3 = cross_check(&params(BaseGraph::path(3).unwrap(), 2), "P3", 3).unwrap();
        assert!(p3.overall, "{p3}");
        let leaf = p3
            .checks
            .iter()
            .find(|c| c.name == "tree leaf count")
            .unwrap();
        assert_eq!((leaf.closed.as_str(), leaf.oracle.as_str()), ("4", "4"));

        let empty = cross_check(&params(BaseGraph::empty(3).unwrap(), 3), "E3", 2).unwrap();
        assert!(empty.overall, "{empty}");
        let hist = empty
            .checks
            .iter()
            .find(|c| c.name == "degree histogram")
            .unwrap();
        assert_eq!(hist.oracle, "{0:27}");
    }

    #[test]
    fn report_collects_every_failure() {
        let mut report = cross_check(&params(BaseGraph::cycle(4).unwrap(), 2), "C4", 1).unwrap();
        let total = report.checks.len();
        assert_eq!(report.to_string().lines().count(), total + 2);
        report.checks[0].pass = false;
        report.checks[3].pass = false;
        assert_eq!(report.failures().count(), 2);
    }
}
