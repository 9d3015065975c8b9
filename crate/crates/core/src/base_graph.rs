//! Simple undirected base graphs.
//!
//! Vertices are `0..n` internally. The text edge-list format is 1-based:
//!
//! ```text
//! # optional comments
//! 4 4
//! 1 2
//! 2 3
//! 3 4
//! 4 1
//! ```

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// A simple undirected graph of order at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseGraph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Vertices grouped by degree. Only degrees that occur are present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeClasses {
    classes: BTreeMap<usize, Vec<usize>>,
}

impl DegreeClasses {
    /// Vertices of degree `k`, sorted by ID.
    pub fn class(&self, k: usize) -> &[usize] {
        self.classes.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `|V_k|`, zero for degrees that do not occur.
    pub fn count(&self, k: usize) -> usize {
        self.class(k).len()
    }

    pub fn counts(&self) -> BTreeMap<usize, usize> {
        self.classes.iter().map(|(&k, vs)| (k, vs.len())).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.classes.iter().map(|(&k, vs)| (k, vs.as_slice()))
    }

    pub fn min_degree(&self) -> usize {
        self.classes.keys().next().copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.classes.keys().next_back().copied().unwrap_or(0)
    }
}

impl BaseGraph {
    /// Builds a graph from 0-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 2 {
            return Err(Error::OrderTooSmall { n });
        }
        let mut builder = Builder::new(n);
        for (pos, (u, v)) in edges.into_iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::LabelOutOfRange {
                        line: pos + 1,
                        label: x as i64 + 1,
                        n,
                    });
                }
            }
            builder.add(pos + 1, u, v)?;
        }
        Ok(builder.finish())
    }

    /// Parses the 1-based edge-list format.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::MalformedInput {
            line: 1,
            message: "missing header \"n m\"".into(),
        })?;
        let [n, m] = parse_pair::<usize>(header_line, header, "header")?;
        if n < 2 {
            return Err(Error::OrderTooSmall { n });
        }

        let mut builder = Builder::new(n);
        let mut seen = 0;
        for (line, text) in lines {
            if seen == m {
                return Err(Error::MalformedInput {
                    line,
                    message: format!("header declares {m} edges but more lines follow"),
                });
            }
            let [u, v] = parse_pair::<i64>(line, text, "edge")?;
            for label in [u, v] {
                if label < 1 || label as u64 > n as u64 {
                    return Err(Error::LabelOutOfRange { line, label, n });
                }
            }
            builder.add(line, (u - 1) as usize, (v - 1) as usize)?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::MalformedInput {
                line: text.lines().count().max(1),
                message: format!("header declares {m} edges, found {seen}"),
            });
        }
        Ok(builder.finish())
    }

    /// Canonical 1-based edge list: header, then edges with `u < v` in
    /// lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    pub fn petersen() -> Result<Self> {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner))
    }

    /// Adds `extra` isolated vertices after the existing ones.
    pub fn with_isolated(&self, extra: usize) -> Self {
        let mut adjacency = self.adjacency.clone();
        adjacency.resize(self.order() + extra, Vec::new());
        Self {
            adjacency,
            edge_count: self.edge_count,
        }
    }

    /// `n`.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// `m`.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted neighbor IDs of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|adj| adj.binary_search(&v).is_ok())
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, adj)| {
            let start = adj.partition_point(|&v| v <= u);
            adj[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_classes(&self) -> DegreeClasses {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, adj) in self.adjacency.iter().enumerate() {
            classes.entry(adj.len()).or_default().push(v);
        }
        DegreeClasses { classes }
    }

    /// General first Zagreb index `Σ_v deg(v)^alpha`, with `0^0 = 1`.
    pub fn zagreb(&self, alpha: u32) -> BigUint {
        self.degree_classes()
            .iter()
            .map(|(k, vs)| BigUint::from(vs.len()) * Pow::pow(BigUint::from(k), alpha))
            .fold(BigUint::zero(), |acc, x| acc + x)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.order() && self.is_connected()
    }

    /// Number of degree-1 vertices.
    pub fn leaf_count(&self) -> usize {
        self.adjacency.iter().filter(|adj| adj.len() == 1).count()
    }
}

/// Validates an `alpha` coming from user input.
pub fn exponent(alpha: i64) -> Result<u32> {
    if alpha < 0 {
        return Err(Error::NegativeExponent(alpha));
    }
    u32::try_from(alpha).map_err(|_| Error::MalformedInput {
        line: 0,
        message: format!("exponent {alpha} too large"),
    })
}

/// Product of `base` over `exp` factors, via repeated multiplication.
pub(crate) fn big_pow(base: usize, exp: usize) -> BigUint {
    let base = BigUint::from(base);
    let mut acc = BigUint::one();
    for _ in 0..exp {
        acc *= &base;
    }
    acc
}

struct Builder {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Builder {
    fn new(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    fn add(&mut self, line: usize, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop { line, label: u + 1 });
        }
        if self.adjacency[u].contains(&v) {
            return Err(Error::DuplicateEdge {
                line,
                u: u + 1,
                v: v + 1,
            });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    fn finish(mut self) -> BaseGraph {
        for adj in &mut self.adjacency {
            adj.sort_unstable();
        }
        BaseGraph {
            adjacency: self.adjacency,
            edge_count: self.edge_count,
        }
    }
}

fn parse_pair<T: std::str::FromStr>(line: usize, text: &str, what: &str) -> Result<[T; 2]> {
    let malformed = |message: String| Error::MalformedInput { line, message };
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(malformed(format!(
            "{what} must have 2 fields, found {}",
            tokens.len()
        )));
    }
    let parse = |tok: &str| {
        tok.parse::<T>()
            .map_err(|_| malformed(format!("invalid integer {tok:?} in {what}")))
    };
    Ok([parse(tokens[0])?, parse(tokens[1])?])
}
