//! Named base graphs used by the oracle suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::base_graph::BaseGraph;
use crate::sierpinski::SierpinskiParams;

/// Seed for [`random_graphs`] in the standard corpus.
pub const RANDOM_SEED: u64 = 0x5151_2017;
pub const RANDOM_COUNT: usize = 20;

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: BaseGraph,
}

impl CorpusGraph {
    fn new(name: impl Into<String>, graph: BaseGraph) -> Self {
        Self {
            name: name.into(),
            graph,
        }
    }
}

/// Trees in the corpus: `P_2..P_5` and `K_{1,2}..K_{1,4}`.
pub fn trees() -> Vec<CorpusGraph> {
    let paths = (2..=5).map(|n| CorpusGraph::new(format!("P{n}"), BaseGraph::path(n).unwrap()));
    let stars = (2..=4).map(|k| CorpusGraph::new(format!("K1,{k}"), BaseGraph::star(k).unwrap()));
    paths.chain(stars).collect()
}

pub fn complete_graphs() -> Vec<CorpusGraph> {
    (2..=5)
        .map(|n| CorpusGraph::new(format!("K{n}"), BaseGraph::complete(n).unwrap()))
        .collect()
}

pub fn with_isolated_vertices() -> Vec<CorpusGraph> {
    vec![
        CorpusGraph::new("E2", BaseGraph::empty(2).unwrap()),
        CorpusGraph::new("E3", BaseGraph::empty(3).unwrap()),
        CorpusGraph::new("K2+K1", BaseGraph::complete(2).unwrap().with_isolated(1)),
        CorpusGraph::new("P3+K1", BaseGraph::path(3).unwrap().with_isolated(1)),
        CorpusGraph::new("K3+2K1", BaseGraph::complete(3).unwrap().with_isolated(2)),
        CorpusGraph::new("C4+K1", BaseGraph::cycle(4).unwrap().with_isolated(1)),
    ]
}

/// `count` simple graphs with `2 <= n <= 6`, each pair joined with probability 1/2.
pub fn random_graphs(seed: u64, count: usize) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=6);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let graph = BaseGraph::from_edges(n, edges).unwrap();
            CorpusGraph::new(format!("R{i}(n={n},m={})", graph.edge_count()), graph)
        })
        .collect()
}

/// Paths, cycles, stars, complete graphs, Petersen, graphs with isolated
/// vertices and the seeded random graphs.
pub fn standard_corpus() -> Vec<CorpusGraph> {
    let mut corpus = trees();
    corpus.extend((3..=6).map(|n| CorpusGraph::new(format!("C{n}"), BaseGraph::cycle(n).unwrap())));
    corpus.extend(complete_graphs());
    corpus.push(CorpusGraph::new("Petersen", BaseGraph::petersen().unwrap()));
    corpus.extend(with_isolated_vertices());
    corpus.extend(random_graphs(RANDOM_SEED, RANDOM_COUNT));
    corpus
}

/// Every `t >= 1` with `n^t <= max_vertices`.
pub fn dimensions(graph: &BaseGraph, max_vertices: u64) -> Vec<usize> {
    let n = graph.order() as u64;
    std::iter::successors(Some(n), |v| v.checked_mul(n))
        .take_while(|&v| v <= max_vertices)
        .enumerate()
        .map(|(i, _)| i + 1)
        .collect()
}

/// All `(name, S(G,t))` pairs from `graphs` with `n^t <= max_vertices`.
pub fn instances(graphs: &[CorpusGraph], max_vertices: u64) -> Vec<(String, SierpinskiParams)> {
    graphs
        .iter()
        .flat_map(|g| {
            dimensions(&g.graph, max_vertices).into_iter().map(|t| {
                let params = SierpinskiParams::new(g.graph.clone(), t)
                    .and_then(|p| p.with_cap(max_vertices.max(1)))
                    .unwrap();
                (g.name.clone(), params)
            })
        })
        .collect()
}
