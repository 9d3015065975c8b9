use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use sierpinski_core::closed_form::{
    degree_histogram_closed, edge_count, geometric_sum, max_degree, min_degree, vertex_count,
    zagreb_closed,
};
use sierpinski_core::verify::histogram_bruteforce;
use sierpinski_core::{BaseGraph, DegreeHistogram, SierpinskiParams, Word};

/// Simple graphs on 2..=6 vertices from an edge mask over the upper triangle.
fn small_graph() -> impl Strategy<Value = BaseGraph> {
    (2usize..=6, any::<u16>()).prop_map(|(n, mask)| {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges = pairs
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e);
        BaseGraph::from_edges(n, edges).unwrap()
    })
}

/// `(G, t)` with `n^t <= 5_000`.
fn small_instance() -> impl Strategy<Value = SierpinskiParams> {
    (small_graph(), 1usize..=12).prop_map(|(g, t)| {
        let n = g.order();
        let mut t = t;
        while n.pow(t as u32) > 5_000 {
            t -= 1;
        }
        SierpinskiParams::new(g, t).unwrap()
    })
}

fn word_in(params: &SierpinskiParams) -> impl Strategy<Value = Word> {
    let n = params.base().order();
    proptest::collection::vec(0..n, params.t()).prop_map(Word::new)
}

fn instance_with_word() -> impl Strategy<Value = (SierpinskiParams, Word)> {
    small_instance().prop_flat_map(|p| {
        let w = word_in(&p);
        (Just(p), w)
    })
}

fn instance_with_two_words() -> impl Strategy<Value = (SierpinskiParams, Word, Word)> {
    small_instance().prop_flat_map(|p| {
        let (u, v) = (word_in(&p), word_in(&p));
        (Just(p), u, v)
    })
}

fn pow_by_loop(base: usize, exp: u32) -> BigUint {
    (0..exp).fold(BigUint::one(), |acc, _| acc * base)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edge_list_round_trip(g in small_graph()) {
        let text = g.to_edge_list();
        prop_assert_eq!(BaseGraph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn handshake_on_degree_classes(g in small_graph()) {
        let classes = g.degree_classes();
        let degree_sum: usize = classes.counts().iter().map(|(k, c)| k * c).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        prop_assert_eq!(classes.counts().values().sum::<usize>(), g.order());
    }

    #[test]
    fn base_zagreb_matches_vertex_fold(g in small_graph(), alpha in 0u32..8) {
        let fold = (0..g.order())
            .map(|v| pow_by_loop(g.degree(v), alpha))
            .fold(BigUint::zero(), |a, b| a + b);
        prop_assert_eq!(g.zagreb(alpha), fold);
        prop_assert_eq!(g.zagreb(0), BigUint::from(g.order()));
        prop_assert_eq!(g.zagreb(1), BigUint::from(2 * g.edge_count()));
    }

    #[test]
    fn rank_unrank_round_trip(g in small_graph(), t in 1usize..300, seed in any::<u64>()) {
        let params = SierpinskiParams::new(g, t).unwrap();
        let rank = BigUint::from(seed) * BigUint::from(seed) % params.vertex_count();
        let word = params.unrank(&rank).unwrap();
        prop_assert_eq!(word.len(), t);
        prop_assert_eq!(params.rank(&word).unwrap(), rank);
    }

    #[test]
    fn adjacency_is_symmetric((p, u, v) in instance_with_two_words()) {
        prop_assert_eq!(p.is_edge(&u, &v).unwrap(), p.is_edge(&v, &u).unwrap());
        prop_assert!(!p.is_edge(&u, &u).unwrap());
    }

    #[test]
    fn degree_agrees_with_neighborhood((p, x) in instance_with_word()) {
        let neighbors = p.neighbors(&x).unwrap();
        let degree = p.degree_of(&x).unwrap();
        prop_assert_eq!(degree, neighbors.len());
        for y in &neighbors {
            prop_assert!(p.is_edge(&x, y).unwrap());
        }
        let base_degree = p.base().degree(x.last().unwrap());
        prop_assert!(degree == base_degree || degree == base_degree + 1);
    }

    #[test]
    fn is_edge_implies_neighbor((p, u, v) in instance_with_two_words()) {
        let listed = p.neighbors(&u).unwrap().contains(&v);
        prop_assert_eq!(p.is_edge(&u, &v).unwrap(), listed);
    }

    #[test]
    fn closed_histogram_matches_census(p in small_instance()) {
        prop_assert_eq!(degree_histogram_closed(&p), histogram_bruteforce(&p).unwrap());
    }

    #[test]
    fn histogram_mass_and_handshake_for_huge_t(g in small_graph(), t in 40usize..200) {
        let p = SierpinskiParams::new(g, t).unwrap();
        let hist = degree_histogram_closed(&p);
        prop_assert_eq!(hist.mass(), vertex_count(&p));
        prop_assert_eq!(hist.degree_sum(), edge_count(&p) * 2u32);
    }

    #[test]
    fn zagreb_matches_histogram_moments(g in small_graph(), t in 1usize..60, alpha in 0u32..=6) {
        let p = SierpinskiParams::new(g, t).unwrap();
        prop_assert_eq!(zagreb_closed(&p, alpha).unwrap(), degree_histogram_closed(&p).moment(alpha));
    }

    #[test]
    fn histogram_support_is_bounded(g in small_graph(), t in 1usize..30) {
        let p = SierpinskiParams::new(g, t).unwrap();
        let base = p.base();
        let hist = degree_histogram_closed(&p);
        let has_isolated = base.min_degree() == 0;
        for (k, _) in hist.iter() {
            let in_range = (base.min_degree()..=base.max_degree() + 1).contains(&k);
            prop_assert!(in_range || (k == 0 && has_isolated), "degree {} out of support", k);
        }
        prop_assert_eq!(hist.min_degree(), Some(min_degree(&p)));
        prop_assert_eq!(hist.max_degree(), Some(max_degree(&p)));
    }
}

#[test]
fn regular_base_specialization() {
    for r in 1..=4usize {
        for n in 3..=6usize {
            // Circulant graph: i ~ i±1, ..., i±r/2, plus the antipode when r is odd.
            if r % 2 == 1 && n % 2 == 1 || r >= n {
                continue;
            }
            let mut edges = Vec::new();
            for i in 0..n {
                for s in 1..=r / 2 {
                    edges.push((i, (i + s) % n));
                }
                if r % 2 == 1 && i < n / 2 {
                    edges.push((i, i + n / 2));
                }
            }
            let g = BaseGraph::from_edges(n, edges).unwrap();
            assert_eq!(g.degree_classes().counts(), BTreeMap::from([(r, n)]));
            for t in 1..=5 {
                let p = SierpinskiParams::new(g.clone(), t).unwrap();
                let nt = pow_by_loop(n, t as u32);
                let upper = geometric_sum(n, t - 1) * (r * n);
                let expected = DegreeHistogram::from_counts([(r, &nt - &upper), (r + 1, upper)]);
                assert_eq!(degree_histogram_closed(&p), expected, "r={r} n={n} t={t}");
            }
        }
    }
}

#[test]
fn complete_base_specialization() {
    for n in 2..=7usize {
        for t in 2..=6 {
            let p = SierpinskiParams::new(BaseGraph::complete(n).unwrap(), t).unwrap();
            let nt = pow_by_loop(n, t as u32);
            let expected = DegreeHistogram::from_counts([(n - 1, BigUint::from(n)), (n, nt - n)]);
            assert_eq!(degree_histogram_closed(&p), expected);
        }
    }
}
