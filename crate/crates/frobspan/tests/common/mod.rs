//! Shared helpers for the integration tests: independent oracles and
//! random-context embedding. Everything here deliberately avoids the code
//! paths under test.
//!
//! Each integration test compiles this module separately, so not every
//! helper is used from every test binary.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;

use frobspan::graph::Graph;
use frobspan::termlang::{Arity, FrobTerm};

/// Cycle rank per component by spanning-forest enumeration: run a DFS,
/// mark tree edges, and count the fundamental cycles (non-tree edges) of
/// each component. Independent of the Euler-formula route used by
/// `Graph::betti_numbers`.
pub fn cycle_rank_by_spanning_forest(g: &Graph) -> BTreeMap<usize, usize> {
    let n = g.vertex_count();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        adjacency[u].push((v, idx));
        if u != v {
            adjacency[v].push((u, idx));
        }
    }
    let mut component = vec![usize::MAX; n];
    let mut tree_edge = vec![false; g.edges().len()];
    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        // DFS from the smallest unvisited vertex, so the component id is
        // the minimum vertex index
        let mut stack = vec![root];
        component[root] = root;
        while let Some(v) = stack.pop() {
            for &(w, edge) in &adjacency[v] {
                if component[w] == usize::MAX {
                    component[w] = root;
                    tree_edge[edge] = true;
                    stack.push(w);
                }
            }
        }
    }
    let mut rank: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &component {
        rank.entry(c).or_insert(0);
    }
    for (idx, &(u, _)) in g.edges().iter().enumerate() {
        if !tree_edge[idx] {
            *rank.get_mut(&component[u]).unwrap() += 1;
        }
    }
    rank
}

/// Every multigraph with at most `max_vertices` vertices and at most
/// `max_edges` edges, up to edge-list order (edge multisets are enumerated
/// in nondecreasing order).
pub fn enumerate_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 0..=max_vertices {
        let mut edge_types = Vec::new();
        for u in 0..n {
            for v in u..n {
                edge_types.push((u, v));
            }
        }
        let mut current = Vec::new();
        enumerate_edge_multisets(&edge_types, 0, max_edges, &mut current, &mut |edges| {
            graphs.push(Graph::new(n, edges.to_vec()).unwrap());
        });
    }
    graphs
}

fn enumerate_edge_multisets(
    types: &[(usize, usize)],
    start: usize,
    remaining: usize,
    current: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    emit(current);
    if remaining == 0 {
        return;
    }
    for t in start..types.len() {
        current.push(types[t]);
        enumerate_edge_multisets(types, t, remaining - 1, current, emit);
        current.pop();
    }
}

/// Embed a term of the given arity at a random position inside a larger
/// term: whisker it with identities on both sides, then pre- and
/// post-compose with random terms whose feet match. `plug` builds the
/// composite for any term of that arity, so two axiom sides can be placed
/// into the same context.
pub fn random_context(rng: &mut impl Rng, arity: Arity) -> impl Fn(&FrobTerm) -> FrobTerm {
    use frobspan::random::{random_term, TermBounds};
    let bounds = TermBounds {
        max_depth: 4,
        max_arity: 6,
    };
    let left = rng.gen_range(0..=2);
    let right = rng.gen_range(0..=2);
    let mid_dom = left + arity.dom + right;
    let mid_cod = left + arity.cod + right;
    let mut pre = FrobTerm::Id(mid_dom);
    for _ in 0..16 {
        let candidate = random_term(rng, bounds);
        if candidate.infer_arity().unwrap().cod == mid_dom {
            pre = candidate;
            break;
        }
    }
    let mut post = FrobTerm::Id(mid_cod);
    for _ in 0..16 {
        let candidate = random_term(rng, bounds);
        if candidate.infer_arity().unwrap().dom == mid_cod {
            post = candidate;
            break;
        }
    }
    move |t: &FrobTerm| {
        let whiskered = FrobTerm::par(
            FrobTerm::par(FrobTerm::Id(left), t.clone()),
            FrobTerm::Id(right),
        );
        FrobTerm::seq(FrobTerm::seq(pre.clone(), whiskered), post.clone())
    }
}
