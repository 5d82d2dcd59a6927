//! Seeded random generators for terms and cospans.
//!
//! Property tests and the axiom checker draw from these; pass a
//! `rand_chacha::ChaCha8Rng` seeded explicitly to make runs reproducible.

use rand::Rng;

use crate::cospan::GraphCospan;
use crate::graph::Graph;
use crate::termlang::FrobTerm;

/// Bounds for [`random_term`].
#[derive(Debug, Clone, Copy)]
pub struct TermBounds {
    pub max_depth: usize,
    pub max_arity: usize,
}

impl Default for TermBounds {
    fn default() -> Self {
        TermBounds {
            max_depth: 8,
            max_arity: 6,
        }
    }
}

fn random_leaf(rng: &mut impl Rng, max_arity: usize) -> FrobTerm {
    match rng.gen_range(0..7) {
        0 => FrobTerm::Mult,
        1 => FrobTerm::Unit,
        2 => FrobTerm::Comult,
        3 => FrobTerm::Counit,
        4 => FrobTerm::Swap,
        5 => FrobTerm::Id(1),
        _ => FrobTerm::Id(rng.gen_range(0..=max_arity.min(3))),
    }
}

/// A random well-typed term. Composition and tensor are drawn 50/50; a
/// composition whose feet fail to match is retried a few times and then
/// bridged with an identity.
pub fn random_term(rng: &mut impl Rng, bounds: TermBounds) -> FrobTerm {
    let term = random_term_inner(rng, bounds.max_depth, bounds.max_arity);
    debug_assert!(term.infer_arity().is_ok());
    term
}

fn random_term_inner(rng: &mut impl Rng, depth: usize, max_arity: usize) -> FrobTerm {
    if depth == 0 || rng.gen_bool(0.3) {
        return random_leaf(rng, max_arity);
    }
    if rng.gen_bool(0.5) {
        // composition: retry the right factor until the feet match
        let left = random_term_inner(rng, depth - 1, max_arity);
        let left_cod = left.infer_arity().expect("generated terms are well-typed").cod;
        for _ in 0..8 {
            let right = random_term_inner(rng, depth - 1, max_arity);
            let right_arity = right.infer_arity().expect("generated terms are well-typed");
            if right_arity.dom == left_cod && right_arity.cod <= max_arity {
                return FrobTerm::seq(left, right);
            }
        }
        FrobTerm::seq(left, FrobTerm::Id(left_cod))
    } else {
        let left = random_term_inner(rng, depth - 1, max_arity);
        let la = left.infer_arity().expect("generated terms are well-typed");
        let right = random_term_inner(rng, depth - 1, max_arity);
        let ra = right.infer_arity().expect("generated terms are well-typed");
        if la.dom + ra.dom > max_arity || la.cod + ra.cod > max_arity {
            return left;
        }
        FrobTerm::par(left, right)
    }
}

/// A composable pair of random terms (the codomain of the first equals the
/// domain of the second), padding the narrower side with an identity when
/// the sampled arities disagree.
pub fn random_composable_terms(rng: &mut impl Rng, bounds: TermBounds) -> (FrobTerm, FrobTerm) {
    let first = random_term(rng, bounds);
    let mid = first.infer_arity().unwrap().cod;
    for _ in 0..16 {
        let second = random_term(rng, bounds);
        if second.infer_arity().unwrap().dom == mid {
            return (first, second);
        }
    }
    (first, FrobTerm::Id(mid))
}

/// Bounds for [`random_cospan`].
#[derive(Debug, Clone, Copy)]
pub struct CospanBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_feet: usize,
}

impl Default for CospanBounds {
    fn default() -> Self {
        CospanBounds {
            max_vertices: 8,
            max_edges: 10,
            max_feet: 4,
        }
    }
}

/// A random cospan with the given foot sizes. The apex always has at least
/// one vertex when a leg needs a target.
pub fn random_cospan_with_feet(
    rng: &mut impl Rng,
    dom: usize,
    cod: usize,
    bounds: CospanBounds,
) -> GraphCospan {
    let min_vertices = usize::from(dom + cod > 0);
    let vertices = rng.gen_range(min_vertices..=bounds.max_vertices.max(min_vertices));
    let edge_count = if vertices == 0 {
        0
    } else {
        rng.gen_range(0..=bounds.max_edges)
    };
    let edges: Vec<(usize, usize)> = (0..edge_count)
        .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
        .collect();
    let apex = Graph::new(vertices, edges).expect("endpoints are sampled in range");
    let leg_in = (0..dom).map(|_| rng.gen_range(0..vertices)).collect();
    let leg_out = (0..cod).map(|_| rng.gen_range(0..vertices)).collect();
    GraphCospan::new(apex, leg_in, leg_out).expect("legs are sampled in range")
}

pub fn random_cospan(rng: &mut impl Rng, bounds: CospanBounds) -> GraphCospan {
    let dom = rng.gen_range(0..=bounds.max_feet);
    let cod = rng.gen_range(0..=bounds.max_feet);
    random_cospan_with_feet(rng, dom, cod, bounds)
}

/// A composable pair of random cospans sharing a random middle foot.
pub fn random_composable_cospans(
    rng: &mut impl Rng,
    bounds: CospanBounds,
) -> (GraphCospan, GraphCospan) {
    let dom = rng.gen_range(0..=bounds.max_feet);
    let mid = rng.gen_range(0..=bounds.max_feet);
    let cod = rng.gen_range(0..=bounds.max_feet);
    (
        random_cospan_with_feet(rng, dom, mid, bounds),
        random_cospan_with_feet(rng, mid, cod, bounds),
    )
}
