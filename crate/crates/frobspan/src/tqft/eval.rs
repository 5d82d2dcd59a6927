//! Evaluation of normal cospans in a commutative Frobenius algebra.
//!
//! Each open component with `m` in-ports, `n` out-ports, and Betti number
//! `g` evaluates to `comult^(n) . H^g . mult^(m)`, where `H` is the handle
//! operator, `mult^(0)` is the unit, and `comult^(0)` is the counit. Closed
//! components of Betti number `g` contribute the scalar `counit(H^g(1))`.
//! The morphism as a whole is the tensor product of the component maps,
//! conjugated by the basis permutations that route the ports, and scaled by
//! the closed-component scalars.

use super::algebra::FrobeniusAlgebra;
use super::linmap::{LinearMap, Rat};
use crate::normal::NormalCospan;

/// Iterated multiplication `A^(x)m -> A`; the unit for `m = 0`.
pub fn iterated_mult(algebra: &FrobeniusAlgebra, m: usize) -> LinearMap {
    let d = algebra.dim();
    match m {
        0 => algebra.unit_map().clone(),
        _ => {
            let mut acc = LinearMap::identity(d);
            for _ in 1..m {
                acc = algebra.mult_map().mul(&acc.kron(&LinearMap::identity(d)));
            }
            acc
        }
    }
}

/// Iterated comultiplication `A -> A^(x)n`; the counit for `n = 0`.
pub fn iterated_comult(algebra: &FrobeniusAlgebra, n: usize) -> LinearMap {
    let d = algebra.dim();
    match n {
        0 => algebra.counit_map().clone(),
        _ => {
            let mut acc = LinearMap::identity(d);
            for _ in 1..n {
                acc = acc.kron(&LinearMap::identity(d)).mul(algebra.comult_map());
            }
            acc
        }
    }
}

/// The scalar assigned to a closed component: `counit(H^g(1))`.
pub fn closed_scalar(algebra: &FrobeniusAlgebra, genus: usize) -> Rat {
    let mut state = algebra.unit_map().clone();
    let handle = algebra.handle_operator();
    for _ in 0..genus {
        state = handle.mul(&state);
    }
    algebra.counit_map().mul(&state)[(0, 0)].clone()
}

/// Evaluate a normal cospan to a `d^cod x d^dom` matrix.
pub fn eval_normal_cospan(cospan: &NormalCospan, algebra: &FrobeniusAlgebra) -> LinearMap {
    let d = algebra.dim();
    let handle = algebra.handle_operator();

    // tensor product of the per-component maps, components in canonical order
    let mut block = LinearMap::identity(1);
    for c in cospan.open_components() {
        let mut map = iterated_mult(algebra, c.in_ports.len());
        for _ in 0..c.betti {
            map = handle.mul(&map);
        }
        map = iterated_comult(algebra, c.out_ports.len()).mul(&map);
        block = block.kron(&map);
    }

    // route the domain factors into component-grouped order, and the
    // grouped codomain factors back to their port positions
    let gather: Vec<usize> = cospan
        .open_components()
        .iter()
        .flat_map(|c| c.in_ports.iter().copied())
        .collect();
    let scatter: Vec<usize> = cospan
        .open_components()
        .iter()
        .flat_map(|c| c.out_ports.iter().copied())
        .collect();
    // gather[p] = original position of the factor feeding grouped slot p,
    // so the input permutation sends position gather[p] to p
    let mut perm_in = vec![0usize; cospan.dom_size()];
    for (p, &src) in gather.iter().enumerate() {
        perm_in[src] = p;
    }
    let p_in = LinearMap::factor_permutation(d, &perm_in);
    // the output permutation sends grouped slot p to port scatter[p]
    let p_out = LinearMap::factor_permutation(d, &scatter);

    let mut result = p_out.mul(&block).mul(&p_in);
    for &genus in cospan.closed_components() {
        result = result.scale(&closed_scalar(algebra, genus));
    }
    result
}
