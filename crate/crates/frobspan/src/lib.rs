//! Cospans of finite sets with graph apexes, composed either by homotopy
//! pushout (which tracks cycles, and therefore genus) or by strict set
//! pushout (which collapses them). Morphisms normalize to the
//! classification data of 2-cobordisms — components, Betti numbers, and
//! boundary assignment — with decidable equality, and evaluate in any
//! finite-dimensional commutative Frobenius algebra over exact rationals.

pub mod axioms;
pub mod cospan;
pub mod dot;
pub mod graph;
pub mod normal;
pub mod random;
pub mod termlang;
pub mod tqft;

pub use cospan::{CospanError, FinSet, Generator, GraphCospan, Semantics};
pub use graph::{Graph, GraphError};
pub use normal::{equal_normal, normalize, NormalCospan, NormalError, OpenComponent};
pub use termlang::{parse, Arity, FrobTerm, TermError};
pub use tqft::{eval_normal_cospan, FrobeniusAlgebra, LinearMap, Rat};
