//! Evaluation of cospan classes in commutative Frobenius algebras over
//! exact rationals.

pub mod algebra;
pub mod eval;
pub mod linmap;

pub use algebra::{
    builtin, derive_comultiplication, pairing, parse_algebra, validate_algebra, AlgebraData,
    AlgebraError, FrobeniusAlgebra, ValidationReport,
};
pub use eval::{closed_scalar, eval_normal_cospan, iterated_comult, iterated_mult};
pub use linmap::{format_rat, LinearMap, Rat};
