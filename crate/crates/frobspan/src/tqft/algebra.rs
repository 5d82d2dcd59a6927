//! Finite-dimensional commutative Frobenius algebras over the rationals.
//!
//! An algebra is given by structure constants for the multiplication, a
//! unit vector, and a counit functional. The comultiplication is never
//! user-supplied: it is derived from the inverse of the nondegenerate
//! pairing, which makes the Frobenius relation hold by construction.
//!
//! Definition file format (whitespace-separated tokens, `#` line comments):
//!
//! ```text
//! dim 2
//! unit 1 0
//! counit 0 1
//! mult 1 0  0 1  0 1  0 0
//! ```
//!
//! `mult` lists the d^3 constants `m[i][j][k]` (meaning `e_i * e_j =
//! sum_k m[i][j][k] e_k`) with `k` fastest, then `j`, then `i`. Rationals
//! are written `p/q` or as an integer `p`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use super::linmap::{format_rat, LinearMap, Rat};

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("{field}{index}: invalid rational '{token}'")]
    BadRational {
        field: &'static str,
        index: String,
        token: String,
    },
    #[error("{field}: expected {expected} values, found {found}")]
    WrongCount {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("missing field '{0}'")]
    MissingField(&'static str),
    #[error("duplicate field '{0}'")]
    DuplicateField(&'static str),
    #[error("unknown field '{0}'")]
    UnknownField(String),
    #[error("dim must be at least 1")]
    ZeroDim,
    #[error("algebra axioms violated:\n{0}")]
    Invalid(ValidationReport),
    #[error("degenerate pairing: the Frobenius form is not invertible")]
    DegeneratePairing,
}

/// Result of checking the commutative-Frobenius axioms on raw structure
/// constants. Every failed identity is listed with its indices.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            write!(f, "valid")
        } else {
            write!(f, "{}", self.failures.join("\n"))
        }
    }
}

/// Raw algebra data as read from a definition file, before validation.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub dim: usize,
    /// `m[i][j][k]`, flat with `k` fastest.
    pub mult: Vec<Rat>,
    pub unit: Vec<Rat>,
    pub counit: Vec<Rat>,
}

impl AlgebraData {
    pub fn mult_const(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }
}

/// A validated commutative Frobenius algebra with derived comultiplication.
#[derive(Debug, Clone)]
pub struct FrobeniusAlgebra {
    data: AlgebraData,
    /// Multiplication as a d x d^2 matrix (column index `i*d + j`).
    mult_map: LinearMap,
    /// Comultiplication as a d^2 x d matrix (row index `i*d + j`).
    comult_map: LinearMap,
    unit_map: LinearMap,
    counit_map: LinearMap,
}

/// Check associativity, commutativity, the unit laws, and invertibility of
/// the pairing `beta[i][j] = counit(e_i * e_j)`.
pub fn validate_algebra(data: &AlgebraData) -> ValidationReport {
    let d = data.dim;
    let mut report = ValidationReport::default();
    if d == 0 {
        report.failures.push("dim is zero".to_string());
        return report;
    }

    // commutativity: m[i][j][k] = m[j][i][k]
    for i in 0..d {
        for j in (i + 1)..d {
            for k in 0..d {
                if data.mult_const(i, j, k) != data.mult_const(j, i, k) {
                    report.failures.push(format!(
                        "commutativity fails: m[{i}][{j}][{k}] = {} but m[{j}][{i}][{k}] = {}",
                        format_rat(data.mult_const(i, j, k)),
                        format_rat(data.mult_const(j, i, k))
                    ));
                }
            }
        }
    }

    // associativity: (e_i e_j) e_k = e_i (e_j e_k), coefficient of e_n
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for n in 0..d {
                    let lhs: Rat = (0..d)
                        .map(|l| data.mult_const(i, j, l) * data.mult_const(l, k, n))
                        .sum();
                    let rhs: Rat = (0..d)
                        .map(|l| data.mult_const(j, k, l) * data.mult_const(i, l, n))
                        .sum();
                    if lhs != rhs {
                        report.failures.push(format!(
                            "associativity fails at (e{i} e{j}) e{k}, coefficient of e{n}: {} != {}",
                            format_rat(&lhs),
                            format_rat(&rhs)
                        ));
                    }
                }
            }
        }
    }

    // unit law: 1 * e_j = e_j
    for j in 0..d {
        for k in 0..d {
            let lhs: Rat = (0..d)
                .map(|i| &data.unit[i] * data.mult_const(i, j, k))
                .sum();
            let expected = if j == k { Rat::one() } else { Rat::zero() };
            if lhs != expected {
                report.failures.push(format!(
                    "unit law fails: coefficient of e{k} in 1 * e{j} is {}",
                    format_rat(&lhs)
                ));
            }
        }
    }

    if pairing(data).inverse().is_none() {
        report
            .failures
            .push("degenerate pairing: counit(e_i * e_j) is not invertible".to_string());
    }
    report
}

/// The Frobenius pairing `beta[i][j] = counit(e_i * e_j)`.
pub fn pairing(data: &AlgebraData) -> LinearMap {
    let d = data.dim;
    let mut beta = LinearMap::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            beta[(i, j)] = (0..d)
                .map(|k| data.mult_const(i, j, k) * &data.counit[k])
                .sum();
        }
    }
    beta
}

/// Derive the comultiplication from the inverse pairing:
/// `comult(a) = sum_{i,j} beta_inv[i][j] (a * e_i) (x) e_j`.
/// Returns the constants `delta[k][i][j]` (coefficient of `e_i (x) e_j`
/// in `comult(e_k)`), flat with `j` fastest.
pub fn derive_comultiplication(data: &AlgebraData) -> Result<Vec<Rat>, AlgebraError> {
    let d = data.dim;
    let beta_inv = pairing(data)
        .inverse()
        .ok_or(AlgebraError::DegeneratePairing)?;
    let mut delta = vec![Rat::zero(); d * d * d];
    for k in 0..d {
        for ii in 0..d {
            for j in 0..d {
                delta[(k * d + ii) * d + j] = (0..d)
                    .map(|i| data.mult_const(k, i, ii) * &beta_inv[(i, j)])
                    .sum();
            }
        }
    }
    Ok(delta)
}

impl FrobeniusAlgebra {
    pub fn from_data(data: AlgebraData) -> Result<Self, AlgebraError> {
        let report = validate_algebra(&data);
        if !report.is_valid() {
            return Err(AlgebraError::Invalid(report));
        }
        let d = data.dim;
        let delta = derive_comultiplication(&data)?;

        let mut mult_map = LinearMap::zeros(d, d * d);
        let mut comult_map = LinearMap::zeros(d * d, d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    mult_map[(k, i * d + j)] = data.mult_const(i, j, k).clone();
                    comult_map[(i * d + j, k)] = delta[(k * d + i) * d + j].clone();
                }
            }
        }
        let unit_map =
            LinearMap::from_entries(d, 1, data.unit.clone());
        let counit_map = LinearMap::from_entries(1, d, data.counit.clone());
        Ok(FrobeniusAlgebra {
            data,
            mult_map,
            comult_map,
            unit_map,
            counit_map,
        })
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn data(&self) -> &AlgebraData {
        &self.data
    }

    /// Multiplication as a `d x d^2` matrix.
    pub fn mult_map(&self) -> &LinearMap {
        &self.mult_map
    }

    /// Derived comultiplication as a `d^2 x d` matrix.
    pub fn comult_map(&self) -> &LinearMap {
        &self.comult_map
    }

    /// Unit as a `d x 1` column.
    pub fn unit_map(&self) -> &LinearMap {
        &self.unit_map
    }

    /// Counit as a `1 x d` row.
    pub fn counit_map(&self) -> &LinearMap {
        &self.counit_map
    }

    /// The genus operator `mult . comult` as a `d x d` matrix.
    pub fn handle_operator(&self) -> LinearMap {
        self.mult_map.mul(&self.comult_map)
    }
}

fn parse_rat(
    token: &str,
    field: &'static str,
    index: String,
) -> Result<Rat, AlgebraError> {
    let bad = || AlgebraError::BadRational {
        field,
        index: index.clone(),
        token: token.to_string(),
    };
    if let Some((n, d)) = token.split_once('/') {
        let numer: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
        let denom: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rat::new(numer, denom))
    } else {
        let numer: num_bigint::BigInt = token.parse().map_err(|_| bad())?;
        Ok(Rat::from(numer))
    }
}

/// Parse an algebra definition file.
pub fn parse_algebra(text: &str) -> Result<AlgebraData, AlgebraError> {
    let tokens: Vec<&str> = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .flat_map(|line| line.split_whitespace())
        .collect();

    let mut dim: Option<usize> = None;
    let mut mult: Option<Vec<Rat>> = None;
    let mut unit: Option<Vec<Rat>> = None;
    let mut counit: Option<Vec<Rat>> = None;

    let mut pos = 0;
    while pos < tokens.len() {
        let keyword = tokens[pos];
        pos += 1;
        match keyword {
            "dim" => {
                if dim.is_some() {
                    return Err(AlgebraError::DuplicateField("dim"));
                }
                let token = tokens.get(pos).copied().unwrap_or("");
                let d: usize = token.parse().map_err(|_| AlgebraError::BadRational {
                    field: "dim",
                    index: String::new(),
                    token: token.to_string(),
                })?;
                if d == 0 {
                    return Err(AlgebraError::ZeroDim);
                }
                dim = Some(d);
                pos += 1;
            }
            "mult" | "unit" | "counit" => {
                let field: &'static str = match keyword {
                    "mult" => "mult",
                    "unit" => "unit",
                    _ => "counit",
                };
                let d = dim.ok_or(AlgebraError::MissingField("dim"))?;
                let count = if field == "mult" { d * d * d } else { d };
                let slot = match field {
                    "mult" => &mut mult,
                    "unit" => &mut unit,
                    _ => &mut counit,
                };
                if slot.is_some() {
                    return Err(AlgebraError::DuplicateField(field));
                }
                let mut values = Vec::with_capacity(count);
                for n in 0..count {
                    let token =
                        tokens
                            .get(pos)
                            .copied()
                            .ok_or(AlgebraError::WrongCount {
                                field,
                                expected: count,
                                found: n,
                            })?;
                    let index = if field == "mult" {
                        format!("[{}][{}][{}]", n / (d * d), (n / d) % d, n % d)
                    } else {
                        format!("[{}]", n)
                    };
                    values.push(parse_rat(token, field, index)?);
                    pos += 1;
                }
                *slot = Some(values);
            }
            other => return Err(AlgebraError::UnknownField(other.to_string())),
        }
    }

    Ok(AlgebraData {
        dim: dim.ok_or(AlgebraError::MissingField("dim"))?,
        mult: mult.ok_or(AlgebraError::MissingField("mult"))?,
        unit: unit.ok_or(AlgebraError::MissingField("unit"))?,
        counit: counit.ok_or(AlgebraError::MissingField("counit"))?,
    })
}

/// The algebra definitions shipped with the crate.
pub mod builtin {
    use super::{parse_algebra, FrobeniusAlgebra};

    pub const RATIONALS: &str = include_str!("../../algebras/rationals.alg");
    pub const DUAL_NUMBERS: &str = include_str!("../../algebras/dual_numbers.alg");
    pub const SPLIT: &str = include_str!("../../algebras/split.alg");
    pub const TRUNCATED_CUBIC: &str = include_str!("../../algebras/truncated_cubic.alg");

    pub const NAMES: &[&str] = &["rationals", "dual_numbers", "split", "truncated_cubic"];

    /// Look up a shipped algebra by name.
    pub fn by_name(name: &str) -> Option<FrobeniusAlgebra> {
        let text = match name {
            "rationals" => RATIONALS,
            "dual_numbers" => DUAL_NUMBERS,
            "split" => SPLIT,
            "truncated_cubic" => TRUNCATED_CUBIC,
            _ => return None,
        };
        Some(
            FrobeniusAlgebra::from_data(parse_algebra(text).expect("shipped algebra parses"))
                .expect("shipped algebra is valid"),
        )
    }

    /// All shipped algebras, for exhaustive test sweeps.
    pub fn all() -> Vec<(&'static str, FrobeniusAlgebra)> {
        NAMES
            .iter()
            .map(|&n| (n, by_name(n).unwrap()))
            .collect()
    }
}
