//! Dense matrices over exact rationals.
//!
//! Tensor (Kronecker) products use the lexicographic basis convention with
//! the leftmost factor most significant; port permutations below are basis
//! permutations of that order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl LinearMap {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        LinearMap {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// 1x1 matrix holding a scalar.
    pub fn scalar(value: Rat) -> Self {
        LinearMap {
            rows: 1,
            cols: 1,
            entries: vec![value],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = LinearMap::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product, leftmost factor most significant.
    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = &other[(p, q)];
                        if !b.is_zero() {
                            out[(i * other.rows + p, j * other.cols + q)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<LinearMap> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = LinearMap::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(col * n + j, pivot * n + j);
                    inv.entries.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= p.clone();
                inv[(col, j)] /= p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..n {
                    let t = &factor * &a[(col, j)];
                    a[(r, j)] -= t;
                    let t = &factor * &inv[(col, j)];
                    inv[(r, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    /// Permutation of `k` tensor factors of dimension `d` each: the factor
    /// at input position `p` moves to output position `perm[p]`.
    pub fn factor_permutation(d: usize, perm: &[usize]) -> LinearMap {
        let k = perm.len();
        let size = d.pow(k as u32);
        let mut out = LinearMap::zeros(size, size);
        for col in 0..size {
            let digits = to_digits(col, d, k);
            let mut row_digits = vec![0usize; k];
            for (p, &dest) in perm.iter().enumerate() {
                row_digits[dest] = digits[p];
            }
            out[(from_digits(&row_digits, d), col)] = Rat::one();
        }
        out
    }

    /// Render as rows of space-separated rationals.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format_rat(&self[(i, j)]))
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Big-endian digit expansion: leftmost factor most significant.
pub fn to_digits(mut index: usize, d: usize, k: usize) -> Vec<usize> {
    let mut digits = vec![0usize; k];
    for p in (0..k).rev() {
        digits[p] = index % d;
        index /= d;
    }
    digits
}

pub fn from_digits(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

impl std::ops::Index<(usize, usize)> for LinearMap {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LinearMap {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        let cols = self.cols;
        &mut self.entries[i * cols + j]
    }
}
