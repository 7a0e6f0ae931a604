//! Exact sparse polynomials in the variables `x_(i,j)` (`1 <= i < j <= f`)
//! and `t_i` (`1 <= i <= f`), bigraded by (x-degree, t-degree).

mod field;
mod monomial;
mod poly;
mod text;

pub use field::{is_prime, CoefficientField, Field, PrimeField, Rationals};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use poly::{Bidegree, PolyRing, Polynomial};
pub use text::{parse_polynomial, render_polynomial};

use serde::{Deserialize, Serialize};
use std::fmt;

/// A ring variable. Canonical order: all `X(i, j)` lexicographically by `(i, j)`,
/// then `T(1), ..., T(f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variable {
    X(usize, usize),
    T(usize),
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::X(i, j) => write!(f, "x_({i},{j})"),
            Variable::T(i) => write!(f, "t_{i}"),
        }
    }
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
