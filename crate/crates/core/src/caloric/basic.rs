use num_bigint::BigInt;
use num_traits::One;

use crate::polyring::{ExponentVector, Polynomial};
use crate::{RatPoly, Rational};

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Basic hcp `p_d(x, t)` in one space variable, normalized so the leading
/// term is `t^k` (even `d = 2k`) or `t^k x` (odd `d = 2k + 1`).
pub fn basic_hcp(d: u32) -> RatPoly {
    let k = d / 2;
    let r = d % 2;
    let kf = factorial(k);
    let terms = (0..=k).map(|j| {
        let c = Rational::new(kf.clone(), factorial(k - j) * factorial(2 * j + r));
        (ExponentVector::new(k - j, vec![2 * j + r]), c)
    });
    Polynomial::from_terms(1, terms).expect("dimension 1")
}

/// Multi-index `alpha` in `N^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<u32>,
}

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `|alpha|`
    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(entries: Vec<u32>) -> Self {
        Self::new(entries)
    }
}

/// `p_alpha(x, t) = p_{alpha_1}(x_1, t) ... p_{alpha_n}(x_n, t)`.
pub fn product_hcp(alpha: &MultiIndex) -> RatPoly {
    let n = alpha.dim();
    alpha.entries.iter().enumerate().fold(Polynomial::one(n), |acc, (i, &a)| {
        let factor = basic_hcp(a).embed(n, &[i]).expect("axis in range");
        &acc * &factor
    })
}

/// All `alpha` in `N^n` with `|alpha| = d`, in increasing lexicographic order.
pub fn multi_indices(n: usize, d: u32) -> Vec<MultiIndex> {
    fn rec(n: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(remaining);
            out.push(MultiIndex::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=remaining {
            prefix.push(a);
            rec(n, remaining - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// The product basis `{p_alpha : |alpha| = d}` of degree-`d` hcps in `R^{n+1}`.
pub fn basis(n: usize, d: u32) -> Vec<RatPoly> {
    multi_indices(n, d).iter().map(product_hcp).collect()
}

pub fn basis_with_indices(n: usize, d: u32) -> Vec<(MultiIndex, RatPoly)> {
    multi_indices(n, d).into_iter().map(|a| {
        let p = product_hcp(&a);
        (a, p)
    }).collect()
}
