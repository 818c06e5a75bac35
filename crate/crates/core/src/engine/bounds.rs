//! Upper-bound formulas, search-size caps and enumeration volumes.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `log₂ x`, taken as 0 for `x <= 1`.
fn log2_or_zero(x: f64) -> f64 {
    if x <= 1.0 {
        0.0
    } else {
        libm::log2(x)
    }
}

/// Strict bound for every graph of order `n`: `δ_loc < 3n/8 + log₂ n`.
pub fn upper_bound_general(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    Ok(3.0 * n as f64 / 8.0 + libm::log2(n as f64))
}

/// Strict bound for bipartite graphs of order `n`: `δ_loc < n/4 + log₂ n`.
pub fn upper_bound_bipartite(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    Ok(n as f64 / 4.0 + libm::log2(n as f64))
}

/// Non-strict bound from a vertex cover of size `c`:
/// `δ_loc <= (c + log₂ c + 1) / 2`.
pub fn vertex_cover_bound(c: usize) -> Result<f64> {
    if c == 0 {
        return Err(Error::InvalidOrder);
    }
    Ok((c as f64 + libm::log2(c as f64) + 1.0) / 2.0)
}

/// Largest cut size the general search needs: `⌊3n/8 + log₂ n⌋ + 1`, or the
/// whole range below 8 vertices.
pub fn general_size_cap(n: usize) -> usize {
    if n < 8 {
        return n;
    }
    let cap = libm::floor(3.0 * n as f64 / 8.0 + log2_or_zero(n as f64)) as usize + 1;
    cap.min(n)
}

/// Largest one-sided set the bipartite search needs, with `m` the smaller
/// side: `⌊m/2 + log₂(m)/2⌋ + 1`, capped at the larger side.
pub fn bipartite_size_cap(n1: usize, n2: usize) -> usize {
    let m = n1.min(n2) as f64;
    let cap = libm::floor(m / 2.0 + log2_or_zero(m) / 2.0) as usize + 1;
    cap.min(n1.max(n2))
}

/// `H(x) = -x log₂ x - (1-x) log₂(1-x)`.
pub fn binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * libm::log2(p) };
    term(x) + term(1.0 - x)
}

/// `Σ_{s=1..smax} C(n, s)`, exact. `smax` is clamped to `n`.
pub fn enumeration_count(n: usize, smax: usize) -> BigUint {
    let mut total = BigUint::zero();
    let mut c = BigUint::one();
    for s in 1..=smax.min(n) {
        c = c * BigUint::from(n - s + 1) / BigUint::from(s);
        total += &c;
    }
    total
}

/// Bound values for one graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    /// `n/4 + log₂ n`, strict; applies to bipartite graphs only.
    pub bound_thm1: f64,
    /// `3n/8 + log₂ n`, strict.
    pub bound_thm2: f64,
    pub cover_size: usize,
    /// `(c + log₂ c + 1)/2`, non-strict; absent when the cover is empty.
    pub bound_lemma2: Option<f64>,
}

pub fn bound_report(n: usize, cover_size: usize) -> Result<BoundReport> {
    Ok(BoundReport {
        n,
        bound_thm1: upper_bound_bipartite(n)?,
        bound_thm2: upper_bound_general(n)?,
        cover_size,
        bound_lemma2: vertex_cover_bound(cover_size).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert_eq!(upper_bound_bipartite(4), Ok(3.0));
        assert_eq!(upper_bound_general(8), Ok(6.0));
        assert_eq!(vertex_cover_bound(1), Ok(1.0));
        assert_eq!(upper_bound_general(0), Err(Error::InvalidOrder));
        assert_eq!(upper_bound_bipartite(0), Err(Error::InvalidOrder));
        assert_eq!(vertex_cover_bound(0), Err(Error::InvalidOrder));
    }

    #[test]
    fn caps() {
        assert_eq!(general_size_cap(5), 5);
        assert_eq!(general_size_cap(8), 7);
        // 3*30/8 + log2 30 = 11.25 + 4.907
        assert_eq!(general_size_cap(30), 17);
        assert_eq!(bipartite_size_cap(2, 2), 2);
        assert_eq!(bipartite_size_cap(1, 5), 1);
        assert_eq!(bipartite_size_cap(0, 3), 1);
        assert_eq!(bipartite_size_cap(8, 12), 6);
    }

    #[test]
    fn counts() {
        assert_eq!(enumeration_count(4, 2), BigUint::from(10u32));
        for n in 0..20 {
            assert_eq!(enumeration_count(n, n), (BigUint::one() << n) - 1u32);
        }
        assert_eq!(enumeration_count(3, 9), BigUint::from(7u32));
    }

    #[test]
    fn entropy() {
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-12);
        assert!((binary_entropy(0.375) - 0.954_434).abs() < 1e-6);
        assert_eq!(binary_entropy(0.0), 0.0);
    }
}
