//! Exact binomial helpers shared across the crate.

use num_bigint::BigUint;
use num_traits::Zero;

/// `binom(n, k)` with the standard convention that out-of-range
/// arguments give 0 (so displayed sums need no edge-case branches).
pub fn binom(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return Zero::zero();
    }
    num_integer::binomial(BigUint::from(n as u64), BigUint::from(k as u64))
}

/// `Catalan(k) = binom(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> BigUint {
    let c = binom(2 * k as i64, k as i64);
    let (q, r) = num_integer::div_rem(c, BigUint::from(k + 1));
    debug_assert!(r.is_zero());
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_edges() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert_eq!(binom(5, 0), BigUint::from(1u32));
        assert_eq!(binom(5, 6), BigUint::from(0u32));
        assert_eq!(binom(-1, 0), BigUint::from(0u32));
        assert_eq!(binom(5, -1), BigUint::from(0u32));
    }

    #[test]
    fn catalan_values() {
        let expect = [1u64, 1, 2, 5, 14, 42, 132];
        for (k, &c) in expect.iter().enumerate() {
            assert_eq!(catalan(k as u64), BigUint::from(c));
        }
    }
}
