//! Closed-form h-vectors for the Gorenstein families, plus Narayana
//! numbers. Each formula is independent of the lattice-path DP and is
//! cross-checked against it in the test suites.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::diagram::{closure, v2k, Monomial};
use crate::error::{Error, Result};
use crate::hilbert::HVector;
use crate::util::binom;

/// Narayana number `N(k, i) = (1/k) binom(k, i) binom(k, i-1)`, the
/// number of Dyck paths of length `2k` with `i` peaks. Zero outside
/// `1 <= i <= k`.
pub fn narayana(k: u64, i: i64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidParameter("narayana requires k >= 1".into()));
    }
    if i < 1 || i as u64 > k {
        return Ok(Zero::zero());
    }
    let prod = binom(k as i64, i) * binom(k as i64, i - 1);
    let (q, r) = prod.div_rem(&BigUint::from(k));
    debug_assert!(r.is_zero(), "Narayana division by k is exact");
    Ok(q)
}

/// h-vector of `K[V_{2k}]`: entry `i` is `binom(k, i)^2`.
pub fn hvec_v2k(k: u64) -> Result<HVector> {
    if k == 0 {
        return Err(Error::InvalidParameter("hvec_v2k requires k >= 1".into()));
    }
    Ok(HVector::new(
        (0..=k).map(|i| binom(k as i64, i as i64).pow(2)).collect(),
    ))
}

/// h-vector of the second Veronese `K[st(x_n^2)]`: entry `i` is
/// `binom(n, 2i)`. Palindromic exactly when `n` is even.
pub fn hvec_veronese(n: u64) -> Result<HVector> {
    if n == 0 {
        return Err(Error::InvalidParameter("hvec_veronese requires n >= 1".into()));
    }
    Ok(HVector::new(
        (0..=n / 2).map(|i| binom(n as i64, 2 * i as i64)).collect(),
    ))
}

/// h-vector of `K[V_{2k} ∪ st(x_j^2)]` for `k+1 <= j <= 2k`, computed
/// by the incremental recursion: going from `j-1` to `j` adds, at
/// index `i`, `sum binom(2(j-k-1), 2i_1+1) * N(2k-j+1, i_2)` over
/// `i_1 + i_2 = i` with `0 <= i_1 <= j-k-2` and `1 <= i_2 <= 2k-j+1`.
pub fn hvec_v2k_square(k: u64, j: u64) -> Result<HVector> {
    if k == 0 || j < k + 1 || j > 2 * k {
        return Err(Error::InvalidParameter(format!(
            "hvec_v2k_square needs k+1 <= j <= 2k, got k={}, j={}",
            k, j
        )));
    }
    let mut entries: Vec<BigUint> = hvec_v2k(k)?.entries().to_vec();
    for step_j in (k + 2)..=j {
        let half = (step_j - k - 1) as i64; // j - k - 1 for this step
        let nara_k = 2 * k as i64 - step_j as i64 + 1; // 2k - j + 1
        for (i, entry) in entries.iter_mut().enumerate() {
            let mut add: BigUint = Zero::zero();
            for i1 in 0..=(half - 1).max(0) {
                let i2 = i as i64 - i1;
                if i2 < 1 || i2 > nara_k {
                    continue;
                }
                add += binom(2 * half, 2 * i1 + 1) * narayana(nara_k as u64, i2)?;
            }
            *entry += add;
        }
    }
    Ok(HVector::new(entries))
}

/// h-vector of `K[st(x_2 x_{2k}, x_{2k-1}^2)]`: entry `i` is
/// `binom(2k-1, 2i) + binom(2k-2, 2i-2)`.
pub fn hvec_hook(k: u64) -> Result<HVector> {
    if k < 2 {
        return Err(Error::InvalidParameter("hvec_hook requires k >= 2".into()));
    }
    Ok(HVector::new(
        (0..=k)
            .map(|i| {
                binom(2 * k as i64 - 1, 2 * i as i64) + binom(2 * k as i64 - 2, 2 * i as i64 - 2)
            })
            .collect(),
    ))
}

/// h-vector of `K[V_{2k} ∪ st(x_a x_{2k+3-a})]` for `3 <= a <= k+1`:
/// the `V_{2k}` numerator plus the convolution of
/// `(binom(k-a+1, j)^2)_j` with `(N(a-2, m))_m`.
pub fn hvec_onebox(k: u64, a: u64) -> Result<HVector> {
    if k < 2 || a < 3 || a > k + 1 {
        return Err(Error::InvalidParameter(format!(
            "hvec_onebox needs k >= 2 and 3 <= a <= k+1, got k={}, a={}",
            k, a
        )));
    }
    // the extension adds exactly the one box x_a x_{2k+3-a}
    let base = v2k(k as usize)?;
    let extra = Monomial::new(a as usize, (2 * k + 3 - a) as usize);
    let mut gens = crate::diagram::borel_generators(&base);
    gens.push(extra);
    let extended = closure(&gens)?;
    assert_eq!(
        extended.box_count(),
        base.box_count() + 1,
        "V_2k ∪ st({}) must add a single box",
        extra
    );

    let mut entries: Vec<BigUint> = hvec_v2k(k)?.entries().to_vec();
    let sq_deg = k as i64 - a as i64 + 1;
    for jj in 0..=sq_deg {
        let left = binom(sq_deg, jj).pow(2);
        for m in 1..=(a as i64 - 2) {
            let idx = (jj + m) as usize;
            if idx < entries.len() {
                entries[idx] += &left * narayana(a - 2, m)?;
            }
        }
    }
    Ok(HVector::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::catalan;
    use num_traits::One;

    #[test]
    fn narayana_examples() {
        for k in 1..=10u64 {
            assert_eq!(narayana(k, 1).unwrap(), One::one());
        }
        assert_eq!(narayana(3, 2).unwrap(), BigUint::from(3u32));
        let total: BigUint = (1..=4).map(|i| narayana(4, i).unwrap()).sum();
        assert_eq!(total, BigUint::from(14u32));
        assert_eq!(total, catalan(4));
        assert_eq!(narayana(5, 0).unwrap(), Zero::zero());
        assert_eq!(narayana(5, 6).unwrap(), Zero::zero());
        assert!(narayana(0, 1).is_err());
    }

    #[test]
    fn narayana_symmetry() {
        for k in 1..=25u64 {
            for i in 1..=k as i64 {
                assert_eq!(
                    narayana(k, i).unwrap(),
                    narayana(k, k as i64 - i + 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn hvec_v2k_examples() {
        assert_eq!(hvec_v2k(1).unwrap(), HVector::from_u64(&[1, 1]));
        assert_eq!(hvec_v2k(2).unwrap(), HVector::from_u64(&[1, 4, 1]));
        assert_eq!(
            hvec_v2k(5).unwrap(),
            HVector::from_u64(&[1, 25, 100, 100, 25, 1])
        );
    }

    #[test]
    fn hvec_veronese_examples() {
        assert_eq!(hvec_veronese(2).unwrap(), HVector::from_u64(&[1, 1]));
        assert_eq!(hvec_veronese(4).unwrap(), HVector::from_u64(&[1, 6, 1]));
        assert_eq!(hvec_veronese(6).unwrap(), HVector::from_u64(&[1, 15, 15, 1]));
    }

    #[test]
    fn hvec_v2k_square_examples() {
        assert_eq!(hvec_v2k_square(3, 4).unwrap(), HVector::from_u64(&[1, 9, 9, 1]));
        assert_eq!(hvec_v2k_square(3, 5).unwrap(), HVector::from_u64(&[1, 11, 11, 1]));
        assert_eq!(hvec_v2k_square(3, 6).unwrap(), hvec_veronese(6).unwrap());
        assert!(hvec_v2k_square(3, 3).is_err());
        assert!(hvec_v2k_square(3, 7).is_err());
    }

    #[test]
    fn hvec_hook_examples() {
        assert_eq!(hvec_hook(2).unwrap(), hvec_v2k(2).unwrap());
        assert_eq!(hvec_hook(4).unwrap(), HVector::from_u64(&[1, 22, 50, 22, 1]));
        assert_eq!(
            hvec_hook(5).unwrap(),
            HVector::from_u64(&[1, 37, 154, 154, 37, 1])
        );
        assert!(hvec_hook(1).is_err());
    }

    #[test]
    fn hvec_onebox_examples() {
        assert_eq!(hvec_onebox(2, 3).unwrap(), HVector::from_u64(&[1, 5, 1]));
        assert_eq!(hvec_onebox(3, 3).unwrap(), HVector::from_u64(&[1, 10, 10, 1]));
        assert_eq!(
            hvec_onebox(5, 5).unwrap(),
            HVector::from_u64(&[1, 26, 104, 104, 26, 1])
        );
        assert!(hvec_onebox(3, 2).is_err());
        assert!(hvec_onebox(3, 5).is_err());
    }

    #[test]
    fn families_are_palindromic() {
        for k in 1..=7u64 {
            assert!(hvec_v2k(k).unwrap().is_symmetric());
            for j in (k + 1)..=(2 * k) {
                assert!(hvec_v2k_square(k, j).unwrap().is_symmetric());
            }
        }
        for k in 2..=7u64 {
            assert!(hvec_hook(k).unwrap().is_symmetric());
            for a in 3..=(k + 1) {
                assert!(hvec_onebox(k, a).unwrap().is_symmetric());
            }
        }
        // n = 1 degenerates to (1), which is trivially symmetric
        assert_eq!(hvec_veronese(1).unwrap(), HVector::from_u64(&[1]));
        for n in 2..=12u64 {
            assert_eq!(hvec_veronese(n).unwrap().is_symmetric(), n % 2 == 0);
        }
    }
}
