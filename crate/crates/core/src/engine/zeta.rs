//! Genus from point counts alone.
//!
//! With `S_k = q^k + 1 − N_k = Σ α_i^k`, Newton's identities give the
//! coefficients `a_1, …, a_g` of `L(T) = Σ a_j T^j`; the functional
//! equation `a_{2g−j} = q^{g−j} a_j` supplies the rest, and the remaining
//! counts must then be reproduced exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The L-polynomial of genus `g` matching the first `g` counts, if its
/// coefficients are integral and within the Weil bounds.
pub fn l_polynomial(q: u64, counts: &[u64], g: usize) -> Option<Vec<BigInt>> {
    if counts.len() < g {
        return None;
    }
    let qb = BigInt::from(q);
    let s: Vec<BigInt> = (1..=g).map(|k| qb.pow(k as u32) + 1 - BigInt::from(counts[k - 1])).collect();
    let mut a = vec![BigInt::one()];
    for j in 1..=g {
        // j a_j = −Σ_{i=1}^{j} S_i a_{j−i}
        let acc: BigInt = (1..=j).map(|i| &s[i - 1] * &a[j - i]).sum();
        let (quot, rem) = (-acc).div_rem(&BigInt::from(j));
        if !rem.is_zero() {
            return None;
        }
        a.push(quot);
    }
    for j in g + 1..=2 * g {
        let v = &a[2 * g - j] * qb.pow((j - g) as u32);
        a.push(v);
    }
    // |a_j| ≤ C(2g, j) q^{j/2}, compared after squaring
    for (j, c) in a.iter().enumerate() {
        let binom = binomial(2 * g, j);
        if c * c > &binom * &binom * qb.pow(j as u32) {
            return None;
        }
    }
    Some(a)
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Power sums `S_1, …, S_K` of the inverse roots of `L`.
pub fn power_sums(a: &[BigInt], kmax: usize) -> Vec<BigInt> {
    let deg = a.len() - 1;
    let mut s: Vec<BigInt> = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        // S_k = −k a_k − Σ_{i=1}^{k−1} a_i S_{k−i}, with a_i = 0 beyond deg
        let coeff = |i: usize| if i <= deg { a[i].clone() } else { BigInt::zero() };
        let mut v = -BigInt::from(k) * coeff(k);
        for i in 1..k {
            v -= coeff(i) * &s[k - i - 1];
        }
        s.push(v);
    }
    s
}

/// Smallest `g ≤ max_genus` whose L-polynomial reproduces every count.
/// Only genera with `g < counts.len()` can be certified, since the last
/// `counts.len() − g` counts are the check.
pub fn genus_zeta_fit(q: u64, counts: &[u64], max_genus: usize) -> Result<i64> {
    let qb = BigInt::from(q);
    let kmax = counts.len();
    for g in 0..=max_genus.min(kmax.saturating_sub(1)) {
        let Some(a) = l_polynomial(q, counts, g) else { continue };
        let s = power_sums(&a, kmax);
        let ok = (1..=kmax).all(|k| qb.pow(k as u32) + 1 - &s[k - 1] == BigInt::from(counts[k - 1]));
        if ok {
            return Ok(g as i64);
        }
    }
    Err(Error::InconsistentCounts(max_genus))
}

/// `|N_1 − (q + 1)| ≤ 2 g √q`.
pub fn weil_bound_holds(q: u64, n1: u64, g: i64) -> bool {
    let dev = (n1 as i128 - q as i128 - 1).abs();
    let lhs = BigInt::from(dev) * BigInt::from(dev);
    let rhs = BigInt::from(4 * g as i128 * g as i128) * BigInt::from(q);
    lhs <= rhs && !lhs.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts_of(q: u64, alphas_sum: impl Fn(u32) -> i128, k: usize) -> Vec<u64> {
        (1..=k as u32).map(|j| (q.pow(j) as i128 + 1 - alphas_sum(j)) as u64).collect()
    }

    #[test]
    fn rational_curve() {
        let n: Vec<u64> = (1..=4).map(|k| 13u64.pow(k) + 1).collect();
        assert_eq!(genus_zeta_fit(13, &n, 5), Ok(0));
    }

    #[test]
    fn elliptic_curve() {
        // y² = x³ − x over F_5 has 8 points: L = 1 + 2T + 5T²
        let a = vec![BigInt::from(1), BigInt::from(2), BigInt::from(5)];
        let s = power_sums(&a, 4);
        let n: Vec<u64> = (1..=4).map(|k| (5i64.pow(k) + 1 - i64::try_from(&s[k as usize - 1]).unwrap()) as u64).collect();
        assert_eq!(n[0], 8);
        assert_eq!(genus_zeta_fit(5, &n, 5), Ok(1));
    }

    #[test]
    fn supersingular_genus_two() {
        // L = (1 + q T²)², every α = ±i√q
        let q = 7u64;
        let n = counts_of(q, |k| if k % 2 == 1 { 0 } else { 4 * (-(q as i128)).pow(k / 2) }, 5);
        assert_eq!(genus_zeta_fit(q, &n, 4), Ok(2));
    }

    #[test]
    fn garbage_is_rejected() {
        assert_eq!(genus_zeta_fit(13, &[3, 5, 7], 2), Err(Error::InconsistentCounts(2)));
    }

    #[test]
    fn weil() {
        assert!(weil_bound_holds(13, 14 + 7, 1));
        assert!(!weil_bound_holds(13, 14 + 8, 1));
    }
}
