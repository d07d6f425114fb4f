//! Squarefree decomposition and root extraction.
//!
//! Roots in Q(√3) are found by p-adic lifting: for a prime `p ≡ ±1 (mod 12)`
//! the two embeddings `√3 ↦ ±s` send a root `u + v√3` to roots of the two
//! conjugate reductions, which are lifted by Newton iteration far enough
//! that `u` and `v` can be read off from a height bound. Every candidate
//! is confirmed by exact evaluation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Poly, PolyRing, QuadField, QuadNum, Rat, Rationals, Ring};

/// Distinct roots of a polynomial inside its coefficient field.
pub trait RootFinder: Field {
    /// Distinct roots of a nonzero polynomial, in a deterministic order.
    fn roots_in_field(&self, p: &Poly<Self::Elem>) -> Vec<Self::Elem>;
}

impl RootFinder for QuadField {
    fn roots_in_field(&self, p: &Poly<QuadNum>) -> Vec<QuadNum> {
        quad_roots(p)
    }
}

impl RootFinder for Rationals {
    fn roots_in_field(&self, p: &Poly<Rat>) -> Vec<Rat> {
        let k = PolyRing::new(QuadField);
        let lifted = k.from_coeffs(p.coeffs().iter().cloned().map(QuadNum::rat).collect());
        quad_roots(&lifted).into_iter().filter(|r| r.is_rational()).map(|r| r.a).collect()
    }
}

/// Yun's algorithm: pairs `(g_i, i)` with `p = lc · Π g_i^i`, each `g_i`
/// monic, squarefree and pairwise coprime. Valid in characteristic 0 and
/// whenever `deg p` is below the characteristic.
pub fn squarefree_decomposition<F: Field>(field: &F, p: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let r = PolyRing::new(field.clone());
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = r.derivative(p);
    let a0 = r.gcd(p, &dp);
    let mut b = r.divrem(p, &a0).unwrap().0;
    let mut c = r.divrem(&dp, &a0).unwrap().0;
    let mut d = r.sub(&c, &r.derivative(&b));
    let mut i = 1;
    loop {
        let a = r.gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = r.divrem(&b, &a).unwrap().0;
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        c = r.divrem(&d, &a).unwrap().0;
        d = r.sub(&c, &r.derivative(&b));
        i += 1;
    }
    out
}

/// Distinct roots in Q(√3) of a nonzero polynomial over Q(√3).
pub fn quad_roots(p: &Poly<QuadNum>) -> Vec<QuadNum> {
    let k = QuadField;
    let r = PolyRing::new(k);
    let Some(deg) = p.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let sq = r.divrem(p, &r.gcd(p, &r.derivative(p))).unwrap().0;
    let sq = r.monic(&sq);
    match sq.degree() {
        Some(1) => return vec![-sq.coeffs()[0].clone()],
        Some(0) | None => return Vec::new(),
        _ => {}
    }
    let ints = integral_coefficients(&sq);
    let n = ints.len() - 1;
    let (an, bn) = &ints[n];
    let norm_c = (an * an - BigInt::from(3) * bn * bn).abs();
    // Cauchy bound on every real conjugate of a root, with √3 < 2.
    let two = BigInt::from(2);
    let size = |a: &BigInt, b: &BigInt| a.abs() + &two * b.abs();
    let lc_size = size(an, bn);
    let max_ratio = ints[..n].iter().map(|(a, b)| size(a, b) * &lc_size).max().unwrap_or_default();
    // Bound on |D·u|, |D·v|: D·(1 + max_ratio / D) = D + max_ratio.
    let bound = &norm_c + &max_ratio + BigInt::one();

    let mut candidates: Vec<QuadNum> = Vec::new();
    for p in (13u64..).filter(|p| (p % 12 == 1 || p % 12 == 11) && is_small_prime(*p)) {
        let pb = BigInt::from(p);
        if (&norm_c % &pb).is_zero() {
            continue;
        }
        let Some(s) = (1..p).find(|x| (x * x) % p == 3) else { continue };
        let (Some(r1), Some(r2)) = (roots_mod_p(&ints, p, s), roots_mod_p(&ints, p, p - s)) else {
            continue;
        };
        // Precision: p^N > 2·bound.
        let mut modulus = pb.clone();
        let mut prec = 1u32;
        while modulus <= &bound * BigInt::from(2) {
            modulus *= &pb;
            prec += 1;
        }
        let s_big = lift_sqrt3(BigInt::from(s), &modulus, prec);
        let neg_s = (&modulus - &s_big) % &modulus;
        let l1: Vec<BigInt> = r1.iter().map(|&x| lift_root(&ints, &s_big, BigInt::from(x), &modulus, prec)).collect();
        let l2: Vec<BigInt> = r2.iter().map(|&x| lift_root(&ints, &neg_s, BigInt::from(x), &modulus, prec)).collect();
        let inv2 = mod_inv(&BigInt::from(2), &modulus);
        let inv2s = mod_inv(&((&s_big * BigInt::from(2)) % &modulus), &modulus);
        for x1 in &l1 {
            for x2 in &l2 {
                let du = symmetric((&norm_c * (x1 + x2) % &modulus * &inv2) % &modulus, &modulus);
                let dv = symmetric((&norm_c * (x1 - x2) % &modulus * &inv2s) % &modulus, &modulus);
                let cand = QuadNum::new(Rat::new(du, norm_c.clone()), Rat::new(dv, norm_c.clone()));
                if r.eval(&sq, &cand).is_zero() && !candidates.contains(&cand) {
                    candidates.push(cand);
                }
            }
        }
        break;
    }
    candidates.sort();
    candidates
}

/// Scales to coefficients `a_i + b_i√3` with `a_i, b_i ∈ Z`.
fn integral_coefficients(p: &Poly<QuadNum>) -> Vec<(BigInt, BigInt)> {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.a.denom()).lcm(c.b.denom());
    }
    p.coeffs()
        .iter()
        .map(|c| {
            let a = c.a.numer() * (&l / c.a.denom());
            let b = c.b.numer() * (&l / c.b.denom());
            (a, b)
        })
        .collect()
}

/// Roots mod p of the image under `√3 ↦ s`, or `None` if the image drops
/// degree or is not squarefree.
fn roots_mod_p(ints: &[(BigInt, BigInt)], p: u64, s: u64) -> Option<Vec<u64>> {
    let pb = BigInt::from(p);
    let coeffs: Vec<u64> = ints
        .iter()
        .map(|(a, b)| {
            let v = (a + b * BigInt::from(s)).mod_floor(&pb);
            v.to_u64().unwrap()
        })
        .collect();
    if *coeffs.last().unwrap() == 0 {
        return None;
    }
    let eval = |x: u64| coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p);
    let deriv: Vec<u64> = coeffs.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect();
    let eval_d = |x: u64| deriv.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p);
    let mut roots = Vec::new();
    for x in 0..p {
        if eval(x) == 0 {
            if eval_d(x) == 0 {
                return None;
            }
            roots.push(x);
        }
    }
    Some(roots)
}

fn lift_sqrt3(mut s: BigInt, modulus: &BigInt, prec: u32) -> BigInt {
    let three = BigInt::from(3);
    for _ in 0..iterations(prec) {
        let f = (&s * &s - &three).mod_floor(modulus);
        let df = (&s * BigInt::from(2)).mod_floor(modulus);
        s = (&s - f * mod_inv(&df, modulus)).mod_floor(modulus);
    }
    s
}

fn lift_root(ints: &[(BigInt, BigInt)], s: &BigInt, mut x: BigInt, modulus: &BigInt, prec: u32) -> BigInt {
    let coeffs: Vec<BigInt> = ints.iter().map(|(a, b)| (a + b * s).mod_floor(modulus)).collect();
    for _ in 0..iterations(prec) {
        let mut f = BigInt::zero();
        let mut df = BigInt::zero();
        for c in coeffs.iter().rev() {
            df = (&df * &x + &f).mod_floor(modulus);
            f = (&f * &x + c).mod_floor(modulus);
        }
        x = (&x - f * mod_inv(&df, modulus)).mod_floor(modulus);
    }
    x
}

fn iterations(prec: u32) -> u32 {
    let mut k = 0;
    while (1u64 << k) < prec as u64 {
        k += 1;
    }
    k + 1
}

fn mod_inv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn symmetric(x: BigInt, m: &BigInt) -> BigInt {
    let x = x.mod_floor(m);
    if &x * 2 > *m {
        x - m
    } else {
        x
    }
}

fn is_small_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> QuadNum {
        QuadNum::int(a, b)
    }

    fn poly_from_roots(roots: &[QuadNum]) -> Poly<QuadNum> {
        let r = PolyRing::new(QuadField);
        roots.iter().fold(r.one(), |acc, a| r.mul(&acc, &r.linear(a)))
    }

    #[test]
    fn finds_quadratic_irrational_roots() {
        let r = PolyRing::new(QuadField);
        // t² + 10t − 2 has roots −5 ± 3√3
        let p = r.from_i64s(&[-2, 10, 1]);
        assert_eq!(quad_roots(&p), vec![q(-5, -3), q(-5, 3)]);
        // x² + 3 has no roots in Q(√3)
        assert!(quad_roots(&r.from_i64s(&[3, 0, 1])).is_empty());
    }

    #[test]
    fn cubic_with_single_root() {
        let r = PolyRing::new(QuadField);
        // x³ − (10 + 6√3) = (x − (1+√3))(x² + (1+√3)x + (4+2√3))
        let p = r.from_coeffs(vec![q(-10, -6), q(0, 0), q(0, 0), q(1, 0)]);
        assert_eq!(quad_roots(&p), vec![q(1, 1)]);
    }

    #[test]
    fn rational_and_fractional_roots() {
        let roots = vec![
            QuadNum::new(Rat::new(-3, 3), Rat::new(2, 3)),
            QuadNum::new(Rat::new(7, 5), Rat::zero()),
            QuadNum::new(Rat::new(1, 4), Rat::new(-9, 2)),
        ];
        let p = poly_from_roots(&roots);
        let mut expect = roots.clone();
        expect.sort();
        assert_eq!(quad_roots(&p), expect);
        let r = PolyRing::new(QuadField);
        let scaled = r.scale(&r.mul(&p, &p), &q(5, -3));
        assert_eq!(quad_roots(&scaled), expect);
    }

    #[test]
    fn yun_multiplicities() {
        let r = PolyRing::new(Rationals);
        let a = r.from_i64s(&[-1, 1]);
        let b = r.from_i64s(&[1, 0, 1]);
        let p = r.mul(&r.mul(&a, &r.mul(&b, &b)), &r.mul(&a, &r.mul(&a, &a)));
        let d = squarefree_decomposition(&Rationals, &p);
        assert_eq!(d, vec![(b, 2), (a, 4)]);
    }
}
