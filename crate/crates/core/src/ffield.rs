//! Finite fields `F_{p^k}` at desk scale.
//!
//! An element is a `u32` holding the base-`p` digits of its representative
//! polynomial (`Σ c_i p^i` for `Σ c_i θ^i`), so the prime subfield is
//! `0..p` and ordering by encoding is deterministic. Multiplication goes
//! through exp/log tables over the least primitive element; addition is
//! digit-wise. The modulus is the least monic irreducible polynomial of
//! degree `k`, ordered by the encoding of its lower coefficients.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Field, Poly, PolyRing, QuadNum, Rat, RootFinder, Ring};
use crate::error::{Error, Result};

/// Default bound on `q` accepted by [`Fq::new`].
pub const DEFAULT_CEILING: u64 = 1 << 24;
/// Bound that no configured ceiling may exceed.
pub const HARD_CEILING: u64 = 1 << 26;

/// Above this size root finding switches from scanning to gcd splitting.
const SCAN_LIMIT: u32 = 1 << 12;

pub type FqElem = u32;

/// Context for `F_q`, `q = p^k`. Cheap to clone.
#[derive(Clone)]
pub struct Fq(Arc<Inner>);

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    sqrt3: Option<u32>,
    zeta3: Option<u32>,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.0.p, self.0.k)
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.k == other.0.k
    }
}

impl Eq for Fq {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Fq {
    pub fn new(p: u64, k: u32) -> Result<Fq> {
        Fq::with_ceiling(p, k, DEFAULT_CEILING)
    }

    pub fn with_ceiling(p: u64, k: u32, ceiling: u64) -> Result<Fq> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        if ceiling > HARD_CEILING {
            return Err(Error::InvalidArgument(format!("field ceiling {ceiling} exceeds hard limit {HARD_CEILING}")));
        }
        let size = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if size > ceiling as u128 {
            return Err(Error::CeilingExceeded { size, limit: ceiling });
        }
        let p = p as u32;
        let q = size as u32;
        let modulus = if k == 1 { vec![0, 1] } else { least_irreducible(p, k)? };
        let mut inner = Inner { p, k, q, modulus, generator: 0, exp: Vec::new(), log: Vec::new(), sqrt3: None, zeta3: None };
        inner.generator = find_generator(&inner);
        let g = inner.generator;
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..q - 1 {
            exp.push(cur);
            log[cur as usize] = i;
            cur = inner.mul_slow(cur, g);
        }
        inner.exp = exp;
        inner.log = log;
        let f = Fq(Arc::new(inner));
        let three = f.from_i64(3);
        let sqrt3 = f.nth_roots(three, 2).into_iter().next();
        let zeta3 = f.nth_roots(1, 3).into_iter().find(|&z| z != 1);
        let mut inner = Arc::try_unwrap(f.0).ok().expect("fresh context is uniquely owned");
        inner.sqrt3 = sqrt3;
        inner.zeta3 = zeta3;
        Ok(Fq(Arc::new(inner)))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the modulus, ascending, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn generator(&self) -> u32 {
        self.0.generator
    }

    /// Least element whose square is 3.
    pub fn sqrt3(&self) -> Option<u32> {
        self.0.sqrt3
    }

    /// Least primitive cube root of unity.
    pub fn zeta3(&self) -> Option<u32> {
        self.0.zeta3
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.q
    }

    pub fn digits(&self, a: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut a = a;
        (0..self.0.k)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.0.p + d % self.0.p)
    }

    /// Discrete log base [`Fq::generator`]; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    pub fn exp(&self, i: u64) -> u32 {
        self.0.exp[(i % (self.0.q as u64 - 1)) as usize]
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(&a, self.0.p as u64)
    }

    /// All `d`-th roots of `c`, ascending by encoding.
    pub fn nth_roots(&self, c: u32, d: u32) -> Vec<u32> {
        if c == 0 {
            return vec![0];
        }
        let n = self.0.q as u64 - 1;
        let j = self.0.log[c as usize] as u64;
        let g = (d as u64).gcd(&n);
        if j % g != 0 {
            return Vec::new();
        }
        let m = n / g;
        let dm = (d as u64 / g) % m;
        let base = if m == 1 { 0 } else { (j / g) % m * mod_inverse(dm, m) % m };
        let mut out: Vec<u32> = (0..g).map(|t| self.exp(base + t * m)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_nth_power(&self, c: u32, d: u32) -> bool {
        if c == 0 {
            return true;
        }
        let n = self.0.q as u64 - 1;
        self.0.log[c as usize] as u64 % (d as u64).gcd(&n) == 0
    }

    pub fn reduce_rat(&self, x: &Rat) -> Result<u32> {
        let p = BigInt::from(self.0.p);
        let den = x.denom().mod_floor(&p);
        if den.is_zero() {
            return Err(Error::DenominatorCollision(self.0.p as u64));
        }
        let num = x.numer().mod_floor(&p).to_u32().unwrap();
        let den = den.to_u32().unwrap();
        Ok(self.mul(&num, &self.inv(&den).unwrap()))
    }

    /// The homomorphism `a + b√3 ↦ a + b·sqrt3`.
    pub fn reduce_quad(&self, x: &QuadNum) -> Result<u32> {
        let p = self.0.p as u64;
        if p == 2 || p == 3 {
            return Err(Error::BadReduction(p));
        }
        let a = self.reduce_rat(&x.a)?;
        if x.b.is_zero() {
            return Ok(a);
        }
        let s = self.0.sqrt3.ok_or(Error::NoSqrt3(p))?;
        let b = self.reduce_rat(&x.b)?;
        Ok(self.add(&a, &self.mul(&b, &s)))
    }

    /// Distinct roots in the field, ascending.
    pub fn roots_of_unary(&self, f: &Poly<u32>) -> Result<Vec<u32>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.0.q <= SCAN_LIMIT || self.0.p == 2 {
            Ok(self.roots_scan(f))
        } else {
            Ok(self.roots_split(f))
        }
    }

    /// Roots with multiplicities, ascending.
    pub fn roots_with_multiplicity(&self, f: &Poly<u32>) -> Result<Vec<(u32, usize)>> {
        let r = PolyRing::new(self.clone());
        let roots = self.roots_of_unary(f)?;
        Ok(roots
            .into_iter()
            .map(|a| {
                let lin = r.linear(&a);
                let mut g = f.clone();
                let mut m = 0;
                while let Some((quo, rem)) = r.divrem(&g, &lin) {
                    if !rem.is_zero() {
                        break;
                    }
                    g = quo;
                    m += 1;
                }
                (a, m)
            })
            .collect())
    }

    /// Exhaustive evaluation over every element.
    pub fn roots_scan(&self, f: &Poly<u32>) -> Vec<u32> {
        let r = PolyRing::new(self.clone());
        self.elements().filter(|a| r.eval(f, a) == 0).collect()
    }

    /// `gcd(f, x^q − x)` split by `(x + a)^((q−1)/2) − 1` for `a = 0, 1, …`.
    /// Deterministic; requires odd `q`.
    pub fn roots_split(&self, f: &Poly<u32>) -> Vec<u32> {
        let r = PolyRing::new(self.clone());
        let f = r.monic(f);
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let xq = r.powmod(&r.x(), self.0.q as u128, &f);
        let g = r.gcd(&r.sub(&xq, &r.x()), &f);
        let mut out = Vec::new();
        self.split_linear(&r, g, &mut out);
        out.sort_unstable();
        out
    }

    fn split_linear(&self, r: &PolyRing<Fq>, g: Poly<u32>, out: &mut Vec<u32>) {
        match g.degree() {
            None | Some(0) => {}
            Some(1) => out.push(self.neg(&g.coeffs()[0])),
            Some(_) => {
                let e = (self.0.q as u128 - 1) / 2;
                for a in self.elements() {
                    let t = r.powmod(&r.from_coeffs(vec![a, 1]), e, &g);
                    let h = r.gcd(&r.sub(&t, &r.one()), &g);
                    let dh = h.degree().unwrap_or(0);
                    if dh > 0 && dh < g.degree().unwrap() {
                        let rest = r.divrem(&g, &h).unwrap().0;
                        self.split_linear(r, h, out);
                        self.split_linear(r, rest, out);
                        return;
                    }
                }
                unreachable!("distinct roots are separated by some shift");
            }
        }
    }
}

impl Inner {
    fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        if self.k == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b, mut r, mut m) = (a, b, 0, 1);
        for _ in 0..self.k {
            let s = a % p + b % p;
            r += if s >= p { s - p } else { s } * m;
            a /= p;
            b /= p;
            m *= p;
        }
        r
    }

    fn neg(&self, a: u32) -> u32 {
        let p = self.p;
        if self.k == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let (mut a, mut r, mut m) = (a, 0, 1);
        for _ in 0..self.k {
            let d = a % p;
            r += if d == 0 { 0 } else { p - d } * m;
            a /= p;
            m *= p;
        }
        r
    }

    /// Schoolbook product reduced by the modulus; used before tables exist.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        if self.k == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let k = self.k as usize;
        let da = digits(a, self.p, k);
        let db = digits(b, self.p, k);
        let mut prod = vec![0u64; 2 * k - 1];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c != 0 {
                for j in 0..k {
                    let t = c * self.modulus[j] as u64 % p;
                    prod[i - k + j] = (prod[i - k + j] + p - t) % p;
                }
                prod[i] = 0;
            }
        }
        prod[..k].iter().rev().fold(0u32, |acc, &d| acc * self.p + d as u32)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

fn digits(mut a: u32, p: u32, k: usize) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(m as i64));
    e.x.rem_euclid(m as i64) as u64
}

fn find_generator(f: &Inner) -> u32 {
    let n = f.q as u64 - 1;
    if n == 1 {
        return 1;
    }
    let primes = prime_divisors(n);
    (1..f.q).find(|&g| primes.iter().all(|&l| f.pow_slow(g, n / l) != 1)).expect("multiplicative group is cyclic")
}

/// Ben-Or test over the prime field, scanning monic candidates in
/// encoding order.
fn least_irreducible(p: u32, k: u32) -> Result<Vec<u32>> {
    let fp = Fq::with_ceiling(p as u64, 1, HARD_CEILING)?;
    let r = PolyRing::new(fp.clone());
    let count = (p as u64).pow(k);
    for c in 0..count {
        let mut coeffs = digits(c as u32, p, k as usize);
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let f = r.from_coeffs(coeffs.clone());
        let x = r.x();
        let mut u = x.clone();
        let irreducible = (1..=k / 2).all(|_| {
            u = r.powmod(&u, p as u128, &f);
            r.gcd(&r.sub(&u, &x), &f).degree() == Some(0)
        });
        if irreducible {
            return Ok(coeffs);
        }
    }
    Err(Error::InvalidArgument(format!("no irreducible polynomial of degree {k} over F_{p}")))
}

impl Ring for Fq {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.0.add(*a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.0.add(*a, self.0.neg(*b))
    }
    fn neg(&self, a: &u32) -> u32 {
        self.0.neg(*a)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        let f = &self.0;
        if f.k == 1 {
            return ((*a as u64 * *b as u64) % f.p as u64) as u32;
        }
        if *a == 0 || *b == 0 {
            return 0;
        }
        let s = f.log[*a as usize] as u64 + f.log[*b as usize] as u64;
        f.exp[(s % (f.q as u64 - 1)) as usize]
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }
    fn exact_div(&self, a: &u32, b: &u32) -> Option<u32> {
        self.div(a, b)
    }
    fn pow(&self, a: &u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if *a == 0 {
            return 0;
        }
        self.exp(self.0.log[*a as usize] as u64 * (e % (self.0.q as u64 - 1)))
    }
}

impl Field for Fq {
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let n = self.0.q - 1;
        let l = self.0.log[*a as usize];
        Some(self.0.exp[((n - l) % n) as usize])
    }
    fn characteristic(&self) -> u64 {
        self.0.p as u64
    }
}

impl RootFinder for Fq {
    fn roots_in_field(&self, p: &Poly<u32>) -> Vec<u32> {
        self.roots_of_unary(p).unwrap_or_default()
    }
}
