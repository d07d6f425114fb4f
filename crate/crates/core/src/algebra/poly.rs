use std::fmt;

use super::{Field, Ring};

/// Dense univariate polynomial, `coeffs[i]` is the coefficient of `x^i`.
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` standing in for the zero polynomial.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

impl<E: fmt::Debug> fmt::Debug for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| match i {
                0 => format!("({c:?})"),
                1 => format!("({c:?})x"),
                _ => format!("({c:?})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Polynomial ring `R[x]` over a coefficient ring context.
#[derive(Clone, Debug)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(&self, coeffs: &[i64]) -> Poly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_i64(c)).collect())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); k];
        v.push(c);
        self.from_coeffs(v)
    }

    /// `x - a`.
    pub fn linear(&self, a: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![self.base.neg(a), self.base.one()])
    }

    pub fn coeff_or_zero(&self, p: &Poly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn lc_or_zero(&self, p: &Poly<R::Elem>) -> R::Elem {
        p.lc().cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn scale(&self, p: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(p.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// `p · x^k`.
    pub fn shift(&self, p: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if p.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![self.base.zero(); k];
        v.extend(p.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn eval(&self, p: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        let mut acc = self.base.zero();
        for c in p.coeffs.iter().rev() {
            acc = self.base.add(&self.base.mul(&acc, x), c);
        }
        acc
    }

    /// `Σ c_i u^i v^(deg-i)`: the degree-`deg` homogenization evaluated at `(u:v)`.
    pub fn eval_homogeneous(&self, p: &Poly<R::Elem>, deg: usize, u: &R::Elem, v: &R::Elem) -> R::Elem {
        let mut total = self.base.zero();
        let mut upow = self.base.one();
        let mut vpows = Vec::with_capacity(deg + 1);
        let mut vp = self.base.one();
        for _ in 0..=deg {
            vpows.push(vp.clone());
            vp = self.base.mul(&vp, v);
        }
        for i in 0..=deg {
            let c = self.coeff_or_zero(p, i);
            if !self.base.is_zero(&c) {
                let term = self.base.mul(&c, &self.base.mul(&upow, &vpows[deg - i]));
                total = self.base.add(&total, &term);
            }
            upow = self.base.mul(&upow, u);
        }
        total
    }

    pub fn derivative(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            p.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(&self.base.from_i64(i as i64), c))
                .collect(),
        )
    }

    /// `p(q(x))`.
    pub fn compose(&self, p: &Poly<R::Elem>, q: &Poly<R::Elem>) -> Poly<R::Elem> {
        let mut acc = Poly::zero();
        for c in p.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, q), &self.constant(c.clone()));
        }
        acc
    }

    pub fn map_into<S: Ring>(
        &self,
        target: &PolyRing<S>,
        p: &Poly<R::Elem>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(p.coeffs.iter().map(f).collect())
    }

    /// Fallible coefficient map (e.g. reduction modulo a prime).
    pub fn try_map_into<S: Ring, E>(
        &self,
        target: &PolyRing<S>,
        p: &Poly<R::Elem>,
        f: impl Fn(&R::Elem) -> Result<S::Elem, E>,
    ) -> Result<Poly<S::Elem>, E> {
        Ok(target.from_coeffs(p.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }

    /// Pseudo-remainder: `lc(b)^(deg a − deg b + 1) · a  mod  b`.
    pub fn prem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let db = b.degree().expect("pseudo-division by zero");
        let lb = b.lc().unwrap().clone();
        let mut r = a.clone();
        let Some(da) = a.degree() else { return r };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc().unwrap().clone();
            let t = self.shift(&self.scale(b, &lr), dr - db);
            r = self.sub(&self.scale(&r, &lb), &t);
            steps -= 1;
        }
        if steps > 0 {
            r = self.scale(&r, &self.base.pow(&lb, steps as u64));
        }
        r
    }

    pub fn pow_poly(&self, p: &Poly<R::Elem>, e: u64) -> Poly<R::Elem> {
        self.pow(p, e)
    }
}

impl<R: Field> PolyRing<R> {
    /// Euclidean division; `None` when `b` is zero.
    pub fn divrem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Option<(Poly<R::Elem>, Poly<R::Elem>)> {
        let db = b.degree()?;
        let lbi = self.base.inv(b.lc().unwrap())?;
        let mut r = a.clone();
        let da = match a.degree() {
            Some(d) if d >= db => d,
            _ => return Some((Poly::zero(), r)),
        };
        let mut q = vec![self.base.zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = self.base.mul(r.lc().unwrap(), &lbi);
            let t = self.shift(&self.scale(b, &c), dr - db);
            q[dr - db] = c;
            r = self.sub(&r, &t);
        }
        Some((self.from_coeffs(q), r))
    }

    pub fn rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.divrem(a, b).expect("division by zero polynomial").1
    }

    pub fn monic(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        match p.lc() {
            None => Poly::zero(),
            Some(l) => self.scale(p, &self.base.inv(l).unwrap()),
        }
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `a^e mod m`.
    pub fn powmod(&self, a: &Poly<R::Elem>, mut e: u128, m: &Poly<R::Elem>) -> Poly<R::Elem> {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&self.constant(self.base.one()), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
            e >>= 1;
            if e > 0 {
                base = self.rem(&self.mul(&base, &base), m);
            }
        }
        acc
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let v = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(v)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let v = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.sub(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => self.base.neg(y),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(v)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly { coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = self.base.add(&v[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(v)
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let db = b.degree()?;
        let lb = b.lc().unwrap().clone();
        let mut r = a.clone();
        let da = match a.degree() {
            None => return Some(Poly::zero()),
            Some(d) if d < db => return None,
            Some(d) => d,
        };
        let mut q = vec![self.base.zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = self.base.exact_div(r.lc().unwrap(), &lb)?;
            let t = self.shift(&self.scale(b, &c), dr - db);
            q[dr - db] = c;
            r = self.sub(&r, &t);
        }
        Some(self.from_coeffs(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Rat, Rationals};

    fn qx() -> PolyRing<Rationals> {
        PolyRing::new(Rationals)
    }

    #[test]
    fn trims_leading_zeros() {
        let r = qx();
        let p = r.from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(r.from_i64s(&[0, 0]).is_zero());
        assert_eq!(r.from_i64s(&[]).deg_i64(), -1);
    }

    #[test]
    fn divrem_and_gcd() {
        let r = qx();
        // (x-1)(x+2) and (x-1)(x-3)
        let a = r.from_i64s(&[-2, 1, 1]);
        let b = r.from_i64s(&[3, -4, 1]);
        assert_eq!(r.gcd(&a, &b), r.from_i64s(&[-1, 1]));
        let (q, rem) = r.divrem(&a, &r.from_i64s(&[-1, 1])).unwrap();
        assert!(rem.is_zero());
        assert_eq!(q, r.from_i64s(&[2, 1]));
    }

    #[test]
    fn exact_div_over_polynomial_ring() {
        let r = PolyRing::new(qx());
        let base = qx();
        // coefficients in Q[X]: (X + y)(X - y) = X² - y²
        let xp = base.x();
        let p = r.from_coeffs(vec![base.mul(&xp, &xp), base.zero(), base.from_i64s(&[-1])]);
        let f = r.from_coeffs(vec![xp.clone(), base.one()]);
        let g = r.from_coeffs(vec![xp.clone(), base.from_i64s(&[-1])]);
        assert_eq!(r.exact_div(&p, &f), Some(g));
        assert_eq!(r.exact_div(&p, &r.from_coeffs(vec![base.from_i64s(&[1, 1])])), None);
    }

    #[test]
    fn homogeneous_evaluation() {
        let r = qx();
        let p = r.from_i64s(&[1, 0, 3]); // 3x² + 1
        let v = r.eval_homogeneous(&p, 3, &Rat::from(2), &Rat::from(5));
        // 3·4·5 + 125
        assert_eq!(v, Rat::from(185));
    }

    #[test]
    fn prem_matches_definition() {
        let r = qx();
        let a = r.from_i64s(&[1, 2, 3, 4]);
        let b = r.from_i64s(&[1, 2]);
        let pr = r.prem(&a, &b);
        // lc(b)^3 · a mod b, and b has root -1/2
        let expect = Rat::from(8) * r.eval(&a, &Rat::new(-1, 2));
        assert_eq!(pr, r.constant(expect));
    }
}
