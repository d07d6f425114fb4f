//! Truncated Laurent series over a finite field, used to follow places
//! through the singular fibers of a tower.
//!
//! A series stores `Σ c_i π^{val+i}` together with the implicit error term
//! `O(π^{val+len})`; every operation propagates that bound, so a result
//! whose leading term is unknown is reported as
//! [`Error::PrecisionExhausted`] instead of being guessed.

use crate::algebra::{Field, MobiusMap, Poly, ProjPoint, Ring};
use crate::error::{Error, Result};
use crate::ffield::{Fq, FqElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    pub val: i64,
    pub coeffs: Vec<FqElem>,
}

impl Laurent {
    /// `a + π` (or `π⁻¹` at infinity) known to `len` terms.
    pub fn local_coordinate(point: &ProjPoint<FqElem>, len: usize) -> Laurent {
        let mut coeffs = vec![0; len.max(2)];
        match point {
            ProjPoint::Infinity => {
                coeffs[0] = 1;
                Laurent { val: -1, coeffs }
            }
            ProjPoint::Finite(0) => {
                coeffs[0] = 1;
                Laurent { val: 1, coeffs }
            }
            ProjPoint::Finite(a) => {
                coeffs[0] = *a;
                coeffs[1] = 1;
                Laurent { val: 0, coeffs }
            }
        }
    }

    /// Exponent bound of the error term.
    pub fn precision(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    pub fn is_known(&self) -> bool {
        !self.coeffs.is_empty()
    }

    /// Valuation, provided the leading term is known.
    pub fn valuation(&self) -> Result<i64> {
        if self.is_known() {
            Ok(self.val)
        } else {
            Err(Error::PrecisionExhausted)
        }
    }

    pub fn lead(&self) -> Result<FqElem> {
        self.coeffs.first().copied().ok_or(Error::PrecisionExhausted)
    }

    fn normalized(mut self) -> Laurent {
        let zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..zeros);
        self.val += zeros as i64;
        self
    }

    pub fn truncate(mut self, len: usize) -> Laurent {
        self.coeffs.truncate(len);
        self
    }

    /// Value of the series at `π = 0` as a point of ℙ¹.
    pub fn residue(&self) -> Result<ProjPoint<FqElem>> {
        if !self.is_known() {
            return if self.val >= 1 { Ok(ProjPoint::Finite(0)) } else { Err(Error::PrecisionExhausted) };
        }
        Ok(match self.val {
            v if v < 0 => ProjPoint::Infinity,
            0 => ProjPoint::Finite(self.coeffs[0]),
            _ => ProjPoint::Finite(0),
        })
    }

    /// `v(self − a)` for a point `a` of ℙ¹ (`−v(self)` at infinity).
    pub fn order_at(&self, f: &Fq, a: &ProjPoint<FqElem>) -> Result<i64> {
        match a {
            ProjPoint::Infinity => Ok(-self.valuation()?),
            ProjPoint::Finite(a) => add_const(f, self, f.neg(a)).valuation(),
        }
    }
}

pub fn add(f: &Fq, a: &Laurent, b: &Laurent) -> Laurent {
    let prec = a.precision().min(b.precision());
    let start = a.val.min(b.val);
    if prec <= start {
        return Laurent { val: prec, coeffs: Vec::new() };
    }
    let coeffs = (start..prec)
        .map(|e| {
            let ca = coeff_at(a, e);
            let cb = coeff_at(b, e);
            f.add(&ca, &cb)
        })
        .collect();
    Laurent { val: start, coeffs }.normalized()
}

fn coeff_at(a: &Laurent, e: i64) -> FqElem {
    let i = e - a.val;
    if i < 0 {
        0
    } else {
        a.coeffs.get(i as usize).copied().unwrap_or(0)
    }
}

pub fn add_const(f: &Fq, a: &Laurent, c: FqElem) -> Laurent {
    if c == 0 {
        return a.clone();
    }
    if a.precision() <= 0 {
        return a.clone();
    }
    let constant = Laurent { val: 0, coeffs: {
        let mut v = vec![0; a.precision() as usize];
        v[0] = c;
        v
    } };
    add(f, a, &constant)
}

pub fn scale(f: &Fq, a: &Laurent, c: FqElem) -> Laurent {
    if c == 0 {
        return Laurent { val: a.precision(), coeffs: Vec::new() };
    }
    Laurent { val: a.val, coeffs: a.coeffs.iter().map(|x| f.mul(x, &c)).collect() }
}

pub fn mul(f: &Fq, a: &Laurent, b: &Laurent) -> Laurent {
    let val = a.val + b.val;
    if !a.is_known() || !b.is_known() {
        return Laurent { val, coeffs: Vec::new() };
    }
    let len = a.coeffs.len().min(b.coeffs.len());
    let mut out = vec![0; len];
    for (i, x) in a.coeffs.iter().take(len).enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.coeffs.iter().take(len - i).enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    Laurent { val, coeffs: out }.normalized()
}

pub fn inv(f: &Fq, a: &Laurent) -> Result<Laurent> {
    let c0 = a.lead()?;
    let c0inv = f.inv(&c0).ok_or(Error::DivisionByZero)?;
    let n = a.coeffs.len();
    let mut out = vec![0; n];
    out[0] = c0inv;
    for k in 1..n {
        let mut s = 0;
        for i in 1..=k {
            s = f.add(&s, &f.mul(&a.coeffs[i], &out[k - i]));
        }
        out[k] = f.neg(&f.mul(&s, &c0inv));
    }
    Ok(Laurent { val: -a.val, coeffs: out })
}

pub fn div(f: &Fq, a: &Laurent, b: &Laurent) -> Result<Laurent> {
    Ok(mul(f, a, &inv(f, b)?))
}

pub fn eval_poly(f: &Fq, p: &Poly<FqElem>, x: &Laurent) -> Laurent {
    let cs = p.coeffs();
    let Some((last, rest)) = cs.split_last() else {
        return Laurent { val: i64::MAX / 4, coeffs: Vec::new() };
    };
    let mut acc = Laurent { val: 0, coeffs: vec![*last; x.coeffs.len().max(1)] };
    acc.coeffs[1..].iter_mut().for_each(|c| *c = 0);
    for c in rest.iter().rev() {
        acc = add_const(f, &mul(f, &acc, x), *c);
    }
    acc
}

pub fn apply_mobius(f: &Fq, m: &MobiusMap<FqElem>, x: &Laurent) -> Result<Laurent> {
    let num = add_const(f, &scale(f, x, m.a), m.b);
    let den = add_const(f, &scale(f, x, m.c), m.d);
    let num = if m.a == 0 { constant_like(m.b, x) } else { num };
    let den = if m.c == 0 { constant_like(m.d, x) } else { den };
    div(f, &num, &den)
}

/// Relative precision of a series of valuation `val(x)` carried over to a
/// nonzero constant.
fn constant_like(c: FqElem, x: &Laurent) -> Laurent {
    let len = x.coeffs.len().max(1);
    let mut coeffs = vec![0; len];
    coeffs[0] = c;
    Laurent { val: 0, coeffs }
}

/// Rewrites a series in `π` as one in `τ` with `π = ω τ^d`.
pub fn substitute_power(f: &Fq, a: &Laurent, omega: FqElem, d: u32) -> Laurent {
    let d = d as usize;
    let mut coeffs = vec![0; a.coeffs.len() * d];
    for (i, c) in a.coeffs.iter().enumerate() {
        let e = a.val + i as i64;
        coeffs[i * d] = f.mul(c, &f.pow_i64(&omega, e).expect("omega is a unit"));
    }
    Laurent { val: a.val * d as i64, coeffs }
}

/// The unit series `W` with `W^d = g` and `W(0) = w0`, where `w0^d = g(0)`.
pub fn unit_root(f: &Fq, g: &Laurent, d: u32, w0: FqElem) -> Result<Laurent> {
    if g.val != 0 || !g.is_known() {
        return Err(Error::PrecisionExhausted);
    }
    let n = g.coeffs.len();
    let dd = f.from_i64(d as i64);
    let mut w = Laurent { val: 0, coeffs: vec![0; n] };
    w.coeffs[0] = w0;
    let mut correct = 1;
    while correct < n {
        // w ← w − (w^d − g)/(d w^{d−1})
        let wd1 = (1..d).fold(Laurent { val: 0, coeffs: one_like(n) }, |acc, _| mul(f, &acc, &w));
        let wd = mul(f, &wd1, &w);
        let resid = add(f, &wd, &scale(f, g, f.neg(&1)));
        if resid.is_known() {
            let step = div(f, &resid, &scale(f, &wd1, dd))?;
            w = add(f, &w, &scale(f, &step, f.neg(&1)));
        }
        w.coeffs.resize(n, 0);
        correct *= 2;
    }
    Ok(w)
}

fn one_like(n: usize) -> Vec<FqElem> {
    let mut v = vec![0; n];
    v[0] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PolyRing;

    fn f13() -> Fq {
        Fq::new(13, 1).unwrap()
    }

    #[test]
    fn inverse_of_one_minus_pi() {
        let f = f13();
        let a = Laurent { val: 0, coeffs: vec![1, 12, 0, 0, 0] };
        let b = inv(&f, &a).unwrap();
        assert_eq!(b.coeffs, vec![1, 1, 1, 1, 1]);
        assert_eq!(mul(&f, &a, &b).coeffs, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn cancellation_is_tracked() {
        let f = f13();
        let x = Laurent::local_coordinate(&ProjPoint::Finite(2), 4);
        let r = PolyRing::new(f.clone());
        // (x − 2)^3 at x = 2 + π has valuation 3
        let p = r.pow_poly(&r.linear(&2), 3);
        let v = eval_poly(&f, &p, &x);
        assert_eq!(v.val, 3);
        assert_eq!(v.lead().unwrap(), 1);
        let q = r.pow_poly(&r.linear(&2), 5);
        assert_eq!(eval_poly(&f, &q, &x).valuation(), Err(Error::PrecisionExhausted));
    }

    #[test]
    fn cube_root_of_unit_series() {
        let f = f13();
        let g = Laurent { val: 0, coeffs: vec![8, 3, 5, 7, 1, 0, 2, 9] };
        let w = unit_root(&f, &g, 3, 2).unwrap();
        let w3 = mul(&f, &mul(&f, &w, &w), &w);
        assert_eq!(w3.coeffs, g.coeffs);
    }

    #[test]
    fn substitution_spreads_terms() {
        let f = f13();
        let a = Laurent { val: -1, coeffs: vec![1, 2] };
        let b = substitute_power(&f, &a, 2, 3);
        assert_eq!(b.val, -3);
        assert_eq!(b.coeffs, vec![7, 0, 0, 2, 0, 0]);
    }

    #[test]
    fn mobius_on_a_pole() {
        let f = f13();
        let x = Laurent::local_coordinate(&ProjPoint::Infinity, 4);
        let m = MobiusMap::new(&f, 1, 3, 1, 12).unwrap();
        let y = apply_mobius(&f, &m, &x).unwrap();
        assert_eq!(y.residue().unwrap(), ProjPoint::Finite(1));
        assert_eq!(y.order_at(&f, &ProjPoint::Finite(1)).unwrap(), 1);
    }
}
