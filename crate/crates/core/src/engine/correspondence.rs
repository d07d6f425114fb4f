//! A tower reduced modulo a prime: the recursion over `F_q`, its Kummer
//! data `z^d = h(x)`, `z = σ(y)`, and the exceptional x-values.

use std::collections::BTreeSet;

use crate::algebra::{BiPoly, Field, MobiusMap, Poly, PolyRing, ProjPoint, Ring};
use crate::catalog::TowerSpec;
use crate::error::{Error, Result};
use crate::ffield::{Fq, FqElem, DEFAULT_CEILING};

pub type Point = ProjPoint<FqElem>;

/// Index of a point of `ℙ¹(F_q)` in `0..=q`, with `q` standing for `∞`.
pub fn point_index(q: u32, p: &Point) -> usize {
    match p {
        ProjPoint::Finite(a) => *a as usize,
        ProjPoint::Infinity => q as usize,
    }
}

pub fn index_point(q: u32, i: usize) -> Point {
    if i == q as usize {
        ProjPoint::Infinity
    } else {
        ProjPoint::Finite(i as FqElem)
    }
}

#[derive(Clone, Debug)]
pub struct Correspondence {
    pub spec: TowerSpec,
    pub field: Fq,
    pub base_degree: u32,
    pub ceiling: u64,
    pub d: u32,
    pub recursion: BiPoly<FqElem>,
    pub h_num: Poly<FqElem>,
    pub h_den: Poly<FqElem>,
    pub sigma: MobiusMap<FqElem>,
    pub sigma_inv: MobiusMap<FqElem>,
    /// zeros and poles of `h` together with `σ⁻¹(0)`, `σ⁻¹(∞)`, closed
    /// under rational forward fibers; sorted
    pub exceptional: Vec<Point>,
}

/// Reduces `spec` over `ctx`.
pub fn reduce_tower(spec: &TowerSpec, ctx: &Fq) -> Result<Correspondence> {
    reduce_with_ceiling(spec, ctx, DEFAULT_CEILING)
}

pub fn reduce_with_ceiling(spec: &TowerSpec, ctx: &Fq, ceiling: u64) -> Result<Correspondence> {
    let p = ctx.p() as u64;
    if spec.bad_primes.contains(&p) {
        return Err(Error::BadReduction(p));
    }
    let d = spec.step_degree();
    if p % d as u64 == 0 {
        return Err(Error::WildRamification { p, index: d as u64 });
    }
    let red = |x: &crate::algebra::QuadNum| ctx.reduce_quad(x);
    let recursion = spec.recursion.try_map(ctx, red)?;
    let (h_num, h_den) = spec.kummer.rhs.try_map(ctx, red)?;
    let sigma = spec.z_substitution.try_map(ctx, red)?;
    if ctx.is_zero(&sigma.det(ctx)) {
        return Err(Error::BadReduction(p));
    }
    let r = PolyRing::new(ctx.clone());
    let deg_h = spec.kummer.rhs.degree();
    let coprime = r.gcd(&h_num, &h_den).degree() == Some(0);
    let same_degree = h_num.degree().unwrap_or(0).max(h_den.degree().unwrap_or(0)) == deg_h;
    if h_num.is_zero() || !coprime || !same_degree {
        return Err(Error::BadReduction(p));
    }
    if recursion.bidegree() != Some((d as usize, d as usize)) || has_unary_factor(ctx, &recursion) {
        return Err(Error::BadReduction(p));
    }
    let sigma_inv = sigma.inverse(ctx);
    let mut c = Correspondence {
        spec: spec.clone(),
        field: ctx.clone(),
        base_degree: ctx.degree(),
        ceiling,
        d,
        recursion,
        h_num,
        h_den,
        sigma,
        sigma_inv,
        exceptional: Vec::new(),
    };
    c.exceptional = c.exceptional_closure()?;
    Ok(c)
}

/// A factor depending on `x` or on `y` alone.
fn has_unary_factor(f: &Fq, b: &BiPoly<FqElem>) -> bool {
    let r = PolyRing::new(f.clone());
    let content = |bp: &BiPoly<FqElem>| {
        bp.nested().coeffs().iter().fold(r.zero(), |g, row| if row.is_zero() { g } else { r.gcd(&g, row) })
    };
    let cy = content(b);
    let cx = content(&b.transpose(f));
    cy.degree().unwrap_or(0) > 0 || cx.degree().unwrap_or(0) > 0
}

impl Correspondence {
    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn p(&self) -> u64 {
        self.field.p() as u64
    }

    /// The same tower over the degree-`k` extension of the working field.
    pub fn extend(&self, k: u32) -> Result<Correspondence> {
        if k == 1 {
            return Ok(self.clone());
        }
        let deg = self.base_degree.checked_mul(k).ok_or_else(|| Error::InvalidArgument("extension degree overflow".into()))?;
        let f = Fq::with_ceiling(self.p(), deg, self.ceiling)?;
        reduce_with_ceiling(&self.spec, &f, self.ceiling)
    }

    /// `h(x)` as a point of ℙ¹.
    pub fn h_value(&self, x: &Point) -> Point {
        let f = &self.field;
        let r = PolyRing::new(f.clone());
        match x {
            ProjPoint::Finite(a) => {
                let n = r.eval(&self.h_num, a);
                let dn = r.eval(&self.h_den, a);
                ProjPoint::from_pair(f, &n, &dn).expect("coprime numerator and denominator")
            }
            ProjPoint::Infinity => {
                let dn = self.h_num.degree().unwrap_or(0);
                let dd = self.h_den.degree().unwrap_or(0);
                match dn.cmp(&dd) {
                    std::cmp::Ordering::Greater => ProjPoint::Infinity,
                    std::cmp::Ordering::Less => ProjPoint::Finite(0),
                    std::cmp::Ordering::Equal => {
                        ProjPoint::Finite(f.div(&self.h_num.lc().unwrap(), self.h_den.lc().unwrap()).unwrap())
                    }
                }
            }
        }
    }

    /// Whether `x` is a zero or pole of `h`.
    pub fn is_branch_value(&self, x: &Point) -> bool {
        matches!(self.h_value(x), ProjPoint::Infinity | ProjPoint::Finite(0))
    }

    /// Rational forward fiber `{σ⁻¹(z) : z^d = h(x)}` as a set (no
    /// multiplicities).
    pub fn forward(&self, x: &Point) -> Vec<Point> {
        let f = &self.field;
        let zs = match self.h_value(x) {
            ProjPoint::Infinity => vec![ProjPoint::Infinity],
            ProjPoint::Finite(c) => f.nth_roots(c, self.d).into_iter().map(ProjPoint::Finite).collect(),
        };
        let mut out: Vec<Point> = zs.iter().map(|z| self.sigma_inv.apply(f, z)).collect();
        out.sort();
        out
    }

    /// Rational `x` with `h(x) = σ(y)^d`.
    pub fn backward(&self, y: &Point) -> Vec<Point> {
        let f = &self.field;
        let r = PolyRing::new(f.clone());
        let c = match self.sigma.apply(f, y) {
            ProjPoint::Infinity => ProjPoint::Infinity,
            ProjPoint::Finite(z) => ProjPoint::Finite(f.pow(&z, self.d as u64)),
        };
        let poly = match &c {
            ProjPoint::Infinity => self.h_den.clone(),
            ProjPoint::Finite(v) => r.sub(&self.h_num, &r.scale(&self.h_den, v)),
        };
        let mut out: Vec<Point> = if poly.degree().unwrap_or(0) == 0 {
            Vec::new()
        } else {
            f.roots_of_unary(&poly).expect("nonzero").into_iter().map(ProjPoint::Finite).collect()
        };
        if self.h_value(&ProjPoint::Infinity) == c {
            out.push(ProjPoint::Infinity);
        }
        out.sort();
        out
    }

    fn exceptional_closure(&self) -> Result<Vec<Point>> {
        let f = &self.field;
        let mut seeds: BTreeSet<Point> = BTreeSet::new();
        for poly in [&self.h_num, &self.h_den] {
            if poly.degree().unwrap_or(0) > 0 {
                seeds.extend(f.roots_of_unary(poly)?.into_iter().map(ProjPoint::Finite));
            }
        }
        if self.is_branch_value(&ProjPoint::Infinity) {
            seeds.insert(ProjPoint::Infinity);
        }
        seeds.insert(self.sigma_inv.apply(f, &ProjPoint::Finite(0)));
        seeds.insert(self.sigma_inv.apply(f, &ProjPoint::Infinity));
        let mut closed = BTreeSet::new();
        let mut stack: Vec<Point> = seeds.into_iter().collect();
        let bound = self.q() as usize + 1;
        while let Some(x) = stack.pop() {
            if !closed.insert(x.clone()) {
                continue;
            }
            if closed.len() > bound {
                return Err(Error::OrbitNotClosed(bound));
            }
            stack.extend(self.forward(&x).into_iter().filter(|y| !closed.contains(y)));
        }
        Ok(closed.into_iter().collect())
    }

    /// Membership table for the exceptional set, indexed by [`point_index`].
    pub fn exceptional_mask(&self) -> Vec<bool> {
        let q = self.q();
        let mut mask = vec![false; q as usize + 1];
        for p in &self.exceptional {
            mask[point_index(q, p)] = true;
        }
        mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::tower_by_name;

    #[test]
    fn new_tower_mod_13() {
        let spec = tower_by_name("new336").unwrap();
        let f = Fq::new(13, 1).unwrap();
        assert_eq!(f.sqrt3(), Some(4));
        let c = reduce_tower(&spec, &f).unwrap();
        assert_eq!(c.recursion.bidegree(), Some((3, 3)));
        // 2(5 − 3√3) ↦ 2·(5 − 12) = −14 ≡ 12
        assert_eq!(f.reduce_quad(&crate::algebra::QuadNum::int(10, -6)).unwrap(), 12);
        assert!(c.h_den.coeffs().contains(&1));
    }

    #[test]
    fn bad_primes_are_rejected() {
        let spec = tower_by_name("new336").unwrap();
        assert_eq!(reduce_tower(&spec, &Fq::new(3, 1).unwrap()).unwrap_err(), Error::BadReduction(3));
        assert_eq!(reduce_tower(&spec, &Fq::new(5, 1).unwrap()).unwrap_err(), Error::NoSqrt3(5));
    }

    #[test]
    fn elkies239_reduces_to_its_cleared_form() {
        let spec = tower_by_name("elkies239").unwrap();
        for p in [5u64, 7, 11, 13] {
            let f = Fq::new(p, 1).unwrap();
            let c = reduce_tower(&spec, &f).unwrap();
            let r = PolyRing::new(f.clone());
            let pxy = BiPoly::<FqElem>::ring(&f);
            let x3 = r.from_i64s(&[0, 0, 0, 1]);
            let ym1 = r.pow_poly(&r.from_i64s(&[-1, 1]), 3);
            let yp2 = r.pow_poly(&r.from_i64s(&[2, 1]), 3);
            let a = BiPoly::separable(&f, &x3, &ym1);
            let b = BiPoly::separable(&f, &r.one(), &r.sub(&yp2, &ym1));
            let expect = BiPoly::from_nested(pxy.add(a.nested(), b.nested()));
            assert!(c.recursion.proportional(&f, &expect).is_some(), "p={p}");
        }
    }

    #[test]
    fn fibers_are_consistent_both_ways() {
        for name in ["elkies2412", "elkies239", "new336"] {
            let spec = tower_by_name(name).unwrap();
            let f = Fq::new(13, 1).unwrap();
            let c = reduce_tower(&spec, &f).unwrap();
            for i in 0..=13 {
                let x = index_point(13, i);
                for y in c.forward(&x) {
                    assert!(c.backward(&y).contains(&x), "{name} {x:?} -> {y:?}");
                    // the rational points satisfy the bivariate relation
                    if let (ProjPoint::Finite(a), ProjPoint::Finite(b)) = (&x, &y) {
                        assert_eq!(c.recursion.eval(&f, a, b), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_set_is_forward_closed() {
        let spec = tower_by_name("elkies2412").unwrap();
        let c = reduce_tower(&spec, &Fq::new(13, 2).unwrap()).unwrap();
        for x in &c.exceptional {
            for y in c.forward(x) {
                assert!(c.exceptional.contains(&y));
            }
        }
    }
}
