//! Modular polynomials `Φ(X, Y)` cutting out the image of
//! `u ↦ (f(u), f(ω(u)))` for the uniformizing coordinate `u` of level 1
//! (`f = J`, `ω = ω⁽¹⁾`) or level 2 (`f = J∘t`, `ω = ω⁽²⁾`).
//!
//! `Φ` is the resultant in `u` of `num f − X den f` and
//! `num f∘ω − Y den f∘ω`, stripped of factors in `X` or `Y` alone and of
//! repeated factors, then scaled so that its top coefficient is 1.

use crate::algebra::{resultant, BiPoly, Field, MobiusMap, Poly, PolyRing, QuadField, QuadNum, RatFunc, Ring};
use crate::catalog::TowerSpec;
use crate::error::{Error, Result};
use crate::ffield::{Fq, FqElem};

type Nested<E> = Poly<Poly<E>>;

/// `(f, ω)` for the given level.
fn level_maps(spec: &TowerSpec, level: usize) -> Result<(RatFunc<QuadNum>, MobiusMap<QuadNum>)> {
    let k = QuadField;
    match level {
        1 => Ok((spec.j_map.clone(), spec.omega1.clone())),
        2 => Ok((spec.j_map.compose(&k, &spec.level2_map), spec.omega2.clone())),
        _ => Err(Error::InvalidArgument(format!("modular polynomials are defined for levels 1 and 2, got {level}"))),
    }
}

/// `Φ` over `ℚ(√3)`.
pub fn compute_phi(spec: &TowerSpec, level: usize) -> Result<BiPoly<QuadNum>> {
    let (f, w) = level_maps(spec, level)?;
    phi_from_maps(&QuadField, &f, &w)
}

/// `Φ` recomputed from the reduced maps over `F_q`.
pub fn compute_phi_mod(spec: &TowerSpec, level: usize, field: &Fq) -> Result<BiPoly<FqElem>> {
    let (f, w) = level_maps(spec, level)?;
    let red = |c: &QuadNum| field.reduce_quad(c);
    let (num, den) = f.try_map(field, red)?;
    let f = RatFunc::new(field, num, den)?;
    if f.degree() != level_maps(spec, level)?.0.degree() {
        return Err(Error::BadReduction(field.characteristic()));
    }
    let w = w.try_map(field, red)?;
    phi_from_maps(field, &f, &w)
}

/// Coefficientwise reduction of a characteristic-zero `Φ`.
pub fn reduce_phi(phi: &BiPoly<QuadNum>, field: &Fq) -> Result<BiPoly<FqElem>> {
    phi.try_map(field, |c| field.reduce_quad(c))
}

pub fn phi_from_maps<F: Field>(field: &F, f: &RatFunc<F::Elem>, w: &MobiusMap<F::Elem>) -> Result<BiPoly<F::Elem>> {
    let fw = f.compose(field, &w.as_ratfunc(field));
    let res = eliminate(field, f, &fw)?;
    if res.is_zero() {
        return Err(Error::DegenerateResultant);
    }
    let core = strip_y_content(field, &res);
    let core = transpose(field, &strip_y_content(field, &transpose(field, &core)));
    let phi = squarefree_in_x(field, &core);
    Ok(normalize(field, &BiPoly::from_nested(phi)))
}

/// `Res_u(num f − X den f, num g − Y den g)`. Its bidegree is at most
/// `(deg g, deg f)`, so it is interpolated from scalar resultants on a grid
/// of nodes where neither argument drops in `u`-degree.
fn eliminate<F: Field>(field: &F, f: &RatFunc<F::Elem>, g: &RatFunc<F::Elem>) -> Result<Nested<F::Elem>> {
    let py = PolyRing::new(field.clone());
    let du = f.num().deg_i64().max(f.den().deg_i64()).max(0) as usize;
    let dv = g.num().deg_i64().max(g.den().deg_i64()).max(0) as usize;
    let pencil = |h: &RatFunc<F::Elem>, deg: usize, x: &F::Elem| {
        py.from_coeffs(
            (0..=deg)
                .map(|i| field.sub(&py.coeff_or_zero(h.num(), i), &field.mul(x, &py.coeff_or_zero(h.den(), i))))
                .collect(),
        )
    };
    let (Some(xs), Some(ys)) = (
        nodes(field, dv + 1, |x| pencil(f, du, x).degree() == Some(du)),
        nodes(field, du + 1, |y| pencil(g, dv, y).degree() == Some(dv)),
    ) else {
        // too few prime-field nodes; eliminate over F[X][Y] directly
        return Ok(eliminate_direct(field, f, g));
    };
    let pxy = PolyRing::new(py.clone());
    let lx = lagrange_basis(field, &xs);
    let ly = lagrange_basis(field, &ys);
    let mut out: Nested<F::Elem> = Poly::zero();
    for (x, bx) in xs.iter().zip(&lx) {
        let a = pencil(f, du, x);
        let mut column = py.zero();
        for (y, by) in ys.iter().zip(&ly) {
            let r = resultant(field, &a, &pencil(g, dv, y));
            column = py.add(&column, &py.scale(by, &r));
        }
        out = pxy.add(&out, &pxy.from_coeffs(bx.coeffs().iter().map(|c| py.scale(&column, c)).collect()));
    }
    Ok(out)
}

/// First `count` of `0, 1, 2, …` (as field elements) passing `ok`.
fn nodes<F: Field>(field: &F, count: usize, ok: impl Fn(&F::Elem) -> bool) -> Option<Vec<F::Elem>> {
    let limit = match field.characteristic() {
        0 => u64::MAX,
        p => p,
    };
    let mut out = Vec::with_capacity(count);
    let mut k = 0u64;
    while out.len() < count {
        if k >= limit {
            return None;
        }
        let x = field.from_i64(k as i64);
        if ok(&x) {
            out.push(x);
        }
        k += 1;
    }
    Some(out)
}

fn lagrange_basis<F: Field>(field: &F, xs: &[F::Elem]) -> Vec<Poly<F::Elem>> {
    let py = PolyRing::new(field.clone());
    xs.iter()
        .enumerate()
        .map(|(i, xi)| {
            let mut basis = py.one();
            let mut denom = field.one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = py.mul(&basis, &py.from_coeffs(vec![field.neg(xj), field.one()]));
                    denom = field.mul(&denom, &field.sub(xi, xj));
                }
            }
            py.scale(&basis, &field.inv(&denom).expect("distinct nodes"))
        })
        .collect()
}

fn eliminate_direct<F: Field>(field: &F, f: &RatFunc<F::Elem>, g: &RatFunc<F::Elem>) -> Nested<F::Elem> {
    let py = PolyRing::new(field.clone());
    let pxy = PolyRing::new(py.clone());
    let pt = PolyRing::new(pxy.clone());
    let coeff = |p: &Poly<F::Elem>, i: usize| py.coeff_or_zero(p, i);
    let du = f.num().deg_i64().max(f.den().deg_i64()).max(0) as usize;
    let dv = g.num().deg_i64().max(g.den().deg_i64()).max(0) as usize;
    let a = pt.from_coeffs(
        (0..=du)
            .map(|i| pxy.from_coeffs(vec![py.constant(coeff(f.num(), i)), py.constant(field.neg(&coeff(f.den(), i)))]))
            .collect(),
    );
    let b = pt.from_coeffs(
        (0..=dv).map(|i| pxy.constant(py.from_coeffs(vec![coeff(g.num(), i), field.neg(&coeff(g.den(), i))]))).collect(),
    );
    resultant(&pxy, &a, &b)
}

fn transpose<F: Field>(field: &F, p: &Nested<F::Elem>) -> Nested<F::Elem> {
    BiPoly::from_nested(p.clone()).transpose(field).into_nested()
}

/// Divides out the gcd of the rows, i.e. the largest factor in `Y` alone.
fn strip_y_content<F: Field>(field: &F, p: &Nested<F::Elem>) -> Nested<F::Elem> {
    let py = PolyRing::new(field.clone());
    let pxy = PolyRing::new(py.clone());
    let g = content(&py, p);
    pxy.from_coeffs(p.coeffs().iter().map(|r| py.exact_div(r, &g).expect("content divides")).collect())
}

fn content<F: Field>(py: &PolyRing<F>, p: &Nested<F::Elem>) -> Poly<F::Elem> {
    p.coeffs().iter().fold(Poly::zero(), |g, r| py.gcd(&g, r))
}

fn primitive<F: Field>(field: &F, p: &Nested<F::Elem>) -> Nested<F::Elem> {
    if p.is_zero() {
        return p.clone();
    }
    strip_y_content(field, p)
}

/// Primitive-remainder gcd in `F[Y][X]`.
fn gcd_in_x<F: Field>(field: &F, a: &Nested<F::Elem>, b: &Nested<F::Elem>) -> Nested<F::Elem> {
    let pxy = PolyRing::new(PolyRing::new(field.clone()));
    let (mut a, mut b) = (primitive(field, a), primitive(field, b));
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
            let r = pxy.prem(&a, &b);
        a = b;
        b = primitive(field, &r);
    }
    a
}

/// A specialization `Y = y₀` keeping the `X`-degree and squarefree in `X`
/// certifies that no factor involving `X` repeats.
fn squarefree_at_a_fiber<F: Field>(field: &F, p: &Nested<F::Elem>) -> bool {
    let py = PolyRing::new(field.clone());
    let Some(dx) = p.degree() else { return true };
    let tries = if field.characteristic() == 0 { 16 } else { field.characteristic().min(16) as i64 };
    (0..tries).any(|k| {
        let y0 = field.from_i64(k);
        let fiber = py.from_coeffs(p.coeffs().iter().map(|r| py.eval(r, &y0)).collect());
        fiber.degree() == Some(dx) && py.gcd(&fiber, &py.derivative(&fiber)).degree() == Some(0)
    })
}

/// Removes repeated factors involving `X` (the input has no factor in
/// `Y` alone, and its `X`-degree is below the characteristic).
fn squarefree_in_x<F: Field>(field: &F, p: &Nested<F::Elem>) -> Nested<F::Elem> {
    if squarefree_at_a_fiber(field, p) {
        return p.clone();
    }
    let pxy = PolyRing::new(PolyRing::new(field.clone()));
    let g = gcd_in_x(field, p, &pxy.derivative(p));
    if g.degree() == Some(0) {
        return p.clone();
    }
    pxy.exact_div(p, &g).expect("gcd divides")
}

/// Scales so that the top coefficient (highest `X`, then highest `Y`) is 1.
pub fn normalize<F: Field>(field: &F, p: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
    match p.leading_coeff() {
        Some(c) => p.scale(field, &field.inv(c).expect("nonzero")),
        None => p.clone(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Symmetry<E> {
    /// `c` with `Φ(X, Y) = c · Φ(Y, X)`
    pub scalar: Option<E>,
    /// nonzero coefficients of `Φ(X, Y) − c · Φ(Y, X)` for the best `c`
    pub residual_terms: usize,
}

pub fn check_symmetry<F: Field>(field: &F, phi: &BiPoly<F::Elem>) -> Symmetry<F::Elem> {
    let t = phi.transpose(field);
    if let Some(c) = phi.proportional(field, &t) {
        return Symmetry { scalar: Some(c), residual_terms: 0 };
    }
    let c = match (phi.leading_coeff(), t.leading_coeff()) {
        (Some(a), Some(b)) => field.div(a, b).unwrap_or_else(|| field.one()),
        _ => field.one(),
    };
    let tc = t.scale(field, &c);
    let (dx, dy) = phi.bidegree().unwrap_or((0, 0));
    let (tx, ty) = tc.bidegree().unwrap_or((0, 0));
    let zero = field.zero();
    let residual_terms = (0..=dx.max(tx))
        .flat_map(|i| (0..=dy.max(ty)).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let a = phi.coeff(i, j).unwrap_or(&zero);
            let b = tc.coeff(i, j).unwrap_or(&zero);
            a != b
        })
        .count();
    Symmetry { scalar: None, residual_terms }
}
