//! Genus of each level by the tame Riemann–Hurwitz formula.
//!
//! The first two levels are coordinate lines; their genus is recomputed in
//! characteristic zero from the fibers of the Belyi maps over `0, 1, ∞`.
//! For `n ≥ 3` the step `F_n / F_{n−1}` is Kummer of prime degree `d` and
//! ramifies exactly at places `P` with `d ∤ v_P(h)`; those lie over the
//! zeros and poles of `h` and are enumerated over an extension field that
//! contains all of them as degree-one places.

use super::correspondence::{Correspondence, Point};
use super::places::places_over;
use crate::algebra::{fiber_multiplicities, FiberPoint, ProjPoint, QuadField, QuadNum, RatFunc};
use crate::catalog::TowerSpec;
use crate::error::{Error, Result};

pub const MAX_EXTENSION: u32 = 12;

/// Genus of level 1 (`J` on the t-line) or level 2 (`J∘t` on the x-line)
/// from the Belyi fibers.
pub fn genus_char0(spec: &TowerSpec, level: usize) -> Result<i64> {
    let k = QuadField;
    let map = match level {
        1 => spec.j_map.clone(),
        2 => spec.j_map.compose(&k, &spec.level2_map),
        _ => return Err(Error::InvalidArgument(format!("characteristic-zero genus is only available for levels 1 and 2, got {level}"))),
    };
    belyi_genus(&map)
}

/// `g` from `2g − 2 = −2 deg f + Σ (e − 1)` over the fibers of `f` above
/// `0, 1, ∞`.
pub fn belyi_genus(f: &RatFunc<QuadNum>) -> Result<i64> {
    let deg = f.degree() as i64;
    let mut ram = 0i64;
    for v in [ProjPoint::Finite(QuadNum::zero()), ProjPoint::Finite(QuadNum::one()), ProjPoint::Infinity] {
        for e in fiber_multiplicities(&QuadField, f, &v)? {
            let width = match &e.point {
                FiberPoint::Rational(_) => 1,
                FiberPoint::Factor(p) => p.degree().unwrap_or(0) as i64,
            };
            ram += (e.multiplicity as i64 - 1) * width;
        }
    }
    let rhs = -2 * deg + ram;
    if rhs % 2 != 0 {
        return Err(Error::NonIntegralGenus(rhs.to_string()));
    }
    Ok(rhs / 2 + 1)
}

/// Zeros and poles of `h` with their orders, if all are rational.
fn branch_values(c: &Correspondence) -> Result<Option<Vec<(Point, i64)>>> {
    let f = &c.field;
    let deg_h = c.spec.kummer.rhs.degree() as i64;
    let mut out = Vec::new();
    let (mut zeros, mut poles) = (0i64, 0i64);
    for (poly, sign) in [(&c.h_num, 1i64), (&c.h_den, -1)] {
        if poly.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (a, m) in f.roots_with_multiplicity(poly)? {
            out.push((ProjPoint::Finite(a), sign * m as i64));
            if sign > 0 {
                zeros += m as i64;
            } else {
                poles += m as i64;
            }
        }
    }
    let at_inf = c.h_den.degree().unwrap_or(0) as i64 - c.h_num.degree().unwrap_or(0) as i64;
    if at_inf != 0 {
        out.push((ProjPoint::Infinity, at_inf));
        if at_inf > 0 {
            zeros += at_inf;
        } else {
            poles -= at_inf;
        }
    }
    if zeros != deg_h || poles != deg_h {
        return Ok(None);
    }
    out.sort();
    Ok(Some(out))
}

/// `Σ (d − gcd(d, v_P(h)))` over places `P` of level `level`, if every
/// place over a branch value is rational.
fn different_degree(c: &Correspondence, level: usize, branch: &[(Point, i64)]) -> Result<Option<i64>> {
    let d = c.d as i64;
    let targets: Vec<Point> = branch.iter().map(|(a, _)| a.clone()).collect();
    let places = places_over(c, &targets, level - 2)?;
    let expected = (c.d as i64).pow(level as u32 - 2);
    let mut total = 0;
    for (a, ord) in branch {
        let mut covered = 0;
        for pl in places.iter().filter(|pl| pl.chain.last() == Some(a)) {
            let e = pl.last.order_at(&c.field, a)?;
            covered += e;
            total += d - gcd(d, e * ord);
        }
        if covered != expected {
            return Ok(None);
        }
    }
    Ok(Some(total))
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Genera `g_3, …, g_n` over one field, or `None` if some ramified place
/// is not rational there.
fn genera_over(c: &Correspondence, n: usize) -> Result<Option<Vec<i64>>> {
    let Some(branch) = branch_values(c)? else { return Ok(None) };
    let d = c.d as i64;
    let mut g = genus_char0(&c.spec, 2)?;
    let mut out = Vec::new();
    for level in 3..=n {
        let Some(delta) = different_degree(c, level - 1, &branch)? else { return Ok(None) };
        let rhs = d * (2 * g - 2) + delta;
        if rhs % 2 != 0 {
            return Err(Error::NonIntegralGenus(rhs.to_string()));
        }
        g = rhs / 2 + 1;
        out.push(g);
    }
    Ok(Some(out))
}

/// Smallest extension degree `m ≤ 12` of the working field over which all
/// places ramified up to level `n` are rational.
pub fn ramification_field_degree(c: &Correspondence, n: usize) -> Result<(u32, Vec<i64>)> {
    for m in 1..=MAX_EXTENSION {
        let ext = match c.extend(m) {
            Ok(e) => e,
            Err(Error::CeilingExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        if let Some(gs) = genera_over(&ext, n)? {
            return Ok((m, gs));
        }
    }
    Err(Error::ExtensionNotFound(MAX_EXTENSION))
}

/// Genus of level `n`.
pub fn genus_hurwitz(c: &Correspondence, n: usize) -> Result<i64> {
    match n {
        0 => Err(Error::InvalidArgument("levels start at 1".into())),
        1 | 2 => genus_char0(&c.spec, n),
        _ => Ok(*ramification_field_degree(c, n)?.1.last().unwrap()),
    }
}
