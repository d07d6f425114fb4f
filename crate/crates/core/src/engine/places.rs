//! Rational places of the smooth model lying over prescribed coordinate
//! values.
//!
//! A place of level `n+1` is reached from one of level `n` by the Kummer
//! step `z^d = h(x_{n−1})`: if `v(h) ≢ 0 (mod d)` there is a single,
//! totally ramified place above; otherwise the places above correspond to
//! the `d`-th roots of the residual unit. Places are carried as the
//! Laurent expansion of their last coordinate in a local uniformizer.

use std::collections::BTreeSet;

use super::correspondence::{Correspondence, Point};
use super::series::{self, Laurent};
use crate::algebra::{Field, Ring};
use crate::error::{Error, Result};

const START_PRECISION: usize = 12;
const MAX_PRECISION: usize = 1536;

/// A rational place, through the expansion of its last coordinate.
#[derive(Clone, Debug)]
pub struct PlaceChain {
    /// residues of the coordinates `x_1, …, x_m`
    pub chain: Vec<Point>,
    pub last: Laurent,
    /// ramification index over the `x_1`-line
    pub ram_index: u64,
}

/// `h(x)` along the series `x`.
pub fn h_series(c: &Correspondence, x: &Laurent) -> Result<Laurent> {
    let f = &c.field;
    let num = series::eval_poly(f, &c.h_num, x);
    let den = series::eval_poly(f, &c.h_den, x);
    if !num.is_known() {
        return Err(Error::PrecisionExhausted);
    }
    series::div(f, &num, &den)
}

/// All rational places above the place carrying `x`; each is returned as
/// the expansion of the new coordinate and a flag telling whether the
/// step ramified.
pub fn lift_step(c: &Correspondence, x: &Laurent, prec: usize) -> Result<Vec<(Laurent, bool)>> {
    let f = &c.field;
    let d = c.d as i64;
    let h = h_series(c, x)?;
    let v = h.valuation()?;
    let u0 = h.lead()?;
    let unit = Laurent { val: 0, coeffs: h.coeffs.clone() };
    let mut out = Vec::new();
    if v.rem_euclid(d) != 0 {
        // π = ω τ^d with ω = u0^{−a}, a·v ≡ 1 (mod d)
        let a = (1..d).find(|a| (a * v).rem_euclid(d) == 1).expect("d is prime");
        let j = (a * v - 1) / d;
        let omega = f.pow_i64(&u0, -a).expect("unit");
        let g = series::scale(f, &series::substitute_power(f, &unit, omega, c.d), f.pow_i64(&omega, v).unwrap())
            .truncate(prec);
        let w0 = f.pow_i64(&u0, -j).expect("unit");
        debug_assert_eq!(f.pow(&w0, c.d as u64), g.lead()?);
        let w = series::unit_root(f, &g, c.d, w0)?;
        let z = Laurent { val: v, coeffs: w.coeffs };
        out.push((series::apply_mobius(f, &c.sigma_inv, &z)?.truncate(prec), true));
    } else {
        let k = v / d;
        for r in f.nth_roots(u0, c.d) {
            let w = series::unit_root(f, &unit, c.d, r)?;
            let z = Laurent { val: k, coeffs: w.coeffs };
            out.push((series::apply_mobius(f, &c.sigma_inv, &z)?.truncate(prec), false));
        }
    }
    Ok(out)
}

/// Coordinate values admissible at each position of a rational chain whose
/// `steps`-th successor lies in `targets`.
pub fn backward_tree(c: &Correspondence, targets: &[Point], steps: usize) -> Vec<BTreeSet<Point>> {
    let mut levels = vec![targets.iter().cloned().collect::<BTreeSet<_>>()];
    for _ in 0..steps {
        let next: BTreeSet<Point> = levels.last().unwrap().iter().flat_map(|y| c.backward(y)).collect();
        levels.push(next);
    }
    levels.reverse();
    levels
}

fn places_at(c: &Correspondence, targets: &[Point], steps: usize, prec: usize) -> Result<Vec<PlaceChain>> {
    let tree = backward_tree(c, targets, steps);
    let mut current: Vec<PlaceChain> = tree[0]
        .iter()
        .map(|a| PlaceChain { chain: vec![a.clone()], last: Laurent::local_coordinate(a, prec), ram_index: 1 })
        .collect();
    for allowed in &tree[1..] {
        let mut next = Vec::new();
        for pl in &current {
            for (y, ramified) in lift_step(c, &pl.last, prec)? {
                let res = y.residue()?;
                if allowed.contains(&res) {
                    let mut chain = pl.chain.clone();
                    chain.push(res);
                    let ram_index = pl.ram_index * if ramified { c.d as u64 } else { 1 };
                    next.push(PlaceChain { chain, last: y, ram_index });
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// Rational places of level `steps + 2` whose last coordinate takes a value
/// in `targets`. Precision is doubled until the expansions suffice.
pub fn places_over(c: &Correspondence, targets: &[Point], steps: usize) -> Result<Vec<PlaceChain>> {
    let mut prec = START_PRECISION;
    loop {
        match places_at(c, targets, steps, prec) {
            Err(Error::PrecisionExhausted) if prec < MAX_PRECISION => prec *= 2,
            other => return other,
        }
    }
}
