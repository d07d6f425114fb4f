//! Direct count of rational places on the bivariate model `F(x, y) = 0`
//! in ℙ¹ × ℙ¹: each point contributes its rational branches (Newton
//! polygon, with Newton–Puiseux refinement of repeated edge roots).

#![allow(dead_code)]

use shimura_towers::algebra::{BiPoly, Field, Poly, PolyRing, Ring};
use shimura_towers::catalog::TowerSpec;
use shimura_towers::ffield::Fq;

pub type Grid = Vec<Vec<u32>>;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum P1 {
    Fin(u32),
    Inf,
}

pub fn p1_points(f: &Fq) -> Vec<P1> {
    f.elements().map(P1::Fin).chain(std::iter::once(P1::Inf)).collect()
}

pub fn reduced(spec: &TowerSpec, f: &Fq) -> Option<BiPoly<u32>> {
    spec.recursion.try_map(f, |c| f.reduce_quad(c)).ok()
}

/// Homogeneous evaluation of a bidegree-(dx, dy) grid.
pub fn hom_eval(f: &Fq, g: &Grid, dx: usize, dy: usize, x: P1, y: P1) -> u32 {
    let mut acc = 0;
    for (i, row) in g.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let xi = match x {
                P1::Fin(a) => f.pow(&a, i as u64),
                P1::Inf => u32::from(i == dx),
            };
            let yj = match y {
                P1::Fin(b) => f.pow(&b, j as u64),
                P1::Inf => u32::from(j == dy),
            };
            acc = f.add(&acc, &f.mul(c, &f.mul(&xi, &yj)));
        }
    }
    acc
}

pub fn pad(g: &mut Grid, i: usize, j: usize) {
    if g.len() <= i {
        g.resize(i + 1, Vec::new());
    }
    if g[i].len() <= j {
        g[i].resize(j + 1, 0);
    }
}

pub fn get(g: &Grid, i: usize, j: usize) -> u32 {
    g.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
}

/// Local coordinate: `a + u`, or `1/u` (after clearing `u^deg`).
pub fn chart_poly(r: &PolyRing<Fq>, pt: P1, i: usize, deg: usize) -> Poly<u32> {
    match pt {
        P1::Fin(a) => r.pow_poly(&r.from_coeffs(vec![a, 1]), i as u64),
        P1::Inf => r.monomial(1, deg - i),
    }
}

pub fn local_grid(f: &Fq, g: &Grid, dx: usize, dy: usize, x: P1, y: P1) -> Grid {
    let r = PolyRing::new(f.clone());
    let mut out: Grid = Vec::new();
    for (i, row) in g.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let px = chart_poly(&r, x, i, dx);
            let py = chart_poly(&r, y, j, dy);
            for (a, ca) in px.coeffs().iter().enumerate() {
                for (b, cb) in py.coeffs().iter().enumerate() {
                    pad(&mut out, a, b);
                    out[a][b] = f.add(&out[a][b], &f.mul(c, &f.mul(ca, cb)));
                }
            }
        }
    }
    out
}

/// Lower-left Newton polygon edges from the v-axis to the u-axis, as
/// lists of lattice points `(i, j)` with `i` increasing.
pub fn newton_edges(g: &Grid) -> Vec<((usize, usize), (usize, usize))> {
    let j0 = (0..).find(|&j| get(g, 0, j) != 0).expect("u does not divide the curve");
    let i0 = (0..g.len()).find(|&i| get(g, i, 0) != 0).expect("v does not divide the curve");
    let mut pts: Vec<(usize, usize)> = Vec::new();
    for i in 0..=i0 {
        if let Some(j) = (0..g.get(i).map_or(0, |r| r.len())).find(|&j| g[i][j] != 0) {
            pts.push((i, j));
        }
    }
    debug_assert_eq!(pts[0], (0, j0));
    let mut hull: Vec<(usize, usize)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as i64 - a.0 as i64) * (p.1 as i64 - a.1 as i64)
                - (b.1 as i64 - a.1 as i64) * (p.0 as i64 - a.0 as i64);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.windows(2).map(|w| (w[0], w[1])).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of rational branches of `g = 0` at the origin.
pub fn rational_branches(f: &Fq, g: &Grid, depth: usize) -> usize {
    assert!(depth < 40, "branch resolution did not terminate");
    let r = PolyRing::new(f.clone());
    let mut total = 0;
    for ((i1, j1), (i2, j2)) in newton_edges(g) {
        let (di, dj) = (i2 - i1, j1 - j2);
        let s = gcd(di, dj);
        let (a, b) = (di / s, dj / s);
        let phi = r.from_coeffs((0..=s).map(|t| get(g, i1 + a * t, j1 - b * t)).collect());
        for (t0, mult) in f.roots_with_multiplicity(&phi).unwrap() {
            if mult == 1 {
                total += 1;
                continue;
            }
            // repeated root: v = u^a (c + v1) with c = 1/t0 along u = s, v ~ s^a
            assert_eq!(b, 1, "repeated root on an edge of slope with denominator > 1");
            let c = f.inv(&t0).unwrap();
            let m = i1 + a * j1;
            let mut sub: Grid = Vec::new();
            for (i, row) in g.iter().enumerate() {
                for (j, cij) in row.iter().enumerate() {
                    if *cij == 0 {
                        continue;
                    }
                    let pj = r.pow_poly(&r.from_coeffs(vec![c, 1]), j as u64);
                    for (k, ck) in pj.coeffs().iter().enumerate() {
                        let e = i + a * j;
                        pad(&mut sub, e, k);
                        sub[e][k] = f.add(&sub[e][k], &f.mul(cij, ck));
                    }
                }
            }
            assert!(sub.iter().take(m).all(|row| row.iter().all(|&x| x == 0)));
            let shifted: Grid = sub.into_iter().skip(m).collect();
            total += rational_branches(f, &shifted, depth + 1);
        }
    }
    total
}

pub fn brute_force_level3(spec: &TowerSpec, f: &Fq) -> Option<usize> {
    let b = reduced(spec, f)?;
    let (dx, dy) = b.bidegree()?;
    let g = b.grid(f);
    let pts = p1_points(f);
    let mut total = 0;
    for &x in &pts {
        for &y in &pts {
            if hom_eval(f, &g, dx, dy, x, y) != 0 {
                continue;
            }
            let local = local_grid(f, &g, dx, dy, x, y);
            total += rational_branches(f, &local, 0);
        }
    }
    Some(total)
}

pub fn sparse(terms: &[(usize, usize, u32)]) -> Grid {
    let mut g: Grid = Vec::new();
    for &(i, j, c) in terms {
        pad(&mut g, i, j);
        g[i][j] = c;
    }
    g
}
