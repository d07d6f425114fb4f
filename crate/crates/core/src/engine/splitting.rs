//! Completely splitting points and per-level statistics.

use num_bigint::BigInt;
use num_integer::Roots;
use serde::Serialize;

use super::correspondence::{index_point, Correspondence, Point};
use super::count::count_places;
use super::genus::genus_hurwitz;
use crate::algebra::Rat;
use crate::error::Result;

/// Greatest set `S` of non-exceptional rational points whose forward
/// fibers consist of `d` distinct points of `S`.
pub fn splitting_locus(c: &Correspondence) -> Vec<Point> {
    let q = c.q() as usize;
    let mask = c.exceptional_mask();
    let d = c.d as usize;
    let mut fibers: Vec<Option<Vec<usize>>> = vec![None; q + 1];
    let mut fib = Vec::new();
    for i in 0..=q {
        if mask[i] {
            continue;
        }
        c.forward_generic(i, &mut fib);
        if fib.len() == d && fib.iter().all(|&y| !mask[y]) {
            fibers[i] = Some(fib.clone());
        }
    }
    let mut alive: Vec<bool> = fibers.iter().map(|f| f.is_some()).collect();
    loop {
        let mut changed = false;
        for i in 0..=q {
            if alive[i] && fibers[i].as_ref().unwrap().iter().any(|&y| !alive[y]) {
                alive[i] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..=q).filter(|&i| alive[i]).map(|i| index_point(q as u32, i)).collect()
}

/// Exhaustive re-check of the closure property.
pub fn is_splitting_closed(c: &Correspondence, s: &[Point]) -> bool {
    s.iter().all(|x| {
        if c.exceptional.contains(x) {
            return false;
        }
        let fib = c.forward(x);
        fib.len() == c.d as usize && fib.iter().all(|y| s.binary_search(y).is_ok())
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LevelStats {
    pub level: usize,
    pub places: u64,
    pub genus: i64,
    /// `N / g` as a reduced fraction `[num, den]`; absent when `g = 0`
    pub lambda: Option<[String; 2]>,
    pub splitting_bound: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LambdaTable {
    pub tower: String,
    pub p: u64,
    pub q: u64,
    pub splitting_count: u64,
    /// `√q − 1` when `q` is a perfect square
    pub sqrt_q_minus_1: Option<u64>,
    pub levels: Vec<LevelStats>,
}

pub fn lambda_table(c: &Correspondence, n_max: usize) -> Result<LambdaTable> {
    let s = splitting_locus(c).len() as u64;
    let q = c.q() as u64;
    let r = q.sqrt();
    let mut levels = Vec::new();
    for n in 2..=n_max {
        let places = count_places(c, n)?;
        let genus = genus_hurwitz(c, n)?;
        let lambda = (genus > 0).then(|| {
            let l = Rat::new(BigInt::from(places), BigInt::from(genus));
            [l.numer().to_string(), l.denom().to_string()]
        });
        let splitting_bound = s * (c.d as u64).pow(n as u32 - 2);
        levels.push(LevelStats { level: n, places, genus, lambda, splitting_bound });
    }
    Ok(LambdaTable {
        tower: c.spec.name.clone(),
        p: c.p(),
        q,
        splitting_count: s,
        sqrt_q_minus_1: (r * r == q).then(|| r - 1),
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::tower_by_name;
    use crate::engine::reduce_tower;
    use crate::ffield::Fq;

    #[test]
    fn locus_is_closed_and_bounds_counts() {
        let c = reduce_tower(&tower_by_name("new336").unwrap(), &Fq::new(13, 2).unwrap()).unwrap();
        let s = splitting_locus(&c);
        assert!(is_splitting_closed(&c, &s));
        let t = lambda_table(&c, 3).unwrap();
        assert_eq!(t.sqrt_q_minus_1, Some(12));
        assert!(t.levels.iter().all(|l| l.places >= l.splitting_bound));
        assert_eq!(t.levels[0].lambda, None);
    }

    #[test]
    fn pruning_removes_points_that_leave_the_set() {
        let c = reduce_tower(&tower_by_name("elkies2412").unwrap(), &Fq::new(7, 1).unwrap()).unwrap();
        let s = splitting_locus(&c);
        assert!(is_splitting_closed(&c, &s));
        for i in 0..=7 {
            let x = index_point(7, i);
            if s.contains(&x) {
                continue;
            }
            // anything outside S may not be added back
            let mut bigger = s.clone();
            bigger.push(x);
            bigger.sort();
            assert!(!is_splitting_closed(&c, &bigger));
        }
    }
}
