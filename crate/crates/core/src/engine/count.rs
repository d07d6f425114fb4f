//! Degree-one places of each level.
//!
//! Chains avoiding the exceptional set are counted by a transfer step over
//! `ℙ¹(F_q)`; every other rational place has its last coordinate in the
//! (forward-closed) exceptional set and is enumerated explicitly.

use rayon::prelude::*;

use super::correspondence::{index_point, Correspondence};
use super::places::places_over;
use crate::algebra::{Field, ProjPoint, Ring};
use crate::error::{Error, Result};
use crate::ffield::FqElem;

const CHUNK: usize = 1 << 13;
const BATCH: usize = 64;

impl Correspondence {
    /// Forward fiber of the point with index `i`, as indices; `i` must not
    /// be a zero or pole of `h`.
    pub(crate) fn forward_generic(&self, i: usize, out: &mut Vec<usize>) {
        let f = &self.field;
        let q = self.q();
        out.clear();
        let c = match index_point(q, i) {
            ProjPoint::Finite(a) => {
                let n = horner(f, self.h_num.coeffs(), a);
                let d = horner(f, self.h_den.coeffs(), a);
                f.div(&n, &d).expect("not a pole")
            }
            ProjPoint::Infinity => match self.h_value(&ProjPoint::Infinity) {
                ProjPoint::Finite(c) => c,
                _ => unreachable!("not a pole"),
            },
        };
        let m = &self.sigma_inv;
        for z in f.nth_roots(c, self.d) {
            let num = f.add(&f.mul(&m.a, &z), &m.b);
            let den = f.add(&f.mul(&m.c, &z), &m.d);
            let y = if den == 0 { q as usize } else { f.div(&num, &den).unwrap() as usize };
            out.push(y);
        }
    }
}

fn horner(f: &crate::ffield::Fq, cs: &[FqElem], a: FqElem) -> FqElem {
    cs.iter().rev().fold(0, |acc, c| f.add(&f.mul(&acc, &a), c))
}

/// Number of rational chains avoiding the exceptional set that end at each
/// point, at level `n` (zero on exceptional points).
pub fn chain_weights(c: &Correspondence, n: usize) -> Vec<u64> {
    let mask = c.exceptional_mask();
    let mut w: Vec<u64> = mask.iter().map(|&e| if e { 0 } else { 1 }).collect();
    for _ in 2..n {
        w = transfer(c, &w, &mask);
    }
    w
}

fn transfer(c: &Correspondence, w: &[u64], mask: &[bool]) -> Vec<u64> {
    let total = w.len();
    let chunks: Vec<(usize, usize)> = (0..total).step_by(CHUNK).map(|s| (s, (s + CHUNK).min(total))).collect();
    let mut next = vec![0u64; total];
    for batch in chunks.chunks(BATCH) {
        let parts: Vec<Vec<(usize, u64)>> = batch
            .par_iter()
            .map(|&(s, e)| {
                let mut out = Vec::new();
                let mut fib = Vec::with_capacity(c.d as usize);
                for i in s..e {
                    if w[i] == 0 || mask[i] {
                        continue;
                    }
                    c.forward_generic(i, &mut fib);
                    out.extend(fib.iter().filter(|&&y| !mask[y]).map(|&y| (y, w[i])));
                }
                out
            })
            .collect();
        for part in parts {
            for (y, v) in part {
                next[y] += v;
            }
        }
    }
    next
}

/// Rational places of level `n` over the working field.
pub fn count_places(c: &Correspondence, n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("level must be at least 2, got {n}")));
    }
    let generic: u64 = chain_weights(c, n).iter().sum();
    let special = places_over(c, &c.exceptional, n - 2)?.len() as u64;
    Ok(generic + special)
}

/// `N_{n,k}`: degree-one places of level `n` over the degree-`k` extension.
pub fn level_places(c: &Correspondence, n: usize, k: u32) -> Result<u64> {
    count_places(&c.extend(k)?, n)
}

/// `N_{n,1}, …, N_{n,K}`.
pub fn level_counts(c: &Correspondence, n: usize, kmax: u32) -> Result<Vec<u64>> {
    (1..=kmax).map(|k| level_places(c, n, k)).collect()
}
