//! Evaluation codes on completely splitting points.
//!
//! The evaluation points of level `n` are the chains `(x_1, …, x_{n−1})`
//! inside the splitting locus with `x_1` finite; the functions are
//! `1, x_1, …, x_1^m`. Since `x_1` has degree `d^{n−2}` on level `n`, a
//! nonzero combination vanishes at most `m·d^{n−2}` times.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Field, ProjPoint, Ring};
use crate::engine::{splitting_locus, Correspondence, Point};
use crate::error::{Error, Result};
use crate::ffield::{Fq, FqElem};

/// Default bound on `q^dim` for exhaustive distance computation.
pub const BRUTE_FORCE_CEILING: u64 = 1 << 24;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CodeParams {
    pub len: usize,
    pub dim: usize,
    pub d_star: usize,
    pub q: u64,
    pub level: usize,
    pub m: usize,
}

#[derive(Clone, Debug)]
pub struct Code {
    pub params: CodeParams,
    pub field: Fq,
    /// evaluation chains in lexicographic order
    pub points: Vec<Vec<Point>>,
    /// row `i` evaluates `x_1^i`
    pub generator: Vec<Vec<FqElem>>,
}

/// Level-`n` chains inside `s` starting at a finite point.
fn splitting_chains(c: &Correspondence, s: &[Point], n: usize) -> Vec<Vec<Point>> {
    let mut chains: Vec<Vec<Point>> =
        s.iter().filter(|x| matches!(x, ProjPoint::Finite(_))).map(|x| vec![x.clone()]).collect();
    for _ in 2..n {
        chains = chains
            .into_iter()
            .flat_map(|ch| {
                let last = ch.last().unwrap().clone();
                c.forward(&last).into_iter().map(move |y| {
                    let mut next = ch.clone();
                    next.push(y);
                    next
                })
            })
            .collect();
    }
    chains
}

pub fn build_code(c: &Correspondence, n: usize, m: usize) -> Result<Code> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("codes live on levels n >= 2, got {n}")));
    }
    let s = splitting_locus(c);
    if s.is_empty() {
        return Err(Error::EmptySplittingLocus);
    }
    let f = &c.field;
    let points = splitting_chains(c, &s, n);
    let len = points.len();
    let fiber = (c.d as usize).pow(n as u32 - 2);
    if m * fiber >= len {
        return Err(Error::PoleBoundTooLarge { m, len });
    }
    let generator: Vec<Vec<FqElem>> = (0..=m)
        .into_par_iter()
        .map(|i| {
            points
                .iter()
                .map(|ch| match ch[0] {
                    ProjPoint::Finite(x) => f.pow(&x, i as u64),
                    ProjPoint::Infinity => unreachable!("finite evaluation points"),
                })
                .collect()
        })
        .collect();
    let params = CodeParams { len, dim: m + 1, d_star: len - m * fiber, q: f.order() as u64, level: n, m };
    Ok(Code { params, field: f.clone(), points, generator })
}

/// Rank of the generator matrix by Gaussian elimination.
pub fn rank(code: &Code) -> usize {
    let f = &code.field;
    let mut rows = code.generator.clone();
    let mut r = 0;
    for col in 0..code.params.len {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, piv);
        let inv = f.inv(&rows[r][col]).unwrap();
        let pivot: Vec<FqElem> = rows[r].iter().map(|a| f.mul(a, &inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let k = row[col];
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a = f.sub(a, &f.mul(&k, b));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

pub fn encode(code: &Code, message: &[FqElem]) -> Result<Vec<FqElem>> {
    let f = &code.field;
    if message.len() != code.params.dim {
        return Err(Error::LengthMismatch { expected: code.params.dim, got: message.len() });
    }
    let mut out = vec![0; code.params.len];
    for (c, row) in message.iter().zip(&code.generator) {
        if *c == 0 {
            continue;
        }
        for (o, g) in out.iter_mut().zip(row) {
            *o = f.add(o, &f.mul(c, g));
        }
    }
    Ok(out)
}

/// Exact minimum weight over nonzero codewords. Messages are enumerated up
/// to scaling (first nonzero entry 1), split across threads by the next
/// entry.
pub fn min_distance_bruteforce(code: &Code, ceiling: u64) -> Result<usize> {
    let q = code.params.q;
    let dim = code.params.dim;
    let size = (q as u128).pow(dim as u32);
    if size > ceiling as u128 {
        return Err(Error::CeilingExceeded { size, limit: ceiling });
    }
    let mut best = code.params.len;
    for lead in 0..dim {
        let tail = dim - lead - 1;
        let w = if tail == 0 {
            let mut msg = vec![0; dim];
            msg[lead] = 1;
            weight(&encode(code, &msg)?)
        } else {
            (0..q as u32)
                .into_par_iter()
                .map(|first| {
                    let mut msg = vec![0u32; dim];
                    msg[lead] = 1;
                    msg[lead + 1] = first;
                    let mut local = usize::MAX;
                    loop {
                        local = local.min(weight(&encode(code, &msg).expect("dimension matches")));
                        // odometer over the remaining entries
                        let mut k = lead + 2;
                        while k < dim {
                            msg[k] += 1;
                            if (msg[k] as u64) < q {
                                break;
                            }
                            msg[k] = 0;
                            k += 1;
                        }
                        if k == dim {
                            break;
                        }
                    }
                    local
                })
                .min()
                .unwrap()
        };
        best = best.min(w);
    }
    Ok(best)
}

fn weight(word: &[FqElem]) -> usize {
    word.iter().filter(|&&a| a != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::tower_by_name;
    use crate::engine::reduce_tower;

    fn code(n: usize, m: usize) -> Code {
        let c = reduce_tower(&tower_by_name("elkies2412").unwrap(), &Fq::new(13, 2).unwrap()).unwrap();
        build_code(&c, n, m).unwrap()
    }

    #[test]
    fn encode_basics() {
        let code = code(2, 2);
        assert_eq!(encode(&code, &[0, 0, 0]).unwrap(), vec![0; code.params.len]);
        assert_eq!(encode(&code, &[1, 0, 0]).unwrap(), vec![1; code.params.len]);
        assert_eq!(encode(&code, &[1, 0]), Err(Error::LengthMismatch { expected: 3, got: 2 }));
    }

    #[test]
    fn repetition_code() {
        let code = code(3, 0);
        assert_eq!(min_distance_bruteforce(&code, BRUTE_FORCE_CEILING), Ok(code.params.len));
    }

    #[test]
    fn pole_bound_checked() {
        let c = reduce_tower(&tower_by_name("elkies2412").unwrap(), &Fq::new(13, 2).unwrap()).unwrap();
        let len = build_code(&c, 2, 0).unwrap().params.len;
        assert_eq!(build_code(&c, 2, len).unwrap_err(), Error::PoleBoundTooLarge { m: len, len });
        let c = reduce_tower(&tower_by_name("elkies2412").unwrap(), &Fq::new(13, 1).unwrap()).unwrap();
        assert_eq!(build_code(&c, 2, 1).unwrap_err(), Error::EmptySplittingLocus);
    }
}
