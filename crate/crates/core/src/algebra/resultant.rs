//! Resultants over an integral domain.
//!
//! [`resultant`] runs the subresultant pseudo-remainder sequence, where
//! every intermediate division is exact in the coefficient domain.
//! [`sylvester_resultant`] is a fraction-free Bareiss determinant of the
//! Sylvester matrix; it is slower and kept as an independent cross-check.

use super::{Poly, PolyRing, Ring};

/// `Res(a, b)` with the convention `Res(a, b) = lc(a)^deg b · Π b(α)` over
/// the roots `α` of `a`.
pub fn resultant<R: Ring>(ring: &R, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> R::Elem {
    let pr = PolyRing::new(ring.clone());
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return ring.zero();
    };
    let (mut a, mut b, mut negate) = if da < db {
        (b.clone(), a.clone(), da % 2 == 1 && db % 2 == 1)
    } else {
        (a.clone(), b.clone(), false)
    };
    let sign = |x: R::Elem, neg: bool| if neg { ring.neg(&x) } else { x };
    let db = b.degree().unwrap();
    if db == 0 {
        let lb = b.lc().unwrap();
        return sign(ring.pow(lb, a.degree().unwrap() as u64), negate);
    }
    let mut g = ring.one();
    let mut h = ring.one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pr.prem(&a, &b);
        a = b;
        if r.is_zero() {
            return ring.zero();
        }
        let divisor = ring.mul(&g, &ring.pow(&h, delta));
        b = pr.from_coeffs(
            r.coeffs()
                .iter()
                .map(|c| ring.exact_div(c, &divisor).expect("subresultant division is exact"))
                .collect(),
        );
        g = a.lc().unwrap().clone();
        if delta > 0 {
            h = ring
                .exact_div(&ring.pow(&g, delta), &ring.pow(&h, delta - 1))
                .expect("subresultant division is exact");
        }
        let db = b.degree().unwrap();
        if db == 0 {
            let da = a.degree().unwrap() as u64;
            let top = ring.pow(b.lc().unwrap(), da);
            let res = ring.exact_div(&top, &ring.pow(&h, da - 1)).expect("subresultant division is exact");
            return sign(res, negate);
        }
    }
}

/// Determinant of the Sylvester matrix by fraction-free elimination.
pub fn sylvester_resultant<R: Ring>(ring: &R, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> R::Elem {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return ring.zero();
    };
    let size = m + n;
    if size == 0 {
        return ring.one();
    }
    let mut mat = vec![vec![ring.zero(); size]; size];
    // Rows hold coefficients from the top degree down.
    for i in 0..n {
        for (k, c) in a.coeffs().iter().rev().enumerate() {
            mat[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in b.coeffs().iter().rev().enumerate() {
            mat[n + i][i + k] = c.clone();
        }
    }
    bareiss_det(ring, mat)
}

fn bareiss_det<R: Ring>(ring: &R, mut mat: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = mat.len();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n {
        if ring.is_zero(&mat[k][k]) {
            let Some(p) = (k + 1..n).find(|&i| !ring.is_zero(&mat[i][k])) else {
                return ring.zero();
            };
            mat.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(&ring.mul(&mat[i][j], &mat[k][k]), &ring.mul(&mat[i][k], &mat[k][j]));
                mat[i][j] = ring.exact_div(&t, &prev).expect("Bareiss division is exact");
            }
            mat[i][k] = ring.zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if negate {
        ring.neg(&det)
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Rat, Rationals};

    #[test]
    fn linear_and_evaluation_cases() {
        let q = Rationals;
        let r = PolyRing::new(q);
        let a = r.from_i64s(&[-3, 1]);
        let b = r.from_i64s(&[-7, 1]);
        assert_eq!(resultant(&q, &a, &b), Rat::from(-4));
        assert_eq!(sylvester_resultant(&q, &a, &b), Rat::from(-4));
        // Res_t(t² − X, t − 1) = 1 − X over Q[X]
        let qx = PolyRing::new(q);
        let rt = PolyRing::new(qx.clone());
        let p = rt.from_coeffs(vec![qx.from_i64s(&[0, -1]), qx.zero(), qx.one()]);
        let l = rt.from_coeffs(vec![qx.from_i64s(&[-1]), qx.one()]);
        assert_eq!(resultant(&qx, &p, &l), qx.from_i64s(&[1, -1]));
        assert_eq!(sylvester_resultant(&qx, &p, &l), qx.from_i64s(&[1, -1]));
    }

    #[test]
    fn common_root_gives_zero() {
        let q = Rationals;
        let r = PolyRing::new(q);
        let a = r.from_i64s(&[2, -3, 1]);
        let b = r.from_i64s(&[-2, 1, 0, 1]);
        // a = (x−1)(x−2), b(1) = 0
        assert_eq!(resultant(&q, &a, &b), Rat::zero());
    }

    #[test]
    fn constant_operand() {
        let q = Rationals;
        let r = PolyRing::new(q);
        let a = r.from_i64s(&[1, 1, 1]);
        let c = r.from_i64s(&[3]);
        assert_eq!(resultant(&q, &a, &c), Rat::from(9));
        assert_eq!(resultant(&q, &c, &a), Rat::from(9));
    }
}
