use super::{Poly, PolyRing, Ring};

/// Bivariate polynomial in `x, y`, stored as a polynomial in `x` whose
/// coefficients are polynomials in `y`: `rows[i]` multiplies `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly<E> {
    rows: Poly<Poly<E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug + Send + Sync> BiPoly<E> {
    pub fn zero() -> Self {
        BiPoly { rows: Poly::zero() }
    }

    pub fn from_nested(rows: Poly<Poly<E>>) -> Self {
        BiPoly { rows }
    }

    pub fn nested(&self) -> &Poly<Poly<E>> {
        &self.rows
    }

    pub fn into_nested(self) -> Poly<Poly<E>> {
        self.rows
    }

    /// Builds from a dense grid `grid[i][j]` = coefficient of `x^i y^j`.
    pub fn from_grid<R: Ring<Elem = E>>(ring: &R, grid: Vec<Vec<E>>) -> Self {
        let py = PolyRing::new(ring.clone());
        let pxy = PolyRing::new(py.clone());
        BiPoly { rows: pxy.from_coeffs(grid.into_iter().map(|r| py.from_coeffs(r)).collect()) }
    }

    /// `f(x) · g(y)`.
    pub fn separable<R: Ring<Elem = E>>(ring: &R, f: &Poly<E>, g: &Poly<E>) -> Self {
        let py = PolyRing::new(ring.clone());
        let pxy = PolyRing::new(py.clone());
        BiPoly { rows: pxy.from_coeffs(f.coeffs().iter().map(|c| py.scale(g, c)).collect()) }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_zero()
    }

    /// `(deg_x, deg_y)`; `None` for the zero polynomial.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let dx = self.rows.degree()?;
        let dy = self.rows.coeffs().iter().filter_map(|r| r.degree()).max()?;
        Some((dx, dy))
    }

    pub fn coeff(&self, i: usize, j: usize) -> Option<&E> {
        self.rows.coeff(i).and_then(|r| r.coeff(j))
    }

    /// Dense grid padded with zeros to the bidegree.
    pub fn grid<R: Ring<Elem = E>>(&self, ring: &R) -> Vec<Vec<E>> {
        let Some((dx, dy)) = self.bidegree() else { return Vec::new() };
        (0..=dx)
            .map(|i| (0..=dy).map(|j| self.coeff(i, j).cloned().unwrap_or_else(|| ring.zero())).collect())
            .collect()
    }

    /// `F(y, x)`.
    pub fn transpose<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        let g = self.grid(ring);
        if g.is_empty() {
            return BiPoly::zero();
        }
        let (nx, ny) = (g.len(), g[0].len());
        let t = (0..ny).map(|j| (0..nx).map(|i| g[i][j].clone()).collect()).collect();
        BiPoly::from_grid(ring, t)
    }

    pub fn eval<R: Ring<Elem = E>>(&self, ring: &R, x: &E, y: &E) -> E {
        let py = PolyRing::new(ring.clone());
        let mut acc = ring.zero();
        for row in self.rows.coeffs().iter().rev() {
            acc = ring.add(&ring.mul(&acc, x), &py.eval(row, y));
        }
        acc
    }

    /// Specializes `x`, leaving a polynomial in `y`.
    pub fn eval_x<R: Ring<Elem = E>>(&self, ring: &R, x: &E) -> Poly<E> {
        let py = PolyRing::new(ring.clone());
        let mut acc = Poly::zero();
        for row in self.rows.coeffs().iter().rev() {
            acc = py.add(&py.scale(&acc, x), row);
        }
        acc
    }

    /// Specializes `y`, leaving a polynomial in `x`.
    pub fn eval_y<R: Ring<Elem = E>>(&self, ring: &R, y: &E) -> Poly<E> {
        let py = PolyRing::new(ring.clone());
        py.from_coeffs(self.rows.coeffs().iter().map(|r| py.eval(r, y)).collect())
    }

    pub fn map<R: Ring<Elem = E>, S: Ring>(&self, _from: &R, to: &S, f: impl Fn(&E) -> S::Elem) -> BiPoly<S::Elem> {
        let g: Vec<Vec<S::Elem>> = self
            .rows
            .coeffs()
            .iter()
            .map(|r| r.coeffs().iter().map(&f).collect())
            .collect();
        BiPoly::from_grid(to, g)
    }

    pub fn try_map<S: Ring, Er>(&self, to: &S, f: impl Fn(&E) -> Result<S::Elem, Er>) -> Result<BiPoly<S::Elem>, Er> {
        let g = self
            .rows
            .coeffs()
            .iter()
            .map(|r| r.coeffs().iter().map(&f).collect::<Result<Vec<_>, Er>>())
            .collect::<Result<Vec<_>, Er>>()?;
        Ok(BiPoly::from_grid(to, g))
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        self.map(ring, ring, |a| ring.mul(a, c))
    }

    /// First nonzero coefficient scanning `x`-degree then `y`-degree from
    /// the top; the normalization pivot.
    pub fn leading_coeff(&self) -> Option<&E> {
        self.rows.lc().and_then(|r| r.lc())
    }

    /// `Some(c)` with `self = c · other`, if such a scalar exists.
    pub fn proportional<R: super::Field<Elem = E>>(&self, ring: &R, other: &Self) -> Option<E> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.bidegree() != other.bidegree() {
            return None;
        }
        let c = ring.div(self.leading_coeff()?, other.leading_coeff()?)?;
        let scaled = other.scale(ring, &c);
        (scaled == *self).then_some(c)
    }

    pub fn ring<R: Ring<Elem = E>>(ring: &R) -> PolyRing<PolyRing<R>> {
        PolyRing::new(PolyRing::new(ring.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Rat, Rationals};

    #[test]
    fn bidegree_and_transpose() {
        let q = Rationals;
        let f = BiPoly::from_grid(&q, vec![vec![Rat::from(1), Rat::from(2)], vec![Rat::from(0), Rat::from(0)], vec![Rat::from(3), Rat::zero(), Rat::zero()]]);
        assert_eq!(f.bidegree(), Some((2, 1)));
        let t = f.transpose(&q);
        assert_eq!(t.bidegree(), Some((1, 2)));
        assert_eq!(t.coeff(1, 0), Some(&Rat::from(2)));
        assert_eq!(f.eval(&q, &Rat::from(2), &Rat::from(5)), Rat::from(1 + 10 + 12));
    }

    #[test]
    fn proportionality() {
        let q = Rationals;
        let f = BiPoly::from_grid(&q, vec![vec![Rat::from(1), Rat::from(2)], vec![Rat::from(3)]]);
        let g = f.scale(&q, &Rat::new(-2, 7));
        assert_eq!(g.proportional(&q, &f), Some(Rat::new(-2, 7)));
        let h = BiPoly::from_grid(&q, vec![vec![Rat::from(1), Rat::from(2)], vec![Rat::from(4)]]);
        assert_eq!(h.proportional(&q, &f), None);
    }
}
