use super::{Field, Poly, PolyRing, RatFunc};
use crate::error::{Error, Result};

/// Point of the projective line, normalized to `(u/v : 1)` or `(1 : 0)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum ProjPoint<E> {
    Finite(E),
    Infinity,
}

impl<E: Clone> ProjPoint<E> {
    /// Normalizes a homogeneous pair; `None` for `(0 : 0)`.
    pub fn from_pair<F: Field<Elem = E>>(field: &F, u: &E, v: &E) -> Option<Self> {
        if field.is_zero(v) {
            if field.is_zero(u) {
                None
            } else {
                Some(ProjPoint::Infinity)
            }
        } else {
            Some(ProjPoint::Finite(field.div(u, v).unwrap()))
        }
    }

    pub fn pair<F: Field<Elem = E>>(&self, field: &F) -> (E, E) {
        match self {
            ProjPoint::Finite(a) => (a.clone(), field.one()),
            ProjPoint::Infinity => (field.one(), field.zero()),
        }
    }

    pub fn finite(&self) -> Option<&E> {
        match self {
            ProjPoint::Finite(a) => Some(a),
            ProjPoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn map<T>(&self, f: impl FnOnce(&E) -> T) -> ProjPoint<T> {
        match self {
            ProjPoint::Finite(a) => ProjPoint::Finite(f(a)),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }
}

/// `x ↦ (a x + b) / (c x + d)` with `ad − bc ≠ 0`, defined up to scalar.
#[derive(Clone, Debug, Hash)]
pub struct MobiusMap<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E: Clone + PartialEq + std::fmt::Debug + Send + Sync> MobiusMap<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, a: E, b: E, c: E, d: E) -> Result<Self> {
        let m = MobiusMap { a, b, c, d };
        if field.is_zero(&m.det(field)) {
            return Err(Error::InvalidArgument("singular Möbius matrix".into()));
        }
        Ok(m)
    }

    pub fn identity<F: Field<Elem = E>>(field: &F) -> Self {
        MobiusMap { a: field.one(), b: field.zero(), c: field.zero(), d: field.one() }
    }

    pub fn det<F: Field<Elem = E>>(&self, field: &F) -> E {
        field.sub(&field.mul(&self.a, &self.d), &field.mul(&self.b, &self.c))
    }

    /// `self ∘ other` (matrix product `self · other`).
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let m = |p: &E, q: &E, r: &E, s: &E| field.add(&field.mul(p, q), &field.mul(r, s));
        MobiusMap {
            a: m(&self.a, &other.a, &self.b, &other.c),
            b: m(&self.a, &other.b, &self.b, &other.d),
            c: m(&self.c, &other.a, &self.d, &other.c),
            d: m(&self.c, &other.b, &self.d, &other.d),
        }
    }

    /// Adjugate matrix, equal to the inverse up to scalar.
    pub fn inverse<F: Field<Elem = E>>(&self, field: &F) -> Self {
        MobiusMap { a: self.d.clone(), b: field.neg(&self.b), c: field.neg(&self.c), d: self.a.clone() }
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, p: &ProjPoint<E>) -> ProjPoint<E> {
        let (u, v) = p.pair(field);
        let nu = field.add(&field.mul(&self.a, &u), &field.mul(&self.b, &v));
        let nv = field.add(&field.mul(&self.c, &u), &field.mul(&self.d, &v));
        ProjPoint::from_pair(field, &nu, &nv).expect("invertible map sends points to points")
    }

    /// Equality up to a nonzero scalar.
    pub fn eq_projective<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> bool {
        let x = [&self.a, &self.b, &self.c, &self.d];
        let y = [&other.a, &other.b, &other.c, &other.d];
        (0..4).all(|i| (0..4).all(|j| field.mul(x[i], y[j]) == field.mul(x[j], y[i])))
    }

    /// `Some(λ)` when the matrix is `λ·I`.
    pub fn scalar_value<F: Field<Elem = E>>(&self, field: &F) -> Option<E> {
        (field.is_zero(&self.b) && field.is_zero(&self.c) && self.a == self.d).then(|| self.a.clone())
    }

    /// Square is a scalar matrix and the map is not the identity.
    pub fn is_involution<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.compose(field, self).scalar_value(field).is_some() && self.scalar_value(field).is_none()
    }

    pub fn as_ratfunc<F: Field<Elem = E>>(&self, field: &F) -> RatFunc<E> {
        let r = PolyRing::new(field.clone());
        RatFunc::new(
            field,
            r.from_coeffs(vec![self.b.clone(), self.a.clone()]),
            r.from_coeffs(vec![self.d.clone(), self.c.clone()]),
        )
        .expect("Möbius denominator is nonzero")
    }

    /// `c x² + (d − a) x − b`, whose roots are the finite fixed points.
    /// `∞` is fixed exactly when `c = 0`.
    pub fn fixed_point_poly<F: Field<Elem = E>>(&self, field: &F) -> Poly<E> {
        PolyRing::new(field.clone()).from_coeffs(vec![
            field.neg(&self.b),
            field.sub(&self.d, &self.a),
            self.c.clone(),
        ])
    }

    pub fn try_map<F: Field, Er>(&self, to: &F, f: impl Fn(&E) -> Result<F::Elem, Er>) -> Result<MobiusMap<F::Elem>, Er> {
        let _ = to;
        Ok(MobiusMap { a: f(&self.a)?, b: f(&self.b)?, c: f(&self.c)?, d: f(&self.d)? })
    }
}
