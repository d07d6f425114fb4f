//! Exact arithmetic: rationals, the quadratic field Q(sqrt 3), dense
//! polynomials over an abstract ring, rational functions, Möbius maps,
//! resultants and fiber decomposition.
//!
//! Everything downstream is written against the [`Ring`] / [`Field`]
//! traits so that the same polynomial code runs over Q, Q(sqrt 3) and
//! finite fields. Rings are passed around as explicit context objects
//! (the finite fields need one anyway), elements are plain values.

use std::fmt::Debug;

mod bipoly;
mod fiber;
mod mobius;
mod poly;
mod quad;
mod rat;
mod ratfunc;
mod resultant;
mod roots;

pub use bipoly::BiPoly;
pub use fiber::{fiber_degree, fiber_multiplicities, FiberEntry, FiberPoint};
pub use mobius::{MobiusMap, ProjPoint};
pub use poly::{Poly, PolyRing};
pub use quad::{QuadField, QuadNum};
pub use rat::{Rat, Rationals};
pub use ratfunc::{RatFunc, RatFuncField};
pub use resultant::{resultant, sylvester_resultant};
pub use roots::{quad_roots, squarefree_decomposition, RootFinder};

/// A commutative ring with exact division where it is defined.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// `Some(q)` with `q * b == a`; `None` when `b` does not divide `a`
    /// (or `b` is zero).
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A field. `characteristic` is 0 for Q and Q(sqrt 3).
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a^e` for a signed exponent; `None` for a negative power of zero.
    fn pow_i64(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|ai| self.pow(&ai, e.unsigned_abs()))
        }
    }
}
