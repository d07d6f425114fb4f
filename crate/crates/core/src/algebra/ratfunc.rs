use super::{Field, Poly, PolyRing, ProjPoint, Ring};
use crate::error::{Error, Result};

/// Quotient `num / den` of coprime polynomials with monic `den`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug + Send + Sync> RatFunc<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, num: Poly<E>, den: Poly<E>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = PolyRing::new(field.clone());
        let g = r.gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (r.divrem(&num, &g).unwrap().0, r.divrem(&den, &g).unwrap().0)
        };
        let li = field.inv(den.lc().unwrap()).unwrap();
        Ok(RatFunc { num: r.scale(&num, &li), den: r.scale(&den, &li) })
    }

    pub fn from_poly<F: Field<Elem = E>>(field: &F, p: Poly<E>) -> Self {
        RatFunc { num: p, den: PolyRing::new(field.clone()).one() }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, c: E) -> Self {
        Self::from_poly(field, PolyRing::new(field.clone()).constant(c))
    }

    pub fn identity<F: Field<Elem = E>>(field: &F) -> Self {
        Self::from_poly(field, PolyRing::new(field.clone()).x())
    }

    pub fn num(&self) -> &Poly<E> {
        &self.num
    }

    pub fn den(&self) -> &Poly<E> {
        &self.den
    }

    /// `max(deg num, deg den)`; the degree of the induced map on P¹.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, p: &ProjPoint<E>) -> ProjPoint<E> {
        let r = PolyRing::new(field.clone());
        let d = self.degree();
        let (u, v) = p.pair(field);
        let nu = r.eval_homogeneous(&self.num, d, &u, &v);
        let nv = r.eval_homogeneous(&self.den, d, &u, &v);
        ProjPoint::from_pair(field, &nu, &nv).expect("coprime numerator and denominator")
    }

    /// `self ∘ inner`.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, inner: &RatFunc<E>) -> RatFunc<E> {
        let r = PolyRing::new(field.clone());
        let d = self.degree();
        // Homogeneous substitution x = A/B, cleared by B^d.
        let mut apow = vec![r.one()];
        let mut bpow = vec![r.one()];
        for i in 0..d {
            apow.push(r.mul(&apow[i], &inner.num));
            bpow.push(r.mul(&bpow[i], &inner.den));
        }
        let subst = |p: &Poly<E>| {
            let mut acc = r.zero();
            for i in 0..=d {
                let c = r.coeff_or_zero(p, i);
                if !field.is_zero(&c) {
                    acc = r.add(&acc, &r.scale(&r.mul(&apow[i], &bpow[d - i]), &c));
                }
            }
            acc
        };
        RatFunc::new(field, subst(&self.num), subst(&self.den)).expect("composition of nonconstant maps")
    }

    pub fn try_map<F: Field, Er>(&self, to: &F, f: impl Fn(&E) -> std::result::Result<F::Elem, Er>) -> std::result::Result<(Poly<F::Elem>, Poly<F::Elem>), Er> {
        let r = PolyRing::new(to.clone());
        let num = r.from_coeffs(self.num.coeffs().iter().map(&f).collect::<std::result::Result<_, _>>()?);
        let den = r.from_coeffs(self.den.coeffs().iter().map(&f).collect::<std::result::Result<_, _>>()?);
        Ok((num, den))
    }
}

/// The rational function field `F(x)`.
#[derive(Clone, Debug)]
pub struct RatFuncField<F> {
    base: F,
    ring: PolyRing<F>,
}

impl<F: Field> RatFuncField<F> {
    pub fn new(base: F) -> Self {
        RatFuncField { ring: PolyRing::new(base.clone()), base }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn from_poly(&self, p: Poly<F::Elem>) -> RatFunc<F::Elem> {
        RatFunc::from_poly(&self.base, p)
    }

    fn build(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> RatFunc<F::Elem> {
        RatFunc::new(&self.base, num, den).expect("nonzero denominator")
    }
}

impl<F: Field> Ring for RatFuncField<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFunc::from_poly(&self.base, Poly::zero())
    }
    fn one(&self) -> Self::Elem {
        RatFunc::constant(&self.base, self.base.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        self.build(r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den)), r.mul(&a.den, &b.den))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        self.build(r.sub(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den)), r.mul(&a.den, &b.den))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc { num: self.ring.neg(&a.num), den: a.den.clone() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        self.build(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        RatFunc::constant(&self.base, self.base.from_i64(n))
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.div(a, b)
    }
}

impl<F: Field> Field for RatFuncField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_zero() {
            None
        } else {
            Some(self.build(a.den.clone(), a.num.clone()))
        }
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
}
