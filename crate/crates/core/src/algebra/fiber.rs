use super::{squarefree_decomposition, Poly, PolyRing, ProjPoint, RatFunc, RootFinder, Ring};
use crate::error::{Error, Result};

/// A point of a fiber: either a point rational over the coefficient field,
/// or a monic factor with no roots there (each of its roots carrying the
/// same multiplicity).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FiberPoint<E> {
    Rational(ProjPoint<E>),
    Factor(Poly<E>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FiberEntry<E> {
    pub point: FiberPoint<E>,
    pub multiplicity: usize,
}

/// The fiber `f^{-1}(value)` with ramification indices.
///
/// Multiplicities of finite points come from the squarefree decomposition
/// of `num − value·den` (or `den` over `∞`); the point `∞` has
/// multiplicity equal to the degree drop of that polynomial.
pub fn fiber_multiplicities<F: RootFinder>(
    field: &F,
    f: &RatFunc<F::Elem>,
    value: &ProjPoint<F::Elem>,
) -> Result<Vec<FiberEntry<F::Elem>>> {
    if f.is_constant() {
        return Err(Error::ConstantMap);
    }
    let r = PolyRing::new(field.clone());
    let g = match value {
        ProjPoint::Finite(c) => r.sub(f.num(), &r.scale(f.den(), c)),
        ProjPoint::Infinity => f.den().clone(),
    };
    let mut out = Vec::new();
    for (factor, mult) in squarefree_decomposition(field, &g) {
        let roots = field.roots_in_field(&factor);
        let mut rest = factor;
        for a in roots {
            rest = r.divrem(&rest, &r.linear(&a)).unwrap().0;
            out.push(FiberEntry { point: FiberPoint::Rational(ProjPoint::Finite(a)), multiplicity: mult });
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push(FiberEntry { point: FiberPoint::Factor(r.monic(&rest)), multiplicity: mult });
        }
    }
    let drop = f.degree() - g.degree().unwrap_or(0);
    if drop > 0 {
        out.push(FiberEntry { point: FiberPoint::Rational(ProjPoint::Infinity), multiplicity: drop });
    }
    Ok(out)
}

/// `Σ e · deg` over a fiber; equals the degree of the map.
pub fn fiber_degree<E: Clone + PartialEq + std::fmt::Debug + Send + Sync>(fiber: &[FiberEntry<E>]) -> usize {
    fiber
        .iter()
        .map(|e| {
            e.multiplicity
                * match &e.point {
                    FiberPoint::Rational(_) => 1,
                    FiberPoint::Factor(p) => p.degree().unwrap_or(0),
                }
        })
        .sum()
}
