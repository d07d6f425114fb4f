//! The three built-in towers and the closed-form combinatorics attached
//! to triangle groups.
//!
//! Every tower is described by a level-1 Belyi map `J(t)`, a level-2
//! coordinate `t = t(x)`, the two Atkin–Lehner involutions and the
//! recursion linking consecutive coordinates. The recursion is kept in
//! Kummer shape `z^d = h(x)` with `z = ω2(y)`; the cleared bivariate
//! polynomial is derived from it.

mod json;

use num_integer::Integer;

use crate::algebra::{BiPoly, MobiusMap, Poly, PolyRing, ProjPoint, QuadField, QuadNum, Rat, RatFunc, Ring};
use crate::error::{Error, Result};

pub use json::{parse_quad, parse_towers, point_json, quad_json, rat_value, spec_from_json, spec_to_json, QuadJson, TowerJson};

/// Signature `(g0; e_1, …, e_r)` of a Fuchsian group together with the
/// normalized area `Area/2π` of its fundamental domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub g0: i64,
    pub orders: Vec<u32>,
    pub area: Rat,
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let orders: Vec<String> = self.orders.iter().map(|e| e.to_string()).collect();
        write!(f, "({};{})", self.g0, orders.join(","))
    }
}

/// `scalar · Π p_i^{e_i}` with possibly negative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub scalar: QuadNum,
    pub factors: Vec<(Poly<QuadNum>, i32)>,
}

impl Factored {
    pub fn to_ratfunc(&self) -> RatFunc<QuadNum> {
        let r = PolyRing::new(QuadField);
        let mut num = r.constant(self.scalar.clone());
        let mut den = r.one();
        for (p, e) in &self.factors {
            let pw = r.pow_poly(p, e.unsigned_abs() as u64);
            if *e >= 0 {
                num = r.mul(&num, &pw);
            } else {
                den = r.mul(&den, &pw);
            }
        }
        RatFunc::new(&QuadField, num, den).expect("nonzero factors")
    }
}

/// `z^exponent = rhs(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerForm {
    pub exponent: u32,
    pub rhs: RatFunc<QuadNum>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticPoint {
    pub label: String,
    pub order: u32,
    pub j_value: ProjPoint<QuadNum>,
}

#[derive(Clone, Debug)]
pub struct TowerSpec {
    pub name: String,
    pub base_field: String,
    pub description: String,
    pub signature: Signature,
    pub j_map: RatFunc<QuadNum>,
    pub j_minus_one: Factored,
    pub level2_map: RatFunc<QuadNum>,
    pub omega1: MobiusMap<QuadNum>,
    pub omega2: MobiusMap<QuadNum>,
    pub recursion: BiPoly<QuadNum>,
    pub z_substitution: MobiusMap<QuadNum>,
    pub kummer: KummerForm,
    pub elliptic_points: Vec<EllipticPoint>,
    pub norm_of_i: u32,
    pub bad_primes: Vec<u64>,
}

impl TowerSpec {
    /// Degree `d` of each step of the tower.
    pub fn step_degree(&self) -> u32 {
        self.kummer.exponent
    }

    /// Whether any constant needs `√3` (so reduction needs `sqrt3`).
    pub fn uses_sqrt3(&self) -> bool {
        let poly_irr = |p: &Poly<QuadNum>| p.coeffs().iter().any(|c| !c.is_rational());
        let rf_irr = |f: &RatFunc<QuadNum>| poly_irr(f.num()) || poly_irr(f.den());
        let mob_irr = |m: &MobiusMap<QuadNum>| [&m.a, &m.b, &m.c, &m.d].iter().any(|c| !c.is_rational());
        rf_irr(&self.j_map)
            || rf_irr(&self.level2_map)
            || rf_irr(&self.kummer.rhs)
            || mob_irr(&self.omega1)
            || mob_irr(&self.omega2)
            || mob_irr(&self.z_substitution)
    }

    /// Structural checks applied to every spec, built-in or loaded.
    pub fn validate(&self) -> Result<()> {
        let k = QuadField;
        let bad = |m: &str| Err(Error::InvalidSpec(format!("{}: {m}", self.name)));
        let d = self.kummer.exponent;
        if d < 2 || !crate::ffield::is_prime(d as u64) {
            return bad("Kummer exponent must be a prime");
        }
        if self.kummer.rhs.is_constant() {
            return bad("Kummer right-hand side is constant");
        }
        for (label, m) in [("omega1", &self.omega1), ("omega2", &self.omega2)] {
            if !m.is_involution(&k) {
                return bad(&format!("{label} is not an involution"));
            }
        }
        if self.j_map.is_constant() || self.level2_map.is_constant() {
            return bad("constant coordinate map");
        }
        if self.recursion.bidegree() != Some((d as usize, d as usize)) {
            return bad("recursion bidegree is not (d, d)");
        }
        let cleared = kummer_bipoly(&self.kummer, &self.z_substitution);
        if self.recursion.proportional(&k, &cleared).is_none() {
            return bad("recursion does not match its Kummer form");
        }
        if self.signature.orders.iter().any(|&e| e < 2) || !self.signature.area.is_positive() {
            return bad("malformed signature");
        }
        Ok(())
    }
}

/// Clears `z^d = N(x)/D(x)`, `z = (αy+β)/(γy+δ)`, to
/// `(αy+β)^d D(x) − N(x) (γy+δ)^d`.
pub fn kummer_bipoly(kummer: &KummerForm, z: &MobiusMap<QuadNum>) -> BiPoly<QuadNum> {
    let k = QuadField;
    let r = PolyRing::new(k);
    let d = kummer.exponent as u64;
    let top = r.pow_poly(&r.from_coeffs(vec![z.b.clone(), z.a.clone()]), d);
    let bot = r.pow_poly(&r.from_coeffs(vec![z.d.clone(), z.c.clone()]), d);
    let a = BiPoly::separable(&k, kummer.rhs.den(), &top);
    let b = BiPoly::separable(&k, kummer.rhs.num(), &bot);
    let pxy = BiPoly::<QuadNum>::ring(&k);
    BiPoly::from_nested(pxy.sub(a.nested(), b.nested()))
}

/// Genus from `2g − 2 = area − Σ (1 − 1/e)`.
pub fn signature_genus(area: &Rat, orders: &[u32]) -> Result<i64> {
    let mut rhs = area.clone();
    for &e in orders {
        rhs = &rhs - &(Rat::one() - Rat::new(1, e as i64));
    }
    let two_g = &rhs + &Rat::from(2);
    if !two_g.is_integer() || !two_g.numer().is_even() {
        return Err(Error::NonIntegralGenus(two_g.to_string()));
    }
    let g: i64 = (two_g.numer() / num_bigint::BigInt::from(2)).try_into().map_err(|_| Error::NonIntegralGenus(two_g.to_string()))?;
    Ok(g)
}

/// `(N + 1) · N^{n−1}`, the degree of level `n` over the `J`-line.
pub fn covering_degree(norm: u64, n: u32) -> u128 {
    assert!(n >= 1, "levels start at 1");
    (norm as u128 + 1) * (norm as u128).pow(n - 1)
}

/// Denominator of `ord_q / ord_p` in lowest terms.
pub fn ram_index(ord_p: u32, ord_q: u32) -> u32 {
    ord_p / ord_p.gcd(&ord_q)
}

pub const TOWER_NAMES: [&str; 3] = ["elkies2412", "elkies239", "new336"];

pub fn builtin_towers() -> Vec<TowerSpec> {
    vec![elkies2412(), elkies239(), new336()]
}

pub fn tower_by_name(name: &str) -> Result<TowerSpec> {
    builtin_towers().into_iter().find(|t| t.name == name).ok_or_else(|| Error::UnknownTower(name.to_string()))
}

fn q(a: i64, b: i64) -> QuadNum {
    QuadNum::int(a, b)
}

fn qr(n: i64, d: i64) -> QuadNum {
    QuadNum::rat(Rat::new(n, d))
}

fn poly(cs: &[QuadNum]) -> Poly<QuadNum> {
    PolyRing::new(QuadField).from_coeffs(cs.to_vec())
}

fn ipoly(cs: &[i64]) -> Poly<QuadNum> {
    PolyRing::new(QuadField).from_i64s(cs)
}

fn ratfunc(num: Poly<QuadNum>, den: Poly<QuadNum>) -> RatFunc<QuadNum> {
    RatFunc::new(&QuadField, num, den).expect("nonzero denominator")
}

fn mobius(a: QuadNum, b: QuadNum, c: QuadNum, d: QuadNum) -> MobiusMap<QuadNum> {
    MobiusMap::new(&QuadField, a, b, c, d).expect("invertible")
}

fn point(label: &str, order: u32, j: Option<i64>) -> EllipticPoint {
    EllipticPoint {
        label: label.into(),
        order,
        j_value: j.map_or(ProjPoint::Infinity, |v| ProjPoint::Finite(q(v, 0))),
    }
}

fn finish(mut spec: TowerSpec) -> TowerSpec {
    spec.recursion = kummer_bipoly(&spec.kummer, &spec.z_substitution);
    spec
}

fn elkies2412() -> TowerSpec {
    // J = t(4t − 3)²
    let j = Factored { scalar: q(1, 0), factors: vec![(ipoly(&[0, 1]), 1), (ipoly(&[-3, 4]), 2)] };
    let omega2 = mobius(q(1, 0), q(3, 0), q(1, 0), q(-1, 0));
    finish(TowerSpec {
        name: "elkies2412".into(),
        base_field: "Q(sqrt3)".into(),
        description: "Tower X0(p2^n) over Q(sqrt3), p2 = (5 - 3 sqrt3), quaternion algebra ramified at (sqrt3)".into(),
        signature: Signature { g0: 0, orders: vec![2, 4, 12], area: Rat::new(1, 6) },
        j_map: j.to_ratfunc(),
        j_minus_one: Factored { scalar: q(1, 0), factors: vec![(ipoly(&[-1, 1]), 1), (ipoly(&[-1, 4]), 2)] },
        level2_map: ratfunc(ipoly(&[3, 0, 1]), ipoly(&[4])),
        omega1: mobius(q(0, 0), q(3, 0), q(4, 0), q(0, 0)),
        omega2: omega2.clone(),
        recursion: BiPoly::zero(),
        z_substitution: omega2,
        // (x² + 3)(z² + 3) = 12
        kummer: KummerForm { exponent: 2, rhs: ratfunc(ipoly(&[3, 0, -3]), ipoly(&[3, 0, 1])) },
        elliptic_points: vec![point("P2", 2, Some(1)), point("P4", 4, Some(0)), point("P12", 12, None)],
        norm_of_i: 2,
        bad_primes: vec![2, 3],
    })
}

fn elkies239() -> TowerSpec {
    // J = −(t − 1)³(9t − 1) / (64 t³)
    let j = Factored {
        scalar: qr(-1, 64),
        factors: vec![(ipoly(&[-1, 1]), 3), (ipoly(&[-1, 9]), 1), (ipoly(&[0, 1]), -3)],
    };
    let omega2 = mobius(q(1, 0), q(2, 0), q(1, 0), q(-1, 0));
    finish(TowerSpec {
        name: "elkies239".into(),
        base_field: "Q(cos(2pi/18))".into(),
        description: "Tower X0(p3^n) over Q(cos(2pi/18)), quaternion algebra unramified at all finite places; formulas have rational coefficients".into(),
        signature: Signature { g0: 0, orders: vec![2, 3, 9], area: Rat::new(1, 18) },
        j_map: j.to_ratfunc(),
        j_minus_one: Factored { scalar: qr(-1, 64), factors: vec![(ipoly(&[-1, 6, 3]), 2), (ipoly(&[0, 1]), -3)] },
        level2_map: ratfunc(ipoly(&[0, 0, 0, 1]), ipoly(&[1])),
        omega1: mobius(q(-1, 0), q(1, 0), q(0, 0), q(1, 0)),
        omega2: omega2.clone(),
        recursion: BiPoly::zero(),
        z_substitution: omega2,
        // x³ + z³ = 1
        kummer: KummerForm { exponent: 3, rhs: ratfunc(ipoly(&[1, 0, 0, -1]), ipoly(&[1])) },
        elliptic_points: vec![point("P2", 2, Some(1)), point("P3", 3, Some(0)), point("P9", 9, None)],
        norm_of_i: 3,
        bad_primes: vec![2, 3],
    })
}

fn new336() -> TowerSpec {
    let c = q(5, -3);
    let cc = q(5, 3);
    // J = 4(2t + 1)³ / (t² + 10t − 2)²
    let quad = ipoly(&[-2, 10, 1]);
    let j = Factored { scalar: q(4, 0), factors: vec![(ipoly(&[1, 2]), 3), (quad.clone(), -2)] };
    let omega2 = mobius(q(-2, 0), q(2, 0), q(1, 0), q(2, 0));
    let two_c = &c * &q(2, 0);
    let two_cc = &cc * &q(2, 0);
    finish(TowerSpec {
        name: "new336".into(),
        base_field: "Q(sqrt3)".into(),
        description: "Tower X0(p3^n) over Q(sqrt3), p3 = (sqrt3), quaternion algebra ramified at p2 = (5 - 3 sqrt3)".into(),
        signature: Signature { g0: 0, orders: vec![3, 3, 6], area: Rat::new(1, 6) },
        j_map: j.to_ratfunc(),
        j_minus_one: Factored {
            scalar: q(-1, 0),
            factors: vec![(ipoly(&[0, 1]), 1), (ipoly(&[-4, 1]), 3), (quad, -2)],
        },
        // t = −((5+3√3)x³ + 4) / (x³ − 2(5+3√3))
        level2_map: ratfunc(
            poly(&[q(-4, 0), q(0, 0), q(0, 0), -cc.clone()]),
            poly(&[-two_cc, q(0, 0), q(0, 0), q(1, 0)]),
        ),
        // ω1(t) = −((5−3√3)t − 2) / (t + (5−3√3))
        omega1: mobius(-c.clone(), q(2, 0), q(1, 0), c.clone()),
        omega2: omega2.clone(),
        recursion: BiPoly::zero(),
        z_substitution: omega2,
        // z³ = 2((5−3√3)x³ + 4) / (x³ − 2(5−3√3))
        kummer: KummerForm {
            exponent: 3,
            rhs: ratfunc(
                poly(&[q(8, 0), q(0, 0), q(0, 0), &c * &q(2, 0)]),
                poly(&[-two_c, q(0, 0), q(0, 0), q(1, 0)]),
            ),
        },
        elliptic_points: vec![point("P3", 3, Some(1)), point("P3'", 3, Some(0)), point("P6", 6, None)],
        norm_of_i: 3,
        bad_primes: vec![2, 3],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_genera_vanish() {
        assert_eq!(signature_genus(&Rat::new(1, 6), &[2, 4, 12]).unwrap(), 0);
        assert_eq!(signature_genus(&Rat::new(1, 18), &[2, 3, 9]).unwrap(), 0);
        assert_eq!(signature_genus(&Rat::new(1, 6), &[3, 3, 6]).unwrap(), 0);
        assert!(signature_genus(&Rat::new(1, 7), &[2, 3, 9]).is_err());
    }

    #[test]
    fn degrees_and_indices() {
        for n in 1..8 {
            assert_eq!(covering_degree(2, n), 3 * 2u128.pow(n - 1));
            assert_eq!(covering_degree(3, n), 4 * 3u128.pow(n - 1));
        }
        assert_eq!(covering_degree(7, 1), 8);
        assert_eq!(ram_index(12, 4), 3);
        assert_eq!(ram_index(2, 1), 2);
        assert_eq!(ram_index(9, 9), 1);
    }

    #[test]
    fn builtin_specs_validate() {
        let towers = builtin_towers();
        assert_eq!(towers.len(), 3);
        for t in &towers {
            t.validate().unwrap();
            assert_eq!(t.j_map.degree() as u128, covering_degree(t.norm_of_i as u64, 1));
            assert_eq!(t.step_degree(), t.norm_of_i);
        }
        assert_eq!(towers[0].recursion.bidegree(), Some((2, 2)));
        let w = &towers[2].omega2;
        assert!(w.eq_projective(&QuadField, &mobius(q(-2, 0), q(2, 0), q(1, 0), q(2, 0))));
        let w = &towers[1].omega1;
        assert_eq!(w.apply(&QuadField, &ProjPoint::Finite(q(1, 0))), ProjPoint::Finite(q(0, 0)));
        assert!(!towers[1].uses_sqrt3());
        assert!(towers[2].uses_sqrt3());
        assert!(tower_by_name("nope").is_err());
    }

    #[test]
    fn elkies239_recursion_is_the_expected_cleared_form() {
        // x³(y−1)³ + (y+2)³ − (y−1)³
        let k = QuadField;
        let t = tower_by_name("elkies239").unwrap();
        let r = PolyRing::new(k);
        let ym1 = r.pow_poly(&ipoly(&[-1, 1]), 3);
        let yp2 = r.pow_poly(&ipoly(&[2, 1]), 3);
        let a = BiPoly::separable(&k, &ipoly(&[0, 0, 0, 1]), &ym1);
        let b = BiPoly::separable(&k, &ipoly(&[1]), &r.sub(&yp2, &ym1));
        let pxy = BiPoly::<QuadNum>::ring(&k);
        let expect = BiPoly::from_nested(pxy.add(a.nested(), b.nested()));
        assert_eq!(t.recursion, expect);
    }
}
