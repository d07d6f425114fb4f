//! Expected data for each built-in tower, stored independently of the
//! catalog so the checks compare two sources.

use crate::algebra::{BiPoly, FiberPoint, Poly, PolyRing, ProjPoint, QuadField, QuadNum, Rat, Ring};

pub struct FiberFixture {
    pub level: usize,
    pub value: ProjPoint<QuadNum>,
    pub entries: Vec<(FiberPoint<QuadNum>, usize)>,
}

#[derive(Clone, Copy, Debug)]
pub enum WhichMap {
    Omega1,
    Omega2,
}

pub enum SwapKind {
    Swap(ProjPoint<QuadNum>, ProjPoint<QuadNum>),
    Fixed(ProjPoint<QuadNum>),
    /// roots of `from` map onto roots of `to`, `drop` of them to ∞
    Orbit { from: Poly<QuadNum>, to: Poly<QuadNum>, drop: usize },
}

pub struct SwapFixture {
    pub map: WhichMap,
    pub kind: SwapKind,
}

pub struct HurwitzFixture {
    pub degree: i64,
    pub base_genus: i64,
    pub indices: Vec<u32>,
    pub genus: i64,
}

/// One edge `point — label — parent` of a ramification diagram; the
/// point's order pair `(ord P, ord Q)` must give `label · parent_index`.
pub struct Edge {
    pub point: &'static str,
    pub label: u32,
    pub parent_index: u32,
    pub order_pair: (u32, u32),
}

/// All edges above one point of the lower curve.
pub struct Diagram {
    pub title: &'static str,
    pub degree: u32,
    pub edges: Vec<Edge>,
}

#[derive(Default)]
pub struct TowerFixtures {
    pub fibers: Vec<FiberFixture>,
    pub swaps: Vec<SwapFixture>,
    pub hurwitz: Vec<HurwitzFixture>,
    pub diagrams: Vec<Diagram>,
}

fn q(a: i64, b: i64) -> QuadNum {
    QuadNum::int(a, b)
}

fn fr(n: i64, d: i64) -> QuadNum {
    QuadNum::new(Rat::new(n, d), Rat::zero())
}

fn fin(x: QuadNum) -> ProjPoint<QuadNum> {
    ProjPoint::Finite(x)
}

fn pt(x: QuadNum, m: usize) -> (FiberPoint<QuadNum>, usize) {
    (FiberPoint::Rational(fin(x)), m)
}

fn inf(m: usize) -> (FiberPoint<QuadNum>, usize) {
    (FiberPoint::Rational(ProjPoint::Infinity), m)
}

fn factor(p: Poly<QuadNum>, m: usize) -> (FiberPoint<QuadNum>, usize) {
    (FiberPoint::Factor(p), m)
}

fn poly(cs: Vec<QuadNum>) -> Poly<QuadNum> {
    PolyRing::new(QuadField).from_coeffs(cs)
}

/// `x² + a x + a²`, whose roots are `a ζ3` and `a ζ3²`.
fn zeta_orbit(a: QuadNum) -> Poly<QuadNum> {
    poly(vec![&a * &a, a, q(1, 0)])
}

fn edge(point: &'static str, label: u32, parent_index: u32, order_pair: (u32, u32)) -> Edge {
    Edge { point, label, parent_index, order_pair }
}

fn diagram(title: &'static str, degree: u32, edges: Vec<Edge>) -> Diagram {
    Diagram { title, degree, edges }
}

fn hurwitz(degree: i64, indices: &[u32]) -> HurwitzFixture {
    HurwitzFixture { degree, base_genus: 0, indices: indices.to_vec(), genus: 0 }
}

pub fn tower_fixtures(name: &str) -> TowerFixtures {
    match name {
        "elkies2412" => elkies2412(),
        "elkies239" => elkies239(),
        "new336" => new336(),
        _ => TowerFixtures::default(),
    }
}

fn elkies2412() -> TowerFixtures {
    use WhichMap::*;
    let fibers = vec![
        FiberFixture { level: 1, value: ProjPoint::Infinity, entries: vec![inf(3)] },
        FiberFixture { level: 1, value: fin(q(0, 0)), entries: vec![pt(q(0, 0), 1), pt(fr(3, 4), 2)] },
        FiberFixture { level: 1, value: fin(q(1, 0)), entries: vec![pt(q(1, 0), 1), pt(fr(1, 4), 2)] },
        FiberFixture { level: 2, value: ProjPoint::Infinity, entries: vec![inf(2)] },
        FiberFixture { level: 2, value: fin(fr(3, 4)), entries: vec![pt(q(0, 0), 2)] },
        FiberFixture { level: 2, value: fin(q(0, 0)), entries: vec![factor(poly(vec![q(3, 0), q(0, 0), q(1, 0)]), 1)] },
        FiberFixture { level: 2, value: fin(q(1, 0)), entries: vec![pt(q(1, 0), 1), pt(q(-1, 0), 1)] },
        FiberFixture { level: 2, value: fin(fr(1, 4)), entries: vec![factor(poly(vec![q(2, 0), q(0, 0), q(1, 0)]), 1)] },
    ];
    let x2p3 = poly(vec![q(3, 0), q(0, 0), q(1, 0)]);
    let swaps = vec![
        SwapFixture { map: Omega1, kind: SwapKind::Swap(fin(q(0, 0)), ProjPoint::Infinity) },
        SwapFixture { map: Omega1, kind: SwapKind::Swap(fin(q(1, 0)), fin(fr(3, 4))) },
        SwapFixture { map: Omega2, kind: SwapKind::Swap(fin(q(1, 0)), ProjPoint::Infinity) },
        SwapFixture { map: Omega2, kind: SwapKind::Fixed(fin(q(-1, 0))) },
        SwapFixture { map: Omega2, kind: SwapKind::Orbit { from: x2p3.clone(), to: x2p3, drop: 0 } },
    ];
    let hurwitz = vec![hurwitz(3, &[3, 2, 2]), hurwitz(2, &[2, 2]), hurwitz(6, &[6, 4, 1, 1, 1, 1, 2, 2])];
    let diagrams = vec![
        diagram("t over J=inf", 3, vec![edge("t=inf", 3, 1, (12, 4))]),
        diagram("t over J=0", 3, vec![edge("t=3/4", 2, 1, (4, 2)), edge("t=0", 1, 1, (4, 12))]),
        diagram("t over J=1", 3, vec![edge("t=1", 1, 1, (2, 4)), edge("t=1/4", 2, 1, (2, 1))]),
        diagram("x over t=inf", 2, vec![edge("x=inf", 2, 3, (12, 2))]),
        diagram("x over t=3/4", 2, vec![edge("x=0", 2, 2, (4, 1))]),
        diagram("x over t=0", 2, vec![edge("x=sqrt(-3)", 1, 1, (4, 4)), edge("x=-sqrt(-3)", 1, 1, (4, 4))]),
        diagram("x over t=1", 2, vec![edge("x=1", 1, 1, (2, 12)), edge("x=-1", 1, 1, (2, 2))]),
        diagram("x over t=1/4", 2, vec![edge("x=sqrt(-2)", 1, 2, (2, 1)), edge("x=-sqrt(-2)", 1, 2, (2, 1))]),
    ];
    TowerFixtures { fibers, swaps, hurwitz, diagrams }
}

fn elkies239() -> TowerFixtures {
    use WhichMap::*;
    let zeta = zeta_orbit(q(1, 0));
    let fibers = vec![
        FiberFixture { level: 1, value: ProjPoint::Infinity, entries: vec![inf(1), pt(q(0, 0), 3)] },
        FiberFixture { level: 1, value: fin(q(0, 0)), entries: vec![pt(q(1, 0), 3), pt(fr(1, 9), 1)] },
        FiberFixture {
            level: 1,
            value: fin(q(1, 0)),
            entries: vec![
                pt(QuadNum::new(Rat::from(-1), Rat::new(2, 3)), 2),
                pt(QuadNum::new(Rat::from(-1), Rat::new(-2, 3)), 2),
            ],
        },
        FiberFixture { level: 2, value: ProjPoint::Infinity, entries: vec![inf(3)] },
        FiberFixture { level: 2, value: fin(q(0, 0)), entries: vec![pt(q(0, 0), 3)] },
        FiberFixture { level: 2, value: fin(q(1, 0)), entries: vec![pt(q(1, 0), 1), factor(zeta.clone(), 1)] },
        FiberFixture {
            level: 2,
            value: fin(fr(1, 9)),
            entries: vec![factor(poly(vec![fr(-1, 9), q(0, 0), q(0, 0), q(1, 0)]), 1)],
        },
    ];
    let swaps = vec![
        SwapFixture { map: Omega1, kind: SwapKind::Swap(fin(q(1, 0)), fin(q(0, 0))) },
        SwapFixture { map: Omega1, kind: SwapKind::Fixed(ProjPoint::Infinity) },
        SwapFixture { map: Omega2, kind: SwapKind::Swap(fin(q(1, 0)), ProjPoint::Infinity) },
        SwapFixture { map: Omega2, kind: SwapKind::Orbit { from: zeta.clone(), to: zeta.clone(), drop: 0 } },
        SwapFixture {
            map: Omega2,
            kind: SwapKind::Orbit { from: poly(vec![q(-1, 0), q(0, 0), q(0, 0), q(1, 0)]), to: zeta, drop: 1 },
        },
    ];
    let hurwitz = vec![
        hurwitz(4, &[3, 3, 2, 2]),
        hurwitz(3, &[3, 3]),
        hurwitz(12, &[3, 9, 1, 1, 1, 3, 3, 3, 2, 2, 2, 2, 2, 2]),
    ];
    let diagrams = vec![
        diagram("t over J=inf", 4, vec![edge("t=inf", 1, 1, (9, 9)), edge("t=0", 3, 1, (9, 3))]),
        diagram("t over J=0", 4, vec![edge("t=1/9", 1, 1, (3, 9)), edge("t=1", 3, 1, (3, 1))]),
        diagram("t over J=1", 4, vec![edge("t=(-3+2sqrt3)/3", 2, 1, (2, 1)), edge("t=(-3-2sqrt3)/3", 2, 1, (2, 1))]),
        diagram("x over t=inf", 3, vec![edge("x=inf", 3, 1, (9, 3))]),
        diagram("x over t=0", 3, vec![edge("x=0", 3, 3, (9, 1))]),
        diagram(
            "x over t=1/9",
            3,
            vec![edge("x=9^(-1/3)", 1, 1, (3, 9)), edge("x=9^(-1/3)z", 1, 1, (3, 3)), edge("x=9^(-1/3)z^2", 1, 1, (3, 3))],
        ),
        diagram("x over t=1", 3, vec![edge("x=1", 1, 3, (3, 1)), edge("x=z", 1, 3, (3, 1)), edge("x=z^2", 1, 3, (3, 1))]),
    ];
    TowerFixtures { fibers, swaps, hurwitz, diagrams }
}

fn new336() -> TowerFixtures {
    use WhichMap::*;
    let (up, dn) = (q(1, 1), q(1, -1));
    let up_orbit = zeta_orbit(up.clone());
    let dn_orbit = zeta_orbit(dn.clone());
    let fibers = vec![
        FiberFixture { level: 1, value: ProjPoint::Infinity, entries: vec![pt(q(-5, 3), 2), pt(q(-5, -3), 2)] },
        FiberFixture { level: 1, value: fin(q(0, 0)), entries: vec![inf(1), pt(fr(-1, 2), 3)] },
        FiberFixture { level: 1, value: fin(q(1, 0)), entries: vec![pt(q(0, 0), 1), pt(q(4, 0), 3)] },
        FiberFixture {
            level: 2,
            value: ProjPoint::Infinity,
            entries: vec![pt(up.clone(), 1), factor(up_orbit.clone(), 1)],
        },
        FiberFixture { level: 2, value: fin(q(0, 0)), entries: vec![pt(dn.clone(), 1), factor(dn_orbit.clone(), 1)] },
    ];
    // (1 − √3)³ = 10 − 6√3
    let dn_cube = poly(vec![q(-10, 6), q(0, 0), q(0, 0), q(1, 0)]);
    let r = PolyRing::new(QuadField);
    let swaps = vec![
        SwapFixture { map: Omega1, kind: SwapKind::Swap(ProjPoint::Infinity, fin(q(-5, 3))) },
        SwapFixture { map: Omega1, kind: SwapKind::Swap(fin(q(0, 0)), fin(q(-5, -3))) },
        SwapFixture { map: Omega2, kind: SwapKind::Swap(fin(dn.clone()), fin(up.clone())) },
        SwapFixture { map: Omega2, kind: SwapKind::Orbit { from: up_orbit.clone(), to: up_orbit, drop: 0 } },
        SwapFixture { map: Omega2, kind: SwapKind::Orbit { from: dn_orbit.clone(), to: dn_orbit.clone(), drop: 0 } },
        SwapFixture {
            map: Omega2,
            kind: SwapKind::Orbit { from: dn_cube, to: r.mul(&r.linear(&up), &dn_orbit), drop: 0 },
        },
    ];
    let hurwitz = vec![
        hurwitz(4, &[2, 2, 3, 3]),
        hurwitz(3, &[3, 3]),
        hurwitz(12, &[6, 6, 1, 1, 1, 3, 3, 3, 1, 1, 1, 3, 3, 3]),
    ];
    let diagrams = vec![
        diagram("t over J=inf", 4, vec![edge("t=-5+3sqrt3", 2, 1, (6, 3)), edge("t=-5-3sqrt3", 2, 1, (6, 3))]),
        diagram("t over J=0", 4, vec![edge("t=inf", 1, 1, (3, 6)), edge("t=-1/2", 3, 1, (3, 1))]),
        diagram("t over J=1", 4, vec![edge("t=0", 1, 1, (3, 6)), edge("t=4", 3, 1, (3, 1))]),
        diagram(
            "x over t=inf",
            3,
            vec![edge("x=1+sqrt3", 1, 1, (3, 3)), edge("x=(1+sqrt3)z", 1, 1, (3, 3)), edge("x=(1+sqrt3)z^2", 1, 1, (3, 3))],
        ),
        diagram(
            "x over t=0",
            3,
            vec![edge("x=1-sqrt3", 1, 1, (3, 3)), edge("x=(1-sqrt3)z", 1, 1, (3, 3)), edge("x=(1-sqrt3)z^2", 1, 1, (3, 3))],
        ),
        diagram("x over t=-5+3sqrt3", 3, vec![edge("x", 3, 2, (6, 1))]),
        diagram("x over t=-5-3sqrt3", 3, vec![edge("x", 3, 2, (6, 1))]),
    ];
    TowerFixtures { fibers, swaps, hurwitz, diagrams }
}

/// `Y³ (4(X+1)³ + c (X−2)³) − (−8c (X+1)³ + 4 (X−2)³)` with `c = 5 − 3√3`.
pub fn displayed_normal_form() -> BiPoly<QuadNum> {
    let k = QuadField;
    let r = PolyRing::new(k);
    let c = q(5, -3);
    let xp1 = r.pow_poly(&r.from_i64s(&[1, 1]), 3);
    let xm2 = r.pow_poly(&r.from_i64s(&[-2, 1]), 3);
    let lead = r.add(&r.scale(&xp1, &q(4, 0)), &r.scale(&xm2, &c));
    let tail = r.add(&r.scale(&xp1, &(&c * &q(-8, 0))), &r.scale(&xm2, &q(4, 0)));
    let y3 = r.from_i64s(&[0, 0, 0, 1]);
    let pxy = BiPoly::<QuadNum>::ring(&k);
    let a = BiPoly::separable(&k, &lead, &y3);
    let b = BiPoly::separable(&k, &tail, &r.one());
    BiPoly::from_nested(pxy.sub(a.nested(), b.nested()))
}
