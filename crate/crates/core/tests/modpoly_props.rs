use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shimura_towers::algebra::{BiPoly, Field, PolyRing, QuadField, QuadNum, Rat, Ring};
use shimura_towers::catalog::{covering_degree, tower_by_name, TowerSpec};
use shimura_towers::ffield::Fq;
use shimura_towers::modpoly::{check_symmetry, compute_phi, compute_phi_mod, normalize, reduce_phi};

// p ≡ ±1 (mod 12), so √3 is rational
const PRIMES: [u64; 2] = [10007, 10009];

fn spec(name: &str) -> TowerSpec {
    tower_by_name(name).unwrap()
}

/// `(J(t₀), J(ω(t₀)))` for random `t₀` over `F_p`, skipping poles.
fn sample_points(spec: &TowerSpec, f: &Fq, count: usize, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    let r = PolyRing::new(f.clone());
    let red = |c: &QuadNum| f.reduce_quad(c);
    let (jn, jd) = spec.j_map.try_map(f, red).unwrap();
    let w = spec.omega1.try_map(f, red).unwrap();
    let j = |t: u32| f.div(&r.eval(&jn, &t), &r.eval(&jd, &t));
    let mut out = Vec::new();
    while out.len() < count {
        let t = rng.gen_range(0..f.order() as u32);
        let Some(wt) = f.div(&f.add(&f.mul(&w.a, &t), &w.b), &f.add(&f.mul(&w.c, &t), &w.d)) else { continue };
        if let (Some(x), Some(y)) = (j(t), j(wt)) {
            out.push((x, y));
        }
    }
    out
}

#[test]
fn level_one_bidegrees_match_the_covering_degree() {
    for name in ["elkies2412", "elkies239", "new336"] {
        let s = spec(name);
        let d = covering_degree(s.norm_of_i as u64, 1) as usize;
        assert_eq!(compute_phi(&s, 1).unwrap().bidegree(), Some((d, d)), "{name}");
    }
    assert_eq!(compute_phi(&spec("new336"), 1).unwrap().bidegree(), Some((4, 4)));
    assert_eq!(compute_phi(&spec("elkies2412"), 1).unwrap().bidegree(), Some((3, 3)));
}

#[test]
fn elkies2412_level_one_coefficients() {
    let k = QuadField;
    let q = |n: i64, d: i64| QuadNum::rat(Rat::new(n, d));
    let z = q(0, 1);
    let expect = BiPoly::from_grid(
        &k,
        vec![
            vec![q(-19683, 4), q(19683, 2), q(-19683, 4), z.clone()],
            vec![q(19683, 2), q(43740, 1), q(10935, 2), z.clone()],
            vec![q(-19683, 4), q(10935, 2), q(-4131, 4), z.clone()],
            vec![z.clone(), z.clone(), z, q(1, 1)],
        ],
    );
    assert_eq!(compute_phi(&spec("elkies2412"), 1).unwrap(), expect);
}

#[test]
fn symmetric_up_to_scalar() {
    let k = QuadField;
    for name in ["elkies2412", "elkies239", "new336"] {
        let phi = compute_phi(&spec(name), 1).unwrap();
        let sym = check_symmetry(&k, &phi);
        assert!(sym.scalar.is_some(), "{name}: {} residual terms", sym.residual_terms);
        let f = Fq::new(PRIMES[0], 1).unwrap();
        let phi2 = compute_phi_mod(&spec(name), 2, &f).unwrap();
        assert!(check_symmetry(&f, &phi2).scalar.is_some(), "{name} level 2");
    }
}

#[test]
fn perturbed_phi_is_not_symmetric() {
    let k = QuadField;
    let phi = compute_phi(&spec("new336"), 1).unwrap();
    let mut g = phi.grid(&k);
    g[1][0] = k.add(&g[1][0], &QuadNum::one());
    let sym = check_symmetry(&k, &BiPoly::from_grid(&k, g));
    assert_eq!(sym.scalar, None);
    assert!(sym.residual_terms > 0);
}

#[test]
fn vanishes_on_sampled_correspondence_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(336);
    for name in ["elkies2412", "new336"] {
        let phi = compute_phi(&spec(name), 1).unwrap();
        let mut checked = 0;
        for p in PRIMES {
            let f = Fq::new(p, 1).unwrap();
            let red = reduce_phi(&phi, &f).unwrap();
            let mut g = red.grid(&f);
            g[0][0] = f.add(&g[0][0], &1);
            let perturbed = BiPoly::from_grid(&f, g);
            let pts = sample_points(&spec(name), &f, 100, &mut rng);
            for (x, y) in &pts {
                assert_eq!(red.eval(&f, x, y), 0, "{name} mod {p} at ({x}, {y})");
            }
            assert!(pts.iter().any(|(x, y)| perturbed.eval(&f, x, y) != 0));
            checked += pts.len();
        }
        assert_eq!(checked, 200);
    }
}

#[test]
fn reduction_commutes_with_elimination() {
    for name in ["elkies2412", "elkies239", "new336"] {
        let phi = compute_phi(&spec(name), 1).unwrap();
        for p in PRIMES {
            let f = Fq::new(p, 1).unwrap();
            assert_eq!(normalize(&f, &reduce_phi(&phi, &f).unwrap()), compute_phi_mod(&spec(name), 1, &f).unwrap());
        }
    }
}

#[test]
fn level_two_over_q_sqrt3() {
    let s = spec("elkies2412");
    let phi = compute_phi(&s, 2).unwrap();
    let d = covering_degree(s.norm_of_i as u64, 2) as usize;
    assert_eq!(phi.bidegree(), Some((d, d)));
    assert!(check_symmetry(&QuadField, &phi).scalar.is_some());
    let f = Fq::new(PRIMES[1], 1).unwrap();
    assert_eq!(normalize(&f, &reduce_phi(&phi, &f).unwrap()), compute_phi_mod(&s, 2, &f).unwrap());
}
