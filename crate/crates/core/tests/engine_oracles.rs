use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shimura_towers::algebra::{PolyRing, ProjPoint, RatFunc};
use shimura_towers::catalog::{builtin_towers, tower_by_name};
use shimura_towers::engine::{
    count_places, genus_hurwitz, is_splitting_closed, lambda_table, reduce_tower, splitting_locus, Correspondence,
};
use shimura_towers::ffield::Fq;

fn roots_of_fiber(c: &Correspondence, x: u32) -> Vec<ProjPoint<u32>> {
    let f = &c.field;
    let r = PolyRing::new(f.clone());
    let fx = c.recursion.eval_x(f, &x);
    let (_, dy) = c.recursion.bidegree().unwrap();
    let deg = fx.degree().unwrap();
    // squarefree over the algebraic closure, with the missing degree at ∞
    let g = r.gcd(&fx, &r.derivative(&fx));
    assert_eq!(g.degree(), Some(0), "repeated root over x = {x}");
    assert!(dy - deg <= 1);
    let mut out: Vec<_> = f.roots_with_multiplicity(&fx).unwrap().into_iter().map(|(y, _)| ProjPoint::Finite(y)).collect();
    if deg < dy {
        out.push(ProjPoint::Infinity);
    }
    out.sort();
    out
}

#[test]
fn correspondence_is_d_regular_off_the_exceptional_set() {
    for spec in builtin_towers() {
        for (p, k) in [(11u64, 1u32), (13, 1), (7, 2)] {
            let f = Fq::new(p, k).unwrap();
            let Ok(c) = reduce_tower(&spec, &f) else { continue };
            for x in f.elements() {
                let pt = ProjPoint::Finite(x);
                if c.exceptional.contains(&pt) {
                    continue;
                }
                assert_eq!(roots_of_fiber(&c, x), c.forward(&pt), "{} over {p}^{k}, x = {x}", spec.name);
                for y in c.forward(&pt) {
                    assert!(c.backward(&y).contains(&pt));
                }
            }
        }
    }
}

#[test]
fn splitting_locus_of_new336_over_f169() {
    let c = reduce_tower(&tower_by_name("new336").unwrap(), &Fq::new(13, 2).unwrap()).unwrap();
    let s = splitting_locus(&c);
    assert_eq!(s.len(), 12);
    assert!(is_splitting_closed(&c, &s));
    let t = lambda_table(&c, 4).unwrap();
    assert_eq!(t.sqrt_q_minus_1, Some(12));
    let rows: Vec<(u64, i64, u64)> = t.levels.iter().map(|l| (l.places, l.genus, l.splitting_bound)).collect();
    assert_eq!(rows, vec![(170, 0, 12), (192, 4, 36), (234, 10, 108)]);
    assert_eq!(t.levels[0].lambda, None);
    assert_eq!(t.levels[1].lambda, Some(["48".into(), "1".into()]));
    assert_eq!(t.levels[2].lambda, Some(["117".into(), "5".into()]));
    for l in &t.levels {
        assert!(l.places >= l.splitting_bound);
    }
}

#[test]
fn splitting_locus_is_empty_over_small_prime_fields() {
    for spec in builtin_towers() {
        for p in [11u64, 13] {
            let c = reduce_tower(&spec, &Fq::new(p, 1).unwrap()).unwrap();
            assert!(splitting_locus(&c).is_empty(), "{} over F_{p}", spec.name);
        }
    }
}

#[test]
fn no_ramification_beyond_level_three() {
    // 2g − 2 triples at each step once all ramification has been absorbed
    let c = reduce_tower(&tower_by_name("new336").unwrap(), &Fq::new(13, 2).unwrap()).unwrap();
    let (g3, g4) = (genus_hurwitz(&c, 3).unwrap(), genus_hurwitz(&c, 4).unwrap());
    assert_eq!(2 * g4 - 2, 3 * (2 * g3 - 2));
    let n4 = count_places(&c, 4).unwrap();
    assert!(n4 as f64 <= 170.0 + 2.0 * 10.0 * 13.0);
}

#[test]
fn atkin_lehner_compatibility_mod_p() {
    // ω⁽¹⁾(t(x)) = t(ω⁽²⁾(y)) on every solved correspondence point
    let mut rng = ChaCha8Rng::seed_from_u64(2412);
    let f = Fq::new(10009, 1).unwrap();
    for spec in builtin_towers() {
        let c = reduce_tower(&spec, &f).unwrap();
        let red = |q: &shimura_towers::algebra::QuadNum| f.reduce_quad(q);
        let (n, d) = spec.level2_map.try_map(&f, red).unwrap();
        let t = RatFunc::new(&f, n, d).unwrap();
        let (w1, w2) = (spec.omega1.try_map(&f, red).unwrap(), spec.omega2.try_map(&f, red).unwrap());
        let mut solved = 0;
        while solved < 20 {
            let x = ProjPoint::Finite(rng.gen_range(0..f.order() as u32));
            if c.exceptional.contains(&x) {
                continue;
            }
            for y in c.forward(&x) {
                assert_eq!(w1.apply(&f, &t.eval(&f, &x)), t.eval(&f, &w2.apply(&f, &y)), "{}", spec.name);
                solved += 1;
            }
        }
    }
}
