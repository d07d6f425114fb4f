use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shimura_towers::agcode::{build_code, encode, min_distance_bruteforce, rank, BRUTE_FORCE_CEILING};
use shimura_towers::algebra::ProjPoint;
use shimura_towers::catalog::tower_by_name;
use shimura_towers::engine::{reduce_tower, splitting_locus, Correspondence};
use shimura_towers::ffield::Fq;

fn over_f169(name: &str) -> Correspondence {
    reduce_tower(&tower_by_name(name).unwrap(), &Fq::new(13, 2).unwrap()).unwrap()
}

#[test]
fn parameters_rank_and_distance() {
    let mut instances = 0;
    for name in ["elkies2412", "new336"] {
        let c = over_f169(name);
        let finite = splitting_locus(&c).iter().filter(|x| matches!(x, ProjPoint::Finite(_))).count();
        for n in 2..=4usize {
            let fiber = (c.d as usize).pow(n as u32 - 2);
            for m in 0..=2 {
                let Ok(code) = build_code(&c, n, m) else { continue };
                let p = &code.params;
                assert_eq!(p.len, finite * fiber);
                assert_eq!(rank(&code), p.dim);
                assert!(p.dim + p.d_star <= p.len + 1);
                let d = min_distance_bruteforce(&code, BRUTE_FORCE_CEILING).unwrap();
                assert!(d >= p.d_star && d <= p.len - p.dim + 1, "{name} n={n} m={m}: d={d} {p:?}");
                if n == 2 {
                    assert_eq!(d, p.len - p.dim + 1);
                }
                instances += 1;
            }
        }
    }
    assert!(instances >= 12);
}

#[test]
fn random_codewords_meet_the_designed_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = over_f169("new336");
    let code = build_code(&c, 3, 3).unwrap();
    for _ in 0..200 {
        let msg: Vec<u32> = (0..code.params.dim).map(|_| rng.gen_range(0..169)).collect();
        let w = encode(&code, &msg).unwrap().iter().filter(|&&a| a != 0).count();
        if msg.iter().any(|&a| a != 0) {
            assert!(w >= code.params.d_star);
        }
    }
}

#[test]
fn large_instances_refuse_brute_force() {
    let code = build_code(&over_f169("new336"), 2, 3).unwrap();
    assert!(min_distance_bruteforce(&code, BRUTE_FORCE_CEILING).is_err());
}

#[test]
fn points_are_lexicographic() {
    let code = build_code(&over_f169("new336"), 3, 1).unwrap();
    assert!(code.points.windows(2).all(|w| w[0] < w[1]));
}
