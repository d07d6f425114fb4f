use shimura_towers::catalog::tower_by_name;
use shimura_towers::engine::{genus_hurwitz, genus_zeta_fit, level_counts, reduce_tower, weil_bound_holds};
use shimura_towers::ffield::Fq;

fn fit(name: &str, p: u64, n: usize, kmax: u32) -> (i64, i64, Vec<u64>) {
    let c = reduce_tower(&tower_by_name(name).unwrap(), &Fq::new(p, 1).unwrap()).unwrap();
    let counts = level_counts(&c, n, kmax).unwrap();
    let g = genus_hurwitz(&c, n).unwrap();
    let z = genus_zeta_fit(p, &counts, 8).unwrap();
    assert!(weil_bound_holds(p, counts[0], g), "{name} p={p}: N1={} g={g}", counts[0]);
    (g, z, counts)
}

#[test]
fn level_two_fits_genus_zero() {
    for name in ["elkies2412", "elkies239", "new336"] {
        let (g, z, _) = fit(name, 13, 2, 3);
        assert_eq!((g, z), (0, 0));
    }
}

#[test]
fn level_three_small_towers_agree() {
    for name in ["elkies2412", "elkies239"] {
        for p in [5u64, 7, 11, 13] {
            let (g, z, counts) = fit(name, p, 3, 4);
            assert_eq!(g, 1, "{name} p={p}");
            assert_eq!(z, g, "{name} p={p} counts {counts:?}");
        }
    }
}

#[test]
fn level_three_new_tower_agrees() {
    for p in [11u64, 13] {
        let (g, z, counts) = fit("new336", p, 3, 6);
        assert_eq!(g, 4);
        assert_eq!(z, g, "p={p} counts {counts:?}");
    }
}
