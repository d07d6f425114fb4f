use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use shimura_towers::agcode::{build_code, min_distance_bruteforce, rank};
use shimura_towers::algebra::{BiPoly, Field, PolyRing, ProjPoint, QuadField, QuadNum};
use shimura_towers::catalog::{builtin_towers, parse_towers, quad_json, spec_to_json, TowerSpec};
use shimura_towers::engine::{
    genus_char0, genus_zeta_fit, is_splitting_closed, lambda_table, level_counts, ramification_field_degree,
    reduce_with_ceiling, splitting_locus, Correspondence,
};
use shimura_towers::error::{Error, Result};
use shimura_towers::ffield::Fq;
use shimura_towers::modpoly::{check_symmetry, compute_phi, compute_phi_mod, normalize, reduce_phi};
use shimura_towers::verify::{verify_all, verify_tower};

use crate::output::{point, point_str, Output};
use crate::{Cli, Command, FieldArgs, Global};

/// Primes `≡ ±1 (mod 12)` used when modpoly samples without `--prime`.
const SAMPLE_PRIMES: [u64; 2] = [10007, 10009];

fn towers(g: &Global) -> Result<Vec<TowerSpec>> {
    let mut all = builtin_towers();
    if let Some(path) = &g.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        for t in parse_towers(&text)? {
            if all.iter().any(|u| u.name == t.name) {
                return Err(Error::InvalidSpec(format!("duplicate tower name `{}`", t.name)));
            }
            all.push(t);
        }
    }
    Ok(all)
}

fn tower(g: &Global, name: &str) -> Result<TowerSpec> {
    towers(g)?.into_iter().find(|t| t.name == name).ok_or_else(|| Error::UnknownTower(name.to_string()))
}

fn field(g: &Global, p: u64, k: u32) -> Result<Fq> {
    Fq::with_ceiling(p, k, g.max_field)
}

fn reduce(g: &Global, a: &FieldArgs) -> Result<(TowerSpec, Correspondence)> {
    let spec = tower(g, &a.tower)?;
    let c = reduce_with_ceiling(&spec, &field(g, a.prime, a.ext)?, g.max_field)?;
    Ok((spec, c))
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::VerifyIdentities { tower: name } => verify(g, name.as_deref()),
        Command::Catalog => catalog(g),
        Command::Count { field, level, extensions } => count(g, field, *level, *extensions),
        Command::Genus { tower: name, level, prime, zeta } => genus(g, name, *level, *prime, *zeta),
        Command::Lambda { field, level } => lambda(g, field, *level),
        Command::Splitting { field } => splitting(g, field),
        Command::Modpoly { tower: name, level, prime, seed, samples } => modpoly(g, name, *level, *prime, *seed, *samples),
        Command::Code { field, level, pole_bound, brute_ceiling } => code(g, field, *level, *pole_bound, *brute_ceiling),
    }
}

fn verify(g: &Global, name: Option<&str>) -> Result<Output> {
    let report = match name {
        Some(n) => verify_tower(&tower(g, n)?),
        None => verify_all(&towers(g)?),
    };
    let rows = report
        .checks
        .iter()
        .map(|c| vec![c.tower.clone(), c.identity.clone(), c.passed.to_string(), c.detail.clone()])
        .collect();
    let failures = report.failures();
    let json = json!({ "checks": report.checks, "total": report.checks.len(), "failures": failures });
    Ok(Output::new(json, &["tower", "identity", "passed", "detail"], rows).failing_if(failures > 0))
}

fn catalog(g: &Global) -> Result<Output> {
    let all = towers(g)?;
    let json = Value::Array(all.iter().map(|t| serde_json::to_value(spec_to_json(t)).expect("serializable")).collect());
    let rows = all
        .iter()
        .map(|t| {
            let bad: Vec<String> = t.bad_primes.iter().map(|p| p.to_string()).collect();
            vec![t.name.clone(), t.signature.to_string(), t.norm_of_i.to_string(), t.step_degree().to_string(), bad.join(" ")]
        })
        .collect();
    Ok(Output::new(json, &["name", "signature", "norm_of_i", "step_degree", "bad_primes"], rows))
}

fn count(g: &Global, a: &FieldArgs, level: usize, extensions: u32) -> Result<Output> {
    let (_, c) = reduce(g, a)?;
    let counts = level_counts(&c, level, extensions)?;
    let q = c.q() as u64;
    let rows = counts
        .iter()
        .enumerate()
        .map(|(i, n)| vec![a.tower.clone(), a.prime.to_string(), a.ext.to_string(), (i + 1).to_string(), level.to_string(), n.to_string()])
        .collect();
    let json = json!({ "tower": a.tower, "p": a.prime, "ext": a.ext, "q": q, "level": level, "places": counts });
    Ok(Output::new(json, &["tower", "p", "ext", "k", "level", "places"], rows))
}

fn genus(g: &Global, name: &str, level: usize, prime: u64, zeta: Option<u32>) -> Result<Output> {
    let spec = tower(g, name)?;
    let mut json = json!({ "tower": name, "level": level });
    let (value, matches) = if level <= 2 {
        let value = genus_char0(&spec, level)?;
        json["method"] = json!("belyi fibers in characteristic 0");
        (value, true)
    } else {
        let c = reduce_with_ceiling(&spec, &field(g, prime, 1)?, g.max_field)?;
        let (m, gs) = ramification_field_degree(&c, level)?;
        let value = *gs.last().expect("level at least 3");
        json["method"] = json!("riemann-hurwitz");
        json["p"] = json!(prime);
        json["extension_degree"] = json!(m);
        let mut ok = true;
        if let Some(k) = zeta {
            let counts = level_counts(&c, level, k)?;
            let fit = genus_zeta_fit(c.q() as u64, &counts, 2 * value.max(0) as usize + 2);
            ok = fit.as_ref().ok() == Some(&value);
            json["zeta"] = json!({ "counts": counts, "genus": fit.ok() });
        }
        (value, ok)
    };
    json["genus"] = json!(value);
    let rows = vec![vec![name.to_string(), level.to_string(), value.to_string()]];
    Ok(Output::new(json, &["tower", "level", "genus"], rows).failing_if(!matches))
}

fn lambda(g: &Global, a: &FieldArgs, level: usize) -> Result<Output> {
    let (_, c) = reduce(g, a)?;
    let table = lambda_table(&c, level)?;
    let rows = table
        .levels
        .iter()
        .map(|l| {
            let (num, den) = match &l.lambda {
                Some([n, d]) => (n.clone(), d.clone()),
                None => (String::new(), String::new()),
            };
            vec![l.level.to_string(), l.places.to_string(), l.genus.to_string(), num, den, l.splitting_bound.to_string()]
        })
        .collect();
    let failed = table.levels.iter().any(|l| l.places < l.splitting_bound);
    let json = serde_json::to_value(&table).expect("serializable");
    Ok(Output::new(json, &["level", "places", "genus", "lambda_num", "lambda_den", "splitting_bound"], rows).failing_if(failed))
}

fn splitting(g: &Global, a: &FieldArgs) -> Result<Output> {
    let (_, c) = reduce(g, a)?;
    let s = splitting_locus(&c);
    let closed = is_splitting_closed(&c, &s);
    let json = json!({
        "tower": a.tower, "p": a.prime, "ext": a.ext, "q": c.q(),
        "exceptional": c.exceptional.iter().map(point).collect::<Vec<_>>(),
        "splitting": s.iter().map(point).collect::<Vec<_>>(),
        "size": s.len(),
        "closed": closed,
    });
    let rows = s.iter().map(|x| vec![point_str(x)]).collect();
    Ok(Output::new(json, &["point"], rows).failing_if(!closed))
}

fn coefficient_rows<E: Clone + PartialEq + std::fmt::Debug + Send + Sync>(
    phi: &BiPoly<E>,
    zero: &E,
    cell: impl Fn(&E) -> (Value, Vec<String>),
) -> (Vec<Value>, Vec<Vec<String>>) {
    let (dx, dy) = phi.bidegree().unwrap_or((0, 0));
    let mut json = Vec::new();
    let mut rows = Vec::new();
    for i in 0..=dx {
        for j in 0..=dy {
            let c = phi.coeff(i, j).unwrap_or(zero);
            if c == zero {
                continue;
            }
            let (v, mut r) = cell(c);
            json.push(json!({ "i": i, "j": j, "c": v }));
            let mut row = vec![i.to_string(), j.to_string()];
            row.append(&mut r);
            rows.push(row);
        }
    }
    (json, rows)
}

fn modpoly(g: &Global, name: &str, level: usize, prime: Option<u64>, seed: Option<u64>, samples: usize) -> Result<Output> {
    let spec = tower(g, name)?;
    let exact = compute_phi(&spec, level)?;
    let mut failed = false;
    let mut json = json!({ "tower": name, "level": level, "bidegree": exact.bidegree() });
    let output = match prime {
        None => {
            let sym = check_symmetry(&QuadField, &exact);
            failed |= sym.scalar.is_none();
            json["symmetry"] = json!({ "scalar": sym.scalar.as_ref().map(quad_json), "residual_terms": sym.residual_terms });
            let (coeffs, rows) = coefficient_rows(&exact, &QuadNum::zero(), |c| {
                let q = quad_json(c);
                let flat = [&q.a[0], &q.a[1], &q.b[0], &q.b[1]].iter().map(|v| v.to_string().trim_matches('"').to_string()).collect();
                (serde_json::to_value(q).expect("serializable"), flat)
            });
            json["coefficients"] = Value::Array(coeffs);
            (rows, vec!["i", "j", "a_num", "a_den", "b_num", "b_den"])
        }
        Some(p) => {
            let f = field(g, p, 1)?;
            let modp = compute_phi_mod(&spec, level, &f)?;
            let agrees = normalize(&f, &reduce_phi(&exact, &f)?) == modp;
            let sym = check_symmetry(&f, &modp);
            failed |= !agrees || sym.scalar.is_none();
            json["p"] = json!(p);
            json["matches_reduction"] = json!(agrees);
            json["symmetry"] = json!({ "scalar": sym.scalar, "residual_terms": sym.residual_terms });
            let (coeffs, rows) = coefficient_rows(&modp, &0, |c| (json!(c), vec![c.to_string()]));
            json["coefficients"] = Value::Array(coeffs);
            (rows, vec!["i", "j", "c"])
        }
    };
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let primes: Vec<u64> = match prime {
            Some(p) => vec![p],
            None => SAMPLE_PRIMES.to_vec(),
        };
        let per = samples.div_ceil(primes.len());
        let mut checked = Vec::new();
        for p in primes {
            let f = field(g, p, 1)?;
            let phi = reduce_phi(&exact, &f)?;
            let bad = sample_vanishing(&spec, level, &f, &phi, per, &mut rng)?;
            failed |= bad > 0;
            checked.push(json!({ "p": p, "points": per, "nonvanishing": bad }));
        }
        json["samples"] = json!({ "seed": seed, "checks": checked });
    }
    let (rows, header) = output;
    Ok(Output::new(json, &header, rows).failing_if(failed))
}

/// Number of sampled points `(f(u), f(ω(u)))` where `Φ` does not vanish.
fn sample_vanishing(spec: &TowerSpec, level: usize, f: &Fq, phi: &BiPoly<u32>, count: usize, rng: &mut ChaCha8Rng) -> Result<usize> {
    let k = QuadField;
    let (map, w) = match level {
        1 => (spec.j_map.clone(), spec.omega1.clone()),
        _ => (spec.j_map.compose(&k, &spec.level2_map), spec.omega2.clone()),
    };
    let red = |c: &QuadNum| f.reduce_quad(c);
    let (num, den) = map.try_map(f, red)?;
    let w = w.try_map(f, red)?;
    let r = PolyRing::new(f.clone());
    let eval = |u: u32| f.div(&r.eval(&num, &u), &r.eval(&den, &u));
    let (mut done, mut bad, mut tries) = (0, 0, 0usize);
    while done < count {
        tries += 1;
        if tries > 100 * count + 1000 {
            return Err(Error::InvalidArgument(format!("too few sample points over F_{}", f.p())));
        }
        let u = rng.gen_range(0..f.order());
        let ProjPoint::Finite(wu) = w.apply(f, &ProjPoint::Finite(u)) else { continue };
        let (Some(x), Some(y)) = (eval(u), eval(wu)) else { continue };
        if phi.eval(f, &x, &y) != 0 {
            bad += 1;
        }
        done += 1;
    }
    Ok(bad)
}

fn code(g: &Global, a: &FieldArgs, level: usize, m: usize, brute_ceiling: u64) -> Result<Output> {
    let (_, c) = reduce(g, a)?;
    let code = build_code(&c, level, m)?;
    let r = rank(&code);
    let p = &code.params;
    let mut failed = r != p.dim;
    let mut json = json!({
        "tower": a.tower, "p": a.prime, "ext": a.ext,
        "params": p,
        "rank": r,
        "points": code.points.iter().map(|ch| ch.iter().map(point).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "generator": code.generator,
    });
    match min_distance_bruteforce(&code, brute_ceiling) {
        Ok(d) => {
            failed |= d < p.d_star;
            json["min_distance"] = json!(d);
        }
        Err(Error::CeilingExceeded { .. }) => json["min_distance"] = Value::Null,
        Err(e) => return Err(e),
    }
    let rows = code.generator.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect();
    let header: Vec<String> = (0..p.len).map(|i| format!("c{i}")).collect();
    let header: Vec<&str> = header.iter().map(|s| s.as_str()).collect();
    Ok(Output::new(json, &header, rows).failing_if(failed))
}
