//! One PASS/FAIL line per acceptance criterion, with tolerances and timings.
//!
//! Exits nonzero if any criterion fails, except for a documented failure: the
//! golden-table criterion fails on exactly the two reference entries listed in
//! `CORRECTED_ROWS`, which are inconsistent with the rest of the table. Any
//! other difference from the reference table fails the run.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use toric_dual::cone::{boundary_fan, classify_in_z2, cone_eu, hj_eval, hj_expand, hj_length_identity_check, ConeType2D};
use toric_dual::lattice::LatticePoint;
use toric_dual::pllp::{pllp_area_check, Pllp};
use toric_dual::polytope::remove_vertex;
use toric_dual::surface::{p11n_parameter, surface_defectivity_scan, surface_degree, surface_vertex_eu, triangles_in_box};
use toric_dual::threefold::{isolated_vertex_eu_bound_check, threefold_degree, threefold_degree_general, threefold_dual_degree};
use toric_dual::wps::{
    defectivity_and_conjecture_scan, format_table, is_cone_pattern, reduced_triples, wps_polytope, wps_report,
    wps_table, TableFilter, Weights,
};

use common::*;

type Outcome = Result<String, String>;

const DOCUMENTED: &str = "documented deviation from the reference table";
type Criterion = fn() -> Outcome;

fn check(cond: bool, what: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn sorted(mut v: Vec<BigInt>) -> Vec<BigInt> {
    v.sort();
    v
}

fn quadrilateral_vertex() -> Outcome {
    let p = hull(&[&[0, 0], &[0, 2], &[1, 3], &[3, 0]]);
    let v = pt(&[1, 3]);
    let start = Instant::now();
    let eu = surface_vertex_eu(&p, &v).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let i = p.vertex_index(&v).unwrap();
    let outer = p.normalized_volume();
    let inner = remove_vertex(&p, i).remaining.normalized_volume();
    check(eu == big(-1), format!("Eu = {eu}"))?;
    check(outer == big(11) && inner == big(8), format!("volumes {outer}, {inner}"))?;
    check(elapsed < Duration::from_millis(1), format!("took {elapsed:?}, limit 1 ms"))?;
    Ok(format!("Eu(1,3) = -1, volumes 11 and 8, Eu in {elapsed:?} (limit 1 ms)"))
}

fn coprime_pairs(max_d: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=max_d).flat_map(|d| (0..d).filter(move |&k| d.gcd(&k) == 1).map(move |k| (d, k)))
}

fn continued_fractions() -> Outcome {
    let start = Instant::now();
    let e = hj_expand(&big(8), &big(5)).map_err(|e| e.to_string())?;
    check(e.partial_quotients() == ints(&[2, 3, 2]).as_slice(), format!("hj(8,5) = {:?}", e.partial_quotients()))?;
    let fan = boundary_fan(&ConeType2D::from_u64(8, 3).unwrap());
    check(fan.len() == 5, format!("fan of (8,3) has {} points", fan.len()))?;
    // A_{i-1} + A_{i+1} = b_i A_i with [b_i] = hj(8, 5)
    for (i, b) in e.partial_quotients().iter().enumerate() {
        let lhs = &fan[i] + &fan[i + 2];
        check(lhs == b * &fan[i + 1], format!("recurrence fails at {}", i + 1))?;
    }
    let mut count = 0;
    for (d, k) in coprime_pairs(500).filter(|&(d, _)| d > 1) {
        let (d, k) = (BigInt::from(d), BigInt::from(k));
        let back = hj_eval(&hj_expand(&d, &k).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        check(back == (d.clone(), k.clone()), format!("roundtrip fails for {d}/{k}"))?;
        count += 1;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(1), format!("took {elapsed:?}, limit 1 s"))?;
    Ok(format!("hj(8,5) = [2,3,2], 5-point fan, {count} roundtrips for d <= 500 in {elapsed:?} (limit 1 s)"))
}

fn length_identity() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (d, k) in coprime_pairs(500).filter(|&(d, k)| d > 1 && k > 0) {
        let ok = hj_length_identity_check(&BigInt::from(d), &BigInt::from(k)).map_err(|e| e.to_string())?;
        check(ok, format!("fails for ({d},{k})"))?;
        count += 1;
    }
    Ok(format!("{count} coprime pairs with d <= 500 in {:?}", start.elapsed()))
}

fn surface_pipeline(q: [u64; 3]) -> Result<BigInt, String> {
    let w = Weights::new(q.to_vec()).map_err(|e| e.to_string())?;
    surface_degree(&wps_polytope(&w).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn surface_degrees() -> Outcome {
    let start = Instant::now();
    check(surface_pipeline([1, 2, 3])? == big(7), "P(1,2,3)")?;
    check(surface_pipeline([3, 4, 5])? == big(155), "P(3,4,5)")?;
    let mut checked = 2;
    for k in 1..=50i64 {
        let want = big(24 * k * k * k - 20 * k + 3);
        let got = surface_pipeline([2 * k as u64 - 1, 2 * k as u64, 2 * k as u64 + 1])?;
        check(got == want, format!("(2k-1,2k,2k+1) at k = {k}: {got} vs {want}"))?;
        checked += 1;
    }
    for m in 1..=50i64 {
        for n in m..=50i64 {
            if m.gcd(&n) != 1 {
                continue;
            }
            if m + n <= 50 {
                let want = big(3 * m * n * (m + n) - 5 * (m + n) + 4);
                let got = surface_pipeline([m as u64, n as u64, (m + n) as u64])?;
                check(got == want, format!("({m},{n},{}) : {got} vs {want}", m + n))?;
                checked += 1;
            }
            for (a, b) in [(m, n), (n, m)] {
                if a % 2 == 1 && a + 2 * b <= 50 && (a != b || a == 1) {
                    let want = big((12 * a * b * b + 6 * a * a * b - 14 * b - 9 * a + 5) / 2);
                    let got = surface_pipeline([a as u64, b as u64, (a + 2 * b) as u64])?;
                    check(got == want, format!("({a},{b},{}) : {got} vs {want}", a + 2 * b))?;
                    checked += 1;
                }
            }
        }
    }
    for m in (3..=48i64).step_by(2) {
        let want = big(3 * m * m * m - 19 * m + 3);
        let got = surface_pipeline([m as u64 - 2, m as u64, m as u64 + 2])?;
        check(got == want, format!("(m-2,m,m+2) at m = {m}: {got} vs {want}"))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(5), format!("took {elapsed:?}, limit 5 s"))?;
    Ok(format!("7, 155 and {} closed-formula cases exact in {elapsed:?} (limit 5 s)", checked - 2))
}

fn threefold_examples() -> Outcome {
    let mut detail = Vec::new();
    let start = Instant::now();
    let r = wps_report(&Weights::new(vec![1, 6, 10, 15]).unwrap()).map_err(|e| e.to_string())?;
    let t1 = start.elapsed();
    check(r.degree == big(40), format!("degree {}", r.degree))?;
    check(r.vertex_rsv[1..] == ints(&[4, 6, 7])[..], format!("RSV {:?}", r.vertex_rsv))?;
    check(sorted(r.vertex_eu.clone()) == ints(&[-2, -2, -1, 1]), format!("vertex Eu {:?}", r.vertex_eu))?;
    let edge_eu: Vec<BigInt> = r.report.faces_of_dim(1).map(|f| f.eu.clone()).collect();
    check(sorted(edge_eu.clone()) == ints(&[-3, -1, 0, 1, 1, 1]), format!("edge Eu {edge_eu:?}"))?;
    check(t1 < Duration::from_secs(2), format!("P(1,6,10,15) took {t1:?}"))?;
    detail.push(format!("P(1,6,10,15) = 40 in {t1:?}"));

    let start = Instant::now();
    let r = wps_report(&Weights::new(vec![1, 2, 3, 5]).unwrap()).map_err(|e| e.to_string())?;
    let t2 = start.elapsed();
    check(r.degree == big(2688), format!("degree {}", r.degree))?;
    check(r.vertex_eu.iter().all(|e| e.is_one()), format!("vertex Eu {:?}", r.vertex_eu))?;
    check(r.vertex_rsv[1..] == ints(&[4, 5, 6])[..], format!("RSV {:?}", r.vertex_rsv))?;
    check(t2 < Duration::from_secs(2), format!("P(1,2,3,5) took {t2:?}"))?;
    detail.push(format!("P(1,2,3,5) = 2688 in {t2:?}"));
    Ok(format!("{} (limit 2 s each)", detail.join(", ")))
}

fn euler_tables() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for (name, max, filter) in [
        ("isolated.tsv", 10, TableFilter::Isolated),
        ("non_isolated.tsv", 6, TableFilter::NonIsolated),
    ] {
        let golden = read_golden(name);
        let ours: Vec<String> =
            format_table(&wps_table(max, filter).map_err(|e| e.to_string())?).lines().map(str::to_owned).collect();
        if ours.len() != golden.len() {
            return Err(format!("{name}: {} rows computed, {} in reference", ours.len(), golden.len()));
        }
        for (a, b) in ours.iter().zip(&golden) {
            if a != b {
                mismatches.push((name, a.clone(), b.clone()));
            }
        }
    }
    let documented = mismatches.len() == CORRECTED_ROWS.len()
        && mismatches.iter().all(|(_, a, b)| CORRECTED_ROWS.contains(&(b.as_str(), a.as_str())));
    let mismatches: Vec<String> =
        mismatches.iter().map(|(name, a, b)| format!("{name}: computed `{a}`, reference `{b}`")).collect();
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(60), format!("took {elapsed:?}, limit 60 s"))?;
    if mismatches.is_empty() {
        Ok(format!("52 + 28 rows identical in {elapsed:?} (limit 60 s)"))
    } else {
        Err(format!(
            "{}{} row(s) differ from the reference table in {elapsed:?}: {}",
            if documented { format!("{DOCUMENTED}: ") } else { String::new() },
            mismatches.len(),
            mismatches.join("; ")
        ))
    }
}

fn eu_one_counterexamples() -> Outcome {
    let start = Instant::now();
    let scan = defectivity_and_conjecture_scan(5).map_err(|e| e.to_string())?;
    for w in [[1, 2, 3, 5], [1, 3, 4, 5]] {
        check(scan.eu_one_singular.contains(&w), format!("{w:?} missing from {:?}", scan.eu_one_singular))?;
    }
    Ok(format!("singular with Eu = 1 everywhere: {:?} in {:?}", scan.eu_one_singular, start.elapsed()))
}

fn defectivity() -> Outcome {
    let start = Instant::now();
    let triangles = triangles_in_box(6);
    let total = triangles.len();
    let expected: Vec<bool> = triangles.iter().map(|p| p11n_parameter(p).is_some()).collect();
    let flagged = surface_defectivity_scan(triangles).map_err(|e| e.to_string())?;
    let n_expected = expected.iter().filter(|&&b| b).count();
    check(flagged.iter().all(|d| d.p11n.is_some()), "a flagged triangle is not P(1,1,n)")?;
    check(flagged.len() == n_expected, format!("{} flagged, {n_expected} are P(1,1,n)", flagged.len()))?;

    let scan = defectivity_and_conjecture_scan(10).map_err(|e| e.to_string())?;
    let patterns: Vec<[u64; 4]> =
        reduced_triples(10).into_iter().filter(is_cone_pattern).map(|t| [1, t[0], t[1], t[2]]).collect();
    check(scan.defective == patterns, format!("defective {:?}", scan.defective))?;
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(600), format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} of {total} triangles flagged, all P(1,1,n); {} defective P(1,k,m,n) = cone patterns; {elapsed:?} (limit 10 min)",
        flagged.len(),
        scan.defective.len()
    ))
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(0x5eed);

    for _ in 0..1000 {
        let n = rng.gen_range(3..=6);
        let p = random_polytope(&mut rng, 2, 6, n);
        let pts = p.lattice_points();
        let interior = pts.iter().filter(|x| p.contains_in_interior(x)).count() as i64;
        let boundary = pts.len() as i64 - interior;
        check(p.normalized_volume() == big(2 * interior + boundary - 2), format!("Pick fails on {:?}", p.vertices()))?;
    }

    let mut pllps = 0;
    while pllps < 1000 {
        let n = rng.gen_range(4..=7);
        let p = random_polytope(&mut rng, 3, 3, n);
        let f = rng.gen_range(0..p.facets().len());
        let mut pieces = vec![f];
        if rng.gen_bool(0.5) {
            let shares = |g: usize| {
                let a = &p.facets()[f].vertices;
                p.facets()[g].vertices.iter().filter(|v| a.contains(v)).count() >= 2
            };
            if let Some(g) = (0..p.facets().len()).find(|&g| g != f && shares(g)) {
                pieces.push(g);
            }
        }
        let area: BigInt = pieces.iter().map(|&g| p.facet_area(g)).sum();
        let on_pieces = p
            .lattice_points()
            .iter()
            .filter(|x| pieces.iter().any(|&g| p.facet_slack(&p.facets()[g], x).unwrap().is_zero()))
            .count();
        let k = Pllp::new(p.clone(), pieces).map_err(|e| e.to_string())?;
        let (a, i, b, holds) = pllp_area_check(&k);
        check(holds && a == area, format!("generalized Pick fails on {:?}", p.vertices()))?;
        check(i + b == on_pieces, "point count of pllp")?;
        pllps += 1;
    }

    for _ in 0..500 {
        let (u, w) = loop {
            let u = [rng.gen_range(-9..=9i64), rng.gen_range(-9..=9i64)];
            let w = [rng.gen_range(-9..=9i64), rng.gen_range(-9..=9i64)];
            if u[0] * w[1] - u[1] * w[0] != 0 {
                break (u, w);
            }
        };
        let (t, _, _) = classify_in_z2(&ints(&u), &ints(&w)).map_err(|e| e.to_string())?;
        let tri = hull(&[&[0, 0], &[2 * u[0], 2 * u[1]], &[2 * w[0], 2 * w[1]]]);
        let geometric = surface_vertex_eu(&tri, &LatticePoint::from([0i64, 0])).map_err(|e| e.to_string())?;
        check(cone_eu(&t) == geometric, format!("cone {u:?},{w:?}: {} vs {geometric}", cone_eu(&t)))?;
    }

    for t in reduced_triples(10).into_iter().filter(|t| t[0].gcd(&t[1]) == 1 && t[0].gcd(&t[2]) == 1 && t[1].gcd(&t[2]) == 1) {
        let p = wps_polytope(&Weights::new(vec![1, t[0], t[1], t[2]]).unwrap()).unwrap();
        check(isolated_vertex_eu_bound_check(&p).map_err(|e| e.to_string())?, format!("Eu < 1 on P(1,{t:?})"))?;
    }

    for _ in 0..50 {
        let n = rng.gen_range(4..=7);
        let p = random_polytope(&mut rng, 3, 3, n);
        let a = threefold_degree(&p).map_err(|e| e.to_string())?;
        let b = threefold_degree_general(&p).map_err(|e| e.to_string())?;
        check(a == b, format!("routes differ on {:?}: {a} vs {b}", p.vertices()))?;
    }

    for i in 0..100 {
        let dim = if i % 2 == 0 { 2 } else { 3 };
        let p = random_polytope(&mut rng, dim, 3, dim + 2);
        let m = random_unimodular(&mut rng, dim);
        let t = LatticePoint::from((0..dim).map(|_| rng.gen_range(-5..=5)).collect::<Vec<i64>>());
        let q = transform(&p, &m, &t);
        let deg = |p| if dim == 2 { surface_degree(p) } else { threefold_dual_degree(p).map(|r| r.degree) };
        let (a, b) = (deg(&p).map_err(|e| e.to_string())?, deg(&q).map_err(|e| e.to_string())?);
        check(a == b, format!("degree changes under a unimodular map: {a} vs {b}"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    Ok(format!(
        "Pick x1000, generalized Pick x1000, cone Eu x500, isolated Eu >= 1, routes agree x50, invariance x100 in {elapsed:?} (limit 5 min)"
    ))
}

fn no_mismatch_exit() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_toric-dual");
    let dir = std::env::temp_dir().join(format!("toric-dual-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let simplex = dir.join("simplex.txt");
    std::fs::write(&simplex, "dim 3\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n").unwrap();
    let quad = dir.join("quad.txt");
    std::fs::write(&quad, "dim 2\n0 0\n0 2\n1 3\n3 0\n").unwrap();
    let (s, f) = (simplex.to_str().unwrap(), quad.to_str().unwrap());
    let runs: Vec<(Vec<&str>, i32)> = vec![
        (vec!["surface", "--wps", "1", "2", "3"], 0),
        (vec!["surface", "--wps", "3", "4", "5"], 0),
        (vec!["surface", f], 0),
        (vec!["threefold", "--wps", "1", "6", "10", "15"], 0),
        (vec!["threefold", s], 0),
        (vec!["table", "--max", "6"], 0),
        (vec!["scan", "--max", "4"], 0),
        (vec!["sweep", "surfaces", "--max", "7"], 0),
        (vec!["surface", "--wps", "2", "4", "6"], 2),
        (vec!["surface", s], 2),
    ];
    let start = Instant::now();
    for (args, want) in &runs {
        let status = Command::new(bin).args(args).output().map_err(|e| e.to_string())?.status;
        let code = status.code().unwrap_or(-1);
        check(code != 3, format!("`{}` exited with 3", args.join(" ")))?;
        check(code == *want, format!("`{}` exited with {code}, expected {want}", args.join(" ")))?;
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok(format!("{} CLI runs, none exited with 3, in {:?}", runs.len(), start.elapsed()))
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("quadrilateral vertex", quadrilateral_vertex),
        ("continued fractions", continued_fractions),
        ("length identity", length_identity),
        ("surface dual degrees", surface_degrees),
        ("3-fold examples", threefold_examples),
        ("golden tables", euler_tables),
        ("Eu = 1 counterexamples", eu_one_counterexamples),
        ("defectivity", defectivity),
        ("property suites", property_suites),
        ("no oracle-mismatch exit", no_mismatch_exit),
    ];
    let (mut failed, mut documented) = (0, 0);
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.3}s] {name}: {detail}", i + 1),
            Err(detail) => {
                if detail.starts_with(DOCUMENTED) {
                    documented += 1;
                } else {
                    failed += 1;
                }
                println!("criterion {:>2} FAIL [{secs:.3}s] {name}: {detail}", i + 1);
            }
        }
    }
    let passed = criteria.len() - failed - documented;
    println!("{passed} passed, {} failed ({documented} documented, {failed} unexpected)", failed + documented);
    if failed > 0 {
        std::process::exit(1);
    }
}
