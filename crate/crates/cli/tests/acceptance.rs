//! Acceptance suite. Every criterion is an exact identity (tolerance zero);
//! runtime limits are wall-clock bounds on the unoptimized test build.
//!
//! The helpers in `oracle` recompute triangles, the dihedral action and
//! barycenters without going through the library code paths under test.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use assoc_core::verify::{
    all_passed, verify_type_a, verify_type_b, verify_with, Perturbation, VerifyOptions,
};
use assoc_core::{
    all_orientations, cyclohedron_vertices, enumerate_symmetric_triangulations,
    enumerate_triangulations, hl_vertex, hl_weight, permutahedron_b_vertices,
    permutahedron_vertices, stabilizer, transport_isometry, LatticePoint, Orientation,
    Triangulation,
};

mod oracle {
    use super::*;

    pub type Pairs = BTreeSet<(usize, usize)>;

    /// Catalan numbers from the convolution recurrence.
    pub fn catalan_recursive(upto: usize) -> Vec<u64> {
        let mut c = vec![1u64];
        for k in 0..upto {
            c.push((0..=k).map(|i| c[i] * c[k - i]).sum());
        }
        c
    }

    pub fn all_diagonals(m: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 2..m {
                if !(a == 0 && b == m - 1) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn cross(p: (usize, usize), q: (usize, usize)) -> bool {
        (p.0 < q.0 && q.0 < p.1 && p.1 < q.1) || (q.0 < p.0 && p.0 < q.1 && q.1 < p.1)
    }

    /// Every (n-1)-subset of pairwise noncrossing diagonals.
    pub fn brute_force_triangulations(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
        let ds = all_diagonals(n + 2);
        let mut out = BTreeSet::new();
        let mut chosen = Vec::new();
        fn go(
            ds: &[(usize, usize)],
            start: usize,
            need: usize,
            chosen: &mut Vec<(usize, usize)>,
            out: &mut BTreeSet<Vec<(usize, usize)>>,
        ) {
            if chosen.len() == need {
                out.insert(chosen.clone());
                return;
            }
            for x in start..ds.len() {
                if chosen.iter().all(|&c| !cross(c, ds[x])) {
                    chosen.push(ds[x]);
                    go(ds, x + 1, need, chosen, out);
                    chosen.pop();
                }
            }
        }
        go(&ds, 0, n - 1, &mut chosen, &mut out);
        out
    }

    /// The `2m` vertex maps of the regular m-gon as explicit tables.
    pub fn group(m: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for t in 0..m {
            out.push((0..m).map(|x| (x + t) % m).collect());
        }
        for t in 0..m {
            out.push((0..m).map(|x| (t + m - x) % m).collect());
        }
        out
    }

    pub fn image(g: &[usize], ds: &Pairs) -> Pairs {
        ds.iter()
            .map(|&(a, b)| {
                let (x, y) = (g[a], g[b]);
                (x.min(y), x.max(y))
            })
            .collect()
    }

    pub fn pairs(t: &Triangulation) -> Pairs {
        t.pairs().into_iter().collect()
    }

    pub fn to_triangulation(n: usize, ds: &Pairs) -> Triangulation {
        let v: Vec<_> = ds.iter().copied().collect();
        Triangulation::from_pairs(n, &v).unwrap()
    }

    /// δ_j by searching all triples `i < j < k` whose three sides are
    /// present in the triangulation.
    pub fn delta(n: usize, ds: &Pairs, j: usize) -> i64 {
        let m = n + 2;
        let edge = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            b - a == 1 || (a == 0 && b == m - 1) || ds.contains(&(a, b))
        };
        let mut found = Vec::new();
        for i in 0..j {
            for k in j + 1..m {
                if edge(i, j) && edge(j, k) && edge(i, k) {
                    found.push(((j - i) * (k - j)) as i64);
                }
            }
        }
        assert_eq!(found.len(), 1, "triangle at {j} in {ds:?}");
        found[0]
    }

    /// Checks `Σ p / |p| == c` via `2 Σ p == 2 c |p|` with `c = num/2`.
    pub fn centroid_is(points: &[LatticePoint], half_units: i64) -> bool {
        let dim = points[0].dim();
        let count = points.len() as i64;
        (0..dim).all(|i| {
            let s: i64 = points.iter().map(|p| p.coords()[i]).sum();
            2 * s == half_units * count
        })
    }

    pub fn half_turn_symmetric(t: &Triangulation) -> bool {
        let m = t.polygon_size();
        let g: Vec<usize> = (0..m).map(|x| (x + m / 2) % m).collect();
        image(&g, &pairs(t)) == pairs(t)
    }

    /// Orbits of the whole triangulation set by explicit group tables.
    pub fn orbits(n: usize, ts: &[Triangulation]) -> Vec<Vec<Triangulation>> {
        let g = group(n + 2);
        let mut seen: HashSet<Pairs> = HashSet::new();
        let mut out = Vec::new();
        for t in ts {
            let p = pairs(t);
            if seen.contains(&p) {
                continue;
            }
            let members: BTreeSet<Pairs> = g.iter().map(|h| image(h, &p)).collect();
            seen.extend(members.iter().cloned());
            out.push(members.iter().map(|d| to_triangulation(n, d)).collect());
        }
        out
    }
}

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let expected = [1u64, 2, 5, 14, 42, 132, 429, 1430];
    let rec = oracle::catalan_recursive(8);
    for n in 1..=8 {
        let got = enumerate_triangulations(n)
            .map_err(|e| e.to_string())?
            .len() as u64;
        check(got == expected[n - 1], format!("|T_{}| = {got}", n + 2))?;
        check(
            rec[n] == got,
            format!("recurrence gives {} at n={n}", rec[n]),
        )?;
    }
    for n in 1..=6 {
        let got: BTreeSet<Vec<(usize, usize)>> = enumerate_triangulations(n)
            .unwrap()
            .iter()
            .map(|t| t.pairs())
            .collect();
        check(
            got == oracle::brute_force_triangulations(n),
            format!("enumeration differs from brute force at n={n}"),
        )?;
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("counts {expected:?}"))
}

fn criterion_2() -> Result<String, String> {
    let out = run_cli(&["vertices", "--n", "3"]);
    check(out.0 == 0, format!("exit {}", out.0))?;
    let got: BTreeSet<&str> = out.1.lines().collect();
    let expected: BTreeSet<&str> = ["(1,2,3)", "(2,1,3)", "(3,1,2)", "(1,4,1)", "(3,2,1)"]
        .into_iter()
        .collect();
    check(got == expected, format!("vertices {got:?}"))?;
    let bary = run_cli(&["barycenter", "--n", "3"]);
    check(
        bary.1.trim() == "2/1 2/1 2/1",
        format!("barycenter {}", bary.1.trim()),
    )?;
    let pts: Vec<LatticePoint> = expected
        .iter()
        .map(|s| {
            LatticePoint(
                s.trim_matches(|c| c == '(' || c == ')')
                    .split(',')
                    .map(|x| x.parse().unwrap())
                    .collect(),
            )
        })
        .collect();
    check(
        oracle::centroid_is(&pts, 4),
        "oracle centroid of K4 set".into(),
    )?;
    Ok("K4 vertex set and centroid 2/1 2/1 2/1".into())
}

fn criterion_3() -> Result<String, String> {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=8 {
        let orientations = all_orientations(n).unwrap();
        check(
            orientations.len() == 1 << n.saturating_sub(2),
            format!("orientation count at n={n}"),
        )?;
        let ts = enumerate_triangulations(n).unwrap();
        for o in &orientations {
            let pts: Vec<LatticePoint> = ts.iter().map(|t| hl_vertex(o, t).unwrap()).collect();
            let distinct: HashSet<&LatticePoint> = pts.iter().collect();
            check(
                distinct.len() == ts.len(),
                format!("repeated vertex n={n} up={{{o}}}"),
            )?;
            check(
                oracle::centroid_is(&pts, n as i64 + 1),
                format!("centroid n={n} up={{{o}}}"),
            )?;
            checked += 1;
        }
        let perms = permutahedron_vertices(n).unwrap();
        check(
            oracle::centroid_is(&perms, n as i64 + 1),
            format!("permutahedron n={n}"),
        )?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{checked} (n, orientation) pairs"))
}

fn criterion_4() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=7 {
        let ts = enumerate_triangulations(n).unwrap();
        let orbits = oracle::orbits(n, &ts);
        for o in all_orientations(n).unwrap() {
            for orbit in &orbits {
                let pts: Vec<LatticePoint> =
                    orbit.iter().map(|t| hl_vertex(&o, t).unwrap()).collect();
                check(
                    oracle::centroid_is(&pts, n as i64 + 1),
                    format!("orbit of {} n={n} up={{{o}}}", orbit[0]),
                )?;
                checked += 1;
            }
            let reports = verify_type_a(n, std::slice::from_ref(&o)).unwrap();
            check(
                all_passed(&reports),
                format!("library checks n={n} up={{{o}}}"),
            )?;
        }
    }
    Ok(format!("{checked} orbit images"))
}

fn criterion_5() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=7 {
        let target = ((n + 1) * (n + 2)) as i64;
        let g = oracle::group(n + 2);
        for t in enumerate_triangulations(n).unwrap() {
            let p = oracle::pairs(&t);
            for j in 1..=n {
                let sum: i64 = g
                    .iter()
                    .map(|h| oracle::delta(n, &oracle::image(h, &p), j))
                    .sum();
                check(sum == target, format!("n={n} T={t} j={j}: {sum}"))?;
                let r = assoc_core::verify::check_weight_orbit_sum(&t, j).unwrap();
                check(r.passed, r.to_string())?;
                checked += 1;
            }
        }
    }
    let sq = Triangulation::from_pairs(2, &[(0, 2)]).unwrap();
    let g = oracle::group(4);
    let spot: i64 = g
        .iter()
        .map(|h| oracle::delta(2, &oracle::image(h, &oracle::pairs(&sq)), 1))
        .sum();
    check(spot == 12, format!("spot value {spot}"))?;
    Ok(format!("{checked} (T, j) cases, spot value 12"))
}

fn criterion_6() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=6 {
        let target = ((n + 1) * (n + 2)) as i64;
        let g = oracle::group(n + 2);
        let ts = enumerate_triangulations(n).unwrap();
        for o in all_orientations(n).unwrap() {
            for t in &ts {
                let p = oracle::pairs(t);
                let images: Vec<LatticePoint> = g
                    .iter()
                    .map(|h| {
                        hl_vertex(&o, &oracle::to_triangulation(n, &oracle::image(h, &p))).unwrap()
                    })
                    .collect();
                for j in 1..=n {
                    let sum: i64 = images.iter().map(|v| v.coords()[j - 1]).sum();
                    check(
                        sum == target,
                        format!("n={n} up={{{o}}} T={t} j={j}: {sum}"),
                    )?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (A, T, j) cases"))
}

fn criterion_7() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=6 {
        let m = n + 2;
        let ts = enumerate_triangulations(n).unwrap();
        for o in all_orientations(n).unwrap() {
            let labels = o.label_polygon();
            for j in 1..=n {
                let r = transport_isometry(&o, j).unwrap();
                let table: Vec<usize> = (0..m).map(|x| r.apply_vertex(x).unwrap()).collect();
                check(
                    oracle::group(m).contains(&table),
                    format!("r_{j} is not an isometry n={n} up={{{o}}}"),
                )?;
                check(
                    table[labels.position(j)] == j,
                    format!("r_{j} misses A_{j} n={n} up={{{o}}}"),
                )?;
                for (k, &image) in table.iter().enumerate() {
                    check(
                        (labels.label(k) < j) == (image < j),
                        format!("label order at position {k}, j={j}, n={n} up={{{o}}}"),
                    )?;
                }
                for t in &ts {
                    let moved = oracle::image(&table, &oracle::pairs(t));
                    let lhs = hl_weight(&o, t, j).unwrap();
                    let rhs = oracle::delta(n, &moved, j);
                    check(
                        lhs == rhs,
                        format!("n={n} up={{{o}}} T={t} j={j}: {lhs} vs {rhs}"),
                    )?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (A, T, j) cases"))
}

fn criterion_8() -> Result<String, String> {
    let start = Instant::now();
    let expected = [2usize, 6, 20, 70];
    for rank in 1..=4 {
        let all = enumerate_triangulations(2 * rank).unwrap();
        let filtered: Vec<&Triangulation> = all
            .iter()
            .filter(|t| oracle::half_turn_symmetric(t))
            .collect();
        let listed = enumerate_symmetric_triangulations(rank).unwrap();
        check(
            filtered.len() == expected[rank - 1] && listed.len() == filtered.len(),
            format!("rank {rank}: {} vs {}", listed.len(), filtered.len()),
        )?;
        let symmetric: Vec<Orientation> = all_orientations(2 * rank)
            .unwrap()
            .into_iter()
            .filter(|o| (2..2 * rank).all(|j| o.is_up(j) != o.is_up(2 * rank + 1 - j)))
            .collect();
        check(
            symmetric.len() == 1 << (rank - 1),
            format!("{} symmetric orientations at rank {rank}", symmetric.len()),
        )?;
        for o in &symmetric {
            let pts = cyclohedron_vertices(o).unwrap();
            check(
                pts.len() == expected[rank - 1],
                format!("vertex count rank {rank}"),
            )?;
            check(
                oracle::centroid_is(&pts, 2 * rank as i64 + 1),
                format!("cyclohedron centroid rank {rank} up={{{o}}}"),
            )?;
        }
        check(
            all_passed(&verify_type_b(rank).unwrap()),
            format!("library type B rank {rank}"),
        )?;
        if rank <= 3 {
            let pts = permutahedron_b_vertices(rank).unwrap();
            let order = (1..=rank).product::<usize>() << rank;
            check(pts.len() == order, format!("|W_{rank}| = {}", pts.len()))?;
            check(
                oracle::centroid_is(&pts, 2 * rank as i64 + 1),
                format!("type B permutahedron rank {rank}"),
            )?;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("counts {expected:?}"))
}

fn criterion_9() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=8 {
        let ts = enumerate_triangulations(n).unwrap();
        let g = oracle::group(n + 2);
        let mut orbit_size: BTreeMap<oracle::Pairs, usize> = BTreeMap::new();
        for orbit in oracle::orbits(n, &ts) {
            for t in &orbit {
                orbit_size.insert(oracle::pairs(t), orbit.len());
            }
        }
        for t in &ts {
            let p = oracle::pairs(t);
            let fixed = g.iter().filter(|h| oracle::image(h, &p) == p).count();
            let product = orbit_size[&p] * fixed;
            check(product == 2 * (n + 2), format!("n={n} T={t}: {product}"))?;
            if n <= 5 {
                check(
                    stabilizer(t).unwrap().len() == fixed,
                    format!("library stabilizer n={n} T={t}"),
                )?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} triangulations"))
}

fn criterion_10() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=4 {
        let count = enumerate_triangulations(n).unwrap().len();
        for t in 0..count {
            for c in 0..n {
                let opts = VerifyOptions {
                    max_n: 4,
                    jobs: Some(1),
                    perturbation: Some(Perturbation {
                        n,
                        triangulation: t,
                        coordinate: c,
                    }),
                };
                let reports = verify_with(&opts).unwrap();
                let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
                check(
                    !failed.is_empty(),
                    format!("fault n={n} T#{t} c={c} undetected"),
                )?;
                check(
                    failed.iter().all(|r| r.witness.is_some()),
                    format!("fault n={n} T#{t} c={c} lacks a witness"),
                )?;
                checked += 1;
            }
        }
    }
    for n in 1..=3usize {
        let count = enumerate_triangulations(n).unwrap().len();
        for t in 0..count {
            for c in 0..n {
                let fault = format!("{n}:{t}:{c}");
                let (code, stdout) = run_cli(&["verify", "--max-n", "3", "--inject-fault", &fault]);
                check(code == 1, format!("verify exit {code} with fault {fault}"))?;
                check(
                    stdout
                        .lines()
                        .any(|l| l.starts_with("FAIL") && l.contains("witness:")),
                    format!("no witness line for fault {fault}"),
                )?;
                checked += 1;
            }
        }
    }
    let (code, _) = run_cli(&["verify", "--max-n", "6", "--inject-fault", "6:40:3"]);
    check(
        code == 1,
        format!("verify --max-n 6 with fault exit {code}"),
    )?;
    let (code, _) = run_cli(&["verify", "--max-n", "6"]);
    check(code == 0, format!("clean verify --max-n 6 exit {code}"))?;
    Ok(format!("{} perturbations detected", checked + 1))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_assoc"))
        .args(args)
        .output()
        .expect("run assoc");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn check(ok: bool, what: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what)
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, format!("took {took:?}, limit {limit:?}"))
}

type Criterion = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        (
            "Catalan counts n = 1..8 with recurrence oracle",
            criterion_1,
        ),
        ("Loday vertex set and centroid for n = 3", criterion_2),
        ("global centroid, every orientation, n <= 8", criterion_3),
        ("orbit centroids, every orientation, n <= 7", criterion_4),
        ("dihedral weight sums equal (n+1)(n+2), n <= 7", criterion_5),
        (
            "dihedral coordinate sums, every orientation, n <= 6",
            criterion_6,
        ),
        (
            "transport isometry identity and label order, n <= 6",
            criterion_7,
        ),
        ("type B counts and centroids", criterion_8),
        ("orbit-stabilizer products, n <= 8", criterion_9),
        ("single-coordinate faults make verify fail", criterion_10),
    ];
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {name} ({detail}; {secs:.2}s)", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL [{:>2}] {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
