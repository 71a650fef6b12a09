//! WebAssembly bindings for the browser demo.
//!
//! Every export takes plain numbers and strings and returns a JSON string,
//! so the page needs no bundler. The same functions are usable from Rust,
//! which is how the tests exercise them.

use std::collections::BTreeSet;

use assoc_core::export::PolytopeKind;
use assoc_core::{
    all_orientations, barycenter, enumerate_symmetric_triangulations, enumerate_triangulations,
    hl_vertex, is_symmetric_orientation, orbit_partition, permutahedron_b_vertices,
    permutahedron_vertices, symmetric_orientations, verify_all, LatticePoint, Orientation,
    Rational, RationalPoint, Triangulation,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest rank accepted for each kind; beyond this the page gets sluggish.
fn max_rank(kind: PolytopeKind) -> usize {
    match kind {
        PolytopeKind::Associahedron => 8,
        PolytopeKind::PermutahedronA => 6,
        PolytopeKind::Cyclohedron => 5,
        PolytopeKind::PermutahedronB => 4,
    }
}

/// Largest `max_n` accepted by [`verify`].
pub const MAX_VERIFY_N: usize = 6;

#[derive(Debug, Serialize)]
pub struct Scene {
    pub kind: PolytopeKind,
    pub n: usize,
    pub dimension: usize,
    pub up: Vec<usize>,
    pub vertices: Vec<Vec<i64>>,
    /// Triangulation or permutation behind each vertex.
    pub labels: Vec<String>,
    /// Orbit index of each vertex; all zero for permutahedra.
    pub orbit: Vec<usize>,
    pub orbit_centroids: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    pub centroid: Vec<String>,
    /// The centroid as floats, for drawing.
    pub centroid_approx: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub max_n: usize,
    pub checks: usize,
    pub failed: usize,
    pub lines: Vec<String>,
}

fn parse_kind(s: &str) -> Result<PolytopeKind, String> {
    serde_json::from_value(serde_json::Value::String(s.to_string()))
        .map_err(|_| format!("unknown kind '{s}'"))
}

fn approx(p: &RationalPoint) -> Vec<f64> {
    p.coords()
        .iter()
        .map(|r: &Rational| *r.numer() as f64 / *r.denom() as f64)
        .collect()
}

/// Builds the scene for `kind` at rank `n` with orientation `up`.
pub fn build_scene(kind: &str, n: usize, up: &str) -> Result<Scene, String> {
    let kind = parse_kind(kind)?;
    if n < 1 || n > max_rank(kind) {
        return Err(format!(
            "rank must be between 1 and {} for {kind:?}",
            max_rank(kind)
        ));
    }
    let dim = kind.dimension(n);
    let orientation = Orientation::parse(dim, up).map_err(|e| e.to_string())?;
    let mut scene = match kind {
        PolytopeKind::PermutahedronA | PolytopeKind::PermutahedronB => {
            if !orientation.is_canonical() {
                return Err("permutahedra take no orientation".to_string());
            }
            let points = if kind == PolytopeKind::PermutahedronA {
                permutahedron_vertices(n)
            } else {
                permutahedron_b_vertices(n)
            }
            .map_err(|e| e.to_string())?;
            permutahedron_scene(kind, n, points)
        }
        PolytopeKind::Associahedron | PolytopeKind::Cyclohedron => {
            if kind.is_type_b()
                && !is_symmetric_orientation(&orientation).map_err(|e| e.to_string())?
            {
                return Err(format!("orientation {{{orientation}}} is not symmetric"));
            }
            let ts = if kind == PolytopeKind::Associahedron {
                enumerate_triangulations(n)
            } else {
                enumerate_symmetric_triangulations(n)
            }
            .map_err(|e| e.to_string())?;
            triangulation_scene(kind, n, &orientation, &ts).map_err(|e| e.to_string())?
        }
    };
    scene.up = orientation.up_set().iter().copied().collect();
    Ok(scene)
}

fn finish(
    kind: PolytopeKind,
    n: usize,
    points: Vec<LatticePoint>,
    labels: Vec<String>,
    orbit: Vec<usize>,
    orbit_centroids: Vec<Vec<String>>,
    edges: Vec<[usize; 2]>,
) -> Scene {
    let centroid = barycenter(&points).expect("nonempty vertex set");
    Scene {
        kind,
        n,
        dimension: kind.dimension(n),
        up: Vec::new(),
        vertices: points.into_iter().map(|p| p.0).collect(),
        labels,
        orbit,
        orbit_centroids,
        edges,
        centroid: centroid.fraction_strings(),
        centroid_approx: approx(&centroid),
    }
}

fn permutahedron_scene(kind: PolytopeKind, n: usize, points: Vec<LatticePoint>) -> Scene {
    let mut edges = Vec::new();
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            if permutahedron_adjacent(&points[a].0, &points[b].0, kind.is_type_b()) {
                edges.push([a, b]);
            }
        }
    }
    let labels = points.iter().map(ToString::to_string).collect();
    let orbit = vec![0; points.len()];
    finish(kind, n, points, labels, orbit, Vec::new(), edges)
}

/// Two permutations of `1..=d` are adjacent on the permutahedron when they
/// differ by swapping the values `k, k+1`. In the centrally symmetric type B
/// realization the swap of `k, k+1` comes paired with the swap of
/// `d-k, d+1-k`, except for the middle pair.
fn permutahedron_adjacent(v: &[i64], w: &[i64], type_b: bool) -> bool {
    let moved: BTreeSet<i64> = v
        .iter()
        .zip(w)
        .filter(|(x, y)| x != y)
        .map(|(&x, _)| x)
        .collect();
    let d = v.len() as i64;
    let values: Vec<i64> = moved.iter().copied().collect();
    match values.as_slice() {
        [k, l] => {
            *l == k + 1
                && (!type_b || *k == d / 2)
                && v.iter().zip(w).all(|(&x, &y)| swap(x, *k) == y)
        }
        [k, l, p, q] if type_b => {
            *l == k + 1
                && *p == d - l + 1
                && *q == d - k + 1
                && *l < *p
                && v.iter().zip(w).all(|(&x, &y)| swap(swap(x, *k), *p) == y)
        }
        _ => false,
    }
}

/// Exchanges the values `k` and `k+1`.
fn swap(x: i64, k: i64) -> i64 {
    if x == k {
        k + 1
    } else if x == k + 1 {
        k
    } else {
        x
    }
}

fn triangulation_scene(
    kind: PolytopeKind,
    n: usize,
    orientation: &Orientation,
    ts: &[Triangulation],
) -> assoc_core::Result<Scene> {
    let points = ts
        .iter()
        .map(|t| hl_vertex(orientation, t))
        .collect::<assoc_core::Result<Vec<_>>>()?;
    let mut orbit = vec![0; ts.len()];
    let mut orbit_centroids = Vec::new();
    for (x, o) in orbit_partition(ts)?.iter().enumerate() {
        let mut members = Vec::with_capacity(o.len());
        for t in &o.members {
            let at = ts.binary_search(t).expect("orbit members come from ts");
            orbit[at] = x;
            members.push(points[at].clone());
        }
        orbit_centroids.push(barycenter(&members)?.fraction_strings());
    }
    let sets: Vec<BTreeSet<(usize, usize)>> =
        ts.iter().map(|t| t.pairs().into_iter().collect()).collect();
    let m = ts.first().map_or(0, Triangulation::polygon_size);
    let mut edges = Vec::new();
    for a in 0..ts.len() {
        for b in a + 1..ts.len() {
            if is_flip(&sets[a], &sets[b], m, kind.is_type_b()) {
                edges.push([a, b]);
            }
        }
    }
    let labels = ts.iter().map(ToString::to_string).collect();
    Ok(finish(
        kind,
        n,
        points,
        labels,
        orbit,
        orbit_centroids,
        edges,
    ))
}

fn half_turn(d: (usize, usize), m: usize) -> (usize, usize) {
    let (a, b) = ((d.0 + m / 2) % m, (d.1 + m / 2) % m);
    (a.min(b), a.max(b))
}

/// Adjacent triangulations differ in one diagonal; for centrally symmetric
/// ones, in one diameter or one pair of opposite diagonals.
fn is_flip(
    s: &BTreeSet<(usize, usize)>,
    t: &BTreeSet<(usize, usize)>,
    m: usize,
    symmetric: bool,
) -> bool {
    let gone: Vec<_> = s.difference(t).copied().collect();
    match gone.as_slice() {
        [_] => true,
        [d, e] => symmetric && half_turn(*d, m) == *e,
        _ => false,
    }
}

/// Lists orientations as up-set strings such as `"2,4"`. For the type B
/// kinds only the centrally symmetric ones are listed.
pub fn list_orientations(kind: &str, n: usize) -> Result<Vec<String>, String> {
    let kind = parse_kind(kind)?;
    if n < 1 || n > max_rank(kind) {
        return Err(format!("rank must be between 1 and {}", max_rank(kind)));
    }
    let all = match kind {
        PolytopeKind::PermutahedronA | PolytopeKind::PermutahedronB => {
            return Ok(vec![String::new()])
        }
        PolytopeKind::Associahedron => all_orientations(n),
        PolytopeKind::Cyclohedron => symmetric_orientations(n),
    }
    .map_err(|e| e.to_string())?;
    Ok(all.iter().map(ToString::to_string).collect())
}

/// Runs the exhaustive checks up to `max_n`.
pub fn run_verify(max_n: usize) -> Result<VerifySummary, String> {
    if max_n > MAX_VERIFY_N {
        return Err(format!("max_n is capped at {MAX_VERIFY_N} in the browser"));
    }
    let reports = verify_all(max_n).map_err(|e| e.to_string())?;
    Ok(VerifySummary {
        max_n,
        checks: reports.len(),
        failed: reports.iter().filter(|r| !r.passed).count(),
        lines: reports.iter().map(ToString::to_string).collect(),
    })
}

fn to_json<T: Serialize>(r: Result<T, String>) -> Result<String, JsError> {
    let value = r.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

/// Vertices, edges, orbits and centroid as JSON.
#[wasm_bindgen]
pub fn scene(kind: &str, n: usize, up: &str) -> Result<String, JsError> {
    to_json(build_scene(kind, n, up))
}

/// The orientations available for `kind` at rank `n`, as a JSON array.
#[wasm_bindgen]
pub fn orientations(kind: &str, n: usize) -> Result<String, JsError> {
    to_json(list_orientations(kind, n))
}

/// Summary of the identity checks up to `max_n`, as JSON.
#[wasm_bindgen]
pub fn verify(max_n: usize) -> Result<String, JsError> {
    to_json(run_verify(max_n))
}
