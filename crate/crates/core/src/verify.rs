//! Exhaustive checks of the center-of-gravity identities.
//!
//! Every check compares exact integers or rationals. A failed check carries a
//! [`Witness`] with the offending input and both sides of the identity.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::centroid::{barycenter, permutahedron_vertices, type_a_center, type_b_center};
use crate::dihedral::{images, ActionTable, DihedralElement};
use crate::error::{Error, Result};
use crate::polygon::{enumerate_triangulations, Triangulation};
use crate::type_a::{
    all_orientations, delta_weight, hl_vertex, hl_vertex_labeled, hl_weight, loday_vertex,
    transport_isometry, LabeledPolygon, LatticePoint, Orientation,
};
use crate::type_b::{is_centrally_symmetric, permutahedron_b_vertices, symmetric_orientations};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// Number of triangulations equals the Catalan number.
    CatalanCount,
    /// `|O(T)| |Stab(T)| = 2(n+2)`.
    OrbitStabilizer,
    /// Barycenter of the permutahedron.
    PermutahedronCentroid,
    /// `Σ_f δ_j(f·T) = (n+1)(n+2)`.
    WeightOrbitSum,
    /// `Σ_f x_j(f·T) = (n+1)(n+2)`.
    CoordinateOrbitSum,
    /// `ω_j(T) = δ_j(r_j·T)`.
    TransportIdentity,
    /// `r_j` sends the vertex labeled `j` to `A_j` and preserves "below `j`".
    TransportLabelOrder,
    /// Barycenter of all associahedron vertices.
    GlobalCentroid,
    /// Barycenter of each dihedral orbit's vertices.
    OrbitCentroid,
    /// Centrally symmetric triangulations number `C(2n, n)`.
    SymmetricCount,
    /// Central symmetry is preserved by the dihedral action.
    SymmetricClosure,
    /// Cyclohedron vertices are associahedron vertices.
    CyclohedronSubset,
    /// Barycenter of the cyclohedron.
    CyclohedronCentroid,
    /// Barycenter of the type B permutahedron.
    PermutahedronBCentroid,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).map_err(|_| fmt::Error)?;
        f.write_str(s.as_str().unwrap_or_default())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CheckParams {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub up: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
}

impl CheckParams {
    fn n(n: usize) -> Self {
        Self {
            n,
            ..Self::default()
        }
    }

    fn with_up(n: usize, o: &Orientation) -> Self {
        Self {
            n,
            up: Some(o.to_string()),
            ..Self::default()
        }
    }
}

impl fmt::Display for CheckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(up) = &self.up {
            write!(f, " up={{{up}}}")?;
        }
        if let Some(orbit) = &self.orbit {
            write!(f, " orbit={orbit}")?;
        }
        if let Some(j) = self.j {
            write!(f, " j={j}")?;
        }
        Ok(())
    }
}

/// The failing input and the two sides that disagreed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} != {}", self.input, self.lhs, self.rhs)
    }
}

/// Outcome of one check. `witness` is present exactly when `passed` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: CheckKind,
    pub params: CheckParams,
    /// Number of instances of the identity that were compared.
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl VerificationReport {
    fn new(check: CheckKind, params: CheckParams, cases: usize, witness: Option<Witness>) -> Self {
        Self {
            check,
            params,
            cases,
            passed: witness.is_none(),
            witness,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} {} cases={}",
            self.check, self.params, self.cases
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Collects the first disagreement while counting compared cases.
#[derive(Default)]
struct Tally {
    cases: usize,
    witness: Option<Witness>,
}

impl Tally {
    fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        lhs: T,
        rhs: T,
        input: impl FnOnce() -> String,
    ) {
        self.cases += 1;
        if self.witness.is_none() && lhs != rhs {
            self.witness = Some(Witness {
                input: input(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn report(self, check: CheckKind, params: CheckParams) -> VerificationReport {
        VerificationReport::new(check, params, self.cases, self.witness)
    }
}

fn orbit_id(t: &Triangulation) -> String {
    t.to_string()
}

fn orbit_sum_target(n: usize) -> i64 {
    ((n + 1) * (n + 2)) as i64
}

/// `Σ_{f ∈ D_{n+2}} δ_j(f·T) = (n+1)(n+2)` for one `(T, j)`.
pub fn check_weight_orbit_sum(t: &Triangulation, j: usize) -> Result<VerificationReport> {
    let n = t.n();
    let mut sum = 0;
    for img in images(t)? {
        sum += delta_weight(&img, j)?;
    }
    let mut tally = Tally::default();
    tally.compare(sum, orbit_sum_target(n), || format!("T={t}"));
    Ok(tally.report(
        CheckKind::WeightOrbitSum,
        CheckParams {
            j: Some(j),
            ..CheckParams::n(n)
        },
    ))
}

/// `Σ_{f ∈ D_{n+2}} x_j(f·T) = (n+1)(n+2)` for one `(A, T, j)`.
pub fn check_coordinate_orbit_sum(
    o: &Orientation,
    t: &Triangulation,
    j: usize,
) -> Result<VerificationReport> {
    let n = t.n();
    if j < 1 || j > n {
        return Err(Error::IndexOutOfRange { j, n });
    }
    let mut sum = 0;
    for img in images(t)? {
        sum += hl_vertex(o, &img)?.coords()[j - 1];
    }
    let mut tally = Tally::default();
    tally.compare(sum, orbit_sum_target(n), || format!("T={t}"));
    Ok(tally.report(
        CheckKind::CoordinateOrbitSum,
        CheckParams {
            j: Some(j),
            ..CheckParams::with_up(n, o)
        },
    ))
}

/// `ω_j(T) = δ_j(r_j·T)` for one `(A, T, j)`.
pub fn check_transport(o: &Orientation, t: &Triangulation, j: usize) -> Result<VerificationReport> {
    let r = transport_isometry(o, j)?;
    let mut tally = Tally::default();
    tally.compare(hl_weight(o, t, j)?, delta_weight(&r.act(t)?, j)?, || {
        format!("T={t} r={r}")
    });
    Ok(tally.report(
        CheckKind::TransportIdentity,
        CheckParams {
            j: Some(j),
            ..CheckParams::with_up(t.n(), o)
        },
    ))
}

/// Barycenter of `{M_A(T) : T ∈ orbit}` equals `((n+1)/2, ...)`.
///
/// The input must be closed under the dihedral action.
pub fn check_orbit_barycenter(
    o: &Orientation,
    orbit: &[Triangulation],
) -> Result<VerificationReport> {
    let first = orbit.first().ok_or(Error::EmptyPointSet)?;
    let members: HashSet<&Triangulation> = orbit.iter().collect();
    for t in orbit {
        for img in images(t)? {
            if !members.contains(&img) {
                return Err(Error::NotAnOrbit { len: orbit.len() });
            }
        }
    }
    let n = first.n();
    let points = orbit
        .iter()
        .map(|t| hl_vertex(o, t))
        .collect::<Result<Vec<_>>>()?;
    let id = orbit.iter().min().map(orbit_id).unwrap_or_default();
    let mut tally = Tally::default();
    tally.compare(barycenter(&points)?, type_a_center(n), || {
        format!("orbit of size {}", orbit.len())
    });
    Ok(tally.report(
        CheckKind::OrbitCentroid,
        CheckParams {
            orbit: Some(id),
            ..CheckParams::with_up(n, o)
        },
    ))
}

/// Adds `+1` to one coordinate of one vertex, to exercise the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perturbation {
    /// Polygon has `n + 2` vertices.
    pub n: usize,
    /// Index into [`enumerate_triangulations`]`(n)`.
    pub triangulation: usize,
    /// Zero-based coordinate.
    pub coordinate: usize,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub max_n: usize,
    /// Worker threads; `None` uses the default pool.
    pub jobs: Option<usize>,
    pub perturbation: Option<Perturbation>,
}

impl VerifyOptions {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            ..Self::default()
        }
    }
}

/// Computes vertex coordinates, applying the perturbation if one is set.
struct Realizer {
    target: Option<(Triangulation, usize)>,
}

impl Realizer {
    fn new(p: Option<Perturbation>) -> Result<Self> {
        let Some(p) = p else {
            return Ok(Self { target: None });
        };
        let ts = enumerate_triangulations(p.n)?;
        let t = ts.get(p.triangulation).ok_or(Error::IndexOutOfRange {
            j: p.triangulation,
            n: ts.len().saturating_sub(1),
        })?;
        if p.coordinate >= p.n {
            return Err(Error::IndexOutOfRange {
                j: p.coordinate,
                n: p.n - 1,
            });
        }
        Ok(Self {
            target: Some((t.clone(), p.coordinate)),
        })
    }

    fn perturb(&self, t: &Triangulation, mut p: LatticePoint) -> LatticePoint {
        if let Some((target, c)) = &self.target {
            if target == t {
                p.0[*c] += 1;
            }
        }
        p
    }

    fn loday(&self, t: &Triangulation) -> LatticePoint {
        self.perturb(t, loday_vertex(t))
    }

    fn hl(
        &self,
        o: &Orientation,
        labels: &LabeledPolygon,
        t: &Triangulation,
    ) -> Result<LatticePoint> {
        Ok(self.perturb(t, hl_vertex_labeled(o, labels, t)?))
    }
}

/// Triangulations of one polygon with their action table and orbits.
struct Sweep {
    n: usize,
    ts: Vec<Triangulation>,
    table: ActionTable,
    orbits: Vec<Vec<usize>>,
}

impl Sweep {
    fn new(n: usize) -> Result<Self> {
        let ts = enumerate_triangulations(n)?;
        let table = ActionTable::new(&ts)?;
        let orbits = table.orbit_indices();
        Ok(Self {
            n,
            ts,
            table,
            orbits,
        })
    }

    fn catalan(&self) -> VerificationReport {
        let mut tally = Tally::default();
        tally.compare(self.ts.len() as u64, catalan(self.n), || {
            "triangulation count".to_string()
        });
        tally.report(CheckKind::CatalanCount, CheckParams::n(self.n))
    }

    fn orbit_stabilizer(&self) -> VerificationReport {
        let group = 2 * (self.n + 2);
        let mut tally = Tally::default();
        for orbit in &self.orbits {
            for &t in orbit {
                let product = orbit.len() * self.table.stabilizer_order(t);
                tally.compare(product, group, || format!("T={}", self.ts[t]));
            }
        }
        tally.report(CheckKind::OrbitStabilizer, CheckParams::n(self.n))
    }

    fn weight_orbit_sum(&self, realizer: &Realizer) -> VerificationReport {
        let points: Vec<LatticePoint> = self.ts.iter().map(|t| realizer.loday(t)).collect();
        let mut tally = Tally::default();
        self.orbit_sums(&points, &mut tally);
        tally.report(CheckKind::WeightOrbitSum, CheckParams::n(self.n))
    }

    fn orbit_sums(&self, points: &[LatticePoint], tally: &mut Tally) {
        let target = orbit_sum_target(self.n);
        for (t, row) in self.table.image.iter().enumerate() {
            for j in 1..=self.n {
                let sum: i64 = row.iter().map(|&x| points[x].coords()[j - 1]).sum();
                tally.compare(sum, target, || format!("T={} j={j}", self.ts[t]));
            }
        }
    }

    fn orientation_checks(
        &self,
        o: &Orientation,
        realizer: &Realizer,
    ) -> Result<Vec<VerificationReport>> {
        let n = self.n;
        let labels = o.label_polygon();
        let points = self
            .ts
            .iter()
            .map(|t| realizer.hl(o, &labels, t))
            .collect::<Result<Vec<_>>>()?;
        let params = CheckParams::with_up(n, o);
        let center = type_a_center(n);

        let mut global = Tally::default();
        global.compare(barycenter(&points)?, center.clone(), || {
            format!("all {} vertices", points.len())
        });

        let mut orbit_tally = Tally::default();
        for orbit in &self.orbits {
            let members: Vec<LatticePoint> = orbit.iter().map(|&x| points[x].clone()).collect();
            orbit_tally.compare(barycenter(&members)?, center.clone(), || {
                format!(
                    "orbit {} of size {}",
                    orbit_id(&self.ts[orbit[0]]),
                    orbit.len()
                )
            });
        }

        let mut coordinate = Tally::default();
        self.orbit_sums(&points, &mut coordinate);

        let mut transport = Tally::default();
        let mut label_order = Tally::default();
        let m = n + 2;
        let flip = (n + 1) as i64;
        for j in 1..=n {
            let r = transport_isometry(o, j)?;
            label_order.compare(r.apply_vertex(labels.position(j))?, j, || {
                format!("r_{j}={r} image of the vertex labeled {j}")
            });
            for k in 0..m {
                let image = r.apply_vertex(k)?;
                label_order.compare(labels.label(k) < j, image < j, || {
                    format!("r_{j}={r} position {k} labeled {}", labels.label(k))
                });
            }
            for (t, p) in self.ts.iter().zip(&points) {
                let x = p.coords()[j - 1];
                let omega = if o.is_up(j) { flip - x } else { x };
                let moved = &self.ts[self.table.image[self.index_of(t)][self.element_index(&r)]];
                transport.compare(omega, delta_weight(moved, j)?, || {
                    format!("T={t} j={j} r={r}")
                });
            }
        }

        Ok(vec![
            global.report(CheckKind::GlobalCentroid, params.clone()),
            orbit_tally.report(CheckKind::OrbitCentroid, params.clone()),
            coordinate.report(CheckKind::CoordinateOrbitSum, params.clone()),
            transport.report(CheckKind::TransportIdentity, params.clone()),
            label_order.report(CheckKind::TransportLabelOrder, params),
        ])
    }

    fn index_of(&self, t: &Triangulation) -> usize {
        self.ts.binary_search(t).expect("sorted enumeration")
    }

    fn element_index(&self, g: &DihedralElement) -> usize {
        let m = self.n + 2;
        if g.is_reflection() {
            m + g.shift()
        } else {
            g.shift()
        }
    }

    fn type_a(
        &self,
        realizer: &Realizer,
        orientations: &[Orientation],
    ) -> Result<Vec<VerificationReport>> {
        let mut out = vec![
            self.catalan(),
            self.orbit_stabilizer(),
            permutahedron_check(self.n)?,
            self.weight_orbit_sum(realizer),
        ];
        let per_orientation: Vec<Result<Vec<VerificationReport>>> =
            map_maybe_parallel(orientations, |o| self.orientation_checks(o, realizer));
        for reports in per_orientation {
            out.extend(reports?);
        }
        Ok(out)
    }

    /// Type B checks for rank `n / 2`; `n` must be even.
    fn type_b(&self, realizer: &Realizer) -> Result<Vec<VerificationReport>> {
        let rank = self.n / 2;
        let symmetric: Vec<bool> = self
            .ts
            .iter()
            .map(is_centrally_symmetric)
            .collect::<Result<_>>()?;
        let sym_idx: Vec<usize> = (0..self.ts.len()).filter(|&x| symmetric[x]).collect();

        let mut count = Tally::default();
        count.compare(
            sym_idx.len() as u64,
            binomial(2 * rank as u64, rank as u64),
            || "centrally symmetric triangulation count".to_string(),
        );

        let mut closure = Tally::default();
        for (t, row) in self.table.image.iter().enumerate() {
            for (g, &x) in row.iter().enumerate() {
                closure.compare(symmetric[x], symmetric[t], || {
                    format!("T={} g={}", self.ts[t], self.table.elements[g])
                });
            }
        }

        let mut out = vec![
            count.report(CheckKind::SymmetricCount, CheckParams::n(rank)),
            closure.report(CheckKind::SymmetricClosure, CheckParams::n(rank)),
        ];

        let center = type_b_center(rank);
        for o in symmetric_orientations(rank)? {
            let labels = o.label_polygon();
            let all: Vec<LatticePoint> = self
                .ts
                .iter()
                .map(|t| realizer.hl(&o, &labels, t))
                .collect::<Result<_>>()?;
            let cyclo: Vec<LatticePoint> = sym_idx.iter().map(|&x| all[x].clone()).collect();
            let params = CheckParams::with_up(rank, &o);

            let known: HashSet<&LatticePoint> = all.iter().collect();
            let mut subset = Tally::default();
            for p in &cyclo {
                subset.compare(known.contains(p), true, || format!("vertex {p}"));
            }
            let mut centroid = Tally::default();
            centroid.compare(barycenter(&cyclo)?, center.clone(), || {
                format!("all {} cyclohedron vertices", cyclo.len())
            });
            out.push(subset.report(CheckKind::CyclohedronSubset, params.clone()));
            out.push(centroid.report(CheckKind::CyclohedronCentroid, params));
        }

        let mut perm = Tally::default();
        let signed = permutahedron_b_vertices(rank)?;
        perm.compare(barycenter(&signed)?, center, || {
            format!("all {} signed permutations", signed.len())
        });
        out.push(perm.report(CheckKind::PermutahedronBCentroid, CheckParams::n(rank)));
        Ok(out)
    }
}

fn permutahedron_check(n: usize) -> Result<VerificationReport> {
    let mut tally = Tally::default();
    let points = permutahedron_vertices(n)?;
    tally.compare(barycenter(&points)?, type_a_center(n), || {
        format!("all {} permutations", points.len())
    });
    Ok(tally.report(CheckKind::PermutahedronCentroid, CheckParams::n(n)))
}

#[cfg(feature = "parallel")]
fn map_maybe_parallel<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_maybe_parallel<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Catalan number `C_n = binomial(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u64 {
    binomial(2 * n as u64, n as u64) / (n as u64 + 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Runs every check for `n = 1..=max_n`, plus the type B checks for each
/// rank `r` with `2r <= max_n`.
///
/// Reports come out grouped by `n`, type A before type B, orientations in
/// up-set bitmask order.
pub fn verify_all(max_n: usize) -> Result<Vec<VerificationReport>> {
    verify_with(&VerifyOptions::new(max_n))
}

pub fn verify_with(opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    if opts.max_n < 1 {
        return Err(Error::RankTooSmall {
            n: opts.max_n,
            min: 1,
        });
    }
    let realizer = Realizer::new(opts.perturbation)?;
    let run = || -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for n in 1..=opts.max_n {
            let sweep = Sweep::new(n)?;
            out.extend(sweep.type_a(&realizer, &all_orientations(n)?)?);
            if n % 2 == 0 {
                out.extend(sweep.type_b(&realizer)?);
            }
        }
        Ok(out)
    };
    run_with_jobs(opts.jobs, run)
}

/// Type A checks for a single `n` and orientation list.
pub fn verify_type_a(n: usize, orientations: &[Orientation]) -> Result<Vec<VerificationReport>> {
    Sweep::new(n)?.type_a(&Realizer::new(None)?, orientations)
}

/// Type B checks for a single rank.
pub fn verify_type_b(rank: usize) -> Result<Vec<VerificationReport>> {
    Sweep::new(2 * rank)?.type_b(&Realizer::new(None)?)
}

#[cfg(feature = "parallel")]
fn run_with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(k) => match rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_with_jobs<T>(_jobs: Option<usize>, f: impl FnOnce() -> T) -> T {
    f()
}
