//! Integer vertex coordinates of associahedra in `R^n`.
//!
//! [`loday_vertex`] gives the classical realization. An [`Orientation`] of
//! the path graph on `τ_1, ..., τ_{n-1}` relabels the polygon and yields the
//! whole family [`hl_vertex`], which coincides with the classical one for the
//! canonical orientation.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::polygon::{enumerate_triangulations, Triangle, Triangulation, VertexIndex};

/// A point with exact integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (x, c) in self.0.iter().enumerate() {
            if x > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `δ_j(T) = (j - i)(k - j)` for `Δ_j(T) = A_i A_j A_k`.
pub fn delta_weight(t: &Triangulation, j: usize) -> Result<i64> {
    let Triangle { i, k, .. } = t.triangle_at(j)?;
    Ok(((j - i) * (k - j)) as i64)
}

pub fn loday_vertex(t: &Triangulation) -> LatticePoint {
    LatticePoint(
        t.triangles()
            .iter()
            .map(|tri| ((tri.j - tri.i) * (tri.k - tri.j)) as i64)
            .collect(),
    )
}

/// Direction of the edge `{τ_{i-1}, τ_i}` of the path graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeDirection {
    /// From `τ_i` to `τ_{i-1}`; makes `i` an up element.
    Backward,
    /// From `τ_{i-1}` to `τ_i`.
    Forward,
}

/// An orientation of the path graph `τ_1 - τ_2 - ... - τ_{n-1}`, stored as
/// its set of up elements `U ⊆ {2, ..., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    n: usize,
    up: BTreeSet<usize>,
}

impl Orientation {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, up: I) -> Result<Self> {
        if n < 1 {
            return Err(Error::RankTooSmall { n, min: 1 });
        }
        let up: BTreeSet<usize> = up.into_iter().collect();
        if let Some(&bad) = up.iter().find(|&&u| u < 2 || u + 1 > n) {
            return Err(Error::InvalidOrientation(format!(
                "{bad} cannot be up for n = {n}; up elements lie in 2..={}",
                n.saturating_sub(1)
            )));
        }
        Ok(Self { n, up })
    }

    /// The orientation with no up elements.
    pub fn canonical(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Parses a comma separated up-set such as `"2,4"`. Empty means canonical.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::canonical(n);
        }
        let mut up = Vec::new();
        for part in s.split(',') {
            let v: usize = part.trim().parse().map_err(|_| {
                Error::InvalidOrientation(format!("'{}' is not an integer", part.trim()))
            })?;
            if up.contains(&v) {
                return Err(Error::InvalidOrientation(format!("{v} listed twice")));
            }
            up.push(v);
        }
        Self::new(n, up)
    }

    /// Builds an orientation from the directions of `{τ_{i-1}, τ_i}` for
    /// `i = 2, ..., n-1`.
    pub fn from_edge_directions(n: usize, dirs: &[EdgeDirection]) -> Result<Self> {
        if dirs.len() != n.saturating_sub(2) {
            return Err(Error::InvalidOrientation(format!(
                "expected {} edge directions, got {}",
                n.saturating_sub(2),
                dirs.len()
            )));
        }
        let up = dirs
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == EdgeDirection::Backward)
            .map(|(x, _)| x + 2);
        Self::new(n, up)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn up_set(&self) -> &BTreeSet<usize> {
        &self.up
    }

    pub fn is_canonical(&self) -> bool {
        self.up.is_empty()
    }

    pub fn is_up(&self, i: usize) -> bool {
        self.up.contains(&i)
    }

    /// Directions of `{τ_{i-1}, τ_i}` for `i = 2, ..., n-1`.
    pub fn edge_directions(&self) -> Vec<EdgeDirection> {
        (2..self.n)
            .map(|i| {
                if self.is_up(i) {
                    EdgeDirection::Backward
                } else {
                    EdgeDirection::Forward
                }
            })
            .collect()
    }

    /// `(down, up)`, both sorted; `1` and `n` are always down.
    pub fn up_down_sets(&self) -> (Vec<usize>, Vec<usize>) {
        let down = (1..=self.n).filter(|i| !self.is_up(*i)).collect();
        (down, self.up.iter().copied().collect())
    }

    pub fn label_polygon(&self) -> LabeledPolygon {
        LabeledPolygon::new(self)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.up.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// All `2^{n-2}` orientations, ordered by the bitmask of their up-sets.
pub fn all_orientations(n: usize) -> Result<Vec<Orientation>> {
    if n < 1 {
        return Err(Error::RankTooSmall { n, min: 1 });
    }
    let free = n.saturating_sub(2);
    (0u64..1 << free)
        .map(|mask| Orientation::new(n, (0..free).filter(|b| mask >> b & 1 == 1).map(|b| b + 2)))
        .collect()
}

/// The labeling of the `(n+2)`-gon induced by an orientation: `A_0` gets `0`,
/// then counterclockwise the down elements increasing, `n+1`, and the up
/// elements decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPolygon {
    label_of_position: Vec<usize>,
    position_of_label: Vec<VertexIndex>,
}

impl LabeledPolygon {
    fn new(o: &Orientation) -> Self {
        let (down, up) = o.up_down_sets();
        let mut label_of_position = Vec::with_capacity(o.n + 2);
        label_of_position.push(0);
        label_of_position.extend(down);
        label_of_position.push(o.n + 1);
        label_of_position.extend(up.into_iter().rev());
        let mut position_of_label = vec![0; o.n + 2];
        for (p, &l) in label_of_position.iter().enumerate() {
            position_of_label[l] = p;
        }
        Self {
            label_of_position,
            position_of_label,
        }
    }

    pub fn size(&self) -> usize {
        self.label_of_position.len()
    }

    pub fn label(&self, position: VertexIndex) -> usize {
        self.label_of_position[position]
    }

    pub fn position(&self, label: usize) -> VertexIndex {
        self.position_of_label[label]
    }

    pub fn labels(&self) -> &[usize] {
        &self.label_of_position
    }
}

/// Checks that `o` and `t` describe the same polygon and `1 <= l <= n`.
fn check_inputs(o: &Orientation, t: &Triangulation, l: usize) -> Result<()> {
    if o.n != t.n() {
        return Err(Error::SizeMismatch {
            expected: o.n + 2,
            found: t.polygon_size(),
        });
    }
    if l < 1 || l > o.n {
        return Err(Error::IndexOutOfRange { j: l, n: o.n });
    }
    Ok(())
}

/// `ω_l(T)` on the labeled polygon.
///
/// Finds the unique triangle of `T` at the vertex labeled `l` whose other two
/// labels `k`, `m` satisfy `k < l < m`, then multiplies the number of
/// boundary edges from the `l` vertex to the `k` vertex walking through
/// labels below `l` by the number from the `l` vertex to the `m` vertex
/// walking through labels above `l`.
pub fn hl_weight(o: &Orientation, t: &Triangulation, l: usize) -> Result<i64> {
    check_inputs(o, t, l)?;
    let labels = o.label_polygon();
    hl_weight_labeled(&labels, t, l)
}

fn hl_weight_labeled(labels: &LabeledPolygon, t: &Triangulation, l: usize) -> Result<i64> {
    let p = labels.position(l);
    let mut found = None;
    for tri in t.triangles().iter().filter(|tri| tri.contains(p)) {
        let others: Vec<VertexIndex> = tri.vertices().into_iter().filter(|&v| v != p).collect();
        let (x, y) = (others[0], others[1]);
        let (lx, ly) = (labels.label(x), labels.label(y));
        let pair = if lx < l && l < ly {
            Some((x, y))
        } else if ly < l && l < lx {
            Some((y, x))
        } else {
            None
        };
        if let Some(pair) = pair {
            if found.replace(pair).is_some() {
                return Err(Error::Labeling(format!(
                    "two triangles straddle label {l} in {t}"
                )));
            }
        }
    }
    let (low, high) =
        found.ok_or_else(|| Error::Labeling(format!("no triangle straddles label {l} in {t}")))?;
    let below = arc_length(labels, p, low, |lab| lab < l)?;
    let above = arc_length(labels, p, high, |lab| lab > l)?;
    Ok((below * above) as i64)
}

/// Number of boundary edges on the unique arc from `from` to `to` whose
/// vertices, apart from `from`, all satisfy `admissible`.
fn arc_length<F: Fn(usize) -> bool>(
    labels: &LabeledPolygon,
    from: VertexIndex,
    to: VertexIndex,
    admissible: F,
) -> Result<usize> {
    let m = labels.size();
    let mut hits = Vec::with_capacity(1);
    for step in [1, m - 1] {
        let mut v = from;
        let mut edges = 0;
        let ok = loop {
            v = (v + step) % m;
            edges += 1;
            if !admissible(labels.label(v)) {
                break false;
            }
            if v == to {
                break true;
            }
        };
        if ok {
            hits.push(edges);
        }
    }
    match hits.as_slice() {
        [e] => Ok(*e),
        _ => Err(Error::Labeling(format!(
            "{} admissible arcs from position {from} to {to}",
            hits.len()
        ))),
    }
}

/// `x_j = ω_j` for down `j` and `n + 1 - ω_j` for up `j`.
pub fn hl_vertex(o: &Orientation, t: &Triangulation) -> Result<LatticePoint> {
    check_inputs(o, t, 1)?;
    let labels = o.label_polygon();
    hl_vertex_labeled(o, &labels, t)
}

pub(crate) fn hl_vertex_labeled(
    o: &Orientation,
    labels: &LabeledPolygon,
    t: &Triangulation,
) -> Result<LatticePoint> {
    let flip = (o.n + 1) as i64;
    (1..=o.n)
        .map(|j| {
            let w = hl_weight_labeled(labels, t, j)?;
            Ok(if o.is_up(j) { flip - w } else { w })
        })
        .collect::<Result<Vec<_>>>()
        .map(LatticePoint)
}

/// The isometry `r_j` carrying the vertex labeled `j` to `A_j` such that a
/// vertex has label below `j` exactly when its image has index below `j`.
///
/// For down `j` this is a rotation; for up `j` it is the reflection sending
/// the vertex labeled `α` (the greatest down element below `j`) to `A_0`.
pub fn transport_isometry(o: &Orientation, j: usize) -> Result<DihedralElement> {
    if j < 1 || j > o.n {
        return Err(Error::IndexOutOfRange { j, n: o.n });
    }
    let m = o.n + 2;
    let labels = o.label_polygon();
    if o.is_up(j) {
        let alpha = (1..j)
            .rev()
            .find(|&i| !o.is_up(i))
            .ok_or_else(|| Error::Labeling(format!("no down element below {j}")))?;
        Ok(DihedralElement::reflection(m, labels.position(alpha)))
    } else {
        let l = labels.position(j);
        Ok(DihedralElement::rotation(m, j + m - l))
    }
}

/// `M_A(T)` for every triangulation, in triangulation order.
///
/// The map is injective; a repeated point is reported as an error.
pub fn associahedron_vertices(o: &Orientation) -> Result<Vec<LatticePoint>> {
    let ts = enumerate_triangulations(o.n)?;
    vertices_of(o, &ts)
}

pub(crate) fn vertices_of(o: &Orientation, ts: &[Triangulation]) -> Result<Vec<LatticePoint>> {
    let labels = o.label_polygon();
    let points = ts
        .iter()
        .map(|t| {
            check_inputs(o, t, 1)?;
            hl_vertex_labeled(o, &labels, t)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seen = HashSet::with_capacity(points.len());
    for (p, t) in points.iter().zip(ts) {
        if !seen.insert(p) {
            return Err(Error::Labeling(format!(
                "vertex {p} repeated (second time at {t})"
            )));
        }
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(n: usize, pairs: &[(usize, usize)]) -> Triangulation {
        Triangulation::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn delta_examples() {
        let sq = tri(2, &[(0, 2)]);
        assert_eq!(delta_weight(&sq, 1).unwrap(), 1);
        assert_eq!(delta_weight(&sq, 2).unwrap(), 2);
        assert_eq!(delta_weight(&tri(3, &[(0, 2), (0, 3)]), 3).unwrap(), 3);
        assert_eq!(delta_weight(&tri(3, &[(0, 2), (2, 4)]), 2).unwrap(), 4);
        assert!(delta_weight(&sq, 3).is_err());
    }

    #[test]
    fn loday_examples() {
        assert_eq!(loday_vertex(&tri(2, &[(0, 2)])).0, vec![1, 2]);
        assert_eq!(loday_vertex(&tri(2, &[(1, 3)])).0, vec![2, 1]);
        assert_eq!(loday_vertex(&tri(3, &[(0, 2), (0, 3)])).0, vec![1, 2, 3]);
        assert_eq!(loday_vertex(&tri(3, &[(0, 2), (2, 4)])).0, vec![1, 4, 1]);
    }

    #[test]
    fn orientation_sets() {
        let o = Orientation::new(5, [2, 4]).unwrap();
        assert_eq!(o.up_down_sets(), (vec![1, 3, 5], vec![2, 4]));
        assert_eq!(
            Orientation::canonical(4).unwrap().up_down_sets(),
            (vec![1, 2, 3, 4], vec![])
        );
        assert_eq!(
            Orientation::new(3, [2]).unwrap().up_down_sets(),
            (vec![1, 3], vec![2])
        );
        assert_eq!(all_orientations(2).unwrap().len(), 1);
        assert_eq!(all_orientations(1).unwrap().len(), 1);
        assert_eq!(all_orientations(6).unwrap().len(), 16);
    }

    #[test]
    fn orientation_validation() {
        assert!(Orientation::new(5, [1]).is_err());
        assert!(Orientation::new(5, [5]).is_err());
        assert!(Orientation::new(2, [2]).is_err());
        assert!(Orientation::parse(5, "2,x").is_err());
        assert!(Orientation::parse(5, "2,2").is_err());
        assert_eq!(Orientation::parse(5, " 4, 2 ").unwrap().to_string(), "2,4");
        assert!(Orientation::parse(5, "").unwrap().is_canonical());
    }

    #[test]
    fn edge_directions_round_trip() {
        for o in all_orientations(6).unwrap() {
            let back = Orientation::from_edge_directions(6, &o.edge_directions()).unwrap();
            assert_eq!(back, o);
        }
        assert!(Orientation::from_edge_directions(6, &[EdgeDirection::Forward]).is_err());
    }

    #[test]
    fn labelings() {
        let o = Orientation::new(5, [2, 4]).unwrap();
        assert_eq!(o.label_polygon().labels(), &[0, 1, 3, 5, 6, 4, 2]);
        let o = Orientation::new(3, [2]).unwrap();
        assert_eq!(o.label_polygon().labels(), &[0, 1, 3, 4, 2]);
        let c = Orientation::canonical(4).unwrap().label_polygon();
        assert_eq!(c.labels(), &[0, 1, 2, 3, 4, 5]);
        for p in 0..6 {
            assert_eq!(c.position(c.label(p)), p);
        }
    }

    #[test]
    fn hl_weights_on_pentagon_fan() {
        let o = Orientation::new(3, [2]).unwrap();
        let fan = tri(3, &[(0, 2), (0, 3)]);
        let ws: Vec<i64> = (1..=3).map(|l| hl_weight(&o, &fan, l).unwrap()).collect();
        assert_eq!(ws, vec![1, 1, 2]);
        assert_eq!(hl_vertex(&o, &fan).unwrap().0, vec![1, 3, 2]);
    }

    #[test]
    fn hl_weight_bounds() {
        let o = Orientation::new(5, [2, 4]).unwrap();
        for t in enumerate_triangulations(5).unwrap() {
            for l in 1..=5 {
                let w = hl_weight(&o, &t, l).unwrap();
                assert!(w >= 1 && w <= (l * (6 - l)) as i64);
            }
        }
    }

    #[test]
    fn hl_rejects_mismatched_inputs() {
        let o = Orientation::canonical(4).unwrap();
        let t = tri(3, &[(0, 2), (0, 3)]);
        assert!(hl_weight(&o, &t, 1).is_err());
        assert!(hl_vertex(&o, &t).is_err());
        let o3 = Orientation::canonical(3).unwrap();
        assert!(hl_weight(&o3, &t, 0).is_err());
        assert!(hl_weight(&o3, &t, 4).is_err());
    }

    #[test]
    fn transport_examples() {
        let c = Orientation::canonical(4).unwrap();
        for j in 1..=4 {
            assert_eq!(
                transport_isometry(&c, j).unwrap(),
                DihedralElement::identity(6)
            );
        }
        let o = Orientation::new(3, [2]).unwrap();
        let r = transport_isometry(&o, 2).unwrap();
        assert_eq!(r, DihedralElement::reflection(5, 1));
        for t in enumerate_triangulations(3).unwrap() {
            let moved = r.act(&t).unwrap();
            assert_eq!(
                hl_weight(&o, &t, 2).unwrap(),
                delta_weight(&moved, 2).unwrap()
            );
        }
        assert!(transport_isometry(&o, 4).is_err());
    }

    #[test]
    fn classical_vertex_sets() {
        let pts = associahedron_vertices(&Orientation::canonical(2).unwrap()).unwrap();
        assert_eq!(
            pts,
            vec![LatticePoint(vec![1, 2]), LatticePoint(vec![2, 1])]
        );

        let pts: BTreeSet<Vec<i64>> = associahedron_vertices(&Orientation::canonical(3).unwrap())
            .unwrap()
            .into_iter()
            .map(|p| p.0)
            .collect();
        let expected: BTreeSet<Vec<i64>> = [
            vec![1, 2, 3],
            vec![2, 1, 3],
            vec![3, 1, 2],
            vec![1, 4, 1],
            vec![3, 2, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(pts, expected);
    }

    #[test]
    fn lattice_point_display() {
        assert_eq!(LatticePoint(vec![1, 4, 1]).to_string(), "(1,4,1)");
    }
}
