//! JSON and CSV documents describing a vertex set and its barycenter.

use serde::{Deserialize, Serialize};

use crate::centroid::{barycenter, permutahedron_vertices};
use crate::dihedral::orbit_partition;
use crate::error::{Error, Result};
use crate::polygon::{enumerate_triangulations, Triangulation};
use crate::type_a::{associahedron_vertices, hl_vertex, LatticePoint, Orientation};
use crate::type_b::{
    cyclohedron_vertices, enumerate_symmetric_triangulations, permutahedron_b_vertices,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolytopeKind {
    PermutahedronA,
    PermutahedronB,
    Associahedron,
    Cyclohedron,
}

impl PolytopeKind {
    pub fn is_type_b(self) -> bool {
        matches!(self, Self::PermutahedronB | Self::Cyclohedron)
    }

    /// Ambient dimension for rank `n`.
    pub fn dimension(self, n: usize) -> usize {
        if self.is_type_b() {
            2 * n
        } else {
            n
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    /// Each member as its list of diagonals `[a, b]`.
    pub members: Vec<Vec<[usize; 2]>>,
    pub stabilizer_order: usize,
    pub centroid: Vec<String>,
}

/// A vertex set with its exact barycenter.
///
/// `n` is the rank: vertices live in `R^n` for type A kinds and in `R^{2n}`
/// for type B kinds. Centroid entries are `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub n: usize,
    pub kind: PolytopeKind,
    pub up: Vec<usize>,
    pub vertices: Vec<Vec<i64>>,
    pub centroid: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitEntry>>,
}

impl OutputDocument {
    /// Builds the document for `kind` at rank `n`. `up` is the up-set of the
    /// orientation on `kind.dimension(n)` elements and must be empty for the
    /// permutahedra. Orbits are only available for associahedra and
    /// cyclohedra.
    pub fn build(kind: PolytopeKind, n: usize, up: &[usize], with_orbits: bool) -> Result<Self> {
        let dim = kind.dimension(n);
        let orientation = Orientation::new(dim, up.iter().copied())?;
        let (vertices, triangulations) = match kind {
            PolytopeKind::PermutahedronA | PolytopeKind::PermutahedronB => {
                if !up.is_empty() {
                    return Err(Error::InvalidOrientation(
                        "permutahedra take no orientation".to_string(),
                    ));
                }
                let vs = if kind == PolytopeKind::PermutahedronA {
                    permutahedron_vertices(n)?
                } else {
                    permutahedron_b_vertices(n)?
                };
                (vs, None)
            }
            PolytopeKind::Associahedron => (
                associahedron_vertices(&orientation)?,
                Some(enumerate_triangulations(n)?),
            ),
            PolytopeKind::Cyclohedron => (
                cyclohedron_vertices(&orientation)?,
                Some(enumerate_symmetric_triangulations(n)?),
            ),
        };
        let centroid = barycenter(&vertices)?.fraction_strings();
        let orbits = match (with_orbits, triangulations) {
            (true, Some(ts)) => Some(orbit_entries(&orientation, &ts)?),
            (true, None) => {
                return Err(Error::Export(
                    "orbits are only defined for associahedra and cyclohedra".to_string(),
                ))
            }
            (false, _) => None,
        };
        Ok(Self {
            n,
            kind,
            up: orientation.up_set().iter().copied().collect(),
            vertices: vertices.into_iter().map(|p| p.0).collect(),
            centroid,
            orbits,
        })
    }

    pub fn dimension(&self) -> usize {
        self.kind.dimension(self.n)
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        self.vertices.iter().cloned().map(LatticePoint).collect()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Export(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(s).map_err(|e| Error::Export(e.to_string()))?;
        let dim = doc.dimension();
        if let Some(bad) = doc.vertices.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        if doc.centroid.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: doc.centroid.len(),
            });
        }
        Ok(doc)
    }

    /// Header `x1,...,xd`, then one vertex per row.
    pub fn to_csv(&self) -> Result<String> {
        vertices_to_csv(self.dimension(), &self.vertices)
    }
}

fn orbit_entries(o: &Orientation, ts: &[Triangulation]) -> Result<Vec<OrbitEntry>> {
    orbit_partition(ts)?
        .into_iter()
        .map(|orbit| {
            let points = orbit
                .members
                .iter()
                .map(|t| hl_vertex(o, t))
                .collect::<Result<Vec<_>>>()?;
            Ok(OrbitEntry {
                members: orbit
                    .members
                    .iter()
                    .map(|t| t.pairs().into_iter().map(|(a, b)| [a, b]).collect())
                    .collect(),
                stabilizer_order: orbit.stabilizer_order,
                centroid: barycenter(&points)?.fraction_strings(),
            })
        })
        .collect()
}

pub fn vertices_to_csv(dim: usize, vertices: &[Vec<i64>]) -> Result<String> {
    let err = |e: csv::Error| Error::Export(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record((1..=dim).map(|i| format!("x{i}")))
        .map_err(err)?;
    for v in vertices {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        w.serialize(v).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Export(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Export(e.to_string()))
}

/// Parses CSV written by [`vertices_to_csv`].
pub fn vertices_from_csv(s: &str) -> Result<Vec<Vec<i64>>> {
    let err = |e: csv::Error| Error::Export(e.to_string());
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let dim = r.headers().map_err(err)?.len();
    let mut out = Vec::new();
    for rec in r.deserialize::<Vec<i64>>() {
        let row = rec.map_err(err)?;
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: row.len(),
            });
        }
        out.push(row);
    }
    Ok(out)
}
