//! Triangulations of the convex polygon with vertices `A_0, ..., A_{m-1}`
//! placed counterclockwise, where `m = n + 2`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Position of a polygon vertex, `0 <= v < m`.
pub type VertexIndex = usize;

/// A diagonal `(a, b)` of the `m`-gon, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diagonal {
    a: VertexIndex,
    b: VertexIndex,
    #[serde(skip)]
    m: usize,
}

impl Diagonal {
    /// Builds the diagonal between two positions in either order.
    pub fn new(m: usize, x: VertexIndex, y: VertexIndex) -> Result<Self> {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        if m < 4 || b >= m || b - a < 2 || (a == 0 && b == m - 1) {
            return Err(Error::InvalidDiagonal { m, a, b });
        }
        Ok(Self { a, b, m })
    }

    pub fn endpoints(&self) -> (VertexIndex, VertexIndex) {
        (self.a, self.b)
    }

    pub fn polygon_size(&self) -> usize {
        self.m
    }

    /// Whether the open chords cross. Sharing an endpoint is not a crossing.
    pub fn crosses(&self, other: &Diagonal) -> Result<bool> {
        if self.m != other.m {
            return Err(Error::SizeMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        let (a, b) = (self.a, self.b);
        let (c, d) = (other.a, other.b);
        Ok((a < c && c < b && b < d) || (c < a && a < d && d < b))
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Free-function form of [`Diagonal::crosses`].
pub fn is_crossing(d1: &Diagonal, d2: &Diagonal) -> Result<bool> {
    d1.crosses(d2)
}

/// The triangle `A_i A_j A_k` with `i < j < k`; `j` is its middle index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triangle {
    pub i: VertexIndex,
    pub j: VertexIndex,
    pub k: VertexIndex,
}

impl Triangle {
    pub fn vertices(&self) -> [VertexIndex; 3] {
        [self.i, self.j, self.k]
    }

    pub fn contains(&self, v: VertexIndex) -> bool {
        self.i == v || self.j == v || self.k == v
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// A triangulation of the `(n+2)`-gon.
///
/// Equality, hashing and ordering only look at `n` and the sorted diagonal
/// list; the triangles are derived from the diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Diagonal>,
    triangles: Vec<Triangle>,
}

impl Triangulation {
    /// Validates `n - 1` pairwise noncrossing diagonals and derives the
    /// triangles `Δ_1, ..., Δ_n`.
    pub fn from_diagonals<I>(n: usize, diagonals: I) -> Result<Self>
    where
        I: IntoIterator<Item = Diagonal>,
    {
        if n < 1 {
            return Err(Error::RankTooSmall { n, min: 1 });
        }
        let m = n + 2;
        let mut ds: Vec<Diagonal> = diagonals.into_iter().collect();
        for d in &ds {
            if d.m != m {
                return Err(Error::SizeMismatch {
                    expected: m,
                    found: d.m,
                });
            }
        }
        if ds.len() != n - 1 {
            return Err(Error::DiagonalCount {
                expected: n - 1,
                found: ds.len(),
            });
        }
        ds.sort_unstable();
        for w in ds.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateDiagonal {
                    a: w[0].a,
                    b: w[0].b,
                });
            }
        }
        for (x, d1) in ds.iter().enumerate() {
            for d2 in &ds[x + 1..] {
                if d1.crosses(d2)? {
                    return Err(Error::Crossing(d1.a, d1.b, d2.a, d2.b));
                }
            }
        }
        let triangles = derive_triangles(n, &ds);
        Ok(Self {
            n,
            diagonals: ds,
            triangles,
        })
    }

    /// Convenience constructor from raw endpoint pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let ds = pairs
            .iter()
            .map(|&(a, b)| Diagonal::new(n + 2, a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::from_diagonals(n, ds)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn polygon_size(&self) -> usize {
        self.n + 2
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// Endpoint pairs of the diagonals in canonical order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.diagonals.iter().map(Diagonal::endpoints).collect()
    }

    /// All `n` triangles, `triangles()[j - 1] = Δ_j`.
    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// `Δ_j(T)`, the unique triangle whose middle index is `j`.
    pub fn triangle_at(&self, j: usize) -> Result<Triangle> {
        if j < 1 || j > self.n {
            return Err(Error::IndexOutOfRange { j, n: self.n });
        }
        Ok(self.triangles[j - 1])
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (x, d) in self.diagonals.iter().enumerate() {
            if x > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

/// For each middle index `j`, the triangle of the fan around `A_j` that
/// straddles the `A_{m-1} A_0` side: its other corners are the smallest
/// neighbour below `j` and the largest neighbour above `j`.
fn derive_triangles(n: usize, ds: &[Diagonal]) -> Vec<Triangle> {
    (1..=n)
        .map(|j| {
            let mut i = j - 1;
            let mut k = j + 1;
            for d in ds {
                if d.b == j {
                    i = i.min(d.a);
                } else if d.a == j {
                    k = k.max(d.b);
                }
            }
            Triangle { i, j, k }
        })
        .collect()
}

/// All triangulations of the `(n+2)`-gon in lexicographic order of their
/// diagonal lists. There are `C_n` of them.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    if n < 1 {
        return Err(Error::RankTooSmall { n, min: 1 });
    }
    let m = n + 2;
    let mut out: Vec<Triangulation> = split_arc(m, 0, m - 1)
        .into_iter()
        .map(|ds| Triangulation::from_diagonals(n, ds))
        .collect::<Result<_>>()?;
    out.sort_unstable();
    Ok(out)
}

/// Diagonal sets triangulating the sub-polygon `A_a, A_{a+1}, ..., A_b`
/// whose closing side `A_a A_b` is already present.
fn split_arc(m: usize, a: usize, b: usize) -> Vec<Vec<Diagonal>> {
    if b - a < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for apex in a + 1..b {
        let left = split_arc(m, a, apex);
        let right = split_arc(m, apex, b);
        for l in &left {
            for r in &right {
                let mut ds = Vec::with_capacity(l.len() + r.len() + 2);
                if apex - a >= 2 {
                    ds.push(Diagonal { a, b: apex, m });
                }
                if b - apex >= 2 {
                    ds.push(Diagonal { a: apex, b, m });
                }
                ds.extend_from_slice(l);
                ds.extend_from_slice(r);
                out.push(ds);
            }
        }
    }
    out
}
