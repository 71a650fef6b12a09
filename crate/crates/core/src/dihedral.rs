//! The dihedral group `D_m` of the regular `m`-gon acting on vertex
//! positions and on triangulations.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{Diagonal, Triangulation, VertexIndex};

/// An isometry of the regular `m`-gon.
///
/// Rotations send `x` to `x + shift`, reflections send `x` to `shift - x`,
/// both modulo `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DihedralElement {
    m: usize,
    reflect: bool,
    shift: usize,
}

impl DihedralElement {
    pub fn identity(m: usize) -> Self {
        Self::rotation(m, 0)
    }

    pub fn rotation(m: usize, shift: usize) -> Self {
        Self {
            m,
            reflect: false,
            shift: shift % m,
        }
    }

    pub fn reflection(m: usize, shift: usize) -> Self {
        Self {
            m,
            reflect: true,
            shift: shift % m,
        }
    }

    /// The reflection `s_k`, which sends `A_x` to `A_{k+1-x}`.
    pub fn reflection_s(m: usize, k: usize) -> Self {
        Self::reflection(m, k + 1)
    }

    /// Rotation by half a turn. Only meaningful for even `m`.
    pub fn half_turn(m: usize) -> Self {
        Self::rotation(m, m / 2)
    }

    pub fn polygon_size(&self) -> usize {
        self.m
    }

    pub fn is_reflection(&self) -> bool {
        self.reflect
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn apply_vertex(&self, x: VertexIndex) -> Result<VertexIndex> {
        if x >= self.m {
            return Err(Error::SizeMismatch {
                expected: self.m,
                found: x + 1,
            });
        }
        Ok(self.map(x))
    }

    #[inline]
    fn map(&self, x: VertexIndex) -> VertexIndex {
        if self.reflect {
            (self.shift + self.m - x) % self.m
        } else {
            (x + self.shift) % self.m
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::SizeMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        let m = self.m;
        let (s, t) = (self.shift, other.shift);
        Ok(match (self.reflect, other.reflect) {
            (false, false) => Self::rotation(m, s + t),
            (false, true) => Self::reflection(m, s + t),
            (true, false) => Self::reflection(m, s + m - t),
            (true, true) => Self::rotation(m, s + m - t),
        })
    }

    pub fn inverse(&self) -> Self {
        if self.reflect {
            *self
        } else {
            Self::rotation(self.m, self.m - self.shift)
        }
    }

    /// Image of a triangulation of the `m`-gon.
    pub fn act(&self, t: &Triangulation) -> Result<Triangulation> {
        if t.polygon_size() != self.m {
            return Err(Error::SizeMismatch {
                expected: self.m,
                found: t.polygon_size(),
            });
        }
        let ds = t
            .diagonals()
            .iter()
            .map(|d| {
                let (a, b) = d.endpoints();
                Diagonal::new(self.m, self.map(a), self.map(b))
            })
            .collect::<Result<Vec<_>>>()?;
        Triangulation::from_diagonals(t.n(), ds)
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflect {
            write!(f, "x -> {}-x mod {}", self.shift, self.m)
        } else {
            write!(f, "x -> x+{} mod {}", self.shift, self.m)
        }
    }
}

/// The `2m` elements of `D_m`: rotations by `0..m`, then reflections.
pub fn all_elements(m: usize) -> Result<Vec<DihedralElement>> {
    if m < 3 {
        return Err(Error::RankTooSmall { n: m, min: 3 });
    }
    let rotations = (0..m).map(|t| DihedralElement::rotation(m, t));
    let reflections = (0..m).map(|t| DihedralElement::reflection(m, t));
    Ok(rotations.chain(reflections).collect())
}

/// `g · T` for every `g` in [`all_elements`] order.
pub fn images(t: &Triangulation) -> Result<Vec<Triangulation>> {
    all_elements(t.polygon_size())?
        .iter()
        .map(|g| g.act(t))
        .collect()
}

/// The orbit of `T`, deduplicated and sorted.
pub fn orbit(t: &Triangulation) -> Result<Vec<Triangulation>> {
    let mut out = images(t)?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Elements of `D_m` fixing `T`.
pub fn stabilizer(t: &Triangulation) -> Result<Vec<DihedralElement>> {
    let mut out = Vec::new();
    for g in all_elements(t.polygon_size())? {
        if g.act(t)? == *t {
            out.push(g);
        }
    }
    Ok(out)
}

/// One class of the dihedral action on triangulations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted members; the first one identifies the orbit.
    pub members: Vec<Triangulation>,
    pub stabilizer_order: usize,
}

impl Orbit {
    pub fn representative(&self) -> &Triangulation {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Image table of the action on an indexed set of triangulations.
///
/// `image[t][g]` is the index of `g · T_t`, with `g` in [`all_elements`]
/// order. The set must be closed under the action.
#[derive(Debug, Clone)]
pub struct ActionTable {
    pub elements: Vec<DihedralElement>,
    pub image: Vec<Vec<usize>>,
}

impl ActionTable {
    pub fn new(ts: &[Triangulation]) -> Result<Self> {
        let Some(first) = ts.first() else {
            return Ok(Self {
                elements: Vec::new(),
                image: Vec::new(),
            });
        };
        let elements = all_elements(first.polygon_size())?;
        let index: HashMap<&Triangulation, usize> =
            ts.iter().enumerate().map(|(x, t)| (t, x)).collect();
        let mut image = Vec::with_capacity(ts.len());
        for t in ts {
            let mut row = Vec::with_capacity(elements.len());
            for g in &elements {
                let img = g.act(t)?;
                let &x = index.get(&img).ok_or(Error::NotAnOrbit { len: ts.len() })?;
                row.push(x);
            }
            image.push(row);
        }
        Ok(Self { elements, image })
    }

    /// Orbits as sorted index lists, ordered by their least member.
    pub fn orbit_indices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut members: Vec<usize> = self.image[start].clone();
            members.sort_unstable();
            members.dedup();
            for &x in &members {
                seen[x] = true;
            }
            out.push(members);
        }
        out
    }

    pub fn stabilizer_order(&self, t: usize) -> usize {
        self.image[t].iter().filter(|&&x| x == t).count()
    }
}

/// Partition of a closed, sorted set of triangulations into orbits.
pub fn orbit_partition(ts: &[Triangulation]) -> Result<Vec<Orbit>> {
    let table = ActionTable::new(ts)?;
    Ok(table
        .orbit_indices()
        .into_iter()
        .map(|idx| Orbit {
            stabilizer_order: table.stabilizer_order(idx[0]),
            members: idx.into_iter().map(|x| ts[x].clone()).collect(),
        })
        .collect())
}
