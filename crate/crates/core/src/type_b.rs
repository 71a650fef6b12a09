//! Type B: signed permutations, the type B permutahedron in `R^{2n}`, and
//! the cyclohedron obtained by restricting an associahedron realization to
//! centrally symmetric triangulations of the `(2n+2)`-gon.

use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::polygon::{enumerate_triangulations, Triangulation};
use crate::type_a::{vertices_of, EdgeDirection, LatticePoint, Orientation};

/// A permutation `σ` of `{1, ..., 2n}` with `σ(i) + σ(2n+1-i) = 2n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<usize>);

impl SignedPermutation {
    /// Validates the one-line notation `(σ(1), ..., σ(2n))`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let len = values.len();
        if len == 0 || len % 2 == 1 {
            return Err(Error::InvalidPermutation(format!(
                "{values:?} does not have even positive length"
            )));
        }
        let mut seen = vec![false; len + 1];
        for &v in &values {
            if v == 0 || v > len || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a permutation of 1..={len}"
                )));
            }
        }
        for i in 0..len / 2 {
            if values[i] + values[len - 1 - i] != len + 1 {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} breaks the symmetry at position {}",
                    i + 1
                )));
            }
        }
        Ok(Self(values))
    }

    /// The longest element `(2n, 2n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Self((1..=2 * n).rev().collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len() / 2
    }

    pub fn to_point(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|&v| v as i64).collect())
    }
}

/// All `2^n n!` elements of `W_n` in lexicographic order.
pub fn hyperoctahedral_elements(n: usize) -> Result<Vec<SignedPermutation>> {
    if n < 1 {
        return Err(Error::RankTooSmall { n, min: 1 });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; 2 * n + 1];
    extend_signed(n, &mut prefix, &mut used, &mut out);
    Ok(out)
}

fn extend_signed(
    n: usize,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<SignedPermutation>,
) {
    if prefix.len() == n {
        let mut full = prefix.clone();
        full.extend(prefix.iter().rev().map(|&v| 2 * n + 1 - v));
        out.push(SignedPermutation(full));
        return;
    }
    for v in 1..=2 * n {
        let partner = 2 * n + 1 - v;
        if used[v] || used[partner] {
            continue;
        }
        used[v] = true;
        used[partner] = true;
        prefix.push(v);
        extend_signed(n, prefix, used, out);
        prefix.pop();
        used[v] = false;
        used[partner] = false;
    }
}

/// Vertices `(σ(1), ..., σ(2n))` of the type B permutahedron.
pub fn permutahedron_b_vertices(n: usize) -> Result<Vec<LatticePoint>> {
    Ok(hyperoctahedral_elements(n)?
        .iter()
        .map(SignedPermutation::to_point)
        .collect())
}

/// Whether `T` is fixed by the half-turn of its (even) polygon.
pub fn is_centrally_symmetric(t: &Triangulation) -> Result<bool> {
    let m = t.polygon_size();
    if m % 2 == 1 {
        return Err(Error::OddPolygon { m });
    }
    Ok(DihedralElement::half_turn(m).act(t)? == *t)
}

/// Centrally symmetric triangulations of the `(2n+2)`-gon, in lexicographic
/// order.
pub fn enumerate_symmetric_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    if n < 1 {
        return Err(Error::RankTooSmall { n, min: 1 });
    }
    let mut out = Vec::new();
    for t in enumerate_triangulations(2 * n)? {
        if is_centrally_symmetric(&t)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Whether an orientation of `τ_1 - ... - τ_{2n-1}` is symmetric: the edges
/// `{τ_i, τ_{i+1}}` and `{τ_{2n-i-1}, τ_{2n-i}}` point in opposite
/// directions for every `i`.
pub fn is_symmetric_orientation(o: &Orientation) -> Result<bool> {
    let rank = o.n();
    if rank % 2 == 1 {
        return Err(Error::InvalidOrientation(format!(
            "symmetry needs an even number of elements, got n = {rank}"
        )));
    }
    // dirs[x] is the edge {τ_{x+1}, τ_{x+2}}
    let dirs = o.edge_directions();
    let last = dirs.len();
    Ok((0..last).all(|x| {
        let mirror = last - 1 - x;
        matches!(
            (dirs[x], dirs[mirror]),
            (EdgeDirection::Forward, EdgeDirection::Backward)
                | (EdgeDirection::Backward, EdgeDirection::Forward)
        )
    }))
}

/// The `2^{n-1}` symmetric orientations on `2n` elements, ordered by the
/// bitmask of the up elements chosen among `2, ..., n`.
pub fn symmetric_orientations(n: usize) -> Result<Vec<Orientation>> {
    if n < 1 {
        return Err(Error::RankTooSmall { n, min: 1 });
    }
    let rank = 2 * n;
    let pairs: Vec<usize> = (2..=n).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let up =
                pairs.iter().enumerate().map(
                    |(b, &j)| {
                        if mask >> b & 1 == 1 {
                            j
                        } else {
                            rank + 1 - j
                        }
                    },
                );
            Orientation::new(rank, up)
        })
        .collect()
}

/// Cyclohedron vertices in `R^{2n}`: the realization of `o` restricted to
/// centrally symmetric triangulations, in triangulation order.
pub fn cyclohedron_vertices(o: &Orientation) -> Result<Vec<LatticePoint>> {
    if !is_symmetric_orientation(o)? {
        return Err(Error::NotSymmetric { up: o.to_string() });
    }
    let ts = enumerate_symmetric_triangulations(o.n() / 2)?;
    vertices_of(o, &ts)
}
