//! Exact barycenters and the classical permutahedron.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::type_a::LatticePoint;

pub type Rational = Ratio<i64>;

/// A point with exact rational coordinates, each kept in lowest terms with a
/// positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint(pub Vec<Rational>);

impl RationalPoint {
    /// The point with every one of `dim` coordinates equal to `value`.
    pub fn constant(dim: usize, value: Rational) -> Self {
        Self(vec![value; dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Coordinates as `"p/q"` strings; integers keep the `/1`.
    pub fn fraction_strings(&self) -> Vec<String> {
        self.0.iter().map(fraction_string).collect()
    }
}

pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fraction_strings().join(" "))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.fraction_strings().serialize(s)
    }
}

/// Coordinatewise average of a nonempty set of points of equal dimension.
pub fn barycenter(points: &[LatticePoint]) -> Result<RationalPoint> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let dim = first.dim();
    let mut sums = vec![0i64; dim];
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        for (s, c) in sums.iter_mut().zip(p.coords()) {
            *s += c;
        }
    }
    let count = points.len() as i64;
    Ok(RationalPoint(
        sums.into_iter().map(|s| Rational::new(s, count)).collect(),
    ))
}

/// `((n+1)/2, ..., (n+1)/2)` in `R^n`.
pub fn type_a_center(n: usize) -> RationalPoint {
    RationalPoint::constant(n, Rational::new(n as i64 + 1, 2))
}

/// `((2n+1)/2, ..., (2n+1)/2)` in `R^{2n}`.
pub fn type_b_center(n: usize) -> RationalPoint {
    RationalPoint::constant(2 * n, Rational::new(2 * n as i64 + 1, 2))
}

/// The `n!` points `(σ(1), ..., σ(n))` in lexicographic order.
pub fn permutahedron_vertices(n: usize) -> Result<Vec<LatticePoint>> {
    if n < 1 {
        return Err(Error::RankTooSmall { n, min: 1 });
    }
    let mut current: Vec<i64> = (1..=n as i64).collect();
    let mut out = vec![LatticePoint(current.clone())];
    while next_permutation(&mut current) {
        out.push(LatticePoint(current.clone()));
    }
    Ok(out)
}

fn next_permutation(v: &mut [i64]) -> bool {
    let Some(pivot) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let succ = v.iter().rposition(|&x| x > v[pivot]).unwrap();
    v.swap(pivot, succ);
    v[pivot + 1..].reverse();
    true
}
