//! Exact vertex sets of permutahedra, associahedra and cyclohedra built from
//! polygon triangulations, together with exhaustive checks that their
//! centers of gravity coincide.
//!
//! ```
//! use assoc_core::{barycenter, associahedron_vertices, Orientation};
//!
//! let o = Orientation::parse(5, "2,4").unwrap();
//! let g = barycenter(&associahedron_vertices(&o).unwrap()).unwrap();
//! assert_eq!(g.to_string(), "3/1 3/1 3/1 3/1 3/1");
//! ```

pub mod centroid;
pub mod dihedral;
pub mod error;
pub mod export;
pub mod polygon;
pub mod type_a;
pub mod type_b;
pub mod verify;

pub use centroid::{barycenter, permutahedron_vertices, Rational, RationalPoint};
pub use dihedral::{orbit, orbit_partition, stabilizer, DihedralElement, Orbit};
pub use error::{Error, Result};
pub use polygon::{enumerate_triangulations, is_crossing, Diagonal, Triangle, Triangulation};
pub use type_a::{
    all_orientations, associahedron_vertices, delta_weight, hl_vertex, hl_weight, loday_vertex,
    transport_isometry, LabeledPolygon, LatticePoint, Orientation,
};
pub use type_b::{
    cyclohedron_vertices, enumerate_symmetric_triangulations, hyperoctahedral_elements,
    is_centrally_symmetric, is_symmetric_orientation, permutahedron_b_vertices,
    symmetric_orientations, SignedPermutation,
};
pub use verify::{verify_all, verify_with, VerificationReport, VerifyOptions};
