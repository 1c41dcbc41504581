//! Edge rings of graphs: h-polynomials by lattice-point counting,
//! Gorenstein classification of bipartite edge rings through acceptable and
//! tight vertex sets, and the blockwise Gorenstein closure.
//!
//! ```
//! use edgering::{graph::named, classify, Limits};
//!
//! let cube = named::cube();
//! let bip = cube.bipartition().unwrap();
//! let c = classify::classify(&cube, &bip, &Limits::default()).unwrap();
//! assert_eq!(c.hvec.coefficients(), &[1, 5, 9, 1]);
//! assert!(c.pseudo_gorenstein && !c.gorenstein_palindromic);
//! ```

pub mod classify;
pub mod closure;
pub mod error;
pub mod facets;
pub mod graph;
pub mod hilbert;
pub mod limits;
pub mod matching;
pub mod poly;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, Side};
pub use limits::Limits;
pub use poly::{Coefficient, HPolynomial};
pub use vertex_set::VertexSet;

/// h-polynomial with 64-bit coefficients, the default everywhere.
pub type HVector = HPolynomial<i64>;
/// h-polynomial with 128-bit coefficients.
pub type WideHVector = HPolynomial<i128>;
