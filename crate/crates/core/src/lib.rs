//! Exact flood polynomials of finite simple graphs.
//!
//! A vertex floods once at least two of its neighbours are flooded. A seed
//! set *floods* a graph when repeating that rule reaches every vertex, and the
//! flood polynomial counts flooding seed sets by size. The crate computes it
//! exactly by enumerating seed sets and checks closed forms for several graph
//! families against that enumeration. Structural facts such as leaf and
//! trigger counts can be read back out of the coefficients.
//!
//! Enumeration runs on rayon when the `parallel` feature (on by default) is
//! enabled and falls back to a sequential loop otherwise.
//!
//! ```
//! use floodpoly::enumeration::flood_polynomial;
//! use floodpoly::families::cycle;
//! use floodpoly::formulas::lucas_poly;
//!
//! let g = cycle(7)?;
//! assert_eq!(flood_polynomial(&g)?, lucas_poly(7));
//! # Ok::<(), floodpoly::FloodError>(())
//! ```

pub mod analysis;
pub mod cascade;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod poly;

pub use error::{FloodError, Result};
pub use graph::{Graph, VertexSet};
pub use poly::IntPolynomial;
