//! Square-free monomial ideals, simplicial complexes and graphs, with exact
//! checks for vertex decomposability and geometric vertex decomposition of
//! open neighborhood ideals of trees.

pub mod complex;
pub mod error;
pub mod fixtures;
pub mod golden;
pub mod graph;
pub mod gvd;
pub mod ideal;
pub mod universe;

pub use complex::{ComplexKind, CycleCheck, Leaf, LeafKind, SheddingCertificate, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{Graph, HeightProfile, TreeDecomposition};
pub use gvd::GvdCertificate;
pub use ideal::{MinimalPrimes, SquareFreeIdeal};
pub use universe::{SpernerFamily, Universe, VertexSet};
