//! Families of finite sets under the monoid of increasing maps with gaps of
//! at most one: Inc-images, squashed-order compressions, Kruskal-Katona style
//! numeric bounds and Inc-invariant chains of simplicial complexes.

pub mod binomial;
pub mod compression;
pub mod dset;
pub mod error;
pub mod family;
pub mod format;
pub mod inc;
pub mod numeric;
pub mod oracle;
pub mod order;
pub mod simplicial;

pub use dset::DSet;
pub use error::{Error, Result};
pub use family::Family;
pub use numeric::{FVector, FVectorChain};
pub use simplicial::SimplicialComplex;
