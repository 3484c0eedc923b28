//! Exact combinatorics of algebras generated by strongly stable sets of
//! quadratic monomials: shifted Ferrers diagrams, h-vectors and Hilbert
//! series (three independent methods plus a semigroup oracle),
//! Gorenstein classification by structure and by symmetry, closed-form
//! series families, and exhaustive small-dimension surveys.

pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod gorenstein;
pub mod hilbert;
pub mod random;
pub mod util;
pub mod verify;

pub use diagram::{
    borel_generators, closure, diagonal_band, is_strongly_stable, normalize, parse_generators,
    render_ascii, v2k, Diagram, Monomial,
};
pub use error::{Error, Result};
pub use gorenstein::{classify, ClassificationReport};
pub use hilbert::{
    antichain_counts, direct_hf, enumerate_paths, expand, hilbert_series, hvector_dp,
    HVector, HilbertSeries, NePath,
};
