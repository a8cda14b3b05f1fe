//! Exact computations with fat point subschemes of projective space.
//!
//! Everything here is exact: ranks are computed over the rationals (with
//! fraction-free elimination) or over a prime field, never in floating
//! point. The crate is organised bottom-up:
//!
//! * [`field`] and [`exactlin`]: scalars and dense exact linear algebra.
//! * [`ring`]: monomials, forms, (de)homogenization and local expansions.
//! * [`scheme`]: fat point schemes, Hilbert functions, initial degree,
//!   symbolic powers, Waldschmidt brackets, generators and containment.
//! * [`cht`]: reduction vectors with respect to lines and dot diagrams.
//! * [`macaulay`]: binomial expansions, O-sequences and the lifting of lex
//!   ideals to point configurations.
//! * [`bezout`]: multiplicities, tangent cones and intersection
//!   multiplicities of plane curves.
//! * [`picard`]: the Picard lattice of a blown-up plane, Cremona reduction
//!   and predicted Hilbert functions of generic fat points.
//! * [`io`]: the JSON envelope used by the command line tool.

pub mod bezout;
pub mod binomial;
pub mod cht;
pub mod error;
pub mod exactlin;
pub mod field;
pub mod io;
pub mod macaulay;
pub mod picard;
pub mod ring;
pub mod scheme;

pub use error::{Error, Result};
pub use exactlin::ExactMatrix;
pub use field::{FieldElement, FieldSpec};
pub use ring::{Form, Monomial};
pub use scheme::{FatPointScheme, HilbertFunction, ProjectivePoint};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear_algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/hilbert_functions.md")]
    mod hilbert_functions {}
    #[doc = include_str!("../../../book/src/symbolic_powers.md")]
    mod symbolic_powers {}
    #[doc = include_str!("../../../book/src/reduction_vectors.md")]
    mod reduction_vectors {}
    #[doc = include_str!("../../../book/src/o_sequences.md")]
    mod o_sequences {}
    #[doc = include_str!("../../../book/src/intersection_multiplicity.md")]
    mod intersection_multiplicity {}
    #[doc = include_str!("../../../book/src/picard_lattice.md")]
    mod picard_lattice {}
}
