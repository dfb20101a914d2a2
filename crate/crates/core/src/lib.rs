//! Exact construction and spectral verification of balanced incomplete
//! block designs and their mutual incidence matrices.

pub mod cli;
pub mod constructions;
pub mod design;
pub mod error;
pub mod expr;
pub mod golden;
pub mod graphs;
mod json;
pub mod linalg;
pub mod mutual;
pub mod paper_examples;
pub mod spectral;

pub use constructions::{
    complement_design, complete_design, cyclic_design, fixture, multiset_difference,
    trivial_design, union_design, DifferenceSetSpec,
};
pub use design::{Block, Design, DesignParams, PointId, ValidationReport};
pub use error::{Error, Result};
pub use expr::construct;
pub use mutual::{mutual_matrix, z_vector, MutualIncidenceMatrix};
pub use spectral::{self_spectrum, verify_spectrum, SpectralReport};
