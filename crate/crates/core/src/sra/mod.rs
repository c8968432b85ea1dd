//! The PBW engine for symplectic reflection algebras over the parameter ring.

mod algebra;
mod center;
mod parse;
mod simplicity;

pub use algebra::{pbw_dimension, Key, SRAElement, SRAlgebra, WordItem};
pub use center::{rational_rank, CenterBasis, IdealCheck, PoissonReport, SatakeDegree};
pub use parse::parse_element;
pub use simplicity::{
    hook_length_dim, partitions, simplicity_lattice, sn_reflection_characters, trace_gate_candidate,
    trace_obstruction, TraceDatum,
};
