//! Divisorial valuations of the plane given by configurations of infinitely
//! near points: their invariants, the associated Hirzebruch-surface
//! divisors, and the lower bounds they certify.

pub mod bounds;
pub mod checks;
pub mod cli;
pub mod config;
pub mod fuzz;
pub mod invariants;
pub mod rational;
pub mod surface;

pub use bounds::{delta0, tono_family, BoundReport, MultiValuation, ValuationBundle};
pub use config::{ConfigError, Configuration, PointKind};
pub use invariants::{
    curvette_vector, from_maximal_contact, maximal_contact_values, multiplicity_sequence,
    InvariantRecord,
};
