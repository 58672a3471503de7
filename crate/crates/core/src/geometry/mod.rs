//! Finite fields and the projective geometries PG(2, q), PG(3, q).

mod field;
mod projective;

pub use field::{prime_power, FiniteField, MAX_ORDER, MODULI};
pub use projective::{
    bisecants_closed_form, enumerate_arcs, line_count, max_arc_size, point_count,
    unisecants_closed_form, Arc, ArcEnumeration, ProjectiveGeometry, SecantProfile,
    DEFAULT_ARC_BUDGET, MAX_INCIDENCES,
};
