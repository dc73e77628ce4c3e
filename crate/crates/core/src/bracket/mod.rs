//! Kauffman bracket of framed link diagrams in `S^3`.
//!
//! Two independent evaluators are provided: a state sum over all `2^c`
//! smoothings with loops counted by union-find, and a memoized recursion
//! on the skein relation. With `<empty> = 1` a trivial loop is worth
//! `delta = -A^2 - A^-2`.
//!
//! Diagrams are combinatorial: each crossing lists its four half-edge labels
//! counterclockwise. The A-smoothing joins each under-slot with its
//! counterclockwise successor; the opposite convention amounts to the
//! substitution `A -> A^-1`.

pub mod corpus;
mod diagram;
mod eval;
mod moves;

pub use diagram::{Crossing, Dart, DiagramError, Label, Over, PlanarDiagram, Smoothing};
pub use eval::{bracket_recursive, bracket_statesum, bracket_statesum_range, framing_factor};
pub use moves::{
    add_kink, add_kink_on_edge, r2_sites, r3_sites, reidemeister2, reidemeister3, resolve, KinkSign,
};
