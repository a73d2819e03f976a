//! Exact equivariant structure constants for projective space.
//!
//! The product of Schubert classes on P^n expands as
//! `sigma_i * sigma_j = sum_k C_{i,j}^k sigma_k` with coefficients
//! `C_{i,j}^k` in `Z[t_1, t_2, ...]`. This crate computes those
//! coefficients exactly by four independent routes — bipartite-matching
//! enumeration ([`matchings`]), a closed product formula and a Pieri-rule
//! recurrence ([`formulas`]), and two lattice-model sums ([`models`]) —
//! and checks the structural facts relating them: positivity in the
//! simple roots `beta_m = t_m - t_{m+1}`, the saturated Newton polytope
//! description of the support ([`newton`]), and support behaviour under
//! index scaling.
//!
//! With the default `parallel` feature the heavier enumerations fold in
//! data-parallel chunks via rayon; disabling it yields a fully sequential
//! build with the same results and API.

pub mod error;
pub mod formulas;
pub mod matchings;
pub mod models;
pub mod newton;
pub mod polyring;
pub mod report;
pub mod verify;

pub use error::Error;
pub use polyring::{ExponentVector, Family, Polynomial, SupportSet};
