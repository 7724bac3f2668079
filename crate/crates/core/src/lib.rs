//! Classical and small quantum cohomology of the blow-up of `P^m` along a
//! linear subspace of dimension `p`, seen as the projective bundle
//! `P(O(1)^(r-1) + O(2))` over `P^n` with `n = m-p-1`, `r = p+2`.
//!
//! Layers, bottom up:
//! - [`exactalg`]: exact rationals and sparse weighted polynomials,
//! - [`groebner`]: Buchberger bases, normal forms and quotient staircases,
//! - [`geometry`]: presentations, integration, curve classes, Chern data,
//! - [`quantum`]: deformed presentations and Gromov-Witten extraction,
//! - [`cli`]: command front end producing text or JSON documents.

pub mod cli;
pub mod exactalg;
pub mod geometry;
pub mod groebner;
pub mod quantum;
pub mod report;
