//! Bound states of the deformed ring-shaped (Hartmann) potential.
//!
//! The crate is split along the solution pipeline:
//!
//! * [`orthopoly`] evaluates the Laguerre and Jacobi families and builds
//!   Gauss rules.
//! * [`nu_engine`] reduces a hypergeometric-type equation to its polynomial
//!   eigenproblem (Nikiforov–Uvarov).
//! * [`hartmann`] applies the reduction to the potential in parabolic and
//!   spherical coordinates: energies, eigenfunctions and normalization.
//! * [`oracle`] checks all of the above with finite-difference eigensolvers
//!   and quadrature, without reusing any closed form.

pub mod orthopoly;
pub mod nu_engine;
pub mod hartmann;
pub mod oracle;
