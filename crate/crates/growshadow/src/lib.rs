//! Numerical shadowing toolkit for polynomial ODEs with grow-up.
//!
//! The pipeline: parse a polynomial vector field, compactify it onto the
//! closed unit ball (Poincaré compactification with a degree-dependent time
//! rescale), integrate either system, generate and check pseudotrajectories
//! against several error laws, extract hyperbolicity data at boundary fixed
//! points, compute admissible shadowing exponents, and construct shadowing
//! points by dyadic box refinement plus Gauss-Newton polish.
//!
//! Modules mirror the pipeline stages:
//!
//! * [`polyfield`] — polynomial vector fields: parsing, evaluation, Jacobians.
//! * [`compactify`] — the ball compactification, time change, and exact
//!   ball-transfer bounds.
//! * [`flow`] — adaptive Runge-Kutta integration and growth classification.
//! * [`pseudo`] — pseudotrajectory generation, defect profiles, and the
//!   registry of error-law checkers.
//! * [`hyperbolic`] — boundary fixed points, spectral profiles, exponent
//!   windows.
//! * [`shadow`] — box refinement, shadowing searches, decompactification
//!   transfer, and the weighted solver.

pub mod compactify;
pub mod error;
pub mod flow;
pub mod hyperbolic;
pub mod polyfield;
pub mod pseudo;
pub mod shadow;

pub use error::{Error, Result};
