//! curlflow: exact symbolic-numeric analysis of 3D flows ẋ = v(x)
//! generated by curls of vector potentials.
//!
//! The toolkit verifies and constructs Nambu-Hamiltonian and
//! bi-Hamiltonian representations, computes helicity obstructions,
//! discovers first integrals and Jacobi last multipliers, applies the
//! constructive homotopy operator to build potentials of closed forms,
//! and cross-checks every claimed invariant with a numerical integrator.
//!
//! Layering: [`symbolic`] is the exact kernel (rationals, Laurent
//! polynomials, log-extended functions, linear algebra); [`exterior`]
//! implements forms on ℝ³; [`analysis`] the structural theory;
//! [`numeric`] the floating-point cross-checks; [`parser`] the only
//! ingestion path; [`cli`] the command-line surface over the built-in
//! [`catalog`].

pub mod analysis;
pub mod catalog;
pub mod cli;
pub mod exterior;
pub mod numeric;
pub mod parser;
pub mod report;
pub mod sample;
pub mod symbolic;

pub use analysis::VecField;
pub use exterior::DiffForm;
pub use parser::SystemDef;
pub use symbolic::{Laurent, LogFunc, Monomial, Rational};
