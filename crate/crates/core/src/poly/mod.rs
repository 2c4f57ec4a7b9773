//! Exact univariate algebra over the rationals: polynomials, rational functions,
//! quadratic surds, Sturm root counting, isolation and sign certificates.

pub mod isolate;
pub mod positivity;
pub mod quadext;
pub mod rational;
pub mod ratfunc;
pub mod sturm;
pub mod transcendental;
pub mod univariate;

pub use isolate::{isolate, isolate_and_refine, Bracket, IsolatedRoot};
pub use positivity::{certify_positive, certify_sign, Positivity, SignCertificate};
pub use quadext::QuadExt;
pub use rational::{format_significant, int, rat, DecimalMode, Rational};
pub use ratfunc::RationalFunction;
pub use sturm::{count_roots, deflate_endpoint_roots, sturm_sequence, Bound, Interval};
pub use univariate::RationalPoly;
