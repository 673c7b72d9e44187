//! Exact sl3 colored Jones polynomials of `T(2,b)` torus knots.
//!
//! The pipeline is: [`plethysm2::psi2_closed`] gives the second Adams
//! operation of `V_{m1,m2}` as a signed sum of irreducibles,
//! [`sl3rep`] supplies quantum dimensions and twists, and [`jones`]
//! assembles them into a Laurent polynomial over [`laurent::ScaledLaurent`].
//! [`schur3`] is an independent brute-force oracle built on three-variable
//! symmetric polynomials.
//!
//! ```
//! use sl3jones::{jones::{jones_t2b, Variable}, sl3rep::Weight};
//!
//! let j = jones_t2b(3, Weight::new(1, 0)).unwrap().in_variable(Variable::QInverse);
//! assert_eq!(j.value.to_string(), "1*q^2 + 1*q^4 - 1*q^6");
//! ```

pub mod cli;
pub mod jones;
pub mod laurent;
pub mod plethysm2;
pub mod schur3;
pub mod sl3rep;

pub use jones::{degree_report, jones_rosso, jones_t2b, ColoredJonesResult, DegreeReport, TorusKnotSpec, Variable};
pub use laurent::ScaledLaurent;
pub use plethysm2::{psi2_closed, SignedWeightSum};
pub use sl3rep::Weight;
