//! Exact implicitization of translational surfaces in P^3.
//!
//! A translational surface is swept out by translating one rational space
//! curve along another. Given homogeneous parameterizations of the two
//! generating curves, this crate computes the implicit equation of the
//! surface by eliminating the parameters with iterated Sylvester resultants,
//! entirely over the rationals. Shorter elimination routes are taken when a
//! generating curve is a line (ruled surface) or lies in a plane.
//!
//! Everything here is exact: sparse multivariate polynomials over arbitrary
//! precision rationals, multivariate gcd, fraction-free determinants, and
//! factorization over Q. The only floating point lives in the optional
//! basepoint diagnostic, which never feeds back into the exact pipeline.

// pub mod basepoints;
pub mod curves;
// pub mod factor;
pub mod gcd;
// pub mod implicitize;
pub mod job;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod printer;
pub mod resultant;
pub mod surface;
pub mod vars;

pub use curves::{mu_basis, span_dimension, validate_curve, CurveParam, MuBasis};
// tmp
// tmp2
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::{MultiPoly, Rational};
pub use printer::{print_poly, PrintStyle};
pub use surface::{build_surface, reduced_syzygies, SurfaceParam};
pub use vars::{Pair, Var, VarGroup};
