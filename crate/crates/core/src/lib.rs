//! Exact computer algebra for the Bour family of minimal surfaces.
//!
//! The crate is organized in three layers:
//!
//! * polynomial kernel: arbitrary-precision rational and Gaussian-rational
//!   coefficients, sparse multivariate polynomials with explicit variable
//!   registries, monomial orders, calculus, gcd, and a bit-exact text format;
//! * elimination: Buchberger's algorithm with Gebauer-Moeller pair pruning,
//!   block elimination orders, Rabinowitsch saturation, Sylvester resultants,
//!   and implicitization of rational parametrizations with exact-substitution
//!   certificates;
//! * surfaces: minimal curves, Weierstrass data, the Bour surfaces B_m and
//!   their Gauss maps, fundamental forms, support functions and tangential
//!   coordinates, quadric membership, integral-free representations, and the
//!   Ribaucour class/degree formulas.

pub mod coeff;
pub mod error;
pub mod gcd;
pub mod groebner;
pub mod ideal;
pub mod implicitize;
pub mod monomial;
pub mod poly;
pub mod ratmap;
pub mod resultant;
pub mod surfaces;
pub mod text;
pub mod vars;

pub use coeff::{GaussRat, Rat};
pub use error::{ElimError, ParseError, PolyError, SurfaceError};
pub use groebner::{buchberger_reduced, eliminate, saturate, Budget, ElimStats};
pub use ideal::{normal_form, GroebnerBasis, Ideal};
pub use implicitize::{implicitize_map, implicitize_profile, ElimMethod, ImplicitResult};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ratmap::{RatFn, RationalMap};
pub use resultant::resultant;
pub use text::poly_parse;
pub use vars::VarRegistry;
