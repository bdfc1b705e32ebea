//! Edge zeta functions of spherical buildings.
//!
//! * [`weyl`]: root systems and Weyl groups as root permutations.
//! * [`typeorbits`]: orbits of the next-type map on ordered pairs of labels.
//! * [`luo`]: Luo's half period `m` with both algorithms cross-checked.
//! * [`symfunc`]: partitions, Kostka numbers, q-hook and hook-cohook degrees.
//! * [`zeta`]: closed-form spectral data for types A and C.
//! * [`oracle`]: brute-force buildings over prime fields and walk counts.
//! * [`cli`]: the `bzeta` command line.

pub mod cli;
pub mod error;
pub mod exactmath;
pub mod luo;
pub mod oracle;
pub mod symfunc;
pub mod typeorbits;
pub mod weyl;
pub mod zeta;

pub use error::{Error, Result};
pub use exactmath::{eigenvalue_power_sum, Cyclotomic, Eigenvalue, Field, LaurentPoly};
pub use weyl::{Family, RootSystem, WeylElement};

/// Exact rationals, the scalar used throughout the spectral layer.
pub type Rational = num_rational::BigRational;
/// Laurent polynomials in a fractional power of `q` with rational coefficients.
pub type QPoly = LaurentPoly<Rational>;
/// Rational cyclotomic numbers of order at most 4.
pub type QCyclotomic = Cyclotomic<Rational>;
