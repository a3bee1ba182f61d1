//! Operators on plane triangles with two complex parameters.
//!
//! A triangle is an ordered triple `(a, b, c)` of complex numbers. Every
//! operator in the family is a circulant matrix `αI + βJ + γJ²` with
//! `α + β + γ = 1`, acting on the column vector `(a, b, c)`. The crate exposes
//! three coordinate charts on that family:
//!
//! * the cevian parameters `(p, q)` ([`PqPair`], [`CirculantOperator::from_pq`]),
//! * the eigenvalue pair `(η, η')` ([`EtaPair`], [`CirculantOperator::from_eta`]),
//! * exact rational angles on the area-preserving torus ([`ApOperator`]).
//!
//! Around those sit the shape modulus `φ` of a triangle and the moduli action
//! `φ ↦ ξ³φ` ([`geom`]), the twisted group law on `ℙ¹ − {ρ, ρ⁻¹}`
//! ([`torus`]), and the rational functions `𝐩`, `𝐪`, `R`, `Q` that chart the
//! area-preserving operators ([`area_preserving`]).

pub mod angle;
pub mod area_preserving;
mod error;
pub mod format;
pub mod geom;
pub mod operators;
pub mod sphere;
pub mod torus;
pub mod verify;

pub use angle::RationalAngle;
pub use area_preserving::{ApOperator, TorusPoint};
pub use error::{Error, PqComponent, Result};
pub use geom::{FourierVector, Orientation, TriangleTriple};
pub use operators::{CirculantOperator, Classification, EtaPair, Image, PqPair};
pub use sphere::SphereValue;
pub use torus::{ConicPoint, TorusElement};

use num_complex::Complex64;

/// A point of the complex plane.
pub type ComplexPoint = Complex64;

/// Global relative tolerance for banded predicates (degeneracy, zero
/// denominators, unit-modulus tests).
pub const EPS: f64 = 1e-9;

/// `ω = e^{2πi/3}`.
pub const OMEGA: Complex64 = Complex64::new(-0.5, 0.866_025_403_784_438_6);

/// `ω² = e^{4πi/3} = ω̄`.
pub const OMEGA2: Complex64 = Complex64::new(-0.5, -0.866_025_403_784_438_6);

/// `ρ = e^{2πi/6}`.
pub const RHO: Complex64 = Complex64::new(0.5, 0.866_025_403_784_438_6);

/// `ρ⁻¹ = e^{-2πi/6}`.
pub const RHO_INV: Complex64 = Complex64::new(0.5, -0.866_025_403_784_438_6);

pub(crate) const SQRT3: f64 = 1.732_050_807_568_877_2;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}
