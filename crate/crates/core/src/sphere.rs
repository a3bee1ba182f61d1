//! Points of the Riemann sphere `ℂ ∪ {∞}`.

use std::fmt;

use num_complex::Complex64;

use crate::{Error, Result, EPS};

/// A value on the Riemann sphere. `Infinity` compares equal only to itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SphereValue {
    Finite(Complex64),
    Infinity,
}

impl SphereValue {
    pub const ZERO: SphereValue = SphereValue::Finite(Complex64::new(0.0, 0.0));
    pub const ONE: SphereValue = SphereValue::Finite(Complex64::new(1.0, 0.0));

    /// `num / den` with banded zero tests: `|z| ≤ EPS·scale` counts as zero.
    ///
    /// A vanishing denominator gives `Infinity` unless the numerator vanishes
    /// as well, which is reported as [`Error::IndeterminateValue`].
    pub fn ratio(num: Complex64, den: Complex64, scale: f64) -> Result<SphereValue> {
        let tol = EPS * scale;
        if den.norm() <= tol {
            if num.norm() <= tol {
                Err(Error::IndeterminateValue)
            } else {
                Ok(SphereValue::Infinity)
            }
        } else {
            Ok(SphereValue::Finite(num / den))
        }
    }

    pub fn finite(self) -> Option<Complex64> {
        match self {
            SphereValue::Finite(z) => Some(z),
            SphereValue::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, SphereValue::Infinity)
    }

    /// Modulus, with `|∞| = +∞`.
    pub fn norm(self) -> f64 {
        match self {
            SphereValue::Finite(z) => z.norm(),
            SphereValue::Infinity => f64::INFINITY,
        }
    }

    pub fn conj(self) -> SphereValue {
        match self {
            SphereValue::Finite(z) => SphereValue::Finite(z.conj()),
            SphereValue::Infinity => SphereValue::Infinity,
        }
    }

    /// Chordal distance on the unit-diameter Riemann sphere, in `[0, 2]`.
    pub fn chordal_distance(self, other: SphereValue) -> f64 {
        match (self, other) {
            (SphereValue::Infinity, SphereValue::Infinity) => 0.0,
            (SphereValue::Finite(z), SphereValue::Infinity)
            | (SphereValue::Infinity, SphereValue::Finite(z)) => 2.0 / (1.0 + z.norm_sqr()).sqrt(),
            (SphereValue::Finite(z), SphereValue::Finite(w)) => {
                2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()) * (1.0 + w.norm_sqr())).sqrt()
            }
        }
    }

    /// Applies the linear fractional map `z ↦ (az + b)/(cz + d)`, `ad − bc ≠ 0`.
    pub fn mobius(self, m: [Complex64; 4]) -> SphereValue {
        let [a, b, c, d] = m;
        match self {
            SphereValue::Infinity => {
                if c.norm() <= EPS * a.norm() {
                    SphereValue::Infinity
                } else {
                    SphereValue::Finite(a / c)
                }
            }
            SphereValue::Finite(z) => {
                let num = a * z + b;
                let den = c * z + d;
                let scale = (c.norm() * z.norm()).max(d.norm());
                if den.norm() <= EPS * scale {
                    SphereValue::Infinity
                } else {
                    SphereValue::Finite(num / den)
                }
            }
        }
    }
}

impl From<Complex64> for SphereValue {
    fn from(z: Complex64) -> Self {
        SphereValue::Finite(z)
    }
}

impl fmt::Display for SphereValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphereValue::Finite(z) => write!(f, "{z}"),
            SphereValue::Infinity => f.write_str("inf"),
        }
    }
}
