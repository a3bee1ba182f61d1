//! Exact rational angles in `ℝ/ℤ` (measured in turns).

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;

use crate::{Error, Result};

/// `num/den` turns, reduced, with `0 ≤ num < den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    num: i64,
    den: i64,
}

impl RationalAngle {
    pub const ZERO: RationalAngle = RationalAngle { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidAngle("zero denominator".into()));
        }
        Ok(Self::reduce(num as i128, den as i128))
    }

    fn reduce(num: i128, den: i128) -> Self {
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.mod_floor(&den);
        let g = num.gcd(&den);
        RationalAngle {
            num: (num / g) as i64,
            den: (den / g) as i64,
        }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    /// Value in turns, in `[0, 1)`.
    pub fn turns(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `e^{2πiθ}`, evaluated on the representative in `(−½, ½]`.
    pub fn cis(&self) -> Complex64 {
        let mut x = self.turns();
        if x > 0.5 {
            x -= 1.0;
        }
        Complex64::from_polar(1.0, std::f64::consts::TAU * x)
    }

    /// `n·θ mod 1`.
    pub fn times(&self, n: i64) -> Self {
        Self::reduce(self.num as i128 * n as i128, self.den as i128)
    }
}

impl Add for RationalAngle {
    type Output = RationalAngle;

    fn add(self, rhs: Self) -> Self {
        let (a, b) = (self.den as i128, rhs.den as i128);
        Self::reduce(self.num as i128 * b + rhs.num as i128 * a, a * b)
    }
}

impl Neg for RationalAngle {
    type Output = RationalAngle;

    fn neg(self) -> Self {
        Self::reduce(-(self.num as i128), self.den as i128)
    }
}

impl Sub for RationalAngle {
    type Output = RationalAngle;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `"p/q"` or an integer, with an optional sign; decimals are rejected.
impl FromStr for RationalAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let int = |part: &str| -> Result<i64> {
            let part = part.trim();
            part.parse::<i64>().map_err(|_| {
                if part.contains('.') || part.contains('e') {
                    Error::InvalidAngle(format!(
                        "{s:?}: decimal angles are not accepted; write the angle as a fraction of a turn, e.g. 1/5"
                    ))
                } else {
                    Error::InvalidAngle(format!("{s:?} is not a rational literal"))
                }
            })
        };
        match s.split_once('/') {
            Some((n, d)) => RationalAngle::new(int(n)?, int(d)?),
            None => RationalAngle::new(int(s)?, 1),
        }
    }
}
