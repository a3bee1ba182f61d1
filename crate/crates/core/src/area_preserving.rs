//! Area-preserving normal operators and the torus chart `𝒯 = S¹ × S¹`.
//!
//! On `𝒯` the operator `𝕊[η, η']` with `|η| = |η'| = 1` is described by
//! `x = η/η'` (the moduli rotation `ξ`) and `y = η`. The rational functions
//! `𝐩(x, y) = p(y, y/x)` and `𝐪(x, y) = q(y, y/x)` recover the cevian
//! parameters, and satisfy a handful of functional equations that are exposed
//! here as residuals.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;

use crate::angle::RationalAngle;
use crate::geom::TriangleTriple;
use crate::operators::{CirculantOperator, EtaPair};
use crate::sphere::SphereValue;
use crate::{c, Error, Result, EPS, OMEGA, OMEGA2, RHO, RHO_INV, SQRT3};

/// A point `(x, y)` with `|x| = |y| = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    pub x: Complex64,
    pub y: Complex64,
}

impl TorusPoint {
    pub fn new(x: Complex64, y: Complex64) -> Result<Self> {
        if (x.norm() - 1.0).abs() > EPS || (y.norm() - 1.0).abs() > EPS {
            return Err(Error::NotOnTorus);
        }
        Ok(TorusPoint { x, y })
    }

    /// `(e^{iθ}, e^{iφ})`.
    pub fn from_radians(theta: f64, phi: f64) -> Self {
        TorusPoint {
            x: Complex64::from_polar(1.0, theta),
            y: Complex64::from_polar(1.0, phi),
        }
    }
}

fn pole_ratio(num: Complex64, den: Complex64, scale: f64, what: &'static str) -> Result<Complex64> {
    if den.norm() <= EPS * scale {
        Err(Error::PoleAtInput(what))
    } else {
        Ok(num / den)
    }
}

fn scale_of(x: Complex64, y: Complex64) -> f64 {
    (x * y).norm().max(x.norm()).max(y.norm()).max(1.0)
}

/// `𝐩(x, y) = ρ·(xy + x + y)/(xy + 2ρx + ρ²y)`.
pub fn bp(x: Complex64, y: Complex64) -> Result<Complex64> {
    let num = RHO * (x * y + x + y);
    let den = x * y + 2.0 * RHO * x + RHO * RHO * y;
    pole_ratio(num, den, scale_of(x, y), "𝐩")
}

/// `𝐪(x, y) = ρ⁻¹·(xy − ρx − ρ⁻¹y)/(xy − 2x + y)`.
pub fn bq(x: Complex64, y: Complex64) -> Result<Complex64> {
    let num = RHO_INV * (x * y - RHO * x - RHO_INV * y);
    let den = x * y - 2.0 * x + y;
    pole_ratio(num, den, scale_of(x, y), "𝐪")
}

/// `R(x, y) = (2xy − x − y)/(√3(y − x))`; indeterminate at `x = y ∈ {0, 1}`.
pub fn r_value(x: Complex64, y: Complex64) -> Result<SphereValue> {
    SphereValue::ratio(2.0 * x * y - x - y, SQRT3 * (y - x), scale_of(x, y))
}

/// `Q(x, y) = i(𝐪(x, y) − ½)`, infinite at the poles of `𝐪`.
pub fn q_value(x: Complex64, y: Complex64) -> SphereValue {
    match bq(x, y) {
        Ok(v) => SphereValue::Finite(Complex64::i() * (v - 0.5)),
        Err(_) => SphereValue::Infinity,
    }
}

/// `½(√3R − 1)/(R + √3)` on the sphere.
pub fn q_from_r(r: SphereValue) -> SphereValue {
    r.mobius([
        c(SQRT3 / 2.0, 0.0),
        c(-0.5, 0.0),
        c(1.0, 0.0),
        c(SQRT3, 0.0),
    ])
}

fn sphere_residual(a: SphereValue, b: SphereValue) -> f64 {
    match (a, b) {
        (SphereValue::Finite(u), SphereValue::Finite(v)) => (u - v).norm(),
        _ => a.chordal_distance(b),
    }
}

/// `|LHS − RHS|` of each functional equation at one torus point.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalResiduals {
    /// `𝐩(x, y) = 𝐪(ωx⁻¹, ω²x⁻¹y)`
    pub p_via_q: Result<f64>,
    /// `𝐪(x, y) = 𝐩(ωx⁻¹, ω²x⁻¹y)`
    pub q_via_p: Result<f64>,
    /// `𝐩(y, x) = 𝐩(𝐪 − 1)/(ρ(𝐩 − 1)𝐪 − (𝐩 − 𝐪))`
    pub p_swap: Result<f64>,
    /// `𝐪(y, x) = (𝐪 − 1)/((1 + ρ)𝐪 − 1)`
    pub q_swap: Result<f64>,
    /// `𝐩(x, y) + conj 𝐩(ω²x⁻¹, ωy⁻¹) = 1`
    pub p_reflect: Result<f64>,
    /// `𝐪(x, y) + conj 𝐪(x⁻¹, y⁻¹) = 1`
    pub q_reflect: Result<f64>,
    /// `R(x, y) + R(y, x) = 0`
    pub r_antisymmetry: Result<f64>,
    /// `R(x⁻¹, y⁻¹) = conj R(x, y)`
    pub r_conjugation: Result<f64>,
    /// `Q = ½(√3R − 1)/(R + √3)`
    pub q_r_bridge: Result<f64>,
}

impl FunctionalResiduals {
    pub fn all(&self) -> [&Result<f64>; 9] {
        [
            &self.p_via_q,
            &self.q_via_p,
            &self.p_swap,
            &self.q_swap,
            &self.p_reflect,
            &self.q_reflect,
            &self.r_antisymmetry,
            &self.r_conjugation,
            &self.q_r_bridge,
        ]
    }

    /// Largest residual, or the first pole encountered.
    pub fn max(&self) -> Result<f64> {
        self.all()
            .into_iter()
            .try_fold(0.0_f64, |m, r| r.clone().map(|v| m.max(v)))
    }
}

pub fn functional_equation_residuals(pt: TorusPoint) -> FunctionalResiduals {
    let TorusPoint { x, y } = pt;
    let (xi, yi) = (x.inv(), y.inv());
    let one = c(1.0, 0.0);

    let p_via_q = bp(x, y).and_then(|p| Ok((p - bq(OMEGA * xi, OMEGA2 * xi * y)?).norm()));
    let q_via_p = bq(x, y).and_then(|q| Ok((q - bp(OMEGA * xi, OMEGA2 * xi * y)?).norm()));
    let p_swap = (|| {
        let (p, q) = (bp(x, y)?, bq(x, y)?);
        let rhs = pole_ratio(p * (q - one), RHO * (p - one) * q - (p - q), 1.0, "𝐩 swap")?;
        Ok((bp(y, x)? - rhs).norm())
    })();
    let q_swap = (|| {
        let q = bq(x, y)?;
        let rhs = pole_ratio(q - one, (one + RHO) * q - one, 1.0, "𝐪 swap")?;
        Ok((bq(y, x)? - rhs).norm())
    })();
    let p_reflect =
        bp(x, y).and_then(|p| Ok((p + bp(OMEGA2 * xi, OMEGA * yi)?.conj() - one).norm()));
    let q_reflect = bq(x, y).and_then(|q| Ok((q + bq(xi, yi)?.conj() - one).norm()));

    let r = r_value(x, y).and_then(|v| v.finite().ok_or(Error::PoleAtInput("R")));
    let r_antisymmetry = r.clone().and_then(|r| {
        let rs = r_value(y, x)?.finite().ok_or(Error::PoleAtInput("R"))?;
        Ok((r + rs).norm())
    });
    let r_conjugation = r.and_then(|r| {
        let ri = r_value(xi, yi)?.finite().ok_or(Error::PoleAtInput("R"))?;
        Ok((ri - r.conj()).norm())
    });
    let q_r_bridge = r_value(x, y)
        .map_err(|_| Error::PoleAtInput("R"))
        .map(|r| sphere_residual(q_value(x, y), q_from_r(r)));

    FunctionalResiduals {
        p_via_q,
        q_via_p,
        p_swap,
        q_swap,
        p_reflect,
        q_reflect,
        r_antisymmetry,
        r_conjugation,
        q_r_bridge,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TorusSymmetry {
    Swap,
    Invert,
}

/// Moves `(θ, φ)` into `𝒯₀ = {0 < θ < 2π, 0 ≤ φ ≤ θ, θ + φ ≤ 2π}` by the swap
/// `(θ, φ) ↦ (φ, θ)` and the inversion `(θ, φ) ↦ (−θ, −φ)`.
///
/// Returns the representative and the symmetries applied, in order.
fn reduce_to_fundamental(theta: f64, phi: f64) -> ((f64, f64), Vec<TorusSymmetry>) {
    let wrap = |a: f64| a.rem_euclid(TAU);
    let (mut t, mut p) = (wrap(theta), wrap(phi));
    let mut applied = Vec::new();
    if p > t {
        std::mem::swap(&mut t, &mut p);
        applied.push(TorusSymmetry::Swap);
    }
    if t + p > TAU {
        t = wrap(TAU - t);
        p = wrap(TAU - p);
        applied.push(TorusSymmetry::Invert);
        if p > t {
            std::mem::swap(&mut t, &mut p);
            applied.push(TorusSymmetry::Swap);
        }
    }
    ((t, p), applied)
}

/// `𝐪(e^{iθ}, e^{iφ})` reconstructed from its value on the fundamental region
/// `𝒯₀` through the swap and reflection equations of `𝐪`.
pub fn bq_from_fundamental_region(theta: f64, phi: f64) -> Result<Complex64> {
    let ((t0, p0), applied) = reduce_to_fundamental(theta, phi);
    let base = TorusPoint::from_radians(t0, p0);
    let mut v = bq(base.x, base.y)?;
    let one = c(1.0, 0.0);
    for sym in applied.into_iter().rev() {
        v = match sym {
            TorusSymmetry::Swap => pole_ratio(v - one, (one + RHO) * v - one, 1.0, "𝐪 swap")?,
            TorusSymmetry::Invert => one - v.conj(),
        };
    }
    Ok(v)
}

/// Whether `(θ, φ)` (radians, already in `[0, 2π)`) lies in `𝒯₀`.
pub fn in_fundamental_region(theta: f64, phi: f64) -> bool {
    theta > 0.0 && theta < TAU && phi >= 0.0 && phi <= theta && theta + phi <= TAU
}

/// `𝒮_ap(θx, θy, θy') = 𝕊[e^{2πiθy}, e^{2πiθy'}]` with `θx = θy − θy'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ApOperator {
    theta_x: RationalAngle,
    theta_y: RationalAngle,
    theta_yp: RationalAngle,
}

impl ApOperator {
    pub fn new(
        theta_x: RationalAngle,
        theta_y: RationalAngle,
        theta_yp: RationalAngle,
    ) -> Result<Self> {
        if theta_y - theta_yp != theta_x {
            return Err(Error::AngleConstraintViolated);
        }
        Ok(ApOperator {
            theta_x,
            theta_y,
            theta_yp,
        })
    }

    /// Completes `θy' = θy − θx`.
    pub fn from_xy(theta_x: RationalAngle, theta_y: RationalAngle) -> Self {
        ApOperator {
            theta_x,
            theta_y,
            theta_yp: theta_y - theta_x,
        }
    }

    pub fn theta_x(&self) -> RationalAngle {
        self.theta_x
    }

    pub fn theta_y(&self) -> RationalAngle {
        self.theta_y
    }

    pub fn theta_yp(&self) -> RationalAngle {
        self.theta_yp
    }

    pub fn eta_pair(&self) -> EtaPair {
        EtaPair {
            eta: self.theta_y.cis(),
            etap: self.theta_yp.cis(),
        }
    }

    pub fn to_operator(&self) -> CirculantOperator {
        CirculantOperator::from_eta(self.eta_pair())
    }

    /// `(x, y) = (e^{2πiθx}, e^{2πiθy})`.
    pub fn torus_point(&self) -> TorusPoint {
        TorusPoint {
            x: self.theta_x.cis(),
            y: self.theta_y.cis(),
        }
    }

    /// The `n`-th power, with the angles multiplied exactly.
    pub fn power(&self, n: i64) -> ApOperator {
        ApOperator {
            theta_x: self.theta_x.times(n),
            theta_y: self.theta_y.times(n),
            theta_yp: self.theta_yp.times(n),
        }
    }

    /// Least `N ≥ 1` with `η^N = η'^N = 1`: `lcm(den θy, den θy')`.
    pub fn period(&self) -> u64 {
        self.theta_y.denom().lcm(&self.theta_yp.denom()) as u64
    }

    /// `[Δ, SΔ, S²Δ, …]`, `steps + 1` triples, each obtained by applying the
    /// operator to the previous one.
    pub fn orbit(&self, start: &TriangleTriple, steps: usize) -> Result<Vec<TriangleTriple>> {
        let op = self.to_operator();
        let mut out = Vec::with_capacity(steps + 1);
        out.push(*start);
        for _ in 0..steps {
            let next = op.apply(out.last().expect("non-empty")).to_triple()?;
            out.push(next);
        }
        Ok(out)
    }
}

/// Largest vertex displacement between two triples, relative to the scale of `a`.
pub fn relative_distance(a: &TriangleTriple, b: &TriangleTriple) -> f64 {
    a.vertices()
        .iter()
        .zip(b.vertices())
        .map(|(u, v)| (u - v).norm())
        .fold(0.0, f64::max)
        / a.scale()
}

/// First `k ≥ 1` with `orbit[k]` within `tol` (relative) of `orbit[0]`.
pub fn first_return(orbit: &[TriangleTriple], tol: f64) -> Option<usize> {
    let start = orbit.first()?;
    orbit
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, t)| relative_distance(start, t) <= tol)
        .map(|(k, _)| k)
}
