//! The group `T(ℂ) = ℙ¹ − {ρ, ρ⁻¹}` with the law pulled back from `𝔾_m`
//! through `ψ(t) = (1 + tω)/(1 + tω²)`.
//!
//! Addition and integer multiplication run through the `ψ` chart; the closed
//! rational formulas are kept as independent cross-checks.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::sphere::SphereValue;
use crate::{c, Error, Result, EPS, OMEGA, OMEGA2, RHO, RHO_INV};

/// `ψ` as a Möbius matrix `(a, b, c, d)`: `t ↦ (ωt + 1)/(ω²t + 1)`.
pub const PSI: [Complex64; 4] = [
    OMEGA,
    Complex64::new(1.0, 0.0),
    OMEGA2,
    Complex64::new(1.0, 0.0),
];

/// `ψ⁻¹ : ξ ↦ (1 − ξ)/(ω²ξ − ω)`.
pub const PSI_INV: [Complex64; 4] = [
    Complex64::new(-1.0, 0.0),
    Complex64::new(1.0, 0.0),
    OMEGA2,
    Complex64::new(0.5, -0.866_025_403_784_438_6),
];

/// A point of `T(ℂ)`; `t = ∞` is allowed (`ψ(∞) = ω²`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusElement {
    t: SphereValue,
}

/// A point of the conic `u² + uv + v² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicPoint {
    pub u: Complex64,
    pub v: Complex64,
}

impl TorusElement {
    pub const ZERO: TorusElement = TorusElement {
        t: SphereValue::ZERO,
    };
    pub const INFINITY: TorusElement = TorusElement {
        t: SphereValue::Infinity,
    };

    pub fn new(t: SphereValue) -> Result<Self> {
        if let SphereValue::Finite(z) = t {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite);
            }
            if (z - RHO).norm() <= EPS || (z - RHO_INV).norm() <= EPS {
                return Err(Error::ExcludedPoint);
            }
        }
        Ok(TorusElement { t })
    }

    pub fn finite(t: Complex64) -> Result<Self> {
        Self::new(SphereValue::Finite(t))
    }

    pub fn t(&self) -> SphereValue {
        self.t
    }

    /// `ψ(t) ∈ 𝔾_m`.
    pub fn psi(&self) -> Complex64 {
        self.t.mobius(PSI).finite().expect("ψ is finite off ρ⁻¹")
    }

    /// `ψ⁻¹(ξ)`; `ξ ∈ {0, ∞}` would give `ρ` or `ρ⁻¹` and is rejected.
    pub fn psi_inv(xi: SphereValue) -> Result<Self> {
        match xi {
            SphereValue::Infinity => Err(Error::ExcludedPoint),
            SphereValue::Finite(z) if z.norm() <= EPS => Err(Error::ExcludedPoint),
            _ => TorusElement::new(xi.mobius(PSI_INV)),
        }
    }

    fn from_psi(xi: Complex64) -> Self {
        // ξ ∈ 𝔾_m never pulls back to ρ^{±1}
        TorusElement {
            t: SphereValue::Finite(xi).mobius(PSI_INV),
        }
    }

    /// `t [+] t'`.
    pub fn add(&self, other: &TorusElement) -> TorusElement {
        Self::from_psi(self.psi() * other.psi())
    }

    /// The `[+]`-inverse.
    pub fn neg(&self) -> TorusElement {
        Self::from_psi(self.psi().inv())
    }

    /// `[N]·t`.
    pub fn nmul(&self, n: i32) -> TorusElement {
        Self::from_psi(self.psi().powi(n))
    }

    /// Chordal distance between the `t` values.
    pub fn distance(&self, other: &TorusElement) -> f64 {
        self.t.chordal_distance(other.t)
    }

    pub fn to_conic(&self) -> ConicPoint {
        match self.t {
            SphereValue::Infinity => ConicPoint {
                u: c(-1.0, 0.0),
                v: c(1.0, 0.0),
            },
            SphereValue::Finite(t) => {
                let d = t * t - t + 1.0;
                ConicPoint {
                    u: (1.0 - t * t) / d,
                    v: t * (t - 2.0) / d,
                }
            }
        }
    }
}

/// `(t + t' − tt')/(1 − tt')`, extended to `t = ∞` by limits.
pub fn add_formula(a: SphereValue, b: SphereValue) -> SphereValue {
    match (a, b) {
        (SphereValue::Infinity, SphereValue::Infinity) => SphereValue::ONE,
        (SphereValue::Infinity, SphereValue::Finite(t))
        | (SphereValue::Finite(t), SphereValue::Infinity) => {
            SphereValue::Finite(t).mobius([c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
        }
        (SphereValue::Finite(t), SphereValue::Finite(s)) => {
            let num = t + s - t * s;
            let den = 1.0 - t * s;
            let scale = (t * s).norm().max(1.0);
            SphereValue::ratio(num, den, scale).expect("0/0 only at t, t' ∈ {ρ, ρ⁻¹}")
        }
    }
}

/// `((1 + ωt)^N − (1 + ω⁻¹t)^N)/(ρ(1 + ωt)^N − ρ⁻¹(1 + ω⁻¹t)^N)`,
/// extended to `t = ∞` by leading terms.
pub fn nmul_formula(n: i32, t: SphereValue) -> SphereValue {
    let (x, y, scale) = match t {
        SphereValue::Infinity => (OMEGA.powi(n), OMEGA2.powi(n), 1.0),
        SphereValue::Finite(t) => {
            let x = (1.0 + OMEGA * t).powi(n);
            let y = (1.0 + OMEGA2 * t).powi(n);
            (x, y, x.norm().max(y.norm()))
        }
    };
    SphereValue::ratio(x - y, RHO * x - RHO_INV * y, scale).expect("ψ(t) ∉ {0, ∞}")
}

/// The `N` distinct `N`-division points
/// `t_k = sin(πk/N)/sin(π(k/N + ⅓))`, `k = 0, …, N−1`.
///
/// For `3 | N` the point `k = 2N/3` is `t = ∞`.
pub fn division_points(n: u32) -> Vec<TorusElement> {
    assert!(n >= 1, "division_points needs N ≥ 1");
    let n = n as u64;
    (0..n)
        .map(|k| {
            // k/N + 1/3 ∈ ℤ  ⇔  3N | 3k + N
            if (3 * k + n).is_multiple_of(3 * n) {
                return TorusElement::INFINITY;
            }
            let kn = k as f64 / n as f64;
            let t = (PI * kn).sin() / (PI * (kn + 1.0 / 3.0)).sin();
            TorusElement::finite(c(t, 0.0)).expect("real t never equals ρ^{±1}")
        })
        .collect()
}

impl ConicPoint {
    pub fn new(u: Complex64, v: Complex64) -> Result<Self> {
        let p = ConicPoint { u, v };
        if p.residual() > 1e-10 * (1.0 + u.norm_sqr() + v.norm_sqr()) {
            return Err(Error::NotOnConic);
        }
        Ok(p)
    }

    /// `|u² + uv + v² − 1|`.
    pub fn residual(&self) -> f64 {
        let ConicPoint { u, v } = *self;
        (u * u + u * v + v * v - 1.0).norm()
    }

    /// `t = −v/(1 + u)`, the inverse of [`TorusElement::to_conic`].
    ///
    /// The only hole on the conic is `(−1, 0)`, the image of `t = 2`.
    pub fn to_torus(&self) -> Result<TorusElement> {
        let scale = 1.0 + self.u.norm() + self.v.norm();
        match SphereValue::ratio(-self.v, 1.0 + self.u, scale) {
            Ok(t) => TorusElement::new(t),
            Err(_) => Err(Error::ConicChartFailure),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(re: f64, im: f64) -> TorusElement {
        TorusElement::finite(c(re, im)).unwrap()
    }

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol, "{a} vs {b}");
    }

    #[test]
    fn psi_special_values() {
        assert_close(TorusElement::ZERO.psi(), c(1.0, 0.0), 1e-15);
        assert_close(TorusElement::INFINITY.psi(), OMEGA2, 1e-15);
        assert!(SphereValue::Finite(RHO).mobius(PSI).norm() < 1e-15);
        assert_eq!(
            SphereValue::Finite(RHO_INV).mobius(PSI),
            SphereValue::Infinity
        );
    }

    #[test]
    fn psi_inv_examples() {
        let t = TorusElement::psi_inv(c(-1.0, 0.0).into()).unwrap();
        assert_close(t.t().finite().unwrap(), c(2.0, 0.0), 1e-14);
        assert_eq!(
            TorusElement::psi_inv(SphereValue::ZERO),
            Err(Error::ExcludedPoint)
        );
        assert_eq!(
            TorusElement::psi_inv(SphereValue::Infinity),
            Err(Error::ExcludedPoint)
        );
        assert_eq!(
            TorusElement::psi_inv(OMEGA2.into()).unwrap(),
            TorusElement::INFINITY
        );
    }

    #[test]
    fn excluded_points_are_rejected() {
        assert_eq!(TorusElement::finite(RHO), Err(Error::ExcludedPoint));
        assert_eq!(TorusElement::finite(RHO_INV), Err(Error::ExcludedPoint));
    }

    #[test]
    fn add_examples() {
        let t = el(0.3, -1.2);
        assert!(t.add(&TorusElement::ZERO).distance(&t) < 1e-15);
        assert!(
            el(2.0, 0.0)
                .add(&el(2.0, 0.0))
                .distance(&TorusElement::ZERO)
                < 1e-15
        );
        assert!(t.add(&t.neg()).distance(&TorusElement::ZERO) < 1e-15);
        // ∞ [+] ∞ = 1
        assert!(
            TorusElement::INFINITY
                .add(&TorusElement::INFINITY)
                .distance(&el(1.0, 0.0))
                < 1e-15
        );
    }

    #[test]
    fn add_chart_matches_formula() {
        let pts = [
            el(0.3, -1.2),
            el(-2.0, 0.4),
            el(5.0, 5.0),
            TorusElement::INFINITY,
            el(2.0, 0.0),
        ];
        for a in &pts {
            for b in &pts {
                let formula = add_formula(a.t(), b.t());
                assert!(
                    a.add(b).t().chordal_distance(formula) < 1e-13,
                    "{a:?} {b:?}"
                );
            }
        }
    }

    #[test]
    fn nmul_examples() {
        let t = el(0.7, 0.9);
        assert!(t.nmul(1).distance(&t) < 1e-15);
        assert!(el(2.0, 0.0).nmul(2).distance(&TorusElement::ZERO) < 1e-15);
        assert!(t.nmul(-1).distance(&t.neg()) < 1e-15);
        assert!(t.nmul(0).distance(&TorusElement::ZERO) < 1e-15);
        let mut acc = TorusElement::ZERO;
        for n in 1..=12 {
            acc = acc.add(&t);
            assert!(t.nmul(n).distance(&acc) < 1e-10);
            assert!(nmul_formula(n, t.t()).chordal_distance(acc.t()) < 1e-10);
        }
        assert!(
            nmul_formula(3, SphereValue::Infinity)
                .chordal_distance(TorusElement::INFINITY.nmul(3).t())
                < 1e-14
        );
    }

    #[test]
    fn division_point_examples() {
        let two = division_points(2);
        assert_eq!(two.len(), 2);
        assert!(two[0].distance(&TorusElement::ZERO) < 1e-15);
        assert!(two[1].distance(&el(2.0, 0.0)) < 1e-14);
        assert_eq!(division_points(1), vec![TorusElement::ZERO]);
        let three = division_points(3);
        assert!(three[1].distance(&el(1.0, 0.0)) < 1e-14);
        assert_eq!(three[2], TorusElement::INFINITY);
    }

    #[test]
    fn division_points_are_n_torsion() {
        for n in 1..=12u32 {
            let pts = division_points(n);
            assert_eq!(pts.len(), n as usize);
            for p in &pts {
                assert!((p.psi().powi(n as i32) - 1.0).norm() < 1e-10);
                assert!(p.nmul(n as i32).distance(&TorusElement::ZERO) < 1e-10);
            }
        }
    }

    #[test]
    fn conic_examples() {
        let p = el(1.0, 0.0).to_conic();
        assert_close(p.u, c(0.0, 0.0), 1e-15);
        assert_close(p.v, c(-1.0, 0.0), 1e-15);
        assert!(p.to_torus().unwrap().distance(&el(1.0, 0.0)) < 1e-15);

        let z = TorusElement::ZERO.to_conic();
        assert_close(z.u, c(1.0, 0.0), 1e-15);
        assert_close(z.v, c(0.0, 0.0), 1e-15);
        assert!(z.to_torus().unwrap().distance(&TorusElement::ZERO) < 1e-15);

        let inf = TorusElement::INFINITY.to_conic();
        assert!(inf.residual() < 1e-15);
        assert_eq!(inf.to_torus().unwrap(), TorusElement::INFINITY);
    }

    #[test]
    fn conic_chart_hole_at_t_two() {
        let p = el(2.0, 0.0).to_conic();
        assert_close(p.u, c(-1.0, 0.0), 1e-15);
        assert_close(p.v, c(0.0, 0.0), 1e-15);
        assert_eq!(p.to_torus(), Err(Error::ConicChartFailure));
    }

    #[test]
    fn conic_inverse_is_not_the_reciprocal_formula() {
        // t = 3 ↦ (−8/7, 3/7); −(1 + u)/v would give 1/3
        let p = el(3.0, 0.0).to_conic();
        assert_close(p.u, c(-8.0 / 7.0, 0.0), 1e-15);
        assert_close(p.v, c(3.0 / 7.0, 0.0), 1e-15);
        assert_close(-(1.0 + p.u) / p.v, c(1.0 / 3.0, 0.0), 1e-14);
        assert!(p.to_torus().unwrap().distance(&el(3.0, 0.0)) < 1e-14);
    }

    #[test]
    fn off_conic_points_are_rejected() {
        assert_eq!(
            ConicPoint::new(c(1.0, 0.0), c(1.0, 0.0)),
            Err(Error::NotOnConic)
        );
        assert!(ConicPoint::new(c(0.0, 0.0), c(1.0, 0.0)).is_ok());
    }
}
