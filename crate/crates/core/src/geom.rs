//! Triangle triples, their finite Fourier transform, area and shape modulus.

use num_complex::Complex64;

use crate::sphere::SphereValue;
use crate::{Error, Result, EPS, OMEGA, OMEGA2, SQRT3};

/// `3√3/4`, the area of the triangle inscribed in the unit circle.
pub const FOURIER_AREA_FACTOR: f64 = 3.0 * SQRT3 / 4.0;

/// An ordered triple of pairwise distinct points of the complex plane.
///
/// Collinear triples are valid; only coincident vertices are rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleTriple {
    a: Complex64,
    b: Complex64,
    c: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
    Degenerate,
}

/// Coefficients of the quadratic `Ψ(T) = ψ₀ + ψ₁T + ψ₂T²` with
/// `Ψ(1) = a`, `Ψ(ω) = b`, `Ψ(ω²) = c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierVector {
    pub psi0: Complex64,
    pub psi1: Complex64,
    pub psi2: Complex64,
}

/// Largest pairwise distance between the three points.
pub fn vertex_scale(v: &[Complex64; 3]) -> f64 {
    let [a, b, c] = *v;
    (a - b).norm().max((b - c).norm()).max((c - a).norm())
}

/// `|Im((b − a)·conj(c − a))| / 2`.
pub fn shoelace_area(v: &[Complex64; 3]) -> f64 {
    let [a, b, c] = *v;
    ((b - a) * (c - a).conj()).im.abs() / 2.0
}

/// Whether some pair of points coincides within `EPS·scale`.
pub fn has_coincident(v: &[Complex64; 3]) -> bool {
    let [a, b, c] = *v;
    let tol = EPS * vertex_scale(v);
    (a - b).norm() <= tol || (b - c).norm() <= tol || (c - a).norm() <= tol
}

/// Transform of raw vertices, without triple validation.
pub fn fourier_of(v: &[Complex64; 3]) -> FourierVector {
    let [a, b, c] = *v;
    FourierVector {
        psi0: (a + b + c) / 3.0,
        psi1: (a + b * OMEGA2 + c * OMEGA) / 3.0,
        psi2: (a + b * OMEGA + c * OMEGA2) / 3.0,
    }
}

impl TriangleTriple {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Result<Self> {
        if [a, b, c]
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let v = [a, b, c];
        if vertex_scale(&v) == 0.0 || has_coincident(&v) {
            return Err(Error::CoincidentVertices);
        }
        Ok(TriangleTriple { a, b, c })
    }

    pub fn from_vertices(v: [Complex64; 3]) -> Result<Self> {
        Self::new(v[0], v[1], v[2])
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn vertices(&self) -> [Complex64; 3] {
        [self.a, self.b, self.c]
    }

    /// Max pairwise vertex distance; the reference length for tolerances.
    pub fn scale(&self) -> f64 {
        vertex_scale(&self.vertices())
    }

    /// Complex conjugate triple.
    pub fn conj(&self) -> TriangleTriple {
        TriangleTriple {
            a: self.a.conj(),
            b: self.b.conj(),
            c: self.c.conj(),
        }
    }

    /// The image under `z ↦ λz + μ`, `λ ≠ 0`.
    pub fn similar(&self, lambda: Complex64, mu: Complex64) -> Result<TriangleTriple> {
        TriangleTriple::new(
            lambda * self.a + mu,
            lambda * self.b + mu,
            lambda * self.c + mu,
        )
    }

    /// Sign of `Im((a − b)/(c − b))`, with `|Im| ≤ EPS` reported as degenerate.
    pub fn orientation(&self) -> Orientation {
        let z = (self.a - self.b) / (self.c - self.b);
        if z.im.abs() <= EPS {
            Orientation::Degenerate
        } else if z.im > 0.0 {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    }

    pub fn fourier(&self) -> FourierVector {
        fourier_of(&self.vertices())
    }

    pub fn centroid(&self) -> Complex64 {
        (self.a + self.b + self.c) / 3.0
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        shoelace_area(&self.vertices())
    }

    /// Area from the Fourier coefficients, `(3√3/4)·||ψ₁|² − |ψ₂|²|`.
    pub fn area_fourier(&self) -> f64 {
        self.fourier().area()
    }

    /// Shape modulus `φ = (ψ₂/ψ₁)³`.
    ///
    /// Lies in the open unit disk for positive triples, on the unit circle
    /// for collinear ones and outside the closed disk for negative ones.
    /// A negative equilateral triple (`ψ₁ = 0`) has `φ = ∞`.
    pub fn modulus(&self) -> SphereValue {
        let psi = self.fourier();
        match SphereValue::ratio(psi.psi2, psi.psi1, self.scale()) {
            Ok(SphereValue::Finite(z)) => SphereValue::Finite(z * z * z),
            Ok(SphereValue::Infinity) => SphereValue::Infinity,
            // ψ₁ = ψ₂ = 0 forces a = b = c, excluded by construction
            Err(_) => unreachable!("valid triple with ψ₁ = ψ₂ = 0"),
        }
    }

    /// Cotangent of the Brocard angle from the modulus radius
    /// `r = |φ|^{1/3}`: `cot = √3·(1 + r²)/(1 − r²)`.
    ///
    /// Negative triples use `min(r, 1/r)`, i.e. the conjugate positive triple.
    pub fn brocard_cot(&self) -> Result<f64> {
        self.ensure_nondegenerate()?;
        let r = match self.modulus() {
            SphereValue::Infinity => 0.0,
            SphereValue::Finite(phi) => {
                let r = phi.norm().cbrt();
                if r > 1.0 {
                    1.0 / r
                } else {
                    r
                }
            }
        };
        let r2 = r * r;
        Ok(SQRT3 * (1.0 + r2) / (1.0 - r2))
    }

    /// Cotangent of the Brocard angle from side lengths,
    /// `(|AB|² + |BC|² + |CA|²)/(4·area)`.
    pub fn brocard_cot_sides(&self) -> Result<f64> {
        self.ensure_nondegenerate()?;
        let sides = (self.a - self.b).norm_sqr()
            + (self.b - self.c).norm_sqr()
            + (self.c - self.a).norm_sqr();
        Ok(sides / (4.0 * self.area()))
    }

    fn ensure_nondegenerate(&self) -> Result<()> {
        let s = self.scale();
        if self.area() <= EPS * s * s {
            Err(Error::DegenerateTriangle)
        } else {
            Ok(())
        }
    }
}

impl FourierVector {
    /// Evaluates `Ψ` at `1, ω, ω²`.
    pub fn vertices(&self) -> [Complex64; 3] {
        let FourierVector { psi0, psi1, psi2 } = *self;
        [
            psi0 + psi1 + psi2,
            psi0 + psi1 * OMEGA + psi2 * OMEGA2,
            psi0 + psi1 * OMEGA2 + psi2 * OMEGA,
        ]
    }

    pub fn inverse(&self) -> Result<TriangleTriple> {
        TriangleTriple::from_vertices(self.vertices())
    }

    pub fn area(&self) -> f64 {
        FOURIER_AREA_FACTOR * (self.psi1.norm_sqr() - self.psi2.norm_sqr()).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    fn tri(v: [(f64, f64); 3]) -> TriangleTriple {
        TriangleTriple::new(c(v[0].0, v[0].1), c(v[1].0, v[1].1), c(v[2].0, v[2].1)).unwrap()
    }

    fn unit_equilateral() -> TriangleTriple {
        TriangleTriple::new(c(1.0, 0.0), OMEGA, OMEGA2).unwrap()
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn make_triple_validates() {
        assert!(TriangleTriple::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)).is_ok());
        assert!(TriangleTriple::new(c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)).is_ok());
        assert_eq!(
            TriangleTriple::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)),
            Err(Error::CoincidentVertices)
        );
        assert_eq!(
            TriangleTriple::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)),
            Err(Error::CoincidentVertices)
        );
        assert_eq!(
            TriangleTriple::new(c(f64::NAN, 0.0), c(1.0, 0.0), c(0.0, 1.0)),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(
            tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).orientation(),
            Orientation::Positive
        );
        assert_eq!(
            tri([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]).orientation(),
            Orientation::Degenerate
        );
        assert_eq!(
            tri([(0.0, 0.0), (0.0, 1.0), (1.0, 0.0)]).orientation(),
            Orientation::Negative
        );
    }

    #[test]
    fn fourier_of_equilateral_triples() {
        let psi = unit_equilateral().fourier();
        assert!(close(psi.psi0, c(0.0, 0.0), 1e-15));
        assert!(close(psi.psi1, c(1.0, 0.0), 1e-15));
        assert!(close(psi.psi2, c(0.0, 0.0), 1e-15));

        let neg = TriangleTriple::new(c(1.0, 0.0), OMEGA2, OMEGA)
            .unwrap()
            .fourier();
        assert!(close(neg.psi1, c(0.0, 0.0), 1e-15));
        assert!(close(neg.psi2, c(1.0, 0.0), 1e-15));
    }

    #[test]
    fn inverse_fourier_of_coincident_points_fails() {
        let psi = FourierVector {
            psi0: c(1.0, 1.0),
            psi1: c(0.0, 0.0),
            psi2: c(0.0, 0.0),
        };
        assert_eq!(psi.inverse(), Err(Error::CoincidentVertices));
    }

    #[test]
    fn centroid_examples() {
        assert!(close(unit_equilateral().centroid(), c(0.0, 0.0), 1e-15));
        let t = tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        assert!(close(t.centroid(), c(1.0 / 3.0, 1.0 / 3.0), 1e-15));
        assert_eq!(t.centroid(), t.fourier().psi0);
    }

    #[test]
    fn area_examples() {
        let eq = unit_equilateral();
        assert!((eq.area() - 1.299_038_105_676_658).abs() < 1e-12);
        assert!((eq.area_fourier() - 1.299_038_105_676_658).abs() < 1e-12);
        assert_eq!(tri([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]).area(), 0.0);
        let t = tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        assert!((t.area() - 0.5).abs() < 1e-15);
        assert!((t.area_fourier() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn modulus_examples() {
        match unit_equilateral().modulus() {
            SphereValue::Finite(z) => assert!(z.norm() < 1e-15),
            SphereValue::Infinity => panic!("positive equilateral has φ = 0"),
        }
        let neg = TriangleTriple::new(c(1.0, 0.0), OMEGA2, OMEGA).unwrap();
        assert_eq!(neg.modulus(), SphereValue::Infinity);
        let flat = tri([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert!((flat.modulus().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn brocard_of_equilateral_is_sqrt3() {
        let eq = unit_equilateral();
        assert!((eq.brocard_cot().unwrap() - SQRT3).abs() < 1e-12);
        assert!((eq.brocard_cot_sides().unwrap() - SQRT3).abs() < 1e-12);
        let neg = TriangleTriple::new(c(1.0, 0.0), OMEGA2, OMEGA).unwrap();
        assert!((neg.brocard_cot().unwrap() - SQRT3).abs() < 1e-12);
    }

    #[test]
    fn brocard_right_isoceles_matches_side_formula() {
        // sides 1, 1, √2: (1 + 1 + 2)/(4·½) = 2
        let t = tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        assert!((t.brocard_cot_sides().unwrap() - 2.0).abs() < 1e-14);
        assert!((t.brocard_cot().unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn brocard_grows_near_degeneracy_and_fails_on_collinear() {
        let thin = tri([(0.0, 0.0), (1.0, 0.0), (0.5, 1e-4)]);
        assert!(thin.brocard_cot().unwrap() > 1e3);
        let flat = tri([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert_eq!(flat.brocard_cot(), Err(Error::DegenerateTriangle));
        assert_eq!(flat.brocard_cot_sides(), Err(Error::DegenerateTriangle));
    }
}
