//! The operator family `𝕊 = {αI + βJ + γJ² : α + β + γ = 1}` and its charts.
//!
//! `J` is the cyclic shift `(a, b, c) ↦ (b, c, a)`. Every operator is stored
//! by its coefficient triple; `(p, q)` and `(η, η')` are partial charts onto
//! it. `(η, η')` is total and multiplicative, `(p, q)` is neither: the
//! product of two `(p, q)` operators can leave the chart or land on a point
//! where one coordinate is indeterminate.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::geom::{
    fourier_of, has_coincident, shoelace_area, vertex_scale, FourierVector, TriangleTriple,
};
use crate::sphere::SphereValue;
use crate::{c, torus, Error, PqComponent, Result, EPS, OMEGA, OMEGA2};

/// Cevian parameters with `pq ≠ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PqPair {
    p: Complex64,
    q: Complex64,
}

/// The two non-trivial eigenvalues: `ψ(SΔ) = diag(1, η', η)·ψ(Δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EtaPair {
    pub eta: Complex64,
    pub etap: Complex64,
}

/// `αI + βJ + γJ²` with `α + β + γ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirculantOperator {
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
}

/// Result of applying an operator to a triple. The image may collapse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Image {
    vertices: [Complex64; 3],
    source_scale: f64,
    degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub identity: bool,
    pub cyclic_permutation: bool,
    pub regular: bool,
    pub normal: bool,
    pub area_preserving: bool,
    /// `ξ ∈ {0, ∞}`: every positive triple lands in one similarity class
    /// (the positive, resp. negative, equilateral one, or a degenerate image).
    pub collapses_moduli: bool,
    /// `ξ = η/η'`; `None` when `η = η' = 0`.
    pub xi: Option<SphereValue>,
    /// `t = ψ⁻¹(ξ)`; `None` when `ξ` is.
    pub t: Option<SphereValue>,
    pub eta: EtaPair,
}

/// Parameter pairs derived from `(p, q)` by the symmetry relations of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuralIdentities {
    /// `(q, p)`, with `𝕊_{q,p} = J·𝕊[η', η]`.
    pub swap: PqPair,
    /// `𝕊_{p,q} = J·𝕊_{j1}`.
    pub j1: PqPair,
    /// `𝕊_{p,q} = J²·𝕊_{j2}`.
    pub j2: PqPair,
    /// `𝕊_{p,q} + 𝕊_{antipode} = ⅔(I + J + J²)`; eigenvalues `(−η, −η')`.
    pub antipode: PqPair,
}

fn near_zero(z: Complex64, scale: f64) -> bool {
    z.norm() <= EPS * scale
}

fn max_norm(zs: &[Complex64]) -> f64 {
    zs.iter().map(|z| z.norm()).fold(1.0, f64::max)
}

impl PqPair {
    pub fn new(p: Complex64, q: Complex64) -> Result<Self> {
        if ![p.re, p.im, q.re, q.im].iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let pq = p * q;
        if near_zero(Complex64::new(1.0, 0.0) - pq, max_norm(&[pq])) {
            return Err(Error::InvalidParameters(format!(
                "pq = 1 for (p, q) = ({p}, {q})"
            )));
        }
        Ok(PqPair { p, q })
    }

    pub fn real(p: f64, q: f64) -> Result<Self> {
        Self::new(c(p, 0.0), c(q, 0.0))
    }

    pub fn p(&self) -> Complex64 {
        self.p
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    /// `(t, ξ)` on the Riemann sphere; see [`t_xi`].
    pub fn t_xi(&self) -> Result<(SphereValue, SphereValue)> {
        t_xi(self.p, self.q)
    }

    /// `(η, η')` evaluated directly from `(p, q)`:
    /// `η = ((p − q) + (p − 1)(2q − 1)ω)/(1 − pq)`, `η'` with `ω²`.
    pub fn eta_direct(&self) -> EtaPair {
        let (p, q) = (self.p, self.q);
        let one = c(1.0, 0.0);
        let diff = p - q;
        let prod = (p - one) * (2.0 * q - one);
        let den = one - p * q;
        EtaPair {
            eta: (diff + prod * OMEGA) / den,
            etap: (diff + prod * OMEGA2) / den,
        }
    }

    /// Whether `𝕊_{p,q}` is the reflection operator of some triple:
    /// `pq = p + q` (and `pq ≠ 1`, guaranteed by the type).
    pub fn is_reflection_param(&self) -> bool {
        let pq = self.p * self.q;
        near_zero(pq - self.p - self.q, max_norm(&[pq, self.p, self.q]))
    }

    /// `𝕊_{p,q}(Δ)` and `𝕊_{q,p}(Δ)` are point-symmetric for every `Δ`
    /// iff `4pq − 3p − 3q + 2 = 0`.
    pub fn is_point_symmetric_pair(&self) -> bool {
        let (p, q) = (self.p, self.q);
        let v = 4.0 * p * q - 3.0 * p - 3.0 * q + 2.0;
        near_zero(v, max_norm(&[p * q, p, q]))
    }

    /// Condition (ii) of the regularity criterion, evaluated literally:
    /// `p = q ≠ ½`, or `t = (p − 1)(2q − 1)/(p − q)` lies in `ℝ ∪ ℋ⁺`.
    pub fn regularity_geometric(&self) -> bool {
        let (p, q) = (self.p, self.q);
        let scale = max_norm(&[p, q]);
        if near_zero(p - q, scale) {
            return !near_zero(p - c(0.5, 0.0), scale);
        }
        let t = (p - 1.0) * (2.0 * q - 1.0) / (p - q);
        t.im >= -EPS * t.norm().max(1.0)
    }

    /// The swap, `J`/`J²` factorisations and the antipodal pair.
    ///
    /// The antipode is self-checked against `𝕊_{p,q} + 𝕊_{p',q'} = ⅔(I+J+J²)`.
    pub fn structural_identities(&self) -> Result<StructuralIdentities> {
        let (p, q) = (self.p, self.q);
        let one = c(1.0, 0.0);
        let scale = max_norm(&[p * q, p, q]);
        let swap = PqPair::new(q, p)?;

        let s = 2.0 * p * q - p - q;
        if near_zero(s, scale) {
            return Err(Error::DerivedParameterUndefined("2pq − p − q = 0"));
        }
        let derived = |a: Complex64, b: Complex64, what: &'static str| {
            PqPair::new(a, b).map_err(|_| Error::DerivedParameterUndefined(what))
        };
        let j1 = derived(q * (p - one) / s, one - p, "J-factor has pq = 1")?;
        let j2 = derived(one - q, p * (q - one) / s, "J²-factor has pq = 1")?;

        let den_p = one + 3.0 * q - 4.0 * p * q;
        let den_q = one + 3.0 * p - 4.0 * p * q;
        if near_zero(den_p, scale) || near_zero(den_q, scale) {
            return Err(Error::DerivedParameterUndefined(
                "antipode denominator vanishes",
            ));
        }
        let antipode = derived(
            (2.0 - 3.0 * p + p * q) / den_p,
            (2.0 - 3.0 * q + p * q) / den_q,
            "antipode has pq = 1",
        )?;
        let sum = CirculantOperator::from_pq(*self)
            .coefficients()
            .into_iter()
            .zip(CirculantOperator::from_pq(antipode).coefficients())
            .map(|(x, y)| x + y);
        let tol = 1e3 * EPS * scale * scale;
        if sum.into_iter().any(|z| (z - 2.0 / 3.0).norm() > tol) {
            return Err(Error::DerivedParameterUndefined(
                "antipode fails the coefficient-sum check",
            ));
        }
        Ok(StructuralIdentities {
            swap,
            j1,
            j2,
            antipode,
        })
    }
}

/// `t = (p − 1)(2q − 1)/(p − q)` and
/// `ξ = ((p − q) + (p − 1)(2q − 1)ω)/((p − q) + (p − 1)(2q − 1)ω²)`
/// as sphere values. Defined for every `(p, q)` except `(1, 1)` and `(½, ½)`,
/// including `pq = 1`.
pub fn t_xi(p: Complex64, q: Complex64) -> Result<(SphereValue, SphereValue)> {
    let scale = max_norm(&[p, q]).powi(2);
    let diff = p - q;
    let prod = (p - 1.0) * (2.0 * q - 1.0);
    let t = SphereValue::ratio(prod, diff, scale)?;
    let xi = SphereValue::ratio(diff + prod * OMEGA, diff + prod * OMEGA2, scale)?;
    Ok((t, xi))
}

/// Composition in the `(p, q)` chart through `λ₁, λ₂, λ₃`:
/// `p = (λ₂ + 2λ₃)/λ₁`, `q = (λ₁ − 2λ₃)/λ₂`.
pub fn compose_pq(first: PqPair, second: PqPair) -> Result<PqPair> {
    let one = c(1.0, 0.0);
    let (p1, q1, p2, q2) = (first.p, first.q, second.p, second.q);
    let l1 = one - (one - 2.0 * (one - p1) * (one - p2)) * (one - 2.0 * (one - q1) * (one - q2));
    let l2 =
        one - 2.0 * (one - p1 * p2) - (one - 2.0 * (one - p1) * q2) * (one - 2.0 * (one - p2) * q1);
    let l3 = (one - p1 * q1) * (one - p2 * q2);
    let scale = max_norm(&[l1, l2, l3]);
    let chart = |num: Complex64, den: Complex64, which: PqComponent| match SphereValue::ratio(
        num, den, scale,
    ) {
        Ok(SphereValue::Finite(z)) => Ok(z),
        Ok(SphereValue::Infinity) => Err(Error::ChartEscape(which)),
        Err(_) => Err(Error::IndeterminateComponent(which)),
    };
    let p = chart(l2 + 2.0 * l3, l1, PqComponent::P)?;
    let q = chart(l1 - 2.0 * l3, l2, PqComponent::Q)?;
    PqPair::new(p, q)
}

/// The three per-triangle reflection parameters, in the order
/// `(a, c, b)`, `(b, a, c)`, `(c, b, a)`.
pub fn reflection_params(tri: &TriangleTriple) -> Result<[PqPair; 3]> {
    let [a, b, c] = tri.vertices();
    Ok([
        PqPair::new((c - a) / (b - a), (a - c) / (b - c))?,
        PqPair::new((b - c) / (a - c), (c - b) / (a - b))?,
        PqPair::new((a - b) / (c - b), (b - a) / (c - a))?,
    ])
}

impl CirculantOperator {
    pub fn from_coefficients(alpha: Complex64, beta: Complex64, gamma: Complex64) -> Result<Self> {
        let sum = alpha + beta + gamma;
        if (sum - 1.0).norm() > EPS * max_norm(&[alpha, beta, gamma]) {
            return Err(Error::InvalidParameters(format!(
                "α + β + γ = {sum}, expected 1"
            )));
        }
        Ok(CirculantOperator { alpha, beta, gamma })
    }

    pub fn identity() -> Self {
        CirculantOperator {
            alpha: c(1.0, 0.0),
            beta: c(0.0, 0.0),
            gamma: c(0.0, 0.0),
        }
    }

    /// `J : (a, b, c) ↦ (b, c, a)`.
    pub fn shift() -> Self {
        CirculantOperator {
            alpha: c(0.0, 0.0),
            beta: c(1.0, 0.0),
            gamma: c(0.0, 0.0),
        }
    }

    /// `J² : (a, b, c) ↦ (c, a, b)`.
    pub fn shift2() -> Self {
        CirculantOperator {
            alpha: c(0.0, 0.0),
            beta: c(0.0, 0.0),
            gamma: c(1.0, 0.0),
        }
    }

    /// `α = p(1−q)/(1−pq)`, `β = q(1−p)/(1−pq)`, `γ = (1−p)(1−q)/(1−pq)`.
    pub fn from_pq(pq: PqPair) -> Self {
        let (p, q) = (pq.p, pq.q);
        let one = c(1.0, 0.0);
        let den = one - p * q;
        CirculantOperator {
            alpha: p * (one - q) / den,
            beta: q * (one - p) / den,
            gamma: (one - p) * (one - q) / den,
        }
    }

    /// `𝕊[η, η'] = W·diag(1, η', η)·W⁻¹`.
    pub fn from_eta(e: EtaPair) -> Self {
        let EtaPair { eta, etap } = e;
        CirculantOperator {
            alpha: (1.0 + eta + etap) / 3.0,
            beta: (1.0 + OMEGA * eta + OMEGA2 * etap) / 3.0,
            gamma: (1.0 + OMEGA2 * eta + OMEGA * etap) / 3.0,
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn coefficients(&self) -> [Complex64; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    /// Dense 3×3 matrix, row-major.
    pub fn matrix(&self) -> [[Complex64; 3]; 3] {
        let (a, b, g) = (self.alpha, self.beta, self.gamma);
        [[a, b, g], [g, a, b], [b, g, a]]
    }

    /// Largest coefficient difference.
    pub fn distance(&self, other: &CirculantOperator) -> f64 {
        self.coefficients()
            .iter()
            .zip(other.coefficients())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn eta_of(&self) -> EtaPair {
        let (a, b, g) = (self.alpha, self.beta, self.gamma);
        EtaPair {
            eta: a + OMEGA2 * b + OMEGA * g,
            etap: a + OMEGA * b + OMEGA2 * g,
        }
    }

    /// `p(η, η') = (1 + η + η')/(2 − ωη − ω²η')` and
    /// `q(η, η') = (1 + ωη + ω²η')/(2 − η − η')`, each as a separate outcome.
    pub fn pq_components(&self) -> (Result<Complex64>, Result<Complex64>) {
        let EtaPair { eta, etap } = self.eta_of();
        let scale = max_norm(&[eta, etap]);
        let chart =
            |num: Complex64, den: Complex64, which| match SphereValue::ratio(num, den, scale) {
                Ok(SphereValue::Finite(z)) => Ok(z),
                Ok(SphereValue::Infinity) => Err(Error::ChartEscape(which)),
                Err(_) => Err(Error::IndeterminateComponent(which)),
            };
        let p = chart(
            1.0 + eta + etap,
            2.0 - OMEGA * eta - OMEGA2 * etap,
            PqComponent::P,
        );
        let q = chart(
            1.0 + OMEGA * eta + OMEGA2 * etap,
            2.0 - eta - etap,
            PqComponent::Q,
        );
        (p, q)
    }

    pub fn pq_of(&self) -> Result<PqPair> {
        let (p, q) = self.pq_components();
        PqPair::new(p?, q?)
    }

    pub fn apply_vertices(&self, v: &[Complex64; 3]) -> [Complex64; 3] {
        let [a, b, c] = *v;
        let (al, be, ga) = (self.alpha, self.beta, self.gamma);
        [
            al * a + be * b + ga * c,
            al * b + be * c + ga * a,
            al * c + be * a + ga * b,
        ]
    }

    /// `a' = αa + βb + γc` and cyclically.
    pub fn apply(&self, tri: &TriangleTriple) -> Image {
        Image::new(self.apply_vertices(&tri.vertices()), tri.scale())
    }

    /// The same map through the Fourier side: `(ψ₀, ψ₁, ψ₂) ↦ (ψ₀, η'ψ₁, ηψ₂)`.
    pub fn apply_fourier(&self, tri: &TriangleTriple) -> Image {
        let EtaPair { eta, etap } = self.eta_of();
        let psi = fourier_of(&tri.vertices());
        let image = FourierVector {
            psi0: psi.psi0,
            psi1: etap * psi.psi1,
            psi2: eta * psi.psi2,
        };
        Image::new(image.vertices(), tri.scale())
    }

    /// Matrix product `self · other`; the family is commutative.
    pub fn compose(&self, other: &CirculantOperator) -> CirculantOperator {
        let (a1, b1, g1) = (self.alpha, self.beta, self.gamma);
        let (a2, b2, g2) = (other.alpha, other.beta, other.gamma);
        CirculantOperator {
            alpha: a1 * a2 + b1 * g2 + g1 * b2,
            beta: a1 * b2 + b1 * a2 + g1 * g2,
            gamma: a1 * g2 + g1 * a2 + b1 * b2,
        }
    }

    /// `selfⁿ` by repeated squaring.
    pub fn power(&self, mut n: u64) -> CirculantOperator {
        let mut acc = CirculantOperator::identity();
        let mut base = *self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    /// `μ_r(A, B) = (1 − r)A + rB`.
    pub fn weighted_mean(
        r: Complex64,
        a: &CirculantOperator,
        b: &CirculantOperator,
    ) -> CirculantOperator {
        let s = 1.0 - r;
        CirculantOperator {
            alpha: s * a.alpha + r * b.alpha,
            beta: s * a.beta + r * b.beta,
            gamma: s * a.gamma + r * b.gamma,
        }
    }

    pub fn classify(&self) -> Classification {
        let eta = self.eta_of();
        let scale = max_norm(&[eta.eta, eta.etap]);
        let xi = SphereValue::ratio(eta.eta, eta.etap, scale).ok();
        let t = xi.map(|x| x.mobius(torus::PSI_INV));
        let xi_norm = xi.map(SphereValue::norm);
        let regular = xi_norm.is_some_and(|n| n <= 1.0 + EPS);
        let normal = regular && xi_norm.is_some_and(|n| (n - 1.0).abs() <= EPS);
        let area_preserving =
            (eta.eta.norm() - 1.0).abs() <= EPS && (eta.etap.norm() - 1.0).abs() <= EPS;
        let collapses_moduli = match xi {
            Some(SphereValue::Infinity) => true,
            Some(SphereValue::Finite(z)) => z.norm() <= EPS,
            None => false,
        };
        let near = |other: CirculantOperator| self.distance(&other) <= EPS;
        Classification {
            identity: near(CirculantOperator::identity()),
            cyclic_permutation: near(CirculantOperator::shift())
                || near(CirculantOperator::shift2()),
            regular,
            normal,
            area_preserving,
            collapses_moduli,
            xi,
            t,
            eta,
        }
    }
}

impl Image {
    fn new(vertices: [Complex64; 3], source_scale: f64) -> Self {
        let tol = EPS * source_scale;
        let [a, b, c] = vertices;
        let coincident = (a - b).norm() <= tol || (b - c).norm() <= tol || (c - a).norm() <= tol;
        let s = vertex_scale(&vertices);
        let degenerate =
            coincident || has_coincident(&vertices) || shoelace_area(&vertices) <= EPS * s * s;
        Image {
            vertices,
            source_scale,
            degenerate,
        }
    }

    pub fn vertices(&self) -> [Complex64; 3] {
        self.vertices
    }

    /// Collinear or with coincident vertices.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// The image as a triple; fails with [`Error::DegenerateOutput`] when two
    /// vertices coincide (relative to the source scale).
    pub fn to_triple(&self) -> Result<TriangleTriple> {
        let tol = EPS * self.source_scale;
        let [a, b, c] = self.vertices;
        if (a - b).norm() <= tol || (b - c).norm() <= tol || (c - a).norm() <= tol {
            return Err(Error::DegenerateOutput);
        }
        TriangleTriple::from_vertices(self.vertices).map_err(|_| Error::DegenerateOutput)
    }
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn sphere_json(v: Option<SphereValue>) -> Value {
    match v {
        Some(SphereValue::Finite(z)) => complex_json(z),
        Some(SphereValue::Infinity) => Value::String("inf".into()),
        None => Value::Null,
    }
}

fn chart_json(v: &Result<Complex64>) -> Value {
    match v {
        Ok(z) => complex_json(*z),
        Err(Error::ChartEscape(_)) => Value::String("inf".into()),
        Err(_) => Value::Null,
    }
}

impl Classification {
    /// The JSON classification report. `pq` supplies the `(p, q)` fields when
    /// the operator was given in that chart; otherwise they are recovered via
    /// [`CirculantOperator::pq_components`] (`"inf"` on chart escape, `null`
    /// when indeterminate).
    pub fn report(&self, op: &CirculantOperator, pq: Option<PqPair>) -> Value {
        let (p, q) = match pq {
            Some(pq) => (Ok(pq.p), Ok(pq.q)),
            None => op.pq_components(),
        };
        json!({
            "p": chart_json(&p),
            "q": chart_json(&q),
            "eta": complex_json(self.eta.eta),
            "etap": complex_json(self.eta.etap),
            "xi": sphere_json(self.xi),
            "t": sphere_json(self.t),
            "regular": self.regular,
            "normal": self.normal,
            "area_preserving": self.area_preserving,
            "identity": self.identity,
            "cyclic": self.cyclic_permutation,
            "collapses_moduli": self.collapses_moduli,
        })
    }
}
