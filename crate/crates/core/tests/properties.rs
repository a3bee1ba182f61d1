use num_complex::Complex64;
use proptest::prelude::*;

use triop::geom::Orientation;
use triop::operators::compose_pq;
use triop::torus::TorusElement;
use triop::{CirculantOperator, EtaPair, PqPair, SphereValue, TriangleTriple};

fn complex(r: f64) -> impl Strategy<Value = Complex64> {
    (-r..r, -r..r).prop_map(|(a, b)| Complex64::new(a, b))
}

fn triple() -> impl Strategy<Value = TriangleTriple> {
    (complex(10.0), complex(10.0), complex(10.0)).prop_filter_map("degenerate", |(a, b, c)| {
        let t = TriangleTriple::new(a, b, c).ok()?;
        (t.area() > 1e-3 * t.scale() * t.scale()).then_some(t)
    })
}

fn pq_pair() -> impl Strategy<Value = PqPair> {
    (complex(2.0), complex(2.0)).prop_filter_map("pq near 1", |(p, q)| {
        ((1.0 - p * q).norm() > 0.1).then(|| PqPair::new(p, q).unwrap())
    })
}

fn eta_op() -> impl Strategy<Value = CirculantOperator> {
    (complex(2.0), complex(2.0))
        .prop_map(|(eta, etap)| CirculantOperator::from_eta(EtaPair { eta, etap }))
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

proptest! {
    #[test]
    fn fourier_roundtrip(t in triple()) {
        let back = t.fourier().inverse().unwrap();
        for (u, v) in t.vertices().into_iter().zip(back.vertices()) {
            prop_assert!(close(u, v, 1e-12 * t.scale()));
        }
    }

    #[test]
    fn modulus_is_similarity_invariant(t in triple(), lambda in complex(5.0), mu in complex(5.0)) {
        prop_assume!(lambda.norm() > 0.1);
        let s = t.similar(lambda, mu).unwrap();
        prop_assert!(t.modulus().chordal_distance(s.modulus()) < 1e-10);
    }

    #[test]
    fn orientation_matches_modulus(t in triple()) {
        let r = t.modulus().norm();
        match t.orientation() {
            Orientation::Positive => prop_assert!(r < 1.0),
            Orientation::Negative => prop_assert!(r > 1.0),
            Orientation::Degenerate => prop_assert!((r - 1.0).abs() < 1e-6),
        }
    }

    #[test]
    fn conjugate_triple_has_conjugate_inverse_modulus(t in triple()) {
        let phi = t.modulus();
        let phi_bar = t.conj().modulus();
        let expected = SphereValue::ratio(Complex64::new(1.0, 0.0), phi.conj().finite().unwrap(), 1.0).unwrap();
        prop_assert!(phi_bar.chordal_distance(expected) < 1e-10);
    }

    #[test]
    fn compose_is_associative_and_commutative(a in eta_op(), b in eta_op(), c in eta_op()) {
        let left = a.compose(&b).compose(&c);
        let right = a.compose(&b.compose(&c));
        prop_assert!(left.distance(&right) < 1e-12 * (1.0 + left.coefficients().iter().map(|z| z.norm()).sum::<f64>()));
        prop_assert!(a.compose(&b).distance(&b.compose(&a)) < 1e-12 * 16.0);
        prop_assert!(a.compose(&CirculantOperator::identity()).distance(&a) < 1e-14);
    }

    #[test]
    fn eta_is_multiplicative(a in eta_op(), b in eta_op()) {
        let (ea, eb, ec) = (a.eta_of(), b.eta_of(), a.compose(&b).eta_of());
        prop_assert!(close(ec.eta, ea.eta * eb.eta, 1e-12 * 16.0));
        prop_assert!(close(ec.etap, ea.etap * eb.etap, 1e-12 * 16.0));
    }

    #[test]
    fn operators_fix_the_centroid(op in eta_op(), t in triple()) {
        let img = op.apply_vertices(&t.vertices());
        let g = (img[0] + img[1] + img[2]) / 3.0;
        prop_assert!(close(g, t.centroid(), 1e-12 * 8.0 * t.scale()));
    }

    #[test]
    fn pq_chart_roundtrip(pair in pq_pair()) {
        let op = CirculantOperator::from_pq(pair);
        prop_assume!(op.gamma().norm() > 1e-3);
        let back = op.pq_of().unwrap();
        prop_assert!(close(back.p(), pair.p(), 1e-9));
        prop_assert!(close(back.q(), pair.q(), 1e-9));
    }

    #[test]
    fn compose_pq_matches_coefficient_product(a in pq_pair(), b in pq_pair()) {
        let product = CirculantOperator::from_pq(a).compose(&CirculantOperator::from_pq(b));
        prop_assume!(product.gamma().norm() > 0.05);
        let via = CirculantOperator::from_pq(compose_pq(a, b).unwrap());
        prop_assert!(via.distance(&product) < 1e-9);
    }

    #[test]
    fn torus_group_axioms(a in complex(3.0), b in complex(3.0), c in complex(3.0)) {
        let (Ok(a), Ok(b), Ok(c)) = (TorusElement::finite(a), TorusElement::finite(b), TorusElement::finite(c)) else {
            return Ok(());
        };
        prop_assume!([a, b, c].iter().all(|e| (0.1..10.0).contains(&e.psi().norm())));
        prop_assert!(a.add(&b).add(&c).distance(&a.add(&b.add(&c))) < 1e-10);
        prop_assert!(a.add(&b).distance(&b.add(&a)) < 1e-10);
        prop_assert!(a.add(&a.neg()).distance(&TorusElement::ZERO) < 1e-10);
    }
}

#[test]
fn rational_orbit_preserves_area_and_centroid() {
    let ap = triop::ApOperator::from_xy("1/4".parse().unwrap(), "1/7".parse().unwrap());
    let start = TriangleTriple::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.7, 0.8),
    )
    .unwrap();
    let orbit = ap.orbit(&start, 28).unwrap();
    for t in &orbit {
        assert!((t.area() - start.area()).abs() < 1e-12);
        assert!((t.centroid() - start.centroid()).norm() < 1e-12);
    }
    assert_eq!(triop::area_preserving::first_return(&orbit, 1e-9), Some(28));
}
