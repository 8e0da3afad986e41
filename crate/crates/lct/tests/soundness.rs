use lct::{
    curve_lct, facet_normals, pencil_klt_certificate, sum_lct, weight_search, weighted_bound, Certificate, Kind,
    LctError, Threshold,
};
use polyring::{parse_germ, rat, Germ, LinearChange, Matrix, Monomial, Rat, WeightVector};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use singclass::{strict_lc2_screen, Lc2Verdict};

fn random_curve(rng: &mut ChaCha8Rng) -> Germ {
    let n = rng.gen_range(0..=3);
    let mut terms: Vec<_> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0u32..=5);
            let b = rng.gen_range(2_u32.saturating_sub(a)..=5);
            (Monomial(vec![a, b]), Rat::from_integer(rng.gen_range(1i64..=3).into()))
        })
        .collect();
    // pure powers keep the singularity isolated most of the time
    terms.push((Monomial(vec![rng.gen_range(2..=7), 0]), Rat::from_integer(1.into())));
    terms.push((Monomial(vec![0, rng.gen_range(2..=7)]), Rat::from_integer(rng.gen_range(1i64..=3).into())));
    Germ::exact_from_terms(2, terms)
}

#[test]
fn resolution_never_beats_a_monomial_valuation() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for _ in 0..200 {
        let g = random_curve(&mut rng);
        let exact = match curve_lct(&g) {
            Ok(t) => t,
            Err(LctError::NonReduced | LctError::IrrationalCenter) => continue,
            Err(e) => panic!("{e}"),
        };
        checked += 1;
        let mut weights = facet_normals(&g);
        weights.push(WeightVector::from_ints(&[1, 1]).unwrap());
        for w in weights {
            let b = weighted_bound(&w, &g).unwrap();
            assert!(exact.value <= b.value, "{g:?} {w:?}");
            if b.kind == Kind::Exact {
                assert_eq!(exact.value, b.value, "{g:?} {w:?}");
            }
        }
    }
    assert!(checked > 100, "only {checked} reduced samples");
}

#[test]
fn curve_threshold_is_coordinate_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (s, v) in [("x1^2 + x2^3", rat(5, 6)), ("x1^2*x2 + x2^4", rat(5, 8)), ("x1^3 + x2^4", rat(7, 12))] {
        let g = parse_germ(s, 2).unwrap();
        for _ in 0..20 {
            let change = loop {
                let rows = (0..2)
                    .map(|_| (0..2).map(|_| Rat::from_integer(rng.gen_range(-3i64..=3).into())).collect())
                    .collect();
                if let Ok(c) = LinearChange::new(Matrix::from_rows(rows)) {
                    break c;
                }
            };
            let h = g.substitute(&change).unwrap();
            match curve_lct(&h) {
                Ok(t) => assert_eq!(t.value, v, "{s}"),
                // tangent cone roots stay rational under rational changes
                Err(e) => panic!("{s}: {e}"),
            }
        }
    }
}

#[test]
fn monomial_law() {
    for p in 2..=7u32 {
        for q in 2..=7u32 {
            let g = lct::binomial(p, q);
            let expect = rat(1, p.into()) + rat(1, q.into());
            let expect = expect.min(rat(1, 1));
            assert_eq!(curve_lct(&g).unwrap().value, expect, "x^{p} + y^{q}");
            let (_, t) = weight_search(&g).unwrap();
            assert_eq!(t.value, expect);
        }
    }
}

fn threshold(v: Rat, kind: Kind) -> Threshold {
    Threshold { value: v, kind, certificate: Certificate::Direct("test".into()) }
}

proptest! {
    #[test]
    fn sums_commute_and_are_monotone(a in 1i64..20, b in 1i64..20, c in 1i64..20, d in 1i64..20) {
        let x = threshold(rat(1, a), Kind::Exact);
        let y = threshold(rat(1, b), Kind::Exact);
        let s1 = sum_lct(&x, &[0], &y, &[1, 2]).unwrap();
        let s2 = sum_lct(&y, &[1, 2], &x, &[0]).unwrap();
        prop_assert_eq!(&s1.value, &s2.value);
        let bigger = threshold(rat(1, a) + rat(1, c.max(d)), Kind::Exact);
        let s3 = sum_lct(&bigger, &[0], &y, &[1, 2]).unwrap();
        prop_assert!(s3.value >= s1.value);
        prop_assert!(s1.value <= rat(1, 1));
    }
}

#[test]
fn pencil_examples() {
    let g = parse_germ("x1^2*x2 + x2^4 + x3^4 + x2^2*x3^2", 3).unwrap();
    let c = pencil_klt_certificate(&g, (1, 2), 5).unwrap();
    assert!(c.certified);
    assert!(c.thresholds.iter().all(|t| t.value >= rat(5, 8)));
    assert_eq!(c.to_threshold().unwrap().kind, Kind::LowerBound);

    let g = parse_germ("x1^2*x2", 3).unwrap();
    assert!(matches!(pencil_klt_certificate(&g, (1, 2), 5), Err(LctError::PencilNonReduced { .. })));

    let g = parse_germ("x1^3 + x2^4 + x3^4", 3).unwrap();
    let c = pencil_klt_certificate(&g, (1, 2), 5).unwrap();
    assert!(c.thresholds.iter().all(|t| t.value == rat(7, 12)));
}

#[test]
fn corollary_weights_leave_room_above_half() {
    for s in ["x1^2*x2 + x2^4 + x3^5", "x1^3 + x1*x2^3 + x3^5", "x1^3 + x2^4 + x3^4"] {
        let g = parse_germ(s, 3).unwrap();
        let Lc2Verdict::KltCertified(cert) = strict_lc2_screen(&g).unwrap() else {
            panic!("{s} not certified");
        };
        let (Some(w), Some(change)) = (cert.weights(), cert.change()) else {
            panic!("{s}: {}", cert.name());
        };
        let h = g.substitute(change).unwrap();
        let b = weighted_bound(&WeightVector::from_ints(&w).unwrap(), &h).unwrap();
        assert!(b.value > rat(1, 2), "{s}: {:?}", b.value);
    }
}
