use polyring::{parse_germ, rat, Germ, LinearChange, Matrix, Monomial, Rat};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use singclass::{
    classify_cubic, hessian_split, normal_form, strict_lc1_screen, strict_lc2_screen, CubicType, Lc1Verdict,
    Lc2Certificate, Lc2Verdict, NormalFormKind,
};

fn random_change(rng: &mut ChaCha8Rng, n: usize) -> LinearChange {
    loop {
        let rows =
            (0..n).map(|_| (0..n).map(|_| Rat::from_integer(rng.gen_range(-3i64..=3).into())).collect()).collect();
        if let Ok(c) = LinearChange::new(Matrix::from_rows(rows)) {
            return c;
        }
    }
}

#[test]
fn hessian_rank_is_coordinate_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let cases = [
        ("x1^2 + x2^3 + x3^7 + x1*x2*x3", 1),
        ("x1^2 + x2^2 + x3^5", 2),
        ("x1*x2 + x3^4", 2),
        ("x1^2 + x2^2 + x3^2", 3),
        ("x1^3 + x2^3 + x3^3", 0),
    ];
    for (s, rank) in cases {
        let g = parse_germ(s, 3).unwrap();
        for _ in 0..50 {
            let h = g.substitute(&random_change(&mut rng, 3)).unwrap();
            let r = hessian_split(&h).unwrap();
            assert_eq!(r.rank, rank, "{s}");
            // quadratic part as a matrix has the same rank
            assert_eq!(h.quadratic_matrix().rank(), rank);
        }
    }
}

#[test]
fn cubic_type_is_coordinate_free() {
    let reps = [
        ("x1^3 + x2^3 + x3^3", CubicType::SmoothCubic),
        ("x2^2*x3 - x1^3 - x1^2*x3", CubicType::NodalCubic),
        ("x2^2*x3 - x1^3", CubicType::CuspidalCubic),
        ("x1*x2*x3 - x2^3", CubicType::ConicPlusTransversalLine),
        ("x2^2*x3 - x1^2*x2", CubicType::ConicPlusTangentLine),
        ("x1*x2*x3", CubicType::Triangle),
        ("x1^3 - x1*x2^2", CubicType::ThreeConcurrentLines),
        ("x1^2*x2", CubicType::DoubleLinePlusLine),
        ("x1^3", CubicType::TripleLine),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (s, t) in reps {
        let c = parse_germ(s, 3).unwrap();
        assert_eq!(classify_cubic(&c).unwrap().is_lc(), t.is_lc());
        for _ in 0..20 {
            let d = c.substitute(&random_change(&mut rng, 3)).unwrap();
            assert_eq!(classify_cubic(&d).unwrap(), t, "{s} -> {d}");
        }
    }
}

#[test]
fn cusp_normal_forms_screen() {
    for q in 3..=6u32 {
        for r in q..=9u32 {
            let Ok(g) = normal_form(&NormalFormKind::Cusp { p: 2, q, r }) else {
                continue;
            };
            let v = strict_lc1_screen(&g).unwrap();
            let want = if q == 3 { Lc1Verdict::RankOneCubicCube } else { Lc1Verdict::RankOneCubicZero };
            assert_eq!(v, want, "T(2,{q},{r})");
        }
    }
    for p in 3..=5u32 {
        for q in p..=6 {
            for r in q..=9 {
                if let Ok(g) = normal_form(&NormalFormKind::Cusp { p, q, r }) {
                    assert_eq!(strict_lc1_screen(&g).unwrap(), Lc1Verdict::MultAtLeast3);
                }
            }
        }
    }
}

#[test]
fn rank_one_cusp_screen_survives_coordinate_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = normal_form(&NormalFormKind::Cusp { p: 2, q: 3, r: 7 }).unwrap();
    for _ in 0..20 {
        let h = g.substitute(&random_change(&mut rng, 3)).unwrap();
        assert_eq!(strict_lc1_screen(&h).unwrap(), Lc1Verdict::RankOneCubicCube);
    }
}

#[test]
fn lc2_certificate_families_name_their_lemma() {
    let cases = [
        ("x1^2 + x2^5 + x3^5", "double point lemma"),
        ("x1*x2*x3 + x1^4 + x2^4 + x3^4", "triple point lemma (lc cubic cone)"),
        ("x1^2*x2 + x2^4 + x3^5", "double line corollary"),
    ];
    for (s, name) in cases {
        match strict_lc2_screen(&parse_germ(s, 3).unwrap()).unwrap() {
            Lc2Verdict::KltCertified(c) => assert_eq!(c.name(), name),
            v => panic!("{s}: {v:?}"),
        }
    }
}

#[test]
fn lc2_screen_is_coordinate_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let dl = parse_germ("x1^2*x2 + x2^4 + x3^5", 3).unwrap();
    let tl = parse_germ("x1^3 + x1*x2^3 + x3^4", 3).unwrap();
    let dl_case = parse_germ("x1^2*x2 + x1*x3^3 + x3^5", 3).unwrap();
    for _ in 0..20 {
        let c = random_change(&mut rng, 3);
        let v = strict_lc2_screen(&dl.substitute(&c).unwrap()).unwrap();
        assert!(matches!(v, Lc2Verdict::KltCertified(Lc2Certificate::DoubleLineCorollary { .. })));
        let v = strict_lc2_screen(&tl.substitute(&c).unwrap()).unwrap();
        assert!(matches!(v, Lc2Verdict::KltCertified(Lc2Certificate::TripleLineCorollary { .. })));
        let v = strict_lc2_screen(&dl_case.substitute(&c).unwrap()).unwrap();
        assert_eq!(v, Lc2Verdict::DoubleLinePlusLineCase);
    }
}

fn singular_germ() -> impl Strategy<Value = Germ> {
    let mono =
        proptest::collection::vec(0u32..=4, 3).prop_filter("degree", |e| (2..=4).contains(&e.iter().sum::<u32>()));
    proptest::collection::vec((mono, -5i64..=5), 1..8)
        .prop_map(|ts| Germ::from_terms(3, 6, ts.into_iter().map(|(e, c)| (Monomial(e), rat(c, 1)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn split_tail_has_no_quadratic_part(g in singular_germ()) {
        prop_assume!(!g.is_zero());
        let r = hessian_split(&g).unwrap();
        prop_assert_eq!(r.rank, g.quadratic_matrix().rank());
        if let Some(t) = r.tail {
            prop_assert_eq!(t.nvars(), 3 - r.rank);
            prop_assert!(t.terms().all(|(m, _)| m.degree() != 2 && m.degree() >= 2 || m.degree() > 2));
        }
    }

    #[test]
    fn lc1_verdicts_are_total(g in singular_germ()) {
        prop_assume!(!g.is_zero());
        prop_assert!(strict_lc1_screen(&g).is_ok());
    }
}
