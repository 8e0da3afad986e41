use coregkit::{catalog, verify_builtin, Construction, Status, Verdict};
use dualcx::toric::toric_fano;

#[test]
fn toric_degrees_match_the_fans() {
    for f in catalog().families.iter().filter(|f| f.toric) {
        let fan = toric_fano(&f.id).unwrap();
        assert_eq!(fan.picard_rank() as u32, f.picard_rank, "{}", f.id);
        assert_eq!(fan.anticanonical_degree().unwrap(), f.degree.map(i64::from), "{}", f.id);
    }
}

#[test]
fn products_have_degree_six_d() {
    for f in &catalog().families {
        if let Some(Construction::Product { dp_degree }) = f.construction {
            // -K^3 of P^1 x S_d is 3 · 2 · d
            assert_eq!(f.degree, Some(6 * dp_degree), "{}", f.id);
            assert_eq!(f.picard_rank, 11 - dp_degree, "{}", f.id);
        }
    }
}

#[test]
fn large_degree_forces_coregularity_zero() {
    for f in &catalog().families {
        let d = f.degree.unwrap();
        if d >= 24 {
            assert_eq!(f.verdict, Verdict::CoregZeroAll, "{}", f.id);
        }
        if d >= 12 {
            assert!(f.verdict.general_coreg_zero(), "{}", f.id);
        }
    }
}

#[test]
fn every_construction_verifies() {
    let mut counts = [0usize; 3];
    for f in &catalog().families {
        match verify_builtin(&f.id) {
            Ok(r) => {
                assert!(r.pass, "{}", f.id);
                counts[match r.status {
                    Status::Verified => 0,
                    Status::VerifiedUpToCitation => 1,
                    Status::RecordedByCitation => 2,
                }] += 1;
            }
            Err(e) => assert!(f.construction.is_none(), "{}: {e}", f.id),
        }
    }
    assert_eq!(counts.iter().sum::<usize>(), 56);
}
