use polyring::{BinaryForm, Germ, Rat};
use serde::Serialize;

use crate::BlowError;

/// Singular members of the pencil `y^2 = x^3 + f4(u,v)·x + f6(u,v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantReport {
    /// Simple roots of the discriminant.
    pub nodal: usize,
    /// Double roots where `f4` vanishes as well.
    pub cusp: usize,
    /// Double roots with `f4 != 0`.
    pub other_double: usize,
    /// Roots of multiplicity >= 3, counted with multiplicity.
    pub higher: usize,
    pub degenerate: bool,
}

impl DiscriminantReport {
    pub fn total(&self) -> usize {
        self.nodal + 2 * (self.cusp + self.other_double) + self.higher
    }
}

fn form(g: &Germ, deg: usize) -> Result<BinaryForm, BlowError> {
    if g.nvars() != 2 {
        return Err(BlowError::WrongDegree { expected: deg });
    }
    BinaryForm::from_germ(g, deg).map_err(|_| BlowError::WrongDegree { expected: deg })
}

/// `Δ = 4 f4^3 + 27 f6^2`, split by root multiplicity over `P^1`.
pub fn dp1_discriminant(f4: &Germ, f6: &Germ) -> Result<DiscriminantReport, BlowError> {
    let f4 = form(f4, 4)?;
    let f6 = form(f6, 6)?;
    let delta = f4.pow(3).scale(&Rat::from_integer(4.into())).add(&f6.pow(2).scale(&Rat::from_integer(27.into())));
    let mut r = DiscriminantReport { nodal: 0, cusp: 0, other_double: 0, higher: 0, degenerate: delta.is_zero() };
    for g in delta.root_groups() {
        match g.mult {
            1 => r.nodal += g.count(),
            2 => {
                let on_f4 = if f4.is_zero() {
                    g.count()
                } else {
                    g.finite.gcd(&f4.poly).degree().unwrap_or(0) + usize::from(g.at_infinity && f4.infinity_mult() > 0)
                };
                r.cusp += on_f4;
                r.other_double += g.count() - on_f4;
            }
            m => {
                r.higher += m * g.count();
                r.degenerate = true;
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::parse_germ;

    fn g(s: &str) -> Germ {
        parse_germ(s, 2).unwrap()
    }

    #[test]
    fn generic_pencil_is_nodal() {
        let r = dp1_discriminant(&g("x1^4 + x2^4 + x1*x2^3"), &g("x1^6 - x1^2*x2^4 + 3*x2^6 + x1^5*x2")).unwrap();
        assert_eq!((r.nodal, r.cusp, r.degenerate), (12, 0, false));
    }

    #[test]
    fn vanishing_quartic_gives_cusps() {
        let zero = Germ::zero(2, polyring::DEFAULT_ORDER);
        let r = dp1_discriminant(&zero, &g("x1^6 + 2*x1^3*x2^3 - 5*x2^6 + x1*x2^5")).unwrap();
        assert_eq!((r.nodal, r.cusp, r.other_double, r.degenerate), (0, 6, 0, false));
    }

    #[test]
    fn vanishing_sextic_is_degenerate() {
        let zero = Germ::zero(2, polyring::DEFAULT_ORDER);
        let r = dp1_discriminant(&g("x1^4 - x2^4 + x1*x2^3"), &zero).unwrap();
        assert!(r.degenerate);
        assert_eq!((r.higher, r.total()), (12, 12));
    }

    #[test]
    fn root_at_infinity() {
        // f4 and f6 both vanish simply at [1:0] and at [-1:1]: two double roots
        let r = dp1_discriminant(&g("x1^3*x2 + x2^4"), &g("x1^5*x2 + x2^6")).unwrap();
        assert_eq!(r.total(), 12);
        assert_eq!((r.cusp, r.nodal), (2, 8));
    }

    #[test]
    fn wrong_degrees() {
        assert_eq!(dp1_discriminant(&g("x1^3"), &g("x1^6")), Err(BlowError::WrongDegree { expected: 4 }));
    }
}
