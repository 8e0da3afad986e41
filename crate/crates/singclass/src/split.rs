use num_traits::{One, Zero};
use polyring::{implicit_eliminate, Germ, LinearChange, Matrix, Rat};

use crate::SingError;

/// Outcome of the splitting lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadReport {
    pub rank: usize,
    /// Residual germ in the last `n - rank` coordinates after the change;
    /// `None` when the quadratic part is nondegenerate.
    pub tail: Option<Germ>,
    /// Linear change putting the quadratic part in diagonal form, the
    /// nondegenerate directions first.
    pub change: LinearChange,
    /// Nonzero diagonal entries, one per split-off square.
    pub diagonal: Vec<Rat>,
}

pub(crate) fn check_singular(g: &Germ) -> Result<(), SingError> {
    if g.is_zero() {
        return Err(SingError::NonReduced);
    }
    if g.terms().any(|(m, _)| m.degree() <= 1) {
        return Err(SingError::NotSingular);
    }
    Ok(())
}

/// Symmetric elimination `P^T Q P = diag`, pivots moved to the front.
pub fn diagonalize(q: &Matrix) -> (Matrix, Vec<Rat>) {
    let n = q.rows();
    let mut a = q.clone();
    let mut p = Matrix::identity(n);
    let mut diag = Vec::new();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[(i, i)].is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => {
                let Some((i, j)) =
                    (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| i != j && !a[(i, j)].is_zero())
                else {
                    break;
                };
                // x_i -> x_i + x_j creates the diagonal entry 2·a_ij
                add_col_row(&mut a, &mut p, i, j, &Rat::one());
                i
            }
        };
        swap_sym(&mut a, &mut p, k, pivot);
        let d = a[(k, k)].clone();
        for j in k + 1..n {
            if a[(k, j)].is_zero() {
                continue;
            }
            let f = -(&a[(k, j)] / &d);
            add_col_row(&mut a, &mut p, j, k, &f);
        }
        diag.push(d);
    }
    (p, diag)
}

/// Column/row operation `e_i += f·e_j` on the form and the basis.
fn add_col_row(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize, f: &Rat) {
    let n = a.rows();
    for r in 0..n {
        let v = &a[(r, j)] * f;
        a[(r, i)] += v;
    }
    for c in 0..n {
        let v = &a[(j, c)] * f;
        a[(i, c)] += v;
    }
    for r in 0..n {
        let v = &p[(r, j)] * f;
        p[(r, i)] += v;
    }
}

fn swap_sym(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows();
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
        let t = p[(r, i)].clone();
        p[(r, i)] = p[(r, j)].clone();
        p[(r, j)] = t;
    }
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
}

/// Splitting lemma: `g ~ Σ d_i y_i² + tail(z)` with `tail` of order ≥ 3.
///
/// The tail is `g` restricted to its critical locus in the `y` directions,
/// computed to the germ's truncation order.
pub fn hessian_split(g: &Germ) -> Result<QuadReport, SingError> {
    check_singular(g)?;
    let n = g.nvars();
    let q = g.quadratic_matrix();
    let (p, diagonal) = diagonalize(&q);
    let rank = diagonal.len();
    let change = LinearChange::new(p).expect("elimination keeps the basis invertible");
    let f = g.substitute(&change)?;
    if rank == 0 {
        return Ok(QuadReport { rank, tail: Some(f), change, diagonal });
    }
    let keep: Vec<usize> = (rank..n).collect();
    if rank == n {
        return Ok(QuadReport { rank, tail: None, change, diagonal });
    }
    let order = f.order();
    let system: Vec<Germ> =
        (0..rank).map(|i| f.partial(i).scale(&(Rat::from_integer(2.into()) * &diagonal[i]).recip())).collect();
    let solved: Vec<usize> = (0..rank).collect();
    let elim_order = system.iter().map(Germ::order).min().unwrap().min(order);
    let sol = implicit_eliminate(&system, &solved, elim_order)?;
    let images: Vec<Germ> = (0..n)
        .map(|i| match sol.get(&i) {
            Some(s) => s.clone(),
            None => Germ::var(n, order, i),
        })
        .collect();
    let tail = f.compose(&images)?.select_vars(&keep)?;
    Ok(QuadReport { rank, tail: Some(tail), change, diagonal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::parse_germ;

    fn g(s: &str) -> Germ {
        polyring::parse_germ_auto(s).unwrap()
    }

    #[test]
    fn ranks_and_tails() {
        let r = hessian_split(&g("x1^2 + x2^2 + x3^3")).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.tail.unwrap().to_string(), "x1^3");

        let r = hessian_split(&g("x1*x2 + x3^4")).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.tail.unwrap().to_string(), "x1^4");

        let r = hessian_split(&g("x1^2 + x2^3 + x3^7 + x1*x2*x3")).unwrap();
        assert_eq!(r.rank, 1);
        let t = r.tail.unwrap();
        assert_eq!(t.taylor_component(3).unwrap().to_string(), "x1^3");
        assert!(t.taylor_component(2).unwrap().is_zero());
    }

    #[test]
    fn morse_and_errors() {
        let r = hessian_split(&parse_germ("x1^2 - 3*x2^2 + x1^3", 2).unwrap()).unwrap();
        assert_eq!((r.rank, r.tail), (2, None));
        assert_eq!(hessian_split(&g("x1 + x2^2")), Err(SingError::NotSingular));
        assert_eq!(hessian_split(&Germ::zero(2, 8)), Err(SingError::NonReduced));
    }

    #[test]
    fn diagonalizes_hyperbolic_form() {
        let q = Matrix::from_rows(vec![vec![Rat::zero(), polyring::rat(1, 2)], vec![polyring::rat(1, 2), Rat::zero()]]);
        let (p, d) = diagonalize(&q);
        assert_eq!(d.len(), 2);
        let dq = p.transpose().mul(&q).mul(&p);
        assert!(dq[(0, 1)].is_zero() && dq[(1, 0)].is_zero());
    }
}
