//! Implicit elimination and blow-up charts.

use std::collections::BTreeMap;

use num_traits::One;

use crate::germ::{Germ, Monomial};
use crate::rat::Rat;
use crate::PolyError;

/// Solves `system[k] = 0` for `x_{solved[k]}` as germs in the other
/// variables, correct through degree `order`.
///
/// Each `system[k]` must read `x_{solved[k]} + (terms of degree ≥ 2)`.
pub fn implicit_eliminate(system: &[Germ], solved: &[usize], order: u32) -> Result<BTreeMap<usize, Germ>, PolyError> {
    if system.len() != solved.len() || system.is_empty() {
        return Err(PolyError::Dimension { expected: system.len(), got: solved.len() });
    }
    let n = system[0].nvars();
    let mut seen = vec![false; n];
    for (k, (s, &j)) in system.iter().zip(solved).enumerate() {
        if j >= n || seen[j] || s.nvars() != n {
            return Err(PolyError::NotSolvedForm(k));
        }
        seen[j] = true;
        if s.order() < order {
            return Err(PolyError::Truncation { k: order, order: s.order() });
        }
        let lin = s.jet(1);
        let want = Germ::var(n, s.order(), j);
        if lin.terms().ne(want.terms()) {
            return Err(PolyError::NotSolvedForm(k));
        }
    }

    // x_j = -(s_k - x_j), iterated from zero; each pass fixes one more degree
    let tails: Vec<Germ> =
        system.iter().zip(solved).map(|(s, &j)| s.with_order(order).unwrap().sub(&Germ::var(n, order, j))).collect();
    let mut sol: Vec<Germ> = solved.iter().map(|_| Germ::zero(n, order)).collect();
    let mut last_residual = 0u32;
    for _ in 0..=order + 1 {
        let images = images_for(n, order, solved, &sol);
        let mut next = Vec::with_capacity(sol.len());
        for t in &tails {
            next.push(t.compose(&images)?.neg().mark_truncated());
        }
        // system[k] at `sol` equals sol_k - next_k through `order`
        let r = sol.iter().zip(&next).filter_map(|(a, b)| a.sub(b).mult()).min().unwrap_or(order + 1);
        if r > order {
            return Ok(solved.iter().cloned().zip(sol).collect());
        }
        if r <= last_residual {
            return Err(PolyError::Stalled(r));
        }
        last_residual = r;
        sol = next;
    }
    Err(PolyError::Stalled(last_residual))
}

fn images_for(n: usize, order: u32, solved: &[usize], sol: &[Germ]) -> Vec<Germ> {
    (0..n)
        .map(|i| match solved.iter().position(|&j| j == i) {
            Some(k) => sol[k].clone(),
            None => Germ::var(n, order, i),
        })
        .collect()
}

/// Smallest degree of a nonzero term after back-substitution, or
/// `order + 1` when everything through `order` cancels.
pub fn residual_order(system: &[Germ], solved: &[usize], sol: &[Germ], order: u32) -> Result<u32, PolyError> {
    let n = system[0].nvars();
    let images = images_for(n, order, solved, sol);
    let mut best = order + 1;
    for s in system {
        let r = s.with_order(order)?.compose(&images)?;
        if let Some(m) = r.mult() {
            best = best.min(m);
        }
    }
    Ok(best)
}

/// Chart of the blow-up along `{x_i = 0 : i ∈ center}` where `x_chart` cuts
/// out the exceptional divisor. Returns the strict transform and the
/// multiplicity of `g` along the center.
pub fn blowup_chart(g: &Germ, center: &[usize], chart: usize) -> Result<(Germ, u32), PolyError> {
    let n = g.nvars();
    if center.len() < 2 {
        return Err(PolyError::BadCenter("need at least two variables".into()));
    }
    let mut sorted = center.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != center.len() || sorted.iter().any(|&i| i >= n) {
        return Err(PolyError::BadCenter(format!("{center:?}")));
    }
    if !center.contains(&chart) {
        return Err(PolyError::BadCenter(format!("chart x{} not in center", chart + 1)));
    }
    if g.is_truncated() && center.len() < n {
        // a dropped term of high degree may still have low order along the center
        return Err(PolyError::DroppedTerms(g.order()));
    }
    let center_deg = |m: &Monomial| center.iter().map(|&i| m.0[i]).sum::<u32>();
    let mult = g.terms().map(|(m, _)| center_deg(m)).min();
    let mult = match mult {
        Some(0) => return Err(PolyError::NotOnCenter),
        Some(m) => m,
        None if g.is_truncated() => return Err(PolyError::DroppedTerms(g.order())),
        None => return Err(PolyError::ZeroGerm),
    };
    let mut terms = Vec::with_capacity(g.num_terms());
    for (m, c) in g.terms() {
        let mut e = m.0.clone();
        e[chart] = center_deg(m) - mult;
        terms.push((Monomial(e), c.clone()));
    }
    let strict = if g.is_truncated() {
        let order = g.order().checked_sub(mult).filter(|&o| o >= 1);
        let order = order.ok_or(PolyError::DroppedTerms(g.order()))?;
        Germ::from_terms(n, order, terms).mark_truncated()
    } else {
        let deg = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        Germ::from_terms(n, deg.max(g.order()), terms)
    };
    Ok((strict, mult))
}

/// Pullback `g(x)` with `x_i -> x_i·x_chart` for `i ∈ center∖{chart}`, for
/// checking `pullback = x_chart^mult · strict`.
pub fn chart_pullback(g: &Germ, center: &[usize], chart: usize, order: u32) -> Result<Germ, PolyError> {
    let n = g.nvars();
    let images: Vec<Germ> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] += 1;
            if i != chart && center.contains(&i) {
                e[chart] += 1;
            }
            Germ::monomial(order, &e, Rat::one())
        })
        .collect();
    g.with_order(order)?.compose(&images)
}

/// `x_chart^k` in `n` variables.
pub fn chart_power(n: usize, chart: usize, k: u32, order: u32) -> Germ {
    let mut e = vec![0; n];
    e[chart] = k;
    Germ::monomial(order, &e, Rat::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_germ;

    fn g(s: &str, n: usize) -> Germ {
        parse_germ(s, n).unwrap()
    }

    #[test]
    fn eliminate_single() {
        let sys = [g("x4 + x1^2", 4)];
        let sol = implicit_eliminate(&sys, &[3], 6).unwrap();
        assert_eq!(sol[&3].to_string(), "-x1^2");
        assert_eq!(residual_order(&sys, &[3], &[sol[&3].clone()], 6).unwrap(), 7);
    }

    #[test]
    fn eliminate_rejects_bad_linear_part() {
        assert!(implicit_eliminate(&[g("x2 + x1", 2)], &[1], 4).is_err());
        assert!(implicit_eliminate(&[g("2*x2 + x1^2", 2)], &[1], 4).is_err());
    }

    #[test]
    fn charts() {
        let (s, m) = blowup_chart(&g("x1*x2", 2), &[0, 1], 1).unwrap();
        assert_eq!((s.to_string(), m), ("x1".to_string(), 2));
        let (s, m) = blowup_chart(&g("x1^2 + x2^3", 2), &[0, 1], 1).unwrap();
        assert_eq!((s.to_string(), m), ("x2 + x1^2".to_string(), 2));
        let (s, m) = blowup_chart(&g("x1^2*x2 + x2^4", 2), &[0, 1], 0).unwrap();
        assert_eq!(s, g("x2 + x1*x2^4", 2));
        assert_eq!(m, 3);
        assert_eq!(blowup_chart(&g("x1 + 1", 2), &[0, 1], 0), Err(PolyError::NotOnCenter));
    }
}
