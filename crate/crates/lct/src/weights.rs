//! Weighted upper bounds and the search for the sharpest one.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use polyring::{BinaryForm, Germ, Matrix, Rat, UPoly, WeightVector};
use singclass::classify_cubic;

use crate::threshold::{Certificate, Kind, Threshold};
use crate::LctError;

fn through_origin(g: &Germ) -> Result<(), LctError> {
    if g.is_zero() {
        return Err(LctError::ZeroGerm);
    }
    if !g.coeff_of(&vec![0; g.nvars()]).is_zero() {
        return Err(LctError::NotThroughOrigin);
    }
    Ok(())
}

/// `lct(f) <= Σw / w(f)`, capped at 1; exact when the leading form passes
/// one of the decidable lc-outside-the-origin tests.
pub fn weighted_bound(w: &WeightVector, g: &Germ) -> Result<Threshold, LctError> {
    through_origin(g)?;
    let order = g.weighted_order(w)?;
    let raw = w.total() / &order;
    let value = raw.clone().min(Rat::one());
    let lead = g.weighted_leading(w)?;
    let exact_reason = match g.nvars() {
        2 => binary_leading_is_reduced(w, &lead).then(|| "reduced quasi-homogeneous leading form".to_string()),
        3 => cubic_cone_is_lc(w, &lead).then(|| "leading form is a cone over an lc cubic".to_string()),
        _ => None,
    };
    let kind = if exact_reason.is_some() { Kind::Exact } else { Kind::UpperBound };
    Ok(Threshold {
        value,
        kind,
        certificate: Certificate::Weights { weights: w.as_slice().to_vec(), raw, exact_reason },
    })
}

/// Integer weights proportional to `w`, coprime.
pub fn primitive(w: &[Rat]) -> Vec<Rat> {
    let l = polyring::rat::denom_lcm(w.iter());
    let ints: Vec<_> = w.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |a, b| a.gcd(b));
    ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect()
}

/// In two variables the leading form is `x^a y^b Q(x^q, y^p)` with `(p, q)`
/// the primitive weights; it is lc away from the origin iff `a, b <= 1` and
/// `Q` has no repeated factor.
fn binary_leading_is_reduced(w: &WeightVector, lead: &Germ) -> bool {
    let pw = primitive(w.as_slice());
    let (Some(p), Some(q)) = (pw[0].to_integer().try_into().ok(), pw[1].to_integer().try_into().ok()) else {
        return false;
    };
    let (p, q): (u32, u32) = (p, q);
    let a = lead.terms().map(|(m, _)| m.0[0]).min().unwrap_or(0);
    let b = lead.terms().map(|(m, _)| m.0[1]).min().unwrap_or(0);
    if a > 1 || b > 1 {
        return false;
    }
    // R = lead / (x^a y^b) in u = x^q, v = y^p
    let mut coeffs: Vec<(u32, Rat)> = Vec::new();
    let mut deg = None;
    for (m, c) in lead.terms() {
        let (i, j) = (m.0[0] - a, m.0[1] - b);
        if i % q != 0 || j % p != 0 {
            return false;
        }
        let (i, j) = (i / q, j / p);
        match deg {
            None => deg = Some(i + j),
            Some(d) if d != i + j => return false,
            _ => {}
        }
        coeffs.push((i, c.clone()));
    }
    let Some(deg) = deg else { return false };
    let mut v = vec![Rat::zero(); deg as usize + 1];
    for (i, c) in coeffs {
        v[i as usize] = c;
    }
    let form = BinaryForm::new(deg as usize, UPoly::new(v));
    form.root_groups().iter().all(|g| g.mult == 1)
}

fn cubic_cone_is_lc(w: &WeightVector, lead: &Germ) -> bool {
    let equal = w.as_slice().windows(2).all(|p| p[0] == p[1]);
    equal && lead.is_homogeneous() == Some(3) && classify_cubic(lead).map(|t| t.is_lc()).unwrap_or(false)
}

/// Minimizes `Σw` over `{w >= 0 : <w, m> >= 1 for every monomial m of g}`
/// by enumerating vertices of the feasible region, keeping only strictly
/// positive ones. Falls back to `(1, ..., 1)` when no vertex is positive.
pub fn weight_search(g: &Germ) -> Result<(WeightVector, Threshold), LctError> {
    through_origin(g)?;
    if g.is_truncated() {
        // a weight with large entries could make a dropped term leading
        g.weighted_order(&WeightVector::from_ints(&vec![1; g.nvars()])?)?;
    }
    let n = g.nvars();
    let exps: Vec<Vec<Rat>> =
        newton_support(g).into_iter().map(|e| e.into_iter().map(|x| Rat::from_integer(x.into())).collect()).collect();
    // constraint rows: monomials (= 1) then coordinate planes (= 0)
    let mut rows: Vec<(Vec<Rat>, Rat)> = exps.iter().map(|e| (e.clone(), Rat::one())).collect();
    for i in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[i] = Rat::one();
        rows.push((e, Rat::zero()));
    }
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for subset in combinations(rows.len(), n) {
        let a = Matrix::from_rows(subset.iter().map(|&k| rows[k].0.clone()).collect());
        let b: Vec<Rat> = subset.iter().map(|&k| rows[k].1.clone()).collect();
        let Some(w) = a.solve(&b) else { continue };
        if w.iter().any(|x| !x.is_positive()) {
            continue;
        }
        let feasible = exps.iter().all(|e| e.iter().zip(&w).map(|(a, b)| a * b).sum::<Rat>() >= Rat::one());
        if !feasible {
            continue;
        }
        let total: Rat = w.iter().sum();
        let key = primitive(&w);
        let better = match &best {
            None => true,
            Some((t, k)) => total < *t || (total == *t && key < *k),
        };
        if better {
            best = Some((total, key));
        }
    }
    let w = match best {
        Some((_, k)) => WeightVector::new(k)?,
        None => WeightVector::from_ints(&vec![1; n])?,
    };
    let t = weighted_bound(&w, g)?;
    Ok((w, t))
}

/// Exponents of `g` that are not dominated coordinatewise by another one
/// (only these can bound a weighted order).
pub fn newton_support(g: &Germ) -> Vec<Vec<u32>> {
    let all: Vec<Vec<u32>> = g.terms().map(|(m, _)| m.0.clone()).collect();
    all.iter()
        .filter(|e| !all.iter().any(|f| f != *e && f.iter().zip(e.iter()).all(|(a, b)| a <= b)))
        .cloned()
        .collect()
}

/// Vertices of the Newton polygon of a two-variable germ, by increasing
/// first exponent.
pub fn newton_vertices(points: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut pts: Vec<(i64, i64)> = points.iter().map(|e| (e[0] as i64, e[1] as i64)).collect();
    pts.sort();
    pts.dedup();
    // keep the lowest point per column, then the lower-left convex chain
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        if let Some(&last) = hull.last() {
            if p.1 >= last.1 {
                continue;
            }
        }
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.into_iter().map(|(a, b)| vec![a as u32, b as u32]).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Inward normals of the compact edges of a two-variable Newton polygon,
/// as primitive positive weights.
pub fn facet_normals(g: &Germ) -> Vec<WeightVector> {
    let v = newton_vertices(&g.terms().map(|(m, _)| m.0.clone()).collect::<Vec<_>>());
    v.windows(2)
        .filter_map(|p| {
            let (a, b) = (&p[0], &p[1]);
            // edge from a to b: b0 > a0, b1 < a1; normal (a1 - b1, b0 - a0)
            let w = [
                Rat::from_integer((a[1] as i64 - b[1] as i64).into()),
                Rat::from_integer((b[0] as i64 - a[0] as i64).into()),
            ];
            WeightVector::new(primitive(&w)).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::{parse_germ, rat};

    fn w(a: &[i64]) -> WeightVector {
        WeightVector::from_ints(a).unwrap()
    }

    #[test]
    fn corollary_bounds() {
        let cases = [
            ("x1^2*x2 + x2^4", [3, 2], rat(5, 8)),
            ("x1^3 + x2^4", [4, 3], rat(7, 12)),
            ("x1^3 + x1*x2^3", [3, 2], rat(5, 9)),
            ("x1^2 + x2^3", [3, 2], rat(5, 6)),
        ];
        for (s, ws, v) in cases {
            let t = weighted_bound(&w(&ws), &parse_germ(s, 2).unwrap()).unwrap();
            assert_eq!(t.value, v, "{s}");
            assert_eq!(t.kind, Kind::Exact, "{s}");
        }
    }

    #[test]
    fn bound_without_equality() {
        // leading form x1^2 for w = (1,1) is a double line
        let t = weighted_bound(&w(&[1, 1]), &parse_germ("x1^2 + x2^3", 2).unwrap()).unwrap();
        assert_eq!((t.value.clone(), t.kind), (rat(1, 1), Kind::UpperBound));
        let t = weighted_bound(&w(&[1, 1]), &parse_germ("x1^3 + x2^2*x1", 2).unwrap()).unwrap();
        assert_eq!(t.value, rat(2, 3));
        assert_eq!(t.kind, Kind::Exact);
        assert!(weighted_bound(&w(&[1, 1]), &Germ::zero(2, 8)).is_err());
        assert!(weighted_bound(&w(&[1, 1]), &parse_germ("1 + x1", 2).unwrap()).is_err());
    }

    #[test]
    fn three_variable_cone() {
        let t = weighted_bound(&w(&[1, 1, 1]), &parse_germ("x1*x2*x3 + x1^4", 3).unwrap()).unwrap();
        assert_eq!((t.value, t.kind), (rat(1, 1), Kind::Exact));
        let t = weighted_bound(&w(&[1, 1, 1]), &parse_germ("x2^2*x3 - x1^3", 3).unwrap()).unwrap();
        assert_eq!(t.kind, Kind::UpperBound);
    }

    #[test]
    fn searches() {
        let (wv, t) = weight_search(&parse_germ("x1^2*x2 + x2^4", 2).unwrap()).unwrap();
        assert_eq!(wv, w(&[3, 2]));
        assert_eq!(t.value, rat(5, 8));
        let (wv, t) = weight_search(&parse_germ("x1^2 + x2^2", 2).unwrap()).unwrap();
        assert_eq!(wv, w(&[1, 1]));
        assert_eq!(t.value, rat(1, 1));
        let (wv, t) = weight_search(&parse_germ("x1^3 + x2^5", 2).unwrap()).unwrap();
        assert_eq!(wv, w(&[5, 3]));
        assert_eq!(t.value, rat(8, 15));
    }

    #[test]
    fn polygon() {
        let g = parse_germ("x1^5 + x1^2*x2 + x2^3 + x1*x2^2", 2).unwrap();
        let v = newton_vertices(&g.terms().map(|(m, _)| m.0.clone()).collect::<Vec<_>>());
        assert_eq!(v, vec![vec![0, 3], vec![2, 1], vec![5, 0]]);
        let normals = facet_normals(&g);
        assert_eq!(normals, vec![w(&[1, 1]), w(&[1, 3])]);
    }
}
