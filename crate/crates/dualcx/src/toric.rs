//! Fans of the eighteen smooth toric Fano threefolds, built from P^3,
//! products and toric blow-ups.

use crate::Fan;

pub const TORIC_FANO_IDS: [&str; 18] = [
    "1.17", "2.33", "2.34", "2.35", "2.36", "3.25", "3.26", "3.27", "3.28", "3.29", "3.30", "3.31", "4.9", "4.10",
    "4.11", "4.12", "5.2", "5.3",
];

fn p(n: usize) -> Fan {
    Fan::projective_space(n)
}

/// P^2 blown up at `k <= 3` torus-fixed points.
fn plane_blowup(k: usize) -> Fan {
    // rays 0 = (1,0), 1 = (0,1), 2 = (-1,-1); new rays appended in order
    let cones: [[usize; 2]; 3] = [[0, 1], [1, 2], [0, 2]];
    cones[..k].iter().fold(p(2), |f, c| f.star(c).expect("torus-fixed point"))
}

/// P(O + O(a, b)) over P^1 x P^1, or P(O + O(a)) over P^2.
fn bundle(base: &Fan, twist: &[i64]) -> Fan {
    let d = base.dim;
    let mut rays: Vec<Vec<i64>> =
        base.rays.iter().zip(twist).map(|(r, &t)| r.iter().copied().chain([t]).collect()).collect();
    let up = rays.len();
    rays.push((0..d).map(|_| 0).chain([1]).collect());
    rays.push((0..d).map(|_| 0).chain([-1]).collect());
    let cones = base.cones.iter().flat_map(|c| [up, up + 1].map(|v| c.iter().copied().chain([v]).collect())).collect();
    Fan::new(d + 1, rays, cones).expect("projective bundle")
}

pub fn toric_fano(id: &str) -> Option<Fan> {
    let p1 = p(1);
    // P^3: rays 0,1,2 = e1,e2,e3 and 3 = -e1-e2-e3
    let p3 = p(3);
    let f = match id {
        "1.17" => p3,
        // blow-up of P^3 in a line
        "2.33" => p3.star(&[0, 1]).ok()?,
        "2.34" => p1.product(&p(2)).ok()?,
        // blow-up of P^3 in a point
        "2.35" => p3.star(&[0, 1, 2]).ok()?,
        "2.36" => bundle(&p(2), &[0, 0, 2]),
        // two disjoint lines
        "3.25" => p3.star(&[0, 1]).ok()?.star(&[2, 3]).ok()?,
        // a line and a point off it
        "3.26" => p3.star(&[0, 1]).ok()?.star(&[0, 2, 3]).ok()?,
        "3.27" => p1.product(&p1).ok()?.product(&p1).ok()?,
        "3.28" => p1.product(&plane_blowup(1)).ok()?,
        // blow-up of a point, then a line in the exceptional plane (ray 4)
        "3.29" => p3.star(&[0, 1, 2]).ok()?.star(&[0, 4]).ok()?,
        // ... then the strict transform of a line through the point
        "3.30" => p3.star(&[0, 1, 2]).ok()?.star(&[0, 1]).ok()?,
        "3.31" => bundle(&p1.product(&p1).ok()?, &[0, 1, 0, 1]),
        // 3.25, then one fibre of an exceptional quadric (ray 4 over the line 0,1)
        "4.9" => p3.star(&[0, 1]).ok()?.star(&[2, 3]).ok()?.star(&[2, 4]).ok()?,
        "4.10" => p1.product(&plane_blowup(2)).ok()?,
        // P^1 x F_1, then {pt} x (the (-1)-curve): rays 0,1 from P^1, 5 is the (-1)-curve
        "4.11" => p1.product(&plane_blowup(1)).ok()?.star(&[0, 5]).ok()?,
        // blow-up of a line, then two fibres of the exceptional divisor (ray 4)
        "4.12" => p3.star(&[0, 1]).ok()?.star(&[2, 4]).ok()?.star(&[3, 4]).ok()?,
        // 3.25, then two fibres on the same exceptional quadric
        "5.2" => p3.star(&[0, 1]).ok()?.star(&[2, 3]).ok()?.star(&[2, 4]).ok()?.star(&[3, 4]).ok()?,
        "5.3" => p1.product(&plane_blowup(3)).ok()?,
        _ => return None,
    };
    Some(f)
}
