use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::Signed;
use polyring::{Matrix, Rat};
use serde::{Deserialize, Serialize};

use crate::{DualError, SncConfig, Stratum};

/// Simplicial fan given by rays and maximal cones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

fn ray_matrix(rays: &[&Vec<i64>]) -> Matrix {
    Matrix::from_i64(&rays.iter().map(|r| (*r).clone()).collect::<Vec<_>>())
}

// directions for the covering test; large entries keep them off the walls
// of fans with small rays
const PROBES: [[i64; 4]; 4] =
    [[1009, 2003, 3001, 4001], [-997, 1511, -2111, 313], [421, -1931, 2707, -89], [-1201, -757, -3307, 1777]];

impl Fan {
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Fan, DualError> {
        let mut fan = Fan { dim, rays, cones };
        for c in &mut fan.cones {
            c.sort_unstable();
        }
        fan.validate()?;
        Ok(fan)
    }

    pub fn validate(&self) -> Result<(), DualError> {
        for r in &self.rays {
            if r.len() != self.dim {
                return Err(DualError::BadFan(format!("ray {r:?} not in Z^{}", self.dim)));
            }
            let g = r.iter().fold(0i64, |a, b| a.gcd(b));
            if g != 1 {
                return Err(DualError::BadFan(format!("ray {r:?} is not primitive")));
            }
        }
        for c in &self.cones {
            if c.is_empty() || c.iter().any(|&i| i >= self.rays.len()) {
                return Err(DualError::BadFan(format!("cone {c:?}")));
            }
            let rays: Vec<&Vec<i64>> = c.iter().map(|&i| &self.rays[i]).collect();
            if ray_matrix(&rays).rank() != c.len() {
                return Err(DualError::NotSimplicial(c.clone()));
            }
        }
        Ok(())
    }

    pub fn picard_rank(&self) -> usize {
        self.rays.len() - self.dim
    }

    /// Every cone, faces included, as a sorted ray set.
    pub fn all_cones(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for c in &self.cones {
            for mask in 1u64..(1 << c.len()) {
                out.insert(c.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &r)| r).collect());
            }
        }
        out
    }

    /// Maximal cones full-dimensional, every wall shared by exactly two of
    /// them, and a few generic directions each covered exactly once.
    pub fn check_complete(&self) -> Result<(), DualError> {
        self.validate()?;
        if self.cones.iter().any(|c| c.len() != self.dim) {
            return Err(DualError::NotComplete("a maximal cone is not full-dimensional".into()));
        }
        let mut walls: std::collections::BTreeMap<Vec<usize>, usize> = Default::default();
        for c in &self.cones {
            for p in 0..c.len() {
                let mut w = c.clone();
                w.remove(p);
                *walls.entry(w).or_default() += 1;
            }
        }
        if let Some((w, k)) = walls.iter().find(|(_, &k)| k != 2) {
            return Err(DualError::NotComplete(format!("wall {w:?} lies in {k} cones")));
        }
        if self.dim <= PROBES[0].len() {
            for probe in PROBES {
                let target: Vec<Rat> = probe[..self.dim].iter().map(|&x| Rat::from_integer(x.into())).collect();
                let covering = self
                    .cones
                    .iter()
                    .filter(|c| {
                        let rays: Vec<&Vec<i64>> = c.iter().map(|&i| &self.rays[i]).collect();
                        let coords = ray_matrix(&rays).transpose().solve(&target).expect("independent rays");
                        coords.iter().all(|x| !x.is_negative())
                    })
                    .count();
                if covering != 1 {
                    return Err(DualError::NotComplete(format!("direction {probe:?} covered {covering} times")));
                }
            }
        }
        Ok(())
    }

    pub fn is_smooth(&self) -> bool {
        self.cones.iter().all(|c| {
            let rays: Vec<&Vec<i64>> = c.iter().map(|&i| &self.rays[i]).collect();
            c.len() == self.dim && ray_matrix(&rays).det().abs() == Rat::from_integer(1.into())
        })
    }

    /// Star subdivision at `cone`: the toric blow-up of its orbit closure.
    pub fn star(&self, cone: &[usize]) -> Result<Fan, DualError> {
        let mut cone = cone.to_vec();
        cone.sort_unstable();
        if !self.all_cones().contains(&cone) {
            return Err(DualError::BadFan(format!("{cone:?} is not a cone")));
        }
        let mut v = vec![0i64; self.dim];
        for &i in &cone {
            for (x, y) in v.iter_mut().zip(&self.rays[i]) {
                *x += y;
            }
        }
        let g = v.iter().fold(0i64, |a, b| a.gcd(b));
        v.iter_mut().for_each(|x| *x /= g);
        let new = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(v);
        let mut cones = Vec::new();
        for c in &self.cones {
            if cone.iter().all(|i| c.contains(i)) {
                for &drop in &cone {
                    let mut d: Vec<usize> = c.iter().copied().filter(|&i| i != drop).collect();
                    d.push(new);
                    cones.push(d);
                }
            } else {
                cones.push(c.clone());
            }
        }
        Fan::new(self.dim, rays, cones)
    }

    pub fn product(&self, other: &Fan) -> Result<Fan, DualError> {
        let dim = self.dim + other.dim;
        let mut rays: Vec<Vec<i64>> =
            self.rays.iter().map(|r| r.iter().copied().chain(std::iter::repeat_n(0, other.dim)).collect()).collect();
        rays.extend(other.rays.iter().map(|r| std::iter::repeat_n(0, self.dim).chain(r.iter().copied()).collect()));
        let off = self.rays.len();
        let cones = self
            .cones
            .iter()
            .flat_map(|a| other.cones.iter().map(move |b| a.iter().copied().chain(b.iter().map(|j| j + off)).collect()))
            .collect();
        Fan::new(dim, rays, cones)
    }

    pub fn projective_space(n: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        rays.push(vec![-1; n]);
        let cones = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
        Fan::new(n, rays, cones).expect("projective space")
    }

    /// Lattice points of `{m : <m, v> >= -1 for every ray v}`, i.e. h^0(-K).
    pub fn anticanonical_sections(&self) -> Result<u64, DualError> {
        self.check_complete()?;
        let minus_one = Rat::from_integer((-1).into());
        let mut bound = 0i64;
        for c in &self.cones {
            let rays: Vec<&Vec<i64>> = c.iter().map(|&i| &self.rays[i]).collect();
            let m = ray_matrix(&rays).solve(&vec![minus_one.clone(); self.dim]).expect("full rank");
            for (j, r) in self.rays.iter().enumerate() {
                if c.contains(&j) {
                    continue;
                }
                let pairing: Rat = m.iter().zip(r).map(|(a, &b)| a * Rat::from_integer(b.into())).sum();
                if pairing <= minus_one {
                    return Err(DualError::NotFano(format!("cone {c:?} is not strictly convex against ray {j}")));
                }
            }
            for x in &m {
                bound = bound.max(x.abs().ceil().to_integer().try_into().unwrap_or(i64::MAX));
            }
        }
        let mut count = 0u64;
        let mut point = vec![-bound; self.dim];
        'outer: loop {
            if self.rays.iter().all(|r| r.iter().zip(&point).map(|(a, b)| a * b).sum::<i64>() >= -1) {
                count += 1;
            }
            for x in point.iter_mut() {
                if *x < bound {
                    *x += 1;
                    continue 'outer;
                }
                *x = -bound;
            }
            break;
        }
        Ok(count)
    }

    /// `(-K)^n` from the section count by Riemann-Roch (n = 2, 3).
    pub fn anticanonical_degree(&self) -> Result<Option<i64>, DualError> {
        let h0 = self.anticanonical_sections()? as i64;
        Ok(match self.dim {
            2 => Some(h0 - 1),
            3 => Some(2 * (h0 - 3)),
            _ => None,
        })
    }

    pub fn toric_boundary(&self) -> Result<SncConfig, DualError> {
        self.check_complete()?;
        Ok(SncConfig {
            ambient_dim: self.dim,
            components: (0..self.rays.len()).map(|i| format!("D{i}")).collect(),
            strata: self.all_cones().into_iter().map(|c| Stratum::new(&c, 1)).collect(),
        })
    }
}
