use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::DualError;

/// Irreducible components of `∩_{i ∈ set} D_i`, given by their number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub set: Vec<usize>,
    pub count: usize,
    /// `faces[c][p]`: the copy of `set ∖ {set[p]}` containing copy `c`.
    /// Omitted means copy 0 everywhere.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<usize>>>,
}

impl Stratum {
    pub fn new(set: &[usize], count: usize) -> Self {
        Stratum { set: set.to_vec(), count, faces: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SncConfig {
    pub ambient_dim: usize,
    pub components: Vec<String>,
    pub strata: Vec<Stratum>,
}

impl SncConfig {
    /// `k` components in general position in an `n`-dimensional ambient
    /// space: every intersection of at most `n` of them is irreducible.
    pub fn general_position(n: usize, k: usize) -> Self {
        let mut strata = Vec::new();
        for mask in 1u64..(1 << k) {
            let set: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            if set.len() <= n {
                strata.push(Stratum::new(&set, 1));
            }
        }
        SncConfig { ambient_dim: n, components: (1..=k).map(|i| format!("D{i}")).collect(), strata }
    }

    /// Renames component `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> SncConfig {
        let mut components = self.components.clone();
        for (i, &p) in perm.iter().enumerate() {
            components[p] = self.components[i].clone();
        }
        let strata = self
            .strata
            .iter()
            .map(|s| {
                let mut pairs: Vec<(usize, usize)> = s.set.iter().enumerate().map(|(p, &i)| (perm[i], p)).collect();
                pairs.sort();
                let faces = s
                    .faces
                    .as_ref()
                    .map(|f| f.iter().map(|row| pairs.iter().map(|&(_, p)| row[p]).collect()).collect());
                Stratum { set: pairs.iter().map(|&(i, _)| i).collect(), count: s.count, faces }
            })
            .collect();
        SncConfig { ambient_dim: self.ambient_dim, components, strata }
    }

    fn normalized(&self) -> Result<BTreeMap<Vec<usize>, Stratum>, DualError> {
        let mut out = BTreeMap::new();
        for s in &self.strata {
            let mut set = s.set.clone();
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(DualError::EmptyStratum(s.set.clone()));
            }
            if s.count == 0 {
                return Err(DualError::ZeroCount(set));
            }
            if set.len() > self.ambient_dim {
                return Err(DualError::StratumTooBig { set, n: self.ambient_dim });
            }
            if let Some(&bad) = set.iter().find(|&&i| i >= self.components.len()) {
                return Err(DualError::UnknownComponent(bad));
            }
            if set != s.set && s.faces.is_some() {
                // face rows are indexed by position; require sorted input then
                return Err(DualError::BadFaceIndex(s.set.clone()));
            }
            let key = set.clone();
            if out.insert(key, Stratum { set, ..s.clone() }).is_some() {
                return Err(DualError::DuplicateStratum(s.set.clone()));
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub set: Vec<usize>,
    pub copy: usize,
    /// Index into the cells of one dimension lower, one per removed
    /// component, in the order of `set`.
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualComplex {
    /// `cells[d]` are the d-cells.
    pub cells: Vec<Vec<Cell>>,
}

impl DualComplex {
    pub fn build(cfg: &SncConfig) -> Result<DualComplex, DualError> {
        let strata = cfg.normalized()?;
        let top = strata.keys().map(Vec::len).max().unwrap_or(0);
        let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); top];
        // (set, copy) -> index within its dimension
        let mut index: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
        let mut by_size: Vec<&Stratum> = strata.values().collect();
        by_size.sort_by(|a, b| a.set.len().cmp(&b.set.len()).then(a.set.cmp(&b.set)));
        for s in by_size {
            let d = s.set.len() - 1;
            for c in 0..s.count {
                let mut faces = Vec::new();
                if d > 0 {
                    for p in 0..s.set.len() {
                        let mut sub = s.set.clone();
                        sub.remove(p);
                        let below = strata.get(&sub).ok_or_else(|| DualError::MissingFace(sub.clone()))?;
                        let copy = match &s.faces {
                            Some(f) => *f
                                .get(c)
                                .and_then(|row| row.get(p))
                                .ok_or_else(|| DualError::BadFaceIndex(s.set.clone()))?,
                            None => 0,
                        };
                        if copy >= below.count {
                            return Err(DualError::BadFaceIndex(s.set.clone()));
                        }
                        faces.push(index[&(sub, copy)]);
                    }
                }
                index.insert((s.set.clone(), c), cells[d].len());
                cells[d].push(Cell { set: s.set.clone(), copy: c, faces });
            }
        }
        Ok(DualComplex { cells })
    }

    pub fn empty() -> DualComplex {
        DualComplex { cells: Vec::new() }
    }

    /// Largest cell dimension, −1 for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.cells.iter().rposition(|c| !c.is_empty()).map_or(-1, |d| d as i64)
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn euler(&self) -> i64 {
        self.cells.iter().enumerate().map(|(d, c)| if d % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) }).sum()
    }

    /// Connectivity of the 1-skeleton; the empty complex counts as
    /// disconnected.
    pub fn is_connected(&self) -> bool {
        let Some(vertices) = self.cells.first() else { return false };
        if vertices.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..vertices.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in self.cells.get(1).into_iter().flatten() {
            let (a, b) = (find(&mut parent, e.faces[0]), find(&mut parent, e.faces[1]));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..vertices.len()).all(|v| find(&mut parent, v) == root)
    }

    /// Isomorphism invariant of the cell structure (colour refinement on
    /// the face poset). Equal for relabelled configurations.
    pub fn canonical_hash(&self) -> u64 {
        let h = |x: &dyn Fn(&mut DefaultHasher)| {
            let mut s = DefaultHasher::new();
            x(&mut s);
            s.finish()
        };
        let mut labels: Vec<Vec<u64>> =
            self.cells.iter().enumerate().map(|(d, cs)| vec![h(&|s| d.hash(s)); cs.len()]).collect();
        let total: usize = self.cells.iter().map(Vec::len).sum();
        for _ in 0..total.min(16) {
            let mut cofaces: Vec<Vec<Vec<u64>>> = self.cells.iter().map(|c| vec![Vec::new(); c.len()]).collect();
            for (d, cs) in self.cells.iter().enumerate().skip(1) {
                for (i, c) in cs.iter().enumerate() {
                    for &f in &c.faces {
                        cofaces[d - 1][f].push(labels[d][i]);
                    }
                }
            }
            let next: Vec<Vec<u64>> = self
                .cells
                .iter()
                .enumerate()
                .map(|(d, cs)| {
                    cs.iter()
                        .enumerate()
                        .map(|(i, c)| {
                            let mut down: Vec<u64> = c.faces.iter().map(|&f| labels[d - 1][f]).collect();
                            down.sort_unstable();
                            let mut up = cofaces[d][i].clone();
                            up.sort_unstable();
                            h(&|s| (labels[d][i], &down, &up).hash(s))
                        })
                        .collect()
                })
                .collect();
            labels = next;
        }
        let summary: Vec<BTreeSet<(u64, usize)>> = labels
            .iter()
            .map(|ls| {
                let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
                for &l in ls {
                    *counts.entry(l).or_default() += 1;
                }
                counts.into_iter().collect()
            })
            .collect();
        h(&|s| summary.hash(s))
    }
}
