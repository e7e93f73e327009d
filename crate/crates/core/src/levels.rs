//! Vertex-level encoding of bounded trees.
//!
//! A [`LevelArray`] assigns each vertex a level in `0..=floor(D/2)`, with one
//! zero for even `D` and two for odd `D`. Genetic crossover and ant paths both
//! work on this encoding; [`decode_levels`] turns an array back into a tree.

use alloc::vec;
use alloc::vec::Vec;

use crate::{BoundedTree, Error, Instance, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelArray {
    levels: Vec<usize>,
}

impl LevelArray {
    /// Validates `levels` against the size and hop bound of `inst`.
    pub fn new(levels: Vec<usize>, inst: &Instance) -> Result<Self> {
        if levels.len() != inst.n() {
            return Err(Error::SizeMismatch {
                expected: inst.n(),
                found: levels.len(),
            });
        }
        if levels.iter().any(|&l| l > inst.max_level()) {
            return Err(Error::MalformedLevels("level above floor(D/2)"));
        }
        let zeros = levels.iter().filter(|&&l| l == 0).count();
        let expected = if inst.has_two_centers() { 2 } else { 1 };
        if zeros != expected {
            return Err(Error::MalformedLevels("center count does not match hop bound parity"));
        }
        Ok(Self { levels })
    }

    /// Wraps levels already known to satisfy the invariants.
    pub(crate) fn from_raw(levels: Vec<usize>) -> Self {
        Self { levels }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.levels
    }

    /// Positions holding 0, in increasing vertex order.
    pub fn centers(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == 0)
            .map(|(i, _)| i)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.levels
    }
}

impl core::ops::Index<usize> for LevelArray {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.levels[i]
    }
}

/// Levels of a feasible tree, indexed by vertex id.
pub fn encode_levels(tree: &BoundedTree) -> LevelArray {
    LevelArray {
        levels: tree.levels().to_vec(),
    }
}

/// Greedy decoding of a level array.
///
/// The smallest-id zero entry becomes the root and the other zero entry, if
/// any, the second center. Remaining vertices are placed in increasing
/// `(level, id)` order; each picks, among vertices with a strictly smaller
/// array level, the parent that adds the least to the objective:
/// `c + max(0, c - power(parent))` for edge cost `c`. Ties go to the smaller
/// parent id.
///
/// Stored levels are the true depths of the result, which can be smaller than
/// the array entries.
pub fn decode_levels(arr: &LevelArray, inst: &Instance) -> Result<BoundedTree> {
    let n = inst.n();
    if arr.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: arr.len(),
        });
    }
    let mut centers = arr.centers();
    let root = centers
        .next()
        .ok_or(Error::MalformedLevels("no center"))?;
    let second = centers.next();
    if centers.next().is_some() || second.is_some() != inst.has_two_centers() {
        return Err(Error::MalformedLevels("center count does not match hop bound parity"));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (arr[v], v));

    let mut parent = vec![None; n];
    let mut power = vec![0.0f64; n];
    if let Some(s) = second {
        parent[s] = Some(root);
        let c = inst.cost(root, s);
        power[root] = c;
        power[s] = c;
    }
    let placed_centers = 1 + usize::from(second.is_some());
    // `order[..k]` holds every vertex with a smaller array level than `order[k]`
    // once `k` passes the first vertex of that level.
    let mut level_start = placed_centers;
    for k in placed_centers..n {
        let v = order[k];
        if arr[order[level_start]] != arr[v] {
            level_start = k;
        }
        let row = inst.cost_row(v);
        let mut best = usize::MAX;
        let mut best_inc = f64::INFINITY;
        for &u in &order[..level_start] {
            let c = row[u];
            let inc = c + f64::max(0.0, c - power[u]);
            if inc < best_inc || (inc == best_inc && u < best) {
                best_inc = inc;
                best = u;
            }
        }
        parent[v] = Some(best);
        power[v] = row[best];
        power[best] = power[best].max(row[best]);
    }
    BoundedTree::from_parents(inst, root, second, parent)
}
