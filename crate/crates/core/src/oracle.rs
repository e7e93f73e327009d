//! Exhaustive reference solvers for small instances.
//!
//! These deliberately share no code with the heuristics: trees are
//! enumerated as Prüfer sequences, costs are summed from raw edge lists and
//! hop diameters come from breadth-first search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{BoundedTree, Error, Instance, LevelArray, Result};

/// Largest instance the oracle accepts; `8^6 = 262_144` labelled trees.
pub const ORACLE_MAX_N: usize = 8;

#[derive(Debug, Clone)]
pub struct ExactSolution {
    pub objective: f64,
    pub tree: BoundedTree,
    /// Labelled trees visited, `n^(n-2)`.
    pub enumerated: u64,
    /// How many of them satisfy the hop bound.
    pub feasible: u64,
}

/// Minimum-power spanning tree with hop diameter at most `D`, by enumerating
/// every labelled tree. Ties keep the lexicographically first Prüfer sequence.
pub fn exact_optimum(inst: &Instance) -> Result<ExactSolution> {
    let n = inst.n();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLargeForOracle {
            n,
            limit: ORACLE_MAX_N,
        });
    }
    let mut best: Option<(f64, Vec<(usize, usize)>)> = None;
    let mut enumerated = 0u64;
    let mut feasible = 0u64;
    let mut seq = vec![0usize; n - 2];
    loop {
        enumerated += 1;
        let edges = prufer_edges(&seq, n);
        if diameter_of(&adjacency(&edges, n)) <= inst.hop_bound() {
            feasible += 1;
            let w = edge_list_objective(&edges, inst);
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, edges));
            }
        }
        // Odometer increment over {0..n}^(n-2).
        let mut i = seq.len();
        loop {
            if i == 0 {
                let (objective, edges) = best.ok_or(Error::NoFeasibleTree {
                    n,
                    hop_bound: inst.hop_bound(),
                })?;
                let tree = BoundedTree::from_edges(inst, &edges)?;
                return Ok(ExactSolution {
                    objective,
                    tree,
                    enumerated,
                    feasible,
                });
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// Best objective reachable by any parent assignment that respects a level
/// array the way decoding does: the zero entries are the centers and every
/// other vertex hangs under some vertex with a strictly smaller entry.
pub fn exact_decode_check(arr: &LevelArray, inst: &Instance) -> Result<f64> {
    let n = inst.n();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLargeForOracle {
            n,
            limit: ORACLE_MAX_N,
        });
    }
    if arr.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: arr.len(),
        });
    }
    let levels = arr.as_slice();
    let centers: Vec<usize> = arr.centers().collect();
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    if let [a, b] = centers[..] {
        fixed.push((b, a));
    }
    let free: Vec<usize> = (0..n).filter(|&v| levels[v] != 0).collect();
    let options: Vec<Vec<usize>> = free
        .iter()
        .map(|&v| (0..n).filter(|&u| levels[u] < levels[v]).collect())
        .collect();
    let mut choice = vec![0usize; free.len()];
    let mut best = f64::INFINITY;
    loop {
        let mut edges = fixed.clone();
        edges.extend(
            free.iter()
                .zip(&choice)
                .enumerate()
                .map(|(i, (&v, &k))| (v, options[i][k])),
        );
        best = best.min(edge_list_objective(&edges, inst));
        let mut i = choice.len();
        loop {
            if i == 0 {
                return Ok(best);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Longest hop distance between two vertices of `tree`, via double BFS.
pub fn hop_diameter(tree: &BoundedTree) -> usize {
    let edges: Vec<(usize, usize)> = tree.edges().collect();
    diameter_of(&adjacency(&edges, tree.n()))
}

/// Total power of an edge list, summed independently of any tree cache.
pub fn edge_list_objective(edges: &[(usize, usize)], inst: &Instance) -> f64 {
    let mut power = vec![0.0f64; inst.n()];
    for &(a, b) in edges {
        let c = inst.cost(a, b);
        power[a] = power[a].max(c);
        power[b] = power[b].max(c);
    }
    power.iter().sum()
}

fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn adjacency(edges: &[(usize, usize)], n: usize) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn farthest(adj: &[Vec<usize>], start: usize) -> (usize, usize) {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut far = (start, 0);
    while let Some(u) = queue.pop_front() {
        if dist[u] > far.1 {
            far = (u, dist[u]);
        }
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    far
}

fn diameter_of(adj: &[Vec<usize>]) -> usize {
    let (a, _) = farthest(adj, 0);
    farthest(adj, a).1
}
