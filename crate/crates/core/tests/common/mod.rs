#![allow(dead_code)]

use std::collections::VecDeque;

use powertree_core::{BoundedTree, Instance, SolverRng};
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> SolverRng {
    SolverRng::seed_from_u64(seed)
}

pub fn random_instance(rng: &mut SolverRng, n: usize, hop_bound: usize) -> Instance {
    let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
    Instance::from_coords(pts, hop_bound).unwrap()
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_edges(rng: &mut SolverRng, n: usize) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Hop diameter by BFS from every vertex.
pub fn all_pairs_diameter(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut diameter = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        assert!(dist.iter().all(|&d| d != usize::MAX), "disconnected");
        diameter = diameter.max(*dist.iter().max().unwrap());
    }
    diameter
}

/// Level test and the independent diameter test must both pass.
pub fn assert_valid(tree: &BoundedTree, inst: &Instance) {
    assert!(tree.is_feasible(inst), "level test failed: {:?}", tree.parents());
    let edges: Vec<_> = tree.edges().collect();
    assert_eq!(edges.len(), inst.n() - 1);
    assert!(all_pairs_diameter(inst.n(), &edges) <= inst.hop_bound());
}

/// Objective recomputed from the edge list alone.
pub fn scratch_objective(tree: &BoundedTree, inst: &Instance) -> f64 {
    let mut power = vec![0.0f64; inst.n()];
    for (a, b) in tree.edges() {
        let c = inst.cost(a, b);
        power[a] = power[a].max(c);
        power[b] = power[b].max(c);
    }
    power.iter().sum()
}
