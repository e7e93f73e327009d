use alloc::vec::Vec;

use rand::Rng;

use super::{roulette, Outcome, StopTracker};
use crate::constructive::randomized_construct;
use crate::neighborhoods::{random_branch_reattaching, vnd};
use crate::{decode_levels, encode_levels, BoundedTree, Error, Instance, LevelArray, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlsParams {
    pub pop_size: usize,
    /// Offspring per generation, one per selected pair.
    pub offspring_size: usize,
    pub mutation_prob: f64,
    pub local_search_prob: f64,
}

impl Default for GlsParams {
    fn default() -> Self {
        Self {
            pop_size: 75,
            offspring_size: 40,
            mutation_prob: 0.5,
            local_search_prob: 0.5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Member {
    pub tree: BoundedTree,
    /// `1 / W(tree)`.
    pub fitness: f64,
}

impl Member {
    pub fn new(tree: BoundedTree) -> Self {
        let fitness = 1.0 / tree.objective();
        Self { tree, fitness }
    }
}

/// Population kept sorted by decreasing fitness.
#[derive(Debug, Clone)]
pub struct Population {
    members: Vec<Member>,
    capacity: usize,
}

impl Population {
    pub fn new(trees: Vec<BoundedTree>, capacity: usize) -> Result<Self> {
        let mut pop = Self {
            members: Vec::with_capacity(capacity),
            capacity,
        };
        pop.join(trees);
        if pop.members.len() < 2 {
            return Err(Error::PopulationTooSmall(pop.members.len()));
        }
        Ok(pop)
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn best(&self) -> &Member {
        &self.members[0]
    }

    /// Keeps the `capacity` fittest of the current members and `offspring`.
    /// Equal objectives are not merged; on equal fitness incumbents come first.
    pub fn join(&mut self, offspring: Vec<BoundedTree>) {
        self.members.extend(offspring.into_iter().map(Member::new));
        self.members
            .sort_by(|a, b| b.fitness.total_cmp(&a.fitness));
        self.members.truncate(self.capacity);
    }
}

/// Fitness-proportional parent pairs, as member indices.
///
/// The first member of each pair is drawn from the whole population, the
/// second from the rest, so a pair never repeats a member.
pub fn gls_select_pairs<R: Rng + ?Sized>(
    pop: &Population,
    count: usize,
    rng: &mut R,
) -> Result<Vec<(usize, usize)>> {
    if pop.len() < 2 {
        return Err(Error::PopulationTooSmall(pop.len()));
    }
    let mut weights: Vec<f64> = pop.members.iter().map(|m| m.fitness).collect();
    let mut pairs = Vec::with_capacity(count);
    for _ in 0..count {
        let first = roulette(&weights, rng);
        let saved = core::mem::replace(&mut weights[first], 0.0);
        let second = roulette(&weights, rng);
        weights[first] = saved;
        pairs.push((first, second));
    }
    Ok(pairs)
}

/// Uniform crossover on level arrays.
///
/// The child's centers are copied from one parent picked by a fair coin;
/// every other position takes the value of a coin-flipped parent, with an
/// inherited 0 turned into 1 since the centers are already fixed.
pub fn gls_crossover<R: Rng + ?Sized>(
    a: &LevelArray,
    b: &LevelArray,
    rng: &mut R,
) -> Result<LevelArray> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let center_source = if rng.gen_bool(0.5) { a } else { b };
    let mut child = alloc::vec![usize::MAX; a.len()];
    for c in center_source.centers() {
        child[c] = 0;
    }
    for (i, slot) in child.iter_mut().enumerate() {
        if *slot == 0 {
            continue;
        }
        let value = if rng.gen_bool(0.5) { a[i] } else { b[i] };
        *slot = value.max(1);
    }
    Ok(LevelArray::from_raw(child))
}

/// Mutation strength: `k` in `1..=floor(n/3)` with probability proportional
/// to `1/k`. Instances with fewer than 3 vertices always get 1.
pub fn gls_mutation_k<R: Rng + ?Sized>(n: usize, rng: &mut R) -> usize {
    let top = n / 3;
    if top <= 1 {
        return 1;
    }
    let weights: Vec<f64> = (1..=top).map(|k| 1.0 / k as f64).collect();
    roulette(&weights, rng) + 1
}

/// Genetic local search.
///
/// The population starts from `seeds`, padded with randomized constructions
/// up to `pop_size`. Each generation selects `offspring_size` pairs, crosses
/// their level arrays, decodes the child, mutates it with probability
/// `mutation_prob` and improves it with [`vnd`] with probability
/// `local_search_prob`, then keeps the fittest `pop_size` trees.
pub fn gls<R: Rng + ?Sized>(
    inst: &Instance,
    seeds: Vec<BoundedTree>,
    params: &GlsParams,
    rng: &mut R,
    tracker: &mut StopTracker,
) -> Result<Outcome> {
    if seeds.is_empty() {
        return Err(Error::NoSeeds);
    }
    if seeds.iter().any(|t| !t.is_feasible(inst)) {
        return Err(Error::InfeasibleTree);
    }
    let mut first = seeds;
    while first.len() < params.pop_size {
        first.push(randomized_construct(inst, rng));
    }
    let mut pop = Population::new(first, params.pop_size)?;
    let n = inst.n();
    let mut trace = Vec::new();
    tracker.start(pop.best().tree.objective());
    loop {
        let pairs = gls_select_pairs(&pop, params.offspring_size, rng)?;
        let mut offspring = Vec::with_capacity(pairs.len());
        for (i, j) in pairs {
            let a = encode_levels(&pop.members[i].tree);
            let b = encode_levels(&pop.members[j].tree);
            let child = gls_crossover(&a, &b, rng)?;
            let mut tree = decode_levels(&child, inst)?;
            if rng.gen_bool(params.mutation_prob) {
                let k = gls_mutation_k(n, rng);
                random_branch_reattaching(&mut tree, inst, k, rng);
            }
            if rng.gen_bool(params.local_search_prob) {
                vnd(&mut tree, inst);
            }
            offspring.push(tree);
        }
        pop.join(offspring);
        let best = pop.best().tree.objective();
        trace.push(best);
        if tracker.check(best) {
            break;
        }
    }
    Ok(Outcome {
        best: pop.members.swap_remove(0).tree,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SolverRng;
    use alloc::vec;
    use rand::SeedableRng;

    #[test]
    fn identical_parents_give_identical_child() {
        let inst = Instance::from_coords((0..6).map(|i| (i as f64, 0.0)), 5).unwrap();
        let a = LevelArray::new(vec![1, 0, 0, 2, 1, 2], &inst).unwrap();
        let mut rng = SolverRng::seed_from_u64(0);
        for _ in 0..20 {
            assert_eq!(gls_crossover(&a, &a, &mut rng).unwrap(), a);
        }
    }

    #[test]
    fn inherited_zero_becomes_one() {
        let inst = Instance::from_coords((0..4).map(|i| (i as f64, 0.0)), 4).unwrap();
        let a = LevelArray::new(vec![0, 1, 2, 2], &inst).unwrap();
        let b = LevelArray::new(vec![2, 0, 1, 1], &inst).unwrap();
        let mut rng = SolverRng::seed_from_u64(5);
        for _ in 0..50 {
            let child = gls_crossover(&a, &b, &mut rng).unwrap();
            let centers: Vec<usize> = child.centers().collect();
            assert!(centers == [0] || centers == [1]);
            if centers == [1] {
                assert_ne!(child[0], 0);
            }
            assert!(LevelArray::new(child.into_vec(), &inst).is_ok());
        }
    }

    #[test]
    fn mutation_k_small_n() {
        let mut rng = SolverRng::seed_from_u64(1);
        for n in [2, 3, 4, 5] {
            assert_eq!(gls_mutation_k(n, &mut rng), 1);
        }
        for _ in 0..1000 {
            let k = gls_mutation_k(20, &mut rng);
            assert!((1..=6).contains(&k));
        }
    }

    #[test]
    fn pair_of_two_members() {
        let inst = Instance::from_coords([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)], 2).unwrap();
        let t1 = BoundedTree::from_parents(&inst, 0, None, vec![None, Some(0), Some(0)]).unwrap();
        let t2 = BoundedTree::from_parents(&inst, 1, None, vec![Some(1), None, Some(1)]).unwrap();
        let pop = Population::new(vec![t1, t2], 2).unwrap();
        let mut rng = SolverRng::seed_from_u64(2);
        for (a, b) in gls_select_pairs(&pop, 100, &mut rng).unwrap() {
            assert_ne!(a, b);
            assert_eq!(a + b, 1);
        }
    }

    #[test]
    fn population_needs_two_members() {
        let inst = Instance::from_coords([(0.0, 0.0), (1.0, 0.0)], 2).unwrap();
        let t = BoundedTree::from_parents(&inst, 0, None, vec![None, Some(0)]).unwrap();
        assert_eq!(
            Population::new(vec![t], 5).unwrap_err(),
            Error::PopulationTooSmall(1)
        );
    }

    #[test]
    fn fitness_is_reciprocal_objective() {
        let inst = Instance::from_coords([(0.0, 0.0), (0.3, 0.0), (0.0, 0.6)], 2).unwrap();
        let t = BoundedTree::from_parents(&inst, 0, None, vec![None, Some(0), Some(0)]).unwrap();
        let m = Member::new(t);
        assert!((m.fitness * m.tree.objective() - 1.0).abs() < 1e-12);
    }
}
