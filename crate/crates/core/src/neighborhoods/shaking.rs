use alloc::vec::Vec;

use rand::Rng;

use crate::tree::SubtreeIndex;
use crate::{BoundedTree, Instance};

/// Random perturbation: `k` times, detach a random non-center vertex from its
/// parent and hang it under a random non-descendant that keeps the tree
/// within the hop bound.
///
/// A vertex with no admissible new parent is redrawn; after `n` dead draws
/// in a row the step is given up and still counts toward `k`. Returns the
/// number of steps that actually changed the tree.
pub fn random_branch_reattaching<R: Rng + ?Sized>(
    tree: &mut BoundedTree,
    inst: &Instance,
    k: usize,
    rng: &mut R,
) -> usize {
    let n = tree.n();
    let movable: Vec<usize> = (0..n).filter(|&v| !tree.is_center(v)).collect();
    if movable.is_empty() {
        return 0;
    }
    let deepest_allowed = inst.max_level();
    let mut options = Vec::with_capacity(n);
    let mut done = 0;
    for _ in 0..k {
        let idx = SubtreeIndex::new(tree);
        for _ in 0..n {
            let v = movable[rng.gen_range(0..movable.len())];
            let p = tree.parent(v);
            let height = idx.height(v);
            options.clear();
            options.extend((0..n).filter(|&u| {
                Some(u) != p
                    && !idx.is_descendant(u, v)
                    && tree.level(u) + 1 + height <= deepest_allowed
            }));
            if !options.is_empty() {
                let u = options[rng.gen_range(0..options.len())];
                tree.reparent(inst, v, u);
                done += 1;
                break;
            }
        }
    }
    tree.resum_objective();
    done
}
