use alloc::vec::Vec;

use rand::Rng;

use super::{Outcome, StopTracker};
use crate::neighborhoods::{random_branch_reattaching, vnd};
use crate::{BoundedTree, Error, Instance, Result};

pub const DEFAULT_K_MAX: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VnsParams {
    /// Largest shaking strength.
    pub k_max: usize,
}

impl Default for VnsParams {
    fn default() -> Self {
        Self {
            k_max: DEFAULT_K_MAX,
        }
    }
}

/// Variable neighborhood search.
///
/// Each iteration is a sweep over shaking strengths: shake the incumbent with
/// `k` random reattachments, descend with [`vnd`], and accept the result only
/// if it is strictly better, which resets `k` to 1; otherwise `k` grows. The
/// sweep ends once `k` exceeds `k_max`. The very first sweep starts at
/// `k = 0`, i.e. with a plain descent from the initial tree.
pub fn vns<R: Rng + ?Sized>(
    inst: &Instance,
    initial: BoundedTree,
    params: &VnsParams,
    rng: &mut R,
    tracker: &mut StopTracker,
) -> Result<Outcome> {
    if !initial.is_feasible(inst) {
        return Err(Error::InfeasibleTree);
    }
    let mut best = initial;
    let mut trace = Vec::new();
    tracker.start(best.objective());
    let mut k = 0;
    loop {
        while k <= params.k_max {
            let mut candidate = best.clone();
            random_branch_reattaching(&mut candidate, inst, k, rng);
            vnd(&mut candidate, inst);
            if candidate.objective() < best.objective() {
                best = candidate;
                k = 1;
            } else {
                k += 1;
            }
        }
        trace.push(best.objective());
        if tracker.check(best.objective()) {
            break;
        }
        k = 1;
    }
    Ok(Outcome { best, trace })
}
