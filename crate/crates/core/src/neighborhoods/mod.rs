//! Neighborhood moves on bounded trees, variable neighborhood descent and the
//! random reattachment perturbation.
//!
//! Three move kinds are supported:
//!
//! * [`MoveKind::LevelChange`] gives a non-center vertex a new parent at any
//!   level other than its current parent's, as long as its whole subtree stays
//!   within the hop bound.
//! * [`MoveKind::SameLevelParentChange`] swaps the parent for another vertex
//!   on the parent's level.
//! * [`MoveKind::CenterChange`] promotes a non-center vertex to replace one of
//!   the centers; see [`center_change_candidates`].
//!
//! Every candidate carries an exact objective delta computed from the few
//! vertices whose incident edges change.

mod center;
mod shaking;

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::tree::SubtreeIndex;
use crate::{BoundedTree, Error, Instance, Result};

pub use shaking::random_branch_reattaching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    LevelChange,
    SameLevelParentChange,
    CenterChange,
}

impl MoveKind {
    /// Descent order used by [`vnd`].
    pub const ALL: [MoveKind; 3] = [
        MoveKind::LevelChange,
        MoveKind::SameLevelParentChange,
        MoveKind::CenterChange,
    ];
}

/// A candidate move.
///
/// For the two reparenting kinds `vertex` is the vertex being moved and
/// `target` its new parent. For [`MoveKind::CenterChange`] `vertex` is the
/// center being replaced and `target` the vertex taking its place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Move {
    pub kind: MoveKind,
    pub vertex: usize,
    pub target: usize,
    pub delta: f64,
}

/// Everything needed to take back an applied [`Move`].
#[derive(Debug, Clone)]
pub struct Undo(UndoInner);

#[derive(Debug, Clone)]
enum UndoInner {
    Reparent {
        vertex: usize,
        old_parent: usize,
        position: usize,
        objective: f64,
    },
    Replace(Box<BoundedTree>),
}

/// Feasible `LevelChange` moves for non-center `v`.
pub fn level_change_candidates(tree: &BoundedTree, inst: &Instance, v: usize) -> Result<Vec<Move>> {
    reparent_candidates(tree, inst, v, MoveKind::LevelChange)
}

/// `SameLevelParentChange` moves for non-center `v`.
pub fn same_level_parent_candidates(
    tree: &BoundedTree,
    inst: &Instance,
    v: usize,
) -> Result<Vec<Move>> {
    reparent_candidates(tree, inst, v, MoveKind::SameLevelParentChange)
}

fn reparent_candidates(
    tree: &BoundedTree,
    inst: &Instance,
    v: usize,
    kind: MoveKind,
) -> Result<Vec<Move>> {
    if tree.is_center(v) {
        return Err(Error::CenterVertex(v));
    }
    let idx = SubtreeIndex::new(tree);
    let mut out = Vec::new();
    scan_reparent(tree, inst, &idx, v, kind, |m| out.push(m));
    Ok(out)
}

/// One `CenterChange` move per (center, non-center vertex) pair.
///
/// Replacing center `c` by `v` rewires the tree in four steps: the children
/// of `c` move under `v`; `v` leaves its parent `p`; `v` becomes the root if
/// `c` was the root, otherwise the second center under the root; finally `c`
/// hangs under `p`, or under `v` when `p == c`. No vertex ends up deeper than
/// `v` was, so every such move keeps the tree feasible.
pub fn center_change_candidates(tree: &BoundedTree, inst: &Instance) -> Vec<Move> {
    let child_max = center::child_maxima(tree, inst);
    let mut out = Vec::new();
    for c in tree.centers() {
        for v in 0..tree.n() {
            if !tree.is_center(v) {
                out.push(Move {
                    kind: MoveKind::CenterChange,
                    vertex: c,
                    target: v,
                    delta: center::delta(tree, inst, &child_max, c, v),
                });
            }
        }
    }
    out
}

/// Calls `emit` for each feasible reparenting of `v` of the given kind.
fn scan_reparent(
    tree: &BoundedTree,
    inst: &Instance,
    idx: &SubtreeIndex,
    v: usize,
    kind: MoveKind,
    mut emit: impl FnMut(Move),
) {
    let p = tree.parent(v).expect("non-center vertex has a parent");
    let lv = tree.level(v);
    let deepest_allowed = inst.max_level();
    let height = idx.height(v);
    let row = inst.cost_row(v);
    let p_row = inst.cost_row(p);

    let v_without_p = tree.child_max(inst, v);
    let p_without_v = tree
        .neighbors(p)
        .filter(|&u| u != v)
        .fold(0.0, |m, u| f64::max(m, p_row[u]));
    let base = (p_without_v - tree.node_max(p)) - tree.node_max(v);

    for u in 0..tree.n() {
        if u == p || idx.is_descendant(u, v) {
            continue;
        }
        let lu = tree.level(u);
        let admissible = match kind {
            MoveKind::SameLevelParentChange => lu + 1 == lv,
            MoveKind::LevelChange => lu + 1 != lv && lu + 1 + height <= deepest_allowed,
            MoveKind::CenterChange => unreachable!(),
        };
        if !admissible {
            continue;
        }
        let c = row[u];
        let u_max = tree.node_max(u);
        let delta = f64::max(v_without_p, c) + base + (f64::max(u_max, c) - u_max);
        emit(Move {
            kind,
            vertex: v,
            target: u,
            delta,
        });
    }
}

/// Applies `mv` and returns the token that reverts it.
pub fn apply_move(tree: &mut BoundedTree, inst: &Instance, mv: &Move) -> Undo {
    match mv.kind {
        MoveKind::LevelChange | MoveKind::SameLevelParentChange => {
            let objective = tree.objective();
            let (old_parent, position) = tree.reparent(inst, mv.vertex, mv.target);
            Undo(UndoInner::Reparent {
                vertex: mv.vertex,
                old_parent,
                position,
                objective,
            })
        }
        MoveKind::CenterChange => {
            let replaced = center::apply(tree, inst, mv.vertex, mv.target);
            Undo(UndoInner::Replace(Box::new(replaced)))
        }
    }
}

/// Restores the tree to its state before the matching [`apply_move`].
pub fn revert_move(tree: &mut BoundedTree, inst: &Instance, undo: Undo) {
    match undo.0 {
        UndoInner::Reparent {
            vertex,
            old_parent,
            position,
            objective,
        } => {
            tree.reparent_back(inst, vertex, old_parent, position);
            tree.set_objective(objective);
        }
        UndoInner::Replace(previous) => *tree = *previous,
    }
}

/// Best-improvement step in one neighborhood.
///
/// Scans every candidate of `kind` and applies the one with the smallest
/// delta if that delta is strictly negative. Returns whether a move was made.
pub fn local_search(tree: &mut BoundedTree, inst: &Instance, kind: MoveKind) -> bool {
    match best_move(tree, inst, kind) {
        Some(mv) if mv.delta < 0.0 => {
            apply_move(tree, inst, &mv);
            true
        }
        _ => false,
    }
}

/// Lowest-delta candidate of `kind`; ties keep the first in scan order.
pub fn best_move(tree: &BoundedTree, inst: &Instance, kind: MoveKind) -> Option<Move> {
    let mut best: Option<Move> = None;
    let mut keep = |m: Move| {
        if best.is_none_or(|b| m.delta < b.delta) {
            best = Some(m);
        }
    };
    match kind {
        MoveKind::CenterChange => {
            let child_max = center::child_maxima(tree, inst);
            for c in tree.centers() {
                for v in (0..tree.n()).filter(|&v| !tree.is_center(v)) {
                    keep(Move {
                        kind,
                        vertex: c,
                        target: v,
                        delta: center::delta(tree, inst, &child_max, c, v),
                    });
                }
            }
        }
        _ => {
            let idx = SubtreeIndex::new(tree);
            for v in (0..tree.n()).filter(|&v| !tree.is_center(v)) {
                scan_reparent(tree, inst, &idx, v, kind, &mut keep);
            }
        }
    }
    best
}

/// Variable neighborhood descent over [`MoveKind::ALL`].
///
/// Runs local search in the first neighborhood until it stalls, then moves to
/// the next one; any improvement sends the descent back to the first
/// neighborhood. Ends in a local optimum for all three. Returns the number of
/// improving moves applied.
pub fn vnd(tree: &mut BoundedTree, inst: &Instance) -> usize {
    let mut moves = 0;
    let mut l = 0;
    while l < MoveKind::ALL.len() {
        if local_search(tree, inst, MoveKind::ALL[l]) {
            moves += 1;
            l = 0;
        } else {
            l += 1;
        }
    }
    tree.resum_objective();
    moves
}
