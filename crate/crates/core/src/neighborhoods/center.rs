use alloc::vec::Vec;

use crate::{BoundedTree, Instance};

/// For every vertex, the largest cost of an edge to one of its children.
pub(super) fn child_maxima(tree: &BoundedTree, inst: &Instance) -> Vec<f64> {
    (0..tree.n()).map(|v| tree.child_max(inst, v)).collect()
}

/// Objective change of replacing center `c` by the non-center `v`.
///
/// The move deletes every edge at `c` and the edge `(v, p)`, then adds
/// `(y, v)` for each other child `y` of `c`, the edge from `c` to its new
/// parent, and `(v, root)` when `c` is the second center. Only the endpoints
/// of those edges change power. Plain children of `c` keep their own children,
/// so their new power is `max(child_max, cost to v)`; the handful of special
/// vertices are re-scanned.
pub(super) fn delta(
    tree: &BoundedTree,
    inst: &Instance,
    child_max: &[f64],
    c: usize,
    v: usize,
) -> f64 {
    let p = tree.parent(v).expect("non-center vertex has a parent");
    let root = tree.root();
    let replaces_second = c != root;
    let c_new_parent = if p == c { v } else { p };

    let mut special = [usize::MAX; 4];
    let mut count = 0;
    for x in [c, v, p, root] {
        if (x != root || replaces_second || x == c) && !special[..count].contains(&x) {
            special[count] = x;
            count += 1;
        }
    }
    let special = &special[..count];

    let mut delta = 0.0;
    for &x in special {
        let row = inst.cost_row(x);
        let mut best = 0.0f64;
        if x != c {
            for y in tree.neighbors(x) {
                let removed = y == c || (x == v && y == p) || (x == p && y == v);
                if !removed {
                    best = best.max(row[y]);
                }
            }
        }
        // Edges gained by x.
        if x == v {
            for &y in tree.children(c) {
                if y != v {
                    best = best.max(row[y]);
                }
            }
            if p == c {
                best = best.max(row[c]);
            }
            if replaces_second {
                best = best.max(row[root]);
            }
        } else if tree.parent(x) == Some(c) {
            best = best.max(row[v]);
        }
        if x == c {
            best = best.max(row[c_new_parent]);
        }
        if x == p && p != c {
            best = best.max(row[c]);
        }
        if replaces_second && x == root {
            best = best.max(row[v]);
        }
        delta += best - tree.node_max(x);
    }
    let v_row = inst.cost_row(v);
    for &y in tree.children(c) {
        if !special.contains(&y) {
            delta += f64::max(child_max[y], v_row[y]) - tree.node_max(y);
        }
    }
    delta
}

/// Performs the center replacement and returns the previous tree.
pub(super) fn apply(tree: &mut BoundedTree, inst: &Instance, c: usize, v: usize) -> BoundedTree {
    let p = tree.parent(v).expect("non-center vertex has a parent");
    let root = tree.root();
    let mut parent = tree.parents().to_vec();
    for &y in tree.children(c) {
        if y != v {
            parent[y] = Some(v);
        }
    }
    let (new_root, new_second) = if c == root {
        parent[v] = None;
        (v, tree.second_center())
    } else {
        parent[v] = Some(root);
        (root, Some(v))
    };
    parent[c] = Some(if p == c { v } else { p });
    let next = BoundedTree::from_parents(inst, new_root, new_second, parent)
        .expect("center change preserves the arborescence");
    core::mem::replace(tree, next)
}
