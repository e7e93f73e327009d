use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Instance, Result};

/// A spanning tree stored as an arborescence rooted at its center.
///
/// When the hop bound is odd the tree has a second center, attached directly
/// to the root, which also sits at level 0. Every other vertex is one level
/// below its parent. The tree is feasible exactly when no level exceeds
/// `floor(D / 2)`.
///
/// `node_max` caches, for each vertex, the cost of its most expensive
/// incident tree edge; `objective` is their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundedTree {
    root: usize,
    second_center: Option<usize>,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    children: Vec<Vec<usize>>,
    node_max: Vec<f64>,
    objective: f64,
}

impl BoundedTree {
    /// Builds a tree from explicit parent links. Levels and cost caches are
    /// derived; the hop bound is not checked (see [`BoundedTree::is_feasible`]).
    pub fn from_parents(
        inst: &Instance,
        root: usize,
        second_center: Option<usize>,
        parent: Vec<Option<usize>>,
    ) -> Result<Self> {
        let n = inst.n();
        if parent.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: parent.len(),
            });
        }
        if root >= n || parent[root].is_some() {
            return Err(Error::MalformedTree("root must exist and have no parent"));
        }
        if let Some(s) = second_center {
            if s >= n || s == root || parent[s] != Some(root) {
                return Err(Error::MalformedTree("second center must hang off the root"));
            }
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            match *p {
                None if v != root => return Err(Error::MalformedTree("orphan vertex")),
                None => {}
                Some(p) if p >= n || p == v => {
                    return Err(Error::MalformedTree("parent out of range"))
                }
                Some(p) => children[p].push(v),
            }
        }
        let level = levels_from(&children, root, second_center, n)
            .ok_or(Error::MalformedTree("cycle or unreachable vertex"))?;
        let node_max = node_max_from(&parent, inst);
        let objective = node_max.iter().sum();
        Ok(Self {
            root,
            second_center,
            parent,
            level,
            children,
            node_max,
            objective,
        })
    }

    /// Orients an undirected spanning tree around its center(s).
    ///
    /// The center is taken from the middle of a longest path. For odd `D` and
    /// an even diameter the smallest-id neighbour of the middle vertex becomes
    /// the second center; for even `D` and an odd diameter the lower middle
    /// vertex is the root.
    pub fn from_edges(inst: &Instance, edges: &[(usize, usize)]) -> Result<Self> {
        let n = inst.n();
        if edges.len() + 1 != n {
            return Err(Error::MalformedTree("a spanning tree has n - 1 edges"));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::MalformedTree("bad edge endpoint"));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        let (far, _) = bfs_far(&adj, 0).ok_or(Error::MalformedTree("disconnected edge set"))?;
        let (other, prev) = bfs_far(&adj, far).ok_or(Error::MalformedTree("disconnected"))?;
        let mut path = vec![other];
        while let Some(p) = prev[*path.last().unwrap()] {
            path.push(p);
        }
        let diameter = path.len() - 1;
        let (root, second) = match (inst.has_two_centers(), diameter % 2 == 1) {
            (true, true) => (path[(diameter - 1) / 2], Some(path[diameter.div_ceil(2)])),
            (true, false) => {
                let r = path[diameter / 2];
                (r, Some(adj[r][0]))
            }
            (false, true) => (path[(diameter - 1) / 2], None),
            (false, false) => (path[diameter / 2], None),
        };
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        Self::from_parents(inst, root, second, parent)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn root(&self) -> usize {
        self.root
    }

    #[inline]
    pub fn second_center(&self) -> Option<usize> {
        self.second_center
    }

    pub fn centers(&self) -> impl Iterator<Item = usize> + '_ {
        core::iter::once(self.root).chain(self.second_center)
    }

    #[inline]
    pub fn is_center(&self, v: usize) -> bool {
        v == self.root || Some(v) == self.second_center
    }

    #[inline]
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    #[inline]
    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Tree neighbours of `v`: its parent (if any) followed by its children.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.parent[v]
            .into_iter()
            .chain(self.children[v].iter().copied())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    /// Cached power of `v`: the largest cost among its incident tree edges.
    #[inline]
    pub fn node_max(&self, v: usize) -> f64 {
        self.node_max[v]
    }

    pub fn node_maxima(&self) -> &[f64] {
        &self.node_max
    }

    /// Cached total power `W(T)`.
    #[inline]
    pub fn objective(&self) -> f64 {
        self.objective
    }

    pub fn max_depth(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }

    /// Edges as `(child, parent)` pairs in vertex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v, p)))
    }

    /// Recomputes the power caches and the objective from scratch.
    pub fn refresh_objective(&mut self, inst: &Instance) -> Result<f64> {
        if inst.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: inst.n(),
                found: self.n(),
            });
        }
        self.node_max = node_max_from(&self.parent, inst);
        self.objective = self.node_max.iter().sum();
        Ok(self.objective)
    }

    /// Checks the level structure against the parent links alone and the
    /// hop bound of `inst`. Never trusts the cached children or levels.
    pub fn is_feasible(&self, inst: &Instance) -> bool {
        let n = self.n();
        if inst.n() != n || self.root >= n || self.parent[self.root].is_some() {
            return false;
        }
        if self.second_center.is_some() != inst.has_two_centers() {
            return false;
        }
        if let Some(s) = self.second_center {
            if s >= n || s == self.root || self.parent[s] != Some(self.root) {
                return false;
            }
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in self.parent.iter().enumerate() {
            match *p {
                Some(p) if p < n && p != v => children[p].push(v),
                None if v == self.root => {}
                _ => return false,
            }
        }
        let Some(depth) = levels_from(&children, self.root, self.second_center, n) else {
            return false;
        };
        depth == self.level && depth.iter().all(|&l| l <= inst.max_level())
    }

    /// Moves `v` (with its subtree) under `new_parent`, keeping every cache
    /// exact. Returns the old parent and the old position of `v` among its
    /// children so the move can be undone.
    pub(crate) fn reparent(&mut self, inst: &Instance, v: usize, new_parent: usize) -> (usize, usize) {
        let old_parent = self.parent[v].expect("cannot reparent the root");
        let pos = self.children[old_parent]
            .iter()
            .position(|&c| c == v)
            .expect("child list out of sync");
        self.children[old_parent].remove(pos);
        self.children[new_parent].push(v);
        self.attach(inst, v, old_parent, new_parent);
        (old_parent, pos)
    }

    /// Inverse of [`BoundedTree::reparent`], restoring the child order too.
    pub(crate) fn reparent_back(&mut self, inst: &Instance, v: usize, old_parent: usize, pos: usize) {
        let current = self.parent[v].expect("cannot reparent the root");
        let at = self.children[current]
            .iter()
            .position(|&c| c == v)
            .expect("child list out of sync");
        self.children[current].remove(at);
        self.children[old_parent].insert(pos, v);
        self.attach(inst, v, current, old_parent);
    }

    fn attach(&mut self, inst: &Instance, v: usize, from: usize, to: usize) {
        self.parent[v] = Some(to);
        let new_level = self.level[to] + 1;
        if new_level != self.level[v] {
            let shift = new_level as isize - self.level[v] as isize;
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                self.level[u] = (self.level[u] as isize + shift) as usize;
                stack.extend_from_slice(&self.children[u]);
            }
        }
        let mut delta = 0.0;
        for x in [v, from, to] {
            let fresh = self.incident_max(inst, x);
            delta += fresh - self.node_max[x];
            self.node_max[x] = fresh;
        }
        self.objective += delta;
    }

    /// Re-sums the cached node powers, dropping rounding drift left by
    /// incremental updates. Equal trees then carry bit-identical objectives.
    pub(crate) fn resum_objective(&mut self) {
        self.objective = self.node_max.iter().sum();
    }

    pub(crate) fn set_objective(&mut self, objective: f64) {
        self.objective = objective;
    }

    /// Largest incident edge cost of `v` computed from the current links.
    pub(crate) fn incident_max(&self, inst: &Instance, v: usize) -> f64 {
        let row = inst.cost_row(v);
        self.neighbors(v).fold(0.0, |m, u| m.max(row[u]))
    }

    /// Largest cost among the edges from `v` to its children.
    pub(crate) fn child_max(&self, inst: &Instance, v: usize) -> f64 {
        let row = inst.cost_row(v);
        self.children[v].iter().fold(0.0, |m, &u| m.max(row[u]))
    }
}

/// Euler-tour times and subtree heights, valid for one tree state.
pub(crate) struct SubtreeIndex {
    tin: Vec<u32>,
    tout: Vec<u32>,
    height: Vec<usize>,
}

impl SubtreeIndex {
    pub(crate) fn new(tree: &BoundedTree) -> Self {
        let n = tree.n();
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut height = vec![0; n];
        let mut clock = 0u32;
        // (vertex, next child index)
        let mut stack: Vec<(usize, usize)> = vec![(tree.root, 0)];
        tin[tree.root] = clock;
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&c) = tree.children[u].get(*next) {
                *next += 1;
                clock += 1;
                tin[c] = clock;
                stack.push((c, 0));
            } else {
                tout[u] = clock;
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    height[p] = height[p].max(height[u] + 1);
                }
            }
        }
        Self { tin, tout, height }
    }

    /// True when `u` lies in the subtree of `v` (including `u == v`).
    #[inline]
    pub(crate) fn is_descendant(&self, u: usize, v: usize) -> bool {
        self.tin[v] <= self.tin[u] && self.tout[u] <= self.tout[v]
    }

    /// Depth of the subtree below `v`, in edges.
    #[inline]
    pub(crate) fn height(&self, v: usize) -> usize {
        self.height[v]
    }
}

fn levels_from(
    children: &[Vec<usize>],
    root: usize,
    second_center: Option<usize>,
    n: usize,
) -> Option<Vec<usize>> {
    let mut level = vec![usize::MAX; n];
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &c in &children[u] {
            if level[c] != usize::MAX {
                return None;
            }
            level[c] = if Some(c) == second_center { 0 } else { level[u] + 1 };
            reached += 1;
            queue.push_back(c);
        }
    }
    (reached == n).then_some(level)
}

fn node_max_from(parent: &[Option<usize>], inst: &Instance) -> Vec<f64> {
    let mut node_max = vec![0.0; parent.len()];
    for (v, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            let c = inst.cost(v, p);
            node_max[v] = f64::max(node_max[v], c);
            node_max[p] = f64::max(node_max[p], c);
        }
    }
    node_max
}

/// Breadth-first search returning the last vertex reached and the BFS
/// predecessor array, or `None` when the graph is disconnected.
fn bfs_far(adj: &[Vec<usize>], start: usize) -> Option<(usize, Vec<Option<usize>>)> {
    let n = adj.len();
    let mut prev = vec![None; n];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut last = start;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        last = u;
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some(u);
                count += 1;
                queue.push_back(w);
            }
        }
    }
    (count == n).then_some((last, prev))
}
