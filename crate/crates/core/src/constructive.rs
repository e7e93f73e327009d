//! Initial feasible solutions.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::{BoundedTree, Instance};

/// Where [`greedy_hop_bounded`] puts the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CenterChoice {
    /// The vertex nearest to the centroid of the point set.
    #[default]
    Auto,
    Vertex(usize),
}

/// Cost increase of hanging a new leaf under `parent` whose current power is
/// `parent_power`: the leaf pays the full edge, the parent only the excess.
#[inline]
fn increment(edge: f64, parent_power: f64) -> f64 {
    edge + f64::max(0.0, edge - parent_power)
}

/// Second center for odd hop bounds: the vertex cheapest to connect to the root.
fn nearest_to(inst: &Instance, root: usize) -> usize {
    let row = inst.cost_row(root);
    (0..inst.n())
        .filter(|&j| j != root)
        .min_by(|&a, &b| row[a].total_cmp(&row[b]).then(a.cmp(&b)))
        .expect("instance has at least two points")
}

struct Growth {
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    power: Vec<f64>,
    attached: Vec<bool>,
}

impl Growth {
    fn new(inst: &Instance, root: usize, second: Option<usize>) -> Self {
        let n = inst.n();
        let mut g = Self {
            parent: vec![None; n],
            level: vec![0; n],
            power: vec![0.0; n],
            attached: vec![false; n],
        };
        g.attached[root] = true;
        if let Some(s) = second {
            g.attached[s] = true;
            g.parent[s] = Some(root);
            let c = inst.cost(root, s);
            g.power[root] = c;
            g.power[s] = c;
        }
        g
    }

    fn attach(&mut self, inst: &Instance, v: usize, p: usize) {
        let c = inst.cost(v, p);
        self.parent[v] = Some(p);
        self.level[v] = self.level[p] + 1;
        self.attached[v] = true;
        self.power[v] = c;
        self.power[p] = self.power[p].max(c);
    }

    fn can_parent(&self, inst: &Instance, u: usize) -> bool {
        self.attached[u] && self.level[u] < inst.max_level()
    }

    /// Cheapest admissible parent for `v`; ties go to the smaller id.
    fn best_parent(&self, inst: &Instance, v: usize) -> (f64, usize) {
        let row = inst.cost_row(v);
        let mut best = (f64::INFINITY, usize::MAX);
        for u in 0..inst.n() {
            if self.can_parent(inst, u) {
                let inc = increment(row[u], self.power[u]);
                if inc < best.0 {
                    best = (inc, u);
                }
            }
        }
        best
    }
}

/// Prim-style growth from the center(s).
///
/// Repeatedly attaches the unattached vertex whose cheapest admissible parent
/// (level below `floor(D/2)`) gives the smallest objective increase. For odd
/// `D` the second center is the vertex closest to the root.
pub fn greedy_hop_bounded(inst: &Instance, center: CenterChoice) -> BoundedTree {
    let n = inst.n();
    let root = match center {
        CenterChoice::Auto => inst.centroid_vertex(),
        CenterChoice::Vertex(v) => v,
    };
    let second = inst.has_two_centers().then(|| nearest_to(inst, root));
    let mut g = Growth::new(inst, root, second);

    let mut best: Vec<(f64, usize)> = (0..n)
        .map(|v| {
            if g.attached[v] {
                (f64::INFINITY, usize::MAX)
            } else {
                g.best_parent(inst, v)
            }
        })
        .collect();

    loop {
        let mut pick = None;
        let mut pick_inc = f64::INFINITY;
        for v in (0..n).filter(|&v| !g.attached[v]) {
            if pick.is_none() || best[v].0 < pick_inc {
                pick = Some(v);
                pick_inc = best[v].0;
            }
        }
        let Some(v) = pick else { break };
        let p = best[v].1;
        g.attach(inst, v, p);

        for w in (0..n).filter(|&w| !g.attached[w]) {
            if best[w].1 == p {
                // The parent got more expensive to share; look again.
                best[w] = g.best_parent(inst, w);
            } else if g.can_parent(inst, v) {
                let inc = increment(inst.cost(w, v), g.power[v]);
                if inc < best[w].0 || (inc == best[w].0 && v < best[w].1) {
                    best[w] = (inc, v);
                }
            }
        }
    }
    BoundedTree::from_parents(inst, root, second, g.parent).expect("growth yields an arborescence")
}

/// Randomized growth: random center(s), vertices attached in random order,
/// each to an admissible parent drawn with probability inversely proportional
/// to the objective increase it causes.
pub fn randomized_construct<R: Rng + ?Sized>(inst: &Instance, rng: &mut R) -> BoundedTree {
    let n = inst.n();
    let root = rng.gen_range(0..n);
    let second = inst.has_two_centers().then(|| {
        let s = rng.gen_range(0..n - 1);
        if s >= root {
            s + 1
        } else {
            s
        }
    });
    let mut g = Growth::new(inst, root, second);
    let mut order: Vec<usize> = (0..n).filter(|&v| !g.attached[v]).collect();
    order.shuffle(rng);

    let mut options: Vec<(usize, f64)> = Vec::with_capacity(n);
    for v in order {
        let row = inst.cost_row(v);
        options.clear();
        options.extend(
            (0..n)
                .filter(|&u| g.can_parent(inst, u))
                .map(|u| (u, increment(row[u], g.power[u]))),
        );
        let free: Vec<usize> = options
            .iter()
            .filter(|(_, inc)| *inc == 0.0)
            .map(|&(u, _)| u)
            .collect();
        let p = if !free.is_empty() {
            free[rng.gen_range(0..free.len())]
        } else {
            let total: f64 = options.iter().map(|(_, inc)| 1.0 / inc).sum();
            let mut target = rng.gen::<f64>() * total;
            let mut chosen = options[options.len() - 1].0;
            for &(u, inc) in &options {
                target -= 1.0 / inc;
                if target < 0.0 {
                    chosen = u;
                    break;
                }
            }
            chosen
        };
        g.attach(inst, v, p);
    }
    BoundedTree::from_parents(inst, root, second, g.parent).expect("growth yields an arborescence")
}

/// Best of one greedy tree (automatic center) and `attempts - 1` randomized
/// constructions. Ties keep the earlier tree.
pub fn best_initial<R: Rng + ?Sized>(inst: &Instance, attempts: usize, rng: &mut R) -> BoundedTree {
    let mut best = greedy_hop_bounded(inst, CenterChoice::Auto);
    for _ in 1..attempts.max(1) {
        let candidate = randomized_construct(inst, rng);
        if candidate.objective() < best.objective() {
            best = candidate;
        }
    }
    best
}
