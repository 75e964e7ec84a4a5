//! Depth-`r` minor models and the shallow minor parameters `omega_r`,
//! `nabla_r` and `grid_r`.

use serde::{Deserialize, Serialize};

use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::par;
use crate::subsets::enumerate_connected_radius_subsets;
use crate::value::Exact;
use crate::vset::VertexSet;

/// Branch set `i` of the host realizes pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
    pub depth: Depth,
}

impl MinorModel {
    pub fn vertex_set(&self) -> VertexSet {
        self.branch_sets.iter().fold(VertexSet::EMPTY, |a, b| a.union(*b))
    }
}

/// The first reason `branch_sets` fails to be a depth-`r` model of `h` in
/// `g`, or `None` if it is one.
pub fn model_defect(g: &Graph, h: &Graph, branch_sets: &[VertexSet], r: Depth) -> Result<Option<String>> {
    if branch_sets.len() != h.n() {
        return Err(Error::InvalidArgument(format!(
            "{} branch sets for a pattern on {} vertices",
            branch_sets.len(),
            h.n()
        )));
    }
    let mut used = VertexSet::EMPTY;
    for (i, &b) in branch_sets.iter().enumerate() {
        if b.is_empty() {
            return Ok(Some(format!("branch set {i} is empty")));
        }
        if !b.is_subset(g.vertices()) {
            return Ok(Some(format!("branch set {i} leaves the host")));
        }
        if b.intersects(used) {
            return Ok(Some(format!("branch set {i} overlaps an earlier one")));
        }
        used = used.union(b);
        let rad = g.radius_of_subset(b)?;
        if rad == Depth::Infinite {
            return Ok(Some(format!("branch set {i} is disconnected")));
        }
        if rad > r {
            return Ok(Some(format!("branch set {i} has radius {rad} > {r}")));
        }
    }
    for (a, b) in h.edges() {
        if !g.neighborhood(branch_sets[a]).intersects(branch_sets[b]) {
            return Ok(Some(format!("no host edge between branch sets {a} and {b}")));
        }
    }
    Ok(None)
}

pub fn validate_model(g: &Graph, h: &Graph, m: &MinorModel, r: Depth) -> Result<bool> {
    Ok(model_defect(g, h, &m.branch_sets, r)?.is_none())
}

/// A depth-`r` model of `h` in `g` if one exists.
///
/// Backtracking assigns pattern vertices by decreasing degree, trying
/// candidate branch sets in canonical order (smallest first). For complete
/// patterns the branch sets are additionally taken in increasing candidate
/// order, which loses no models up to relabelling.
pub fn has_depth_r_minor(g: &Graph, h: &Graph, r: Depth, limits: &Limits) -> Result<Option<MinorModel>> {
    limits.check_exhaustive("minor search", g.n())?;
    if h.n() > g.n() {
        return Ok(None);
    }
    if h.n() == 0 {
        return Ok(Some(MinorModel { branch_sets: vec![], depth: r }));
    }
    let r_eff = r.saturate(g.n());
    let candidates = enumerate_connected_radius_subsets(g, r_eff, limits)?;
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let symmetric = h.m() == h.n() * (h.n() - 1) / 2;
    let search = ModelSearch { g, h, candidates: &candidates, order: &order, symmetric };
    let first: Vec<usize> = (0..candidates.len()).collect();
    let found = par::find_map_first(&first, |&ci| {
        let mut assigned = vec![VertexSet::EMPTY; h.n()];
        assigned[order[0]] = candidates[ci];
        search.extend(1, candidates[ci], ci + 1, &mut assigned).then_some(assigned)
    });
    Ok(found.map(|branch_sets| MinorModel { branch_sets, depth: r }))
}

struct ModelSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    candidates: &'a [VertexSet],
    order: &'a [usize],
    symmetric: bool,
}

impl ModelSearch<'_> {
    fn extend(&self, i: usize, used: VertexSet, next: usize, assigned: &mut [VertexSet]) -> bool {
        let k = self.order.len();
        if i == k {
            return true;
        }
        let p = self.order[i];
        let placed_nbrs: Vec<usize> = self.order[..i].iter().copied().filter(|&q| self.h.has_edge(p, q)).collect();
        let start = if self.symmetric { next } else { 0 };
        let free = self.g.n() - used.len();
        for ci in start..self.candidates.len() {
            let c = self.candidates[ci];
            // Candidates are sorted by size; the rest cannot leave room.
            if free < c.len() + (k - i - 1) {
                break;
            }
            if c.intersects(used) {
                continue;
            }
            let nb = self.g.neighborhood(c);
            if placed_nbrs.iter().all(|&q| nb.intersects(assigned[q])) {
                assigned[p] = c;
                if self.extend(i + 1, used.union(c), ci + 1, assigned) {
                    return true;
                }
            }
        }
        assigned[p] = VertexSet::EMPTY;
        false
    }
}

/// Largest `k` with `K_k` a depth-`r` minor, with a model.
pub fn omega_r(g: &Graph, r: Depth, limits: &Limits) -> Result<(usize, MinorModel)> {
    limits.check_exhaustive("omega_r", g.n())?;
    let mut best = (0, MinorModel { branch_sets: vec![], depth: r });
    for k in 1..=g.n() {
        match has_depth_r_minor(g, &generators::complete(k)?, r, limits)? {
            Some(m) => best = (k, m),
            None => break,
        }
    }
    Ok(best)
}

/// A family of disjoint branch sets and the number of adjacent pairs, i.e.
/// the contracted minor with every available edge kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityWitness {
    pub branch_sets: Vec<VertexSet>,
    pub depth: Depth,
    pub edges: usize,
}

impl DensityWitness {
    pub fn density(&self) -> Exact {
        if self.branch_sets.is_empty() {
            Exact::int(0)
        } else {
            Exact::ratio(self.edges as i64, self.branch_sets.len() as i64)
        }
    }
}

/// Contracted edges among `branch_sets`: pairs joined by a host edge.
pub fn contracted_edges(g: &Graph, branch_sets: &[VertexSet]) -> usize {
    let mut e = 0;
    for (i, &a) in branch_sets.iter().enumerate() {
        let nb = g.neighborhood(a);
        e += branch_sets[i + 1..].iter().filter(|b| nb.intersects(**b)).count();
    }
    e
}

/// `nabla_r(G)`: the largest `|E(H)| / |V(H)|` over depth-`r` minors `H`.
///
/// Enumerates every family of pairwise disjoint connected radius-`<= r`
/// sets (in increasing candidate order) and scores its contracted simple
/// graph; no pattern graphs are generated.
pub fn nabla_r(g: &Graph, r: Depth, limits: &Limits) -> Result<(Exact, DensityWitness)> {
    limits.check_exhaustive("nabla_r", g.n())?;
    let r_eff = r.saturate(g.n());
    let candidates = enumerate_connected_radius_subsets(g, r_eff, limits)?;
    let nbhd: Vec<VertexSet> = candidates.iter().map(|&c| g.neighborhood(c)).collect();
    let first: Vec<usize> = (0..candidates.len()).collect();
    let per_branch = par::map(&first, |&ci| {
        let mut best = (0usize, 1usize, vec![ci]);
        let mut family = vec![ci];
        families(&candidates, &nbhd, candidates[ci], 0, ci + 1, &mut family, &mut best);
        best
    });
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for cand in per_branch {
        let better = match &best {
            None => true,
            Some((e, s, _)) => cand.0 * s > *e * cand.1,
        };
        if better {
            best = Some(cand);
        }
    }
    let witness = match best {
        None => DensityWitness { branch_sets: vec![], depth: r, edges: 0 },
        Some((edges, _, idx)) => {
            DensityWitness { branch_sets: idx.iter().map(|&i| candidates[i]).collect(), depth: r, edges }
        }
    };
    Ok((witness.density(), witness))
}

fn families(
    candidates: &[VertexSet],
    nbhd: &[VertexSet],
    used: VertexSet,
    edges: usize,
    next: usize,
    family: &mut Vec<usize>,
    best: &mut (usize, usize, Vec<usize>),
) {
    if edges * best.1 > best.0 * family.len() {
        *best = (edges, family.len(), family.clone());
    }
    for ci in next..candidates.len() {
        let c = candidates[ci];
        if c.intersects(used) {
            continue;
        }
        let added = family.iter().filter(|&&f| nbhd[f].intersects(c)).count();
        family.push(ci);
        families(candidates, nbhd, used.union(c), edges + added, ci + 1, family, best);
        family.pop();
    }
}

/// Largest `t` with the `t x t` grid as a depth-`r` minor. A single vertex
/// counts as the `1 x 1` grid, so every nonempty graph has `grid_r >= 1`.
pub fn grid_r(g: &Graph, r: Depth, limits: &Limits) -> Result<(usize, MinorModel)> {
    limits.check_exhaustive("grid_r", g.n())?;
    if g.n() == 0 {
        return Ok((0, MinorModel { branch_sets: vec![], depth: r }));
    }
    let mut best = (1, MinorModel { branch_sets: vec![VertexSet::singleton(0)], depth: r });
    let mut t = 2;
    while t * t <= g.n() {
        match has_depth_r_minor(g, &generators::grid(t)?, r, limits)? {
            Some(m) => best = (t, m),
            None => break,
        }
        t += 1;
    }
    Ok(best)
}
