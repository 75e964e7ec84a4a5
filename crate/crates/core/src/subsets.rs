//! Search spaces shared by the parameter searches: connected bounded-radius
//! vertex sets and maximal balls.

use crate::depth::Depth;
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vset::VertexSet;

/// Every nonempty `B` with `G[B]` connected and of radius at most `r`,
/// each exactly once, in canonical order (size, then lexicographic).
pub fn enumerate_connected_radius_subsets(g: &Graph, r: Depth, limits: &Limits) -> Result<Vec<VertexSet>> {
    limits.check_enumeration("connected subset enumeration", g.n())?;
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    // Grow connected sets from each least vertex; `seen` removes the
    // duplicates that different growth paths produce.
    for root in 0..g.n() {
        let allowed = g.vertices().difference(VertexSet::full(root));
        let mut stack = vec![VertexSet::singleton(root)];
        while let Some(set) = stack.pop() {
            if !seen.insert(set) {
                continue;
            }
            for v in g.neighborhood(set).intersection(allowed).difference(set) {
                stack.push(set.with(v));
            }
        }
    }
    for set in seen {
        if r == Depth::Infinite || g.radius_of_subset(set)? <= r {
            out.push(set);
        }
    }
    out.sort_by(VertexSet::canonical_cmp);
    Ok(out)
}

/// The distinct `r`-balls of `G - removed` that are not strictly contained
/// in another such ball, in canonical order. Every connected set of radius
/// at most `r` in `G - removed` lies inside one of them.
pub fn maximal_balls(g: &Graph, removed: VertexSet, r: Depth) -> Vec<VertexSet> {
    let alive = g.vertices().difference(removed);
    let mut balls: Vec<VertexSet> = if r == Depth::Infinite {
        g.components(alive)
    } else {
        alive.iter().map(|c| g.reach(alive, VertexSet::singleton(c), r)).collect()
    };
    balls.sort_by(VertexSet::canonical_cmp);
    balls.dedup();
    let keep: Vec<VertexSet> =
        balls.iter().filter(|b| !balls.iter().any(|o| o != *b && b.is_subset(*o))).copied().collect();
    keep
}
