//! Exact treewidth by dynamic programming over vertex subsets, following the
//! elimination-ordering recurrence
//!
//! ```text
//! TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|)
//! ```
//!
//! where `Q(S, v)` is the set of vertices outside `S + v` reachable from `v`
//! through `S`. Eliminating the set `S` first (in the best order) costs
//! `TW(S)`, and the treewidth is `TW(V)`.
//!
//! Used as an independent oracle against the bramble and ordering searches;
//! it shares no code with either.

use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vset::VertexSet;

pub fn treewidth_exact(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check_exhaustive("treewidth_exact", g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let all = (1usize << n) - 1;
    let mut tw = vec![u8::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=all {
        let set = VertexSet::from_bits(s as u128);
        let mut best = u8::MAX;
        for v in set {
            let rest = s & !(1 << v);
            let q = frontier(g, VertexSet::from_bits(rest as u128), v);
            let cost = tw[rest].max(q as u8);
            best = best.min(cost);
        }
        tw[s] = best;
    }
    Ok(tw[all] as usize)
}

/// `|Q(s, v)|`: vertices outside `s + v` adjacent to the component of `v`
/// in `G[s + v]`.
fn frontier(g: &Graph, s: VertexSet, v: usize) -> usize {
    let inside = s.with(v);
    let mut comp = VertexSet::singleton(v);
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if inside.contains(w) && !comp.contains(w) {
                comp.insert(w);
                stack.push(w);
            }
        }
    }
    let mut out = VertexSet::EMPTY;
    for u in comp {
        out = out.union(g.neighbors(u));
    }
    out.difference(inside).len()
}
