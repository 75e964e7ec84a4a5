//! Strong reachability and the strong `r`-coloring number.
//!
//! `SReach[r, π, v]` holds every `u` with `π(u) <= π(v)` joined to `v` by a
//! path of length at most `r` whose internal vertices all come after `v`.
//! It always contains `v` itself (the length-0 path).
//!
//! Whether `u` is strongly reachable from `v` depends only on the *set* of
//! vertices placed before `v`, not on their relative order. The exact search
//! exploits this: extending a prefix by `v` fixes `|SReach[r, π, v]|` for
//! good, so prefixes can be pruned and memoised by their vertex set.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::par;
use crate::vset::VertexSet;

/// A linear order on `0..n`: `sequence[i]` is the vertex at position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LinearOrder {
    sequence: Vec<usize>,
    position: Vec<usize>,
}

impl LinearOrder {
    pub fn identity(n: usize) -> Self {
        LinearOrder { sequence: (0..n).collect(), position: (0..n).collect() }
    }

    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!("{sequence:?} is not a permutation of 0..{n}")));
            }
            position[v] = i;
        }
        Ok(LinearOrder { sequence, position })
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Vertices strictly before `v`.
    pub fn before(&self, v: usize) -> VertexSet {
        self.sequence[..self.position[v]].iter().copied().collect()
    }

    /// The vertex with the least position among `set`.
    pub fn min_of(&self, set: VertexSet) -> Option<usize> {
        set.iter().min_by_key(|&v| self.position[v])
    }

    pub fn max_of(&self, set: VertexSet) -> Option<usize> {
        set.iter().max_by_key(|&v| self.position[v])
    }
}

impl TryFrom<Vec<usize>> for LinearOrder {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        LinearOrder::from_sequence(v)
    }
}

impl From<LinearOrder> for Vec<usize> {
    fn from(o: LinearOrder) -> Vec<usize> {
        o.sequence
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScolResult {
    pub value: usize,
    pub witness_order: LinearOrder,
    /// `|SReach[r, witness_order, v]|` for each vertex `v`.
    pub reach_sizes: Vec<usize>,
}

/// Strong reachability from `v` when exactly `earlier` precedes it.
pub fn sreach_prefix(g: &Graph, earlier: VertexSet, v: usize, r: Depth) -> VertexSet {
    let later = g.vertices().difference(earlier).without(v);
    let mut out = VertexSet::singleton(v);
    let mut seen = out;
    let mut frontier = out;
    let mut d = 0u32;
    while !frontier.is_empty() && r.admits(d + 1) {
        let nb = g.neighborhood(frontier);
        out = out.union(nb.intersection(earlier));
        frontier = nb.intersection(later).difference(seen);
        seen = seen.union(frontier);
        d += 1;
    }
    out
}

pub fn sreach(g: &Graph, r: Depth, order: &LinearOrder, v: usize) -> VertexSet {
    sreach_prefix(g, order.before(v), v, r)
}

fn reach_sizes(g: &Graph, r: Depth, order: &LinearOrder) -> Vec<usize> {
    (0..g.n()).map(|v| sreach(g, r, order, v).len()).collect()
}

/// `max_v |SReach[r, order, v]|`; zero on the empty graph.
pub fn scol_given_order(g: &Graph, r: Depth, order: &LinearOrder) -> Result<usize> {
    check_order(g, order)?;
    Ok(reach_sizes(g, r, order).into_iter().max().unwrap_or(0))
}

fn check_order(g: &Graph, order: &LinearOrder) -> Result<()> {
    if order.len() != g.n() {
        return Err(Error::InvalidArgument(format!("order has {} vertices, graph has {}", order.len(), g.n())));
    }
    Ok(())
}

fn result_for(g: &Graph, r: Depth, order: LinearOrder) -> ScolResult {
    let sizes = reach_sizes(g, r, &order);
    ScolResult { value: sizes.iter().copied().max().unwrap_or(0), witness_order: order, reach_sizes: sizes }
}

/// Upper bound from a back-to-front greedy: repeatedly place last the
/// remaining vertex whose strong reach (with all other remaining vertices
/// before it) is smallest, ties to the least index. At `r = 1` this is the
/// smallest-last degeneracy order.
pub fn scol_heuristic(g: &Graph, r: Depth) -> ScolResult {
    let mut remaining = g.vertices();
    let mut back = Vec::with_capacity(g.n());
    while !remaining.is_empty() {
        let v = remaining
            .iter()
            .min_by_key(|&v| (sreach_prefix(g, remaining.without(v), v, r).len(), v))
            .expect("nonempty");
        back.push(v);
        remaining.remove(v);
    }
    back.reverse();
    result_for(g, r, LinearOrder::from_sequence(back).expect("permutation"))
}

/// Exact `scol_r(G)` with the lexicographically least optimal order.
///
/// Depth-first branch and bound over prefixes, one independent search per
/// first vertex. A prefix is cut once its running maximum reaches the
/// incumbent, and a vertex set already explored with a running maximum no
/// larger is not explored again.
pub fn scol_exact(g: &Graph, r: Depth, limits: &Limits) -> Result<ScolResult> {
    limits.check_exhaustive("scol_exact", g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(result_for(g, r, LinearOrder::identity(0)));
    }
    let r = r.saturate(n);
    let heuristic = scol_heuristic(g, r);
    let floor = if r >= Depth::Finite(1) { g.degeneracy().0 + 1 } else { 1 };
    let firsts: Vec<usize> = (0..n).collect();
    let per_first = par::map(&firsts, |&first| {
        let mut dfs = OrderSearch {
            g,
            r,
            n,
            floor,
            memo: HashMap::new(),
            bound: heuristic.value + 1,
            found: None,
            prefix: vec![first],
        };
        dfs.run(VertexSet::singleton(first), 1);
        dfs.found.map(|seq| (dfs.bound, seq))
    });
    let (_, seq) = per_first
        .into_iter()
        .flatten()
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .expect("the heuristic order lies in some branch");
    Ok(result_for(g, r, LinearOrder::from_sequence(seq)?))
}

struct OrderSearch<'a> {
    g: &'a Graph,
    r: Depth,
    n: usize,
    floor: usize,
    memo: HashMap<VertexSet, usize>,
    /// Only orders with value strictly below this are accepted.
    bound: usize,
    found: Option<Vec<usize>>,
    prefix: Vec<usize>,
}

impl OrderSearch<'_> {
    fn run(&mut self, placed: VertexSet, partial: usize) {
        if self.found.is_some() && self.bound == self.floor {
            return;
        }
        if placed.len() == self.n {
            self.bound = partial;
            self.found = Some(self.prefix.clone());
            return;
        }
        match self.memo.get(&placed) {
            Some(&m) if m <= partial => return,
            _ => {
                self.memo.insert(placed, partial);
            }
        }
        for v in self.g.vertices().difference(placed) {
            let p = partial.max(sreach_prefix(self.g, placed, v, self.r).len());
            if p >= self.bound {
                continue;
            }
            self.prefix.push(v);
            self.run(placed.with(v), p);
            self.prefix.pop();
            if self.found.is_some() && self.bound == self.floor {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, petersen};

    #[test]
    fn sreach_examples() {
        let k4 = complete(4).unwrap();
        let id = LinearOrder::identity(4);
        assert_eq!(sreach(&k4, Depth::Finite(1), &id, 3), VertexSet::full(4));
        assert_eq!(sreach(&k4, Depth::ZERO, &id, 2), [2].into());
        let p4 = path(4).unwrap();
        assert_eq!(sreach(&p4, Depth::Finite(2), &id, 3), [2, 3].into());
        // With 3 placed first, 1 reaches 0 directly and 3 through the later vertex 2.
        let o = LinearOrder::from_sequence(vec![3, 0, 1, 2]).unwrap();
        assert_eq!(sreach(&p4, Depth::Finite(2), &o, 1), [0, 1, 3].into());
        assert_eq!(sreach(&p4, Depth::Finite(1), &o, 1), [0, 1].into());
    }

    #[test]
    fn scol_given_order_examples() {
        let k5 = complete(5).unwrap();
        assert_eq!(scol_given_order(&k5, Depth::Finite(1), &LinearOrder::identity(5)).unwrap(), 5);
        let p6 = path(6).unwrap();
        assert_eq!(scol_given_order(&p6, Depth::Finite(3), &LinearOrder::identity(6)).unwrap(), 2);
        let c5 = cycle(5).unwrap();
        assert_eq!(scol_given_order(&c5, Depth::Finite(1), &LinearOrder::identity(5)).unwrap(), 3);
        assert!(scol_given_order(&c5, Depth::Finite(1), &LinearOrder::identity(4)).is_err());
    }

    #[test]
    fn exact_examples() {
        let l = Limits::default();
        for g in [cycle(5).unwrap(), petersen(), path(3).unwrap()] {
            assert_eq!(scol_exact(&g, Depth::ZERO, &l).unwrap().value, 1);
        }
        for r in [1, 2, 5] {
            assert_eq!(scol_exact(&complete(5).unwrap(), Depth::Finite(r), &l).unwrap().value, 5);
        }
        assert_eq!(scol_exact(&cycle(5).unwrap(), Depth::Finite(1), &l).unwrap().value, 3);
        assert_eq!(scol_exact(&petersen(), Depth::Finite(1), &l).unwrap().value, 4);
    }

    #[test]
    fn witness_reproduces_value() {
        let g = petersen();
        for r in [Depth::Finite(2), Depth::Infinite] {
            let res = scol_exact(&g, r, &Limits::default()).unwrap();
            assert_eq!(scol_given_order(&g, r, &res.witness_order).unwrap(), res.value);
            assert!(res.value <= scol_heuristic(&g, r).value);
        }
    }

    #[test]
    fn heuristic_examples() {
        for n in 2..8 {
            assert_eq!(scol_heuristic(&path(n).unwrap(), Depth::Finite(3)).value, 2);
            assert_eq!(scol_heuristic(&complete(n).unwrap(), Depth::Finite(1)).value, n);
        }
    }

    #[test]
    fn order_validation() {
        assert!(LinearOrder::from_sequence(vec![0, 0]).is_err());
        assert!(LinearOrder::from_sequence(vec![0, 2]).is_err());
        let o: LinearOrder = serde_json::from_str("[2,0,1]").unwrap();
        assert_eq!(o.position(2), 0);
        assert!(serde_json::from_str::<LinearOrder>("[1,1]").is_err());
    }

    #[test]
    fn refuses_large_graphs() {
        let g = path(11).unwrap();
        assert!(scol_exact(&g, Depth::Finite(1), &Limits::default()).is_err());
        assert!(scol_exact(&g, Depth::Finite(1), &Limits::default().forced()).is_ok());
    }
}
