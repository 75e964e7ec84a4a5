//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices and the
//! metric primitives every search in the crate is built from.
//!
//! All distances inside a vertex set `B` are measured in the induced
//! subgraph `G[B]`, never in the host.

use std::collections::VecDeque;

use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds the representation limit of {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a simple graph; loops, repeated edges and out-of-range
    /// endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for {} vertices", self.n)));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidGraph(format!("repeated edge {u}-{v}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Union of the neighborhoods of `set` (may overlap `set`).
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// Vertices of `within` at distance at most `radius` from `sources`,
    /// measured in `G[within]`. Sources outside `within` are ignored.
    pub fn reach(&self, within: VertexSet, sources: VertexSet, radius: Depth) -> VertexSet {
        let mut seen = sources.intersection(within);
        let mut frontier = seen;
        let mut d = 0u32;
        while !frontier.is_empty() && radius.admits(d + 1) {
            let next = self.neighborhood(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
            d += 1;
        }
        seen
    }

    /// BFS layers from `src` inside `G[within]`; `layers[d]` holds the
    /// vertices at distance exactly `d`.
    pub fn layers(&self, within: VertexSet, src: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if !within.contains(src) {
            return out;
        }
        let mut seen = VertexSet::singleton(src);
        let mut frontier = seen;
        while !frontier.is_empty() {
            out.push(frontier);
            let next = self.neighborhood(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        out
    }

    /// Eccentricity of `c` in `G[within]`; `Infinite` if `G[within]` is
    /// disconnected.
    pub fn eccentricity_within(&self, within: VertexSet, c: usize) -> Depth {
        let layers = self.layers(within, c);
        let covered = layers.iter().fold(VertexSet::EMPTY, |a, l| a.union(*l));
        if covered == within {
            Depth::Finite(layers.len() as u32 - 1)
        } else {
            Depth::Infinite
        }
    }

    /// Length of a shortest `u`-`v` path using only vertices of `within`.
    pub fn dist_within(&self, within: VertexSet, u: usize, v: usize) -> Result<Depth> {
        for x in [u, v] {
            if !within.contains(x) || x >= self.n {
                return Err(Error::VertexNotAllowed { vertex: x });
            }
        }
        Ok(self
            .layers(within, u)
            .iter()
            .position(|l| l.contains(v))
            .map_or(Depth::Infinite, |d| Depth::Finite(d as u32)))
    }

    /// Radius of `G[set]`: the least eccentricity over centers in `set`.
    pub fn radius_of_subset(&self, set: VertexSet) -> Result<Depth> {
        self.center_of(set).map(|(_, r)| r)
    }

    /// The least vertex of `set` attaining the radius of `G[set]`, with that radius.
    pub fn center_of(&self, set: VertexSet) -> Result<(usize, Depth)> {
        self.check_subset(set)?;
        let mut best: Option<(usize, Depth)> = None;
        for c in set {
            let e = self.eccentricity_within(set, c);
            if best.is_none_or(|(_, b)| e < b) {
                best = Some((c, e));
            }
        }
        best.ok_or_else(|| Error::InvalidArgument("radius of an empty set".into()))
    }

    pub fn is_connected_subset(&self, set: VertexSet) -> bool {
        match set.min() {
            None => false,
            Some(v) => self.reach(set, VertexSet::singleton(v), Depth::Infinite) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_connected_subset(self.vertices())
    }

    /// Whether the two sets share a vertex or are joined by an edge.
    pub fn touch(&self, a: VertexSet, b: VertexSet) -> bool {
        a.intersects(b) || self.neighborhood(a).intersects(b)
    }

    /// The `r`-ball around `center` in `G - removed`.
    pub fn ball(&self, removed: VertexSet, center: usize, r: Depth) -> Result<VertexSet> {
        if center >= self.n || removed.contains(center) {
            return Err(Error::VertexNotAllowed { vertex: center });
        }
        Ok(self.reach(self.vertices().difference(removed), VertexSet::singleton(center), r))
    }

    /// Connected components of `G[within]`, ordered by least vertex.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach(rest, VertexSet::singleton(v), Depth::Infinite);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// Length of a shortest cycle; `Infinite` for forests.
    pub fn girth(&self) -> Depth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Depth::Infinite
        } else {
            Depth::Finite(best as u32)
        }
    }

    /// Degeneracy together with a smallest-last elimination sequence
    /// (first entry removed first). Ties go to the least vertex.
    pub fn degeneracy(&self) -> (usize, Vec<usize>) {
        let mut alive = self.vertices();
        let mut order = Vec::with_capacity(self.n);
        let mut degen = 0;
        while !alive.is_empty() {
            let v = alive.iter().min_by_key(|&v| (self.adj[v].intersection(alive).len(), v)).expect("nonempty");
            degen = degen.max(self.adj[v].intersection(alive).len());
            order.push(v);
            alive.remove(v);
        }
        (degen, order)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Largest clique, by branch and bound over candidate sets.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, size: usize, cand: VertexSet, best: &mut usize) {
            if cand.is_empty() {
                *best = (*best).max(size);
                return;
            }
            let mut cand = cand;
            while let Some(v) = cand.min() {
                if size + cand.len() <= *best {
                    return;
                }
                cand.remove(v);
                grow(g, size + 1, cand.intersection(g.adj[v]), best);
            }
        }
        let mut best = 0;
        grow(self, 0, self.vertices(), &mut best);
        best
    }

    /// The subgraph induced on `keep`, relabelled to `0..keep.len()` in
    /// increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let map: Vec<usize> = keep.to_vec();
        let mut g = Graph::empty(map.len()).expect("subgraph fits");
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("fresh edge");
                }
            }
        }
        g
    }

    pub(crate) fn check_subset(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.vertices()) {
            Ok(())
        } else {
            let bad = set.difference(self.vertices()).min().unwrap_or(0);
            Err(Error::VertexNotAllowed { vertex: bad })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, petersen};

    #[test]
    fn dist_within_examples() {
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.dist_within([0, 1, 2].into(), 0, 2).unwrap(), Depth::Finite(2));
        assert_eq!(c6.dist_within([0, 3].into(), 0, 3).unwrap(), Depth::Infinite);
        let k4 = complete(4).unwrap();
        assert_eq!(k4.dist_within([1, 3].into(), 1, 3).unwrap(), Depth::Finite(1));
        assert!(c6.dist_within([0, 1].into(), 0, 4).is_err());
    }

    #[test]
    fn radius_examples() {
        let p5 = path(5).unwrap();
        assert_eq!(p5.radius_of_subset([3].into()).unwrap(), Depth::ZERO);
        assert_eq!(p5.center_of(p5.vertices()).unwrap(), (2, Depth::Finite(2)));
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.radius_of_subset(c6.vertices()).unwrap(), Depth::Finite(3));
        assert_eq!(c6.radius_of_subset([0, 3].into()).unwrap(), Depth::Infinite);
        assert!(c6.radius_of_subset(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn touch_examples() {
        let c6 = cycle(6).unwrap();
        assert!(c6.touch([0].into(), [0, 1].into()));
        assert!(!c6.touch([0].into(), [3].into()));
        assert!(c6.touch([0, 1].into(), [2].into()));
    }

    #[test]
    fn ball_examples() {
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.ball(VertexSet::EMPTY, 0, Depth::ZERO).unwrap(), [0].into());
        assert_eq!(c6.ball(VertexSet::EMPTY, 0, Depth::Finite(2)).unwrap(), [4, 5, 0, 1, 2].into());
        assert_eq!(c6.ball([1].into(), 0, Depth::Finite(2)).unwrap(), [0, 5, 4].into());
        assert!(c6.ball([0].into(), 0, Depth::Finite(1)).is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(petersen().girth(), Depth::Finite(5));
        assert_eq!(path(7).unwrap().girth(), Depth::Infinite);
        assert_eq!(cycle(6).unwrap().girth(), Depth::Finite(6));
        assert_eq!(complete(4).unwrap().girth(), Depth::Finite(3));
    }

    #[test]
    fn rejects_non_simple() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::empty(129).is_err());
    }

    #[test]
    fn degeneracy_and_cliques() {
        assert_eq!(petersen().degeneracy().0, 3);
        assert_eq!(path(4).unwrap().degeneracy().0, 1);
        assert_eq!(complete(5).unwrap().clique_number(), 5);
        assert_eq!(petersen().clique_number(), 2);
        assert_eq!(cycle(3).unwrap().clique_number(), 3);
    }
}
