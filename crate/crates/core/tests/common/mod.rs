//! Naive reference implementations, written straight from the definitions
//! against an adjacency matrix. They share no search code with the crate.

#![allow(dead_code)]

use shallow_core::brambles::BrambleKind;
use shallow_core::linkedness::WellLinkedMode;
use shallow_core::witness::Witness;
use shallow_core::{Depth, Exact, Graph, VertexSet};

pub fn limit(d: Depth) -> usize {
    match d {
        Depth::Finite(r) => r as usize,
        Depth::Infinite => usize::MAX,
    }
}

pub struct Naive {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Naive { n, adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Naive { n, adj }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    fn mask(&self, set: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.n];
        for &v in set {
            m[v] = true;
        }
        m
    }

    fn in_range(&self, set: &[usize]) -> bool {
        set.iter().all(|&v| v < self.n)
    }

    /// Distances from `sources` inside `allowed`.
    fn bfs(&self, allowed: &[bool], sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            if allowed[s] && dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for v in 0..self.n {
                if self.adj[u][v] && allowed[v] && dist[v].is_none() {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Radius of the induced subgraph; `None` if empty or disconnected.
    pub fn radius(&self, set: &[usize]) -> Option<usize> {
        if set.is_empty() || !self.in_range(set) {
            return None;
        }
        let inside = self.mask(set);
        set.iter()
            .filter_map(|&c| {
                let d = self.bfs(&inside, &[c]);
                set.iter().map(|&v| d[v]).collect::<Option<Vec<_>>>().map(|ds| ds.into_iter().max().unwrap())
            })
            .min()
    }

    pub fn connected_within(&self, set: &[usize], r: Depth) -> bool {
        self.radius(set).is_some_and(|rad| rad <= limit(r))
    }

    pub fn touch(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().any(|&u| b.iter().any(|&v| u == v || self.adj[u][v]))
    }

    /// Vertices strongly `r`-reachable from `v`, by enumerating simple paths.
    pub fn sreach(&self, order: &[usize], r: Depth, v: usize) -> Vec<usize> {
        let mut pos = vec![0; self.n];
        for (i, &u) in order.iter().enumerate() {
            pos[u] = i;
        }
        let mut found = vec![false; self.n];
        found[v] = true;
        let mut on_path = vec![false; self.n];
        on_path[v] = true;
        self.sreach_dfs(&pos, limit(r), v, v, 0, &mut on_path, &mut found);
        (0..self.n).filter(|&u| found[u]).collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn sreach_dfs(
        &self,
        pos: &[usize],
        r: usize,
        root: usize,
        at: usize,
        len: usize,
        on_path: &mut [bool],
        found: &mut [bool],
    ) {
        if len >= r {
            return;
        }
        for u in 0..self.n {
            if !self.adj[at][u] || on_path[u] {
                continue;
            }
            if pos[u] <= pos[root] {
                found[u] = true;
            } else {
                on_path[u] = true;
                self.sreach_dfs(pos, r, root, u, len + 1, on_path, found);
                on_path[u] = false;
            }
        }
    }

    pub fn scol_of_order(&self, order: &[usize], r: Depth) -> usize {
        (0..self.n).map(|v| self.sreach(order, r, v).len()).max().unwrap_or(0)
    }

    /// Least size of a vertex set meeting every element.
    pub fn order(&self, elements: &[Vec<usize>]) -> usize {
        (0u32..1 << self.n)
            .filter(|m| elements.iter().all(|e| e.iter().any(|&v| m >> v & 1 == 1)))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap_or(usize::MAX)
    }

    pub fn clique_number(&self) -> usize {
        (0u32..1 << self.n)
            .filter(|&m| {
                let vs: Vec<usize> = (0..self.n).filter(|&v| m >> v & 1 == 1).collect();
                vs.iter().all(|&u| vs.iter().all(|&v| u == v || self.adj[u][v]))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn degeneracy(&self) -> usize {
        let mut alive = vec![true; self.n];
        let mut best = 0;
        for _ in 0..self.n {
            let deg = |u: usize| (0..self.n).filter(|&v| alive[v] && self.adj[u][v]).count();
            let u = (0..self.n).filter(|&u| alive[u]).min_by_key(|&u| deg(u)).unwrap();
            best = best.max(deg(u));
            alive[u] = false;
        }
        best
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let all = vec![true; self.n];
        let mut best = None::<usize>;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u][v] {
                    continue;
                }
                let mut without = self.clone_adj();
                without[u][v] = false;
                without[v][u] = false;
                let d = Naive { n: self.n, adj: without }.bfs(&all, &[u])[v];
                if let Some(d) = d {
                    best = Some(best.map_or(d + 1, |b| b.min(d + 1)));
                }
            }
        }
        best
    }

    fn clone_adj(&self) -> Vec<Vec<bool>> {
        self.adj.clone()
    }

    pub fn is_bramble(&self, elements: &[Vec<usize>], r: Depth, kind: BrambleKind) -> bool {
        if !elements.iter().all(|e| self.connected_within(e, r)) {
            return false;
        }
        let m = elements.len();
        let pairs = (0..m).all(|i| (0..m).all(|j| self.touch(&elements[i], &elements[j])));
        if !pairs {
            return false;
        }
        let common = |idx: &[usize]| (0..self.n).any(|v| idx.iter().all(|&i| elements[i].contains(&v)));
        match kind {
            BrambleKind::Plain => true,
            BrambleKind::Intersecting(t) => tuples(m, t).iter().all(|idx| common(idx)),
            BrambleKind::Tangle => tuples(m, 3).iter().all(|idx| {
                common(idx)
                    || (0..self.n).any(|u| {
                        (u + 1..self.n).any(|v| {
                            self.adj[u][v] && idx.iter().all(|&i| elements[i].contains(&u) || elements[i].contains(&v))
                        })
                    })
            }),
        }
    }

    pub fn is_model(&self, sets: &[Vec<usize>], pattern: &[(usize, usize)], r: Depth) -> bool {
        let mut owner = vec![None; self.n];
        for (i, s) in sets.iter().enumerate() {
            if !self.connected_within(s, r) {
                return false;
            }
            for &v in s {
                if owner[v].is_some() {
                    return false;
                }
                owner[v] = Some(i);
            }
        }
        pattern.iter().all(|&(a, b)| sets.get(a).zip(sets.get(b)).is_some_and(|(x, y)| self.touch(x, y)))
    }

    pub fn is_linked(&self, set: &[usize], k: usize, r: Depth, rows: &[(Vec<usize>, Vec<usize>)]) -> bool {
        if set.is_empty() || !self.in_range(set) || k == 0 {
            return false;
        }
        // Rows are grouped by size, each group in increasing bitmask order.
        let mut masks: Vec<u32> = (0u32..1 << self.n).filter(|m| (m.count_ones() as usize) < k).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let expected: Vec<Vec<usize>> =
            masks.iter().map(|m| (0..self.n).filter(|&v| m >> v & 1 == 1).collect()).collect();
        if expected.len() != rows.len() || expected.iter().zip(rows).any(|(e, (x, _))| e != x) {
            return false;
        }
        rows.iter().all(|(x, ball)| {
            let held = ball.iter().filter(|v| set.contains(v)).count();
            !ball.iter().any(|v| x.contains(v)) && self.connected_within(ball, r) && 2 * held > set.len()
        })
    }

    pub fn is_well_linked(&self, set: &[usize], r: Depth, mode: WellLinkedMode) -> bool {
        if set.is_empty() || !self.in_range(set) {
            return false;
        }
        let s = set.len();
        let subsets: Vec<Vec<usize>> =
            (0u32..1 << s).map(|m| (0..s).filter(|&i| m >> i & 1 == 1).map(|i| set[i]).collect()).collect();
        let ys: Vec<Vec<usize>> =
            (0u32..1 << self.n).map(|m| (0..self.n).filter(|&v| m >> v & 1 == 1).collect()).collect();
        for a in subsets.iter().filter(|a| !a.is_empty()) {
            for b in subsets.iter().filter(|b| b.len() == a.len()) {
                if mode == WellLinkedMode::Disjoint && a.iter().any(|v| b.contains(v)) {
                    continue;
                }
                for y in ys.iter().filter(|y| y.len() < a.len()) {
                    let alive: Vec<bool> = (0..self.n).map(|v| !y.contains(&v)).collect();
                    let d = self.bfs(&alive, a);
                    if !b.iter().any(|&v| alive[v] && d[v].is_some_and(|d| d <= limit(r))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether `w` is a valid certificate of `claimed`, by the definitions.
    pub fn witness_ok(&self, w: &Witness, claimed: Exact) -> bool {
        let v = |s: &VertexSet| s.to_vec();
        match w {
            Witness::Order { radius, value, order } => {
                let seq = order.sequence();
                seq.len() == self.n && self.scol_of_order(seq, *radius) == *value && Exact::from(*value) == claimed
            }
            Witness::Bramble { bramble_kind, value, bramble, certificate } => {
                let els: Vec<Vec<usize>> = bramble.elements().iter().map(v).collect();
                let hs = v(&certificate.hitting_set);
                let table_ok = match &certificate.witnesses_per_x {
                    None => true,
                    Some(rows) => {
                        let k = certificate.order;
                        let expected: Vec<u32> =
                            (0u32..1 << self.n).filter(|m| k >= 1 && m.count_ones() as usize == k - 1).collect();
                        rows.len() == expected.len()
                            && rows.iter().zip(&expected).all(|((x, i), &m)| {
                                let xs = v(x);
                                let mask = xs.iter().fold(0u32, |a, &u| if u < 32 { a | 1 << u } else { u32::MAX });
                                mask == m && els.get(*i).is_some_and(|e| !e.iter().any(|u| xs.contains(u)))
                            })
                    }
                };
                self.in_range(&hs)
                    && self.is_bramble(&els, bramble.depth(), *bramble_kind)
                    && self.order(&els) == certificate.order
                    && hs.len() == certificate.order
                    && els.iter().all(|e| e.iter().any(|u| hs.contains(u)))
                    && table_ok
                    && certificate.order == *value
                    && Exact::from(*value) == claimed
            }
            Witness::CliqueModel { value, model } => {
                let pattern: Vec<(usize, usize)> =
                    (0..*value).flat_map(|a| (a + 1..*value).map(move |b| (a, b))).collect();
                let sets: Vec<Vec<usize>> = model.branch_sets.iter().map(v).collect();
                sets.len() == *value && self.is_model(&sets, &pattern, model.depth) && Exact::from(*value) == claimed
            }
            Witness::GridModel { value, model } => {
                let t = *value;
                let mut pattern = Vec::new();
                for i in 0..t {
                    for j in 0..t {
                        if j + 1 < t {
                            pattern.push((i * t + j, i * t + j + 1));
                        }
                        if i + 1 < t {
                            pattern.push((i * t + j, (i + 1) * t + j));
                        }
                    }
                }
                let sets: Vec<Vec<usize>> = model.branch_sets.iter().map(v).collect();
                t >= 1
                    && sets.len() == t * t
                    && self.is_model(&sets, &pattern, model.depth)
                    && Exact::from(t) == claimed
            }
            Witness::Density { value, family } => {
                let sets: Vec<Vec<usize>> = family.branch_sets.iter().map(v).collect();
                let m = sets.len();
                let edges = (0..m)
                    .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
                    .filter(|&(a, b)| self.touch(&sets[a], &sets[b]))
                    .count();
                let density = if m == 0 { Exact::int(0) } else { Exact::ratio(edges as i64, m as i64) };
                self.is_model(&sets, &[], family.depth)
                    && edges == family.edges
                    && density == *value
                    && *value == claimed
            }
            Witness::Linked(l) => {
                let rows: Vec<(Vec<usize>, Vec<usize>)> = l.balls.iter().map(|(x, b)| (v(x), v(b))).collect();
                self.is_linked(&v(&l.set), l.k, l.depth, &rows) && Exact::from(l.k) == claimed
            }
            Witness::WellLinked(w) => {
                self.is_well_linked(&v(&w.set), w.depth, w.mode) && Exact::from(w.set.len()) == claimed
            }
        }
    }
}

/// Every nondecreasing `t`-tuple of indices below `m`, i.e. every choice of
/// `t` not necessarily distinct elements.
pub fn tuples(m: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(m: usize, t: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, t, i, cur, out);
            cur.pop();
        }
    }
    rec(m, t, 0, &mut cur, &mut out);
    out
}

/// Connected graphs on at most `max_n` vertices from the embedded corpus.
pub fn corpus_up_to(max_n: usize) -> Vec<Graph> {
    shallow_core::corpus::corpus6().into_iter().filter(|g| g.n() <= max_n).collect()
}
