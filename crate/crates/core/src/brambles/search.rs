//! Exact bramble numbers by constraint search.
//!
//! `G` has a depth-`r` bramble of order at least `k` exactly when every
//! `(k-1)`-set `X` can be assigned a connected radius-`r` set `B_X` in
//! `G - X` so that the chosen sets satisfy the bramble condition. Enlarging
//! an element keeps every condition intact, so each `B_X` ranges over the
//! maximal `r`-balls of `G - X` (components when `r` is infinite).

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{edge_sets, order_certificate, triple_ok, Bramble, BrambleKind, OrderCertificate};
use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::par;
use crate::subsets::maximal_balls;
use crate::vset::VertexSet;

/// Result of an exact bramble search: the value, a family attaining it and
/// a certificate of its order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrambleSearch {
    pub value: usize,
    pub bramble: Bramble,
    pub certificate: OrderCertificate,
}

pub fn bn_r(g: &Graph, r: Depth, limits: &Limits) -> Result<BrambleSearch> {
    max_order_bramble(g, r, BrambleKind::Plain, limits)
}

pub fn bn_rt(g: &Graph, r: Depth, t: usize, limits: &Limits) -> Result<BrambleSearch> {
    max_order_bramble(g, r, BrambleKind::for_t(t)?, limits)
}

pub fn tn_r(g: &Graph, r: Depth, limits: &Limits) -> Result<BrambleSearch> {
    max_order_bramble(g, r, BrambleKind::Tangle, limits)
}

/// Largest order of a depth-`r` bramble of the given kind.
pub fn max_order_bramble(g: &Graph, r: Depth, kind: BrambleKind, limits: &Limits) -> Result<BrambleSearch> {
    limits.check_exhaustive("bramble search", g.n())?;
    if let BrambleKind::Intersecting(t) = kind {
        if t < 2 {
            return Err(Error::InvalidArgument("intersecting kind needs t >= 2".into()));
        }
    }
    let radius = r.saturate(g.n());
    let mut best: Vec<VertexSet> = Vec::new();
    let mut value = 0;
    for k in 1..=g.n() {
        match Csp::new(g, radius, k, kind).solve() {
            Some(family) => {
                best = family;
                value = k;
            }
            None => break,
        }
    }
    let bramble = Bramble::new(best, r);
    if let Some(why) = super::bramble_defect(g, bramble.elements(), r, kind)? {
        return Err(Error::Invariant(format!("bramble search produced an invalid family: {why}")));
    }
    let certificate = order_certificate(g, &bramble)?;
    if certificate.order != value {
        return Err(Error::Invariant(format!(
            "bramble search found order {} while targeting {value}",
            certificate.order
        )));
    }
    Ok(BrambleSearch { value, bramble, certificate })
}

type Bits = Vec<u64>;

fn set_bit(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn count(b: &Bits) -> u32 {
    b.iter().map(|w| w.count_ones()).sum()
}

fn ones(b: &Bits) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let i = w.trailing_zeros() as usize;
                w &= w - 1;
                wi * 64 + i
            })
        })
    })
}

struct Csp {
    kind: BrambleKind,
    edges: Vec<VertexSet>,
    vars: Vec<VertexSet>,
    candidates: Vec<VertexSet>,
    /// `compat[c]`: candidates satisfying the pairwise condition with `c`.
    compat: Vec<Bits>,
    domains: Vec<Bits>,
}

impl Csp {
    fn new(g: &Graph, r: Depth, k: usize, kind: BrambleKind) -> Self {
        let vars = g.vertices().subsets_of_size(k - 1);
        let mut index: HashMap<VertexSet, usize> = HashMap::new();
        let mut candidates = Vec::new();
        let per_var: Vec<Vec<usize>> = vars
            .iter()
            .map(|&x| {
                maximal_balls(g, x, r)
                    .into_iter()
                    .map(|b| {
                        *index.entry(b).or_insert_with(|| {
                            candidates.push(b);
                            candidates.len() - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let words = candidates.len().div_ceil(64).max(1);
        let domains = per_var
            .iter()
            .map(|cs| {
                let mut b = vec![0; words];
                cs.iter().for_each(|&c| set_bit(&mut b, c));
                b
            })
            .collect();
        let compat = candidates
            .iter()
            .map(|&a| {
                let mut b = vec![0; words];
                for (j, &c) in candidates.iter().enumerate() {
                    if kind.pair_ok(g, a, c) {
                        set_bit(&mut b, j);
                    }
                }
                b
            })
            .collect();
        Csp { kind, edges: edge_sets(g), vars, candidates, compat, domains }
    }

    /// A family such that every variable `X` misses one of its elements.
    ///
    /// Grows the family one element at a time. Each step takes a variable
    /// that every current element meets and branches over the candidates it
    /// allows, fewest options first. Variables already missed by the family
    /// need no choice of their own.
    fn solve(&self) -> Option<Vec<VertexSet>> {
        if self.domains.iter().any(|d| count(d) == 0) {
            return None;
        }
        let words = self.compat.first().map_or(1, Vec::len);
        let allowed = vec![u64::MAX; words];
        let (_, options) = self.most_constrained(&[], &allowed)?;
        par::find_map_first(&options, |&c| {
            let mut seen = HashSet::new();
            let mut family = Vec::new();
            self.grow(&mut family, &allowed, c, &mut seen).then(|| family.iter().map(|&i| self.candidates[i]).collect())
        })
    }

    /// The unmet variable with the fewest options and those options, or
    /// `None` if some unmet variable has none. `Some((None, _))` means every
    /// variable is met.
    fn most_constrained(&self, family: &[usize], allowed: &Bits) -> Option<(Option<usize>, Vec<usize>)> {
        let mut best: Option<(u32, usize, Bits)> = None;
        for (v, &x) in self.vars.iter().enumerate() {
            if family.iter().any(|&f| !self.candidates[f].intersects(x)) {
                continue;
            }
            let opts: Bits = self.domains[v].iter().zip(allowed).map(|(a, b)| a & b).collect();
            let n = count(&opts);
            if n == 0 {
                return None;
            }
            if best.as_ref().is_none_or(|(m, _, _)| n < *m) {
                best = Some((n, v, opts));
            }
        }
        Some(match best {
            None => (None, Vec::new()),
            Some((_, v, opts)) => (Some(v), ones(&opts).collect()),
        })
    }

    fn grow(&self, family: &mut Vec<usize>, allowed: &Bits, c: usize, seen: &mut HashSet<Vec<usize>>) -> bool {
        let mut key = family.clone();
        key.push(c);
        key.sort_unstable();
        if !seen.insert(key) {
            return false;
        }
        let mut next: Bits = allowed.iter().zip(&self.compat[c]).map(|(a, b)| a & b).collect();
        if let Some(extra) = self.extension_mask(family, c) {
            next.iter_mut().zip(&extra).for_each(|(a, b)| *a &= b);
        }
        family.push(c);
        match self.most_constrained(family, &next) {
            Some((None, _)) => return true,
            Some((Some(_), options)) => {
                for d in options {
                    if self.grow(family, &next, d, seen) {
                        return true;
                    }
                }
            }
            None => {}
        }
        family.pop();
        false
    }

    /// Candidates that stay consistent once `c` joins `used`: for tangles,
    /// every triple with `c` and an earlier element; for `t`-wise
    /// intersection, every subfamily with `c` of at most `t` sets.
    fn extension_mask(&self, used: &[usize], c: usize) -> Option<Bits> {
        let words = self.compat[c].len();
        let b = self.candidates[c];
        let keep = |pred: &dyn Fn(VertexSet) -> bool| {
            let mut mask = vec![0; words];
            for (j, &d) in self.candidates.iter().enumerate() {
                if pred(d) {
                    set_bit(&mut mask, j);
                }
            }
            mask
        };
        match self.kind {
            BrambleKind::Plain | BrambleKind::Intersecting(2) => None,
            BrambleKind::Tangle => (!used.is_empty())
                .then(|| keep(&|d| used.iter().all(|&a| triple_ok(&self.edges, self.candidates[a], b, d)))),
            BrambleKind::Intersecting(t) => {
                let mut bases = Vec::new();
                let used: Vec<VertexSet> = used.iter().map(|&u| self.candidates[u]).collect();
                intersections(&used, b, 0, t - 2, &mut bases);
                (!bases.is_empty()).then(|| keep(&|d| bases.iter().all(|x| x.intersects(d))))
            }
        }
    }
}

/// `acc` intersected with each nonempty choice of at most `left` sets from
/// `used[start..]`.
fn intersections(used: &[VertexSet], acc: VertexSet, start: usize, left: usize, out: &mut Vec<VertexSet>) {
    if left == 0 {
        return;
    }
    for j in start..used.len() {
        let x = acc.intersection(used[j]);
        out.push(x);
        intersections(used, x, j + 1, left - 1, out);
    }
}
