//! Depth-`r` linkedness and well-linkedness.
//!
//! `S` is depth-`r` `k`-linked if after deleting any fewer than `k`
//! vertices some connected set of radius at most `r` holds a strict
//! majority of `S` (deleted vertices of `S` still count towards `|S|`).
//! `S` is depth-`r` well-linked if for all nonempty `A, B ⊆ S` of equal
//! size and every `Y` with `|Y| < |A|`, `G - Y` has an `A`-`B` path of
//! length at most `r`.

use serde::{Deserialize, Serialize};

use crate::brambles::{bramble_defect, order_certificate, Bramble, BrambleKind};
use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::par;
use crate::subsets::maximal_balls;
use crate::vset::VertexSet;

fn majority(set: VertexSet, s: VertexSet) -> bool {
    2 * set.intersection(s).len() > s.len()
}

/// For every `X` with `|X| < k` (in the order of
/// [`VertexSet::subsets_up_to`]), a connected set of radius at most
/// `depth` in `G - X` holding a strict majority of `set`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkedWitness {
    pub set: VertexSet,
    pub k: usize,
    pub depth: Depth,
    pub balls: Vec<(VertexSet, VertexSet)>,
}

impl LinkedWitness {
    pub fn as_bramble(&self) -> Bramble {
        Bramble::new(self.balls.iter().map(|&(_, b)| b), self.depth)
    }
}

/// The first maximal `r`-ball of `G - x` holding a majority of `s`.
fn majority_ball(g: &Graph, s: VertexSet, x: VertexSet, r: Depth) -> Option<VertexSet> {
    maximal_balls(g, x, r).into_iter().find(|&b| majority(b, s))
}

/// Whether `s` is depth-`r` `k`-linked, with a witness when it is.
///
/// Any connected set of radius at most `r` in `G - X` lies in the `r`-ball
/// of its center, so only balls need checking; and a set found for `X`
/// also serves every subset of `X`, so only `|X| = k - 1` decides.
pub fn is_k_linked(g: &Graph, s: VertexSet, k: usize, r: Depth) -> Result<Option<LinkedWitness>> {
    g.check_subset(s)?;
    if s.is_empty() || k == 0 {
        return Err(Error::InvalidArgument("need a nonempty set and k >= 1".into()));
    }
    let r = r.saturate(g.n());
    if k - 1 > g.n() {
        return Ok(None);
    }
    let decisive = g.vertices().subsets_of_size(k - 1);
    if decisive.iter().any(|&x| majority_ball(g, s, x, r).is_none()) {
        return Ok(None);
    }
    let balls = g
        .vertices()
        .subsets_up_to(k - 1)
        .into_iter()
        .map(|x| (x, majority_ball(g, s, x, r).expect("monotone in X")))
        .collect();
    Ok(Some(LinkedWitness { set: s, k, depth: r, balls }))
}

/// The first reason `w` does not prove `w.set` is `w.k`-linked at `w.depth`.
pub fn linked_witness_defect(g: &Graph, w: &LinkedWitness) -> Option<String> {
    if w.set.is_empty() || !w.set.is_subset(g.vertices()) {
        return Some("set is empty or leaves the graph".into());
    }
    if w.k == 0 {
        return Some("k is zero".into());
    }
    let expected = g.vertices().subsets_up_to(w.k - 1);
    if expected.len() != w.balls.len() || expected.iter().zip(&w.balls).any(|(x, (y, _))| x != y) {
        return Some("rows do not list every X with |X| < k".into());
    }
    for &(x, b) in &w.balls {
        if b.is_empty() || b.intersects(x) || !b.is_subset(g.vertices()) {
            return Some(format!("set for X = {x} is empty, meets X or leaves the graph"));
        }
        match g.radius_of_subset(b) {
            Ok(rad) if rad != Depth::Infinite && rad <= w.depth => {}
            _ => return Some(format!("set for X = {x} is disconnected or too wide")),
        }
        if !majority(b, w.set) {
            return Some(format!("set for X = {x} holds no majority"));
        }
    }
    None
}

/// `link_r(G)` with a witness: the largest `k` admitting a `k`-linked set.
/// For each `k`, candidate sets are tried by decreasing size, then in
/// lexicographic order.
pub fn link_r(g: &Graph, r: Depth, limits: &Limits) -> Result<(usize, Option<LinkedWitness>)> {
    limits.check_exhaustive("link_r", g.n())?;
    let mut sets: Vec<VertexSet> = g.vertices().subsets_up_to(g.n());
    sets.retain(|s| !s.is_empty());
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.canonical_cmp(b)));
    let mut best = None;
    for k in 1..=g.n() {
        let found = par::find_map_first(&sets, |&s| is_k_linked(g, s, k, r).ok().flatten());
        match found {
            Some(w) => best = Some(w),
            None => break,
        }
    }
    Ok((best.as_ref().map_or(0, |w| w.k), best))
}

/// Which pairs `(A, B)` the well-linkedness condition quantifies over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WellLinkedMode {
    /// `A` and `B` may overlap; a shared surviving vertex is a path of length 0.
    #[default]
    Permissive,
    /// `A` and `B` must be disjoint.
    Disjoint,
}

/// `A`, `B` and `Y` with no short `A`-`B` path in `G - Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellLinkedViolation {
    pub a: VertexSet,
    pub b: VertexSet,
    pub y: VertexSet,
}

/// The least violation of depth-`r` well-linkedness of `s`, if any.
///
/// Only `|Y| = |A| - 1` needs checking, since deleting more only removes
/// paths. With `Y` fixed, `A` fails exactly when at least `|A|` vertices of
/// `S` (vertices in `Y` included) lie outside the `r`-neighborhood of
/// `A - Y` in `G - Y`, and such an `A` may be taken with as few surviving
/// vertices as possible.
pub fn well_linked_violation(
    g: &Graph,
    s: VertexSet,
    r: Depth,
    mode: WellLinkedMode,
) -> Result<Option<WellLinkedViolation>> {
    g.check_subset(s)?;
    if s.is_empty() {
        return Err(Error::InvalidArgument("well-linkedness of the empty set".into()));
    }
    let r = r.saturate(g.n());
    let v = g.vertices();
    for a in 1..=s.len() {
        for y in v.subsets_of_size(a - 1) {
            let alive = v.difference(y);
            let found = match mode {
                WellLinkedMode::Permissive => {
                    let deleted = s.intersection(y);
                    let j = a.saturating_sub(deleted.len()).max(1);
                    s.difference(y).subsets_of_size(j).into_iter().find_map(|core| {
                        let near = g.reach(alive, core, r);
                        let far = s.difference(near);
                        (far.len() >= a).then(|| {
                            let pad = deleted.to_vec().into_iter().take(a - j);
                            WellLinkedViolation {
                                a: core.union(pad.collect()),
                                b: far.to_vec().into_iter().take(a).collect(),
                                y,
                            }
                        })
                    })
                }
                WellLinkedMode::Disjoint => s.subsets_of_size(a).into_iter().find_map(|aa| {
                    let near = g.reach(alive, aa.difference(y), r);
                    let pool = s.difference(aa).difference(near);
                    (pool.len() >= a).then(|| WellLinkedViolation {
                        a: aa,
                        b: pool.to_vec().into_iter().take(a).collect(),
                        y,
                    })
                }),
            };
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

pub fn is_well_linked(g: &Graph, s: VertexSet, r: Depth) -> Result<bool> {
    Ok(well_linked_violation(g, s, r, WellLinkedMode::Permissive)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellLinkedWitness {
    pub set: VertexSet,
    pub depth: Depth,
    #[serde(default)]
    pub mode: WellLinkedMode,
}

/// `well_r(G)`: the size of a largest depth-`r` well-linked set. Subsets of
/// well-linked sets are well-linked, so sizes are tried downward and the
/// first (lexicographically least) set of the largest size is returned.
pub fn well_r(
    g: &Graph,
    r: Depth,
    mode: WellLinkedMode,
    limits: &Limits,
) -> Result<(usize, Option<WellLinkedWitness>)> {
    limits.check_exhaustive("well_r", g.n())?;
    for size in (1..=g.n()).rev() {
        let sets = g.vertices().subsets_of_size(size);
        let found =
            par::find_map_first(&sets, |&s| matches!(well_linked_violation(g, s, r, mode), Ok(None)).then_some(s));
        if let Some(set) = found {
            let depth = r.saturate(g.n());
            return Ok((size, Some(WellLinkedWitness { set, depth, mode })));
        }
    }
    Ok((0, None))
}

/// The first reason `w` is not a well-linked set, by full re-check.
pub fn well_linked_witness_defect(g: &Graph, w: &WellLinkedWitness) -> Option<String> {
    if w.set.is_empty() || !w.set.is_subset(g.vertices()) {
        return Some("set is empty or leaves the graph".into());
    }
    match well_linked_violation(g, w.set, w.depth, w.mode) {
        Ok(None) => None,
        Ok(Some(v)) => Some(format!("no short path from {} to {} avoiding {}", v.a, v.b, v.y)),
        Err(e) => Some(e.to_string()),
    }
}

fn require_bramble(g: &Graph, b: &Bramble, r: Depth) -> Result<VertexSet> {
    if let Some(why) = bramble_defect(g, b.elements(), r, BrambleKind::Plain)? {
        return Err(Error::InvalidArgument(format!("invalid bramble: {why}")));
    }
    Ok(order_certificate(g, b)?.hitting_set)
}

/// A minimum hitting set `S` of a depth-`r` bramble is depth-`(3r+1)`
/// `ceil(|S|/2)`-linked: for each small `Y`, the `(3r+1)`-ball in `G - Y`
/// around the center of an element avoiding `Y` holds a majority of `S`.
pub fn hitting_set_is_linked(g: &Graph, b: &Bramble, r: Depth) -> Result<LinkedWitness> {
    let s = require_bramble(g, b, r)?;
    if s.is_empty() {
        return Err(Error::InvalidArgument("bramble has no elements".into()));
    }
    let k = s.len().div_ceil(2);
    let depth = r.affine(3, 1).saturate(g.n());
    let mut balls = Vec::new();
    for y in g.vertices().subsets_up_to(k - 1) {
        let e = b.first_disjoint(y).ok_or_else(|| Error::Invariant(format!("{y} hits the bramble below its order")))?;
        let (u, _) = g.center_of(b.elements()[e])?;
        let ball = g.ball(y, u, depth)?;
        if !majority(ball, s) {
            return Err(Error::Invariant(format!("ball around {u} avoiding {y} holds no majority")));
        }
        balls.push((y, ball));
    }
    let w = LinkedWitness { set: s, k, depth, balls };
    match linked_witness_defect(g, &w) {
        None => Ok(w),
        Some(why) => Err(Error::Invariant(why)),
    }
}

/// A minimum hitting set of a depth-`r` bramble is depth-`(4r+1)` well-linked.
pub fn hitting_set_is_well_linked(g: &Graph, b: &Bramble, r: Depth) -> Result<WellLinkedWitness> {
    let s = require_bramble(g, b, r)?;
    if s.is_empty() {
        return Err(Error::InvalidArgument("bramble has no elements".into()));
    }
    let w = WellLinkedWitness { set: s, depth: r.affine(4, 1).saturate(g.n()), mode: WellLinkedMode::Permissive };
    match well_linked_witness_defect(g, &w) {
        None => Ok(w),
        Some(why) => Err(Error::Invariant(format!("hitting set {s} is not well-linked: {why}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkedOutcome {
    /// `floor(sqrt(|S|) / 2) = 0`: nothing to show.
    Vacuous,
    Linked(LinkedWitness),
}

/// `k_S = floor(sqrt(|S|) / 2)`, the largest `k` with `4k² <= |S|`.
pub fn k_s(size: usize) -> usize {
    (0..).take_while(|k| 4 * k * k <= size).last().unwrap_or(0)
}

/// A depth-`r` well-linked `S` is depth-`3r` `k_S`-linked.
pub fn well_linked_is_linked(g: &Graph, s: VertexSet, r: Depth) -> Result<LinkedOutcome> {
    if !is_well_linked(g, s, r)? {
        return Err(Error::InvalidArgument(format!("{s} is not depth-{r} well-linked")));
    }
    let k = k_s(s.len());
    if k == 0 {
        return Ok(LinkedOutcome::Vacuous);
    }
    is_k_linked(g, s, k, r.affine(3, 0))?
        .map(LinkedOutcome::Linked)
        .ok_or_else(|| Error::Invariant(format!("well-linked {s} is not depth-3r {k}-linked")))
}

/// The balls of a `k`-linked set form a bramble of order at least `k`:
/// they pairwise intersect, and `X` misses the ball chosen for it.
pub fn bramble_from_linked_set(g: &Graph, s: VertexSet, k: usize, r: Depth) -> Result<Bramble> {
    let w =
        is_k_linked(g, s, k, r)?.ok_or_else(|| Error::InvalidArgument(format!("{s} is not depth-{r} {k}-linked")))?;
    let b = w.as_bramble();
    if let Some(why) = bramble_defect(g, b.elements(), w.depth, BrambleKind::Plain)? {
        return Err(Error::Invariant(format!("linked balls are not a bramble: {why}")));
    }
    let order = order_certificate(g, &b)?.order;
    if order < k {
        return Err(Error::Invariant(format!("bramble order {order} below {k}")));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn k_linked_examples() {
        let k4 = complete(4).unwrap();
        let all = k4.vertices();
        assert!(is_k_linked(&k4, [2].into(), 1, Depth::ZERO).unwrap().is_some());
        let w = is_k_linked(&k4, all, 2, Depth::Finite(1)).unwrap().unwrap();
        assert_eq!(linked_witness_defect(&k4, &w), None);
        assert_eq!(w.balls.len(), 5);
        assert!(is_k_linked(&k4, all, 3, Depth::Infinite).unwrap().is_none());
        assert!(is_k_linked(&k4, VertexSet::EMPTY, 1, Depth::ZERO).is_err());
    }

    #[test]
    fn link_examples() {
        let k4 = complete(4).unwrap();
        let l = Limits::default();
        assert_eq!(link_r(&k4, Depth::ZERO, &l).unwrap().0, 1);
        assert_eq!(link_r(&k4, Depth::Finite(1), &l).unwrap().0, 2);
        assert_eq!(link_r(&k4, Depth::Infinite, &l).unwrap().0, 2);
        assert_eq!(link_r(&complete(1).unwrap(), Depth::Finite(3), &l).unwrap().0, 1);
    }

    #[test]
    fn well_linked_examples() {
        let k4 = complete(4).unwrap();
        assert!(is_well_linked(&k4, [1].into(), Depth::ZERO).unwrap());
        assert!(!is_well_linked(&k4, [1, 2].into(), Depth::ZERO).unwrap());
        assert!(is_well_linked(&k4, k4.vertices(), Depth::Finite(1)).unwrap());
        let p = path(4).unwrap();
        let v =
            well_linked_violation(&p, [0, 3].into(), Depth::Finite(2), WellLinkedMode::Permissive).unwrap().unwrap();
        assert_eq!(v.y, VertexSet::EMPTY);
    }

    #[test]
    fn well_examples() {
        let l = Limits::default();
        for n in 1..=5 {
            let kn = complete(n).unwrap();
            assert_eq!(well_r(&kn, Depth::Finite(1), WellLinkedMode::Permissive, &l).unwrap().0, n);
            assert_eq!(well_r(&kn, Depth::ZERO, WellLinkedMode::Permissive, &l).unwrap().0, 1);
        }
    }

    #[test]
    fn constructions() {
        let c6 = cycle(6).unwrap();
        let windows = Bramble::new((0..6).map(|i| [i, (i + 1) % 6, (i + 2) % 6].into()), Depth::Finite(1));
        let w = hitting_set_is_linked(&c6, &windows, Depth::Finite(1)).unwrap();
        assert_eq!(w.k, 1);
        assert_eq!(w.depth, Depth::Finite(4));
        let wl = hitting_set_is_well_linked(&c6, &windows, Depth::Finite(1)).unwrap();
        assert_eq!(wl.set.len(), 2);

        let k4 = complete(4).unwrap();
        let b = bramble_from_linked_set(&k4, k4.vertices(), 2, Depth::Finite(1)).unwrap();
        assert!(crate::brambles::bramble_order(&k4, &b).unwrap().order >= 2);
        assert_eq!(k_s(3), 0);
        assert_eq!(k_s(4), 1);
        assert_eq!(k_s(16), 2);
        assert_eq!(well_linked_is_linked(&k4, [0, 1].into(), Depth::Finite(1)).unwrap(), LinkedOutcome::Vacuous);
    }
}
