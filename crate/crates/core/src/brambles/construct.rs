//! Constructions that turn a bramble into the objects bounding its order:
//! a hitting set inside one strong reachability set, a clique minor model
//! whose vertices hit it, and a `t`-bramble of comparable order.

use serde::{Deserialize, Serialize};

use super::{bramble_defect, certificate_defect, order_certificate, Bramble, BrambleKind, OrderCertificate};
use crate::coloring::{sreach, LinearOrder};
use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::MinorModel;
use crate::vset::VertexSet;

fn require_valid(g: &Graph, b: &Bramble, r: Depth) -> Result<()> {
    match bramble_defect(g, b.elements(), r, BrambleKind::Plain)? {
        None => Ok(()),
        Some(why) => Err(Error::InvalidArgument(format!("invalid bramble: {why}"))),
    }
}

/// Vertices of a shortest path from `from` to `to` inside `G[within]`,
/// starting at `from`. Ties go to the least vertex of each BFS layer.
fn shortest_path(g: &Graph, within: VertexSet, from: VertexSet, to: VertexSet) -> Option<Vec<usize>> {
    let mut layers = vec![from.intersection(within)];
    let mut seen = layers[0];
    loop {
        let last = *layers.last().expect("nonempty");
        if last.intersects(to) {
            break;
        }
        let next = g.neighborhood(last).intersection(within).difference(seen);
        if next.is_empty() {
            return None;
        }
        seen = seen.union(next);
        layers.push(next);
    }
    let mut v = layers.last().expect("nonempty").intersection(to).min().expect("target");
    let mut path = vec![v];
    for layer in layers.iter().rev().skip(1) {
        v = g.neighbors(v).intersection(*layer).min().expect("predecessor");
        path.push(v);
    }
    path.reverse();
    Some(path)
}

/// Hitting set read off a vertex order, with the vertex whose strong
/// reachability set contains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderHittingSet {
    pub hitting_set: VertexSet,
    pub v_star: usize,
}

/// Take `v_B`, the earliest vertex of each element, and `v*`, the latest of
/// these. For each element `B`, walk a shortest path from `v*` to `v_B`
/// through `B` and an element `B*` whose earliest vertex is `v*`, and keep
/// the first vertex after `v*` that is not later than `v*`. Vertices of `B*`
/// other than `v*` are all later, so the kept vertex lies in `B`.
pub fn hitting_set_from_order(g: &Graph, b: &Bramble, order: &LinearOrder, r: Depth) -> Result<OrderHittingSet> {
    require_valid(g, b, r)?;
    if order.len() != g.n() {
        return Err(Error::InvalidArgument("order length differs from the graph".into()));
    }
    let els = b.elements();
    if els.is_empty() {
        return Err(Error::InvalidArgument("bramble has no elements".into()));
    }
    let mins: Vec<usize> = els.iter().map(|&e| order.min_of(e).expect("nonempty")).collect();
    let v_star = order.max_of(mins.iter().copied().collect()).expect("nonempty");
    let top = els[mins.iter().position(|&m| m == v_star).expect("present")];
    let mut hitting_set = VertexSet::EMPTY;
    for (&e, &v_b) in els.iter().zip(&mins) {
        let x = if e.contains(v_star) {
            v_star
        } else {
            let path = shortest_path(g, top.union(e), VertexSet::singleton(v_star), VertexSet::singleton(v_b))
                .ok_or_else(|| Error::Invariant("touching elements not joined".into()))?;
            path.into_iter().skip(1).find(|&x| order.position(x) <= order.position(v_star)).expect("path ends at v_B")
        };
        hitting_set.insert(x);
    }
    if let Some(i) = els.iter().position(|e| !e.intersects(hitting_set)) {
        return Err(Error::Invariant(format!("constructed set misses element {i}")));
    }
    let reach = sreach(g, r.affine(4, 1), order, v_star);
    if !hitting_set.is_subset(reach) {
        return Err(Error::Invariant(format!("constructed set {hitting_set} leaves SReach of {v_star}")));
    }
    Ok(OrderHittingSet { hitting_set, v_star })
}

/// Outcome of the augment-or-shrink loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueModelRun {
    pub model: MinorModel,
    pub hitting_set: VertexSet,
    pub augmentations: usize,
    pub deletions: usize,
    /// Largest branch set created, compared against `1 + (5r+1)s` where
    /// `s` is the number of branch sets present when it was created.
    pub largest_branch_set: usize,
}

fn uncovered(els: &[VertexSet], used: VertexSet) -> VertexSet {
    els.iter().filter(|e| !e.intersects(used)).fold(VertexSet::EMPTY, |a, b| a.union(*b))
}

fn union_of(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::EMPTY, |a, b| a.union(*b))
}

/// Grows a depth-`(5r+1)` clique model until its vertices hit every
/// element. `R(M)` is the union of the elements avoiding the model. A
/// branch set is deleted when that does not enlarge `R(M)`; otherwise a new
/// branch set is built inside `R(M)` and joined to each old branch set by a
/// short path through an element private to it.
pub fn clique_model_from_bramble(g: &Graph, b: &Bramble, r: Depth) -> Result<CliqueModelRun> {
    require_valid(g, b, r)?;
    let els = b.elements();
    let depth = r.affine(5, 1);
    let mut sets: Vec<VertexSet> = Vec::new();
    let (mut augmentations, mut deletions, mut largest) = (0, 0, 0);
    loop {
        let rest = uncovered(els, union_of(&sets));
        if rest.is_empty() {
            break;
        }
        let shrink = (0..sets.len()).find(|&i| {
            let mut without = sets.clone();
            without.remove(i);
            uncovered(els, union_of(&without)).len() <= rest.len()
        });
        if let Some(i) = shrink {
            sets.remove(i);
            deletions += 1;
            continue;
        }
        let (x_star, _) = g.center_of(rest)?;
        let mut fresh = VertexSet::singleton(x_star);
        for (i, &m) in sets.iter().enumerate() {
            let others = union_of(&sets).difference(m);
            let private = els
                .iter()
                .copied()
                .find(|e| e.intersects(m) && !e.intersects(others))
                .ok_or_else(|| Error::Invariant(format!("branch set {i} has no private element")))?;
            let within = m.union(private).union(rest);
            // Only the last vertex of the path may lie outside `M_i ∪ B`.
            let p = shortest_path(g, within, m, rest)
                .filter(|p| p[1..p.len() - 1].iter().all(|&v| private.contains(v) && !m.contains(v)))
                .ok_or_else(|| Error::Invariant(format!("no path from branch set {i} to R(M)")))?;
            let x_i = *p.last().expect("nonempty");
            fresh = fresh.union(p[1..].iter().copied().collect());
            let link = shortest_path(g, rest, VertexSet::singleton(x_star), VertexSet::singleton(x_i))
                .ok_or_else(|| Error::Invariant("R(M) is disconnected".into()))?;
            fresh = fresh.union(link.into_iter().collect());
        }
        let s = sets.len();
        let bound = depth.finite().map(|d| 1 + d as usize * s);
        if bound.is_some_and(|cap| fresh.len() > cap) {
            return Err(Error::Invariant(format!(
                "new branch set has {} vertices, more than {}",
                fresh.len(),
                bound.unwrap()
            )));
        }
        largest = largest.max(fresh.len());
        sets.push(fresh);
        augmentations += 1;
    }
    let model = MinorModel { branch_sets: sets, depth };
    let clique = crate::generators::complete(model.branch_sets.len())?;
    if let Some(why) = crate::minors::model_defect(g, &clique, &model.branch_sets, depth)? {
        return Err(Error::Invariant(format!("constructed model is invalid: {why}")));
    }
    let hitting_set = model.vertex_set();
    Ok(CliqueModelRun { model, hitting_set, augmentations, deletions, largest_branch_set: largest })
}

/// For each `X` with `|X| < ceil(k / t)`, the `(3r+1)`-ball in `G - X`
/// around the center of the first element avoiding `X`.
pub fn lift_to_t_bramble(g: &Graph, b: &Bramble, cert: &OrderCertificate, r: Depth, t: usize) -> Result<Bramble> {
    require_valid(g, b, r)?;
    let kind = BrambleKind::for_t(t)?;
    if let Some(why) = certificate_defect(g, b, cert) {
        return Err(Error::InvalidArgument(format!("order certificate rejected: {why}")));
    }
    let need = cert.order.div_ceil(t);
    let depth = r.affine(3, 1);
    let radius = depth.saturate(g.n());
    let mut balls = Vec::new();
    for x in g.vertices().subsets_up_to(need.saturating_sub(1)) {
        let e = b.first_disjoint(x).ok_or_else(|| Error::Invariant(format!("{x} hits the bramble below its order")))?;
        let (v, _) = g.center_of(b.elements()[e])?;
        balls.push(g.ball(x, v, radius)?);
    }
    let lifted = Bramble::new(balls, depth);
    if let Some(why) = bramble_defect(g, lifted.elements(), depth, kind)? {
        return Err(Error::Invariant(format!("lifted family is not a {t}-bramble: {why}")));
    }
    let order = order_certificate(g, &lifted)?.order;
    if order < need {
        return Err(Error::Invariant(format!("lifted order {order} below {need}")));
    }
    Ok(lifted)
}
