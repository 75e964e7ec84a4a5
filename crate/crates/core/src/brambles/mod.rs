//! Brambles, their orders, and the exact depth-`r` bramble, `t`-bramble and
//! tangle numbers.
//!
//! A depth-`r` bramble is a family of pairwise touching connected vertex
//! sets, each inducing a subgraph of radius at most `r`. Its order is the
//! size of a smallest set meeting every element.

mod construct;
mod search;

pub use construct::{clique_model_from_bramble, hitting_set_from_order, lift_to_t_bramble, CliqueModelRun};
pub use search::{bn_r, bn_rt, max_order_bramble, tn_r, BrambleSearch};

use serde::{Deserialize, Serialize};

use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hitting::min_hitting_set;
use crate::vset::VertexSet;

/// A set of elements in canonical order with duplicates collapsed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBramble")]
pub struct Bramble {
    depth: Depth,
    elements: Vec<VertexSet>,
}

#[derive(Deserialize)]
struct RawBramble {
    depth: Depth,
    elements: Vec<VertexSet>,
}

impl TryFrom<RawBramble> for Bramble {
    type Error = String;

    /// Certificates refer to elements by position, so a serialized list
    /// must already be canonical rather than be silently reordered.
    fn try_from(raw: RawBramble) -> std::result::Result<Self, String> {
        if raw.elements.windows(2).any(|w| w[0].canonical_cmp(&w[1]).is_ge()) {
            return Err("bramble elements not in canonical order".into());
        }
        Ok(Bramble { depth: raw.depth, elements: raw.elements })
    }
}

impl Bramble {
    pub fn new(elements: impl IntoIterator<Item = VertexSet>, depth: Depth) -> Self {
        let mut elements: Vec<VertexSet> = elements.into_iter().collect();
        elements.sort_by(VertexSet::canonical_cmp);
        elements.dedup();
        Bramble { depth, elements }
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn depth(&self) -> Depth {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn union(&self) -> VertexSet {
        self.elements.iter().fold(VertexSet::EMPTY, |a, b| a.union(*b))
    }

    /// The first element (in canonical order) avoiding `x`.
    pub fn first_disjoint(&self, x: VertexSet) -> Option<usize> {
        self.elements.iter().position(|b| !b.intersects(x))
    }
}

/// Which extra condition a family must satisfy on top of being a bramble.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BrambleKind {
    Plain,
    /// Any `t` elements, repetition allowed, share a vertex.
    Intersecting(usize),
    /// Any three elements, repetition allowed, share a vertex or each
    /// contain an endpoint of one common edge.
    Tangle,
}

impl BrambleKind {
    pub fn for_t(t: usize) -> Result<Self> {
        match t {
            0 => Err(Error::InvalidArgument("t must be at least 1".into())),
            1 => Ok(BrambleKind::Plain),
            t => Ok(BrambleKind::Intersecting(t)),
        }
    }

    /// The binary part of the condition: touching, or intersecting for `t >= 2`.
    pub(crate) fn pair_ok(self, g: &Graph, a: VertexSet, b: VertexSet) -> bool {
        match self {
            BrambleKind::Intersecting(_) => a.intersects(b),
            _ => g.touch(a, b),
        }
    }
}

/// The first reason `elements` is not a depth-`r` bramble of the given kind.
/// Empty elements are a precondition violation and return `Err`.
pub fn bramble_defect(g: &Graph, elements: &[VertexSet], r: Depth, kind: BrambleKind) -> Result<Option<String>> {
    if elements.iter().any(|e| e.is_empty()) {
        return Err(Error::InvalidArgument("bramble element is empty".into()));
    }
    for (i, &e) in elements.iter().enumerate() {
        if !e.is_subset(g.vertices()) {
            return Ok(Some(format!("element {i} leaves the graph")));
        }
        let rad = g.radius_of_subset(e)?;
        if rad == Depth::Infinite {
            return Ok(Some(format!("element {i} is disconnected")));
        }
        if rad > r {
            return Ok(Some(format!("element {i} has radius {rad} > {r}")));
        }
    }
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate().skip(i + 1) {
            if !kind.pair_ok(g, a, b) {
                return Ok(Some(format!("elements {i} and {j} fail the pairwise condition")));
            }
        }
    }
    let ok = match kind {
        BrambleKind::Plain | BrambleKind::Intersecting(2) => true,
        BrambleKind::Intersecting(t) => t_wise_ok(elements, t),
        BrambleKind::Tangle => tangle_ok(g, elements),
    };
    Ok((!ok).then(|| format!("{kind:?} condition fails on some tuple")))
}

pub fn validate_bramble(g: &Graph, b: &Bramble, r: Depth) -> Result<bool> {
    Ok(bramble_defect(g, b.elements(), r, BrambleKind::Plain)?.is_none())
}

pub fn is_t_bramble(g: &Graph, b: &Bramble, r: Depth, t: usize) -> Result<bool> {
    Ok(bramble_defect(g, b.elements(), r, BrambleKind::for_t(t)?)?.is_none())
}

/// Tangle test for a valid depth-`r` bramble.
pub fn is_tangle(g: &Graph, b: &Bramble, r: Depth) -> Result<bool> {
    if !validate_bramble(g, b, r)? {
        return Err(Error::InvalidArgument("not a valid depth-r bramble".into()));
    }
    Ok(tangle_ok(g, b.elements()))
}

/// Every choice of at most `t` distinct elements has a common vertex.
pub(crate) fn t_wise_ok(elements: &[VertexSet], t: usize) -> bool {
    fn rec(els: &[VertexSet], acc: VertexSet, start: usize, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        (start..els.len()).all(|j| {
            let x = acc.intersection(els[j]);
            !x.is_empty() && rec(els, x, j + 1, left - 1)
        })
    }
    let all = VertexSet::from_bits(u128::MAX);
    rec(elements, all, 0, t)
}

pub(crate) fn triple_ok(edges: &[VertexSet], a: VertexSet, b: VertexSet, c: VertexSet) -> bool {
    a.intersection(b).intersects(c) || edges.iter().any(|&e| a.intersects(e) && b.intersects(e) && c.intersects(e))
}

pub(crate) fn edge_sets(g: &Graph) -> Vec<VertexSet> {
    g.edges().map(|(u, v)| [u, v].into()).collect()
}

pub(crate) fn tangle_ok(g: &Graph, elements: &[VertexSet]) -> bool {
    let edges = edge_sets(g);
    let n = elements.len();
    // Triples with a repeated element reduce to touching, which the bramble
    // condition already covers.
    (0..n).all(|i| (i + 1..n).all(|j| (j + 1..n).all(|k| triple_ok(&edges, elements[i], elements[j], elements[k]))))
        && (0..n).all(|i| (i + 1..n).all(|j| g.touch(elements[i], elements[j])))
}

/// Largest number of `(order - 1)`-subsets for which the certificate keeps
/// an explicit disjoint-element table.
pub const CERT_TABLE_LIMIT: usize = 4096;

/// Proof that a bramble has exactly the stated order: a hitting set of that
/// size, and for every vertex set `X` one smaller, an element missed by `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCertificate {
    pub order: usize,
    pub hitting_set: VertexSet,
    /// `(X, i)`: element `i` avoids `X`. Omitted when there would be more
    /// than [`CERT_TABLE_LIMIT`] rows; the order is then recomputed on check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses_per_x: Option<Vec<(VertexSet, usize)>>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Exact order of a valid bramble, with its certificate.
pub fn bramble_order(g: &Graph, b: &Bramble) -> Result<OrderCertificate> {
    if let Some(why) = bramble_defect(g, b.elements(), b.depth(), BrambleKind::Plain)? {
        return Err(Error::InvalidArgument(format!("invalid bramble: {why}")));
    }
    order_certificate(g, b)
}

pub(crate) fn order_certificate(g: &Graph, b: &Bramble) -> Result<OrderCertificate> {
    let hitting_set =
        min_hitting_set(b.elements()).ok_or_else(|| Error::InvalidArgument("bramble element is empty".into()))?;
    let order = hitting_set.len();
    let witnesses_per_x = if order == 0 || binomial(g.n(), order - 1) > CERT_TABLE_LIMIT {
        (order == 0).then(Vec::new)
    } else {
        let mut rows = Vec::new();
        for x in g.vertices().subsets_of_size(order - 1) {
            let i = b
                .first_disjoint(x)
                .ok_or_else(|| Error::Invariant(format!("{x} of size {} hits every element", order - 1)))?;
            rows.push((x, i));
        }
        Some(rows)
    };
    Ok(OrderCertificate { order, hitting_set, witnesses_per_x })
}

/// The first reason `cert` does not prove the order of `b`, if any.
pub fn certificate_defect(g: &Graph, b: &Bramble, cert: &OrderCertificate) -> Option<String> {
    let els = b.elements();
    if cert.hitting_set.len() != cert.order {
        return Some(format!("hitting set has {} vertices, order claims {}", cert.hitting_set.len(), cert.order));
    }
    if !cert.hitting_set.is_subset(g.vertices()) {
        return Some("hitting set leaves the graph".into());
    }
    if let Some(i) = els.iter().position(|e| !e.intersects(cert.hitting_set)) {
        return Some(format!("hitting set misses element {i}"));
    }
    match &cert.witnesses_per_x {
        Some(rows) => {
            if cert.order == 0 {
                return (!els.is_empty()).then(|| "order 0 with elements".into());
            }
            let expected = binomial(g.n(), cert.order - 1);
            if rows.len() != expected {
                return Some(format!("{} table rows, expected {expected}", rows.len()));
            }
            let mut prev: Option<u128> = None;
            for (x, i) in rows {
                if x.len() != cert.order - 1 || !x.is_subset(g.vertices()) {
                    return Some(format!("table row {x} has the wrong size"));
                }
                if prev.is_some_and(|p| p >= x.bits()) {
                    return Some("table rows out of order or repeated".into());
                }
                prev = Some(x.bits());
                match els.get(*i) {
                    None => return Some(format!("table row {x} points past the elements")),
                    Some(e) if e.intersects(*x) => {
                        return Some(format!("table row {x} names element {i}, which it meets"))
                    }
                    _ => {}
                }
            }
            None
        }
        None => match min_hitting_set(els) {
            Some(h) if h.len() == cert.order => None,
            Some(h) => Some(format!("order is {}, certificate claims {}", h.len(), cert.order)),
            None => Some("empty element".into()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn validity_examples() {
        let k4 = complete(4).unwrap();
        let singles = Bramble::new((0..4).map(VertexSet::singleton), Depth::ZERO);
        assert!(validate_bramble(&k4, &singles, Depth::ZERO).unwrap());

        let c6 = cycle(6).unwrap();
        let tri = Bramble::new([[0, 1, 2].into(), [2, 3, 4].into(), [4, 5, 0].into()], Depth::Finite(1));
        assert!(validate_bramble(&c6, &tri, Depth::Finite(1)).unwrap());
        assert!(!validate_bramble(&c6, &tri, Depth::ZERO).unwrap());

        let apart = Bramble::new([[0].into(), [3].into()], Depth::ZERO);
        assert!(!validate_bramble(&c6, &apart, Depth::ZERO).unwrap());

        let bad = Bramble::new([VertexSet::EMPTY], Depth::ZERO);
        assert!(validate_bramble(&c6, &bad, Depth::ZERO).is_err());
    }

    #[test]
    fn order_examples() {
        let c6 = cycle(6).unwrap();
        let one = Bramble::new([[1, 2].into()], Depth::Finite(1));
        assert_eq!(bramble_order(&c6, &one).unwrap().order, 1);

        let windows = Bramble::new((0..6).map(|i| [i, (i + 1) % 6, (i + 2) % 6].into()), Depth::Finite(1));
        let cert = bramble_order(&c6, &windows).unwrap();
        assert_eq!(cert.order, 2);
        assert_eq!(certificate_defect(&c6, &windows, &cert), None);

        let k5 = complete(5).unwrap();
        let singles = Bramble::new((0..5).map(VertexSet::singleton), Depth::ZERO);
        assert_eq!(bramble_order(&k5, &singles).unwrap().order, 5);

        let apart = Bramble::new([[0].into(), [3].into()], Depth::ZERO);
        assert!(bramble_order(&c6, &apart).is_err());
    }

    #[test]
    fn tangle_examples() {
        let k3 = complete(3).unwrap();
        let pairs = Bramble::new([[0, 1].into(), [1, 2].into(), [0, 2].into()], Depth::Finite(1));
        assert!(is_tangle(&k3, &pairs, Depth::Finite(1)).unwrap());
        // {0},{1},{2}: no common vertex and no edge has an endpoint in all three.
        let singles = Bramble::new((0..3).map(VertexSet::singleton), Depth::ZERO);
        assert!(!is_tangle(&k3, &singles, Depth::ZERO).unwrap());
        let lone = Bramble::new([[2].into()], Depth::ZERO);
        assert!(is_tangle(&k3, &lone, Depth::ZERO).unwrap());
    }

    #[test]
    fn t_wise() {
        let a: VertexSet = [0, 1].into();
        let b: VertexSet = [1, 2].into();
        let c: VertexSet = [0, 2].into();
        assert!(t_wise_ok(&[a, b, c], 2));
        assert!(!t_wise_ok(&[a, b, c], 3));
        assert!(t_wise_ok(&[a, b], 5));
    }

    #[test]
    fn certificate_detects_tampering() {
        let c6 = cycle(6).unwrap();
        let windows = Bramble::new((0..6).map(|i| [i, (i + 1) % 6, (i + 2) % 6].into()), Depth::Finite(1));
        let mut cert = bramble_order(&c6, &windows).unwrap();
        cert.order = 3;
        assert!(certificate_defect(&c6, &windows, &cert).is_some());
        let mut cert = bramble_order(&c6, &windows).unwrap();
        cert.witnesses_per_x.as_mut().unwrap()[0].1 = 99;
        assert!(certificate_defect(&c6, &windows, &cert).is_some());
    }
}
