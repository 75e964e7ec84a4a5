//! Serializable certificates for parameter values and their verifiers.
//!
//! A witness proves one side of a value: an order proves an upper bound on
//! `scol_r`, everything else proves a lower bound (a bramble of that order,
//! a model of that pattern, a linked or well-linked set). Optimality of the
//! exhaustive searches is not certified.

use serde::{Deserialize, Serialize};

use crate::brambles::{bramble_defect, certificate_defect, Bramble, BrambleKind, OrderCertificate};
use crate::coloring::{scol_given_order, LinearOrder};
use crate::depth::Depth;
use crate::error::Result;
use crate::generators::{complete, grid};
use crate::graph::Graph;
use crate::linkedness::{linked_witness_defect, well_linked_witness_defect, LinkedWitness, WellLinkedWitness};
use crate::minors::{contracted_edges, model_defect, DensityWitness, MinorModel};
use crate::value::Exact;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Every strong `radius`-reachability set under `order` has at most `value` vertices.
    Order {
        radius: Depth,
        value: usize,
        order: LinearOrder,
    },
    Bramble {
        bramble_kind: BrambleKind,
        value: usize,
        bramble: Bramble,
        certificate: OrderCertificate,
    },
    /// A model of `K_value`.
    CliqueModel {
        value: usize,
        model: MinorModel,
    },
    /// A model of the `value` by `value` grid.
    GridModel {
        value: usize,
        model: MinorModel,
    },
    Density {
        value: Exact,
        family: DensityWitness,
    },
    Linked(LinkedWitness),
    WellLinked(WellLinkedWitness),
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Order { .. } => "order",
            Witness::Bramble { .. } => "bramble",
            Witness::CliqueModel { .. } => "clique_model",
            Witness::GridModel { .. } => "grid_model",
            Witness::Density { .. } => "density",
            Witness::Linked(_) => "linked",
            Witness::WellLinked(_) => "well_linked",
        }
    }

    /// The value this witness certifies.
    pub fn value(&self) -> Exact {
        match self {
            Witness::Order { value, .. }
            | Witness::Bramble { value, .. }
            | Witness::CliqueModel { value, .. }
            | Witness::GridModel { value, .. } => Exact::from(*value),
            Witness::Density { value, .. } => *value,
            Witness::Linked(w) => Exact::from(w.k),
            Witness::WellLinked(w) => Exact::from(w.set.len()),
        }
    }
}

/// The first reason `w` fails to certify its value on `g`, if any.
pub fn witness_defect(g: &Graph, w: &Witness) -> Result<Option<String>> {
    Ok(match w {
        Witness::Order { radius, value, order } => {
            if order.len() != g.n() {
                Some("order does not cover the graph".into())
            } else {
                let got = scol_given_order(g, *radius, order)?;
                (got != *value).then(|| format!("order gives {got}, witness claims {value}"))
            }
        }
        Witness::Bramble { bramble_kind, value, bramble, certificate } => {
            if bramble.elements().iter().any(|e| e.is_empty()) {
                Some("empty element".into())
            } else if let Some(why) = bramble_defect(g, bramble.elements(), bramble.depth(), *bramble_kind)? {
                Some(why)
            } else if let Some(why) = certificate_defect(g, bramble, certificate) {
                Some(why)
            } else {
                (certificate.order != *value)
                    .then(|| format!("certified order {}, witness claims {value}", certificate.order))
            }
        }
        Witness::CliqueModel { value, model } => {
            if model.branch_sets.len() != *value {
                Some(format!("{} branch sets for K_{value}", model.branch_sets.len()))
            } else {
                model_defect(g, &complete(*value)?, &model.branch_sets, model.depth)?
            }
        }
        Witness::GridModel { value, model } => {
            if model.branch_sets.len() != value * value || *value == 0 {
                Some(format!("{} branch sets for the {value}x{value} grid", model.branch_sets.len()))
            } else {
                model_defect(g, &grid(*value)?, &model.branch_sets, model.depth)?
            }
        }
        Witness::Density { value, family } => density_defect(g, *value, family)?,
        Witness::Linked(l) => linked_witness_defect(g, l),
        Witness::WellLinked(l) => well_linked_witness_defect(g, l),
    })
}

fn density_defect(g: &Graph, value: Exact, f: &DensityWitness) -> Result<Option<String>> {
    if f.branch_sets.is_empty() {
        return Ok((!value.is_zero()).then(|| "empty family with nonzero density".into()));
    }
    // Disjointness, connectivity and radius are the model conditions for
    // the edgeless pattern on the same number of vertices.
    let edgeless = Graph::empty(f.branch_sets.len())?;
    if let Some(why) = model_defect(g, &edgeless, &f.branch_sets, f.depth)? {
        return Ok(Some(why));
    }
    let edges = contracted_edges(g, &f.branch_sets);
    if edges != f.edges {
        return Ok(Some(format!("family has {edges} edges, witness claims {}", f.edges)));
    }
    let density = f.density();
    Ok((density != value).then(|| format!("family has density {density}, witness claims {value}")))
}

pub fn verify_witness(g: &Graph, w: &Witness) -> bool {
    matches!(witness_defect(g, w), Ok(None))
}
