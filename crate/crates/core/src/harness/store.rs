//! Per-graph cache of exactly computed parameters and their witnesses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::brambles::{max_order_bramble, BrambleKind, BrambleSearch};
use crate::coloring::scol_exact;
use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::linkedness::{link_r, well_r, WellLinkedMode};
use crate::minors::{grid_r, nabla_r, omega_r};
use crate::value::Exact;
use crate::witness::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Scol,
    Bn,
    /// `bn_{r,t}`.
    Bnt(usize),
    Tn,
    Link,
    Well,
    Omega,
    Nabla,
    Grid,
}

impl Param {
    /// Every parameter at one radius, `bn_{r,t}` with the given `t`.
    pub fn all(t: usize) -> [Param; 9] {
        use Param::*;
        [Scol, Bn, Bnt(t), Tn, Link, Well, Omega, Nabla, Grid]
    }

    /// Report key, e.g. `bn@1`, `bn_t2@inf`.
    pub fn key(self, r: Depth) -> String {
        format!("{self}@{r}")
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Scol => f.write_str("scol"),
            Param::Bn => f.write_str("bn"),
            Param::Bnt(t) => write!(f, "bn_t{t}"),
            Param::Tn => f.write_str("tn"),
            Param::Link => f.write_str("link"),
            Param::Well => f.write_str("well"),
            Param::Omega => f.write_str("omega"),
            Param::Nabla => f.write_str("nabla"),
            Param::Grid => f.write_str("grid"),
        }
    }
}

/// Parses the names used on the command line; `bnt` takes `t` separately
/// and parses as `Bnt(0)`.
impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "scol" => Param::Scol,
            "bn" => Param::Bn,
            "bnt" => Param::Bnt(0),
            "tn" => Param::Tn,
            "link" => Param::Link,
            "well" => Param::Well,
            "omega" => Param::Omega,
            "nabla" => Param::Nabla,
            "grid" => Param::Grid,
            other => return Err(Error::InvalidArgument(format!("unknown parameter `{other}`"))),
        })
    }
}

/// A requested radius replaced by an equivalent one: beyond `n - 1` every
/// radius behaves like infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Clamp {
    pub param: String,
    pub requested: Depth,
    pub used: Depth,
}

#[derive(Clone, Debug)]
pub struct Computed {
    pub value: Exact,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

pub struct ParameterStore<'g> {
    g: &'g Graph,
    limits: Limits,
    mode: WellLinkedMode,
    values: BTreeMap<(Param, Depth), std::result::Result<Computed, Error>>,
    brambles: BTreeMap<(BrambleKind, Depth), BrambleSearch>,
    clamps: BTreeSet<Clamp>,
}

impl<'g> ParameterStore<'g> {
    pub fn new(g: &'g Graph, limits: Limits, mode: WellLinkedMode) -> Self {
        ParameterStore { g, limits, mode, values: BTreeMap::new(), brambles: BTreeMap::new(), clamps: BTreeSet::new() }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// The radius actually used for `r`, recording a clamp when it differs.
    pub fn effective(&mut self, p: Param, r: Depth) -> Depth {
        let n = self.g.n();
        let used = match r {
            Depth::Finite(x) if n > 0 && x as usize > n - 1 => Depth::Infinite,
            other => other,
        };
        if used != r {
            self.clamps.insert(Clamp { param: p.to_string(), requested: r, used });
        }
        used
    }

    /// The exact value of `p` at radius `r`, computing it on first use.
    pub fn get(&mut self, p: Param, r: Depth) -> Result<Exact> {
        let r = self.effective(p, r);
        if !self.values.contains_key(&(p, r)) {
            let start = Instant::now();
            let got = self.compute(p, r).map(|(value, witness)| Computed {
                value,
                witness,
                elapsed_ms: start.elapsed().as_millis() as u64,
            });
            self.values.insert((p, r), got);
        }
        self.values[&(p, r)].as_ref().map(|c| c.value).map_err(Clone::clone)
    }

    /// The bramble found for `bn_r` (or the given kind), computing it if needed.
    pub fn bramble(&mut self, kind: BrambleKind, r: Depth) -> Result<BrambleSearch> {
        let p = match kind {
            BrambleKind::Plain => Param::Bn,
            BrambleKind::Intersecting(t) => Param::Bnt(t),
            BrambleKind::Tangle => Param::Tn,
        };
        self.get(p, r)?;
        let r = self.effective(p, r);
        Ok(self.brambles[&(kind, r)].clone())
    }

    fn search_brambles(&mut self, kind: BrambleKind, r: Depth) -> Result<(Exact, Option<Witness>)> {
        let s = max_order_bramble(self.g, r, kind, &self.limits)?;
        let w = Witness::Bramble {
            bramble_kind: kind,
            value: s.value,
            bramble: s.bramble.clone(),
            certificate: s.certificate.clone(),
        };
        let value = Exact::from(s.value);
        self.brambles.insert((kind, r), s);
        Ok((value, Some(w)))
    }

    fn compute(&mut self, p: Param, r: Depth) -> Result<(Exact, Option<Witness>)> {
        let g = self.g;
        let l = self.limits;
        match p {
            Param::Scol => {
                let s = scol_exact(g, r, &l)?;
                let value = s.value;
                Ok((value.into(), Some(Witness::Order { radius: r, value, order: s.witness_order })))
            }
            Param::Bn => self.search_brambles(BrambleKind::Plain, r),
            Param::Bnt(t) => self.search_brambles(BrambleKind::for_t(t)?, r),
            Param::Tn => self.search_brambles(BrambleKind::Tangle, r),
            Param::Link => {
                let (k, w) = link_r(g, r, &l)?;
                Ok((k.into(), w.map(Witness::Linked)))
            }
            Param::Well => {
                let (k, w) = well_r(g, r, self.mode, &l)?;
                Ok((k.into(), w.map(Witness::WellLinked)))
            }
            Param::Omega => {
                let (k, model) = omega_r(g, r, &l)?;
                Ok((k.into(), (k > 0).then_some(Witness::CliqueModel { value: k, model })))
            }
            Param::Nabla => {
                let (value, family) = nabla_r(g, r, &l)?;
                Ok((value, Some(Witness::Density { value, family })))
            }
            Param::Grid => {
                let (k, model) = grid_r(g, r, &l)?;
                Ok((k.into(), (k > 0).then_some(Witness::GridModel { value: k, model })))
            }
        }
    }

    /// Successfully computed values, keyed as in reports.
    pub fn values(&self) -> BTreeMap<String, Exact> {
        self.values.iter().filter_map(|(&(p, r), c)| c.as_ref().ok().map(|c| (p.key(r), c.value))).collect()
    }

    pub fn witnesses(&self) -> BTreeMap<String, Witness> {
        self.values
            .iter()
            .filter_map(|(&(p, r), c)| c.as_ref().ok().and_then(|c| c.witness.clone()).map(|w| (p.key(r), w)))
            .collect()
    }

    pub fn witness(&self, key: &str) -> Option<Witness> {
        self.values
            .iter()
            .find(|(&(p, r), _)| p.key(r) == key)
            .and_then(|(_, c)| c.as_ref().ok())
            .and_then(|c| c.witness.clone())
    }

    pub fn timings(&self) -> BTreeMap<String, u64> {
        self.values.iter().filter_map(|(&(p, r), c)| c.as_ref().ok().map(|c| (p.key(r), c.elapsed_ms))).collect()
    }

    /// Parameters that could not be computed, with the reason.
    pub fn failures(&self) -> Vec<(String, Error)> {
        self.values.iter().filter_map(|(&(p, r), c)| c.as_ref().err().map(|e| (p.key(r), e.clone()))).collect()
    }

    pub fn clamps(&self) -> Vec<Clamp> {
        self.clamps.iter().cloned().collect()
    }
}
