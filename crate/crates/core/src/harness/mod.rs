//! Verification suites over graph corpora, the high-girth suite, and
//! report generation.
//!
//! Reports are deterministic: graphs are processed in parallel but emitted
//! in input order, maps are ordered, and timings appear only on request.

mod lemma;
mod store;
mod suites;

pub use lemma::{high_girth_suite, select_graph, HighGirthReport, LemmaCheck, Method};
pub use store::{Clamp, Computed, Param, ParameterStore};
pub use suites::{Checks, InequalityResult, Relation, Suite};

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::corpus::parse_lines;
use crate::depth::Depth;
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::limits::Limits;
use crate::linkedness::WellLinkedMode;
use crate::par;
use crate::value::Exact;
use crate::witness::{witness_defect, Witness};

/// Number of random vertex orders fed to the order-based hitting set.
pub const ORDER_SAMPLES: usize = 20;

/// One record per graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub r: Depth,
    pub t: usize,
    pub parameters: BTreeMap<String, Exact>,
    #[serde(default)]
    pub inequalities: Vec<InequalityResult>,
    /// Items or parameters not evaluated because a size cap refused them.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<String, Witness>>,
    #[serde(default)]
    pub clamps: Vec<Clamp>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl ParameterReport {
    pub fn violations(&self) -> impl Iterator<Item = &InequalityResult> {
        self.inequalities.iter().filter(|i| i.is_violation())
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub rmax: u32,
    pub tmax: usize,
    pub witnesses: bool,
    pub timings: bool,
    /// Keep going after a violation instead of stopping at the first one.
    pub collect: bool,
    pub limits: Limits,
    pub mode: WellLinkedMode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: Suite::ALL.to_vec(),
            rmax: 2,
            tmax: 3,
            witnesses: false,
            timings: false,
            collect: false,
            limits: Limits::default(),
            mode: WellLinkedMode::Permissive,
        }
    }
}

impl ParameterReport {
    /// Values, clamps and failed parameters (as `skipped`) held by `store`.
    pub fn from_store(store: &ParameterStore, r: Depth, t: usize, witnesses: bool, timings: bool) -> ParameterReport {
        let g = store.graph();
        ParameterReport {
            graph6: encode_graph6(g),
            n: g.n(),
            m: g.m(),
            r,
            t,
            parameters: store.values(),
            inequalities: Vec::new(),
            skipped: store.failures().into_iter().map(|(k, e)| format!("{k}: {e}")).collect(),
            witnesses: witnesses.then(|| store.witnesses()),
            clamps: store.clamps(),
            timings_ms: timings.then(|| store.timings()),
        }
    }
}

/// Every parameter at radius `r` (with `bn_{r,t}` for the given `t`).
/// Parameters refused by a cap are listed under `skipped`.
pub fn compute_all(g: &Graph, r: Depth, t: usize, limits: &Limits, witnesses: bool) -> ParameterReport {
    compute_params(g, &Param::all(t), r, t, limits, witnesses)
}

pub fn compute_params(
    g: &Graph,
    params: &[Param],
    r: Depth,
    t: usize,
    limits: &Limits,
    witnesses: bool,
) -> ParameterReport {
    let mut store = ParameterStore::new(g, *limits, WellLinkedMode::Permissive);
    for &p in params {
        let _ = store.get(p, r);
    }
    ParameterReport::from_store(&store, r, t, witnesses, false)
}

/// Runs the selected suites on one graph.
pub fn evaluate_graph(g: &Graph, cfg: &RunConfig) -> ParameterReport {
    let mut store = ParameterStore::new(g, cfg.limits, cfg.mode);
    let ts: Vec<usize> = (1..=cfg.tmax).collect();
    let mut checks = Checks::new(&mut store);
    for suite in &cfg.suites {
        match suite {
            Suite::Classical => checks.classical(),
            Suite::Shallow => (0..=cfg.rmax).for_each(|r| checks.shallow(r, &ts)),
            Suite::Chain => (1..=cfg.rmax.max(1)).for_each(|r| checks.chain(r)),
            Suite::Minors => (0..=cfg.rmax).for_each(|r| checks.minors(Depth::Finite(r))),
            Suite::Constructions => (0..=cfg.rmax).for_each(|r| checks.constructions(r, &ts, ORDER_SAMPLES)),
        }
    }
    let Checks { results, mut skipped, .. } = checks;
    let mut rep = ParameterReport::from_store(&store, Depth::Finite(cfg.rmax), cfg.tmax, cfg.witnesses, cfg.timings);
    rep.inequalities = results;
    skipped.append(&mut rep.skipped);
    rep.skipped = skipped;
    rep
}

/// A failed item with the witnesses of every parameter it involves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub line: usize,
    pub graph6: String,
    pub item: InequalityResult,
    pub witnesses: BTreeMap<String, Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemSummary {
    pub checks: usize,
    pub violations: usize,
    pub min_slack: Option<Exact>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub checks: usize,
    pub violations: usize,
    pub skipped: usize,
    /// Keyed by `suite:id`.
    pub items: BTreeMap<String, ItemSummary>,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug)]
pub struct CorpusOutcome {
    pub reports: Vec<ParameterReport>,
    pub violations: Vec<ViolationRecord>,
    pub summary: Summary,
}

/// Evaluates every graph of a graph6 stream. Without `collect`, output stops
/// after the first graph (in input order) that has a violation, and only its
/// first violation is returned.
pub fn run_corpus(input: &str, cfg: &RunConfig) -> Result<CorpusOutcome> {
    let start = Instant::now();
    let graphs = parse_lines(input)?;
    let mut reports = par::map(&graphs, |(_, g)| {
        let mut c = cfg.clone();
        c.witnesses = true;
        evaluate_graph(g, &c)
    });
    let mut violations = Vec::new();
    let mut cut = reports.len();
    for (i, rep) in reports.iter().enumerate() {
        for item in rep.violations() {
            let all = rep.witnesses.as_ref().expect("requested above");
            let witnesses = item.params.iter().filter_map(|k| all.get(k).map(|w| (k.clone(), w.clone()))).collect();
            violations.push(ViolationRecord {
                line: graphs[i].0,
                graph6: rep.graph6.clone(),
                item: item.clone(),
                witnesses,
            });
            if !cfg.collect {
                break;
            }
        }
        if !cfg.collect && !violations.is_empty() {
            cut = i + 1;
            break;
        }
    }
    reports.truncate(cut);
    if !cfg.witnesses {
        reports.iter_mut().for_each(|r| r.witnesses = None);
    }
    let mut summary = summarize(&reports);
    summary.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(CorpusOutcome { reports, violations, summary })
}

pub fn summarize(reports: &[ParameterReport]) -> Summary {
    let mut s = Summary { graphs: reports.len(), ..Summary::default() };
    for rep in reports {
        s.skipped += rep.skipped.len();
        for item in &rep.inequalities {
            if item.informational {
                continue;
            }
            s.checks += 1;
            let e = s.items.entry(format!("{}:{}", item.suite.name(), item.id)).or_default();
            e.checks += 1;
            if !item.holds {
                s.violations += 1;
                e.violations += 1;
            }
            e.min_slack = Some(e.min_slack.map_or(item.slack, |m| m.min(item.slack)));
        }
    }
    s
}

/// Re-verifies every witness in a report against the graph, returning the
/// keys whose witness fails.
pub fn recheck_witnesses(g: &Graph, report: &ParameterReport) -> Vec<(String, String)> {
    let mut bad = Vec::new();
    for (key, w) in report.witnesses.iter().flatten() {
        let why = match witness_defect(g, w) {
            Ok(None) => None,
            Ok(Some(why)) => Some(why),
            Err(e) => Some(e.to_string()),
        };
        let claimed = report.parameters.get(key);
        if let Some(why) = why {
            bad.push((key.clone(), why));
        } else if claimed != Some(&w.value()) {
            bad.push((key.clone(), "witness value differs from the reported value".into()));
        }
    }
    bad
}

/// Corrupts the `bn` certificate of a report on `g` (claiming one more than
/// the certified order) and checks that re-verification rejects it.
pub fn self_test(g: &Graph, r: Depth, limits: &Limits) -> Result<bool> {
    let mut store = ParameterStore::new(g, *limits, WellLinkedMode::Permissive);
    store.get(Param::Bn, r)?;
    let key = Param::Bn.key(store.effective(Param::Bn, r));
    let Some(Witness::Bramble { bramble_kind, value, bramble, mut certificate }) = store.witness(&key) else {
        return Ok(false);
    };
    certificate.order += 1;
    let forged = Witness::Bramble { bramble_kind, value: value + 1, bramble, certificate };
    Ok(!matches!(witness_defect(g, &forged), Ok(None)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn value(rep: &ParameterReport, key: &str) -> i64 {
        rep.parameters[key].0.to_integer()
    }

    #[test]
    fn compute_all_examples() {
        let l = Limits::default();
        let k1 = compute_all(&complete(1).unwrap(), Depth::Finite(1), 2, &l, false);
        for key in ["scol@inf", "bn@inf", "link@inf", "well@inf", "omega@inf", "grid@inf"] {
            assert_eq!(value(&k1, key), 1, "{key}");
        }
        assert_eq!(value(&k1, "nabla@inf"), 0);

        let k4 = compute_all(&complete(4).unwrap(), Depth::Finite(1), 2, &l, true);
        for (key, v) in [("scol@1", 4), ("bn@1", 4), ("omega@1", 4), ("link@1", 2), ("well@1", 4)] {
            assert_eq!(value(&k4, key), v, "{key}");
        }
        assert!(recheck_witnesses(&complete(4).unwrap(), &k4).is_empty());

        let p4 = compute_all(&path(4).unwrap(), Depth::Finite(1), 2, &l, false);
        for key in ["scol@1", "bn@1", "omega@1"] {
            assert_eq!(value(&p4, key), 2, "{key}");
        }
    }

    #[test]
    fn suites_hold_on_small_graphs() {
        let cfg = RunConfig { rmax: 1, tmax: 2, ..RunConfig::default() };
        for g in [complete(1).unwrap(), cycle(6).unwrap(), path(4).unwrap()] {
            let rep = evaluate_graph(&g, &cfg);
            let bad: Vec<_> = rep.violations().collect();
            assert!(bad.is_empty(), "{}: {bad:?}", rep.graph6);
            assert!(rep.skipped.is_empty(), "{:?}", rep.skipped);
        }
    }

    #[test]
    fn run_corpus_orders_and_stops() {
        let input = "A_\nBw\n\nC~\n";
        let cfg = RunConfig { rmax: 1, tmax: 2, ..RunConfig::default() };
        let out = run_corpus(input, &cfg).unwrap();
        assert_eq!(out.reports.len(), 3);
        assert_eq!(out.reports[1].graph6, "Bw");
        assert!(out.violations.is_empty());
        assert!(run_corpus("", &cfg).unwrap().reports.is_empty());
        assert!(run_corpus("A_\n??x\n", &cfg).unwrap_err().to_string().contains("line 2"));
    }

    #[test]
    fn clamps_are_recorded() {
        let cfg = RunConfig { suites: vec![Suite::Chain], rmax: 1, tmax: 1, ..RunConfig::default() };
        let rep = evaluate_graph(&cycle(5).unwrap(), &cfg);
        assert!(rep.clamps.iter().any(|c| c.requested == Depth::Finite(46) && c.used == Depth::Infinite));
    }

    #[test]
    fn self_test_detects_forgery() {
        assert!(self_test(&cycle(5).unwrap(), Depth::Finite(1), &Limits::default()).unwrap());
    }
}
