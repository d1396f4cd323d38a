//! The finite set S closed under fiber products and β, with a certificate
//! that can be rechecked without searching.

mod table;

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::artin::{
    beta, build_red_ngon, build_w, build_x1, build_x2, build_y1, build_y2, build_y3, check_w_labels,
    q_contractible, q_fillable, recheck, ArtinError, QVerdict, DEFAULT_COSET_LIMIT,
};
use crate::canon::{canonical_form, CanonicalKey};
use crate::embed::{check_embedding, embeds_into, Embedding};
use crate::graph::{connected_components, ColoredGraph};
use crate::io::{GraphDocument, IoError};
use crate::product::{fiber_product, project_second};

pub use table::{build_table, Table, TableRow, REFERENCE_TABLE, TABLE_COLUMNS, TABLE_ROWS};

pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Coset bound for each contractibility check.
    pub cosets: usize,
    /// Maximum number of adoption rounds.
    pub rounds: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cosets: DEFAULT_COSET_LIMIT, rounds: 10 }
    }
}

#[derive(Debug, Error)]
pub enum ClosureError {
    #[error(transparent)]
    Artin(#[from] ArtinError),
    #[error("q-contractibility of component {index} of {left} ⊗ {right} is unknown after {cosets} cosets")]
    Unknown { left: String, right: String, index: usize, cosets: usize },
    #[error("closure still adopting new elements after {0} rounds")]
    NonTermination(usize),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("certificate: {0}")]
    Certificate(String),
    #[error(transparent)]
    Io(#[from] IoError),
}

impl From<crate::graph::GraphError> for ClosureError {
    fn from(e: crate::graph::GraphError) -> Self {
        ClosureError::Artin(e.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    Builder { name: String },
    Component { left: String, right: String, index: usize },
    Beta { of: String },
}

#[derive(Clone, Debug)]
pub struct SElement {
    pub name: String,
    pub graph: ColoredGraph,
    pub origin: Origin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ComponentClass {
    EmbedsInto { element: String, map: Vec<usize> },
    QContractible { cosets: usize },
    New,
    Unknown { cosets: usize },
}

/// Components of `g ⊗ h` that carry at least one edge, projected to the
/// second factor, in canonical component order.
pub fn census(g: &ColoredGraph, h: &ColoredGraph) -> Result<Vec<ColoredGraph>, ClosureError> {
    let product = fiber_product(g, h)?;
    connected_components(&product)
        .into_iter()
        .filter(|c| c.edge_count() > 0)
        .map(|c| project_second(&c).map_err(ClosureError::from))
        .collect()
}

/// Embeds-into against `elements`, then q-contractibility, else new.
pub fn classify_component(
    c: &ColoredGraph,
    elements: &[SElement],
    n: u32,
    respect_wlabels: bool,
    limit: usize,
) -> Result<ComponentClass, ArtinError> {
    for e in elements {
        if let Some(m) = embeds_into(c, &e.graph, respect_wlabels) {
            return Ok(ComponentClass::EmbedsInto { element: e.name.clone(), map: m.map });
        }
    }
    Ok(match q_contractible(c, n, limit)? {
        QVerdict::Contractible { cosets } => ComponentClass::QContractible { cosets },
        QVerdict::NotContractible { .. } => ComponentClass::New,
        QVerdict::Unknown { cosets } => ComponentClass::Unknown { cosets },
    })
}

/// Named graphs used to name closure elements: W, plus X1, X2 for n ≥ 5 or
/// Y1, Y2, Y3 for n = 4.
pub fn reference_graphs(n: u32) -> Result<Vec<(String, ColoredGraph)>, ArtinError> {
    let mut out = vec![("W".to_string(), build_w(n)?)];
    if n == 4 {
        out.push(("Y1".into(), build_y1(n)?));
        out.push(("Y2".into(), build_y2(n)?));
        out.push(("Y3".into(), build_y3(n)?));
    } else {
        out.push(("X1".into(), build_x1(n)?));
        out.push(("X2".into(), build_x2(n)?));
    }
    Ok(out)
}

fn labeled_key(g: &ColoredGraph) -> CanonicalKey {
    canonical_form(g, true).expect("elements are connected, immersed and labeled")
}

struct Namer {
    references: Vec<(String, CanonicalKey)>,
    used: HashSet<String>,
    fresh: usize,
}

impl Namer {
    fn name(&mut self, g: &ColoredGraph, origin: &Origin) -> String {
        let key = labeled_key(g);
        let preferred = self
            .references
            .iter()
            .find(|(_, k)| *k == key)
            .map(|(name, _)| name.clone())
            .or_else(|| match origin {
                Origin::Beta { of } => Some(format!("b{of}")),
                _ => None,
            });
        let name = match preferred {
            Some(p) if !self.used.contains(&p) => p,
            _ => loop {
                self.fresh += 1;
                let candidate = format!("Q{}", self.fresh);
                if !self.used.contains(&candidate) {
                    break candidate;
                }
            },
        };
        self.used.insert(name.clone());
        name
    }
}

enum Pre {
    Known,
    Contractible,
    Candidate(ColoredGraph),
}

/// Run the fixpoint: fiber products of all ordered pairs in S, adoption of
/// components that neither embed into S nor are q-contractible, then β of
/// every element, until a round adopts nothing.
///
/// Pairs are evaluated in parallel; adoption happens sequentially in pair
/// order and component order, so the result does not depend on scheduling.
pub fn run_closure(n: u32, limits: Limits) -> Result<Vec<SElement>, ClosureError> {
    let mut namer = Namer {
        references: reference_graphs(n)?.iter().map(|(name, g)| (name.clone(), labeled_key(g))).collect(),
        used: HashSet::new(),
        fresh: 0,
    };
    let w = build_w(n)?;
    let origin = Origin::Builder { name: "W".into() };
    let mut elements = vec![SElement { name: namer.name(&w, &origin), graph: w, origin }];
    let mut evaluated = 0;
    let mut beta_done = 0;

    for _round in 0..limits.rounds {
        let m = elements.len();
        let pairs: Vec<(usize, usize)> =
            (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|&(i, j)| i.max(j) >= evaluated).collect();
        let snapshot = &elements[..];
        let results: Vec<Result<Vec<Pre>, ClosureError>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                census(&snapshot[i].graph, &snapshot[j].graph)?
                    .into_iter()
                    .enumerate()
                    .map(|(index, c)| {
                        if snapshot.iter().any(|e| embeds_into(&c, &e.graph, true).is_some()) {
                            return Ok(Pre::Known);
                        }
                        match q_contractible(&c, n, limits.cosets)? {
                            QVerdict::Contractible { .. } => Ok(Pre::Contractible),
                            QVerdict::NotContractible { .. } => Ok(Pre::Candidate(c)),
                            QVerdict::Unknown { cosets } => Err(ClosureError::Unknown {
                                left: snapshot[i].name.clone(),
                                right: snapshot[j].name.clone(),
                                index,
                                cosets,
                            }),
                        }
                    })
                    .collect()
            })
            .collect();
        evaluated = m;

        let mut adopted = false;
        for (&(i, j), result) in pairs.iter().zip(results) {
            for (index, pre) in result?.into_iter().enumerate() {
                let Pre::Candidate(c) = pre else { continue };
                if elements[m..].iter().any(|e| embeds_into(&c, &e.graph, true).is_some()) {
                    continue;
                }
                let origin = Origin::Component { left: elements[i].name.clone(), right: elements[j].name.clone(), index };
                let name = namer.name(&c, &origin);
                elements.push(SElement { name, graph: c, origin });
                adopted = true;
            }
        }

        let count = elements.len();
        let images: Vec<Result<ColoredGraph, ArtinError>> =
            elements[beta_done..count].par_iter().map(|e| beta(&e.graph, n)).collect();
        for (k, image) in images.into_iter().enumerate() {
            let image = image?;
            if image.is_empty() || elements.iter().any(|e| embeds_into(&image, &e.graph, true).is_some()) {
                continue;
            }
            let origin = Origin::Beta { of: elements[beta_done + k].name.clone() };
            let name = namer.name(&image, &origin);
            elements.push(SElement { name, graph: image, origin });
            adopted = true;
        }
        beta_done = count;

        if !adopted {
            return Ok(elements);
        }
    }
    Err(ClosureError::NonTermination(limits.rounds))
}

/// Indices of elements that do not embed (with labels) into another
/// element; among isomorphic elements the earliest is kept.
pub fn maximal_indices(elements: &[SElement]) -> Vec<usize> {
    let keys: Vec<CanonicalKey> = elements.iter().map(|e| labeled_key(&e.graph)).collect();
    (0..elements.len())
        .filter(|&i| {
            !(0..elements.len()).any(|j| {
                j != i
                    && (keys[i] != keys[j] || j < i)
                    && embeds_into(&elements[i].graph, &elements[j].graph, true).is_some()
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Containment {
    pub element: String,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub name: String,
    pub origin: Origin,
    pub graph: GraphDocument,
    /// For non-maximal elements: a maximal element containing this one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contained_in: Option<Containment>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub vertices: usize,
    pub edges: usize,
    #[serde(flatten)]
    pub class: ComponentClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub left: String,
    pub right: String,
    pub components: Vec<ComponentRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaEntry {
    pub element: String,
    pub target: String,
    pub isomorphic: bool,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QEntry {
    pub graph: GraphDocument,
    pub verdict: QVerdict,
    pub beta_graph: GraphDocument,
    pub beta_verdict: QVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureCertificate {
    pub format_version: u32,
    pub n: u32,
    pub coset_limit: usize,
    pub elements: Vec<ElementRecord>,
    pub maximal: Vec<String>,
    pub pair_ledger: Vec<PairEntry>,
    pub beta_ledger: Vec<BetaEntry>,
    pub q_bucket: Vec<QEntry>,
}

impl ClosureCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, ClosureError> {
        serde_json::from_str(text).map_err(|e| ClosureError::Io(IoError::Parse(e)))
    }

    /// Decoded graph of the named element.
    pub fn graph(&self, name: &str) -> Result<ColoredGraph, ClosureError> {
        let record = self
            .elements
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| ClosureError::Certificate(format!("no element named {name}")))?;
        Ok(record.graph.to_graph()?)
    }
}

/// Compute S for `n` and a certificate for it.
pub fn closure(n: u32, limits: Limits) -> Result<ClosureCertificate, ClosureError> {
    if n < 4 {
        return Err(ArtinError::BadParameter(format!("n must be at least 4, got {n}")).into());
    }
    let elements = run_closure(n, limits)?;
    let maximal_idx = maximal_indices(&elements);
    let maximal: Vec<SElement> = maximal_idx.iter().map(|&i| elements[i].clone()).collect();

    let records = elements
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let contained_in = if maximal_idx.contains(&i) {
                None
            } else {
                maximal.iter().find_map(|m| {
                    embeds_into(&e.graph, &m.graph, true).map(|emb| Containment { element: m.name.clone(), map: emb.map })
                })
            };
            ElementRecord { name: e.name.clone(), origin: e.origin.clone(), graph: GraphDocument::from_graph(&e.graph, n), contained_in }
        })
        .collect();

    let pairs: Vec<(usize, usize)> =
        (0..maximal.len()).flat_map(|i| (0..maximal.len()).map(move |j| (i, j))).collect();
    let ledger: Vec<Result<(PairEntry, Vec<(ColoredGraph, usize)>), ClosureError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&maximal[i], &maximal[j]);
            let mut components = Vec::new();
            let mut contractible = Vec::new();
            for (index, c) in census(&a.graph, &b.graph)?.into_iter().enumerate() {
                let class = classify_component(&c, &maximal, n, true, limits.cosets)?;
                match &class {
                    ComponentClass::QContractible { cosets } => contractible.push((c.clone(), *cosets)),
                    ComponentClass::EmbedsInto { .. } => {}
                    ComponentClass::Unknown { cosets } => {
                        return Err(ClosureError::Unknown { left: a.name.clone(), right: b.name.clone(), index, cosets: *cosets })
                    }
                    ComponentClass::New => {
                        return Err(ClosureError::Assertion(format!(
                            "component {index} of {} ⊗ {} escapes the maximal elements",
                            a.name, b.name
                        )))
                    }
                }
                components.push(ComponentRecord { vertices: c.vertex_count(), edges: c.edge_count(), class });
            }
            Ok((PairEntry { left: a.name.clone(), right: b.name.clone(), components }, contractible))
        })
        .collect();
    let mut pair_ledger = Vec::new();
    let mut q_graphs: BTreeMap<CanonicalKey, (ColoredGraph, usize)> = BTreeMap::new();
    for entry in ledger {
        let (entry, contractible) = entry?;
        pair_ledger.push(entry);
        for (c, cosets) in contractible {
            q_graphs.entry(labeled_key(&c)).or_insert((c, cosets));
        }
    }

    let mut beta_ledger = Vec::new();
    for m in &maximal {
        let image = beta(&m.graph, n)?;
        let key = labeled_key(&image);
        let found = maximal.iter().find_map(|t| embeds_into(&image, &t.graph, true).map(|e| (t, e)));
        let Some((target, emb)) = found else {
            return Err(ClosureError::Assertion(format!("β({}) embeds into no maximal element", m.name)));
        };
        beta_ledger.push(BetaEntry {
            element: m.name.clone(),
            target: target.name.clone(),
            isomorphic: key == labeled_key(&target.graph),
            map: emb.map,
        });
    }

    let q_bucket = q_graphs
        .into_values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(c, cosets)| {
            let image = beta(c, n)?;
            let beta_verdict = q_contractible(&image, n, limits.cosets)?;
            Ok(QEntry {
                graph: GraphDocument::from_graph(c, n),
                verdict: QVerdict::Contractible { cosets: *cosets },
                beta_graph: GraphDocument::from_graph(&image, n),
                beta_verdict,
            })
        })
        .collect::<Result<Vec<_>, ArtinError>>()?;

    Ok(ClosureCertificate {
        format_version: CERTIFICATE_VERSION,
        n,
        coset_limit: limits.cosets,
        elements: records,
        maximal: maximal.iter().map(|m| m.name.clone()).collect(),
        pair_ledger,
        beta_ledger,
        q_bucket,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, condition: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !condition {
            self.failures.push(what());
        }
    }
}

/// Recheck every claim of a certificate from its stored graphs: element
/// validity, containment witnesses, every ledger embedding and q-verdict,
/// and the β ledger. Performs no search.
pub fn verify_certificate(cert: &ClosureCertificate) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n = cert.n;
    report.check(cert.format_version == CERTIFICATE_VERSION, || format!("unsupported format_version {}", cert.format_version));

    let mut graphs: BTreeMap<&str, ColoredGraph> = BTreeMap::new();
    for e in &cert.elements {
        match e.graph.to_graph() {
            Ok(g) => {
                report.check(graphs.insert(&e.name, g).is_none(), || format!("duplicate element name {}", e.name));
            }
            Err(err) => report.check(false, || format!("element {}: {err}", e.name)),
        }
    }
    let is_max = |name: &str| cert.maximal.iter().any(|m| m == name);
    for name in &cert.maximal {
        let Some(g) = graphs.get(name.as_str()) else {
            report.check(false, || format!("maximal element {name} is not listed"));
            continue;
        };
        report.check(g.is_connected() && !g.is_empty(), || format!("{name} is not connected"));
        report.check(check_w_labels(g, n).is_ok(), || format!("{name} does not lie over W({n})"));
        report.check(q_fillable(g, n), || format!("{name} is not q-fillable"));
    }
    for e in &cert.elements {
        if is_max(&e.name) {
            continue;
        }
        let ok = match (&e.contained_in, graphs.get(e.name.as_str())) {
            (Some(c), Some(g)) => is_max(&c.element)
                && graphs.get(c.element.as_str()).is_some_and(|t| check_embedding(g, t, &Embedding { map: c.map.clone() }, true)),
            _ => false,
        };
        report.check(ok, || format!("containment witness of {} fails", e.name));
    }

    for a in &cert.maximal {
        for b in &cert.maximal {
            let entry = cert.pair_ledger.iter().find(|p| &p.left == a && &p.right == b);
            report.check(entry.is_some(), || format!("pair {a} ⊗ {b} missing from ledger"));
        }
    }
    let checks: Vec<VerifyReport> = cert
        .pair_ledger
        .par_iter()
        .map(|entry| verify_pair(entry, &graphs, &cert.maximal, n))
        .collect();
    for r in checks {
        report.checks += r.checks;
        report.failures.extend(r.failures);
    }

    for entry in &cert.beta_ledger {
        let (Some(g), Some(t)) = (graphs.get(entry.element.as_str()), graphs.get(entry.target.as_str())) else {
            report.check(false, || format!("β ledger names unknown elements {} / {}", entry.element, entry.target));
            continue;
        };
        match beta(g, n) {
            Ok(image) => {
                report.check(check_embedding(&image, t, &Embedding { map: entry.map.clone() }, true), || {
                    format!("β({}) embedding into {} fails", entry.element, entry.target)
                });
                let iso = canonical_form(&image, true).ok() == canonical_form(t, true).ok();
                report.check(iso == entry.isomorphic, || format!("β({}) isomorphism flag is wrong", entry.element));
            }
            Err(err) => report.check(false, || format!("β({}): {err}", entry.element)),
        }
        if entry.isomorphic {
            let back = cert.beta_ledger.iter().find(|b| b.element == entry.target);
            report.check(back.is_some_and(|b| b.isomorphic && b.target == entry.element), || {
                format!("β ledger is not an involution at {}", entry.element)
            });
        }
    }
    for m in &cert.maximal {
        report.check(cert.beta_ledger.iter().any(|b| &b.element == m), || format!("β({m}) missing from ledger"));
    }

    let q_checks: Vec<VerifyReport> = cert
        .q_bucket
        .par_iter()
        .enumerate()
        .map(|(i, q)| {
            let mut r = VerifyReport::default();
            match (q.graph.to_graph(), q.beta_graph.to_graph()) {
                (Ok(k), Ok(bk)) => {
                    r.check(q.verdict.is_contractible() && recheck(&k, n, &q.verdict), || format!("q-bucket entry {i} fails"));
                    let same = beta(&k, n).is_ok_and(|img| {
                        img.vertex_count() == bk.vertex_count()
                            && (img.is_empty() || canonical_form(&img, true).ok() == canonical_form(&bk, true).ok())
                    });
                    r.check(same, || format!("q-bucket entry {i}: stored β image differs"));
                    r.check(recheck(&bk, n, &q.beta_verdict), || format!("q-bucket entry {i}: β verdict fails"));
                }
                _ => r.check(false, || format!("q-bucket entry {i} does not decode")),
            }
            r
        })
        .collect();
    for r in q_checks {
        report.checks += r.checks;
        report.failures.extend(r.failures);
    }
    report
}

fn verify_pair(entry: &PairEntry, graphs: &BTreeMap<&str, ColoredGraph>, maximal: &[String], n: u32) -> VerifyReport {
    let mut r = VerifyReport::default();
    let (Some(a), Some(b)) = (graphs.get(entry.left.as_str()), graphs.get(entry.right.as_str())) else {
        r.check(false, || format!("ledger pair {} ⊗ {} names unknown elements", entry.left, entry.right));
        return r;
    };
    let components = match census(a, b) {
        Ok(c) => c,
        Err(err) => {
            r.check(false, || format!("{} ⊗ {}: {err}", entry.left, entry.right));
            return r;
        }
    };
    r.check(components.len() == entry.components.len(), || {
        format!("{} ⊗ {}: {} components, ledger has {}", entry.left, entry.right, components.len(), entry.components.len())
    });
    for (index, (c, record)) in components.iter().zip(&entry.components).enumerate() {
        let ok = c.vertex_count() == record.vertices
            && c.edge_count() == record.edges
            && match &record.class {
                ComponentClass::EmbedsInto { element, map } => {
                    maximal.contains(element)
                        && graphs.get(element.as_str()).is_some_and(|t| check_embedding(c, t, &Embedding { map: map.clone() }, true))
                }
                ComponentClass::QContractible { cosets } => recheck(c, n, &QVerdict::Contractible { cosets: *cosets }),
                _ => false,
            };
        r.check(ok, || format!("{} ⊗ {} component {index} fails its witness", entry.left, entry.right));
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WSquareReport {
    pub n: u32,
    pub components: usize,
    pub w_copies: usize,
    pub ngons: usize,
    pub doubles: Vec<usize>,
    pub doubles_isomorphic: bool,
    pub other: Vec<usize>,
}

impl WSquareReport {
    pub fn ok(&self) -> bool {
        let n = self.n as usize;
        self.w_copies == 1
            && self.ngons == n - 5
            && self.doubles == vec![2 * n, 2 * n]
            && self.doubles_isomorphic
            && self.other.is_empty()
    }
}

/// Classify the components of W(n) ⊗ W(n): copies of W, red n-cycles, and
/// the two 2n-vertex components, which must be isomorphic once labels are
/// forgotten.
pub fn w_square_report(n: u32) -> Result<WSquareReport, ClosureError> {
    if n < 5 {
        return Err(ArtinError::BadParameter(format!("n must be at least 5, got {n}")).into());
    }
    let w = build_w(n)?;
    let w_key = canonical_form(&w, false)?;
    let ngon_key = canonical_form(&build_red_ngon(n)?, false)?;
    let parts = connected_components(&fiber_product(&w, &w)?);
    let mut report = WSquareReport {
        n,
        components: parts.len(),
        w_copies: 0,
        ngons: 0,
        doubles: Vec::new(),
        doubles_isomorphic: false,
        other: Vec::new(),
    };
    let mut double_keys = Vec::new();
    for p in &parts {
        let key = canonical_form(p, false)?;
        if key == w_key {
            report.w_copies += 1;
        } else if key == ngon_key {
            report.ngons += 1;
        } else if p.vertex_count() == 2 * n as usize {
            report.doubles.push(p.vertex_count());
            double_keys.push(key);
        } else {
            report.other.push(p.vertex_count());
        }
    }
    report.doubles_isomorphic = double_keys.len() == 2 && double_keys[0] == double_keys[1];
    Ok(report)
}

/// [`w_square_report`], failing unless the decomposition is 1 copy of W,
/// n − 5 red n-cycles and two isomorphic 2n-vertex components.
pub fn verify_w_square(n: u32) -> Result<WSquareReport, ClosureError> {
    let report = w_square_report(n)?;
    if !report.ok() {
        return Err(ClosureError::Assertion(format!("W({n}) ⊗ W({n}) census {report:?}")));
    }
    Ok(report)
}
