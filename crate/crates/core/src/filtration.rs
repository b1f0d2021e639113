//! The family `F_n` of connected chordal subgraphs of `K_n` that satisfy the
//! edge-distance condition, and the verifier showing that
//! `{ I_H : H in F_n }` is a Koszul filtration of `K[K_n]`.
//!
//! For a nonempty member `H` the descent step removes an edge `{v, i}` where
//! `v` is the last vertex of a perfect elimination ordering. With
//! `K = H \ {v, i}` the annihilator of the cyclic module `I_H / I_K` is
//! `I_K : x_vi`, which should equal `I_J` for the annihilator graph
//!
//! ```text
//! E(J) = { {q, l} : q in N_K(i), l != v } ∪ { {v, p} : p in N_K(v) }.
//! ```
//!
//! Each step is certified twice: exactly in the direction `I_J ⊆ I_K : x_vi`
//! (generator by generator) and degreewise up to a bound `D` in both
//! directions against a brute-force colon.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::edge_ring::{enumerate_monomials_upto, Multidegree};
use crate::error::{input, Error, Result};
use crate::graph::{CanonicalForm, Edge, EdgeDistanceScan, Graph, Peo, Vertex};
use crate::ideal::{
    colon_by_edge, colon_principal, generators_in_colon, matches_colon_up_to, MonomialIdeal,
};

/// Default largest `n` for exhaustive enumeration (`2^21` subsets at `n = 7`).
pub const DEFAULT_FAMILY_BOUND: usize = 7;

/// Edge subsets are indexed by a `u64` mask.
pub const FAMILY_HARD_LIMIT: usize = 11;

/// Default truncation degree for filtration runs.
pub const DEFAULT_MAX_DEGREE: u32 = 4;

/// Empty, or connected and chordal and satisfying the edge-distance condition.
pub fn is_family_member(g: &Graph) -> bool {
    g.is_empty() || (g.is_connected() && g.edge_distance_condition() && g.is_chordal())
}

/// A member of `F_n` with the data certifying membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    graph: Graph,
    peo: Peo,
    edge_distance: EdgeDistanceScan,
}

impl FamilyMember {
    /// Certify `graph`, or `None` when it is not in the family.
    pub fn certify(graph: Graph) -> Option<FamilyMember> {
        if !graph.is_connected() {
            return None;
        }
        let edge_distance = graph.edge_distance_scan();
        if edge_distance.violations != 0 {
            return None;
        }
        let peo = graph.find_peo()?;
        Some(FamilyMember {
            graph,
            peo,
            edge_distance,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn peo(&self) -> &Peo {
        &self.peo
    }

    pub fn edge_distance(&self) -> EdgeDistanceScan {
        self.edge_distance
    }
}

fn check_family_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return input("n must be positive");
    }
    let limit = bound.min(FAMILY_HARD_LIMIT);
    if n > limit {
        return Err(Error::Capability(format!(
            "exhaustive enumeration is limited to n <= {limit}, got n = {n}"
        )));
    }
    Ok(())
}

pub fn enumerate_family(n: usize) -> Result<Vec<FamilyMember>> {
    enumerate_family_bounded(n, DEFAULT_FAMILY_BOUND)
}

/// Every labelled subgraph of `K_n` in `F_n`, including the empty graph,
/// ordered by edge count and then by edge list.
pub fn enumerate_family_bounded(n: usize, bound: usize) -> Result<Vec<FamilyMember>> {
    check_family_bound(n, bound)?;
    let all = Graph::complete(n)?.edges();
    let subsets = 1u64 << all.len();
    let mut members: Vec<FamilyMember> = (0..subsets)
        .into_par_iter()
        .filter_map(|mask| {
            let mut g = Graph::new(n).expect("n checked");
            for (b, e) in all.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    g.insert(*e);
                }
            }
            FamilyMember::certify(g)
        })
        .collect();
    members.sort_by_cached_key(|m| (m.graph.edge_count(), m.graph.edges()));
    Ok(members)
}

/// One isomorphism class of family members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoClass {
    pub representative: Graph,
    pub count: usize,
}

/// Group members by canonical form; classes come out in canonical order.
pub fn iso_classes(members: &[FamilyMember]) -> Result<Vec<IsoClass>> {
    let forms: Vec<CanonicalForm> = members
        .par_iter()
        .map(|m| m.graph.canonical_form())
        .collect::<Result<_>>()?;
    let mut counts: BTreeMap<CanonicalForm, usize> = BTreeMap::new();
    for f in forms {
        *counts.entry(f).or_default() += 1;
    }
    Ok(counts
        .into_iter()
        .map(|(form, count)| IsoClass {
            representative: form.to_graph(),
            count,
        })
        .collect())
}

/// Nonempty members only, as drawn in the gallery.
pub fn nonempty_iso_classes(members: &[FamilyMember]) -> Result<Vec<IsoClass>> {
    let nonempty: Vec<FamilyMember> = members
        .iter()
        .filter(|m| !m.graph.is_empty())
        .cloned()
        .collect();
    iso_classes(&nonempty)
}

/// The descent pair `(v, i)`: `v` is the last vertex of the member's
/// elimination ordering and `i` its smallest-labelled neighbour.
pub fn descent_edge(h: &FamilyMember) -> Result<(Vertex, Vertex)> {
    descent_pair(&h.graph, &h.peo)
}

fn descent_pair(g: &Graph, peo: &Peo) -> Result<(Vertex, Vertex)> {
    let v = peo
        .last()
        .ok_or_else(|| Error::Input("the empty graph has no descent edge".into()))?;
    let i = g.neighbors(v)?[0];
    Ok((v, i))
}

/// Every `(v, i)` with `v` simplicial in `h` and `i` a neighbour of `v`.
pub fn all_descent_pairs(h: &Graph) -> Vec<(Vertex, Vertex)> {
    h.support()
        .into_iter()
        .filter(|v| h.is_simplicial(*v).unwrap_or(false))
        .flat_map(|v| {
            h.neighbors(v)
                .expect("support vertex")
                .into_iter()
                .map(move |i| (v, i))
        })
        .collect()
}

/// `H`, the removed edge `{v, i}`, `K = H \ {v, i}` and the annihilator
/// graph `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStep {
    pub h: Graph,
    pub v: Vertex,
    pub i: Vertex,
    pub k: Graph,
    pub j: Graph,
}

impl DescentStep {
    pub fn new(h: &Graph, v: Vertex, i: Vertex) -> Result<DescentStep> {
        let e = Edge::new(v, i)?;
        let k = h.remove_edge(&e)?;
        let j = annihilator_graph(&k, v, i, h.n())?;
        Ok(DescentStep {
            h: h.clone(),
            v,
            i,
            k,
            j,
        })
    }

    pub fn of_member(h: &FamilyMember) -> Result<DescentStep> {
        let (v, i) = descent_edge(h)?;
        DescentStep::new(&h.graph, v, i)
    }

    pub fn edge(&self) -> Edge {
        Edge::new(self.v, self.i).expect("descent edge has distinct ends")
    }
}

/// The graph `J` whose edge ideal is `I_K : x_vi`.
pub fn annihilator_graph(k: &Graph, v: Vertex, i: Vertex, n: usize) -> Result<Graph> {
    if k.n() != n {
        return input(format!("graph lives on {} vertices, not {n}", k.n()));
    }
    let mut j = Graph::new(n)?;
    for q in k.neighbors(i)? {
        for l in (1..=n).filter(|l| *l != v && *l != q) {
            j.insert(Edge::new(q, l)?);
        }
    }
    for p in k.neighbors(v)? {
        j.insert(Edge::new(v, p)?);
    }
    Ok(j)
}

/// Options for [`verify_filtration_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_degree: u32,
    /// Also check every simplicial `v` and every neighbour `i`.
    pub sweep: bool,
    /// Count isomorphism classes of the nonempty family.
    pub iso: bool,
    pub family_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_degree: DEFAULT_MAX_DEGREE,
            sweep: false,
            iso: false,
            family_bound: DEFAULT_FAMILY_BOUND,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    DescentClosure,
    Filtration,
    ColonDecomposition,
}

/// Which certificate a counterexample violates. `Truncated` failures are
/// disagreements below the degree bound and are kept apart from `Exact`
/// ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Membership,
    Descent,
    Structure,
    Exact,
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub member: usize,
    #[serde(rename = "H")]
    pub h: Vec<Edge>,
    pub kind: FailureKind,
    pub detail: String,
}

/// Verdicts for one descent step. Checks that were not run are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub member: usize,
    #[serde(rename = "H")]
    pub h: Vec<Edge>,
    /// `[v, i]`, the simplicial vertex first.
    pub e: Option<[Vertex; 2]>,
    #[serde(rename = "K")]
    pub k: Option<Vec<Edge>>,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<Edge>>,
    pub h_in_family: bool,
    pub k_in_family: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_in_family: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated_ok: Option<bool>,
    /// Colons of edges away from `{v, i}` fall inside the `N_K(i)` part.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub principal_colons_ok: Option<bool>,
    /// `N_K(v) ⊆ N_K(i)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neighborhood_ok: Option<bool>,
    /// The reduced sum of principal colons equals `I_K : x_vi` and `I_J`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_ok: Option<bool>,
    pub ok: bool,
    #[serde(skip)]
    pub failures: Vec<(FailureKind, String)>,
}

impl StepRecord {
    fn start(member: usize, h: &Graph) -> StepRecord {
        StepRecord {
            member,
            h: h.edges(),
            h_in_family: is_family_member(h),
            ..StepRecord::default()
        }
    }

    fn fail(&mut self, kind: FailureKind, detail: impl Into<String>) {
        self.failures.push((kind, detail.into()));
    }

    fn finish(mut self) -> StepRecord {
        if !self.h_in_family {
            self.failures.insert(
                0,
                (FailureKind::Membership, "H is not in the family".into()),
            );
        }
        let flags = [
            self.k_in_family,
            self.cyclic_ok,
            self.j_in_family,
            self.exact_ok,
            self.truncated_ok,
            self.principal_colons_ok,
            self.neighborhood_ok,
            self.decomposition_ok,
        ];
        self.ok = self.failures.is_empty() && flags.iter().all(|f| f.unwrap_or(true));
        self
    }

    fn counterexamples(&self) -> impl Iterator<Item = Counterexample> + '_ {
        self.failures.iter().map(|(kind, detail)| Counterexample {
            member: self.member,
            h: self.h.clone(),
            kind: *kind,
            detail: detail.clone(),
        })
    }
}

/// Machine-readable outcome of a verification run. Fully deterministic:
/// steps follow the family order regardless of scheduling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: CheckKind,
    pub n: usize,
    #[serde(rename = "D")]
    pub max_degree: Option<u32>,
    pub sweep: bool,
    pub family_size: usize,
    pub iso_classes: Option<usize>,
    pub zero_ideal_in_family: bool,
    pub maximal_ideal_in_family: bool,
    pub steps: Vec<StepRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sweep_steps: Vec<StepRecord>,
    pub counterexamples: Vec<Counterexample>,
    /// What the degreewise certificates do and do not establish.
    pub truncation_note: Option<String>,
    pub verdict: bool,
}

impl VerificationReport {
    fn assemble(
        check: CheckKind,
        n: usize,
        max_degree: Option<u32>,
        family: &[FamilyMember],
        steps: Vec<StepRecord>,
        sweep_steps: Vec<StepRecord>,
    ) -> VerificationReport {
        let zero = family.iter().any(|m| m.graph.is_empty());
        let complete = Graph::complete(n).expect("n checked");
        let maximal = family.iter().any(|m| m.graph == complete);
        let mut counterexamples: Vec<Counterexample> = steps
            .iter()
            .chain(&sweep_steps)
            .flat_map(StepRecord::counterexamples)
            .collect();
        if !zero {
            counterexamples.push(structural("the empty graph is missing from the family"));
        }
        if !maximal {
            counterexamples.push(structural("K_n is missing from the family"));
        }
        let verdict = counterexamples.is_empty() && steps.iter().chain(&sweep_steps).all(|s| s.ok);
        VerificationReport {
            check,
            n,
            max_degree,
            sweep: !sweep_steps.is_empty(),
            family_size: family.len(),
            iso_classes: None,
            zero_ideal_in_family: zero,
            maximal_ideal_in_family: maximal,
            steps,
            sweep_steps,
            counterexamples,
            truncation_note: max_degree.map(truncation_note),
            verdict,
        }
    }

    pub fn failed_steps(&self) -> impl Iterator<Item = &StepRecord> {
        self.steps.iter().chain(&self.sweep_steps).filter(|s| !s.ok)
    }

    pub fn count_failures(&self, kind: FailureKind) -> usize {
        self.counterexamples
            .iter()
            .filter(|c| c.kind == kind)
            .count()
    }
}

fn structural(detail: &str) -> Counterexample {
    Counterexample {
        member: usize::MAX,
        h: Vec::new(),
        kind: FailureKind::Structure,
        detail: detail.into(),
    }
}

fn truncation_note(d: u32) -> String {
    format!(
        "I_J ⊆ I_K : x_vi is certified exactly; the reverse inclusion is checked on all monomials of degree <= {d} only"
    )
}

/// Lemma check: for every nonempty member, removing its descent edge stays
/// inside the family.
pub fn verify_descent_closure(n: usize) -> Result<VerificationReport> {
    verify_descent_closure_bounded(n, DEFAULT_FAMILY_BOUND)
}

pub fn verify_descent_closure_bounded(n: usize, bound: usize) -> Result<VerificationReport> {
    let family = enumerate_family_bounded(n, bound)?;
    let steps: Vec<StepRecord> = family
        .par_iter()
        .enumerate()
        .filter(|(_, m)| !m.graph.is_empty())
        .map(|(idx, m)| {
            let mut rec = StepRecord::start(idx, &m.graph);
            match descent_edge(m) {
                Ok((v, i)) => {
                    rec.e = Some([v, i]);
                    let k = m
                        .graph
                        .remove_edge(&Edge::new(v, i).expect("distinct"))
                        .expect("descent edge lies in H");
                    let k_ok = is_family_member(&k);
                    if !k_ok {
                        rec.fail(
                            FailureKind::Descent,
                            format!("H \\ {{{v},{i}}} = {k} leaves the family"),
                        );
                    }
                    rec.k = Some(k.edges());
                    rec.k_in_family = Some(k_ok);
                }
                Err(err) => rec.fail(FailureKind::Descent, err.to_string()),
            }
            rec.finish()
        })
        .collect();
    Ok(VerificationReport::assemble(
        CheckKind::DescentClosure,
        n,
        None,
        &family,
        steps,
        Vec::new(),
    ))
}

struct StepContext {
    n: usize,
    max_degree: u32,
    monomials: Vec<Multidegree>,
}

impl StepContext {
    fn new(n: usize, max_degree: u32) -> StepContext {
        StepContext {
            n,
            max_degree,
            monomials: enumerate_monomials_upto(n, 0, max_degree),
        }
    }
}

fn pick_descent(
    h: &Graph,
    pair: Option<(Vertex, Vertex)>,
) -> std::result::Result<(Vertex, Vertex), String> {
    match pair {
        Some(p) => Ok(p),
        None => {
            if h.is_empty() {
                return Err("the empty graph has no descent edge".into());
            }
            let peo = h.find_peo().ok_or_else(|| {
                "H is not chordal, so it has no perfect elimination ordering".to_string()
            })?;
            descent_pair(h, &peo).map_err(|e| e.to_string())
        }
    }
}

/// The filtration checks for one descent step of `h`.
fn filtration_step(
    member: usize,
    h: &Graph,
    pair: Option<(Vertex, Vertex)>,
    ctx: &StepContext,
) -> StepRecord {
    let mut rec = StepRecord::start(member, h);
    let (v, i) = match pick_descent(h, pair) {
        Ok(p) => p,
        Err(msg) => {
            rec.fail(FailureKind::Descent, msg);
            return rec.finish();
        }
    };
    rec.e = Some([v, i]);
    let step = match DescentStep::new(h, v, i) {
        Ok(s) => s,
        Err(err) => {
            rec.fail(FailureKind::Descent, err.to_string());
            return rec.finish();
        }
    };
    let x = step.edge();
    rec.k = Some(step.k.edges());
    rec.j = Some(step.j.edges());

    let k_ok = is_family_member(&step.k);
    if !k_ok {
        rec.fail(
            FailureKind::Descent,
            format!("K = {} is not in the family", step.k),
        );
    }
    rec.k_in_family = Some(k_ok);

    let i_h = MonomialIdeal::of_graph(h);
    let i_k = MonomialIdeal::of_graph(&step.k);
    let x_ideal = MonomialIdeal::principal(&x, ctx.n).expect("edge fits");
    let shift = Multidegree::of_edge(&x, ctx.n).expect("edge fits");
    let cyclic = !step.k.has_edge(&x) && i_h.same_ideal(&i_k.sum(&x_ideal));
    if !cyclic {
        rec.fail(
            FailureKind::Structure,
            format!("I_H is not I_K + (x_{v}{i})"),
        );
    }
    rec.cyclic_ok = Some(cyclic);

    let j_ok = is_family_member(&step.j);
    if !j_ok {
        rec.fail(
            FailureKind::Membership,
            format!("J = {} is not in the family", step.j),
        );
    }
    rec.j_in_family = Some(j_ok);

    let i_j = MonomialIdeal::of_graph(&step.j);
    let exact = generators_in_colon(&i_j, &i_k, &x);
    if !exact {
        rec.fail(
            FailureKind::Exact,
            format!("some generator of I_J times x_{v}{i} is not in I_K"),
        );
    }
    rec.exact_ok = Some(exact);

    let truncated = matches_colon_up_to(&i_j, &i_k, &x, &ctx.monomials);
    if !truncated {
        let witness = ctx
            .monomials
            .iter()
            .find(|m| i_j.contains_unchecked(m) != i_k.contains_unchecked(&m.add(&shift)))
            .map(|m| m.to_string())
            .unwrap_or_default();
        rec.fail(
            FailureKind::Truncated,
            format!(
                "I_J and I_K : x_{v}{i} disagree at {witness} (degree <= {})",
                ctx.max_degree
            ),
        );
    }
    rec.truncated_ok = Some(truncated);
    rec.finish()
}

pub fn verify_filtration(n: usize, max_degree: u32) -> Result<VerificationReport> {
    verify_filtration_with(
        n,
        &VerifyOptions {
            max_degree,
            ..VerifyOptions::default()
        },
    )
}

/// The Koszul filtration axioms for `{ I_H : H in F_n }`.
pub fn verify_filtration_with(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    if opts.max_degree < 2 {
        return input(format!(
            "degree bound must be at least 2, got {}",
            opts.max_degree
        ));
    }
    let family = enumerate_family_bounded(n, opts.family_bound)?;
    let ctx = StepContext::new(n, opts.max_degree);
    let steps: Vec<StepRecord> = family
        .par_iter()
        .enumerate()
        .filter(|(_, m)| !m.graph.is_empty())
        .map(|(idx, m)| {
            let pair = descent_edge(m).ok();
            filtration_step(idx, &m.graph, pair, &ctx)
        })
        .collect();
    let sweep_steps: Vec<StepRecord> = if opts.sweep {
        family
            .par_iter()
            .enumerate()
            .filter(|(_, m)| !m.graph.is_empty())
            .flat_map_iter(|(idx, m)| {
                all_descent_pairs(&m.graph)
                    .into_iter()
                    .map(move |p| (idx, m, p))
            })
            .map(|(idx, m, p)| filtration_step(idx, &m.graph, Some(p), &ctx))
            .collect()
    } else {
        Vec::new()
    };
    let mut report = VerificationReport::assemble(
        CheckKind::Filtration,
        n,
        Some(opts.max_degree),
        &family,
        steps,
        sweep_steps,
    );
    report.sweep = opts.sweep;
    if opts.iso {
        report.iso_classes = Some(nonempty_iso_classes(&family)?.len());
    }
    Ok(report)
}

/// Run the filtration step checks on arbitrary graphs, e.g. graphs outside
/// the family as negative controls. Members are numbered by position.
pub fn verify_graphs(graphs: &[Graph], n: usize, max_degree: u32) -> Result<VerificationReport> {
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return input(format!("graph {g} does not live on {n} vertices"));
    }
    let ctx = StepContext::new(n, max_degree);
    let family: Vec<FamilyMember> = graphs
        .iter()
        .filter_map(|g| FamilyMember::certify(g.clone()))
        .collect();
    let steps: Vec<StepRecord> = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| filtration_step(idx, g, None, &ctx))
        .collect();
    let mut report = VerificationReport::assemble(
        CheckKind::Filtration,
        n,
        Some(max_degree),
        &family,
        steps,
        Vec::new(),
    );
    report.family_size = graphs.len();
    Ok(report)
}

/// The intermediate colon claims for one descent step with `K`, `v`, `i`
/// given directly (so `K` may be deliberately outside the family).
pub fn check_colon_decomposition(
    k: &Graph,
    v: Vertex,
    i: Vertex,
    max_degree: u32,
) -> Result<StepRecord> {
    let ctx = StepContext::new(k.n(), max_degree);
    let x = Edge::new(v, i)?;
    if k.has_edge(&x) {
        return input(format!("K must not contain the descent edge {x}"));
    }
    let mut h = k.clone();
    h.insert(x);
    Ok(decomposition_step(usize::MAX, &h, k, v, i, &ctx))
}

fn decomposition_step(
    member: usize,
    h: &Graph,
    k: &Graph,
    v: Vertex,
    i: Vertex,
    ctx: &StepContext,
) -> StepRecord {
    let n = ctx.n;
    let x = Edge::new(v, i).expect("distinct");
    let shift = Multidegree::of_edge(&x, n).expect("fits");
    let mut rec = StepRecord::start(member, h);
    rec.e = Some([v, i]);
    rec.k = Some(k.edges());
    let k_ok = is_family_member(k);
    rec.k_in_family = Some(k_ok);

    let nk_i = k.neighbors(i).expect("vertex in range");
    let nk_v = k.neighbors(v).expect("vertex in range");

    // sum over q in N_K(i) of (x_iq) : x_vi
    let mut via_i = MonomialIdeal::zero(n);
    for q in &nk_i {
        let e = Edge::new(i, *q).expect("distinct");
        via_i = via_i.sum(&colon_principal(&e, &x, n).expect("fits"));
    }

    let mut principal_ok = true;
    for rs in k
        .edges()
        .iter()
        .filter(|e| !e.contains(v) && !e.contains(i))
    {
        let closed = colon_principal(rs, &x, n).expect("fits");
        let exact = via_i.includes(&closed);
        let single = MonomialIdeal::principal(rs, n).expect("fits");
        let degreewise = ctx
            .monomials
            .iter()
            .filter(|m| single.contains_unchecked(&m.add(&shift)))
            .all(|m| via_i.contains_unchecked(m));
        if !(exact && degreewise) {
            principal_ok = false;
            rec.fail(
                FailureKind::Exact,
                format!("(x_{rs}) : x_{v}{i} is not inside the sum over N_K({i})"),
            );
        }
    }
    rec.principal_colons_ok = Some(principal_ok);

    let nested = nk_v.iter().all(|p| nk_i.contains(p));
    if !nested {
        rec.fail(
            FailureKind::Structure,
            format!("N_K({v}) is not contained in N_K({i})"),
        );
    }
    rec.neighborhood_ok = Some(nested);

    let mut via_v = MonomialIdeal::zero(n);
    for p in &nk_v {
        let e = Edge::new(v, *p).expect("distinct");
        via_v = via_v.sum(&colon_principal(&e, &x, n).expect("fits"));
    }
    let reduced = via_i.sum(&via_v);
    let full = colon_by_edge(&MonomialIdeal::of_graph(k), &x).expect("edge ideal");
    let j = annihilator_graph(k, v, i, n).expect("fits");
    rec.j = Some(j.edges());
    let i_j = MonomialIdeal::of_graph(&j);
    let decomposition = reduced.same_ideal(&full) && reduced.same_ideal(&i_j);
    if !decomposition {
        rec.fail(
            FailureKind::Exact,
            "the reduced colon sum differs from I_K : x_vi or from I_J".to_string(),
        );
    }
    rec.decomposition_ok = Some(decomposition);
    rec.finish()
}

/// The proof's intermediate colon claims, for every descent step of `F_n`.
pub fn verify_colon_decomposition(n: usize, max_degree: u32) -> Result<VerificationReport> {
    verify_colon_decomposition_bounded(n, max_degree, DEFAULT_FAMILY_BOUND)
}

pub fn verify_colon_decomposition_bounded(
    n: usize,
    max_degree: u32,
    bound: usize,
) -> Result<VerificationReport> {
    if max_degree < 2 {
        return input(format!("degree bound must be at least 2, got {max_degree}"));
    }
    let family = enumerate_family_bounded(n, bound)?;
    let ctx = StepContext::new(n, max_degree);
    let steps: Vec<StepRecord> = family
        .par_iter()
        .enumerate()
        .filter(|(_, m)| !m.graph.is_empty())
        .map(|(idx, m)| {
            let (v, i) = descent_edge(m).expect("nonempty member");
            let k = m
                .graph
                .remove_edge(&Edge::new(v, i).expect("distinct"))
                .expect("descent edge lies in H");
            decomposition_step(idx, &m.graph, &k, v, i, &ctx)
        })
        .collect();
    Ok(VerificationReport::assemble(
        CheckKind::ColonDecomposition,
        n,
        Some(max_degree),
        &family,
        steps,
        Vec::new(),
    ))
}
