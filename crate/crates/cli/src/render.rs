use std::fmt::Write;

use veronese_koszul::edge_ring::realize;
use veronese_koszul::filtration::{FamilyMember, IsoClass, StepRecord, VerificationReport};
use veronese_koszul::{Edge, MonomialIdeal, Multidegree};

fn var(e: &Edge, wide: bool) -> String {
    if wide {
        format!("x{},{}", e.lo(), e.hi())
    } else {
        format!("x{}{}", e.lo(), e.hi())
    }
}

/// A monomial as one product of edge variables (any factorization is the
/// same ring element).
pub fn monomial(m: &Multidegree) -> String {
    let wide = m.n() >= 10;
    match realize(m) {
        Some(edges) if edges.is_empty() => "1".into(),
        Some(edges) => edges
            .iter()
            .map(|e| var(e, wide))
            .collect::<Vec<_>>()
            .join("*"),
        None => format!("t^{m}"),
    }
}

pub fn ideal(i: &MonomialIdeal) -> String {
    if i.is_unit() {
        return "(1)".into();
    }
    if i.is_zero() {
        return "(0)".into();
    }
    let mut gens: Vec<(u32, Vec<Edge>, String)> = i
        .gens()
        .iter()
        .map(|g| (g.degree(), realize(g).unwrap_or_default(), monomial(g)))
        .collect();
    gens.sort();
    let parts: Vec<String> = gens.into_iter().map(|(_, _, s)| s).collect();
    format!("({})", parts.join(", "))
}

fn edge_list(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(Edge::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn family_text(n: usize, family: &[FamilyMember], classes: &[IsoClass]) -> String {
    let mut s = String::new();
    writeln!(s, "n = {n}").unwrap();
    writeln!(
        s,
        "family size (including the empty graph) = {}",
        family.len()
    )
    .unwrap();
    writeln!(s, "nonempty isomorphism classes = {}", classes.len()).unwrap();
    for (idx, cl) in classes.iter().enumerate() {
        writeln!(
            s,
            "  class {:>3}: {} vertices, {} edges, {} labelled copies, {}",
            idx + 1,
            cl.representative.support().len(),
            cl.representative.edge_count(),
            cl.count,
            cl.representative
        )
        .unwrap();
    }
    s
}

fn step_line(s: &StepRecord) -> String {
    let e =
        s.e.map(|[v, i]| format!("({v},{i})"))
            .unwrap_or_else(|| "-".into());
    format!("member {} H={} e={}", s.member, edge_list(&s.h), e)
}

fn report_block(title: &str, r: &VerificationReport, out: &mut String) {
    writeln!(
        out,
        "{title}: {} ({} members, {} steps{})",
        if r.verdict { "pass" } else { "FAIL" },
        r.family_size,
        r.steps.len(),
        if r.sweep_steps.is_empty() {
            String::new()
        } else {
            format!(", {} sweep steps", r.sweep_steps.len())
        }
    )
    .unwrap();
    for c in r.counterexamples.iter().take(20) {
        writeln!(
            out,
            "  counterexample [{:?}] member {} H={}: {}",
            c.kind,
            c.member,
            edge_list(&c.h),
            c.detail
        )
        .unwrap();
    }
    for s in r.failed_steps().take(20) {
        writeln!(out, "  failed {}", step_line(s)).unwrap();
    }
}

pub fn verify_text(
    descent: &VerificationReport,
    filtration: &VerificationReport,
    decomposition: Option<&VerificationReport>,
    verdict: bool,
) -> String {
    let mut s = String::new();
    let d = filtration.max_degree.unwrap_or_default();
    writeln!(
        s,
        "n = {}, D = {d}, sweep = {}",
        filtration.n, filtration.sweep
    )
    .unwrap();
    writeln!(
        s,
        "(0) in family: {}, maximal ideal in family: {}",
        filtration.zero_ideal_in_family, filtration.maximal_ideal_in_family
    )
    .unwrap();
    if let Some(k) = filtration.iso_classes {
        writeln!(s, "nonempty isomorphism classes: {k}").unwrap();
    }
    report_block("descent closure", descent, &mut s);
    report_block("filtration", filtration, &mut s);
    if let Some(r) = decomposition {
        report_block("colon decomposition", r, &mut s);
    }
    if let Some(note) = &filtration.truncation_note {
        writeln!(s, "note: {note}").unwrap();
    }
    writeln!(s, "verdict: {}", if verdict { "pass" } else { "FAIL" }).unwrap();
    s
}

pub fn colon_text(
    i: &MonomialIdeal,
    by: &Edge,
    case: &str,
    closed: &MonomialIdeal,
    brute: &MonomialIdeal,
    d: u32,
    agree: bool,
) -> String {
    let wide = i.n() >= 10;
    let mut s = String::new();
    writeln!(s, "{} : {}", ideal(i), var(by, wide)).unwrap();
    writeln!(s, "closed form ({case}): {}", ideal(closed)).unwrap();
    writeln!(s, "brute force (degree <= {d}): {}", ideal(brute)).unwrap();
    writeln!(
        s,
        "oracle agreement up to degree {d}: {}",
        if agree { "yes" } else { "NO" }
    )
    .unwrap();
    s
}
