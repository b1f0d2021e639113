//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p veronese-koszul --test acceptance -- --nocapture --test-threads=1`.

mod common;

use std::time::Instant;

use common::{binomial, multigraph_exists, vectors_up_to};
use veronese_koszul::edge_ring::{is_realizable, toric_generators};
use veronese_koszul::filtration::{
    enumerate_family, nonempty_iso_classes, verify_descent_closure, verify_filtration,
    verify_graphs, FailureKind,
};
use veronese_koszul::ideal::{
    colon_brute_ideal, colon_disjoint, colon_same_vertex, equal_up_to, generators_in_colon,
    MonomialIdeal,
};
use veronese_koszul::{Edge, Graph, Multidegree, Vertex};

const THEOREM_DEGREE: u32 = 3;
const FILTRATION_DEGREE: u32 = 4;
/// Panels drawn for `n = 5` in the reference gallery.
const FIGURE_PANELS: usize = 21;
/// Nonempty isomorphism classes of `F_5` found by exhaustive enumeration.
const DERIVED_CLASSES_N5: usize = 20;

fn verdict(id: u32, name: &str, pass: bool, detail: String) {
    println!(
        "[{}] AC{id} {name}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "AC{id} {name} failed: {detail}");
}

fn e(a: Vertex, b: Vertex) -> Edge {
    Edge::new(a, b).unwrap()
}

fn distinct_triples(n: usize) -> impl Iterator<Item = (Vertex, Vertex, Vertex)> {
    (1..=n)
        .flat_map(move |i| (1..=n).flat_map(move |j| (1..=n).map(move |l| (i, j, l))))
        .filter(|(i, j, l)| i != j && j != l && i != l)
}

fn disjoint_quads(n: usize) -> impl Iterator<Item = (Vertex, Vertex, Vertex, Vertex)> {
    let edges = Graph::complete(n).unwrap().edges();
    let pairs: Vec<(Edge, Edge)> = edges
        .iter()
        .flat_map(|a| edges.iter().map(move |b| (*a, *b)))
        .filter(|(a, b)| a.is_disjoint(b))
        .collect();
    pairs
        .into_iter()
        .map(|(a, b)| (a.lo(), a.hi(), b.lo(), b.hi()))
}

#[test]
fn ac1_same_vertex_colon_sweep() {
    let t = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 3..=6 {
        for (i, j, l) in distinct_triples(n) {
            let closed = colon_same_vertex(i, j, l, n).unwrap();
            let ideal = MonomialIdeal::principal(&e(i, j), n).unwrap();
            let brute = colon_brute_ideal(&ideal, &e(i, l), n, THEOREM_DEGREE).unwrap();
            let ok = equal_up_to(&closed, &brute, n, THEOREM_DEGREE)
                && generators_in_colon(&closed, &ideal, &e(i, l));
            if !ok {
                failures.push(format!("n={n} (i,j,l)=({i},{j},{l})"));
            }
            checked += 1;
        }
    }
    verdict(
        1,
        "same-vertex colon closed form vs brute force (n=3..6, D=3)",
        failures.is_empty(),
        format!(
            "{checked} instances, {} failures {failures:?} in {:?}",
            failures.len(),
            t.elapsed()
        ),
    );
}

#[test]
fn ac2_disjoint_colon_sweep() {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut degenerate_n4 = true;
    for n in 4..=6 {
        for (i, j, k, l) in disjoint_quads(n) {
            let closed = colon_disjoint(i, j, k, l, n).unwrap();
            if n == 4 {
                degenerate_n4 &= closed.gens().len() == 1;
            }
            let ideal = MonomialIdeal::principal(&e(i, j), n).unwrap();
            let brute = colon_brute_ideal(&ideal, &e(k, l), n, THEOREM_DEGREE).unwrap();
            let ok = equal_up_to(&closed, &brute, n, THEOREM_DEGREE)
                && generators_in_colon(&closed, &ideal, &e(k, l));
            if !ok {
                failures.push(format!("n={n} ({i},{j}):({k},{l})"));
            }
            checked += 1;
        }
    }
    verdict(
        2,
        "disjoint colon closed form vs brute force (n=4..6, D=3)",
        failures.is_empty() && degenerate_n4,
        format!(
            "{checked} instances, {} failures {failures:?}, n=4 colon is (x_ij) alone: {degenerate_n4}",
            failures.len()
        ),
    );
}

#[test]
fn ac3_non_membership_witnesses() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 3..=6 {
        // x_jl is not in (x_ij) : x_il
        for (i, j, l) in distinct_triples(n) {
            let ideal = MonomialIdeal::principal(&e(i, j), n).unwrap();
            let product = Multidegree::of_edges(&[e(j, l), e(i, l)], n).unwrap();
            let closed = colon_same_vertex(i, j, l, n).unwrap();
            let witness = Multidegree::of_edge(&e(j, l), n).unwrap();
            if ideal.contains(&product).unwrap() || closed.contains(&witness).unwrap() {
                failures.push(format!("x_{j}{l} in (x_{i}{j}):x_{i}{l}, n={n}"));
            }
            checked += 1;
        }
        // x_ik x_jk is not in (x_ij) : x_kl
        if n >= 4 {
            for (i, j, k, l) in disjoint_quads(n) {
                let ideal = MonomialIdeal::principal(&e(i, j), n).unwrap();
                let witness = Multidegree::of_edges(&[e(i, k), e(j, k)], n).unwrap();
                let product = witness.add(&Multidegree::of_edge(&e(k, l), n).unwrap());
                let closed = colon_disjoint(i, j, k, l, n).unwrap();
                if ideal.contains(&product).unwrap() || closed.contains(&witness).unwrap() {
                    failures.push(format!("x_{i}{k}x_{j}{k} in (x_{i}{j}):x_{k}{l}, n={n}"));
                }
                checked += 1;
            }
        }
    }
    verdict(
        3,
        "non-membership witnesses (n<=6)",
        failures.is_empty(),
        format!(
            "{checked} instances, {} failures {failures:?}",
            failures.len()
        ),
    );
}

#[test]
fn ac4_descent_closure() {
    let mut summary = Vec::new();
    let mut failures = 0;
    for n in 2..=6 {
        let r = verify_descent_closure(n).unwrap();
        failures += r.failed_steps().count();
        summary.push(format!("n={n}: {} members", r.family_size));
    }
    verdict(
        4,
        "descent edge keeps every member inside the family (n=2..6)",
        failures == 0,
        format!("{} ; {failures} failures", summary.join(", ")),
    );
}

#[test]
fn ac5_filtration_verified() {
    let t = Instant::now();
    let mut summary = Vec::new();
    let mut pass = true;
    for n in 2..=6 {
        let r = verify_filtration(n, FILTRATION_DEGREE).unwrap();
        let all = |f: fn(&veronese_koszul::filtration::StepRecord) -> Option<bool>| {
            r.steps.iter().all(|s| f(s) == Some(true))
        };
        let ok = r.verdict
            && r.zero_ideal_in_family
            && r.maximal_ideal_in_family
            && all(|s| s.cyclic_ok)
            && all(|s| s.j_in_family)
            && all(|s| s.exact_ok)
            && all(|s| s.truncated_ok)
            && r.count_failures(FailureKind::Exact) == 0
            && r.count_failures(FailureKind::Truncated) == 0;
        pass &= ok;
        summary.push(format!(
            "n={n}: {} steps {}",
            r.steps.len(),
            if ok { "ok" } else { "FAILED" }
        ));
    }
    verdict(
        5,
        "Koszul filtration axioms (n=2..6, D=4)",
        pass,
        format!("{} in {:?}", summary.join(", "), t.elapsed()),
    );
}

#[test]
fn ac6_gallery_class_count() {
    let family = enumerate_family(5).unwrap();
    let classes = nonempty_iso_classes(&family).unwrap();
    let derived = classes.len();
    let flag = if derived == FIGURE_PANELS {
        "matches the reference gallery".to_string()
    } else {
        format!(
            "DISCREPANCY: enumeration finds {derived} classes, reference gallery shows {FIGURE_PANELS} panels; enumeration is authoritative"
        )
    };
    println!("AC6 note: {flag}");
    verdict(
        6,
        "isomorphism classes of nonempty F_5",
        derived == DERIVED_CLASSES_N5,
        format!(
            "{} nonempty members in {derived} classes (frozen regression {DERIVED_CLASSES_N5}); {flag}",
            family.len() - 1
        ),
    );
}

#[test]
fn ac7_realizability_oracle() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=6 {
        for v in vectors_up_to(n, 8) {
            let a = Multidegree::new(v.clone());
            if is_realizable(&a) != multigraph_exists(&mut v.clone()) {
                failures.push(a.to_string());
            }
            checked += 1;
        }
    }
    verdict(
        7,
        "closed-form realizability vs exhaustive multigraph search (sum<=8, n<=6)",
        failures.is_empty(),
        format!(
            "{checked} vectors, {} failures {failures:?}",
            failures.len()
        ),
    );
}

#[test]
fn ac8_toric_generators() {
    let mut pass = true;
    let mut summary = Vec::new();
    for n in 4..=8 {
        let rels = toric_generators(n).unwrap();
        let expected = 3 * binomial(n, 4);
        let balanced = rels.iter().all(|r| r.is_balanced(n));
        pass &= rels.len() == expected && balanced;
        summary.push(format!("n={n}: {}/{expected}", rels.len()));
    }
    verdict(
        8,
        "toric generator count 3*C(n,4) and balance (n=4..8)",
        pass,
        summary.join(", "),
    );
}

#[test]
fn ac9_negative_controls() {
    let n = 5;
    let p5 = Graph::from_pairs(n, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
    let c4 = Graph::from_pairs(n, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
    let r = verify_graphs(&[p5, c4], n, FILTRATION_DEGREE).unwrap();
    let both_fail = r.steps.len() == 2 && r.steps.iter().all(|s| !s.ok && !s.h_in_family);
    verdict(
        9,
        "verifier rejects P_5 and C_4",
        both_fail && !r.verdict,
        format!(
            "P_5 ok={}, C_4 ok={}, global verdict={}",
            r.steps[0].ok, r.steps[1].ok, r.verdict
        ),
    );
}
