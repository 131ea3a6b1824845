//! Acceptance gate: one test per release criterion, each printing a
//! PASS/FAIL line. Counts, tolerances, and time budgets are pinned.

use std::time::{Duration, Instant};

use signed_arboricity::color::wagner_edges;
use signed_arboricity::graph::SignedGraph;
use signed_arboricity::oracle::{oracle_va_opts, ORACLE_VERTEX_CAP};
use signed_arboricity::planar::planar_embed;
use signed_arboricity::props::{
    suite_allpositive, suite_combine, suite_generate, suite_k5, suite_switching,
    suite_triangulation, suite_wagner, SuiteReport,
};
use signed_arboricity::Error;

fn gate(name: &str, report: &SuiteReport, budget: Duration, elapsed: Duration) {
    let ok = report.all_passed() && elapsed <= budget;
    println!(
        "{}: criterion {} ({}/{} instances, {:.2?} of {:.2?} budget)",
        if ok { "PASS" } else { "FAIL" },
        name,
        report.passed,
        report.count,
        elapsed,
        budget
    );
    assert!(
        report.all_passed(),
        "criterion {}: {} failures, first: {:?}",
        name,
        report.failures.len(),
        report.failures.first()
    );
    assert!(
        elapsed <= budget,
        "criterion {}: {:.2?} over the {:.2?} budget",
        name,
        elapsed,
        budget
    );
}

#[test]
fn criterion_1_balanced_triangulations_are_tree_3_colorable() {
    let start = Instant::now();
    let report = suite_triangulation(200, 0xC1);
    gate(
        "1 (200 balanced triangulations, lists M_3, pinned outer pair)",
        &report,
        Duration::from_secs(10),
        start.elapsed(),
    );
}

#[test]
fn criterion_2_switching_orbits_preserve_the_exact_minimum() {
    let start = Instant::now();
    let report = suite_switching(100, 0xC2);
    gate(
        "2 (100 switching orbits, oracle equality)",
        &report,
        Duration::from_secs(300),
        start.elapsed(),
    );
}

#[test]
fn criterion_3_all_positive_matches_the_unsigned_oracle() {
    let start = Instant::now();
    let report = suite_allpositive(100, 0xC3);
    gate(
        "3 (100 all-positive signed-vs-unsigned oracle agreements)",
        &report,
        Duration::from_secs(300),
        start.elapsed(),
    );
}

#[test]
fn criterion_4_clique_sum_pipeline_certifies_va_at_most_3() {
    let start = Instant::now();
    let report = suite_k5(50, 0xC4);
    gate(
        "4 (50 clique-sums of triangulation/Wagner leaves, tree-3-colored)",
        &report,
        Duration::from_secs(120),
        start.elapsed(),
    );
}

#[test]
fn criterion_5_wagner_list_coloring_with_pins() {
    let start = Instant::now();
    let report = suite_wagner(500, 0xC5);
    gate(
        "5 (500 Wagner trials: random signature, pinned edge, size-3 lists)",
        &report,
        Duration::from_secs(60),
        start.elapsed(),
    );
}

#[test]
fn criterion_6_combining_agreeing_colorings() {
    let start = Instant::now();
    let report = suite_combine(100, 0xC6);
    gate(
        "6 (100 combined pairs sharing a K2 or K3)",
        &report,
        Duration::from_secs(120),
        start.elapsed(),
    );
}

#[test]
fn criterion_7_oracle_sanity_without_pruning() {
    let start = Instant::now();

    let k3 = SignedGraph::all_positive(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let va_k3 = oracle_va_opts(&k3, 4, false).unwrap().va;

    let mut k5_edges = Vec::new();
    for u in 0..5 {
        for v in (u + 1)..5 {
            k5_edges.push((u, v));
        }
    }
    let k5 = SignedGraph::all_positive(5, &k5_edges).unwrap();
    let va_k5 = oracle_va_opts(&k5, 4, false).unwrap().va;

    let mixed = SignedGraph::from_edges(3, &[(0, 1, 1), (1, 2, -1), (0, 2, -1)]).unwrap();
    let va_mixed = oracle_va_opts(&mixed, 4, false).unwrap().va;

    let elapsed = start.elapsed();
    let ok = va_k3 == 2 && va_k5 == 3 && va_mixed == 2 && elapsed <= Duration::from_secs(60);
    println!(
        "{}: criterion 7 (unpruned oracle: K3 -> {}, K5 -> {}, (+,-,-) triangle -> {}, {:.2?})",
        if ok { "PASS" } else { "FAIL" },
        va_k3,
        va_k5,
        va_mixed,
        elapsed
    );
    assert_eq!(va_k3, 2);
    assert_eq!(va_k5, 3);
    assert_eq!(va_mixed, 2);
    assert!(elapsed <= Duration::from_secs(60));
    assert!(5 <= ORACLE_VERTEX_CAP);
}

#[test]
fn criterion_8_generator_and_embedding_structure() {
    let start = Instant::now();
    let report = suite_generate(100, 0xC8);

    let mut k5_edges = Vec::new();
    for u in 0..5 {
        for v in (u + 1)..5 {
            k5_edges.push((u, v));
        }
    }
    let k5 = SignedGraph::all_positive(5, &k5_edges).unwrap();
    let k5_rejected = matches!(planar_embed(&k5), Err(Error::NonPlanar));

    let wagner = SignedGraph::all_positive(8, &wagner_edges()).unwrap();
    let wagner_rejected = planar_embed(&wagner).is_err();

    let elapsed = start.elapsed();
    let ok = report.all_passed() && k5_rejected && wagner_rejected;
    println!(
        "{}: criterion 8 (100 generated triangulations structurally valid; K5 embed rejected; {:.2?})",
        if ok { "PASS" } else { "FAIL" },
        elapsed
    );
    assert!(report.all_passed(), "first failure: {:?}", report.failures.first());
    assert!(k5_rejected, "planar_embed(K5) must fail with NonPlanar");
    assert!(wagner_rejected, "planar_embed(Wagner) must fail");
}
