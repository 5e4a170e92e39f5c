//! The acceptance gate: every headline claim of the library at its full
//! stated instance sizes, exact integer equality throughout. One criterion
//! per test, one printed pass/fail line per checked claim (visible with
//! `cargo test --test acceptance -- --nocapture`).

use hemispheres::verify::{run_suite, SuiteOptions, VerificationReport};
use std::time::Instant;

fn family(selector: &str) -> Vec<VerificationReport> {
    let opts = SuiteOptions {
        selector: selector.to_string(),
        seed: 0,
        quick: false,
    };
    run_suite(&opts).expect("selector is a known claim family")
}

fn assert_all(tag: &str, reports: &[VerificationReport]) {
    for r in reports {
        println!("{tag} {}", r.line());
    }
    let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.pass).collect();
    assert!(
        failed.is_empty(),
        "{tag}: {} claim(s) failed: {:?}",
        failed.len(),
        failed.iter().map(|r| r.line()).collect::<Vec<_>>()
    );
}

#[test]
fn ac01_dag_homology_is_a_sphere() {
    let start = Instant::now();
    let reports = family("dag-homology");
    assert_eq!(reports.len(), 3); // n = 3, 4, 5
    assert_all("AC-1", &reports);
    assert!(
        start.elapsed().as_secs() < 120,
        "n = 5 must finish within two minutes"
    );
}

#[test]
fn ac02_disds_homology_is_a_wedge() {
    let start = Instant::now();
    let reports = family("disds-homology");
    assert_eq!(reports.len(), 2); // n = 3, 4
    assert_all("AC-2", &reports);
    assert!(start.elapsed().as_secs() < 120);
}

#[test]
fn ac03_braid_mobius_factorials() {
    let reports = family("braid-mobius");
    assert_eq!(reports.len(), 4); // n = 3..6
    assert_all("AC-3", &reports);
}

#[test]
fn ac04_bjorner_wedge_for_five_arrangements() {
    let reports = family("bjorner-wedge");
    assert_eq!(reports.len(), 5);
    assert_all("AC-4", &reports);
}

#[test]
fn ac05_closed_nerve_wedge_for_five_arrangements() {
    let start = Instant::now();
    let reports = family("bstel-wedge");
    assert_eq!(reports.len(), 5);
    assert_all("AC-5", &reports);
    assert!(
        start.elapsed().as_secs() < 300,
        "five closed nerves must finish within five minutes"
    );
}

#[test]
fn ac06_quillen_fibers_and_ordered_sum() {
    let reports = family("quillen-fibers");
    assert_eq!(reports.len(), 3); // braid-3, braid-4, ordered-sum join
    assert_all("AC-6", &reports);
}

#[test]
fn ac07_identifications() {
    let reports = family("identifications");
    assert_eq!(reports.len(), 2); // n = 3, 4
    assert_all("AC-7", &reports);
}

#[test]
fn ac08_dag_pseudomanifold_structure() {
    let reports = family("dag-pseudomanifold");
    assert_eq!(reports.len(), 3); // n = 3, 4, 5
    assert_all("AC-8", &reports);
}

#[test]
fn ac09_disds_facets_and_purity() {
    let reports = family("disds-facets");
    assert_eq!(reports.len(), 4); // facet sets and purity for n = 3, 4
    assert_all("AC-9", &reports);
}

#[test]
fn ac10_bouc_posets_topologies_and_adjudication() {
    let reports = family("bouc-posets");
    assert_eq!(reports.len(), 6);
    assert_all("AC-10", &reports);
    let adjudication = family("preorder-adjudication");
    assert_eq!(adjudication.len(), 1);
    assert_all("AC-10", &adjudication);
}

#[test]
fn ac11_galois_connections() {
    let reports = family("galois-connections");
    assert_eq!(reports.len(), 3);
    assert_all("AC-11", &reports);
}

#[test]
fn ac12_gale_duality_and_cycle_lattice() {
    let reports = family("gale-duality");
    assert_eq!(reports.len(), 4);
    assert_all("AC-12", &reports);
}

#[test]
fn ac13_hypercube_persistence() {
    let start = Instant::now();
    let reports = family("hypercube-persistence");
    assert_eq!(reports.len(), 1);
    assert_all("AC-13", &reports);
    assert!(start.elapsed().as_secs() < 10);
}

#[test]
fn ac14_hemisphere_endpoints() {
    let reports = family("sphere-endpoints");
    assert_eq!(reports.len(), 1);
    assert_all("AC-14", &reports);
}

#[test]
fn ac15_encode_decode_identity() {
    let reports = family("encode-decode");
    assert_eq!(reports.len(), 1);
    assert_all("AC-15", &reports);
}

#[test]
fn ac16_unpaired_ray_regression() {
    let reports = family("fig1-regression");
    assert_eq!(reports.len(), 1);
    assert_all("AC-16", &reports);
}
