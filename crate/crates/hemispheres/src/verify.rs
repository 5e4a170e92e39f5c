//! The end-to-end verification suite: every headline quantity of the
//! library, checked exactly and reported claim by claim.
//!
//! Each claim compares an expected value against a computed one; a claim
//! passes iff the two render identically. Randomised claims derive all
//! randomness from the given seed, so a fixed seed gives a byte-identical
//! report up to timing fields.

use crate::arrangement::{
    braid_arrangement, config_from_arrangement, intersection_lattice, mobius_invariant,
    proper_dual_poset, quillen_map_check, random_spanning_arrangement, Arrangement,
};
use crate::complex::{classify_pseudomanifold, reduced_homology, PseudomanifoldReport};
use crate::digraph::{
    dag_complex, decode_vector, disds_complex, disds_facets, encode_dag, ordered_pairs,
    root_system, verify_identifications,
};
use crate::exact::{rat, rat_int, QVector, Rational};
use crate::gale::{
    cycle_lattice, cycle_polytope_facets, gale_duality_check, nerve_complex,
};
use crate::posets::{
    dag_order_connection, enumerate_orders, enumerate_preorders, full_preorder_poset,
    full_topology_poset, galois_check, poset_of_orders, poset_of_preorders,
    poset_of_t0_topologies, poset_of_topologies, preorder_disds_connection,
};
use crate::sphere::{self, Configuration};
use crate::tda::{hemisphere_cech_endpoints, persistence, vr_filtration};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("selector {0:?} matches no claim (known: {1})")]
    UnknownSelector(String, String),
}

/// One verified claim: passes iff expected and computed render identically.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub millis: u128,
}

impl VerificationReport {
    fn new(claim: String, expected: String, computed: String, start: Instant) -> Self {
        let pass = expected == computed;
        VerificationReport {
            claim,
            expected,
            computed,
            pass,
            millis: start.elapsed().as_millis(),
        }
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {} (expected {}, computed {}, {} ms)",
            if self.pass { "pass" } else { "FAIL" },
            self.claim,
            self.expected,
            self.computed,
            self.millis
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "claim": self.claim,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.pass,
            "millis": self.millis,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub selector: String,
    pub seed: u64,
    pub quick: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            selector: "all".to_string(),
            seed: 0,
            quick: false,
        }
    }
}

/// Claim families, in report order.
pub const CLAIMS: &[&str] = &[
    "dag-homology",
    "disds-homology",
    "braid-mobius",
    "bjorner-wedge",
    "bstel-wedge",
    "quillen-fibers",
    "identifications",
    "dag-pseudomanifold",
    "disds-facets",
    "bouc-posets",
    "preorder-adjudication",
    "galois-connections",
    "gale-duality",
    "hypercube-persistence",
    "sphere-endpoints",
    "encode-decode",
    "fig1-regression",
];

/// Run every claim family matching the selector ("all" for everything; any
/// substring of a family name otherwise).
pub fn run_suite(opts: &SuiteOptions) -> Result<Vec<VerificationReport>, VerifyError> {
    let matching: Vec<&str> = CLAIMS
        .iter()
        .copied()
        .filter(|name| opts.selector == "all" || name.contains(opts.selector.as_str()))
        .collect();
    if matching.is_empty() {
        return Err(VerifyError::UnknownSelector(
            opts.selector.clone(),
            CLAIMS.join(", "),
        ));
    }
    let mut reports = Vec::new();
    for name in matching {
        let family = match name {
            "dag-homology" => dag_homology(opts),
            "disds-homology" => disds_homology(opts),
            "braid-mobius" => braid_mobius(),
            "bjorner-wedge" => bjorner_wedge(opts),
            "bstel-wedge" => bstel_wedge(opts),
            "quillen-fibers" => quillen_fibers(opts),
            "identifications" => identifications(opts),
            "dag-pseudomanifold" => dag_pseudomanifold(opts),
            "disds-facets" => disds_facet_claims(),
            "bouc-posets" => bouc_posets(),
            "preorder-adjudication" => preorder_adjudication(),
            "galois-connections" => galois_connections(),
            "gale-duality" => gale_duality_claims(),
            "hypercube-persistence" => hypercube_persistence(),
            "sphere-endpoints" => sphere_endpoints(),
            "encode-decode" => encode_decode(opts),
            "fig1-regression" => fig1_regression(),
            _ => unreachable!("claim registry is exhaustive"),
        };
        reports.extend(family);
    }
    Ok(reports)
}

/// The five arrangements shared by the wedge claims: the braid arrangements
/// on three and four letters plus three seeded random spanning arrangements
/// in dimension three.
fn suite_arrangements(seed: u64, quick: bool) -> Vec<(String, Arrangement)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![
        ("braid-3".to_string(), braid_arrangement(3)),
        ("braid-4".to_string(), braid_arrangement(4)),
    ];
    for (i, hyperplanes) in [4usize, 5, 6].into_iter().enumerate() {
        out.push((
            format!("random-{}", i + 1),
            random_spanning_arrangement(&mut rng, 3, hyperplanes),
        ));
    }
    if quick {
        out.truncate(3);
        out.remove(1); // keep braid-3 and the smallest random arrangement
    }
    out
}

fn wedge_expectation(dim: usize, count: &num_bigint::BigInt) -> String {
    use num_traits::Zero;
    if count.is_zero() {
        "0".to_string()
    } else {
        format!("b~{dim}={count}")
    }
}

fn dag_homology(opts: &SuiteOptions) -> Vec<VerificationReport> {
    let ns: &[usize] = if opts.quick { &[3, 4] } else { &[3, 4, 5] };
    ns.iter()
        .map(|&n| {
            let start = Instant::now();
            let h = reduced_homology(&dag_complex(n).expect("guarded n"));
            VerificationReport::new(
                format!("dag-homology/n={n}"),
                format!("b~{}=1", n - 2),
                h.describe(),
                start,
            )
        })
        .collect()
}

fn disds_homology(opts: &SuiteOptions) -> Vec<VerificationReport> {
    let ns: &[usize] = if opts.quick { &[3] } else { &[3, 4] };
    ns.iter()
        .map(|&n| {
            let start = Instant::now();
            let h = reduced_homology(&disds_complex(n).expect("guarded n"));
            let count: usize = (1..n).product();
            VerificationReport::new(
                format!("disds-homology/n={n}"),
                format!("b~{}={}", 2 * n - 4, count),
                h.describe(),
                start,
            )
        })
        .collect()
}

fn braid_mobius() -> Vec<VerificationReport> {
    (3..=6)
        .map(|n| {
            let start = Instant::now();
            let l = intersection_lattice(&braid_arrangement(n)).expect("braid spans");
            let mu = mobius_invariant(&l).absolute;
            let expected: u64 = (1..n as u64).product();
            VerificationReport::new(
                format!("braid-mobius/n={n}"),
                expected.to_string(),
                mu.to_string(),
                start,
            )
        })
        .collect()
}

fn bjorner_wedge(opts: &SuiteOptions) -> Vec<VerificationReport> {
    suite_arrangements(opts.seed, opts.quick)
        .into_iter()
        .map(|(name, a)| {
            let start = Instant::now();
            let l = intersection_lattice(&a).expect("spanning by construction");
            let mu = mobius_invariant(&l).absolute;
            let poset = proper_dual_poset(&l);
            let h = reduced_homology(&poset.order_complex().expect("desk scale"));
            VerificationReport::new(
                format!("bjorner-wedge/{name}"),
                wedge_expectation(a.dim() - 2, &mu),
                h.describe(),
                start,
            )
        })
        .collect()
}

fn bstel_wedge(opts: &SuiteOptions) -> Vec<VerificationReport> {
    suite_arrangements(opts.seed, opts.quick)
        .into_iter()
        .map(|(name, a)| {
            let start = Instant::now();
            let l = intersection_lattice(&a).expect("spanning by construction");
            let mu = mobius_invariant(&l).absolute;
            let config = config_from_arrangement(&a).essentialize();
            let bstel = sphere::bstel_complex(&config).expect("desk scale");
            let h = reduced_homology(&bstel);
            VerificationReport::new(
                format!("bstel-wedge/{name}"),
                wedge_expectation(2 * a.dim() - 2, &mu),
                h.describe(),
                start,
            )
        })
        .collect()
}

fn quillen_fibers(opts: &SuiteOptions) -> Vec<VerificationReport> {
    let ns: &[usize] = if opts.quick { &[3] } else { &[3, 4] };
    let mut out = Vec::new();
    for &n in ns {
        let start = Instant::now();
        let config = config_from_arrangement(&braid_arrangement(n));
        let report = quillen_map_check(&config).expect("antipodal ample by construction");
        out.push(VerificationReport::new(
            format!("quillen-fibers/braid-{n}"),
            "map well-defined and monotone; all fibers contractible or acyclic; fibers match halfspace nerves".to_string(),
            if report.all_pass() {
                "map well-defined and monotone; all fibers contractible or acyclic; fibers match halfspace nerves".to_string()
            } else {
                report.failures.join("; ")
            },
            start,
        ));
    }
    // Join consequence on the three-letter braid: the order complex of
    // (faces of the open nerve) + (proper dual lattice) has the homology of
    // the closed nerve.
    let start = Instant::now();
    let a = braid_arrangement(3);
    let config = config_from_arrangement(&a).essentialize();
    let stel = sphere::stel_complex(&config).expect("desk scale");
    let bstel = sphere::bstel_complex(&config).expect("desk scale");
    let l = intersection_lattice(&a).expect("spans");
    let sum = stel.face_poset().ordered_sum(&proper_dual_poset(&l));
    let h_sum = reduced_homology(&sum.order_complex().expect("desk scale"));
    let h_bstel = reduced_homology(&bstel);
    out.push(VerificationReport::new(
        "quillen-fibers/ordered-sum-join/braid-3".to_string(),
        h_bstel.describe(),
        h_sum.describe(),
        start,
    ));
    out
}

fn identifications(opts: &SuiteOptions) -> Vec<VerificationReport> {
    let ns: &[usize] = if opts.quick { &[3] } else { &[3, 4] };
    ns.iter()
        .map(|&n| {
            let start = Instant::now();
            let report = verify_identifications(n).expect("guarded n");
            VerificationReport::new(
                format!("identifications/n={n}"),
                "acyclic complex = open nerve, non-strongly-connected complex = closed nerve"
                    .to_string(),
                if report.holds() {
                    "acyclic complex = open nerve, non-strongly-connected complex = closed nerve"
                        .to_string()
                } else {
                    format!("mismatch at {:?}", report.counterexample)
                },
                start,
            )
        })
        .collect()
}

fn dag_pseudomanifold(opts: &SuiteOptions) -> Vec<VerificationReport> {
    let ns: &[usize] = if opts.quick { &[3, 4] } else { &[3, 4, 5] };
    ns.iter()
        .map(|&n| {
            let start = Instant::now();
            let factorial: usize = (1..=n).product();
            let expected = format!(
                "pure dim {} with {} facets, pseudomanifold with boundary",
                (n + 1) * (n - 2) / 2,
                factorial
            );
            let computed = match classify_pseudomanifold(&dag_complex(n).expect("guarded n")) {
                PseudomanifoldReport::Pure {
                    dim,
                    facet_count,
                    pseudomanifold,
                    with_boundary,
                    ..
                } => format!(
                    "pure dim {dim} with {facet_count} facets, {}",
                    match (pseudomanifold, with_boundary) {
                        (true, true) => "pseudomanifold with boundary",
                        (true, false) => "pseudomanifold without boundary",
                        _ => "not a pseudomanifold",
                    }
                ),
                other => format!("{other:?}"),
            };
            VerificationReport::new(format!("dag-pseudomanifold/n={n}"), expected, computed, start)
        })
        .collect()
}

fn disds_facet_claims() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for n in [3usize, 4] {
        let start = Instant::now();
        let complex = disds_complex(n).expect("guarded n");
        let pairs = ordered_pairs(n);
        let from_complex: std::collections::BTreeSet<Vec<(usize, usize)>> = complex
            .facets()
            .into_iter()
            .map(|f| f.iter().map(|&v| pairs[v as usize]).collect())
            .collect();
        let from_formula: std::collections::BTreeSet<Vec<(usize, usize)>> = disds_facets(n)
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let expected_count = (1usize << n) - 2;
        out.push(VerificationReport::new(
            format!("disds-facets/n={n}"),
            format!("{expected_count} bipartition facets = maximal faces"),
            if from_complex == from_formula && from_complex.len() == expected_count {
                format!("{expected_count} bipartition facets = maximal faces")
            } else {
                format!(
                    "{} maximal faces vs {} bipartition sets",
                    from_complex.len(),
                    from_formula.len()
                )
            },
            start,
        ));
        // Purity adjudication: sizes n(n-1) - |A1||A2| make the complex pure
        // exactly when n = 3 (all products equal); at n = 4 two sizes occur.
        let start = Instant::now();
        let mut sizes: Vec<usize> = from_formula.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let expected = if n == 3 {
            "pure (every facet has size 4)".to_string()
        } else {
            "not pure (facet sizes 8 and 9)".to_string()
        };
        let computed = match sizes.as_slice() {
            [one] => format!("pure (every facet has size {one})"),
            many => format!(
                "not pure (facet sizes {})",
                many.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" and ")
            ),
        };
        out.push(VerificationReport::new(
            format!("disds-facets/purity/n={n}"),
            expected,
            computed,
            start,
        ));
    }
    out
}

fn bouc_posets() -> Vec<VerificationReport> {
    let mut out = Vec::new();

    let start = Instant::now();
    let orders = enumerate_orders(3).expect("guarded");
    let preorders = enumerate_preorders(3).expect("guarded");
    out.push(VerificationReport::new(
        "bouc-posets/counts/n=3".to_string(),
        "19 orders, 29 preorders".to_string(),
        format!("{} orders, {} preorders", orders.len(), preorders.len()),
        start,
    ));

    let start = Instant::now();
    let (pos3, _) = poset_of_orders(3).expect("guarded");
    let h = reduced_homology(&pos3.order_complex().expect("small"));
    out.push(VerificationReport::new(
        "bouc-posets/orders/n=3".to_string(),
        "b~1=1".to_string(),
        h.describe(),
        start,
    ));

    let start = Instant::now();
    let (pre3, _) = poset_of_preorders(3).expect("guarded");
    let h = reduced_homology(&pre3.order_complex().expect("small"));
    out.push(VerificationReport::new(
        "bouc-posets/preorders/n=3".to_string(),
        "b~2=2".to_string(),
        h.describe(),
        start,
    ));

    let start = Instant::now();
    let pre_full = full_preorder_poset(3).expect("guarded");
    let top_full = full_topology_poset(3).expect("guarded");
    out.push(VerificationReport::new(
        "bouc-posets/topologies-isomorphic/n=3".to_string(),
        "posets of topologies and preorders are isomorphic".to_string(),
        if top_full.is_isomorphic_to(&pre_full) {
            "posets of topologies and preorders are isomorphic".to_string()
        } else {
            "no isomorphism found".to_string()
        },
        start,
    ));

    let start = Instant::now();
    let (top3, _) = poset_of_topologies(3).expect("guarded");
    let h = reduced_homology(&top3.order_complex().expect("small"));
    out.push(VerificationReport::new(
        "bouc-posets/topologies/n=3".to_string(),
        "b~2=2".to_string(),
        h.describe(),
        start,
    ));

    let start = Instant::now();
    let (t0, _) = poset_of_t0_topologies(3).expect("guarded");
    let h = reduced_homology(&t0.order_complex().expect("small"));
    out.push(VerificationReport::new(
        "bouc-posets/t0-topologies/n=3".to_string(),
        "b~1=1".to_string(),
        h.describe(),
        start,
    ));

    out
}

fn preorder_adjudication() -> Vec<VerificationReport> {
    // Two descriptions of the proper preorder poset circulate: a sphere of
    // dimension n-2 versus a wedge of (n-1)! spheres of dimension 2n-4.
    // For n = 3 these predict b~1=1 and b~2=2 respectively; the computation
    // decides for the wedge.
    let start = Instant::now();
    let (pre3, _) = poset_of_preorders(3).expect("guarded");
    let h = reduced_homology(&pre3.order_complex().expect("small"));
    vec![VerificationReport::new(
        "preorder-adjudication/n=3".to_string(),
        "b~2=2 (wedge description; the sphere description would give b~1=1)".to_string(),
        format!(
            "{} ({})",
            h.describe(),
            if h.is_sphere_wedge(2, 2) {
                "wedge description; the sphere description would give b~1=1"
            } else if h.is_sphere_wedge(1, 1) {
                "sphere description"
            } else {
                "neither description"
            }
        ),
        start,
    )]
}

fn galois_connections() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let start = Instant::now();
    let conn = dag_order_connection(3).expect("guarded");
    let check = galois_check(&conn.orders, &conn.faces, &conn.to_face, &conn.to_order);
    out.push(VerificationReport::new(
        "galois-connections/orders-dag/n=3".to_string(),
        "adjoint pair".to_string(),
        if check.holds {
            "adjoint pair".to_string()
        } else {
            check.witness.unwrap_or_else(|| "violation".to_string())
        },
        start,
    ));
    let start = Instant::now();
    out.push(VerificationReport::new(
        "galois-connections/closure-identity/n=3".to_string(),
        "closure of strict digraph is the identity on orders".to_string(),
        if conn.closure_of_strict_is_identity {
            "closure of strict digraph is the identity on orders".to_string()
        } else {
            "identity fails".to_string()
        },
        start,
    ));
    let start = Instant::now();
    let conn = preorder_disds_connection(3).expect("guarded");
    let check = galois_check(
        &conn.preorders,
        &conn.faces,
        &conn.to_face,
        &conn.to_preorder,
    );
    out.push(VerificationReport::new(
        "galois-connections/preorders-disds/n=3".to_string(),
        "adjoint pair".to_string(),
        if check.holds {
            "adjoint pair".to_string()
        } else {
            check.witness.unwrap_or_else(|| "violation".to_string())
        },
        start,
    ));
    out
}

fn gale_duality_claims() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for n in [3usize, 4] {
        let start = Instant::now();
        let report = gale_duality_check(&root_system(n)).expect("doubly ample for n >= 3");
        let expected_nonfaces = if n == 3 { 5 } else { 20 };
        out.push(VerificationReport::new(
            format!("gale-duality/dual-equals-dag/n={n}"),
            format!("dual of nerve equals the acyclic complex; {expected_nonfaces} minimal non-faces"),
            format!(
                "{}; {} minimal non-faces",
                if report.dual_equals_stel {
                    "dual of nerve equals the acyclic complex"
                } else {
                    "dual differs from the acyclic complex"
                },
                report.minimal_nonface_count
            ),
            start,
        ));
    }

    let start = Instant::now();
    let fi = cycle_polytope_facets(3).expect("guarded");
    let h = reduced_homology(&nerve_complex(&fi));
    out.push(VerificationReport::new(
        "gale-duality/prism-nerve/n=3".to_string(),
        "b~2=1".to_string(),
        h.describe(),
        start,
    ));

    let start = Instant::now();
    let j3 = cycle_lattice(3).expect("guarded");
    let proper = j3.proper_elements();
    let h = reduced_homology(&j3.proper_poset().order_complex().expect("small"));
    out.push(VerificationReport::new(
        "gale-duality/cycle-lattice/n=3".to_string(),
        "20 proper elements, b~2=1".to_string(),
        format!("{} proper elements, {}", proper.len(), h.describe()),
        start,
    ));
    out
}

fn hypercube_persistence() -> Vec<VerificationReport> {
    let start = Instant::now();
    let cube: Vec<QVector> = (0..8)
        .map(|m| {
            QVector::from_ints(&[
                if m & 1 == 1 { 1 } else { -1 },
                if m & 2 == 2 { 1 } else { -1 },
                if m & 4 == 4 { 1 } else { -1 },
            ])
        })
        .collect();
    let diagram = persistence(&vr_filtration(&cube, 7).expect("guarded"));
    let deg1 = diagram.bars_of_degree(1);
    let deg3 = diagram.bars_of_degree(3);
    let deg1_ok = deg1.len() == 5
        && deg1
            .iter()
            .all(|b| b.birth == rat_int(4) && b.death == Some(rat_int(8)));
    let deg3_ok = deg3.len() == 1
        && deg3[0].birth == rat_int(8)
        && deg3[0].death == Some(rat_int(12));
    let stray = diagram
        .bars()
        .iter()
        .any(|b| !matches!(b.degree, 0 | 1 | 3));
    vec![VerificationReport::new(
        "hypercube-persistence/n=3".to_string(),
        "five degree-1 bars on [4,8), one degree-3 bar on [8,12), nothing else positive"
            .to_string(),
        if deg1_ok && deg3_ok && !stray {
            "five degree-1 bars on [4,8), one degree-3 bar on [8,12), nothing else positive"
                .to_string()
        } else {
            format!(
                "degree-1 bars {:?}, degree-3 bars {:?}",
                deg1.len(),
                deg3.len()
            )
        },
        start,
    )]
}

fn sphere_endpoints() -> Vec<VerificationReport> {
    let start = Instant::now();
    let (_, _, report) = hemisphere_cech_endpoints(&root_system(4)).expect("antipodal ample");
    vec![VerificationReport::new(
        "sphere-endpoints/four-letter-roots".to_string(),
        "open endpoint b~2=1; closed endpoint b~4=6".to_string(),
        format!(
            "open endpoint {}; closed endpoint {}",
            report.stel_homology.describe(),
            report.bstel_homology.describe()
        ),
        start,
    )]
}

fn encode_decode(opts: &SuiteOptions) -> Vec<VerificationReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let mut checked = 0usize;
    let mut failures = 0usize;
    use rand::Rng;
    while checked < 100 {
        let n = rng.gen_range(3..=6);
        let mut coords: Vec<Rational> = (0..n - 1)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect();
        let tail: Rational = -coords.iter().cloned().sum::<Rational>();
        coords.push(tail);
        let x = QVector::new(coords);
        if x.is_zero() {
            continue;
        }
        checked += 1;
        let Ok(decoded) = decode_vector(&x) else {
            failures += 1;
            continue;
        };
        if !decoded.graph().is_acyclic() {
            failures += 1;
            continue;
        }
        match encode_dag(&decoded) {
            Ok(back) if back == x.scale(&rat_int(n as i64)) => {}
            _ => failures += 1,
        }
    }
    vec![VerificationReport::new(
        "encode-decode/identity".to_string(),
        "100 random zero-sum vectors: encode(decode(x)) = n*x, decodings acyclic".to_string(),
        if failures == 0 {
            "100 random zero-sum vectors: encode(decode(x)) = n*x, decodings acyclic".to_string()
        } else {
            format!("{failures} of {checked} vectors failed")
        },
        start,
    )]
}

fn fig1_regression() -> Vec<VerificationReport> {
    // Three lines in the plane, one carrying a single unpaired ray: the
    // halfspace nerve over the unpaired line is a circle, not a point, so
    // antipodality is genuinely needed for fiber contractibility.
    let start = Instant::now();
    let c = Configuration::with_default_labels(vec![
        QVector::from_ints(&[1, 0]),
        QVector::from_ints(&[-1, 0]),
        QVector::from_ints(&[0, 1]),
        QVector::from_ints(&[0, -1]),
        QVector::from_ints(&[1, 1]),
    ])
    .expect("nonzero points");
    let flat = crate::exact::Subspace::span(2, &[QVector::from_ints(&[1, 1])]);
    let nerve = sphere::halfspace_nerve(&c, &flat).expect("flat is spanned by the fifth ray");
    let h = reduced_homology(&nerve);
    vec![VerificationReport::new(
        "fig1-regression/unpaired-ray".to_string(),
        "b~1=1".to_string(),
        h.describe(),
        start,
    )]
}

/// Convenience: do all reports pass?
pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_is_green() {
        let opts = SuiteOptions {
            selector: "all".to_string(),
            seed: 0,
            quick: true,
        };
        let reports = run_suite(&opts).unwrap();
        for r in &reports {
            assert!(r.pass, "{}", r.line());
        }
    }

    #[test]
    fn unknown_selector_is_an_error() {
        let opts = SuiteOptions {
            selector: "nonexistent-claim".to_string(),
            seed: 0,
            quick: true,
        };
        assert!(matches!(
            run_suite(&opts),
            Err(VerifyError::UnknownSelector(_, _))
        ));
    }

    #[test]
    fn selector_substring_matches() {
        let opts = SuiteOptions {
            selector: "mobius".to_string(),
            seed: 0,
            quick: true,
        };
        let reports = run_suite(&opts).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(all_pass(&reports));
    }

    #[test]
    fn reports_are_deterministic_for_a_fixed_seed() {
        let opts = SuiteOptions {
            selector: "bjorner".to_string(),
            seed: 7,
            quick: true,
        };
        let a = run_suite(&opts).unwrap();
        let b = run_suite(&opts).unwrap();
        let strip = |rs: &[VerificationReport]| -> Vec<(String, String, String, bool)> {
            rs.iter()
                .map(|r| (r.claim.clone(), r.expected.clone(), r.computed.clone(), r.pass))
                .collect()
        };
        assert_eq!(strip(&a), strip(&b));
    }
}
