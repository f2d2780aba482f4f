//! Acceptance gate: one test per shipping criterion. Each test prints a
//! `criterion N PASS` line with its wall-clock time (visible under
//! `--nocapture`) and enforces the stated time limit where one exists.
//! Every expected number is asserted with exact rational equality.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pebbling::bounds::{cube_ratio_floor, ratio_floor, ratio_floor_graph};
use pebbling::certificate::{Certificate, Configuration};
use pebbling::exact::{
    is_solvable, pebbling_number, pebbling_number_target, weight_lemma_check, AuditMode,
    SolveLimits,
};
use pebbling::families::{by_name, cube, flower, petersen, FamilyGraph};
use pebbling::heuristic::{
    cube_certificate, reference_certificate, run_heuristic, HeuristicOptions,
};
use pebbling::{Graph, Rational};

fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom).unwrap()
}

fn int(value: i64) -> Rational {
    Rational::from_int(value)
}

/// `k` and `2^{k+2}` for the flower snark `J_m`, `m = 2k + 1`.
fn flower_terms(m: u32) -> (i64, Rational) {
    let k = i64::from((m - 1) / 2);
    (k, Rational::pow2(k as i32 + 2))
}

/// A seeded random connected graph with 2 to `max_n` vertices.
fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p: f64 = rng.gen_range(0.2..0.8);
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges: Vec<(String, String)> = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((labels[u].clone(), labels[v].clone()));
                }
            }
        }
        // The constructor rejects disconnected graphs; draw again.
        if let Ok(g) = Graph::from_edge_list("random", &labels, &edges) {
            return g;
        }
    }
}

/// The best certificate bound `⌊λ⌋ + 1` maximized over the family's class
/// targets — an upper bound for the whole graph by symmetry.
fn bundled_graph_bound(fam: &FamilyGraph) -> u64 {
    fam.target_classes
        .iter()
        .map(|label| {
            reference_certificate(fam, label)
                .unwrap()
                .pebbling_upper_bound(&fam.graph)
                .unwrap()
        })
        .max()
        .unwrap()
}

#[test]
fn criterion_1_bundled_certificates_reproduce_expected_values() {
    let start = Instant::now();
    // (family, target, |ω_Τ|, ω_min, λ)
    let expected: Vec<(&str, &str, Rational, Rational, Rational)> = vec![
        ("petersen", "a_0", int(36), int(4), int(9)),
        ("blanusa2", "x_1", rat(117, 2), int(2), rat(117, 4)),
        ("blanusa2", "x_2", rat(133, 2), rat(5, 2), rat(133, 5)),
        ("blanusa2", "x_3", rat(117, 2), int(2), rat(117, 4)),
        ("blanusa2", "z_1", rat(133, 2), rat(5, 2), rat(133, 5)),
        ("blanusa2", "z_2", int(58), int(2), int(29)),
        ("blanusa2", "z_3", int(68), rat(5, 2), rat(136, 5)),
        ("flower3", "x_0", int(32), rat(5, 2), rat(64, 5)),
        ("flower3", "v_0", int(32), rat(5, 2), rat(64, 5)),
        ("flower3", "z_0", int(36), int(3), int(12)),
        ("blanusa1", "a_1", int(60), int(2), int(30)),
        ("blanusa1", "b_1", int(65), rat(5, 2), int(26)),
        ("blanusa1", "c_1", int(58), int(2), int(29)),
        ("blanusa1", "d_1", rat(141, 2), rat(5, 2), rat(141, 5)),
        ("blanusa1", "e_1", int(58), int(2), int(29)),
    ];
    for (family, target, total, omega_min, lambda) in &expected {
        let fam = by_name(family).unwrap();
        let g = &fam.graph;
        let cert = reference_certificate(&fam, target).unwrap();
        assert!(
            cert.validate(g).is_empty(),
            "{family} {target}: bundled certificate failed validation"
        );
        assert_eq!(
            cert.total_weight(),
            *total,
            "{family} {target}: total weight"
        );
        assert_eq!(
            cert.min_combined_weight(g),
            *omega_min,
            "{family} {target}: omega_min"
        );
        assert_eq!(cert.wfl_ratio(g).unwrap(), *lambda, "{family} {target}: lambda");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "criterion 1 exceeded 1 s: {elapsed:?}"
    );
    println!(
        "criterion 1 PASS ({:.3}s): {} bundled certificates reproduce |ω|, ω_min, λ exactly",
        elapsed.as_secs_f64(),
        expected.len()
    );
}

#[test]
fn criterion_2_flower_certificates_match_closed_forms() {
    let start = Instant::now();
    for m in (5..=15).step_by(2) {
        let (k, pow) = flower_terms(m);
        let fam = flower(m).unwrap();
        let g = &fam.graph;
        let cases = [
            (
                "x_0",
                rat(13, 4) * pow + rat(30 * k - 25, 2),
                rat(13, 10) * pow + int(6 * k - 5),
            ),
            (
                "v_0",
                int(4) * pow + int(5 * k - 4),
                rat(8, 5) * pow + int(2 * k) - rat(8, 5),
            ),
            (
                "z_0",
                rat(9, 2) * pow + int(6 * k - 6),
                rat(3, 2) * pow + int(2 * k - 2),
            ),
        ];
        for (target, total, lambda) in cases {
            let cert = reference_certificate(&fam, target).unwrap();
            assert!(
                cert.validate(g).is_empty(),
                "J_{m} {target}: certificate failed validation"
            );
            assert_eq!(cert.total_weight(), total, "J_{m} {target}: total weight");
            assert_eq!(cert.wfl_ratio(g).unwrap(), lambda, "J_{m} {target}: lambda");
        }
    }
    // Fixed points called out by name: J_5 → 27.8 / 28 / 26, J_7 → 54.6 / 55.6 / 52.
    let j5 = flower(5).unwrap();
    let lambda_at = |fam: &FamilyGraph, t: &str| {
        reference_certificate(fam, t)
            .unwrap()
            .wfl_ratio(&fam.graph)
            .unwrap()
    };
    assert_eq!(lambda_at(&j5, "x_0"), rat(139, 5));
    assert_eq!(lambda_at(&j5, "v_0"), int(28));
    assert_eq!(lambda_at(&j5, "z_0"), int(26));
    let j7 = flower(7).unwrap();
    assert_eq!(lambda_at(&j7, "x_0"), rat(273, 5));
    assert_eq!(lambda_at(&j7, "v_0"), rat(278, 5));
    assert_eq!(lambda_at(&j7, "z_0"), int(52));
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "criterion 2 exceeded 5 s: {elapsed:?}"
    );
    println!(
        "criterion 2 PASS ({:.3}s): generated flower certificates match the closed forms for odd m = 5..15",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_3_certificate_bounds_meet_published_values() {
    let start = Instant::now();
    assert_eq!(bundled_graph_bound(&by_name("blanusa2").unwrap()), 30);
    assert_eq!(bundled_graph_bound(&by_name("blanusa1").unwrap()), 31);
    assert_eq!(bundled_graph_bound(&flower(5).unwrap()), 29);
    assert_eq!(bundled_graph_bound(&flower(7).unwrap()), 56);
    for m in (5..=15).step_by(2) {
        let (k, pow) = flower_terms(m);
        let v0_lambda = rat(8, 5) * pow + int(2 * k) - rat(8, 5);
        let formula = (v0_lambda.floor() + 1) as u64;
        assert_eq!(
            bundled_graph_bound(&flower(m).unwrap()),
            formula,
            "J_{m}: graph bound"
        );
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 3 PASS ({:.3}s): π ≤ 30 (B_2), 31 (B_1), 29 (J_5), 56 (J_7), and the v_0 formula for odd m = 5..15",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_4_ratio_floors_and_form_agreement() {
    let start = Instant::now();

    // Named floors. B_2 and J_3: every vertex; larger flowers: every class
    // target plus the graph-level maximum.
    let b2 = by_name("blanusa2").unwrap();
    for v in b2.graph.vertices() {
        assert_eq!(ratio_floor(&b2.graph, v).unwrap(), 22, "B_2 floor");
    }
    let j3 = flower(3).unwrap();
    for v in j3.graph.vertices() {
        assert_eq!(ratio_floor(&j3.graph, v).unwrap(), 12, "J_3 floor");
    }
    let j5 = flower(5).unwrap();
    for label in &j5.target_classes {
        let r = j5.graph.require_vertex(label).unwrap();
        assert_eq!(ratio_floor(&j5.graph, r).unwrap(), 24, "J_5 floor");
    }
    assert_eq!(ratio_floor_graph(&j5.graph).unwrap(), 24);
    for m in (7..=15).step_by(2) {
        let fam = flower(m).unwrap();
        let (k, _) = flower_terms(m);
        let want = (1u64 << (k + 2)) + 10;
        for label in &fam.target_classes {
            let r = fam.graph.require_vertex(label).unwrap();
            assert_eq!(ratio_floor(&fam.graph, r).unwrap(), want, "J_{m} floor");
        }
        assert_eq!(ratio_floor_graph(&fam.graph).unwrap(), want);
    }

    // Deficit and excess forms agree on every vertex of every bundled
    // family (the computation cross-checks internally and errors on any
    // disagreement).
    let mut families: Vec<FamilyGraph> = vec![
        petersen(),
        by_name("blanusa1").unwrap(),
        by_name("blanusa2").unwrap(),
    ];
    families.extend((3..=15).step_by(2).map(|m| flower(m).unwrap()));
    families.extend((1..=6).map(|d| cube(d).unwrap()));
    for fam in &families {
        for v in fam.graph.vertices() {
            ratio_floor(&fam.graph, v).unwrap_or_else(|e| {
                panic!("{} vertex {}: {e}", fam.graph.name(), fam.graph.label(v))
            });
        }
    }

    // ... and on 1000 seeded random connected graphs with n ≤ 12.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0f10_0e55);
    for i in 0..1000 {
        let g = random_connected_graph(&mut rng, 12);
        for v in g.vertices() {
            ratio_floor(&g, v)
                .unwrap_or_else(|e| panic!("random graph {i}, vertex {v}: {e}"));
        }
    }

    let elapsed = start.elapsed();
    println!(
        "criterion 4 PASS ({:.3}s): floors 22/12/24/2^(k+2)+10 as published; both forms agree on all family graphs and 1000 random graphs",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_5_exact_oracle_baselines() {
    let limits = SolveLimits::default(); // single-threaded
    assert_eq!(limits.jobs, 1);

    let start = Instant::now();
    let p = petersen();
    for v in p.graph.vertices() {
        let result = pebbling_number_target(&p.graph, v, &limits).unwrap();
        assert_eq!(result.pi, 10, "π(Petersen, {})", p.graph.label(v));
        assert!(result.exhaustive);
        assert_eq!(result.witness_unsolvable.total(), 9);
    }
    let petersen_time = start.elapsed();
    assert!(
        petersen_time < Duration::from_secs(60),
        "Petersen solve exceeded 60 s: {petersen_time:?}"
    );

    // Sanity anchors where the basic bounds already pin the answer.
    let k2 = Graph::from_edge_list("k2", &["a", "b"], &[("a", "b")]).unwrap();
    assert_eq!(pebbling_number(&k2, &limits, None).unwrap(), 2);
    let p3 = Graph::from_edge_list("p3", &["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
    assert_eq!(pebbling_number(&p3, &limits, None).unwrap(), 4);

    // Monotonicity: adding a pebble anywhere to a solvable configuration
    // keeps it solvable. 500 seeded random configurations, n ≤ 10.
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce5);
    let mut tested = 0;
    let mut solvable_seen = 0;
    while tested < 500 {
        let g = random_connected_graph(&mut rng, 10);
        let root = rng.gen_range(0..g.vertex_count());
        let counts: Vec<u32> = (0..g.vertex_count()).map(|_| rng.gen_range(0..=3)).collect();
        let config = Configuration::from_counts(counts);
        if config.total() > 24 {
            continue;
        }
        tested += 1;
        if !is_solvable(&g, &config, root, &limits).unwrap() {
            continue;
        }
        solvable_seen += 1;
        for v in g.vertices() {
            let mut bigger = config.clone();
            bigger.set(v, bigger.get(v) + 1);
            assert!(
                is_solvable(&g, &bigger, root, &limits).unwrap(),
                "adding a pebble at {} made a solvable configuration unsolvable",
                g.label(v)
            );
        }
    }
    assert!(solvable_seen > 0, "seeded draws never produced a solvable configuration");

    let elapsed = start.elapsed();
    println!(
        "criterion 5 PASS ({:.3}s): π(Petersen) = 10 at all 10 targets in {:.3}s, π(K_2) = 2, π(P_3) = 4, monotonicity on 500 draws ({} solvable)",
        elapsed.as_secs_f64(),
        petersen_time.as_secs_f64(),
        solvable_seen
    );
}

#[test]
fn criterion_6_weight_inequality_holds_exhaustively_on_petersen() {
    let start = Instant::now();
    let p = petersen();
    let cert = reference_certificate(&p, "a_0").unwrap();
    let report = weight_lemma_check(
        &p.graph,
        &cert,
        &SolveLimits::default(),
        AuditMode::Exhaustive,
    )
    .unwrap();
    assert!(report.exhaustive, "audit was downgraded to sampling");
    assert_eq!(report.pi, Some(10));
    assert_eq!(report.size_cap, 9);
    assert_eq!(report.violations, 0, "weight inequality violated");
    assert!(report.unsolvable_count > 0);
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(300),
        "criterion 6 exceeded 5 min: {elapsed:?}"
    );
    println!(
        "criterion 6 PASS ({:.3}s): zero violations over {} unsolvable configurations of size ≤ 9",
        elapsed.as_secs_f64(),
        report.unsolvable_count
    );
}

#[test]
fn criterion_7_heuristic_end_to_end_quality() {
    let start = Instant::now();
    let opts = HeuristicOptions::default();

    // Petersen: the heuristic reaches the optimal ratio at every root.
    let p = petersen();
    for v in p.graph.vertices() {
        let report = run_heuristic(&p.graph, v, &opts).unwrap();
        assert_eq!(
            report.lambda,
            int(9),
            "Petersen root {}",
            p.graph.label(v)
        );
    }

    // Flower hubs: λ = 12 on J_3 (optimal: it meets the ring-counting
    // floor) and λ = 26 on J_5.
    let j3 = flower(3).unwrap();
    let z0 = j3.graph.require_vertex("z_0").unwrap();
    assert_eq!(run_heuristic(&j3.graph, z0, &opts).unwrap().lambda, int(12));
    let j5 = flower(5).unwrap();
    let z0 = j5.graph.require_vertex("z_0").unwrap();
    assert_eq!(run_heuristic(&j5.graph, z0, &opts).unwrap().lambda, int(26));

    // B_2: at or below the previously published value at every class target.
    let b2 = by_name("blanusa2").unwrap();
    let prior = [
        ("x_1", int(30)),
        ("x_2", int(31)),
        ("x_3", rat(236, 7)),
        ("z_1", rat(133, 5)),
        ("z_2", int(30)),
        ("z_3", int(32)),
    ];
    for (label, bound) in prior {
        let r = b2.graph.require_vertex(label).unwrap();
        let report = run_heuristic(&b2.graph, r, &opts).unwrap();
        assert!(
            report.lambda <= bound,
            "B_2 target {label}: heuristic λ = {} exceeds the prior value {}",
            report.lambda.to_display_string(),
            bound.to_display_string()
        );
    }

    let elapsed = start.elapsed();
    println!(
        "criterion 7 PASS ({:.3}s): λ = 9 on Petersen (all roots), 12 on J_3 z_0, 26 on J_5 z_0, ≤ prior on every B_2 target",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_8_cube_certificates_meet_the_floor() {
    let start = Instant::now();
    for d in 2..=6 {
        let fam = cube(d).unwrap();
        let g = &fam.graph;
        let cert = cube_certificate(d).unwrap();
        assert!(
            cert.validate(g).is_empty(),
            "cube d={d}: certificate failed validation"
        );
        assert_eq!(
            cert.wfl_ratio(g).unwrap(),
            int(cube_ratio_floor(d) as i64),
            "cube d={d}: λ must equal the ring-counting floor"
        );
    }
    // d = 3 in full detail.
    let g3 = cube(3).unwrap().graph;
    let c3 = cube_certificate(3).unwrap();
    assert_eq!(c3.wfl_ratio(&g3).unwrap(), int(8));
    assert_eq!(c3.min_combined_weight(&g3), int(6));
    assert_eq!(c3.total_weight(), int(48));
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "criterion 8 exceeded 10 s: {elapsed:?}"
    );
    println!(
        "criterion 8 PASS ({:.3}s): cube certificates validate and meet Σ_j max{{C(d,j), 2^(d−j)}} for d = 2..6; d = 3 gives 48/6/8",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_9_sandwich_wherever_the_oracle_completes() {
    let start = Instant::now();
    let limits = SolveLimits::default();
    let opts = HeuristicOptions::default();

    for name in ["petersen", "cube2", "cube3", "flower3"] {
        let fam = by_name(name).unwrap();
        let g = &fam.graph;
        for label in &fam.target_classes {
            let r = g.require_vertex(label).unwrap();
            let pi = pebbling_number_target(g, r, &limits).unwrap().pi;
            let lower = (g.vertex_count() as u64).max(1 << g.eccentricity(r));
            assert!(
                lower <= pi,
                "{name} {label}: basic lower {lower} exceeds exact π = {pi}"
            );
            let mut certs: Vec<Certificate> =
                vec![run_heuristic(g, r, &opts).unwrap().certificate];
            if let Ok(cert) = reference_certificate(&fam, label) {
                certs.push(cert);
            }
            for cert in &certs {
                let bound = cert.pebbling_upper_bound(g).unwrap();
                assert!(
                    pi <= bound,
                    "{name} {label}: certificate bound {bound} is below exact π = {pi}"
                );
            }
        }
    }

    // Exact values the solves above settle, frozen so regressions fail loudly.
    // π(J_3) = 12 is a computational result of this repository: the basic
    // lower bound n = 12 is tight at every class target.
    let j3 = flower(3).unwrap();
    for label in &j3.target_classes {
        let r = j3.graph.require_vertex(label).unwrap();
        assert_eq!(pebbling_number_target(&j3.graph, r, &limits).unwrap().pi, 12);
    }

    let elapsed = start.elapsed();
    println!(
        "criterion 9 PASS ({:.3}s): basic lower ≤ exact π ≤ certificate bound on Petersen, Q_2, Q_3, and J_3 (π(J_3) = 12)",
        elapsed.as_secs_f64()
    );
}
