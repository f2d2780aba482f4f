//! Serialization round-trips: graph text and certificate files must parse
//! back to objects that evaluate identically.

use pebbling::certificate::{
    parse_certificate, parse_certificate_for_graph, serialize_certificate,
    serialize_certificate_as,
};
use pebbling::families::{by_name, cube, flower, petersen, FamilyGraph};
use pebbling::heuristic::reference_certificate;
use pebbling::Graph;

fn all_families() -> Vec<FamilyGraph> {
    let mut fams = vec![
        petersen(),
        by_name("blanusa1").unwrap(),
        by_name("blanusa2").unwrap(),
    ];
    fams.extend((3..=9).step_by(2).map(|m| flower(m).unwrap()));
    fams.extend((1..=5).map(|d| cube(d).unwrap()));
    fams
}

#[test]
fn graph_text_round_trips_for_every_family() {
    for fam in all_families() {
        let g = &fam.graph;
        let reparsed = Graph::parse(&g.to_text()).unwrap();
        assert_eq!(reparsed.name(), g.name());
        assert_eq!(reparsed.vertex_count(), g.vertex_count());
        assert_eq!(reparsed.edge_count(), g.edge_count());
        for v in g.vertices() {
            let u = reparsed.require_vertex(g.label(v)).unwrap();
            let mut want: Vec<&str> = g.neighbors(v).iter().map(|&w| g.label(w)).collect();
            let mut got: Vec<&str> = reparsed
                .neighbors(u)
                .iter()
                .map(|&w| reparsed.label(w))
                .collect();
            want.sort_unstable();
            got.sort_unstable();
            assert_eq!(got, want, "{}: neighborhood of {}", g.name(), g.label(v));
        }
    }
}

#[test]
fn certificates_round_trip_and_preserve_the_ratio() {
    for fam in all_families() {
        let g = &fam.graph;
        for label in &fam.target_classes {
            let Ok(cert) = reference_certificate(&fam, label) else {
                continue; // family/target pairs without a bundled certificate
            };
            let lambda = cert.wfl_ratio(g).unwrap();
            let text = serialize_certificate(&cert, g);
            let reparsed = parse_certificate_for_graph(&text, g).unwrap();
            assert!(reparsed.validate(g).is_empty());
            assert_eq!(reparsed.wfl_ratio(g).unwrap(), lambda);
            assert_eq!(reparsed.total_weight(), cert.total_weight());
            assert_eq!(
                g.label(reparsed.root()),
                label.as_str(),
                "{}: root drifted through serialization",
                g.name()
            );
        }
    }
}

#[test]
fn family_named_certificates_resolve_their_own_graph() {
    let fam = petersen();
    let cert = reference_certificate(&fam, "a_0").unwrap();
    let text = serialize_certificate(&cert, &fam.graph);
    let (resolved, reparsed) = parse_certificate(&text).unwrap();
    assert_eq!(resolved.name(), "petersen");
    assert_eq!(
        reparsed.wfl_ratio(&resolved).unwrap(),
        cert.wfl_ratio(&fam.graph).unwrap()
    );
}

#[test]
fn file_path_certificate_headers_resolve_through_the_file() {
    let fam = cube(3).unwrap();
    let g = &fam.graph;
    let mut graph_path = std::env::temp_dir();
    graph_path.push(format!("pebbling-round-trip-{}.graph", std::process::id()));
    std::fs::write(&graph_path, g.to_text()).unwrap();

    let cert = reference_certificate(&fam, &fam.target_classes[0]).unwrap();
    let text = serialize_certificate_as(&cert, g, graph_path.to_str().unwrap());
    let (resolved, reparsed) = parse_certificate(&text).unwrap();
    assert_eq!(resolved.vertex_count(), 8);
    assert_eq!(
        reparsed.wfl_ratio(&resolved).unwrap(),
        cert.wfl_ratio(g).unwrap()
    );

    std::fs::remove_file(&graph_path).ok();
}
