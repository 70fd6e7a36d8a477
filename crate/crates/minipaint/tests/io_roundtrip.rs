//! Document parsing, golden fixtures, and round-trip stability.

mod common;

use common::{figure1, fixture, instances};
use minipaint::gen::GenKind;
use minipaint::io::{
    parse_flood, parse_instance, parse_plan, serialize_flood, serialize_instance, serialize_plan,
};
use minipaint::paint::{verify_flood, verify_plan};
use proptest::prelude::*;

#[test]
fn figure1_fixture_parses_to_the_expected_instance() {
    let inst = figure1();
    assert_eq!(inst.graph.vertex_count(), 12);
    assert_eq!(inst.graph.edge_count(), 14);
    assert_eq!(inst.color_names.len(), 6);
    assert_eq!(inst.template.used_colors().len(), 6);
    assert!(!inst.graph.is_cograph());
    assert!(inst.graph.is_cogem_free());
}

#[test]
fn figure1_plan_and_flood_fixtures_verify() {
    let inst = figure1();
    let plan = parse_plan(&fixture("figure1-plan.json"), &inst).unwrap();
    assert_eq!(plan.len(), 6);
    assert!(verify_plan(&inst.graph, &inst.template, &plan).ok());

    let seq = parse_flood(&fixture("figure1-flood.json"), &inst).unwrap();
    assert_eq!(seq.len(), 5);
    assert!(verify_flood(&inst.graph, &inst.template, &seq).ok());
}

#[test]
fn fixture_round_trips_are_stable() {
    let inst = figure1();
    let once = serialize_instance(&inst);
    let twice = serialize_instance(&parse_instance(&once).unwrap());
    assert_eq!(once, twice);

    let plan = parse_plan(&fixture("figure1-plan.json"), &inst).unwrap();
    let doc = serialize_plan(&plan, &inst).unwrap();
    assert_eq!(parse_plan(&doc, &inst).unwrap(), plan);
    assert_eq!(serialize_plan(&parse_plan(&doc, &inst).unwrap(), &inst).unwrap(), doc);

    let seq = parse_flood(&fixture("figure1-flood.json"), &inst).unwrap();
    let doc = serialize_flood(&seq, &inst).unwrap();
    assert_eq!(parse_flood(&doc, &inst).unwrap(), seq);
}

#[test]
fn generated_corpus_round_trips() {
    for inst in instances(GenKind::Random, 9, 4, 25, 14_000, |_| true) {
        let text = serialize_instance(&inst);
        let parsed = parse_instance(&text).unwrap();
        assert_eq!(parsed, inst);
        assert_eq!(serialize_instance(&parsed), text);
    }
}

#[test]
fn empty_instance_round_trips() {
    let text = r#"{"vertices": [], "edges": [], "colors": [], "template": {}}"#;
    let inst = parse_instance(text).unwrap();
    assert_eq!(inst.graph.vertex_count(), 0);
    let again = parse_instance(&serialize_instance(&inst)).unwrap();
    assert_eq!(again, inst);
}

#[test]
fn parse_rejects_malformed_instances() {
    let cases: Vec<(&str, &str)> = vec![
        (
            "unknown edge endpoint",
            r#"{"vertices": ["a","b","c"], "edges": [["a","z"]], "colors": ["X"],
                "template": {"a":"X","b":"X","c":"X"}}"#,
        ),
        (
            "self-loop",
            r#"{"vertices": ["a","b"], "edges": [["a","a"]], "colors": ["X"],
                "template": {"a":"X","b":"X"}}"#,
        ),
        (
            "duplicate edge",
            r#"{"vertices": ["a","b"], "edges": [["a","b"],["b","a"]], "colors": ["X"],
                "template": {"a":"X","b":"X"}}"#,
        ),
        (
            "duplicate vertex label",
            r#"{"vertices": ["a","a"], "edges": [], "colors": ["X"],
                "template": {"a":"X"}}"#,
        ),
        (
            "missing template entry",
            r#"{"vertices": ["a","b"], "edges": [["a","b"]], "colors": ["X"],
                "template": {"a":"X"}}"#,
        ),
        (
            "unknown template color",
            r#"{"vertices": ["a"], "edges": [], "colors": ["X"],
                "template": {"a":"Y"}}"#,
        ),
        (
            "template for unknown vertex",
            r#"{"vertices": ["a"], "edges": [], "colors": ["X"],
                "template": {"a":"X","z":"X"}}"#,
        ),
    ];
    for (what, text) in cases {
        let err = parse_instance(text).expect_err(what);
        assert!(matches!(err, minipaint::Error::Parse(_)), "{what}: {err}");
    }
}

#[test]
fn parse_rejects_malformed_plan_and_flood_documents() {
    let inst = figure1();
    let err = parse_plan(r#"{"strokes": [{"area": [], "color": "W"}]}"#, &inst).unwrap_err();
    assert!(err.to_string().contains("empty area"));

    let err = parse_plan(
        r#"{"strokes": [{"area": ["zz"], "color": "W"}]}"#,
        &inst,
    )
    .unwrap_err();
    assert!(err.to_string().contains("unknown vertex"));

    let err = parse_flood(r#"{"moves": [{"pivot": "c", "color": "teal"}]}"#, &inst).unwrap_err();
    assert!(err.to_string().contains("unknown color"));
}

proptest! {
    /// Serialized instances survive a parse/serialize cycle byte for byte.
    #[test]
    fn instance_documents_are_stable(seed in 0u64..5000, n in 0usize..8, colors in 1usize..4) {
        let inst = minipaint::gen::generate(GenKind::Random, n, colors, seed).unwrap();
        let text = serialize_instance(&inst);
        let reparsed = parse_instance(&text).unwrap();
        prop_assert_eq!(serialize_instance(&reparsed), text);
    }
}
