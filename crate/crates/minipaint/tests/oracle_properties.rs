//! The oracle itself is cross-checked against an independent breadth-first
//! search and its witnesses are re-verified.

mod common;

use common::{flood_bfs_optimum, instances, is_connected};
use minipaint::gen::GenKind;
use minipaint::oracle::{flood_optimum, plan_optimum, Budget};
use minipaint::paint::{verify_flood, verify_plan};

#[test]
fn iterative_deepening_matches_breadth_first_search() {
    let samples = instances(GenKind::Random, 7, 3, 60, 10_000, |_| true);
    for inst in &samples {
        let (g, t) = (&inst.graph, &inst.template);
        let (len, seq) = flood_optimum(g, t, &Budget::default()).unwrap();
        assert_eq!(len, flood_bfs_optimum(g, t));
        assert_eq!(seq.len(), len);
        assert!(verify_flood(g, t, &seq).ok());
    }
}

#[test]
fn plan_witness_always_verifies_with_reported_length() {
    let samples = instances(GenKind::Random, 7, 3, 60, 11_000, |_| true);
    for inst in &samples {
        let (g, t) = (&inst.graph, &inst.template);
        let (len, plan) = plan_optimum(g, t, &Budget::default()).unwrap();
        assert_eq!(plan.len(), len);
        assert!(verify_plan(g, t, &plan).ok());
    }
}

#[test]
fn plan_optimum_is_flood_plus_one_on_connected_graphs() {
    let samples = instances(GenKind::Random, 7, 3, 40, 12_000, |inst| {
        is_connected(inst) && inst.graph.vertex_count() >= 1
    });
    for inst in &samples {
        let (g, t) = (&inst.graph, &inst.template);
        let (flood, _) = flood_optimum(g, t, &Budget::default()).unwrap();
        let (plan, _) = plan_optimum(g, t, &Budget::default()).unwrap();
        assert_eq!(plan, flood + 1);
    }
}

#[test]
fn plan_optimum_adds_up_over_components() {
    let samples = instances(GenKind::Random, 7, 3, 40, 13_000, |inst| {
        !inst.graph.is_connected() && inst.graph.vertex_count() >= 2
    });
    for inst in &samples {
        let (g, t) = (&inst.graph, &inst.template);
        let (total, plan) = plan_optimum(g, t, &Budget::default()).unwrap();
        assert!(verify_plan(g, t, &plan).ok());
        let mut sum = 0;
        for comp in g.connected_components() {
            let (sub, back) = g.induced_subgraph(&comp);
            let sub_t =
                minipaint::Template::new(back.iter().map(|&v| t.color(v)).collect());
            let (part, _) = plan_optimum(&sub, &sub_t, &Budget::default()).unwrap();
            sum += part;
        }
        assert_eq!(total, sum, "component optima do not add up");
    }
}
