//! Invariants of stroke application, flood moves, and the plan indexing
//! machinery, over random instances and oracle witness plans.

mod common;

use common::instances;
use minipaint::gen::GenKind;
use minipaint::oracle::{self, Budget};
use minipaint::paint::{
    apply_flood_move, apply_stroke, color_component, finalizing, is_recursive_plan, simulate_plan,
    verify_plan,
};
use minipaint::{ColorId, FloodMove, Graph, Painting, Stroke, Template, VertexSet};
use proptest::prelude::*;

fn arb_graph_and_stroke() -> impl Strategy<Value = (Graph, Painting, Stroke)> {
    (2usize..8)
        .prop_flat_map(|n| {
            let edges = proptest::collection::vec((0..n, 0..n), 0..n * 2);
            let colors = proptest::collection::vec(proptest::option::of(0usize..4), n);
            let start = 0..n;
            (Just(n), edges, colors, start, 0usize..4)
        })
        .prop_map(|(n, edges, colors, start, stroke_color)| {
            let edges: Vec<(usize, usize)> =
                edges.into_iter().filter(|&(u, v)| u != v).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let p = Painting::from_colors(colors.into_iter().map(|c| c.map(ColorId)).collect());
            // Grow a random connected area from the start vertex.
            let area = g.reachable_within(start, &g.full_set());
            (g, p, Stroke::new(area, ColorId(stroke_color)))
        })
}

proptest! {
    /// apply_stroke changes exactly the stroke area.
    #[test]
    fn stroke_application_is_local((g, p, stroke) in arb_graph_and_stroke()) {
        let next = apply_stroke(&g, &p, &stroke).unwrap();
        for v in g.vertices() {
            if stroke.area.contains(v) {
                prop_assert_eq!(next.get(v), Some(stroke.color));
            } else {
                prop_assert_eq!(next.get(v), p.get(v));
            }
        }
    }
}

fn count_color_components(g: &Graph, t: &Template) -> usize {
    let p = t.to_painting();
    let mut seen = g.empty_set();
    let mut count = 0;
    for v in g.vertices() {
        if !seen.contains(v) {
            seen.union_with(&color_component(g, &p, v).unwrap());
            count += 1;
        }
    }
    count
}

#[test]
fn flood_moves_only_merge_components() {
    let samples = instances(GenKind::Random, 7, 3, 40, 2100, |_| true);
    for inst in &samples {
        let g = &inst.graph;
        let mut t = inst.template.clone();
        let colors = t.used_colors();
        for step in 0..6 {
            let before = count_color_components(g, &t);
            let pivot = (step * 3) % g.vertex_count();
            let color = colors[step % colors.len()];
            let next = apply_flood_move(g, &t, &FloodMove::new(pivot, color)).unwrap();
            let after = count_color_components(g, &next);
            assert!(after <= before, "a flood move split a component");
            t = next;
        }
    }
}

#[test]
fn verified_plans_finalize_template_colors() {
    let samples = instances(GenKind::Random, 7, 3, 40, 2500, |inst| {
        inst.graph.vertex_count() >= 1
    });
    for inst in &samples {
        let (g, t) = (&inst.graph, &inst.template);
        let (_, plan) = oracle::plan_optimum(g, t, &Budget::default()).unwrap();
        assert!(verify_plan(g, t, &plan).ok());

        // Lower bound: one stroke per used color.
        assert!(plan.len() >= t.used_colors().len());

        // The stroke finalizing a vertex carries its template color, and
        // the finalized sets partition V.
        let f = finalizing(g, &plan).unwrap();
        let mut union = g.empty_set();
        let mut total = 0;
        for v in g.vertices() {
            let stroke = &plan.strokes[f.stroke_of(v) - 1];
            assert_eq!(stroke.color, t.color(v));
        }
        for part in &f.per_stroke {
            assert!(union.is_disjoint(part));
            union.union_with(part);
            total += part.len();
        }
        assert_eq!(total, g.vertex_count());
    }
}

#[test]
fn recursive_plans_check_out_stroke_by_stroke() {
    let samples = instances(GenKind::Random, 6, 3, 30, 3000, |inst| {
        inst.graph.is_connected() && inst.graph.vertex_count() >= 2
    });
    for inst in &samples {
        let (g, t) = (&inst.graph, &inst.template);
        let (_, plan) = oracle::plan_optimum(g, t, &Budget::default()).unwrap();
        let plan = minipaint::equivalence::normalize_recursive(g, t, &plan).unwrap();
        assert!(is_recursive_plan(g, &plan));

        let trace = simulate_plan(g, &plan).unwrap();
        for (i, stroke) in plan.strokes.iter().enumerate() {
            // Monochromatic pre-image.
            let rep = stroke.area.first().unwrap();
            assert!(stroke
                .area
                .iter()
                .all(|v| trace[i].get(v) == trace[i].get(rep)));
            // Color component post-image.
            assert_eq!(
                color_component(g, &trace[i + 1], rep).unwrap(),
                stroke.area
            );
        }
    }
}

#[test]
fn empty_plan_is_accepted_only_for_the_empty_graph() {
    let empty = Graph::new(0);
    let t = Template::new(vec![]);
    assert!(verify_plan(&empty, &t, &minipaint::PaintPlan::default()).ok());

    let g = Graph::from_edges(1, &[]).unwrap();
    let t = Template::new(vec![ColorId(0)]);
    assert!(!verify_plan(&g, &t, &minipaint::PaintPlan::default()).ok());
}

#[test]
fn paintings_compare_pointwise_with_undefined_distinct() {
    let mut a = Painting::undefined(3);
    let b = Painting::undefined(3);
    assert_eq!(a, b);
    a.set(1, Some(ColorId(0)));
    assert_ne!(a, b);
    let mut c = b.clone();
    c.set(1, Some(ColorId(0)));
    assert_eq!(a, c);
}

#[test]
fn stroke_order_matches_tie_break_rule() {
    // Sorted area first, then color.
    let a = Stroke::new(VertexSet::from_vertices(4, [0, 1]).unwrap(), ColorId(1));
    let b = Stroke::new(VertexSet::from_vertices(4, [0, 2]).unwrap(), ColorId(0));
    let c = Stroke::new(VertexSet::from_vertices(4, [0, 1]).unwrap(), ColorId(2));
    assert!(a < b);
    assert!(a < c);
}
