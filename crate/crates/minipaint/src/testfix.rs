//! The running example instance used across unit tests: a 12-patch figurine
//! model with six colors, together with its six-stroke plan and the
//! five-move flood sequence obtained by reversing it.

use crate::graph::Graph;
use crate::paint::{ColorId, FloodMove, FloodSequence, PaintPlan, Stroke, Template};
use crate::set::VertexSet;

pub const FIG1_LABELS: [&str; 12] = [
    "b", "p", "f", "s", "m", "c", "l", "x", "h", "y", "r", "g",
];
pub const FIG1_COLORS: [&str; 6] = ["B", "G", "K", "L", "M", "W"];

pub struct Fig1 {
    pub graph: Graph,
    pub template: Template,
}

fn vid(label: &str) -> usize {
    FIG1_LABELS
        .iter()
        .position(|&l| l == label)
        .unwrap_or_else(|| panic!("unknown label {label}"))
}

pub fn fig1_color(name: &str) -> ColorId {
    ColorId(
        FIG1_COLORS
            .iter()
            .position(|&c| c == name)
            .unwrap_or_else(|| panic!("unknown color {name}")),
    )
}

pub fn fig1_set(g: &Graph, labels: &str) -> VertexSet {
    VertexSet::from_vertices(g.vertex_count(), labels.split_whitespace().map(vid)).unwrap()
}

pub fn figure1() -> Fig1 {
    let mut edges = Vec::new();
    for other in ["p", "s", "c", "l", "x", "h", "y", "r", "g"] {
        edges.push((vid("b"), vid(other)));
    }
    for (a, b) in [("p", "f"), ("p", "s"), ("s", "f"), ("s", "m"), ("f", "m")] {
        edges.push((vid(a), vid(b)));
    }
    let graph = Graph::from_edges(12, &edges)
        .unwrap()
        .with_labels(FIG1_LABELS.iter().map(|s| s.to_string()).collect())
        .unwrap();
    let colors = [
        ("b", "G"),
        ("p", "B"),
        ("f", "G"),
        ("s", "L"),
        ("m", "W"),
        ("c", "M"),
        ("l", "K"),
        ("x", "W"),
        ("h", "W"),
        ("y", "W"),
        ("r", "K"),
        ("g", "L"),
    ];
    let mut template = vec![ColorId(0); 12];
    for (label, color) in colors {
        template[vid(label)] = fig1_color(color);
    }
    Fig1 {
        graph,
        template: Template::new(template),
    }
}

/// The six-stroke plan painting the template from scratch.
pub fn fig1_plan(g: &Graph) -> PaintPlan {
    PaintPlan::new(vec![
        Stroke::new(g.full_set(), fig1_color("W")),
        Stroke::new(fig1_set(g, "b f g l p r s"), fig1_color("K")),
        Stroke::new(fig1_set(g, "b f g p s"), fig1_color("L")),
        Stroke::new(fig1_set(g, "b f p"), fig1_color("G")),
        Stroke::new(fig1_set(g, "p"), fig1_color("B")),
        Stroke::new(fig1_set(g, "c"), fig1_color("M")),
    ])
}

/// The five-move flood sequence that decolors the template.
pub fn fig1_flood() -> FloodSequence {
    vec![
        FloodMove::new(vid("c"), fig1_color("W")),
        FloodMove::new(vid("p"), fig1_color("G")),
        FloodMove::new(vid("p"), fig1_color("L")),
        FloodMove::new(vid("p"), fig1_color("K")),
        FloodMove::new(vid("p"), fig1_color("W")),
    ]
}
