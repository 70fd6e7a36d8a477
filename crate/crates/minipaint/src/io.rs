//! JSON documents for instances, plans, and flood sequences.
//!
//! Documents speak in labels and color names; the library speaks in dense
//! identifiers assigned by file order. Serialization is deterministic, so
//! fixtures diff cleanly and generator output is byte-stable.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paint::{ColorId, FloodMove, FloodSequence, PaintPlan, Stroke, Template};
use crate::set::VertexSet;

/// A graph plus its template and color-name table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub template: Template,
    pub color_names: Vec<String>,
    pub name: Option<String>,
    pub source: Option<String>,
}

impl Instance {
    pub fn new(
        graph: Graph,
        template: Template,
        color_names: Vec<String>,
        name: Option<String>,
        source: Option<String>,
    ) -> Result<Self> {
        if template.len() != graph.vertex_count() {
            return Err(Error::PaintingSizeMismatch {
                expected: graph.vertex_count(),
                found: template.len(),
            });
        }
        for v in graph.vertices() {
            if template.color(v).0 >= color_names.len() {
                return Err(Error::Config(format!(
                    "vertex {v} uses color {} outside the {}-entry color table",
                    template.color(v),
                    color_names.len()
                )));
            }
        }
        Ok(Instance {
            graph,
            template,
            color_names,
            name,
            source,
        })
    }

    pub fn vertex_label(&self, v: usize) -> String {
        self.graph.label(v)
    }

    pub fn color_name(&self, c: ColorId) -> &str {
        &self.color_names[c.0]
    }

    fn label_ids(&self) -> HashMap<String, usize> {
        self.graph
            .vertices()
            .map(|v| (self.graph.label(v), v))
            .collect()
    }

    fn color_ids(&self) -> HashMap<&str, ColorId> {
        self.color_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), ColorId(i)))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<String>,
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    colors: Vec<String>,
    template: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct StrokeDoc {
    area: Vec<String>,
    color: String,
}

#[derive(Serialize, Deserialize)]
struct PlanDoc {
    strokes: Vec<StrokeDoc>,
}

#[derive(Serialize, Deserialize)]
struct MoveDoc {
    pivot: String,
    color: String,
}

#[derive(Serialize, Deserialize)]
struct FloodDoc {
    moves: Vec<MoveDoc>,
}

fn from_json<'a, T: Deserialize<'a>>(what: &str, text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialization");
    s.push('\n');
    s
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: InstanceDoc = from_json("instance", text)?;

    let mut vertex_of = HashMap::new();
    for (i, label) in doc.vertices.iter().enumerate() {
        if vertex_of.insert(label.clone(), i).is_some() {
            return Err(Error::Parse(format!(
                "vertices[{i}]: duplicate label {label:?}"
            )));
        }
    }
    let mut color_of = HashMap::new();
    for (i, name) in doc.colors.iter().enumerate() {
        if color_of.insert(name.clone(), ColorId(i)).is_some() {
            return Err(Error::Parse(format!(
                "colors[{i}]: duplicate color {name:?}"
            )));
        }
    }

    let mut edges = Vec::with_capacity(doc.edges.len());
    let mut seen = std::collections::BTreeSet::new();
    for (i, (a, b)) in doc.edges.iter().enumerate() {
        let u = *vertex_of
            .get(a)
            .ok_or_else(|| Error::Parse(format!("edges[{i}]: unknown vertex {a:?}")))?;
        let v = *vertex_of
            .get(b)
            .ok_or_else(|| Error::Parse(format!("edges[{i}]: unknown vertex {b:?}")))?;
        if u == v {
            return Err(Error::Parse(format!("edges[{i}]: self-loop at {a:?}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse(format!(
                "edges[{i}]: duplicate edge {a:?} - {b:?}"
            )));
        }
        edges.push((u, v));
    }

    let mut template = vec![None; doc.vertices.len()];
    for (label, color) in &doc.template {
        let v = *vertex_of
            .get(label)
            .ok_or_else(|| Error::Parse(format!("template: unknown vertex {label:?}")))?;
        let c = *color_of
            .get(color)
            .ok_or_else(|| Error::Parse(format!("template[{label:?}]: unknown color {color:?}")))?;
        template[v] = Some(c);
    }
    let mut colors = Vec::with_capacity(template.len());
    for (v, c) in template.into_iter().enumerate() {
        colors.push(c.ok_or_else(|| {
            Error::Parse(format!(
                "template: missing entry for vertex {:?}",
                doc.vertices[v]
            ))
        })?);
    }

    let graph = Graph::from_edges(doc.vertices.len(), &edges)?.with_labels(doc.vertices)?;
    Instance::new(graph, Template::new(colors), doc.colors, doc.name, doc.source)
}

pub fn serialize_instance(inst: &Instance) -> String {
    let doc = InstanceDoc {
        name: inst.name.clone(),
        source: inst.source.clone(),
        vertices: inst.graph.vertices().map(|v| inst.vertex_label(v)).collect(),
        edges: inst
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| (inst.vertex_label(u), inst.vertex_label(v)))
            .collect(),
        colors: inst.color_names.clone(),
        template: inst
            .graph
            .vertices()
            .map(|v| (inst.vertex_label(v), inst.color_name(inst.template.color(v)).to_string()))
            .collect(),
    };
    to_json(&doc)
}

fn color_for_name(inst: &Instance, context: &str, name: &str) -> Result<ColorId> {
    inst.color_ids()
        .get(name)
        .copied()
        .ok_or_else(|| Error::Parse(format!("{context}: unknown color {name:?}")))
}

fn color_name_checked(inst: &Instance, c: ColorId) -> Result<String> {
    if c.0 < inst.color_names.len() {
        Ok(inst.color_names[c.0].clone())
    } else {
        Err(Error::Config(format!(
            "color {c} has no name in the instance table"
        )))
    }
}

pub fn parse_plan(text: &str, inst: &Instance) -> Result<PaintPlan> {
    let doc: PlanDoc = from_json("plan", text)?;
    let labels = inst.label_ids();
    let n = inst.graph.vertex_count();
    let mut strokes = Vec::with_capacity(doc.strokes.len());
    for (i, sd) in doc.strokes.iter().enumerate() {
        if sd.area.is_empty() {
            return Err(Error::Parse(format!("strokes[{i}]: empty area")));
        }
        let mut area = VertexSet::empty(n);
        for label in &sd.area {
            let v = *labels.get(label).ok_or_else(|| {
                Error::Parse(format!("strokes[{i}]: unknown vertex {label:?}"))
            })?;
            if area.contains(v) {
                return Err(Error::Parse(format!(
                    "strokes[{i}]: duplicate vertex {label:?}"
                )));
            }
            area.insert(v);
        }
        let color = color_for_name(inst, &format!("strokes[{i}]"), &sd.color)?;
        strokes.push(Stroke::new(area, color));
    }
    Ok(PaintPlan::new(strokes))
}

pub fn serialize_plan(plan: &PaintPlan, inst: &Instance) -> Result<String> {
    let mut strokes = Vec::with_capacity(plan.len());
    for stroke in &plan.strokes {
        if stroke.area.capacity() != inst.graph.vertex_count() {
            return Err(Error::CapacityMismatch {
                expected: inst.graph.vertex_count(),
                found: stroke.area.capacity(),
            });
        }
        strokes.push(StrokeDoc {
            area: stroke.area.iter().map(|v| inst.vertex_label(v)).collect(),
            color: color_name_checked(inst, stroke.color)?,
        });
    }
    Ok(to_json(&PlanDoc { strokes }))
}

pub fn parse_flood(text: &str, inst: &Instance) -> Result<FloodSequence> {
    let doc: FloodDoc = from_json("flood", text)?;
    let labels = inst.label_ids();
    let mut moves = Vec::with_capacity(doc.moves.len());
    for (i, md) in doc.moves.iter().enumerate() {
        let pivot = *labels.get(&md.pivot).ok_or_else(|| {
            Error::Parse(format!("moves[{i}]: unknown vertex {:?}", md.pivot))
        })?;
        let color = color_for_name(inst, &format!("moves[{i}]"), &md.color)?;
        moves.push(FloodMove::new(pivot, color));
    }
    Ok(moves)
}

pub fn serialize_flood(seq: &[FloodMove], inst: &Instance) -> Result<String> {
    let mut moves = Vec::with_capacity(seq.len());
    for m in seq {
        inst.graph.check_vertex(m.pivot)?;
        moves.push(MoveDoc {
            pivot: inst.vertex_label(m.pivot),
            color: color_name_checked(inst, m.color)?,
        });
    }
    Ok(to_json(&FloodDoc { moves }))
}
