use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Index into an instance's color-name table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorId(pub usize);

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A partial assignment of colors to vertices. Vertices may be unpainted;
/// two unpainted vertices count as sharing one pseudo-color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Painting {
    colors: Vec<Option<ColorId>>,
}

impl Painting {
    /// The everywhere-undefined painting.
    pub fn undefined(n: usize) -> Self {
        Painting {
            colors: vec![None; n],
        }
    }

    pub fn from_colors(colors: Vec<Option<ColorId>>) -> Self {
        Painting { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<ColorId> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Option<ColorId>) {
        self.colors[v] = c;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<ColorId>] {
        &self.colors
    }
}

/// A total painting: the target a plan must reproduce, and the initial
/// position of the flood game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    colors: Vec<ColorId>,
}

impl Template {
    pub fn new(colors: Vec<ColorId>) -> Self {
        Template { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> ColorId {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[ColorId] {
        &self.colors
    }

    /// Colors that actually occur, ascending and without duplicates.
    pub fn used_colors(&self) -> Vec<ColorId> {
        let mut used: Vec<ColorId> = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        used
    }

    /// t^{-1}(c): every vertex the template assigns color `c`.
    pub fn color_class(&self, c: ColorId) -> VertexSet {
        let mut s = VertexSet::empty(self.len());
        for (v, &col) in self.colors.iter().enumerate() {
            if col == c {
                s.insert(v);
            }
        }
        s
    }

    pub fn to_painting(&self) -> Painting {
        Painting {
            colors: self.colors.iter().map(|&c| Some(c)).collect(),
        }
    }
}

/// One brush stroke: overwrite a connected area with a color.
///
/// The derived order (area first, then color, with areas compared as sorted
/// vertex sequences) is the tie-break order the solver uses.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stroke {
    pub area: VertexSet,
    pub color: ColorId,
}

impl Stroke {
    pub fn new(area: VertexSet, color: ColorId) -> Self {
        Stroke { area, color }
    }
}

/// A sequence of strokes meant to turn the blank painting into a template.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PaintPlan {
    pub strokes: Vec<Stroke>,
}

impl PaintPlan {
    pub fn new(strokes: Vec<Stroke>) -> Self {
        PaintPlan { strokes }
    }

    pub fn len(&self) -> usize {
        self.strokes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strokes.is_empty()
    }
}

/// One move of the flood game: recolor the pivot's whole color component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FloodMove {
    pub pivot: usize,
    pub color: ColorId,
}

impl FloodMove {
    pub fn new(pivot: usize, color: ColorId) -> Self {
        FloodMove { pivot, color }
    }
}

pub type FloodSequence = Vec<FloodMove>;

/// A total order on colors, given as a ranking of color identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorOrder {
    rank: Vec<usize>,
}

impl ColorOrder {
    /// Ascending numeric identifier order over `0..color_count`.
    pub fn ascending(color_count: usize) -> Self {
        ColorOrder {
            rank: (0..color_count).collect(),
        }
    }

    /// Order given explicitly as a permutation of all color identifiers,
    /// smallest first.
    pub fn from_sequence(seq: &[ColorId]) -> Result<Self> {
        let mut rank = vec![usize::MAX; seq.len()];
        for (pos, c) in seq.iter().enumerate() {
            if c.0 >= seq.len() || rank[c.0] != usize::MAX {
                return Err(Error::Config(format!(
                    "color order is not a permutation: {seq:?}"
                )));
            }
            rank[c.0] = pos;
        }
        Ok(ColorOrder { rank })
    }

    pub fn color_count(&self) -> usize {
        self.rank.len()
    }

    pub fn rank(&self, c: ColorId) -> usize {
        self.rank[c.0]
    }

    pub fn cmp(&self, a: ColorId, b: ColorId) -> Ordering {
        self.rank(a).cmp(&self.rank(b))
    }

    pub fn sort(&self, colors: &mut [ColorId]) {
        colors.sort_by(|&a, &b| self.cmp(a, b));
    }
}

/// Parameters of a (D, k, ≺)-canonical plan: the dominating induced P4 used
/// as a hub, the tail length, and the color order of the head.
#[derive(Debug, Clone)]
pub struct CanonicalParams {
    pub hub: VertexSet,
    pub tail_len: usize,
    pub order: ColorOrder,
}

impl CanonicalParams {
    pub fn new(hub: VertexSet, tail_len: usize, order: ColorOrder) -> Result<Self> {
        if tail_len > 12 {
            return Err(Error::Config(format!(
                "tail length {tail_len} exceeds the supported maximum of 12"
            )));
        }
        Ok(CanonicalParams {
            hub,
            tail_len,
            order,
        })
    }
}

/// Why a plan, flood sequence, or canonical-shape check was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationFailure {
    EmptyArea {
        stroke: usize,
    },
    DisconnectedArea {
        stroke: usize,
    },
    WrongFinalColor {
        vertex: usize,
        expected: ColorId,
        found: Option<ColorId>,
    },
    NotMonochromatic {
        vertex_a: usize,
        vertex_b: usize,
    },
    CanonicalShape {
        stroke: usize,
    },
    OrderViolation {
        stroke: usize,
    },
}

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationFailure::EmptyArea { stroke } => {
                write!(f, "stroke {stroke} has an empty area")
            }
            VerificationFailure::DisconnectedArea { stroke } => {
                write!(f, "stroke {stroke} has a disconnected area")
            }
            VerificationFailure::WrongFinalColor {
                vertex,
                expected,
                found,
            } => match found {
                Some(c) => write!(
                    f,
                    "vertex {vertex} ends with color {c}, template wants {expected}"
                ),
                None => write!(f, "vertex {vertex} is never painted, template wants {expected}"),
            },
            VerificationFailure::NotMonochromatic { vertex_a, vertex_b } => write!(
                f,
                "final painting is not monochromatic: vertices {vertex_a} and {vertex_b} differ"
            ),
            VerificationFailure::CanonicalShape { stroke } => {
                write!(f, "head stroke {stroke} is not of the form t^-1(c) + D")
            }
            VerificationFailure::OrderViolation { stroke } => {
                write!(f, "head stroke {stroke} violates the color order")
            }
        }
    }
}

/// Outcome of a verification; `ok` exactly when no failure was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub failure: Option<VerificationFailure>,
}

impl VerificationReport {
    pub fn pass() -> Self {
        VerificationReport { failure: None }
    }

    pub fn fail(failure: VerificationFailure) -> Self {
        VerificationReport {
            failure: Some(failure),
        }
    }

    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// The maximal connected monochromatic set containing `v` under `p`.
/// Unpainted vertices all share one pseudo-color.
pub fn color_component(g: &Graph, p: &Painting, v: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    if p.len() != g.vertex_count() {
        return Err(Error::PaintingSizeMismatch {
            expected: g.vertex_count(),
            found: p.len(),
        });
    }
    let target = p.get(v);
    let mut mask = g.empty_set();
    for w in g.vertices() {
        if p.get(w) == target {
            mask.insert(w);
        }
    }
    Ok(g.reachable_within(v, &mask))
}

fn check_stroke(g: &Graph, stroke: &Stroke) -> Result<()> {
    if stroke.area.capacity() != g.vertex_count() {
        return Err(Error::CapacityMismatch {
            expected: g.vertex_count(),
            found: stroke.area.capacity(),
        });
    }
    if stroke.area.is_empty() {
        return Err(Error::EmptyArea);
    }
    if !g.is_connected_subset(&stroke.area)? {
        return Err(Error::DisconnectedArea);
    }
    Ok(())
}

/// Applies one stroke, recoloring exactly its area.
pub fn apply_stroke(g: &Graph, p: &Painting, stroke: &Stroke) -> Result<Painting> {
    check_stroke(g, stroke)?;
    if p.len() != g.vertex_count() {
        return Err(Error::PaintingSizeMismatch {
            expected: g.vertex_count(),
            found: p.len(),
        });
    }
    let mut next = p.clone();
    for v in stroke.area.iter() {
        next.set(v, Some(stroke.color));
    }
    Ok(next)
}

/// Runs a plan from the blank painting, returning the full trace
/// p_0, p_1, ..., p_s. Stroke failures carry their 1-based index.
pub fn simulate_plan(g: &Graph, plan: &PaintPlan) -> Result<Vec<Painting>> {
    let mut trace = Vec::with_capacity(plan.len() + 1);
    trace.push(Painting::undefined(g.vertex_count()));
    for (i, stroke) in plan.strokes.iter().enumerate() {
        let next = apply_stroke(g, trace.last().unwrap(), stroke).map_err(|e| Error::Stroke {
            index: i + 1,
            source: Box::new(e),
        })?;
        trace.push(next);
    }
    Ok(trace)
}

/// Checks that every stroke is applicable and the final painting equals the
/// template pointwise. Never errors; problems are reported.
pub fn verify_plan(g: &Graph, t: &Template, plan: &PaintPlan) -> VerificationReport {
    assert_eq!(t.len(), g.vertex_count(), "template/graph mismatch");
    let trace = match simulate_plan(g, plan) {
        Ok(trace) => trace,
        Err(Error::Stroke { index, source }) => {
            return VerificationReport::fail(match *source {
                Error::EmptyArea => VerificationFailure::EmptyArea { stroke: index },
                _ => VerificationFailure::DisconnectedArea { stroke: index },
            });
        }
        Err(_) => unreachable!("simulate_plan only fails with stroke errors"),
    };
    let last = trace.last().unwrap();
    for v in g.vertices() {
        if last.get(v) != Some(t.color(v)) {
            return VerificationReport::fail(VerificationFailure::WrongFinalColor {
                vertex: v,
                expected: t.color(v),
                found: last.get(v),
            });
        }
    }
    VerificationReport::pass()
}

/// Applies one flood move: the pivot's whole color component takes the
/// move's color.
pub fn apply_flood_move(g: &Graph, t: &Template, m: &FloodMove) -> Result<Template> {
    g.check_vertex(m.pivot)?;
    if t.len() != g.vertex_count() {
        return Err(Error::PaintingSizeMismatch {
            expected: g.vertex_count(),
            found: t.len(),
        });
    }
    let comp = color_component(g, &t.to_painting(), m.pivot)?;
    let mut colors = t.as_slice().to_vec();
    for v in comp.iter() {
        colors[v] = m.color;
    }
    Ok(Template::new(colors))
}

/// Runs a flood sequence, returning the trace of paintings q_0, ..., q_m.
pub fn simulate_flood(g: &Graph, t0: &Template, seq: &[FloodMove]) -> Result<Vec<Template>> {
    let mut trace = Vec::with_capacity(seq.len() + 1);
    trace.push(t0.clone());
    for m in seq {
        let next = apply_flood_move(g, trace.last().unwrap(), m)?;
        trace.push(next);
    }
    Ok(trace)
}

/// Checks that the sequence floods the painting monochromatic.
pub fn verify_flood(g: &Graph, t0: &Template, seq: &[FloodMove]) -> VerificationReport {
    let trace = simulate_flood(g, t0, seq).expect("flood moves over valid pivots");
    let last = trace.last().unwrap();
    for v in 1..g.vertex_count() {
        if last.color(v) != last.color(0) {
            return VerificationReport::fail(VerificationFailure::NotMonochromatic {
                vertex_a: 0,
                vertex_b: v,
            });
        }
    }
    VerificationReport::pass()
}

/// Finalizing data of a plan: for each vertex the last stroke touching it,
/// and for each stroke the set of vertices it finalizes.
///
/// Stroke indices are 1-based throughout, matching the finishing-index
/// arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finalizing {
    /// f_P(v): 1-based index of the last stroke covering v.
    pub per_vertex: Vec<usize>,
    /// F_P(i) at index i-1: vertices finalized by stroke i.
    pub per_stroke: Vec<VertexSet>,
}

impl Finalizing {
    pub fn stroke_of(&self, v: usize) -> usize {
        self.per_vertex[v]
    }

    /// F_P(i) for a 1-based stroke index.
    pub fn finalized_by(&self, i: usize) -> &VertexSet {
        &self.per_stroke[i - 1]
    }
}

/// Computes finalizing indices. Errors if some vertex is never painted.
pub fn finalizing(g: &Graph, plan: &PaintPlan) -> Result<Finalizing> {
    let n = g.vertex_count();
    let mut per_vertex = vec![0usize; n];
    for (i, stroke) in plan.strokes.iter().enumerate() {
        for v in stroke.area.iter() {
            per_vertex[v] = i + 1;
        }
    }
    if let Some(v) = per_vertex.iter().position(|&i| i == 0) {
        return Err(Error::UncoveredVertex { vertex: v });
    }
    let mut per_stroke: Vec<VertexSet> = (0..plan.len()).map(|_| g.empty_set()).collect();
    for (v, &i) in per_vertex.iter().enumerate() {
        per_stroke[i - 1].insert(v);
    }
    Ok(Finalizing {
        per_vertex,
        per_stroke,
    })
}

fn p4_finishing_index(f: &Finalizing, s: u128, p4: [usize; 4]) -> u128 {
    let mut vals: Vec<u128> = p4.iter().map(|&v| f.per_vertex[v] as u128).collect();
    vals.sort_unstable();
    s * s * s * vals[0] + s * s * vals[1] + s * vals[2] + vals[3]
}

/// Finishing index of one induced P4 under the plan:
/// s^3·f(a) + s^2·f(b) + s·f(c) + f(d) with f-values sorted ascending.
pub fn finishing_index(g: &Graph, plan: &PaintPlan, p4: [usize; 4]) -> Result<u128> {
    if !g.is_induced_p4(p4) {
        return Err(Error::NotInducedP4(p4));
    }
    let f = finalizing(g, plan)?;
    Ok(p4_finishing_index(&f, plan.len() as u128, p4))
}

/// Maximum finishing index over all induced P4s; `None` on cographs.
pub fn plan_finishing_index(g: &Graph, plan: &PaintPlan) -> Result<Option<u128>> {
    let p4s = g.induced_p4s();
    if p4s.is_empty() {
        return Ok(None);
    }
    let f = finalizing(g, plan)?;
    let s = plan.len() as u128;
    Ok(p4s
        .into_iter()
        .map(|p4| p4_finishing_index(&f, s, p4))
        .max())
}

fn is_monochromatic(p: &Painting, area: &VertexSet) -> bool {
    let mut iter = area.iter();
    match iter.next() {
        None => true,
        Some(first) => {
            let c = p.get(first);
            iter.all(|v| p.get(v) == c)
        }
    }
}

/// Whether the plan is recursive: the first stroke fills V, every area is
/// monochromatic before its stroke and a color component afterwards.
/// Plans that do not even simulate are not recursive.
pub fn is_recursive_plan(g: &Graph, plan: &PaintPlan) -> bool {
    if g.vertex_count() == 0 {
        return plan.is_empty();
    }
    let trace = match simulate_plan(g, plan) {
        Ok(trace) => trace,
        Err(_) => return false,
    };
    if plan.is_empty() || plan.strokes[0].area != g.full_set() {
        return false;
    }
    for (i, stroke) in plan.strokes.iter().enumerate() {
        if !is_monochromatic(&trace[i], &stroke.area) {
            return false;
        }
        let rep = stroke.area.first().unwrap();
        let comp = color_component(g, &trace[i + 1], rep).unwrap();
        if comp != stroke.area {
            return false;
        }
    }
    true
}

fn check_hub(g: &Graph, t: &Template, hub: &VertexSet) -> Result<[usize; 4]> {
    assert_eq!(t.len(), g.vertex_count(), "template/graph mismatch");
    let members = hub.to_vec();
    let four: [usize; 4] = match members.as_slice().try_into() {
        Ok(four) => four,
        Err(_) => return Err(Error::InvalidHub(members)),
    };
    if !g.is_induced_p4(four) || !g.is_dominating(hub) {
        return Err(Error::InvalidHub(members.clone()));
    }
    Ok(four)
}

/// Checks the canonical head shape, reporting the first offending stroke.
pub fn verify_canonical(
    g: &Graph,
    t: &Template,
    plan: &PaintPlan,
    params: &CanonicalParams,
) -> Result<VerificationReport> {
    check_hub(g, t, &params.hub)?;
    let head_len = plan.len().saturating_sub(params.tail_len);
    for i in 0..head_len {
        let stroke = &plan.strokes[i];
        let expected = t.color_class(stroke.color).union(&params.hub);
        if stroke.area != expected {
            return Ok(VerificationReport::fail(VerificationFailure::CanonicalShape {
                stroke: i + 1,
            }));
        }
        if i > 0
            && params
                .order
                .cmp(plan.strokes[i - 1].color, stroke.color)
                != Ordering::Less
        {
            return Ok(VerificationReport::fail(VerificationFailure::OrderViolation {
                stroke: i + 1,
            }));
        }
    }
    Ok(VerificationReport::pass())
}

/// Whether the first s−k strokes follow the canonical head shape with
/// strictly ascending colors.
pub fn is_canonical(
    g: &Graph,
    t: &Template,
    plan: &PaintPlan,
    params: &CanonicalParams,
) -> Result<bool> {
    Ok(verify_canonical(g, t, plan, params)?.ok())
}

/// Whether no stroke can absorb another vertex while keeping the plan valid
/// and canonical. The input must itself be a valid canonical plan.
pub fn is_maximal_canonical(
    g: &Graph,
    t: &Template,
    plan: &PaintPlan,
    params: &CanonicalParams,
) -> Result<bool> {
    let report = verify_plan(g, t, plan);
    if let Some(failure) = report.failure {
        return Err(Error::InvalidPlan(failure));
    }
    let report = verify_canonical(g, t, plan, params)?;
    if let Some(failure) = report.failure {
        return Err(Error::NotCanonical(failure));
    }
    for i in 0..plan.len() {
        for v in g.vertices() {
            if plan.strokes[i].area.contains(v) {
                continue;
            }
            let mut candidate = plan.clone();
            candidate.strokes[i].area.insert(v);
            if verify_plan(g, t, &candidate).ok()
                && verify_canonical(g, t, &candidate, params)?.ok()
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
