//! Conversions between paint plans and flood sequences.
//!
//! A plan of s strokes corresponds to a flood sequence of s−1 moves and vice
//! versa. The plan→flood direction first normalizes the plan into recursive
//! form: every area monochromatic before its stroke and a color component
//! afterwards, first stroke filling the graph. Peeling a recursive plan from
//! the back then inverts stroke by stroke into flood moves.
//!
//! All three operations require a connected graph: a recursive plan's first
//! stroke paints V(G), which is only a valid area when the graph is
//! connected. The empty instance passes through degenerately.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paint::{
    color_component, is_recursive_plan, simulate_flood, simulate_plan, verify_flood, verify_plan,
    FloodMove, FloodSequence, PaintPlan, Stroke, Template,
};

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::DisconnectedGraph)
    }
}

fn require_verified(g: &Graph, t: &Template, plan: &PaintPlan) -> Result<()> {
    match verify_plan(g, t, plan).failure {
        None => Ok(()),
        Some(failure) => Err(Error::InvalidPlan(failure)),
    }
}

/// Index (1-based) of the last non-recursive stroke, if any.
fn last_non_recursive(g: &Graph, plan: &PaintPlan) -> usize {
    let trace = simulate_plan(g, plan).expect("plan verified before normalization");
    for i in (0..plan.len()).rev() {
        let stroke = &plan.strokes[i];
        let before = &trace[i];
        let rep = stroke.area.first().unwrap();
        let mono = stroke
            .area
            .iter()
            .all(|v| before.get(v) == before.get(rep));
        if !mono {
            return i + 1;
        }
        let comp = color_component(g, &trace[i + 1], rep).unwrap();
        if comp != stroke.area {
            return i + 1;
        }
    }
    0
}

/// Rewrites a verifying plan into a recursive plan of the same length that
/// still paints the same template.
///
/// Repeatedly takes the last non-recursive stroke j, grows every area up to
/// stroke j that meets the color component around A_j, and finally widens
/// the first stroke to the whole graph.
pub fn normalize_recursive(g: &Graph, t: &Template, plan: &PaintPlan) -> Result<PaintPlan> {
    if g.vertex_count() == 0 {
        return if plan.is_empty() {
            Ok(plan.clone())
        } else {
            Err(Error::InvalidPlan(
                verify_plan(g, t, plan).failure.unwrap_or(
                    crate::paint::VerificationFailure::EmptyArea { stroke: 1 },
                ),
            ))
        };
    }
    require_connected(g)?;
    require_verified(g, t, plan)?;

    let mut plan = plan.clone();
    let mut previous_j = plan.len() + 1;
    loop {
        let j = last_non_recursive(g, &plan);
        if j == 0 {
            break;
        }
        // Each round strictly lowers the last non-recursive index.
        if j >= previous_j {
            return Err(Error::Internal(format!(
                "normalization did not make progress at stroke {j}"
            )));
        }
        previous_j = j;

        let trace = simulate_plan(g, &plan).unwrap();
        let stroke = &plan.strokes[j - 1];
        let absorbed = color_component(g, &trace[j], stroke.area.first().unwrap()).unwrap();
        for i in 0..j {
            if !plan.strokes[i].area.is_disjoint(&absorbed) {
                plan.strokes[i].area.union_with(&absorbed);
            }
        }
    }
    plan.strokes[0].area = g.full_set();

    debug_assert!(verify_plan(g, t, &plan).ok());
    debug_assert!(is_recursive_plan(g, &plan));
    Ok(plan)
}

/// Inverts a verifying plan into a flood sequence of exactly s−1 moves for
/// the graph initially painted with the template.
///
/// After normalization the last stroke's area is a color component of the
/// final painting, so flooding it with the color it held one step earlier
/// undoes the stroke; peeling all strokes down to the first yields the
/// sequence in game order.
pub fn plan_to_flood(g: &Graph, t: &Template, plan: &PaintPlan) -> Result<FloodSequence> {
    if g.vertex_count() == 0 && plan.is_empty() {
        return Ok(Vec::new());
    }
    let normalized = normalize_recursive(g, t, plan)?;
    let trace = simulate_plan(g, &normalized).unwrap();
    let mut moves = Vec::with_capacity(normalized.len().saturating_sub(1));
    for i in (2..=normalized.len()).rev() {
        let area = &normalized.strokes[i - 1].area;
        let pivot = area.first().unwrap();
        let color = trace[i - 1]
            .get(pivot)
            .expect("paintings are total after the first stroke");
        moves.push(FloodMove::new(pivot, color));
    }
    debug_assert!(verify_flood(g, t, &moves).ok());
    Ok(moves)
}

/// Inverts a monochromatizing flood sequence into a plan of |seq|+1 strokes
/// that paints the initial painting as its template.
///
/// Each move flooded some component B that previously held color c; read
/// backwards that is the stroke (B, c). A first stroke fills the graph with
/// the final monochromatic color.
pub fn flood_to_plan(g: &Graph, p0: &Template, seq: &[FloodMove]) -> Result<PaintPlan> {
    if g.vertex_count() == 0 && seq.is_empty() {
        return Ok(PaintPlan::default());
    }
    require_connected(g)?;
    let trace = simulate_flood(g, p0, seq)?;
    let last = trace.last().unwrap();
    if (1..g.vertex_count()).any(|v| last.color(v) != last.color(0)) {
        return Err(Error::NotFlooding);
    }

    let mut strokes = Vec::with_capacity(seq.len() + 1);
    strokes.push(Stroke::new(g.full_set(), last.color(0)));
    for (i, m) in seq.iter().enumerate().rev() {
        let before = &trace[i];
        let flooded = color_component(g, &before.to_painting(), m.pivot)?;
        strokes.push(Stroke::new(flooded, before.color(m.pivot)));
    }
    let plan = PaintPlan::new(strokes);
    debug_assert!(verify_plan(g, p0, &plan).ok());
    Ok(plan)
}
