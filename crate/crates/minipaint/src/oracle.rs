//! Independent brute-force ground truth at desk scale.
//!
//! The search runs on the flood side, where a position has finitely many
//! moves (one representative pivot per color component, colors restricted to
//! the initial image), and lifts plan optima through the s ↔ s−1 move
//! correspondence. Iterative deepening certifies optimality: a result of
//! length L means the depth-(L−1) space was exhausted first.

use std::collections::HashMap;

use crate::equivalence::flood_to_plan;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paint::{ColorId, FloodMove, FloodSequence, PaintPlan, Template};

/// Hard limits for the exhaustive search. Exceeding a limit is an error,
/// never a silently wrong answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_colors: usize,
    pub max_depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 12,
            max_colors: 6,
            max_depth: 8,
        }
    }
}

struct Search {
    n: usize,
    adj: Vec<u32>,
    color_count: usize,
    /// Original identifiers of the dense search colors.
    palette: Vec<ColorId>,
    table: HashMap<Vec<u8>, usize>,
}

impl Search {
    fn component(&self, state: &[u8], start: usize) -> u32 {
        let color = state[start];
        let mut comp = 1u32 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let mut cand = self.adj[v] & !comp;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if state[w] == color {
                    comp |= 1 << w;
                    stack.push(w);
                }
            }
        }
        comp
    }

    /// Representative pivots, one per color component, ascending.
    fn pivots(&self, state: &[u8]) -> Vec<(usize, u32)> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & (1 << v) == 0 {
                let comp = self.component(state, v);
                seen |= comp;
                out.push((v, comp));
            }
        }
        out
    }

    fn distinct_colors(&self, state: &[u8]) -> u32 {
        let mut mask = 0u32;
        for &c in state {
            mask |= 1 << c;
        }
        mask.count_ones()
    }

    fn dfs(&mut self, state: &[u8], remaining: usize, moves: &mut Vec<FloodMove>) -> bool {
        let distinct = self.distinct_colors(state);
        if distinct == 1 {
            return true;
        }
        if remaining == 0 || (distinct - 1) as usize > remaining {
            return false;
        }
        if let Some(&seen) = self.table.get(state) {
            if seen >= remaining {
                return false;
            }
        }
        self.table.insert(state.to_vec(), remaining);

        for (pivot, comp) in self.pivots(state) {
            for c in 0..self.color_count as u8 {
                if c == state[pivot] {
                    continue;
                }
                let mut next = state.to_vec();
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next[v] = c;
                }
                moves.push(FloodMove::new(pivot, self.palette[c as usize]));
                if self.dfs(&next, remaining - 1, moves) {
                    return true;
                }
                moves.pop();
            }
        }
        false
    }
}

/// Minimum number of flood moves to make the painting monochromatic, with a
/// witness sequence. Errors with a capacity failure when the instance or the
/// required depth exceeds the budget.
pub fn flood_optimum(
    g: &Graph,
    p0: &Template,
    budget: &Budget,
) -> Result<(usize, FloodSequence)> {
    let n = g.vertex_count();
    if p0.len() != n {
        return Err(Error::PaintingSizeMismatch {
            expected: n,
            found: p0.len(),
        });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    if n > budget.max_vertices {
        return Err(Error::Capacity(format!(
            "{n} vertices exceed the search budget of {}",
            budget.max_vertices
        )));
    }
    let palette = p0.used_colors();
    if palette.len() > budget.max_colors {
        return Err(Error::Capacity(format!(
            "{} colors exceed the search budget of {}",
            palette.len(),
            budget.max_colors
        )));
    }

    let dense_of = |c: ColorId| palette.iter().position(|&p| p == c).unwrap() as u8;
    let state0: Vec<u8> = (0..n).map(|v| dense_of(p0.color(v))).collect();
    let mut search = Search {
        n,
        adj: (0..n)
            .map(|v| {
                let mut mask = 0u32;
                for w in g.neighbors(v).iter() {
                    mask |= 1 << w;
                }
                mask
            })
            .collect(),
        color_count: palette.len(),
        palette,
        table: HashMap::new(),
    };

    for limit in 0..=budget.max_depth {
        search.table.clear();
        let mut moves = Vec::new();
        if search.dfs(&state0, limit, &mut moves) {
            debug_assert_eq!(moves.len(), limit);
            return Ok((moves.len(), moves));
        }
    }
    Err(Error::Capacity(format!(
        "no flood sequence of at most {} moves; raise the depth cap",
        budget.max_depth
    )))
}

/// Minimum plan length with a witness plan, computed per connected component
/// as the component's flood optimum plus one and lifted through the flood
/// inversion. On connected graphs this is exactly flood_optimum + 1.
pub fn plan_optimum(g: &Graph, t: &Template, budget: &Budget) -> Result<(usize, PaintPlan)> {
    if g.vertex_count() == 0 {
        return Ok((0, PaintPlan::default()));
    }
    let mut strokes = Vec::new();
    for comp in g.connected_components() {
        let (sub, back) = g.induced_subgraph(&comp);
        let sub_t = Template::new(back.iter().map(|&v| t.color(v)).collect());
        let (_, seq) = flood_optimum(&sub, &sub_t, budget)?;
        let sub_plan = flood_to_plan(&sub, &sub_t, &seq)?;
        for stroke in sub_plan.strokes {
            let area = crate::set::VertexSet::from_vertices(
                g.vertex_count(),
                stroke.area.iter().map(|v| back[v]),
            )?;
            strokes.push(crate::paint::Stroke::new(area, stroke.color));
        }
    }
    let plan = PaintPlan::new(strokes);
    Ok((plan.len(), plan))
}
