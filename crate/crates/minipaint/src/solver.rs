//! Exact optimal solving.
//!
//! Connected cographs are solved directly through dominating edges. A
//! connected co-gem-free graph that contains an induced P4 is solved by
//! enumerating canonical plans: a head of strokes t^-1(c) + D routed through
//! a dominating induced P4 hub D with colors ascending, followed by a short
//! tail grown from seed vertices by reachability closure. Candidate plan
//! lengths run from the used-color count c up to c+4, and for each length
//! the tail length escalates from 0 upwards; the first verified candidate is
//! optimal. Disconnected inputs decompose into components.

use std::collections::BTreeSet;
use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::paint::{
    is_canonical, verify_plan, CanonicalParams, ColorId, ColorOrder, PaintPlan, Stroke, Template,
};
use crate::set::VertexSet;

/// Head of a canonical plan: strokes t^-1(c) + D for the colors in `colors`,
/// ascending under the order it was generated for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Head {
    pub strokes: Vec<Stroke>,
    pub hub: VertexSet,
    pub colors: Vec<ColorId>,
}

/// Tail candidate: exactly k strokes, each grown from its seed by collecting
/// everything reachable inside its color class plus all later areas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tail {
    pub strokes: Vec<Stroke>,
    /// One generating (color, vertex) seed per stroke, in stroke order.
    pub seeds: Vec<(ColorId, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Cograph components via dominating edges, the rest via canonical
    /// enumeration, with a brute-force fallback on capacity blowups.
    Auto,
    /// Require every component to be a cograph.
    Cograph,
    /// Like `Auto` but never falls back to the brute-force search.
    Canonical,
    /// Exhaustive search; works on any graph within the budget.
    Oracle,
}

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub algorithm: Algorithm,
    /// Upper bound for the tail-length escalation; at most 12, which is the
    /// proven sufficient tail length at the optimal plan length.
    pub max_tail_len: usize,
    /// Cap on the number of tail candidates generated per (s, k) level.
    pub tail_budget: usize,
    /// Budget for the brute-force fallback (and for `Algorithm::Oracle`).
    pub oracle_budget: oracle::Budget,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            algorithm: Algorithm::Auto,
            max_tail_len: 12,
            tail_budget: 1_000_000,
            oracle_budget: oracle::Budget {
                max_vertices: 12,
                max_colors: 12,
                max_depth: 16,
            },
        }
    }
}

/// How one component was solved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    Cograph,
    Canonical {
        /// Minimal tail length that produced a plan.
        tail_len: usize,
        /// Plan length minus the component's used-color count.
        extra: usize,
    },
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Component vertices in the input graph's numbering.
    pub vertices: VertexSet,
    pub colors_used: usize,
    pub strokes: usize,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolveReport {
    pub components: Vec<ComponentReport>,
}

/// Optimal plan for a connected cograph.
///
/// Scans dominating edges for an endpoint whose color class is connected;
/// painting every other class through the edge and the chosen class last
/// needs one stroke per color. Without such an endpoint, two closing strokes
/// finish the edge instead, one stroke more.
pub fn solve_cograph(g: &Graph, t: &Template) -> Result<PaintPlan> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if t.len() != n {
        return Err(Error::PaintingSizeMismatch {
            expected: n,
            found: t.len(),
        });
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if let Some(w) = g.find_induced_p4() {
        return Err(Error::NotCograph(w));
    }
    if n == 1 {
        return Ok(PaintPlan::new(vec![Stroke::new(
            VertexSet::singleton(1, 0),
            t.color(0),
        )]));
    }

    let used = t.used_colors();
    let dominating = g.dominating_edges();
    if dominating.is_empty() {
        return Err(Error::Internal(
            "connected cograph without dominating edges".into(),
        ));
    }

    let plan = 'plan: {
        for &(u, v) in &dominating {
            for (v1, v2) in [(u, v), (v, u)] {
                let class = t.color_class(t.color(v1));
                if g.is_connected_subset(&class)? {
                    // One stroke per color. The edge endpoints ride along in
                    // every class stroke, so v2's own color must come last
                    // before the closing stroke finishes v1's class.
                    let mut phase: Vec<ColorId> =
                        used.iter().copied().filter(|&c| c != t.color(v1)).collect();
                    if t.color(v2) != t.color(v1) {
                        let pos = phase.iter().position(|&c| c == t.color(v2)).unwrap();
                        let c = phase.remove(pos);
                        phase.push(c);
                    }
                    let mut strokes = Vec::with_capacity(used.len());
                    for c in phase {
                        let mut area = t.color_class(c);
                        area.insert(v1);
                        area.insert(v2);
                        strokes.push(Stroke::new(area, c));
                    }
                    strokes.push(Stroke::new(class, t.color(v1)));
                    break 'plan PaintPlan::new(strokes);
                }
            }
        }
        // No dominating edge has a connected color class: pay one extra
        // stroke to finish the edge itself.
        let (v1, v2) = dominating[0];
        let mut strokes = Vec::with_capacity(used.len() + 1);
        for &c in used.iter().filter(|&&c| c != t.color(v1)) {
            let mut area = t.color_class(c);
            area.insert(v1);
            area.insert(v2);
            strokes.push(Stroke::new(area, c));
        }
        let mut closing = t.color_class(t.color(v1));
        closing.insert(v2);
        strokes.push(Stroke::new(closing, t.color(v1)));
        strokes.push(Stroke::new(VertexSet::singleton(n, v2), t.color(v2)));
        break 'plan PaintPlan::new(strokes);
    };

    debug_assert!(verify_plan(g, t, &plan).ok());
    Ok(plan)
}

/// All canonical heads for plan length `s` and tail length `k`: one per
/// (dominating induced P4, color subset of size s−k) pair. With s = k the
/// single empty head per hub is emitted.
pub fn generate_heads(
    g: &Graph,
    t: &Template,
    order: &ColorOrder,
    s: usize,
    k: usize,
) -> Vec<Head> {
    if k > s {
        return Vec::new();
    }
    let m = s - k;
    let used = t.used_colors();
    if m > used.len() {
        return Vec::new();
    }
    let hubs: Vec<VertexSet> = g
        .induced_p4s()
        .into_iter()
        .map(|w| VertexSet::from_vertices(g.vertex_count(), w).unwrap())
        .filter(|hub| g.is_dominating(hub))
        .collect();

    let mut heads = Vec::new();
    for hub in &hubs {
        for combo in used.iter().copied().combinations(m) {
            let mut colors = combo;
            order.sort(&mut colors);
            let strokes = colors
                .iter()
                .map(|&c| Stroke::new(t.color_class(c).union(hub), c))
                .collect();
            heads.push(Head {
                strokes,
                hub: hub.clone(),
                colors,
            });
        }
    }
    heads
}

/// Enumerates tail areas from the last stroke backwards: V_i is a component
/// of G[t^-1(c_i) + V_{i+1} + ... + V_k]. Walking the components directly
/// covers every distinct outcome of the raw (color, seed vertex)
/// enumeration, already deduplicated.
struct TailEnumerator<'a> {
    g: &'a Graph,
    t: &'a Template,
    used: Vec<ColorId>,
    budget: usize,
    stack: Vec<(ColorId, VertexSet)>,
    out: Vec<Tail>,
}

impl TailEnumerator<'_> {
    fn walk(&mut self, level: usize, later_union: &VertexSet) -> Result<()> {
        if level == 0 {
            if self.out.len() >= self.budget {
                return Err(Error::Capacity(format!(
                    "tail enumeration exceeds {} candidates",
                    self.budget
                )));
            }
            let mut strokes = Vec::with_capacity(self.stack.len());
            let mut seeds = Vec::with_capacity(self.stack.len());
            for (c, area) in self.stack.iter().rev() {
                strokes.push(Stroke::new(area.clone(), *c));
                seeds.push((*c, area.first().unwrap()));
            }
            self.out.push(Tail { strokes, seeds });
            return Ok(());
        }
        for i in 0..self.used.len() {
            let c = self.used[i];
            let mask = self.t.color_class(c).union(later_union);
            for comp in self.g.components_within(&mask) {
                let union = later_union.union(&comp);
                self.stack.push((c, comp));
                self.walk(level - 1, &union)?;
                self.stack.pop();
            }
        }
        Ok(())
    }
}

fn tails_bounded(g: &Graph, t: &Template, k: usize, budget: usize) -> Result<Vec<Tail>> {
    if k == 0 {
        return Ok(vec![Tail {
            strokes: Vec::new(),
            seeds: Vec::new(),
        }]);
    }
    let mut enumerator = TailEnumerator {
        g,
        t,
        used: t.used_colors(),
        budget,
        stack: Vec::with_capacity(k),
        out: Vec::new(),
    };
    enumerator.walk(k, &g.empty_set())?;
    Ok(enumerator.out)
}

/// All tail candidates of length k: a superset of the tails of maximal
/// canonical plans, deduplicated. k = 0 yields the single empty tail.
pub fn generate_tails(g: &Graph, t: &Template, k: usize) -> Vec<Tail> {
    tails_bounded(g, t, k, usize::MAX).expect("unbounded tail enumeration")
}

struct TailInfo<'a> {
    tail: &'a Tail,
    covered: VertexSet,
    /// Whether every covered vertex ends on its template color.
    consistent: bool,
}

fn tail_info<'a>(g: &Graph, t: &Template, tail: &'a Tail) -> TailInfo<'a> {
    let mut covered = g.empty_set();
    let mut overlay: Vec<Option<ColorId>> = vec![None; g.vertex_count()];
    for stroke in &tail.strokes {
        covered.union_with(&stroke.area);
        for v in stroke.area.iter() {
            overlay[v] = Some(stroke.color);
        }
    }
    let consistent = covered
        .iter()
        .all(|v| overlay[v] == Some(t.color(v)));
    TailInfo {
        tail,
        covered,
        consistent,
    }
}

/// Every head × tail concatenation that verifies against the template and
/// keeps the head's canonical shape, deduplicated and sorted by the
/// tie-break order.
pub fn combine(
    g: &Graph,
    t: &Template,
    heads: &[Head],
    tails: &[Tail],
    order: &ColorOrder,
) -> Vec<PaintPlan> {
    if heads.is_empty() || tails.is_empty() {
        return Vec::new();
    }
    let k = tails[0].strokes.len();
    debug_assert!(tails.iter().all(|tail| tail.strokes.len() == k));

    let full = g.full_set();
    let infos: Vec<TailInfo> = tails
        .iter()
        .map(|tail| tail_info(g, t, tail))
        .filter(|info| info.consistent)
        .collect();

    let found: Vec<Vec<PaintPlan>> = heads
        .par_iter()
        .map(|head| {
            // Vertices the head finishes, and the color the hub ends on.
            let head_covered = if head.colors.is_empty() {
                g.empty_set()
            } else {
                head.colors
                    .iter()
                    .fold(head.hub.clone(), |acc, &c| acc.union(&t.color_class(c)))
            };
            let hub_class = head
                .colors
                .last()
                .map(|&c| t.color_class(c).union(&head.hub));
            let params = CanonicalParams::new(head.hub.clone(), k, order.clone())
                .expect("tail length within canonical bounds");

            let mut plans = Vec::new();
            for info in &infos {
                let rest = full.difference(&info.covered);
                if !rest.is_subset(&head_covered) {
                    continue;
                }
                if let Some(hub_class) = &hub_class {
                    if !rest.intersection(&head.hub).is_subset(hub_class) {
                        continue;
                    }
                }
                let mut strokes = head.strokes.clone();
                strokes.extend(info.tail.strokes.iter().cloned());
                let plan = PaintPlan::new(strokes);
                if verify_plan(g, t, &plan).ok()
                    && is_canonical(g, t, &plan, &params).expect("heads carry valid hubs")
                {
                    plans.push(plan);
                }
            }
            plans
        })
        .collect();

    let dedup: BTreeSet<PaintPlan> = found.into_iter().flatten().collect();
    dedup.into_iter().collect()
}

fn canonical_search(
    g: &Graph,
    t: &Template,
    cfg: &SolveConfig,
) -> Result<(PaintPlan, usize, usize)> {
    let used = t.used_colors();
    let c = used.len();
    let order = ColorOrder::ascending(used.last().unwrap().0 + 1);

    let mut heads_by_len: HashMap<usize, Vec<Head>> = HashMap::new();
    let mut tails_by_len: HashMap<usize, Vec<Tail>> = HashMap::new();

    for s in c..=c + 4 {
        for k in 0..=cfg.max_tail_len.min(s) {
            let m = s - k;
            if m > c {
                continue;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = heads_by_len.entry(m) {
                e.insert(generate_heads(g, t, &order, s, k));
            }
            if let std::collections::hash_map::Entry::Vacant(e) = tails_by_len.entry(k) {
                e.insert(tails_bounded(g, t, k, cfg.tail_budget)?);
            }
            let plans = combine(g, t, &heads_by_len[&m], &tails_by_len[&k], &order);
            if let Some(best) = plans.into_iter().next() {
                return Ok((best, s, k));
            }
        }
    }

    if cfg.max_tail_len == 12 {
        Err(Error::Internal(format!(
            "canonical search exhausted plan lengths {c}..={} at tail length 12",
            c + 4
        )))
    } else {
        Err(Error::Capacity(format!(
            "canonical search exhausted with max tail length {}; raise it",
            cfg.max_tail_len
        )))
    }
}

fn oracle_component(g: &Graph, t: &Template, budget: &oracle::Budget) -> Result<PaintPlan> {
    oracle::plan_optimum(g, t, budget).map(|(_, plan)| plan)
}

/// Optimal plan plus a per-component account of how it was found.
pub fn solve_with_report(
    g: &Graph,
    t: &Template,
    cfg: &SolveConfig,
) -> Result<(PaintPlan, SolveReport)> {
    let n = g.vertex_count();
    if t.len() != n {
        return Err(Error::PaintingSizeMismatch {
            expected: n,
            found: t.len(),
        });
    }
    if cfg.max_tail_len > 12 {
        return Err(Error::Config(format!(
            "max tail length {} exceeds 12",
            cfg.max_tail_len
        )));
    }
    if n == 0 {
        return Ok((PaintPlan::default(), SolveReport::default()));
    }
    if matches!(cfg.algorithm, Algorithm::Auto | Algorithm::Canonical) {
        if let Some(w) = g.find_cogem() {
            return Err(Error::NotCogemFree(w));
        }
    }

    let mut strokes = Vec::new();
    let mut report = SolveReport::default();
    for comp in g.connected_components() {
        let (sub, back) = g.induced_subgraph(&comp);
        let sub_t = Template::new(back.iter().map(|&v| t.color(v)).collect());
        let colors_used = sub_t.used_colors().len();

        let (plan, method) = match cfg.algorithm {
            Algorithm::Cograph => (solve_cograph(&sub, &sub_t)?, Method::Cograph),
            Algorithm::Oracle => (
                oracle_component(&sub, &sub_t, &cfg.oracle_budget)?,
                Method::Oracle,
            ),
            Algorithm::Auto | Algorithm::Canonical => {
                if sub.is_cograph() {
                    (solve_cograph(&sub, &sub_t)?, Method::Cograph)
                } else {
                    match canonical_search(&sub, &sub_t, cfg) {
                        Ok((plan, s, k)) => (
                            plan,
                            Method::Canonical {
                                tail_len: k,
                                extra: s - colors_used,
                            },
                        ),
                        Err(Error::Capacity(msg)) => {
                            if matches!(cfg.algorithm, Algorithm::Auto)
                                && sub.vertex_count() <= cfg.oracle_budget.max_vertices
                            {
                                (
                                    oracle_component(&sub, &sub_t, &cfg.oracle_budget)?,
                                    Method::Oracle,
                                )
                            } else {
                                return Err(Error::Capacity(msg));
                            }
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        };

        report.components.push(ComponentReport {
            vertices: comp,
            colors_used,
            strokes: plan.len(),
            method,
        });
        for stroke in plan.strokes {
            let area =
                VertexSet::from_vertices(n, stroke.area.iter().map(|v| back[v]))?;
            strokes.push(Stroke::new(area, stroke.color));
        }
    }

    let plan = PaintPlan::new(strokes);
    debug_assert!(verify_plan(g, t, &plan).ok());
    Ok((plan, report))
}

/// Optimal plan for a co-gem-free instance (or any instance under
/// `Algorithm::Oracle` within budget).
pub fn solve(g: &Graph, t: &Template, cfg: &SolveConfig) -> Result<PaintPlan> {
    solve_with_report(g, t, cfg).map(|(plan, _)| plan)
}
