#![allow(dead_code)]

//! Helpers shared by the integration suites.

use std::fs;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use minipaint::gen::{self, GenKind};
use minipaint::io::Instance;
use minipaint::{Graph, Template, VertexSet};

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path:?}: {e}"))
}

pub fn figure1() -> Instance {
    minipaint::io::parse_instance(&fixture("figure1.json")).unwrap()
}

/// Streams seeded random instances until `want` of them pass the filter.
pub fn instances(
    kind: GenKind,
    max_n: usize,
    max_colors: usize,
    want: usize,
    seed0: u64,
    filter: impl Fn(&Instance) -> bool,
) -> Vec<Instance> {
    let mut out = Vec::with_capacity(want);
    let mut seed = seed0;
    while out.len() < want {
        assert!(
            seed - seed0 < 200_000,
            "filter rejected too many instances (kind {kind:?}, n<={max_n})"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let n = rng.gen_range(1..=max_n);
        let colors = rng.gen_range(1..=max_colors);
        if let Ok(inst) = gen::generate(kind, n, colors, seed) {
            if filter(&inst) {
                out.push(inst);
            }
        }
        seed += 1;
    }
    out
}

pub fn is_connected(inst: &Instance) -> bool {
    inst.graph.is_connected()
}

/// Exhaustive flood optimum by breadth-first search over whole paintings.
/// Independent of the library's iterative-deepening search.
pub fn flood_bfs_optimum(g: &Graph, t: &Template) -> usize {
    use std::collections::{HashMap, VecDeque};
    let n = g.vertex_count();
    let start: Vec<usize> = (0..n).map(|v| t.color(v).0).collect();
    let colors: Vec<usize> = {
        let mut c: Vec<usize> = start.clone();
        c.sort_unstable();
        c.dedup();
        c
    };
    let monochromatic = |s: &[usize]| s.windows(2).all(|w| w[0] == w[1]);
    if monochromatic(&start) {
        return 0;
    }
    let mut dist: HashMap<Vec<usize>, usize> = HashMap::new();
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        let d = dist[&state];
        let painting = Template::new(state.iter().map(|&c| minipaint::ColorId(c)).collect());
        let mut seen = VertexSet::empty(n);
        for v in 0..n {
            if seen.contains(v) {
                continue;
            }
            let comp =
                minipaint::paint::color_component(g, &painting.to_painting(), v).unwrap();
            seen.union_with(&comp);
            for &c in &colors {
                if c == state[v] {
                    continue;
                }
                let mut next = state.clone();
                for w in comp.iter() {
                    next[w] = c;
                }
                if monochromatic(&next) {
                    return d + 1;
                }
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
    }
    unreachable!("flooding always terminates on a non-empty graph")
}
