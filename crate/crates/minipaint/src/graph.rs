use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A finite simple undirected graph over dense vertex identifiers `0..n`.
///
/// Immutable after construction; every query below is a pure function of the
/// adjacency structure, so graphs can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; parallel edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Attaches display labels; `labels.len()` must equal the vertex count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::Config(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.capacity() == self.vertex_count() {
            Ok(())
        } else {
            Err(Error::CapacityMismatch {
                expected: self.vertex_count(),
                found: s.capacity(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(v)
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges as (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Vertices reachable from `start` while staying inside `mask`.
    /// Returns the empty set when `start` is not in `mask`.
    pub fn reachable_within(&self, start: usize, mask: &VertexSet) -> VertexSet {
        let mut seen = self.empty_set();
        if !mask.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for w in self.adj[v].intersection(mask).difference(&seen).iter() {
                seen.insert(w);
                queue.push(w);
            }
        }
        seen
    }

    /// Connected components as a partition of V, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.full_set())
    }

    /// Connected components of the subgraph induced by `mask`, ordered by
    /// smallest member.
    pub fn components_within(&self, mask: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = mask.clone();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.reachable_within(v, mask);
            remaining = remaining.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// Whether the whole graph is connected. Graphs on zero or one vertex
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Whether `a` is non-empty and induces a connected subgraph.
    pub fn is_connected_subset(&self, a: &VertexSet) -> Result<bool> {
        self.check_set(a)?;
        match a.first() {
            None => Ok(false),
            Some(v) => Ok(self.reachable_within(v, a) == *a),
        }
    }

    /// Whether the closed neighborhoods of `d` cover all vertices.
    pub fn is_dominating(&self, d: &VertexSet) -> bool {
        self.check_set(d).expect("set/graph mismatch");
        let mut covered = d.clone();
        for v in d.iter() {
            covered.union_with(&self.adj[v]);
        }
        covered == self.full_set()
    }

    /// Whether removing `s` disconnects the graph. The graph itself must be
    /// connected.
    pub fn is_separator(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let rest = self.full_set().difference(s);
        Ok(self.components_within(&rest).len() > 1)
    }

    /// If `{a, b, c, d}` induces a path, returns its vertices in path order
    /// with the smaller endpoint first.
    fn p4_witness(&self, four: [usize; 4]) -> Option<[usize; 4]> {
        let mut deg = [0usize; 4];
        let mut edge_count = 0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if self.has_edge(four[i], four[j]) {
                    deg[i] += 1;
                    deg[j] += 1;
                    edge_count += 1;
                }
            }
        }
        if edge_count != 3 {
            return None;
        }
        let mut ones: Vec<usize> = (0..4).filter(|&i| deg[i] == 1).collect();
        if ones.len() != 2 {
            return None;
        }
        // Three edges with exactly two degree-1 vertices is a path.
        ones.sort_by_key(|&i| four[i]);
        let (e1, e2) = (four[ones[0]], four[ones[1]]);
        let m1 = four
            .iter()
            .copied()
            .find(|&x| x != e1 && self.has_edge(e1, x))
            .unwrap();
        let m2 = four
            .iter()
            .copied()
            .find(|&x| x != e2 && self.has_edge(e2, x))
            .unwrap();
        debug_assert!(self.has_edge(m1, m2));
        Some([e1, m1, m2, e2])
    }

    /// Whether the four vertices are distinct, in range, and induce a P4.
    pub fn is_induced_p4(&self, four: [usize; 4]) -> bool {
        let n = self.vertex_count();
        if four.iter().any(|&v| v >= n) {
            return false;
        }
        let mut sorted = four;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.p4_witness(four).is_some()
    }

    /// Every 4-vertex subset inducing a P4, each reported once with a
    /// path-order witness, sorted by the underlying vertex set.
    pub fn induced_p4s(&self) -> Vec<[usize; 4]> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        if let Some(w) = self.p4_witness([a, b, c, d]) {
                            out.push(w);
                        }
                    }
                }
            }
        }
        out
    }

    /// First induced P4 in subset order, if any.
    pub fn find_induced_p4(&self) -> Option<[usize; 4]> {
        let n = self.vertex_count();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        if let Some(w) = self.p4_witness([a, b, c, d]) {
                            return Some(w);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_cograph(&self) -> bool {
        self.find_induced_p4().is_none()
    }

    /// Whether `five` induces a P4 plus a vertex seeing none of it. Returns
    /// the witness as (path order, isolated vertex last).
    fn cogem_witness(&self, five: [usize; 5]) -> Option<[usize; 5]> {
        for iso in 0..5 {
            let x = five[iso];
            let mut rest = [0usize; 4];
            let mut r = 0;
            for (i, &v) in five.iter().enumerate() {
                if i != iso {
                    rest[r] = v;
                    r += 1;
                }
            }
            if rest.iter().any(|&v| self.has_edge(x, v)) {
                continue;
            }
            if let Some(path) = self.p4_witness(rest) {
                return Some([path[0], path[1], path[2], path[3], x]);
            }
        }
        None
    }

    /// First induced co-gem in subset order, if any.
    pub fn find_cogem(&self) -> Option<[usize; 5]> {
        let n = self.vertex_count();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        for e in (d + 1)..n {
                            if let Some(w) = self.cogem_witness([a, b, c, d, e]) {
                                return Some(w);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_cogem_free(&self) -> bool {
        self.find_cogem().is_none()
    }

    /// All edges vw with N[v] + N[w] = V, sorted.
    pub fn dominating_edges(&self) -> Vec<(usize, usize)> {
        let full = self.full_set();
        self.edges()
            .into_iter()
            .filter(|&(u, v)| {
                let mut cover = self.closed_neighborhood(u);
                cover.union_with(&self.adj[v]);
                cover.insert(v);
                cover == full
            })
            .collect()
    }

    /// The subgraph induced by `keep`, with vertices renumbered to
    /// `0..keep.len()` in ascending order of their old identifiers. The
    /// second component maps new identifiers back to old ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        self.check_set(keep).expect("set/graph mismatch");
        let old_ids: Vec<usize> = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in old_ids.iter().enumerate() {
            new_id[old] = new;
        }
        let m = old_ids.len();
        let mut adj: Vec<VertexSet> = (0..m).map(|_| VertexSet::empty(m)).collect();
        for (new, &old) in old_ids.iter().enumerate() {
            for w in self.adj[old].intersection(keep).iter() {
                adj[new].insert(new_id[w]);
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| old_ids.iter().map(|&v| l[v].clone()).collect());
        (Graph { adj, labels }, old_ids)
    }
}
