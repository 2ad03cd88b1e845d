//! Simple undirected graphs with positional edge IDs, plus the standard
//! constructions used throughout the crate.

use std::collections::HashSet;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// A simple undirected graph.
///
/// Edges are stored as normalized pairs `(u, v)` with `u < v`; the ID of an
/// edge is its position in [`Graph::edges`]. Every partition in this crate
/// refers to edges by ID only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // sorted by neighbor
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    labels: Option<Vec<String>>,
}

/// Which side of a bipartition a vertex lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn tag(self) -> char {
        match self {
            Side::A => 'a',
            Side::B => 'b',
        }
    }
}

/// Side assignment for every vertex of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub sides: Vec<Side>,
}

impl Bipartition {
    pub fn from_sets(n: usize, a: &[Vertex]) -> Self {
        let mut sides = vec![Side::B; n];
        for &v in a {
            sides[v] = Side::A;
        }
        Bipartition { sides }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.sides.len() != g.n() {
            return Err(Error::InvalidStructure(format!(
                "bipartition has {} sides for {} vertices",
                self.sides.len(),
                g.n()
            )));
        }
        for (edge, &(u, v)) in g.edges().iter().enumerate() {
            if self.sides[u] == self.sides[v] {
                return Err(Error::InvalidBipartition { edge, u, v });
            }
        }
        Ok(())
    }
}

/// Builds a graph from arbitrary pairs: normalizes to `u < v`, drops
/// duplicates, and assigns IDs in order of first occurrence.
pub fn make_graph(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
    let mut seen = HashSet::with_capacity(pairs.len());
    let mut edges = Vec::with_capacity(pairs.len());
    for (index, &(u, v)) in pairs.iter().enumerate() {
        if u >= n || v >= n {
            return Err(Error::EndpointOutOfRange { index, u, v, n });
        }
        if u == v {
            return Err(Error::Loop { index, v: u });
        }
        let e = (u.min(v), u.max(v));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    Ok(Graph::from_normalized(n, edges))
}

impl Graph {
    /// Trusted constructor: `edges` must already be normalized, in range and unique.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            debug_assert!(u < v && v < n);
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, labels: None }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_normalized(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_normalized(n, edges)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_normalized(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// `C_n` with edges `(i, i+1)` followed by the closing edge `(0, n-1)`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_normalized(n, edges)
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_normalized(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_normalized(a + b, edges)
    }

    pub fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        make_graph(10, &pairs).expect("static construction")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::LabelCount { got: labels.len(), n: self.n });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Neighbors with the connecting edge ID, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.edge_id(u, v).is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Subgraph induced by `vertices` (renumbered in the given order).
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        edges.sort_unstable();
        Graph::from_normalized(vertices.len(), edges)
    }

    /// Spanning subgraph keeping only the listed edges, in the listed order.
    pub fn spanning(&self, edge_ids: &[EdgeId]) -> Graph {
        Graph::from_normalized(self.n, edge_ids.iter().map(|&e| self.edges[e]).collect())
    }
}

/// Same vertex set; the edges are exactly the non-edges of `g`, in lexicographic order.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2 - g.m());
    for u in 0..n {
        let mut nbrs = g.neighbors(u).filter(|&w| w > u).peekable();
        for v in u + 1..n {
            if nbrs.peek() == Some(&v) {
                nbrs.next();
            } else {
                edges.push((u, v));
            }
        }
    }
    let mut c = Graph::from_normalized(n, edges);
    c.labels = g.labels.clone();
    c
}

/// Line graph of `h`: vertex `i` stands for edge `i` of `h`, and line edges
/// are listed in lexicographic order. With a bipartition, each line edge is
/// tagged with the side of the shared endpoint.
pub fn line_graph(h: &Graph, bipartition: Option<&Bipartition>) -> Result<(Graph, Option<Vec<Side>>)> {
    if let Some(bp) = bipartition {
        bp.validate(h)?;
    }
    let mut tagged: Vec<((Vertex, Vertex), Vertex)> = Vec::new();
    for v in 0..h.n() {
        let inc = h.incident(v);
        for (i, &(_, e1)) in inc.iter().enumerate() {
            for &(_, e2) in &inc[i + 1..] {
                tagged.push(((e1.min(e2), e1.max(e2)), v));
            }
        }
    }
    tagged.sort_unstable();
    let tags = bipartition.map(|bp| tagged.iter().map(|&(_, v)| bp.sides[v]).collect());
    let g = Graph::from_normalized(h.m(), tagged.into_iter().map(|(e, _)| e).collect());
    Ok((g, tags))
}

/// Cartesian product; vertex `(x, y)` gets index `x * h.n() + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.m() + nh * g.m());
    for x in 0..g.n() {
        for &(y1, y2) in h.edges() {
            edges.push((x * nh + y1, x * nh + y2));
        }
    }
    for &(x1, x2) in g.edges() {
        for y in 0..nh {
            edges.push((x1 * nh + y, x2 * nh + y));
        }
    }
    edges.sort_unstable();
    Graph::from_normalized(g.n() * nh, edges)
}

/// Adds a pendant vertex `w_v = n + v` for every vertex `v`. The original
/// edges keep their IDs; pendant edge of `v` gets ID `m + v`.
///
/// Labels: an original `v_X` yields pendant `w_X`; any other label `L`
/// yields `w_L`. Unlabeled graphs get `v_i` / `w_i`.
pub fn attach_pendants(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, n + v)));
    let originals: Vec<String> = match g.labels() {
        Some(l) => l.to_vec(),
        None => (0..n).map(|v| format!("v_{v}")).collect(),
    };
    let mut labels = originals.clone();
    labels.extend(originals.iter().map(|l| match l.strip_prefix("v_") {
        Some(rest) => format!("w_{rest}"),
        None => format!("w_{l}"),
    }));
    let out = Graph::from_normalized(2 * n, edges);
    match out.clone().with_labels(labels) {
        Ok(labeled) => labeled,
        // Derived pendant names collided with existing labels; keep the graph unlabeled.
        Err(_) => out,
    }
}
