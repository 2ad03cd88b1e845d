//! Graph families and seeded random instances.
//!
//! All random generators draw from [`XorShift64Star`] in a documented order,
//! so the same seed yields the same instance in any implementation.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{attach_pendants, cartesian_product, complement, Bipartition, Graph, Side, Vertex};
use crate::rng::XorShift64Star;

pub type Rational = Ratio<i64>;

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        Interval { lo, hi }
    }

    pub fn int(lo: i64, hi: i64) -> Self {
        Interval { lo: Rational::from_integer(lo), hi: Rational::from_integer(hi) }
    }

    pub fn contains(&self, x: Rational) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Closed intersection: touching endpoints count.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo.max(other.lo) <= self.hi.min(other.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalSystem {
    intervals: Vec<Interval>,
    unit: bool,
}

impl IntervalSystem {
    pub fn new(intervals: Vec<Interval>, unit: bool) -> Result<Self> {
        for (i, iv) in intervals.iter().enumerate() {
            if iv.lo > iv.hi {
                return Err(Error::InvalidIntervals(format!("interval {i} has lo > hi")));
            }
            if unit && iv.hi - iv.lo != Rational::from_integer(1) {
                return Err(Error::InvalidIntervals(format!("interval {i} does not have length 1")));
            }
        }
        Ok(IntervalSystem { intervals, unit })
    }

    /// Sets the unit flag exactly when every interval has length one.
    pub fn detect_unit(intervals: Vec<Interval>) -> Result<Self> {
        let unit = !intervals.is_empty() && intervals.iter().all(|iv| iv.hi - iv.lo == Rational::from_integer(1));
        Self::new(intervals, unit)
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Intersection graph of closed intervals, edges in lexicographic order.
pub fn gen_from_intervals(s: &IntervalSystem) -> Graph {
    let ivs = s.intervals();
    let mut edges = Vec::new();
    for u in 0..ivs.len() {
        for v in u + 1..ivs.len() {
            if ivs[u].intersects(&ivs[v]) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_normalized(ivs.len(), edges)
}

/// Intervals `[i, j]`, `1 ≤ i < j ≤ n`, in lexicographic order.
pub fn gn_intervals(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Position of `[i, j]` in [`gn_intervals`] order.
pub fn gn_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // intervals starting before i: sum_{s<i} (n - s)
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

/// The interval graph on all `[i, j]`, `1 ≤ i < j ≤ n`; vertices labelled `ivl_i_j`.
pub fn gen_interval_graph_gn(n: usize) -> (Graph, IntervalSystem) {
    assert!(n >= 2, "G_n needs n >= 2");
    let ivs = gn_intervals(n);
    let mut edges = Vec::new();
    for (u, &(i, j)) in ivs.iter().enumerate() {
        for (dv, &(x, y)) in ivs[u + 1..].iter().enumerate() {
            if i.max(x) <= j.min(y) {
                edges.push((u, u + 1 + dv));
            }
        }
    }
    let labels = ivs.iter().map(|(i, j)| format!("ivl_{i}_{j}")).collect();
    let g = Graph::from_normalized(ivs.len(), edges).with_labels(labels).expect("distinct labels");
    let system = IntervalSystem::new(ivs.iter().map(|&(i, j)| Interval::int(i as i64, j as i64)).collect(), false)
        .expect("valid intervals");
    (g, system)
}

/// Triples `1 ≤ i < j < k ≤ n` in lexicographic order.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Position of `(i, j, k)` in [`triples`] order.
pub fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    let c3 = |m: usize| if m >= 3 { m * (m - 1) * (m - 2) / 6 } else { 0 };
    let c2 = |m: usize| if m >= 2 { m * (m - 1) / 2 } else { 0 };
    // triples with first element < i, then with first = i and second < j
    (c3(n) - c3(n - i + 1)) + (c2(n - i) - c2(n - j + 1)) + (k - j - 1)
}

/// The double shift graph: triples `(i, j, k)` and `(j, k, l)` are adjacent.
pub fn gen_double_shift(n: usize) -> Graph {
    assert!(n > 3, "double shift graph needs n > 3");
    let ts = triples(n);
    let mut edges = Vec::new();
    for (u, &(i, j, k)) in ts.iter().enumerate() {
        let _ = i;
        for l in k + 1..=n {
            edges.push((u, triple_index(n, j, k, l)));
        }
    }
    edges.sort_unstable();
    let labels = ts.iter().map(|(i, j, k)| format!("tri_{i}_{j}_{k}")).collect();
    Graph::from_normalized(ts.len(), edges).with_labels(labels).expect("distinct labels")
}

/// `K_rows □ K_cols` with a pendant at every vertex.
///
/// Vertex `v_i_j` (1-based, `i ≤ rows`, `j ≤ cols`) has index
/// `(i-1)*cols + (j-1)`; its pendant `w_i_j` sits `rows*cols` later.
pub fn gen_h(rows: usize, cols: usize) -> Graph {
    assert!(rows >= 1 && cols >= 1, "H needs rows, cols >= 1");
    let k = cartesian_product(&Graph::complete(rows), &Graph::complete(cols));
    let labels = (1..=rows).flat_map(|i| (1..=cols).map(move |j| format!("v_{i}_{j}"))).collect();
    attach_pendants(&k.with_labels(labels).expect("distinct labels"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GspSide {
    Direct,
    Complemented,
}

impl std::str::FromStr for GspSide {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "direct" => Ok(GspSide::Direct),
            "complemented" => Ok(GspSide::Complemented),
            other => Err(format!("unknown GSP side {other:?}")),
        }
    }
}

/// A generalized split decomposition `V = V1 ∪ V2`, `V2` split into cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GspStructure {
    pub side: GspSide,
    pub v1: Vec<Vertex>,
    pub cliques: Vec<Vec<Vertex>>,
}

impl GspStructure {
    /// Checks the structure against `g`. In the complemented case the
    /// conditions are checked in the complement of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for &v in self.v1.iter().chain(self.cliques.iter().flatten()) {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidStructure(format!("vertex {v} is out of range or listed twice")));
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidStructure(format!("vertex {v} is not covered")));
        }
        if self.cliques.iter().any(Vec::is_empty) {
            return Err(Error::InvalidStructure("empty clique in V2".into()));
        }
        let adjacent = |u: Vertex, v: Vertex| match self.side {
            GspSide::Direct => g.has_edge(u, v),
            GspSide::Complemented => !g.has_edge(u, v),
        };
        let all_pairs = |set: &[Vertex], what: &str| -> Result<()> {
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    if !adjacent(u, v) {
                        return Err(Error::InvalidStructure(format!("{what} is not complete: missing {u}-{v}")));
                    }
                }
            }
            Ok(())
        };
        all_pairs(&self.v1, "V1")?;
        for (c, clique) in self.cliques.iter().enumerate() {
            all_pairs(clique, &format!("clique {c}"))?;
        }
        for (c1, a) in self.cliques.iter().enumerate() {
            for b in &self.cliques[c1 + 1..] {
                for &u in a {
                    for &v in b {
                        if adjacent(u, v) {
                            return Err(Error::InvalidStructure(format!("edge {u}-{v} joins distinct cliques")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Clique index of each vertex in `V2`, `None` for `V1`.
    pub fn clique_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (c, clique) in self.cliques.iter().enumerate() {
            for &v in clique {
                out[v] = Some(c);
            }
        }
        out
    }
}

/// Random GSP graph. Draw order: shuffle of `0..n`; `|V1| = below(n+1)`
/// taken from the front; each remaining vertex (in shuffled order) opens a
/// new clique if none exists or `coin(0.5)`, else joins clique
/// `below(#cliques)`; then for every `v1` in `V1` and `v2` in `V2` (both
/// ascending) the pair is an edge iff `coin(0.5)`. The complemented side
/// returns the complement of that graph with the same structure record.
pub fn gen_gsp(n: usize, seed: u64, side: GspSide) -> (Graph, GspStructure) {
    assert!(n >= 1, "GSP needs n >= 1");
    let mut rng = XorShift64Star::new(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    rng.shuffle(&mut order);
    let v1_size = rng.below_usize(n + 1);
    let mut v1 = order[..v1_size].to_vec();
    let mut cliques: Vec<Vec<Vertex>> = Vec::new();
    for &v in &order[v1_size..] {
        if cliques.is_empty() || rng.coin(0.5) {
            cliques.push(vec![v]);
        } else {
            let c = rng.below_usize(cliques.len());
            cliques[c].push(v);
        }
    }
    v1.sort_unstable();
    for c in &mut cliques {
        c.sort_unstable();
    }
    let mut v2: Vec<Vertex> = cliques.iter().flatten().copied().collect();
    v2.sort_unstable();

    let mut edges = Vec::new();
    let complete = |set: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>| {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                edges.push((u.min(v), u.max(v)));
            }
        }
    };
    complete(&v1, &mut edges);
    for c in &cliques {
        complete(c, &mut edges);
    }
    for &a in &v1 {
        for &b in &v2 {
            if rng.coin(0.5) {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    let direct = Graph::from_normalized(n, edges);
    let g = match side {
        GspSide::Direct => direct,
        GspSide::Complemented => complement(&direct),
    };
    (g, GspStructure { side, v1, cliques })
}

/// A graph with a declared bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub graph: Graph,
    pub bipartition: Bipartition,
}

/// Vertices `0..a` form side A (labels `a_i`), `a..a+b` side B (labels `b_j`);
/// pairs are visited A-major and kept iff `coin(p)`.
pub fn gen_random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> BipartiteGraph {
    let mut rng = XorShift64Star::new(seed);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.coin(p) {
                edges.push((u, v));
            }
        }
    }
    let labels = (0..a).map(|i| format!("a_{i}")).chain((0..b).map(|j| format!("b_{j}"))).collect();
    let graph = Graph::from_normalized(a + b, edges).with_labels(labels).expect("distinct labels");
    let mut sides = vec![Side::A; a];
    sides.extend(std::iter::repeat(Side::B).take(b));
    BipartiteGraph { graph, bipartition: Bipartition { sides } }
}

/// Unit intervals `[x, x+1]` with `x = below(1000*span + 1) / 1000`.
pub fn gen_random_unit_intervals(count: usize, span: u64, seed: u64) -> IntervalSystem {
    let mut rng = XorShift64Star::new(seed);
    let one = Rational::from_integer(1);
    let ivs = (0..count)
        .map(|_| {
            let lo = Rational::new(rng.below(1000 * span + 1) as i64, 1000);
            Interval::new(lo, lo + one)
        })
        .collect();
    IntervalSystem::new(ivs, true).expect("unit by construction")
}

/// Integer intervals: `lo = below(span+1)`, `hi = lo + below(span - lo + 1)`.
pub fn gen_random_intervals(count: usize, span: u64, seed: u64) -> IntervalSystem {
    let mut rng = XorShift64Star::new(seed);
    let ivs = (0..count)
        .map(|_| {
            let lo = rng.below(span + 1);
            let hi = lo + rng.below(span - lo + 1);
            Interval::int(lo as i64, hi as i64)
        })
        .collect();
    IntervalSystem::new(ivs, false).expect("lo <= hi by construction")
}

/// A tree, a root, and a list of subtrees (each sorted ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeFamily {
    pub tree: Graph,
    pub root: Vertex,
    pub subtrees: Vec<Vec<Vertex>>,
}

impl SubtreeFamily {
    pub fn new(tree: Graph, root: Vertex, mut subtrees: Vec<Vec<Vertex>>) -> Result<Self> {
        for s in &mut subtrees {
            s.sort_unstable();
            s.dedup();
        }
        let f = SubtreeFamily { tree, root, subtrees };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let t = &self.tree;
        if t.n() == 0 || t.m() != t.n() - 1 || !t.is_connected() {
            return Err(Error::InvalidSubtrees("host graph is not a tree".into()));
        }
        if self.root >= t.n() {
            return Err(Error::InvalidSubtrees(format!("root {} out of range", self.root)));
        }
        for (i, s) in self.subtrees.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidSubtrees(format!("subtree {i} is empty")));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= t.n()) {
                return Err(Error::InvalidSubtrees(format!("subtree {i} has vertex {v} out of range")));
            }
            // a vertex subset of a tree is connected iff it spans |S|-1 edges
            let inside = t.induced(s);
            if inside.m() + 1 != s.len() {
                return Err(Error::InvalidSubtrees(format!("subtree {i} is not connected")));
            }
        }
        Ok(())
    }
}

/// Random recursive tree (vertex `v ≥ 1` attaches to `below(v)`), root
/// `below(tree_size)`, then `family_size` subtrees each grown from start
/// `below(tree_size)` to target size `1 + below(tree_size)` by repeatedly
/// adding a uniformly chosen frontier vertex (frontier kept in discovery order).
pub fn gen_random_subtree_family(tree_size: usize, family_size: usize, seed: u64) -> SubtreeFamily {
    assert!(tree_size >= 1, "tree needs a vertex");
    let mut rng = XorShift64Star::new(seed);
    let edges: Vec<_> = (1..tree_size).map(|v| (rng.below_usize(v), v)).collect();
    let tree = crate::graph::make_graph(tree_size, &edges).expect("valid tree");
    let root = rng.below_usize(tree_size);
    let mut subtrees = Vec::with_capacity(family_size);
    for _ in 0..family_size {
        let start = rng.below_usize(tree_size);
        let target = 1 + rng.below_usize(tree_size);
        let mut inside = vec![false; tree_size];
        inside[start] = true;
        let mut members = vec![start];
        let mut frontier: Vec<Vertex> = tree.neighbors(start).collect();
        while members.len() < target && !frontier.is_empty() {
            let v = frontier.remove(rng.below_usize(frontier.len()));
            inside[v] = true;
            members.push(v);
            for w in tree.neighbors(v) {
                if !inside[w] && !frontier.contains(&w) {
                    frontier.push(w);
                }
            }
        }
        members.sort_unstable();
        subtrees.push(members);
    }
    SubtreeFamily::new(tree, root, subtrees).expect("connected by construction")
}
