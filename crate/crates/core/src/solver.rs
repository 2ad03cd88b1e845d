//! Exact `p(G)` and `c(G)` by backtracking.
//!
//! Each part keeps a parity union-find over edge variables, `x_e = 0`
//! meaning `e` points from its smaller endpoint to its larger one. Two
//! edges `ua`, `ub` of the same part with `ab` known to be absent from that
//! part must both enter `u` or both leave it, which is a parity constraint.
//! A pair is known absent once it is a non-edge of the graph or an edge
//! already placed outside the part. Once every edge is placed every pair is
//! known, and a part whose constraints are consistent has no implication
//! class equal to its reverse, so it is a comparability graph. The final
//! orientation still comes from the recognizer and is verified.

use crate::budget::{Budget, Timeout};
use crate::comparability::{find_transitive_orientation, verify_partition, EdgePartition, Mode, Orientation};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::partition::partition_by_color_bits;

/// Parts are bitmasks, so `t` is capped.
pub const MAX_PARTS: usize = 16;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Sat(EdgePartition),
    Unsat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exact {
    Solved {
        value: usize,
        partition: EdgePartition,
    },
    /// `lower` is one more than the largest refuted `t`.
    Timeout {
        lower: usize,
        upper: Option<usize>,
        nodes: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreaterThanTwo {
    Proved,
    Found(EdgePartition),
}

#[derive(Debug, Clone, Copy)]
enum Undo {
    Mask(EdgeId),
    Adj { k: u8, u: u32 },
    Union { k: u8, child: u32, root: u32, bumped: bool },
    Opened(u8),
}

struct State<'a> {
    g: &'a Graph,
    t: usize,
    m: usize,
    eid: Vec<u32>,
    mask: Vec<u32>,
    part_adj: Vec<Vec<Vec<(Vertex, EdgeId)>>>,
    parent: Vec<u32>,
    parity: Vec<u8>,
    rank: Vec<u8>,
    opened: usize,
    trail: Vec<Undo>,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph, t: usize) -> Self {
        let (n, m) = (g.n(), g.m());
        let mut eid = vec![NONE; n * n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            eid[u * n + v] = e as u32;
            eid[v * n + u] = e as u32;
        }
        State {
            g,
            t,
            m,
            eid,
            mask: vec![0; m],
            part_adj: vec![vec![Vec::new(); n]; t],
            parent: (0..t * m).map(|i| (i % m) as u32).collect(),
            parity: vec![0; t * m],
            rank: vec![0; t * m],
            opened: 0,
            trail: Vec::new(),
        }
    }

    fn edge_between(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        let e = self.eid[a * self.g.n() + b];
        (e != NONE).then_some(e as usize)
    }

    fn known_absent(&self, k: usize, a: Vertex, b: Vertex) -> bool {
        match self.edge_between(a, b) {
            None => true,
            Some(f) => self.mask[f] != 0 && self.mask[f] & (1 << k) == 0,
        }
    }

    fn is_max(&self, u: Vertex, e: EdgeId) -> u8 {
        u8::from(self.g.edge(e).1 == u)
    }

    fn find(&self, k: usize, e: EdgeId) -> (usize, u8) {
        let base = k * self.m;
        let (mut x, mut p) = (e, 0u8);
        while self.parent[base + x] as usize != x {
            p ^= self.parity[base + x];
            x = self.parent[base + x] as usize;
        }
        (x, p)
    }

    /// Requires `x_e ⊕ x_f = want`; false on contradiction.
    fn constrain(&mut self, k: usize, e: EdgeId, f: EdgeId, want: u8) -> bool {
        let ((re, pe), (rf, pf)) = (self.find(k, e), self.find(k, f));
        if re == rf {
            return pe ^ pf == want;
        }
        let base = k * self.m;
        let (child, root) = if self.rank[base + re] < self.rank[base + rf] { (re, rf) } else { (rf, re) };
        self.parent[base + child] = root as u32;
        self.parity[base + child] = pe ^ pf ^ want;
        let bumped = self.rank[base + re] == self.rank[base + rf];
        if bumped {
            self.rank[base + root] += 1;
        }
        self.trail.push(Undo::Union { k: k as u8, child: child as u32, root: root as u32, bumped });
        true
    }

    /// Gives `e` the part set `mask`; false if some part becomes infeasible.
    /// Changes stay on the trail either way.
    fn assign(&mut self, e: EdgeId, mask: u32) -> bool {
        let (a, b) = self.g.edge(e);
        self.mask[e] = mask;
        self.trail.push(Undo::Mask(e));
        let top = (32 - mask.leading_zeros()) as usize;
        if top > self.opened {
            self.trail.push(Undo::Opened(self.opened as u8));
            self.opened = top;
        }
        for k in 0..self.t {
            if mask & (1 << k) != 0 {
                for (u, o) in [(a, b), (b, a)] {
                    for i in 0..self.part_adj[k][u].len() {
                        let (w, f) = self.part_adj[k][u][i];
                        if self.known_absent(k, o, w) {
                            let want = self.is_max(u, e) ^ self.is_max(u, f);
                            if !self.constrain(k, e, f, want) {
                                return false;
                            }
                        }
                    }
                }
                self.part_adj[k][a].push((b, e));
                self.part_adj[k][b].push((a, e));
                self.trail.push(Undo::Adj { k: k as u8, u: a as u32 });
                self.trail.push(Undo::Adj { k: k as u8, u: b as u32 });
            } else {
                // ab is now absent from part k: edges aw, bw of part k meet at w
                let (small, big) = if self.part_adj[k][a].len() <= self.part_adj[k][b].len() { (a, b) } else { (b, a) };
                for i in 0..self.part_adj[k][small].len() {
                    let (w, f1) = self.part_adj[k][small][i];
                    let Some(f2) = self.edge_between(big, w) else { continue };
                    if self.mask[f2] & (1 << k) == 0 {
                        continue;
                    }
                    let want = self.is_max(w, f1) ^ self.is_max(w, f2);
                    if !self.constrain(k, f1, f2, want) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Mask(e) => self.mask[e] = 0,
                Undo::Adj { k, u } => {
                    self.part_adj[k as usize][u as usize].pop();
                }
                Undo::Union { k, child, root, bumped } => {
                    let base = k as usize * self.m;
                    self.parent[base + child as usize] = child;
                    self.parity[base + child as usize] = 0;
                    if bumped {
                        self.rank[base + root as usize] -= 1;
                    }
                }
                Undo::Opened(prev) => self.opened = prev as usize,
            }
        }
    }

    /// Part sets `e` may take, with parts opened lowest-first.
    fn choices(&self, mode: Mode) -> Vec<u32> {
        let usable = (self.opened + 1).min(self.t);
        match mode {
            Mode::Partition => (0..usable).map(|k| 1 << k).collect(),
            Mode::Cover => {
                let old = (1u32 << self.opened) - 1;
                (1u32..1 << self.t)
                    .map(|i| i ^ (i >> 1))
                    .filter(|&s| {
                        let fresh = (s & !old) >> self.opened;
                        fresh & (fresh + 1) == 0
                    })
                    .collect()
            }
        }
    }

    fn certificate(&self, mode: Mode) -> Option<EdgePartition> {
        let mut parts = Vec::with_capacity(self.t);
        for k in 0..self.t {
            let part: Vec<EdgeId> = (0..self.m).filter(|&e| self.mask[e] & (1 << k) != 0).collect();
            parts.push(find_transitive_orientation(self.g, &part)?);
        }
        Some(EdgePartition::from_oriented(parts, mode))
    }
}

/// Fail-first: descending degree-sum of the endpoints, ties by edge ID.
fn edge_order(g: &Graph) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..g.m()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    order
}

struct Search<'a, 'b> {
    st: State<'a>,
    order: Vec<EdgeId>,
    mode: Mode,
    propagate: bool,
    budget: &'b mut Budget,
}

impl Search<'_, '_> {
    fn run(&mut self, pos: usize) -> Result<Option<EdgePartition>, Timeout> {
        let Some(e) = self.pick(pos) else {
            let cert = self.st.certificate(self.mode);
            debug_assert!(cert.is_some(), "consistent constraints must give comparability parts");
            return Ok(cert);
        };
        for s in self.st.choices(self.mode) {
            self.budget.tick()?;
            let mark = self.st.trail.len();
            if self.st.assign(e, s) && (!self.propagate || self.propagate()?) {
                if let Some(found) = self.run(pos + 1)? {
                    return Ok(Some(found));
                }
            }
            self.st.undo_to(mark);
        }
        Ok(None)
    }

    fn pick(&self, pos: usize) -> Option<EdgeId> {
        self.order[pos.min(self.order.len())..].iter().copied().find(|&e| self.st.mask[e] == 0)
    }

    /// Failed-literal probing: any unplaced edge with a single feasible
    /// choice gets it, until nothing changes. False on a dead end.
    fn propagate(&mut self) -> Result<bool, Timeout> {
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..self.order.len() {
                let e = self.order[i];
                if self.st.mask[e] != 0 {
                    continue;
                }
                let mut only = None;
                let mut count = 0;
                for s in self.st.choices(self.mode) {
                    self.budget.tick()?;
                    let mark = self.st.trail.len();
                    if self.st.assign(e, s) {
                        count += 1;
                        only = Some(s);
                    }
                    self.st.undo_to(mark);
                    if count > 1 {
                        break;
                    }
                }
                match (count, only) {
                    (0, _) => return Ok(false),
                    (1, Some(s)) => {
                        if !self.st.assign(e, s) {
                            return Ok(false);
                        }
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        Ok(true)
    }
}

/// Vertex lists and original edge IDs of the components that have edges.
fn components(g: &Graph) -> Vec<(Vec<Vertex>, Vec<EdgeId>)> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] || g.degree(s) == 0 {
            continue;
        }
        seen[s] = true;
        let mut verts = vec![s];
        let mut i = 0;
        while i < verts.len() {
            for w in g.neighbors(verts[i]) {
                if !seen[w] {
                    seen[w] = true;
                    verts.push(w);
                }
            }
            i += 1;
        }
        verts.sort_unstable();
        let mut edges: Vec<EdgeId> = verts.iter().flat_map(|&v| g.incident(v).iter().map(|&(_, e)| e)).collect();
        edges.sort_unstable();
        edges.dedup();
        out.push((verts, edges));
    }
    out
}

fn solve_connected(
    g: &Graph,
    t: usize,
    mode: Mode,
    propagate: bool,
    budget: &mut Budget,
) -> Result<Option<EdgePartition>, Timeout> {
    let mut search = Search { st: State::new(g, t), order: edge_order(g), mode, propagate, budget };
    if propagate && !search.propagate()? {
        return Ok(None);
    }
    search.run(0)
}

/// Solves each component separately and merges part `k` across components.
fn solve(g: &Graph, t: usize, mode: Mode, propagate: bool, budget: &mut Budget) -> Result<Decision, Timeout> {
    assert!((1..=MAX_PARTS).contains(&t), "part count must be in 1..={MAX_PARTS}");
    let mut merged = vec![Orientation::new(); t];
    for (verts, _) in components(g) {
        let sub = g.induced(&verts);
        let Some(ep) = solve_connected(&sub, t, mode, propagate, budget)? else {
            return Ok(Decision::Unsat);
        };
        for (k, slot) in merged.iter_mut().enumerate().take(ep.len()) {
            for (e, tail, head) in ep.certificate(k).expect("solver output is certified").iter() {
                let (a, b) = sub.edge(e);
                let orig = g.edge_id(verts[a], verts[b]).expect("induced edge");
                slot.insert(orig, verts[tail], verts[head]);
            }
        }
    }
    let ep = EdgePartition::from_oriented(merged, mode);
    let report = verify_partition(g, &ep).expect("solver certificates reference real edges");
    assert!(report.is_valid(), "solver produced an invalid certificate:\n{report}");
    Ok(Decision::Sat(ep))
}

/// Is there a partition (or cover) of the edges into `t` comparability subgraphs?
pub fn decide_partition(g: &Graph, t: usize, mode: Mode, budget: &mut Budget) -> Result<Decision, Timeout> {
    solve(g, t, mode, false, budget)
}

fn exact(g: &Graph, mode: Mode, budget: &mut Budget) -> Exact {
    if g.m() == 0 {
        return Exact::Solved { value: 0, partition: EdgePartition::new(Vec::new(), mode) };
    }
    let upper = partition_by_color_bits(g, budget).ok();
    let limit = upper.as_ref().map_or(MAX_PARTS, |ep| ep.len());
    for t in 1..limit {
        match solve(g, t, mode, false, budget) {
            Ok(Decision::Sat(partition)) => return Exact::Solved { value: t, partition },
            Ok(Decision::Unsat) => {}
            Err(Timeout { nodes }) => return Exact::Timeout { lower: t, upper: upper.map(|ep| ep.len()), nodes },
        }
    }
    match upper {
        Some(ep) => {
            let certificates = (0..ep.len()).map(|k| ep.certificate(k).cloned()).collect();
            let partition = EdgePartition::with_certificates(ep.parts().to_vec(), mode, certificates);
            Exact::Solved { value: limit, partition }
        }
        None => Exact::Timeout { lower: limit, upper: None, nodes: budget.nodes() },
    }
}

/// `p(G)`: fewest edge-disjoint comparability subgraphs covering the edges.
pub fn exact_p(g: &Graph, budget: &mut Budget) -> Exact {
    exact(g, Mode::Partition, budget)
}

/// `c(G)`: fewest comparability subgraphs covering the edges.
pub fn exact_c(g: &Graph, budget: &mut Budget) -> Exact {
    exact(g, Mode::Cover, budget)
}

/// Two-part partition search with failed-literal probing after every choice.
pub fn search_p_greater_than_2(g: &Graph, budget: &mut Budget) -> Result<GreaterThanTwo, Timeout> {
    Ok(match solve(g, 2, Mode::Partition, true, budget)? {
        Decision::Sat(ep) => GreaterThanTwo::Found(ep),
        Decision::Unsat => GreaterThanTwo::Proved,
    })
}
