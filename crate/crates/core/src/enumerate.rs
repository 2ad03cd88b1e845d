//! Connected graphs on few vertices or few edges, one per isomorphism class.
//!
//! Graphs are grown one edge at a time from `K1`, either joining two
//! existing vertices or hanging a new vertex. Every connected graph arises
//! this way, since deleting a cycle edge or a leaf keeps it connected.
//! Duplicates are removed with a canonical code: vertices are ordered by a
//! degree-based invariant and the smallest edge bitmask over all orderings
//! within invariant cells is kept.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Edge bitmasks are `u64`, so `C(n, 2) ≤ 64`.
pub const MAX_VERTICES: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Code {
    n: usize,
    m: u32,
    bits: u64,
}

fn bit(n: usize, u: usize, v: usize) -> u64 {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    // row-major over pairs u < v
    1 << (u * (2 * n - u - 1) / 2 + (v - u - 1))
}

fn adjacency(n: usize, bits: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for u in 0..n {
        for v in u + 1..n {
            if bits & bit(n, u, v) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    adj
}

fn canonical(n: usize, bits: u64) -> Code {
    let adj = adjacency(n, bits);
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let invariant = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    let inv: Vec<_> = (0..n).map(invariant).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut cells = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || inv[order[i]] != inv[order[start]] {
            cells.push(start..i);
            start = i;
        }
    }
    let mut best = u64::MAX;
    permute_cells(&mut order, &cells, 0, &mut |perm| {
        // perm[i] is the old vertex placed at position i
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let mut b = 0;
        for u in 0..n {
            for v in u + 1..n {
                if adj[u] >> v & 1 == 1 {
                    b |= bit(n, pos[u], pos[v]);
                }
            }
        }
        best = best.min(b);
    });
    Code { n, m: bits.count_ones(), bits: best }
}

fn permute_cells(order: &mut [usize], cells: &[std::ops::Range<usize>], c: usize, visit: &mut impl FnMut(&[usize])) {
    let Some(cell) = cells.get(c) else {
        visit(order);
        return;
    };
    heap_permute(order, cell.start, cell.end - cell.start, &mut |o| permute_cells(o, cells, c + 1, visit));
}

/// Heap's algorithm on `order[start..start + k]`.
fn heap_permute(order: &mut [usize], start: usize, k: usize, visit: &mut impl FnMut(&mut [usize])) {
    if k <= 1 {
        visit(order);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(order, start, k - 1, visit);
        let j = if k % 2 == 0 { i } else { 0 };
        order.swap(start + j, start + k - 1);
    }
    heap_permute(order, start, k - 1, visit);
}

fn to_graph(c: Code) -> Graph {
    let mut edges = Vec::with_capacity(c.m as usize);
    for u in 0..c.n {
        for v in u + 1..c.n {
            if c.bits & bit(c.n, u, v) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_normalized(c.n, edges)
}

fn grow(max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    assert!(max_vertices <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
    let mut all = BTreeSet::new();
    let mut layer = BTreeSet::from([Code { n: 1, m: 0, bits: 0 }]);
    while !layer.is_empty() {
        all.extend(layer.iter().copied());
        let mut next = BTreeSet::new();
        for c in &layer {
            if c.m as usize >= max_edges {
                continue;
            }
            for u in 0..c.n {
                for v in u + 1..c.n {
                    if c.bits & bit(c.n, u, v) == 0 {
                        next.insert(canonical(c.n, c.bits | bit(c.n, u, v)));
                    }
                }
            }
            if c.n < max_vertices {
                let n = c.n + 1;
                let widened = adjacency(c.n, c.bits);
                let mut bits = 0;
                for (u, &row) in widened.iter().enumerate() {
                    for v in u + 1..c.n {
                        if row >> v & 1 == 1 {
                            bits |= bit(n, u, v);
                        }
                    }
                }
                for u in 0..c.n {
                    next.insert(canonical(n, bits | bit(n, u, c.n)));
                }
            }
        }
        layer = next;
    }
    all.into_iter().map(to_graph).collect()
}

/// Connected graphs with at most `max_vertices` vertices, `K1` included,
/// ordered by vertex count, then edge count, then canonical code.
pub fn connected_graphs(max_vertices: usize) -> Vec<Graph> {
    grow(max_vertices, usize::MAX)
}

/// Connected graphs with between 1 and `max_edges` edges.
pub fn connected_graphs_by_edges(max_edges: usize) -> Vec<Graph> {
    grow((max_edges + 1).min(MAX_VERTICES), max_edges).into_iter().filter(|g| g.m() > 0).collect()
}
