//! Partitions read off the binary expansion of colour indices.

use crate::budget::Budget;
use crate::cliques::{clique_number, exact_coloring};
use crate::comparability::{EdgePartition, Mode, Orientation};
use crate::error::{Error, Result};
use crate::graph::{complement, EdgeId, Graph};

/// `⌈log₂ k⌉`, with `ceil_log2(0) = ceil_log2(1) = 0`.
pub fn ceil_log2(k: usize) -> usize {
    if k <= 1 {
        0
    } else {
        (usize::BITS - (k - 1).leading_zeros()) as usize
    }
}

/// Splits the edges `{u, v}` with `class[u] != class[v]` by the lowest bit
/// where the two class indices differ; part `b` is oriented from the side
/// with bit `b` clear to the side with it set.
pub fn lowest_bit_parts(g: &Graph, edges: &[EdgeId], class: &[usize], width: usize) -> Vec<Orientation> {
    let mut parts = vec![Orientation::new(); width];
    for &e in edges {
        let (u, v) = g.edge(e);
        let diff = class[u] ^ class[v];
        debug_assert!(diff != 0, "edge inside a class");
        let bit = diff.trailing_zeros() as usize;
        if class[u] >> bit & 1 == 0 {
            parts[bit].insert(e, u, v);
        } else {
            parts[bit].insert(e, v, u);
        }
    }
    parts
}

fn from_coloring(g: &Graph, colors: &[usize]) -> EdgePartition {
    let chi = colors.iter().max().map_or(0, |&c| c + 1);
    let all: Vec<EdgeId> = (0..g.m()).collect();
    EdgePartition::from_oriented(lowest_bit_parts(g, &all, colors, ceil_log2(chi)), Mode::Partition)
}

/// At most `⌈log₂ χ(g)⌉` bipartite parts from an optimal colouring.
pub fn partition_by_color_bits(g: &Graph, budget: &mut Budget) -> Result<EdgePartition> {
    Ok(from_coloring(g, &exact_coloring(g, budget)?))
}

/// At most `⌈log₂ ω(g)⌉` bipartite parts for a perfect `g`. Fails with
/// [`Error::NotPerfect`] when `χ(g) ≠ ω(g)`.
pub fn partition_bipartite_log_omega(g: &Graph, budget: &mut Budget) -> Result<EdgePartition> {
    let omega = clique_number(g, budget)?;
    let colors = exact_coloring(g, budget)?;
    let chi = colors.iter().max().map_or(0, |&c| c + 1);
    if chi != omega {
        return Err(Error::NotPerfect { omega, chi });
    }
    Ok(from_coloring(g, &colors))
}

/// At most `1 + ⌈log₂ α(g)⌉` comparability parts for a perfect `g`: an
/// optimal clique cover (colouring of the complement) gives the clique part,
/// and the edges between cliques are split by clique-index bits.
pub fn partition_alpha_comparability(g: &Graph, budget: &mut Budget) -> Result<EdgePartition> {
    let co = complement(g);
    let alpha = clique_number(&co, budget)?;
    let cover = exact_coloring(&co, budget)?;
    let theta = cover.iter().max().map_or(0, |&c| c + 1);
    if theta != alpha {
        return Err(Error::NotPerfect { omega: alpha, chi: theta });
    }
    let (inside, between): (Vec<EdgeId>, Vec<EdgeId>) =
        (0..g.m()).partition(|&e| cover[g.edge(e).0] == cover[g.edge(e).1]);
    let mut parts = vec![Orientation::by_rank(g, &inside, |v| (cover[v], v))];
    parts.extend(lowest_bit_parts(g, &between, &cover, ceil_log2(theta)));
    Ok(EdgePartition::from_oriented(parts, Mode::Partition))
}
