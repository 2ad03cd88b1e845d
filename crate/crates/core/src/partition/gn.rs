//! Recursive halving partition of `G_n` into at most `f(n) ≤ log₂ n + 1` parts.
//!
//! The integer range `lo..=hi` is split into a lower half of `⌊size/2⌋`
//! points and an upper half. Straddling intervals (those containing both
//! halves' boundary points) form a clique handled at the current level
//! together with their edges to lower-half intervals. Their edges to
//! upper-half intervals are pushed into the upper recursion, where every
//! straddler acts like an interval anchored at the left end of that range.
//! Putting those edges in the current level as well would break
//! transitivity from eight points on. Ranges of at most four points stop the
//! recursion and put all of their remaining edges in the current level.
//! Parts are indexed by recursion depth, so sibling recursions share parts.

use crate::comparability::{EdgePartition, Mode};
use crate::error::{Error, Result};
use crate::generators::{gen_interval_graph_gn, gn_index};
use crate::graph::{EdgeId, Graph};

/// `f(n) = 1` for `n ≤ 4`, else `1 + f(⌈n/2⌉)`.
pub fn gn_part_bound(n: usize) -> usize {
    if n <= 4 {
        1
    } else {
        1 + gn_part_bound(n.div_ceil(2))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    /// inside the lower half
    Lower,
    /// inside the node, containing both `mid` and `mid + 1`
    Straddle,
    /// inside the upper half
    Upper,
    /// starts left of the node and ends in the lower half
    ForeignShort,
    /// starts left of the node and ends in the upper half
    ForeignLong,
}

fn role(lo: usize, mid: usize, (i, j): (usize, usize)) -> Role {
    match (i < lo, j <= mid) {
        (true, true) => Role::ForeignShort,
        (true, false) => Role::ForeignLong,
        (false, true) => Role::Lower,
        (false, false) if i <= mid => Role::Straddle,
        (false, false) => Role::Upper,
    }
}

/// Part (recursion depth) of the edge between intersecting intervals `a`
/// and `b` of `G_n`.
///
/// A node owns the intervals inside its range and also sees "foreign"
/// intervals that start left of it and end inside it; towards the node's
/// own intervals these behave like intervals anchored at its left end.
/// At a node the current level takes the straddler clique, lower-half and
/// short-foreign intervals into the straddlers, and long-foreign intervals
/// into straddlers and lower-half intervals. Straddlers and long-foreign
/// intervals become foreign in the upper child, short-foreign ones in the
/// lower child.
pub fn gn_part_of(n: usize, a: (usize, usize), b: (usize, usize)) -> usize {
    use Role::*;
    debug_assert!(a.0.max(b.0) <= a.1.min(b.1), "intervals must intersect");
    let (mut lo, mut hi) = (1, n);
    let mut depth = 0;
    loop {
        let size = hi - lo + 1;
        if size <= 4 {
            return depth;
        }
        let mid = lo + size / 2 - 1;
        let (ra, rb) = (role(lo, mid, a), role(lo, mid, b));
        let (x, y) = if (ra as u8) <= (rb as u8) { (ra, rb) } else { (rb, ra) };
        match (x, y) {
            (Lower, Lower) | (Lower, ForeignShort) => hi = mid,
            (Upper, Upper) | (Straddle, Upper) | (Upper, ForeignLong) => lo = mid + 1,
            (Straddle, Straddle)
            | (Lower, Straddle)
            | (Straddle, ForeignShort)
            | (Lower, ForeignLong)
            | (Straddle, ForeignLong) => return depth,
            other => unreachable!("roles {other:?} cannot share an edge below the top"),
        }
        depth += 1;
    }
}

/// Number of non-empty parts of the recursive partition, without building `G_n`.
pub fn gn_part_count(n: usize) -> usize {
    fn deepest(size: usize, depth: usize) -> Option<usize> {
        if size <= 4 {
            // a range of s points holds an edge iff s >= 3 ([lo,lo+1] touches [lo+1,lo+2])
            return (size >= 3).then_some(depth);
        }
        let a = size / 2;
        let below = deepest(a, depth + 1).max(deepest(size - a, depth + 1));
        Some(below.unwrap_or(depth))
    }
    deepest(n, 0).map_or(0, |d| d + 1)
}

/// Edges per recursion level, found by classifying every intersecting pair
/// of intervals without building `G_n`.
pub fn gn_part_sizes(n: usize) -> Vec<usize> {
    let mut sizes = vec![0; gn_part_bound(n)];
    for i in 1..=n {
        for j in i + 1..=n {
            for k in i..=j {
                let first = if k == i { j + 1 } else { k + 1 };
                for l in first..=n {
                    sizes[gn_part_of(n, (i, j), (k, l))] += 1;
                }
            }
        }
    }
    sizes
}

/// Edge IDs of `G_n` grouped by recursion level (uncertified, possibly with empty levels).
pub fn gn_levels(g: &Graph, n: usize) -> Vec<Vec<EdgeId>> {
    let ivs = crate::generators::gn_intervals(n);
    let mut parts: Vec<Vec<EdgeId>> = vec![Vec::new(); gn_part_bound(n)];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        parts[gn_part_of(n, ivs[u], ivs[v])].push(e);
    }
    debug_assert!(ivs.iter().enumerate().all(|(i, &(a, b))| gn_index(n, a, b) == i));
    parts
}

/// The recursive partition over [`gen_interval_graph_gn`]`(n)`, each part
/// certified by the recognizer. A part that is not a comparability graph
/// is reported as an error rather than emitted.
pub fn partition_gn_recursive(n: usize) -> Result<(Graph, EdgePartition)> {
    let (g, _) = gen_interval_graph_gn(n);
    let mut ep = EdgePartition::new(gn_levels(&g, n), Mode::Partition);
    ep.certify(&g).map_err(|part| Error::NotComparability { part })?;
    Ok((g, ep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comparability::verify_partition;
    use crate::generators::gn_intervals;

    #[test]
    fn bound_values() {
        let f: Vec<usize> = [4, 8, 16, 32, 64, 128, 256, 65536].map(gn_part_bound).to_vec();
        assert_eq!(f, vec![1, 2, 3, 4, 5, 6, 7, 15]);
        for n in 2..300usize {
            assert!(gn_part_bound(n) as f64 <= (n as f64).log2() + 1.0, "n={n}");
        }
    }

    #[test]
    fn structural_count_matches_materialized() {
        for n in 2..=20 {
            let (g, ep) = partition_gn_recursive(n).unwrap();
            assert_eq!(ep.len(), gn_part_count(n), "n={n}");
            assert!(ep.len() <= gn_part_bound(n));
            assert!(verify_partition(&g, &ep).unwrap().is_valid(), "n={n}");
        }
        assert_eq!([128, 256].map(gn_part_count), [6, 7]);
        for n in [5, 8, 13, 16] {
            let (g, _) = partition_gn_recursive(n).unwrap();
            let materialized: Vec<usize> = gn_levels(&g, n).iter().map(Vec::len).collect();
            assert_eq!(gn_part_sizes(n), materialized, "n={n}");
        }
    }

    #[test]
    fn straddlers_share_the_top_level() {
        let n = 16;
        let straddlers: Vec<_> = gn_intervals(n).into_iter().filter(|&(i, j)| i <= 8 && j >= 9).collect();
        for (x, &a) in straddlers.iter().enumerate() {
            for &b in &straddlers[x + 1..] {
                assert_eq!(gn_part_of(n, a, b), 0);
            }
        }
        assert_eq!(gn_part_of(n, (1, 2), (2, 3)), 2);
        assert_eq!(gn_part_of(n, (9, 10), (10, 11)), 2);
    }
}
