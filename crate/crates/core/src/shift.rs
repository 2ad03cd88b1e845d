//! From a cover of `G_n` by transitively oriented parts to a proper
//! colouring of the double shift graph `S_n`.
//!
//! The special edge of a triple `(i, j, k)` joins `[i, j]` and `[j, k]`.
//! Its type is `(m, sign)`: `m` is the lowest part containing it, and the
//! sign records whether that part orients it `[i,j] → [j,k]` (`+`) or back.
//! If `(i, j, k)` and `(j, k, l)` shared a type, transitivity would force an
//! edge between the disjoint intervals `[i, j]` and `[k, l]`. So colouring
//! each triple by its type (colour `2m + sign`, with `+` = 0) is proper.

use std::fmt;

use crate::comparability::{verify_partition, EdgePartition};
use crate::error::{Error, Result};
use crate::generators::{gn_index, triples};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::partition::gn_part_bound;

/// Default size limit for materializing `S_n` (C(22,3) = 1540 vertices).
pub const SHIFT_GRAPH_CAP: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialEdge {
    pub edge: EdgeId,
    pub triple: (usize, usize, usize),
}

/// One special edge per triple, in triple order. `gn` must be `G_n` as built by the generators.
pub fn special_edges(gn: &Graph, n: usize) -> Result<Vec<SpecialEdge>> {
    if gn.n() != n * (n - 1) / 2 {
        return Err(Error::Mismatch(format!("graph has {} vertices, G_{n} has {}", gn.n(), n * (n - 1) / 2)));
    }
    triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let (u, v) = (gn_index(n, i, j), gn_index(n, j, k));
            gn.edge_id(u, v)
                .map(|edge| SpecialEdge { edge, triple: (i, j, k) })
                .ok_or_else(|| Error::Mismatch(format!("special edge [{i},{j}]-[{j},{k}] missing")))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialEdgeType {
    pub part: usize,
    pub sign: Sign,
}

impl SpecialEdgeType {
    pub fn color(self) -> usize {
        2 * self.part + usize::from(self.sign == Sign::Minus)
    }
}

/// Colours of the vertices of `S_n` (triple order) and the types behind them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftColoring {
    pub n: usize,
    pub colors: Vec<usize>,
    pub types: Vec<SpecialEdgeType>,
}

impl ShiftColoring {
    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// Verifies `ep` as a certified cover of `gn` and colours `S_n` by special-edge types.
pub fn cover_to_coloring(gn: &Graph, n: usize, ep: &EdgePartition) -> Result<ShiftColoring> {
    if !ep.is_certified() {
        let part = (0..ep.len()).find(|&i| ep.certificate(i).is_none()).unwrap_or(0);
        return Err(Error::MissingCertificate { part });
    }
    let report = verify_partition(gn, ep)?;
    if !report.is_valid() {
        return Err(Error::Mismatch(format!(
            "not a verified cover of G_{n}: {}",
            report.to_string().replace('\n', "; ")
        )));
    }
    cover_to_coloring_unchecked(gn, n, ep)
}

/// The colouring step alone, trusting the certificates. Exposed so that
/// faulty certificates can be pushed through and caught by [`verify_proper`].
pub fn cover_to_coloring_unchecked(gn: &Graph, n: usize, ep: &EdgePartition) -> Result<ShiftColoring> {
    let special = special_edges(gn, n)?;
    let mut lowest_part = vec![usize::MAX; gn.m()];
    for (p, part) in ep.parts().iter().enumerate().rev() {
        for &e in part {
            lowest_part[e] = p;
        }
    }
    let mut types = Vec::with_capacity(special.len());
    for s in &special {
        let part = lowest_part[s.edge];
        if part == usize::MAX {
            return Err(Error::Mismatch(format!("special edge {} is not covered", s.edge)));
        }
        let cert = ep.certificate(part).ok_or(Error::MissingCertificate { part })?;
        let (tail, _) = cert.get(s.edge).ok_or(Error::MissingCertificate { part })?;
        let (i, j, _) = s.triple;
        let sign = if tail == gn_index(n, i, j) { Sign::Plus } else { Sign::Minus };
        types.push(SpecialEdgeType { part, sign });
    }
    Ok(ShiftColoring { n, colors: types.iter().map(|t| t.color()).collect(), types })
}

/// Properness check; `Err` for a colouring of the wrong length, inner `Err`
/// with the first monochromatic edge.
pub fn verify_proper(s: &Graph, colors: &[usize]) -> Result<std::result::Result<(), (Vertex, Vertex)>> {
    if colors.len() != s.n() {
        return Err(Error::Mismatch(format!("colouring has {} entries for {} vertices", colors.len(), s.n())));
    }
    Ok(match s.edges().iter().find(|&&(u, v)| colors[u] == colors[v]) {
        Some(&e) => Err(e),
        None => Ok(()),
    })
}

/// `(n, t, 2t, log₂ log₂ n)` and whether `2t ≥ log₂ log₂ n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub t: usize,
    pub colors: usize,
    pub loglog_n: f64,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.colors as f64 >= self.loglog_n
    }
}

impl fmt::Display for BoundReport {
    /// Single TSV line: `n t colors loglog_n verdict`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "ok" } else { "violated" };
        write!(f, "{}\t{}\t{}\t{:.6}\t{}", self.n, self.t, self.colors, self.loglog_n, verdict)
    }
}

pub fn bound_report(n: usize, t: usize) -> BoundReport {
    let loglog_n = if n <= 1 { f64::NEG_INFINITY } else { (n as f64).log2().log2() };
    BoundReport { n, t, colors: 2 * t, loglog_n }
}

/// Report for the recursive partition's part count, without building `G_n`.
pub fn bound_report_arithmetic(n: usize) -> BoundReport {
    bound_report(n, gn_part_bound(n))
}

/// `i j k color` lines in triple order.
pub fn write_coloring(c: &ShiftColoring) -> String {
    triples(c.n).iter().zip(&c.colors).map(|(&(i, j, k), color)| format!("{i} {j} {k} {color}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comparability::Mode;
    use crate::generators::{gen_double_shift, gen_interval_graph_gn};

    #[test]
    fn special_edge_counts() {
        for (n, expected) in [(3, 1), (4, 4), (6, 20)] {
            let (g, _) = gen_interval_graph_gn(n);
            let s = special_edges(&g, n).unwrap();
            assert_eq!(s.len(), expected);
            let mut ids: Vec<_> = s.iter().map(|x| x.edge).collect();
            ids.sort_unstable();
            ids.dedup();
            assert_eq!(ids.len(), expected);
        }
        let (g3, _) = gen_interval_graph_gn(3);
        let s = special_edges(&g3, 3).unwrap();
        assert_eq!(s[0].triple, (1, 2, 3));
        assert_eq!(g3.edge(s[0].edge), (0, 2));
    }

    #[test]
    fn one_part_cover_of_g4() {
        let (g, _) = gen_interval_graph_gn(4);
        let mut ep = EdgePartition::new(vec![(0..g.m()).collect()], Mode::Cover);
        ep.certify(&g).unwrap();
        let c = cover_to_coloring(&g, 4, &ep).unwrap();
        assert!(c.colors.iter().all(|&x| x < 2));
        let s4 = gen_double_shift(4);
        assert_eq!(verify_proper(&s4, &c.colors).unwrap(), Ok(()));
    }

    #[test]
    fn uncertified_cover_is_rejected() {
        let (g, _) = gen_interval_graph_gn(4);
        let ep = EdgePartition::new(vec![(0..g.m()).collect()], Mode::Cover);
        assert_eq!(cover_to_coloring(&g, 4, &ep), Err(Error::MissingCertificate { part: 0 }));
    }

    #[test]
    fn properness_examples() {
        let s4 = gen_double_shift(4);
        // S4's edge joins (1,2,3) = vertex 0 and (2,3,4) = vertex 3
        assert_eq!(verify_proper(&s4, &[0, 1, 1, 1]).unwrap(), Ok(()));
        assert_eq!(verify_proper(&s4, &[5; 4]).unwrap(), Err((0, 3)));
        assert!(verify_proper(&s4, &[0, 1]).is_err());
    }

    #[test]
    fn bound_reports() {
        let r = bound_report(16, 3);
        assert_eq!((r.colors, r.loglog_n), (6, 2.0));
        assert!(r.holds());
        assert_eq!(r.to_string(), "16\t3\t6\t2.000000\tok");
        assert!(bound_report(4, 1).holds());
        let big = bound_report_arithmetic(65536);
        assert_eq!((big.t, big.loglog_n), (15, 4.0));
    }
}
