//! Induced cycles and brute-force Berge checking.

use fixedbitset::FixedBitSet;

use crate::budget::{Budget, Timeout};
use crate::graph::{complement, Graph, Vertex};

struct HoleSearch<'a> {
    g: &'a Graph,
    k: usize,
    adj: Vec<FixedBitSet>,
    path: Vec<Vertex>,
    // vertices adjacent to some interior path vertex (path[1..len-1])
    blocked: Vec<u32>,
    budget: &'a mut Budget,
}

impl HoleSearch<'_> {
    fn block(&mut self, v: Vertex, delta: i32) {
        for w in self.g.neighbors(v) {
            self.blocked[w] = (self.blocked[w] as i32 + delta) as u32;
        }
    }

    /// Extends an induced path `path[0] .. path[last]`; every vertex after
    /// `path[0]` is larger than it, and `path[1] < path[k-1]` fixes direction.
    fn extend(&mut self) -> Result<bool, Timeout> {
        self.budget.tick()?;
        let start = self.path[0];
        let last = *self.path.last().unwrap();
        let pos = self.path.len();
        let closing = pos == self.k - 1;
        let candidates: Vec<Vertex> = self.g.neighbors(last).filter(|&x| x > start).collect();
        for x in candidates {
            if self.path.contains(&x) || self.blocked[x] > 0 {
                continue;
            }
            let touches_start = self.adj[start].contains(x);
            if closing {
                if !touches_start || x < self.path[1] {
                    continue;
                }
                self.path.push(x);
                return Ok(true);
            }
            if pos >= 2 && touches_start {
                continue;
            }
            // `last` becomes interior once x is appended (path[0] is handled separately)
            if pos >= 2 {
                self.block(last, 1);
            }
            self.path.push(x);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            if pos >= 2 {
                self.block(last, -1);
            }
        }
        Ok(false)
    }
}

/// Returns the vertex sequence of an induced cycle of length `k` (`k >= 3`), if any.
pub fn contains_induced_cycle(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Vec<Vertex>>, Timeout> {
    assert!(k >= 3, "cycles have length at least 3");
    if k > g.n() {
        return Ok(None);
    }
    let adj = (0..g.n())
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(g.n());
            s.extend(g.neighbors(v));
            s
        })
        .collect();
    let mut search = HoleSearch { g, k, adj, path: Vec::with_capacity(k), blocked: vec![0; g.n()], budget };
    for start in 0..g.n() {
        search.path.clear();
        search.path.push(start);
        if search.extend()? {
            return Ok(Some(search.path));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BergeVerdict {
    Berge,
    /// An odd hole (`in_complement == false`) or odd antihole of `g`.
    OddHole {
        cycle: Vec<Vertex>,
        in_complement: bool,
    },
}

impl BergeVerdict {
    pub fn is_berge(&self) -> bool {
        matches!(self, BergeVerdict::Berge)
    }
}

/// Looks for induced odd cycles of length ≥ 5 in `g` and in its complement.
pub fn is_berge_bruteforce(g: &Graph, budget: &mut Budget) -> Result<BergeVerdict, Timeout> {
    let co = complement(g);
    for k in (5..=g.n()).step_by(2) {
        if let Some(cycle) = contains_induced_cycle(g, k, budget)? {
            return Ok(BergeVerdict::OddHole { cycle, in_complement: false });
        }
        if let Some(cycle) = contains_induced_cycle(&co, k, budget)? {
            return Ok(BergeVerdict::OddHole { cycle, in_complement: true });
        }
    }
    Ok(BergeVerdict::Berge)
}

/// True iff `cycle` is an induced cycle of `g` in the given order.
pub fn is_induced_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cartesian_product;

    fn b() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn five_cycle_is_found() {
        let c5 = Graph::cycle(5);
        let w = contains_induced_cycle(&c5, 5, &mut b()).unwrap().unwrap();
        assert!(is_induced_cycle(&c5, &w));
        assert_eq!(contains_induced_cycle(&c5, 4, &mut b()).unwrap(), None);
    }

    #[test]
    fn complete_graph_has_no_induced_four_cycle() {
        assert_eq!(contains_induced_cycle(&Graph::complete(4), 4, &mut b()).unwrap(), None);
        assert!(contains_induced_cycle(&Graph::complete(4), 3, &mut b()).unwrap().is_some());
    }

    #[test]
    fn k2_k2_k3_has_induced_seven_cycle() {
        let k2 = Graph::complete(2);
        let g = cartesian_product(&cartesian_product(&k2, &k2), &Graph::complete(3));
        assert_eq!(g.n(), 12);
        let w = contains_induced_cycle(&g, 7, &mut b()).unwrap().expect("7-hole");
        assert!(is_induced_cycle(&g, &w));
        assert!(!is_berge_bruteforce(&g, &mut b()).unwrap().is_berge());
    }

    #[test]
    fn berge_examples() {
        let v = is_berge_bruteforce(&Graph::cycle(5), &mut b()).unwrap();
        match v {
            BergeVerdict::OddHole { cycle, in_complement } => {
                assert!(!in_complement);
                assert_eq!(cycle.len(), 5);
            }
            BergeVerdict::Berge => panic!("C5 is not Berge"),
        }
        assert!(is_berge_bruteforce(&Graph::complete_bipartite(3, 4), &mut b()).unwrap().is_berge());
        assert!(is_berge_bruteforce(&Graph::cycle(8), &mut b()).unwrap().is_berge());
        // C7 complement: an odd antihole
        let anti = complement(&Graph::cycle(7));
        match is_berge_bruteforce(&anti, &mut b()).unwrap() {
            BergeVerdict::OddHole { in_complement, .. } => assert!(in_complement),
            BergeVerdict::Berge => panic!("antihole missed"),
        }
    }

    #[test]
    fn hole_search_agrees_with_subset_enumeration() {
        let mut rng = crate::rng::XorShift64Star::new(5);
        for _ in 0..40 {
            let n = 4 + rng.below_usize(5);
            let pairs: Vec<_> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.coin(0.45)).collect();
            let g = crate::graph::make_graph(n, &pairs).unwrap();
            for k in 4..=n {
                let found = contains_induced_cycle(&g, k, &mut b()).unwrap();
                let brute = brute_has_hole(&g, k);
                assert_eq!(found.is_some(), brute, "n={n} k={k} {:?}", g.edges());
                if let Some(c) = found {
                    assert!(is_induced_cycle(&g, &c));
                }
            }
        }
    }

    // induced k-cycle ⇔ some k-subset induces a connected 2-regular graph
    fn brute_has_hole(g: &Graph, k: usize) -> bool {
        let n = g.n();
        (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|mask| {
            let vs: Vec<_> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let sub = g.induced(&vs);
            (0..k).all(|v| sub.degree(v) == 2) && sub.is_connected()
        })
    }
}
