//! Exact ω, α and χ for desk-scale graphs.
//!
//! Maximum clique is a branch-and-bound over bitsets with a greedy
//! colouring bound. Colouring is DSATUR branch-and-bound seeded with a
//! maximum clique (pre-coloured `0..ω`) as lower bound and a greedy DSATUR
//! colouring as upper bound.

use fixedbitset::FixedBitSet;

use crate::budget::{Budget, Timeout};
use crate::graph::{complement, Graph, Vertex};

fn adjacency_sets(g: &Graph) -> Vec<FixedBitSet> {
    (0..g.n())
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(g.n());
            for w in g.neighbors(v) {
                s.insert(w);
            }
            s
        })
        .collect()
}

struct CliqueSearch<'a> {
    adj: Vec<FixedBitSet>,
    best: Vec<Vertex>,
    current: Vec<Vertex>,
    budget: &'a mut Budget,
}

impl CliqueSearch<'_> {
    /// Greedy sequential colouring of `cand`; returns vertices with their colour count bound.
    fn color_order(&self, cand: &FixedBitSet) -> Vec<(Vertex, usize)> {
        let mut uncolored = cand.clone();
        let mut out = Vec::with_capacity(cand.count_ones(..));
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.minimum() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, mut cand: FixedBitSet) -> Result<(), Timeout> {
        self.budget.tick()?;
        let order = self.color_order(&cand);
        for &(v, bound) in order.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return Ok(());
            }
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            cand.remove(v);
        }
        Ok(())
    }
}

/// A maximum clique, sorted ascending.
pub fn maximum_clique(g: &Graph, budget: &mut Budget) -> Result<Vec<Vertex>, Timeout> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let adj = adjacency_sets(g);
    // Greedy start: highest degree first.
    let mut by_degree: Vec<Vertex> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut greedy: Vec<Vertex> = Vec::new();
    for v in by_degree {
        if greedy.iter().all(|&u| adj[u].contains(v)) {
            greedy.push(v);
        }
    }
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    let mut search = CliqueSearch { adj, best: greedy, current: Vec::new(), budget };
    search.expand(all)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &Graph, budget: &mut Budget) -> Result<usize, Timeout> {
    maximum_clique(g, budget).map(|c| c.len())
}

pub fn maximum_independent_set(g: &Graph, budget: &mut Budget) -> Result<Vec<Vertex>, Timeout> {
    maximum_clique(&complement(g), budget)
}

pub fn independence_number(g: &Graph, budget: &mut Budget) -> Result<usize, Timeout> {
    maximum_independent_set(g, budget).map(|s| s.len())
}

const UNCOLORED: usize = usize::MAX;

struct ColorSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    // neighbor_count[v][c]: colored neighbors of v with colour c
    neighbor_count: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    remaining: usize,
    best: Vec<usize>,
    upper: usize,
    lower: usize,
    budget: &'a mut Budget,
}

impl<'a> ColorSearch<'a> {
    fn new(g: &'a Graph, budget: &'a mut Budget, palette: usize) -> Self {
        ColorSearch {
            g,
            colors: vec![UNCOLORED; g.n()],
            neighbor_count: vec![vec![0; palette]; g.n()],
            saturation: vec![0; g.n()],
            remaining: g.n(),
            best: Vec::new(),
            upper: palette,
            lower: 0,
            budget,
        }
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.colors[v] = c;
        self.remaining -= 1;
        for w in self.g.neighbors(v) {
            let cnt = &mut self.neighbor_count[w][c];
            if *cnt == 0 {
                self.saturation[w] += 1;
            }
            *cnt += 1;
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        self.remaining += 1;
        for w in self.g.neighbors(v) {
            let cnt = &mut self.neighbor_count[w][c];
            *cnt -= 1;
            if *cnt == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// DSATUR choice: max saturation, then max uncoloured degree, then lowest index.
    fn pick(&self) -> Vertex {
        let mut best: Option<(usize, usize, Vertex)> = None;
        for v in 0..self.g.n() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let free_deg = self.g.neighbors(v).filter(|&w| self.colors[w] == UNCOLORED).count();
            let key = (self.saturation[v], free_deg);
            if best.map_or(true, |(s, d, _)| key > (s, d)) {
                best = Some((key.0, key.1, v));
            }
        }
        best.expect("pick called with every vertex coloured").2
    }

    fn max_color(&self) -> Option<usize> {
        self.colors.iter().copied().filter(|&c| c != UNCOLORED).max()
    }

    fn greedy(&mut self) {
        while self.remaining > 0 {
            let v = self.pick();
            let c = (0..).find(|&c| self.neighbor_count[v][c] == 0).unwrap();
            self.assign(v, c);
        }
    }

    fn search(&mut self, used: usize) -> Result<(), Timeout> {
        self.budget.tick()?;
        if self.remaining == 0 {
            self.best = self.colors.clone();
            self.upper = used;
            return Ok(());
        }
        let v = self.pick();
        // colours must stay below upper - 1 to improve on the incumbent
        let limit = (used + 1).min(self.upper - 1);
        for c in 0..limit {
            if self.neighbor_count[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            let r = self.search(used.max(c + 1));
            self.unassign(v);
            r?;
            if self.upper <= self.lower {
                break;
            }
        }
        Ok(())
    }
}

/// An optimal proper colouring with colours `0..χ`.
pub fn exact_coloring(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, Timeout> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let clique = maximum_clique(g, budget)?;
    let palette = g.n() + 1;

    let mut greedy = ColorSearch::new(g, budget, palette);
    for (c, &v) in clique.iter().enumerate() {
        greedy.assign(v, c);
    }
    greedy.greedy();
    let incumbent = greedy.colors.clone();
    let upper = greedy.max_color().unwrap() + 1;
    drop(greedy);

    if upper == clique.len() {
        return Ok(incumbent);
    }
    let mut search = ColorSearch::new(g, budget, palette);
    search.best = incumbent;
    search.upper = upper;
    search.lower = clique.len();
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c);
    }
    search.search(clique.len())?;
    Ok(search.best)
}

pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<usize, Timeout> {
    exact_coloring(g, budget).map(|c| c.iter().max().map_or(0, |&m| m + 1))
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}
