//! Two partial orders on disjoint subtrees of a rooted tree.
//!
//! `A ≺₁ B` when the root of `A` lies on the path from the root of `B` to
//! the tree root. Disjoint pairs that are `≺₁`-incomparable are ordered by
//! `≺₂`: lexicographic comparison of the roots' child-index labels. Both
//! relations, read as orientations of the disjointness graph, are
//! transitive, which splits that graph into two comparability subgraphs.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::comparability::{verify_transitive_orientation, EdgePartition, Mode, Orientation};
use crate::error::{Error, Result};
use crate::generators::SubtreeFamily;
use crate::graph::{EdgeId, Graph, Vertex};

/// Sequence of child indices from the root; the root's label is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PsiLabel(pub Vec<usize>);

impl PsiLabel {
    pub fn is_prefix_of(&self, other: &PsiLabel) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl fmt::Display for PsiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// BFS view of a tree from a root.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub root: Vertex,
    pub parent: Vec<Option<Vertex>>,
    pub depth: Vec<usize>,
    /// children in ascending vertex order
    pub children: Vec<Vec<Vertex>>,
}

impl RootedTree {
    pub fn new(tree: &Graph, root: Vertex) -> Self {
        let n = tree.n();
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in tree.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some(v);
                    children[v].push(w);
                    queue.push_back(w);
                }
            }
        }
        // neighbors() is sorted, so children are already ascending
        RootedTree { root, parent, depth, children }
    }

    /// `u` is `v` or lies on the path from `v` to the root.
    pub fn is_ancestor_or_self(&self, u: Vertex, v: Vertex) -> bool {
        let mut cur = Some(v);
        while let Some(x) = cur {
            if x == u {
                return true;
            }
            cur = self.parent[x];
        }
        false
    }
}

/// Child-index labels: children of each vertex, in ascending vertex ID,
/// extend the parent's label by `0, 1, ...`.
pub fn psi_labeling(tree: &Graph, root: Vertex) -> Vec<PsiLabel> {
    let rt = RootedTree::new(tree, root);
    let mut labels = vec![PsiLabel::default(); tree.n()];
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for (idx, &c) in rt.children[v].iter().enumerate() {
            let mut l = labels[v].0.clone();
            l.push(idx);
            labels[c] = PsiLabel(l);
            stack.push(c);
        }
    }
    labels
}

/// The unique vertex of subtree `idx` closest to the tree root.
pub fn subtree_root(f: &SubtreeFamily, idx: usize) -> Result<Vertex> {
    let rt = RootedTree::new(&f.tree, f.root);
    root_in(&rt, &f.subtrees[idx]).ok_or_else(|| Error::InvalidSubtrees(format!("subtree {idx} is not connected")))
}

fn root_in(rt: &RootedTree, members: &[Vertex]) -> Option<Vertex> {
    // connected iff exactly one member's parent lies outside the set
    let mut tops = members.iter().filter(|&&v| rt.parent[v].map_or(true, |p| members.binary_search(&p).is_err()));
    let top = *tops.next()?;
    tops.next().is_none().then_some(top)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexOrder {
    Before,
    After,
    /// one label is a prefix of the other (equality included)
    Incomparable,
}

pub fn prec_lex(alpha: &PsiLabel, beta: &PsiLabel) -> LexOrder {
    if alpha.is_prefix_of(beta) || beta.is_prefix_of(alpha) {
        return LexOrder::Incomparable;
    }
    match alpha.0.cmp(&beta.0) {
        Ordering::Less => LexOrder::Before,
        Ordering::Greater => LexOrder::After,
        Ordering::Equal => unreachable!("equal labels are prefixes"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precedence {
    /// root-path order
    First,
    /// lexicographic order of incomparable roots
    Second,
}

/// One disjoint pair: the disjointness-graph edge, its tag, and which subtree precedes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderedPair {
    pub edge: EdgeId,
    pub tag: Precedence,
    pub before: usize,
    pub after: usize,
}

#[derive(Debug, Clone)]
pub struct SubtreeDisjointness {
    /// one vertex per subtree, edges between vertex-disjoint subtrees
    pub graph: Graph,
    pub partition: EdgePartition,
    pub order: Vec<OrderedPair>,
    pub roots: Vec<Vertex>,
    pub psi: Vec<PsiLabel>,
}

/// Disjointness graph of the family and its split into the `≺₁` part and
/// the `≺₂` part, both certified.
pub fn partition_subtree_disjointness(f: &SubtreeFamily) -> Result<SubtreeDisjointness> {
    f.validate()?;
    let rt = RootedTree::new(&f.tree, f.root);
    let psi = psi_labeling(&f.tree, f.root);
    let roots = (0..f.subtrees.len())
        .map(|i| {
            root_in(&rt, &f.subtrees[i]).ok_or_else(|| Error::InvalidSubtrees(format!("subtree {i} is not connected")))
        })
        .collect::<Result<Vec<_>>>()?;

    let k = f.subtrees.len();
    let mut marks = vec![usize::MAX; f.tree.n()];
    let mut edges = Vec::new();
    for a in 0..k {
        for &v in &f.subtrees[a] {
            marks[v] = a;
        }
        for b in a + 1..k {
            if f.subtrees[b].iter().all(|&v| marks[v] != a) {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::from_normalized(k, edges);

    let mut first = Orientation::new();
    let mut second = Orientation::new();
    let mut order = Vec::with_capacity(graph.m());
    for (edge, &(a, b)) in graph.edges().iter().enumerate() {
        let (pa, pb) = (&psi[roots[a]], &psi[roots[b]]);
        let (tag, before, after) = if pa.is_prefix_of(pb) {
            (Precedence::First, a, b)
        } else if pb.is_prefix_of(pa) {
            (Precedence::First, b, a)
        } else if prec_lex(pa, pb) == LexOrder::Before {
            (Precedence::Second, a, b)
        } else {
            (Precedence::Second, b, a)
        };
        match tag {
            Precedence::First => first.insert(edge, before, after),
            Precedence::Second => second.insert(edge, before, after),
        }
        order.push(OrderedPair { edge, tag, before, after });
    }
    for o in [&first, &second] {
        let ids: Vec<EdgeId> = o.iter().map(|(e, _, _)| e).collect();
        if let Err(v) = verify_transitive_orientation(&graph, &ids, o)? {
            return Err(Error::Mismatch(format!("subtree order is not transitive: {v}")));
        }
    }
    let partition = EdgePartition::from_oriented(vec![first, second], Mode::Partition);
    Ok(SubtreeDisjointness { graph, partition, order, roots, psi })
}

/// `A ≺₁ B` by the path definition: the root of `A` is on the path from the root of `B` to the tree root.
pub fn precedes_by_root_path(f: &SubtreeFamily, a: usize, b: usize) -> Result<bool> {
    let rt = RootedTree::new(&f.tree, f.root);
    Ok(rt.is_ancestor_or_self(subtree_root(f, a)?, subtree_root(f, b)?))
}

/// `vertex: n1,n2,...` lines, one per tree vertex.
pub fn dump_psi(labels: &[PsiLabel]) -> String {
    labels.iter().enumerate().map(|(v, l)| format!("{v}: {l}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;

    fn path_family(subtrees: Vec<Vec<Vertex>>) -> SubtreeFamily {
        // r=0 - a=1 - b=2
        SubtreeFamily::new(Graph::path(3), 0, subtrees).unwrap()
    }

    #[test]
    fn subtree_roots() {
        let f = path_family(vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(subtree_root(&f, 0).unwrap(), 0);
        assert_eq!(subtree_root(&f, 1).unwrap(), 1);
    }

    #[test]
    fn disconnected_subtree_is_rejected() {
        let f = SubtreeFamily { tree: Graph::path(3), root: 0, subtrees: vec![vec![0, 2]] };
        assert!(matches!(subtree_root(&f, 0), Err(Error::InvalidSubtrees(_))));
        assert!(SubtreeFamily::new(Graph::path(3), 0, vec![vec![0, 2]]).is_err());
    }

    #[test]
    fn psi_examples() {
        let p = psi_labeling(&Graph::path(3), 0);
        assert_eq!(p, vec![PsiLabel(vec![]), PsiLabel(vec![0]), PsiLabel(vec![0, 0])]);
        let s = psi_labeling(&Graph::star(3), 0);
        assert_eq!(&s[1..], &[PsiLabel(vec![0]), PsiLabel(vec![1]), PsiLabel(vec![2])]);
        assert_eq!(dump_psi(&p), "0: \n1: 0\n2: 0,0\n");
    }

    #[test]
    fn lex_examples() {
        assert_eq!(prec_lex(&PsiLabel(vec![0]), &PsiLabel(vec![1])), LexOrder::Before);
        assert_eq!(prec_lex(&PsiLabel(vec![0]), &PsiLabel(vec![0, 0])), LexOrder::Incomparable);
        assert_eq!(prec_lex(&PsiLabel(vec![0, 2]), &PsiLabel(vec![0, 1, 5])), LexOrder::After);
        assert_eq!(prec_lex(&PsiLabel(vec![3]), &PsiLabel(vec![3])), LexOrder::Incomparable);
    }

    #[test]
    fn path_family_is_all_first_order() {
        let f = path_family(vec![vec![0], vec![1], vec![2]]);
        let d = partition_subtree_disjointness(&f).unwrap();
        assert_eq!(d.graph.m(), 3);
        assert!(d.order.iter().all(|p| p.tag == Precedence::First));
        assert_eq!(d.partition.len(), 1);
    }

    #[test]
    fn star_leaves_are_second_order() {
        let f = SubtreeFamily::new(Graph::star(2), 0, vec![vec![1], vec![2]]).unwrap();
        let d = partition_subtree_disjointness(&f).unwrap();
        assert_eq!(d.order, vec![OrderedPair { edge: 0, tag: Precedence::Second, before: 0, after: 1 }]);
    }

    #[test]
    fn overlapping_subtrees_are_not_adjacent() {
        let t = make_graph(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let f = SubtreeFamily::new(t, 0, vec![vec![1, 2], vec![1, 3], vec![0]]).unwrap();
        let d = partition_subtree_disjointness(&f).unwrap();
        assert_eq!(d.graph.edges(), &[(0, 2), (1, 2)]);
    }
}
