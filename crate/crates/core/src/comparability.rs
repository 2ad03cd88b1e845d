//! Transitive orientations: recognition, verification, and checking of
//! whole edge partitions and covers.
//!
//! Recognition follows the classical implication-class decomposition: pick
//! an unoriented edge, close its orientation under the forcing relation
//! within the edges that remain, fail if the class forces both directions
//! of some edge, remove the class, and repeat. The assembled orientation is
//! then checked by [`verify_transitive_orientation`], which is the source of
//! truth for every certificate in the crate.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// Directed versions of a declared set of edges: edge ID → (tail, head).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Orientation {
    arcs: BTreeMap<EdgeId, (Vertex, Vertex)>,
}

impl Orientation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, edge: EdgeId, tail: Vertex, head: Vertex) {
        self.arcs.insert(edge, (tail, head));
    }

    pub fn get(&self, edge: EdgeId) -> Option<(Vertex, Vertex)> {
        self.arcs.get(&edge).copied()
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Arcs in ascending edge-ID order.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Vertex, Vertex)> + '_ {
        self.arcs.iter().map(|(&e, &(t, h))| (e, t, h))
    }

    /// Reverses the arc of `edge`, if present.
    pub fn flip(&mut self, edge: EdgeId) {
        if let Some(arc) = self.arcs.get_mut(&edge) {
            *arc = (arc.1, arc.0);
        }
    }

    /// Orients every listed edge from its smaller to its larger `rank`.
    pub fn by_rank(g: &Graph, part: &[EdgeId], rank: impl Fn(Vertex) -> (usize, usize)) -> Self {
        let mut o = Orientation::new();
        for &e in part {
            let (u, v) = g.edge(e);
            if rank(u) < rank(v) {
                o.insert(e, u, v);
            } else {
                o.insert(e, v, u);
            }
        }
        o
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Partition,
    Cover,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Partition => "partition",
            Mode::Cover => "cover",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "partition" => Ok(Mode::Partition),
            "cover" => Ok(Mode::Cover),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// Edge-ID sets (each sorted ascending), optionally with orientation certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    parts: Vec<Vec<EdgeId>>,
    mode: Mode,
    certificates: Vec<Option<Orientation>>,
}

impl EdgePartition {
    /// Sorts each part and drops empty ones.
    pub fn new(parts: Vec<Vec<EdgeId>>, mode: Mode) -> Self {
        let n = parts.len();
        Self::with_certificates(parts, mode, vec![None; n])
    }

    /// Like [`EdgePartition::new`]; `certificates[i]` belongs to `parts[i]`.
    pub fn with_certificates(parts: Vec<Vec<EdgeId>>, mode: Mode, certificates: Vec<Option<Orientation>>) -> Self {
        assert_eq!(parts.len(), certificates.len(), "one certificate slot per part");
        let (parts, certificates) = parts
            .into_iter()
            .zip(certificates)
            .filter(|(p, _)| !p.is_empty())
            .map(|(mut p, c)| {
                p.sort_unstable();
                (p, c)
            })
            .unzip();
        EdgePartition { parts, mode, certificates }
    }

    /// Parts with attached orientations; every part must be non-empty.
    pub fn from_oriented(parts: Vec<Orientation>, mode: Mode) -> Self {
        let ids = parts.iter().map(|o| o.iter().map(|(e, _, _)| e).collect()).collect();
        Self::with_certificates(ids, mode, parts.into_iter().map(Some).collect())
    }

    pub fn parts(&self) -> &[Vec<EdgeId>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn certificate(&self, part: usize) -> Option<&Orientation> {
        self.certificates[part].as_ref()
    }

    pub fn certificate_mut(&mut self, part: usize) -> Option<&mut Orientation> {
        self.certificates[part].as_mut()
    }

    pub fn is_certified(&self) -> bool {
        self.certificates.iter().all(Option::is_some)
    }

    /// Fills in missing certificates with the recognizer. Returns the index
    /// of the first part that is not a comparability graph, if any.
    pub fn certify(&mut self, g: &Graph) -> std::result::Result<(), usize> {
        for (i, part) in self.parts.iter().enumerate() {
            if self.certificates[i].is_none() {
                self.certificates[i] = Some(find_transitive_orientation(g, part).ok_or(i)?);
            }
        }
        Ok(())
    }
}

/// Why an orientation failed the transitivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransitivityViolation {
    /// `a→b` and `b→c` but `{a, c}` is not an edge of the graph.
    MissingEdge { a: Vertex, b: Vertex, c: Vertex },
    /// `a→b`, `b→c`, and `{a, c}` is an edge outside the part.
    OutsidePart { a: Vertex, b: Vertex, c: Vertex },
    /// `a→b`, `b→c`, but the part orients `{a, c}` as `c→a`.
    Reversed { a: Vertex, b: Vertex, c: Vertex },
}

impl TransitivityViolation {
    pub fn triple(&self) -> (Vertex, Vertex, Vertex) {
        match *self {
            TransitivityViolation::MissingEdge { a, b, c }
            | TransitivityViolation::OutsidePart { a, b, c }
            | TransitivityViolation::Reversed { a, b, c } => (a, b, c),
        }
    }
}

impl fmt::Display for TransitivityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.triple();
        let why = match self {
            TransitivityViolation::MissingEdge { .. } => "closing pair is not an edge",
            TransitivityViolation::OutsidePart { .. } => "closing edge is outside the part",
            TransitivityViolation::Reversed { .. } => "closing edge is oriented backwards",
        };
        write!(f, "{a}->{b}->{c}: {why}")
    }
}

/// Checks that `o` orients exactly `part` and is transitive within it.
///
/// The outer `Result` rejects structurally wrong input (wrong edge set, arcs
/// not matching endpoints); the inner one carries the transitivity verdict.
pub fn verify_transitive_orientation(
    g: &Graph,
    part: &[EdgeId],
    o: &Orientation,
) -> Result<std::result::Result<(), TransitivityViolation>> {
    let mut in_part = vec![false; g.m()];
    for &e in part {
        if e >= g.m() {
            return Err(Error::DanglingEdge { edge: e, m: g.m() });
        }
        in_part[e] = true;
    }
    let declared = in_part.iter().filter(|&&b| b).count();
    if o.len() != declared {
        return Err(Error::OrientationCoverage(format!("{} arcs for {} edges", o.len(), declared)));
    }
    let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    let mut inc: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    for (e, t, h) in o.iter() {
        if e >= g.m() || !in_part[e] {
            return Err(Error::OrientationCoverage(format!("edge {e} is not in the part")));
        }
        let (u, v) = g.edge(e);
        if !((t, h) == (u, v) || (t, h) == (v, u)) {
            return Err(Error::ArcMismatch { edge: e, tail: t, head: h });
        }
        out[t].push(h);
        inc[h].push(t);
    }
    for b in 0..g.n() {
        for &a in &inc[b] {
            for &c in &out[b] {
                let Some(e) = g.edge_id(a, c) else {
                    return Ok(Err(TransitivityViolation::MissingEdge { a, b, c }));
                };
                if !in_part[e] {
                    return Ok(Err(TransitivityViolation::OutsidePart { a, b, c }));
                }
                if o.get(e) != Some((a, c)) {
                    return Ok(Err(TransitivityViolation::Reversed { a, b, c }));
                }
            }
        }
    }
    Ok(Ok(()))
}

const NONE: u32 = u32::MAX;

/// Finds a transitive orientation of the spanning subgraph `(V(g), part)`,
/// or `None` if that subgraph is not a comparability graph.
pub fn find_transitive_orientation(g: &Graph, part: &[EdgeId]) -> Option<Orientation> {
    let k = part.len();
    // local index of each graph edge inside `part`
    let mut local = vec![NONE; g.m()];
    for (i, &e) in part.iter().enumerate() {
        local[e] = i as u32;
    }
    let mut nbrs: Vec<Vec<(Vertex, u32)>> = vec![Vec::new(); g.n()];
    for (i, &e) in part.iter().enumerate() {
        let (u, v) = g.edge(e);
        nbrs[u].push((v, i as u32));
        nbrs[v].push((u, i as u32));
    }
    let mut alive = vec![true; k];
    // direction per local edge: true = min endpoint → max endpoint
    let mut forward = vec![false; k];
    let mut class_of = vec![NONE; k];
    let adjacent_alive = |alive: &[bool], x: Vertex, y: Vertex| -> bool {
        g.edge_id(x, y).is_some_and(|e| local[e] != NONE && alive[local[e] as usize])
    };

    let mut queue: Vec<(Vertex, Vertex)> = Vec::new();
    let mut members: Vec<u32> = Vec::new();
    let mut next_class = 0u32;
    for seed in 0..k {
        if !alive[seed] {
            continue;
        }
        let class = next_class;
        next_class += 1;
        let (u, v) = g.edge(part[seed]);
        members.clear();
        queue.clear();
        class_of[seed] = class;
        forward[seed] = true;
        members.push(seed as u32);
        queue.push((u, v));
        while let Some((a, b)) = queue.pop() {
            // (a,b) forces (a,b') when b' ~ a and b' ≁ b
            for &(b2, i) in &nbrs[a] {
                if b2 == b || !alive[i as usize] || adjacent_alive(&alive, b, b2) {
                    continue;
                }
                if !force(g, part, i, a, b2, class, &mut class_of, &mut forward, &mut members, &mut queue) {
                    return None;
                }
            }
            // (a,b) forces (a',b) when a' ~ b and a' ≁ a
            for &(a2, i) in &nbrs[b] {
                if a2 == a || !alive[i as usize] || adjacent_alive(&alive, a, a2) {
                    continue;
                }
                if !force(g, part, i, a2, b, class, &mut class_of, &mut forward, &mut members, &mut queue) {
                    return None;
                }
            }
        }
        for &i in &members {
            alive[i as usize] = false;
        }
    }

    let mut o = Orientation::new();
    for (i, &e) in part.iter().enumerate() {
        let (u, v) = g.edge(e);
        if forward[i] {
            o.insert(e, u, v);
        } else {
            o.insert(e, v, u);
        }
    }
    let verdict = verify_transitive_orientation(g, part, &o).expect("orientation covers the part");
    assert!(verdict.is_ok(), "implication-class orientation failed verification: {verdict:?}");
    Some(o)
}

/// Records the forced arc `tail→head` on local edge `i`; false on a contradiction.
#[allow(clippy::too_many_arguments)]
fn force(
    g: &Graph,
    part: &[EdgeId],
    i: u32,
    tail: Vertex,
    head: Vertex,
    class: u32,
    class_of: &mut [u32],
    forward: &mut [bool],
    members: &mut Vec<u32>,
    queue: &mut Vec<(Vertex, Vertex)>,
) -> bool {
    let idx = i as usize;
    let (u, _) = g.edge(part[idx]);
    let dir = tail == u;
    if class_of[idx] == class {
        return forward[idx] == dir;
    }
    class_of[idx] = class;
    forward[idx] = dir;
    members.push(i);
    queue.push((tail, head));
    true
}

pub fn is_comparability(g: &Graph) -> bool {
    let all: Vec<EdgeId> = (0..g.m()).collect();
    find_transitive_orientation(g, &all).is_some()
}

/// Outcome of [`verify_partition`]; lists the first failure per category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub parts: usize,
    pub mode: Mode,
    pub uncovered: Option<EdgeId>,
    /// An edge that appears in two parts of a `partition`.
    pub overlap: Option<(EdgeId, usize, usize)>,
    pub empty_part: Option<usize>,
    pub non_comparability: Option<(usize, PartFailure)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartFailure {
    /// The attached certificate is not transitive.
    Certificate(TransitivityViolation),
    /// The attached certificate orients the wrong edges.
    MalformedCertificate(String),
    /// No certificate attached and the recognizer found no orientation.
    NotComparability,
}

impl PartitionReport {
    pub fn is_valid(&self) -> bool {
        self.uncovered.is_none()
            && self.overlap.is_none()
            && self.empty_part.is_none()
            && self.non_comparability.is_none()
    }
}

impl fmt::Display for PartitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parts: {} ({})", self.parts, self.mode)?;
        match self.uncovered {
            Some(e) => writeln!(f, "cover: FAIL (edge {e} uncovered)")?,
            None => writeln!(f, "cover: ok")?,
        }
        if self.mode == Mode::Partition {
            match self.overlap {
                Some((e, i, j)) => writeln!(f, "disjoint: FAIL (edge {e} in parts {i} and {j})")?,
                None => writeln!(f, "disjoint: ok")?,
            }
        }
        if let Some(i) = self.empty_part {
            writeln!(f, "nonempty: FAIL (part {i} is empty)")?;
        }
        match &self.non_comparability {
            Some((i, PartFailure::Certificate(v))) => writeln!(f, "comparability: FAIL (part {i}: {v})")?,
            Some((i, PartFailure::MalformedCertificate(m))) => {
                writeln!(f, "comparability: FAIL (part {i}: bad certificate: {m})")?
            }
            Some((i, PartFailure::NotComparability)) => {
                writeln!(f, "comparability: FAIL (part {i} has no transitive orientation)")?
            }
            None => writeln!(f, "comparability: ok")?,
        }
        write!(f, "verdict: {}", if self.is_valid() { "valid" } else { "invalid" })
    }
}

/// Checks cover, disjointness (for partitions) and comparability of every part.
/// Dangling edge IDs are a structural error.
pub fn verify_partition(g: &Graph, ep: &EdgePartition) -> Result<PartitionReport> {
    let mut owner: Vec<Option<usize>> = vec![None; g.m()];
    let mut overlap = None;
    let mut empty_part = None;
    for (i, part) in ep.parts().iter().enumerate() {
        if part.is_empty() && empty_part.is_none() {
            empty_part = Some(i);
        }
        for &e in part {
            if e >= g.m() {
                return Err(Error::DanglingEdge { edge: e, m: g.m() });
            }
            match owner[e] {
                Some(j) if overlap.is_none() && ep.mode() == Mode::Partition && j != i => {
                    overlap = Some((e, j, i));
                }
                Some(_) => {}
                None => owner[e] = Some(i),
            }
        }
    }
    let uncovered = owner.iter().position(Option::is_none);
    let mut non_comparability = None;
    for (i, part) in ep.parts().iter().enumerate() {
        let failure = match ep.certificate(i) {
            Some(o) => match verify_transitive_orientation(g, part, o) {
                Ok(Ok(())) => None,
                Ok(Err(v)) => Some(PartFailure::Certificate(v)),
                Err(e) => Some(PartFailure::MalformedCertificate(e.to_string())),
            },
            None => find_transitive_orientation(g, part).is_none().then_some(PartFailure::NotComparability),
        };
        if let Some(f) = failure {
            non_comparability = Some((i, f));
            break;
        }
    }
    Ok(PartitionReport { parts: ep.len(), mode: ep.mode(), uncovered, overlap, empty_part, non_comparability })
}
