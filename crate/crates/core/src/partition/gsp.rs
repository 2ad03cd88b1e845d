use crate::comparability::{EdgePartition, Mode, Orientation};
use crate::error::Result;
use crate::generators::{GspSide, GspStructure};
use crate::graph::{EdgeId, Graph};

/// Two-part partition of a GSP graph from its structure record.
///
/// Direct side: the cliques `V1`, `K_1`, ... form one part (each oriented by
/// vertex ID) and the `V1`–`V2` edges the other (oriented `V1 → V2`).
/// Complemented side: the complete multipartite graph on `V2` (oriented by
/// clique index) and the `V1`–`V2` edges.
pub fn partition_gsp(g: &Graph, s: &GspStructure) -> Result<EdgePartition> {
    s.validate(g)?;
    let clique = s.clique_of(g.n());
    let mut inner: Vec<EdgeId> = Vec::new();
    let mut cross: Vec<EdgeId> = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if clique[u].is_none() != clique[v].is_none() {
            cross.push(e);
        } else {
            inner.push(e);
        }
    }
    let inner_o = match s.side {
        // within V1 or within one clique: any linear order per clique works
        GspSide::Direct => Orientation::by_rank(g, &inner, |v| (clique[v].map_or(0, |c| c + 1), v)),
        GspSide::Complemented => Orientation::by_rank(g, &inner, |v| (clique[v].expect("V1 is independent"), v)),
    };
    let cross_o = Orientation::by_rank(g, &cross, |v| (clique[v].is_some() as usize, v));
    Ok(EdgePartition::from_oriented(vec![inner_o, cross_o], Mode::Partition))
}
