use crate::comparability::{EdgePartition, Mode, Orientation};
use crate::error::Result;
use crate::graph::{line_graph, Bipartition, EdgeId, Graph, Side};

/// Line graph of a bipartite `h` and its split by the side of the shared endpoint.
///
/// Each part is a disjoint union of cliques (one per vertex of `h` on that
/// side) and is oriented by line-graph vertex ID.
pub fn partition_lbip(h: &Graph, bipartition: &Bipartition) -> Result<(Graph, EdgePartition)> {
    let (g, tags) = line_graph(h, Some(bipartition))?;
    let tags = tags.expect("bipartition given");
    let side_part = |side: Side| -> Vec<EdgeId> { (0..g.m()).filter(|&e| tags[e] == side).collect() };
    let parts = [Side::A, Side::B].map(|side| Orientation::by_rank(&g, &side_part(side), |v| (0, v)));
    Ok((g.clone(), EdgePartition::from_oriented(parts.into(), Mode::Partition)))
}
