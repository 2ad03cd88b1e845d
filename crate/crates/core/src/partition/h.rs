use crate::comparability::{EdgePartition, Mode, Orientation};
use crate::generators::gen_h;
use crate::graph::{EdgeId, Graph};

/// Three-part partition of `H_{rows,cols}`: edges inside the `cols` cliques
/// of size `rows` (first coordinate varies), edges inside the `rows` cliques
/// of size `cols`, and the pendant matching (oriented towards the pendant).
pub fn partition_h(rows: usize, cols: usize) -> (Graph, EdgePartition) {
    let h = gen_h(rows, cols);
    let core = rows * cols;
    let (mut along_rows, mut along_cols, mut pendant) = (Vec::<EdgeId>::new(), Vec::new(), Vec::new());
    for (e, &(u, v)) in h.edges().iter().enumerate() {
        if v >= core {
            pendant.push(e);
        } else if u % cols == v % cols {
            along_rows.push(e);
        } else {
            debug_assert_eq!(u / cols, v / cols);
            along_cols.push(e);
        }
    }
    let parts = vec![
        Orientation::by_rank(&h, &along_rows, |v| (0, v)),
        Orientation::by_rank(&h, &along_cols, |v| (0, v)),
        Orientation::by_rank(&h, &pendant, |v| (0, v)),
    ];
    (h, EdgePartition::from_oriented(parts, Mode::Partition))
}
