//! Fixed workloads shared by the benchmarks.

use compart::generators::{gen_from_intervals, gen_gsp, gen_h, gen_random_intervals, GspSide};
use compart::Graph;

/// Comparability graphs of growing size for the recognizer.
pub fn interval_graphs() -> Vec<(usize, Graph)> {
    [50, 100, 200].into_iter().map(|n| (n, gen_from_intervals(&gen_random_intervals(n, 4 * n as u64, 7)))).collect()
}

/// Split-like graphs that need two parts.
pub fn gsp_graphs() -> Vec<(usize, Graph)> {
    [20, 40, 80].into_iter().map(|n| (n, gen_gsp(n, 3, GspSide::Complemented).0)).collect()
}

/// Instances where the exact search finds a two-part partition quickly.
pub fn solvable_h() -> Vec<(usize, Graph)> {
    [2, 3].into_iter().map(|k| (k, gen_h(k, 4))).collect()
}
