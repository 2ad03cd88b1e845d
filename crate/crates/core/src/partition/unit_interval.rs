use crate::comparability::{EdgePartition, Mode, Orientation};
use crate::error::{Error, Result};
use crate::generators::{gen_from_intervals, IntervalSystem};
use crate::graph::{EdgeId, Graph};

/// Output of [`partition_unit_interval`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIntervalPartition {
    pub graph: Graph,
    pub partition: EdgePartition,
    /// `X_1, X_2, ...` as interval indices, in construction order.
    pub classes: Vec<Vec<usize>>,
    /// Edges inside a class.
    pub within: Vec<EdgeId>,
    /// Edges between classes; each joins consecutive classes.
    pub across: Vec<EdgeId>,
}

/// Greedy classes: repeatedly take the remaining interval with the leftmost
/// right endpoint `b` (lowest index on ties) and let the next class be all
/// remaining intervals containing `b`.
pub fn unit_interval_classes(u: &IntervalSystem) -> Vec<Vec<usize>> {
    let ivs = u.intervals();
    let mut remaining: Vec<usize> = (0..ivs.len()).collect();
    let mut classes = Vec::new();
    while !remaining.is_empty() {
        let pick = *remaining.iter().min_by_key(|&&i| (ivs[i].hi, i)).expect("non-empty");
        let b = ivs[pick].hi;
        let (class, rest): (Vec<usize>, Vec<usize>) = remaining.iter().partition(|&&i| ivs[i].contains(b));
        classes.push(class);
        remaining = rest;
    }
    classes
}

/// Two-part partition of a unit interval graph: edges within the greedy
/// classes (disjoint cliques) and edges across classes (bipartite by class
/// parity, oriented even class → odd class).
pub fn partition_unit_interval(u: &IntervalSystem) -> Result<UnitIntervalPartition> {
    if !u.is_unit() {
        return Err(Error::InvalidIntervals("partition_unit_interval needs a unit interval system".into()));
    }
    let graph = gen_from_intervals(u);
    let classes = unit_interval_classes(u);
    let mut class_of = vec![0; u.len()];
    for (k, class) in classes.iter().enumerate() {
        for &i in class {
            class_of[i] = k;
        }
    }
    let (within, across): (Vec<EdgeId>, Vec<EdgeId>) =
        (0..graph.m()).partition(|&e| class_of[graph.edge(e).0] == class_of[graph.edge(e).1]);

    for class in &classes {
        for (a, &x) in class.iter().enumerate() {
            for &y in &class[a + 1..] {
                if !graph.has_edge(x, y) {
                    return Err(Error::Mismatch(format!("class members {x} and {y} do not intersect")));
                }
            }
        }
    }
    for &e in &across {
        let (x, y) = graph.edge(e);
        if class_of[x].abs_diff(class_of[y]) != 1 {
            return Err(Error::Mismatch(format!("edge {x}-{y} joins classes {} and {}", class_of[x], class_of[y])));
        }
    }

    let within_o = Orientation::by_rank(&graph, &within, |v| (class_of[v], v));
    let across_o = Orientation::by_rank(&graph, &across, |v| (class_of[v] % 2, v));
    let partition = EdgePartition::from_oriented(vec![within_o, across_o], Mode::Partition);
    Ok(UnitIntervalPartition { graph, partition, classes, within, across })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comparability::verify_partition;
    use crate::generators::{gen_random_unit_intervals, Interval, Rational};

    #[test]
    fn three_interval_example() {
        let half = |x: i64| Rational::new(x, 2);
        let u =
            IntervalSystem::new(vec![Interval::int(0, 1), Interval::new(half(1), half(3)), Interval::int(2, 3)], true)
                .unwrap();
        let r = partition_unit_interval(&u).unwrap();
        assert_eq!(r.classes, vec![vec![0, 1], vec![2]]);
        assert_eq!(r.graph.edges(), &[(0, 1)]);
        assert_eq!((r.within.as_slice(), r.across.as_slice()), (&[0][..], &[][..]));
        assert_eq!(r.partition.len(), 1);
    }

    #[test]
    fn single_interval() {
        let u = IntervalSystem::new(vec![Interval::int(0, 1)], true).unwrap();
        let r = partition_unit_interval(&u).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.partition.len(), 0);
    }

    #[test]
    fn non_unit_is_rejected() {
        let u = IntervalSystem::new(vec![Interval::int(0, 1), Interval::int(0, 2)], false).unwrap();
        assert!(partition_unit_interval(&u).is_err());
    }

    #[test]
    fn random_instances_verify() {
        for seed in 0..40 {
            let u = gen_random_unit_intervals(25, 8, seed);
            let r = partition_unit_interval(&u).unwrap();
            assert!(r.partition.len() <= 2);
            assert!(verify_partition(&r.graph, &r.partition).unwrap().is_valid());
        }
    }
}
