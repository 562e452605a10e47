//! Structural conditions every (i,j)-step competitively orientable graph meets.
//!
//! A failed condition proves that no orientation of the graph is competitive.
//! Passing all of them proves nothing.

use std::fmt;

use crate::competition::StepPair;
use crate::digraph::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// (1) every vertex has degree at least 2.
    MinDegree,
    /// (2) `|V| >= 5` and `|E| >= 2|V|`.
    SizeBounds,
    /// (3) deleting degree-2 vertices keeps the graph orientable.
    DegreeTwoReduction,
    /// (4) every pair is joined by a walk of length `<= i+j` on which they are not consecutive.
    AvoidingWalk,
    /// (5) diameter at most `i+j`.
    Diameter,
    /// (6) 2-edge-connectivity.
    TwoEdgeConnected,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::MinDegree,
        Condition::SizeBounds,
        Condition::DegreeTwoReduction,
        Condition::AvoidingWalk,
        Condition::Diameter,
        Condition::TwoEdgeConnected,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn description(self) -> &'static str {
        match self {
            Condition::MinDegree => "minimum degree >= 2",
            Condition::SizeBounds => "|V| >= 5 and |E| >= 2|V|",
            Condition::DegreeTwoReduction => "degree-2 reduction stays feasible",
            Condition::AvoidingWalk => "pairs joined by a short walk avoiding their edge",
            Condition::Diameter => "diameter <= i+j",
            Condition::TwoEdgeConnected => "2-edge-connected",
        }
    }
}

/// Evidence attached to a failed condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    Vertex {
        vertex: usize,
        degree: usize,
    },
    Size {
        vertices: usize,
        edges: usize,
    },
    /// Vertices removed by the degree-2 reduction, and the conditions the
    /// reduced graph fails.
    Reduction {
        removed: Vec<usize>,
        failed: Vec<Condition>,
    },
    /// `distance` is `None` when `v` is unreachable.
    Pair {
        u: usize,
        v: usize,
        distance: Option<usize>,
    },
    Bridge {
        u: usize,
        v: usize,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Vertex { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}"),
            Counterexample::Size { vertices, edges } => {
                write!(f, "|V| = {vertices}, |E| = {edges}, 2|V| = {}", 2 * vertices)
            }
            Counterexample::Reduction { removed, failed } => {
                let failed: Vec<String> = failed.iter().map(|c| format!("({})", c.number())).collect();
                write!(f, "removing {removed:?} leaves a graph failing {}", failed.join(" "))
            }
            Counterexample::Pair { u, v, distance: Some(d) } => write!(f, "pair {u},{v} at distance {d}"),
            Counterexample::Pair { u, v, distance: None } => write!(f, "pair {u},{v} disconnected"),
            Counterexample::Bridge { u, v } => write!(f, "edge {u}-{v} is a bridge"),
        }
    }
}

/// Outcome of every condition, in order (1) to (6).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryReport {
    pub steps: StepPair,
    outcomes: Vec<(Condition, Option<Counterexample>)>,
}

impl NecessaryReport {
    pub fn outcomes(&self) -> &[(Condition, Option<Counterexample>)] {
        &self.outcomes
    }

    pub fn passes(&self, c: Condition) -> bool {
        self.outcome(c).is_none()
    }

    pub fn outcome(&self, c: Condition) -> Option<&Counterexample> {
        self.outcomes.iter().find(|(k, _)| *k == c).and_then(|(_, o)| o.as_ref())
    }

    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|(_, o)| o.is_none())
    }

    pub fn failed(&self) -> Vec<Condition> {
        self.outcomes.iter().filter(|(_, o)| o.is_some()).map(|(c, _)| *c).collect()
    }
}

impl fmt::Display for NecessaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, outcome) in &self.outcomes {
            match outcome {
                None => writeln!(f, "({}) {}: pass", c.number(), c.description())?,
                Some(ce) => writeln!(f, "({}) {}: FAIL ({ce})", c.number(), c.description())?,
            }
        }
        Ok(())
    }
}

/// Conditions (1), (2), (4), (5), (6); defined for any vertex count.
fn direct_conditions(g: &Graph, reach: usize) -> Vec<(Condition, Option<Counterexample>)> {
    let n = g.vertex_count();
    let m = g.edge_count();

    let min_degree = (0..n)
        .map(|v| (v, g.degree(v)))
        .find(|&(_, d)| d < 2)
        .map(|(vertex, degree)| Counterexample::Vertex { vertex, degree });

    let size = (n < 5 || m < 2 * n).then_some(Counterexample::Size { vertices: n, edges: m });

    let mut walk = None;
    let mut diameter = None;
    for u in 0..n {
        for v in u + 1..n {
            if walk.is_none() {
                let d = g.distance(u, v, Some((u, v)));
                if d.is_none_or(|d| d > reach) {
                    walk = Some(Counterexample::Pair { u, v, distance: d });
                }
            }
            if diameter.is_none() {
                let d = g.distance(u, v, None);
                if d.is_none_or(|d| d > reach) {
                    diameter = Some(Counterexample::Pair { u, v, distance: d });
                }
            }
        }
    }

    let two_edge = two_edge_connectivity(g);

    vec![
        (Condition::MinDegree, min_degree),
        (Condition::SizeBounds, size),
        (Condition::AvoidingWalk, walk),
        (Condition::Diameter, diameter),
        (Condition::TwoEdgeConnected, two_edge),
    ]
}

fn two_edge_connectivity(g: &Graph) -> Option<Counterexample> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let reach = g.component_of(0, None);
    if let Some(v) = reach.iter().position(|&r| !r) {
        return Some(Counterexample::Pair { u: 0, v, distance: None });
    }
    g.edges().find(|&(u, v)| !g.component_of(u, Some((u, v)))[v]).map(|(u, v)| Counterexample::Bridge { u, v })
}

/// Repeatedly deletes the lowest-indexed vertex of degree exactly 2.
///
/// Returns the remaining graph reindexed in original vertex order, and the
/// deleted vertices in deletion order.
pub fn reduce_degree_two_traced(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    while let Some(u) = (0..n).find(|&v| alive[v] && degree[v] == 2) {
        alive[u] = false;
        removed.push(u);
        for w in g.neighbors(u) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    (g.induced(&keep), removed)
}

/// [`reduce_degree_two_traced`] without the trace.
pub fn reduce_degree_two(g: &Graph) -> Graph {
    reduce_degree_two_traced(g).0
}

/// Evaluates all six conditions without short-circuiting.
pub fn check_necessary(g: &Graph, steps: StepPair) -> Result<NecessaryReport> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Contract(format!("necessary conditions need at least 2 vertices, got {n}")));
    }
    let reach = steps.sum();
    let mut outcomes = direct_conditions(g, reach);

    let (reduced, removed) = reduce_degree_two_traced(g);
    let reduction = if removed.is_empty() {
        None
    } else {
        let failed: Vec<Condition> =
            direct_conditions(&reduced, reach).into_iter().filter(|(_, o)| o.is_some()).map(|(c, _)| c).collect();
        (!failed.is_empty()).then_some(Counterexample::Reduction { removed, failed })
    };
    outcomes.insert(2, (Condition::DegreeTwoReduction, reduction));
    Ok(NecessaryReport { steps, outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::PartitionSpec;

    fn s(i: usize, j: usize) -> StepPair {
        StepPair::new(i, j).unwrap()
    }

    #[test]
    fn complete_five_is_tight() {
        let r = check_necessary(&Graph::complete(5), s(1, 2)).unwrap();
        assert!(r.all_pass(), "{r}");
        assert!(r.outcomes().iter().all(|(_, o)| o.is_none()));
    }

    #[test]
    fn k321_fails_edge_count() {
        let g = PartitionSpec::new(vec![3, 2, 1]).unwrap().complete_graph();
        for (i, j) in [(1, 2), (2, 2), (3, 3)] {
            let r = check_necessary(&g, s(i, j)).unwrap();
            assert_eq!(r.outcome(Condition::SizeBounds), Some(&Counterexample::Size { vertices: 6, edges: 11 }));
        }
    }

    #[test]
    fn four_cycle_is_too_small() {
        let r = check_necessary(&Graph::cycle(4).unwrap(), s(1, 2)).unwrap();
        assert!(!r.passes(Condition::SizeBounds));
    }

    #[test]
    fn diameter_and_walk_conditions() {
        // C_7 with step sum 3: diameter 3 passes, but an adjacent pair needs a 6-walk.
        let r = check_necessary(&Graph::cycle(7).unwrap(), s(1, 2)).unwrap();
        assert!(r.passes(Condition::Diameter));
        assert_eq!(r.outcome(Condition::AvoidingWalk), Some(&Counterexample::Pair { u: 0, v: 1, distance: Some(6) }));
        let r = check_necessary(&Graph::cycle(8).unwrap(), s(1, 2)).unwrap();
        assert!(!r.passes(Condition::Diameter));
    }

    #[test]
    fn bridges_and_disconnection() {
        // Two triangles joined by the bridge 2-3.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = check_necessary(&g, s(3, 3)).unwrap();
        assert_eq!(r.outcome(Condition::TwoEdgeConnected), Some(&Counterexample::Bridge { u: 2, v: 3 }));
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let r = check_necessary(&g, s(1, 2)).unwrap();
        assert!(matches!(r.outcome(Condition::TwoEdgeConnected), Some(Counterexample::Pair { .. })));
        assert!(check_necessary(&Graph::empty(1), s(1, 2)).is_err());
    }

    #[test]
    fn reduction_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(reduce_degree_two(&k5), k5);

        let mut edges: Vec<_> = k5.edges().collect();
        edges.extend([(0, 5), (1, 5)]);
        let g = Graph::from_edges(6, edges).unwrap();
        let (reduced, removed) = reduce_degree_two_traced(&g);
        assert_eq!(reduced, k5);
        assert_eq!(removed, vec![5]);

        // Trace: delete 0 (path 1..5), then 2, then 4; vertices 1, 3, 5 remain isolated.
        let (reduced, removed) = reduce_degree_two_traced(&Graph::cycle(6).unwrap());
        assert_eq!(removed, vec![0, 2, 4]);
        assert_eq!(reduced.vertex_count(), 3);
        assert_eq!(reduced.edge_count(), 0);
        let r = check_necessary(&Graph::cycle(6).unwrap(), s(1, 2)).unwrap();
        assert!(!r.passes(Condition::DegreeTwoReduction));
    }
}
