//! The (i,j)-step competition relation.
//!
//! Two vertices `u` and `v` compete when some `w` is reachable from `u` in
//! `D - v` within one bound and from `v` in `D - u` within the other, with
//! the bounds `(i, j)` applied in either order.

use std::fmt;
use std::str::FromStr;

use crate::digraph::{Digraph, Graph};
use crate::error::{Error, Result};

/// Step bounds `(i, j)`, both at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepPair {
    i: usize,
    j: usize,
}

impl StepPair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidSteps(format!("({i},{j}): both steps must be at least 1")));
        }
        Ok(StepPair { i, j })
    }

    pub fn i(self) -> usize {
        self.i
    }

    pub fn j(self) -> usize {
        self.j
    }

    pub fn swapped(self) -> Self {
        StepPair { i: self.j, j: self.i }
    }

    /// The same pair with `i <= j`.
    pub fn canonical(self) -> Self {
        if self.i <= self.j {
            self
        } else {
            self.swapped()
        }
    }

    pub fn max(self) -> usize {
        self.i.max(self.j)
    }

    pub fn min(self) -> usize {
        self.i.min(self.j)
    }

    pub fn sum(self) -> usize {
        self.i + self.j
    }

    pub fn is_one_one(self) -> bool {
        self.i == 1 && self.j == 1
    }
}

impl fmt::Display for StepPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

impl FromStr for StepPair {
    type Err = Error;

    /// Parses `i,j`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSteps(format!("expected `i,j`, got {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let i = a.trim().parse().map_err(|_| bad())?;
        let j = b.trim().parse().map_err(|_| bad())?;
        StepPair::new(i, j)
    }
}

/// Which ordering of the bounds certified the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// `d(u,w) <= i` and `d(v,w) <= j`.
    Direct,
    /// `d(u,w) <= j` and `d(v,w) <= i`.
    Swapped,
}

/// A common out-neighbour `w` together with `d_{D-v}(u,w)` and `d_{D-u}(v,w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompeteWitness {
    pub w: usize,
    pub len_from_u: usize,
    pub len_from_v: usize,
    pub clause: Clause,
}

fn check_pair(d: &Digraph, u: usize, v: usize) -> Result<()> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    if u == v {
        return Err(Error::Contract(format!("competition needs two distinct vertices, got {u} twice")));
    }
    Ok(())
}

/// Finds the witness minimising `(len_from_u + len_from_v, w)`, preferring
/// [`Clause::Direct`] when both orderings fit. `Ok(None)` if they do not compete.
pub fn ij_compete(d: &Digraph, u: usize, v: usize, steps: StepPair) -> Result<Option<CompeteWitness>> {
    check_pair(d, u, v)?;
    let bound = steps.max();
    let from_u = d.bounded_distance_avoiding(u, bound, Some(v));
    let from_v = d.bounded_distance_avoiding(v, bound, Some(u));
    let mut best: Option<CompeteWitness> = None;
    for w in 0..d.vertex_count() {
        let (Some(du), Some(dv)) = (from_u.get(w), from_v.get(w)) else {
            continue;
        };
        if du == 0 || dv == 0 {
            continue;
        }
        let clause = if du <= steps.i() && dv <= steps.j() {
            Clause::Direct
        } else if du <= steps.j() && dv <= steps.i() {
            Clause::Swapped
        } else {
            continue;
        };
        if best.is_none_or(|b| du + dv < b.len_from_u + b.len_from_v) {
            best = Some(CompeteWitness { w, len_from_u: du, len_from_v: dv, clause });
        }
    }
    Ok(best)
}

/// Boolean form of [`ij_compete`] using word-parallel reach sets.
pub fn competes(d: &Digraph, u: usize, v: usize, steps: StepPair) -> Result<bool> {
    check_pair(d, u, v)?;
    Ok(competes_unchecked(d, u, v, steps))
}

pub(crate) fn competes_unchecked(d: &Digraph, u: usize, v: usize, steps: StepPair) -> bool {
    let bound = steps.max();
    let from_u = d.reach_within(u, v, bound);
    let from_v = d.reach_within(v, u, bound);
    let (i, j) = (steps.i() - 1, steps.j() - 1);
    from_u[i].intersects(&from_v[j]) || from_u[j].intersects(&from_v[i])
}

/// The graph on `V(D)` whose edges are the competing pairs.
pub fn competition_graph(d: &Digraph, steps: StepPair) -> Graph {
    let n = d.vertex_count();
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.filter(|&(u, v)| competes_unchecked(d, u, v, steps)).collect();
    Graph::from_edges(n, edges).expect("pairs are distinct and in range")
}

/// Outcome of [`is_competitive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Competitiveness {
    Competitive,
    /// The lexicographically least pair that does not compete.
    FailingPair(usize, usize),
}

impl Competitiveness {
    pub fn is_competitive(self) -> bool {
        matches!(self, Competitiveness::Competitive)
    }
}

/// Whether every pair of vertices competes; stops at the first failing pair.
pub fn is_competitive(d: &Digraph, steps: StepPair) -> Result<Competitiveness> {
    let n = d.vertex_count();
    if n < 2 {
        return Err(Error::Contract(format!("competitiveness needs at least 2 vertices, got {n}")));
    }
    Ok(first_failing_pair(d, steps))
}

pub(crate) fn first_failing_pair(d: &Digraph, steps: StepPair) -> Competitiveness {
    let n = d.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if !competes_unchecked(d, u, v, steps) {
                return Competitiveness::FailingPair(u, v);
            }
        }
    }
    Competitiveness::Competitive
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant5() -> Digraph {
        Digraph::from_arcs(5, (0..5).flat_map(|l| [(l, (l + 1) % 5), (l, (l + 2) % 5)])).unwrap()
    }

    fn s(i: usize, j: usize) -> StepPair {
        StepPair::new(i, j).unwrap()
    }

    #[test]
    fn step_pair_parsing() {
        assert_eq!("1,2".parse::<StepPair>().unwrap(), s(1, 2));
        assert!("0,2".parse::<StepPair>().is_err());
        assert!("12".parse::<StepPair>().is_err());
        assert_eq!(s(3, 1).canonical(), s(1, 3));
        assert_eq!(s(2, 3).to_string(), "2,3");
    }

    #[test]
    fn common_out_neighbor() {
        let d = Digraph::from_arcs(3, [(0, 2), (1, 2)]).unwrap();
        let w = ij_compete(&d, 0, 1, s(1, 1)).unwrap().unwrap();
        assert_eq!((w.w, w.len_from_u, w.len_from_v, w.clause), (2, 1, 1, Clause::Direct));
    }

    #[test]
    fn circulant_pair_needs_two_steps() {
        // Oracle by hand: v0 -> {1,2}; in D - v0, v3 -> {4}, v3 -> v4 -> v1 is the only short route.
        let d = circulant5();
        assert_eq!(ij_compete(&d, 0, 3, s(1, 1)).unwrap(), None);
        let w = ij_compete(&d, 0, 3, s(1, 2)).unwrap().unwrap();
        assert_eq!((w.w, w.len_from_u, w.len_from_v), (1, 1, 2));
        assert_eq!(w.clause, Clause::Direct);
    }

    #[test]
    fn path_through_the_other_vertex_does_not_count() {
        let d = Digraph::from_arcs(3, [(0, 2), (2, 1)]).unwrap();
        for (i, j) in [(1, 1), (2, 3), (4, 4)] {
            assert_eq!(ij_compete(&d, 0, 1, s(i, j)).unwrap(), None);
        }
    }

    #[test]
    fn rejects_equal_vertices() {
        assert!(ij_compete(&circulant5(), 2, 2, s(1, 1)).is_err());
        assert!(is_competitive(&Digraph::empty(1), s(1, 2)).is_err());
    }

    #[test]
    fn competition_graph_examples() {
        assert_eq!(competition_graph(&circulant5(), s(1, 2)), Graph::complete(5));
        let c3 = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(competition_graph(&c3, s(1, 1)).edge_count(), 0);
    }

    #[test]
    fn one_one_is_classical_competition() {
        let d = Digraph::from_arcs(5, [(0, 2), (1, 2), (3, 4), (2, 4), (4, 0)]).unwrap();
        let g = competition_graph(&d, s(1, 1));
        for u in 0..5 {
            for v in u + 1..5 {
                let common = d.out_neighbors(u).any(|w| w != v && d.has_arc(v, w));
                assert_eq!(g.has_edge(u, v), common, "{u} {v}");
            }
        }
    }

    #[test]
    fn is_competitive_examples() {
        assert_eq!(is_competitive(&circulant5(), s(1, 2)).unwrap(), Competitiveness::Competitive);
        assert_eq!(is_competitive(&circulant5(), s(1, 1)).unwrap(), Competitiveness::FailingPair(0, 2));
        // Vertex 4 has out-degree 1 here.
        let mut arcs: Vec<_> = circulant5().arcs().filter(|&a| a != (4, 1)).collect();
        arcs.push((1, 4));
        let d = Digraph::from_arcs(5, arcs.into_iter().filter(|&a| a != (1, 3))).unwrap();
        assert_eq!(d.out_degree(4), 1);
        assert!(!is_competitive(&d, s(3, 3)).unwrap().is_competitive());
    }
}
