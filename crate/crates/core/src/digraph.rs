//! Loop-free, 2-cycle-free digraphs and simple graphs on dense vertex indices.
//!
//! Both types store adjacency as packed bit rows, so neighbourhood unions during
//! breadth-first search are word-parallel. Vertices are always `0..n`.

use std::fmt;

use crate::bits::{iter_words, word_count, VertexSet};
use crate::error::{Error, Result};

/// A finite digraph without loops, directed 2-cycles or multiple arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    words: usize,
    out: Vec<u64>,
    arc_count: usize,
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        let words = word_count(n);
        Digraph { n, words, out: vec![0; n * words], arc_count: 0 }
    }

    /// Builds a digraph from an arc list, rejecting loops, 2-cycles,
    /// duplicates and out-of-range endpoints.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            d.insert_arc(u, v)?;
        }
        Ok(d)
    }

    pub(crate) fn insert_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_arc(u, v) {
            return Err(Error::DuplicateArc(u, v));
        }
        if self.has_arc(v, u) {
            return Err(Error::TwoCycle(u, v));
        }
        self.out[u * self.words + v / 64] |= 1 << (v % 64);
        self.arc_count += 1;
        Ok(())
    }

    /// Decodes one orientation of an edge list: bit `e` of `mask` clear means
    /// `edges[e] = (a, b)` becomes `a -> b`, set means `b -> a`.
    ///
    /// The caller guarantees the edge list is simple and in range.
    pub(crate) fn from_orientation_unchecked(n: usize, edges: &[(usize, usize)], mask: u64) -> Self {
        let mut d = Digraph::empty(n);
        for (e, &(a, b)) in edges.iter().enumerate() {
            let (u, v) = if mask >> e & 1 == 0 { (a, b) } else { (b, a) };
            d.out[u * d.words + v / 64] |= 1 << (v % 64);
        }
        d.arc_count = edges.len();
        d
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn out_row(&self, u: usize) -> &[u64] {
        &self.out[u * self.words..(u + 1) * self.words]
    }

    /// Out-neighbours of `u` in ascending order.
    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_words(self.out_row(u))
    }

    /// In-neighbours of `v` in ascending order.
    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_arc(u, v))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).count()
    }

    pub fn min_out_degree(&self) -> Option<usize> {
        (0..self.n).map(|u| self.out_degree(u)).min()
    }

    /// All arcs, sorted lexicographically.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    /// Whether every pair of distinct vertices is joined by exactly one arc.
    pub fn is_tournament(&self) -> bool {
        self.arc_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// The graph with an edge `{u,v}` for every arc `(u,v)`.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.arcs() {
            g.set_edge(u, v);
        }
        g
    }

    /// `D - v` on the same index set: every arc at `v` is dropped and `v` stays
    /// as an isolated vertex, so the identities of all other vertices persist.
    pub fn delete_vertex(&self, v: usize) -> Result<Digraph> {
        self.check_vertex(v)?;
        let mut d = self.clone();
        for u in 0..self.n {
            if d.has_arc(u, v) {
                d.out[u * d.words + v / 64] &= !(1 << (v % 64));
                d.arc_count -= 1;
            }
        }
        let removed = d.out_degree(v);
        d.out[v * d.words..(v + 1) * d.words].iter_mut().for_each(|w| *w = 0);
        d.arc_count -= removed;
        Ok(d)
    }

    /// Copies this digraph onto `n >= self.n` vertices, the extra ones isolated.
    pub(crate) fn with_vertex_count(&self, n: usize) -> Digraph {
        debug_assert!(n >= self.n);
        let mut d = Digraph::empty(n);
        for (u, v) in self.arcs() {
            d.out[u * d.words + v / 64] |= 1 << (v % 64);
        }
        d.arc_count = self.arc_count;
        d
    }

    /// Shortest-path distances from `source`, truncated at `bound`.
    pub fn bounded_distance(&self, source: usize, bound: usize) -> Result<DistanceMap> {
        self.check_vertex(source)?;
        Ok(self.bounded_distance_avoiding(source, bound, None))
    }

    /// Bounded BFS in `D - avoid` when `avoid` is given.
    pub(crate) fn bounded_distance_avoiding(&self, source: usize, bound: usize, avoid: Option<usize>) -> DistanceMap {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut visited = VertexSet::new(self.n);
        visited.insert(source);
        if let Some(a) = avoid {
            visited.insert(a);
        }
        let mut frontier = vec![source];
        let mut next = VertexSet::new(self.n);
        for depth in 1..=bound {
            next.clear();
            for &x in &frontier {
                next.union_words(self.out_row(x));
            }
            next.subtract(&visited);
            if next.is_empty() {
                break;
            }
            frontier.clear();
            for w in next.iter() {
                dist[w] = Some(depth);
                visited.insert(w);
                frontier.push(w);
            }
        }
        DistanceMap(dist)
    }

    /// Vertices at distance `1..=depth` from `source` in `D - avoid`.
    pub(crate) fn reach_within(&self, source: usize, avoid: usize, depth: usize) -> Vec<VertexSet> {
        let mut layers = Vec::with_capacity(depth);
        let mut visited = VertexSet::new(self.n);
        visited.insert(source);
        visited.insert(avoid);
        let mut reached = VertexSet::new(self.n);
        let mut frontier = VertexSet::new(self.n);
        frontier.insert(source);
        for _ in 0..depth {
            let mut next = VertexSet::new(self.n);
            for x in frontier.iter() {
                next.union_words(self.out_row(x));
            }
            next.subtract(&visited);
            for w in next.iter() {
                visited.insert(w);
                reached.insert(w);
            }
            layers.push(reached.clone());
            frontier = next;
        }
        layers
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph").field("n", &self.n).field("arcs", &self.arcs().collect::<Vec<_>>()).finish()
    }
}

/// Result of a bounded breadth-first search. `None` means "not reachable
/// within the bound".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap(Vec<Option<usize>>);

impl DistanceMap {
    pub fn get(&self, v: usize) -> Option<usize> {
        self.0.get(v).copied().flatten()
    }

    /// `(vertex, distance)` for every reached vertex, ascending by vertex.
    pub fn reached(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().filter_map(|(v, d)| d.map(|d| (v, d)))
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.0
    }
}

/// A finite simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = word_count(n);
        Graph { n, words, adj: vec![0; n * words], edge_count: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set_edge(u, v);
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Contract(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        if !self.has_edge(u, v) {
            self.adj[u * self.words + v / 64] |= 1 << (v % 64);
            self.adj[v * self.words + u / 64] |= 1 << (u % 64);
            self.edge_count += 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_words(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Removes every edge at `v`, keeping `v` as an isolated vertex.
    pub fn isolate_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Graph::from_edges(self.n, self.edges().filter(|&(a, b)| a != v && b != v))
    }

    /// The subgraph induced by `keep` (ascending), reindexed to `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (u, v) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.set_edge(index[u], index[v]);
            }
        }
        g
    }

    /// BFS distance from `u` to `v`, optionally ignoring the edge `{skip.0, skip.1}`.
    pub(crate) fn distance(&self, u: usize, v: usize, skip: Option<(usize, usize)>) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut visited = VertexSet::new(self.n);
        visited.insert(u);
        let mut frontier = vec![u];
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for &x in &frontier {
                for y in self.neighbors(x) {
                    if visited.contains(y) {
                        continue;
                    }
                    if let Some((a, b)) = skip {
                        if (x, y) == (a, b) || (x, y) == (b, a) {
                            continue;
                        }
                    }
                    if y == v {
                        return Some(depth);
                    }
                    visited.insert(y);
                    next.push(y);
                }
            }
            frontier = next;
        }
        None
    }

    /// Vertices reachable from `u` (including `u`), as a set.
    pub(crate) fn component_of(&self, u: usize, skip: Option<(usize, usize)>) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[u] = true;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if seen[y] {
                    continue;
                }
                if let Some((a, b)) = skip {
                    if (x, y) == (a, b) || (x, y) == (b, a) {
                        continue;
                    }
                }
                seen[y] = true;
                stack.push(y);
            }
        }
        seen
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant5() -> Digraph {
        Digraph::from_arcs(5, (0..5).flat_map(|l| [(l, (l + 1) % 5), (l, (l + 2) % 5)])).unwrap()
    }

    #[test]
    fn rejects_loops_cycles_duplicates_and_range() {
        assert_eq!(Digraph::from_arcs(3, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(Digraph::from_arcs(3, [(0, 1), (1, 0)]), Err(Error::TwoCycle(1, 0)));
        assert_eq!(Digraph::from_arcs(3, [(0, 1), (0, 1)]), Err(Error::DuplicateArc(0, 1)));
        assert_eq!(Digraph::from_arcs(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn underlying_graph_examples() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let g = d.underlying_graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let d10 = circulant5();
        assert_eq!(d10.arc_count(), 10);
        assert_eq!(d10.underlying_graph(), Graph::complete(5));

        assert_eq!(Digraph::empty(3).underlying_graph(), Graph::empty(3));
    }

    #[test]
    fn delete_vertex_examples() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let d1 = d.delete_vertex(1).unwrap();
        assert_eq!(d1.arcs().collect::<Vec<_>>(), vec![(2, 0)]);
        assert_eq!(d1.vertex_count(), 3);

        // v0 is incident to 4 of the 10 arcs of the circulant tournament.
        assert_eq!(circulant5().delete_vertex(0).unwrap().arc_count(), 6);

        let e = Digraph::empty(2);
        assert_eq!(e.delete_vertex(0).unwrap(), e);
        assert!(e.delete_vertex(2).is_err());
    }

    #[test]
    fn bounded_distance_examples() {
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let m = path.bounded_distance(0, 1).unwrap();
        assert_eq!(m.reached().collect::<Vec<_>>(), vec![(0, 0), (1, 1)]);
        assert_eq!(m.get(2), None);

        let m = circulant5().bounded_distance(0, 2).unwrap();
        assert_eq!(m.as_slice(), &[Some(0), Some(1), Some(1), Some(2), Some(2)]);

        let m = Digraph::empty(4).bounded_distance(2, 5).unwrap();
        assert_eq!(m.reached().collect::<Vec<_>>(), vec![(2, 0)]);
    }

    #[test]
    fn graph_helpers() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert_eq!(c6.distance(0, 3, None), Some(3));
        assert_eq!(c6.distance(0, 1, Some((0, 1))), Some(5));
        let p = c6.isolate_vertex(0).unwrap();
        assert_eq!(p.degree(0), 0);
        assert_eq!(p.edge_count(), 4);
        let sub = c6.induced(&[1, 2, 3]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
    }
}
