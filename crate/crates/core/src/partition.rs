//! Complete multipartite graphs and their orientations.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::digraph::{Digraph, Graph};
use crate::error::{Error, Result};

/// Part sizes of a complete multipartite graph, kept in non-increasing order.
///
/// Part `l` occupies the consecutive vertex block starting right after the
/// blocks of parts `0..l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionSpec {
    sizes: Vec<usize>,
}

impl PartitionSpec {
    /// Accepts sizes in any order and sorts them non-increasingly.
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::InvalidPartition(format!("need at least 2 parts, got {}", sizes.len())));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidPartition("part sizes must be positive".into()));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionSpec { sizes })
    }

    /// Like [`PartitionSpec::new`] but rejects sizes that are not already sorted.
    pub fn new_sorted(sizes: Vec<usize>) -> Result<Self> {
        if sizes.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("sizes must be non-increasing, got {sizes:?}")));
        }
        PartitionSpec::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of parts.
    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    /// `n_l` with one-based `l`, matching the usual `n_1 >= n_2 >= ...` naming.
    pub fn size(&self, l: usize) -> usize {
        self.sizes[l - 1]
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn edge_count(&self) -> usize {
        let n = self.vertex_count();
        let within: usize = self.sizes.iter().map(|s| s * (s - 1) / 2).sum();
        n * (n - 1) / 2 - within
    }

    /// Vertex range of part `l` (zero-based).
    pub fn block(&self, l: usize) -> Range<usize> {
        let start: usize = self.sizes[..l].iter().sum();
        start..start + self.sizes[l]
    }

    /// Part index of every vertex.
    pub fn block_map(&self) -> Vec<usize> {
        self.sizes.iter().enumerate().flat_map(|(l, &s)| std::iter::repeat_n(l, s)).collect()
    }

    /// Blockwise `self >= other` with the same number of parts.
    pub fn dominates(&self, other: &PartitionSpec) -> bool {
        self.parts() == other.parts() && self.sizes.iter().zip(&other.sizes).all(|(a, b)| a >= b)
    }

    pub fn complete_graph(&self) -> Graph {
        let block = self.block_map();
        let n = self.vertex_count();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges.filter(|&(u, v)| block[u] != block[v])).expect("multipartite edges are simple")
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for PartitionSpec {
    type Err = Error;

    /// Parses comma-separated sizes such as `10,5`; order is normalised.
    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(format!("bad part size {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionSpec::new(sizes)
    }
}

/// An orientation of the complete multipartite graph described by `partition`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedDigraph {
    digraph: Digraph,
    partition: PartitionSpec,
    blocks: Vec<usize>,
}

impl PartitionedDigraph {
    /// Checks that `digraph` orients every cross-block pair exactly once and
    /// has no arc inside a block.
    pub fn new(digraph: Digraph, partition: PartitionSpec) -> Result<Self> {
        let n = partition.vertex_count();
        if digraph.vertex_count() != n {
            return Err(Error::NotMultipartiteOrientation(format!(
                "digraph has {} vertices, partition {} needs {n}",
                digraph.vertex_count(),
                partition
            )));
        }
        let blocks = partition.block_map();
        for u in 0..n {
            for v in u + 1..n {
                let joined = digraph.has_arc(u, v) || digraph.has_arc(v, u);
                if blocks[u] == blocks[v] && joined {
                    return Err(Error::NotMultipartiteOrientation(format!(
                        "arc between {u} and {v} inside part {}",
                        blocks[u] + 1
                    )));
                }
                if blocks[u] != blocks[v] && !joined {
                    return Err(Error::NotMultipartiteOrientation(format!(
                        "vertices {u} and {v} in different parts are not joined"
                    )));
                }
            }
        }
        Ok(PartitionedDigraph { digraph, partition, blocks })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn partition(&self) -> &PartitionSpec {
        &self.partition
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.blocks[v]
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_are_sorted_and_validated() {
        let p = PartitionSpec::new(vec![1, 3, 2]).unwrap();
        assert_eq!(p.sizes(), &[3, 2, 1]);
        assert_eq!(p.size(1), 3);
        assert!(PartitionSpec::new(vec![4]).is_err());
        assert!(PartitionSpec::new(vec![2, 0]).is_err());
        assert!(PartitionSpec::new_sorted(vec![1, 2]).is_err());
        assert_eq!("5, 10".parse::<PartitionSpec>().unwrap().sizes(), &[10, 5]);
        assert!("5,x".parse::<PartitionSpec>().is_err());
    }

    #[test]
    fn counts_and_blocks() {
        let p = PartitionSpec::new(vec![3, 2, 1]).unwrap();
        assert_eq!(p.vertex_count(), 6);
        assert_eq!(p.edge_count(), 11);
        assert_eq!(p.complete_graph().edge_count(), 11);
        assert_eq!(p.block(1), 3..5);
        assert_eq!(p.block_map(), vec![0, 0, 0, 1, 1, 2]);
        let q = PartitionSpec::new(vec![4, 2, 1]).unwrap();
        assert!(q.dominates(&p));
        assert!(!p.dominates(&q));
    }

    #[test]
    fn orientation_invariant() {
        let p = PartitionSpec::new(vec![1, 1]).unwrap();
        assert!(PartitionedDigraph::new(Digraph::from_arcs(2, [(0, 1)]).unwrap(), p.clone()).is_ok());
        assert!(PartitionedDigraph::new(Digraph::empty(2), p).is_err());
        let q = PartitionSpec::new(vec![2, 1]).unwrap();
        let inside = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(PartitionedDigraph::new(inside, q).is_err());
    }
}
