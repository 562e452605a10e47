//! Growing a competitive orientation by cloning out-neighbourhoods.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::partition::{PartitionSpec, PartitionedDigraph};

/// Adds a vertex `n` with an arc to every out-neighbour of `u` and no other arcs.
///
/// When `d` is competitive for some step pair the result is too.
pub fn clone_vertex(d: &Digraph, u: usize) -> Result<Digraph> {
    d.check_vertex(u)?;
    let new = d.vertex_count();
    let mut out = d.with_vertex_count(new + 1);
    for w in d.out_neighbors(u) {
        out.insert_arc(new, w)?;
    }
    Ok(out)
}

/// Extends `seed` to an orientation of the complete multipartite graph for `target`.
///
/// Part `l` of the output occupies its own consecutive block; the seed's
/// vertices come first in each block. New vertices are added block by block
/// in ascending order. Each copies the current out-neighbourhood of its
/// block's first seed vertex, and every other edge at it points inwards.
pub fn grow(seed: &PartitionedDigraph, target: &PartitionSpec) -> Result<PartitionedDigraph> {
    let from = seed.partition();
    if !target.dominates(from) {
        return Err(Error::Contract(format!("cannot grow K_{{{from}}} into K_{{{target}}}")));
    }
    let n = target.vertex_count();
    let k = target.parts();

    // Seed vertex `x` in part `l` at offset `o` maps to `target.block(l).start + o`.
    let mut relabel = vec![0; from.vertex_count()];
    for l in 0..k {
        for (o, x) in from.block(l).enumerate() {
            relabel[x] = target.block(l).start + o;
        }
    }
    let block_of = target.block_map();
    let mut present = vec![false; n];
    relabel.iter().for_each(|&x| present[x] = true);

    let mut out: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for (a, b) in seed.digraph().arcs() {
        out[relabel[a]][relabel[b]] = true;
    }

    for l in 0..k {
        let block = target.block(l);
        let representative = block.start;
        for v in block.start + from.size(l + 1)..block.end {
            let cloned: Vec<usize> = (0..n).filter(|&w| out[representative][w]).collect();
            for &w in &cloned {
                out[v][w] = true;
            }
            for x in 0..n {
                if present[x] && block_of[x] != l && !out[v][x] {
                    out[x][v] = true;
                }
            }
            present[v] = true;
        }
    }

    let arcs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| out[u][v]);
    PartitionedDigraph::new(Digraph::from_arcs(n, arcs)?, target.clone())
}
