//! The fixed seed orientations that every construction grows from.
//!
//! `D1`..`D4` are generated from their arc rules; `D5`..`D10` are arc tables
//! shipped under `seeds/`. The shipped `d1`..`d4` tables must match the rules.

use std::fmt;
use std::str::FromStr;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::io::{parse_digraph, ParsedDigraph};
use crate::partition::{PartitionSpec, PartitionedDigraph};

pub const SEED_FILES: [(&str, &str); 10] = [
    ("d1.arcs", include_str!("../../../../seeds/d1.arcs")),
    ("d2.arcs", include_str!("../../../../seeds/d2.arcs")),
    ("d3.arcs", include_str!("../../../../seeds/d3.arcs")),
    ("d4.arcs", include_str!("../../../../seeds/d4.arcs")),
    ("d5.arcs", include_str!("../../../../seeds/d5.arcs")),
    ("d6.arcs", include_str!("../../../../seeds/d6.arcs")),
    ("d7.arcs", include_str!("../../../../seeds/d7.arcs")),
    ("d8.arcs", include_str!("../../../../seeds/d8.arcs")),
    ("d9.arcs", include_str!("../../../../seeds/d9.arcs")),
    ("d10.arcs", include_str!("../../../../seeds/d10.arcs")),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeedId {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    D8,
    D9,
    D10,
    /// Tournament on `k >= 5` vertices with `l -> l+1, l+2 (mod k)` and
    /// every other pair oriented from the higher to the lower index.
    Tournament(usize),
}

impl SeedId {
    pub const CATALOG: [SeedId; 10] = [
        SeedId::D1,
        SeedId::D2,
        SeedId::D3,
        SeedId::D4,
        SeedId::D5,
        SeedId::D6,
        SeedId::D7,
        SeedId::D8,
        SeedId::D9,
        SeedId::D10,
    ];

    /// Index into [`SEED_FILES`] for catalog seeds.
    fn catalog_index(self) -> Option<usize> {
        SeedId::CATALOG.iter().position(|&s| s == self)
    }

    pub fn partition(self) -> Result<PartitionSpec> {
        let sizes = match self {
            SeedId::D1 => vec![6, 6],
            SeedId::D2 => vec![10, 5],
            SeedId::D3 => vec![4, 4],
            SeedId::D4 => vec![6, 3],
            SeedId::D5 => vec![2, 2, 2],
            SeedId::D6 => vec![3, 3, 1],
            SeedId::D7 => vec![4, 2, 1],
            SeedId::D8 => vec![3, 1, 1, 1],
            SeedId::D9 => vec![2, 2, 1, 1],
            SeedId::D10 => vec![1; 5],
            SeedId::Tournament(k) => {
                check_tournament_order(k)?;
                vec![1; k]
            }
        };
        PartitionSpec::new(sizes)
    }
}

impl fmt::Display for SeedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedId::Tournament(k) => write!(f, "T{k}"),
            other => write!(f, "D{}", other.catalog_index().expect("catalog seed") + 1),
        }
    }
}

impl FromStr for SeedId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Contract(format!("unknown seed {s:?} (expected D1..D10 or T<k>)"));
        let upper = s.trim().to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix('D') {
            let l: usize = rest.parse().map_err(|_| bad())?;
            SeedId::CATALOG.get(l.wrapping_sub(1)).copied().ok_or_else(bad)
        } else if let Some(rest) = upper.strip_prefix('T') {
            let k: usize = rest.parse().map_err(|_| bad())?;
            check_tournament_order(k)?;
            Ok(SeedId::Tournament(k))
        } else {
            Err(bad())
        }
    }
}

fn check_tournament_order(k: usize) -> Result<()> {
    if k < 5 {
        return Err(Error::Contract(format!("tournament seed needs k >= 5, got {k}")));
    }
    Ok(())
}

/// D1 on K_{6,6}: union of the two bipartite halves, vertex `k-1` is `x_k`.
fn d1() -> Vec<(usize, usize)> {
    const FORWARD: [[usize; 3]; 6] = [[7, 9, 12], [8, 9, 12], [7, 8, 10], [7, 8, 11], [9, 10, 11], [10, 11, 12]];
    const BACKWARD: [[usize; 3]; 6] = [[2, 5, 6], [1, 5, 6], [3, 4, 6], [1, 2, 4], [1, 2, 3], [3, 4, 5]];
    let fwd = FORWARD.iter().enumerate().flat_map(|(x, outs)| outs.iter().map(move |&y| (x, y - 1)));
    let bwd = BACKWARD.iter().enumerate().flat_map(|(x, outs)| outs.iter().map(move |&y| (x + 6, y - 1)));
    fwd.chain(bwd).collect()
}

/// D2 on K_{10,5}: `u_l -> v` exactly for `v` in the `l`-th 3-subset of V
/// (lexicographic), and `v -> u_l` otherwise.
fn d2() -> Vec<(usize, usize)> {
    let mut subsets = Vec::with_capacity(10);
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                subsets.push([a, b, c]);
            }
        }
    }
    let mut arcs = Vec::with_capacity(50);
    for (l, subset) in subsets.iter().enumerate() {
        for v in 0..5 {
            arcs.push(if subset.contains(&v) { (l, 10 + v) } else { (10 + v, l) });
        }
    }
    arcs
}

/// D3 on K_{4,4}: `u_l -> v_l, v_{l+1}` and `v_l -> u_{l+1}, u_{l+2}`, indices mod 4.
fn d3() -> Vec<(usize, usize)> {
    let u = |l: usize| l % 4;
    let v = |l: usize| 4 + l % 4;
    (0..4).flat_map(|l| [(u(l), v(l)), (u(l), v(l + 1)), (v(l), u(l + 1)), (v(l), u(l + 2))]).collect()
}

/// D4 on K_{6,3}: `u_{2l-1}, u_{2l} -> v_l, v_{l+1}` and `v_{l+2} -> u_{2l-1}, u_{2l}`.
fn d4() -> Vec<(usize, usize)> {
    // Zero-based: u_s is s % 6, v_t is 6 + t % 3, and l runs over 0..3.
    let u = |s: usize| s % 6;
    let v = |t: usize| 6 + t % 3;
    (0..3)
        .flat_map(|l| {
            let (a, b) = (u(2 * l), u(2 * l + 1));
            [(a, v(l)), (b, v(l)), (a, v(l + 1)), (b, v(l + 1)), (v(l + 2), a), (v(l + 2), b)]
        })
        .collect()
}

fn tournament(k: usize) -> Vec<(usize, usize)> {
    let mut arcs = Vec::with_capacity(k * (k - 1) / 2);
    for l in 0..k {
        for m in l + 1..k {
            // m > l, so a forward jump of 1 or 2 is m - l itself; every
            // other pair (wrap-around jumps included) points downwards.
            if m - l <= 2 {
                arcs.push((l, m));
            } else {
                arcs.push((m, l));
            }
        }
    }
    arcs
}

fn from_table(index: usize) -> Result<PartitionedDigraph> {
    let (name, text) = SEED_FILES[index];
    match parse_digraph(text)? {
        ParsedDigraph::Partitioned(p) => Ok(p),
        ParsedDigraph::Plain(_) => Err(Error::Contract(format!("seed file {name} lacks a kpartite header"))),
    }
}

/// The seed digraph with its partition.
pub fn seed(id: SeedId) -> Result<PartitionedDigraph> {
    let partition = id.partition()?;
    let n = partition.vertex_count();
    let arcs = match id {
        SeedId::D1 => d1(),
        SeedId::D2 => d2(),
        SeedId::D3 => d3(),
        SeedId::D4 => d4(),
        SeedId::Tournament(k) => tournament(k),
        table => return from_table(table.catalog_index().expect("catalog seed")),
    };
    PartitionedDigraph::new(Digraph::from_arcs(n, arcs)?, partition)
}

/// The shipped arc table for a catalog seed, parsed.
pub fn seed_table(id: SeedId) -> Result<PartitionedDigraph> {
    let index = id.catalog_index().ok_or_else(|| Error::Contract(format!("{id} has no shipped arc table")))?;
    from_table(index)
}
