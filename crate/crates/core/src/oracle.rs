//! Exhaustive orientation search, independent of the characterization.
//!
//! An orientation of a graph with edges `e_0 < e_1 < ...` (lexicographic,
//! `e = (a, b)` with `a < b`) is a mask: bit `k` clear orients `e_k` as
//! `a -> b`, set as `b -> a`. Masks are visited in increasing order.

use std::io::Write;
use std::ops::Range;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::competition::{first_failing_pair, StepPair};
use crate::digraph::{Digraph, Graph};
use crate::error::{Error, Result};
use crate::necessary::{check_necessary, NecessaryReport};

pub const DEFAULT_EDGE_CAP: usize = 22;
/// Masks are `u64`; one bit stays spare so `2^|E|` fits.
pub const MAX_EDGE_CAP: usize = 63;

const CHUNK: u64 = 1 << 12;

/// A graph with its fixed edge order, decoding masks into orientations.
#[derive(Debug, Clone)]
pub struct OrientationCursor {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl OrientationCursor {
    pub fn new(g: &Graph, cap: usize) -> Result<Self> {
        let edges: Vec<_> = g.edges().collect();
        let cap = cap.min(MAX_EDGE_CAP);
        if edges.len() > cap {
            return Err(Error::EdgeCapExceeded { edges: edges.len(), cap });
        }
        Ok(OrientationCursor { n: g.vertex_count(), edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `2^|E|`.
    pub fn total(&self) -> u64 {
        1 << self.edges.len()
    }

    pub fn decode(&self, mask: u64) -> Digraph {
        debug_assert!(mask < self.total());
        Digraph::from_orientation_unchecked(self.n, &self.edges, mask)
    }

    /// The mask of an orientation of this graph, if `d` is one.
    pub fn encode(&self, d: &Digraph) -> Option<u64> {
        if d.vertex_count() != self.n || d.arc_count() != self.edges.len() {
            return None;
        }
        let mut mask = 0;
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if d.has_arc(b, a) {
                mask |= 1 << k;
            } else if !d.has_arc(a, b) {
                return None;
            }
        }
        Some(mask)
    }

    pub fn iter(&self) -> Orientations<'_> {
        self.range(0..self.total())
    }

    pub fn range(&self, masks: Range<u64>) -> Orientations<'_> {
        let end = masks.end.min(self.total());
        Orientations { cursor: self, next: masks.start.min(end), end }
    }

    /// Splits the full mask range into `parts` contiguous, disjoint sub-ranges.
    pub fn split(&self, parts: usize) -> Vec<Range<u64>> {
        let total = self.total();
        let parts = (parts.max(1) as u64).min(total);
        let step = total.div_ceil(parts);
        (0..parts).map(|p| p * step..((p + 1) * step).min(total)).filter(|r| !r.is_empty()).collect()
    }
}

/// Yields `(mask, orientation)` in mask order.
pub struct Orientations<'a> {
    cursor: &'a OrientationCursor,
    next: u64,
    end: u64,
}

impl Iterator for Orientations<'_> {
    type Item = (u64, Digraph);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some((mask, self.cursor.decode(mask)))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// All `2^|E|` orientations of `g`, refusing graphs above `cap` edges.
pub fn enumerate_orientations(g: &Graph, cap: usize) -> Result<OrientationCursor> {
    OrientationCursor::new(g, cap)
}

#[derive(Debug, Clone)]
pub struct BruteForceOptions {
    pub cap: usize,
    /// Count every competitive orientation instead of stopping at the first.
    pub count: bool,
    pub jobs: usize,
    /// Enumerate even when a necessary condition already rules the graph out.
    pub audit: bool,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions { cap: DEFAULT_EDGE_CAP, count: false, jobs: 1, audit: false }
    }
}

#[derive(Debug, Clone)]
pub struct BruteForceResult {
    pub orientable: bool,
    /// Lowest competitive mask.
    pub witness_mask: Option<u64>,
    /// Only in counting mode.
    pub competitive_count: Option<u64>,
    /// Masks examined, counted as if scanned sequentially: `witness + 1` on an
    /// early exit, `2^|E|` after a full scan, 0 when quick-rejected.
    pub orientations_checked: u64,
    /// Present when a necessary condition failed.
    pub quick_reject: Option<NecessaryReport>,
    pub elapsed: Duration,
}

/// Searches every orientation of `g` for an (i,j)-step competitive one.
pub fn brute_force_orientable(g: &Graph, steps: StepPair, opts: &BruteForceOptions) -> Result<BruteForceResult> {
    let start = Instant::now();
    let cursor = OrientationCursor::new(g, opts.cap)?;
    let report = check_necessary(g, steps)?;
    let quick_reject = (!report.all_pass()).then_some(report);

    if quick_reject.is_some() && !opts.audit {
        return Ok(BruteForceResult {
            orientable: false,
            witness_mask: None,
            competitive_count: opts.count.then_some(0),
            orientations_checked: 0,
            quick_reject,
            elapsed: start.elapsed(),
        });
    }

    let (witness_mask, competitive_count) = if opts.count {
        let (first, count) = count_parallel(&cursor, steps, opts.jobs);
        (first, Some(count))
    } else {
        (first_parallel(&cursor, steps, opts.jobs), None)
    };
    Ok(BruteForceResult {
        orientable: witness_mask.is_some(),
        witness_mask,
        competitive_count,
        orientations_checked: witness_mask.map_or(cursor.total(), |m| m + 1),
        quick_reject,
        elapsed: start.elapsed(),
    })
}

fn is_competitive_mask(cursor: &OrientationCursor, steps: StepPair, mask: u64) -> bool {
    let d = cursor.decode(mask);
    // Every vertex of a nontrivial competitive digraph has out-degree >= 2.
    if d.vertex_count() >= 2 && (0..d.vertex_count()).any(|v| d.out_degree(v) < 2) {
        return false;
    }
    first_failing_pair(&d, steps).is_competitive()
}

/// Lowest competitive mask. Workers claim chunks in ascending order and skip
/// any chunk above the best mask found so far, so no lower mask is missed.
fn first_parallel(cursor: &OrientationCursor, steps: StepPair, jobs: usize) -> Option<u64> {
    let total = cursor.total();
    let next_chunk = AtomicU64::new(0);
    let best = AtomicU64::new(u64::MAX);
    let worker = || loop {
        let start = next_chunk.fetch_add(CHUNK, Ordering::Relaxed);
        if start >= total || start > best.load(Ordering::Relaxed) {
            break;
        }
        for mask in start..(start + CHUNK).min(total) {
            if mask > best.load(Ordering::Relaxed) {
                break;
            }
            if is_competitive_mask(cursor, steps, mask) {
                best.fetch_min(mask, Ordering::Relaxed);
                break;
            }
        }
    };
    run_workers(jobs, worker);
    let found = best.into_inner();
    (found != u64::MAX).then_some(found)
}

fn count_parallel(cursor: &OrientationCursor, steps: StepPair, jobs: usize) -> (Option<u64>, u64) {
    let total = cursor.total();
    let next_chunk = AtomicU64::new(0);
    let best = AtomicU64::new(u64::MAX);
    let count = AtomicU64::new(0);
    let worker = || loop {
        let start = next_chunk.fetch_add(CHUNK, Ordering::Relaxed);
        if start >= total {
            break;
        }
        let mut local = 0;
        for mask in start..(start + CHUNK).min(total) {
            if is_competitive_mask(cursor, steps, mask) {
                best.fetch_min(mask, Ordering::Relaxed);
                local += 1;
            }
        }
        count.fetch_add(local, Ordering::Relaxed);
    };
    run_workers(jobs, worker);
    let found = best.into_inner();
    ((found != u64::MAX).then_some(found), count.into_inner())
}

fn run_workers<F: Fn() + Sync>(jobs: usize, worker: F) {
    let jobs = jobs.max(1);
    if jobs == 1 {
        worker();
        return;
    }
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(&worker);
        }
    });
}

/// Counts competitive orientations over one mask sub-range, sequentially.
pub fn count_in_range(cursor: &OrientationCursor, steps: StepPair, masks: Range<u64>) -> u64 {
    let end = masks.end.min(cursor.total());
    (masks.start..end).filter(|&m| is_competitive_mask(cursor, steps, m)).count() as u64
}

/// Each unordered pair gets an arc with probability `p`, in a uniformly random
/// direction. Deterministic for a given `seed`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Contract(format!("arc probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// One row of the audit CSV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    pub partition: String,
    pub steps: String,
    pub orientable: bool,
    pub witness_mask: Option<u64>,
    pub orientations_checked: u64,
    pub elapsed_ms: u128,
    pub competitive_count: Option<u64>,
}

impl AuditRecord {
    pub fn new(partition: impl Into<String>, steps: StepPair, result: &BruteForceResult) -> Self {
        AuditRecord {
            partition: partition.into(),
            steps: steps.to_string(),
            orientable: result.orientable,
            witness_mask: result.witness_mask,
            orientations_checked: result.orientations_checked,
            elapsed_ms: result.elapsed.as_millis(),
            competitive_count: result.competitive_count,
        }
    }
}

pub const AUDIT_HEADER: [&str; 6] =
    ["partition", "steps", "orientable", "witness_mask", "orientations_checked", "elapsed_ms"];

/// Writes the header and one row per record. A trailing `competitive_count`
/// column is added when any record carries a count.
pub fn write_audit_csv<W: Write>(out: W, records: &[AuditRecord]) -> std::io::Result<()> {
    let counting = records.iter().any(|r| r.competitive_count.is_some());
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = AUDIT_HEADER.to_vec();
    if counting {
        header.push("competitive_count");
    }
    w.write_record(&header)?;
    for r in records {
        let mut row = vec![
            r.partition.clone(),
            r.steps.clone(),
            r.orientable.to_string(),
            r.witness_mask.map(|m| m.to_string()).unwrap_or_default(),
            r.orientations_checked.to_string(),
            r.elapsed_ms.to_string(),
        ];
        if counting {
            row.push(r.competitive_count.map(|c| c.to_string()).unwrap_or_default());
        }
        w.write_record(&row)?;
    }
    w.flush()
}
