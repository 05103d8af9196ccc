//! Greedy partitioning of a sum into groups of pairwise-commuting strings.
//!
//! A term joins a group only if it commutes with every member already in it
//! (general commutation, not qubit-wise). The sequential variant scans terms
//! in index order and picks the first compatible group in creation order.
//! The parallel variant runs the sequential scan on `T` contiguous chunks and
//! then merges the local groups into a global list in chunk order, appending
//! a local group to the first global group it fully commutes with.

use std::fmt;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{PauliError, Result};
use crate::kernel;
use crate::layout::PauliTerms;

/// Letter bits of one term, without phase or coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Row<const W: usize> {
    x: [u64; W],
    z: [u64; W],
}

impl<const W: usize> Row<W> {
    #[inline(always)]
    fn anticommutes(&self, other: &Row<W>) -> bool {
        kernel::anticommute(&self.x, &self.z, &other.x, &other.z)
    }
}

fn rows<const W: usize, S: PauliTerms<W>>(s: &S) -> Vec<Row<W>> {
    (0..s.len())
        .map(|t| {
            let p = s.string(t);
            Row {
                x: *p.x_words(),
                z: *p.z_words(),
            }
        })
        .collect()
}

/// Returns true if `cand` commutes with every row in `members`, counting
/// the checks performed. Four checks are interleaved per step with separate
/// accumulators; the first anti-commuting block ends the scan.
#[inline]
fn commutes_with_all<const W: usize>(cand: &Row<W>, members: &[Row<W>], checks: &mut u64) -> bool {
    let mut blocks = members.chunks_exact(4);
    for b in &mut blocks {
        let (mut a0, mut a1, mut a2, mut a3) = (0u64, 0u64, 0u64, 0u64);
        for w in 0..W {
            let (x, z) = (cand.x[w], cand.z[w]);
            a0 ^= kernel::symplectic_word(x, z, b[0].x[w], b[0].z[w]);
            a1 ^= kernel::symplectic_word(x, z, b[1].x[w], b[1].z[w]);
            a2 ^= kernel::symplectic_word(x, z, b[2].x[w], b[2].z[w]);
            a3 ^= kernel::symplectic_word(x, z, b[3].x[w], b[3].z[w]);
        }
        *checks += 4;
        let odd = (a0.count_ones() & 1) | (a1.count_ones() & 1) | (a2.count_ones() & 1) | (a3.count_ones() & 1);
        if odd != 0 {
            return false;
        }
    }
    for m in blocks.remainder() {
        *checks += 1;
        if cand.anticommutes(m) {
            return false;
        }
    }
    true
}

/// Groups of term indices with their rows kept alongside for contiguous
/// scanning.
struct Groups<const W: usize> {
    indices: Vec<Vec<usize>>,
    rows: Vec<Vec<Row<W>>>,
    checks: u64,
}

impl<const W: usize> Groups<W> {
    fn new() -> Self {
        Groups {
            indices: Vec::new(),
            rows: Vec::new(),
            checks: 0,
        }
    }

    fn first_fit(all: &[Row<W>], range: std::ops::Range<usize>) -> Self {
        let mut g = Groups::new();
        for t in range {
            let row = &all[t];
            let mut checks = 0;
            let slot = g.rows.iter().position(|members| commutes_with_all(row, members, &mut checks));
            g.checks += checks;
            match slot {
                Some(k) => {
                    g.indices[k].push(t);
                    g.rows[k].push(*row);
                }
                None => {
                    g.indices.push(vec![t]);
                    g.rows.push(vec![*row]);
                }
            }
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationPartition {
    groups: Vec<Vec<usize>>,
    source_len: usize,
}

impl CommutationPartition {
    /// Wraps explicit groups without checking them; see [`validate_partition`].
    pub fn from_groups(groups: Vec<Vec<usize>>, source_len: usize) -> Self {
        CommutationPartition { groups, source_len }
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn into_groups(self) -> Vec<Vec<usize>> {
        self.groups
    }

    pub fn num_groups(&self) -> usize {
        self.groups.len()
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    /// One group per line, indices separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.groups {
            let line: Vec<String> = g.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Blank lines are skipped;
    /// `source_len` is taken as one past the largest index.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut groups = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let g = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|e| PauliError::Parse {
                        line: i + 1,
                        message: format!("bad index {tok:?}: {e}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            groups.push(g);
        }
        let source_len = groups.iter().flatten().max().map_or(0, |m| m + 1);
        Ok(CommutationPartition { groups, source_len })
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }
}

/// Sequential first-fit greedy grouping.
pub fn group_greedy<const W: usize, S: PauliTerms<W>>(s: &S) -> CommutationPartition {
    group_greedy_counted(s).0
}

/// [`group_greedy`] plus the number of pairwise commutation checks made.
pub fn group_greedy_counted<const W: usize, S: PauliTerms<W>>(s: &S) -> (CommutationPartition, u64) {
    let all = rows(s);
    let g = Groups::first_fit(&all, 0..all.len());
    (
        CommutationPartition {
            groups: g.indices,
            source_len: all.len(),
        },
        g.checks,
    )
}

/// Two-phase grouping over `chunks` contiguous index ranges. `chunks == 0` is
/// treated as 1. Deterministic for a fixed input and chunk count; with one
/// chunk the result equals [`group_greedy`].
pub fn group_greedy_parallel<const W: usize, S: PauliTerms<W>>(s: &S, chunks: usize) -> CommutationPartition {
    let all = rows(s);
    let m = all.len();
    let chunks = chunks.max(1);
    let locals: Vec<Groups<W>> = (0..chunks)
        .into_par_iter()
        .map(|c| Groups::first_fit(&all, c * m / chunks..(c + 1) * m / chunks))
        .collect();

    let mut global = Groups::<W>::new();
    for local in locals {
        for (idx, members) in local.indices.into_iter().zip(local.rows) {
            let mut checks = 0;
            let slot = global
                .rows
                .iter()
                .position(|g| members.iter().all(|r| commutes_with_all(r, g, &mut checks)));
            match slot {
                Some(k) => {
                    global.indices[k].extend(idx);
                    global.rows[k].extend(members);
                }
                None => {
                    global.indices.push(idx);
                    global.rows.push(members);
                }
            }
        }
    }
    CommutationPartition {
        groups: global.indices,
        source_len: m,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionViolation {
    /// The partition was built for a sum of a different length.
    SourceLength { expected: usize, found: usize },
    IndexOutOfRange(usize),
    Duplicate(usize),
    Missing(usize),
    /// Two members of one group anti-commute.
    Anticommuting { group: usize, a: usize, b: usize },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::SourceLength { expected, found } => {
                write!(f, "partition covers {found} terms, sum has {expected}")
            }
            PartitionViolation::IndexOutOfRange(i) => write!(f, "index {i} out of range"),
            PartitionViolation::Duplicate(i) => write!(f, "index {i} appears twice"),
            PartitionViolation::Missing(i) => write!(f, "index {i} not covered"),
            PartitionViolation::Anticommuting { group, a, b } => {
                write!(f, "terms {a} and {b} in group {group} anti-commute")
            }
        }
    }
}

/// Checks disjointness, completeness and in-group commutation by direct
/// symplectic products. Returns the first violation found.
pub fn validate_partition<const W: usize, S: PauliTerms<W>>(
    s: &S,
    p: &CommutationPartition,
) -> std::result::Result<(), PartitionViolation> {
    let m = s.len();
    if p.source_len != m {
        return Err(PartitionViolation::SourceLength {
            expected: m,
            found: p.source_len,
        });
    }
    let mut seen = vec![false; m];
    for &i in p.groups.iter().flatten() {
        if i >= m {
            return Err(PartitionViolation::IndexOutOfRange(i));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(PartitionViolation::Duplicate(i));
        }
    }
    if let Some(i) = seen.iter().position(|&v| !v) {
        return Err(PartitionViolation::Missing(i));
    }
    for (gi, g) in p.groups.iter().enumerate() {
        for (k, &a) in g.iter().enumerate() {
            let pa = s.string(a);
            for &b in &g[k + 1..] {
                if pa.anticommutes_unchecked(&s.string(b)) {
                    return Err(PartitionViolation::Anticommuting { group: gi, a, b });
                }
            }
        }
    }
    Ok(())
}
