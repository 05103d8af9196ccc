use std::fmt;
use std::path::PathBuf;

use anyhow::{ensure, Result};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use sympauli::Tier;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    /// Term-by-term products of two equal-length lists of strings.
    PairMul,
    /// Product of two sums: the outer product alone and followed by
    /// sort-and-combine.
    SumMul,
    /// Commutation grouping, sequential and chunked.
    Grouping,
    /// Bytes per stored term.
    Memory,
}

impl Category {
    pub fn as_str(self) -> &'static str {
        match self {
            Category::PairMul => "pair-mul",
            Category::SumMul => "sum-mul",
            Category::Grouping => "grouping",
            Category::Memory => "memory",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub category: Category,
    pub qubits: usize,
    /// Pair counts for `pair-mul`, term counts otherwise.
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub repeats: usize,
    pub warmups: usize,
    /// Worker threads; 0 uses the rayon default. For grouping this is also
    /// the chunk count of the parallel variant.
    pub threads: usize,
    /// Combine threshold for `sum-mul`.
    pub eps: f64,
    pub out: Option<PathBuf>,
}

impl BenchConfig {
    pub fn new(category: Category) -> Self {
        BenchConfig {
            category,
            qubits: 500,
            sizes: default_sizes(category),
            seed: 42,
            repeats: 5,
            warmups: 3,
            threads: 0,
            eps: 0.0,
            out: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        ensure!(!self.sizes.is_empty(), "at least one size is required");
        ensure!(self.repeats >= 1, "repeats must be at least 1");
        ensure!(self.qubits >= 1, "qubit count must be positive");
        ensure!(
            self.qubits <= Tier::MAX_QUBITS,
            "{} qubits exceeds the largest tier ({})",
            self.qubits,
            Tier::MAX_QUBITS
        );
        ensure!(self.eps.is_finite() && self.eps >= 0.0, "eps must be finite and non-negative");
        Ok(())
    }
}

pub fn default_sizes(category: Category) -> Vec<usize> {
    match category {
        Category::PairMul => vec![100, 1000, 10_000],
        Category::SumMul => vec![25, 50, 100, 200],
        Category::Grouping => vec![100, 500, 1000],
        Category::Memory => vec![1000, 10_000],
    }
}
