//! Benchmark harness for `sympauli`: seeded workloads, min-of-repeats
//! timing, allocation counting and CSV records.

pub mod alloc;
pub mod config;
pub mod record;
pub mod report;
pub mod run;
pub mod stats;
pub mod timing;

pub use config::{BenchConfig, Category};
pub use record::{read_csv, write_csv, BenchRecord, Units};
pub use run::run_bench;
