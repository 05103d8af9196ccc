use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use crate::config::Category;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Units {
    #[serde(rename = "ns/op")]
    NsPerOp,
    #[serde(rename = "ms")]
    Ms,
    #[serde(rename = "bytes")]
    Bytes,
    #[serde(rename = "bytes/term")]
    BytesPerTerm,
    #[serde(rename = "count")]
    Count,
}

impl Units {
    pub fn as_str(self) -> &'static str {
        match self {
            Units::NsPerOp => "ns/op",
            Units::Ms => "ms",
            Units::Bytes => "bytes",
            Units::BytesPerTerm => "bytes/term",
            Units::Count => "count",
        }
    }

    /// Counts and byte figures describe the workload; the rest are timings.
    pub fn is_timing(self) -> bool {
        matches!(self, Units::NsPerOp | Units::Ms)
    }
}

/// One CSV row: `category,variant,n,size,metric,value,units,seed`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub category: Category,
    pub variant: String,
    pub n: usize,
    pub size: usize,
    pub metric: String,
    pub value: f64,
    pub units: Units,
    pub seed: u64,
}

pub fn write_csv_to(w: impl Write, records: &[BenchRecord]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in records {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_csv(path: impl AsRef<Path>, records: &[BenchRecord]) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).with_context(|| format!("cannot write {}", path.display()))?;
    write_csv_to(file, records)
}

pub fn read_csv_from(r: impl Read) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::Reader::from_reader(r);
    let mut out = Vec::new();
    for (i, row) in rdr.deserialize().enumerate() {
        out.push(row.with_context(|| format!("record {}", i + 1))?);
    }
    Ok(out)
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Vec<BenchRecord>> {
    let path = path.as_ref();
    let file = File::open(path).with_context(|| format!("cannot read {}", path.display()))?;
    read_csv_from(file)
}
