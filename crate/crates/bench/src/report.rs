use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::config::Category;
use crate::record::{BenchRecord, Units};
use crate::stats::{flatness, loglog_slope};

/// `(size, value)` points for one variant and metric, in size order.
pub fn series(records: &[BenchRecord], category: Category, variant: &str, metric: &str) -> Vec<(usize, f64)> {
    let mut pts: Vec<(usize, f64)> = records
        .iter()
        .filter(|r| r.category == category && r.variant == variant && r.metric == metric)
        .map(|r| (r.size, r.value))
        .collect();
    pts.sort_by_key(|p| p.0);
    pts
}

/// Human-readable shape figures: flatness of per-product time and log-log
/// slope of multiply time against term count.
pub fn summarize(records: &[BenchRecord]) -> Vec<String> {
    let mut keys: Vec<(Category, &str, &str)> = records
        .iter()
        .filter(|r| r.units.is_timing())
        .map(|r| (r.category, r.variant.as_str(), r.metric.as_str()))
        .collect();
    keys.sort();
    keys.dedup();
    let mut lines = Vec::new();
    for (category, variant, metric) in keys {
        let pts = series(records, category, variant, metric);
        if pts.len() < 2 {
            continue;
        }
        match category {
            Category::PairMul => {
                let values: Vec<f64> = pts.iter().map(|p| p.1).collect();
                if let Some(f) = flatness(&values) {
                    lines.push(format!("{category} {variant} {metric}: max/min over sizes = {f:.3}"));
                }
            }
            Category::SumMul | Category::Grouping => {
                let xy: Vec<(f64, f64)> = pts.iter().map(|&(n, v)| (n as f64, v)).collect();
                if let Some(s) = loglog_slope(&xy) {
                    lines.push(format!("{category} {variant} {metric}: log-log slope vs size = {s:.3}"));
                }
            }
            Category::Memory => {}
        }
    }
    lines
}

/// Side-by-side table of several record sets, one column per
/// `source:variant`, one row per `(category, metric, n, size, units)`.
pub fn compare(sources: &[(String, Vec<BenchRecord>)]) -> String {
    type Row = (Category, String, usize, usize, Units);
    let mut columns: Vec<String> = Vec::new();
    let mut rows: BTreeMap<Row, BTreeMap<String, f64>> = BTreeMap::new();
    for (name, records) in sources {
        for r in records {
            let col = format!("{name}:{}", r.variant);
            if !columns.contains(&col) {
                columns.push(col.clone());
            }
            rows.entry((r.category, r.metric.clone(), r.n, r.size, r.units))
                .or_default()
                .insert(col, r.value);
        }
    }
    let mut out = String::from("category,metric,n,size,units");
    for c in &columns {
        let _ = write!(out, ",{c}");
    }
    out.push('\n');
    for ((category, metric, n, size, units), values) in rows {
        let _ = write!(out, "{category},{metric},{n},{size},{}", units.as_str());
        for c in &columns {
            match values.get(c) {
                Some(v) => {
                    let _ = write!(out, ",{v}");
                }
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    out
}
