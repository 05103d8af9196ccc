use std::hint::black_box;
use std::mem::size_of;

use anyhow::{Context, Result};
use sympauli::{
    group_greedy, group_greedy_counted, group_greedy_parallel, theoretical_bytes_per_term,
    theoretical_bytes_per_term_complex, with_tier, PauliRng, PauliString, PauliSum, PauliSumSoA, PauliTerm,
};

use crate::alloc::measure_live;
use crate::config::{BenchConfig, Category};
use crate::record::{BenchRecord, Units};
use crate::timing::{millis, min_ns_per_op, min_time};

/// Operations per timed pair-mul sample.
const PAIR_MUL_BATCH: usize = 200_000;

struct Sink<'a> {
    cfg: &'a BenchConfig,
    out: Vec<BenchRecord>,
}

impl Sink<'_> {
    fn push(&mut self, variant: &str, size: usize, metric: &str, value: f64, units: Units) {
        self.out.push(BenchRecord {
            category: self.cfg.category,
            variant: variant.to_string(),
            n: self.cfg.qubits,
            size,
            metric: metric.to_string(),
            value,
            units,
            seed: self.cfg.seed,
        });
    }
}

/// Runs one benchmark category. Workloads depend only on the seed, qubit
/// count and size, so count and byte records are reproducible; timings are
/// the minimum over `repeats` after `warmups`.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let body = || with_tier!(cfg.qubits, W => run_tier::<W>(cfg));
    let records = if cfg.threads == 0 {
        body()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .context("building thread pool")?
            .install(body)
    }??;
    Ok(records)
}

fn run_tier<const W: usize>(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut sink = Sink { cfg, out: Vec::new() };
    for &size in &cfg.sizes {
        match cfg.category {
            Category::PairMul => pair_mul::<W>(&mut sink, size)?,
            Category::SumMul => sum_mul::<W>(&mut sink, size)?,
            Category::Grouping => grouping::<W>(&mut sink, size)?,
            Category::Memory => memory::<W>(&mut sink, size)?,
        }
    }
    Ok(sink.out)
}

fn operands<const W: usize>(cfg: &BenchConfig, size: usize) -> Result<(PauliSum<W>, PauliSum<W>)> {
    let mut rng = PauliRng::new(cfg.seed);
    let a = rng.sum(cfg.qubits, size)?;
    let b = rng.sum(cfg.qubits, size)?;
    Ok((a, b))
}

fn pair_mul<const W: usize>(sink: &mut Sink, pairs: usize) -> Result<()> {
    let cfg = sink.cfg;
    let (a, b) = operands::<W>(cfg, pairs)?;
    let xs: Vec<PauliString<W>> = a.terms().iter().map(|t| t.string).collect();
    let ys: Vec<PauliString<W>> = b.terms().iter().map(|t| t.string).collect();

    let mut out = xs.clone();
    let ns = min_ns_per_op(cfg.warmups, cfg.repeats, pairs, PAIR_MUL_BATCH, || {
        for ((o, x), y) in out.iter_mut().zip(&xs).zip(&ys) {
            *o = black_box(x) * y;
        }
        out.len()
    });
    sink.push("strings", pairs, "time_per_product", ns, Units::NsPerOp);

    let (sa, sb) = (a.to_soa(), b.to_soa());
    let ns = min_ns_per_op(cfg.warmups, cfg.repeats, pairs, PAIR_MUL_BATCH, || {
        sa.pair_multiply(&sb).map(|p| p.len())
    });
    sink.push("soa", pairs, "time_per_product", ns, Units::NsPerOp);

    let checksum = xs.iter().zip(&ys).map(|(x, y)| (x * y).weight()).sum::<usize>();
    sink.push("strings", pairs, "total_product_weight", checksum as f64, Units::Count);
    Ok(())
}

fn sum_mul<const W: usize>(sink: &mut Sink, terms: usize) -> Result<()> {
    let cfg = sink.cfg;
    let serial = cfg.threads == 1;
    let eps = cfg.eps;
    let (a, b) = operands::<W>(cfg, terms)?;

    // The outer product is timed into a reused, pre-allocated result so the
    // figure is the multiplication work rather than first-touch page faults.
    let mut buf = PauliSum::<W>::new(cfg.qubits)?;
    let t_outer = min_time(cfg.warmups, cfg.repeats, || {
        if serial {
            a.outer_product_into_serial(&b, &mut buf)
        } else {
            a.outer_product_into(&b, &mut buf)
        }
        .map(|()| buf.len())
    });
    let full = || {
        let mut p = if serial { a.outer_product_serial(&b) } else { a.outer_product(&b) }?;
        p.sort_and_combine(eps);
        Ok::<_, sympauli::PauliError>(p)
    };
    let product = full()?;
    let t_full = min_time(cfg.warmups, cfg.repeats, || full().map(|p| p.len()));
    sink.push("aos", terms, "outer_product_time", millis(t_outer), Units::Ms);
    sink.push("aos", terms, "multiply_time", millis(t_full), Units::Ms);

    let (sa, sb) = (a.to_soa(), b.to_soa());
    let mut buf = PauliSumSoA::<W>::new(cfg.qubits)?;
    let t_outer = min_time(cfg.warmups, cfg.repeats, || {
        if serial {
            sa.outer_product_into_serial(&sb, &mut buf)
        } else {
            sa.outer_product_into(&sb, &mut buf)
        }
        .map(|()| buf.len())
    });
    let full_soa = || {
        let mut p = if serial { sa.outer_product_serial(&sb) } else { sa.outer_product(&sb) }?;
        p.sort_and_combine(eps);
        Ok::<_, sympauli::PauliError>(p)
    };
    let t_full = min_time(cfg.warmups, cfg.repeats, || full_soa().map(|p| p.len()));
    sink.push("soa", terms, "outer_product_time", millis(t_outer), Units::Ms);
    sink.push("soa", terms, "multiply_time", millis(t_full), Units::Ms);

    sink.push("aos", terms, "raw_terms", (terms * terms) as f64, Units::Count);
    sink.push("aos", terms, "combined_terms", product.len() as f64, Units::Count);
    Ok(())
}

fn grouping<const W: usize>(sink: &mut Sink, terms: usize) -> Result<()> {
    let cfg = sink.cfg;
    let chunks = if cfg.threads == 0 {
        rayon::current_num_threads()
    } else {
        cfg.threads
    };
    let (s, _) = operands::<W>(cfg, terms)?;

    let (seq, checks) = group_greedy_counted(&s);
    let t = min_time(cfg.warmups, cfg.repeats, || group_greedy(&s).num_groups());
    sink.push("sequential", terms, "partition_time", millis(t), Units::Ms);
    sink.push("sequential", terms, "groups", seq.num_groups() as f64, Units::Count);
    sink.push("sequential", terms, "commutation_checks", checks as f64, Units::Count);

    let soa = s.to_soa();
    let t = min_time(cfg.warmups, cfg.repeats, || group_greedy(&soa).num_groups());
    sink.push("sequential-soa", terms, "partition_time", millis(t), Units::Ms);

    let variant = format!("parallel-{chunks}");
    let par = group_greedy_parallel(&s, chunks);
    let t = min_time(cfg.warmups, cfg.repeats, || group_greedy_parallel(&s, chunks).num_groups());
    sink.push(&variant, terms, "partition_time", millis(t), Units::Ms);
    sink.push(&variant, terms, "groups", par.num_groups() as f64, Units::Count);
    sink.push(&variant, terms, "same_as_sequential", f64::from(u8::from(par == seq)), Units::Count);
    Ok(())
}

fn memory<const W: usize>(sink: &mut Sink, terms: usize) -> Result<()> {
    let cfg = sink.cfg;
    let per = |bytes: f64| if terms == 0 { 0.0 } else { bytes / terms as f64 };

    sink.push("aos", terms, "theoretical_bytes_per_term", theoretical_bytes_per_term(W) as f64, Units::BytesPerTerm);
    sink.push(
        "aos",
        terms,
        "theoretical_bytes_per_term_complex",
        theoretical_bytes_per_term_complex(W) as f64,
        Units::BytesPerTerm,
    );
    sink.push("aos", terms, "struct_bytes_per_term", size_of::<PauliTerm<W>>() as f64, Units::BytesPerTerm);

    let (aos, live) = measure_live(|| PauliRng::new(cfg.seed).sum::<W>(cfg.qubits, terms));
    let aos = aos?;
    sink.push("aos", terms, "payload_bytes", aos.heap_bytes() as f64, Units::Bytes);
    sink.push("aos", terms, "payload_bytes_per_term", per(aos.heap_bytes() as f64), Units::BytesPerTerm);
    if let Some(live) = live {
        sink.push("aos", terms, "allocated_bytes_per_term", per(live.max(0) as f64), Units::BytesPerTerm);
    }

    sink.push(
        "soa",
        terms,
        "theoretical_bytes_per_term_complex",
        theoretical_bytes_per_term_complex(W) as f64,
        Units::BytesPerTerm,
    );
    let (soa, live) = measure_live(|| aos.to_soa());
    sink.push("soa", terms, "payload_bytes", soa.heap_bytes() as f64, Units::Bytes);
    sink.push("soa", terms, "payload_bytes_per_term", per(soa.heap_bytes() as f64), Units::BytesPerTerm);
    if let Some(live) = live {
        sink.push("soa", terms, "allocated_bytes_per_term", per(live.max(0) as f64), Units::BytesPerTerm);
    }
    black_box((aos, soa));
    Ok(())
}
