use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use sympauli::hamiltonian::{format_hamiltonian, read_raw_hamiltonian, RawHamiltonian};
use sympauli::{group_greedy, group_greedy_parallel, validate_partition, with_tier, PauliSum};
use sympauli_bench::alloc::CountingAlloc;
use sympauli_bench::config::default_sizes;
use sympauli_bench::record::write_csv_to;
use sympauli_bench::report::{compare, summarize};
use sympauli_bench::{read_csv, run_bench, write_csv, BenchConfig, Category};

#[global_allocator]
static ALLOC: CountingAlloc = CountingAlloc;

#[derive(Parser)]
#[command(name = "sympauli", version, about = "Pauli-string algebra benchmarks and tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time one benchmark category and write CSV records.
    Bench {
        category: Category,
        #[arg(long, default_value_t = 500)]
        qubits: usize,
        /// Comma-separated sizes; defaults depend on the category.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 3)]
        warmups: usize,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition a Hamiltonian file into mutually commuting groups.
    Group {
        #[arg(long = "in")]
        input: PathBuf,
        /// Chunk count for the two-phase parallel grouping; sequential when omitted.
        #[arg(long)]
        parallel: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multiply two Hamiltonian files.
    Mul {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
    },
    /// Side-by-side table of CSV files in the bench schema.
    Compare {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Bench {
            category,
            qubits,
            sizes,
            seed,
            repeats,
            warmups,
            threads,
            eps,
            out,
        } => {
            let cfg = BenchConfig {
                category,
                qubits,
                sizes: if sizes.is_empty() { default_sizes(category) } else { sizes },
                seed,
                repeats,
                warmups,
                threads,
                eps,
                out,
            };
            let records = run_bench(&cfg)?;
            match &cfg.out {
                Some(path) => write_csv(path, &records)?,
                None => write_csv_to(io::stdout().lock(), &records)?,
            }
            for line in summarize(&records) {
                eprintln!("{line}");
            }
        }
        Command::Group { input, parallel, out } => {
            let raw = read_raw_hamiltonian(&input).with_context(|| format!("reading {}", input.display()))?;
            let text = with_tier!(raw.num_qubits, W => group_raw::<W>(raw, parallel))??;
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Mul { a, b, out, eps } => {
            let ra = read_raw_hamiltonian(&a).with_context(|| format!("reading {}", a.display()))?;
            let rb = read_raw_hamiltonian(&b).with_context(|| format!("reading {}", b.display()))?;
            if ra.num_qubits != rb.num_qubits {
                bail!("{} has {} qubits but {} has {}", a.display(), ra.num_qubits, b.display(), rb.num_qubits);
            }
            let product = with_tier!(ra.num_qubits, W => mul_raw::<W>(ra, rb, eps))??;
            match out {
                Some(path) => std::fs::write(&path, product).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{product}"),
            }
        }
        Command::Compare { files } => {
            let sources = files
                .iter()
                .map(|f| Ok((f.display().to_string(), read_csv(f)?)))
                .collect::<Result<Vec<_>>>()?;
            print!("{}", compare(&sources));
        }
    }
    Ok(())
}

fn group_raw<const W: usize>(raw: RawHamiltonian, parallel: Option<usize>) -> Result<String> {
    let s: PauliSum<W> = raw.into_sum()?;
    let p = match parallel {
        Some(t) => group_greedy_parallel(&s, t),
        None => group_greedy(&s),
    };
    if let Err(v) = validate_partition(&s, &p) {
        bail!("invalid partition: {v}");
    }
    eprintln!("{} terms in {} groups", s.len(), p.num_groups());
    Ok(p.to_text())
}

fn mul_raw<const W: usize>(a: RawHamiltonian, b: RawHamiltonian, eps: f64) -> Result<String> {
    let sa: PauliSum<W> = a.into_sum()?;
    let sb: PauliSum<W> = b.into_sum()?;
    let mut p = sa.outer_product(&sb)?;
    p.sort_and_combine(eps);
    Ok(format_hamiltonian(&p))
}
