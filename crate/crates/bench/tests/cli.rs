use std::path::Path;
use std::process::{Command, Output};

use sympauli::hamiltonian::read_raw_hamiltonian;
use sympauli::random::random_sum;
use sympauli::{group_greedy, group_greedy_parallel, write_hamiltonian, CommutationPartition, PauliRng, PauliSum};
use sympauli_bench::{read_csv, write_csv, BenchRecord, Category, Units};
use tempfile::TempDir;

fn sympauli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympauli"))
        .args(args)
        .output()
        .expect("spawn sympauli")
}

fn ok(args: &[&str]) -> String {
    let out = sympauli(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn quick_bench(category: &str, sizes: &str, out: &str) -> Vec<BenchRecord> {
    ok(&[
        "bench", category, "--qubits", "130", "--sizes", sizes, "--seed", "9", "--repeats", "1", "--warmups", "0",
        "--threads", "1", "--out", out,
    ]);
    read_csv(out).unwrap()
}

fn workload(records: &[BenchRecord]) -> Vec<BenchRecord> {
    records.iter().filter(|r| !r.units.is_timing()).cloned().collect()
}

#[test]
fn memory_bench_writes_csv() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "mem.csv");
    let records = quick_bench("memory", "10,100", &out);
    let header = std::fs::read_to_string(&out).unwrap();
    assert!(header.starts_with("category,variant,n,size,metric,value,units,seed\n"));
    // 130 qubits lands in the 4-word tier: two 32-byte bit vectors, a phase
    // byte and an 8-byte coefficient.
    let theory = records
        .iter()
        .find(|r| r.metric == "theoretical_bytes_per_term" && r.size == 100)
        .unwrap();
    assert_eq!(theory.value, 73.0);
    assert!(records
        .iter()
        .all(|r| r.category == Category::Memory && r.n == 130 && r.seed == 9));
}

#[test]
fn bench_workloads_are_deterministic() {
    let dir = TempDir::new().unwrap();
    for (category, sizes) in [("pair-mul", "50,80"), ("sum-mul", "6,9"), ("grouping", "40"), ("memory", "30")] {
        let a = quick_bench(category, sizes, &path(&dir, "a.csv"));
        let b = quick_bench(category, sizes, &path(&dir, "b.csv"));
        assert!(!workload(&a).is_empty(), "{category}");
        assert_eq!(workload(&a), workload(&b), "{category}");
        assert!(a.iter().filter(|r| r.units.is_timing()).all(|r| r.value >= 0.0));
    }
}

#[test]
fn sum_mul_counts_match_library() {
    let dir = TempDir::new().unwrap();
    let records = quick_bench("sum-mul", "7", &path(&dir, "s.csv"));
    let mut rng = PauliRng::new(9);
    let a: PauliSum<4> = rng.sum(130, 7).unwrap();
    let b: PauliSum<4> = rng.sum(130, 7).unwrap();
    let count = |m: &str| records.iter().find(|r| r.metric == m).unwrap().value;
    assert_eq!(count("raw_terms"), 49.0);
    assert_eq!(count("combined_terms"), a.multiply(&b).unwrap().len() as f64);
}

#[test]
fn csv_round_trip_is_lossless() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("r.csv");
    let records = vec![
        BenchRecord {
            category: Category::SumMul,
            variant: "aos".into(),
            n: 500,
            size: 25,
            metric: "multiply_time".into(),
            value: 0.1 + 0.2,
            units: Units::Ms,
            seed: u64::MAX,
        },
        BenchRecord {
            category: Category::Grouping,
            variant: "parallel-4".into(),
            n: 1,
            size: 0,
            metric: "groups".into(),
            value: 1e-300,
            units: Units::Count,
            seed: 0,
        },
    ];
    write_csv(&file, &records).unwrap();
    assert_eq!(read_csv(&file).unwrap(), records);
}

fn write_input(dir: &TempDir, name: &str, n: usize, m: usize, seed: u64) -> (String, PauliSum<1>) {
    let s: PauliSum<1> = random_sum(n, m, seed).unwrap();
    let p = path(dir, name);
    write_hamiltonian(&p, &s).unwrap();
    (p, s)
}

#[test]
fn group_matches_library() {
    let dir = TempDir::new().unwrap();
    let (input, s) = write_input(&dir, "h.txt", 6, 64, 3);
    let text = ok(&["group", "--in", &input]);
    assert_eq!(CommutationPartition::from_text(&text).unwrap(), group_greedy(&s));

    let out = path(&dir, "p.txt");
    ok(&["group", "--in", &input, "--parallel", "3", "--out", &out]);
    assert_eq!(CommutationPartition::read(&out).unwrap(), group_greedy_parallel(&s, 3));
}

#[test]
fn mul_matches_library() {
    let dir = TempDir::new().unwrap();
    let (a_path, a) = write_input(&dir, "a.txt", 5, 12, 1);
    let (b_path, b) = write_input(&dir, "b.txt", 5, 9, 2);
    let out = path(&dir, "ab.txt");
    ok(&["mul", "--a", &a_path, "--b", &b_path, "--out", &out]);
    let got = read_raw_hamiltonian(Path::new(&out)).unwrap().into_sum::<1>().unwrap();
    assert_eq!(got, a.multiply(&b).unwrap());
}

#[test]
fn compare_tables_sources() {
    let dir = TempDir::new().unwrap();
    let a = path(&dir, "a.csv");
    let b = path(&dir, "b.csv");
    quick_bench("memory", "10", &a);
    quick_bench("memory", "10", &b);
    let table = ok(&["compare", &a, &b]);
    let header = table.lines().next().unwrap();
    assert!(header.starts_with("category,metric,n,size,units"));
    assert!(header.contains(&format!("{a}:aos")) && header.contains(&format!("{b}:soa")));
    assert!(table.lines().any(|l| l.starts_with("memory,theoretical_bytes_per_term,130,10,bytes/term")));
}

#[test]
fn errors_exit_nonzero() {
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.txt");
    std::fs::write(&bad, "1.0 0.0 XIZ\n1.0 0.0 XI\n").unwrap();
    let cases: Vec<Vec<String>> = vec![
        vec!["group".into(), "--in".into(), bad.clone()],
        vec!["group".into(), "--in".into(), path(&dir, "missing.txt")],
        vec!["bench".into(), "memory".into(), "--qubits".into(), "5000".into()],
        vec!["bench".into(), "memory".into(), "--repeats".into(), "0".into()],
        vec![
            "bench".into(),
            "memory".into(),
            "--sizes".into(),
            "3".into(),
            "--out".into(),
            path(&dir, "no/such/dir/x.csv"),
        ],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = sympauli(&args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"), "{args:?}");
    }
    let out = sympauli(&["group", "--in", &bad]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn mul_rejects_mismatched_widths() {
    let dir = TempDir::new().unwrap();
    let (a, _) = write_input(&dir, "a.txt", 4, 3, 1);
    let (b, _) = write_input(&dir, "b.txt", 5, 3, 1);
    let out = sympauli(&["mul", "--a", &a, "--b", &b]);
    assert!(!out.status.success());
}
