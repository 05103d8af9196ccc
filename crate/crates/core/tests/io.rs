mod common;

use common::Gen;
use sympauli::hamiltonian::{format_hamiltonian, parse_hamiltonian, read_raw_hamiltonian};
use sympauli::random::{random_string, random_sum};
use sympauli::{read_hamiltonian, write_hamiltonian, Complex64, PauliError, PauliRng, PauliSum, PauliSumSoA, Phase};

#[test]
fn write_read_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.txt");
    let s = random_sum::<8>(500, 100, 99).unwrap();
    write_hamiltonian(&path, &s).unwrap();
    let back: PauliSum<8> = read_hamiltonian(&path).unwrap();
    assert_eq!(back.len(), s.len());
    for (a, b) in back.terms().iter().zip(s.terms()) {
        assert_eq!(a.string, b.string);
        assert_eq!(a.coeff.re.to_bits(), b.coeff.re.to_bits());
        assert_eq!(a.coeff.im.to_bits(), b.coeff.im.to_bits());
    }
    let soa_path = dir.path().join("soa.txt");
    write_hamiltonian(&soa_path, &s.to_soa()).unwrap();
    assert_eq!(std::fs::read(&soa_path).unwrap(), std::fs::read(&path).unwrap());
}

#[test]
fn awkward_coefficients_round_trip() {
    let mut g = Gen::new(31);
    let mut entries: Vec<(Complex64, String)> = (0..200)
        .map(|_| {
            let scale = 10f64.powi(g.below(600) as i32 - 300);
            (g.coeff() * scale, g.label(3))
        })
        .collect();
    entries.push((Complex64::new(f64::MIN_POSITIVE / 8.0, -0.0), "XYZ".into()));
    entries.push((Complex64::new(f64::MAX, f64::MIN), "III".into()));
    let s = PauliSum::<1>::from_labels(3, entries).unwrap();
    let back: PauliSum<1> = parse_hamiltonian(&format_hamiltonian(&s)).unwrap().into_sum().unwrap();
    for (a, b) in back.terms().iter().zip(s.terms()) {
        assert_eq!(a.coeff.re.to_bits(), b.coeff.re.to_bits());
        assert_eq!(a.coeff.im.to_bits(), b.coeff.im.to_bits());
    }
}

#[test]
fn phases_are_folded_on_write() {
    let mut t = PauliSum::<1>::from_labels(1, [(Complex64::new(2.0, 0.5), "Y")]).unwrap().into_terms();
    t[0].string.set_phase(Phase::I);
    let s = PauliSum::from_terms(1, t).unwrap();
    let back: PauliSum<1> = parse_hamiltonian(&format_hamiltonian(&s)).unwrap().into_sum().unwrap();
    assert_eq!(back.terms()[0].coeff, Complex64::new(-0.5, 2.0));
    assert_eq!(back.terms()[0].string.phase(), Phase::ONE);
}

#[test]
fn errors_name_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "# two terms\n1 0 XX\n\n0.5 0 XYZ\n").unwrap();
    match read_hamiltonian::<1>(&path) {
        Err(PauliError::Parse { line: 4, .. }) => {}
        other => panic!("expected parse error at line 4, got {other:?}"),
    }
    assert!(matches!(
        read_raw_hamiltonian(dir.path().join("missing.txt")),
        Err(PauliError::Io(_))
    ));
    let wide = format!("1 0 {}\n", "Z".repeat(65));
    assert!(matches!(
        parse_hamiltonian(&wide).unwrap().into_sum::<1>(),
        Err(PauliError::Capacity { .. })
    ));
}

#[test]
fn single_line_file() {
    let s: PauliSum<1> = parse_hamiltonian("1.0 0.0 XIZ").unwrap().into_sum().unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!(s.num_qubits(), 3);
}

#[test]
fn generator_draw_order() {
    // Letters first in qubit order, then the coefficient.
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    let mut reference = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let s = random_sum::<1>(7, 3, 5).unwrap();
    for t in s.terms() {
        let label: String = (0..7)
            .map(|_| b"IXYZ"[(reference.next_u64() >> 62) as usize] as char)
            .collect();
        let u = (reference.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        assert_eq!(t.string.to_label(), label);
        assert_eq!(t.coeff, Complex64::new(2.0 * u - 1.0, 0.0));
    }
}

#[test]
fn generator_determinism_and_shape() {
    assert_eq!(random_string::<8>(500, 3).unwrap(), random_string::<8>(500, 3).unwrap());
    assert_eq!(random_sum::<1>(4, 10, 7).unwrap(), random_sum::<1>(4, 10, 7).unwrap());
    assert!(random_sum::<1>(4, 0, 7).unwrap().is_empty());
    let s = random_sum::<1>(3, 500, 7).unwrap();
    assert!(s.combined().len() <= 500);
    let p = random_string::<1>(64, 1).unwrap();
    assert_eq!((p.x_words().len(), p.z_words().len()), (1, 1));
    let soa: PauliSumSoA<2> = PauliRng::new(9).sum_soa(100, 20).unwrap();
    assert_eq!(soa.to_aos(), random_sum::<2>(100, 20, 9).unwrap());
}

#[test]
fn generator_letter_frequencies() {
    let s = random_sum::<16>(1000, 100, 77).unwrap();
    let mut counts = [0usize; 4];
    for t in s.terms() {
        for l in t.string.letters() {
            counts[l as usize] += 1;
        }
    }
    for c in counts {
        let f = c as f64 / 100_000.0;
        assert!((f - 0.25).abs() < 0.01, "{counts:?}");
    }
}
