#![allow(dead_code)]

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sympauli::{CliffordGate, Complex64, PauliString, PauliSum, PauliTerms};
use sympauli_oracle::{label_matrix, sum_matrix, DenseGate, Matrix};

pub const TOL: f64 = 1e-12;

pub struct Gen(ChaCha8Rng);

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }

    pub fn label(&mut self, n: usize) -> String {
        (0..n).map(|_| b"IXYZ"[self.below(4)] as char).collect()
    }

    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn coeff(&mut self) -> Complex64 {
        Complex64::new(2.0 * self.unit() - 1.0, 2.0 * self.unit() - 1.0)
    }

    pub fn sum(&mut self, n: usize, m: usize) -> PauliSum<1> {
        let entries: Vec<(Complex64, String)> = (0..m).map(|_| (self.coeff(), self.label(n))).collect();
        PauliSum::from_labels(n, entries).unwrap()
    }

    /// Two labels whose strings anti-commute.
    pub fn anticommuting_pair(&mut self, n: usize) -> (String, String) {
        loop {
            let (a, b) = (self.label(n), self.label(n));
            if !sympauli_oracle::strings_commute(&a, &b) {
                return (a, b);
            }
        }
    }
}

pub fn string_matrix<const W: usize>(p: &PauliString<W>) -> Matrix {
    label_matrix(&p.to_label(), p.phase().exponent())
}

pub fn dense<const W: usize, S: PauliTerms<W>>(s: &S) -> Matrix {
    let terms: Vec<(Complex64, String, u8)> = s
        .iter_terms()
        .map(|t| (t.coeff, t.string.to_label(), t.string.phase().exponent()))
        .collect();
    sum_matrix(s.num_qubits(), terms.iter().map(|(c, l, k)| (*c, l.as_str(), *k)))
}

pub fn dense_gate(g: CliffordGate) -> DenseGate {
    match g {
        CliffordGate::H(q) => DenseGate::H(q),
        CliffordGate::S(q) => DenseGate::S(q),
        CliffordGate::Cnot { control, target } => DenseGate::Cnot(control, target),
        CliffordGate::Cz(a, b) => DenseGate::Cz(a, b),
    }
}

pub fn all_labels(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| "IXYZ".chars().map(move |c| format!("{p}{c}")))
            .collect();
    }
    out
}
