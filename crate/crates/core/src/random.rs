//! Seeded random instances.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64`. Draw order per
//! term: one `u64` per qubit in ascending qubit order, whose top two bits
//! index `"IXYZ"`, then one `u64` for the real part of the coefficient,
//! `((u >> 11) * 2^-53) * 2 - 1`, uniform on `[-1, 1)`. Imaginary parts are
//! zero and phases `+1`.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::phase::Phase;
use crate::soa::PauliSumSoA;
use crate::string::{Letter, PauliString};
use crate::sum::PauliSum;
use crate::term::PauliTerm;

const LETTERS: [Letter; 4] = [Letter::I, Letter::X, Letter::Y, Letter::Z];

pub struct PauliRng {
    rng: ChaCha8Rng,
}

impl PauliRng {
    pub fn new(seed: u64) -> Self {
        PauliRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn letter(&mut self) -> Letter {
        LETTERS[(self.rng.next_u64() >> 62) as usize]
    }

    /// Uniform on `[-1, 1)`.
    pub fn unit_real(&mut self) -> f64 {
        let u = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        2.0 * u - 1.0
    }

    pub fn string<const W: usize>(&mut self, num_qubits: usize) -> Result<PauliString<W>> {
        let mut p = PauliString::identity(num_qubits)?;
        for q in 0..num_qubits {
            let l = self.letter();
            p.set_letter(q, l)?;
        }
        Ok(p.with_phase(Phase::ONE))
    }

    pub fn term<const W: usize>(&mut self, num_qubits: usize) -> Result<PauliTerm<W>> {
        let string = self.string(num_qubits)?;
        let coeff = Complex64::new(self.unit_real(), 0.0);
        Ok(PauliTerm { coeff, string })
    }

    /// `len` independent terms; duplicates are possible.
    pub fn sum<const W: usize>(&mut self, num_qubits: usize, len: usize) -> Result<PauliSum<W>> {
        let mut s = PauliSum::with_capacity(num_qubits, len)?;
        for _ in 0..len {
            s.push(self.term(num_qubits)?)?;
        }
        Ok(s)
    }

    pub fn sum_soa<const W: usize>(&mut self, num_qubits: usize, len: usize) -> Result<PauliSumSoA<W>> {
        Ok(self.sum::<W>(num_qubits, len)?.to_soa())
    }
}

pub fn random_string<const W: usize>(num_qubits: usize, seed: u64) -> Result<PauliString<W>> {
    PauliRng::new(seed).string(num_qubits)
}

pub fn random_sum<const W: usize>(num_qubits: usize, len: usize, seed: u64) -> Result<PauliSum<W>> {
    PauliRng::new(seed).sum(num_qubits, len)
}
