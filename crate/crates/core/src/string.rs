//! Bit-packed Pauli strings.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{PauliError, Result};
use crate::gate::CliffordGate;
use crate::kernel;
use crate::phase::Phase;

/// Single-qubit Pauli letter with its `(x, z)` encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub const fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub const fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

/// An `n`-qubit Pauli operator `i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}`
/// packed into `W` words of X bits and `W` words of Z bits.
///
/// Qubit `q` lives at bit `q % 64` of word `q / 64`; qubit 0 is the leftmost
/// label character. Bits at positions `>= n` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString<const W: usize> {
    x: [u64; W],
    z: [u64; W],
    n: u32,
    phase: Phase,
}

pub type PauliString64 = PauliString<1>;
pub type PauliString128 = PauliString<2>;
pub type PauliString256 = PauliString<4>;
pub type PauliString512 = PauliString<8>;
pub type PauliString1024 = PauliString<16>;

impl<const W: usize> PauliString<W> {
    pub const CAPACITY: usize = 64 * W;

    pub(crate) fn check_qubits(n: usize) -> Result<()> {
        if n > Self::CAPACITY {
            Err(PauliError::Capacity {
                qubits: n,
                capacity: Self::CAPACITY,
            })
        } else {
            Ok(())
        }
    }

    pub fn identity(num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 {
            return Err(PauliError::EmptyLabel);
        }
        Self::check_qubits(num_qubits)?;
        Ok(Self::identity_unchecked(num_qubits))
    }

    #[inline]
    pub(crate) fn identity_unchecked(num_qubits: usize) -> Self {
        PauliString {
            x: [0; W],
            z: [0; W],
            n: num_qubits as u32,
            phase: Phase::ONE,
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::from_label_with_phase(label, Phase::ONE)
    }

    /// Parses a label of `I`/`X`/`Y`/`Z` characters, leftmost = qubit 0.
    pub fn from_label_with_phase(label: &str, phase: Phase) -> Result<Self> {
        let n = label.chars().count();
        if n == 0 {
            return Err(PauliError::EmptyLabel);
        }
        Self::check_qubits(n)?;
        let mut p = Self::identity_unchecked(n);
        for (q, c) in label.chars().enumerate() {
            let letter = Letter::from_char(c).ok_or(PauliError::InvalidLetter {
                position: q,
                found: c,
            })?;
            p.set_letter_unchecked(q, letter);
        }
        p.phase = phase;
        Ok(p)
    }

    /// Builds a string from raw words; bits beyond `num_qubits` must be clear.
    pub fn from_words(num_qubits: usize, x: [u64; W], z: [u64; W], phase: Phase) -> Result<Self> {
        if num_qubits == 0 {
            return Err(PauliError::EmptyLabel);
        }
        Self::check_qubits(num_qubits)?;
        let p = Self::from_words_unchecked(num_qubits, x, z, phase);
        if !p.padding_is_clear() {
            return Err(PauliError::Padding { num_qubits });
        }
        Ok(p)
    }

    #[inline]
    pub(crate) fn from_words_unchecked(num_qubits: usize, x: [u64; W], z: [u64; W], phase: Phase) -> Self {
        PauliString {
            x,
            z,
            n: num_qubits as u32,
            phase,
        }
    }

    /// True when every bit above qubit `n - 1` is zero in both bit vectors.
    pub fn padding_is_clear(&self) -> bool {
        let n = self.num_qubits();
        let last = (n - 1) / 64;
        let mask = kernel::tail_mask(n);
        (0..W).all(|w| {
            let allowed = match w.cmp(&last) {
                std::cmp::Ordering::Less => u64::MAX,
                std::cmp::Ordering::Equal => mask,
                std::cmp::Ordering::Greater => 0,
            };
            (self.x[w] | self.z[w]) & !allowed == 0
        })
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn phase(&self) -> Phase {
        self.phase
    }

    #[inline]
    pub fn set_phase(&mut self, phase: Phase) {
        self.phase = phase;
    }

    #[inline]
    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    #[inline]
    pub fn x_words(&self) -> &[u64; W] {
        &self.x
    }

    #[inline]
    pub fn z_words(&self) -> &[u64; W] {
        &self.z
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        assert!(qubit < self.num_qubits(), "qubit {qubit} out of range");
        let (w, m) = kernel::locate(qubit);
        Letter::from_bits(self.x[w] & m != 0, self.z[w] & m != 0)
    }

    pub fn set_letter(&mut self, qubit: usize, letter: Letter) -> Result<()> {
        if qubit >= self.num_qubits() {
            return Err(PauliError::QubitOutOfRange {
                qubit,
                num_qubits: self.num_qubits(),
            });
        }
        self.set_letter_unchecked(qubit, letter);
        Ok(())
    }

    fn set_letter_unchecked(&mut self, qubit: usize, letter: Letter) {
        let (w, m) = kernel::locate(qubit);
        let (x, z) = letter.bits();
        self.x[w] = if x { self.x[w] | m } else { self.x[w] & !m };
        self.z[w] = if z { self.z[w] | m } else { self.z[w] & !m };
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.num_qubits()).map(move |q| self.letter(q))
    }

    /// Letters only; the phase is returned by [`PauliString::phase`].
    pub fn to_label(&self) -> String {
        self.letters().map(Letter::as_char).collect()
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    pub fn is_identity_letters(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&w| w == 0)
    }

    fn check_same_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(PauliError::DimensionMismatch {
                left: self.num_qubits(),
                right: other.num_qubits(),
            });
        }
        Ok(())
    }

    /// Phase of the letter product `self * other`, ignoring both operands'
    /// own phases: `letters(self) * letters(other) = i^k * (letters XORed)`.
    pub fn product_phase(&self, other: &Self) -> Result<Phase> {
        self.check_same_size(other)?;
        Ok(self.product_phase_unchecked(other))
    }

    #[inline]
    pub(crate) fn product_phase_unchecked(&self, other: &Self) -> Phase {
        Phase::new(kernel::product_phase(&self.x, &self.z, &other.x, &other.z))
    }

    /// Operator product `self * other` with exact phase.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        Ok(self.multiply_unchecked(other))
    }

    #[inline]
    pub(crate) fn multiply_unchecked(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..W {
            out.x[w] ^= other.x[w];
            out.z[w] ^= other.z[w];
        }
        out.phase = self.phase + other.phase + self.product_phase_unchecked(other);
        out
    }

    /// `(popcount(a.x & b.z) + popcount(a.z & b.x)) mod 2`.
    pub fn symplectic_inner_product(&self, other: &Self) -> Result<u8> {
        self.check_same_size(other)?;
        Ok(self.anticommutes_unchecked(other) as u8)
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_same_size(other)?;
        Ok(!self.anticommutes_unchecked(other))
    }

    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &Self) -> bool {
        kernel::anticommute(&self.x, &self.z, &other.x, &other.z)
    }

    /// Conjugates in place: `self <- U self U^dagger`.
    pub fn apply_clifford(&mut self, gate: CliffordGate) -> Result<()> {
        gate.validate(self.num_qubits())?;
        self.apply_clifford_unchecked(gate);
        Ok(())
    }

    #[inline]
    pub(crate) fn apply_clifford_unchecked(&mut self, gate: CliffordGate) {
        let delta = apply_gate_words(&mut self.x, &mut self.z, gate);
        self.phase += Phase::new(delta);
    }

    pub fn conjugated(&self, gate: CliffordGate) -> Result<Self> {
        let mut out = *self;
        out.apply_clifford(gate)?;
        Ok(out)
    }
}

/// Conjugates one string's word arrays by an already validated gate;
/// returns the phase increment.
#[inline]
pub(crate) fn apply_gate_words(x: &mut [u64], z: &mut [u64], gate: CliffordGate) -> u8 {
    match gate {
        CliffordGate::H(q) => {
            let (w, m) = kernel::locate(q);
            kernel::hadamard(&mut x[w], &mut z[w], m)
        }
        CliffordGate::S(q) => {
            let (w, m) = kernel::locate(q);
            kernel::phase_gate(&mut x[w], &mut z[w], m)
        }
        CliffordGate::Cnot { control, target } => {
            apply_two_qubit(x, z, control, target, kernel::cnot_bits)
        }
        CliffordGate::Cz(a, b) => apply_two_qubit(x, z, a, b, kernel::cz_bits),
    }
}

type TwoQubitRule = fn(u64, u64, u64, u64) -> (u64, u64, u64, u64, u8);

#[inline]
fn apply_two_qubit(x: &mut [u64], z: &mut [u64], c: usize, t: usize, rule: TwoQubitRule) -> u8 {
    let (wc, bc) = (c / 64, c % 64);
    let (wt, bt) = (t / 64, t % 64);
    let get = |a: &[u64], w: usize, b: usize| (a[w] >> b) & 1;
    let (xc, zc, xt, zt, delta) = rule(get(x, wc, bc), get(z, wc, bc), get(x, wt, bt), get(z, wt, bt));
    let put = |a: &mut [u64], w: usize, b: usize, v: u64| a[w] = (a[w] & !(1 << b)) | (v << b);
    put(x, wc, bc, xc);
    put(z, wc, bc, zc);
    put(x, wt, bt, xt);
    put(z, wt, bt, zt);
    delta
}

impl<const W: usize> Mul for PauliString<W> {
    type Output = PauliString<W>;

    /// Panics on a qubit-count mismatch; use [`PauliString::multiply`] to
    /// get an error instead.
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs).expect("Pauli strings of different sizes")
    }
}

impl<const W: usize> Mul for &PauliString<W> {
    type Output = PauliString<W>;

    fn mul(self, rhs: Self) -> PauliString<W> {
        self.multiply(rhs).expect("Pauli strings of different sizes")
    }
}

impl<const W: usize> fmt::Display for PauliString<W> {
    /// Phase prefix (`""`, `"i"`, `"-"`, `"-i"`) followed by the letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase.exponent() {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}{}", self.to_label())
    }
}

impl<const W: usize> fmt::Debug for PauliString<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl<const W: usize> FromStr for PauliString<W> {
    type Err = PauliError;

    /// Accepts an optional phase prefix (`+`, `-`, `i`, `+i`, `-i`) before
    /// the letters.
    fn from_str(s: &str) -> Result<Self> {
        let (phase, rest) = if let Some(r) = s.strip_prefix("-i") {
            (Phase::MINUS_I, r)
        } else if let Some(r) = s.strip_prefix("+i") {
            (Phase::I, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (Phase::I, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (Phase::MINUS_ONE, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (Phase::ONE, r)
        } else {
            (Phase::ONE, s)
        };
        let offset = s.len() - rest.len();
        Self::from_label_with_phase(rest, phase).map_err(|e| match e {
            PauliError::InvalidLetter { position, found } => PauliError::InvalidLetter {
                position: position + offset,
                found,
            },
            e => e,
        })
    }
}
