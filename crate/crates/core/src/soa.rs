//! Struct-of-arrays Pauli sums.
//!
//! For a sum of `M` terms the layout keeps `W` contiguous arrays of `M`
//! X words, `W` arrays of `M` Z words, one array of `M` flags bytes and one
//! of `M` coefficients. A single-qubit gate on qubit `q` walks only the two
//! arrays at word index `q / 64` plus the flags, and the word loops in the
//! multiply kernels run over independent elements.

use std::array;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::combine::{below_threshold, merge_runs};
use crate::error::Result;
use crate::gate::CliffordGate;
use crate::kernel;
use crate::layout::PauliTerms;
use crate::phase::Phase;
use crate::rotation::{rotation_factors, split_anticommuting, RotationSpec};
use crate::string::PauliString;
use crate::sum::{check_dims, check_sum_qubits, PauliSum};
use crate::term::{check_finite, CanonicalKey, PauliTerm};

#[derive(Clone, Debug, PartialEq)]
pub struct PauliSumSoA<const W: usize> {
    n: usize,
    x: [Vec<u64>; W],
    z: [Vec<u64>; W],
    flags: Vec<u8>,
    coeffs: Vec<Complex64>,
}

/// Mutable view of one output block of an outer product.
struct BlockMut<'a, const W: usize> {
    x: [&'a mut [u64]; W],
    z: [&'a mut [u64]; W],
    flags: &'a mut [u8],
    coeffs: &'a mut [Complex64],
}

impl<const W: usize> PauliSumSoA<W> {
    pub fn new(num_qubits: usize) -> Result<Self> {
        check_sum_qubits::<W>(num_qubits)?;
        Ok(Self::empty_unchecked(num_qubits, 0))
    }

    fn empty_unchecked(n: usize, capacity: usize) -> Self {
        PauliSumSoA {
            n,
            x: array::from_fn(|_| Vec::with_capacity(capacity)),
            z: array::from_fn(|_| Vec::with_capacity(capacity)),
            flags: Vec::with_capacity(capacity),
            coeffs: Vec::with_capacity(capacity),
        }
    }

    fn zeroed_unchecked(n: usize, len: usize) -> Self {
        PauliSumSoA {
            n,
            x: array::from_fn(|_| vec![0; len]),
            z: array::from_fn(|_| vec![0; len]),
            flags: vec![0; len],
            coeffs: vec![Complex64::new(0.0, 0.0); len],
        }
    }

    pub fn with_capacity(num_qubits: usize, capacity: usize) -> Result<Self> {
        check_sum_qubits::<W>(num_qubits)?;
        Ok(Self::empty_unchecked(num_qubits, capacity))
    }

    pub fn from_labels<C, S>(num_qubits: usize, entries: impl IntoIterator<Item = (C, S)>) -> Result<Self>
    where
        C: Into<Complex64>,
        S: AsRef<str>,
    {
        let mut s = Self::new(num_qubits)?;
        for (c, label) in entries {
            s.push(PauliTerm::from_label(c.into(), label.as_ref())?)?;
        }
        Ok(s)
    }

    pub fn push(&mut self, term: PauliTerm<W>) -> Result<()> {
        check_dims(self.n, term.string.num_qubits())?;
        check_finite(term.coeff)?;
        self.push_unchecked(&term);
        Ok(())
    }

    #[inline]
    fn push_unchecked(&mut self, term: &PauliTerm<W>) {
        let (xs, zs) = (term.string.x_words(), term.string.z_words());
        for w in 0..W {
            self.x[w].push(xs[w]);
            self.z[w].push(zs[w]);
        }
        self.flags.push(term.string.phase().exponent());
        self.coeffs.push(term.coeff);
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of word arrays per bit plane. Arrays past `ceil(n / 64)` stay
    /// zero.
    pub const fn word_count(&self) -> usize {
        W
    }

    /// The `M` X words at word index `w`.
    pub fn x_words(&self, w: usize) -> &[u64] {
        &self.x[w]
    }

    pub fn z_words(&self, w: usize) -> &[u64] {
        &self.z[w]
    }

    /// Flags bytes; each holds a phase exponent `k = 2s + m`.
    pub fn flags(&self) -> &[u8] {
        &self.flags
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn string_at(&self, t: usize) -> PauliString<W> {
        PauliString::from_words_unchecked(
            self.n,
            array::from_fn(|w| self.x[w][t]),
            array::from_fn(|w| self.z[w][t]),
            Phase::new(self.flags[t]),
        )
    }

    fn key_at(&self, t: usize) -> CanonicalKey<W> {
        CanonicalKey::from_words(array::from_fn(|w| self.x[w][t]), array::from_fn(|w| self.z[w][t]))
    }

    /// Same contract as [`PauliSum::sort_and_combine`].
    pub fn sort_and_combine(&mut self, eps: f64) {
        let mut out = Self::empty_unchecked(self.n, self.len());
        merge_runs(
            self.len(),
            |t| self.z[0][t],
            |t| self.key_at(t),
            |t| Phase::new(self.flags[t]).apply(self.coeffs[t]),
            eps,
            |t, coeff| {
                for w in 0..W {
                    out.x[w].push(self.x[w][t]);
                    out.z[w].push(self.z[w][t]);
                }
                out.flags.push(0);
                out.coeffs.push(coeff);
            },
        );
        *self = out;
    }

    pub fn combined(mut self) -> Self {
        self.sort_and_combine(0.0);
        self
    }

    pub fn is_canonical(&self) -> bool {
        self.flags.iter().all(|&f| f == 0)
            && self.coeffs.iter().all(|c| *c != Complex64::new(0.0, 0.0))
            && (1..self.len()).all(|t| self.key_at(t - 1) < self.key_at(t))
    }

    /// Drops terms with `|coeff| < eps`, and exact zeros, keeping order.
    pub fn truncate(&mut self, eps: f64) {
        let keep: Vec<bool> = self.coeffs.iter().map(|&c| !below_threshold(c, eps)).collect();
        let retain = |v: &mut Vec<u64>| {
            let mut it = keep.iter();
            v.retain(|_| *it.next().unwrap());
        };
        for w in 0..W {
            retain(&mut self.x[w]);
            retain(&mut self.z[w]);
        }
        let mut it = keep.iter();
        self.flags.retain(|_| *it.next().unwrap());
        let mut it = keep.iter();
        self.coeffs.retain(|_| *it.next().unwrap());
    }

    /// All `|self| * |other|` products, uncombined, in the same order as
    /// [`PauliSum::outer_product`]. Blocks for different right-hand terms
    /// are filled in parallel.
    pub fn outer_product(&self, other: &Self) -> Result<Self> {
        self.outer_product_impl(other, true)
    }

    pub fn outer_product_serial(&self, other: &Self) -> Result<Self> {
        self.outer_product_impl(other, false)
    }

    /// [`outer_product`](Self::outer_product) written into `out`, reusing its
    /// allocation.
    pub fn outer_product_into(&self, other: &Self, out: &mut Self) -> Result<()> {
        self.outer_product_fill(other, out, true)
    }

    pub fn outer_product_into_serial(&self, other: &Self, out: &mut Self) -> Result<()> {
        self.outer_product_fill(other, out, false)
    }

    fn outer_product_impl(&self, other: &Self, parallel: bool) -> Result<Self> {
        let mut out = Self::empty_unchecked(self.n, 0);
        self.outer_product_fill(other, &mut out, parallel)?;
        Ok(out)
    }

    fn outer_product_fill(&self, other: &Self, out: &mut Self, parallel: bool) -> Result<()> {
        check_dims(self.n, other.n)?;
        let na = self.len();
        let len = if other.is_empty() { 0 } else { na * other.len() };
        out.n = self.n;
        for v in out.x.iter_mut().chain(out.z.iter_mut()) {
            v.clear();
            v.resize(len, 0);
        }
        out.flags.clear();
        out.flags.resize(len, 0);
        out.coeffs.clear();
        out.coeffs.resize(len, Complex64::new(0.0, 0.0));
        if len == 0 {
            return Ok(());
        }
        let blocks = out.blocks_mut(na);
        if parallel {
            blocks
                .into_par_iter()
                .enumerate()
                .for_each(|(j, blk)| self.fill_block(blk, &other.term(j)));
        } else {
            for (j, blk) in blocks.into_iter().enumerate() {
                self.fill_block(blk, &other.term(j));
            }
        }
        Ok(())
    }

    fn blocks_mut(&mut self, block_len: usize) -> Vec<BlockMut<'_, W>> {
        let mut xs: Vec<_> = self.x.iter_mut().map(|v| v.chunks_mut(block_len)).collect();
        let mut zs: Vec<_> = self.z.iter_mut().map(|v| v.chunks_mut(block_len)).collect();
        self.flags
            .chunks_mut(block_len)
            .zip(self.coeffs.chunks_mut(block_len))
            .map(|(flags, coeffs)| BlockMut {
                x: array::from_fn(|w| xs[w].next().expect("block count")),
                z: array::from_fn(|w| zs[w].next().expect("block count")),
                flags,
                coeffs,
            })
            .collect()
    }

    /// Writes `a_i * b` for every left term `i` into one block.
    fn fill_block(&self, blk: BlockMut<'_, W>, b: &PauliTerm<W>) {
        let b_phase = b.string.phase().exponent();
        for (f, &a) in blk.flags.iter_mut().zip(&self.flags) {
            *f = a.wrapping_add(b_phase);
        }
        let (bxs, bzs) = (b.string.x_words(), b.string.z_words());
        let len = blk.flags.len();
        let (mut c1, mut c2) = (vec![0u64; len], vec![0u64; len]);
        for (w, (ox, oz)) in blk.x.into_iter().zip(blk.z).enumerate() {
            let (bx, bz) = (bxs[w], bzs[w]);
            let (ax, az) = (&self.x[w], &self.z[w]);
            for i in 0..len {
                let (xa, za) = (ax[i], az[i]);
                ox[i] = xa ^ bx;
                oz[i] = za ^ bz;
                kernel::phase_step(&mut c1[i], &mut c2[i], xa, za, bx, bz);
            }
        }
        for (i, f) in blk.flags.iter_mut().enumerate() {
            *f = f.wrapping_add(kernel::phase_total(c1[i], c2[i])) & 3;
        }
        for (c, a) in blk.coeffs.iter_mut().zip(&self.coeffs) {
            *c = a * b.coeff;
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        Ok(self.outer_product(other)?.combined())
    }

    pub fn multiply_serial(&self, other: &Self) -> Result<Self> {
        Ok(self.outer_product_serial(other)?.combined())
    }

    /// Term-wise products `a_t * b_t` of two equal-length sums.
    pub fn pair_multiply(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        check_dims(self.len(), other.len())?;
        let m = self.len();
        let mut out = Self::zeroed_unchecked(self.n, m);
        for i in 0..m {
            out.flags[i] = self.flags[i].wrapping_add(other.flags[i]);
        }
        let (mut c1, mut c2) = (vec![0u64; m], vec![0u64; m]);
        for w in 0..W {
            let (ax, az, bx, bz) = (&self.x[w], &self.z[w], &other.x[w], &other.z[w]);
            let (ox, oz) = (&mut out.x[w], &mut out.z[w]);
            for i in 0..m {
                ox[i] = ax[i] ^ bx[i];
                oz[i] = az[i] ^ bz[i];
                kernel::phase_step(&mut c1[i], &mut c2[i], ax[i], az[i], bx[i], bz[i]);
            }
        }
        for i in 0..m {
            out.flags[i] = out.flags[i].wrapping_add(kernel::phase_total(c1[i], c2[i])) & 3;
            out.coeffs[i] = self.coeffs[i] * other.coeffs[i];
        }
        Ok(out)
    }

    /// Conjugates every term in place. Only the word arrays holding the
    /// gate's qubits and the flags are touched.
    pub fn apply_clifford(&mut self, gate: CliffordGate) -> Result<()> {
        gate.validate(self.n)?;
        match gate {
            CliffordGate::H(q) => self.single_qubit(q, kernel::hadamard),
            CliffordGate::S(q) => self.single_qubit(q, kernel::phase_gate),
            CliffordGate::Cnot { control, target } => self.two_qubit(control, target, kernel::cnot_bits),
            CliffordGate::Cz(a, b) => self.two_qubit(a, b, kernel::cz_bits),
        }
        Ok(())
    }

    fn single_qubit(&mut self, q: usize, rule: fn(&mut u64, &mut u64, u64) -> u8) {
        let (w, mask) = kernel::locate(q);
        let cols = self.x[w].iter_mut().zip(self.z[w].iter_mut());
        for ((x, z), f) in cols.zip(self.flags.iter_mut()) {
            *f = (*f + rule(x, z, mask)) & 3;
        }
    }

    fn two_qubit(&mut self, c: usize, t: usize, rule: fn(u64, u64, u64, u64) -> (u64, u64, u64, u64, u8)) {
        let (wc, bc) = (c / 64, c % 64);
        let (wt, bt) = (t / 64, t % 64);
        let set = |word: u64, bit: usize, v: u64| (word & !(1 << bit)) | (v << bit);
        if wc == wt {
            let (xs, zs) = (&mut self.x[wc], &mut self.z[wc]);
            for i in 0..self.flags.len() {
                let (x, z) = (xs[i], zs[i]);
                let (xc, zc, xt, zt, d) = rule((x >> bc) & 1, (z >> bc) & 1, (x >> bt) & 1, (z >> bt) & 1);
                xs[i] = set(set(x, bc, xc), bt, xt);
                zs[i] = set(set(z, bc, zc), bt, zt);
                self.flags[i] = (self.flags[i] + d) & 3;
            }
        } else {
            let (xcs, xts) = pair_mut(&mut self.x, wc, wt);
            let (zcs, zts) = pair_mut(&mut self.z, wc, wt);
            for i in 0..self.flags.len() {
                let (xc, zc, xt, zt, d) = rule(
                    (xcs[i] >> bc) & 1,
                    (zcs[i] >> bc) & 1,
                    (xts[i] >> bt) & 1,
                    (zts[i] >> bt) & 1,
                );
                xcs[i] = set(xcs[i], bc, xc);
                zcs[i] = set(zcs[i], bc, zc);
                xts[i] = set(xts[i], bt, xt);
                zts[i] = set(zts[i], bt, zt);
                self.flags[i] = (self.flags[i] + d) & 3;
            }
        }
    }

    /// Image under the rotation before combining: at most `2 * len()` terms.
    pub fn apply_rotation_raw(&self, rotation: &RotationSpec<W>) -> Result<Self> {
        let generator = rotation.generator();
        check_dims(self.n, generator.num_qubits())?;
        let m = self.len();
        let mut parity = vec![0u64; m];
        for w in 0..W {
            let (px, pz) = (generator.x_words()[w], generator.z_words()[w]);
            for (acc, (&x, &z)) in parity.iter_mut().zip(self.x[w].iter().zip(&self.z[w])) {
                *acc ^= kernel::symplectic_word(x, z, px, pz);
            }
        }
        let factors = rotation_factors(rotation.theta());
        let mut out = Self::empty_unchecked(self.n, m);
        for (t, acc) in parity.into_iter().enumerate() {
            let term = self.term(t);
            if acc.count_ones() & 1 == 1 {
                split_anticommuting(&term, generator, factors, &mut out);
            } else {
                out.push_unchecked(&term);
            }
        }
        Ok(out)
    }

    pub fn apply_rotation(&self, rotation: &RotationSpec<W>) -> Result<Self> {
        Ok(self.apply_rotation_raw(rotation)?.combined())
    }

    pub fn to_aos(&self) -> PauliSum<W> {
        PauliSum::from(self)
    }

    /// Bytes held by all column buffers, counting spare capacity.
    pub fn heap_bytes(&self) -> usize {
        let words: usize = self.x.iter().chain(&self.z).map(Vec::capacity).sum();
        words * 8 + self.flags.capacity() + self.coeffs.capacity() * std::mem::size_of::<Complex64>()
    }
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &mut T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &mut lo[b])
    }
}

impl<const W: usize> Extend<PauliTerm<W>> for PauliSumSoA<W> {
    /// Appends without validation; callers inside the crate guarantee
    /// matching qubit counts.
    fn extend<I: IntoIterator<Item = PauliTerm<W>>>(&mut self, iter: I) {
        for t in iter {
            debug_assert_eq!(t.string.num_qubits(), self.n);
            self.push_unchecked(&t);
        }
    }
}

impl<const W: usize> PauliTerms<W> for PauliSumSoA<W> {
    fn num_qubits(&self) -> usize {
        self.n
    }

    fn len(&self) -> usize {
        self.coeffs.len()
    }

    fn term(&self, t: usize) -> PauliTerm<W> {
        PauliTerm {
            coeff: self.coeffs[t],
            string: self.string_at(t),
        }
    }
}

impl<const W: usize> From<&PauliSum<W>> for PauliSumSoA<W> {
    fn from(s: &PauliSum<W>) -> Self {
        let mut out = Self::empty_unchecked(s.num_qubits(), s.len());
        for t in s.terms() {
            out.push_unchecked(t);
        }
        out
    }
}
