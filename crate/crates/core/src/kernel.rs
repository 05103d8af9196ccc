//! Word-level bit kernels shared by strings and both sum layouts.
//!
//! A letter is stored as `(x, z)` with `Y = (1, 1)` and no phase folded in,
//! i.e. letter(x, z) = i^(xz) X^x Z^z. Multiplying letter(x1, z1) by
//! letter(x2, z2) and reordering `Z^z1 X^x2 = (-1)^(z1 x2) X^x2 Z^z1` gives
//! the per-qubit exponent
//!
//! ```text
//! g = x1 z1 + x2 z2 + 2 z1 x2 - (x1 ^ x2)(z1 ^ z2)   (mod 4)
//! ```
//!
//! which sums across a word as popcounts.

/// Phase exponent (mod 4, as a wrapping `u32`) picked up by one word of a
/// letter product, excluding the operands' own phases. Reference form of
/// [`phase_step`].
#[cfg(test)]
pub(crate) fn product_phase_word(ax: u64, az: u64, bx: u64, bz: u64) -> u32 {
    let own = (ax & az).count_ones() + (bx & bz).count_ones();
    let swap = 2 * (az & bx).count_ones();
    let out = ((ax ^ bx) & (az ^ bz)).count_ones();
    own.wrapping_add(swap).wrapping_sub(out)
}

/// Adds one word's `g` to per-lane two-bit counters `(c1, c2)`.
///
/// On one lane `g` is 0 when the letters commute and `+1` or `-1` when they
/// anti-commute, so each lane keeps a mod-4 counter of those steps with
/// `c1` as the low bit and `c2` as the high bit. Popcounts are deferred to
/// [`phase_total`].
#[inline(always)]
pub(crate) fn phase_step(c1: &mut u64, c2: &mut u64, ax: u64, az: u64, bx: u64, bz: u64) {
    let x1z2 = ax & bz;
    let anti = (bx & az) ^ x1z2;
    *c2 ^= (*c1 ^ ax ^ bx ^ az ^ bz ^ x1z2) & anti;
    *c1 ^= anti;
}

#[inline(always)]
pub(crate) fn phase_total(c1: u64, c2: u64) -> u8 {
    ((c1.count_ones() + 2 * c2.count_ones()) & 3) as u8
}

#[inline(always)]
pub(crate) fn product_phase(ax: &[u64], az: &[u64], bx: &[u64], bz: &[u64]) -> u8 {
    let (mut c1, mut c2) = (0u64, 0u64);
    for w in 0..ax.len() {
        phase_step(&mut c1, &mut c2, ax[w], az[w], bx[w], bz[w]);
    }
    phase_total(c1, c2)
}

/// Bits whose popcount parity is the symplectic inner product of one word.
#[inline(always)]
pub(crate) fn symplectic_word(ax: u64, az: u64, bx: u64, bz: u64) -> u64 {
    (ax & bz) ^ (az & bx)
}

#[inline(always)]
pub(crate) fn anticommute(ax: &[u64], az: &[u64], bx: &[u64], bz: &[u64]) -> bool {
    let mut acc = 0u64;
    for w in 0..ax.len() {
        acc ^= symplectic_word(ax[w], az[w], bx[w], bz[w]);
    }
    acc.count_ones() & 1 == 1
}

/// Mask of valid bits in the last word for `n` qubits.
#[inline]
pub(crate) fn tail_mask(n: usize) -> u64 {
    match n % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

#[inline]
pub(crate) fn locate(qubit: usize) -> (usize, u64) {
    (qubit / 64, 1u64 << (qubit % 64))
}

// Conjugation of a single (x, z) pair by a gate. Each returns the phase
// exponent increment (0 or 2).

/// H: X <-> Z, Y -> -Y.
#[inline(always)]
pub(crate) fn hadamard(x: &mut u64, z: &mut u64, mask: u64) -> u8 {
    let xb = *x & mask;
    let zb = *z & mask;
    *x = (*x & !mask) | zb;
    *z = (*z & !mask) | xb;
    (((xb & zb) != 0) as u8) << 1
}

/// S: X -> Y, Y -> -X, Z -> Z.
#[inline(always)]
pub(crate) fn phase_gate(x: &mut u64, z: &mut u64, mask: u64) -> u8 {
    let xb = *x & mask;
    let sign = ((xb & *z) != 0) as u8;
    *z ^= xb;
    sign << 1
}

/// CNOT on extracted bits `(xc, zc, xt, zt)`; returns the updated bits and
/// the phase increment.
#[inline(always)]
pub(crate) fn cnot_bits(xc: u64, zc: u64, xt: u64, zt: u64) -> (u64, u64, u64, u64, u8) {
    let sign = (xc & zt & (xt ^ zc ^ 1)) as u8;
    (xc, zc ^ zt, xt ^ xc, zt, sign << 1)
}

/// CZ on extracted bits.
#[inline(always)]
pub(crate) fn cz_bits(xc: u64, zc: u64, xt: u64, zt: u64) -> (u64, u64, u64, u64, u8) {
    let sign = (xc & xt & (zc ^ zt)) as u8;
    (xc, zc ^ xt, xt, zt ^ xc, sign << 1)
}
