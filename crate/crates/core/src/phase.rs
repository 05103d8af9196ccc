use std::fmt;
use std::ops::{Add, AddAssign, Neg};

use num_complex::Complex64;

/// A power of `i`: the factor `i^k` with `k` in `0..4`.
///
/// The stored byte doubles as the flags field of a string: bit 1 is the sign
/// bit `s` and bit 0 the imaginary bit `m`, so that `k = 2s + m` and the
/// phase is `(-1)^s * i^m`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(transparent)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    /// Reduces `k` modulo 4.
    #[inline]
    pub const fn new(k: u8) -> Self {
        Phase(k & 3)
    }

    #[inline]
    pub const fn from_bits(sign: bool, imaginary: bool) -> Self {
        Phase(((sign as u8) << 1) | imaginary as u8)
    }

    #[inline]
    pub const fn exponent(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn sign_bit(self) -> bool {
        self.0 & 2 != 0
    }

    #[inline]
    pub const fn imaginary_bit(self) -> bool {
        self.0 & 1 != 0
    }

    #[inline]
    pub const fn is_real(self) -> bool {
        self.0 & 1 == 0
    }

    pub fn to_complex(self) -> Complex64 {
        self.apply(Complex64::new(1.0, 0.0))
    }

    /// Multiplies `c` by `i^k` by swapping and negating components, so the
    /// result is exact.
    #[inline]
    pub fn apply(self, c: Complex64) -> Complex64 {
        match self.0 {
            0 => c,
            1 => Complex64::new(-c.im, c.re),
            2 => Complex64::new(-c.re, -c.im),
            _ => Complex64::new(c.im, -c.re),
        }
    }

    /// Inverse of [`Phase::to_complex`]; `None` unless `c` is exactly one of
    /// `1, i, -1, -i`.
    pub fn from_complex(c: Complex64) -> Option<Self> {
        (0..4).map(Phase).find(|p| p.to_complex() == c)
    }
}

impl Add for Phase {
    type Output = Phase;

    #[inline]
    fn add(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) & 3)
    }
}

impl AddAssign for Phase {
    #[inline]
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl Neg for Phase {
    type Output = Phase;

    /// The inverse element, `i^-k`.
    fn neg(self) -> Phase {
        Phase(self.0.wrapping_neg() & 3)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        })
    }
}
