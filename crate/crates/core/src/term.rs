use num_complex::Complex64;

use crate::error::{PauliError, Result};
use crate::phase::Phase;
use crate::string::PauliString;

/// A weighted string `coeff * string`. The string's own phase is part of the
/// operator, so the term represents `coeff * i^k * letters`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliTerm<const W: usize> {
    pub coeff: Complex64,
    pub string: PauliString<W>,
}

impl<const W: usize> PauliTerm<W> {
    pub fn new(coeff: Complex64, string: PauliString<W>) -> Result<Self> {
        check_finite(coeff)?;
        Ok(PauliTerm { coeff, string })
    }

    pub fn from_label(coeff: Complex64, label: &str) -> Result<Self> {
        Self::new(coeff, PauliString::from_label(label)?)
    }

    /// Coefficient with the string's phase multiplied in.
    #[inline]
    pub fn folded_coeff(&self) -> Complex64 {
        self.string.phase().apply(self.coeff)
    }

    /// Same operator with the phase moved into the coefficient.
    pub fn folded(&self) -> Self {
        PauliTerm {
            coeff: self.folded_coeff(),
            string: self.string.with_phase(Phase::ONE),
        }
    }

    #[inline]
    pub fn canonical_key(&self) -> CanonicalKey<W> {
        CanonicalKey::of(&self.string)
    }
}

pub(crate) fn check_finite(c: Complex64) -> Result<()> {
    if c.re.is_finite() && c.im.is_finite() {
        Ok(())
    } else {
        Err(PauliError::NonFiniteCoefficient(c))
    }
}

/// Sort key over letter bit patterns, ignoring phase and coefficient.
///
/// Orders by Z words, then X words, each compared word index ascending as
/// unsigned integers. Two keys are equal iff the letters are identical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey<const W: usize> {
    z: [u64; W],
    x: [u64; W],
}

impl<const W: usize> CanonicalKey<W> {
    #[inline]
    pub fn of(s: &PauliString<W>) -> Self {
        CanonicalKey {
            z: *s.z_words(),
            x: *s.x_words(),
        }
    }

    #[inline]
    pub(crate) fn from_words(x: [u64; W], z: [u64; W]) -> Self {
        CanonicalKey { z, x }
    }
}
