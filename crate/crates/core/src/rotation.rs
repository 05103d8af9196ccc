//! Pauli rotations `U_P(theta) = exp(-i theta/2 P)` and their action on
//! terms under conjugation `Q -> U Q U^dagger`.
//!
//! A term commuting with `P` is unchanged. An anti-commuting term becomes
//! `cos(theta) Q - i sin(theta) P Q`, which is a single string when `theta`
//! is a multiple of `pi/2`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{PauliError, Result};
use crate::phase::Phase;
use crate::string::PauliString;
use crate::term::PauliTerm;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationSpec<const W: usize> {
    generator: PauliString<W>,
    theta: f64,
}

impl<const W: usize> RotationSpec<W> {
    /// The generator must be Hermitian, i.e. carry phase `+1`.
    pub fn new(generator: PauliString<W>, theta: f64) -> Result<Self> {
        if generator.phase() != Phase::ONE {
            return Err(PauliError::PhasedGenerator(generator.phase().exponent()));
        }
        Ok(RotationSpec { generator, theta })
    }

    pub fn from_label(label: &str, theta: f64) -> Result<Self> {
        Self::new(PauliString::from_label(label)?, theta)
    }

    pub fn generator(&self) -> &PauliString<W> {
        &self.generator
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Moves this rotation past a Clifford rotation `P_{pi/4} = U_P(pi/2)`
    /// generated by `clifford_gen`:
    ///
    /// ```text
    /// U_{P'}(theta) U_P(pi/2) = U_P(pi/2) U_{iPP'}(theta)
    /// ```
    ///
    /// Commuting generators pass through unchanged. Otherwise `iPP'` is
    /// `+-` a phase-free string; a `-1` is absorbed by negating `theta`.
    /// Costs one commutation check and one multiplication.
    pub fn reorder_past(&self, clifford_gen: &PauliString<W>) -> Result<Self> {
        if clifford_gen.phase() != Phase::ONE {
            return Err(PauliError::PhasedGenerator(clifford_gen.phase().exponent()));
        }
        if clifford_gen.commutes(&self.generator)? {
            return Ok(*self);
        }
        let product = clifford_gen.multiply_unchecked(&self.generator);
        // Anti-commuting Hermitian strings have an odd product phase, so
        // i * P * P' is real.
        let total = Phase::I + product.phase();
        debug_assert!(total.is_real());
        let theta = if total == Phase::MINUS_ONE { -self.theta } else { self.theta };
        Ok(RotationSpec {
            generator: product.with_phase(Phase::ONE),
            theta,
        })
    }
}

/// `(cos theta, sin theta)`, exact when `theta` is an exact multiple of
/// `pi/2` in floating point.
pub(crate) fn rotation_factors(theta: f64) -> (f64, f64) {
    let quarter = theta / FRAC_PI_2;
    if quarter == quarter.round() && quarter.abs() < 1e15 {
        match (quarter as i64).rem_euclid(4) {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        }
    } else {
        let (sin, cos) = theta.sin_cos();
        (cos, sin)
    }
}

/// Pushes the image of an anti-commuting term under the rotation: up to two
/// terms, skipping exact zeros.
#[inline]
pub(crate) fn split_anticommuting<const W: usize>(
    term: &PauliTerm<W>,
    generator: &PauliString<W>,
    (cos, sin): (f64, f64),
    out: &mut impl Extend<PauliTerm<W>>,
) {
    if cos != 0.0 {
        out.extend(Some(PauliTerm {
            coeff: term.coeff * cos,
            string: term.string,
        }));
    }
    if sin != 0.0 {
        let c = term.coeff;
        // -i * c, exact
        let rotated = Complex64::new(c.im, -c.re);
        out.extend(Some(PauliTerm {
            coeff: rotated * sin,
            string: generator.multiply_unchecked(&term.string),
        }));
    }
}

/// Free-function form of [`RotationSpec::reorder_past`].
pub fn reorder_rotation<const W: usize>(
    nonclifford: &RotationSpec<W>,
    clifford_gen: &PauliString<W>,
) -> Result<RotationSpec<W>> {
    nonclifford.reorder_past(clifford_gen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn factors_snap_at_quarter_turns() {
        assert_eq!(rotation_factors(0.0), (1.0, 0.0));
        assert_eq!(rotation_factors(FRAC_PI_2), (0.0, 1.0));
        assert_eq!(rotation_factors(PI), (-1.0, 0.0));
        assert_eq!(rotation_factors(-FRAC_PI_2), (0.0, -1.0));
        assert_eq!(rotation_factors(3.0 * FRAC_PI_2), (0.0, -1.0));
        let (c, s) = rotation_factors(0.7);
        assert_eq!((c, s), (0.7f64.cos(), 0.7f64.sin()));
    }

    #[test]
    fn reorder_anticommuting() {
        // i Z X = i (i Y) = -Y
        let r = RotationSpec::<1>::from_label("X", 0.3).unwrap();
        let z = PauliString::from_label("Z").unwrap();
        let out = r.reorder_past(&z).unwrap();
        assert_eq!(out.generator().to_label(), "Y");
        assert_eq!(out.theta(), -0.3);
    }

    #[test]
    fn reorder_commuting_is_identity() {
        let r = RotationSpec::<1>::from_label("Z", 0.3).unwrap();
        let z = PauliString::from_label("Z").unwrap();
        assert_eq!(r.reorder_past(&z).unwrap(), r);
    }

    #[test]
    fn phased_generators_rejected() {
        let g = PauliString::<1>::from_label_with_phase("X", Phase::I).unwrap();
        assert!(matches!(RotationSpec::new(g, 1.0), Err(PauliError::PhasedGenerator(1))));
        let r = RotationSpec::<1>::from_label("X", 0.3).unwrap();
        assert!(r.reorder_past(&g).is_err());
        let two = PauliString::<1>::from_label("ZZ").unwrap();
        assert!(matches!(r.reorder_past(&two), Err(PauliError::DimensionMismatch { .. })));
    }
}
