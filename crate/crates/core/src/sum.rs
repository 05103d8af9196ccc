//! Array-of-structures Pauli sums.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::combine::{below_threshold, merge_runs};
use crate::error::{PauliError, Result};
use crate::gate::CliffordGate;
use crate::layout::PauliTerms;
use crate::phase::Phase;
use crate::rotation::{rotation_factors, split_anticommuting, RotationSpec};
use crate::soa::PauliSumSoA;
use crate::string::PauliString;
use crate::term::{check_finite, PauliTerm};

/// A weighted sum of `n`-qubit Pauli strings, each term stored as one
/// contiguous struct (X words, Z words, flags, coefficient).
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSum<const W: usize> {
    n: usize,
    terms: Vec<PauliTerm<W>>,
}

pub(crate) fn check_sum_qubits<const W: usize>(n: usize) -> Result<()> {
    if n == 0 {
        return Err(PauliError::EmptyLabel);
    }
    PauliString::<W>::check_qubits(n)
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(PauliError::DimensionMismatch { left, right });
    }
    Ok(())
}

impl<const W: usize> PauliSum<W> {
    /// The empty (zero) sum on `num_qubits` qubits.
    pub fn new(num_qubits: usize) -> Result<Self> {
        check_sum_qubits::<W>(num_qubits)?;
        Ok(PauliSum {
            n: num_qubits,
            terms: Vec::new(),
        })
    }

    pub fn with_capacity(num_qubits: usize, capacity: usize) -> Result<Self> {
        let mut s = Self::new(num_qubits)?;
        s.terms.reserve(capacity);
        Ok(s)
    }

    /// Builds a sum from `(coefficient, label)` pairs in input order. Every
    /// label must have `num_qubits` letters.
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

    pub fn from_terms(num_qubits: usize, terms: impl IntoIterator<Item = PauliTerm<W>>) -> Result<Self> {
        let mut s = Self::new(num_qubits)?;
        for t in terms {
            s.push(t)?;
        }
        Ok(s)
    }

    pub fn push(&mut self, term: PauliTerm<W>) -> Result<()> {
        check_dims(self.n, term.string.num_qubits())?;
        check_finite(term.coeff)?;
        self.terms.push(term);
        Ok(())
    }

    pub fn push_label(&mut self, coeff: impl Into<Complex64>, label: &str) -> Result<()> {
        self.push(PauliTerm::from_label(coeff.into(), label)?)
    }

    pub fn terms(&self) -> &[PauliTerm<W>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<PauliTerm<W>> {
        self.terms
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sorts by [`CanonicalKey`], merges equal strings with their phases
    /// folded into the summed coefficient, and drops sums with magnitude
    /// `<= eps`. Every surviving term has phase `+1`.
    pub fn sort_and_combine(&mut self, eps: f64) {
        let terms = &self.terms;
        let mut out = Vec::with_capacity(terms.len());
        merge_runs(
            terms.len(),
            |t| terms[t].string.z_words()[0],
            |t| terms[t].canonical_key(),
            |t| terms[t].folded_coeff(),
            eps,
            |t, coeff| {
                out.push(PauliTerm {
                    coeff,
                    string: terms[t].string.with_phase(Phase::ONE),
                })
            },
        );
        self.terms = out;
    }

    /// [`sort_and_combine`](Self::sort_and_combine) with `eps = 0`, by value.
    pub fn combined(mut self) -> Self {
        self.sort_and_combine(0.0);
        self
    }

    /// True when strictly sorted by key with no phases and no zero terms.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|t| t.string.phase() == Phase::ONE && t.coeff != Complex64::new(0.0, 0.0))
            && self
                .terms
                .windows(2)
                .all(|w| w[0].canonical_key() < w[1].canonical_key())
    }

    /// Drops terms with `|coeff| < eps`, and exact zeros, keeping order.
    pub fn truncate(&mut self, eps: f64) {
        self.terms.retain(|t| !below_threshold(t.coeff, eps));
    }

    /// All `|self| * |other|` products `a_i * b_j`, uncombined. Term
    /// `j * |self| + i` holds `a_i * b_j`; blocks for different `j` are
    /// filled in parallel.
    pub fn outer_product(&self, other: &Self) -> Result<Self> {
        self.outer_product_impl(other, true)
    }

    /// Single-threaded [`outer_product`](Self::outer_product).
    pub fn outer_product_serial(&self, other: &Self) -> Result<Self> {
        self.outer_product_impl(other, false)
    }

    /// [`outer_product`](Self::outer_product) written into `out`, reusing its
    /// allocation. `out` is overwritten whatever it held before.
    pub fn outer_product_into(&self, other: &Self, out: &mut Self) -> Result<()> {
        self.outer_product_fill(other, out, true)
    }

    /// Single-threaded [`outer_product_into`](Self::outer_product_into).
    pub fn outer_product_into_serial(&self, other: &Self, out: &mut Self) -> Result<()> {
        self.outer_product_fill(other, out, false)
    }

    fn outer_product_impl(&self, other: &Self, parallel: bool) -> Result<Self> {
        let mut out = PauliSum {
            n: self.n,
            terms: Vec::new(),
        };
        self.outer_product_fill(other, &mut out, parallel)?;
        Ok(out)
    }

    fn outer_product_fill(&self, other: &Self, out: &mut Self, parallel: bool) -> Result<()> {
        check_dims(self.n, other.n)?;
        let na = self.len();
        out.n = self.n;
        out.terms.clear();
        if na == 0 || other.is_empty() {
            return Ok(());
        }
        let blank = PauliTerm {
            coeff: Complex64::new(0.0, 0.0),
            string: PauliString::identity_unchecked(self.n),
        };
        out.terms.resize(na * other.len(), blank);
        let fill = |(block, b): (&mut [PauliTerm<W>], &PauliTerm<W>)| {
            for (o, a) in block.iter_mut().zip(&self.terms) {
                *o = PauliTerm {
                    coeff: a.coeff * b.coeff,
                    string: a.string.multiply_unchecked(&b.string),
                };
            }
        };
        if parallel {
            out.terms.par_chunks_mut(na).zip(other.terms.par_iter()).for_each(fill);
        } else {
            out.terms.chunks_mut(na).zip(other.terms.iter()).for_each(fill);
        }
        Ok(())
    }

    /// Operator product `self * other` in canonical form.
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
        let terms = self
            .terms
            .iter()
            .zip(&other.terms)
            .map(|(a, b)| PauliTerm {
                coeff: a.coeff * b.coeff,
                string: a.string.multiply_unchecked(&b.string),
            })
            .collect();
        Ok(PauliSum { n: self.n, terms })
    }

    /// Conjugates every term by `gate` in place; the term count is unchanged.
    pub fn apply_clifford(&mut self, gate: CliffordGate) -> Result<()> {
        gate.validate(self.n)?;
        for t in &mut self.terms {
            t.string.apply_clifford_unchecked(gate);
        }
        Ok(())
    }

    /// Image under the rotation before combining: at most `2 * len()` terms.
    pub fn apply_rotation_raw(&self, rotation: &RotationSpec<W>) -> Result<Self> {
        let generator = rotation.generator();
        check_dims(self.n, generator.num_qubits())?;
        let factors = rotation_factors(rotation.theta());
        let mut out = Vec::with_capacity(self.len());
        for t in &self.terms {
            if generator.anticommutes_unchecked(&t.string) {
                split_anticommuting(t, generator, factors, &mut out);
            } else {
                out.push(*t);
            }
        }
        Ok(PauliSum { n: self.n, terms: out })
    }

    /// Conjugation by the rotation, canonicalized.
    pub fn apply_rotation(&self, rotation: &RotationSpec<W>) -> Result<Self> {
        Ok(self.apply_rotation_raw(rotation)?.combined())
    }

    pub fn to_soa(&self) -> PauliSumSoA<W> {
        PauliSumSoA::from(self)
    }

    /// Bytes held by the term buffer, counting spare capacity.
    pub fn heap_bytes(&self) -> usize {
        self.terms.capacity() * std::mem::size_of::<PauliTerm<W>>()
    }
}

impl<const W: usize> PauliTerms<W> for PauliSum<W> {
    fn num_qubits(&self) -> usize {
        self.n
    }

    fn len(&self) -> usize {
        self.terms.len()
    }

    fn term(&self, t: usize) -> PauliTerm<W> {
        self.terms[t]
    }
}

impl<const W: usize> From<&PauliSumSoA<W>> for PauliSum<W> {
    fn from(s: &PauliSumSoA<W>) -> Self {
        PauliSum {
            n: s.num_qubits(),
            terms: (0..s.len()).map(|t| s.term(t)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sum(n: usize, entries: &[(f64, &str)]) -> PauliSum<1> {
        PauliSum::from_labels(n, entries.iter().map(|&(r, l)| (c(r, 0.0), l))).unwrap()
    }

    fn labels(s: &PauliSum<1>) -> Vec<(Complex64, String)> {
        s.terms().iter().map(|t| (t.folded_coeff(), t.string.to_label())).collect()
    }

    #[test]
    fn construction() {
        let s = sum(2, &[(1.0, "XX"), (0.5, "ZZ")]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.num_qubits(), 2);
        assert!(PauliSum::<1>::new(3).unwrap().is_empty());
        assert!(matches!(
            PauliSum::<1>::from_labels(2, [(1.0, "XX"), (1.0, "X")]),
            Err(PauliError::DimensionMismatch { left: 2, right: 1 })
        ));
        assert!(matches!(
            PauliSum::<1>::from_labels(1, [(1.0, "Q")]),
            Err(PauliError::InvalidLetter { .. })
        ));
        assert!(PauliSum::<1>::from_labels(1, [(f64::NAN, "X")]).is_err());
    }

    #[test]
    fn duplicates_merge() {
        let s = sum(1, &[(1.0, "X"), (1.0, "X")]).combined();
        assert_eq!(labels(&s), vec![(c(2.0, 0.0), "X".into())]);
    }

    #[test]
    fn exact_cancellation() {
        let s = sum(1, &[(1.0, "X"), (-1.0, "X")]).combined();
        assert!(s.is_empty());
    }

    #[test]
    fn phase_is_folded() {
        let t = PauliTerm::<1> {
            coeff: c(1.0, 0.0),
            string: PauliString::from_label_with_phase("X", Phase::MINUS_ONE).unwrap(),
        };
        let s = PauliSum::from_terms(1, [t]).unwrap().combined();
        assert_eq!(s.terms()[0].coeff, c(-1.0, 0.0));
        assert_eq!(s.terms()[0].string.phase(), Phase::ONE);
    }

    #[test]
    fn eps_threshold() {
        let mut s = sum(1, &[(0.05, "X"), (0.5, "Z")]);
        s.sort_and_combine(0.05);
        assert_eq!(labels(&s), vec![(c(0.5, 0.0), "Z".into())]);
    }

    #[test]
    fn truncate() {
        let mut s = sum(1, &[(0.05, "X"), (0.5, "Z"), (0.0, "Y")]);
        s.truncate(0.0);
        assert_eq!(s.len(), 2);
        s.truncate(0.1);
        assert_eq!(labels(&s), vec![(c(0.5, 0.0), "Z".into())]);
        s.truncate(10.0);
        assert!(s.is_empty());
    }

    #[test]
    fn x_times_z() {
        let s = sum(1, &[(1.0, "X")]).multiply(&sum(1, &[(1.0, "Z")])).unwrap();
        assert_eq!(labels(&s), vec![(c(0.0, -1.0), "Y".into())]);
    }

    #[test]
    fn identity_is_neutral() {
        let h = sum(2, &[(0.5, "XY"), (-0.25, "ZI"), (2.0, "IX")]);
        let id = sum(2, &[(1.0, "II")]);
        assert_eq!(h.multiply(&id).unwrap(), h.clone().combined());
        assert_eq!(id.multiply(&h).unwrap(), h.combined());
    }

    #[test]
    fn outer_product_layout() {
        let a = sum(1, &[(1.0, "X"), (2.0, "Y"), (3.0, "Z")]);
        let b = sum(1, &[(1.0, "I"), (-1.0, "Z")]);
        let out = a.outer_product(&b).unwrap();
        assert_eq!(out.len(), 6);
        // block j = 1 holds a_i * Z
        assert_eq!(out.terms()[3].string.to_label(), "Y");
        assert_eq!(out.terms()[3].string.phase(), Phase::MINUS_I);
        assert_eq!(out.terms()[5].string.to_label(), "I");
        assert_eq!(out, a.outer_product_serial(&b).unwrap());
        assert!(a.outer_product(&PauliSum::new(1).unwrap()).unwrap().is_empty());
        assert!(a.outer_product(&sum(2, &[(1.0, "XX")])).is_err());
    }

    #[test]
    fn clifford_on_sum() {
        let mut s = sum(2, &[(1.0, "XZ")]);
        s.apply_clifford(CliffordGate::H(0)).unwrap();
        assert_eq!(labels(&s), vec![(c(1.0, 0.0), "ZZ".into())]);
        let mut empty = PauliSum::<1>::new(2).unwrap();
        empty.apply_clifford(CliffordGate::Cz(0, 1)).unwrap();
        assert!(empty.is_empty());
        assert!(s.apply_clifford(CliffordGate::S(2)).is_err());
    }

    #[test]
    fn rotation_cases() {
        let x = sum(1, &[(1.0, "X")]);
        let rz = |theta| RotationSpec::from_label("Z", theta).unwrap();
        assert_eq!(labels(&x.apply_rotation(&rz(PI)).unwrap()), vec![(c(-1.0, 0.0), "X".into())]);
        // -i Z X = -i (i Y) = Y
        assert_eq!(
            labels(&x.apply_rotation(&rz(PI / 2.0)).unwrap()),
            vec![(c(1.0, 0.0), "Y".into())]
        );
        let z = sum(1, &[(1.0, "Z")]);
        assert_eq!(z.apply_rotation(&rz(0.7)).unwrap(), z);
        let raw = x.apply_rotation_raw(&rz(0.7)).unwrap();
        assert_eq!(raw.len(), 2);
    }

    #[test]
    fn pair_multiply_lengths() {
        let a = sum(1, &[(1.0, "X"), (1.0, "Z")]);
        let b = sum(1, &[(1.0, "Z"), (1.0, "Z")]);
        let p = a.pair_multiply(&b).unwrap();
        assert_eq!(p.terms()[0].string.to_string(), "-iY");
        assert_eq!(p.terms()[1].string.to_string(), "I");
        assert!(a.pair_multiply(&sum(1, &[(1.0, "X")])).is_err());
    }
}
