use crate::string::PauliString;
use crate::term::PauliTerm;

/// Read access shared by the array-of-structures and struct-of-arrays sums.
pub trait PauliTerms<const W: usize> {
    fn num_qubits(&self) -> usize;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Term `t`, gathered into a standalone value.
    fn term(&self, t: usize) -> PauliTerm<W>;

    fn string(&self, t: usize) -> PauliString<W> {
        self.term(t).string
    }

    fn iter_terms(&self) -> impl Iterator<Item = PauliTerm<W>> + '_
    where
        Self: Sized,
    {
        (0..self.len()).map(move |t| self.term(t))
    }
}

/// Payload bytes per term with a real 8-byte coefficient:
/// `W` X words, `W` Z words, the coefficient and one flags byte.
pub const fn theoretical_bytes_per_term(words: usize) -> usize {
    words * 8 * 2 + 8 + 1
}

/// As [`theoretical_bytes_per_term`] with the 16-byte complex coefficient
/// actually stored.
pub const fn theoretical_bytes_per_term_complex(words: usize) -> usize {
    words * 8 * 2 + 16 + 1
}
