//! Plain-text Hamiltonian files.
//!
//! One term per line, `<re> <im> <label>` separated by whitespace. `#`
//! starts a comment and blank lines are ignored. All labels share one
//! length. The writer prints coefficients with 17 significant digits, which
//! round-trips every finite `f64`, and leads with a `# qubits <n>` comment
//! that the reader uses to size an empty sum.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{PauliError, Result};
use crate::layout::PauliTerms;
use crate::sum::PauliSum;
use crate::term::PauliTerm;

/// A parsed file before a capacity tier has been chosen.
#[derive(Clone, Debug, PartialEq)]
pub struct RawHamiltonian {
    pub num_qubits: usize,
    pub terms: Vec<(Complex64, String)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> PauliError {
    PauliError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_hamiltonian(text: &str) -> Result<RawHamiltonian> {
    let mut declared: Option<usize> = None;
    let mut width: Option<(usize, usize)> = None;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut toks = c.split_whitespace();
            if let (Some("qubits"), Some(n)) = (toks.next(), toks.next()) {
                declared = n.parse().ok();
            }
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let [re, im, label] = toks[..] else {
            return Err(parse_err(lineno, format!("expected `<re> <im> <label>`, got {} fields", toks.len())));
        };
        let parse_f = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| parse_err(lineno, format!("bad coefficient {s:?}: {e}")))
        };
        let coeff = Complex64::new(parse_f(re)?, parse_f(im)?);
        if !(coeff.re.is_finite() && coeff.im.is_finite()) {
            return Err(parse_err(lineno, "coefficient is not finite"));
        }
        if let Some(p) = label.chars().position(|c| !matches!(c, 'I' | 'X' | 'Y' | 'Z')) {
            return Err(parse_err(lineno, format!("invalid Pauli letter at position {p} in {label:?}")));
        }
        let n = label.len();
        match width {
            None => width = Some((n, lineno)),
            Some((w, first)) if w != n => {
                return Err(parse_err(
                    lineno,
                    format!("label has {n} qubits but line {first} has {w}"),
                ));
            }
            _ => {}
        }
        terms.push((coeff, label.to_string()));
    }
    let num_qubits = match (width, declared) {
        (Some((w, _)), _) => w,
        (None, Some(d)) => d,
        (None, None) => return Err(parse_err(0, "no terms and no `# qubits <n>` header")),
    };
    Ok(RawHamiltonian { num_qubits, terms })
}

impl RawHamiltonian {
    pub fn into_sum<const W: usize>(self) -> Result<PauliSum<W>> {
        PauliSum::from_labels(self.num_qubits, self.terms)
    }
}

pub fn read_hamiltonian<const W: usize>(path: impl AsRef<Path>) -> Result<PauliSum<W>> {
    read_raw_hamiltonian(path)?.into_sum()
}

pub fn read_raw_hamiltonian(path: impl AsRef<Path>) -> Result<RawHamiltonian> {
    parse_hamiltonian(&std::fs::read_to_string(path)?)
}

/// Formats any sum layout. String phases are folded into the coefficients
/// since the format has no phase column.
pub fn format_hamiltonian<const W: usize, S: PauliTerms<W>>(s: &S) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# qubits {} terms {}", s.num_qubits(), s.len());
    for t in 0..s.len() {
        let term: PauliTerm<W> = s.term(t);
        let c = term.folded_coeff();
        let _ = writeln!(out, "{:.16e} {:.16e} {}", c.re, c.im, term.string.to_label());
    }
    out
}

pub fn write_hamiltonian<const W: usize, S: PauliTerms<W>>(path: impl AsRef<Path>, s: &S) -> Result<()> {
    std::fs::write(path, format_hamiltonian(s))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_line() {
        let raw = parse_hamiltonian("1.0 0.0 XIZ").unwrap();
        assert_eq!(raw.num_qubits, 3);
        let s: PauliSum<1> = raw.into_sum().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.terms()[0].string.to_label(), "XIZ");
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# header\n\n0.5 -0.25 XX  # trailing\n   \n1e-3 0 ZZ\n";
        let raw = parse_hamiltonian(text).unwrap();
        assert_eq!(raw.terms.len(), 2);
        assert_eq!(raw.terms[0].0, Complex64::new(0.5, -0.25));
    }

    #[test]
    fn ragged_label_names_line() {
        let err = parse_hamiltonian("1 0 XX\n# c\n1 0 XXX\n").unwrap_err();
        match err {
            PauliError::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("line 1"), "{message}");
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn bad_lines() {
        assert!(matches!(parse_hamiltonian("1 0"), Err(PauliError::Parse { line: 1, .. })));
        assert!(matches!(parse_hamiltonian("1 0 XQ"), Err(PauliError::Parse { line: 1, .. })));
        assert!(matches!(parse_hamiltonian("1 a XX"), Err(PauliError::Parse { line: 1, .. })));
        assert!(matches!(parse_hamiltonian("inf 0 XX"), Err(PauliError::Parse { line: 1, .. })));
        assert!(parse_hamiltonian("").is_err());
    }

    #[test]
    fn empty_sum_keeps_width() {
        let s = PauliSum::<1>::new(5).unwrap();
        let raw = parse_hamiltonian(&format_hamiltonian(&s)).unwrap();
        assert_eq!(raw.num_qubits, 5);
        assert!(raw.terms.is_empty());
    }

    #[test]
    fn seventeen_digits() {
        let s = PauliSum::<1>::from_labels(1, [(Complex64::new(0.1, -1.0 / 3.0), "Y")]).unwrap();
        let text = format_hamiltonian(&s);
        assert!(text.contains("1.0000000000000001e-1 -3.3333333333333331e-1 Y"), "{text}");
        let back: PauliSum<1> = parse_hamiltonian(&text).unwrap().into_sum().unwrap();
        assert_eq!(back, s);
    }
}
