use std::fmt;

use crate::error::{PauliError, Result};

/// Clifford gates applied by conjugation `U P U^dagger`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    H(usize),
    S(usize),
    Cnot { control: usize, target: usize },
    Cz(usize, usize),
}

impl CliffordGate {
    pub fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            CliffordGate::H(q) | CliffordGate::S(q) => (q, None),
            CliffordGate::Cnot { control, target } => (control, Some(target)),
            CliffordGate::Cz(a, b) => (a, Some(b)),
        }
    }

    /// Checks indices against `num_qubits` and rejects repeated qubits.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let (a, b) = self.qubits();
        for q in std::iter::once(a).chain(b) {
            if q >= num_qubits {
                return Err(PauliError::QubitOutOfRange {
                    qubit: q,
                    num_qubits,
                });
            }
        }
        if b == Some(a) {
            return Err(PauliError::DuplicateQubits(a));
        }
        Ok(())
    }
}

impl fmt::Display for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CliffordGate::H(q) => write!(f, "H({q})"),
            CliffordGate::S(q) => write!(f, "S({q})"),
            CliffordGate::Cnot { control, target } => write!(f, "CNOT({control},{target})"),
            CliffordGate::Cz(a, b) => write!(f, "CZ({a},{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CliffordGate::H(2).validate(3).is_ok());
        assert!(matches!(
            CliffordGate::S(3).validate(3),
            Err(PauliError::QubitOutOfRange { qubit: 3, .. })
        ));
        assert!(matches!(
            CliffordGate::Cnot { control: 1, target: 1 }.validate(3),
            Err(PauliError::DuplicateQubits(1))
        ));
        assert!(matches!(
            CliffordGate::Cz(0, 5).validate(3),
            Err(PauliError::QubitOutOfRange { qubit: 5, .. })
        ));
    }
}
