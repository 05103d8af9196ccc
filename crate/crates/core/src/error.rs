use thiserror::Error;

#[derive(Debug, Error)]
pub enum PauliError {
    #[error("empty Pauli label")]
    EmptyLabel,

    #[error("invalid Pauli letter {found:?} at position {position}")]
    InvalidLetter { position: usize, found: char },

    #[error("{qubits} qubits exceed capacity {capacity}")]
    Capacity { qubits: usize, capacity: usize },

    #[error("qubit count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit {qubit} out of range for {num_qubits} qubits")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("two-qubit gate needs distinct qubits, got {0} twice")]
    DuplicateQubits(usize),

    #[error("bits set beyond qubit {num_qubits} in the last word")]
    Padding { num_qubits: usize },

    #[error("coefficient is not finite: {0}")]
    NonFiniteCoefficient(num_complex::Complex64),

    #[error("rotation generator must carry phase +1, found i^{0}")]
    PhasedGenerator(u8),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = PauliError> = std::result::Result<T, E>;
