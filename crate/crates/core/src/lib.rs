//! Bit-packed Pauli algebra.
//!
//! A Pauli string on `n` qubits is stored in binary symplectic form: one X
//! bit and one Z bit per qubit packed into 64-bit words, plus a two-bit
//! phase `i^k`. Products are XORs with a popcount phase correction,
//! commutation is the parity of a symplectic inner product, and Clifford
//! gates relabel bits with a sign fix-up.
//!
//! Weighted sums come in two layouts with the same operations:
//!
//! - [`PauliSum`] keeps each term's words, flags and coefficient together.
//! - [`PauliSumSoA`] keeps one contiguous array per word index, so bulk
//!   kernels run over independent elements.
//!
//! Both canonicalize by sorting on the packed words and merging neighbours
//! ([`PauliSum::sort_and_combine`]), multiply as an outer product, apply
//! Clifford gates and Pauli rotations, and feed the commutation grouping in
//! [`grouping`].
//!
//! The word count `W` is a const generic. [`Tier`] and [`with_tier!`] pick
//! the smallest of 1, 2, 4, 8 or 16 words (64 to 1024 qubits) for a runtime
//! qubit count.
//!
//! ```
//! use sympauli::{PauliString64, Phase};
//!
//! let a: PauliString64 = "XIZ".parse().unwrap();
//! let b: PauliString64 = "ZIX".parse().unwrap();
//! let ab = a.multiply(&b).unwrap();
//! assert_eq!(ab.to_label(), "YIY");
//! assert_eq!(ab.phase(), Phase::ONE);
//! assert!(a.commutes(&b).unwrap());
//! ```

mod combine;
mod error;
mod gate;
pub mod grouping;
pub mod hamiltonian;
mod kernel;
mod layout;
mod phase;
pub mod random;
mod rotation;
mod soa;
mod string;
mod sum;
mod term;
mod tier;

pub use error::{PauliError, Result};
pub use gate::CliffordGate;
pub use grouping::{
    group_greedy, group_greedy_counted, group_greedy_parallel, validate_partition, CommutationPartition,
    PartitionViolation,
};
pub use hamiltonian::{read_hamiltonian, write_hamiltonian};
pub use layout::{theoretical_bytes_per_term, theoretical_bytes_per_term_complex, PauliTerms};
pub use phase::Phase;
pub use random::PauliRng;
pub use rotation::{reorder_rotation, RotationSpec};
pub use soa::PauliSumSoA;
pub use string::{
    Letter, PauliString, PauliString1024, PauliString128, PauliString256, PauliString512, PauliString64,
};
pub use sum::PauliSum;
pub use term::{CanonicalKey, PauliTerm};
pub use tier::Tier;

pub use num_complex::Complex64;
