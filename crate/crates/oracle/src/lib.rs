//! Slow, obviously-correct reference implementations for testing.
//!
//! Nothing in here touches the bit-packed representation. Labels are handled
//! character by character, operators as dense `2^n x 2^n` complex matrices
//! built by Kronecker products of the four single-qubit Pauli matrices, and
//! letter products come from an explicit lookup table.
//!
//! Qubit 0 is the leftmost label character and the most significant tensor
//! factor.

pub mod dense;
pub mod letters;

pub use dense::{
    clifford_matrix, decompose_pauli, label_matrix, pauli_rotation, sum_matrix, DenseGate, Matrix,
};
pub use letters::{
    first_fit_groups, letter_product, letters_anticommute, string_product, strings_commute,
};
