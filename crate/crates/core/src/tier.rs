//! Capacity tiers.
//!
//! Strings and sums are generic over a compile-time word count `W`; a tier is
//! one of the supported instantiations. Runtime code that only knows the
//! qubit count picks the smallest tier that fits with [`Tier::for_qubits`]
//! and monomorphizes with [`with_tier!`](crate::with_tier).

use crate::error::{PauliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    Q64,
    Q128,
    Q256,
    Q512,
    Q1024,
}

impl Tier {
    pub const ALL: [Tier; 5] = [Tier::Q64, Tier::Q128, Tier::Q256, Tier::Q512, Tier::Q1024];

    pub const MAX_QUBITS: usize = 1024;

    /// Smallest tier holding `num_qubits` qubits.
    pub fn for_qubits(num_qubits: usize) -> Result<Tier> {
        Tier::ALL
            .into_iter()
            .find(|t| t.capacity() >= num_qubits)
            .ok_or(PauliError::Capacity {
                qubits: num_qubits,
                capacity: Self::MAX_QUBITS,
            })
    }

    pub const fn words(self) -> usize {
        match self {
            Tier::Q64 => 1,
            Tier::Q128 => 2,
            Tier::Q256 => 4,
            Tier::Q512 => 8,
            Tier::Q1024 => 16,
        }
    }

    pub const fn capacity(self) -> usize {
        self.words() * 64
    }
}

/// Runs `$body` with `$w` bound to the word count of the smallest tier that
/// holds `$qubits` qubits. Evaluates to `Result<_, PauliError>`; the body's
/// own value is wrapped in `Ok`.
///
/// ```
/// use sympauli::{with_tier, PauliString};
///
/// let label = "XIZY";
/// let weight = with_tier!(label.len(), W => {
///     PauliString::<W>::from_label(label).unwrap().weight()
/// })
/// .unwrap();
/// assert_eq!(weight, 3);
/// ```
#[macro_export]
macro_rules! with_tier {
    ($qubits:expr, $w:ident => $body:expr) => {
        match $crate::Tier::for_qubits($qubits) {
            Ok($crate::Tier::Q64) => {
                const $w: usize = 1;
                Ok($body)
            }
            Ok($crate::Tier::Q128) => {
                const $w: usize = 2;
                Ok($body)
            }
            Ok($crate::Tier::Q256) => {
                const $w: usize = 4;
                Ok($body)
            }
            Ok($crate::Tier::Q512) => {
                const $w: usize = 8;
                Ok($body)
            }
            Ok($crate::Tier::Q1024) => {
                const $w: usize = 16;
                Ok($body)
            }
            Err(e) => Err(e),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_tier_selected() {
        assert_eq!(Tier::for_qubits(3).unwrap(), Tier::Q64);
        assert_eq!(Tier::for_qubits(64).unwrap(), Tier::Q64);
        assert_eq!(Tier::for_qubits(65).unwrap(), Tier::Q128);
        assert_eq!(Tier::for_qubits(100).unwrap(), Tier::Q128);
        assert_eq!(Tier::for_qubits(500).unwrap(), Tier::Q512);
        assert_eq!(Tier::for_qubits(1024).unwrap(), Tier::Q1024);
        assert!(matches!(
            Tier::for_qubits(1025),
            Err(PauliError::Capacity { qubits: 1025, .. })
        ));
    }

    #[test]
    fn macro_binds_word_count() {
        let words: Result<usize> = with_tier!(200, W => W);
        assert_eq!(words.unwrap(), 4);
    }
}
