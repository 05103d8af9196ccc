//! Letter-level scalar reference arithmetic.

/// Product of two single-qubit letters as `(phase exponent k, letter)`,
/// meaning `a * b = i^k * letter`. Written out as a table, not a formula.
pub fn letter_product(a: char, b: char) -> (u8, char) {
    match (a, b) {
        ('I', p) | (p, 'I') => (0, p),
        ('X', 'X') | ('Y', 'Y') | ('Z', 'Z') => (0, 'I'),
        ('Z', 'X') => (1, 'Y'),
        ('Y', 'Z') => (1, 'X'),
        ('X', 'Y') => (1, 'Z'),
        ('X', 'Z') => (3, 'Y'),
        ('Z', 'Y') => (3, 'X'),
        ('Y', 'X') => (3, 'Z'),
        _ => panic!("not a Pauli letter pair: {a}{b}"),
    }
}

/// Distinct non-identity letters anti-commute.
pub fn letters_anticommute(a: char, b: char) -> bool {
    a != 'I' && b != 'I' && a != b
}

/// Qubit-by-qubit product of two labels: `(label, k)` with `a * b = i^k * label`.
pub fn string_product(a: &str, b: &str) -> (String, u8) {
    assert_eq!(a.len(), b.len());
    let mut k = 0u8;
    let label = a
        .chars()
        .zip(b.chars())
        .map(|(p, q)| {
            let (dk, r) = letter_product(p, q);
            k = (k + dk) % 4;
            r
        })
        .collect();
    (label, k)
}

/// Parity rule: commute iff the number of anti-commuting positions is even.
pub fn strings_commute(a: &str, b: &str) -> bool {
    assert_eq!(a.len(), b.len());
    let count = a
        .chars()
        .zip(b.chars())
        .filter(|&(p, q)| letters_anticommute(p, q))
        .count();
    count % 2 == 0
}

/// First-fit greedy grouping over labels using the letter-level commutation
/// rule.
pub fn first_fit_groups(labels: &[String]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (t, label) in labels.iter().enumerate() {
        let slot = groups
            .iter()
            .position(|g| g.iter().all(|&m| strings_commute(&labels[m], label)));
        match slot {
            Some(g) => groups[g].push(t),
            None => groups.push(vec![t]),
        }
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        assert_eq!(string_product("XIZ", "ZIX"), ("YIY".to_string(), 0));
        assert!(strings_commute("XIZ", "ZIX"));
        assert!(!strings_commute("XIZ", "XIY"));
    }
}
