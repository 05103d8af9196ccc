//! Sort-and-combine planning shared by both layouts.

use num_complex::Complex64;

use crate::term::CanonicalKey;

/// Sorts an index array by key and merges runs of equal keys in one linear
/// scan, calling `emit(representative index, summed coefficient)` per
/// surviving key in key order; sums with magnitude `<= eps` are dropped.
///
/// `lead(t)` must be the first word of `key(t)`. The sort runs on compact
/// `(lead, index)` pairs and only consults full keys to order runs with
/// equal leading words, which keeps the hot loop inside a dense array.
///
/// Ties are broken by index so the summation order inside a run, and hence
/// the floating-point result, depends only on the input order.
pub(crate) fn merge_runs<const W: usize>(
    len: usize,
    lead: impl Fn(usize) -> u64,
    key: impl Fn(usize) -> CanonicalKey<W>,
    folded: impl Fn(usize) -> Complex64,
    eps: f64,
    mut emit: impl FnMut(usize, Complex64),
) {
    let mut order: Vec<(u64, usize)> = (0..len).map(|t| (lead(t), t)).collect();
    order.sort_unstable();
    let mut i = 0;
    while i < len {
        let mut j = i + 1;
        while j < len && order[j].0 == order[i].0 {
            j += 1;
        }
        if j - i > 1 {
            order[i..j].sort_unstable_by(|a, b| key(a.1).cmp(&key(b.1)).then(a.1.cmp(&b.1)));
        }
        i = j;
    }

    let mut i = 0;
    while i < len {
        let head = order[i].1;
        let mut acc = folded(head);
        let mut j = i + 1;
        if j < len && order[j].0 == order[i].0 {
            let head_key = key(head);
            while j < len && order[j].0 == order[i].0 && key(order[j].1) == head_key {
                acc += folded(order[j].1);
                j += 1;
            }
        }
        if acc.norm() > eps {
            emit(head, acc);
        }
        i = j;
    }
}

#[inline]
pub(crate) fn below_threshold(c: Complex64, eps: f64) -> bool {
    c.norm() < eps || (c.re == 0.0 && c.im == 0.0)
}
