use std::hint::black_box;
use std::time::{Duration, Instant};

/// Minimum wall time of `repeats` calls after `warmups` untimed calls.
pub fn min_time<R>(warmups: usize, repeats: usize, mut f: impl FnMut() -> R) -> Duration {
    for _ in 0..warmups {
        black_box(f());
    }
    (0..repeats.max(1))
        .map(|_| {
            let start = Instant::now();
            black_box(f());
            start.elapsed()
        })
        .min()
        .unwrap_or_default()
}

/// Nanoseconds per operation for a closure doing `ops_per_call` operations.
/// Each timed sample repeats the closure until at least `min_ops` operations
/// have run, so short calls are not swamped by timer resolution.
pub fn min_ns_per_op<R>(
    warmups: usize,
    repeats: usize,
    ops_per_call: usize,
    min_ops: usize,
    mut f: impl FnMut() -> R,
) -> f64 {
    let ops_per_call = ops_per_call.max(1);
    let calls = min_ops.div_ceil(ops_per_call).max(1);
    let best = min_time(warmups, repeats, || {
        for _ in 0..calls {
            black_box(f());
        }
    });
    best.as_nanos() as f64 / (calls * ops_per_call) as f64
}

pub fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}
