//! Allocation counting for the memory benchmark.
//!
//! Install [`CountingAlloc`] as the global allocator in a binary to make
//! [`live_bytes`] report real figures; without it the counters stay at zero
//! and [`measure_live`] reports `None`.

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicIsize, AtomicUsize, Ordering::Relaxed};

static LIVE: AtomicIsize = AtomicIsize::new(0);
static CALLS: AtomicUsize = AtomicUsize::new(0);

pub struct CountingAlloc;

unsafe impl GlobalAlloc for CountingAlloc {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            LIVE.fetch_add(layout.size() as isize, Relaxed);
            CALLS.fetch_add(1, Relaxed);
        }
        p
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc_zeroed(layout);
        if !p.is_null() {
            LIVE.fetch_add(layout.size() as isize, Relaxed);
            CALLS.fetch_add(1, Relaxed);
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        LIVE.fetch_sub(layout.size() as isize, Relaxed);
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = System.realloc(ptr, layout, new_size);
        if !p.is_null() {
            LIVE.fetch_add(new_size as isize - layout.size() as isize, Relaxed);
            CALLS.fetch_add(1, Relaxed);
        }
        p
    }
}

/// Bytes currently allocated through [`CountingAlloc`], or `None` when it is
/// not the global allocator.
pub fn live_bytes() -> Option<isize> {
    (CALLS.load(Relaxed) > 0).then(|| LIVE.load(Relaxed))
}

/// Runs `f` and returns its value with the growth in live bytes while the
/// value is still held, so temporaries freed inside `f` do not count.
pub fn measure_live<R>(f: impl FnOnce() -> R) -> (R, Option<isize>) {
    let before = live_bytes();
    let value = f();
    let after = live_bytes();
    let delta = match (before, after) {
        (Some(b), Some(a)) => Some(a - b),
        _ => None,
    };
    (value, delta)
}
