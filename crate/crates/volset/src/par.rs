//! Deterministic fork-join over an index range.
//!
//! Work items are pure; each result lands in its input's slot, so the output
//! is identical for any thread count. `VOLSET_THREADS` caps the pool
//! (0 or unset = all available cores).

pub fn thread_count() -> usize {
    match std::env::var("VOLSET_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(0) | None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        Some(n) => n,
    }
}

/// Applies `f` to every index in `0..n`, in parallel chunks, preserving
/// index order in the output.
pub fn par_map<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync,
{
    let threads = thread_count().max(1).min(n.max(1));
    if threads <= 1 || n <= 1 {
        return (0..n).map(f).collect();
    }
    let chunk = n.div_ceil(threads);
    let mut out: Vec<Option<R>> = (0..n).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (c, slots) in out.chunks_mut(chunk).enumerate() {
            let f = &f;
            scope.spawn(move || {
                for (off, slot) in slots.iter_mut().enumerate() {
                    *slot = Some(f(c * chunk + off));
                }
            });
        }
    });
    out.into_iter().map(|r| r.expect("every slot was filled")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn results_keep_index_order() {
        let squares = par_map(100, |i| i * i);
        assert_eq!(squares, (0..100).map(|i| i * i).collect::<Vec<_>>());
    }
}
