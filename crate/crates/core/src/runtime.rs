//! Thread-pool gating for the whole crate.
//!
//! `DKRG_THREADS` caps internal parallelism: unset uses all cores, `0` or `1`
//! forces strictly sequential execution. Parallel sections are written so the
//! result does not depend on scheduling; the sequential path exists for
//! callers that want bitwise reproducibility guarantees independent of the
//! thread pool.

use std::sync::OnceLock;

static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();

fn configured_threads() -> usize {
    match std::env::var("DKRG_THREADS") {
        Ok(v) => v.trim().parse::<usize>().unwrap_or_else(|_| {
            log::warn!("DKRG_THREADS={v:?} is not an integer; ignoring");
            0
        }),
        Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
    }
}

/// Effective worker count: 1 means "run sequentially".
pub fn parallelism() -> usize {
    configured_threads().max(1)
}

/// Runs `op` inside the crate's thread pool, or directly when sequential.
///
/// `op` may use rayon parallel iterators; with parallelism 1 they degrade to
/// sequential execution on the calling thread.
pub fn run<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    let pool = POOL.get_or_init(|| {
        let n = parallelism();
        if n <= 1 {
            None
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| log::warn!("thread pool unavailable ({e}); running sequentially"))
                .ok()
        }
    });
    match pool {
        Some(p) => p.install(op),
        None => {
            // A 1-thread pool still satisfies rayon APIs while keeping
            // execution on a single worker.
            static SEQ: OnceLock<rayon::ThreadPool> = OnceLock::new();
            let seq = SEQ.get_or_init(|| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(1)
                    .build()
                    .expect("single-thread pool")
            });
            seq.install(op)
        }
    }
}
