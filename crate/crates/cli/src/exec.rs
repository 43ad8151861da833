//! Thread-pool executor for the core's chunked quadrature.
//!
//! Workers claim chunk indices from an atomic counter and stash partials by
//! index; the combination step runs in chunk order inside the core, so the
//! output is bit-identical to the sequential executor for every thread
//! count.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex64;
use sutherland_core::quadrature::{ChunkExecutor, PhiGrid, SequentialExecutor};

pub struct ThreadPoolExecutor {
    /// 0 means "all available".
    pub threads: usize,
}

impl ThreadPoolExecutor {
    pub fn new(threads: usize) -> Self {
        Self { threads }
    }

    fn effective_threads(&self, chunks: usize) -> usize {
        let requested = if self.threads == 0 {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        } else {
            self.threads
        };
        requested.min(chunks).max(1)
    }
}

impl ChunkExecutor for ThreadPoolExecutor {
    fn run(&self, grid: &PhiGrid) -> Vec<Vec<Complex64>> {
        let chunks = grid.chunk_count();
        let workers = self.effective_threads(chunks);
        if workers == 1 {
            return SequentialExecutor.run(grid);
        }
        let counter = AtomicUsize::new(0);
        let mut partials: Vec<Option<Vec<Complex64>>> = vec![None; chunks];
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    scope.spawn(|| {
                        let mut mine = Vec::new();
                        loop {
                            let i = counter.fetch_add(1, Ordering::Relaxed);
                            if i >= chunks {
                                break;
                            }
                            mine.push((i, grid.eval_chunk(i)));
                        }
                        mine
                    })
                })
                .collect();
            for handle in handles {
                for (i, partial) in handle.join().expect("worker panicked") {
                    partials[i] = Some(partial);
                }
            }
        });
        partials
            .into_iter()
            .map(|p| p.expect("every chunk was claimed"))
            .collect()
    }
}
