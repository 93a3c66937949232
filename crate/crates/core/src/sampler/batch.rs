use std::thread;

use super::rng::RngStream;
use crate::error::{Error, Result};

/// Draws per chunk; chunk `c` uses stream `c + 1` of the seed.
pub const CHUNK_SIZE: usize = 4096;

/// Default largest sample count accepted by batch sampling.
pub const DEFAULT_SAMPLE_CAP: usize = 100_000_000;

/// Draws `count` values with `draw`, split into fixed chunks with their own
/// streams. The output is identical for every `threads >= 1`.
pub fn sample_batch<T, F>(count: usize, seed: u64, threads: usize, draw: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut RngStream) -> Result<T> + Sync,
{
    sample_batch_with_cap(count, seed, threads, DEFAULT_SAMPLE_CAP, draw)
}

pub fn sample_batch_with_cap<T, F>(
    count: usize,
    seed: u64,
    threads: usize,
    cap: usize,
    draw: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut RngStream) -> Result<T> + Sync,
{
    if count > cap {
        return Err(Error::CapExceeded {
            what: "sample count",
            requested: count,
            cap,
        });
    }
    let chunks = count.div_ceil(CHUNK_SIZE);
    let run_chunk = |c: usize| -> Result<Vec<T>> {
        let mut rng = RngStream::substream(seed, c as u64 + 1);
        let len = CHUNK_SIZE.min(count - c * CHUNK_SIZE);
        (0..len).map(|_| draw(&mut rng)).collect()
    };
    let threads = threads.clamp(1, chunks.max(1));
    let per_thread = chunks.div_ceil(threads);
    let results: Vec<Result<Vec<T>>> = if threads == 1 {
        (0..chunks).map(run_chunk).collect()
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let run_chunk = &run_chunk;
                    s.spawn(move || {
                        let lo = t * per_thread;
                        let hi = chunks.min(lo + per_thread);
                        (lo..hi).map(run_chunk).collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("sampling thread panicked"))
                .collect()
        })
    };
    let mut out = Vec::with_capacity(count);
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
