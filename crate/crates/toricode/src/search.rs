//! Multi-threaded exhaustive searches over the message space of a code.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use toricode_core::{Error, LinearCode, Result};

fn check(code: &LinearCode, budget: u64) -> Result<()> {
    if code.dimension() == 0 {
        return Err(Error::OutOfRange("zero code has no nonzero codeword"));
    }
    match code.projective_message_count() {
        Some(c) if c <= budget as u128 => Ok(()),
        Some(c) => Err(Error::BudgetExceeded { required: c, budget }),
        None => Err(Error::BudgetExceeded { required: u128::MAX, budget }),
    }
}

pub fn worker_count(requested: usize) -> usize {
    if requested > 0 {
        requested
    } else {
        thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    }
}

/// Exhaustive minimum distance split over `workers` threads.
pub fn min_distance(code: &LinearCode, workers: usize, budget: u64) -> Result<usize> {
    check(code, budget)?;
    let workers = worker_count(workers);
    if workers == 1 {
        return code.minimum_distance(budget);
    }
    let chunks = code.message_chunks(workers * 8);
    let next = AtomicUsize::new(0);
    let best = AtomicUsize::new(usize::MAX);
    thread::scope(|s| {
        for _ in 0..workers.min(chunks.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= chunks.len() || best.load(Ordering::Relaxed) <= 1 {
                    break;
                }
                let w = code.chunk_min_weight(&chunks[i], 1);
                best.fetch_min(w, Ordering::Relaxed);
            });
        }
    });
    Ok(best.into_inner())
}

/// Full weight distribution, zero word included.
pub fn weight_distribution(code: &LinearCode, workers: usize, budget: u64) -> Result<BTreeMap<usize, u64>> {
    check(code, budget)?;
    let workers = worker_count(workers);
    let chunks = code.message_chunks(workers * 8);
    let next = AtomicUsize::new(0);
    let total = Mutex::new(vec![0u64; code.length() + 1]);
    thread::scope(|s| {
        for _ in 0..workers.min(chunks.len()) {
            s.spawn(|| {
                let mut hist = vec![0u64; code.length() + 1];
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= chunks.len() {
                        break;
                    }
                    code.chunk_histogram(&chunks[i], &mut hist);
                }
                let mut total = total.lock().unwrap();
                for (t, h) in total.iter_mut().zip(hist) {
                    *t += h;
                }
            });
        }
    });
    Ok(code.distribution_from_projective(&total.into_inner().unwrap()))
}

/// Runs `jobs` on up to `workers` threads and returns results in job order.
pub fn run_ordered<T, R, F>(jobs: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = worker_count(workers).min(jobs.len()).max(1);
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<R>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs.len() {
                    break;
                }
                let r = f(&jobs[i]);
                *slots[i].lock().unwrap() = Some(r);
            });
        }
    });
    slots.into_iter().map(|m| m.into_inner().unwrap().expect("job finished")).collect()
}
