//! Splits a search's outer range across worker threads. Chunks are merged in
//! range order, so the result is the same for every job count.

use std::ops::RangeInclusive;
use std::thread;

use cuspgate_core::search::{
    search_2p_family_range, search_4pq_family_range, search_8p_family_range,
    search_neumann_setzer_range, Family, SearchHit,
};
use cuspgate_core::{Error, Result};

/// Cuts `range` into at most `parts` contiguous, non-empty pieces.
pub fn split(range: RangeInclusive<u64>, parts: usize) -> Vec<RangeInclusive<u64>> {
    let (lo, hi) = range.into_inner();
    if lo > hi {
        return Vec::new();
    }
    let len = hi - lo + 1;
    let parts = (parts as u64).clamp(1, len);
    let (base, extra) = (len / parts, len % parts);
    let mut start = lo;
    (0..parts)
        .map(|i| {
            let size = base + u64::from(i < extra);
            let piece = start..=start + size - 1;
            start += size;
            piece
        })
        .collect()
}

/// Runs `work` on each piece of `range` in its own thread and concatenates.
pub fn fan_out<T, F>(range: RangeInclusive<u64>, jobs: usize, work: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(RangeInclusive<u64>) -> Result<Vec<T>> + Sync,
{
    let pieces = split(range, jobs);
    if pieces.len() <= 1 {
        return pieces.into_iter().map(&work).try_fold(Vec::new(), |mut acc, r| {
            acc.extend(r?);
            Ok(acc)
        });
    }
    let work = &work;
    let results: Vec<Result<Vec<T>>> = thread::scope(|s| {
        let handles: Vec<_> = pieces.into_iter().map(|p| s.spawn(move || work(p))).collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    let mut merged = Vec::new();
    for r in results {
        merged.extend(r?);
    }
    Ok(merged)
}

/// The full search for `family` up to `max`, spread over `jobs` threads.
pub fn search(family: Family, max: u64, difference: u64, jobs: usize) -> Result<Vec<SearchHit>> {
    match family {
        Family::NeumannSetzer => fan_out(1..=max, jobs, search_neumann_setzer_range),
        Family::TwoP => {
            if max < 3 {
                return Err(Error::Precondition("k_max must be at least 3"));
            }
            let k_max = u32::try_from(max).map_err(|_| Error::Precondition("k_max is too large"))?;
            fan_out(3..=u64::from(k_max), jobs, |r| {
                let (lo, hi) = r.into_inner();
                search_2p_family_range(lo as u32..=hi as u32)
            })
        }
        Family::EightP => {
            if max < 37 {
                return Err(Error::Precondition("p_max must be at least 37"));
            }
            fan_out(32..=max, jobs, search_8p_family_range)
        }
        Family::FourPq => {
            if max < 11 {
                return Err(Error::Precondition("bound must be at least 11"));
            }
            fan_out(1..=max, jobs, |r| search_4pq_family_range(r, max, difference))
        }
    }
}
