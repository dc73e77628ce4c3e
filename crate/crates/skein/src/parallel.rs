//! State sum split over threads by ranges of the state index.

use std::thread;

use skein_core::bracket::{bracket_statesum, bracket_statesum_range, PlanarDiagram};
use skein_core::LaurentPoly;

/// Equal to [`bracket_statesum`] for every thread count; partial sums are
/// added in range order.
pub fn bracket_threaded(d: &PlanarDiagram, threads: usize) -> LaurentPoly {
    let total = 1u64 << d.crossing_count();
    let threads = (threads.max(1) as u64).min(total);
    if threads == 1 {
        return bracket_statesum(d);
    }
    let chunk = total.div_ceil(threads);
    thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|i| {
                let range = (i * chunk).min(total)..((i + 1) * chunk).min(total);
                s.spawn(move || bracket_statesum_range(d, range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("state sum worker panicked"))
            .sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use skein_core::bracket::corpus::standard_corpus;

    #[test]
    fn matches_serial() {
        for (name, d) in standard_corpus() {
            let serial = bracket_statesum(&d);
            for t in [1, 2, 3, 8] {
                assert_eq!(bracket_threaded(&d, t), serial, "{name} with {t} threads");
            }
        }
    }
}
