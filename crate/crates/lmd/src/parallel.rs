//! Scoped-thread [`Runner`] for the core enumeration loops.

use std::thread;

use lmd_core::enumerate::{Partition, Runner};

/// Splits every level across this many scoped threads. `Threads(1)` runs
/// inline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threads(pub usize);

impl Runner for Threads {
    fn workers(&self) -> usize {
        self.0.max(1)
    }

    fn run<R, F>(&self, job: F) -> Vec<R>
    where
        R: Send,
        F: Fn(Partition) -> R + Sync,
    {
        let count = self.workers();
        if count == 1 {
            return vec![job(Partition::WHOLE)];
        }
        let job = &job;
        thread::scope(|s| {
            let handles: Vec<_> = (0..count)
                .map(|index| s.spawn(move || job(Partition { index, count })))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lmd_core::engine::{delta_loc_bipartite_with, delta_loc_brute_with, delta_loc_general_with};
    use lmd_core::generators::{gnp, random_bipartite};

    #[test]
    fn partitions_arrive_in_order() {
        let got = Threads(4).run(|p| (p.index, p.count));
        assert_eq!(got, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(Threads(0).workers(), 1);
    }

    #[test]
    fn results_do_not_depend_on_thread_count() {
        for seed in 0..20 {
            let g = gnp(11, 0.5, seed).unwrap();
            let one = delta_loc_general_with(&g, &Threads(1)).unwrap();
            for t in [2, 3, 5] {
                assert_eq!(delta_loc_general_with(&g, &Threads(t)).unwrap(), one);
                assert_eq!(
                    delta_loc_brute_with(&g, &Threads(t)).unwrap(),
                    delta_loc_brute_with(&g, &Threads(1)).unwrap()
                );
            }
            let b = random_bipartite(6, 7, 0.4, seed).unwrap();
            assert_eq!(
                delta_loc_bipartite_with(&b, &Threads(4)).unwrap(),
                delta_loc_bipartite_with(&b, &Threads(1)).unwrap()
            );
        }
    }
}
