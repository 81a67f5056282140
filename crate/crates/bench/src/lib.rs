//! Benchmark inputs shared by the criterion targets.

use dualcon::{SOParams, SoPair};

/// Pairs of increasing size, from `so(3)` up to `so(4,1)`.
pub fn sample_params() -> Vec<SOParams> {
    [(2, 1, 0), (2, 1, 1), (3, 1, 1), (2, 2, 1)]
        .into_iter()
        .map(|(p, d, q)| SOParams::new(p, d, q).expect("catalog parameters"))
        .collect()
}

pub fn sample_pairs() -> Vec<SoPair> {
    sample_params().into_iter().map(SoPair::new).collect()
}
