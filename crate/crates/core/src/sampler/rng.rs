use rand::distr::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic pseudo-random stream (ChaCha8).
///
/// `RngStream::new(seed)` is stream 0 of `seed`. Independent streams of the
/// same seed are obtained with [`RngStream::substream`], which selects the
/// ChaCha stream number; batch sampling gives chunk `c` the stream `c + 1`.
#[derive(Debug, Clone)]
pub struct RngStream {
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self::substream(seed, 0)
    }

    pub fn substream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    /// Uniform draw on the open interval `(0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.sample(Open01)
    }

    /// Index drawn with probability proportional to `weights` by inverting the
    /// cumulative sum. Negative weights (float lowering noise) count as zero.
    ///
    /// Panics if no weight is positive.
    pub fn categorical(&mut self, weights: &[f64]) -> usize {
        let total: f64 = weights.iter().map(|w| w.max(0.0)).sum();
        assert!(total > 0.0, "categorical draw from an all-zero weight vector");
        let target = self.uniform() * total;
        let mut acc = 0.0;
        let mut last = 0;
        for (i, w) in weights.iter().enumerate() {
            if *w <= 0.0 {
                continue;
            }
            acc += w;
            last = i;
            if target < acc {
                return i;
            }
        }
        last
    }
}
