use super::rng::RngStream;
use crate::decrement::probability_atoms;
use crate::error::{Error, Result};
use crate::law::Composition;
use crate::phi_model::Atom;

/// Largest number of cuts drawn for one stick-breaking path.
pub const STICK_DRAW_CAP: usize = 10_000;

/// Default residual-stick threshold of the myriads construction.
pub const DEFAULT_MYRIADS_EPSILON: f64 = 1e-10;

/// Cut-fraction law lowered to floats, ready for repeated sampling.
#[derive(Debug, Clone)]
pub struct CutLaw {
    locations: Vec<f64>,
    weights: Vec<f64>,
}

impl CutLaw {
    pub fn new(x_law: &[Atom]) -> Result<Self> {
        let (locations, weights) = probability_atoms::<f64>(x_law)?.into_iter().unzip();
        Ok(Self { locations, weights })
    }

    pub fn draw(&self, rng: &mut RngStream) -> f64 {
        self.locations[rng.categorical(&self.weights)]
    }
}

/// Breaks `[0, 1]` at `Y_k = 1 - prod_{i<=k} (1 - X_i)`, throws `n` uniform
/// points, and returns the sizes of the non-empty groups from left to right.
pub fn sample_stick_breaking(x_law: &CutLaw, n: usize, rng: &mut RngStream) -> Result<Composition> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    let mut points: Vec<f64> = (0..n).map(|_| rng.uniform()).collect();
    points.sort_by(f64::total_cmp);
    let mut parts = Vec::new();
    let mut residual = 1.0;
    let mut next = 0;
    for _ in 0..STICK_DRAW_CAP {
        residual *= 1.0 - x_law.draw(rng);
        let cut = 1.0 - residual;
        let start = next;
        while next < n && (points[next] <= cut || residual == 0.0) {
            next += 1;
        }
        if next > start {
            parts.push(next - start);
        }
        if next == n {
            return Composition::new(parts);
        }
    }
    Err(Error::DrawCapExceeded(STICK_DRAW_CAP))
}

/// Draw of the singleton frequency `f` of the myriads construction: alternately
/// a `beta(1, 1/d)` fraction of the residual stick is kept as singleton mass and
/// an `X` fraction of what remains is discarded, until the residual is below
/// `epsilon`. The truncation biases `f` downward by at most `epsilon`.
pub fn sample_myriads_frequency(
    x_law: &CutLaw,
    drift: f64,
    epsilon: f64,
    rng: &mut RngStream,
) -> Result<f64> {
    if !(drift > 0.0 && drift.is_finite()) {
        return Err(Error::InvalidParameters(format!(
            "drift must be positive, got {drift}"
        )));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameters(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    let mut f = 0.0;
    let mut residual = 1.0;
    for _ in 0..STICK_DRAW_CAP * 100 {
        if residual < epsilon {
            return Ok(f);
        }
        let z = 1.0 - rng.uniform().powf(drift);
        f += residual * z;
        residual *= (1.0 - z) * (1.0 - x_law.draw(rng));
    }
    Err(Error::DrawCapExceeded(STICK_DRAW_CAP * 100))
}
