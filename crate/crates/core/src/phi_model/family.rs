use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::rational_serde;
use crate::scalar::Rational;

/// A point mass of the transformed Lévy measure on `(0, 1]`.
///
/// An atom at `x = 1` is a killing rate: the subordinator jumps to infinity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    #[serde(with = "rational_serde")]
    pub x: Rational,
    #[serde(with = "rational_serde")]
    pub w: Rational,
}

impl Atom {
    pub fn new(x: Rational, w: Rational) -> Self {
        Self { x, w }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateKind {
    /// Every part equals one (pure drift).
    Singletons,
    /// A single part of size `n` (unit atom at `x = 1`).
    OnePart,
}

/// Lévy data of a subordinator, expressed through the image measure on
/// `[0, 1]` under `x = 1 - exp(-z)`, or through a closed-form preset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LevyFamily {
    #[serde(rename = "discrete")]
    DiscreteMeasure {
        #[serde(with = "rational_serde", default = "Rational::zero")]
        drift: Rational,
        #[serde(default)]
        atoms: Vec<Atom>,
    },
    /// Density `scale * x^(a-1) (1-x)^(b-1)` on `(0, 1)`.
    #[serde(rename = "beta")]
    BetaDensity {
        #[serde(with = "rational_serde", default = "Rational::zero")]
        drift: Rational,
        #[serde(with = "rational_serde")]
        scale: Rational,
        #[serde(with = "rational_serde")]
        a: Rational,
        #[serde(with = "rational_serde")]
        b: Rational,
    },
    TwoParam {
        #[serde(with = "rational_serde")]
        alpha: Rational,
        #[serde(with = "rational_serde")]
        theta: Rational,
    },
    /// `(0, theta)` member of the two-parameter family.
    Ewens {
        #[serde(with = "rational_serde")]
        theta: Rational,
    },
    /// Geometric sampling with tail probability `x`.
    Geometric {
        #[serde(with = "rational_serde")]
        x: Rational,
    },
    Degenerate {
        structure: DegenerateKind,
    },
}

impl LevyFamily {
    pub fn two_param(alpha: Rational, theta: Rational) -> Self {
        LevyFamily::TwoParam { alpha, theta }
    }

    pub fn discrete(drift: Rational, atoms: Vec<(Rational, Rational)>) -> Self {
        LevyFamily::DiscreteMeasure {
            drift,
            atoms: atoms.into_iter().map(|(x, w)| Atom::new(x, w)).collect(),
        }
    }

    /// Rewrites presets into one of the three primitive forms
    /// (discrete, beta density, two-parameter).
    pub fn canonical(&self) -> LevyFamily {
        match self {
            LevyFamily::Ewens { theta } => LevyFamily::TwoParam {
                alpha: Rational::zero(),
                theta: theta.clone(),
            },
            LevyFamily::Geometric { x } => {
                LevyFamily::discrete(Rational::zero(), vec![(x.clone(), Rational::one())])
            }
            LevyFamily::Degenerate {
                structure: DegenerateKind::Singletons,
            } => LevyFamily::discrete(Rational::one(), vec![]),
            LevyFamily::Degenerate {
                structure: DegenerateKind::OnePart,
            } => LevyFamily::discrete(Rational::zero(), vec![(Rational::one(), Rational::one())]),
            other => other.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match self.canonical() {
            LevyFamily::DiscreteMeasure { drift, atoms } => {
                if drift.is_negative() {
                    return bad(format!("drift must be non-negative, got {drift}"));
                }
                for atom in &atoms {
                    if !(atom.x.is_positive() && atom.x <= Rational::one()) {
                        return bad(format!("atom location {} is outside (0, 1]", atom.x));
                    }
                    if !atom.w.is_positive() {
                        return bad(format!("atom weight {} must be positive", atom.w));
                    }
                }
                if drift.is_zero() && atoms.is_empty() {
                    return bad("either the drift or the measure must be nonzero".into());
                }
            }
            LevyFamily::BetaDensity { drift, scale, a, b } => {
                if drift.is_negative() {
                    return bad(format!("drift must be non-negative, got {drift}"));
                }
                if !scale.is_positive() || !a.is_positive() || !b.is_positive() {
                    return bad(format!(
                        "beta density needs scale, a, b > 0 (got {scale}, {a}, {b})"
                    ));
                }
            }
            LevyFamily::TwoParam { alpha, theta } => {
                if alpha.is_negative() || alpha >= Rational::one() {
                    return bad(format!("alpha = {alpha} is outside [0, 1)"));
                }
                if theta.is_negative() {
                    return bad(format!("theta = {theta} is negative"));
                }
            }
            LevyFamily::Ewens { .. } | LevyFamily::Geometric { .. } | LevyFamily::Degenerate { .. } => {
                unreachable!("presets are canonicalised above")
            }
        }
        Ok(())
    }

    /// Drift coefficient `d` in the raw normalisation.
    pub fn drift(&self) -> Rational {
        match self.canonical() {
            LevyFamily::DiscreteMeasure { drift, .. } | LevyFamily::BetaDensity { drift, .. } => drift,
            _ => Rational::zero(),
        }
    }

    /// `(alpha, theta)` when the family is a member of the two-parameter family.
    pub fn two_param_parameters(&self) -> Option<(Rational, Rational)> {
        match self.canonical() {
            LevyFamily::TwoParam { alpha, theta } => Some((alpha, theta)),
            _ => None,
        }
    }
}
