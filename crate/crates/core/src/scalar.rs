//! Scalar backends.
//!
//! Every table in the crate is generic over [`Scalar`]. Two backends exist:
//! arbitrary-precision rationals ([`Rational`]) and `f64`. A table never mixes
//! them; the type parameter enforces that.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Relative slack used by the float backend when testing signs of quantities
/// produced by alternating sums.
pub const FLOAT_SIGN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Sum
{
    const BACKEND: Backend;

    fn from_i64(v: i64) -> Self;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Lowers (float) or copies (exact) a rational.
    fn from_rational(r: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    /// Beta function `B(a, b)`. The exact backend only supports positive
    /// integer arguments.
    fn beta_fn(a: &Rational, b: &Rational) -> Result<Self>;

    /// `true` when the value is negative beyond rounding noise relative to `scale`.
    fn is_definitely_negative(&self, scale: &Self) -> bool;

    /// Equality; the float backend accepts an absolute difference up to `abs_tol`.
    fn approx_eq(&self, other: &Self, abs_tol: f64) -> bool;

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }

    fn powu(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    fn is_exact() -> bool {
        Self::BACKEND == Backend::Exact
    }
}

impl Scalar for Rational {
    const BACKEND: Backend = Backend::Exact;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn beta_fn(a: &Rational, b: &Rational) -> Result<Self> {
        let as_pos_int = |x: &Rational| -> Option<u64> {
            if x.is_integer() && x.is_positive() {
                x.to_integer().to_u64()
            } else {
                None
            }
        };
        match (as_pos_int(a), as_pos_int(b)) {
            (Some(p), Some(q)) => {
                let fact = |k: u64| -> BigInt { (1..=k).map(BigInt::from).product() };
                Ok(Rational::new(fact(p - 1) * fact(q - 1), fact(p + q - 1)))
            }
            _ => Err(Error::BackendMismatch(format!("B({a}, {b})"))),
        }
    }

    fn is_definitely_negative(&self, _scale: &Self) -> bool {
        self.is_negative()
    }

    fn approx_eq(&self, other: &Self, _abs_tol: f64) -> bool {
        self == other
    }
}

impl Scalar for f64 {
    const BACKEND: Backend = Backend::Float;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn beta_fn(a: &Rational, b: &Rational) -> Result<Self> {
        use statrs::function::gamma::ln_gamma;
        let (a, b) = (f64::from_rational(a), f64::from_rational(b));
        if !(a > 0.0 && b > 0.0) {
            return Err(Error::InvalidParameters(format!(
                "B({a}, {b}) needs positive arguments"
            )));
        }
        Ok((ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp())
    }

    fn is_definitely_negative(&self, scale: &Self) -> bool {
        *self < -FLOAT_SIGN_TOL * scale.abs().max(1.0)
    }

    fn approx_eq(&self, other: &Self, abs_tol: f64) -> bool {
        (self - other).abs() <= abs_tol
    }
}

/// `C(n, k)` computed in the target backend.
pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    let mut acc = S::one();
    for i in 1..=k {
        acc = acc * S::from_usize(n - k + i) / S::from_usize(i);
    }
    acc
}

/// Rising factorial `[x]_k = x (x+1) ... (x+k-1)`, with `[x]_0 = 1`.
pub fn rising<S: Scalar>(x: &S, k: usize) -> S {
    let mut acc = S::one();
    for i in 0..k {
        acc = acc * (x.clone() + S::from_usize(i));
    }
    acc
}

pub fn factorial<S: Scalar>(k: usize) -> S {
    (1..=k).fold(S::one(), |acc, i| acc * S::from_usize(i))
}

/// `(-1)^k` as a scalar.
pub fn sign<S: Scalar>(k: usize) -> S {
    if k.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// Parses `"p/q"`, an integer, or a decimal string (`"0.125"`, `"1e-3"`) exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("cannot parse {text:?} as a rational number"));
    if let Some((num, den)) = t.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(all_digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Ok(if negative { -value } else { value })
}
