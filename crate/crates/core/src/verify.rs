//! Independent checks: exact evaluation at points, identically-zero
//! residuals for parametric solutions, and bounded brute-force search.

use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::Rational;
use crate::multipoly::{clear_denominators, MultiPoly, PolyError, RatFunc};
use crate::par::{flat_map_collect, Execution};
use crate::varieties::{DiagonalForm, ParametricSolution, SolutionVector};

pub use crate::congruent::congruent_check_small;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("index {0} is out of range")]
    BadIndex(usize),
    #[error("height {height} exceeds the cap {cap}")]
    HeightCapExceeded { height: u64, cap: u64 },
    #[error("brute force supports at most 6 variables")]
    TooManyVariables,
    #[error("coefficients too large for the fixed-width search")]
    Overflow,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Numeric,
    Symbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Residual {
    Numeric(#[serde(with = "crate::json::rational")] Rational),
    Symbolic(MultiPoly),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Self::Numeric(q) => q.is_zero(),
            Self::Symbolic(p) => p.is_zero(),
        }
    }
}

/// The equation a report refers to.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Target {
    Form(DiagonalForm),
    Coefficients { coeffs: Vec<RatFunc> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub form: Target,
    pub mode: Mode,
    pub outcome: Outcome,
    /// `Σ αᵢxᵢ⁴`; for parametric solutions, after clearing denominators.
    pub residual: Residual,
    /// Every coordinate is zero (or identically zero).
    pub trivial: bool,
    /// Required coordinates that are zero (numeric) or coordinates that
    /// vanish identically (symbolic).
    pub zero_coordinates: Vec<usize>,
    /// Cleared numerator of each coordinate; its zeros are the parameter
    /// values where that coordinate vanishes.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vanishing_loci: Vec<MultiPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<MultiPoly>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

/// Passes iff `Σ αᵢvᵢ⁴ = 0`, `v ≠ 0` and every required coordinate is nonzero.
pub fn verify_numeric(
    form: &DiagonalForm,
    v: &SolutionVector,
    required_nonzero: &[usize],
) -> Result<VerificationReport, VerifyError> {
    let residual = form.evaluate(&v.0).ok_or(VerifyError::ArityMismatch {
        expected: form.arity(),
        got: v.len(),
    })?;
    if let Some(&i) = required_nonzero.iter().find(|&&i| i >= v.len()) {
        return Err(VerifyError::BadIndex(i));
    }
    let zero_coordinates: Vec<usize> = required_nonzero.iter().copied().filter(|&i| v.0[i].is_zero()).collect();
    let trivial = v.0.iter().all(Zero::is_zero);
    Ok(VerificationReport {
        form: Target::Form(form.clone()),
        mode: Mode::Numeric,
        outcome: outcome(residual.is_zero() && !trivial && zero_coordinates.is_empty()),
        residual: Residual::Numeric(residual),
        trivial,
        zero_coordinates,
        vanishing_loci: Vec::new(),
        multiplier: None,
    })
}

/// Passes iff the cleared residual is the zero polynomial and not every
/// coordinate vanishes identically.
pub fn verify_symbolic(form: &DiagonalForm, ps: &ParametricSolution) -> Result<VerificationReport, VerifyError> {
    let coeffs: Vec<RatFunc> = form.coeffs().iter().cloned().map(RatFunc::constant).collect();
    let mut report = verify_symbolic_coeffs(&coeffs, ps)?;
    report.form = Target::Form(form.clone());
    Ok(report)
}

/// As [`verify_symbolic`] for coefficients that are themselves rational
/// functions of the parameters.
pub fn verify_symbolic_coeffs(coeffs: &[RatFunc], ps: &ParametricSolution) -> Result<VerificationReport, VerifyError> {
    if coeffs.len() != ps.coords.len() {
        return Err(VerifyError::ArityMismatch {
            expected: coeffs.len(),
            got: ps.coords.len(),
        });
    }
    let cleared = clear_denominators(&ps.coords);
    let alphas = clear_denominators(coeffs).coords;
    let residual = alphas
        .iter()
        .zip(&cleared.coords)
        .fold(MultiPoly::zero(), |acc, (a, p)| acc + a * &p.pow(4));
    let zero_coordinates: Vec<usize> = cleared
        .coords
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_zero())
        .map(|(i, _)| i)
        .collect();
    let trivial = zero_coordinates.len() == cleared.coords.len();
    Ok(VerificationReport {
        form: Target::Coefficients { coeffs: coeffs.to_vec() },
        mode: Mode::Symbolic,
        outcome: outcome(residual.is_zero() && !trivial),
        residual: Residual::Symbolic(residual),
        trivial,
        zero_coordinates,
        vanishing_loci: cleared.coords,
        multiplier: Some(cleared.multiplier),
    })
}

/// Caps for the bounded searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_height: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_height: 2000 }
    }
}

impl Limits {
    pub fn check(&self, height: u64) -> Result<(), VerifyError> {
        if height > self.max_height {
            return Err(VerifyError::HeightCapExceeded {
                height,
                cap: self.max_height,
            });
        }
        Ok(())
    }
}

/// Exact fourth root of a nonnegative `i128`.
fn fourth_root(q: i128) -> Option<i128> {
    if q < 0 {
        return None;
    }
    let guess = (q as f64).sqrt().sqrt().round() as i128;
    (guess.saturating_sub(1).max(0)..=guess + 1).find(|r| r.checked_pow(4) == Some(q))
}

/// All primitive integer solutions with `max |xᵢ| ≤ height`, one per sign
/// class (every coordinate nonnegative), in lexicographic order.
///
/// The first `k − 1` coordinates are enumerated and the last is recovered
/// with an exact fourth root.
pub fn brute_force(
    form: &DiagonalForm,
    height: u64,
    limits: &Limits,
    exec: Execution,
) -> Result<Vec<SolutionVector>, VerifyError> {
    limits.check(height)?;
    let k = form.arity();
    if k > 6 {
        return Err(VerifyError::TooManyVariables);
    }
    let coeffs: Vec<i128> = form
        .integer_coeffs()
        .iter()
        .map(|c| c.to_i128())
        .collect::<Option<_>>()
        .ok_or(VerifyError::Overflow)?;
    let h = height as i128;
    let h4 = h.checked_pow(4).ok_or(VerifyError::Overflow)?;
    let bound = coeffs
        .iter()
        .try_fold(0i128, |acc, c| c.checked_abs()?.checked_mul(h4)?.checked_add(acc))
        .ok_or(VerifyError::Overflow)?;
    if bound.checked_mul(2).is_none() {
        return Err(VerifyError::Overflow);
    }
    if height == 0 {
        return Ok(Vec::new());
    }

    let last = coeffs[k - 1];
    let mut found: Vec<Vec<i128>> = flat_map_collect(exec, 0..=height, |x0| {
        let mut out = Vec::new();
        let mut prefix = vec![x0 as i128];
        let partial = coeffs[0] * (x0 as i128).pow(4);
        enumerate(&coeffs[..k - 1], 1, h, partial, &mut prefix, &mut |xs, sum| {
            if (-sum) % last != 0 {
                return;
            }
            let Some(r) = fourth_root(-sum / last) else { return };
            if r > h {
                return;
            }
            let mut v = xs.to_vec();
            v.push(r);
            if v.iter().all(|x| *x == 0) {
                return;
            }
            if v.iter().fold(0i128, |g, x| g.gcd(x)) == 1 {
                out.push(v);
            }
        });
        out
    });
    found.sort();
    Ok(found
        .into_iter()
        .map(|v| SolutionVector(v.into_iter().map(|x| Rational::from_integer(x.into())).collect()))
        .collect())
}

fn enumerate<F: FnMut(&[i128], i128)>(
    coeffs: &[i128],
    slot: usize,
    h: i128,
    sum: i128,
    prefix: &mut Vec<i128>,
    visit: &mut F,
) {
    if slot == coeffs.len() {
        visit(prefix, sum);
        return;
    }
    for x in 0..=h {
        prefix.push(x);
        enumerate(coeffs, slot + 1, h, sum + coeffs[slot] * x.pow(4), prefix, visit);
        prefix.pop();
    }
}

/// Nonnegative primitive representative of a solution, for comparing
/// against [`brute_force`] output.
pub fn canonical(v: &SolutionVector) -> SolutionVector {
    let ints = crate::exactnum::primitive_rational(&v.0);
    SolutionVector::from_integers(ints.into_iter().map(|x| if x < Zero::zero() { -x } else { x }).collect())
}
