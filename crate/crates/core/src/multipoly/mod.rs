//! Sparse multivariate polynomials and rational functions over the rationals.
//!
//! Every parametric solution in the crate is carried as a list of
//! [`RatFunc`]s; identities are checked by expanding to a [`MultiPoly`] and
//! testing for the zero polynomial.

mod json;
mod poly;
mod ratfunc;

use thiserror::Error;

pub use poly::{Exponents, MultiPoly};
pub use ratfunc::RatFunc;

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0:?} is not bound")]
    UnboundVariable(String),
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

/// Coordinates multiplied through by a common polynomial `multiplier`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cleared {
    pub coords: Vec<MultiPoly>,
    pub multiplier: MultiPoly,
}

/// Multiplies every coordinate by one common polynomial `D` so all results
/// are polynomials with integer coefficients.
///
/// `D` is the product of the largest monomial factor over all denominators,
/// the non-monomial denominator parts with divisibility duplicates removed,
/// and the lcm of the remaining coefficient denominators. For a homogeneous
/// quartic form `F`, `F(D·x) = D⁴·F(x)`, so solutions stay solutions.
pub fn clear_denominators(coords: &[RatFunc]) -> Cleared {
    let mut mono: std::collections::BTreeMap<String, u32> = Default::default();
    let mut factors: Vec<MultiPoly> = Vec::new();
    for c in coords {
        let den = c.denom();
        let m = den.monomial_gcd();
        for (v, e) in &m {
            let slot = mono.entry(v.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        let rest = den.div_monomial(&m);
        if rest.as_constant().is_some() {
            continue;
        }
        absorb_factor(&mut factors, rest);
    }
    let mut multiplier = MultiPoly::from_monomial_map(Rational::from_integer(1.into()), &mono);
    for f in &factors {
        multiplier = &multiplier * f;
    }
    let mut out: Vec<MultiPoly> = coords
        .iter()
        .map(|c| {
            let q = multiplier
                .div_exact(c.denom())
                .expect("common multiplier is divisible by every denominator");
            c.numer() * &q
        })
        .collect();
    let scale = out
        .iter()
        .chain(std::iter::once(&multiplier))
        .map(|p| p.coefficient_denominator())
        .fold(num_bigint::BigInt::from(1), |acc, d| num_integer::Integer::lcm(&acc, &d));
    if scale != 1.into() {
        let s = Rational::from_integer(scale);
        out.iter_mut().for_each(|p| *p = p.scale_by(&s));
        multiplier = multiplier.scale_by(&s);
    }
    Cleared {
        coords: out,
        multiplier,
    }
}

/// Adds `p` to a list of pairwise non-dividing factors.
fn absorb_factor(factors: &mut Vec<MultiPoly>, p: MultiPoly) {
    for f in factors.iter_mut() {
        if f.div_exact(&p).is_some() {
            return;
        }
        if p.div_exact(f).is_some() {
            *f = p;
            return;
        }
    }
    factors.push(p);
}
