//! Diagonal quartic forms `Σ αᵢ xᵢ⁴` and the solvers that build parametric
//! solutions for them from congruent-number certificates.

mod expand;
mod splitting;
mod thm11;

pub(crate) use thm11::Route;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{clear_rational_denominators, Integer, Rational};
use crate::multipoly::{PolyError, RatFunc};

pub use expand::{
    remark_family, remark_search_bounds, thm12_expand, thm12_form, thm12_term_count, thm13_compose,
    FamilyWitness, RemarkFamily, Thm13Audit,
};
pub use splitting::{candidates, signature, splitting_search, SearchBounds, SplitTerm, SplittingIdentity};
pub use thm11::{
    solve_equation, thm11_eq16, thm11_eq17, thm11_eq18, thm11_eq19_printed, thm11_eq19_variant,
    thm11_eq20_printed, Equation, VarietySolution,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("no splitting identity found for the requested signature")]
    UnresolvedSplitting,
    #[error("witness does not hold: {0}")]
    InvalidWitness(String),
    #[error("solution failed verification: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `Σ αᵢ xᵢ⁴` with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DiagonalForm {
    #[serde(with = "crate::json::rational_seq")]
    coeffs: Vec<Rational>,
    vars: Vec<String>,
}

const DEFAULT_VARS: [&str; 6] = ["x", "y", "z", "u", "v", "w"];

pub fn default_vars(k: usize) -> Vec<String> {
    if k <= DEFAULT_VARS.len() {
        DEFAULT_VARS[..k].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=k).map(|i| format!("x{i}")).collect()
    }
}

impl DiagonalForm {
    pub fn new(coeffs: Vec<Rational>, vars: Vec<String>) -> Result<Self, VarietyError> {
        if coeffs.len() < 3 {
            return Err(VarietyError::InvalidForm("need at least 3 terms".into()));
        }
        if coeffs.iter().any(Zero::is_zero) {
            return Err(VarietyError::InvalidForm("zero coefficient".into()));
        }
        if vars.len() != coeffs.len() {
            return Err(VarietyError::InvalidForm("one variable per coefficient".into()));
        }
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vars.len() {
            return Err(VarietyError::InvalidForm("duplicate variable".into()));
        }
        Ok(Self { coeffs, vars })
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self, VarietyError> {
        let vars = default_vars(coeffs.len());
        Self::new(coeffs, vars)
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, VarietyError> {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients sorted ascending, for comparisons up to variable order.
    pub fn coefficient_multiset(&self) -> Vec<Rational> {
        let mut c = self.coeffs.clone();
        c.sort();
        c
    }

    /// `Σ αᵢ vᵢ⁴`; `None` on arity mismatch.
    pub fn evaluate(&self, v: &[Rational]) -> Option<Rational> {
        (v.len() == self.arity()).then(|| {
            self.coeffs
                .iter()
                .zip(v)
                .map(|(a, x)| {
                    let x2 = x * x;
                    a * &x2 * &x2
                })
                .sum()
        })
    }

    /// Integer coefficients proportional to the form's.
    pub fn integer_coeffs(&self) -> Vec<Integer> {
        clear_rational_denominators(&self.coeffs).0
    }
}

impl<'de> Deserialize<'de> for DiagonalForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(with = "crate::json::rational_seq")]
            coeffs: Vec<Rational>,
            vars: Option<Vec<String>>,
        }
        let raw = Raw::deserialize(d)?;
        let vars = raw.vars.unwrap_or_else(|| default_vars(raw.coeffs.len()));
        DiagonalForm::new(raw.coeffs, vars).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, v)) in self.coeffs.iter().zip(&self.vars).enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != Rational::from_integer(1.into()) {
                write!(f, "{mag}*")?;
            }
            write!(f, "{v}^4")?;
        }
        f.write_str(" = 0")
    }
}

/// A concrete point, serialized as a list of number strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SolutionVector(#[serde(with = "crate::json::rational_seq")] pub Vec<Rational>);

impl SolutionVector {
    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn from_integers(v: Vec<Integer>) -> Self {
        Self(v.into_iter().map(Rational::from_integer).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies through by the lcm of the denominators.
    pub fn cleared(&self) -> SolutionVector {
        Self::from_integers(clear_rational_denominators(&self.0).0)
    }

    pub fn scaled(&self, lambda: &Rational) -> SolutionVector {
        Self(self.0.iter().map(|x| x * lambda).collect())
    }

    pub fn permuted(&self, order: &[usize]) -> SolutionVector {
        Self(order.iter().map(|&i| self.0[i].clone()).collect())
    }
}

/// Rational-function coordinates in the named parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParametricSolution {
    pub params: Vec<String>,
    pub coords: Vec<RatFunc>,
}

impl ParametricSolution {
    pub fn new(params: &[&str], coords: Vec<RatFunc>) -> Self {
        Self {
            params: params.iter().map(|s| s.to_string()).collect(),
            coords,
        }
    }

    pub fn permuted(&self, order: &[usize]) -> Self {
        Self {
            params: self.params.clone(),
            coords: order.iter().map(|&i| self.coords[i].clone()).collect(),
        }
    }

    /// Evaluates at values given in parameter order.
    pub fn eval(&self, values: &[Rational]) -> Result<SolutionVector, PolyError> {
        let point: BTreeMap<String, Rational> = self
            .params
            .iter()
            .cloned()
            .zip(values.iter().cloned())
            .collect();
        for p in &self.params {
            if !point.contains_key(p) {
                return Err(PolyError::UnboundVariable(p.clone()));
            }
        }
        self.coords
            .iter()
            .map(|c| c.eval_at(&point))
            .collect::<Result<_, _>>()
            .map(SolutionVector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn form_validation() {
        assert!(DiagonalForm::from_ints(&[1, 1]).is_err());
        assert!(DiagonalForm::from_ints(&[1, 0, 1]).is_err());
        let f = DiagonalForm::from_ints(&[1, 1, -1, -2, -2, -2]).unwrap();
        assert_eq!(f.vars(), ["x", "y", "z", "u", "v", "w"]);
        assert_eq!(f.to_string(), "x^4 + y^4 - z^4 - 2*u^4 - 2*v^4 - 2*w^4 = 0");
        assert_eq!(
            DiagonalForm::new(vec![rat(1, 1); 3], vec!["a".into(), "a".into(), "b".into()]),
            Err(VarietyError::InvalidForm("duplicate variable".into()))
        );
    }

    #[test]
    fn evaluation() {
        let f = DiagonalForm::from_ints(&[1, 1, -1, -2, -2, -2]).unwrap();
        assert_eq!(f.evaluate(&SolutionVector::from_ints(&[1; 6]).0), Some(rat(-5, 1)));
        assert_eq!(f.evaluate(&[rat(1, 1)]), None);
    }

    #[test]
    fn form_json() {
        let f = DiagonalForm::from_ints(&[1, 1, -1, -2, -2, -2]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"coeffs":["1","1","-1","-2","-2","-2"],"vars":["x","y","z","u","v","w"]}"#
        );
        assert_eq!(serde_json::from_str::<DiagonalForm>(&s).unwrap(), f);
        let bare: DiagonalForm = serde_json::from_str(r#"{"coeffs":["1","4","-1","1"]}"#).unwrap();
        assert_eq!(bare.vars(), ["x", "y", "z", "u"]);
        assert!(serde_json::from_str::<DiagonalForm>(r#"{"coeffs":["1","0","1"]}"#).is_err());
    }

    #[test]
    fn cleared_vectors() {
        let v = SolutionVector(vec![rat(1, 2), rat(-3, 4), rat(2, 1)]);
        assert_eq!(v.cleared(), SolutionVector::from_ints(&[2, -3, 8]));
    }
}
