//! Varieties with many terms: expanding `2(Σ kᵢbᵢ⁴)²w⁴` term by term.

use num_traits::{One, Zero};
use serde::Serialize;

use super::splitting::{splitting_search, SearchBounds, SplittingIdentity};
use super::thm11::Route;
use super::{DiagonalForm, ParametricSolution, VarietyError};
use crate::congruent::FamilyShape;
use crate::exactnum::Rational;
use crate::multipoly::{MultiPoly, RatFunc};
use crate::par::Execution;

/// A parametric identity `shape(a₁, a₂) = Σ kᵢ·bᵢ⁴`.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyWitness {
    pub shape: FamilyShape,
    pub a1: RatFunc,
    pub a2: RatFunc,
    pub k: Vec<Rational>,
    pub b: Vec<RatFunc>,
}

impl FamilyWitness {
    /// `(t⁴/s + 2)⁴ − (t⁴/s − 2)⁴ = s·(2t³/s)⁴ + (4/s)·(2t)⁴`.
    pub fn lemma28(s: &Rational) -> Result<Self, VarietyError> {
        if s.is_zero() {
            return Err(VarietyError::DegenerateParameters("s must be nonzero".into()));
        }
        let t = RatFunc::var("t");
        let t4s = crate::algebra::Ring::pow(&t, 4).scale_by(&s.recip());
        let two = RatFunc::constant(Rational::from_integer(2.into()));
        Ok(Self {
            shape: FamilyShape::Difference,
            a1: t4s.clone() + two.clone(),
            a2: t4s - two,
            k: vec![s.clone(), Rational::from_integer(4.into()) / s],
            b: vec![
                crate::algebra::Ring::pow(&t, 3).scale_by(&(Rational::from_integer(2.into()) / s)),
                t.scale_by(&Rational::from_integer(2.into())),
            ],
        })
    }

    pub fn value(&self) -> RatFunc {
        self.shape.value(&self.a1, &self.a2)
    }

    pub fn check(&self) -> Result<(), VarietyError> {
        let bad = |m: &str| Err(VarietyError::InvalidWitness(m.to_string()));
        if self.k.is_empty() || self.k.len() != self.b.len() {
            return bad("need one coefficient per term");
        }
        if self.k.iter().any(Zero::is_zero) || self.b.iter().any(RatFunc::is_zero) {
            return bad("zero term");
        }
        if self.a1.is_zero() || self.a2.is_zero() {
            return bad("arguments must not vanish identically");
        }
        let sum = self.k.iter().zip(&self.b).fold(RatFunc::from(MultiPoly::zero()), |acc, (k, b)| {
            acc + crate::algebra::Ring::pow(b, 4).scale_by(k)
        });
        if sum != self.value() {
            return bad("shape value differs from the weighted sum of fourth powers");
        }
        Ok(())
    }

    fn params(&self) -> Vec<String> {
        let mut v: Vec<String> = [&self.a1, &self.a2]
            .into_iter()
            .chain(&self.b)
            .flat_map(|f| f.vars())
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

/// `(m² + m + 6) / 2`: three surface terms, `m` squares and `C(m, 2)` cross terms.
pub fn thm12_term_count(m: usize) -> usize {
    (m * m + m + 6) / 2
}

/// `x⁴ + y⁴ − 2z⁴ − Σ 2kᵢ²·uᵢ⁴ − Σ_{i<j} 4kᵢkⱼ·u_{ij}⁴`.
pub fn thm12_form(k: &[Rational]) -> Result<DiagonalForm, VarietyError> {
    let int = |v: i64| Rational::from_integer(v.into());
    let mut coeffs = vec![int(1), int(1), int(-2)];
    coeffs.extend(k.iter().map(|ki| int(-2) * ki * ki));
    for i in 0..k.len() {
        for j in i + 1..k.len() {
            coeffs.push(int(-4) * &k[i] * &k[j]);
        }
    }
    DiagonalForm::from_coeffs(coeffs)
}

/// The witness value is congruent along the whole family, so the family
/// certificate at `(a₁, a₂)` gives `x⁴ + y⁴ = 2z⁴ + 2(Σ kᵢbᵢ⁴)²w⁴`; the
/// square is expanded into `(bᵢ²w)⁴` and `(bᵢbⱼw)⁴` terms.
pub fn thm12_expand(w: &FamilyWitness) -> Result<(DiagonalForm, ParametricSolution), VarietyError> {
    w.check()?;
    let form = thm12_form(&w.k)?;
    let values = w.shape.formulas(&w.a1, &w.a2);
    let [x0, y0, z0, w0] = Route::Prop26
        .lift(&values)
        .ok_or_else(|| VarietyError::DegenerateParameters("family y vanishes identically".into()))?;
    let mut coords = vec![x0, y0, z0];
    coords.extend(w.b.iter().map(|b| b.clone() * b.clone() * w0.clone()));
    for i in 0..w.b.len() {
        for j in i + 1..w.b.len() {
            coords.push(w.b[i].clone() * w.b[j].clone() * w0.clone());
        }
    }
    let params = w.params();
    let params: Vec<&str> = params.iter().map(String::as_str).collect();
    Ok((form, ParametricSolution::new(&params, coords)))
}

/// Variable counts for a composition from a `(2m − 1)`-term witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm13Audit {
    pub m: usize,
    pub witness_terms: usize,
    pub variables: usize,
    /// `(m'² + m' + 6) / 2` at `m' = 2m − 1`, i.e. `2m² − m + 3`.
    pub expansion_count: usize,
    /// `2m² − m + 4` as stated for this construction.
    pub stated_count: usize,
}

impl Thm13Audit {
    pub fn agrees(&self) -> bool {
        self.expansion_count == self.stated_count
    }
}

pub fn thm13_compose(
    m: usize,
    w: &FamilyWitness,
) -> Result<(DiagonalForm, ParametricSolution, Thm13Audit), VarietyError> {
    if m < 3 {
        return Err(VarietyError::InvalidWitness("m must be at least 3".into()));
    }
    if w.k.len() != 2 * m - 1 {
        return Err(VarietyError::InvalidWitness(format!(
            "expected {} terms, got {}",
            2 * m - 1,
            w.k.len()
        )));
    }
    let (form, ps) = thm12_expand(w)?;
    let audit = Thm13Audit {
        m,
        witness_terms: w.k.len(),
        variables: form.arity(),
        expansion_count: thm12_term_count(2 * m - 1),
        stated_count: 2 * m * m - m + 4,
    };
    Ok((form, ps, audit))
}

/// Bounds for splitting `2n(t)²` over monomials in `t` alone.
pub fn remark_search_bounds() -> SearchBounds {
    SearchBounds {
        max_exponent: 6,
        max_coeff: 8,
        max_denominator: 8,
        binomials: false,
        homogeneous_only: false,
    }
}

/// `x⁴ + y⁴ − s²z⁴ = 2u⁴ + 2v⁴ + 2s²w⁴` for a fixed nonzero `s`, from the
/// family value `n(t) = s·c⁴ + (4/s)·d⁴` and a splitting
/// `2n² = s²g₁⁴ + 2g₂⁴ + 2s²g₃⁴` found by search.
#[derive(Debug, Clone, PartialEq)]
pub struct RemarkFamily {
    pub s: Rational,
    pub form: DiagonalForm,
    pub parametric: ParametricSolution,
    pub splitting: SplittingIdentity,
}

pub fn remark_family(s: &Rational, bounds: &SearchBounds, exec: Execution) -> Result<RemarkFamily, VarietyError> {
    let witness = FamilyWitness::lemma28(s)?;
    witness.check()?;
    let n_poly = witness
        .value()
        .to_poly()
        .ok_or_else(|| VarietyError::InvalidWitness("family value is not a polynomial in t".into()))?;
    let s2 = s * s;
    let two = Rational::from_integer(2.into());
    let signature = [s2.clone(), two.clone(), &two * &s2];
    let splitting = splitting_search(&n_poly, &signature, bounds, exec).ok_or(VarietyError::UnresolvedSplitting)?;

    let values = witness.shape.formulas(&witness.a1, &witness.a2);
    let [x0, y0, z0, w0] = Route::Prop26
        .lift(&values)
        .ok_or_else(|| VarietyError::DegenerateParameters("family y vanishes identically".into()))?;
    let g: Vec<RatFunc> = splitting.terms.iter().map(|t| RatFunc::from(t.g.clone()) * w0.clone()).collect();
    let coords = vec![x0, y0, g[0].clone(), z0, g[1].clone(), g[2].clone()];
    let form = DiagonalForm::from_coeffs(vec![
        Rational::one(),
        Rational::one(),
        -s2.clone(),
        -two.clone(),
        -two.clone(),
        -(&two * &s2),
    ])?;
    Ok(RemarkFamily {
        s: s.clone(),
        form,
        parametric: ParametricSolution::new(&["t"], coords),
        splitting,
    })
}
