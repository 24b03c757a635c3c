//! Six-variable varieties built from one congruent family.
//!
//! A family certificate gives either a point of `x⁴ + y⁴ = 2z⁴ + 2n²w⁴`
//! (through `E_n`) or of `x⁴ + y⁴ = z⁴ + 2n²w⁴` (through `X⁴ − n²Y⁴ = K²`).
//! A splitting `2n² = Σ cᵢgᵢ⁴` then turns `2n²w⁴` into three diagonal terms
//! `cᵢ(gᵢw)⁴`.

use std::fmt;

use num_traits::Zero;

use super::splitting::{signature, splitting_search, SearchBounds, SplittingIdentity};
use super::{DiagonalForm, ParametricSolution, SolutionVector, VarietyError};
use crate::congruent::{ec_coordinates, FamilyShape, FamilyValues};
use crate::exactnum::{rat_from_int, Integer, Rational};
use crate::multipoly::{MultiPoly, RatFunc};
use crate::par::Execution;
use crate::surfaces::{lemma27_coords, prop26_coords};

/// Which surface carries the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Route {
    /// `x⁴ + y⁴ − 2z⁴ = 2n²w⁴`
    Prop26,
    /// `x⁴ + y⁴ − z⁴ = 2n²w⁴`
    Lemma27,
}

impl Route {
    pub(crate) fn z_coeff(self) -> i64 {
        match self {
            Self::Prop26 => 2,
            Self::Lemma27 => 1,
        }
    }

    /// `[x, y, z, w]` on the route's surface from signed family values.
    pub(crate) fn lift<F: crate::algebra::Field>(self, v: &FamilyValues<F>) -> Option<[F; 4]> {
        match self {
            Self::Prop26 => {
                let (u, w) = ec_coordinates(&v.x, &v.y, &v.z, &v.t)?;
                Some(prop26_coords(&v.n, &u, &w))
            }
            Self::Lemma27 => Some(lemma27_coords(&v.n, &v.x, &v.y, &(v.z.clone() * v.t.clone()))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equation {
    /// `x⁴ + y⁴ − z⁴ = 2u⁴ + 2v⁴ + 2w⁴`
    Eq16,
    /// `x⁴ + y⁴ − z⁴ = u⁴ + 2v⁴ + 2w⁴`
    Eq17,
    /// `x⁴ + y⁴ + 4z⁴ = u⁴ + 2v⁴ + 2w⁴`
    Eq18,
    /// `x⁴ + y⁴ − 4z⁴ = 4u⁴ + v⁴ − 2w⁴`
    Eq19Variant,
}

impl Equation {
    pub const ALL: [Equation; 4] = [Self::Eq16, Self::Eq17, Self::Eq18, Self::Eq19Variant];

    pub fn id(self) -> &'static str {
        match self {
            Self::Eq16 => "eq16",
            Self::Eq17 => "eq17",
            Self::Eq18 => "eq18",
            Self::Eq19Variant => "eq19_variant",
        }
    }

    pub fn from_id(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.id() == s)
    }

    pub fn shape(self) -> FamilyShape {
        match self {
            Self::Eq16 | Self::Eq17 => FamilyShape::SumWithFour,
            Self::Eq18 => FamilyShape::Difference,
            Self::Eq19Variant => FamilyShape::TwiceSum,
        }
    }

    fn route(self) -> Route {
        match self {
            Self::Eq16 => Route::Prop26,
            _ => Route::Lemma27,
        }
    }

    /// Output position `i` takes natural coordinate `order[i]`, where the
    /// natural order is `[x, y, z, g₁w, g₂w, g₃w]`.
    fn order(self) -> [usize; 6] {
        match self {
            Self::Eq16 => [0, 1, 3, 2, 4, 5],
            Self::Eq17 => [0, 1, 2, 3, 5, 4],
            Self::Eq18 => [0, 1, 5, 2, 3, 4],
            Self::Eq19Variant => [0, 1, 3, 4, 2, 5],
        }
    }

    pub fn form(self) -> DiagonalForm {
        let split = split_terms(self.shape(), &MultiPoly::var("a"), &MultiPoly::var("b"));
        let mut natural = vec![1, 1, -self.route().z_coeff()];
        natural.extend(split.iter().map(|(c, _)| -c));
        let coeffs: Vec<i64> = self.order().iter().map(|&i| natural[i]).collect();
        DiagonalForm::from_ints(&coeffs).expect("nonzero coefficients")
    }

    /// The splitting `2n(a, b)² = Σ cᵢgᵢ⁴` the equation uses.
    pub fn splitting(self) -> SplittingIdentity {
        let (a, b) = (MultiPoly::var("a"), MultiPoly::var("b"));
        let n = self.shape().value(&a, &b);
        let terms = split_terms(self.shape(), &a, &b)
            .into_iter()
            .map(|(c, g)| (Rational::from_integer(c.into()), g))
            .collect();
        SplittingIdentity::new(n, terms)
    }

    /// Coordinates in output order from signed family values at `(a, b)`.
    fn coords<F: crate::algebra::Field>(self, a: &F, b: &F, v: &FamilyValues<F>) -> Option<Vec<F>> {
        let [x, y, z, w] = self.route().lift(v)?;
        let mut natural = vec![x, y, z];
        natural.extend(split_terms(self.shape(), a, b).into_iter().map(|(_, g)| g * w.clone()));
        Some(self.order().iter().map(|&i| natural[i].clone()).collect())
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// `(cᵢ, gᵢ)` with `Σ cᵢgᵢ⁴ = 2·shape(a, b)²`.
fn split_terms<R: crate::algebra::Ring>(shape: FamilyShape, a: &R, b: &R) -> [(i64, R); 3] {
    let ab = a.clone() * b.clone();
    let (a2, b2) = (a.square(), b.square());
    match shape {
        FamilyShape::SumWithFour => [(1, ab.scale(2)), (2, a2), (2, b2.scale(2))],
        FamilyShape::Difference => [(2, a2), (2, b2), (-4, ab)],
        FamilyShape::TwiceSum => [(4, a2.clone() + b2.clone()), (4, a2 - b2), (-2, ab.scale(2))],
    }
}

/// One solved equation: the form, its point at `(a, b)` (raw and with
/// denominators cleared) and the parametric solution in `a, b`.
#[derive(Debug, Clone, PartialEq)]
pub struct VarietySolution {
    pub equation: Equation,
    pub form: DiagonalForm,
    pub point: SolutionVector,
    pub cleared: SolutionVector,
    pub parametric: ParametricSolution,
    pub splitting: SplittingIdentity,
}

pub fn solve_equation(eq: Equation, a: &Integer, b: &Integer) -> Result<VarietySolution, VarietyError> {
    let cert = eq
        .shape()
        .certificate(a, b)
        .map_err(|e| VarietyError::DegenerateParameters(e.to_string()))?;
    let [n, x, y, z, t] = [&cert.n, &cert.x, &cert.y, &cert.z, &cert.t].map(|v| rat_from_int(v.clone()));
    let values = FamilyValues { n, x, y, z, t };
    let (ar, br) = (rat_from_int(a.clone()), rat_from_int(b.clone()));
    let point = SolutionVector(
        eq.coords(&ar, &br, &values)
            .ok_or_else(|| VarietyError::DegenerateParameters("certificate has y = 0".into()))?,
    );

    let form = eq.form();
    if !form.evaluate(&point.0).is_some_and(|r| r.is_zero()) {
        return Err(VarietyError::VerificationFailed(format!("{eq} at ({a}, {b})")));
    }
    let splitting = eq.splitting();
    if !splitting.holds() {
        return Err(VarietyError::VerificationFailed(format!("{eq} splitting")));
    }
    Ok(VarietySolution {
        equation: eq,
        form,
        cleared: point.cleared(),
        point,
        parametric: parametric(eq),
        splitting,
    })
}

/// Coordinates as rational functions of `a, b` from the signed family
/// polynomials.
fn parametric(eq: Equation) -> ParametricSolution {
    let (a, b) = (RatFunc::var("a"), RatFunc::var("b"));
    let values = eq.shape().formulas(&a, &b);
    let coords = eq.coords(&a, &b, &values).expect("family y is not identically zero");
    ParametricSolution::new(&["a", "b"], coords)
}

pub fn thm11_eq16(a: &Integer, b: &Integer) -> Result<VarietySolution, VarietyError> {
    solve_equation(Equation::Eq16, a, b)
}

pub fn thm11_eq17(a: &Integer, b: &Integer) -> Result<VarietySolution, VarietyError> {
    solve_equation(Equation::Eq17, a, b)
}

pub fn thm11_eq18(a: &Integer, b: &Integer) -> Result<VarietySolution, VarietyError> {
    solve_equation(Equation::Eq18, a, b)
}

pub fn thm11_eq19_variant(a: &Integer, b: &Integer) -> Result<VarietySolution, VarietyError> {
    solve_equation(Equation::Eq19Variant, a, b)
}

/// `x⁴ + y⁴ + 4z⁴ = 4u⁴ + v⁴ − 2w⁴` as printed: the `z⁴`-route needs
/// `2n² = 4g₁⁴ − 2g₂⁴ − 4g₃⁴`. Searches every family shape and returns the
/// first identity found.
pub fn thm11_eq19_printed(bounds: &SearchBounds, exec: Execution) -> Result<SplittingIdentity, VarietyError> {
    search_all_shapes(&[4, -2, -4], bounds, exec)
}

/// `x⁴ + y⁴ − 2z⁴ = 2u⁴ + 2v⁴ + 2w⁴`: the `2z⁴`-route needs
/// `2n² = 2g₁⁴ + 2g₂⁴ + 2g₃⁴`.
pub fn thm11_eq20_printed(bounds: &SearchBounds, exec: Execution) -> Result<SplittingIdentity, VarietyError> {
    search_all_shapes(&[2, 2, 2], bounds, exec)
}

fn search_all_shapes(sig: &[i64], bounds: &SearchBounds, exec: Execution) -> Result<SplittingIdentity, VarietyError> {
    let (a, b) = (MultiPoly::var("a"), MultiPoly::var("b"));
    FamilyShape::ALL
        .iter()
        .find_map(|shape| splitting_search(&shape.value(&a, &b), &signature(sig), bounds, exec))
        .ok_or(VarietyError::UnresolvedSplitting)
}
