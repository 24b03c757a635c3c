//! Rational points on three diagonal quartic surfaces:
//!
//! * `x⁴ + y⁴ = 2z⁴ + 2n²w⁴` from a point of `E_n`,
//! * `x⁴ + y⁴ = z⁴ + 2n²w⁴` from a triple `X⁴ − n²Y⁴ = K²`,
//! * `s·x⁴ + (4/s)·y⁴ = z⁴ − w⁴` for every nonzero rational `s`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Field;
use crate::congruent::QuarticSquareTriple;
use crate::elliptic::{Curve, CurveError, CurvePoint};
use crate::exactnum::{rat_from_int, Rational};
use crate::multipoly::{MultiPoly, RatFunc};
use crate::varieties::{DiagonalForm, ParametricSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("invalid quartic triple")]
    InvalidTriple,
    #[error("parameter must be nonzero")]
    ZeroParameter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    /// `x⁴ + y⁴ − 2z⁴ − 2n²w⁴ = 0`
    Prop26,
    /// `x⁴ + y⁴ − z⁴ − 2n²w⁴ = 0`
    Lemma27,
    /// `s·x⁴ + (4/s)·y⁴ − z⁴ + w⁴ = 0`
    Lemma28,
}

impl SurfaceKind {
    /// Coefficients of the surface for parameter `n` (or `s`).
    pub fn coeffs<F: Field>(self, param: &F) -> Vec<F> {
        let two_n2 = param.square().scale(2);
        match self {
            Self::Prop26 => vec![F::one(), F::one(), F::from_int(-2), -two_n2],
            Self::Lemma27 => vec![F::one(), F::one(), F::from_int(-1), -two_n2],
            Self::Lemma28 => vec![
                param.clone(),
                F::from_int(4).checked_div(param).expect("s is nonzero"),
                F::from_int(-1),
                F::one(),
            ],
        }
    }

    pub fn form(self, param: &Rational) -> DiagonalForm {
        DiagonalForm::from_coeffs(self.coeffs(param)).expect("surface coefficients are nonzero")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceSolution {
    pub kind: SurfaceKind,
    /// `n` for the first two surfaces, `s` for the third.
    pub param: Rational,
    pub coords: Vec<Rational>,
}

impl SurfaceSolution {
    pub fn form(&self) -> DiagonalForm {
        self.kind.form(&self.param)
    }

    pub fn holds(&self) -> bool {
        self.form().evaluate(&self.coords).is_some_and(|r| r.is_zero())
    }
}

/// `(u² + 2nu − n², u² − 2nu − n², u² + n², 2v)`.
pub fn prop26_coords<F: Field>(n: &F, u: &F, v: &F) -> [F; 4] {
    let u2 = u.square();
    let n2 = n.square();
    let two_nu = (n.clone() * u.clone()).scale(2);
    [
        u2.clone() + two_nu.clone() - n2.clone(),
        u2.clone() - two_nu - n2.clone(),
        u2 + n2,
        v.scale(2),
    ]
}

/// `(X², nY², K, XY)`.
pub fn lemma27_coords<F: Field>(n: &F, x: &F, y: &F, k: &F) -> [F; 4] {
    [x.square(), n.clone() * y.square(), k.clone(), x.clone() * y.clone()]
}

/// `(2t³/s, 2t, t⁴/s + 2, t⁴/s − 2)`; `None` when `s = 0`.
pub fn lemma28_coords<F: Field>(s: &F, t: &F) -> Option<[F; 4]> {
    let t4s = t.pow(4).checked_div(s)?;
    Some([
        t.pow(3).scale(2).checked_div(s)?,
        t.scale(2),
        t4s.clone() + F::from_int(2),
        t4s - F::from_int(2),
    ])
}

pub fn prop26_solution(curve: &Curve, p: &CurvePoint) -> Result<SurfaceSolution, SurfaceError> {
    if !curve.is_on_curve(p) {
        return Err(CurveError::OffCurve.into());
    }
    let (u, v) = p.coords().ok_or(CurveError::TorsionPoint)?;
    if v.is_zero() {
        return Err(CurveError::TorsionPoint.into());
    }
    let n = rat_from_int(curve.n().clone());
    let coords = prop26_coords(&n, u, v).to_vec();
    Ok(SurfaceSolution {
        kind: SurfaceKind::Prop26,
        param: n,
        coords,
    })
}

pub fn lemma27_solution(q: &QuarticSquareTriple) -> Result<SurfaceSolution, SurfaceError> {
    q.validate().map_err(|_| SurfaceError::InvalidTriple)?;
    let [n, x, y, k] = [&q.n, &q.x, &q.y, &q.k].map(|v| rat_from_int(v.clone()));
    Ok(SurfaceSolution {
        kind: SurfaceKind::Lemma27,
        coords: lemma27_coords(&n, &x, &y, &k).to_vec(),
        param: n,
    })
}

pub fn lemma28_solution(s: &Rational, t: &Rational) -> Result<SurfaceSolution, SurfaceError> {
    if t.is_zero() {
        return Err(SurfaceError::ZeroParameter);
    }
    let coords = lemma28_coords(s, t).ok_or(SurfaceError::ZeroParameter)?;
    Ok(SurfaceSolution {
        kind: SurfaceKind::Lemma28,
        param: s.clone(),
        coords: coords.to_vec(),
    })
}

/// The third surface with `t` symbolic, and `s` symbolic too when `None`.
/// Returns the coefficients alongside the coordinates.
pub fn lemma28_parametric(s: Option<&Rational>) -> Result<(Vec<RatFunc>, ParametricSolution), SurfaceError> {
    let (s_val, params): (RatFunc, &[&str]) = match s {
        Some(s) if s.is_zero() => return Err(SurfaceError::ZeroParameter),
        Some(s) => (RatFunc::constant(s.clone()), &["t"]),
        None => (RatFunc::var("s"), &["s", "t"]),
    };
    let t = RatFunc::from(MultiPoly::var("t"));
    let coords = lemma28_coords(&s_val, &t).ok_or(SurfaceError::ZeroParameter)?;
    Ok((
        SurfaceKind::Lemma28.coeffs(&s_val),
        ParametricSolution::new(params, coords.to_vec()),
    ))
}

#[derive(Serialize, Deserialize)]
struct SurfaceRepr {
    surface: SurfaceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s: Option<String>,
    coords: Vec<String>,
}

impl Serialize for SurfaceSolution {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let p = Some(crate::exactnum::format_rational(&self.param));
        let (n, s) = match self.kind {
            SurfaceKind::Lemma28 => (None, p),
            _ => (p, None),
        };
        SurfaceRepr {
            surface: self.kind,
            n,
            s,
            coords: self.coords.iter().map(crate::exactnum::format_rational).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SurfaceSolution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = SurfaceRepr::deserialize(d)?;
        let param = match (r.surface, r.n, r.s) {
            (SurfaceKind::Lemma28, None, Some(s)) => s,
            (SurfaceKind::Prop26 | SurfaceKind::Lemma27, Some(n), None) => n,
            _ => return Err(D::Error::custom("parameter field does not match surface")),
        };
        let parse = |s: &str| crate::exactnum::parse_rational(s).map_err(D::Error::custom);
        let coords = r.coords.iter().map(|c| parse(c)).collect::<Result<Vec<_>, _>>()?;
        if coords.len() != 4 {
            return Err(D::Error::custom("a surface point has 4 coordinates"));
        }
        Ok(Self {
            kind: r.surface,
            param: parse(&param)?,
            coords,
        })
    }
}
