//! The curves `E_n: v² = u³ − n²u` over the rationals.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{rat_from_int, Integer, Rational};
use crate::multipoly::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("n must be nonzero")]
    SingularCurve,
    #[error("point is not on the curve")]
    OffCurve,
    #[error("point has v = 0")]
    TorsionPoint,
    #[error("x must be nonzero")]
    ZeroX,
    #[error("x^4 - y^4 != n*t^2")]
    NotOnQuartic,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Curve {
    #[serde(with = "crate::json::integer")]
    n: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { u: Rational, v: Rational },
}

impl CurvePoint {
    pub fn affine(u: Rational, v: Rational) -> Self {
        Self::Affine { u, v }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Self::Infinity)
    }

    pub fn coords(&self) -> Option<(&Rational, &Rational)> {
        match self {
            Self::Infinity => None,
            Self::Affine { u, v } => Some((u, v)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Self::Infinity => Self::Infinity,
            Self::Affine { u, v } => Self::affine(u.clone(), -v),
        }
    }
}

impl Curve {
    pub fn new(n: Integer) -> Result<Self, CurveError> {
        if n.is_zero() {
            return Err(CurveError::SingularCurve);
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> &Integer {
        &self.n
    }

    fn n_rat(&self) -> Rational {
        rat_from_int(self.n.clone())
    }

    /// `u³ − n²u`.
    pub fn rhs(&self, u: &Rational) -> Rational {
        let n = self.n_rat();
        u * u * u - &n * &n * u
    }

    pub fn is_on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { u, v } => v * v == self.rhs(u),
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<(), CurveError> {
        if self.is_on_curve(p) {
            Ok(())
        } else {
            Err(CurveError::OffCurve)
        }
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.add(p, p)
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (CurvePoint::Affine { u: u1, v: v1 }, CurvePoint::Affine { u: u2, v: v2 }) = (p, q) else {
            return if p.is_infinity() { q.clone() } else { p.clone() };
        };
        let lambda = if u1 == u2 {
            if v1 != v2 || v1.is_zero() {
                return CurvePoint::Infinity;
            }
            let n = self.n_rat();
            (Rational::from_integer(3.into()) * u1 * u1 - &n * &n) / (Rational::from_integer(2.into()) * v1)
        } else {
            (v2 - v1) / (u2 - u1)
        };
        let u3 = &lambda * &lambda - u1 - u2;
        let v3 = &lambda * (u1 - &u3) - v1;
        CurvePoint::affine(u3, v3)
    }

    /// `k·P` by double-and-add from the most significant bit.
    pub fn scalar_mul(&self, k: &Integer, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.check(p)?;
        let base = if k.is_negative() { p.neg() } else { p.clone() };
        let mag = k.magnitude();
        let mut acc = CurvePoint::Infinity;
        for i in (0..mag.bits()).rev() {
            acc = self.add_unchecked(&acc, &acc);
            if mag.bit(i) {
                acc = self.add_unchecked(&acc, &base);
            }
        }
        Ok(acc)
    }
}

/// A rational solution of `x⁴ − y⁴ = n·t²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticPoint {
    #[serde(with = "crate::json::rational")]
    pub x: Rational,
    #[serde(with = "crate::json::rational")]
    pub y: Rational,
    #[serde(with = "crate::json::rational")]
    pub t: Rational,
}

/// `(u, v) ↦ (u² + 2nu − n², u² − 2nu − n², 4v(u² + n²))`.
pub fn prop25_forward(curve: &Curve, p: &CurvePoint) -> Result<QuarticPoint, CurveError> {
    curve.check(p)?;
    let (u, v) = p.coords().ok_or(CurveError::TorsionPoint)?;
    if v.is_zero() {
        return Err(CurveError::TorsionPoint);
    }
    let n = curve.n_rat();
    let two_nu = Rational::from_integer(2.into()) * &n * u;
    let base = u * u - &n * &n;
    Ok(QuarticPoint {
        x: &base + &two_nu,
        y: &base - &two_nu,
        t: Rational::from_integer(4.into()) * v * (u * u + &n * &n),
    })
}

/// `(x, y, t) ↦ (−ny²/x², n²yt/x³)`.
pub fn prop25_backward(curve: &Curve, q: &QuarticPoint) -> Result<CurvePoint, CurveError> {
    if q.x.is_zero() {
        return Err(CurveError::ZeroX);
    }
    let n = curve.n_rat();
    let x2 = &q.x * &q.x;
    let y2 = &q.y * &q.y;
    if &x2 * &x2 - &y2 * &y2 != &n * &q.t * &q.t {
        return Err(CurveError::NotOnQuartic);
    }
    let u = -(&n * &y2) / &x2;
    let v = &n * &n * &q.y * &q.t / (x2 * &q.x);
    Ok(CurvePoint::affine(u, v))
}

/// Rewrites every `v^k` with `k ≥ 2` through `v² = u³ − n²u`, leaving a
/// polynomial of degree at most 1 in `v`.
pub fn reduce_curve_relation(p: &MultiPoly, u: &str, v: &str, n: &str) -> MultiPoly {
    let rhs = MultiPoly::var(u).pow(3) - MultiPoly::var(n).pow(2) * MultiPoly::var(u);
    let mut out = MultiPoly::zero();
    for (coeff, mut rest) in p.grlex_terms() {
        let e = rest.remove(v).unwrap_or(0);
        if e % 2 == 1 {
            rest.insert(v.to_string(), 1);
        }
        let term = MultiPoly::from_monomial_map(coeff, &rest) * rhs.pow(e / 2);
        out = out + term;
    }
    out
}

impl Serialize for CurvePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            Self::Infinity => m.serialize_entry("infinity", &true)?,
            Self::Affine { u, v } => {
                m.serialize_entry("u", &crate::exactnum::format_rational(u))?;
                m.serialize_entry("v", &crate::exactnum::format_rational(v))?;
            }
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for CurvePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            #[serde(default)]
            infinity: bool,
            u: Option<String>,
            v: Option<String>,
        }
        let raw = Raw::deserialize(d)?;
        let parse = |s: &str| crate::exactnum::parse_rational(s).map_err(serde::de::Error::custom);
        match (raw.infinity, raw.u, raw.v) {
            (true, None, None) => Ok(Self::Infinity),
            (false, Some(u), Some(v)) => Ok(Self::affine(parse(&u)?, parse(&v)?)),
            _ => Err(serde::de::Error::custom("expected {\"u\",\"v\"} or {\"infinity\":true}")),
        }
    }
}
