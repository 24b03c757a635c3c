//! Congruent-number certificates.
//!
//! A certificate `(n, x, y, z, t)` witnesses that `n` is congruent through
//! `x² + n·y² = z²` and `x² − n·y² = t²`. Three polynomial families produce
//! certificates for `n = a⁴ + 4b⁴`, `n = 2a⁴ + 2b⁴` and `n = a⁴ − b⁴`;
//! multiplying the two equations gives `x⁴ − n²y⁴ = (zt)²`, and
//! `(u, v) = ((x/y)², xzt/y³)` lies on `v² = u³ − n²u`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elliptic::{Curve, CurvePoint};
use crate::exactnum::{rat_from_int, Integer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruentError {
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("invalid quartic triple: {0}")]
    InvalidTriple(String),
}

/// Binary quartic shapes whose values the families certify as congruent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyShape {
    /// `x⁴ + 4y⁴`, family (i).
    #[serde(rename = "x4+4y4")]
    SumWithFour,
    /// `2x⁴ + 2y⁴`, family (ii).
    #[serde(rename = "2x4+2y4")]
    TwiceSum,
    /// `x⁴ − y⁴`, family (iii).
    #[serde(rename = "x4-y4")]
    Difference,
}

/// Signed family entries; `n` is the shape evaluated at `(a, b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyValues<R> {
    pub n: R,
    pub x: R,
    pub y: R,
    pub z: R,
    pub t: R,
}

impl FamilyShape {
    pub const ALL: [FamilyShape; 3] = [Self::SumWithFour, Self::TwiceSum, Self::Difference];

    /// Roman-numeral label used on the command line.
    pub fn family_label(self) -> &'static str {
        match self {
            Self::SumWithFour => "i",
            Self::TwiceSum => "ii",
            Self::Difference => "iii",
        }
    }

    pub fn from_family_label(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.family_label() == s)
    }

    pub fn value<R: crate::algebra::Ring>(self, a: &R, b: &R) -> R {
        let (a4, b4) = (a.pow(4), b.pow(4));
        match self {
            Self::SumWithFour => a4 + b4.scale(4),
            Self::TwiceSum => a4.scale(2) + b4.scale(2),
            Self::Difference => a4 - b4,
        }
    }

    /// The family polynomials at `(a, b)`, before taking absolute values.
    pub fn formulas<R: crate::algebra::Ring>(self, a: &R, b: &R) -> FamilyValues<R> {
        let p = |k: u32, l: u32| a.pow(k) * b.pow(l);
        let n = self.value(a, b);
        match self {
            Self::SumWithFour => FamilyValues {
                n,
                x: p(8, 0) + p(4, 4).scale(24) + p(0, 8).scale(16),
                y: (p(1, 5).scale(4) - p(5, 1)).scale(4),
                z: p(8, 0) + p(2, 6).scale(32) - p(4, 4).scale(8) + p(6, 2).scale(8) + p(0, 8).scale(16),
                t: p(8, 0) - p(2, 6).scale(32) - p(4, 4).scale(8) - p(6, 2).scale(8) + p(0, 8).scale(16),
            },
            Self::TwiceSum => FamilyValues {
                n,
                x: p(8, 0) + p(4, 4).scale(6) + p(0, 8),
                y: (p(1, 5) - p(5, 1)).scale(2),
                z: p(8, 0) + p(2, 6).scale(4) - p(4, 4).scale(2) + p(6, 2).scale(4) + p(0, 8),
                t: p(8, 0) - p(2, 6).scale(4) - p(4, 4).scale(2) - p(6, 2).scale(4) + p(0, 8),
            },
            Self::Difference => FamilyValues {
                n,
                x: p(4, 2) + p(0, 6),
                y: p(1, 3).scale(2),
                z: p(4, 2) + p(2, 4).scale(2) - p(0, 6),
                t: p(4, 2) - p(2, 4).scale(2) - p(0, 6),
            },
        }
    }

    /// Checks the parameter domain of the family over the positive integers.
    fn check_domain(self, a: &Integer, b: &Integer) -> Result<(), CongruentError> {
        if !a.is_positive() || !b.is_positive() {
            return Err(CongruentError::DegenerateParameters(
                "a and b must be positive".into(),
            ));
        }
        match self {
            Self::SumWithFour => Ok(()),
            Self::TwiceSum if a == b => Err(CongruentError::DegenerateParameters(
                "a = b gives y = 0".into(),
            )),
            Self::Difference if a <= b => Err(CongruentError::DegenerateParameters(
                "a <= b gives n <= 0".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn certificate(self, a: &Integer, b: &Integer) -> Result<CongruentCertificate, CongruentError> {
        self.check_domain(a, b)?;
        let v = self.formulas(a, b);
        CongruentCertificate::new(v.n, v.x.abs(), v.y.abs(), v.z.abs(), v.t.abs())
    }
}

impl fmt::Display for FamilyShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SumWithFour => "x4+4y4",
            Self::TwiceSum => "2x4+2y4",
            Self::Difference => "x4-y4",
        })
    }
}

/// `x² + n·y² = z²` and `x² − n·y² = t²` with `n ≥ 1` and all entries nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruentCertificate {
    #[serde(with = "crate::json::integer")]
    pub n: Integer,
    #[serde(with = "crate::json::integer")]
    pub x: Integer,
    #[serde(with = "crate::json::integer")]
    pub y: Integer,
    #[serde(with = "crate::json::integer")]
    pub z: Integer,
    #[serde(with = "crate::json::integer")]
    pub t: Integer,
}

impl CongruentCertificate {
    pub fn new(n: Integer, x: Integer, y: Integer, z: Integer, t: Integer) -> Result<Self, CongruentError> {
        let c = Self { n, x, y, z, t };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), CongruentError> {
        let bad = |m: &str| Err(CongruentError::InvalidCertificate(m.to_string()));
        if !self.n.is_positive() {
            return bad("n must be positive");
        }
        if [&self.x, &self.y, &self.z, &self.t].iter().any(|v| v.is_zero()) {
            return bad("entries must be nonzero");
        }
        let x2 = &self.x * &self.x;
        let ny2 = &self.n * &self.y * &self.y;
        if &x2 + &ny2 != &self.z * &self.z {
            return bad("x^2 + n*y^2 != z^2");
        }
        if &x2 - &ny2 != &self.t * &self.t {
            return bad("x^2 - n*y^2 != t^2");
        }
        Ok(())
    }
}

pub fn family_i(a: &Integer, b: &Integer) -> Result<CongruentCertificate, CongruentError> {
    FamilyShape::SumWithFour.certificate(a, b)
}

pub fn family_ii(a: &Integer, b: &Integer) -> Result<CongruentCertificate, CongruentError> {
    FamilyShape::TwiceSum.certificate(a, b)
}

pub fn family_iii(a: &Integer, b: &Integer) -> Result<CongruentCertificate, CongruentError> {
    FamilyShape::Difference.certificate(a, b)
}

/// `X⁴ − n²Y⁴ = K²` with nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticSquareTriple {
    #[serde(with = "crate::json::integer")]
    pub n: Integer,
    #[serde(rename = "X", with = "crate::json::integer")]
    pub x: Integer,
    #[serde(rename = "Y", with = "crate::json::integer")]
    pub y: Integer,
    #[serde(rename = "K", with = "crate::json::integer")]
    pub k: Integer,
}

impl QuarticSquareTriple {
    pub fn new(n: Integer, x: Integer, y: Integer, k: Integer) -> Result<Self, CongruentError> {
        let q = Self { n, x, y, k };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<(), CongruentError> {
        if !self.n.is_positive() {
            return Err(CongruentError::InvalidTriple("n must be positive".into()));
        }
        if self.x.is_zero() || self.y.is_zero() || self.k.is_zero() {
            return Err(CongruentError::InvalidTriple("entries must be nonzero".into()));
        }
        let lhs = crate::algebra::Ring::pow(&self.x, 4) - crate::algebra::Ring::pow(&self.n, 2) * crate::algebra::Ring::pow(&self.y, 4);
        if lhs != &self.k * &self.k {
            return Err(CongruentError::InvalidTriple("X^4 - n^2*Y^4 != K^2".into()));
        }
        Ok(())
    }
}

pub fn cert_to_quartic(c: &CongruentCertificate) -> QuarticSquareTriple {
    QuarticSquareTriple {
        n: c.n.clone(),
        x: c.x.clone(),
        y: c.y.clone(),
        k: (&c.z * &c.t).abs(),
    }
}

/// `U = (x/y)²`, `V = x·z·t / y³`; `None` when `y = 0`.
pub fn ec_coordinates<F: crate::algebra::Field>(x: &F, y: &F, z: &F, t: &F) -> Option<(F, F)> {
    let ratio = x.checked_div(y)?;
    let u = ratio.square();
    let v = (x.clone() * z.clone() * t.clone()).checked_div(&y.pow(3))?;
    Some((u, v))
}

pub fn cert_to_ec_point(c: &CongruentCertificate) -> (Curve, CurvePoint) {
    let [x, y, z, t] = [&c.x, &c.y, &c.z, &c.t].map(|v| rat_from_int(v.clone()));
    let (u, v) = ec_coordinates(&x, &y, &z, &t).expect("certificate has y != 0");
    let curve = Curve::new(c.n.clone()).expect("certificate has n >= 1");
    (curve, CurvePoint::affine(u, v))
}

/// Smallest-`y` certificate for `n` with `1 ≤ y ≤ bound`, if one exists.
///
/// For fixed `y`, `(z − t)(z + t) = 2ny²`, so every certificate comes from a
/// factor pair `d·e = 2ny²` of equal parity with `z = (d+e)/2`,
/// `t = (e−d)/2`; it is valid exactly when `(z² + t²)/2` is a square `x²`.
/// Among certificates with the smallest `y`, the one with the smallest `x`
/// is returned. Absence proves nothing about `n`.
pub fn congruent_check_small(
    n: u64,
    bound: u64,
    exec: crate::par::Execution,
) -> Option<CongruentCertificate> {
    if n == 0 {
        return None;
    }
    crate::par::find_map_first(exec, 1..=bound, |y| certificate_for_y(n, y))
}

fn certificate_for_y(n: u64, y: u64) -> Option<CongruentCertificate> {
    let m = Integer::from(2u8) * Integer::from(n) * Integer::from(y) * Integer::from(y);
    let divisors = divisors(&factor_product(&[2, n, y, y]));
    let mut best: Option<CongruentCertificate> = None;
    for d in divisors {
        let d = Integer::from(d);
        let e = &m / &d;
        if d >= e || (&d + &e) % 2u8 != Integer::zero() {
            continue;
        }
        let z: Integer = (&d + &e) / 2u8;
        let t: Integer = (&e - &d) / 2u8;
        let s: Integer = &z * &z + &t * &t;
        if (&s % 2u8).is_one() {
            continue;
        }
        let Some(x) = crate::exactnum::exact_isqrt(&(s / 2u8)) else {
            continue;
        };
        let c = CongruentCertificate::new(Integer::from(n), x, Integer::from(y), z, t).ok()?;
        if best.as_ref().is_none_or(|b| c.x < b.x) {
            best = Some(c);
        }
    }
    best
}

/// Prime factorization of a product of `u64`s as `(prime, exponent)` pairs.
fn factor_product(parts: &[u64]) -> Vec<(u64, u32)> {
    let mut acc: std::collections::BTreeMap<u64, u32> = Default::default();
    for &p in parts {
        let mut m = p;
        let mut d = 2u64;
        while d.saturating_mul(d) <= m {
            while m % d == 0 {
                *acc.entry(d).or_default() += 1;
                m /= d;
            }
            d += 1;
        }
        if m > 1 {
            *acc.entry(m).or_default() += 1;
        }
    }
    acc.into_iter().collect()
}

fn divisors(factors: &[(u64, u32)]) -> Vec<u128> {
    let mut out = vec![1u128];
    for &(p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut q = *d;
            for _ in 0..=e {
                next.push(q);
                q *= p as u128;
            }
        }
        out = next;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{exact_sqrt, int, rat};
    use crate::par::Execution;
    use num_traits::ToPrimitive;

    fn certificate_tuple(c: &CongruentCertificate) -> [i64; 5] {
        [&c.n, &c.x, &c.y, &c.z, &c.t].map(|v| v.to_i64().unwrap())
    }

    fn cert(f: fn(&Integer, &Integer) -> Result<CongruentCertificate, CongruentError>, a: i64, b: i64) -> [i64; 5] {
        certificate_tuple(&f(&int(a), &int(b)).unwrap())
    }

    #[test]
    fn family_i_values() {
        assert_eq!(cert(family_i, 1, 1), [5, 41, 12, 49, 31]);
        assert_eq!(cert(family_i, 1, 2), [65, 4481, 504, 6049, 1889]);
        assert_eq!(cert(family_i, 2, 2), [80, 10496, 768, 12544, 7936]);
    }

    #[test]
    fn family_ii_values() {
        assert_eq!(cert(family_ii, 1, 2), [34, 353, 60, 497, 47]);
        assert!(matches!(family_ii(&int(1), &int(1)), Err(CongruentError::DegenerateParameters(_))));
        let c = family_ii(&int(1), &int(3)).unwrap();
        assert_eq!(c.n, int(164));
        let x2 = rat_from_int(&c.x * &c.x);
        let ny2 = rat_from_int(&c.n * &c.y * &c.y);
        assert!(exact_sqrt(&(&x2 + &ny2)).is_ok());
        assert!(exact_sqrt(&(&x2 - &ny2)).is_ok());
    }

    #[test]
    fn printed_family_ii_y_fails() {
        // y = 2ab(4b^4 - a^4) at (1, 2): x^2 + n y^2 is not a square.
        let (a, b) = (int(1), int(2));
        let x = int(353);
        let y = int(2) * &a * &b * (int(4) * b.pow(4u32) - a.pow(4u32));
        let s = &x * &x + int(34) * &y * &y;
        assert!(crate::exactnum::exact_isqrt(&s).is_none());
    }

    #[test]
    fn family_iii_values() {
        assert_eq!(cert(family_iii, 2, 1), [15, 17, 4, 23, 7]);
        assert_eq!(cert(family_iii, 3, 1), [80, 82, 6, 98, 62]);
        assert!(matches!(family_iii(&int(1), &int(1)), Err(CongruentError::DegenerateParameters(_))));
        assert!(matches!(family_iii(&int(1), &int(2)), Err(CongruentError::DegenerateParameters(_))));
    }

    #[test]
    fn quartic_triples() {
        let q = cert_to_quartic(&family_i(&int(1), &int(1)).unwrap());
        assert_eq!((q.x.clone(), q.y.clone(), q.k.clone()), (int(41), int(12), int(1519)));
        q.validate().unwrap();
        let q = cert_to_quartic(&family_iii(&int(2), &int(1)).unwrap());
        assert_eq!(q.k, int(161));
        let q = cert_to_quartic(&family_ii(&int(1), &int(2)).unwrap());
        assert_eq!(q.k, int(23359));
        assert!(QuarticSquareTriple::new(int(5), int(41), int(12), int(1520)).is_err());
    }

    #[test]
    fn ec_points_from_certificates() {
        let (curve, p) = cert_to_ec_point(&family_i(&int(1), &int(1)).unwrap());
        assert_eq!(p, CurvePoint::affine(rat(1681, 144), rat(62279, 1728)));
        assert!(curve.is_on_curve(&p));
        let (curve, p) = cert_to_ec_point(&family_iii(&int(2), &int(1)).unwrap());
        assert_eq!(p, CurvePoint::affine(rat(289, 16), rat(2737, 64)));
        assert!(curve.is_on_curve(&p));
    }

    #[test]
    fn certificate_json() {
        let c = family_i(&int(1), &int(1)).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":"5","x":"41","y":"12","z":"49","t":"31"}"#);
        let back: CongruentCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn invalid_certificate_rejected() {
        assert!(CongruentCertificate::new(int(5), int(41), int(12), int(49), int(30)).is_err());
        assert!(CongruentCertificate::new(int(0), int(1), int(1), int(1), int(1)).is_err());
    }

    #[test]
    fn small_search() {
        let c = congruent_check_small(6, 10, Execution::Sequential).unwrap();
        assert_eq!(certificate_tuple(&c), [6, 5, 2, 7, 1]);
        let c = congruent_check_small(5, 20, Execution::Sequential).unwrap();
        assert_eq!(certificate_tuple(&c), [5, 41, 12, 49, 31]);
        assert!(congruent_check_small(1, 100, Execution::Sequential).is_none());
        assert_eq!(
            congruent_check_small(5, 20, Execution::Parallel),
            congruent_check_small(5, 20, Execution::Sequential)
        );
    }
}
