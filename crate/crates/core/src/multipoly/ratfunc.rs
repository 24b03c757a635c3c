use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{MultiPoly, PolyError};
use crate::exactnum::Rational;

/// Quotient of two polynomials.
///
/// Kept with the denominator's leading coefficient positive and its content
/// scaled out, and with common monomial factors cancelled. No polynomial gcd
/// is taken, so equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: MultiPoly::one(),
            };
        }
        let mut scale = den.content();
        if den.leading_coefficient().is_some_and(|c| c.is_negative()) {
            scale = -scale;
        }
        let inv = scale.recip();
        let (mut num, mut den) = (num.scale_by(&inv), den.scale_by(&inv));

        let gn = num.monomial_gcd();
        let gd = den.monomial_gcd();
        let common: BTreeMap<String, u32> = gn
            .iter()
            .filter_map(|(v, e)| gd.get(v).map(|f| (v.clone(), (*e).min(*f))))
            .collect();
        if !common.is_empty() {
            num = num.div_monomial(&common);
            den = den.div_monomial(&common);
        }
        Self { num, den }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    /// The polynomial this function equals, if its denominator is constant.
    pub fn to_poly(&self) -> Option<MultiPoly> {
        self.den.as_constant().map(|c| self.num.scale_by(&c.recip()))
    }

    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self.num.vars().iter().chain(self.den.vars()).cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(&self.num + &other.num, self.den.clone());
        }
        if let Some(q) = other.den.div_exact(&self.den) {
            return Self::normalized(&(&self.num * &q) + &other.num, other.den.clone());
        }
        if let Some(q) = self.den.div_exact(&other.den) {
            return Self::normalized(&self.num + &(&other.num * &q), self.den.clone());
        }
        Self::normalized(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        // Cancel a denominator that exactly divides the other numerator.
        if !other.den.is_one() {
            if let Some(q) = self.num.div_exact(&other.den) {
                return Self::normalized(&q * &other.num, self.den.clone());
            }
        }
        if !self.den.is_one() {
            if let Some(q) = other.num.div_exact(&self.den) {
                return Self::normalized(&self.num * &q, other.den.clone());
            }
        }
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div_ref(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self.mul_ref(&r))
    }

    pub fn eval_at(&self, point: &BTreeMap<String, Rational>) -> Result<Rational, PolyError> {
        let d = self.den.eval_at(point)?;
        if num_traits::Zero::is_zero(&d) {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(self.num.eval_at(point)? / d)
    }

    /// Composition: substitutes into numerator and denominator.
    pub fn substitute(&self, bindings: &BTreeMap<String, RatFunc>) -> Result<RatFunc, PolyError> {
        let n = self.num.substitute(bindings)?;
        let d = self.den.substitute(bindings)?;
        n.div_ref(&d).ok_or(PolyError::ZeroDenominator)
    }

    pub fn scale_by(&self, c: &Rational) -> Self {
        Self::normalized(self.num.scale_by(c), self.den.clone())
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl crate::algebra::Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
    fn from_int(n: i64) -> Self {
        Self::from_poly(MultiPoly::int(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl crate::algebra::Field for RatFunc {
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        self.div_ref(rhs)
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.sub_ref(&rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
