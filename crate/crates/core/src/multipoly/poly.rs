use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{PolyError, RatFunc};
use crate::exactnum::{Integer, Rational};

/// Exponent vector aligned with [`MultiPoly::vars`].
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Canonical form: `vars` is sorted and every listed variable occurs with a
/// positive exponent in at least one term; no stored coefficient is zero.
/// Structural equality is therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn integer(n: &Integer) -> Self {
        Self::constant(Rational::from_integer(n.clone()))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `coeff · Π name^exp`; repeated names multiply.
    pub fn monomial(coeff: Rational, powers: &[(&str, u32)]) -> Self {
        let vars: Vec<String> = powers.iter().map(|(v, _)| v.to_string()).collect();
        let exps: Exponents = powers.iter().map(|(_, e)| *e).collect();
        Self::from_terms(vars, [(exps, coeff)])
    }

    /// Builds a polynomial from terms over an arbitrary (unsorted, possibly
    /// repeating) variable list, merging like terms.
    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Self {
        let mut sorted: Vec<String> = vars.clone();
        sorted.sort();
        sorted.dedup();
        let slot: Vec<usize> = vars
            .iter()
            .map(|v| sorted.binary_search(v).unwrap())
            .collect();
        let mut acc: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent arity mismatch");
            let mut e = vec![0; sorted.len()];
            for (i, k) in exps.iter().enumerate() {
                e[slot[i]] += k;
            }
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        Self::canonical(sorted, acc)
    }

    /// Drops zero coefficients and variables that no longer occur.
    fn canonical(vars: Vec<String>, mut terms: BTreeMap<Exponents, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..vars.len())
            .map(|i| terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return Self { vars, terms };
        }
        let keep = |e: &Exponents| -> Exponents {
            e.iter()
                .zip(&used)
                .filter(|(_, &u)| u)
                .map(|(k, _)| *k)
                .collect()
        };
        let vars = vars
            .into_iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v)
            .collect();
        let terms = terms.into_iter().map(|(e, c)| (keep(&e), c)).collect();
        Self { vars, terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty() && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        if !self.vars.is_empty() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        if self.vars == other.vars {
            return self.vars.clone();
        }
        let mut v: Vec<String> = self.vars.iter().chain(&other.vars).cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    /// Terms re-indexed over a sorted superset of `self.vars`.
    fn embed(&self, target: &[String]) -> BTreeMap<Exponents, Rational> {
        if target == self.vars.as_slice() {
            return self.terms.clone();
        }
        let slot: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.binary_search(v).expect("target must contain vars"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut f = vec![0; target.len()];
                for (i, k) in e.iter().enumerate() {
                    f[slot[i]] = *k;
                }
                (f, c.clone())
            })
            .collect()
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let vars = self.union_vars(other);
        let mut terms = self.embed(&vars);
        for (e, c) in other.embed(&vars) {
            let slot = terms.entry(e).or_insert_with(Rational::zero);
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::canonical(vars, terms)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = self.union_vars(other);
        let a = self.embed(&vars);
        let b = other.embed(&vars);
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Self::canonical(vars, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        crate::algebra::Ring::pow(self, k)
    }

    pub fn scale_by(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.binary_search_by(|v| v.as_str().cmp(var)) {
            Ok(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            Err(_) => 0,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        let mut num_gcd = Integer::zero();
        let mut den_lcm = Integer::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn coefficient_denominator(&self) -> Integer {
        self.terms
            .values()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Coefficient of the lexicographically largest term.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    /// Largest monomial dividing every term, as (var, exponent) pairs.
    pub fn monomial_gcd(&self) -> BTreeMap<String, u32> {
        let mut out = BTreeMap::new();
        for (i, v) in self.vars.iter().enumerate() {
            let m = self.terms.keys().map(|e| e[i]).min().unwrap_or(0);
            if m > 0 {
                out.insert(v.clone(), m);
            }
        }
        out
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Divides by `Π var^exp`; every term must be divisible.
    pub fn div_monomial(&self, m: &BTreeMap<String, u32>) -> Self {
        if m.is_empty() {
            return self.clone();
        }
        let sub: Vec<u32> = self
            .vars
            .iter()
            .map(|v| m.get(v).copied().unwrap_or(0))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let f = e
                    .iter()
                    .zip(&sub)
                    .map(|(x, y)| x.checked_sub(*y).expect("monomial does not divide"))
                    .collect();
                (f, c.clone())
            })
            .collect();
        Self::canonical(self.vars.clone(), terms)
    }

    pub fn from_monomial_map(coeff: Rational, m: &BTreeMap<String, u32>) -> Self {
        let powers: Vec<(&str, u32)> = m.iter().map(|(v, e)| (v.as_str(), *e)).collect();
        Self::monomial(coeff, &powers)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (or the divisor is zero).
    ///
    /// Uses the lexicographic division algorithm: an exact quotient exists
    /// only if the leading term of every intermediate remainder is divisible
    /// by the divisor's leading term.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale_by(&c.recip()));
        }
        let vars = self.union_vars(divisor);
        let d = divisor.embed(&vars);
        let (d_lead_e, d_lead_c) = d.last_key_value().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.embed(&vars);
        let mut quot: BTreeMap<Exponents, Rational> = BTreeMap::new();
        while let Some((re, rc)) = rem.last_key_value().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Option<Exponents> = re
                .iter()
                .zip(&d_lead_e)
                .map(|(a, b)| a.checked_sub(*b))
                .collect();
            let qe = qe?;
            let qc = &rc / &d_lead_c;
            for (de, dc) in &d {
                let e: Exponents = de.iter().zip(&qe).map(|(x, y)| x + y).collect();
                let slot = rem.entry(e.clone()).or_insert_with(Rational::zero);
                *slot -= &qc * dc;
                if slot.is_zero() {
                    rem.remove(&e);
                }
            }
            quot.insert(qe, qc);
        }
        Some(Self::canonical(vars, quot))
    }

    pub fn eval_at(&self, point: &BTreeMap<String, Rational>) -> Result<Rational, PolyError> {
        let values: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| point.get(v).ok_or_else(|| PolyError::UnboundVariable(v.clone())))
            .collect::<Result<_, _>>()?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in values.iter().zip(e) {
                if *k > 0 {
                    t *= num_traits::pow::pow((*x).clone(), *k as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes a rational function for every variable. The result's
    /// denominator is `Π den(binding_v)^deg_v(self)` before normalization.
    pub fn substitute(&self, bindings: &BTreeMap<String, RatFunc>) -> Result<RatFunc, PolyError> {
        let mut nums: Vec<Vec<MultiPoly>> = Vec::new();
        let mut dens: Vec<Vec<MultiPoly>> = Vec::new();
        let mut degs = Vec::new();
        for (i, v) in self.vars.iter().enumerate() {
            let b = bindings
                .get(v)
                .ok_or_else(|| PolyError::UnboundVariable(v.clone()))?;
            let deg = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            nums.push(powers_up_to(b.numer(), deg));
            dens.push(powers_up_to(b.denom(), deg));
            degs.push(deg as usize);
        }
        let mut num = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (i, k) in e.iter().enumerate() {
                let k = *k as usize;
                t = t.mul_ref(&nums[i][k]).mul_ref(&dens[i][degs[i] - k]);
            }
            num = num.add_ref(&t);
        }
        let den = dens
            .iter()
            .zip(&degs)
            .fold(MultiPoly::one(), |acc, (p, d)| acc.mul_ref(&p[*d]));
        RatFunc::new(num, den)
    }

    /// Renames variables; the new names must not collide.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Self {
        let vars: Vec<String> = self
            .vars
            .iter()
            .map(|v| map.get(v).cloned().unwrap_or_else(|| v.clone()))
            .collect();
        Self::from_terms(vars, self.terms.iter().map(|(e, c)| (e.clone(), c.clone())))
    }

    /// Terms as (coefficient, var→exponent) in descending graded-lexicographic order.
    pub fn grlex_terms(&self) -> Vec<(Rational, BTreeMap<String, u32>)> {
        let mut ts: Vec<(&Exponents, &Rational)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| grlex_cmp(b, a));
        ts.into_iter()
            .map(|(e, c)| {
                let m = self
                    .vars
                    .iter()
                    .zip(e)
                    .filter(|(_, k)| **k > 0)
                    .map(|(v, k)| (v.clone(), *k))
                    .collect();
                (c.clone(), m)
            })
            .collect()
    }

    /// True when every coefficient is an integer; multiplies out otherwise.
    pub fn integral_multiple(&self) -> (Self, Integer) {
        let d = self.coefficient_denominator();
        (self.scale_by(&Rational::from_integer(d.clone())), d)
    }
}

fn powers_up_to(p: &MultiPoly, k: u32) -> Vec<MultiPoly> {
    let mut out = Vec::with_capacity(k as usize + 1);
    out.push(MultiPoly::one());
    for i in 0..k as usize {
        let next = out[i].mul_ref(p);
        out.push(next);
    }
    out
}

fn grlex_cmp(a: &Exponents, b: &Exponents) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl crate::algebra::Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn from_int(n: i64) -> Self {
        MultiPoly::int(n)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$inner(&rhs)
            }
        }
        impl<'a> $trait<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        self.terms.values_mut().for_each(|c| *c = -&*c);
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.grlex_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in terms.iter().enumerate() {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mono: Vec<String> = m
                .iter()
                .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn a() -> MultiPoly {
        MultiPoly::var("a")
    }
    fn b() -> MultiPoly {
        MultiPoly::var("b")
    }

    #[test]
    fn difference_of_squares() {
        let p = (a() + b()) * (a() - b());
        let q = a().pow(2) - b().pow(2);
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "a^2 - b^2");
    }

    #[test]
    fn binomial_fourth_power() {
        let p = (a() + b()).pow(4);
        assert_eq!(p.to_string(), "a^4 + 4*a^3*b + 6*a^2*b^2 + 4*a*b^3 + b^4");
        assert_eq!(p.pow(0), MultiPoly::one());
    }

    #[test]
    fn quartic_difference_identity() {
        let lhs = (a() + b()).pow(4) - (a() - b()).pow(4);
        let rhs = a().pow(3) * b() * MultiPoly::int(8) + a() * b().pow(3) * MultiPoly::int(8);
        assert!((lhs - rhs).is_zero());
    }

    #[test]
    fn cancellation_drops_variables() {
        let p = a() + b();
        let q = p.clone() - b();
        assert_eq!(q.vars(), &["a".to_string()]);
        assert_eq!(q, a());
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn evaluation() {
        let p = a().pow(8)
            + MultiPoly::int(24) * a().pow(4) * b().pow(4)
            + MultiPoly::int(16) * b().pow(8);
        let pt: BTreeMap<String, Rational> =
            [("a".into(), rat(1, 1)), ("b".into(), rat(1, 1))].into();
        assert_eq!(p.eval_at(&pt).unwrap(), rat(41, 1));

        let y = MultiPoly::int(4) * a() * b() * (MultiPoly::int(4) * b().pow(4) - a().pow(4));
        let pt: BTreeMap<String, Rational> =
            [("a".into(), rat(1, 1)), ("b".into(), rat(2, 1))].into();
        assert_eq!(y.eval_at(&pt).unwrap(), rat(504, 1));

        let missing: BTreeMap<String, Rational> = [("a".into(), rat(1, 1))].into();
        assert_eq!(
            y.eval_at(&missing),
            Err(PolyError::UnboundVariable("b".into()))
        );
    }

    #[test]
    fn exact_division() {
        let p = (a() + b()).pow(3) * (a() - MultiPoly::int(2) * b());
        assert_eq!(p.div_exact(&(a() + b())), Some((a() + b()).pow(2) * (a() - MultiPoly::int(2) * b())));
        assert_eq!((a().pow(2) + b()).div_exact(&(a() + b())), None);
        assert_eq!(p.div_exact(&MultiPoly::zero()), None);
        assert_eq!(
            MultiPoly::int(3).div_exact(&MultiPoly::int(6)),
            Some(MultiPoly::constant(rat(1, 2)))
        );
    }

    #[test]
    fn content_and_monomial_gcd() {
        let p = MultiPoly::constant(rat(3, 2)) * a().pow(2) * b() + MultiPoly::constant(rat(9, 4)) * a() * b().pow(3);
        assert_eq!(p.content(), rat(3, 4));
        let g = p.monomial_gcd();
        assert_eq!(g.get("a"), Some(&1));
        assert_eq!(g.get("b"), Some(&1));
    }

    #[test]
    fn homogeneity_and_degree() {
        let p = a().pow(4) + MultiPoly::int(4) * b().pow(4);
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), Some(4));
        assert!(!(p + a()).is_homogeneous());
        assert_eq!(MultiPoly::zero().total_degree(), None);
    }
}
