//! Chains of binary quartic forms sharing one value, and their lifts to
//! chains of ternary forms `x⁴ + y⁴ − c·z⁴`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::congruent::FamilyShape;
use crate::exactnum::{rat, Rational};
use crate::multipoly::RatFunc;
use crate::par::{flat_map_collect, Execution};
use crate::varieties::{DiagonalForm, ParametricSolution, Route, SolutionVector};
use crate::verify::{Limits, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("blocks do not share a common value")]
    ValueMismatch,
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("chains need at least 2 blocks, got {0}")]
    TooShort(usize),
    #[error("unknown ternary form `{0}`")]
    UnknownPhi(String),
    #[error(transparent)]
    Search(#[from] VerifyError),
}

/// One binary block `F(a₁, a₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FBlock {
    pub shape: FamilyShape,
    #[serde(with = "crate::json::rational_seq")]
    pub args: Vec<Rational>,
}

impl FBlock {
    pub fn new(shape: FamilyShape, a1: Rational, a2: Rational) -> Self {
        Self { shape, args: vec![a1, a2] }
    }

    pub fn value(&self) -> Rational {
        self.shape.value(&self.args[0], &self.args[1])
    }
}

/// Binary blocks with equal values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FChain {
    #[serde(with = "crate::json::rational")]
    pub common_value: Rational,
    pub blocks: Vec<FBlock>,
}

impl FChain {
    pub fn new(blocks: Vec<FBlock>) -> Result<Self, ChainError> {
        let common_value = blocks.first().ok_or(ChainError::LengthMismatch { expected: 1, got: 0 })?.value();
        if blocks.iter().any(|b| b.value() != common_value) {
            return Err(ChainError::ValueMismatch);
        }
        if common_value.is_zero() {
            return Err(ChainError::DegenerateParameters("common value is zero".into()));
        }
        Ok(Self { common_value, blocks })
    }

    /// Each block's own arguments as family parameters.
    pub fn default_params(&self) -> Vec<(Rational, Rational)> {
        self.blocks.iter().map(|b| (b.args[0].clone(), b.args[1].clone())).collect()
    }
}

/// Two blocks with a common value, for `s ∈ {1, 2}`:
/// `(2t³/s, 2t)` on `s·x⁴ + (4/s)·y⁴` and `(t⁴/s + 2, t⁴/s − 2)` on `x⁴ − y⁴`.
pub fn f_chain_lemma28(t: &Rational, s: u8) -> Result<FChain, ChainError> {
    if t.is_zero() {
        return Err(ChainError::DegenerateParameters("t = 0".into()));
    }
    let t3 = t * t * t;
    let t4 = &t3 * t;
    let two = rat(2, 1);
    let first = match s {
        1 => FBlock::new(FamilyShape::SumWithFour, &two * &t3, &two * t),
        2 => FBlock::new(FamilyShape::TwiceSum, t3, &two * t),
        _ => return Err(ChainError::DegenerateParameters("s must be 1 or 2".into())),
    };
    let q = t4 / Rational::from_integer(s.into());
    let second = FBlock::new(FamilyShape::Difference, &q + &two, &q - &two);
    FChain::new(vec![first, second])
}

/// Ternary forms `x⁴ + y⁴ − 2z⁴` and `x⁴ + y⁴ − z⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PhiShape {
    #[serde(rename = "2z4")]
    TwoZ4,
    #[serde(rename = "z4")]
    Z4,
}

impl PhiShape {
    pub const ALL: [PhiShape; 2] = [Self::TwoZ4, Self::Z4];

    pub fn id(self) -> &'static str {
        match self {
            Self::TwoZ4 => "2z4",
            Self::Z4 => "z4",
        }
    }

    pub fn z_coeff(self) -> i64 {
        self.route().z_coeff()
    }

    fn route(self) -> Route {
        match self {
            Self::TwoZ4 => Route::Prop26,
            Self::Z4 => Route::Lemma27,
        }
    }

    pub fn value<R: crate::algebra::Ring>(self, x: &R, y: &R, z: &R) -> R {
        crate::algebra::Ring::pow(x, 4) + crate::algebra::Ring::pow(y, 4)
            - crate::algebra::Ring::scale(&crate::algebra::Ring::pow(z, 4), self.z_coeff())
    }
}

impl fmt::Display for PhiShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PhiShape {
    type Err = ChainError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| ChainError::UnknownPhi(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiBlock {
    pub phi: PhiShape,
    #[serde(with = "crate::json::rational_seq")]
    pub coords: Vec<Rational>,
}

impl PhiBlock {
    pub fn value(&self) -> Rational {
        self.phi.value(&self.coords[0], &self.coords[1], &self.coords[2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiChain {
    #[serde(with = "crate::json::rational")]
    pub common_value: Rational,
    pub blocks: Vec<PhiBlock>,
}

impl PhiChain {
    pub fn holds(&self) -> bool {
        !self.blocks.is_empty() && self.blocks.iter().all(|b| b.value() == self.common_value)
    }
}

/// Point on `x⁴ + y⁴ − c·z⁴ = 2n²` from the family for `shape` at `(a, b)`,
/// where `n = shape(a, b)`.
pub fn lift_block<F: crate::algebra::Field>(shape: FamilyShape, phi: PhiShape, a: &F, b: &F) -> Option<[F; 3]> {
    let v = shape.formulas(a, b);
    let [x, y, z, w] = phi.route().lift(&v)?;
    Some([x.checked_div(&w)?, y.checked_div(&w)?, z.checked_div(&w)?])
}

/// Lifts every block of `fc` through the family parameters in `params`,
/// onto the ternary form `phi[i]`. The result has common value `2n²`.
pub fn thm14_lift(
    fc: &FChain,
    phi: &[PhiShape],
    params: &[(Rational, Rational)],
) -> Result<PhiChain, ChainError> {
    let k = fc.blocks.len();
    for len in [phi.len(), params.len()] {
        if len != k {
            return Err(ChainError::LengthMismatch { expected: k, got: len });
        }
    }
    let n = &fc.common_value;
    let common_value = n * n * rat(2, 1);
    let blocks = fc
        .blocks
        .iter()
        .zip(phi)
        .zip(params)
        .map(|((block, &phi), (a, b))| {
            if block.shape.value(a, b) != *n {
                return Err(ChainError::ValueMismatch);
            }
            let coords = lift_block(block.shape, phi, a, b)
                .ok_or_else(|| ChainError::DegenerateParameters(format!("{} block at ({a}, {b})", phi)))?;
            Ok(PhiBlock { phi, coords: coords.to_vec() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let chain = PhiChain { common_value, blocks };
    if !chain.holds() {
        return Err(ChainError::ValueMismatch);
    }
    Ok(chain)
}

/// The three six-variable equations obtained by subtracting two lifted
/// blocks of the `s = 1` chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CorollaryEquation {
    #[serde(rename = "eq1")]
    Eq1,
    #[serde(rename = "eq2")]
    Eq2,
    #[serde(rename = "eq3")]
    Eq3,
}

impl CorollaryEquation {
    pub const ALL: [CorollaryEquation; 3] = [Self::Eq1, Self::Eq2, Self::Eq3];

    /// Ternary forms for blocks A and B.
    pub fn phis(self) -> (PhiShape, PhiShape) {
        match self {
            Self::Eq1 => (PhiShape::TwoZ4, PhiShape::TwoZ4),
            Self::Eq2 => (PhiShape::Z4, PhiShape::Z4),
            Self::Eq3 => (PhiShape::TwoZ4, PhiShape::Z4),
        }
    }

    /// `x_A⁴ + y_A⁴ + c_B·z_B⁴ − x_B⁴ − y_B⁴ − c_A·z_A⁴`.
    pub fn form(self) -> DiagonalForm {
        let (pa, pb) = self.phis();
        DiagonalForm::from_ints(&[1, 1, pb.z_coeff(), -1, -1, -pa.z_coeff()]).expect("valid form")
    }
}

fn arrange<T: Clone>(a: &[T], b: &[T]) -> Vec<T> {
    vec![a[0].clone(), a[1].clone(), b[2].clone(), b[0].clone(), b[1].clone(), a[2].clone()]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorollarySolution {
    pub equation: CorollaryEquation,
    pub form: DiagonalForm,
    pub point: SolutionVector,
    pub cleared: SolutionVector,
}

/// Points on the three equations at parameter `t`.
pub fn corollary_solutions(t: &Rational) -> Result<Vec<CorollarySolution>, ChainError> {
    let fc = f_chain_lemma28(t, 1)?;
    let params = fc.default_params();
    CorollaryEquation::ALL
        .into_iter()
        .map(|eq| {
            let (pa, pb) = eq.phis();
            let chain = thm14_lift(&fc, &[pa, pb], &params)?;
            let point = SolutionVector(arrange(&chain.blocks[0].coords, &chain.blocks[1].coords));
            let form = eq.form();
            if form.evaluate(&point.0).map_or(true, |r| !r.is_zero()) {
                return Err(ChainError::ValueMismatch);
            }
            Ok(CorollarySolution {
                equation: eq,
                form,
                cleared: point.cleared(),
                point,
            })
        })
        .collect()
}

/// The three equations with coordinates as rational functions of `t`.
pub fn corollary_parametric() -> Result<Vec<(CorollaryEquation, DiagonalForm, ParametricSolution)>, ChainError> {
    let t = RatFunc::var("t");
    let two = RatFunc::constant(rat(2, 1));
    let t3 = crate::algebra::Ring::pow(&t, 3);
    let t4 = crate::algebra::Ring::pow(&t, 4);
    let (a1, b1) = (two.mul_ref(&t3), two.mul_ref(&t));
    let (a2, b2) = (t4.add_ref(&two), t4.sub_ref(&two));
    CorollaryEquation::ALL
        .into_iter()
        .map(|eq| {
            let (pa, pb) = eq.phis();
            let degenerate = || ChainError::DegenerateParameters("symbolic lift".into());
            let a = lift_block(FamilyShape::SumWithFour, pa, &a1, &b1).ok_or_else(degenerate)?;
            let b = lift_block(FamilyShape::Difference, pb, &a2, &b2).ok_or_else(degenerate)?;
            Ok((eq, eq.form(), ParametricSolution::new(&["t"], arrange(&a, &b))))
        })
        .collect()
}

/// Groups of at least `m` primitive triples `x ≥ y ≥ 1`, `1 ≤ z`, all at
/// most `height`, with the same nonzero value of `phi`. Sorted by value.
pub fn chain_search(
    phi: PhiShape,
    m: usize,
    height: u64,
    limits: &Limits,
    exec: Execution,
) -> Result<Vec<PhiChain>, ChainError> {
    limits.check(height)?;
    if m < 2 {
        return Err(ChainError::TooShort(m));
    }
    let c = phi.z_coeff() as i128;
    let h = height as i128;
    let hits: Vec<(i128, [i128; 3])> = flat_map_collect(exec, 1..=height, |x| {
        let x = x as i128;
        let mut out = Vec::new();
        for y in 1..=x {
            let g = x.gcd(&y);
            for z in 1..=h {
                if g.gcd(&z) != 1 {
                    continue;
                }
                let value = x.pow(4) + y.pow(4) - c * z.pow(4);
                if value != 0 {
                    out.push((value, [x, y, z]));
                }
            }
        }
        out
    });
    let mut groups: BTreeMap<i128, Vec<[i128; 3]>> = BTreeMap::new();
    for (value, triple) in hits {
        groups.entry(value).or_default().push(triple);
    }
    Ok(groups
        .into_iter()
        .filter(|(_, triples)| triples.len() >= m)
        .map(|(value, mut triples)| {
            triples.sort();
            PhiChain {
                common_value: Rational::from_integer(value.into()),
                blocks: triples
                    .into_iter()
                    .map(|t| PhiBlock {
                        phi,
                        coords: t.iter().map(|&v| Rational::from_integer(v.into())).collect(),
                    })
                    .collect(),
            }
        })
        .collect())
}
