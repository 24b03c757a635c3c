//! Search for identities `Σ cᵢ·gᵢ⁴ = 2·n²` with prescribed coefficients `cᵢ`.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer as _;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactnum::{Integer, Rational};
use crate::multipoly::MultiPoly;
use crate::par::{find_map_first_index, Execution};

/// Limits on the candidate set `{c·m} ∪ {p·mᵢ ± q·mⱼ}` for the `gᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Largest exponent of any single variable in a monomial.
    pub max_exponent: u32,
    /// Largest numerator of a coefficient.
    pub max_coeff: u32,
    /// Largest denominator of a monomial coefficient; binomials use integers.
    pub max_denominator: u32,
    pub binomials: bool,
    /// Only monomials of half the degree of `n`, as homogeneity requires.
    pub homogeneous_only: bool,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self {
            max_exponent: 4,
            max_coeff: 4,
            max_denominator: 1,
            binomials: true,
            homogeneous_only: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplittingIdentity {
    pub n_poly: MultiPoly,
    pub terms: Vec<SplitTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitTerm {
    #[serde(with = "crate::json::rational")]
    pub coeff: Rational,
    pub g: MultiPoly,
}

impl SplittingIdentity {
    pub fn new(n_poly: MultiPoly, terms: Vec<(Rational, MultiPoly)>) -> Self {
        Self {
            n_poly,
            terms: terms.into_iter().map(|(coeff, g)| SplitTerm { coeff, g }).collect(),
        }
    }

    /// `Σ cᵢ·gᵢ⁴ − 2·n²`, zero exactly when the identity holds.
    pub fn residual(&self) -> MultiPoly {
        let lhs = self
            .terms
            .iter()
            .fold(MultiPoly::zero(), |acc, t| acc + t.g.pow(4).scale_by(&t.coeff));
        lhs - self.n_poly.pow(2).scale_by(&Rational::from_integer(2.into()))
    }

    pub fn holds(&self) -> bool {
        self.residual().is_zero()
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        self.terms.iter().map(|t| t.coeff.clone()).collect()
    }
}

/// Exponent vectors with every entry `≤ max`, in descending lexicographic order.
fn monomials(nvars: usize, max: u32, degree: Option<u32>) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=max).rev().map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    if let Some(d) = degree {
        out.retain(|m| m.iter().sum::<u32>() == d);
    }
    out
}

fn monomial_poly(vars: &[String], exps: &[u32], c: Rational) -> MultiPoly {
    let m: BTreeMap<String, u32> = vars
        .iter()
        .zip(exps)
        .filter(|(_, e)| **e > 0)
        .map(|(v, e)| (v.clone(), *e))
        .collect();
    MultiPoly::from_monomial_map(c, &m)
}

/// Candidate `gᵢ` in the fixed search order: scaled monomials by ascending
/// coefficient, then binomials.
pub fn candidates(n_poly: &MultiPoly, bounds: &SearchBounds) -> Vec<MultiPoly> {
    let vars = n_poly.vars().to_vec();
    let degree = if bounds.homogeneous_only {
        match n_poly.total_degree() {
            Some(d) if d % 2 == 0 => Some(d / 2),
            _ => return Vec::new(),
        }
    } else {
        None
    };
    let monos = monomials(vars.len(), bounds.max_exponent, degree);

    let mut coeffs: Vec<Rational> = Vec::new();
    for q in 1..=bounds.max_denominator.max(1) {
        for p in 1..=bounds.max_coeff {
            if u32::gcd(&p, &q) == 1 {
                coeffs.push(Rational::new(p.into(), q.into()));
            }
        }
    }
    coeffs.sort();

    let mut out = Vec::new();
    for c in &coeffs {
        for m in &monos {
            out.push(monomial_poly(&vars, m, c.clone()));
        }
    }
    if bounds.binomials {
        let int = |k: u32| Rational::from_integer(Integer::from(k));
        for i in 0..monos.len() {
            for j in i + 1..monos.len() {
                for p in 1..=bounds.max_coeff {
                    for q in 1..=bounds.max_coeff {
                        let (mi, mj) = (monomial_poly(&vars, &monos[i], int(p)), monomial_poly(&vars, &monos[j], int(q)));
                        out.push(&mi + &mj);
                        out.push(&mi - &mj);
                    }
                }
            }
        }
    }
    out
}

/// First identity `Σ cᵢ·gᵢ⁴ = 2·n_poly²` with `cᵢ = signature[i]` in the
/// lexicographic order of candidate indices for `g₁, …, g_{k−1}`; `g_k` is
/// looked up from the remainder. The result does not depend on `exec`.
pub fn splitting_search(
    n_poly: &MultiPoly,
    signature: &[Rational],
    bounds: &SearchBounds,
    exec: Execution,
) -> Option<SplittingIdentity> {
    if signature.is_empty() || signature.iter().any(Zero::is_zero) {
        return None;
    }
    let cands = candidates(n_poly, bounds);
    let fourth: Vec<MultiPoly> = cands.iter().map(|g| g.pow(4)).collect();
    let target = n_poly.pow(2).scale_by(&Rational::from_integer(2.into()));
    let build = |idx: Vec<usize>| {
        let terms = signature.iter().cloned().zip(idx.iter().map(|&i| cands[i].clone())).collect();
        let id = SplittingIdentity::new(n_poly.clone(), terms);
        id.holds().then_some(id)
    };
    let found = match Dense::new(&target, &fourth, signature) {
        Some(dense) => search_indices(&dense.target, &dense.scaled, exec),
        None => {
            let scaled: Vec<Vec<MultiPoly>> = signature
                .iter()
                .map(|c| fourth.iter().map(|p| p.scale_by(c)).collect())
                .collect();
            search_indices(&target, &scaled, exec)
        }
    };
    found.and_then(build)
}

/// Polynomials as fixed-width integer vectors over a shared monomial
/// basis, after multiplying through by a common denominator.
struct Dense {
    target: Vec<i128>,
    scaled: Vec<Vec<Vec<i128>>>,
}

impl Dense {
    fn new(target: &MultiPoly, fourth: &[MultiPoly], signature: &[Rational]) -> Option<Self> {
        let mut basis: BTreeMap<BTreeMap<String, u32>, usize> = BTreeMap::new();
        let mut denom = Integer::from(1);
        let mut scan = |p: &MultiPoly, c: &Rational| {
            for (q, m) in p.grlex_terms() {
                let len = basis.len();
                basis.entry(m).or_insert(len);
                denom = denom.lcm((q * c).denom());
            }
        };
        scan(target, &Rational::from_integer(1.into()));
        for c in signature {
            fourth.iter().for_each(|p| scan(p, c));
        }
        // Headroom for summing up to `signature.len()` vectors.
        let limit = Integer::from(1u8) << 120usize;
        let to_vec = |p: &MultiPoly, c: &Rational| -> Option<Vec<i128>> {
            let mut v = vec![0i128; basis.len()];
            for (q, m) in p.grlex_terms() {
                let x = (q * c * Rational::from_integer(denom.clone())).to_integer();
                if x.magnitude() >= limit.magnitude() {
                    return None;
                }
                v[basis[&m]] = i128::try_from(&x).ok()?;
            }
            Some(v)
        };
        let target = to_vec(target, &Rational::from_integer(1.into()))?;
        let scaled = signature
            .iter()
            .map(|c| fourth.iter().map(|p| to_vec(p, c)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Self { target, scaled })
    }
}

/// Vector arithmetic the index search needs.
trait Term: Clone + Eq + std::hash::Hash + Send + Sync {
    fn minus(&self, other: &Self) -> Self;
}

impl Term for MultiPoly {
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

impl Term for Vec<i128> {
    fn minus(&self, other: &Self) -> Self {
        self.iter().zip(other).map(|(a, b)| a - b).collect()
    }
}

/// Indices `i₁ … i_k` with `target = Σⱼ scaled[j][iⱼ]`, first in
/// lexicographic order.
fn search_indices<T: Term>(target: &T, scaled: &[Vec<T>], exec: Execution) -> Option<Vec<usize>> {
    let k = scaled.len();
    let mut lookup: HashMap<&T, usize> = HashMap::new();
    for (i, p) in scaled[k - 1].iter().enumerate() {
        lookup.entry(p).or_insert(i);
    }
    let finish = |rest: &T, chosen: &[usize]| -> Option<Vec<usize>> {
        let &j = lookup.get(rest)?;
        let mut idx = chosen.to_vec();
        idx.push(j);
        Some(idx)
    };
    if k == 1 {
        return finish(target, &[]);
    }
    let n = scaled[0].len();
    find_map_first_index(exec, n, |first| {
        let rest = target.minus(&scaled[0][first]);
        let mut chosen = vec![first];
        descend(&scaled[..k - 1], 1, &rest, &mut chosen, &finish)
    })
}

fn descend<T: Term, F>(scaled: &[Vec<T>], slot: usize, rest: &T, chosen: &mut Vec<usize>, finish: &F) -> Option<Vec<usize>>
where
    F: Fn(&T, &[usize]) -> Option<Vec<usize>>,
{
    if slot == scaled.len() {
        return finish(rest, chosen);
    }
    for (i, p) in scaled[slot].iter().enumerate() {
        chosen.push(i);
        let found = descend(scaled, slot + 1, &rest.minus(p), chosen, finish);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Signature from small integer coefficients.
pub fn signature(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| Rational::from_integer(v.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn ab() -> (MultiPoly, MultiPoly) {
        (MultiPoly::var("a"), MultiPoly::var("b"))
    }

    fn found(n: &MultiPoly, sig: &[i64]) -> Option<Vec<(Rational, MultiPoly)>> {
        splitting_search(n, &signature(sig), &SearchBounds::default(), Execution::Sequential)
            .map(|id| id.terms.into_iter().map(|t| (t.coeff, t.g)).collect())
    }

    #[test]
    fn family_i_split() {
        let (a, b) = ab();
        let n = a.pow(4) + MultiPoly::int(4) * b.pow(4);
        let two = MultiPoly::int(2);
        assert_eq!(
            found(&n, &[1, 2, 2]).unwrap(),
            vec![
                (rat(1, 1), &two * &(&a * &b)),
                (rat(2, 1), a.pow(2)),
                (rat(2, 1), &two * &b.pow(2)),
            ]
        );
    }

    #[test]
    fn family_iii_split() {
        let (a, b) = ab();
        let n = a.pow(4) - b.pow(4);
        assert_eq!(
            found(&n, &[2, 2, -4]).unwrap(),
            vec![(rat(2, 1), a.pow(2)), (rat(2, 1), b.pow(2)), (rat(-4, 1), &a * &b)]
        );
    }

    #[test]
    fn family_ii_split() {
        let (a, b) = ab();
        let n = MultiPoly::int(2) * a.pow(4) + MultiPoly::int(2) * b.pow(4);
        let id = splitting_search(&n, &signature(&[4, 4, -2]), &SearchBounds::default(), Execution::Sequential).unwrap();
        assert!(id.holds());
        let expected = SplittingIdentity::new(
            n.clone(),
            vec![
                (rat(4, 1), a.pow(2) + b.pow(2)),
                (rat(4, 1), a.pow(2) - b.pow(2)),
                (rat(-2, 1), MultiPoly::int(2) * a * b),
            ],
        );
        assert!(expected.holds());
        assert_eq!(id, expected);
    }

    #[test]
    fn printed_signatures_not_found() {
        let (a, b) = ab();
        let n = MultiPoly::int(2) * a.pow(4) + MultiPoly::int(2) * b.pow(4);
        assert!(found(&n, &[4, -2, -4]).is_none());
        let n = a.pow(4) + MultiPoly::int(4) * b.pow(4);
        assert!(found(&n, &[2, 2, 2]).is_none());
    }

    #[test]
    fn parallel_matches_sequential() {
        let (a, b) = ab();
        let n = a.pow(4) + MultiPoly::int(4) * b.pow(4);
        let sig = signature(&[1, 2, 2]);
        let bounds = SearchBounds::default();
        assert_eq!(
            splitting_search(&n, &sig, &bounds, Execution::Parallel),
            splitting_search(&n, &sig, &bounds, Execution::Sequential)
        );
    }

    #[test]
    fn candidate_order() {
        let (a, b) = ab();
        let n = a.pow(4) + b.pow(4);
        let c = candidates(&n, &SearchBounds { binomials: false, max_coeff: 2, ..Default::default() });
        assert_eq!(c[..3], [a.pow(2), &a * &b, b.pow(2)]);
        assert_eq!(c[3], MultiPoly::int(2) * a.pow(2));
        assert_eq!(c.len(), 6);
    }
}
