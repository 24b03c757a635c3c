//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Arithmetic is exact, so every comparison is `==`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use quartic::algebra::Ring;
use quartic::chains::{corollary_solutions, f_chain_lemma28, thm14_lift, PhiShape};
use quartic::congruent::{cert_to_ec_point, family_i, family_ii, family_iii, CongruentCertificate, FamilyShape};
use quartic::elliptic::{prop25_backward, prop25_forward, Curve, CurvePoint, QuarticPoint};
use quartic::exactnum::{exact_sqrt, int, rat, Integer, Rational};
use quartic::multipoly::{clear_denominators, MultiPoly, RatFunc};
use quartic::par::Execution;
use quartic::surfaces::{lemma27_solution, lemma28_solution, prop26_solution};
use quartic::congruent::QuarticSquareTriple;
use quartic::varieties::{
    thm11_eq18, thm11_eq19_printed, thm11_eq19_variant, thm12_expand, thm12_term_count, DiagonalForm,
    FamilyWitness, ParametricSolution, SearchBounds, SolutionVector,
};
use quartic::verify::{brute_force, canonical, verify_numeric, verify_symbolic, Limits};

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let spent = start.elapsed();
    ensure(spent < limit, format!("took {spent:?}, limit {limit:?}"))
}

fn q(n: i64) -> Rational {
    rat(n, 1)
}

fn is_square_rational(v: &Rational, root: &Rational) -> bool {
    exact_sqrt(v).map(|r| &r == root || r == -root).unwrap_or(false)
}

fn families() -> Check {
    let start = Instant::now();
    let fams: [(FamilyShape, fn(&Integer, &Integer) -> _); 3] = [
        (FamilyShape::SumWithFour, family_i),
        (FamilyShape::TwiceSum, family_ii),
        (FamilyShape::Difference, family_iii),
    ];
    let mut count = 0;
    for (shape, f) in fams {
        for a in 1..=8i64 {
            for b in 1..=8i64 {
                let valid = match shape {
                    FamilyShape::SumWithFour => true,
                    FamilyShape::TwiceSum => a != b,
                    FamilyShape::Difference => a > b,
                };
                let res: Result<CongruentCertificate, _> = f(&int(a), &int(b));
                if !valid {
                    ensure(res.is_err(), format!("{shape:?} ({a},{b}) should be rejected"))?;
                    continue;
                }
                let c = res.map_err(|e| format!("{shape:?} ({a},{b}): {e}"))?;
                let [n, x, y, z, t] = [&c.n, &c.x, &c.y, &c.z, &c.t].map(|v| Rational::from_integer(v.clone()));
                let plus = &x * &x + &n * &y * &y;
                let minus = &x * &x - &n * &y * &y;
                ensure(
                    is_square_rational(&plus, &z) && is_square_rational(&minus, &t),
                    format!("{shape:?} ({a},{b}) fails the square test"),
                )?;
                count += 1;
            }
        }
    }
    let spots: [(fn(&Integer, &Integer) -> _, i64, i64, [i64; 5]); 5] = [
        (family_i, 1, 1, [5, 41, 12, 49, 31]),
        (family_i, 1, 2, [65, 4481, 504, 6049, 1889]),
        (family_ii, 1, 2, [34, 353, 60, 497, 47]),
        (family_iii, 2, 1, [15, 17, 4, 23, 7]),
        (family_iii, 3, 1, [80, 82, 6, 98, 62]),
    ];
    for (f, a, b, e) in spots {
        let c: CongruentCertificate = f(&int(a), &int(b)).map_err(|e| e.to_string())?;
        let got = [&c.n, &c.x, &c.y, &c.z, &c.t].map(|v| v.clone());
        ensure(got == e.map(int), format!("({a},{b}) gave {got:?}"))?;
    }
    ensure(count == 64 + 56 + 28, format!("{count} certificates"))?;
    within(start, Duration::from_secs(1))
}

/// The eq16 and eq17 coordinates as displayed, transcribed directly.
fn displayed_formulas() -> (ParametricSolution, ParametricSolution) {
    let (a, b) = (RatFunc::var("a"), RatFunc::var("b"));
    let c = |k: i64| RatFunc::constant(q(k));
    let p = |i: u32, j: u32| a.pow(i) * b.pow(j);
    let n = p(4, 0) + c(4) * p(0, 4);
    let xb = p(8, 0) + c(24) * p(4, 4) + c(16) * p(0, 8);
    let yb = c(4) * p(1, 1) * (c(4) * p(0, 4) - p(4, 0));
    let zb = p(8, 0) + c(32) * p(2, 6) - c(8) * p(4, 4) + c(8) * p(6, 2) + c(16) * p(0, 8);
    let wb = p(8, 0) - c(32) * p(2, 6) - c(8) * p(4, 4) - c(8) * p(6, 2) + c(16) * p(0, 8);

    let ratio = xb.div_ref(&yb).unwrap();
    let r2 = ratio.pow(2);
    let r4 = ratio.pow(4);
    let qq = (zb.clone() * wb.clone() * xb.clone()).div_ref(&yb.pow(3)).unwrap();
    let eq16 = vec![
        r4.clone() + c(2) * n.clone() * r2.clone() - n.pow(2),
        r4.clone() - c(2) * n.clone() * r2 - n.pow(2),
        c(4) * p(1, 1) * qq.clone(),
        r4 + n.pow(2),
        c(2) * p(2, 0) * qq.clone(),
        c(4) * p(0, 2) * qq,
    ];
    let xy = xb.clone() * yb.clone();
    let eq17 = vec![
        xb.pow(2),
        n * yb.pow(2),
        wb * zb,
        c(2) * p(1, 1) * xy.clone(),
        c(2) * p(0, 2) * xy.clone(),
        p(2, 0) * xy,
    ];
    (ParametricSolution::new(&["a", "b"], eq16), ParametricSolution::new(&["a", "b"], eq17))
}

fn symbolic_thm11() -> Check {
    let start = Instant::now();
    let (ps16, ps17) = displayed_formulas();
    let f16 = DiagonalForm::from_ints(&[1, 1, -1, -2, -2, -2]).unwrap();
    let f17 = DiagonalForm::from_ints(&[1, 1, -1, -1, -2, -2]).unwrap();
    ensure(verify_symbolic(&f16, &ps16).map_err(|e| e.to_string())?.passed(), "eq16 residual is nonzero")?;
    ensure(verify_symbolic(&f17, &ps17).map_err(|e| e.to_string())?.passed(), "eq17 residual is nonzero")?;
    let s18 = thm11_eq18(&int(2), &int(1)).map_err(|e| e.to_string())?;
    ensure(s18.form == DiagonalForm::from_ints(&[1, 1, 4, -1, -2, -2]).unwrap(), "eq18 form")?;
    ensure(verify_symbolic(&s18.form, &s18.parametric).map_err(|e| e.to_string())?.passed(), "eq18 residual is nonzero")?;
    within(start, Duration::from_secs(10))
}

fn elliptic() -> Check {
    let curve = Curve::new(int(5)).map_err(|e| e.to_string())?;
    let p = CurvePoint::affine(q(-4), q(6));
    let fwd = prop25_forward(&curve, &p).map_err(|e| e.to_string())?;
    ensure(fwd == QuarticPoint { x: q(-49), y: q(31), t: q(984) }, format!("forward gave {fwd:?}"))?;
    ensure(int(49).pow(4) - int(31).pow(4) == int(5) * int(984).pow(2), "49⁴ − 31⁴ ≠ 5·984²")?;
    let back = prop25_backward(&curve, &fwd).map_err(|e| e.to_string())?;
    ensure(curve.is_on_curve(&back), "backward point is off the curve")?;
    let d = curve.double(&p).map_err(|e| e.to_string())?;
    ensure(d == CurvePoint::affine(rat(1681, 144), rat(-62279, 1728)), format!("2P = {d:?}"))?;
    let (c2, from_cert) = cert_to_ec_point(&family_i(&int(1), &int(1)).map_err(|e| e.to_string())?);
    ensure(c2 == curve && (from_cert == d || from_cert == d.neg()), "certificate point differs from 2P")
}

fn surfaces() -> Check {
    let curve = Curve::new(int(5)).map_err(|e| e.to_string())?;
    let s = prop26_solution(&curve, &CurvePoint::affine(q(-4), q(6))).map_err(|e| e.to_string())?;
    ensure(s.coords == [q(-49), q(31), q(41), q(12)], format!("prop26 gave {:?}", s.coords))?;
    let lhs = int(49).pow(4) + int(31).pow(4);
    ensure(lhs == int(6688322) && lhs == int(2) * int(41).pow(4) + int(50) * int(12).pow(4), "6688322")?;
    ensure(s.holds(), "prop26 solution fails")?;

    let triple = QuarticSquareTriple::new(int(5), int(41), int(12), int(1519)).map_err(|e| e.to_string())?;
    let s = lemma27_solution(&triple).map_err(|e| e.to_string())?;
    ensure(s.coords == [q(1681), q(720), q(1519), q(492)], format!("lemma27 gave {:?}", s.coords))?;
    ensure(
        int(1681).pow(4) + int(720).pow(4) == int(1519).pow(4) + int(50) * int(492).pow(4),
        "x⁴ + y⁴ ≠ z⁴ + 50w⁴",
    )?;
    for ((s, t), value) in [((1, 1), 80), ((2, 1), 34), ((1, 2), 66560)] {
        let sol = lemma28_solution(&q(s), &q(t)).map_err(|e| e.to_string())?;
        let c = &sol.coords;
        let lhs = q(s) * c[0].pow(4) + q(4) / q(s) * c[1].pow(4);
        let rhs = c[2].pow(4) - c[3].pow(4);
        ensure(sol.holds() && lhs == q(value) && rhs == q(value), format!("lemma28 ({s},{t}) value {lhs}"))?;
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn thm12() -> Check {
    let w = FamilyWitness::lemma28(&q(1)).map_err(|e| e.to_string())?;
    let (form, ps) = thm12_expand(&w).map_err(|e| e.to_string())?;
    ensure(form.arity() == 6, format!("{} terms", form.arity()))?;
    for m in 1..=6 {
        ensure(thm12_term_count(m) == binomial(m + 1, 2) + 3, format!("count at m = {m}"))?;
        ensure(thm12_term_count(m) == (m * m + m + 6) / 2, format!("closed form at m = {m}"))?;
    }
    ensure(verify_symbolic(&form, &ps).map_err(|e| e.to_string())?.passed(), "expanded solution fails")
}

fn corollary() -> Check {
    let fc = f_chain_lemma28(&q(1), 1).map_err(|e| e.to_string())?;
    ensure(fc.common_value == q(80), "t = 1 chain value")?;
    let params = [(q(2), q(2)), (q(3), q(1))];
    let lifted = thm14_lift(&fc, &[PhiShape::TwoZ4, PhiShape::Z4], &params).map_err(|e| e.to_string())?;
    ensure(lifted.common_value == q(12800) && lifted.holds(), "lifted value 12800")?;
    for t in 1..=3 {
        let sols = corollary_solutions(&q(t)).map_err(|e| e.to_string())?;
        ensure(sols.len() == 3, "three equations")?;
        for s in sols {
            let all: Vec<usize> = (0..6).collect();
            let r = verify_numeric(&s.form, &s.cleared, &all).map_err(|e| e.to_string())?;
            ensure(r.passed(), format!("t = {t}, {:?} fails", s.equation))?;
        }
    }
    Ok(())
}

fn oracle() -> Check {
    let start = Instant::now();
    let limits = Limits::default();
    let exec = Execution::default();
    let f = DiagonalForm::from_ints(&[1, 1, -2, -50]).unwrap();
    let list = brute_force(&f, 50, &limits, exec).map_err(|e| e.to_string())?;
    ensure(list.contains(&SolutionVector::from_ints(&[49, 31, 41, 12])), "(49,31,41,12) missing")?;
    for v in &list {
        ensure(verify_numeric(&f, v, &[]).map_err(|e| e.to_string())?.passed(), "brute output fails")?;
    }
    let curve = Curve::new(int(5)).map_err(|e| e.to_string())?;
    let s = prop26_solution(&curve, &CurvePoint::affine(q(-4), q(6))).map_err(|e| e.to_string())?;
    ensure(list.contains(&canonical(&SolutionVector(s.coords))), "prop26 output missing")?;

    let mut lists: BTreeMap<i64, Vec<SolutionVector>> = BTreeMap::new();
    for s in [1, 2] {
        let form = DiagonalForm::from_ints(&[s, 4 / s, -1, 1]).unwrap();
        lists.insert(s, brute_force(&form, 20, &limits, exec).map_err(|e| e.to_string())?);
    }
    for (s, t) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let sol = lemma28_solution(&q(s), &q(t)).map_err(|e| e.to_string())?;
        let v = canonical(&SolutionVector(sol.coords));
        if v.0.iter().all(|x| x <= &q(20)) {
            ensure(lists[&s].contains(&v), format!("lemma28 ({s},{t}) missing"))?;
        }
    }
    within(start, Duration::from_secs(180))
}

fn properties() -> Check {
    let mut runner = TestRunner::new(Config { cases: 64, ..Config::default() });
    let small = || (-30i64..30, 1i64..20).prop_map(|(p, d)| rat(p, d));

    let f17 = DiagonalForm::from_ints(&[1, 1, -1, -1, -2, -2]).unwrap();
    let base = SolutionVector::from_ints(&[1681, 720, 1519, 984, 984, 492]);
    let scale = small().prop_filter("nonzero", |l| *l != rat(0, 1));
    runner
        .run(&scale, |l| {
            prop_assert!(verify_numeric(&f17, &base.scaled(&l), &[]).unwrap().passed());
            Ok(())
        })
        .map_err(|e| format!("homogeneity: {e}"))?;
    runner
        .run(&(0usize..6), |i| {
            let mut v = base.clone();
            v.0[i] += rat(1, 1);
            prop_assert!(!verify_numeric(&f17, &v, &[]).unwrap().passed());
            Ok(())
        })
        .map_err(|e| format!("mutation: {e}"))?;

    let curve = Curve::new(int(5)).unwrap();
    let p = CurvePoint::affine(q(-4), q(6));
    let multiples: Vec<CurvePoint> = (0..5).map(|k| curve.scalar_mul(&int(k), &p).unwrap()).collect();
    let torsion = [CurvePoint::Infinity, CurvePoint::affine(q(0), q(0)), CurvePoint::affine(q(5), q(0))];
    let pool: Vec<CurvePoint> = multiples.iter().chain(&torsion).cloned().collect();
    let idx = 0..pool.len();
    runner
        .run(&(idx.clone(), idx.clone(), idx), |(i, j, k)| {
            let (a, b, c) = (&pool[i], &pool[j], &pool[k]);
            let ab = curve.add(a, b).unwrap();
            prop_assert!(curve.is_on_curve(&ab));
            prop_assert_eq!(&ab, &curve.add(b, a).unwrap());
            let left = curve.add(&ab, c).unwrap();
            let right = curve.add(a, &curve.add(b, c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            Ok(())
        })
        .map_err(|e| format!("group law: {e}"))?;

    let coords = proptest::collection::vec((small(), small(), 0u32..3), 1..5);
    runner
        .run(&coords, |cs| {
            let t = MultiPoly::var("t");
            let fs: Vec<RatFunc> = cs
                .iter()
                .map(|(num, den, e)| {
                    let d = MultiPoly::constant(den.clone() + rat(1, 1)) * t.pow(*e) + MultiPoly::int(3);
                    RatFunc::new(MultiPoly::constant(num.clone()) + t.clone(), d).unwrap()
                })
                .collect();
            let cleared = clear_denominators(&fs);
            for (f, p) in fs.iter().zip(&cleared.coords) {
                prop_assert!(p.has_integer_coefficients());
                let back = RatFunc::new(p.clone(), cleared.multiplier.clone()).unwrap();
                prop_assert_eq!(&back, f);
            }
            Ok(())
        })
        .map_err(|e| format!("clear_denominators: {e}"))?;
    Ok(())
}

fn honest_gap() -> Check {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = quartic::cli::run(["qf", "solve", "--equation", "eq20"], &mut out, &mut err);
    let doc: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    ensure(code == 1 && doc["error"] == "UnresolvedSplitting", format!("eq20 exit {code}"))?;
    let v = thm11_eq19_variant(&int(1), &int(2)).map_err(|e| e.to_string())?;
    ensure(verify_symbolic(&v.form, &v.parametric).map_err(|e| e.to_string())?.passed(), "eq19 variant fails")?;
    ensure(
        thm11_eq19_printed(&SearchBounds::default(), Execution::default()).is_err(),
        "printed eq19 signature unexpectedly resolved",
    )
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("family certificates", families),
        ("symbolic six-variable solutions", symbolic_thm11),
        ("elliptic correspondence", elliptic),
        ("surface constructions", surfaces),
        ("expansion term counts", thm12),
        ("corollary chains", corollary),
        ("brute-force oracle agreement", oracle),
        ("property suite", properties),
        ("honest gaps", honest_gap),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
