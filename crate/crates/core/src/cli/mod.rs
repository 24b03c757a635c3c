//! The `qf` command-line front end. Every command prints one JSON document;
//! exit code 0 means verified, 1 unverified or not found, 2 bad input.

mod args;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::chains::{chain_search, corollary_solutions, f_chain_lemma28, thm14_lift, FChain, PhiChain};
use crate::congruent::{cert_to_ec_point, cert_to_quartic, congruent_check_small, QuarticSquareTriple};
use crate::elliptic::{prop25_forward, Curve, CurvePoint, QuarticPoint};
use crate::exactnum::{Integer, Rational};
use crate::multipoly::{MultiPoly, RatFunc};
use crate::par::Execution;
use crate::surfaces::{lemma27_solution, lemma28_parametric, lemma28_solution, prop26_solution, SurfaceKind, SurfaceSolution};
use crate::varieties::{
    remark_family, remark_search_bounds, solve_equation, splitting_search, thm11_eq19_printed, thm11_eq20_printed,
    thm12_expand, thm12_term_count, DiagonalForm, Equation, FamilyWitness, ParametricSolution, Route, SearchBounds,
    SolutionVector, SplittingIdentity,
};
use crate::verify::{brute_force, verify_numeric, verify_symbolic, verify_symbolic_coeffs, Limits, VerificationReport};

use args::{
    ChainArgs, Cli, Command, EcArgs, ExpandArgs, OutputArgs, SearchCommand, SolveArgs, SurfaceChoice, SurfaceInputs,
    VerifyArgs,
};

/// Environment variable that caps search heights.
pub const MAX_HEIGHT_VAR: &str = "QF_MAX_HEIGHT";

#[derive(Debug)]
struct Failure {
    code: i32,
    kind: String,
    message: String,
}

impl Failure {
    fn invalid(kind: &str, message: impl fmt::Display) -> Self {
        Self { code: 2, kind: kind.into(), message: message.to_string() }
    }

    fn unverified(kind: &str, message: impl fmt::Display) -> Self {
        Self { code: 1, kind: kind.into(), message: message.to_string() }
    }

    fn missing(flag: &str) -> Self {
        Self::invalid("MissingArgument", format!("--{flag} is required here"))
    }
}

/// Variant name of a library error, e.g. `DegenerateParameters`.
fn kind_of<E: fmt::Debug>(e: &E) -> String {
    let debug = format!("{e:?}");
    let head = debug.split('"').next().unwrap_or_default();
    head.split(['(', ' ', '{', ')'])
        .filter(|s| s.starts_with(char::is_uppercase))
        .last()
        .unwrap_or("Error")
        .to_string()
}

macro_rules! invalid_input {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::invalid(&kind_of(&e), &e)
            }
        }
    )*};
}

invalid_input!(
    crate::congruent::CongruentError,
    crate::elliptic::CurveError,
    crate::surfaces::SurfaceError,
    crate::chains::ChainError,
    crate::verify::VerifyError,
    crate::multipoly::PolyError
);

impl From<crate::varieties::VarietyError> for Failure {
    fn from(e: crate::varieties::VarietyError) -> Self {
        use crate::varieties::VarietyError as V;
        match e {
            V::UnresolvedSplitting | V::VerificationFailed(_) => Failure::unverified(&kind_of(&e), &e),
            _ => Failure::invalid(&kind_of(&e), &e),
        }
    }
}

/// A finished command: the document and whether it counts as success.
struct Done {
    json: String,
    ok: bool,
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(|e| Failure::invalid("Serialization", e))
}

fn done<T: Serialize>(v: &T, ok: bool) -> Result<Done, Failure> {
    Ok(Done { json: to_json(v)?, ok })
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::invalid("Io", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::invalid("InvalidJson", format!("{}: {e}", path.display())))
}

fn limits_from_env() -> Result<Limits, Failure> {
    match std::env::var(MAX_HEIGHT_VAR) {
        Err(_) => Ok(Limits::default()),
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(h) if h > 0 => Ok(Limits { max_height: h }),
            _ => Err(Failure::invalid("InvalidEnvironment", format!("{MAX_HEIGHT_VAR} must be a positive integer"))),
        },
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let result = limits_from_env().and_then(|limits| dispatch(cli.command, exec, &limits));
    match result {
        Ok(d) => {
            let _ = writeln!(out, "{}", d.json);
            if d.ok {
                0
            } else {
                1
            }
        }
        Err(f) => {
            let doc = serde_json::json!({ "error": f.kind, "message": f.message });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap_or_default());
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, exec: Execution, limits: &Limits) -> Result<Done, Failure> {
    match command {
        Command::Congruent(a) => done(&a.family.certificate(&a.a, &a.b)?, true),
        Command::Ec(a) => ec(a),
        Command::Surface(a) => {
            let label = match a.kind {
                SurfaceChoice::Prop26 => "surface21",
                SurfaceChoice::Lemma27 => "surface38",
                SurfaceChoice::Lemma28 => "lemma28",
            };
            surface(label, a.kind, &a.inputs, &a.out)
        }
        Command::Solve(a) => solve(a, exec),
        Command::Expand(a) => expand(a),
        Command::Chain(a) => chain(a),
        Command::Verify(a) => verify(a),
        Command::Search(s) => search(s, exec, limits),
    }
}

fn finish<T: Serialize>(doc: &T, ok: bool, out: &OutputArgs) -> Result<Done, Failure> {
    let d = Done { json: to_json(doc)?, ok };
    if let (Some(path), true) = (&out.output, ok) {
        std::fs::write(path, format!("{}\n", d.json))
            .map_err(|e| Failure::invalid("Io", format!("{}: {e}", path.display())))?;
    }
    Ok(d)
}

#[derive(Serialize)]
struct MultipleDoc {
    #[serde(with = "crate::json::integer")]
    k: Integer,
    point: CurvePoint,
}

#[derive(Serialize)]
struct EcDoc {
    curve: Curve,
    point: CurvePoint,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiple: Option<MultipleDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quartic: Option<QuarticPoint>,
}

fn ec_point(point: &args::PointArgs, family: &args::FamilyArgs) -> Result<(Curve, CurvePoint), Failure> {
    if let Some(shape) = family.family {
        let (a, b) = (family.a.as_ref().ok_or(Failure::missing("a"))?, family.b.as_ref().ok_or(Failure::missing("b"))?);
        return Ok(cert_to_ec_point(&shape.certificate(a, b)?));
    }
    let n = point.n.clone().ok_or(Failure::missing("n"))?;
    let u = point.u.clone().ok_or(Failure::missing("u"))?;
    let v = point.v.clone().ok_or(Failure::missing("v"))?;
    let curve = Curve::new(n)?;
    let p = CurvePoint::affine(u, v);
    if !curve.is_on_curve(&p) {
        return Err(crate::elliptic::CurveError::OffCurve.into());
    }
    Ok((curve, p))
}

fn ec(a: EcArgs) -> Result<Done, Failure> {
    let (curve, point) = ec_point(&a.point, &a.family)?;
    let multiple = match a.k {
        Some(k) => Some(MultipleDoc { point: curve.scalar_mul(&k, &point)?, k }),
        None => None,
    };
    let quartic = prop25_forward(&curve, &point).ok();
    done(&EcDoc { curve, point, multiple, quartic }, true)
}

#[derive(Serialize, Deserialize, Default)]
struct SolveDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    equation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    form: Option<DiagonalForm>,
    /// Coefficients that depend on the parameters, when there is no fixed form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<RatFunc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<SolutionVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parametric: Option<ParametricSolution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    splitting: Option<SplittingIdentity>,
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    #[serde(flatten)]
    doc: &'a SolveDoc,
    verification: Vec<VerificationReport>,
}

fn symbolic_report(
    form: Option<&DiagonalForm>,
    coeffs: Option<&[RatFunc]>,
    ps: &ParametricSolution,
) -> Result<VerificationReport, Failure> {
    match (form, coeffs) {
        (_, Some(c)) => Ok(verify_symbolic_coeffs(c, ps)?),
        (Some(f), None) => Ok(verify_symbolic(f, ps)?),
        (None, None) => Err(Failure::invalid("MissingForm", "no form to verify against")),
    }
}

/// Verifies every part of `doc` and prints it with the reports; the
/// output file is written only when everything passes.
fn emit(doc: SolveDoc, required: &[usize], out: &OutputArgs) -> Result<Done, Failure> {
    let mut reports = Vec::new();
    if let (Some(form), Some(coords)) = (&doc.form, &doc.coords) {
        reports.push(verify_numeric(form, coords, required)?);
    }
    if let Some(ps) = &doc.parametric {
        reports.push(symbolic_report(doc.form.as_ref(), doc.coefficients.as_deref(), ps)?);
    }
    let ok = !reports.is_empty() && reports.iter().all(VerificationReport::passed);
    finish(&SolveOutput { doc: &doc, verification: reports }, ok, out)
}

fn clear_if(v: SolutionVector, out: &OutputArgs) -> SolutionVector {
    if out.clear_denominators {
        v.cleared()
    } else {
        v
    }
}

fn family_inputs(inputs: &SurfaceInputs) -> Option<crate::congruent::FamilyShape> {
    inputs.family.family
}

/// Family parameters as polynomial variables `a`, `b`.
fn symbolic_family(shape: crate::congruent::FamilyShape) -> crate::congruent::FamilyValues<RatFunc> {
    shape.formulas(&RatFunc::var("a"), &RatFunc::var("b"))
}

fn surface_parametric(
    kind: SurfaceChoice,
    inputs: &SurfaceInputs,
) -> Result<(Vec<RatFunc>, ParametricSolution), Failure> {
    let route = match kind {
        SurfaceChoice::Lemma28 => return Ok(lemma28_parametric(inputs.s.as_ref())?),
        SurfaceChoice::Prop26 => (Route::Prop26, SurfaceKind::Prop26),
        SurfaceChoice::Lemma27 => (Route::Lemma27, SurfaceKind::Lemma27),
    };
    let shape = family_inputs(inputs)
        .ok_or_else(|| Failure::invalid("MissingArgument", "--symbolic needs --family for this surface"))?;
    let values = symbolic_family(shape);
    let coords = route
        .0
        .lift(&values)
        .ok_or_else(|| Failure::invalid("DegenerateParameters", "family does not lift"))?;
    Ok((route.1.coeffs(&values.n), ParametricSolution::new(&["a", "b"], coords.to_vec())))
}

fn surface_numeric(kind: SurfaceChoice, inputs: &SurfaceInputs) -> Result<SurfaceSolution, Failure> {
    let fam = &inputs.family;
    let cert = match fam.family {
        Some(shape) => Some(shape.certificate(
            fam.a.as_ref().ok_or(Failure::missing("a"))?,
            fam.b.as_ref().ok_or(Failure::missing("b"))?,
        )?),
        None => None,
    };
    Ok(match kind {
        SurfaceChoice::Prop26 => {
            let (curve, p) = ec_point(&inputs.point, fam)?;
            prop26_solution(&curve, &p)?
        }
        SurfaceChoice::Lemma27 => {
            let triple = match cert {
                Some(c) => cert_to_quartic(&c),
                None => QuarticSquareTriple::new(
                    inputs.point.n.clone().ok_or(Failure::missing("n"))?,
                    inputs.big_x.clone().ok_or(Failure::missing("x"))?,
                    inputs.big_y.clone().ok_or(Failure::missing("y"))?,
                    inputs.big_k.clone().ok_or(Failure::missing("k"))?,
                )?,
            };
            lemma27_solution(&triple)?
        }
        SurfaceChoice::Lemma28 => lemma28_solution(
            inputs.s.as_ref().ok_or(Failure::missing("s"))?,
            inputs.t.as_ref().ok_or(Failure::missing("t"))?,
        )?,
    })
}

fn surface(label: &str, kind: SurfaceChoice, inputs: &SurfaceInputs, out: &OutputArgs) -> Result<Done, Failure> {
    let sol = surface_numeric(kind, inputs)?;
    let mut doc = SolveDoc {
        equation: Some(label.into()),
        form: Some(sol.form()),
        coords: Some(clear_if(SolutionVector(sol.coords.clone()), out)),
        ..Default::default()
    };
    if out.symbolic {
        let (coeffs, ps) = surface_parametric(kind, inputs)?;
        if coeffs.iter().all(|c| c.vars().is_empty()) {
            let constants = coeffs
                .iter()
                .map(|c| c.eval_at(&Default::default()))
                .collect::<Result<Vec<_>, _>>()?;
            doc.form = Some(DiagonalForm::from_coeffs(constants)?);
        } else {
            doc.coefficients = Some(coeffs);
        }
        doc.parametric = Some(ps);
    }
    let required: Vec<usize> = match kind {
        SurfaceChoice::Lemma28 => Vec::new(),
        _ => (0..4).collect(),
    };
    emit(doc, &required, out)
}

fn solve(a: SolveArgs, exec: Execution) -> Result<Done, Failure> {
    let (inputs, out) = (&a.inputs, &a.out);
    match a.equation.as_str() {
        "eq19" => printed(thm11_eq19_printed(&SearchBounds::default(), exec)),
        "eq20" => printed(thm11_eq20_printed(&SearchBounds::default(), exec)),
        "surface21" => surface("surface21", SurfaceChoice::Prop26, inputs, out),
        "surface38" => surface("surface38", SurfaceChoice::Lemma27, inputs, out),
        "lemma28" => surface("lemma28", SurfaceChoice::Lemma28, inputs, out),
        "remark_family" => {
            let one = Rational::from_integer(1.into());
            let s = inputs.s.clone().unwrap_or_else(|| one.clone());
            let t = inputs.t.clone().unwrap_or(one);
            let fam = remark_family(&s, &remark_search_bounds(), exec)?;
            let point = fam.parametric.eval(&[t])?;
            let doc = SolveDoc {
                equation: Some(a.equation.clone()),
                form: Some(fam.form),
                coords: Some(clear_if(point, out)),
                parametric: out.symbolic.then_some(fam.parametric),
                splitting: Some(fam.splitting),
                ..Default::default()
            };
            emit(doc, &[], out)
        }
        id => {
            let eq = Equation::from_id(id).ok_or_else(|| Failure::invalid("UnknownEquation", format!("unknown equation `{id}`")))?;
            let fam = &inputs.family;
            let sol = solve_equation(
                eq,
                fam.a.as_ref().ok_or(Failure::missing("a"))?,
                fam.b.as_ref().ok_or(Failure::missing("b"))?,
            )?;
            let coords = if out.clear_denominators { sol.cleared } else { sol.point };
            let doc = SolveDoc {
                equation: Some(id.into()),
                form: Some(sol.form),
                coords: Some(coords),
                parametric: out.symbolic.then_some(sol.parametric),
                splitting: Some(sol.splitting),
                ..Default::default()
            };
            emit(doc, &(0..6).collect::<Vec<_>>(), out)
        }
    }
}

fn printed(found: Result<SplittingIdentity, crate::varieties::VarietyError>) -> Result<Done, Failure> {
    done(&found?, true)
}

#[derive(Serialize)]
struct ExpandDoc {
    witness_terms: usize,
    terms: usize,
    expected_terms: usize,
    #[serde(flatten)]
    solution: SolveDoc,
}

fn expand(a: ExpandArgs) -> Result<Done, Failure> {
    if let Some(m) = a.count {
        return done(&serde_json::json!({ "m": m, "terms": thm12_term_count(m) }), true);
    }
    let w = FamilyWitness::lemma28(&a.s)?;
    let (form, ps) = thm12_expand(&w)?;
    let coords = clear_if(ps.eval(&[a.t.clone()])?, &a.out);
    let numeric = verify_numeric(&form, &coords, &[])?;
    let mut reports = vec![numeric];
    if a.out.symbolic {
        reports.push(verify_symbolic(&form, &ps)?);
    }
    let ok = reports.iter().all(VerificationReport::passed);
    let doc = ExpandDoc {
        witness_terms: w.k.len(),
        terms: form.arity(),
        expected_terms: thm12_term_count(w.k.len()),
        solution: SolveDoc {
            form: Some(form),
            coords: Some(coords),
            parametric: a.out.symbolic.then_some(ps),
            ..Default::default()
        },
    };
    #[derive(Serialize)]
    struct WithReports<'a> {
        #[serde(flatten)]
        doc: &'a ExpandDoc,
        verification: Vec<VerificationReport>,
    }
    finish(&WithReports { doc: &doc, verification: reports }, ok, &a.out)
}

#[derive(Serialize)]
struct ChainDoc {
    f_chain: FChain,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi_chain: Option<PhiChain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cleared_blocks: Option<Vec<SolutionVector>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    solutions: Vec<CorollaryDoc>,
}

#[derive(Serialize)]
struct CorollaryDoc {
    equation: crate::chains::CorollaryEquation,
    form: DiagonalForm,
    coords: SolutionVector,
    verification: VerificationReport,
}

fn chain(a: ChainArgs) -> Result<Done, Failure> {
    let fc = f_chain_lemma28(&a.t, a.s)?;
    if a.corollary {
        if a.s != 1 {
            return Err(Failure::invalid("DegenerateParameters", "the six-variable equations use s = 1"));
        }
        let solutions = corollary_solutions(&a.t)?
            .into_iter()
            .map(|sol| {
                let coords = if a.out.clear_denominators { sol.cleared } else { sol.point };
                let verification = verify_numeric(&sol.form, &coords, &(0..6).collect::<Vec<_>>())?;
                Ok(CorollaryDoc { equation: sol.equation, form: sol.form, coords, verification })
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        let ok = solutions.iter().all(|s| s.verification.passed());
        let doc = ChainDoc { f_chain: fc, phi_chain: None, cleared_blocks: None, solutions };
        return finish(&doc, ok, &a.out);
    }
    let params = if a.params.is_empty() { fc.default_params() } else { a.params.clone() };
    let pc = thm14_lift(&fc, &a.phi, &params)?;
    let cleared_blocks = a
        .out
        .clear_denominators
        .then(|| pc.blocks.iter().map(|b| SolutionVector(b.coords.clone()).cleared()).collect());
    let ok = pc.holds();
    finish(&ChainDoc { f_chain: fc, phi_chain: Some(pc), cleared_blocks, solutions: Vec::new() }, ok, &a.out)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SolutionFile {
    Bare(SolutionVector),
    Doc(Box<SolveDoc>),
}

fn verify(a: VerifyArgs) -> Result<Done, Failure> {
    let mut doc = match read_json::<SolutionFile>(&a.solution)? {
        SolutionFile::Bare(v) => SolveDoc { coords: Some(v), ..Default::default() },
        SolutionFile::Doc(d) => *d,
    };
    if let Some(path) = &a.form {
        doc.form = Some(read_json(path)?);
    }
    let mut reports = Vec::new();
    if let Some(coords) = &doc.coords {
        let form = doc.form.as_ref().ok_or_else(|| Failure::invalid("MissingForm", "no form given"))?;
        reports.push(verify_numeric(form, coords, &a.required_nonzero)?);
    }
    if let Some(ps) = &doc.parametric {
        reports.push(symbolic_report(doc.form.as_ref(), doc.coefficients.as_deref(), ps)?);
    }
    if reports.is_empty() {
        return Err(Failure::invalid("MissingSolution", "solution file has no coords or parametric solution"));
    }
    let ok = reports.iter().all(VerificationReport::passed);
    done(&serde_json::json!({ "verification": reports }), ok)
}

fn search(s: SearchCommand, exec: Execution, limits: &Limits) -> Result<Done, Failure> {
    match s {
        SearchCommand::Brute { form, height } => {
            let form: DiagonalForm = read_json(&form)?;
            let solutions = brute_force(&form, height, limits, exec)?;
            let ok = !solutions.is_empty();
            done(&serde_json::json!({ "form": form, "height": height, "solutions": solutions }), ok)
        }
        SearchCommand::Chain { phi, m, height } => {
            let chains = chain_search(phi, m, height, limits, exec)?;
            let ok = !chains.is_empty();
            done(&serde_json::json!({ "phi": phi, "m": m, "height": height, "chains": chains }), ok)
        }
        SearchCommand::Splitting {
            family,
            signature,
            max_exponent,
            max_coeff,
            max_denominator,
            no_binomials,
            non_homogeneous,
        } => {
            let bounds = SearchBounds {
                max_exponent,
                max_coeff,
                max_denominator,
                binomials: !no_binomials,
                homogeneous_only: !non_homogeneous,
            };
            let n_poly = family.value(&MultiPoly::var("a"), &MultiPoly::var("b"));
            match splitting_search(&n_poly, &signature, &bounds, exec) {
                Some(id) => done(&id, true),
                None => Err(Failure::unverified("NotFound", "no splitting identity within the bounds")),
            }
        }
        SearchCommand::Congruent { n, bound } => {
            limits.check(bound)?;
            match congruent_check_small(n, bound, exec) {
                Some(cert) => done(&cert, true),
                None => Err(Failure::unverified("NotFound", format!("no certificate for n = {n} with y <= {bound}"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("qf").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn congruent_command() {
        let (code, out) = call(&["congruent", "--family", "i", "--a", "1", "--b", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, serde_json::json!({"n":"5","x":"41","y":"12","z":"49","t":"31"}));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["congruent", "--bogus"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["congruent", "--family", "iii", "--a", "1", "--b", "2"]).0, 2);
    }

    #[test]
    fn error_kinds() {
        assert_eq!(kind_of(&crate::varieties::VarietyError::UnresolvedSplitting), "UnresolvedSplitting");
        assert_eq!(
            kind_of(&crate::surfaces::SurfaceError::Curve(crate::elliptic::CurveError::TorsionPoint)),
            "TorsionPoint"
        );
        assert_eq!(
            kind_of(&crate::congruent::CongruentError::DegenerateParameters("a (b) C".into())),
            "DegenerateParameters"
        );
    }

    #[test]
    fn solve_lemma28() {
        let (code, out) = call(&["solve", "--equation", "lemma28", "--s", "2", "--t", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["coords"], serde_json::json!(["1", "2", "5/2", "-3/2"]));
    }

    #[test]
    fn printed_equation_unresolved() {
        let (code, out) = call(&["solve", "--equation", "eq20"]);
        assert_eq!(code, 1);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"], "UnresolvedSplitting");
    }
}
