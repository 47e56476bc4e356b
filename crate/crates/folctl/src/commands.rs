//! One function per subcommand, each returning a JSON payload and whether
//! every verdict in it holds.

use folcore::blowup::{blowup_chart, is_sigma_related};
use folcore::brackets::{
    almost_lie_algebroid, bracket, extend_to_two_algebroid, higher_jacobi_residual, jacobiator, koszul_linfty,
    GradedElement, KoszulLinfty,
};
use folcore::catalog::{make_example, ExampleKind};
use folcore::foliation::{check_involutive, point_invariants, FoliationPresentation, Involutivity};
use folcore::isotropy::{isotropy_lie_algebra, linear_isotropy_at, rank_dimension_report};
use folcore::module::PolyMatrix;
use folcore::poly::{fmt_rational, Polynomial};
use folcore::resolution::{
    alternating_rank_sum, geometric_resolution, verify_exactness, ExactnessWitness, GeometricResolution,
};
use folcore::Rational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::file::{check_vars, field_record, FoliationFile};
use crate::parse::{identifiers, parse_polynomial, PolyError};

/// Payload plus the overall verdict (`false` maps to exit code 1).
pub struct Outcome {
    pub payload: Value,
    pub ok: bool,
}

fn poly(p: &Polynomial, vars: &[String]) -> Value {
    Value::String(p.to_string_with(vars))
}

fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|q| Value::String(fmt_rational(q))).collect())
}

fn matrix(m: &PolyMatrix, vars: &[String]) -> Value {
    Value::Array(
        (0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| poly(m.get(i, j), vars)).collect())).collect(),
    )
}

pub fn parse_point(text: &str, n: usize) -> Result<Vec<Rational>, CliError> {
    let coords: Vec<&str> = text.split(',').map(str::trim).collect();
    if coords.len() != n {
        return Err(CliError::Usage(format!("--at expects {} coordinates, got {}", n, coords.len())));
    }
    coords
        .iter()
        .map(|c| {
            let q: Rational = c.parse().map_err(|_| CliError::Usage(format!("'{}' is not a rational number", c)))?;
            Ok(q)
        })
        .collect()
}

pub fn check(f: &FoliationPresentation) -> Outcome {
    let vars = f.vars();
    match check_involutive(f) {
        Involutivity::Involutive(c) => {
            let r = f.generator_count();
            let mut entries = Vec::new();
            for i in 0..r {
                for j in i + 1..r {
                    for k in 0..r {
                        let p = c.get(i, j, k);
                        if !p.is_zero() {
                            entries.push(json!({ "i": i + 1, "j": j + 1, "k": k + 1, "value": poly(p, vars) }));
                        }
                    }
                }
            }
            Outcome { payload: json!({ "involutive": true, "christoffel": entries }), ok: true }
        }
        Involutivity::Counterexample { i, j, residual } => Outcome {
            payload: json!({
                "involutive": false,
                "witness_pair": [i + 1, j + 1],
                "residual": field_record(&residual, vars),
            }),
            ok: false,
        },
    }
}

pub fn point(f: &FoliationPresentation, m: &[Rational]) -> Result<Outcome, CliError> {
    let inv = point_invariants(f, m)?;
    let report = rank_dimension_report(f, m)?;
    let iso = isotropy_lie_algebra(f, m)?;
    let lin = linear_isotropy_at(f, m)?;
    let mut constants = Vec::new();
    for a in 0..iso.dim {
        for b in a + 1..iso.dim {
            for c in 0..iso.dim {
                let k = iso.constant(a, b, c);
                if !k.is_zero() {
                    constants.push(json!([a + 1, b + 1, c + 1, fmt_rational(k)]));
                }
            }
        }
    }
    let ok = report.identity_holds && iso.jacobi_verified;
    Ok(Outcome {
        payload: json!({
            "point": rationals(m),
            "rank": report.rank,
            "tangent_dim": report.tangent_dim,
            "isotropy_dim": report.isotropy_dim,
            "identity": report.identity_holds,
            "generic_rank": inv.generic_rank,
            "regular": inv.is_regular,
            "tangent_basis": inv.tangent_basis.iter().map(|v| rationals(v)).collect::<Vec<_>>(),
            "isotropy": {
                "basis": iso.basis_labels,
                "structure_constants": constants,
                "jacobi": iso.jacobi_verified,
            },
            "linear_isotropy_dim": lin.dim(),
        }),
        ok,
    })
}

pub fn resolve(f: &FoliationPresentation, max_length: usize) -> Result<Outcome, CliError> {
    let r = geometric_resolution(f, max_length)?;
    Ok(resolve_payload(&r))
}

fn resolve_payload(r: &GeometricResolution) -> Outcome {
    let vars = r.foliation.vars();
    let alt = alternating_rank_sum(r).ok();
    let verdict = verify_exactness(r);
    let witness = match &verdict.witness {
        None => Value::Null,
        Some(ExactnessWitness::NonzeroComposite { stage }) => json!({ "nonzero_composite": stage + 1 }),
        Some(ExactnessWitness::KernelNotCovered { stage, element }) => json!({
            "kernel_not_covered": stage + 1,
            "element": element.components().iter().map(|p| poly(p, vars)).collect::<Vec<_>>(),
        }),
    };
    let differentials: Vec<Value> = (2..=r.len()).filter_map(|i| r.differential(i)).map(|d| matrix(d, vars)).collect();
    let ok = verdict.exact && alt.as_ref().is_none_or(|a| a.matches);
    Outcome {
        payload: json!({
            "ranks": r.ranks(),
            "truncated": r.truncated,
            "alt_sum": alt.as_ref().map(|a| a.sum),
            "generic_rank": folcore::foliation::generic_rank(&r.foliation),
            "alt_sum_matches": alt.as_ref().map(|a| a.matches),
            "exact": verdict.exact,
            "witness": witness,
            "differentials": differentials,
        }),
        ok,
    }
}

pub fn algebroid(f: &FoliationPresentation) -> Result<Outcome, CliError> {
    let vars = f.vars();
    let a = almost_lie_algebroid(f)?;
    let r = a.rank();
    let mut entries = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            for k in 0..r {
                let p = a.bracket.get(i, j, k);
                if !p.is_zero() {
                    entries.push(json!({ "i": i + 1, "j": j + 1, "k": k + 1, "value": poly(p, vars) }));
                }
            }
        }
    }
    let anchor_failure = a.anchor_condition_failure();
    let (mut nonzero, mut rho_vanishes) = (0usize, true);
    for i in 0..r {
        for j in i + 1..r {
            for k in j + 1..r {
                let jac = jacobiator(&a, i, j, k)?;
                if jac.iter().any(|p| !p.is_zero()) {
                    nonzero += 1;
                }
                rho_vanishes &= a.anchor(&jac).is_zero();
            }
        }
    }
    let ok = anchor_failure.is_none() && rho_vanishes;
    Ok(Outcome {
        payload: json!({
            "rank": r,
            "bracket": entries,
            "anchor_condition": anchor_failure.is_none(),
            "anchor_failure": anchor_failure.map(|(i, j)| [i + 1, j + 1]),
            "jacobiator_nonzero_triples": nonzero,
            "jacobiator_rho_vanishes": rho_vanishes,
        }),
        ok,
    })
}

pub fn two_algebroid(f: &FoliationPresentation) -> Result<Outcome, CliError> {
    let vars = f.vars();
    let r = geometric_resolution(f, folcore::resolution::default_max_len(f))?;
    let a = almost_lie_algebroid(f)?;
    let two = extend_to_two_algebroid(f, &r, &a)?;
    let (n, n2) = (two.rank(), two.rank2());
    let mut nabla = Vec::new();
    for i in 0..n {
        for b in 0..n2 {
            for c in 0..n2 {
                let p = &two.nabla[(i * n2 + b) * n2 + c];
                if !p.is_zero() {
                    nabla.push(json!({ "i": i + 1, "b": b + 1, "c": c + 1, "value": poly(p, vars) }));
                }
            }
        }
    }
    let mut three = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for c in 0..n2 {
                    let p = &two.three_bracket[((i * n + j) * n + k) * n2 + c];
                    if !p.is_zero() {
                        three.push(json!({ "i": i + 1, "j": j + 1, "k": k + 1, "c": c + 1, "value": poly(p, vars) }));
                    }
                }
            }
        }
    }
    let v = two.verdicts;
    Ok(Outcome {
        payload: json!({
            "ranks": [n, n2],
            "differential": matrix(two.differential(), vars),
            "nabla": nabla,
            "three_bracket": three,
            "verdicts": {
                "leibniz": v.leibniz,
                "differential": v.differential,
                "jacobiator": v.jacobiator,
                "mixed_jacobi": v.mixed_jacobi,
            },
        }),
        ok: v.all(),
    })
}

/// Upper bound on argument tuples checked per arity.
pub const JACOBI_BUDGET: usize = 5000;

fn graded(e: &GradedElement, vars: &[String]) -> Value {
    json!({
        "degree": e.degree,
        "terms": e
            .combination
            .iter()
            .map(|(idx, p)| json!({ "index": idx.iter().map(|i| i + 1).collect::<Vec<_>>(), "coefficient": poly(p, vars) }))
            .collect::<Vec<_>>(),
    })
}

/// Nondecreasing index tuples of length `n` over `0..len`, at most `budget` of them.
fn multisets(len: usize, n: usize, budget: usize) -> (Vec<Vec<usize>>, bool) {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    if len == 0 {
        return (out, true);
    }
    loop {
        if out.len() == budget {
            return (out, false);
        }
        out.push(cur.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return (out, true);
            }
            k -= 1;
            if cur[k] + 1 < len {
                let v = cur[k] + 1;
                for c in cur[k..].iter_mut() {
                    *c = v;
                }
                break;
            }
        }
    }
}

pub fn koszul_vars(phi: &str, vars: Option<&str>) -> Result<Vec<String>, CliError> {
    let vars: Vec<String> = match vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
        None => identifiers(phi),
    };
    check_vars(&vars)?;
    Ok(vars)
}

pub fn koszul(phi_text: &str, vars: &[String], max_arity: usize) -> Result<Outcome, CliError> {
    let phi = parse_polynomial(phi_text, vars).map_err(|e| match e {
        PolyError::Syntax { line, column, message } => {
            CliError::Parse { generator: 0, component: "phi".into(), line, column, message }
        }
        PolyError::UnknownVariable { name, .. } => {
            CliError::UnknownVariable { name, generator: 0, component: Some("phi".into()) }
        }
    })?;
    let k = koszul_linfty(&phi, max_arity)?;
    let d = k.dimension();
    let pairs = k.basis(1);
    let top = k.basis_element((0..d).collect());
    let anchors: Vec<Value> = pairs
        .iter()
        .map(|p| json!({ "index": [p[0] + 1, p[1] + 1], "anchor": field_record(&k.anchor_of(p[0], p[1]), vars) }))
        .collect();
    let mut spot = vec![
        json!({ "arity": 1, "arguments": [graded(&top, vars)], "value": graded(&bracket(&k, std::slice::from_ref(&top)), vars) }),
    ];
    for n in 2..=max_arity.min(pairs.len()) {
        let args: Vec<GradedElement> = pairs[..n].iter().map(|p| k.basis_element(p.clone())).collect();
        spot.push(json!({
            "arity": n,
            "arguments": args.iter().map(|a| graded(a, vars)).collect::<Vec<_>>(),
            "value": graded(&bracket(&k, &args), vars),
        }));
    }
    let (jacobi, ok) = jacobi_verdicts(&k)?;
    Ok(Outcome {
        payload: json!({
            "vars": vars,
            "phi": poly(&phi, vars),
            "dimension": d,
            "max_arity": max_arity,
            "anchors": anchors,
            "brackets": spot,
            "higher_jacobi": jacobi,
        }),
        ok,
    })
}

fn jacobi_verdicts(k: &KoszulLinfty) -> Result<(Vec<Value>, bool), CliError> {
    let basis: Vec<GradedElement> = (1..k.dimension()).flat_map(|i| k.basis(i)).map(|b| k.basis_element(b)).collect();
    let mut out = Vec::new();
    let mut all = true;
    for n in 1..=k.max_arity() {
        let (tuples, exhaustive) = multisets(basis.len(), n, JACOBI_BUDGET);
        let mut holds = true;
        for t in &tuples {
            let args: Vec<GradedElement> = t.iter().map(|&b| basis[b].clone()).collect();
            if !higher_jacobi_residual(k, &args, n)?.is_zero() {
                holds = false;
                break;
            }
        }
        all &= holds;
        out.push(json!({ "n": n, "checked": tuples.len(), "exhaustive": exhaustive, "holds": holds }));
    }
    Ok((out, all))
}

pub fn blowup(f: &FoliationPresentation, chart: Option<usize>) -> Result<Outcome, CliError> {
    let charts: Vec<usize> = match chart {
        Some(c) => vec![c],
        None => (1..=f.nvars()).collect(),
    };
    let vars = f.vars();
    let mut ok = true;
    let mut out = Vec::new();
    for c in charts {
        let b = blowup_chart(f, c)?;
        let mut related = true;
        for (z, x) in b.generators.iter().zip(f.generators()) {
            related &= is_sigma_related(z, x, c)?;
        }
        ok &= related && b.involutive;
        out.push(json!({
            "chart": c,
            "generators": b.generators.iter().map(|z| field_record(z, vars)).collect::<Vec<_>>(),
            "sigma_related": related,
            "involutive": b.involutive,
        }));
    }
    Ok(Outcome { payload: json!({ "charts": out }), ok })
}

/// `key=value` pairs separated by commas; list values use `;`.
fn parse_params(text: &str) -> Result<Vec<(String, String)>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| match kv.split_once('=') {
            Some((k, v)) => Ok((k.trim().to_string(), v.trim().to_string())),
            None => Err(CliError::Usage(format!("parameter '{}' is not key=value", kv))),
        })
        .collect()
}

fn param<'a>(params: &'a [(String, String)], key: &str) -> Result<&'a str, CliError> {
    params
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| CliError::Usage(format!("missing parameter '{}'", key)))
}

fn number<T: std::str::FromStr>(params: &[(String, String)], key: &str) -> Result<T, CliError> {
    let v = param(params, key)?;
    v.parse().map_err(|_| CliError::Usage(format!("parameter {}='{}' is not a nonnegative integer", key, v)))
}

fn polys(text: &str, vars: &[String], what: &str) -> Result<Vec<Polynomial>, CliError> {
    text.split(';')
        .map(|s| {
            parse_polynomial(s, vars).map_err(|e| match e {
                PolyError::Syntax { line, column, message } => {
                    CliError::Parse { generator: 0, component: what.into(), line, column, message }
                }
                PolyError::UnknownVariable { name, .. } => {
                    CliError::UnknownVariable { name, generator: 0, component: Some(what.into()) }
                }
            })
        })
        .collect()
}

pub const EXAMPLE_KINDS: [&str; 5] =
    ["vanishing-order", "special-orthogonal", "annihilator", "vanishing-on-ideal", "tangent-to-ideal"];

pub fn example(kind: &str, params: &str) -> Result<FoliationFile, CliError> {
    let params = parse_params(params)?;
    let vars = || -> Result<Vec<String>, CliError> {
        let v: Vec<String> = param(&params, "vars")?.split(';').map(|s| s.trim().to_string()).collect();
        check_vars(&v)?;
        Ok(v)
    };
    let kind = match kind {
        "vanishing-order" => ExampleKind::VanishingOrder { n: number(&params, "n")?, k: number(&params, "k")? },
        "special-orthogonal" => ExampleKind::SpecialOrthogonal { n: number(&params, "n")? },
        "annihilator" => {
            let vars = vars()?;
            let phi = polys(param(&params, "phi")?, &vars, "phi")?.remove(0);
            ExampleKind::AnnihilatorOf { vars, phi }
        }
        "vanishing-on-ideal" => {
            let vars = vars()?;
            let ideal = polys(param(&params, "ideal")?, &vars, "ideal")?;
            ExampleKind::VanishingOnIdeal { vars, ideal }
        }
        "tangent-to-ideal" => {
            let vars = vars()?;
            let ideal = polys(param(&params, "ideal")?, &vars, "ideal")?;
            ExampleKind::TangentToIdeal { vars, ideal }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown example kind '{}' (expected one of {})",
                other,
                EXAMPLE_KINDS.join(", ")
            )))
        }
    };
    Ok(FoliationFile::from_presentation(&make_example(&kind)?))
}
