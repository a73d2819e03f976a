//! Renderers turning library results into text, JSON, or LaTeX documents.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use equimatch::formulas::{Ambient, ExpansionResult};
use equimatch::newton::PolytopeSpec;
use equimatch::polyring::{ExponentVector, Family, Polynomial};
use equimatch::verify::SuiteReport;

use crate::args::FormatArg;

/// One polynomial in the requested format.
pub fn polynomial_document(poly: &Polynomial, format: FormatArg) -> String {
    match format {
        FormatArg::Text => poly.to_string(),
        FormatArg::Json => compact(polynomial_to_json(poly)),
        FormatArg::Latex => latex_polynomial(poly),
    }
}

fn compact(value: Value) -> String {
    serde_json::to_string(&value).expect("plain JSON value")
}

/// LaTeX subscript/superscript: braces only when needed (two digits up).
fn latex_script(mark: char, value: u32) -> String {
    if value < 10 {
        format!("{mark}{value}")
    } else {
        format!("{mark}{{{value}}}")
    }
}

fn latex_stem(family: Family) -> &'static str {
    match family {
        Family::T => "t",
        Family::Beta => "\\beta",
    }
}

fn latex_monomial(family: Family, exps: &ExponentVector) -> String {
    let mut out = String::new();
    for (index, exp) in exps.entries() {
        out.push_str(latex_stem(family));
        out.push_str(&latex_script('_', index));
        if exp > 1 {
            out.push_str(&latex_script('^', exp));
        }
    }
    out
}

/// LaTeX source for a polynomial, terms in the family's display order.
pub fn latex_polynomial(poly: &Polynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, (exps, coeff)) in poly.ordered_terms().into_iter().enumerate() {
        let magnitude = coeff.abs();
        if pos == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if exps.is_unit() {
            out.push_str(&magnitude.to_string());
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push_str(&latex_monomial(poly.family(), exps));
    }
    out
}

/// JSON value for a polynomial: coefficients as decimal strings (exact
/// at any size), terms in the family's display order, exponent keys
/// ascending in the variable index.
pub fn polynomial_to_json(poly: &Polynomial) -> Value {
    let terms: Vec<Value> = poly
        .ordered_terms()
        .into_iter()
        .map(|(exps, coeff)| {
            let mut exp_map = Map::new();
            for (index, exp) in exps.entries() {
                exp_map.insert(index.to_string(), json!(exp));
            }
            let mut term = Map::new();
            term.insert("coeff".to_string(), json!(coeff.to_string()));
            term.insert("exps".to_string(), Value::Object(exp_map));
            Value::Object(term)
        })
        .collect();
    json!({ "family": poly.family().stem(), "terms": terms })
}

/// Inverse of [`polynomial_to_json`] (accepts any term order).
pub fn parse_polynomial(text: &str) -> Result<Polynomial, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let family = match value.get("family").and_then(Value::as_str) {
        Some("t") => Family::T,
        Some("beta") => Family::Beta,
        other => return Err(format!("unknown family {other:?}")),
    };
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or("missing terms array")?;
    let mut poly = Polynomial::zero(family);
    for term in terms {
        let coeff: BigInt = term
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or("missing coeff string")?
            .parse()
            .map_err(|e| format!("bad coefficient: {e}"))?;
        let exps = term
            .get("exps")
            .and_then(Value::as_object)
            .ok_or("missing exps object")?;
        let mut entries = Vec::new();
        for (key, exp) in exps {
            let index: u32 = key.parse().map_err(|e| format!("bad index {key}: {e}"))?;
            let exp = exp
                .as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or(format!("bad exponent for index {key}"))?;
            entries.push((index, exp));
        }
        poly.add_assign_term(ExponentVector::new(entries), coeff);
    }
    Ok(poly)
}

fn class_term(coeff: &Polynomial, k: u32, format: FormatArg) -> String {
    let sigma = match format {
        FormatArg::Latex => format!("\\sigma{}", latex_script('_', k)),
        _ => format!("sigma_{k}"),
    };
    if coeff == &Polynomial::one(coeff.family()) {
        return sigma;
    }
    let rendered = match format {
        FormatArg::Latex => format!("({})", latex_polynomial(coeff)),
        _ => format!("({coeff})*"),
    };
    format!("{rendered}{sigma}")
}

/// A product expansion in the requested format; classes are listed from
/// the top class down.
pub fn expansion_document(expansion: &ExpansionResult, format: FormatArg) -> String {
    let mut classes: Vec<_> = expansion.classes().collect();
    classes.reverse();
    if format == FormatArg::Json {
        let (i, j) = expansion.factors();
        let n = match expansion.ambient() {
            Ambient::Finite(n) => json!(n),
            Ambient::Infinite => Value::Null,
        };
        let entries: Vec<Value> = classes
            .iter()
            .map(|&(k, coeff)| json!({ "k": k, "coefficient": polynomial_to_json(coeff) }))
            .collect();
        return compact(json!({
            "i": i,
            "j": j,
            "n": n,
            "family": expansion.family().stem(),
            "classes": entries,
        }));
    }
    if classes.is_empty() {
        return "0".to_string();
    }
    classes
        .iter()
        .map(|&(k, coeff)| class_term(coeff, k, format))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn dense_tuple(point: &ExponentVector, dims: u32, separator: &str) -> String {
    let coords: Vec<String> = point
        .to_dense(dims)
        .into_iter()
        .map(|x| x.to_string())
        .collect();
    format!("({})", coords.join(separator))
}

/// Lattice-point listing of a polytope in the requested format.
pub fn polytope_document(
    spec: &PolytopeSpec,
    points: &[ExponentVector],
    format: FormatArg,
) -> String {
    let dims = spec.dimension();
    match format {
        FormatArg::Text => points
            .iter()
            .map(|p| dense_tuple(p, dims, ", "))
            .collect::<Vec<_>>()
            .join("\n"),
        FormatArg::Latex => {
            let tuples: Vec<String> = points.iter().map(|p| dense_tuple(p, dims, ",")).collect();
            format!("\\{{{}\\}}", tuples.join(", "))
        }
        FormatArg::Json => {
            let (i, j, k) = spec.indices();
            let point_lists: Vec<Vec<u32>> = points.iter().map(|p| p.to_dense(dims)).collect();
            compact(json!({ "i": i, "j": j, "k": k, "points": point_lists }))
        }
    }
}

fn bounds_summary(report: &SuiteReport) -> String {
    let mut out = format!("max_ij={}", report.bounds.max_ij);
    if report.bounds.max_scale > 1 {
        out.push_str(&format!(", max_scale={}", report.bounds.max_scale));
    }
    if report.bounds.ambient_dim > 0 {
        out.push_str(&format!(", ambient=P^{}", report.bounds.ambient_dim));
    }
    out
}

/// Pass/fail report over one or more suite runs. Text and JSON only;
/// failed instances carry their witnesses.
pub fn verify_document(reports: &[SuiteReport], format: FormatArg) -> String {
    if format == FormatArg::Json {
        let entries: Vec<Value> = reports
            .iter()
            .map(|report| {
                let failures: Vec<Value> = report
                    .failures()
                    .map(|f| json!({ "key": f.key, "witness": f.witness }))
                    .collect();
                json!({
                    "suite": report.suite.name(),
                    "bounds": {
                        "max_ij": report.bounds.max_ij,
                        "max_scale": report.bounds.max_scale,
                        "ambient_dim": report.bounds.ambient_dim,
                    },
                    "passed": report.num_passed(),
                    "total": report.len(),
                    "failures": failures,
                })
            })
            .collect();
        let passed = reports.iter().all(|r| r.passed());
        return compact(json!({ "passed": passed, "reports": entries }));
    }

    let mut lines = Vec::new();
    for report in reports {
        lines.push(format!(
            "suite {}: {}/{} instances passed ({})",
            report.suite.name(),
            report.num_passed(),
            report.len(),
            bounds_summary(report),
        ));
        for failure in report.failures() {
            let witness = failure.witness.as_deref().unwrap_or("no witness");
            lines.push(format!("  FAIL {}: {witness}", failure.key));
        }
    }
    let total: usize = reports.iter().map(|r| r.len()).sum();
    let passed: usize = reports.iter().map(|r| r.num_passed()).sum();
    if passed == total {
        lines.push(format!("all {total} instances passed"));
    } else {
        lines.push(format!("{} of {total} instances FAILED", total - passed));
    }
    lines.join("\n")
}
