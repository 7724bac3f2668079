use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::output::{report_json, scalar_json, OutputDocument, Status};
use crate::exactalg::{AlgError, Polynomial, Scalar};
use crate::geometry::{
    classical_checks, classical_presentation_with_budget, determinant, factored_classical_strings, integrate,
    pairing_matrix, segre_integral_oracle, to_bundle, Coords, CurveClass, GeometryError, GeometryParams,
};
use crate::groebner::{Budget, GroebnerError};
use crate::quantum::{
    factored_quantum_strings, gw_invariant, quantum_presentation_with_budget, s3_symmetry_check, verify_lemma_suite,
    verify_main_theorem, GWQuery,
};
use crate::report::Report;

enum Failure {
    Usage(String),
    Check(String),
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Internal(_) => Failure::Check(e.to_string()),
            GeometryError::Usage(_)
            | GeometryError::Algebra(_)
            | GeometryError::Groebner(GroebnerError::BudgetExceeded(_)) => Failure::Usage(e.to_string()),
            GeometryError::Groebner(_) => Failure::Check(e.to_string()),
        }
    }
}

impl From<AlgError> for Failure {
    fn from(e: AlgError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn finish(command: &str, request: Map<String, Value>, r: Result<OutputDocument, Failure>) -> OutputDocument {
    match r {
        Ok(doc) => doc,
        Err(Failure::Usage(msg)) => OutputDocument::usage_error(command, request, msg),
        Err(Failure::Check(msg)) => OutputDocument::check_failed(command, request, msg),
    }
}

fn params_of(m: u32, p: u32) -> Result<GeometryParams, Failure> {
    Ok(GeometryParams::new(m, p)?)
}

fn request(m: u32, p: u32) -> Map<String, Value> {
    let mut r = Map::new();
    r.insert("m".into(), json!(m));
    r.insert("p".into(), json!(p));
    r
}

pub fn cmd_present(m: u32, p: u32, coords: Coords, quantum: bool, at_q_one: bool, budget: Budget) -> OutputDocument {
    let mut req = request(m, p);
    req.insert("coords".into(), json!(coords.name()));
    req.insert("quantum".into(), json!(quantum));
    req.insert("at_q_one".into(), json!(at_q_one));
    let run = || -> Result<OutputDocument, Failure> {
        if at_q_one && !quantum {
            return Err(Failure::Usage("--at-q-one requires --quantum".into()));
        }
        let params = params_of(m, p)?;
        let vars = params.vars(coords);
        let (relations, staircase, factored) = if quantum {
            let qp = quantum_presentation_with_budget(&params, coords, budget)?;
            let factored = factored_quantum_strings(&params, coords, at_q_one);
            if at_q_one {
                let one = Scalar::one();
                let rels = qp.specialize(&one, &one);
                let ring = crate::geometry::quotient_of(&rels, budget)?;
                (rels.to_vec(), ring.basis_elements(), factored)
            } else {
                (qp.relations.to_vec(), qp.quotient.basis_elements(), factored)
            }
        } else {
            let pres = classical_presentation_with_budget(&params, coords, budget)?;
            (pres.relations.to_vec(), pres.quotient.basis_elements(), factored_classical_strings(&params, coords))
        };
        let mut doc = OutputDocument::new("present", req.clone());
        for (f, rel) in factored.iter().zip(&relations) {
            if Polynomial::parse(&vars, f)? != *rel {
                doc.status = Status::CheckFailed;
                doc.warnings.push(format!("factored form `{f}` does not expand to `{rel}`"));
            }
        }
        if let Some(w) = params.warning() {
            if quantum {
                doc.warnings.push(w);
            }
        }
        let rel_strings: Vec<String> = relations.iter().map(|r| r.to_string()).collect();
        let basis: Vec<String> = staircase.iter().map(|b| b.to_string()).collect();
        doc.payload = json!({
            "n": params.n,
            "r": params.r,
            "in_range": params.in_range,
            "certified": quantum && params.in_range,
            "relations": rel_strings,
            "relations_factored": factored,
            "staircase": basis,
            "rank": basis.len(),
            "expected_rank": params.expected_rank(),
        });
        let kind = if quantum { "quantum" } else { "classical" };
        doc.text
            .push(format!("{kind} presentation, {coords} coordinates, m={m} p={p} (n={}, r={})", params.n, params.r));
        for (c, f) in rel_strings.iter().zip(&factored) {
            doc.text.push(format!("  {f}  =  {c}"));
        }
        doc.text.push(format!("rank {} basis: {}", basis.len(), basis.join(", ")));
        Ok(doc)
    };
    finish("present", req.clone(), run())
}

/// Parses `a,b`.
pub fn parse_class(s: &str) -> Result<CurveClass, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("curve class `{s}` is not of the form a,b"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad coefficient `{a}`"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad coefficient `{b}`"))?;
    Ok(CurveClass::new(a, b))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_gw(
    m: u32,
    p: u32,
    class: CurveClass,
    alpha: &str,
    beta: &str,
    gamma: &str,
    coords: Coords,
    budget: Budget,
) -> OutputDocument {
    let mut req = request(m, p);
    req.insert("class".into(), json!([class.a, class.b]));
    req.insert("alpha".into(), json!(alpha));
    req.insert("beta".into(), json!(beta));
    req.insert("gamma".into(), json!(gamma));
    req.insert("coords".into(), json!(coords.name()));
    let run = || -> Result<OutputDocument, Failure> {
        let params = params_of(m, p)?;
        let vars = params.vars(coords);
        let q = GWQuery {
            class,
            alpha: Polynomial::parse(&vars, alpha)?,
            beta: Polynomial::parse(&vars, beta)?,
            gamma: Polynomial::parse(&vars, gamma)?,
        };
        let qp = quantum_presentation_with_budget(&params, Coords::Bundle, budget)?;
        let v = gw_invariant(&q, &qp)?;
        let mut doc = OutputDocument::new("gw", req.clone());
        if let Some(w) = params.warning() {
            doc.warnings.push(w);
        }
        let reason = v.note.as_ref().map(|_| "degree");
        doc.payload = json!({
            "value": scalar_json(&Scalar::from_bigint(v.value.clone())),
            "d": v.d,
            "admissible": v.admissible,
            "reason": reason,
            "note": v.note,
            "certified": params.in_range,
            "formal": !params.in_range,
        });
        doc.text.push(format!("I_{}({alpha}, {beta}, {gamma}) = {}", class, v.value));
        doc.text.push(format!("d = deg(alpha) + deg(beta) + K.A = {}", v.d));
        if let Some(n) = &v.note {
            doc.text.push(format!("zero by {n}"));
        }
        if !params.in_range {
            doc.text.push("formal value (outside 2p+3 < m)".into());
        }
        Ok(doc)
    };
    finish("gw", req.clone(), run())
}

/// Instance list for `verify`: a single pair, or inclusive grids.
#[derive(Clone, Debug)]
pub enum VerifyTarget {
    Single(u32, u32),
    Grid { m: (u32, u32), p: (u32, u32) },
}

/// Parses `a..b` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let bad = || format!("range `{s}` is not of the form a..b");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn verify_instance(
    params: &GeometryParams,
    b_max: u32,
    symmetry: bool,
    budget: Budget,
) -> Result<Report, GeometryError> {
    // budget preflight for every presentation the suites build
    classical_presentation_with_budget(params, Coords::Bundle, budget)?;
    classical_presentation_with_budget(params, Coords::Blowup, budget)?;
    quantum_presentation_with_budget(params, Coords::Bundle, budget)?;
    quantum_presentation_with_budget(params, Coords::Blowup, budget)?;

    let mut report = classical_checks(params)?;
    report.extend(verify_lemma_suite(params, b_max)?);
    report.extend(verify_main_theorem(params)?);
    if symmetry {
        let qp = quantum_presentation_with_budget(params, Coords::Bundle, budget)?;
        report.extend(s3_symmetry_check(&qp)?);
    }
    Ok(report)
}

pub fn cmd_verify(target: VerifyTarget, b_max: u32, symmetry: bool, budget: Budget) -> OutputDocument {
    let mut req = Map::new();
    match &target {
        VerifyTarget::Single(m, p) => {
            req.insert("m".into(), json!(m));
            req.insert("p".into(), json!(p));
        }
        VerifyTarget::Grid { m, p } => {
            req.insert("grid_m".into(), json!([m.0, m.1]));
            req.insert("grid_p".into(), json!([p.0, p.1]));
        }
    }
    req.insert("b_max".into(), json!(b_max));
    req.insert("symmetry".into(), json!(symmetry));
    let run = || -> Result<OutputDocument, Failure> {
        if b_max < 1 {
            return Err(Failure::Usage("--b-max must be at least 1".into()));
        }
        let mut skipped = Vec::new();
        let instances: Vec<GeometryParams> = match target {
            VerifyTarget::Single(m, p) => vec![params_of(m, p)?],
            VerifyTarget::Grid { m, p } => {
                let mut v = Vec::new();
                for mm in m.0..=m.1 {
                    for pp in p.0..=p.1 {
                        match GeometryParams::new(mm, pp) {
                            Ok(x) => v.push(x),
                            Err(_) => skipped.push(json!([mm, pp])),
                        }
                    }
                }
                v
            }
        };
        // rayon keeps the input order in `collect`
        let results: Vec<(GeometryParams, Result<Report, GeometryError>)> =
            instances.par_iter().map(|pr| (*pr, verify_instance(pr, b_max, symmetry, budget))).collect();
        let mut doc = OutputDocument::new("verify", req.clone());
        let mut all_passed = true;
        let mut items = Vec::new();
        for (pr, res) in results {
            let report = match res {
                Ok(r) => r,
                Err(e) => match Failure::from(e) {
                    Failure::Usage(msg) => return Err(Failure::Usage(msg)),
                    Failure::Check(msg) => {
                        let mut r = Report::new();
                        r.check("instance evaluation", false, msg);
                        r
                    }
                },
            };
            all_passed &= report.passed();
            let quantum = if pr.in_range { "quantum certified" } else { "quantum skipped (2p+3 >= m)" };
            let fails = report.failures().count();
            doc.text.push(format!(
                "m={} p={} (n={}, r={}): {} checks, {} failed, {quantum}",
                pr.m,
                pr.p,
                pr.n,
                pr.r,
                report.checks.len(),
                fails
            ));
            doc.text.push(report.to_string().trim_end().to_string());
            let mut item = report_json(&report);
            let obj = item.as_object_mut().expect("object");
            obj.insert("m".into(), json!(pr.m));
            obj.insert("p".into(), json!(pr.p));
            obj.insert("n".into(), json!(pr.n));
            obj.insert("r".into(), json!(pr.r));
            obj.insert("in_range".into(), json!(pr.in_range));
            items.push(item);
        }
        if !all_passed {
            doc.status = Status::CheckFailed;
        }
        doc.payload = json!({
            "instances": items,
            "instance_count": items.len(),
            "all_passed": all_passed,
            "invalid_pairs_skipped": skipped,
        });
        Ok(doc)
    };
    finish("verify", req.clone(), run())
}

pub fn cmd_integrate(m: u32, p: u32, class_expr: &str, coords: Coords, budget: Budget) -> OutputDocument {
    let mut req = request(m, p);
    req.insert("class".into(), json!(class_expr));
    req.insert("coords".into(), json!(coords.name()));
    let run = || -> Result<OutputDocument, Failure> {
        let params = params_of(m, p)?;
        let f = Polynomial::parse(&params.vars(coords), class_expr)?;
        if !f.is_parameter_free() {
            return Err(Failure::Usage("cannot integrate a class involving q1 or q2".into()));
        }
        let f = to_bundle(&f)?;
        let pres = classical_presentation_with_budget(&params, Coords::Bundle, budget)?;
        let g = integrate(&f, &pres)?;
        // oracle: linear in terms, zero off the top degree
        let mut o = Scalar::zero();
        for (mono, c) in f.terms() {
            let (px, ph) = (mono.exp(0), mono.exp(1));
            if px + ph == params.dim() {
                o = &o + &(c * &segre_integral_oracle(&params, ph, px)?);
            }
        }
        let equal = g == o;
        let mut doc = OutputDocument::new("integrate", req.clone());
        if !equal {
            doc.status = Status::CheckFailed;
        }
        doc.payload = json!({
            "class_bundle": f.to_string(),
            "groebner": scalar_json(&g),
            "oracle": scalar_json(&o),
            "equal": equal,
        });
        doc.text.push(format!("integral of {f}: groebner {g}, oracle {o}, equal {equal}"));
        Ok(doc)
    };
    finish("integrate", req.clone(), run())
}

pub fn cmd_basis(m: u32, p: u32, coords: Coords, budget: Budget) -> OutputDocument {
    let mut req = request(m, p);
    req.insert("coords".into(), json!(coords.name()));
    let run = || -> Result<OutputDocument, Failure> {
        let params = params_of(m, p)?;
        let pres = classical_presentation_with_budget(&params, coords, budget)?;
        let bundle = classical_presentation_with_budget(&params, Coords::Bundle, budget)?;
        let basis = pres.quotient.basis_elements();
        let matrix: Vec<Vec<Scalar>> = if coords == Coords::Bundle {
            pairing_matrix(&bundle)?
        } else {
            basis
                .iter()
                .map(|a| basis.iter().map(|b| integrate(&(a * b), &bundle)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<_, _>>()?
        };
        let det = determinant(&matrix);
        let names: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
        let mut doc = OutputDocument::new("basis", req.clone());
        doc.payload = json!({
            "staircase": names,
            "rank": names.len(),
            "pairing_matrix": matrix.iter().map(|row| row.iter().map(scalar_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "determinant": scalar_json(&det),
        });
        doc.text.push(format!("rank {} ({coords} coordinates)", names.len()));
        for (name, row) in names.iter().zip(&matrix) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            doc.text.push(format!("  {name:>12} | {}", cells.join(" ")));
        }
        doc.text.push(format!("det = {det}"));
        Ok(doc)
    };
    finish("basis", req.clone(), run())
}
