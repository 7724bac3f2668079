//! Deformed presentations over `Q[q1, q2]`, quantum products by normal form,
//! and extraction of three-point Gromov-Witten invariants.
//!
//! `q1` and `q2` track the curve classes `A1` and `A2`; their weights are
//! `-K.A1 = r` and `-K.A2 = n`, which makes every relation homogeneous. The
//! coefficient of `q1^a q2^b` in a product is the contribution of the class
//! `a A1 + b A2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::exactalg::{Monomial, Polynomial, Scalar, Vars};
use crate::geometry::{
    blowup_gens, bundle_gens, classical_presentation_with_budget, classical_relations, f2_factored, ideals_correspond,
    integrate, power_str, quotient_of, to_bundle, Coords, CurveClass, GeometryError, GeometryParams, Presentation,
};
use crate::groebner::{Budget, QuotientRing};
use crate::report::Report;

/// Deformed relations and their quotient, with the classical ring alongside.
#[derive(Clone, Debug)]
pub struct QuantumPresentation {
    pub params: GeometryParams,
    pub coords: Coords,
    pub relations: [Polynomial; 2],
    pub quotient: QuotientRing,
    /// Classical ring in bundle coordinates, used for integration.
    pub classical: Presentation,
    /// The quantum relations are a theorem only for `2p+3 < m`.
    pub certified: bool,
}

impl QuantumPresentation {
    pub fn vars(&self) -> &Vars {
        self.quotient.vars()
    }

    /// Relations with `q1`, `q2` replaced by constants.
    pub fn specialize(&self, q1: &Scalar, q2: &Scalar) -> [Polynomial; 2] {
        let vars = self.vars().clone();
        let images = [
            Polynomial::var(&vars, vars.name(0)).expect("var"),
            Polynomial::var(&vars, vars.name(1)).expect("var"),
            Polynomial::constant(&vars, q1.clone()),
            Polynomial::constant(&vars, q2.clone()),
        ];
        self.relations.clone().map(|r| r.substitute(&vars, &images).expect("same variable set"))
    }
}

pub(crate) fn deformed_relations(params: &GeometryParams, coords: Coords) -> [Polynomial; 2] {
    let vars = params.vars(coords);
    let q1 = Polynomial::var(&vars, "q1").expect("q1");
    let q2 = Polynomial::var(&vars, "q2").expect("q2");
    match coords {
        Coords::Bundle => {
            let (xi, h) = bundle_gens(&vars);
            let eta = &xi - &h.scale(&Scalar::from_int(2));
            [&h.pow(params.n + 1) - &(&eta * &q2), &f2_factored(params, &vars) - &q1]
        }
        Coords::Blowup => {
            let (k, eta) = blowup_gens(&vars);
            [&(&k - &eta).pow(params.m - params.p) - &(&eta * &q2), &(&k.pow(params.p + 1) * &eta) - &q1]
        }
    }
}

pub fn quantum_presentation(params: &GeometryParams, coords: Coords) -> Result<QuantumPresentation, GeometryError> {
    quantum_presentation_with_budget(params, coords, Budget::default())
}

pub fn quantum_presentation_with_budget(
    params: &GeometryParams,
    coords: Coords,
    budget: Budget,
) -> Result<QuantumPresentation, GeometryError> {
    let relations = deformed_relations(params, coords);
    let expected = [params.n + 1, params.r];
    for (rel, d) in relations.iter().zip(expected) {
        if rel.homogeneous_degree() != Some(d) {
            return Err(GeometryError::Internal(format!("deformed relation {rel} is not homogeneous of degree {d}")));
        }
    }
    let quotient = quotient_of(&relations, budget)?;
    let classical = classical_presentation_with_budget(params, Coords::Bundle, budget)?;
    Ok(QuantumPresentation { params: *params, coords, relations, quotient, classical, certified: params.in_range })
}

fn check_input(x: &Polynomial, qp: &QuantumPresentation) -> Result<(), GeometryError> {
    if !x.same_vars(qp.vars()) {
        return Err(GeometryError::Usage(format!("`{x}` is not in {} coordinates of this instance", qp.coords)));
    }
    if !x.is_parameter_free() {
        return Err(GeometryError::Usage(format!("`{x}` involves q1 or q2")));
    }
    Ok(())
}

/// `x * y` in the deformed ring, as a normal form over the staircase.
pub fn quantum_product(x: &Polynomial, y: &Polynomial, qp: &QuantumPresentation) -> Result<Polynomial, GeometryError> {
    check_input(x, qp)?;
    check_input(y, qp)?;
    Ok(qp.quotient.multiply(x, y))
}

/// `deg x + deg y - (r a + n b)` for homogeneous `x`, `y`.
fn degree_budget(x: &Polynomial, y: &Polynomial, c: CurveClass, params: &GeometryParams) -> Option<i64> {
    let dx = x.homogeneous_degree()? as i64;
    let dy = y.homogeneous_degree()? as i64;
    Some(dx + dy - c.anticanonical_degree(params))
}

/// Coefficient class of `q1^a q2^b` in a normal form.
fn coefficient_of(nf: &Polynomial, a: u32, b: u32) -> Polynomial {
    let key = Monomial::new(vec![0, 0, a, b]);
    nf.split_by_parameters().remove(&key).unwrap_or_else(|| Polynomial::zero(nf.vars()))
}

/// Contribution of the class `a A1 + b A2` to `x * y`.
pub fn contribution_by_class(
    x: &Polynomial,
    y: &Polynomial,
    a: i64,
    b: i64,
    qp: &QuantumPresentation,
) -> Result<Polynomial, GeometryError> {
    if a < 0 || b < 0 {
        return Err(GeometryError::Usage(format!("curve class ({a},{b}) has a negative coefficient")));
    }
    let c = CurveClass::new(a, b);
    if matches!(degree_budget(x, y, c, &qp.params), Some(d) if d < 0) {
        check_input(x, qp)?;
        check_input(y, qp)?;
        return Ok(Polynomial::zero(qp.vars()));
    }
    let nf = quantum_product(x, y, qp)?;
    Ok(coefficient_of(&nf, a as u32, b as u32))
}

/// Request for `I_A(alpha, beta, gamma)`.
#[derive(Clone, Debug)]
pub struct GWQuery {
    pub class: CurveClass,
    pub alpha: Polynomial,
    pub beta: Polynomial,
    pub gamma: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GWValue {
    pub value: BigInt,
    /// `deg alpha + deg beta + K.A`.
    pub d: i64,
    pub admissible: bool,
    /// Set when the value is zero for degree reasons.
    pub note: Option<String>,
}

/// Evaluates a three-point invariant through the class contribution and the
/// classical Poincaré pairing. Blow-up classes are converted first.
pub fn gw_invariant(q: &GWQuery, qp: &QuantumPresentation) -> Result<GWValue, GeometryError> {
    if qp.coords != Coords::Bundle {
        return Err(GeometryError::Usage("invariants are extracted from the bundle presentation".into()));
    }
    if q.class.a < 0 || q.class.b < 0 {
        return Err(GeometryError::Usage(format!("curve class {} has a negative coefficient", q.class)));
    }
    let alpha = to_bundle(&q.alpha)?;
    let beta = to_bundle(&q.beta)?;
    let gamma = to_bundle(&q.gamma)?;
    for x in [&alpha, &beta, &gamma] {
        check_input(x, qp)?;
        if x.homogeneous_degree().is_none() {
            return Err(GeometryError::Usage(format!("`{x}` is not a nonzero homogeneous class")));
        }
    }
    let d = degree_budget(&alpha, &beta, q.class, &qp.params).expect("homogeneous");
    let dg = gamma.homogeneous_degree().expect("homogeneous") as i64;
    let dim = qp.params.dim() as i64;
    if d < 0 || dg != dim - d {
        let note =
            if d < 0 { format!("degree: d = {d} < 0") } else { format!("degree: deg gamma = {dg}, need {}", dim - d) };
        return Ok(GWValue { value: BigInt::from(0), d, admissible: false, note: Some(note) });
    }
    let contrib = contribution_by_class(&alpha, &beta, q.class.a, q.class.b, qp)?;
    let v = integrate(&(&contrib * &gamma), &qp.classical)?;
    let value = v
        .to_integer()
        .ok_or_else(|| GeometryError::Internal(format!("invariant {} = {v} is not an integer", q.class)))?;
    Ok(GWValue { value, d, admissible: true, note: None })
}

/// Key: curve class and staircase indices `(i, j, k)`.
pub type GWKey = (CurveClass, (usize, usize, usize));

/// Extracted invariants `int (b_i * b_j)_A . b_k` over staircase triples.
#[derive(Clone, Debug, Default)]
pub struct GWTable {
    pub entries: BTreeMap<GWKey, BigInt>,
    pub notes: Vec<String>,
}

/// All classes with `-K.A` at most `max_anticanonical`, excluding `(0,0)`.
pub fn classes_up_to(params: &GeometryParams, max_anticanonical: i64) -> Vec<CurveClass> {
    let mut out = Vec::new();
    let (r, n) = (params.r as i64, params.n as i64);
    for a in 0..=max_anticanonical / r {
        for b in 0..=(max_anticanonical - a * r) / n {
            let c = CurveClass::new(a, b);
            if c.is_effective() {
                out.push(c);
            }
        }
    }
    out
}

/// Fills the table for every staircase triple and every class with a
/// nonnegative degree budget. Pairings use the classical pairing matrix of
/// the staircase.
pub fn gw_table(qp: &QuantumPresentation) -> Result<GWTable, GeometryError> {
    if qp.coords != Coords::Bundle {
        return Err(GeometryError::Usage("invariants are extracted from the bundle presentation".into()));
    }
    let basis = qp.quotient.basis_elements();
    let staircase = qp.quotient.staircase().to_vec();
    let index: BTreeMap<Monomial, usize> = staircase.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let pairing = crate::geometry::pairing_matrix(&qp.classical)?;
    if qp.classical.quotient.staircase() != staircase.as_slice() {
        return Err(GeometryError::Internal("classical and deformed staircases differ".into()));
    }
    let dim = qp.params.dim() as i64;
    let classes = classes_up_to(&qp.params, 2 * dim);
    let mut table = GWTable::default();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let nf = qp.quotient.multiply(&basis[i], &basis[j]);
            let parts = nf.split_by_parameters();
            let dij = (staircase[i].total_degree() + staircase[j].total_degree()) as i64;
            for &c in &classes {
                let d = dij - c.anticanonical_degree(&qp.params);
                if d < 0 {
                    continue;
                }
                let key = Monomial::new(vec![0, 0, c.a as u32, c.b as u32]);
                let class = parts.get(&key);
                for (k, mk) in staircase.iter().enumerate() {
                    if mk.total_degree() as i64 != dim - d {
                        continue;
                    }
                    let mut v = Scalar::zero();
                    if let Some(class) = class {
                        for (m, coef) in class.terms() {
                            let l = *index
                                .get(m)
                                .ok_or_else(|| GeometryError::Internal(format!("{m:?} is not a staircase monomial")))?;
                            v = &v + &(coef * &pairing[l][k]);
                        }
                    }
                    let v = v
                        .to_integer()
                        .ok_or_else(|| GeometryError::Internal(format!("non-integral invariant {v} at {c}")))?;
                    table.entries.insert((c, (i, j, k)), v.clone());
                    table.entries.insert((c, (j, i, k)), v);
                }
            }
        }
    }
    Ok(table)
}

/// Permutation symmetry of the extracted three-point values.
pub fn s3_symmetry_check(qp: &QuantumPresentation) -> Result<Report, GeometryError> {
    let table = gw_table(qp)?;
    let names: Vec<String> = qp.quotient.basis_elements().iter().map(|b| b.to_string()).collect();
    let mut report = Report::new();
    let mut failures = Vec::new();
    let mut nonzero = 0usize;
    for (&(c, (i, j, k)), v) in &table.entries {
        if *v != BigInt::from(0) {
            nonzero += 1;
        }
        for perm in [(i, k, j), (j, k, i)] {
            match table.entries.get(&(c, perm)) {
                Some(w) if w == v => {}
                other => failures.push(format!(
                    "I_{c}({},{},{}) = {v} but permuted value {}",
                    names[i],
                    names[j],
                    names[k],
                    other.map_or("missing".to_string(), |w| w.to_string())
                )),
            }
        }
    }
    failures.sort();
    failures.dedup();
    let detail = if failures.is_empty() {
        format!("{} entries ({} nonzero) symmetric", table.entries.len(), nonzero)
    } else {
        format!("{} asymmetric: {}", failures.len(), failures.iter().take(8).cloned().collect::<Vec<_>>().join("; "))
    };
    report.check("S3 symmetry of extracted invariants", failures.is_empty(), detail);
    Ok(report)
}

/// Consistency of the deformed ring with the classical one.
pub fn consistency_checks(qp: &QuantumPresentation) -> Result<Report, GeometryError> {
    let params = qp.params;
    let mut report = Report::new();
    let zero = Scalar::zero();
    let at_zero = qp.specialize(&zero, &zero);
    let classical = classical_relations(&params, qp.coords)?;
    report.check(
        format!("q -> 0 recovers classical relations ({})", qp.coords),
        at_zero == classical,
        format!("{} ; {}", at_zero[0], at_zero[1]),
    );
    if qp.coords != Coords::Bundle {
        return Ok(report);
    }

    let basis = qp.quotient.basis_elements();
    let mut spec_bad = 0usize;
    let mut hom_bad = 0usize;
    let mut int_bad = 0usize;
    let mut cutoff_bad = 0usize;
    let classes = classes_up_to(&params, 2 * params.dim() as i64 + params.r as i64 + params.n as i64);
    for x in &basis {
        for y in &basis {
            let qprod = quantum_product(x, y, qp)?;
            let cl = qp.classical.normal_form(&(x * y));
            if coefficient_of(&qprod, 0, 0) != cl {
                spec_bad += 1;
            }
            if !qprod.is_homogeneous() {
                hom_bad += 1;
            }
            if !qprod.is_integral() {
                int_bad += 1;
            }
            for &c in &classes {
                let d = degree_budget(x, y, c, &params).expect("homogeneous");
                if d < 0 && !coefficient_of(&qprod, c.a as u32, c.b as u32).is_zero() {
                    cutoff_bad += 1;
                }
            }
        }
    }
    let pairs = basis.len() * basis.len();
    report.check_eq("classical specialization of quantum products (mismatches)", 0, spec_bad);
    report.check_eq("homogeneity of quantum products (failures)", 0, hom_bad);
    report.check_eq("integrality of quantum products (failures)", 0, int_bad);
    report.check_eq("degree cutoff d<0 gives zero contribution (violations)", 0, cutoff_bad);
    report.note(format!("{pairs} basis products examined"));
    Ok(report)
}

fn query(c: CurveClass, a: &Polynomial, b: &Polynomial, g: &Polynomial) -> GWQuery {
    GWQuery { class: c, alpha: a.clone(), beta: b.clone(), gamma: g.clone() }
}

/// Sweeps the three lemmas on invariants of lines.
///
/// Refuses (returns a skipped report) outside `2p+3 < m`.
pub fn verify_lemma_suite(params: &GeometryParams, b_max: u32) -> Result<Report, GeometryError> {
    if !params.in_range {
        return Ok(Report::skipped(format!(
            "hypothesis r < n fails (r = {}, n = {}); lemma suite not run",
            params.r, params.n
        )));
    }
    if b_max < 1 {
        return Err(GeometryError::Usage("bMax must be at least 1".into()));
    }
    let qp = quantum_presentation(params, Coords::Bundle)?;
    let (n, r) = (params.n, params.r);
    let vars = qp.vars().clone();
    let mono = |ph: u32, px: u32| Polynomial::monomial(&vars, Monomial::new(vec![px, ph, 0, 0]));
    let mut report = Report::new();

    // vanishing along multiples of A1 when the xi-degrees are small
    let stairs = qp.quotient.staircase().to_vec();
    let basis = qp.quotient.basis_elements();
    for b in 1..=b_max {
        let mut tested = 0usize;
        let mut failures = Vec::new();
        for (i, si) in stairs.iter().enumerate() {
            for (j, sj) in stairs.iter().enumerate().skip(i) {
                if si.exp(0) + sj.exp(0) >= b * r {
                    continue;
                }
                tested += 1;
                let c = contribution_by_class(&basis[i], &basis[j], b as i64, 0, &qp)?;
                if c.is_zero() {
                    continue;
                }
                for g in &basis {
                    let v = integrate(&(&c * g), &qp.classical)?;
                    if !v.is_zero() {
                        failures.push(format!("I_{{{b}A1}}({},{},{}) = {v}", basis[i], basis[j], g));
                    }
                }
            }
        }
        let detail = if failures.is_empty() {
            format!("{tested} pairs, all contributions pair to 0")
        } else {
            failures.join("; ")
        };
        report.check(format!("I_{{{b}A1}} vanishes when the xi-degrees sum below {b}r"), failures.is_empty(), detail);
    }

    let one = BigInt::from(1);
    let gw2 = gw_invariant(&query(CurveClass::A1, &mono(0, 1), &mono(0, r - 1), &mono(n, r - 1)), &qp)?;
    report.check_eq("I_A1(xi, xi^(r-1), h^n xi^(r-1)) = 1", one.clone(), gw2.value);

    let rm1 = BigInt::from(r - 1);
    let mut fails = Vec::new();
    for nt in 1..=n {
        let a = mono(nt, 0);
        let b = mono(n + 1 - nt, 0);
        let g0 = mono(n, r - 2);
        let g1 = mono(n - 1, r - 1);
        let v0 = gw_invariant(&query(CurveClass::A2, &a, &b, &g0), &qp)?.value;
        let v1 = gw_invariant(&query(CurveClass::A2, &a, &b, &g1), &qp)?.value;
        let comb = &g1 + &g0.scale(&Scalar::from_int(1 - r as i64));
        let v2 = gw_invariant(&query(CurveClass::A2, &a, &b, &comb), &qp)?.value;
        if v0 != one {
            fails.push(format!("I_A2(h^{nt}, h^{}, h^n xi^(r-2)): expected 1, computed {v0}", n + 1 - nt));
        }
        if v1 != rm1 {
            fails.push(format!("I_A2(h^{nt}, h^{}, h^(n-1) xi^(r-1)): expected {rm1}, computed {v1}", n + 1 - nt));
        }
        if v2 != BigInt::from(0) {
            fails.push(format!(
                "I_A2(h^{nt}, h^{}, h^(n-1) xi^(r-1) - (r-1) h^n xi^(r-2)): expected 0, computed {v2}",
                n + 1 - nt
            ));
        }
    }
    let detail =
        if fails.is_empty() { format!("a = 1..{n}: values 1, {rm1}, combination 0") } else { fails.join("; ") };
    report.check("I_A2(h^a, h^(n+1-a), -) takes values 1 and r-1", fails.is_empty(), detail);
    Ok(report)
}

/// Checks the deformed presentation against the stated relations and the
/// classical ring. Refuses outside `2p+3 < m`.
pub fn verify_main_theorem(params: &GeometryParams) -> Result<Report, GeometryError> {
    if !params.in_range {
        return Ok(Report::skipped(format!(
            "2p+3 = {} is not < m = {}; quantum presentation not certified",
            2 * params.p + 3,
            params.m
        )));
    }
    let bundle = quantum_presentation(params, Coords::Bundle)?;
    let blowup = quantum_presentation(params, Coords::Blowup)?;
    let mut report = Report::new();
    let one = Scalar::one();

    // (i) q = 1 reproduces the closed-form relations
    let stated = stated_relations(params)?;
    let at_one = blowup.specialize(&one, &one);
    report.check(
        "relations at q1=q2=1 equal (k-eta)^(m-p) - eta, k^(p+1) eta - 1",
        at_one == stated,
        format!("{} ; {}", at_one[0], at_one[1]),
    );

    // (ii) deformed ideals correspond under the change of variables
    let ok = ideals_correspond(&blowup.relations, &bundle.relations)?;
    report.check("deformed ideal correspondence blowup <-> bundle", ok, if ok { "equal" } else { "differ" });

    // (iii) rank is preserved by the deformation
    report.check_eq("deformed rank (bundle) = (n+1)r", params.expected_rank(), bundle.quotient.rank());
    report.check_eq("deformed rank (blowup) = (n+1)r", params.expected_rank(), blowup.quotient.rank());
    let q1_ring = quotient_of(&at_one, Budget::default())?;
    report.check_eq("rank at q1=q2=1 = (n+1)r", params.expected_rank(), q1_ring.rank());

    // (iv) classical limit
    report.extend(consistency_checks(&bundle)?);
    report.extend(consistency_checks(&blowup)?);

    // quantum powers: h^{*(n+1)} = (xi - 2h) q2 and (xi - h)^{*(r-1)} * (xi - 2h) = q1
    let vars = bundle.vars().clone();
    let (xi, h) = bundle_gens(&vars);
    let two_h = h.scale(&Scalar::from_int(2));
    let q1 = Polynomial::var(&vars, "q1")?;
    let q2 = Polynomial::var(&vars, "q2")?;
    let hpow = quantum_power(&h, params.n + 1, &bundle);
    report.check_eq("h^{*(n+1)} = (xi-2h) q2", (&xi - &two_h) * &q2, hpow);
    let mut f2 = quantum_power(&(&xi - &h), params.r - 1, &bundle);
    f2 = bundle.quotient.multiply(&f2, &(&xi - &two_h));
    report.check_eq("(xi-h)^{*(r-1)} * (xi-2h) = q1", q1, f2);
    Ok(report)
}

/// Iterated quantum multiplication, reducing after every step.
fn quantum_power(x: &Polynomial, e: u32, qp: &QuantumPresentation) -> Polynomial {
    let mut acc = Polynomial::one(qp.vars());
    for _ in 0..e {
        acc = qp.quotient.multiply(&acc, x);
    }
    acc
}

/// Display strings of the deformed relations (blow-up or bundle), with
/// `q1 = q2 = 1` when `at_q_one`.
pub fn factored_quantum_strings(params: &GeometryParams, coords: Coords, at_q_one: bool) -> [String; 2] {
    let (q1, q2) = if at_q_one { ("1", "") } else { ("q1", "*q2") };
    match coords {
        Coords::Blowup => {
            let eta = if at_q_one { "eta".to_string() } else { format!("eta{q2}") };
            [format!("(k-eta)^{} - {eta}", params.m - params.p), format!("{}*eta - {q1}", power_str("k", params.p + 1))]
        }
        Coords::Bundle => [
            format!("{} - (xi-2*h){q2}", power_str("h", params.n + 1)),
            format!("{}*(xi-2*h) - {q1}", power_str("(xi-h)", params.r - 1)),
        ],
    }
}

/// `(k-eta)^(m-p) - eta` and `k^(p+1) eta - 1`, parsed from text.
fn stated_relations(params: &GeometryParams) -> Result<[Polynomial; 2], GeometryError> {
    let vars = params.vars(Coords::Blowup);
    let [a, b] = factored_quantum_strings(params, Coords::Blowup, true);
    Ok([Polynomial::parse(&vars, &a)?, Polynomial::parse(&vars, &b)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u32, p: u32) -> GeometryParams {
        GeometryParams::new(m, p).unwrap()
    }

    fn p(v: &Vars, s: &str) -> Polynomial {
        Polynomial::parse(v, s).unwrap()
    }

    #[test]
    fn deformed_relations_closed_forms() {
        let a = params(4, 0);
        let b = quantum_presentation(&a, Coords::Bundle).unwrap();
        let v = b.vars().clone();
        assert_eq!(b.relations, [p(&v, "h^4 - (xi - 2*h)*q2"), p(&v, "xi^2 - 3*h*xi + 2*h^2 - q1")]);
        let k = quantum_presentation(&a, Coords::Blowup).unwrap();
        let w = k.vars().clone();
        assert_eq!(k.relations, [p(&w, "(k-eta)^4 - eta*q2"), p(&w, "k*eta - q1")]);
        let c = quantum_presentation(&params(8, 1), Coords::Blowup).unwrap();
        let w = c.vars().clone();
        assert_eq!(c.relations, [p(&w, "(k-eta)^7 - eta*q2"), p(&w, "k^2*eta - q1")]);
        assert!(c.certified);
        assert!(!quantum_presentation(&params(5, 1), Coords::Blowup).unwrap().certified);
    }

    #[test]
    fn specializations() {
        let k = quantum_presentation(&params(4, 0), Coords::Blowup).unwrap();
        let w = k.vars().clone();
        let one = Scalar::one();
        assert_eq!(k.specialize(&one, &one), [p(&w, "(k-eta)^4 - eta"), p(&w, "k*eta - 1")]);
        let zero = Scalar::zero();
        assert_eq!(k.specialize(&zero, &zero), classical_relations(&params(4, 0), Coords::Blowup).unwrap());
    }

    #[test]
    fn products_and_contributions() {
        let qp = quantum_presentation(&params(4, 0), Coords::Bundle).unwrap();
        let v = qp.vars().clone();
        let xi = p(&v, "xi");
        let h = p(&v, "h");
        assert_eq!(quantum_product(&xi, &xi, &qp).unwrap(), p(&v, "3*h*xi - 2*h^2 + q1"));
        assert_eq!(quantum_product(&h, &p(&v, "h^3"), &qp).unwrap(), p(&v, "(xi - 2*h)*q2"));
        let y = p(&v, "h^2*xi - 5*h^3");
        assert_eq!(quantum_product(&Polynomial::one(&v), &y, &qp).unwrap(), y);
        assert!(quantum_product(&p(&v, "q1"), &h, &qp).is_err());

        assert_eq!(contribution_by_class(&h, &p(&v, "h^3"), 0, 1, &qp).unwrap(), p(&v, "xi - 2*h"));
        assert_eq!(contribution_by_class(&h, &h, 0, 0, &qp).unwrap(), p(&v, "h^2"));
        assert!(contribution_by_class(&xi, &h, 1, 0, &qp).unwrap().is_zero());
        assert!(contribution_by_class(&xi, &h, -1, 0, &qp).is_err());
    }

    #[test]
    fn invariants_of_lines() {
        let qp = quantum_presentation(&params(4, 0), Coords::Bundle).unwrap();
        let v = qp.vars().clone();
        let gw = |c, a: &str, b: &str, g: &str| {
            gw_invariant(&GWQuery { class: c, alpha: p(&v, a), beta: p(&v, b), gamma: p(&v, g) }, &qp).unwrap()
        };
        assert_eq!(gw(CurveClass::A1, "xi", "xi", "h^3*xi").value, BigInt::from(1));
        assert_eq!(gw(CurveClass::A2, "h", "h^3", "h^3").value, BigInt::from(1));
        assert_eq!(gw(CurveClass::A2, "h", "h^3", "h^2*xi").value, BigInt::from(1));
        let cut = gw(CurveClass::new(2, 0), "h", "h", "h");
        assert!(!cut.admissible && cut.d < 0 && cut.value == BigInt::from(0));
        assert!(cut.note.unwrap().starts_with("degree"));
    }

    #[test]
    fn blowup_queries_are_converted() {
        let qp = quantum_presentation(&params(4, 0), Coords::Bundle).unwrap();
        let w = params(4, 0).vars(Coords::Blowup);
        // k - eta = h
        let q = GWQuery {
            class: CurveClass::A2,
            alpha: p(&w, "k - eta"),
            beta: p(&w, "(k-eta)^3"),
            gamma: p(&w, "(k-eta)^3"),
        };
        assert_eq!(gw_invariant(&q, &qp).unwrap().value, BigInt::from(1));
    }

    #[test]
    fn factored_strings() {
        let a = params(4, 0);
        assert_eq!(factored_quantum_strings(&a, Coords::Blowup, true), ["(k-eta)^4 - eta", "k*eta - 1"]);
        assert_eq!(factored_quantum_strings(&a, Coords::Blowup, false), ["(k-eta)^4 - eta*q2", "k*eta - q1"]);
        assert_eq!(factored_quantum_strings(&a, Coords::Bundle, false), ["h^4 - (xi-2*h)*q2", "(xi-h)*(xi-2*h) - q1"]);
    }

    #[test]
    fn suites_on_the_smallest_instance() {
        let a = params(4, 0);
        let lem = verify_lemma_suite(&a, 2).unwrap();
        assert!(lem.passed(), "{lem}");
        let thm = verify_main_theorem(&a).unwrap();
        assert!(thm.passed(), "{thm}");
        let out = verify_lemma_suite(&params(5, 1), 2).unwrap();
        assert!(out.skipped.is_some() && out.checks.is_empty());
        assert!(verify_main_theorem(&params(5, 1)).unwrap().skipped.is_some());
    }

    #[test]
    fn boundary_identification_breaks_symmetry() {
        // NF(h^6 xi) carries q2 * h^3 xi, so (h^3 xi * h^3)_A2 pairs to 1 with the
        // fundamental class while (1 * h^3)_A2 is zero.
        let qp = quantum_presentation(&params(4, 0), Coords::Bundle).unwrap();
        let v = qp.vars().clone();
        let c = contribution_by_class(&p(&v, "h^3*xi"), &p(&v, "h^3"), 0, 1, &qp).unwrap();
        assert_eq!(integrate(&c, &qp.classical).unwrap(), Scalar::one());
        assert!(contribution_by_class(&Polynomial::one(&v), &p(&v, "h^3"), 0, 1, &qp).unwrap().is_zero());
        let rep = s3_symmetry_check(&qp).unwrap();
        assert!(!rep.passed());
        assert!(rep.checks[0].detail.contains("I_(0,1)(1,h^3*xi,h^3) = 0 but permuted value 1"));
    }
}
