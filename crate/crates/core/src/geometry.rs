//! Classical geometry of `P(V) -> P^n`, `V = O(1)^(r-1) + O(2)`, and of the
//! isomorphic blow-up of `P^m` along a `p`-plane.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactalg::{AlgError, Monomial, MonomialOrder, Polynomial, Scalar, VariableSet, Vars};
use crate::groebner::{buchberger_with_budget, staircase_basis, Budget, GroebnerError, Ideal, QuotientRing};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] AlgError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal check failed: {0}")]
    Internal(String),
}

/// The two coordinate systems on the cohomology ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coords {
    /// Generators `xi` (tautological) and `h` (hyperplane of the base).
    Bundle,
    /// Generators `k` (hyperplane of `P^m`) and `eta` (exceptional divisor).
    Blowup,
}

impl Coords {
    pub fn name(self) -> &'static str {
        match self {
            Coords::Bundle => "bundle",
            Coords::Blowup => "blowup",
        }
    }
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(m, p)` together with the bundle data `n = m-p-1`, `r = p+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeometryParams {
    pub m: u32,
    pub p: u32,
    pub n: u32,
    pub r: u32,
    /// `2p+3 < m`, equivalently `r < n`: the range where the quantum presentation is a theorem.
    pub in_range: bool,
}

impl GeometryParams {
    pub fn new(m: u32, p: u32) -> Result<Self, GeometryError> {
        if m < 2 {
            return Err(GeometryError::Usage(format!("m must be at least 2, got {m}")));
        }
        if p > m - 2 {
            return Err(GeometryError::Usage(format!("p must satisfy 0 <= p <= m-2 = {}, got {p}", m - 2)));
        }
        let n = m - p - 1;
        let r = p + 2;
        Ok(GeometryParams { m, p, n, r, in_range: 2 * p + 3 < m })
    }

    /// Complex dimension `n + r - 1` (which equals `m`).
    pub fn dim(&self) -> u32 {
        self.n + self.r - 1
    }

    /// `(n+1) r`, the rank of the cohomology.
    pub fn expected_rank(&self) -> usize {
        ((self.n + 1) * self.r) as usize
    }

    pub fn vars(&self, coords: Coords) -> Vars {
        match coords {
            Coords::Bundle => VariableSet::bundle(self.n, self.r),
            Coords::Blowup => VariableSet::blowup(self.n, self.r),
        }
    }

    /// Warning text when the quantum hypothesis `2p+3 < m` fails.
    pub fn warning(&self) -> Option<String> {
        (!self.in_range).then(|| {
            format!("2p+3 = {} is not < m = {}: quantum results are formal, not certified", 2 * self.p + 3, self.m)
        })
    }
}

pub fn derive_params(m: u32, p: u32) -> Result<GeometryParams, GeometryError> {
    GeometryParams::new(m, p)
}

/// Chern coefficients: `c_k(V) = coeffs[k] * h^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernVector(pub Vec<BigInt>);

impl ChernVector {
    pub fn get(&self, k: usize) -> &BigInt {
        &self.0[k]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Coefficients of `(1+t)^(r-1) (1+2t)`.
pub fn chern_coeffs(params: &GeometryParams) -> ChernVector {
    let mut c = vec![BigInt::from(1)];
    let roots = std::iter::repeat_n(1, params.r as usize - 1).chain(std::iter::once(2));
    for a in roots {
        let mut next = vec![BigInt::from(0); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i] += ci;
            next[i + 1] += ci * a;
        }
        c = next;
    }
    ChernVector(c)
}

/// A pair of relations and the quotient they cut out.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub params: GeometryParams,
    pub coords: Coords,
    pub relations: [Polynomial; 2],
    pub quotient: QuotientRing,
}

impl Presentation {
    pub fn vars(&self) -> &Vars {
        self.quotient.vars()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.quotient.normal_form(f)
    }

    pub fn rank(&self) -> usize {
        self.quotient.rank()
    }
}

/// Bundle variable `xi`, `h` as polynomials.
pub(crate) fn bundle_gens(vars: &Vars) -> (Polynomial, Polynomial) {
    (Polynomial::var(vars, "xi").expect("xi"), Polynomial::var(vars, "h").expect("h"))
}

pub(crate) fn blowup_gens(vars: &Vars) -> (Polynomial, Polynomial) {
    (Polynomial::var(vars, "k").expect("k"), Polynomial::var(vars, "eta").expect("eta"))
}

/// `(xi - h)^(r-1) (xi - 2h)`.
pub(crate) fn f2_factored(params: &GeometryParams, vars: &Vars) -> Polynomial {
    let (xi, h) = bundle_gens(vars);
    let two_h = h.scale(&Scalar::from_int(2));
    (&xi - &h).pow(params.r - 1) * (&xi - &two_h)
}

/// `sum_k (-1)^k c_k h^k xi^(r-k)`.
pub(crate) fn f2_chern(params: &GeometryParams, vars: &Vars) -> Polynomial {
    let c = chern_coeffs(params);
    let r = params.r;
    let xi = vars.index_of("xi").expect("xi");
    let h = vars.index_of("h").expect("h");
    Polynomial::from_terms(
        vars,
        (0..=r).map(|k| {
            let mut e = vec![0; vars.len()];
            e[h] = k;
            e[xi] = r - k;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (Monomial::new(e), Scalar::from_bigint(c.get(k as usize) * sign))
        }),
    )
}

pub(crate) fn classical_relations(params: &GeometryParams, coords: Coords) -> Result<[Polynomial; 2], GeometryError> {
    let vars = params.vars(coords);
    match coords {
        Coords::Bundle => {
            let (_, h) = bundle_gens(&vars);
            let f1 = h.pow(params.n + 1);
            let f2 = f2_factored(params, &vars);
            let chern = f2_chern(params, &vars);
            if f2 != chern {
                return Err(GeometryError::Internal(format!(
                    "factored relation {f2} differs from Chern expansion {chern}"
                )));
            }
            Ok([f1, f2])
        }
        Coords::Blowup => {
            let (k, eta) = blowup_gens(&vars);
            let g1 = (&k - &eta).pow(params.m - params.p);
            let g2 = k.pow(params.p + 1) * eta;
            Ok([g1, g2])
        }
    }
}

pub(crate) fn quotient_of(relations: &[Polynomial], budget: Budget) -> Result<QuotientRing, GeometryError> {
    let ideal = Ideal::new(relations.to_vec(), MonomialOrder::DivisorGradedLex)?;
    let gb = buchberger_with_budget(&ideal, budget)?;
    Ok(staircase_basis(&gb)?)
}

pub fn classical_presentation(params: &GeometryParams, coords: Coords) -> Result<Presentation, GeometryError> {
    classical_presentation_with_budget(params, coords, Budget::default())
}

pub fn classical_presentation_with_budget(
    params: &GeometryParams,
    coords: Coords,
    budget: Budget,
) -> Result<Presentation, GeometryError> {
    let relations = classical_relations(params, coords)?;
    let quotient = quotient_of(&relations, budget)?;
    Ok(Presentation { params: *params, coords, relations, quotient })
}

/// Recovers `(coords, n, r)` from one of the preset variable sets.
pub(crate) fn identify_vars(vars: &VariableSet) -> Option<(Coords, u32, u32)> {
    let coords = match vars.names() {
        [a, b, q1, q2] if a == "xi" && b == "h" && q1 == "q1" && q2 == "q2" => Coords::Bundle,
        [a, b, q1, q2] if a == "k" && b == "eta" && q1 == "q1" && q2 == "q2" => Coords::Blowup,
        _ => return None,
    };
    Some((coords, vars.weight(3), vars.weight(2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `k -> xi - h`, `eta -> xi - 2h`.
    BlowupToBundle,
    /// `h -> k - eta`, `xi -> 2k - eta`.
    BundleToBlowup,
}

/// Rewrites a class between the two coordinate systems; `q1`, `q2` pass through.
pub fn change_vars(f: &Polynomial, direction: Direction) -> Result<Polynomial, GeometryError> {
    let (coords, n, r) = identify_vars(f.vars())
        .ok_or_else(|| GeometryError::Usage("polynomial is not over a bundle or blow-up variable set".into()))?;
    let two = Scalar::from_int(2);
    match (direction, coords) {
        (Direction::BlowupToBundle, Coords::Blowup) => {
            let target = VariableSet::bundle(n, r);
            let (xi, h) = bundle_gens(&target);
            let k = &xi - &h;
            let eta = &xi - &h.scale(&two);
            let q1 = Polynomial::var(&target, "q1")?;
            let q2 = Polynomial::var(&target, "q2")?;
            Ok(f.substitute(&target, &[k, eta, q1, q2])?)
        }
        (Direction::BundleToBlowup, Coords::Bundle) => {
            let target = VariableSet::blowup(n, r);
            let (k, eta) = blowup_gens(&target);
            let xi = &k.scale(&two) - &eta;
            let h = &k - &eta;
            let q1 = Polynomial::var(&target, "q1")?;
            let q2 = Polynomial::var(&target, "q2")?;
            Ok(f.substitute(&target, &[xi, h, q1, q2])?)
        }
        _ => Err(GeometryError::Usage(format!("polynomial is already in {coords} coordinates"))),
    }
}

/// Converts to bundle coordinates if necessary.
pub(crate) fn to_bundle(f: &Polynomial) -> Result<Polynomial, GeometryError> {
    match identify_vars(f.vars()) {
        Some((Coords::Blowup, _, _)) => change_vars(f, Direction::BlowupToBundle),
        _ => Ok(f.clone()),
    }
}

/// `h^n xi^(r-1)`, the class integrating to 1.
pub fn top_monomial(params: &GeometryParams) -> Monomial {
    Monomial::new(vec![params.r - 1, params.n, 0, 0])
}

/// Degree of a class against the fundamental class.
///
/// Blow-up classes are converted to bundle coordinates first; the result is
/// the coefficient of `h^n xi^(r-1)` in the normal form.
pub fn integrate(f: &Polynomial, pres: &Presentation) -> Result<Scalar, GeometryError> {
    if pres.coords != Coords::Bundle {
        return Err(GeometryError::Usage("integration runs in bundle coordinates".into()));
    }
    let f = to_bundle(f)?;
    if !f.same_vars(pres.vars()) {
        return Err(GeometryError::Algebra(AlgError::VariableSetMismatch));
    }
    if !f.is_parameter_free() {
        return Err(GeometryError::Usage("cannot integrate a class involving q1 or q2".into()));
    }
    Ok(pres.normal_form(&f).coeff(&top_monomial(&pres.params)))
}

/// `a A1 + b A2` in second homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveClass {
    pub a: i64,
    pub b: i64,
}

impl CurveClass {
    /// Line in a fiber of the bundle (`B1` on the blow-up side).
    pub const A1: CurveClass = CurveClass { a: 1, b: 0 };
    /// Line in the exceptional locus over a line of the base (`B2`).
    pub const A2: CurveClass = CurveClass { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        CurveClass { a, b }
    }

    pub fn is_effective(&self) -> bool {
        self.a >= 0 && self.b >= 0 && (self.a, self.b) != (0, 0)
    }

    /// `-K . C = r a + n b`.
    pub fn anticanonical_degree(&self, params: &GeometryParams) -> i64 {
        params.r as i64 * self.a + params.n as i64 * self.b
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Poincaré dual of a curve class, in bundle coordinates.
pub fn curve_dual(params: &GeometryParams, c: CurveClass) -> Polynomial {
    let vars = params.vars(Coords::Bundle);
    let (n, r) = (params.n, params.r);
    let mono = |ph: u32, px: u32| Polynomial::monomial(&vars, Monomial::new(vec![px, ph, 0, 0]));
    let a1 = mono(n, r - 2);
    let a2 = &mono(n - 1, r - 1) - &a1.scale(&Scalar::from_int(r as i64));
    &a1.scale(&Scalar::from_int(c.a)) + &a2.scale(&Scalar::from_int(c.b))
}

/// Intersection number of a divisor with a curve class.
pub fn pair_divisor_curve(div: &Polynomial, c: CurveClass, pres: &Presentation) -> Result<Scalar, GeometryError> {
    let div = to_bundle(div)?;
    if !div.is_zero() && div.homogeneous_degree() != Some(1) {
        return Err(GeometryError::Usage(format!("`{div}` is not a divisor class")));
    }
    let dual = curve_dual(&pres.params, c);
    integrate(&div.try_mul(&dual)?, pres)
}

/// `-K = r(xi - h) + n h`.
pub fn anticanonical(params: &GeometryParams) -> Polynomial {
    let vars = params.vars(Coords::Bundle);
    let (xi, h) = bundle_gens(&vars);
    &(&xi - &h).scale(&Scalar::from_int(params.r as i64)) + &h.scale(&Scalar::from_int(params.n as i64))
}

/// Positivity of `-K` and nefness of `xi - h`, `h` on effective classes with
/// coefficients up to `grid_bound`. Pairings are computed by integration and
/// extended linearly from `A1`, `A2`.
pub fn fano_positivity_check(params: &GeometryParams, grid_bound: u32) -> Result<Report, GeometryError> {
    if grid_bound < 1 {
        return Err(GeometryError::Usage("grid bound must be at least 1".into()));
    }
    let pres = classical_presentation(params, Coords::Bundle)?;
    let vars = pres.vars().clone();
    let (xi, h) = bundle_gens(&vars);
    let pairings = |d: &Polynomial| -> Result<(i64, i64), GeometryError> {
        let a = pair_divisor_curve(d, CurveClass::A1, &pres)?;
        let b = pair_divisor_curve(d, CurveClass::A2, &pres)?;
        match (a.to_i64(), b.to_i64()) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(GeometryError::Internal(format!("non-integral pairing for {d}"))),
        }
    };
    let k = pairings(&anticanonical(params))?;
    let nef1 = pairings(&(&xi - &h))?;
    let nef2 = pairings(&h)?;

    let mut report = Report::new();
    report.check_eq("fano: -K.A1 = r", params.r as i64, k.0);
    report.check_eq("fano: -K.A2 = n", params.n as i64, k.1);
    let mut count = 0;
    let mut bad = Vec::new();
    for a in 0..=grid_bound as i64 {
        for b in 0..=grid_bound as i64 {
            let c = CurveClass::new(a, b);
            if !c.is_effective() {
                continue;
            }
            count += 1;
            let kc = k.0 * a + k.1 * b;
            let n1 = nef1.0 * a + nef1.1 * b;
            let n2 = nef2.0 * a + nef2.1 * b;
            if kc <= 0 || n1 < 0 || n2 < 0 || kc != c.anticanonical_degree(params) {
                bad.push(format!("{c}: -K={kc} (xi-h)={n1} h={n2}"));
            }
        }
    }
    let detail = if bad.is_empty() { format!("{count} effective classes, all positive") } else { bad.join("; ") };
    report.check("fano: -K positive, xi-h and h nef on effective grid", bad.is_empty(), detail);
    Ok(report)
}

/// `-K.C + n + r - 1`.
pub fn virtual_dim(params: &GeometryParams, c: CurveClass) -> i64 {
    c.anticanonical_degree(params) + params.dim() as i64
}

/// Moduli dimensions of lines in classes `A1` and `A2` against `vdim - 3`.
pub fn moduli_dim_identities(params: &GeometryParams) -> Report {
    let (n, r) = (params.n as i64, params.r as i64);
    let mut report = Report::new();
    // dim G(2,r) + dim P^n
    let lhs1 = 2 * (r - 2) + n;
    report.check_eq("moduli A1: dim G(2,r) + n = n+2r-4", n + 2 * r - 4, lhs1);
    report.check_eq("moduli A1: n+2r-4 = -K.A1 + dim - 3", n + 2 * r - 4, virtual_dim(params, CurveClass::A1) - 3);
    // dim G(2,n+1) + dim P(U0)
    let lhs2 = 2 * (n - 1) + (r - 2);
    report.check_eq("moduli A2: dim G(2,n+1) + r-2 = 2n+r-4", 2 * n + r - 4, lhs2);
    report.check_eq("moduli A2: 2n+r-4 = -K.A2 + dim - 3", 2 * n + r - 4, virtual_dim(params, CurveClass::A2) - 3);
    report
}

/// `int h^p_exp xi^q_exp` from the complete homogeneous symmetric function
/// `h_{n - p_exp}` of the splitting roots `(1, ..., 1, 2)`.
///
/// Computed by inverting `prod (1 - a_i t)` as a power series; no
/// Gröbner reduction is involved.
pub fn segre_integral_oracle(params: &GeometryParams, p_exp: u32, q_exp: u32) -> Result<Scalar, GeometryError> {
    if p_exp + q_exp != params.dim() {
        return Err(GeometryError::Usage(format!("degree {} is not the top degree {}", p_exp + q_exp, params.dim())));
    }
    if p_exp > params.n {
        return Ok(Scalar::zero());
    }
    let want = (params.n - p_exp) as usize;
    let mut denom = vec![BigInt::from(1)];
    let roots: Vec<i64> = (0..params.r).map(|i| if i + 1 == params.r { 2 } else { 1 }).collect();
    for a in roots {
        let mut next = vec![BigInt::from(0); denom.len() + 1];
        for (i, d) in denom.iter().enumerate() {
            next[i] += d;
            next[i + 1] -= d * a;
        }
        denom = next;
    }
    let mut series = vec![BigInt::from(1)];
    for k in 1..=want {
        let mut s = BigInt::from(0);
        for i in 1..=k.min(denom.len() - 1) {
            s -= &denom[i] * &series[k - i];
        }
        series.push(s);
    }
    Ok(Scalar::from_bigint(series[want].clone()))
}

/// `M[i][j] = int b_i b_j` over the staircase.
pub fn pairing_matrix(pres: &Presentation) -> Result<Vec<Vec<Scalar>>, GeometryError> {
    let basis = pres.quotient.basis_elements();
    basis.iter().map(|bi| basis.iter().map(|bj| integrate(&(bi * bj), pres)).collect()).collect()
}

/// Exact determinant by Gaussian elimination.
pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = &det * &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            let pivot_row = a[col].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x - &(&f * y);
            }
        }
    }
    det
}

/// Rows `xi - h`, `h`; columns `A1`, `A2`.
pub fn duality_table(pres: &Presentation) -> Result<[[Scalar; 2]; 2], GeometryError> {
    let (xi, h) = bundle_gens(pres.vars());
    divisor_table(&[&xi - &h, h], pres)
}

/// Rows `k`, `eta`; columns `B1`, `B2`. Evaluated through the change of variables.
pub fn blowup_table(pres: &Presentation) -> Result<[[Scalar; 2]; 2], GeometryError> {
    let vars = pres.params.vars(Coords::Blowup);
    let (k, eta) = blowup_gens(&vars);
    divisor_table(&[k, eta], pres)
}

fn divisor_table(rows: &[Polynomial; 2], pres: &Presentation) -> Result<[[Scalar; 2]; 2], GeometryError> {
    let cell = |d: &Polynomial, c| pair_divisor_curve(d, c, pres);
    Ok([
        [cell(&rows[0], CurveClass::A1)?, cell(&rows[0], CurveClass::A2)?],
        [cell(&rows[1], CurveClass::A1)?, cell(&rows[1], CurveClass::A2)?],
    ])
}

/// Structural checks on the classical ring of one instance.
pub fn classical_checks(params: &GeometryParams) -> Result<Report, GeometryError> {
    let bundle = classical_presentation(params, Coords::Bundle)?;
    let blowup = classical_presentation(params, Coords::Blowup)?;
    let mut report = Report::new();
    let n = params.n;
    let r = params.r;

    report.check_eq("rank (bundle) = (n+1)r", params.expected_rank(), bundle.rank());
    report.check_eq("rank (blowup) = (n+1)r", params.expected_rank(), blowup.rank());

    let c = chern_coeffs(params);
    report.check_eq("chern c_1 = r+1", BigInt::from(r + 1), c.get(1).clone());
    report.check_eq("chern c_r = 2", BigInt::from(2), c.get(r as usize).clone());

    let m = pairing_matrix(&bundle)?;
    let det = determinant(&m);
    report.check("poincare pairing unimodular", det.abs().is_one(), format!("det = {det}"));

    let one = Scalar::one;
    let zero = Scalar::zero;
    let dual = duality_table(&bundle)?;
    let dual_ok = dual == [[one(), zero()], [zero(), one()]];
    report.check("(xi-h, h) vs (A1, A2) is the identity", dual_ok, fmt_table(&dual));
    let blow = blowup_table(&bundle)?;
    let blow_ok = blow == [[one(), zero()], [one(), -one()]];
    report.check("(k, eta) vs (B1, B2) = [[1,0],[1,-1]]", blow_ok, fmt_table(&blow));

    // integration against the power-series oracle on every top-degree monomial
    let mut mismatches = Vec::new();
    let vars = bundle.vars().clone();
    for ph in 0..=n {
        let px = params.dim() - ph;
        let f = Polynomial::monomial(&vars, Monomial::new(vec![px, ph, 0, 0]));
        let g = integrate(&f, &bundle)?;
        let o = segre_integral_oracle(params, ph, px)?;
        if g != o {
            mismatches.push(format!("h^{ph}*xi^{px}: groebner {g}, oracle {o}"));
        }
    }
    let detail =
        if mismatches.is_empty() { format!("{} top-degree monomials agree", n + 1) } else { mismatches.join("; ") };
    report.check("integration matches segre oracle", mismatches.is_empty(), detail);

    let ok = ideals_correspond(&blowup.relations, &bundle.relations)?;
    report.check("classical ideal correspondence blowup <-> bundle", ok, if ok { "equal" } else { "differ" });

    report.extend(fano_positivity_check(params, 5)?);
    report.check_eq("virtual dim A1 = r + n + r - 1", (2 * r + n - 1) as i64, virtual_dim(params, CurveClass::A1));
    report.check_eq("virtual dim A2 = n + n + r - 1", (2 * n + r - 1) as i64, virtual_dim(params, CurveClass::A2));
    report.check_eq("virtual dim (0,0) = dim", params.dim() as i64, virtual_dim(params, CurveClass::new(0, 0)));
    report.extend(moduli_dim_identities(params));
    Ok(report)
}

/// Maps blow-up relations to bundle coordinates and back, comparing ideals each way.
pub(crate) fn ideals_correspond(blowup: &[Polynomial], bundle: &[Polynomial]) -> Result<bool, GeometryError> {
    use crate::groebner::ideal_equal;
    let order = MonomialOrder::DivisorGradedLex;
    let forward: Vec<Polynomial> =
        blowup.iter().map(|g| change_vars(g, Direction::BlowupToBundle)).collect::<Result<_, _>>()?;
    let backward: Vec<Polynomial> =
        bundle.iter().map(|f| change_vars(f, Direction::BundleToBlowup)).collect::<Result<_, _>>()?;
    let fwd = ideal_equal(&Ideal::new(forward, order)?, &Ideal::new(bundle.to_vec(), order)?)?;
    let bwd = ideal_equal(&Ideal::new(backward, order)?, &Ideal::new(blowup.to_vec(), order)?)?;
    Ok(fwd && bwd)
}

fn fmt_table(t: &[[Scalar; 2]; 2]) -> String {
    format!("[[{},{}],[{},{}]]", t[0][0], t[0][1], t[1][0], t[1][1])
}

/// Display strings of the classical relations in factored form.
pub fn factored_classical_strings(params: &GeometryParams, coords: Coords) -> [String; 2] {
    match coords {
        Coords::Bundle => [power_str("h", params.n + 1), format!("{}*(xi-2*h)", power_str("(xi-h)", params.r - 1))],
        Coords::Blowup => [format!("(k-eta)^{}", params.m - params.p), format!("{}*eta", power_str("k", params.p + 1))],
    }
}

pub(crate) fn power_str(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
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
    fn derived_parameters() {
        let a = params(4, 0);
        assert_eq!((a.n, a.r, a.in_range), (3, 2, true));
        let b = params(8, 1);
        assert_eq!((b.n, b.r, b.in_range), (6, 3, true));
        let c = params(5, 1);
        assert_eq!((c.n, c.r, c.in_range), (3, 3, false));
        assert!(c.warning().is_some());
        assert!(GeometryParams::new(1, 0).is_err());
        assert!(GeometryParams::new(4, 3).is_err());
        assert_eq!(params(4, 2).n, 1);
    }

    #[test]
    fn chern_vectors() {
        let ints = |v: &[i64]| ChernVector(v.iter().map(|&x| BigInt::from(x)).collect());
        assert_eq!(chern_coeffs(&params(4, 0)), ints(&[1, 3, 2]));
        assert_eq!(chern_coeffs(&params(8, 1)), ints(&[1, 4, 5, 2]));
        for m in 12..16 {
            let pr = params(m, 10);
            assert_eq!(chern_coeffs(&pr).get(1), &BigInt::from(pr.r + 1));
        }
    }

    #[test]
    fn f2_forms_agree_up_to_rank_twelve() {
        for p in 0..=10 {
            let pr = params(p + 13, p);
            assert!(pr.r <= 12);
            let v = pr.vars(Coords::Bundle);
            assert_eq!(f2_factored(&pr, &v), f2_chern(&pr, &v), "r = {}", pr.r);
        }
    }

    #[test]
    fn classical_relations_match_closed_forms() {
        let pr = params(4, 0);
        let b = classical_presentation(&pr, Coords::Bundle).unwrap();
        let v = b.vars().clone();
        assert_eq!(b.relations, [p(&v, "h^4"), p(&v, "xi^2 - 3*h*xi + 2*h^2")]);
        let k = classical_presentation(&pr, Coords::Blowup).unwrap();
        let w = k.vars().clone();
        assert_eq!(k.relations, [p(&w, "(k-eta)^4"), p(&w, "k*eta")]);
        let pr = params(8, 1);
        let k = classical_presentation(&pr, Coords::Blowup).unwrap();
        let w = k.vars().clone();
        assert_eq!(k.relations, [p(&w, "(k-eta)^7"), p(&w, "k^2*eta")]);
        assert_eq!(k.rank(), 21);
    }

    #[test]
    fn change_of_variables() {
        let pr = params(8, 1);
        let w = pr.vars(Coords::Blowup);
        let v = pr.vars(Coords::Bundle);
        assert_eq!(change_vars(&p(&w, "k - eta"), Direction::BlowupToBundle).unwrap(), p(&v, "h"));
        let g2 = p(&w, "k^2*eta");
        assert_eq!(change_vars(&g2, Direction::BlowupToBundle).unwrap(), f2_factored(&pr, &v));
        let f = p(&w, "k^3 - 2*eta*q1 + eta^2*q2");
        let back = change_vars(&change_vars(&f, Direction::BlowupToBundle).unwrap(), Direction::BundleToBlowup);
        assert_eq!(back.unwrap(), f);
        assert!(change_vars(&f, Direction::BundleToBlowup).is_err());
    }

    #[test]
    fn integrals() {
        let pr = params(4, 0);
        let b = classical_presentation(&pr, Coords::Bundle).unwrap();
        let v = b.vars().clone();
        assert_eq!(integrate(&p(&v, "h^3*xi"), &b).unwrap(), Scalar::one());
        assert_eq!(integrate(&p(&v, "xi^4"), &b).unwrap(), Scalar::from_int(15));
        assert_eq!(integrate(&p(&v, "h^2"), &b).unwrap(), Scalar::zero());
        assert!(matches!(integrate(&p(&v, "q1*h^2"), &b), Err(GeometryError::Usage(_))));
        for (m, pp) in [(4, 0), (6, 1), (8, 1), (9, 2)] {
            let pr = params(m, pp);
            let b = classical_presentation(&pr, Coords::Bundle).unwrap();
            let f = Polynomial::monomial(b.vars(), Monomial::new(vec![pr.r, pr.n - 1, 0, 0]));
            assert_eq!(integrate(&f, &b).unwrap(), Scalar::from_int(pr.r as i64 + 1));
        }
    }

    #[test]
    fn oracle_values() {
        let a = params(4, 0);
        assert_eq!(segre_integral_oracle(&a, 3, 1).unwrap(), Scalar::one());
        assert_eq!(segre_integral_oracle(&a, 0, 4).unwrap(), Scalar::from_int(15));
        let b = params(8, 1);
        assert_eq!(segre_integral_oracle(&b, 5, 3).unwrap(), Scalar::from_int(4));
        assert!(segre_integral_oracle(&b, 5, 2).is_err());
    }

    #[test]
    fn curve_pairings() {
        let pr = params(6, 1);
        let b = classical_presentation(&pr, Coords::Bundle).unwrap();
        let t = duality_table(&b).unwrap();
        assert_eq!(t, [[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]]);
        let s = blowup_table(&b).unwrap();
        assert_eq!(s, [[Scalar::one(), Scalar::zero()], [Scalar::one(), Scalar::from_int(-1)]]);
        let k = anticanonical(&pr);
        assert_eq!(pair_divisor_curve(&k, CurveClass::A1, &b).unwrap(), Scalar::from_int(pr.r as i64));
        assert_eq!(pair_divisor_curve(&k, CurveClass::A2, &b).unwrap(), Scalar::from_int(pr.n as i64));
        assert!(pair_divisor_curve(&p(b.vars(), "h^2"), CurveClass::A1, &b).is_err());
    }

    #[test]
    fn anticanonical_classes() {
        let v = params(4, 0).vars(Coords::Bundle);
        assert_eq!(anticanonical(&params(4, 0)), p(&v, "2*xi + h"));
        let w = params(8, 1).vars(Coords::Bundle);
        assert_eq!(anticanonical(&params(8, 1)), p(&w, "3*xi + 3*h"));
    }

    #[test]
    fn fano_and_dimensions() {
        let rep = fano_positivity_check(&params(4, 0), 5).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.checks.iter().any(|c| c.detail.starts_with("35 effective")));
        assert!(fano_positivity_check(&params(8, 1), 5).unwrap().passed());
        assert!(fano_positivity_check(&params(8, 1), 0).is_err());

        let a = params(4, 0);
        assert_eq!(virtual_dim(&a, CurveClass::A1), 6);
        assert_eq!(virtual_dim(&a, CurveClass::A2), 7);
        assert_eq!(virtual_dim(&a, CurveClass::new(0, 0)), 4);
        for (m, pp) in [(4, 0), (8, 1), (15, 2)] {
            assert!(moduli_dim_identities(&params(m, pp)).passed());
        }
    }

    #[test]
    fn determinant_small() {
        let s = |x: i64| Scalar::from_int(x);
        assert_eq!(determinant(&[vec![s(0), s(1)], vec![s(1), s(0)]]), s(-1));
        assert_eq!(determinant(&[vec![s(2), s(3)], vec![s(4), s(6)]]), s(0));
    }

    #[test]
    fn classical_suite_passes_out_of_range_too() {
        let rep = classical_checks(&params(5, 1)).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
