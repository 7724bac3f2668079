//! Buchberger bases, normal forms and finite quotient-ring staircases.

use thiserror::Error;

use crate::exactalg::{Monomial, MonomialOrder, Polynomial, Scalar, Vars};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("generators live over different variable sets")]
    VariableSetMismatch,
    #[error("Buchberger budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("staircase is infinite: no pure power of `{0}` among the leading terms")]
    InfiniteStaircase(String),
}

/// Resource limits for [`buchberger_with_budget`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest weighted degree of a critical-pair lcm that may be processed.
    pub max_degree: u32,
    /// Largest number of S-polynomials that may be reduced.
    pub max_pairs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_degree: 128, max_pairs: 100_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    vars: Vars,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self, GroebnerError> {
        let first = generators.first().ok_or(GroebnerError::EmptyIdeal)?;
        let vars = first.vars().clone();
        for (i, g) in generators.iter().enumerate() {
            if g.is_zero() {
                return Err(GroebnerError::ZeroGenerator(i));
            }
            if !g.same_vars(&vars) {
                return Err(GroebnerError::VariableSetMismatch);
            }
        }
        Ok(Ideal { vars, generators, order })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }
}

/// Reduced Gröbner basis: monic, sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ideal: Ideal,
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn order(&self) -> MonomialOrder {
        self.ideal.order
    }

    pub fn vars(&self) -> &Vars {
        &self.ideal.vars
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.basis, &self.leading, self.ideal.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks that every S-polynomial of basis pairs reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let order = self.ideal.order;
        (0..self.basis.len()).all(|i| {
            (i + 1..self.basis.len()).all(|j| {
                let s = s_polynomial(&self.basis[i], &self.leading[i], &self.basis[j], &self.leading[j], order);
                self.normal_form(&s).is_zero()
            })
        })
    }

    /// Reduced: monic, and no term of an element is divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, g)| {
            g.leading_term(self.ideal.order).is_some_and(|(_, c)| c.is_one())
                && g.terms().all(|(m, _)| self.leading.iter().enumerate().all(|(j, lt)| j == i || !lt.divides(m)))
        })
    }
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(f)
}

/// Full reduction of `f` by monic `basis` with leading monomials `leading`.
fn reduce(f: &Polynomial, basis: &[Polynomial], leading: &[Monomial], order: MonomialOrder) -> Polynomial {
    let vars = f.vars().clone();
    let mut work = f.clone();
    let mut rem = Polynomial::zero(&vars);
    loop {
        let (m, c) = match work.leading_term(order) {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return rem,
        };
        match leading.iter().position(|lt| lt.divides(&m)) {
            Some(i) => {
                let quot = m.div(&leading[i]).expect("divisible");
                work = &work - &basis[i].mul_term(&quot, &c);
            }
            None => {
                work.remove_term(&m);
                rem.add_term(m, c);
            }
        }
    }
}

fn s_polynomial(f: &Polynomial, lf: &Monomial, g: &Polynomial, lg: &Monomial, order: MonomialOrder) -> Polynomial {
    let lcm = lf.lcm(lg);
    let cf = f.leading_term(order).expect("nonzero").1.recip();
    let cg = g.leading_term(order).expect("nonzero").1.recip();
    &f.mul_term(&lcm.div(lf).expect("lcm"), &cf) - &g.mul_term(&lcm.div(lg).expect("lcm"), &cg)
}

pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with_budget(ideal, Budget::default())
}

pub fn buchberger_with_budget(ideal: &Ideal, budget: Budget) -> Result<GroebnerBasis, GroebnerError> {
    let order = ideal.order;
    let vars = ideal.vars.clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut leading: Vec<Monomial> = Vec::new();
    for g in &ideal.generators {
        let r = reduce(g, &basis, &leading, order);
        if !r.is_zero() {
            let r = r.monic(order);
            leading.push(r.leading_term(order).expect("nonzero").0.clone());
            basis.push(r);
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    loop {
        // normal strategy: smallest lcm first
        let next = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = leading[a.0].lcm(&leading[a.1]);
                let lb = leading[b.0].lcm(&leading[b.1]);
                order.compare(&vars, &la, &lb)
            })
            .map(|(idx, _)| idx);
        let Some(idx) = next else { break };
        let (i, j) = pairs.swap_remove(idx);
        if leading[i].is_coprime(&leading[j]) {
            continue;
        }
        let lcm = leading[i].lcm(&leading[j]);
        let deg = lcm.weighted_degree(&vars);
        if deg > budget.max_degree {
            return Err(GroebnerError::BudgetExceeded(format!(
                "pair lcm degree {deg} exceeds limit {}",
                budget.max_degree
            )));
        }
        processed += 1;
        if processed > budget.max_pairs {
            return Err(GroebnerError::BudgetExceeded(format!("more than {} S-polynomials", budget.max_pairs)));
        }
        let s = s_polynomial(&basis[i], &leading[i], &basis[j], &leading[j], order);
        let r = reduce(&s, &basis, &leading, order);
        if !r.is_zero() {
            let r = r.monic(order);
            let k = basis.len();
            leading.push(r.leading_term(order).expect("nonzero").0.clone());
            basis.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }

    let (basis, leading) = interreduce(basis, leading, order);
    Ok(GroebnerBasis { ideal: ideal.clone(), basis, leading })
}

fn interreduce(
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
    order: MonomialOrder,
) -> (Vec<Polynomial>, Vec<Monomial>) {
    // drop elements whose leading monomial is a multiple of another one
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant =
            (0..basis.len()).any(|j| j != i && leading[j].divides(&leading[i]) && (leading[j] != leading[i] || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    let mut polys: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();
    let lts: Vec<Monomial> = keep.iter().map(|&i| leading[i].clone()).collect();
    for i in 0..polys.len() {
        let others: Vec<Polynomial> =
            polys.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let other_lts: Vec<Monomial> =
            lts.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, m)| m.clone()).collect();
        let lead = Polynomial::term(polys[i].vars(), lts[i].clone(), Scalar::one());
        let tail = &polys[i] - &lead;
        polys[i] = &lead + &reduce(&tail, &others, &other_lts, order);
    }
    let vars = polys.first().map(|p| p.vars().clone());
    let mut pairs: Vec<(Polynomial, Monomial)> = polys.into_iter().zip(lts).collect();
    if let Some(v) = vars {
        pairs.sort_by(|a, b| order.compare(&v, &b.1, &a.1));
    }
    pairs.into_iter().unzip()
}

/// Finite quotient `Q[vars]/I` described by its staircase.
///
/// The staircase lists monomials in the non-parameter variables only; over
/// the parameter ring it is a free basis whenever the leading monomials are
/// parameter-free.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    gb: GroebnerBasis,
    staircase: Vec<Monomial>,
}

impl QuotientRing {
    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Ascending graded-lex.
    pub fn staircase(&self) -> &[Monomial] {
        &self.staircase
    }

    pub fn rank(&self) -> usize {
        self.staircase.len()
    }

    pub fn vars(&self) -> &Vars {
        self.gb.vars()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb.normal_form(f)
    }

    /// Normal form of the product.
    pub fn multiply(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.gb.normal_form(&(a * b))
    }

    pub fn basis_element(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self.vars(), self.staircase[i].clone())
    }

    pub fn basis_elements(&self) -> Vec<Polynomial> {
        (0..self.rank()).map(|i| self.basis_element(i)).collect()
    }
}

pub fn staircase_basis(gb: &GroebnerBasis) -> Result<QuotientRing, GroebnerError> {
    let vars = gb.vars().clone();
    let nv = vars.len();
    let divisor: Vec<usize> = vars.divisor_indices().collect();
    let mut bounds = vec![0u32; nv];
    for &i in &divisor {
        let pure =
            gb.leading_monomials().iter().filter(|m| (0..nv).all(|j| j == i || m.exp(j) == 0)).map(|m| m.exp(i)).min();
        match pure {
            Some(e) => bounds[i] = e,
            None => return Err(GroebnerError::InfiniteStaircase(vars.name(i).to_string())),
        }
    }
    let mut stairs = Vec::new();
    let mut exps = vec![0u32; nv];
    enumerate_box(&divisor, &bounds, 0, &mut exps, &mut |m| {
        if !gb.leading_monomials().iter().any(|lt| lt.divides(m)) {
            stairs.push(m.clone());
        }
    });
    stairs.sort_by(|a, b| MonomialOrder::GradedLex.compare(&vars, a, b));
    Ok(QuotientRing { gb: gb.clone(), staircase: stairs })
}

fn enumerate_box(idx: &[usize], bounds: &[u32], k: usize, exps: &mut Vec<u32>, f: &mut dyn FnMut(&Monomial)) {
    if k == idx.len() {
        f(&Monomial::new(exps.clone()));
        return;
    }
    let i = idx[k];
    for e in 0..bounds[i] {
        exps[i] = e;
        enumerate_box(idx, bounds, k + 1, exps, f);
    }
    exps[i] = 0;
}

/// True iff the two ideals coincide, tested by mutual membership of generators.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    if !a.generators[0].same_vars(&b.vars) || a.order != b.order {
        return Err(GroebnerError::VariableSetMismatch);
    }
    let ga = buchberger(a)?;
    let gb = buchberger(b)?;
    Ok(a.generators.iter().all(|g| gb.contains(g)) && b.generators.iter().all(|g| ga.contains(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VariableSet;
    use proptest::prelude::*;

    fn p(v: &Vars, s: &str) -> Polynomial {
        Polynomial::parse(v, s).unwrap()
    }

    fn classical(v: &Vars) -> Ideal {
        Ideal::new(vec![p(v, "h^4"), p(v, "xi^2 - 3*h*xi + 2*h^2")], MonomialOrder::Lex).unwrap()
    }

    fn deformed(v: &Vars, order: MonomialOrder) -> Ideal {
        Ideal::new(vec![p(v, "h^4 - (xi - 2*h)*q2"), p(v, "xi^2 - 3*h*xi + 2*h^2 - q1")], order).unwrap()
    }

    #[test]
    fn coprime_leading_terms_give_the_generators_back() {
        let v = VariableSet::bundle(3, 2);
        let gb = buchberger(&classical(&v)).unwrap();
        assert_eq!(gb.basis(), &[p(&v, "xi^2 - 3*h*xi + 2*h^2"), p(&v, "h^4")]);
        assert!(gb.is_groebner() && gb.is_reduced());
    }

    #[test]
    fn principal_ideal_is_made_monic() {
        let v = VariableSet::bundle(3, 2);
        let f = p(&v, "3*h^2 - 6*xi*h");
        let gb = buchberger(&Ideal::new(vec![f.clone()], MonomialOrder::Lex).unwrap()).unwrap();
        assert_eq!(gb.basis(), &[f.scale(&Scalar::ratio(-1, 6))]);
    }

    #[test]
    fn deformed_ideal_keeps_classical_leading_terms() {
        let v = VariableSet::bundle(3, 2);
        let gb = buchberger(&deformed(&v, MonomialOrder::DivisorGradedLex)).unwrap();
        let lts: Vec<String> = gb
            .basis()
            .iter()
            .map(|g| Polynomial::monomial(&v, g.leading_term(gb.order()).unwrap().0.clone()).to_string())
            .collect();
        assert_eq!(lts, ["h^4", "xi^2"]);
        assert!(gb.is_groebner() && gb.is_reduced());
        assert_eq!(staircase_basis(&gb).unwrap().rank(), 8);
    }

    #[test]
    fn pure_lex_puts_xi_q2_first() {
        // lex ignores degree, so xi*q2 beats h^4 and the basis grows
        let v = VariableSet::bundle(3, 2);
        let gb = buchberger(&deformed(&v, MonomialOrder::Lex)).unwrap();
        assert!(gb.is_groebner());
        assert!(gb.leading_monomials().contains(&Monomial::new(vec![1, 0, 0, 1])));
    }

    #[test]
    fn normal_forms() {
        let v = VariableSet::bundle(3, 2);
        let cl = buchberger(&classical(&v)).unwrap();
        let de = buchberger(&deformed(&v, MonomialOrder::DivisorGradedLex)).unwrap();
        assert_eq!(cl.normal_form(&p(&v, "xi^2")), p(&v, "3*h*xi - 2*h^2"));
        assert_eq!(de.normal_form(&p(&v, "xi^2")), p(&v, "3*h*xi - 2*h^2 + q1"));
        for g in classical(&v).generators() {
            assert!(cl.normal_form(g).is_zero());
        }
        for g in deformed(&v, MonomialOrder::DivisorGradedLex).generators() {
            assert!(de.normal_form(g).is_zero());
        }
    }

    #[test]
    fn staircases() {
        let v = VariableSet::bundle(3, 2);
        let q = staircase_basis(&buchberger(&classical(&v)).unwrap()).unwrap();
        let names: Vec<String> = q.basis_elements().iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "h", "xi", "h^2", "h*xi", "h^3", "h^2*xi", "h^3*xi"]);

        let w = VariableSet::bundle(6, 3);
        let i = Ideal::new(vec![p(&w, "h^7"), p(&w, "(xi - h)^2*(xi - 2*h)")], MonomialOrder::Lex).unwrap();
        assert_eq!(staircase_basis(&buchberger(&i).unwrap()).unwrap().rank(), 21);

        let one = std::sync::Arc::new(VariableSet::new(vec![("h", 1, false)]).unwrap());
        let q = staircase_basis(&buchberger(&Ideal::new(vec![p(&one, "h")], MonomialOrder::Lex).unwrap()).unwrap())
            .unwrap();
        assert_eq!(q.staircase(), &[Monomial::one(1)]);
    }

    #[test]
    fn infinite_staircase_is_an_error() {
        let v = VariableSet::bundle(3, 2);
        let gb = buchberger(&Ideal::new(vec![p(&v, "h^4")], MonomialOrder::Lex).unwrap()).unwrap();
        assert_eq!(staircase_basis(&gb).unwrap_err(), GroebnerError::InfiniteStaircase("xi".into()));
    }

    #[test]
    fn ideal_equality() {
        let v = VariableSet::bundle(3, 2);
        let f1 = p(&v, "h^4");
        let f2 = p(&v, "xi^2 - 3*h*xi + 2*h^2");
        let a = Ideal::new(vec![f1.clone(), f2.clone()], MonomialOrder::Lex).unwrap();
        let b = Ideal::new(vec![f2.clone(), f1.clone()], MonomialOrder::Lex).unwrap();
        let c = Ideal::new(vec![f1.clone(), &f2 + &(&p(&v, "h") * &f1)], MonomialOrder::Lex).unwrap();
        let d = Ideal::new(vec![f1.clone(), p(&v, "xi^2")], MonomialOrder::Lex).unwrap();
        assert!(ideal_equal(&a, &b).unwrap());
        assert!(ideal_equal(&a, &c).unwrap());
        assert!(!ideal_equal(&a, &d).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let v = VariableSet::bundle(3, 2);
        let tight = Budget { max_degree: 2, max_pairs: 10 };
        let err = buchberger_with_budget(&deformed(&v, MonomialOrder::Lex), tight).unwrap_err();
        assert!(matches!(err, GroebnerError::BudgetExceeded(_)));
        let err = buchberger_with_budget(&deformed(&v, MonomialOrder::Lex), Budget { max_degree: 100, max_pairs: 0 })
            .unwrap_err();
        assert!(matches!(err, GroebnerError::BudgetExceeded(_)));
    }

    #[test]
    fn buchberger_is_idempotent() {
        let v = VariableSet::blowup(3, 2);
        let i = Ideal::new(vec![p(&v, "(k - eta)^4"), p(&v, "k*eta")], MonomialOrder::Lex).unwrap();
        let gb = buchberger(&i).unwrap();
        assert!(gb.is_groebner() && gb.is_reduced());
        let again = buchberger(&Ideal::new(gb.basis().to_vec(), MonomialOrder::Lex).unwrap()).unwrap();
        assert_eq!(again.basis(), gb.basis());
        assert_eq!(staircase_basis(&gb).unwrap().rank(), 8);
    }

    fn small_poly(v: Vars) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0u32..4, 0u32..4, 0u32..2, -3i64..4), 0..4).prop_map(move |ts| {
            Polynomial::from_terms(
                &v,
                ts.into_iter().map(|(a, b, q, c)| (Monomial::new(vec![a, b, q, 0]), Scalar::from_int(c))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn normal_form_laws(f in small_poly(VariableSet::bundle(3, 2)), g in small_poly(VariableSet::bundle(3, 2))) {
            let v = VariableSet::bundle(3, 2);
            let gb = buchberger(&deformed(&v, MonomialOrder::DivisorGradedLex)).unwrap();
            let nf = gb.normal_form(&f);
            prop_assert_eq!(gb.normal_form(&nf), nf.clone());
            prop_assert!(gb.contains(&(&f - &nf)));
            prop_assert!(nf.terms().all(|(m, _)| !gb.leading_monomials().iter().any(|lt| lt.divides(m))));
            prop_assert_eq!(gb.normal_form(&(&f * &g)), gb.normal_form(&(&nf * &gb.normal_form(&g))));
            prop_assert_eq!(gb.normal_form(&(&f + &g)), &nf + &gb.normal_form(&g));
            prop_assert!(nf.is_integral());
        }
    }
}
