use std::cmp::Ordering;

use super::vars::VariableSet;

/// Exponent vector, one entry per variable of the owning [`VariableSet`].
///
/// The derived `Ord` is lex by variable precedence; use [`MonomialOrder`] for
/// anything order-sensitive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, vars: &VariableSet) -> u32 {
        self.0.iter().zip(vars.weights()).map(|(e, w)| e * w).sum()
    }

    /// Total degree in the non-parameter variables.
    pub fn divisor_degree(&self, vars: &VariableSet) -> u32 {
        vars.divisor_indices().map(|i| self.0[i]).sum()
    }

    /// True when no parameter variable occurs.
    pub fn is_parameter_free(&self, vars: &VariableSet) -> bool {
        (0..vars.len()).all(|i| !vars.is_parameter(i) || self.0[i] == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders over a [`VariableSet`]; precedence is the set's variable order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    /// Weighted degree, ties broken lex.
    GradedLex,
    /// Weighted degree, ties broken by reverse lex from the last variable.
    GradedRevLex,
    /// Total degree in the non-parameter variables, ties broken lex.
    ///
    /// Deformation terms carry parameters and therefore have lower divisor
    /// degree than the classical part of a relation, so leading terms of a
    /// deformed ideal agree with those of its classical specialization.
    #[default]
    DivisorGradedLex,
}

impl MonomialOrder {
    pub fn compare(self, vars: &VariableSet, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), vars.len());
        debug_assert_eq!(b.len(), vars.len());
        match self {
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::GradedLex => {
                a.weighted_degree(vars).cmp(&b.weighted_degree(vars)).then_with(|| a.exps().cmp(b.exps()))
            }
            MonomialOrder::GradedRevLex => a.weighted_degree(vars).cmp(&b.weighted_degree(vars)).then_with(|| {
                for (x, y) in a.exps().iter().zip(b.exps()).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::DivisorGradedLex => {
                a.divisor_degree(vars).cmp(&b.divisor_degree(vars)).then_with(|| a.exps().cmp(b.exps()))
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GradedLex => "graded-lex",
            MonomialOrder::GradedRevLex => "graded-reverse-lex",
            MonomialOrder::DivisorGradedLex => "divisor-graded-lex",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bundle() -> std::sync::Arc<VariableSet> {
        VariableSet::bundle(3, 2)
    }

    const ALL: [MonomialOrder; 4] =
        [MonomialOrder::Lex, MonomialOrder::GradedLex, MonomialOrder::GradedRevLex, MonomialOrder::DivisorGradedLex];

    #[test]
    fn spec_comparisons() {
        let v = bundle();
        let xi = Monomial::var(4, 0, 1);
        let h3 = Monomial::var(4, 1, 3);
        assert_eq!(MonomialOrder::Lex.compare(&v, &xi, &h3), Ordering::Greater);
        assert_eq!(MonomialOrder::GradedLex.compare(&v, &xi, &h3), Ordering::Less);
        for o in ALL {
            assert_eq!(o.compare(&v, &h3, &h3), Ordering::Equal);
        }
    }

    #[test]
    fn divisor_order_puts_parameters_last() {
        let v = bundle();
        // h^4 against xi*q2
        let h4 = Monomial::new(vec![0, 4, 0, 0]);
        let xiq2 = Monomial::new(vec![1, 0, 0, 1]);
        assert_eq!(MonomialOrder::Lex.compare(&v, &h4, &xiq2), Ordering::Less);
        assert_eq!(MonomialOrder::DivisorGradedLex.compare(&v, &h4, &xiq2), Ordering::Greater);
    }

    #[test]
    fn grevlex_tiebreak() {
        let v = VariableSet::new(vec![("x", 1, false), ("y", 1, false), ("z", 1, false)]).unwrap();
        // x*z < y^2 in grevlex, x*z > y^2 in grlex
        let xz = Monomial::new(vec![1, 0, 1]);
        let y2 = Monomial::new(vec![0, 2, 0]);
        assert_eq!(MonomialOrder::GradedRevLex.compare(&v, &xz, &y2), Ordering::Less);
        assert_eq!(MonomialOrder::GradedLex.compare(&v, &xz, &y2), Ordering::Greater);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..5, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_total_with_one_minimal(a in mono(), b in mono(), c in mono()) {
            let v = bundle();
            let one = Monomial::one(4);
            for o in ALL {
                let ab = o.compare(&v, &a, &b);
                prop_assert_eq!(ab, o.compare(&v, &b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.compare(&v, &a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(o.compare(&v, &one, &a), Ordering::Greater);
            }
        }
    }
}
