use std::sync::Arc;

use super::AlgError;

/// Ordered variable list with positive degree weights.
///
/// The order of `names` is the variable precedence used by every monomial
/// order. Variables flagged as parameters (the deformation parameters) are
/// excluded from divisor degrees and from staircase listings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
    weights: Vec<u32>,
    parameter: Vec<bool>,
    display: Vec<usize>,
}

/// Shared handle; polynomials keep one of these.
pub type Vars = Arc<VariableSet>;

impl VariableSet {
    /// Builds a set from `(name, weight, is_parameter)` triples in precedence order.
    pub fn new<S: Into<String>>(vars: Vec<(S, u32, bool)>) -> Result<Self, AlgError> {
        let mut names = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        let mut parameter = Vec::with_capacity(vars.len());
        for (name, w, is_param) in vars {
            let name = name.into();
            if w == 0 {
                return Err(AlgError::Usage(format!("variable `{name}` has weight 0")));
            }
            if !valid_name(&name) {
                return Err(AlgError::Usage(format!("invalid variable name `{name}`")));
            }
            if names.contains(&name) {
                return Err(AlgError::Usage(format!("duplicate variable `{name}`")));
            }
            names.push(name);
            weights.push(w);
            parameter.push(is_param);
        }
        let display = (0..names.len()).collect();
        Ok(VariableSet { names, weights, parameter, display })
    }

    /// Changes the order in which variables are written inside a rendered term.
    /// `display` must be a permutation of `0..len`.
    pub fn with_display_order(mut self, display: Vec<usize>) -> Self {
        let mut sorted = display.clone();
        sorted.sort_unstable();
        assert!(sorted.iter().copied().eq(0..self.len()), "display order is not a permutation");
        self.display = display;
        self
    }

    /// `{xi:1, h:1, q1:r, q2:n}`, rendered as `h*xi*q1*q2`.
    pub fn bundle(n: u32, r: u32) -> Vars {
        Arc::new(
            VariableSet::new(vec![("xi", 1, false), ("h", 1, false), ("q1", r, true), ("q2", n, true)])
                .expect("valid preset")
                .with_display_order(vec![1, 0, 2, 3]),
        )
    }

    /// `{k:1, eta:1, q1:r, q2:n}`.
    pub fn blowup(n: u32, r: u32) -> Vars {
        Arc::new(
            VariableSet::new(vec![("k", 1, false), ("eta", 1, false), ("q1", r, true), ("q2", n, true)])
                .expect("valid preset"),
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_parameter(&self, i: usize) -> bool {
        self.parameter[i]
    }

    pub fn display_order(&self) -> &[usize] {
        &self.display
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Indices of the non-parameter variables.
    pub fn divisor_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| !self.parameter[i])
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_carry_fano_weights() {
        let b = VariableSet::bundle(6, 3);
        assert_eq!(b.names(), ["xi", "h", "q1", "q2"]);
        assert_eq!(b.weights(), [1, 1, 3, 6]);
        assert!(b.is_parameter(2) && b.is_parameter(3));
        assert_eq!(b.divisor_indices().collect::<Vec<_>>(), vec![0, 1]);
        let k = VariableSet::blowup(3, 2);
        assert_eq!(k.index_of("eta"), Some(1));
        assert_ne!(*VariableSet::bundle(3, 2), *VariableSet::bundle(6, 3));
    }

    #[test]
    fn rejects_bad_sets() {
        assert!(VariableSet::new(vec![("x", 0, false)]).is_err());
        assert!(VariableSet::new(vec![("x", 1, false), ("x", 2, false)]).is_err());
        assert!(VariableSet::new(vec![("2x", 1, false)]).is_err());
    }
}
