//! Nonnegative gradings under which an ideal is homogeneous.
//!
//! If every generator is homogeneous for a family of nonnegative weight
//! vectors, a basis only needs the elements whose weighted degrees stay
//! componentwise below those of the element being tested: reductions of a
//! term of degree `D` only ever use basis elements of degree `≤ D`, and those
//! arise from pairs whose lcm has degree `≤ D`.

use crate::polyring::{Monomial, Polynomial};

/// Variable counts above this only get the total-degree grading.
const MAX_MASK_VARS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    weights: Vec<Vec<u32>>,
}

impl Grading {
    /// Total degree plus every 0/1 weight vector for which all `polys` are
    /// homogeneous. `None` if some polynomial is not even homogeneous in the
    /// total degree.
    pub fn detect(polys: &[Polynomial]) -> Option<Grading> {
        let nonzero: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
        let n = nonzero.first().map(|p| p.ring().nvars())?;
        if !nonzero.iter().all(|p| p.is_homogeneous()) {
            return None;
        }
        let mut weights = vec![vec![1u32; n]];
        if n <= MAX_MASK_VARS {
            for mask in 1u32..(1u32 << n) - 1 {
                let w: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
                if nonzero.iter().all(|p| is_homogeneous_for(p, &w)) {
                    weights.push(w);
                }
            }
        }
        Some(Grading { weights })
    }

    pub fn weights(&self) -> &[Vec<u32>] {
        &self.weights
    }

    pub fn degree(&self, m: &Monomial) -> Vec<u64> {
        self.weights.iter().map(|w| m.weighted_degree(w)).collect()
    }

    /// Componentwise maximum of the degrees of all terms of `f`.
    pub fn bound_for(&self, f: &Polynomial) -> Vec<u64> {
        let mut bound = vec![0u64; self.weights.len()];
        for (m, _) in f.terms() {
            for (b, d) in bound.iter_mut().zip(self.degree(m)) {
                *b = (*b).max(d);
            }
        }
        bound
    }

    pub fn within(&self, m: &Monomial, bound: &[u64]) -> bool {
        self.weights.iter().zip(bound).all(|(w, b)| m.weighted_degree(w) <= *b)
    }
}

fn is_homogeneous_for(p: &Polynomial, w: &[u32]) -> bool {
    let mut degs = p.terms().iter().map(|(m, _)| m.weighted_degree(w));
    match degs.next() {
        None => true,
        Some(d) => degs.all(|e| e == d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RingSpec;

    #[test]
    fn detects_column_and_row_gradings_of_minors() {
        let r = RingSpec::integers(&["u", "v", "w", "x", "y", "z"]).unwrap();
        let gens: Vec<Polynomial> = ["v*z - w*y", "w*x - u*z", "u*y - v*x"]
            .iter()
            .map(|s| Polynomial::parse(s, &r).unwrap())
            .collect();
        let g = Grading::detect(&gens).unwrap();
        assert!(g.weights().contains(&vec![1, 0, 0, 1, 0, 0]));
        assert!(g.weights().contains(&vec![1, 1, 1, 0, 0, 0]));
        assert!(!g.weights().contains(&vec![1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn inhomogeneous_input_has_no_grading() {
        let r = RingSpec::integers(&["x"]).unwrap();
        assert!(Grading::detect(&[Polynomial::parse("x - 1", &r).unwrap()]).is_none());
    }
}
