use std::hash::{Hash, Hasher};

/// Exponent vector together with its cached total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn variable(nvars: usize, index: usize, power: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = power;
        Monomial { exps, degree: power }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * n).collect(),
            degree: self.degree * n,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Weighted degree against a nonnegative weight vector.
    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps.iter().zip(weights).map(|(e, w)| u64::from(*e) * u64::from(*w)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(vec![2, 0, 1]);
        let b = Monomial::new(vec![3, 1, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.divide_into(&b), Some(Monomial::new(vec![1, 1, 0])));
        assert_eq!(a.lcm(&Monomial::new(vec![0, 4, 0])), Monomial::new(vec![2, 4, 1]));
        assert_eq!(a.pow(3).degree(), 9);
        assert!(Monomial::new(vec![1, 0, 0]).is_coprime(&Monomial::new(vec![0, 2, 1])));
    }
}
