//! The group action: a cyclic group of order `n` acting diagonally with the
//! given exponent weights. A monomial is invariant exactly when its weighted
//! exponent sum vanishes mod `n`, so the root of unity never needs to be
//! represented.

use crate::error::Error;
use crate::monomial::Monomial;

/// Order of the cyclic group plus one weight per ambient variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    n: u64,
    weights: Vec<u64>,
}

impl WeightSystem {
    /// Validates `n >= 3`, `0 < w < n` for every weight, and for three
    /// weights the determinant-one condition `b + c + d = 0 (mod n)`.
    pub fn new(n: u64, weights: Vec<u64>) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::GroupOrderTooSmall { n });
        }
        if weights.len() != 2 && weights.len() != 3 {
            return Err(Error::WeightCount { got: weights.len() });
        }
        for &w in &weights {
            if w == 0 || w >= n {
                return Err(Error::WeightOutOfRange { w, n });
            }
        }
        if weights.len() == 3 {
            let sum: u64 = weights.iter().sum();
            if sum % n != 0 {
                return Err(Error::DeterminantCondition { n, sum });
            }
        }
        Ok(WeightSystem { n, weights })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Ambient dimension (2 or 3).
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Weighted exponent sum of `mon` reduced mod `n`.
    pub fn residue(&self, mon: &Monomial) -> u64 {
        assert_eq!(mon.num_vars(), self.weights.len(), "dimension mismatch");
        let mut acc: u64 = 0;
        for (e, w) in mon.exponents().iter().zip(&self.weights) {
            acc = (acc + (u64::from(*e) % self.n) * (w % self.n)) % self.n;
        }
        acc
    }

    pub fn is_invariant(&self, mon: &Monomial) -> bool {
        self.residue(mon) == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_systems() {
        assert!(WeightSystem::new(10, vec![1, 2]).is_ok());
        assert!(WeightSystem::new(6, vec![1, 2, 3]).is_ok());
        assert!(WeightSystem::new(3, vec![1, 1, 1]).is_ok());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            WeightSystem::new(2, vec![1, 1]),
            Err(Error::GroupOrderTooSmall { n: 2 })
        );
        assert_eq!(
            WeightSystem::new(5, vec![1]),
            Err(Error::WeightCount { got: 1 })
        );
        assert_eq!(
            WeightSystem::new(5, vec![0, 2]),
            Err(Error::WeightOutOfRange { w: 0, n: 5 })
        );
        assert_eq!(
            WeightSystem::new(5, vec![5, 2]),
            Err(Error::WeightOutOfRange { w: 5, n: 5 })
        );
        assert_eq!(
            WeightSystem::new(6, vec![1, 2, 4]),
            Err(Error::DeterminantCondition { n: 6, sum: 7 })
        );
    }

    #[test]
    fn invariance_is_the_congruence() {
        let ws = WeightSystem::new(10, vec![1, 2]).unwrap();
        assert!(ws.is_invariant(&Monomial::new(vec![8, 1])));
        assert!(!ws.is_invariant(&Monomial::new(vec![7, 1])));
        assert!(ws.is_invariant(&Monomial::new(vec![0, 0])));
    }
}
