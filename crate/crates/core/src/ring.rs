//! The presentation ring: graded variables plus one of the two custom
//! monomial orders the relation ideals are built around.

use std::cmp::Ordering;

use crate::error::Error;
use crate::monomial::Monomial;

/// Which monomial order the ring carries.
///
/// Both orders compare the graded (weighted) degree first. On ties:
///
/// * `Order2D` looks at the largest variable index where the exponents
///   differ; the monomial with the smaller exponent there is smaller.
/// * `Order3D` first prefers the variable at index 0 (`A`): of two monomials
///   of equal degree, the one with the *higher* `A`-exponent is *smaller*.
///   Remaining ties scan the exponents of `B_1 ... B_{r+s}` followed by
///   `B_m, B_{m-1}, ..., B_{r+s+1}`; the largest position in that sequence
///   where the exponents differ decides, smaller exponent losing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderSpec {
    Order2D,
    Order3D { r: usize, s: usize, t: usize },
}

/// A polynomial ring with positive per-variable degrees and a fixed order.
///
/// For `Order3D { r, s, t }` the variable at index 0 is `A` and the variables
/// at indices `1..=r+s+t` are `B_1, ..., B_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientRing {
    grading: Vec<u64>,
    order: OrderSpec,
}

impl AmbientRing {
    pub fn new(grading: Vec<u64>, order: OrderSpec) -> Self {
        assert!(
            grading.iter().all(|&d| d > 0),
            "grading entries must be positive"
        );
        if let OrderSpec::Order3D { r, s, t } = order {
            assert_eq!(
                grading.len(),
                1 + r + s + t,
                "Order3D needs 1 + r + s + t variables"
            );
        }
        AmbientRing { grading, order }
    }

    pub fn num_vars(&self) -> usize {
        self.grading.len()
    }

    pub fn grading(&self) -> &[u64] {
        &self.grading
    }

    pub fn order_spec(&self) -> OrderSpec {
        self.order
    }

    pub fn wdeg(&self, m: &Monomial) -> u64 {
        m.wdeg(&self.grading)
    }

    /// Compares two monomials of this ring under the ring's order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.num_vars(), self.num_vars(), "dimension mismatch");
        assert_eq!(b.num_vars(), self.num_vars(), "dimension mismatch");
        let bydeg = self.wdeg(a).cmp(&self.wdeg(b));
        if bydeg != Ordering::Equal {
            return bydeg;
        }
        match self.order {
            OrderSpec::Order2D => {
                for i in (0..self.num_vars()).rev() {
                    if a.exp(i) != b.exp(i) {
                        return a.exp(i).cmp(&b.exp(i));
                    }
                }
                Ordering::Equal
            }
            OrderSpec::Order3D { r, s, t } => {
                // Higher A-exponent is smaller.
                if a.exp(0) != b.exp(0) {
                    return b.exp(0).cmp(&a.exp(0));
                }
                let m = r + s + t;
                for pos in (1..=m).rev() {
                    let v = if pos <= r + s { pos } else { m + r + s + 1 - pos };
                    if a.exp(v) != b.exp(v) {
                        return a.exp(v).cmp(&b.exp(v));
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Field characteristic for homology: 0 (rationals) or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChar {
    Zero,
    Prime(u64),
}

impl FieldChar {
    pub fn validate(self) -> Result<Self, Error> {
        match self {
            FieldChar::Zero => Ok(self),
            FieldChar::Prime(p) => {
                if p < 2 || p >= (1 << 31) || !is_prime(p) {
                    Err(Error::Characteristic { p })
                } else {
                    Ok(self)
                }
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
