//! Monomials as exponent vectors.

/// A monomial over a fixed list of variables. The variable meaning (ambient
/// `x, y, z` or presentation `U_i` / `A, B_i`) comes from context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1.
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    /// The single variable `var`.
    pub fn var(var: usize, num_vars: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[var] = 1;
        Monomial { exps }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree (every variable counted with degree 1).
    pub fn polydeg(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Degree under a per-variable grading.
    pub fn wdeg(&self, grading: &[u64]) -> u64 {
        assert_eq!(self.exps.len(), grading.len(), "dimension mismatch");
        self.exps
            .iter()
            .zip(grading)
            .map(|(&e, &d)| u64::from(e).checked_mul(d).expect("degree overflow"))
            .try_fold(0u64, |acc, t| acc.checked_add(t))
            .expect("degree overflow")
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "dimension mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Raises to the `k`-th power.
    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "dimension mismatch");
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn try_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&divisor.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "dimension mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    /// True when no variable occurs in both monomials.
    pub fn coprime(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "dimension mismatch");
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Renders with the given variable names, e.g. `x^8y` or `1`.
    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(self.exps.len(), names.len(), "dimension mismatch");
        let mut out = String::new();
        for (name, &e) in names.iter().zip(&self.exps) {
            match e {
                0 => {}
                1 => out.push_str(name),
                _ => {
                    out.push_str(name);
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}
