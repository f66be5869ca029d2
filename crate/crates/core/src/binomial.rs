//! Differences of two monomials, multivariate division by a set of them, and
//! the S-pair test used to certify Groebner bases.
//!
//! Coefficients never leave {+1, -1}: reducing a difference of monomials by
//! differences of monomials yields another difference, a single monomial, or
//! zero, so the whole calculus stays coefficient-free. A single-monomial
//! result is reported up to overall sign.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::monomial::Monomial;
use crate::ring::AmbientRing;

/// `lead - tail` with `lead` strictly greater under the ring order, or a bare
/// monomial when `tail` is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    lead: Monomial,
    tail: Option<Monomial>,
}

impl Binomial {
    /// Builds `a - b` ordered by the ring; `None` when `a == b`.
    pub fn difference(a: Monomial, b: Monomial, ring: &AmbientRing) -> Option<Binomial> {
        match ring.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial {
                lead: a,
                tail: Some(b),
            }),
            Ordering::Less => Some(Binomial {
                lead: b,
                tail: Some(a),
            }),
            Ordering::Equal => None,
        }
    }

    pub fn monomial(m: Monomial) -> Binomial {
        Binomial {
            lead: m,
            tail: None,
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> Option<&Monomial> {
        self.tail.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.tail.is_none()
    }

    /// Both terms have the same degree under the ring grading.
    pub fn is_homogeneous(&self, ring: &AmbientRing) -> bool {
        match &self.tail {
            Some(t) => ring.wdeg(&self.lead) == ring.wdeg(t),
            None => true,
        }
    }

    pub fn render(&self, names: &[&str]) -> String {
        match &self.tail {
            Some(t) => format!("{} - {}", self.lead.render(names), t.render(names)),
            None => self.lead.render(names),
        }
    }
}

/// Divisibility index over a basis: quadratic leads are looked up by their
/// variable pair, anything else is scanned. Always returns the matching
/// basis element of least index, so reduction is deterministic and behaves
/// as a first-match scan of the basis list.
pub struct ReducerIndex<'a> {
    basis: &'a [Binomial],
    quad: HashMap<(usize, usize), usize>,
    general: Vec<usize>,
}

impl<'a> ReducerIndex<'a> {
    pub fn new(basis: &'a [Binomial]) -> Self {
        let mut quad = HashMap::new();
        let mut general = Vec::new();
        for (idx, b) in basis.iter().enumerate() {
            let lead = b.lead();
            if lead.polydeg() == 2 {
                let sup = lead.support();
                let key = if sup.len() == 2 {
                    (sup[0], sup[1])
                } else {
                    (sup[0], sup[0])
                };
                // Keep the earliest basis element per lead pair.
                quad.entry(key).or_insert(idx);
            } else {
                general.push(idx);
            }
        }
        ReducerIndex {
            basis,
            quad,
            general,
        }
    }

    /// Least basis index whose lead divides `term`.
    fn find(&self, term: &Monomial) -> Option<usize> {
        let sup = term.support();
        let mut best: Option<usize> = None;
        let mut consider = |idx: usize| {
            if best.map_or(true, |b| idx < b) {
                best = Some(idx);
            }
        };
        for (a, &va) in sup.iter().enumerate() {
            for &vb in &sup[a..] {
                if va == vb && term.exp(va) < 2 {
                    continue;
                }
                if let Some(&idx) = self.quad.get(&(va, vb)) {
                    consider(idx);
                }
            }
        }
        for &idx in &self.general {
            if self.basis[idx].lead().divides(term) {
                consider(idx);
            }
        }
        best
    }
}

/// Rewrites `term` by the rule `lead -> tail` of `g`; `None` erases the term
/// (monomial rewriter).
fn rewrite(term: &Monomial, g: &Binomial) -> Option<Monomial> {
    let cofactor = term.try_div(g.lead()).expect("rewrite without divisibility");
    g.tail().map(|t| cofactor.mul(t))
}

/// Working state of a reduction: at most one positive and one negative term.
struct TwoTerms {
    plus: Option<Monomial>,
    minus: Option<Monomial>,
}

impl TwoTerms {
    fn cancel_if_equal(&mut self) {
        if let (Some(p), Some(m)) = (&self.plus, &self.minus) {
            if p == m {
                self.plus = None;
                self.minus = None;
            }
        }
    }
}

fn reduce_two_terms(
    mut f: TwoTerms,
    index: &ReducerIndex<'_>,
    ring: &AmbientRing,
) -> Option<Binomial> {
    loop {
        f.cancel_if_equal();
        // Order the live terms lead-first, then try to rewrite the first
        // reducible one and restart.
        let mut slots: Vec<bool> = Vec::new(); // true = plus slot
        match (&f.plus, &f.minus) {
            (Some(p), Some(m)) => {
                if ring.cmp(p, m) == Ordering::Greater {
                    slots.extend([true, false]);
                } else {
                    slots.extend([false, true]);
                }
            }
            (Some(_), None) => slots.push(true),
            (None, Some(_)) => slots.push(false),
            (None, None) => return None,
        }
        let mut rewritten = false;
        for is_plus in slots {
            let term = if is_plus { &f.plus } else { &f.minus };
            let term = term.as_ref().unwrap();
            if let Some(idx) = index.find(term) {
                let new = rewrite(term, &index.basis[idx]);
                if is_plus {
                    f.plus = new;
                } else {
                    f.minus = new;
                }
                rewritten = true;
                break;
            }
        }
        if !rewritten {
            break;
        }
    }
    match (f.plus, f.minus) {
        (None, None) => None,
        (Some(p), None) => Some(Binomial::monomial(p)),
        (None, Some(m)) => Some(Binomial::monomial(m)),
        (Some(p), Some(m)) => {
            Some(Binomial::difference(p, m, ring).expect("equal terms survived cancellation"))
        }
    }
}

/// Fully reduces `f` against `basis`: repeatedly rewrites any term divisible
/// by a basis lead, lead term first, restarting after every rewrite. Returns
/// the normal form, or `None` when `f` reduces to zero.
pub fn normal_form(f: &Binomial, basis: &[Binomial], ring: &AmbientRing) -> Option<Binomial> {
    let index = ReducerIndex::new(basis);
    normal_form_indexed(f, &index, ring)
}

/// `normal_form` against a prebuilt index (for callers reducing many elements
/// against the same basis).
pub fn normal_form_indexed(
    f: &Binomial,
    index: &ReducerIndex<'_>,
    ring: &AmbientRing,
) -> Option<Binomial> {
    let state = TwoTerms {
        plus: Some(f.lead().clone()),
        minus: f.tail().cloned(),
    };
    reduce_two_terms(state, index, ring)
}

/// Outcome of an S-pair reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SPairCheck {
    pub reduces_to_zero: bool,
    /// The pair was skipped by the coprime-lead criterion.
    pub skipped_coprime: bool,
}

/// Forms the S-polynomial of `f` and `g` and reduces it against `basis`.
/// Pairs with coprime leads are skipped (they always reduce) and the
/// shortcut is recorded.
pub fn s_pair_check(
    f: &Binomial,
    g: &Binomial,
    basis: &[Binomial],
    ring: &AmbientRing,
) -> SPairCheck {
    let index = ReducerIndex::new(basis);
    s_pair_check_indexed(f, g, &index, ring)
}

pub fn s_pair_check_indexed(
    f: &Binomial,
    g: &Binomial,
    index: &ReducerIndex<'_>,
    ring: &AmbientRing,
) -> SPairCheck {
    if f.lead().coprime(g.lead()) {
        return SPairCheck {
            reduces_to_zero: true,
            skipped_coprime: true,
        };
    }
    let l = f.lead().lcm(g.lead());
    let uf = l.try_div(f.lead()).unwrap();
    let ug = l.try_div(g.lead()).unwrap();
    // S = (l / lead f) * f - (l / lead g) * g; the lead terms cancel, leaving
    // the scaled tails with opposite signs.
    let state = TwoTerms {
        plus: g.tail().map(|t| ug.mul(t)),
        minus: f.tail().map(|t| uf.mul(t)),
    };
    SPairCheck {
        reduces_to_zero: reduce_two_terms(state, index, ring).is_none(),
        skipped_coprime: false,
    }
}

/// Whether the S-polynomial of `f` and `g` reduces to zero against `basis`.
pub fn s_pair_reduces(f: &Binomial, g: &Binomial, basis: &[Binomial], ring: &AmbientRing) -> bool {
    s_pair_check(f, g, basis, ring).reduces_to_zero
}
