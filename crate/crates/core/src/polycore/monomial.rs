//! Monomials with fixed-width exponents and the monomial orders the
//! toolkit supports.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{CaError, CaResult};

/// Exponent vector. Most rings here have at most 16 variables (X block plus
/// T block plus an occasional auxiliary variable), so exponents stay inline.
pub type Exponents = SmallVec<[u16; 16]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Monomial {
    pub exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: std::iter::repeat_n(0, nvars).collect(),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial {
            exps: exps.iter().copied().collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree (unweighted).
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    pub fn checked_mul(&self, rhs: &Monomial, cap: u32) -> CaResult<Monomial> {
        let mut exps = Exponents::with_capacity(self.exps.len());
        let mut deg: u32 = 0;
        for (a, b) in self.exps.iter().zip(rhs.exps.iter()) {
            let e = *a as u32 + *b as u32;
            deg += e;
            if e > u16::MAX as u32 {
                return Err(CaError::DegreeCapExceeded { degree: e, cap });
            }
            exps.push(e as u16);
        }
        if deg > cap {
            return Err(CaError::DegreeCapExceeded { degree: deg, cap });
        }
        Ok(Monomial { exps })
    }

    pub fn divides(&self, rhs: &Monomial) -> bool {
        self.exps.iter().zip(rhs.exps.iter()).all(|(a, b)| a <= b)
    }

    /// rhs / self, assuming divisibility.
    pub fn quotient_into(&self, rhs: &Monomial) -> Monomial {
        debug_assert!(self.divides(rhs));
        Monomial {
            exps: rhs
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(rhs.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(rhs.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, rhs: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(rhs.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree in the variable block `[from, to)`.
    pub fn block_degree(&self, from: usize, to: usize) -> u32 {
        self.exps[from..to].iter().map(|&e| e as u32).sum()
    }
}

/// Total orders on monomials. All of them refine divisibility.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic (the default working order).
    DegRevLex,
    /// Pure lexicographic.
    Lex,
    /// Eliminate the first `b` variables: degrevlex on that block first,
    /// ties broken by degrevlex on the rest. Any monomial touching the
    /// first block beats every monomial supported on the remaining
    /// variables.
    Block(usize),
    /// Degrevlex with the ring's per-variable weights.
    WeightedDegRevLex,
}

impl MonomialOrder {
    pub fn cmp(
        &self,
        a: &Monomial,
        b: &Monomial,
        weights: &[u32],
    ) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self {
            MonomialOrder::DegRevLex => degrevlex(&a.exps, &b.exps),
            MonomialOrder::Lex => a.exps.iter().cmp(b.exps.iter()),
            MonomialOrder::Block(bnd) => {
                let pa = &a.exps[..*bnd];
                let pb = &b.exps[..*bnd];
                match degrevlex(pa, pb) {
                    Ordering::Equal => degrevlex(&a.exps[*bnd..], &b.exps[*bnd..]),
                    c => c,
                }
            }
            MonomialOrder::WeightedDegRevLex => {
                let da = a.weighted_degree(weights);
                let db = b.weighted_degree(weights);
                match da.cmp(&db) {
                    Ordering::Equal => revlex_tie(&a.exps, &b.exps),
                    c => c,
                }
            }
        }
    }
}

fn degrevlex(a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        std::cmp::Ordering::Equal => revlex_tie(a, b),
        c => c,
    }
}

// Reverse lexicographic tie-break: the monomial with the smaller exponent
// in the last position where they differ is the larger one.
fn revlex_tie(a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    std::cmp::Ordering::Equal
}
