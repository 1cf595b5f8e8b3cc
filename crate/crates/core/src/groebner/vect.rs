//! Elements of free modules R^r as flat term lists `(component, monomial,
//! coefficient)` sorted under the position-over-term order: lower component
//! first, ties broken by the ring's monomial order.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::CaResult;
use crate::polycore::field::Field;
use crate::polycore::monomial::Monomial;
use crate::polycore::poly::Polynomial;
use crate::polycore::ring::PolyRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vect<K: Field> {
    pub terms: Vec<(u32, Monomial, K::Elem)>,
}

pub fn cmp_modterm<K: Field>(
    ring: &PolyRing<K>,
    a: &(u32, Monomial),
    b: &(u32, Monomial),
) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => ring.cmp_mono(&a.1, &b.1),
        c => c,
    }
}

impl<K: Field> Vect<K> {
    pub fn zero() -> Self {
        Vect { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(u32, &Monomial, &K::Elem)> {
        self.terms.first().map(|(c, m, a)| (*c, m, a))
    }

    /// Lift a polynomial into component `comp`.
    pub fn from_poly(p: &Polynomial<K>, comp: u32) -> Self {
        Vect {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| (comp, m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Interleave column entries into one sorted vector. `col[i]` goes to
    /// component `offset + i`.
    pub fn from_column(ring: &Arc<PolyRing<K>>, col: &[Polynomial<K>], offset: u32) -> Self {
        let mut terms: Vec<(u32, Monomial, K::Elem)> = Vec::new();
        for (i, p) in col.iter().enumerate() {
            for (m, c) in &p.terms {
                terms.push((offset + i as u32, m.clone(), c.clone()));
            }
        }
        terms.sort_by(|a, b| cmp_term_refs(&**ring, b, a));
        Vect { terms }
    }

    /// Extract components `[from, to)` as polynomials.
    pub fn components(&self, ring: &Arc<PolyRing<K>>, from: u32, to: u32) -> Vec<Polynomial<K>> {
        let mut cols: Vec<Vec<(Monomial, K::Elem)>> = vec![Vec::new(); (to - from) as usize];
        for (c, m, a) in &self.terms {
            if *c >= from && *c < to {
                cols[(*c - from) as usize].push((m.clone(), a.clone()));
            }
        }
        cols.into_iter()
            .map(|ts| Polynomial::from_terms(ring, ts))
            .collect()
    }

    /// True if every term lies in components `>= boundary`.
    pub fn supported_after(&self, boundary: u32) -> bool {
        self.terms.iter().all(|(c, _, _)| *c >= boundary)
    }

    pub fn scale(&self, ring: &PolyRing<K>, s: &K::Elem) -> Self {
        let field = &ring.field;
        Vect {
            terms: self
                .terms
                .iter()
                .map(|(c, m, a)| (*c, m.clone(), field.mul(a, s)))
                .collect(),
        }
    }

    pub fn make_monic(&self, ring: &PolyRing<K>) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, _, lc)) => {
                if ring.field.is_one(lc) {
                    self.clone()
                } else {
                    self.scale(ring, &ring.field.inv(lc))
                }
            }
        }
    }

    /// self - s * x^mono * other; the reduction workhorse.
    pub fn sub_scaled(
        &self,
        ring: &PolyRing<K>,
        other: &Self,
        mono: &Monomial,
        s: &K::Elem,
    ) -> CaResult<Self> {
        let field = &ring.field;
        let cap = ring.degree_cap;
        let mut rhs: Vec<(u32, Monomial, K::Elem)> = Vec::with_capacity(other.terms.len());
        for (c, m, a) in &other.terms {
            rhs.push((*c, m.checked_mul(mono, cap)?, field.mul(a, s)));
        }
        let mut out = Vec::with_capacity(self.terms.len() + rhs.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.terms.len() && j < rhs.len() {
            let ta = &self.terms[i];
            let tb = &rhs[j];
            match cmp_term_refs(ring, ta, tb) {
                Ordering::Greater => {
                    out.push(ta.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((tb.0, tb.1.clone(), field.neg(&tb.2)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.sub(&ta.2, &tb.2);
                    if !field.is_zero(&c) {
                        out.push((ta.0, ta.1.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            rhs[j..]
                .iter()
                .map(|(c, m, a)| (*c, m.clone(), field.neg(a))),
        );
        Ok(Vect { terms: out })
    }

    /// Weighted degree plus per-component twist; `None` for zero.
    pub fn twisted_degree(&self, ring: &PolyRing<K>, twists: &[i64]) -> Option<i64> {
        self.terms
            .iter()
            .map(|(c, m, _)| ring.weighted_degree(m) as i64 + twists[*c as usize])
            .max()
    }

    /// All terms share the same twisted degree (homogeneous vector).
    pub fn is_twist_homogeneous(&self, ring: &PolyRing<K>, twists: &[i64]) -> bool {
        let mut it = self
            .terms
            .iter()
            .map(|(c, m, _)| ring.weighted_degree(m) as i64 + twists[*c as usize]);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }
}

// The clone-heavy cmp calls above are avoided in the engine's hot loop; a
// borrowed comparison is provided for it.
pub fn cmp_term_refs<K: Field>(
    ring: &PolyRing<K>,
    a: &(u32, Monomial, K::Elem),
    b: &(u32, Monomial, K::Elem),
) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => ring.cmp_mono(&a.1, &b.1),
        c => c,
    }
}
