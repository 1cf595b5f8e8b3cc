//! Sparse multivariate polynomials as order-sorted term lists.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::CaResult;
use crate::polycore::field::Field;
use crate::polycore::monomial::Monomial;
use crate::polycore::ring::PolyRing;

/// Terms are kept sorted strictly descending in the ring's order, with no
/// zero coefficients, so `terms[0]` is the lead term.
#[derive(Clone, Debug)]
pub struct Polynomial<K: Field> {
    ring: Arc<PolyRing<K>>,
    pub terms: Vec<(Monomial, K::Elem)>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &Arc<PolyRing<K>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing<K>>, c: K::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn one(ring: &Arc<PolyRing<K>>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Arc<PolyRing<K>>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i), ring.field.one())],
        }
    }

    pub fn term(ring: &Arc<PolyRing<K>>, mono: Monomial, c: K::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(mono, c)],
        }
    }

    /// Build from an arbitrary term list: sorts, merges equal monomials,
    /// drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing<K>>, mut terms: Vec<(Monomial, K::Elem)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_mono(&b.0, &a.0));
        let mut out: Vec<(Monomial, K::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = ring.field.add(lc, &c);
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !ring.field.is_zero(c));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, K::Elem)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Weighted total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        let ring = self.ring();
        self.terms
            .iter()
            .map(|(m, _)| ring.weighted_degree(m))
            .max()
    }

    /// Smallest weighted degree among the terms (the order of the
    /// polynomial at the origin), `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        let ring = self.ring();
        self.terms
            .iter()
            .map(|(m, _)| ring.weighted_degree(m))
            .min()
    }

    /// Weighted degree shared by all terms, if the polynomial is
    /// homogeneous; `Some(0)` for zero by convention.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let ring = self.ring();
        let mut it = self.terms.iter().map(|(m, _)| ring.weighted_degree(m));
        match it.next() {
            None => Some(0),
            Some(d) => {
                if it.all(|e| e == d) {
                    Some(d)
                } else {
                    None
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.ring().compatible(other.ring()),
            "operands live in different rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        self.merged(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        self.merged(other, true)
    }

    fn merged(&self, other: &Self, negate_rhs: bool) -> Self {
        let ring = self.ring();
        let field = &ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ring.cmp_mono(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_rhs { field.neg(cb) } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs {
                        field.sub(ca, cb)
                    } else {
                        field.add(ca, cb)
                    };
                    if !field.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (mb, cb) in &other.terms[j..] {
            let c = if negate_rhs { field.neg(cb) } else { cb.clone() };
            out.push((mb.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let field = &self.ring().field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let field = &self.ring().field;
        if field.is_zero(c) {
            return Self::zero(self.ring());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(a, c)))
                .collect(),
        }
    }

    /// self * c * x^mono. Term order is preserved by monomial translation.
    pub fn mul_term(&self, mono: &Monomial, c: &K::Elem) -> CaResult<Self> {
        let ring = self.ring();
        let field = &ring.field;
        if field.is_zero(c) {
            return Ok(Self::zero(ring));
        }
        let cap = ring.degree_cap;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, a) in &self.terms {
            terms.push((m.checked_mul(mono, cap)?, field.mul(a, c)));
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &Self) -> CaResult<Self> {
        self.assert_same_ring(other);
        let ring = self.ring();
        let field = &ring.field;
        let cap = ring.degree_cap;
        // accumulate all products, then canonicalize once
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.checked_mul(mb, cap)?, field.mul(ca, cb)));
            }
        }
        Ok(Self::from_terms(ring, terms))
    }

    /// self - c * x^mono * g; the workhorse of polynomial reduction.
    pub fn sub_scaled(&self, g: &Self, mono: &Monomial, c: &K::Elem) -> CaResult<Self> {
        Ok(self.merged(&g.mul_term(mono, c)?, true))
    }

    pub fn make_monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some((_, lc)) => {
                let field = &self.ring().field;
                if field.is_one(lc) {
                    self.clone()
                } else {
                    self.scale(&field.inv(lc))
                }
            }
        }
    }

    /// Formal partial derivative; in characteristic p, exponents divisible
    /// by p annihilate.
    pub fn derivative(&self, var: usize) -> Self {
        let ring = self.ring();
        let field = &ring.field;
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e == 0 {
                continue;
            }
            let coeff = field.mul(c, &field.from_i64(e as i64));
            if field.is_zero(&coeff) {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[var] = e - 1;
            terms.push((Monomial { exps }, coeff));
        }
        Self::from_terms(ring, terms)
    }

    /// Push this polynomial into `target` along a variable map: variable
    /// `i` of the source becomes variable `var_map[i]`. Exponents landing
    /// on the same target variable accumulate.
    pub fn map_into(&self, target: &Arc<PolyRing<K>>, var_map: &[usize]) -> Self {
        assert_eq!(var_map.len(), self.ring().nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = Monomial::one(n).exps;
                for (i, &e) in m.exps.iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                (Monomial { exps }, c.clone())
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Evaluate at a point (full substitution by scalars).
    pub fn eval(&self, point: &[K::Elem]) -> K::Elem {
        let ring = self.ring();
        let field = &ring.field;
        assert_eq!(point.len(), ring.nvars());
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    v = field.mul(&v, &point[i]);
                }
            }
            acc = field.add(&acc, &v);
        }
        acc
    }

    /// Support: which variables actually occur.
    pub fn uses_only(&self, allowed: &[bool]) -> bool {
        self.terms.iter().all(|(m, _)| {
            m.exps
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || allowed[i])
        })
    }

    /// Degree in a block of variables `[from, to)`, `None` if zero.
    pub fn block_degree(&self, from: usize, to: usize) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| m.block_degree(from, to))
            .max()
    }

    /// All terms share the same degree in the block; `Some(0)` for zero.
    pub fn homogeneous_block_degree(&self, from: usize, to: usize) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.block_degree(from, to));
        match it.next() {
            None => Some(0),
            Some(d) => it.all(|e| e == d).then_some(d),
        }
    }

    pub fn render(&self) -> String {
        let ring = self.ring();
        let field = &ring.field;
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let cs = field.fmt_elem(c);
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if idx == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 1 {
                    factors.push(ring.var_names()[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", ring.var_names()[i], e));
                }
            }
            if factors.is_empty() {
                s.push_str(&mag);
            } else {
                if mag != "1" {
                    s.push_str(&mag);
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }

    /// Raw term data, used by the on-disk basis cache.
    pub fn into_raw_terms(self) -> Vec<(Monomial, K::Elem)> {
        self.terms
    }

    pub fn from_raw_terms(ring: &Arc<PolyRing<K>>, terms: Vec<(Monomial, K::Elem)>) -> Self {
        Self::from_terms(ring, terms)
    }
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl<K: Field> Eq for Polynomial<K> {}

/// Elementwise exact equality of generator lists.
pub fn same_polys<K: Field>(a: &[Polynomial<K>], b: &[Polynomial<K>]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}
