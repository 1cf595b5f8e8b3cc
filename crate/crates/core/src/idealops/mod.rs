//! Ideal-level algebra: membership, colon and saturation, elimination,
//! dimension and height, Hilbert series, radical membership, nonzerodivisor
//! tests, graded-piece dimensions, and the order of an ideal.

pub mod hilbert;

pub use hilbert::HilbertSeries;

use std::sync::{Arc, Mutex};

use crate::error::{CaError, CaResult};
use crate::groebner::{buchberger, normal_form, syzygies, GbOptions, GroebnerBasis};
use crate::polycore::field::Field;
use crate::polycore::matrix::PolyMatrix;
use crate::polycore::monomial::Monomial;
use crate::polycore::poly::Polynomial;
use crate::polycore::ring::PolyRing;

/// Height of a lifted ideal in a quotient; the unit ideal gets the
/// infinite sentinel so Fitting-height scans stay total.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Height {
    Finite(i64),
    Infinite,
}

impl Height {
    pub fn meets(&self, bound: i64) -> bool {
        match self {
            Height::Infinite => true,
            Height::Finite(h) => *h >= bound,
        }
    }
}

impl std::fmt::Display for Height {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Height::Finite(h) => write!(f, "{h}"),
            Height::Infinite => write!(f, "inf"),
        }
    }
}

/// An ideal: generators plus a lazily computed, internally synchronized
/// reduced Groebner basis.
#[derive(Debug)]
pub struct Ideal<K: Field> {
    ring: Arc<PolyRing<K>>,
    gens: Vec<Polynomial<K>>,
    cache: Mutex<Option<Arc<GroebnerBasis<K>>>>,
}

impl<K: Field> Clone for Ideal<K> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<K: Field> Ideal<K> {
    pub fn new(ring: &Arc<PolyRing<K>>, gens: Vec<Polynomial<K>>) -> CaResult<Self> {
        for g in &gens {
            if !g.ring().compatible(ring) {
                return Err(CaError::RingMismatch);
            }
        }
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            cache: Mutex::new(None),
        })
    }

    pub fn zero(ring: &Arc<PolyRing<K>>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            cache: Mutex::new(None),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced basis, computed once and shared.
    pub fn gb(&self, opts: &GbOptions) -> CaResult<Arc<GroebnerBasis<K>>> {
        let mut guard = self.cache.lock().unwrap();
        if let Some(gb) = guard.as_ref() {
            return Ok(gb.clone());
        }
        let gb = if self.gens.is_empty() {
            Arc::new(GroebnerBasis {
                ring: self.ring.clone(),
                elements: Vec::new(),
                stats: Default::default(),
            })
        } else {
            Arc::new(buchberger(&self.gens, opts)?)
        };
        *guard = Some(gb.clone());
        Ok(gb)
    }

    /// Seed the cache with an externally computed basis (disk cache path).
    pub fn install_basis(&self, gb: Arc<GroebnerBasis<K>>) {
        *self.cache.lock().unwrap() = Some(gb);
    }

    pub fn cached_basis(&self) -> Option<Arc<GroebnerBasis<K>>> {
        self.cache.lock().unwrap().clone()
    }

    pub fn lead_terms(&self, opts: &GbOptions) -> CaResult<Vec<Monomial>> {
        Ok(self
            .gb(opts)?
            .elements
            .iter()
            .filter_map(|g| g.lead_monomial().cloned())
            .collect())
    }

    /// True iff every reduced-basis element is homogeneous.
    pub fn is_homogeneous(&self, opts: &GbOptions) -> CaResult<bool> {
        Ok(self.gb(opts)?.elements.iter().all(|g| g.is_homogeneous()))
    }

    pub fn is_unit_ideal(&self, opts: &GbOptions) -> CaResult<bool> {
        Ok(self.gb(opts)?.is_trivial_unit())
    }

    /// f lies in the ideal iff its normal form vanishes.
    pub fn contains(&self, f: &Polynomial<K>, opts: &GbOptions) -> CaResult<bool> {
        if !f.ring().compatible(&self.ring) {
            return Err(CaError::RingMismatch);
        }
        Ok(normal_form(f, self.gb(opts)?.as_ref())?.is_zero())
    }

    /// Two ideals coincide iff their reduced bases do.
    pub fn equals(&self, other: &Ideal<K>, opts: &GbOptions) -> CaResult<bool> {
        if !self.ring.compatible(&other.ring) {
            return Err(CaError::RingMismatch);
        }
        Ok(self.gb(opts)?.elements == other.gb(opts)?.elements)
    }

    pub fn sum(&self, other: &Ideal<K>) -> CaResult<Ideal<K>> {
        if !self.ring.compatible(&other.ring) {
            return Err(CaError::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// (I : g) = { f : f g lies in I }, from the syzygies of [gens | g]:
    /// the coefficient of g in any relation multiplies g into I, and every
    /// such multiplier arises this way.
    pub fn quotient(&self, g: &Polynomial<K>, opts: &GbOptions) -> CaResult<Ideal<K>> {
        if g.is_zero() {
            return Err(CaError::ZeroDivisor);
        }
        if !g.ring().compatible(&self.ring) {
            return Err(CaError::RingMismatch);
        }
        if self.gens.is_empty() {
            // (0 : g) = 0 in a polynomial ring
            return Ok(Ideal::zero(&self.ring));
        }
        let m = self.gens.len();
        let mut entries = self.gens.clone();
        entries.push(g.clone());
        let row = PolyMatrix::new(&self.ring, 1, m + 1, entries)?;
        let syz = syzygies(&row, opts)?;
        let gens: Vec<Polynomial<K>> = (0..syz.cols)
            .map(|c| syz.at(m, c).clone())
            .filter(|p| !p.is_zero())
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// (I : g^inf) by iterated colon; the step count is the number of
    /// strict inclusions in the chain I : g <= I : g^2 <= ...
    pub fn saturation(&self, g: &Polynomial<K>, opts: &GbOptions) -> CaResult<(Ideal<K>, usize)> {
        let mut current = self.clone();
        let mut steps = 0usize;
        loop {
            let next = current.quotient(g, opts)?;
            if next.equals(&current, opts)? {
                return Ok((current, steps));
            }
            current = next;
            steps += 1;
        }
    }

    /// Saturation through one fresh variable: (I + (1 - w g)) eliminated
    /// of w. Cross-check route for the iterated colon.
    pub fn saturation_by_extra_variable(
        &self,
        g: &Polynomial<K>,
        opts: &GbOptions,
    ) -> CaResult<Ideal<K>> {
        if g.is_zero() {
            return Err(CaError::ZeroDivisor);
        }
        let ext = self.ring.with_fresh_front_var("w")?;
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let mut gens: Vec<Polynomial<K>> =
            self.gens.iter().map(|p| p.map_into(&ext, &shift)).collect();
        let w = Polynomial::var(&ext, 0);
        let one = Polynomial::one(&ext);
        gens.push(one.sub(&w.mul(&g.map_into(&ext, &shift))?));
        let gb = buchberger(&gens, opts)?;
        let allowed: Vec<bool> = std::iter::once(false)
            .chain(std::iter::repeat_n(true, self.ring.nvars()))
            .collect();
        let back: Vec<usize> = (0..ext.nvars()).map(|i| i.saturating_sub(1)).collect();
        let kept: Vec<Polynomial<K>> = gb
            .elements
            .iter()
            .filter(|p| p.uses_only(&allowed))
            .map(|p| p.map_into(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// I intersected with k[keep], by a block-elimination basis.
    pub fn eliminate(&self, keep: &[usize], opts: &GbOptions) -> CaResult<Ideal<K>> {
        let n = self.ring.nvars();
        for &i in keep {
            if i >= n {
                return Err(CaError::UnknownVariable(format!("#{i}")));
            }
        }
        let drop: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        if drop.is_empty() {
            // nothing to eliminate; return a copy presented by its basis
            let gb = self.gb(opts)?;
            return Ideal::new(&self.ring, gb.elements.clone());
        }
        let (ext, perm) = self.ring.reordered_for_elimination(&drop)?;
        // perm[new] = old; we need old -> new for the forward map
        let mut fwd = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            fwd[old] = new;
        }
        let gens: Vec<Polynomial<K>> = self.gens.iter().map(|p| p.map_into(&ext, &fwd)).collect();
        if gens.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        let gb = buchberger(&gens, opts)?;
        let b = drop.len();
        let allowed: Vec<bool> = (0..n).map(|i| i >= b).collect();
        let kept: Vec<Polynomial<K>> = gb
            .elements
            .iter()
            .filter(|p| p.uses_only(&allowed))
            .map(|p| p.map_into(&self.ring, &perm))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Intersection through the classical one-variable trick:
    /// I cap J = (w I + (1-w) J) cap k[X].
    pub fn intersection(&self, other: &Ideal<K>, opts: &GbOptions) -> CaResult<Ideal<K>> {
        if !self.ring.compatible(&other.ring) {
            return Err(CaError::RingMismatch);
        }
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.with_fresh_front_var("w")?;
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let w = Polynomial::var(&ext, 0);
        let one_minus_w = Polynomial::one(&ext).sub(&w);
        let mut gens: Vec<Polynomial<K>> = Vec::new();
        for p in &self.gens {
            gens.push(w.mul(&p.map_into(&ext, &shift))?);
        }
        for p in &other.gens {
            gens.push(one_minus_w.mul(&p.map_into(&ext, &shift))?);
        }
        let gb = buchberger(&gens, opts)?;
        let allowed: Vec<bool> = std::iter::once(false)
            .chain(std::iter::repeat_n(true, self.ring.nvars()))
            .collect();
        let back: Vec<usize> = (0..ext.nvars()).map(|i| i.saturating_sub(1)).collect();
        let kept: Vec<Polynomial<K>> = gb
            .elements
            .iter()
            .filter(|p| p.uses_only(&allowed))
            .map(|p| p.map_into(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Krull dimension of R/I; the unit ideal returns -1. For
    /// non-homogeneous ideals this reads the degrevlex lead-term ideal,
    /// which is dimension-correct.
    pub fn krull_dim(&self, opts: &GbOptions) -> CaResult<i64> {
        let lead = self.lead_terms(opts)?;
        Ok(hilbert::dimension_from_lead_terms(&lead, self.ring.nvars()))
    }

    /// Hilbert series of R/I for homogeneous I under the standard grading.
    pub fn hilbert_series(&self, opts: &GbOptions) -> CaResult<HilbertSeries> {
        if !self.ring.standard_grading() {
            return Err(CaError::Unsupported(
                "Hilbert series requires the standard grading".into(),
            ));
        }
        if !self.is_homogeneous(opts)? {
            return Err(CaError::NonHomogeneous);
        }
        let lead = self.lead_terms(opts)?;
        HilbertSeries::from_lead_terms(&lead, self.ring.nvars()).ok_or(CaError::ImproperIdeal)
    }

    /// Rabinowitsch test: f lies in the radical iff 1 is in I + (1 - z f).
    pub fn radical_contains(&self, f: &Polynomial<K>, opts: &GbOptions) -> CaResult<bool> {
        if f.is_zero() {
            return self.contains(f, opts);
        }
        let ext = self.ring.with_fresh_front_var("z")?;
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let mut gens: Vec<Polynomial<K>> =
            self.gens.iter().map(|p| p.map_into(&ext, &shift)).collect();
        let z = Polynomial::var(&ext, 0);
        gens.push(Polynomial::one(&ext).sub(&z.mul(&f.map_into(&ext, &shift))?));
        let gb = buchberger(&gens, opts)?;
        Ok(gb.is_trivial_unit())
    }

    /// g is a nonzerodivisor on R/I iff (I : g) = I.
    pub fn is_nonzerodivisor(&self, g: &Polynomial<K>, opts: &GbOptions) -> CaResult<bool> {
        let q = self.quotient(g, opts)?;
        q.equals(self, opts)
    }

    /// dim_k of the degree-d graded piece of a homogeneous ideal, through
    /// a degree-truncated basis.
    pub fn degree_part_dim(&self, d: u32, opts: &GbOptions) -> CaResult<usize> {
        if self.gens.iter().any(|g| !g.is_homogeneous()) {
            return Err(CaError::NonHomogeneous);
        }
        if !self.ring.standard_grading() {
            return Err(CaError::Unsupported(
                "graded pieces require the standard grading".into(),
            ));
        }
        if self.gens.is_empty() {
            return Ok(0);
        }
        let mut topts = opts.clone();
        topts.truncate_at = Some(d);
        let gb = buchberger(&self.gens, &topts)?;
        let lead: Vec<Monomial> = gb
            .elements
            .iter()
            .filter_map(|g| g.lead_monomial().cloned())
            .collect();
        let n = self.ring.nvars();
        let count = monomials_of_degree(n, d)
            .into_iter()
            .filter(|m| lead.iter().any(|l| l.divides(m)))
            .count();
        Ok(count)
    }

    /// Largest k with I inside the k-th power of the irrelevant ideal; for
    /// homogeneous I this is the minimal degree in the reduced basis.
    pub fn order_of_ideal(&self, opts: &GbOptions) -> CaResult<u32> {
        if self.gens.is_empty() {
            return Err(CaError::ImproperIdeal);
        }
        if !self.is_homogeneous(opts)? {
            return Err(CaError::NonHomogeneous);
        }
        let gb = self.gb(opts)?;
        if gb.is_trivial_unit() {
            return Err(CaError::ImproperIdeal);
        }
        Ok(gb
            .elements
            .iter()
            .filter_map(|g| g.degree())
            .min()
            .expect("nonempty basis"))
    }
}

/// Height of (K + I)/I inside A = R/I for an equidimensional quotient:
/// dim A - dim R/(K + I), with the infinite sentinel when K + I = (1).
pub fn height_in_quotient<K: Field>(
    lifted: &Ideal<K>,
    defining: &Ideal<K>,
    opts: &GbOptions,
) -> CaResult<Height> {
    let total = lifted.sum(defining)?;
    let d = total.krull_dim(opts)?;
    if d < 0 {
        return Ok(Height::Infinite);
    }
    let dim_a = defining.krull_dim(opts)?;
    Ok(Height::Finite(dim_a - d))
}

/// All monomials of total degree d in n variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial::from_exps(cur));
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::field::PrimeField;
    use crate::polycore::monomial::MonomialOrder;

    type R = Arc<PolyRing<PrimeField>>;

    fn ring(vars: &[&str]) -> R {
        PolyRing::new(
            PrimeField::new(32003).unwrap(),
            vars.to_vec(),
            MonomialOrder::DegRevLex,
        )
        .unwrap()
    }

    fn opts() -> GbOptions {
        GbOptions::default()
    }

    fn v(r: &R, i: usize) -> Polynomial<PrimeField> {
        Polynomial::var(r, i)
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let i1 = Ideal::new(&r, vec![x.clone()]).unwrap();
        assert!(i1
            .contains(&x.mul(&x).unwrap().mul(&y).unwrap(), &opts())
            .unwrap());
        let i2 = Ideal::new(&r, vec![x.mul(&x).unwrap(), y.mul(&y).unwrap()]).unwrap();
        assert!(!i2.contains(&x.add(&y), &opts()).unwrap());
        let tw = Ideal::new(
            &r,
            vec![
                x.mul(&x).unwrap().sub(&y),
                x.mul(&x).unwrap().mul(&x).unwrap().sub(&z),
            ],
        )
        .unwrap();
        let y3z2 = y
            .mul(&y)
            .unwrap()
            .mul(&y)
            .unwrap()
            .sub(&z.mul(&z).unwrap());
        assert!(tw.contains(&y3z2, &opts()).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        // (x^2 y) : x = (x y)
        let i = Ideal::new(&r, vec![x.mul(&x).unwrap().mul(&y).unwrap()]).unwrap();
        let q = i.quotient(&x, &opts()).unwrap();
        let expect = Ideal::new(&r, vec![x.mul(&y).unwrap()]).unwrap();
        assert!(q.equals(&expect, &opts()).unwrap());
        // (x) : y = (x)
        let ix = Ideal::new(&r, vec![x.clone()]).unwrap();
        assert!(ix
            .quotient(&y, &opts())
            .unwrap()
            .equals(&ix, &opts())
            .unwrap());
    }

    #[test]
    fn quotient_of_prime_by_nonmember() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (v(&r, 0), v(&r, 1), v(&r, 2));
        // the affine twisted cubic ideal is prime and avoids x
        let i = Ideal::new(
            &r,
            vec![
                x.mul(&x).unwrap().sub(&y),
                x.mul(&x).unwrap().mul(&x).unwrap().sub(&z),
            ],
        )
        .unwrap();
        let q = i.quotient(&x, &opts()).unwrap();
        assert!(q.equals(&i, &opts()).unwrap());
        assert!(i.is_nonzerodivisor(&x, &opts()).unwrap());
    }

    #[test]
    fn quotient_agrees_with_intersection_route() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        let i = Ideal::new(
            &r,
            vec![x.mul(&x).unwrap().mul(&y).unwrap(), y.mul(&y).unwrap()],
        )
        .unwrap();
        let g = x.mul(&y).unwrap().add(&y.mul(&y).unwrap());
        // (I : g) via syzygies vs (I cap (g))/g via the w-trick
        let q1 = i.quotient(&g, &opts()).unwrap();
        let cap = i
            .intersection(&Ideal::new(&r, vec![g.clone()]).unwrap(), &opts())
            .unwrap();
        let ggb = buchberger(std::slice::from_ref(&g), &opts()).unwrap();
        let mut divided = Vec::new();
        for p in cap.generators() {
            // p = q*g exactly; recover q by dividing lead terms
            assert!(normal_form(p, &ggb).unwrap().is_zero());
            let mut rest = p.clone();
            let mut quot = Polynomial::zero(&r);
            while !rest.is_zero() {
                let (m, c) = rest.lead().unwrap().clone();
                let (gm, gc) = g.lead().unwrap();
                let qm = gm.quotient_into(&m);
                let qc = r.field.div(&c, gc);
                let t = Polynomial::term(&r, qm, qc);
                quot = quot.add(&t);
                rest = rest.sub(&t.mul(&g).unwrap());
            }
            divided.push(quot);
        }
        let q2 = Ideal::new(&r, divided).unwrap();
        assert!(q1.equals(&q2, &opts()).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        // (x^2 y) : x^inf = (y) in at most 2 productive steps
        let i = Ideal::new(&r, vec![x.mul(&x).unwrap().mul(&y).unwrap()]).unwrap();
        let (sat, steps) = i.saturation(&x, &opts()).unwrap();
        let expect = Ideal::new(&r, vec![y.clone()]).unwrap();
        assert!(sat.equals(&expect, &opts()).unwrap());
        assert!(steps <= 2);
        // (x) : x^inf = (1)
        let ix = Ideal::new(&r, vec![x.clone()]).unwrap();
        let (sat2, _) = ix.saturation(&x, &opts()).unwrap();
        assert!(sat2.is_unit_ideal(&opts()).unwrap());
        // the two saturation routes agree
        let sat3 = i.saturation_by_extra_variable(&x, &opts()).unwrap();
        assert!(sat3.equals(&sat, &opts()).unwrap());
    }

    #[test]
    fn saturation_chain_is_increasing_until_stable() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        let x2y3 = x
            .mul(&x)
            .unwrap()
            .mul(&y.mul(&y).unwrap().mul(&y).unwrap())
            .unwrap();
        let i = Ideal::new(&r, vec![x2y3]).unwrap();
        let mut prev = i.clone();
        let mut strict = 0;
        for _ in 0..5 {
            let next = prev.quotient(&y, &opts()).unwrap();
            for g in prev.generators() {
                assert!(next.contains(g, &opts()).unwrap());
            }
            if !next.equals(&prev, &opts()).unwrap() {
                strict += 1;
            }
            prev = next;
        }
        assert_eq!(strict, 3);
        let (sat, steps) = i.saturation(&y, &opts()).unwrap();
        assert_eq!(steps, 3);
        let expect = Ideal::new(&r, vec![x.mul(&x).unwrap()]).unwrap();
        assert!(sat.equals(&expect, &opts()).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        let r = ring(&["x", "y", "t"]);
        let (x, y, t) = (v(&r, 0), v(&r, 1), v(&r, 2));
        // cusp parametrization: eliminate t from (x - t^2, y - t^3)
        let i = Ideal::new(
            &r,
            vec![
                x.sub(&t.mul(&t).unwrap()),
                y.sub(&t.mul(&t).unwrap().mul(&t).unwrap()),
            ],
        )
        .unwrap();
        let e = i.eliminate(&[0, 1], &opts()).unwrap();
        let cusp = y
            .mul(&y)
            .unwrap()
            .sub(&x.mul(&x).unwrap().mul(&x).unwrap());
        let expect = Ideal::new(&r, vec![cusp]).unwrap();
        assert!(e.equals(&expect, &opts()).unwrap());
        // eliminate((x+y), keep {x}) = (0)
        let j = Ideal::new(&r, vec![x.add(&y)]).unwrap();
        assert!(j.eliminate(&[0], &opts()).unwrap().is_zero_ideal());
        // keep everything: unchanged
        let full = i.eliminate(&[0, 1, 2], &opts()).unwrap();
        assert!(full.equals(&i, &opts()).unwrap());
    }

    #[test]
    fn eliminate_twisted_cubic() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let i = Ideal::new(
            &r,
            vec![
                x.mul(&x).unwrap().sub(&y),
                x.mul(&x).unwrap().mul(&x).unwrap().sub(&z),
            ],
        )
        .unwrap();
        let e = i.eliminate(&[1, 2], &opts()).unwrap();
        let y3z2 = y
            .mul(&y)
            .unwrap()
            .mul(&y)
            .unwrap()
            .sub(&z.mul(&z).unwrap());
        let expect = Ideal::new(&r, vec![y3z2]).unwrap();
        assert!(e.equals(&expect, &opts()).unwrap());
    }

    #[test]
    fn krull_dim_examples() {
        let r = ring(&["x", "y"]);
        let x = v(&r, 0);
        let i = Ideal::new(&r, vec![x]).unwrap();
        assert_eq!(i.krull_dim(&opts()).unwrap(), 1);
        let unit = Ideal::new(&r, vec![Polynomial::one(&r)]).unwrap();
        assert_eq!(unit.krull_dim(&opts()).unwrap(), -1);
        assert_eq!(Ideal::zero(&r).krull_dim(&opts()).unwrap(), 2);
    }

    #[test]
    fn radical_membership_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        let i = Ideal::new(&r, vec![x.mul(&x).unwrap()]).unwrap();
        assert!(i.radical_contains(&x, &opts()).unwrap());
        assert!(!i.radical_contains(&y, &opts()).unwrap());
        // membership implies radical membership
        assert!(i.radical_contains(&x.mul(&x).unwrap(), &opts()).unwrap());
    }

    #[test]
    fn nonzerodivisor_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        let ix = Ideal::new(&r, vec![x.clone()]).unwrap();
        assert!(ix.is_nonzerodivisor(&y, &opts()).unwrap());
        let ixy = Ideal::new(&r, vec![x.mul(&y).unwrap()]).unwrap();
        assert!(!ixy.is_nonzerodivisor(&x, &opts()).unwrap());
    }

    #[test]
    fn degree_part_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        let i = Ideal::new(&r, vec![x.mul(&x).unwrap(), x.mul(&y).unwrap()]).unwrap();
        assert_eq!(i.degree_part_dim(2, &opts()).unwrap(), 2);
        let j = Ideal::new(&r, vec![x.mul(&x).unwrap().mul(&x).unwrap()]).unwrap();
        assert_eq!(j.degree_part_dim(2, &opts()).unwrap(), 0);
    }

    #[test]
    fn order_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        let i = Ideal::new(&r, vec![x.mul(&x).unwrap().mul(&y).unwrap()]).unwrap();
        assert_eq!(i.order_of_ideal(&opts()).unwrap(), 3);
        let x3 = x.mul(&x).unwrap().mul(&x).unwrap();
        let y3 = y.mul(&y).unwrap().mul(&y).unwrap();
        let x4 = x3.mul(&x).unwrap();
        let j = Ideal::new(&r, vec![x3.add(&y3), x4]).unwrap();
        assert_eq!(j.order_of_ideal(&opts()).unwrap(), 3);
        assert!(Ideal::zero(&r).order_of_ideal(&opts()).is_err());
    }

    #[test]
    fn height_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        let cusp = Ideal::new(
            &r,
            vec![y
                .mul(&y)
                .unwrap()
                .sub(&x.mul(&x).unwrap().mul(&x).unwrap())],
        )
        .unwrap();
        let m = Ideal::new(&r, vec![x.clone(), y.clone()]).unwrap();
        assert_eq!(
            height_in_quotient(&m, &cusp, &opts()).unwrap(),
            Height::Finite(1)
        );
        let unit = Ideal::new(&r, vec![Polynomial::one(&r)]).unwrap();
        assert_eq!(
            height_in_quotient(&unit, &cusp, &opts()).unwrap(),
            Height::Infinite
        );
    }

    #[test]
    fn hilbert_series_of_fermat_quintic() {
        let vars = ["x1", "x2", "x3", "x4", "x5"];
        let r = ring(&vars);
        let mut f = Polynomial::zero(&r);
        for i in 0..5 {
            let xi = v(&r, i);
            let x5 = xi
                .mul(&xi)
                .unwrap()
                .mul(&xi)
                .unwrap()
                .mul(&xi)
                .unwrap()
                .mul(&xi)
                .unwrap();
            f = f.add(&x5);
        }
        let i = Ideal::new(&r, vec![f]).unwrap();
        let hs = i.hilbert_series(&opts()).unwrap();
        assert_eq!(hs.numerator, vec![1, 1, 1, 1, 1]);
        assert_eq!(hs.dim, 4);
        assert_eq!(hs.a_invariant(), 0);
        assert_eq!(i.krull_dim(&opts()).unwrap(), 4);
    }

    #[test]
    fn degree_part_matches_series_complement() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let i = Ideal::new(
            &r,
            vec![
                x.mul(&y).unwrap().add(&z.mul(&z).unwrap()),
                y.mul(&y).unwrap(),
            ],
        )
        .unwrap();
        let hs = i.hilbert_series(&opts()).unwrap();
        for d in 0..8u32 {
            let total = hilbert::binom(2 + d as usize, d as usize);
            let part = i.degree_part_dim(d, &opts()).unwrap() as i64;
            assert_eq!(part + hs.coefficient(d as usize), total, "degree {d}");
        }
    }
}
