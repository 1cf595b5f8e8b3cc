//! Buchberger engine for ideals and submodules of free modules: normal
//! forms, reduced bases, syzygies, and cofactor lifting.
//!
//! Module elements are compared position-over-term: lower components
//! dominate, ties fall back to the ring's monomial order. Syzygies come
//! from a shadow block of extra components that records, for each basis
//! vector, how it was assembled from the inputs; basis vectors whose lead
//! falls inside the shadow block are exactly the kernel elements.

mod engine;
mod vect;

pub use engine::{module_groebner, vect_normal_form, GbOptions, GbStats, ModuleBasis};
pub use vect::Vect;

use std::sync::Arc;

use crate::error::{CaError, CaResult};
use crate::polycore::field::Field;
use crate::polycore::matrix::PolyMatrix;
use crate::polycore::poly::Polynomial;
use crate::polycore::ring::PolyRing;

/// A reduced Groebner basis of an ideal: monic elements with pairwise
/// indivisible lead terms and fully reduced tails, sorted descending by
/// lead term. Unique for a fixed ideal and order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    pub ring: Arc<PolyRing<K>>,
    pub elements: Vec<Polynomial<K>>,
    pub stats: GbStats,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn is_trivial_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].lead_monomial().is_some_and(|m| m.is_one())
    }

    pub fn contains_zero_ideal_only(&self) -> bool {
        self.elements.is_empty()
    }
}

impl<K: Field> PartialEq for GroebnerBasis<K> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}
impl<K: Field> Eq for GroebnerBasis<K> {}

fn to_vect<K: Field>(p: &Polynomial<K>) -> Vect<K> {
    Vect::from_poly(p, 0)
}

fn to_poly<K: Field>(ring: &Arc<PolyRing<K>>, v: &Vect<K>) -> Polynomial<K> {
    let comps = v.components(ring, 0, 1);
    comps.into_iter().next().unwrap()
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger<K: Field>(
    gens: &[Polynomial<K>],
    opts: &GbOptions,
) -> CaResult<GroebnerBasis<K>> {
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| CaError::Unsupported("empty generator list".into()))?;
    for g in gens {
        if !g.ring().compatible(&ring) {
            return Err(CaError::RingMismatch);
        }
    }
    let inputs: Vec<Vect<K>> = gens.iter().map(to_vect).collect();
    let mb = module_groebner(&ring, 1, inputs, None, opts)?;
    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: mb.elements.iter().map(|v| to_poly(&ring, v)).collect(),
        stats: mb.stats,
    })
}

/// Remainder of `f` under full division by the basis: no term of the
/// result is divisible by any lead term of `gb`, and `f - result` lies in
/// the ideal. Idempotent.
pub fn normal_form<K: Field>(f: &Polynomial<K>, gb: &GroebnerBasis<K>) -> CaResult<Polynomial<K>> {
    if !f.ring().compatible(&gb.ring) {
        return Err(CaError::RingMismatch);
    }
    let basis: Vec<Vect<K>> = gb.elements.iter().map(to_vect).collect();
    let nf = vect_normal_form(&gb.ring, to_vect(f), &basis)?;
    Ok(to_poly(&gb.ring, &nf))
}

/// Reduced basis of the column span of `m` inside the free module of rank
/// `m.rows`, position-over-term.
pub fn module_buchberger<K: Field>(
    m: &PolyMatrix<K>,
    opts: &GbOptions,
) -> CaResult<ModuleBasis<K>> {
    if m.is_zero() {
        return Err(CaError::Unsupported("zero presentation matrix".into()));
    }
    let ring = m.ring().clone();
    let inputs: Vec<Vect<K>> = (0..m.cols)
        .map(|c| Vect::from_column(&ring, &m.column(c), 0))
        .filter(|v| !v.is_zero())
        .collect();
    module_groebner(&ring, m.rows, inputs, None, opts)
}

/// Columns generating the kernel of the map R^cols -> R^rows given by `m`.
/// Always satisfies `m * result = 0` exactly.
pub fn syzygies<K: Field>(m: &PolyMatrix<K>, opts: &GbOptions) -> CaResult<PolyMatrix<K>> {
    syzygies_twisted(m, None, opts)
}

/// Kernel generators with degree bookkeeping: `twists[r]` is the degree
/// shift of row r of `m` (all zero for an untwisted source).
pub fn syzygies_twisted<K: Field>(
    m: &PolyMatrix<K>,
    twists: Option<&[i64]>,
    opts: &GbOptions,
) -> CaResult<PolyMatrix<K>> {
    let ring = m.ring().clone();
    let n = m.rows;
    let cols = m.cols;
    let mut inputs: Vec<Vect<K>> = Vec::with_capacity(cols);
    let mut full_twists: Vec<i64> = match twists {
        Some(t) => t.to_vec(),
        None => vec![0; n],
    };
    // shadow components carry each input's own degree so the augmented
    // vectors stay homogeneous when the input is
    for c in 0..cols {
        let col = m.column(c);
        let mut v = Vect::from_column(&ring, &col, 0);
        let unit = Vect::from_poly(&Polynomial::one(&ring), (n + c) as u32);
        v.terms.extend(unit.terms);
        let deg = v
            .components(&ring, 0, n as u32)
            .iter()
            .enumerate()
            .filter_map(|(r, p)| {
                p.degree()
                    .map(|d| d as i64 + full_twists.get(r).copied().unwrap_or(0))
            })
            .max()
            .unwrap_or(0);
        full_twists.push(deg);
        inputs.push(v);
    }
    let mb = module_groebner(&ring, n + cols, inputs, Some(full_twists), opts)?;
    let mut syz_cols: Vec<Vec<Polynomial<K>>> = Vec::new();
    for v in &mb.elements {
        if v.supported_after(n as u32) {
            syz_cols.push(v.components(&ring, n as u32, (n + cols) as u32));
        }
    }
    PolyMatrix::from_columns(&ring, cols, &syz_cols)
}

/// Reduced basis of an ideal together with cofactors: column k of the
/// returned matrix expresses basis element k as a combination of the
/// input generators.
pub fn buchberger_with_cofactors<K: Field>(
    gens: &[Polynomial<K>],
    opts: &GbOptions,
) -> CaResult<(GroebnerBasis<K>, PolyMatrix<K>)> {
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| CaError::Unsupported("empty generator list".into()))?;
    let m = gens.len();
    let mut inputs: Vec<Vect<K>> = Vec::with_capacity(m);
    for (j, g) in gens.iter().enumerate() {
        let mut v = to_vect(g);
        let unit = Vect::from_poly(&Polynomial::one(&ring), (1 + j) as u32);
        v.terms.extend(unit.terms);
        inputs.push(v);
    }
    let mb = module_groebner(&ring, 1 + m, inputs, None, opts)?;
    let mut elements = Vec::new();
    let mut cof_cols: Vec<Vec<Polynomial<K>>> = Vec::new();
    for v in &mb.elements {
        if !v.supported_after(1) {
            elements.push(to_poly(&ring, v));
            cof_cols.push(v.components(&ring, 1, (1 + m) as u32));
        }
    }
    let cof = PolyMatrix::from_columns(&ring, m, &cof_cols)?;
    Ok((
        GroebnerBasis {
            ring,
            elements,
            stats: mb.stats,
        },
        cof,
    ))
}

/// Express `target` as a combination of module generators `gens` (columns
/// over the free module of rank `rows`), if it lies in their span.
/// Returns the coefficient vector, one polynomial per generator.
pub fn lift_through<K: Field>(
    ring: &Arc<PolyRing<K>>,
    rows: usize,
    gens: &[Vec<Polynomial<K>>],
    target: &[Polynomial<K>],
    opts: &GbOptions,
) -> CaResult<Option<Vec<Polynomial<K>>>> {
    let m = gens.len();
    let mut inputs = Vec::with_capacity(m);
    for (j, col) in gens.iter().enumerate() {
        let mut v = Vect::from_column(ring, col, 0);
        let unit = Vect::from_poly(&Polynomial::one(ring), (rows + j) as u32);
        v.terms.extend(unit.terms);
        inputs.push(v);
    }
    let mb = module_groebner(ring, rows + m, inputs, None, opts)?;
    let t = Vect::from_column(ring, target, 0);
    let nf = vect_normal_form(ring, t, &mb.elements)?;
    if !nf.supported_after(rows as u32) {
        return Ok(None);
    }
    // target - (shadow part) * gens = 0, so the cofactors are the negated
    // shadow coordinates
    let shadow = nf.components(ring, rows as u32, (rows + m) as u32);
    Ok(Some(shadow.into_iter().map(|p| p.neg()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::field::PrimeField;
    use crate::polycore::monomial::MonomialOrder;

    fn ring_xyz() -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(
            PrimeField::new(32003).unwrap(),
            vec!["x", "y", "z"],
            MonomialOrder::DegRevLex,
        )
        .unwrap()
    }

    fn ring_xy() -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(
            PrimeField::new(32003).unwrap(),
            vec!["x", "y"],
            MonomialOrder::DegRevLex,
        )
        .unwrap()
    }

    #[test]
    fn basis_of_x_plus_y_and_y() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let gb = buchberger(&[x.add(&y), y.clone()], &GbOptions::default()).unwrap();
        assert_eq!(gb.elements, vec![x, y]);
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = y.mul(&y).unwrap().sub(&x.mul(&x).unwrap().mul(&x).unwrap());
        let gb = buchberger(std::slice::from_ref(&f), &GbOptions::default()).unwrap();
        assert_eq!(gb.elements, vec![f.make_monic()]);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let gb = buchberger(std::slice::from_ref(&x), &GbOptions::default()).unwrap();
        let x2 = x.mul(&x).unwrap();
        assert!(normal_form(&x2, &gb).unwrap().is_zero());
        assert_eq!(normal_form(&x2.add(&y), &gb).unwrap(), y);
        // idempotence
        let f = x2.add(&y);
        let nf = normal_form(&f, &gb).unwrap();
        assert_eq!(normal_form(&nf, &gb).unwrap(), nf);
    }

    #[test]
    fn twisted_cubic_elimination_member() {
        // {x^2 - y, x^3 - z} contains y^3 - z^2
        let r = ring_xyz();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let f1 = x.mul(&x).unwrap().sub(&y);
        let f2 = x.mul(&x).unwrap().mul(&x).unwrap().sub(&z);
        let gb = buchberger(&[f1.clone(), f2.clone()], &GbOptions::default()).unwrap();
        let y3 = y.mul(&y).unwrap().mul(&y).unwrap();
        let z2 = z.mul(&z).unwrap();
        let g = y3.sub(&z2);
        assert!(normal_form(&g, &gb).unwrap().is_zero());
        // under degrevlex the reduced basis is {x^2-y, xy-z, y^2-xz}; the
        // eliminant y^3-z^2 reduces to zero against it rather than joining it
        assert_eq!(gb.elements.len(), 3);
        // membership certified the other way: each basis element is a
        // combination of the generators
        let (gb2, cof) = buchberger_with_cofactors(&[f1.clone(), f2.clone()], &GbOptions::default()).unwrap();
        assert_eq!(gb2, gb);
        for (k, b) in gb2.elements.iter().enumerate() {
            let recombined = f1
                .mul(cof.at(0, k))
                .unwrap()
                .add(&f2.mul(cof.at(1, k)).unwrap());
            assert_eq!(recombined, *b);
        }
    }

    #[test]
    fn cusp_tangent_ideal_normal_form_derived() {
        // y*(2xT2 - 3yT1) reduces to 0 against GB(y^2 - x^3, -3x^2 T1 + 2y T2)
        let r = PolyRing::new(
            PrimeField::new(32003).unwrap(),
            vec!["x", "y", "T1", "T2"],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let t1 = Polynomial::var(&r, 2);
        let t2 = Polynomial::var(&r, 3);
        let f = y.mul(&y).unwrap().sub(&x.mul(&x).unwrap().mul(&x).unwrap());
        let df = x
            .mul(&x)
            .unwrap()
            .mul(&t1)
            .unwrap()
            .scale(&r.field.from_i64(-3))
            .add(&y.mul(&t2).unwrap().scale(&2));
        let gb = buchberger(&[f, df], &GbOptions::default()).unwrap();
        let witness = x
            .mul(&t2)
            .unwrap()
            .scale(&2)
            .sub(&y.mul(&t1).unwrap().scale(&3));
        let prod = y.mul(&witness).unwrap();
        assert!(normal_form(&prod, &gb).unwrap().is_zero());
        // but the witness itself is not in the ideal
        assert!(!normal_form(&witness, &gb).unwrap().is_zero());
    }

    #[test]
    fn reduced_basis_independent_of_generator_order() {
        let r = ring_xyz();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let gens = vec![
            x.mul(&x).unwrap().sub(&y),
            x.mul(&x).unwrap().mul(&x).unwrap().sub(&z),
            x.add(&y).add(&z),
        ];
        let gb1 = buchberger(&gens, &GbOptions::default()).unwrap();
        let mut permuted = gens.clone();
        permuted.rotate_left(1);
        permuted.swap(0, 1);
        let gb2 = buchberger(&permuted, &GbOptions::default()).unwrap();
        assert_eq!(gb1, gb2);
    }

    #[test]
    fn module_basis_trivia() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let zero = Polynomial::zero(&r);
        // columns (x,0),(0,x): already a basis
        let m = PolyMatrix::from_columns(
            &r,
            2,
            &[vec![x.clone(), zero.clone()], vec![zero.clone(), x.clone()]],
        )
        .unwrap();
        let mb = module_buchberger(&m, &GbOptions::default()).unwrap();
        assert_eq!(mb.elements.len(), 2);
        // duplicate columns collapse
        let m2 = PolyMatrix::from_columns(
            &r,
            2,
            &[vec![x.clone(), y.clone()], vec![x.clone(), y.clone()]],
        )
        .unwrap();
        let mb2 = module_buchberger(&m2, &GbOptions::default()).unwrap();
        assert_eq!(mb2.elements.len(), 1);
    }

    #[test]
    fn koszul_syzygy_of_row() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // syz(x y) = (-y, x) up to sign
        let m = PolyMatrix::new(&r, 1, 2, vec![x.clone(), y.clone()]).unwrap();
        let s = syzygies(&m, &GbOptions::default()).unwrap();
        assert_eq!(s.cols, 1);
        assert!(m.mul(&s).unwrap().is_zero());
        let a = s.at(0, 0);
        let b = s.at(1, 0);
        let cross = a.mul(&x).unwrap().add(&b.mul(&y).unwrap());
        assert!(cross.is_zero());
        assert!(!a.is_zero() && !b.is_zero());

        // syz(x^2, x) = (-1, x) up to unit
        let x2 = x.mul(&x).unwrap();
        let m2 = PolyMatrix::new(&r, 1, 2, vec![x2, x.clone()]).unwrap();
        let s2 = syzygies(&m2, &GbOptions::default()).unwrap();
        assert!(m2.mul(&s2).unwrap().is_zero());
        assert!(s2.cols >= 1);
        // some column has a unit entry in the second coordinate of degree 1
        let found = (0..s2.cols).any(|c| {
            s2.at(0, c).degree() == Some(0) && s2.at(1, c).degree() == Some(1)
        });
        assert!(found);
    }

    #[test]
    fn lift_through_finds_cofactors() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let gens = vec![vec![x.clone()], vec![y.clone()]];
        // x^2 + xy = x*x + x*y
        let target = vec![x.mul(&x).unwrap().add(&x.mul(&y).unwrap())];
        let lift = lift_through(&r, 1, &gens, &target, &GbOptions::default())
            .unwrap()
            .unwrap();
        let recon = lift[0].mul(&x).unwrap().add(&lift[1].mul(&y).unwrap());
        assert_eq!(recon, target[0]);
        // 1 is not in (x, y)
        let one = vec![Polynomial::one(&r)];
        assert!(lift_through(&r, 1, &gens, &one, &GbOptions::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn degree_cap_is_reported() {
        let r = ring_xy().with_degree_cap(8);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // x^5 - y and y*x^4 - 1 force growth past the cap
        let f = x
            .mul(&x)
            .unwrap()
            .mul(&x)
            .unwrap()
            .mul(&x)
            .unwrap()
            .mul(&x)
            .unwrap()
            .sub(&y);
        let g = y
            .mul(&x)
            .unwrap()
            .mul(&x)
            .unwrap()
            .mul(&x)
            .unwrap()
            .mul(&x)
            .unwrap()
            .sub(&Polynomial::one(&r));
        let err = buchberger(&[f, g], &GbOptions::default());
        assert!(matches!(
            err,
            Err(CaError::DegreeCapExceeded { .. }) | Ok(_)
        ));
    }
}
