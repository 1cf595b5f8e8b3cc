//! The differential pipeline: Jacobian presentations, the tangent algebra
//! of a presented ring, its Rees quotient by torsion, Fitting ideals and
//! the height conditions they encode, analytic spread, and the quadric
//! invariants of the defining ideal.
//!
//! Throughout, a quotient A = R/I is handled through its polynomial
//! presentation; modules over A are cokernels of matrices over R.

use std::sync::Arc;

use crate::error::{CaError, CaResult};
use crate::groebner::{normal_form, GbOptions};
use crate::idealops::{height_in_quotient, Height, Ideal};
use crate::par;
use crate::polycore::combinations;
use crate::polycore::field::Field;
use crate::polycore::matrix::PolyMatrix;
use crate::polycore::poly::Polynomial;
use crate::polycore::ring::PolyRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraRole {
    /// A = R/I in the base ring k[X].
    Base,
    /// The tangent algebra presentation in k[X, T].
    Tangent,
    /// The Rees quotient of the tangent algebra in k[X, T].
    Rees,
}

/// Block structure of a presentation in k[X, T].
#[derive(Clone, Debug)]
pub struct DifferentialBlock<K: Field> {
    pub base_ring: Arc<PolyRing<K>>,
    pub base_ideal: Ideal<K>,
    pub x_count: usize,
    pub t_count: usize,
    /// The saturation witness, in the base ring (Rees role only).
    pub witness: Option<Polynomial<K>>,
}

/// A quotient presentation: ambient polynomial ring plus defining ideal.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra<K: Field> {
    ring: Arc<PolyRing<K>>,
    ideal: Ideal<K>,
    role: AlgebraRole,
    block: Option<DifferentialBlock<K>>,
}

impl<K: Field> PresentedAlgebra<K> {
    pub fn base(ideal: Ideal<K>) -> Self {
        PresentedAlgebra {
            ring: ideal.ring().clone(),
            ideal,
            role: AlgebraRole::Base,
            block: None,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal<K> {
        &self.ideal
    }

    pub fn role(&self) -> AlgebraRole {
        self.role
    }

    pub fn block(&self) -> Option<&DifferentialBlock<K>> {
        self.block.as_ref()
    }

    pub fn dim(&self, opts: &GbOptions) -> CaResult<i64> {
        self.ideal.krull_dim(opts)
    }

    /// Embedding dimension at the irrelevant maximal ideal: number of
    /// variables minus the number of independent linear forms in I. For
    /// non-graded presentations whose generators all vanish to order two
    /// at the origin, no linear form exists and edim is the variable
    /// count.
    pub fn edim(&self, opts: &GbOptions) -> CaResult<i64> {
        if self.ideal.is_zero_ideal() {
            return Ok(self.ring.nvars() as i64);
        }
        let linear = if self.ideal.generators().iter().all(|g| g.is_homogeneous())
            && self.ring.standard_grading()
        {
            self.ideal.degree_part_dim(1, opts)?
        } else if self
            .ideal
            .gb(opts)?
            .elements
            .iter()
            .all(|g| g.terms.iter().map(|(m, _)| m.degree()).min().unwrap_or(2) >= 2)
        {
            0
        } else {
            return Err(CaError::Unsupported(
                "embedding dimension needs a graded presentation or order >= 2".into(),
            ));
        };
        Ok(self.ring.nvars() as i64 - linear as i64)
    }

    /// Height of the defining ideal inside the polynomial ring.
    pub fn codim(&self, opts: &GbOptions) -> CaResult<i64> {
        Ok(self.ring.nvars() as i64 - self.ideal.krull_dim(opts)?)
    }
}

/// A finite module over A presented as the cokernel of a matrix over the
/// ambient ring: rows index generators, columns index relations.
#[derive(Clone, Debug)]
pub struct PresentedModule<K: Field> {
    pub algebra: PresentedAlgebra<K>,
    pub presentation: PolyMatrix<K>,
    pub rank: i64,
}

impl<K: Field> PresentedModule<K> {
    pub fn generators(&self) -> usize {
        self.presentation.rows
    }

    /// Largest minor size of the presentation that stays nonzero mod I;
    /// for a domain this is the generic rank of the presentation, so the
    /// module's rank is generators - result.
    pub fn presentation_rank_mod(&self, opts: &GbOptions) -> CaResult<usize> {
        let m = &self.presentation;
        let i = self.algebra.ideal();
        let max = m.rows.min(m.cols);
        for t in (1..=max).rev() {
            for rs in combinations(m.rows, t) {
                for cs in combinations(m.cols, t) {
                    let det = m.minor(&rs, &cs)?;
                    if det.is_zero() {
                        continue;
                    }
                    if !i.contains(&det, opts)? {
                        return Ok(t);
                    }
                }
            }
        }
        Ok(0)
    }

    /// Check the declared rank against the generic rank (domain inputs).
    pub fn rank_is_consistent(&self, opts: &GbOptions) -> CaResult<bool> {
        let pr = self.presentation_rank_mod(opts)?;
        Ok(self.rank == self.generators() as i64 - pr as i64)
    }
}

/// Transposed-gradient presentation matrix: rows are variables, columns
/// are the stored generators of the ideal.
pub fn jacobian<K: Field>(ideal: &Ideal<K>) -> PolyMatrix<K> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let gens = ideal.generators();
    let mut m = PolyMatrix::zero(ring, n, gens.len());
    for (j, f) in gens.iter().enumerate() {
        for i in 0..n {
            m.set(i, j, f.derivative(i));
        }
    }
    m
}

/// The module of differentials of A, presented by the Jacobian of the
/// defining ideal; its rank is dim A for the (reduced, equidimensional)
/// quotients handled here.
pub fn omega_presentation<K: Field>(
    a: &PresentedAlgebra<K>,
    opts: &GbOptions,
) -> CaResult<PresentedModule<K>> {
    let jac = jacobian(a.ideal());
    let rank = a.dim(opts)?;
    Ok(PresentedModule {
        algebra: a.clone(),
        presentation: jac,
        rank,
    })
}

fn fresh_names<K: Field>(ring: &PolyRing<K>, prefix: &str, count: usize) -> Vec<String> {
    (1..=count)
        .map(|i| {
            let mut name = format!("{prefix}{i}");
            while ring.var_names().contains(&name) {
                name.push('\'');
            }
            name
        })
        .collect()
}

/// The presentation of the tangent algebra: adjoin one T-variable per
/// X-variable and impose I together with the differential forms
/// sum_j (df_i/dX_j) T_j of the stored generators.
pub fn tangent_algebra<K: Field>(
    a: &PresentedAlgebra<K>,
    _opts: &GbOptions,
) -> CaResult<PresentedAlgebra<K>> {
    let base_ring = a.ring().clone();
    let n = base_ring.nvars();
    let ext = base_ring.extended(fresh_names(&base_ring, "T", n))?;
    let embed: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial<K>> = a
        .ideal()
        .generators()
        .iter()
        .map(|f| f.map_into(&ext, &embed))
        .collect();
    for f in a.ideal().generators() {
        let mut form = Polynomial::zero(&ext);
        for j in 0..n {
            let d = f.derivative(j).map_into(&ext, &embed);
            let tj = Polynomial::var(&ext, n + j);
            form = form.add(&d.mul(&tj)?);
        }
        gens.push(form);
    }
    let ideal = Ideal::new(&ext, gens)?;
    Ok(PresentedAlgebra {
        ring: ext,
        ideal,
        role: AlgebraRole::Tangent,
        block: Some(DifferentialBlock {
            base_ring,
            base_ideal: a.ideal().clone(),
            x_count: n,
            t_count: n,
            witness: None,
        }),
    })
}

/// A nonzerodivisor minor of the Jacobian of size height(I), scanned in
/// lexicographic (row set, column set) order; it cuts out a dense open
/// locus where the differentials are free, so saturating by it removes
/// exactly the torsion.
pub fn torsion_witness<K: Field>(
    a: &PresentedAlgebra<K>,
    opts: &GbOptions,
) -> CaResult<Polynomial<K>> {
    let ring = a.ring();
    let ideal = a.ideal();
    if ideal.is_zero_ideal() {
        return Ok(Polynomial::one(ring));
    }
    let c = (ring.nvars() as i64 - ideal.krull_dim(opts)?) as usize;
    if c == 0 {
        return Ok(Polynomial::one(ring));
    }
    let jac = jacobian(ideal);
    if c > jac.rows.min(jac.cols) {
        return Err(CaError::NoWitness);
    }
    // parallel prefilter: compute candidate minors and their nonvanishing
    // mod I; the sequential scan below keeps the deterministic choice
    let row_sets = combinations(jac.rows, c);
    let col_sets = combinations(jac.cols, c);
    let mut jobs = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rs in &row_sets {
        for cs in &col_sets {
            jobs.push((rs.clone(), cs.clone()));
        }
    }
    let gb = ideal.gb(opts)?;
    let candidates: Vec<Option<Polynomial<K>>> = par::try_map_vec(jobs, |(rs, cs)| {
        let det = jac.minor(&rs, &cs)?;
        if det.is_zero() {
            return Ok::<_, CaError>(None);
        }
        let nf = normal_form(&det, &gb)?;
        Ok((!nf.is_zero()).then(|| det.make_monic()))
    })?;
    let survivors: Vec<Polynomial<K>> = candidates.into_iter().flatten().collect();
    for det in &survivors {
        if ideal.is_nonzerodivisor(det, opts)? {
            return Ok(det.clone());
        }
    }
    // reduced non-domains can have every single minor vanish on some
    // component while the minor ideal still avoids all minimal primes;
    // by prime avoidance a combination of minors is then a
    // nonzerodivisor, and inverting it still trivializes the minor ideal
    // locally. Scan pair sums, then small multiples, deterministically.
    for i in 0..survivors.len() {
        for j in (i + 1)..survivors.len() {
            for scale in 1..=3i64 {
                let cand = survivors[i]
                    .add(&survivors[j].scale(&ring.field.from_i64(scale)))
                    .make_monic();
                if cand.is_zero() || ideal.contains(&cand, opts)? {
                    continue;
                }
                if ideal.is_nonzerodivisor(&cand, opts)? {
                    return Ok(cand);
                }
            }
        }
    }
    let mut total = Polynomial::zero(ring);
    for (k, det) in survivors.iter().enumerate() {
        total = total.add(&det.scale(&ring.field.from_i64(k as i64 + 1)));
    }
    if !total.is_zero()
        && !ideal.contains(&total, opts)?
        && ideal.is_nonzerodivisor(&total, opts)?
    {
        return Ok(total.make_monic());
    }
    Err(CaError::NoWitness)
}

/// Everything the saturation run learned.
#[derive(Clone, Debug)]
pub struct TorsionReport<K: Field> {
    pub tangent_ideal: Ideal<K>,
    pub rees_ideal: Ideal<K>,
    pub witness: Polynomial<K>,
    pub saturation_steps: usize,
    pub linear_type: bool,
    /// Reduced-basis elements of the Rees ideal outside the tangent ideal.
    pub new_generators: Vec<Polynomial<K>>,
}

/// Saturate the tangent presentation by a torsion witness, producing the
/// Rees presentation and the linear-type verdict.
pub fn rees_algebra<K: Field>(
    a: &PresentedAlgebra<K>,
    opts: &GbOptions,
) -> CaResult<(PresentedAlgebra<K>, TorsionReport<K>)> {
    let s = match a.role {
        AlgebraRole::Tangent => a.clone(),
        AlgebraRole::Base => tangent_algebra(a, opts)?,
        AlgebraRole::Rees => {
            return Err(CaError::Unsupported(
                "input already carries a Rees presentation".into(),
            ))
        }
    };
    let block = s.block.clone().expect("tangent role carries its block");
    let base = PresentedAlgebra::base(block.base_ideal.clone());
    let g = torsion_witness(&base, opts)?;
    rees_from_tangent(&s, g, None, opts)
}

/// The saturation step alone, for callers that computed (or cached) the
/// tangent presentation and witness themselves. `precomputed_saturation`
/// short-circuits the colon chain with an externally obtained result.
pub fn rees_from_tangent<K: Field>(
    s: &PresentedAlgebra<K>,
    g: Polynomial<K>,
    precomputed_saturation: Option<(Ideal<K>, usize)>,
    opts: &GbOptions,
) -> CaResult<(PresentedAlgebra<K>, TorsionReport<K>)> {
    if s.role != AlgebraRole::Tangent {
        return Err(CaError::Unsupported(
            "saturation starts from a tangent presentation".into(),
        ));
    }
    let block = s.block.clone().expect("tangent role carries its block");
    let embed: Vec<usize> = (0..block.x_count).collect();
    let (sat, steps) = match precomputed_saturation {
        Some((sat, steps)) => (sat, steps),
        None => {
            let g_ext = g.map_into(&s.ring, &embed);
            s.ideal.saturation(&g_ext, opts)?
        }
    };
    let linear_type = sat.equals(&s.ideal, opts)?;
    let j_gb = s.ideal.gb(opts)?;
    let mut new_generators = Vec::new();
    if !linear_type {
        for e in &sat.gb(opts)?.elements {
            if !normal_form(e, &j_gb)?.is_zero() {
                new_generators.push(e.clone());
                if new_generators.len() >= 4 {
                    break;
                }
            }
        }
    }
    let report = TorsionReport {
        tangent_ideal: s.ideal.clone(),
        rees_ideal: sat.clone(),
        witness: g.clone(),
        saturation_steps: steps,
        linear_type,
        new_generators,
    };
    let rees = PresentedAlgebra {
        ring: s.ring.clone(),
        ideal: sat,
        role: AlgebraRole::Rees,
        block: Some(DifferentialBlock {
            witness: Some(g),
            ..block
        }),
    };
    Ok((rees, report))
}

/// Fitt_i(E) for E = coker(M) with n generators: the ideal of
/// (n-i)-minors of M plus the defining ideal, lifted to the ambient ring.
pub fn fitting_ideal<K: Field>(e: &PresentedModule<K>, i: usize) -> CaResult<Ideal<K>> {
    let ring = e.algebra.ring();
    let n = e.generators();
    let defining = e.algebra.ideal();
    if i >= n {
        return Ideal::new(ring, vec![Polynomial::one(ring)]);
    }
    let t = n - i;
    let m = &e.presentation;
    if t > m.rows.min(m.cols) {
        // no minors of that size: the minor ideal is zero
        return Ok(defining.clone());
    }
    let mut gens = m.minors(t)?;
    gens.extend(defining.generators().iter().cloned());
    Ideal::new(ring, gens)
}

/// One row of a Fitting-height scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FtRecord {
    pub index: usize,
    pub height: Height,
    pub bound: i64,
}

/// Verdict of the height condition indexed by t: every Fitting ideal from
/// the rank upward clears height index - rank + t + 1.
#[derive(Clone, Debug)]
pub struct FtReport {
    pub t: u32,
    pub rank: i64,
    pub records: Vec<FtRecord>,
    pub verdict: bool,
}

/// Heights of the Fitting ideals from the rank up to the generator
/// count; they do not depend on t, so one scan serves every bound.
pub fn fitting_heights<K: Field>(
    e: &PresentedModule<K>,
    opts: &GbOptions,
) -> CaResult<Vec<(usize, Height)>> {
    let r = e.rank;
    let n = e.generators() as i64;
    let defining = e.algebra.ideal();
    let mut out = Vec::new();
    let mut i = r.max(0);
    while i < n {
        let fitt = fitting_ideal(e, i as usize)?;
        let h = height_in_quotient(&fitt, defining, opts)?;
        out.push((i as usize, h));
        i += 1;
    }
    Ok(out)
}

/// Assemble the report for one t from a precomputed height scan.
pub fn ft_report_from_heights(rank: i64, heights: &[(usize, Height)], t: u32) -> FtReport {
    let mut records = Vec::new();
    let mut verdict = true;
    for &(i, h) in heights {
        let bound = i as i64 - rank + t as i64 + 1;
        if !h.meets(bound) {
            verdict = false;
        }
        records.push(FtRecord {
            index: i,
            height: h,
            bound,
        });
    }
    FtReport {
        t,
        rank,
        records,
        verdict,
    }
}

pub fn ft_check<K: Field>(
    e: &PresentedModule<K>,
    t: u32,
    opts: &GbOptions,
) -> CaResult<FtReport> {
    let heights = fitting_heights(e, opts)?;
    Ok(ft_report_from_heights(e.rank, &heights, t))
}

/// The local embedding-dimension reading of the same condition: the named
/// alias audits use when citing the inequality edim <= 2 dim - t at
/// non-regular primes.
pub fn edim_criterion<K: Field>(
    a: &PresentedAlgebra<K>,
    t: u32,
    opts: &GbOptions,
) -> CaResult<bool> {
    let omega = omega_presentation(a, opts)?;
    Ok(ft_check(&omega, t, opts)?.verdict)
}

/// Witness for a general presented module: a nonzerodivisor minor of the
/// presentation of size equal to its generic rank mod I.
fn module_witness<K: Field>(e: &PresentedModule<K>, opts: &GbOptions) -> CaResult<Polynomial<K>> {
    let ring = e.algebra.ring();
    let ideal = e.algebra.ideal();
    let c = e.presentation_rank_mod(opts)?;
    if c == 0 {
        return Ok(Polynomial::one(ring));
    }
    let m = &e.presentation;
    for rs in combinations(m.rows, c) {
        for cs in combinations(m.cols, c) {
            let det = m.minor(&rs, &cs)?;
            if det.is_zero() {
                continue;
            }
            let det = det.make_monic();
            if !ideal.contains(&det, opts)? && ideal.is_nonzerodivisor(&det, opts)? {
                return Ok(det);
            }
        }
    }
    Err(CaError::NoWitness)
}

/// Rees presentation of an arbitrary presented module: one U-variable per
/// generator, linear forms from the presentation columns, saturated by a
/// module witness. Returns the ambient ring, the Rees ideal, and the size
/// of the X block.
pub fn module_rees_ideal<K: Field>(
    e: &PresentedModule<K>,
    opts: &GbOptions,
) -> CaResult<(Arc<PolyRing<K>>, Ideal<K>, usize)> {
    let base_ring = e.algebra.ring().clone();
    let n = base_ring.nvars();
    let s = e.generators();
    let ext = base_ring.extended(fresh_names(&base_ring, "U", s))?;
    let embed: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial<K>> = e
        .algebra
        .ideal()
        .generators()
        .iter()
        .map(|f| f.map_into(&ext, &embed))
        .collect();
    for c in 0..e.presentation.cols {
        let mut form = Polynomial::zero(&ext);
        for r in 0..s {
            let entry = e.presentation.at(r, c).map_into(&ext, &embed);
            form = form.add(&entry.mul(&Polynomial::var(&ext, n + r))?);
        }
        gens.push(form);
    }
    let sym = Ideal::new(&ext, gens)?;
    let g = module_witness(e, opts)?;
    if g.lead_monomial().is_some_and(|m| m.is_one()) {
        return Ok((ext, sym, n));
    }
    let g_ext = g.map_into(&ext, &embed);
    let (sat, _) = sym.saturation(&g_ext, opts)?;
    Ok((ext, sat, n))
}

/// Analytic spread of a presented module at the irrelevant maximal ideal:
/// dimension of the special fiber of its Rees algebra.
pub fn analytic_spread_of_module<K: Field>(
    e: &PresentedModule<K>,
    opts: &GbOptions,
) -> CaResult<i64> {
    let (ext, rees, n) = module_rees_ideal(e, opts)?;
    let mut gens = rees.generators().to_vec();
    for i in 0..n {
        gens.push(Polynomial::var(&ext, i));
    }
    Ideal::new(&ext, gens)?.krull_dim(opts)
}

/// An ideal viewed as a module over its base quotient: generators of q
/// become module generators, relations are the syzygies of q mod I.
pub fn ideal_as_module<K: Field>(
    q: &Ideal<K>,
    base: &PresentedAlgebra<K>,
    opts: &GbOptions,
) -> CaResult<PresentedModule<K>> {
    let ring = base.ring();
    if !q.ring().compatible(ring) {
        return Err(CaError::RingMismatch);
    }
    let m = q.generators().len();
    if m == 0 {
        return Err(CaError::ImproperIdeal);
    }
    let mut entries = q.generators().to_vec();
    entries.extend(base.ideal().generators().iter().cloned());
    let row = PolyMatrix::new(ring, 1, entries.len(), entries)?;
    let syz = crate::groebner::syzygies(&row, opts)?;
    // keep the q-portion of each syzygy as a relation column
    let cols: Vec<Vec<Polynomial<K>>> = (0..syz.cols)
        .map(|c| (0..m).map(|r| syz.at(r, c).clone()).collect())
        .filter(|col: &Vec<Polynomial<K>>| col.iter().any(|p| !p.is_zero()))
        .collect();
    let presentation = PolyMatrix::from_columns(ring, m, &cols)?;
    // a nonzero ideal in a domain has rank one
    Ok(PresentedModule {
        algebra: base.clone(),
        presentation,
        rank: 1,
    })
}

/// Analytic spread of an ideal at the irrelevant maximal ideal.
pub fn analytic_spread_of_ideal<K: Field>(
    q: &Ideal<K>,
    base: &PresentedAlgebra<K>,
    opts: &GbOptions,
) -> CaResult<i64> {
    if q.is_zero_ideal() {
        return Ok(0);
    }
    let e = ideal_as_module(q, base, opts)?;
    analytic_spread_of_module(&e, opts)
}

/// Quadric-part invariants of a homogeneous ideal inside n^2.
#[derive(Clone, Debug)]
pub struct QuadricSpread {
    /// Number of independent quadrics (dimension of the degree-2 part).
    pub quadric_count: usize,
    /// Analytic spread of the ideal they generate.
    pub spread: i64,
    /// Twice the height of the full ideal, the comparison value.
    pub twice_height: i64,
    pub equals_twice_height: bool,
    /// Rank of the gradient matrix of the quadrics (char-0 cross-check).
    pub jacobian_rank: usize,
}

/// Extract the degree-2 part of I, measure its analytic spread, and
/// compare with twice the height of I.
pub fn spread_of_quadric_part<K: Field>(
    i: &Ideal<K>,
    opts: &GbOptions,
) -> CaResult<QuadricSpread> {
    if !i.is_homogeneous(opts)? {
        return Err(CaError::NonHomogeneous);
    }
    if i.order_of_ideal(opts)? < 2 {
        return Err(CaError::NotInSquareOfIrrelevant);
    }
    let ring = i.ring();
    let quadrics: Vec<Polynomial<K>> = i
        .gb(opts)?
        .elements
        .iter()
        .filter(|g| g.degree() == Some(2))
        .cloned()
        .collect();
    let g = ring.nvars() as i64 - i.krull_dim(opts)?;
    let twice_height = 2 * g;
    if quadrics.is_empty() {
        return Ok(QuadricSpread {
            quadric_count: 0,
            spread: 0,
            twice_height,
            equals_twice_height: twice_height == 0,
            jacobian_rank: 0,
        });
    }
    let i2 = Ideal::new(ring, quadrics.clone())?;
    let ambient = PresentedAlgebra::base(Ideal::zero(ring));
    let spread = analytic_spread_of_ideal(&i2, &ambient, opts)?;
    let jac = jacobian(&i2).transpose();
    let jacobian_rank = jac.generic_rank()?;
    Ok(QuadricSpread {
        quadric_count: quadrics.len(),
        spread,
        twice_height,
        equals_twice_height: spread == twice_height,
        jacobian_rank,
    })
}

/// Minimal generators needed modulo the cube of the irrelevant ideal; for
/// homogeneous I inside n^2 this is the dimension of the degree-2 part.
pub fn mu_mod_cube<K: Field>(i: &Ideal<K>, opts: &GbOptions) -> CaResult<usize> {
    if i.is_zero_ideal() {
        return Ok(0);
    }
    if !i.is_homogeneous(opts)? {
        return Err(CaError::NonHomogeneous);
    }
    if i.order_of_ideal(opts)? < 2 {
        return Err(CaError::NotInSquareOfIrrelevant);
    }
    i.degree_part_dim(2, opts)
}

/// The differentials modulo torsion, presented by the T-linear part of
/// the Rees ideal: the degree-one piece of the Rees algebra is exactly
/// the module modulo its torsion.
pub fn omega_mod_torsion<K: Field>(
    a: &PresentedAlgebra<K>,
    opts: &GbOptions,
) -> CaResult<PresentedModule<K>> {
    let rees = match a.role {
        AlgebraRole::Rees => a.clone(),
        _ => rees_algebra(a, opts)?.0,
    };
    let block = rees.block().expect("rees carries its block").clone();
    let (from, to) = (block.x_count, block.x_count + block.t_count);
    let base = PresentedAlgebra::base(block.base_ideal.clone());
    let embed_back: Vec<usize> = (0..to)
        .map(|i| if i < from { i } else { i - from })
        .collect();
    let mut cols: Vec<Vec<Polynomial<K>>> = Vec::new();
    for e in &rees.ideal.gb(opts)?.elements {
        if e.homogeneous_block_degree(from, to) != Some(1) {
            continue;
        }
        // coefficient vector of the T-linear form, pushed down to k[X]
        let mut col = Vec::with_capacity(block.t_count);
        for j in 0..block.t_count {
            let coeff_terms: Vec<_> = e
                .terms
                .iter()
                .filter(|(m, _)| m.exps[from + j] == 1)
                .map(|(m, c)| {
                    let mut exps = m.exps.clone();
                    exps[from + j] = 0;
                    (crate::polycore::Monomial { exps }, c.clone())
                })
                .collect();
            let p = Polynomial::from_terms(&rees.ring, coeff_terms);
            col.push(p.map_into(&block.base_ring, &embed_back));
        }
        cols.push(col);
    }
    let presentation = PolyMatrix::from_columns(&block.base_ring, block.t_count, &cols)?;
    let rank = base.dim(opts)?;
    Ok(PresentedModule {
        algebra: base,
        presentation,
        rank,
    })
}
