//! Buchberger loop over submodules of free modules, with Gebauer-Moeller
//! pair pruning and sugar-degree selection.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use crate::error::{CaError, CaResult};
use crate::polycore::field::Field;
use crate::polycore::monomial::Monomial;
use crate::polycore::ring::PolyRing;

use super::vect::{cmp_modterm, Vect};

/// Operational knobs for a single basis computation.
#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Cooperative deadline; exceeded computations report `Timeout`.
    pub deadline: Option<Instant>,
    /// For homogeneous input only: discard S-pairs above this degree. The
    /// result is a basis valid through the truncation degree.
    pub truncate_at: Option<u32>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub basis_size_peak: usize,
}

/// A reduced basis of a submodule of R^rank (ideals are rank 1): lead
/// terms pairwise indivisible, every element monic with fully reduced
/// tail, sorted descending by lead term. Unique for a fixed submodule and
/// order, hence safely comparable across runs.
#[derive(Clone, Debug)]
pub struct ModuleBasis<K: Field> {
    pub ring: Arc<PolyRing<K>>,
    pub rank: usize,
    pub elements: Vec<Vect<K>>,
    pub stats: GbStats,
}

impl<K: Field> ModuleBasis<K> {
    pub fn lead_terms(&self) -> Vec<(u32, Monomial)> {
        self.elements
            .iter()
            .map(|v| {
                let (c, m, _) = v.lead().expect("reduced basis has no zeros");
                (c, m.clone())
            })
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct PairKey {
    sugar: i64,
    lcm_deg: u32,
    comp: u32,
    lcm: Vec<u16>,
    i: u32,
    j: u32,
}

/// Full normal form of `v` against the lead-term set of `basis`: no term
/// of the result is divisible by any basis lead. Also returns the sugar
/// bound of the reduction when `sugars` is supplied.
fn nf_against<K: Field>(
    ring: &PolyRing<K>,
    v: Vect<K>,
    basis: &[Vect<K>],
    sugars: Option<&[i64]>,
    sugar0: i64,
) -> CaResult<(Vect<K>, i64)> {
    let field = &ring.field;
    let mut sugar = sugar0;
    let mut rest = v;
    let mut done: Vec<(u32, Monomial, K::Elem)> = Vec::new();
    'outer: loop {
        // terms already scanned as irreducible stay irreducible: the lead
        // set is fixed and merges only touch terms below the reduced one
        let mut k = 0;
        while k < rest.terms.len() {
            let (c, m, _) = &rest.terms[k];
            let hit = basis.iter().enumerate().find(|(_, g)| {
                let (gc, gm, _) = g.lead().expect("basis elements are nonzero");
                gc == *c && gm.divides(m)
            });
            match hit {
                None => k += 1,
                Some((gi, g)) => {
                    let (_, gm, glc) = g.lead().unwrap();
                    let q = gm.quotient_into(m);
                    let s = field.div(&rest.terms[k].2, glc);
                    done.extend(rest.terms.drain(..k));
                    let g = g.clone();
                    rest = rest.sub_scaled(ring, &g, &q, &s)?;
                    if let Some(sg) = sugars {
                        sugar = sugar.max(sg[gi] + ring.weighted_degree(&q) as i64);
                    }
                    continue 'outer;
                }
            }
        }
        done.append(&mut rest.terms);
        break;
    }
    Ok((Vect { terms: done }, sugar))
}

pub(crate) struct Engine<'a, K: Field> {
    ring: &'a Arc<PolyRing<K>>,
    rank: usize,
    twists: Vec<i64>,
    opts: GbOptions,
    basis: Vec<Vect<K>>,
    sugars: Vec<i64>,
    queue: BTreeSet<PairKey>,
    stats: GbStats,
}

impl<'a, K: Field> Engine<'a, K> {
    pub fn new(
        ring: &'a Arc<PolyRing<K>>,
        rank: usize,
        twists: Option<Vec<i64>>,
        opts: &GbOptions,
    ) -> Self {
        let twists = twists.unwrap_or_else(|| vec![0; rank]);
        assert_eq!(twists.len(), rank);
        Engine {
            ring,
            rank,
            twists,
            opts: opts.clone(),
            basis: Vec::new(),
            sugars: Vec::new(),
            queue: BTreeSet::new(),
            stats: GbStats::default(),
        }
    }

    fn check_budget(&self) -> CaResult<()> {
        if let Some(deadline) = self.opts.deadline {
            if Instant::now() > deadline {
                return Err(CaError::Timeout);
            }
        }
        Ok(())
    }

    fn lead(&self, i: usize) -> (u32, &Monomial) {
        let (c, m, _) = self.basis[i].lead().expect("basis elements are nonzero");
        (c, m)
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> i64 {
        let (_, mi) = self.lead(i);
        let (_, mj) = self.lead(j);
        let di = self.sugars[i] + self.ring.weighted_degree(&mi.quotient_into(lcm)) as i64;
        let dj = self.sugars[j] + self.ring.weighted_degree(&mj.quotient_into(lcm)) as i64;
        di.max(dj)
    }

    /// Gebauer-Moeller update: prune and enqueue the pairs of the newly
    /// appended basis element `t`.
    fn update_pairs(&mut self, t: usize) {
        let (ct, mt) = {
            let (c, m) = self.lead(t);
            (c, m.clone())
        };

        // candidate pairs (i, t): lcm plus a coprime flag; the product
        // criterion is sound for ideals only
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for i in 0..t {
            let (ci, mi) = self.lead(i);
            if ci == ct {
                let cop = self.rank == 1 && mi.is_coprime(&mt);
                cands.push((i, mi.lcm(&mt), cop));
            }
        }

        // Gebauer-Moeller: drop a candidate once another candidate's lcm
        // divides it (equal lcms keep a single survivor); coprime pairs are
        // exempt from being dropped here and are removed afterwards
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (i, ref l, cop) = cands[idx];
            let dominated = !cop
                && (cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                    || kept.iter().any(|(_, l2, _)| l2.divides(l) && l2 != l));
            if !dominated {
                kept.push((i, l.clone(), cop));
            }
        }
        kept.retain(|(_, _, cop)| !cop);

        // chain criterion on queued old pairs
        let mut removed: Vec<PairKey> = Vec::new();
        for key in self.queue.iter() {
            if key.comp != ct {
                continue;
            }
            let lcm_old = Monomial::from_exps(&key.lcm);
            if !mt.divides(&lcm_old) {
                continue;
            }
            let (i, j) = (key.i as usize, key.j as usize);
            let (_, mi) = self.lead(i);
            let (_, mj) = self.lead(j);
            if mi.lcm(&mt) != lcm_old && mj.lcm(&mt) != lcm_old {
                removed.push(key.clone());
            }
        }
        for key in removed {
            self.queue.remove(&key);
        }

        for (i, lcm, _) in kept {
            let sugar = self.pair_sugar(i, t, &lcm);
            if let Some(cap) = self.opts.truncate_at {
                if sugar > cap as i64 {
                    continue;
                }
            }
            self.queue.insert(PairKey {
                sugar,
                lcm_deg: self.ring.weighted_degree(&lcm),
                comp: ct,
                lcm: lcm.exps.to_vec(),
                i: i as u32,
                j: t as u32,
            });
        }
    }

    fn append(&mut self, v: Vect<K>, sugar: i64) {
        let v = v.make_monic(self.ring);
        self.basis.push(v);
        self.sugars.push(sugar);
        self.stats.basis_size_peak = self.stats.basis_size_peak.max(self.basis.len());
        self.update_pairs(self.basis.len() - 1);
    }

    pub fn run(&mut self, inputs: Vec<Vect<K>>) -> CaResult<()> {
        for v in inputs {
            if v.is_zero() {
                continue;
            }
            let sugar0 = v.twisted_degree(self.ring, &self.twists).unwrap_or(0);
            let (nf, sugar) = nf_against(self.ring, v, &self.basis, Some(&self.sugars), sugar0)?;
            if !nf.is_zero() {
                self.append(nf, sugar);
            }
        }

        while let Some(key) = self.queue.iter().next().cloned() {
            self.queue.remove(&key);
            self.check_budget()?;
            self.stats.pairs_processed += 1;

            let (i, j) = (key.i as usize, key.j as usize);
            let lcm = Monomial::from_exps(&key.lcm);
            let (_, mi) = self.lead(i);
            let (_, mj) = self.lead(j);
            let qi = mi.quotient_into(&lcm);
            let qj = mj.quotient_into(&lcm);
            let one = self.ring.field.one();
            let minus_one = self.ring.field.from_i64(-1);
            // basis is monic: S = g_i x^qi - g_j x^qj
            let minus_gj = Vect::zero().sub_scaled(self.ring, &self.basis[j], &qj, &one)?;
            let spair = minus_gj.sub_scaled(self.ring, &self.basis[i], &qi, &minus_one)?;
            let (nf, sugar) =
                nf_against(self.ring, spair, &self.basis, Some(&self.sugars), key.sugar)?;
            if nf.is_zero() {
                self.stats.zero_reductions += 1;
            } else {
                self.append(nf, sugar);
            }
        }
        Ok(())
    }

    /// Interreduce into the unique reduced basis, sorted descending by
    /// lead term.
    pub fn finish(self) -> CaResult<ModuleBasis<K>> {
        let ring = self.ring;
        let mut order: Vec<usize> = (0..self.basis.len()).collect();
        order.sort_by(|&a, &b| {
            let (ca, ma, _) = self.basis[a].lead().unwrap();
            let (cb, mb, _) = self.basis[b].lead().unwrap();
            cmp_modterm(&**ring, &(ca, ma.clone()), &(cb, mb.clone()))
        });
        // ascending scan: divisors precede multiples, so redundant leads
        // are exactly those divisible by an already-kept lead
        let mut kept: Vec<Vect<K>> = Vec::new();
        for idx in order {
            let (c, m, _) = self.basis[idx].lead().unwrap();
            let redundant = kept.iter().any(|g| {
                let (gc, gm, _) = g.lead().unwrap();
                gc == c && gm.divides(m)
            });
            if !redundant {
                kept.push(self.basis[idx].clone());
            }
        }
        let mut reduced: Vec<Vect<K>> = Vec::with_capacity(kept.len());
        for i in 0..kept.len() {
            let mut others: Vec<Vect<K>> = Vec::with_capacity(kept.len().saturating_sub(1));
            others.extend(kept[..i].iter().cloned());
            others.extend(kept[i + 1..].iter().cloned());
            let (nf, _) = nf_against(ring, kept[i].clone(), &others, None, 0)?;
            reduced.push(nf.make_monic(ring));
        }
        reduced.sort_by(|a, b| {
            let (ca, ma, _) = a.lead().unwrap();
            let (cb, mb, _) = b.lead().unwrap();
            cmp_modterm(&**ring, &(cb, mb.clone()), &(ca, ma.clone()))
        });
        Ok(ModuleBasis {
            ring: ring.clone(),
            rank: self.rank,
            elements: reduced,
            stats: self.stats,
        })
    }
}

/// Reduced basis of the span of `inputs` in R^rank.
pub fn module_groebner<K: Field>(
    ring: &Arc<PolyRing<K>>,
    rank: usize,
    inputs: Vec<Vect<K>>,
    twists: Option<Vec<i64>>,
    opts: &GbOptions,
) -> CaResult<ModuleBasis<K>> {
    let mut engine = Engine::new(ring, rank, twists, opts);
    engine.run(inputs)?;
    engine.finish()
}

/// Full normal form of `v` against any basis (reduced or not).
pub fn vect_normal_form<K: Field>(
    ring: &Arc<PolyRing<K>>,
    v: Vect<K>,
    basis: &[Vect<K>],
) -> CaResult<Vect<K>> {
    let (nf, _) = nf_against(&**ring, v, basis, None, 0)?;
    Ok(nf)
}
