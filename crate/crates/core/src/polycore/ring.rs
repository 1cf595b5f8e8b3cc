//! Graded polynomial rings over an exact ground field.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{CaError, CaResult};
use crate::polycore::field::Field;
use crate::polycore::monomial::{Monomial, MonomialOrder};

pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// k[X_1..X_n] with a monomial order and per-variable positive weights.
/// Immutable after construction; shared through `Arc`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolyRing<K: Field> {
    pub field: K,
    vars: Vec<String>,
    pub order: MonomialOrder,
    weights: Vec<u32>,
    pub degree_cap: u32,
}

impl<K: Field> PolyRing<K> {
    pub fn new<S: Into<String>>(
        field: K,
        vars: Vec<S>,
        order: MonomialOrder,
    ) -> CaResult<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(CaError::DuplicateVariable(v.clone()));
            }
        }
        let n = vars.len();
        Ok(Arc::new(PolyRing {
            field,
            vars,
            order,
            weights: vec![1; n],
            degree_cap: DEFAULT_DEGREE_CAP,
        }))
    }

    pub fn with_weights(mut self: Arc<Self>, weights: Vec<u32>) -> CaResult<Arc<Self>> {
        if weights.len() != self.vars.len() || weights.contains(&0) {
            return Err(CaError::ShapeMismatch(
                "weights must be positive, one per variable".into(),
            ));
        }
        Arc::make_mut(&mut self).weights = weights;
        Ok(self)
    }

    pub fn with_degree_cap(mut self: Arc<Self>, cap: u32) -> Arc<Self> {
        Arc::make_mut(&mut self).degree_cap = cap;
        self
    }

    pub fn with_order(mut self: Arc<Self>, order: MonomialOrder) -> Arc<Self> {
        Arc::make_mut(&mut self).order = order;
        self
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> CaResult<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| CaError::UnknownVariable(name.to_string()))
    }

    pub fn standard_grading(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, &self.weights)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.weights)
    }

    /// Same ring in the algebraic sense (field, variables, weights); the
    /// monomial order must agree too so term lists are interchangeable.
    pub fn compatible(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    /// A new ring with extra variables appended (weight 1), keeping the
    /// order kind. Used to adjoin the differential block T_1..T_n.
    pub fn extended<S: Into<String>>(self: &Arc<Self>, extra: Vec<S>) -> CaResult<Arc<Self>> {
        let mut vars = self.vars.clone();
        vars.extend(extra.into_iter().map(Into::into));
        let mut weights = self.weights.clone();
        weights.resize(vars.len(), 1);
        let r = PolyRing::new(self.field.clone(), vars, self.order)?;
        Ok(r.with_weights(weights)?.with_degree_cap(self.degree_cap))
    }

    /// A new ring with one fresh variable in front and a single-variable
    /// elimination block order; used by the saturation and radical tricks.
    pub fn with_fresh_front_var(self: &Arc<Self>, name: &str) -> CaResult<Arc<Self>> {
        let mut fresh = name.to_string();
        while self.vars.contains(&fresh) {
            fresh.push('\'');
        }
        let mut vars = vec![fresh];
        vars.extend(self.vars.iter().cloned());
        let mut weights = vec![1u32];
        weights.extend_from_slice(&self.weights);
        let r = PolyRing::new(self.field.clone(), vars, MonomialOrder::Block(1))?;
        Ok(r.with_weights(weights)?.with_degree_cap(self.degree_cap))
    }

    /// A ring on the same variables reordered so `front` comes first and a
    /// block order eliminating it. Returns the ring and the source-index of
    /// each new position.
    pub fn reordered_for_elimination(
        self: &Arc<Self>,
        front: &[usize],
    ) -> CaResult<(Arc<Self>, Vec<usize>)> {
        let mut perm: Vec<usize> = front.to_vec();
        for i in 0..self.nvars() {
            if !front.contains(&i) {
                perm.push(i);
            }
        }
        let vars: Vec<String> = perm.iter().map(|&i| self.vars[i].clone()).collect();
        let weights: Vec<u32> = perm.iter().map(|&i| self.weights[i]).collect();
        let r = PolyRing::new(self.field.clone(), vars, MonomialOrder::Block(front.len()))?;
        Ok((
            r.with_weights(weights)?.with_degree_cap(self.degree_cap),
            perm,
        ))
    }
}
