//! Typed sessions built from parsed statements: a ring plus named ideals
//! and matrices, all checked against the session ring.

use std::collections::BTreeMap;
use std::sync::Arc;

use tangent_core::error::CaError;
use tangent_core::idealops::Ideal;
use tangent_core::polycore::{
    build_matrix, Field, MatrixKind, MonomialOrder, PolyMatrix, PolyRing, Polynomial,
};

use crate::ast::{Expr, IdealSpec, MatrixSpec, Stmt};

#[derive(Debug)]
pub enum SessionError {
    Semantic(String),
    Math(CaError),
}

impl std::fmt::Display for SessionError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SessionError::Semantic(m) => write!(f, "semantic error: {m}"),
            SessionError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SessionError {}

impl From<CaError> for SessionError {
    fn from(e: CaError) -> Self {
        SessionError::Math(e)
    }
}

pub type SResult<T> = Result<T, SessionError>;

/// Options shared by every operation in a run.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub characteristic: u32,
    pub order: MonomialOrder,
    pub max_degree: u32,
    pub timeout_secs: u64,
    pub use_cache: bool,
    pub cache_dir: Option<std::path::PathBuf>,
    pub with_timing: bool,
    /// Extra budget for the expensive duality probes; `None` skips them.
    pub stretch_secs: Option<u64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            characteristic: tangent_core::polycore::DEFAULT_PRIME,
            order: MonomialOrder::DegRevLex,
            max_degree: 64,
            timeout_secs: 600,
            use_cache: true,
            cache_dir: None,
            with_timing: false,
            stretch_secs: None,
        }
    }
}

impl RunOptions {
    /// Budget for one operation, started now.
    pub fn gb(&self) -> tangent_core::groebner::GbOptions {
        tangent_core::groebner::GbOptions {
            deadline: Some(std::time::Instant::now() + std::time::Duration::from_secs(self.timeout_secs)),
            truncate_at: None,
        }
    }

    /// The long-leash budget for stretch goals; falls back to the
    /// ordinary per-operation budget if no stretch was granted.
    pub fn gb_stretch(&self) -> tangent_core::groebner::GbOptions {
        let secs = self.stretch_secs.unwrap_or(self.timeout_secs);
        tangent_core::groebner::GbOptions {
            deadline: Some(std::time::Instant::now() + std::time::Duration::from_secs(secs)),
            truncate_at: None,
        }
    }
}

/// Named objects over a fixed ring.
pub struct Session<K: Field> {
    pub ring: Arc<PolyRing<K>>,
    pub ideals: BTreeMap<String, Ideal<K>>,
    pub matrices: BTreeMap<String, PolyMatrix<K>>,
    pub checks: Vec<crate::ast::CheckSpec>,
}

impl<K: Field> Session<K> {
    pub fn build(field: K, stmts: &[Stmt], opts: &RunOptions) -> SResult<Session<K>> {
        let mut ring: Option<Arc<PolyRing<K>>> = None;
        let mut ideals = BTreeMap::new();
        let mut matrices = BTreeMap::new();
        let mut checks = Vec::new();
        for stmt in stmts {
            match stmt {
                Stmt::Char(_) => {
                    // handled by the dispatcher before the session is built
                }
                Stmt::Ring(names) => {
                    if ring.is_some() {
                        return Err(SessionError::Semantic(
                            "ring may only be declared once".into(),
                        ));
                    }
                    let r = PolyRing::new(field.clone(), names.clone(), opts.order)?
                        .with_degree_cap(opts.max_degree);
                    ring = Some(r);
                }
                Stmt::Matrix(name, spec) => {
                    let r = ring
                        .as_ref()
                        .ok_or_else(|| SessionError::Semantic("declare the ring first".into()))?;
                    let m = match spec {
                        MatrixSpec::Generic(rr, cc) => {
                            build_matrix(MatrixKind::Generic(*rr, *cc), r)?
                        }
                        MatrixSpec::Symmetric(s) => build_matrix(MatrixKind::Symmetric(*s), r)?,
                        MatrixSpec::Catalecticant(c) => {
                            build_matrix(MatrixKind::Catalecticant(*c), r)?
                        }
                        MatrixSpec::Literal(rows) => {
                            let rc = rows.len();
                            let cc = rows.first().map(|r| r.len()).unwrap_or(0);
                            if rows.iter().any(|r| r.len() != cc) {
                                return Err(SessionError::Semantic(
                                    "matrix rows have unequal lengths".into(),
                                ));
                            }
                            let mut entries = Vec::with_capacity(rc * cc);
                            for row in rows {
                                for e in row {
                                    entries.push(eval_expr(e, r)?);
                                }
                            }
                            PolyMatrix::new(r, rc, cc, entries)?
                        }
                    };
                    matrices.insert(name.clone(), m);
                }
                Stmt::Ideal(name, spec) => {
                    let r = ring
                        .as_ref()
                        .ok_or_else(|| SessionError::Semantic("declare the ring first".into()))?;
                    let gens = match spec {
                        IdealSpec::Polys(exprs) => {
                            let mut gens = Vec::with_capacity(exprs.len());
                            for e in exprs {
                                gens.push(eval_expr(e, r)?);
                            }
                            gens
                        }
                        IdealSpec::Minors(t, mname) => {
                            let m = matrices.get(mname).ok_or_else(|| {
                                SessionError::Semantic(format!("unknown matrix `{mname}`"))
                            })?;
                            m.minors(*t)?
                        }
                    };
                    ideals.insert(name.clone(), Ideal::new(r, gens)?);
                }
                Stmt::Check(spec) => checks.push(spec.clone()),
            }
        }
        let ring = ring.ok_or_else(|| SessionError::Semantic("no ring declared".into()))?;
        Ok(Session {
            ring,
            ideals,
            matrices,
            checks,
        })
    }

    /// The ideal an audit or battery applies to: `I` if present, else the
    /// unique ideal of the session.
    pub fn principal_ideal(&self) -> SResult<&Ideal<K>> {
        if let Some(i) = self.ideals.get("I") {
            return Ok(i);
        }
        if self.ideals.len() == 1 {
            return Ok(self.ideals.values().next().unwrap());
        }
        Err(SessionError::Semantic(
            "name the target ideal `I` (several ideals are defined)".into(),
        ))
    }
}

pub fn eval_expr<K: Field>(
    e: &Expr,
    ring: &Arc<PolyRing<K>>,
) -> SResult<Polynomial<K>> {
    Ok(match e {
        Expr::Int(v) => Polynomial::constant(ring, ring.field.from_i64(*v)),
        Expr::Var(name) => {
            let i = ring
                .var_index(name)
                .map_err(|_| SessionError::Semantic(format!("unknown variable `{name}`")))?;
            Polynomial::var(ring, i)
        }
        Expr::Neg(a) => eval_expr(a, ring)?.neg(),
        Expr::Add(a, b) => eval_expr(a, ring)?.add(&eval_expr(b, ring)?),
        Expr::Sub(a, b) => eval_expr(a, ring)?.sub(&eval_expr(b, ring)?),
        Expr::Mul(a, b) => eval_expr(a, ring)?.mul(&eval_expr(b, ring)?)?,
        Expr::Pow(a, e) => {
            let base = eval_expr(a, ring)?;
            let mut acc = Polynomial::one(ring);
            for _ in 0..*e {
                acc = acc.mul(&base)?;
            }
            acc
        }
    })
}

/// Characteristic named in the statements, if any.
pub fn declared_characteristic(stmts: &[Stmt]) -> Option<u32> {
    stmts.iter().find_map(|s| match s {
        Stmt::Char(p) => Some(*p),
        _ => None,
    })
}
