//! The canonical measurement battery an example runs through: dimensions,
//! quadric counts, the tangent/Rees pipeline with its linear-type verdict,
//! Fitting-height conditions, and duality checks within budget.

use serde_json::{json, Value};
use tangent_core::diffalg::{
    omega_presentation, rees_from_tangent, tangent_algebra, torsion_witness, FtReport,
    PresentedAlgebra, TorsionReport,
};
use tangent_core::error::CaError;
use tangent_core::homology::{cy_type_check, is_cohen_macaulay_algebra, is_gorenstein};
use tangent_core::polycore::Field;

use crate::cache::DiskCache;
use crate::report::{budgeted, Outcome, Recorder, Report};
use crate::session::{RunOptions, SResult, Session, SessionError};

fn ft_to_value(r: &FtReport) -> Value {
    json!({
        "t": r.t,
        "rank": r.rank,
        "verdict": r.verdict,
        "records": r.records.iter().map(|rec| json!({
            "index": rec.index,
            "height": rec.height.to_string(),
            "bound": rec.bound,
        })).collect::<Vec<_>>(),
    })
}

fn torsion_to_value<K: Field>(rep: &TorsionReport<K>) -> Value {
    json!({
        "linear_type": rep.linear_type,
        "witness": rep.witness.render(),
        "saturation_steps": rep.saturation_steps,
        "new_generators": rep.new_generators.iter().map(|p| p.render()).collect::<Vec<_>>(),
    })
}

/// Run the Rees pipeline with the disk cache consulted for the tangent
/// basis and the saturation result.
pub fn cached_rees<K: Field>(
    a: &PresentedAlgebra<K>,
    opts: &RunOptions,
    cache: Option<&DiskCache>,
) -> Result<(PresentedAlgebra<K>, TorsionReport<K>), CaError> {
    let gb_opts = opts.gb();
    let s = tangent_algebra(a, &gb_opts)?;
    if let Some(cache) = cache {
        cache.warm(s.ideal(), &gb_opts)?;
    }
    let g = torsion_witness(a, &gb_opts)?;
    let precomputed = cache.and_then(|c| {
        let key = crate::cache::saturation_key(s.ideal(), &g);
        c.load_ideal(s.ideal().ring(), &key)
    });
    let had_hit = precomputed.is_some();
    let (rees, report) = rees_from_tangent(&s, g.clone(), precomputed, &gb_opts)?;
    if let Some(cache) = cache {
        if !had_hit {
            let key = crate::cache::saturation_key(s.ideal(), &g);
            cache.store_ideal(&key, &report.rees_ideal, report.saturation_steps, &gb_opts)?;
        }
    }
    Ok((rees, report))
}

/// Execute the battery for a named session, producing the operation log.
pub fn run_battery<K: Field>(
    name: &str,
    session: &Session<K>,
    opts: &RunOptions,
    cache: Option<&DiskCache>,
) -> SResult<Report> {
    let ideal = session.principal_ideal()?.clone();
    let mut rec = Recorder::new(opts.with_timing);
    let a = PresentedAlgebra::base(ideal.clone());
    if let Some(cache) = cache {
        cache.warm(&ideal, &opts.gb()).map_err(SessionError::Math)?;
    }

    let inputs = json!({"ideal": "I"});
    let dim = rec.run("krull_dim", inputs.clone(), || ideal.krull_dim(&opts.gb()))?;
    rec.run("height", inputs.clone(), || {
        Ok(session.ring.nvars() as i64 - dim)
    })?;
    rec.run("edim", inputs.clone(), || a.edim(&opts.gb()))?;

    let homogeneous = ideal.is_homogeneous(&opts.gb()).map_err(SessionError::Math)?;
    if homogeneous && session.ring.standard_grading() {
        rec.run("order_of_ideal", inputs.clone(), || {
            ideal.order_of_ideal(&opts.gb())
        })?;
        let hs = ideal.hilbert_series(&opts.gb()).map_err(SessionError::Math)?;
        rec.push_value(
            "hilbert_series",
            inputs.clone(),
            json!({"series": hs.render(), "dim": hs.dim, "a_invariant": hs.a_invariant()}),
            None,
        );
        if ideal.order_of_ideal(&opts.gb()).map(|o| o >= 2).unwrap_or(false) {
            rec.run("mu_mod_cube", inputs.clone(), || {
                tangent_core::diffalg::mu_mod_cube(&ideal, &opts.gb())
            })?;
        }
    }

    // the differential pipeline
    let rees_outcome = budgeted(cached_rees(&a, opts, cache)).map_err(SessionError::Math)?;
    let rees = match &rees_outcome {
        Outcome::Ok((rees, report)) => {
            rec.push_value(
                "rees_algebra",
                inputs.clone(),
                torsion_to_value(report),
                None,
            );
            Some(rees.clone())
        }
        Outcome::NotCheckable(reason) => {
            rec.push_value(
                "rees_algebra",
                inputs.clone(),
                json!({"status": "not-checkable", "reason": reason}),
                None,
            );
            None
        }
    };

    let omega = omega_presentation(&a, &opts.gb()).map_err(SessionError::Math)?;
    let heights = budgeted(tangent_core::diffalg::fitting_heights(&omega, &opts.gb()))
        .map_err(SessionError::Math)?;
    for t in 0..=2u32 {
        let v = match &heights {
            Outcome::Ok(h) => {
                ft_to_value(&tangent_core::diffalg::ft_report_from_heights(omega.rank, h, t))
            }
            Outcome::NotCheckable(reason) => json!({"status": "not-checkable", "reason": reason}),
        };
        rec.push_value("ft_check", json!({"ideal": "I", "t": t}), v, None);
    }

    let cm_base = budgeted(is_cohen_macaulay_algebra(&a, &opts.gb())).map_err(SessionError::Math)?;
    rec.push_value("is_cohen_macaulay", json!({"object": "base"}), cm_base.to_value(), None);
    let gor = budgeted(is_gorenstein(&a, &opts.gb())).map_err(SessionError::Math)?;
    rec.push_value("is_gorenstein", json!({"object": "base"}), gor.to_value(), None);
    if homogeneous && session.ring.standard_grading() {
        let cy = budgeted(cy_type_check(&a, &opts.gb())).map_err(SessionError::Math)?;
        rec.push_value("cy_type_check", json!({"object": "base"}), cy.to_value(), None);
    }

    // stretch goal: depth of the tangent algebra presentation, attempted
    // only when a stretch budget was granted
    if let (Some(rees), Some(budget)) = (&rees, opts.stretch_secs) {
        let tangent_cm = budgeted(tangent_cm_probe(rees, opts)).map_err(SessionError::Math)?;
        rec.push_value(
            "is_cohen_macaulay",
            json!({"object": "tangent", "budget_secs": budget}),
            tangent_cm.to_value(),
            None,
        );
    }

    Ok(Report {
        session: session_header(name, session, opts),
        operations: rec.records,
    })
}

/// Cohen-Macaulayness of the tangent presentation under the stretch
/// budget; the resolution is the expensive part.
fn tangent_cm_probe<K: Field>(
    rees: &PresentedAlgebra<K>,
    opts: &RunOptions,
) -> Result<bool, CaError> {
    let block = rees.block().expect("rees block");
    let tangent = PresentedAlgebra::base(block.base_ideal.clone());
    let s = tangent_algebra(&tangent, &opts.gb_stretch())?;
    is_cohen_macaulay_algebra(&s, &opts.gb_stretch())
}

pub fn session_header<K: Field>(name: &str, session: &Session<K>, opts: &RunOptions) -> Value {
    json!({
        "example": name,
        "characteristic": opts.characteristic,
        "order": format!("{:?}", session.ring.order),
        "variables": session.ring.var_names(),
        "ideals": session.ideals.iter().map(|(k, v)| {
            (k.clone(), v.generators().iter().map(|g| g.render()).collect::<Vec<_>>())
        }).collect::<std::collections::BTreeMap<_, _>>(),
        "max_degree": opts.max_degree,
        "lane": tangent_core::par::lane(),
    })
}

/// Build a session for a named example, with the run options' field.
pub fn example_session<K: Field>(
    name: &str,
    field: K,
    opts: &RunOptions,
) -> SResult<Session<K>> {
    let src = crate::corpus::example_source(name)
        .ok_or_else(|| SessionError::Semantic(format!("unknown example `{name}`")))?;
    let stmts = crate::ast::Parser::parse(&src)
        .map_err(|e| SessionError::Semantic(format!("corpus parse: {e}")))?;
    Session::build(field, &stmts, opts)
}
