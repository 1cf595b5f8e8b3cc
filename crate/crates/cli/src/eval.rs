//! Executor for `check` statements in session files.

use serde_json::json;
use tangent_core::diffalg::{
    ft_check, mu_mod_cube, omega_presentation, spread_of_quadric_part, tangent_algebra,
    PresentedAlgebra,
};
use tangent_core::homology::{
    cy_type_check, is_cohen_macaulay_algebra, is_gorenstein, koszul_h1_is_zero,
    resolve_quotient_ring,
};
use tangent_core::idealops::Ideal;
use tangent_core::polycore::Field;

use crate::battery::cached_rees;
use crate::cache::DiskCache;
use crate::report::{budgeted, Outcome, Recorder, Report};
use crate::session::{RunOptions, SResult, Session, SessionError};

fn target<'s, K: Field>(session: &'s Session<K>, args: &[String]) -> SResult<(&'s str, &'s Ideal<K>)> {
    match args.first() {
        Some(name) => {
            let (k, v) = session
                .ideals
                .get_key_value(name.as_str())
                .ok_or_else(|| SessionError::Semantic(format!("unknown ideal `{name}`")))?;
            Ok((k.as_str(), v))
        }
        None => {
            let i = session.principal_ideal()?;
            Ok(("I", i))
        }
    }
}

pub fn run_checks<K: Field>(
    name: &str,
    session: &Session<K>,
    opts: &RunOptions,
    cache: Option<&DiskCache>,
) -> SResult<Report> {
    let mut rec = Recorder::new(opts.with_timing);
    let mut extra_reports: Vec<Report> = Vec::new();
    for check in &session.checks {
        let op = check.op.as_str();
        match op {
            "battery" => {
                let rep = crate::battery::run_battery(name, session, opts, cache)?;
                extra_reports.push(rep);
            }
            "audit" => {
                let tag = check.args.first().ok_or_else(|| {
                    SessionError::Semantic("check audit needs a theorem tag".into())
                })?;
                let (rep, _) = crate::audit::run_audit(tag, session, opts, cache)?;
                extra_reports.push(rep);
            }
            _ => {
                let (iname, ideal) = target(session, &check.args)?;
                let inputs = json!({"ideal": iname, "args": check.args});
                let a = PresentedAlgebra::base(ideal.clone());
                match op {
                    "dim" => {
                        rec.run("krull_dim", inputs, || ideal.krull_dim(&opts.gb()))?;
                    }
                    "edim" => {
                        rec.run("edim", inputs, || a.edim(&opts.gb()))?;
                    }
                    "order" => {
                        rec.run("order_of_ideal", inputs, || ideal.order_of_ideal(&opts.gb()))?;
                    }
                    "mu3" => {
                        rec.run("mu_mod_cube", inputs, || mu_mod_cube(ideal, &opts.gb()))?;
                    }
                    "hilbert" => {
                        let hs = ideal.hilbert_series(&opts.gb()).map_err(SessionError::Math)?;
                        rec.push_value(
                            "hilbert_series",
                            inputs,
                            json!({"series": hs.render(), "dim": hs.dim, "a_invariant": hs.a_invariant()}),
                            None,
                        );
                    }
                    "tangent" => {
                        let s = tangent_algebra(&a, &opts.gb()).map_err(SessionError::Math)?;
                        rec.push_value(
                            "tangent_algebra",
                            inputs,
                            json!({
                                "variables": s.ring().var_names(),
                                "generators": s.ideal().generators().iter().map(|g| g.render()).collect::<Vec<_>>(),
                            }),
                            None,
                        );
                    }
                    "rees" => {
                        let out = budgeted(cached_rees(&a, opts, cache)).map_err(SessionError::Math)?;
                        let v = match &out {
                            Outcome::Ok((_, rep)) => json!({
                                "linear_type": rep.linear_type,
                                "witness": rep.witness.render(),
                                "saturation_steps": rep.saturation_steps,
                                "new_generators": rep.new_generators.iter().map(|p| p.render()).collect::<Vec<_>>(),
                            }),
                            Outcome::NotCheckable(r) => json!({"status": "not-checkable", "reason": r}),
                        };
                        rec.push_value("rees_algebra", inputs, v, None);
                    }
                    "ft" => {
                        let t: u32 = check
                            .args
                            .get(1)
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| {
                                SessionError::Semantic("check ft needs an index t".into())
                            })?;
                        let omega = omega_presentation(&a, &opts.gb()).map_err(SessionError::Math)?;
                        let r = ft_check(&omega, t, &opts.gb()).map_err(SessionError::Math)?;
                        rec.push_value(
                            "ft_check",
                            inputs,
                            json!({"t": t, "verdict": r.verdict, "rank": r.rank}),
                            None,
                        );
                    }
                    "cm" => {
                        let out = budgeted(is_cohen_macaulay_algebra(&a, &opts.gb()))
                            .map_err(SessionError::Math)?;
                        rec.push_value("is_cohen_macaulay", inputs, out.to_value(), None);
                    }
                    "gorenstein" => {
                        let out =
                            budgeted(is_gorenstein(&a, &opts.gb())).map_err(SessionError::Math)?;
                        rec.push_value("is_gorenstein", inputs, out.to_value(), None);
                    }
                    "cy" => {
                        let out =
                            budgeted(cy_type_check(&a, &opts.gb())).map_err(SessionError::Math)?;
                        rec.push_value("cy_type_check", inputs, out.to_value(), None);
                    }
                    "resolve" => {
                        let res = resolve_quotient_ring(ideal, &opts.gb())
                            .map_err(SessionError::Math)?;
                        let betti = res.betti();
                        rec.push_value(
                            "free_resolution",
                            inputs,
                            json!({
                                "length": res.length(),
                                "betti": betti.render(),
                                "ranks": res.modules.iter().map(|m| m.rank()).collect::<Vec<_>>(),
                            }),
                            None,
                        );
                    }
                    "spread2" => {
                        let out = budgeted(spread_of_quadric_part(ideal, &opts.gb()))
                            .map_err(SessionError::Math)?;
                        let v = match &out {
                            Outcome::Ok(q) => json!({
                                "quadric_count": q.quadric_count,
                                "spread": q.spread,
                                "twice_height": q.twice_height,
                                "equal": q.equals_twice_height,
                                "jacobian_rank": q.jacobian_rank,
                            }),
                            Outcome::NotCheckable(r) => json!({"status": "not-checkable", "reason": r}),
                        };
                        rec.push_value("spread_of_quadric_part", inputs, v, None);
                    }
                    "h1zero" => {
                        let out = budgeted(koszul_h1_is_zero(ideal, &opts.gb()))
                            .map_err(SessionError::Math)?;
                        rec.push_value("koszul_h1_is_zero", inputs, out.to_value(), None);
                    }
                    other => {
                        return Err(SessionError::Semantic(format!(
                            "unknown check `{other}`"
                        )))
                    }
                }
            }
        }
    }
    let mut report = Report {
        session: crate::battery::session_header(name, session, opts),
        operations: rec.records,
    };
    for extra in extra_reports {
        report.operations.extend(extra.operations);
    }
    Ok(report)
}
