//! Command-line front end: the input grammar, the example corpus, theorem
//! audits, batteries, deterministic reporting, and the on-disk basis
//! cache.

pub mod ast;
pub mod audit;
pub mod battery;
pub mod cache;
pub mod corpus;
pub mod eval;
pub mod report;
pub mod session;

use std::path::PathBuf;

use tangent_core::polycore::{Field, GroundField, PrimeField, Rationals};

use report::Report;
use session::{RunOptions, SResult, Session, SessionError};

/// Outcome of a CLI action: the reports plus the process exit code.
pub struct RunOutcome {
    pub reports: Vec<Report>,
    pub exit_code: i32,
}

fn cache_for(opts: &RunOptions) -> Option<cache::DiskCache> {
    if !opts.use_cache {
        return None;
    }
    let dir = opts
        .cache_dir
        .clone()
        .unwrap_or_else(|| PathBuf::from(".tf-cache"));
    cache::DiskCache::new(&dir).ok()
}

fn exit_from_reports(reports: &[Report]) -> i32 {
    let mut any_nc = false;
    for r in reports {
        for op in &r.operations {
            if let Some(status) = op.result.get("status").and_then(|v| v.as_str()) {
                if status == "not-checkable" {
                    any_nc = true;
                }
            }
            if let Some(v) = op.result.get("value") {
                let _ = v;
            }
        }
    }
    if any_nc {
        3
    } else {
        0
    }
}

fn run_example_generic<K: Field>(name: &str, field: K, opts: &RunOptions) -> SResult<Report> {
    let session = battery::example_session(name, field, opts)?;
    let cache = cache_for(opts);
    battery::run_battery(name, &session, opts, cache.as_ref())
}

/// `run <example>`: the canonical battery over one example or, for
/// `all`, the whole corpus (examples in parallel under the default lane).
pub fn run_examples(name: &str, ground: GroundField, opts: &RunOptions) -> SResult<RunOutcome> {
    let names: Vec<String> = if name == "all" {
        corpus::corpus_names()
    } else {
        vec![name.to_string()]
    };
    let results: Vec<SResult<Report>> = tangent_core::par::map_vec(names, |n| match ground {
        GroundField::Prime(p) => run_example_generic(
            &n,
            PrimeField::new(p).map_err(SessionError::Math)?,
            opts,
        ),
        GroundField::Rationals => run_example_generic(&n, Rationals, opts),
    });
    let mut reports = Vec::new();
    for r in results {
        reports.push(r?);
    }
    let exit_code = exit_from_reports(&reports);
    Ok(RunOutcome { reports, exit_code })
}

fn session_from_source<K: Field>(
    source: &str,
    field: K,
    opts: &RunOptions,
) -> SResult<Session<K>> {
    let stmts = ast::Parser::parse(source)
        .map_err(|e| SessionError::Semantic(format!("parse error at {e}")))?;
    Session::build(field, &stmts, opts)
}

/// Resolve an audit/eval target: a readable file first, then a corpus
/// name.
pub fn load_source(target: &str) -> SResult<String> {
    if std::path::Path::new(target).is_file() {
        return std::fs::read_to_string(target)
            .map_err(|e| SessionError::Semantic(format!("cannot read `{target}`: {e}")));
    }
    corpus::example_source(target)
        .ok_or_else(|| SessionError::Semantic(format!("`{target}` is neither a file nor a known example")))
}

/// Characteristic declared inside a source file, if any.
pub fn source_characteristic(source: &str) -> SResult<Option<u32>> {
    let stmts = ast::Parser::parse(source)
        .map_err(|e| SessionError::Semantic(format!("parse error at {e}")))?;
    Ok(session::declared_characteristic(&stmts))
}

pub fn run_audit_command(
    tag: &str,
    target: &str,
    ground: GroundField,
    opts: &RunOptions,
) -> SResult<RunOutcome> {
    let source = load_source(target)?;
    let cache = cache_for(opts);
    let (report, audit) = match ground {
        GroundField::Prime(p) => {
            let session = session_from_source(
                &source,
                PrimeField::new(p).map_err(SessionError::Math)?,
                opts,
            )?;
            audit::run_audit(tag, &session, opts, cache.as_ref())?
        }
        GroundField::Rationals => {
            let session = session_from_source(&source, Rationals, opts)?;
            audit::run_audit(tag, &session, opts, cache.as_ref())?
        }
    };
    Ok(RunOutcome {
        reports: vec![report],
        exit_code: audit.exit_code(),
    })
}

pub fn run_eval_command(
    target: &str,
    ground: GroundField,
    opts: &RunOptions,
) -> SResult<RunOutcome> {
    let source = load_source(target)?;
    let cache = cache_for(opts);
    let report = match ground {
        GroundField::Prime(p) => {
            let session = session_from_source(
                &source,
                PrimeField::new(p).map_err(SessionError::Math)?,
                opts,
            )?;
            eval::run_checks(target, &session, opts, cache.as_ref())?
        }
        GroundField::Rationals => {
            let session = session_from_source(&source, Rationals, opts)?;
            eval::run_checks(target, &session, opts, cache.as_ref())?
        }
    };
    let exit_code = exit_from_reports(std::slice::from_ref(&report));
    Ok(RunOutcome {
        reports: vec![report],
        exit_code,
    })
}

/// Render a batch of reports: one JSON document (array when several).
pub fn render(reports: &[Report], json: bool) -> String {
    if json {
        if reports.len() == 1 {
            reports[0].to_json()
        } else {
            let v: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| serde_json::to_value(r).expect("report serialization"))
                .collect();
            serde_json::to_string_pretty(&serde_json::Value::Array(v)).expect("report printing")
        }
    } else {
        reports
            .iter()
            .map(|r| r.render_text())
            .collect::<Vec<_>>()
            .join("\n")
    }
}
