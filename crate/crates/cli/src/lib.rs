//! Session language, check runner and reports on top of `charp_core`.

pub mod ast;
pub mod eval;
pub mod parser;
pub mod report;
pub mod scenarios;

use std::time::Instant;

use rayon::prelude::*;

pub use eval::{Config, Env, Outcome, SetupError};
pub use parser::{parse_session, DslError};
pub use report::{Entry, Report};

use ast::{Check, Session, Stmt};

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Dsl(#[from] DslError),
    #[error("statement {}: {}", .0.stmt + 1, .0.msg)]
    Setup(SetupError),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Setup(e) if e.resource => 3,
            _ => 2,
        }
    }
}

pub fn checks(session: &Session) -> Vec<&Check> {
    session.stmts.iter().filter_map(|s| if let Stmt::Check(c) = s { Some(c) } else { None }).collect()
}

/// Evaluates every check of a parsed session, in index order.
pub fn run_parsed(session: &Session, config: &Config) -> Result<Vec<Entry>, RunError> {
    let env = Env::build(session, config).map_err(RunError::Setup)?;
    let cs = checks(session);
    let one = |(k, c): (usize, &&Check)| {
        let t = Instant::now();
        let o = eval::run_check(&env, c, config);
        Entry::new(k, c, o, t.elapsed().as_secs_f64() * 1e3)
    };
    Ok(if config.parallel { cs.par_iter().enumerate().map(one).collect() } else { cs.iter().enumerate().map(one).collect() })
}

pub fn run_session(text: &str, config: &Config) -> Result<Report, RunError> {
    let session = parse_session(text)?;
    Ok(Report::new(config, run_parsed(&session, config)?))
}

/// Runs the built-in example scenarios and their witness assertions.
pub fn run_paper_examples(config: &Config) -> Result<Report, RunError> {
    let mut entries = Vec::new();
    for s in scenarios::SCENARIOS {
        let session = parse_session(s.text)?;
        let mut es = run_parsed(&session, config)?;
        es.extend(scenarios::assertion_entries(s, &es));
        for e in &mut es {
            e.scenario = Some(s.name.to_string());
        }
        entries.extend(es);
    }
    for (k, e) in entries.iter_mut().enumerate() {
        e.index = k;
    }
    Ok(Report::new(config, entries))
}
