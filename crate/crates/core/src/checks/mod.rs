//! The named-check registry: every verifiable claim in scope is a
//! `CheckDef` with a stable id, a citation carrying a verbatim quote of the
//! claimed identity, and an executable runner.
//!
//! Runs are deterministic: with equal configuration, two runs produce
//! identical pass/fail vectors and identical serialized detail.

mod registry;

use std::cell::RefCell;
use std::collections::HashMap;
use std::path::PathBuf;
use std::rc::Rc;
use std::sync::OnceLock;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{load_stab7, save_stab7, stab7, FiniteGroupTable};

/// Bounds and output knobs shared by every check.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Maximum index of the recursive commutator family.
    pub family_depth: i64,
    /// Maximum i + k for the conjugation power checks.
    pub conj_depth: i64,
    /// Largest stabilizer index to enumerate.
    pub stab_max_n: i64,
    /// Element cap for group closures.
    pub closure_cap: usize,
    /// Where enumeration caches live, if anywhere.
    pub cache_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            family_depth: 8,
            conj_depth: 5,
            stab_max_n: 3,
            closure_cap: 1 << 20,
            cache_dir: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Result of one executed check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub citation: String,
    pub status: Status,
    pub elapsed_ms: u128,
    pub detail: String,
    /// Set when the check could not run because a configured resource
    /// bound was hit; not part of the serialized schema.
    #[serde(skip)]
    pub resource_limited: bool,
}

/// What a runner reports back.
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

pub(crate) fn verdict(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    let detail = detail.into();
    Ok(if pass {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    })
}

/// Shared state for a verification run: configuration plus memoized
/// stabilizer tables (optionally backed by the on-disk cache).
pub struct CheckContext {
    cfg: RunConfig,
    stab_tables: RefCell<HashMap<i64, Rc<FiniteGroupTable>>>,
}

impl CheckContext {
    pub fn new(cfg: RunConfig) -> Self {
        Self {
            cfg,
            stab_tables: RefCell::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &RunConfig {
        &self.cfg
    }

    /// The n-th stabilizer table, memoized per context and reloaded from
    /// the cache directory when one is configured. Cache misses recompute
    /// and rewrite the file; cache write failures only cost performance.
    pub fn stab7(&self, n: i64) -> Result<Rc<FiniteGroupTable>> {
        if let Some(t) = self.stab_tables.borrow().get(&n) {
            return Ok(Rc::clone(t));
        }
        let table = match &self.cfg.cache_dir {
            Some(dir) => match load_stab7(dir, n) {
                Ok(t) => t,
                Err(_) => {
                    let t = stab7(n, self.cfg.stab_max_n, self.cfg.closure_cap)?;
                    let _ = save_stab7(dir, n, &t);
                    t
                }
            },
            None => stab7(n, self.cfg.stab_max_n, self.cfg.closure_cap)?,
        };
        let rc = Rc::new(table);
        self.stab_tables.borrow_mut().insert(n, Rc::clone(&rc));
        Ok(rc)
    }
}

/// A registered check.
pub struct CheckDef {
    pub id: String,
    pub citation: String,
    arg: i64,
    runner: fn(&CheckContext, i64) -> Result<Outcome>,
}

impl CheckDef {
    fn new(
        id: impl Into<String>,
        citation: impl Into<String>,
        arg: i64,
        runner: fn(&CheckContext, i64) -> Result<Outcome>,
    ) -> Self {
        Self {
            id: id.into(),
            citation: citation.into(),
            arg,
            runner,
        }
    }

    /// Executes the runner; errors from configured bounds become skips
    /// (flagged as resource-limited), any other error is a failure.
    pub fn run(&self, ctx: &CheckContext) -> CheckRecord {
        let start = Instant::now();
        let (status, detail, resource_limited) = match (self.runner)(ctx, self.arg) {
            Ok(Outcome::Pass(d)) => (Status::Pass, d, false),
            Ok(Outcome::Fail(d)) => (Status::Fail, d, false),
            Ok(Outcome::Skipped(d)) => (Status::Skipped, d, false),
            Err(e @ (Error::DepthExceeded { .. } | Error::CapExceeded { .. })) => {
                (Status::Skipped, format!("resource limit: {e}"), true)
            }
            Err(e) => (Status::Fail, format!("error: {e}"), false),
        };
        CheckRecord {
            id: self.id.clone(),
            citation: self.citation.clone(),
            status,
            elapsed_ms: start.elapsed().as_millis(),
            detail,
            resource_limited,
        }
    }
}

/// The full registry, in fixed order.
pub fn registry() -> &'static [CheckDef] {
    static REG: OnceLock<Vec<CheckDef>> = OnceLock::new();
    REG.get_or_init(registry::build)
}

pub fn find_check(id: &str) -> Result<&'static CheckDef> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

pub fn run_check(id: &str, ctx: &CheckContext) -> Result<CheckRecord> {
    Ok(find_check(id)?.run(ctx))
}

/// Runs every registered check in registry order.
pub fn run_all(ctx: &CheckContext) -> Vec<CheckRecord> {
    registry().iter().map(|c| c.run(ctx)).collect()
}
