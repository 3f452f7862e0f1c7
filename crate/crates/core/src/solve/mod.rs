//! Exact solvers: independence and clique number, chromatic number,
//! clique partitions and coclique transversals.
//!
//! Every search is exhaustive and exact. A [`Budget`] bounds the work; when
//! it runs out the solver returns [`Error::BudgetExhausted`] with the bounds
//! established so far instead of a guess.

mod clique;
mod color;
mod cover;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

pub use clique::{max_clique, max_independent_set};
pub use color::{chromatic_number, is_proper_coloring};
pub use cover::{clique_partition, coclique_transversal, d_cliques, ks_transversal_search};

use crate::error::Error;
use crate::par::Exec;

/// Node and wall-clock limits. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(n: u64) -> Self {
        Self {
            max_nodes: Some(n),
            max_time: None,
        }
    }

    pub fn time(d: Duration) -> Self {
        Self {
            max_nodes: None,
            max_time: Some(d),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: Budget,
    pub exec: Exec,
}

impl SolveOptions {
    pub fn with_exec(exec: Exec) -> Self {
        Self {
            exec,
            ..Self::default()
        }
    }

    pub fn with_budget(budget: Budget) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A vertex set, sorted ascending.
    Vertices(Vec<usize>),
    /// `colors[v]` for each vertex, colours numbered from 0.
    Coloring(Vec<usize>),
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub value: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

impl SolveReport {
    pub fn vertices(&self) -> &[usize] {
        match &self.witness {
            Witness::Vertices(v) | Witness::Coloring(v) => v,
        }
    }
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

/// Shared node counter and stop flag for one search, safe across threads.
pub(crate) struct Meter {
    start: Instant,
    budget: Budget,
    nodes: AtomicU64,
    stop: AtomicBool,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Self {
            start: Instant::now(),
            budget,
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
        }
    }

    /// Counts one node; false once the budget is spent.
    pub(crate) fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.max_nodes.is_some_and(|m| n > m) {
            self.stop.store(true, Ordering::Relaxed);
        }
        if n.is_multiple_of(256) && self.budget.max_time.is_some_and(|t| self.start.elapsed() > t) {
            self.stop.store(true, Ordering::Relaxed);
        }
        !self.stop.load(Ordering::Relaxed)
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub(crate) fn exhausted(&self, lower: usize, upper: usize) -> Error {
        Error::BudgetExhausted {
            nodes: self.nodes(),
            lower,
            upper,
        }
    }
}
