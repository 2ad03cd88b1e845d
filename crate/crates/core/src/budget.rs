//! Time budgets for the exponential searches.
//!
//! Every search takes a `&mut Budget` and calls [`Budget::tick`] once per
//! node. The clock is only consulted every few hundred ticks, so node counts
//! are deterministic for a completed search regardless of machine speed.
//! A node limit gives searches that stop at the same point on every run.

use std::time::{Duration, Instant};

use thiserror::Error;

const CLOCK_INTERVAL: u64 = 256;

/// The search ran out of its time budget before reaching a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exhausted after {nodes} nodes")]
pub struct Timeout {
    pub nodes: u64,
}

#[derive(Debug, Clone)]
pub struct Budget {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    started: Instant,
    nodes: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None, max_nodes: None, started: Instant::now(), nodes: 0 }
    }

    pub fn from_millis(ms: u64) -> Self {
        let started = Instant::now();
        Budget { deadline: Some(started + Duration::from_millis(ms)), max_nodes: None, started, nodes: 0 }
    }

    /// Also stop after `max_nodes` nodes.
    pub fn with_node_limit(mut self, max_nodes: u64) -> Self {
        self.max_nodes = Some(max_nodes);
        self
    }

    /// Accounts for one search node.
    #[inline]
    pub fn tick(&mut self) -> Result<(), Timeout> {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|max| self.nodes > max) {
            return Err(Timeout { nodes: self.nodes });
        }
        if self.nodes % CLOCK_INTERVAL == 0 {
            self.check()?;
        }
        Ok(())
    }

    pub fn check(&self) -> Result<(), Timeout> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Timeout { nodes: self.nodes }),
            _ => Ok(()),
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
