//! Per-thread time budget for long-running basis computations.
//!
//! The deadline is thread-local; parallel element propagation re-installs the
//! deadline on each worker thread so every lane honors the same cutoff.

use std::cell::Cell;
use std::time::Instant;

use crate::error::{Error, Result};

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

pub fn current_deadline() -> Option<Instant> {
    DEADLINE.with(|d| d.get())
}

pub fn check() -> Result<()> {
    if let Some(t) = current_deadline() {
        if Instant::now() >= t {
            return Err(Error::Timeout);
        }
    }
    Ok(())
}

/// Run `f` with the given deadline installed on this thread, restoring the
/// previous deadline afterwards.
pub fn with_deadline<T>(deadline: Option<Instant>, f: impl FnOnce() -> T) -> T {
    let prev = DEADLINE.with(|d| d.replace(deadline));
    let out = f();
    DEADLINE.with(|d| d.set(prev));
    out
}
