//! Cooperative cancellation for long computations.
//!
//! A verification job installs a deadline or a shared stop flag on the thread
//! that runs it; the Gröbner and resolution loops poll [`check`] and unwind
//! with [`Error::Cancelled`] once either fires.

use std::cell::RefCell;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Instant;

use crate::error::{Error, Result};

#[derive(Clone, Default)]
struct Guard {
    deadline: Option<Instant>,
    flag: Option<Arc<AtomicBool>>,
}

thread_local! {
    static GUARD: RefCell<Guard> = RefCell::new(Guard::default());
}

/// Restores the previous guard when dropped.
pub struct Scope {
    previous: Guard,
}

impl Drop for Scope {
    fn drop(&mut self) {
        let prev = std::mem::take(&mut self.previous);
        GUARD.with(|g| *g.borrow_mut() = prev);
    }
}

/// Installs a deadline and/or stop flag for the current thread until the
/// returned scope is dropped.
pub fn install(deadline: Option<Instant>, flag: Option<Arc<AtomicBool>>) -> Scope {
    let previous = GUARD.with(|g| std::mem::replace(&mut *g.borrow_mut(), Guard { deadline, flag }));
    Scope { previous }
}

/// Fails with [`Error::Cancelled`] once the current thread's deadline has
/// passed or its stop flag is raised.
pub fn check() -> Result<()> {
    GUARD.with(|g| {
        let g = g.borrow();
        if let Some(d) = g.deadline {
            if Instant::now() >= d {
                return Err(Error::Cancelled);
            }
        }
        if let Some(f) = &g.flag {
            if f.load(Ordering::Relaxed) {
                return Err(Error::Cancelled);
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    #[test]
    fn deadline_fires_and_scope_restores() {
        assert!(check().is_ok());
        {
            let _s = install(Some(Instant::now() - Duration::from_secs(1)), None);
            assert_eq!(check(), Err(Error::Cancelled));
        }
        assert!(check().is_ok());
    }

    #[test]
    fn flag_fires() {
        let flag = Arc::new(AtomicBool::new(false));
        let _s = install(None, Some(flag.clone()));
        assert!(check().is_ok());
        flag.store(true, Ordering::Relaxed);
        assert_eq!(check(), Err(Error::Cancelled));
    }
}
