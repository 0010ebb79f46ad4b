use std::time::{Duration, Instant};

use crate::error::{LadderError, Result};

/// Resource guards for the expensive searches. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_spairs: Option<u64>,
    pub max_faces: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_spairs(mut self, n: u64) -> Self {
        self.max_spairs = Some(n);
        self
    }

    pub fn with_faces(mut self, n: u64) -> Self {
        self.max_faces = Some(n);
        self
    }

    pub fn with_timeout(mut self, d: Duration) -> Self {
        self.deadline = Some(Instant::now() + d);
        self
    }

    pub(crate) fn check_spairs(&self, used: u64) -> Result<()> {
        if let Some(max) = self.max_spairs {
            if used > max {
                return Err(LadderError::Budget(format!("more than {max} S-pairs")));
            }
        }
        self.check_clock()
    }

    pub(crate) fn check_faces(&self, used: u64) -> Result<()> {
        if let Some(max) = self.max_faces {
            if used > max {
                return Err(LadderError::Budget(format!("more than {max} faces")));
            }
        }
        self.check_clock()
    }

    pub(crate) fn check_clock(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(LadderError::Budget("wall-clock deadline passed".into())),
            _ => Ok(()),
        }
    }
}
