use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 512;
pub const MAX_PRECISION: u32 = 4096;

/// Working precision and the ceiling for doubling on undecided results.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub start: u32,
    pub max: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            start: DEFAULT_PRECISION,
            max: MAX_PRECISION,
        }
    }
}

impl PrecisionPolicy {
    /// A single attempt at exactly `bits`.
    pub fn fixed(bits: u32) -> Self {
        PrecisionPolicy { start: bits, max: bits }
    }

    /// Runs `attempt` at the starting precision, doubling on
    /// [`Error::PrecisionInsufficient`] until `max` is exceeded.
    pub fn run<T>(&self, mut attempt: impl FnMut(u32) -> Result<T>) -> Result<T> {
        let mut bits = self.start;
        loop {
            match attempt(bits) {
                Err(e) if e.is_precision() && bits < self.max => {
                    bits = (bits * 2).min(self.max);
                }
                other => return other,
            }
        }
    }
}

pub(crate) fn check_precision(bits: u32) -> Result<()> {
    if bits < 64 {
        return Err(Error::invalid(format!("precision {bits} below the 64-bit minimum")));
    }
    Ok(())
}
