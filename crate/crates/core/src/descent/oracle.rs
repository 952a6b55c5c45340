//! Exhaustive enumeration of representations, used as ground truth.

use crate::error::{Error, Result};
use crate::quadform::{QuadRep, SUPPORTED_N};

pub const DEFAULT_ORACLE_BOUND: u64 = 100_000_000;

/// Environment variable that overrides [`DEFAULT_ORACLE_BOUND`].
pub const ORACLE_BOUND_ENV: &str = "QUADREP_ORACLE_BOUND";

/// Brute-force enumerator refusing inputs above `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    bound: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl Oracle {
    pub fn new(bound: u64) -> Self {
        Oracle { bound }
    }

    /// Default bound unless `QUADREP_ORACLE_BOUND` holds a valid integer.
    pub fn from_env() -> Self {
        std::env::var(ORACLE_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Oracle::new)
            .unwrap_or_default()
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// All `(x, y)` with `x^2 + n*y^2 = m`, ordered by increasing `x`.
    pub fn enumerate(&self, m: u64, n: u32, require_nontrivial: bool) -> Result<Vec<QuadRep>> {
        if !SUPPORTED_N.contains(&n) {
            return Err(Error::InvalidArgument(format!(
                "unsupported multiplier n = {n}"
            )));
        }
        if m > self.bound {
            return Err(Error::OracleBound {
                m,
                bound: self.bound,
            });
        }
        let m = m as u128;
        let n = n as u128;
        let y_max = (m / n).isqrt();
        let mut found = Vec::new();
        for y in (0..=y_max).rev() {
            let rest = m - n * y * y;
            let x = rest.isqrt();
            if x * x == rest && (!require_nontrivial || (x != 0 && y != 0)) {
                found.push(QuadRep::new(n as u32, x, y)?);
            }
        }
        Ok(found)
    }
}

/// [`Oracle::enumerate`] with the default bound.
pub fn brute_force_rep(m: u64, n: u32, require_nontrivial: bool) -> Result<Vec<QuadRep>> {
    Oracle::default().enumerate(m, n, require_nontrivial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn pairs(reps: &[QuadRep]) -> Vec<(u64, u64)> {
        reps.iter()
            .map(|r| (r.x().to_u64().unwrap(), r.y().to_u64().unwrap()))
            .collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            pairs(&brute_force_rep(21, 5, true).unwrap()),
            [(1, 2), (4, 1)]
        );
        assert!(brute_force_rep(7, 5, false).unwrap().is_empty());
        assert_eq!(pairs(&brute_force_rep(4, 5, false).unwrap()), [(2, 0)]);
        assert_eq!(pairs(&brute_force_rep(4, 5, true).unwrap()), []);
        assert_eq!(pairs(&brute_force_rep(0, 1, false).unwrap()), [(0, 0)]);
        assert_eq!(
            pairs(&brute_force_rep(25, 1, false).unwrap()),
            [(0, 5), (3, 4), (4, 3), (5, 0)]
        );
    }

    #[test]
    fn bound_is_enforced() {
        let oracle = Oracle::new(100);
        assert!(oracle.enumerate(100, 5, false).is_ok());
        assert_eq!(
            oracle.enumerate(101, 5, false),
            Err(Error::OracleBound { m: 101, bound: 100 })
        );
        assert!(brute_force_rep(DEFAULT_ORACLE_BOUND + 1, 5, false).is_err());
        assert!(brute_force_rep(10, 4, false).is_err());
    }
}
