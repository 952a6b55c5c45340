//! Replayable descent certificates.
//!
//! A certificate is a flat log of the transformations that took a seed
//! representation `p*r = x^2 + n*1^2` down to a representation of the
//! target. Keys used by cancelations and compositions are recorded as
//! explicit coordinate pairs, so every key is self-evidently a
//! representation of its own value and no nested proofs are needed.
//!
//! [`verify`] replays a certificate with plain integer arithmetic and does
//! not call into the descent or [`crate::quadform`] code.

mod text;
mod verify;

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::error::Result;
use crate::quadform::{Branch, QuadRep, Sign};

pub use text::{deserialize, serialize, ParseError};
pub use verify::{verify, Location, VerifyError};

/// A raw coordinate pair as recorded in a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coords {
    pub x: BigUint,
    pub y: BigUint,
}

impl Coords {
    pub fn new(x: impl Into<BigUint>, y: impl Into<BigUint>) -> Self {
        Coords {
            x: x.into(),
            y: y.into(),
        }
    }
}

impl From<&QuadRep> for Coords {
    fn from(rep: &QuadRep) -> Self {
        Coords {
            x: rep.x().clone(),
            y: rep.y().clone(),
        }
    }
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Coordinates `(x', y)` of `2x'^2 + 2x'y + 3y^2`; `x'` may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedCoords {
    pub x: BigInt,
    pub y: BigUint,
}

impl fmt::Display for SignedCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Seed,
    StripFive,
    CancelPrime,
    CancelSquare,
    Halve,
    Compose,
    Square,
    FormConvert,
}

impl StepKind {
    pub const ALL: [StepKind; 8] = [
        StepKind::Seed,
        StepKind::StripFive,
        StepKind::CancelPrime,
        StepKind::CancelSquare,
        StepKind::Halve,
        StepKind::Compose,
        StepKind::Square,
        StepKind::FormConvert,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            StepKind::Seed => "SEED",
            StepKind::StripFive => "STRIP_FIVE",
            StepKind::CancelPrime => "CANCEL_PRIME",
            StepKind::CancelSquare => "CANCEL_SQUARE",
            StepKind::Halve => "HALVE",
            StepKind::Compose => "COMPOSE",
            StepKind::Square => "SQUARE",
            StepKind::FormConvert => "FORM_CONVERT",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == tag)
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One transformation in a descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// `x^2 + n = p*r` with `x < p` (and `x <= (p-1)/2` when `n = 5`).
    Seed { p: BigUint, r: BigUint, out: Coords },
    /// `(x, y) -> (y, x/5)` when `5 | x`.
    StripFive { input: Coords, out: Coords },
    /// Divide out a prime with a known representation.
    CancelPrime {
        key: Coords,
        input: Coords,
        out: Coords,
        branch: Branch,
    },
    /// Divide out the square of an odd prime with a nontrivial representation.
    CancelSquare {
        key: Coords,
        input: Coords,
        out: Coords,
        branch: Branch,
    },
    /// `(x, y) -> (x/2, y/2)` for `n = 5`.
    Halve { input: Coords, out: Coords },
    /// Multiply by the value of `key` via the product identity.
    Compose {
        key: Coords,
        input: Coords,
        out: Coords,
        sign: Sign,
    },
    /// `(a, b) -> (|a^2 - 5b^2|, 2ab)`.
    Square { input: Coords, out: Coords },
    /// `2p = x^2 + 5y^2` with `x, y` odd gives `p = 2x'^2 + 2x'y + 3y^2`
    /// for `x = 2x' + y`. Only valid as the last step; leaves the chain
    /// value unchanged.
    FormConvert { input: Coords, out: SignedCoords },
}

impl Step {
    pub fn kind(&self) -> StepKind {
        match self {
            Step::Seed { .. } => StepKind::Seed,
            Step::StripFive { .. } => StepKind::StripFive,
            Step::CancelPrime { .. } => StepKind::CancelPrime,
            Step::CancelSquare { .. } => StepKind::CancelSquare,
            Step::Halve { .. } => StepKind::Halve,
            Step::Compose { .. } => StepKind::Compose,
            Step::Square { .. } => StepKind::Square,
            Step::FormConvert { .. } => StepKind::FormConvert,
        }
    }
}

/// A descent log ending in a representation of `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: u32,
    pub target: BigUint,
    pub steps: Vec<Step>,
    pub final_rep: Coords,
}

impl Certificate {
    /// The final coordinates as a [`QuadRep`].
    pub fn final_quadrep(&self) -> Result<QuadRep> {
        QuadRep::new(self.n, self.final_rep.x.clone(), self.final_rep.y.clone())
    }

    pub fn is_valid(&self) -> bool {
        verify(self).is_ok()
    }

    /// The `(p, r, x)` of the leading seed step, if any.
    pub fn seed(&self) -> Option<(&BigUint, &BigUint, &BigUint)> {
        match self.steps.first() {
            Some(Step::Seed { p, r, out }) => Some((p, r, &out.x)),
            _ => None,
        }
    }
}
