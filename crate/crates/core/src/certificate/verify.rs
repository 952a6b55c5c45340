//! Independent replay of a certificate.
//!
//! Works on signed big integers directly from the recorded coordinates and
//! re-checks each identity from scratch; the only shared dependency is the
//! primality test used on cancelation keys and the seed prime.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{Certificate, Coords, SignedCoords, Step, StepKind};
use crate::arith::is_prime;
use crate::quadform::{Branch, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Header,
    /// Zero-based step index.
    Step(usize, StepKind),
    Final,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Header => f.write_str("header"),
            Location::Step(i, kind) => write!(f, "step {} ({kind})", i + 1),
            Location::Final => f.write_str("final"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location}: {reason}")]
pub struct VerifyError {
    pub location: Location,
    pub reason: String,
}

type Check = Result<(), String>;

fn ensure(cond: bool, reason: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(reason())
    }
}

fn signed(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

fn rep_value(n: u32, c: &Coords) -> BigUint {
    &c.x * &c.x + n * (&c.y * &c.y)
}

fn magnitude(v: BigInt) -> BigUint {
    v.abs().to_biguint().expect("absolute value is nonnegative")
}

fn small_prime(v: &BigUint, what: &str) -> Result<u64, String> {
    let p = v
        .to_u64()
        .ok_or_else(|| format!("{what} {v} is beyond the supported range"))?;
    ensure(is_prime(p), || format!("{what} {p} is not prime"))?;
    Ok(p)
}

fn check_seed(n: u32, target: &BigUint, p: &BigUint, r: &BigUint, out: &Coords) -> Check {
    small_prime(p, "seed modulus")?;
    ensure(out.y.is_one(), || format!("seed y = {} must be 1", out.y))?;
    ensure(&out.x < p, || {
        format!("seed x = {} is not below {p}", out.x)
    })?;
    if n == 5 {
        ensure(BigUint::from(2u32) * &out.x < *p, || {
            format!("seed x = {} exceeds ({p} - 1)/2", out.x)
        })?;
    }
    ensure(rep_value(n, out) == p * r, || {
        format!("{}^2 + {n} != {p} * {r}", out.x)
    })?;
    ensure(target.is_multiple_of(p), || {
        format!("seed prime {p} does not divide target {target}")
    })
}

fn check_strip_five(n: u32, input: &Coords, out: &Coords) -> Check {
    ensure(n == 5, || "STRIP_FIVE requires n = 5".into())?;
    let five = BigUint::from(5u32);
    ensure(input.x.is_multiple_of(&five), || {
        format!("5 does not divide x = {}", input.x)
    })?;
    let expected = Coords {
        x: input.y.clone(),
        y: &input.x / five,
    };
    ensure(*out == expected, || {
        format!("expected {expected}, recorded {out}")
    })
}

/// Recomputes a lemma quotient: which branch the divisibility tests select,
/// and the resulting coordinates.
fn lemma_quotient(
    n: u32,
    key: &Coords,
    input: &Coords,
    divisor: &BigInt,
    root: Option<&BigUint>,
) -> Result<(Branch, Coords), String> {
    let (a, b) = (signed(&key.x), signed(&key.y));
    let (x, y) = (signed(&input.x), signed(&input.y));
    let n = BigInt::from(n);
    let diff = &a * &y - &b * &x;
    let sum = &a * &y + &b * &x;
    let (branch, first, second) = if diff.is_multiple_of(divisor) {
        (Branch::ProperPlus, &a * &x + &n * &b * &y, diff)
    } else if sum.is_multiple_of(divisor) {
        (Branch::ProperMinus, &a * &x - &n * &b * &y, sum)
    } else {
        let q = root.ok_or_else(|| format!("{divisor} divides neither ay - bx nor ay + bx"))?;
        ensure(
            input.x.is_multiple_of(q) && input.y.is_multiple_of(q),
            || format!("{q} does not divide both coordinates of {input}"),
        )?;
        let out = Coords {
            x: &input.x / q,
            y: &input.y / q,
        };
        return Ok((Branch::CommonDivisor, out));
    };
    ensure(first.is_multiple_of(divisor), || {
        format!("{divisor} does not divide {first}")
    })?;
    let out = Coords {
        x: magnitude(first / divisor),
        y: magnitude(second / divisor),
    };
    Ok((branch, out))
}

fn check_quotient(
    n: u32,
    key: &Coords,
    input: &Coords,
    out: &Coords,
    branch: Branch,
    divisor: &BigUint,
    root: Option<&BigUint>,
) -> Check {
    ensure(rep_value(n, input).is_multiple_of(divisor), || {
        format!("{divisor} does not divide the input value")
    })?;
    let (expected_branch, expected) = lemma_quotient(n, key, input, &signed(divisor), root)?;
    ensure(expected_branch == branch, || {
        format!("recorded branch {branch:?}, divisibility selects {expected_branch:?}")
    })?;
    ensure(*out == expected, || {
        format!("expected {expected}, recorded {out}")
    })
}

fn check_cancel_prime(n: u32, key: &Coords, input: &Coords, out: &Coords, branch: Branch) -> Check {
    let k = rep_value(n, key);
    small_prime(&k, "key value")?;
    ensure(branch != Branch::CommonDivisor, || {
        "prime cancelation has no common-divisor branch".into()
    })?;
    check_quotient(n, key, input, out, branch, &k, None)
}

fn check_cancel_square(
    n: u32,
    key: &Coords,
    input: &Coords,
    out: &Coords,
    branch: Branch,
) -> Check {
    let k = rep_value(n, key);
    let q = k.sqrt();
    ensure(&q * &q == k, || format!("key value {k} is not a square"))?;
    let q_small = small_prime(&q, "square root of key")?;
    ensure(q_small % 2 == 1, || {
        "square cancelation needs an odd prime".into()
    })?;
    ensure(!key.x.is_zero() && !key.y.is_zero(), || {
        format!("key {key} is trivial")
    })?;
    check_quotient(n, key, input, out, branch, &k, Some(&q))
}

fn check_halve(n: u32, input: &Coords, out: &Coords) -> Check {
    ensure(n == 5, || "HALVE requires n = 5".into())?;
    ensure(input.x.is_even() && input.y.is_even(), || {
        format!("{input} has an odd coordinate")
    })?;
    let expected = Coords {
        x: &input.x >> 1,
        y: &input.y >> 1,
    };
    ensure(*out == expected, || {
        format!("expected {expected}, recorded {out}")
    })
}

fn check_compose(n: u32, key: &Coords, input: &Coords, out: &Coords, sign: Sign) -> Check {
    let (a, b) = (signed(&key.x), signed(&key.y));
    let (x, y) = (signed(&input.x), signed(&input.y));
    let n = BigInt::from(n);
    let (u, v) = match sign {
        Sign::Plus => (&a * &x + &n * &b * &y, &a * &y - &b * &x),
        Sign::Minus => (&a * &x - &n * &b * &y, &a * &y + &b * &x),
    };
    let expected = Coords {
        x: magnitude(u),
        y: magnitude(v),
    };
    ensure(*out == expected, || {
        format!("expected {expected}, recorded {out}")
    })
}

fn check_square(n: u32, input: &Coords, out: &Coords) -> Check {
    ensure(n == 5, || "SQUARE requires n = 5".into())?;
    let (a, b) = (signed(&input.x), signed(&input.y));
    let expected = Coords {
        x: magnitude(&a * &a - BigInt::from(5) * &b * &b),
        y: magnitude(BigInt::from(2) * &a * &b),
    };
    ensure(*out == expected, || {
        format!("expected {expected}, recorded {out}")
    })
}

fn check_form_convert(n: u32, input: &Coords, out: &SignedCoords) -> Check {
    ensure(n == 5, || "FORM_CONVERT requires n = 5".into())?;
    ensure(input.x.is_odd() && input.y.is_odd(), || {
        format!("{input} does not have both coordinates odd")
    })?;
    ensure(out.y == input.y, || {
        format!("y changed from {} to {}", input.y, out.y)
    })?;
    let x = signed(&input.x);
    let rebuilt = BigInt::from(2) * &out.x + signed(&out.y);
    ensure(rebuilt == x, || format!("2*{} + {} != {x}", out.x, out.y))
}

/// Replays every step and checks the chain ends at a representation of the
/// target.
pub fn verify(cert: &Certificate) -> Result<(), VerifyError> {
    let n = cert.n;
    if ![1, 2, 3, 5].contains(&n) {
        return Err(VerifyError {
            location: Location::Header,
            reason: format!("unsupported multiplier n = {n}"),
        });
    }

    let mut current: Option<&Coords> = None;
    let last = cert.steps.len().saturating_sub(1);
    for (i, step) in cert.steps.iter().enumerate() {
        let fail = |reason: String| VerifyError {
            location: Location::Step(i, step.kind()),
            reason,
        };
        if let Step::Seed { p, r, out } = step {
            if i != 0 {
                return Err(fail("SEED may only open the certificate".into()));
            }
            check_seed(n, &cert.target, p, r, out).map_err(fail)?;
            current = Some(out);
            continue;
        }
        let prev = current.ok_or_else(|| fail("certificate must open with SEED".into()))?;
        let input = match step {
            Step::StripFive { input, .. }
            | Step::CancelPrime { input, .. }
            | Step::CancelSquare { input, .. }
            | Step::Halve { input, .. }
            | Step::Compose { input, .. }
            | Step::Square { input, .. }
            | Step::FormConvert { input, .. } => input,
            Step::Seed { .. } => unreachable!(),
        };
        if input != prev {
            return Err(fail(format!("input {input} does not continue from {prev}")));
        }
        let checked = match step {
            Step::StripFive { input, out } => check_strip_five(n, input, out).map(|_| out),
            Step::CancelPrime {
                key,
                input,
                out,
                branch,
            } => check_cancel_prime(n, key, input, out, *branch).map(|_| out),
            Step::CancelSquare {
                key,
                input,
                out,
                branch,
            } => check_cancel_square(n, key, input, out, *branch).map(|_| out),
            Step::Halve { input, out } => check_halve(n, input, out).map(|_| out),
            Step::Compose {
                key,
                input,
                out,
                sign,
            } => check_compose(n, key, input, out, *sign).map(|_| out),
            Step::Square { input, out } => check_square(n, input, out).map(|_| out),
            Step::FormConvert { input, out } => {
                if i != last {
                    return Err(fail("FORM_CONVERT must be the last step".into()));
                }
                check_form_convert(n, input, out).map(|_| input)
            }
            Step::Seed { .. } => unreachable!(),
        };
        current = Some(checked.map_err(fail)?);
    }

    let fail = |reason: String| VerifyError {
        location: Location::Final,
        reason,
    };
    if let Some(cur) = current {
        if *cur != cert.final_rep {
            return Err(fail(format!(
                "final {} does not match the last step output {cur}",
                cert.final_rep
            )));
        }
    }
    let value = rep_value(n, &cert.final_rep);
    if value != cert.target {
        return Err(fail(format!(
            "final {} has value {value}, not target {}",
            cert.final_rep, cert.target
        )));
    }
    Ok(())
}
