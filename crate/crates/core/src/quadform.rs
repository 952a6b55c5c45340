//! Representations `m = x^2 + n*y^2` and the algebra used to build and
//! shrink them: the Euler product identity, the two cancelation lemmas,
//! halving by 4 when `n = 5`, and squaring.
//!
//! Signed intermediates such as `ay - bx` are carried as magnitudes; every
//! coordinate is stored nonnegative since `x` and `-x` square to the same
//! value.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// Multipliers `n` supported by [`QuadRep`].
pub const SUPPORTED_N: [u32; 4] = [1, 2, 3, 5];

/// A representation `value = x^2 + n*y^2` with nonnegative `x`, `y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadRep {
    n: u32,
    x: BigUint,
    y: BigUint,
    value: BigUint,
}

impl QuadRep {
    pub fn new(n: u32, x: impl Into<BigUint>, y: impl Into<BigUint>) -> Result<Self> {
        if !SUPPORTED_N.contains(&n) {
            return Err(Error::InvalidArgument(format!(
                "unsupported multiplier n = {n}; expected one of 1, 2, 3, 5"
            )));
        }
        Ok(Self::from_parts(n, x.into(), y.into()))
    }

    fn from_parts(n: u32, x: BigUint, y: BigUint) -> Self {
        let value = &x * &x + n * (&y * &y);
        QuadRep { n, x, y, value }
    }

    pub(crate) fn from_u128(n: u32, x: u128, y: u128) -> Self {
        let value = x
            .checked_mul(x)
            .zip(y.checked_mul(y).and_then(|yy| yy.checked_mul(n as u128)))
            .and_then(|(xx, nyy)| xx.checked_add(nyy));
        match value {
            Some(v) => QuadRep {
                n,
                x: x.into(),
                y: y.into(),
                value: v.into(),
            },
            None => Self::from_parts(n, x.into(), y.into()),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    pub fn y(&self) -> &BigUint {
        &self.y
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// Both coordinates nonzero.
    pub fn is_nontrivial(&self) -> bool {
        !self.x.is_zero() && !self.y.is_zero()
    }

    /// Coordinates relatively prime.
    pub fn is_proper(&self) -> bool {
        self.x.gcd(&self.y) == BigUint::from(1u32)
    }
}

/// Same as [`QuadRep::new`].
pub fn make_rep(n: u32, x: impl Into<BigUint>, y: impl Into<BigUint>) -> Result<QuadRep> {
    QuadRep::new(n, x, y)
}

impl fmt::Display for QuadRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^2 + {}*{}^2", self.x, self.n, self.y)
    }
}

/// Sign choice in the product identity
/// `(a^2 + n b^2)(x^2 + n y^2) = (ax ± nby)^2 + n(ay ∓ bx)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Which divisibility case produced a cancelation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The divisor divides `ay - bx`; result is `((ax + nby)/d, (ay - bx)/d)`.
    ProperPlus,
    /// The divisor divides `ay + bx` but not `ay - bx`;
    /// result is `((ax - nby)/d, (ay + bx)/d)`.
    ProperMinus,
    /// `q^2` divides neither; `q` divides both coordinates of the input.
    CommonDivisor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancelOutcome {
    pub result: QuadRep,
    pub branch: Branch,
}

fn require_same_n(a: &QuadRep, b: &QuadRep) -> Result<()> {
    if a.n != b.n {
        return Err(Error::InvalidArgument(format!(
            "mismatched multipliers {} and {}",
            a.n, b.n
        )));
    }
    Ok(())
}

fn require_n5(rep: &QuadRep, op: &str) -> Result<()> {
    if rep.n != 5 {
        return Err(Error::InvalidArgument(format!(
            "{op} needs n = 5, got n = {}",
            rep.n
        )));
    }
    Ok(())
}

/// The four products `ax`, `nby`, `ay`, `bx` for key `(a, b)` and `(x, y)`.
struct Products {
    ax: BigUint,
    nby: BigUint,
    ay: BigUint,
    bx: BigUint,
}

impl Products {
    fn new(key: &QuadRep, other: &QuadRep) -> Self {
        Products {
            ax: &key.x * &other.x,
            nby: key.n * (&key.y * &other.y),
            ay: &key.x * &other.y,
            bx: &key.y * &other.x,
        }
    }

    fn coords(self, sign: Sign) -> (BigUint, BigUint) {
        match sign {
            Sign::Plus => (self.ax + self.nby, abs_diff(self.ay, self.bx)),
            Sign::Minus => (abs_diff(self.ax, self.nby), self.ay + self.bx),
        }
    }
}

fn abs_diff(a: BigUint, b: BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// [`compose`] in machine words, or `None` on overflow.
fn compose_u64(r1: &QuadRep, r2: &QuadRep, sign: Sign) -> Option<(u128, u128)> {
    let (a, b) = (r1.x.to_u64()? as u128, r1.y.to_u64()? as u128);
    let (x, y) = (r2.x.to_u64()? as u128, r2.y.to_u64()? as u128);
    let (ax, ay, bx) = (a * x, a * y, b * x);
    let nby = (b * y).checked_mul(r1.n as u128)?;
    Some(match sign {
        Sign::Plus => (ax.checked_add(nby)?, ay.abs_diff(bx)),
        Sign::Minus => (ax.abs_diff(nby), ay.checked_add(bx)?),
    })
}

/// Euler's product identity: a representation of `r1.value * r2.value`.
///
/// With `(a, b) = r1` and `(x, y) = r2`, returns `(|ax ± nby|, |ay ∓ bx|)`.
pub fn compose(r1: &QuadRep, r2: &QuadRep, sign: Sign) -> Result<QuadRep> {
    require_same_n(r1, r2)?;
    if let Some((u, v)) = compose_u64(r1, r2, sign) {
        return Ok(QuadRep::from_u128(r1.n, u, v));
    }
    let (u, v) = Products::new(r1, r2).coords(sign);
    Ok(QuadRep::from_parts(r1.n, u, v))
}

/// [`divide_out`] in machine words. The outer `None` means overflow (or an
/// inconsistent quotient, left for the general path to report).
fn divide_out_u64(key: &QuadRep, big: &QuadRep, d: &BigUint) -> Option<Option<CancelOutcome>> {
    let d = d.to_u128()?;
    let (a, b) = (key.x.to_u64()? as u128, key.y.to_u64()? as u128);
    let (x, y) = (big.x.to_u64()? as u128, big.y.to_u64()? as u128);
    let (ax, ay, bx) = (a * x, a * y, b * x);
    let nby = (b * y).checked_mul(key.n as u128)?;
    let (branch, u, v) = if ay.abs_diff(bx) % d == 0 {
        (Branch::ProperPlus, ax.checked_add(nby)?, ay.abs_diff(bx))
    } else if ay.checked_add(bx)? % d == 0 {
        (Branch::ProperMinus, ax.abs_diff(nby), ay + bx)
    } else {
        return Some(None);
    };
    if u % d != 0 {
        return None;
    }
    let result = QuadRep::from_u128(key.n, u / d, v / d);
    Some(Some(CancelOutcome { result, branch }))
}

/// Shared quotient step of both cancelation lemmas. Returns `None` when the
/// divisor divides neither `ay - bx` nor `ay + bx`.
fn divide_out(key: &QuadRep, big: &QuadRep, d: &BigUint) -> Result<Option<CancelOutcome>> {
    if let Some(found) = divide_out_u64(key, big, d) {
        return Ok(found);
    }
    let prods = Products::new(key, big);
    let branch = if abs_diff(prods.ay.clone(), prods.bx.clone()).is_multiple_of(d) {
        Branch::ProperPlus
    } else if (&prods.ay + &prods.bx).is_multiple_of(d) {
        Branch::ProperMinus
    } else {
        return Ok(None);
    };
    let sign = match branch {
        Branch::ProperPlus => Sign::Plus,
        _ => Sign::Minus,
    };
    let (u, v) = prods.coords(sign);
    let (qu, ru) = u.div_rem(d);
    if !ru.is_zero() {
        return Err(Error::Internal(format!(
            "{d} divides the second coordinate but not the first ({u})"
        )));
    }
    let result = QuadRep::from_parts(key.n, qu, v / d);
    Ok(Some(CancelOutcome { result, branch }))
}

fn value_as_u64(rep: &QuadRep, what: &str) -> Result<u64> {
    rep.value
        .to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("{what} {}", rep.value)))
}

/// Removes a prime `p = a^2 + n b^2` from a representation of `p * r`.
pub fn cancel_prime(key: &QuadRep, big: &QuadRep) -> Result<CancelOutcome> {
    require_same_n(key, big)?;
    let p = value_as_u64(key, "cancelation key")?;
    if !arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "cancelation key {key} has composite value {p}"
        )));
    }
    let p_big = key.value.clone();
    if !big.value.is_multiple_of(&p_big) {
        return Err(Error::InvalidArgument(format!(
            "{p} does not divide {}",
            big.value
        )));
    }
    divide_out(key, big, &p_big)?.ok_or_else(|| {
        Error::Internal(format!(
            "prime {p} divides neither ay - bx nor ay + bx for {big}"
        ))
    })
}

/// Removes `q^2` (odd prime `q`, nontrivial key) from a representation of
/// `q^2 * r`. A nontrivial proper input with `r` not in `{1, n}` yields a
/// nontrivial proper result.
pub fn cancel_square(key: &QuadRep, big: &QuadRep) -> Result<CancelOutcome> {
    require_same_n(key, big)?;
    let q = key.value.sqrt();
    if &q * &q != key.value {
        return Err(Error::InvalidArgument(format!(
            "key value {} is not a square",
            key.value
        )));
    }
    let q_small = q
        .to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("square root {q} of key")))?;
    if q_small % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "{q_small} is even; use halve for 2^2"
        )));
    }
    if !arith::is_prime(q_small) {
        return Err(Error::InvalidArgument(format!("{q_small} is not prime")));
    }
    if !key.is_nontrivial() {
        return Err(Error::InvalidArgument(format!(
            "key {key} for {q_small}^2 is trivial"
        )));
    }
    if !big.value.is_multiple_of(&key.value) {
        return Err(Error::InvalidArgument(format!(
            "{} does not divide {}",
            key.value, big.value
        )));
    }
    if let Some(outcome) = divide_out(key, big, &key.value)? {
        return Ok(outcome);
    }
    if !big.x.is_multiple_of(&q) || !big.y.is_multiple_of(&q) {
        return Err(Error::Internal(format!(
            "{q}^2 divides neither ay - bx nor ay + bx, yet {q} does not divide both of {}, {}",
            big.x, big.y
        )));
    }
    Ok(CancelOutcome {
        result: QuadRep::from_parts(big.n, &big.x / &q, &big.y / &q),
        branch: Branch::CommonDivisor,
    })
}

/// Divides a representation of `4r` (with `n = 5`) by 2 in each coordinate.
pub fn halve(big: &QuadRep) -> Result<QuadRep> {
    require_n5(big, "halve")?;
    if !big.value.is_multiple_of(&BigUint::from(4u32)) {
        return Err(Error::InvalidArgument(format!(
            "4 does not divide {}",
            big.value
        )));
    }
    if big.x.is_odd() || big.y.is_odd() {
        return Err(Error::Internal(format!(
            "4 divides {} but ({}, {}) are not both even",
            big.value, big.x, big.y
        )));
    }
    Ok(QuadRep::from_parts(5, &big.x >> 1, &big.y >> 1))
}

/// `s^2 = (a^2 - 5b^2)^2 + 5(2ab)^2` for an odd `s = a^2 + 5b^2` prime to 5,
/// given as a nontrivial proper representation.
pub fn square_rep(s_rep: &QuadRep) -> Result<QuadRep> {
    require_n5(s_rep, "square_rep")?;
    let s = &s_rep.value;
    if s.is_even() {
        return Err(Error::InvalidArgument(format!("{s} is even")));
    }
    if s.is_multiple_of(&BigUint::from(5u32)) {
        return Err(Error::InvalidArgument(format!("5 divides {s}")));
    }
    if !s_rep.is_nontrivial() || !s_rep.is_proper() {
        return Err(Error::InvalidArgument(format!(
            "{s_rep} is not nontrivial and proper"
        )));
    }
    let a2 = &s_rep.x * &s_rep.x;
    let b2 = 5u32 * (&s_rep.y * &s_rep.y);
    let u = abs_diff(a2, b2);
    let v = 2u32 * (&s_rep.x * &s_rep.y);
    Ok(QuadRep::from_parts(5, u, v))
}

/// Divides a representation of `5r` by 5: `(x, y)` with `5 | x` becomes
/// `(y, x/5)`.
pub fn strip_five(big: &QuadRep) -> Result<QuadRep> {
    require_n5(big, "strip_five")?;
    let five = BigUint::from(5u32);
    if !big.value.is_multiple_of(&five) {
        return Err(Error::InvalidArgument(format!(
            "5 does not divide {}",
            big.value
        )));
    }
    if !big.x.is_multiple_of(&five) {
        return Err(Error::Internal(format!(
            "5 divides {} but not x = {}",
            big.value, big.x
        )));
    }
    Ok(QuadRep::from_parts(5, big.y.clone(), &big.x / five))
}
