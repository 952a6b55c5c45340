//! Machine-word number theory: modular powers, Legendre symbols, modular
//! square roots, primality and factorization.
//!
//! Every routine here works on `u64` inputs, with `u128` products for the
//! modular multiplications. That covers every prime the descent accepts and
//! every seed cofactor `r < p` it ever factors.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Trial division bound used before switching to Pollard rho.
const TRIAL_BOUND: u64 = 1_000_000;

/// Bases for which strong-probable-prime tests are exact below 2^64.
const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Bases {2, 7, 61} are exact below 4,759,123,141.
const SMALL_MR_BASES: [u64; 3] = [2, 7, 61];
const SMALL_MR_LIMIT: u64 = 4_759_123_141;

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_unchecked(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut base = base % m;
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `base^exp mod modulus` by binary exponentiation.
pub fn pow_mod(base: u64, exp: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::InvalidArgument(format!(
            "modulus must be at least 2, got {modulus}"
        )));
    }
    Ok(pow_mod_unchecked(base, exp, modulus))
}

/// Reduces a signed integer into `[0, p)`.
#[inline]
pub fn reduce_signed(a: i128, p: u64) -> u64 {
    a.rem_euclid(p as i128) as u64
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// Legendre symbol `(a / p)` via Euler's criterion.
pub fn legendre(a: i128, p: u64) -> Result<i32> {
    require_odd_prime(p)?;
    Ok(legendre_unchecked(reduce_signed(a, p), p))
}

fn legendre_unchecked(a: u64, p: u64) -> i32 {
    if a == 0 {
        return 0;
    }
    match pow_mod_unchecked(a, (p - 1) / 2, p) {
        1 => 1,
        v if v == p - 1 => -1,
        v => unreachable!("Euler criterion gave {v} for prime {p}"),
    }
}

/// Square root of `a` modulo the odd prime `p`.
///
/// Of the two roots `x` and `p - x` the smaller one is returned, so the
/// result never exceeds `(p - 1) / 2`.
pub fn sqrt_mod(a: i128, p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let a_red = reduce_signed(a, p);
    if a_red == 0 {
        return Ok(0);
    }
    if legendre_unchecked(a_red, p) != 1 {
        return Err(Error::NoRoot { a, p });
    }
    let root = if p % 4 == 3 {
        pow_mod_unchecked(a_red, (p + 1) / 4, p)
    } else {
        tonelli_shanks(a_red, p)
    };
    debug_assert_eq!(mul_mod(root, root, p), a_red);
    Ok(root.min(p - root))
}

fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let twos = (p - 1).trailing_zeros();
    let odd = (p - 1) >> twos;

    let mut z = 2;
    while legendre_unchecked(z, p) != -1 {
        z += 1;
    }

    let mut m = twos;
    let mut c = pow_mod_unchecked(z, odd, p);
    let mut t = pow_mod_unchecked(a, odd, p);
    let mut r = pow_mod_unchecked(a, odd.div_ceil(2), p);
    while t != 1 {
        // least i with t^(2^i) = 1
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = mul_mod(b, b, p);
        }
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

fn strong_probable_prime(n: u64, base: u64) -> bool {
    let base = base % n;
    if base == 0 {
        return true;
    }
    let twos = (n - 1).trailing_zeros();
    let odd = (n - 1) >> twos;
    let mut x = pow_mod_unchecked(base, odd, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..twos {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test, exact on the whole `u64` range.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if m == p {
            return true;
        }
        if m.is_multiple_of(p) {
            return false;
        }
    }
    if m < 41 * 41 {
        return true;
    }
    let bases: &[u64] = if m < SMALL_MR_LIMIT {
        &SMALL_MR_BASES
    } else {
        &MR_BASES
    };
    bases.iter().all(|&b| strong_probable_prime(m, b))
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactorList(Vec<(u64, u32)>);

impl FactorList {
    pub fn as_slice(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &(u64, u32)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> u128 {
        self.0.iter().map(|&(p, e)| (p as u128).pow(e)).product()
    }

    /// Each prime repeated according to its exponent, ascending.
    pub fn expanded(&self) -> Vec<u64> {
        self.0
            .iter()
            .flat_map(|&(p, e)| std::iter::repeat_n(p, e as usize))
            .collect()
    }

    fn from_unsorted(mut primes: Vec<u64>) -> Self {
        primes.sort_unstable();
        let mut out: Vec<(u64, u32)> = Vec::new();
        for p in primes {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        FactorList(out)
    }
}

impl fmt::Display for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" * "))
        }
    }
}

fn trial_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_BOUND as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Complete factorization of `m`: trial division below 10^6, then
/// Pollard rho (Brent) on whatever composite cofactor is left.
pub fn factorize(m: u64) -> FactorList {
    let mut primes = Vec::new();
    let mut rest = m;
    if rest <= 1 {
        return FactorList::default();
    }
    for &p in trial_primes() {
        let p = p as u64;
        if p * p > rest {
            break;
        }
        while rest.is_multiple_of(p) {
            primes.push(p);
            rest /= p;
        }
    }
    if rest > 1 {
        split_large(rest, &mut primes);
    }
    FactorList::from_unsorted(primes)
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Finds a nontrivial divisor of the odd composite `n`. Starting points and
/// increments come from a splitmix64 stream seeded with `n`, so repeated
/// calls on the same input walk the same sequence.
fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    const BATCH: u64 = 128;
    let mut state = n;
    loop {
        let mut y = splitmix64(&mut state) % n;
        let c = 1 + splitmix64(&mut state) % (n - 1);
        let f = |v: u64| ((mul_mod(v, v, n) as u128 + c as u128) % n as u128) as u64;

        let mut g = 1;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // batch overshot: replay one step at a time
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}
