//! Descent engines producing representations together with certificates.
//!
//! For `n = 1, 2, 3` the classical route applies: seed `p*r = x^2 + n` from
//! a square root of `-n`, then cancel the primes of `r` one at a time with
//! representations found recursively.
//!
//! For `n = 5` the cofactor `r` can contain primes `≡ 3, 7 (mod 20)` and 2,
//! none of which are `x^2 + 5y^2` on their own. Those are canceled in pairs:
//! a recursively found nontrivial representation of `q*q'` is multiplied in,
//! after which `q^2` and `q'^2` come out by square cancelation (or halving
//! for 2). The descent ends at `p*1` for `p ≡ 1, 9 (mod 20)` and at `p*q0`
//! with a single leftover `q0` for `p ≡ 3, 7 (mod 20)`, from which any
//! product `p*t` is then assembled.
//!
//! Recursive results are memoized in a [`Prover`]; every recursive call
//! targets primes strictly below the prime being descended.

mod form;
mod oracle;
mod residue;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{self, FactorList};
use crate::certificate::{Certificate, Coords, SignedCoords, Step};
use crate::error::{Error, Result};
use crate::quadform::{self, QuadRep, Sign};

pub use form::{compose_form, double_form, Form223Val};
pub use oracle::{brute_force_rep, Oracle, DEFAULT_ORACLE_BOUND, ORACLE_BOUND_ENV};
pub use residue::{class_label, representable, ResidueClass};

/// A representation under construction plus the steps that produced it.
#[derive(Debug, Clone)]
struct Trace {
    steps: Vec<Step>,
    current: QuadRep,
}

impl Trace {
    fn unseeded(rep: QuadRep) -> Self {
        Trace {
            steps: Vec::new(),
            current: rep,
        }
    }

    fn seeded(p: u64, r: u64, seed: QuadRep) -> Self {
        let step = Step::Seed {
            p: p.into(),
            r: r.into(),
            out: Coords::from(&seed),
        };
        Trace {
            steps: vec![step],
            current: seed,
        }
    }

    fn apply(&mut self, next: QuadRep, make: impl FnOnce(Coords, Coords) -> Step) {
        let input = Coords::from(&self.current);
        let out = Coords::from(&next);
        self.steps.push(make(input, out));
        self.current = next;
    }

    fn strip_five(&mut self) -> Result<()> {
        let next = quadform::strip_five(&self.current)?;
        self.apply(next, |input, out| Step::StripFive { input, out });
        Ok(())
    }

    fn cancel_prime(&mut self, key: &QuadRep) -> Result<()> {
        let outcome = quadform::cancel_prime(key, &self.current)?;
        let key = Coords::from(key);
        self.apply(outcome.result, |input, out| Step::CancelPrime {
            key,
            input,
            out,
            branch: outcome.branch,
        });
        Ok(())
    }

    fn cancel_square(&mut self, key: &QuadRep) -> Result<()> {
        let outcome = quadform::cancel_square(key, &self.current)?;
        let key = Coords::from(key);
        self.apply(outcome.result, |input, out| Step::CancelSquare {
            key,
            input,
            out,
            branch: outcome.branch,
        });
        Ok(())
    }

    fn halve(&mut self) -> Result<()> {
        let next = quadform::halve(&self.current)?;
        self.apply(next, |input, out| Step::Halve { input, out });
        Ok(())
    }

    fn compose(&mut self, key: &QuadRep, sign: Sign) -> Result<()> {
        let next = quadform::compose(key, &self.current, sign)?;
        let key = Coords::from(key);
        self.apply(next, |input, out| Step::Compose {
            key,
            input,
            out,
            sign,
        });
        Ok(())
    }

    fn square(&mut self) -> Result<()> {
        let next = quadform::square_rep(&self.current)?;
        self.apply(next, |input, out| Step::Square { input, out });
        Ok(())
    }

    fn into_certificate(self, target: BigUint) -> Result<(QuadRep, Certificate)> {
        if *self.current.value() != target {
            return Err(Error::Internal(format!(
                "descent ended at {} = {}, expected {target}",
                self.current,
                self.current.value()
            )));
        }
        let cert = Certificate {
            n: self.current.n(),
            target,
            steps: self.steps,
            final_rep: Coords::from(&self.current),
        };
        Ok((self.current, cert))
    }
}

/// `current` represents `pi * cofactor` once each cancelation completes.
#[derive(Debug)]
struct DescentState {
    pi: u64,
    cofactor: u64,
    trace: Trace,
}

impl DescentState {
    fn check(&self) -> Result<()> {
        let expected = BigUint::from(self.pi) * self.cofactor;
        if *self.trace.current.value() != expected {
            return Err(Error::Internal(format!(
                "{} does not represent {} * {}",
                self.trace.current, self.pi, self.cofactor
            )));
        }
        Ok(())
    }

    fn divide_cofactor(&mut self, d: u64) -> Result<()> {
        if !self.cofactor.is_multiple_of(d) {
            return Err(Error::Internal(format!(
                "{d} does not divide cofactor {}",
                self.cofactor
            )));
        }
        self.cofactor /= d;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum MemoKey {
    Fermat(u32, u64),
    OneNine(u64),
    /// Larger prime first.
    Pair(u64, u64),
}

fn require_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn wrong_class(p: u64, n: u32) -> Error {
    Error::WrongClass(format!(
        "{p} is not of the form x^2 + {n}*y^2: {p} is {}",
        class_label(p, n)
    ))
}

/// Orders an admissible pair as `(larger, smaller)`.
fn admissible_pair(q: u64, q2: u64) -> Result<(u64, u64)> {
    require_prime(q)?;
    require_prime(q2)?;
    let (hi, lo) = if q >= q2 { (q, q2) } else { (q2, q) };
    let ok = ResidueClass::of(hi) == ResidueClass::ThreeSeven && ResidueClass::of(lo).is_paired();
    if !ok {
        return Err(Error::WrongClass(format!(
            "{q} * {q2} is not a product of primes in 3,7 mod 20 (one may be 2): \
             {q} is {}, {q2} is {}",
            ResidueClass::of(q),
            ResidueClass::of(q2)
        )));
    }
    Ok((hi, lo))
}

fn to_u64(v: &BigUint) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::Internal(format!("{v} overflowed a machine word")))
}

/// Memoizing prover. Safe to share between threads.
#[derive(Debug, Default)]
pub struct Prover {
    memo: RwLock<HashMap<MemoKey, QuadRep>>,
}

/// Process-wide prover used by the free functions in this module.
pub fn shared() -> &'static Prover {
    static SHARED: OnceLock<Prover> = OnceLock::new();
    SHARED.get_or_init(Prover::default)
}

impl Prover {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized results.
    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock poisoned").len()
    }

    fn memoized(&self, key: MemoKey, compute: impl FnOnce() -> Result<QuadRep>) -> Result<QuadRep> {
        if let Some(rep) = self.memo.read().expect("memo lock poisoned").get(&key) {
            return Ok(rep.clone());
        }
        let rep = compute()?;
        self.memo
            .write()
            .expect("memo lock poisoned")
            .insert(key, rep.clone());
        Ok(rep)
    }

    fn fermat_rep(&self, p: u64, n: u32) -> Result<QuadRep> {
        self.memoized(MemoKey::Fermat(n, p), || Ok(self.fermat_trace(p, n)?.0))
    }

    fn one_nine_rep(&self, p: u64) -> Result<QuadRep> {
        self.memoized(MemoKey::OneNine(p), || Ok(self.represent_n5(p)?.0))
    }

    fn pair_rep(&self, q: u64, q2: u64) -> Result<QuadRep> {
        let (hi, lo) = admissible_pair(q, q2)?;
        self.memoized(MemoKey::Pair(hi, lo), || Ok(self.pair_trace(hi, lo)?.0))
    }

    fn fermat_trace(&self, p: u64, n: u32) -> Result<(QuadRep, Certificate)> {
        if !matches!(n, 1..=3) {
            return Err(Error::InvalidArgument(format!(
                "classical descent covers n = 1, 2, 3, not {n}"
            )));
        }
        require_prime(p)?;
        if !representable(p, n) {
            return Err(wrong_class(p, n));
        }
        if p == n as u64 || p == 2 {
            // 2 = 0^2 + 2*1^2, 3 = 0^2 + 3*1^2, 2 = 1^2 + 1*1^2
            let rep = if p == n as u64 {
                QuadRep::new(n, 0u32, 1u32)?
            } else {
                QuadRep::new(n, 1u32, 1u32)?
            };
            return Trace::unseeded(rep).into_certificate(p.into());
        }

        let root = arith::sqrt_mod(-(n as i128), p)?;
        // for n = 1, 3 take the even root so x^2 + n, hence r, is odd
        let x = if n != 2 && root % 2 == 1 {
            p - root
        } else {
            root
        };
        let seed_value = x as u128 * x as u128 + n as u128;
        let r = (seed_value / p as u128) as u64;
        let mut trace = Trace::seeded(p, r, QuadRep::new(n, x, 1u32)?);

        for &(q, e) in arith::factorize(r).iter() {
            if q >= p {
                return Err(Error::Internal(format!(
                    "cofactor prime {q} is not below {p}"
                )));
            }
            let key = self.fermat_rep(q, n)?;
            for _ in 0..e {
                trace.cancel_prime(&key)?;
            }
        }
        trace.into_certificate(p.into())
    }

    /// Seeds `pi * r = x^2 + 5` and cancels the cofactor down to either 1 or
    /// a single prime in `{3, 7 mod 20} ∪ {2}`, which is returned.
    fn descend_n5(&self, pi: u64) -> Result<(DescentState, Option<u64>)> {
        let x = arith::sqrt_mod(-5, pi)?;
        let r = ((x as u128 * x as u128 + 5) / pi as u128) as u64;
        let mut state = DescentState {
            pi,
            cofactor: r,
            trace: Trace::seeded(pi, r, QuadRep::new(5, x, 1u32)?),
        };
        state.check()?;

        while state.cofactor.is_multiple_of(5) {
            state.trace.strip_five()?;
            state.divide_cofactor(5)?;
        }

        let factors: FactorList = arith::factorize(state.cofactor);
        let mut paired = Vec::new();
        for &(q, e) in factors.iter() {
            if q >= pi {
                return Err(Error::Internal(format!(
                    "cofactor prime {q} is not below {pi}"
                )));
            }
            match ResidueClass::of(q) {
                ResidueClass::OneNine => {
                    let key = self.one_nine_rep(q)?;
                    for _ in 0..e {
                        state.trace.cancel_prime(&key)?;
                        state.divide_cofactor(q)?;
                    }
                }
                class if class.is_paired() => {
                    paired.extend(std::iter::repeat_n(q, e as usize));
                }
                class => {
                    return Err(Error::Internal(format!(
                        "cofactor prime {q} of {pi} lies in class {class}"
                    )))
                }
            }
        }
        state.check()?;

        // largest first; 2 is the smallest so it pairs last
        paired.sort_unstable_by(|a, b| b.cmp(a));
        let mut chunks = paired.chunks_exact(2);
        for pair in &mut chunks {
            let (q, q2) = (pair[0], pair[1]);
            if q == q2 {
                self.cancel_prime_square(&mut state.trace, q)?;
            } else {
                let key = self.pair_rep(q, q2)?;
                state.trace.compose(&key, Sign::Plus)?;
                self.cancel_prime_square(&mut state.trace, q)?;
                self.cancel_prime_square(&mut state.trace, q2)?;
            }
            state.divide_cofactor(q)?;
            state.divide_cofactor(q2)?;
            state.check()?;
        }
        let leftover = chunks.remainder().first().copied();
        Ok((state, leftover))
    }

    /// Cancels `q^2` from the running representation: halving for `q = 2`,
    /// otherwise square cancelation keyed by a nontrivial representation of
    /// `q^2`.
    fn cancel_prime_square(&self, trace: &mut Trace, q: u64) -> Result<()> {
        if q == 2 {
            trace.halve()
        } else {
            let key = self.pair_rep(q, q)?;
            trace.cancel_square(&key)
        }
    }

    /// Representation of `hi * lo` for an admissible ordered pair.
    fn pair_trace(&self, hi: u64, lo: u64) -> Result<(QuadRep, Certificate)> {
        let (state, leftover) = self.descend_n5(hi)?;
        let q0 = leftover
            .ok_or_else(|| Error::Internal(format!("descent of {hi} ended at cofactor 1")))?;
        let mut trace = state.trace;
        if lo == q0 {
            // already hi * q0
        } else if lo == hi {
            // (hi q0)^2 then remove q0^2
            if q0 == 2 {
                let rep = trace.current.clone();
                trace.compose(&rep, Sign::Minus)?;
                trace.halve()?;
            } else {
                trace.square()?;
                let key = self.pair_rep(q0, q0)?;
                trace.cancel_square(&key)?;
            }
        } else {
            // (hi q0)(q0 lo) = hi lo q0^2
            let key = self.pair_rep(q0, lo)?;
            trace.compose(&key, Sign::Plus)?;
            self.cancel_prime_square(&mut trace, q0)?;
        }
        if !trace.current.is_nontrivial() {
            return Err(Error::Internal(format!(
                "representation {} of {hi} * {lo} is trivial",
                trace.current
            )));
        }
        trace.into_certificate(BigUint::from(hi) * lo)
    }

    /// Representation of a prime by `x^2 + n*y^2`, `n ∈ {1, 2, 3}`.
    pub fn represent_fermat(&self, p: u64, n: u32) -> Result<QuadRep> {
        self.certify_fermat(p, n).map(|(rep, _)| rep)
    }

    /// [`Prover::represent_fermat`] with its certificate.
    pub fn certify_fermat(&self, p: u64, n: u32) -> Result<(QuadRep, Certificate)> {
        let (rep, cert) = self.fermat_trace(p, n)?;
        self.memo
            .write()
            .expect("memo lock poisoned")
            .insert(MemoKey::Fermat(n, p), rep.clone());
        Ok((rep, cert))
    }

    /// `p = x^2 + 5y^2` for a prime `p ≡ 1, 9 (mod 20)` (or `p = 5`).
    pub fn represent_n5(&self, p: u64) -> Result<(QuadRep, Certificate)> {
        require_prime(p)?;
        if p == 5 {
            return Trace::unseeded(QuadRep::new(5, 0u32, 1u32)?).into_certificate(5u32.into());
        }
        if ResidueClass::of(p) != ResidueClass::OneNine {
            return Err(wrong_class(p, 5));
        }
        let (state, leftover) = self.descend_n5(p)?;
        if let Some(q0) = leftover {
            return Err(Error::Internal(format!(
                "descent of {p} ended at cofactor {q0}; x^2 would be ±2 mod 5"
            )));
        }
        let (rep, cert) = state.trace.into_certificate(p.into())?;
        self.memo
            .write()
            .expect("memo lock poisoned")
            .insert(MemoKey::OneNine(p), rep.clone());
        Ok((rep, cert))
    }

    /// Nontrivial `q * q2 = x^2 + 5y^2` for primes `≡ 3, 7 (mod 20)`, one of
    /// which may be 2.
    pub fn represent_pair(&self, q: u64, q2: u64) -> Result<(QuadRep, Certificate)> {
        let (hi, lo) = admissible_pair(q, q2)?;
        let (rep, cert) = self.pair_trace(hi, lo)?;
        if hi == lo && !rep.is_proper() {
            return Err(Error::Internal(format!("{rep} for {hi}^2 is not proper")));
        }
        self.memo
            .write()
            .expect("memo lock poisoned")
            .insert(MemoKey::Pair(hi, lo), rep.clone());
        Ok((rep, cert))
    }

    /// `2p = x^2 + 5y^2` for a prime `p ≡ 3, 7 (mod 20)`; both coordinates
    /// come out odd.
    pub fn represent_2p(&self, p: u64) -> Result<(QuadRep, Certificate)> {
        require_prime(p)?;
        if ResidueClass::of(p) != ResidueClass::ThreeSeven {
            return Err(Error::WrongClass(format!(
                "2 * {p} needs {p} in 3,7 mod 20: {p} is {}",
                class_label(p, 5)
            )));
        }
        let (rep, cert) = self.represent_pair(2, p)?;
        if rep.x().is_even() || rep.y().is_even() {
            return Err(Error::Internal(format!(
                "{rep} for 2 * {p} has an even coordinate"
            )));
        }
        Ok((rep, cert))
    }

    /// `p = 2x'^2 + 2x'y + 3y^2` for a prime `p ≡ 3, 7 (mod 20)`.
    pub fn represent_form_2_2_3(&self, p: u64) -> Result<Form223Val> {
        self.certify_form(p).map(|(form, _)| form)
    }

    /// [`Prover::represent_form_2_2_3`] with the certificate for `2p`,
    /// closed by a `FORM_CONVERT` step.
    pub fn certify_form(&self, p: u64) -> Result<(Form223Val, Certificate)> {
        require_prime(p)?;
        if ResidueClass::of(p) != ResidueClass::ThreeSeven {
            return Err(Error::WrongClass(format!(
                "{p} is not of the form 2x^2 + 2xy + 3y^2: {p} is {}",
                class_label(p, 5)
            )));
        }
        let (rep, mut cert) = self.represent_2p(p)?;
        // x = 2x' + y
        let xp: BigInt = (BigInt::from(rep.x().clone()) - BigInt::from(rep.y().clone())) / 2;
        let form = Form223Val::new(xp.clone(), rep.y().clone());
        if to_u64(form.value())? != p {
            return Err(Error::Internal(format!("{form} does not equal {p}")));
        }
        cert.steps.push(Step::FormConvert {
            input: Coords::from(&rep),
            out: SignedCoords {
                x: xp,
                y: rep.y().clone(),
            },
        });
        Ok((form, cert))
    }

    /// Dispatches on `n`: classical descent for 1, 2, 3, and the
    /// `x^2 + 5y^2` descent for 5.
    pub fn represent(&self, p: u64, n: u32) -> Result<(QuadRep, Certificate)> {
        match n {
            1..=3 => self.certify_fermat(p, n),
            5 => self.represent_n5(p),
            _ => Err(Error::InvalidArgument(format!(
                "unsupported multiplier n = {n}"
            ))),
        }
    }
}

pub fn represent_fermat(p: u64, n: u32) -> Result<QuadRep> {
    shared().represent_fermat(p, n)
}

pub fn represent_n5(p: u64) -> Result<(QuadRep, Certificate)> {
    shared().represent_n5(p)
}

pub fn represent_pair(q: u64, q2: u64) -> Result<(QuadRep, Certificate)> {
    shared().represent_pair(q, q2)
}

pub fn represent_2p(p: u64) -> Result<(QuadRep, Certificate)> {
    shared().represent_2p(p)
}

pub fn represent_form_2_2_3(p: u64) -> Result<Form223Val> {
    shared().represent_form_2_2_3(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify;

    fn coords(r: &QuadRep) -> (u64, u64) {
        (r.x().to_u64().unwrap(), r.y().to_u64().unwrap())
    }

    #[test]
    fn fermat_examples() {
        let p = Prover::new();
        assert!([(2, 3), (3, 2)].contains(&coords(&p.represent_fermat(13, 1).unwrap())));
        assert_eq!(coords(&p.represent_fermat(11, 2).unwrap()), (3, 1));
        assert_eq!(coords(&p.represent_fermat(7, 3).unwrap()), (2, 1));
        assert_eq!(coords(&p.represent_fermat(2, 2).unwrap()), (0, 1));
        assert_eq!(coords(&p.represent_fermat(3, 3).unwrap()), (0, 1));
        assert_eq!(coords(&p.represent_fermat(2, 1).unwrap()), (1, 1));
        assert!(matches!(
            p.represent_fermat(7, 1),
            Err(Error::WrongClass(_))
        ));
        assert!(matches!(
            p.represent_fermat(5, 2),
            Err(Error::WrongClass(_))
        ));
        assert!(matches!(
            p.represent_fermat(2, 3),
            Err(Error::WrongClass(_))
        ));
        assert_eq!(p.represent_fermat(15, 1), Err(Error::NotPrime(15)));
    }

    #[test]
    fn n5_examples() {
        let p = Prover::new();
        let (rep, cert) = p.represent_n5(41).unwrap();
        assert_eq!(coords(&rep), (6, 1));
        assert!(verify(&cert).is_ok());
        assert_eq!(cert.steps.len(), 1);

        let (rep, cert) = p.represent_n5(29).unwrap();
        assert_eq!(coords(&rep), (3, 2));
        assert!(verify(&cert).is_ok());
        let (sp, sr, sx) = cert.seed().unwrap();
        assert_eq!(
            (sp.to_u64(), sr.to_u64(), sx.to_u64()),
            (Some(29), Some(6), Some(13))
        );

        assert_eq!(coords(&p.represent_n5(89).unwrap().0), (3, 4));
        assert_eq!(coords(&p.represent_n5(5).unwrap().0), (0, 1));
        assert!(matches!(p.represent_n5(7), Err(Error::WrongClass(_))));
        assert!(matches!(p.represent_n5(2), Err(Error::WrongClass(_))));
        assert_eq!(p.represent_n5(21), Err(Error::NotPrime(21)));
    }

    #[test]
    fn strip_five_path() {
        // 30^2 + 5 = 181 * 5, then (30, 1) -> (1, 6)
        let p = Prover::new();
        let (rep, cert) = p.represent_n5(181).unwrap();
        assert_eq!(coords(&rep), (1, 6));
        assert!(cert
            .steps
            .iter()
            .any(|s| matches!(s, Step::StripFive { .. })));
        assert!(verify(&cert).is_ok());
    }

    #[test]
    fn pair_examples() {
        let p = Prover::new();
        let (rep, cert) = p.represent_pair(3, 7).unwrap();
        assert!([(1, 2), (4, 1)].contains(&coords(&rep)));
        assert!(verify(&cert).is_ok());
        assert_eq!(coords(&p.represent_pair(3, 3).unwrap().0), (2, 1));
        assert_eq!(coords(&p.represent_pair(2, 3).unwrap().0), (1, 1));
        assert_eq!(coords(&p.represent_pair(2, 7).unwrap().0), (3, 1));
        assert_eq!(coords(&p.represent_pair(7, 2).unwrap().0), (3, 1));
        assert!(matches!(p.represent_pair(2, 2), Err(Error::WrongClass(_))));
        assert!(matches!(p.represent_pair(3, 41), Err(Error::WrongClass(_))));
        assert!(matches!(p.represent_pair(3, 11), Err(Error::WrongClass(_))));
        assert_eq!(p.represent_pair(3, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn two_p_examples() {
        let p = Prover::new();
        assert_eq!(coords(&p.represent_2p(3).unwrap().0), (1, 1));
        assert_eq!(coords(&p.represent_2p(23).unwrap().0), (1, 3));
        assert_eq!(coords(&p.represent_2p(47).unwrap().0), (7, 3));
        assert!(p.represent_2p(41).is_err());
    }

    #[test]
    fn form_examples() {
        let p = Prover::new();
        let f = p.represent_form_2_2_3(3).unwrap();
        assert_eq!((f.xp().clone(), f.y().to_u64()), (BigInt::from(0), Some(1)));
        let f = p.represent_form_2_2_3(23).unwrap();
        assert_eq!(
            (f.xp().clone(), f.y().to_u64()),
            (BigInt::from(-1), Some(3))
        );
        let f = p.represent_form_2_2_3(7).unwrap();
        assert_eq!((f.xp().clone(), f.y().to_u64()), (BigInt::from(1), Some(1)));
        assert!(matches!(
            p.represent_form_2_2_3(41),
            Err(Error::WrongClass(_))
        ));

        let (_, cert) = p.certify_form(23).unwrap();
        assert!(matches!(cert.steps.last(), Some(Step::FormConvert { .. })));
        assert!(verify(&cert).is_ok());
    }

    #[test]
    fn large_primes_near_word_size() {
        let p = Prover::new();
        // largest primes below 2^64 in each class
        let mut found_one_nine = false;
        let mut found_three_seven = false;
        let mut m = u64::MAX;
        while !(found_one_nine && found_three_seven) {
            if arith::is_prime(m) {
                match ResidueClass::of(m) {
                    ResidueClass::OneNine if !found_one_nine => {
                        let (rep, cert) = p.represent_n5(m).unwrap();
                        assert_eq!(rep.value(), &BigUint::from(m));
                        assert!(verify(&cert).is_ok());
                        found_one_nine = true;
                    }
                    ResidueClass::ThreeSeven if !found_three_seven => {
                        let (rep, cert) = p.represent_2p(m).unwrap();
                        assert_eq!(rep.value(), &(BigUint::from(m) * 2u32));
                        assert!(verify(&cert).is_ok());
                        found_three_seven = true;
                    }
                    _ => {}
                }
            }
            m -= 2;
        }
    }
}
