//! Line-oriented text encoding.
//!
//! ```text
//! CERT n=5 target=29
//! SEED p=29 r=6 out=(13,1)
//! COMPOSE key=(1,1) in=(13,1) out=(18,12) branch=plus
//! CANCEL_SQUARE key=(2,1) in=(18,12) out=(6,4) branch=common
//! HALVE in=(6,4) out=(3,2)
//! FINAL (3,2)
//! ```
//!
//! Fields are separated by single spaces and appear in a fixed order per
//! step kind. Integers are plain decimal without sign or leading zeros,
//! except the first coordinate of `FORM_CONVERT out=`, which may carry a
//! leading `-`. Every line, including the last, ends in `\n`.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use thiserror::Error;

use super::{Certificate, Coords, SignedCoords, Step, StepKind};
use crate::quadform::{Branch, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn branch_tag(branch: Branch) -> &'static str {
    match branch {
        Branch::ProperPlus => "plus",
        Branch::ProperMinus => "minus",
        Branch::CommonDivisor => "common",
    }
}

fn sign_tag(sign: Sign) -> &'static str {
    match sign {
        Sign::Plus => "plus",
        Sign::Minus => "minus",
    }
}

/// Renders a certificate. The output is a pure function of the value.
pub fn serialize(cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "CERT n={} target={}", cert.n, cert.target);
    for step in &cert.steps {
        let tag = step.kind().tag();
        let _ = match step {
            Step::Seed { p, r, out: o } => writeln!(out, "{tag} p={p} r={r} out={o}"),
            Step::StripFive { input, out: o }
            | Step::Halve { input, out: o }
            | Step::Square { input, out: o } => writeln!(out, "{tag} in={input} out={o}"),
            Step::CancelPrime {
                key,
                input,
                out: o,
                branch,
            }
            | Step::CancelSquare {
                key,
                input,
                out: o,
                branch,
            } => writeln!(
                out,
                "{tag} key={key} in={input} out={o} branch={}",
                branch_tag(*branch)
            ),
            Step::Compose {
                key,
                input,
                out: o,
                sign,
            } => writeln!(
                out,
                "{tag} key={key} in={input} out={o} branch={}",
                sign_tag(*sign)
            ),
            Step::FormConvert { input, out: o } => writeln!(out, "{tag} in={input} out={o}"),
        };
    }
    let _ = writeln!(out, "FINAL {}", cert.final_rep);
    out
}

struct LineParser<'a> {
    line: usize,
    fields: std::slice::Iter<'a, &'a str>,
}

impl<'a> LineParser<'a> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            message: message.into(),
        }
    }

    fn field(&mut self, name: &str) -> Result<&'a str, ParseError> {
        let tok = self
            .fields
            .next()
            .ok_or_else(|| self.err(format!("missing field `{name}`")))?;
        tok.strip_prefix(name)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| self.err(format!("expected `{name}=`, found `{tok}`")))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.fields.next() {
            None => Ok(()),
            Some(extra) => Err(self.err(format!("unexpected trailing field `{extra}`"))),
        }
    }

    fn nat(&self, s: &str) -> Result<BigUint, ParseError> {
        parse_nat(s).ok_or_else(|| self.err(format!("`{s}` is not a canonical decimal integer")))
    }

    fn int(&self, s: &str) -> Result<BigInt, ParseError> {
        match s.strip_prefix('-') {
            Some(mag) => {
                let m = self.nat(mag)?;
                if m == BigUint::ZERO {
                    return Err(self.err("`-0` is not canonical"));
                }
                Ok(BigInt::from_biguint(BigSign::Minus, m))
            }
            None => Ok(BigInt::from(self.nat(s)?)),
        }
    }

    fn pair_parts<'s>(&self, s: &'s str) -> Result<(&'s str, &'s str), ParseError> {
        s.strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|r| r.split_once(','))
            .ok_or_else(|| self.err(format!("`{s}` is not a pair `(x,y)`")))
    }

    fn coords(&mut self, name: &str) -> Result<Coords, ParseError> {
        let raw = self.field(name)?;
        let (x, y) = self.pair_parts(raw)?;
        Ok(Coords {
            x: self.nat(x)?,
            y: self.nat(y)?,
        })
    }

    fn signed_coords(&mut self, name: &str) -> Result<SignedCoords, ParseError> {
        let raw = self.field(name)?;
        let (x, y) = self.pair_parts(raw)?;
        Ok(SignedCoords {
            x: self.int(x)?,
            y: self.nat(y)?,
        })
    }

    fn branch(&mut self) -> Result<Branch, ParseError> {
        match self.field("branch")? {
            "plus" => Ok(Branch::ProperPlus),
            "minus" => Ok(Branch::ProperMinus),
            "common" => Ok(Branch::CommonDivisor),
            other => Err(self.err(format!("unknown branch tag `{other}`"))),
        }
    }

    fn sign(&mut self) -> Result<Sign, ParseError> {
        match self.field("branch")? {
            "plus" => Ok(Sign::Plus),
            "minus" => Ok(Sign::Minus),
            other => Err(self.err(format!("unknown composition sign `{other}`"))),
        }
    }
}

fn parse_nat(s: &str) -> Option<BigUint> {
    let canonical =
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if !canonical {
        return None;
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
}

fn parse_step(kind: StepKind, p: &mut LineParser<'_>) -> Result<Step, ParseError> {
    let step = match kind {
        StepKind::Seed => {
            let prime = p.field("p")?;
            let prime = p.nat(prime)?;
            let r = p.field("r")?;
            let r = p.nat(r)?;
            Step::Seed {
                p: prime,
                r,
                out: p.coords("out")?,
            }
        }
        StepKind::StripFive => Step::StripFive {
            input: p.coords("in")?,
            out: p.coords("out")?,
        },
        StepKind::Halve => Step::Halve {
            input: p.coords("in")?,
            out: p.coords("out")?,
        },
        StepKind::Square => Step::Square {
            input: p.coords("in")?,
            out: p.coords("out")?,
        },
        StepKind::CancelPrime => Step::CancelPrime {
            key: p.coords("key")?,
            input: p.coords("in")?,
            out: p.coords("out")?,
            branch: p.branch()?,
        },
        StepKind::CancelSquare => Step::CancelSquare {
            key: p.coords("key")?,
            input: p.coords("in")?,
            out: p.coords("out")?,
            branch: p.branch()?,
        },
        StepKind::Compose => Step::Compose {
            key: p.coords("key")?,
            input: p.coords("in")?,
            out: p.coords("out")?,
            sign: p.sign()?,
        },
        StepKind::FormConvert => Step::FormConvert {
            input: p.coords("in")?,
            out: p.signed_coords("out")?,
        },
    };
    p.finish()?;
    Ok(step)
}

/// Parses the text form. Structural problems are reported with their
/// 1-based line number; arithmetic is left to [`super::verify`].
pub fn deserialize(text: &str) -> Result<Certificate, ParseError> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    let last_no = lines.len();
    if lines.pop() != Some("") {
        return Err(ParseError {
            line: last_no,
            message: "missing final newline".into(),
        });
    }
    let mut header = None;
    let mut steps = Vec::new();
    let mut final_rep = None;

    for (idx, raw) in lines.iter().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split(' ').collect();
        let (head, rest) = tokens
            .split_first()
            .expect("split yields at least one token");
        let mut p = LineParser {
            line,
            fields: rest.iter(),
        };
        if final_rep.is_some() {
            return Err(p.err("content after FINAL"));
        }
        if line == 1 {
            if *head != "CERT" {
                return Err(p.err(format!("expected `CERT` header, found `{head}`")));
            }
            let n = p.field("n")?;
            let n: u32 = n
                .parse()
                .ok()
                .filter(|v: &u32| v.to_string() == n)
                .ok_or_else(|| p.err(format!("`{n}` is not a valid multiplier")))?;
            let target = p.field("target")?;
            let target = p.nat(target)?;
            p.finish()?;
            header = Some((n, target));
            continue;
        }
        if *head == "FINAL" {
            let raw_pair = p
                .fields
                .next()
                .ok_or_else(|| p.err("missing final coordinates"))?;
            let (x, y) = p.pair_parts(raw_pair)?;
            final_rep = Some(Coords {
                x: p.nat(x)?,
                y: p.nat(y)?,
            });
            p.finish()?;
            continue;
        }
        let kind =
            StepKind::from_tag(head).ok_or_else(|| p.err(format!("unknown step kind `{head}`")))?;
        steps.push(parse_step(kind, &mut p)?);
    }

    let (n, target) = header.ok_or_else(|| ParseError {
        line: 1,
        message: "missing CERT header".into(),
    })?;
    let final_rep = final_rep.ok_or_else(|| ParseError {
        line: last_no,
        message: "missing FINAL line".into(),
    })?;
    Ok(Certificate {
        n,
        target,
        steps,
        final_rep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Certificate {
        Certificate {
            n: 5,
            target: BigUint::from(29u32),
            steps: vec![
                Step::Seed {
                    p: 29u32.into(),
                    r: 6u32.into(),
                    out: Coords::new(13u32, 1u32),
                },
                Step::FormConvert {
                    input: Coords::new(1u32, 3u32),
                    out: SignedCoords {
                        x: BigInt::from(-1),
                        y: 3u32.into(),
                    },
                },
            ],
            final_rep: Coords::new(3u32, 2u32),
        }
    }

    #[test]
    fn renders_fixed_layout() {
        let text = serialize(&sample());
        assert_eq!(
            text,
            "CERT n=5 target=29\nSEED p=29 r=6 out=(13,1)\n\
             FORM_CONVERT in=(1,3) out=(-1,3)\nFINAL (3,2)\n"
        );
        assert_eq!(deserialize(&text).unwrap(), sample());
    }

    #[test]
    fn rejects_malformed_lines() {
        let good = serialize(&sample());
        let cases = [
            (good.replace("SEED", "SEEDS"), 2),
            (good.replace("FINAL (3,2)\n", "FINAL (3,2) x\n"), 4),
            (good.replace("r=6", "r=06"), 2),
            (good.replace("r=6", "r=+6"), 2),
            (good.replace("p=29 r=6", "r=6 p=29"), 2),
            (good.replace("out=(13,1)", "out=(13, 1)"), 2),
            (good.replace("(-1,3)", "(-0,3)"), 3),
            (good.replace("target=29", "target=29 "), 1),
            (format!("{good}\n"), 5),
            (good.trim_end().to_string(), 4),
            (good.replace("FINAL (3,2)\n", ""), 4),
            (good.replace("CERT", "CERTIFICATE"), 1),
            (good.replace("\n", "\r\n"), 1),
        ];
        for (text, line) in cases {
            let err = deserialize(&text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}: {err}");
        }
    }

    #[test]
    fn unknown_kind_names_line() {
        let text = "CERT n=5 target=1\nWIGGLE in=(1,0) out=(1,0)\nFINAL (1,0)\n";
        let err = deserialize(text).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("WIGGLE"));
    }
}
