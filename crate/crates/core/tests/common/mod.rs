#![allow(dead_code)]

use num_traits::ToPrimitive;
use quadrep::certificate::{self, Certificate, StepKind};
use quadrep::quadform::QuadRep;
use rand::Rng;

pub fn xy(r: &QuadRep) -> (u64, u64) {
    (r.x().to_u64().unwrap(), r.y().to_u64().unwrap())
}

pub fn primes_below(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit.max(2)];
    let mut out = Vec::new();
    for i in 2..limit {
        if !composite[i] {
            out.push(i as u64);
            for j in (i * i..limit).step_by(i) {
                composite[j] = true;
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Atom {
    Number,
    Branch,
    Tag,
}

/// Byte spans of every mutable token in a serialized certificate.
fn atoms(text: &str) -> Vec<(usize, usize, Atom)> {
    let bytes = text.as_bytes();
    let mut found = Vec::new();
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let tag_end = line.find(' ').unwrap_or(line.len());
        let tag = &line[..tag_end];
        if tag != "CERT" && tag != "FINAL" {
            found.push((line_start, line_start + tag_end, Atom::Tag));
        }
        if let Some(pos) = line.find("branch=") {
            let start = line_start + pos + "branch=".len();
            let end = line_start + line.trim_end().len();
            found.push((start, end, Atom::Branch));
        }
        line_start += line.len();
    }
    let mut i = 0;
    while i < bytes.len() {
        let signed = bytes[i] == b'-' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit);
        if bytes[i].is_ascii_digit() || signed {
            let start = i;
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            found.push((start, i, Atom::Number));
        } else {
            i += 1;
        }
    }
    found
}

fn mutate_number<R: Rng>(rng: &mut R, old: &str) -> String {
    let v: i128 = old.parse().unwrap();
    loop {
        let candidate = match rng.random_range(0..6) {
            0 => v + 1,
            1 => v - 1,
            2 => v * 2 + 1,
            3 => 0,
            4 => -v,
            _ => rng.random_range(0..=v.abs() * 2 + 10),
        };
        // keep it parseable: only the form coordinate may be negative
        let candidate = if old.starts_with('-') {
            candidate
        } else {
            candidate.abs()
        };
        if candidate != v {
            return candidate.to_string();
        }
    }
}

/// Changes exactly one token (a number, a branch name or a step tag) of a
/// serialized certificate to a different value.
pub fn mutate<R: Rng>(rng: &mut R, text: &str) -> String {
    let spans = atoms(text);
    let (start, end, atom) = spans[rng.random_range(0..spans.len())];
    let old = &text[start..end];
    let new = match atom {
        Atom::Number => mutate_number(rng, old),
        Atom::Branch => {
            let options: Vec<&str> = ["plus", "minus", "common"]
                .into_iter()
                .filter(|b| *b != old)
                .collect();
            options[rng.random_range(0..options.len())].to_string()
        }
        Atom::Tag => {
            let options: Vec<&str> = StepKind::ALL
                .iter()
                .map(|k| k.tag())
                .filter(|t| *t != old)
                .collect();
            options[rng.random_range(0..options.len())].to_string()
        }
    };
    format!("{}{}{}", &text[..start], new, &text[end..])
}

/// A mutated text is rejected if it fails to parse or fails to verify.
pub fn rejected(text: &str) -> bool {
    match certificate::deserialize(text) {
        Err(_) => true,
        Ok(cert) => certificate::verify(&cert).is_err(),
    }
}

pub fn round_trips(cert: &Certificate) -> bool {
    let text = certificate::serialize(cert);
    certificate::deserialize(&text)
        .is_ok_and(|back| back == *cert && certificate::serialize(&back) == text)
}
