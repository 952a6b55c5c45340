use std::fmt;

/// Where a prime sits with respect to `x^2 + 5y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueClass {
    /// `p ≡ 1, 9 (mod 20)`: `p = x^2 + 5y^2`.
    OneNine,
    /// `p ≡ 3, 7 (mod 20)`: only products of two such primes (or `2p`) are
    /// of the form.
    ThreeSeven,
    Two,
    Five,
    /// `-5` is a non-residue modulo `p`.
    NonResidue,
}

impl ResidueClass {
    /// Classifies a prime by its residue mod 20. Composite inputs get the
    /// class of their residue, which is only meaningful for primes.
    pub fn of(p: u64) -> Self {
        match p {
            2 => ResidueClass::Two,
            5 => ResidueClass::Five,
            _ => match p % 20 {
                1 | 9 => ResidueClass::OneNine,
                3 | 7 => ResidueClass::ThreeSeven,
                _ => ResidueClass::NonResidue,
            },
        }
    }

    /// Member of `{3, 7 mod 20} ∪ {2}`, the primes canceled in pairs.
    pub fn is_paired(self) -> bool {
        matches!(self, ResidueClass::ThreeSeven | ResidueClass::Two)
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResidueClass::OneNine => "1,9 mod 20",
            ResidueClass::ThreeSeven => "3,7 mod 20",
            ResidueClass::Two => "2",
            ResidueClass::Five => "5",
            ResidueClass::NonResidue => "non-residue class",
        })
    }
}

/// Whether the prime `p` is `x^2 + n*y^2` for some `x, y`, decided by
/// congruence alone.
pub fn representable(p: u64, n: u32) -> bool {
    match n {
        1 => p == 2 || p % 4 == 1,
        2 => p == 2 || matches!(p % 8, 1 | 3),
        3 => p == 3 || p % 3 == 1,
        5 => p == 5 || ResidueClass::of(p) == ResidueClass::OneNine,
        _ => false,
    }
}

/// The congruence that rules `p` out, e.g. `"7 mod 20"`.
pub fn class_label(p: u64, n: u32) -> String {
    let m = match n {
        1 => 4,
        2 => 8,
        3 => 3,
        _ => 20,
    };
    format!("{} mod {m}", p % m)
}
