//! The form `2x^2 + 2xy + 3y^2` and its two product identities with
//! `x^2 + 5y^2`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};

use crate::quadform::QuadRep;

/// `value = 2*xp^2 + 2*xp*y + 3*y^2`, where `xp` may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form223Val {
    xp: BigInt,
    y: BigUint,
    value: BigUint,
}

impl Form223Val {
    pub fn new(xp: impl Into<BigInt>, y: impl Into<BigUint>) -> Self {
        let xp = xp.into();
        let y = y.into();
        let ys = BigInt::from(y.clone());
        let v: BigInt = 2 * &xp * &xp + 2 * &xp * &ys + 3 * &ys * &ys;
        // 2X^2 + 2XY + 3Y^2 is positive definite
        let value = v.to_biguint().expect("form value is nonnegative");
        Form223Val { xp, y, value }
    }

    pub fn xp(&self) -> &BigInt {
        &self.xp
    }

    pub fn y(&self) -> &BigUint {
        &self.y
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }
}

impl fmt::Display for Form223Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (xp, y) = (&self.xp, &self.y);
        write!(f, "2*({xp})^2 + 2*({xp})*{y} + 3*{y}^2")
    }
}

fn to_rep(u: BigInt, v: BigInt) -> QuadRep {
    let u = u.abs().to_biguint().expect("absolute value");
    let v = v.abs().to_biguint().expect("absolute value");
    QuadRep::new(5, u, v).expect("n = 5 is supported")
}

/// [`compose_form`] in machine words, or `None` on overflow.
fn compose_form_i64(f1: &Form223Val, f2: &Form223Val) -> Option<(i128, i128)> {
    let (x, y) = (f1.xp.to_i64()? as i128, f1.y.to_i64()? as i128);
    let (a, b) = (f2.xp.to_i64()? as i128, f2.y.to_i64()? as i128);
    let (ax, bx, ay, by) = (a * x, b * x, a * y, b * y);
    let u = ax
        .checked_mul(2)?
        .checked_add(bx)?
        .checked_add(ay)?
        .checked_add(by.checked_mul(3)?)?;
    Some((u, bx.checked_sub(ay)?))
}

/// `(2x^2+2xy+3y^2)(2a^2+2ab+3b^2) = (2ax+bx+ay+3by)^2 + 5(bx-ay)^2`
/// with `(x, y) = f1` and `(a, b) = f2`.
pub fn compose_form(f1: &Form223Val, f2: &Form223Val) -> QuadRep {
    if let Some((u, v)) = compose_form_i64(f1, f2) {
        return QuadRep::from_u128(5, u.unsigned_abs(), v.unsigned_abs());
    }
    let (x, y) = (&f1.xp, BigInt::from(f1.y.clone()));
    let (a, b) = (&f2.xp, BigInt::from(f2.y.clone()));
    let u: BigInt = 2 * a * x + &b * x + a * &y + 3 * &b * &y;
    let v: BigInt = &b * x - a * &y;
    to_rep(u, v)
}

/// `2(2x^2 + 2xy + 3y^2) = (2x + y)^2 + 5y^2`.
pub fn double_form(f: &Form223Val) -> QuadRep {
    let y = BigInt::from(f.y.clone());
    to_rep(2 * &f.xp + &y, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(r: &QuadRep) -> (u64, u64) {
        (r.x().to_u64().unwrap(), r.y().to_u64().unwrap())
    }

    #[test]
    fn form_values() {
        assert_eq!(Form223Val::new(0, 1u32).value(), &BigUint::from(3u32));
        assert_eq!(Form223Val::new(1, 1u32).value(), &BigUint::from(7u32));
        assert_eq!(Form223Val::new(-1, 3u32).value(), &BigUint::from(23u32));
        assert_eq!(
            Form223Val::new(-1, 3u32).to_string(),
            "2*(-1)^2 + 2*(-1)*3 + 3*3^2"
        );
    }

    #[test]
    fn compose_form_examples() {
        let seven = Form223Val::new(1, 1u32);
        let three = Form223Val::new(0, 1u32);
        let r = compose_form(&seven, &seven);
        assert_eq!((coords(&r), r.value().to_u64().unwrap()), ((7, 0), 49));
        let r = compose_form(&three, &three);
        assert_eq!((coords(&r), r.value().to_u64().unwrap()), ((3, 0), 9));
        let r = compose_form(&seven, &three);
        assert_eq!((coords(&r), r.value().to_u64().unwrap()), ((4, 1), 21));
    }

    #[test]
    fn double_form_examples() {
        assert_eq!(coords(&double_form(&Form223Val::new(1, 1u32))), (3, 1));
        assert_eq!(coords(&double_form(&Form223Val::new(0, 1u32))), (1, 1));
        let r = double_form(&Form223Val::new(-1, 3u32));
        assert_eq!((coords(&r), r.value().to_u64().unwrap()), ((1, 3), 46));
    }
}
