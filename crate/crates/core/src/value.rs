//! Exact scalars: arbitrary-precision rationals and values affine in the
//! symbolic indeterminate Q.
//!
//! A single indeterminate is supported. Every scalar that can appear in a
//! Hamiltonian entry is `a + b*Q` with exact rational `a`, `b`; concrete
//! values are the `b = 0` case.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with optional leading sign.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let trimmed = s.trim();
    let bad = |msg: &str| Error::Parse {
        field: "rational".into(),
        message: format!("{msg}: `{trimmed}`"),
    };
    if trimmed.is_empty() {
        return Err(bad("empty rational"));
    }
    let (num_s, den_s) = match trimmed.split_once('/') {
        Some((n, d)) => (n, d),
        None => (trimmed, "1"),
    };
    let num: BigInt = num_s.trim().parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den_s.trim().parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(num, den))
}

/// Canonical `"p/q"` form with positive denominator.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A value `constant + q_coeff * Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineQ {
    pub constant: Rat,
    pub q_coeff: Rat,
}

impl AffineQ {
    pub fn zero() -> Self {
        AffineQ {
            constant: rat_zero(),
            q_coeff: rat_zero(),
        }
    }

    pub fn one() -> Self {
        AffineQ {
            constant: rat_one(),
            q_coeff: rat_zero(),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        AffineQ {
            constant: r,
            q_coeff: rat_zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// The bare indeterminate Q.
    pub fn symbolic_q() -> Self {
        AffineQ {
            constant: rat_zero(),
            q_coeff: rat_one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.q_coeff.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.q_coeff.is_zero()
    }

    /// Returns the constant part, or None when Q actually appears.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.is_constant() {
            Some(&self.constant)
        } else {
            None
        }
    }

    pub fn eval(&self, q: &Rat) -> Rat {
        &self.constant + &self.q_coeff * q
    }

    pub fn add(&self, other: &AffineQ) -> AffineQ {
        AffineQ {
            constant: &self.constant + &other.constant,
            q_coeff: &self.q_coeff + &other.q_coeff,
        }
    }

    pub fn sub(&self, other: &AffineQ) -> AffineQ {
        AffineQ {
            constant: &self.constant - &other.constant,
            q_coeff: &self.q_coeff - &other.q_coeff,
        }
    }

    pub fn neg(&self) -> AffineQ {
        AffineQ {
            constant: -self.constant.clone(),
            q_coeff: -self.q_coeff.clone(),
        }
    }

    /// Accepted forms: `"p/q"`, `"p"`, `"Q"`, `"aff:a/b+c/d*Q"`.
    pub fn parse(s: &str) -> Result<AffineQ> {
        let trimmed = s.trim();
        let bad = |msg: String| Error::Parse {
            field: "potential".into(),
            message: msg,
        };
        if trimmed == "Q" {
            return Ok(AffineQ::symbolic_q());
        }
        if let Some(body) = trimmed.strip_prefix("aff:") {
            let inner = body
                .strip_suffix("*Q")
                .ok_or_else(|| bad(format!("affine value must end in `*Q`: `{trimmed}`")))?;
            let split = inner
                .rfind('+')
                .ok_or_else(|| bad(format!("affine value needs `a+b*Q` shape: `{trimmed}`")))?;
            let a = rat_from_str(&inner[..split])?;
            let b = rat_from_str(&inner[split + 1..])?;
            return Ok(AffineQ {
                constant: a,
                q_coeff: b,
            });
        }
        Ok(AffineQ::from_rat(rat_from_str(trimmed)?))
    }

    /// Canonical string: `"p/q"` when concrete, `"aff:a/b+c/d*Q"` otherwise.
    pub fn to_string_canonical(&self) -> String {
        if self.is_constant() {
            rat_to_string(&self.constant)
        } else {
            format!(
                "aff:{}+{}*Q",
                rat_to_string(&self.constant),
                rat_to_string(&self.q_coeff)
            )
        }
    }
}

/// Nearest integer to a rational; exact halves round up.
pub fn rat_round(r: &Rat) -> BigInt {
    let floor = num_integer::Integer::div_floor(r.numer(), r.denom());
    let frac = r - Rat::from_integer(floor.clone());
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    if frac >= half {
        floor + 1
    } else {
        floor
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rationals() {
        assert_eq!(rat_from_str("3/4").unwrap(), rat(3, 4));
        assert_eq!(rat_from_str("-2").unwrap(), rat_int(-2));
        assert_eq!(rat_from_str("4/6").unwrap(), rat(2, 3));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn affine_roundtrip() {
        for s in ["0/1", "3/2", "aff:1/2+-1/3*Q", "aff:-1/1+1/1*Q"] {
            let v = AffineQ::parse(s).unwrap();
            assert_eq!(v.to_string_canonical(), s);
        }
        assert_eq!(
            AffineQ::parse("Q").unwrap().to_string_canonical(),
            "aff:0/1+1/1*Q"
        );
    }

    #[test]
    fn affine_eval() {
        let v = AffineQ::parse("aff:1/2+2/1*Q").unwrap();
        assert_eq!(v.eval(&rat(1, 4)), rat_int(1));
    }

    #[test]
    fn rounding() {
        assert_eq!(rat_round(&rat(3, 2)), BigInt::from(2));
        assert_eq!(rat_round(&rat(-3, 2)), BigInt::from(-1));
        assert_eq!(rat_round(&rat(1, 3)), BigInt::from(0));
        assert_eq!(rat_round(&rat(-7, 3)), BigInt::from(-2));
        assert_eq!(rat_round(&rat(5, 1)), BigInt::from(5));
    }
}
