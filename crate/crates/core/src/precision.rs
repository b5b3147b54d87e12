//! Software fixed-point reals on top of `BigInt`.
//!
//! A `PReal` stores `mantissa * 2^-bits` with a per-value binary shift.
//! All values taking part in one computation share the same shift, so
//! addition is exact and rounding happens only in mul/div/sqrt. Magnitudes
//! in this crate stay small (matrix entries, eigenvalues, phases), which is
//! exactly the regime where fixed point beats a full float tower: absolute
//! error is one ulp per operation, deterministically.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::value::Rat;

/// Binary precision used for a requested decimal digit count, with guard
/// bits for rounding accumulation.
pub fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) = 3.3219...
    (digits * 3322).div_ceil(1000) + 64
}

#[derive(Clone, PartialEq, Eq)]
pub struct PReal {
    m: BigInt,
    bits: u32,
}

fn round_shift(p: &BigInt, s: u32) -> BigInt {
    if s == 0 {
        return p.clone();
    }
    let half = BigInt::one() << (s - 1);
    (p + half) >> s
}

fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    if (&r * BigInt::from(2)).magnitude() >= d.magnitude() {
        if n.sign() == d.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

impl PReal {
    pub fn zero(bits: u32) -> Self {
        PReal {
            m: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        PReal {
            m: BigInt::one() << bits,
            bits,
        }
    }

    pub fn from_int(v: i64, bits: u32) -> Self {
        PReal {
            m: BigInt::from(v) << bits,
            bits,
        }
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Self {
        PReal { m: v << bits, bits }
    }

    pub fn from_rat(r: &Rat, bits: u32) -> Self {
        PReal {
            m: div_round(&(r.numer() << bits), r.denom()),
            bits,
        }
    }

    /// Exact: every f64 is dyadic.
    pub fn from_f64(x: f64, bits: u32) -> Self {
        assert!(x.is_finite(), "cannot lift non-finite f64");
        if x == 0.0 {
            return PReal::zero(bits);
        }
        let (mant, exp) = {
            let b = x.to_bits();
            let sign = if b >> 63 == 1 { -1i64 } else { 1 };
            let biased = ((b >> 52) & 0x7ff) as i64;
            let frac = b & ((1u64 << 52) - 1);
            if biased == 0 {
                (sign * frac as i64, -1074i64)
            } else {
                (sign * (frac | (1u64 << 52)) as i64, biased - 1075)
            }
        };
        let shift = exp + bits as i64;
        let m = if shift >= 0 {
            BigInt::from(mant) << (shift as u32)
        } else {
            round_shift(&BigInt::from(mant), (-shift) as u32)
        };
        PReal { m, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn add(&self, other: &PReal) -> PReal {
        debug_assert_eq!(self.bits, other.bits);
        PReal {
            m: &self.m + &other.m,
            bits: self.bits,
        }
    }

    pub fn sub(&self, other: &PReal) -> PReal {
        debug_assert_eq!(self.bits, other.bits);
        PReal {
            m: &self.m - &other.m,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> PReal {
        PReal {
            m: -self.m.clone(),
            bits: self.bits,
        }
    }

    pub fn abs(&self) -> PReal {
        PReal {
            m: self.m.abs(),
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &PReal) -> PReal {
        debug_assert_eq!(self.bits, other.bits);
        PReal {
            m: round_shift(&(&self.m * &other.m), self.bits),
            bits: self.bits,
        }
    }

    /// Multiply by an exact integer, no rounding.
    pub fn mul_bigint(&self, k: &BigInt) -> PReal {
        PReal {
            m: &self.m * k,
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, k: i64) -> PReal {
        PReal {
            m: &self.m * BigInt::from(k),
            bits: self.bits,
        }
    }

    pub fn div(&self, other: &PReal) -> PReal {
        debug_assert_eq!(self.bits, other.bits);
        assert!(!other.m.is_zero(), "fixed-point division by zero");
        PReal {
            m: div_round(&(&self.m << self.bits), &other.m),
            bits: self.bits,
        }
    }

    pub fn div_int(&self, k: u64) -> PReal {
        PReal {
            m: div_round(&self.m, &BigInt::from(k)),
            bits: self.bits,
        }
    }

    /// Floor square root in value space; panics on negative input.
    pub fn sqrt(&self) -> PReal {
        assert!(!self.m.is_negative(), "sqrt of negative fixed-point value");
        PReal {
            m: (&self.m << self.bits).sqrt(),
            bits: self.bits,
        }
    }

    pub fn to_f64(&self) -> f64 {
        // mantissas here stay far below 2^1024 for the magnitudes this
        // crate produces (values < ~2^200, bits <= ~1400)
        let mf = self.m.to_f64().unwrap_or(f64::INFINITY);
        mf * 2f64.powi(-(self.bits as i32))
    }

    pub fn floor_bigint(&self) -> BigInt {
        self.m.div_floor(&(BigInt::one() << self.bits))
    }

    pub fn round_bigint(&self) -> BigInt {
        round_shift(&self.m, self.bits)
    }

    /// 10^k as a fixed-point value; k may be negative.
    pub fn pow10(k: i32, bits: u32) -> PReal {
        let ten = BigInt::from(10);
        if k >= 0 {
            PReal::from_bigint(&ten.pow(k as u32), bits)
        } else {
            let denom = ten.pow((-k) as u32);
            PReal {
                m: div_round(&(BigInt::one() << bits), &denom),
                bits,
            }
        }
    }

    pub fn pi(bits: u32) -> PReal {
        static CACHE: OnceLock<Mutex<HashMap<u32, BigInt>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        {
            let guard = cache.lock().unwrap();
            if let Some(m) = guard.get(&bits) {
                return PReal { m: m.clone(), bits };
            }
        }
        // Machin: pi = 16*atan(1/5) - 4*atan(1/239)
        let work = bits + 32;
        let a5 = atan_inv_scaled(5, work);
        let a239 = atan_inv_scaled(239, work);
        let pi_work = a5 * 16 - a239 * 4;
        let m = round_shift(&pi_work, 32);
        cache.lock().unwrap().insert(bits, m.clone());
        PReal { m, bits }
    }

    /// Remainder of self mod 2*pi, centered into [-pi, pi].
    pub fn mod_two_pi(&self) -> PReal {
        let two_pi = PReal::pi(self.bits).mul_int(2);
        let q = self.div(&two_pi).round_bigint();
        self.sub(&two_pi.mul_bigint(&q))
    }

    /// Simultaneous cosine and sine by Taylor series after range reduction.
    pub fn cos_sin(&self) -> (PReal, PReal) {
        let r = self.mod_two_pi();
        let r2 = r.mul(&r);
        let mut cos_acc = PReal::one(self.bits);
        let mut sin_acc = r.clone();
        let mut term_c = PReal::one(self.bits);
        let mut term_s = r.clone();
        let mut k: u64 = 1;
        loop {
            term_c = term_c.mul(&r2).div_int((2 * k - 1) * (2 * k));
            term_s = term_s.mul(&r2).div_int((2 * k) * (2 * k + 1));
            if term_c.is_zero() && term_s.is_zero() {
                break;
            }
            if k % 2 == 1 {
                cos_acc = cos_acc.sub(&term_c);
                sin_acc = sin_acc.sub(&term_s);
            } else {
                cos_acc = cos_acc.add(&term_c);
                sin_acc = sin_acc.add(&term_s);
            }
            k += 1;
        }
        (cos_acc, sin_acc)
    }

    pub fn cos(&self) -> PReal {
        self.cos_sin().0
    }

    pub fn sin(&self) -> PReal {
        self.cos_sin().1
    }

    /// Decimal string with the requested number of fractional digits.
    pub fn to_decimal_string(&self, frac_digits: u32) -> String {
        let scale = BigInt::from(10).pow(frac_digits);
        let scaled = round_shift(&(&self.m * &scale), self.bits);
        let neg = scaled.is_negative();
        let digits = scaled.magnitude().to_string();
        let digits = if digits.len() <= frac_digits as usize {
            format!(
                "{}{}",
                "0".repeat(frac_digits as usize + 1 - digits.len()),
                digits
            )
        } else {
            digits
        };
        let split = digits.len() - frac_digits as usize;
        let (int_part, frac_part) = digits.split_at(split);
        format!("{}{int_part}.{frac_part}", if neg { "-" } else { "" })
    }
}

/// atan(1/x) scaled by 2^bits, by the alternating series.
fn atan_inv_scaled(x: u64, bits: u32) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = power.clone();
    let mut k: u64 = 1;
    loop {
        power = &power / &x2;
        if power.is_zero() {
            break;
        }
        let contrib = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= contrib;
        } else {
            sum += contrib;
        }
        k += 1;
    }
    sum
}

impl PartialOrd for PReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PReal {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.bits, other.bits);
        self.m.cmp(&other.m)
    }
}

impl fmt::Debug for PReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PReal({}, bits={})", self.to_f64(), self.bits)
    }
}

impl fmt::Display for PReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.bits.saturating_sub(64)) * 1000 / 3322;
        write!(f, "{}", self.to_decimal_string(digits.max(17)))
    }
}
