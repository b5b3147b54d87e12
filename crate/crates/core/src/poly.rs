//! Exact univariate polynomial arithmetic over the rationals.
//!
//! Coefficients are stored low degree first with no trailing zeros.
//! Characteristic polynomials are computed by Faddeev-LeVerrier, which stays
//! inside exact rational arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::value::{rat_from_str, rat_to_string, rat_zero, Rat};

/// Univariate polynomial over Q, coefficients ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        RatPoly::new(vec![rat_zero(), Rat::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(rat_zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        RatPoly::new(out)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![rat_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics if divisor is zero.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (RatPoly::zero(), self.clone());
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![rat_zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + ddeg] / &dlead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Exact division; returns None when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat_zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Scales to leading coefficient 1; zero polynomial stays zero.
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => {
                let inv = Rat::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Primitive integer form: returns (content, integer coefficients) with
    /// `self = content * prim` and prim having coprime integer coefficients
    /// and positive leading coefficient.
    pub fn to_integer_primitive(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (rat_zero(), vec![]);
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (Rat::new(content, den_lcm), prim)
    }

    pub fn from_integer_coeffs(coeffs: &[BigInt]) -> RatPoly {
        RatPoly::new(coeffs.iter().cloned().map(Rat::from_integer).collect())
    }

    /// Human-readable form for reports, highest degree first.
    pub fn to_display_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mag_s = if mag.is_one() && i > 0 {
                String::new()
            } else if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let sep = if mag_s.is_empty() || var.is_empty() {
                ""
            } else {
                "*"
            };
            let term = format!("{mag_s}{sep}{var}");
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{term}")
                } else {
                    term
                });
            } else {
                parts.push(format!(
                    "{} {term}",
                    if c.is_negative() { "-" } else { "+" }
                ));
            }
        }
        parts.join(" ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self.coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<RatPoly> {
        let arr = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| Error::Parse {
                field: "coeffs".into(),
                message: "expected array of rational strings".into(),
            })?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            let s = c.as_str().ok_or_else(|| Error::Parse {
                field: "coeffs".into(),
                message: "coefficient must be a string".into(),
            })?;
            coeffs.push(rat_from_str(s)?);
        }
        Ok(RatPoly::new(coeffs))
    }
}

/// Monic gcd over Q. Uses the primitive polynomial remainder sequence over Z
/// so coefficient growth stays tame on high-degree inputs.
pub fn poly_gcd(a: &RatPoly, b: &RatPoly) -> Result<RatPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdBothZero);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let (_, mut u) = a.to_integer_primitive();
    let (_, mut v) = b.to_integer_primitive();
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        if v.iter().all(|c| c.is_zero()) || v.is_empty() {
            return Ok(RatPoly::from_integer_coeffs(&u).monic());
        }
        let r = int_pseudo_rem(&u, &v);
        u = v;
        v = int_primitive(&r);
    }
}

/// Pseudo-remainder of integer polynomials: lc(v)^(deg u - deg v + 1) * u mod v.
fn int_pseudo_rem(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = u.to_vec();
    let dv = v.len() - 1;
    let lead = v.last().unwrap().clone();
    while r.len() > dv && !r.is_empty() {
        let rl = r.last().unwrap().clone();
        if rl.is_zero() {
            r.pop();
            continue;
        }
        let shift = r.len() - 1 - dv;
        for c in r.iter_mut() {
            *c *= &lead;
        }
        for (i, vc) in v.iter().enumerate() {
            let idx = shift + i;
            let t = &rl * vc;
            r[idx] -= t;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn int_primitive(p: &[BigInt]) -> Vec<BigInt> {
    if p.is_empty() {
        return vec![];
    }
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return vec![];
    }
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

/// Characteristic polynomial det(xI - m) by Faddeev-LeVerrier. Monic of
/// degree equal to the matrix dimension.
pub fn char_poly(m: &[Vec<Rat>]) -> Result<RatPoly> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n == 0 {
        return Ok(RatPoly::one());
    }
    let mut coeffs = vec![rat_zero(); n + 1];
    coeffs[n] = Rat::one();
    // M_1 = A, c_{n-1} = -tr(A); then M_{k+1} = A (M_k + c_{n-k} I)
    let mut mk = m.to_vec();
    for k in 1..=n {
        let mut tr = rat_zero();
        for i in 0..n {
            tr += &mk[i][i];
        }
        let c = -tr / Rat::from_integer(BigInt::from(k as i64));
        coeffs[n - k] = c.clone();
        if k == n {
            break;
        }
        let mut shifted = mk.clone();
        for i in 0..n {
            shifted[i][i] += &c;
        }
        let mut next = vec![vec![rat_zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = rat_zero();
                for (l, s_row) in shifted.iter().enumerate() {
                    if m[i][l].is_zero() {
                        continue;
                    }
                    acc += &m[i][l] * &s_row[j];
                }
                next[i][j] = acc;
            }
        }
        mk = next;
    }
    Ok(RatPoly::new(coeffs))
}

/// A polynomial `p(x) - Q*q(x)` linear in the indeterminate Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QLinearPoly {
    pub p: RatPoly,
    pub q: RatPoly,
}

impl QLinearPoly {
    pub fn eval_q(&self, q: &Rat) -> RatPoly {
        self.p.sub(&self.q.scale(q))
    }

    pub fn to_bivar(&self) -> BivarPoly {
        BivarPoly::new(vec![self.p.clone(), self.q.neg()])
    }
}

/// Characteristic polynomial of a matrix affine in Q, where Q sits on the
/// diagonal of exactly one marked row with unit coefficient. Returns the
/// pair (p, q) with char(x) = p(x) - Q*q(x); q is the characteristic
/// polynomial of the matrix with the marked row and column deleted.
pub fn char_poly_q_linear(m: &[Vec<crate::value::AffineQ>], marked: usize) -> Result<QLinearPoly> {
    let n = m.len();
    if marked >= n {
        return Err(Error::QMisplaced(format!(
            "marked index {marked} outside matrix of dimension {n}"
        )));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
        for (j, e) in row.iter().enumerate() {
            if i == j && i == marked {
                if !e.q_coeff.is_one() {
                    return Err(Error::QMisplaced(format!(
                        "marked diagonal entry ({i},{i}) must carry Q with coefficient 1"
                    )));
                }
            } else if !e.q_coeff.is_zero() {
                return Err(Error::QMisplaced(format!(
                    "Q appears at ({i},{j}) outside the marked diagonal entry"
                )));
            }
        }
    }
    let at_zero: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|e| e.constant.clone()).collect())
        .collect();
    let p = char_poly(&at_zero)?;
    let minor: Vec<Vec<Rat>> = (0..n)
        .filter(|&i| i != marked)
        .map(|i| {
            (0..n)
                .filter(|&j| j != marked)
                .map(|j| m[i][j].constant.clone())
                .collect()
        })
        .collect();
    let q = char_poly(&minor)?;
    let out = QLinearPoly { p, q };
    // spot-check p - Q*q against direct substitution
    for probe in [
        crate::value::rat(1, 3),
        crate::value::rat(-2, 7),
        crate::value::rat(5, 2),
    ] {
        let subst: Vec<Vec<Rat>> = m
            .iter()
            .map(|row| row.iter().map(|e| e.eval(&probe)).collect())
            .collect();
        let direct = char_poly(&subst)?;
        if direct != out.eval_q(&probe) {
            return Err(Error::QMisplaced(
                "p - Q*q identity failed verification".into(),
            ));
        }
    }
    Ok(out)
}

/// True iff `p - Q*q` is irreducible over Q(Q), decided by gcd(p, q) = 1.
pub fn q_linear_irreducible(f: &QLinearPoly) -> Result<bool> {
    if f.q.is_zero() {
        return Err(Error::QAbsent);
    }
    let g = poly_gcd(&f.p, &f.q)?;
    Ok(g.degree() == Some(0))
}

/// Bivariate polynomial in x and Q; entry k is the coefficient of Q^k as a
/// polynomial in x. Only needed to multiply Q-linear block factors together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivarPoly {
    q_coeffs: Vec<RatPoly>,
}

impl BivarPoly {
    pub fn new(mut q_coeffs: Vec<RatPoly>) -> Self {
        while q_coeffs.last().is_some_and(|p| p.is_zero()) {
            q_coeffs.pop();
        }
        BivarPoly { q_coeffs }
    }

    pub fn from_x_poly(p: RatPoly) -> Self {
        BivarPoly::new(vec![p])
    }

    pub fn q_coeffs(&self) -> &[RatPoly] {
        &self.q_coeffs
    }

    pub fn mul(&self, other: &BivarPoly) -> BivarPoly {
        if self.q_coeffs.is_empty() || other.q_coeffs.is_empty() {
            return BivarPoly { q_coeffs: vec![] };
        }
        let mut out = vec![RatPoly::zero(); self.q_coeffs.len() + other.q_coeffs.len() - 1];
        for (i, a) in self.q_coeffs.iter().enumerate() {
            for (j, b) in other.q_coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BivarPoly::new(out)
    }

    /// Builds a*x^2 + b*x + c where a, b, c are affine in Q, from rows
    /// [constant, q_coeff] per x-power ascending.
    pub fn from_affine_coeffs(coeffs: &[crate::value::AffineQ]) -> Self {
        let constants = RatPoly::new(coeffs.iter().map(|c| c.constant.clone()).collect());
        let qs = RatPoly::new(coeffs.iter().map(|c| c.q_coeff.clone()).collect());
        BivarPoly::new(vec![constants, qs])
    }
}
