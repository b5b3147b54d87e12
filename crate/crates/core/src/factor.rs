//! Factorization of rational polynomials into monic irreducibles.
//!
//! Pipeline: Yun square-free decomposition, factorization modulo a 30-bit
//! prime with square-free reduction, quadratic Hensel lifting of the
//! modular factors past the Mignotte bound, Zassenhaus subset
//! recombination. Everything is deterministic: the prime scan starts at a
//! fixed point and the equal-degree splitting uses a fixed-seed generator.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, RatPoly};
use crate::value::Rat;

/// Full factorization limit; recombination is exponential in the modular
/// factor count, so high degrees are refused up front.
pub const FACTOR_DEGREE_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub constant: Rat,
    /// Monic irreducible factors with multiplicities, sorted by degree
    /// then coefficients.
    pub factors: Vec<(RatPoly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.constant.clone());
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

pub fn factor_over_rationals(a: &RatPoly) -> Result<Factorization> {
    let deg = match a.degree() {
        None => {
            return Ok(Factorization {
                constant: Rat::zero(),
                factors: vec![],
            })
        }
        Some(d) => d,
    };
    if deg > FACTOR_DEGREE_LIMIT {
        return Err(Error::DegreeLimit {
            degree: deg,
            limit: FACTOR_DEGREE_LIMIT,
        });
    }
    let constant = a.leading().unwrap().clone();
    let monic = a.monic();
    let mut factors: Vec<(RatPoly, usize)> = Vec::new();
    for (part, mult) in squarefree_parts(&monic)? {
        for irred in factor_squarefree(&part)? {
            factors.push((irred, mult));
        }
    }
    factors.sort_by(|(f, _), (g, _)| {
        f.degree()
            .cmp(&g.degree())
            .then_with(|| compare_coeffs(f, g))
    });
    // merge equal factors appearing in several square-free slots
    let mut merged: Vec<(RatPoly, usize)> = Vec::new();
    for (f, m) in factors {
        if let Some(last) = merged.last_mut() {
            if last.0 == f {
                last.1 += m;
                continue;
            }
        }
        merged.push((f, m));
    }
    let out = Factorization {
        constant,
        factors: merged,
    };
    debug_assert_eq!(out.product(), *a, "factor product mismatch");
    Ok(out)
}

fn compare_coeffs(f: &RatPoly, g: &RatPoly) -> std::cmp::Ordering {
    for (a, b) in f.coeffs().iter().zip(g.coeffs()) {
        let ord = a.cmp(b);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

/// Yun's algorithm: monic input f = prod part_i^i with square-free parts.
fn squarefree_parts(f: &RatPoly) -> Result<Vec<(RatPoly, usize)>> {
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let df = f.derivative();
    let g = poly_gcd(f, &df)?;
    if g.degree() == Some(0) {
        out.push((f.clone(), 1));
        return Ok(out);
    }
    let mut c = f.div_exact(&g).expect("gcd divides f");
    let mut d = df
        .div_exact(&g)
        .expect("gcd divides f'")
        .sub(&c.derivative());
    let mut i = 1usize;
    while c.degree() != Some(0) {
        let p = poly_gcd(&c, &d)?;
        if p.degree().unwrap_or(0) > 0 {
            out.push((p.clone(), i));
        }
        c = c.div_exact(&p).expect("p divides c");
        d = d.div_exact(&p).expect("p divides d").sub(&c.derivative());
        i += 1;
    }
    Ok(out)
}

/// Factors a monic square-free rational polynomial into monic irreducibles.
fn factor_squarefree(f: &RatPoly) -> Result<Vec<RatPoly>> {
    let deg = f.degree().unwrap();
    if deg <= 1 {
        return Ok(vec![f.clone()]);
    }
    // substitute x -> x/lambda to clear denominators while staying monic
    let mut lambda = BigInt::one();
    for c in f.coeffs() {
        lambda = lambda.lcm(c.denom());
    }
    let mut int_coeffs: Vec<BigInt> = Vec::with_capacity(deg + 1);
    let mut scale = BigInt::one();
    for i in (0..=deg).rev() {
        let c = f.coeff(i);
        let v = &c * Rat::from_integer(scale.clone());
        debug_assert!(v.is_integer());
        int_coeffs.push(v.to_integer());
        scale *= &lambda;
    }
    int_coeffs.reverse();
    let int_factors = factor_monic_int(&int_coeffs)?;
    // map back: h(x) = g(lambda * x) / lambda^deg(g)
    let mut out = Vec::with_capacity(int_factors.len());
    for g in int_factors {
        let gdeg = g.len() - 1;
        let mut coeffs = Vec::with_capacity(g.len());
        for (j, c) in g.iter().enumerate() {
            // coefficient of x^j: c * lambda^j / lambda^gdeg
            let num = c * lambda.pow(j as u32);
            coeffs.push(Rat::new(num, lambda.pow(gdeg as u32)));
        }
        out.push(RatPoly::new(coeffs));
    }
    Ok(out)
}

/// Factors a monic square-free integer polynomial (degree >= 2).
fn factor_monic_int(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let deg = f.len() - 1;
    let p = choose_prime(f);
    let f_mod: Vec<u64> = f.iter().map(|c| to_mod_u64(c, p)).collect();
    let modular = factor_mod_p(&f_mod, p);
    if modular.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }
    // Mignotte-style bound on factor coefficients: 2^deg * |f|_2
    let norm2_sq: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << deg) * (norm2_sq.sqrt() + 1);
    let target = &bound * 2 + 1;
    let mut modulus = BigInt::from(p);
    let mut lifts: u32 = 0;
    while modulus < target {
        modulus = &modulus * &modulus;
        lifts += 1;
    }
    let modular_big: Vec<Vec<BigInt>> = modular
        .iter()
        .map(|g| g.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let lifted = hensel_lift_tree(f, &modular_big, &BigInt::from(p), lifts);
    debug_assert_eq!(
        mpoly_mul_many(&lifted, &modulus),
        mpoly_reduce(f, &modulus),
        "lifted product mismatch"
    );
    Ok(recombine(f, lifted, &modulus))
}

/// Zassenhaus: find the true factors as subset products of the lifted
/// modular factors, coefficients mapped to the symmetric range.
fn recombine(f: &[BigInt], mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= lifted.len() {
        let indices: Vec<usize> = (0..lifted.len()).collect();
        for combo in Combinations::new(indices.len(), size) {
            let subset: Vec<usize> = combo.iter().map(|&i| indices[i]).collect();
            let mut cand = vec![BigInt::one()];
            for &i in &subset {
                cand = mpoly_mul(&cand, &lifted[i], modulus);
            }
            let cand = to_symmetric(&cand, modulus);
            if let Some(q) = int_poly_div_exact(&remaining, &cand) {
                out.push(cand);
                remaining = q;
                let mut keep = Vec::new();
                for (i, g) in lifted.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(g);
                    }
                }
                lifted = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if remaining.len() > 1 {
        out.push(remaining);
    }
    out
}

struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let state = if k <= n { Some((0..k).collect()) } else { None };
        Combinations { n, k, state }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        // advance
        let mut next = current.clone();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - (self.k - i) {
                next[i] += 1;
                for j in (i + 1)..self.k {
                    next[j] = next[j - 1] + 1;
                }
                self.state = Some(next);
                break;
            }
        }
        Some(current)
    }
}

// ---- integer polynomial helpers (ascending coefficients) ----

fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.len() > a.len() {
        return None;
    }
    debug_assert!(b.last().unwrap().is_one(), "divisor must be monic");
    let mut rem = a.to_vec();
    let qlen = a.len() - b.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + b.len() - 1].clone();
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                rem[k + i] -= &c * bc;
            }
        }
        quot[k] = c;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

fn to_symmetric(p: &[BigInt], modulus: &BigInt) -> Vec<BigInt> {
    let half = modulus / 2;
    p.iter()
        .map(|c| {
            let c = c.mod_floor(modulus);
            if c > half {
                c - modulus
            } else {
                c
            }
        })
        .collect()
}

// ---- modular polynomial arithmetic with BigInt coefficients ----

fn mpoly_reduce(p: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = p.iter().map(|c| c.mod_floor(m)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn mpoly_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero);
        out.push(x.mod_floor(m));
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn mpoly_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero);
        out.push(x.mod_floor(m));
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn mpoly_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    mpoly_reduce(&out, m)
}

fn mpoly_mul_many(ps: &[Vec<BigInt>], m: &BigInt) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for p in ps {
        acc = mpoly_mul(&acc, p, m);
    }
    acc
}

/// Division by a monic divisor, reducing mod m.
fn mpoly_divmod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(b.last().is_some_and(|c| c.is_one()));
    let mut rem: Vec<BigInt> = a.to_vec();
    if b.len() > rem.len() {
        return (vec![], mpoly_reduce(&rem, m));
    }
    let qlen = rem.len() - b.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + b.len() - 1].mod_floor(m);
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let t = &rem[k + i] - &c * bc;
                rem[k + i] = t.mod_floor(m);
            }
        }
        quot[k] = c;
    }
    rem.truncate(b.len() - 1);
    (mpoly_reduce(&quot, m), mpoly_reduce(&rem, m))
}

fn mod_inv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "non-invertible element");
    e.x.mod_floor(m)
}

/// Extended Euclid in GF(p)[x]: returns (s, t) with s*a + t*b = 1,
/// deg s < deg b, deg t < deg a. Inputs must be coprime mod p.
fn mpoly_ext_gcd(a: &[BigInt], b: &[BigInt], p: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let make_monic = |f: &[BigInt]| -> (Vec<BigInt>, BigInt) {
        let lc = f.last().unwrap().clone();
        let inv = mod_inv(&lc, p);
        let g: Vec<BigInt> = f.iter().map(|c| (c * &inv).mod_floor(p)).collect();
        (g, inv)
    };
    let mut r0 = mpoly_reduce(a, p);
    let mut r1 = mpoly_reduce(b, p);
    let mut s0 = vec![BigInt::one()];
    let mut s1: Vec<BigInt> = vec![];
    let mut t0: Vec<BigInt> = vec![];
    let mut t1 = vec![BigInt::one()];
    while !r1.is_empty() {
        let (r1m, inv) = make_monic(&r1);
        let s1m: Vec<BigInt> = s1.iter().map(|c| (c * &inv).mod_floor(p)).collect();
        let t1m: Vec<BigInt> = t1.iter().map(|c| (c * &inv).mod_floor(p)).collect();
        let (q, r) = mpoly_divmod(&r0, &r1m, p);
        let s_new = mpoly_sub(&s0, &mpoly_mul(&q, &s1m, p), p);
        let t_new = mpoly_sub(&t0, &mpoly_mul(&q, &t1m, p), p);
        r0 = r1m;
        s0 = s1m;
        t0 = t1m;
        r1 = r;
        s1 = s_new;
        t1 = t_new;
    }
    // r0 is the monic gcd; must be 1
    debug_assert_eq!(r0, vec![BigInt::one()], "factors not coprime mod p");
    (s0, t0)
}

/// One quadratic Hensel step: from f = g*h and s*g + t*h = 1 (mod m) to the
/// same statements mod m^2, with h monic throughout.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = mpoly_sub(&mpoly_reduce(f, &m2), &mpoly_mul(g, h, &m2), &m2);
    let (q, r) = mpoly_divmod(&mpoly_mul(s, &e, &m2), h, &m2);
    let g1 = mpoly_add(
        &mpoly_add(g, &mpoly_mul(t, &e, &m2), &m2),
        &mpoly_mul(&q, g, &m2),
        &m2,
    );
    let h1 = mpoly_add(h, &r, &m2);
    let one = vec![BigInt::one()];
    let b = mpoly_sub(
        &mpoly_add(&mpoly_mul(s, &g1, &m2), &mpoly_mul(t, &h1, &m2), &m2),
        &one,
        &m2,
    );
    let (c, d) = mpoly_divmod(&mpoly_mul(s, &b, &m2), &h1, &m2);
    let s1 = mpoly_sub(s, &d, &m2);
    let t1 = mpoly_sub(
        &mpoly_sub(t, &mpoly_mul(t, &b, &m2), &m2),
        &mpoly_mul(&c, &g1, &m2),
        &m2,
    );
    (g1, h1, s1, t1)
}

/// Lifts the factorization f = prod factors (mod p) to mod p^(2^lifts),
/// recursing on a balanced split. All polynomials monic.
fn hensel_lift_tree(
    f: &[BigInt],
    factors: &[Vec<BigInt>],
    p: &BigInt,
    lifts: u32,
) -> Vec<Vec<BigInt>> {
    let final_modulus = {
        let mut m = p.clone();
        for _ in 0..lifts {
            m = &m * &m;
        }
        m
    };
    fn rec(
        f: &[BigInt],
        factors: &[Vec<BigInt>],
        p: &BigInt,
        lifts: u32,
        final_modulus: &BigInt,
    ) -> Vec<Vec<BigInt>> {
        if factors.len() == 1 {
            return vec![mpoly_reduce(f, final_modulus)];
        }
        let mid = factors.len() / 2;
        let (lf, rf) = factors.split_at(mid);
        let mut g = mpoly_mul_many(lf, p);
        let mut h = mpoly_mul_many(rf, p);
        let (mut s, mut t) = mpoly_ext_gcd(&g, &h, p);
        let mut m = p.clone();
        for _ in 0..lifts {
            let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
            g = g1;
            h = h1;
            s = s1;
            t = t1;
            m = &m * &m;
        }
        let mut out = rec(&g, lf, p, lifts, final_modulus);
        out.extend(rec(&h, rf, p, lifts, final_modulus));
        out
    }
    rec(f, factors, p, lifts, &final_modulus)
}

// ---- factorization over GF(p) with u64 arithmetic ----

fn to_mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn choose_prime(f: &[BigInt]) -> u64 {
    let mut candidate: u64 = (1 << 30) + 1;
    loop {
        if is_prime_u64(candidate) {
            let fp: Vec<u64> = f.iter().map(|c| to_mod_u64(c, candidate)).collect();
            let fp = ppoly_trim(fp);
            if fp.len() == f.len() {
                let dfp = ppoly_derivative(&fp, candidate);
                let g = ppoly_gcd(&fp, &dfp, candidate);
                if g.len() == 1 {
                    return candidate;
                }
            }
        }
        candidate += 2;
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..(r - 1) {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

type PPoly = Vec<u64>;

fn ppoly_trim(mut p: PPoly) -> PPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn ppoly_derivative(f: &PPoly, p: u64) -> PPoly {
    let mut out = Vec::new();
    for (i, &c) in f.iter().enumerate().skip(1) {
        out.push(mul_mod_u64(c, (i as u64) % p, p));
    }
    ppoly_trim(out)
}

fn ppoly_mul(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod_u64(x, y, p)) % p;
        }
    }
    ppoly_trim(out)
}

fn ppoly_monic(f: &PPoly, p: u64) -> PPoly {
    match f.last() {
        None => vec![],
        Some(&lc) => {
            let inv = pow_mod_u64(lc, p - 2, p);
            f.iter().map(|&c| mul_mod_u64(c, inv, p)).collect()
        }
    }
}

fn ppoly_rem(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    debug_assert!(!b.is_empty());
    let b = ppoly_monic(b, p);
    let mut rem = a.clone();
    while rem.len() >= b.len() && !rem.is_empty() {
        let c = *rem.last().unwrap();
        if c == 0 {
            rem.pop();
            continue;
        }
        let shift = rem.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            let sub = mul_mod_u64(c, bc, p);
            let idx = shift + i;
            rem[idx] = (rem[idx] + p - sub) % p;
        }
        rem = ppoly_trim(rem);
    }
    rem
}

fn ppoly_gcd(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let r = ppoly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    ppoly_monic(&x, p)
}

fn ppoly_sub(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out.push((x + p - y) % p);
    }
    ppoly_trim(out)
}

/// base^exp mod (f, p) with a big exponent.
fn ppoly_powmod(base: &PPoly, exp: &BigUint, f: &PPoly, p: u64) -> PPoly {
    let mut acc = vec![1u64];
    let mut b = ppoly_rem(base, f, p);
    for i in 0..exp.bits() {
        if exp.bit(i) {
            acc = ppoly_rem(&ppoly_mul(&acc, &b, p), f, p);
        }
        b = ppoly_rem(&ppoly_mul(&b, &b, p), f, p);
    }
    acc
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Distinct-degree then equal-degree factorization of a monic square-free
/// polynomial over GF(p). Returns monic factors sorted for determinism.
fn factor_mod_p(f: &PPoly, p: u64) -> Vec<PPoly> {
    let f = ppoly_monic(f, p);
    let mut out = Vec::new();
    let mut v = f.clone();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut d = 0usize;
    while v.len() > 1 && 2 * (d + 1) < v.len() {
        d += 1;
        h = ppoly_powmod(&h, &BigUint::from(p), &v, p);
        let g = ppoly_gcd(&v, &ppoly_sub(&h, &x, p), p);
        if g.len() > 1 {
            equal_degree_split(&g, d, p, &mut out);
            v = ppoly_monic(&ppoly_div_exact(&v, &g, p), p);
            h = ppoly_rem(&h, &v, p);
        }
    }
    if v.len() > 1 {
        out.push(v);
    }
    out.sort();
    out
}

fn ppoly_div_exact(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    // long division, b monic after normalization; remainder must vanish
    let b = ppoly_monic(b, p);
    let mut rem = a.clone();
    let mut quot = vec![0u64; a.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let c = *rem.last().unwrap();
        if c == 0 {
            rem.pop();
            continue;
        }
        let shift = rem.len() - b.len();
        quot[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            let sub = mul_mod_u64(c, bc, p);
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        rem = ppoly_trim(rem);
    }
    debug_assert!(rem.is_empty(), "non-exact modular division");
    ppoly_trim(quot)
}

/// Cantor-Zassenhaus splitting of a product of irreducibles of degree d.
fn equal_degree_split(g: &PPoly, d: usize, p: u64, out: &mut Vec<PPoly>) {
    if g.len() - 1 == d {
        out.push(ppoly_monic(g, p));
        return;
    }
    let mut rng = XorShift(0x243f_6a88_85a3_08d3 ^ (g.len() as u64) << 32 | d as u64);
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let deg = g.len() - 2;
        let mut a: PPoly = (0..=deg).map(|_| rng.next() % p).collect();
        a = ppoly_trim(a);
        if a.len() <= 1 {
            continue;
        }
        let b = ppoly_powmod(&a, &exp, g, p);
        let b1 = ppoly_sub(&b, &vec![1], p);
        let h = ppoly_gcd(g, &b1, p);
        if h.len() > 1 && h.len() < g.len() {
            equal_degree_split(&h, d, p, out);
            let rest = ppoly_monic(&ppoly_div_exact(g, &h, p), p);
            equal_degree_split(&rest, d, p, out);
            return;
        }
    }
}

/// Looks for a prime below the scan limit where f stays irreducible,
/// certifying irreducibility independently of the main factorization.
/// Not every irreducible polynomial has one.
pub fn irreducible_mod_p_witness(f: &RatPoly) -> Option<u64> {
    let deg = f.degree()?;
    if deg == 0 {
        return None;
    }
    let (_, prim) = f.to_integer_primitive();
    let mut count = 0;
    let mut candidate: u64 = 101;
    while count < 200 {
        if is_prime_u64(candidate) {
            count += 1;
            let lc_mod = to_mod_u64(prim.last().unwrap(), candidate);
            if lc_mod != 0 {
                let fp: PPoly = ppoly_trim(prim.iter().map(|c| to_mod_u64(c, candidate)).collect());
                let dfp = ppoly_derivative(&fp, candidate);
                if ppoly_gcd(&fp, &dfp, candidate).len() == 1
                    && is_irreducible_mod_p(&fp, candidate)
                {
                    return Some(candidate);
                }
            }
        }
        candidate += 2;
    }
    None
}

fn is_irreducible_mod_p(f: &PPoly, p: u64) -> bool {
    // no factor of degree <= deg/2: x^(p^d) = x mod f only at full degree
    let f = ppoly_monic(f, p);
    let deg = f.len() - 1;
    let x = vec![0u64, 1];
    let mut h = x.clone();
    for d in 1..=deg / 2 {
        h = ppoly_powmod(&h, &BigUint::from(p), &f, p);
        let g = ppoly_gcd(&f, &ppoly_sub(&h, &x, p), p);
        if g.len() > 1 {
            return false;
        }
        let _ = d;
    }
    true
}
