//! Exact arithmetic in real quadratic fields Q(sqrt(d)) and small exact
//! linear algebra over them.
//!
//! Eigenvalues living in degree <= 2 factors of the characteristic
//! polynomial are represented as `a + b*sqrt(d)` with d squarefree. That
//! is enough to decide integer relations exactly and to solve
//! (H - lambda*I) y = 0 over the exact field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::poly::RatPoly;
use crate::precision::PReal;
use crate::value::{rat_zero, Rat};

/// Writes n = s^2 * d with d squarefree. Trial division by small primes,
/// then a perfect-square check on the cofactor; square factors supported
/// by two primes above the scan bound would be missed, which is far
/// beyond the discriminants this crate produces.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "need a positive radicand");
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000);
    while &p * &p <= rest && p <= limit {
        if rest.is_multiple_of(&p) {
            let mut count = 0u32;
            while rest.is_multiple_of(&p) {
                rest /= &p;
                count += 1;
            }
            s *= p.pow(count / 2);
            if count % 2 == 1 {
                d *= &p;
            }
        }
        p += 1;
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        s *= root;
    } else {
        d *= rest;
    }
    (s, d)
}

/// Element a + b*sqrt(d) of a real quadratic field; d squarefree and > 1,
/// or d = 1 for plain rationals (with b = 0 by normalization).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    pub a: Rat,
    pub b: Rat,
    pub d: BigInt,
}

impl QuadExt {
    pub fn rational(a: Rat) -> Self {
        QuadExt {
            a,
            b: rat_zero(),
            d: BigInt::one(),
        }
    }

    pub fn new(a: Rat, b: Rat, d: BigInt) -> Self {
        if b.is_zero() {
            QuadExt::rational(a)
        } else {
            QuadExt { a, b, d }
        }
    }

    fn same_field(&self, o: &QuadExt) -> BigInt {
        if self.b.is_zero() {
            o.d.clone()
        } else if o.b.is_zero() {
            self.d.clone()
        } else {
            assert_eq!(self.d, o.d, "mixed quadratic fields");
            self.d.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &QuadExt) -> QuadExt {
        let d = self.same_field(o);
        QuadExt::new(&self.a + &o.a, &self.b + &o.b, d)
    }

    pub fn sub(&self, o: &QuadExt) -> QuadExt {
        let d = self.same_field(o);
        QuadExt::new(&self.a - &o.a, &self.b - &o.b, d)
    }

    pub fn mul(&self, o: &QuadExt) -> QuadExt {
        let d = self.same_field(o);
        let drat = Rat::from_integer(d.clone());
        QuadExt::new(
            &self.a * &o.a + &self.b * &o.b * &drat,
            &self.a * &o.b + &self.b * &o.a,
            d,
        )
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// Multiplicative inverse via the conjugate; the norm a^2 - d*b^2 is
    /// nonzero for nonzero elements because sqrt(d) is irrational.
    pub fn inv(&self) -> QuadExt {
        assert!(!self.is_zero(), "inverse of zero");
        let drat = Rat::from_integer(self.d.clone());
        let norm = &self.a * &self.a - &self.b * &self.b * &drat;
        assert!(!norm.is_zero());
        QuadExt::new(&self.a / &norm, -(&self.b / &norm), self.d.clone())
    }

    pub fn to_preal(&self, bits: u32) -> PReal {
        let a = PReal::from_rat(&self.a, bits);
        if self.b.is_zero() {
            return a;
        }
        let root = PReal::from_bigint(&self.d, bits).sqrt();
        a.add(&PReal::from_rat(&self.b, bits).mul(&root))
    }
}

/// An eigenvalue known exactly through a factor of degree at most 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactEig {
    Rational(Rat),
    Quadratic { a: Rat, b: Rat, d: BigInt },
}

impl ExactEig {
    pub fn as_quad(&self) -> QuadExt {
        match self {
            ExactEig::Rational(r) => QuadExt::rational(r.clone()),
            ExactEig::Quadratic { a, b, d } => QuadExt::new(a.clone(), b.clone(), d.clone()),
        }
    }

    pub fn to_preal(&self, bits: u32) -> PReal {
        self.as_quad().to_preal(bits)
    }

    /// Rational part and the sqrt coefficient grouped by radicand.
    pub fn parts(&self) -> (Rat, Option<(Rat, BigInt)>) {
        match self {
            ExactEig::Rational(r) => (r.clone(), None),
            ExactEig::Quadratic { a, b, d } => (a.clone(), Some((b.clone(), d.clone()))),
        }
    }
}

/// Both roots of a monic factor of degree <= 2, or None for higher degree.
/// Quadratic factors must be irreducible with real roots, which holds for
/// irreducible factors of characteristic polynomials of symmetric
/// matrices.
pub fn roots_of_low_degree_factor(f: &RatPoly) -> Option<Vec<ExactEig>> {
    match f.degree() {
        Some(1) => {
            let root = -(f.coeff(0) / f.coeff(1));
            Some(vec![ExactEig::Rational(root)])
        }
        Some(2) => {
            let lead = f.coeff(2);
            let b = f.coeff(1) / &lead;
            let c = f.coeff(0) / &lead;
            let disc = &b * &b - Rat::from_integer(BigInt::from(4)) * &c;
            assert!(
                disc.is_positive(),
                "irreducible quadratic factor with non-real roots"
            );
            // sqrt(num/den) = sqrt(num*den)/den
            let radicand = disc.numer() * disc.denom();
            let (s, d) = squarefree_decompose(&radicand);
            let half = Rat::new(BigInt::one(), BigInt::from(2));
            let a = -&b * &half;
            let coeff = Rat::new(s, disc.denom() * BigInt::from(2));
            Some(vec![
                ExactEig::Quadratic {
                    a: a.clone(),
                    b: coeff.clone(),
                    d: d.clone(),
                },
                ExactEig::Quadratic { a, b: -coeff, d },
            ])
        }
        _ => None,
    }
}

/// Minimal field-element interface for the shared elimination code.
pub trait FieldElem: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl FieldElem for Rat {
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        Rat::one() / self
    }
    fn zero_like(&self) -> Self {
        rat_zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
}

impl FieldElem for QuadExt {
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        QuadExt::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QuadExt::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QuadExt::mul(self, o)
    }
    fn inv(&self) -> Self {
        QuadExt::inv(self)
    }
    fn zero_like(&self) -> Self {
        QuadExt {
            a: rat_zero(),
            b: rat_zero(),
            d: self.d.clone(),
        }
    }
    fn one_like(&self) -> Self {
        QuadExt {
            a: Rat::one(),
            b: rat_zero(),
            d: self.d.clone(),
        }
    }
}

/// Kernel basis of a square-or-rectangular matrix by Gauss-Jordan
/// elimination. Basis vectors have a 1 in their free coordinate.
pub fn kernel_basis<T: FieldElem>(matrix: &[Vec<T>], cols: usize) -> Vec<Vec<T>> {
    if matrix.is_empty() {
        return vec![];
    }
    let probe = matrix[0][0].clone();
    let zero = probe.zero_like();
    let one = probe.one_like();
    let mut m: Vec<Vec<T>> = matrix.to_vec();
    let rows = m.len();
    let mut pivot_col_of_row: Vec<Option<usize>> = vec![None; rows];
    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0usize;
    for c in 0..cols {
        let mut sel = None;
        for i in r..rows {
            if !m[i][c].is_zero() {
                sel = Some(i);
                break;
            }
        }
        let Some(i) = sel else { continue };
        m.swap(r, i);
        let inv = m[r][c].inv();
        for j in 0..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let t = m[r][j].mul(&factor);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivot_col_of_row[r] = Some(c);
        pivot_row_of_col[c] = Some(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_row_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (row, pc) in pivot_col_of_row.iter().enumerate() {
            if let Some(pc) = pc {
                // pivot var = -sum(free vars * coeff)
                let coeff = m[row][free].clone();
                if !coeff.is_zero() {
                    v[*pc] = zero.sub(&coeff);
                }
            }
        }
        basis.push(v);
    }
    basis
}

/// True iff every vector in the kernel of (h - eig*I) vanishes at all the
/// given coordinates.
pub fn eigenspace_vanishes_at(h: &[Vec<Rat>], eig: &ExactEig, coords: &[usize]) -> bool {
    let n = h.len();
    match eig {
        ExactEig::Rational(r) => {
            let mut m: Vec<Vec<Rat>> = h.to_vec();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] -= r;
            }
            let basis = kernel_basis(&m, n);
            basis.iter().all(|v| coords.iter().all(|&c| v[c].is_zero()))
        }
        ExactEig::Quadratic { .. } => {
            let lam = eig.as_quad();
            let mut m: Vec<Vec<QuadExt>> = h
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| QuadExt {
                            a: e.clone(),
                            b: rat_zero(),
                            d: lam.d.clone(),
                        })
                        .collect()
                })
                .collect();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = row[i].sub(&lam);
            }
            let basis = kernel_basis(&m, n);
            basis.iter().all(|v| coords.iter().all(|&c| v[c].is_zero()))
        }
    }
}

/// Dimension of the subspace of the lambda-eigenspace vanishing at all
/// given coordinates: the kernel of (h - eig*I) stacked with the unit rows
/// for those coordinates.
pub fn vanishing_dimension(h: &[Vec<Rat>], eig: &ExactEig, coords: &[usize]) -> usize {
    let n = h.len();
    match eig {
        ExactEig::Rational(r) => {
            let mut m: Vec<Vec<Rat>> = h.to_vec();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] -= r;
            }
            for &c in coords {
                let mut row = vec![rat_zero(); n];
                row[c] = Rat::one();
                m.push(row);
            }
            kernel_basis(&m, n).len()
        }
        ExactEig::Quadratic { .. } => {
            let lam = eig.as_quad();
            let mut m: Vec<Vec<QuadExt>> = h
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| QuadExt {
                            a: e.clone(),
                            b: rat_zero(),
                            d: lam.d.clone(),
                        })
                        .collect()
                })
                .collect();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = row[i].sub(&lam);
            }
            for &c in coords {
                let mut row = vec![
                    QuadExt {
                        a: rat_zero(),
                        b: rat_zero(),
                        d: lam.d.clone()
                    };
                    n
                ];
                row[c] = QuadExt {
                    a: Rat::one(),
                    b: rat_zero(),
                    d: lam.d.clone(),
                };
                m.push(row);
            }
            kernel_basis(&m, n).len()
        }
    }
}

/// Exact eigenvectors for a rational eigenvalue, as a kernel basis.
pub fn rational_eigenspace(h: &[Vec<Rat>], lambda: &Rat) -> Vec<Vec<Rat>> {
    let n = h.len();
    let mut m = h.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    kernel_basis(&m, n)
}
