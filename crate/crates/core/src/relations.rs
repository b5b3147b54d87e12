//! Integer relations among classified eigenvalues.
//!
//! The heuristic route builds the augmented lattice with two scaled
//! constraint columns (value and coefficient-sum, both at scale
//! 10^(digits-10)) and reduces it with exact rational-GSO LLL: short
//! vectors whose constraint columns collapse are relation candidates, each
//! re-verified against the full-precision eigenvalues.
//!
//! The exact route applies when every eigenvalue lives in a factor of
//! degree <= 2: linear independence of sqrt(d) for distinct squarefree d
//! turns the relation condition into a rational linear system whose
//! integer kernel comes out of a unimodular HNF reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::precision::PReal;
use crate::quad::ExactEig;
use crate::value::{rat_round, Rat};

/// One integer relation: sum(ell_i * lambda_i) + sum(m_j * mu_j) = 0 with
/// sum(ell) + sum(m) = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerRelation {
    pub ell: Vec<BigInt>,
    pub m: Vec<BigInt>,
    /// |sum(c*value)| re-evaluated at full input precision; exactly zero
    /// relations store zero.
    pub residual: PReal,
}

impl IntegerRelation {
    pub fn coefficients(&self) -> Vec<BigInt> {
        let mut c = self.ell.clone();
        c.extend(self.m.iter().cloned());
        c
    }

    pub fn m_sum(&self) -> BigInt {
        self.m.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.ell.iter().all(|c| c.is_zero()) && self.m.iter().all(|c| c.is_zero())
    }

    pub fn to_json(&self, digits: u32) -> serde_json::Value {
        serde_json::json!({
            "ell": self.ell.iter().map(big_to_json).collect::<Vec<_>>(),
            "m": self.m.iter().map(big_to_json).collect::<Vec<_>>(),
            "residual": self.residual.to_decimal_string(digits),
        })
    }
}

fn big_to_json(b: &BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match b.to_i64() {
        Some(v) => serde_json::json!(v),
        None => serde_json::json!(b.to_string()),
    }
}

/// Finds a basis of small integer relations among the given eigenvalues.
/// `lambdas` and `mus` must exclude vanishing eigenpairs.
pub fn find_integer_relations(
    lambdas: &[PReal],
    mus: &[PReal],
    height_bound: u64,
    precision_digits: u32,
) -> Result<Vec<IntegerRelation>> {
    let dim = lambdas.len() + mus.len();
    if dim == 0 {
        return Ok(vec![]);
    }
    // precision guard: the lattice must separate true relations from noise
    let guard =
        BigInt::from(height_bound).pow(2) * BigInt::from(dim as u64) * BigInt::from(10u64).pow(20);
    if guard >= BigInt::from(10u64).pow(precision_digits) {
        return Err(Error::PrecisionTooLow {
            digits: precision_digits,
            height_bound,
            dim,
        });
    }
    let values: Vec<&PReal> = lambdas.iter().chain(mus.iter()).collect();
    let bits = values[0].bits();
    let scale = BigInt::from(10u64).pow(precision_digits - 10);
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    for (i, v) in values.iter().enumerate() {
        let mut row = vec![BigInt::zero(); dim + 2];
        row[i] = BigInt::one();
        row[dim] = v.mul_bigint(&scale).round_bigint();
        row[dim + 1] = scale.clone();
        basis.push(row);
    }
    lll_reduce(&mut basis);

    let hb = BigInt::from(height_bound);
    let value_slack = BigInt::from((dim as u64) * height_bound.max(1));
    let accept = PReal::pow10(-(precision_digits as i32 - 10), bits);
    let mut out = Vec::new();
    for row in &basis {
        let coeffs = &row[..dim];
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        if !row[dim + 1].is_zero() {
            continue; // sum constraint not met
        }
        if row[dim].magnitude() > value_slack.magnitude() {
            continue;
        }
        if coeffs.iter().any(|c| c.magnitude() > hb.magnitude()) {
            continue;
        }
        // re-verify against the full-precision inputs
        let mut acc = PReal::zero(bits);
        for (c, v) in coeffs.iter().zip(&values) {
            if !c.is_zero() {
                acc = acc.add(&v.mul_bigint(c));
            }
        }
        let residual = acc.abs();
        if residual > accept {
            continue;
        }
        let mut coeffs = coeffs.to_vec();
        sign_normalize(&mut coeffs);
        out.push(IntegerRelation {
            ell: coeffs[..lambdas.len()].to_vec(),
            m: coeffs[lambdas.len()..].to_vec(),
            residual,
        });
    }
    out.sort_by_key(|a| a.coefficients());
    out.dedup_by(|a, b| a.coefficients() == b.coefficients());
    Ok(out)
}

fn sign_normalize(v: &mut [BigInt]) {
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in v.iter_mut() {
                *c = -c.clone();
            }
        }
    }
}

/// Parity test: pretty good state transfer needs an even m-sum on every
/// lattice member, which the basis decides since parity is linear.
pub fn parity_verdict(basis: &[IntegerRelation]) -> (bool, Option<IntegerRelation>) {
    for rel in basis {
        if rel.m_sum().is_odd() {
            return (false, Some(rel.clone()));
        }
    }
    (true, None)
}

/// Exact relation lattice over eigenvalues known in quadratic fields.
/// Returns an LLL-reduced basis of {c : sum(c*value) = 0 and sum(c) = 0}.
pub fn exact_relation_lattice(values: &[ExactEig]) -> Vec<Vec<BigInt>> {
    let dim = values.len();
    if dim == 0 {
        return vec![];
    }
    // constraint rows over Q: rational parts, one row per distinct
    // radicand, and the coefficient-sum row
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    rows.push(values.iter().map(|v| v.parts().0).collect());
    let mut radicands: Vec<BigInt> = Vec::new();
    for v in values {
        if let (_, Some((_, d))) = v.parts() {
            if !radicands.contains(&d) {
                radicands.push(d);
            }
        }
    }
    radicands.sort();
    for d in &radicands {
        rows.push(
            values
                .iter()
                .map(|v| match v.parts() {
                    (_, Some((b, vd))) if &vd == d => b,
                    _ => Rat::zero(),
                })
                .collect(),
        );
    }
    rows.push(vec![Rat::one(); dim]);

    // clear denominators row by row
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for c in row {
                lcm = lcm.lcm(c.denom());
            }
            row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        })
        .collect();
    let mut kernel = integer_kernel(&int_rows);
    if !kernel.is_empty() {
        lll_reduce(&mut kernel);
    }
    for v in kernel.iter_mut() {
        sign_normalize(v);
    }
    kernel.sort();
    kernel
}

/// Basis of {x in Z^n : M x = 0} for an integer constraint matrix of n
/// columns, via unimodular row reduction of M^T. The result is saturated:
/// every integer kernel vector is an integer combination of the basis.
pub fn integer_kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if m.is_empty() {
        return vec![];
    }
    let n = m[0].len();
    let r = m.len();
    // a = M^T (n x r), u tracks row operations
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..r).map(|j| m[j][i].clone()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut row = 0usize;
    for col in 0..r {
        if row == n {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below `row`
            let mut pivot: Option<usize> = None;
            for i in row..n {
                if a[i][col].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some(i),
                    Some(p) => {
                        if a[i][col].magnitude() < a[p][col].magnitude() {
                            pivot = Some(i);
                        }
                    }
                }
            }
            let Some(p) = pivot else { break };
            a.swap(row, p);
            u.swap(row, p);
            let mut done = true;
            for i in (row + 1)..n {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = rat_round(&Rat::new(a[i][col].clone(), a[row][col].clone()));
                if !q.is_zero() {
                    for k in 0..r {
                        let t = &q * &a[row][k];
                        a[i][k] -= t;
                    }
                    for k in 0..n {
                        let t = &q * &u[row][k];
                        u[i][k] -= t;
                    }
                }
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                row += 1;
                break;
            }
        }
    }
    // rows of u where the reduced a-row is zero span the kernel
    let mut kernel = Vec::new();
    for i in 0..n {
        if a[i].iter().all(|c| c.is_zero()) {
            kernel.push(u[i].clone());
        }
    }
    kernel
}

/// Is v an integer combination of the basis rows?
pub fn in_lattice(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let k = basis.len();
    let n = basis[0].len();
    // solve x * basis = v over Q by eliminating on basis^T | v
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rat> = (0..k)
                .map(|i| Rat::from_integer(basis[i][j].clone()))
                .collect();
            row.push(Rat::from_integer(v[j].clone()));
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0usize;
    for c in 0..k {
        let Some(sel) = (r..n).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, sel);
        let inv = Rat::one() / &aug[r][c];
        for x in aug[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..=k {
                    let t = &aug[r][j] * &f;
                    aug[i][j] -= t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == n {
            break;
        }
    }
    // consistency: rows without pivot must have zero rhs
    for i in r..n {
        if !aug[i][k].is_zero() {
            return false;
        }
    }
    // integrality of the solution
    pivots.iter().all(|&(row, _)| aug[row][k].is_integer())
}

/// Mutual membership of two integer lattices given by bases.
pub fn same_lattice(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    a.iter().all(|v| in_lattice(b, v)) && b.iter().all(|v| in_lattice(a, v))
}

/// Exact LLL with delta = 99/100 on integer row bases; Gram-Schmidt data
/// kept as rationals and updated incrementally on swaps.
pub fn lll_reduce(basis: &mut Vec<Vec<BigInt>>) {
    let n = basis.len();
    if n <= 1 {
        return;
    }
    let delta = Rat::new(BigInt::from(99), BigInt::from(100));
    let (mut mu, mut b_norm) = gso(basis);
    let half = Rat::new(BigInt::one(), BigInt::from(2));

    let reduce_pair =
        |basis: &mut Vec<Vec<BigInt>>, mu: &mut Vec<Vec<Rat>>, k: usize, l: usize, half: &Rat| {
            if mu[k][l].abs() > *half {
                let q = rat_round(&mu[k][l]);
                for j in 0..basis[k].len() {
                    let t = &q * &basis[l][j];
                    basis[k][j] -= t;
                }
                for j in 0..l {
                    let t = &mu[l][j] * Rat::from_integer(q.clone());
                    mu[k][j] -= t;
                }
                mu[k][l] -= Rat::from_integer(q);
            }
        };

    let mut k = 1usize;
    while k < n {
        reduce_pair(basis, &mut mu, k, k - 1, &half);
        let lovasz_rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b_norm[k - 1];
        if b_norm[k] < lovasz_rhs {
            // swap rows k-1 and k, updating GSO data in place
            let mu_k = mu[k][k - 1].clone();
            let big_b = &b_norm[k] + &mu_k * &mu_k * &b_norm[k - 1];
            mu[k][k - 1] = &mu_k * &b_norm[k - 1] / &big_b;
            b_norm[k] = &b_norm[k - 1] * &b_norm[k] / &big_b;
            b_norm[k - 1] = big_b;
            basis.swap(k - 1, k);
            for j in 0..(k - 1) {
                let t = mu[k][j].clone();
                mu[k][j] = mu[k - 1][j].clone();
                mu[k - 1][j] = t;
            }
            for i in (k + 1)..n {
                let t = mu[i][k].clone();
                mu[i][k] = &mu[i][k - 1] - &mu_k * &t;
                mu[i][k - 1] = &t + &mu[k][k - 1] * &mu[i][k];
            }
            k = k.max(2) - 1;
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                reduce_pair(basis, &mut mu, k, l, &half);
            }
            k += 1;
        }
    }
}

/// Gram-Schmidt over Q: mu coefficients and squared norms of the
/// orthogonalized vectors.
fn gso(basis: &[Vec<BigInt>]) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let n = basis.len();
    let dim = basis[0].len();
    let mut mu = vec![vec![Rat::zero(); n]; n];
    let mut b_norm = vec![Rat::zero(); n];
    let mut star: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v: Vec<Rat> = basis[i]
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        for j in 0..i {
            let mut dot = Rat::zero();
            for d in 0..dim {
                dot += Rat::from_integer(basis[i][d].clone()) * &star[j][d];
            }
            mu[i][j] = dot / &b_norm[j];
            for d in 0..dim {
                let t = &mu[i][j] * &star[j][d];
                v[d] -= t;
            }
        }
        let mut norm = Rat::zero();
        for c in &v {
            norm += c * c;
        }
        assert!(!norm.is_zero(), "LLL input rows must be independent");
        b_norm[i] = norm;
        star.push(v);
    }
    (mu, b_norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::bits_for_digits;
    use crate::value::rat;

    fn preal_sqrt(v: i64, bits: u32) -> PReal {
        PReal::from_int(v, bits).sqrt()
    }

    #[test]
    fn lll_finds_short_vector() {
        // planted relation: 1*x + 2*y - 1*z = 0 for x=1, y=2, z=5
        let mut basis = vec![
            vec![
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(0),
                BigInt::from(100000),
            ],
            vec![
                BigInt::from(0),
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(200000),
            ],
            vec![
                BigInt::from(0),
                BigInt::from(0),
                BigInt::from(1),
                BigInt::from(500000),
            ],
        ];
        lll_reduce(&mut basis);
        assert!(basis.iter().any(|row| {
            row[3].is_zero() && !(row[0].is_zero() && row[1].is_zero() && row[2].is_zero())
        }));
    }

    #[test]
    fn lll_gso_stays_consistent() {
        // random-ish integer bases: reduced basis spans the same lattice
        let mut state: u64 = 0xdeadbeef;
        let mut rand = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 41) as i64 - 20
        };
        for _ in 0..20 {
            let n = 4;
            let mut basis: Vec<Vec<BigInt>> = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(rand())).collect())
                .collect();
            // ensure independence by adding a scaled identity
            for (i, row) in basis.iter_mut().enumerate() {
                row[i] += BigInt::from(1000);
            }
            let orig = basis.clone();
            lll_reduce(&mut basis);
            assert!(same_lattice(&orig, &basis));
            // size-reduction property of the result
            let (mu, _) = gso(&basis);
            for i in 0..n {
                for j in 0..i {
                    assert!(mu[i][j].abs() <= rat(1, 2), "mu[{i}][{j}] too large");
                }
            }
        }
    }

    #[test]
    fn k2_has_no_relation() {
        let bits = bits_for_digits(120);
        let lambdas = vec![PReal::one(bits)];
        let mus = vec![PReal::from_int(-1, bits)];
        let rels = find_integer_relations(&lambdas, &mus, 50, 60).unwrap();
        assert!(rels.is_empty());
    }

    #[test]
    fn p4_relation_basis() {
        // lambda = (1 +- sqrt5)/2 ascending, mu = (-1 +- sqrt5)/2 ascending
        let bits = bits_for_digits(120);
        let half = PReal::from_rat(&rat(1, 2), bits);
        let s5 = preal_sqrt(5, bits).mul(&half);
        let l1 = half.sub(&s5);
        let l2 = half.add(&s5);
        let m1 = half.neg().sub(&s5);
        let m2 = half.neg().add(&s5);
        let rels = find_integer_relations(&[l1, l2], &[m1, m2], 50, 60).unwrap();
        assert_eq!(rels.len(), 1);
        let r = &rels[0];
        assert_eq!(r.ell, vec![BigInt::from(1), BigInt::from(-1)]);
        assert_eq!(r.m, vec![BigInt::from(-1), BigInt::from(1)]);
        assert!(r.m_sum().is_zero());
    }

    #[test]
    fn precision_guard_trips() {
        let bits = bits_for_digits(60);
        let lam = vec![PReal::one(bits)];
        assert!(matches!(
            find_integer_relations(&lam, &[], 1_000_000_000, 30),
            Err(Error::PrecisionTooLow { .. })
        ));
    }

    #[test]
    fn parity_examples() {
        let bits = 128;
        let rel = |ell: &[i64], m: &[i64]| IntegerRelation {
            ell: ell.iter().map(|&c| BigInt::from(c)).collect(),
            m: m.iter().map(|&c| BigInt::from(c)).collect(),
            residual: PReal::zero(bits),
        };
        let (ok, w) = parity_verdict(&[rel(&[1, -1], &[-1, 1])]);
        assert!(ok && w.is_none());
        let (ok, w) = parity_verdict(&[rel(&[1, 1, 1], &[-1, -1, -1])]);
        assert!(!ok);
        assert_eq!(w.unwrap().m_sum(), BigInt::from(-3));
        let (ok, _) = parity_verdict(&[]);
        assert!(ok);
    }

    #[test]
    fn exact_lattice_p4() {
        use crate::quad::ExactEig;
        let five = BigInt::from(5);
        let v = |a: Rat, b: Rat| ExactEig::Quadratic {
            a,
            b,
            d: five.clone(),
        };
        // ascending: (1-sqrt5)/2, (1+sqrt5)/2, (-1-sqrt5)/2, (-1+sqrt5)/2
        let values = vec![
            v(rat(1, 2), rat(-1, 2)),
            v(rat(1, 2), rat(1, 2)),
            v(rat(-1, 2), rat(-1, 2)),
            v(rat(-1, 2), rat(1, 2)),
        ];
        let basis = exact_relation_lattice(&values);
        assert_eq!(basis.len(), 1);
        assert_eq!(
            basis[0],
            vec![
                BigInt::from(1),
                BigInt::from(-1),
                BigInt::from(-1),
                BigInt::from(1)
            ]
        );
    }

    #[test]
    fn exact_lattice_c6_q_third() {
        use crate::quad::ExactEig;
        // lambda = 2/3 +- sqrt(19)/3, mu = -1/3 +- sqrt(22)/3: only the
        // trivial relation
        let values = vec![
            ExactEig::Quadratic {
                a: rat(2, 3),
                b: rat(-1, 3),
                d: BigInt::from(19),
            },
            ExactEig::Quadratic {
                a: rat(2, 3),
                b: rat(1, 3),
                d: BigInt::from(19),
            },
            ExactEig::Quadratic {
                a: rat(-1, 3),
                b: rat(-1, 3),
                d: BigInt::from(22),
            },
            ExactEig::Quadratic {
                a: rat(-1, 3),
                b: rat(1, 3),
                d: BigInt::from(22),
            },
        ];
        let basis = exact_relation_lattice(&values);
        assert!(basis.is_empty());
    }

    #[test]
    fn kernel_and_membership() {
        // M = [1 2 -1]: kernel rank 2
        let m = vec![vec![BigInt::from(1), BigInt::from(2), BigInt::from(-1)]];
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: BigInt = v.iter().zip(&m[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert!(in_lattice(
            &k,
            &[BigInt::from(1), BigInt::from(0), BigInt::from(1)]
        ));
        assert!(!in_lattice(
            &k,
            &[BigInt::from(1), BigInt::from(0), BigInt::from(0)]
        ));
    }

    #[test]
    fn heuristic_route_matches_exact_route_on_random_quadratics() {
        use crate::quad::ExactEig;
        // synthesize eigenvalue sets a + b*sqrt(d) with small rationals,
        // including repeats and pure rationals, and check the LLL route
        // recovers exactly the lattice the exact route derives
        let mut state: u64 = 0x5eed;
        let mut rand = |m: i64| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % (2 * m as u64 + 1)) as i64 - m
        };
        let rads = [2i64, 3, 5, 19, 22];
        for _case in 0..25 {
            let n_plus = 1 + (rand(10).unsigned_abs() as usize % 3);
            let n_minus = 1 + (rand(10).unsigned_abs() as usize % 3);
            let mut values: Vec<ExactEig> = Vec::new();
            for _ in 0..(n_plus + n_minus) {
                let a = rat(rand(4), 1 + rand(2).abs());
                if rand(4) == 0 {
                    values.push(ExactEig::Rational(a));
                } else {
                    let b = rat(1 + rand(2).abs(), 1 + rand(2).abs());
                    let d = BigInt::from(rads[rand(10).unsigned_abs() as usize % rads.len()]);
                    values.push(ExactEig::Quadratic { a, b, d });
                }
            }
            let exact = exact_relation_lattice(&values);
            let bits = crate::precision::bits_for_digits(120);
            let nums: Vec<PReal> = values.iter().map(|v| v.to_preal(bits)).collect();
            let height_bound: u64 = 1000;
            let rels =
                find_integer_relations(&nums[..n_plus], &nums[n_plus..], height_bound, 60).unwrap();
            let lll_basis: Vec<Vec<BigInt>> = rels.iter().map(|r| r.coefficients()).collect();
            // soundness: everything the heuristic reports is a true relation
            for v in &lll_basis {
                assert!(in_lattice(&exact, v), "case {_case}: spurious {v:?}");
            }
            // completeness at the height bound: when the exact reduced
            // basis fits under it, the lattices coincide
            let hb = BigInt::from(height_bound);
            if exact
                .iter()
                .all(|v| v.iter().all(|c| c.magnitude() <= hb.magnitude()))
            {
                assert!(
                    same_lattice(&exact, &lll_basis),
                    "case {_case}: exact {exact:?} vs lll {lll_basis:?}"
                );
            }
        }
    }

    #[test]
    fn parity_invariant_under_unimodular_remix() {
        let bits = 128;
        let base = vec![
            vec![
                BigInt::from(1),
                BigInt::from(-1),
                BigInt::from(-1),
                BigInt::from(1),
            ],
            vec![
                BigInt::from(0),
                BigInt::from(2),
                BigInt::from(-2),
                BigInt::from(0),
            ],
        ];
        let to_rel = |rows: &[Vec<BigInt>]| -> Vec<IntegerRelation> {
            rows.iter()
                .map(|r| IntegerRelation {
                    ell: r[..2].to_vec(),
                    m: r[2..].to_vec(),
                    residual: PReal::zero(bits),
                })
                .collect()
        };
        let (ok0, _) = parity_verdict(&to_rel(&base));
        // remix with [[1,1],[0,1]] and [[1,0],[3,1]] style unimodular maps
        let mixes: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![1, 1], vec![0, 1]],
            vec![vec![1, 0], vec![3, 1]],
            vec![vec![2, 1], vec![1, 1]],
        ];
        for mix in mixes {
            let remixed: Vec<Vec<BigInt>> = (0..2)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            BigInt::from(mix[i][0]) * &base[0][j]
                                + BigInt::from(mix[i][1]) * &base[1][j]
                        })
                        .collect()
                })
                .collect();
            let (ok, _) = parity_verdict(&to_rel(&remixed));
            assert_eq!(ok, ok0);
        }
    }
}
