//! High-precision symmetric eigendecomposition and eigenvector
//! classification relative to a vertex pair.
//!
//! Cyclic Jacobi rotations in software fixed point. Small dense matrices
//! only; the quadratic convergence of Jacobi pushes off-diagonal mass far
//! below the advertised precision, so lifted residuals come out orders of
//! magnitude inside the contract.

use crate::error::{Error, Result};
use crate::factor::factor_over_rationals;
use crate::graph::Hamiltonian;
use crate::precision::{bits_for_digits, PReal};
use crate::quad::{roots_of_low_degree_factor, vanishing_dimension};
use crate::value::Rat;

pub const MIN_DIGITS: u32 = 30;
pub const MAX_DIGITS: u32 = 200;
const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition of a concrete Hamiltonian.
#[derive(Debug, Clone)]
pub struct SpectralData {
    eigenvalues: Vec<PReal>,
    /// Row k is the unit eigenvector for eigenvalues[k].
    eigenvectors: Vec<Vec<PReal>>,
    precision_digits: u32,
    residual_bound: PReal,
    matrix: Vec<Vec<Rat>>,
}

impl SpectralData {
    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[PReal] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, k: usize) -> &[PReal] {
        &self.eigenvectors[k]
    }

    pub fn eigenvectors(&self) -> &[Vec<PReal>] {
        &self.eigenvectors
    }

    pub fn precision_digits(&self) -> u32 {
        self.precision_digits
    }

    pub fn bits(&self) -> u32 {
        bits_for_digits(self.precision_digits)
    }

    pub fn residual_bound(&self) -> &PReal {
        &self.residual_bound
    }

    /// The concrete rational matrix that was decomposed.
    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn default_zero_threshold(&self) -> PReal {
        PReal::pow10(-((self.precision_digits / 2) as i32), self.bits())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let digits = self.precision_digits;
        serde_json::json!({
            "precision_digits": digits,
            "eigenvalues": self
                .eigenvalues
                .iter()
                .map(|l| l.to_decimal_string(digits))
                .collect::<Vec<_>>(),
            "eigenvectors": self
                .eigenvectors
                .iter()
                .map(|x| x.iter().map(|c| c.to_decimal_string(digits)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "residual_bound": self.residual_bound.to_decimal_string(digits),
        })
    }
}

/// Eigendecomposition with the publicly supported precision range.
pub fn eigendecompose(h: &Hamiltonian, precision_digits: u32) -> Result<SpectralData> {
    if !(MIN_DIGITS..=MAX_DIGITS).contains(&precision_digits) {
        return Err(Error::PrecisionOutOfRange {
            digits: precision_digits,
            min: MIN_DIGITS,
            max: MAX_DIGITS,
        });
    }
    eigendecompose_unchecked(h, precision_digits)
}

/// Eigendecomposition of a bare symmetric rational matrix, e.g. one of
/// the involution blocks.
pub fn eigendecompose_matrix(matrix: Vec<Vec<Rat>>, precision_digits: u32) -> Result<SpectralData> {
    if !(MIN_DIGITS..=MAX_DIGITS).contains(&precision_digits) {
        return Err(Error::PrecisionOutOfRange {
            digits: precision_digits,
            min: MIN_DIGITS,
            max: MAX_DIGITS,
        });
    }
    decompose_matrix(matrix, precision_digits)
}

/// Internal entry point without the range guard; the certifier runs at
/// doubled working precision through this.
pub(crate) fn eigendecompose_unchecked(
    h: &Hamiltonian,
    precision_digits: u32,
) -> Result<SpectralData> {
    decompose_matrix(h.to_rational()?, precision_digits)
}

fn decompose_matrix(matrix: Vec<Vec<Rat>>, precision_digits: u32) -> Result<SpectralData> {
    let n = matrix.len();
    for row in &matrix {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    let bits = bits_for_digits(precision_digits);
    let a: Vec<Vec<PReal>> = matrix
        .iter()
        .map(|row| row.iter().map(|e| PReal::from_rat(e, bits)).collect())
        .collect();
    let (eigenvalues, eigenvectors) = jacobi_eigen(a, bits, precision_digits)?;

    // honest residual: exact H applied to each computed pair
    let h_fixed: Vec<Vec<PReal>> = matrix
        .iter()
        .map(|row| row.iter().map(|e| PReal::from_rat(e, bits)).collect())
        .collect();
    let mut residual_bound = PReal::zero(bits);
    for (lam, x) in eigenvalues.iter().zip(&eigenvectors) {
        for (i, row) in h_fixed.iter().enumerate() {
            let mut acc = PReal::zero(bits);
            for (hij, xj) in row.iter().zip(x) {
                if !hij.is_zero() {
                    acc = acc.add(&hij.mul(xj));
                }
            }
            let r = acc.sub(&lam.mul(&x[i])).abs();
            if r > residual_bound {
                residual_bound = r;
            }
        }
    }

    Ok(SpectralData {
        eigenvalues,
        eigenvectors,
        precision_digits,
        residual_bound,
        matrix,
    })
}

/// Cyclic Jacobi on an already-lifted symmetric fixed-point matrix.
/// Returns (ascending eigenvalues, unit eigenvectors as rows) with the
/// first-large-entry-positive sign convention.
pub fn jacobi_eigen(
    mut a: Vec<Vec<PReal>>,
    bits: u32,
    precision_digits: u32,
) -> Result<(Vec<PReal>, Vec<Vec<PReal>>)> {
    let n = a.len();
    let mut v: Vec<Vec<PReal>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        PReal::one(bits)
                    } else {
                        PReal::zero(bits)
                    }
                })
                .collect()
        })
        .collect();

    // absolute rotation threshold: scale * 2^-(bits-24)
    let mut scale = PReal::one(bits);
    for row in &a {
        for e in row {
            let abs = e.abs();
            if abs > scale {
                scale = abs;
            }
        }
    }
    let eps = {
        let shift = bits.saturating_sub(24);
        let mut t = scale.clone();
        for _ in 0..(shift / 31) {
            t = t.div_int(1 << 31);
        }
        t.div_int(1 << (shift % 31))
    };

    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        let mut off_max = PReal::zero(bits);
        for p in 0..n {
            for q in (p + 1)..n {
                let abs = a[p][q].abs();
                if abs > off_max {
                    off_max = abs;
                }
            }
        }
        if off_max <= eps {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() <= eps {
                    continue;
                }
                jacobi_rotate(&mut a, &mut v, p, q, bits);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].cmp(&a[j][j]));
    let eigenvalues: Vec<PReal> = order.iter().map(|&i| a[i][i].clone()).collect();
    let flip_threshold = PReal::pow10(-((precision_digits / 2) as i32), bits);
    let mut eigenvectors: Vec<Vec<PReal>> = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row][col].clone()).collect())
        .collect();
    for x in &mut eigenvectors {
        if let Some(first) = x.iter().find(|c| c.abs() > flip_threshold) {
            if first.is_negative() {
                for c in x.iter_mut() {
                    *c = c.neg();
                }
            }
        }
    }
    Ok((eigenvalues, eigenvectors))
}

/// Eigenvalues and eigenvectors of both involution blocks, vectors in
/// block coordinates ready for lifting.
///
/// H+ is not symmetric when S is nonempty; conjugating by
/// diag(I, I/sqrt2) symmetrizes it without moving the spectrum, and the
/// eigenvectors unscale back to H+ coordinates.
pub struct BlockSpectra {
    pub plus_eigenvalues: Vec<PReal>,
    pub plus_vectors: Vec<Vec<PReal>>,
    pub minus_eigenvalues: Vec<PReal>,
    pub minus_vectors: Vec<Vec<PReal>>,
}

pub fn block_spectra(
    bd: &crate::involution::BlockDecomposition,
    precision_digits: u32,
) -> Result<BlockSpectra> {
    if !(MIN_DIGITS..=MAX_DIGITS).contains(&precision_digits) {
        return Err(Error::PrecisionOutOfRange {
            digits: precision_digits,
            min: MIN_DIGITS,
            max: MAX_DIGITS,
        });
    }
    let bits = bits_for_digits(precision_digits);
    let to_rat = |m: &Vec<Vec<crate::value::AffineQ>>| -> Result<Vec<Vec<Rat>>> {
        m.iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.as_rat().cloned().ok_or(Error::SymbolicEntries))
                    .collect()
            })
            .collect()
    };
    let plus = to_rat(&bd.h_plus)?;
    let minus = to_rat(&bd.h_minus)?;
    let n = bd.h_minus.len();
    let total = plus.len();
    let sqrt2 = PReal::from_int(2, bits).sqrt();

    // symmetrized plus block: rows/cols past n scaled by sqrt2
    let mut sym = vec![vec![PReal::zero(bits); total]; total];
    for (i, row) in plus.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let mut v = PReal::from_rat(e, bits);
            if (i >= n) ^ (j >= n) {
                // exactly one index in the fixed block: entry e scales to
                // e * sqrt2 (A_S side) or e / sqrt2 (2 A_S^T side)
                if j >= n {
                    v = v.mul(&sqrt2);
                } else {
                    v = v.div(&sqrt2);
                }
            }
            sym[i][j] = v;
        }
    }
    let (plus_eigenvalues, sym_vectors) = jacobi_eigen(sym, bits, precision_digits)?;
    // sym = D H+ D^-1 with D = diag(I, I/sqrt2), so H+ vectors are
    // x = D^-1 y: fixed-block coordinates scale back up by sqrt2
    let plus_vectors: Vec<Vec<PReal>> = sym_vectors
        .into_iter()
        .map(|y| {
            y.into_iter()
                .enumerate()
                .map(|(i, c)| if i >= n { c.mul(&sqrt2) } else { c })
                .collect()
        })
        .collect();

    let (minus_eigenvalues, minus_vectors) = if n == 0 {
        (vec![], vec![])
    } else {
        let m: Vec<Vec<PReal>> = minus
            .iter()
            .map(|row| row.iter().map(|e| PReal::from_rat(e, bits)).collect())
            .collect();
        jacobi_eigen(m, bits, precision_digits)?
    };
    Ok(BlockSpectra {
        plus_eigenvalues,
        plus_vectors,
        minus_eigenvalues,
        minus_vectors,
    })
}

fn jacobi_rotate(a: &mut [Vec<PReal>], v: &mut [Vec<PReal>], p: usize, q: usize, bits: u32) {
    let apq = a[p][q].clone();
    let app = a[p][p].clone();
    let aqq = a[q][q].clone();
    let one = PReal::one(bits);
    let theta = aqq.sub(&app).div(&apq.mul_int(2));
    let t_abs = one.div(&theta.abs().add(&theta.mul(&theta).add(&one).sqrt()));
    let t = if theta.is_negative() {
        t_abs.neg()
    } else {
        t_abs
    };
    let c = one.div(&t.mul(&t).add(&one).sqrt());
    let s = t.mul(&c);

    let n = a.len();
    a[p][p] = app.sub(&t.mul(&apq));
    a[q][q] = aqq.add(&t.mul(&apq));
    a[p][q] = PReal::zero(bits);
    a[q][p] = PReal::zero(bits);
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r][p].clone();
        let arq = a[r][q].clone();
        let new_p = c.mul(&arp).sub(&s.mul(&arq));
        let new_q = s.mul(&arp).add(&c.mul(&arq));
        a[r][p] = new_p.clone();
        a[p][r] = new_p;
        a[r][q] = new_q.clone();
        a[q][r] = new_q;
    }
    for row in v.iter_mut() {
        let vp = row[p].clone();
        let vq = row[q].clone();
        row[p] = c.mul(&vp).sub(&s.mul(&vq));
        row[q] = s.mul(&vp).add(&c.mul(&vq));
    }
}

/// Classification of every eigenpair relative to the pair (u, v).
#[derive(Debug, Clone)]
pub struct PairClassification {
    pub u: usize,
    pub v: usize,
    pub plus_indices: Vec<usize>,
    pub minus_indices: Vec<usize>,
    pub vanishing_indices: Vec<usize>,
    pub cospectral_failures: Vec<usize>,
    /// Eigenvectors after the in-eigenspace rotation used to classify.
    pub vectors: Vec<Vec<PReal>>,
}

/// Assigns each eigenpair to plus / minus / vanishing / failure using the
/// given zero threshold (defaults to 10^(-digits/2)).
///
/// Degenerate eigenspaces are first rotated so at most one basis vector is
/// nonzero at u. Vanishing verdicts are cross-checked exactly whenever the
/// eigenvalue is a root of an exact factor of degree <= 2.
pub fn classify_pair(
    s: &SpectralData,
    u: usize,
    v: usize,
    zero_threshold: Option<f64>,
) -> PairClassification {
    assert_ne!(u, v, "classify_pair needs two distinct vertices");
    let bits = s.bits();
    let z = match zero_threshold {
        Some(t) => PReal::from_f64(t, bits),
        None => s.default_zero_threshold(),
    };
    let n = s.dimension();
    let mut vectors: Vec<Vec<PReal>> = s.eigenvectors.to_vec();

    // group numerically equal eigenvalues
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let start_new = match groups.last() {
            None => true,
            Some(g) => {
                let prev = *g.last().unwrap();
                s.eigenvalues[i].sub(&s.eigenvalues[prev]).abs() > z
            }
        };
        if start_new {
            groups.push(vec![i]);
        } else {
            groups.last_mut().unwrap().push(i);
        }
    }

    // rotate each eigenspace so only one vector carries weight at u
    for g in &groups {
        if g.len() < 2 {
            continue;
        }
        let m = *g
            .iter()
            .max_by(|&&i, &&j| vectors[i][u].abs().cmp(&vectors[j][u].abs()))
            .unwrap();
        for &j in g {
            if j == m {
                continue;
            }
            let xu = vectors[m][u].clone();
            let yu = vectors[j][u].clone();
            if yu.abs() <= z {
                continue;
            }
            let r = xu.mul(&xu).add(&yu.mul(&yu)).sqrt();
            let c = xu.div(&r);
            let sn = yu.div(&r);
            for k in 0..n {
                let xm = vectors[m][k].clone();
                let xj = vectors[j][k].clone();
                vectors[m][k] = c.mul(&xm).add(&sn.mul(&xj));
                vectors[j][k] = c.mul(&xj).sub(&sn.mul(&xm));
            }
        }
    }

    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut vanishing = Vec::new();
    let mut failures = Vec::new();
    for i in 0..n {
        let au = vectors[i][u].clone();
        let av = vectors[i][v].clone();
        if au.abs() <= z && av.abs() <= z {
            vanishing.push(i);
        } else if au.abs() > z && au.sub(&av).abs() <= z {
            plus.push(i);
        } else if au.abs() > z && au.add(&av).abs() <= z {
            minus.push(i);
        } else {
            failures.push(i);
        }
    }

    // exact confirmation of vanishing verdicts where cheap
    if !vanishing.is_empty() {
        if let Ok(fact) =
            factor_over_rationals(&crate::poly::char_poly(&s.matrix).expect("square matrix"))
        {
            let match_tol = s.default_zero_threshold();
            for g in &groups {
                let here: Vec<usize> = g
                    .iter()
                    .copied()
                    .filter(|i| vanishing.contains(i))
                    .collect();
                if here.is_empty() {
                    continue;
                }
                let lam = &s.eigenvalues[g[0]];
                for (f, _) in &fact.factors {
                    let Some(roots) = roots_of_low_degree_factor(f) else {
                        continue;
                    };
                    let Some(eig) = roots
                        .iter()
                        .find(|r| r.to_preal(bits).sub(lam).abs() <= match_tol)
                    else {
                        continue;
                    };
                    let dim = vanishing_dimension(&s.matrix, eig, &[u, v]);
                    if dim < here.len() {
                        // exact arithmetic disagrees; demote the surplus
                        for &i in here.iter().skip(dim) {
                            vanishing.retain(|&x| x != i);
                            failures.push(i);
                        }
                        failures.sort_unstable();
                    }
                    break;
                }
            }
        }
    }

    PairClassification {
        u,
        v,
        plus_indices: plus,
        minus_indices: minus,
        vanishing_indices: vanishing,
        cospectral_failures: failures,
        vectors,
    }
}

/// Condition 1: every eigenvector has x(u) = x(v) or x(u) = -x(v).
pub fn strong_cospectral(s: &SpectralData, u: usize, v: usize) -> bool {
    classify_pair(s, u, v, None).cospectral_failures.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_hamiltonian, parse_graph, Graph, Potential};
    use crate::value::{rat, AffineQ};

    fn decompose_zero_potential(g: &Graph, digits: u32) -> SpectralData {
        let h = build_hamiltonian(g, &Potential::zero(g.vertex_count())).unwrap();
        eigendecompose(&h, digits).unwrap()
    }

    #[test]
    fn k2_eigensystem() {
        let s = decompose_zero_potential(&Graph::path(2), 60);
        let tol = PReal::pow10(-50, s.bits());
        assert!(s.eigenvalues()[0].add(&PReal::one(s.bits())).abs() < tol);
        assert!(s.eigenvalues()[1].sub(&PReal::one(s.bits())).abs() < tol);
        // vectors (1,-1)/sqrt2 and (1,1)/sqrt2 up to sign convention
        let x0 = s.eigenvector(0);
        assert!(x0[0].add(&x0[1]).abs() < tol);
        let x1 = s.eigenvector(1);
        assert!(x1[0].sub(&x1[1]).abs() < tol);
        assert!(*s.residual_bound() < tol);
    }

    #[test]
    fn c6_spectrum() {
        let s = decompose_zero_potential(&Graph::cycle(6), 60);
        let want = [-2.0, -1.0, -1.0, 1.0, 1.0, 2.0];
        for (lam, w) in s.eigenvalues().iter().zip(want) {
            assert!((lam.to_f64() - w).abs() < 1e-40_f64.max(1e-12));
        }
    }

    #[test]
    fn rejects_symbolic_and_bad_precision() {
        let g = Graph::path(2);
        let mut q = Potential::zero(2);
        q.set(1, AffineQ::symbolic_q()).unwrap();
        q.set(2, AffineQ::symbolic_q()).unwrap();
        let h = build_hamiltonian(&g, &q).unwrap();
        assert!(matches!(
            eigendecompose(&h, 60),
            Err(Error::SymbolicEntries)
        ));
        let h0 = build_hamiltonian(&g, &Potential::zero(2)).unwrap();
        assert!(matches!(
            eigendecompose(&h0, 10),
            Err(Error::PrecisionOutOfRange { .. })
        ));
    }

    #[test]
    fn reconstruction_of_identity() {
        // sum of x x^T over all eigenpairs is the identity
        let s = decompose_zero_potential(&Graph::cycle(5), 40);
        let bits = s.bits();
        let n = s.dimension();
        let tol = PReal::pow10(-20, bits);
        for i in 0..n {
            for j in 0..n {
                let mut acc = PReal::zero(bits);
                for x in s.eigenvectors() {
                    acc = acc.add(&x[i].mul(&x[j]));
                }
                let want = if i == j {
                    PReal::one(bits)
                } else {
                    PReal::zero(bits)
                };
                assert!(acc.sub(&want).abs() < tol, "({i},{j})");
            }
        }
    }

    #[test]
    fn k2_pair_classification() {
        let s = decompose_zero_potential(&Graph::path(2), 60);
        let cls = classify_pair(&s, 0, 1, None);
        assert_eq!(cls.minus_indices, vec![0]); // eigenvalue -1 has x(u) = -x(v)
        assert_eq!(cls.plus_indices, vec![1]);
        assert!(cls.vanishing_indices.is_empty());
        assert!(cls.cospectral_failures.is_empty());
        assert!(strong_cospectral(&s, 0, 1));
    }

    #[test]
    fn p3_endpoint_middle_fails() {
        let s = decompose_zero_potential(&Graph::path(3), 60);
        let cls = classify_pair(&s, 0, 1, None);
        assert!(!cls.cospectral_failures.is_empty());
        assert!(!strong_cospectral(&s, 0, 1));
        // endpoints are fine
        assert!(strong_cospectral(&s, 0, 2));
    }

    #[test]
    fn figure1_strong_cospectrality() {
        let text = r#"{"n":7,"edges":[[1,2],[1,5],[2,3],[2,4],[3,6],[3,7],[4,5],[5,6],[6,7]]}"#;
        let (g, _) = parse_graph(text).unwrap();
        let s = decompose_zero_potential(&g, 60);
        assert!(strong_cospectral(&s, 0, 3)); // v1, v4
    }

    #[test]
    fn c6_with_pair_potential_vanishing() {
        let g = Graph::cycle(6);
        let mut q = Potential::zero(6);
        q.set(2, AffineQ::from_rat(rat(1, 3))).unwrap();
        q.set(5, AffineQ::from_rat(rat(1, 3))).unwrap();
        let h = build_hamiltonian(&g, &q).unwrap();
        let s = eigendecompose(&h, 60).unwrap();
        let cls = classify_pair(&s, 1, 4, None);
        // eigenvalues +-1 vanish at (v2, v5); the other four split 2/2
        assert_eq!(cls.vanishing_indices.len(), 2);
        assert_eq!(cls.plus_indices.len(), 2);
        assert_eq!(cls.minus_indices.len(), 2);
        assert!(cls.cospectral_failures.is_empty());
        for &i in &cls.vanishing_indices {
            let lam = s.eigenvalues()[i].to_f64();
            assert!((lam.abs() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn char_poly_vanishes_at_eigenvalues() {
        let text = r#"{"n":7,"edges":[[1,2],[1,5],[2,3],[2,4],[3,6],[3,7],[4,5],[5,6],[6,7]]}"#;
        let (g, _) = parse_graph(text).unwrap();
        let s = decompose_zero_potential(&g, 60);
        let cp = crate::poly::char_poly(s.matrix()).unwrap();
        let bits = s.bits();
        let bound = PReal::pow10(-18, bits);
        for lam in s.eigenvalues() {
            let mut acc = PReal::zero(bits);
            for c in cp.coeffs().iter().rev() {
                acc = acc.mul(lam).add(&PReal::from_rat(c, bits));
            }
            assert!(acc.abs() < bound);
        }
    }

    #[test]
    fn spectral_json_export() {
        let s = decompose_zero_potential(&Graph::path(2), 30);
        let doc = s.to_json();
        assert_eq!(doc["precision_digits"], 30);
        let evs = doc["eigenvalues"].as_array().unwrap();
        assert_eq!(evs.len(), 2);
        assert!(evs[0].as_str().unwrap().starts_with("-1.0000000000"));
        assert!(evs[1].as_str().unwrap().starts_with("1.0000000000"));
    }

    #[test]
    fn block_spectra_with_fixed_vertex() {
        // P3 with endpoint reversal: H+ = [[0,1],[2,0]] needs the
        // symmetrizing conjugation; spectrum {+-sqrt2}
        let g = Graph::path(3);
        let h = build_hamiltonian(&g, &Potential::zero(3)).unwrap();
        let inv = crate::involution::verify_involution(&g, &[3, 2, 1]).unwrap();
        let bd = crate::involution::decompose(&h, &inv).unwrap();
        let blocks = block_spectra(&bd, 60).unwrap();
        let bits = bits_for_digits(60);
        let s2 = PReal::from_int(2, bits).sqrt();
        let tol = PReal::pow10(-40, bits);
        assert!(blocks.plus_eigenvalues[0].add(&s2).abs() < tol);
        assert!(blocks.plus_eigenvalues[1].sub(&s2).abs() < tol);
        assert_eq!(blocks.minus_eigenvalues.len(), 1);
        assert!(blocks.minus_eigenvalues[0].abs() < tol);
        // the plus vectors are H+ eigenvectors: [[0,1],[2,0]] x = lam x
        for (lam, x) in blocks.plus_eigenvalues.iter().zip(&blocks.plus_vectors) {
            let r0 = x[1].sub(&lam.mul(&x[0])).abs();
            let r1 = x[0].mul_int(2).sub(&lam.mul(&x[1])).abs();
            assert!(r0 < tol && r1 < tol);
        }
    }

    #[test]
    fn classification_matches_block_spectra() {
        // plus-classified eigenvalues sit in spectrum(H+), minus in
        // spectrum(H-), and vanishing ones in their union
        let g = Graph::cycle(6);
        let mut q = Potential::zero(6);
        q.set(2, AffineQ::from_rat(rat(1, 3))).unwrap();
        q.set(5, AffineQ::from_rat(rat(1, 3))).unwrap();
        let h = build_hamiltonian(&g, &q).unwrap();
        let s = eigendecompose(&h, 60).unwrap();
        let cls = classify_pair(&s, 1, 4, None);
        let inv = crate::involution::verify_involution(&g, &[6, 5, 4, 3, 2, 1]).unwrap();
        let bd = crate::involution::decompose(&h, &inv).unwrap();
        let blocks = block_spectra(&bd, 60).unwrap();
        let tol = PReal::pow10(-40, s.bits());
        let close = |lam: &PReal, pool: &[PReal]| pool.iter().any(|p| p.sub(lam).abs() < tol);
        for &i in &cls.plus_indices {
            assert!(close(&s.eigenvalues()[i], &blocks.plus_eigenvalues));
        }
        for &i in &cls.minus_indices {
            assert!(close(&s.eigenvalues()[i], &blocks.minus_eigenvalues));
        }
        for &i in &cls.vanishing_indices {
            let lam = &s.eigenvalues()[i];
            assert!(close(lam, &blocks.plus_eigenvalues) || close(lam, &blocks.minus_eigenvalues));
        }
    }

    #[test]
    fn random_symmetric_matrices_against_char_poly() {
        let mut state: u64 = 0x1acb;
        let mut rand = |m: i64| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % (2 * m as u64 + 1)) as i64 - m
        };
        for _case in 0..10 {
            let n = 2 + (rand(10).unsigned_abs() as usize % 5);
            let mut m = vec![vec![crate::value::rat_int(0); n]; n];
            for i in 0..n {
                for j in i..n {
                    let v = crate::value::rat(rand(3), 1 + rand(1).abs());
                    m[i][j] = v.clone();
                    m[j][i] = v;
                }
            }
            // duplicate a diagonal block to provoke degeneracies sometimes
            let s = eigendecompose_matrix(m.clone(), 40).unwrap();
            let bits = s.bits();
            let cp = crate::poly::char_poly(&m).unwrap();
            let bound = PReal::pow10(-18, bits);
            for lam in s.eigenvalues() {
                let mut acc = PReal::zero(bits);
                for c in cp.coeffs().iter().rev() {
                    acc = acc.mul(lam).add(&PReal::from_rat(c, bits));
                }
                assert!(acc.abs() < bound, "case {_case}");
            }
            // orthonormality of the eigenbasis
            let tol = PReal::pow10(-18, bits);
            for (i, x) in s.eigenvectors().iter().enumerate() {
                for (j, y) in s.eigenvectors().iter().enumerate() {
                    let mut dot = PReal::zero(bits);
                    for (a, b) in x.iter().zip(y) {
                        dot = dot.add(&a.mul(b));
                    }
                    let want = if i == j {
                        PReal::one(bits)
                    } else {
                        PReal::zero(bits)
                    };
                    assert!(dot.sub(&want).abs() < tol, "case {_case} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn classification_invariant_under_sign_flip() {
        let g = Graph::cycle(6);
        let h = build_hamiltonian(&g, &Potential::zero(6)).unwrap();
        let mut s = eigendecompose(&h, 40).unwrap();
        let before = classify_pair(&s, 1, 4, None);
        for x in s.eigenvectors.iter_mut() {
            for c in x.iter_mut() {
                *c = c.neg();
            }
        }
        let after = classify_pair(&s, 1, 4, None);
        assert_eq!(before.plus_indices, after.plus_indices);
        assert_eq!(before.minus_indices, after.minus_indices);
        assert_eq!(before.vanishing_indices, after.vanishing_indices);
    }
}
