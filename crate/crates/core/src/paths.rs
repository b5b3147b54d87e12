//! Closed forms for paths with potential Q on both endpoints.
//!
//! p_N is the characteristic polynomial of the plain path adjacency
//! matrix, built from the three-term recurrence p_N = x*p_{N-1} - p_{N-2}
//! with p_0 = 1, p_1 = x, and the convention p_{-1} = 0. The block factors
//! of the endpoint-potential Hamiltonian then have explicit shapes per
//! parity, and their coprimality reduces to gcds in this family.

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, QLinearPoly, RatPoly};
use crate::precision::{bits_for_digits, PReal};

/// Cache of p_0 .. p_{n_max}.
#[derive(Debug, Clone)]
pub struct PathFamily {
    polys: Vec<RatPoly>,
}

impl PathFamily {
    pub fn new(n_max: usize) -> PathFamily {
        let mut polys = Vec::with_capacity(n_max + 1);
        polys.push(RatPoly::one());
        if n_max >= 1 {
            polys.push(RatPoly::x());
        }
        for n in 2..=n_max {
            let next = RatPoly::x().mul(&polys[n - 1]).sub(&polys[n - 2]);
            polys.push(next);
        }
        PathFamily { polys }
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    /// p_n, with p_{-1} = 0 for the index -1 edge case.
    pub fn poly_signed(&self, n: isize) -> RatPoly {
        if n < 0 {
            RatPoly::zero()
        } else {
            self.polys[n as usize].clone()
        }
    }

    pub fn poly(&self, n: usize) -> &RatPoly {
        &self.polys[n]
    }
}

/// Characteristic polynomial of the adjacency matrix of the N-path.
pub fn path_poly(n: usize) -> RatPoly {
    PathFamily::new(n).poly(n).clone()
}

/// Block factors of the path Hamiltonian with value Q on both endpoints:
/// for N = 2n,   P+ = (p_n - p_{n-1}) - Q(p_{n-1} - p_{n-2})
///               P- = (p_n + p_{n-1}) - Q(p_{n-1} + p_{n-2})
/// for N = 2n+1, P+ = (p_{n+1} - p_{n-1}) - Q(p_n - p_{n-2})
///               P- = p_n - Q*p_{n-1}
pub fn path_plus_minus(big_n: usize) -> Result<(QLinearPoly, QLinearPoly)> {
    if big_n < 2 {
        return Err(Error::PathTooShort(big_n));
    }
    let n = big_n / 2;
    let fam = PathFamily::new(n + 1);
    let p = |k: isize| fam.poly_signed(k);
    let n = n as isize;
    if big_n.is_multiple_of(2) {
        let plus = QLinearPoly {
            p: p(n).sub(&p(n - 1)),
            q: p(n - 1).sub(&p(n - 2)),
        };
        let minus = QLinearPoly {
            p: p(n).add(&p(n - 1)),
            q: p(n - 1).add(&p(n - 2)),
        };
        Ok((plus, minus))
    } else {
        let plus = QLinearPoly {
            p: p(n + 1).sub(&p(n - 1)),
            q: p(n).sub(&p(n - 2)),
        };
        let minus = QLinearPoly {
            p: p(n),
            q: p(n - 1),
        };
        Ok((plus, minus))
    }
}

/// One path eigenvalue 2cos(k*pi/(N+1)) with its exact tag.
#[derive(Debug, Clone)]
pub struct PathEigenvalue {
    pub value: PReal,
    /// Numerator k of the angle k*pi/denom.
    pub k: u32,
    /// N + 1.
    pub denom: u32,
}

/// The N eigenvalues of the path adjacency matrix, descending in value
/// for k ascending; computed at the requested precision.
pub fn path_spectrum(n: usize, precision_digits: u32) -> Vec<PathEigenvalue> {
    let bits = bits_for_digits(precision_digits);
    let pi = PReal::pi(bits);
    let denom = (n + 1) as u32;
    (1..=n as u32)
        .map(|k| {
            let angle = pi.mul_int(k as i64).div_int(denom as u64);
            PathEigenvalue {
                value: angle.cos().mul_int(2),
                k,
                denom,
            }
        })
        .collect()
}

/// The four gcds behind the endpoint-potential coprimality claims, plus
/// the shared-root check for the adjacent odd family.
#[derive(Debug, Clone)]
pub struct CoprimalityReport {
    pub n_vertices: usize,
    /// gcd(p_n - p_{n-1}, p_{n-1} - p_{n-2})
    pub plus_even: RatPoly,
    /// gcd(p_n + p_{n-1}, p_{n-1} + p_{n-2})
    pub minus_even: RatPoly,
    /// gcd(p_{n+1} - p_{n-1}, p_n - p_{n-2})
    pub plus_odd: RatPoly,
    /// gcd(p_n, p_{n-1})
    pub minus_odd: RatPoly,
    /// Roots shared by p_{2n+1} and p_{2n-1}; always exactly x = 0.
    pub shared_roots: Vec<String>,
    pub all_coprime: bool,
}

impl CoprimalityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "N": self.n_vertices,
            "gcds": {
                "plus_even": self.plus_even.to_display_string(),
                "minus_even": self.minus_even.to_display_string(),
                "plus_odd": self.plus_odd.to_display_string(),
                "minus_odd": self.minus_odd.to_display_string(),
            },
            "shared_roots": self.shared_roots,
            "all_coprime": self.all_coprime,
        })
    }
}

pub fn path_coprimality_check(big_n: usize) -> Result<CoprimalityReport> {
    if big_n < 4 {
        return Err(Error::PathTooShort(big_n));
    }
    let n = big_n / 2;
    let fam = PathFamily::new(2 * n + 1);
    let p = |k: isize| fam.poly_signed(k);
    let ni = n as isize;
    let plus_even = poly_gcd(&p(ni).sub(&p(ni - 1)), &p(ni - 1).sub(&p(ni - 2)))?;
    let minus_even = poly_gcd(&p(ni).add(&p(ni - 1)), &p(ni - 1).add(&p(ni - 2)))?;
    let plus_odd = poly_gcd(&p(ni + 1).sub(&p(ni - 1)), &p(ni).sub(&p(ni - 2)))?;
    let minus_odd = poly_gcd(&p(ni), &p(ni - 1))?;
    // p_{2n+1} and p_{2n-1} share exactly the root 0
    let shared = poly_gcd(fam.poly(2 * n + 1), fam.poly(2 * n - 1))?;
    let shared_roots = if shared == RatPoly::x() {
        vec!["0".to_string()]
    } else {
        vec![format!("unexpected: {}", shared.to_display_string())]
    };
    let one = RatPoly::one();
    let all_coprime = plus_even == one
        && minus_even == one
        && plus_odd == one
        && minus_odd == one
        && shared == RatPoly::x();
    Ok(CoprimalityReport {
        n_vertices: big_n,
        plus_even,
        minus_even,
        plus_odd,
        minus_odd,
        shared_roots,
        all_coprime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_hamiltonian, Graph, Potential};
    use crate::involution::{decompose, verify_involution};
    use crate::poly::{char_poly, char_poly_q_linear};
    use crate::value::AffineQ;

    #[test]
    fn recurrence_matches_definition() {
        assert_eq!(path_poly(2), RatPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(path_poly(3), RatPoly::from_i64(&[0, -2, 0, 1]));
    }

    #[test]
    fn recurrence_matches_char_poly_up_to_12() {
        for n in 1..=12 {
            let g = Graph::path(n);
            let h = build_hamiltonian(&g, &Potential::zero(n)).unwrap();
            let m = h.to_rational().unwrap();
            assert_eq!(path_poly(n), char_poly(&m).unwrap(), "N = {n}");
        }
    }

    #[test]
    fn plus_minus_n4() {
        let (plus, minus) = path_plus_minus(4).unwrap();
        assert_eq!(plus.p, RatPoly::from_i64(&[-1, -1, 1]));
        assert_eq!(plus.q, RatPoly::from_i64(&[-1, 1]));
        assert_eq!(minus.p, RatPoly::from_i64(&[-1, 1, 1]));
        assert_eq!(minus.q, RatPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn plus_minus_n5() {
        let (_, minus) = path_plus_minus(5).unwrap();
        assert_eq!(minus.p, RatPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(minus.q, RatPoly::from_i64(&[0, 1]));
    }

    #[test]
    fn plus_minus_n2_matches_k2_blocks() {
        let (plus, minus) = path_plus_minus(2).unwrap();
        // x - (Q+1) and x - (Q-1)
        assert_eq!(plus.p, RatPoly::from_i64(&[-1, 1]));
        assert_eq!(plus.q, RatPoly::one());
        assert_eq!(minus.p, RatPoly::from_i64(&[1, 1]));
        assert_eq!(minus.q, RatPoly::one());
        assert!(path_plus_minus(1).is_err());
    }

    #[test]
    fn formulas_match_decomposition() {
        for n in 2..=12 {
            let g = Graph::path(n);
            let mut q = Potential::zero(n);
            q.set(1, AffineQ::symbolic_q()).unwrap();
            q.set(n, AffineQ::symbolic_q()).unwrap();
            let h = build_hamiltonian(&g, &q).unwrap();
            let perm: Vec<usize> = (1..=n).rev().collect();
            let inv = verify_involution(&g, &perm).unwrap();
            let bd = decompose(&h, &inv).unwrap();
            let from_blocks_plus = char_poly_q_linear(&bd.h_plus, 0).unwrap();
            let from_blocks_minus = char_poly_q_linear(&bd.h_minus, 0).unwrap();
            let (plus, minus) = path_plus_minus(n).unwrap();
            assert_eq!(plus, from_blocks_plus, "P+ at N = {n}");
            assert_eq!(minus, from_blocks_minus, "P- at N = {n}");
        }
    }

    #[test]
    fn spectrum_values() {
        let sp = path_spectrum(2, 60);
        assert!((sp[0].value.to_f64() - 1.0).abs() < 1e-12);
        assert!((sp[1].value.to_f64() + 1.0).abs() < 1e-12);
        assert_eq!((sp[0].k, sp[0].denom), (1, 3));
        // N=4: golden-ratio pairs, roots of x^4 - 3x^2 + 1
        let sp = path_spectrum(4, 60);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((sp[0].value.to_f64() - phi).abs() < 1e-12);
        assert!((sp[1].value.to_f64() - (phi - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn spectrum_roots_of_path_poly() {
        let digits = 60;
        let p50 = path_poly(50);
        let bits = bits_for_digits(digits);
        let bound = PReal::pow10(-40, bits);
        for ev in path_spectrum(50, digits) {
            let mut acc = PReal::zero(bits);
            for c in p50.coeffs().iter().rev() {
                acc = acc.mul(&ev.value).add(&PReal::from_rat(c, bits));
            }
            assert!(acc.abs() < bound, "k = {}", ev.k);
        }
    }

    #[test]
    fn coprimality_small_cases() {
        for n in [4usize, 5, 6, 7, 101] {
            let report = path_coprimality_check(n).unwrap();
            assert!(report.all_coprime, "N = {n}");
            assert_eq!(report.shared_roots, vec!["0".to_string()]);
        }
        assert!(path_coprimality_check(3).is_err());
    }

    #[test]
    fn plus_minus_product_equals_char_poly_at_random_q() {
        use crate::value::rat;
        let qs = [rat(1, 2), rat(-3, 7), rat(5, 1), rat(2, 9), rat(-1, 4)];
        for n in 2..=12usize {
            let (plus, minus) = path_plus_minus(n).unwrap();
            for qv in &qs {
                let g = Graph::path(n);
                let mut q = Potential::zero(n);
                q.set(1, AffineQ::from_rat(qv.clone())).unwrap();
                q.set(n, AffineQ::from_rat(qv.clone())).unwrap();
                let h = build_hamiltonian(&g, &q).unwrap();
                let cp = char_poly(&h.to_rational().unwrap()).unwrap();
                let prod = plus.eval_q(qv).mul(&minus.eval_q(qv));
                assert_eq!(prod, cp, "N = {n}, Q = {qv}");
            }
        }
    }
}
