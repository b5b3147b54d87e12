//! Time evolution U(t) = e^{itH}, transfer fidelity, and the search for
//! times reaching fidelity 1 - epsilon.
//!
//! Phases t*lambda are reduced mod 2*pi in fixed point before dropping to
//! doubles: for large t the product loses everything in f64, while after
//! reduction the double carries the full phase. The fidelity itself is a
//! trigonometric polynomial with derivative bounded by the eigenvalue
//! spread, which fixes the coarse scan step.

use crate::error::{Error, Result};
use crate::precision::PReal;
use crate::spectral::SpectralData;

/// Complex square matrix in fixed point, as (re, im) parts.
pub struct UnitaryMatrix {
    pub re: Vec<Vec<PReal>>,
    pub im: Vec<Vec<PReal>>,
}

impl UnitaryMatrix {
    pub fn dimension(&self) -> usize {
        self.re.len()
    }

    /// max |(U U^H - I)_{ij}| as a fixed-point value.
    pub fn unitarity_defect(&self) -> PReal {
        let n = self.dimension();
        let bits = self.re[0][0].bits();
        let mut worst = PReal::zero(bits);
        for i in 0..n {
            for j in 0..n {
                let mut re = PReal::zero(bits);
                let mut im = PReal::zero(bits);
                for k in 0..n {
                    // (U U^H)_{ij} = sum_k U_{ik} * conj(U_{jk})
                    re = re
                        .add(&self.re[i][k].mul(&self.re[j][k]))
                        .add(&self.im[i][k].mul(&self.im[j][k]));
                    im = im
                        .add(&self.im[i][k].mul(&self.re[j][k]))
                        .sub(&self.re[i][k].mul(&self.im[j][k]));
                }
                if i == j {
                    re = re.sub(&PReal::one(bits));
                }
                for part in [re.abs(), im.abs()] {
                    if part > worst {
                        worst = part;
                    }
                }
            }
        }
        worst
    }
}

/// U(t) as the spectral sum over e^{i t lambda} x x^T, in fixed point.
pub fn unitary_at(s: &SpectralData, t: f64) -> UnitaryMatrix {
    assert!(t.is_finite(), "time must be finite");
    let bits = s.bits();
    let n = s.dimension();
    let tp = PReal::from_f64(t, bits);
    let mut re = vec![vec![PReal::zero(bits); n]; n];
    let mut im = vec![vec![PReal::zero(bits); n]; n];
    for (lam, x) in s.eigenvalues().iter().zip(s.eigenvectors()) {
        let (c, sn) = tp.mul(lam).cos_sin();
        for i in 0..n {
            let xi = &x[i];
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                let w = xi.mul(&x[j]);
                re[i][j] = re[i][j].add(&c.mul(&w));
                im[i][j] = im[i][j].add(&sn.mul(&w));
            }
        }
    }
    UnitaryMatrix { re, im }
}

/// Repeated fidelity evaluation for one vertex pair: weights in doubles,
/// phases reduced in fixed point per call.
pub struct PairEvaluator {
    eigenvalues: Vec<PReal>,
    weights: Vec<f64>,
    bits: u32,
}

impl PairEvaluator {
    pub fn new(s: &SpectralData, u: usize, v: usize) -> PairEvaluator {
        let weights = s
            .eigenvectors()
            .iter()
            .map(|x| x[u].mul(&x[v]).to_f64())
            .collect();
        PairEvaluator {
            eigenvalues: s.eigenvalues().to_vec(),
            weights,
            bits: s.bits(),
        }
    }

    /// |U(t)_{u,v}| evaluated from the spectral sum.
    pub fn fidelity(&self, t: f64) -> f64 {
        let tp = PReal::from_f64(t, self.bits);
        let mut re = 0.0;
        let mut im = 0.0;
        for (lam, w) in self.eigenvalues.iter().zip(&self.weights) {
            if *w == 0.0 {
                continue;
            }
            let phase = tp.mul(lam).mod_two_pi().to_f64();
            re += w * phase.cos();
            im += w * phase.sin();
        }
        (re * re + im * im).sqrt()
    }

    fn spread(&self) -> f64 {
        match (self.eigenvalues.first(), self.eigenvalues.last()) {
            (Some(lo), Some(hi)) => (hi.to_f64() - lo.to_f64()).abs(),
            _ => 0.0,
        }
    }
}

/// One-shot |U(t)_{u,v}| straight from the spectral sum.
pub fn fidelity(s: &SpectralData, u: usize, v: usize, t: f64) -> f64 {
    PairEvaluator::new(s, u, v).fidelity(t)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferSearch {
    pub t: f64,
    pub fidelity: f64,
    /// True when fidelity >= 1 - epsilon was reached inside [0, t_max].
    pub reached_threshold: bool,
}

/// Coarse scan at step pi/(4*spread) with golden-section refinement of
/// each bracketed local maximum; returns the first refined time crossing
/// 1 - epsilon, otherwise the best candidate seen.
pub fn search_transfer_time(
    s: &SpectralData,
    u: usize,
    v: usize,
    epsilon: f64,
    t_max: f64,
) -> TransferSearch {
    assert!(epsilon > 0.0 && epsilon < 1.0, "epsilon must be in (0,1)");
    assert!(t_max > 0.0, "t_max must be positive");
    let eval = PairEvaluator::new(s, u, v);
    let spread = eval.spread();
    let step = if spread > 1e-9 {
        std::f64::consts::PI / (4.0 * spread)
    } else {
        t_max / 1024.0
    };
    let threshold = 1.0 - epsilon;

    let mut best_t = 0.0;
    let mut best_f = eval.fidelity(0.0);
    let mut prev2: Option<(f64, f64)> = None;
    let mut prev: Option<(f64, f64)> = None;
    let mut k = 0u64;
    loop {
        let t = (k as f64) * step;
        if t > t_max {
            break;
        }
        let f = eval.fidelity(t);
        if f > best_f {
            best_f = f;
            best_t = t;
        }
        if let (Some((ta, fa)), Some((_, fb))) = (prev2, prev) {
            if fb >= fa && fb >= f {
                let (rt, rf) = golden_refine(&eval, ta, t);
                if rf > best_f {
                    best_f = rf;
                    best_t = rt;
                }
                if rf >= threshold {
                    return TransferSearch {
                        t: rt,
                        fidelity: rf,
                        reached_threshold: true,
                    };
                }
            }
        }
        prev2 = prev;
        prev = Some((t, f));
        k += 1;
    }
    TransferSearch {
        t: best_t,
        fidelity: best_f,
        reached_threshold: best_f >= threshold,
    }
}

fn golden_refine(eval: &PairEvaluator, mut lo: f64, mut hi: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = hi - (hi - lo) * INV_PHI;
    let mut d = lo + (hi - lo) * INV_PHI;
    let mut fc = eval.fidelity(c);
    let mut fd = eval.fidelity(d);
    while hi - lo > 1e-10 {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * INV_PHI;
            fc = eval.fidelity(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * INV_PHI;
            fd = eval.fidelity(d);
        }
    }
    let mid = 0.5 * (lo + hi);
    (mid, eval.fidelity(mid))
}

#[derive(Debug, Clone)]
pub struct FidelityTrace {
    pub times: Vec<f64>,
    pub fidelities: Vec<f64>,
    pub u: usize,
    pub v: usize,
    /// (t, fidelity) at the sampled argmax.
    pub best: (f64, f64),
}

/// Evaluates the fidelity on an ascending grid.
pub fn fidelity_trace(
    s: &SpectralData,
    u: usize,
    v: usize,
    t_grid: &[f64],
) -> Result<FidelityTrace> {
    if t_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let eval = PairEvaluator::new(s, u, v);
    let mut fidelities = Vec::with_capacity(t_grid.len());
    let mut best = (t_grid[0], f64::MIN);
    for &t in t_grid {
        let f = eval.fidelity(t);
        if f > best.1 {
            best = (t, f);
        }
        fidelities.push(f);
    }
    Ok(FidelityTrace {
        times: t_grid.to_vec(),
        fidelities,
        u,
        v,
        best,
    })
}

impl FidelityTrace {
    /// CSV with header `t,fidelity`, 17 significant digits per value.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,fidelity\n");
        for (t, f) in self.times.iter().zip(&self.fidelities) {
            out.push_str(&format_sig17(*t));
            out.push(',');
            out.push_str(&format_sig17(*f));
            out.push('\n');
        }
        out
    }
}

/// Decimal with exactly 17 significant digits, no exponent.
pub fn format_sig17(x: f64) -> String {
    if x == 0.0 {
        return "0.0000000000000000".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (16 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}
