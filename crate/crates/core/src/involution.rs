//! Involutions of a graph and the block decomposition they induce.
//!
//! An order-2 automorphism sigma splits the vertex set into a fixed set S
//! and n swapped pairs. Under a sigma-symmetric potential the Hamiltonian
//! becomes block-structured, and its spectrum is the disjoint union of the
//! spectra of
//!
//! ```text
//! H+ = [ H' + A_sigma   A_S ]        H- = H' - A_sigma
//!      [ 2 A_S^T        H_S ]
//! ```
//!
//! with eigenvectors lifting as [a a b] and [c -c 0].

use crate::error::{Error, Result};
use crate::graph::{check_symmetric_potential, Graph, Hamiltonian};
use crate::value::{rat_from_str, AffineQ};

/// A verified non-trivial involution with its fixed structure and a
/// deterministic side labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionInfo {
    /// 0-indexed images.
    sigma: Vec<usize>,
    /// Fixed vertices, sorted, 0-indexed.
    fixed: Vec<usize>,
    /// Number of edges {u, sigma u}.
    fixed_edge_count: usize,
    /// Representatives of the 2-orbits: the smaller index of each pair.
    left: Vec<usize>,
}

impl InvolutionInfo {
    /// Image of a 0-indexed vertex.
    pub fn image(&self, v: usize) -> usize {
        self.sigma[v]
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// 1-indexed image vector, as serialized.
    pub fn sigma_one_indexed(&self) -> Vec<usize> {
        self.sigma.iter().map(|&v| v + 1).collect()
    }

    pub fn fixed_vertices(&self) -> &[usize] {
        &self.fixed
    }

    pub fn fixed_edge_count(&self) -> usize {
        self.fixed_edge_count
    }

    /// Number of vertices on either side.
    pub fn side_size(&self) -> usize {
        self.left.len()
    }

    pub fn left_side(&self) -> &[usize] {
        &self.left
    }

    pub fn right_side(&self) -> Vec<usize> {
        self.left.iter().map(|&v| self.sigma[v]).collect()
    }

    pub fn is_fixed(&self, v: usize) -> bool {
        self.sigma[v] == v
    }

    /// Position of v's orbit representative within the left side, for any
    /// non-fixed v.
    pub fn orbit_index(&self, v: usize) -> Option<usize> {
        let rep = v.min(self.sigma[v]);
        if rep == self.sigma[rep] {
            return None;
        }
        self.left.iter().position(|&l| l == rep)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "sigma": self.sigma_one_indexed() })
    }
}

/// Parses {"sigma": [...]} with 1-indexed images.
pub fn parse_involution(text: &str, g: &Graph) -> Result<InvolutionInfo> {
    #[derive(serde::Deserialize)]
    struct Doc {
        sigma: Vec<usize>,
    }
    let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Parse {
        field: "sigma".into(),
        message: e.to_string(),
    })?;
    verify_involution(g, &doc.sigma)
}

/// Checks that a 1-indexed permutation is a non-identity involutive
/// automorphism of g and computes its fixed structure.
pub fn verify_involution(g: &Graph, perm_one_indexed: &[usize]) -> Result<InvolutionInfo> {
    let n = g.vertex_count();
    if perm_one_indexed.len() != n {
        return Err(Error::NotBijection);
    }
    let mut sigma = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for (i, &img) in perm_one_indexed.iter().enumerate() {
        if img < 1 || img > n || seen[img - 1] {
            return Err(Error::NotBijection);
        }
        seen[img - 1] = true;
        sigma[i] = img - 1;
    }
    if (0..n).all(|v| sigma[v] == v) {
        return Err(Error::IdentityInvolution);
    }
    if (0..n).any(|v| sigma[sigma[v]] != v) {
        return Err(Error::NotInvolution);
    }
    for &(a, b) in g.edges() {
        if !g.has_edge(sigma[a], sigma[b]) {
            return Err(Error::NotAutomorphism(a + 1, b + 1));
        }
    }
    let fixed: Vec<usize> = (0..n).filter(|&v| sigma[v] == v).collect();
    let left: Vec<usize> = (0..n).filter(|&v| sigma[v] != v && v < sigma[v]).collect();
    let fixed_edge_count = left.iter().filter(|&&v| g.has_edge(v, sigma[v])).count();
    Ok(InvolutionInfo {
        sigma,
        fixed,
        fixed_edge_count,
        left,
    })
}

pub const ENUMERATION_LIMIT: usize = 10;

/// All non-identity involutive automorphisms, ordered lexicographically by
/// image vector. Exhaustive over pairings, so only sensible for small N.
pub fn enumerate_involutions(g: &Graph) -> Result<Vec<InvolutionInfo>> {
    let n = g.vertex_count();
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut sigma: Vec<Option<usize>> = vec![None; n];
    fn rec(g: &Graph, sigma: &mut Vec<Option<usize>>, v: usize, out: &mut Vec<InvolutionInfo>) {
        let n = sigma.len();
        if v == n {
            let perm: Vec<usize> = sigma.iter().map(|s| s.unwrap() + 1).collect();
            if let Ok(info) = verify_involution(g, &perm) {
                out.push(info);
            }
            return;
        }
        if sigma[v].is_some() {
            rec(g, sigma, v + 1, out);
            return;
        }
        // v stays fixed
        sigma[v] = Some(v);
        rec(g, sigma, v + 1, out);
        sigma[v] = None;
        // or v pairs with a later unassigned vertex of equal degree
        for w in (v + 1)..n {
            if sigma[w].is_some() || g.degree(v) != g.degree(w) {
                continue;
            }
            sigma[v] = Some(w);
            sigma[w] = Some(v);
            rec(g, sigma, v + 1, out);
            sigma[v] = None;
            sigma[w] = None;
        }
    }
    rec(g, &mut sigma, 0, &mut out);
    out.sort_by(|a, b| a.sigma.cmp(&b.sigma));
    Ok(out)
}

/// The six matrices of the involution block split. Entries may be affine
/// in Q. Indices follow the side labeling: rows/cols of h_prime, a_sigma,
/// h_minus run over the left side in order, h_s over the fixed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub h_prime: Vec<Vec<AffineQ>>,
    pub a_sigma: Vec<Vec<AffineQ>>,
    pub a_s: Vec<Vec<AffineQ>>,
    pub h_s: Vec<Vec<AffineQ>>,
    pub h_plus: Vec<Vec<AffineQ>>,
    pub h_minus: Vec<Vec<AffineQ>>,
}

impl BlockDecomposition {
    pub fn to_json(&self) -> serde_json::Value {
        let ser = |m: &Vec<Vec<AffineQ>>| -> serde_json::Value {
            serde_json::json!(m
                .iter()
                .map(|row| row
                    .iter()
                    .map(|e| e.to_string_canonical())
                    .collect::<Vec<_>>())
                .collect::<Vec<_>>())
        };
        serde_json::json!({
            "h_prime": ser(&self.h_prime),
            "a_sigma": ser(&self.a_sigma),
            "a_s": ser(&self.a_s),
            "h_s": ser(&self.h_s),
            "h_plus": ser(&self.h_plus),
            "h_minus": ser(&self.h_minus),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<BlockDecomposition> {
        let de = |key: &str| -> Result<Vec<Vec<AffineQ>>> {
            let arr = v
                .get(key)
                .and_then(|m| m.as_array())
                .ok_or_else(|| Error::Parse {
                    field: key.into(),
                    message: "expected matrix".into(),
                })?;
            arr.iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| Error::Parse {
                            field: key.into(),
                            message: "expected row array".into(),
                        })?
                        .iter()
                        .map(|e| {
                            let s = e.as_str().ok_or_else(|| Error::Parse {
                                field: key.into(),
                                message: "entries must be strings".into(),
                            })?;
                            if s.starts_with("aff:") || s == "Q" {
                                AffineQ::parse(s)
                            } else {
                                Ok(AffineQ::from_rat(rat_from_str(s)?))
                            }
                        })
                        .collect()
                })
                .collect()
        };
        Ok(BlockDecomposition {
            h_prime: de("h_prime")?,
            a_sigma: de("a_sigma")?,
            a_s: de("a_s")?,
            h_s: de("h_s")?,
            h_plus: de("h_plus")?,
            h_minus: de("h_minus")?,
        })
    }
}

/// Splits the Hamiltonian along the involution. Requires the potential to
/// be symmetric across sigma.
pub fn decompose(h: &Hamiltonian, inv: &InvolutionInfo) -> Result<BlockDecomposition> {
    if !check_symmetric_potential(h.potential(), inv) {
        return Err(Error::AsymmetricPotential);
    }
    let left = inv.left_side().to_vec();
    let right = inv.right_side();
    let fixed = inv.fixed_vertices().to_vec();
    let n = left.len();
    let s = fixed.len();

    let at = |i: usize, j: usize| h.entry(i, j).clone();
    let h_prime: Vec<Vec<AffineQ>> = left
        .iter()
        .map(|&a| left.iter().map(|&b| at(a, b)).collect())
        .collect();
    let a_sigma: Vec<Vec<AffineQ>> = left
        .iter()
        .map(|&a| right.iter().map(|&b| at(a, b)).collect())
        .collect();
    let a_s: Vec<Vec<AffineQ>> = left
        .iter()
        .map(|&a| fixed.iter().map(|&b| at(a, b)).collect())
        .collect();
    let h_s: Vec<Vec<AffineQ>> = fixed
        .iter()
        .map(|&a| fixed.iter().map(|&b| at(a, b)).collect())
        .collect();

    let mut h_plus = vec![vec![AffineQ::zero(); n + s]; n + s];
    for i in 0..n {
        for j in 0..n {
            h_plus[i][j] = h_prime[i][j].add(&a_sigma[i][j]);
        }
        for j in 0..s {
            h_plus[i][n + j] = a_s[i][j].clone();
        }
    }
    for i in 0..s {
        for j in 0..n {
            h_plus[n + i][j] = a_s[j][i].add(&a_s[j][i]);
        }
        for j in 0..s {
            h_plus[n + i][n + j] = h_s[i][j].clone();
        }
    }
    let h_minus: Vec<Vec<AffineQ>> = (0..n)
        .map(|i| (0..n).map(|j| h_prime[i][j].sub(&a_sigma[i][j])).collect())
        .collect();

    Ok(BlockDecomposition {
        h_prime,
        a_sigma,
        a_s,
        h_s,
        h_plus,
        h_minus,
    })
}

/// Lifts an H+ eigenvector [a; b] to [a; a; b] in original vertex order.
pub fn lift_plus<T: Clone>(vec: &[T], inv: &InvolutionInfo, zero: T) -> Result<Vec<T>> {
    let n = inv.side_size();
    let s = inv.fixed_vertices().len();
    if vec.len() != n + s {
        return Err(Error::LengthMismatch {
            expected: n + s,
            got: vec.len(),
        });
    }
    let total = 2 * n + s;
    let mut out = vec![zero; total];
    for (i, &l) in inv.left_side().iter().enumerate() {
        out[l] = vec[i].clone();
        out[inv.image(l)] = vec[i].clone();
    }
    for (i, &f) in inv.fixed_vertices().iter().enumerate() {
        out[f] = vec[n + i].clone();
    }
    Ok(out)
}

/// Lifts an H- eigenvector c to [c; -c; 0] in original vertex order.
/// Negation is supplied by the caller so the lift works for any scalar.
pub fn lift_minus<T: Clone, F: Fn(&T) -> T>(
    vec: &[T],
    inv: &InvolutionInfo,
    zero: T,
    neg: F,
) -> Result<Vec<T>> {
    let n = inv.side_size();
    if vec.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: vec.len(),
        });
    }
    let total = 2 * n + inv.fixed_vertices().len();
    let mut out = vec![zero; total];
    for (i, &l) in inv.left_side().iter().enumerate() {
        out[l] = vec[i].clone();
        out[inv.image(l)] = neg(&vec[i]);
    }
    Ok(out)
}
