//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input document; names the offending field.
    #[error("parse error in field `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("potential does not cover vertex v{0}")]
    MissingPotential(usize),

    #[error("vertex v{vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("permutation is not a bijection on the vertex set")]
    NotBijection,

    #[error("permutation is not an involution: sigma^2 != identity")]
    NotInvolution,

    #[error("permutation is not a graph automorphism: edge {{v{0}, v{1}}} is not preserved")]
    NotAutomorphism(usize, usize),

    #[error("the identity permutation is not a non-trivial involution")]
    IdentityInvolution,

    #[error("graph has {n} vertices; involution enumeration is limited to {limit}; pass sigma explicitly")]
    EnumerationLimit { n: usize, limit: usize },

    #[error("potential is not symmetric across the involution")]
    AsymmetricPotential,

    #[error("matrix has symbolic Q entries; substitute a rational value for Q first")]
    SymbolicEntries,

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("polynomial degree {degree} exceeds factorization limit {limit}; use an irreducible-mod-p certificate instead")]
    DegreeLimit { degree: usize, limit: usize },

    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,

    #[error("Q does not appear in the polynomial; the linear-in-Q irreducibility test is vacuous")]
    QAbsent,

    #[error("symbolic Q placed illegally: {0}")]
    QMisplaced(String),

    #[error("precision {digits} digits outside supported range [{min}, {max}]")]
    PrecisionOutOfRange { digits: u32, min: u32, max: u32 },

    #[error("precision {digits} digits too low for height bound {height_bound} in dimension {dim}; increase precision")]
    PrecisionTooLow {
        digits: u32,
        height_bound: u64,
        dim: usize,
    },

    #[error("vector length {got} does not match block dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vertex v{0} is fixed by the involution; pick a non-fixed vertex")]
    FixedVertex(usize),

    #[error("path length {0} is too short; need N >= 2")]
    PathTooShort(usize),

    #[error("time grid is empty")]
    EmptyGrid,

    #[error("Jacobi eigensolver failed to converge in {0} sweeps")]
    NoConvergence(usize),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
