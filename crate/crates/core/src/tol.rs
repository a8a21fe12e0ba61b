//! Default numerical tolerances.

/// State normalisation and codeword orthonormality.
pub const NORM: f64 = 1e-10;
/// Hermiticity and unitarity residuals.
pub const HERM: f64 = 1e-10;
/// Eigenvalues in `[-EIG, 0)` are treated as roundoff and clamped to zero.
pub const EIG: f64 = 1e-9;
/// Comparisons between entropies (bits).
pub const ENT: f64 = 1e-8;
/// Knill-Laflamme matrix elements.
pub const KL: f64 = 1e-9;
/// Default convergence target of the code search (bits).
pub const SEARCH: f64 = 1e-6;

/// Tolerance pair used by the verification routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub ent: f64,
    pub kl: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { ent: ENT, kl: KL }
    }
}

impl Tolerances {
    /// Same value for both entropy and matrix-element comparisons.
    pub fn uniform(tol: f64) -> Self {
        Self { ent: tol, kl: tol }
    }
}
