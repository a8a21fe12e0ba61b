use nalgebra::DMatrix;

use super::layout::check_dim;
use super::{CMatrix, CVector, C64};
use crate::{tol, Error, Result};

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let rows = a.nrows().checked_mul(b.nrows());
    let cols = a.ncols().checked_mul(b.ncols());
    let (rows, cols) = match (rows, cols) {
        (Some(r), Some(c)) => (r, c),
        _ => return Err(Error::DimensionOverflow { dim: usize::MAX, cap: super::max_total_dim() }),
    };
    check_dim(rows.max(cols))?;
    Ok(a.kronecker(b))
}

/// Kronecker product of two vectors.
pub fn kron_vec(a: &CVector, b: &CVector) -> Result<CVector> {
    let len = a
        .len()
        .checked_mul(b.len())
        .ok_or(Error::DimensionOverflow { dim: usize::MAX, cap: super::max_total_dim() })?;
    check_dim(len)?;
    Ok(a.kronecker(b))
}

pub(crate) fn hermitian_deviation(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut dev = 0.0f64;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Real spectrum of a Hermitian matrix, sorted in descending order.
///
/// The input is symmetrised before diagonalisation; deviations from
/// Hermiticity larger than [`tol::HERM`] are rejected.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Result<Vec<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch { expected: m.nrows(), found: m.ncols() });
    }
    let deviation = hermitian_deviation(m);
    if deviation > tol::HERM {
        return Err(Error::NotHermitian { deviation });
    }
    let n = m.nrows();
    if n == 1 {
        return Ok(vec![m[(0, 0)].re]);
    }
    let sym: CMatrix = DMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let mut vals: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

/// Max-norm distance of `u u†` from the identity.
pub(crate) fn unitarity_deviation(u: &CMatrix) -> f64 {
    let prod = u * u.adjoint();
    let n = prod.nrows();
    let mut dev = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            dev = dev.max((prod[(i, j)] - target).norm());
        }
    }
    dev
}
