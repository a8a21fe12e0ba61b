use super::layout::SubsystemLayout;
use super::linalg::{hermitian_deviation, hermitian_eigenvalues, kron, kron_vec, unitarity_deviation};
use super::{CMatrix, CVector, C64};
use crate::{tol, Error, Result};

/// Unit-norm state vector over a [`SubsystemLayout`].
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    layout: SubsystemLayout,
    amps: CVector,
}

impl PureState {
    pub fn new(layout: SubsystemLayout, amps: CVector) -> Result<Self> {
        if amps.len() != layout.total_dim() {
            return Err(Error::DimensionMismatch { expected: layout.total_dim(), found: amps.len() });
        }
        let norm = amps.norm();
        if (norm - 1.0).abs() > tol::NORM {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { layout, amps })
    }

    /// Normalises `amps` before construction; fails on the zero vector.
    pub fn normalized(layout: SubsystemLayout, amps: CVector) -> Result<Self> {
        let norm = amps.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        Self::new(layout, amps / C64::new(norm, 0.0))
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(layout: SubsystemLayout, index: usize) -> Result<Self> {
        let dim = layout.total_dim();
        if index >= dim {
            return Err(Error::DimensionMismatch { expected: dim, found: index + 1 });
        }
        let mut amps = CVector::zeros(dim);
        amps[index] = C64::new(1.0, 0.0);
        Ok(Self { layout, amps })
    }

    pub(crate) fn from_parts(layout: SubsystemLayout, amps: CVector) -> Self {
        debug_assert_eq!(layout.total_dim(), amps.len());
        Self { layout, amps }
    }

    pub fn layout(&self) -> &SubsystemLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// `self ⊗ other`, layouts concatenated.
    pub fn tensor(&self, other: &PureState) -> Result<Self> {
        let layout = self.layout.concat(&other.layout)?;
        Ok(Self { layout, amps: kron_vec(&self.amps, &other.amps)? })
    }

    /// Applies `identity ⊗ u` where `u` acts on its target labels (in the
    /// order given by the operator, not necessarily layout order).
    pub fn apply(&self, u: &UnitaryOp) -> Result<Self> {
        let sel = self.layout.resolve(&u.targets)?;
        let d_sel: usize = sel.iter().map(|&i| self.layout.parts()[i].dim).product();
        if u.matrix.nrows() != d_sel {
            return Err(Error::DimensionMismatch { expected: d_sel, found: u.matrix.nrows() });
        }
        let (d_sel, d_rest, table) = self.layout.split_table(&sel);
        let mut out = CVector::zeros(self.amps.len());
        let mut block = CVector::zeros(d_sel);
        for r in 0..d_rest {
            let row = &table[r * d_sel..(r + 1) * d_sel];
            for (s, &f) in row.iter().enumerate() {
                block[s] = self.amps[f];
            }
            let moved = &u.matrix * &block;
            for (s, &f) in row.iter().enumerate() {
                out[f] = moved[s];
            }
        }
        Ok(Self { layout: self.layout.clone(), amps: out })
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn to_density(&self) -> DensityMatrix {
        let m = &self.amps * self.amps.adjoint();
        DensityMatrix::from_parts(self.layout.clone(), m)
    }

    /// Reduced state on `keep`, parts kept in layout order.
    pub fn partial_trace<S: AsRef<str>>(&self, keep: &[S]) -> Result<DensityMatrix> {
        let sel = sorted_selection(&self.layout, keep)?;
        let a = self.coefficient_matrix(&sel);
        Ok(DensityMatrix::from_parts(self.layout.select(&sel)?, &a * a.adjoint()))
    }

    /// Nonzero spectrum of the reduced state on the parts at `positions`,
    /// computed from whichever Gram matrix (`A A†` or `A† A`) is smaller.
    pub(crate) fn reduced_spectrum(&self, positions: &[usize]) -> Result<Vec<f64>> {
        if positions.is_empty() || positions.len() == self.layout.len() {
            // trivial marginal or the whole (pure) state
            return Ok(vec![self.amps.norm_squared()]);
        }
        let a = self.coefficient_matrix(positions);
        let gram = if a.nrows() <= a.ncols() { &a * a.adjoint() } else { a.adjoint() * &a };
        hermitian_eigenvalues(&gram)
    }

    /// Matrix `A[s, r] = ψ(s, r)` with `s` over the selected parts.
    fn coefficient_matrix(&self, sel: &[usize]) -> CMatrix {
        let (d_sel, d_rest, table) = self.layout.split_table(sel);
        CMatrix::from_fn(d_sel, d_rest, |s, r| self.amps[table[r * d_sel + s]])
    }
}

/// Marginal spectrum of raw amplitudes given a precomputed split table
/// (see `SubsystemLayout::split_table`), for hot loops that reuse one layout.
pub(crate) fn split_spectrum(amps: &CVector, d_sel: usize, d_rest: usize, table: &[usize]) -> Result<Vec<f64>> {
    let a = CMatrix::from_fn(d_sel, d_rest, |s, r| amps[table[r * d_sel + s]]);
    let gram = if a.nrows() <= a.ncols() { &a * a.adjoint() } else { a.adjoint() * &a };
    hermitian_eigenvalues(&gram)
}

fn sorted_selection<S: AsRef<str>>(layout: &SubsystemLayout, keep: &[S]) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::EmptySelection);
    }
    let mut sel = layout.resolve(keep)?;
    sel.sort_unstable();
    Ok(sel)
}

/// Hermitian, unit-trace, positive semidefinite matrix over a layout.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    layout: SubsystemLayout,
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validating constructor: Hermitian within [`tol::HERM`], trace one
    /// within [`tol::NORM`], no eigenvalue below `-tol::EIG`.
    pub fn new(layout: SubsystemLayout, matrix: CMatrix) -> Result<Self> {
        let dim = layout.total_dim();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: matrix.nrows() });
        }
        let deviation = hermitian_deviation(&matrix);
        if deviation > tol::HERM {
            return Err(Error::NotHermitian { deviation });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > tol::NORM || tr.im.abs() > tol::NORM {
            return Err(Error::NotNormalized { norm: tr.re });
        }
        let ev = hermitian_eigenvalues(&matrix)?;
        if let Some(&min) = ev.last() {
            if min < -tol::EIG {
                return Err(Error::NegativeEigenvalue { value: min });
            }
        }
        Ok(Self { layout, matrix })
    }

    /// Diagonal state with the given probabilities.
    pub fn diagonal(layout: SubsystemLayout, probs: &[f64]) -> Result<Self> {
        let dim = layout.total_dim();
        if probs.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: probs.len() });
        }
        let m = CMatrix::from_fn(dim, dim, |i, j| if i == j { C64::new(probs[i], 0.0) } else { C64::new(0.0, 0.0) });
        Self::new(layout, m)
    }

    pub(crate) fn from_parts(layout: SubsystemLayout, matrix: CMatrix) -> Self {
        Self { layout, matrix }
    }

    pub fn layout(&self) -> &SubsystemLayout {
        &self.layout
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }

    pub fn tensor(&self, other: &DensityMatrix) -> Result<Self> {
        let layout = self.layout.concat(&other.layout)?;
        Ok(Self { layout, matrix: kron(&self.matrix, &other.matrix)? })
    }

    /// Reduced state on `keep`, parts kept in layout order.
    pub fn partial_trace<S: AsRef<str>>(&self, keep: &[S]) -> Result<DensityMatrix> {
        let sel = sorted_selection(&self.layout, keep)?;
        Ok(Self::from_parts(self.layout.select(&sel)?, self.reduce(&sel)))
    }

    pub(crate) fn reduce(&self, sel: &[usize]) -> CMatrix {
        let (d_sel, d_rest, table) = self.layout.split_table(sel);
        let mut out = CMatrix::zeros(d_sel, d_sel);
        for r in 0..d_rest {
            let row = &table[r * d_sel..(r + 1) * d_sel];
            for (i, &fi) in row.iter().enumerate() {
                for (j, &fj) in row.iter().enumerate() {
                    out[(i, j)] += self.matrix[(fi, fj)];
                }
            }
        }
        out
    }
}

/// Unitary acting on the labelled parts `targets`, combined big-endian in
/// the listed order.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryOp {
    matrix: CMatrix,
    targets: Vec<String>,
}

impl UnitaryOp {
    pub fn new<S: Into<String>>(matrix: CMatrix, targets: impl IntoIterator<Item = S>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch { expected: matrix.nrows(), found: matrix.ncols() });
        }
        let deviation = unitarity_deviation(&matrix);
        if deviation > tol::HERM {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { matrix, targets: targets.into_iter().map(Into::into).collect() })
    }

    pub(crate) fn from_parts(matrix: CMatrix, targets: Vec<String>) -> Self {
        Self { matrix, targets }
    }

    pub fn identity<S: Into<String>>(dim: usize, targets: impl IntoIterator<Item = S>) -> Self {
        Self::from_parts(CMatrix::identity(dim, dim), targets.into_iter().map(Into::into).collect())
    }

    /// Exchange of two subsystems of equal dimension `dim`:
    /// `|a⟩|b⟩ → |b⟩|a⟩`.
    pub fn swap<S: Into<String>>(dim: usize, targets: impl IntoIterator<Item = S>) -> Self {
        let n = dim * dim;
        let mut m = CMatrix::zeros(n, n);
        for a in 0..dim {
            for b in 0..dim {
                m[(b * dim + a, a * dim + b)] = C64::new(1.0, 0.0);
            }
        }
        Self::from_parts(m, targets.into_iter().map(Into::into).collect())
    }

    /// Same matrix bound to different target labels.
    pub fn on<S: Into<String>>(mut self, targets: impl IntoIterator<Item = S>) -> Self {
        self.targets = targets.into_iter().map(Into::into).collect();
        self
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn targets(&self) -> &[String] {
        &self.targets
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Max-norm distance of `U U†` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        unitarity_deviation(&self.matrix)
    }

    /// `self ⊗ other` acting on the concatenated targets.
    pub fn tensor(&self, other: &UnitaryOp) -> Result<Self> {
        let mut targets = self.targets.clone();
        targets.extend(other.targets.iter().cloned());
        Ok(Self::from_parts(kron(&self.matrix, &other.matrix)?, targets))
    }
}
