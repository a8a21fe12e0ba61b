use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::layout::{check_dim, SubsystemLayout};
use super::state::{PureState, UnitaryOp};
use super::{CMatrix, CVector, C64};
use crate::{Error, Result};

pub(crate) fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im)
}

/// Haar-distributed `dim × dim` unitary.
///
/// QR of a complex Ginibre matrix, with the columns of `Q` rephased by
/// `r_ii / |r_ii|` so the result does not inherit the QR sign convention.
pub fn haar_unitary_with<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<CMatrix> {
    if dim == 0 {
        return Err(Error::Precondition("unitary dimension must be positive".into()));
    }
    check_dim(dim)?;
    let g = CMatrix::from_fn(dim, dim, |_, _| gaussian(rng));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    Ok(q)
}

/// Seeded Haar unitary with no target labels bound yet (see [`UnitaryOp::on`]).
pub fn random_unitary(dim: usize, seed: u64) -> Result<UnitaryOp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(UnitaryOp::from_parts(haar_unitary_with(&mut rng, dim)?, Vec::new()))
}

/// Haar-uniform unit vector over `layout`.
pub fn random_pure_state_with<R: Rng + ?Sized>(rng: &mut R, layout: SubsystemLayout) -> Result<PureState> {
    let dim = layout.total_dim();
    loop {
        let v = CVector::from_fn(dim, |_, _| gaussian(rng));
        let norm = v.norm();
        if norm > 0.0 {
            return Ok(PureState::from_parts(layout, v / C64::new(norm, 0.0)));
        }
    }
}

pub fn random_pure_state_on(layout: SubsystemLayout, seed: u64) -> Result<PureState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_pure_state_with(&mut rng, layout)
}

/// Seeded random state on a single part labelled `S`.
pub fn random_pure_state(dim: usize, seed: u64) -> Result<PureState> {
    if dim == 0 {
        return Err(Error::Precondition("state dimension must be positive".into()));
    }
    random_pure_state_on(SubsystemLayout::new([("S", dim)])?, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol;

    #[test]
    fn unitary_is_unitary_and_deterministic() {
        for seed in 0..10 {
            let u = random_unitary(8, seed).unwrap();
            assert!(u.unitarity_residual() < tol::HERM);
            assert_eq!(u, random_unitary(8, seed).unwrap());
        }
        assert_ne!(random_unitary(4, 1).unwrap(), random_unitary(4, 2).unwrap());
    }

    #[test]
    fn one_dimensional_cases() {
        let u = random_unitary(1, 5).unwrap();
        assert!((u.matrix()[(0, 0)].norm() - 1.0).abs() < 1e-15);
        let s = random_pure_state(1, 5).unwrap();
        assert!((s.amplitudes()[0].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn pure_state_normalised_and_deterministic() {
        let s = random_pure_state(16, 42).unwrap();
        assert!((s.norm() - 1.0).abs() < tol::NORM);
        assert_eq!(s, random_pure_state(16, 42).unwrap());
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(random_unitary(0, 0).is_err());
        assert!(random_pure_state(0, 0).is_err());
    }

    #[test]
    fn haar_first_moment() {
        // E|U_00|^2 = 1/d for Haar; the unrephased QR is biased on the diagonal phase,
        // so also check E[U_00] ≈ 0.
        let d = 3;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let trials = 4000;
        let (mut sq, mut mean) = (0.0, C64::new(0.0, 0.0));
        for _ in 0..trials {
            let u = haar_unitary_with(&mut rng, d).unwrap();
            sq += u[(0, 0)].norm_sqr();
            mean += u[(0, 0)];
        }
        sq /= trials as f64;
        mean /= trials as f64;
        assert!((sq - 1.0 / d as f64).abs() < 0.02, "{sq}");
        assert!(mean.norm() < 0.03, "{mean}");
    }
}
