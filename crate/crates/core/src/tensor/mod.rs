//! Dense complex linear algebra over labelled composite systems.

mod layout;
mod linalg;
pub(crate) mod random;
pub(crate) mod state;

pub use layout::{max_total_dim, Part, SubsystemLayout, DEFAULT_MAX_DIM, MAX_DIM_ENV};
pub use linalg::{hermitian_eigenvalues, kron, kron_vec};
pub use random::{
    haar_unitary_with, random_pure_state, random_pure_state_on, random_pure_state_with,
    random_unitary,
};
pub use state::{DensityMatrix, PureState, UnitaryOp};

pub use num_complex::Complex64 as C64;

pub type CMatrix = nalgebra::DMatrix<C64>;
pub type CVector = nalgebra::DVector<C64>;
