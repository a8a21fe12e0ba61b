//! Entropic analysis of quantum and classical erasure-correcting codes.
//!
//! The crate is organised bottom-up:
//!
//! - [`tensor`]: dense complex states and operators over labelled composite
//!   systems (tensor products, subsystem unitaries, partial traces, spectra,
//!   Haar sampling).
//! - [`entropy`]: Shannon and von Neumann entropies and the derived
//!   conditional, mutual, conditional-mutual and ternary quantities, plus
//!   tripartite entropy diagrams.
//! - [`code`]: quantum and classical code models, the built-in example codes
//!   and the text code-file format.
//! - [`channel`]: the erasure channel with an explicit environment, the
//!   mutual entanglement `M` and the loss `L`.
//! - [`verify`]: entropic and Knill-Laflamme correction conditions, classical
//!   distance and entropy checks, Singleton bounds and the cloning number.
//! - [`search`]: derivative-free search for small codes satisfying the
//!   entropic erasure condition.
//!
//! Basis ordering is big-endian throughout: part 0 of a layout is the most
//! significant tensor factor.

pub mod channel;
pub mod code;
pub mod entropy;
mod error;
pub mod search;
pub mod tensor;
pub mod tol;
pub mod verify;

pub use error::{Error, Result};
