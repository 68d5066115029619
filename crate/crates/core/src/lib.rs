//! Damage-informed transformation field analysis (D-TFA) for fiber-reinforced
//! composites.
//!
//! The crate is organized along the pipeline:
//!
//! * [`tensor`] — symmetric second/fourth order tensors in the orthonormal
//!   (Mandel) component convention; all formulas below are literal matrix
//!   algebra in this basis.
//! * [`microstructure`] — periodic RVE generation (random sequential
//!   adsorption) and rasterization onto a regular pixel grid.
//! * [`damage`] — local isotropic damage law ω(κ), Hashin strain factors and
//!   the ψ mixing weight.
//! * [`fem`] — periodic small-strain FE solves on the pixel grid (elastic,
//!   eigenstrain-loaded, and a full nonlinear local-damage reference solver).
//! * [`clustering`] — response-vector construction and phase-wise k-means
//!   partitioning of the RVE.
//! * [`offline`] — influence tensors, homogenized tensors, and the persisted
//!   ROM database.
//! * [`online`] — the reduced-order material-point driver (Newton–Raphson on
//!   the transformation-field equations with damage evolution).
//! * [`macroscale`] — coarse plane FE driver with the online model at each
//!   integration point; open-hole specimen runs and crack-path extraction.
//! * [`export`] — deterministic CSV / legacy-VTK / PGM writers.

pub mod clustering;
pub mod damage;
pub mod error;
pub mod export;
pub mod fem;
pub mod macroscale;
pub mod microstructure;
pub mod offline;
pub mod online;
pub mod tensor;

pub use error::{Error, Result};
pub use tensor::{SymTensor2, Tensor4};
