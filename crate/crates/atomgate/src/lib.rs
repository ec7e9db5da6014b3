//! Simulation toolkit for a selective two-qubit gate on neutral atoms held in
//! near-field Fresnel diffraction (NFFD) traps overlaid with a state-dependent
//! optical lattice.
//!
//! The crate is organised around the steps of the gate protocol:
//!
//! - [`units`], [`grid`], [`wavefunction`]: scaled units (recoil energy,
//!   lattice wavelength), uniform Cartesian grids and normalized complex
//!   amplitude fields with overlap/fidelity primitives.
//! - [`potentials`]: the diffraction trap (disk quadrature of the
//!   Rayleigh–Sommerfeld field), the optical lattice, the state-dependent
//!   moving lattices and their time schedules, and a composable
//!   time-dependent potential.
//! - [`dynamics`]: imaginary-time ground-state relaxation and split-operator
//!   spectral propagation of the time-dependent Schrödinger equation with
//!   fidelity tracing.
//! - [`protocol`]: the gate steps (adiabatic trap switch-off, state-dependent
//!   transport, spectator check), the collisional phase and hold time, the
//!   two-qubit gate matrix, and the overall time/fidelity budget.
//! - [`config`], [`output`], [`cli`]: the batch harness around all of the
//!   above (TOML scenario configs, CSV export, parameter sweeps).
//!
//! All dynamics run in scaled units: lengths in the lattice wavelength,
//! energies in the recoil energy, times in `ħ/E_r`. Dimensional values appear
//! only at the configuration boundary.

pub mod cli;
pub mod config;
pub mod constants;
pub mod dynamics;
pub mod error;
pub mod grid;
pub mod output;
pub mod potentials;
pub mod protocol;
pub mod quadrature;
pub mod units;
pub mod wavefunction;

pub use error::{Error, Result};
pub use grid::Grid;
pub use units::{PhysicalParams, ScaledUnits};
pub use wavefunction::Wavefunction;
