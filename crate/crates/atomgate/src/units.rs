//! Dimensional inputs and the scaled unit system used by all dynamics.
//!
//! Lengths are measured in the optical-lattice wavelength `λ_OL`, energies in
//! the recoil energy `E_r = ħ²k_OL²/2m`, and times in `τ = ħ/E_r`. In these
//! units the Schrödinger equation reads `i ∂ψ/∂t = -(1/2M) ∇²ψ + V ψ` with
//! the dimensionless mass `M = 2π²`.

use std::f64::consts::PI;

use crate::constants::{HBAR, MASS_RB87, PLANCK};
use crate::error::{Error, Result};

/// Effective dimensionless mass in lattice-scaled units (lengths in λ_OL,
/// energies in E_r, times in ħ/E_r): `M = 2π²`.
pub const LATTICE_MASS: f64 = 2.0 * PI * PI;

/// All dimensional inputs of the trap/lattice design (SI units).
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalParams {
    /// Aperture radius (m).
    pub aperture_radius: f64,
    /// Trap laser wavelength λ_F (m).
    pub trap_wavelength: f64,
    /// Trap laser intensity I_0 (W/m²).
    pub trap_intensity: f64,
    /// Atomic transition wavelength λ_0 (m).
    pub atomic_line: f64,
    /// z-coordinate of the trap minimum z_m (m).
    pub trap_minimum: f64,
    /// Optical lattice wavelength λ_OL (m).
    pub lattice_wavelength: f64,
    /// Diffraction-trap depth scale U_0 (J).
    pub trap_depth: f64,
    /// Optical lattice depth V_0 (J).
    pub lattice_depth: f64,
    /// Lattice beam waist w (m).
    pub waist: f64,
    /// s-wave scattering length a_s (m).
    pub scattering_length: f64,
    /// Atomic mass (kg).
    pub atomic_mass: f64,
    /// Half of the spontaneous decay rate Γ_e (rad/s).
    pub half_linewidth: f64,
}

impl Default for PhysicalParams {
    /// Working parameters of the ⁸⁷Rb design: 795.118 nm trap light on the
    /// D1 line (794.979 nm), a 1.5 λ_F aperture, a 785 nm lattice with
    /// w = 4 λ_OL, trap depths h×1.03 MHz / h×147 kHz, a_s = 5.19 nm.
    fn default() -> Self {
        let trap_wavelength = 795.118e-9;
        let lattice_wavelength = 785e-9;
        PhysicalParams {
            aperture_radius: 1.5 * trap_wavelength,
            trap_wavelength,
            trap_intensity: 2.5e9, // 2.5e5 W/cm²
            atomic_line: 794.979e-9,
            trap_minimum: 1.7e-6,
            lattice_wavelength,
            trap_depth: PLANCK * 1.03e6,
            lattice_depth: PLANCK * 1.47e5,
            waist: 4.0 * lattice_wavelength,
            scattering_length: 5.19e-9,
            atomic_mass: MASS_RB87,
            half_linewidth: crate::constants::GAMMA_RB87_D1 / 2.0,
        }
    }
}

impl PhysicalParams {
    /// Check the basic sign/consistency requirements.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("aperture_radius", self.aperture_radius),
            ("trap_wavelength", self.trap_wavelength),
            ("atomic_line", self.atomic_line),
            ("lattice_wavelength", self.lattice_wavelength),
            ("waist", self.waist),
            ("scattering_length", self.scattering_length),
            ("atomic_mass", self.atomic_mass),
            ("trap_minimum", self.trap_minimum),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be strictly positive, got {v}"
                )));
            }
        }
        for (name, v) in [
            ("trap_intensity", self.trap_intensity),
            ("trap_depth", self.trap_depth),
            ("lattice_depth", self.lattice_depth),
            ("half_linewidth", self.half_linewidth),
        ] {
            if v < 0.0 || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be nonnegative and finite, got {v}"
                )));
            }
        }
        if self.trap_wavelength == self.atomic_line {
            return Err(Error::InvalidParameter(
                "trap_wavelength must differ from atomic_line (zero detuning)".into(),
            ));
        }
        Ok(())
    }
}

/// The scaled unit system: recoil energy, its time unit, and the lattice
/// wavelength as the unit of length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledUnits {
    /// Recoil energy E_r = ħ²k_OL²/2m (J).
    pub recoil_energy: f64,
    /// Time unit τ = ħ/E_r (s).
    pub time_unit: f64,
    /// Length unit λ_OL (m).
    pub length_unit: f64,
    /// Lattice wavenumber k_OL = 2π/λ_OL (1/m).
    pub wavenumber: f64,
}

/// Derive the scaled unit system from the lattice wavelength and atomic mass.
pub fn derive_scaled_units(params: &PhysicalParams) -> Result<ScaledUnits> {
    ScaledUnits::new(params.lattice_wavelength, params.atomic_mass)
}

impl ScaledUnits {
    pub fn new(lattice_wavelength: f64, atomic_mass: f64) -> Result<Self> {
        if !(lattice_wavelength > 0.0) || !lattice_wavelength.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "lattice wavelength must be positive, got {lattice_wavelength}"
            )));
        }
        if !(atomic_mass > 0.0) || !atomic_mass.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "atomic mass must be positive, got {atomic_mass}"
            )));
        }
        let wavenumber = 2.0 * PI / lattice_wavelength;
        let recoil_energy = HBAR * HBAR * wavenumber * wavenumber / (2.0 * atomic_mass);
        Ok(ScaledUnits {
            recoil_energy,
            time_unit: HBAR / recoil_energy,
            length_unit: lattice_wavelength,
            wavenumber,
        })
    }

    /// Recoil energy expressed as a frequency E_r/h (Hz).
    pub fn recoil_frequency_hz(&self) -> f64 {
        self.recoil_energy / PLANCK
    }

    pub fn length_to_scaled(&self, meters: f64) -> f64 {
        meters / self.length_unit
    }

    pub fn length_to_physical(&self, scaled: f64) -> f64 {
        scaled * self.length_unit
    }

    pub fn time_to_scaled(&self, seconds: f64) -> f64 {
        seconds / self.time_unit
    }

    pub fn time_to_physical(&self, scaled: f64) -> f64 {
        scaled * self.time_unit
    }

    pub fn energy_to_scaled(&self, joules: f64) -> f64 {
        joules / self.recoil_energy
    }

    pub fn energy_to_physical(&self, scaled: f64) -> f64 {
        scaled * self.recoil_energy
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn recoil_energy_matches_reported_scale() {
        // E_r = h×3.7 kHz and τ = 43 μs for ⁸⁷Rb at λ_OL = 785 nm.
        let units = derive_scaled_units(&PhysicalParams::default()).unwrap();
        assert_relative_eq!(units.recoil_frequency_hz(), 3.7e3, max_relative = 0.02);
        assert_relative_eq!(units.time_unit, 43e-6, max_relative = 0.02);
    }

    #[test]
    fn recoil_energy_matches_constant_arithmetic() {
        // Independent evaluation from ħ, 2π/λ and the ⁸⁷Rb mass in kg.
        let units = derive_scaled_units(&PhysicalParams::default()).unwrap();
        let hbar = 1.054_571_817e-34;
        let mass = 86.909_180_527 * 1.660_539_066_60e-27;
        let k = 2.0 * PI / 785e-9;
        let expected = hbar * hbar * k * k / (2.0 * mass);
        assert_relative_eq!(units.recoil_energy, expected, max_relative = 1e-4);
        // 4 significant figures of the frozen value (J)
        assert_relative_eq!(units.recoil_energy, 2.4685e-30, max_relative = 5e-4);
    }

    #[test]
    fn recoil_scales_inversely_with_wavelength_squared() {
        let base = ScaledUnits::new(785e-9, MASS_RB87).unwrap();
        let doubled = ScaledUnits::new(2.0 * 785e-9, MASS_RB87).unwrap();
        assert_relative_eq!(
            doubled.recoil_energy,
            base.recoil_energy / 4.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn rejects_nonpositive_inputs() {
        assert!(ScaledUnits::new(-1.0, MASS_RB87).is_err());
        assert!(ScaledUnits::new(785e-9, 0.0).is_err());
        let mut p = PhysicalParams::default();
        p.atomic_line = p.trap_wavelength;
        assert!(p.validate().is_err());
    }

    #[test]
    fn unit_round_trip_is_identity() {
        let units = derive_scaled_units(&PhysicalParams::default()).unwrap();
        for q in [1.3e-6, 4.2e-5, 7.7e-28, 0.5] {
            assert_relative_eq!(
                units.length_to_physical(units.length_to_scaled(q)),
                q,
                max_relative = 1e-12
            );
            assert_relative_eq!(
                units.time_to_scaled(units.time_to_physical(q)),
                q,
                max_relative = 1e-12
            );
            assert_relative_eq!(
                units.energy_to_physical(units.energy_to_scaled(q)),
                q,
                max_relative = 1e-12
            );
        }
    }
}
