//! Physical constants (SI units, CODATA 2018 where applicable).

/// Reduced Planck constant (J·s).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Planck constant (J·s).
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Atomic mass unit (kg).
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// Mass of a ⁸⁷Rb atom (kg), 86.909180527 u.
pub const MASS_RB87: f64 = 86.909_180_527 * ATOMIC_MASS_UNIT;

/// Full natural linewidth of the ⁸⁷Rb D1 line (rad/s), 2π × 5.7465 MHz.
pub const GAMMA_RB87_D1: f64 = 2.0 * std::f64::consts::PI * 5.7465e6;
