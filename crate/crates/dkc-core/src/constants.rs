//! Physical constants (SI, CODATA 2018) and unit conversion helpers.

use crate::error::{Error, Result};

/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K.
pub const K_B: f64 = 1.380_649e-23;
/// Atomic mass unit, kg.
pub const ATOMIC_MASS: f64 = 1.660_539_066_60e-27;
/// Bohr radius (atomic unit of length), m.
pub const BOHR_RADIUS: f64 = 5.291_772_109_03e-11;

/// Mass of potassium-41 in atomic mass units.
pub const MASS_K41_U: f64 = 40.961_825_26;
/// Mass of rubidium-87 in atomic mass units.
pub const MASS_RB87_U: f64 = 86.909_180_531;

/// Units understood by [`convert_units`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    /// Atomic unit of length (Bohr radius).
    BohrRadius,
    Meter,
    /// Atomic mass unit.
    AtomicMass,
    Kilogram,
    Joule,
    /// Temperature equivalent of an energy, E / k_B.
    Kelvin,
    /// Ordinary frequency, cycles per second.
    Hertz,
    /// Angular frequency.
    RadianPerSecond,
}

/// Converts `value` between a small set of unit pairs used throughout the
/// crate: Bohr radii <-> m, u <-> kg, J <-> K (via k_B) and Hz <-> rad/s.
///
/// Identical units pass through unchanged; any other combination is an error.
pub fn convert_units(value: f64, from: Unit, to: Unit) -> Result<f64> {
    use Unit::*;
    if from == to {
        return Ok(value);
    }
    let converted = match (from, to) {
        (BohrRadius, Meter) => value * BOHR_RADIUS,
        (Meter, BohrRadius) => value / BOHR_RADIUS,
        (AtomicMass, Kilogram) => value * ATOMIC_MASS,
        (Kilogram, AtomicMass) => value / ATOMIC_MASS,
        (Joule, Kelvin) => value / K_B,
        (Kelvin, Joule) => value * K_B,
        (Hertz, RadianPerSecond) => value * std::f64::consts::TAU,
        (RadianPerSecond, Hertz) => value / std::f64::consts::TAU,
        _ => {
            return Err(Error::InvalidInput(format!(
                "unsupported unit conversion {from:?} -> {to:?}"
            )))
        }
    };
    Ok(converted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrips() {
        let pairs = [
            (Unit::BohrRadius, Unit::Meter),
            (Unit::AtomicMass, Unit::Kilogram),
            (Unit::Joule, Unit::Kelvin),
            (Unit::Hertz, Unit::RadianPerSecond),
        ];
        for (a, b) in pairs {
            let x = 3.7;
            let there = convert_units(x, a, b).unwrap();
            let back = convert_units(there, b, a).unwrap();
            assert!((back - x).abs() < 1e-14 * x.abs());
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(convert_units(1.0, Unit::BohrRadius, Unit::Meter).unwrap(), BOHR_RADIUS);
        assert_eq!(convert_units(0.0, Unit::Joule, Unit::Kelvin).unwrap(), 0.0);
        let w = convert_units(100.0, Unit::Hertz, Unit::RadianPerSecond).unwrap();
        assert!((w - 628.3185307179587).abs() < 1e-10);
    }

    #[test]
    fn same_unit_is_identity() {
        assert_eq!(convert_units(2.5, Unit::Meter, Unit::Meter).unwrap(), 2.5);
    }

    #[test]
    fn unsupported_pair_is_an_error() {
        assert!(convert_units(1.0, Unit::Meter, Unit::Kelvin).is_err());
        assert!(convert_units(1.0, Unit::Joule, Unit::Hertz).is_err());
    }
}
