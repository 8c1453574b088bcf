//! Minkowski interval through the square of a 4D hypercomplex displacement.
//!
//! With `h = (dx, dy, dz, c·dt)` the square `h² = (r², 2θ, 2φ, 2ψ)` has a
//! spatial part of modulus `|r₃² − c²dt²| = |ds²|` and a time component
//! `2·c·dt·r₃`, where `r₃ = √(dx² + dy² + dz²)`.

use crate::algebra::CartesianVec;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Spacetime displacement, with `c` folded into `cdt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EventDelta<T> {
    pub dx: T,
    pub dy: T,
    pub dz: T,
    pub cdt: T,
}

impl<T: Scalar> EventDelta<T> {
    pub fn new(dx: T, dy: T, dz: T, cdt: T) -> Result<Self> {
        if ![dx, dy, dz, cdt].iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { dx, dy, dz, cdt })
    }

    /// `√(dx² + dy² + dz²)`
    pub fn spatial_norm(&self) -> T {
        (self.dx * self.dx + self.dy * self.dy + self.dz * self.dz).sqrt()
    }

    fn as_cartesian(&self) -> CartesianVec<T> {
        CartesianVec::new_unchecked(vec![self.dx, self.dy, self.dz, self.cdt])
    }
}

/// `c²dt² − dx² − dy² − dz²`
pub fn interval_sq<T: Scalar>(d: &EventDelta<T>) -> T {
    d.cdt * d.cdt - d.dx * d.dx - d.dy * d.dy - d.dz * d.dz
}

/// Projection of `h²` onto its spatial part and its time axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquaredInterval<T> {
    /// `√(x² + y² + z²)` of `h²`; equals `|ds²|`.
    pub spatial_modulus: T,
    /// `w` component of `h²`; equals `2·c·dt·r₃`.
    pub time_component: T,
    /// `2ψ` before range reduction. `cos(2ψ)` carries the sign of `−ds²`.
    pub doubled_time_argument: T,
}

pub fn square_and_project<T: Scalar>(d: &EventDelta<T>) -> SquaredInterval<T> {
    let h = d.as_cartesian().to_spherical(None);
    let psi = h.args()[2];
    let sq = h.mul_geometric(&h).to_cartesian();
    let c = sq.components();
    SquaredInterval {
        spatial_modulus: (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt(),
        time_component: c[3],
        doubled_time_argument: psi + psi,
    }
}

/// Standard boost along x with velocity `beta` (in units of c).
pub fn lorentz_boost<T: Scalar>(d: &EventDelta<T>, beta: T) -> Result<EventDelta<T>> {
    if !beta.is_finite() || beta.abs() >= T::one() {
        return Err(Error::InvalidBeta);
    }
    let gamma = (T::one() - beta * beta).sqrt().recip();
    Ok(EventDelta {
        dx: gamma * (d.dx - beta * d.cdt),
        dy: d.dy,
        dz: d.dz,
        cdt: gamma * (d.cdt - beta * d.dx),
    })
}
