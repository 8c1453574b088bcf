//! Dual-representation hypercomplex values.
//!
//! A value of dimension `N >= 2` is held either as a [`SphericalForm`]
//! `(r, θ₂, …, θ_N)` or as a [`CartesianVec`] `(x₁, …, x_N)`:
//!
//! ```text
//! x₁ = r · cos θ₂ · cos θ₃ ⋯ cos θ_N
//! x_k = r · sin θ_k · cos θ_{k+1} ⋯ cos θ_N      (k >= 2)
//! ```
//!
//! Multiplication adds arguments and multiplies moduli, so it is exact in the
//! spherical form. Addition is componentwise and exact in the Cartesian form.
//! Conversions between the two are lossy where leading partial moduli vanish:
//! the hidden longitudes must then be supplied through [`DegenerateArgs`].
//!
//! θ₂ is the longitude and lives in `[0, 2π)` once canonical; θ₃…θ_N are
//! latitudes in `[-π/2, π/2]`.

mod cartesian;
mod spherical;

pub use cartesian::{CartesianVec, DegenerateArgs, PartialModuli};
pub use spherical::SphericalForm;
