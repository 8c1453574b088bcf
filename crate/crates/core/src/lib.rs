//! Spherical and hyperspherical hypercomplex numbers.
//!
//! An `N`-dimensional value has a modulus, one longitude and `N − 2`
//! latitudes. Products multiply moduli and add arguments; sums add Cartesian
//! components. The two operations are not distributive, so the set is not a
//! field, but both `(H, +)` and `(H∖{0}, ·)` are Abelian groups.
//!
//! ```
//! use hyperspherical::{Cartesian, Spherical};
//! use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};
//!
//! let a = Spherical::new(2.0, vec![FRAC_PI_3, FRAC_PI_6]).unwrap();
//! let b = Spherical::new(3.0, vec![FRAC_PI_6, FRAC_PI_6]).unwrap();
//! let p = a.mul_geometric(&b);
//! assert!((p.modulus() - 6.0).abs() < 1e-12);
//! assert!((p.args()[0] - FRAC_PI_2).abs() < 1e-12);
//!
//! let v = Cartesian::new(vec![1.0, 1.0, 1.0]).unwrap();
//! let sq = v.mul_cartesian(&v, None, None).unwrap();
//! assert!((sq.components()[2] - 2.0 * 2f64.sqrt()).abs() < 1e-12);
//! ```
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//! fix the precision.

pub mod algebra;
pub mod error;
pub mod extensions;
pub mod fractal;
pub mod properties;
pub mod relativity;
mod scalar;

pub use algebra::{CartesianVec, DegenerateArgs, PartialModuli, SphericalForm};
pub use error::{Error, Result};
pub use scalar::{wrap_angle, Scalar};

pub type Spherical = SphericalForm<f64>;
pub type Cartesian = CartesianVec<f64>;
pub type Degenerate = DegenerateArgs<f64>;
pub type Spherical32 = SphericalForm<f32>;
pub type Cartesian32 = CartesianVec<f32>;
pub type Degenerate32 = DegenerateArgs<f32>;
