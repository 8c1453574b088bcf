//! Escape-time 3D Mandelbrot sets built on the spherical product.
//!
//! Two iteration rules are available. The first squares the state with the
//! Cartesian product formula (falling back to longitude 0 when the state sits
//! on the z-axis). The second resolves the state into `(r, θ, φ)` with
//! `θ ∈ (−π/2, π/2]`, `φ ∈ (−π, π]`, doubles both angles and adds `c`; its
//! `y = 0` plane is the classical Mandelbrot set in the xOz plane.

mod export;
mod grid;
mod kernel;

pub use export::{export, export_to_writer, pgm_byte, ExportFormat};
pub use grid::{render_grid, render_grid_with_threads, MembershipGrid, MAX_CELLS};
pub use kernel::{escape_time, iterate, iterate_first, iterate_second, iterate_second_trig};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Orbits leaving the disk of this radius have escaped.
pub const ESCAPE_RADIUS: f64 = 2.0;

pub const DEFAULT_N_MAX: u32 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Approach {
    First,
    Second,
}

/// How the second rule scales the doubled-angle direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SecondModulus {
    /// `r_n²`, the square of the state. Reproduces the classical set on `y = 0`.
    #[default]
    Squared,
    /// `r_n` to the first power, exactly as the rule is usually printed.
    AsPrinted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z"][self.index()]
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T) -> Self {
        Self { lo, hi }
    }

    /// Center of cell `i` out of `n` equal cells.
    pub fn cell_center(&self, i: usize, n: usize) -> T {
        let width = (self.hi - self.lo) / T::from(n).unwrap();
        self.lo + (T::from(i).unwrap() + T::lit(0.5)) * width
    }
}

/// A single plane `axis = value`. Rendering a sliced configuration samples
/// that plane exactly instead of a lattice along the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slice<T> {
    pub axis: Axis,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FractalConfig<T> {
    pub approach: Approach,
    pub second_modulus: SecondModulus,
    pub n_max: u32,
    pub region: [Interval<T>; 3],
    pub resolution: [usize; 3],
    pub slice: Option<Slice<T>>,
}

impl<T: Scalar> FractalConfig<T> {
    /// `[-2, 2]³` at the given resolution, `n_max = 100`, no slice.
    pub fn new(approach: Approach, resolution: [usize; 3]) -> Self {
        let box2 = Interval::new(T::lit(-2.0), T::lit(2.0));
        Self {
            approach,
            second_modulus: SecondModulus::default(),
            n_max: DEFAULT_N_MAX,
            region: [box2; 3],
            resolution,
            slice: None,
        }
    }

    pub fn with_n_max(mut self, n_max: u32) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_region(mut self, region: [Interval<T>; 3]) -> Self {
        self.region = region;
        self
    }

    pub fn with_slice(mut self, axis: Axis, value: T) -> Self {
        self.slice = Some(Slice { axis, value });
        self
    }

    pub fn with_second_modulus(mut self, m: SecondModulus) -> Self {
        self.second_modulus = m;
        self
    }

    pub fn escape_radius(&self) -> T {
        T::lit(ESCAPE_RADIUS)
    }

    /// Lattice shape actually sampled: the slice axis collapses to one cell.
    pub fn shape(&self) -> [usize; 3] {
        let mut s = self.resolution;
        if let Some(slice) = self.slice {
            s[slice.axis.index()] = 1;
        }
        s
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max < 1 {
            return Err(Error::InvalidConfig("n_max must be at least 1".into()));
        }
        if self.resolution.iter().any(|&r| r < 1) {
            return Err(Error::InvalidConfig("resolution components must be at least 1".into()));
        }
        for (iv, name) in self.region.iter().zip(["x", "y", "z"]) {
            if !(iv.lo.is_finite() && iv.hi.is_finite()) || iv.lo > iv.hi {
                return Err(Error::InvalidConfig(format!("bad {name} interval")));
            }
        }
        if let Some(s) = self.slice {
            if !s.value.is_finite() {
                return Err(Error::InvalidConfig("slice value must be finite".into()));
            }
        }
        let cells = self.shape().iter().map(|&r| r as u128).product::<u128>();
        if cells > MAX_CELLS as u128 {
            return Err(Error::ResolutionOverflow(cells));
        }
        Ok(())
    }
}
