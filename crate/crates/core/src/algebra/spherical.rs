use crate::error::{Error, Result};
use crate::scalar::{rem_euclid, Scalar};

use super::cartesian::CartesianVec;

/// Geometric form `(r, θ₂, …, θ_N)`.
///
/// There is deliberately no `PartialEq`: two forms can be argument-wise
/// different yet name the same point. Use [`SphericalForm::same_arguments`]
/// or [`SphericalForm::equals_cartesian`].
#[derive(Debug, Clone)]
pub struct SphericalForm<T> {
    modulus: T,
    args: Vec<T>,
}

impl<T: Scalar> SphericalForm<T> {
    /// Build a form from a modulus and `N - 1` arguments. No canonicalization
    /// is applied.
    pub fn new(modulus: T, args: Vec<T>) -> Result<Self> {
        if args.is_empty() {
            return Err(Error::DimensionTooSmall(args.len() + 1));
        }
        if !modulus.is_finite() || modulus < T::zero() {
            return Err(Error::InvalidModulus);
        }
        if args.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { modulus, args })
    }

    /// Build from a flat `[r, θ₂, …, θ_N]` slice.
    pub fn from_slice(values: &[T]) -> Result<Self> {
        match values.split_first() {
            Some((&r, args)) => Self::new(r, args.to_vec()),
            None => Err(Error::DimensionTooSmall(0)),
        }
    }

    pub(crate) fn new_unchecked(modulus: T, args: Vec<T>) -> Self {
        debug_assert!(!args.is_empty());
        Self { modulus, args }
    }

    /// The multiplicative identity `(1, 0, …, 0)`.
    pub fn identity(dim: usize) -> Result<Self> {
        Self::unit_with(dim, T::one())
    }

    /// The additive identity `(0, 0, …, 0)`.
    pub fn zero(dim: usize) -> Result<Self> {
        Self::unit_with(dim, T::zero())
    }

    fn unit_with(dim: usize, modulus: T) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        Ok(Self::new_unchecked(modulus, vec![T::zero(); dim - 1]))
    }

    pub fn dim(&self) -> usize {
        self.args.len() + 1
    }

    pub fn modulus(&self) -> T {
        self.modulus
    }

    /// `θ₂, …, θ_N` in order.
    pub fn args(&self) -> &[T] {
        &self.args
    }

    /// Argument `θ_k` using the 1-based index convention (`k` in `2..=N`).
    pub fn theta(&self, k: usize) -> Option<T> {
        k.checked_sub(2).and_then(|i| self.args.get(i).copied())
    }

    /// `[r, θ₂, …, θ_N]`.
    pub fn to_vec(&self) -> Vec<T> {
        let mut v = Vec::with_capacity(self.dim());
        v.push(self.modulus);
        v.extend_from_slice(&self.args);
        v
    }

    /// True when θ₂ ∈ [0, 2π) and every latitude lies in [-π/2, π/2].
    pub fn is_canonical(&self) -> bool {
        let half_pi = T::FRAC_PI_2();
        let lon = self.args[0];
        lon >= T::zero()
            && lon < T::tau()
            && self.args[1..].iter().all(|&a| a >= -half_pi && a <= half_pi)
    }

    /// Cartesian image of this form.
    pub fn to_cartesian(&self) -> CartesianVec<T> {
        let n = self.dim();
        let mut out = vec![T::zero(); n];
        // suffix = r · Π_{m>k} cos θ_m, built from the top index down.
        let mut suffix = self.modulus;
        for k in (2..=n).rev() {
            let (s, c) = self.args[k - 2].sin_cos();
            out[k - 1] = suffix * s;
            suffix = suffix * c;
        }
        out[0] = suffix;
        CartesianVec::new_unchecked(out)
    }

    /// Bring the arguments into principal ranges without moving the point.
    ///
    /// Working from the highest index down, a latitude outside `[-π/2, π/2]`
    /// is replaced by its replicate `π - θ_k` while `θ_{k-1}` gains `π`.
    /// The longitude is finally reduced modulo 2π.
    pub fn canonicalize(&self) -> Self {
        let mut args = self.args.clone();
        canonicalize_args(&mut args);
        Self::new_unchecked(self.modulus, args)
    }

    /// Exact argument-wise equality (modulus and every argument).
    pub fn same_arguments(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.args == other.args
    }

    /// Equality of Cartesian images, per component within `tol`.
    ///
    /// Forms of different dimension are never equivalent.
    pub fn equals_cartesian(&self, other: &Self, tol: T) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let a = self.to_cartesian();
        let b = other.to_cartesian();
        a.components()
            .iter()
            .zip(b.components())
            .all(|(x, y)| (*x - *y).abs() <= tol)
    }

    /// Pad with zero arguments up to `dim`. Lower-dimensional values embed
    /// in higher dimensions with every extra argument equal to zero.
    pub fn promote(&self, dim: usize) -> Self {
        let mut args = self.args.clone();
        if args.len() + 1 < dim {
            args.resize(dim - 1, T::zero());
        }
        Self::new_unchecked(self.modulus, args)
    }

    /// Product with moduli multiplied and arguments added, with no range
    /// reduction afterwards. This is the form in which the group laws hold
    /// exactly.
    pub fn mul_raw(&self, other: &Self) -> Self {
        let dim = self.dim().max(other.dim());
        let a = self.promote(dim);
        let b = other.promote(dim);
        let args = a.args.iter().zip(&b.args).map(|(x, y)| *x + *y).collect();
        Self::new_unchecked(a.modulus * b.modulus, args)
    }

    /// Geometric product, returned canonical.
    pub fn mul_geometric(&self, other: &Self) -> Self {
        self.mul_raw(other).canonicalize()
    }

    /// `(1/r, -θ₂, …, -θ_N)` without range reduction.
    pub fn inverse_raw(&self) -> Result<Self> {
        if self.modulus == T::zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new_unchecked(
            T::one() / self.modulus,
            self.args.iter().map(|a| -*a).collect(),
        ))
    }

    /// Multiplicative inverse, canonical.
    pub fn inverse(&self) -> Result<Self> {
        Ok(self.inverse_raw()?.canonicalize())
    }

    /// `self / other`, i.e. `self · other⁻¹`.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_raw(&other.inverse_raw()?).canonicalize())
    }

    /// Integer power `(r^m, m·θ₂, …, m·θ_N)`, canonical.
    pub fn pow_int(&self, m: i32) -> Result<Self> {
        if m < 0 && self.modulus == T::zero() {
            return Err(Error::DivisionByZero);
        }
        let factor = T::from(m).expect("i32 fits in any float");
        let args = self.args.iter().map(|a| *a * factor).collect();
        Ok(Self::new_unchecked(self.modulus.powi(m), args).canonicalize())
    }
}

impl<T: Scalar> core::ops::Mul for &SphericalForm<T> {
    type Output = SphericalForm<T>;

    fn mul(self, rhs: Self) -> SphericalForm<T> {
        self.mul_geometric(rhs)
    }
}

impl<T: Scalar> core::ops::Mul for SphericalForm<T> {
    type Output = SphericalForm<T>;

    fn mul(self, rhs: Self) -> SphericalForm<T> {
        self.mul_geometric(&rhs)
    }
}

pub(crate) fn canonicalize_args<T: Scalar>(args: &mut [T]) {
    let half_pi = T::FRAC_PI_2();
    for i in (1..args.len()).rev() {
        if args[i] >= -half_pi && args[i] <= half_pi {
            continue;
        }
        // Latitude reduced into [-π/2, 3π/2) first.
        let lat = rem_euclid(args[i] + half_pi, T::tau()) - half_pi;
        if lat > half_pi {
            args[i] = T::PI() - lat;
            args[i - 1] = args[i - 1] + T::PI();
        } else {
            args[i] = lat;
        }
    }
    if !(args[0] >= T::zero() && args[0] < T::tau()) {
        args[0] = rem_euclid(args[0], T::tau());
    }
}
