use crate::error::{Error, Result};
use crate::scalar::{rem_euclid, Scalar};

use super::spherical::{canonicalize_args, SphericalForm};

/// Cartesian components `(x₁, …, x_N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CartesianVec<T> {
    components: Vec<T>,
}

/// Longitudes `θ₂, …, θ_m` for a value whose first `m` components vanish.
///
/// Cartesian coordinates cannot encode these; they are consulted only when a
/// leading partial modulus is zero.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DegenerateArgs<T> {
    longitudes: Vec<T>,
}

impl<T: Scalar> DegenerateArgs<T> {
    pub fn new(longitudes: Vec<T>) -> Self {
        Self { longitudes }
    }

    /// `n` zero longitudes.
    pub fn zeros(n: usize) -> Self {
        Self::new(vec![T::zero(); n])
    }

    pub fn longitudes(&self) -> &[T] {
        &self.longitudes
    }

    pub fn len(&self) -> usize {
        self.longitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.longitudes.is_empty()
    }
}

/// The chain `r₁ ≤ r₂ ≤ … ≤ r_N` with `r_n = √(x₁² + … + x_n²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialModuli<T> {
    values: Vec<T>,
}

impl<T: Scalar> PartialModuli<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `r_n` with a 1-based index.
    pub fn get(&self, n: usize) -> Option<T> {
        n.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    /// `r₂`, the modulus of the first complex plane.
    pub fn rho(&self) -> T {
        self.values[1]
    }

    /// Number of leading partial moduli equal to zero.
    pub fn leading_zeros(&self) -> usize {
        self.values.iter().take_while(|r| **r == T::zero()).count()
    }
}

impl<T: Scalar> CartesianVec<T> {
    pub fn new(components: Vec<T>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::DimensionTooSmall(components.len()));
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { components })
    }

    pub(crate) fn new_unchecked(components: Vec<T>) -> Self {
        Self { components }
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(vec![T::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[T] {
        &self.components
    }

    pub fn into_components(self) -> Vec<T> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| *c == T::zero())
    }

    pub fn norm(&self) -> T {
        self.components.iter().fold(T::zero(), |acc, c| acc + *c * *c).sqrt()
    }

    pub fn partial_moduli(&self) -> PartialModuli<T> {
        let mut sum = T::zero();
        let values = self
            .components
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                sum = sum + x * x;
                if i == 0 {
                    x.abs()
                } else {
                    sum.sqrt()
                }
            })
            .collect();
        PartialModuli { values }
    }

    /// Canonical geometric form of this point.
    ///
    /// When the first `m` components are zero the longitudes `θ₂..θ_m` are
    /// read from `fallback` (missing entries default to zero) and
    /// `θ_{m+1}` comes out as ±π/2.
    pub fn to_spherical(&self, fallback: Option<&DegenerateArgs<T>>) -> SphericalForm<T> {
        let pm = self.partial_moduli();
        let r = pm.values[self.dim() - 1];
        let supplied = fallback.map(|f| f.longitudes()).unwrap_or(&[]);
        let mut args = Vec::with_capacity(self.dim() - 1);
        for k in 2..=self.dim() {
            let theta = if pm.values[k - 1] == T::zero() {
                supplied.get(k - 2).copied().unwrap_or_else(T::zero)
            } else if k == 2 {
                rem_euclid(self.components[1].atan2(self.components[0]), T::tau())
            } else {
                self.components[k - 1].atan2(pm.values[k - 2])
            };
            args.push(theta);
        }
        canonicalize_args(&mut args);
        SphericalForm::new_unchecked(r, args)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(())
    }

    /// Componentwise sum. Dimensions must match exactly.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::new_unchecked(
            self.components.iter().zip(&other.components).map(|(a, b)| *a + *b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::new_unchecked(
            self.components.iter().zip(&other.components).map(|(a, b)| *a - *b).collect(),
        ))
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new_unchecked(self.components.iter().map(|c| *c * s).collect())
    }

    /// Product computed directly from Cartesian components:
    ///
    /// ```text
    /// x₁'' = (x₁x₁' − x₂x₂') · P₂
    /// x₂'' = (x₁x₂' + x₂x₁') · P₂
    /// x_k'' = (x_k r'_{k−1} + x'_k r_{k−1}) · P_k          (k ≥ 3)
    /// P_k  = Π_{n>k} (1 − x_n x'_n / (r_{n−1} r'_{n−1}))
    /// ```
    ///
    /// When an operand has `r₂ = 0` its longitudes are not recoverable; the
    /// product then goes through the geometric form with the supplied
    /// fallback, and a missing fallback is an error.
    pub fn mul_cartesian(
        &self,
        other: &Self,
        self_fallback: Option<&DegenerateArgs<T>>,
        other_fallback: Option<&DegenerateArgs<T>>,
    ) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::new_unchecked(vec![T::zero(); n]));
        }
        let (a, b) = (&self.components, &other.components);
        if n == 2 {
            return Ok(Self::new_unchecked(vec![
                a[0] * b[0] - a[1] * b[1],
                a[0] * b[1] + a[1] * b[0],
            ]));
        }

        let ra = self.partial_moduli();
        let rb = other.partial_moduli();
        if ra.rho() == T::zero() || rb.rho() == T::zero() {
            require_fallback(&ra, self_fallback)?;
            require_fallback(&rb, other_fallback)?;
            let sa = self.to_spherical(self_fallback);
            let sb = other.to_spherical(other_fallback);
            return Ok(sa.mul_geometric(&sb).to_cartesian());
        }

        let (ra, rb) = (ra.values(), rb.values());
        // suffix[k] = P_{k+1} in 1-based terms, i.e. the product over n > k+1.
        let mut suffix = vec![T::one(); n];
        for i in (2..n).rev() {
            let f = T::one() - a[i] * b[i] / (ra[i - 1] * rb[i - 1]);
            suffix[i - 1] = suffix[i] * f;
        }
        let mut out = Vec::with_capacity(n);
        out.push((a[0] * b[0] - a[1] * b[1]) * suffix[1]);
        out.push((a[0] * b[1] + a[1] * b[0]) * suffix[1]);
        for i in 2..n {
            out.push((a[i] * rb[i - 1] + b[i] * ra[i - 1]) * suffix[i]);
        }
        Ok(Self::new_unchecked(out))
    }
}

fn require_fallback<T: Scalar>(pm: &PartialModuli<T>, fallback: Option<&DegenerateArgs<T>>) -> Result<()> {
    if pm.rho() != T::zero() {
        return Ok(());
    }
    let needed = pm.leading_zeros() - 1;
    let supplied = fallback.map_or(0, |f| f.len());
    if supplied < needed {
        return Err(Error::MissingDegenerateLongitude { needed, supplied });
    }
    Ok(())
}

impl<T: Scalar> core::ops::Neg for CartesianVec<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new_unchecked(self.components.into_iter().map(|c| -c).collect())
    }
}
