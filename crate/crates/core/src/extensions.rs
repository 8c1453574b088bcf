//! Conjugates, replicates, multivalued roots and products, and related probes.

use crate::algebra::{CartesianVec, DegenerateArgs, SphericalForm};
use crate::error::{Error, Result};
use crate::scalar::{rem_euclid, wrap_angle, Scalar};

/// Cartesian tolerance under which two candidate roots are the same root.
pub const ROOT_DEDUP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugateVariant {
    /// All arguments negated: `x₁ − i₂x₂ − … − i_N x_N`.
    Full,
    /// 3D only: `(r, −θ, φ)`, reflection across the xOz plane.
    Second,
    /// 3D only: `(r, θ, −φ)`, reflection across the xOy plane.
    Third,
}

impl ConjugateVariant {
    fn name(self) -> &'static str {
        match self {
            Self::Full => "full",
            Self::Second => "second",
            Self::Third => "third",
        }
    }
}

pub fn conjugate<T: Scalar>(h: &SphericalForm<T>, variant: ConjugateVariant) -> Result<SphericalForm<T>> {
    if variant != ConjugateVariant::Full && h.dim() != 3 {
        return Err(Error::ConjugateDimension { variant: variant.name(), dim: h.dim() });
    }
    let mut args = h.args().to_vec();
    match variant {
        ConjugateVariant::Full => args.iter_mut().for_each(|a| *a = -*a),
        ConjugateVariant::Second => args[0] = -args[0],
        ConjugateVariant::Third => args[1] = -args[1],
    }
    Ok(SphericalForm::new(h.modulus(), args)?.canonicalize())
}

/// Replicate form at index `k`: `θ_k ← π − θ_k`, `θ_{k−1} ← θ_{k−1} + π`.
pub fn replicate<T: Scalar>(h: &SphericalForm<T>, k: usize) -> Result<SphericalForm<T>> {
    if k < 3 || k > h.dim() {
        return Err(Error::ReplicateIndex { k, dim: h.dim() });
    }
    let mut args = h.args().to_vec();
    args[k - 2] = T::PI() - args[k - 2];
    args[k - 3] = args[k - 3] + T::PI();
    SphericalForm::new(h.modulus(), args)
}

/// Deduplicated m-th roots together with the number of raw candidates.
#[derive(Debug, Clone)]
pub struct RootSet<T> {
    pub roots: Vec<SphericalForm<T>>,
    /// Candidates enumerated before deduplication.
    pub multiplicity_note: usize,
}

impl<T> RootSet<T> {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// All m-th roots reachable from the plain form and its single-index replicates.
///
/// Each base form contributes `m^(N−1)` candidates
/// `θ'_k = θ_k/m + 2jπ/m`, `r' = r^(1/m)`, deduplicated by Cartesian
/// equivalence at [`ROOT_DEDUP_TOL`].
///
/// Roots keep the argument tuple they were generated with, reduced only by
/// whole turns (longitude in `[0, 2π)`, latitudes in `(−π, π]`). Applying the
/// replicate transform would move the point's m-th power, since powers of a
/// replicate form differ from powers of the plain form.
pub fn nth_roots<T: Scalar>(h: &SphericalForm<T>, m: u32) -> Result<RootSet<T>> {
    if m < 1 {
        return Err(Error::InvalidRootOrder);
    }
    if h.modulus() == T::zero() {
        return Ok(RootSet { roots: vec![SphericalForm::zero(h.dim())?], multiplicity_note: 1 });
    }
    let base = h.canonicalize();
    let mut bases = vec![base.clone()];
    for k in 3..=base.dim() {
        bases.push(replicate(&base, k)?);
    }

    let mf = T::from(m).expect("root order fits in float");
    let radius = base.modulus().powf(mf.recip());
    let step = T::tau() / mf;
    let n_args = base.dim() - 1;
    let combos = (m as usize).pow(n_args as u32);
    let tol = T::lit(ROOT_DEDUP_TOL);

    let mut roots: Vec<SphericalForm<T>> = Vec::new();
    let mut images: Vec<CartesianVec<T>> = Vec::new();
    let mut total = 0;
    for b in &bases {
        for idx in 0..combos {
            let mut rest = idx;
            let args = b
                .args()
                .iter()
                .enumerate()
                .map(|(i, &theta)| {
                    let j = T::from(rest % m as usize).unwrap();
                    rest /= m as usize;
                    let a = theta / mf + j * step;
                    if i == 0 {
                        rem_euclid(a, T::tau())
                    } else {
                        wrap_angle(a)
                    }
                })
                .collect();
            let cand = SphericalForm::new(radius, args)?;
            total += 1;
            let img = cand.to_cartesian();
            let dup = images.iter().any(|seen| {
                seen.components().iter().zip(img.components()).all(|(a, b)| (*a - *b).abs() <= tol)
            });
            if !dup {
                images.push(img);
                roots.push(cand);
            }
        }
    }
    Ok(RootSet { roots, multiplicity_note: total })
}

/// The four products of two 3D values obtained by choosing the plain or the
/// replicate form of each operand, reported in the equivalent forms that all
/// share the longitude `θ' + θ''`:
///
/// | case | h'        | h''       | latitude      |
/// |------|-----------|-----------|---------------|
/// | 1    | plain     | plain     | `φ' + φ''`    |
/// | 2    | plain     | replicate | `φ'' − φ'`    |
/// | 3    | replicate | plain     | `φ' − φ''`    |
/// | 4    | replicate | replicate | `−φ' − φ''`   |
///
/// Latitudes are not range-reduced; see [`replicate_products_canonical`].
pub fn replicate_products<T: Scalar>(a: &SphericalForm<T>, b: &SphericalForm<T>) -> Result<[SphericalForm<T>; 4]> {
    for h in [a, b] {
        if h.dim() != 3 {
            return Err(Error::WrongDimension { expected: 3, got: h.dim() });
        }
    }
    let r = a.modulus() * b.modulus();
    let lon = a.args()[0] + b.args()[0];
    let (p1, p2) = (a.args()[1], b.args()[1]);
    let make = |lat: T| SphericalForm::new(r, vec![lon, lat]);
    Ok([make(p1 + p2)?, make(p2 - p1)?, make(p1 - p2)?, make(-p1 - p2)?])
}

pub fn replicate_products_canonical<T: Scalar>(
    a: &SphericalForm<T>,
    b: &SphericalForm<T>,
) -> Result<[SphericalForm<T>; 4]> {
    Ok(replicate_products(a, b)?.map(|p| p.canonicalize()))
}

/// Square of the unit imaginary `j` whose normal plane sits at longitude
/// `theta`: the complex number `e^{i(2θ+π)}` as `(re, im)`.
pub fn j_squared<T: Scalar>(theta: T) -> (T, T) {
    let (s, c) = (theta + theta).sin_cos();
    (-c, -s)
}

/// A real scalar as a hypercomplex value: `(s, 0, …, 0)` for `s ≥ 0`, and
/// `(|s|, 0, …, 0, π)` for `s < 0` (not range-reduced).
pub fn scalar_embed<T: Scalar>(s: T, dim: usize) -> Result<SphericalForm<T>> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall(dim));
    }
    if !s.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut args = vec![T::zero(); dim - 1];
    if s < T::zero() {
        args[dim - 2] = T::PI();
    }
    SphericalForm::new(s.abs(), args)
}

/// `a·(b + c) − (a·b + a·c)`, evaluated with the Cartesian product.
pub fn distributivity_residual<T: Scalar>(
    a: &CartesianVec<T>,
    b: &CartesianVec<T>,
    c: &CartesianVec<T>,
) -> Result<CartesianVec<T>> {
    distributivity_residual_with(a, b, c, None)
}

/// As [`distributivity_residual`], with `fallback` applied to every
/// degenerate operand (including `b + c`).
pub fn distributivity_residual_with<T: Scalar>(
    a: &CartesianVec<T>,
    b: &CartesianVec<T>,
    c: &CartesianVec<T>,
    fallback: Option<&DegenerateArgs<T>>,
) -> Result<CartesianVec<T>> {
    let sum = b.add(c)?;
    let lhs = a.mul_cartesian(&sum, fallback, fallback)?;
    let ab = a.mul_cartesian(b, fallback, fallback)?;
    let ac = a.mul_cartesian(c, fallback, fallback)?;
    lhs.sub(&ab.add(&ac)?)
}
