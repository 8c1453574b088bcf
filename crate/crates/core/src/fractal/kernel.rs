use crate::scalar::Scalar;

use super::{Approach, FractalConfig, SecondModulus};

/// One step of `h ← h² + c` with the Cartesian product rule.
///
/// On the z-axis (`x = y = 0`) the longitude is taken as 0, giving
/// `(c_x − z², c_y, c_z)`.
#[inline]
pub fn iterate_first<T: Scalar>(state: [T; 3], c: [T; 3]) -> [T; 3] {
    let [x, y, z] = state;
    let rho2 = x * x + y * y;
    if rho2 == T::zero() {
        return [c[0] - z * z, c[1], c[2]];
    }
    let f = T::one() - z * z / rho2;
    let two = T::two();
    [
        (x * x - y * y) * f + c[0],
        (two * x * y) * f + c[1],
        two * z * rho2.sqrt() + c[2],
    ]
}

/// One step of the second rule.
///
/// With `θ ∈ (−π/2, π/2]` (`θ = π/2` when `x = 0`) and `φ ∈ (−π, π]` resolved
/// from the state, the step is
///
/// ```text
/// x' = R cos 2θ cos 2φ + c_x
/// y' = R sin 2θ cos 2φ + c_y
/// z' = R sin 2φ + c_z
/// ```
///
/// with `R = r²` or `R = r` per `modulus`. The doubled-angle terms are
/// evaluated through exact identities of the Cartesian components rather than
/// through trigonometric calls; [`iterate_second_trig`] is the direct form.
#[inline]
pub fn iterate_second<T: Scalar>(state: [T; 3], c: [T; 3], modulus: SecondModulus) -> [T; 3] {
    let [x, y, z] = state;
    let rho2 = x * x + y * y;
    let (cos2t, sin2t) = if rho2 == T::zero() {
        // θ = π/2
        (-T::one(), T::zero())
    } else {
        ((x * x - y * y) / rho2, (T::two() * x * y) / rho2)
    };
    // φ picks the far branch (cos φ < 0) when x < 0, or x = 0 and y < 0.
    let sign = if x > T::zero() || (x == T::zero() && y > T::zero()) { T::one() } else { -T::one() };
    let rho = rho2.sqrt();
    // r² cos 2φ and r² sin 2φ
    let mut a = rho2 - z * z;
    let mut b = T::two() * sign * rho * z;
    if modulus == SecondModulus::AsPrinted {
        let r = (rho2 + z * z).sqrt();
        if r == T::zero() {
            return c;
        }
        a = a / r;
        b = b / r;
    }
    [cos2t * a + c[0], sin2t * a + c[1], b + c[2]]
}

/// Second rule evaluated literally: resolve `(r, θ, φ)` by the case table,
/// double the angles with `cos`/`sin`. Slower and less exact than
/// [`iterate_second`]; kept as an independent reference.
pub fn iterate_second_trig<T: Scalar>(state: [T; 3], c: [T; 3], modulus: SecondModulus) -> [T; 3] {
    let [x, y, z] = state;
    let zero = T::zero();
    let half_pi = T::FRAC_PI_2();
    let pi = T::PI();
    let rho = (x * x + y * y).sqrt();
    let r = (rho * rho + z * z).sqrt();
    if r == zero {
        return c;
    }
    let theta = if x == zero { half_pi } else { (y / x).atan() };
    let phi = if x > zero {
        (z / rho).atan()
    } else if x < zero {
        if z >= zero {
            pi - (z / rho).atan()
        } else {
            -pi - (z / rho).atan()
        }
    } else if y > zero {
        (z / y).atan()
    } else if y < zero {
        if z >= zero {
            pi - (z / y.abs()).atan()
        } else {
            -pi - (z / y.abs()).atan()
        }
    } else if z > zero {
        half_pi
    } else {
        -half_pi
    };
    let big_r = match modulus {
        SecondModulus::Squared => r * r,
        SecondModulus::AsPrinted => r,
    };
    let (t2, p2) = (theta + theta, phi + phi);
    [
        big_r * t2.cos() * p2.cos() + c[0],
        big_r * t2.sin() * p2.cos() + c[1],
        big_r * p2.sin() + c[2],
    ]
}

#[inline]
pub fn iterate<T: Scalar>(cfg: &FractalConfig<T>, state: [T; 3], c: [T; 3]) -> [T; 3] {
    match cfg.approach {
        Approach::First => iterate_first(state, c),
        Approach::Second => iterate_second(state, c, cfg.second_modulus),
    }
}

/// Smallest `n` in `1..n_max` with `|h_n| > 2`, starting from `h₀ = 0`;
/// `n_max` when no such `n` exists (the point is a member).
pub fn escape_time<T: Scalar>(c: [T; 3], cfg: &FractalConfig<T>) -> u32 {
    let bound = cfg.escape_radius() * cfg.escape_radius();
    let mut h = [T::zero(); 3];
    for n in 1..cfg.n_max {
        h = iterate(cfg, h, c);
        let norm2 = h[0] * h[0] + h[1] * h[1] + h[2] * h[2];
        // NaN compares false; treat it as escaped.
        if norm2 > bound || norm2.is_nan() {
            return n;
        }
    }
    cfg.n_max
}
