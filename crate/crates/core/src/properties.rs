//! Seeded randomized checks of the algebra's invariants.
//!
//! Used by the `property-check` command. A run is a pure function of the
//! seed and the case count, so the same inputs always produce the same report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{CartesianVec, SphericalForm};
use crate::extensions::{conjugate, distributivity_residual, nth_roots, replicate, ConjugateVariant};
use crate::relativity::{interval_sq, lorentz_boost, square_and_project, EventDelta};
use crate::scalar::wrap_angle;

pub const DEFAULT_SEED: u64 = 0x5eed_2014;

/// Deterministic generator of test values.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn pick<'a, X>(&mut self, items: &'a [X]) -> &'a X {
        &items[self.rng.gen_range(0..items.len())]
    }

    /// Canonical form with modulus in `[0.25, 4)` and latitudes strictly
    /// inside `(-π/2, π/2)`.
    pub fn spherical(&mut self, dim: usize) -> SphericalForm<f64> {
        let half = std::f64::consts::FRAC_PI_2 * (1.0 - 1e-9);
        let r = self.uniform(0.25, 4.0);
        let mut args = vec![self.uniform(0.0, std::f64::consts::TAU)];
        args.extend((2..dim).map(|_| self.uniform(-half, half)));
        SphericalForm::new(r, args).expect("generated form is valid")
    }

    /// Unit-modulus canonical form.
    pub fn unit_spherical(&mut self, dim: usize) -> SphericalForm<f64> {
        let h = self.spherical(dim);
        SphericalForm::new(1.0, h.args().to_vec()).unwrap()
    }

    /// Components uniform in `[-2, 2)`, resampled until `r₂ > 1e-3`.
    pub fn cartesian(&mut self, dim: usize) -> CartesianVec<f64> {
        loop {
            let v: Vec<f64> = (0..dim).map(|_| self.uniform(-2.0, 2.0)).collect();
            if v[0].hypot(v[1]) > 1e-3 {
                return CartesianVec::new(v).unwrap();
            }
        }
    }

    pub fn event(&mut self) -> EventDelta<f64> {
        EventDelta::new(
            self.uniform(-5.0, 5.0),
            self.uniform(-5.0, 5.0),
            self.uniform(-5.0, 5.0),
            self.uniform(-5.0, 5.0),
        )
        .unwrap()
    }
}

/// Outcome of one property over all its cases.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub max_error: f64,
    pub tolerance: f64,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.max_error <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub seed: u64,
    pub results: Vec<PropertyResult>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }
}

/// Largest componentwise difference between Cartesian images.
pub fn cartesian_distance(a: &CartesianVec<f64>, b: &CartesianVec<f64>) -> f64 {
    a.components().iter().zip(b.components()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Argument-wise distance of two forms; the longitude is compared modulo 2π.
pub fn argument_distance(a: &SphericalForm<f64>, b: &SphericalForm<f64>) -> f64 {
    let mut d = (a.modulus() - b.modulus()).abs();
    for (i, (x, y)) in a.args().iter().zip(b.args()).enumerate() {
        let e = if i == 0 { wrap_angle(x - y).abs() } else { (x - y).abs() };
        d = d.max(e);
    }
    d
}

const DIMS: [usize; 3] = [3, 4, 7];

struct Tracker {
    name: &'static str,
    tolerance: f64,
    cases: usize,
    max_error: f64,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self { name, tolerance, cases: 0, max_error: 0.0 }
    }

    fn record(&mut self, err: f64) {
        self.cases += 1;
        // NaN must not hide behind max.
        self.max_error = if err.is_nan() { f64::INFINITY } else { self.max_error.max(err) };
    }

    fn finish(self) -> PropertyResult {
        PropertyResult { name: self.name, cases: self.cases, max_error: self.max_error, tolerance: self.tolerance }
    }
}

/// Run every invariant suite with `cases` random cases each.
pub fn run_property_suite(seed: u64, cases: usize) -> PropertyReport {
    let mut s = Sampler::new(seed);
    let mut results = Vec::new();

    let mut t = Tracker::new("round_trip", 1e-12);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let h = s.spherical(dim);
        let pm = h.to_cartesian().partial_moduli();
        if pm.values().iter().skip(1).all(|r| *r > 1e-6) && pm.values()[0] > 1e-6 {
            t.record(argument_distance(&h.to_cartesian().to_spherical(None).canonicalize(), &h));
        }
    }
    results.push(t.finish());

    let mut t = Tracker::new("norm_preservation", 1e-12);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let h = s.spherical(dim);
        t.record((h.to_cartesian().norm() - h.modulus()).abs() / h.modulus());
    }
    results.push(t.finish());

    let mut t = Tracker::new("representation_agreement", 1e-9);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let (a, b) = (s.cartesian(dim), s.cartesian(dim));
        let direct = a.mul_cartesian(&b, None, None).expect("non-degenerate");
        let geo = a.to_spherical(None).mul_geometric(&b.to_spherical(None));
        t.record(cartesian_distance(&direct, &geo.to_cartesian()) / geo.modulus());
    }
    results.push(t.finish());

    let mut t = Tracker::new("additive_group", 1e-12);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let (a, b, c) = (s.cartesian(dim), s.cartesian(dim), s.cartesian(dim));
        let assoc = a.add(&b).unwrap().add(&c).unwrap();
        let assoc2 = a.add(&b.add(&c).unwrap()).unwrap();
        let comm = cartesian_distance(&a.add(&b).unwrap(), &b.add(&a).unwrap());
        let inv = a.add(&-a.clone()).unwrap().norm();
        t.record(cartesian_distance(&assoc, &assoc2).max(comm).max(inv));
    }
    results.push(t.finish());

    let mut t = Tracker::new("multiplicative_group", 1e-12);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let (a, b, c) = (s.spherical(dim), s.spherical(dim), s.spherical(dim));
        let l = a.mul_raw(&b).mul_raw(&c);
        let r = a.mul_raw(&b.mul_raw(&c));
        let rel = |x: &SphericalForm<f64>, y: &SphericalForm<f64>| {
            let dm = (x.modulus() - y.modulus()).abs() / y.modulus().max(1.0);
            x.args().iter().zip(y.args()).map(|(p, q)| (p - q).abs()).fold(dm, f64::max)
        };
        let comm = rel(&a.mul_raw(&b), &b.mul_raw(&a));
        let inv = rel(&a.mul_raw(&a.inverse_raw().unwrap()), &SphericalForm::identity(dim).unwrap());
        t.record(rel(&l, &r).max(comm).max(inv));
    }
    results.push(t.finish());

    let mut t = Tracker::new("canonicalize_idempotent", 1e-12);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let args: Vec<f64> = (1..dim).map(|_| s.uniform(-20.0, 20.0)).collect();
        let h = SphericalForm::new(s.uniform(0.1, 3.0), args).unwrap();
        let c = h.canonicalize();
        let moved = cartesian_distance(&h.to_cartesian(), &c.to_cartesian());
        let again = argument_distance(&c.canonicalize(), &c);
        t.record(if c.is_canonical() { moved.max(again) } else { f64::INFINITY });
    }
    results.push(t.finish());

    let mut t = Tracker::new("complex_embedding", 0.0);
    for _ in 0..cases {
        let a = [s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0)];
        let b = [s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0)];
        let p = CartesianVec::new(vec![a[0], a[1], 0.0])
            .unwrap()
            .mul_cartesian(&CartesianVec::new(vec![b[0], b[1], 0.0]).unwrap(), None, None)
            .unwrap();
        let expected = [a[0] * b[0] - a[1] * b[1], a[0] * b[1] + b[0] * a[1], 0.0];
        t.record(p.components().iter().zip(&expected).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max));
    }
    results.push(t.finish());

    let mut t = Tracker::new("fundamental_invariance", 1e-12);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let m = 3 + (s.uniform(0.0, (dim - 2) as f64) as usize).min(dim - 3);
        let mut a_args = s.unit_spherical(dim).args().to_vec();
        a_args[m - 2..].iter_mut().for_each(|x| *x = 0.0);
        let a = SphericalForm::new(1.0, a_args).unwrap();
        let mut b_args = vec![0.0; dim - 1];
        b_args[m - 2] = if s.uniform(0.0, 1.0) < 0.5 { std::f64::consts::FRAC_PI_2 } else { -std::f64::consts::FRAC_PI_2 };
        let b = SphericalForm::new(1.0, b_args).unwrap();
        t.record(cartesian_distance(&a.mul_geometric(&b).to_cartesian(), &b.to_cartesian()));
    }
    results.push(t.finish());

    let mut t = Tracker::new("replicate_preserves_cartesian", 1e-12);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let h = s.spherical(dim);
        for k in 3..=dim {
            let r = replicate(&h, k).unwrap();
            t.record(cartesian_distance(&r.to_cartesian(), &h.to_cartesian()));
        }
    }
    results.push(t.finish());

    let mut t = Tracker::new("root_round_trip", 1e-8);
    for _ in 0..cases.div_ceil(10) {
        let dim = *s.pick(&[3usize, 4]);
        let m = *s.pick(&[2u32, 3, 4]);
        let h = s.spherical(dim);
        let set = nth_roots(&h, m).unwrap();
        for root in &set.roots {
            t.record(cartesian_distance(&root.pow_int(m as i32).unwrap().to_cartesian(), &h.to_cartesian()));
        }
    }
    results.push(t.finish());

    let mut t = Tracker::new("conjugate_product_real", 1e-9);
    for _ in 0..cases {
        let h = s.spherical(3);
        let p = h.mul_geometric(&conjugate(&h, ConjugateVariant::Full).unwrap()).to_cartesian();
        let r2 = h.modulus() * h.modulus();
        t.record(p.components()[1].abs().max(p.components()[2].abs()) / r2);
    }
    results.push(t.finish());

    let mut t = Tracker::new("collinear_distributivity", 1e-9);
    for _ in 0..cases {
        let dim = *s.pick(&DIMS);
        let a = s.cartesian(dim);
        let b = s.cartesian(dim);
        let c = b.scale(s.uniform(0.1, 3.0));
        t.record(distributivity_residual(&a, &b, &c).unwrap().norm());
    }
    results.push(t.finish());

    let mut t = Tracker::new("lorentz_invariance", 1e-9);
    for _ in 0..cases {
        let d = s.event();
        let beta = s.uniform(-0.99, 0.99);
        let boosted = lorentz_boost(&d, beta).unwrap();
        let ds2 = interval_sq(&d);
        let e1 = (interval_sq(&boosted) - ds2).abs() / ds2.abs();
        let e2 = (square_and_project(&boosted).spatial_modulus - ds2.abs()).abs() / ds2.abs();
        t.record(e1.max(e2));
    }
    results.push(t.finish());

    PropertyReport { seed, results }
}
