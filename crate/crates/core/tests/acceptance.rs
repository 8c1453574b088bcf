//! Acceptance suite. Each test prints one `PASS`/`FAIL` line for its
//! criterion (visible with `--nocapture`) and asserts it.

use std::f64::consts::FRAC_PI_2;
use std::time::{Duration, Instant};

use hyperspherical::extensions::{conjugate, distributivity_residual, j_squared, nth_roots, ConjugateVariant};
use hyperspherical::fractal::{
    export_to_writer, render_grid, render_grid_with_threads, Approach, Axis, ExportFormat, FractalConfig, Interval,
};
use hyperspherical::properties::{argument_distance, cartesian_distance, Sampler};
use hyperspherical::relativity::{interval_sq, lorentz_boost, square_and_project};
use hyperspherical::{Cartesian, Spherical};

const DIMS: [usize; 3] = [3, 4, 7];

fn report(id: u32, title: &str, ok: bool, detail: String) {
    println!("criterion {id:>2} [{}] {title}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {detail}");
}

fn max_abs(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn c01_group_laws() {
    let start = Instant::now();
    let mut s = Sampler::new(101);
    let (mut add_err, mut mul_err, mut cart_err) = (0.0f64, 0.0f64, 0.0f64);
    let n = 10_000;
    for &dim in &DIMS {
        let zero = Cartesian::zero(dim).unwrap();
        let one = Spherical::identity(dim).unwrap();
        for _ in 0..n {
            let (a, b, c) = (s.cartesian(dim), s.cartesian(dim), s.cartesian(dim));
            let assoc = max_abs(
                a.add(&b).unwrap().add(&c).unwrap().components(),
                a.add(&b.add(&c).unwrap()).unwrap().components(),
            );
            let comm = max_abs(a.add(&b).unwrap().components(), b.add(&a).unwrap().components());
            let ident = max_abs(a.add(&zero).unwrap().components(), a.components());
            let inv = max_abs(a.add(&-a.clone()).unwrap().components(), zero.components());
            add_err = add_err.max(assoc).max(comm).max(ident).max(inv);

            let (x, y, z) = (s.spherical(dim), s.spherical(dim), s.spherical(dim));
            let raw_pairs = [
                (x.mul_raw(&y).mul_raw(&z), x.mul_raw(&y.mul_raw(&z))),
                (x.mul_raw(&y), y.mul_raw(&x)),
                (x.mul_raw(&one), x.clone()),
                (x.mul_raw(&x.inverse_raw().unwrap()), one.clone()),
            ];
            for (p, q) in &raw_pairs {
                mul_err = mul_err.max(max_abs(&p.to_vec(), &q.to_vec()));
            }
            // Axioms are evaluated on raw products; only the results are canonicalized.
            for (p, q) in &raw_pairs {
                let (p, q) = (p.canonicalize(), q.canonicalize());
                cart_err = cart_err.max(cartesian_distance(&p.to_cartesian(), &q.to_cartesian()));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = add_err <= 1e-12 && mul_err <= 1e-12 && cart_err <= 1e-9 && elapsed < Duration::from_secs(10);
    report(
        1,
        "group laws",
        ok,
        format!("add {add_err:.2e} <= 1e-12, mul(args) {mul_err:.2e} <= 1e-12, mul(cart) {cart_err:.2e} <= 1e-9, {elapsed:.2?}"),
    );
}

#[test]
fn c02_representation_agreement() {
    let start = Instant::now();
    let mut s = Sampler::new(202);
    let mut worst = 0.0f64;
    for i in 0..10_000 {
        let dim = DIMS[i % 3];
        let (a, b) = (s.cartesian(dim), s.cartesian(dim));
        let direct = a.mul_cartesian(&b, None, None).unwrap();
        let geo = a.to_spherical(None).mul_geometric(&b.to_spherical(None));
        worst = worst.max(cartesian_distance(&direct, &geo.to_cartesian()) / geo.modulus());
    }
    let elapsed = start.elapsed();
    report(
        2,
        "cartesian vs geometric product",
        worst <= 1e-9 && elapsed < Duration::from_secs(10),
        format!("max rel {worst:.2e} <= 1e-9, {elapsed:.2?}"),
    );
}

#[test]
fn c03_round_trip() {
    let mut s = Sampler::new(303);
    let mut worst = 0.0f64;
    let mut cases = 0;
    while cases < 10_000 {
        let h = s.spherical(DIMS[cases % 3]);
        let v = h.to_cartesian();
        if v.partial_moduli().values().iter().any(|r| *r <= 1e-6) {
            continue;
        }
        worst = worst.max(argument_distance(&v.to_spherical(None).canonicalize(), &h));
        cases += 1;
    }
    report(3, "round-trip conversion", worst < 1e-12, format!("{cases} cases, max arg err {worst:.2e} < 1e-12"));
}

#[test]
fn c04_non_distributivity() {
    let a = Cartesian::new(vec![1.0, 1.0, 1.0]).unwrap();
    let b = Cartesian::new(vec![1.0, 0.0, 1.0]).unwrap();
    let c = Cartesian::new(vec![0.0, 1.0, 1.0]).unwrap();
    let r = distributivity_residual(&a, &b, &c).unwrap();
    // Frozen from a 40-digit evaluation of both sides: (0, √2 − 2, √2 − 2).
    let pinned = [0.0, -0.585_786_437_626_904_9, -0.585_786_437_626_904_9];
    let pinned_norm = 0.828_427_124_746_190_1;
    let witness_ok = r.norm() > 0.1 && max_abs(r.components(), &pinned) < 1e-12 && (r.norm() - pinned_norm).abs() < 1e-12;

    let mut s = Sampler::new(404);
    let mut worst = 0.0f64;
    for i in 0..1_000 {
        let dim = DIMS[i % 3];
        let a = s.cartesian(dim);
        let b = s.cartesian(dim);
        let c = b.scale(s.uniform(0.05, 4.0));
        // Same θ and φ for b and c.
        let (sb, sc) = (b.to_spherical(None), c.to_spherical(None));
        assert!(max_abs(sb.args(), sc.args()) < 1e-12);
        worst = worst.max(distributivity_residual(&a, &b, &c).unwrap().norm());
    }
    report(
        4,
        "non-distributivity",
        witness_ok && worst < 1e-9,
        format!("witness |res| = {:.12} (> 0.1), collinear max |res| {worst:.2e} < 1e-9", r.norm()),
    );
}

#[test]
fn c05_roots() {
    let mut s = Sampler::new(505);
    let mut worst = 0.0f64;
    let mut count_ok = true;
    for i in 0..1_000 {
        let dim = [3usize, 4][i % 2];
        let m = [2u32, 3, 4][(i / 2) % 3];
        let h = s.spherical(dim);
        let set = nth_roots(&h, m).unwrap();
        for root in &set.roots {
            let p = root.pow_int(m as i32).unwrap();
            worst = worst.max(cartesian_distance(&p.to_cartesian(), &h.to_cartesian()));
        }
        if dim == 3 {
            let (lo, hi) = (m as usize, 2 * (m * m) as usize);
            count_ok &= set.len() >= lo && set.len() <= hi;
        }
    }

    // Square roots of the complex value (4, π/2, 0).
    let c = Spherical::new(4.0, vec![FRAC_PI_2, 0.0]).unwrap();
    let set = nth_roots(&c, 2).unwrap();
    let mut images: Vec<Vec<f64>> = set.roots.iter().map(|r| r.to_cartesian().into_components()).collect();
    images.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let s2 = 2.0_f64.sqrt();
    let mut expected = vec![
        vec![s2, s2, 0.0],    // (2, π/4)
        vec![-s2, -s2, 0.0],  // (2, 5π/4)
        vec![0.0, 0.0, 2.0],  // replicate root
        vec![0.0, 0.0, -2.0], // replicate root
    ];
    expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let table_ok = images.len() == 4 && images.iter().zip(&expected).all(|(a, b)| max_abs(a, b) < 1e-12);

    report(
        5,
        "roots",
        worst <= 1e-8 && count_ok && table_ok,
        format!("max pow err {worst:.2e} <= 1e-8, 3D counts in [m, 2m²]: {count_ok}, square-root table: {table_ok}"),
    );
}

/// Classical escape time of `z ← z² + c` in the complex plane, same
/// convention as the library (tested for n < n_max; n_max = member).
fn classical_escape(cr: f64, ci: f64, n_max: u32) -> u32 {
    let (mut x, mut y) = (0.0f64, 0.0f64);
    for n in 1..n_max {
        let nx = x * x - y * y + cr;
        let ny = 2.0 * x * y + ci;
        x = nx;
        y = ny;
        if x * x + y * y > 4.0 || x.is_nan() || y.is_nan() {
            return n;
        }
    }
    n_max
}

fn slice_config(approach: Approach, axis: Axis) -> FractalConfig<f64> {
    FractalConfig::new(approach, [256, 256, 256]).with_n_max(100).with_slice(axis, 0.0)
}

#[test]
fn c06_first_approach_complex_slice() {
    let start = Instant::now();
    let g = render_grid(&slice_config(Approach::First, Axis::Z)).unwrap();
    let mut mismatches = 0;
    for ([i, j, k], count) in g.cells() {
        let c = g.cell_center(i, j, k);
        if count != classical_escape(c[0], c[1], 100) {
            mismatches += 1;
        }
    }
    let elapsed = start.elapsed();
    report(
        6,
        "first approach z=0 slice == classical",
        mismatches == 0 && g.counts().len() == 256 * 256 && elapsed < Duration::from_secs(30),
        format!("{mismatches} mismatching cells of {}, {elapsed:.2?}", g.counts().len()),
    );
}

#[test]
fn c07_second_approach_complex_slice() {
    let g = render_grid(&slice_config(Approach::Second, Axis::Y)).unwrap();
    let mut mismatches = 0;
    for ([i, j, k], count) in g.cells() {
        let c = g.cell_center(i, j, k);
        // y → z substitution
        if count != classical_escape(c[0], c[2], 100) {
            mismatches += 1;
        }
    }
    report(
        7,
        "second approach y=0 slice == classical (y→z)",
        mismatches == 0 && g.counts().len() == 256 * 256,
        format!("{mismatches} mismatching cells of {}", g.counts().len()),
    );
}

#[test]
fn c08_containment() {
    let region = [Interval::new(-2.5, 2.5); 3];
    let half_diag = 0.5 * (3.0f64).sqrt() * (5.0 / 64.0);
    let mut worst = 0.0f64;
    let mut members = 0;
    for approach in [Approach::First, Approach::Second] {
        let g = render_grid(&FractalConfig::new(approach, [64, 64, 64]).with_region(region)).unwrap();
        for ([i, j, k], count) in g.cells() {
            if count == g.config().n_max {
                let c: [f64; 3] = g.cell_center(i, j, k);
                worst = worst.max((c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt());
                members += 1;
            }
        }
    }
    report(
        8,
        "members within radius 2",
        members > 0 && worst <= 2.0 + half_diag,
        format!("{members} members, max |c| = {worst:.6} <= {:.6}", 2.0 + half_diag),
    );
}

#[test]
fn c09_determinism() {
    let mut outputs = Vec::new();
    for (approach, threads) in [(Approach::First, 1), (Approach::First, 4), (Approach::Second, 1), (Approach::Second, 3)] {
        let cfg = FractalConfig::new(approach, [40, 36, 33]).with_region([Interval::new(-1.8, 1.6); 3]);
        let g = render_grid_with_threads(&cfg, threads).unwrap();
        let mut bytes = Vec::new();
        export_to_writer(&g, ExportFormat::VoxelRaw, &mut bytes).unwrap();
        outputs.push(bytes);
    }
    let ok = outputs[0] == outputs[1] && outputs[2] == outputs[3] && outputs[0].len() == 40 * 36 * 33;
    report(9, "parallel determinism", ok, format!("voxel_raw identical across 1/4 and 1/3 workers: {ok}"));
}

#[test]
fn c10_relativity() {
    let mut s = Sampler::new(1010);
    let (mut worst_mod, mut worst_time) = (0.0f64, 0.0f64);
    for _ in 0..1_000 {
        let d = s.event();
        let beta = s.uniform(-0.99, 0.99);
        let ds2 = interval_sq(&d).abs();
        for e in [d, lorentz_boost(&d, beta).unwrap()] {
            let sq = square_and_project(&e);
            worst_mod = worst_mod.max((sq.spatial_modulus - ds2).abs() / ds2);
            let closed = 2.0 * e.cdt * e.spatial_norm();
            worst_time = worst_time.max((sq.time_component - closed).abs() / closed.abs().max(1.0));
        }
    }
    report(
        10,
        "interval invariance via h²",
        worst_mod <= 1e-9 && worst_time <= 1e-9,
        format!("spatial modulus rel err {worst_mod:.2e} <= 1e-9, time component err {worst_time:.2e} <= 1e-9"),
    );
}

#[test]
fn c11_conjugates() {
    let mut s = Sampler::new(1111);
    let mut worst = 0.0f64;
    for _ in 0..1_000 {
        let h = s.spherical(3);
        let (r2, theta, phi) = (h.modulus() * h.modulus(), h.args()[0], h.args()[1]);
        let full = h.mul_geometric(&conjugate(&h, ConjugateVariant::Full).unwrap()).to_cartesian();
        let off_real = full.components()[1].abs().max(full.components()[2].abs()) / r2;
        let second = h.mul_geometric(&conjugate(&h, ConjugateVariant::Second).unwrap()).to_cartesian();
        let e_j = [r2 * (2.0 * phi).cos(), 0.0, r2 * (2.0 * phi).sin()];
        let third = h.mul_geometric(&conjugate(&h, ConjugateVariant::Third).unwrap()).to_cartesian();
        let e_i = [r2 * (2.0 * theta).cos(), r2 * (2.0 * theta).sin(), 0.0];
        worst = worst
            .max(off_real)
            .max(max_abs(second.components(), &e_j))
            .max(max_abs(third.components(), &e_i));
    }
    report(11, "conjugate products", worst <= 1e-9, format!("max err {worst:.2e} <= 1e-9"));
}

#[test]
fn c12_imaginary_squares() {
    let j0 = j_squared(0.0f64);
    let j90 = j_squared(FRAC_PI_2);
    let j_ok = j0 == (-1.0, 0.0) && (j90.0 - 1.0).abs() < 1e-15 && j90.1.abs() < 1e-15;

    let k = Spherical::new(1.0, vec![0.0, 0.0, FRAC_PI_2]).unwrap();
    let k2 = k.mul_geometric(&k).to_cartesian();
    let k_ok = max_abs(k2.components(), &[-1.0, 0.0, 0.0, 0.0]) < 1e-15;

    let mut s = Sampler::new(1212);
    let mut worst = 0.0f64;
    for i in 0..1_000 {
        let dim = DIMS[i % 3];
        let m = 3 + i % (dim - 2);
        let mut args = s.unit_spherical(dim).args().to_vec();
        args[m - 2..].iter_mut().for_each(|a| *a = 0.0);
        let a = Spherical::new(1.0, args).unwrap();
        let mut b_args = vec![0.0; dim - 1];
        b_args[m - 2] = if i % 2 == 0 { FRAC_PI_2 } else { -FRAC_PI_2 };
        let b = Spherical::new(1.0, b_args).unwrap();
        worst = worst.max(cartesian_distance(&a.mul_geometric(&b).to_cartesian(), &b.to_cartesian()));
    }
    report(
        12,
        "j² and k² sanity, i_m invariance",
        j_ok && k_ok && worst <= 1e-12,
        format!("j²(0)=({}, {}), j²(π/2)≈({:.3}, {:.1e}), k²=-1: {k_ok}, invariance max err {worst:.2e} <= 1e-12", j0.0, j0.1, j90.0, j90.1),
    );
}
