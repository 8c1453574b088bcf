use std::f64::consts::{FRAC_PI_2, PI, TAU};

use hyperspherical::extensions::{conjugate, nth_roots, replicate, scalar_embed, ConjugateVariant};
use hyperspherical::fractal::{escape_time, iterate_second, iterate_second_trig, Approach, FractalConfig, SecondModulus};
use hyperspherical::relativity::{interval_sq, lorentz_boost, square_and_project, EventDelta};
use hyperspherical::{Cartesian, Spherical};
use proptest::prelude::*;

const LAT: f64 = FRAC_PI_2 * (1.0 - 1e-9);

fn spherical(dim: usize) -> impl Strategy<Value = Spherical> {
    (
        0.25f64..4.0,
        0.0f64..TAU,
        prop::collection::vec(-LAT..LAT, dim - 2),
    )
        .prop_map(|(r, lon, lats)| {
            let mut args = vec![lon];
            args.extend(lats);
            Spherical::new(r, args).unwrap()
        })
}

fn any_spherical() -> impl Strategy<Value = Spherical> {
    prop_oneof![spherical(3), spherical(4), spherical(7)]
}

fn pair() -> impl Strategy<Value = (Spherical, Spherical)> {
    prop_oneof![
        (spherical(3), spherical(3)),
        (spherical(4), spherical(4)),
        (spherical(7), spherical(7)),
    ]
}

fn dist(a: &Cartesian, b: &Cartesian) -> f64 {
    a.sub(b).unwrap().norm()
}

proptest! {
    #[test]
    fn norm_is_modulus(h in any_spherical()) {
        prop_assert!((h.to_cartesian().norm() - h.modulus()).abs() <= 1e-12 * h.modulus());
    }

    #[test]
    fn product_modulus_multiplies((a, b) in pair()) {
        let p = a.mul_geometric(&b);
        prop_assert!((p.modulus() - a.modulus() * b.modulus()).abs() <= 1e-12 * p.modulus());
        prop_assert!((p.to_cartesian().norm() - p.modulus()).abs() <= 1e-12 * p.modulus());
    }

    #[test]
    fn geometric_product_is_canonical((a, b) in pair()) {
        prop_assert!(a.mul_geometric(&b).is_canonical());
    }

    #[test]
    fn canonicalize_keeps_image(mut h in any_spherical(), shift in -6.0f64..6.0, k in 0usize..6) {
        let i = k % h.dim().saturating_sub(1).max(1);
        let mut args = h.args().to_vec();
        args[i] += shift;
        h = Spherical::new(h.modulus(), args).unwrap();
        let c = h.canonicalize();
        prop_assert!(c.is_canonical());
        prop_assert!(dist(&c.to_cartesian(), &h.to_cartesian()) <= 1e-12 * h.modulus().max(1.0));
        prop_assert_eq!(c.canonicalize().to_vec(), c.to_vec());
    }

    #[test]
    fn cartesian_and_geometric_agree((a, b) in pair()) {
        let (x, y) = (a.to_cartesian(), b.to_cartesian());
        prop_assume!(x.partial_moduli().get(2).unwrap() > 1e-6 && y.partial_moduli().get(2).unwrap() > 1e-6);
        let direct = x.mul_cartesian(&y, None, None).unwrap();
        let geo = a.mul_geometric(&b).to_cartesian();
        prop_assert!(dist(&direct, &geo) <= 1e-9 * a.modulus() * b.modulus());
    }

    #[test]
    fn inverse_divides_out((a, b) in pair()) {
        let q = a.mul_raw(&b).divide(&b).unwrap();
        prop_assert!(dist(&q.to_cartesian(), &a.to_cartesian()) <= 1e-12 * a.modulus().max(1.0) * 4.0);
    }

    #[test]
    fn pow_matches_repeated_product(h in any_spherical(), m in -4i32..5) {
        let p = h.pow_int(m).unwrap();
        let mut acc = Spherical::identity(h.dim()).unwrap();
        let base = if m < 0 { h.inverse_raw().unwrap() } else { h.clone() };
        for _ in 0..m.unsigned_abs() {
            acc = acc.mul_raw(&base);
        }
        let scale = p.modulus().max(1.0);
        prop_assert!(dist(&p.to_cartesian(), &acc.to_cartesian()) <= 1e-11 * scale);
    }

    #[test]
    fn scalar_embedding_scales(h in any_spherical(), s in -3.0f64..3.0) {
        prop_assume!(s.abs() > 1e-3);
        let v = h.mul_geometric(&scalar_embed(s, h.dim()).unwrap()).to_cartesian();
        let expect = h.to_cartesian().scale(s);
        prop_assert!(dist(&v, &expect) <= 1e-12 * h.modulus() * 4.0);
    }

    #[test]
    fn replicate_keeps_image(h in any_spherical(), k in 3usize..8) {
        prop_assume!(k <= h.dim());
        let r = replicate(&h, k).unwrap();
        prop_assert!(dist(&r.to_cartesian(), &h.to_cartesian()) <= 1e-12 * h.modulus().max(1.0));
    }

    #[test]
    fn full_conjugate_is_involution(h in any_spherical()) {
        let c = conjugate(&conjugate(&h, ConjugateVariant::Full).unwrap(), ConjugateVariant::Full).unwrap();
        let canon = h.canonicalize();
        for (a, b) in c.args().iter().zip(canon.args()) {
            let d = (a - b).abs();
            prop_assert!(d.min(TAU - d) <= 1e-12);
        }
    }

    #[test]
    fn roots_power_back(h in prop_oneof![spherical(3), spherical(4)], m in 2u32..5) {
        let set = nth_roots(&h, m).unwrap();
        prop_assert!(!set.is_empty());
        for root in &set.roots {
            let back = root.pow_int(m as i32).unwrap();
            prop_assert!(dist(&back.to_cartesian(), &h.to_cartesian()) <= 1e-8);
        }
    }

    #[test]
    fn second_identity_matches_trig(x in -2.0f64..2.0, y in -2.0f64..2.0, z in -2.0f64..2.0,
                                    c in prop::array::uniform3(-2.0f64..2.0)) {
        for m in [SecondModulus::Squared, SecondModulus::AsPrinted] {
            let a = iterate_second([x, y, z], c, m);
            let b = iterate_second_trig([x, y, z], c, m);
            for i in 0..3 {
                prop_assert!((a[i] - b[i]).abs() <= 1e-12 * 16.0);
            }
        }
    }

    #[test]
    fn far_points_escape_immediately(c in prop::array::uniform3(-8.0f64..8.0)) {
        let r2 = c.iter().map(|v| v * v).sum::<f64>();
        prop_assume!(r2 > 4.0 + 1e-9);
        for approach in [Approach::First, Approach::Second] {
            let cfg = FractalConfig::new(approach, [1, 1, 1]);
            prop_assert_eq!(escape_time(c, &cfg), 1);
        }
    }

    #[test]
    fn boost_preserves_interval(d in prop::array::uniform4(-5.0f64..5.0), beta in -0.99f64..0.99) {
        let d = EventDelta::new(d[0], d[1], d[2], d[3]).unwrap();
        let s = interval_sq(&d);
        prop_assume!(s.abs() > 1e-6);
        let b = lorentz_boost(&d, beta).unwrap();
        prop_assert!((interval_sq(&b) - s).abs() <= 1e-9 * s.abs().max(1.0) * 50.0);
        let sq = square_and_project(&b);
        prop_assert!((sq.spatial_modulus - s.abs()).abs() <= 1e-9 * s.abs().max(1.0));
    }
}

#[test]
fn negative_scalar_embedding_is_half_turn() {
    let e = scalar_embed(-2.0f64, 4).unwrap();
    assert_eq!(e.args(), &[0.0, 0.0, PI]);
    let v = e.to_cartesian();
    assert!((v.components()[0] + 2.0).abs() < 1e-15);
}
