mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torse_core::json::{from_json, to_json};
use torse_core::plane::incidence;
use torse_core::poly::rpoly;
use torse_core::qpoly::{mobius_reparametrize, Side};
use torse_core::rat::int;
use torse_core::ring::{real_root_count, squarefree_decompose};
use torse_core::synthesis::cofactor::complex_cofactor;
use torse_core::synthesis::dual::lambda_reduce;
use torse_core::synthesis::primal::{primal_image, primal_solve};
use torse_core::synthesis::reduce_plane;
use torse_core::{
    act_on_plane, act_on_point, analyze, plane_trajectory, saturation, CPoly, DualQuatPoly, PlanePoly,
    QuatPoly, RPoly,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn conjugation_reverses_products(seed: u64) {
        let mut r = rng(seed);
        let a = common::dq_poly(&mut r, 2, 4);
        let b = common::dq_poly(&mut r, 2, 4);
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        prop_assert_eq!((&a * &b).eps_conj(), &a.eps_conj() * &b.eps_conj());
    }

    #[test]
    fn norms_multiply(seed: u64) {
        let mut r = rng(seed);
        let a = common::random_motion(&mut r, 2);
        let b = common::random_motion(&mut r, 2);
        let (na, nb, nab) = (a.dq_norm(), b.dq_norm(), (&a * &b).dq_norm());
        prop_assert_eq!(&nab.primal, &(&na.primal * &nb.primal));
        prop_assert!(nab.dual.is_zero() && nab.dual_is_real);
        let p = common::quat_poly(&mut r, 2, 4);
        let q = common::quat_poly(&mut r, 2, 4);
        prop_assert_eq!((&p * &q).norm_poly(), &p.norm_poly() * &q.norm_poly());
    }

    #[test]
    fn division_reconstructs(seed: u64) {
        let mut r = rng(seed);
        let f = common::quat_poly(&mut r, 4, 5);
        let g = common::quat_poly(&mut r, 2, 5);
        let (q, rem) = f.qdivrem(&g, Side::Right).unwrap();
        prop_assert_eq!(&(&q * &g) + &rem, f.clone());
        prop_assert!(rem.deg_i() < g.deg_i());
        let (q, rem) = f.qdivrem(&g, Side::Left).unwrap();
        prop_assert_eq!(&(&g * &q) + &rem, f.clone());
        prop_assert!(rem.deg_i() < g.deg_i());
        let h = common::rpoly(&mut r, 2, 5);
        prop_assume!(!h.is_zero());
        let (q, rem) = f.divrem_real(&h).unwrap();
        prop_assert_eq!(&q.mul_real(&h) + &rem, f);
    }

    #[test]
    fn products_of_motions_are_motions(seed: u64) {
        let mut r = rng(seed);
        let a = common::random_motion(&mut r, 2);
        let b = common::random_motion(&mut r, 2);
        prop_assert!(a.is_motion_polynomial() && b.is_motion_polynomial());
        prop_assert!((&a * &b).is_motion_polynomial());
        prop_assert!((&b * &a).is_motion_polynomial());
    }

    #[test]
    fn actions_preserve_incidence(seed: u64) {
        let mut r = rng(seed);
        let c = common::random_motion(&mut r, 2);
        let x = common::point(&mut r);
        let u = common::plane_through(&mut r, &x);
        prop_assert!(incidence(&x, &u).is_zero());
        let (x2, u2) = (act_on_point(&c, &x).unwrap(), act_on_plane(&c, &u).unwrap());
        prop_assert!(incidence(&x2, &u2).is_zero());
        // a point off the plane stays off it
        let y = common::point(&mut r);
        let before = incidence(&y, &u);
        let after = incidence(&act_on_point(&c, &y).unwrap(), &u2);
        prop_assert_eq!(after, &before * &c.dq_norm().primal.pow(2));
    }

    #[test]
    fn json_round_trip(seed: u64) {
        let mut r = rng(seed);
        let c = common::dq_poly(&mut r, 3, 9);
        prop_assert_eq!(from_json::<DualQuatPoly>(&to_json(&c)).unwrap(), c);
        let p = common::rpoly(&mut r, 4, 9);
        prop_assert_eq!(from_json::<RPoly>(&to_json(&p)).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn real_root_count_matches_construction(seed: u64) {
        let mut r = rng(seed);
        // distinct rational roots times positive-definite quadratics
        let nroots = r.gen_range(0..4);
        let mut roots: Vec<i64> = Vec::new();
        while roots.len() < nroots {
            let x = r.gen_range(-6..=6);
            if !roots.contains(&x) {
                roots.push(x);
            }
        }
        let mut p = RPoly::one();
        for x in &roots {
            p = &p * &rpoly(&[-x, 1]);
        }
        for _ in 0..r.gen_range(0..3) {
            let (a, b) = (r.gen_range(-4..=4), r.gen_range(1..=4));
            p = &p * &rpoly(&[a * a + b, -2 * a, 1]);
        }
        prop_assert_eq!(real_root_count(&p).unwrap(), roots.len());
        let sf = squarefree_decompose(&(&p * &p)).unwrap();
        prop_assert_eq!(sf.reconstruct(), &p * &p);
    }

    #[test]
    fn lambda_meets_the_bound(seed: u64) {
        let mut r = rng(seed);
        let p = &(&rpoly(&[1, 0, 1]) * &rpoly(&[2, 1, 1])) * &rpoly(&[5, -2, 1]);
        let x = common::rpoly(&mut r, 5, 6);
        let y = common::rpoly(&mut r, 5, 6);
        let a = common::rpoly(&mut r, 3, 6);
        let b = common::rpoly(&mut r, 3, 6);
        match lambda_reduce(&x, &y, &a, &b, &p, 3) {
            Ok(l) => {
                prop_assert!((&x + &(&l * &a)).rem(&p).unwrap().deg_i() <= 3);
                prop_assert!((&y + &(&l * &b)).rem(&p).unwrap().deg_i() <= 3);
            }
            Err(e) => prop_assert_eq!(e.code(), "PRECONDITION_VIOLATION"),
        }
    }

    #[test]
    fn complex_cofactor_identity(seed: u64) {
        let mut r = rng(seed);
        let pool = [rpoly(&[0, 1]), rpoly(&[-1, 1]), rpoly(&[1, 0, 1]), rpoly(&[5, -4, 1]), rpoly(&[3, 0, 1])];
        let mut g = RPoly::one();
        for f in &pool {
            let e = r.gen_range(0..3);
            // t² + 3 has no Gaussian-rational roots: keep its power even
            let e = if f == &pool[4] { 2 * (e / 2) } else { e };
            g = &g * &f.pow(e);
        }
        let res = complex_cofactor(&g).unwrap();
        let big = QuatPoly::from_cpoly(&res.g_complex);
        let k = QuatPoly::constant(torse_core::Quat::k());
        prop_assert_eq!(&(&big * &k) * &big.conj(), k.mul_real(&(&res.ell * &g)));
        prop_assert_eq!(2 * res.g_complex.degree().unwrap(), g.degree().unwrap() + res.ell.degree().unwrap());
    }

    #[test]
    fn primal_solve_inverts_the_image(seed: u64) {
        let mut r = rng(seed);
        let deg = r.gen_range(1..=3);
        let q = common::quat_poly(&mut r, deg, 4);
        let (q, _) = q.reduce().unwrap();
        let v = primal_image(&q);
        let (v, _) = {
            let g = torse_core::ring::gcd_all(v.iter()).unwrap();
            (v.map(|c| c.exact_div(&g).unwrap().unwrap()), g)
        };
        let sol = primal_solve(&v).unwrap();
        let img = primal_image(&sol.q);
        for i in 0..3 {
            prop_assert_eq!(&img[i], &v[i].scale(&sol.scale));
        }
        prop_assert_eq!(sol.q.norm_poly(), sol.s.scale(&sol.scale));
    }

    #[test]
    fn analysis_is_representative_independent(seed: u64) {
        let mut r = rng(seed);
        let deg = r.gen_range(1..=3);
        let c = common::random_motion(&mut r, deg);
        let (w, _) = reduce_plane(&plane_trajectory(&c).unwrap()).unwrap();
        let base = analyze(&w).unwrap();
        let a = r.gen_range(-3..=3);
        let f = &rpoly(&[a, 1]).pow(2) * &rpoly(&[1, 0, 1]);
        let scaled = analyze(&w.mul_real(&f)).unwrap();
        prop_assert!(!scaled.reduced);
        prop_assert_eq!(scaled.deg_gauss, base.deg_gauss);
        prop_assert_eq!(scaled.minimal_motion_degree, base.minimal_motion_degree);
        // Möbius reparametrization keeps the projective invariants
        let b = r.gen_range(1..=4);
        let m = mobius_reparametrize(&w.to_dq(), &int(1), &int(b), &int(1), &int(b + 1)).unwrap();
        let moved = analyze(&reduce_plane(&PlanePoly::from_dq(&m).unwrap()).unwrap().0).unwrap();
        prop_assert_eq!(moved.kinematic, base.kinematic);
        prop_assert_eq!(moved.deg_gauss, base.deg_gauss);
    }

    #[test]
    fn saturating_factor_saturates(seed: u64) {
        let mut r = rng(seed);
        let pool = [rpoly(&[0, 1]), rpoly(&[-1, 1]), rpoly(&[2, 1]), rpoly(&[1, 0, 1]), rpoly(&[-2, 0, 1])];
        let mut g = RPoly::one();
        for f in &pool {
            g = &g * &f.pow(r.gen_range(0..4));
        }
        let u = PlanePoly::new(rpoly(&[1]), &g * &rpoly(&[0, 2]), &g * &rpoly(&[-1, 0, 1]), RPoly::zero());
        let s = saturation(&u).unwrap();
        let ell = s.ell.unwrap();
        prop_assert!(ell.divides(&g));
        prop_assert_eq!(s.saturated, ell.degree() == Some(0));
        prop_assert!(saturation(&u.mul_real(&ell)).unwrap().saturated);
    }
}

#[test]
fn cpoly_is_commutative() {
    let a = CPoly::from_parts(&rpoly(&[1, 2]), &rpoly(&[0, -1]));
    let b = CPoly::from_parts(&rpoly(&[3]), &rpoly(&[1, 1]));
    assert_eq!(&a * &b, &b * &a);
}
