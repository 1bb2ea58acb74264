mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torse_core::fixtures;
use torse_core::plane::incidence;
use torse_core::poly::rpoly;
use torse_core::qpoly::Side;
use torse_core::synthesis::cofactor::complex_cofactor;
use torse_core::synthesis::dual::dual_solve;
use torse_core::synthesis::reduce_plane;
use torse_core::{
    act_on_plane, act_on_point, analyze, canonical_representative, compose_family, essential_equivalence,
    family_dimension, is_kinematic, plane_trajectory, saturation, split_even_power, split_quadratic,
    synthesize_minimal, synthesize_with_cofactor, verify_trajectory, Error, NoSolutionReason, Quat,
    QuatPoly, RPoly,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn example1_reduction() -> Outcome {
    let w = canonical_representative(&fixtures::example1_rational()).map_err(|e| e.to_string())?;
    let expected = fixtures::example1_expected();
    ensure!(w.degree() == Some(2), "degree {:?}", w.degree());
    // equal up to a rational factor
    let ratio = w.u0.lc().unwrap() / expected.u0.lc().unwrap();
    ensure!(w == expected.scale(&ratio), "got {w:?}");
    Ok(format!("degree 2 representative, scale {ratio}"))
}

fn example2_cofactor() -> Outcome {
    let g = fixtures::example2_g();
    let r = complex_cofactor(&g).map_err(|e| e.to_string())?;
    ensure!(r.ell == rpoly(&[-1, 1]), "ell = {}", r.ell);
    ensure!(r.g_complex.degree() == Some(4), "deg G = {:?}", r.g_complex.degree());
    let big = QuatPoly::from_cpoly(&r.g_complex);
    let k = QuatPoly::constant(Quat::k());
    ensure!(&(&big * &k) * &big.conj() == k.mul_real(&(&r.ell * &g)), "G k Ḡ differs from ell·g·k");
    Ok(format!("ell = {}, deg G = 4", r.ell))
}

fn example3_saturation() -> Outcome {
    let u = fixtures::example3_u();
    let s = saturation(&u).map_err(|e| e.to_string())?;
    ensure!(!s.saturated, "reported saturated");
    ensure!(s.ell == Some(rpoly(&[-1, 1])), "ell = {:?}", s.ell);
    let k = is_kinematic(&u).map_err(|e| e.to_string())?;
    ensure!(k.is_none(), "reported kinematic");
    Ok("not saturated, ell = t - 1, not kinematic".into())
}

fn example4_end_to_end() -> Outcome {
    let u = fixtures::example4_u();
    let a = analyze(&u).map_err(|e| e.to_string())?;
    ensure!(a.kinematic && a.g == fixtures::example4_h(), "analysis {a:?}");
    ensure!((a.deg_u, a.deg_gauss, a.minimal_motion_degree) == (4, 2, Some(3)), "degrees {a:?}");
    for seed in [0, 1, 2] {
        let r = synthesize_minimal(&u, seed).map_err(|e| e.to_string())?;
        ensure!(r.degree == 3, "seed {seed}: degree {}", r.degree);
        let v = verify_trajectory(&r.c, &u);
        ensure!(v.ok && v.h == Some(fixtures::example4_h()), "seed {seed}: {v:?}");
    }
    let q = QuatPoly::from_component_polys(&[rpoly(&[1]), rpoly(&[0, 1]), rpoly(&[1, -1]), rpoly(&[-2, 1])]);
    let sol = dual_solve(&q, &u.u0, 2).map_err(|e| e.to_string())?;
    let c = sol.d.component_polys();
    let q_ = |pairs: &[(i64, i64)]| -> RPoly { torse_core::poly::rpoly_q(pairs) };
    ensure!(sol.v3_inv == Some(q_(&[(-1, 3), (2, 15)])), "v3^-1 = {:?}", sol.v3_inv);
    ensure!(sol.lambda.is_zero(), "lambda = {}", sol.lambda);
    ensure!(c[1] == q_(&[(-2, 3), (8, 15)]), "d1 = {}", c[1]);
    ensure!(c[2] == q_(&[(-1, 3), (3, 5)]), "d2 = {}", c[2]);
    ensure!(c[0] == q_(&[(13, 3), (-32, 15)]), "d0 = {}", c[0]);
    ensure!(c[3] == q_(&[(2, 1), (1, 15)]), "d3 = {}", c[3]);
    Ok("degree 3, h = t^2 - 6t + 10, intermediate values reproduced".into())
}

fn example5_split() -> Outcome {
    let c = fixtures::quartic_motion();
    let s = split_quadratic(&c, &rpoly(&[1, 0, 1])).map_err(|e| e.to_string())?;
    ensure!(s.factor.degree() == Some(1), "factor degree {:?}", s.factor.degree());
    let n = s.factor.dq_norm();
    ensure!(n.primal == rpoly(&[1, 0, 1]) && n.dual.is_zero(), "N(E) = {n:?}");
    ensure!(s.quotient.degree() == Some(3), "quotient degree {:?}", s.quotient.degree());
    let v = verify_trajectory(&s.quotient, &fixtures::example4_u());
    ensure!(v.ok && v.h == Some(fixtures::example4_h()), "{v:?}");
    ensure!(&s.quotient * &s.factor == c, "quotient·E differs from the input");
    Ok("linear E with N(E) = t^2 + 1, cubic quotient, exact reconstruction".into())
}

fn example6_split() -> Outcome {
    let c = fixtures::example6_motion();
    let low = fixtures::example6_low_terms();
    ensure!((0..5).all(|k| c.coeff(k) == low.coeff(k)), "fixture differs from the low-order coefficients");
    let s = split_even_power(&c, &rpoly(&[0, 1])).map_err(|e| e.to_string())?;
    let expected = fixtures::example6_factor();
    let same = s.factor == expected
        || essential_equivalence(&expected, &s.factor).map_err(|e| e.to_string())?.is_some();
    ensure!(same, "E = {:?}", s.factor);
    ensure!(&s.quotient * &s.factor == c, "quotient·E differs from the input");
    ensure!(s.quotient == fixtures::cubic_motion(), "quotient differs from the cubic solution");
    Ok("E = t^2 + ε((i - j)t + i + j), exact reconstruction".into())
}

fn cofactor_obstructions() -> Outcome {
    let u = fixtures::example4_u();
    let g = fixtures::example4_h();
    let r = synthesize_with_cofactor(&u, &RPoly::one(), 0);
    ensure!(
        r == Err(Error::NoSolution { reason: NoSolutionReason::Minimality }),
        "h = 1: {:?}",
        r.map(|x| x.degree)
    );
    let r = synthesize_with_cofactor(&u, &(&rpoly(&[-5, 1]) * &g), 0);
    ensure!(
        r == Err(Error::NoSolution { reason: NoSolutionReason::Saturation }),
        "h = (t-5)g: {:?}",
        r.map(|x| x.degree)
    );
    let r = synthesize_with_cofactor(&u, &(&rpoly(&[1, 0, 1]) * &g), 0).map_err(|e| e.to_string())?;
    ensure!(r.degree == 4, "h = (t^2+1)g: degree {}", r.degree);
    ensure!(verify_trajectory(&r.c, &u).ok, "h = (t^2+1)g: verification fails");
    Ok("MINIMALITY, SATURATION, degree 4".into())
}

fn degree_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cases = 50;
    for case in 0..cases {
        let deg = 1 + case % 4;
        let gen = common::random_motion(&mut rng, deg);
        let (w, _) = reduce_plane(&plane_trajectory(&gen).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let a = analyze(&w).map_err(|e| e.to_string())?;
        let r = synthesize_minimal(&w, case as u64).map_err(|e| format!("case {case}: {e}"))?;
        let formula = a.deg_u - a.deg_gauss / 2;
        ensure!(r.degree == formula, "case {case}: degree {} vs formula {formula}", r.degree);
        ensure!(r.degree <= deg, "case {case}: degree {} above generator {deg}", r.degree);
        ensure!(verify_trajectory(&r.c, &w).ok, "case {case}: verification fails");
    }
    Ok(format!("{cases} random motions"))
}

fn uniqueness_dichotomy() -> Outcome {
    // a generic quadratic motion: its trajectory has g = 1
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let gen = &common::random_motion(&mut rng, 2) * &common::translation(&mut rng);
    let (w, _) = reduce_plane(&plane_trajectory(&gen).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let a = analyze(&w).map_err(|e| e.to_string())?;
    ensure!(a.g.degree() == Some(0) && a.essentially_unique == Some(true), "corpus item has g = {}", a.g);
    let c1 = synthesize_minimal(&w, 1).map_err(|e| e.to_string())?.c;
    let c2 = synthesize_minimal(&w, 2).map_err(|e| e.to_string())?.c;
    let e = essential_equivalence(&c1, &c2).map_err(|e| e.to_string())?;
    ensure!(e.is_some(), "two seeds are not linked by a constant displacement");

    let u = fixtures::example4_u();
    let g = fixtures::example4_h();
    let c = synthesize_minimal(&u, 0).map_err(|e| e.to_string())?.c;
    let wide = compose_family(&c, &g, &RPoly::zero(), &rpoly(&[0, 1]), &rpoly(&[1, 0, 1]))
        .map_err(|e| e.to_string())?;
    let (other, f) = wide.reduce().map_err(|e| e.to_string())?;
    ensure!(f == g && other.degree() == Some(3), "composed motion does not reduce to degree 3");
    ensure!(verify_trajectory(&other, &u).ok, "composed motion fails verification");
    let e = essential_equivalence(&c, &other).map_err(|e| e.to_string())?;
    ensure!(e.is_none(), "the two cubic solutions are essentially equal");
    let dim = family_dimension(&c, 3).map_err(|e| e.to_string())?;
    ensure!(dim == 2 + 2 * g.degree().unwrap(), "family dimension {dim}");
    Ok(format!("constant link for g = 1; family dimension {dim} for g = t^2 - 6t + 10"))
}

fn algebra_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let n = 100;
    for i in 0..n {
        let a = common::dq_poly(&mut rng, 2, 5);
        let b = common::dq_poly(&mut rng, 2, 5);
        ensure!((&a * &b).conj() == &b.conj() * &a.conj(), "{i}: conjugation");

        let m1 = common::random_motion(&mut rng, 2);
        let m2 = common::random_motion(&mut rng, 2);
        let m12 = &m1 * &m2;
        ensure!(m12.dq_norm().primal == &m1.dq_norm().primal * &m2.dq_norm().primal, "{i}: norm");
        ensure!(m12.is_motion_polynomial(), "{i}: Study condition");

        let f = common::quat_poly(&mut rng, 4, 5);
        let g = common::quat_poly(&mut rng, 2, 5);
        for side in [Side::Right, Side::Left] {
            let (q, r) = f.qdivrem(&g, side).map_err(|e| e.to_string())?;
            let back = match side {
                Side::Right => &(&q * &g) + &r,
                Side::Left => &(&g * &q) + &r,
            };
            ensure!(back == f && r.deg_i() < g.deg_i(), "{i}: division ({side:?})");
        }

        let x = common::point(&mut rng);
        let u = common::plane_through(&mut rng, &x);
        let x2 = act_on_point(&m12, &x).map_err(|e| e.to_string())?;
        let u2 = act_on_plane(&m12, &u).map_err(|e| e.to_string())?;
        ensure!(incidence(&x2, &u2).is_zero(), "{i}: incidence");
    }
    Ok(format!("{n} instances of each invariant"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("rational torse reduction", example1_reduction),
        ("complex cofactor", example2_cofactor),
        ("saturation of a non-kinematic torse", example3_saturation),
        ("minimal synthesis end to end", example4_end_to_end),
        ("quadratic split", example5_split),
        ("even-power split", example6_split),
        ("cofactor obstructions", cofactor_obstructions),
        ("degree formula on random motions", degree_formula),
        ("uniqueness dichotomy", uniqueness_dichotomy),
        ("algebra invariants", algebra_invariants),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
