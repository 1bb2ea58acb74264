#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use torse_core::poly::{Poly, Ring};
use torse_core::rat::{int, rat};
use torse_core::{DualQuat, DualQuatPoly, PlanePoly, PointPoly, Quat, QuatPoly, Rat, RPoly};

pub fn small_rat(rng: &mut ChaCha8Rng, range: i64) -> Rat {
    rat(rng.gen_range(-range..=range), rng.gen_range(1..=3))
}

pub fn quat(rng: &mut ChaCha8Rng, range: i64) -> Quat {
    Quat::new(
        small_rat(rng, range),
        small_rat(rng, range),
        small_rat(rng, range),
        small_rat(rng, range),
    )
}

pub fn nonzero_vector(rng: &mut ChaCha8Rng, range: i64) -> Quat {
    loop {
        let q = quat(rng, range).vector();
        if !q.is_real() {
            return q;
        }
    }
}

pub fn rpoly(rng: &mut ChaCha8Rng, deg: usize, range: i64) -> RPoly {
    Poly::new((0..=deg).map(|_| small_rat(rng, range)).collect())
}

pub fn quat_poly(rng: &mut ChaCha8Rng, deg: usize, range: i64) -> QuatPoly {
    Poly::new((0..=deg).map(|_| quat(rng, range)).collect())
}

pub fn dq_poly(rng: &mut ChaCha8Rng, deg: usize, range: i64) -> DualQuatPoly {
    Poly::new(
        (0..=deg)
            .map(|_| DualQuat::new(quat(rng, range), quat(rng, range)))
            .collect(),
    )
}

/// `t − h` for a rotation `h = p + ε d` with `p·d = 0`.
pub fn rotation_factor(rng: &mut ChaCha8Rng) -> DualQuatPoly {
    let p = nonzero_vector(rng, 3);
    let r = quat(rng, 3).vector();
    let d = (&p * &r).vector();
    let h = DualQuat::new(p, d);
    Poly::new(vec![-h, DualQuat::new(Quat::real(int(1)), Quat::real(int(0)))])
}

/// `1 − ½ ε τ`.
pub fn translation(rng: &mut ChaCha8Rng) -> DualQuatPoly {
    let tau = quat(rng, 4).vector();
    DualQuatPoly::constant(DualQuat::new(Quat::real(int(1)), tau.scale(&rat(-1, 2))))
}

/// A product of `deg` linear rotation factors and constant translations.
pub fn random_motion(rng: &mut ChaCha8Rng, deg: usize) -> DualQuatPoly {
    let mut c = translation(rng);
    for _ in 0..deg {
        c = &c * &rotation_factor(rng);
        if rng.gen_bool(0.5) {
            c = &c * &translation(rng);
        }
    }
    c
}

pub fn point(rng: &mut ChaCha8Rng) -> PointPoly {
    PointPoly::cartesian(small_rat(rng, 5), small_rat(rng, 5), small_rat(rng, 5))
}

/// A constant plane through the given point.
pub fn plane_through(rng: &mut ChaCha8Rng, x: &PointPoly) -> PlanePoly {
    let n = nonzero_vector(rng, 4);
    let [_, x1, x2, x3] = x.eval(&int(0));
    let d = -(&(&n.x * &x1) + &(&(&n.y * &x2) + &(&n.z * &x3)));
    PlanePoly::new(
        RPoly::constant(d),
        RPoly::constant(n.x.clone()),
        RPoly::constant(n.y.clone()),
        RPoly::constant(n.z.clone()),
    )
}
