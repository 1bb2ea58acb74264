//! Worked examples used by the demo, the tests and the browser page.

use crate::json::{RatFunc, RationalPlane};
use crate::plane::PlanePoly;
use crate::poly::{rpoly, Poly, RPoly};
use crate::qpoly::DualQuatPoly;
use crate::quat::{DualQuat, Quat};
use crate::rat::{int, rat};

/// Dual quaternion `(a + b i + c j + d k) + ε(e + f i + g j + h k)/den`
/// with the primal part over `1` and the dual part over `den`.
fn dq(p: [i64; 4], d: [i64; 4], den: i64) -> DualQuat {
    DualQuat::new(
        Quat::new(int(p[0]), int(p[1]), int(p[2]), int(p[3])),
        Quat::new(rat(d[0], den), rat(d[1], den), rat(d[2], den), rat(d[3], den)),
    )
}

fn rf(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc {
        num: rpoly(num),
        den: rpoly(den),
    }
}

/// `((t+1)/t) i + (1/(t−1)) j + (2(t+1)/(t−1)) k + ε (t+1)/(t(t−1))`.
pub fn example1_rational() -> RationalPlane {
    RationalPlane {
        u0: rf(&[1, 1], &[0, -1, 1]),
        u1: rf(&[1, 1], &[0, 1]),
        u2: rf(&[1], &[-1, 1]),
        u3: rf(&[2, 2], &[-1, 1]),
    }
}

pub fn example1_expected() -> PlanePoly {
    PlanePoly::new(rpoly(&[1, 1]), rpoly(&[-1, 0, 1]), rpoly(&[0, 1]), rpoly(&[0, 2, 2]))
}

/// `t²(t−1)³(t²+1)`.
pub fn example2_g() -> RPoly {
    let t = rpoly(&[0, 1]);
    &(&t.pow(2) * &rpoly(&[-1, 1]).pow(3)) * &rpoly(&[1, 0, 1])
}

pub fn example3_u() -> PlanePoly {
    let g = example2_g();
    PlanePoly::new(
        RPoly::monomial(int(1), 8),
        &g * &rpoly(&[0, 1]),
        &g * &rpoly(&[-1, 1]),
        &g * &rpoly(&[-2, 1]),
    )
}

pub fn example4_h() -> RPoly {
    rpoly(&[10, -6, 1])
}

pub fn example4_v() -> [RPoly; 3] {
    [rpoly(&[2, -6, 2]), rpoly(&[-4, 4, -2]), rpoly(&[4, -2, -1])]
}

pub fn example4_u() -> PlanePoly {
    let h = example4_h();
    let [v1, v2, v3] = example4_v();
    PlanePoly::new(rpoly(&[20, -14, 2]), &h * &v1, &h * &v2, &h * &v3)
}

/// A cubic motion with trajectory `g·u` for `example4_u`.
pub fn cubic_motion() -> DualQuatPoly {
    Poly::new(vec![
        dq([10, 0, 10, -20], [13, -2, -1, 6], 3),
        dq([-6, 10, -16, 22], [-32, 8, 9, 1], 15),
        dq([1, -6, 7, -8], [0, 0, 0, 0], 1),
        dq([0, 1, -1, 1], [0, 0, 0, 0], 1),
    ])
}

/// A quartic motion with trajectory `(t²+1)·g·u` for `example4_u`.
pub fn quartic_motion() -> DualQuatPoly {
    Poly::new(vec![
        dq([-20, -10, 0, -10], [-120, 455, -160, -215], 15),
        dq([32, 16, 20, -14], [306, -589, -207, 302], 15),
        dq([-14, 3, -22, 21], [-437, 383, 324, -104], 15),
        dq([2, -5, 8, -8], [13, -8, -8, 1], 1),
        dq([0, 1, -1, 1], [-2, 1, 1, 0], 1),
    ])
}

/// `t − k + ε((i − j)t + i + j)`.
pub fn example5_factor() -> DualQuatPoly {
    Poly::new(vec![dq([0, 0, 0, -1], [0, 1, 1, 0], 1), dq([1, 0, 0, 0], [0, 1, -1, 0], 1)])
}

/// `t² + ε((i − j)t + i + j)`.
pub fn example6_factor() -> DualQuatPoly {
    Poly::new(vec![
        dq([0, 0, 0, 0], [0, 1, 1, 0], 1),
        dq([0, 0, 0, 0], [0, 1, -1, 0], 1),
        dq([1, 0, 0, 0], [0, 0, 0, 0], 1),
    ])
}

/// The coefficients of `example6_motion` up to `t⁴`, written out. The
/// product with the right factor also has the leading term `(i − j + k)t⁵`.
pub fn example6_low_terms() -> DualQuatPoly {
    Poly::new(vec![
        dq([0, 0, 0, 0], [-10, 30, -10, -10], 1),
        dq([0, 0, 0, 0], [16, -38, -14, 16], 1),
        dq([10, 0, 10, -20], [-68, 73, 62, -15], 3),
        dq([-6, 10, -16, 22], [163, -112, -111, 16], 15),
        dq([1, -6, 7, -8], [-2, 1, 1, 0], 1),
    ])
}

/// A quintic motion with trajectory `t⁴·g·u`.
pub fn example6_motion() -> DualQuatPoly {
    &cubic_motion() * &example6_factor()
}
