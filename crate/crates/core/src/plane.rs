//! Plane and point polynomials and the kinematic actions on them.
//!
//! A plane `u0 + u1·x + u2·y + u3·z = 0` is the dual quaternion
//! `u1 i + u2 j + u3 k + ε u0`, a point with homogeneous coordinates
//! `(x0, x1, x2, x3)` is `x0 + ε(x1 i + x2 j + x3 k)`. A motion `C = P + εD`
//! acts on both by `x ↦ (P − εD)·x·C̄`. Acting first by `C1`, then by `C2`, is
//! the action of `C2·C1`.

use crate::error::{Error, Result};
use crate::poly::RPoly;
use crate::qpoly::DualQuatPoly;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PlanePoly {
    pub u0: RPoly,
    pub u1: RPoly,
    pub u2: RPoly,
    pub u3: RPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PointPoly {
    pub x0: RPoly,
    pub x1: RPoly,
    pub x2: RPoly,
    pub x3: RPoly,
}

fn zero() -> RPoly {
    RPoly::zero()
}

impl PlanePoly {
    pub fn new(u0: RPoly, u1: RPoly, u2: RPoly, u3: RPoly) -> Self {
        PlanePoly { u0, u1, u2, u3 }
    }

    /// The plane `z = 0`, i.e. `k`.
    pub fn k() -> Self {
        PlanePoly::new(zero(), zero(), zero(), RPoly::one())
    }

    pub fn components(&self) -> [&RPoly; 4] {
        [&self.u0, &self.u1, &self.u2, &self.u3]
    }

    pub fn vector(&self) -> [&RPoly; 3] {
        [&self.u1, &self.u2, &self.u3]
    }

    pub fn vector_is_zero(&self) -> bool {
        self.vector().iter().all(|c| c.is_zero())
    }

    /// `u1² + u2² + u3²`.
    pub fn vector_norm(&self) -> RPoly {
        self.vector()
            .iter()
            .fold(zero(), |acc, c| &acc + &(*c * *c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.components().iter().filter_map(|c| c.degree()).max()
    }

    pub fn map(&self, f: impl Fn(&RPoly) -> RPoly) -> Self {
        PlanePoly::new(f(&self.u0), f(&self.u1), f(&self.u2), f(&self.u3))
    }

    pub fn mul_real(&self, f: &RPoly) -> Self {
        self.map(|c| c * f)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn to_dq(&self) -> DualQuatPoly {
        DualQuatPoly::from_component_polys(&[
            zero(),
            self.u1.clone(),
            self.u2.clone(),
            self.u3.clone(),
            self.u0.clone(),
            zero(),
            zero(),
            zero(),
        ])
    }

    /// Reads a plane from a dual quaternion polynomial, failing if the primal
    /// scalar or dual vector part is nonzero.
    pub fn from_dq(w: &DualQuatPoly) -> Result<Self> {
        let c = w.component_polys();
        if !c[0].is_zero() || !c[5].is_zero() || !c[6].is_zero() || !c[7].is_zero() {
            return Err(Error::InvariantViolation("not a plane polynomial".into()));
        }
        Ok(PlanePoly::new(c[4].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
    }

    pub fn eval(&self, t: &Rat) -> [Rat; 4] {
        [
            self.u0.eval_rat(t),
            self.u1.eval_rat(t),
            self.u2.eval_rat(t),
            self.u3.eval_rat(t),
        ]
    }
}

impl PointPoly {
    pub fn new(x0: RPoly, x1: RPoly, x2: RPoly, x3: RPoly) -> Self {
        PointPoly { x0, x1, x2, x3 }
    }

    /// A constant point with Cartesian coordinates `(x, y, z)`.
    pub fn cartesian(x: Rat, y: Rat, z: Rat) -> Self {
        PointPoly::new(
            RPoly::one(),
            RPoly::constant(x),
            RPoly::constant(y),
            RPoly::constant(z),
        )
    }

    pub fn components(&self) -> [&RPoly; 4] {
        [&self.x0, &self.x1, &self.x2, &self.x3]
    }

    pub fn to_dq(&self) -> DualQuatPoly {
        DualQuatPoly::from_component_polys(&[
            self.x0.clone(),
            zero(),
            zero(),
            zero(),
            zero(),
            self.x1.clone(),
            self.x2.clone(),
            self.x3.clone(),
        ])
    }

    pub fn from_dq(w: &DualQuatPoly) -> Result<Self> {
        let c = w.component_polys();
        if !c[1].is_zero() || !c[2].is_zero() || !c[3].is_zero() || !c[4].is_zero() {
            return Err(Error::InvariantViolation("not a point polynomial".into()));
        }
        Ok(PointPoly::new(c[0].clone(), c[5].clone(), c[6].clone(), c[7].clone()))
    }

    pub fn eval(&self, t: &Rat) -> [Rat; 4] {
        [
            self.x0.eval_rat(t),
            self.x1.eval_rat(t),
            self.x2.eval_rat(t),
            self.x3.eval_rat(t),
        ]
    }
}

/// `x0·u0 + x1·u1 + x2·u2 + x3·u3`.
pub fn incidence(x: &PointPoly, u: &PlanePoly) -> RPoly {
    &(&(&(&x.x0 * &u.u0) + &(&x.x1 * &u.u1)) + &(&x.x2 * &u.u2)) + &(&x.x3 * &u.u3)
}

fn sandwich(c: &DualQuatPoly, x: &DualQuatPoly) -> DualQuatPoly {
    &(&c.eps_conj() * x) * &c.conj()
}

pub fn act_on_point(c: &DualQuatPoly, x: &PointPoly) -> Result<PointPoly> {
    c.require_motion()?;
    PointPoly::from_dq(&sandwich(c, &x.to_dq()))
}

pub fn act_on_plane(c: &DualQuatPoly, u: &PlanePoly) -> Result<PlanePoly> {
    c.require_motion()?;
    PlanePoly::from_dq(&sandwich(c, &u.to_dq()))
}

/// Trajectory of the moving plane `z = 0`.
pub fn plane_trajectory(c: &DualQuatPoly) -> Result<PlanePoly> {
    act_on_plane(c, &PlanePoly::k())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::poly::rpoly;
    use crate::quat::{DualQuat, Quat};
    use crate::rat::{int, rat};
    use num_traits::Zero;

    fn translation(x: Rat, y: Rat, z: Rat) -> DualQuatPoly {
        let half = rat(-1, 2);
        DualQuatPoly::constant(DualQuat::new(
            Quat::from_ints(1, 0, 0, 0),
            Quat::new(Rat::zero(), x * &half, y * &half, z * half),
        ))
    }

    #[test]
    fn identity_action() {
        let x = PointPoly::cartesian(int(1), int(2), int(3));
        assert_eq!(act_on_point(&DualQuatPoly::one(), &x).unwrap(), x);
        assert_eq!(plane_trajectory(&DualQuatPoly::one()).unwrap(), PlanePoly::k());
    }

    #[test]
    fn translation_moves_origin() {
        let c = translation(int(1), int(0), int(0));
        let origin = PointPoly::cartesian(int(0), int(0), int(0));
        assert_eq!(
            act_on_point(&c, &origin).unwrap(),
            PointPoly::cartesian(int(1), int(0), int(0))
        );
    }

    #[test]
    fn rotation_trajectory() {
        let c = DualQuatPoly::new(vec![
            DualQuat::from_primal(Quat::from_ints(0, -1, 0, 0)),
            DualQuat::one(),
        ]);
        let u = plane_trajectory(&c).unwrap();
        assert_eq!(u, PlanePoly::new(rpoly(&[0]), rpoly(&[0]), rpoly(&[0, 2]), rpoly(&[-1, 0, 1])));
        let x = act_on_point(&c, &PointPoly::cartesian(int(0), int(1), int(0))).unwrap();
        assert_eq!(x.x0, rpoly(&[1, 0, 1]));
        assert_eq!(
            &(&(&x.x1 * &x.x1) + &(&x.x2 * &x.x2)) + &(&x.x3 * &x.x3),
            rpoly(&[1, 0, 1]).pow(2)
        );
    }

    #[test]
    fn composition_order() {
        // rotate about the z-axis by a half turn, then translate along x
        let r = DualQuatPoly::constant(DualQuat::from_primal(Quat::k()));
        let s = translation(int(1), int(0), int(0));
        let x = PointPoly::cartesian(int(1), int(0), int(0));
        let two_step = act_on_point(&s, &act_on_point(&r, &x).unwrap()).unwrap();
        let composite = act_on_point(&(&s * &r), &x).unwrap();
        assert_eq!(two_step, composite);
        assert_eq!(composite, PointPoly::cartesian(int(0), int(0), int(0)));
    }

    #[test]
    fn rejects_non_motion() {
        let c = DualQuatPoly::constant(DualQuat::from_dual(Quat::i()));
        assert!(matches!(
            plane_trajectory(&c),
            Err(Error::NotAMotionPolynomial(_))
        ));
    }
}
