use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, RPoly};
use crate::qpoly::{DualQuatPoly, QuatPoly, Side};
use crate::quat::{DualQuat, Quat};
use crate::ring::{gaussian_quadratic_roots, real_root_count};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SplitResult {
    pub quotient: DualQuatPoly,
    pub factor: DualQuatPoly,
    pub norm_of_factor: RPoly,
}

/// `e0 + e3 k + ε(e5 i + e6 j)` for every coefficient.
pub(crate) fn is_plane_fixing(e: &DualQuatPoly) -> bool {
    e.coeffs().iter().all(|c| {
        c.primal.x.is_zero() && c.primal.y.is_zero() && c.dual.w.is_zero() && c.dual.z.is_zero()
    })
}

/// Splits off a linear right factor `E` with `N(E) = f` that fixes the
/// moving plane.
pub fn split_quadratic(c: &DualQuatPoly, f: &RPoly) -> Result<SplitResult> {
    c.require_motion()?;
    if f.degree() != Some(2) {
        return Err(Error::NotQuadratic);
    }
    let f = f.monic();
    if gaussian_quadratic_roots(&f)?.is_none() {
        return Err(Error::unsupported(format!("{f} has no Gaussian-rational roots")));
    }
    let norm = c.primal().norm_poly();
    if !f.divides(&norm) {
        return Err(Error::NotAFactor);
    }
    let r = c.rem_real(&f)?;
    let r1 = r.coeff(1);
    let Some(r1_inv) = r1.inverse() else {
        return Err(Error::MultiplicityNotOne);
    };
    let h = -(&r1_inv * &r.coeff(0));
    // h is a zero of f, so t − h right-divides C
    let f0 = DualQuat::from_primal(Quat::real(f.coeff(0)));
    let f1 = DualQuat::from_primal(Quat::real(f.coeff(1)));
    if !(h.clone() * h.clone() + f1 * h.clone() + f0).is_zero() {
        return Err(Error::MultiplicityNotOne);
    }
    let e = Poly::new(vec![-h, DualQuat::one()]);
    if !is_plane_fixing(&e) {
        return Err(Error::NotPlaneFixing);
    }
    let (quotient, rem) = c.qdivrem(&e, Side::Right)?;
    if !rem.is_zero() || &quotient * &e != *c {
        return Err(Error::NotAFactor);
    }
    if !quotient.is_motion_polynomial() {
        return Err(Error::InvariantViolation("quotient is not a motion polynomial".into()));
    }
    Ok(SplitResult {
        quotient,
        factor: e,
        norm_of_factor: f,
    })
}

/// Splits off `E = f^m + ε F` with `F = f21 i + f22 j`, where `f^m` is the
/// largest power of `f` dividing the primal part.
pub fn split_even_power(c: &DualQuatPoly, f: &RPoly) -> Result<SplitResult> {
    c.require_motion()?;
    let f = match f.degree() {
        Some(1) => f.monic(),
        Some(2) => {
            if real_root_count(f)? > 0 {
                return Err(Error::NotIrreducible);
            }
            f.monic()
        }
        _ => return Err(Error::NotQuadratic),
    };
    let mut q = c.primal();
    let mut m = 0u32;
    while let Some(next) = q.div_real_exact(&f) {
        q = next;
        m += 1;
    }
    if m == 0 {
        return Err(Error::NoRealPowerFactor);
    }
    let fm = f.pow(m);
    let qn = q.norm_poly();
    if f.divides(&qn) {
        return Err(Error::NonCoprimeCore);
    }
    let (d_quot, r) = c.dual().divrem_real(&fm)?;
    let q_inv = qn.mod_inverse(&fm)?;
    let big_f = (&q.conj() * &r).mul_real(&q_inv).rem_real(&fm)?;
    let comps = big_f.component_polys();
    if !comps[0].is_zero() || !comps[3].is_zero() {
        return Err(Error::InvariantViolation(
            "right factor is not of the plane-fixing shape".into(),
        ));
    }
    let l = (&(&q * &big_f) - &r)
        .div_real_exact(&fm)
        .ok_or_else(|| Error::InvariantViolation("Q·F − R is not divisible by f^m".into()))?;
    let k = &d_quot - &l;
    let quotient = DualQuatPoly::from_parts(&q, &k);
    let factor = DualQuatPoly::from_parts(&QuatPoly::from_real(&fm), &big_f);
    if &quotient * &factor != *c {
        return Err(Error::InvariantViolation("split does not reproduce the input".into()));
    }
    Ok(SplitResult {
        quotient,
        factor,
        norm_of_factor: fm.pow(2),
    })
}
