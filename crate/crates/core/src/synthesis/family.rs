use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::poly::{Poly, RPoly};
use crate::qpoly::{DualQuatPoly, QuatPoly};
use crate::quat::{DualQuat, Quat};
use crate::rat::int;
use crate::synthesis::split::is_plane_fixing;

/// `C·(e0 + e3 k + ε(e5 i + e6 j))`.
pub fn compose_family(
    c: &DualQuatPoly,
    e0: &RPoly,
    e3: &RPoly,
    e5: &RPoly,
    e6: &RPoly,
) -> Result<DualQuatPoly> {
    c.require_motion()?;
    if e0.is_zero() && e3.is_zero() {
        return Err(Error::ZeroPrimalFamily);
    }
    let z = RPoly::zero();
    let primal = QuatPoly::from_component_polys(&[e0.clone(), z.clone(), z.clone(), e3.clone()]);
    let dual = QuatPoly::from_component_polys(&[z.clone(), e5.clone(), e6.clone(), z]);
    Ok(c * &DualQuatPoly::from_parts(&primal, &dual))
}

/// A constant plane-fixing `E` with `C2 = C1·E`, if one exists.
pub fn essential_equivalence(c1: &DualQuatPoly, c2: &DualQuatPoly) -> Result<Option<DualQuat>> {
    c1.require_motion()?;
    c2.require_motion()?;
    let (p1, p2) = (c1.primal(), c2.primal());
    let n = p1.degree().expect("motion");
    if p2.degree() != Some(n) {
        return Ok(None);
    }
    let lc_inv = p1.lc().and_then(|l| l.inverse()).expect("nonzero");
    let e = &lc_inv * p2.lc().expect("nonzero");
    let rest = &c2.dual() - &c1.dual().mul_right(&e);
    let f = &lc_inv * &rest.coeff(n);
    let cand = DualQuat::new(e, f);
    let ce = c1.mul_right(&cand);
    if ce != *c2 || !is_plane_fixing(&DualQuatPoly::constant(cand.clone())) {
        return Ok(None);
    }
    Ok(Some(cand))
}

/// Dimension of the space of dual parts `δ` of degree at most `degree` with
/// `P k δ̄ − δ k P̄ = 0` and `P δ̄ + δ P̄ = 0`: the motions `P + ε(D + δ)`
/// sharing primal part and plane trajectory with `C = P + εD`.
pub fn family_dimension(c: &DualQuatPoly, degree: usize) -> Result<usize> {
    c.require_motion()?;
    let p = c.primal();
    let pc = p.conj();
    let k = QuatPoly::constant(Quat::k());
    let pk = &p * &k;
    let kpc = &k * &pc;
    let mut columns: Vec<Vec<_>> = Vec::new();
    for m in 0..=degree {
        for axis in 0..4 {
            let mut unit = [int(0), int(0), int(0), int(0)];
            unit[axis] = int(1);
            let delta: QuatPoly = Poly::monomial(Quat::from_components(unit), m);
            let dc = delta.conj();
            let trajectory = &(&pk * &dc) - &(&delta * &kpc);
            let study = &(&p * &dc) + &(&delta * &pc);
            let mut col = Vec::new();
            for e in [trajectory, study] {
                for i in 0..=(degree + p.degree().unwrap_or(0)) {
                    col.extend(e.coeff(i).components().into_iter().cloned());
                }
            }
            columns.push(col);
        }
    }
    let ncols = columns.len();
    let rows: Vec<Vec<_>> = (0..columns[0].len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    Ok(nullspace(&rows, ncols).len())
}
