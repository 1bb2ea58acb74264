//! Classification of plane polynomials.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::RationalPlane;
use crate::plane::PlanePoly;
use crate::poly::RPoly;
use crate::qpoly::mobius_reparametrize;
use crate::rat::{int, Rat};
use crate::ring::{gcd_all, lcm, real_root_count, square_status, squarefree_decompose, SquareStatus};
use crate::synthesis::{primal_solve, reduce_plane, saturating_factor};

/// Clears denominators and removes the common real factor.
pub fn canonical_representative(u: &RationalPlane) -> Result<PlanePoly> {
    let parts = [&u.u0, &u.u1, &u.u2, &u.u3];
    for p in parts {
        if p.den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
    }
    let mut den = RPoly::one();
    for p in parts {
        den = lcm(&den, &p.den)?;
    }
    let mut comps = Vec::with_capacity(4);
    for p in parts {
        let k = den.exact_div(&p.den)?.expect("lcm is a multiple");
        comps.push(&p.num * &k);
    }
    let w = PlanePoly::new(comps[0].clone(), comps[1].clone(), comps[2].clone(), comps[3].clone());
    Ok(reduce_plane(&w)?.0)
}

/// `s` with `s² = u1² + u2² + u3²` and positive leading coefficient, if the
/// norm is a rational square.
pub fn is_kinematic(u: &PlanePoly) -> Result<Option<RPoly>> {
    if u.vector_is_zero() {
        return Err(Error::ZeroVectorPart);
    }
    match square_status(&u.vector_norm())? {
        SquareStatus::Square(s) => Ok(Some(s)),
        SquareStatus::NotSquare => Ok(None),
        SquareStatus::SquareOnlyOverExtension => Err(Error::unsupported(
            "norm of the vector part is a square only up to an irrational factor",
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Saturation {
    pub saturated: bool,
    /// Absent when the saturating factor has irrational coefficients.
    pub ell: Option<RPoly>,
    pub minimally_saturated: bool,
}

/// Every real zero of `g` has even multiplicity.
fn even_real_zeros(g: &RPoly) -> Result<bool> {
    if g.degree() == Some(0) {
        return Ok(true);
    }
    let sf = squarefree_decompose(g)?;
    for (part, m) in &sf.parts {
        if m % 2 == 1 && real_root_count(part)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn saturation(u: &PlanePoly) -> Result<Saturation> {
    let g = gcd_all(u.vector()).ok_or(Error::ZeroVectorPart)?;
    let saturated = even_real_zeros(&g)?;
    let ell = match saturating_factor(&g) {
        Ok(l) => Some(l),
        Err(Error::UnsupportedFieldExtension(_)) => None,
        Err(e) => return Err(e),
    };
    // dividing by a non-real quadratic or a squared real factor keeps
    // saturation, dividing by a simple real factor breaks it
    let f = gcd_all(u.components()).expect("nonzero");
    let minimally_saturated = saturated
        && (f.degree() == Some(0)
            || (f.gcd(&f.derivative())?.degree() == Some(0) && Some(real_root_count(&f)?) == f.degree()));
    Ok(Saturation {
        saturated,
        ell,
        minimally_saturated,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorseAnalysis {
    pub reduced: bool,
    pub kinematic: bool,
    pub norm_sqrt: Option<RPoly>,
    pub g: RPoly,
    pub ell: Option<RPoly>,
    pub saturated: bool,
    pub minimally_saturated: bool,
    pub deg_u: usize,
    pub deg_gauss: usize,
    pub minimal_motion_degree: Option<usize>,
    pub essentially_unique: Option<bool>,
    pub unsupported_reason: Option<String>,
    /// The reduced representative the degrees refer to.
    pub representative: PlanePoly,
}

impl TorseAnalysis {
    pub fn supported(&self) -> bool {
        self.kinematic && self.unsupported_reason.is_none()
    }
}

pub fn analyze(u: &PlanePoly) -> Result<TorseAnalysis> {
    if u.vector_is_zero() {
        return Err(Error::ZeroVectorPart);
    }
    let (w, f) = reduce_plane(u)?;
    let reduced = f.degree() == Some(0);
    let g = gcd_all(u.vector()).expect("nonzero");
    let sat = saturation(u)?;

    let g_w = gcd_all(w.vector()).expect("nonzero");
    let v: [RPoly; 3] = w.vector().map(|c| c.exact_div(&g_w).ok().flatten().expect("gcd divides"));
    let deg_u = w.degree().unwrap_or(0);
    let deg_gauss = v.iter().filter_map(|c| c.degree()).max().unwrap_or(0);

    let mut reason = None;
    let (kinematic, norm_sqrt) = match is_kinematic(u) {
        Ok(Some(s)) => (true, Some(s)),
        Ok(None) => {
            reason = Some(Error::NotKinematic.code().to_string());
            (false, None)
        }
        Err(e @ Error::UnsupportedFieldExtension(_)) => {
            reason = Some(e.code().to_string());
            (true, None)
        }
        Err(e) => return Err(e),
    };
    if kinematic && reason.is_none() {
        if let Err(e) = primal_solve(&v) {
            reason = Some(e.code().to_string());
        }
    }
    let (minimal_motion_degree, essentially_unique) = if kinematic && reason.is_none() {
        if deg_gauss % 2 == 1 {
            return Err(Error::InvariantViolation(
                "Gauss map degree of a kinematic plane polynomial is odd".into(),
            ));
        }
        (Some(deg_u - deg_gauss / 2), Some(deg_u == deg_gauss))
    } else {
        (None, None)
    };
    Ok(TorseAnalysis {
        reduced,
        kinematic,
        norm_sqrt,
        g,
        ell: sat.ell,
        saturated: sat.saturated,
        minimally_saturated: sat.minimally_saturated,
        deg_u,
        deg_gauss,
        minimal_motion_degree,
        essentially_unique,
        unsupported_reason: reason,
        representative: w,
    })
}

const EQUALIZE_CANDIDATES: i64 = 24;

/// A Möbius reparametrization `t ↦ (αt+β)/(γt+δ)` after which all nonzero
/// components have the same degree.
pub fn equalize_degrees(u: &PlanePoly) -> Result<(PlanePoly, [Rat; 4])> {
    let equal = |w: &PlanePoly| {
        let mut degs = w.components().into_iter().filter_map(|c| c.degree());
        let first = degs.next();
        degs.all(|d| Some(d) == first)
    };
    if equal(u) {
        return Ok((u.clone(), [int(1), int(0), int(0), int(1)]));
    }
    // t ↦ b + 1/t keeps every component at full degree unless it vanishes at b
    for n in 0..EQUALIZE_CANDIDATES {
        let b = if n % 2 == 0 { int(n / 2) } else { int(-(n + 1) / 2) };
        if u.components().iter().any(|c| !c.is_zero() && c.eval_rat(&b).is_zero()) {
            continue;
        }
        let m = [b, int(1), int(1), int(0)];
        let dq = mobius_reparametrize(&u.to_dq(), &m[0], &m[1], &m[2], &m[3])?;
        let w = PlanePoly::from_dq(&dq)?;
        if equal(&w) {
            return Ok((w, m));
        }
    }
    Err(Error::FailedToEqualize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::rpoly;

    #[test]
    fn example_one() {
        let w = canonical_representative(&fixtures::example1_rational()).unwrap();
        assert_eq!(w, fixtures::example1_expected());
        assert_eq!(w.degree(), Some(2));
    }

    #[test]
    fn example_three() {
        let u = fixtures::example3_u();
        let s = saturation(&u).unwrap();
        assert!(!s.saturated);
        assert_eq!(s.ell, Some(rpoly(&[-1, 1])));
        assert_eq!(is_kinematic(&u).unwrap(), None);
    }

    #[test]
    fn example_four() {
        let a = analyze(&fixtures::example4_u()).unwrap();
        assert!(a.reduced && a.kinematic && a.saturated);
        assert_eq!(a.g, fixtures::example4_h());
        assert_eq!(a.ell, Some(RPoly::one()));
        assert_eq!((a.deg_u, a.deg_gauss), (4, 2));
        assert_eq!(a.minimal_motion_degree, Some(3));
        assert_eq!(a.essentially_unique, Some(false));
    }

    #[test]
    fn small_analyses() {
        let pencil = PlanePoly::new(rpoly(&[0, 1]), RPoly::zero(), RPoly::zero(), RPoly::one());
        let a = analyze(&pencil).unwrap();
        assert_eq!((a.deg_u, a.deg_gauss, a.minimal_motion_degree), (1, 0, Some(1)));
        assert_eq!(a.essentially_unique, Some(false));
        let rot = PlanePoly::new(RPoly::zero(), RPoly::zero(), rpoly(&[0, 2]), rpoly(&[-1, 0, 1]));
        let a = analyze(&rot).unwrap();
        assert_eq!(a.norm_sqrt, Some(rpoly(&[1, 0, 1])));
        assert_eq!((a.deg_u, a.deg_gauss, a.minimal_motion_degree), (2, 2, Some(1)));
        assert_eq!(a.essentially_unique, Some(true));
    }

    #[test]
    fn irrational_cases() {
        let u = PlanePoly::new(RPoly::zero(), rpoly(&[1]), rpoly(&[1]), RPoly::zero());
        assert!(matches!(is_kinematic(&u), Err(Error::UnsupportedFieldExtension(_))));
        let a = analyze(&u).unwrap();
        assert!(a.kinematic && !a.supported());
        let q = rpoly(&[-2, 0, 1]);
        let u = PlanePoly::new(RPoly::zero(), RPoly::zero(), RPoly::zero(), q.clone());
        let s = saturation(&u).unwrap();
        assert!(!s.saturated);
        assert_eq!(s.ell, Some(q));
    }

    #[test]
    fn equalize() {
        let u = PlanePoly::k();
        let (w, m) = equalize_degrees(&u).unwrap();
        assert_eq!(w, u);
        assert_eq!(m, [int(1), int(0), int(0), int(1)]);
        let (w, _) = equalize_degrees(&fixtures::example4_u()).unwrap();
        assert!(w.components().iter().all(|c| c.degree() == Some(4)));
        let u = PlanePoly::new(rpoly(&[0, 1]), rpoly(&[1]), RPoly::zero(), RPoly::zero());
        let (w, _) = equalize_degrees(&u).unwrap();
        assert_eq!(w.u0.degree(), w.u1.degree());
        let (w, _) = equalize_degrees(&fixtures::example1_expected()).unwrap();
        let degs: Vec<_> = w.components().iter().map(|c| c.degree()).collect();
        assert!(degs.iter().all(|d| *d == Some(2)));
        assert_eq!(analyze(&w).unwrap().deg_gauss, analyze(&fixtures::example1_expected()).unwrap().deg_gauss);
    }
}
