//! Quaternion and dual-quaternion polynomials.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{CPoly, Gauss};
use crate::poly::{Poly, RPoly, Ring};
use crate::quat::{DualQuat, Quat};
use crate::rat::Rat;
use crate::ring::gcd_all;

pub type QuatPoly = Poly<Quat>;
pub type DualQuatPoly = Poly<DualQuat>;

/// Coefficient types that are a fixed number of rational coordinates.
pub trait Components: Ring {
    const N: usize;
    fn to_vec(&self) -> Vec<Rat>;
    fn from_slice(c: &[Rat]) -> Self;
}

impl Components for Rat {
    const N: usize = 1;
    fn to_vec(&self) -> Vec<Rat> {
        vec![self.clone()]
    }
    fn from_slice(c: &[Rat]) -> Self {
        c[0].clone()
    }
}

impl Components for Gauss {
    const N: usize = 2;
    fn to_vec(&self) -> Vec<Rat> {
        vec![self.re.clone(), self.im.clone()]
    }
    fn from_slice(c: &[Rat]) -> Self {
        Gauss::new(c[0].clone(), c[1].clone())
    }
}

impl Components for Quat {
    const N: usize = 4;
    fn to_vec(&self) -> Vec<Rat> {
        self.components().into_iter().cloned().collect()
    }
    fn from_slice(c: &[Rat]) -> Self {
        Quat::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }
}

impl Components for DualQuat {
    const N: usize = 8;
    fn to_vec(&self) -> Vec<Rat> {
        self.components().into_iter().cloned().collect()
    }
    fn from_slice(c: &[Rat]) -> Self {
        DualQuat::new(Quat::from_slice(&c[..4]), Quat::from_slice(&c[4..]))
    }
}

/// Coefficients with a (possibly partial) two-sided inverse.
pub trait DivRing: Ring {
    fn try_inverse(&self) -> Option<Self>;
}

impl DivRing for Quat {
    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

impl DivRing for DualQuat {
    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `F = Q·G + R`.
    Right,
    /// `F = G·Q + R`.
    Left,
}

impl<R: Components> Poly<R> {
    /// The real coordinate polynomials.
    pub fn component_polys(&self) -> Vec<RPoly> {
        (0..R::N)
            .map(|n| Poly::new(self.coeffs().iter().map(|c| c.to_vec()[n].clone()).collect()))
            .collect()
    }

    pub fn from_component_polys(parts: &[RPoly]) -> Self {
        assert_eq!(parts.len(), R::N);
        let len = parts.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        Poly::new(
            (0..len)
                .map(|i| R::from_slice(&parts.iter().map(|p| p.coeff(i)).collect::<Vec<_>>()))
                .collect(),
        )
    }

    /// Monic gcd of all coordinate polynomials.
    pub fn rgcd(&self) -> Result<RPoly> {
        gcd_all(self.component_polys().iter()).ok_or(Error::ZeroPolynomial)
    }

    /// `self = rgcd·reduced` with monic `rgcd`.
    pub fn reduce(&self) -> Result<(Self, RPoly)> {
        let g = self.rgcd()?;
        let r = self.div_real_exact(&g).expect("rgcd divides every coordinate");
        Ok((r, g))
    }

    pub fn divrem_real(&self, f: &RPoly) -> Result<(Self, Self)> {
        let mut qs = Vec::with_capacity(R::N);
        let mut rs = Vec::with_capacity(R::N);
        for c in self.component_polys() {
            let (q, r) = c.divrem(f)?;
            qs.push(q);
            rs.push(r);
        }
        Ok((Self::from_component_polys(&qs), Self::from_component_polys(&rs)))
    }

    pub fn rem_real(&self, f: &RPoly) -> Result<Self> {
        Ok(self.divrem_real(f)?.1)
    }

    /// Exact quotient by a real polynomial, `None` if some coordinate leaves
    /// a remainder or `f = 0`.
    pub fn div_real_exact(&self, f: &RPoly) -> Option<Self> {
        let (q, r) = self.divrem_real(f).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn is_real_multiple_of(&self, f: &RPoly) -> bool {
        self.div_real_exact(f).is_some()
    }
}

impl<R: DivRing> Poly<R> {
    /// Division by a polynomial whose leading coefficient is invertible.
    pub fn qdivrem(&self, g: &Self, side: Side) -> Result<(Self, Self)> {
        let dg = g.degree().ok_or(Error::DivisionByZeroPoly)?;
        let inv = g
            .lc()
            .and_then(|c| c.try_inverse())
            .ok_or(Error::NonInvertibleLeadingCoefficient)?;
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs().len().saturating_sub(dg)];
        while let Some(dr) = rem.degree() {
            if dr < dg {
                break;
            }
            let lc = rem.lc().expect("nonzero").clone();
            let c = match side {
                Side::Right => lc * inv.clone(),
                Side::Left => inv.clone() * lc,
            };
            let term = Poly::monomial(c.clone(), dr - dg);
            let sub = match side {
                Side::Right => &term * g,
                Side::Left => g * &term,
            };
            rem = &rem - &sub;
            quot[dr - dg] = c;
            if rem.degree() == Some(dr) {
                return Err(Error::InvariantViolation("division failed to cancel leading term".into()));
            }
        }
        Ok((Poly::new(quot), rem))
    }
}

impl QuatPoly {
    pub fn conj(&self) -> Self {
        self.map(Quat::conj)
    }

    /// `P·P̄`, a real polynomial.
    pub fn norm_poly(&self) -> RPoly {
        (self * &self.conj()).map(|q| q.w.clone())
    }

    pub fn from_real(p: &RPoly) -> Self {
        p.map(Quat::from_rat)
    }

    /// Embeds `re + im·k`.
    pub fn from_cpoly(c: &CPoly) -> Self {
        c.map(|g| Quat::new(g.re.clone(), Rat::zero(), Rat::zero(), g.im.clone()))
    }

    /// The scalar and `k` coordinates as a complex polynomial, if the `i` and
    /// `j` coordinates vanish.
    pub fn to_cpoly(&self) -> Option<CPoly> {
        let c = self.component_polys();
        (c[1].is_zero() && c[2].is_zero()).then(|| CPoly::from_parts(&c[0], &c[3]))
    }

    pub fn vector(&self) -> Self {
        self.map(Quat::vector)
    }

    pub fn scalar(&self) -> RPoly {
        self.map(|q| q.w.clone())
    }

    pub fn is_vectorial(&self) -> bool {
        self.scalar().is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DqNorm {
    /// Scalar part of the primal norm.
    pub primal: RPoly,
    /// The primal norm has no vector part (always true).
    pub primal_is_real: bool,
    /// Scalar part of the dual norm.
    pub dual: RPoly,
    /// The dual norm has no vector part.
    pub dual_is_real: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MotionDefect {
    ZeroPrimal,
    StudyCondition,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Involutions {
    pub conjugate: DualQuatPoly,
    pub eps_conjugate: DualQuatPoly,
    pub vector_part: DualQuatPoly,
    pub scalar_part: DualQuatPoly,
}

impl DualQuatPoly {
    pub fn from_parts(primal: &QuatPoly, dual: &QuatPoly) -> Self {
        let n = primal.coeffs().len().max(dual.coeffs().len());
        Poly::new(
            (0..n)
                .map(|i| DualQuat::new(primal.coeff(i), dual.coeff(i)))
                .collect(),
        )
    }

    pub fn from_primal(p: &QuatPoly) -> Self {
        p.map(|q| DualQuat::from_primal(q.clone()))
    }

    pub fn primal(&self) -> QuatPoly {
        self.map(|h| h.primal.clone())
    }

    pub fn dual(&self) -> QuatPoly {
        self.map(|h| h.dual.clone())
    }

    pub fn conj(&self) -> Self {
        self.map(DualQuat::conj)
    }

    pub fn eps_conj(&self) -> Self {
        self.map(DualQuat::eps_conj)
    }

    pub fn vector_part(&self) -> Self {
        self.map(|h| DualQuat::new(h.primal.vector(), h.dual.vector()))
    }

    pub fn scalar_part(&self) -> Self {
        self.map(|h| {
            DualQuat::new(
                Quat::real(h.primal.w.clone()),
                Quat::real(h.dual.w.clone()),
            )
        })
    }

    pub fn involutions(&self) -> Involutions {
        Involutions {
            conjugate: self.conj(),
            eps_conjugate: self.eps_conj(),
            vector_part: self.vector_part(),
            scalar_part: self.scalar_part(),
        }
    }

    pub fn dq_norm(&self) -> DqNorm {
        let n = self * &self.conj();
        let p = n.primal();
        let d = n.dual();
        DqNorm {
            primal: p.scalar(),
            primal_is_real: p.vector().is_zero(),
            dual: d.scalar(),
            dual_is_real: d.vector().is_zero(),
        }
    }

    /// `None` when `self` is a motion polynomial.
    pub fn motion_defect(&self) -> Option<MotionDefect> {
        let p = self.primal();
        if p.is_zero() {
            return Some(MotionDefect::ZeroPrimal);
        }
        let d = self.dual();
        let study = &(&p * &d.conj()) + &(&d * &p.conj());
        if !study.is_zero() {
            return Some(MotionDefect::StudyCondition);
        }
        None
    }

    pub fn is_motion_polynomial(&self) -> bool {
        self.motion_defect().is_none()
    }

    pub fn require_motion(&self) -> Result<()> {
        match self.motion_defect() {
            None => Ok(()),
            Some(MotionDefect::ZeroPrimal) => {
                Err(Error::NotAMotionPolynomial("primal part is zero".into()))
            }
            Some(MotionDefect::StudyCondition) => {
                Err(Error::NotAMotionPolynomial("Study condition fails".into()))
            }
        }
    }
}

/// Substitutes `t ↦ (αt+β)/(γt+δ)` and clears the denominator
/// `(γt+δ)^deg w`.
pub fn mobius_reparametrize<R: Ring>(
    w: &Poly<R>,
    alpha: &Rat,
    beta: &Rat,
    gamma: &Rat,
    delta: &Rat,
) -> Result<Poly<R>> {
    if (alpha * delta - beta * gamma).is_zero() {
        return Err(Error::SingularMobius);
    }
    let Some(d) = w.degree() else {
        return Ok(w.clone());
    };
    let num = Poly::new(vec![beta.clone(), alpha.clone()]);
    let den = Poly::new(vec![delta.clone(), gamma.clone()]);
    let mut out = Poly::zero();
    for (j, c) in w.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let f = &num.pow(j as u32) * &den.pow((d - j) as u32);
        out = &out + &Poly::constant(c.clone()).mul_real(&f);
    }
    Ok(out)
}
