use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{CPoly, Gauss};
use crate::poly::RPoly;
use crate::qpoly::QuatPoly;
use crate::quat::Quat;
use crate::rat::{sum_of_two_squares, Rat};
use crate::ring::{
    factor_over_rationals, gaussian_quadratic_roots, gcd_all, square_status, SquareStatus,
};
use crate::synthesis::cofactor::gaussian_linear;

const TWO_SQUARES_BUDGET: u64 = 20_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimalSolution {
    /// `Q` with `Q·k·Q̄ = scale·(v1 i + v2 j + v3 k)`.
    #[serde(rename = "Q")]
    pub q: QuatPoly,
    /// Positive rational; `1` unless the leading coefficient of `(s + v3)/2`
    /// is not a sum of two rational squares.
    #[serde(with = "crate::json::rat_str")]
    pub scale: Rat,
    /// `s` with `s² = v1² + v2² + v3²` and positive leading coefficient.
    pub s: RPoly,
}

/// Vector part of `Q·k·Q̄`.
pub fn primal_image(q: &QuatPoly) -> [RPoly; 3] {
    let img = &(q * &QuatPoly::constant(Quat::k())) * &q.conj();
    let c = img.component_polys();
    [c[1].clone(), c[2].clone(), c[3].clone()]
}

/// The part of `a` coming from `f^mu`, `f` irreducible over the rationals.
fn shared_part(f: &RPoly, mu: u32, c: &CPoly) -> Result<CPoly> {
    let fc = CPoly::from_real(f);
    if f.degree() == Some(1) {
        if mu % 2 == 1 {
            return Err(Error::InvariantViolation(
                "(s + v3)/2 has a real zero of odd multiplicity".into(),
            ));
        }
        return Ok(fc.pow(mu / 2));
    }
    let gauss = if f.degree() == Some(2) {
        gaussian_quadratic_roots(f).ok().flatten()
    } else {
        None
    };
    match gauss {
        Some((re, im)) => {
            // f^m exactly divides c; what is left contains at most one of the
            // two conjugate linear factors of f
            let mut m = 0;
            let mut rest = c.clone();
            while let Ok(Some(next)) = rest.exact_div(&fc) {
                rest = next;
                m += 1;
            }
            let lin = gaussian_linear(&re, &im);
            let lin_bar = lin.conj();
            let avail_lin = m + cpoly_mult(&lin, &rest);
            let avail_bar = m + cpoly_mult(&lin_bar, &rest);
            let x = mu.min(avail_lin);
            if mu - x > avail_bar {
                return Err(Error::InvariantViolation(format!(
                    "cannot distribute {f} between a and its conjugate"
                )));
            }
            Ok(&lin.pow(x) * &lin_bar.pow(mu - x))
        }
        None if mu % 2 == 0 => Ok(fc.pow(mu / 2)),
        None => Err(Error::unsupported(format!(
            "{f} appears with odd multiplicity and has no Gaussian-rational roots"
        ))),
    }
}

fn cpoly_mult(f: &CPoly, p: &CPoly) -> u32 {
    let mut m = 0;
    let mut q = p.clone();
    while !q.is_zero() {
        match q.exact_div(f) {
            Ok(Some(next)) => {
                q = next;
                m += 1;
            }
            _ => break,
        }
    }
    m
}

/// Solves `Q·k·Q̄ = μ·(v1 i + v2 j + v3 k)` for a reduced kinematic vector
/// polynomial, writing `Q = a + j·b` with complex `a = q0 + q3 k`,
/// `b = q2 + q1 k`, so that `a·ā = (s + v3)/2` and `2·a·b̄ = v1 + v2 k`.
pub fn primal_solve(v: &[RPoly; 3]) -> Result<PrimalSolution> {
    if v.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroVectorPart);
    }
    if gcd_all(v.iter()).and_then(|g| g.degree()) != Some(0) {
        return Err(Error::NotReduced);
    }
    let norm = v.iter().fold(RPoly::zero(), |acc, c| &acc + &(c * c));
    let s = match square_status(&norm)? {
        SquareStatus::Square(s) => s,
        SquareStatus::NotSquare => return Err(Error::NotKinematic),
        SquareStatus::SquareOnlyOverExtension => {
            return Err(Error::unsupported(
                "norm of the vector part is a square only up to an irrational factor",
            ))
        }
    };
    let [v1, v2, v3] = v;
    let half = Rat::new(1.into(), 2.into());

    if v1.is_zero() && v2.is_zero() {
        // reduced, so v3 is a nonzero constant
        let r = v3.coeff(0);
        let (alpha, scale) = unit_complex_with_norm(&r.abs());
        let mut q = QuatPoly::constant(alpha);
        if r.is_negative() {
            q = &QuatPoly::constant(Quat::i()) * &q;
        }
        return finish(q, scale, s, v);
    }

    let w_plus = (&s + v3).scale(&half);
    let c = CPoly::from_parts(v1, v2);
    let lc_w = w_plus.lc().cloned().ok_or_else(|| {
        Error::InvariantViolation("(s + v3)/2 vanishes although v1, v2 do not".into())
    })?;

    // Factors shared by (s + v3)/2 and (s − v3)/2 are distributed by hand;
    // on the coprime rest a = gcd((s + v3)/2, c).
    let w_minus = (&s - v3).scale(&half);
    let shared = if w_minus.is_zero() { RPoly::one() } else { w_plus.gcd(&w_minus)? };
    let mut a = CPoly::one();
    let mut rest = w_plus.monic();
    if shared.degree() != Some(0) {
        let fz = factor_over_rationals(&shared)?;
        for fac in &fz.factors {
            let f = &fac.factor;
            let mut mu = 0;
            while let Some(next) = rest.exact_div(f)? {
                rest = next;
                mu += 1;
            }
            a = &a * &shared_part(f, mu, &c)?;
        }
    }
    if rest.degree() != Some(0) {
        a = &a * &CPoly::from_real(&rest).gcd(&c)?;
    }
    let (alpha, scale) = unit_complex_with_norm(&lc_w);
    let a = a.mul_right(&Gauss::new(alpha.w.clone(), alpha.z.clone()));
    let c = c.scale(&scale);
    let two_a = a.scale(&Rat::from_integer(2.into()));
    let b_bar = c
        .exact_div(&two_a)?
        .ok_or_else(|| Error::InvariantViolation("a does not divide v1 + v2 k".into()))?;
    let b = b_bar.conj();
    let qa = QuatPoly::from_cpoly(&a);
    let qb = QuatPoly::from_cpoly(&b);
    let q = &qa + &(&QuatPoly::constant(Quat::j()) * &qb);
    finish(q, scale, s, v)
}

/// A complex number `α = x + y k` and scale `μ` with `N(α) = μ·r`, `μ = 1`
/// when `r` is a sum of two rational squares, else `μ = r`.
fn unit_complex_with_norm(r: &Rat) -> (Quat, Rat) {
    match sum_of_two_squares(r, TWO_SQUARES_BUDGET) {
        Some((x, y)) => (Quat::new(x, Rat::zero(), Rat::zero(), y), Rat::one()),
        None => (Quat::real(r.clone()), r.clone()),
    }
}

fn finish(q: QuatPoly, scale: Rat, s: RPoly, v: &[RPoly; 3]) -> Result<PrimalSolution> {
    let img = primal_image(&q);
    for (lhs, rhs) in img.iter().zip(v) {
        if *lhs != rhs.scale(&scale) {
            return Err(Error::InvariantViolation("Q k Q̄ does not reproduce v".into()));
        }
    }
    if q.norm_poly() != s.scale(&scale) {
        return Err(Error::InvariantViolation("N(Q) differs from s".into()));
    }
    Ok(PrimalSolution { q, scale, s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rpoly;

    fn ex4_v() -> [RPoly; 3] {
        [rpoly(&[2, -6, 2]), rpoly(&[-4, 4, -2]), rpoly(&[4, -2, -1])]
    }

    #[test]
    fn example_four() {
        let sol = primal_solve(&ex4_v()).unwrap();
        assert_eq!(sol.scale, Rat::one());
        assert_eq!(sol.q.degree(), Some(1));
        assert_eq!(sol.s, rpoly(&[6, -6, 3]));
        // this Q differs by a right unit complex factor
        let reference = QuatPoly::from_component_polys(&[rpoly(&[1]), rpoly(&[0, 1]), rpoly(&[1, -1]), rpoly(&[-2, 1])]);
        assert_eq!(primal_image(&reference), ex4_v());
    }

    #[test]
    fn simple_cases() {
        let sol = primal_solve(&[rpoly(&[0]), rpoly(&[0]), rpoly(&[1])]).unwrap();
        assert_eq!(sol.q, QuatPoly::one());
        let sol = primal_solve(&[rpoly(&[0]), rpoly(&[0]), rpoly(&[-3])]).unwrap();
        assert_eq!(primal_image(&sol.q)[2], rpoly(&[-3]).scale(&sol.scale));
        let sol = primal_solve(&[rpoly(&[0]), rpoly(&[0, 2]), rpoly(&[-1, 0, 1])]).unwrap();
        assert_eq!(sol.q.degree(), Some(1));
        assert_eq!(sol.q.norm_poly(), rpoly(&[1, 0, 1]));
    }

    #[test]
    fn errors() {
        assert_eq!(
            primal_solve(&[rpoly(&[0, 1]), rpoly(&[-1, 1]), rpoly(&[-2, 1])]),
            Err(Error::NotKinematic)
        );
        assert_eq!(
            primal_solve(&[rpoly(&[0, 1]), rpoly(&[0]), rpoly(&[0])]),
            Err(Error::NotReduced)
        );
        assert!(matches!(
            primal_solve(&[rpoly(&[1]), rpoly(&[1]), rpoly(&[0])]),
            Err(Error::UnsupportedFieldExtension(_))
        ));
    }

    #[test]
    fn scaled_when_leading_norm_is_not_two_squares() {
        // v = 3 (rotated k): Q k Q̄ = 3k needs N(Q) = 3, not a sum of two squares
        let sol = primal_solve(&[rpoly(&[0]), rpoly(&[0]), rpoly(&[3])]).unwrap();
        assert_eq!(sol.scale, Rat::from_integer(3.into()));
    }
}
