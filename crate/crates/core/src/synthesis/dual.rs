use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve, Matrix};
use crate::poly::{Poly, RPoly};
use crate::qpoly::QuatPoly;
use crate::quat::Quat;
use crate::rat::Rat;
use crate::synthesis::primal::primal_image;

/// `λ` modulo `p` with `deg((x + λa) mod p) ≤ bound` and
/// `deg((y + λb) mod p) ≤ bound`. `λ = 0` when it already works, otherwise the
/// solution of the coefficient system with all free variables set to zero.
pub fn lambda_reduce(
    x: &RPoly,
    y: &RPoly,
    a: &RPoly,
    b: &RPoly,
    p: &RPoly,
    bound: usize,
) -> Result<RPoly> {
    let dp = p
        .degree()
        .ok_or_else(|| Error::PreconditionViolation("modulus is zero".into()))?;
    if dp % 2 == 1 {
        return Err(Error::PreconditionViolation("modulus has odd degree".into()));
    }
    let n = dp / 2;
    if bound < n {
        return Err(Error::PreconditionViolation("bound below half the modulus degree".into()));
    }
    if a.deg_i() > n as i64 || b.deg_i() > n as i64 || a == b {
        return Err(Error::PreconditionViolation("a, b must be distinct of degree ≤ n".into()));
    }
    for c in [a, b] {
        if c.is_zero() || p.gcd(c)?.degree() != Some(0) {
            return Err(Error::PreconditionViolation("a, b must be coprime to p".into()));
        }
    }
    let xr = x.rem(p)?;
    let yr = y.rem(p)?;
    if xr.deg_i() <= bound as i64 && yr.deg_i() <= bound as i64 {
        return Ok(RPoly::zero());
    }
    let (rows, rhs) = lambda_system(&xr, &yr, a, b, p, bound)?;
    let sol = solve(&rows, &rhs, dp)
        .ok_or_else(|| Error::PreconditionViolation("degree reduction system is inconsistent".into()))?;
    let lambda = Poly::new(sol);
    let check = |z: &RPoly, c: &RPoly| -> Result<bool> {
        Ok((z + &(&lambda * c)).rem(p)?.deg_i() <= bound as i64)
    };
    if !check(x, a)? || !check(y, b)? {
        return Err(Error::InvariantViolation("λ misses the degree bound".into()));
    }
    Ok(lambda)
}

/// Rows kill the coefficients of `(z + λc) mod p` above `bound`.
fn lambda_system(
    x: &RPoly,
    y: &RPoly,
    a: &RPoly,
    b: &RPoly,
    p: &RPoly,
    bound: usize,
) -> Result<(Matrix, Vec<Rat>)> {
    let dp = p.degree().expect("nonzero");
    let basis = |c: &RPoly| -> Result<Vec<RPoly>> {
        (0..dp).map(|i| (&RPoly::monomial(Rat::from_integer(1.into()), i) * c).rem(p)).collect()
    };
    let ba = basis(a)?;
    let bb = basis(b)?;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (z, cols) in [(x, &ba), (y, &bb)] {
        for k in bound + 1..dp {
            rows.push(cols.iter().map(|c| c.coeff(k)).collect());
            rhs.push(-z.coeff(k));
        }
    }
    Ok((rows, rhs))
}

/// Dimension of the affine solution space of the `λ` system.
pub fn lambda_freedom(a: &RPoly, b: &RPoly, p: &RPoly, bound: usize) -> Result<usize> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
    let zero = RPoly::zero();
    let (rows, _) = lambda_system(&zero, &zero, a, b, p, bound)?;
    Ok(nullspace(&rows, dp).len())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualSolution {
    #[serde(rename = "D")]
    pub d: QuatPoly,
    /// `v3⁻¹` modulo `q0² + q3²` (absent when `Q` is constant).
    pub v3_inv: Option<RPoly>,
    /// `d1, d2` before the homogeneous correction.
    pub seed_d1: RPoly,
    pub seed_d2: RPoly,
    pub lambda: RPoly,
    pub bound: usize,
}

/// Checks `Q·k·D̄ − D·k·Q̄ = w0` and `Q·D̄ + D·Q̄ = 0`.
pub fn dual_identities_hold(q: &QuatPoly, d: &QuatPoly, w0: &RPoly) -> bool {
    let k = QuatPoly::constant(Quat::k());
    let lhs = &(&(q * &k) * &d.conj()) - &(&(d * &k) * &q.conj());
    let study = &(q * &d.conj()) + &(d * &q.conj());
    lhs == QuatPoly::from_real(w0) && study.is_zero()
}

/// Dual part `D` of degree at most `deg Q + slack` solving
/// `Q·k·D̄ − D·k·Q̄ = w0` and `Q·D̄ + D·Q̄ = 0`.
pub fn dual_solve(q: &QuatPoly, w0: &RPoly, slack: usize) -> Result<DualSolution> {
    let n = q
        .degree()
        .ok_or_else(|| Error::GenericityFailure("Q is zero".into()))?;
    let bound = n + slack;
    let c = q.component_polys();
    let (q0, q1, q2, q3) = (&c[0], &c[1], &c[2], &c[3]);
    let p = &(q0 * q0) + &(q3 * q3);
    if p.degree() != Some(2 * n) {
        return Err(Error::GenericityFailure("q0² + q3² is not of full degree".into()));
    }
    let [v1, v2, v3] = primal_image(q);
    let half = Rat::new(1.into(), 2.into());

    let (v3_inv, seed_d1, seed_d2, lambda, d1, d2) = if n == 0 {
        let z = RPoly::zero();
        (None, z.clone(), z.clone(), z.clone(), z.clone(), z)
    } else {
        let neg_q0 = -q0;
        if q3 == &neg_q0 {
            return Err(Error::GenericityFailure("q3 = −q0".into()));
        }
        for (name, f) in [("v3", &v3), ("q0", q0), ("q3", q3)] {
            if f.is_zero() || p.gcd(f)?.degree() != Some(0) {
                return Err(Error::GenericityFailure(format!("gcd({name}, q0² + q3²) ≠ 1")));
            }
        }
        let inv = v3.mod_inverse(&p)?;
        let base = &(w0 * &inv).scale(&half);
        let sd1 = (-&(base * q2)).rem(&p)?;
        let sd2 = (base * q1).rem(&p)?;
        let lambda = lambda_reduce(&sd1, &sd2, q3, &neg_q0, &p, bound)?;
        let d1 = (&sd1 + &(&lambda * q3)).rem(&p)?;
        let d2 = (&sd2 - &(&lambda * q0)).rem(&p)?;
        (Some(inv), sd1, sd2, lambda, d1, d2)
    };

    let two_p = p.scale(&Rat::from_integer(2.into()));
    let num0 = &(&(&v2 * &d1) - &(&v1 * &d2)) - &(q3 * w0);
    let num3 = -&(&(&(&v1 * &d1) + &(&v2 * &d2)) - &(q0 * w0));
    let d0 = num0.exact_div(&two_p)?.ok_or(Error::NoPolynomialSolution)?;
    let d3 = num3.exact_div(&two_p)?.ok_or(Error::NoPolynomialSolution)?;
    let d = QuatPoly::from_component_polys(&[d0, d1, d2, d3]);
    if !dual_identities_hold(q, &d, w0) {
        return Err(Error::InvariantViolation("dual part fails its defining identities".into()));
    }
    Ok(DualSolution {
        d,
        v3_inv,
        seed_d1,
        seed_d2,
        lambda,
        bound,
    })
}
