//! Motion synthesis: primal and dual parts, cofactors, right-factor
//! splitting and the plane-fixing solution family.

pub mod cofactor;
pub mod dual;
pub mod family;
pub mod primal;
pub mod split;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, NoSolutionReason, Result};
use crate::plane::{plane_trajectory, PlanePoly};
use crate::poly::RPoly;
use crate::qpoly::{DualQuatPoly, QuatPoly};
use crate::quat::{DualQuat, Quat};
use crate::rat::Rat;
use crate::ring::gcd_all;

pub use cofactor::{complex_cofactor, saturating_factor, ComplexCofactor};
pub use dual::{dual_solve, lambda_reduce, DualSolution};
pub use family::{compose_family, essential_equivalence, family_dimension};
pub use primal::{primal_solve, PrimalSolution};
pub use split::{split_even_power, split_quadratic, SplitResult};

pub const MAX_COORDINATE_ATTEMPTS: usize = 32;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TranscriptStep {
    pub step: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub detail: String,
}

fn step(name: &str, degree: Option<usize>, detail: impl Into<String>) -> TranscriptStep {
    TranscriptStep {
        step: name.to_string(),
        degree,
        detail: detail.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SynthesisResult {
    #[serde(rename = "C")]
    pub c: DualQuatPoly,
    pub degree: usize,
    /// The plane polynomial the identity refers to.
    pub torse: PlanePoly,
    /// Monic real cofactor: `trajectory(C) = rho·h·torse`.
    pub h: RPoly,
    #[serde(with = "crate::json::rat_str")]
    pub rho: Rat,
    /// Saturating factor of the torse, if it has rational coefficients.
    pub ell: Option<RPoly>,
    /// Cofactor against the saturated torse `ell·torse` (`h/ell`).
    pub h_saturated: Option<RPoly>,
    #[serde(rename = "Q")]
    pub q: QuatPoly,
    pub coordinate_change: Quat,
    pub transcript: Vec<TranscriptStep>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub h: Option<RPoly>,
    #[serde(serialize_with = "crate::json::opt_rat_str::serialize")]
    pub rho: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

impl Verification {
    fn fail(msg: impl Into<String>) -> Self {
        Verification {
            ok: false,
            h: None,
            rho: None,
            mismatch: Some(msg.into()),
        }
    }
}

/// Tests `trajectory(C) = rho·h·w` for monic real `h` and positive `rho`.
pub fn verify_trajectory(c: &DualQuatPoly, w: &PlanePoly) -> Verification {
    if let Some(defect) = c.motion_defect() {
        return Verification::fail(format!("not a motion polynomial: {defect:?}"));
    }
    let traj = match plane_trajectory(c) {
        Ok(t) => t,
        Err(e) => return Verification::fail(e.to_string()),
    };
    let names = ["u0", "u1", "u2", "u3"];
    let (tc, wc) = (traj.components(), w.components());
    let Some(j) = (0..4).find(|&j| !wc[j].is_zero()) else {
        return Verification::fail("torse is zero");
    };
    let q = match tc[j].exact_div(wc[j]) {
        Ok(Some(q)) if !q.is_zero() => q,
        _ => {
            return Verification::fail(format!(
                "{} of the trajectory is not a polynomial multiple of {} of the torse",
                names[j], names[j]
            ))
        }
    };
    let rho = q.lc().expect("nonzero").clone();
    let h = q.monic();
    for i in 0..4 {
        let expected = wc[i] * &q;
        if *tc[i] != expected {
            let len = tc[i].coeffs().len().max(expected.coeffs().len());
            let k = (0..len)
                .find(|&k| tc[i].coeff(k) != expected.coeff(k))
                .unwrap_or(0);
            return Verification::fail(format!(
                "{}: coefficient of t^{k} is {} but {} is required",
                names[i],
                crate::rat::format_rat(&tc[i].coeff(k)),
                crate::rat::format_rat(&expected.coeff(k))
            ));
        }
    }
    if !rho.is_positive() {
        return Verification {
            ok: false,
            h: Some(h),
            rho: Some(rho),
            mismatch: Some("trajectory has the opposite orientation (negative scale)".into()),
        };
    }
    Verification {
        ok: true,
        h: Some(h),
        rho: Some(rho),
        mismatch: None,
    }
}

fn random_quat(rng: &mut ChaCha8Rng, range: i64) -> Quat {
    loop {
        let q = Quat::from_ints(
            rng.gen_range(-range..=range),
            rng.gen_range(-range..=range),
            rng.gen_range(-range..=range),
            rng.gen_range(-range..=range),
        );
        if !q.is_zero() {
            return q;
        }
    }
}

/// A motion of minimal degree whose plane trajectory is `rho·g·w` with
/// `g = rgcd(vec w)`, for a reduced kinematic plane polynomial `w`.
pub fn synthesize_minimal(w: &PlanePoly, seed: u64) -> Result<SynthesisResult> {
    if w.vector_is_zero() {
        return Err(Error::ZeroVectorPart);
    }
    if w.to_dq().rgcd()?.degree() != Some(0) {
        return Err(Error::NotReduced);
    }
    let mut transcript = Vec::new();
    let deg_w = w.degree().unwrap_or(0);
    transcript.push(step("input", Some(deg_w), "reduced plane polynomial"));

    let g = gcd_all(w.vector()).expect("vector part is nonzero");
    let v: [RPoly; 3] = w.vector().map(|c| c.exact_div(&g).ok().flatten().expect("g divides"));
    transcript.push(step("rgcd", g.degree(), format!("g = {g}")));
    let ell = saturating_factor(&g).ok();
    let h_sat = ell.as_ref().and_then(|l| g.exact_div(l).ok().flatten());
    transcript.push(step(
        "saturation",
        ell.as_ref().and_then(|l| l.degree()),
        match &ell {
            Some(l) => format!("ell = {l}"),
            None => "saturating factor is irrational".into(),
        },
    ));

    let primal = primal_solve(&v)?;
    let n = primal.q.degree().unwrap_or(0);
    transcript.push(step(
        "primal",
        Some(n),
        format!(
            "Q k Q̄ = {}·v, N(Q) = {}·s",
            crate::rat::format_rat(&primal.scale),
            crate::rat::format_rat(&primal.scale)
        ),
    ));
    let bound = deg_w - n;
    let slack = bound - n;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = None;
    for attempt in 0..MAX_COORDINATE_ATTEMPTS {
        let b = if attempt == 0 && seed == 0 {
            Quat::one()
        } else {
            random_quat(&mut rng, 2 + attempt as i64)
        };
        let nb = b.norm();
        let q_b = &QuatPoly::constant(b.conj()) * &primal.q;
        let w0_b = w.u0.scale(&(&nb * &primal.scale));
        match dual_solve(&q_b, &w0_b, slack) {
            Ok(sol) => {
                transcript.push(step(
                    "coordinate_change",
                    None,
                    format!("attempt {attempt}: b = {b}"),
                ));
                found = Some((b, q_b, sol));
                break;
            }
            Err(
                e @ (Error::GenericityFailure(_)
                | Error::NotCoprime
                | Error::PreconditionViolation(_)
                | Error::NoPolynomialSolution),
            ) => {
                transcript.push(step("coordinate_change", None, format!("attempt {attempt}: b = {b} rejected ({e})")));
            }
            Err(e) => return Err(e),
        }
    }
    let Some((b, q_b, sol)) = found else {
        return Err(Error::GenericityExhausted(MAX_COORDINATE_ATTEMPTS));
    };
    transcript.push(step(
        "dual",
        sol.d.degree(),
        format!("bound {}, lambda = {}", sol.bound, sol.lambda),
    ));

    let c_b = DualQuatPoly::from_parts(&q_b.mul_real(&g), &sol.d);
    let c = (&DualQuatPoly::constant(DualQuat::from_primal(b.clone())) * &c_b)
        .scale(&(Rat::one() / b.norm()));
    let degree = c.degree().unwrap_or(0);
    if degree != bound {
        return Err(Error::InvariantViolation(format!(
            "motion has degree {degree}, expected {bound}"
        )));
    }
    let check = verify_trajectory(&c, w);
    if !check.ok || check.h.as_ref() != Some(&g) || check.rho.as_ref() != Some(&primal.scale) {
        return Err(Error::InvariantViolation(format!(
            "synthesized motion fails verification: {:?}",
            check.mismatch
        )));
    }
    transcript.push(step("verify", Some(degree), format!("trajectory = {}·({g})·w", crate::rat::format_rat(&primal.scale))));
    Ok(SynthesisResult {
        c,
        degree,
        torse: w.clone(),
        h: g,
        rho: primal.scale,
        ell,
        h_saturated: h_sat,
        q: primal.q,
        coordinate_change: b,
        transcript,
    })
}

/// Reduces `w` first (recording the removed factor), then synthesizes.
pub fn synthesize_minimal_reducing(w: &PlanePoly, seed: u64) -> Result<SynthesisResult> {
    let (red, f) = reduce_plane(w)?;
    let mut res = synthesize_minimal(&red, seed)?;
    if f.degree() != Some(0) {
        res.transcript.insert(
            0,
            step("reduce", f.degree(), format!("input was not reduced; removed factor {f}")),
        );
    }
    Ok(res)
}

/// `w = reduced·f` with monic `f = rgcd(w)`.
pub fn reduce_plane(w: &PlanePoly) -> Result<(PlanePoly, RPoly)> {
    if w.vector_is_zero() {
        return Err(Error::ZeroVectorPart);
    }
    let f = gcd_all(w.components()).ok_or(Error::ZeroVectorPart)?;
    Ok((w.map(|c| c.exact_div(&f).ok().flatten().expect("gcd divides")), f))
}

/// A motion with trajectory `rho·h·w` for the prescribed real cofactor `h`.
pub fn synthesize_with_cofactor(w: &PlanePoly, h: &RPoly, seed: u64) -> Result<SynthesisResult> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut base = synthesize_minimal(w, seed)?;
    let g = base.h.clone();
    let Some(extra) = h.exact_div(&g)? else {
        return Err(Error::NoSolution {
            reason: NoSolutionReason::Minimality,
        });
    };
    let extra = extra.monic();
    match saturating_factor(&extra) {
        Ok(l) if l.degree() == Some(0) => {}
        Ok(_) | Err(Error::UnsupportedFieldExtension(_)) => {
            return Err(Error::NoSolution {
                reason: NoSolutionReason::Saturation,
            })
        }
        Err(e) => return Err(e),
    }
    let cof = complex_cofactor(&extra)?;
    let e = DualQuatPoly::from_primal(&QuatPoly::from_cpoly(&cof.g_complex));
    let c = &base.c * &e;
    let target = &g * &extra;
    let check = verify_trajectory(&c, w);
    if !check.ok || check.h.as_ref() != Some(&target) {
        return Err(Error::InvariantViolation("cofactor composition fails verification".into()));
    }
    base.transcript.push(step(
        "cofactor",
        cof.g_complex.degree(),
        format!("right factor with norm {extra}"),
    ));
    base.degree = c.degree().unwrap_or(0);
    base.c = c;
    base.h_saturated = base
        .ell
        .as_ref()
        .and_then(|l| target.exact_div(l).ok().flatten());
    base.h = target;
    base.rho = check.rho.expect("verified");
    base.transcript.push(step("verify", Some(base.degree), "trajectory identity holds"));
    Ok(base)
}

/// Degree of a minimal motion for a reduced kinematic `w`.
pub fn predicted_minimal_degree(w: &PlanePoly) -> Option<usize> {
    let g = gcd_all(w.vector())?;
    let deg_vec = w.vector().iter().filter_map(|c| c.degree()).max()?;
    let deg_n = deg_vec - g.degree()?;
    Some(w.degree()? - deg_n / 2)
}
