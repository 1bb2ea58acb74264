use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{CPoly, Gauss};
use crate::poly::RPoly;
use crate::ring::{factor_over_rationals, gaussian_quadratic_roots, real_root_count};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexCofactor {
    /// `G` with `G·k·Ḡ = ell·g·k`.
    #[serde(rename = "G")]
    pub g_complex: CPoly,
    pub ell: RPoly,
}

enum RootKind {
    AllReal,
    NoneReal,
    Mixed,
}

fn root_kind(f: &RPoly) -> Result<RootKind> {
    let n = real_root_count(f)?;
    Ok(if n == 0 {
        RootKind::NoneReal
    } else if Some(n) == f.degree() {
        RootKind::AllReal
    } else {
        RootKind::Mixed
    })
}

/// `t − a − b·k`.
pub fn gaussian_linear(a: &crate::rat::Rat, b: &crate::rat::Rat) -> CPoly {
    CPoly::new(vec![Gauss::new(-a.clone(), -b.clone()), Gauss::one()])
}

/// Minimal monic `ℓ` such that every real zero of `ℓ·g` has even
/// multiplicity.
pub fn saturating_factor(g: &RPoly) -> Result<RPoly> {
    if g.degree() == Some(0) {
        return Ok(RPoly::one());
    }
    let fz = factor_over_rationals(&g.monic())?;
    let mut ell = RPoly::one();
    for f in &fz.factors {
        if f.multiplicity % 2 == 0 {
            continue;
        }
        match root_kind(&f.factor)? {
            RootKind::NoneReal => {}
            RootKind::AllReal => ell = &ell * &f.factor,
            RootKind::Mixed => {
                return Err(Error::unsupported(format!(
                    "odd-multiplicity factor {} has both real and non-real roots",
                    f.factor
                )))
            }
        }
    }
    Ok(ell)
}

/// Complex polynomial `G` of minimal degree and monic `ℓ` of minimal degree
/// with `G·k·Ḡ = ℓ·g·k`.
pub fn complex_cofactor(g: &RPoly) -> Result<ComplexCofactor> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut big = CPoly::one();
    let mut ell = RPoly::one();
    if g.degree() == Some(0) {
        return Ok(ComplexCofactor { g_complex: big, ell });
    }
    let fz = factor_over_rationals(&g.monic())?;
    for f in &fz.factors {
        let (p, mu) = (&f.factor, f.multiplicity);
        match root_kind(p)? {
            RootKind::AllReal => {
                big = &big * &CPoly::from_real(p).pow(mu.div_ceil(2));
                if mu % 2 == 1 {
                    ell = &ell * p;
                }
            }
            RootKind::NoneReal => {
                let gauss = if p.degree() == Some(2) {
                    gaussian_quadratic_roots(p)?
                } else {
                    None
                };
                if let Some((a, b)) = gauss {
                    big = &big * &gaussian_linear(&a, &b).pow(mu);
                } else if mu % 2 == 0 {
                    big = &big * &CPoly::from_real(p).pow(mu / 2);
                } else {
                    return Err(Error::unsupported(format!(
                        "{p} has no Gaussian-rational factorization"
                    )));
                }
            }
            RootKind::Mixed => {
                if mu % 2 == 0 {
                    big = &big * &CPoly::from_real(p).pow(mu / 2);
                } else {
                    return Err(Error::unsupported(format!(
                        "odd-multiplicity factor {p} has both real and non-real roots"
                    )));
                }
            }
        }
    }
    Ok(ComplexCofactor { g_complex: big, ell })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::QuatPoly;
    use crate::quat::Quat;
    use crate::poly::rpoly;
    use crate::rat::int;

    fn check(g: &RPoly) -> ComplexCofactor {
        let r = complex_cofactor(g).unwrap();
        let big = QuatPoly::from_cpoly(&r.g_complex);
        let lhs = &(&big * &QuatPoly::constant(Quat::k())) * &big.conj();
        let rhs = QuatPoly::constant(Quat::k()).mul_real(&(&r.ell * g));
        assert_eq!(lhs, rhs);
        r
    }

    #[test]
    fn example_two() {
        let t = rpoly(&[0, 1]);
        let g = &(&t.pow(2) * &rpoly(&[-1, 1]).pow(3)) * &rpoly(&[1, 0, 1]);
        let r = check(&g);
        assert_eq!(r.ell, rpoly(&[-1, 1]));
        assert_eq!(r.g_complex.degree(), Some(4));
        let expected = &(&CPoly::from_real(&t) * &CPoly::from_real(&rpoly(&[-1, 1]).pow(2)))
            * &gaussian_linear(&int(0), &int(1));
        assert_eq!(r.g_complex, expected);
    }

    #[test]
    fn small_cases() {
        let r = check(&rpoly(&[1]));
        assert_eq!((r.g_complex, r.ell), (CPoly::one(), RPoly::one()));
        let r = check(&rpoly(&[1, 0, 1]));
        assert_eq!(r.g_complex, gaussian_linear(&int(0), &int(1)));
        assert_eq!(r.ell, RPoly::one());
        // odd power of an irreducible quadratic with real roots: ℓ is the quadratic
        let r = check(&rpoly(&[-2, 0, 1]));
        assert_eq!(r.ell, rpoly(&[-2, 0, 1]));
        assert!(matches!(
            complex_cofactor(&rpoly(&[2, 0, 1])),
            Err(Error::UnsupportedFieldExtension(_))
        ));
        check(&rpoly(&[2, 0, 1]).pow(2));
    }

    #[test]
    fn saturating_factors() {
        let t = rpoly(&[0, 1]);
        let g = &(&t.pow(2) * &rpoly(&[-1, 1]).pow(3)) * &rpoly(&[1, 0, 1]);
        assert_eq!(saturating_factor(&g).unwrap(), rpoly(&[-1, 1]));
        assert_eq!(saturating_factor(&rpoly(&[10, -6, 1])).unwrap(), RPoly::one());
    }
}
