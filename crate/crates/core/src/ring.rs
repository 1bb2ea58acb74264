//! Commutative algebra over the rationals: square-free decomposition,
//! Sturm root counting, factorization, square roots and the Gaussian roots
//! of irreducible quadratics.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, RPoly};
use crate::rat::{rat_approx, rat_sqrt, to_f64, Rat};

pub fn rpoly_divrem(f: &RPoly, g: &RPoly) -> Result<(RPoly, RPoly)> {
    f.divrem(g)
}

pub fn rpoly_gcd(f: &RPoly, g: &RPoly) -> Result<RPoly> {
    f.gcd(g)
}

pub fn mod_inverse(a: &RPoly, m: &RPoly) -> Result<RPoly> {
    a.mod_inverse(m)
}

/// Monic gcd of a list of polynomials, `None` if all are zero.
pub fn gcd_all<'a>(ps: impl IntoIterator<Item = &'a RPoly>) -> Option<RPoly> {
    let mut acc: Option<RPoly> = None;
    for p in ps {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => g.gcd(p).expect("nonzero operand"),
        });
        if acc.as_ref().is_some_and(|g| g.degree() == Some(0)) {
            break;
        }
    }
    acc
}

/// Least common multiple, monic.
pub fn lcm(a: &RPoly, b: &RPoly) -> Result<RPoly> {
    let g = a.gcd(b)?;
    let (q, _) = (a * b).divrem(&g)?;
    Ok(q.monic())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SquareFreeDecomp {
    #[serde(with = "crate::json::rat_str")]
    pub content: Rat,
    /// Monic, square-free, pairwise coprime factors with their multiplicities.
    #[serde(serialize_with = "crate::json::ser_factor_list")]
    pub parts: Vec<(RPoly, u32)>,
}

impl SquareFreeDecomp {
    pub fn reconstruct(&self) -> RPoly {
        self.parts
            .iter()
            .fold(RPoly::constant(self.content.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }
}

/// Yun's square-free decomposition.
pub fn squarefree_decompose(p: &RPoly) -> Result<SquareFreeDecomp> {
    let content = p.lc().cloned().ok_or(Error::ZeroPolynomial)?;
    let f = p.monic();
    let mut parts = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquareFreeDecomp { content, parts });
    }
    let df = f.derivative();
    let a0 = f.gcd(&df)?;
    let mut b = f.divrem(&a0)?.0;
    let c = df.divrem(&a0)?.0;
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.degree() != Some(0) {
        let a = b.gcd(&d)?;
        b = b.divrem(&a)?.0;
        let c = d.divrem(&a)?.0;
        d = &c - &b.derivative();
        if a.degree() != Some(0) {
            parts.push((a, i));
        }
        i += 1;
    }
    Ok(SquareFreeDecomp { content, parts })
}

fn sign_variations(values: impl IntoIterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in values {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(r: &Rat) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Sturm sequence `p, p', -rem(p, p'), …`.
pub fn sturm_sequence(p: &RPoly) -> Vec<RPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

/// Number of distinct real roots.
pub fn real_root_count(p: &RPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    let at_pos = sign_variations(seq.iter().map(|q| sign(q.lc().expect("nonzero"))));
    let at_neg = sign_variations(seq.iter().map(|q| {
        let s = sign(q.lc().expect("nonzero"));
        if q.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Ok(at_neg - at_pos)
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn real_root_count_in(p: &RPoly, a: &Rat, b: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    let va = sign_variations(seq.iter().map(|q| sign(&q.eval_rat(a))));
    let vb = sign_variations(seq.iter().map(|q| sign(&q.eval_rat(b))));
    Ok(va.saturating_sub(vb))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Factor {
    pub factor: RPoly,
    pub multiplicity: u32,
    /// Degree ≥ 3: irreducibility is not certified.
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Factorization {
    #[serde(with = "crate::json::rat_str")]
    pub content: Rat,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn reconstruct(&self) -> RPoly {
        self.factors
            .iter()
            .fold(RPoly::constant(self.content.clone()), |acc, f| {
                &acc * &f.factor.pow(f.multiplicity)
            })
    }
}

/// Integer coefficients with gcd one and the same roots.
fn primitive_integer(p: &RPoly) -> Vec<BigInt> {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn small_divisors(n: &BigInt, limit: u64) -> Option<Vec<BigInt>> {
    use num_traits::ToPrimitive;
    let n = n.abs().to_u64()?;
    if n == 0 || n > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Approximate complex roots (Aberth–Ehrlich iteration in double precision).
pub fn approx_roots(p: &RPoly) -> Vec<Complex64> {
    let Some(n) = p.degree() else { return Vec::new() };
    if n == 0 {
        return Vec::new();
    }
    let lc = to_f64(p.lc().expect("nonzero"));
    let c: Vec<f64> = p.coeffs().iter().map(|x| to_f64(x) / lc).collect();
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            dv = dv * z + v;
            v = v * z + a;
        }
        (v, dv)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(0.5 * bound, ang)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn rational_roots(p: &RPoly) -> Vec<Rat> {
    let ints = primitive_integer(p);
    let a0 = ints.iter().find(|c| !c.is_zero()).cloned().unwrap_or_default();
    let an = ints.last().cloned().unwrap_or_default();
    let mut cands: Vec<Rat> = Vec::new();
    if p.coeff(0).is_zero() {
        cands.push(Rat::zero());
    }
    match (small_divisors(&a0, 1_000_000), small_divisors(&an, 1_000_000)) {
        (Some(ps), Some(qs)) => {
            for pp in &ps {
                for q in &qs {
                    cands.push(Rat::new(pp.clone(), q.clone()));
                    cands.push(-Rat::new(pp.clone(), q.clone()));
                }
            }
        }
        _ => {
            use num_traits::ToPrimitive;
            let max_den = an.abs().to_i64().unwrap_or(i64::MAX).min(1_000_000_000);
            for z in approx_roots(p) {
                if z.im.abs() < 1e-6 * (1.0 + z.re.abs()) {
                    if let Some(r) = rat_approx(z.re, max_den.max(1)) {
                        cands.push(r);
                    }
                }
            }
        }
    }
    cands.sort();
    cands.dedup();
    cands.retain(|r| p.eval_rat(r).is_zero());
    cands
}

fn quadratic_candidates(p: &RPoly) -> Vec<RPoly> {
    use num_traits::ToPrimitive;
    let ints = primitive_integer(p);
    let an = ints.last().cloned().unwrap_or_default();
    let max_den = an.abs().to_i64().unwrap_or(i64::MAX).clamp(1, 1_000_000_000);
    let roots = approx_roots(p);
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let s = roots[i] + roots[j];
            let q = roots[i] * roots[j];
            let off = s.im.abs() / (1.0 + s.re.abs()) + q.im.abs() / (1.0 + q.re.abs());
            if off < 1e-6 {
                pairs.push((off, i, j));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out = Vec::new();
    for (_, i, j) in pairs {
        let s = roots[i] + roots[j];
        let q = roots[i] * roots[j];
        if let (Some(sr), Some(qr)) = (rat_approx(s.re, max_den), rat_approx(q.re, max_den)) {
            out.push(Poly::new(vec![qr, -sr, Rat::one()]));
        }
    }
    out
}

/// Splits a monic square-free polynomial into monic factors, irreducible
/// over the rationals up to degree two; larger blocks come back as is.
fn split_squarefree(p: &RPoly) -> Vec<RPoly> {
    let mut rest = p.monic();
    let mut out = Vec::new();
    for r in rational_roots(&rest) {
        let lin = Poly::new(vec![-r, Rat::one()]);
        if let Ok(Some(q)) = rest.exact_div(&lin) {
            rest = q;
            out.push(lin);
        }
    }
    'outer: while rest.degree().is_some_and(|d| d >= 4) {
        for cand in quadratic_candidates(&rest) {
            if let Ok(Some(q)) = rest.exact_div(&cand) {
                rest = q.monic();
                out.push(cand);
                continue 'outer;
            }
        }
        break;
    }
    if rest.degree().is_some_and(|d| d >= 1) {
        out.push(rest);
    }
    out
}

/// Factorization into monic factors over the rationals. Factors of degree
/// one and two are irreducible; larger ones are flagged. Exactness is
/// checked by re-multiplication.
pub fn factor_over_rationals(p: &RPoly) -> Result<Factorization> {
    let sf = squarefree_decompose(p)?;
    let mut factors = Vec::new();
    for (part, m) in &sf.parts {
        for f in split_squarefree(part) {
            let flagged = f.degree().unwrap_or(0) >= 3;
            factors.push(Factor {
                factor: f,
                multiplicity: *m,
                flagged,
            });
        }
    }
    factors.sort_by(|a, b| {
        (a.factor.degree(), a.multiplicity)
            .cmp(&(b.factor.degree(), b.multiplicity))
            .then_with(|| a.factor.coeffs().cmp(b.factor.coeffs()))
    });
    let out = Factorization {
        content: sf.content,
        factors,
    };
    if out.reconstruct() != *p {
        return Err(Error::InvariantViolation("factorization does not reproduce input".into()));
    }
    Ok(out)
}

/// Outcome of testing a polynomial for being a square.
#[derive(Clone, Debug, PartialEq)]
pub enum SquareStatus {
    Square(RPoly),
    /// Some square-free part has odd multiplicity.
    NotSquare,
    /// A square over the reals whose root needs the square root of an
    /// irrational leading coefficient.
    SquareOnlyOverExtension,
}

pub fn square_status(p: &RPoly) -> Result<SquareStatus> {
    let sf = squarefree_decompose(p)?;
    if sf.parts.iter().any(|(_, m)| m % 2 == 1) {
        return Ok(SquareStatus::NotSquare);
    }
    let Some(c) = rat_sqrt(&sf.content) else {
        return Ok(SquareStatus::SquareOnlyOverExtension);
    };
    let s = sf
        .parts
        .iter()
        .fold(RPoly::constant(c), |acc, (f, m)| &acc * &f.pow(m / 2));
    Ok(SquareStatus::Square(s))
}

/// `s` with `s² = p` and positive leading coefficient, when rational.
pub fn poly_sqrt(p: &RPoly) -> Result<Option<RPoly>> {
    Ok(match square_status(p)? {
        SquareStatus::Square(s) => Some(s),
        _ => None,
    })
}

/// Roots `a ± b·i` (`b > 0`) of an irreducible real quadratic, when both are
/// rational.
pub fn gaussian_quadratic_roots(f: &RPoly) -> Result<Option<(Rat, Rat)>> {
    if f.degree() != Some(2) {
        return Err(Error::NotQuadratic);
    }
    let f = f.monic();
    let (c, b) = (f.coeff(0), f.coeff(1));
    let re = -&b / Rat::from_integer(2.into());
    let im2 = &c - &re * &re;
    if !im2.is_positive() {
        return Err(Error::NotIrreducible);
    }
    Ok(rat_sqrt(&im2).map(|im| (re, im)))
}

/// Largest `m` with `f^m | p` (`p ≠ 0`, `deg f ≥ 1`).
pub fn multiplicity(f: &RPoly, p: &RPoly) -> u32 {
    let mut m = 0;
    let mut q = p.clone();
    while let Ok(Some(next)) = q.exact_div(f) {
        if q.is_zero() {
            break;
        }
        q = next;
        m += 1;
    }
    m
}
