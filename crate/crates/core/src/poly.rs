//! Univariate polynomials over an arbitrary (possibly non-commutative) ring.
//!
//! The indeterminate `t` is central, so products keep coefficient order:
//! `(Σ aᵢtⁱ)(Σ bⱼtʲ) = Σ aᵢbⱼ tⁱ⁺ʲ`. Coefficients are stored in ascending
//! order and trailing zeros are stripped on construction, so the zero
//! polynomial has an empty coefficient vector and degree `None`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Coefficient ring. `Rat` scalars act centrally.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;
    fn scale(&self, r: &Rat) -> Self;
}

/// Commutative field coefficients.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
}

impl Field for Rat {}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

pub type RPoly = Poly<Rat>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c·tⁿ`
    pub fn monomial(c: R, n: usize) -> Self {
        let mut v = vec![R::zero(); n];
        v.push(c);
        Self::new(v)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`, for bound arithmetic.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval_rat(&self, t: &Rat) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(t) + c.clone();
        }
        acc
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    /// `c·self`
    pub fn mul_left(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.clone() * a.clone()).collect())
    }

    /// `self·c`
    pub fn mul_right(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul_real(&self, f: &RPoly) -> Self {
        self * &f.map(R::from_rat)
    }

    /// Multiplies by `tᵏ`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rat::from_integer((i as i64).into())))
                .collect(),
        )
    }

    /// Coefficients of `tᵏ` for `k ≥ n` dropped.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }
}

impl<F: Field> Poly<F> {
    /// Quotient and remainder; `self = q·divisor + r`, `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lc_inv = F::one() / divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = rem[k + dd].clone() * lc_inv.clone();
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient, `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divrem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.exact_div(self), Ok(Some(_)))
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) => {
                let inv = F::one() / lc.clone();
                Self::new(self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect())
            }
        }
    }

    pub fn div_scalar(&self, c: &F) -> Self {
        let inv = F::one() / c.clone();
        self.mul_right(&inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended Euclid: `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        let lc = r0.lc().cloned().expect("nonzero gcd");
        Ok((r0.div_scalar(&lc), s0.div_scalar(&lc), t0.div_scalar(&lc)))
    }

    /// `b` with `a·b ≡ 1 (mod m)` and `deg b < deg m`.
    pub fn mod_inverse(&self, m: &Self) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let a = self.rem(m)?;
        if a.is_zero() {
            return Err(Error::NotCoprime);
        }
        let (g, s, _) = a.ext_gcd(m)?;
        if g.degree() != Some(0) {
            return Err(Error::NotCoprime);
        }
        s.rem(m)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<R: Ring> $tr<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &Poly<R>) -> Poly<R> {
                let f: fn(&Poly<R>, &Poly<R>) -> Poly<R> = $body;
                f(self, rhs)
            }
        }
        impl<R: Ring> $tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                $tr::$m(&self, &rhs)
            }
        }
        impl<R: Ring> $tr<&Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &Poly<R>) -> Poly<R> {
                $tr::$m(&self, rhs)
            }
        }
        impl<R: Ring> $tr<Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                $tr::$m(self, &rhs)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|i| a.coeff(i) + b.coeff(i)).collect())
});

poly_binop!(Sub, sub, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|i| a.coeff(i) - b.coeff(i)).collect())
});

poly_binop!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![R::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    Poly::new(out)
});

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Ring> Default for Poly<R> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Convenience constructor from small integers, ascending powers.
pub fn rpoly(coeffs: &[i64]) -> RPoly {
    Poly::new(coeffs.iter().map(|&c| crate::rat::int(c)).collect())
}

/// Convenience constructor from `(num, den)` pairs, ascending powers.
pub fn rpoly_q(coeffs: &[(i64, i64)]) -> RPoly {
    Poly::new(coeffs.iter().map(|&(n, d)| crate::rat::rat(n, d)).collect())
}

impl std::fmt::Display for RPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag_s = crate::rat::format_rat(&mag);
            match (i, mag == Rat::one()) {
                (0, _) => write!(f, "{mag_s}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag_s}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag_s}t^{i}")?,
            }
        }
        Ok(())
    }
}
