//! Gaussian rationals `re + im·k`, the complex numbers inside the
//! quaternions spanned by `1` and `k`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::{Field, Poly, RPoly, Ring};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

pub type CPoly = Poly<Gauss>;

impl Gauss {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }

    pub fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Gauss::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        Gauss::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Div for Gauss {
    type Output = Gauss;
    fn div(self, o: Gauss) -> Gauss {
        let n = o.norm();
        let c = self * o.conj();
        Gauss::new(c.re / &n, c.im / n)
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-self.re, -self.im)
    }
}

impl Zero for Gauss {
    fn zero() -> Self {
        Gauss::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gauss {
    fn one() -> Self {
        Gauss::new(Rat::one(), Rat::zero())
    }
}

impl Ring for Gauss {
    fn from_rat(r: &Rat) -> Self {
        Gauss::new(r.clone(), Rat::zero())
    }
    fn scale(&self, r: &Rat) -> Self {
        Gauss::new(&self.re * r, &self.im * r)
    }
}

impl Field for Gauss {}

impl CPoly {
    pub fn from_parts(re: &RPoly, im: &RPoly) -> Self {
        let n = re.coeffs().len().max(im.coeffs().len());
        Poly::new((0..n).map(|i| Gauss::new(re.coeff(i), im.coeff(i))).collect())
    }

    pub fn re(&self) -> RPoly {
        self.map(|c| c.re.clone())
    }

    pub fn im(&self) -> RPoly {
        self.map(|c| c.im.clone())
    }

    pub fn conj(&self) -> Self {
        self.map(Gauss::conj)
    }

    /// `self·conj(self)`, a real polynomial.
    pub fn norm(&self) -> RPoly {
        (self * &self.conj()).re()
    }

    pub fn from_real(p: &RPoly) -> Self {
        p.map(Gauss::from_rat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rpoly;
    use crate::rat::int;

    #[test]
    fn norm_of_linear_factor() {
        // (t − k)(t + k) = t² + 1
        let f = CPoly::from_parts(&rpoly(&[0, 1]), &rpoly(&[-1]));
        assert_eq!(f.norm(), rpoly(&[1, 0, 1]));
    }

    #[test]
    fn gaussian_gcd() {
        let a = CPoly::new(vec![Gauss::new(int(-3), int(-1)), Gauss::one()]);
        let b = CPoly::new(vec![Gauss::new(int(-3), int(1)), Gauss::one()]);
        let p = &a * &a;
        let q = &a * &b;
        assert_eq!(p.gcd(&q).unwrap(), a);
        assert_eq!(a.gcd(&b).unwrap(), CPoly::one());
    }
}
