//! Rational quaternions and dual quaternions.
//!
//! `i² = j² = k² = ijk = −1`, `ε² = 0`, and `ε` commutes with everything.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::Ring;
use crate::rat::{format_rat, int, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Quat {
    pub w: Rat,
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Quat {
    pub fn new(w: Rat, x: Rat, y: Rat, z: Rat) -> Self {
        Quat { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quat::new(int(w), int(x), int(y), int(z))
    }

    pub fn real(r: Rat) -> Self {
        Quat::new(r, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    pub fn conj(&self) -> Self {
        Quat::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm(&self) -> Rat {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&(Rat::one() / n)))
    }

    pub fn vector(&self) -> Self {
        Quat::new(Rat::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_vector(&self) -> bool {
        self.w.is_zero()
    }

    pub fn components(&self) -> [&Rat; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn from_components(c: [Rat; 4]) -> Self {
        let [w, x, y, z] = c;
        Quat::new(w, x, y, z)
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, o: Quat) -> Quat {
        Quat::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, o: Quat) -> Quat {
        Quat::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, o: Quat) -> Quat {
        &self * &o
    }
}

impl Mul<&Quat> for &Quat {
    type Output = Quat;
    fn mul(self, o: &Quat) -> Quat {
        let (a, b) = (self, o);
        Quat::new(
            &a.w * &b.w - &a.x * &b.x - &a.y * &b.y - &a.z * &b.z,
            &a.w * &b.x + &a.x * &b.w + &a.y * &b.z - &a.z * &b.y,
            &a.w * &b.y - &a.x * &b.z + &a.y * &b.w + &a.z * &b.x,
            &a.w * &b.z + &a.x * &b.y - &a.y * &b.x + &a.z * &b.w,
        )
    }
}

impl Div for Quat {
    type Output = Quat;
    /// Right division `self·o⁻¹`.
    fn div(self, o: Quat) -> Quat {
        self * o.inverse().expect("division by zero quaternion")
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Zero for Quat {
    fn zero() -> Self {
        Quat::default()
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl One for Quat {
    fn one() -> Self {
        Quat::real(Rat::one())
    }
}

impl Ring for Quat {
    fn from_rat(r: &Rat) -> Self {
        Quat::real(r.clone())
    }
    fn scale(&self, r: &Rat) -> Self {
        Quat::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: &[(&Rat, &str)]) -> fmt::Result {
    let mut first = true;
    for (c, unit) in terms {
        if c.is_zero() {
            continue;
        }
        let s = format_rat(c);
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        if unit.is_empty() {
            write!(f, "{mag}")?;
        } else if mag == "1" {
            write!(f, "{unit}")?;
        } else {
            write!(f, "{mag}{unit}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            &[(&self.w, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")],
        )
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DualQuat {
    pub primal: Quat,
    pub dual: Quat,
}

impl DualQuat {
    pub fn new(primal: Quat, dual: Quat) -> Self {
        DualQuat { primal, dual }
    }

    pub fn from_primal(p: Quat) -> Self {
        DualQuat::new(p, Quat::zero())
    }

    pub fn from_dual(d: Quat) -> Self {
        DualQuat::new(Quat::zero(), d)
    }

    pub fn conj(&self) -> Self {
        DualQuat::new(self.primal.conj(), self.dual.conj())
    }

    pub fn eps_conj(&self) -> Self {
        DualQuat::new(self.primal.clone(), -self.dual.clone())
    }

    /// `h·h̄`, a dual number when `h` satisfies the Study condition.
    pub fn norm(&self) -> (Rat, Rat) {
        let n = self * &self.conj();
        (n.primal.w, n.dual.w)
    }

    /// `(p + εd)⁻¹ = p⁻¹ − ε p⁻¹ d p⁻¹`, defined when `p ≠ 0`.
    pub fn inverse(&self) -> Option<Self> {
        let pi = self.primal.inverse()?;
        let d = -(&(&pi * &self.dual) * &pi);
        Some(DualQuat::new(pi, d))
    }

    /// The eight real coordinates `1, i, j, k, ε, εi, εj, εk`.
    pub fn components(&self) -> [&Rat; 8] {
        let p = self.primal.components();
        let d = self.dual.components();
        [p[0], p[1], p[2], p[3], d[0], d[1], d[2], d[3]]
    }

    pub fn from_components(c: [Rat; 8]) -> Self {
        let [a, b, c2, d, e, f, g, h] = c;
        DualQuat::new(Quat::new(a, b, c2, d), Quat::new(e, f, g, h))
    }
}

impl Add for DualQuat {
    type Output = DualQuat;
    fn add(self, o: DualQuat) -> DualQuat {
        DualQuat::new(self.primal + o.primal, self.dual + o.dual)
    }
}

impl Sub for DualQuat {
    type Output = DualQuat;
    fn sub(self, o: DualQuat) -> DualQuat {
        DualQuat::new(self.primal - o.primal, self.dual - o.dual)
    }
}

impl Mul<&DualQuat> for &DualQuat {
    type Output = DualQuat;
    fn mul(self, o: &DualQuat) -> DualQuat {
        DualQuat::new(
            &self.primal * &o.primal,
            &self.primal * &o.dual + &self.dual * &o.primal,
        )
    }
}

impl Mul for DualQuat {
    type Output = DualQuat;
    fn mul(self, o: DualQuat) -> DualQuat {
        &self * &o
    }
}

impl Neg for DualQuat {
    type Output = DualQuat;
    fn neg(self) -> DualQuat {
        DualQuat::new(-self.primal, -self.dual)
    }
}

impl Zero for DualQuat {
    fn zero() -> Self {
        DualQuat::default()
    }
    fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }
}

impl One for DualQuat {
    fn one() -> Self {
        DualQuat::from_primal(Quat::one())
    }
}

impl Ring for DualQuat {
    fn from_rat(r: &Rat) -> Self {
        DualQuat::from_primal(Quat::real(r.clone()))
    }
    fn scale(&self, r: &Rat) -> Self {
        DualQuat::new(self.primal.scale(r), self.dual.scale(r))
    }
}

impl fmt::Display for DualQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.components();
        fmt_terms(
            f,
            &[
                (c[0], ""),
                (c[1], "i"),
                (c[2], "j"),
                (c[3], "k"),
                (c[4], "ε"),
                (c[5], "εi"),
                (c[6], "εj"),
                (c[7], "εk"),
            ],
        )
    }
}
