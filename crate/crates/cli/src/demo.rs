//! Built-in worked examples.

use serde::Serialize;
use torse_core::fixtures;
use torse_core::poly::rpoly;
use torse_core::synthesis::cofactor::complex_cofactor;
use torse_core::{
    analyze, canonical_representative, is_kinematic, saturation, split_even_power, split_quadratic,
    synthesize_minimal, verify_trajectory, Quat, QuatPoly,
};

use crate::Failure;

pub const NAMES: [&str; 6] = ["example1", "example2", "example3", "example4", "example5", "example6"];

struct Report {
    all_ok: bool,
}

impl Report {
    fn show<T: Serialize>(&self, label: &str, v: &T) {
        println!("{label}: {}", serde_json::to_string(v).expect("serializable"));
    }

    fn check(&mut self, label: &str, ok: bool) {
        println!("check {label}: {}", if ok { "ok" } else { "FAILED" });
        self.all_ok &= ok;
    }
}

/// Runs one example; `Ok(false)` when a check fails.
pub fn run(name: &str) -> Result<bool, Failure> {
    let mut r = Report { all_ok: true };
    println!("# {name}");
    match name {
        "example1" => {
            let input = fixtures::example1_rational();
            r.show("input", &input);
            let w = canonical_representative(&input)?;
            r.show("representative", &w);
            let expected = fixtures::example1_expected();
            let ratio = w.u0.lc().expect("nonzero") / expected.u0.lc().expect("nonzero");
            r.check("equals the expected polynomial up to scale", w == expected.scale(&ratio));
        }
        "example2" => {
            let g = fixtures::example2_g();
            r.show("g", &g);
            let c = complex_cofactor(&g)?;
            r.show("ell", &c.ell);
            r.show("G", &c.g_complex);
            let big = QuatPoly::from_cpoly(&c.g_complex);
            let k = QuatPoly::constant(Quat::k());
            r.check("G k conj(G) = ell g k", &(&big * &k) * &big.conj() == k.mul_real(&(&c.ell * &g)));
            r.check("ell = t - 1", c.ell == rpoly(&[-1, 1]));
        }
        "example3" => {
            let u = fixtures::example3_u();
            r.show("u", &u);
            let s = saturation(&u)?;
            r.show("saturation", &s);
            r.check("not saturated, ell = t - 1", !s.saturated && s.ell == Some(rpoly(&[-1, 1])));
            r.check("not kinematic", is_kinematic(&u)?.is_none());
        }
        "example4" => {
            let u = fixtures::example4_u();
            r.show("u", &u);
            let a = analyze(&u)?;
            r.show("analysis", &a);
            r.check("kinematic with minimal degree 3", a.kinematic && a.minimal_motion_degree == Some(3));
            let s = synthesize_minimal(&u, 0)?;
            r.show("C", &s.c);
            let v = verify_trajectory(&s.c, &u);
            r.show("verification", &v);
            r.check("trajectory identity", v.ok && v.h == Some(fixtures::example4_h()));
        }
        "example5" => {
            let u = fixtures::example4_u();
            let c = fixtures::quartic_motion();
            r.show("C", &c);
            let v = verify_trajectory(&c, &u);
            r.show("verification", &v);
            let h = &rpoly(&[1, 0, 1]) * &fixtures::example4_h();
            r.check("trajectory identity with h = (t^2+1)(t^2-6t+10)", v.ok && v.h == Some(h));
            let s = split_quadratic(&c, &rpoly(&[1, 0, 1]))?;
            r.show("split", &s);
            r.check("quotient E = C", &s.quotient * &s.factor == c);
            let q = verify_trajectory(&s.quotient, &u);
            r.check("quotient has the minimal trajectory", q.ok && q.h == Some(fixtures::example4_h()));
        }
        "example6" => {
            let c = fixtures::example6_motion();
            r.show("C", &c);
            let s = split_even_power(&c, &rpoly(&[0, 1]))?;
            r.show("split", &s);
            r.check("E = t^2 + ε((i - j)t + i + j)", s.factor == fixtures::example6_factor());
            r.check("quotient E = C", &s.quotient * &s.factor == c);
        }
        _ => return Err(Failure::usage(format!("unknown demo {name}"))),
    }
    println!("verdict: {}", if r.all_ok { "ok" } else { "FAILED" });
    Ok(r.all_ok)
}
