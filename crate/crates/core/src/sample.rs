//! Sampling a motion at rational parameters for plotting.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::rat_str;
use crate::plane::{act_on_point, plane_trajectory, PointPoly};
use crate::qpoly::DualQuatPoly;
use crate::rat::{format_rat, rat, to_f64, Rat};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrameSample {
    #[serde(with = "rat_str")]
    pub t: Rat,
    /// `(n1, n2, n3, d)` of the plane `n1 x + n2 y + n3 z + d = 0`, not
    /// normalized.
    #[serde(serialize_with = "ser_rats")]
    pub plane: [Rat; 4],
    /// Images of the corners of the moving rectangle in `z = 0`.
    #[serde(serialize_with = "ser_points")]
    pub rect_corners: [[Rat; 3]; 4],
}

fn ser_rats<S: serde::Serializer>(v: &[Rat; 4], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rat))
}

fn ser_points<S: serde::Serializer>(
    v: &[[Rat; 3]; 4],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.iter().map(format_rat).collect::<Vec<_>>()))
}

impl FrameSample {
    /// Every corner lies on the sampled plane.
    pub fn is_incident(&self) -> bool {
        let [n1, n2, n3, d] = &self.plane;
        self.rect_corners
            .iter()
            .all(|[x, y, z]| (d + &(n1 * x) + &(n2 * y) + &(n3 * z)).is_zero())
    }

    pub fn csv_row(&self, digits: usize) -> String {
        let mut cells = vec![to_f64(&self.t)];
        cells.extend(self.plane.iter().map(to_f64));
        for p in &self.rect_corners {
            cells.extend(p.iter().map(to_f64));
        }
        cells
            .iter()
            .map(|x| format!("{x:.digits$}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub const CSV_HEADER: &str =
    "t,n1,n2,n3,d,x1,y1,z1,x2,y2,z2,x3,y3,z3,x4,y4,z4";

/// `count` equally spaced rational parameters from `from` to `to`.
pub fn grid(from: &Rat, to: &Rat, count: usize) -> Vec<Rat> {
    match count {
        0 => vec![],
        1 => vec![from.clone()],
        n => {
            let step = (to - from) / Rat::from_integer((n as i64 - 1).into());
            (0..n).map(|i| from + &step * Rat::from_integer((i as i64).into())).collect()
        }
    }
}

/// Samples the moving plane and the rectangle `[−w/2, w/2] × [−h/2, h/2]`.
pub fn sample(c: &DualQuatPoly, params: &[Rat], width: &Rat, height: &Rat) -> Result<Vec<FrameSample>> {
    c.require_motion()?;
    let (c, _) = c.reduce()?;
    let traj = plane_trajectory(&c)?;
    let (hw, hh) = (width * rat(1, 2), height * rat(1, 2));
    let corners = [
        (-hw.clone(), -hh.clone()),
        (hw.clone(), -hh.clone()),
        (hw.clone(), hh.clone()),
        (-hw, hh),
    ];
    let mut out = Vec::with_capacity(params.len());
    for t in params {
        let ct = DualQuatPoly::constant(c.eval_rat(t));
        if ct.primal().is_zero() {
            return Err(Error::PreconditionViolation(format!(
                "the motion degenerates at t = {}",
                format_rat(t)
            )));
        }
        let u = traj.eval(t);
        let mut rect = Vec::with_capacity(4);
        for (x, y) in &corners {
            let p = act_on_point(&ct, &PointPoly::cartesian(x.clone(), y.clone(), Rat::zero()))?;
            let [x0, x1, x2, x3] = p.eval(&Rat::one());
            rect.push([&x1 / &x0, &x2 / &x0, &x3 / &x0]);
        }
        let [u0, u1, u2, u3] = u;
        out.push(FrameSample {
            t: t.clone(),
            plane: [u1, u2, u3, u0],
            rect_corners: rect.try_into().expect("four corners"),
        });
    }
    Ok(out)
}
