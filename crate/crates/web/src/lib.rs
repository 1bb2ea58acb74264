//! Browser demo: analyze and synthesize a torse, sample the resulting motion,
//! and move along its solution family.
//!
//! Every entry point takes and returns JSON strings. The `*_json` functions
//! hold the logic and are what the native tests call.

use serde::Serialize;
use torse_core::json::{from_json, parse_plane_input, to_json, PlaneInput};
use torse_core::rat::{parse_rat, to_f64};
use torse_core::sample::grid;
use torse_core::synthesis::reduce_plane;
use torse_core::{
    analyze, canonical_representative, compose_family, fixtures, sample, synthesize_minimal, verify_trajectory,
    DualQuatPoly, PlanePoly, RPoly, Rat,
};
use wasm_bindgen::prelude::*;

fn plane(text: &str) -> Result<PlanePoly, String> {
    let u = match parse_plane_input(text).map_err(|e| e.to_string())? {
        PlaneInput::Poly(u) => u,
        PlaneInput::Rational(r) => canonical_representative(&r).map_err(|e| e.to_string())?,
    };
    Ok(reduce_plane(&u).map_err(|e| e.to_string())?.0)
}

fn motion(text: &str) -> Result<DualQuatPoly, String> {
    let c: DualQuatPoly = from_json(text).map_err(|e| e.to_string())?;
    c.require_motion().map_err(|e| e.to_string())?;
    Ok(c)
}

fn number(text: &str) -> Result<Rat, String> {
    parse_rat(text.trim()).map_err(|e| format!("{text:?}: {e}"))
}

#[derive(Serialize)]
struct Synthesis {
    analysis: torse_core::TorseAnalysis,
    motion: DualQuatPoly,
    degree: usize,
    verified: bool,
    h: RPoly,
}

pub fn synthesize_json(torse: &str, seed: u64) -> Result<String, String> {
    let w = plane(torse)?;
    let analysis = analyze(&w).map_err(|e| e.to_string())?;
    if let Some(reason) = &analysis.unsupported_reason {
        return Err(format!("not realizable: {reason}"));
    }
    let r = synthesize_minimal(&w, seed).map_err(|e| e.to_string())?;
    let v = verify_trajectory(&r.c, &w);
    Ok(to_json(&Synthesis {
        analysis,
        motion: r.c,
        degree: r.degree,
        verified: v.ok,
        h: r.h,
    }))
}

#[derive(Serialize)]
struct Frame {
    t: f64,
    normal: [f64; 3],
    corners: Vec<[f64; 3]>,
}

/// Frames for drawing. Exact samples are rounded only here.
pub fn sample_json(motion_text: &str, from: &str, to: &str, count: usize, size: &str) -> Result<String, String> {
    let c = motion(motion_text)?;
    let s = number(size)?;
    let params = grid(&number(from)?, &number(to)?, count);
    let frames: Vec<Frame> = sample(&c, &params, &s, &s)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|f| Frame {
            t: to_f64(&f.t),
            normal: [to_f64(&f.plane[0]), to_f64(&f.plane[1]), to_f64(&f.plane[2])],
            corners: f.rect_corners.iter().map(|p| p.each_ref().map(to_f64)).collect(),
        })
        .collect();
    Ok(serde_json::to_string(&frames).expect("serializable"))
}

/// `C·(e0 + ε(e5 i + e6 j))` and whether it still has the trajectory `torse`.
pub fn family_json(motion_text: &str, torse: &str, e0: &str, e5: &str, e6: &str) -> Result<String, String> {
    let c = motion(motion_text)?;
    let w = plane(torse)?;
    let poly = |s: &str| from_json::<RPoly>(s).map_err(|e| e.to_string());
    let composed = compose_family(&c, &poly(e0)?, &RPoly::zero(), &poly(e5)?, &poly(e6)?)
        .map_err(|e| e.to_string())?;
    let (composed, _) = composed.reduce().map_err(|e| e.to_string())?;
    let v = verify_trajectory(&composed, &w);
    Ok(serde_json::json!({
        "motion": composed,
        "degree": composed.degree(),
        "verified": v.ok,
        "h": v.h,
    })
    .to_string())
}

pub fn example_torse_json() -> String {
    to_json(&fixtures::example4_u())
}

#[wasm_bindgen]
pub fn synthesize(torse: &str, seed: u64) -> Result<String, JsError> {
    synthesize_json(torse, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sample_motion(motion: &str, from: &str, to: &str, count: usize, size: &str) -> Result<String, JsError> {
    sample_json(motion, from, to, count, size).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn family(motion: &str, torse: &str, e0: &str, e5: &str, e6: &str) -> Result<String, JsError> {
    family_json(motion, torse, e0, e5, e6).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn example_torse() -> String {
    example_torse_json()
}
