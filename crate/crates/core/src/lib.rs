//! Exact synthesis of rational rigid-body motions whose moving plane sweeps a
//! prescribed rational family of planes.

pub mod error;
pub mod fixtures;
pub mod gauss;
pub mod json;
pub mod linalg;
pub mod plane;
pub mod poly;
pub mod qpoly;
pub mod quat;
pub mod rat;
pub mod sample;
pub mod ring;
pub mod synthesis;
pub mod torse;

pub use error::{Error, NoSolutionReason, Result};
pub use gauss::{CPoly, Gauss};
pub use plane::{act_on_plane, act_on_point, plane_trajectory, PlanePoly, PointPoly};
pub use poly::{Poly, RPoly};
pub use qpoly::{DualQuatPoly, QuatPoly};
pub use quat::{DualQuat, Quat};
pub use rat::Rat;
pub use sample::{sample, FrameSample};
pub use synthesis::{
    compose_family, essential_equivalence, family_dimension, split_even_power, split_quadratic,
    synthesize_minimal, synthesize_with_cofactor, verify_trajectory, SplitResult, SynthesisResult,
    Verification,
};
pub use torse::{analyze, canonical_representative, equalize_degrees, is_kinematic, saturation, TorseAnalysis};
