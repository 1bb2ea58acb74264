mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torse_core::synthesis::reduce_plane;
use torse_core::{analyze, plane_trajectory, synthesize_minimal, verify_trajectory};

#[test]
fn resynthesis_reaches_the_predicted_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..60 {
        let deg = 1 + case % 4;
        let gen = common::random_motion(&mut rng, deg);
        let traj = plane_trajectory(&gen).unwrap();
        let (w, _) = reduce_plane(&traj).unwrap();
        let a = analyze(&w).unwrap();
        assert!(a.supported(), "case {case}: {:?}", a.unsupported_reason);
        let r = synthesize_minimal(&w, case as u64).unwrap_or_else(|e| panic!("case {case}: {e}"));
        assert_eq!(Some(r.degree), a.minimal_motion_degree, "case {case}");
        assert!(r.degree <= gen.degree().unwrap(), "case {case}");
        assert!(verify_trajectory(&r.c, &w).ok, "case {case}");
        assert!(r.c.is_motion_polynomial());
    }
}
