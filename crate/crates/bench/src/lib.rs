//! Benchmark fixtures shared by the criterion suites.

use wptwist::WeightedHypersurface;

/// Weight systems and degrees of increasing group order for the Euler engine.
pub const EULER_CASES: [(&[u64], u64); 4] = [
    (&[1, 1, 2, 4, 4], 12),
    (&[1, 1, 12, 28, 42], 84),
    (&[1, 1, 12, 44, 66], 132),
    (&[41, 42, 498, 1162, 1743], 3486),
];

/// Cone weights whose lattice-point sets grow with `w0`.
pub const CONE_CASES: [[u64; 3]; 3] = [[11, 5, 6], [41, 7, 83], [581, 41, 42]];

/// Base curve `x0^6 + x1^12 x2 + x2^11` in `P(11,5,6)`, whose twist by the
/// sextic elliptic curve has fibers `2×II, 2×II*`.
pub fn chain_curve() -> WeightedHypersurface {
    wptwist::io::hypersurface_from_json(
        r#"{"weights":[11,5,6],"degree":66,"terms":[{"exps":[6,0,0],"coeff":"1"},{"exps":[0,12,1],"coeff":"1"},{"exps":[0,0,11],"coeff":"1"}]}"#,
    )
    .expect("fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(chain_curve().degree(), 66);
        for (w, d) in EULER_CASES {
            let ws = wptwist::WeightSystem::new(w.to_vec()).unwrap();
            assert!(wptwist::euler_hodge::orbifold_euler(&ws, d).is_ok());
        }
    }
}
