//! End-to-end verification of the shipped equivalence certificates, plus
//! tampered variants that must fail.

use dihom_core::cert::{verify_equivalence_certificate, CbChain, Chain, Direction};
use dihom_core::plmap::Verdict;
use dihom_core::presets;

fn assert_passes(name: &str) {
    let cert = presets::preset_certificate(name).expect("known certificate");
    match verify_equivalence_certificate(&cert).expect("verification ran") {
        Verdict::Pass => {}
        Verdict::Fail(f) => panic!("certificate {} failed at {}: {}", name, f.stage, f.reason),
    }
}

#[test]
fn interval_contracts_to_its_endpoint() {
    assert_passes("di-point");
}

#[test]
fn attached_intervals_contract_to_the_midpoint() {
    assert_passes("dx-point");
}

#[test]
fn square_equals_interval_rel_corners() {
    assert_passes("dii-di-corners");
}

#[test]
fn square_removed_equals_boundary_rel_corners() {
    assert_passes("square-removed-boundary");
}

#[test]
fn swiss_flag_equals_skeleton_rel_four_points() {
    assert_passes("swiss-flag");
}

#[test]
fn tampered_swiss_chain_direction_fails() {
    let mut cert = presets::preset_certificate("swiss-flag").unwrap();
    // Swap the second homotopy's direction: the interpolation then runs
    // against the pointwise order and must be rejected.
    cert.chain_bc.dirs[1] = Direction::Fwd;
    match verify_equivalence_certificate(&cert).unwrap() {
        Verdict::Fail(f) => {
            assert!(f.stage.contains("chain B"), "failed at {}", f.stage);
        }
        Verdict::Pass => panic!("tampered certificate accepted"),
    }
}

#[test]
fn truncated_chain_fails_at_the_composite() {
    let mut cert = presets::preset_certificate("square-removed-boundary").unwrap();
    // Drop the last node: the chain no longer ends at g . f.
    cert.chain_bc = Chain {
        nodes: cert.chain_bc.nodes[..2].to_vec(),
        dirs: cert.chain_bc.dirs[..1].to_vec(),
    };
    cert.chain_cb = CbChain::Explicit(Chain {
        nodes: cert.chain_bc.nodes.clone(),
        dirs: cert.chain_bc.dirs.clone(),
    });
    match verify_equivalence_certificate(&cert).unwrap() {
        Verdict::Fail(f) => assert!(
            f.reason.contains("does not end"),
            "unexpected failure: {} / {}",
            f.stage,
            f.reason
        ),
        Verdict::Pass => panic!("truncated certificate accepted"),
    }
}

#[test]
fn moved_mark_fails_the_rel_condition() {
    let mut cert = presets::preset_certificate("dii-di-corners").unwrap();
    // Re-mark b at the center: max no longer fixes it.
    use dihom_core::geom::Point;
    use dihom_core::plmap::Location;
    use dihom_core::rat::rat;
    cert.space_b.marks.insert(
        "b".into(),
        Location::Ambient(Point::new(vec![rat(1, 2), rat(1, 2)])),
    );
    match verify_equivalence_certificate(&cert).unwrap() {
        Verdict::Fail(_) => {}
        Verdict::Pass => panic!("moved mark accepted"),
    }
}
