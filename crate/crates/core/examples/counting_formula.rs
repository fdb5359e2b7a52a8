//! The counting formula on the shipped `S^1 x D^4` scenarios.
//!
//! ```text
//! cargo run --example counting_formula
//! ```

use std::path::Path;

use kervaire::harness::{load_scenario, verify_counting};

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/scenarios");
    for name in ["s1xd4", "s1xd4_two_circles", "s1xd4_boundary_circle"] {
        let s = load_scenario(dir.join(format!("{name}.json"))).unwrap();
        let r = verify_counting(&s).unwrap();
        println!(
            "{name}: kappa(M,dM) = {}, interior circle sum = {} -> {:?}",
            r.lhs, r.rhs, r.status
        );
        for c in &r.per_circle {
            println!(
                "  circle {} [{}]: ind2 {}{}",
                c.index,
                c.location,
                c.result.ind2,
                if c.counted { "" } else { " (not counted)" }
            );
        }
    }

    let bad = load_scenario(dir.join("bad_boundary_euler.json"));
    println!("bad_boundary_euler: {}", bad.unwrap_err());
}
