//! Betti numbers and semi-characteristics of a few closed complexes.
//!
//! ```text
//! cargo run --example betti_numbers
//! ```

use kervaire::harness::fixtures;
use kervaire::simplicial::{betti, betti_over, euler, kappa, standard, Field};

fn main() {
    let s5 = fixtures::s5();
    println!(
        "S^5 = boundary of the 6-simplex, f-vector {:?}",
        s5.f_vector()
    );
    println!("  betti {:?}  kappa {}", betti(&s5), kappa(&s5));

    let s1s4 = fixtures::s1_x_s4();
    println!(
        "S^1 x S^4 (staircase product), f-vector {:?}",
        s1s4.f_vector()
    );
    println!("  betti {:?}  kappa {}", betti(&s1s4), kappa(&s1s4));

    // torsion shows up as a difference between the two fields
    let rp2 = standard::projective_plane();
    println!("RP^2, chi = {}", euler(&rp2));
    println!("  over Q:     {:?}", betti_over(&rp2, Field::Rational));
    println!("  over GF(2): {:?}", betti_over(&rp2, Field::Gf2));
}
