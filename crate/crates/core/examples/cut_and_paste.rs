//! Cut `S^1 x S^4` along `S^1 x S^3` and reglue with different twists.

use kervaire::harness::{fixtures, verify_cutpaste, verify_cutpaste_all};
use kervaire::simplicial::{betti, cut, glue, kappa, kappa_relative};

fn main() {
    let f = fixtures::s1_x_s4_split();
    let pieces = cut(&f.manifold, &f.sides).unwrap();
    println!(
        "M: betti {:?}, kappa {}",
        betti(&f.manifold),
        kappa(&f.manifold)
    );
    println!(
        "pieces: kappa(M1,dM1) = {}, kappa(M2,dM2) = {}, interface f-vector {:?}",
        kappa_relative(&pieces.first),
        kappa_relative(&pieces.second),
        pieces.interface.f_vector()
    );
    let names = ["identity", "rotate by 1", "rotate by 2", "reflect"];
    for (phi, name) in f.automorphisms.iter().zip(names) {
        let glued = glue(&pieces.first, &pieces.second, phi).unwrap();
        println!(
            "  reglued ({name}): betti {:?}, kappa {}",
            betti(&glued),
            kappa(&glued)
        );
    }
    let r = verify_cutpaste_all(&f.manifold, &f.sides, &f.automorphisms).unwrap();
    println!("report status: {:?}", r.status);

    // cutting along two disjoint 4-spheres violates chi(N) = 0
    let (m, sides) = fixtures::s1_x_s4_fiber_split();
    let phi = kervaire::simplicial::VertexMap::identity(&m);
    println!(
        "fiber cut: {}",
        verify_cutpaste(&m, &sides, &phi).unwrap_err()
    );
}
