//! Relative homology of `S^1 x D^4` modulo its boundary `S^1 x S^3`.

use kervaire::harness::{euler_les_check, fixtures};
use kervaire::simplicial::{betti, kappa_relative, relative_betti};

fn main() {
    let pair = fixtures::s1_x_d4();
    println!("M  f-vector {:?}", pair.total().f_vector());
    println!("dM f-vector {:?}", pair.sub().f_vector());
    println!("H(M)    = {:?}", betti(pair.total()));
    println!("H(dM)   = {:?}", betti(pair.sub()));
    println!("H(M,dM) = {:?}", relative_betti(&pair));
    println!("kappa(M,dM) = {}", kappa_relative(&pair));

    let r = euler_les_check(&pair);
    let e = r.euler.unwrap();
    println!(
        "chi(M,dM) - chi(M) + chi(dM) = {} - {} + {} = {}",
        e.euler_relative, e.euler_total, e.euler_sub, r.lhs
    );
}
