//! Mod-2 index of loops of symmetric matrices.

use kervaire::circleindex::{boundary_reduce, ind2, ind2_oracle, LoopGenerator, MatrixLoop, Turns};
use kervaire::harness::fixtures;

fn main() {
    for (label, turns) in [
        ("0", Turns::new(0, 1)),
        ("1/2", Turns::new(1, 2)),
        ("1", Turns::new(1, 1)),
        ("3/2", Turns::new(3, 2)),
    ] {
        let l = fixtures::rotating_loop(4, turns, 32);
        let wedge = ind2(&l).unwrap();
        let dense = ind2_oracle(&l).unwrap();
        println!(
            "turns {label:>3}: monodromy {:+}, ind2 {} (dense route {}), kernel parity {:?}",
            wedge.monodromy, wedge.ind2, dense.ind2, wedge.parity
        );
    }

    // two samples of a half turn are too far apart to track the kernel
    let coarse = fixtures::rotating_loop(4, Turns::new(1, 2), 2);
    match ind2(&coarse) {
        Err(e) => println!("coarse loop refused: {e}"),
        Ok(r) => println!("unexpected: {r:?}"),
    }
    let fine = coarse.refined(8).unwrap().unwrap();
    println!(
        "after refining to {} samples: ind2 = {}",
        fine.samples().len(),
        ind2(&fine).unwrap().ind2
    );

    // a boundary loop diag(sign, A0(t)) has the index of its inner block
    let inner = LoopGenerator::ConjugatedDiag {
        diag: vec![-1.0, 2.0, 3.0],
        plane: [0, 1],
        turns: Turns::new(1, 2),
        count: 24,
    };
    for sign in [1, -1] {
        let b = MatrixLoop::generated_boundary(inner.clone(), sign).unwrap();
        let reduced = boundary_reduce(&b).unwrap();
        println!(
            "boundary sign {sign:+}: ind2 {}, reduced ind2 {}",
            ind2(&b).unwrap().ind2,
            ind2(&reduced).unwrap().ind2
        );
    }
}
