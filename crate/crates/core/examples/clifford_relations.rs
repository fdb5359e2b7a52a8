//! The two Clifford actions on the exterior algebra, checked exactly over
//! the rationals, and the operator `A^` built from a symmetric matrix.

use kervaire::clifford::{c_op, chat_op, hat_a, Frame, SymMatrix};
use kervaire::harness::{clifford_relations, random_rational_vector, trial_rng};

fn main() {
    let mut rng = trial_rng(42, 0);
    for m in [2, 3, 4] {
        let v = random_rational_vector(&mut rng, m);
        let w = random_rational_vector(&mut rng, m);
        let results = clifford_relations(&v, &w);
        let ok = results.iter().filter(|(_, ok)| *ok).count();
        println!("m = {m}: {ok}/{} relations hold exactly", results.len());
    }

    // c(e1) on Λ*R^2 in the basis 1, e1, e2, e1^e2 (columns are images)
    let c = c_op(&[1.0, 0.0]);
    let h = chat_op(&[1.0, 0.0]);
    println!("c(e1) =");
    print_op(c.entries(), 4);
    println!("chat(e1) =");
    print_op(h.entries(), 4);

    // A^ does not depend on the orthonormal frame used to build it
    let a = SymMatrix::new(vec![vec![2.0, 1.0], vec![1.0, -1.0]]).unwrap();
    let (s, t) = (0.6, 0.8);
    let frame = Frame::new(vec![vec![s, t], vec![-t, s]]).unwrap();
    let standard = hat_a(&a, &Frame::standard(2)).unwrap();
    let rotated = hat_a(&frame.express(&a), &frame).unwrap();
    let diff = standard
        .entries()
        .iter()
        .zip(rotated.entries())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    println!("max |A^(standard) - A^(rotated frame)| = {diff:.1e}");
}

fn print_op(entries: &[f64], n: usize) {
    for row in entries.chunks(n) {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:5.1}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}
