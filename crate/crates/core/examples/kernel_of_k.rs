//! `K = tr|A| + A^` is nonnegative with a one-dimensional kernel spanned by
//! the wedge of the negative eigenvectors of `A`.

use kervaire::circleindex::dense_sym_eigen;
use kervaire::clifford::{k_op, lemma1_kernel, ExteriorVector, SymMatrix};

fn main() {
    let samples = [
        vec![
            vec![1.0, 0.5, 0.0],
            vec![0.5, 2.0, 0.3],
            vec![0.0, 0.3, 1.5],
        ],
        vec![
            vec![-1.0, 0.5, 0.0],
            vec![0.5, 2.0, 0.3],
            vec![0.0, 0.3, 1.5],
        ],
        vec![
            vec![-1.0, 0.5, 0.0],
            vec![0.5, -2.0, 0.3],
            vec![0.0, 0.3, 1.5],
        ],
    ];
    for rows in samples {
        let a = SymMatrix::new(rows).unwrap();
        let e = a.eigen().unwrap();
        let (w, parity) = lemma1_kernel(&a).unwrap();

        let k = k_op(&a).unwrap();
        let spectrum = dense_sym_eigen(&k).unwrap();
        let lowest = ExteriorVector::from_coeffs(3, spectrum.vectors[0].clone());
        println!("det A = {:+.3}  eig(A) = {:.3?}", e.determinant(), e.values);
        println!(
            "  K: lowest {:.1e}, next {:.3}; kernel parity {:?}; |<wedge, lowest>| = {:.12}",
            spectrum.values[0],
            spectrum.values[1],
            parity,
            w.dot(&lowest).abs()
        );
    }
}
