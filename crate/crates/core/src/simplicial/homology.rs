//! Simplicial (co)homology ranks over Q or GF(2), absolute and relative.
//!
//! Relative groups come from the quotient chain complex `C(M)/C(A)`: the
//! boundary matrices of the pair are those of `M` with every simplex of `A`
//! deleted. Cohomology and homology have the same Betti numbers over a field,
//! so ranks of these matrices are all that is needed.

use crate::exactlin::{Gf2Matrix, IntMatrix};

use super::{facets, ComplexPair, Result, SimplicialComplex, SimplicialError};

/// Coefficient field for Betti numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Field {
    #[default]
    Rational,
    Gf2,
}

/// Matrix of `∂_k`: one row per `k`-simplex, one column per `(k-1)`-simplex,
/// entry `(-1)^i` for the face omitting the `i`-th vertex.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> Result<IntMatrix> {
    let n = c.dim_signed();
    if k == 0 || k as isize > n {
        return Err(SimplicialError::DimensionOutOfRange { k, n });
    }
    Ok(signed_incidence(c, k, |_, _| true))
}

/// `∂_k` of the quotient complex `C(total)/C(sub)`.
pub fn relative_boundary_matrix(p: &ComplexPair, k: usize) -> Result<IntMatrix> {
    let n = p.total().dim_signed();
    if k == 0 || k as isize > n {
        return Err(SimplicialError::DimensionOutOfRange { k, n });
    }
    Ok(signed_incidence(p.total(), k, |d, i| !p.in_sub(d, i)))
}

fn signed_incidence(
    c: &SimplicialComplex,
    k: usize,
    keep: impl Fn(usize, usize) -> bool,
) -> IntMatrix {
    let (rows, cols) = kept_indices(c, k, &keep);
    let mut col_pos = vec![usize::MAX; c.count(k - 1)];
    for (pos, &j) in cols.iter().enumerate() {
        col_pos[j] = pos;
    }
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (r, &i) in rows.iter().enumerate() {
        for (pos, f) in facets(&c.simplices(k)[i]).enumerate() {
            let j = c.index_of(&f).expect("complex is face-closed");
            if col_pos[j] != usize::MAX {
                m.set(r, col_pos[j], if pos % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    m
}

fn gf2_incidence(
    c: &SimplicialComplex,
    k: usize,
    keep: impl Fn(usize, usize) -> bool,
) -> Gf2Matrix {
    let (rows, cols) = kept_indices(c, k, &keep);
    let mut col_pos = vec![usize::MAX; c.count(k - 1)];
    for (pos, &j) in cols.iter().enumerate() {
        col_pos[j] = pos;
    }
    let mut m = Gf2Matrix::zeros(rows.len(), cols.len());
    for (r, &i) in rows.iter().enumerate() {
        for f in facets(&c.simplices(k)[i]) {
            let j = c.index_of(&f).expect("complex is face-closed");
            if col_pos[j] != usize::MAX {
                m.set(r, col_pos[j], true);
            }
        }
    }
    m
}

fn kept_indices(
    c: &SimplicialComplex,
    k: usize,
    keep: &impl Fn(usize, usize) -> bool,
) -> (Vec<usize>, Vec<usize>) {
    let rows = (0..c.count(k)).filter(|&i| keep(k, i)).collect();
    let cols = (0..c.count(k - 1)).filter(|&j| keep(k - 1, j)).collect();
    (rows, cols)
}

/// Ranks of `∂_1..=∂_n` computed on scoped threads, one per dimension.
fn boundary_ranks(
    c: &SimplicialComplex,
    field: Field,
    keep: &(impl Fn(usize, usize) -> bool + Sync),
) -> Vec<usize> {
    let n = c.dim().unwrap_or(0);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=n)
            .map(|k| {
                scope.spawn(move || match field {
                    Field::Rational => signed_incidence(c, k, keep).rank(),
                    Field::Gf2 => gf2_incidence(c, k, keep).rank(),
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("rank thread panicked"))
            .collect()
    })
}

fn betti_from_ranks(chain_dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    // ranks[k-1] = rank ∂_k
    let rank = |k: usize| {
        if k == 0 {
            0
        } else {
            ranks.get(k - 1).copied().unwrap_or(0)
        }
    };
    chain_dims
        .iter()
        .enumerate()
        .map(|(k, &dim)| dim - rank(k) - rank(k + 1))
        .collect()
}

pub fn betti_over(c: &SimplicialComplex, field: Field) -> Vec<usize> {
    if c.is_empty() {
        return Vec::new();
    }
    let ranks = boundary_ranks(c, field, &|_, _| true);
    betti_from_ranks(&c.f_vector(), &ranks)
}

/// Rational Betti numbers `b_0..=b_n`.
pub fn betti(c: &SimplicialComplex) -> Vec<usize> {
    betti_over(c, Field::Rational)
}

pub fn relative_betti_over(p: &ComplexPair, field: Field) -> Vec<usize> {
    let c = p.total();
    if c.is_empty() {
        return Vec::new();
    }
    let keep = |k: usize, i: usize| !p.in_sub(k, i);
    let ranks = boundary_ranks(c, field, &keep);
    let dims: Vec<usize> = (0..c.f_vector().len())
        .map(|k| (0..c.count(k)).filter(|&i| keep(k, i)).count())
        .collect();
    betti_from_ranks(&dims, &ranks)
}

/// Rational Betti numbers of the pair, i.e. `dim H^k(total, sub; Q)`.
pub fn relative_betti(p: &ComplexPair) -> Vec<usize> {
    relative_betti_over(p, Field::Rational)
}

pub fn euler(c: &SimplicialComplex) -> i64 {
    c.euler()
}

/// `χ(total) - χ(sub)`, counted over the simplices outside the sub.
pub fn euler_relative(p: &ComplexPair) -> i64 {
    let c = p.total();
    (0..c.f_vector().len())
        .map(|k| {
            let n = (0..c.count(k)).filter(|&i| !p.in_sub(k, i)).count() as i64;
            if k % 2 == 0 {
                n
            } else {
                -n
            }
        })
        .sum()
}

fn even_sum_mod2(b: &[usize]) -> u8 {
    (b.iter().step_by(2).sum::<usize>() % 2) as u8
}

/// Kervaire semi-characteristic `Σ_j b_{2j} mod 2`.
pub fn kappa(c: &SimplicialComplex) -> u8 {
    even_sum_mod2(&betti(c))
}

/// Relative Kervaire semi-characteristic `Σ_j dim H^{2j}(total, sub) mod 2`.
pub fn kappa_relative(p: &ComplexPair) -> u8 {
    even_sum_mod2(&relative_betti(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat_rank;
    use crate::simplicial::standard;

    #[test]
    fn triangle_boundary_has_rank_two() {
        let tri = standard::simplex(2);
        let d1 = boundary_matrix(&tri, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert_eq!(rat_rank(&d1), 2);
    }

    #[test]
    fn tetrahedron_boundary_d2() {
        let s2 = standard::boundary_of_simplex(3);
        let d2 = boundary_matrix(&s2, 2).unwrap();
        assert_eq!((d2.rows(), d2.cols()), (4, 6));
        assert_eq!(rat_rank(&d2), 3);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = standard::boundary_of_simplex(4);
        for k in 1..3 {
            let up = boundary_matrix(&c, k + 1).unwrap();
            let down = boundary_matrix(&c, k).unwrap();
            assert!(up.mul(&down).is_zero(), "∂∂ != 0 at k={k}");
        }
    }

    #[test]
    fn out_of_range_dimension() {
        let c = standard::boundary_of_simplex(3);
        assert!(matches!(
            boundary_matrix(&c, 0),
            Err(SimplicialError::DimensionOutOfRange { .. })
        ));
        assert!(matches!(
            boundary_matrix(&c, 3),
            Err(SimplicialError::DimensionOutOfRange { k: 3, n: 2 })
        ));
    }

    #[test]
    fn point_and_spheres() {
        assert_eq!(betti(&standard::simplex(0)), vec![1]);
        assert_eq!(kappa(&standard::simplex(0)), 1);
        assert_eq!(betti(&standard::boundary_of_simplex(3)), vec![1, 0, 1]);
        assert_eq!(
            betti(&standard::boundary_of_simplex(6)),
            vec![1, 0, 0, 0, 0, 1]
        );
        assert_eq!(kappa(&standard::boundary_of_simplex(6)), 1);
    }

    #[test]
    fn relative_interval_and_ball() {
        let interval = standard::simplex(1);
        let ends = SimplicialComplex::from_top_simplices(&[vec!["0"], vec!["1"]]).unwrap();
        let pair = ComplexPair::new(interval, ends).unwrap();
        assert_eq!(relative_betti(&pair), vec![0, 1]);

        let ball = ComplexPair::with_boundary(standard::simplex(3)).unwrap();
        assert_eq!(relative_betti(&ball), vec![0, 0, 0, 1]);
        assert_eq!(euler_relative(&ball), -1);
        assert_eq!(kappa_relative(&ball), 0);
    }

    #[test]
    fn empty_sub_gives_absolute_values() {
        let c = standard::cycle(5);
        let p = ComplexPair::absolute(c.clone());
        assert_eq!(relative_betti(&p), betti(&c));
        assert_eq!(euler_relative(&p), euler(&c));
        assert_eq!(kappa_relative(&p), kappa(&c));
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler(&standard::boundary_of_simplex(3)), 2);
        assert_eq!(euler(&standard::cycle(3)), 0);
        assert_eq!(euler(&standard::boundary_of_simplex(6)), 0);
    }

    #[test]
    fn projective_plane_separates_the_fields() {
        let rp2 = standard::projective_plane();
        assert_eq!(betti(&rp2), vec![1, 0, 0]);
        assert_eq!(betti_over(&rp2, Field::Gf2), vec![1, 1, 1]);
    }
}
