//! Small named triangulations used throughout the tests and fixtures.

use super::{SimplicialComplex, VertexOrder};

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn build(tops: &[Vec<String>]) -> SimplicialComplex {
    SimplicialComplex::from_top_simplices(tops).expect("static triangulation is valid")
}

fn from_ints(tops: &[&[usize]]) -> SimplicialComplex {
    let tops: Vec<Vec<String>> = tops
        .iter()
        .map(|t| t.iter().map(|v| v.to_string()).collect())
        .collect();
    build(&tops)
}

/// The full `n`-simplex on vertices `0..=n`.
pub fn simplex(n: usize) -> SimplicialComplex {
    build(&[labels(n + 1)])
}

/// All proper faces of the `n`-simplex: a triangulated `(n-1)`-sphere.
pub fn boundary_of_simplex(n: usize) -> SimplicialComplex {
    assert!(n >= 1, "the 0-simplex has empty boundary");
    let all = labels(n + 1);
    let tops: Vec<Vec<String>> = (0..=n)
        .map(|skip| {
            all.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect();
    build(&tops)
}

/// The cycle graph on vertices `0..n`.
pub fn cycle(n: usize) -> SimplicialComplex {
    assert!(n >= 3, "a simplicial cycle needs 3 vertices");
    let tops: Vec<Vec<String>> = (0..n)
        .map(|i| vec![i.to_string(), ((i + 1) % n).to_string()])
        .collect();
    build(&tops)
}

/// Orientation `0 → 1 → … → n-1 → 0` of [`cycle`].
pub fn cycle_order(n: usize) -> VertexOrder {
    VertexOrder::Cyclic(labels(n))
}

/// Minimal 5-vertex triangulation of the Möbius band.
pub fn mobius_strip() -> SimplicialComplex {
    from_ints(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 0], &[4, 0, 1]])
}

/// Minimal 6-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    from_ints(&[
        &[0, 1, 2],
        &[0, 2, 3],
        &[0, 3, 4],
        &[0, 4, 5],
        &[0, 5, 1],
        &[1, 2, 4],
        &[2, 3, 5],
        &[3, 4, 1],
        &[4, 5, 2],
        &[5, 1, 3],
    ])
}

/// Boundary of the cross-polytope in dimension 3, vertices `x±`, `y±`, `z±`.
pub fn octahedron() -> SimplicialComplex {
    let mut tops = Vec::new();
    for x in ["x+", "x-"] {
        for y in ["y+", "y-"] {
            for z in ["z+", "z-"] {
                tops.push(vec![x.to_string(), y.to_string(), z.to_string()]);
            }
        }
    }
    build(&tops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{betti, euler};

    #[test]
    fn shapes() {
        assert_eq!(simplex(3).f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(boundary_of_simplex(6).f_vector().len(), 6);
        assert_eq!(euler(&cycle(3)), 0);
        assert_eq!(betti(&mobius_strip()), vec![1, 1, 0]);
        assert_eq!(betti(&octahedron()), vec![1, 0, 1]);
        assert_eq!(euler(&projective_plane()), 1);
    }
}
