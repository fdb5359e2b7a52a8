use std::collections::{HashMap, VecDeque};

use super::{facets, Result, Simplex, SimplicialComplex, SimplicialError};

/// Whether the top simplices admit orientations that induce opposite
/// orientations on every shared ridge. Each connected piece is seeded with
/// the sorted-vertex orientation and propagated breadth first.
pub fn orientable(c: &SimplicialComplex) -> Result<bool> {
    let Some(n) = c.dim() else {
        return Ok(true);
    };
    c.check_pure()?;
    if n == 0 {
        return Ok(true);
    }
    let tops = c.simplices(n);
    // ridge -> [(top index, position of the omitted vertex)]
    let mut incidence: HashMap<Simplex, Vec<(usize, usize)>> = HashMap::new();
    for (t, s) in tops.iter().enumerate() {
        for (pos, f) in facets(s).enumerate() {
            incidence.entry(f).or_default().push((t, pos));
        }
    }
    if let Some((r, inc)) = incidence.iter().find(|(_, v)| v.len() > 2) {
        return Err(SimplicialError::NonManifoldRidge {
            ridge: c.names(r),
            cofaces: inc.len(),
        });
    }

    let mut sign: Vec<i8> = vec![0; tops.len()];
    let mut queue = VecDeque::new();
    for seed in 0..tops.len() {
        if sign[seed] != 0 {
            continue;
        }
        sign[seed] = 1;
        queue.push_back(seed);
        while let Some(t) = queue.pop_front() {
            for (pos, f) in facets(&tops[t]).enumerate() {
                for &(u, upos) in &incidence[&f] {
                    if u == t {
                        continue;
                    }
                    let parity = if (pos + upos) % 2 == 0 { 1 } else { -1 };
                    let want = -sign[t] * parity;
                    if sign[u] == 0 {
                        sign[u] = want;
                        queue.push_back(u);
                    } else if sign[u] != want {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard;

    #[test]
    fn sphere_yes_mobius_no() {
        assert!(orientable(&standard::boundary_of_simplex(3)).unwrap());
        assert!(!orientable(&standard::mobius_strip()).unwrap());
        assert!(!orientable(&standard::projective_plane()).unwrap());
        assert!(orientable(&standard::simplex(4)).unwrap());
    }

    #[test]
    fn impure_input_is_refused() {
        let c =
            SimplicialComplex::from_top_simplices(&[vec!["a", "b", "c"], vec!["c", "d"]]).unwrap();
        assert!(matches!(orientable(&c), Err(SimplicialError::NotPure(_))));
    }
}
