//! Finite abstract simplicial complexes and the invariants computed from them.
//!
//! Vertices are opaque strings kept in sorted order; a simplex is stored as the
//! sorted list of its vertex indices. Complexes are immutable once built.

mod construct;
mod homology;
pub mod io;
mod orient;
pub mod standard;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use construct::{
    barycentric_subdivision, barycentric_subdivision_pair, boundary_subcomplex, cone, cut,
    disjoint_union, glue, product_complex, product_complex_ordered, suspension, CutResult, Side,
    SideAssignment, VertexMap, VertexOrder,
};
pub use homology::{
    betti, betti_over, boundary_matrix, euler, euler_relative, kappa, kappa_relative,
    relative_betti, relative_betti_over, relative_boundary_matrix, Field,
};
pub use orient::orientable;

/// Sorted vertex indices into [`SimplicialComplex::vertices`].
pub type Simplex = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("simplex {simplex:?} is missing its face {face:?}")]
    MissingFace {
        simplex: Vec<String>,
        face: Vec<String>,
    },
    #[error("simplex {0:?} repeats a vertex")]
    DuplicateVertexInSimplex(Vec<String>),
    #[error("vertex {0:?} is not declared in the vertex list")]
    UnknownVertex(String),
    #[error("dimension {k} out of range 1..={n}")]
    DimensionOutOfRange { k: usize, n: isize },
    #[error("simplex {0:?} of the subcomplex is not a simplex of the total complex")]
    NotASubcomplex(Vec<String>),
    #[error("complex is not pure: maximal simplex {0:?} is below the top dimension")]
    NotPure(Vec<String>),
    #[error("ridge {ridge:?} lies in {cofaces} top simplices")]
    NonManifoldRidge { ridge: Vec<String>, cofaces: usize },
    #[error("complex is not closed: ridge {0:?} has a single coface")]
    NotClosed(Vec<String>),
    #[error("side {0} of the cut is empty")]
    EmptySide(u8),
    #[error("simplex {0:?} is shared by both sides but is not part of the interface")]
    InterfaceNotSeparating(Vec<String>),
    #[error("interface is not a closed pseudomanifold near {0:?}")]
    NonManifoldInterface(Vec<String>),
    #[error("vertex map is not a simplicial isomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("gluing identifies simplex {0:?} with a distinct simplex; refine first")]
    IdentificationCollision(Vec<String>),
    #[error("invalid vertex order: {0}")]
    InvalidOrder(String),
}

impl SimplicialError {
    /// Variant name, used as the error kind in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            SimplicialError::MissingFace { .. } => "MissingFace",
            SimplicialError::DuplicateVertexInSimplex(..) => "DuplicateVertexInSimplex",
            SimplicialError::UnknownVertex(..) => "UnknownVertex",
            SimplicialError::DimensionOutOfRange { .. } => "DimensionOutOfRange",
            SimplicialError::NotASubcomplex(..) => "NotASubcomplex",
            SimplicialError::NotPure(..) => "NotPure",
            SimplicialError::NonManifoldRidge { .. } => "NonManifoldRidge",
            SimplicialError::NotClosed(..) => "NotClosed",
            SimplicialError::EmptySide(..) => "EmptySide",
            SimplicialError::InterfaceNotSeparating(..) => "InterfaceNotSeparating",
            SimplicialError::NonManifoldInterface(..) => "NonManifoldInterface",
            SimplicialError::NotAnIsomorphism(..) => "NotAnIsomorphism",
            SimplicialError::IdentificationCollision(..) => "IdentificationCollision",
            SimplicialError::InvalidOrder(..) => "InvalidOrder",
        }
    }
}

pub type Result<T, E = SimplicialError> = std::result::Result<T, E>;

/// A finite abstract simplicial complex, closed under taking faces.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    vertex_index: HashMap<String, usize>,
    simplices: Vec<Vec<Simplex>>,
    lookup: Vec<HashMap<Simplex, usize>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::assemble(Vec::new(), BTreeSet::new())
    }

    /// Builds the closure of the given simplices. Every vertex named in a
    /// simplex is added to the vertex set.
    pub fn from_top_simplices<S: AsRef<str>>(tops: &[Vec<S>]) -> Result<Self> {
        Self::from_vertices_and_tops(std::iter::empty::<&str>(), tops, false)
    }

    /// Closure of `tops` on a declared vertex set. Vertices that appear in no
    /// simplex become isolated points; undeclared ones are an error.
    pub fn with_vertices<V: AsRef<str>, S: AsRef<str>>(
        vertices: impl IntoIterator<Item = V>,
        tops: &[Vec<S>],
    ) -> Result<Self> {
        Self::from_vertices_and_tops(vertices, tops, true)
    }

    fn from_vertices_and_tops<V: AsRef<str>, S: AsRef<str>>(
        vertices: impl IntoIterator<Item = V>,
        tops: &[Vec<S>],
        strict: bool,
    ) -> Result<Self> {
        let mut names: BTreeSet<String> = vertices
            .into_iter()
            .map(|v| v.as_ref().to_string())
            .collect();
        for top in tops {
            check_distinct(top)?;
            for v in top {
                if !names.contains(v.as_ref()) {
                    if strict {
                        return Err(SimplicialError::UnknownVertex(v.as_ref().to_string()));
                    }
                    names.insert(v.as_ref().to_string());
                }
            }
        }
        let names: Vec<String> = names.into_iter().collect();
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut all = BTreeSet::new();
        for (i, _) in names.iter().enumerate() {
            all.insert(vec![i]);
        }
        for top in tops {
            let mut s: Simplex = top.iter().map(|v| index[v.as_ref()]).collect();
            s.sort_unstable();
            insert_closure(&mut all, &s);
        }
        Ok(Self::assemble(names, all))
    }

    /// Builds a complex from an explicit, supposedly complete, list of
    /// simplices and checks face closure instead of generating it.
    pub fn from_simplices<V: AsRef<str>, S: AsRef<str>>(
        vertices: impl IntoIterator<Item = V>,
        simplices: &[Vec<S>],
    ) -> Result<Self> {
        let names: BTreeSet<String> = vertices
            .into_iter()
            .map(|v| v.as_ref().to_string())
            .collect();
        let names: Vec<String> = names.into_iter().collect();
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut all = BTreeSet::new();
        for (i, _) in names.iter().enumerate() {
            all.insert(vec![i]);
        }
        for s in simplices {
            check_distinct(s)?;
            let mut idx = Vec::with_capacity(s.len());
            for v in s {
                match index.get(v.as_ref()) {
                    Some(&i) => idx.push(i),
                    None => return Err(SimplicialError::UnknownVertex(v.as_ref().to_string())),
                }
            }
            idx.sort_unstable();
            all.insert(idx);
        }
        let named = |s: &[usize]| s.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
        for s in &all {
            if s.len() < 2 {
                continue;
            }
            for f in facets(s) {
                if !all.contains(&f) {
                    return Err(SimplicialError::MissingFace {
                        simplex: named(s),
                        face: named(&f),
                    });
                }
            }
        }
        Ok(Self::assemble(names, all))
    }

    /// `all` must already be face-closed and index into `names`.
    pub(crate) fn assemble(names: Vec<String>, all: BTreeSet<Simplex>) -> Self {
        let top = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut simplices: Vec<Vec<Simplex>> = vec![Vec::new(); top];
        for s in all {
            simplices[s.len() - 1].push(s);
        }
        let lookup = simplices
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect()
            })
            .collect();
        let vertex_index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        SimplicialComplex {
            vertices: names,
            vertex_index,
            simplices,
            lookup,
        }
    }

    /// Re-checks face closure and sortedness. Complexes built through this
    /// crate always pass; the check exists for externally assembled data.
    pub fn validate(&self) -> Result<Option<usize>> {
        for level in &self.simplices {
            for s in level {
                if s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(SimplicialError::DuplicateVertexInSimplex(self.names(s)));
                }
                if s.len() > 1 {
                    for f in facets(s) {
                        if !self.contains(&f) {
                            return Err(SimplicialError::MissingFace {
                                simplex: self.names(s),
                                face: self.names(&f),
                            });
                        }
                    }
                }
            }
        }
        Ok(self.dim())
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    /// Top dimension as a signed integer, -1 for the empty complex.
    pub fn dim_signed(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    /// The `k`-simplices in lexicographic order of their index tuples.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        let k = s.len().checked_sub(1)?;
        self.lookup.get(k)?.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index_of(s).is_some()
    }

    /// Looks a simplex up by vertex names, in any order.
    pub fn find<S: AsRef<str>>(&self, names: &[S]) -> Option<Simplex> {
        let mut s = names
            .iter()
            .map(|n| self.vertex_index(n.as_ref()))
            .collect::<Option<Simplex>>()?;
        s.sort_unstable();
        self.contains(&s).then_some(s)
    }

    pub fn names(&self, s: &[usize]) -> Vec<String> {
        s.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// Simplices that are not a face of any other simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: Vec<Vec<bool>> = self
            .simplices
            .iter()
            .map(|l| vec![false; l.len()])
            .collect();
        for (k, level) in self.simplices.iter().enumerate().skip(1) {
            for s in level {
                for f in facets(s) {
                    covered[k - 1][self.lookup[k - 1][&f]] = true;
                }
            }
        }
        self.simplices
            .iter()
            .zip(&covered)
            .flat_map(|(level, cov)| {
                level
                    .iter()
                    .zip(cov)
                    .filter(|(_, &c)| !c)
                    .map(|(s, _)| s.clone())
            })
            .collect()
    }

    /// Number of top-dimensional cofaces of each ridge ((n-1)-simplex).
    pub(crate) fn ridge_coface_counts(&self) -> Vec<usize> {
        let Some(n) = self.dim() else {
            return Vec::new();
        };
        if n == 0 {
            return Vec::new();
        }
        let mut counts = vec![0; self.count(n - 1)];
        for s in self.simplices(n) {
            for f in facets(s) {
                counts[self.lookup[n - 1][&f]] += 1;
            }
        }
        counts
    }

    /// Fails with `NotPure` unless every maximal simplex has top dimension.
    pub fn check_pure(&self) -> Result<()> {
        let Some(n) = self.dim() else {
            return Ok(());
        };
        match self
            .maximal_simplices()
            .into_iter()
            .find(|s| s.len() != n + 1)
        {
            Some(s) => Err(SimplicialError::NotPure(self.names(&s))),
            None => Ok(()),
        }
    }

    /// Euler characteristic from simplex counts.
    pub fn euler(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, l)| {
                if k % 2 == 0 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }

    /// Sub-complex closure of the given simplices (indices of this complex),
    /// keeping this complex's vertex names.
    pub(crate) fn closure_of<'a>(&self, gens: impl IntoIterator<Item = &'a Simplex>) -> Self {
        let mut all = BTreeSet::new();
        for s in gens {
            insert_closure(&mut all, s);
        }
        self.relabeled_subset(&all)
    }

    /// Restricts the vertex set to those used by `all`, rewriting indices.
    fn relabeled_subset(&self, all: &BTreeSet<Simplex>) -> Self {
        let used: BTreeSet<usize> = all.iter().flatten().copied().collect();
        let remap: HashMap<usize, usize> = used
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let names = used.iter().map(|&i| self.vertices[i].clone()).collect();
        let rewritten = all
            .iter()
            .map(|s| s.iter().map(|i| remap[i]).collect())
            .collect();
        Self::assemble(names, rewritten)
    }

    /// All simplices as vertex-name lists, lowest dimension first.
    pub fn all_simplex_names(&self) -> Vec<Vec<String>> {
        self.simplices
            .iter()
            .flatten()
            .map(|s| self.names(s))
            .collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices.len())
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

/// A complex together with a subcomplex, e.g. a manifold and its boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexPair {
    total: SimplicialComplex,
    sub: SimplicialComplex,
    in_sub: Vec<Vec<bool>>,
}

impl ComplexPair {
    pub fn new(total: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        let mut in_sub: Vec<Vec<bool>> = (0..total.simplices.len())
            .map(|k| vec![false; total.count(k)])
            .collect();
        for level in &sub.simplices {
            for s in level {
                let names = sub.names(s);
                let found = total
                    .find(&names)
                    .ok_or_else(|| SimplicialError::NotASubcomplex(names.clone()))?;
                in_sub[found.len() - 1][total.index_of(&found).unwrap()] = true;
            }
        }
        Ok(ComplexPair { total, sub, in_sub })
    }

    /// The pair `(c, ∅)`.
    pub fn absolute(total: SimplicialComplex) -> Self {
        Self::new(total, SimplicialComplex::empty()).expect("empty subcomplex always fits")
    }

    /// The pair `(c, ∂c)`.
    pub fn with_boundary(total: SimplicialComplex) -> Result<Self> {
        let sub = boundary_subcomplex(&total)?;
        Self::new(total, sub)
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }

    /// Whether the `idx`-th `k`-simplex of the total complex lies in the sub.
    pub fn in_sub(&self, k: usize, idx: usize) -> bool {
        self.in_sub.get(k).is_some_and(|l| l[idx])
    }
}

fn check_distinct<S: AsRef<str>>(s: &[S]) -> Result<()> {
    let set: BTreeSet<&str> = s.iter().map(AsRef::as_ref).collect();
    if set.len() != s.len() {
        return Err(SimplicialError::DuplicateVertexInSimplex(
            s.iter().map(|v| v.as_ref().to_string()).collect(),
        ));
    }
    Ok(())
}

/// Codimension-one faces, the `i`-th omitting vertex position `i`.
pub(crate) fn facets(s: &[usize]) -> impl Iterator<Item = Simplex> + '_ {
    (0..s.len()).map(move |i| {
        let mut f = s.to_vec();
        f.remove(i);
        f
    })
}

pub(crate) fn insert_closure(all: &mut BTreeSet<Simplex>, s: &[usize]) {
    if s.is_empty() || all.contains(s) {
        return;
    }
    let k = s.len();
    for mask in 1u64..(1u64 << k) {
        let face: Simplex = (0..k)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| s[b])
            .collect();
        all.insert(face);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_tetrahedron_boundary() {
        let c = standard::boundary_of_simplex(3);
        assert_eq!(c.validate().unwrap(), Some(2));
        assert_eq!(c.f_vector(), vec![4, 6, 4]);
    }

    #[test]
    fn missing_face_is_reported() {
        let err = SimplicialComplex::from_simplices(
            ["0", "1", "2"],
            &[vec!["0", "1"], vec!["1", "2"], vec!["0", "1", "2"]],
        )
        .unwrap_err();
        assert!(matches!(err, SimplicialError::MissingFace { .. }), "{err}");
    }

    #[test]
    fn repeated_vertex_is_reported() {
        let err = SimplicialComplex::from_top_simplices(&[vec!["a", "b", "a"]]).unwrap_err();
        assert!(matches!(err, SimplicialError::DuplicateVertexInSimplex(_)));
    }

    #[test]
    fn undeclared_vertex_is_reported() {
        let err = SimplicialComplex::with_vertices(["a"], &[vec!["a", "b"]]).unwrap_err();
        assert_eq!(err, SimplicialError::UnknownVertex("b".into()));
    }

    #[test]
    fn empty_complex() {
        let c = SimplicialComplex::empty();
        assert_eq!(c.dim(), None);
        assert_eq!(c.euler(), 0);
        assert!(c.maximal_simplices().is_empty());
    }

    #[test]
    fn subcomplex_must_embed() {
        let tri = standard::simplex(2);
        let stray = SimplicialComplex::from_top_simplices(&[vec!["0", "7"]]).unwrap();
        assert!(matches!(
            ComplexPair::new(tri, stray),
            Err(SimplicialError::NotASubcomplex(_))
        ));
    }

    #[test]
    fn maximal_simplices_of_mixed_complex() {
        let c =
            SimplicialComplex::from_top_simplices(&[vec!["a", "b", "c"], vec!["c", "d"]]).unwrap();
        let maxi: Vec<_> = c.maximal_simplices().iter().map(|s| c.names(s)).collect();
        assert_eq!(maxi, vec![vec!["c", "d"], vec!["a", "b", "c"]]);
        assert!(matches!(c.check_pure(), Err(SimplicialError::NotPure(_))));
    }
}
