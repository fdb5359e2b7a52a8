//! Constructions on complexes: boundary, products, unions, cones,
//! subdivision, and the cut/glue pair used for cut-and-paste.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{
    facets, insert_closure, ComplexPair, Result, Simplex, SimplicialComplex, SimplicialError,
};

/// Subcomplex generated by the ridges that have exactly one top coface.
pub fn boundary_subcomplex(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    let Some(n) = c.dim() else {
        return Ok(SimplicialComplex::empty());
    };
    c.check_pure()?;
    if n == 0 {
        return Ok(SimplicialComplex::empty());
    }
    let counts = c.ridge_coface_counts();
    let ridges = c.simplices(n - 1);
    if let Some(i) = counts.iter().position(|&k| k > 2) {
        return Err(SimplicialError::NonManifoldRidge {
            ridge: c.names(&ridges[i]),
            cofaces: counts[i],
        });
    }
    let free = ridges
        .iter()
        .zip(&counts)
        .filter(|(_, &k)| k == 1)
        .map(|(r, _)| r);
    Ok(c.closure_of(free))
}

/// How the vertices of each simplex are linearly ordered for the staircase
/// triangulation of a product.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum VertexOrder {
    /// The complex's own (sorted) vertex order.
    #[default]
    Sorted,
    /// For a cycle graph: edges are oriented along the given cyclic sequence.
    /// Unlike `Sorted`, this order is preserved by rotating the cycle.
    Cyclic(Vec<String>),
}

impl VertexOrder {
    fn resolve(&self, c: &SimplicialComplex) -> Result<OrderFn> {
        match self {
            VertexOrder::Sorted => Ok(OrderFn::Sorted),
            VertexOrder::Cyclic(seq) => {
                let len = seq.len();
                if len < 3 {
                    return Err(SimplicialError::InvalidOrder(
                        "cycle needs 3 vertices".into(),
                    ));
                }
                if c.dim().is_some_and(|n| n > 1) {
                    return Err(SimplicialError::InvalidOrder(
                        "cyclic order applies to 1-dimensional complexes".into(),
                    ));
                }
                let mut pos = HashMap::new();
                for (i, name) in seq.iter().enumerate() {
                    let v = c.vertex_index(name).ok_or_else(|| {
                        SimplicialError::InvalidOrder(format!("{name:?} is not a vertex"))
                    })?;
                    if pos.insert(v, i).is_some() {
                        return Err(SimplicialError::InvalidOrder(format!("{name:?} repeats")));
                    }
                }
                if pos.len() != c.vertices().len() || c.count(1) != len {
                    return Err(SimplicialError::InvalidOrder(
                        "sequence does not match the cycle".into(),
                    ));
                }
                for i in 0..len {
                    if c.find(&[&seq[i], &seq[(i + 1) % len]]).is_none() {
                        return Err(SimplicialError::InvalidOrder(format!(
                            "{:?}-{:?} is not an edge",
                            seq[i],
                            seq[(i + 1) % len]
                        )));
                    }
                }
                Ok(OrderFn::Cyclic { pos, len })
            }
        }
    }
}

enum OrderFn {
    Sorted,
    Cyclic {
        pos: HashMap<usize, usize>,
        len: usize,
    },
}

impl OrderFn {
    fn order(&self, s: &[usize]) -> Vec<usize> {
        match self {
            OrderFn::Sorted => s.to_vec(),
            OrderFn::Cyclic { pos, len } => match s {
                [u, v] if (pos[u] + 1) % len != pos[v] => vec![*v, *u],
                _ => s.to_vec(),
            },
        }
    }
}

fn product_vertex(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Staircase triangulation of `|a| × |b|` using the sorted vertex orders.
pub fn product_complex(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    product_complex_ordered(a, &VertexOrder::Sorted, b, &VertexOrder::Sorted)
        .expect("sorted order is always valid")
}

/// Staircase triangulation of `|a| × |b|`. Each product of maximal simplices
/// `σ × τ` with ordered vertices `a_0..a_p`, `b_0..b_q` is split into the
/// `C(p+q, p)` simplices given by monotone lattice paths from `(a_0, b_0)` to
/// `(a_p, b_q)`. Product vertices are named `(a,b)`.
pub fn product_complex_ordered(
    a: &SimplicialComplex,
    order_a: &VertexOrder,
    b: &SimplicialComplex,
    order_b: &VertexOrder,
) -> Result<SimplicialComplex> {
    let oa = order_a.resolve(a)?;
    let ob = order_b.resolve(b)?;
    let mut tops: Vec<Vec<String>> = Vec::new();
    for sa in a.maximal_simplices() {
        let sa = oa.order(&sa);
        for sb in b.maximal_simplices() {
            let sb = ob.order(&sb);
            staircase(sa.len() - 1, sb.len() - 1, &mut |path| {
                tops.push(
                    path.iter()
                        .map(|&(i, j)| product_vertex(&a.vertices()[sa[i]], &b.vertices()[sb[j]]))
                        .collect(),
                );
            });
        }
    }
    SimplicialComplex::from_top_simplices(&tops)
}

/// Calls `emit` once per monotone lattice path from `(0,0)` to `(p,q)`.
fn staircase(p: usize, q: usize, emit: &mut impl FnMut(&[(usize, usize)])) {
    fn walk(
        p: usize,
        q: usize,
        path: &mut Vec<(usize, usize)>,
        emit: &mut impl FnMut(&[(usize, usize)]),
    ) {
        let (i, j) = *path.last().unwrap();
        if i == p && j == q {
            emit(path);
            return;
        }
        if i < p {
            path.push((i + 1, j));
            walk(p, q, path, emit);
            path.pop();
        }
        if j < q {
            path.push((i, j + 1));
            walk(p, q, path, emit);
            path.pop();
        }
    }
    walk(p, q, &mut vec![(0, 0)], emit);
}

fn relabel_tops(c: &SimplicialComplex, f: impl Fn(&str) -> String) -> Vec<Vec<String>> {
    c.maximal_simplices()
        .iter()
        .map(|s| s.iter().map(|&v| f(&c.vertices()[v])).collect())
        .collect()
}

/// Disjoint union; vertices of `a` become `1:v`, those of `b` become `2:v`.
pub fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let mut tops = relabel_tops(a, |v| format!("1:{v}"));
    tops.extend(relabel_tops(b, |v| format!("2:{v}")));
    SimplicialComplex::from_top_simplices(&tops).expect("relabeling keeps simplices valid")
}

/// Cone over `c` with the given apex name (which must not be a vertex of `c`).
pub fn cone(c: &SimplicialComplex, apex: &str) -> SimplicialComplex {
    assert!(
        c.vertex_index(apex).is_none(),
        "apex {apex:?} already a vertex"
    );
    let mut tops = relabel_tops(c, str::to_string);
    for t in &mut tops {
        t.push(apex.to_string());
    }
    if tops.is_empty() {
        tops.push(vec![apex.to_string()]);
    }
    SimplicialComplex::from_top_simplices(&tops).expect("cone of a valid complex")
}

/// Union of two cones over `c` with apices `north` and `south`.
pub fn suspension(c: &SimplicialComplex, north: &str, south: &str) -> SimplicialComplex {
    assert_ne!(north, south);
    let mut tops = relabel_tops(&cone(c, north), str::to_string);
    tops.extend(relabel_tops(&cone(c, south), str::to_string));
    SimplicialComplex::from_top_simplices(&tops).expect("suspension of a valid complex")
}

fn barycenter_name(c: &SimplicialComplex, s: &[usize]) -> String {
    format!("[{}]", c.names(s).join(","))
}

/// First barycentric subdivision. The vertex for simplex `{a,b,c}` is named
/// `[a,b,c]`, so subdividing a subcomplex yields matching names.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> SimplicialComplex {
    let mut tops: Vec<Vec<String>> = Vec::new();
    for m in c.maximal_simplices() {
        // each ordering of the vertices of m gives one maximal flag
        let mut perm = m.clone();
        permutations(&mut perm, 0, &mut |order| {
            tops.push(
                (1..=order.len())
                    .map(|k| {
                        let mut face = order[..k].to_vec();
                        face.sort_unstable();
                        barycenter_name(c, &face)
                    })
                    .collect(),
            );
        });
    }
    SimplicialComplex::from_top_simplices(&tops).expect("flags have distinct members")
}

fn permutations(v: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        emit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, emit);
        v.swap(k, i);
    }
}

pub fn barycentric_subdivision_pair(p: &ComplexPair) -> ComplexPair {
    ComplexPair::new(
        barycentric_subdivision(p.total()),
        barycentric_subdivision(p.sub()),
    )
    .expect("subdivision preserves inclusion")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    One,
    Two,
}

/// Which side of a cut every top simplex goes to. Simplices listed in
/// `side_one` (by vertex names) go to side one, all others to side two.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SideAssignment {
    side_one: BTreeSet<Vec<String>>,
}

impl SideAssignment {
    pub fn from_side_one<S: AsRef<str>>(simplices: &[Vec<S>]) -> Self {
        let side_one = simplices
            .iter()
            .map(|s| {
                let mut names: Vec<String> = s.iter().map(|v| v.as_ref().to_string()).collect();
                names.sort();
                names
            })
            .collect();
        SideAssignment { side_one }
    }

    pub fn from_fn(c: &SimplicialComplex, side: impl Fn(&[String]) -> Side) -> Self {
        let n = c.dim().unwrap_or(0);
        let side_one = c
            .simplices(n)
            .iter()
            .map(|s| c.names(s))
            .filter(|names| side(names) == Side::One)
            .map(|mut names| {
                names.sort();
                names
            })
            .collect();
        SideAssignment { side_one }
    }

    pub fn side_one(&self) -> impl Iterator<Item = &Vec<String>> {
        self.side_one.iter()
    }

    fn side_of(&self, names: &[String]) -> Side {
        let mut key = names.to_vec();
        key.sort();
        if self.side_one.contains(&key) {
            Side::One
        } else {
            Side::Two
        }
    }
}

/// The two halves of a cut manifold and their common interface.
#[derive(Clone, Debug)]
pub struct CutResult {
    pub first: ComplexPair,
    pub second: ComplexPair,
    pub interface: SimplicialComplex,
}

/// Cuts a closed pure `n`-complex along the `(n-1)`-simplices whose two
/// cofaces lie on different sides.
pub fn cut(m: &SimplicialComplex, assignment: &SideAssignment) -> Result<CutResult> {
    let Some(n) = m.dim().filter(|&n| n > 0) else {
        return Err(SimplicialError::EmptySide(2));
    };
    m.check_pure()?;
    for listed in assignment.side_one() {
        if m.find(listed).filter(|s| s.len() == n + 1).is_none() {
            return Err(SimplicialError::NotASubcomplex(listed.clone()));
        }
    }
    let counts = m.ridge_coface_counts();
    for (r, &k) in m.simplices(n - 1).iter().zip(&counts) {
        match k {
            2 => {}
            1 => return Err(SimplicialError::NotClosed(m.names(r))),
            _ => {
                return Err(SimplicialError::NonManifoldRidge {
                    ridge: m.names(r),
                    cofaces: k,
                })
            }
        }
    }

    let tops = m.simplices(n);
    let sides: Vec<Side> = tops
        .iter()
        .map(|s| assignment.side_of(&m.names(s)))
        .collect();
    let (one, two): (Vec<&Simplex>, Vec<&Simplex>) = {
        let mut one = Vec::new();
        let mut two = Vec::new();
        for (s, side) in tops.iter().zip(&sides) {
            match side {
                Side::One => one.push(s),
                Side::Two => two.push(s),
            }
        }
        (one, two)
    };
    if one.is_empty() {
        return Err(SimplicialError::EmptySide(1));
    }
    if two.is_empty() {
        return Err(SimplicialError::EmptySide(2));
    }

    let mut ridge_sides: HashMap<Simplex, Vec<Side>> = HashMap::new();
    for (s, &side) in tops.iter().zip(&sides) {
        for f in facets(s) {
            ridge_sides.entry(f).or_default().push(side);
        }
    }
    let interface_ridges: Vec<Simplex> = m
        .simplices(n - 1)
        .iter()
        .filter(|r| {
            let s = &ridge_sides[*r];
            s[0] != s[1]
        })
        .cloned()
        .collect();

    let m1 = m.closure_of(one);
    let m2 = m.closure_of(two);
    let interface = m.closure_of(&interface_ridges);

    // the halves may only meet along the interface
    let mut in_interface = BTreeSet::new();
    for s in &interface_ridges {
        insert_closure(&mut in_interface, s);
    }
    for level in 0..m1.f_vector().len() {
        for s in m1.simplices(level) {
            let names = m1.names(s);
            if m2.find(&names).is_some() {
                let orig = m.find(&names).expect("half is a subcomplex");
                if !in_interface.contains(&orig) {
                    return Err(SimplicialError::InterfaceNotSeparating(names));
                }
            }
        }
    }

    if n >= 2 {
        let counts = interface.ridge_coface_counts();
        if let Some(i) = counts.iter().position(|&k| k != 2) {
            return Err(SimplicialError::NonManifoldInterface(
                interface.names(&interface.simplices(n - 2)[i]),
            ));
        }
    }

    Ok(CutResult {
        first: ComplexPair::new(m1, interface.clone())?,
        second: ComplexPair::new(m2, interface.clone())?,
        interface,
    })
}

/// A bijection between two vertex sets, given by vertex names.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMap {
    pairs: BTreeMap<String, String>,
}

impl VertexMap {
    pub fn new(pairs: BTreeMap<String, String>) -> Self {
        VertexMap { pairs }
    }

    pub fn identity(c: &SimplicialComplex) -> Self {
        Self::from_fn(c, str::to_string)
    }

    pub fn from_fn(c: &SimplicialComplex, f: impl Fn(&str) -> String) -> Self {
        VertexMap {
            pairs: c.vertices().iter().map(|v| (v.clone(), f(v))).collect(),
        }
    }

    pub fn get(&self, v: &str) -> Option<&str> {
        self.pairs.get(v).map(String::as_str)
    }

    pub fn pairs(&self) -> &BTreeMap<String, String> {
        &self.pairs
    }

    /// Checks that this map is a simplicial isomorphism `from → to`.
    pub fn check_isomorphism(
        &self,
        from: &SimplicialComplex,
        to: &SimplicialComplex,
    ) -> Result<()> {
        let fail = |msg: String| Err(SimplicialError::NotAnIsomorphism(msg));
        let domain: BTreeSet<&str> = self.pairs.keys().map(String::as_str).collect();
        let source: BTreeSet<&str> = from.vertices().iter().map(String::as_str).collect();
        if domain != source {
            return fail("domain differs from the source vertex set".into());
        }
        let image: BTreeSet<&str> = self.pairs.values().map(String::as_str).collect();
        if image.len() != self.pairs.len() {
            return fail("two vertices share an image".into());
        }
        let target: BTreeSet<&str> = to.vertices().iter().map(String::as_str).collect();
        if image != target {
            return fail("image differs from the target vertex set".into());
        }
        if from.f_vector() != to.f_vector() {
            return fail("f-vectors differ".into());
        }
        for names in from.all_simplex_names() {
            let mapped: Vec<&str> = names.iter().map(|v| self.pairs[v].as_str()).collect();
            if to.find(&mapped).is_none() {
                return fail(format!("{names:?} maps to the non-simplex {mapped:?}"));
            }
        }
        Ok(())
    }
}

/// Glues `first.total` to `second.total` by identifying each vertex `x` of
/// `first.sub` with `phi(x)` in `second.sub`. Vertices of the second half
/// are named `2:v`, the remaining vertices of the first half `1:v`.
pub fn glue(
    first: &ComplexPair,
    second: &ComplexPair,
    phi: &VertexMap,
) -> Result<SimplicialComplex> {
    phi.check_isomorphism(first.sub(), second.sub())?;
    let rename_first = |v: &str| match phi.get(v) {
        Some(w) => format!("2:{w}"),
        None => format!("1:{v}"),
    };
    let mut simplices: BTreeSet<Vec<String>> = BTreeSet::new();
    for names in second.total().all_simplex_names() {
        let mut s: Vec<String> = names.iter().map(|v| format!("2:{v}")).collect();
        s.sort();
        simplices.insert(s);
    }
    for names in first.total().all_simplex_names() {
        let on_sub = first.sub().find(&names).is_some();
        let mut s: Vec<String> = names.iter().map(|v| rename_first(v)).collect();
        s.sort();
        if !simplices.insert(s) && !on_sub {
            return Err(SimplicialError::IdentificationCollision(names));
        }
    }
    let vertices: BTreeSet<&String> = simplices.iter().flatten().collect();
    let all: Vec<Vec<String>> = simplices.iter().cloned().collect();
    SimplicialComplex::from_simplices(vertices, &all)
}
