//! Triangulated manifolds and circle data for the shipped scenarios.
//!
//! Circle factors use the cyclic edge orientation so that rotating the circle
//! is a simplicial automorphism of the product triangulation.

use serde_json::Value;

use super::{CutFile, Expected, ManifoldSpec, ScenarioFile, SubSpec};
use crate::circleindex::{LoopFile, LoopGenerator, MatrixLoop, Turns};
use crate::simplicial::io::ComplexFile;
use crate::simplicial::{
    cone, product_complex, product_complex_ordered, standard, suspension, ComplexPair, Side,
    SideAssignment, SimplicialComplex, VertexMap, VertexOrder,
};

/// `S⁵ = ∂Δ⁶`.
pub fn s5() -> SimplicialComplex {
    standard::boundary_of_simplex(6)
}

/// `S¹ × S⁴` as the staircase product `cycle₃ × ∂Δ⁵` (sorted orders).
pub fn s1_x_s4() -> SimplicialComplex {
    product_complex(&standard::cycle(3), &standard::boundary_of_simplex(5))
}

/// `(S¹ × D⁴, S¹ × S³)` with `D⁴` the cone over `∂Δ⁴` (apex `c`).
pub fn s1_x_d4() -> ComplexPair {
    let disk = cone(&standard::boundary_of_simplex(4), "c");
    let total = product_complex_ordered(
        &standard::cycle(3),
        &standard::cycle_order(3),
        &disk,
        &VertexOrder::Sorted,
    )
    .expect("cyclic order fits cycle(3)");
    ComplexPair::with_boundary(total).expect("product with a disk is a manifold with boundary")
}

/// `S¹ × S⁴` with `S⁴` the suspension of `∂Δ⁴` (apices `n`, `s`), ready to be
/// cut along `S¹ × ∂Δ⁴` into two copies of `S¹ × D⁴`.
pub struct SplitS1xS4 {
    pub manifold: SimplicialComplex,
    pub sides: SideAssignment,
    /// Identity, rotation of the circle by one and two steps, and the
    /// reflection `(c, s) ↦ (-c, 4 - s)`.
    pub automorphisms: Vec<VertexMap>,
}

/// Splits a product vertex name `(a,b)` into its factors.
pub fn product_factors(name: &str) -> Option<(&str, &str)> {
    let inner = name.strip_prefix('(')?.strip_suffix(')')?;
    inner.split_once(',')
}

pub fn s1_x_s4_split() -> SplitS1xS4 {
    let sphere = suspension(&standard::boundary_of_simplex(4), "n", "s");
    let manifold = product_complex_ordered(
        &standard::cycle(3),
        &standard::cycle_order(3),
        &sphere,
        &VertexOrder::Sorted,
    )
    .expect("cyclic order fits cycle(3)");
    let sides = SideAssignment::from_fn(&manifold, |s| {
        let north = s
            .iter()
            .any(|v| product_factors(v).is_some_and(|(_, b)| b == "n"));
        if north {
            Side::One
        } else {
            Side::Two
        }
    });
    let interface = product_complex_ordered(
        &standard::cycle(3),
        &standard::cycle_order(3),
        &standard::boundary_of_simplex(4),
        &VertexOrder::Sorted,
    )
    .expect("cyclic order fits cycle(3)");
    let remap = |f: fn(i64, i64) -> (i64, i64)| {
        VertexMap::from_fn(&interface, move |v| {
            let (a, b) = product_factors(v).expect("product vertex");
            let (a, b) = f(a.parse().unwrap(), b.parse().unwrap());
            format!("({a},{b})")
        })
    };
    let automorphisms = vec![
        VertexMap::identity(&interface),
        remap(|c, s| ((c + 1) % 3, s)),
        remap(|c, s| ((c + 2) % 3, s)),
        remap(|c, s| ((3 - c) % 3, 4 - s)),
    ];
    SplitS1xS4 {
        manifold,
        sides,
        automorphisms,
    }
}

/// `cycle₃ × ∂Δ⁵` split into the part over the edge `{0,1}` and the rest:
/// the interface is two disjoint 4-spheres, so `χ(N) = 4`.
pub fn s1_x_s4_fiber_split() -> (SimplicialComplex, SideAssignment) {
    let m = s1_x_s4();
    let sides = SideAssignment::from_fn(&m, |s| {
        let over_01 = s
            .iter()
            .all(|v| product_factors(v).is_some_and(|(a, _)| a == "0" || a == "1"));
        if over_01 {
            Side::One
        } else {
            Side::Two
        }
    });
    (m, sides)
}

pub fn constant_loop(diag: &[f64], count: usize) -> MatrixLoop {
    MatrixLoop::generated(LoopGenerator::Constant {
        diag: diag.to_vec(),
        count,
    })
    .expect("valid constant generator")
}

/// Rotation family in the `(0,1)` plane of `diag(-1, 1, …, 1)`: trivial for
/// integer `turns`, Möbius for half-integer ones.
pub fn rotating_loop(m: usize, turns: Turns, count: usize) -> MatrixLoop {
    let mut diag = vec![1.0; m];
    diag[0] = -1.0;
    MatrixLoop::generated(LoopGenerator::ConjugatedDiag {
        diag,
        plane: [0, 1],
        turns,
        count,
    })
    .expect("valid rotation generator")
}

pub fn mobius_loop(m: usize) -> MatrixLoop {
    rotating_loop(m, Turns::new(1, 2), 16)
}

/// Inner block for boundary loops: constant `diag(1, 1, 1)`.
pub fn boundary_loop(sign: i8) -> MatrixLoop {
    MatrixLoop::generated_boundary(
        LoopGenerator::Constant {
            diag: vec![1.0; 3],
            count: 8,
        },
        sign,
    )
    .expect("valid boundary generator")
}

/// `Δ⁵` with its boundary: `χ(∂Δ⁵) = 2`.
pub fn disk5_pair() -> ComplexPair {
    ComplexPair::with_boundary(standard::simplex(5)).expect("simplex is a manifold with boundary")
}

fn file_manifold(file: &str, sub: Option<SubSpec>) -> ManifoldSpec {
    ManifoldSpec {
        file: Some(file.into()),
        sub,
        inline: ComplexFile::default(),
    }
}

fn scenario_file(
    name: &str,
    manifold: ManifoldSpec,
    circles: &[MatrixLoop],
    expected: Expected,
    cut: Option<CutFile>,
) -> Value {
    let f = ScenarioFile {
        name: name.into(),
        dimension: Some(5),
        manifold,
        circles: circles.iter().map(LoopFile::from).collect(),
        expected,
        cut,
    };
    serde_json::to_value(f).expect("scenario serializes")
}

fn complex_value(c: &SimplicialComplex) -> Value {
    serde_json::to_value(ComplexFile::from_complex(c)).expect("complex serializes")
}

/// The shipped corpus as `(relative path, JSON)` pairs: complexes at the
/// top level, loops under `loops/`, scenarios under `scenarios/`.
pub fn corpus() -> Vec<(String, Value)> {
    let mut out: Vec<(String, Value)> = Vec::new();
    let mut put = |path: &str, v: Value| out.push((path.to_string(), v));

    put("s5.json", complex_value(&s5()));
    put("s1xs4.json", complex_value(&s1_x_s4()));
    put("s1xd4.json", complex_value(s1_x_d4().total()));
    let split = s1_x_s4_split();
    put("s1xs4_split.json", complex_value(&split.manifold));
    put("d5.json", complex_value(disk5_pair().total()));
    // the triangle [0,1,2] is listed without its edge [1,2]
    put(
        "broken.json",
        serde_json::json!({
            "vertices": [0, 1, 2],
            "top_simplices": [[0, 1, 2]],
            "simplices": [[0], [1], [2], [0, 1], [0, 2], [0, 1, 2]],
        }),
    );

    let constant = constant_loop(&[1.0; 4], 8);
    let mobius = mobius_loop(4);
    let loop_value = |l: &MatrixLoop| serde_json::to_value(l).expect("loop serializes");
    put("loops/constant.json", loop_value(&constant));
    put("loops/half_turn.json", loop_value(&mobius));
    put(
        "loops/full_turn.json",
        loop_value(&rotating_loop(4, Turns::new(1, 1), 16)),
    );
    put(
        "loops/half_turn_coarse.json",
        loop_value(&rotating_loop(4, Turns::new(1, 2), 2)),
    );
    put("loops/boundary.json", loop_value(&boundary_loop(-1)));

    let s1xd4 = || file_manifold("../s1xd4.json", Some(SubSpec::Boundary));
    let rel = |k, s| Expected {
        kappa_relative: Some(k),
        sum_ind2: Some(s),
        ..Default::default()
    };
    let abs = |k, s| Expected {
        kappa: Some(k),
        sum_ind2: Some(s),
        ..Default::default()
    };
    put(
        "scenarios/s1xd4.json",
        scenario_file(
            "s1xd4",
            s1xd4(),
            std::slice::from_ref(&constant),
            rel(1, 1),
            None,
        ),
    );
    put(
        "scenarios/s1xd4_two_circles.json",
        scenario_file(
            "s1xd4_two_circles",
            s1xd4(),
            &[mobius.clone(), constant.clone()],
            rel(1, 1),
            None,
        ),
    );
    put(
        "scenarios/s1xd4_boundary_circle.json",
        scenario_file(
            "s1xd4_boundary_circle",
            s1xd4(),
            &[constant.clone(), boundary_loop(-1)],
            rel(1, 1),
            None,
        ),
    );
    put(
        "scenarios/s5.json",
        scenario_file(
            "s5",
            file_manifold("../s5.json", None),
            std::slice::from_ref(&constant),
            abs(1, 1),
            None,
        ),
    );
    put(
        "scenarios/s1xs4.json",
        scenario_file(
            "s1xs4",
            file_manifold("../s1xs4.json", None),
            &[mobius.clone(), mobius.clone()],
            abs(0, 0),
            None,
        ),
    );
    put(
        "scenarios/s1xs4_cut.json",
        scenario_file(
            "s1xs4_cut",
            file_manifold("../s1xs4_split.json", None),
            &[mobius.clone(), mobius.clone()],
            abs(0, 0),
            Some(CutFile {
                side_1: split.sides.side_one().cloned().collect(),
                automorphisms: split.automorphisms.clone(),
            }),
        ),
    );
    let (_, fiber_sides) = s1_x_s4_fiber_split();
    put(
        "scenarios/s1xs4_fiber_cut.json",
        scenario_file(
            "s1xs4_fiber_cut",
            file_manifold("../s1xs4.json", None),
            &[],
            Expected::default(),
            Some(CutFile {
                side_1: fiber_sides.side_one().cloned().collect(),
                automorphisms: vec![VertexMap::identity(&s1_x_s4())],
            }),
        ),
    );
    put(
        "scenarios/bad_boundary_euler.json",
        scenario_file(
            "bad_boundary_euler",
            file_manifold("../d5.json", Some(SubSpec::Boundary)),
            std::slice::from_ref(&constant),
            Expected::default(),
            None,
        ),
    );
    out
}
