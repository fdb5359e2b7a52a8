use serde::Serialize;

use super::{HarnessError, Precondition, Scenario};
use crate::circleindex::{ind2, CircleIndexResult, Location};
use crate::simplicial::{
    betti, boundary_subcomplex, cut, euler, euler_relative, glue, kappa, kappa_relative,
    orientable, relative_betti, ComplexPair, SideAssignment, SimplicialComplex, VertexMap,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Counting,
    Closed,
    Cutpaste,
    EulerLes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PreconditionViolated,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircleReport {
    pub index: usize,
    pub location: &'static str,
    pub counted: bool,
    #[serde(flatten)]
    pub result: CircleIndexResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Twist {
    pub automorphism: usize,
    pub kappa: u8,
    pub betti: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutPasteDetails {
    pub interface_euler: i64,
    pub kappa_first_relative: u8,
    pub kappa_second_relative: u8,
    /// `κ(M₁,∂M₁) + κ(M₂,∂M₂) mod 2`.
    pub decomposition: u8,
    pub twists: Vec<Twist>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerDetails {
    pub euler_relative: i64,
    pub euler_total: i64,
    pub euler_sub: i64,
    /// Alternating sum of the relative Betti numbers.
    pub betti_relative_sum: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenario: Option<String>,
    pub lhs: i64,
    pub rhs: i64,
    pub status: Status,
    pub per_circle: Vec<CircleReport>,
    pub notes: Vec<String>,
    /// Mismatches against the manifest's expected values. These do not
    /// affect `status`.
    pub fixture_errors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutpaste: Option<CutPasteDetails>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerDetails>,
}

impl VerificationReport {
    fn new(mode: Mode, scenario: Option<&str>, lhs: i64, rhs: i64) -> Self {
        VerificationReport {
            mode,
            scenario: scenario.map(str::to_string),
            lhs,
            rhs,
            status: if lhs == rhs {
                Status::Pass
            } else {
                Status::Fail
            },
            per_circle: Vec::new(),
            notes: Vec::new(),
            fixture_errors: Vec::new(),
            cutpaste: None,
            euler: None,
        }
    }

    /// Report for a verifier that refused its input.
    pub fn precondition_violated(
        mode: Mode,
        scenario: Option<&str>,
        reason: &HarnessError,
    ) -> Self {
        let mut r = Self::new(mode, scenario, 0, 0);
        r.status = Status::PreconditionViolated;
        r.notes.push(reason.to_string());
        r
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn expect(&mut self, what: &str, expected: Option<u8>, computed: i64) {
        if let Some(e) = expected {
            if i64::from(e) != computed {
                self.fixture_errors
                    .push(format!("expected {what} = {e}, computed {computed}"));
            }
        }
    }
}

fn require_theorem_dimension(c: &SimplicialComplex) -> Result<usize, HarnessError> {
    let n = c.dim().unwrap_or(0);
    if n % 4 != 1 {
        return Err(Precondition::DimensionNot4q1(c.dim_signed()).into());
    }
    if !orientable(c)? {
        return Err(Precondition::NotOrientable.into());
    }
    Ok(n)
}

fn require_zero_euler(c: &SimplicialComplex, what: &str) -> Result<(), HarnessError> {
    let chi = euler(c);
    if chi != 0 {
        return Err(Precondition::EulerPreconditionViolated {
            complex: what.into(),
            euler: chi,
        }
        .into());
    }
    Ok(())
}

fn require_closed(c: &SimplicialComplex) -> Result<(), HarnessError> {
    let boundary = boundary_subcomplex(c)?;
    if !boundary.is_empty() {
        return Err(Precondition::NotClosed.into());
    }
    Ok(())
}

fn circle_reports(s: &Scenario, n: usize) -> Result<Vec<CircleReport>, HarnessError> {
    let mut out = Vec::with_capacity(s.circles.len());
    for (index, l) in s.circles.iter().enumerate() {
        if l.dim() + 1 != n {
            return Err(Precondition::CircleDimension {
                circle: index,
                found: l.dim(),
                expected: n - 1,
            }
            .into());
        }
        let result = ind2(l)?;
        let interior = l.location() == Location::Interior;
        out.push(CircleReport {
            index,
            location: if interior { "interior" } else { "boundary" },
            counted: interior,
            result,
        });
    }
    Ok(out)
}

fn sum_mod2<'a>(circles: impl Iterator<Item = &'a CircleReport>) -> i64 {
    circles.map(|c| i64::from(c.result.ind2)).sum::<i64>() % 2
}

/// Counting formula for a manifold with boundary: the relative
/// semi-characteristic equals the number of interior circles with trivial
/// kernel bundle, mod 2. Boundary circles are reported but not counted.
pub fn verify_counting(s: &Scenario) -> Result<VerificationReport, HarnessError> {
    let n = require_theorem_dimension(s.manifold.total())?;
    require_zero_euler(s.manifold.sub(), "boundary")?;
    let circles = circle_reports(s, n)?;
    let lhs = i64::from(kappa_relative(&s.manifold));
    let rhs = sum_mod2(circles.iter().filter(|c| c.counted));
    let mut r = VerificationReport::new(Mode::Counting, Some(&s.name), lhs, rhs);
    let excluded = circles.iter().filter(|c| !c.counted).count();
    if excluded > 0 {
        r.notes.push(format!(
            "{excluded} boundary circle(s) computed but not counted"
        ));
    }
    r.expect("kappa_relative", s.expected.kappa_relative, lhs);
    r.expect("sum_ind2", s.expected.sum_ind2, rhs);
    r.per_circle = circles;
    Ok(r)
}

/// Closed case: `κ(M)` against the sum over all circles.
pub fn verify_closed(s: &Scenario) -> Result<VerificationReport, HarnessError> {
    if !s.manifold.sub().is_empty() {
        return Err(Precondition::NotClosed.into());
    }
    let n = require_theorem_dimension(s.manifold.total())?;
    require_closed(s.manifold.total())?;
    let circles = circle_reports(s, n)?;
    let lhs = i64::from(kappa(s.manifold.total()));
    let rhs = sum_mod2(circles.iter());
    let mut r = VerificationReport::new(Mode::Closed, Some(&s.name), lhs, rhs);
    r.expect("kappa", s.expected.kappa, lhs);
    r.expect("sum_ind2", s.expected.sum_ind2, rhs);
    r.per_circle = circles;
    Ok(r)
}

/// Cut-and-paste invariance for a single gluing map.
pub fn verify_cutpaste(
    m: &SimplicialComplex,
    sides: &SideAssignment,
    phi: &VertexMap,
) -> Result<VerificationReport, HarnessError> {
    verify_cutpaste_all(m, sides, std::slice::from_ref(phi))
}

/// Cuts `m`, reglues under every map in `phis`, and compares each result
/// with `κ(m)`. Passes when every regluing and the relative decomposition
/// agree with `κ(m)`; `rhs` is the value of the first regluing.
pub fn verify_cutpaste_all(
    m: &SimplicialComplex,
    sides: &SideAssignment,
    phis: &[VertexMap],
) -> Result<VerificationReport, HarnessError> {
    if phis.is_empty() {
        return Err(HarnessError::Validation(
            "no gluing automorphism supplied".into(),
        ));
    }
    require_theorem_dimension(m)?;
    require_closed(m)?;
    let pieces = cut(m, sides)?;
    require_zero_euler(&pieces.interface, "interface")?;

    let lhs = kappa(m);
    let mut twists = Vec::with_capacity(phis.len());
    for (automorphism, phi) in phis.iter().enumerate() {
        let glued = glue(&pieces.first, &pieces.second, phi)?;
        let b = betti(&glued);
        let k = (b.iter().step_by(2).sum::<usize>() % 2) as u8;
        twists.push(Twist {
            automorphism,
            kappa: k,
            betti: b,
        });
    }
    let k1 = kappa_relative(&pieces.first);
    let k2 = kappa_relative(&pieces.second);
    let details = CutPasteDetails {
        interface_euler: euler(&pieces.interface),
        kappa_first_relative: k1,
        kappa_second_relative: k2,
        decomposition: (k1 + k2) % 2,
        twists,
    };

    let mut r = VerificationReport::new(
        Mode::Cutpaste,
        None,
        i64::from(lhs),
        i64::from(details.twists[0].kappa),
    );
    let disagreeing: Vec<usize> = details
        .twists
        .iter()
        .filter(|t| t.kappa != lhs)
        .map(|t| t.automorphism)
        .collect();
    if !disagreeing.is_empty() {
        r.status = Status::Fail;
        r.notes.push(format!(
            "regluing under automorphisms {disagreeing:?} changes kappa"
        ));
    }
    if details.decomposition != lhs {
        r.status = Status::Fail;
        r.notes.push(format!(
            "kappa(M1,dM1) + kappa(M2,dM2) = {} differs from kappa(M) = {lhs}",
            details.decomposition
        ));
    }
    r.cutpaste = Some(details);
    Ok(r)
}

/// Runs [`verify_cutpaste_all`] on the scenario's cut section.
pub fn verify_cutpaste_scenario(s: &Scenario) -> Result<VerificationReport, HarnessError> {
    if !s.manifold.sub().is_empty() {
        return Err(Precondition::NotClosed.into());
    }
    let spec = s
        .cut
        .as_ref()
        .ok_or_else(|| HarnessError::Validation("scenario has no cut section".into()))?;
    let mut r = verify_cutpaste_all(s.manifold.total(), &spec.sides, &spec.automorphisms)?;
    r.scenario = Some(s.name.clone());
    r.expect("kappa", s.expected.kappa, r.lhs);
    Ok(r)
}

/// `χ(M,∂M) − χ(M) + χ(∂M) = 0`, with the relative Euler characteristic
/// from simplex counts cross-checked against the relative Betti numbers.
pub fn euler_les_check(p: &ComplexPair) -> VerificationReport {
    let rel = euler_relative(p);
    let total = euler(p.total());
    let sub = euler(p.sub());
    let betti_sum: i64 = relative_betti(p)
        .iter()
        .enumerate()
        .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    let mut r = VerificationReport::new(Mode::EulerLes, None, rel - total + sub, 0);
    if betti_sum != rel {
        r.status = Status::Fail;
        r.notes.push(format!(
            "relative Betti numbers sum to {betti_sum}, simplex count gives {rel}"
        ));
    }
    r.euler = Some(EulerDetails {
        euler_relative: rel,
        euler_total: total,
        euler_sub: sub,
        betti_relative_sum: betti_sum,
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circleindex::{LoopGenerator, MatrixLoop};
    use crate::harness::fixtures;
    use crate::simplicial::standard;

    #[test]
    fn euler_les_on_simplex_pair() {
        let p = ComplexPair::with_boundary(standard::simplex(3)).unwrap();
        let r = euler_les_check(&p);
        let e = r.euler.clone().unwrap();
        assert_eq!((e.euler_relative, e.euler_total, e.euler_sub), (-1, 1, 2));
        assert!(r.passed());
    }

    #[test]
    fn euler_les_absolute_pair() {
        let p = ComplexPair::absolute(standard::projective_plane());
        assert!(euler_les_check(&p).passed());
    }

    #[test]
    fn closed_s5_with_constant_circle() {
        let s = Scenario::new(
            "s5",
            ComplexPair::absolute(fixtures::s5()),
            vec![fixtures::constant_loop(&[1.0; 4], 8)],
        )
        .unwrap();
        let r = verify_closed(&s).unwrap();
        assert_eq!((r.lhs, r.rhs), (1, 1));
        assert!(r.passed());
    }

    #[test]
    fn closed_verifier_refuses_pairs() {
        let s = Scenario::new("d", fixtures::s1_x_d4(), vec![]).unwrap();
        assert!(matches!(
            verify_closed(&s),
            Err(HarnessError::Precondition(Precondition::NotClosed))
        ));
    }

    #[test]
    fn wrong_dimension_is_refused() {
        let s = Scenario::new(
            "s2",
            ComplexPair::absolute(standard::boundary_of_simplex(3)),
            vec![],
        )
        .unwrap();
        assert!(matches!(
            verify_closed(&s),
            Err(HarnessError::Precondition(Precondition::DimensionNot4q1(2)))
        ));
    }

    #[test]
    fn circle_of_wrong_rank_is_refused() {
        let s = Scenario::new(
            "s5",
            ComplexPair::absolute(fixtures::s5()),
            vec![fixtures::constant_loop(&[1.0; 3], 8)],
        )
        .unwrap();
        assert!(matches!(
            verify_closed(&s),
            Err(HarnessError::Precondition(
                Precondition::CircleDimension { .. }
            ))
        ));
    }

    #[test]
    fn counting_excludes_boundary_circles() {
        let inner = LoopGenerator::Constant {
            diag: vec![1.0, 1.0, 1.0],
            count: 8,
        };
        let boundary = MatrixLoop::generated_boundary(inner, -1).unwrap();
        let base = vec![fixtures::constant_loop(&[1.0; 4], 8)];
        let mut with_boundary = base.clone();
        with_boundary.push(boundary);
        let a = verify_counting(&Scenario::new("a", fixtures::s1_x_d4(), base).unwrap()).unwrap();
        let b = verify_counting(&Scenario::new("b", fixtures::s1_x_d4(), with_boundary).unwrap())
            .unwrap();
        assert_eq!((a.lhs, a.rhs), (1, 1));
        assert_eq!(b.rhs, a.rhs);
        assert_eq!(b.per_circle.len(), 2);
        assert!(!b.per_circle[1].counted);
        assert!(a.passed() && b.passed());
    }

    #[test]
    fn wrong_circle_data_fails_the_theorem() {
        // a Möbius circle alone contradicts κ(S¹×D⁴, ∂) = 1
        let s = Scenario::new("bad", fixtures::s1_x_d4(), vec![fixtures::mobius_loop(4)]).unwrap();
        let r = verify_counting(&s).unwrap();
        assert_eq!((r.lhs, r.rhs), (1, 0));
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn fixture_mismatch_is_separate_from_status() {
        let s = Scenario::new(
            "s5",
            ComplexPair::absolute(fixtures::s5()),
            vec![fixtures::constant_loop(&[1.0; 4], 8)],
        )
        .unwrap()
        .with_expected(crate::harness::Expected {
            kappa: Some(0),
            ..Default::default()
        });
        let r = verify_closed(&s).unwrap();
        assert!(r.passed());
        assert_eq!(r.fixture_errors.len(), 1);
    }

    #[test]
    fn cutpaste_on_split_s1xs4() {
        let f = fixtures::s1_x_s4_split();
        let r = verify_cutpaste_all(&f.manifold, &f.sides, &f.automorphisms).unwrap();
        assert!(r.passed(), "{r:?}");
        let d = r.cutpaste.unwrap();
        assert_eq!((d.kappa_first_relative, d.kappa_second_relative), (1, 1));
        assert!(d.twists.iter().all(|t| t.kappa == 0));
        assert_eq!(d.twists.len(), 4);
    }

    #[test]
    fn cut_along_two_spheres_is_refused() {
        let (m, sides) = fixtures::s1_x_s4_fiber_split();
        let phi = VertexMap::identity(&m);
        match verify_cutpaste(&m, &sides, &phi) {
            Err(HarnessError::Precondition(Precondition::EulerPreconditionViolated {
                euler,
                ..
            })) => assert_eq!(euler, 4),
            other => panic!("{other:?}"),
        }
    }
}
