//! Scenario manifests.
//!
//! ```json
//! {
//!   "name": "s1xd4",
//!   "manifold": {"file": "../s1xd4.json", "sub": "boundary"},
//!   "circles": [{"location": "interior", "generator": {...}}],
//!   "expected": {"kappa_relative": 1, "sum_ind2": 1},
//!   "cut": {"side_1": [[...], ...], "automorphisms": [{"v": "w", ...}, ...]}
//! }
//! ```
//!
//! The manifold is either inline (the complex file fields) or a `file`
//! reference resolved against the scenario's directory. The subcomplex comes
//! from `sub_top_simplices` or from `"sub": "boundary"`.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{HarnessError, Precondition};
use crate::circleindex::{LoopFile, MatrixLoop};
use crate::simplicial::io::{read_complex_file, ComplexFile, FormatError};
use crate::simplicial::{
    boundary_subcomplex, euler, ComplexPair, SideAssignment, SimplicialComplex, VertexMap,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubSpec {
    Boundary,
    None,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ManifoldSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub: Option<SubSpec>,
    #[serde(flatten)]
    pub inline: ComplexFile,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa_relative: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sum_ind2: Option<u8>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CutFile {
    pub side_1: Vec<Vec<String>>,
    #[serde(default)]
    pub automorphisms: Vec<VertexMap>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScenarioFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    pub manifold: ManifoldSpec,
    #[serde(default)]
    pub circles: Vec<LoopFile>,
    #[serde(default)]
    pub expected: Expected,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut: Option<CutFile>,
}

#[derive(Clone, Debug)]
pub struct CutSpec {
    pub sides: SideAssignment,
    pub automorphisms: Vec<VertexMap>,
}

/// A triangulated manifold (with its boundary as subcomplex, possibly empty)
/// together with the singular circles of a transverse section.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub dimension: usize,
    pub manifold: ComplexPair,
    pub circles: Vec<MatrixLoop>,
    pub expected: Expected,
    pub cut: Option<CutSpec>,
}

impl Scenario {
    /// Builds a scenario, checking `χ(sub) = 0`.
    pub fn new(
        name: impl Into<String>,
        manifold: ComplexPair,
        circles: Vec<MatrixLoop>,
    ) -> Result<Self, HarnessError> {
        let chi = euler(manifold.sub());
        if chi != 0 {
            return Err(Precondition::EulerPreconditionViolated {
                complex: "boundary".into(),
                euler: chi,
            }
            .into());
        }
        Ok(Scenario {
            name: name.into(),
            dimension: manifold.total().dim().unwrap_or(0),
            manifold,
            circles,
            expected: Expected::default(),
            cut: None,
        })
    }

    pub fn with_expected(mut self, expected: Expected) -> Self {
        self.expected = expected;
        self
    }

    pub fn with_cut(mut self, cut: CutSpec) -> Self {
        self.cut = Some(cut);
        self
    }

    /// Manifest with the manifold written inline.
    pub fn to_file(&self) -> ScenarioFile {
        ScenarioFile {
            name: self.name.clone(),
            dimension: Some(self.dimension),
            manifold: ManifoldSpec {
                file: None,
                sub: None,
                inline: if self.manifold.sub().is_empty() {
                    ComplexFile::from_complex(self.manifold.total())
                } else {
                    ComplexFile::from_pair(&self.manifold)
                },
            },
            circles: self.circles.iter().map(LoopFile::from).collect(),
            expected: self.expected.clone(),
            cut: self.cut.as_ref().map(|c| CutFile {
                side_1: c.sides.side_one().cloned().collect(),
                automorphisms: c.automorphisms.clone(),
            }),
        }
    }
}

fn validation(msg: impl std::fmt::Display) -> HarnessError {
    HarnessError::Validation(msg.to_string())
}

fn build_manifold(spec: ManifoldSpec, base: &Path) -> Result<ComplexPair, HarnessError> {
    let ManifoldSpec { file, sub, inline } = spec;
    let mut complex = match file {
        Some(f) => {
            if !inline.vertices.is_empty()
                || !inline.top_simplices.is_empty()
                || inline.simplices.is_some()
            {
                return Err(validation(
                    "manifold gives both a file and inline simplices",
                ));
            }
            let path = base.join(f);
            let mut loaded = read_complex_file(&path).map_err(|e| match e {
                FormatError::Json(err) => HarnessError::Parse(format!("{}: {err}", path.display())),
                other => other.into(),
            })?;
            if inline.sub_top_simplices.is_some() {
                loaded.sub_top_simplices = inline.sub_top_simplices;
            }
            loaded
        }
        None => inline,
    };
    let derive_boundary = match sub {
        Some(SubSpec::Boundary) => {
            if complex.sub_top_simplices.is_some() {
                return Err(validation(
                    "\"sub\": \"boundary\" conflicts with sub_top_simplices",
                ));
            }
            true
        }
        Some(SubSpec::None) => {
            complex.sub_top_simplices = None;
            false
        }
        None => false,
    };
    let (total, sub) = complex.build()?;
    let sub = match (derive_boundary, sub) {
        (true, _) => boundary_subcomplex(&total)?,
        (false, Some(s)) => s,
        (false, None) => SimplicialComplex::empty(),
    };
    Ok(ComplexPair::new(total, sub)?)
}

/// Validates a parsed manifest. `base` resolves relative file references.
pub fn scenario_from_file(file: ScenarioFile, base: &Path) -> Result<Scenario, HarnessError> {
    let manifold = build_manifold(file.manifold, base)?;
    if let Some(d) = file.dimension {
        let actual = manifold.total().dim_signed();
        if actual != d as isize {
            return Err(validation(format!(
                "declared dimension {d}, complex has dimension {actual}"
            )));
        }
    }
    let mut circles = Vec::with_capacity(file.circles.len());
    for l in file.circles {
        circles.push(MatrixLoop::try_from(l)?);
    }
    let cut = file.cut.map(|c| CutSpec {
        sides: SideAssignment::from_side_one(&c.side_1),
        automorphisms: c.automorphisms,
    });
    let mut s = Scenario::new(file.name, manifold, circles)?.with_expected(file.expected);
    s.cut = cut;
    Ok(s)
}

pub fn parse_scenario(text: &str, base: &Path) -> Result<Scenario, HarnessError> {
    let file: ScenarioFile =
        serde_json::from_str(text).map_err(|e| HarnessError::Parse(e.to_string()))?;
    scenario_from_file(file, base)
}

pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario, HarnessError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let base: PathBuf = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse_scenario(&text, &base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Scenario, HarnessError> {
        parse_scenario(text, Path::new("."))
    }

    #[test]
    fn inline_closed_scenario_without_circles() {
        let s = parse(
            r#"{"name": "s2", "manifold": {"top_simplices": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}}"#,
        )
        .unwrap();
        assert_eq!(s.dimension, 2);
        assert!(s.manifold.sub().is_empty());
        assert!(s.circles.is_empty());
    }

    #[test]
    fn boundary_with_nonzero_euler_is_refused() {
        // a 2-disk: boundary circle has χ = 0, fine
        let disk = r#"{"name": "d", "manifold": {"top_simplices": [[0,1,2]], "sub": "boundary"}}"#;
        assert!(parse(disk).is_ok());
        // a 3-ball: boundary 2-sphere has χ = 2
        let ball =
            r#"{"name": "b", "manifold": {"top_simplices": [[0,1,2,3]], "sub": "boundary"}}"#;
        match parse(ball) {
            Err(HarnessError::Precondition(Precondition::EulerPreconditionViolated {
                euler,
                ..
            })) => assert_eq!(euler, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(parse("{\"name\": 1"), Err(HarnessError::Parse(_))));
    }

    #[test]
    fn bad_circle_is_refused() {
        let text = r#"{"name": "x", "manifold": {"top_simplices": [[0,1]]},
            "circles": [{"location": "boundary", "generator": {"type": "constant", "diag": [1.0], "count": 4}}]}"#;
        assert!(matches!(parse(text), Err(HarnessError::Loop(_))));
    }

    #[test]
    fn dimension_mismatch_is_refused() {
        let text = r#"{"name": "x", "dimension": 5, "manifold": {"top_simplices": [[0,1]]}}"#;
        assert!(matches!(parse(text), Err(HarnessError::Validation(_))));
    }

    #[test]
    fn round_trip_through_manifest() {
        let s = parse(
            r#"{"name": "disk", "manifold": {"top_simplices": [[0,1,2],[0,2,3]], "sub": "boundary"},
                "circles": [{"generator": {"type": "constant", "diag": [1.0], "count": 4}}],
                "expected": {"kappa_relative": 0}}"#,
        )
        .unwrap();
        let text = serde_json::to_string(&s.to_file()).unwrap();
        let back = parse(&text).unwrap();
        assert_eq!(back.manifold.sub().f_vector(), s.manifold.sub().f_vector());
        assert_eq!(back.circles.len(), 1);
        assert_eq!(back.expected, s.expected);
    }
}
