//! JSON complex format:
//! `{"vertices": [...], "top_simplices": [[v, ...], ...]}` with lower faces
//! generated by closure. A pair adds `"sub_top_simplices"`. An optional
//! `"simplices"` field lists every simplex explicitly; it is then checked for
//! face closure instead of being closed automatically.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ComplexPair, SimplicialComplex, SimplicialError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed complex JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] SimplicialError),
}

/// Vertex ids may be written as strings or as integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexId {
    Name(String),
    Number(i64),
}

impl VertexId {
    pub fn into_name(self) -> String {
        match self {
            VertexId::Name(s) => s,
            VertexId::Number(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(default)]
    pub vertices: Vec<VertexId>,
    #[serde(default)]
    pub top_simplices: Vec<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simplices: Option<Vec<Vec<VertexId>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub_top_simplices: Option<Vec<Vec<VertexId>>>,
}

fn names(list: Vec<Vec<VertexId>>) -> Vec<Vec<String>> {
    list.into_iter()
        .map(|s| s.into_iter().map(VertexId::into_name).collect())
        .collect()
}

fn write_names(list: Vec<Vec<String>>) -> Vec<Vec<VertexId>> {
    list.into_iter()
        .map(|s| s.into_iter().map(VertexId::Name).collect())
        .collect()
}

impl ComplexFile {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        let tops = c.maximal_simplices().iter().map(|s| c.names(s)).collect();
        ComplexFile {
            vertices: c.vertices().iter().cloned().map(VertexId::Name).collect(),
            top_simplices: write_names(tops),
            simplices: None,
            sub_top_simplices: None,
        }
    }

    pub fn from_pair(p: &ComplexPair) -> Self {
        let mut file = Self::from_complex(p.total());
        let sub = p.sub();
        file.sub_top_simplices = Some(write_names(
            sub.maximal_simplices()
                .iter()
                .map(|s| sub.names(s))
                .collect(),
        ));
        file
    }

    /// Builds the total complex and, when present, the declared subcomplex.
    pub fn build(self) -> Result<(SimplicialComplex, Option<SimplicialComplex>), FormatError> {
        let vertices: Vec<String> = self.vertices.into_iter().map(VertexId::into_name).collect();
        let total = match self.simplices {
            Some(all) => SimplicialComplex::from_simplices(&vertices, &names(all))?,
            None if vertices.is_empty() => {
                SimplicialComplex::from_top_simplices(&names(self.top_simplices))?
            }
            None => SimplicialComplex::with_vertices(&vertices, &names(self.top_simplices))?,
        };
        let sub = self
            .sub_top_simplices
            .map(|s| SimplicialComplex::from_top_simplices(&names(s)))
            .transpose()?;
        Ok((total, sub))
    }

    pub fn build_pair(self) -> Result<ComplexPair, FormatError> {
        let (total, sub) = self.build()?;
        Ok(ComplexPair::new(
            total,
            sub.unwrap_or_else(SimplicialComplex::empty),
        )?)
    }
}

pub fn parse_complex_file(text: &str) -> Result<ComplexFile, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_complex_file(path: &Path) -> Result<ComplexFile, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_complex_file(&text)
}

pub fn complex_to_json(c: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexFile::from_complex(c)).expect("complex serializes")
}

pub fn pair_to_json(p: &ComplexPair) -> String {
    serde_json::to_string(&ComplexFile::from_pair(p)).expect("pair serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard;

    #[test]
    fn integer_and_string_ids() {
        let file =
            parse_complex_file(r#"{"vertices":[0,1,"2"],"top_simplices":[[0,1,"2"]]}"#).unwrap();
        let (c, sub) = file.build().unwrap();
        assert_eq!(c, standard::simplex(2));
        assert!(sub.is_none());
    }

    #[test]
    fn explicit_simplices_are_checked() {
        let file = parse_complex_file(r#"{"vertices":[0,1,2],"simplices":[[0,1],[1,2],[0,1,2]]}"#)
            .unwrap();
        assert!(matches!(
            file.build(),
            Err(FormatError::Invalid(SimplicialError::MissingFace { .. }))
        ));
    }

    #[test]
    fn pair_round_trip() {
        let p = ComplexPair::with_boundary(standard::simplex(3)).unwrap();
        let back = parse_complex_file(&pair_to_json(&p))
            .unwrap()
            .build_pair()
            .unwrap();
        assert_eq!(back, p);
    }
}
