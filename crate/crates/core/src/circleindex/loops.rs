use std::f64::consts::PI;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::IndexError;
use crate::clifford::SymMatrix;

/// Where a singular circle sits. Boundary circles carry the sign `±1` of the
/// normal derivative of the normal component of the field, which fixes the
/// leading diagonal entry of every sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary { sign: i8 },
}

impl Location {
    pub fn is_interior(self) -> bool {
        self == Location::Interior
    }
}

/// Number of full turns of a rotation family, as an exact rational.
/// JSON accepts `1`, `0.5` or `"3/2"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Turns(pub Ratio<i64>);

impl Turns {
    pub fn new(numer: i64, denom: i64) -> Self {
        Turns(Ratio::new(numer, denom))
    }

    pub fn as_f64(self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

impl fmt::Display for Turns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Turns {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            s.serialize_i64(*self.0.numer())
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Turns {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Float(f64),
            Text(String),
        }
        use serde::de::Error;
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Turns::new(n, 1)),
            Raw::Float(x) => {
                // only multiples of 1/64 are representable this way
                let scaled = x * 64.0;
                if (scaled - scaled.round()).abs() > 1e-9 {
                    return Err(D::Error::custom(format!(
                        "turns {x} is not a simple fraction; use \"p/q\""
                    )));
                }
                Ok(Turns::new(scaled.round() as i64, 64))
            }
            Raw::Text(t) => t
                .trim()
                .parse::<Ratio<i64>>()
                .map(Turns)
                .map_err(|e| D::Error::custom(format!("turns {t:?}: {e}"))),
        }
    }
}

/// Built-in loop families, sampled at `t = k / count` for `k = 0..count`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LoopGenerator {
    /// `A(t) = diag(d)`.
    Constant { diag: Vec<f64>, count: usize },
    /// `A(t) = R(θ) diag(d) R(θ)ᵀ`, `θ = 2π · turns · t`, where `R` rotates
    /// the coordinate plane `(plane[0], plane[1])` (0-based indices).
    /// The family closes up when `2 · turns` is an integer.
    ConjugatedDiag {
        diag: Vec<f64>,
        plane: [usize; 2],
        turns: Turns,
        count: usize,
    },
}

impl LoopGenerator {
    pub fn dim(&self) -> usize {
        match self {
            LoopGenerator::Constant { diag, .. } | LoopGenerator::ConjugatedDiag { diag, .. } => {
                diag.len()
            }
        }
    }

    pub fn count(&self) -> usize {
        match self {
            LoopGenerator::Constant { count, .. } | LoopGenerator::ConjugatedDiag { count, .. } => {
                *count
            }
        }
    }

    /// Same family with `factor` times as many samples.
    pub fn refined(&self, factor: usize) -> Self {
        let mut g = self.clone();
        match &mut g {
            LoopGenerator::Constant { count, .. } | LoopGenerator::ConjugatedDiag { count, .. } => {
                *count *= factor
            }
        }
        g
    }

    pub fn samples(&self) -> Result<Vec<SymMatrix>, IndexError> {
        let bad = |msg: String| Err(IndexError::BadGenerator(msg));
        if self.count() == 0 {
            return bad("count must be positive".into());
        }
        if self.dim() == 0 {
            return bad("diag must be nonempty".into());
        }
        match self {
            LoopGenerator::Constant { diag, count } => Ok(vec![SymMatrix::diagonal(diag); *count]),
            LoopGenerator::ConjugatedDiag {
                diag,
                plane,
                turns,
                count,
            } => {
                let m = diag.len();
                let [i, j] = *plane;
                if i >= m || j >= m || i == j {
                    return bad(format!("plane {plane:?} invalid for dimension {m}"));
                }
                if !(turns.0 * 2).is_integer() {
                    return bad(format!(
                        "turns {turns} does not close the loop (need a multiple of 1/2)"
                    ));
                }
                let d = SymMatrix::diagonal(diag);
                Ok((0..*count)
                    .map(|k| {
                        let theta = 2.0 * PI * turns.as_f64() * k as f64 / *count as f64;
                        d.conjugated(&plane_rotation(m, i, j, theta))
                    })
                    .collect())
            }
        }
    }
}

/// Rows of the rotation by `theta` taking `e_i` towards `e_j`.
pub(crate) fn plane_rotation(m: usize, i: usize, j: usize, theta: f64) -> Vec<Vec<f64>> {
    let mut r: Vec<Vec<f64>> = (0..m)
        .map(|a| (0..m).map(|b| if a == b { 1.0 } else { 0.0 }).collect())
        .collect();
    let (s, c) = theta.sin_cos();
    r[i][i] = c;
    r[j][j] = c;
    r[j][i] = s;
    r[i][j] = -s;
    r
}

/// Cyclically ordered samples of `A(t)` along one singular circle.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixLoop {
    dim: usize,
    samples: Vec<SymMatrix>,
    location: Location,
    generator: Option<LoopGenerator>,
}

impl MatrixLoop {
    /// Checks dimensions and, for boundary loops, the block form
    /// `diag(sign, A0)` of every sample.
    pub fn new(samples: Vec<SymMatrix>, location: Location) -> Result<Self, IndexError> {
        let first = samples.first().ok_or(IndexError::EmptyLoop)?;
        let dim = first.dim();
        if dim == 0 {
            return Err(IndexError::BadLoopFile(
                "samples must have positive dimension".into(),
            ));
        }
        for (index, s) in samples.iter().enumerate() {
            if s.dim() != dim {
                return Err(IndexError::DimensionMismatch {
                    index,
                    expected: dim,
                    found: s.dim(),
                });
            }
        }
        let l = MatrixLoop {
            dim,
            samples,
            location,
            generator: None,
        };
        l.check_block_form()?;
        Ok(l)
    }

    pub fn interior(samples: Vec<SymMatrix>) -> Result<Self, IndexError> {
        Self::new(samples, Location::Interior)
    }

    /// Interior loop from a generator.
    pub fn generated(generator: LoopGenerator) -> Result<Self, IndexError> {
        let mut l = Self::new(generator.samples()?, Location::Interior)?;
        l.generator = Some(generator);
        Ok(l)
    }

    /// Boundary loop `diag(sign, A0(t))` where `A0` comes from the generator.
    pub fn generated_boundary(generator: LoopGenerator, sign: i8) -> Result<Self, IndexError> {
        if sign != 1 && sign != -1 {
            return Err(IndexError::BadBoundarySign(sign.into()));
        }
        let samples = generator
            .samples()?
            .iter()
            .map(|a| a.with_leading(sign.into()))
            .collect();
        let mut l = Self::new(samples, Location::Boundary { sign })?;
        l.generator = Some(generator);
        Ok(l)
    }

    fn check_block_form(&self) -> Result<(), IndexError> {
        let Location::Boundary { sign } = self.location else {
            return Ok(());
        };
        if sign != 1 && sign != -1 {
            return Err(IndexError::BadBoundarySign(sign.into()));
        }
        if self.dim < 2 {
            return Err(IndexError::BlockStructureViolated { index: 0, sign });
        }
        for (index, s) in self.samples.iter().enumerate() {
            let tol = 1e-12 * s.max_abs().max(1.0);
            let lead_ok = (s.get(0, 0) - f64::from(sign)).abs() <= tol;
            let off_ok = (1..self.dim).all(|k| s.get(0, k).abs() <= tol);
            if !lead_ok || !off_ok {
                return Err(IndexError::BlockStructureViolated { index, sign });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn samples(&self) -> &[SymMatrix] {
        &self.samples
    }

    pub fn location(&self) -> Location {
        self.location
    }

    pub fn generator(&self) -> Option<&LoopGenerator> {
        self.generator.as_ref()
    }

    /// The same circle traversed backwards (sample 0 stays first).
    pub fn reversed(&self) -> Self {
        let mut samples = self.samples.clone();
        samples[1..].reverse();
        MatrixLoop {
            dim: self.dim,
            samples,
            location: self.location,
            generator: None,
        }
    }

    /// The generator family resampled `factor` times more finely, if this
    /// loop came from a generator.
    pub fn refined(&self, factor: usize) -> Option<Result<Self, IndexError>> {
        let g = self.generator.as_ref()?.refined(factor);
        Some(match self.location {
            Location::Interior => Self::generated(g),
            Location::Boundary { sign } => Self::generated_boundary(g, sign),
        })
    }

    pub(crate) fn reduced(&self) -> Self {
        MatrixLoop {
            dim: self.dim - 1,
            samples: self
                .samples
                .iter()
                .map(SymMatrix::without_leading)
                .collect(),
            location: Location::Interior,
            generator: self.generator.clone(),
        }
    }
}

/// JSON form of a loop:
/// `{"m", "location": "interior"|"boundary", "boundary_sign"?, "samples"?,
/// "generator"?}`. Exactly one of `samples` and `generator` is required.
/// For boundary loops a generator describes the inner block `A0` and the
/// samples are `diag(boundary_sign, A0(t))`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct LoopFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default = "default_location")]
    pub location: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_sign: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<Vec<Vec<f64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<LoopGenerator>,
}

fn default_location() -> String {
    "interior".into()
}

impl TryFrom<LoopFile> for MatrixLoop {
    type Error = IndexError;

    fn try_from(f: LoopFile) -> Result<Self, IndexError> {
        let bad = |msg: &str| IndexError::BadLoopFile(msg.to_string());
        let sign = match (f.location.as_str(), f.boundary_sign) {
            ("interior", None) => None,
            ("interior", Some(_)) => return Err(bad("boundary_sign given for an interior loop")),
            ("boundary", Some(s)) if s == 1 || s == -1 => Some(s as i8),
            ("boundary", Some(s)) => return Err(IndexError::BadBoundarySign(s)),
            ("boundary", None) => return Err(bad("boundary loop needs boundary_sign")),
            (other, _) => {
                return Err(IndexError::BadLoopFile(format!(
                    "unknown location {other:?}"
                )))
            }
        };
        let l = match (f.samples, f.generator) {
            (Some(samples), None) => {
                let mut mats = Vec::with_capacity(samples.len());
                for (index, rows) in samples.into_iter().enumerate() {
                    mats.push(
                        SymMatrix::new(rows)
                            .map_err(|source| IndexError::Sample { index, source })?,
                    );
                }
                let location = match sign {
                    None => Location::Interior,
                    Some(sign) => Location::Boundary { sign },
                };
                MatrixLoop::new(mats, location)?
            }
            (None, Some(g)) => match sign {
                None => MatrixLoop::generated(g)?,
                Some(s) => MatrixLoop::generated_boundary(g, s)?,
            },
            _ => return Err(bad("exactly one of samples and generator is required")),
        };
        if let Some(m) = f.m {
            if m != l.dim() {
                return Err(IndexError::BadLoopFile(format!(
                    "m = {m} but samples have dimension {}",
                    l.dim()
                )));
            }
        }
        Ok(l)
    }
}

impl From<&MatrixLoop> for LoopFile {
    fn from(l: &MatrixLoop) -> Self {
        let (location, boundary_sign) = match l.location {
            Location::Interior => ("interior".to_string(), None),
            Location::Boundary { sign } => ("boundary".to_string(), Some(sign.into())),
        };
        let (samples, generator) = match &l.generator {
            Some(g) => (None, Some(g.clone())),
            None => (Some(l.samples.iter().map(SymMatrix::rows).collect()), None),
        };
        LoopFile {
            m: Some(l.dim),
            location,
            boundary_sign,
            samples,
            generator,
        }
    }
}

impl Serialize for MatrixLoop {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LoopFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatrixLoop {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = LoopFile::deserialize(d)?;
        MatrixLoop::try_from(f).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turns_parsing() {
        let t: Turns = serde_json::from_str("\"3/2\"").unwrap();
        assert_eq!(t, Turns::new(3, 2));
        let t: Turns = serde_json::from_str("0.5").unwrap();
        assert_eq!(t, Turns::new(1, 2));
        let t: Turns = serde_json::from_str("2").unwrap();
        assert_eq!(t, Turns::new(2, 1));
        assert!(serde_json::from_str::<Turns>("0.3").is_err());
    }

    #[test]
    fn generator_validation() {
        let g = LoopGenerator::ConjugatedDiag {
            diag: vec![-1.0, 1.0],
            plane: [0, 2],
            turns: Turns::new(1, 2),
            count: 8,
        };
        assert!(matches!(g.samples(), Err(IndexError::BadGenerator(_))));
        let g = LoopGenerator::ConjugatedDiag {
            diag: vec![-1.0, 1.0],
            plane: [0, 1],
            turns: Turns::new(1, 3),
            count: 8,
        };
        assert!(matches!(g.samples(), Err(IndexError::BadGenerator(_))));
    }

    #[test]
    fn half_turn_closes_up() {
        let g = LoopGenerator::ConjugatedDiag {
            diag: vec![-1.0, 1.0, 1.0, 1.0],
            plane: [0, 1],
            turns: Turns::new(1, 2),
            count: 16,
        };
        let s = g.samples().unwrap();
        assert_eq!(s.len(), 16);
        // A(1/2) = R(π/2) D R(π/2)ᵀ swaps the first two diagonal entries
        assert!((s[8].get(0, 0) - 1.0).abs() < 1e-12 && (s[8].get(1, 1) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn boundary_block_form_is_enforced() {
        let bad = SymMatrix::new(vec![vec![1.0, 0.5], vec![0.5, -1.0]]).unwrap();
        assert!(matches!(
            MatrixLoop::new(vec![bad], Location::Boundary { sign: 1 }),
            Err(IndexError::BlockStructureViolated { index: 0, sign: 1 })
        ));
        let good = SymMatrix::diagonal(&[-1.0, 2.0]);
        assert!(MatrixLoop::new(vec![good.clone()], Location::Boundary { sign: -1 }).is_ok());
        assert!(MatrixLoop::new(vec![good], Location::Boundary { sign: 1 }).is_err());
    }

    #[test]
    fn loop_file_forms() {
        let l: MatrixLoop = serde_json::from_str(
            r#"{"m":2,"location":"boundary","boundary_sign":-1,
                "generator":{"type":"constant","diag":[3.0],"count":4}}"#,
        )
        .unwrap();
        assert_eq!(l.dim(), 2);
        assert_eq!(l.samples()[3], SymMatrix::diagonal(&[-1.0, 3.0]));
        let l: MatrixLoop =
            serde_json::from_str(r#"{"samples":[[[1,0],[0,-1]],[[1,0],[0,-2]]]}"#).unwrap();
        assert_eq!(l.location(), Location::Interior);
        let back: MatrixLoop = serde_json::from_str(&serde_json::to_string(&l).unwrap()).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<MatrixLoop>(r#"{"m":3,"samples":[[[1]]]}"#).is_err());
        assert!(serde_json::from_str::<MatrixLoop>(
            r#"{"location":"boundary","samples":[[[1,0],[0,1]]]}"#
        )
        .is_err());
    }
}
