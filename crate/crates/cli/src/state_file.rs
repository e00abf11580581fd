//! JSON state files.
//!
//! A file holds either a named family with its parameters,
//!
//! ```json
//! {"family": "werner", "params": {"p": 0.7}}
//! ```
//!
//! or an explicit matrix as rows of `[re, im]` pairs:
//!
//! ```json
//! {"matrix": [[[0.5, 0], [0, 0], [0, 0], [0.5, 0]], ...]}
//! ```
//!
//! Families: `werner {p}`, `bell_diagonal {c1, c2, c3}`, `mem {C}`,
//! `gmem {x, y, a, b, gamma}`, `ew {p, alpha}` where `alpha` is a number or an
//! `[re, im]` pair.

use std::path::Path;

use anyhow::{Context, Result};
use bineg_core::states::{
    BellDiagonalParams, EwParams, GMemParams, MemParams, StateFamily, WernerParams,
};
use bineg_core::{Complex64, DensityMatrix4, Mat4};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateFile {
    Family(FamilySpec),
    Matrix { matrix: Box<[[[f64; 2]; 4]; 4]> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum FamilySpec {
    Werner {
        p: f64,
    },
    BellDiagonal {
        c1: f64,
        c2: f64,
        c3: f64,
    },
    Mem {
        #[serde(rename = "C", alias = "c")]
        concurrence: f64,
    },
    Gmem {
        x: f64,
        y: f64,
        a: f64,
        b: f64,
        gamma: f64,
    },
    Ew {
        p: f64,
        alpha: Amplitude,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Amplitude {
    Real(f64),
    Complex([f64; 2]),
}

impl From<Amplitude> for Complex64 {
    fn from(a: Amplitude) -> Self {
        match a {
            Amplitude::Real(re) => Complex64::new(re, 0.0),
            Amplitude::Complex([re, im]) => Complex64::new(re, im),
        }
    }
}

impl FamilySpec {
    pub fn resolve(&self) -> bineg_core::Result<StateFamily> {
        Ok(match *self {
            FamilySpec::Werner { p } => StateFamily::Werner(WernerParams::new(p)?),
            FamilySpec::BellDiagonal { c1, c2, c3 } => {
                StateFamily::BellDiagonal(BellDiagonalParams::new(c1, c2, c3)?)
            }
            FamilySpec::Mem { concurrence } => StateFamily::Mem(MemParams::new(concurrence)?),
            FamilySpec::Gmem { x, y, a, b, gamma } => {
                StateFamily::GMem(GMemParams::new(x, y, a, b, gamma)?)
            }
            FamilySpec::Ew { p, alpha } => StateFamily::Ew(EwParams::new(p, alpha.into())?),
        })
    }
}

/// A validated state, remembering its family when it came from one.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadedState {
    pub density: DensityMatrix4,
    pub family: Option<StateFamily>,
}

impl StateFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("state file is neither a family nor a matrix object")
    }

    pub fn from_matrix(m: &Mat4) -> Self {
        StateFile::Matrix {
            matrix: Box::new(std::array::from_fn(|i| {
                std::array::from_fn(|j| [m[(i, j)].re, m[(i, j)].im])
            })),
        }
    }

    pub fn resolve(&self) -> Result<LoadedState> {
        match self {
            StateFile::Family(spec) => {
                let family = spec.resolve().context("invalid family parameters")?;
                Ok(LoadedState {
                    density: family.density(),
                    family: Some(family),
                })
            }
            StateFile::Matrix { matrix } => {
                let m = Mat4::from_fn(|i, j| Complex64::new(matrix[i][j][0], matrix[i][j][1]));
                let density = DensityMatrix4::new(m).context("matrix is not a valid density matrix")?;
                Ok(LoadedState {
                    density,
                    family: None,
                })
            }
        }
    }
}

pub fn load(path: &Path) -> Result<LoadedState> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    StateFile::from_json(&text)?.resolve()
}
