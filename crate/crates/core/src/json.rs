//! JSON transfer types.
//!
//! Everything crosses the boundary as strings: rationals print as "num/den"
//! (bare "num" when the denominator is 1), so no precision is lost and the
//! files diff cleanly.  Point configurations travel as {"n": ..., "points":
//! [[...], ...]}, matrices as arrays of string rows.

use serde::{Deserialize, Serialize};

use crate::gale::AssociationResult;
use crate::linsys::{BaseCondition, HypersurfaceSystem};
use crate::matrix::Matrix;
use crate::projective::{PointConfiguration, ProjectivePoint};
use crate::quadric::QuadricModel;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::{Error, Result};

pub fn encode_rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

pub fn decode_rationals(values: &[String]) -> Result<Vec<Rational>> {
    values.iter().map(|s| parse_rational(s)).collect()
}

pub fn encode_point(p: &ProjectivePoint) -> Vec<String> {
    p.coords().iter().map(|c| c.to_string()).collect()
}

pub fn decode_point(coords: &[String]) -> Result<ProjectivePoint> {
    ProjectivePoint::canonicalize(&decode_rationals(coords)?)
}

pub fn encode_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| encode_rationals(m.row(i))).collect()
}

pub fn decode_matrix(rows: &[Vec<String>]) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| decode_rationals(r))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConfigDto {
    pub n: usize,
    pub points: Vec<Vec<String>>,
}

impl ConfigDto {
    pub fn from_config(c: &PointConfiguration) -> Self {
        Self {
            n: c.n(),
            points: c.points().iter().map(encode_point).collect(),
        }
    }

    pub fn to_config(&self) -> Result<PointConfiguration> {
        let points = self
            .points
            .iter()
            .map(|p| decode_point(p))
            .collect::<Result<Vec<_>>>()?;
        PointConfiguration::new(self.n, points)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssociationDto {
    pub source: ConfigDto,
    pub target: ConfigDto,
    pub certificate: Vec<Vec<String>>,
}

impl AssociationDto {
    pub fn from_result(r: &AssociationResult) -> Self {
        Self {
            source: ConfigDto::from_config(&r.source),
            target: ConfigDto::from_config(&r.target),
            certificate: encode_matrix(&r.certificate),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionDto {
    pub point: Vec<String>,
    #[serde(default = "default_multiplicity")]
    pub multiplicity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent_line: Option<Vec<String>>,
}

fn default_multiplicity() -> usize {
    1
}

impl ConditionDto {
    pub fn from_condition(c: &BaseCondition) -> Self {
        Self {
            point: encode_point(&c.point),
            multiplicity: c.multiplicity,
            tangent_line: c.tangent_line.as_ref().map(encode_point),
        }
    }

    pub fn to_condition(&self) -> Result<BaseCondition> {
        Ok(BaseCondition {
            point: decode_point(&self.point)?,
            multiplicity: self.multiplicity,
            tangent_line: self
                .tangent_line
                .as_ref()
                .map(|l| decode_point(l))
                .transpose()?,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemDto {
    pub n: usize,
    pub degree: u32,
    pub dimension: usize,
    pub rank: usize,
    /// Dense coefficient vectors over the graded-lex monomial basis.
    pub basis: Vec<Vec<String>>,
}

impl SystemDto {
    pub fn from_system(s: &HypersurfaceSystem) -> Result<Self> {
        let basis = s
            .basis
            .iter()
            .map(|p| Ok(encode_rationals(&p.to_dense(s.degree)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n: s.n,
            degree: s.degree,
            dimension: s.dimension(),
            rank: s.rank(),
            basis,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelDto {
    pub n: usize,
    /// Normalized arrangement: all n+3 rows of linear forms on P^4.
    pub arrangement: Vec<Vec<String>>,
    /// Dense degree-2 coefficient vectors, graded-lex in n+3 variables.
    pub quadrics: Vec<Vec<String>>,
}

impl ModelDto {
    pub fn from_model(m: &QuadricModel) -> Result<Self> {
        let quadrics = m
            .quadrics
            .iter()
            .map(|q| Ok(encode_rationals(&q.to_dense(2)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n: m.n,
            arrangement: encode_matrix(m.arrangement().matrix()),
            quadrics,
        })
    }

    pub fn to_model(&self) -> Result<QuadricModel> {
        let rows = self
            .arrangement
            .iter()
            .map(|r| decode_rationals(r))
            .collect::<Result<Vec<_>>>()?;
        let arr = crate::quadric::HyperplaneArrangement::from_rows(rows)?;
        QuadricModel::from_arrangement(&arr)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Json(e.to_string()))
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}
