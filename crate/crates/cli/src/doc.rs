//! The polytope file format.
//!
//! ```json
//! {
//!   "name": "rect07",
//!   "dim": 2,
//!   "vertices": [["0", "0"], ["1", "0"], ["0", "7/10"], ["1", "7/10"]],
//!   "inequalities": [{"a": [0, 1], "b": "7/10"}]
//! }
//! ```
//!
//! Rationals are strings (`"3/2"`, `"-7/10"`, `"4"`); decimal strings such
//! as `"0.7"` and JSON integers are accepted on input and always written
//! back in canonical `p/q` form.

use std::fmt;

use num_bigint::BigInt;
use polynormal_core::rational::parse_rational;
use polynormal_core::{Halfspace, Point, Polytope, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Geometry(#[from] polynormal_core::Error),
}

/// A rational written either as a string or as a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Text(String),
    Int(i64),
}

impl Scalar {
    pub fn to_rational(&self) -> Result<Rational, DocError> {
        match self {
            Scalar::Text(s) => parse_rational(s).map_err(|e| DocError::Invalid(e.to_string())),
            Scalar::Int(n) => Ok(Rational::from_integer((*n).into())),
        }
    }
}

impl From<&Rational> for Scalar {
    fn from(r: &Rational) -> Self {
        Scalar::Text(r.to_string())
    }
}

/// An integer that may be written as a JSON number or a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Integer {
    Int(i64),
    Text(String),
}

impl Integer {
    fn to_bigint(&self) -> Result<BigInt, DocError> {
        match self {
            Integer::Int(n) => Ok((*n).into()),
            Integer::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| DocError::Invalid(format!("not an integer: {s:?}"))),
        }
    }
}

impl From<&BigInt> for Integer {
    fn from(n: &BigInt) -> Self {
        match i64::try_from(n) {
            Ok(v) => Integer::Int(v),
            Err(_) => Integer::Text(n.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub a: Vec<Integer>,
    pub b: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<Vec<Inequality>>,
}

impl PolytopeDocument {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        let doc: PolytopeDocument = serde_json::from_str(text).map_err(|e| DocError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if doc.vertices.is_none() && doc.inequalities.is_none() {
            return Err(DocError::Invalid(
                "a document needs `vertices` or `inequalities`".into(),
            ));
        }
        Ok(doc)
    }

    /// Canonical pretty-printed JSON with a trailing newline.
    pub fn print(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_polytope(p: &Polytope, name: Option<String>) -> Self {
        PolytopeDocument {
            name,
            dim: p.dim(),
            vertices: Some(point_rows(p.vertices())),
            inequalities: Some(
                p.facets()
                    .iter()
                    .map(|h| Inequality {
                        a: h.normal().iter().map(Integer::from).collect(),
                        b: Scalar::from(h.offset()),
                    })
                    .collect(),
            ),
        }
    }

    /// Builds the polytope; when both descriptions are present they must agree.
    pub fn to_polytope(&self) -> Result<Polytope, DocError> {
        let from_vertices = match &self.vertices {
            Some(rows) => {
                let pts = rows.iter().map(|row| self.point(row)).collect::<Result<Vec<_>, _>>()?;
                Some(Polytope::hull(&pts)?)
            }
            None => None,
        };
        let from_facets = match &self.inequalities {
            Some(rows) => {
                let hs = rows
                    .iter()
                    .map(|ineq| {
                        if ineq.a.len() != self.dim {
                            return Err(DocError::Invalid(format!(
                                "inequality has {} coefficients, expected {}",
                                ineq.a.len(),
                                self.dim
                            )));
                        }
                        let a = ineq.a.iter().map(Integer::to_bigint).collect::<Result<Vec<_>, _>>()?;
                        Ok(Halfspace::new(a, ineq.b.to_rational()?)?)
                    })
                    .collect::<Result<Vec<_>, DocError>>()?;
                Some(Polytope::from_halfspaces(&hs)?)
            }
            None => None,
        };
        match (from_vertices, from_facets) {
            (Some(a), Some(b)) if a != b => Err(DocError::Invalid(
                "vertices and inequalities describe different polytopes".into(),
            )),
            (Some(a), _) => Ok(a),
            (None, Some(b)) => Ok(b),
            (None, None) => unreachable!("checked in parse"),
        }
    }

    fn point(&self, row: &[Scalar]) -> Result<Point, DocError> {
        if row.len() != self.dim {
            return Err(DocError::Invalid(format!(
                "vertex has {} coordinates, expected {}",
                row.len(),
                self.dim
            )));
        }
        Ok(Point::new(
            row.iter().map(Scalar::to_rational).collect::<Result<_, _>>()?,
        ))
    }
}

impl fmt::Display for PolytopeDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print())
    }
}

pub fn point_row(p: &Point) -> Vec<Scalar> {
    p.coords().iter().map(Scalar::from).collect()
}

pub fn point_rows<'a>(points: impl IntoIterator<Item = &'a Point>) -> Vec<Vec<Scalar>> {
    points.into_iter().map(point_row).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_input_is_exact_and_printed_canonically() {
        let doc = PolytopeDocument::parse(r#"{"dim": 2, "vertices": [["0","0"],["1","0"],["0","0.7"],["1", "0.7"]]}"#)
            .unwrap();
        let p = doc.to_polytope().unwrap();
        let printed = PolytopeDocument::from_polytope(&p, None).print();
        assert!(printed.contains("\"7/10\""));
        let again = PolytopeDocument::parse(&printed).unwrap();
        assert_eq!(again.to_polytope().unwrap(), p);
        assert_eq!(PolytopeDocument::parse(&again.print()).unwrap(), again);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = PolytopeDocument::parse("{\n  \"dim\": 2,\n  \"vertices\": [[\"0\" \"1\"]]\n}").unwrap_err();
        match err {
            DocError::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            PolytopeDocument::parse(r#"{"dim": 2}"#),
            Err(DocError::Invalid(_))
        ));
        let doc = PolytopeDocument::parse(r#"{"dim": 2, "vertices": [["0","0","1"]]}"#).unwrap();
        assert!(matches!(doc.to_polytope(), Err(DocError::Invalid(_))));
        let doc = PolytopeDocument::parse(
            r#"{"dim": 2, "inequalities": [{"a": [-1, 0], "b": "0"}, {"a": [0, -1], "b": 0}]}"#,
        )
        .unwrap();
        assert!(matches!(
            doc.to_polytope(),
            Err(DocError::Geometry(polynormal_core::Error::Unbounded))
        ));
        let doc = PolytopeDocument::parse(
            r#"{"dim": 1, "vertices": [["0"], ["2"]], "inequalities": [{"a": [1], "b": "1"}, {"a": [-1], "b": "0"}]}"#,
        )
        .unwrap();
        assert!(matches!(doc.to_polytope(), Err(DocError::Invalid(_))));
    }
}
