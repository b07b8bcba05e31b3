//! JSON documents for polytopes, slices and certificates.
//!
//! Rationals are written as strings (`"5/4"`, `"-1"`); plain JSON integers
//! are accepted on input.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{BaseFact, BaseKind, CertNode, Certificate, ClaimKind};
use crate::lattice::{IntMat, IntVec, Rational, RationalVec};
use crate::polytope::{Facet, Polytope};
use crate::reduction::AffineReduction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message.
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

fn invalid(msg: impl std::fmt::Display) -> DocumentError {
    DocumentError::Invalid(msg.to_string())
}

/// A rational as it appears in a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl Serialize for RationalText {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d).map_err(|_| serde::de::Error::custom("expected an integer or a rational string like \"5/4\""))? {
            Raw::Int(i) => Ok(RationalText(Rational::from_integer(i.into()))),
            Raw::Text(t) => parse_rational(&t).map(RationalText).map_err(serde::de::Error::custom),
        }
    }
}

/// Parses `"p"`, `"p/q"` with optional sign and surrounding spaces.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let t = text.trim();
    let r = Rational::from_str(t).map_err(|_| format!("`{text}` is not a rational number"))?;
    Ok(r)
}

fn rationals(v: &[RationalText]) -> RationalVec {
    v.iter().map(|r| r.0.clone()).collect()
}

fn texts(v: &[Rational]) -> Vec<RationalText> {
    v.iter().cloned().map(RationalText).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetDocument {
    pub normal: Vec<i64>,
    pub offset: RationalText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    pub dim: usize,
    pub facets: Vec<FacetDocument>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub marked_points: Vec<Vec<RationalText>>,
}

impl PolytopeDocument {
    pub fn from_polytope(name: &str, p: &Polytope) -> Self {
        PolytopeDocument {
            name: name.to_string(),
            citation: None,
            dim: p.dim(),
            facets: p
                .facets()
                .iter()
                .map(|f| FacetDocument {
                    normal: f.normal.iter().map(|c| i64::try_from(c).expect("normal entry fits in i64")).collect(),
                    offset: RationalText(f.offset.clone()),
                })
                .collect(),
            marked_points: Vec::new(),
        }
    }

    pub fn to_polytope(&self) -> Result<Polytope, DocumentError> {
        let facets = self
            .facets
            .iter()
            .map(|f| Facet::new(IntVec::from_i64(&f.normal), f.offset.0.clone()))
            .collect();
        Polytope::new(self.dim, facets).map_err(|e| invalid(format_args!("polytope `{}`: {e}", self.name)))
    }

    pub fn marked_points(&self) -> Result<Vec<RationalVec>, DocumentError> {
        self.marked_points
            .iter()
            .map(|p| {
                if p.len() != self.dim {
                    Err(invalid(format_args!("marked point has {} coordinates, expected {}", p.len(), self.dim)))
                } else {
                    Ok(rationals(p))
                }
            })
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize") + "\n"
    }
}

/// `{A, x0?, name?}`: the slice `y ↦ A·y + x₀`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SliceDocument {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0: Option<Vec<RationalText>>,
}

impl SliceDocument {
    pub fn from_slice(name: &str, s: &AffineReduction) -> Self {
        let a = s
            .linear_part()
            .row_vectors()
            .iter()
            .map(|r| r.iter().map(|c| i64::try_from(c).expect("slice entry fits in i64")).collect())
            .collect();
        SliceDocument {
            name: name.to_string(),
            a,
            x0: Some(texts(s.base_point())),
        }
    }

    pub fn to_slice(&self) -> Result<AffineReduction, DocumentError> {
        let a = matrix(&self.a)?;
        let x0 = match &self.x0 {
            Some(x) => rationals(x),
            None => vec![Rational::from_integer(0.into()); a.rows()],
        };
        AffineReduction::new(a, x0).map_err(invalid)
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

fn matrix(rows: &[Vec<i64>]) -> Result<IntMat, DocumentError> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || cols == 0 {
        return Err(invalid("matrix must have at least one row and one column"));
    }
    if rows.iter().any(|r| r.len() != cols) {
        return Err(invalid("matrix rows must all have the same length"));
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Ok(IntMat::from_i64(&refs))
}

/// Parses the inline slice syntax `"1,0;0,1;1,1@0,0,1/2"` (`@x0` optional).
pub fn parse_slice_spec(spec: &str) -> Result<AffineReduction, DocumentError> {
    let (a_part, x0_part) = match spec.split_once('@') {
        Some((a, x)) => (a, Some(x)),
        None => (spec, None),
    };
    let rows = a_part
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| invalid(format_args!("`{c}` in slice `{spec}` is not an integer"))))
                .collect::<Result<Vec<i64>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let x0 = x0_part
        .map(|x| {
            x.split(',')
                .map(|c| parse_rational(c).map(RationalText).map_err(invalid))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    SliceDocument {
        name: String::new(),
        a: rows,
        x0,
    }
    .to_slice()
}

/// Parses a point written as `"p/q,p/q,..."`.
pub fn parse_point(text: &str) -> Result<RationalVec, DocumentError> {
    text.split(',').map(|c| parse_rational(c).map_err(invalid)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimDocument {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<PolytopeDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked_point: Option<Vec<RationalText>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeafDocument {
    pub base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    pub instance: PolytopeDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_change: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReduceDocument {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0: Option<Vec<RationalText>>,
    pub child: Box<NodeDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductDocument {
    pub product: Vec<NodeDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReduceNodeDocument {
    pub reduce: ReduceDocument,
}

/// A certificate tree node: a leaf object, `{"product": [...]}` or
/// `{"reduce": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NodeDocument {
    Leaf(LeafDocument),
    Product(ProductDocument),
    Reduce(ReduceNodeDocument),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    pub claim: ClaimDocument,
    pub tree: NodeDocument,
}

impl CertificateDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize") + "\n"
    }

    pub fn to_certificate(&self) -> Result<Certificate, DocumentError> {
        let kind = match self.claim.kind.as_str() {
            "TT" => ClaimKind::TT,
            "TR" => ClaimKind::TR,
            other => return Err(invalid(format_args!("claim kind `{other}` is not TT or TR"))),
        };
        Ok(Certificate {
            kind,
            target: self.claim.target.as_ref().map(PolytopeDocument::to_polytope).transpose()?,
            marked_point: self.claim.marked_point.as_deref().map(rationals),
            tree: node(&self.tree)?,
        })
    }

    pub fn from_certificate(name: &str, cert: &Certificate) -> Self {
        CertificateDocument {
            name: name.to_string(),
            citation: None,
            claim: ClaimDocument {
                kind: cert.kind.to_string(),
                target: cert.target.as_ref().map(|p| PolytopeDocument::from_polytope("", p)),
                marked_point: cert.marked_point.as_deref().map(texts),
            },
            tree: node_document(&cert.tree),
        }
    }
}

fn node(doc: &NodeDocument) -> Result<CertNode, DocumentError> {
    Ok(match doc {
        NodeDocument::Leaf(leaf) => {
            let kind = match (leaf.base.as_str(), &leaf.weights) {
                ("clifford", None) => BaseKind::CliffordTorus,
                ("weighted_projective", Some(w)) => BaseKind::WeightedProjectiveOneM(w.clone()),
                ("weighted_projective", None) => return Err(invalid("weighted_projective leaf needs `weights`")),
                ("cp1", None) => BaseKind::Cp1,
                ("o_minus_one", None) => BaseKind::OMinusOne,
                (base @ ("clifford" | "cp1" | "o_minus_one"), Some(_)) => {
                    return Err(invalid(format_args!("`{base}` leaf takes no weights")))
                }
                (other, _) => return Err(invalid(format_args!("unknown base fact `{other}`"))),
            };
            CertNode::Leaf(BaseFact {
                kind,
                instance: leaf.instance.to_polytope()?,
                basis_change: leaf.basis_change.as_deref().map(matrix).transpose()?,
            })
        }
        NodeDocument::Product(p) => CertNode::Product(p.product.iter().map(node).collect::<Result<_, _>>()?),
        NodeDocument::Reduce(r) => {
            let slice = SliceDocument {
                name: String::new(),
                a: r.reduce.a.clone(),
                x0: r.reduce.x0.clone(),
            }
            .to_slice()?;
            CertNode::Reduce {
                slice,
                child: Box::new(node(&r.reduce.child)?),
            }
        }
    })
}

fn node_document(n: &CertNode) -> NodeDocument {
    match n {
        CertNode::Leaf(f) => NodeDocument::Leaf(LeafDocument {
            base: f.kind.name().to_string(),
            weights: match &f.kind {
                BaseKind::WeightedProjectiveOneM(w) => Some(w.clone()),
                _ => None,
            },
            instance: PolytopeDocument::from_polytope("", &f.instance),
            basis_change: f.basis_change.as_ref().map(|b| {
                b.row_vectors()
                    .iter()
                    .map(|r| r.iter().map(|c| i64::try_from(c).expect("entry fits in i64")).collect())
                    .collect()
            }),
        }),
        CertNode::Product(children) => NodeDocument::Product(ProductDocument {
            product: children.iter().map(node_document).collect(),
        }),
        CertNode::Reduce { slice, child } => {
            let s = SliceDocument::from_slice("", slice);
            NodeDocument::Reduce(ReduceNodeDocument {
                reduce: ReduceDocument {
                    a: s.a,
                    x0: s.x0,
                    child: Box::new(node_document(child)),
                },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{auto_certify_monotone, verify};
    use crate::lattice::{int, rat};

    const SIMPLEX: &str = r#"{
  "name": "simplex2",
  "dim": 2,
  "facets": [
    {"normal": [1, 0], "offset": 1},
    {"normal": [0, 1], "offset": "1"},
    {"normal": [-1, -1], "offset": "2/2"}
  ]
}"#;

    #[test]
    fn parses_integers_and_strings() {
        let doc = PolytopeDocument::from_json(SIMPLEX).unwrap();
        let p = doc.to_polytope().unwrap();
        assert!(p.facets().iter().all(|f| f.offset == int(1)));
    }

    #[test]
    fn round_trip() {
        let doc = PolytopeDocument::from_json(SIMPLEX).unwrap();
        let canonical = PolytopeDocument::from_polytope("simplex2", &doc.to_polytope().unwrap());
        let again = PolytopeDocument::from_json(&canonical.to_json()).unwrap();
        assert_eq!(again, canonical);
        assert!(canonical.to_json().contains("\"offset\": \"1\""));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = PolytopeDocument::from_json("{\n  \"dim\": 2,\n  \"facets\": [\n    {\"normal\": [1, 0], \"offset\": 1.5}\n  ]\n}").unwrap_err();
        match err {
            DocumentError::Syntax { line, .. } => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        let err = PolytopeDocument::from_json("{\"dim\": 1, \"facets\": [], \"bogus\": 1}").unwrap_err();
        assert!(matches!(err, DocumentError::Syntax { line: 1, .. }));
    }

    #[test]
    fn invalid_polytopes_are_reported() {
        let doc = PolytopeDocument::from_json(r#"{"dim":1,"facets":[{"normal":[2],"offset":1}]}"#).unwrap();
        assert!(matches!(doc.to_polytope(), Err(DocumentError::Invalid(_))));
    }

    #[test]
    fn slice_specs() {
        let s = parse_slice_spec("1,0;0,1;1,1@0,0,1/2").unwrap();
        assert_eq!(s.base_point(), &[int(0), int(0), rat(1, 2)]);
        assert_eq!(s.to_string(), "1,0;0,1;1,1@0,0,1/2");
        let s = parse_slice_spec("1,0;0,1;1,1").unwrap();
        assert_eq!(s.base_point(), &[int(0), int(0), int(0)]);
        assert!(parse_slice_spec("1,0;0").is_err());
        assert!(parse_slice_spec("1,x").is_err());
        assert_eq!(parse_point("-1/2, 0").unwrap(), vec![rat(-1, 2), int(0)]);
    }

    #[test]
    fn certificate_round_trip_reverifies_identically() {
        let p = crate::reduction::models::cube(3, &int(1)).unwrap();
        let cert = auto_certify_monotone(&p).unwrap();
        let doc = CertificateDocument::from_certificate("cube", &cert);
        let parsed = CertificateDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
        let back = parsed.to_certificate().unwrap();
        assert_eq!(back, cert);
        assert_eq!(verify(&back), verify(&cert));
    }

    #[test]
    fn unknown_base_fact() {
        let text = r#"{"claim":{"kind":"TT"},"tree":{"base":"sphere","instance":{"dim":1,"facets":[{"normal":[1],"offset":1},{"normal":[-1],"offset":1}]}}}"#;
        let doc = CertificateDocument::from_json(text).unwrap();
        assert!(matches!(doc.to_certificate(), Err(DocumentError::Invalid(_))));
        let text = r#"{"claim":{"kind":"XY"},"tree":{"product":[]}}"#;
        assert!(CertificateDocument::from_json(text).unwrap().to_certificate().is_err());
    }
}
