//! The bundled corpus of worked examples and its golden-test runner.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use super::document::{parse_point, CertificateDocument, DocumentError, PolytopeDocument, SliceDocument};
use crate::certificate::{auto_certify_monotone, hf_lower_bound_tr, verify};
use crate::floer::{hf, hf_even_detailed};
use crate::polytope::{equidistant_point, Polytope};
use crate::probes::probe_scan;
use crate::reduction::{monotone_weights, reduce};

/// Every corpus file, embedded at build time.
pub const EMBEDDED: &[(&str, &str)] = &[
    ("cases.json", include_str!("../../corpus/cases.json")),
    ("cp1112.json", include_str!("../../corpus/cp1112.json")),
    ("cp1112_slice.json", include_str!("../../corpus/cp1112_slice.json")),
    ("cp112.json", include_str!("../../corpus/cp112.json")),
    ("cp2_blowup1.json", include_str!("../../corpus/cp2_blowup1.json")),
    ("cp2_blowup1_tt.json", include_str!("../../corpus/cp2_blowup1_tt.json")),
    ("cp2_blowup2.json", include_str!("../../corpus/cp2_blowup2.json")),
    ("cp3_slice.json", include_str!("../../corpus/cp3_slice.json")),
    ("cp4_tr.json", include_str!("../../corpus/cp4_tr.json")),
    ("cp5_slice.json", include_str!("../../corpus/cp5_slice.json")),
    ("cube.json", include_str!("../../corpus/cube.json")),
    ("hexagon.json", include_str!("../../corpus/hexagon.json")),
    ("hexagon_slice.json", include_str!("../../corpus/hexagon_slice.json")),
    ("hexagon_tr.json", include_str!("../../corpus/hexagon_tr.json")),
    ("hirzebruch2.json", include_str!("../../corpus/hirzebruch2.json")),
    ("hirzebruch2_ambient.json", include_str!("../../corpus/hirzebruch2_ambient.json")),
    ("hirzebruch2_slice.json", include_str!("../../corpus/hirzebruch2_slice.json")),
    ("hirzebruch2_tt.json", include_str!("../../corpus/hirzebruch2_tt.json")),
    ("non_fano.json", include_str!("../../corpus/non_fano.json")),
    ("non_fano_ambient.json", include_str!("../../corpus/non_fano_ambient.json")),
    ("non_fano_slice.json", include_str!("../../corpus/non_fano_slice.json")),
    ("non_fano_tt_3_2.json", include_str!("../../corpus/non_fano_tt_3_2.json")),
    ("non_fano_tt_5_2.json", include_str!("../../corpus/non_fano_tt_5_2.json")),
    ("non_fano_tt_5_4.json", include_str!("../../corpus/non_fano_tt_5_4.json")),
    ("non_fano_tt_7_4.json", include_str!("../../corpus/non_fano_tt_7_4.json")),
    ("o_minus_one.json", include_str!("../../corpus/o_minus_one.json")),
    ("o_minus_one_instance.json", include_str!("../../corpus/o_minus_one_instance.json")),
    ("p_alpha.json", include_str!("../../corpus/p_alpha.json")),
    ("p_alpha_ambient.json", include_str!("../../corpus/p_alpha_ambient.json")),
    ("p_alpha_slice.json", include_str!("../../corpus/p_alpha_slice.json")),
    ("p_alpha_tt_1_2.json", include_str!("../../corpus/p_alpha_tt_1_2.json")),
    ("p_alpha_tt_1_4.json", include_str!("../../corpus/p_alpha_tt_1_4.json")),
    ("p_alpha_tt_1_8.json", include_str!("../../corpus/p_alpha_tt_1_8.json")),
    ("p_alpha_tt_3_8.json", include_str!("../../corpus/p_alpha_tt_3_8.json")),
    ("p_alpha_tt_5_16.json", include_str!("../../corpus/p_alpha_tt_5_16.json")),
    ("segment.json", include_str!("../../corpus/segment.json")),
    ("simplex2.json", include_str!("../../corpus/simplex2.json")),
    ("simplex2_squared.json", include_str!("../../corpus/simplex2_squared.json")),
    ("simplex3.json", include_str!("../../corpus/simplex3.json")),
    ("simplex4.json", include_str!("../../corpus/simplex4.json")),
    ("simplex5.json", include_str!("../../corpus/simplex5.json")),
    ("square.json", include_str!("../../corpus/square.json")),
];

/// Where corpus files come from.
pub enum CorpusSource<'a> {
    Embedded,
    Directory(&'a Path),
}

impl CorpusSource<'_> {
    pub fn read(&self, name: &str) -> Result<String, String> {
        match self {
            CorpusSource::Embedded => EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, t)| (*t).to_string())
                .ok_or_else(|| format!("no corpus file `{name}`")),
            CorpusSource::Directory(dir) => {
                std::fs::read_to_string(dir.join(name)).map_err(|e| format!("{}: {e}", dir.join(name).display()))
            }
        }
    }
}

/// Looks up an embedded corpus file by name, with or without `.json`.
pub fn embedded(name: &str) -> Option<&'static str> {
    let with_ext = if name.ends_with(".json") { name.to_string() } else { format!("{name}.json") };
    EMBEDDED.iter().find(|(n, _)| *n == with_ext).map(|(_, t)| *t)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Case {
    name: String,
    check: String,
    #[serde(default)]
    polytope: Option<String>,
    #[serde(default)]
    slice: Option<String>,
    #[serde(default)]
    certificate: Option<String>,
    #[serde(default)]
    point: Option<Vec<String>>,
    #[serde(default)]
    bound: Option<u32>,
    expected: Value,
}

/// One line of the corpus table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusReport {
    pub results: Vec<CaseResult>,
}

impl CorpusReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.pass).count()
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::report::corpus_table(self, false))
    }
}

fn load_polytope(src: &CorpusSource, name: &str) -> Result<(PolytopeDocument, Polytope), String> {
    let text = src.read(name)?;
    let doc = PolytopeDocument::from_json(&text).map_err(|e| format!("{name}: {e}"))?;
    let p = doc.to_polytope().map_err(|e| format!("{name}: {e}"))?;
    Ok((doc, p))
}

fn field<'a>(v: &'a Option<String>, what: &str) -> Result<&'a str, String> {
    v.as_deref().ok_or_else(|| format!("case needs `{what}`"))
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run_case(src: &CorpusSource, case: &Case) -> Result<String, String> {
    let err = |e: &dyn fmt::Display| e.to_string();
    match case.check.as_str() {
        "hf" => {
            let (_, p) = load_polytope(src, field(&case.polytope, "polytope")?)?;
            hf(&p).map(|v| v.to_string()).map_err(|e| err(&e))
        }
        "hf_counts" => {
            let (_, p) = load_polytope(src, field(&case.polytope, "polytope")?)?;
            let r = hf_even_detailed(&p).map_err(|e| err(&e))?;
            Ok(serde_json::json!({"nullity": r.nullity, "rank": r.rank}).to_string())
        }
        "tr_bound" => {
            let (_, p) = load_polytope(src, field(&case.polytope, "polytope")?)?;
            hf_lower_bound_tr(&p).map(|r| r.bound.to_string()).map_err(|e| err(&e))
        }
        "reduce" => {
            let (_, ambient) = load_polytope(src, field(&case.polytope, "polytope")?)?;
            let slice_name = field(&case.slice, "slice")?;
            let slice = SliceDocument::from_json(&src.read(slice_name)?)
                .and_then(|d| d.to_slice())
                .map_err(|e| format!("{slice_name}: {e}"))?;
            let reduced = reduce(&ambient, &slice).map_err(|e| err(&e))?;
            let expected_name = case.expected.as_str().ok_or("`reduce` expects a file name")?;
            let (_, expected) = load_polytope(src, expected_name)?;
            Ok(if reduced.same_as(&expected) {
                expected_name.to_string()
            } else {
                reduced.canonical_form().to_string()
            })
        }
        "weights" => {
            let (_, p) = load_polytope(src, field(&case.polytope, "polytope")?)?;
            let w = monotone_weights(&p).map_err(|e| err(&e))?;
            Ok(serde_json::json!({"m": w.m, "pivot": w.pivot}).to_string())
        }
        "certify" => {
            let name = field(&case.certificate, "certificate")?;
            let cert = CertificateDocument::from_json(&src.read(name)?)
                .and_then(|d| d.to_certificate())
                .map_err(|e| format!("{name}: {e}"))?;
            Ok(match verify(&cert) {
                Ok(c) => c.bound.to_string(),
                Err(e) => e.to_string().split(':').next().unwrap_or_default().to_string(),
            })
        }
        "auto_certify" => {
            let (_, p) = load_polytope(src, field(&case.polytope, "polytope")?)?;
            let cert = auto_certify_monotone(&p).map_err(|e| err(&e))?;
            verify(&cert).map(|c| c.bound.to_string()).map_err(|e| err(&e))
        }
        "probe" => {
            let (_, p) = load_polytope(src, field(&case.polytope, "polytope")?)?;
            let point = parse_point(&case.point.as_ref().ok_or("case needs `point`")?.join(",")).map_err(|e: DocumentError| err(&e))?;
            let bound = case.bound.ok_or("case needs `bound`")?;
            Ok(match probe_scan(&p, &point, bound) {
                Some(_) => "displaceable".into(),
                None => "none".into(),
            })
        }
        "equidistant" => {
            let (_, p) = load_polytope(src, field(&case.polytope, "polytope")?)?;
            let e = equidistant_point(&p).ok_or("no equidistant point")?;
            Ok(Value::from(e.point.iter().map(|x| x.to_string()).collect::<Vec<_>>()).to_string())
        }
        other => Err(format!("unknown check `{other}`")),
    }
}

/// The expected value in the same textual form the runner computes.
fn expected_text(case: &Case) -> String {
    show(&case.expected)
}

/// Runs every case in `cases.json`, in file order.
pub fn run_corpus(src: &CorpusSource) -> Result<CorpusReport, String> {
    let cases: Vec<Case> = serde_json::from_str(&src.read("cases.json")?).map_err(|e| format!("cases.json: {e}"))?;
    let results = cases
        .iter()
        .map(|case| {
            let expected = expected_text(case);
            let computed = run_case(src, case).unwrap_or_else(|e| format!("error: {e}"));
            CaseResult {
                name: case.name.clone(),
                check: case.check.clone(),
                pass: computed == expected,
                expected,
                computed,
            }
        })
        .collect();
    Ok(CorpusReport { results })
}

/// Embedded corpus files grouped by the kind of document they hold.
pub fn inventory() -> BTreeMap<&'static str, Vec<&'static str>> {
    let mut out: BTreeMap<&'static str, Vec<&'static str>> = BTreeMap::new();
    for (name, text) in EMBEDDED {
        let kind = if *name == "cases.json" {
            "cases"
        } else if text.contains("\"tree\"") {
            "certificate"
        } else if text.contains("\"A\"") {
            "slice"
        } else {
            "polytope"
        };
        out.entry(kind).or_default().push(name);
    }
    out
}
