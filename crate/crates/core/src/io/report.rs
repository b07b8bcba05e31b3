//! Plain-text reports, optionally with ANSI colors.

use std::fmt::Write;

use super::corpus::CorpusReport;
use crate::floer::hf_detailed;
use crate::polytope::{equidistant_point, Polytope};

/// ANSI styling, or none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn wrap(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn good(&self, s: &str) -> String {
        self.wrap("32", s)
    }

    pub fn bad(&self, s: &str) -> String {
        self.wrap("31", s)
    }

    pub fn bold(&self, s: &str) -> String {
        self.wrap("1", s)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Summary of a polytope: size, vertices, the standard flags, center and HF.
pub fn polytope_info(name: &str, p: &Polytope, style: Style) -> String {
    let mut s = String::new();
    if !name.is_empty() {
        writeln!(s, "{}", style.bold(name)).unwrap();
    }
    writeln!(s, "dimension n = {}, facets d = {}", p.dim(), p.facet_count()).unwrap();
    for (i, f) in p.facets().iter().enumerate() {
        writeln!(s, "  facet {i}: normal {} offset {}", f.normal, f.offset).unwrap();
    }
    let vertices = p.vertices();
    writeln!(s, "vertices: {}", vertices.len()).unwrap();
    for v in &vertices {
        let pt: Vec<String> = v.point.iter().map(ToString::to_string).collect();
        let act: Vec<String> = v.active.iter().map(ToString::to_string).collect();
        writeln!(s, "  ({}) on facets {{{}}}", pt.join(", "), act.join(", ")).unwrap();
    }
    writeln!(s, "compact: {}", yes_no(p.is_compact())).unwrap();
    writeln!(s, "delzant: {}", yes_no(p.is_delzant())).unwrap();
    writeln!(s, "even: {}", yes_no(p.is_even())).unwrap();
    writeln!(s, "symmetric: {}", yes_no(p.is_symmetric())).unwrap();
    match p.is_monotone() {
        Some(l) => writeln!(s, "monotone: yes, λ = {l}").unwrap(),
        None => writeln!(s, "monotone: no").unwrap(),
    }
    match equidistant_point(p) {
        Some(e) => {
            let pt: Vec<String> = e.point.iter().map(ToString::to_string).collect();
            writeln!(s, "equidistant point: ({}) at distance {}", pt.join(", "), e.value).unwrap();
        }
        None => writeln!(s, "equidistant point: none").unwrap(),
    }
    match hf_detailed(p) {
        Ok(r) => writeln!(s, "HF: {}", r.value).unwrap(),
        Err(e) => writeln!(s, "HF: {e}").unwrap(),
    }
    s
}

/// The `corpus run` table: one row per case, then a summary line.
pub fn corpus_table(report: &CorpusReport, color: bool) -> String {
    let style = Style { color };
    let w_name = report.results.iter().map(|r| r.name.chars().count()).max().unwrap_or(4).max(4);
    let w_check = report.results.iter().map(|r| r.check.len()).max().unwrap_or(5).max(5);
    let w_exp = report.results.iter().map(|r| r.expected.chars().count()).max().unwrap_or(8).max(8);
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
    let mut s = String::new();
    writeln!(
        s,
        "{}  {}  {}  status  computed",
        pad("case", w_name),
        pad("check", w_check),
        pad("expected", w_exp),
    )
    .unwrap();
    for r in &report.results {
        let status = if r.pass { style.good("ok      ") } else { style.bad("FAIL    ") };
        writeln!(
            s,
            "{}  {}  {}  {}{}",
            pad(&r.name, w_name),
            pad(&r.check, w_check),
            pad(&r.expected, w_exp),
            status,
            r.computed
        )
        .unwrap();
    }
    let summary = format!("{} cases, {} failed", report.results.len(), report.failures());
    writeln!(s, "{}", if report.all_pass() { style.good(&summary) } else { style.bad(&summary) }).unwrap();
    s
}
