//! Deterministic SVG pictures of 2D polytopes.

use std::fmt::Write;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::lattice::{IntVec, Rational, RationalVec};
use crate::polytope::{equidistant_point, prune_facets, Facet, Polytope};

const SCALE: f64 = 60.0;
const MARGIN: f64 = 40.0;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("only 2-dimensional polytopes can be rendered, got dimension {0}")]
pub struct RenderError(pub usize);

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Renders `p` with its facet lines, vertices, equidistant point and the
/// given marked points.
///
/// Unbounded polytopes are clipped to a box one unit larger than the
/// vertices and marked points; clipped edges are drawn dashed. The output
/// depends only on the input.
pub fn render_svg(p: &Polytope, title: &str, marked: &[RationalVec]) -> Result<String, RenderError> {
    if p.dim() != 2 {
        return Err(RenderError(p.dim()));
    }
    let center = equidistant_point(p).map(|e| e.point);
    let mut anchors: Vec<RationalVec> = p.vertices().into_iter().map(|v| v.point).collect();
    anchors.extend(marked.iter().cloned());
    anchors.extend(center.iter().cloned());
    if anchors.is_empty() {
        anchors.push(vec![Rational::from_integer(0.into()); 2]);
    }
    let lo = |k: usize| anchors.iter().map(|a| a[k].clone()).min().expect("nonempty").floor() - Rational::from_integer(1.into());
    let hi = |k: usize| anchors.iter().map(|a| a[k].clone()).max().expect("nonempty").ceil() + Rational::from_integer(1.into());
    let (x_lo, x_hi, y_lo, y_hi) = (lo(0), hi(0), lo(1), hi(1));

    let bounded = p.is_compact();
    let mut facets = p.facets().to_vec();
    let box_facets = if bounded {
        Vec::new()
    } else {
        vec![
            Facet::new(IntVec::from_i64(&[1, 0]), -x_lo.clone()),
            Facet::new(IntVec::from_i64(&[-1, 0]), x_hi.clone()),
            Facet::new(IntVec::from_i64(&[0, 1]), -y_lo.clone()),
            Facet::new(IntVec::from_i64(&[0, -1]), y_hi.clone()),
        ]
    };
    facets.extend(box_facets.iter().cloned());
    let region = prune_facets(2, facets).expect("a box around the vertices meets the interior");
    let polygon = ordered_polygon(&region);

    let (w, h) = (f(&(&x_hi - &x_lo)) * SCALE + 2.0 * MARGIN, f(&(&y_hi - &y_lo)) * SCALE + 2.0 * MARGIN);
    let px = |x: &Rational| MARGIN + f(&(x - &x_lo)) * SCALE;
    let py = |y: &Rational| MARGIN + f(&(&y_hi - y)) * SCALE;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    )
    .unwrap();
    writeln!(s, "<title>{}</title>", escape(title)).unwrap();
    writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();

    let pts: Vec<String> = polygon.iter().map(|v| format!("{:.2},{:.2}", px(&v[0]), py(&v[1]))).collect();
    writeln!(s, r##"<polygon points="{}" fill="#dbe7f5" stroke="none"/>"##, pts.join(" ")).unwrap();

    // Edges: consecutive polygon vertices share a facet of the region.
    for i in 0..polygon.len() {
        let (a, b) = (&polygon[i], &polygon[(i + 1) % polygon.len()]);
        let on_box = box_facets.iter().any(|bf| bf.eval(a).is_zero() && bf.eval(b).is_zero());
        let style = if on_box {
            r##"stroke="#9aa5b1" stroke-dasharray="4 3""##
        } else {
            r##"stroke="#1f3b5c" stroke-width="2""##
        };
        writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#,
            px(&a[0]),
            py(&a[1]),
            px(&b[0]),
            py(&b[1])
        )
        .unwrap();
    }

    // Facet labels at the midpoint of each original facet's edge.
    for facet in p.facets() {
        let on: Vec<&RationalVec> = polygon.iter().filter(|v| facet.eval(v).is_zero()).collect();
        if on.len() < 2 {
            continue;
        }
        let mx = (f(&on[0][0]) + f(&on[1][0])) / 2.0;
        let my = (f(&on[0][1]) + f(&on[1][1])) / 2.0;
        let (lx, ly) = (MARGIN + (mx - f(&x_lo)) * SCALE, MARGIN + (f(&y_hi) - my) * SCALE);
        writeln!(
            s,
            r##"<text x="{lx:.2}" y="{ly:.2}" font-family="monospace" font-size="11" fill="#1f3b5c">{} {}</text>"##,
            facet.normal,
            escape(&facet.offset.to_string())
        )
        .unwrap();
    }

    for v in p.vertices() {
        writeln!(
            s,
            r##"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#1f3b5c"/>"##,
            px(&v.point[0]),
            py(&v.point[1])
        )
        .unwrap();
    }
    if let Some(c) = &center {
        writeln!(
            s,
            r##"<circle cx="{:.2}" cy="{:.2}" r="5" fill="none" stroke="#c0392b" stroke-width="2"/>"##,
            px(&c[0]),
            py(&c[1])
        )
        .unwrap();
    }
    for m in marked {
        writeln!(
            s,
            r##"<circle cx="{:.2}" cy="{:.2}" r="4" fill="#c0392b"/>"##,
            px(&m[0]),
            py(&m[1])
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Vertices of a bounded polygon in counterclockwise order, starting from
/// the lowest-leftmost one.
fn ordered_polygon(region: &Polytope) -> Vec<RationalVec> {
    let mut verts: Vec<RationalVec> = region.vertices().into_iter().map(|v| v.point).collect();
    verts.sort();
    let Some(start) = verts.iter().min_by(|a, b| (&a[1], &a[0]).cmp(&(&b[1], &b[0]))).cloned() else {
        return verts;
    };
    // Sort the rest by exact angle around the start: compare with cross products.
    let mut rest: Vec<RationalVec> = verts.into_iter().filter(|v| *v != start).collect();
    rest.sort_by(|a, b| {
        let (ax, ay) = (&a[0] - &start[0], &a[1] - &start[1]);
        let (bx, by) = (&b[0] - &start[0], &b[1] - &start[1]);
        let cross = &ax * &by - &ay * &bx;
        if cross.is_positive() {
            std::cmp::Ordering::Less
        } else if cross.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            (&ax * &ax + &ay * &ay).cmp(&(&bx * &bx + &by * &by))
        }
    });
    let mut out = vec![start];
    out.extend(rest);
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
