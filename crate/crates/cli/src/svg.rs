//! Deterministic SVG figures: plane tropical curves, dual subdivisions and
//! projected modification complexes.
//!
//! All coordinates go through one affine map onto a fixed 600×600 canvas with the
//! y-axis pointing up. Elements are written in a fixed order (axes, cells, edges,
//! rays, vertices, labels), and numbers are printed with two decimals, so equal
//! inputs give byte-identical files.

use std::fmt::Write;

use num_traits::ToPrimitive;
use tropfaith::algebra::Rat;
use tropfaith::projections::{CellKind, PolyComplex3};
use tropfaith::tropical::{RegularSubdivision, TropCurve};

const SIZE: f64 = 600.0;
const PAD: f64 = 30.0;

fn f(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

struct Canvas {
    lo: [f64; 2],
    hi: [f64; 2],
    out: String,
}

impl Canvas {
    fn new(mut lo: [f64; 2], mut hi: [f64; 2]) -> Self {
        // square viewport so that slopes are drawn faithfully
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1.0);
        for i in 0..2 {
            let mid = (lo[i] + hi[i]) / 2.0;
            lo[i] = mid - span / 2.0;
            hi[i] = mid + span / 2.0;
        }
        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        )
        .unwrap();
        writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#).unwrap();
        Canvas { lo, hi, out }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        let s = (SIZE - 2.0 * PAD) / (self.hi[0] - self.lo[0]);
        (PAD + (p[0] - self.lo[0]) * s, SIZE - PAD - (p[1] - self.lo[1]) * s)
    }

    fn axes(&mut self) {
        let (x0, y0) = self.map([0.0, 0.0]);
        let (l, _) = self.map([self.lo[0], 0.0]);
        let (r, _) = self.map([self.hi[0], 0.0]);
        let (_, b) = self.map([0.0, self.lo[1]]);
        let (_, t) = self.map([0.0, self.hi[1]]);
        let style = r##"stroke="#bbbbbb" stroke-width="1" stroke-dasharray="4 3""##;
        if (PAD..=SIZE - PAD).contains(&y0) {
            writeln!(self.out, r#"<line class="axis" x1="{l:.2}" y1="{y0:.2}" x2="{r:.2}" y2="{y0:.2}" {style}/>"#).unwrap();
        }
        if (PAD..=SIZE - PAD).contains(&x0) {
            writeln!(self.out, r#"<line class="axis" x1="{x0:.2}" y1="{b:.2}" x2="{x0:.2}" y2="{t:.2}" {style}/>"#).unwrap();
        }
    }

    fn segment(&mut self, class: &str, a: [f64; 2], b: [f64; 2], width: f64, color: &str) {
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        writeln!(
            self.out,
            r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="{width:.2}"/>"#
        )
        .unwrap();
    }

    fn dot(&mut self, class: &str, p: [f64; 2], r: f64, color: &str) {
        let (x, y) = self.map(p);
        writeln!(self.out, r#"<circle class="{class}" cx="{x:.2}" cy="{y:.2}" r="{r:.2}" fill="{color}"/>"#).unwrap();
    }

    fn label(&mut self, p: [f64; 2], text: &str) {
        let (x, y) = self.map(p);
        writeln!(self.out, r#"<text x="{:.2}" y="{:.2}" font-size="12" font-family="sans-serif">{text}</text>"#, x + 4.0, y - 4.0).unwrap();
    }

    fn polygon(&mut self, class: &str, pts: &[[f64; 2]], fill: &str) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(
            self.out,
            r##"<polygon class="{class}" points="{}" fill="{fill}" fill-opacity="0.45" stroke="#333333" stroke-width="1"/>"##,
            coords.join(" ")
        )
        .unwrap();
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Parameter range of p + s·d inside the box [lo, hi], intersected with [s0, s1].
fn clip(p: [f64; 2], d: [f64; 2], lo: [f64; 2], hi: [f64; 2], mut s0: f64, mut s1: f64) -> Option<(f64, f64)> {
    for i in 0..2 {
        if d[i].abs() < 1e-12 {
            if p[i] < lo[i] || p[i] > hi[i] {
                return None;
            }
            continue;
        }
        let (a, b) = ((lo[i] - p[i]) / d[i], (hi[i] - p[i]) / d[i]);
        s0 = s0.max(a.min(b));
        s1 = s1.min(a.max(b));
    }
    (s0 <= s1).then_some((s0, s1))
}

fn at(p: [f64; 2], d: [f64; 2], s: f64) -> [f64; 2] {
    [p[0] + s * d[0], p[1] + s * d[1]]
}

/// A plane tropical curve; rays and lines are clipped `margin` units beyond the
/// bounding box of the vertices.
pub fn curve_svg(c: &TropCurve, margin: f64) -> String {
    let verts: Vec<[f64; 2]> = c.vertices.iter().map(|v| [f(&v[0]), f(&v[1])]).collect();
    let line_pts: Vec<[f64; 2]> = c
        .lines
        .iter()
        .map(|l| {
            let n = [l.normal[0] as f64, l.normal[1] as f64];
            let s = f(&l.value) / (n[0] * n[0] + n[1] * n[1]);
            [n[0] * s, n[1] * s]
        })
        .collect();
    let all: Vec<[f64; 2]> = verts.iter().chain(&line_pts).cloned().collect();
    let (mut lo, mut hi) = ([0.0f64; 2], [0.0f64; 2]);
    if let Some(first) = all.first() {
        lo = *first;
        hi = *first;
        for p in &all {
            for i in 0..2 {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
    }
    let (lo, hi) = ([lo[0] - margin, lo[1] - margin], [hi[0] + margin, hi[1] + margin]);
    let mut cv = Canvas::new(lo, hi);
    cv.axes();
    let color = "#1f4e9c";
    for e in &c.edges {
        let w = 1.5 + e.multiplicity as f64;
        cv.segment("edge", verts[e.a], verts[e.b], w, color);
    }
    for r in &c.rays {
        let p = verts[r.vertex];
        let d = [r.direction[0] as f64, r.direction[1] as f64];
        if let Some((_, s1)) = clip(p, d, lo, hi, 0.0, f64::INFINITY) {
            cv.segment("ray", p, at(p, d, s1), 1.5 + r.multiplicity as f64, color);
        }
    }
    for (l, p) in c.lines.iter().zip(&line_pts) {
        let d = [-(l.normal[1] as f64), l.normal[0] as f64];
        if let Some((s0, s1)) = clip(*p, d, lo, hi, f64::NEG_INFINITY, f64::INFINITY) {
            cv.segment("line", at(*p, d, s0), at(*p, d, s1), 1.5 + l.multiplicity as f64, color);
        }
    }
    for &v in &verts {
        cv.dot("vertex", v, 3.5, "#000000");
    }
    for e in c.edges.iter().filter(|e| e.multiplicity > 1) {
        let m = [(verts[e.a][0] + verts[e.b][0]) / 2.0, (verts[e.a][1] + verts[e.b][1]) / 2.0];
        cv.label(m, &e.multiplicity.to_string());
    }
    for r in c.rays.iter().filter(|r| r.multiplicity > 1) {
        let p = verts[r.vertex];
        cv.label(at(p, [r.direction[0] as f64, r.direction[1] as f64], 1.0), &r.multiplicity.to_string());
    }
    cv.finish()
}

/// The dual subdivision drawn on the lattice points of the Newton polygon.
pub fn subdivision_svg(sd: &RegularSubdivision) -> String {
    let pts: Vec<[f64; 2]> = sd.points.iter().map(|(e, _)| [e[0] as f64, e[1] as f64]).collect();
    let (mut lo, mut hi) = ([0.0f64; 2], [1.0f64; 2]);
    for p in &pts {
        for i in 0..2 {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    let mut cv = Canvas::new([lo[0] - 0.5, lo[1] - 0.5], [hi[0] + 0.5, hi[1] + 0.5]);
    if sd.dim == 2 {
        for cell in &sd.cells {
            let poly: Vec<[f64; 2]> = cell.hull.iter().map(|&k| pts[k]).collect();
            cv.polygon("cell", &poly, "#f3d27a");
        }
    } else {
        for cell in &sd.cells {
            if let [a, b, ..] = cell.hull[..] {
                cv.segment("cell", pts[a], pts[b], 2.0, "#333333");
            }
        }
    }
    let (mut x, mut y) = (lo[0] as i64, lo[1] as i64);
    while y <= hi[1] as i64 {
        while x <= hi[0] as i64 {
            cv.dot("lattice", [x as f64, y as f64], 1.5, "#bbbbbb");
            x += 1;
        }
        x = lo[0] as i64;
        y += 1;
    }
    for p in &pts {
        cv.dot("term", *p, 3.5, "#000000");
    }
    cv.finish()
}

/// Default view for 3D complexes: X to the right, Z up, Y receding.
pub const DEFAULT_VIEW: [[f64; 3]; 2] = [[1.0, -0.5, 0.0], [0.0, -0.35, 1.0]];

fn solve3(m: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(m);
    if d.abs() < 1e-9 {
        return None;
    }
    let mut x = [0.0; 3];
    for (k, xk) in x.iter_mut().enumerate() {
        let mut mk = m;
        for i in 0..3 {
            mk[i][k] = b[i];
        }
        *xk = det(mk) / d;
    }
    Some(x)
}

/// Each 2-cell clipped to the cube [−half, half]³ and projected by `view`.
pub fn complex_svg(cx: &PolyComplex3, half: f64, view: [[f64; 3]; 2]) -> String {
    let proj = |p: [f64; 3]| [0, 1].map(|r| view[r][0] * p[0] + view[r][1] * p[1] + view[r][2] * p[2]);
    let mut polys: Vec<(bool, Vec<[f64; 2]>)> = Vec::new();
    for cell in &cx.cells {
        // planes a·p + c = 0 taken from equalities, inequalities and the box
        let mut planes: Vec<([f64; 3], f64)> = Vec::new();
        for r in cell.equalities.iter().chain(&cell.inequalities) {
            planes.push(([f(&r.coeffs[0]), f(&r.coeffs[1]), f(&r.coeffs[2])], f(&r.constant)));
        }
        let mut box_rows = Vec::new();
        for i in 0..3 {
            let mut a = [0.0; 3];
            a[i] = -1.0;
            box_rows.push((a, half));
            a[i] = 1.0;
            box_rows.push((a, half));
        }
        planes.extend(box_rows.iter().cloned());
        let inside = |p: &[f64; 3]| {
            let val = |(a, c): &([f64; 3], f64)| a[0] * p[0] + a[1] * p[1] + a[2] * p[2] + c;
            cell.equalities.iter().all(|r| {
                val(&([f(&r.coeffs[0]), f(&r.coeffs[1]), f(&r.coeffs[2])], f(&r.constant))).abs() < 1e-7
            }) && cell.inequalities.iter().all(|r| val(&([f(&r.coeffs[0]), f(&r.coeffs[1]), f(&r.coeffs[2])], f(&r.constant))) > -1e-7)
                && box_rows.iter().all(|b| val(b) > -1e-7)
        };
        let mut pts: Vec<[f64; 3]> = Vec::new();
        for i in 0..planes.len() {
            for j in i + 1..planes.len() {
                for k in j + 1..planes.len() {
                    let (a, b, c) = (&planes[i], &planes[j], &planes[k]);
                    if let Some(p) = solve3([a.0, b.0, c.0], [-a.1, -b.1, -c.1]) {
                        if inside(&p) && !pts.iter().any(|q| (0..3).all(|t| (q[t] - p[t]).abs() < 1e-7)) {
                            pts.push(p);
                        }
                    }
                }
            }
        }
        if pts.len() < 3 {
            continue;
        }
        // order around the centroid inside the cell's own plane
        let n = cell.equalities.first().map(|r| [f(&r.coeffs[0]), f(&r.coeffs[1]), f(&r.coeffs[2])]).unwrap_or([0.0, 0.0, 1.0]);
        let helper = if n[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
        let cross = |a: [f64; 3], b: [f64; 3]| [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
        let e1 = cross(n, helper);
        let e2 = cross(n, e1);
        let cen = [0, 1, 2].map(|t| pts.iter().map(|p| p[t]).sum::<f64>() / pts.len() as f64);
        let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        let mut keyed: Vec<(f64, [f64; 3])> = pts
            .iter()
            .map(|p| {
                let d = [p[0] - cen[0], p[1] - cen[1], p[2] - cen[2]];
                (dot(d, e2).atan2(dot(d, e1)), *p)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
        let graph = matches!(cell.kind, CellKind::Graph { .. });
        polys.push((graph, keyed.into_iter().map(|(_, p)| proj(p)).collect()));
    }
    let corners: Vec<[f64; 2]> = [-half, half]
        .iter()
        .flat_map(|&x| [-half, half].into_iter().flat_map(move |y| [-half, half].into_iter().map(move |z| [x, y, z])))
        .map(proj)
        .collect();
    let lo = [0, 1].map(|i| corners.iter().map(|p| p[i]).fold(f64::INFINITY, f64::min));
    let hi = [0, 1].map(|i| corners.iter().map(|p| p[i]).fold(f64::NEG_INFINITY, f64::max));
    let mut cv = Canvas::new(lo, hi);
    cv.axes();
    for (graph, poly) in &polys {
        cv.polygon(if *graph { "graph" } else { "wall" }, poly, if *graph { "#9cc3e6" } else { "#f4b183" });
    }
    cv.finish()
}
