//! Tropical plane curves dual to regular subdivisions.

use std::collections::BTreeMap;

use serde::Serialize;

use super::graph::{first_betti_of, min_cycle_basis};
use super::subdivision::{dual_subdivision, integer_points, RegularSubdivision};
use super::{primitive, TropPoly};
use crate::algebra::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TropEdge {
    pub a: usize,
    pub b: usize,
    /// primitive direction from a to b
    pub direction: [i64; 2],
    #[serde(serialize_with = "crate::ser::rat")]
    pub length: Rat,
    pub multiplicity: u64,
    /// endpoints of the dual subdivision edge (exponents)
    pub dual: [[i64; 2]; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TropRay {
    pub vertex: usize,
    pub direction: [i64; 2],
    pub multiplicity: u64,
    pub dual: [[i64; 2]; 2],
}

/// A full line {w : <normal, w> = value}, arising when the Newton polygon is a segment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TropLine {
    pub normal: [i64; 2],
    #[serde(serialize_with = "crate::ser::rat")]
    pub value: Rat,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct TropCurve {
    #[serde(serialize_with = "crate::ser::rat_pairs")]
    pub vertices: Vec<[Rat; 2]>,
    pub edges: Vec<TropEdge>,
    pub rays: Vec<TropRay>,
    pub lines: Vec<TropLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    /// (vertex, nonzero weighted direction sum)
    pub violations: Vec<(usize, [i64; 2])>,
}

pub fn tropical_curve(f: &TropPoly) -> TropCurve {
    curve_from_subdivision(f, &dual_subdivision(f))
}

pub fn curve_from_subdivision(f: &TropPoly, sd: &RegularSubdivision) -> TropCurve {
    let (_, ints) = integer_points(f);
    let scale = {
        // recover the lcm used for integer lifts
        let l = crate::algebra::rat::lcm_denoms(f.terms.values());
        Rat::from_integer(l)
    };
    let xy = |i: usize| [ints[i].0, ints[i].1];
    if sd.dim == 1 {
        let lines = sd
            .cells
            .iter()
            .map(|c| {
                let (p, q) = (c.hull[0], c.hull[1]);
                let d = [ints[q].0 - ints[p].0, ints[q].1 - ints[p].1];
                let (nrm, g) = primitive(d);
                // c_p + <p,w> = c_q + <q,w>  <=>  <q-p, w> = c_p - c_q
                let value = Rat::new((ints[p].2 - ints[q].2).into(), 1.into()) / &scale / Rat::from_integer(g.into());
                TropLine { normal: nrm, value, multiplicity: g as u64 }
            })
            .collect();
        return TropCurve { lines, ..Default::default() };
    }
    if sd.dim == 0 {
        return TropCurve::default();
    }
    // vertex dual to each cell
    let mut raw: Vec<[Rat; 2]> = Vec::new();
    for c in &sd.cells {
        let (a, b, d) = (ints[c.hull[0]], ints[c.hull[1]], ints[c.hull[2]]);
        let u = ((b.0 - a.0) as i128, (b.1 - a.1) as i128, b.2 - a.2);
        let v = ((d.0 - a.0) as i128, (d.1 - a.1) as i128, d.2 - a.2);
        let n = (u.1 * v.2 - u.2 * v.1, u.2 * v.0 - u.0 * v.2, u.0 * v.1 - u.1 * v.0);
        let n3 = Rat::from_integer(n.2.into()) * &scale;
        raw.push([Rat::from_integer(n.0.into()) / &n3, Rat::from_integer(n.1.into()) / &n3]);
    }
    // lexicographic vertex order
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&i, &j| raw[i].cmp(&raw[j]));
    let mut pos = vec![0; raw.len()];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let vertices: Vec<[Rat; 2]> = order.iter().map(|&i| raw[i].clone()).collect();
    // subdivision edges -> incident cells
    let mut inc: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ci, c) in sd.cells.iter().enumerate() {
        let h = &c.hull;
        for k in 0..h.len() {
            let (p, q) = (h[k], h[(k + 1) % h.len()]);
            inc.entry((p.min(q), p.max(q))).or_default().push(ci);
        }
    }
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for ((p, q), cs) in inc {
        let (pp, qq) = (xy(p), xy(q));
        let (dir, mult) = primitive([qq[0] - pp[0], qq[1] - pp[1]]);
        let dual = [pp, qq];
        match cs.as_slice() {
            [c1, c2] => {
                let (a, b) = (pos[*c1].min(pos[*c2]), pos[*c1].max(pos[*c2]));
                let d = [&vertices[b][0] - &vertices[a][0], &vertices[b][1] - &vertices[a][1]];
                let (direction, length) = rat_direction(&d);
                edges.push(TropEdge { a, b, direction, length, multiplicity: mult as u64, dual });
            }
            [c] => {
                // inward normal of the boundary edge
                let cell = &sd.cells[*c];
                let other = cell.hull.iter().copied().find(|&i| i != p && i != q).unwrap();
                let o = xy(other);
                let mut nrm = [dir[1], -dir[0]];
                if nrm[0] * (o[0] - pp[0]) + nrm[1] * (o[1] - pp[1]) < 0 {
                    nrm = [-nrm[0], -nrm[1]];
                }
                rays.push(TropRay { vertex: pos[*c], direction: nrm, multiplicity: mult as u64, dual });
            }
            _ => unreachable!("subdivision edge in more than two cells"),
        }
    }
    edges.sort_by(|x, y| (x.a, x.b, x.direction).cmp(&(y.a, y.b, y.direction)));
    rays.sort_by(|x, y| (x.vertex, x.direction).cmp(&(y.vertex, y.direction)));
    TropCurve { vertices, edges, rays, lines: Vec::new() }
}

/// Primitive integer direction and lattice length of a rational vector.
pub(crate) fn rat_direction(d: &[Rat; 2]) -> ([i64; 2], Rat) {
    let l = crate::algebra::rat::lcm_denoms(d.iter());
    let a = (&d[0] * Rat::from_integer(l.clone())).to_integer();
    let b = (&d[1] * Rat::from_integer(l.clone())).to_integer();
    let g = num_integer::Integer::gcd(&a, &b);
    if num_traits::Zero::is_zero(&g) {
        return ([0, 0], Rat::from_integer(0.into()));
    }
    let dir = [i64::try_from(&a / &g).unwrap(), i64::try_from(&b / &g).unwrap()];
    (dir, Rat::new(g, l))
}

pub fn check_balancing(c: &TropCurve) -> BalanceReport {
    let mut sums = vec![[0i64; 2]; c.vertices.len()];
    for e in &c.edges {
        let m = e.multiplicity as i64;
        sums[e.a][0] += m * e.direction[0];
        sums[e.a][1] += m * e.direction[1];
        sums[e.b][0] -= m * e.direction[0];
        sums[e.b][1] -= m * e.direction[1];
    }
    for r in &c.rays {
        let m = r.multiplicity as i64;
        sums[r.vertex][0] += m * r.direction[0];
        sums[r.vertex][1] += m * r.direction[1];
    }
    let violations: Vec<(usize, [i64; 2])> = sums.iter().enumerate().filter(|(_, s)| **s != [0, 0]).map(|(i, s)| (i, *s)).collect();
    BalanceReport { balanced: violations.is_empty(), violations }
}

pub fn first_betti(c: &TropCurve) -> usize {
    let e: Vec<(usize, usize)> = c.edges.iter().map(|e| (e.a, e.b)).collect();
    first_betti_of(c.vertices.len(), &e)
}

/// Lengths of a minimum-weight cycle basis of the bounded graph, shortest first.
pub fn cycle_lengths(c: &TropCurve) -> Vec<Rat> {
    let e: Vec<(usize, usize, Rat)> = c.edges.iter().map(|e| (e.a, e.b, e.length.clone())).collect();
    min_cycle_basis(c.vertices.len(), &e).into_iter().map(|(w, _)| w).collect()
}
