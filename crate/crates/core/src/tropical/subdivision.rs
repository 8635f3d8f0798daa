//! Regular subdivisions of Newton polygons from lower hulls of lifted points.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::TropPoly;
use crate::algebra::rat::lcm_denoms;
use crate::algebra::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivCell {
    /// all lifted points lying on the lower face, sorted
    pub points: Vec<usize>,
    /// vertices of the cell polygon in counter-clockwise order (a segment in the 1-dimensional case)
    pub hull: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularSubdivision {
    #[serde(serialize_with = "crate::ser::lifted_points")]
    pub points: Vec<([i64; 2], Rat)>,
    pub cells: Vec<SubdivCell>,
    /// Newton polygon vertices, counter-clockwise
    pub polygon: Vec<[i64; 2]>,
    /// 2 for a genuine polygon, 1 for a segment, 0 for a point
    pub dim: usize,
}

/// Integer lifts scaled by a common denominator.
pub(crate) fn integer_points(f: &TropPoly) -> (Vec<([i64; 2], Rat)>, Vec<(i64, i64, i128)>) {
    assert_eq!(f.n_vars, 2, "plane tropical polynomial expected");
    let pts: Vec<([i64; 2], Rat)> = f.terms.iter().map(|(e, c)| ([e[0] as i64, e[1] as i64], c.clone())).collect();
    let l: BigInt = lcm_denoms(pts.iter().map(|p| &p.1));
    let ints = pts
        .iter()
        .map(|(e, c)| {
            let w = (c * Rat::from_integer(l.clone())).to_integer();
            (e[0], e[1], w.to_i128().expect("lift too large"))
        })
        .collect();
    (pts, ints)
}

pub(crate) fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex hull (counter-clockwise, collinear points dropped) of the given indices.
pub(crate) fn hull_2d(pts: &[(i64, i64)], idx: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = idx.to_vec();
    v.sort_by_key(|&i| pts[i]);
    v.dedup_by_key(|i| pts[*i]);
    if v.len() <= 2 {
        return v;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &v {
        while lower.len() >= 2 && cross(pts[lower[lower.len() - 2]], pts[lower[lower.len() - 1]], pts[i]) <= 0 {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in v.iter().rev() {
        while upper.len() >= 2 && cross(pts[upper[upper.len() - 2]], pts[upper[upper.len() - 1]], pts[i]) <= 0 {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && pts[lower[0]] == pts[lower[1]] {
        lower.pop();
    }
    lower
}

pub fn dual_subdivision(f: &TropPoly) -> RegularSubdivision {
    let (points, ints) = integer_points(f);
    let n = ints.len();
    let xy: Vec<(i64, i64)> = ints.iter().map(|p| (p.0, p.1)).collect();
    let all: Vec<usize> = (0..n).collect();
    let polygon_idx = hull_2d(&xy, &all);
    let polygon: Vec<[i64; 2]> = polygon_idx.iter().map(|&i| [xy[i].0, xy[i].1]).collect();
    let dim = match polygon_idx.len() {
        1 => 0,
        2 => 1,
        _ => 2,
    };
    let mut cells = Vec::new();
    if dim == 2 {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (ints[i], ints[j], ints[k]);
                    let u = ((b.0 - a.0) as i128, (b.1 - a.1) as i128, b.2 - a.2);
                    let v = ((c.0 - a.0) as i128, (c.1 - a.1) as i128, c.2 - a.2);
                    let mut nrm = (u.1 * v.2 - u.2 * v.1, u.2 * v.0 - u.0 * v.2, u.0 * v.1 - u.1 * v.0);
                    if nrm.2 == 0 {
                        continue;
                    }
                    if nrm.2 < 0 {
                        nrm = (-nrm.0, -nrm.1, -nrm.2);
                    }
                    let side = |q: &(i64, i64, i128)| nrm.0 * (q.0 - a.0) as i128 + nrm.1 * (q.1 - a.1) as i128 + nrm.2 * (q.2 - a.2);
                    if ints.iter().any(|q| side(q) < 0) {
                        continue;
                    }
                    let on: Vec<usize> = (0..n).filter(|&q| side(&ints[q]) == 0).collect();
                    faces.insert(on);
                }
            }
        }
        for on in faces {
            let hull = hull_2d(&xy, &on);
            cells.push(SubdivCell { points: on, hull });
        }
    } else if dim == 1 {
        // lower hull of the lifted points along the segment
        let (p0, p1) = (xy[polygon_idx[0]], xy[polygon_idx[1]]);
        let dir = (p1.0 - p0.0, p1.1 - p0.1);
        let param = |q: (i64, i64)| (q.0 - p0.0) * dir.0 + (q.1 - p0.1) * dir.1;
        let mut order: Vec<usize> = all.clone();
        order.sort_by_key(|&i| param(xy[i]));
        let mut low: Vec<usize> = Vec::new();
        for &i in &order {
            while low.len() >= 2 {
                let a = low[low.len() - 2];
                let b = low[low.len() - 1];
                let (sa, sb, si) = (param(xy[a]) as i128, param(xy[b]) as i128, param(xy[i]) as i128);
                let cr = (sb - sa) * (ints[i].2 - ints[a].2) - (ints[b].2 - ints[a].2) * (si - sa);
                if cr <= 0 {
                    low.pop();
                } else {
                    break;
                }
            }
            low.push(i);
        }
        for w in low.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (sa, sb) = (param(xy[a]) as i128, param(xy[b]) as i128);
            let on: Vec<usize> = order
                .iter()
                .copied()
                .filter(|&q| {
                    let sq = param(xy[q]) as i128;
                    sq >= sa && sq <= sb && (sb - sa) * (ints[q].2 - ints[a].2) == (ints[b].2 - ints[a].2) * (sq - sa)
                })
                .collect();
            let mut pts = on;
            pts.sort();
            cells.push(SubdivCell { points: pts, hull: vec![a, b] });
        }
    }
    RegularSubdivision { points, cells, polygon, dim }
}

/// Lattice points strictly inside the Newton polygon (Pick's theorem).
pub fn newton_polygon_interior_points(f: &TropPoly) -> u64 {
    let poly: Vec<(i64, i64)> = {
        let xy: Vec<(i64, i64)> = f.terms.keys().map(|e| (e[0] as i64, e[1] as i64)).collect();
        let all: Vec<usize> = (0..xy.len()).collect();
        hull_2d(&xy, &all).into_iter().map(|i| xy[i]).collect()
    };
    if poly.len() < 3 {
        return 0;
    }
    let mut area2 = 0i64;
    let mut boundary = 0i64;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        area2 += a.0 * b.1 - a.1 * b.0;
        boundary += num_integer::gcd(b.0 - a.0, b.1 - a.1);
    }
    ((area2.abs() - boundary + 2) / 2) as u64
}

impl RegularSubdivision {
    /// Twice the area of a cell.
    pub fn cell_area2(&self, c: &SubdivCell) -> i64 {
        let h = &c.hull;
        if h.len() < 3 {
            return 0;
        }
        let mut a = 0;
        for i in 0..h.len() {
            let p = self.points[h[i]].0;
            let q = self.points[h[(i + 1) % h.len()]].0;
            a += p[0] * q[1] - p[1] * q[0];
        }
        a.abs()
    }

    pub fn polygon_area2(&self) -> i64 {
        let h = &self.polygon;
        if h.len() < 3 {
            return 0;
        }
        let mut a = 0;
        for i in 0..h.len() {
            let p = h[i];
            let q = h[(i + 1) % h.len()];
            a += p[0] * q[1] - p[1] * q[0];
        }
        a.abs()
    }

    /// Combinatorial type: cells as sets of exponents, sorted.
    pub fn combinatorial_type(&self) -> Vec<Vec<[i64; 2]>> {
        let mut t: Vec<Vec<[i64; 2]>> = self
            .cells
            .iter()
            .map(|c| {
                let mut v: Vec<[i64; 2]> = c.points.iter().map(|&i| self.points[i].0).collect();
                v.sort();
                v
            })
            .collect();
        t.sort();
        t
    }
}
