//! The tropical modification of R² along a tropical polynomial F.
//!
//! Graph cells {Z = F} over the linearity regions of F, and over every edge of
//! trop(F) the wall it spans together with +e₃. In the min convention the values
//! of z − f can only go up when the leading terms of f cancel, so the walls point
//! upward.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Rat;
use crate::tropical::{dual_subdivision, TropPoly};

/// a·(X, Y, Z) + constant, read as "= 0" or "≥ 0" depending on its role.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Row3 {
    #[serde(serialize_with = "crate::ser::rat_vec")]
    pub coeffs: Vec<Rat>,
    #[serde(serialize_with = "crate::ser::rat")]
    pub constant: Rat,
}

impl Row3 {
    pub fn new(coeffs: [Rat; 3], constant: Rat) -> Self {
        Row3 { coeffs: coeffs.to_vec(), constant }
    }

    pub fn eval(&self, p: &[Rat; 3]) -> Rat {
        self.coeffs.iter().zip(p).fold(self.constant.clone(), |acc, (a, x)| acc + a * x)
    }

    fn sub(&self, o: &Row3) -> Row3 {
        Row3 {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
            constant: &self.constant - &o.constant,
        }
    }

    fn scale(&self, s: &Rat) -> Row3 {
        Row3 { coeffs: self.coeffs.iter().map(|a| a * s).collect(), constant: &self.constant * s }
    }

    /// Positive rescaling making the variable coefficients coprime integers.
    fn primitive(&self) -> Row3 {
        use num_integer::Integer;
        use num_traits::{One, Zero};
        let mut den = num_bigint::BigInt::one();
        let mut num = num_bigint::BigInt::zero();
        for a in &self.coeffs {
            den = den.lcm(a.denom());
            num = num.gcd(a.numer());
        }
        if num.is_zero() {
            return self.clone();
        }
        self.scale(&Rat::new(den, num))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CellKind {
    /// part of the graph of F where the given term is minimal
    Graph { term: [i64; 2] },
    /// wall over the edge of trop(F) where the two terms tie
    Attached { terms: [[i64; 2]; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell3 {
    pub dim: usize,
    pub kind: CellKind,
    pub equalities: Vec<Row3>,
    pub inequalities: Vec<Row3>,
}

impl Cell3 {
    pub fn contains(&self, p: &[Rat; 3]) -> bool {
        use num_traits::Zero;
        self.equalities.iter().all(|r| r.eval(p).is_zero()) && self.inequalities.iter().all(|r| r.eval(p) >= Rat::zero())
    }

    /// Canonical form of the system: equalities in reduced echelon form with pivots
    /// taken in the order Z, Y, X, inequalities reduced modulo them, all rows
    /// primitive, and both lists sorted. Two cells describe the same polyhedron with
    /// the same irredundant rows iff their canonical forms agree.
    pub fn canonical(&self) -> (Vec<Row3>, Vec<Row3>) {
        canonical_system(&self.equalities, &self.inequalities)
    }
}

pub fn canonical_system(eqs: &[Row3], ineqs: &[Row3]) -> (Vec<Row3>, Vec<Row3>) {
    use num_traits::Zero;
    let mut rows: Vec<Row3> = eqs.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for var in [2usize, 1, 0] {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k].coeffs[var].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r].coeffs[var].recip();
        rows[r] = rows[r].scale(&inv);
        for k in 0..rows.len() {
            if k != r && !rows[k].coeffs[var].is_zero() {
                let f = rows[k].coeffs[var].clone();
                rows[k] = rows[k].sub(&rows[r].scale(&f));
            }
        }
        pivots.push((r, var));
        r += 1;
    }
    rows.truncate(r);
    let reduce = |row: &Row3| {
        let mut row = row.clone();
        for &(i, var) in &pivots {
            if !row.coeffs[var].is_zero() {
                let f = row.coeffs[var].clone();
                row = row.sub(&rows[i].scale(&f));
            }
        }
        row.primitive()
    };
    let mut e: Vec<Row3> = rows
        .iter()
        .map(|row| {
            let p = row.primitive();
            // sign: first nonzero coefficient in the order Z, Y, X positive
            let lead = [2, 1, 0].iter().map(|&v| &p.coeffs[v]).find(|a| !a.is_zero()).cloned();
            match lead {
                Some(a) if a < Rat::zero() => p.scale(&Rat::from_integer((-1).into())),
                _ => p,
            }
        })
        .collect();
    let mut i: Vec<Row3> = ineqs.iter().map(reduce).collect();
    e.sort();
    i.sort();
    i.dedup();
    (e, i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyComplex3 {
    pub cells: Vec<Cell3>,
}

impl PolyComplex3 {
    pub fn count(&self, dim: usize) -> usize {
        self.cells.iter().filter(|c| c.dim == dim).count()
    }
}

fn rint(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

/// Row for term_j − term_i.
fn term_diff(pts: &[([i64; 2], Rat)], j: usize, i: usize) -> Row3 {
    let (ej, cj) = &pts[j];
    let (ei, ci) = &pts[i];
    Row3::new([rint(ej[0] - ei[0]), rint(ej[1] - ei[1]), Rat::from_integer(0.into())], cj - ci)
}

/// Row for Z − term_i.
fn z_minus(pts: &[([i64; 2], Rat)], i: usize) -> Row3 {
    let (e, c) = &pts[i];
    Row3::new([rint(-e[0]), rint(-e[1]), rint(1)], -c.clone())
}

/// Pure 2-dimensional complex of the modification of R² along F.
pub fn modification_complex(f: &TropPoly) -> PolyComplex3 {
    let sd = dual_subdivision(f);
    let pts = &sd.points;
    // subdivision edges -> (cell, endpoint order) incidences
    let mut edges: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    if sd.dim == 1 {
        for (ci, c) in sd.cells.iter().enumerate() {
            let (p, q) = (c.hull[0], c.hull[1]);
            edges.entry((p.min(q), p.max(q))).or_default().push(ci);
        }
    } else if sd.dim == 2 {
        for (ci, c) in sd.cells.iter().enumerate() {
            let h = &c.hull;
            for k in 0..h.len() {
                let (p, q) = (h[k], h[(k + 1) % h.len()]);
                edges.entry((p.min(q), p.max(q))).or_default().push(ci);
            }
        }
    }
    let mut cells = Vec::new();
    if sd.dim == 0 {
        cells.push(Cell3 {
            dim: 2,
            kind: CellKind::Graph { term: pts[0].0 },
            equalities: vec![z_minus(pts, 0)],
            inequalities: vec![],
        });
        return PolyComplex3 { cells };
    }
    // graph cells, one per vertex of the subdivision
    let mut nbrs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(p, q) in edges.keys() {
        nbrs.entry(p).or_default().push(q);
        nbrs.entry(q).or_default().push(p);
    }
    for (&i, js) in &nbrs {
        cells.push(Cell3 {
            dim: 2,
            kind: CellKind::Graph { term: pts[i].0 },
            equalities: vec![z_minus(pts, i)],
            inequalities: js.iter().map(|&j| term_diff(pts, j, i)).collect(),
        });
    }
    // walls over the edges of trop(F)
    for (&(p, q), cs) in &edges {
        let mut ineqs = vec![z_minus(pts, p)];
        if sd.dim == 2 {
            for &ci in cs {
                let h = &sd.cells[ci].hull;
                let k = h.iter().position(|&x| x == p).unwrap();
                let prev = h[(k + h.len() - 1) % h.len()];
                let next = h[(k + 1) % h.len()];
                let other = if next == q { prev } else { next };
                ineqs.push(term_diff(pts, other, p));
            }
        }
        cells.push(Cell3 {
            dim: 2,
            kind: CellKind::Attached { terms: [pts[p].0, pts[q].0] },
            equalities: vec![term_diff(pts, q, p)],
            inequalities: ineqs,
        });
    }
    PolyComplex3 { cells }
}
