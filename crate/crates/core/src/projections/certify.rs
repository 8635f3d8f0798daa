//! Faithfulness certificates for re-embeddings V(g, z − f) ⊂ (K*)³.
//!
//! The space tropical curve is rebuilt as the common preimage of its four plane
//! projections (xy, xz, yz and one generic plane). Multiplicities of space edges
//! are read off from projections where the edge image is not shared with another
//! edge, and overlaps are solved additively. The reconstruction is then pushed
//! forward again and compared with every projection; any disagreement, any
//! unresolved overlap or any unbalanced vertex makes the verdict NotCertified.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{project_generic, project_xz, project_yz, validate_plane, Plane, DEFAULT_PLANE};
use crate::algebra::{MPoly, Rat};
use crate::error::Result;
use crate::hyperelliptic::{HECurve, ReembedPlan};
use crate::tropical::graph::{core_edges, first_betti_of, min_cycle_basis};
use crate::tropical::{tropical_curve, tropicalize, TropCurve};

/// Planes tried in order when no plane is given.
const FALLBACK_PLANES: [Plane; 3] = [DEFAULT_PLANE, [[1, 0], [1, 0], [0, 1]], [[1, 2], [1, 0], [0, 1]]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Faithful,
    NotCertified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum IrregularityKind {
    /// an edge maps with lattice index > 1, so its image carries a multiple of its weight
    PushforwardIndex,
    /// two edge images cross, or a vertex of the projection has no vertex above it
    Crossing,
    /// several edges map onto the same segment and their weights add up
    Overlap,
    /// a vertex maps into the interior of an edge of the projection
    InteriorVertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Irregularity {
    pub kind: IrregularityKind,
    pub projection: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceEdge {
    pub a: usize,
    /// None for a ray
    pub b: Option<usize>,
    pub direction: [i64; 3],
    #[serde(serialize_with = "crate::ser::opt_rat")]
    pub length: Option<Rat>,
    pub multiplicity: u64,
}

/// One observation: the image of `edge` in `projection` carries `multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeEvidence {
    pub projection: String,
    pub edge: usize,
    pub multiplicity: u64,
    pub index: u64,
    pub dual: [[i64; 2]; 2],
    /// other edges sharing the image segment
    pub shared_with: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct SkeletonReport {
    pub betti: usize,
    #[serde(serialize_with = "crate::ser::rat_vec")]
    pub cycle_lengths: Vec<Rat>,
    pub core_edges: Vec<usize>,
    /// (vertex, valence) for the vertices on the core, legs included
    pub valences: Vec<(usize, usize)>,
    /// (vertex, number of core edges) where the core branches
    pub branch_points: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub reasons: Vec<String>,
    pub plane: Option<Plane>,
    #[serde(serialize_with = "crate::ser::rat_triples")]
    pub vertices: Vec<[Rat; 3]>,
    pub edges: Vec<SpaceEdge>,
    pub evidence: Vec<EdgeEvidence>,
    pub skeleton: SkeletonReport,
    pub irregularities: Vec<Irregularity>,
}

impl Certificate {
    pub fn is_faithful(&self) -> bool {
        self.verdict == Verdict::Faithful
    }
}

pub fn certify_faithful(c: &HECurve, plan: &ReembedPlan) -> Result<Certificate> {
    certify_embedding(&c.g_poly, c.genus, &plan.fs, None)
}

/// Certifies V(g) (no generator) or V(g, z − f) (one generator).
pub fn certify_embedding(g: &MPoly, genus: usize, fs: &[MPoly], plane: Option<Plane>) -> Result<Certificate> {
    let txy = tropical_curve(&tropicalize(g)?);
    match fs {
        [] => Ok(certify_plane_curve(&txy, genus)),
        [f] => certify_space(g, f, genus, &txy, plane),
        _ => Ok(Certificate {
            verdict: Verdict::NotCertified,
            reasons: vec![format!(
                "{} separate generators: the reconstruction handles one extra coordinate; combine the plan",
                fs.len()
            )],
            plane: None,
            vertices: vec![],
            edges: vec![],
            evidence: vec![],
            skeleton: SkeletonReport::default(),
            irregularities: vec![],
        }),
    }
}

fn rint(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

/// Lattice-length graph data → skeleton report and failure reasons.
fn skeleton(nv: usize, edges: &[(usize, Option<usize>, Option<Rat>, u64)], genus: usize) -> (SkeletonReport, Vec<String>) {
    let bounded: Vec<(usize, usize, Rat, usize)> =
        edges.iter().enumerate().filter_map(|(i, (a, b, l, _))| b.map(|b| (*a, b, l.clone().unwrap(), i))).collect();
    let pairs: Vec<(usize, usize)> = bounded.iter().map(|e| (e.0, e.1)).collect();
    let betti = first_betti_of(nv, &pairs);
    let core: Vec<usize> = core_edges(nv, &pairs).into_iter().map(|k| bounded[k].3).collect();
    let weighted: Vec<(usize, usize, Rat)> = bounded.iter().map(|e| (e.0, e.1, e.2.clone())).collect();
    let cycle_lengths: Vec<Rat> = min_cycle_basis(nv, &weighted).into_iter().map(|c| c.0).collect();
    let mut val = vec![0usize; nv];
    for (a, b, _, _) in edges {
        val[*a] += 1;
        if let Some(b) = b {
            val[*b] += 1;
        }
    }
    let mut on_core: Vec<usize> = core.iter().flat_map(|&i| [edges[i].0, edges[i].1.unwrap()]).collect();
    on_core.sort();
    on_core.dedup();
    let valences: Vec<(usize, usize)> = on_core.iter().map(|&v| (v, val[v])).collect();
    let mut reasons = Vec::new();
    if betti != genus {
        reasons.push(format!("skeleton has {betti} independent cycles, genus is {genus}"));
        let hiding: Vec<String> =
            bounded.iter().filter(|e| edges[e.3].3 > 1).map(|e| format!("edge {} (multiplicity {})", e.3, edges[e.3].3)).collect();
        if betti < genus && !hiding.is_empty() {
            reasons.push(format!("bounded edges with multiplicity > 1 may hide cycles: {}", hiding.join(", ")));
        }
    }
    let heavy: Vec<String> = core.iter().filter(|&&i| edges[i].3 != 1).map(|&i| format!("edge {i} (multiplicity {})", edges[i].3)).collect();
    if !heavy.is_empty() {
        reasons.push(format!("core edges with multiplicity > 1: {}", heavy.join(", ")));
    }
    let mut core_deg = vec![0usize; nv];
    for &i in &core {
        core_deg[edges[i].0] += 1;
        core_deg[edges[i].1.unwrap()] += 1;
    }
    let branch_points: Vec<(usize, usize)> = on_core.iter().filter(|&&v| core_deg[v] > 2).map(|&v| (v, core_deg[v])).collect();
    let bad: Vec<String> = branch_points.iter().filter(|(_, k)| *k != 3).map(|(v, k)| format!("vertex {v} ({k} skeleton edges)")).collect();
    if !bad.is_empty() {
        reasons.push(format!("skeleton vertices that are not 3-valent: {}", bad.join(", ")));
    }
    (SkeletonReport { betti, cycle_lengths, core_edges: core, valences, branch_points }, reasons)
}

fn certify_plane_curve(t: &TropCurve, genus: usize) -> Certificate {
    let mut edges: Vec<(usize, Option<usize>, Option<Rat>, u64)> = Vec::new();
    let mut vertices: Vec<[Rat; 3]> = t.vertices.iter().map(|v| [v[0].clone(), v[1].clone(), Rat::zero()]).collect();
    let mut space = Vec::new();
    let mut evidence = Vec::new();
    for (i, e) in t.edges.iter().enumerate() {
        edges.push((e.a, Some(e.b), Some(e.length.clone()), e.multiplicity));
        space.push(SpaceEdge {
            a: e.a,
            b: Some(e.b),
            direction: [e.direction[0], e.direction[1], 0],
            length: Some(e.length.clone()),
            multiplicity: e.multiplicity,
        });
        evidence.push(EdgeEvidence { projection: "xy".into(), edge: i, multiplicity: e.multiplicity, index: 1, dual: e.dual, shared_with: vec![] });
    }
    for r in &t.rays {
        edges.push((r.vertex, None, None, r.multiplicity));
        space.push(SpaceEdge { a: r.vertex, b: None, direction: [r.direction[0], r.direction[1], 0], length: None, multiplicity: r.multiplicity });
    }
    if !t.lines.is_empty() {
        vertices.clear();
    }
    let (skel, mut reasons) = skeleton(vertices.len(), &edges, genus);
    if !t.lines.is_empty() && genus > 0 {
        reasons.push("the tropical curve is a union of lines".into());
    }
    Certificate {
        verdict: if reasons.is_empty() { Verdict::Faithful } else { Verdict::NotCertified },
        reasons,
        plane: None,
        vertices,
        edges: space,
        evidence,
        skeleton: skel,
        irregularities: vec![],
    }
}

// ---------------------------------------------------------------------------
// intervals and pieces

/// Parameter interval; None stands for −∞ (lo) or +∞ (hi).
#[derive(Clone, Debug, PartialEq, Eq)]
struct Iv {
    lo: Option<Rat>,
    hi: Option<Rat>,
}

impl Iv {
    fn all() -> Iv {
        Iv { lo: None, hi: None }
    }

    fn proper(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        }
    }

    fn meet(&self, o: &Iv) -> Option<Iv> {
        let lo = match (&self.lo, &o.lo) {
            (Some(a), Some(b)) => Some(a.max(b).clone()),
            (a, b) => a.clone().or(b.clone()),
        };
        let hi = match (&self.hi, &o.hi) {
            (Some(a), Some(b)) => Some(a.min(b).clone()),
            (a, b) => a.clone().or(b.clone()),
        };
        let r = Iv { lo, hi };
        r.proper().then_some(r)
    }

    fn contains_open(&self, t: &Rat) -> bool {
        self.lo.as_ref().map_or(true, |a| a < t) && self.hi.as_ref().map_or(true, |b| t < b)
    }

    /// Preimage under t ↦ α + β·t.
    fn preimage(&self, alpha: &Rat, beta: &Rat) -> Iv {
        let f = |x: &Rat| (x - alpha) / beta;
        if beta.is_positive() {
            Iv { lo: self.lo.as_ref().map(f), hi: self.hi.as_ref().map(f) }
        } else {
            Iv { lo: self.hi.as_ref().map(f), hi: self.lo.as_ref().map(f) }
        }
    }
}

fn merge(mut v: Vec<Iv>) -> Vec<Iv> {
    v.sort_by(|a, b| match (&a.lo, &b.lo) {
        (None, None) => std::cmp::Ordering::Equal,
        (None, _) => std::cmp::Ordering::Less,
        (_, None) => std::cmp::Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(y),
    });
    let mut out: Vec<Iv> = Vec::new();
    for iv in v {
        if let Some(last) = out.last_mut() {
            let touches = match (&last.hi, &iv.lo) {
                (None, _) | (_, None) => true,
                (Some(h), Some(l)) => l <= h,
            };
            if touches {
                last.hi = match (&last.hi, &iv.hi) {
                    (Some(a), Some(b)) => Some(a.max(b).clone()),
                    _ => None,
                };
                continue;
            }
        }
        out.push(iv);
    }
    out
}

fn meet_all(a: &[Iv], b: &[Iv]) -> Vec<Iv> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            if let Some(m) = x.meet(y) {
                out.push(m);
            }
        }
    }
    merge(out)
}

/// Segment, ray or line p + s·d, s ∈ iv, of a plane tropical curve.
#[derive(Clone, Debug)]
struct Piece2 {
    p: [Rat; 2],
    d: [i64; 2],
    iv: Iv,
    mult: u64,
    dual: [[i64; 2]; 2],
}

impl Piece2 {
    fn ends(&self) -> Vec<[Rat; 2]> {
        let at = |s: &Rat| [&self.p[0] + s * rint(self.d[0]), &self.p[1] + s * rint(self.d[1])];
        self.iv.lo.iter().chain(self.iv.hi.iter()).map(at).collect()
    }

    /// Parameter of q if q lies on the supporting line.
    fn param(&self, q: &[Rat; 2]) -> Option<Rat> {
        let w = [&q[0] - &self.p[0], &q[1] - &self.p[1]];
        if &w[0] * rint(self.d[1]) != &w[1] * rint(self.d[0]) {
            return None;
        }
        Some(if self.d[0] != 0 { &w[0] / rint(self.d[0]) } else { &w[1] / rint(self.d[1]) })
    }
}

fn pieces(t: &TropCurve) -> Vec<Piece2> {
    let mut out = Vec::new();
    for e in &t.edges {
        out.push(Piece2 {
            p: t.vertices[e.a].clone(),
            d: e.direction,
            iv: Iv { lo: Some(Rat::zero()), hi: Some(e.length.clone()) },
            mult: e.multiplicity,
            dual: e.dual,
        });
    }
    for r in &t.rays {
        out.push(Piece2 { p: t.vertices[r.vertex].clone(), d: r.direction, iv: Iv { lo: Some(Rat::zero()), hi: None }, mult: r.multiplicity, dual: r.dual });
    }
    for l in &t.lines {
        let n = l.normal;
        let p = if n[0] != 0 { [&l.value / rint(n[0]), Rat::zero()] } else { [Rat::zero(), &l.value / rint(n[1])] };
        out.push(Piece2 { p, d: [-n[1], n[0]], iv: Iv::all(), mult: l.multiplicity, dual: [[0, 0], [0, 0]] });
    }
    out
}

/// A plane projection (X, Y, Z) ↦ (m0·P, m1·P) with its tropical curve.
struct Proj {
    name: String,
    m: [[i64; 3]; 2],
    pieces: Vec<Piece2>,
}

impl Proj {
    fn point(&self, p: &[Rat; 3]) -> [Rat; 2] {
        let f = |r: &[i64; 3]| (0..3).fold(Rat::zero(), |acc, i| acc + rint(r[i]) * &p[i]);
        [f(&self.m[0]), f(&self.m[1])]
    }

    fn dir(&self, d: &[i64; 3]) -> [i64; 2] {
        let f = |r: &[i64; 3]| (0..3).map(|i| r[i] * d[i]).sum::<i64>();
        [f(&self.m[0]), f(&self.m[1])]
    }

    fn on_curve(&self, q: &[Rat; 2]) -> bool {
        self.pieces.iter().any(|pc| pc.param(q).is_some_and(|s| pc.iv.lo.as_ref().map_or(true, |a| a <= &s) && pc.iv.hi.as_ref().map_or(true, |b| &s <= b)))
    }

    fn is_vertex(&self, q: &[Rat; 2]) -> bool {
        self.pieces.iter().any(|pc| pc.ends().iter().any(|e| e == q))
    }

    /// Total multiplicity of the pieces through q (q not a vertex) and a dual edge.
    fn mult_at(&self, q: &[Rat; 2]) -> (u64, [[i64; 2]; 2]) {
        let mut m = 0;
        let mut dual = [[0, 0], [0, 0]];
        for pc in &self.pieces {
            if pc.param(q).is_some_and(|s| pc.iv.contains_open(&s)) {
                m += pc.mult;
                dual = pc.dual;
            }
        }
        (m, dual)
    }
}

/// p + s·d with d primitive integral.
#[derive(Clone, Debug)]
struct Piece3 {
    p: [Rat; 3],
    d: [i64; 3],
    iv: Iv,
}

impl Piece3 {
    /// Parameter interval where the image lies on the projection's curve.
    fn preimage(&self, pr: &Proj) -> Vec<Iv> {
        let pd = pr.dir(&self.d);
        let pp = pr.point(&self.p);
        if pd == [0, 0] {
            return if pr.on_curve(&pp) { vec![self.iv.clone()] } else { vec![] };
        }
        let mut out = Vec::new();
        for pc in &pr.pieces {
            if pd[0] * pc.d[1] != pd[1] * pc.d[0] {
                continue;
            }
            let Some(alpha) = pc.param(&pp) else { continue };
            let beta = if pc.d[0] != 0 { Rat::new(pd[0].into(), pc.d[0].into()) } else { Rat::new(pd[1].into(), pc.d[1].into()) };
            if let Some(m) = pc.iv.preimage(&alpha, &beta).meet(&self.iv) {
                out.push(m);
            }
        }
        merge(out)
    }
}

fn primitive3(d: [Rat; 3]) -> Option<([i64; 3], Rat)> {
    use num_integer::Integer;
    let l = crate::algebra::rat::lcm_denoms(d.iter());
    let ints: Vec<num_bigint::BigInt> = d.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let dd = [0, 1, 2].map(|i| i64::try_from(&ints[i] / &g).unwrap());
    Some((dd, Rat::new(g, l)))
}

/// Cylinder intersections of one xy piece and one xz piece.
fn lift(a: &Piece2, b: &Piece2, yz: &Proj) -> Vec<Piece3> {
    let mut out = Vec::new();
    let (da, db) = (a.d, b.d);
    if da[0] != 0 && db[0] != 0 {
        // parametrize by b's parameter r: X = b0 + r db0, s(r) = (b0 − a0)/da0 + r db0/da0
        let s0 = (&b.p[0] - &a.p[0]) / rint(da[0]);
        let s1 = Rat::new(db[0].into(), da[0].into());
        let Some(iv) = a.iv.preimage(&s0, &s1).meet(&b.iv) else { return out };
        let y0 = &a.p[1] + &s0 * rint(da[1]);
        let dy = &s1 * rint(da[1]);
        let (d, scale) = primitive3([rint(db[0]), dy, rint(db[1])]).unwrap();
        let iv = iv.preimage(&Rat::zero(), &scale.recip());
        out.push(Piece3 { p: [b.p[0].clone(), y0, b.p[1].clone()], d, iv });
    } else if da[0] == 0 && db[0] != 0 {
        let r = (&a.p[0] - &b.p[0]) / rint(db[0]);
        if b.iv.lo.as_ref().map_or(true, |x| x <= &r) && b.iv.hi.as_ref().map_or(true, |x| &r <= x) {
            let z = &b.p[1] + &r * rint(db[1]);
            let s = da[1].signum();
            out.push(Piece3 { p: [a.p[0].clone(), a.p[1].clone(), z], d: [0, s, 0], iv: a.iv.clone() });
        }
    } else if da[0] != 0 && db[0] == 0 {
        let s = (&b.p[0] - &a.p[0]) / rint(da[0]);
        if a.iv.lo.as_ref().map_or(true, |x| x <= &s) && a.iv.hi.as_ref().map_or(true, |x| &s <= x) {
            let y = &a.p[1] + &s * rint(da[1]);
            let k = db[1].signum();
            out.push(Piece3 { p: [b.p[0].clone(), y, b.p[1].clone()], d: [0, 0, k], iv: b.iv.clone() });
        }
    } else if a.p[0] == b.p[0] {
        // a vertical strip: cut it with the yz curve
        let yr = a.iv.preimage(&(-&a.p[1] / rint(da[1])), &rint(da[1]).recip());
        let zr = b.iv.preimage(&(-&b.p[1] / rint(db[1])), &rint(db[1]).recip());
        // yr, zr are now ranges of Y and Z
        for c in &yz.pieces {
            let mut iv = c.iv.clone();
            for (k, rng) in [(0usize, &yr), (1usize, &zr)] {
                if c.d[k] == 0 {
                    let v = &c.p[k];
                    let inside = rng.lo.as_ref().map_or(true, |x| x <= v) && rng.hi.as_ref().map_or(true, |x| v <= x);
                    if !inside {
                        iv = Iv { lo: Some(Rat::one()), hi: Some(Rat::zero()) };
                    }
                } else {
                    let pre = rng.preimage(&c.p[k], &rint(c.d[k]));
                    iv = iv.meet(&pre).unwrap_or(Iv { lo: Some(Rat::one()), hi: Some(Rat::zero()) });
                }
            }
            if iv.proper() {
                out.push(Piece3 { p: [a.p[0].clone(), c.p[0].clone(), c.p[1].clone()], d: [0, c.d[0], c.d[1]], iv });
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// reconstruction

/// The rebuilt space curve: vertices and edges with their supporting lines.
struct Space {
    vertices: Vec<[Rat; 3]>,
    /// (a, b, base, d, t_a, t_b) with the edge being base + t·d for t between t_a and t_b
    edges: Vec<(usize, Option<usize>, [Rat; 3], [i64; 3], Rat, Option<Rat>)>,
}

fn sub3(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn param_on(base: &[Rat; 3], d: &[i64; 3], q: &[Rat; 3]) -> Option<Rat> {
    let w = sub3(q, base);
    let k = d.iter().position(|&x| x != 0)?;
    let t = &w[k] / rint(d[k]);
    (0..3).all(|i| w[i] == &t * rint(d[i])).then_some(t)
}

fn build(kept: Vec<Piece3>) -> Space {
    // canonical lines
    let mut lines: BTreeMap<([i64; 3], [Rat; 3]), Vec<Iv>> = BTreeMap::new();
    for pc in kept {
        let mut d = pc.d;
        let k = d.iter().position(|&x| x != 0).unwrap();
        let mut iv = pc.iv.clone();
        if d[k] < 0 {
            d = d.map(|x| -x);
            iv = iv.preimage(&Rat::zero(), &rint(-1));
        }
        let tau = &pc.p[k] / rint(d[k]);
        let base = [0, 1, 2].map(|i| &pc.p[i] - &tau * rint(d[i]));
        // point = base + (tau + s)·d
        let iv = iv.preimage(&(-&tau), &Rat::one());
        lines.entry((d, base)).or_default().push(iv);
    }
    let lines: Vec<(([i64; 3], [Rat; 3]), Vec<Iv>)> = lines.into_iter().map(|(k, v)| (k, merge(v))).collect();
    let mut vset: BTreeMap<[Rat; 3], usize> = BTreeMap::new();
    let point = |base: &[Rat; 3], d: &[i64; 3], t: &Rat| [0, 1, 2].map(|i| &base[i] + t * rint(d[i]));
    let add = |vset: &mut BTreeMap<[Rat; 3], usize>, p: [Rat; 3]| {
        let n = vset.len();
        vset.entry(p).or_insert(n);
    };
    for ((d, base), ivs) in &lines {
        for iv in ivs {
            for t in iv.lo.iter().chain(iv.hi.iter()) {
                add(&mut vset, point(base, d, t));
            }
        }
    }
    // crossings in the interior of two pieces
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let ((d1, b1), iv1) = &lines[i];
            let ((d2, b2), iv2) = &lines[j];
            let n = [d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2], d1[0] * d2[1] - d1[1] * d2[0]];
            if n == [0, 0, 0] {
                continue;
            }
            let w = sub3(b2, b1);
            let wn = (0..3).fold(Rat::zero(), |acc, k| acc + &w[k] * rint(n[k]));
            if !wn.is_zero() {
                continue;
            }
            // t = ((w × d2) · n) / |n|²
            let wx = [&w[1] * rint(d2[2]) - &w[2] * rint(d2[1]), &w[2] * rint(d2[0]) - &w[0] * rint(d2[2]), &w[0] * rint(d2[1]) - &w[1] * rint(d2[0])];
            let num = (0..3).fold(Rat::zero(), |acc, k| acc + &wx[k] * rint(n[k]));
            let nn: i64 = n.iter().map(|x| x * x).sum();
            let t = num / rint(nn);
            let p = point(b1, d1, &t);
            let Some(s) = param_on(b2, d2, &p) else { continue };
            if iv1.iter().any(|iv| iv.contains_open(&t)) && iv2.iter().any(|iv| iv.contains_open(&s)) {
                add(&mut vset, p);
            }
        }
    }
    let mut vertices: Vec<[Rat; 3]> = vec![[Rat::zero(), Rat::zero(), Rat::zero()]; vset.len()];
    for (p, &i) in &vset {
        vertices[i] = p.clone();
    }
    // renumber lexicographically for determinism
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
    let mut pos = vec![0; order.len()];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let vertices: Vec<[Rat; 3]> = order.iter().map(|&i| vertices[i].clone()).collect();
    let index = |p: &[Rat; 3]| vertices.binary_search(p).ok();
    let mut edges = Vec::new();
    for ((d, base), ivs) in &lines {
        for iv in ivs {
            let mut ts: Vec<Rat> = vertices.iter().filter_map(|v| param_on(base, d, v)).filter(|t| {
                iv.lo.as_ref().map_or(true, |a| a <= t) && iv.hi.as_ref().map_or(true, |b| t <= b)
            }).collect();
            ts.sort();
            if ts.is_empty() {
                // a full line without vertices; the pushforward check will reject it
                continue;
            }
            let neg = [0, 1, 2].map(|i| -d[i]);
            if iv.lo.is_none() {
                let v = index(&point(base, d, &ts[0])).unwrap();
                edges.push((v, None, base.clone(), neg, -ts[0].clone(), None));
            }
            for w in ts.windows(2) {
                let a = index(&point(base, d, &w[0])).unwrap();
                let b = index(&point(base, d, &w[1])).unwrap();
                edges.push((a, Some(b), base.clone(), *d, w[0].clone(), Some(w[1].clone())));
            }
            if iv.hi.is_none() {
                let v = index(&point(base, d, ts.last().unwrap())).unwrap();
                edges.push((v, None, base.clone(), *d, ts.last().unwrap().clone(), None));
            }
        }
    }
    Space { vertices, edges }
}

/// Test points along an edge, interior and spread out.
fn test_params(t0: &Rat, t1: &Option<Rat>) -> Vec<Rat> {
    match t1 {
        Some(t1) => [6i64, 5, 7, 4, 8, 3, 9, 2, 10, 1, 11].iter().map(|&k| t0 + (t1 - t0) * Rat::new(k.into(), 12.into())).collect(),
        None => (1..=12i64).map(|k| t0 + Rat::new(k.into(), 5.into())).collect(),
    }
}

impl Space {
    fn pieces_without(&self, drop: &[usize]) -> Vec<Piece3> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(e, _)| !drop.contains(e))
            .map(|(_, (_, _, base, d, t0, t1))| Piece3 { p: base.clone(), d: *d, iv: Iv { lo: Some(t0.clone()), hi: t1.clone() } })
            .collect()
    }

    fn point(&self, e: usize, t: &Rat) -> [Rat; 3] {
        let (_, _, base, d, _, _) = &self.edges[e];
        [0, 1, 2].map(|i| &base[i] + t * rint(d[i]))
    }

    /// Does the image of edge e contain q in its relative interior? Err if q is the image of an endpoint.
    fn image_contains(&self, pr: &Proj, e: usize, q: &[Rat; 2]) -> std::result::Result<bool, ()> {
        let (a, b, base, d, t0, t1) = &self.edges[e];
        let pd = pr.dir(d);
        if pd == [0, 0] {
            return Ok(false);
        }
        if &pr.point(&self.vertices[*a]) == q || b.is_some_and(|b| &pr.point(&self.vertices[b]) == q) {
            return Err(());
        }
        let pb = pr.point(base);
        let w = [&q[0] - &pb[0], &q[1] - &pb[1]];
        if &w[0] * rint(pd[1]) != &w[1] * rint(pd[0]) {
            return Ok(false);
        }
        let s = if pd[0] != 0 { &w[0] / rint(pd[0]) } else { &w[1] / rint(pd[1]) };
        Ok(match t1 {
            Some(t1) => t0 < &s && &s < t1,
            None => {
                // rays run from t0 in the direction d (t increasing)
                t0 < &s
            }
        })
    }
}

fn gcd2(v: [i64; 2]) -> u64 {
    num_integer::Integer::gcd(&v[0], &v[1]).unsigned_abs()
}

/// One additive equation: mult = Σ weight_e · m_e.
struct Equation {
    proj: usize,
    mult: u64,
    terms: Vec<(usize, u64)>,
    dual: [[i64; 2]; 2],
}

/// Reads edge weights off the projections; weight 0 marks a candidate that is not on the curve.
fn infer(space: &Space, projs: &[Proj]) -> (Vec<Equation>, Vec<Option<u64>>, Vec<String>, Vec<Irregularity>) {
    let ne = space.edges.len();
    let mut conflicts = Vec::new();
    let mut irregularities = Vec::new();
    // observations, in the tie-breaking order xz, yz, generic, xy
    let order = [1usize, 2, 3, 0];
    let mut equations: Vec<Equation> = Vec::new();
    for e in 0..ne {
        let (_, _, _, d, t0, t1) = &space.edges[e];
        for &pi in &order {
            let pr = &projs[pi];
            let pd = pr.dir(d);
            if pd == [0, 0] {
                continue;
            }
            let mut found = None;
            'tries: for t in test_params(t0, t1) {
                let q = pr.point(&space.point(e, &t));
                if pr.is_vertex(&q) {
                    continue;
                }
                let mut terms = vec![(e, gcd2(pd))];
                for o in 0..ne {
                    if o == e {
                        continue;
                    }
                    match space.image_contains(pr, o, &q) {
                        Err(()) => continue 'tries,
                        Ok(false) => {}
                        Ok(true) => {
                            let od = pr.dir(&space.edges[o].3);
                            if od[0] * pd[1] != od[1] * pd[0] {
                                continue 'tries;
                            }
                            terms.push((o, gcd2(od)));
                        }
                    }
                }
                let (mult, dual) = pr.mult_at(&q);
                found = Some(Equation { proj: pi, mult, terms, dual });
                break;
            }
            match found {
                Some(eq) => equations.push(eq),
                None => irregularities.push(Irregularity {
                    kind: IrregularityKind::Crossing,
                    projection: pr.name.clone(),
                    detail: format!("no clean test point on the image of edge {e}"),
                }),
            }
        }
    }
    // solve: repeatedly use equations with one unknown
    let mut mult: Vec<Option<u64>> = vec![None; ne];
    loop {
        let mut progress = false;
        for eq in &equations {
            let unknown: Vec<&(usize, u64)> = eq.terms.iter().filter(|(o, _)| mult[*o].is_none()).collect();
            if unknown.len() != 1 {
                continue;
            }
            let (o, w) = *unknown[0];
            let known: u64 = eq.terms.iter().filter_map(|(k, w)| mult[*k].map(|m| m * w)).sum();
            if eq.mult < known || (eq.mult - known) % w != 0 {
                conflicts.push(format!(
                    "projection {} carries multiplicity {} where edge {o} would need a negative or fractional weight",
                    projs[eq.proj].name, eq.mult
                ));
                mult[o] = Some(0);
            } else {
                mult[o] = Some((eq.mult - known) / w);
            }
            progress = true;
        }
        if !progress {
            break;
        }
    }
    (equations, mult, conflicts, irregularities)
}

fn certify_space(g: &MPoly, f: &MPoly, genus: usize, txy: &TropCurve, plane: Option<Plane>) -> Result<Certificate> {
    let mut reasons: Vec<String> = Vec::new();
    let mut irregularities: Vec<Irregularity> = Vec::new();
    let plane = match plane {
        Some(p) => {
            validate_plane(&p, f)?;
            p
        }
        None => match FALLBACK_PLANES.iter().find(|p| validate_plane(p, f).is_ok()) {
            Some(p) => *p,
            None => {
                return Ok(Certificate {
                    verdict: Verdict::NotCertified,
                    reasons: vec!["no generic plane passed validation".into()],
                    plane: None,
                    vertices: vec![],
                    edges: vec![],
                    evidence: vec![],
                    skeleton: SkeletonReport::default(),
                    irregularities,
                })
            }
        },
    };
    let txz = tropical_curve(&tropicalize(&project_xz(g, f)?)?);
    let tyz = tropical_curve(&tropicalize(&project_yz(g, f)?)?);
    let tgen = tropical_curve(&tropicalize(&project_generic(g, f, &plane)?)?);
    let col = |j: usize| [plane[0][j], plane[1][j], plane[2][j]];
    let projs = [
        Proj { name: "xy".into(), m: [[1, 0, 0], [0, 1, 0]], pieces: pieces(txy) },
        Proj { name: "xz".into(), m: [[1, 0, 0], [0, 0, 1]], pieces: pieces(&txz) },
        Proj { name: "yz".into(), m: [[0, 1, 0], [0, 0, 1]], pieces: pieces(&tyz) },
        Proj { name: "generic".into(), m: [col(0), col(1)], pieces: pieces(&tgen) },
    ];
    // candidates from xy × xz, cut down by every projection
    let mut kept = Vec::new();
    for a in &projs[0].pieces {
        for b in &projs[1].pieces {
            for cand in lift(a, b, &projs[2]) {
                let mut ivs = vec![cand.iv.clone()];
                for pr in &projs {
                    ivs = meet_all(&ivs, &cand.preimage(pr));
                    if ivs.is_empty() {
                        break;
                    }
                }
                for iv in ivs {
                    kept.push(Piece3 { iv, ..cand.clone() });
                }
            }
        }
    }
    let mut space = build(kept);
    let mut rounds = 0;
    let (equations, mult) = loop {
        let (eqs, m, conflicts, irr) = infer(&space, &projs);
        let phantoms: Vec<usize> = (0..space.edges.len()).filter(|&e| m[e] == Some(0)).collect();
        if phantoms.is_empty() || !conflicts.is_empty() || rounds == 4 {
            reasons.extend(conflicts);
            irregularities.extend(irr);
            break (eqs, m);
        }
        for &e in &phantoms {
            let v = &space.vertices[space.edges[e].0];
            irregularities.push(Irregularity {
                kind: IrregularityKind::Overlap,
                projection: "all".into(),
                detail: format!("candidate through ({}, {}, {}) in direction {:?} carries weight 0 and is discarded", v[0], v[1], v[2], space.edges[e].3),
            });
        }
        space = build(space.pieces_without(&phantoms));
        rounds += 1;
    };
    let ne = space.edges.len();
    let mut evidence = Vec::new();
    for eq in &equations {
        let (e, w) = eq.terms[0];
        let shared: Vec<usize> = eq.terms[1..].iter().map(|t| t.0).collect();
        if w > 1 {
            irregularities.push(Irregularity {
                kind: IrregularityKind::PushforwardIndex,
                projection: projs[eq.proj].name.clone(),
                detail: format!("edge {e} maps with lattice index {w}"),
            });
        }
        if !shared.is_empty() {
            irregularities.push(Irregularity {
                kind: IrregularityKind::Overlap,
                projection: projs[eq.proj].name.clone(),
                detail: format!("edge {e} shares its image with edges {shared:?}"),
            });
        }
        let total: Option<u64> = eq.terms.iter().map(|(k, w)| mult[*k].map(|m| m * w)).sum();
        if total.is_some_and(|t| t != eq.mult) {
            reasons.push(format!("projection {}: weights above the image of edge {e} add up to {} instead of {}", projs[eq.proj].name, total.unwrap(), eq.mult));
        }
        evidence.push(EdgeEvidence { projection: projs[eq.proj].name.clone(), edge: e, multiplicity: eq.mult, index: w, dual: eq.dual, shared_with: shared });
    }
    let undetermined: Vec<usize> = (0..ne).filter(|&e| mult[e].is_none()).collect();
    if !undetermined.is_empty() {
        reasons.push(format!("multiplicities of edges {undetermined:?} are not determined by the projections"));
    }
    let m: Vec<u64> = mult.iter().map(|x| x.unwrap_or(0)).collect();
    // balancing
    let mut sums = vec![[0i64; 3]; space.vertices.len()];
    for (e, (a, b, _, d, _, _)) in space.edges.iter().enumerate() {
        for i in 0..3 {
            sums[*a][i] += m[e] as i64 * d[i];
            if let Some(b) = b {
                sums[*b][i] -= m[e] as i64 * d[i];
            }
        }
    }
    let unbalanced: Vec<usize> = (0..sums.len()).filter(|&v| sums[v] != [0, 0, 0]).collect();
    if !unbalanced.is_empty() {
        reasons.push(format!("reconstruction is not balanced at vertices {unbalanced:?}"));
    }
    // push forward and compare with every projection
    for pr in &projs {
        for (k, pc) in pr.pieces.iter().enumerate() {
            let t0 = pc.iv.lo.clone().unwrap_or_else(|| pc.iv.hi.clone().map(|h| h - Rat::from_integer(13.into())).unwrap_or_else(Rat::zero));
            let t1 = if pc.iv.lo.is_some() { pc.iv.hi.clone() } else { Some(t0.clone() + Rat::from_integer(13.into())) };
            let mut checked = false;
            'pts: for t in test_params(&t0, &t1) {
                let q = [&pc.p[0] + &t * rint(pc.d[0]), &pc.p[1] + &t * rint(pc.d[1])];
                let mut total = 0;
                for e in 0..ne {
                    match space.image_contains(pr, e, &q) {
                        Err(()) => continue 'pts,
                        Ok(true) => total += m[e] * gcd2(pr.dir(&space.edges[e].3)),
                        Ok(false) => {}
                    }
                }
                if total != pc.mult {
                    reasons.push(format!("projection {}: piece {k} has multiplicity {} but the reconstruction pushes forward {total}", pr.name, pc.mult));
                }
                checked = true;
                break;
            }
            if !checked {
                reasons.push(format!("projection {}: piece {k} could not be compared", pr.name));
            }
        }
        // vertex correspondences
        let images: Vec<[Rat; 2]> = space.vertices.iter().map(|v| pr.point(v)).collect();
        for (v, q) in images.iter().enumerate() {
            if !pr.is_vertex(q) && pr.mult_at(q).0 > 0 {
                irregularities.push(Irregularity {
                    kind: IrregularityKind::InteriorVertex,
                    projection: pr.name.clone(),
                    detail: format!("vertex {v} maps into the interior of an edge"),
                });
            }
        }
        let mut pv: Vec<[Rat; 2]> = pr.pieces.iter().flat_map(|pc| pc.ends()).collect();
        pv.sort();
        pv.dedup();
        for q in pv {
            if !images.contains(&q) {
                irregularities.push(Irregularity {
                    kind: IrregularityKind::Crossing,
                    projection: pr.name.clone(),
                    detail: format!("vertex ({}, {}) is a crossing of edge images", q[0], q[1]),
                });
            }
        }
    }
    let edges: Vec<SpaceEdge> = space
        .edges
        .iter()
        .enumerate()
        .map(|(e, (a, b, _, d, t0, t1))| SpaceEdge { a: *a, b: *b, direction: *d, length: t1.as_ref().map(|t1| t1 - t0), multiplicity: m[e] })
        .collect();
    let graph: Vec<(usize, Option<usize>, Option<Rat>, u64)> = edges.iter().map(|e| (e.a, e.b, e.length.clone(), e.multiplicity)).collect();
    let (skel, skel_reasons) = skeleton(space.vertices.len(), &graph, genus);
    reasons.extend(skel_reasons);
    irregularities.sort_by(|a, b| (a.kind, &a.projection, &a.detail).cmp(&(b.kind, &b.projection, &b.detail)));
    irregularities.dedup();
    Ok(Certificate {
        verdict: if reasons.is_empty() { Verdict::Faithful } else { Verdict::NotCertified },
        reasons,
        plane: Some(plane),
        vertices: space.vertices,
        edges,
        evidence,
        skeleton: skel,
        irregularities,
    })
}
