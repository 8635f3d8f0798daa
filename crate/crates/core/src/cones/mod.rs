//! Rational polyhedral cones in the space of β-valuations of a 3-theta.
//!
//! Coordinates are ordered (u₂, u₃₄, u₄, u₅₆, u₆, u₇) with uᵢ = val(βᵢ). In these
//! coordinates a curve y² = x(x − β₂²)(x − (β₄+β₃₄)²)(x − β₄²)(x − (β₆+β₅₆)²)(x − β₆²)(x + β₇²)
//! is a 3-theta exactly when u₇ < u₆ < u₅₆, u₆ < u₄ and u₄ < min(u₃₄, u₂), and the
//! leading term of a coefficient is the β-monomial of smallest valuation.

mod lp;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{rat, MPoly, Rat, RatFunc};
use crate::error::{Error, Result};
use crate::hyperelliptic::{HECurve, RootSpec};

pub const U2: usize = 0;
pub const U34: usize = 1;
pub const U4: usize = 2;
pub const U56: usize = 3;
pub const U6: usize = 4;
pub const U7: usize = 5;

pub const COORD_NAMES: [&str; 6] = ["u2", "u34", "u4", "u56", "u6", "u7"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rel {
    Lt,
    Le,
}

/// {u : a·u rel 0 for every row}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    #[serde(serialize_with = "ser_rows")]
    pub inequalities: Vec<(Vec<Rat>, Rel)>,
    pub label: String,
}

fn ser_rows<S: serde::Serializer>(rows: &[(Vec<Rat>, Rel)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for (a, rel) in rows {
        let lhs: Vec<String> = a.iter().map(|x| x.to_string()).collect();
        seq.serialize_element(&(lhs, rel))?;
    }
    seq.end()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WeightVector {
    #[serde(serialize_with = "crate::ser::rat_vec")]
    pub u: Vec<Rat>,
}

impl WeightVector {
    pub fn new(u: [Rat; 6]) -> Self {
        WeightVector { u: u.to_vec() }
    }

    pub fn from_ints(u: [i64; 6]) -> Self {
        WeightVector { u: u.iter().map(|&x| rat(x)).collect() }
    }

    pub fn scaled(&self, s: &Rat) -> Self {
        WeightVector { u: self.u.iter().map(|x| x * s).collect() }
    }

    /// ⟨u, a⟩ for an exponent vector a of a β-monomial.
    pub fn weight(&self, a: &[i64; 6]) -> Rat {
        self.u.iter().zip(a).fold(Rat::zero(), |acc, (x, &k)| acc + x * rat(k))
    }

    pub fn integer_entries(&self) -> Option<[i64; 6]> {
        let mut out = [0i64; 6];
        for (o, x) in out.iter_mut().zip(&self.u) {
            *o = crate::algebra::rat::to_i64(x)?;
        }
        Some(out)
    }
}

fn dot(a: &[Rat], u: &[Rat]) -> Rat {
    a.iter().zip(u).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

impl Cone {
    pub fn new(label: impl Into<String>, inequalities: Vec<(Vec<Rat>, Rel)>) -> Self {
        Cone { inequalities, label: label.into() }
    }

    pub fn dim(&self) -> usize {
        self.inequalities.first().map(|r| r.0.len()).unwrap_or(6)
    }

    fn split(&self) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
        let mut strict = Vec::new();
        let mut weak = Vec::new();
        for (a, rel) in &self.inequalities {
            match rel {
                Rel::Lt => strict.push(a.clone()),
                Rel::Le => weak.push(a.clone()),
            }
        }
        (strict, weak)
    }

    pub fn contains(&self, u: &WeightVector) -> bool {
        self.inequalities.iter().all(|(a, rel)| {
            let v = dot(a, &u.u);
            match rel {
                Rel::Lt => v.is_negative(),
                Rel::Le => !v.is_positive(),
            }
        })
    }

    /// Membership in the closure: every strict row relaxed to ≤.
    pub fn closure_contains(&self, u: &WeightVector) -> bool {
        self.inequalities.iter().all(|(a, _)| !dot(a, &u.u).is_positive())
    }

    pub fn intersect(&self, other: &Cone, label: impl Into<String>) -> Cone {
        let mut rows = self.inequalities.clone();
        rows.extend(other.inequalities.iter().cloned());
        Cone::new(label, rows)
    }

    pub fn with_row(&self, a: Vec<Rat>, rel: Rel) -> Cone {
        let mut c = self.clone();
        c.inequalities.push((a, rel));
        c
    }

    /// Some point of the cone, or None if the system is infeasible.
    pub fn witness(&self) -> Option<WeightVector> {
        let (strict, weak) = self.split();
        lp::homogeneous_witness(&strict, &weak, self.dim()).map(|u| WeightVector { u })
    }

    pub fn is_feasible(&self) -> bool {
        self.witness().is_some()
    }
}

/// Row a with a·u = Σ lhs − Σ rhs, read as "lhs < rhs".
fn less(lhs: &[(usize, i64)], rhs: &[(usize, i64)]) -> (Vec<Rat>, Rel) {
    let mut a = vec![Rat::zero(); 6];
    for &(i, k) in lhs {
        a[i] += rat(k);
    }
    for &(i, k) in rhs {
        a[i] -= rat(k);
    }
    (a, Rel::Lt)
}

fn flip((a, rel): (Vec<Rat>, Rel)) -> (Vec<Rat>, Rel) {
    (a.into_iter().map(|x| -x).collect(), rel)
}

/// The open cone of 3-theta valuations.
pub fn theta3_cone() -> Cone {
    Cone::new(
        "3-theta",
        vec![
            less(&[(U7, 1)], &[(U6, 1)]),
            less(&[(U6, 1)], &[(U56, 1)]),
            less(&[(U6, 1)], &[(U4, 1)]),
            less(&[(U4, 1)], &[(U34, 1)]),
            less(&[(U4, 1)], &[(U2, 1)]),
        ],
    )
}

/// Conditions for the x⁵-coefficient of the xz-projection, rows 1–4.
pub fn xz_number_conditions(i: usize) -> Vec<(Vec<Rat>, Rel)> {
    match i {
        1 => vec![less(&[(U6, 2)], &[(U56, 1), (U7, 1)]), less(&[(U56, 1)], &[(U4, 1)])],
        2 => vec![less(&[(U6, 2)], &[(U4, 1), (U7, 1)]), less(&[(U4, 1)], &[(U56, 1)])],
        3 => vec![less(&[(U56, 1), (U7, 1)], &[(U6, 2)]), less(&[(U56, 1)], &[(U4, 1)])],
        4 => vec![less(&[(U4, 1), (U7, 1)], &[(U6, 2)]), less(&[(U4, 1)], &[(U56, 1)])],
        _ => panic!("row {i} out of range"),
    }
}

/// Conditions for the x³-coefficient of the xz-projection, rows A–D.
pub fn xz_letter_conditions(l: char) -> Vec<(Vec<Rat>, Rel)> {
    match l {
        'A' => vec![less(&[(U4, 2)], &[(U34, 1), (U6, 1)]), less(&[(U34, 1)], &[(U2, 1)])],
        'B' => vec![less(&[(U4, 2)], &[(U2, 1), (U6, 1)]), less(&[(U2, 1)], &[(U34, 1)])],
        'C' => vec![less(&[(U34, 1), (U6, 1)], &[(U4, 2)]), less(&[(U34, 1)], &[(U2, 1)])],
        'D' => vec![less(&[(U2, 1), (U6, 1)], &[(U4, 2)]), less(&[(U2, 1)], &[(U34, 1)])],
        _ => panic!("row {l} out of range"),
    }
}

pub const LETTERS: [char; 4] = ['A', 'B', 'C', 'D'];

/// The 16 maximal cones C_{iL} of the xz-projection inside the 3-theta cone.
pub fn xz_cones() -> Vec<Cone> {
    let base = theta3_cone();
    let mut out = Vec::new();
    for i in 1..=4 {
        for l in LETTERS {
            let mut rows = base.inequalities.clone();
            rows.extend(xz_number_conditions(i));
            rows.extend(xz_letter_conditions(l));
            out.push(Cone::new(format!("C_{{{i}{l}}}"), rows));
        }
    }
    out
}

/// Parses "C_{2D}" (possibly followed by a refinement suffix) into (2, 'D').
pub fn parse_label(label: &str) -> Option<(usize, char)> {
    let rest = label.strip_prefix("C_{")?;
    let mut ch = rest.chars();
    let i = ch.next()?.to_digit(10)? as usize;
    let l = ch.next()?;
    (ch.next()? == '}' && (1..=4).contains(&i) && LETTERS.contains(&l)).then_some((i, l))
}

/// The five dominance conditions in their "<" orientation, with min and max of
/// (u₂, u₃₄) resolved by the letter of the cone.
pub fn dominance_conditions(letter: char) -> Vec<(&'static str, (Vec<Rat>, Rel))> {
    let (lo, hi) = if matches!(letter, 'A' | 'C') { (U34, U2) } else { (U2, U34) };
    vec![
        ("alpha", less(&[(U4, 2)], &[(lo, 1), (U56, 1)])),
        ("beta", less(&[(hi, 1), (U56, 1)], &[(lo, 1), (U6, 1)])),
        ("gamma", less(&[(lo, 1), (U4, 1)], &[(hi, 1), (U56, 1)])),
        ("delta", less(&[(lo, 1), (U6, 2)], &[(U4, 2), (U7, 1)])),
        ("phi", less(&[(U4, 2)], &[(U56, 1), (U6, 1)])),
    ]
}

/// Refines a maximal cone by the dominance conditions. Cones with u₅₆ < u₄ are
/// returned unchanged; for the others every condition that actually cuts the cone
/// splits it, and the label records the chosen side.
pub fn dominance_refinement(c: &Cone) -> Vec<Cone> {
    let Some((i, l)) = parse_label(&c.label) else {
        return vec![c.clone()];
    };
    if i == 1 || i == 3 {
        return vec![c.clone()];
    }
    let mut pieces: Vec<(Cone, Vec<String>)> = vec![(c.clone(), Vec::new())];
    for (name, row) in dominance_conditions(l) {
        let mut next = Vec::new();
        for (piece, tags) in pieces {
            let lt = piece.with_row(row.0.clone(), Rel::Lt);
            let gt = { let (a, r) = flip(row.clone()); piece.with_row(a, r) };
            match (lt.is_feasible(), gt.is_feasible()) {
                (true, true) => {
                    next.push((lt, [tags.clone(), vec![format!("{name}<")]].concat()));
                    next.push((gt, [tags, vec![format!("{name}>")]].concat()));
                }
                (true, false) => next.push((piece, tags)),
                (false, true) => next.push((piece, tags)),
                (false, false) => {}
            }
        }
        pieces = next;
    }
    pieces
        .into_iter()
        .map(|(mut p, tags)| {
            if !tags.is_empty() {
                p.label = format!("{}[{}]", c.label, tags.join(","));
            }
            p
        })
        .collect()
}

/// All refined cones, in label order of their parents.
pub fn refined_cones() -> Vec<Cone> {
    xz_cones().iter().flat_map(dominance_refinement).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub labels: Vec<String>,
    pub note: Option<String>,
}

/// Labels of every refined cone whose closure contains u. Points on walls report
/// all adjacent cones.
pub fn classify_weight(u: &WeightVector) -> Classification {
    if !theta3_cone().closure_contains(u) {
        return Classification { labels: vec![], note: Some("not a 3-theta: valuation conditions fail".into()) };
    }
    let labels = refined_cones().into_iter().filter(|c| c.closure_contains(u)).map(|c| c.label).collect();
    Classification { labels, note: None }
}

/// A deterministic point in the interior of `c`: the average of the extreme points
/// of the box-bounded slice shrunk halfway towards its deepest layer.
pub fn sample_point(c: &Cone) -> Result<WeightVector> {
    let n = c.dim();
    let (strict, weak) = c.split();
    // variables (u, s); rows a·u + s ≤ 0 for strict a, a·u ≤ 0 for weak a, |u_k| ≤ 1, s ≤ 1
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let ext = |a: &[Rat], s: Rat| {
        let mut v = a.to_vec();
        v.push(s);
        v
    };
    for a in &strict {
        rows.push((ext(a, Rat::one()), Rat::zero()));
    }
    for a in &weak {
        rows.push((ext(a, Rat::zero()), Rat::zero()));
    }
    for k in 0..n {
        let mut e = vec![Rat::zero(); n + 1];
        e[k] = Rat::one();
        rows.push((e.clone(), Rat::one()));
        e[k] = -Rat::one();
        rows.push((e, Rat::one()));
    }
    let mut top = vec![Rat::zero(); n + 1];
    top[n] = Rat::one();
    rows.push((top.clone(), Rat::one()));
    let depth = match lp::maximize(&top, &rows) {
        lp::Lp::Optimal(_, v) if v.is_positive() || strict.is_empty() => v,
        _ => return Err(Error::Infeasible(format!("cone {} has empty interior", c.label))),
    };
    let mut floor = vec![Rat::zero(); n + 1];
    floor[n] = -Rat::one();
    rows.push((floor, -(depth / rat(2))));
    let mut sum = vec![Rat::zero(); n];
    let mut count = 0;
    for k in 0..n {
        for sign in [1, -1] {
            let mut obj = vec![Rat::zero(); n + 1];
            obj[k] = rat(sign);
            if let lp::Lp::Optimal(x, _) = lp::maximize(&obj, &rows) {
                for (s, v) in sum.iter_mut().zip(&x) {
                    *s += v;
                }
                count += 1;
            }
        }
    }
    let u: Vec<Rat> = sum.into_iter().map(|s| s / rat(count)).collect();
    Ok(WeightVector { u })
}

/// A small integer point in the interior, found by rounding multiples of the sample
/// point; falls back to clearing denominators. If the cone contains the all-ones
/// line (every row has coefficient sum zero, as for all cones built here) the point
/// is translated along it so that its smallest entry is 0.
pub fn integer_point(c: &Cone) -> Result<WeightVector> {
    let p = sample_point(c)?;
    let q = (1..=1000i64)
        .map(|n| WeightVector { u: p.u.iter().map(|x| (x * rat(n)).round()).collect() })
        .find(|q| c.contains(q))
        .unwrap_or_else(|| p.scaled(&Rat::from_integer(crate::algebra::rat::lcm_denoms(&p.u))));
    let balanced = c.inequalities.iter().all(|(a, _)| a.iter().fold(Rat::zero(), |s, x| s + x).is_zero());
    if !balanced {
        return Ok(q);
    }
    let m = q.u.iter().min().cloned().unwrap_or_else(Rat::zero);
    Ok(WeightVector { u: q.u.iter().map(|x| x - &m).collect() })
}

/// Indices m for which some u in the interior of `c` has ⟨u, a_m⟩ ≤ ⟨u, a_m'⟩ for all m'.
pub fn leading_terms_over_cone(exponents: &[[i64; 6]], c: &Cone) -> BTreeSet<usize> {
    leading_term_witnesses(exponents, c).into_keys().collect()
}

/// As `leading_terms_over_cone`, with an interior point for each index.
pub fn leading_term_witnesses(exponents: &[[i64; 6]], c: &Cone) -> BTreeMap<usize, WeightVector> {
    let mut out = BTreeMap::new();
    for (m, am) in exponents.iter().enumerate() {
        let mut cone = c.clone();
        for (k, ak) in exponents.iter().enumerate() {
            if k != m && ak != am {
                cone.inequalities.push(((0..6).map(|i| rat(am[i] - ak[i])).collect(), Rel::Le));
            }
        }
        if let Some(u) = cone.witness() {
            out.insert(m, u);
        }
    }
    out
}

/// βᵢ = cᵢ·t^{uᵢ}; u must have integer entries.
pub fn instantiate_beta(u: &WeightVector, coeffs: &[Rat]) -> Result<Vec<RatFunc>> {
    if coeffs.len() != 6 || u.u.len() != 6 {
        return Err(Error::domain("expected six weights and six coefficients"));
    }
    if coeffs.iter().any(|c| c.is_zero()) {
        return Err(Error::domain("coefficients must be nonzero"));
    }
    let ints = u.integer_entries().ok_or_else(|| Error::ScalingRequired(format!("weight vector {:?} has non-integer entries; multiply by the lcm of its denominators", u.u.iter().map(|x| x.to_string()).collect::<Vec<_>>())))?;
    Ok(ints.iter().zip(coeffs).map(|(&k, c)| RatFunc::monomial(c.clone(), k)).collect())
}

/// The 3-theta curve with roots β₂², (β₄+β₃₄)², β₄², (β₆+β₅₆)², β₆², −β₇².
pub fn theta3_curve(beta: &[RatFunc]) -> Result<HECurve> {
    let sq = |b: RatFunc, sign| RootSpec::Square { beta: b, sign };
    HECurve::new(vec![
        sq(beta[U2].clone(), 1),
        sq(&beta[U4] + &beta[U34], 1),
        sq(beta[U4].clone(), 1),
        sq(&beta[U6] + &beta[U56], 1),
        sq(beta[U6].clone(), 1),
        sq(beta[U7].clone(), -1),
    ])
}

/// y − β₄(β₃₄+β₄)β₆(β₆+β₅₆)β₇·x + β₆(β₆+β₅₆)β₇·x² − β₇·x³.
pub fn theta3_reembedding(beta: &[RatFunc]) -> MPoly {
    let b3 = &beta[U4] + &beta[U34];
    let b5 = &beta[U6] + &beta[U56];
    let c2 = &(&beta[U6] * &b5) * &beta[U7];
    let c1 = &(&beta[U4] * &b3) * &c2;
    let vars = vec!["x".to_string(), "y".to_string()];
    MPoly::from_terms(
        vars,
        [(vec![0, 1], RatFunc::one()), (vec![1, 0], -c1), (vec![2, 0], c2), (vec![3, 0], -beta[U7].clone())],
    )
}

/// Candidate leading β-monomials of the x⁵ coefficient of the xz-projection, in
/// the order β₆⁴, β₅₆²β₇², β₄²β₇², and the row of the table each one leads in.
pub const XZ_X5_TERMS: [[i64; 6]; 3] = [[0, 0, 0, 0, 4, 0], [0, 0, 0, 2, 0, 2], [0, 0, 2, 0, 0, 2]];

/// Candidates for x³: β₂²β₆⁴β₇², β₃₄²β₆⁴β₇², β₄⁴β₆²β₇².
pub const XZ_X3_TERMS: [[i64; 6]; 3] = [[2, 0, 0, 0, 4, 2], [0, 2, 0, 0, 4, 2], [0, 0, 4, 0, 2, 2]];

/// Index into XZ_X5_TERMS expected to lead on row i.
pub fn expected_x5(i: usize) -> usize {
    match i {
        1 | 2 => 0,
        3 => 1,
        _ => 2,
    }
}

/// Index into XZ_X3_TERMS expected to lead on row L.
pub fn expected_x3(l: char) -> usize {
    match l {
        'D' => 0,
        'C' => 1,
        _ => 2,
    }
}

/// Candidate leading β-monomials of the yz-projection coefficients: each entry
/// lists monomials y^i z^j sharing the same candidates.
pub struct YzRow {
    pub monomials: &'static [(u32, u32)],
    pub terms: &'static [[i64; 6]],
}

pub fn yz_leading_table() -> Vec<YzRow> {
    vec![
        YzRow { monomials: &[(7, 0), (6, 1), (5, 2), (4, 3), (3, 4), (2, 5), (1, 6), (0, 7)], terms: &[[0, 0, 0, 0, 0, 0]] },
        YzRow { monomials: &[(6, 0)], terms: &[[0, 0, 2, 0, 2, 3], [0, 0, 0, 2, 2, 3]] },
        YzRow { monomials: &[(5, 1)], terms: &[[0, 0, 2, 0, 0, 5], [0, 0, 0, 2, 0, 5]] },
        YzRow { monomials: &[(4, 2)], terms: &[[0, 0, 0, 0, 2, 5]] },
        YzRow { monomials: &[(3, 3), (2, 4), (1, 5), (0, 6)], terms: &[[0, 0, 0, 0, 0, 7]] },
        YzRow { monomials: &[(5, 0)], terms: &[[0, 0, 0, 2, 8, 4], [0, 0, 6, 0, 0, 8], [0, 0, 0, 6, 0, 8]] },
        YzRow { monomials: &[(4, 1)], terms: &[[0, 0, 0, 2, 6, 6], [0, 0, 4, 0, 2, 8], [0, 0, 0, 4, 2, 8]] },
        YzRow { monomials: &[(3, 2), (2, 3), (1, 4), (0, 5)], terms: &[[0, 0, 2, 0, 4, 8], [0, 0, 0, 2, 4, 8]] },
        YzRow {
            monomials: &[(4, 0)],
            terms: &[[0, 2, 0, 2, 10, 7], [2, 0, 0, 2, 10, 7], [0, 2, 0, 4, 6, 9], [2, 0, 0, 4, 6, 9], [0, 0, 4, 2, 6, 9]],
        },
        YzRow { monomials: &[(3, 1)], terms: &[[0, 0, 2, 2, 8, 9]] },
        YzRow { monomials: &[(2, 2), (1, 3), (0, 4)], terms: &[[0, 0, 0, 2, 10, 9]] },
        YzRow { monomials: &[(3, 0)], terms: &[[4, 0, 0, 2, 12, 10], [0, 4, 0, 2, 12, 10], [2, 0, 4, 2, 10, 10], [0, 2, 4, 2, 10, 10]] },
        YzRow { monomials: &[(2, 1), (1, 2), (0, 3)], terms: &[[2, 0, 2, 2, 12, 10], [0, 2, 2, 2, 12, 10]] },
        YzRow {
            monomials: &[(2, 0)],
            terms: &[[2, 2, 4, 2, 14, 11], [4, 0, 4, 4, 12, 11], [0, 4, 4, 4, 12, 11], [2, 0, 8, 2, 12, 11], [0, 2, 8, 2, 12, 11]],
        },
        YzRow { monomials: &[(1, 1), (0, 2)], terms: &[[0, 2, 6, 2, 14, 11]] },
        YzRow {
            monomials: &[(1, 0), (0, 1)],
            terms: &[
                [2, 2, 8, 2, 16, 12],
                [4, 0, 8, 4, 14, 12],
                [0, 4, 8, 4, 14, 12],
                [2, 2, 12, 0, 14, 12],
                [4, 0, 10, 2, 14, 12],
                [0, 4, 10, 2, 14, 12],
            ],
        },
    ]
}

/// Looks a cone up by label among the 3-theta cone, the row cones C_{i} and C_{L},
/// the 16 maximal cones and their refinements.
pub fn cone_by_label(label: &str) -> Option<Cone> {
    let t = theta3_cone();
    if label == t.label {
        return Some(t);
    }
    let single = label.strip_prefix("C_{").and_then(|r| r.strip_suffix('}')).filter(|r| r.chars().count() == 1);
    if let Some(c) = single.and_then(|r| r.chars().next()) {
        let rows = match c {
            '1'..='4' => xz_number_conditions(c.to_digit(10).unwrap() as usize),
            'A'..='D' => xz_letter_conditions(c),
            _ => return None,
        };
        let mut all = t.inequalities;
        all.extend(rows);
        return Some(Cone::new(label, all));
    }
    let maximal = xz_cones();
    if let Some(c) = maximal.iter().find(|c| c.label == label) {
        return Some(c.clone());
    }
    maximal.iter().flat_map(dominance_refinement).find(|c| c.label == label)
}

/// Observed valuation of one yz-coefficient against the smallest candidate weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffComparison {
    pub monomial: [u32; 2],
    /// val of the coefficient minus val of the y⁷ coefficient
    pub observed: Option<i64>,
    #[serde(serialize_with = "crate::ser::rat")]
    pub predicted: Rat,
    /// indices into the candidate list attaining the minimum at u
    pub attained_by: Vec<usize>,
}

impl CoeffComparison {
    pub fn degree(&self) -> u32 {
        self.monomial[0] + self.monomial[1]
    }

    pub fn agrees(&self) -> bool {
        self.observed.map(|k| rat(k) == self.predicted).unwrap_or(false)
    }
}

/// Compares the coefficients of a yz-projection in the ring [y, z] with the
/// candidate table at the weight vector u it was instantiated from.
pub fn compare_yz_table(u: &WeightVector, yz: &MPoly) -> Vec<CoeffComparison> {
    let base = yz.coeff(&[7, 0]).val();
    let mut out = Vec::new();
    for row in yz_leading_table() {
        let ws: Vec<Rat> = row.terms.iter().map(|a| u.weight(a)).collect();
        let min = ws.iter().min().cloned().unwrap_or_else(Rat::zero);
        let attained_by = (0..ws.len()).filter(|&k| ws[k] == min).collect::<Vec<_>>();
        for &(i, j) in row.monomials {
            let observed = match (yz.coeff(&[i as i32, j as i32]).val(), base) {
                (Some(v), Some(b)) => Some(v - b),
                _ => None,
            };
            out.push(CoeffComparison { monomial: [i, j], observed, predicted: min.clone(), attained_by: attained_by.clone() });
        }
    }
    out
}
