//! Re-embedding polynomials f = y − h(x) for genus-carrying blocks and their combination.

use std::collections::BTreeMap;

use serde::Serialize;

use super::blocks::{detect_blocks, BlockKind, BuildingBlock};
use super::HECurve;
use crate::algebra::{MPoly, RatFunc};
use crate::error::{Error, Result};
use crate::tropical::{tropical_curve, tropicalize};

#[derive(Clone, Debug, Serialize)]
pub struct ReembedPlan {
    pub blocks: Vec<BuildingBlock>,
    #[serde(serialize_with = "ser_polys")]
    pub fs: Vec<MPoly>,
    pub new_vars: Vec<String>,
    #[serde(serialize_with = "ser_polys")]
    pub generators: Vec<MPoly>,
    /// remarks on square-root signs and combination choices
    pub notes: Vec<String>,
}

fn ser_polys<S: serde::Serializer>(v: &[MPoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&v.iter().map(|p| p.to_string()).collect::<Vec<_>>(), s)
}

fn xy() -> Vec<String> {
    vec!["x".to_string(), "y".to_string()]
}

/// Product of the roots at positions `from..=2g+1`.
fn tail_product(c: &HECurve, from: usize) -> RatFunc {
    let order = c.valuation_order();
    let mut p = RatFunc::one();
    for (pos, &i) in order.iter().enumerate() {
        if pos + 2 >= from {
            p = &p * &c.roots[i].value();
        }
    }
    p
}

fn block_poly(b: &BuildingBlock, c: &HECurve, notes: &mut Vec<String>) -> Result<MPoly> {
    let ks = b.double_edges();
    if ks.is_empty() {
        return Err(Error::Construction(format!("{:?} carries no genus and needs no re-embedding", b.kind)));
    }
    let mut f = MPoly::var_in(xy(), "y")?;
    for (j, &k) in ks.iter().enumerate() {
        let prod = tail_product(c, k + 1);
        let a = match (-prod.clone()).sqrt() {
            Ok(a) => a,
            Err(_) => {
                let a = prod.sqrt().map_err(|e| Error::NotASquare(format!("coefficient of x^{}: {e}", k / 2)))?;
                notes.push(format!(
                    "x^{}: -({prod}) is not a square in Q(t); used sqrt({prod}) = {a} instead, which has the right valuation but cannot cancel the initial form",
                    k / 2
                ));
                a
            }
        };
        // alternating signs inside a block: y - a1 x + a2 x^2 - a3 x^3
        let a = if j % 2 == 0 { -a } else { a };
        f = &f + &MPoly::monomial_in(xy(), vec![(k / 2) as i32, 0], a);
    }
    check_pass_through(&f, b, c)?;
    Ok(f)
}

/// trop(f) must contain every multiplicity-two edge y² - x^k of the block in trop(g).
fn check_pass_through(f: &MPoly, b: &BuildingBlock, c: &HECurve) -> Result<()> {
    let tg = tropicalize(&c.g_poly)?;
    let tf = tropicalize(f)?;
    let curve = tropical_curve(&tg);
    for k in b.double_edges() {
        let dual = [[0i64, 2], [k as i64, 0]];
        let e = curve
            .edges
            .iter()
            .find(|e| e.dual == dual || e.dual == [dual[1], dual[0]])
            .ok_or_else(|| Error::Construction(format!("trop(g) has no edge dual to y^2 -- x^{k}")))?;
        for v in [e.a, e.b] {
            let p = &curve.vertices[v];
            let am = tf.argmin(&[p[0].clone(), p[1].clone()]);
            let need = [vec![0, 1], vec![(k / 2) as i32, 0]];
            if !need.iter().all(|m| am.contains(&m)) {
                return Err(Error::Construction(format!(
                    "trop(f) misses the multiplicity-two edge dual to y^2 -- x^{k} at ({}, {})",
                    p[0], p[1]
                )));
            }
        }
    }
    Ok(())
}

/// Re-embedding polynomial y − h(x) for one genus-carrying block.
pub fn reembedding_for_block(b: &BuildingBlock, c: &HECurve) -> Result<MPoly> {
    block_poly(b, c, &mut Vec::new())
}

/// Merges y − h₁, y − h₂, … into y − h₁ − h₂ − ….
pub fn combine_reembeddings(fs: &[MPoly], _c: &HECurve) -> Result<MPoly> {
    let mut h: BTreeMap<i32, RatFunc> = BTreeMap::new();
    for f in fs {
        let f = f.in_ring(&xy())?;
        if f.coeff(&[0, 1]) != RatFunc::one() {
            return Err(Error::Combination(format!("{f} is not of the form y - h(x)")));
        }
        for (e, a) in f.terms() {
            if *e == vec![0, 1] {
                continue;
            }
            if e[1] != 0 || e[0] < 0 {
                return Err(Error::Combination(format!("{f} is not of the form y - h(x)")));
            }
            if h.insert(e[0], a.clone()).is_some() {
                return Err(Error::Combination(format!("supports overlap at x^{}", e[0])));
            }
        }
    }
    if h.keys().any(|&k| k > 7) {
        return Err(Error::Combination("combined polynomial exceeds degree 7 in x".into()));
    }
    let mut f = MPoly::var_in(xy(), "y")?;
    for (k, a) in h {
        f = &f + &MPoly::monomial_in(xy(), vec![k, 0], a);
    }
    Ok(f)
}

/// Detects blocks and builds the generators ⟨g, z₁ − f₁, …⟩.
pub fn reembedding_plan(c: &HECurve, combine: bool) -> Result<ReembedPlan> {
    let blocks = detect_blocks(c)?;
    let mut notes = Vec::new();
    let mut fs = Vec::new();
    for b in blocks.iter().filter(|b| b.kind.genus() > 0) {
        fs.push(block_poly(b, c, &mut notes)?);
    }
    let only_bridges = blocks.iter().filter(|b| b.kind.is_connector()).all(|b| b.kind == BlockKind::Bridge);
    if combine && fs.len() > 1 {
        if only_bridges {
            fs = vec![combine_reembeddings(&fs, c)?];
        } else {
            notes.push("blocks are joined by a point connector; kept one polynomial per block".into());
        }
    }
    let new_vars: Vec<String> = if fs.len() == 1 { vec!["z".to_string()] } else { (1..=fs.len()).map(|i| format!("z{i}")).collect() };
    let mut ring = xy();
    ring.extend(new_vars.iter().cloned());
    let mut generators = vec![c.g_poly.in_ring(&ring)?];
    for (f, z) in fs.iter().zip(&new_vars) {
        let zf = &MPoly::var_in(ring.clone(), z)? - &f.in_ring(&ring)?;
        generators.push(zf);
    }
    Ok(ReembedPlan { blocks, fs, new_vars, generators, notes })
}
