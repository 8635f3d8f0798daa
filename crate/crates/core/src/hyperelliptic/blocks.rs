//! Building-block decomposition from root valuations and initial coefficients.
//!
//! Roots sit at positions 2, …, 2g+1 in order of decreasing valuation. Position 1 is the
//! root 0 (valuation +∞) and position 2g+2 stands for the leading term (valuation −∞).

use serde::Serialize;

use super::HECurve;
use crate::algebra::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockKind {
    ThreeTheta,
    TwoTheta,
    Cycle,
    KPoint(usize),
    Bridge,
    PointConnector,
}

impl BlockKind {
    pub fn genus(&self) -> usize {
        match self {
            BlockKind::ThreeTheta => 3,
            BlockKind::TwoTheta => 2,
            BlockKind::Cycle => 1,
            _ => 0,
        }
    }

    pub fn is_connector(&self) -> bool {
        matches!(self, BlockKind::Bridge | BlockKind::PointConnector)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuildingBlock {
    pub kind: BlockKind,
    /// the i of "subgraph at x^i"
    pub start_index: usize,
    /// positions of the roots involved, inclusive
    pub involved_roots: (usize, usize),
}

impl BuildingBlock {
    /// Even exponents k whose edge from y² to x^k has multiplicity two inside this block.
    pub fn double_edges(&self) -> Vec<usize> {
        let p = self.start_index;
        match self.kind {
            BlockKind::Cycle => vec![p + 1],
            BlockKind::TwoTheta => vec![p + 1, p + 3],
            BlockKind::ThreeTheta => vec![p + 1, p + 3, p + 5],
            _ => Vec::new(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum W {
    NegInf,
    Fin(i64),
    PosInf,
}

struct Data {
    w: Vec<W>,
    init: Vec<Option<Rat>>,
    n: usize,
}

impl Data {
    fn new(c: &HECurve) -> Data {
        let n = 2 * c.genus + 1;
        let mut w = vec![W::NegInf; n + 3];
        let mut init = vec![None; n + 3];
        w[1] = W::PosInf;
        for (p, i) in c.valuation_order().into_iter().enumerate() {
            let v = c.roots[i].value();
            w[p + 2] = W::Fin(v.val().unwrap());
            init[p + 2] = Some(v.initial_coeff().unwrap());
        }
        Data { w, init, n }
    }

    fn gt(&self, a: usize, b: usize) -> bool {
        self.w[a] > self.w[b]
    }

    /// Equal valuation and equal initial coefficient.
    fn same(&self, a: usize, b: usize) -> bool {
        self.w[a] == self.w[b] && matches!(self.w[a], W::Fin(_)) && self.init[a] == self.init[b]
    }

    /// Equal valuation but distinct initial coefficients.
    fn apart(&self, a: usize, b: usize) -> bool {
        self.w[a] == self.w[b] && matches!(self.w[a], W::Fin(_)) && self.init[a] != self.init[b]
    }
}

fn block(kind: BlockKind, start: usize, lo: usize, hi: usize) -> BuildingBlock {
    BuildingBlock { kind, start_index: start, involved_roots: (lo, hi) }
}

/// Tries a genus-carrying block at odd position p; `relaxed` drops the first strict inequality
/// (the block is entered through a point connector).
fn genus_block(d: &Data, p: usize, relaxed: bool) -> Option<(BuildingBlock, usize)> {
    let n = d.n;
    let first = relaxed || d.gt(p, p + 1);
    if !first {
        return None;
    }
    if p == 1 && n == 7 && d.gt(2, 3) && d.same(3, 4) && d.gt(4, 5) && d.same(5, 6) && d.gt(6, 7) {
        return Some((block(BlockKind::ThreeTheta, 1, 2, 7), 7));
    }
    if p + 4 <= n && d.gt(p + 1, p + 2) && d.same(p + 2, p + 3) && d.gt(p + 3, p + 4) && d.gt(p + 4, p + 5) {
        return Some((block(BlockKind::TwoTheta, p, p + 1, p + 4), p + 4));
    }
    if p + 2 <= n && d.gt(p + 1, p + 2) {
        return Some((block(BlockKind::Cycle, p, p + 1, p + 2), p + 2));
    }
    None
}

fn describe(d: &Data, p: usize) -> String {
    let show = |i: usize| match d.w[i] {
        W::PosInf => "+inf".to_string(),
        W::NegInf => "-inf".to_string(),
        W::Fin(v) => v.to_string(),
    };
    let window: Vec<String> = (p..=(p + 3).min(d.n + 1)).map(|i| format!("w{i}={}", show(i))).collect();
    format!("no building block matches at x^{p}: {}", window.join(", "))
}

/// Ordered decomposition into blocks and connectors.
pub fn detect_blocks(c: &HECurve) -> Result<Vec<BuildingBlock>> {
    let d = Data::new(c);
    let n = d.n;
    let mut out: Vec<BuildingBlock> = Vec::new();
    let mut p = 1;
    let mut relaxed = false;
    while p < n {
        if let Some((b, e)) = genus_block(&d, p, relaxed) {
            out.push(b);
            relaxed = false;
            p = e;
            if e < n {
                if d.gt(e - 1, e) && d.gt(e, e + 1) {
                    out.push(block(BlockKind::Bridge, e, e, e));
                } else if d.apart(e, e + 1) {
                    out.push(block(BlockKind::PointConnector, e, e, e + 1));
                    relaxed = true;
                } else {
                    return Err(Error::UnsupportedStratum(describe(&d, e)));
                }
            }
            continue;
        }
        if !relaxed && d.gt(p, p + 1) {
            // run of equal valuations with pairwise distinct initials
            let mut q = p + 1;
            while q < n && d.w[q + 1] == d.w[p + 1] {
                q += 1;
            }
            let len = q - p;
            let distinct = (p + 1..=q).all(|a| (a + 1..=q).all(|b| d.init[a] != d.init[b]));
            if len >= 2 && len % 2 == 0 && distinct && d.gt(q, q + 1) {
                out.push(block(BlockKind::KPoint(len / 2), p, p + 1, q));
                p = q;
                continue;
            }
        }
        return Err(Error::UnsupportedStratum(describe(&d, p)));
    }
    Ok(out)
}
