//! Hyperelliptic curves y² = x·∏(x − αᵢ) of genus at most three.

mod blocks;
mod jinv;
mod reembed;

use serde::Serialize;

use crate::algebra::{MPoly, RatFunc};
use crate::error::{Error, Result};

pub use blocks::{detect_blocks, BlockKind, BuildingBlock};
pub use jinv::{aronhold_invariants, j_invariant_cubic};
pub use reembed::{combine_reembeddings, reembedding_for_block, reembedding_plan, ReembedPlan};

/// A nonzero root, either given directly or as sign·β².
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSpec {
    Value(RatFunc),
    Square { beta: RatFunc, sign: i8 },
}

impl RootSpec {
    pub fn value(&self) -> RatFunc {
        match self {
            RootSpec::Value(v) => v.clone(),
            RootSpec::Square { beta, sign } => {
                let b2 = beta * beta;
                if *sign < 0 {
                    -b2
                } else {
                    b2
                }
            }
        }
    }

    pub fn val(&self) -> i64 {
        self.value().val().expect("nonzero root")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HECurve {
    pub genus: usize,
    pub roots: Vec<RootSpec>,
    pub g_poly: MPoly,
}

impl HECurve {
    /// Builds the curve from its 2g nonzero roots; the root 0 is implicit.
    pub fn new(roots: Vec<RootSpec>) -> Result<Self> {
        if roots.is_empty() || roots.len() % 2 != 0 || roots.len() > 6 {
            return Err(Error::domain(format!("expected 2, 4 or 6 nonzero roots, got {}", roots.len())));
        }
        let vals: Vec<RatFunc> = roots.iter().map(|r| r.value()).collect();
        for (i, v) in vals.iter().enumerate() {
            if v.is_zero() {
                return Err(Error::domain(format!("root {} is zero", i + 2)));
            }
            if let Some(j) = vals[..i].iter().position(|w| w == v) {
                return Err(Error::DuplicateRoot(format!("roots {} and {} coincide ({v})", j + 2, i + 2)));
            }
        }
        let g_poly = hyperelliptic_poly(&vals);
        Ok(HECurve { genus: roots.len() / 2, roots, g_poly })
    }

    pub fn from_values(vals: &[RatFunc]) -> Result<Self> {
        Self::new(vals.iter().cloned().map(RootSpec::Value).collect())
    }

    pub fn root_values(&self) -> Vec<RatFunc> {
        self.roots.iter().map(|r| r.value()).collect()
    }

    /// Indices into `roots` sorted by decreasing valuation (stable on ties).
    pub fn valuation_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.roots.len()).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(self.roots[i].val()));
        idx
    }
}

fn hyperelliptic_poly(roots: &[RatFunc]) -> MPoly {
    let vars = vec!["x".to_string(), "y".to_string()];
    let x = MPoly::var_in(vars.clone(), "x").unwrap();
    let y = MPoly::var_in(vars.clone(), "y").unwrap();
    let mut h = x.clone();
    for a in roots {
        h = &h * &(&x - &MPoly::constant_in(vars.clone(), a.clone()));
    }
    &(&y * &y) - &h
}

/// Expanded y² − x·∏(x − αᵢ) in the ring [x, y].
pub fn defining_poly(c: &HECurve) -> MPoly {
    c.g_poly.clone()
}

/// Coefficients of h(x) = x·∏(x − αᵢ) by degree, index k is the coefficient of x^k.
pub fn h_coeffs(c: &HECurve) -> Vec<RatFunc> {
    let n = 2 * c.genus + 1;
    (0..=n).map(|k| -c.g_poly.coeff(&[k as i32, 0])).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub position: usize,
    pub value: String,
    pub valuation: i64,
    pub initial: String,
}

/// Roots in valuation order with their positions 2, …, 2g+1.
pub fn root_report(c: &HECurve) -> Vec<RootReport> {
    c.valuation_order()
        .into_iter()
        .enumerate()
        .map(|(p, i)| {
            let v = c.roots[i].value();
            RootReport { position: p + 2, value: v.to_string(), valuation: v.val().unwrap(), initial: v.initial_coeff().unwrap().to_string() }
        })
        .collect()
}
