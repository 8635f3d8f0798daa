//! Min-plus tropicalization, regular subdivisions and tropical plane curves.

pub mod curve;
pub mod graph;
pub mod subdivision;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{MPoly, Rat};
use crate::error::{Error, Result};

pub use curve::{check_balancing, cycle_lengths, first_betti, tropical_curve, BalanceReport, TropCurve, TropEdge, TropLine, TropRay};
pub use subdivision::{dual_subdivision, newton_polygon_interior_points, RegularSubdivision};

/// A min-plus polynomial: min over terms of coefficient + <exponent, point>.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TropPoly {
    pub n_vars: usize,
    #[serde(serialize_with = "ser_terms")]
    pub terms: BTreeMap<Vec<i32>, Rat>,
}

fn ser_terms<S: serde::Serializer>(t: &BTreeMap<Vec<i32>, Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for (e, c) in t {
        seq.serialize_element(&(e, c.to_string()))?;
    }
    seq.end()
}

impl TropPoly {
    pub fn new(n_vars: usize, terms: impl IntoIterator<Item = (Vec<i32>, Rat)>) -> Result<Self> {
        let mut m = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n_vars {
                return Err(Error::domain("exponent length mismatch"));
            }
            // min-plus: a repeated exponent keeps the smaller coefficient
            let entry = m.entry(e).or_insert_with(|| c.clone());
            if c < *entry {
                *entry = c;
            }
        }
        if m.is_empty() {
            return Err(Error::domain("tropical polynomial without terms"));
        }
        Ok(TropPoly { n_vars, terms: m })
    }

    pub fn coeff(&self, e: &[i32]) -> Option<&Rat> {
        self.terms.get(e)
    }

    pub fn eval(&self, w: &[Rat]) -> Rat {
        self.terms.iter().map(|(e, c)| term_value(e, c, w)).min().unwrap()
    }

    /// Terms attaining the minimum at `w`.
    pub fn argmin(&self, w: &[Rat]) -> Vec<&Vec<i32>> {
        let m = self.eval(w);
        self.terms.iter().filter(|(e, c)| term_value(e, c, w) == m).map(|(e, _)| e).collect()
    }

    /// Is `w` on the tropical hypersurface (minimum attained twice)?
    pub fn is_on_hypersurface(&self, w: &[Rat]) -> bool {
        self.argmin(w).len() >= 2
    }

    /// Multiplies by a monomial: shifts all exponents.
    pub fn shift(&self, by: &[i32]) -> TropPoly {
        TropPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }
}

pub(crate) fn term_value(e: &[i32], c: &Rat, w: &[Rat]) -> Rat {
    let mut v = c.clone();
    for (k, x) in e.iter().zip(w) {
        if *k != 0 {
            v += x * Rat::from_integer((*k).into());
        }
    }
    v
}

impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z", "w"];
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k != 0)
                    .map(|(i, k)| if *k == 1 { names[i.min(3)].to_string() } else { format!("{}^{}", names[i.min(3)], k) })
                    .collect();
                let mono = mono.join("*");
                match (c.is_zero(), mono.is_empty()) {
                    (true, true) => "0".to_string(),
                    (true, false) => mono,
                    (false, true) => format!("({c})"),
                    (false, false) => format!("({c})*{mono}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Coefficient-wise valuation of a polynomial in at most three variables.
pub fn tropicalize(f: &MPoly) -> Result<TropPoly> {
    if f.is_zero() {
        return Err(Error::domain("cannot tropicalize the zero polynomial"));
    }
    if f.nvars() > 3 {
        return Err(Error::domain("tropicalize supports at most three variables"));
    }
    TropPoly::new(f.nvars(), f.terms().map(|(e, c)| (e.clone(), Rat::from_integer(c.val().expect("nonzero coefficient").into()))))
}

/// Primitive integer vector and the gcd that was divided out.
pub(crate) fn primitive(v: [i64; 2]) -> ([i64; 2], i64) {
    let g = num_integer::gcd(v[0], v[1]);
    if g == 0 {
        return (v, 0);
    }
    ([v[0] / g, v[1] / g], g.abs())
}
