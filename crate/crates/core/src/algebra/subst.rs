use std::collections::BTreeMap;

use super::mpoly::MPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Replaces `var` by `expr`. The result lives in f's ring extended by expr's new variables.
pub fn substitute(f: &MPoly, var: &str, expr: &MPoly) -> Result<MPoly> {
    let ring = MPoly::union_vars(f.vars(), expr.vars());
    let i = f.var_index(var).ok_or_else(|| Error::domain(format!("variable {var} not in ring")))?;
    let expr = expr.in_ring(&ring)?;
    let f = f.in_ring(&ring)?;
    let min = f.min_degree_in(var).unwrap_or(0);
    let inv = if min < 0 {
        if !expr.is_unit_monomial() {
            return Err(Error::UnsupportedSubstitution(format!("{var} occurs with negative exponent and {expr} is not a unit monomial")));
        }
        let (e, c) = expr.terms().next().unwrap();
        let ne: Vec<i32> = e.iter().map(|x| -x).collect();
        Some(MPoly::monomial_in(ring.clone(), ne, c.inv()?))
    } else {
        None
    };
    let mut powers: BTreeMap<i32, MPoly> = BTreeMap::new();
    let mut out = MPoly::zero_in(ring.clone());
    for (k, c) in f.coeffs_in(var)? {
        let _ = i;
        let p = powers
            .entry(k)
            .or_insert_with(|| if k >= 0 { expr.pow(k as u32) } else { inv.as_ref().unwrap().pow((-k) as u32) })
            .clone();
        out = &out + &(&c * &p);
    }
    Ok(out)
}

/// Substitutes a constant of Q(t) for a variable and drops it from the ring.
pub fn specialize(f: &MPoly, var: &str, value: &RatFunc) -> Result<MPoly> {
    let c = MPoly::constant_in(f.vars().to_vec(), value.clone());
    substitute(f, var, &c)?.drop_var(var)
}
