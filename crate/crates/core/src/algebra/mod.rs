//! Exact arithmetic over Q, Q[t], Q(t) and Laurent polynomials over Q(t).

pub mod mpoly;
pub mod parse;
pub mod polyt;
pub mod rat;
pub mod ratfunc;
pub mod resultant;
pub mod subst;
mod zgcd;

pub use mpoly::{Exp, MPoly};
pub use parse::{parse_expr, parse_expr_in};
pub use polyt::PolyT;
pub use rat::{frac, parse_rat, rat, Rat};
pub use ratfunc::RatFunc;
pub use resultant::{resultant, resultant_prs, resultant_raw, sylvester_resultant};
pub use subst::{specialize, substitute};

/// t-adic valuation; `None` is +∞.
pub fn val(r: &RatFunc) -> Option<i64> {
    r.val()
}

pub fn initial_coeff(r: &RatFunc) -> crate::Result<Rat> {
    r.initial_coeff()
}

pub fn sqrt_ratfunc(r: &RatFunc) -> crate::Result<RatFunc> {
    r.sqrt()
}
