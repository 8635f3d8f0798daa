//! Heuristic gcd of integer polynomials (evaluate at a large integer, gcd, interpolate).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::polyt::PolyT;
use super::rat::{lcm_denoms, Rat};

/// Dense primitive integer coefficients, lowest degree first.
fn primitive_z(p: &PolyT) -> Vec<BigInt> {
    let l = lcm_denoms(p.terms().map(|(_, c)| c));
    let d = p.degree().unwrap() as usize;
    let mut v = vec![BigInt::zero(); d + 1];
    for (k, c) in p.terms() {
        v[k as usize] = (c * Rat::from_integer(l.clone())).to_integer();
    }
    make_primitive(v)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn interpolate(mut h: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut d = h.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        out.push(d.clone());
        h = (h - d) / xi;
    }
    out
}

/// Does g divide a exactly in Z[t]?
fn divides(a: &[BigInt], g: &[BigInt]) -> bool {
    let (da, dg) = (a.len() - 1, g.len() - 1);
    if dg > da {
        return false;
    }
    let mut r = a.to_vec();
    let lc = &g[dg];
    for i in (0..=da - dg).rev() {
        let c = &r[i + dg];
        if c.is_zero() {
            continue;
        }
        let (q, rem) = c.div_rem(lc);
        if !rem.is_zero() {
            return false;
        }
        for (j, gj) in g.iter().enumerate() {
            r[i + j] -= &q * gj;
        }
    }
    r.iter().all(|c| c.is_zero())
}

/// gcd of two nonzero polynomials, or None when the heuristic gives up.
pub(crate) fn heuristic_gcd(a: &PolyT, b: &PolyT) -> Option<PolyT> {
    let (za, zb) = (primitive_z(a), primitive_z(b));
    let norm = |p: &[BigInt]| p.iter().map(|c| c.abs()).max().unwrap();
    let mut xi: BigInt = norm(&za).min(norm(&zb)) * 2 + 29;
    let deg = za.len().max(zb.len()) as u64;
    for _ in 0..6 {
        if xi.bits() * deg > 20_000_000 {
            return None;
        }
        let gam = eval(&za, &xi).gcd(&eval(&zb, &xi));
        let g = make_primitive(interpolate(gam, &xi));
        if !g.is_empty() && divides(&za, &g) && divides(&zb, &g) {
            return Some(PolyT::from_coeffs(g.into_iter().enumerate().map(|(k, c)| (k as u32, Rat::from_integer(c)))));
        }
        xi = xi * 73794 / 27011;
    }
    None
}
