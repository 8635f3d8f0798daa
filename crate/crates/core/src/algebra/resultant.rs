//! Resultants over Q(t)[vars].
//!
//! The main engine is the subresultant PRS. When one argument has a leading
//! coefficient in Q(t) (a unit), the resultant is instead read off as the norm
//! of the other argument in the quotient algebra, which avoids coefficient swell.

use super::mpoly::MPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Dense coefficient list in `var`, index = degree.
fn dense(f: &MPoly, var: &str) -> Result<Vec<MPoly>> {
    let m = f.coeffs_in(var)?;
    let lo = *m.keys().next().unwrap_or(&0);
    if lo < 0 {
        return Err(Error::domain(format!("negative exponent of {var} in resultant input")));
    }
    let hi = *m.keys().next_back().unwrap_or(&0) as usize;
    let mut v = vec![MPoly::zero_in(f.vars().to_vec()); hi + 1];
    for (k, c) in m {
        v[k as usize] = c;
    }
    Ok(v)
}

fn deg(v: &[MPoly]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

fn trim(v: &mut Vec<MPoly>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

/// Res_var(f, g) without normalization.
pub fn resultant_raw(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly> {
    let ring = MPoly::union_vars(f.vars(), g.vars());
    let f = f.in_ring(&ring)?;
    let g = g.in_ring(&ring)?;
    let a = dense(&f, var)?;
    let b = dense(&g, var)?;
    let (Some(m), Some(n)) = (deg(&a), deg(&b)) else {
        return Err(Error::domain("resultant of zero polynomial"));
    };
    if m == 0 || n == 0 {
        return Err(Error::domain(format!("resultant input has degree 0 in {var}")));
    }
    let r = if b[n].as_constant().is_some() && n <= 6 {
        norm_resultant(&a, &b, &ring)?
    } else if a[m].as_constant().is_some() && m <= 6 {
        let r = norm_resultant(&b, &a, &ring)?;
        if (m * n) % 2 == 1 {
            -&r
        } else {
            r
        }
    } else {
        subresultant(a, b, &ring)?
    };
    r.drop_var(var)
}

/// Res_var(f, g) forced through the subresultant sequence (no unit shortcut).
pub fn resultant_prs(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly> {
    let ring = MPoly::union_vars(f.vars(), g.vars());
    let a = dense(&f.in_ring(&ring)?, var)?;
    let b = dense(&g.in_ring(&ring)?, var)?;
    if deg(&a).unwrap_or(0) == 0 || deg(&b).unwrap_or(0) == 0 {
        return Err(Error::domain(format!("resultant input has degree 0 in {var}")));
    }
    subresultant(a, b, &ring)?.drop_var(var)
}

/// Res(f, g) with content removed and sign normalized.
pub fn resultant(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly> {
    Ok(resultant_raw(f, g, var)?.normalize())
}

/// Res(a, b) = (-1)^{mn} lc(b)^m · det(multiplication by a on R[x]/(b)), lc(b) a unit.
fn norm_resultant(a: &[MPoly], b: &[MPoly], ring: &[String]) -> Result<MPoly> {
    let m = deg(a).unwrap();
    let n = deg(b).unwrap();
    let lc = b[n].as_constant().unwrap();
    let inv = lc.inv()?;
    let monic: Vec<MPoly> = b.iter().map(|c| c.scale(&inv)).collect();
    let reduce = |p: &mut Vec<MPoly>| {
        while p.len() > n {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let s = p.len() - n;
            for (j, c) in monic.iter().enumerate().take(n) {
                p[s + j] = &p[s + j] - &(&top * c);
            }
        }
        p.resize(n, MPoly::zero_in(ring.to_vec()));
    };
    // column j holds x^j·a mod b
    let mut cols = Vec::with_capacity(n);
    let mut cur: Vec<MPoly> = a.to_vec();
    reduce(&mut cur);
    for j in 0..n {
        if j > 0 {
            cur.insert(0, MPoly::zero_in(ring.to_vec()));
            reduce(&mut cur);
        }
        cols.push(cur.clone());
    }
    let mat: Vec<Vec<MPoly>> = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    let det = det_expand(&mat, ring);
    let mut r = det.scale(&lc.pow(m as i64)?);
    if (m * n) % 2 == 1 {
        r = -&r;
    }
    Ok(r)
}

/// Laplace expansion along the first row; fine for the tiny sizes used here.
pub(crate) fn det_expand(m: &[Vec<MPoly>], ring: &[String]) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::constant_in(ring.to_vec(), RatFunc::one());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    if n == 2 {
        return &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    }
    let mut acc = MPoly::zero_in(ring.to_vec());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, c)| c.clone()).collect()).collect();
        let t = &m[0][j] * &det_expand(&minor, ring);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let m = deg(a).unwrap();
    let n = deg(b).unwrap();
    let lb = &b[n];
    let mut r: Vec<MPoly> = a[..=m].to_vec();
    let mut e = m as i64 - n as i64 + 1;
    while let Some(dr) = deg(&r) {
        if dr < n || (dr == 0 && r[0].is_zero()) {
            break;
        }
        let top = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for j in 0..=n {
            let k = dr - n + j;
            r[k] = &r[k] - &(&top * &b[j]);
        }
        r.truncate(dr);
        if r.is_empty() {
            r.push(MPoly::zero_in(lb.vars().to_vec()));
        }
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    trim(&mut r);
    r
}

fn div_all(v: &[MPoly], d: &MPoly) -> Result<Vec<MPoly>> {
    v.iter().map(|c| c.div_exact(d).ok_or_else(|| Error::domain("inexact division in subresultant sequence"))).collect()
}

/// Subresultant PRS (Collins; see Cohen, Alg. 3.3.7) without content extraction.
pub(crate) fn subresultant(a: Vec<MPoly>, b: Vec<MPoly>, ring: &[String]) -> Result<MPoly> {
    let one = MPoly::constant_in(ring.to_vec(), RatFunc::one());
    let (mut a, mut b) = (a, b);
    let mut s = 1i32;
    if deg(&a) < deg(&b) {
        if deg(&a).unwrap() % 2 == 1 && deg(&b).unwrap() % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let da = deg(&a).unwrap();
        let db = deg(&b).unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = prem(&a, &b);
        a = b;
        let denom = &g * &h.pow(delta);
        b = div_all(&r, &denom)?;
        g = a[deg(&a).unwrap()].clone();
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta);
            num.div_exact(&h.pow(delta - 1)).ok_or_else(|| Error::domain("inexact division in subresultant sequence"))?
        };
        match deg(&b) {
            None => return Ok(MPoly::zero_in(ring.to_vec())),
            Some(0) if b[0].is_zero() => return Ok(MPoly::zero_in(ring.to_vec())),
            Some(0) => {
                let da = deg(&a).unwrap() as u32;
                let num = b[0].pow(da);
                let res = if da == 0 {
                    num
                } else {
                    num.div_exact(&h.pow(da - 1)).ok_or_else(|| Error::domain("inexact division in subresultant sequence"))?
                };
                return Ok(if s < 0 { -&res } else { res });
            }
            Some(_) => {}
        }
    }
}

/// Sylvester matrix of f and g in `var` (rows of f's coefficients first).
pub fn sylvester_matrix(f: &MPoly, g: &MPoly, var: &str) -> Result<Vec<Vec<MPoly>>> {
    let ring = MPoly::union_vars(f.vars(), g.vars());
    let a = dense(&f.in_ring(&ring)?, var)?;
    let b = dense(&g.in_ring(&ring)?, var)?;
    let m = deg(&a).ok_or_else(|| Error::domain("zero polynomial"))?;
    let n = deg(&b).ok_or_else(|| Error::domain("zero polynomial"))?;
    let size = m + n;
    let zero = MPoly::zero_in(ring.clone());
    let mut mat = vec![vec![zero; size]; size];
    for i in 0..n {
        for j in 0..=m {
            mat[i][i + j] = a[m - j].clone();
        }
    }
    for i in 0..m {
        for j in 0..=n {
            mat[n + i][i + j] = b[n - j].clone();
        }
    }
    Ok(mat)
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss_det(mat: &[Vec<MPoly>], ring: &[String]) -> Result<MPoly> {
    let n = mat.len();
    let mut m: Vec<Vec<MPoly>> = mat.to_vec();
    let mut prev = MPoly::constant_in(ring.to_vec(), RatFunc::one());
    let mut sign = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(MPoly::zero_in(ring.to_vec()));
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).ok_or_else(|| Error::domain("inexact Bareiss step"))?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { -&d } else { d })
}

/// Res via the Sylvester determinant; the slow reference used as a test oracle.
pub fn sylvester_resultant(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly> {
    let ring = MPoly::union_vars(f.vars(), g.vars());
    let mat = sylvester_matrix(f, g, var)?;
    bareiss_det(&mat, &ring)?.drop_var(var)
}
