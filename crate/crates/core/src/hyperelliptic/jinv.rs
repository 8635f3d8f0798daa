//! j-invariant of a plane cubic from the Aronhold invariants S and T.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use crate::algebra::{frac, rat, MPoly, RatFunc};
use crate::error::{Error, Result};

type Ternary = BTreeMap<[u32; 3], RatFunc>;

fn t_mul(a: &Ternary, b: &Ternary) -> Ternary {
    let mut out = Ternary::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
            let v = out.remove(&e).unwrap_or_else(RatFunc::zero);
            let v = &v + &(ca * cb);
            if !v.is_zero() {
                out.insert(e, v);
            }
        }
    }
    out
}

fn t_add(a: &Ternary, b: &Ternary, sign: i64) -> Ternary {
    let mut out = a.clone();
    for (e, c) in b {
        let v = out.remove(e).unwrap_or_else(RatFunc::zero);
        let v = &v + &c.scale(&rat(sign));
        if !v.is_zero() {
            out.insert(*e, v);
        }
    }
    out
}

fn t_diff(a: &Ternary, i: usize) -> Ternary {
    let mut out = Ternary::new();
    for (e, c) in a {
        if e[i] > 0 {
            let mut e2 = *e;
            e2[i] -= 1;
            out.insert(e2, c.scale(&rat(e[i] as i64)));
        }
    }
    out
}

fn hessian(f: &Ternary) -> Ternary {
    let d: Vec<Vec<Ternary>> = (0..3).map(|i| (0..3).map(|j| t_diff(&t_diff(f, i), j)).collect()).collect();
    let minor = |r: usize, c1: usize, c2: usize| t_add(&t_mul(&d[r][c1], &d[r + 1][c2]), &t_mul(&d[r][c2], &d[r + 1][c1]), -1);
    let a = t_mul(&d[0][0], &minor(1, 1, 2));
    let b = t_mul(&d[0][1], &minor(1, 0, 2));
    let c = t_mul(&d[0][2], &minor(1, 0, 1));
    t_add(&t_add(&a, &b, -1), &c, 1)
}

/// a + ε·d with ε² = 0.
#[derive(Clone, Debug)]
struct Dual {
    a: RatFunc,
    d: RatFunc,
}

impl Dual {
    fn int(n: i64) -> Dual {
        Dual { a: RatFunc::from_int(n), d: RatFunc::zero() }
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual { a: &self.a + &o.a, d: &self.d + &o.d }
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual { a: &self.a - &o.a, d: &self.d - &o.d }
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual { a: &self.a * &o.a, d: &(&self.a * &o.d) + &(&self.d * &o.a) }
    }
}

/// Degree-four invariant in the scaled coefficients of
/// a x³ + b y³ + c z³ + 3a₂x²y + 3a₃x²z + 3b₁xy² + 3b₃y²z + 3c₁xz² + 3c₂yz² + 6m xyz.
#[allow(clippy::too_many_arguments)]
fn s_form(k: [Dual; 10]) -> Dual {
    let [a, b, c, a2, a3, b1, b3, c1, c2, m] = k;
    let n = Dual::int;
    let p = |xs: &[&Dual]| xs.iter().fold(n(1), |acc, x| acc * (*x).clone());
    let m2 = p(&[&m, &m]);
    p(&[&a, &b, &c, &m]) - (p(&[&b, &c, &a2, &a3]) + p(&[&c, &a, &b1, &b3]) + p(&[&a, &b, &c1, &c2]))
        - p(&[&m, &a, &b3, &c2])
        - p(&[&m, &b, &c1, &a3])
        - p(&[&m, &c, &a2, &b1])
        + (p(&[&a, &b1, &c2, &c2]) + p(&[&a, &c1, &b3, &b3]) + p(&[&b, &a2, &c1, &c1]) + p(&[&b, &c2, &a3, &a3]) + p(&[&c, &b3, &a2, &a2]) + p(&[&c, &a3, &b1, &b1]))
        - p(&[&m2, &m2])
        + n(2) * m2.clone() * (p(&[&b1, &c1]) + p(&[&c2, &a2]) + p(&[&a3, &b3]))
        - n(3) * m.clone() * (p(&[&a2, &b3, &c1]) + p(&[&a3, &b1, &c2]))
        - (p(&[&b1, &b1, &c1, &c1]) + p(&[&c2, &c2, &a2, &a2]) + p(&[&a3, &a3, &b3, &b3]))
        + (p(&[&c2, &a2, &a3, &b3]) + p(&[&a3, &b3, &b1, &c1]) + p(&[&b1, &c1, &c2, &a2]))
}

fn scaled(f: &Ternary, h: &Ternary) -> [Dual; 10] {
    let mons: [([u32; 3], i64); 10] =
        [([3, 0, 0], 1), ([0, 3, 0], 1), ([0, 0, 3], 1), ([2, 1, 0], 3), ([2, 0, 1], 3), ([1, 2, 0], 3), ([0, 2, 1], 3), ([1, 0, 2], 3), ([0, 1, 2], 3), ([1, 1, 1], 6)];
    mons.map(|(e, d)| {
        let get = |t: &Ternary| t.get(&e).cloned().unwrap_or_else(RatFunc::zero).scale(&frac(1, d));
        Dual { a: get(f), d: get(h) }
    })
}

fn homogenize(f: &MPoly) -> Result<Ternary> {
    let used: Vec<usize> = (0..f.nvars()).filter(|&i| f.terms().any(|(e, _)| e[i] != 0)).collect();
    if used.len() > 2 {
        return Err(Error::domain("plane cubic in at most two variables expected"));
    }
    let mut out = Ternary::new();
    for (e, c) in f.terms() {
        let ex: Vec<i32> = used.iter().map(|&i| e[i]).collect();
        let (i, j) = (ex.first().copied().unwrap_or(0), ex.get(1).copied().unwrap_or(0));
        if i < 0 || j < 0 || i + j > 3 {
            return Err(Error::domain(format!("not a cubic: monomial exponent {e:?}")));
        }
        out.insert([i as u32, j as u32, (3 - i - j) as u32], c.clone());
    }
    if !out.keys().any(|e| e[2] == 0) {
        return Err(Error::domain("not a cubic: total degree below three"));
    }
    Ok(out)
}

/// (S, T) of the homogenized cubic.
pub fn aronhold_invariants(f: &MPoly) -> Result<(RatFunc, RatFunc)> {
    let tf = homogenize(f)?;
    let h = hessian(&tf);
    let s = s_form(scaled(&tf, &h));
    Ok((s.a, s.d))
}

/// j-invariant normalized to 1728·4a³/(4a³+27b²) on y² = x³ + ax + b.
pub fn j_invariant_cubic(f: &MPoly) -> Result<RatFunc> {
    let (s, t) = aronhold_invariants(f)?;
    // S = a/27 and T = −16b/3 on the Weierstrass family
    let s = s.scale(&rat(27));
    let t = t.scale(&frac(-3, 16));
    let s3 = &(&s * &s) * &s;
    let num = s3.scale(&rat(4));
    let den = &num + &(&t * &t).scale(&rat(27));
    if den.is_zero() {
        return Err(Error::SingularCurve("the cubic has vanishing discriminant".into()));
    }
    Ok(&num.scale(&rat(1728)) / &den)
}
