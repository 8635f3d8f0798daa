//! Multivariate Laurent polynomials with coefficients in Q(t).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

pub type Exp = Vec<i32>;

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exp, RatFunc>,
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

impl MPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MPoly { vars: names(vars), terms: BTreeMap::new() }
    }

    pub fn zero_in(vars: Vec<String>) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant_in(vars: Vec<String>, c: RatFunc) -> Self {
        let n = vars.len();
        let mut p = MPoly::zero_in(vars);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn var_in(vars: Vec<String>, name: &str) -> Result<Self> {
        let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::domain(format!("unknown variable {name}")))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = MPoly::zero_in(vars);
        p.add_term(e, RatFunc::one());
        Ok(p)
    }

    pub fn monomial_in(vars: Vec<String>, exp: Exp, c: RatFunc) -> Self {
        assert_eq!(exp.len(), vars.len());
        let mut p = MPoly::zero_in(vars);
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(vars: Vec<String>, it: impl IntoIterator<Item = (Exp, RatFunc)>) -> Self {
        let mut p = MPoly::zero_in(vars);
        for (e, c) in it {
            assert_eq!(e.len(), p.vars.len());
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: Exp, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i32]) -> RatFunc {
        self.terms.get(e).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn idx(&self, name: &str) -> Result<usize> {
        self.var_index(name).ok_or_else(|| Error::domain(format!("variable {name} not in ring {:?}", self.vars)))
    }

    /// Re-expresses the polynomial in a ring containing all of its variables.
    pub fn in_ring(&self, vars: &[String]) -> Result<MPoly> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).ok_or_else(|| Error::domain(format!("variable {v} missing from target ring"))))
            .collect::<Result<_>>()?;
        let mut out = MPoly::zero_in(vars.to_vec());
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, x) in e.iter().enumerate() {
                ne[map[i]] = *x;
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// Union of the two rings, own variables first.
    pub fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let mut v = a.to_vec();
        for x in b {
            if !v.contains(x) {
                v.push(x.clone());
            }
        }
        v
    }

    fn aligned(&self, o: &MPoly) -> (MPoly, MPoly) {
        if self.vars == o.vars {
            return (self.clone(), o.clone());
        }
        let u = Self::union_vars(&self.vars, &o.vars);
        (self.in_ring(&u).unwrap(), o.in_ring(&u).unwrap())
    }

    pub fn scale(&self, c: &RatFunc) -> MPoly {
        if c.is_zero() {
            return MPoly::zero_in(self.vars.clone());
        }
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, e: &[i32], c: &RatFunc) -> MPoly {
        if c.is_zero() {
            return MPoly::zero_in(self.vars.clone());
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(x, v)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::constant_in(self.vars.clone(), RatFunc::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn degree_in(&self, var: &str) -> Option<i32> {
        let i = self.var_index(var)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn min_degree_in(&self, var: &str) -> Option<i32> {
        let i = self.var_index(var)?;
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficients with respect to one variable; the variable stays in the ring with exponent 0.
    pub fn coeffs_in(&self, var: &str) -> Result<BTreeMap<i32, MPoly>> {
        let i = self.idx(var)?;
        let mut m: BTreeMap<i32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] = 0;
            m.entry(e[i]).or_insert_with(|| MPoly::zero_in(self.vars.clone())).terms.insert(ne, c.clone());
        }
        Ok(m)
    }

    /// Drops a variable that does not occur.
    pub fn drop_var(&self, var: &str) -> Result<MPoly> {
        let i = self.idx(var)?;
        if self.terms.keys().any(|e| e[i] != 0) {
            return Err(Error::domain(format!("variable {var} still occurs")));
        }
        let mut vars = self.vars.clone();
        vars.remove(i);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne.remove(i);
                (ne, c.clone())
            })
            .collect();
        Ok(MPoly { vars, terms })
    }

    pub fn rename_var(&self, old: &str, new: &str) -> Result<MPoly> {
        let i = self.idx(old)?;
        if self.var_index(new).is_some() {
            return Err(Error::domain(format!("variable {new} already present")));
        }
        let mut p = self.clone();
        p.vars[i] = new.to_string();
        Ok(p)
    }

    /// The constant in Q(t), if the polynomial has no variables in its support.
    pub fn as_constant(&self) -> Option<RatFunc> {
        if self.terms.is_empty() {
            return Some(RatFunc::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|x| *x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// A single term c·m with c a unit of the Laurent ring.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().is_monomial()
    }

    pub fn lex_leading(&self) -> Option<(&Exp, &RatFunc)> {
        self.terms.iter().next_back()
    }

    /// Evaluation at a rational t and rational point; `None` on a pole.
    pub fn eval(&self, t: &Rat, point: &[Rat]) -> Option<Rat> {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut v = c.eval(t)?;
            for (x, k) in point.iter().zip(e) {
                if *k < 0 && x.is_zero() {
                    return None;
                }
                let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
                v *= if *k < 0 { Rat::one() / p } else { p };
            }
            acc += v;
        }
        Some(acc)
    }

    /// Divides by the largest monomial dividing every term (exponentwise minimum).
    pub fn strip_monomial_factor(&self) -> MPoly {
        if self.terms.is_empty() {
            return self.clone();
        }
        let n = self.vars.len();
        let mins: Vec<i32> = (0..n).map(|i| self.terms.keys().map(|e| e[i]).min().unwrap()).collect();
        let neg: Vec<i32> = mins.iter().map(|x| -x).collect();
        self.mul_monomial(&neg, &RatFunc::one())
    }

    /// Common Q(t) factor of all coefficients.
    pub fn content(&self) -> RatFunc {
        self.terms.values().fold(RatFunc::zero(), |acc, c| RatFunc::gcd(&acc, c))
    }

    /// Divides out the content, clears rational denominators to a primitive
    /// integer form and makes the lex-leading term's initial coefficient positive.
    pub fn normalize(&self) -> MPoly {
        if self.terms.is_empty() {
            return self.clone();
        }
        let cont = self.content();
        let p = self.scale(&cont.inv().unwrap());
        // all coefficients are now polynomials; make them primitive over Z
        let mut den = num_bigint::BigInt::one();
        let mut num = num_bigint::BigInt::zero();
        for c in p.terms.values() {
            for (_, q) in c.num().terms() {
                den = num_integer::Integer::lcm(&den, q.denom());
                num = num_integer::Integer::gcd(&num, q.numer());
            }
        }
        let mut s = Rat::new(den, num);
        let (_, lead) = p.lex_leading().unwrap();
        if lead.initial_coeff().unwrap().is_negative() {
            s = -s;
        }
        p.scale(&RatFunc::from_rat(s))
    }

    /// Exact division in Q(t)[vars^±]; `None` if the division is not exact.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (a, d) = self.aligned(d);
        let (de, dc) = d.lex_leading()?;
        let (de, dc) = (de.clone(), dc.clone());
        let dinv = dc.inv().ok()?;
        let n = a.vars.len();
        if a.is_zero() {
            return Some(MPoly::zero_in(a.vars.clone()));
        }
        // in a domain the extreme degrees of a quotient are forced, which bounds the search
        let bound = |p: &MPoly, i: usize| {
            let it = p.terms.keys().map(move |e| e[i]);
            (it.clone().min().unwrap(), it.max().unwrap())
        };
        let lo_hi: Vec<(i32, i32)> = (0..n)
            .map(|i| {
                let (amin, amax) = bound(&a, i);
                let (dmin, dmax) = bound(&d, i);
                (amin - dmin, amax - dmax)
            })
            .collect();
        let mut r = a;
        let mut q = MPoly::zero_in(r.vars.clone());
        loop {
            let Some((re, rc)) = r.lex_leading() else { return Some(q) };
            let e: Exp = re.iter().zip(&de).map(|(x, y)| x - y).collect();
            if e.iter().zip(&lo_hi).any(|(x, (lo, hi))| x < lo || x > hi) {
                return None;
            }
            let c = rc * &dinv;
            q.add_term(e.clone(), c.clone());
            r = &r - &d.mul_monomial(&e, &c);
        }
    }

    pub fn fmt_expr(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono = fmt_monomial(&self.vars, e);
            // sign extraction only for single-term coefficients
            let (neg, body) = if c.num().len() == 1 && c.den().len() == 1 {
                let neg = c.num().tc().is_negative();
                let a = if neg { -c } else { c.clone() };
                let txt = if a.is_one() && !mono.is_empty() { String::new() } else { a.fmt_coeff() };
                (neg, txt)
            } else {
                (false, c.fmt_coeff())
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (body.is_empty(), mono.is_empty()) {
                (true, _) => s.push_str(&mono),
                (false, true) => s.push_str(&body),
                (false, false) => s.push_str(&format!("{body}*{mono}")),
            }
        }
        s
    }
}

fn fmt_monomial(vars: &[String], e: &[i32]) -> String {
    let mut parts = Vec::new();
    for (v, k) in vars.iter().zip(e) {
        match k {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{k}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_expr())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.vars.join(","), self.fmt_expr())
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let (mut a, b) = self.aligned(o);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let (mut a, b) = self.aligned(o);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let (a, b) = self.aligned(o);
        let mut acc: BTreeMap<Exp, Vec<RatFunc>> = BTreeMap::new();
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e: Exp = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                acc.entry(e).or_default().push(c1 * c2);
            }
        }
        let mut out = MPoly::zero_in(a.vars.clone());
        for (e, cs) in acc {
            let s = sum_ratfuncs(cs);
            if !s.is_zero() {
                out.terms.insert(e, s);
            }
        }
        out
    }
}

/// Sums many Q(t) elements, grouping by denominator to avoid repeated gcds.
pub(crate) fn sum_ratfuncs(cs: Vec<RatFunc>) -> RatFunc {
    if cs.len() == 1 {
        return cs.into_iter().next().unwrap();
    }
    let mut by_den: BTreeMap<super::polyt::PolyT, super::polyt::PolyT> = BTreeMap::new();
    for c in cs {
        let e = by_den.entry(c.den().clone()).or_default();
        *e = &*e + c.num();
    }
    let mut acc = RatFunc::zero();
    for (d, n) in by_den {
        acc = &acc + &RatFunc::new(n, d).unwrap();
    }
    acc
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);
