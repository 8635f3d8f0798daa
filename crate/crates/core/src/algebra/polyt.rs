//! Sparse univariate polynomials in t over Q.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::{sqrt_rat, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyT {
    c: BTreeMap<u32, Rat>,
}

impl PolyT {
    pub fn zero() -> Self {
        PolyT { c: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, k: u32) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        PolyT { c: m }
    }

    pub fn from_coeffs(it: impl IntoIterator<Item = (u32, Rat)>) -> Self {
        let mut p = PolyT::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, k: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.c.entry(k).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.c.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.c.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, k: u32) -> Rat {
        self.c.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.c.keys().next_back().copied()
    }

    /// Order of vanishing at t = 0, `None` for zero.
    pub fn ord(&self) -> Option<u32> {
        self.c.keys().next().copied()
    }

    pub fn lc(&self) -> Rat {
        self.c.values().next_back().cloned().unwrap_or_else(Rat::zero)
    }

    /// Trailing (lowest order) coefficient.
    pub fn tc(&self) -> Rat {
        self.c.values().next().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.c.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.c.keys().all(|k| *k == 0)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return PolyT::zero();
        }
        PolyT { c: self.c.iter().map(|(k, v)| (*k, v * s)).collect() }
    }

    pub fn shift(&self, k: u32) -> Self {
        PolyT { c: self.c.iter().map(|(e, v)| (e + k, v.clone())).collect() }
    }

    /// Divides by t^k; caller guarantees k <= ord.
    pub fn unshift(&self, k: u32) -> Self {
        PolyT { c: self.c.iter().map(|(e, v)| (e - k, v.clone())).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rat::one() / self.lc()))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = PolyT::one();
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

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut last = 0u32;
        let mut pw = Rat::one();
        for (k, c) in &self.c {
            pw *= num_traits::pow(t.clone(), (*k - last) as usize);
            last = *k;
            acc += c * &pw;
        }
        acc
    }

    /// Euclidean division, `b` nonzero.
    pub fn div_rem(&self, b: &PolyT) -> (PolyT, PolyT) {
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.degree().unwrap();
        let lb = b.lc();
        let mut q = PolyT::zero();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.lc() / &lb;
            let s = dr - db;
            for (k, v) in &b.c {
                r.add_term(k + s, -(v * &c));
            }
            // guard against stale leading term from rounding-free cancellation
            r.c.remove(&dr);
            q.add_term(s, c);
        }
        (q, r)
    }

    pub fn div_exact(&self, b: &PolyT) -> Option<PolyT> {
        let (q, r) = self.div_rem(b);
        r.is_zero().then_some(q)
    }

    /// Monic gcd. Powers of t are split off first, which is the common case.
    pub fn gcd(a: &PolyT, b: &PolyT) -> PolyT {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let oa = a.ord().unwrap();
        let ob = b.ord().unwrap();
        let k = oa.min(ob);
        let x = a.unshift(oa);
        let y = b.unshift(ob);
        if x.is_constant() || y.is_constant() {
            return PolyT::monomial(Rat::one(), k);
        }
        match super::zgcd::heuristic_gcd(&x, &y) {
            Some(g) => g.monic().shift(k),
            None => PolyT::gcd_euclid(&x, &y).shift(k),
        }
    }

    /// Monic gcd by the plain Euclidean algorithm over Q.
    pub fn gcd_euclid(a: &PolyT, b: &PolyT) -> PolyT {
        let (mut x, mut y) = (a.clone(), b.clone());
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    pub fn derivative(&self) -> Self {
        PolyT::from_coeffs(self.c.iter().filter(|(k, _)| **k > 0).map(|(k, v)| (k - 1, v * Rat::from_integer((*k).into()))))
    }

    /// Square root with positive leading coefficient, if the polynomial is a square.
    pub fn sqrt(&self) -> Option<PolyT> {
        if self.is_zero() {
            return Some(PolyT::zero());
        }
        let d = self.degree().unwrap();
        if d % 2 == 1 {
            return None;
        }
        let l = sqrt_rat(&self.lc())?;
        let h = d / 2;
        // determine coefficients of the root from the top down
        let mut root = PolyT::monomial(l.clone(), h);
        let two = Rat::from_integer(2.into());
        let two_l = &l * &two;
        let mut resid = self - &(&root * &root);
        for j in (0..h).rev() {
            if resid.is_zero() {
                break;
            }
            let c = resid.coeff(h + j) / &two_l;
            if c.is_zero() {
                continue;
            }
            let delta = &root.shift(j).scale(&(&c * &two)) + &PolyT::monomial(&c * &c, 2 * j);
            resid = &resid - &delta;
            root.add_term(j, c);
        }
        resid.is_zero().then_some(root)
    }

    pub fn fmt_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (k, c)) in self.c.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

impl fmt::Display for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("t"))
    }
}

impl fmt::Debug for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyT({self})")
    }
}

impl Add for &PolyT {
    type Output = PolyT;
    fn add(self, o: &PolyT) -> PolyT {
        let mut r = self.clone();
        for (k, v) in &o.c {
            r.add_term(*k, v.clone());
        }
        r
    }
}

impl Sub for &PolyT {
    type Output = PolyT;
    fn sub(self, o: &PolyT) -> PolyT {
        let mut r = self.clone();
        for (k, v) in &o.c {
            r.add_term(*k, -v.clone());
        }
        r
    }
}

impl Neg for &PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        PolyT { c: self.c.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }
}

impl Mul for &PolyT {
    type Output = PolyT;
    fn mul(self, o: &PolyT) -> PolyT {
        if self.is_zero() || o.is_zero() {
            return PolyT::zero();
        }
        let mut m: BTreeMap<u32, Rat> = BTreeMap::new();
        for (a, x) in &self.c {
            for (b, y) in &o.c {
                *m.entry(a + b).or_insert_with(Rat::zero) += x * y;
            }
        }
        m.retain(|_, v| !v.is_zero());
        PolyT { c: m }
    }
}

impl PartialOrd for PolyT {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PolyT {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.c.iter().cmp(other.c.iter())
    }
}
