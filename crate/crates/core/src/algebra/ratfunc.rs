//! Elements of Q(t) with the t-adic valuation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::polyt::PolyT;
use super::rat::{sqrt_rat, Rat};
use crate::error::{Error, Result};

/// num/den in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: PolyT,
    den: PolyT,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: PolyT::zero(), den: PolyT::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: PolyT::one(), den: PolyT::one() }
    }

    pub fn t() -> Self {
        Self::from_poly(PolyT::t())
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(PolyT::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    pub fn from_poly(p: PolyT) -> Self {
        RatFunc { num: p, den: PolyT::one() }
    }

    /// c·t^k for any integer k.
    pub fn monomial(c: Rat, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(PolyT::monomial(c, k as u32))
        } else {
            RatFunc { num: PolyT::constant(c), den: PolyT::monomial(Rat::one(), (-k) as u32) }.normalized()
        }
    }

    pub fn new(num: PolyT, den: PolyT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Ok(RatFunc { num, den }.normalized())
    }

    fn normalized(self) -> Self {
        let RatFunc { num, den } = self;
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_monomial() {
            // only powers of t can cancel
            let k = num.ord().unwrap().min(den.ord().unwrap());
            (num.unshift(k), den.unshift(k))
        } else {
            let g = PolyT::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let l = den.lc();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let inv = Rat::one() / l;
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn num(&self) -> &PolyT {
        &self.num
    }

    pub fn den(&self) -> &PolyT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Is this c·t^k (a unit of the Laurent ring)?
    pub fn is_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.is_monomial()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    /// t-adic valuation; `None` stands for +∞ (the zero element).
    pub fn val(&self) -> Option<i64> {
        Some(self.num.ord()? as i64 - self.den.ord().unwrap() as i64)
    }

    pub fn initial_coeff(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::domain("initial coefficient of zero"));
        }
        Ok(self.num.tc() / self.den.tc())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        Ok(RatFunc { num: self.den.clone(), den: self.num.clone() }.normalized())
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        Ok(RatFunc { num: self.num.pow(n as u32), den: self.den.pow(n as u32) })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }

    /// Square root in Q(t) with positive initial coefficient.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("square root of zero"));
        }
        let v = self.val().unwrap();
        if v % 2 != 0 {
            return Err(Error::NotASquare(format!("odd t-order {v} of {self}")));
        }
        let ic = self.initial_coeff()?;
        if sqrt_rat(&ic).is_none() {
            return Err(Error::NotASquare(format!("initial coefficient {ic} of {self} is not a rational square")));
        }
        // den is monic; num must be a square up to nothing
        let sn = self.num.sqrt().ok_or_else(|| Error::NotASquare(format!("numerator of {self} is not a square")))?;
        let sd = self.den.sqrt().ok_or_else(|| Error::NotASquare(format!("denominator of {self} is not a square")))?;
        let r = RatFunc { num: sn, den: sd }.normalized();
        Ok(if r.initial_coeff()?.is_negative() { -&r } else { r })
    }

    /// Content-style gcd: gcd of numerators over lcm of denominators.
    pub fn gcd(a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.is_zero() {
            return b.abs_monic();
        }
        if b.is_zero() {
            return a.abs_monic();
        }
        let n = PolyT::gcd(&a.num, &b.num);
        let g = PolyT::gcd(&a.den, &b.den);
        let l = (&a.den * &b.den).div_exact(&g).unwrap();
        RatFunc { num: n, den: l }.normalized()
    }

    fn abs_monic(&self) -> RatFunc {
        RatFunc { num: self.num.monic(), den: self.den.clone() }
    }

    fn fmt_atom(&self) -> (bool, String) {
        // (is a single factor that needs no parentheses, text)
        if self.den.is_one() {
            if self.num.len() == 1 {
                return (true, self.num.to_string());
            }
            return (false, format!("({})", self.num));
        }
        let n = if self.num.len() == 1 && self.num.tc().is_positive() { self.num.to_string() } else { format!("({})", self.num) };
        let d = if self.den.len() == 1 { self.den.to_string() } else { format!("({})", self.den) };
        (false, format!("{n}/{d}"))
    }

    /// Text used when this is the coefficient of a monomial.
    pub(crate) fn fmt_coeff(&self) -> String {
        self.fmt_atom().1
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let d = if self.den.len() == 1 { self.den.to_string() } else { format!("({})", self.den) };
            if self.num.len() == 1 {
                write!(f, "{}/{}", self.num, d)
            } else {
                write!(f, "({})/{}", self.num, d)
            }
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc { num: &self.num + &o.num, den: self.den.clone() }.normalized();
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            let a = self.den.degree().unwrap();
            let b = o.den.degree().unwrap();
            let m = a.max(b);
            let num = &self.num.shift(m - a) + &o.num.shift(m - b);
            return RatFunc { num, den: PolyT::monomial(Rat::one(), m) }.normalized();
        }
        RatFunc { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }.normalized()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: PolyT::one() };
        }
        RatFunc { num: &self.num * &o.num, den: &self.den * &o.den }.normalized()
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero in Q(t)")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order, only used for deterministic sorting.
impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.num, &self.den).cmp(&(&other.num, &other.den))
    }
}
