use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::str::FromStr;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;

/// Exact rational coefficient.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `u^u σ^sigma τ^tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub u: u32,
    pub sigma: u32,
    pub tau: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, sigma: 0, tau: 0 };
    pub const U: Monomial = Monomial { u: 1, sigma: 0, tau: 0 };
    pub const SIGMA: Monomial = Monomial { u: 0, sigma: 1, tau: 0 };
    pub const TAU: Monomial = Monomial { u: 0, sigma: 0, tau: 1 };

    pub const fn new(u: u32, sigma: u32, tau: u32) -> Self {
        Monomial { u, sigma, tau }
    }

    pub fn degree(self) -> u32 {
        self.u + self.sigma + self.tau
    }

    /// Printing order: ascending total degree, then `u` before `σ` before `τ`.
    fn print_key(self) -> (u32, Reverse<(u32, u32, u32)>) {
        (self.degree(), Reverse((self.u, self.sigma, self.tau)))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.u + rhs.u, self.sigma + rhs.sigma, self.tau + rhs.tau)
    }
}

/// Partial assignment of rational values to `u`, `σ`, `τ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub u: Option<Rat>,
    pub sigma: Option<Rat>,
    pub tau: Option<Rat>,
}

impl Assignment {
    pub fn new(u: Option<Rat>, sigma: Option<Rat>, tau: Option<Rat>) -> Self {
        Assignment { u, sigma, tau }
    }

    pub fn ints(u: Option<i64>, sigma: Option<i64>, tau: Option<i64>) -> Self {
        Assignment { u: u.map(rat), sigma: sigma.map(rat), tau: tau.map(rat) }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_none() && self.sigma.is_none() && self.tau.is_none()
    }
}

/// Sparse polynomial in `u, σ, τ` with rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::monomial(Monomial::ONE, c)
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(rat(c))
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn u() -> Self {
        Poly::monomial(Monomial::U, Rat::one())
    }

    pub fn sigma() -> Self {
        Poly::monomial(Monomial::SIGMA, Rat::one())
    }

    pub fn tau() -> Self {
        Poly::monomial(Monomial::TAU, Rat::one())
    }

    /// Builds a polynomial from terms, dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Integer terms `(coefficient, u, σ, τ)`.
    pub fn from_ints(terms: &[(i64, u32, u32, u32)]) -> Self {
        Poly::from_terms(terms.iter().map(|&(c, u, s, t)| (Monomial::new(u, s, t), rat(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> Rat {
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    /// `Some(c)` if the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree_u(&self) -> u32 {
        self.terms.keys().map(|m| m.u).max().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += a * b` without building the product separately.
    pub fn add_product(&mut self, a: &Poly, b: &Poly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(*ma * *mb, ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, v)| (*k * m, v.clone())).collect() }
    }

    pub fn specialize(&self, at: &Assignment) -> Poly {
        if at.is_identity() {
            return self.clone();
        }
        let power = |value: &Option<Rat>, e: u32| -> (Rat, u32) {
            match value {
                Some(v) => (v.pow(e as i32), 0),
                None => (Rat::one(), e),
            }
        };
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (pu, eu) = power(&at.u, m.u);
            let (ps, es) = power(&at.sigma, m.sigma);
            let (pt, et) = power(&at.tau, m.tau);
            out.add_term(Monomial::new(eu, es, et), c * pu * ps * pt);
        }
        out
    }

    /// Groups the terms by power of `u`: entry `e` is the coefficient of
    /// `u^e`, a polynomial in `σ, τ`.
    pub fn by_u_power(&self) -> Vec<Poly> {
        let mut out = alloc::vec![Poly::zero(); self.degree_u() as usize + 1];
        for (m, c) in &self.terms {
            out[m.u as usize].add_term(Monomial::new(0, m.sigma, m.tau), c.clone());
        }
        out
    }
}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("u", m.u), ("s", m.sigma), ("t", m.tau)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Terms in ascending total degree, then `u > s > t` lexicographically;
/// `σ` prints as `s` and `τ` as `t`. Example: `8 + 8*t + 2*s*t + t^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| m.print_key());
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

/// Parses the printed form, e.g. `2*s*t^2 - u + 3/2`. Factors may appear in
/// any order and repeat.
impl FromStr for Poly {
    type Err = SeriesError;

    fn from_str(text: &str) -> Result<Poly, SeriesError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(SeriesError::Parse(text.into()));
        }
        let mut out = Poly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if negative || rest.starts_with('+') {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let mut coeff = Rat::one();
            let mut mono = Monomial::ONE;
            for factor in term.split('*') {
                let bad = || SeriesError::Parse(text.into());
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                let power = match base {
                    "u" => Monomial::new(exp, 0, 0),
                    "s" => Monomial::new(0, exp, 0),
                    "t" => Monomial::new(0, 0, exp),
                    _ if exp == 1 => {
                        coeff *= parse_rat(base).ok_or_else(bad)?;
                        continue;
                    }
                    _ => return Err(bad()),
                };
                mono = mono * power;
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

fn parse_rat(text: &str) -> Option<Rat> {
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    (!den.is_zero()).then(|| Rat::new(num, den))
}
