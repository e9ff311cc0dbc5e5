//! Truncated power series in `z` whose coefficients are polynomials in
//! `u, σ, τ` over the rationals.

pub mod identities;
pub mod kernel;
mod poly;

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use poly::{rat, Assignment, Monomial, Poly, Rat};

use crate::error::SeriesError;

/// `Σ_{n=0}^{N} c_n z^n + O(z^{N+1})`, where `N` is the order.
///
/// Binary operations truncate to the smaller order of the operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    /// Order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant coefficient");
        Series { coeffs }
    }

    /// Pads with zeros or truncates so the result has exactly `order`.
    pub fn from_coeffs(mut coeffs: Vec<Poly>, order: usize) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Poly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Poly::one(), order)
    }

    pub fn constant(c: Poly, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c · z^k`.
    pub fn term(c: Poly, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Series::term(Poly::one(), 1, order)
    }

    /// Integer terms `(coefficient, z-power, u, σ, τ)`.
    pub fn from_ints(terms: &[(i64, usize, u32, u32, u32)], order: usize) -> Self {
        let mut s = Series::zero(order);
        for &(c, k, u, sg, t) in terms {
            if k <= order {
                s.coeffs[k].add_term(Monomial::new(u, sg, t), rat(c));
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// # Panics
    /// If `order` exceeds the current order.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot raise the order of a truncated series");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn mul_poly(&self, p: &Poly) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// `z^k · self`; the order grows by `k`.
    pub fn mul_z(&self, k: usize) -> Series {
        let mut coeffs = vec![Poly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// `self / z^k`; the order drops by `k`. The first `k` coefficients must
    /// vanish.
    pub fn div_z(&self, k: usize) -> Result<Series, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::OrderTooLow { shift: k, order: self.order() });
        }
        if let Some(power) = (0..k).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(SeriesError::NotDivisibleByZ {
                shift: k,
                power,
                value: self.coeffs[power].to_string(),
            });
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// `q` with `q · divisor = self` up to the common order. The divisor's
    /// constant coefficient must be a nonzero rational.
    pub fn div(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let lead = divisor.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| SeriesError::NonUnitConstant(divisor.coeffs[0].to_string()))?;
        let inv = lead.recip();
        let order = self.order().min(divisor.order());
        let mut q: Vec<Poly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let b = &divisor.coeffs[k];
                if b.is_zero() || q[n - k].is_zero() {
                    continue;
                }
                acc -= &(b * &q[n - k]);
            }
            q.push(acc.scale(&inv));
        }
        Ok(Series { coeffs: q })
    }

    /// `1 / self`.
    pub fn recip(&self) -> Result<Series, SeriesError> {
        Series::one(self.order()).div(self)
    }

    /// The square root with constant term 1, via
    /// `s_n = (a_n - Σ_{0<k<n} s_k s_{n-k}) / 2`.
    pub fn sqrt(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].as_constant().is_some_and(|c| c.is_one()) {
            return Err(SeriesError::SqrtConstant(self.coeffs[0].to_string()));
        }
        let half = Rat::new(1.into(), 2.into());
        let mut s: Vec<Poly> = Vec::with_capacity(self.coeffs.len());
        s.push(Poly::one());
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                if s[k].is_zero() || s[n - k].is_zero() {
                    continue;
                }
                acc -= &(&s[k] * &s[n - k]);
            }
            s.push(acc.scale(&half));
        }
        Ok(Series { coeffs: s })
    }

    pub fn specialize(&self, at: &Assignment) -> Series {
        Series { coeffs: self.coeffs.iter().map(|p| p.specialize(at)).collect() }
    }

    /// Replaces `u` by a series `r`: `Σ z^n Σ_e c_{n,e}(σ, τ) r^e`.
    pub fn substitute_u(&self, r: &Series) -> Series {
        let order = self.order().min(r.order());
        let max_u = self.coeffs.iter().map(Poly::degree_u).max().unwrap_or(0) as usize;
        let mut powers = vec![Series::one(order)];
        for e in 1..=max_u {
            let next = &powers[e - 1] * r;
            powers.push(next);
        }
        let mut out = Series::zero(order);
        for (n, coeff) in self.coeffs.iter().enumerate().take(order + 1) {
            for (e, c) in coeff.by_u_power().into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, p) in powers[e].coeffs.iter().enumerate().take(order + 1 - n) {
                    out.coeffs[n + k].add_product(&c, p);
                }
            }
        }
        out
    }

    /// All coefficients have denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Poly::is_integral)
    }

    /// The first power of `z` (up to the common order) where the series differ.
    pub fn first_difference(&self, other: &Series) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }

    /// Constant coefficients as a plain list, if every coefficient is constant.
    pub fn constant_coeffs(&self) -> Option<Vec<Rat>> {
        self.coeffs.iter().map(Poly::as_constant).collect()
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series { coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series { coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect() }
    }
}

/// Cauchy product.
impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j].add_product(a, b);
                }
            }
        }
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|p| -p).collect() }
    }
}

impl Add for Series {
    type Output = Series;

    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl Sub for Series {
    type Output = Series;

    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

impl Mul for Series {
    type Output = Series;

    fn mul(self, rhs: Series) -> Series {
        &self * &rhs
    }
}

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

/// One line per power of `z`: `z^5: 8 + 8*t + ...`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            write!(f, "z^{n}: {c}")?;
        }
        Ok(())
    }
}

/// Reads the text form back. Lines are `z^n: poly` in any order; missing
/// powers below the highest one listed are zero.
impl core::str::FromStr for Series {
    type Err = SeriesError;

    fn from_str(text: &str) -> Result<Series, SeriesError> {
        let mut coeffs: Vec<Poly> = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let bad = || SeriesError::Parse(line.to_string());
            let (head, body) = line.split_once(':').ok_or_else(bad)?;
            let n: usize = head.trim().strip_prefix("z^").ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if coeffs.len() <= n {
                coeffs.resize(n + 1, Poly::zero());
            }
            coeffs[n] = body.parse()?;
        }
        if coeffs.is_empty() {
            return Err(SeriesError::Parse(text.to_string()));
        }
        Ok(Series::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(cs: &[i64]) -> Series {
        Series::new(cs.iter().map(|&c| Poly::int(c)).collect())
    }

    #[test]
    fn product_truncates() {
        let a = ints(&[1, 1, 0, 0]);
        let b = ints(&[1, -1, 0, 0]);
        assert_eq!(&a * &b, ints(&[1, 0, -1, 0]));
        assert_eq!((&a * &ints(&[1, 1])).order(), 1);
        assert!(a.scale(&Rat::zero()).is_zero());
    }

    #[test]
    fn geometric_series() {
        let q = Series::one(6).div(&ints(&[1, -1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(q, ints(&[1; 7]));
    }

    #[test]
    fn shift_then_divide() {
        let a = ints(&[0, 1, 1, 0]);
        let q = a.div_z(1).unwrap();
        assert_eq!(q, ints(&[1, 1, 0]));
        assert!(matches!(ints(&[1, 1]).div_z(1), Err(SeriesError::NotDivisibleByZ { .. })));
        assert!(matches!(ints(&[0]).div_z(1), Err(SeriesError::OrderTooLow { .. })));
        assert_eq!(q.mul_z(1), a);
    }

    #[test]
    fn division_rejects_non_unit_constants() {
        let u_const = Series::constant(Poly::u(), 3);
        assert!(matches!(Series::one(3).div(&u_const), Err(SeriesError::NonUnitConstant(s)) if s == "u"));
        assert!(Series::one(3).div(&Series::zero(3)).is_err());
        assert_eq!(Series::one(2).div(&ints(&[2, 0, 0])).unwrap().coeff(0), &Poly::constant(Rat::new(1.into(), 2.into())));
    }

    #[test]
    fn motzkin_square_root() {
        // sqrt(1 - 2z - 3z^2) = 1 - z - 2z^2 - 2 Σ_{n>=1} M_{n-1} z^{n+1}
        let s = ints(&[1, -2, -3, 0, 0, 0, 0, 0, 0]).sqrt().unwrap();
        assert_eq!(s, ints(&[1, -1, -2, -2, -4, -8, -18, -42, -102]));
        assert_eq!(&s * &s, ints(&[1, -2, -3, 0, 0, 0, 0, 0, 0]));
        assert_eq!(Series::one(4).sqrt().unwrap(), Series::one(4));
        assert!(matches!(ints(&[4, 1]).sqrt(), Err(SeriesError::SqrtConstant(_))));
    }

    #[test]
    fn substitute_u_matches_specialization() {
        let s = Series::from_ints(&[(1, 0, 0, 0, 0), (1, 1, 1, 0, 0), (3, 2, 2, 0, 1)], 4);
        let two = Series::constant(Poly::int(2), 4);
        assert_eq!(s.substitute_u(&two), s.specialize(&Assignment::ints(Some(2), None, None)));
        let z = Series::z(4);
        assert_eq!(s.substitute_u(&z), Series::from_ints(&[(1, 0, 0, 0, 0), (1, 2, 0, 0, 0), (3, 4, 0, 0, 1)], 4));
    }

    #[test]
    fn text_round_trip() {
        let s = Series::from_ints(&[(1, 0, 0, 0, 0), (-2, 1, 1, 0, 1), (3, 3, 0, 2, 0)], 4);
        assert_eq!(s.to_string().parse::<Series>().unwrap(), s);
        assert!("z: 1".parse::<Series>().is_err());
    }

    #[test]
    fn text_format() {
        let s = Series::from_ints(&[(1, 0, 0, 0, 0), (1, 1, 1, 0, 0), (1, 1, 0, 0, 0)], 2);
        assert_eq!(s.to_string(), "z^0: 1\nz^1: 1 + u\nz^2: 0");
    }
}
