//! Kernel-method solution of the functional equations for `F, G, H` (and
//! `K` for skew paths), the generating functions of meanders whose last
//! step is `U`, `H`-or-nothing, `D` (and `L`), with `u` marking the end
//! level.
//!
//! The common denominator factors as `z (u - r₁)(u - r₂)`. Only `r₂` has a
//! power-series expansion; `r₁` has a pole at `z = 0` and is never built.
//! Every denominator is written with `z·r₁ = (P + W) / 2` instead, whose
//! constant term is 1, so `z(u - r₁) = zu - z·r₁` is invertible.
//!
//! Once the factor `u - r₂` is cancelled, each generating function reads
//!
//! ```text
//! X(u) = (A_X + B_X·u + C_X·S) / (z·u - z·r₁),   S = G(0) + H(0) [+ K(0)]
//! ```
//!
//! and setting `u = 0` gives a linear system for the boundary values whose
//! matrix is `-I` modulo `z`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Poly, Rat, Series};
use crate::error::SeriesError;
use crate::paths::Variant;

/// Values of `σ` and `τ` used while building the series. Symbolic by
/// default; numeric values make the pipeline much cheaper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelParams {
    pub sigma: Poly,
    pub tau: Poly,
}

impl Default for KernelParams {
    fn default() -> Self {
        KernelParams::symbolic()
    }
}

impl KernelParams {
    pub fn symbolic() -> Self {
        KernelParams { sigma: Poly::sigma(), tau: Poly::tau() }
    }

    pub fn with(sigma: Option<Rat>, tau: Option<Rat>) -> Self {
        KernelParams {
            sigma: sigma.map_or_else(Poly::sigma, Poly::constant),
            tau: tau.map_or_else(Poly::tau, Poly::constant),
        }
    }

    /// `c · σ^a · τ^b`.
    fn term(&self, c: i64, a: u32, b: u32) -> Poly {
        let mut p = Poly::int(c);
        for _ in 0..a {
            p = &p * &self.sigma;
        }
        for _ in 0..b {
            p = &p * &self.tau;
        }
        p
    }
}

/// Boundary values: the generating functions of meanders that end at level 0,
/// split by the kind of the last step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryValues {
    pub f0: Series,
    pub g0: Series,
    pub h0: Series,
    /// Skew only.
    pub k0: Option<Series>,
}

impl BoundaryValues {
    /// `G(0) + H(0) [+ K(0)]`.
    pub fn sum(&self) -> Series {
        let s = &self.g0 + &self.h0;
        match &self.k0 {
            Some(k0) => &s + k0,
            None => s,
        }
    }

    fn truncate(&self, order: usize) -> BoundaryValues {
        BoundaryValues {
            f0: self.f0.truncate(order),
            g0: self.g0.truncate(order),
            h0: self.h0.truncate(order),
            k0: self.k0.as_ref().map(|k| k.truncate(order)),
        }
    }
}

/// `F(u), G(u), H(u)` and, for skew paths, `K(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingFunctions {
    pub f: Series,
    pub g: Series,
    pub h: Series,
    pub k: Option<Series>,
}

impl GeneratingFunctions {
    pub fn total(&self) -> Series {
        let s = &(&self.f + &self.g) + &self.h;
        match &self.k {
            Some(k) => &s + k,
            None => s,
        }
    }

    pub fn is_integral(&self) -> bool {
        [Some(&self.f), Some(&self.g), Some(&self.h), self.k.as_ref()].into_iter().flatten().all(Series::is_integral)
    }
}

/// Numerator `base + u_coeff·u + sum_coeff·S` of a cancelled form.
#[derive(Clone, Debug)]
struct DividedForm {
    base: Series,
    u_coeff: Series,
    sum_coeff: Series,
}

impl DividedForm {
    fn at_zero(&self, sum: &Series) -> Series {
        &self.base + &(&self.sum_coeff * sum)
    }

    fn numerator(&self, sum: &Series) -> Series {
        &self.at_zero(sum) + &self.u_coeff.mul_poly(&Poly::u())
    }
}

/// The kernel data for one variant at one truncation order.
#[derive(Clone, Debug)]
pub struct Kernel {
    variant: Variant,
    order: usize,
    params: KernelParams,
    linear: Series,
    radicand: Series,
    w: Series,
    zr1: Series,
    zr2: Series,
}

impl Kernel {
    pub fn new(variant: Variant, order: usize) -> Result<Kernel, SeriesError> {
        Kernel::with_params(variant, order, KernelParams::symbolic())
    }

    pub fn with_params(variant: Variant, order: usize, params: KernelParams) -> Result<Kernel, SeriesError> {
        // One guard order: r₂ = z·r₂ / z loses a coefficient.
        let working = order + 1;
        let mut k = Kernel {
            variant,
            order,
            params,
            linear: Series::zero(working),
            radicand: Series::zero(working),
            w: Series::zero(working),
            zr1: Series::zero(working),
            zr2: Series::zero(working),
        };
        k.linear = k.linear_coefficient_at(working);
        k.radicand = k.radicand_at(working);
        k.w = k.radicand.sqrt()?;
        if !k.w.coeff(0).as_constant().is_some_and(|c| c.is_one()) {
            return Err(SeriesError::Consistency(format!("W has constant term {}", k.w.coeff(0))));
        }
        let half = Rat::new(1.into(), 2.into());
        k.zr1 = (&k.linear + &k.w).scale(&half);
        k.zr2 = (&k.linear - &k.w).scale(&half);
        if !k.zr2.coeff(0).is_zero() {
            return Err(SeriesError::Consistency(format!(
                "numerator of r2 has constant term {}",
                k.zr2.coeff(0)
            )));
        }
        Ok(k)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn params(&self) -> &KernelParams {
        &self.params
    }

    /// `Σ c·z^k·σ^a·τ^b` over `(c, k, a, b)`.
    pub(crate) fn zpoly(&self, terms: &[(i64, usize, u32, u32)], order: usize) -> Series {
        let mut coeffs = vec![Poly::zero(); order + 1];
        for &(c, k, a, b) in terms {
            if k <= order {
                coeffs[k] += &self.params.term(c, a, b);
            }
        }
        Series::new(coeffs)
    }

    /// `Σ c·z^k·u^e·σ^a·τ^b` over `(c, k, e, a, b)`.
    pub(crate) fn zupoly(&self, terms: &[(i64, usize, u32, u32, u32)], order: usize) -> Series {
        let mut coeffs = vec![Poly::zero(); order + 1];
        for &(c, k, e, a, b) in terms {
            if k <= order {
                coeffs[k] += &self.params.term(c, a, b).mul_monomial(super::Monomial::new(e, 0, 0));
            }
        }
        Series::new(coeffs)
    }

    /// `P = z·r₁ + z·r₂`, the coefficient of `-u` in the kernel
    /// `z u² - P u + (…)`.
    fn linear_coefficient_at(&self, order: usize) -> Series {
        match self.variant {
            // 1 - z + (1-τσ) z² + (τσ - σ + 1 - τ) z³
            Variant::Plain => self.zpoly(
                &[(1, 0, 0, 0), (-1, 1, 0, 0), (1, 2, 0, 0), (-1, 2, 1, 1), (1, 3, 1, 1), (-1, 3, 1, 0), (1, 3, 0, 0), (-1, 3, 0, 1)],
                order,
            ),
            // 1 - z + (2 - στ) z² + (2 + στ - σ - τ) z³
            Variant::Skew => self.zpoly(
                &[(1, 0, 0, 0), (-1, 1, 0, 0), (2, 2, 0, 0), (-1, 2, 1, 1), (2, 3, 0, 0), (1, 3, 1, 1), (-1, 3, 1, 0), (-1, 3, 0, 1)],
                order,
            ),
        }
    }

    /// `W²`.
    fn radicand_at(&self, order: usize) -> Series {
        match self.variant {
            Variant::Plain => {
                let two_z = Series::term(Poly::int(2), 1, order);
                let p = self.linear_coefficient_at(order);
                &(&p - &two_z) * &(&p + &two_z)
            }
            Variant::Skew => self.zpoly(
                &[
                    (1, 0, 0, 0),
                    (-2, 1, 0, 0),
                    (-3, 2, 0, 0),
                    (-2, 2, 1, 1),
                    (-2, 3, 0, 1),
                    (-2, 3, 1, 0),
                    (4, 3, 1, 1),
                    (2, 4, 0, 1),
                    (2, 4, 1, 0),
                    (-2, 4, 1, 1),
                    (1, 4, 2, 2),
                    (8, 5, 0, 0),
                    (-4, 5, 0, 1),
                    (-4, 5, 1, 0),
                    (2, 5, 1, 2),
                    (2, 5, 2, 1),
                    (-2, 5, 2, 2),
                    (4, 6, 0, 0),
                    (-4, 6, 0, 1),
                    (1, 6, 0, 2),
                    (-4, 6, 1, 0),
                    (1, 6, 2, 0),
                    (6, 6, 1, 1),
                    (-2, 6, 1, 2),
                    (-2, 6, 2, 1),
                    (1, 6, 2, 2),
                ],
                order,
            ),
        }
    }

    pub fn linear_coefficient(&self) -> Series {
        self.linear.truncate(self.order)
    }

    pub fn radicand(&self) -> Series {
        self.radicand.truncate(self.order)
    }

    pub fn w(&self) -> Series {
        self.w.truncate(self.order)
    }

    /// `z·r₁`, a unit.
    pub fn zr1(&self) -> Series {
        self.zr1.truncate(self.order)
    }

    pub fn zr2(&self) -> Series {
        self.zr2.truncate(self.order)
    }

    pub fn r2(&self) -> Series {
        self.zr2.div_z(1).expect("constant term checked at construction").truncate(self.order)
    }

    fn working_order(&self) -> usize {
        self.w.order()
    }

    /// Numerators of the cancelled forms, in the order F, G, H [, K].
    fn divided_forms(&self) -> Vec<DividedForm> {
        let m = self.working_order();
        let zr2 = &self.zr2;
        let z = |c: i64| Series::term(Poly::int(c), 1, m);
        match self.variant {
            Variant::Plain => vec![
                // -z (r₂ + u + (σz - z) + (z²σ - z² - zσ) S)
                DividedForm {
                    base: &(-zr2) + &self.zpoly(&[(-1, 2, 1, 0), (1, 2, 0, 0)], m),
                    u_coeff: z(-1),
                    sum_coeff: self.zpoly(&[(-1, 3, 1, 0), (1, 3, 0, 0), (1, 2, 1, 0)], m),
                },
                // z r₂ + (z³σ - z³) S + τσz² - z² - 1 + zu
                DividedForm {
                    base: zr2 + &self.zpoly(&[(1, 2, 1, 1), (-1, 2, 0, 0), (-1, 0, 0, 0)], m),
                    u_coeff: z(1),
                    sum_coeff: self.zpoly(&[(1, 3, 1, 0), (-1, 3, 0, 0)], m),
                },
                // -z² (S + τ - 1)
                DividedForm {
                    base: self.zpoly(&[(-1, 2, 0, 1), (1, 2, 0, 0)], m),
                    u_coeff: Series::zero(m),
                    sum_coeff: self.zpoly(&[(-1, 2, 0, 0)], m),
                },
            ],
            Variant::Skew => vec![
                // -z (r₂ + u + zσ - 2z + (z(z-1)σ - 2z²) S)
                DividedForm {
                    base: &(-zr2) + &self.zpoly(&[(-1, 2, 1, 0), (2, 2, 0, 0)], m),
                    u_coeff: z(-1),
                    sum_coeff: self.zpoly(&[(-1, 3, 1, 0), (1, 2, 1, 0), (2, 3, 0, 0)], m),
                },
                // z r₂ + z³(σ - 2) S + z²στ - 2z² - 1 + zu
                DividedForm {
                    base: zr2 + &self.zpoly(&[(1, 2, 1, 1), (-2, 2, 0, 0), (-1, 0, 0, 0)], m),
                    u_coeff: z(1),
                    sum_coeff: self.zpoly(&[(1, 3, 1, 0), (-2, 3, 0, 0)], m),
                },
                // -z² (-1 + τ + S); the opposite sign would make
                // H(0) = -τz² + O(z³).
                DividedForm {
                    base: self.zpoly(&[(1, 2, 0, 0), (-1, 2, 0, 1)], m),
                    u_coeff: Series::zero(m),
                    sum_coeff: self.zpoly(&[(-1, 2, 0, 0)], m),
                },
                // -z² (-1 + S)
                DividedForm {
                    base: self.zpoly(&[(1, 2, 0, 0)], m),
                    u_coeff: Series::zero(m),
                    sum_coeff: self.zpoly(&[(-1, 2, 0, 0)], m),
                },
            ],
        }
    }

    fn boundary_at_working_order(&self) -> Result<BoundaryValues, SeriesError> {
        let forms = self.divided_forms();
        let denom = -&self.zr1;
        // Unknowns are G(0), H(0) [, K(0)]: forms[1..].
        let unknowns = &forms[1..];
        let n = unknowns.len();
        let mut matrix = Vec::with_capacity(n);
        let mut rhs = Vec::with_capacity(n);
        for (i, form) in unknowns.iter().enumerate() {
            let row: Vec<Series> = (0..n)
                .map(|j| if i == j { &denom - &form.sum_coeff } else { -&form.sum_coeff })
                .collect();
            matrix.push(row);
            rhs.push(form.base.clone());
        }
        let values = solve_linear(matrix, rhs)?;
        let sum = values.iter().skip(1).fold(values[0].clone(), |acc, v| &acc + v);
        let f0 = forms[0].at_zero(&sum).div(&denom)?;
        let mut values = values.into_iter();
        Ok(BoundaryValues {
            f0,
            g0: values.next().expect("two or three unknowns"),
            h0: values.next().expect("two or three unknowns"),
            k0: values.next(),
        })
    }

    /// Solves the `u = 0` system exactly over the series ring.
    pub fn boundary_values(&self) -> Result<BoundaryValues, SeriesError> {
        Ok(self.boundary_at_working_order()?.truncate(self.order))
    }

    /// `F(u), G(u), H(u) [, K(u)]` as series with polynomial-in-`u`
    /// coefficients.
    pub fn closed_form(&self) -> Result<GeneratingFunctions, SeriesError> {
        let bv = self.boundary_at_working_order()?;
        let sum = bv.sum();
        let m = self.working_order();
        let denom = &Series::term(Poly::u(), 1, m) - &self.zr1;
        let mut out = Vec::new();
        for form in self.divided_forms() {
            out.push(form.numerator(&sum).div(&denom)?.truncate(self.order));
        }
        let mut out = out.into_iter();
        Ok(GeneratingFunctions {
            f: out.next().expect("F"),
            g: out.next().expect("G"),
            h: out.next().expect("H"),
            k: out.next(),
        })
    }
}

/// Gauss–Jordan elimination over the series ring. Every pivot must have a
/// nonzero rational constant term.
pub fn solve_linear(mut matrix: Vec<Vec<Series>>, mut rhs: Vec<Series>) -> Result<Vec<Series>, SeriesError> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| matrix[r][col].coeff(0).as_constant().is_some_and(|c| !c.is_zero()))
            .ok_or(SeriesError::SingularSystem(col))?;
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = matrix[col][col].recip()?;
        for entry in &mut matrix[col][col..] {
            *entry = &*entry * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r == col || matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col].clone();
            let pivot_row = matrix[col].clone();
            for (entry, p) in matrix[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *entry = &*entry - &(&factor * p);
            }
            let t = &factor * &rhs[col];
            rhs[r] = &rhs[r] - &t;
        }
    }
    Ok(rhs)
}

/// `W` with symbolic `σ, τ`.
pub fn kernel_w(variant: Variant, order: usize) -> Result<Series, SeriesError> {
    Ok(Kernel::new(variant, order)?.w())
}

/// `r₂ = (P - W) / (2z)` with symbolic `σ, τ`.
pub fn kernel_r2(variant: Variant, order: usize) -> Result<Series, SeriesError> {
    Ok(Kernel::new(variant, order)?.r2())
}

pub fn boundary_values(variant: Variant, order: usize) -> Result<BoundaryValues, SeriesError> {
    Kernel::new(variant, order)?.boundary_values()
}

pub fn closed_form(variant: Variant, order: usize) -> Result<GeneratingFunctions, SeriesError> {
    Kernel::new(variant, order)?.closed_form()
}

/// The total generating function with `σ` and `τ` fixed before the kernel
/// pipeline runs (cheaper than specializing afterwards).
pub fn closed_form_total_with(
    variant: Variant,
    order: usize,
    sigma: Option<Rat>,
    tau: Option<Rat>,
) -> Result<Series, SeriesError> {
    Ok(Kernel::with_params(variant, order, KernelParams::with(sigma, tau))?.closed_form()?.total())
}
