//! Cross-checks between the solved series and the explicit closed forms:
//! the boundary values `G(0)`, `H(0)` with their non-unit denominators
//! cleared, the numerators before the factor `u - r₂` is cancelled, and
//! the final rational expressions in `R = r₂`.
//!
//! Each check compares two independently assembled series up to the
//! kernel's order and reports the first power of `z` where they differ.

use alloc::vec;
use alloc::vec::Vec;

use super::kernel::Kernel;
use super::{Poly, Series};
use crate::error::SeriesError;
use crate::paths::Variant;

type Terms = [(i64, usize, u32, u32, u32)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// `None` when both sides agree up to the order.
    pub first_mismatch: Option<usize>,
}

impl IdentityCheck {
    fn compare(name: &'static str, lhs: &Series, rhs: &Series) -> Self {
        IdentityCheck { name, first_mismatch: lhs.first_difference(rhs) }
    }

    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// `Σ_e terms_e · r^e`.
fn in_r(k: &Kernel, r: &Series, parts: &[&Terms]) -> Series {
    let order = k.order();
    let mut out = Series::zero(order);
    let mut power = Series::one(order);
    for (e, part) in parts.iter().enumerate() {
        if e > 0 {
            power = &power * r;
        }
        out = &out + &(&k.zupoly(part, order) * &power);
    }
    out
}

/// The three displayed closed forms for `G(0)`, `H(0)` and `G(0) + H(0)`,
/// each multiplied out by its denominator, and `F(0) = 0`.
pub fn plain_boundary_identities(order: usize) -> Result<Vec<IdentityCheck>, SeriesError> {
    let k = Kernel::new(Variant::Plain, order)?;
    let bv = k.boundary_values()?;
    let w = k.w();
    let z = |t: &Terms| k.zupoly(t, order);
    // -σ + σz - z
    let d = z(&[(-1, 0, 0, 1, 0), (1, 1, 0, 1, 0), (-1, 1, 0, 0, 0)]);

    let g_lhs = &bv.g0 * &d.mul_z(1).scale(&super::rat(2)).truncate(order);
    let g_rhs = &w + &z(&[
        (1, 2, 0, 1, 1),
        (-1, 3, 0, 1, 1),
        (1, 3, 0, 0, 1),
        (1, 3, 0, 1, 0),
        (-1, 3, 0, 0, 0),
        (-1, 2, 0, 0, 0),
        (1, 1, 0, 0, 0),
        (-2, 1, 0, 1, 0),
        (-1, 0, 0, 0, 0),
    ]);

    let h_lhs = &bv.h0 * &d.mul_z(2).scale(&super::rat(-2)).truncate(order);
    let h_rhs = &(&w.mul_z(1).truncate(order) - &w)
        + &z(&[
            (-1, 2, 0, 1, 1),
            (2, 3, 0, 1, 1),
            (-1, 3, 0, 0, 1),
            (-1, 4, 0, 1, 1),
            (1, 4, 0, 0, 1),
            (1, 4, 0, 1, 0),
            (-1, 4, 0, 0, 0),
            (-1, 3, 0, 1, 0),
            (-2, 1, 0, 0, 0),
            (1, 0, 0, 0, 0),
        ]);

    let s_lhs = &bv.sum() * &d.mul_z(2).scale(&super::rat(2)).truncate(order);
    let s_rhs = &w + &z(&[
        (-1, 0, 0, 0, 0),
        (-1, 3, 0, 0, 0),
        (1, 2, 0, 1, 1),
        (-1, 3, 0, 1, 1),
        (1, 3, 0, 0, 1),
        (1, 1, 0, 0, 0),
        (1, 2, 0, 0, 0),
        (-2, 2, 0, 1, 0),
        (1, 3, 0, 1, 0),
    ]);

    Ok(vec![
        IdentityCheck::compare("G(0) closed form", &g_lhs, &g_rhs),
        IdentityCheck::compare("H(0) closed form", &h_lhs, &h_rhs),
        IdentityCheck::compare("G(0)+H(0) closed form", &s_lhs, &s_rhs),
        IdentityCheck { name: "F(0) = 0", first_mismatch: (0..=order).find(|&n| !bv.f0.coeff(n).is_zero()) },
    ])
}

/// The numerators over `z(u - r₁)(u - r₂)` equal the cancelled numerators
/// times `u - r₂`.
pub fn cancellation_identities(variant: Variant, order: usize) -> Result<Vec<IdentityCheck>, SeriesError> {
    let k = Kernel::new(variant, order)?;
    let bv = k.boundary_values()?;
    let gf = k.closed_form()?;
    let s = bv.sum();
    let u_minus_r2 = &Series::constant(Poly::u(), order) - &k.r2();
    let denom = &Series::term(Poly::u(), 1, order) - &k.zr1();
    let z = |t: &Terms| k.zupoly(t, order);

    // Undivided numerators, each as (S-free part) + (coefficient of S)·S.
    let undivided: Vec<(&'static str, Series, Series)> = match variant {
        Variant::Plain => vec![
            (
                "F numerator",
                z(&[(-1, 2, 1, 1, 0), (1, 2, 1, 0, 0), (-1, 1, 2, 0, 0)]),
                z(&[(1, 2, 1, 1, 0), (-1, 3, 1, 1, 0), (1, 3, 1, 0, 0)]),
            ),
            (
                "G numerator",
                z(&[(1, 1, 2, 0, 0), (1, 2, 1, 1, 1), (-1, 2, 1, 0, 0), (-1, 0, 1, 0, 0), (1, 1, 0, 0, 0)]),
                z(&[(1, 3, 1, 1, 0), (-1, 3, 1, 0, 0), (1, 2, 0, 0, 0)]),
            ),
            (
                "H numerator",
                z(&[(1, 2, 1, 0, 0), (-1, 1, 0, 0, 0), (-1, 2, 1, 0, 1)]),
                z(&[(-1, 2, 1, 0, 0), (1, 1, 0, 0, 0), (-1, 2, 0, 0, 0)]),
            ),
        ],
        Variant::Skew => vec![
            (
                "F numerator",
                z(&[(-1, 2, 1, 1, 0), (2, 2, 1, 0, 0), (-1, 1, 2, 0, 0)]),
                z(&[(-1, 3, 1, 1, 0), (1, 2, 1, 1, 0), (2, 3, 1, 0, 0)]),
            ),
            (
                "G numerator",
                z(&[(-1, 3, 0, 1, 1), (1, 2, 1, 1, 1), (1, 1, 2, 0, 0), (-2, 2, 1, 0, 0), (2, 1, 0, 0, 0), (-1, 0, 1, 0, 0)]),
                z(&[(-1, 4, 0, 1, 1), (1, 3, 1, 1, 0), (-2, 3, 1, 0, 0), (2, 2, 0, 0, 0)]),
            ),
            (
                "H numerator",
                z(&[(1, 3, 0, 0, 1), (-1, 2, 1, 0, 1), (1, 2, 1, 0, 0), (-1, 1, 0, 0, 0)]),
                z(&[(1, 4, 0, 0, 1), (1, 1, 0, 0, 0), (-1, 2, 0, 0, 0), (-1, 2, 1, 0, 0)]),
            ),
            (
                "K numerator",
                z(&[(1, 3, 0, 1, 1), (1, 2, 1, 0, 0), (-1, 3, 0, 0, 1), (-1, 1, 0, 0, 0)]),
                z(&[(-1, 3, 0, 1, 1), (1, 4, 0, 1, 1), (1, 1, 0, 0, 0), (-1, 2, 0, 0, 0), (-1, 2, 1, 0, 0), (-1, 4, 0, 0, 1)]),
            ),
        ],
    };
    let solved = [Some(&gf.f), Some(&gf.g), Some(&gf.h), gf.k.as_ref()];
    let mut checks = Vec::new();
    for ((name, base, sum_coeff), x) in undivided.iter().zip(solved.into_iter().flatten()) {
        let lhs = base + &(sum_coeff * &s);
        // X(u)·(zu - z r₁) is the cancelled numerator.
        let rhs = &(x * &denom) * &u_minus_r2;
        checks.push(IdentityCheck::compare(name, &lhs, &rhs));
    }
    Ok(checks)
}

/// The final explicit forms in `R = r₂`: plain `F, G, H`, and the skew total
/// `𝒜 / ℬ`. Both denominators are units.
pub fn final_form_identities(variant: Variant, order: usize) -> Result<Vec<IdentityCheck>, SeriesError> {
    let k = Kernel::new(variant, order)?;
    let gf = k.closed_form()?;
    let r = k.r2();
    let rz: &Terms = &[(1, 1, 0, 0, 0)];
    match variant {
        Variant::Plain => {
            let den1 = in_r(
                &k,
                &r,
                &[
                    &[(-1, 3, 0, 1, 1), (1, 3, 0, 0, 1), (1, 2, 0, 1, 1), (-1, 2, 0, 0, 0), (-1, 0, 0, 0, 0), (1, 1, 0, 0, 0), (-1, 3, 0, 0, 0), (1, 3, 0, 1, 0), (1, 1, 1, 0, 0)],
                    rz,
                ],
            );
            let den2 = in_r(&k, &r, &[&[(-1, 0, 0, 0, 0), (1, 3, 0, 0, 1), (1, 2, 0, 1, 1), (-1, 3, 0, 1, 1), (1, 1, 0, 0, 0)], rz]);
            let den = &den1 * &den2;
            let f_inner = in_r(
                &k,
                &r,
                &[
                    &[(-1, 3, 1, 1, 1), (1, 3, 1, 0, 1), (1, 2, 1, 1, 1), (1, 1, 1, 0, 0), (1, 1, 0, 0, 0), (-1, 0, 1, 0, 0)],
                    &[(-1, 3, 0, 0, 0), (-1, 3, 0, 1, 1), (1, 3, 0, 0, 1), (1, 3, 0, 1, 0), (1, 2, 0, 1, 1), (-1, 2, 0, 0, 0), (1, 1, 1, 0, 0), (1, 1, 0, 0, 0), (-1, 0, 0, 0, 0)],
                    rz,
                ],
            );
            let f_num = -&f_inner.mul_z(1).truncate(k.order());
            let g_num = in_r(
                &k,
                &r,
                &[
                    &[
                        (1, 0, 0, 0, 0),
                        (-1, 4, 1, 1, 1),
                        (-2, 2, 0, 1, 1),
                        (2, 3, 0, 1, 1),
                        (-1, 3, 0, 0, 1),
                        (1, 4, 1, 0, 1),
                        (-1, 1, 0, 0, 0),
                        (1, 3, 1, 1, 1),
                        (1, 2, 1, 0, 0),
                        (-1, 5, 0, 1, 1),
                        (-1, 1, 1, 0, 0),
                        (1, 2, 0, 0, 0),
                        (-1, 5, 0, 2, 2),
                        (-1, 4, 0, 1, 1),
                        (1, 5, 0, 1, 2),
                        (1, 4, 0, 2, 2),
                        (1, 5, 0, 2, 1),
                        (-1, 3, 0, 1, 0),
                    ],
                    &[(1, 2, 1, 0, 0), (2, 3, 0, 1, 1), (-1, 4, 0, 1, 1), (-1, 3, 0, 0, 0), (1, 2, 0, 0, 0), (-1, 4, 0, 0, 0), (1, 4, 0, 0, 1), (1, 4, 0, 1, 0), (-2, 1, 0, 0, 0)],
                    &[(1, 2, 0, 0, 0)],
                ],
            );
            let h_inner = in_r(
                &k,
                &r,
                &[
                    &[(-1, 0, 0, 0, 1), (1, 3, 0, 0, 2), (1, 2, 0, 1, 2), (-1, 3, 0, 1, 2), (-1, 2, 0, 0, 1), (1, 1, 0, 0, 1), (-1, 3, 0, 0, 1), (1, 3, 0, 1, 1), (-1, 1, 0, 0, 0)],
                    &[(1, 1, 0, 0, 1)],
                ],
            );
            let h_num = -&h_inner.mul_z(2).truncate(k.order());
            Ok(vec![
                IdentityCheck::compare("F(u) in R", &f_num.div(&den)?, &gf.f),
                IdentityCheck::compare("G(u) in R", &g_num.div(&den)?, &gf.g),
                IdentityCheck::compare("H(u) in R", &h_num.div(&den)?, &gf.h),
            ])
        }
        Variant::Skew => {
            let a = in_r(
                &k,
                &r,
                &[
                    &[
                        (-1, 5, 0, 2, 2),
                        (2, 5, 0, 0, 1),
                        (-1, 5, 0, 0, 2),
                        (-3, 5, 0, 1, 1),
                        (2, 5, 0, 1, 2),
                        (1, 5, 0, 2, 1),
                        (-1, 4, 0, 1, 1),
                        (1, 4, 0, 2, 2),
                        (-1, 4, 0, 1, 2),
                        (2, 4, 0, 0, 1),
                        (-2, 3, 0, 0, 1),
                        (2, 3, 0, 0, 0),
                        (2, 3, 0, 1, 1),
                        (-1, 3, 0, 1, 0),
                        (-2, 2, 0, 1, 1),
                        (1, 2, 0, 0, 1),
                        (-1, 1, 0, 0, 0),
                        (1, 0, 0, 0, 0),
                    ],
                    &[(1, 3, 0, 1, 1), (-1, 3, 0, 0, 1), (-1, 1, 0, 0, 0)],
                ],
            );
            let b1 = in_r(
                &k,
                &r,
                &[
                    &[(1, 3, 0, 0, 1), (1, 3, 0, 1, 0), (-2, 3, 0, 0, 0), (-1, 3, 0, 1, 1), (1, 2, 0, 1, 1), (-2, 2, 0, 0, 0), (1, 1, 0, 0, 0), (-1, 0, 0, 0, 0), (1, 1, 1, 0, 0)],
                    rz,
                ],
            );
            let b2 = in_r(&k, &r, &[&[(1, 3, 0, 0, 1), (-1, 3, 0, 1, 1), (1, 2, 0, 1, 1), (1, 1, 0, 0, 0), (-1, 0, 0, 0, 0)], rz]);
            Ok(vec![IdentityCheck::compare("F+G+H+K = A/B", &a.div(&(&b1 * &b2))?, &gf.total())])
        }
    }
}

/// Every identity that applies to the variant.
pub fn all_identities(variant: Variant, order: usize) -> Result<Vec<IdentityCheck>, SeriesError> {
    let mut out = Vec::new();
    if variant == Variant::Plain {
        out.extend(plain_boundary_identities(order)?);
    }
    out.extend(cancellation_identities(variant, order)?);
    out.extend(final_form_identities(variant, order)?);
    Ok(out)
}
