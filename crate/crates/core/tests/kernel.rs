use motzkin_core::series::identities::{all_identities, plain_boundary_identities};
use motzkin_core::series::kernel::{Kernel, KernelParams};
use motzkin_core::{boundary_values, kernel_r2, kernel_w, rat, Assignment, Series, Variant};

const N: usize = 14;

fn ints(c: &[i64]) -> Series {
    Series::from_ints(&c.iter().enumerate().map(|(k, &c)| (c, k, 0, 0, 0)).collect::<Vec<_>>(), c.len() - 1)
}

fn at(s: i64, t: i64) -> Assignment {
    Assignment::new(None, Some(rat(s)), Some(rat(t)))
}

#[test]
fn plain_w_at_one_is_motzkin_root() {
    let w = kernel_w(Variant::Plain, N).unwrap().specialize(&at(1, 1));
    let expected = ints(&[1, -2, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]).sqrt().unwrap();
    assert_eq!(w, expected);
    assert_eq!(kernel_w(Variant::Skew, N).unwrap().coeff(0).to_string(), "1");
}

#[test]
fn skew_radicand() {
    let k = Kernel::new(Variant::Skew, N).unwrap();
    assert_eq!(k.radicand().specialize(&at(0, 0)), ints(&[1, -2, -3, 0, 0, 8, 4, 0, 0, 0, 0, 0, 0, 0, 0]));
    // W^2 = P^2 - 8z^2 + 4 s t z^4
    let p = k.linear_coefficient();
    let rhs = &(&(&p * &p) - &Series::from_ints(&[(8, 2, 0, 0, 0)], N)) + &Series::from_ints(&[(4, 4, 0, 1, 1)], N);
    assert_eq!(k.radicand(), rhs);
}

#[test]
fn root_sum_and_product() {
    for (variant, product) in [
        (Variant::Plain, Series::from_ints(&[(1, 2, 0, 0, 0)], N)),
        (Variant::Skew, Series::from_ints(&[(2, 2, 0, 0, 0), (-1, 4, 0, 1, 1)], N)),
    ] {
        let k = Kernel::new(variant, N).unwrap();
        let p = k.linear_coefficient();
        assert_eq!(&k.zr1() + &k.zr2(), p);
        assert_eq!(&k.zr1() * &k.zr2(), product);
        let w = k.w();
        assert_eq!((&(&p * &p) - &(&w * &w)).scale(&rat(4).recip()), product);
    }
}

#[test]
fn r2_at_one() {
    let r2 = kernel_r2(Variant::Plain, 6).unwrap().specialize(&at(1, 1));
    // r2 = z * Motzkin(z) at sigma = tau = 1
    assert_eq!(r2, ints(&[0, 1, 1, 2, 4, 9, 21]));
}

#[test]
fn boundary_values_plain() {
    let bv = boundary_values(Variant::Plain, 10).unwrap();
    assert!(bv.f0.is_zero());
    assert!(bv.k0.is_none());
    let ones = Assignment::new(Some(rat(0)), Some(rat(1)), Some(rat(1)));
    assert_eq!(bv.sum().specialize(&ones), ints(&[1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]));
}

#[test]
fn boundary_values_skew() {
    let bv = boundary_values(Variant::Skew, 3).unwrap();
    assert!(bv.k0.is_some());
    let s = bv.sum();
    assert_eq!(s.coeff(2).to_string(), "1 + t");
    assert_eq!(s.coeff(3).to_string(), "3 + 2*t");
}

#[test]
fn closed_form_identities() {
    for c in plain_boundary_identities(20).unwrap() {
        assert!(c.holds(), "{}: z^{:?}", c.name, c.first_mismatch);
    }
    for variant in [Variant::Plain, Variant::Skew] {
        for c in all_identities(variant, 16).unwrap() {
            assert!(c.holds(), "{variant} {}: z^{:?}", c.name, c.first_mismatch);
        }
    }
}

#[test]
fn numeric_parameters() {
    // A kernel built with sigma, tau already fixed gives the specialization
    // of the symbolic one.
    let params = KernelParams::with(Some(rat(2)), Some(rat(-1)));
    let numeric = Kernel::with_params(Variant::Skew, 10, params).unwrap().closed_form().unwrap().total();
    let symbolic = Kernel::new(Variant::Skew, 10).unwrap().closed_form().unwrap().total();
    assert_eq!(numeric, symbolic.specialize(&at(2, -1)));
}
