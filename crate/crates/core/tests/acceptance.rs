//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use common::{display, displays, integers, series_with, units};
use motzkin_core::oracle::{enumerate_restricted, Restriction};
use motzkin_core::series::identities::plain_boundary_identities;
use motzkin_core::{
    closed_form, count_table, dp_count, dp_series, enumerate_bargraphs, from_bargraph, rat, to_bargraph, Assignment,
    Bargraph, GeneratingFunctions, Poly, Series, Step, Variant,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Shared) -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Closed forms at the largest order any criterion needs, computed once.
struct Shared {
    plain: GeneratingFunctions,
    skew: GeneratingFunctions,
}

impl Shared {
    fn total(&self, variant: Variant, order: usize) -> Series {
        match variant {
            Variant::Plain => self.plain.total().truncate(order),
            Variant::Skew => self.skew.total().truncate(order),
        }
    }
}

fn oracle_equals_dp(_: &Shared) -> Outcome {
    let mut entries = 0;
    for (variant, n_max) in [(Variant::Plain, 14), (Variant::Skew, 12)] {
        let oracle = count_table(n_max, variant).map_err(|e| e.to_string())?;
        let dp = dp_count(n_max, variant);
        if let Some(key) = oracle.first_difference(&dp) {
            return Err(format!(
                "{variant}: (n={}, j={}, ud={}, du={}) oracle {} dp {}",
                key.n,
                key.level,
                key.ud,
                key.du,
                oracle.get(&key),
                dp.get(&key)
            ));
        }
        entries += oracle.len();
    }
    Ok(format!("{entries} table entries, plain n<=14, skew n<=12"))
}

fn dp_equals_closed_form(shared: &Shared) -> Outcome {
    for (variant, order) in [(Variant::Plain, 20), (Variant::Skew, 16)] {
        let dp = dp_series(order, variant);
        if let Some(n) = shared.total(variant, order).first_difference(&dp) {
            return Err(format!("{variant}: first difference at z^{n}"));
        }
    }
    Ok("plain to z^20, skew to z^16, symbolic in u, s, t".into())
}

fn check_display(shared: &Shared, name: &str) -> Result<(), String> {
    let d = display(name);
    let expected = d.series.ok_or_else(|| format!("{name} has no expansion"))?;
    let got = shared.total(d.variant, expected.order()).specialize(&d.assign);
    match got.first_difference(&expected) {
        None => Ok(()),
        Some(n) => Err(format!("{name}: z^{n} is {} expected {}", got.coeff(n), expected.coeff(n))),
    }
}

fn plain_coefficients(shared: &Shared) -> Outcome {
    for name in ["plain-total", "plain-return", "plain-open"] {
        check_display(shared, name)?;
    }
    Ok("F+G+H to z^7, u=0 to z^7, u=1 to z^7".into())
}

fn univariate_specializations(shared: &Shared) -> Outcome {
    let mut names = Vec::new();
    for d in displays().into_iter().filter(|d| d.seq.is_some() && d.variant == Variant::Plain) {
        let seq = d.seq.unwrap();
        let got = integers(&shared.total(d.variant, seq.len() - 1).specialize(&d.assign));
        ensure(got == seq, || format!("{}: got {got:?}", d.name))?;
        names.push(d.name);
    }
    ensure(names.len() == 8, || format!("expected 8 sequences, found {}", names.len()))?;
    Ok(names.join(", "))
}

fn skew_displays(shared: &Shared) -> Outcome {
    check_display(shared, "skew-return")?;
    check_display(shared, "skew-open")?;
    let ones = Assignment::new(Some(rat(1)), Some(rat(1)), Some(rat(1)));
    let series = integers(&shared.total(Variant::Skew, 12).specialize(&ones));
    let oracle = count_table(12, Variant::Skew).map_err(|e| e.to_string())?;
    let counted: Vec<_> = (0..=12).map(|n| oracle.total(n).into()).collect();
    ensure(series == counted, || format!("open skew totals {series:?} vs oracle {counted:?}"))?;
    // Returning skew paths of length n and bargraphs of semiperimeter n + 1
    // are equinumerous; the bargraph side is counted independently.
    let returning = Assignment::new(Some(rat(0)), Some(rat(1)), Some(rat(1)));
    let returning = integers(&shared.total(Variant::Skew, 11).specialize(&returning));
    let mut bargraphs = vec![1u32.into()];
    for s in 2..=12 {
        bargraphs.push(enumerate_bargraphs(s).map_err(|e| e.to_string())?.count().into());
    }
    ensure(returning == bargraphs, || format!("returning {returning:?} vs bargraphs {bargraphs:?}"))?;
    let show = |v: &[num_bigint::BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    Ok(format!(
        "returning to z^8, open to z^7; s=t=1 open {} = oracle; returning {} = bargraphs",
        show(&counted),
        show(&returning)
    ))
}

fn boundary_identities(_: &Shared) -> Outcome {
    let checks = plain_boundary_identities(20).map_err(|e| e.to_string())?;
    for c in &checks {
        ensure(c.holds(), || format!("{} differs at z^{}", c.name, c.first_mismatch.unwrap()))?;
    }
    Ok(format!("{} identities to z^20", checks.len()))
}

fn bijection(_: &Shared) -> Outcome {
    let mut round_trips = 0;
    let mut by_s: BTreeMap<usize, Vec<Bargraph>> = BTreeMap::new();
    for n in 0..=17 {
        for w in enumerate_restricted(n, Variant::Plain, Restriction::CORNERLESS_EXCURSIONS).map_err(|e| e.to_string())? {
            let b = to_bargraph(&w).map_err(|e| e.to_string())?;
            if w.is_empty() {
                ensure(b.is_empty(), || "empty path must map to the empty bargraph".into())?;
                continue;
            }
            let law = w.count(Step::U) + 1 + w.count(Step::H);
            ensure(b.semiperimeter() == law, || format!("{w}: semiperimeter {} vs {law}", b.semiperimeter()))?;
            if n <= 12 {
                let back = from_bargraph(&b).map_err(|e| e.to_string())?;
                ensure(back == w, || format!("{w} -> {b} -> {back}"))?;
                round_trips += 1;
            }
            by_s.entry(b.semiperimeter()).or_default().push(b);
        }
    }
    let mut counts = Vec::new();
    for s in 1..=10 {
        let mut image = by_s.remove(&s).unwrap_or_default();
        image.sort();
        let mut oracle: Vec<Bargraph> = enumerate_bargraphs(s).map_err(|e| e.to_string())?.collect();
        oracle.sort();
        ensure(image == oracle, || format!("semiperimeter {s}: {} images vs {} bargraphs", image.len(), oracle.len()))?;
        counts.push(oracle.len().to_string());
    }
    Ok(format!("{round_trips} round trips; bargraphs by semiperimeter 1..10: {}", counts.join(",")))
}

fn engine_soundness(shared: &Shared) -> Outcome {
    let cases = 128;
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner
        .run(&units(2), |ab| {
            let (a, b) = (&ab[0], &ab[1]);
            let q = a.div(b).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(&q * b, a.clone());
            Ok(())
        })
        .map_err(|e| format!("div: {e}"))?;
    let unit_constant = (0usize..3).prop_flat_map(|v| series_with(v, Just(rat(1))));
    runner
        .run(&unit_constant, |a| {
            let s = a.sqrt().map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(s.coeff(0), &Poly::one());
            prop_assert_eq!(&s * &s, a);
            Ok(())
        })
        .map_err(|e| format!("sqrt: {e}"))?;
    for (variant, gf) in [(Variant::Plain, &shared.plain), (Variant::Skew, &shared.skew)] {
        ensure(gf.is_integral(), || format!("{variant}: a coefficient is not an integer"))?;
    }
    Ok(format!("{cases} div and {cases} sqrt cases at order 16; F, G, H, K integral to z^24"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let shared = match (closed_form(Variant::Plain, 24), closed_form(Variant::Skew, 24)) {
        (Ok(plain), Ok(skew)) => Shared { plain, skew },
        (p, s) => {
            println!("FAIL setup: closed forms at z^24: {:?} {:?}", p.err(), s.err());
            return ExitCode::FAILURE;
        }
    };
    println!("closed forms to z^24 computed in {:.1?}", start.elapsed());

    let criteria: [Criterion; 8] = [
        ("oracle equals DP", oracle_equals_dp),
        ("DP equals closed form", dp_equals_closed_form),
        ("plain coefficient displays", plain_coefficients),
        ("plain univariate specializations", univariate_specializations),
        ("skew displays and open totals", skew_displays),
        ("plain boundary identities", boundary_identities),
        ("bargraph bijection", bijection),
        ("series engine soundness", engine_soundness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check(&shared) {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({:.1?})", i + 1, t.elapsed()),
            Err(reason) => {
                failed += 1;
                println!("FAIL [{}] {name}: {reason} ({:.1?})", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
