//! Cross-checks between the independent engines for one variant.

use std::fmt;

use motzkin_core::oracle::{enumerate_restricted, Restriction};
use motzkin_core::series::identities::all_identities;
use motzkin_core::{closed_form, count_table, dp_count, dp_series, from_bargraph, to_bargraph, Step, Variant};

use crate::Error;

pub const MAX_PLAIN: usize = 14;
pub const MAX_SKEW: usize = 12;

pub fn max_n(variant: Variant) -> usize {
    match variant {
        Variant::Plain => MAX_PLAIN,
        Variant::Skew => MAX_SKEW,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    /// `None` on success, otherwise the first counterexample.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {:<24} {} checked", self.name, self.checked),
            Some(why) => write!(f, "FAIL {:<24} {why}", self.name),
        }
    }
}

fn oracle_vs_dp(variant: Variant, n: usize) -> Result<SuiteResult, Error> {
    let oracle = count_table(n, variant)?;
    let dp = dp_count(n, variant);
    let failure = oracle.first_difference(&dp).map(|k| {
        format!(
            "(n={}, j={}, k={}, l={}): oracle {} dp {}",
            k.n,
            k.level,
            k.ud,
            k.du,
            oracle.get(&k),
            dp.get(&k)
        )
    });
    Ok(SuiteResult { name: "oracle = dp", checked: oracle.len(), failure })
}

fn dp_vs_closed_form(variant: Variant, n: usize) -> Result<SuiteResult, Error> {
    let dp = dp_series(n, variant);
    let gf = closed_form(variant, n)?;
    let cf = gf.total();
    let failure = match cf.first_difference(&dp) {
        Some(k) => Some(format!("z^{k}: closed form {} dp {}", cf.coeff(k), dp.coeff(k))),
        None if !gf.is_integral() => Some("non-integral coefficient in the closed form".into()),
        None => None,
    };
    Ok(SuiteResult { name: "dp = closed form", checked: n + 1, failure })
}

fn closed_form_identities(variant: Variant, n: usize) -> Result<SuiteResult, Error> {
    let checks = all_identities(variant, n)?;
    let failure = checks.iter().find(|c| !c.holds()).map(|c| format!("{} differs at z^{:?}", c.name, c.first_mismatch));
    Ok(SuiteResult { name: "closed-form identities", checked: checks.len(), failure })
}

fn bijection(n: usize) -> Result<SuiteResult, Error> {
    let mut checked = 0;
    for len in 1..=n {
        for w in enumerate_restricted(len, Variant::Plain, Restriction::CORNERLESS_EXCURSIONS)? {
            let b = to_bargraph(&w)?;
            let back = from_bargraph(&b)?;
            let law = w.count(Step::U) + 1 + w.count(Step::H);
            if back != w || b.semiperimeter() != law {
                let failure = Some(format!("{w} -> {b} -> {back} (semiperimeter {})", b.semiperimeter()));
                return Ok(SuiteResult { name: "bargraph round trip", checked, failure });
            }
            checked += 1;
        }
    }
    Ok(SuiteResult { name: "bargraph round trip", checked, failure: None })
}

/// Runs every suite up to length `n`. The bijection suite concerns plain
/// paths and runs for both variants.
pub fn run(variant: Variant, n: usize) -> Result<Vec<SuiteResult>, Error> {
    let max = max_n(variant);
    if n > max {
        return Err(Error::Usage(format!("--max-n {n} exceeds the {variant} bound {max}")));
    }
    Ok(vec![oracle_vs_dp(variant, n)?, dp_vs_closed_form(variant, n)?, closed_form_identities(variant, n)?, bijection(n)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        for variant in [Variant::Plain, Variant::Skew] {
            for r in run(variant, 6).unwrap() {
                assert!(r.passed(), "{r}");
            }
        }
        assert!(matches!(run(Variant::Skew, 13), Err(Error::Usage(_))));
    }
}
