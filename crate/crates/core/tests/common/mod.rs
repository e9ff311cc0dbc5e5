#![allow(dead_code)]

use motzkin_core::{rat, Assignment, Monomial, Poly, Rat, Series, Variant};
use proptest::prelude::*;
use num_bigint::BigInt;

pub const DISPLAYS: &str = include_str!("../fixtures/displays.txt");

#[derive(Debug)]
pub struct Display {
    pub name: String,
    pub variant: Variant,
    pub assign: Assignment,
    pub series: Option<Series>,
    pub seq: Option<Vec<BigInt>>,
}

fn parse_assignment(text: &str) -> Assignment {
    let mut a = Assignment::default();
    for part in text.split_whitespace().filter(|p| *p != "sym") {
        let (var, val) = part.split_once('=').expect("var=value");
        let v = Some(rat(val.parse().expect("integer value")));
        match var {
            "u" => a.u = v,
            "s" => a.sigma = v,
            "t" => a.tau = v,
            other => panic!("unknown variable {other}"),
        }
    }
    a
}

pub fn displays() -> Vec<Display> {
    let mut out = Vec::new();
    for block in DISPLAYS.split("\n[").skip(1) {
        let (name, body) = block.split_once(']').expect("section header");
        let mut variant = None;
        let mut assign = Assignment::default();
        let mut series_text = String::new();
        let mut seq = None;
        for line in body.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            if let Some(v) = line.strip_prefix("variant = ") {
                variant = Some(v.parse().expect("variant"));
            } else if let Some(v) = line.strip_prefix("assign = ") {
                assign = parse_assignment(v);
            } else if let Some(v) = line.strip_prefix("seq:") {
                seq = Some(v.split(',').map(|x| x.trim().parse().expect("integer")).collect());
            } else {
                series_text.push_str(line);
                series_text.push('\n');
            }
        }
        out.push(Display {
            name: name.to_string(),
            variant: variant.expect("variant line"),
            assign,
            series: (!series_text.is_empty()).then(|| series_text.parse().expect("series")),
            seq,
        });
    }
    out
}

pub fn display(name: &str) -> Display {
    displays().into_iter().find(|d| d.name == name).unwrap_or_else(|| panic!("no display {name}"))
}

/// Integer coefficients of a series with no free variables.
pub fn integers(s: &Series) -> Vec<BigInt> {
    s.coeffs()
        .iter()
        .map(|c| {
            let r = c.as_constant().unwrap_or_else(|| panic!("not constant: {c}"));
            assert!(r.is_integer(), "not integral: {r}");
            r.to_integer()
        })
        .collect()
}

/// Order of the random series used by the engine properties.
pub const ORDER: usize = 16;

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

/// `a + b·v` with `v` one of `u`, `σ`, `τ` (index 0, 1, 2).
pub fn linear(var: usize) -> impl Strategy<Value = Poly> {
    (small_rat(), small_rat()).prop_map(move |(a, b)| {
        let v = [Monomial::U, Monomial::SIGMA, Monomial::TAU][var];
        let mut p = Poly::constant(a);
        p.add_term(v, b);
        p
    })
}

/// A series in `Q[v][[z]]` whose constant term is `constant`.
pub fn series_with(var: usize, constant: impl Strategy<Value = Rat>) -> impl Strategy<Value = Series> {
    (constant, prop::collection::vec(linear(var), ORDER)).prop_map(|(c, rest)| {
        let mut coeffs = vec![Poly::constant(c)];
        coeffs.extend(rest);
        Series::new(coeffs)
    })
}

pub fn unit() -> impl Strategy<Value = Rat> {
    (prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=3).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

pub fn units(count: usize) -> impl Strategy<Value = Vec<Series>> {
    (0usize..3).prop_flat_map(move |v| prop::collection::vec(series_with(v, unit()), count))
}

