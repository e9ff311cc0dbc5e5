//! File formats: count tables as JSON and CSV, series as text and JSON,
//! automata as JSON.

use std::io;

use motzkin_core::automata::Transition;
use motzkin_core::{AutomatonSpec, CountKey, CountTable, Layer, Monomial, Poly, Rat, Series, State, Variant};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::Error;

/// One row of a count table: paths of length `n` ending at level `j` with
/// `ud` peaks and `du` valleys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub j: usize,
    pub ud: usize,
    pub du: usize,
    /// Decimal string; counts are unbounded.
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTableJson {
    pub variant: String,
    pub n_max: usize,
    pub rows: Vec<CountRow>,
}

pub fn rows<'a>(entries: impl Iterator<Item = (&'a CountKey, &'a BigUint)>) -> Vec<CountRow> {
    entries
        .map(|(k, c)| CountRow { n: k.n, j: k.level, ud: k.ud, du: k.du, count: c.to_string() })
        .collect()
}

pub fn table_to_json(table: &CountTable, rows: Vec<CountRow>) -> CountTableJson {
    CountTableJson { variant: table.variant().name().into(), n_max: table.n_max(), rows }
}

pub fn table_from_json(json: &CountTableJson) -> Result<CountTable, Error> {
    let variant: Variant = json.variant.parse().map_err(Error::Format)?;
    let mut table = CountTable::new(variant, json.n_max);
    for r in &json.rows {
        let count: BigUint = r.count.parse().map_err(|_| Error::Format(format!("bad count {:?}", r.count)))?;
        table.add(CountKey::new(r.n, r.j, r.ud, r.du), count);
    }
    Ok(table)
}

pub fn write_csv(rows: &[CountRow], out: impl io::Write) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(input: impl io::Read) -> Result<Vec<CountRow>, Error> {
    let mut r = csv::Reader::from_reader(input);
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

pub fn write_text(rows: &[CountRow], mut out: impl io::Write) -> io::Result<()> {
    writeln!(out, "{:>3} {:>3} {:>3} {:>3}  count", "n", "j", "ud", "du")?;
    for r in rows {
        writeln!(out, "{:>3} {:>3} {:>3} {:>3}  {}", r.n, r.j, r.ud, r.du, r.count)?;
    }
    Ok(())
}

/// Exponents `[u, s, t]` with a `"num/den"` coefficient.
pub type TermJson = ([u32; 3], String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    /// `coeffs[n]` lists the terms of the coefficient of `z^n`.
    pub coeffs: Vec<Vec<TermJson>>,
}

fn rat_string(c: &Rat) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// `"n"` or `"n/d"`.
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let bad = || Error::Format(format!("bad rational {text:?}"));
    let (n, d) = text.split_once('/').unwrap_or((text, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

pub fn series_to_json(s: &Series) -> SeriesJson {
    let coeffs = s
        .coeffs()
        .iter()
        .map(|p| p.terms().map(|(m, c)| ([m.u, m.sigma, m.tau], rat_string(c))).collect())
        .collect();
    SeriesJson { order: s.order(), coeffs }
}

pub fn series_from_json(json: &SeriesJson) -> Result<Series, Error> {
    if json.coeffs.len() != json.order + 1 {
        return Err(Error::Format(format!("order {} but {} coefficients", json.order, json.coeffs.len())));
    }
    let mut coeffs = Vec::with_capacity(json.coeffs.len());
    for terms in &json.coeffs {
        let mut p = Poly::zero();
        for ([u, s, t], c) in terms {
            p.add_term(Monomial::new(*u, *s, *t), parse_rat(c)?);
        }
        coeffs.push(p);
    }
    Ok(Series::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub layer: String,
    pub level: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionJson {
    pub from: StateJson,
    pub step: String,
    pub to: StateJson,
    /// `"1"`, `"sigma"` or `"tau"`.
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub variant: String,
    pub level_cap: usize,
    pub layers: Vec<String>,
    pub start: StateJson,
    pub states: Vec<StateJson>,
    pub transitions: Vec<TransitionJson>,
}

fn state(s: State) -> StateJson {
    StateJson { layer: s.layer.name().into(), level: s.level }
}

pub fn automaton_to_json(spec: &AutomatonSpec) -> AutomatonJson {
    AutomatonJson {
        variant: spec.variant().name().into(),
        level_cap: spec.level_cap(),
        layers: Layer::layers(spec.variant()).iter().map(|l| l.name().into()).collect(),
        start: state(spec.start()),
        states: spec.states().iter().copied().map(state).collect(),
        transitions: spec
            .transitions()
            .iter()
            .map(|t: &Transition| TransitionJson {
                from: state(t.from),
                step: t.step.as_char().to_string(),
                to: state(t.to),
                weight: t.weight.name().into(),
            })
            .collect(),
    }
}
