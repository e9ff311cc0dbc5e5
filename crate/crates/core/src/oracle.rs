//! Brute-force ground truth: exhaustive generation of meanders and bargraphs.
//!
//! Nothing here shares code with the automata or the series engine; the
//! generator only knows the step alphabet and the admissibility rules.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::OracleError;
use crate::paths::{Bargraph, PathWord, Step, Variant};

/// Largest length accepted by [`enumerate`] and [`count_table`].
pub const MAX_LENGTH: usize = 20;
/// Largest semiperimeter accepted by [`enumerate_bargraphs`].
pub const MAX_SEMIPERIMETER: usize = 12;

/// Extra pruning rules applied during generation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Restriction {
    pub forbid_ud: bool,
    pub forbid_du: bool,
    /// Only words that end at level 0.
    pub excursions_only: bool,
}

impl Restriction {
    pub const NONE: Restriction = Restriction { forbid_ud: false, forbid_du: false, excursions_only: false };
    pub const CORNERLESS_EXCURSIONS: Restriction =
        Restriction { forbid_ud: true, forbid_du: true, excursions_only: true };
}

/// Depth-first generator of the valid words of one length, in lexicographic
/// order on `U < D < H < L`.
#[derive(Clone, Debug)]
pub struct Meanders {
    n: usize,
    variant: Variant,
    restriction: Restriction,
    choices: Vec<usize>,
    steps: Vec<Step>,
    levels: Vec<i64>,
    started: bool,
    done: bool,
}

impl Meanders {
    fn new(n: usize, variant: Variant, restriction: Restriction) -> Self {
        Meanders {
            n,
            variant,
            restriction,
            choices: Vec::with_capacity(n),
            steps: Vec::with_capacity(n),
            levels: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn level(&self) -> i64 {
        self.levels.last().copied().unwrap_or(0)
    }

    fn admissible(&self, step: Step) -> bool {
        let prev = self.steps.last().copied();
        if !self.variant.allows(prev, step) {
            return false;
        }
        match (prev, step) {
            (Some(Step::U), Step::D) if self.restriction.forbid_ud => return false,
            (Some(Step::D), Step::U) if self.restriction.forbid_du => return false,
            _ => {}
        }
        let level = self.level() + step.delta();
        if level < 0 {
            return false;
        }
        let remaining = (self.n - self.steps.len() - 1) as i64;
        !(self.restriction.excursions_only && level > remaining)
    }

    fn push(&mut self, idx: usize) {
        let step = self.variant.alphabet()[idx];
        let level = self.level() + step.delta();
        self.choices.push(idx);
        self.steps.push(step);
        self.levels.push(level);
    }

    fn pop(&mut self) -> Option<usize> {
        self.steps.pop();
        self.levels.pop();
        self.choices.pop()
    }

    /// Extends the current prefix to the next complete word, trying
    /// alphabet indices from `from` at the current depth first.
    fn advance(&mut self, mut from: usize) -> bool {
        let alphabet = self.variant.alphabet();
        loop {
            if self.steps.len() == self.n {
                if !self.restriction.excursions_only || self.level() == 0 {
                    return true;
                }
            } else if let Some(idx) = (from..alphabet.len()).find(|&i| self.admissible(alphabet[i])) {
                self.push(idx);
                from = 0;
                continue;
            }
            match self.pop() {
                Some(idx) => from = idx + 1,
                None => return false,
            }
        }
    }
}

impl Iterator for Meanders {
    type Item = PathWord;

    fn next(&mut self) -> Option<PathWord> {
        if self.done {
            return None;
        }
        let found = if self.started {
            match self.pop() {
                Some(idx) => self.advance(idx + 1),
                None => false,
            }
        } else {
            self.started = true;
            self.advance(0)
        };
        if found {
            Some(PathWord::new(self.steps.clone()))
        } else {
            self.done = true;
            None
        }
    }
}

/// All valid meanders of length `n`, `n <= MAX_LENGTH`.
pub fn enumerate(n: usize, variant: Variant) -> Result<Meanders, OracleError> {
    enumerate_restricted(n, variant, Restriction::NONE)
}

pub fn enumerate_restricted(
    n: usize,
    variant: Variant,
    restriction: Restriction,
) -> Result<Meanders, OracleError> {
    if n > MAX_LENGTH {
        return Err(OracleError::LengthOutOfBound { n, max: MAX_LENGTH });
    }
    Ok(Meanders::new(n, variant, restriction))
}

/// Same as [`enumerate_restricted`] without the length bound. The number of
/// words grows roughly like `3^n`.
pub fn enumerate_unbounded(n: usize, variant: Variant, restriction: Restriction) -> Meanders {
    Meanders::new(n, variant, restriction)
}

/// Key `(n, j, k, ℓ)`: length, end level, number of `UD`, number of `DU`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountKey {
    pub n: usize,
    pub level: usize,
    pub ud: usize,
    pub du: usize,
}

impl CountKey {
    pub fn new(n: usize, level: usize, ud: usize, du: usize) -> Self {
        CountKey { n, level, ud, du }
    }
}

/// Exact counts of meanders by `(n, j, k, ℓ)`. Zero entries are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    variant: Variant,
    n_max: usize,
    entries: BTreeMap<CountKey, BigUint>,
}

impl CountTable {
    pub fn new(variant: Variant, n_max: usize) -> Self {
        CountTable { variant, n_max, entries: BTreeMap::new() }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn add(&mut self, key: CountKey, count: BigUint) {
        if count.is_zero() {
            return;
        }
        self.n_max = self.n_max.max(key.n);
        match self.entries.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(count);
            }
            btree_map::Entry::Occupied(mut e) => *e.get_mut() += count,
        }
    }

    pub fn get(&self, key: &CountKey) -> BigUint {
        self.entries.get(key).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CountKey, &BigUint)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries of one length, optionally restricted to one end level.
    pub fn row(&self, n: usize, level: Option<usize>) -> impl Iterator<Item = (&CountKey, &BigUint)> {
        let lo = CountKey::new(n, 0, 0, 0);
        let hi = CountKey::new(n, usize::MAX, usize::MAX, usize::MAX);
        self.entries.range(lo..=hi).filter(move |(k, _)| level.is_none_or(|j| k.level == j))
    }

    /// Number of meanders of length `n` (all levels and patterns).
    pub fn total(&self, n: usize) -> BigUint {
        self.row(n, None).map(|(_, c)| c).sum()
    }

    /// Number of meanders of length `n` ending at `level`.
    pub fn total_at_level(&self, n: usize, level: usize) -> BigUint {
        self.row(n, Some(level)).map(|(_, c)| c).sum()
    }

    /// Pointwise sum. Associative and commutative.
    pub fn merge(mut self, other: &CountTable) -> Result<CountTable, OracleError> {
        if self.variant != other.variant {
            return Err(OracleError::VariantMismatch(self.variant, other.variant));
        }
        for (k, v) in &other.entries {
            self.add(*k, v.clone());
        }
        self.n_max = self.n_max.max(other.n_max);
        Ok(self)
    }

    /// Restriction to lengths `<= n_max`.
    pub fn truncated(&self, n_max: usize) -> CountTable {
        CountTable {
            variant: self.variant,
            n_max: self.n_max.min(n_max),
            entries: self.entries.iter().filter(|(k, _)| k.n <= n_max).map(|(k, v)| (*k, v.clone())).collect(),
        }
    }

    /// The smallest key on which the two tables differ.
    pub fn first_difference(&self, other: &CountTable) -> Option<CountKey> {
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((k, _)), None) | (None, Some((k, _))) => return Some(**k),
                (Some((ka, va)), Some((kb, vb))) => {
                    if ka != kb {
                        return Some((**ka).min(**kb));
                    }
                    if va != vb {
                        return Some(**ka);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

/// Tallies every meander of length `0..=n_max`.
pub fn count_table(n_max: usize, variant: Variant) -> Result<CountTable, OracleError> {
    if n_max > MAX_LENGTH {
        return Err(OracleError::LengthOutOfBound { n: n_max, max: MAX_LENGTH });
    }
    let mut table = CountTable::new(variant, n_max);
    for n in 0..=n_max {
        let mut counts: BTreeMap<CountKey, u64> = BTreeMap::new();
        for word in enumerate(n, variant)? {
            let stats = word.pattern_stats();
            let key = CountKey::new(n, word.end_level() as usize, stats.ud, stats.du);
            *counts.entry(key).or_default() += 1;
        }
        for (k, c) in counts {
            table.add(k, BigUint::from(c));
        }
    }
    Ok(table)
}

/// Every bargraph of semiperimeter `s`, in lexicographic order of columns.
pub fn enumerate_bargraphs(s: usize) -> Result<alloc::vec::IntoIter<Bargraph>, OracleError> {
    if s == 0 || s > MAX_SEMIPERIMETER {
        return Err(OracleError::SemiperimeterOutOfBound { s, max: MAX_SEMIPERIMETER });
    }
    let mut out = Vec::new();
    let mut columns = Vec::new();
    extend_bargraphs(s, 0, &mut columns, &mut out);
    Ok(out.into_iter())
}

/// `partial` is the semiperimeter of `columns` (0 when empty); each new
/// column costs at least 1.
fn extend_bargraphs(s: usize, partial: usize, columns: &mut Vec<u32>, out: &mut Vec<Bargraph>) {
    if partial == s && !columns.is_empty() {
        out.push(Bargraph::new(columns.clone()).expect("heights are positive"));
        return;
    }
    for h in 1..s {
        let cost = match columns.last() {
            None => 1 + h,
            Some(&prev) => 1 + (h as u32).saturating_sub(prev) as usize,
        };
        if partial + cost > s {
            continue;
        }
        columns.push(h as u32);
        extend_bargraphs(s, partial + cost, columns, out);
        columns.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn words(n: usize, variant: Variant) -> Vec<String> {
        enumerate(n, variant).unwrap().map(|w| w.to_string()).collect()
    }

    #[test]
    fn empty_length() {
        assert_eq!(words(0, Variant::Plain), [""]);
        assert_eq!(words(0, Variant::Skew), [""]);
    }

    #[test]
    fn length_two_plain() {
        assert_eq!(words(2, Variant::Plain), ["UU", "UD", "UH", "HU", "HH"]);
    }

    #[test]
    fn skew_excursions_of_length_three() {
        let mut exc: Vec<String> = enumerate(3, Variant::Skew)
            .unwrap()
            .filter(|w| w.end_level() == 0)
            .map(|w| w.to_string())
            .collect();
        exc.sort();
        assert_eq!(exc, ["HHH", "HUD", "UDH", "UHD", "UHL"]);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate(21, Variant::Plain).unwrap_err(),
            OracleError::LengthOutOfBound { n: 21, max: MAX_LENGTH }
        );
        assert!(count_table(21, Variant::Skew).is_err());
        assert_eq!(enumerate_unbounded(21, Variant::Plain, Restriction::CORNERLESS_EXCURSIONS).next().unwrap().len(), 21);
    }

    #[test]
    fn count_table_small_entries() {
        let t = count_table(4, Variant::Plain).unwrap();
        assert_eq!(t.get(&CountKey::new(2, 0, 1, 0)), BigUint::from(1u8));
        assert_eq!(t.get(&CountKey::new(2, 0, 0, 0)), BigUint::from(1u8));
        assert_eq!(t.get(&CountKey::new(4, 0, 0, 0)), BigUint::from(4u8));
        assert_eq!(t.get(&CountKey::new(4, 0, 1, 0)), BigUint::from(4u8));
        assert_eq!(t.get(&CountKey::new(4, 0, 2, 1)), BigUint::from(1u8));
        let s = count_table(2, Variant::Skew).unwrap();
        assert_eq!(s.get(&CountKey::new(2, 0, 0, 0)), BigUint::from(1u8));
        assert_eq!(s.get(&CountKey::new(2, 0, 1, 0)), BigUint::from(1u8));
    }

    #[test]
    fn merge_and_difference() {
        let a = count_table(3, Variant::Plain).unwrap();
        let b = count_table(3, Variant::Plain).unwrap();
        assert_eq!(a.first_difference(&b), None);
        let doubled = a.clone().merge(&b).unwrap();
        assert_eq!(doubled.total(3), BigUint::from(26u8));
        assert_eq!(doubled.first_difference(&a), Some(CountKey::new(0, 0, 0, 0)));
        let skew = count_table(1, Variant::Skew).unwrap();
        assert!(a.merge(&skew).is_err());
    }

    #[test]
    fn bargraph_small_semiperimeters() {
        let list = |s| enumerate_bargraphs(s).unwrap().map(|b| b.to_string()).collect::<Vec<_>>();
        assert_eq!(list(2), ["1"]);
        assert_eq!(list(3), ["1,1", "2"]);
        assert!(list(1).is_empty());
        assert!(enumerate_bargraphs(0).is_err());
        assert!(enumerate_bargraphs(13).is_err());
    }
}
