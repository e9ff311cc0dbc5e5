//! Path words over `{U, D, H, L}` and the bargraph bijection.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::PathError;

/// A single lattice step. The derived order `U < D < H < L` is the
/// generation order used by the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `(1, 1)`
    U,
    /// `(1, -1)`
    D,
    /// `(1, 0)`
    H,
    /// `(-1, -1)`, skew paths only.
    L,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::U, Step::D, Step::H, Step::L];

    /// Change of level.
    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::H => 0,
            Step::D | Step::L => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
            Step::L => 'L',
        }
    }

    /// Case-insensitive.
    pub fn from_char(c: char) -> Result<Step, PathError> {
        match c.to_ascii_uppercase() {
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            'H' => Ok(Step::H),
            'L' => Ok(Step::L),
            _ => Err(PathError::InvalidStep(c)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Plain,
    /// Adds `L`, with contiguous `UL` and `LU` forbidden.
    Skew,
}

impl Variant {
    /// The step alphabet in generation order.
    pub fn alphabet(self) -> &'static [Step] {
        match self {
            Variant::Plain => &Step::ALL[..3],
            Variant::Skew => &Step::ALL,
        }
    }

    /// Whether `next` may follow `prev` (ignoring levels).
    pub fn allows(self, prev: Option<Step>, next: Step) -> bool {
        match self {
            Variant::Plain => next != Step::L,
            Variant::Skew => !matches!((prev, next), (Some(Step::U), Step::L) | (Some(Step::L), Step::U)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Skew => "skew",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(Variant::Plain),
            "skew" => Ok(Variant::Skew),
            other => Err(alloc::format!("unknown variant {other:?} (expected plain or skew)")),
        }
    }
}

/// A finite step sequence together with its end level and the minimum level
/// over all prefixes (the empty prefix included).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PathWord {
    steps: Vec<Step>,
    end_level: i64,
    min_level: i64,
}

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Self {
        let mut level = 0;
        let mut min_level = 0;
        for s in &steps {
            level += s.delta();
            min_level = min_level.min(level);
        }
        PathWord { steps, end_level: level, min_level }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end_level(&self) -> i64 {
        self.end_level
    }

    pub fn min_level(&self) -> i64 {
        self.min_level
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    pub fn classify(&self, variant: Variant) -> PathClass {
        classify(self, variant)
    }

    pub fn pattern_stats(&self) -> PatternStats {
        pattern_stats(self)
    }

    pub fn is_peakless(&self) -> bool {
        self.pattern_stats().ud == 0
    }

    pub fn is_valleyless(&self) -> bool {
        self.pattern_stats().du == 0
    }

    pub fn is_cornerless(&self) -> bool {
        self.pattern_stats() == PatternStats::default()
    }
}

impl From<Vec<Step>> for PathWord {
    fn from(steps: Vec<Step>) -> Self {
        PathWord::new(steps)
    }
}

impl FromStr for PathWord {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars().map(Step::from_char).collect::<Result<Vec<_>, _>>().map(PathWord::new)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            fmt::Write::write_char(f, s.as_char())?;
        }
        Ok(())
    }
}

/// Occurrences of the contiguous subwords `UD` (peaks) and `DU` (valleys).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PatternStats {
    pub ud: usize,
    pub du: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathClass {
    Invalid,
    Meander,
    /// A meander that ends at level 0.
    Excursion,
}

impl PathClass {
    pub fn is_valid(self) -> bool {
        self != PathClass::Invalid
    }

    pub fn is_excursion(self) -> bool {
        self == PathClass::Excursion
    }
}

pub fn classify(word: &PathWord, variant: Variant) -> PathClass {
    if word.min_level < 0 {
        return PathClass::Invalid;
    }
    let mut prev = None;
    for &s in &word.steps {
        if !variant.allows(prev, s) {
            return PathClass::Invalid;
        }
        prev = Some(s);
    }
    if word.end_level == 0 {
        PathClass::Excursion
    } else {
        PathClass::Meander
    }
}

pub fn pattern_stats(word: &PathWord) -> PatternStats {
    word.steps.windows(2).fold(PatternStats::default(), |mut acc, w| {
        match (w[0], w[1]) {
            (Step::U, Step::D) => acc.ud += 1,
            (Step::D, Step::U) => acc.du += 1,
            _ => {}
        }
        acc
    })
}

pub fn is_peakless(word: &PathWord) -> bool {
    word.is_peakless()
}

pub fn is_valleyless(word: &PathWord) -> bool {
    word.is_valleyless()
}

pub fn is_cornerless(word: &PathWord) -> bool {
    word.is_cornerless()
}

/// `U · word · D` for a plain excursion.
pub fn elevate(word: &PathWord) -> Result<PathWord, PathError> {
    if classify(word, Variant::Plain) != PathClass::Excursion {
        return Err(PathError::NotExcursion(word.to_string()));
    }
    let mut steps = Vec::with_capacity(word.len() + 2);
    steps.push(Step::U);
    steps.extend_from_slice(&word.steps);
    steps.push(Step::D);
    Ok(PathWord::new(steps))
}

/// Column heights of a bargraph, left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bargraph {
    columns: Vec<u32>,
}

impl Bargraph {
    /// Heights must be positive. The empty bargraph is accepted here; it is
    /// the image of the empty path.
    pub fn new(columns: Vec<u32>) -> Result<Self, PathError> {
        if let Some(index) = columns.iter().position(|&h| h == 0) {
            return Err(PathError::ZeroHeight { index });
        }
        Ok(Bargraph { columns })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Number of up steps plus number of horizontal steps on the boundary.
    pub fn semiperimeter(&self) -> usize {
        let Some(&first) = self.columns.first() else {
            return 0;
        };
        let rises: u32 = self.columns.windows(2).map(|w| w[1].saturating_sub(w[0])).sum();
        self.columns.len() + first as usize + rises as usize
    }

    /// The boundary word: `U^h1 H`, then `U^(rise)` or `D^(fall)` followed by
    /// `H` for every later column, then `D^hw`.
    pub fn boundary(&self) -> PathWord {
        let mut steps = Vec::new();
        let mut height = 0u32;
        for &h in &self.columns {
            push_vertical(&mut steps, height, h);
            steps.push(Step::H);
            height = h;
        }
        push_vertical(&mut steps, height, 0);
        PathWord::new(steps)
    }
}

fn push_vertical(steps: &mut Vec<Step>, from: u32, to: u32) {
    if to >= from {
        steps.extend(core::iter::repeat_n(Step::U, (to - from) as usize));
    } else {
        steps.extend(core::iter::repeat_n(Step::D, (from - to) as usize));
    }
}

impl FromStr for Bargraph {
    type Err = PathError;

    /// Comma-separated positive heights, e.g. `"2,1,3"`. The empty string is
    /// the empty bargraph.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Bargraph::empty());
        }
        let columns = s
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| PathError::BadColumn(c.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Bargraph::new(columns)
    }
}

impl fmt::Display for Bargraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, h) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        Ok(())
    }
}

/// Elevates a cornerless excursion and reads the result as a bargraph
/// boundary with `U = (0, 1)`, `H = (1, 0)`, `D = (0, -1)`. Each `H` step
/// contributes one column whose height is the current level.
pub fn to_bargraph(word: &PathWord) -> Result<Bargraph, PathError> {
    if !(classify(word, Variant::Plain).is_excursion() && word.is_cornerless()) {
        return Err(PathError::NotCornerlessExcursion(word.to_string()));
    }
    let elevated = elevate(word)?;
    let mut level = 0i64;
    let mut columns = Vec::new();
    for &s in elevated.steps() {
        if s == Step::H {
            columns.push(level as u32);
        }
        level += s.delta();
    }
    Ok(Bargraph { columns })
}

/// Inverse of [`to_bargraph`] on nonempty bargraphs: strip the outermost
/// `U` and `D` from the boundary word.
pub fn from_bargraph(bargraph: &Bargraph) -> Result<PathWord, PathError> {
    if bargraph.is_empty() {
        return Err(PathError::EmptyBargraph);
    }
    let boundary = bargraph.boundary();
    let steps = boundary.steps();
    Ok(PathWord::new(steps[1..steps.len() - 1].to_vec()))
}
