//! Layered automata that recognize Motzkin meanders and weigh every `UD`
//! with `τ` and every `DU` with `σ`, plus the exact counting DP over them.
//!
//! A state is a layer (which kind of step led into it) and a level. The
//! plain automaton has three layers; the skew one adds a fourth for states
//! entered by an `L` step.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::oracle::{CountKey, CountTable};
use crate::paths::{PathWord, Step, Variant};
use crate::series::{Monomial, Poly, Rat, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    /// Entered by `U`.
    AfterU,
    /// Entered by `H`, or the start.
    AfterHOrStart,
    /// Entered by `D`.
    AfterD,
    /// Entered by `L` (skew only).
    AfterL,
}

impl Layer {
    pub fn layers(variant: Variant) -> &'static [Layer] {
        const ALL: [Layer; 4] = [Layer::AfterU, Layer::AfterHOrStart, Layer::AfterD, Layer::AfterL];
        match variant {
            Variant::Plain => &ALL[..3],
            Variant::Skew => &ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Layer::AfterU => "after_u",
            Layer::AfterHOrStart => "after_h_or_start",
            Layer::AfterD => "after_d",
            Layer::AfterL => "after_l",
        }
    }

    fn entered_by(step: Step) -> Layer {
        match step {
            Step::U => Layer::AfterU,
            Step::H => Layer::AfterHOrStart,
            Step::D => Layer::AfterD,
            Step::L => Layer::AfterL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    pub layer: Layer,
    pub level: usize,
}

impl State {
    pub const START: State = State { layer: Layer::AfterHOrStart, level: 0 };

    pub fn new(layer: Layer, level: usize) -> Self {
        State { layer, level }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeWeight {
    One,
    Sigma,
    Tau,
}

impl EdgeWeight {
    pub fn name(self) -> &'static str {
        match self {
            EdgeWeight::One => "1",
            EdgeWeight::Sigma => "sigma",
            EdgeWeight::Tau => "tau",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: State,
    pub step: Step,
    pub to: State,
    pub weight: EdgeWeight,
}

/// Monomial `σ^sigma τ^tau` accumulated along a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RunWeight {
    pub sigma: usize,
    pub tau: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub accepted: bool,
    /// Last state reached; for a rejected word, the state where no
    /// transition was available.
    pub end: State,
    pub weight: RunWeight,
}

/// The automaton truncated to levels `0..=level_cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomatonSpec {
    variant: Variant,
    level_cap: usize,
    states: Vec<State>,
    transitions: Vec<Transition>,
    index: BTreeMap<(State, Step), usize>,
}

impl AutomatonSpec {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn level_cap(&self) -> usize {
        self.level_cap
    }

    pub fn start(&self) -> State {
        State::START
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn transition(&self, from: State, step: Step) -> Option<&Transition> {
        self.index.get(&(from, step)).map(|&i| &self.transitions[i])
    }
}

/// The edge leaving `from` by `step`, ignoring the level cap.
fn edge(variant: Variant, from: State, step: Step) -> Option<Transition> {
    let layers = Layer::layers(variant);
    if !layers.contains(&from.layer) || !variant.alphabet().contains(&step) {
        return None;
    }
    let forbidden = matches!((from.layer, step), (Layer::AfterU, Step::L) | (Layer::AfterL, Step::U));
    if forbidden {
        return None;
    }
    let level = from.level.checked_add_signed(step.delta() as isize)?;
    let weight = match (from.layer, step) {
        (Layer::AfterU, Step::D) => EdgeWeight::Tau,
        (Layer::AfterD, Step::U) => EdgeWeight::Sigma,
        _ => EdgeWeight::One,
    };
    Some(Transition { from, step, to: State::new(Layer::entered_by(step), level), weight })
}

pub fn build_automaton(variant: Variant, level_cap: usize) -> AutomatonSpec {
    let mut states = Vec::new();
    let mut transitions = Vec::new();
    let mut index = BTreeMap::new();
    for level in 0..=level_cap {
        for &layer in Layer::layers(variant) {
            let from = State::new(layer, level);
            states.push(from);
            for &step in variant.alphabet() {
                if let Some(t) = edge(variant, from, step).filter(|t| t.to.level <= level_cap) {
                    index.insert((from, step), transitions.len());
                    transitions.push(t);
                }
            }
        }
    }
    AutomatonSpec { variant, level_cap, states, transitions, index }
}

pub fn run(spec: &AutomatonSpec, word: &PathWord) -> RunResult {
    let mut state = spec.start();
    let mut weight = RunWeight::default();
    for &step in word.steps() {
        let Some(t) = spec.transition(state, step) else {
            return RunResult { accepted: false, end: state, weight };
        };
        match t.weight {
            EdgeWeight::One => {}
            EdgeWeight::Sigma => weight.sigma += 1,
            EdgeWeight::Tau => weight.tau += 1,
        }
        state = t.to;
    }
    RunResult { accepted: true, end: state, weight }
}

/// Forward DP over `(layer, level, #UD, #DU)` with big-integer masses.
/// Entry `(n, j, k, ℓ)` is the total mass at level `j` after `n` steps.
pub fn dp_count(n_max: usize, variant: Variant) -> CountTable {
    // A walk of length n_max never climbs above n_max, so this cap is lossless.
    let spec = build_automaton(variant, n_max);
    let mut table = CountTable::new(variant, n_max);
    let mut mass: BTreeMap<(State, usize, usize), BigUint> = BTreeMap::new();
    mass.insert((spec.start(), 0, 0), BigUint::from(1u8));
    for n in 0..=n_max {
        let mut row: BTreeMap<CountKey, BigUint> = BTreeMap::new();
        for ((state, ud, du), count) in &mass {
            *row.entry(CountKey::new(n, state.level, *ud, *du)).or_default() += count;
        }
        for (k, c) in row {
            table.add(k, c);
        }
        if n == n_max {
            break;
        }
        let mut next: BTreeMap<(State, usize, usize), BigUint> = BTreeMap::new();
        for ((state, ud, du), count) in &mass {
            for &step in variant.alphabet() {
                let Some(t) = spec.transition(*state, step) else { continue };
                let (ud, du) = match t.weight {
                    EdgeWeight::One => (*ud, *du),
                    EdgeWeight::Tau => (ud + 1, *du),
                    EdgeWeight::Sigma => (*ud, du + 1),
                };
                *next.entry((t.to, ud, du)).or_default() += count;
            }
        }
        mass = next;
    }
    table
}

/// `Σ count · z^n u^j σ^ℓ τ^k` over a table, truncated at `z^order`.
pub fn table_series(table: &CountTable, order: usize) -> Series {
    let mut coeffs: Vec<BTreeMap<Monomial, Rat>> = (0..=order).map(|_| BTreeMap::new()).collect();
    for (key, count) in table.entries() {
        if key.n > order {
            continue;
        }
        let m = Monomial::new(key.level as u32, key.du as u32, key.ud as u32);
        coeffs[key.n].insert(m, Rat::from_integer(count.clone().into()));
    }
    Series::new(coeffs.into_iter().map(Poly::from_terms).collect())
}

/// The total trivariate generating function truncated at `z^order`.
pub fn dp_series(order: usize, variant: Variant) -> Series {
    table_series(&dp_count(order, variant), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::pattern_stats;

    fn w(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn cap_zero_accepts_only_horizontal_runs() {
        let spec = build_automaton(Variant::Plain, 0);
        assert!(run(&spec, &w("HHH")).accepted);
        assert!(!run(&spec, &w("UD")).accepted);
        assert!(spec.transitions().iter().all(|t| t.step == Step::H));
    }

    #[test]
    fn run_examples() {
        let plain = build_automaton(Variant::Plain, 4);
        let r = run(&plain, &w("UD"));
        assert!(r.accepted);
        assert_eq!(r.end, State::new(Layer::AfterD, 0));
        assert_eq!(r.weight, RunWeight { sigma: 0, tau: 1 });

        let r = run(&plain, &w("UDUD"));
        assert!(r.accepted);
        assert_eq!(r.weight, RunWeight { sigma: 1, tau: 2 });

        let r = run(&plain, &w(""));
        assert!(r.accepted);
        assert_eq!(r.end, State::START);
        assert_eq!(r.weight, RunWeight::default());

        let skew = build_automaton(Variant::Skew, 3);
        let r = run(&skew, &w("UHL"));
        assert!(r.accepted);
        assert_eq!(r.end, State::new(Layer::AfterL, 0));
        assert_eq!(r.weight, RunWeight::default());
        assert!(!run(&skew, &w("ULH")).accepted);
        assert!(!run(&plain, &w("UHL")).accepted);
        assert!(!run(&plain, &w("D")).accepted);
    }

    #[test]
    fn transition_weights_and_shape() {
        for variant in [Variant::Plain, Variant::Skew] {
            let spec = build_automaton(variant, 5);
            for t in spec.transitions() {
                let expected = match (t.from.layer, t.step, t.to.layer) {
                    (Layer::AfterU, Step::D, Layer::AfterD) => EdgeWeight::Tau,
                    (Layer::AfterD, Step::U, Layer::AfterU) => EdgeWeight::Sigma,
                    _ => EdgeWeight::One,
                };
                assert_eq!(t.weight, expected);
                assert_eq!(t.to.level as i64 - t.from.level as i64, t.step.delta());
                assert!(t.to.level <= 5);
                assert!(!(t.from.layer == Layer::AfterU && t.step == Step::L));
                assert!(!(t.from.layer == Layer::AfterL && t.step == Step::U));
                if t.step == Step::L {
                    assert_eq!(t.to.layer, Layer::AfterL);
                }
            }
            assert_eq!(spec.states().iter().any(|s| s.layer == Layer::AfterL), variant == Variant::Skew);
        }
    }

    #[test]
    fn run_weight_matches_pattern_stats() {
        for variant in [Variant::Plain, Variant::Skew] {
            let spec = build_automaton(variant, 8);
            for n in 0..=8 {
                for word in crate::oracle::enumerate(n, variant).unwrap() {
                    let r = run(&spec, &word);
                    let stats = pattern_stats(&word);
                    assert!(r.accepted);
                    assert_eq!((r.weight.sigma, r.weight.tau), (stats.du, stats.ud));
                    assert_eq!(r.end.level as i64, word.end_level());
                }
            }
        }
    }

    #[test]
    fn dp_small_entries() {
        let t = dp_count(7, Variant::Plain);
        assert_eq!(t.get(&CountKey::new(4, 0, 0, 0)), BigUint::from(4u8));
        assert_eq!(t.get(&CountKey::new(4, 0, 1, 0)), BigUint::from(4u8));
        assert_eq!(t.get(&CountKey::new(4, 0, 2, 1)), BigUint::from(1u8));
        assert_eq!(t.row(7, Some(0)).count(), 9);
        assert_eq!(t.total_at_level(7, 0), BigUint::from(127u8));
        let s = dp_count(4, Variant::Skew);
        assert_eq!(s.get(&CountKey::new(4, 0, 0, 0)), BigUint::from(7u8));
        assert_eq!(s.get(&CountKey::new(4, 0, 1, 0)), BigUint::from(5u8));
        assert_eq!(s.get(&CountKey::new(4, 0, 2, 1)), BigUint::from(1u8));
    }
}
