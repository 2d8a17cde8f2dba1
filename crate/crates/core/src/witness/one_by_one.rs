//! Trial-and-error growth of a percolating set, one vertex per step.
//!
//! Round `k` starts from the active set `A_k^0` (every vertex not yet
//! discarded). A seed vertex becomes the first trial vertex `x^1`. At step
//! `t` the colour-1 neighbours `R` of the newest trial vertex `x^t` inside
//! the active set are revealed; the joinable ones `B ⊆ R` additionally have,
//! for every colour `2..r`, an edge to some trial vertex `x^s`, `s <= t`.
//!
//! * `B` non-empty: one element of `B` becomes `x^{t+1}`, the rest of `R`
//!   turns dormant and leaves the active set. Success once `|X| >= t1`.
//! * `B` empty: the trial set is discarded for good, dormant vertices become
//!   active again, and the next round starts unless `k >= max_rounds`.
//!
//! Every pair revealed involves a trial vertex of the current round, and
//! trial vertices are discarded at the end of their round, so no pair is
//! ever revealed twice. [`RevealLedger`] checks this at run time.

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::graph::{Adjacency, RFoldGraph, Vertex};
use crate::rng::{tag, CounterRng, Seed};

/// `ceil((ln n)^(1 + 1/r))`, at least 1.
pub fn default_t1(n: usize, r: usize) -> usize {
    let ln = (n.max(1) as f64).ln();
    let t = libm::pow(ln, 1.0 + 1.0 / r as f64).ceil();
    (t as usize).max(1)
}

/// `floor(n / (2 t1))`, at least 1.
pub fn default_max_rounds(n: usize, t1: usize) -> usize {
    (n / (2 * t1.max(1))).max(1)
}

/// `ln n / c_r` with `c_r = 2^(8 r^2 / (r - 1))`: the intermediate size
/// used only by the success-probability analysis. `None` for `r = 1`.
pub fn analysis_t0(n: usize, r: usize) -> Option<f64> {
    crate::graph::critical_constant_root(r).map(|c| (n.max(1) as f64).ln() / c)
}

/// Resolution of the algorithm's free choices (seed vertex, element of `B`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "seed")]
pub enum Choice {
    /// Always the lowest-index candidate.
    Lowest,
    /// Uniform among candidates, from the given stream.
    Seeded(Seed),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OneByOneConfig {
    pub t1: usize,
    pub max_rounds: usize,
    pub choice: Choice,
    /// Abort as soon as some step reveals more than this many vertices.
    pub reveal_cap: Option<usize>,
    /// Record every revealed (colour, pair) in a [`RevealLedger`].
    pub record_reveals: bool,
}

impl OneByOneConfig {
    pub fn defaults(n: usize, r: usize) -> Self {
        let t1 = default_t1(n, r);
        OneByOneConfig {
            t1,
            max_rounds: default_max_rounds(n, t1),
            choice: Choice::Lowest,
            reveal_cap: None,
            record_reveals: false,
        }
    }

    /// The cap `n / (4 t1)` on `|R|` from the analysis.
    pub fn with_analysis_reveal_cap(mut self, n: usize) -> Self {
        self.reveal_cap = Some(n / (4 * self.t1.max(1)));
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OneByOneOutcome {
    /// A trial set reached `t1` vertices.
    Success,
    /// `max_rounds` rounds failed.
    RoundCap,
    /// Every vertex was discarded before a round could start.
    NoActiveVertices,
    /// Some `|R|` exceeded the configured reveal cap.
    RevealCap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Active,
    Trial,
    Dormant,
    Discarded,
}

/// Every (colour, pair) revealed during a run, with a count of repeats.
#[derive(Clone, Debug, Default)]
pub struct RevealLedger {
    seen: FxHashSet<(u8, Vertex, Vertex)>,
    revealed: usize,
    repeats: usize,
}

impl RevealLedger {
    fn record(&mut self, colour: usize, a: Vertex, b: Vertex) {
        let key = (colour as u8, a.min(b), a.max(b));
        self.revealed += 1;
        if !self.seen.insert(key) {
            self.repeats += 1;
        }
    }

    pub fn revealed(&self) -> usize {
        self.revealed
    }

    /// Pairs revealed more than once (0 for a correct run).
    pub fn repeats(&self) -> usize {
        self.repeats
    }

    pub fn contains(&self, colour: usize, a: Vertex, b: Vertex) -> bool {
        self.seen.contains(&(colour as u8, a.min(b), a.max(b)))
    }
}

/// Per-step state of the 1-by-1 algorithm; advance with [`OneByOne::step`].
pub struct OneByOne<'g> {
    adj: Vec<Adjacency<'g>>,
    config: OneByOneConfig,
    status: Vec<Status>,
    round: usize,
    trial: Vec<Vertex>,
    dormant: Vec<Vertex>,
    active_count: usize,
    discarded: Vec<Vertex>,
    // Non-discarded vertices, for uniform seed choice.
    pool: Vec<Vertex>,
    pool_pos: Vec<u32>,
    lowest: usize,
    last_revealed: Vec<Vertex>,
    last_joinable: Vec<Vertex>,
    reveal_sizes: Vec<usize>,
    round_lengths: Vec<usize>,
    rng: Option<CounterRng>,
    ledger: Option<RevealLedger>,
    outcome: Option<OneByOneOutcome>,
}

impl<'g> OneByOne<'g> {
    /// Sets up round 1 and performs its seed step.
    ///
    /// Panics if `g1` has no vertices or `t1` / `max_rounds` is zero.
    pub fn new(g1: &'g RFoldGraph, config: OneByOneConfig) -> Self {
        let n = g1.n();
        assert!(n > 0, "the 1-by-1 algorithm needs a non-empty graph");
        assert!(config.t1 >= 1 && config.max_rounds >= 1, "t1 and max_rounds must be positive");
        let mut state = OneByOne {
            adj: g1.adjacencies(),
            config,
            status: vec![Status::Active; n],
            round: 1,
            trial: Vec::new(),
            dormant: Vec::new(),
            active_count: n,
            discarded: Vec::new(),
            pool: (0..n as Vertex).collect(),
            pool_pos: (0..n as u32).collect(),
            lowest: 0,
            last_revealed: Vec::new(),
            last_joinable: Vec::new(),
            reveal_sizes: Vec::new(),
            round_lengths: Vec::new(),
            rng: match config.choice {
                Choice::Lowest => None,
                Choice::Seeded(seed) => Some(seed.derive(tag::CHOICE).rng()),
            },
            ledger: config.record_reveals.then(RevealLedger::default),
            outcome: None,
        };
        state.start_round();
        state
    }

    /// Runs to completion.
    pub fn run(mut self) -> Self {
        while self.step().is_none() {}
        self
    }

    /// Performs one step. Returns the outcome once the algorithm has stopped.
    pub fn step(&mut self) -> Option<OneByOneOutcome> {
        if self.outcome.is_some() {
            return self.outcome;
        }
        let newest = *self.trial.last().expect("a round in progress has a trial vertex");

        self.last_revealed.clear();
        self.last_revealed
            .extend(self.adj[0].neighbours(newest).filter(|&v| self.status[v as usize] == Status::Active));
        self.reveal_sizes.push(self.last_revealed.len());
        if let Some(ledger) = self.ledger.as_mut() {
            for (v, &s) in self.status.iter().enumerate() {
                if s == Status::Active {
                    ledger.record(0, v as Vertex, newest);
                }
            }
            for &x in &self.last_revealed {
                for colour in 1..self.adj.len() {
                    for &y in &self.trial {
                        ledger.record(colour, x, y);
                    }
                }
            }
        }
        if self.config.reveal_cap.is_some_and(|cap| self.last_revealed.len() > cap) {
            self.outcome = Some(OneByOneOutcome::RevealCap);
            return self.outcome;
        }

        self.last_joinable.clear();
        for i in 0..self.last_revealed.len() {
            let x = self.last_revealed[i];
            if (1..self.adj.len()).all(|c| self.joined_to_trial(c, x)) {
                self.last_joinable.push(x);
            }
        }

        if self.last_joinable.is_empty() {
            self.end_round();
            return self.outcome;
        }

        let next = match self.rng.as_mut() {
            None => self.last_joinable[0],
            Some(rng) => self.last_joinable[rng.below(self.last_joinable.len() as u64) as usize],
        };
        for &x in &self.last_revealed {
            self.status[x as usize] = Status::Dormant;
        }
        self.status[next as usize] = Status::Trial;
        self.dormant.extend(self.last_revealed.iter().copied().filter(|&x| x != next));
        self.active_count -= self.last_revealed.len();
        self.trial.push(next);
        if self.trial.len() >= self.config.t1 {
            self.outcome = Some(OneByOneOutcome::Success);
        }
        self.outcome
    }

    fn joined_to_trial(&self, colour: usize, x: Vertex) -> bool {
        let adj = &self.adj[colour];
        if self.trial.len() * 8 < adj.degree(x) {
            self.trial.iter().any(|&y| adj.contains(x, y))
        } else {
            adj.neighbours(x).any(|y| self.status[y as usize] == Status::Trial)
        }
    }

    fn start_round(&mut self) {
        if self.pool.is_empty() {
            self.outcome = Some(OneByOneOutcome::NoActiveVertices);
            return;
        }
        let seed = match self.rng.as_mut() {
            None => {
                while self.status[self.lowest] == Status::Discarded {
                    self.lowest += 1;
                }
                self.lowest as Vertex
            }
            Some(rng) => self.pool[rng.below(self.pool.len() as u64) as usize],
        };
        self.status[seed as usize] = Status::Trial;
        self.trial.push(seed);
        self.active_count -= 1;
        self.last_revealed.clear();
        self.last_joinable.clear();
        if self.trial.len() >= self.config.t1 {
            self.outcome = Some(OneByOneOutcome::Success);
        }
    }

    fn end_round(&mut self) {
        self.round_lengths.push(self.trial.len());
        for &x in &self.trial {
            self.status[x as usize] = Status::Discarded;
            let at = self.pool_pos[x as usize] as usize;
            let last = *self.pool.last().unwrap();
            self.pool.swap_remove(at);
            if last != x {
                self.pool_pos[last as usize] = at as u32;
            }
        }
        self.discarded.append(&mut self.trial);
        for &x in &self.dormant {
            self.status[x as usize] = Status::Active;
        }
        self.dormant.clear();
        self.active_count = self.pool.len();
        if self.round >= self.config.max_rounds {
            self.outcome = Some(OneByOneOutcome::RoundCap);
            return;
        }
        self.round += 1;
        self.start_round();
    }

    pub fn config(&self) -> &OneByOneConfig {
        &self.config
    }

    pub fn outcome(&self) -> Option<OneByOneOutcome> {
        self.outcome
    }

    /// The percolating set found, once the run has succeeded.
    pub fn witness(&self) -> Option<&[Vertex]> {
        (self.outcome == Some(OneByOneOutcome::Success)).then_some(&self.trial[..])
    }

    /// Current round `k`, from 1.
    pub fn round(&self) -> usize {
        self.round
    }

    /// Current step `t` (the number of trial vertices).
    pub fn t(&self) -> usize {
        self.trial.len()
    }

    /// Trial vertices `x^1, ..., x^t` in insertion order.
    pub fn trial(&self) -> &[Vertex] {
        &self.trial
    }

    pub fn dormant(&self) -> &[Vertex] {
        &self.dormant
    }

    pub fn discarded(&self) -> &[Vertex] {
        &self.discarded
    }

    pub fn active_count(&self) -> usize {
        self.active_count
    }

    /// The active set, ascending. O(n).
    pub fn active(&self) -> Vec<Vertex> {
        self.with_status(Status::Active)
    }

    /// The round's starting active set `A_k^0`, ascending. O(n).
    pub fn round_start_set(&self) -> Vec<Vertex> {
        (0..self.status.len() as Vertex)
            .filter(|&v| self.status[v as usize] != Status::Discarded)
            .collect()
    }

    fn with_status(&self, s: Status) -> Vec<Vertex> {
        (0..self.status.len() as Vertex).filter(|&v| self.status[v as usize] == s).collect()
    }

    /// `R` of the last step.
    pub fn last_revealed(&self) -> &[Vertex] {
        &self.last_revealed
    }

    /// `B` of the last step.
    pub fn last_joinable(&self) -> &[Vertex] {
        &self.last_joinable
    }

    /// `|R|` of every step so far, across rounds.
    pub fn reveal_sizes(&self) -> &[usize] {
        &self.reveal_sizes
    }

    /// Trial-set size at the end of each failed round.
    pub fn round_lengths(&self) -> &[usize] {
        &self.round_lengths
    }

    pub fn ledger(&self) -> Option<&RevealLedger> {
        self.ledger.as_ref()
    }
}

/// Runs the 1-by-1 algorithm on `g1` to completion.
pub fn one_by_one(g1: &RFoldGraph, config: OneByOneConfig) -> OneByOne<'_> {
    OneByOne::new(g1, config).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::percolates_subset;

    fn config(t1: usize, max_rounds: usize) -> OneByOneConfig {
        OneByOneConfig {
            t1,
            max_rounds,
            choice: Choice::Lowest,
            reveal_cap: None,
            record_reveals: true,
        }
    }

    #[test]
    fn defaults() {
        assert_eq!(default_t1(1, 2), 1);
        // ln(1000)^1.5 = 18.15...
        assert_eq!(default_t1(1000, 2), 19);
        assert_eq!(default_max_rounds(1000, 19), 26);
        assert_eq!(default_max_rounds(5, 19), 1);
        assert!(analysis_t0(1000, 1).is_none());
    }

    #[test]
    fn star_example() {
        let star: Vec<(Vertex, Vertex)> = (1..6).map(|v| (0, v)).collect();
        let g = RFoldGraph::from_edges(6, vec![star.clone(), star]).unwrap();
        let run = one_by_one(&g, config(2, 3));
        assert_eq!(run.outcome(), Some(OneByOneOutcome::Success));
        assert_eq!(run.round(), 1);
        assert_eq!(run.last_revealed(), &[1, 2, 3, 4, 5]);
        assert_eq!(run.last_joinable(), &[1, 2, 3, 4, 5]);
        assert_eq!(run.witness(), Some(&[0, 1][..]));
        assert_eq!(run.dormant(), &[2, 3, 4, 5]);
        assert_eq!(run.active_count(), 0);

        let seeded = one_by_one(&g, OneByOneConfig { choice: Choice::Seeded(Seed(4)), ..config(2, 3) });
        if seeded.trial()[0] == 0 {
            let x = seeded.witness().unwrap();
            assert!(x[1] >= 1 && x[1] <= 5);
        }
    }

    #[test]
    fn complete_graph_stalls_after_one_extension() {
        // Step 1 reveals every active vertex, which all turn dormant, so the
        // trial set of a complete graph never grows past two vertices.
        let g = RFoldGraph::complete(12, 2).unwrap();
        let run = one_by_one(&g, config(2, 3));
        assert_eq!(run.witness(), Some(&[0, 1][..]));
        let run = one_by_one(&g, config(3, 3));
        assert_eq!(run.outcome(), Some(OneByOneOutcome::RoundCap));
        assert_eq!(run.round_lengths(), &[2, 2, 2]);
        assert_eq!(run.discarded(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(run.ledger().unwrap().repeats(), 0);
    }

    #[test]
    fn empty_graph_exhausts_rounds() {
        let g = RFoldGraph::empty(10, 2).unwrap();
        let run = one_by_one(&g, config(3, 4));
        assert_eq!(run.outcome(), Some(OneByOneOutcome::RoundCap));
        assert_eq!(run.round_lengths(), &[1, 1, 1, 1]);
        assert_eq!(run.reveal_sizes(), &[0, 0, 0, 0]);
        assert_eq!(run.discarded(), &[0, 1, 2, 3]);
        let run = one_by_one(&g, config(3, 50));
        assert_eq!(run.outcome(), Some(OneByOneOutcome::NoActiveVertices));
        assert_eq!(run.round_lengths().len(), 10);
    }

    #[test]
    fn reveal_cap_aborts() {
        let g = RFoldGraph::complete(12, 2).unwrap();
        let run = one_by_one(&g, OneByOneConfig { reveal_cap: Some(5), ..config(3, 3) });
        assert_eq!(run.outcome(), Some(OneByOneOutcome::RevealCap));
    }

    #[test]
    fn path_grows_in_one_round() {
        // Colour 1 is the path 0-1-2-3-4, colour 2 a star at 0: every new
        // path vertex has a colour-2 edge to the first trial vertex.
        let path: Vec<(Vertex, Vertex)> = (0..4).map(|v| (v, v + 1)).collect();
        let star: Vec<(Vertex, Vertex)> = (1..5).map(|v| (0, v)).collect();
        let g = RFoldGraph::from_edges(5, vec![path, star]).unwrap();
        let run = one_by_one(&g, config(5, 1));
        assert_eq!(run.witness(), Some(&[0, 1, 2, 3, 4][..]));
        assert_eq!(percolates_subset(&g, run.witness().unwrap()), Ok(true));
    }
}
