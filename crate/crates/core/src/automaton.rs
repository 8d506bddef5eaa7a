//! Empirical 3-kernel automata for the closed-form columns.
//!
//! A kernel sequence is `m ↦ v(3^e m + r)`. Starting from `v` itself, each
//! kernel sequence spawns three children by appending one more low base-3
//! digit. Two kernel sequences are treated as equal when their first
//! `prefix_len` terms agree; that identification is heuristic, so every
//! automaton is replayed against the source column before it is returned.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::closed_form::Column;
use crate::eisenstein::UnitOrZero;
use crate::error::{Error, Result};

pub const MAX_STATES: usize = 64;
pub const MIN_PREFIX_LEN: usize = 81;
/// Replay covers every `n < 3^6`.
pub const REPLAY_LIMIT: u64 = 729;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct State {
    pub output: UnitOrZero,
}

/// Deterministic finite automaton with output reading base-3 digits of `n`,
/// least significant first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfao {
    pub states: Vec<State>,
    pub transitions: Vec<[usize; 3]>,
    pub initial: usize,
    pub digit_order: String,
}

impl Dfao {
    pub fn run(&self, n: &BigUint) -> UnitOrZero {
        let mut state = self.initial;
        if !n.is_zero() {
            for d in n.to_radix_le(3) {
                state = self.transitions[state][d as usize];
            }
        }
        self.states[state].output
    }

    pub fn run_u64(&self, mut n: u64) -> UnitOrZero {
        let mut state = self.initial;
        while n > 0 {
            state = self.transitions[state][(n % 3) as usize];
            n /= 3;
        }
        self.states[state].output
    }

    /// First `n` that disagrees with `column` below `limit`, if any.
    pub fn replay(&self, column: Column, limit: u64) -> Result<()> {
        match (0..limit).find(|&n| self.run_u64(n) != column.value_u64(n)) {
            Some(n) => Err(Error::ReplayMismatch { n }),
            None => Ok(()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("automaton serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("automaton serializes")
    }

    /// Parses and validates an automaton in the JSON wire format.
    pub fn from_json(text: &str) -> Result<Self> {
        let dfao: Dfao =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("automaton JSON: {e}")))?;
        dfao.validate()?;
        Ok(dfao)
    }

    /// Transitions total and in range, and every state reachable.
    pub fn validate(&self) -> Result<()> {
        let n = self.states.len();
        let bad = |msg: String| Err(Error::Parse(msg));
        if n == 0 {
            return bad("automaton has no states".into());
        }
        if self.digit_order != "lsd" {
            return bad(format!("unsupported digit order {:?}", self.digit_order));
        }
        if self.transitions.len() != n {
            return bad(format!(
                "{} transition rows for {n} states",
                self.transitions.len()
            ));
        }
        if self.initial >= n {
            return bad(format!("initial state {} out of range", self.initial));
        }
        if let Some(t) = self.transitions.iter().flatten().find(|&&t| t >= n) {
            return bad(format!("transition to missing state {t}"));
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(s) = queue.pop_front() {
            for &t in &self.transitions[s] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        if let Some(s) = seen.iter().position(|&r| !r) {
            return bad(format!("state {s} is unreachable"));
        }
        Ok(())
    }
}

/// Builds the kernel automaton of `column`, then replays it on `n < 3^6`.
pub fn kernel_dfao(column: Column, prefix_len: usize) -> Result<Dfao> {
    if prefix_len < MIN_PREFIX_LEN {
        return Err(Error::InvalidSize(format!(
            "prefix length {prefix_len} is below the minimum of {MIN_PREFIX_LEN}"
        )));
    }
    let prefix = |scale: &BigUint, offset: &BigUint| -> Vec<UnitOrZero> {
        (0..prefix_len as u64)
            .map(|m| column.value(&(scale * m + offset)))
            .collect()
    };

    let mut index: HashMap<Vec<UnitOrZero>, usize> = HashMap::new();
    let mut states = Vec::new();
    let mut transitions: Vec<[usize; 3]> = Vec::new();
    let mut queue = VecDeque::new();

    let root = (BigUint::from(1u32), BigUint::zero());
    let values = prefix(&root.0, &root.1);
    states.push(State { output: values[0] });
    index.insert(values, 0);
    transitions.push([0; 3]);
    queue.push_back((0usize, root));

    while let Some((id, (scale, offset))) = queue.pop_front() {
        let child_scale = &scale * 3u32;
        for d in 0..3u32 {
            let child_offset = &offset + &scale * d;
            let values = prefix(&child_scale, &child_offset);
            let target = match index.get(&values) {
                Some(&t) => t,
                None => {
                    let t = states.len();
                    if t == MAX_STATES {
                        return Err(Error::NonConvergence { limit: MAX_STATES });
                    }
                    states.push(State { output: values[0] });
                    transitions.push([0; 3]);
                    index.insert(values, t);
                    queue.push_back((t, (child_scale.clone(), child_offset)));
                    t
                }
            };
            transitions[id][d as usize] = target;
        }
    }

    let dfao = Dfao {
        states,
        transitions,
        initial: 0,
        digit_order: "lsd".into(),
    };
    dfao.replay(column, REPLAY_LIMIT)?;
    Ok(dfao)
}

/// Smallest period `1..=max_period` of `values`, if the whole slice is periodic.
pub fn smallest_period<T: PartialEq>(values: &[T], max_period: usize) -> Option<usize> {
    (1..=max_period.min(values.len().saturating_sub(1)))
        .find(|&q| values.iter().zip(&values[q..]).all(|(x, y)| x == y))
}

/// Smallest `(start, period)` with `start ≤ max_start` and `period ≤ max_period`
/// such that `values[start..]` is periodic.
pub fn eventual_period<T: PartialEq>(
    values: &[T],
    max_start: usize,
    max_period: usize,
) -> Option<(usize, usize)> {
    (0..=max_start.min(values.len()))
        .find_map(|s| smallest_period(&values[s..], max_period).map(|q| (s, q)))
}
