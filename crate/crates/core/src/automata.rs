//! The nondeterministic automaton attached to a Brauer configuration
//! algebra: states are polygons, one letter per quiver arrow, transitions
//! along the arrows, and acceptance filtered by the admissible ideal's
//! monomial generators.
//!
//! The initial states are the first polygons of the length-lexicographically
//! minimal successor sequences. The accepting state is the least polygon of
//! the winning sequence, ties among equal-length sequences resolved towards
//! the earlier vertex; the worked two-polygon configuration pins this down
//! (its first polygon is both initial and final). Words equivalent under
//! the cycle-difference identifications are accepted together: a word is
//! accepted when some representative of its rewrite class survives the
//! monomial filter.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{IdealGenerator, Quiver};
use crate::config::{BrauerConfiguration, ConfigError};

/// Errors raised by automaton construction and acceptance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomataError {
    /// A word used a letter outside the alphabet.
    UnknownLetter(String),
    /// A letter index outside the alphabet.
    LetterOutOfRange { letter: usize, alphabet: usize },
    Config(ConfigError),
}

impl fmt::Display for AutomataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomataError::UnknownLetter(l) => write!(f, "unknown letter {l:?}"),
            AutomataError::LetterOutOfRange { letter, alphabet } => {
                write!(f, "letter {letter} outside alphabet of {alphabet}")
            }
            AutomataError::Config(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for AutomataError {}

impl From<ConfigError> for AutomataError {
    fn from(e: ConfigError) -> Self {
        AutomataError::Config(e)
    }
}

/// The automaton: one state per polygon, one letter per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    state_labels: Vec<String>,
    /// Letter names indexed by arrow id.
    alphabet: Vec<String>,
    /// (source, target) per letter.
    edges: Vec<(usize, usize)>,
    initial: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
}

impl Nfa {
    pub fn state_count(&self) -> usize {
        self.state_labels.len()
    }

    pub fn state_label(&self, i: usize) -> &str {
        &self.state_labels[i]
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn initial(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<usize> {
        &self.accepting
    }

    /// Parses a comma-separated word such as `l1_3,a0_1` into letter
    /// indices.
    pub fn word_from_names(&self, word: &str) -> Result<Vec<usize>, AutomataError> {
        word.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| {
                self.alphabet
                    .iter()
                    .position(|l| l == name)
                    .ok_or_else(|| AutomataError::UnknownLetter(name.to_string()))
            })
            .collect()
    }

    /// Plain automaton semantics, no ideal filtering: the word is accepted
    /// when a run from an initial state ends in an accepting state.
    pub fn run_raw(&self, word: &[usize]) -> Result<bool, AutomataError> {
        let mut states: BTreeSet<usize> = self.initial.clone();
        for &letter in word {
            let &(source, target) = self.edges.get(letter).ok_or(
                AutomataError::LetterOutOfRange { letter, alphabet: self.alphabet.len() },
            )?;
            states = if states.contains(&source) {
                BTreeSet::from([target])
            } else {
                BTreeSet::new()
            };
            if states.is_empty() {
                return Ok(false);
            }
        }
        Ok(states.iter().any(|s| self.accepting.contains(s)))
    }
}

/// Builds the automaton from a configuration and its quiver.
pub fn build_nfa(config: &BrauerConfiguration, quiver: &Quiver) -> Result<Nfa, AutomataError> {
    // Length-lexicographic order on successor sequences, vertex order as
    // the final tie-break.
    let mut keyed: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    for (pos, vertex) in config.vertices().iter().enumerate() {
        let seq = config.successor_sequence(vertex)?;
        keyed.push((seq.len(), seq.chain().to_vec(), pos));
    }
    keyed.sort();
    let min_len = keyed[0].0;
    let min_chain = keyed[0].1.clone();
    let initial: BTreeSet<usize> = keyed
        .iter()
        .filter(|(len, chain, _)| *len == min_len && *chain == min_chain)
        .map(|(_, chain, _)| chain[0])
        .collect();
    // The winning sequence's least polygon carries the accepting colour.
    let accepting = BTreeSet::from([min_chain[0]]);
    Ok(Nfa {
        state_labels: (0..quiver.node_count())
            .map(|i| quiver.node_word(i).to_string())
            .collect(),
        alphabet: quiver.arrows.iter().map(|a| a.label.clone()).collect(),
        edges: quiver.arrows.iter().map(|a| (a.source, a.target)).collect(),
        initial,
        accepting,
    })
}

fn contains_factor(word: &[usize], factor: &[usize]) -> bool {
    !factor.is_empty() && word.windows(factor.len()).any(|w| w == factor)
}

fn replace_at(word: &[usize], at: usize, len: usize, with: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len() - len + with.len());
    out.extend_from_slice(&word[..at]);
    out.extend_from_slice(with);
    out.extend_from_slice(&word[at + len..]);
    out
}

/// Acceptance modulo the ideal: the letter sequence must trace a path
/// from an initial state, survive the monomial filter, and end in an
/// accepting state.
///
/// The filter rejects any factor matching a forbidden-product, overrun or
/// loop-power generator, and any adjacent arrow pair that is not
/// consecutive in its special cycle. The adjacency condition is read off
/// the overrun and loop-power monomials; it covers the same-vertex
/// products (loop squares and the like) that the four generator kinds do
/// not list but that vanish in the algebra all the same. Cycle-difference
/// generators act as rewrites: a word is accepted when some
/// representative of its class is clean.
pub fn accepts(
    nfa: &Nfa,
    generators: &[IdealGenerator],
    word: &[usize],
) -> Result<bool, AutomataError> {
    if word.is_empty() {
        return Ok(nfa.initial.iter().any(|s| nfa.accepting.contains(s)));
    }
    for &letter in word {
        if letter >= nfa.alphabet.len() {
            return Err(AutomataError::LetterOutOfRange {
                letter,
                alphabet: nfa.alphabet.len(),
            });
        }
    }
    // Path tracing: composability, initial start, accepting end.
    if !nfa.initial.contains(&nfa.edges[word[0]].0) {
        return Ok(false);
    }
    for pair in word.windows(2) {
        if nfa.edges[pair[0]].1 != nfa.edges[pair[1]].0 {
            return Ok(false);
        }
    }
    if !nfa.accepting.contains(&nfa.edges[*word.last().expect("nonempty")].1) {
        return Ok(false);
    }
    let monomials: Vec<Vec<usize>> =
        generators.iter().filter_map(IdealGenerator::monomial).collect();
    // Adjacent pairs that occur inside overrun or loop-power monomials are
    // exactly the consecutive steps of the special cycles.
    let mut allowed_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for g in generators {
        if matches!(g, IdealGenerator::CycleOverrun { .. } | IdealGenerator::LoopPower { .. }) {
            let m = g.monomial().expect("monomial kinds");
            for p in m.windows(2) {
                allowed_pairs.insert((p[0], p[1]));
            }
        }
    }
    let rewrites: Vec<(&Vec<usize>, &Vec<usize>)> = generators
        .iter()
        .filter_map(|g| match g {
            IdealGenerator::CycleDifference { minuend, subtrahend } => {
                Some([(minuend, subtrahend), (subtrahend, minuend)])
            }
            _ => None,
        })
        .flatten()
        .collect();
    // Breadth-first search over the rewrite class, bounded at desk scale.
    let clean = |w: &[usize]| {
        w.windows(2).all(|p| allowed_pairs.contains(&(p[0], p[1])))
            && monomials.iter().all(|m| !contains_factor(w, m))
    };
    let mut queue: VecDeque<Vec<usize>> = VecDeque::from([word.to_vec()]);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([word.to_vec()]);
    const CLASS_CAP: usize = 512;
    while let Some(w) = queue.pop_front() {
        if clean(&w) {
            return Ok(true);
        }
        if seen.len() >= CLASS_CAP {
            continue;
        }
        for (from, to) in &rewrites {
            if from.len() > w.len() {
                continue;
            }
            for at in 0..=w.len() - from.len() {
                if &w[at..at + from.len()] == from.as_slice() {
                    let next = replace_at(&w, at, from.len(), to);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// DOT rendering: accepting states drawn as double circles, initial
/// states marked by a start point, byte-stable ordering.
pub fn export_dot(nfa: &Nfa) -> String {
    let mut out = String::from("digraph nfa {\n  rankdir=LR;\n  __start [shape=point];\n");
    for i in 0..nfa.state_count() {
        let shape = if nfa.accepting.contains(&i) { "doublecircle" } else { "circle" };
        out.push_str(&alloc::format!(
            "  n{} [label=\"{}\", shape={}];\n",
            i,
            nfa.state_label(i),
            shape
        ));
    }
    for i in &nfa.initial {
        out.push_str(&alloc::format!("  __start -> n{i};\n"));
    }
    for (letter, &(source, target)) in nfa.edges.iter().enumerate() {
        out.push_str(&alloc::format!(
            "  n{} -> n{} [label=\"{}\"];\n",
            source,
            target,
            nfa.alphabet[letter]
        ));
    }
    out.push_str("}\n");
    out
}

/// Plain-text transition table: initial and accepting sets, then one
/// `state letter target` line per arrow.
pub fn transition_table(nfa: &Nfa) -> String {
    let mut out = String::new();
    let set = |s: &BTreeSet<usize>| {
        s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    };
    out.push_str(&alloc::format!("initial: {}\n", set(&nfa.initial)));
    out.push_str(&alloc::format!("accepting: {}\n", set(&nfa.accepting)));
    let mut rows: Vec<(usize, &str, usize)> = nfa
        .edges
        .iter()
        .enumerate()
        .map(|(l, &(s, t))| (s, nfa.alphabet[l].as_str(), t))
        .collect();
    rows.sort();
    for (s, letter, t) in rows {
        out.push_str(&alloc::format!("{s} {letter} {t}\n"));
    }
    out
}
