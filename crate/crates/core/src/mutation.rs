//! Seeds and mutations over `GF(2^n)`.
//!
//! A seed holds `l` words of field elements plus the round parameters: a
//! per-position scale vector, a round-indexed shift schedule, and the
//! choice of per-round transform. One mutation step produces `l` new
//! words: the first is the old first word plus the transformed left
//! rotation of the old last word plus the round shift; every further word
//! is the previous new word plus the corresponding old word.
//!
//! With the byte substitution table as the transform, four 4-byte words,
//! and the standard round-constant schedule as shifts, the step *is* one
//! round of AES-128 key expansion; [`aes_key_schedule`] is that
//! specialisation and goes through the generic step, not a private path.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{self, AlgebraError};
use crate::config::{BrauerConfiguration, ConfigError};
use crate::dioph::{self, DiophError};
use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::rng::SplitMix64;

/// Byte substitution table (row = high nibble, column = low nibble).
pub const SBOX: [u8; 256] = [
    0x63, 0x7C, 0x77, 0x7B, 0xF2, 0x6B, 0x6F, 0xC5, 0x30, 0x01, 0x67, 0x2B, 0xFE, 0xD7, 0xAB, 0x76,
    0xCA, 0x82, 0xC9, 0x7D, 0xFA, 0x59, 0x47, 0xF0, 0xAD, 0xD4, 0xA2, 0xAF, 0x9C, 0xA4, 0x72, 0xC0,
    0xB7, 0xFD, 0x93, 0x26, 0x36, 0x3F, 0xF7, 0xCC, 0x34, 0xA5, 0xE5, 0xF1, 0x71, 0xD8, 0x31, 0x15,
    0x04, 0xC7, 0x23, 0xC3, 0x18, 0x96, 0x05, 0x9A, 0x07, 0x12, 0x80, 0xE2, 0xEB, 0x27, 0xB2, 0x75,
    0x09, 0x83, 0x2C, 0x1A, 0x1B, 0x6E, 0x5A, 0xA0, 0x52, 0x3B, 0xD6, 0xB3, 0x29, 0xE3, 0x2F, 0x84,
    0x53, 0xD1, 0x00, 0xED, 0x20, 0xFC, 0xB1, 0x5B, 0x6A, 0xCB, 0xBE, 0x39, 0x4A, 0x4C, 0x58, 0xCF,
    0xD0, 0xEF, 0xAA, 0xFB, 0x43, 0x4D, 0x33, 0x85, 0x45, 0xF9, 0x02, 0x7F, 0x50, 0x3C, 0x9F, 0xA8,
    0x51, 0xA3, 0x40, 0x8F, 0x92, 0x9D, 0x38, 0xF5, 0xBC, 0xB6, 0xDA, 0x21, 0x10, 0xFF, 0xF3, 0xD2,
    0xCD, 0x0C, 0x13, 0xEC, 0x5F, 0x97, 0x44, 0x17, 0xC4, 0xA7, 0x7E, 0x3D, 0x64, 0x5D, 0x19, 0x73,
    0x60, 0x81, 0x4F, 0xDC, 0x22, 0x2A, 0x90, 0x88, 0x46, 0xEE, 0xB8, 0x14, 0xDE, 0x5E, 0x0B, 0xDB,
    0xE0, 0x32, 0x3A, 0x0A, 0x49, 0x06, 0x24, 0x5C, 0xC2, 0xD3, 0xAC, 0x62, 0x91, 0x95, 0xE4, 0x79,
    0xE7, 0xC8, 0x37, 0x6D, 0x8D, 0xD5, 0x4E, 0xA9, 0x6C, 0x56, 0xF4, 0xEA, 0x65, 0x7A, 0xAE, 0x08,
    0xBA, 0x78, 0x25, 0x2E, 0x1C, 0xA6, 0xB4, 0xC6, 0xE8, 0xDD, 0x74, 0x1F, 0x4B, 0xBD, 0x8B, 0x8A,
    0x70, 0x3E, 0xB5, 0x66, 0x48, 0x03, 0xF6, 0x0E, 0x61, 0x35, 0x57, 0xB9, 0x86, 0xC1, 0x1D, 0x9E,
    0xE1, 0xF8, 0x98, 0x11, 0x69, 0xD9, 0x8E, 0x94, 0x9B, 0x1E, 0x87, 0xE9, 0xCE, 0x55, 0x28, 0xDF,
    0x8C, 0xA1, 0x89, 0x0D, 0xBF, 0xE6, 0x42, 0x68, 0x41, 0x99, 0x2D, 0x0F, 0xB0, 0x54, 0xBB, 0x16,
];

/// Table lookup, row = high nibble, column = low nibble.
pub fn sbox(byte: u8) -> u8 {
    SBOX[byte as usize]
}

/// Standard round-constant bytes (powers of `x` in `GF(2^8)`).
pub const RCON_STANDARD: [u8; 10] = [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36];

/// An alternative round-constant schedule with `41` and `81` in place of
/// the standard `40` and `80`; selectable for comparison runs only.
pub const RCON_PAPER: [u8; 10] = [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x41, 0x81, 0x1B, 0x36];

/// Which round-constant schedule an AES-mode seed uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RconKind {
    Standard,
    Paper,
}

impl RconKind {
    pub fn bytes(self) -> [u8; 10] {
        match self {
            RconKind::Standard => RCON_STANDARD,
            RconKind::Paper => RCON_PAPER,
        }
    }
}

/// Errors raised by seeds and mutation steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MutationError {
    /// A seed needs at least one word and one element per word.
    EmptySeed,
    /// All words must have the same length.
    RaggedWords,
    /// Elements, scales and shifts must share the seed's field spec.
    Field(FieldError),
    /// Scale vector length must match the word length.
    ScaleLength { expected: usize, got: usize },
    /// Every shift vector must match the word length.
    ShiftLength { round: usize, expected: usize, got: usize },
    /// Requested round is beyond the shift schedule.
    ShiftScheduleExhausted { round: usize, available: usize },
    /// Table substitution works on bytes only.
    SboxNeedsDegree8(u32),
    /// AES keys are exactly 16 bytes.
    KeyLength(usize),
    /// Degenerate cluster data cannot form a valid configuration.
    Config(ConfigError),
    Algebra(AlgebraError),
    Dioph(DiophError),
}

impl fmt::Display for MutationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MutationError::EmptySeed => write!(f, "seed has no words"),
            MutationError::RaggedWords => write!(f, "seed words differ in length"),
            MutationError::Field(e) => write!(f, "{e}"),
            MutationError::ScaleLength { expected, got } => {
                write!(f, "scale vector has {got} entries, expected {expected}")
            }
            MutationError::ShiftLength { round, expected, got } => {
                write!(f, "shift vector {round} has {got} entries, expected {expected}")
            }
            MutationError::ShiftScheduleExhausted { round, available } => {
                write!(f, "round {round} exceeds the {available}-round shift schedule")
            }
            MutationError::SboxNeedsDegree8(n) => {
                write!(f, "table substitution needs degree 8, got {n}")
            }
            MutationError::KeyLength(n) => write!(f, "key must be 16 bytes, got {n}"),
            MutationError::Config(e) => write!(f, "{e}"),
            MutationError::Algebra(e) => write!(f, "{e}"),
            MutationError::Dioph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MutationError {}

impl From<FieldError> for MutationError {
    fn from(e: FieldError) -> Self {
        MutationError::Field(e)
    }
}

impl From<ConfigError> for MutationError {
    fn from(e: ConfigError) -> Self {
        MutationError::Config(e)
    }
}

impl From<AlgebraError> for MutationError {
    fn from(e: AlgebraError) -> Self {
        MutationError::Algebra(e)
    }
}

impl From<DiophError> for MutationError {
    fn from(e: DiophError) -> Self {
        MutationError::Dioph(e)
    }
}

/// The per-round transform applied to the rotated last word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundTransform {
    /// Leave elements unchanged (the shift vector still applies).
    Identity,
    /// Multiply each element by the scale of its source position.
    GenericAffine,
    /// Byte substitution through the table; degree-8 fields only.
    SboxTable,
}

/// Mutation state after some number of rounds: `l` words of field
/// elements. Cluster 0 is the seed itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    pub index: usize,
    pub words: Vec<Vec<FieldElement>>,
}

impl Cluster {
    /// Bits of one word, most significant coefficient of each element
    /// first.
    pub fn word_bits(&self, word: usize) -> Vec<u8> {
        let mut bits = Vec::new();
        for e in &self.words[word] {
            let n = e.spec().degree();
            for j in (0..n).rev() {
                bits.push(((e.bits() >> j) & 1) as u8);
            }
        }
        bits
    }

    pub fn word_bit_string(&self, word: usize) -> String {
        self.word_bits(word).iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
    }

    /// The cluster's message: all word bit strings concatenated in order.
    pub fn message_bits(&self) -> Vec<u8> {
        (0..self.words.len()).flat_map(|w| self.word_bits(w)).collect()
    }

    pub fn message_string(&self) -> String {
        self.message_bits().iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
    }

    /// One word as a 32-bit integer; the word must be four bytes.
    pub fn word_u32(&self, word: usize) -> Option<u32> {
        let w = &self.words[word];
        if w.len() != 4 || w.iter().any(|e| e.spec().degree() != 8) {
            return None;
        }
        Some(w.iter().fold(0u32, |acc, e| (acc << 8) | e.bits() as u32))
    }

    /// Canonical state encoding: concatenated big-endian element masks in
    /// word order.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for word in &self.words {
            for e in word {
                if e.spec().degree() > 8 {
                    out.extend_from_slice(&e.bits().to_be_bytes());
                } else {
                    out.push(e.bits() as u8);
                }
            }
        }
        out
    }
}

/// A mutation seed: initial words plus round parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    spec: FieldSpec,
    words: Vec<Vec<FieldElement>>,
    scales: Vec<FieldElement>,
    shifts: Vec<Vec<FieldElement>>,
    transform: RoundTransform,
}

impl Seed {
    pub fn new(
        spec: FieldSpec,
        words: Vec<Vec<FieldElement>>,
        scales: Vec<FieldElement>,
        shifts: Vec<Vec<FieldElement>>,
        transform: RoundTransform,
    ) -> Result<Self, MutationError> {
        if words.is_empty() || words[0].is_empty() {
            return Err(MutationError::EmptySeed);
        }
        let width = words[0].len();
        if words.iter().any(|w| w.len() != width) {
            return Err(MutationError::RaggedWords);
        }
        for e in words.iter().flatten().chain(scales.iter()).chain(shifts.iter().flatten()) {
            if e.spec() != spec {
                return Err(MutationError::Field(FieldError::MismatchedSpecs));
            }
        }
        if transform == RoundTransform::GenericAffine && scales.len() != width {
            return Err(MutationError::ScaleLength { expected: width, got: scales.len() });
        }
        if transform == RoundTransform::SboxTable && spec.degree() != 8 {
            return Err(MutationError::SboxNeedsDegree8(spec.degree()));
        }
        for (round, v) in shifts.iter().enumerate() {
            if v.len() != width {
                return Err(MutationError::ShiftLength {
                    round: round + 1,
                    expected: width,
                    got: v.len(),
                });
            }
        }
        Ok(Seed { spec, words, scales, shifts, transform })
    }

    /// AES-mode seed: four 4-byte words over the Rijndael field, table
    /// substitution, and the round-constant schedule as shifts.
    pub fn aes(key: &[u8], rcon: RconKind) -> Result<Self, MutationError> {
        if key.len() != 16 {
            return Err(MutationError::KeyLength(key.len()));
        }
        let spec = FieldSpec::aes();
        let el = |b: u8| spec.element(b as u16).expect("byte fits degree 8");
        let words = key.chunks(4).map(|c| c.iter().map(|&b| el(b)).collect()).collect();
        let shifts = rcon
            .bytes()
            .iter()
            .map(|&rc| alloc::vec![el(rc), spec.zero(), spec.zero(), spec.zero()])
            .collect();
        Seed::new(spec, words, Vec::new(), shifts, RoundTransform::SboxTable)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn word_len(&self) -> usize {
        self.words[0].len()
    }

    pub fn rounds_available(&self) -> usize {
        self.shifts.len()
    }

    /// Cluster 0: the seed words themselves.
    pub fn initial_cluster(&self) -> Cluster {
        Cluster { index: 0, words: self.words.clone() }
    }

    fn transform_element(&self, src_pos: usize, e: FieldElement) -> Result<FieldElement, MutationError> {
        match self.transform {
            RoundTransform::Identity => Ok(e),
            RoundTransform::GenericAffine => Ok(self.scales[src_pos].mul(e)?),
            RoundTransform::SboxTable => {
                Ok(self.spec.element(sbox(e.bits() as u8) as u16)?)
            }
        }
    }

    /// One mutation step from `prev` (round `prev.index + 1`): rotate the
    /// last word left by one element, transform, add the round shift into
    /// the first word, then chain the rest by addition.
    pub fn step(&self, prev: &Cluster) -> Result<Cluster, MutationError> {
        let round = prev.index + 1;
        let shift = self.shifts.get(round - 1).ok_or(MutationError::ShiftScheduleExhausted {
            round,
            available: self.shifts.len(),
        })?;
        let width = self.word_len();
        let last = prev.words.last().expect("validated nonempty");
        let mut first = Vec::with_capacity(width);
        for (k, (w0, sh)) in prev.words[0].iter().zip(shift).enumerate() {
            let src = (k + 1) % width;
            let t = self.transform_element(src, last[src])?;
            first.push(w0.add(t)?.add(*sh)?);
        }
        let mut words = Vec::with_capacity(prev.words.len());
        words.push(first);
        for old in &prev.words[1..] {
            let prev_new = words.last().expect("nonempty");
            let mut w = Vec::with_capacity(width);
            for (a, b) in prev_new.iter().zip(old) {
                w.push(a.add(*b)?);
            }
            words.push(w);
        }
        Ok(Cluster { index: round, words })
    }

    /// The cluster after `round` steps.
    pub fn cluster_at(&self, round: usize) -> Result<Cluster, MutationError> {
        let mut c = self.initial_cluster();
        for _ in 0..round {
            c = self.step(&c)?;
        }
        Ok(c)
    }

    /// Clusters 0 through `m0`.
    pub fn clusters(&self, m0: usize) -> Result<Vec<Cluster>, MutationError> {
        let mut out = Vec::with_capacity(m0 + 1);
        out.push(self.initial_cluster());
        for _ in 0..m0 {
            let next = self.step(out.last().expect("nonempty"))?;
            out.push(next);
        }
        Ok(out)
    }
}

/// The configuration collecting the messages of clusters `0..=m0` as
/// polygons over the vertex set `{0, 1}`, in round order. Degenerate
/// seeds whose messages never use a bit surface as validation errors.
pub fn cluster_configuration(seed: &Seed, m0: usize) -> Result<BrauerConfiguration, MutationError> {
    let clusters = seed.clusters(m0)?;
    let messages: Vec<String> = clusters.iter().map(Cluster::message_string).collect();
    let polygons: Vec<&str> = messages.iter().map(String::as_str).collect();
    Ok(BrauerConfiguration::binary(&polygons)?)
}

/// The 44-word AES-128 key expansion of a 16-byte key, produced by
/// running the generic mutation step ten times.
pub fn aes_key_schedule(key: &[u8]) -> Result<Vec<u32>, MutationError> {
    let seed = Seed::aes(key, RconKind::Standard)?;
    let clusters = seed.clusters(10)?;
    let mut words = Vec::with_capacity(44);
    for c in &clusters {
        for w in 0..4 {
            words.push(c.word_u32(w).expect("AES words are four bytes"));
        }
    }
    Ok(words)
}

/// Orbit data: the first repeated state and the cycle length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitReport {
    /// Index of the first state that later repeats.
    pub preperiod: usize,
    pub period: usize,
    /// Steps taken until the repeat was seen.
    pub states_visited: usize,
}

/// Why period detection stopped without an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UndeterminedReason {
    BudgetExhausted,
    ShiftScheduleExhausted,
}

/// Outcome of period detection: a closed orbit or an explicit
/// undetermined verdict, never a guessed period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodOutcome {
    Closed(OrbitReport),
    Undetermined { steps_taken: usize, reason: UndeterminedReason },
}

/// Iterates mutation steps and reports the first `(M, N)` with
/// `state_N = state_M`, keyed by the canonical state encoding.
pub fn detect_period(seed: &Seed, max_steps: usize) -> Result<PeriodOutcome, MutationError> {
    let mut seen: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut current = seed.initial_cluster();
    seen.insert(current.encode(), 0);
    for step in 1..=max_steps {
        current = match seed.step(&current) {
            Ok(c) => c,
            Err(MutationError::ShiftScheduleExhausted { .. }) => {
                return Ok(PeriodOutcome::Undetermined {
                    steps_taken: step - 1,
                    reason: UndeterminedReason::ShiftScheduleExhausted,
                });
            }
            Err(e) => return Err(e),
        };
        let key = current.encode();
        if let Some(&first) = seen.get(&key) {
            return Ok(PeriodOutcome::Closed(OrbitReport {
                preperiod: first,
                period: step - first,
                states_visited: step,
            }));
        }
        seen.insert(key, step);
    }
    Ok(PeriodOutcome::Undetermined {
        steps_taken: max_steps,
        reason: UndeterminedReason::BudgetExhausted,
    })
}

/// Round-constant bytes extended past ten rounds by repeated doubling in
/// the Rijndael field, for samplers that mutate longer.
pub fn rcon_extended(rounds: usize) -> Vec<u8> {
    let spec = FieldSpec::aes();
    let x = spec.element(0x02).expect("x");
    let mut rc = spec.one();
    let mut out = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        out.push(rc.bits() as u8);
        rc = rc.mul(x).expect("same spec");
    }
    out
}

/// Summary statistics of sampled algebra dimensions over random seeds.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionSummary {
    pub m0: usize,
    pub samples: usize,
    /// Samples dropped because the hex configuration was degenerate.
    pub skipped: usize,
    pub rng_seed: u64,
    pub dim_min: u64,
    pub dim_max: u64,
    pub dim_mean: f64,
    /// Empirical central 99% interval of the dimension.
    pub dim_p005: u64,
    pub dim_p995: u64,
    pub center_min: u64,
    pub center_max: u64,
    pub center_mean: f64,
    pub center_p005: u64,
    pub center_p995: u64,
}

impl DimensionSummary {
    /// Overlap of the empirical dimension interval with a reference one.
    pub fn dim_overlaps(&self, lo: u64, hi: u64) -> bool {
        self.dim_p005 <= hi && lo <= self.dim_p995
    }
}

fn percentile_bounds(sorted: &[u64]) -> (u64, u64) {
    let k = sorted.len();
    let lo_idx = (k - 1) * 5 / 1000;
    let hi_idx = ((k - 1) * 995).div_ceil(1000);
    (sorted[lo_idx], sorted[hi_idx])
}

/// Samples random 16-byte seeds, runs `m0` mutation rounds, reads the
/// clusters as a hex configuration, and summarises the dimension and
/// center dimension of the induced algebra. Deterministic per `rng_seed`.
pub fn estimate_dimensions(
    m0: usize,
    sample_count: usize,
    rng_seed: u64,
) -> Result<DimensionSummary, MutationError> {
    let spec = FieldSpec::aes();
    let el = |b: u8| spec.element(b as u16).expect("byte");
    let shifts: Vec<Vec<FieldElement>> = rcon_extended(m0)
        .iter()
        .map(|&rc| alloc::vec![el(rc), spec.zero(), spec.zero(), spec.zero()])
        .collect();
    let mut rng = SplitMix64::new(rng_seed);
    let mut dims = Vec::with_capacity(sample_count);
    let mut centers = Vec::with_capacity(sample_count);
    let mut skipped = 0usize;
    for _ in 0..sample_count {
        let mut key = [0u8; 16];
        rng.fill_bytes(&mut key);
        let words = key.chunks(4).map(|c| c.iter().map(|&b| el(b)).collect()).collect();
        let seed = Seed::new(
            spec,
            words,
            Vec::new(),
            shifts.clone(),
            RoundTransform::SboxTable,
        )?;
        let binary = match cluster_configuration(&seed, m0) {
            Ok(cfg) => cfg,
            Err(MutationError::Config(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let hexed = dioph::hex_transform(&binary)?;
        if !hexed.is_reduced() || !hexed.is_connected() {
            skipped += 1;
            continue;
        }
        dims.push(algebra::dimension(&hexed)?);
        centers.push(algebra::center_dimension(&hexed)?);
    }
    assert!(!dims.is_empty(), "all samples degenerate");
    let mean = |v: &[u64]| v.iter().map(|&x| x as u128).sum::<u128>() as f64 / v.len() as f64;
    let dim_mean = mean(&dims);
    let center_mean = mean(&centers);
    dims.sort_unstable();
    centers.sort_unstable();
    let (dim_p005, dim_p995) = percentile_bounds(&dims);
    let (center_p005, center_p995) = percentile_bounds(&centers);
    Ok(DimensionSummary {
        m0,
        samples: dims.len(),
        skipped,
        rng_seed,
        dim_min: dims[0],
        dim_max: *dims.last().expect("nonempty"),
        dim_mean,
        dim_p005,
        dim_p995,
        center_min: centers[0],
        center_max: *centers.last().expect("nonempty"),
        center_mean,
        center_p005,
        center_p995,
    })
}
