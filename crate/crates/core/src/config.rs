//! The Brauer configuration data model.
//!
//! A configuration is a quadruple: a set of vertices, a list of polygons
//! (multisets of vertices, at least two letters each), a multiplicity map,
//! and a well-ordering of the polygons. The ordering is the list order of
//! the polygon vector; the vertex list order doubles as the vertex order
//! used for tie-breaks elsewhere.
//!
//! Polygons keep their letters in insertion order. Multiset queries
//! (`occ`, valencies, successor sequences) ignore that order, but the word
//! of a polygon — and hence the message of the configuration — reads the
//! letters as stored, so a cluster polygon built from the bit string
//! `1011` contributes exactly `1011` to the message.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by configuration validation and queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    /// A configuration needs at least two vertices.
    TooFewVertices(usize),
    /// Polygons must contain at least two letters (with repetitions).
    PolygonTooSmall { index: usize, len: usize },
    /// A polygon letter is not a declared vertex.
    UndeclaredVertex { polygon: usize, label: String },
    /// A declared vertex occurs in no polygon.
    UnusedVertex(String),
    /// Duplicate vertex label in the vertex list.
    DuplicateVertex(String),
    /// Multiplicities must be positive.
    ZeroMultiplicity(String),
    /// Multiplicity given for an undeclared vertex.
    MultiplicityForUnknown(String),
    /// A configuration must have at least one polygon.
    NoPolygons,
    /// Query against a vertex that is not part of the configuration.
    UnknownVertex(String),
    /// Polygon index out of range.
    PolygonIndexOutOfRange { index: usize, len: usize },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::TooFewVertices(n) => write!(f, "need more than one vertex, got {n}"),
            ConfigError::PolygonTooSmall { index, len } => {
                write!(f, "polygon {index} has {len} letters, need at least 2")
            }
            ConfigError::UndeclaredVertex { polygon, label } => {
                write!(f, "polygon {polygon} uses undeclared vertex {label:?}")
            }
            ConfigError::UnusedVertex(v) => {
                write!(f, "vertex {v:?} occurs in no polygon")
            }
            ConfigError::DuplicateVertex(v) => write!(f, "duplicate vertex label {v:?}"),
            ConfigError::ZeroMultiplicity(v) => {
                write!(f, "vertex {v:?} has multiplicity 0, must be positive")
            }
            ConfigError::MultiplicityForUnknown(v) => {
                write!(f, "multiplicity given for undeclared vertex {v:?}")
            }
            ConfigError::NoPolygons => write!(f, "configuration has no polygons"),
            ConfigError::UnknownVertex(v) => write!(f, "unknown vertex {v:?}"),
            ConfigError::PolygonIndexOutOfRange { index, len } => {
                write!(f, "polygon index {index} out of range for {len} polygons")
            }
        }
    }
}

impl core::error::Error for ConfigError {}

/// A polygon: a multiset of vertex labels kept in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    letters: Vec<String>,
}

impl Polygon {
    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    /// Size counting repetitions.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of times `vertex` occurs in this polygon.
    pub fn occ(&self, vertex: &str) -> usize {
        self.letters.iter().filter(|l| l.as_str() == vertex).count()
    }

    /// The word of the polygon: letters grouped into runs, Eq-style
    /// `alpha_1^{s_1} ... alpha_t^{s_t}` when the letters are stored in
    /// canonical multiset order.
    pub fn word(&self) -> Word {
        let mut runs: Vec<(String, usize)> = Vec::new();
        for l in &self.letters {
            match runs.last_mut() {
                Some((label, count)) if label == l => *count += 1,
                _ => runs.push((l.clone(), 1)),
            }
        }
        Word { runs }
    }
}

/// A run-length word `alpha_1^{s_1} ... alpha_t^{s_t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    runs: Vec<(String, usize)>,
}

impl Word {
    pub fn runs(&self) -> &[(String, usize)] {
        &self.runs
    }

    /// Letter count with exponents expanded.
    pub fn expanded_len(&self) -> usize {
        self.runs.iter().map(|(_, s)| s).sum()
    }

    /// The flat letter sequence.
    pub fn expanded(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.expanded_len());
        for (label, count) in &self.runs {
            for _ in 0..*count {
                out.push(label.clone());
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, count) in &self.runs {
            for _ in 0..*count {
                f.write_str(label)?;
            }
        }
        Ok(())
    }
}

/// The message of a configuration: polygon words in configuration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Message {
    words: Vec<Word>,
}

impl Message {
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn expanded_len(&self) -> usize {
        self.words.iter().map(Word::expanded_len).sum()
    }
}

impl fmt::Display for Message {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.words {
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// The successor data of a vertex: the polygons containing it, in
/// configuration order with repetitions, plus the circular closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccessorSequence {
    vertex: String,
    chain: Vec<usize>,
}

impl SuccessorSequence {
    pub fn vertex(&self) -> &str {
        &self.vertex
    }

    /// Polygon indices of `S_alpha`, length `val(alpha)`.
    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The circular closure `C_alpha`: the chain followed by its first
    /// polygon again.
    pub fn closed(&self) -> Vec<usize> {
        let mut c = self.chain.clone();
        if let Some(&first) = self.chain.first() {
            c.push(first);
        }
        c
    }

    /// Covers of `C_alpha` as (source polygon, target polygon) pairs, the
    /// last one being the wrap-around.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.chain.len();
        (0..n)
            .map(|i| (self.chain[i], self.chain[(i + 1) % n]))
            .collect()
    }
}

/// Partition of the vertex set into truncated and non-truncated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    pub truncated: Vec<String>,
    pub non_truncated: Vec<String>,
}

impl VertexClasses {
    /// A configuration is reduced when no vertex is truncated.
    pub fn is_reduced(&self) -> bool {
        self.truncated.is_empty()
    }
}

/// A validated Brauer configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerConfiguration {
    vertices: Vec<String>,
    polygons: Vec<Polygon>,
    multiplicity: BTreeMap<String, u64>,
}

impl BrauerConfiguration {
    /// Validates and builds a configuration. Multiplicities missing from
    /// the map default to 1.
    pub fn new(
        vertices: Vec<String>,
        polygons: Vec<Vec<String>>,
        multiplicity: BTreeMap<String, u64>,
    ) -> Result<Self, ConfigError> {
        if vertices.len() < 2 {
            return Err(ConfigError::TooFewVertices(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(ConfigError::DuplicateVertex(v.clone()));
            }
        }
        if polygons.is_empty() {
            return Err(ConfigError::NoPolygons);
        }
        for (i, p) in polygons.iter().enumerate() {
            if p.len() < 2 {
                return Err(ConfigError::PolygonTooSmall { index: i, len: p.len() });
            }
            for l in p {
                if !seen.contains(l) {
                    return Err(ConfigError::UndeclaredVertex { polygon: i, label: l.clone() });
                }
            }
        }
        for v in &vertices {
            if !polygons.iter().any(|p| p.iter().any(|l| l == v)) {
                return Err(ConfigError::UnusedVertex(v.clone()));
            }
        }
        for (v, m) in &multiplicity {
            if !seen.contains(v) {
                return Err(ConfigError::MultiplicityForUnknown(v.clone()));
            }
            if *m == 0 {
                return Err(ConfigError::ZeroMultiplicity(v.clone()));
            }
        }
        let mut mu = multiplicity;
        for v in &vertices {
            mu.entry(v.clone()).or_insert(1);
        }
        Ok(BrauerConfiguration {
            vertices,
            polygons: polygons.into_iter().map(|letters| Polygon { letters }).collect(),
            multiplicity: mu,
        })
    }

    /// Configuration over `{0, 1}` whose polygons are bit strings, with
    /// multiplicity 1 everywhere; the polygon order is the slice order.
    pub fn binary(bitstrings: &[&str]) -> Result<Self, ConfigError> {
        let polygons = bitstrings
            .iter()
            .map(|s| s.chars().map(|c| c.to_string()).collect())
            .collect();
        Self::new(
            ["0".to_string(), "1".to_string()].into(),
            polygons,
            BTreeMap::new(),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn polygon(&self, index: usize) -> Result<&Polygon, ConfigError> {
        self.polygons.get(index).ok_or(ConfigError::PolygonIndexOutOfRange {
            index,
            len: self.polygons.len(),
        })
    }

    pub fn polygon_count(&self) -> usize {
        self.polygons.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Position of a vertex in the vertex order.
    pub fn vertex_position(&self, vertex: &str) -> Result<usize, ConfigError> {
        self.vertices
            .iter()
            .position(|v| v == vertex)
            .ok_or_else(|| ConfigError::UnknownVertex(vertex.to_string()))
    }

    /// Multiplicity of a vertex.
    pub fn mu(&self, vertex: &str) -> Result<u64, ConfigError> {
        self.multiplicity
            .get(vertex)
            .copied()
            .ok_or_else(|| ConfigError::UnknownVertex(vertex.to_string()))
    }

    /// Number of times `vertex` occurs in the polygon at `index`.
    /// Unknown vertices occur zero times; a bad index is an error.
    pub fn occ(&self, vertex: &str, index: usize) -> Result<usize, ConfigError> {
        Ok(self.polygon(index)?.occ(vertex))
    }

    /// Total occurrences of `vertex` over all polygons.
    pub fn valency(&self, vertex: &str) -> Result<usize, ConfigError> {
        self.vertex_position(vertex)?;
        Ok(self.polygons.iter().map(|p| p.occ(vertex)).sum())
    }

    /// The successor sequence `S_alpha`: polygons containing the vertex in
    /// configuration order, each repeated `occ(alpha, V)` times.
    pub fn successor_sequence(&self, vertex: &str) -> Result<SuccessorSequence, ConfigError> {
        self.vertex_position(vertex)?;
        let mut chain = Vec::new();
        for (i, p) in self.polygons.iter().enumerate() {
            for _ in 0..p.occ(vertex) {
                chain.push(i);
            }
        }
        Ok(SuccessorSequence { vertex: vertex.to_string(), chain })
    }

    /// Exact partition into truncated (`mu * val = 1`) and non-truncated
    /// vertices, in vertex order.
    pub fn classify_vertices(&self) -> VertexClasses {
        let mut truncated = Vec::new();
        let mut non_truncated = Vec::new();
        for v in &self.vertices {
            let val = self.valency(v).expect("declared vertex") as u64;
            let mu = self.multiplicity[v];
            if mu * val == 1 {
                truncated.push(v.clone());
            } else {
                non_truncated.push(v.clone());
            }
        }
        VertexClasses { truncated, non_truncated }
    }

    pub fn is_reduced(&self) -> bool {
        self.classify_vertices().is_reduced()
    }

    /// True when the graph on polygons with "share a vertex" edges is
    /// connected.
    pub fn is_connected(&self) -> bool {
        let n = self.polygons.len();
        if n <= 1 {
            return true;
        }
        let mut visited = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        visited[0] = true;
        while let Some(i) = stack.pop() {
            let here: BTreeSet<&String> = self.polygons[i].letters.iter().collect();
            for (j, q) in self.polygons.iter().enumerate() {
                if !visited[j] && q.letters.iter().any(|l| here.contains(l)) {
                    visited[j] = true;
                    stack.push(j);
                }
            }
        }
        visited.iter().all(|&v| v)
    }

    /// The message: the concatenation of the polygon words in
    /// configuration order.
    pub fn message(&self) -> Message {
        Message {
            words: self.polygons.iter().map(Polygon::word).collect(),
        }
    }

    /// Total letter count over all polygons.
    pub fn total_letters(&self) -> usize {
        self.polygons.iter().map(Polygon::len).sum()
    }
}
