//! The Brauer quiver and algebra induced by a reduced configuration:
//! arrows from successor covers, special cycles and their rotations,
//! admissible-ideal generators, the dimension and center-dimension
//! formulas, the length-grading predicate, and basis enumeration.
//!
//! Arrows are materialised one per cover of each circular successor
//! sequence, including the wrap-around cover, so a vertex of valency `v`
//! contributes exactly `v` arrows. Consecutive equal entries of a
//! successor chain produce loops.
//!
//! Arrow labels follow the worked examples: for each vertex the non-loop
//! covers are numbered first in circular order, then the loops, giving
//! names like `a0_1`, `a0_2`, `a1_1`, `a1_2`, `l1_3` for the two-polygon
//! configuration over `{0, 1}`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::config::{BrauerConfiguration, ConfigError};

/// Errors raised by quiver and algebra construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Quiver construction requires a reduced configuration.
    NonReduced { truncated: Vec<String> },
    /// The center formula requires a connected configuration.
    Disconnected,
    /// Underlying configuration query failed.
    Config(ConfigError),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NonReduced { truncated } => {
                write!(f, "non-reduced input: truncated vertices {truncated:?}")
            }
            AlgebraError::Disconnected => write!(f, "configuration is not connected"),
            AlgebraError::Config(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for AlgebraError {}

impl From<ConfigError> for AlgebraError {
    fn from(e: ConfigError) -> Self {
        AlgebraError::Config(e)
    }
}

/// An arrow of the Brauer quiver, created by one cover of one circular
/// successor sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: usize,
    /// Source polygon index.
    pub source: usize,
    /// Target polygon index.
    pub target: usize,
    /// The vertex whose successor sequence produced this arrow.
    pub vertex: String,
    /// 1-based position of the cover in the circular sequence.
    pub position: usize,
    pub is_loop: bool,
    /// Stable display name, `a<vertex>_<k>` or `l<vertex>_<k>`.
    pub label: String,
}

/// The Brauer quiver: one node per polygon, arrows from successor covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    node_words: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn node_count(&self) -> usize {
        self.node_words.len()
    }

    /// Word of the polygon backing node `i`.
    pub fn node_word(&self, i: usize) -> &str {
        &self.node_words[i]
    }

    pub fn loop_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.is_loop).count()
    }

    pub fn arrow_by_label(&self, label: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.label == label)
    }
}

/// One rotation of the special cycle of a vertex: `val(alpha)` composable
/// arrows starting at a particular occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCycle {
    pub vertex: String,
    /// Polygon the rotation is based at.
    pub base_polygon: usize,
    /// 0-based occurrence index in the successor chain.
    pub base_occurrence: usize,
    /// Arrow ids, length `val(alpha)`.
    pub arrows: Vec<usize>,
}

impl SpecialCycle {
    /// The arrow sequence of `C^power` (the cycle repeated).
    pub fn power(&self, power: u64) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.arrows.len() * power as usize);
        for _ in 0..power {
            seq.extend_from_slice(&self.arrows);
        }
        seq
    }
}

/// Generators of the admissible ideal, one variant per relation kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealGenerator {
    /// `C_{alpha_i}^{mu(alpha_i)} - C_{alpha_j}^{mu(alpha_j)}` for two
    /// special cycles based at the same polygon.
    CycleDifference { minuend: Vec<usize>, subtrahend: Vec<usize> },
    /// `C^{mu(alpha)} a` where `a` is the first arrow of the rotation.
    CycleOverrun { arrows: Vec<usize> },
    /// `a b = 0` for composable arrows of distinct vertices.
    ForbiddenProduct { first: usize, second: usize },
    /// `a^{mu(alpha)+1} = 0` for the loop of a valency-1 vertex with
    /// multiplicity above 1.
    LoopPower { arrow: usize, exponent: u64 },
}

impl IdealGenerator {
    /// The monomial arrow sequence of this generator, when it is one
    /// (cycle differences are binomials and return `None`).
    pub fn monomial(&self) -> Option<Vec<usize>> {
        match self {
            IdealGenerator::CycleDifference { .. } => None,
            IdealGenerator::CycleOverrun { arrows } => Some(arrows.clone()),
            IdealGenerator::ForbiddenProduct { first, second } => {
                Some(alloc::vec![*first, *second])
            }
            IdealGenerator::LoopPower { arrow, exponent } => {
                Some(core::iter::repeat_n(*arrow, *exponent as usize).collect())
            }
        }
    }
}

/// A basis path class of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisElement {
    /// Trivial path at a polygon node.
    Idempotent { polygon: usize },
    /// A proper nonempty prefix of a rotated cycle power.
    Path { arrows: Vec<usize> },
    /// The class of the full cycles based at a polygon (all identified by
    /// the cycle-difference relations).
    FullCycle { polygon: usize, representative: Vec<usize> },
}

/// Headline numbers of the induced algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSummary {
    pub dim: u64,
    /// `None` when the configuration is disconnected.
    pub center_dim: Option<u64>,
    /// Common value of `val * mu` over non-truncated vertices, if any.
    pub graded: Option<u64>,
    pub node_count: usize,
    pub arrow_count: usize,
    pub loop_count: usize,
}

fn require_reduced(config: &BrauerConfiguration) -> Result<(), AlgebraError> {
    let classes = config.classify_vertices();
    if classes.is_reduced() {
        Ok(())
    } else {
        Err(AlgebraError::NonReduced { truncated: classes.truncated })
    }
}

/// Builds the Brauer quiver and every rotation of every special cycle.
/// Errors on non-reduced input.
pub fn build_quiver(
    config: &BrauerConfiguration,
) -> Result<(Quiver, Vec<SpecialCycle>), AlgebraError> {
    require_reduced(config)?;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut cycles: Vec<SpecialCycle> = Vec::new();
    for vertex in config.vertices() {
        let seq = config.successor_sequence(vertex)?;
        let covers = seq.covers();
        let val = covers.len();
        let first_id = arrows.len();
        // Non-loop covers are numbered before loops.
        let mut rank = alloc::vec![0usize; val];
        let mut next = 1;
        for (i, &(s, t)) in covers.iter().enumerate() {
            if s != t {
                rank[i] = next;
                next += 1;
            }
        }
        for (i, &(s, t)) in covers.iter().enumerate() {
            if s == t {
                rank[i] = next;
                next += 1;
            }
        }
        for (i, &(source, target)) in covers.iter().enumerate() {
            let is_loop = source == target;
            let prefix = if is_loop { 'l' } else { 'a' };
            arrows.push(Arrow {
                id: first_id + i,
                source,
                target,
                vertex: vertex.clone(),
                position: i + 1,
                is_loop,
                label: format!("{prefix}{vertex}_{}", rank[i]),
            });
        }
        for start in 0..val {
            let cycle_arrows = (0..val).map(|k| first_id + (start + k) % val).collect();
            cycles.push(SpecialCycle {
                vertex: vertex.clone(),
                base_polygon: seq.chain()[start],
                base_occurrence: start,
                arrows: cycle_arrows,
            });
        }
    }
    let node_words = config
        .polygons()
        .iter()
        .map(|p| p.word().to_string())
        .collect();
    Ok((Quiver { node_words, arrows }, cycles))
}

/// The complete generator list of the admissible ideal, in the four kinds
/// of the construction algorithm.
pub fn ideal_generators(
    config: &BrauerConfiguration,
) -> Result<Vec<IdealGenerator>, AlgebraError> {
    let (quiver, cycles) = build_quiver(config)?;
    let mut gens = Vec::new();
    // Cycle differences: all pairs of rotations based at the same polygon.
    for p in 0..config.polygon_count() {
        let based: Vec<&SpecialCycle> =
            cycles.iter().filter(|c| c.base_polygon == p).collect();
        for i in 0..based.len() {
            for j in i + 1..based.len() {
                let mu_i = config.mu(&based[i].vertex)?;
                let mu_j = config.mu(&based[j].vertex)?;
                gens.push(IdealGenerator::CycleDifference {
                    minuend: based[i].power(mu_i),
                    subtrahend: based[j].power(mu_j),
                });
            }
        }
    }
    // Overruns: one per rotation. For a valency-1 loop with mu > 1 the
    // overrun coincides with the loop-power relation emitted below.
    for cycle in &cycles {
        let mu = config.mu(&cycle.vertex)?;
        if cycle.arrows.len() == 1 && mu > 1 {
            continue;
        }
        let mut seq = cycle.power(mu);
        seq.push(cycle.arrows[0]);
        gens.push(IdealGenerator::CycleOverrun { arrows: seq });
    }
    // Forbidden products: composable arrow pairs of distinct vertices.
    for a in &quiver.arrows {
        for b in &quiver.arrows {
            if a.vertex != b.vertex && a.target == b.source {
                gens.push(IdealGenerator::ForbiddenProduct { first: a.id, second: b.id });
            }
        }
    }
    // Loop powers at valency-1 vertices with multiplicity above 1.
    for vertex in config.vertices() {
        let val = config.valency(vertex)?;
        let mu = config.mu(vertex)?;
        if val == 1 && mu > 1 {
            let arrow = quiver
                .arrows
                .iter()
                .find(|a| &a.vertex == vertex)
                .expect("valency-1 vertex has its wrap loop");
            gens.push(IdealGenerator::LoopPower { arrow: arrow.id, exponent: mu + 1 });
        }
    }
    Ok(gens)
}

/// `dim Lambda = 2 |Q_0| + sum val(alpha) (mu(alpha) val(alpha) - 1)` over
/// the non-truncated (here: all) vertices.
pub fn dimension(config: &BrauerConfiguration) -> Result<u64, AlgebraError> {
    require_reduced(config)?;
    let mut dim = 2 * config.polygon_count() as u128;
    for vertex in config.vertices() {
        let val = config.valency(vertex)? as u128;
        let mu = config.mu(vertex)? as u128;
        dim += val * (mu * val - 1);
    }
    Ok(u64::try_from(dim).expect("dimension exceeds u64"))
}

/// Dimension of the center:
/// `1 + sum mu(alpha) + |Gamma_1| - |Gamma_0| + #loops - |C_Gamma|`,
/// where `C_Gamma` collects the valency-1 vertices of multiplicity above 1.
/// Stated for connected reduced configurations with `rad^2 != 0`; the
/// radical hypothesis is not checked.
pub fn center_dimension(config: &BrauerConfiguration) -> Result<u64, AlgebraError> {
    require_reduced(config)?;
    if !config.is_connected() {
        return Err(AlgebraError::Disconnected);
    }
    let (quiver, _) = build_quiver(config)?;
    let mut mu_sum = 0u128;
    let mut c_gamma = 0u128;
    for vertex in config.vertices() {
        let mu = config.mu(vertex)? as u128;
        mu_sum += mu;
        if config.valency(vertex)? == 1 && mu > 1 {
            c_gamma += 1;
        }
    }
    let positive = 1 + mu_sum + config.polygon_count() as u128 + quiver.loop_count() as u128;
    let center = positive - config.vertex_count() as u128 - c_gamma;
    Ok(u64::try_from(center).expect("center dimension exceeds u64"))
}

/// The grading value `N` when `val(alpha) mu(alpha) = N` for every
/// non-truncated vertex, `None` otherwise.
pub fn length_grading(config: &BrauerConfiguration) -> Option<u64> {
    let classes = config.classify_vertices();
    let mut common: Option<u128> = None;
    for vertex in &classes.non_truncated {
        let val = config.valency(vertex).ok()? as u128;
        let mu = config.mu(vertex).ok()? as u128;
        let product = val * mu;
        match common {
            None => common = Some(product),
            Some(n) if n == product => {}
            Some(_) => return None,
        }
    }
    common.and_then(|n| u64::try_from(n).ok())
}

/// Enumerates the path-class basis: node idempotents, proper prefixes of
/// rotated cycle powers, and one full-cycle class per polygon.
pub fn enumerate_basis(
    config: &BrauerConfiguration,
) -> Result<Vec<BasisElement>, AlgebraError> {
    let (_, cycles) = build_quiver(config)?;
    let mut basis = Vec::new();
    for polygon in 0..config.polygon_count() {
        basis.push(BasisElement::Idempotent { polygon });
    }
    for cycle in &cycles {
        let mu = config.mu(&cycle.vertex)?;
        let full = cycle.power(mu);
        for len in 1..full.len() {
            basis.push(BasisElement::Path { arrows: full[..len].to_vec() });
        }
    }
    // One full-cycle class per polygon; the first rotation based there
    // stands for the whole equivalence class.
    for polygon in 0..config.polygon_count() {
        let cycle = cycles
            .iter()
            .find(|c| c.base_polygon == polygon)
            .expect("every polygon hosts a rotation");
        let mu = config.mu(&cycle.vertex)?;
        basis.push(BasisElement::FullCycle { polygon, representative: cycle.power(mu) });
    }
    Ok(basis)
}

/// Dimension, center dimension (for connected input), grading, and quiver
/// counts in one pass.
pub fn summary(config: &BrauerConfiguration) -> Result<AlgebraSummary, AlgebraError> {
    let (quiver, _) = build_quiver(config)?;
    let center = if config.is_connected() {
        Some(center_dimension(config)?)
    } else {
        None
    };
    Ok(AlgebraSummary {
        dim: dimension(config)?,
        center_dim: center,
        graded: length_grading(config),
        node_count: quiver.node_count(),
        arrow_count: quiver.arrows.len(),
        loop_count: quiver.loop_count(),
    })
}

/// DOT rendering of the quiver: nodes labelled by polygon words, arrows by
/// their stable names, everything in id order so output is byte-stable.
pub fn quiver_dot(quiver: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n  rankdir=LR;\n");
    for i in 0..quiver.node_count() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, quiver.node_word(i)));
    }
    for a in &quiver.arrows {
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{}\"];\n",
            a.source, a.target, a.label
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn config6() -> BrauerConfiguration {
        BrauerConfiguration::binary(&["011", "01"]).unwrap()
    }

    fn phi2() -> BrauerConfiguration {
        BrauerConfiguration::binary(&["0110", "1011", "1001"]).unwrap()
    }

    /// Uniform configuration on 2r+1 vertices where every polygon contains
    /// every vertex once (the shape produced by `gt::build_gt_configuration`).
    fn necklace(r: u64) -> BrauerConfiguration {
        let n = (2 * r + 1) as usize;
        let vertices: Vec<String> = (1..=n).map(|i| format!("q{i}")).collect();
        let polygons = vec![vertices.clone(); n];
        BrauerConfiguration::new(vertices, polygons, BTreeMap::new()).unwrap()
    }

    #[test]
    fn quiver_of_worked_configuration() {
        let (q, cycles) = build_quiver(&config6()).unwrap();
        assert_eq!(q.node_count(), 2);
        assert_eq!(q.arrows.len(), 5);
        assert_eq!(q.loop_count(), 1);
        let labels: Vec<&str> = q.arrows.iter().map(|a| a.label.as_str()).collect();
        assert_eq!(labels, vec!["a0_1", "a0_2", "l1_3", "a1_1", "a1_2"]);
        // Rotations: two for vertex 0, three for vertex 1, as in the
        // worked special-cycle list.
        assert_eq!(cycles.len(), 5);
        let c0v1 = &cycles[0];
        assert_eq!(c0v1.base_polygon, 0);
        assert_eq!(
            c0v1.arrows.iter().map(|&i| q.arrows[i].label.as_str()).collect::<Vec<_>>(),
            vec!["a0_1", "a0_2"]
        );
        let c1v1 = &cycles[2];
        assert_eq!(
            c1v1.arrows.iter().map(|&i| q.arrows[i].label.as_str()).collect::<Vec<_>>(),
            vec!["l1_3", "a1_1", "a1_2"]
        );
        let c1v2 = &cycles[4];
        assert_eq!(c1v2.base_polygon, 1);
        assert_eq!(
            c1v2.arrows.iter().map(|&i| q.arrows[i].label.as_str()).collect::<Vec<_>>(),
            vec!["a1_2", "l1_3", "a1_1"]
        );
        // Consecutive arrows of every rotation compose.
        for c in &cycles {
            for w in c.arrows.windows(2) {
                assert_eq!(q.arrows[w[0]].target, q.arrows[w[1]].source);
            }
            let last = *c.arrows.last().unwrap();
            assert_eq!(q.arrows[last].target, q.arrows[c.arrows[0]].source);
        }
    }

    #[test]
    fn quiver_rejects_non_reduced() {
        let bad = BrauerConfiguration::new(
            vec!["a".into(), "b".into()],
            vec![vec!["a".into(), "a".into(), "b".into()]],
            BTreeMap::new(),
        )
        .unwrap();
        assert!(matches!(
            build_quiver(&bad),
            Err(AlgebraError::NonReduced { .. })
        ));
    }

    #[test]
    fn two_polygons_sharing_one_vertex() {
        let cfg = BrauerConfiguration::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                vec!["a".into(), "b".into(), "b".into()],
                vec!["a".into(), "c".into(), "c".into()],
            ],
            BTreeMap::new(),
        )
        .unwrap();
        let (q, _) = build_quiver(&cfg).unwrap();
        let a_arrows: Vec<&Arrow> = q.arrows.iter().filter(|x| x.vertex == "a").collect();
        assert_eq!(a_arrows.len(), 2);
        assert_eq!((a_arrows[0].source, a_arrows[0].target), (0, 1));
        assert_eq!((a_arrows[1].source, a_arrows[1].target), (1, 0));
    }

    #[test]
    fn necklace_quiver_shape() {
        let (q, cycles) = build_quiver(&necklace(1)).unwrap();
        assert_eq!(q.node_count(), 3);
        assert_eq!(q.arrows.len(), 9);
        assert_eq!(q.loop_count(), 0);
        // Three parallel arrow families around the 3-node necklace.
        for vertex in ["q1", "q2", "q3"] {
            let own: Vec<&Arrow> = q.arrows.iter().filter(|a| a.vertex == vertex).collect();
            assert_eq!(own.len(), 3);
            assert_eq!(
                own.iter().map(|a| (a.source, a.target)).collect::<Vec<_>>(),
                vec![(0, 1), (1, 2), (2, 0)]
            );
        }
        assert_eq!(cycles.len(), 9);
        for c in &cycles {
            assert_eq!(c.arrows.len(), 3);
        }
    }

    #[test]
    fn ideal_generators_of_worked_configuration() {
        let cfg = config6();
        let (q, _) = build_quiver(&cfg).unwrap();
        let gens = ideal_generators(&cfg).unwrap();
        let id = |label: &str| q.arrow_by_label(label).unwrap().id;
        let forbidden: Vec<(usize, usize)> = gens
            .iter()
            .filter_map(|g| match g {
                IdealGenerator::ForbiddenProduct { first, second } => Some((*first, *second)),
                _ => None,
            })
            .collect();
        // The worked relation list: l1_3 a0_1, a1_1 a0_2, a0_2 l1_3,
        // a0_2 a1_1, a1_2 a0_1.
        for (a, b) in [
            ("l1_3", "a0_1"),
            ("a1_1", "a0_2"),
            ("a0_2", "l1_3"),
            ("a0_2", "a1_1"),
            ("a1_2", "a0_1"),
        ] {
            assert!(forbidden.contains(&(id(a), id(b))), "missing product {a}{b}");
        }
        // Cycle differences pair up rotations per polygon: 3 rotations at
        // V1 give three pairs, 2 at V2 give one.
        let diffs = gens
            .iter()
            .filter(|g| matches!(g, IdealGenerator::CycleDifference { .. }))
            .count();
        assert_eq!(diffs, 4);
        let overruns = gens
            .iter()
            .filter(|g| matches!(g, IdealGenerator::CycleOverrun { .. }))
            .count();
        assert_eq!(overruns, 5);
        // The vertex-0/vertex-1 difference at V1 is present with the
        // expected arrow sequences.
        let c0 = vec![id("a0_1"), id("a0_2")];
        let c1 = vec![id("l1_3"), id("a1_1"), id("a1_2")];
        assert!(gens.iter().any(|g| matches!(
            g,
            IdealGenerator::CycleDifference { minuend, subtrahend }
                if (*minuend == c0 && *subtrahend == c1) || (*minuend == c1 && *subtrahend == c0)
        )));
    }

    #[test]
    fn forbidden_products_cross_vertices_only() {
        for cfg in [config6(), phi2(), necklace(2)] {
            let (q, cycles) = build_quiver(&cfg).unwrap();
            for g in ideal_generators(&cfg).unwrap() {
                if let IdealGenerator::ForbiddenProduct { first, second } = g {
                    assert_ne!(q.arrows[first].vertex, q.arrows[second].vertex);
                    assert_eq!(q.arrows[first].target, q.arrows[second].source);
                    // Each operand arrow belongs to a special cycle of its
                    // own vertex.
                    for arrow_id in [first, second] {
                        let vertex = &q.arrows[arrow_id].vertex;
                        assert!(cycles
                            .iter()
                            .any(|c| &c.vertex == vertex && c.arrows.contains(&arrow_id)));
                    }
                }
            }
        }
    }

    #[test]
    fn loop_power_generator() {
        let mut mu = BTreeMap::new();
        mu.insert("b".to_string(), 2u64);
        let cfg = BrauerConfiguration::new(
            vec!["a".into(), "b".into()],
            vec![vec!["a".into(), "a".into(), "b".into()]],
            mu,
        )
        .unwrap();
        let gens = ideal_generators(&cfg).unwrap();
        assert!(gens
            .iter()
            .any(|g| matches!(g, IdealGenerator::LoopPower { exponent: 3, .. })));
    }

    #[test]
    fn dimension_of_worked_configuration() {
        assert_eq!(dimension(&config6()).unwrap(), 12);
    }

    #[test]
    fn dimension_of_shared_digon_pair() {
        // Two 2-polygons over {0,1}: 2(2) + 2(1) + 2(1) = 8.
        let cfg = BrauerConfiguration::binary(&["01", "01"]).unwrap();
        assert_eq!(dimension(&cfg).unwrap(), 8);
        assert_eq!(enumerate_basis(&cfg).unwrap().len(), 8);
    }

    #[test]
    fn dimension_of_necklaces() {
        for r in 1..=3u64 {
            let n = 2 * r + 1;
            let cfg = necklace(r);
            assert_eq!(dimension(&cfg).unwrap(), 2 * n + n * n * (n - 1));
        }
    }

    #[test]
    fn center_dimension_of_worked_configuration() {
        assert_eq!(center_dimension(&config6()).unwrap(), 4);
    }

    #[test]
    fn center_dimension_of_two_cluster() {
        let cfg = phi2();
        let (q, _) = build_quiver(&cfg).unwrap();
        assert_eq!(q.loop_count(), 6);
        assert_eq!(
            center_dimension(&cfg).unwrap(),
            1 + 2 + 3 - 2 + q.loop_count() as u64
        );
    }

    #[test]
    fn center_dimension_loopless_square_case() {
        // No loops, equal polygon and vertex counts, multiplicity one:
        // the formula collapses to 1 + |Gamma_0|.
        let cfg = necklace(1);
        assert_eq!(center_dimension(&cfg).unwrap(), 1 + 3);
    }

    #[test]
    fn center_dimension_requires_connected() {
        let cfg = BrauerConfiguration::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                vec!["a".into(), "b".into(), "a".into(), "b".into()],
                vec!["c".into(), "d".into(), "c".into(), "d".into()],
            ],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(center_dimension(&cfg), Err(AlgebraError::Disconnected));
    }

    #[test]
    fn grading() {
        assert_eq!(length_grading(&config6()), None);
        for r in 1..=3u64 {
            assert_eq!(length_grading(&necklace(r)), Some(2 * r + 1));
        }
        let uniform = BrauerConfiguration::binary(&["01", "10"]).unwrap();
        assert_eq!(length_grading(&uniform), Some(2));
    }

    #[test]
    fn basis_of_worked_configuration() {
        let basis = enumerate_basis(&config6()).unwrap();
        assert_eq!(basis.len(), 12);
        let idempotents = basis
            .iter()
            .filter(|b| matches!(b, BasisElement::Idempotent { .. }))
            .count();
        let arrows_len1 = basis
            .iter()
            .filter(|b| matches!(b, BasisElement::Path { arrows } if arrows.len() == 1))
            .count();
        let paths_len2 = basis
            .iter()
            .filter(|b| matches!(b, BasisElement::Path { arrows } if arrows.len() == 2))
            .count();
        let full = basis
            .iter()
            .filter(|b| matches!(b, BasisElement::FullCycle { .. }))
            .count();
        assert_eq!((idempotents, arrows_len1, paths_len2, full), (2, 5, 3, 2));
    }

    #[test]
    fn basis_count_matches_dimension_on_corpus() {
        let mut mu = BTreeMap::new();
        mu.insert("b".to_string(), 3u64);
        let with_mu = BrauerConfiguration::new(
            vec!["a".into(), "b".into()],
            vec![vec!["a".into(), "a".into(), "b".into()]],
            mu,
        )
        .unwrap();
        for cfg in [config6(), phi2(), necklace(1), necklace(2), with_mu] {
            assert_eq!(
                enumerate_basis(&cfg).unwrap().len() as u64,
                dimension(&cfg).unwrap()
            );
        }
    }

    #[test]
    fn arrow_count_is_valency_sum() {
        for cfg in [config6(), phi2(), necklace(2)] {
            let (q, _) = build_quiver(&cfg).unwrap();
            let total: usize = cfg
                .vertices()
                .iter()
                .map(|v| cfg.valency(v).unwrap())
                .sum();
            assert_eq!(q.arrows.len(), total);
        }
    }

    #[test]
    fn dot_export_is_stable() {
        let (q, _) = build_quiver(&config6()).unwrap();
        let dot = quiver_dot(&q);
        assert_eq!(dot, quiver_dot(&q));
        assert!(dot.starts_with("digraph quiver {"));
        assert!(dot.contains("n0 [label=\"011\"];"));
        assert!(dot.contains("n0 -> n1 [label=\"a0_1\"];"));
        assert!(dot.contains("n0 -> n0 [label=\"l1_3\"];"));
    }

    #[test]
    fn summary_collects_everything() {
        let s = summary(&config6()).unwrap();
        assert_eq!(s.dim, 12);
        assert_eq!(s.center_dim, Some(4));
        assert_eq!(s.graded, None);
        assert_eq!((s.node_count, s.arrow_count, s.loop_count), (2, 5, 1));
    }
}
