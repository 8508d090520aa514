//! Numerical semigroups and the paired linear systems read off from
//! configuration messages.
//!
//! The Frobenius number is computed by the residue-table method: a
//! shortest-path over residue classes modulo the least generator. The
//! plain reachability array stays available as an independent checker in
//! the tests. Denumerants use one coefficient-convolution pass per coin
//! with exact big-integer counts.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use num_bigint::BigUint;

use crate::config::{BrauerConfiguration, ConfigError};

/// Errors raised by the diophantine operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiophError {
    /// Generator and coin lists must be nonempty.
    EmptyGenerators,
    /// Generators and coins must be positive.
    ZeroGenerator,
    /// Gap enumeration needs coprime generators.
    NotCoprime,
    /// The reversal map is only defined for coefficient lists `1..=m`.
    CoefficientsNotConsecutive,
    /// The tuple does not solve the stated problem.
    InvalidSolution,
    /// Message bit strings must consist of 0/1 entries.
    MessageNotBinary,
    /// Message length must be a positive multiple of four bits.
    MessageLength(usize),
    /// Underlying configuration rebuild failed.
    Config(ConfigError),
}

impl fmt::Display for DiophError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiophError::EmptyGenerators => write!(f, "no generators given"),
            DiophError::ZeroGenerator => write!(f, "generators must be positive"),
            DiophError::NotCoprime => write!(f, "generators have gcd > 1"),
            DiophError::CoefficientsNotConsecutive => {
                write!(f, "coefficients must be 1, 2, ..., m")
            }
            DiophError::InvalidSolution => write!(f, "tuple does not solve the problem"),
            DiophError::MessageNotBinary => write!(f, "message entries must be bits"),
            DiophError::MessageLength(n) => {
                write!(f, "message length {n} is not a positive multiple of 4")
            }
            DiophError::Config(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DiophError {}

impl From<ConfigError> for DiophError {
    fn from(e: ConfigError) -> Self {
        DiophError::Config(e)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The Frobenius number of a generating set: the largest integer outside
/// the monoid, `Infinite` when the gcd exceeds 1, and `-1` when 1 is a
/// generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frobenius {
    Finite(i64),
    Infinite,
}

impl fmt::Display for Frobenius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Frobenius::Finite(n) => write!(f, "{n}"),
            Frobenius::Infinite => write!(f, "infinity"),
        }
    }
}

/// A numerical monoid `<n_1, ..., n_k>`; generators are normalised to a
/// sorted deduplicated list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn new(gens: &[u64]) -> Result<Self, DiophError> {
        if gens.is_empty() {
            return Err(DiophError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(DiophError::ZeroGenerator);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        Ok(NumericalSemigroup { gens })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn gcd(&self) -> u64 {
        self.gens.iter().copied().fold(0, gcd)
    }

    /// True iff the generators are coprime, i.e. the complement in `N` is
    /// finite.
    pub fn is_numerical_semigroup(&self) -> bool {
        self.gcd() == 1
    }

    /// Frobenius number via the residue table modulo the least generator:
    /// the shortest reachable value in each residue class, maximised.
    pub fn frobenius(&self) -> Frobenius {
        if self.gcd() != 1 {
            return Frobenius::Infinite;
        }
        let m = self.gens[0];
        if m == 1 {
            return Frobenius::Finite(-1);
        }
        let m_us = m as usize;
        let mut dist = alloc::vec![u64::MAX; m_us];
        dist[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for &g in &self.gens[1..] {
                let nd = d + g;
                let nr = ((r as u64 + g) % m) as usize;
                if nd < dist[nr] {
                    dist[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        let max = *dist.iter().max().expect("nonempty table");
        Frobenius::Finite(max as i64 - m as i64)
    }

    /// Boolean reachability array: `table[i]` is true iff `i` is
    /// representable. The independent desk oracle behind `gaps`.
    pub fn reachability(&self, bound: usize) -> Vec<bool> {
        let mut reach = alloc::vec![false; bound + 1];
        reach[0] = true;
        for i in 1..=bound {
            for &g in &self.gens {
                let g = g as usize;
                if g <= i && reach[i - g] {
                    reach[i] = true;
                    break;
                }
            }
        }
        reach
    }

    pub fn representable(&self, n: u64) -> bool {
        self.reachability(n as usize)[n as usize]
    }

    /// All positive non-representable integers, ascending. Errors when the
    /// complement is infinite.
    pub fn gaps(&self) -> Result<Vec<u64>, DiophError> {
        match self.frobenius() {
            Frobenius::Infinite => Err(DiophError::NotCoprime),
            Frobenius::Finite(f) if f < 1 => Ok(Vec::new()),
            Frobenius::Finite(f) => {
                let reach = self.reachability(f as usize);
                Ok((1..=f as u64).filter(|&i| !reach[i as usize]).collect())
            }
        }
    }

    /// The minimal generating set: generators not representable by the
    /// remaining ones.
    pub fn irreducibles(&self) -> Vec<u64> {
        self.gens
            .iter()
            .copied()
            .filter(|&g| {
                let others: Vec<u64> = self.gens.iter().copied().filter(|&h| h != g).collect();
                match NumericalSemigroup::new(&others) {
                    Ok(sub) => !sub.representable(g),
                    Err(_) => true,
                }
            })
            .collect()
    }
}

/// Number of nonnegative integer solutions of `sum coins_i x_i = target`,
/// by iterated coefficient convolution (one pass per coin).
pub fn denumerant(coins: &[u64], target: u64) -> Result<BigUint, DiophError> {
    if coins.is_empty() {
        return Err(DiophError::EmptyGenerators);
    }
    if coins.contains(&0) {
        return Err(DiophError::ZeroGenerator);
    }
    let b = target as usize;
    let mut counts = alloc::vec![BigUint::ZERO; b + 1];
    counts[0] = BigUint::from(1u32);
    for &c in coins {
        let c = c as usize;
        for i in c..=b {
            let prev = counts[i - c].clone();
            counts[i] += prev;
        }
    }
    Ok(counts.pop().expect("nonempty table"))
}

/// The paired system: `sum lambda_i = n1`, `sum k_i lambda_i = n2`, with a
/// uniform per-variable lower bound of 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DioProblem {
    pub n1: u64,
    pub n2: u64,
    pub k: Vec<u64>,
    pub lower_bound: u64,
}

/// A solution tuple of a [`DioProblem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DioSolution {
    pub lambdas: Vec<u64>,
}

impl fmt::Display for DioSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.lambdas.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

enum SolveMode<'a> {
    All(&'a mut Vec<DioSolution>),
    First(&'a mut Option<DioSolution>),
    Count(&'a mut u128),
}

impl DioProblem {
    pub fn new(n1: u64, n2: u64, k: Vec<u64>, lower_bound: u64) -> Self {
        DioProblem { n1, n2, k, lower_bound }
    }

    pub fn is_solution(&self, sol: &DioSolution) -> bool {
        sol.lambdas.len() == self.k.len()
            && sol.lambdas.iter().all(|&l| l >= self.lower_bound)
            && sol.lambdas.iter().sum::<u64>() == self.n1
            && sol
                .lambdas
                .iter()
                .zip(&self.k)
                .map(|(&l, &k)| l as u128 * k as u128)
                .sum::<u128>()
                == self.n2 as u128
    }

    fn search(&self, mode: &mut SolveMode<'_>) {
        let m = self.k.len();
        if m == 0 {
            return;
        }
        let mut lambdas = alloc::vec![0u64; m];
        self.dfs(0, self.n1 as i128, self.n2 as i128, &mut lambdas, mode);
    }

    fn dfs(
        &self,
        idx: usize,
        rem_count: i128,
        rem_weight: i128,
        lambdas: &mut Vec<u64>,
        mode: &mut SolveMode<'_>,
    ) -> bool {
        let m = self.k.len();
        if idx == m {
            if rem_count == 0 && rem_weight == 0 {
                match mode {
                    SolveMode::All(out) => out.push(DioSolution { lambdas: lambdas.clone() }),
                    SolveMode::First(out) => {
                        **out = Some(DioSolution { lambdas: lambdas.clone() });
                        return true;
                    }
                    SolveMode::Count(c) => **c += 1,
                }
            }
            return false;
        }
        let lb = self.lower_bound as i128;
        let rest = (m - idx - 1) as i128;
        let hi = rem_count - lb * rest;
        if hi < lb {
            return false;
        }
        let k_i = self.k[idx] as i128;
        let rest_ks = &self.k[idx + 1..];
        let min_k = rest_ks.iter().min().copied().unwrap_or(0) as i128;
        let max_k = rest_ks.iter().max().copied().unwrap_or(0) as i128;
        let sum_k: i128 = rest_ks.iter().map(|&k| k as i128).sum();
        for lam in lb..=hi {
            let w = rem_weight - k_i * lam;
            if w < 0 {
                break;
            }
            let c = rem_count - lam;
            // Remaining variables contribute at least lb each plus the
            // slack routed through the cheapest (resp. dearest) coefficient.
            let slack = c - lb * rest;
            let min_w = lb * sum_k + slack * min_k;
            let max_w = lb * sum_k + slack * max_k;
            if rest > 0 && (w < min_w || w > max_w) {
                continue;
            }
            if rest == 0 && (c != 0 || w != 0) {
                continue;
            }
            lambdas[idx] = lam as u64;
            if self.dfs(idx + 1, c, w, lambdas, mode) {
                return true;
            }
        }
        lambdas[idx] = 0;
        false
    }

    /// Every solution in lexicographic order.
    pub fn solve(&self) -> Vec<DioSolution> {
        let mut out = Vec::new();
        self.search(&mut SolveMode::All(&mut out));
        out
    }

    /// The lexicographically least solution, if any.
    pub fn solve_first(&self) -> Option<DioSolution> {
        let mut out = None;
        self.search(&mut SolveMode::First(&mut out));
        out
    }

    pub fn count_solutions(&self) -> u128 {
        let mut c = 0u128;
        self.search(&mut SolveMode::Count(&mut c));
        c
    }
}

/// Reversal map for consecutive coefficients: a solution of
/// `D(n1, n2, {1..m})` read backwards solves `D(n1, (m+1) n1 - n2, {1..m})`.
pub fn reverse_solution(
    problem: &DioProblem,
    sol: &DioSolution,
) -> Result<(DioProblem, DioSolution), DiophError> {
    let m = problem.k.len() as u64;
    if problem.k.iter().zip(1..=m).any(|(&k, i)| k != i) {
        return Err(DiophError::CoefficientsNotConsecutive);
    }
    if !problem.is_solution(sol) {
        return Err(DiophError::InvalidSolution);
    }
    let reversed = DioProblem {
        n1: problem.n1,
        n2: (m + 1) * problem.n1 - problem.n2,
        k: problem.k.clone(),
        lower_bound: problem.lower_bound,
    };
    let mut lambdas = sol.lambdas.clone();
    lambdas.reverse();
    let rsol = DioSolution { lambdas };
    debug_assert!(reversed.is_solution(&rsol));
    Ok((reversed, rsol))
}

/// Solvability window of `D(n1, n2, {1..m})` with unit lower bounds:
/// solutions exist iff `n1 + m(m-1)/2 <= n2 <= m n1 - m(m-1)/2`.
/// Empty (`None`) when `m = 0` or `n1 < m`.
pub fn feasibility_window(n1: u64, m: u64) -> Option<(u64, u64)> {
    if m == 0 || n1 < m {
        return None;
    }
    let t = m * (m - 1) / 2;
    Some((n1 + t, m * n1 - t))
}

/// The variant upper bound `m n1 - m(m+1)/2`, kept for side-by-side
/// reporting where it differs from the solvable window's `m n1 - m(m-1)/2`
/// (it fails already at `n1 = m = 2`, where the window is the point 3).
pub fn feasibility_upper_variant(n1: u64, m: u64) -> i64 {
    m as i64 * n1 as i64 - (m * (m + 1) / 2) as i64
}

/// A class of hex symbols sharing one valency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValencyClass {
    pub valency: u64,
    /// Symbols in first-occurrence order.
    pub symbols: String,
    pub size: u64,
}

/// The grouping of a hex message by symbol valency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValencyProfile {
    /// Classes in descending valency order.
    pub classes: Vec<ValencyClass>,
    pub total_nibbles: u64,
}

impl fmt::Display for ValencyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.classes {
            write!(f, "({})^{}", c.symbols, c.valency)?;
        }
        Ok(())
    }
}

const HEX: [char; 16] = [
    '0', '1', '2', '3', '4', '5', '6', '7', '8', '9', 'A', 'B', 'C', 'D', 'E', 'F',
];

/// Groups a bit message into hex nibbles (most significant bit first).
pub fn bits_to_nibbles(bits: &[u8]) -> Result<Vec<char>, DiophError> {
    if bits.is_empty() || !bits.len().is_multiple_of(4) {
        return Err(DiophError::MessageLength(bits.len()));
    }
    if bits.iter().any(|&b| b > 1) {
        return Err(DiophError::MessageNotBinary);
    }
    Ok(bits
        .chunks(4)
        .map(|c| HEX[((c[0] << 3) | (c[1] << 2) | (c[2] << 1) | c[3]) as usize])
        .collect())
}

/// Reads a bit message as hex nibbles, groups the symbols by valency, and
/// emits the induced paired system together with its class-size solution:
/// `n1` distinct symbols, `n2` nibbles, coefficients the distinct
/// valencies (descending), and `lambda` the class sizes.
pub fn message_to_diophantine(
    bits: &[u8],
) -> Result<(ValencyProfile, DioProblem, DioSolution), DiophError> {
    let nibbles = bits_to_nibbles(bits)?;
    let mut counts: BTreeMap<char, u64> = BTreeMap::new();
    let mut order: Vec<char> = Vec::new();
    for &c in &nibbles {
        let e = counts.entry(c).or_insert(0);
        if *e == 0 {
            order.push(c);
        }
        *e += 1;
    }
    let mut valencies: Vec<u64> = counts.values().copied().collect();
    valencies.sort_unstable_by(|a, b| b.cmp(a));
    valencies.dedup();
    let mut classes = Vec::new();
    for &v in &valencies {
        let symbols: String = order.iter().copied().filter(|c| counts[c] == v).collect();
        let size = symbols.chars().count() as u64;
        classes.push(ValencyClass { valency: v, symbols, size });
    }
    let profile = ValencyProfile { classes, total_nibbles: nibbles.len() as u64 };
    let problem = DioProblem {
        n1: profile.classes.iter().map(|c| c.size).sum(),
        n2: profile.total_nibbles,
        k: profile.classes.iter().map(|c| c.valency).collect(),
        lower_bound: 1,
    };
    let solution = DioSolution {
        lambdas: profile.classes.iter().map(|c| c.size).collect(),
    };
    debug_assert!(problem.is_solution(&solution));
    Ok((profile, problem, solution))
}

/// The transformation to hex: polygons of a binary configuration are
/// re-read as multisets of nibbles, giving a configuration on (at most)
/// the sixteen hex symbols.
pub fn hex_transform(config: &BrauerConfiguration) -> Result<BrauerConfiguration, DiophError> {
    let mut polygons: Vec<Vec<String>> = Vec::new();
    for p in config.polygons() {
        let bits: Result<Vec<u8>, DiophError> = p
            .letters()
            .iter()
            .map(|l| match l.as_str() {
                "0" => Ok(0u8),
                "1" => Ok(1u8),
                _ => Err(DiophError::MessageNotBinary),
            })
            .collect();
        let nibbles = bits_to_nibbles(&bits?)?;
        polygons.push(nibbles.into_iter().map(String::from).collect());
    }
    let vertices: Vec<String> = HEX
        .iter()
        .filter(|h| polygons.iter().any(|p| p.iter().any(|l| l == &String::from(**h))))
        .map(|&c| String::from(c))
        .collect();
    Ok(BrauerConfiguration::new(vertices, polygons, BTreeMap::new())?)
}

/// The closed-form message-length value `l^2 2^{n-2}` for an `l`-word
/// seed over a degree-`n` field; reported next to actual message lengths,
/// which it does not match.
pub fn message_length_formula(l: u64, n: u32) -> u128 {
    (l as u128) * (l as u128) * (1u128 << (n.saturating_sub(2)))
}
