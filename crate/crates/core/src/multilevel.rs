//! Pivot vectors, lexicodes, lifting into echelon form, and subspace codes
//! assembled level by level from shaped minimum-rank spaces.
//!
//! A level is a pivot vector `v` of weight `k` together with a `δ`-space `S`
//! of matrices shaped like the free entries of an echelon matrix with pivots
//! at `v`. The code is the union over levels of `{lift(v, M) : M ∈ S}`; its
//! minimum injection distance is at least `δ` when pivot vectors are at
//! Hamming distance `>= 2δ`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::{construct_auto, Method};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::gf::{Elem, Field};
use crate::linalg::{subspace_intersection_dim, Matrix, MatrixSpace};
use crate::oracle::{min_rank, verify_delta_space, VerifyMode, EXHAUSTIVE_CAP};
use crate::shapes::FerrersDiagram;

/// Binary vector of length at most 64; position 1 is the leftmost.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PivotVector {
    n: u8,
    /// Position `p` (1-based) is bit `n - p`, so integer order is
    /// lexicographic order.
    bits: u64,
}

impl PivotVector {
    pub fn from_bits(n: usize, bits: u64) -> Result<PivotVector> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidPivot(format!("length {n} is not in 1..=64")));
        }
        if n < 64 && bits >> n != 0 {
            return Err(Error::InvalidPivot(format!("{bits:#b} has more than {n} bits")));
        }
        Ok(PivotVector { n: n as u8, bits })
    }

    /// Ones at the given 1-based positions.
    pub fn from_positions(n: usize, positions: &[usize]) -> Result<PivotVector> {
        let mut bits = 0u64;
        for &p in positions {
            if p == 0 || p > n {
                return Err(Error::InvalidPivot(format!("position {p} outside 1..={n}")));
            }
            bits |= 1 << (n - p);
        }
        PivotVector::from_bits(n, bits)
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// 1-based positions of the ones, increasing.
    pub fn positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.bit(p)).collect()
    }

    /// Bit at 1-based position `p`.
    pub fn bit(&self, p: usize) -> bool {
        self.bits >> (self.len() - p) & 1 == 1
    }

    pub fn hamming(&self, other: &PivotVector) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "pivot vectors of lengths {} and {}",
                self.n, other.n
            )));
        }
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }
}

impl fmt::Display for PivotVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 1..=self.len() {
            f.write_str(if self.bit(p) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PivotVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PivotVector({self})")
    }
}

impl FromStr for PivotVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<PivotVector> {
        let s = s.trim();
        let mut bits = 0u64;
        for ch in s.chars() {
            bits = bits << 1
                | match ch {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::InvalidPivot(format!("{s:?} is not a 0/1 string"))),
                };
        }
        PivotVector::from_bits(s.len(), bits)
    }
}

impl Serialize for PivotVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PivotVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Smallest pairwise Hamming distance; `None` for fewer than two vectors.
pub fn min_hamming_distance(vectors: &[PivotVector]) -> Result<Option<usize>> {
    let mut best = None;
    for (a, u) in vectors.iter().enumerate() {
        for v in &vectors[a + 1..] {
            let d = u.hamming(v)?;
            best = Some(best.map_or(d, |b: usize| b.min(d)));
        }
    }
    Ok(best)
}

/// Constant-weight binary code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotCode {
    n: usize,
    k: usize,
    vectors: Vec<PivotVector>,
    min_distance: Option<usize>,
}

impl PivotCode {
    pub fn new(vectors: Vec<PivotVector>) -> Result<PivotCode> {
        let first = vectors
            .first()
            .ok_or_else(|| Error::InvalidPivot("empty pivot code".into()))?;
        let (n, k) = (first.len(), first.weight());
        if k == 0 {
            return Err(Error::InvalidPivot("weight-0 vector".into()));
        }
        for v in &vectors {
            if v.len() != n || v.weight() != k {
                return Err(Error::InvalidPivot(format!(
                    "{v} differs in length or weight from {first}"
                )));
            }
        }
        let min_distance = min_hamming_distance(&vectors)?;
        if min_distance == Some(0) {
            return Err(Error::InvalidPivot("repeated vector".into()));
        }
        Ok(PivotCode {
            n,
            k,
            vectors,
            min_distance,
        })
    }

    /// Newline-separated 0/1 strings; blank lines and `#` comments ignored.
    pub fn parse(text: &str) -> Result<PivotCode> {
        let vectors = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        PivotCode::new(vectors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vectors(&self) -> &[PivotVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.min_distance
    }
}

/// Greedy code: one pass over all weight-`k` vectors of length `n` in
/// decreasing lexicographic order, starting from `{seed}` and keeping each
/// vector at distance `>= d` from everything kept so far.
pub fn lexicode(n: usize, k: usize, d: usize, seed: PivotVector) -> Result<PivotCode> {
    if seed.len() != n || seed.weight() != k || k == 0 {
        return Err(Error::InvalidPivot(format!(
            "seed {seed} must have length {n} and weight {k} >= 1"
        )));
    }
    if d == 0 {
        return Err(Error::params("distance must be at least 1"));
    }
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut kept = vec![seed.bits];
    // complements of weight-(n-k) vectors in increasing order
    let zeros = n - k;
    let mut y: u64 = if zeros == 0 { 0 } else { (1u64 << zeros) - 1 };
    loop {
        let x = !y & mask;
        if kept.iter().all(|&c| ((c ^ x).count_ones() as usize) >= d) {
            kept.push(x);
        }
        if zeros == 0 {
            break;
        }
        // next integer with the same popcount
        let c = y & y.wrapping_neg();
        let r = y.wrapping_add(c);
        if r == 0 || r & !mask != 0 {
            break;
        }
        y = (((r ^ y) >> 2) / c) | r;
        if y & !mask != 0 {
            break;
        }
    }
    PivotCode::new(
        kept.into_iter()
            .map(|b| PivotVector::from_bits(n, b))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Echelon matrix with pivot vector `v` and the entries of `m` in its free
/// positions: `N_{i,j} = M_{i, j - n_j}` with `n_j` the number of pivots at
/// or before column `j`.
pub fn lift(v: &PivotVector, m: &Matrix) -> Result<Matrix> {
    let (n, k) = (v.len(), v.weight());
    if (m.nrows(), m.ncols()) != (k, n - k) {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for a {k}x{} diagram",
            m.nrows(),
            m.ncols(),
            n - k
        )));
    }
    let diagram = FerrersDiagram::from_pivot(v);
    if !m.has_shape(&diagram) {
        return Err(Error::ShapeViolation(format!(
            "support leaves the diagram {diagram} of {v}"
        )));
    }
    let mut out = Matrix::zeros(m.field().clone(), k, n);
    let mut seen = 0;
    for j in 1..=n {
        if v.bit(j) {
            out.set(seen, j - 1, 1);
            seen += 1;
        } else {
            for i in 0..k {
                out.set(i, j - 1, m.get(i, j - seen - 1));
            }
        }
    }
    Ok(out)
}

/// Pivot vector of the row space of a full-rank matrix.
pub fn pivot_of(x: &Matrix) -> Result<PivotVector> {
    let (_, pivots) = x.rref();
    if pivots.len() != x.nrows() {
        return Err(Error::RankDeficient {
            expected: x.nrows(),
            found: pivots.len(),
        });
    }
    let positions: Vec<usize> = pivots.iter().map(|p| p + 1).collect();
    PivotVector::from_positions(x.ncols(), &positions)
}

/// `k - dim(X ∩ Y)` for the row spaces of two full-rank `k x n` matrices.
pub fn injection_distance(x: &Matrix, y: &Matrix) -> Result<usize> {
    Ok(x.nrows() - subspace_intersection_dim(x, y)?)
}

/// Source of a level's space.
#[derive(Clone, Debug)]
pub enum LevelSpec {
    /// Best available construction on the level's diagram.
    Auto,
    /// Given space; validated for shape and minimum rank.
    Space(MatrixSpace),
}

#[derive(Clone, Debug)]
pub struct Level {
    pub pivot: PivotVector,
    pub diagram: FerrersDiagram,
    pub space: MatrixSpace,
    pub tdelta: usize,
    /// Construction used, or `None` for a provided space.
    pub method: Option<Method>,
}

impl Level {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `q^dim`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.space.field().q()).pow(self.dim() as u32)
    }

    /// The codeword whose coefficients are the base-`q` digits of `index`.
    pub fn codeword(&self, index: &BigUint) -> Result<Matrix> {
        let q = self.space.field().q();
        let digits = index.to_radix_le(q);
        if digits.len() > self.dim() && digits.iter().skip(self.dim()).any(|&d| d != 0) {
            return Err(Error::params(format!("codeword index {index} out of range")));
        }
        let coeffs: Vec<Elem> = (0..self.dim())
            .map(|i| digits.get(i).copied().unwrap_or(0) as Elem)
            .collect();
        lift(&self.pivot, &self.space.combination(&coeffs))
    }

    fn random_codeword(&self, rng: &mut ChaCha8Rng) -> Matrix {
        let q = self.space.field().q();
        let coeffs: Vec<Elem> = (0..self.dim()).map(|_| rng.gen_range(0..q)).collect();
        lift(&self.pivot, &self.space.combination(&coeffs)).expect("level spaces are shaped")
    }
}

/// Union of lifted level spaces; levels above `2^20` elements are never
/// materialized.
#[derive(Clone, Debug)]
pub struct SubspaceCode {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub field: Field,
    pub levels: Vec<Level>,
}

/// Spaces of at most this many elements are rank-checked exhaustively before
/// assembly; larger ones are sampled.
pub const LEVEL_EXHAUSTIVE_CHECK: u128 = 1 << 16;
pub const LEVEL_SAMPLE_CHECK: u64 = 10_000;

/// Assembles the code; pivot vectors must be at Hamming distance `>= 2δ`.
pub fn multilevel_build(code: &PivotCode, delta: usize, field: &Field, specs: &[LevelSpec]) -> Result<SubspaceCode> {
    if delta < 1 {
        return Err(Error::params("delta must be at least 1"));
    }
    if specs.len() != code.len() {
        return Err(Error::params(format!(
            "{} level specifications for {} pivot vectors",
            specs.len(),
            code.len()
        )));
    }
    if let Some(d) = code.min_distance() {
        if d < 2 * delta {
            return Err(Error::PivotDistance {
                found: d,
                required: 2 * delta,
            });
        }
    }
    let mut levels = Vec::with_capacity(code.len());
    for (v, spec) in code.vectors().iter().zip(specs) {
        let diagram = FerrersDiagram::from_pivot(v);
        let tdelta = diagram.tdelta(delta)?.value;
        let level = match spec {
            LevelSpec::Auto => {
                let r = construct_auto(&diagram, delta, field)?;
                Level {
                    pivot: *v,
                    diagram,
                    space: r.space,
                    tdelta,
                    method: Some(r.method),
                }
            }
            LevelSpec::Space(space) => {
                validate_level(v, &diagram, space, delta, field)?;
                Level {
                    pivot: *v,
                    diagram,
                    space: space.clone(),
                    tdelta,
                    method: None,
                }
            }
        };
        levels.push(level);
    }
    Ok(SubspaceCode {
        n: code.n(),
        k: code.k(),
        delta,
        field: field.clone(),
        levels,
    })
}

fn validate_level(
    v: &PivotVector,
    diagram: &FerrersDiagram,
    space: &MatrixSpace,
    delta: usize,
    field: &Field,
) -> Result<()> {
    let invalid = |reason: String| Error::InvalidLevel {
        pivot: v.to_string(),
        delta,
        reason,
    };
    if space.field() != field {
        return Err(invalid(format!("space is over {}, code over {field}", space.field())));
    }
    if !space.has_shape(diagram) {
        return Err(invalid(format!("support leaves the diagram {diagram}")));
    }
    let mode = VerifyMode::auto(space, LEVEL_EXHAUSTIVE_CHECK, LEVEL_SAMPLE_CHECK, 0);
    let report = verify_delta_space(space, delta, mode)?;
    if !report.ok {
        let rank = report.witness.map_or(0, |w| w.rank());
        return Err(invalid(format!("contains an element of rank {rank}")));
    }
    Ok(())
}

/// Exact pairwise distance refuses more pairs than this.
pub const EXACT_PAIR_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceStrategy {
    /// Every pair of codewords.
    Exact,
    /// Per-level minimum rank plus half the cross-level Hamming distance.
    Structured,
    /// Observed minimum over random pairs; not a certificate.
    Sampled { pairs: u64, seed: u64, cross_level: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    /// `None` when no pair was examined.
    pub value: Option<usize>,
    /// `value` is a proven lower bound (or the exact minimum).
    pub certified: bool,
    pub pairs: u128,
}

impl SubspaceCode {
    pub fn cardinality(&self) -> BigUint {
        self.levels.iter().map(Level::size).sum()
    }

    /// Codeword by global index; levels are concatenated in order.
    pub fn codeword(&self, index: &BigUint) -> Result<Matrix> {
        let mut rest = index.clone();
        for level in &self.levels {
            let size = level.size();
            if rest < size {
                return level.codeword(&rest);
            }
            rest -= size;
        }
        Err(Error::params(format!("codeword index {index} out of range")))
    }

    /// All codewords, refusing codes larger than `cap`.
    pub fn materialize(&self, cap: u128) -> Result<Vec<Matrix>> {
        let total = self.cardinality();
        let size = u128::try_from(&total).unwrap_or(u128::MAX);
        if size > cap {
            return Err(Error::cap("code cardinality", size, cap));
        }
        let mut out = Vec::with_capacity(size as usize);
        for level in &self.levels {
            let n = u128::try_from(&level.size()).expect("bounded by the cap");
            for i in 0..n {
                out.push(level.codeword(&BigUint::from(i))?);
            }
        }
        Ok(out)
    }

    pub fn min_distance(&self, strategy: DistanceStrategy) -> Result<DistanceReport> {
        self.min_distance_with(strategy, Exec::default())
    }

    pub fn min_distance_with(&self, strategy: DistanceStrategy, exec: Exec) -> Result<DistanceReport> {
        match strategy {
            DistanceStrategy::Exact => self.exact_distance(exec),
            DistanceStrategy::Structured => self.structured_distance(exec),
            DistanceStrategy::Sampled {
                pairs,
                seed,
                cross_level,
            } => self.sampled_distance(pairs, seed, cross_level, exec),
        }
    }

    fn exact_distance(&self, exec: Exec) -> Result<DistanceReport> {
        let total = u128::try_from(&self.cardinality()).unwrap_or(u128::MAX);
        let pairs = total.saturating_mul(total.saturating_sub(1)) / 2;
        if pairs > EXACT_PAIR_CAP {
            return Err(Error::cap("codeword pairs", pairs, EXACT_PAIR_CAP));
        }
        let words = self.materialize(EXACT_PAIR_CAP)?;
        let best = exec::map_reduce(
            exec,
            words.len(),
            usize::MAX,
            |a| {
                words[a + 1..]
                    .iter()
                    .map(|w| injection_distance(&words[a], w).expect("codewords have full rank"))
                    .min()
                    .unwrap_or(usize::MAX)
            },
            usize::min,
        );
        Ok(DistanceReport {
            value: (best != usize::MAX).then_some(best),
            certified: true,
            pairs,
        })
    }

    fn structured_distance(&self, exec: Exec) -> Result<DistanceReport> {
        let mut best: Option<usize> = None;
        let mut fold = |d: usize| best = Some(best.map_or(d, |b| b.min(d)));
        for level in &self.levels {
            if level.dim() == 0 {
                continue;
            }
            let exhaustive = level.space.size().is_some_and(|s| s <= EXHAUSTIVE_CAP);
            if exhaustive {
                if let Some(r) = min_rank(&level.space, exec)? {
                    fold(r);
                }
            } else {
                fold(self.delta);
            }
        }
        for (a, u) in self.levels.iter().enumerate() {
            for v in &self.levels[a + 1..] {
                fold(u.pivot.hamming(&v.pivot)?.div_ceil(2));
            }
        }
        Ok(DistanceReport {
            value: best,
            certified: true,
            pairs: 0,
        })
    }

    fn sampled_distance(&self, pairs: u64, seed: u64, cross_level: bool, exec: Exec) -> Result<DistanceReport> {
        if cross_level && self.levels.len() < 2 {
            return Err(Error::params("cross-level sampling needs two levels"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nl = self.levels.len();
        // (level, sub-seed) pairs drawn up front so results are order-free
        let draws: Vec<(usize, usize, u64)> = (0..pairs)
            .map(|_| {
                let a = rng.gen_range(0..nl);
                let b = if cross_level {
                    (a + rng.gen_range(1..nl)) % nl
                } else {
                    rng.gen_range(0..nl)
                };
                (a, b, rng.gen())
            })
            .collect();
        let best = exec::map_reduce(
            exec,
            draws.len(),
            usize::MAX,
            |i| {
                let (a, b, s) = draws[i];
                let mut r = ChaCha8Rng::seed_from_u64(s);
                let x = self.levels[a].random_codeword(&mut r);
                let y = self.levels[b].random_codeword(&mut r);
                if x == y {
                    return usize::MAX;
                }
                injection_distance(&x, &y).expect("codewords have full rank")
            },
            usize::min,
        );
        Ok(DistanceReport {
            value: (best != usize::MAX).then_some(best),
            certified: false,
            pairs: pairs as u128,
        })
    }

    pub fn summary(&self, certificate: Option<usize>) -> CodeSummary {
        CodeSummary {
            n: self.n,
            k: self.k,
            q: self.field.q(),
            levels: self
                .levels
                .iter()
                .map(|l| LevelSummary {
                    pivot: l.pivot,
                    dim: l.dim(),
                    tdelta: l.tdelta,
                    method: l.method.map_or_else(|| "provided".to_string(), |m| m.to_string()),
                })
                .collect(),
            cardinality: self.cardinality().to_string(),
            min_distance_certificate: certificate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub pivot: PivotVector,
    pub dim: usize,
    pub tdelta: usize,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub levels: Vec<LevelSummary>,
    /// Decimal string; may exceed 64 bits.
    pub cardinality: String,
    pub min_distance_certificate: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalityBounds {
    /// `p_{δ-1}(v) <= n - 2k + δ - 1`.
    pub d_prime: Vec<PivotVector>,
    /// `p_i(v) <= n - k - δ + 2i - 1` for `i = 1..=δ`.
    pub d_second: Vec<PivotVector>,
    pub lower: BigUint,
    pub upper: BigUint,
}

/// Cardinality bounds of the multilevel construction on `code`:
/// `lower = sum_{D'} q^{T_δ} + |D'' \ D'| q + |D \ D''|` and
/// `upper = sum_{D''} q^{T_δ} + |D \ D''|`.
pub fn multilevel_bound(code: &PivotCode, delta: usize, q: u64) -> Result<CardinalityBounds> {
    let (n, k) = (code.n(), code.k());
    if delta < 1 || delta > k {
        return Err(Error::params(format!("delta = {delta} is not in 1..={k}")));
    }
    if let Some(d) = code.min_distance() {
        if d < 2 * delta {
            return Err(Error::PivotDistance {
                found: d,
                required: 2 * delta,
            });
        }
    }
    let in_prime = |v: &PivotVector| delta == 1 || v.positions()[delta - 2] + 2 * k < n + delta;
    let in_second = |v: &PivotVector| {
        let p = v.positions();
        (1..=delta).all(|i| p[i - 1] + k + delta < n + 2 * i)
    };
    let pow = |v: &PivotVector| -> Result<BigUint> {
        let t = FerrersDiagram::from_pivot(v).tdelta(delta)?.value;
        Ok(BigUint::from(q).pow(t as u32))
    };
    let mut lower = BigUint::from(0u32);
    let mut upper = BigUint::from(0u32);
    let (mut d_prime, mut d_second) = (Vec::new(), Vec::new());
    for v in code.vectors() {
        let (p1, p2) = (in_prime(v), in_second(v));
        if p1 {
            d_prime.push(*v);
            lower += pow(v)?;
        } else if p2 {
            lower += q;
        } else {
            lower += 1u32;
        }
        if p2 {
            d_second.push(*v);
            upper += pow(v)?;
        } else {
            upper += 1u32;
        }
    }
    Ok(CardinalityBounds {
        d_prime,
        d_second,
        lower,
        upper,
    })
}

/// A row of the table of large codes: parameters and the cardinality
/// polynomial as `(coefficient, exponent)` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub terms: &'static [(u32, u32)],
}

impl TableRow {
    pub fn evaluate(&self, q: u64) -> BigUint {
        self.terms
            .iter()
            .map(|&(c, e)| BigUint::from(c) * BigUint::from(q).pow(e))
            .sum()
    }

    /// Polynomial in `q`, highest degree first.
    pub fn formula(&self) -> String {
        self.terms
            .iter()
            .map(|&(c, e)| {
                let mono = match e {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{e}"),
                };
                match (c, e) {
                    (_, 0) => c.to_string(),
                    (1, _) => mono,
                    _ => format!("{c}{mono}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub const TABLE: [TableRow; 5] = [
    TableRow {
        n: 10,
        k: 5,
        delta: 3,
        terms: &[(1, 15), (1, 6), (2, 2), (1, 1), (1, 0)],
    },
    TableRow {
        n: 11,
        k: 5,
        delta: 3,
        terms: &[(1, 18), (1, 9), (1, 6), (1, 4), (4, 3), (3, 2)],
    },
    TableRow {
        n: 14,
        k: 4,
        delta: 3,
        terms: &[
            (1, 20),
            (1, 14),
            (1, 10),
            (1, 9),
            (1, 8),
            (2, 6),
            (2, 5),
            (2, 4),
            (1, 3),
            (1, 2),
        ],
    },
    TableRow {
        n: 14,
        k: 5,
        delta: 4,
        terms: &[(1, 18), (1, 10), (1, 3), (1, 0)],
    },
    TableRow {
        n: 15,
        k: 6,
        delta: 5,
        terms: &[(1, 18), (1, 5), (1, 0)],
    },
];

/// Table rows evaluated at `q`.
pub fn table_formulas(q: u64) -> Vec<(TableRow, BigUint)> {
    TABLE.iter().map(|r| (r.clone(), r.evaluate(q))).collect()
}

/// The six pivot vectors of the flagship `(10, 5, 3)` code.
pub fn flagship_pivots() -> PivotCode {
    PivotCode::parse("1111100000\n1100011100\n0011011010\n1000110011\n0010101101\n0101000111\n")
        .expect("valid pivot code")
}
