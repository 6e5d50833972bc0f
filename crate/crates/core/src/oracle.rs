//! Brute-force certification: rank checks over whole spans, rank
//! distributions, and exhaustive maximum-dimension search on tiny shapes.
//!
//! Spans are enumerated one projective point at a time (first nonzero
//! coefficient equal to 1), since rank is invariant under nonzero scaling.
//! Work is cut into units by leading index and a prefix of the remaining
//! coefficients; units are visited in a fixed order and results are reduced
//! in unit order, so reports do not depend on the execution strategy.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::construct_auto;
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::gf::{Elem, Field};
use crate::linalg::{gf2_rank_bits, rank_in_place, Matrix, MatrixSpace};
use crate::shapes::{FerrersDiagram, Shape};

/// Largest span (`q^dim`) enumerated exhaustively.
pub const EXHAUSTIVE_CAP: u128 = 1 << 20;

/// Projective points per work unit, at most.
const UNIT_POINTS: u128 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every nonzero element; needs `q^dim <= 2^20`.
    Exhaustive,
    /// `count` uniform nonzero combinations drawn from a seeded stream.
    Sample { count: u64, seed: u64 },
}

impl VerifyMode {
    /// Exhaustive when the span has at most `limit` elements, else sampled.
    pub fn auto(space: &MatrixSpace, limit: u128, count: u64, seed: u64) -> VerifyMode {
        match space.size() {
            Some(s) if s <= limit => VerifyMode::Exhaustive,
            _ => VerifyMode::Sample { count, seed },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub witness: Option<Matrix>,
    /// Nonzero elements checked, up to and including the witness.
    pub checked: u64,
}

/// Every nonzero element has rank at least `delta`.
pub fn verify_delta_space(space: &MatrixSpace, delta: usize, mode: VerifyMode) -> Result<VerifyReport> {
    verify_delta_space_with(space, delta, mode, Exec::default())
}

pub fn verify_delta_space_with(
    space: &MatrixSpace,
    delta: usize,
    mode: VerifyMode,
    exec: Exec,
) -> Result<VerifyReport> {
    verify(space, mode, exec, |r| r >= delta)
}

/// Every element has rank at most `delta`.
pub fn verify_anticode(space: &MatrixSpace, delta: usize, mode: VerifyMode) -> Result<VerifyReport> {
    verify_anticode_with(space, delta, mode, Exec::default())
}

pub fn verify_anticode_with(space: &MatrixSpace, delta: usize, mode: VerifyMode, exec: Exec) -> Result<VerifyReport> {
    verify(space, mode, exec, |r| r <= delta)
}

/// Histogram rank -> count over all `q^dim` elements, zero included.
pub fn rank_distribution(space: &MatrixSpace) -> Result<BTreeMap<usize, u64>> {
    rank_distribution_with(space, Exec::default())
}

pub fn rank_distribution_with(space: &MatrixSpace, exec: Exec) -> Result<BTreeMap<usize, u64>> {
    exhaustive_size(space)?;
    let k = space.nrows();
    let hist = dispatch!(space, |en| {
        exec::map_reduce(
            exec,
            en.units.len(),
            vec![0u64; k + 1],
            |u| {
                let mut h = vec![0u64; k + 1];
                let _ = en.walk_unit(u, |rank, _| {
                    h[rank] += 1;
                    ControlFlow::<()>::Continue(())
                });
                h
            },
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
    });
    let scale = space.field().q() as u64 - 1;
    let mut out = BTreeMap::new();
    out.insert(0, 1);
    for (r, c) in hist.into_iter().enumerate() {
        if c > 0 {
            *out.entry(r).or_insert(0) += c * scale;
        }
    }
    Ok(out)
}

/// Smallest rank of a nonzero element; `None` for the zero space.
pub fn min_rank(space: &MatrixSpace, exec: Exec) -> Result<Option<usize>> {
    exhaustive_size(space)?;
    if space.dim() == 0 {
        return Ok(None);
    }
    let best = dispatch!(space, |en| {
        exec::map_reduce(
            exec,
            en.units.len(),
            usize::MAX,
            |u| {
                let mut m = usize::MAX;
                let _ = en.walk_unit(u, |rank, _| {
                    m = m.min(rank);
                    ControlFlow::<()>::Continue(())
                });
                m
            },
            usize::min,
        )
    });
    Ok(Some(best))
}

fn exhaustive_size(space: &MatrixSpace) -> Result<u128> {
    match space.size() {
        Some(s) if s <= EXHAUSTIVE_CAP => Ok(s),
        s => Err(Error::cap(
            "span size for exhaustive enumeration",
            s.unwrap_or(u128::MAX),
            EXHAUSTIVE_CAP,
        )),
    }
}

fn verify<P>(space: &MatrixSpace, mode: VerifyMode, exec: Exec, pred: P) -> Result<VerifyReport>
where
    P: Fn(usize) -> bool + Sync + Send,
{
    if space.dim() == 0 {
        return Ok(VerifyReport {
            ok: true,
            witness: None,
            checked: 0,
        });
    }
    match mode {
        VerifyMode::Exhaustive => {
            exhaustive_size(space)?;
            let scale = space.field().q() as u64 - 1;
            let found = dispatch!(space, |en| {
                exec::find_first(exec, en.units.len(), |u| {
                    let mut pos = 0u64;
                    match en.walk_unit(u, |rank, coeffs| {
                        pos += 1;
                        if pred(rank) {
                            ControlFlow::Continue(())
                        } else {
                            ControlFlow::Break(coeffs.to_vec())
                        }
                    }) {
                        ControlFlow::Break(c) => Some((u, pos, c)),
                        ControlFlow::Continue(()) => None,
                    }
                })
                .map(|(u, pos, c)| (en.points_before(u) + pos as u128, c))
            });
            Ok(match found {
                Some((points, coeffs)) => VerifyReport {
                    ok: false,
                    witness: Some(space.combination(&coeffs)),
                    checked: points as u64 * scale,
                },
                None => VerifyReport {
                    ok: true,
                    witness: None,
                    checked: (space.size().expect("capped") - 1) as u64,
                },
            })
        }
        VerifyMode::Sample { count, seed } => {
            let q = space.field().q();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let samples: Vec<Vec<Elem>> = (0..count)
                .map(|_| loop {
                    let c: Vec<Elem> = (0..space.dim()).map(|_| rng.gen_range(0..q)).collect();
                    if c.iter().any(|&x| x != 0) {
                        break c;
                    }
                })
                .collect();
            let found = exec::find_first(exec, samples.len(), |i| {
                let m = space.combination(&samples[i]);
                (!pred(m.rank())).then_some((i, m))
            });
            Ok(match found {
                Some((i, m)) => VerifyReport {
                    ok: false,
                    witness: Some(m),
                    checked: i as u64 + 1,
                },
                None => VerifyReport {
                    ok: true,
                    witness: None,
                    checked: count,
                },
            })
        }
    }
}

/// A matrix as a vector supporting addition and rank.
pub(crate) trait Vector: Clone + Send + Sync {
    fn zero(k: usize, m: usize) -> Self;
    fn from_matrix(mat: &Matrix) -> Self;
    fn set(&mut self, i: usize, j: usize, m: usize, v: Elem);
    /// `self += c * other`.
    fn add_scaled(&mut self, f: &Field, c: Elem, other: &Self);
    fn rank(&self, f: &Field, k: usize, m: usize, scratch: &mut Vec<Elem>) -> usize;
}

/// GF(2) matrix with at most 64 columns, one bit mask per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bits(Vec<u64>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Dense(Vec<Elem>);

impl Vector for Bits {
    fn zero(k: usize, _m: usize) -> Self {
        Bits(vec![0; k])
    }

    fn from_matrix(mat: &Matrix) -> Self {
        Bits(
            (0..mat.nrows())
                .map(|i| {
                    mat.row(i)
                        .iter()
                        .enumerate()
                        .fold(0u64, |acc, (j, &x)| acc | ((x as u64 & 1) << j))
                })
                .collect(),
        )
    }

    fn set(&mut self, i: usize, j: usize, _m: usize, v: Elem) {
        if v & 1 == 1 {
            self.0[i] |= 1 << j;
        } else {
            self.0[i] &= !(1 << j);
        }
    }

    #[inline]
    fn add_scaled(&mut self, _f: &Field, c: Elem, other: &Self) {
        if c != 0 {
            for (a, b) in self.0.iter_mut().zip(&other.0) {
                *a ^= b;
            }
        }
    }

    #[inline]
    fn rank(&self, _f: &Field, k: usize, _m: usize, _scratch: &mut Vec<Elem>) -> usize {
        if k <= 64 {
            let mut buf = [0u64; 64];
            buf[..k].copy_from_slice(&self.0);
            gf2_rank_bits(&mut buf[..k])
        } else {
            gf2_rank_bits(&mut self.0.clone())
        }
    }
}

impl Vector for Dense {
    fn zero(k: usize, m: usize) -> Self {
        Dense(vec![0; k * m])
    }

    fn from_matrix(mat: &Matrix) -> Self {
        Dense(mat.as_slice().to_vec())
    }

    fn set(&mut self, i: usize, j: usize, m: usize, v: Elem) {
        self.0[i * m + j] = v;
    }

    #[inline]
    fn add_scaled(&mut self, f: &Field, c: Elem, other: &Self) {
        crate::linalg::axpy(f, &mut self.0, c, &other.0);
    }

    #[inline]
    fn rank(&self, f: &Field, k: usize, m: usize, scratch: &mut Vec<Elem>) -> usize {
        scratch.clear();
        scratch.extend_from_slice(&self.0);
        rank_in_place(f, scratch, k, m)
    }
}

pub(crate) fn use_bits(field: &Field, ncols: usize) -> bool {
    field.q() == 2 && ncols <= 64
}

/// Runs `$body` with `$en` bound to an [`Enumerator`] of the right vector
/// representation.
macro_rules! dispatch {
    ($space:expr, |$en:ident| $body:expr) => {{
        let space = $space;
        if use_bits(space.field(), space.ncols()) {
            let $en = Enumerator::<Bits>::new(space);
            $body
        } else {
            let $en = Enumerator::<Dense>::new(space);
            $body
        }
    }};
}
use dispatch;

/// One unit: leading index and the digits of a coefficient prefix after it.
#[derive(Clone, Copy, Debug)]
struct Unit {
    lead: usize,
    prefix_len: usize,
    prefix: u64,
}

pub(crate) struct Enumerator<'a, V: Vector> {
    field: &'a Field,
    k: usize,
    m: usize,
    dim: usize,
    q: u64,
    basis: Vec<V>,
    units: Vec<Unit>,
    /// Projective points in units `0..u`.
    offsets: Vec<u128>,
}

impl<'a, V: Vector> Enumerator<'a, V> {
    fn new(space: &'a MatrixSpace) -> Self {
        let q = space.field().q() as u64;
        let dim = space.dim();
        let mut units = Vec::new();
        let mut offsets = vec![0u128];
        for lead in 0..dim {
            let free = dim - 1 - lead;
            let mut prefix_len = 0;
            while (q as u128).pow((free - prefix_len) as u32) > UNIT_POINTS {
                prefix_len += 1;
            }
            let per_unit = (q as u128).pow((free - prefix_len) as u32);
            for prefix in 0..q.pow(prefix_len as u32) {
                units.push(Unit {
                    lead,
                    prefix_len,
                    prefix,
                });
                offsets.push(offsets.last().unwrap() + per_unit);
            }
        }
        Enumerator {
            field: space.field(),
            k: space.nrows(),
            m: space.ncols(),
            dim,
            q,
            basis: space.basis().iter().map(V::from_matrix).collect(),
            units,
            offsets,
        }
    }

    fn points_before(&self, u: usize) -> u128 {
        self.offsets[u]
    }

    /// Visits every point of the unit with its rank and coefficient vector.
    fn walk_unit<B, F>(&self, u: usize, mut visit: F) -> ControlFlow<B>
    where
        F: FnMut(usize, &[Elem]) -> ControlFlow<B>,
    {
        let unit = self.units[u];
        let mut coeffs = vec![0 as Elem; self.dim];
        coeffs[unit.lead] = 1;
        let mut acc = self.basis[unit.lead].clone();
        let mut rest = unit.prefix;
        for t in 0..unit.prefix_len {
            let c = (rest % self.q) as Elem;
            rest /= self.q;
            let idx = unit.lead + 1 + t;
            coeffs[idx] = c;
            acc.add_scaled(self.field, c, &self.basis[idx]);
        }
        let start = unit.lead + 1 + unit.prefix_len;
        let depth = self.dim - start;
        let mut stack = vec![acc; depth + 1];
        let mut scratch = Vec::new();
        self.rec(start, 0, &mut stack, &mut coeffs, &mut scratch, &mut visit)
    }

    fn rec<B, F>(
        &self,
        t: usize,
        level: usize,
        stack: &mut [V],
        coeffs: &mut [Elem],
        scratch: &mut Vec<Elem>,
        visit: &mut F,
    ) -> ControlFlow<B>
    where
        F: FnMut(usize, &[Elem]) -> ControlFlow<B>,
    {
        if t == self.dim {
            let r = stack[level].rank(self.field, self.k, self.m, scratch);
            return visit(r, coeffs);
        }
        for c in 0..self.q as Elem {
            let (lo, hi) = stack.split_at_mut(level + 1);
            hi[0].clone_from(&lo[level]);
            hi[0].add_scaled(self.field, c, &self.basis[t]);
            coeffs[t] = c;
            self.rec(t + 1, level + 1, stack, coeffs, scratch, visit)?;
        }
        coeffs[t] = 0;
        ControlFlow::Continue(())
    }
}

/// Rank condition imposed on every nonzero element during a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankConstraint {
    AtLeast(usize),
    AtMost(usize),
}

impl RankConstraint {
    #[inline]
    fn admits(self, rank: usize) -> bool {
        match self {
            RankConstraint::AtLeast(d) => rank >= d,
            RankConstraint::AtMost(d) => rank <= d,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub maxdim: usize,
    /// The whole search space was exhausted, so `maxdim` is the maximum.
    pub certified: bool,
    pub witness: MatrixSpace,
    pub nodes: u64,
}

/// Default node budget for searches.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Largest-dimension space with support in `shape` whose nonzero elements
/// satisfy `constraint`, by depth-first search over reduced echelon bases.
///
/// Bases grow by decreasing leading cell: a new vector has a 1 at its
/// leading cell, zeros at the earlier leading cells and free entries on the
/// later non-leading cells, which keeps every basis reduced and visits each
/// subspace once. Only elements involving the new vector are rank-tested.
pub fn search_max_dim<S: Shape + ?Sized>(
    shape: &S,
    constraint: RankConstraint,
    field: &Field,
    budget: u64,
) -> Result<SearchResult> {
    search_max_dim_with(shape, constraint, field, budget, Exec::default())
}

pub fn search_max_dim_with<S: Shape + ?Sized>(
    shape: &S,
    constraint: RankConstraint,
    field: &Field,
    budget: u64,
    exec: Exec,
) -> Result<SearchResult> {
    let (k, m) = shape.dims();
    if use_bits(field, m) {
        Search::<Bits>::new(shape, constraint, field, budget).run(exec)
    } else {
        Search::<Dense>::new(shape, constraint, field, budget).run(exec)
    }
    .map(|(maxdim, certified, basis, nodes)| SearchResult {
        maxdim,
        certified,
        witness: MatrixSpace::span(field, k, m, basis).expect("search bases share field and size"),
        nodes,
    })
}

struct Search<'a, V: Vector> {
    field: &'a Field,
    k: usize,
    m: usize,
    q: u64,
    cells: Vec<(usize, usize)>,
    constraint: RankConstraint,
    budget: u64,
    nodes: AtomicU64,
    exhausted_budget: AtomicBool,
    global_best: AtomicUsize,
    _v: std::marker::PhantomData<V>,
}

/// Dimension and coordinate vectors of the best basis found.
type Best = (usize, Vec<Vec<Elem>>);

struct Node<V> {
    basis: Vec<(usize, V, Vec<Elem>)>,
    span: Vec<V>,
}

impl<'a, V: Vector> Search<'a, V> {
    fn new<S: Shape + ?Sized>(shape: &S, constraint: RankConstraint, field: &'a Field, budget: u64) -> Self {
        let (k, m) = shape.dims();
        Search {
            field,
            k,
            m,
            q: field.q() as u64,
            cells: shape.cells(),
            constraint,
            budget,
            nodes: AtomicU64::new(0),
            exhausted_budget: AtomicBool::new(false),
            global_best: AtomicUsize::new(0),
            _v: std::marker::PhantomData,
        }
    }

    /// Free positions for a vector led by `p` given existing leading cells.
    fn free_positions(&self, p: usize, pivots: &[usize]) -> Vec<usize> {
        (p + 1..self.cells.len()).filter(|x| !pivots.contains(x)).collect()
    }

    fn vector(&self, p: usize, free: &[usize], mut idx: u64) -> (V, Vec<Elem>) {
        let n = self.cells.len();
        let mut coords = vec![0 as Elem; n];
        coords[p] = 1;
        for &x in free {
            coords[x] = (idx % self.q) as Elem;
            idx /= self.q;
        }
        let mut v = V::zero(self.k, self.m);
        for (c, &(i, j)) in coords.iter().zip(&self.cells) {
            if *c != 0 {
                v.set(i, j, self.m, *c);
            }
        }
        (v, coords)
    }

    /// Tries to extend `node` by `v`; returns the grown span when every new
    /// element passes.
    fn extend_span(&self, span: &[V], v: &V, scratch: &mut Vec<Elem>) -> Option<Vec<V>> {
        let mut fresh = Vec::with_capacity(span.len() * (self.q as usize - 1));
        for u in span {
            let mut w = u.clone();
            w.add_scaled(self.field, 1, v);
            if !self.constraint.admits(w.rank(self.field, self.k, self.m, scratch)) {
                return None;
            }
            fresh.push(w);
        }
        let mut out = Vec::with_capacity(span.len() * self.q as usize);
        out.extend_from_slice(span);
        for c in 1..self.q as Elem {
            for w in &fresh {
                if c == 1 {
                    out.push(w.clone());
                } else {
                    // c * (u + v) ranges over c*u + c*v as u ranges over the span
                    let mut x = V::zero(self.k, self.m);
                    x.add_scaled(self.field, c, w);
                    out.push(x);
                }
            }
        }
        Some(out)
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget {
            self.exhausted_budget.store(true, Ordering::Relaxed);
            false
        } else {
            true
        }
    }

    /// Best extension of `node` using leading cells below `limit`; updates
    /// `best` in DFS order.
    fn dfs(&self, node: &mut Node<V>, limit: usize, best: &mut Best, scratch: &mut Vec<Elem>) {
        let d = node.basis.len();
        if d > best.0 {
            *best = (d, node.basis.iter().map(|(_, _, c)| c.clone()).collect());
            self.global_best.fetch_max(d, Ordering::Relaxed);
        }
        let pivots: Vec<usize> = node.basis.iter().map(|(p, _, _)| *p).collect();
        for p in (0..limit).rev() {
            if d + 1 + p <= best.0 || d + 1 + p < self.global_best.load(Ordering::Relaxed) {
                return;
            }
            let free = self.free_positions(p, &pivots);
            for idx in 0..self.q.pow(free.len() as u32) {
                if !self.tick() {
                    return;
                }
                let (v, coords) = self.vector(p, &free, idx);
                if let Some(span) = self.extend_span(&node.span, &v, scratch) {
                    let old = std::mem::replace(&mut node.span, span);
                    node.basis.push((p, v, coords));
                    self.dfs(node, p, best, scratch);
                    node.basis.pop();
                    node.span = old;
                    if self.exhausted_budget.load(Ordering::Relaxed) {
                        return;
                    }
                    if d + 1 + p <= best.0 {
                        break;
                    }
                }
            }
        }
    }

    #[allow(clippy::type_complexity)]
    fn run(self, exec: Exec) -> Result<(usize, bool, Vec<Matrix>, u64)> {
        let n = self.cells.len();
        // Top-level units: one per first vector (leading cell p, free index).
        let mut offsets = vec![0u128];
        for p in (0..n).rev() {
            let count = (self.q as u128).pow((n - 1 - p) as u32);
            offsets.push(offsets.last().unwrap() + count);
        }
        let total = *offsets.last().unwrap();
        if total > u32::MAX as u128 {
            return Err(Error::cap("first-vector choices", total, u32::MAX as u128));
        }
        let locate = |u: usize| -> (usize, u64) {
            let slot = offsets.partition_point(|&o| o <= u as u128) - 1;
            (n - 1 - slot, (u as u128 - offsets[slot]) as u64)
        };
        let zero = V::zero(self.k, self.m);
        let (maxdim, _, basis) = exec::map_reduce(
            exec,
            total as usize,
            (0, usize::MAX, Vec::new()),
            |u| {
                let none = (0, usize::MAX, Vec::new());
                let (p, idx) = locate(u);
                if p + 1 < self.global_best.load(Ordering::Relaxed) || !self.tick() {
                    return none;
                }
                let free = self.free_positions(p, &[]);
                let (v, coords) = self.vector(p, &free, idx);
                let mut scratch = Vec::new();
                let Some(span) = self.extend_span(std::slice::from_ref(&zero), &v, &mut scratch) else {
                    return none;
                };
                let mut node = Node {
                    basis: vec![(p, v, coords)],
                    span,
                };
                let mut best: Best = (0, Vec::new());
                self.dfs(&mut node, p, &mut best, &mut scratch);
                (best.0, u, best.1)
            },
            |a, b| {
                if (b.0, std::cmp::Reverse(b.1)) > (a.0, std::cmp::Reverse(a.1)) {
                    b
                } else {
                    a
                }
            },
        );
        let certified = !self.exhausted_budget.load(Ordering::Relaxed);
        let mats = basis.iter().map(|c| self.to_matrix(c)).collect();
        Ok((maxdim, certified, mats, self.nodes.load(Ordering::Relaxed)))
    }

    fn to_matrix(&self, coords: &[Elem]) -> Matrix {
        let mut mat = Matrix::zeros(self.field.clone(), self.k, self.m);
        for (&c, &(i, j)) in coords.iter().zip(&self.cells) {
            mat.set(i, j, c);
        }
        mat
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureStatus {
    /// A construction reaches `T_δ`.
    ProvenAttained,
    /// Only the certified search reaches `T_δ`.
    AttainedBySearch,
    /// Neither reaches `T_δ` (or the search ran out of budget).
    GapUnresolved,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub tdelta: usize,
    pub constructed: usize,
    pub searched: Option<SearchResult>,
    pub status: ConjectureStatus,
}

/// Compares `T_δ`, the best construction, and (when the construction falls
/// short) a budgeted exhaustive search.
pub fn check_conjecture(
    diagram: &FerrersDiagram,
    delta: usize,
    field: &Field,
    budget: u64,
) -> Result<ConjectureReport> {
    let built = construct_auto(diagram, delta, field)?;
    let tdelta = built.tdelta;
    let constructed = built.dimension();
    if constructed == tdelta {
        return Ok(ConjectureReport {
            tdelta,
            constructed,
            searched: None,
            status: ConjectureStatus::ProvenAttained,
        });
    }
    let searched = search_max_dim(diagram, RankConstraint::AtLeast(delta), field, budget)?;
    let status = if searched.certified && searched.maxdim == tdelta {
        ConjectureStatus::AttainedBySearch
    } else {
        ConjectureStatus::GapUnresolved
    };
    Ok(ConjectureReport {
        tdelta,
        constructed,
        searched: Some(searched),
        status,
    })
}
