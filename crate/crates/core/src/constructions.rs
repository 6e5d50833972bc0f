//! Constructions of spaces of shaped matrices with a minimum rank.
//!
//! A `δ`-space is a linear space of matrices whose nonzero elements all have
//! rank at least `δ`. Its dimension never exceeds `T_δ` of its shape; the
//! constructions here reach that bound in the cases where a reaching
//! construction is known, and [`construct_auto`] reports whether it did.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{BasisOrder, Elem, Extension, Field, MAX_ORDER};
use crate::linalg::{Matrix, MatrixSpace, SpaceJson};
use crate::shapes::FerrersDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Every matrix of the shape (`δ = 1`).
    Full,
    /// Gabidulin space of unrestricted matrices.
    Mrd,
    /// Unrestricted space intersected with the shape.
    Intersect,
    /// Intersection inside the widest rectangle the first `δ-1` rows allow.
    WideIntersect,
    /// MDS codewords laid along diagonals.
    Diagonal,
    /// Two square rank-full blocks on the diagonal.
    BlockDiag,
    /// Multiplication maps of an extension field.
    FieldMul,
    /// Independent spaces on disjoint rows and columns, summed.
    BlockCombine,
    /// The zero space.
    Zero,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Full => "full",
            Method::Mrd => "mrd",
            Method::Intersect => "intersect",
            Method::WideIntersect => "wide_intersect",
            Method::Diagonal => "diagonal",
            Method::BlockDiag => "block_diag",
            Method::FieldMul => "field_mul",
            Method::BlockCombine => "block_combine",
            Method::Zero => "zero",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ResultJson", into = "ResultJson")]
pub struct ConstructionResult {
    pub space: MatrixSpace,
    pub method: Method,
    pub diagram: FerrersDiagram,
    pub delta: usize,
    pub tdelta: usize,
    pub attains_bound: bool,
    /// Built on the transposed diagram and reflected back.
    pub transposed: bool,
}

impl ConstructionResult {
    pub fn dimension(&self) -> usize {
        self.space.dim()
    }

    fn new(
        space: MatrixSpace,
        method: Method,
        diagram: &FerrersDiagram,
        delta: usize,
        transposed: bool,
    ) -> Result<ConstructionResult> {
        let tdelta = diagram.tdelta(delta)?.value;
        debug_assert!(space.has_shape(diagram));
        Ok(ConstructionResult {
            attains_bound: space.dim() == tdelta,
            space,
            method,
            diagram: diagram.clone(),
            delta,
            tdelta,
            transposed,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct ResultJson {
    #[serde(flatten)]
    space: SpaceJson,
    method: Method,
    diagram: FerrersDiagram,
    delta: usize,
    dimension: usize,
    tdelta: usize,
    attains_bound: bool,
    transposed: bool,
}

impl TryFrom<ResultJson> for ConstructionResult {
    type Error = Error;

    fn try_from(j: ResultJson) -> Result<ConstructionResult> {
        let space = MatrixSpace::try_from(j.space)?;
        if space.dim() != j.dimension {
            return Err(Error::Parse(format!(
                "declared dimension {} but the basis spans {}",
                j.dimension,
                space.dim()
            )));
        }
        Ok(ConstructionResult {
            space,
            method: j.method,
            diagram: j.diagram,
            delta: j.delta,
            tdelta: j.tdelta,
            attains_bound: j.attains_bound,
            transposed: j.transposed,
        })
    }
}

impl From<ConstructionResult> for ResultJson {
    fn from(r: ConstructionResult) -> ResultJson {
        ResultJson {
            dimension: r.space.dim(),
            space: r.space.into(),
            method: r.method,
            diagram: r.diagram,
            delta: r.delta,
            tdelta: r.tdelta,
            attains_bound: r.attains_bound,
            transposed: r.transposed,
        }
    }
}

fn check_order(field: &Field, degree: usize) -> Result<()> {
    let order = (field.q() as u128).checked_pow(degree as u32);
    match order {
        Some(o) if o <= MAX_ORDER as u128 => Ok(()),
        _ => Err(Error::FieldTooLarge(
            order.map_or(u64::MAX, |o| o.min(u64::MAX as u128) as u64),
        )),
    }
}

/// Dimension of an unrestricted `k x m` space of minimum rank `δ`.
pub fn mrd_dimension(k: usize, m: usize, delta: usize) -> usize {
    let (lo, hi) = (k.min(m), k.max(m));
    if delta == 0 || delta > lo {
        return 0;
    }
    hi * (lo - delta + 1)
}

/// A `δ`-space of unrestricted `k x m` matrices of dimension
/// `max(k,m) * (min(k,m) - δ + 1)`.
///
/// For `k <= m` the rows of each basis matrix are the values at
/// `1, α, ..., α^{k-1}` of a linearized polynomial
/// `f(x) = sum_{t <= k-δ} a_t x^{q^t}` over GF(q^m), written in the basis
/// `1, α, ..., α^{m-1}`. The basis runs over `a_t = α^s` with one nonzero
/// coefficient, ordered by `(t, s)`. For `k > m` the result is the transpose
/// of the `m x k` space.
pub fn mrd(field: &Field, k: usize, m: usize, delta: usize) -> Result<MatrixSpace> {
    if delta < 1 || delta > k.min(m) {
        return Err(Error::params(format!(
            "minimum rank {delta} is not in 1..={} for {k}x{m} matrices",
            k.min(m)
        )));
    }
    if delta == 1 {
        return Ok(MatrixSpace::from_cells(
            field,
            k,
            m,
            (0..k).flat_map(|i| (0..m).map(move |j| (i, j))),
        ));
    }
    if k > m {
        return Ok(mrd(field, m, k, delta)?.transpose());
    }
    check_order(field, m)?;
    let ext = Extension::new(field, m)?;
    let points: Vec<Elem> = (0..k).map(|i| ext.field().pow(ext.alpha(), i as u64)).collect();
    gabidulin(&ext, k, delta, &points)
}

/// Gabidulin space evaluated at `points`, which must be `k` elements of
/// `GF(q^m)` linearly independent over `GF(q)`; `k <= m`.
pub(crate) fn gabidulin(ext: &Extension, k: usize, delta: usize, points: &[Elem]) -> Result<MatrixSpace> {
    let field = ext.base();
    let m = ext.degree();
    let big = ext.field();
    let q = field.q() as u64;
    let expanded = points.iter().flat_map(|&g| ext.expand(g)).collect();
    if points.len() != k || Matrix::from_vec(field.clone(), k, m, expanded)?.rank() != k {
        return Err(Error::params("evaluation points must be linearly independent"));
    }
    let mut mats = Vec::with_capacity(m * (k - delta + 1));
    for t in 0..=k - delta {
        let frob: Vec<Elem> = points.iter().map(|&g| big.pow(g, q.pow(t as u32))).collect();
        for s in 0..m {
            let a = big.pow(ext.alpha(), s as u64);
            let data: Vec<Elem> = frob.iter().flat_map(|&g| ext.expand(big.mul(a, g))).collect();
            mats.push(Matrix::from_vec(field.clone(), k, m, data)?);
        }
    }
    MatrixSpace::span(field, k, m, mats)
}

/// `δ`-space obtained by intersecting an unrestricted space with the shape.
///
/// When `δ >= 2` and `r_{δ-1} >= k`, the first `δ-1` rows are cut to width
/// `w = r_{δ-1}` and the intersection happens inside the rightmost `w`
/// columns, which yields dimension `sum_{i >= δ} r_i`. Otherwise the full
/// `k x m` space is intersected with the diagram, which only guarantees
/// `|F| - m(δ-1)`.
pub fn intersect_construction(diagram: &FerrersDiagram, delta: usize, field: &Field) -> Result<(MatrixSpace, Method)> {
    let (k, m) = (diagram.k(), diagram.m());
    if delta < 1 {
        return Err(Error::params("delta must be at least 1"));
    }
    if delta == 1 {
        return Ok((MatrixSpace::of_shape(field, diagram), Method::Full));
    }
    let rows = diagram.rows();
    if delta <= k && rows[delta - 2] >= k {
        let w = rows[delta - 2];
        let mut cut = vec![w; delta - 1];
        cut.extend_from_slice(&rows[delta - 1..]);
        let inner = FerrersDiagram::new(cut, w)?;
        let space = mrd(field, k, w, delta)?
            .intersect_with_shape(&inner)?
            .embed(k, m, 0, m - w)?;
        return Ok((space, Method::WideIntersect));
    }
    if delta > k.min(m) {
        return Ok((MatrixSpace::zero(field, k, m), Method::Zero));
    }
    let space = mrd(field, k, m, delta)?.intersect_with_shape(diagram)?;
    Ok((space, Method::Intersect))
}

/// Generator of a length-`n` MDS code of minimum distance `δ`: the trivial
/// codes for `δ` in `{1, 2, n}`, otherwise Reed–Solomon on the `n` smallest
/// encodings when `q >= n` and singly extended Reed–Solomon when `q = n - 1`.
pub fn mds_code(field: &Field, n: usize, delta: usize) -> Result<Matrix> {
    if delta < 1 || delta > n {
        return Err(Error::params(format!("distance {delta} is not in 1..={n}")));
    }
    if delta == 1 {
        return Ok(Matrix::identity(field.clone(), n));
    }
    if delta == n {
        return Matrix::from_vec(field.clone(), 1, n, vec![1; n]);
    }
    let dim = n - delta + 1;
    if delta == 2 {
        let mut g = Matrix::identity(field.clone(), dim).embed(dim, n, 0, 0)?;
        for i in 0..dim {
            g.set(i, n - 1, field.neg(1));
        }
        return Ok(g);
    }
    let q = field.q() as usize;
    let eval_points = if q >= n {
        n
    } else if q + 1 == n {
        q
    } else {
        return Err(Error::params(format!(
            "no MDS code of length {n} over {field} from this family (needs q >= {})",
            n - 1
        )));
    };
    let mut data = Vec::with_capacity(dim * n);
    for t in 0..dim {
        for x in 0..eval_points as Elem {
            data.push(field.pow(x, t as u64));
        }
        if eval_points < n {
            data.push((t == dim - 1) as Elem);
        }
    }
    Matrix::from_vec(field.clone(), dim, n, data)
}

/// MDS codewords placed along every diagonal with at least `δ` cells.
///
/// Diagonals with no MDS code available from [`mds_code`] are skipped.
pub fn diagonal_construction(diagram: &FerrersDiagram, delta: usize, field: &Field) -> Result<MatrixSpace> {
    if delta < 1 {
        return Err(Error::params("delta must be at least 1"));
    }
    let (k, m) = (diagram.k(), diagram.m());
    let mut mats = Vec::new();
    for diag in diagram.diagonals() {
        let len = diag.len();
        if len < delta {
            continue;
        }
        let Ok(gen) = mds_code(field, len, delta) else {
            continue;
        };
        for r in 0..gen.nrows() {
            let mut mat = Matrix::zeros(field.clone(), k, m);
            for (&(i, j), &x) in diag.cells.iter().zip(gen.row(r)) {
                mat.set(i, j, x);
            }
            mats.push(mat);
        }
    }
    MatrixSpace::span(field, k, m, mats)
}

/// Rank-`k` space for a `k x k` diagram with `k/2 <= T_k <= k-1`.
///
/// Both the block-diagonal space (dimension `⌊k/2⌋`) and the multiplication
/// space (dimension `2T_k - k + 1`) are built inside
/// `[k; t] ++ [t; k-t]`; the larger is returned, the latter on ties.
pub fn square_construction(diagram: &FerrersDiagram, field: &Field) -> Result<(MatrixSpace, Method)> {
    let k = diagram.k();
    if diagram.m() != k || k < 2 {
        return Err(Error::params(format!(
            "square construction needs a k x k diagram with k >= 2, got {}x{}",
            k,
            diagram.m()
        )));
    }
    let t = diagram.tdelta(k)?.value;
    if 2 * t < k || t + 1 > k {
        return Err(Error::params(format!(
            "T_{k} = {t} is outside {}..={}",
            k.div_ceil(2),
            k - 1
        )));
    }
    let mut rows = vec![k; t];
    rows.extend(std::iter::repeat_n(t, k - t));
    let inner = FerrersDiagram::new(rows, k)?;
    if !diagram.contains(&inner) {
        return Err(Error::ShapeViolation(format!("{diagram} does not contain {inner}")));
    }
    let mul_dim = 2 * t + 1 - k;
    if mul_dim >= k / 2 {
        if t + 1 == k {
            let (space, method) = intersect_construction(&inner, k, field)?;
            return Ok((space, method));
        }
        check_order(field, k)?;
        let ext = Extension::new(field, k)?;
        let mats =
            (0..mul_dim).map(|i| ext.mult_matrix(ext.field().pow(ext.alpha(), i as u64), BasisOrder::Descending));
        let space = MatrixSpace::span(field, k, k, mats)?;
        return Ok((space, Method::FieldMul));
    }
    let (k1, k2) = (k / 2, k - k / 2);
    let a = mrd(field, k1, k1, k1)?;
    let b = mrd(field, k2, k2, k2)?;
    let space = block_combine(&[(&a, 0, 0), (&b, k1, k1)], k, k)?;
    Ok((space, Method::BlockDiag))
}

/// Sums the `i`-th basis elements of every part, each placed at its
/// `(row, column)` offset in a `k x m` box.
///
/// Parts must occupy pairwise disjoint rows and pairwise disjoint columns, so
/// ranks add. The result has the smallest dimension among the parts.
pub fn block_combine(parts: &[(&MatrixSpace, usize, usize)], k: usize, m: usize) -> Result<MatrixSpace> {
    let Some((first, _, _)) = parts.first() else {
        return Err(Error::params("no parts to combine"));
    };
    let field = first.field();
    for (a, (sa, ra, ca)) in parts.iter().enumerate() {
        if sa.field() != field {
            return Err(Error::FieldMismatch);
        }
        if ra + sa.nrows() > k || ca + sa.ncols() > m {
            return Err(Error::params(format!("part {} does not fit in {k}x{m}", a + 1)));
        }
        for (sb, rb, cb) in &parts[a + 1..] {
            let rows_overlap = ra < &(rb + sb.nrows()) && rb < &(ra + sa.nrows());
            let cols_overlap = ca < &(cb + sb.ncols()) && cb < &(ca + sa.ncols());
            if rows_overlap || cols_overlap {
                return Err(Error::params("parts share rows or columns"));
            }
        }
    }
    let d = parts.iter().map(|(s, _, _)| s.dim()).min().unwrap_or(0);
    let mut mats = Vec::with_capacity(d);
    for i in 0..d {
        let mut h = Matrix::zeros(field.clone(), k, m);
        for (s, r, c) in parts {
            h.axpy(1, &s.basis()[i].embed(k, m, *r, *c)?);
        }
        mats.push(h);
    }
    MatrixSpace::span(field, k, m, mats)
}

/// Explicit construction requested by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Mrd,
    Intersect,
    Diagonal,
    Square,
}

/// Runs one construction on `diagram` without transposing.
pub fn construct_with(
    diagram: &FerrersDiagram,
    delta: usize,
    field: &Field,
    strategy: Strategy,
) -> Result<ConstructionResult> {
    let (space, method) = match strategy {
        Strategy::Auto => return construct_auto(diagram, delta, field),
        Strategy::Mrd => {
            if diagram.cardinality() != diagram.k() * diagram.m() {
                return Err(Error::params("mrd needs a full rectangular diagram"));
            }
            (mrd(field, diagram.k(), diagram.m(), delta)?, Method::Mrd)
        }
        Strategy::Intersect => intersect_construction(diagram, delta, field)?,
        Strategy::Diagonal => (diagonal_construction(diagram, delta, field)?, Method::Diagonal),
        Strategy::Square => {
            if delta != diagram.k() {
                return Err(Error::params("square construction needs delta = k = m"));
            }
            square_construction(diagram, field)?
        }
    };
    ConstructionResult::new(space, method, diagram, delta, false)
}

/// Best `δ`-space among the available constructions, on the diagram and on
/// its transpose.
///
/// Zero rows and empty columns are trimmed before building. Stops at the
/// first candidate reaching `T_δ`; otherwise keeps the first of maximal
/// dimension.
pub fn construct_auto(diagram: &FerrersDiagram, delta: usize, field: &Field) -> Result<ConstructionResult> {
    let tdelta = diagram.tdelta(delta)?.value;
    let (k, m) = (diagram.k(), diagram.m());
    let zero = || ConstructionResult::new(MatrixSpace::zero(field, k, m), Method::Zero, diagram, delta, false);
    if tdelta == 0 {
        return zero();
    }
    let mut best: Option<(MatrixSpace, Method, bool)> = None;
    for transposed in [false, true] {
        let oriented = if transposed {
            diagram.transpose()
        } else {
            diagram.clone()
        };
        let core = oriented.trimmed();
        let col_off = oriented.m() - core.m();
        for (space, method) in candidates(&core, delta, field, tdelta) {
            if best.as_ref().is_some_and(|(b, _, _)| b.dim() >= space.dim()) {
                continue;
            }
            let mut placed = space.embed(oriented.k(), oriented.m(), 0, col_off)?;
            if transposed {
                placed = placed.anti_transpose();
            }
            let done = placed.dim() == tdelta;
            best = Some((placed, method, transposed));
            if done {
                break;
            }
        }
        if best.as_ref().is_some_and(|(b, _, _)| b.dim() == tdelta) {
            break;
        }
    }
    match best {
        Some((space, method, transposed)) if space.dim() > 0 => {
            ConstructionResult::new(space, method, diagram, delta, transposed)
        }
        _ => zero(),
    }
}

/// Lazily evaluated candidate constructions on a trimmed diagram; stops
/// after the first one that reaches `target`.
fn candidates<'a>(
    d: &'a FerrersDiagram,
    delta: usize,
    field: &'a Field,
    target: usize,
) -> impl Iterator<Item = (MatrixSpace, Method)> + 'a {
    let k = d.k();
    let rows = d.rows();
    type Build<'b> = Box<dyn Fn() -> Result<(MatrixSpace, Method)> + 'b>;
    let mut builders: Vec<Build<'a>> = Vec::new();
    if delta == 1 {
        builders.push(Box::new(move || Ok((MatrixSpace::of_shape(field, d), Method::Full))));
    }
    if delta >= 2 && delta <= k && rows[delta - 2] >= k {
        builders.push(Box::new(move || intersect_construction(d, delta, field)));
    }
    if delta >= 2 && d.m() == k && delta == k {
        builders.push(Box::new(move || square_construction(d, field)));
    }
    if delta >= 2 && delta <= k.min(d.m()) {
        builders.push(Box::new(move || {
            Ok((diagonal_construction(d, delta, field)?, Method::Diagonal))
        }));
        builders.push(Box::new(move || block_combine_search(d, delta, field)));
        builders.push(Box::new(move || intersect_construction(d, delta, field)));
    }
    let mut reached = false;
    builders.into_iter().filter_map(move |build| {
        if reached {
            return None;
        }
        let out = build().ok()?;
        reached = out.0.dim() == target;
        Some(out)
    })
}

/// Two unrestricted spaces stacked as a staircase: rows `0..a` use the
/// `w_a` columns left of the rightmost `w_b`, rows `a..b` use the rightmost
/// `w_b`, with minimum ranks `δ_a + δ_b = δ`. Picks the split maximizing
/// the smaller of the two dimensions.
fn block_combine_search(d: &FerrersDiagram, delta: usize, field: &Field) -> Result<(MatrixSpace, Method)> {
    let rows = d.rows();
    let (k, m) = (d.k(), d.m());
    let mut best: Option<(usize, [usize; 6])> = None;
    for a in 1..k {
        for b in a + 1..=k {
            let (ra, rb) = (rows[a - 1], rows[b - 1]);
            for wb in 1..=rb {
                if wb >= ra {
                    break;
                }
                let wa = ra - wb;
                for da in 1..delta {
                    let db = delta - da;
                    if da > a.min(wa) || db > (b - a).min(wb) {
                        continue;
                    }
                    if check_order(field, a.max(wa)).is_err() || check_order(field, (b - a).max(wb)).is_err() {
                        continue;
                    }
                    let score = mrd_dimension(a, wa, da).min(mrd_dimension(b - a, wb, db));
                    if best.is_none_or(|(s, _)| score > s) {
                        best = Some((score, [a, b, wa, wb, da, db]));
                    }
                }
            }
        }
    }
    let Some((_, [a, b, wa, wb, da, db])) = best else {
        return Err(Error::params("no staircase split"));
    };
    let top = mrd(field, a, wa, da)?;
    let bottom = mrd(field, b - a, wb, db)?;
    let space = block_combine(&[(&top, 0, m - wb - wa), (&bottom, a, m - wb)], k, m)?;
    Ok((space, Method::BlockCombine))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{min_rank, verify_delta_space, VerifyMode};

    fn f(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    fn d(s: &str) -> FerrersDiagram {
        s.parse().unwrap()
    }

    fn certify(space: &MatrixSpace, delta: usize) {
        let mode = if space.size().is_some_and(|s| s <= 1 << 16) {
            VerifyMode::Exhaustive
        } else {
            VerifyMode::Sample { count: 10_000, seed: 1 }
        };
        let report = verify_delta_space(space, delta, mode).unwrap();
        assert!(report.ok, "witness {:?}", report.witness);
    }

    #[test]
    fn mrd_dimensions_and_ranks() {
        for &(q, k, m, delta) in &[
            (2, 3, 3, 2),
            (2, 3, 3, 3),
            (3, 2, 2, 2),
            (2, 4, 4, 3),
            (2, 2, 5, 2),
            (4, 3, 2, 2),
            (5, 2, 2, 2),
        ] {
            let s = mrd(&f(q), k, m, delta).unwrap();
            assert_eq!(s.dim(), mrd_dimension(k, m, delta), "{q} {k} {m} {delta}");
            certify(&s, delta);
        }
        assert_eq!(mrd(&f(3), 2, 3, 1).unwrap().dim(), 6);
        assert!(mrd(&f(2), 2, 3, 3).is_err());
    }

    #[test]
    fn mrd_minimum_rank_is_exact() {
        let s = mrd(&f(2), 3, 4, 2).unwrap();
        assert_eq!(min_rank(&s, crate::exec::Exec::Sequential).unwrap(), Some(2));
    }

    #[test]
    fn intersect_examples() {
        let (s, m) = intersect_construction(&d("6,3,2,2"), 2, &f(2)).unwrap();
        assert_eq!((s.dim(), m), (7, Method::WideIntersect));
        assert!(s.has_shape(&d("6,3,2,2")));
        certify(&s, 2);
        let full = FerrersDiagram::full(3, 4);
        for delta in 1..=3 {
            let (s, _) = intersect_construction(&full, delta, &f(2)).unwrap();
            assert_eq!(s.dim(), 4 * (3 - delta + 1));
        }
    }

    /// Golden value for the generic route on the staircase with this MRD
    /// basis; the guaranteed lower bound there is `6 - 3*2 = 0`.
    #[test]
    fn intersect_generic_staircase_golden() {
        let (s, m) = intersect_construction(&d("3,2,1"), 3, &f(2)).unwrap();
        assert_eq!(m, Method::Intersect);
        assert_eq!(s.dim(), 1);
        certify(&s, 3);
        let (s, _) = intersect_construction(&d("3,2,1"), 2, &f(2)).unwrap();
        assert!(s.dim() >= 6 - 3);
        certify(&s, 2);
    }

    /// Every nonzero codeword of the generator's span, by enumeration.
    fn min_weight(g: &Matrix) -> usize {
        let fld = g.field().clone();
        let q = fld.q() as usize;
        let (r, n) = (g.nrows(), g.ncols());
        let mut best = usize::MAX;
        for idx in 1..q.pow(r as u32) {
            let mut x = idx;
            let mut word = vec![0; n];
            for i in 0..r {
                let c = (x % q) as Elem;
                x /= q;
                for (w, &v) in word.iter_mut().zip(g.row(i)) {
                    *w = fld.add(*w, fld.mul(c, v));
                }
            }
            best = best.min(word.iter().filter(|&&v| v != 0).count());
        }
        best
    }

    #[test]
    fn mds_examples() {
        let g = mds_code(&f(5), 4, 3).unwrap();
        assert_eq!((g.nrows(), g.rank()), (2, 2));
        assert_eq!(min_weight(&g), 3);
        let g = mds_code(&f(2), 3, 3).unwrap();
        assert_eq!(g.to_rows(), vec![vec![1, 1, 1]]);
        assert_eq!(mds_code(&f(3), 4, 1).unwrap(), Matrix::identity(f(3), 4));
        assert!(mds_code(&f(2), 5, 3).is_err());
        assert_eq!(mds_code(&f(2), 4, 2).unwrap().rank(), 3);
        assert_eq!(min_weight(&mds_code(&f(2), 4, 2).unwrap()), 2);
        assert_eq!(min_weight(&mds_code(&f(3), 7, 7).unwrap()), 7);
        for (q, n) in [(3u64, 4usize), (4, 5), (4, 4), (7, 6)] {
            for delta in 2..=n {
                let g = mds_code(&f(q), n, delta).unwrap();
                assert_eq!(g.rank(), n - delta + 1);
                assert_eq!(min_weight(&g), delta, "q={q} n={n} delta={delta}");
            }
        }
    }

    #[test]
    fn diagonal_examples() {
        for q in [3, 4, 5] {
            let s = diagonal_construction(&d("4,3,2,1"), 3, &f(q)).unwrap();
            assert_eq!(s.dim(), 3);
            certify(&s, 3);
        }
        let s = diagonal_construction(&d("4,2,2,1"), 2, &f(2)).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(d("4,2,2,1").tdelta(2).unwrap().value, 5);
        certify(&s, 2);
        let s = diagonal_construction(&d("6,3,2,2"), 1, &f(2)).unwrap();
        assert_eq!(s.dim(), 13);
    }

    #[test]
    fn square_examples() {
        let (s, m) = square_construction(&d("4,4,2,2"), &f(5)).unwrap();
        assert_eq!((s.dim(), m), (2, Method::BlockDiag));
        certify(&s, 4);
        let (s, m) = square_construction(&d("6,6,6,6,4,4"), &f(2)).unwrap();
        assert_eq!((s.dim(), m), (3, Method::FieldMul));
        assert!(s.has_shape(&d("6,6,6,6,4,4")));
        certify(&s, 6);
        let (s, m) = square_construction(&d("4,4,4,3"), &f(2)).unwrap();
        assert_eq!((s.dim(), m), (3, Method::WideIntersect));
        certify(&s, 4);
        assert!(square_construction(&d("4,4,1,1"), &f(2)).is_err());
    }

    #[test]
    fn square_dimension_formula() {
        for k in 2..=6usize {
            for t in k.div_ceil(2)..k {
                let mut rows = vec![k; t];
                rows.extend(std::iter::repeat_n(t, k - t));
                let diagram = FerrersDiagram::new(rows, k).unwrap();
                assert_eq!(diagram.tdelta(k).unwrap().value, t);
                let (s, _) = square_construction(&diagram, &f(2)).unwrap();
                assert_eq!(s.dim(), (2 * t + 1 - k).max(k / 2), "k={k} t={t}");
                assert!(s.has_shape(&diagram));
                certify(&s, k);
            }
        }
    }

    #[test]
    fn block_combine_examples() {
        let a = mrd(&f(2), 1, 2, 1).unwrap();
        let b = mrd(&f(2), 2, 2, 2).unwrap();
        let s = block_combine(&[(&a, 0, 1), (&b, 1, 3)], 3, 5).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.has_shape(&d("5,2,2")));
        certify(&s, 3);
        let same = block_combine(&[(&b, 0, 0)], 2, 2).unwrap();
        assert_eq!(same, b);
        let big = mrd(&f(2), 3, 3, 3).unwrap();
        assert_eq!(block_combine(&[(&big, 0, 0), (&b, 3, 3)], 5, 5).unwrap().dim(), 2);
        assert!(block_combine(&[(&b, 0, 0), (&b, 1, 2)], 3, 4).is_err());
        assert!(block_combine(&[(&b, 0, 0), (&b, 2, 1)], 4, 4).is_err());
    }

    #[test]
    fn auto_examples() {
        let r = construct_auto(&d("3,3,2,2,1@5"), 3, &f(2)).unwrap();
        assert_eq!((r.dimension(), r.tdelta), (2, 2));
        assert!(r.attains_bound);
        certify(&r.space, 3);
        let r = construct_auto(&d("5,5,5,5,5"), 3, &f(2)).unwrap();
        assert_eq!(r.dimension(), 15);
        let r = construct_auto(&d("3,2,1,1,0@5"), 3, &f(2)).unwrap();
        assert_eq!((r.dimension(), r.tdelta), (1, 1));
        certify(&r.space, 3);
        let r = construct_auto(&d("5,2,2,0,0@5"), 3, &f(2)).unwrap();
        assert_eq!((r.dimension(), r.tdelta, r.method), (2, 2, Method::BlockCombine));
        certify(&r.space, 3);
        let r = construct_auto(&d("4,3,0,0,0@5"), 3, &f(2)).unwrap();
        assert_eq!((r.dimension(), r.method), (0, Method::Zero));
        for q in [2, 3, 4, 5] {
            let r = construct_auto(&d("6,3,2,2"), 2, &f(q)).unwrap();
            assert_eq!(r.dimension(), 7);
        }
    }

    #[test]
    fn result_json_round_trip() {
        let r = construct_auto(&d("6,3,2,2"), 2, &f(3)).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["method"], "wide_intersect");
        assert_eq!(v["dimension"], 7);
        assert_eq!(v["tdelta"], 7);
        assert_eq!(v["attains_bound"], true);
        assert_eq!(v["k"], 4);
        let back: ConstructionResult = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn explicit_strategies() {
        let r = construct_with(&d("4,3,2,1"), 3, &f(3), Strategy::Diagonal).unwrap();
        assert_eq!(r.dimension(), 3);
        let r = construct_with(&d("4,4,2,2"), 4, &f(5), Strategy::Square).unwrap();
        assert_eq!(r.dimension(), 2);
        assert!(construct_with(&d("4,4,2,2"), 4, &f(5), Strategy::Mrd).is_err());
    }

    /// Every auto construction over small diagrams respects shape, rank and
    /// the upper bound.
    #[test]
    fn auto_sweep_small_diagrams() {
        for q in [2u64, 3] {
            for k in 1..=4 {
                for m in 1..=4 {
                    for diagram in crate::shapes::all_diagrams(k, m) {
                        for delta in 1..=k.max(m) {
                            let r = construct_auto(&diagram, delta, &f(q)).unwrap();
                            assert!(r.space.has_shape(&diagram));
                            assert!(r.dimension() <= r.tdelta, "{diagram} {delta}");
                            if r.dimension() > 0 {
                                certify(&r.space, delta);
                            }
                        }
                    }
                }
            }
        }
    }

    /// For diagrams whose first `δ-1` rows reach width `k`, construction
    /// meets `T_δ`, and growing the diagram never lowers it.
    #[test]
    fn wide_family_is_exact_and_monotone() {
        for k in 2..=4 {
            for diagram in crate::shapes::all_diagrams(k, 5) {
                for delta in 2..=k {
                    if diagram.rows()[delta - 2] < k {
                        continue;
                    }
                    let r = construct_auto(&diagram, delta, &f(2)).unwrap();
                    let expect: usize = diagram.rows()[delta - 1..].iter().sum();
                    assert_eq!(r.dimension(), expect);
                    let mut bigger = diagram.rows().to_vec();
                    bigger[k - 1] = (bigger[k - 1] + 1).min(bigger[k - 2]);
                    let bigger = FerrersDiagram::new(bigger, 5).unwrap();
                    let rb = construct_auto(&bigger, delta, &f(2)).unwrap();
                    assert!(rb.dimension() >= r.dimension());
                }
            }
        }
    }
}
