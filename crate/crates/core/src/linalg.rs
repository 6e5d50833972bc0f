//! Dense matrices over a finite field and linear spaces of matrices.
//!
//! Indices are 0-based in the API; serialized artifacts and rendered output
//! are 1-based. Matrices are vectorized row-major, which is the lexicographic
//! order on positions `(i, j)`, so the leading position of a matrix is its
//! first nonzero entry in that order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldSpec};
use crate::shapes::Shape;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct Matrix {
    field: Field,
    nrows: usize,
    ncols: usize,
    data: Vec<Elem>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    field: FieldSpec,
    k: usize,
    m: usize,
    rows: Vec<Vec<u64>>,
}

impl TryFrom<MatrixJson> for Matrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Matrix> {
        let field = Field::from_spec(&j.field)?;
        if j.rows.len() != j.k || j.rows.iter().any(|r| r.len() != j.m) {
            return Err(Error::DimensionMismatch(format!(
                "rows do not form a {}x{} grid",
                j.k, j.m
            )));
        }
        Matrix::from_rows(field, &j.rows)
    }
}

impl From<Matrix> for MatrixJson {
    fn from(m: Matrix) -> MatrixJson {
        MatrixJson {
            field: m.field.spec(),
            k: m.nrows,
            m: m.ncols,
            rows: m.to_rows(),
        }
    }
}

impl Matrix {
    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Matrix {
        Matrix {
            field,
            nrows,
            ncols,
            data: vec![0; nrows * ncols],
        }
    }

    pub fn from_vec(field: Field, nrows: usize, ncols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != nrows * ncols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {nrows}x{ncols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x as u64)) {
            return Err(Error::InvalidElement {
                value: bad as u64,
                q: field.q(),
            });
        }
        Ok(Matrix {
            field,
            nrows,
            ncols,
            data,
        })
    }

    pub fn from_rows<T: Copy + Into<u64>>(field: Field, rows: &[Vec<T>]) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for &x in r {
                data.push(field.check(x.into())?);
            }
        }
        Ok(Matrix {
            field,
            nrows,
            ncols,
            data,
        })
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// The matrix with a single 1 at `(i, j)`.
    pub fn unit(field: Field, nrows: usize, ncols: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(field, nrows, ncols);
        m.data[i * ncols + j] = 1;
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        debug_assert!(self.field.contains(v as u64));
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.nrows)
            .map(|i| self.row(i).iter().map(|&x| x as u64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Positions of the nonzero entries.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(idx, _)| (idx / self.ncols, idx % self.ncols))
            .collect()
    }

    pub fn has_shape<S: Shape + ?Sized>(&self, shape: &S) -> bool {
        shape.dims() == (self.nrows, self.ncols) && self.support().into_iter().all(|(i, j)| shape.contains_cell(i, j))
    }

    /// First nonzero position in lexicographic order.
    pub fn leading_position(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|&x| x != 0)
            .map(|idx| (idx / self.ncols, idx % self.ncols))
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let mut out = self.clone();
        out.axpy(1, other);
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let mut out = self.clone();
        out.axpy(self.field.neg(1), other);
        Ok(out)
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let f = &self.field;
        Matrix {
            data: self.data.iter().map(|&x| f.mul(c, x)).collect(),
            ..self.clone()
        }
    }

    /// `self += c * other`; shapes must agree.
    pub fn axpy(&mut self, c: Elem, other: &Matrix) {
        debug_assert_eq!(self.data.len(), other.data.len());
        axpy(&self.field, &mut self.data, c, &other.data);
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.data[j * self.nrows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Reflection across the anti-diagonal: `(i, j) -> (m-1-j, k-1-i)`.
    ///
    /// This maps a right-justified Ferrers shape onto its conjugate, again
    /// right-justified, and preserves rank.
    pub fn anti_transpose(&self) -> Matrix {
        let (k, m) = (self.nrows, self.ncols);
        let mut out = Matrix::zeros(self.field.clone(), m, k);
        for i in 0..k {
            for j in 0..m {
                out.data[(m - 1 - j) * k + (k - 1 - i)] = self.get(i, j);
            }
        }
        out
    }

    /// Places `self` inside a zero `nrows x ncols` matrix at the given offset.
    pub fn embed(&self, nrows: usize, ncols: usize, row_off: usize, col_off: usize) -> Result<Matrix> {
        if row_off + self.nrows > nrows || col_off + self.ncols > ncols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} block at ({row_off},{col_off}) does not fit in {nrows}x{ncols}",
                self.nrows, self.ncols
            )));
        }
        let mut out = Matrix::zeros(self.field.clone(), nrows, ncols);
        for i in 0..self.nrows {
            let dst = (row_off + i) * ncols + col_off;
            out.data[dst..dst + self.ncols].copy_from_slice(self.row(i));
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ncols != other.ncols {
            return Err(Error::DimensionMismatch("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            nrows: self.nrows + other.nrows,
            ncols: self.ncols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        let mut buf = self.data.clone();
        rank_in_place(&self.field, &mut buf, self.nrows, self.ncols)
    }

    /// Row-reduced echelon form and its pivot columns (0-based, increasing).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut out = self.clone();
        let pivots = rref_in_place(&self.field, &mut out.data, self.nrows, self.ncols);
        (out, pivots)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        let mut aug = vec![0; n * 2 * n];
        for i in 0..n {
            aug[i * 2 * n..i * 2 * n + n].copy_from_slice(self.row(i));
            aug[i * 2 * n + n + i] = 1;
        }
        let pivots = rref_in_place(&self.field, &mut aug, n, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Matrix::zeros(self.field.clone(), n, n);
        for i in 0..n {
            out.data[i * n..(i + 1) * n].copy_from_slice(&aug[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Some(out)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{:?}", self.field, self.to_rows())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn axpy(f: &Field, dst: &mut [Elem], c: Elem, src: &[Elem]) {
    if c == 0 {
        return;
    }
    if c == 1 {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = f.add(*d, s);
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = f.add(*d, f.mul(c, s));
        }
    }
}

/// Rank of the `rows x cols` matrix in `buf`, which is clobbered.
pub(crate) fn rank_in_place(f: &Field, buf: &mut [Elem], rows: usize, cols: usize) -> usize {
    if f.q() == 2 && cols <= 64 {
        return rank_gf2(buf, rows, cols);
    }
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| buf[r * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in c..cols {
                buf.swap(p * cols + j, rank * cols + j);
            }
        }
        let inv = f.inv_nonzero(buf[rank * cols + c]);
        for r in rank + 1..rows {
            let x = buf[r * cols + c];
            if x == 0 {
                continue;
            }
            let factor = f.neg(f.mul(x, inv));
            for j in c..cols {
                let v = buf[rank * cols + j];
                if v != 0 {
                    buf[r * cols + j] = f.add(buf[r * cols + j], f.mul(factor, v));
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_gf2(buf: &[Elem], rows: usize, cols: usize) -> usize {
    let mut packed = [0u64; 64];
    let mut heap;
    let rows_bits: &mut [u64] = if rows <= 64 {
        &mut packed[..rows]
    } else {
        heap = vec![0u64; rows];
        &mut heap
    };
    for (r, bits) in rows_bits.iter_mut().enumerate() {
        let row = &buf[r * cols..(r + 1) * cols];
        *bits = row
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &x)| acc | ((x as u64 & 1) << j));
    }
    gf2_rank_bits(rows_bits)
}

/// Rank over GF(2) of rows given as bit masks; clobbers the input.
pub(crate) fn gf2_rank_bits(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= pivot;
            }
        }
    }
    rank
}

/// Reduces `buf` to row-reduced echelon form; returns pivot columns.
pub(crate) fn rref_in_place(f: &Field, buf: &mut [Elem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| buf[r * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                buf.swap(p * cols + j, rank * cols + j);
            }
        }
        let inv = f.inv_nonzero(buf[rank * cols + c]);
        for j in c..cols {
            buf[rank * cols + j] = f.mul(inv, buf[rank * cols + j]);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let x = buf[r * cols + c];
            if x == 0 {
                continue;
            }
            let factor = f.neg(x);
            for j in c..cols {
                let v = buf[rank * cols + j];
                if v != 0 {
                    buf[r * cols + j] = f.add(buf[r * cols + j], f.mul(factor, v));
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}

/// Basis of `{c : sum_i c_i * vectors[i] = 0}`.
pub(crate) fn left_kernel(f: &Field, vectors: &[Vec<Elem>], len: usize) -> Vec<Vec<Elem>> {
    let r = vectors.len();
    let width = len + r;
    let mut aug = vec![0; r * width];
    for (i, v) in vectors.iter().enumerate() {
        aug[i * width..i * width + len].copy_from_slice(v);
        aug[i * width + len + i] = 1;
    }
    let mut rank = 0;
    for c in 0..len {
        if rank == r {
            break;
        }
        let Some(p) = (rank..r).find(|&i| aug[i * width + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..width {
                aug.swap(p * width + j, rank * width + j);
            }
        }
        let inv = f.inv_nonzero(aug[rank * width + c]);
        for i in rank + 1..r {
            let x = aug[i * width + c];
            if x == 0 {
                continue;
            }
            let factor = f.neg(f.mul(x, inv));
            let (top, bottom) = aug.split_at_mut(i * width);
            axpy(f, &mut bottom[..width], factor, &top[rank * width..(rank + 1) * width]);
        }
        rank += 1;
    }
    (rank..r)
        .map(|i| aug[i * width + len..(i + 1) * width].to_vec())
        .collect()
}

/// A linear space of `k x m` matrices, stored by its reduced basis.
///
/// Basis elements, vectorized row-major, form the nonzero rows of a
/// row-reduced echelon matrix: their leading positions strictly increase,
/// each leading entry is 1, and every other basis element vanishes there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpaceJson", into = "SpaceJson")]
pub struct MatrixSpace {
    field: Field,
    nrows: usize,
    ncols: usize,
    basis: Vec<Matrix>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct SpaceJson {
    field: FieldSpec,
    k: usize,
    m: usize,
    /// Each element as `k` rows of `m` encoded entries.
    basis: Vec<Vec<Vec<u64>>>,
}

impl TryFrom<SpaceJson> for MatrixSpace {
    type Error = Error;

    fn try_from(j: SpaceJson) -> Result<MatrixSpace> {
        let field = Field::from_spec(&j.field)?;
        let mats = j
            .basis
            .iter()
            .map(|rows| {
                if rows.len() != j.k || rows.iter().any(|r| r.len() != j.m) {
                    return Err(Error::DimensionMismatch(format!(
                        "basis element is not {}x{}",
                        j.k, j.m
                    )));
                }
                Matrix::from_rows(field.clone(), rows)
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixSpace::span(&field, j.k, j.m, mats)
    }
}

impl From<MatrixSpace> for SpaceJson {
    fn from(s: MatrixSpace) -> SpaceJson {
        SpaceJson {
            field: s.field.spec(),
            k: s.nrows,
            m: s.ncols,
            basis: s.basis.iter().map(Matrix::to_rows).collect(),
        }
    }
}

impl MatrixSpace {
    pub fn zero(field: &Field, nrows: usize, ncols: usize) -> MatrixSpace {
        MatrixSpace {
            field: field.clone(),
            nrows,
            ncols,
            basis: Vec::new(),
        }
    }

    /// The span of `mats`, Gauss-reduced.
    pub fn span<I>(field: &Field, nrows: usize, ncols: usize, mats: I) -> Result<MatrixSpace>
    where
        I: IntoIterator<Item = Matrix>,
    {
        let len = nrows * ncols;
        let mut buf = Vec::new();
        let mut count = 0;
        for m in mats {
            if &m.field != field {
                return Err(Error::FieldMismatch);
            }
            if (m.nrows, m.ncols) != (nrows, ncols) {
                return Err(Error::DimensionMismatch(format!(
                    "{}x{} matrix in a space of {nrows}x{ncols} matrices",
                    m.nrows, m.ncols
                )));
            }
            buf.extend_from_slice(&m.data);
            count += 1;
        }
        let pivots = rref_in_place(field, &mut buf, count, len);
        let basis = (0..pivots.len())
            .map(|i| Matrix {
                field: field.clone(),
                nrows,
                ncols,
                data: buf[i * len..(i + 1) * len].to_vec(),
            })
            .collect();
        Ok(MatrixSpace {
            field: field.clone(),
            nrows,
            ncols,
            basis,
        })
    }

    /// Span of the unit matrices at `cells`.
    pub fn from_cells<I>(field: &Field, nrows: usize, ncols: usize, cells: I) -> MatrixSpace
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut cells: Vec<_> = cells.into_iter().collect();
        cells.sort_unstable();
        cells.dedup();
        let basis = cells
            .into_iter()
            .map(|(i, j)| Matrix::unit(field.clone(), nrows, ncols, i, j))
            .collect();
        MatrixSpace {
            field: field.clone(),
            nrows,
            ncols,
            basis,
        }
    }

    /// All matrices with support in `shape`.
    pub fn of_shape<S: Shape + ?Sized>(field: &Field, shape: &S) -> MatrixSpace {
        let (k, m) = shape.dims();
        MatrixSpace::from_cells(field, k, m, shape.cells())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn leading_positions(&self) -> Vec<(usize, usize)> {
        self.basis
            .iter()
            .map(|b| b.leading_position().expect("basis elements are nonzero"))
            .collect()
    }

    pub fn has_shape<S: Shape + ?Sized>(&self, shape: &S) -> bool {
        self.basis.iter().all(|b| b.has_shape(shape))
    }

    /// `sum_i coeffs[i] * basis[i]`.
    pub fn combination(&self, coeffs: &[Elem]) -> Matrix {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = Matrix::zeros(self.field.clone(), self.nrows, self.ncols);
        for (&c, b) in coeffs.iter().zip(&self.basis) {
            out.axpy(c, b);
        }
        out
    }

    /// Number of elements, `q^dim`, if it fits in a `u128`.
    pub fn size(&self) -> Option<u128> {
        (self.field.q() as u128).checked_pow(self.dim() as u32)
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        if m.field != self.field || (m.nrows, m.ncols) != (self.nrows, self.ncols) {
            return false;
        }
        // Reduce against the RREF basis: subtract m[pivot] * basis at each pivot.
        let mut r = m.data.clone();
        for b in &self.basis {
            let lead = b.data.iter().position(|&x| x != 0).unwrap();
            let c = r[lead];
            if c != 0 {
                axpy(&self.field, &mut r, self.field.neg(c), &b.data);
            }
        }
        r.iter().all(|&x| x == 0)
    }

    /// `{M in self : supp(M) ⊆ shape}`.
    pub fn intersect_with_shape<S: Shape + ?Sized>(&self, shape: &S) -> Result<MatrixSpace> {
        if shape.dims() != (self.nrows, self.ncols) {
            return Err(Error::DimensionMismatch("shape and space sizes differ".into()));
        }
        let outside: Vec<usize> = (0..self.nrows * self.ncols)
            .filter(|&idx| !shape.contains_cell(idx / self.ncols, idx % self.ncols))
            .collect();
        let projections: Vec<Vec<Elem>> = self
            .basis
            .iter()
            .map(|b| outside.iter().map(|&idx| b.data[idx]).collect())
            .collect();
        let kernel = left_kernel(&self.field, &projections, outside.len());
        MatrixSpace::span(
            &self.field,
            self.nrows,
            self.ncols,
            kernel.iter().map(|c| self.combination(c)),
        )
    }

    pub fn intersection(&self, other: &MatrixSpace) -> Result<MatrixSpace> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return Err(Error::DimensionMismatch("spaces of different sizes".into()));
        }
        let vectors: Vec<Vec<Elem>> = self.basis.iter().chain(&other.basis).map(|b| b.data.clone()).collect();
        let kernel = left_kernel(&self.field, &vectors, self.nrows * self.ncols);
        let d = self.dim();
        MatrixSpace::span(
            &self.field,
            self.nrows,
            self.ncols,
            kernel.iter().map(|c| self.combination(&c[..d])),
        )
    }

    pub fn anti_transpose(&self) -> MatrixSpace {
        MatrixSpace::span(
            &self.field,
            self.ncols,
            self.nrows,
            self.basis.iter().map(Matrix::anti_transpose),
        )
        .expect("anti-transposition preserves field and sizes")
    }

    pub fn transpose(&self) -> MatrixSpace {
        MatrixSpace::span(
            &self.field,
            self.ncols,
            self.nrows,
            self.basis.iter().map(Matrix::transpose),
        )
        .expect("transposition preserves field and sizes")
    }

    pub fn embed(&self, nrows: usize, ncols: usize, row_off: usize, col_off: usize) -> Result<MatrixSpace> {
        let mats = self
            .basis
            .iter()
            .map(|b| b.embed(nrows, ncols, row_off, col_off))
            .collect::<Result<Vec<_>>>()?;
        MatrixSpace::span(&self.field, nrows, ncols, mats)
    }
}

/// `dim(rowspace X ∩ rowspace Y)` for full-rank `k x n` matrices.
pub fn subspace_intersection_dim(x: &Matrix, y: &Matrix) -> Result<usize> {
    if x.nrows != y.nrows || x.ncols != y.ncols {
        return Err(Error::DimensionMismatch("subspaces of different sizes".into()));
    }
    let k = x.nrows;
    for m in [x, y] {
        let r = m.rank();
        if r != k {
            return Err(Error::RankDeficient { expected: k, found: r });
        }
    }
    Ok(2 * k - x.vstack(y)?.rank())
}
