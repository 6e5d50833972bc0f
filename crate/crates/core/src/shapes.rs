//! Ferrers diagrams, general profiles, the `T_δ` bound and diagonals.
//!
//! A Ferrers diagram `[r_1, ..., r_k]` in a `k x m` box has its rows
//! right-justified: with 0-based indices, `(i, j)` is a cell iff
//! `j >= m - r_i`. Every module uses this convention. Rendered and serialized
//! forms are 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multilevel::PivotVector;

/// Profile `T_δ` minimization refuses more line selections than this.
pub const PROFILE_SELECTION_CAP: u128 = 50_000_000;

/// A set of cells in a `k x m` grid.
pub trait Shape {
    fn dims(&self) -> (usize, usize);

    fn contains_cell(&self, i: usize, j: usize) -> bool;

    /// Cells in lexicographic order.
    fn cells(&self) -> Vec<(usize, usize)> {
        let (k, m) = self.dims();
        (0..k)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|&(i, j)| self.contains_cell(i, j))
            .collect()
    }

    fn size(&self) -> usize {
        self.cells().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct FerrersDiagram {
    rows: Vec<usize>,
    m: usize,
}

/// `T_δ` of a diagram together with the per-`i` values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TDelta {
    pub value: usize,
    /// Smallest minimizing number of removed top rows.
    pub argmin: usize,
    /// `T_δ(F, i)` for `i = 0..δ`.
    pub by_rows_removed: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonal {
    /// 1-based index; diagonal 1 is the top-right corner.
    pub index: usize,
    /// 0-based cells ordered by increasing row.
    pub cells: Vec<(usize, usize)>,
}

impl Diagonal {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

impl FerrersDiagram {
    pub fn new(rows: Vec<usize>, m: usize) -> Result<FerrersDiagram> {
        if rows.is_empty() {
            return Err(Error::InvalidDiagram("no rows".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "row cardinalities {rows:?} are not nonincreasing"
            )));
        }
        if rows[0] > m {
            return Err(Error::InvalidDiagram(format!(
                "first row {} exceeds width {m}",
                rows[0]
            )));
        }
        Ok(FerrersDiagram { rows, m })
    }

    /// The `k x m` rectangle.
    pub fn full(k: usize, m: usize) -> FerrersDiagram {
        FerrersDiagram {
            rows: vec![m; k.max(1)],
            m,
        }
    }

    /// Diagram of the free entries of an echelon matrix with pivot vector `v`:
    /// `r_i = n - k - p_i + i`, in a `k x (n-k)` box.
    pub fn from_pivot(v: &PivotVector) -> FerrersDiagram {
        let n = v.len();
        let k = v.weight();
        let rows = v
            .positions()
            .iter()
            .enumerate()
            .map(|(t, &p)| n - k + t + 1 - p)
            .collect();
        FerrersDiagram { rows, m: n - k }
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of nonzero rows.
    pub fn nonzero_rows(&self) -> usize {
        self.rows.iter().take_while(|&&r| r > 0).count()
    }

    /// `|F|`.
    pub fn cardinality(&self) -> usize {
        self.rows.iter().sum()
    }

    /// The same cells with zero rows and empty columns dropped:
    /// `nonzero_rows() x r_1`. The original is recovered by embedding at
    /// row 0, column `m - r_1`.
    pub fn trimmed(&self) -> FerrersDiagram {
        let k = self.nonzero_rows().max(1);
        FerrersDiagram {
            rows: self.rows[..k].to_vec(),
            m: self.rows[0],
        }
    }

    /// Anti-diagonal reflection: the conjugate partition in an `m x k` box.
    pub fn transpose(&self) -> FerrersDiagram {
        let rows = (0..self.m.max(1))
            .map(|c| self.rows.iter().filter(|&&r| r > c).count())
            .collect();
        FerrersDiagram { rows, m: self.k() }
    }

    /// `r'_i <= r_i` for every row, missing rows counting as 0.
    pub fn contains(&self, other: &FerrersDiagram) -> bool {
        other
            .rows
            .iter()
            .enumerate()
            .all(|(i, &r)| r <= self.rows.get(i).copied().unwrap_or(0))
    }

    /// `T_δ(F, i)`: cells left after removing the top `i` rows and the
    /// rightmost `δ-1-i` columns.
    pub fn tdelta_at(&self, delta: usize, i: usize) -> usize {
        assert!(delta >= 1 && i < delta);
        let cut = delta - 1 - i;
        self.rows.iter().skip(i).map(|&r| r.saturating_sub(cut)).sum()
    }

    pub fn tdelta(&self, delta: usize) -> Result<TDelta> {
        if delta < 1 {
            return Err(Error::params("delta must be at least 1"));
        }
        let by_rows_removed: Vec<usize> = (0..delta).map(|i| self.tdelta_at(delta, i)).collect();
        let (argmin, &value) = by_rows_removed
            .iter()
            .enumerate()
            .min_by_key(|&(i, &v)| (v, i))
            .expect("delta >= 1");
        Ok(TDelta {
            value,
            argmin,
            by_rows_removed,
        })
    }

    /// Diagonals `1..=k-1+m`, including empty ones.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        let (k, m) = (self.k(), self.m);
        (1..k + m)
            .map(|index| Diagonal {
                index,
                cells: (0..k)
                    .filter_map(|i| {
                        // i - j + m = index
                        let j = (i + m).checked_sub(index)?;
                        (j < m && self.contains_cell(i, j)).then_some((i, j))
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn to_profile(&self) -> Profile {
        Profile {
            k: self.k(),
            m: self.m,
            cells: self.cells().into_iter().collect(),
        }
    }

    /// Dot picture, one line per row, cells as `•`.
    pub fn render(&self) -> String {
        self.rows
            .iter()
            .map(|&r| {
                let cells: Vec<&str> = (0..self.m).map(|j| if j >= self.m - r { "•" } else { " " }).collect();
                cells.join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl Shape for FerrersDiagram {
    fn dims(&self) -> (usize, usize) {
        (self.k(), self.m)
    }

    #[inline]
    fn contains_cell(&self, i: usize, j: usize) -> bool {
        i < self.rows.len() && j < self.m && j + self.rows[i] >= self.m
    }

    fn size(&self) -> usize {
        self.cardinality()
    }
}

impl fmt::Display for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.rows.iter().join(","), self.m)
    }
}

/// Parses `"6,3,2,2"` or `"6,3,2,2@6"`; the width defaults to `r_1`.
impl FromStr for FerrersDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<FerrersDiagram> {
        let (rows, m) = match s.trim().split_once('@') {
            Some((rows, m)) => (rows, Some(m)),
            None => (s.trim(), None),
        };
        let rows = rows
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row cardinality {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = match m {
            Some(m) => m
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad width {m:?} in {s:?}")))?,
            None => rows.first().copied().unwrap_or(0),
        };
        FerrersDiagram::new(rows, m)
    }
}

impl TryFrom<String> for FerrersDiagram {
    type Error = Error;

    fn try_from(s: String) -> Result<FerrersDiagram> {
        s.parse()
    }
}

impl From<FerrersDiagram> for String {
    fn from(d: FerrersDiagram) -> String {
        d.to_string()
    }
}

/// Rows and columns (0-based) removed or selected as lines.
///
/// Serializes 1-based as `{"rows": [...], "cols": [...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LinesJson", into = "LinesJson")]
pub struct Lines {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct LinesJson {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl TryFrom<LinesJson> for Lines {
    type Error = Error;

    fn try_from(j: LinesJson) -> Result<Lines> {
        let shift = |v: Vec<usize>| -> Result<Vec<usize>> {
            v.into_iter()
                .map(|x| x.checked_sub(1).ok_or_else(|| Error::Parse("lines are 1-based".into())))
                .collect()
        };
        Ok(Lines {
            rows: shift(j.rows)?,
            cols: shift(j.cols)?,
        })
    }
}

impl From<Lines> for LinesJson {
    fn from(l: Lines) -> LinesJson {
        LinesJson {
            rows: l.rows.iter().map(|x| x + 1).collect(),
            cols: l.cols.iter().map(|x| x + 1).collect(),
        }
    }
}

impl Lines {
    pub fn len(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.rows.contains(&i) || self.cols.contains(&j)
    }
}

/// `T_δ` of a profile and its minimizing line selection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileTDelta {
    pub value: usize,
    pub lines: Lines,
}

/// An arbitrary set of cells in a `k x m` grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ProfileJson", into = "ProfileJson")]
pub struct Profile {
    k: usize,
    m: usize,
    cells: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct ProfileJson {
    k: usize,
    m: usize,
    cells: Vec<[usize; 2]>,
}

impl TryFrom<ProfileJson> for Profile {
    type Error = Error;

    fn try_from(j: ProfileJson) -> Result<Profile> {
        if j.cells.iter().any(|&[i, c]| i == 0 || c == 0) {
            return Err(Error::InvalidProfile("cells are 1-based".into()));
        }
        Profile::new(j.k, j.m, j.cells.iter().map(|&[i, c]| (i - 1, c - 1)))
    }
}

impl From<Profile> for ProfileJson {
    fn from(p: Profile) -> ProfileJson {
        ProfileJson {
            k: p.k,
            m: p.m,
            cells: p.cells.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
        }
    }
}

impl Profile {
    /// Cells are 0-based.
    pub fn new<I>(k: usize, m: usize, cells: I) -> Result<Profile>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        if let Some(&(i, j)) = cells.iter().find(|&&(i, j)| i >= k || j >= m) {
            return Err(Error::InvalidProfile(format!(
                "cell ({}, {}) outside {k}x{m}",
                i + 1,
                j + 1
            )));
        }
        if m > 64 {
            return Err(Error::InvalidProfile("at most 64 columns are supported".into()));
        }
        Ok(Profile { k, m, cells })
    }

    pub fn full(k: usize, m: usize) -> Profile {
        Profile::new(k, m, (0..k).flat_map(|i| (0..m).map(move |j| (i, j)))).expect("cells in range")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cell_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    /// `T_δ(P, I, J)`: cells outside the given rows and columns.
    pub fn tdelta_for(&self, lines: &Lines) -> usize {
        self.cells.iter().filter(|&&(i, j)| !lines.covers(i, j)).count()
    }

    /// Number of `(I, J)` pairs with `|I| + |J| = δ - 1`.
    pub fn selection_count(&self, delta: usize) -> u128 {
        let t = delta.saturating_sub(1);
        (0..=t).map(|a| binom(self.k, a) * binom(self.m, t - a)).sum()
    }

    /// Exhaustive minimum of `T_δ(P, I, J)` over `|I| + |J| = δ - 1`.
    ///
    /// Ties go to the smallest `|I|`, then lexicographically smallest `I`,
    /// then `J`.
    pub fn tdelta(&self, delta: usize) -> Result<ProfileTDelta> {
        if delta < 1 || delta - 1 > self.k + self.m {
            return Err(Error::params(format!(
                "delta = {delta} needs between 0 and {} removed lines",
                self.k + self.m
            )));
        }
        let count = self.selection_count(delta);
        if count > PROFILE_SELECTION_CAP {
            return Err(Error::cap("line selections", count, PROFILE_SELECTION_CAP));
        }
        let mut row_masks = vec![0u64; self.k];
        for &(i, j) in &self.cells {
            row_masks[i] |= 1 << j;
        }
        let t = delta - 1;
        let mut best: Option<(usize, Lines)> = None;
        for a in 0..=t.min(self.k) {
            let b = t - a;
            if b > self.m {
                continue;
            }
            for rows in (0..self.k).combinations(a) {
                let kept: Vec<u64> = (0..self.k)
                    .filter(|i| !rows.contains(i))
                    .map(|i| row_masks[i])
                    .collect();
                for cols in (0..self.m).combinations(b) {
                    let removed = cols.iter().fold(0u64, |acc, &j| acc | 1 << j);
                    let value: usize = kept.iter().map(|&r| (r & !removed).count_ones() as usize).sum();
                    if best.as_ref().is_none_or(|(v, _)| value < *v) {
                        best = Some((
                            value,
                            Lines {
                                rows: rows.clone(),
                                cols,
                            },
                        ));
                    }
                }
            }
        }
        let (value, lines) = best.expect("at least one selection is feasible");
        Ok(ProfileTDelta { value, lines })
    }
}

impl Shape for Profile {
    fn dims(&self) -> (usize, usize) {
        (self.k, self.m)
    }

    fn contains_cell(&self, i: usize, j: usize) -> bool {
        self.cells.contains(&(i, j))
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        self.cells.iter().copied().collect()
    }

    fn size(&self) -> usize {
        self.cells.len()
    }
}

impl From<&FerrersDiagram> for Profile {
    fn from(d: &FerrersDiagram) -> Profile {
        d.to_profile()
    }
}

fn binom(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// All nonincreasing row vectors with entries `<= m` and `k` rows, in
/// lexicographically decreasing order.
pub fn all_diagrams(k: usize, m: usize) -> Vec<FerrersDiagram> {
    fn rec(k: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for r in (0..=cap).rev() {
            prefix.push(r);
            rec(k, r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, m, &mut Vec::new(), &mut out);
    out.into_iter().map(|rows| FerrersDiagram { rows, m }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> FerrersDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let f = d("6,3,2,2");
        assert_eq!((f.k(), f.m()), (4, 6));
        assert_eq!(f.to_string(), "6,3,2,2@6");
        assert_eq!(d("3,2@5").m(), 5);
        assert!("3,4".parse::<FerrersDiagram>().is_err());
        assert!("3,2@2".parse::<FerrersDiagram>().is_err());
        assert!("a,b".parse::<FerrersDiagram>().is_err());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "\"6,3,2,2@6\"");
        assert_eq!(serde_json::from_str::<FerrersDiagram>(&json).unwrap(), f);
    }

    #[test]
    fn cell_convention() {
        let f = d("6,3,2,2");
        assert!(f.contains_cell(1, 3) && !f.contains_cell(1, 2));
        assert!(f.contains_cell(3, 4) && !f.contains_cell(3, 3));
        assert_eq!(f.cells().len(), 13);
    }

    #[test]
    fn tdelta_worked_example() {
        let f = d("6,3,2,2");
        let t4 = f.tdelta(4).unwrap();
        assert_eq!(t4.by_rows_removed, vec![3, 1, 2, 2]);
        assert_eq!((t4.value, t4.argmin), (1, 1));
        assert_eq!(f.tdelta(3).unwrap().value, 4);
        assert_eq!(f.tdelta(2).unwrap().value, 7);
        assert_eq!(d("5,5,5").tdelta(1).unwrap().value, 15);
        assert!(f.tdelta(0).is_err());
    }

    #[test]
    fn profile_tdelta_examples() {
        let full = Profile::full(3, 5);
        let t = full.tdelta(3).unwrap();
        assert_eq!(t.value, 5);
        assert_eq!(
            t.lines,
            Lines {
                rows: vec![0, 1],
                cols: vec![]
            }
        );

        assert_eq!(d("6,3,2,2").to_profile().tdelta(2).unwrap().value, 7);

        let id = Profile::new(3, 3, [(0, 0), (1, 1), (2, 2)]).unwrap();
        let t = id.tdelta(2).unwrap();
        assert_eq!(t.value, 2);
        assert_eq!(
            t.lines,
            Lines {
                rows: vec![],
                cols: vec![0]
            }
        );
        assert!(id.tdelta(8).is_err());
    }

    /// Removing any single line of the 3x3 identity leaves two cells.
    #[test]
    fn identity_profile_every_line_leaves_two() {
        let id = Profile::new(3, 3, [(0, 0), (1, 1), (2, 2)]).unwrap();
        for x in 0..3 {
            let r = Lines {
                rows: vec![x],
                cols: vec![],
            };
            let c = Lines {
                rows: vec![],
                cols: vec![x],
            };
            assert_eq!(id.tdelta_for(&r), 2);
            assert_eq!(id.tdelta_for(&c), 2);
        }
    }

    #[test]
    fn diagonals_examples() {
        let cards: Vec<usize> = d("4,2,2,1").diagonals().iter().map(Diagonal::len).collect();
        assert_eq!(cards[..4], [1, 2, 3, 3]);
        let sq = FerrersDiagram::full(5, 5).diagonals();
        assert_eq!(sq.len(), 9);
        assert_eq!(sq[4].len(), 5);
        let one = d("1").diagonals();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].cells, vec![(0, 0)]);
    }

    #[test]
    fn from_pivot_examples() {
        let p = |s: &str| FerrersDiagram::from_pivot(&s.parse().unwrap());
        assert_eq!(p("1111100000").rows(), [5, 5, 5, 5, 5]);
        assert_eq!(p("1000110011").rows(), [5, 2, 2, 0, 0]);
        assert_eq!(p("0011011010").rows(), [3, 3, 2, 2, 1]);
        assert_eq!(p("0101000111").rows(), [4, 3, 0, 0, 0]);
        assert_eq!(p("1000110011").m(), 5);
    }

    #[test]
    fn transpose_contains_render() {
        let t = d("6,3,2,2").transpose();
        assert_eq!(t.rows(), [4, 4, 2, 1, 1, 1]);
        assert_eq!((t.k(), t.m()), (6, 4));
        assert_eq!(t.transpose(), d("6,3,2,2"));
        assert!(d("3,3").contains(&d("3,2")));
        assert!(!d("3,2").contains(&d("3,3")));
        assert_eq!(
            d("6,3,2,2").render(),
            "• • • • • •\n      • • •\n        • •\n        • •"
        );
        let z = d("4,3,0,0");
        assert_eq!(z.trimmed(), d("4,3"));
        assert_eq!(z.transpose().rows(), [2, 2, 2, 1]);
    }

    #[test]
    fn all_diagrams_counts() {
        // partitions fitting in a 2x2 box: C(4,2)
        assert_eq!(all_diagrams(2, 2).len(), 6);
        assert_eq!(all_diagrams(3, 3).len(), 20);
    }

    #[test]
    fn profile_json_is_one_based() {
        let p = Profile::new(2, 3, [(0, 2), (1, 1)]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"k":2,"m":3,"cells":[[1,3],[2,2]]}"#);
        assert_eq!(serde_json::from_str::<Profile>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Profile>(r#"{"k":1,"m":1,"cells":[[0,1]]}"#).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn diagram(max_k: usize, max_m: usize) -> impl Strategy<Value = FerrersDiagram> {
            (1..=max_k, 1..=max_m).prop_flat_map(|(k, m)| {
                proptest::collection::vec(0..=m, k).prop_map(move |mut rows| {
                    rows.sort_unstable_by(|a, b| b.cmp(a));
                    FerrersDiagram::new(rows, m).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn tdelta_one_is_cardinality(f in diagram(6, 6)) {
                prop_assert_eq!(f.tdelta(1).unwrap().value, f.cardinality());
            }

            #[test]
            fn diagonal_cardinalities_sum_to_size(f in diagram(6, 6)) {
                let total: usize = f.diagonals().iter().map(Diagonal::len).sum();
                prop_assert_eq!(total, f.cardinality());
                for dg in f.diagonals() {
                    for (i, j) in dg.cells {
                        prop_assert_eq!(i + f.m() - j, dg.index);
                    }
                }
            }

            #[test]
            fn tdelta_monotone_under_containment(
                f in diagram(5, 5),
                shrink in proptest::collection::vec(0usize..3, 5),
            ) {
                let mut rows: Vec<usize> = f.rows().iter().zip(&shrink)
                    .map(|(&r, &s)| r.saturating_sub(s)).collect();
                rows.sort_unstable_by(|a, b| b.cmp(a));
                let g = FerrersDiagram::new(rows, f.m()).unwrap();
                prop_assert!(f.contains(&g));
                for delta in 1..=f.k() {
                    prop_assert!(g.tdelta(delta).unwrap().value <= f.tdelta(delta).unwrap().value);
                }
            }

            #[test]
            fn transpose_preserves_tdelta_and_size(f in diagram(5, 5)) {
                let t = f.transpose();
                prop_assert_eq!(t.cardinality(), f.cardinality());
                for delta in 1..=f.k().min(f.m()) {
                    prop_assert_eq!(t.tdelta(delta).unwrap().value, f.tdelta(delta).unwrap().value);
                }
            }
        }
    }

    /// Profile minimization agrees with the row/column formula on diagrams.
    #[test]
    fn profile_tdelta_matches_ferrers_exhaustively() {
        for k in 1..=5 {
            for m in 1..=5 {
                for f in all_diagrams(k, m) {
                    let p = f.to_profile();
                    for delta in 1..=k {
                        assert_eq!(
                            p.tdelta(delta).unwrap().value,
                            f.tdelta(delta).unwrap().value,
                            "{f} delta={delta}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn full_rectangle_from_leading_ones() {
        for n in 2..10 {
            for k in 1..n {
                let s: String = (0..n).map(|i| if i < k { '1' } else { '0' }).collect();
                let f = FerrersDiagram::from_pivot(&s.parse().unwrap());
                assert_eq!(f, FerrersDiagram::full(k, n - k));
            }
        }
    }
}
