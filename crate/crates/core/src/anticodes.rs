//! Maximum-dimension anticodes on profiles and the line-cover bound on the
//! largest rank in a span.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{Matrix, MatrixSpace};
use crate::shapes::{Lines, Profile};

/// Space of all matrices supported on the profile cells lying on the lines
/// of a `T_δ`-minimizing selection. Every element has rank at most `δ-1`;
/// the dimension is `|P| - T_δ(P)`.
pub fn anticode_max(profile: &Profile, delta: usize, field: &Field) -> Result<(MatrixSpace, Lines)> {
    let lines = profile.tdelta(delta)?.lines;
    let cells = profile.cell_set().iter().copied().filter(|&(i, j)| lines.covers(i, j));
    let space = MatrixSpace::from_cells(field, profile.k(), profile.m(), cells);
    Ok((space, lines))
}

/// 0-1 matrix over GF(2) with ones at the leading positions of the reduced
/// basis.
pub fn pattern_matrix(space: &MatrixSpace) -> Matrix {
    let f2 = Field::new(2, 1).expect("GF(2) exists");
    let mut out = Matrix::zeros(f2, space.nrows(), space.ncols());
    for (i, j) in space.leading_positions() {
        out.set(i, j, 1);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCover {
    pub rho: usize,
    pub lines: Lines,
}

/// Minimum set of rows and columns covering every nonzero entry.
///
/// Computed from a maximum matching of the bipartite row/column graph: with
/// `Z` the vertices reachable from unmatched rows along alternating paths,
/// the cover is the rows outside `Z` plus the columns inside `Z`.
pub fn min_line_cover(b: &Matrix) -> LineCover {
    let (k, m) = (b.nrows(), b.ncols());
    let adj: Vec<Vec<usize>> = (0..k).map(|i| (0..m).filter(|&j| b.get(i, j) != 0).collect()).collect();
    let mut match_col: Vec<Option<usize>> = vec![None; m];
    let mut match_row: Vec<Option<usize>> = vec![None; k];

    fn augment(
        i: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_col: &mut [Option<usize>],
        match_row: &mut [Option<usize>],
    ) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            let free = match match_col[j] {
                None => true,
                Some(i2) => augment(i2, adj, seen, match_col, match_row),
            };
            if free {
                match_col[j] = Some(i);
                match_row[i] = Some(j);
                return true;
            }
        }
        false
    }

    for i in 0..k {
        let mut seen = vec![false; m];
        augment(i, &adj, &mut seen, &mut match_col, &mut match_row);
    }

    let mut row_in_z = vec![false; k];
    let mut col_in_z = vec![false; m];
    let mut stack: Vec<usize> = (0..k).filter(|&i| match_row[i].is_none()).collect();
    for &i in &stack {
        row_in_z[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if col_in_z[j] {
                continue;
            }
            col_in_z[j] = true;
            if let Some(i2) = match_col[j] {
                if !row_in_z[i2] {
                    row_in_z[i2] = true;
                    stack.push(i2);
                }
            }
        }
    }
    let lines = Lines {
        rows: (0..k).filter(|&i| !row_in_z[i]).collect(),
        cols: (0..m).filter(|&j| col_in_z[j]).collect(),
    };
    debug_assert_eq!(lines.len(), match_row.iter().flatten().count());
    LineCover {
        rho: lines.len(),
        lines,
    }
}

/// `ρ` of the space: the line-cover number of its pattern matrix. Some
/// element of the space has at least this rank.
pub fn rank_reach_lower_bound(space: &MatrixSpace) -> usize {
    min_line_cover(&pattern_matrix(space)).rho
}

/// Brute-force minimum line cover, for matrices with few rows and columns.
pub fn min_line_cover_brute(b: &Matrix) -> Result<usize> {
    let (k, m) = (b.nrows(), b.ncols());
    if k + m > 24 {
        return Err(Error::cap("line subsets", 1u128 << (k + m), 1 << 24));
    }
    let ones = b.support();
    let best = (0u32..1 << (k + m))
        .filter(|mask| {
            ones.iter()
                .all(|&(i, j)| mask >> i & 1 == 1 || mask >> (k + j) & 1 == 1)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{verify_anticode, VerifyMode};
    use crate::shapes::FerrersDiagram;

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    fn pattern(k: usize, m: usize, ones: &[(usize, usize)]) -> Matrix {
        let mut b = Matrix::zeros(f2(), k, m);
        for &(i, j) in ones {
            b.set(i, j, 1);
        }
        b
    }

    #[test]
    fn anticode_examples() {
        let p = "6,3,2,2".parse::<FerrersDiagram>().unwrap().to_profile();
        let (a, lines) = anticode_max(&p, 2, &f2()).unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(lines.len(), 1);
        assert!(verify_anticode(&a, 1, VerifyMode::Exhaustive).unwrap().ok);

        let full = Profile::full(3, 4);
        for delta in 1..=3 {
            let (a, _) = anticode_max(&full, delta, &f2()).unwrap();
            assert_eq!(a.dim(), 4 * (delta - 1));
        }
        assert_eq!(anticode_max(&p, 1, &f2()).unwrap().0.dim(), 0);
    }

    #[test]
    fn pattern_examples() {
        let fld = f2();
        let e11 = Matrix::unit(fld.clone(), 2, 2, 0, 0);
        let s = MatrixSpace::span(&fld, 2, 2, [e11.clone()]).unwrap();
        assert_eq!(pattern_matrix(&s), pattern(2, 2, &[(0, 0)]));
        let both = e11.add(&Matrix::unit(fld.clone(), 2, 2, 1, 1)).unwrap();
        let s = MatrixSpace::span(&fld, 2, 2, [e11, both]).unwrap();
        assert_eq!(pattern_matrix(&s), pattern(2, 2, &[(0, 0), (1, 1)]));
        let z = MatrixSpace::zero(&fld, 2, 3);
        assert!(pattern_matrix(&z).is_zero());
        assert_eq!(rank_reach_lower_bound(&z), 0);
    }

    #[test]
    fn cover_examples() {
        assert_eq!(min_line_cover(&pattern(3, 3, &[(0, 0), (1, 1), (2, 2)])).rho, 3);
        let row = pattern(3, 4, &[(1, 0), (1, 1), (1, 2), (1, 3)]);
        let c = min_line_cover(&row);
        assert_eq!((c.rho, c.lines.rows.clone()), (1, vec![1]));
        let l = pattern(2, 2, &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(min_line_cover(&l).rho, 2);
        assert_eq!(min_line_cover_brute(&l).unwrap(), 2);
    }

    #[test]
    fn cover_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let k = rng.gen_range(1..=5);
            let m = rng.gen_range(1..=5);
            let n_ones = rng.gen_range(0..=12.min(k * m));
            let mut ones = Vec::new();
            while ones.len() < n_ones {
                let c = (rng.gen_range(0..k), rng.gen_range(0..m));
                if !ones.contains(&c) {
                    ones.push(c);
                }
            }
            let b = pattern(k, m, &ones);
            let c = min_line_cover(&b);
            assert_eq!(c.rho, min_line_cover_brute(&b).unwrap());
            for &(i, j) in &ones {
                assert!(c.lines.covers(i, j));
            }
        }
    }

    #[test]
    fn line_selection_json() {
        let l = Lines {
            rows: vec![0, 2],
            cols: vec![1],
        };
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"rows":[1,3],"cols":[2]}"#);
        assert_eq!(serde_json::from_str::<Lines>(&s).unwrap(), l);
    }

    mod props {
        use super::*;
        use crate::oracle::rank_distribution;
        use proptest::prelude::*;

        fn space() -> impl Strategy<Value = MatrixSpace> {
            (1usize..=4, 1usize..=4, 1usize..=4).prop_flat_map(|(k, m, dim)| {
                proptest::collection::vec(proptest::collection::vec(0u32..2, k * m), dim).prop_map(move |mats| {
                    let mats = mats.into_iter().map(|d| Matrix::from_vec(f2(), k, m, d).unwrap());
                    MatrixSpace::span(&f2(), k, m, mats).unwrap()
                })
            })
        }

        proptest! {
            /// Some element reaches the line-cover number of the pattern.
            #[test]
            fn some_element_reaches_rho(s in space()) {
                let rho = rank_reach_lower_bound(&s);
                let top = *rank_distribution(&s).unwrap().keys().next_back().unwrap();
                prop_assert!(top >= rho, "max rank {top} < rho {rho}");
            }
        }
    }
}
