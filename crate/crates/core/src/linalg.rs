// SPDX-License-Identifier: Apache-2.0

//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Every intermediate entry is a minor of the input, so all divisions are
//! exact. Arithmetic is checked `i128`; overflow is reported, never wrapped.

use crate::error::{Error, Result};

type Matrix = Vec<Vec<i128>>;

fn to_i128(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn cross(a: i128, b: i128, c: i128, d: i128, div: i128) -> Result<i128> {
    let ad = a.checked_mul(d).ok_or(Error::Overflow)?;
    let bc = b.checked_mul(c).ok_or(Error::Overflow)?;
    let num = ad.checked_sub(bc).ok_or(Error::Overflow)?;
    debug_assert_eq!(num % div, 0, "Bareiss division must be exact");
    Ok(num / div)
}

/// Row-echelon reduction; returns the rank and the original indices of the
/// pivot rows, which form a maximal independent set of rows.
pub fn rank_with_pivot_rows(rows: &[Vec<i64>]) -> Result<(usize, Vec<usize>)> {
    let mut a = to_i128(rows);
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut order: Vec<usize> = (0..n).collect();
    let mut prev = 1i128;
    let mut r = 0;
    for col in 0..cols {
        if r == n {
            break;
        }
        let Some(pivot) = (r..n).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, pivot);
        order.swap(r, pivot);
        for i in (r + 1)..n {
            for j in (col + 1)..cols {
                a[i][j] = cross(a[r][col], a[i][col], a[r][j], a[i][j], prev)?;
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        r += 1;
    }
    let mut pivots = order[..r].to_vec();
    pivots.sort_unstable();
    Ok((r, pivots))
}

pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    rank_with_pivot_rows(rows).map(|(r, _)| r)
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<i64>]) -> Result<i128> {
    let mut a = to_i128(rows);
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| a[i][k] != 0) else {
            return Ok(0);
        };
        if pivot != k {
            a.swap(k, pivot);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                a[i][j] = cross(a[k][k], a[i][k], a[k][j], a[i][j], prev)?;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Nonzero integer kernel vector of an `n × k` matrix of rank exactly `k − 1`,
/// by signed maximal minors of `k − 1` independent rows.
pub fn kernel_vector_corank_one(rows: &[Vec<i64>]) -> Result<Option<Vec<i128>>> {
    let k = rows.first().map_or(0, Vec::len);
    let (r, pivots) = rank_with_pivot_rows(rows)?;
    if k == 0 || r + 1 != k {
        return Ok(None);
    }
    let mut x = Vec::with_capacity(k);
    for j in 0..k {
        let minor: Vec<Vec<i64>> = pivots
            .iter()
            .map(|&i| {
                rows[i]
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let d = determinant(&minor)?;
        x.push(if j % 2 == 0 { d } else { -d });
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 3]]).unwrap(), 5);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]).unwrap(), -1);
        assert_eq!(determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]).unwrap(), 0);
    }

    #[test]
    fn rank_skips_zero_columns() {
        let m = vec![vec![0, 1, 2], vec![0, 2, 4], vec![0, 1, 3]];
        assert_eq!(rank_with_pivot_rows(&m).unwrap(), (2, vec![0, 2]));
    }

    #[test]
    fn kernel_of_dependent_columns() {
        // columns c0, c1, c2 with c2 = c0 + c1
        let m = vec![vec![1, 0, 1], vec![0, 1, 1], vec![2, 3, 5], vec![1, 1, 2]];
        let x = kernel_vector_corank_one(&m).unwrap().unwrap();
        for row in &m {
            let s: i128 = row.iter().zip(&x).map(|(&a, &b)| a as i128 * b).sum();
            assert_eq!(s, 0);
        }
        assert!(x.iter().all(|&v| v != 0));
    }

    fn cofactor_det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 1 {
            return m[0][0] as i128;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * cofactor_det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor_expansion(
            n in 1usize..5,
            entries in proptest::collection::vec(-4i64..5, 16),
        ) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| entries[i * 4..i * 4 + n].to_vec()).collect();
            prop_assert_eq!(determinant(&m).unwrap(), cofactor_det(&m));
            prop_assert_eq!(rank(&m).unwrap() == n, cofactor_det(&m) != 0);
        }
    }
}
