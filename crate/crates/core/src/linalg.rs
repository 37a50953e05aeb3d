//! Exact integer and rational linear algebra: fraction-free rank and
//! determinant, saturated integer kernels via unimodular column operations,
//! and rational solvers. No floating point; `BigInt`/`BigRational`
//! internally, `i64` at the boundaries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix (rows of equal length) by fraction-free Bareiss
/// elimination.
pub fn bigint_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(piv) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

pub fn i64_rank(m: &[Vec<i64>]) -> usize {
    bigint_rank(
        m.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Determinant of a square integer matrix by fraction-free Bareiss.
pub fn determinant_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(
        a.iter().all(|r| r.len() == n),
        "determinant needs a square matrix"
    );
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, piv);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    determinant_big(
        m.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Basis of the integer (right) kernel `{x : a x = 0}` of an integer matrix
/// given by rows. The returned vectors span the full integer kernel (the
/// lattice is saturated by construction: they are columns of a unimodular
/// transform).
pub fn integer_kernel(a: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let nrows = a.len();
    // Work columns: (image part, transform part).
    let mut cols: Vec<(Vec<BigInt>, Vec<BigInt>)> = (0..ncols)
        .map(|j| {
            let img = (0..nrows).map(|i| BigInt::from(a[i][j])).collect();
            let mut u = vec![BigInt::zero(); ncols];
            u[j] = BigInt::one();
            (img, u)
        })
        .collect();
    let mut active: Vec<usize> = (0..ncols).collect();
    for r in 0..nrows {
        loop {
            let nz: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&c| !cols[c].0[r].is_zero())
                .collect();
            if nz.len() <= 1 {
                break;
            }
            let &small = nz
                .iter()
                .min_by_key(|&&c| cols[c].0[r].abs())
                .expect("nonempty");
            for &c in &nz {
                if c == small {
                    continue;
                }
                let q = &cols[c].0[r] / &cols[small].0[r];
                if !q.is_zero() {
                    let (simg, su) = cols[small].clone();
                    let (img, u) = &mut cols[c];
                    for i in 0..nrows {
                        let t = &simg[i] * &q;
                        img[i] -= t;
                    }
                    for i in 0..ncols {
                        let t = &su[i] * &q;
                        u[i] -= t;
                    }
                }
            }
        }
        if let Some(pos) = active.iter().position(|&c| !cols[c].0[r].is_zero()) {
            active.remove(pos);
        }
    }
    active
        .into_iter()
        .map(|c| {
            debug_assert!(cols[c].0.iter().all(|x| x.is_zero()));
            cols[c].1.clone()
        })
        .collect()
}

/// Outcome of solving a linear system exactly over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Vec<BigRational>),
    Inconsistent,
    Underdetermined,
}

/// Solves `sum_j x_j * cols[j] = target` over the rationals.
pub fn solve_columns(cols: &[Vec<i64>], target: &[i64]) -> SolveOutcome {
    let rows = target.len();
    let n = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            (0..n)
                .map(|c| BigRational::from(BigInt::from(cols[c][r])))
                .chain(std::iter::once(BigRational::from(BigInt::from(target[r]))))
                .collect()
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&n) {
        return SolveOutcome::Inconsistent;
    }
    if pivots.len() < n {
        return SolveOutcome::Underdetermined;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][n].clone();
    }
    SolveOutcome::Unique(x)
}

/// In-place reduced row echelon form; returns pivot column indices in row order.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    if m.is_empty() {
        return Vec::new();
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(piv) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, piv);
        let inv = m[row][col].recip();
        for entry in m[row][col..cols].iter_mut() {
            let v = &*entry * &inv;
            *entry = v;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (entry, p) in m[r][col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                    let v = &*entry - &factor * p;
                    *entry = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det() {
        let m = vec![
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(-1)],
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)],
        ];
        assert_eq!(bigint_rank(m), 3);
        assert_eq!(determinant(&[vec![2, 1], vec![1, 1]]), BigInt::from(1));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }

    #[test]
    fn kernel_is_saturated() {
        // Kernel of (2 4 0; 0 0 3) in Z^3 is spanned by (2,-1,0): the
        // primitive vector, not (4,-2,0).
        let k = integer_kernel(&[vec![2, 4, 0], vec![0, 0, 3]], 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        let g = num_integer::gcd(num_integer::gcd(v[0].clone(), v[1].clone()), v[2].clone());
        assert!(g.is_one());
        assert_eq!(&v[0] * 2 + &v[1] * 4, BigInt::zero());
        assert!(v[2].is_zero());
    }

    #[test]
    fn kernel_of_full_rank_map_is_trivial() {
        let k = integer_kernel(&[vec![1, 0], vec![0, 1]], 2);
        assert!(k.is_empty());
    }

    #[test]
    fn solver_outcomes() {
        let cols = vec![vec![1, 0], vec![1, 1]];
        match solve_columns(&cols, &[3, 2]) {
            SolveOutcome::Unique(x) => {
                assert_eq!(x[0], BigRational::from(BigInt::from(1)));
                assert_eq!(x[1], BigRational::from(BigInt::from(2)));
            }
            other => panic!("expected unique solution, got {other:?}"),
        }
        assert_eq!(
            solve_columns(&[vec![1, 0]], &[0, 1]),
            SolveOutcome::Inconsistent
        );
        assert_eq!(
            solve_columns(&[vec![1, 0], vec![2, 0]], &[1, 0]),
            SolveOutcome::Underdetermined
        );
    }
}
