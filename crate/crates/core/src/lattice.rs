//! Integer row lattices: Hermite normal form and saturation.
//!
//! Rows are vectors in ℤ^m. The Hermite form used here has its pivots in the
//! leftmost nonzero column of each row, pivots positive, and entries above a
//! pivot reduced into `[0, pivot)`, so two generating sets span the same
//! lattice exactly when their forms are equal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

fn sub_scaled(target: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

/// Hermite normal form of the row lattice; zero rows are dropped.
pub fn hnf(rows: &[Vec<BigInt>]) -> IntMatrix {
    let mut a: IntMatrix = rows
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    let Some(ncols) = a.first().map(Vec::len) else {
        return a;
    };
    let mut r = 0;
    for col in 0..ncols {
        if r == a.len() {
            break;
        }
        loop {
            let Some(p) = (r..a.len())
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()))
            else {
                break;
            };
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[r][col]);
                let (head, tail) = a.split_at_mut(i);
                sub_scaled(&mut tail[0], &head[r], &q);
                clean &= a[i][col].is_zero();
            }
            if clean {
                break;
            }
        }
        if a[r][col].is_zero() {
            continue;
        }
        if a[r][col].is_negative() {
            for v in a[r].iter_mut() {
                *v = -v.clone();
            }
        }
        for i in 0..r {
            let q = a[i][col].div_floor(&a[r][col]);
            if !q.is_zero() {
                let (head, tail) = a.split_at_mut(r);
                sub_scaled(&mut head[i], &tail[0], &q);
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// A basis (in Hermite form) of `span_ℚ(rows) ∩ ℤ^m`.
///
/// Column-reduces the row matrix with unimodular operations `B·U = [H | 0]`
/// while tracking `U⁻¹`; the first `rank` rows of `U⁻¹` then span the
/// saturation.
pub fn saturate(rows: &[Vec<BigInt>]) -> IntMatrix {
    let Some(m) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut b: IntMatrix = rows.to_vec();
    let mut uinv: IntMatrix = (0..m)
        .map(|i| (0..m).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut p = 0;
    for row in 0..b.len() {
        if p == m {
            break;
        }
        loop {
            let Some(j) = (p..m)
                .filter(|&j| !b[row][j].is_zero())
                .min_by(|&i, &j| b[row][i].abs().cmp(&b[row][j].abs()))
            else {
                break;
            };
            if j != p {
                for r in b.iter_mut() {
                    r.swap(p, j);
                }
                uinv.swap(p, j);
            }
            let mut clean = true;
            for j in p + 1..m {
                if b[row][j].is_zero() {
                    continue;
                }
                let q = b[row][j].div_floor(&b[row][p]);
                for r in b.iter_mut() {
                    let delta = &q * &r[p];
                    r[j] -= delta;
                }
                // column_j -= q·column_p  ⇒  row_p(U⁻¹) += q·row_j(U⁻¹)
                let src = uinv[j].clone();
                for (t, s) in uinv[p].iter_mut().zip(&src) {
                    *t += &q * s;
                }
                clean &= b[row][j].is_zero();
            }
            if clean {
                break;
            }
        }
        if !b[row][p].is_zero() {
            p += 1;
        }
    }
    uinv.truncate(p);
    hnf(&uinv)
}

/// True when both generating sets span the same ℤ-lattice.
pub fn same_lattice(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    hnf(a) == hnf(b)
}

/// True when `v` lies in the ℤ-span of `basis`.
pub fn contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut extended = basis.to_vec();
    extended.push(v.to_vec());
    hnf(&extended) == hnf(basis)
}

/// Rank over ℚ.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    hnf(rows).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturation_examples() {
        assert_eq!(
            saturate(&to_matrix(&[vec![2, 0], vec![0, 2]])),
            to_matrix(&[vec![1, 0], vec![0, 1]])
        );
        assert_eq!(saturate(&to_matrix(&[vec![2, 4]])), to_matrix(&[vec![1, 2]]));
        assert_eq!(saturate(&to_matrix(&[vec![1, 0]])), to_matrix(&[vec![1, 0]]));
    }

    #[test]
    fn saturation_of_dependent_rows() {
        let rows = to_matrix(&[vec![6, 9, 3], vec![4, 6, 2], vec![0, 0, 0]]);
        assert_eq!(saturate(&rows), to_matrix(&[vec![2, 3, 1]]));
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let h = hnf(&to_matrix(&[vec![3, 5], vec![0, 2], vec![3, 9]]));
        assert_eq!(h, to_matrix(&[vec![3, 1], vec![0, 2]]));
        assert!(same_lattice(&h, &to_matrix(&[vec![3, 5], vec![0, 2]])));
        assert!(contains(&h, &[BigInt::from(6), BigInt::from(12)]));
        assert!(!contains(&h, &[BigInt::from(1), BigInt::from(0)]));
    }
}
