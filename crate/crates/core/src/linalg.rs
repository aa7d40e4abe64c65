//! Exact Gaussian elimination over a [`Field`].

use crate::poly::Field;

/// Row-reduced echelon form of a dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<E> {
    /// Nonzero rows of the reduced matrix; row `k` has a leading 1 in
    /// column `pivots[k]`.
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<E> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Reduced row echelon form. Columns are scanned left to right; among the
/// candidate rows the pivot with the smallest [`Field::pivot_cost`] wins,
/// ties going to the earliest row.
pub fn rref<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Echelon<F::Elem> {
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    assert!(m.iter().all(|r| r.len() == ncols), "ragged matrix");
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == m.len() {
            break;
        }
        let best =
            (top..m.len()).filter(|&r| !field.is_zero(&m[r][col])).min_by_key(|&r| (field.pivot_cost(&m[r][col]), r));
        let Some(p) = best else { continue };
        m.swap(top, p);
        let inv = field.inv(&m[top][col]);
        for x in &mut m[top][col..ncols] {
            *x = field.mul(x, &inv);
        }
        let pivot_row = m[top].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == top || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for c in col..ncols {
                let delta = field.mul(&factor, &pivot_row[c]);
                row[c] = field.sub(&row[c], &delta);
            }
        }
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);
    Echelon { rows: m, pivots, ncols }
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    rref(field, rows, ncols).rank()
}

/// Basis of `{ z : rows * z = 0 }`, one vector per free column, in column
/// order. Each basis vector has a 1 at its free column.
pub fn kernel_basis<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let ech = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); ncols];
            v[free] = field.one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = field.neg(&row[free]);
            }
            v
        })
        .collect()
}

/// Whether two sets of vectors span the same subspace.
pub fn same_span<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>], ncols: usize) -> bool {
    rref(field, a, ncols) == rref(field, b, ncols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rationals;
    use num_rational::BigRational;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect()).collect()
    }

    fn mat_vec(rows: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
        rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&Rationals, &m, 3), 2);
        let ker = kernel_basis(&Rationals, &m, 3);
        assert_eq!(ker.len(), 1);
        assert!(mat_vec(&m, &ker[0]).iter().all(|x| *x == Rationals.zero()));
    }

    #[test]
    fn empty_and_zero_matrices() {
        assert_eq!(kernel_basis(&Rationals, &[], 3).len(), 3);
        assert_eq!(rank(&Rationals, &mat(&[&[0, 0]]), 2), 0);
    }

    #[test]
    fn span_comparison() {
        let a = mat(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = mat(&[&[1, 2, 1], &[1, 0, -1]]);
        let c = mat(&[&[1, 0, 0]]);
        assert!(same_span(&Rationals, &a, &b, 3));
        assert!(!same_span(&Rationals, &a, &c, 3));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rank_nullity(entries in proptest::collection::vec(-3i64..=3, 12)) {
                let rows: Vec<Vec<BigRational>> = entries
                    .chunks(4)
                    .map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect())
                    .collect();
                let ker = kernel_basis(&Rationals, &rows, 4);
                prop_assert_eq!(rank(&Rationals, &rows, 4) + ker.len(), 4);
                for v in &ker {
                    prop_assert!(mat_vec(&rows, v).iter().all(|x| *x == Rationals.zero()));
                }
                prop_assert_eq!(rank(&Rationals, &ker, 4), ker.len());
            }
        }
    }
}
