//! Dense exact linear algebra over the rationals.
//!
//! Matrices here are small (one row per basis vector, one column per chart
//! coordinate), so everything is a plain row-major `Vec<Rat>`.

use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{format_rat, Rat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is explicit so that a matrix
    /// with no rows still knows its width.
    ///
    /// Panics if some row does not have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<Rat>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length must equal column count");
            data.extend(row.iter().cloned());
        }
        Mat { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Rat]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// The submatrix made of the listed columns, in the listed order.
    pub fn select_columns(&self, columns: &[usize]) -> Mat {
        let rows: Vec<Vec<Rat>> = self
            .iter_rows()
            .map(|r| columns.iter().map(|&c| r[c].clone()).collect())
            .collect();
        Mat::from_rows(columns.len(), &rows)
    }

    /// Row vector times matrix: `c · self`.
    pub fn left_mul(&self, c: &[Rat]) -> Vec<Rat> {
        assert_eq!(c.len(), self.rows);
        let mut out = vec![Rat::zero(); self.cols];
        for (ci, row) in c.iter().zip(self.iter_rows()) {
            if ci.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                *o += ci * x;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            self.iter_rows().map(|r| r.iter().map(format_rat).collect()).collect();
        write!(f, "Mat{rows:?}")
    }
}

/// Output of a row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Reduced matrix, same shape as the input; zero rows sit at the bottom.
    pub reduced: Mat,
    /// Pivot column of each nonzero row, in row order (0-based).
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of the reduced matrix.
    pub fn basis(&self) -> Mat {
        let rows: Vec<Vec<Rat>> = (0..self.rank()).map(|i| self.reduced.row(i).to_vec()).collect();
        Mat::from_rows(self.reduced.cols(), &rows)
    }
}

/// Reduced row echelon form with pivots chosen left to right.
pub fn rref(m: &Mat) -> Echelon {
    let order: Vec<usize> = (0..m.cols()).collect();
    rref_with_column_priority(m, &order)
}

/// Row reduction where pivot columns are tried in the order given by
/// `priority` (a permutation of `0..cols`, highest priority first).
///
/// The result equals permuting the columns by `priority`, running [`rref`]
/// and permuting back. Rows come out in pivot-discovery order.
pub fn rref_with_column_priority(m: &Mat, priority: &[usize]) -> Echelon {
    assert!(is_permutation(priority, m.cols()), "priority must be a permutation of the columns");
    let mut r = m.clone();
    let mut pivots = Vec::new();
    let mut next = 0;
    for &col in priority {
        if next == r.rows() {
            break;
        }
        let Some(found) = (next..r.rows()).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        r.swap_rows(found, next);
        let inv = r[(next, col)].recip();
        for j in 0..r.cols() {
            let scaled = &r[(next, j)] * &inv;
            r[(next, j)] = scaled;
        }
        for i in 0..r.rows() {
            if i == next || r[(i, col)].is_zero() {
                continue;
            }
            let factor = r[(i, col)].clone();
            for j in 0..r.cols() {
                if r[(next, j)].is_zero() {
                    continue;
                }
                let delta = &factor * &r[(next, j)];
                r[(i, j)] -= delta;
            }
        }
        pivots.push(col);
        next += 1;
    }
    Echelon { reduced: r, pivots }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

/// Canonical basis of `{v : m·v = 0}`: one vector per free column, with a
/// 1 in that column, zeros in the other free columns, and pivot entries
/// filled by back-substitution. Free columns ascend.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<Rat>> {
    let ech = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rat::zero(); n];
            v[f] = Rat::one();
            for (row, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.reduced[(row, f)].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `c · basis_rows = v`, if `v` is in the row space.
///
/// Rows may be dependent; free coefficients are then set to zero.
pub fn member(basis_rows: &Mat, v: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(v.len(), basis_rows.cols(), "vector length must equal column count");
    let k = basis_rows.rows();
    // Solve basisᵀ c = v through the augmented system [basisᵀ | v].
    let t = basis_rows.transpose();
    let aug_rows: Vec<Vec<Rat>> = t
        .iter_rows()
        .zip(v)
        .map(|(row, x)| row.iter().cloned().chain(std::iter::once(x.clone())).collect())
        .collect();
    let aug = Mat::from_rows(k + 1, &aug_rows);
    let ech = rref(&aug);
    if ech.pivots.last() == Some(&k) {
        return None;
    }
    let mut c = vec![Rat::zero(); k];
    for (row, &p) in ech.pivots.iter().enumerate() {
        c[p] = ech.reduced[(row, k)].clone();
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn m(cols: usize, rows: &[&[i64]]) -> Mat {
        let rows: Vec<Vec<Rat>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Mat::from_rows(cols, &rows)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Mat::identity(2);
        let e = rref(&id);
        assert_eq!(e.reduced, id);
        assert_eq!(e.pivots, vec![0, 1]);

        let z = Mat::zeros(2, 2);
        let e = rref(&z);
        assert_eq!(e.reduced, z);
        assert_eq!(e.rank(), 0);
    }

    #[test]
    fn rref_swaps_rows() {
        let e = rref(&m(3, &[&[0, 1, 3], &[1, 0, 2]]));
        assert_eq!(e.reduced, m(3, &[&[1, 0, 2], &[0, 1, 3]]));
        assert_eq!(e.pivots, vec![0, 1]);
    }

    #[test]
    fn priority_picks_later_column() {
        let a = m(2, &[&[1, 1]]);
        assert_eq!(rref_with_column_priority(&a, &[1, 0]).pivots, vec![1]);
        assert_eq!(rref_with_column_priority(&a, &[0, 1]).pivots, vec![0]);

        let b = m(3, &[&[1, 0, 2], &[0, 1, 3]]);
        let e = rref_with_column_priority(&b, &[2, 0, 1]);
        assert_eq!(e.pivots, vec![2, 0]);
        // Hand elimination: (0, 1/3, 1) and (1, -2/3, 0).
        assert_eq!(e.reduced.row(0), &[rat(0), ratio(1, 3), rat(1)]);
        assert_eq!(e.reduced.row(1), &[rat(1), ratio(-2, 3), rat(0)]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(
            kernel_basis(&m(3, &[&[1, 1, 0]])),
            vec![vec![rat(-1), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]
        );
        assert_eq!(kernel_basis(&Mat::zeros(1, 2)), vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]);
        assert!(kernel_basis(&Mat::identity(2)).is_empty());
    }

    #[test]
    fn member_examples() {
        assert_eq!(member(&Mat::identity(2), &[rat(3), rat(5)]), Some(vec![rat(3), rat(5)]));
        assert_eq!(member(&m(2, &[&[1, 1]]), &[rat(1), rat(0)]), None);
        assert_eq!(member(&m(3, &[&[1, -1, 0]]), &[rat(2), rat(-2), rat(0)]), Some(vec![rat(2)]));
    }

    #[test]
    fn member_in_empty_row_space() {
        let empty = Mat::zeros(0, 2);
        assert_eq!(member(&empty, &[rat(0), rat(0)]), Some(vec![]));
        assert_eq!(member(&empty, &[rat(1), rat(0)]), None);
    }
}
