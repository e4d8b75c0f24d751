//! Integer sublattices of Z^n kept in a Hermite normal form whose pivots are
//! the last nonzero coordinate of each basis row.

use num_integer::Integer;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Lattice {
    dim: usize,
    /// Basis rows, ordered by decreasing pivot column. Each row is zero past
    /// its pivot, the pivot is positive, and other rows' entries in that
    /// column are reduced into `[0, pivot)`.
    rows: Vec<Vec<i64>>,
}

fn pivot(row: &[i64]) -> Option<usize> {
    row.iter().rposition(|&x| x != 0)
}

fn axpy(row: &mut [i64], c: i64, other: &[i64]) {
    for (a, b) in row.iter_mut().zip(other) {
        *a -= c * b;
    }
}

impl Lattice {
    pub(crate) fn zero(dim: usize) -> Self {
        Lattice { dim, rows: Vec::new() }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn basis(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Lattice spanned by `self` and `v`.
    pub(crate) fn with_vector(&self, v: &[i64]) -> Self {
        assert_eq!(v.len(), self.dim);
        let mut pending: Vec<Vec<i64>> = self.rows.clone();
        pending.push(v.to_vec());
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for col in (0..self.dim).rev() {
            let (mut here, rest): (Vec<_>, Vec<_>) = pending.into_iter().partition(|r| pivot(r) == Some(col));
            pending = rest;
            if here.is_empty() {
                continue;
            }
            // Euclid on the pivot column until one row is left there.
            while here.len() > 1 {
                here.sort_by_key(|r| r[col].abs());
                let (head, tail) = here.split_at_mut(1);
                for r in tail.iter_mut() {
                    let c = Integer::div_floor(&r[col], &head[0][col]);
                    axpy(r, c, &head[0]);
                }
                let (keep, drop): (Vec<_>, Vec<_>) = here.into_iter().partition(|r| r[col] != 0);
                here = keep;
                pending.extend(drop.into_iter().filter(|r| pivot(r).is_some()));
            }
            let mut row = here.pop().expect("one row left");
            if row[col] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            for upper in rows.iter_mut() {
                let c = Integer::div_floor(&upper[col], &row[col]);
                axpy(upper, c, &row);
            }
            rows.push(row);
        }
        Lattice { dim: self.dim, rows }
    }

    /// Reduces `v` modulo the lattice. Returns the remainder, which is zero
    /// exactly when `v` lies in the lattice.
    pub(crate) fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut x = v.to_vec();
        for row in &self.rows {
            let col = pivot(row).expect("basis rows are nonzero");
            let c = Integer::div_floor(&x[col], &row[col]);
            axpy(&mut x, c, row);
        }
        x
    }

    pub(crate) fn contains(&self, v: &[i64]) -> bool {
        let mut x = v.to_vec();
        for row in &self.rows {
            let col = pivot(row).expect("basis rows are nonzero");
            if x[col] % row[col] != 0 {
                return false;
            }
            let c = x[col] / row[col];
            axpy(&mut x, c, row);
        }
        x.iter().all(|&e| e == 0)
    }
}
