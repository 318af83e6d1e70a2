use super::Field;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    /// Builds from unsorted (index, value) terms, summing duplicates.
    pub fn from_terms(mut terms: Vec<(usize, F)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(terms.len());
        for (i, v) in terms {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.clone() + v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(v: &[F]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn lead(&self) -> Option<usize> {
        self.entries.first().map(|e| e.0)
    }

    pub fn get(&self, i: usize) -> Option<&F> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &F) -> Self {
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v.clone() * c))
                .collect(),
        }
    }

    /// self - c * other
    pub fn axpy_neg(&self, c: &F, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, -(c.clone() * y)));
                        b.next();
                    } else {
                        let v = x.clone() - c.clone() * y;
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, -(c.clone() * y)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot_dense(&self, v: &[F]) -> F {
        self.entries
            .iter()
            .filter(|(i, _)| !v[*i].is_zero())
            .fold(F::zero(), |acc, (i, x)| acc + x.clone() * &v[*i])
    }
}

/// Incremental row echelon form over a fixed number of columns.
///
/// Rows are stored by pivot column with a unit leading coefficient. Only
/// leading entries are eliminated on insertion, which keeps rows sparse; the
/// canonical reduced form is produced on demand by [`EchelonSolver::kernel`].
#[derive(Clone, Debug)]
pub struct EchelonSolver<F> {
    ncols: usize,
    pivots: Vec<Option<SparseVec<F>>>,
    rank: usize,
}

impl<F: Field> EchelonSolver<F> {
    pub fn new(ncols: usize) -> Self {
        EchelonSolver {
            ncols,
            pivots: vec![None; ncols],
            rank: 0,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank
    }

    fn reduce_leading(&self, mut row: SparseVec<F>) -> SparseVec<F> {
        while let Some(c) = row.lead() {
            match &self.pivots[c] {
                Some(p) => {
                    let f = row.entries[0].1.clone();
                    row = row.axpy_neg(&f, p);
                }
                None => break,
            }
        }
        row
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseVec<F>) -> bool {
        debug_assert!(row.entries.last().map_or(true, |e| e.0 < self.ncols));
        let row = self.reduce_leading(row);
        let Some(c) = row.lead() else {
            return false;
        };
        let inv = row.entries[0].1.inv().expect("nonzero lead");
        self.pivots[c] = Some(row.scale(&inv));
        self.rank += 1;
        true
    }

    /// True if the row lies in the current row space.
    pub fn contains(&self, row: &SparseVec<F>) -> bool {
        // a leading entry without a pivot cannot be cancelled by any row
        self.reduce_leading(row.clone()).is_empty()
    }

    /// Fully reduced rows keyed by pivot column, ascending.
    pub fn reduced_rows(&self) -> Vec<(usize, SparseVec<F>)> {
        let mut done: Vec<Option<SparseVec<F>>> = vec![None; self.ncols];
        for c in (0..self.ncols).rev() {
            let Some(row) = &self.pivots[c] else { continue };
            let mut acc = row.to_dense(self.ncols);
            for j in c + 1..self.ncols {
                if acc[j].is_zero() {
                    continue;
                }
                if let Some(d) = &done[j] {
                    let f = acc[j].clone();
                    for (k, v) in &d.entries {
                        acc[*k] = acc[*k].clone() - f.clone() * v;
                    }
                }
            }
            let row = SparseVec::from_dense(&acc);
            done[c] = Some(row);
        }
        done.into_iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c, r)))
            .collect()
    }

    /// Non-pivot columns, ascending; kernel vector k is 1 at free column k
    /// and 0 at the other free columns.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|&c| self.pivots[c].is_none())
            .collect()
    }

    /// Canonical null-space basis, same normalization as `Matrix::kernel`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        self.kernel_sparse()
            .iter()
            .map(|v| v.to_dense(self.ncols))
            .collect()
    }

    pub fn kernel_sparse(&self) -> Vec<SparseVec<F>> {
        let rows = self.reduced_rows();
        let free = self.free_columns();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut terms: Vec<Vec<(usize, F)>> = free.iter().map(|&f| vec![(f, F::one())]).collect();
        for (c, row) in &rows {
            for (j, v) in row.entries.iter().skip(1) {
                terms[slot[*j]].push((*c, -v.clone()));
            }
        }
        terms.into_iter().map(SparseVec::from_terms).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ExactMatrix, Scalar};
    use proptest::prelude::*;

    fn solver_for(m: &ExactMatrix) -> EchelonSolver<Scalar> {
        let mut s = EchelonSolver::new(m.cols());
        for i in 0..m.rows() {
            s.insert(SparseVec::from_dense(m.row(i)));
        }
        s
    }

    proptest! {
        #[test]
        fn matches_dense_kernel(rows in 1usize..7, cols in 1usize..9,
                                vals in proptest::collection::vec(-3i64..4, 63)) {
            let m = ExactMatrix::from_fn(rows, cols, |i, j| {
                let v = vals[i * cols + j];
                // sparsify
                if v.abs() == 3 { Scalar::ZERO } else { Scalar::int(v) }
            });
            let s = solver_for(&m);
            prop_assert_eq!(s.rank(), m.rank());
            prop_assert_eq!(s.kernel(), m.kernel());
        }
    }

    #[test]
    fn contains_row_space() {
        let m = ExactMatrix::from_ints(&[&[1, 0, 2], &[0, 1, 1]]);
        let s = solver_for(&m);
        assert!(s.contains(&SparseVec::from_dense(&[
            Scalar::int(2),
            Scalar::int(3),
            Scalar::int(7)
        ])));
        assert!(!s.contains(&SparseVec::from_dense(&[
            Scalar::ZERO,
            Scalar::ZERO,
            Scalar::ONE
        ])));
    }
}
