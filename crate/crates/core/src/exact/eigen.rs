use serde::Serialize;

use super::{charpoly, ExactMatrix, Field, Matrix, Scalar};

/// Rational eigenspaces of a single operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalEigen {
    pub spaces: Vec<(Scalar, Vec<Vec<Scalar>>)>,
    /// Every real eigenvalue is rational.
    pub complete: bool,
}

pub fn rational_eigenspaces(a: &ExactMatrix) -> RationalEigen {
    let p = charpoly(a);
    let roots = p.rational_roots();
    let complete = roots.len() == p.real_root_count();
    let n = a.rows();
    let spaces = roots
        .into_iter()
        .map(|r| {
            let shifted = a.sub(&ExactMatrix::identity(n).scale(&r));
            (r, shifted.kernel())
        })
        .collect();
    RationalEigen { spaces, complete }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommonEigenspace {
    /// Canonical (reduced row echelon) basis.
    pub basis: Vec<Vec<Scalar>>,
    /// Eigenvalue of each operator, in input order.
    pub eigenvalues: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommonEigen {
    pub spaces: Vec<CommonEigenspace>,
    /// Every real eigenvalue of every operator is rational, so no real common
    /// eigenline can have been missed.
    pub complete: bool,
}

impl CommonEigen {
    /// Number of common eigenlines if finite, i.e. all spaces are lines.
    pub fn line_count(&self) -> Option<usize> {
        self.spaces
            .iter()
            .all(|s| s.basis.len() == 1)
            .then_some(self.spaces.len())
    }
}

/// Canonical basis of the span of `vectors`.
pub fn span_basis<F: Field>(len: usize, vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_fn(vectors.len(), len, |i, j| vectors[i][j].clone());
    let (r, piv) = m.rref();
    (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Intersection of two subspaces given by spanning vectors.
pub fn intersect<F: Field>(len: usize, u: &[Vec<F>], v: &[Vec<F>]) -> Vec<Vec<F>> {
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let (k, l) = (u.len(), v.len());
    let m = Matrix::from_fn(len, k + l, |i, j| {
        if j < k {
            u[j][i].clone()
        } else {
            -v[j - k][i].clone()
        }
    });
    let coeffs = m.kernel();
    let vecs: Vec<Vec<F>> = coeffs
        .iter()
        .map(|c| {
            (0..len)
                .map(|i| (0..k).fold(F::zero(), |acc, j| acc + c[j].clone() * &u[j][i]))
                .collect()
        })
        .collect();
    span_basis(len, &vecs)
}

/// Common rational eigenspaces of operators on Q^dim.
pub fn common_rational_eigenlines(ops: &[ExactMatrix], dim: usize) -> CommonEigen {
    let whole: Vec<Vec<Scalar>> = (0..dim)
        .map(|i| ExactMatrix::identity(dim).row(i).to_vec())
        .collect();
    let mut spaces = vec![CommonEigenspace {
        basis: whole,
        eigenvalues: Vec::new(),
    }];
    let mut complete = true;
    if dim == 0 {
        return CommonEigen {
            spaces: Vec::new(),
            complete,
        };
    }
    for op in ops {
        let eig = rational_eigenspaces(op);
        complete &= eig.complete;
        let mut next = Vec::new();
        for s in &spaces {
            for (lam, e) in &eig.spaces {
                let basis = intersect(dim, &s.basis, e);
                if !basis.is_empty() {
                    let mut eigenvalues = s.eigenvalues.clone();
                    eigenvalues.push(lam.clone());
                    next.push(CommonEigenspace { basis, eigenvalues });
                }
            }
        }
        spaces = next;
    }
    CommonEigen { spaces, complete }
}

/// Signature (positive, negative, zero) of a symmetric rational matrix by
/// symmetric congruence.
pub fn signature(a: &ExactMatrix) -> (usize, usize, usize) {
    assert!(a.is_symmetric(), "signature of a non-symmetric matrix");
    let mut m = a.clone();
    let mut n = m.rows();
    let (mut pos, mut neg) = (0, 0);
    let total = n;
    while n > 0 {
        let piv = (0..n).find(|&i| !m[(i, i)].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => {
                let off = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !m[(i, j)].is_zero());
                match off {
                    None => break,
                    Some((i, j)) => {
                        // e_i += e_j makes the diagonal entry 2 m_ij
                        add_congruent(&mut m, n, j, i);
                        i
                    }
                }
            }
        };
        let last = n - 1;
        swap_congruent(&mut m, piv, last);
        let d = m[(last, last)].clone();
        if d.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = d.recip().unwrap();
        for i in 0..last {
            let f = &m[(i, last)] * &inv;
            if f.is_zero() {
                continue;
            }
            for j in 0..last {
                let t = &f * &m[(last, j)];
                m[(i, j)] = &m[(i, j)] - &t;
            }
        }
        n -= 1;
    }
    (pos, neg, total - pos - neg)
}

// row/col i += row/col j, restricted to the leading n x n block
fn add_congruent(m: &mut ExactMatrix, n: usize, j: usize, i: usize) {
    for k in 0..n {
        let v = &m[(i, k)] + &m[(j, k)];
        m[(i, k)] = v;
    }
    for k in 0..n {
        let v = &m[(k, i)] + &m[(k, j)];
        m[(k, i)] = v;
    }
}

fn swap_congruent(m: &mut ExactMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap_rows(a, b);
    for k in 0..m.rows() {
        let t = m[(k, a)].clone();
        m[(k, a)] = m[(k, b)].clone();
        m[(k, b)] = t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn signature_of_hyperbolic_plane() {
        assert_eq!(
            signature(&ExactMatrix::from_ints(&[&[0, 1], &[1, 0]])),
            (1, 1, 0)
        );
        assert_eq!(
            signature(&ExactMatrix::from_ints(&[&[0, 0], &[0, 0]])),
            (0, 0, 2)
        );
        assert_eq!(
            signature(&ExactMatrix::from_ints(&[&[1, 2], &[2, 4]])),
            (1, 0, 1)
        );
    }

    #[test]
    fn rotation_has_no_rational_eigenline_and_is_complete() {
        let rot = ExactMatrix::from_ints(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let c = common_rational_eigenlines(&[rot], 3);
        assert!(c.complete);
        assert_eq!(c.spaces.len(), 1);
        assert_eq!(
            c.spaces[0].basis,
            vec![vec![Scalar::ZERO, Scalar::ZERO, Scalar::ONE]]
        );
    }

    #[test]
    fn irrational_real_eigenvalue_is_incomplete() {
        let a = ExactMatrix::from_ints(&[&[0, 2], &[1, 0]]);
        let c = common_rational_eigenlines(&[a], 2);
        assert!(!c.complete);
        assert!(c.spaces.is_empty());
    }

    #[test]
    fn commuting_diagonal_operators() {
        let a = ExactMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let b = ExactMatrix::from_ints(&[&[5, 0, 0], &[0, 6, 0], &[0, 0, 5]]);
        let c = common_rational_eigenlines(&[a, b], 3);
        assert_eq!(c.line_count(), Some(3));
    }

    proptest! {
        #[test]
        fn signature_is_congruence_invariant(vals in proptest::collection::vec(-4i64..5, 15),
                                             p in proptest::collection::vec(-2i64..3, 25)) {
            let n = 5;
            let mut k = 0;
            let mut a = ExactMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    a[(i, j)] = Scalar::int(vals[k]);
                    a[(j, i)] = Scalar::int(vals[k]);
                    k += 1;
                }
            }
            let mut t = ExactMatrix::from_fn(n, n, |i, j| Scalar::int(p[i * n + j]));
            if t.determinant().is_zero() {
                t = t.add(&ExactMatrix::identity(n).scale(&Scalar::int(7)));
            }
            prop_assume!(!t.determinant().is_zero());
            let b = t.transpose().mul(&a).mul(&t);
            prop_assert_eq!(signature(&a), signature(&b));
            let (pp, nn, zz) = signature(&a);
            prop_assert_eq!(pp + nn, a.rank());
            prop_assert_eq!(zz, n - a.rank());
        }
    }
}
