use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{signature, ExactMatrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormKind {
    /// I_{p,q}, positive entries first.
    Diagonal,
    /// [[0,0,1],[0,I,0],[1,0,0]], signature (n-1, 1).
    Lightcone,
    /// [[0,I],[I,0]] on V + V*.
    IsotropicPair,
    /// [[0,0,I2],[0,-I,0],[I2,0,0]], signature (2, n-2); e_{n-2}, e_{n-1}
    /// span a null plane.
    NullPairs,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Diagonal => "diagonal",
            FormKind::Lightcone => "lightcone",
            FormKind::IsotropicPair => "isotropic-pair",
            FormKind::NullPairs => "null-pairs",
        })
    }
}

/// Nondegenerate symmetric bilinear form with a rational orthonormal frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricForm {
    kind: FormKind,
    gram: ExactMatrix,
    inverse: ExactMatrix,
    p: usize,
    q: usize,
    frame: ExactMatrix,
}

fn hyperbolic_frame(
    n: usize,
    pairs: &[(usize, usize)],
    rest: &[(usize, Scalar)],
) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    // g(e_a, e_b) = 1 gives g(e_a +- e_b/2, same) = +-1
    let half = Scalar::new(1, 2);
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for &(a, b) in pairs {
        let mut u = vec![Scalar::ZERO; n];
        u[a] = Scalar::ONE;
        u[b] = half.clone();
        let mut v = u.clone();
        v[b] = -half.clone();
        pos.push(u);
        neg.push(v);
    }
    for (i, s) in rest {
        let mut u = vec![Scalar::ZERO; n];
        u[*i] = Scalar::ONE;
        if s.signum() > 0 {
            pos.push(u);
        } else {
            neg.push(u);
        }
    }
    (pos, neg)
}

impl MetricForm {
    fn build(
        kind: FormKind,
        gram: ExactMatrix,
        frame_cols: (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>),
    ) -> MetricForm {
        let n = gram.rows();
        let (pos, neg) = frame_cols;
        let (p, q) = (pos.len(), neg.len());
        let cols: Vec<Vec<Scalar>> = pos.into_iter().chain(neg).collect();
        let frame = ExactMatrix::from_columns(n, &cols);
        let inverse = gram.inverse().expect("nondegenerate form");
        let form = MetricForm {
            kind,
            gram,
            inverse,
            p,
            q,
            frame,
        };
        debug_assert_eq!(signature(&form.gram), (p, q, 0));
        debug_assert_eq!(
            form.frame.transpose().mul(&form.gram).mul(&form.frame),
            form.standard()
        );
        form
    }

    pub fn diagonal(p: usize, q: usize) -> MetricForm {
        let entries: Vec<Scalar> = (0..p + q)
            .map(|i| if i < p { Scalar::ONE } else { -Scalar::ONE })
            .collect();
        let gram = ExactMatrix::diagonal(&entries);
        let rest: Vec<(usize, Scalar)> = entries.iter().cloned().enumerate().collect();
        Self::build(
            FormKind::Diagonal,
            gram,
            hyperbolic_frame(p + q, &[], &rest),
        )
    }

    pub fn riemannian(n: usize) -> MetricForm {
        Self::diagonal(n, 0)
    }

    pub fn lightcone(n: usize) -> Result<MetricForm> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "lightcone form needs n >= 2, got {n}"
            )));
        }
        let gram = ExactMatrix::from_fn(n, n, |i, j| {
            if (i == 0 && j == n - 1) || (i == n - 1 && j == 0) || (i == j && i > 0 && i < n - 1) {
                Scalar::ONE
            } else {
                Scalar::ZERO
            }
        });
        let rest: Vec<(usize, Scalar)> = (1..n - 1).map(|i| (i, Scalar::ONE)).collect();
        Ok(Self::build(
            FormKind::Lightcone,
            gram,
            hyperbolic_frame(n, &[(0, n - 1)], &rest),
        ))
    }

    pub fn isotropic_pair(l: usize) -> Result<MetricForm> {
        if l == 0 {
            return Err(Error::InvalidArgument("isotropic pair needs l >= 1".into()));
        }
        let n = 2 * l;
        let gram = ExactMatrix::from_fn(n, n, |i, j| {
            if i + l == j || j + l == i {
                Scalar::ONE
            } else {
                Scalar::ZERO
            }
        });
        let pairs: Vec<(usize, usize)> = (0..l).map(|i| (i, i + l)).collect();
        Ok(Self::build(
            FormKind::IsotropicPair,
            gram,
            hyperbolic_frame(n, &pairs, &[]),
        ))
    }

    pub fn null_pairs(n: usize) -> Result<MetricForm> {
        if n < 4 {
            return Err(Error::InvalidArgument(format!(
                "null-pairs form needs n >= 4, got {n}"
            )));
        }
        let gram = ExactMatrix::from_fn(n, n, |i, j| {
            let hyper = (i < 2 && j == i + n - 2) || (j < 2 && i == j + n - 2);
            if hyper {
                Scalar::ONE
            } else if i == j && i >= 2 && i < n - 2 {
                -Scalar::ONE
            } else {
                Scalar::ZERO
            }
        });
        let rest: Vec<(usize, Scalar)> = (2..n - 2).map(|i| (i, -Scalar::ONE)).collect();
        Ok(Self::build(
            FormKind::NullPairs,
            gram,
            hyperbolic_frame(n, &[(0, n - 2), (1, n - 1)], &rest),
        ))
    }

    /// The tagged convention with this Gram matrix, if any.
    pub fn from_gram(gram: &ExactMatrix) -> Result<MetricForm> {
        let n = gram.rows();
        let p = (0..n).filter(|&i| gram[(i, i)].is_one()).count();
        let mut candidates = vec![Ok(Self::diagonal(p, n.saturating_sub(p)))];
        candidates.extend([Self::lightcone(n), Self::null_pairs(n)]);
        if n % 2 == 0 {
            candidates.push(Self::isotropic_pair(n / 2));
        }
        candidates
            .into_iter()
            .flatten()
            .find(|f| f.gram() == gram)
            .ok_or_else(|| Error::Unsupported("Gram matrix matches no tagged convention".into()))
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    pub fn inverse_gram(&self) -> &ExactMatrix {
        &self.inverse
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    /// Columns form a basis with F^T G F = I_{p,q} (positives first).
    pub fn frame(&self) -> &ExactMatrix {
        &self.frame
    }

    /// I_{p,q} for this signature.
    pub fn standard(&self) -> ExactMatrix {
        let e: Vec<Scalar> = (0..self.p + self.q)
            .map(|i| {
                if i < self.p {
                    Scalar::ONE
                } else {
                    -Scalar::ONE
                }
            })
            .collect();
        ExactMatrix::diagonal(&e)
    }

    /// Change of basis into `other`'s convention: a matrix C with
    /// C^T G_other C = G_self, so X maps to C X C^{-1}.
    pub fn conversion_to(&self, other: &MetricForm) -> Result<ExactMatrix> {
        if self.signature() != other.signature() {
            return Err(Error::NotCompatible(format!(
                "signatures {:?} and {:?} differ",
                self.signature(),
                other.signature()
            )));
        }
        let inv = self.frame.inverse().expect("frame is a basis");
        Ok(other.frame.mul(&inv))
    }

    pub fn label(&self) -> String {
        format!("{} ({},{})", self.kind, self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures_and_frames() {
        assert_eq!(MetricForm::lightcone(6).unwrap().signature(), (5, 1));
        assert_eq!(MetricForm::isotropic_pair(3).unwrap().signature(), (3, 3));
        assert_eq!(MetricForm::null_pairs(5).unwrap().signature(), (2, 3));
        assert_eq!(MetricForm::diagonal(2, 3).signature(), (2, 3));
    }

    #[test]
    fn conversion_is_an_isometry() {
        let a = MetricForm::lightcone(5).unwrap();
        let b = MetricForm::diagonal(4, 1);
        let c = a.conversion_to(&b).unwrap();
        assert_eq!(c.transpose().mul(b.gram()).mul(&c), *a.gram());
        assert!(a.conversion_to(&MetricForm::riemannian(5)).is_err());
        assert_eq!(
            MetricForm::from_gram(a.gram()).unwrap().kind(),
            FormKind::Lightcone
        );
        assert_eq!(MetricForm::from_gram(b.gram()).unwrap(), b);
        assert!(MetricForm::from_gram(&ExactMatrix::identity(3).scale(&Scalar::int(2))).is_err());
    }

    #[test]
    fn null_plane_is_null() {
        let f = MetricForm::null_pairs(6).unwrap();
        for i in 4..6 {
            for j in 4..6 {
                assert!(f.gram()[(i, j)].is_zero());
            }
        }
    }
}
