use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    EchelonSolver, ExactMatrix, Field, Gaussian, GaussianMatrix, Scalar, SparseVec,
};
use crate::lie::{ComplexLieAlgebra, MetricForm, SubalgebraSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum InvolutionFamily {
    /// diag(I_pq, I_pq)
    A { p: usize, q: usize },
    /// diag(i I_pq, -i I_pq)
    B { p: usize, q: usize },
    /// [[0, E], [E, 0]]
    C,
    /// [[0, J_k], [J_k, 0]], l = 2k
    D { k: usize },
}

impl fmt::Display for InvolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionFamily::A { p, q } => write!(f, "a(p={p},q={q})"),
            InvolutionFamily::B { p, q } => write!(f, "b(p={p},q={q})"),
            InvolutionFamily::C => write!(f, "c"),
            InvolutionFamily::D { k } => write!(f, "d(k={k})"),
        }
    }
}

impl InvolutionFamily {
    /// Every family member for rank l.
    pub fn all(l: usize) -> Vec<InvolutionFamily> {
        let mut out = Vec::new();
        for p in (0..=l).rev() {
            out.push(InvolutionFamily::A { p, q: l - p });
        }
        for p in (0..=l).rev() {
            out.push(InvolutionFamily::B { p, q: l - p });
        }
        out.push(InvolutionFamily::C);
        if l % 2 == 0 {
            out.push(InvolutionFamily::D { k: l / 2 });
        }
        out
    }
}

/// X -> A X A^{-1} on so(2l, C), in the isotropic basis of V + V*.
#[derive(Clone, Debug)]
pub struct Involution {
    l: usize,
    family: InvolutionFamily,
    a: GaussianMatrix,
    a_inv: GaussianMatrix,
    square: i32,
    swaps: bool,
}

fn ipq(p: usize, q: usize) -> Vec<Gaussian> {
    (0..p + q)
        .map(|i| if i < p { Gaussian::ONE } else { -Gaussian::ONE })
        .collect()
}

fn scalar_identity_sign(m: &GaussianMatrix) -> Option<i32> {
    let n = m.rows();
    let id = GaussianMatrix::identity(n);
    if *m == id {
        Some(1)
    } else if *m == id.neg() {
        Some(-1)
    } else {
        None
    }
}

/// Whether the block structure of `a` preserves V and V* (false) or
/// interchanges them (true); None if neither.
fn block_action(a: &GaussianMatrix, l: usize) -> Option<bool> {
    let zero_block =
        |r0: usize, c0: usize| (0..l).all(|i| (0..l).all(|j| a[(r0 + i, c0 + j)].is_zero()));
    if zero_block(0, l) && zero_block(l, 0) {
        Some(false)
    } else if zero_block(0, 0) && zero_block(l, l) {
        Some(true)
    } else {
        None
    }
}

/// so(2l, C) in the isotropic basis.
pub fn ambient_so(l: usize) -> Result<ComplexLieAlgebra> {
    Ok(ComplexLieAlgebra::so_complex(&MetricForm::isotropic_pair(
        l,
    )?))
}

pub fn gl_embedding(l: usize) -> Result<ComplexLieAlgebra> {
    crate::lie::construct_complex(SubalgebraSpec::GlComplex { l })
}

fn maps_into(alg: &ComplexLieAlgebra, f: impl Fn(&GaussianMatrix) -> GaussianMatrix) -> bool {
    alg.basis().iter().all(|b| alg.contains(&f(b)))
}

impl Involution {
    pub fn new(l: usize, family: InvolutionFamily) -> Result<Involution> {
        if l == 0 {
            return Err(Error::InvalidArgument("involutions need l >= 1".into()));
        }
        let n = 2 * l;
        let a = match family {
            InvolutionFamily::A { p, q } | InvolutionFamily::B { p, q } if p + q != l => {
                return Err(Error::InvalidArgument(format!(
                    "{family}: p + q must equal l = {l}"
                )));
            }
            InvolutionFamily::A { p, q } => {
                let d = ipq(p, q);
                GaussianMatrix::diagonal(&[d.clone(), d].concat())
            }
            InvolutionFamily::B { p, q } => {
                let d = ipq(p, q);
                let up: Vec<Gaussian> = d.iter().map(|x| x.clone() * &Gaussian::I).collect();
                let down: Vec<Gaussian> = up.iter().map(|x| -x.clone()).collect();
                GaussianMatrix::diagonal(&[up, down].concat())
            }
            InvolutionFamily::C => {
                let z = GaussianMatrix::zeros(l, l);
                let e = GaussianMatrix::identity(l);
                GaussianMatrix::blocks(&z, &e, &e, &z)
            }
            InvolutionFamily::D { k } => {
                if 2 * k != l {
                    return Err(Error::InvalidArgument(format!(
                        "family d needs l = 2k, got l={l}, k={k}"
                    )));
                }
                let z = GaussianMatrix::zeros(k, k);
                let e = GaussianMatrix::identity(k);
                let j = GaussianMatrix::blocks(&z, &e, &e.neg(), &z);
                let zl = GaussianMatrix::zeros(l, l);
                GaussianMatrix::blocks(&zl, &j, &j, &zl)
            }
        };
        debug_assert_eq!(a.rows(), n);
        let square = scalar_identity_sign(&a.mul(&a))
            .ok_or_else(|| Error::InvalidArgument(format!("{family}: A^2 is not +-1")))?;
        let swaps = block_action(&a, l)
            .ok_or_else(|| Error::InvalidArgument(format!("{family}: A mixes V and V*")))?;
        let a_inv = a.inverse().expect("A^2 = +-1");
        let inv = Involution {
            l,
            family,
            a,
            a_inv,
            square,
            swaps,
        };
        let so = ambient_so(l)?;
        if !maps_into(&so, |x| inv.apply(x)) {
            return Err(Error::NotCompatible(format!(
                "{family}: conjugation does not preserve so(2l,C)"
            )));
        }
        if !maps_into(&gl_embedding(l)?, |x| inv.apply(x)) {
            return Err(Error::NotCompatible(format!(
                "{family}: conjugation does not preserve gl(l,C)"
            )));
        }
        Ok(inv)
    }

    /// theta(theta(b)) = b on a basis of so(2l, C).
    pub fn is_involutive(&self) -> Result<bool> {
        Ok(ambient_so(self.l)?
            .basis()
            .iter()
            .all(|b| self.apply(&self.apply(b)) == *b))
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn family(&self) -> InvolutionFamily {
        self.family
    }

    pub fn matrix(&self) -> &GaussianMatrix {
        &self.a
    }

    /// +1 or -1 according to A^2.
    pub fn square_sign(&self) -> i32 {
        self.square
    }

    /// True when A interchanges V and V*.
    pub fn swaps(&self) -> bool {
        self.swaps
    }

    pub fn apply(&self, x: &GaussianMatrix) -> GaussianMatrix {
        self.a.mul(x).mul(&self.a_inv)
    }

    /// sigma = theta tau: X -> M conj(X) M^{-1} with M = A S.
    pub fn anti_involution(&self) -> AntiInvolution {
        let s = compact_structure(self.l);
        let m = self.a.mul(&s);
        let m_inv = m.inverse().expect("invertible");
        AntiInvolution { m, m_inv }
    }

    /// Checks theta tau = tau theta on a basis of so(2l, C).
    pub fn commutes_with_compact(&self) -> Result<bool> {
        let s = compact_structure(self.l);
        let s_inv = s.inverse().expect("invertible");
        let tau = |x: &GaussianMatrix| s.mul(&x.conj()).mul(&s_inv);
        Ok(ambient_so(self.l)?
            .basis()
            .iter()
            .all(|b| self.apply(&tau(b)) == tau(&self.apply(b))))
    }
}

/// Matrix S with tau(X) = S conj(X) S^{-1}, where tau is entrywise
/// conjugation in a complex orthonormal frame. The frame T has
/// T^T G T = 2 I (e_i + e_i*, i(e_i - e_i*)); the factor cancels in T conj(T)^{-1}.
pub fn compact_structure(l: usize) -> GaussianMatrix {
    let n = 2 * l;
    let mut t = GaussianMatrix::zeros(n, n);
    for i in 0..l {
        t[(i, i)] = Gaussian::ONE;
        t[(i + l, i)] = Gaussian::ONE;
        t[(i, i + l)] = Gaussian::I;
        t[(i + l, i + l)] = -Gaussian::I;
    }
    t.mul(&t.conj().inverse().expect("frame"))
}

/// X -> M conj(X) M^{-1}.
#[derive(Clone, Debug)]
pub struct AntiInvolution {
    m: GaussianMatrix,
    m_inv: GaussianMatrix,
}

impl AntiInvolution {
    pub fn matrix(&self) -> &GaussianMatrix {
        &self.m
    }

    pub fn apply(&self, x: &GaussianMatrix) -> GaussianMatrix {
        self.m.mul(&x.conj()).mul(&self.m_inv)
    }

    /// Real basis (as complex matrices) of {X in span(basis) : sigma(X) = X}.
    pub fn fixed_points(&self, basis: &[GaussianMatrix]) -> Vec<GaussianMatrix> {
        let d = basis.len();
        // sigma(sum (x + i y) b) - sum (x + i y) b is R-linear in (x, y)
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(2 * d);
        let images: Vec<GaussianMatrix> = basis.iter().map(|b| self.apply(b)).collect();
        for (b, s) in basis.iter().zip(&images) {
            cols.push(real_flat(&s.sub(b)));
        }
        for (b, s) in basis.iter().zip(&images) {
            let i = Gaussian::I;
            cols.push(real_flat(&s.scale(&-i.clone()).sub(&b.scale(&i))));
        }
        let len = cols[0].len();
        let mut solver = EchelonSolver::new(2 * d);
        for r in 0..len {
            solver.insert(SparseVec::from_terms(
                cols.iter()
                    .enumerate()
                    .map(|(j, c)| (j, c[r].clone()))
                    .collect(),
            ));
        }
        solver
            .kernel()
            .iter()
            .map(|v| {
                let n = basis[0].rows();
                (0..d).fold(GaussianMatrix::zeros(n, n), |acc, k| {
                    let c = Gaussian::new(v[k].clone(), v[k + d].clone());
                    if c.is_zero() {
                        acc
                    } else {
                        acc.add(&basis[k].scale(&c))
                    }
                })
            })
            .collect()
    }

    /// Real dimension of the fixed points inside span(basis).
    pub fn fixed_dim(&self, basis: &[GaussianMatrix]) -> usize {
        self.fixed_points(basis).len()
    }

    /// sigma(sigma(b)) = b on every basis element.
    pub fn is_involutive_on(&self, basis: &[GaussianMatrix]) -> bool {
        basis.iter().all(|b| self.apply(&self.apply(b)) == *b)
    }

    pub fn preserves(&self, alg: &ComplexLieAlgebra) -> bool {
        maps_into(alg, |x| self.apply(x))
    }
}

fn real_flat(m: &GaussianMatrix) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = m.as_flat().iter().map(|z| z.re.clone()).collect();
    out.extend(m.as_flat().iter().map(|z| z.im.clone()));
    out
}

/// Complex subalgebra {X in alg : theta(X) = X}.
pub fn fixed_subalgebra(theta: &Involution, alg: &ComplexLieAlgebra) -> Result<ComplexLieAlgebra> {
    conjugation_fixed(&theta.a, alg)
        .map(|f| f.with_label(format!("{}^{}", alg.label(), theta.family)))
}

/// {X in alg : A X A^{-1} = X}, for any invertible A preserving alg.
pub fn conjugation_fixed(a: &GaussianMatrix, alg: &ComplexLieAlgebra) -> Result<ComplexLieAlgebra> {
    if a.rows() != alg.n() || a.cols() != alg.n() {
        return Err(Error::Shape(format!(
            "{}x{} conjugation on {}",
            a.rows(),
            a.cols(),
            alg.label()
        )));
    }
    let a_inv = a
        .inverse()
        .ok_or_else(|| Error::InvalidArgument("singular conjugation".into()))?;
    let theta = |x: &GaussianMatrix| a.mul(x).mul(&a_inv);
    if !maps_into(alg, theta) {
        return Err(Error::NotCompatible(format!(
            "conjugation does not preserve {}",
            alg.label()
        )));
    }
    alg.solve_in(
        |x| theta(x).sub(x).into_flat(),
        format!("{}^A", alg.label()),
    )
}

/// Rational change of basis helper for tests: I_{p,q} as a matrix.
pub fn ipq_matrix(p: usize, q: usize) -> ExactMatrix {
    ExactMatrix::diagonal(&ipq(p, q).iter().map(|g| g.re.clone()).collect::<Vec<_>>())
}
