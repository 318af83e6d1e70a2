use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    signature, EchelonSolver, ExactMatrix, Field, Gaussian, Matrix, Scalar, SparseVec,
};

use super::MetricForm;

pub(crate) fn flatten<F: Field>(m: &Matrix<F>) -> SparseVec<F> {
    SparseVec::from_dense(m.as_flat())
}

/// Finite-dimensional Lie algebra of n x n matrices, closed under the
/// commutator and, when a form is attached, skew for it.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra<F: Field> {
    n: usize,
    basis: Vec<Matrix<F>>,
    form: Option<Matrix<F>>,
    label: String,
    span: EchelonSolver<F>,
}

pub type RealLieAlgebra = MatrixLieAlgebra<Scalar>;
pub type ComplexLieAlgebra = MatrixLieAlgebra<Gaussian>;

impl<F: Field> MatrixLieAlgebra<F> {
    /// Verifies independence, closure and compatibility with `form`.
    pub fn new(
        n: usize,
        basis: Vec<Matrix<F>>,
        form: Option<Matrix<F>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let label = label.into();
        let alg = Self::unchecked(n, basis, form, label.clone())?;
        if alg.span.rank() != alg.basis.len() {
            return Err(Error::Dependent);
        }
        alg.check_form()?;
        alg.check_closed()?;
        Ok(alg)
    }

    /// Reduces a spanning set to a basis, then verifies as in `new`.
    pub fn spanned_by(
        n: usize,
        gens: Vec<Matrix<F>>,
        form: Option<Matrix<F>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let mut span = EchelonSolver::new(n * n);
        let basis: Vec<Matrix<F>> = gens
            .into_iter()
            .filter(|g| span.insert(flatten(g)))
            .collect();
        Self::new(n, basis, form, label)
    }

    /// Lie algebra generated by `gens` (bracket closure).
    pub fn generated_by(
        n: usize,
        gens: Vec<Matrix<F>>,
        form: Option<Matrix<F>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let mut span = EchelonSolver::new(n * n);
        let mut basis: Vec<Matrix<F>> = gens
            .into_iter()
            .filter(|g| span.insert(flatten(g)))
            .collect();
        let mut i = 0;
        while i < basis.len() {
            for j in 0..i {
                let c = basis[i].bracket(&basis[j]);
                if span.insert(flatten(&c)) {
                    basis.push(c);
                }
            }
            i += 1;
        }
        Self::new(n, basis, form, label)
    }

    fn unchecked(
        n: usize,
        basis: Vec<Matrix<F>>,
        form: Option<Matrix<F>>,
        label: String,
    ) -> Result<Self> {
        for b in &basis {
            if b.rows() != n || b.cols() != n {
                return Err(Error::Shape(format!(
                    "{}x{} element in a gl({n}) algebra",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        if let Some(g) = &form {
            if g.rows() != n || g.cols() != n {
                return Err(Error::Shape("form size".into()));
            }
        }
        let mut span = EchelonSolver::new(n * n);
        for b in &basis {
            span.insert(flatten(b));
        }
        Ok(MatrixLieAlgebra {
            n,
            basis,
            form,
            label,
            span,
        })
    }

    fn check_form(&self) -> Result<()> {
        let Some(g) = &self.form else { return Ok(()) };
        for (i, x) in self.basis.iter().enumerate() {
            if !x.transpose().mul(g).add(&g.mul(x)).is_zero() {
                return Err(Error::NotCompatible(format!(
                    "{}: basis element {i} does not preserve the form",
                    self.label
                )));
            }
        }
        Ok(())
    }

    fn check_closed(&self) -> Result<()> {
        for i in 0..self.basis.len() {
            for j in 0..i {
                if !self.contains(&self.basis[i].bracket(&self.basis[j])) {
                    return Err(Error::NotClosed(format!(
                        "{}: [b{i}, b{j}] leaves the span",
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<F>] {
        &self.basis
    }

    pub fn form(&self) -> Option<&Matrix<F>> {
        self.form.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn contains(&self, x: &Matrix<F>) -> bool {
        x.rows() == self.n && x.cols() == self.n && self.span.contains(&flatten(x))
    }

    pub fn contains_all(&self, other: &Self) -> bool {
        other.basis.iter().all(|x| self.contains(x))
    }

    pub fn span_eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.contains_all(other)
    }

    /// Coordinates of `x` in the basis, if it lies in the span.
    pub fn coordinates(&self, x: &Matrix<F>) -> Option<Vec<F>> {
        if !self.contains(x) {
            return None;
        }
        let nn = self.n * self.n;
        let mut cols: Vec<Vec<F>> = self.basis.iter().map(|b| b.as_flat().to_vec()).collect();
        cols.push(x.as_flat().iter().map(|v| -v.clone()).collect());
        let k = Matrix::from_columns(nn, &cols).kernel();
        let v = k.into_iter().find(|v| !v[self.dim()].is_zero())?;
        let s = v[self.dim()].inv()?;
        Some(v[..self.dim()].iter().map(|c| c.clone() * &s).collect())
    }

    fn combine(&self, coeffs: &[F]) -> Matrix<F> {
        self.basis
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(self.n, self.n), |acc, (b, c)| {
                acc.add(&b.scale(c))
            })
    }

    /// Subalgebra of elements X = sum c_i b_i cut out by the linear
    /// conditions f(b_i) summed with coefficients c_i.
    pub(crate) fn solve_in<G: Fn(&Matrix<F>) -> Vec<F>>(
        &self,
        conditions: G,
        label: String,
    ) -> Result<Self> {
        let cols: Vec<Vec<F>> = self.basis.iter().map(&conditions).collect();
        let len = cols.first().map_or(0, Vec::len);
        let mut solver = EchelonSolver::new(self.dim());
        for r in 0..len {
            solver.insert(SparseVec::from_terms(
                cols.iter()
                    .enumerate()
                    .map(|(j, c)| (j, c[r].clone()))
                    .collect(),
            ));
        }
        let basis: Vec<Matrix<F>> = solver.kernel().iter().map(|c| self.combine(c)).collect();
        Self::new(self.n, basis, self.form.clone(), label)
    }

    /// Subalgebra spanned by `gens`, which must lie in this algebra.
    pub fn subalgebra(&self, gens: Vec<Matrix<F>>, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if let Some(i) = gens.iter().position(|g| !self.contains(g)) {
            return Err(Error::NotCompatible(format!(
                "{label}: generator {i} is outside {}",
                self.label
            )));
        }
        Self::spanned_by(self.n, gens, self.form.clone(), label)
    }

    /// {X in self : [X, Y] = 0 for all Y in `sub`}.
    pub fn centralizer_of(&self, sub: &Self) -> Result<Self> {
        if !self.contains_all(sub) {
            return Err(Error::NotCompatible(format!(
                "{} is not inside {}",
                sub.label, self.label
            )));
        }
        let label = format!("z({})", sub.label);
        self.solve_in(
            |x| {
                sub.basis
                    .iter()
                    .flat_map(|y| x.bracket(y).into_flat())
                    .collect()
            },
            label,
        )
    }

    pub fn center(&self) -> Self {
        self.centralizer_of(self)
            .expect("an algebra contains itself")
    }

    /// Span of all commutators.
    pub fn derived(&self) -> Self {
        let mut gens = Vec::new();
        for i in 0..self.dim() {
            for j in 0..i {
                gens.push(self.basis[i].bracket(&self.basis[j]));
            }
        }
        Self::spanned_by(
            self.n,
            gens,
            self.form.clone(),
            format!("[{0},{0}]", self.label),
        )
        .expect("derived algebra is closed")
    }

    /// A subset of the basis that generates the algebra under brackets.
    pub fn generators(&self) -> Vec<Matrix<F>> {
        let mut span = EchelonSolver::new(self.n * self.n);
        let mut closed: Vec<Matrix<F>> = Vec::new();
        let mut gens = Vec::new();
        for b in &self.basis {
            if span.contains(&flatten(b)) {
                continue;
            }
            gens.push(b.clone());
            let start = closed.len();
            span.insert(flatten(b));
            closed.push(b.clone());
            let mut i = start;
            while i < closed.len() {
                for j in 0..i {
                    let c = closed[i].bracket(&closed[j]);
                    if span.insert(flatten(&c)) {
                        closed.push(c);
                    }
                }
                i += 1;
            }
        }
        gens
    }

    /// Basis elements of self extending a basis of `sub` to one of self.
    pub fn complement_of(&self, sub: &Self) -> Vec<Matrix<F>> {
        let mut span = sub.span.clone();
        self.basis
            .iter()
            .filter(|b| span.insert(flatten(b)))
            .cloned()
            .collect()
    }

    /// Whether every element maps span(vectors) into itself, together with
    /// the rank of the form restricted to that span.
    pub fn stabilizes_subspace(&self, vectors: &[Vec<F>]) -> (bool, Option<usize>) {
        let mut span = EchelonSolver::new(self.n);
        let vs: Vec<&Vec<F>> = vectors
            .iter()
            .filter(|v| span.insert(SparseVec::from_dense(v)))
            .collect();
        let ok = self.basis.iter().all(|x| {
            vs.iter()
                .all(|v| span.contains(&SparseVec::from_dense(&x.mul_vec(v))))
        });
        let rank = self.form.as_ref().map(|g| {
            let cols: Vec<Vec<F>> = vs.iter().map(|v| (*v).clone()).collect();
            let s = Matrix::from_columns(self.n, &cols);
            s.transpose().mul(g).mul(&s).rank()
        });
        (ok, rank)
    }

    /// (dim, center dim, derived dim).
    pub fn structure_invariants(&self) -> (usize, usize, usize) {
        (self.dim(), self.center().dim(), self.derived().dim())
    }
}

/// Isomorphism invariants used to tell real forms apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlgebraInvariants {
    pub dim: usize,
    pub center: usize,
    pub derived: usize,
    /// Signature (positive, negative, zero) of (X, Y) -> tr(XY).
    pub trace_signature: (usize, usize, usize),
    /// Sign of tr(Z^2) for a central Z, when the center is a line.
    pub center_sign: Option<i32>,
}

impl RealLieAlgebra {
    pub fn trace_form(&self) -> ExactMatrix {
        let d = self.dim();
        let b = &self.basis;
        let mut m = ExactMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..=i {
                let t = b[i].mul(&b[j]).trace();
                m[(i, j)] = t.clone();
                m[(j, i)] = t;
            }
        }
        m
    }

    pub fn algebra_invariants(&self) -> AlgebraInvariants {
        let center = self.center();
        let center_sign = (center.dim() == 1).then(|| {
            let z = &center.basis()[0];
            z.mul(z).trace().signum()
        });
        AlgebraInvariants {
            dim: self.dim(),
            center: center.dim(),
            derived: self.derived().dim(),
            trace_signature: signature(&self.trace_form()),
            center_sign,
        }
    }

    pub fn complexify(&self) -> ComplexLieAlgebra {
        let basis = self.basis.iter().map(|b| b.complexify()).collect();
        let form = self.form.as_ref().map(|g| g.complexify());
        MatrixLieAlgebra::new(self.n, basis, form, format!("{}_C", self.label))
            .expect("complexification of a valid algebra")
    }

    /// Conjugate by C: X -> C X C^{-1}, with the form transported to
    /// C^{-T} G C^{-1}.
    pub fn conjugate(&self, c: &ExactMatrix, form: Option<ExactMatrix>) -> Result<Self> {
        let ci = c
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("singular change of basis".into()))?;
        let basis = self.basis.iter().map(|b| c.mul(b).mul(&ci)).collect();
        let form = form.or_else(|| self.form.as_ref().map(|g| ci.transpose().mul(g).mul(&ci)));
        MatrixLieAlgebra::new(self.n, basis, form, self.label.clone())
    }
}

impl RealLieAlgebra {
    /// The so algebra of a metric form, basis G^{-1}(E_ij - E_ji) for i < j.
    pub fn so(form: &MetricForm) -> RealLieAlgebra {
        let n = form.dim();
        let gi = form.inverse_gram();
        let mut basis = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let a = ExactMatrix::unit(n, i, j).sub(&ExactMatrix::unit(n, j, i));
                basis.push(gi.mul(&a));
            }
        }
        let (p, q) = form.signature();
        let label = if p.min(q) == 0 {
            format!("so({n})")
        } else {
            format!("so({},{})", p.min(q), p.max(q))
        };
        MatrixLieAlgebra::new(n, basis, Some(form.gram().clone()), label)
            .expect("so(G) is a Lie algebra")
    }
}

impl ComplexLieAlgebra {
    /// Real Lie algebra of twice the dimension: basis b_k and i b_k, each
    /// realified as [[P,-Q],[Q,P]].
    pub fn realify(&self) -> RealLieAlgebra {
        let i = Gaussian::I;
        let mut basis = Vec::new();
        for b in &self.basis {
            basis.push(b.realify());
            basis.push(b.scale(&i).realify());
        }
        MatrixLieAlgebra::new(2 * self.n, basis, None, format!("{}_R", self.label))
            .expect("realification of a valid algebra")
    }

    pub fn to_real(&self) -> Option<RealLieAlgebra> {
        let basis: Option<Vec<ExactMatrix>> = self
            .basis
            .iter()
            .map(|b| b.is_real().then(|| b.real_part()))
            .collect();
        let form = match &self.form {
            Some(g) if g.is_real() => Some(g.real_part()),
            Some(_) => return None,
            None => None,
        };
        MatrixLieAlgebra::new(self.n, basis?, form, self.label.clone()).ok()
    }

    /// The so algebra of a form over the Gaussian rationals.
    pub fn so_complex(form: &MetricForm) -> ComplexLieAlgebra {
        let r = RealLieAlgebra::so(form);
        r.complexify().with_label(format!("so({},C)", form.dim()))
    }
}
