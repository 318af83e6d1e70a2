use crate::error::{Error, Result};
use crate::exact::{EchelonSolver, Scalar, SparseVec};
use crate::lie::MetricForm;

use super::{TensorLayout, TensorW};

/// n(n+1)(n+2)(n-3)/12.
pub fn weyl_dim_formula(n: usize) -> usize {
    if n < 4 {
        return 0;
    }
    n * (n + 1) * (n + 2) * (n - 3) / 12
}

/// A linear condition on canonical components, with a readable name.
#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub name: String,
    pub row: SparseVec<Scalar>,
}

fn term(layout: &TensorLayout, idx: [usize; 4], c: Scalar) -> Option<(usize, Scalar)> {
    let [a, b, c_, d] = idx;
    layout
        .locate(a, b, c_, d)
        .map(|(k, neg)| (k, if neg { -c } else { c }))
}

/// First Bianchi identity phi_abcd + phi_acdb + phi_adbc = 0 for a<b<c<d
/// (the cases with repeated indices follow from the pair symmetries), then
/// the Ricci contraction g^{ac} phi_abcd = 0 for b <= d.
pub(crate) fn constraints(layout: &TensorLayout, form: &MetricForm) -> Vec<Constraint> {
    let n = layout.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let terms = [[a, b, c, d], [a, c, d, b], [a, d, b, c]]
                        .into_iter()
                        .filter_map(|i| term(layout, i, Scalar::ONE))
                        .collect();
                    out.push(Constraint {
                        name: format!("bianchi({a},{b},{c},{d})"),
                        row: SparseVec::from_terms(terms),
                    });
                }
            }
        }
    }
    let gi = form.inverse_gram();
    let inv: Vec<(usize, usize, Scalar)> = (0..n)
        .flat_map(|a| (0..n).map(move |c| (a, c)))
        .filter(|&(a, c)| !gi[(a, c)].is_zero())
        .map(|(a, c)| (a, c, gi[(a, c)].clone()))
        .collect();
    for b in 0..n {
        for d in b..n {
            let terms = inv
                .iter()
                .filter_map(|(a, c, g)| term(layout, [*a, b, *c, d], g.clone()))
                .collect();
            out.push(Constraint {
                name: format!("ricci({b},{d})"),
                row: SparseVec::from_terms(terms),
            });
        }
    }
    out
}

/// The space of algebraic Weyl tensors for a metric form.
#[derive(Clone, Debug)]
pub struct WeylSpace {
    form: MetricForm,
    layout: TensorLayout,
    solver: EchelonSolver<Scalar>,
    basis: Vec<SparseVec<Scalar>>,
}

impl WeylSpace {
    pub fn new(form: &MetricForm) -> Result<WeylSpace> {
        let n = form.dim();
        if n < 4 {
            return Err(Error::InvalidArgument(format!(
                "Weyl tensors need n >= 4, got {n}"
            )));
        }
        let layout = TensorLayout::new(n);
        let mut solver = EchelonSolver::new(layout.len());
        for c in constraints(&layout, form) {
            solver.insert(c.row);
        }
        let basis = solver.kernel_sparse();
        Ok(WeylSpace {
            form: form.clone(),
            layout,
            solver,
            basis,
        })
    }

    pub fn form(&self) -> &MetricForm {
        &self.form
    }

    pub fn n(&self) -> usize {
        self.layout.n()
    }

    pub fn layout(&self) -> &TensorLayout {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> Vec<TensorW> {
        self.basis
            .iter()
            .map(|v| TensorW::from_sparse(self.n(), v))
            .collect()
    }

    /// Echelon form of the defining constraints, for extension by further rows.
    pub(crate) fn constraint_solver(&self) -> &EchelonSolver<Scalar> {
        &self.solver
    }

    pub fn contains(&self, phi: &TensorW) -> bool {
        is_weyl(phi, &self.form).is_empty()
    }
}

/// Names of the violated Bianchi and trace constraints; empty iff phi is an
/// algebraic Weyl tensor for `form`. The pair symmetries hold by storage.
pub fn is_weyl(phi: &TensorW, form: &MetricForm) -> Vec<String> {
    if phi.n() != form.dim() {
        return vec![format!(
            "dimension mismatch: tensor n={}, form n={}",
            phi.n(),
            form.dim()
        )];
    }
    let layout = TensorLayout::new(phi.n());
    constraints(&layout, form)
        .into_iter()
        .filter(|c| !c.row.dot_dense(phi.coeffs()).is_zero())
        .map(|c| c.name)
        .collect()
}
