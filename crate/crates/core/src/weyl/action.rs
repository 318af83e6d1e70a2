use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{common_rational_eigenlines, EchelonSolver, ExactMatrix, Scalar, SparseVec};
use crate::lie::{MetricForm, RealLieAlgebra};

use super::{TensorLayout, TensorW, WeylSpace};

/// Nonzero entries of X by row: rows[e] = [(a, X_ea)].
fn rows_of(x: &ExactMatrix) -> Vec<Vec<(usize, Scalar)>> {
    (0..x.rows())
        .map(|e| {
            (0..x.cols())
                .filter(|&a| !x[(e, a)].is_zero())
                .map(|a| (a, x[(e, a)].clone()))
                .collect()
        })
        .collect()
}

fn act_entries(
    layout: &TensorLayout,
    xr: &[Vec<(usize, Scalar)>],
    entries: &[(usize, Scalar)],
) -> SparseVec<Scalar> {
    let mut terms = Vec::new();
    for (k, v) in entries {
        for (pos, neg) in layout.positions(*k) {
            let val = if neg { -v.clone() } else { v.clone() };
            for slot in 0..4 {
                let e = pos[slot];
                for (a, xea) in &xr[e] {
                    let mut out = pos;
                    out[slot] = *a;
                    if let Some(idx) = layout.canonical_index(out[0], out[1], out[2], out[3]) {
                        terms.push((idx, -(xea * &val)));
                    }
                }
            }
        }
    }
    SparseVec::from_terms(terms)
}

/// (X . phi)_abcd = -sum_e (X_ea phi_ebcd + X_eb phi_aecd + X_ec phi_abed + X_ed phi_abce).
pub fn act(x: &ExactMatrix, phi: &TensorW) -> Result<TensorW> {
    let n = phi.n();
    if x.rows() != n || x.cols() != n {
        return Err(Error::Shape(format!(
            "{}x{} matrix acting on n={n} tensors",
            x.rows(),
            x.cols()
        )));
    }
    let layout = TensorLayout::new(n);
    let v = act_entries(&layout, &rows_of(x), phi.to_sparse().entries());
    Ok(TensorW::from_sparse(n, &v))
}

/// Rows of the matrix of phi -> X . phi in canonical coordinates.
fn action_rows(layout: &TensorLayout, x: &ExactMatrix) -> Vec<SparseVec<Scalar>> {
    let xr = rows_of(x);
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); layout.len()];
    for k in 0..layout.len() {
        let col = act_entries(layout, &xr, &[(k, Scalar::ONE)]);
        for (r, v) in col.entries() {
            rows[*r].push((k, v.clone()));
        }
    }
    rows.into_iter()
        .filter(|r| !r.is_empty())
        .map(SparseVec::from_terms)
        .collect()
}

fn check_compatible(alg: &RealLieAlgebra, w: &WeylSpace) -> Result<()> {
    let g = w.form().gram();
    if alg.n() != w.n() {
        return Err(Error::NotCompatible(format!(
            "{} acts on R^{}, tensors live on R^{}",
            alg.label(),
            alg.n(),
            w.n()
        )));
    }
    for x in alg.basis() {
        if !x.transpose().mul(g).add(&g.mul(x)).is_zero() {
            return Err(Error::NotCompatible(format!(
                "{} does not preserve the form of the Weyl space",
                alg.label()
            )));
        }
    }
    Ok(())
}

/// Canonical kernel basis and its free columns.
fn fixed_sparse(
    alg: &RealLieAlgebra,
    w: &WeylSpace,
) -> Result<(Vec<SparseVec<Scalar>>, Vec<usize>)> {
    check_compatible(alg, w)?;
    let mut solver = w.constraint_solver().clone();
    let gens = alg.generators();
    let blocks: Vec<Vec<SparseVec<Scalar>>> = gens
        .par_iter()
        .map(|x| action_rows(w.layout(), x))
        .collect();
    for row in blocks.into_iter().flatten() {
        solver.insert(row);
    }
    Ok((solver.kernel_sparse(), solver.free_columns()))
}

/// Basis of {phi in W : X . phi = 0 for all X in alg}.
pub fn fixed_space(alg: &RealLieAlgebra, w: &WeylSpace) -> Result<Vec<TensorW>> {
    Ok(fixed_sparse(alg, w)?
        .0
        .iter()
        .map(|v| TensorW::from_sparse(w.n(), v))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantSpace {
    /// Basis of a common eigenspace.
    pub basis: Vec<TensorW>,
    /// Eigenvalue of each complement generator, in order.
    pub eigenvalues: Vec<Scalar>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantLines {
    /// Dimension of the fixed space of the derived subalgebra.
    pub derived_fixed_dim: usize,
    /// Generators outside the derived subalgebra, acting by scalars.
    pub complement: usize,
    pub spaces: Vec<InvariantSpace>,
    /// No invariant line with an irrational eigenvalue can have been missed.
    pub complete: bool,
}

impl InvariantLines {
    /// The invariant lines, if there are finitely many.
    pub fn lines(&self) -> Option<Vec<&TensorW>> {
        self.spaces
            .iter()
            .all(|s| s.basis.len() == 1)
            .then(|| self.spaces.iter().map(|s| &s.basis[0]).collect())
    }

    pub fn unique_line(&self) -> Option<&TensorW> {
        match self.lines() {
            Some(v) if v.len() == 1 && self.complete => Some(v[0]),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }
}

/// Lines in W preserved up to scale by alg: the fixed space of the derived
/// algebra, split into common eigenspaces of the remaining generators.
pub fn invariant_lines(alg: &RealLieAlgebra, w: &WeylSpace) -> Result<InvariantLines> {
    check_compatible(alg, w)?;
    let d = alg.derived();
    let (f, free) = fixed_sparse(&d, w)?;
    let comp = alg.complement_of(&d);
    let n = w.n();
    let layout = w.layout();
    let mut ops = Vec::new();
    for x in &comp {
        let xr = rows_of(x);
        let mut cols = Vec::new();
        for v in &f {
            let image = act_entries(layout, &xr, v.entries());
            let dense = image.to_dense(layout.len());
            let coords: Vec<Scalar> = free.iter().map(|&c| dense[c].clone()).collect();
            let rebuilt = coords
                .iter()
                .zip(&f)
                .filter(|(c, _)| !c.is_zero())
                .fold(SparseVec::new(), |acc, (c, b)| acc.axpy_neg(&-c.clone(), b));
            if rebuilt != image {
                return Err(Error::NotClosed(format!(
                    "fixed space of [{0},{0}] is not {0}-invariant",
                    alg.label()
                )));
            }
            cols.push(coords);
        }
        ops.push(ExactMatrix::from_columns(f.len(), &cols));
    }
    let common = common_rational_eigenlines(&ops, f.len());
    let spaces = common
        .spaces
        .into_iter()
        .map(|s| {
            let basis = s
                .basis
                .iter()
                .map(|c| {
                    let v = c
                        .iter()
                        .zip(&f)
                        .filter(|(c, _)| !c.is_zero())
                        .fold(SparseVec::new(), |acc, (c, b)| acc.axpy_neg(&-c.clone(), b));
                    TensorW::from_sparse(n, &v)
                })
                .collect();
            InvariantSpace {
                basis,
                eigenvalues: s.eigenvalues,
            }
        })
        .collect();
    Ok(InvariantLines {
        derived_fixed_dim: f.len(),
        complement: comp.len(),
        spaces,
        complete: common.complete,
    })
}

/// Stabilizer up to scale, with lambda(X) for each basis element X.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub algebra: RealLieAlgebra,
    pub scaling: Vec<Scalar>,
}

fn stabilizer_kernel(
    phi: &TensorW,
    ambient: &RealLieAlgebra,
    with_scale: bool,
) -> Result<Vec<Vec<Scalar>>> {
    if phi.is_zero() {
        return Err(Error::InvalidArgument(
            "stabilizer of the zero tensor".into(),
        ));
    }
    if ambient.n() != phi.n() {
        return Err(Error::Shape(format!(
            "ambient on R^{}, tensor on R^{}",
            ambient.n(),
            phi.n()
        )));
    }
    if let Some(g) = ambient.form() {
        let form = MetricForm::from_gram(g)?;
        let bad = super::is_weyl(phi, &form);
        if !bad.is_empty() {
            return Err(Error::NotWeyl(format!(
                "{} violated constraints, first {}",
                bad.len(),
                bad[0]
            )));
        }
    }
    let layout = TensorLayout::new(phi.n());
    let entries = phi.to_sparse();
    let images: Vec<SparseVec<Scalar>> = ambient
        .basis()
        .par_iter()
        .map(|x| act_entries(&layout, &rows_of(x), entries.entries()))
        .collect();
    let d = ambient.dim();
    let ncols = if with_scale { d + 1 } else { d };
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); layout.len()];
    for (j, img) in images.iter().enumerate() {
        for (r, v) in img.entries() {
            rows[*r].push((j, v.clone()));
        }
    }
    if with_scale {
        for (r, v) in entries.entries() {
            rows[*r].push((d, -v.clone()));
        }
    }
    let mut solver = EchelonSolver::new(ncols);
    for r in rows.into_iter().filter(|r| !r.is_empty()) {
        solver.insert(SparseVec::from_terms(r));
    }
    Ok(solver.kernel())
}

fn combine(ambient: &RealLieAlgebra, c: &[Scalar]) -> ExactMatrix {
    let n = ambient.n();
    ambient
        .basis()
        .iter()
        .zip(c)
        .filter(|(_, c)| !c.is_zero())
        .fold(ExactMatrix::zeros(n, n), |acc, (b, c)| acc.add(&b.scale(c)))
}

/// co(phi) = {X in ambient : X . phi = lambda phi}, solved jointly in (X, lambda).
pub fn co_stabilizer(phi: &TensorW, ambient: &RealLieAlgebra) -> Result<Stabilizer> {
    let d = ambient.dim();
    let kernel = stabilizer_kernel(phi, ambient, true)?;
    let basis: Vec<ExactMatrix> = kernel.iter().map(|c| combine(ambient, &c[..d])).collect();
    let scaling = kernel.iter().map(|c| c[d].clone()).collect();
    let algebra = RealLieAlgebra::new(
        ambient.n(),
        basis,
        ambient.form().cloned(),
        format!("co in {}", ambient.label()),
    )?;
    Ok(Stabilizer { algebra, scaling })
}

/// ann(phi) = {X in ambient : X . phi = 0}.
pub fn annihilator(phi: &TensorW, ambient: &RealLieAlgebra) -> Result<RealLieAlgebra> {
    let kernel = stabilizer_kernel(phi, ambient, false)?;
    let basis: Vec<ExactMatrix> = kernel.iter().map(|c| combine(ambient, c)).collect();
    RealLieAlgebra::new(
        ambient.n(),
        basis,
        ambient.form().cloned(),
        format!("ann in {}", ambient.label()),
    )
}
