use weylstab::exact::{
    common_rational_eigenlines, rational_eigenspaces, signature, EchelonSolver, SparseVec,
};
use weylstab::lie::{construct_real, grading, MetricForm, RealLieAlgebra, SubalgebraSpec};
use weylstab::weyl::{act, fixed_space, invariant_lines, WeylSpace};
use weylstab::{ExactMatrix, Scalar};

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

#[test]
fn kernel_examples() {
    assert!(ExactMatrix::identity(4).kernel().is_empty());
    let k = ExactMatrix::zeros(2, 3).kernel();
    assert_eq!(k.len(), 3);
    assert_eq!(ExactMatrix::from_columns(3, &k).rank(), 3);

    let a = ExactMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let k = a.kernel();
    assert_eq!(k.len(), 1);
    assert!(a.mul_vec(&k[0]).iter().all(Scalar::is_zero));
    assert_eq!(a.rank() + k.len(), 3);
}

#[test]
fn sparse_and_dense_elimination_agree() {
    let rows = [[1, 0, 2, -1], [0, 3, 1, 1], [1, 3, 3, 0], [2, -3, 3, -3]];
    let dense = ExactMatrix::from_ints(&rows.iter().map(|r| &r[..]).collect::<Vec<_>>());
    let mut solver = EchelonSolver::new(4);
    for r in rows {
        let v: Vec<Scalar> = r.iter().map(|&x| Scalar::int(x)).collect();
        solver.insert(SparseVec::from_dense(&v));
    }
    assert_eq!(solver.rank(), dense.rank());
    assert_eq!(solver.nullity(), dense.kernel().len());
    for v in solver.kernel() {
        assert!(dense.mul_vec(&v).iter().all(Scalar::is_zero));
    }
}

#[test]
fn signature_examples() {
    let d = ExactMatrix::diagonal(&[q(1, 1), q(-1, 1), q(1, 1), q(-1, 1), q(-1, 1)]);
    assert_eq!(signature(&d), (2, 3, 0));
    assert_eq!(signature(&ExactMatrix::zeros(4, 4)), (0, 0, 4));
    // off-diagonal pairing with zero diagonal needs a pivot swap
    assert_eq!(
        signature(&ExactMatrix::from_ints(&[&[0, 1], &[1, 0]])),
        (1, 1, 0)
    );
    let so3 = RealLieAlgebra::so(&MetricForm::riemannian(3));
    assert_eq!(signature(&so3.trace_form()), (0, 3, 0));
    assert_eq!(
        signature(MetricForm::lightcone(6).unwrap().gram()),
        (5, 1, 0)
    );
}

#[test]
fn eigenline_examples() {
    let id = common_rational_eigenlines(&[ExactMatrix::identity(2)], 2);
    assert!(id.complete);
    assert_eq!(id.spaces.len(), 1);
    assert_eq!(
        id.spaces[0].basis,
        vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]]
    );
    assert_eq!(id.line_count(), None);

    let diag = common_rational_eigenlines(&[ExactMatrix::diagonal(&[q(1, 1), q(2, 1)])], 2);
    assert_eq!(diag.line_count(), Some(2));

    // rotation by a right angle has no real eigenvalue at all
    let rot = rational_eigenspaces(&ExactMatrix::from_ints(&[&[0, -1], &[1, 0]]));
    assert!(rot.spaces.is_empty());
    assert!(rot.complete);

    // x^2 - 2 has real irrational roots, so the search is incomplete
    let irr = rational_eigenspaces(&ExactMatrix::from_ints(&[&[0, 2], &[1, 0]]));
    assert!(irr.spaces.is_empty());
    assert!(!irr.complete);
}

// s(6) = (R + so(3)) x R^4. The grading acts on the 9-dimensional r1-fixed
// space by one scalar, so the single eigenline appears only after restricting
// to the fixed space of the derived algebra.
#[test]
fn s6_grading_on_r1_fixed_space() {
    let form = MetricForm::lightcone(6).unwrap();
    let w = WeylSpace::new(&form).unwrap();
    let r1 = construct_real(SubalgebraSpec::R1 { n: 6 }).unwrap();
    let fixed = fixed_space(&r1, &w).unwrap();
    assert_eq!(fixed.len(), 9);

    let h = grading(6);
    for t in &fixed {
        assert_eq!(act(&h, t).unwrap(), t.scale(&q(2, 1)));
    }

    let s = construct_real(SubalgebraSpec::S { n: 6 }).unwrap();
    assert_eq!(s.derived().dim(), 7);
    let lines = invariant_lines(&s, &w).unwrap();
    assert_eq!(lines.derived_fixed_dim, 1);
    assert!(lines.complete);
    assert!(lines.unique_line().is_some());
}
