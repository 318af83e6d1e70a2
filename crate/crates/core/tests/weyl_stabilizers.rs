use weylstab::census::binom2;
use weylstab::lie::{
    construct_real, grading, rotation, Chirality, MetricForm, RealLieAlgebra, SixCandidate,
    SubalgebraSpec,
};
use weylstab::weyl::*;
use weylstab::{ExactMatrix, Scalar};

fn block(form: &MetricForm, idx: std::ops::Range<usize>) -> RealLieAlgebra {
    let n = form.dim();
    let idx: Vec<usize> = idx.collect();
    let mut basis = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            basis.push(rotation(n, i, j));
        }
    }
    RealLieAlgebra::new(n, basis, Some(form.gram().clone()), "block").unwrap()
}

fn real(spec: SubalgebraSpec) -> RealLieAlgebra {
    construct_real(spec).unwrap()
}

fn so(form: &MetricForm) -> RealLieAlgebra {
    RealLieAlgebra::so(form)
}

#[test]
fn weyl_dimensions_all_signatures() {
    assert_eq!([4, 5, 6, 7].map(weyl_dim_formula), [10, 35, 84, 168]);
    assert_eq!(weyl_dim_formula(10), 770);
    for n in 4..=8 {
        for form in [
            MetricForm::riemannian(n),
            MetricForm::lightcone(n).unwrap(),
            MetricForm::null_pairs(n).unwrap(),
        ] {
            assert_eq!(
                WeylSpace::new(&form).unwrap().dim(),
                weyl_dim_formula(n),
                "{}",
                form.label()
            );
        }
    }
}

#[test]
fn basis_elements_pass_membership() {
    let form = MetricForm::lightcone(5).unwrap();
    let w = WeylSpace::new(&form).unwrap();
    for b in w.basis() {
        assert!(is_weyl(&b, &form).is_empty());
        assert!(w.contains(&b));
    }
}

#[test]
fn act_examples() {
    let phi = make_tensor(TensorKind::Riem1, 7).unwrap();
    assert!(act(&ExactMatrix::zeros(7, 7), &phi).unwrap().is_zero());
    let b = real(SubalgebraSpec::Block { k: 2, n: 7 });
    for x in b.basis() {
        assert!(act(x, &phi).unwrap().is_zero());
    }
    let lor = make_tensor(TensorKind::Lor, 6).unwrap();
    let scaled = act(&grading(6), &lor).unwrap();
    let c = scaled.proportional_to(&lor).unwrap();
    assert!(!c.is_zero());
    assert!(act(&ExactMatrix::zeros(5, 5), &lor).is_err());
}

#[test]
fn fixed_space_branching() {
    for n in 5..=8 {
        let f = MetricForm::riemannian(n);
        let w = WeylSpace::new(&f).unwrap();
        assert_eq!(
            fixed_space(&block(&f, 1..n), &w).unwrap().len(),
            0,
            "so(n-1), n={n}"
        );
        assert_eq!(
            fixed_space(&block(&f, 2..n), &w).unwrap().len(),
            1,
            "so(n-2), n={n}"
        );
        let lw = WeylSpace::new(&MetricForm::lightcone(n).unwrap()).unwrap();
        let r1 = real(SubalgebraSpec::R1 { n });
        assert_eq!(
            fixed_space(&r1, &lw).unwrap().len(),
            (n - 1) * (n - 2) / 2 - 1
        );
    }
    let w7 = WeylSpace::new(&MetricForm::riemannian(7)).unwrap();
    assert!(fixed_space(&real(SubalgebraSpec::G2), &w7)
        .unwrap()
        .is_empty());
}

#[test]
fn fixed_space_rejects_incompatible_algebras() {
    let w = WeylSpace::new(&MetricForm::riemannian(5)).unwrap();
    let r1 = real(SubalgebraSpec::R1 { n: 5 });
    assert!(fixed_space(&r1, &w).is_err());
    let w6 = WeylSpace::new(&MetricForm::riemannian(6)).unwrap();
    assert!(fixed_space(&real(SubalgebraSpec::Unitary { l: 2 }), &w6).is_err());
}

#[test]
fn unitary_lines_and_riem2() {
    for l in 2..=5 {
        let n = 2 * l;
        let w = WeylSpace::new(&MetricForm::riemannian(n)).unwrap();
        let u = real(SubalgebraSpec::Unitary { l });
        let lines = invariant_lines(&u, &w).unwrap();
        let line = lines.unique_line().expect("one u(l) line");
        assert!(make_tensor(TensorKind::Riem2, n)
            .unwrap()
            .proportional_to(line)
            .is_some());
    }
}

// The skew-symmetrizer in I3 is read as a projector. Of the three readings
// only the projector one is an algebraic Weyl tensor on the u(l)-fixed line.
#[test]
fn i3_normalization_readings() {
    for l in 2..=4 {
        let n = 2 * l;
        let form = MetricForm::riemannian(n);
        let fixed = fixed_space(
            &real(SubalgebraSpec::Unitary { l }),
            &WeylSpace::new(&form).unwrap(),
        )
        .unwrap();
        assert_eq!(fixed.len(), 1);
        let p = riem2_reading(n, SkewReading::Projector).unwrap();
        assert!(is_weyl(&p, &form).is_empty());
        assert_eq!(p.proportional_to(&fixed[0]), Some(Scalar::new(1, 4)));
        let s = riem2_reading(n, SkewReading::Sum).unwrap();
        assert!(!is_weyl(&s, &form).is_empty(), "sum reading at l={l}");
        let u = riem2_reading(n, SkewReading::Unskewed).unwrap();
        assert!(
            u.proportional_to(&fixed[0]).is_none(),
            "unskewed reading at l={l}"
        );
    }
}

#[test]
fn lorentzian_s_lines() {
    for n in 5..=8 {
        let w = WeylSpace::new(&MetricForm::lightcone(n).unwrap()).unwrap();
        let lines = invariant_lines(&real(SubalgebraSpec::S { n }), &w).unwrap();
        assert!(lines.complete);
        let line = lines.unique_line().unwrap();
        assert!(make_tensor(TensorKind::Lor, n)
            .unwrap()
            .proportional_to(line)
            .is_some());
    }
}

// s(4) is the stabilizer of lor(4) but preserves every line of a plane.
#[test]
fn s4_line_is_not_unique() {
    let w = WeylSpace::new(&MetricForm::lightcone(4).unwrap()).unwrap();
    let lines = invariant_lines(&real(SubalgebraSpec::S { n: 4 }), &w).unwrap();
    assert_eq!(lines.derived_fixed_dim, 2);
    assert_eq!(lines.spaces.len(), 1);
    assert_eq!(lines.spaces[0].basis.len(), 2);
    assert!(lines.unique_line().is_none());
}

#[test]
fn exclusions_have_no_lines() {
    let so3 = real(SubalgebraSpec::SoR1 { n: 5 });
    let w5 = WeylSpace::new(&MetricForm::lightcone(5).unwrap()).unwrap();
    assert!(invariant_lines(&so3, &w5).unwrap().is_empty());
    let w6 = WeylSpace::new(&MetricForm::lightcone(6).unwrap()).unwrap();
    for candidate in [
        SixCandidate::GradedSo3,
        SixCandidate::So2So3,
        SixCandidate::GradedSo2So3,
    ] {
        for chirality in [Chirality::L, Chirality::R] {
            let alg = real(SubalgebraSpec::Six {
                candidate,
                chirality,
            });
            assert!(alg.dim() >= 8);
            assert!(
                invariant_lines(&alg, &w6).unwrap().is_empty(),
                "{}",
                alg.label()
            );
        }
    }
    let p1 = real(SubalgebraSpec::P1 { n: 6 });
    assert!(invariant_lines(&p1, &w6).unwrap().is_empty());
}

#[test]
fn stabilizer_examples() {
    let np = co_stabilizer(
        &make_tensor(TensorKind::NullPlane, 5).unwrap(),
        &so(&MetricForm::null_pairs(5).unwrap()),
    )
    .unwrap();
    assert_eq!(np.algebra.dim(), 7);
    assert!(np.algebra.span_eq(&real(SubalgebraSpec::P2 { n: 5 })));

    for n in [5, 7, 8] {
        let co = co_stabilizer(
            &make_tensor(TensorKind::Riem1, n).unwrap(),
            &so(&MetricForm::riemannian(n)),
        )
        .unwrap();
        assert_eq!(co.algebra.dim(), binom2(n - 2) + 1);
        assert!(co.algebra.span_eq(&real(SubalgebraSpec::Block { k: 2, n })));
    }
    for l in 2..=4 {
        let n = 2 * l;
        let co = co_stabilizer(
            &make_tensor(TensorKind::Riem2, n).unwrap(),
            &so(&MetricForm::riemannian(n)),
        )
        .unwrap();
        assert!(co.algebra.span_eq(&real(SubalgebraSpec::Unitary { l })));
    }
    for n in 4..=7 {
        let lc = MetricForm::lightcone(n).unwrap();
        let co = co_stabilizer(&make_tensor(TensorKind::Lor, n).unwrap(), &so(&lc)).unwrap();
        assert_eq!(co.algebra.dim(), binom2(n - 2) + 2);
        assert!(co.algebra.span_eq(&real(SubalgebraSpec::S { n })));
    }
    let lc = MetricForm::lightcone(4).unwrap();
    let co4 = co_stabilizer(&make_tensor(TensorKind::Lor, 4).unwrap(), &so(&lc)).unwrap();
    assert_eq!(co4.algebra.dim(), 3);
}

#[test]
fn so_n_minus_2_tensor_is_not_scaled_by_r1() {
    for n in 5..=7 {
        let lc = MetricForm::lightcone(n).unwrap();
        let co = co_stabilizer(&make_tensor(TensorKind::SoNMinus2, n).unwrap(), &so(&lc)).unwrap();
        assert!(co.algebra.contains_all(&block(&lc, 1..n - 1)));
        assert!(!co.algebra.contains_all(&real(SubalgebraSpec::R1 { n })));
        assert_eq!(co.algebra.dim(), binom2(n - 2) + 1);
    }
}

#[test]
fn annihilator_sits_in_co_with_codim_at_most_one() {
    for (kind, n) in [
        (TensorKind::Lor, 6),
        (TensorKind::Riem1, 6),
        (TensorKind::NullPlane, 6),
    ] {
        let form = kind.natural_form(n).unwrap();
        let phi = make_tensor(kind, n).unwrap();
        let co = co_stabilizer(&phi, &so(&form)).unwrap();
        let ann = annihilator(&phi, &so(&form)).unwrap();
        assert!(co.algebra.contains_all(&ann));
        assert!(co.algebra.dim() - ann.dim() <= 1);
        for x in co.algebra.basis() {
            for y in ann.basis() {
                assert!(ann.contains(&x.bracket(y)));
            }
        }
    }
}

#[test]
fn stabilizer_errors() {
    let form = MetricForm::riemannian(5);
    assert!(co_stabilizer(&TensorW::zero(5), &so(&form)).is_err());
    let np = make_tensor(TensorKind::NullPlane, 5).unwrap();
    assert!(matches!(
        co_stabilizer(&np, &so(&form)),
        Err(weylstab::Error::NotWeyl(_))
    ));
}
