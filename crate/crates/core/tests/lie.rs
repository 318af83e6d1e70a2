use weylstab::census::binom2;
use weylstab::lie::{
    construct_complex, construct_real, rotation, ComplexLieAlgebra, MetricForm, RealLieAlgebra,
    SubalgebraSpec,
};
use weylstab::{ExactMatrix, Scalar};

fn real(spec: SubalgebraSpec) -> RealLieAlgebra {
    construct_real(spec).unwrap()
}

fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|k| if k == i { Scalar::ONE } else { Scalar::ZERO })
        .collect()
}

#[test]
fn so_dimensions() {
    assert_eq!(RealLieAlgebra::so(&MetricForm::diagonal(3, 0)).dim(), 3);
    assert_eq!(
        RealLieAlgebra::so(&MetricForm::lightcone(5).unwrap()).dim(),
        10
    );
    assert_eq!(
        ComplexLieAlgebra::so_complex(&MetricForm::isotropic_pair(3).unwrap()).dim(),
        15
    );
    for n in 3..=8 {
        for form in [
            MetricForm::riemannian(n),
            MetricForm::diagonal(n - 1, 1),
            MetricForm::diagonal(2, n - 2),
        ] {
            assert_eq!(
                RealLieAlgebra::so(&form).dim(),
                binom2(n),
                "{}",
                form.label()
            );
        }
    }
}

#[test]
fn constructed_dimensions_match_closed_forms() {
    let mut specs = vec![SubalgebraSpec::G2, SubalgebraSpec::Unitary { l: 3 }];
    for n in 4..=8 {
        specs.extend([
            SubalgebraSpec::P1 { n },
            SubalgebraSpec::S { n },
            SubalgebraSpec::R1 { n },
            SubalgebraSpec::SoR1 { n },
            SubalgebraSpec::P2 { n },
            SubalgebraSpec::Block { k: 2, n },
        ]);
    }
    for spec in specs {
        assert_eq!(real(spec).dim(), spec.expected_dim(), "{spec}");
    }
    assert_eq!(real(SubalgebraSpec::Unitary { l: 3 }).dim(), 9);
    assert_eq!(real(SubalgebraSpec::S { n: 5 }).dim(), 5);
    assert_eq!(real(SubalgebraSpec::G2).dim(), 14);
    assert_eq!(real(SubalgebraSpec::P1 { n: 6 }).dim(), 11);
    for l in 2..=4 {
        assert_eq!(
            construct_complex(SubalgebraSpec::GlComplex { l })
                .unwrap()
                .dim(),
            l * l
        );
        assert_eq!(
            construct_complex(SubalgebraSpec::SlComplex { l })
                .unwrap()
                .dim(),
            l * l - 1
        );
    }
}

#[test]
fn invalid_specs_are_rejected() {
    assert!(construct_real(SubalgebraSpec::S { n: 3 }).is_err());
    assert!(construct_real(SubalgebraSpec::Block { k: 0, n: 5 }).is_err());
    assert!(construct_real(SubalgebraSpec::Block { k: 5, n: 5 }).is_err());
    assert!(construct_real(SubalgebraSpec::GlComplex { l: 2 }).is_err());
    assert!(construct_complex(SubalgebraSpec::G2).is_err());
}

#[test]
fn centralizers() {
    let form = MetricForm::isotropic_pair(3).unwrap();
    let so = ComplexLieAlgebra::so_complex(&form);
    let sl = construct_complex(SubalgebraSpec::SlComplex { l: 3 }).unwrap();
    let z = so.centralizer_of(&sl).unwrap();
    assert_eq!(z.dim(), 1);
    let mut gens = sl.basis().to_vec();
    gens.extend(z.basis().iter().cloned());
    let span = ComplexLieAlgebra::spanned_by(6, gens, None, "sl + z").unwrap();
    assert!(span.span_eq(&construct_complex(SubalgebraSpec::GlComplex { l: 3 }).unwrap()));

    let so5 = RealLieAlgebra::so(&MetricForm::riemannian(5));
    assert_eq!(so5.center().dim(), 0);

    let so4 = RealLieAlgebra::so(&MetricForm::riemannian(4));
    let so2 = so4.subalgebra(vec![rotation(4, 0, 1)], "so(2)").unwrap();
    assert_eq!(so4.centralizer_of(&so2).unwrap().dim(), 2);
}

#[test]
fn structure_invariants() {
    let so4 = RealLieAlgebra::so(&MetricForm::riemannian(4));
    assert_eq!(so4.structure_invariants(), (6, 0, 6));
    let inv = so4.algebra_invariants();
    assert_eq!(inv.trace_signature, (0, 6, 0));
    assert_eq!(inv.center_sign, None);

    let u2 = real(SubalgebraSpec::Unitary { l: 2 });
    assert_eq!(u2.structure_invariants(), (4, 1, 3));
    // the center is spanned by the complex structure, whose square is -1
    assert_eq!(u2.algebra_invariants().center_sign, Some(-1));

    let s6 = real(SubalgebraSpec::S { n: 6 });
    assert_eq!(s6.dim(), 8);
    assert_eq!(s6.derived().dim(), 7);

    let g2 = real(SubalgebraSpec::G2);
    assert_eq!(g2.structure_invariants(), (14, 0, 14));
}

#[test]
fn generated_algebras_close_under_brackets() {
    // two rotations generate all of so(3)
    let gens = vec![rotation(3, 0, 1), rotation(3, 1, 2)];
    let g = RealLieAlgebra::generated_by(3, gens, None, "gen").unwrap();
    assert!(g.span_eq(&RealLieAlgebra::so(&MetricForm::riemannian(3))));
    let p1 = real(SubalgebraSpec::P1 { n: 6 });
    for x in p1.basis() {
        for y in p1.basis() {
            assert!(p1.contains(&x.bracket(y)));
        }
    }
}

#[test]
fn stabilized_subspaces() {
    let s6 = real(SubalgebraSpec::S { n: 6 });
    let (ok, rank) = s6.stabilizes_subspace(&[unit_vec(6, 0), unit_vec(6, 1)]);
    assert!(ok);
    assert_eq!(rank, Some(1));

    let p2 = real(SubalgebraSpec::P2 { n: 5 });
    let (ok, rank) = p2.stabilizes_subspace(&[unit_vec(5, 3), unit_vec(5, 4)]);
    assert!(ok);
    assert_eq!(rank, Some(0));

    let so4 = RealLieAlgebra::so(&MetricForm::riemannian(4));
    let (ok, _) = so4.stabilizes_subspace(&[unit_vec(4, 1)]);
    assert!(!ok);
}

#[test]
fn forms_and_conversions() {
    let lc = MetricForm::lightcone(6).unwrap();
    assert_eq!(lc.signature(), (5, 1));
    assert_eq!(MetricForm::null_pairs(6).unwrap().signature(), (2, 4));
    let d = MetricForm::diagonal(5, 1);
    let c = lc.conversion_to(&d).unwrap();
    assert_eq!(c.transpose().mul(d.gram()).mul(&c), *lc.gram());
    assert!(lc.conversion_to(&MetricForm::riemannian(6)).is_err());
    assert!(MetricForm::from_gram(&ExactMatrix::zeros(3, 3)).is_err());
}

// [s, s] = so(n-3) x R^{n-2}. The r1 direction fixed by so(n-3) drops out
// at the next step, and so(n-3) x R^{n-3} is perfect from n = 6 on.
#[test]
fn derived_series_of_s() {
    for n in 6..=9 {
        let d1 = real(SubalgebraSpec::S { n }).derived();
        assert_eq!(d1.dim(), binom2(n - 3) + n - 2, "n={n}");
        let d2 = d1.derived();
        assert_eq!(d2.dim(), binom2(n - 3) + n - 3, "n={n}");
        assert!(d2.derived().span_eq(&d2), "n={n}");
    }
}
