use std::sync::LazyLock;

use proptest::prelude::*;
use weylstab::exact::{common_rational_eigenlines, signature};
use weylstab::lie::{construct_real, MetricForm, RealLieAlgebra, SubalgebraSpec};
use weylstab::realforms::{ambient_so, Involution, InvolutionFamily};
use weylstab::roots::{dual, weyl_dim, CartanType, RootSystem, Weight};
use weylstab::weyl::{
    act, annihilator, co_stabilizer, is_weyl, make_tensor, TensorKind, TensorW, WeylSpace,
};
use weylstab::{ExactMatrix, Gaussian, Scalar};

struct Space {
    form: MetricForm,
    so: RealLieAlgebra,
    basis: Vec<TensorW>,
}

static SPACES: LazyLock<Vec<Space>> = LazyLock::new(|| {
    let mut out = Vec::new();
    for n in 4..=5 {
        for form in [
            MetricForm::riemannian(n),
            MetricForm::lightcone(n).unwrap(),
            MetricForm::null_pairs(n).unwrap(),
        ] {
            let so = RealLieAlgebra::so(&form);
            let basis = WeylSpace::new(&form).unwrap().basis();
            out.push(Space { form, so, basis });
        }
    }
    out
});

fn scalar() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| Scalar::new(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(scalar(), r * c)
            .prop_map(move |v| ExactMatrix::from_flat(r, c, v).unwrap())
    })
}

fn combine<T: Clone>(
    coeffs: &[Scalar],
    items: &[T],
    zero: T,
    add: impl Fn(&T, &T, &Scalar) -> T,
) -> T {
    coeffs
        .iter()
        .zip(items)
        .fold(zero, |acc, (c, x)| add(&acc, x, c))
}

fn so_element(sp: &Space, coeffs: &[Scalar]) -> ExactMatrix {
    let n = sp.form.dim();
    combine(
        coeffs,
        sp.so.basis(),
        ExactMatrix::zeros(n, n),
        |acc, x, c| acc.add(&x.scale(c)),
    )
}

fn weyl_element(sp: &Space, coeffs: &[Scalar]) -> TensorW {
    combine(
        coeffs,
        &sp.basis,
        TensorW::zero(sp.form.dim()),
        |acc, x, c| acc.add(&x.scale(c)),
    )
}

/// Invertible integer matrix with determinant +-1, as a product of
/// elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..12).prop_map(move |ops| {
        let mut m = ExactMatrix::identity(n);
        for (i, j, k) in ops {
            if i != j {
                let e = ExactMatrix::identity(n)
                    .add(&ExactMatrix::unit(n, i, j).scale(&Scalar::int(k)));
                m = e.mul(&m);
            }
        }
        m
    })
}

fn space_and_coeffs(k: usize) -> impl Strategy<Value = (usize, Vec<Vec<Scalar>>)> {
    (0..SPACES.len()).prop_flat_map(move |i| {
        let sp = &SPACES[i];
        let (a, b) = (sp.so.dim(), sp.basis.len());
        let mut parts = Vec::new();
        for j in 0..k {
            parts.push(prop::collection::vec(scalar(), if j == 0 { b } else { a }));
        }
        (Just(i), parts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in matrix(6)) {
        prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
    }

    #[test]
    fn signature_is_a_congruence_invariant(
        (a, p) in (2usize..=5).prop_flat_map(|n| (prop::collection::vec(scalar(), n * n), unimodular(n)))
    ) {
        let n = p.rows();
        let m = ExactMatrix::from_flat(n, n, a).unwrap();
        let sym = m.add(&m.transpose());
        prop_assert_eq!(signature(&p.transpose().mul(&sym).mul(&p)), signature(&sym));
    }

    #[test]
    fn eigenlines_are_common_eigenvectors(
        (p, d1, d2) in (2usize..=4).prop_flat_map(|n| (
            unimodular(n),
            prop::collection::vec(-2i64..=2, n),
            prop::collection::vec(-2i64..=2, n),
        ))
    ) {
        let n = p.rows();
        let pinv = p.inverse().unwrap();
        let conj = |d: &[i64]| {
            let diag = ExactMatrix::diagonal(&d.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>());
            p.mul(&diag).mul(&pinv)
        };
        let ops = [conj(&d1), conj(&d2)];
        let eig = common_rational_eigenlines(&ops, n);
        prop_assert!(eig.complete);
        let total: usize = eig.spaces.iter().map(|s| s.basis.len()).sum();
        prop_assert_eq!(total, n);
        for s in &eig.spaces {
            for v in &s.basis {
                for (op, lam) in ops.iter().zip(&s.eigenvalues) {
                    let lv: Vec<Scalar> = v.iter().map(|x| x * lam).collect();
                    prop_assert_eq!(op.mul_vec(v), lv);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn action_is_a_lie_algebra_action((i, c) in space_and_coeffs(3)) {
        let sp = &SPACES[i];
        let phi = weyl_element(sp, &c[0]);
        let x = so_element(sp, &c[1]);
        let y = so_element(sp, &c[2]);
        let lhs = act(&x.bracket(&y), &phi).unwrap();
        let rhs = act(&x, &act(&y, &phi).unwrap()).unwrap().add(&act(&y, &act(&x, &phi).unwrap()).unwrap().scale(&Scalar::int(-1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_preserves_weyl_tensors((i, c) in space_and_coeffs(2)) {
        let sp = &SPACES[i];
        let image = act(&so_element(sp, &c[1]), &weyl_element(sp, &c[0])).unwrap();
        prop_assert!(is_weyl(&image, &sp.form).is_empty());
    }

    #[test]
    fn stabilizers_are_scale_invariant(
        kind in prop::sample::select(TensorKind::ALL.to_vec()),
        n in 4usize..=6,
        c in nonzero(),
    ) {
        let Ok(phi) = make_tensor(kind, n) else { return Ok(()) };
        let so = RealLieAlgebra::so(&kind.natural_form(n).unwrap());
        let a = co_stabilizer(&phi, &so).unwrap();
        let b = co_stabilizer(&phi.scale(&c), &so).unwrap();
        prop_assert!(a.algebra.span_eq(&b.algebra));
        prop_assert_eq!(a.scaling, b.scaling);
    }

    #[test]
    fn annihilator_is_an_ideal_of_co(
        kind in prop::sample::select(TensorKind::ALL.to_vec()),
        n in 4usize..=6,
    ) {
        let Ok(phi) = make_tensor(kind, n) else { return Ok(()) };
        let so = RealLieAlgebra::so(&kind.natural_form(n).unwrap());
        let co = co_stabilizer(&phi, &so).unwrap();
        let ann = annihilator(&phi, &so).unwrap();
        for x in co.algebra.basis() {
            for y in ann.basis() {
                prop_assert!(ann.contains(&x.bracket(y)));
            }
        }
    }

    #[test]
    fn constructed_algebras_close_and_preserve_the_form(
        spec in prop::sample::select(vec![
            SubalgebraSpec::P1 { n: 6 },
            SubalgebraSpec::S { n: 7 },
            SubalgebraSpec::SoR1 { n: 5 },
            SubalgebraSpec::P2 { n: 6 },
            SubalgebraSpec::Unitary { l: 3 },
            SubalgebraSpec::Block { k: 3, n: 7 },
            SubalgebraSpec::G2,
        ]),
        seed in prop::collection::vec(scalar(), 28),
    ) {
        let alg = construct_real(spec).unwrap();
        let n = alg.n();
        let d = alg.dim();
        let pick = |off: usize| {
            (0..d).fold(ExactMatrix::zeros(n, n), |acc, i| acc.add(&alg.basis()[i].scale(&seed[(i + off) % seed.len()])))
        };
        let z = pick(0).bracket(&pick(7));
        prop_assert!(alg.contains(&z));
        let g = alg.form().unwrap();
        prop_assert!(z.transpose().mul(g).add(&g.mul(&z)).is_zero());
    }
}

fn cartan_type() -> impl Strategy<Value = CartanType> {
    prop_oneof![
        (1usize..=6).prop_map(CartanType::a),
        (2usize..=6).prop_map(CartanType::b),
        (3usize..=6).prop_map(CartanType::c),
        (4usize..=6).prop_map(CartanType::d),
    ]
}

fn weight_pair() -> impl Strategy<Value = (CartanType, Vec<i64>, Vec<i64>)> {
    cartan_type().prop_flat_map(|ty| {
        (
            Just(ty),
            prop::collection::vec(0i64..=2, ty.rank),
            prop::collection::vec(0i64..=2, ty.rank),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dual_weights_have_equal_dimension((ty, w, _) in weight_pair()) {
        let rs = RootSystem::new(ty);
        let lam = Weight(w);
        prop_assert_eq!(weyl_dim(&rs, &lam).unwrap(), weyl_dim(&rs, &dual(&rs, &lam).unwrap()).unwrap());
    }

    // lambda = mu + (nonnegative combination) gives dim V_lambda >= dim V_mu
    #[test]
    fn weyl_dim_is_monotone((ty, mu, extra) in weight_pair()) {
        let rs = RootSystem::new(ty);
        let lam: Vec<i64> = mu.iter().zip(&extra).map(|(a, b)| (a + b).min(2)).collect();
        prop_assert!(weyl_dim(&rs, &Weight(lam)).unwrap() >= weyl_dim(&rs, &Weight(mu)).unwrap());
    }

    #[test]
    fn sigma_is_a_conjugate_linear_involution(
        (l, fam_idx, b_idx) in (2usize..=4).prop_flat_map(|l| (Just(l), 0..InvolutionFamily::all(l).len(), 0..(l * (2 * l - 1)))),
        re in scalar(),
        im in scalar(),
    ) {
        let family = InvolutionFamily::all(l)[fam_idx];
        let theta = Involution::new(l, family).unwrap();
        let sigma = theta.anti_involution();
        let x = ambient_so(l).unwrap().basis()[b_idx].clone();
        let x = &x;
        let c = Gaussian::new(re, im);
        prop_assert_eq!(theta.apply(&theta.apply(x)), x.clone());
        prop_assert_eq!(sigma.apply(&sigma.apply(x)), x.clone());
        prop_assert_eq!(sigma.apply(&x.scale(&c)), sigma.apply(x).scale(&c.conj()));
    }
}
