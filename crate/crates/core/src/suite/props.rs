//! Seeded randomized property checks over exact instances.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::error::Result;
use crate::exact::{signature, ExactMatrix, Scalar};
use crate::lie::{
    construct_real, Chirality, MetricForm, RealLieAlgebra, SixCandidate, SubalgebraSpec,
};
use crate::weyl::{act, co_stabilizer, is_weyl, make_tensor, TensorKind, TensorW, WeylSpace};

use super::{Check, Outcome, Provenance};

/// Instances per property and dimension in the acceptance suite.
pub const PROPERTY_INSTANCES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// act([X,Y], phi) = act(X, act(Y, phi)) - act(Y, act(X, phi)).
    ActionHomomorphism,
    /// act(X, phi) is Weyl for X in so(form) and phi Weyl.
    WeylPreservation,
    /// co(c phi) = co(phi) for rational c != 0.
    ScaleInvariance,
    /// Constructed algebras are bracket-closed and preserve their form.
    ClosureCompatibility,
    /// The signature of P^T G P equals that of G for invertible P.
    CongruenceInvariance,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::ActionHomomorphism,
        Property::WeylPreservation,
        Property::ScaleInvariance,
        Property::ClosureCompatibility,
        Property::CongruenceInvariance,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::ActionHomomorphism => "action-homomorphism",
            Property::WeylPreservation => "weyl-preservation",
            Property::ScaleInvariance => "scale-invariance",
            Property::ClosureCompatibility => "closure-compatibility",
            Property::CongruenceInvariance => "congruence-invariance",
        })
    }
}

fn seed(p: Property, n: usize) -> u64 {
    0x5eed_0000 + 16 * n as u64 + Property::ALL.iter().position(|q| *q == p).unwrap() as u64
}

fn scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

fn nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

fn forms(n: usize) -> Vec<MetricForm> {
    let mut out = vec![MetricForm::riemannian(n)];
    out.extend(MetricForm::lightcone(n));
    out.extend(MetricForm::null_pairs(n));
    out
}

/// Random combination of the basis, each coefficient nonzero with
/// probability one half.
fn element(rng: &mut ChaCha8Rng, alg: &RealLieAlgebra) -> ExactMatrix {
    let n = alg.n();
    alg.basis().iter().fold(ExactMatrix::zeros(n, n), |acc, b| {
        if rng.gen_bool(0.5) {
            acc.add(&b.scale(&nonzero(rng)))
        } else {
            acc
        }
    })
}

/// Combination of three random basis tensors.
fn tensor(rng: &mut ChaCha8Rng, basis: &[TensorW]) -> TensorW {
    let n = basis[0].n();
    (0..3).fold(TensorW::zero(n), |acc, _| {
        acc.add(&basis.choose(rng).unwrap().scale(&nonzero(rng)))
    })
}

/// (form, so(form), W basis) for every supported convention at n.
fn spaces(n: usize) -> Result<Vec<(MetricForm, RealLieAlgebra, Vec<TensorW>)>> {
    forms(n)
        .into_iter()
        .map(|f| {
            let so = RealLieAlgebra::so(&f);
            let w = WeylSpace::new(&f)?.basis();
            Ok((f, so, w))
        })
        .collect()
}

fn specs(n: usize) -> Vec<SubalgebraSpec> {
    let mut v: Vec<SubalgebraSpec> = (1..n).map(|k| SubalgebraSpec::Block { k, n }).collect();
    v.extend([
        SubalgebraSpec::P1 { n },
        SubalgebraSpec::R1 { n },
        SubalgebraSpec::SoR1 { n },
    ]);
    if n >= 4 {
        v.extend([SubalgebraSpec::S { n }, SubalgebraSpec::P2 { n }]);
    }
    if n % 2 == 0 {
        v.push(SubalgebraSpec::Unitary { l: n / 2 });
    }
    match n {
        4 => v.extend(
            [Chirality::L, Chirality::R].map(|chirality| SubalgebraSpec::So3 { chirality }),
        ),
        6 => {
            for candidate in [
                SixCandidate::GradedSo3,
                SixCandidate::So2So3,
                SixCandidate::GradedSo2So3,
            ] {
                v.extend(
                    [Chirality::L, Chirality::R].map(|chirality| SubalgebraSpec::Six {
                        candidate,
                        chirality,
                    }),
                );
            }
        }
        7 => v.push(SubalgebraSpec::G2),
        _ => {}
    }
    v
}

fn preserves(x: &ExactMatrix, g: &ExactMatrix) -> bool {
    x.transpose().mul(g).add(&g.mul(x)).is_zero()
}

/// Number of the `count` seeded instances that satisfy `p` at dimension n.
pub fn run_property(p: Property, n: usize, count: usize) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed(p, n));
    let mut ok = 0;
    match p {
        Property::ActionHomomorphism | Property::WeylPreservation => {
            let sp = spaces(n)?;
            for _ in 0..count {
                let (f, so, w) = sp.choose(&mut rng).unwrap();
                let phi = tensor(&mut rng, w);
                let x = element(&mut rng, so);
                let holds = if p == Property::ActionHomomorphism {
                    let y = element(&mut rng, so);
                    let lhs = act(&x.bracket(&y), &phi)?;
                    let rhs = act(&x, &act(&y, &phi)?)?
                        .add(&act(&y, &act(&x, &phi)?)?.scale(&-Scalar::ONE));
                    lhs == rhs
                } else {
                    is_weyl(&act(&x, &phi)?, f).is_empty()
                };
                ok += usize::from(holds);
            }
        }
        Property::ScaleInvariance => {
            let mut base = Vec::new();
            for kind in TensorKind::ALL {
                let Ok(t) = make_tensor(kind, n) else {
                    continue;
                };
                let form = kind.natural_form(n)?;
                let so = RealLieAlgebra::so(&form);
                let co = co_stabilizer(&t, &so)?;
                base.push((t, so, co));
            }
            for _ in 0..count {
                let (t, so, co) = base.choose(&mut rng).unwrap();
                let c = nonzero(&mut rng);
                let scaled = co_stabilizer(&t.scale(&c), so)?;
                ok += usize::from(
                    scaled.algebra.span_eq(&co.algebra) && scaled.scaling == co.scaling,
                );
            }
        }
        Property::ClosureCompatibility => {
            let algs: Vec<RealLieAlgebra> = specs(n)
                .into_iter()
                .map(construct_real)
                .collect::<Result<_>>()?;
            for _ in 0..count {
                let alg = algs.choose(&mut rng).unwrap();
                let g = alg.form().expect("constructed algebras carry a form");
                let x = element(&mut rng, alg);
                let y = element(&mut rng, alg);
                let z = x.bracket(&y);
                ok += usize::from(alg.contains(&z) && [x, y, z].iter().all(|m| preserves(m, g)));
            }
        }
        Property::CongruenceInvariance => {
            let mut fs = forms(n);
            fs.extend((0..=n).map(|p| MetricForm::diagonal(p, n - p)));
            for _ in 0..count {
                let f = fs.choose(&mut rng).unwrap();
                let pm = loop {
                    let m = ExactMatrix::from_fn(n, n, |_, _| Scalar::int(rng.gen_range(-2..=2)));
                    if m.rank() == n {
                        break m;
                    }
                };
                let (p, q) = f.signature();
                ok += usize::from(signature(&pm.transpose().mul(f.gram()).mul(&pm)) == (p, q, 0));
            }
        }
    }
    Ok(ok)
}

/// One check per property at dimension n.
pub fn property_checks(n: usize, count: usize) -> Vec<Check> {
    Property::ALL
        .into_iter()
        .map(|p| {
            Check::new(format!("property-{p}"), Provenance::Definition, move || {
                Ok(Outcome::new(
                    json!({ "holds": count }),
                    json!({ "holds": run_property(p, n, count)? }),
                ))
            })
            .param("n", n)
            .param("instances", count)
        })
        .collect()
}
