use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianMatrix, Scalar};

use super::{ComplexLieAlgebra, MetricForm, RealLieAlgebra};

/// E_ij - E_ji; skew for any form that is the identity on {i, j}.
pub fn rotation(n: usize, i: usize, j: usize) -> ExactMatrix {
    ExactMatrix::unit(n, i, j).sub(&ExactMatrix::unit(n, j, i))
}

fn rotations(n: usize, idx: &[usize]) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            out.push(rotation(n, i, j));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Chirality {
    L,
    R,
}

impl Chirality {
    pub fn mirror(self) -> Chirality {
        match self {
            Chirality::L => Chirality::R,
            Chirality::R => Chirality::L,
        }
    }
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::L => "L",
            Chirality::R => "R",
        })
    }
}

/// One of the two so(3) ideals of so(4) acting on indices [a,b,c,d]. L is
/// spanned by L_ab+L_cd, L_ac-L_bd, L_ad+L_bc; R flips the second sign.
pub fn so3_chiral(n: usize, idx: [usize; 4], chi: Chirality) -> Vec<ExactMatrix> {
    let [a, b, c, d] = idx;
    let s = match chi {
        Chirality::L => Scalar::ONE,
        Chirality::R => -Scalar::ONE,
    };
    let r = |i, j| rotation(n, i, j);
    vec![
        r(a, b).add(&r(c, d).scale(&s)),
        r(a, c).sub(&r(b, d).scale(&s)),
        r(a, d).add(&r(b, c).scale(&s)),
    ]
}

/// The three n=6 candidates inside p1(6) acting on R^4 = span{e1..e4}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SixCandidate {
    /// (R + so(3)) x R^4
    GradedSo3,
    /// (so(2) x so(3)) x R^4, the so(2) of opposite chirality
    So2So3,
    /// (R + so(2) x so(3)) x R^4
    GradedSo2So3,
}

impl SixCandidate {
    pub const ALL: [SixCandidate; 3] = [
        SixCandidate::GradedSo3,
        SixCandidate::So2So3,
        SixCandidate::GradedSo2So3,
    ];
}

/// Named subalgebras with explicit bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SubalgebraSpec {
    /// u(l) in so(2l), X = A + iB as [[A,-B],[B,A]].
    Unitary { l: usize },
    /// so(k) x so(n-k) in so(n).
    Block { k: usize, n: usize },
    /// Parabolic p1 in so(1,n-1): grading, so(n-2), nilradical r1.
    P1 { n: usize },
    /// (R + so(n-3)) x R^{n-2} in so(1,n-1).
    S { n: usize },
    /// Abelian nilradical r1 of p1.
    R1 { n: usize },
    /// so(n-2) x r1, no grading element.
    SoR1 { n: usize },
    /// so(3)_L or so(3)_R in so(4).
    So3 { chirality: Chirality },
    /// n=6 candidate with the so(3) of the given chirality.
    Six {
        candidate: SixCandidate,
        chirality: Chirality,
    },
    /// Annihilator of the associative 3-form in so(7).
    G2,
    /// Stabilizer of a null 2-plane in so(2,n-2).
    P2 { n: usize },
    /// gl(l,C) in so(2l,C) on V + V*.
    GlComplex { l: usize },
    /// sl(l,C) in so(2l,C) on V + V*.
    SlComplex { l: usize },
}

impl fmt::Display for SubalgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SubalgebraSpec::Unitary { l } => write!(f, "u({l})"),
            SubalgebraSpec::Block { k, n } => write!(f, "so({k}) x so({})", n - k),
            SubalgebraSpec::P1 { n } => write!(f, "p1({n})"),
            SubalgebraSpec::S { n } => write!(f, "s({n})"),
            SubalgebraSpec::R1 { n } => write!(f, "r1({n})"),
            SubalgebraSpec::SoR1 { n } => write!(f, "so({}) x r1({n})", n - 2),
            SubalgebraSpec::So3 { chirality } => write!(f, "so(3)_{chirality}"),
            SubalgebraSpec::Six {
                candidate,
                chirality,
            } => {
                let o = chirality.mirror();
                match candidate {
                    SixCandidate::GradedSo3 => write!(f, "(R + so(3)_{chirality}) x R^4"),
                    SixCandidate::So2So3 => write!(f, "(so(2)_{o} x so(3)_{chirality}) x R^4"),
                    SixCandidate::GradedSo2So3 => {
                        write!(f, "(R + so(2)_{o} x so(3)_{chirality}) x R^4")
                    }
                }
            }
            SubalgebraSpec::G2 => write!(f, "g2"),
            SubalgebraSpec::P2 { n } => write!(f, "p2({n})"),
            SubalgebraSpec::GlComplex { l } => write!(f, "gl({l},C)"),
            SubalgebraSpec::SlComplex { l } => write!(f, "sl({l},C)"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Constructed {
    Real(RealLieAlgebra),
    Complex(ComplexLieAlgebra),
}

impl Constructed {
    /// Dimension over the field of definition.
    pub fn dim(&self) -> usize {
        match self {
            Constructed::Real(a) => a.dim(),
            Constructed::Complex(a) => a.dim(),
        }
    }

    pub fn real(self) -> Option<RealLieAlgebra> {
        match self {
            Constructed::Real(a) => Some(a),
            Constructed::Complex(_) => None,
        }
    }

    pub fn complex(self) -> Option<ComplexLieAlgebra> {
        match self {
            Constructed::Complex(a) => Some(a),
            Constructed::Real(_) => None,
        }
    }
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg()))
    }
}

impl SubalgebraSpec {
    /// The form whose so algebra contains this subalgebra.
    pub fn form(&self) -> Result<MetricForm> {
        self.validate()?;
        match *self {
            SubalgebraSpec::Unitary { l } => Ok(MetricForm::riemannian(2 * l)),
            SubalgebraSpec::Block { n, .. } => Ok(MetricForm::riemannian(n)),
            SubalgebraSpec::P1 { n }
            | SubalgebraSpec::S { n }
            | SubalgebraSpec::R1 { n }
            | SubalgebraSpec::SoR1 { n } => MetricForm::lightcone(n),
            SubalgebraSpec::So3 { .. } => Ok(MetricForm::riemannian(4)),
            SubalgebraSpec::Six { .. } => MetricForm::lightcone(6),
            SubalgebraSpec::G2 => Ok(MetricForm::riemannian(7)),
            SubalgebraSpec::P2 { n } => MetricForm::null_pairs(n),
            SubalgebraSpec::GlComplex { l } | SubalgebraSpec::SlComplex { l } => {
                MetricForm::isotropic_pair(l)
            }
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            SubalgebraSpec::Unitary { l } | SubalgebraSpec::GlComplex { l } => {
                need(l >= 1, || format!("{self}: l >= 1"))
            }
            SubalgebraSpec::SlComplex { l } => need(l >= 2, || format!("{self}: l >= 2")),
            SubalgebraSpec::Block { k, n } => need(k >= 1 && k < n, || {
                format!("block needs 1 <= k < n, got k={k} n={n}")
            }),
            SubalgebraSpec::P1 { n } | SubalgebraSpec::R1 { n } | SubalgebraSpec::SoR1 { n } => {
                need(n >= 3, || format!("{self}: n >= 3"))
            }
            SubalgebraSpec::S { n } | SubalgebraSpec::P2 { n } => {
                need(n >= 4, || format!("{self}: n >= 4"))
            }
            _ => Ok(()),
        }
    }

    /// Closed-form dimension over the field of definition.
    pub fn expected_dim(&self) -> usize {
        let b = crate::census::binom2;
        match *self {
            SubalgebraSpec::Unitary { l } | SubalgebraSpec::GlComplex { l } => l * l,
            SubalgebraSpec::SlComplex { l } => l * l - 1,
            SubalgebraSpec::Block { k, n } => b(k) + b(n - k),
            SubalgebraSpec::P1 { n } => b(n - 2) + n - 1,
            SubalgebraSpec::S { n } => b(n - 2) + 2,
            SubalgebraSpec::R1 { n } => n - 2,
            SubalgebraSpec::SoR1 { n } => b(n - 2) + n - 2,
            SubalgebraSpec::So3 { .. } => 3,
            SubalgebraSpec::Six { candidate, .. } => match candidate {
                SixCandidate::GradedSo3 | SixCandidate::So2So3 => 8,
                SixCandidate::GradedSo2So3 => 9,
            },
            SubalgebraSpec::G2 => 14,
            SubalgebraSpec::P2 { n } => b(n - 2) + 4,
        }
    }
}

pub fn construct_subalgebra(spec: SubalgebraSpec) -> Result<Constructed> {
    let form = spec.form()?;
    let label = spec.to_string();
    let g = Some(form.gram().clone());
    let real = |n: usize, basis: Vec<ExactMatrix>| {
        RealLieAlgebra::new(n, basis, g.clone(), label.clone()).map(Constructed::Real)
    };
    match spec {
        SubalgebraSpec::Unitary { l } => real(2 * l, unitary_basis(l)),
        SubalgebraSpec::Block { k, n } => {
            let mut b = rotations(n, &(0..k).collect::<Vec<_>>());
            b.extend(rotations(n, &(k..n).collect::<Vec<_>>()));
            real(n, b)
        }
        SubalgebraSpec::P1 { n } => {
            let mut b = vec![grading(n)];
            b.extend(rotations(n, &(1..n - 1).collect::<Vec<_>>()));
            b.extend(r1_basis(n));
            real(n, b)
        }
        SubalgebraSpec::S { n } => {
            let mut b = vec![grading(n)];
            b.extend(rotations(n, &(2..n - 1).collect::<Vec<_>>()));
            b.extend(r1_basis(n));
            real(n, b)
        }
        SubalgebraSpec::R1 { n } => real(n, r1_basis(n)),
        SubalgebraSpec::SoR1 { n } => {
            let mut b = rotations(n, &(1..n - 1).collect::<Vec<_>>());
            b.extend(r1_basis(n));
            real(n, b)
        }
        SubalgebraSpec::So3 { chirality } => real(4, so3_chiral(4, [0, 1, 2, 3], chirality)),
        SubalgebraSpec::Six {
            candidate,
            chirality,
        } => {
            let idx = [1, 2, 3, 4];
            let mut b = Vec::new();
            if candidate != SixCandidate::So2So3 {
                b.push(grading(6));
            }
            if candidate != SixCandidate::GradedSo3 {
                b.push(so3_chiral(6, idx, chirality.mirror()).swap_remove(0));
            }
            b.extend(so3_chiral(6, idx, chirality));
            b.extend(r1_basis(6));
            real(6, b)
        }
        SubalgebraSpec::G2 => {
            let so7 = RealLieAlgebra::so(&form);
            let psi = associative_form();
            so7.solve_in(|x| act_on_three_form(x, &psi), label)
                .map(Constructed::Real)
        }
        SubalgebraSpec::P2 { n } => {
            let so = RealLieAlgebra::so(&form);
            let plane = [n - 2, n - 1];
            so.solve_in(
                |x| {
                    let mut out = Vec::new();
                    for &j in &plane {
                        for i in (0..n).filter(|i| !plane.contains(i)) {
                            out.push(x[(i, j)].clone());
                        }
                    }
                    out
                },
                label,
            )
            .map(Constructed::Real)
        }
        SubalgebraSpec::GlComplex { l } => {
            gl_complex(l, false, &form, label).map(Constructed::Complex)
        }
        SubalgebraSpec::SlComplex { l } => {
            gl_complex(l, true, &form, label).map(Constructed::Complex)
        }
    }
}

/// Real construction; errors for the complex specs.
pub fn construct_real(spec: SubalgebraSpec) -> Result<RealLieAlgebra> {
    construct_subalgebra(spec)?
        .real()
        .ok_or_else(|| Error::Unsupported(format!("{spec} is complex")))
}

pub fn construct_complex(spec: SubalgebraSpec) -> Result<ComplexLieAlgebra> {
    construct_subalgebra(spec)?
        .complex()
        .ok_or_else(|| Error::Unsupported(format!("{spec} is real")))
}

/// Grading element E_00 - E_{n-1,n-1} of p1 in the lightcone basis.
pub fn grading(n: usize) -> ExactMatrix {
    ExactMatrix::unit(n, 0, 0).sub(&ExactMatrix::unit(n, n - 1, n - 1))
}

/// E_{0i} - E_{i,n-1} for i = 1..n-2 in the lightcone basis.
pub fn r1_basis(n: usize) -> Vec<ExactMatrix> {
    (1..n - 1)
        .map(|i| ExactMatrix::unit(n, 0, i).sub(&ExactMatrix::unit(n, i, n - 1)))
        .collect()
}

fn unitary_basis(l: usize) -> Vec<ExactMatrix> {
    let n = 2 * l;
    let mut out = Vec::new();
    for a in 0..l {
        for b in a + 1..l {
            out.push(rotation(n, a, b).add(&rotation(n, a + l, b + l)));
        }
    }
    for a in 0..l {
        for b in a..l {
            // B = E_ab + E_ba placed as [[0,-B],[B,0]]
            let mut m = ExactMatrix::zeros(n, n);
            for (i, j) in [(a, b), (b, a)] {
                m[(i + l, j)] = Scalar::ONE;
                m[(i, j + l)] = -Scalar::ONE;
            }
            out.push(m);
        }
    }
    out
}

/// Complex structure commuting with u(l): [[0,-I],[I,0]].
pub fn complex_structure(l: usize) -> ExactMatrix {
    let n = 2 * l;
    ExactMatrix::from_fn(n, n, |i, j| {
        if i == j + l {
            Scalar::ONE
        } else if j == i + l {
            -Scalar::ONE
        } else {
            Scalar::ZERO
        }
    })
}

fn gl_complex(
    l: usize,
    traceless: bool,
    form: &MetricForm,
    label: String,
) -> Result<ComplexLieAlgebra> {
    let n = 2 * l;
    let e =
        |a: usize, b: usize| ExactMatrix::unit(n, a, b).sub(&ExactMatrix::unit(n, b + l, a + l));
    let mut basis = Vec::new();
    for a in 0..l {
        for b in 0..l {
            if traceless && a == b {
                continue;
            }
            basis.push(e(a, b));
        }
    }
    if traceless {
        for a in 0..l - 1 {
            basis.push(e(a, a).sub(&e(a + 1, a + 1)));
        }
    }
    let basis: Vec<GaussianMatrix> = basis.iter().map(|m| m.complexify()).collect();
    ComplexLieAlgebra::new(n, basis, Some(form.gram().complexify()), label)
}

/// Terms of e^{123}+e^{145}+e^{167}+e^{246}-e^{257}-e^{347}-e^{356}, 0-based.
pub const ASSOCIATIVE_TERMS: [([usize; 3], i64); 7] = [
    ([0, 1, 2], 1),
    ([0, 3, 4], 1),
    ([0, 5, 6], 1),
    ([1, 3, 5], 1),
    ([1, 4, 6], -1),
    ([2, 3, 6], -1),
    ([2, 4, 5], -1),
];

/// Fully antisymmetric 7x7x7 array of the associative 3-form.
pub fn associative_form() -> Vec<Scalar> {
    let mut psi = vec![Scalar::ZERO; 343];
    for (t, s) in ASSOCIATIVE_TERMS {
        for (perm, sign) in [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([1, 0, 2], -1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
        ] {
            let (a, b, c) = (t[perm[0]], t[perm[1]], t[perm[2]]);
            psi[49 * a + 7 * b + c] = Scalar::int(s * sign);
        }
    }
    psi
}

/// Components (a<b<c) of X . psi = -sum_e (X_ea psi_ebc + X_eb psi_aec + X_ec psi_abe).
pub fn act_on_three_form(x: &ExactMatrix, psi: &[Scalar]) -> Vec<Scalar> {
    let p = |a: usize, b: usize, c: usize| &psi[49 * a + 7 * b + c];
    let mut out = Vec::new();
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                let mut s = Scalar::ZERO;
                for e in 0..7 {
                    s = s
                        + &(&x[(e, a)] * p(e, b, c))
                        + &(&x[(e, b)] * p(a, e, c))
                        + &(&x[(e, c)] * p(a, b, e));
                }
                out.push(-s);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(spec: SubalgebraSpec) -> usize {
        construct_subalgebra(spec).unwrap().dim()
    }

    #[test]
    fn documented_dimensions() {
        assert_eq!(dim(SubalgebraSpec::Unitary { l: 3 }), 9);
        assert_eq!(dim(SubalgebraSpec::S { n: 5 }), 5);
        assert_eq!(dim(SubalgebraSpec::G2), 14);
        assert_eq!(dim(SubalgebraSpec::P1 { n: 6 }), 11);
        assert_eq!(dim(SubalgebraSpec::P2 { n: 5 }), 7);
        assert_eq!(dim(SubalgebraSpec::SlComplex { l: 3 }), 8);
    }

    #[test]
    fn every_spec_matches_closed_form() {
        let mut specs = vec![SubalgebraSpec::G2];
        for l in 1..=5 {
            specs.extend([
                SubalgebraSpec::Unitary { l },
                SubalgebraSpec::GlComplex { l },
            ]);
        }
        for n in 4..=10 {
            specs.extend([
                SubalgebraSpec::P1 { n },
                SubalgebraSpec::S { n },
                SubalgebraSpec::R1 { n },
                SubalgebraSpec::SoR1 { n },
                SubalgebraSpec::P2 { n },
                SubalgebraSpec::Block { k: 2, n },
            ]);
        }
        for chirality in [Chirality::L, Chirality::R] {
            specs.push(SubalgebraSpec::So3 { chirality });
            for candidate in SixCandidate::ALL {
                specs.push(SubalgebraSpec::Six {
                    candidate,
                    chirality,
                });
            }
        }
        for spec in specs {
            assert_eq!(dim(spec), spec.expected_dim(), "{spec}");
        }
    }

    #[test]
    fn p1_contains_listed_generators() {
        let so = RealLieAlgebra::so(&MetricForm::lightcone(5).unwrap());
        assert_eq!(so.dim(), 10);
        for x in r1_basis(5).iter().chain([&grading(5)]) {
            assert!(so.contains(x));
        }
    }

    #[test]
    fn chiral_halves_commute() {
        let l = construct_real(SubalgebraSpec::So3 {
            chirality: Chirality::L,
        })
        .unwrap();
        let r = construct_real(SubalgebraSpec::So3 {
            chirality: Chirality::R,
        })
        .unwrap();
        for x in l.basis() {
            for y in r.basis() {
                assert!(x.bracket(y).is_zero());
            }
        }
    }

    #[test]
    fn unitary_commutes_with_complex_structure() {
        let u = construct_real(SubalgebraSpec::Unitary { l: 3 }).unwrap();
        let j = complex_structure(3);
        assert!(u.basis().iter().all(|x| x.bracket(&j).is_zero()));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(construct_subalgebra(SubalgebraSpec::Block { k: 0, n: 4 }).is_err());
        assert!(construct_subalgebra(SubalgebraSpec::S { n: 3 }).is_err());
        assert!(construct_subalgebra(SubalgebraSpec::SlComplex { l: 1 }).is_err());
    }
}
