//! Expected values computed independently of the library paths they check.

use num_bigint::BigUint;
use num_integer::binomial;

use crate::census::{binom2, Source, SubalgebraDescriptor};
use crate::error::Result;
use crate::exact::{ExactMatrix, Scalar};
use crate::roots::{
    dual, so_factors, two_rho_coroot, CartanType, Family, RepType, RootSystem, Weight,
};

/// Fundamental irrep dimensions of the classical algebras in their stable
/// ranges (A_l, l >= 1; B_l, l >= 2; C_l, l >= 3; D_l, l >= 4); k is 1-based.
pub fn fundamental_dim_closed_form(ty: CartanType, k: usize) -> Option<BigUint> {
    let l = ty.rank;
    if k == 0 || k > l {
        return None;
    }
    let b = |n: usize, k: usize| binomial(BigUint::from(n), BigUint::from(k));
    match ty.family {
        Family::A => Some(b(l + 1, k)),
        Family::B if l >= 2 => Some(if k == l {
            BigUint::from(2u32).pow(l as u32)
        } else {
            b(2 * l + 1, k)
        }),
        Family::C if l >= 3 => {
            Some(b(2 * l + 1, k) * BigUint::from(2 * l - 2 * k + 2) / BigUint::from(2 * l - k + 2))
        }
        Family::D if l >= 4 => Some(if k + 1 >= l {
            BigUint::from(2u32).pow(l as u32 - 1)
        } else {
            b(2 * l, k)
        }),
        _ => None,
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Weyl dimension formula evaluated with Euclidean inner products in the
/// epsilon realization, fundamental weights obtained by inverting the Gram
/// matrix of the simple roots.
pub fn weyl_dim_eps(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    let l = rs.rank();
    let simple = rs.simple_roots_eps();
    let dimx = simple[0].len();
    let g = ExactMatrix::from_fn(l, l, |i, j| dot(&simple[i], &simple[j]));
    let ginv = g.inverse().expect("simple roots are independent");
    // omega_i = sum_k (d_i / 2) ginv_ik alpha_k with d_i = (alpha_i, alpha_i)
    let omega: Vec<Vec<Scalar>> = (0..l)
        .map(|i| {
            let half = &g[(i, i)] / &Scalar::int(2);
            (0..dimx)
                .map(|x| (0..l).map(|k| &half * &ginv[(i, k)] * &simple[k][x]).sum())
                .collect()
        })
        .collect();
    let combo = |coef: &dyn Fn(usize) -> Scalar| -> Vec<Scalar> {
        (0..dimx)
            .map(|x| (0..l).map(|i| coef(i) * &omega[i][x]).sum())
            .collect()
    };
    if lambda.0.len() != l || !lambda.is_dominant() {
        return Err(crate::Error::InvalidArgument(format!(
            "weight {lambda} for {}",
            rs.cartan_type()
        )));
    }
    let rho = combo(&|_| Scalar::ONE);
    let shifted = combo(&|i| Scalar::int(lambda.0[i] + 1));
    let mut acc = Scalar::ONE;
    for alpha in rs.positive_roots() {
        let v: Vec<Scalar> = (0..dimx)
            .map(|x| (0..l).map(|k| Scalar::int(alpha[k]) * &simple[k][x]).sum())
            .collect();
        acc = acc * dot(&shifted, &v) / dot(&rho, &v);
    }
    Ok(acc.numer().to_biguint().expect("positive dimension"))
}

/// Orthogonal versus symplectic from the parity of <lambda, 2 rho^vee>.
pub fn rep_type_by_coroot(rs: &RootSystem, lambda: &Weight) -> Result<RepType> {
    if dual(rs, lambda)? != *lambda {
        return Ok(RepType::NotSelfDual);
    }
    let pairing: i64 = two_rho_coroot(rs)
        .iter()
        .zip(&lambda.0)
        .map(|(c, r)| c * r)
        .sum();
    Ok(if pairing % 2 == 0 {
        RepType::Orthogonal
    } else {
        RepType::Symplectic
    })
}

fn so_desc(center: usize, parts: &[usize]) -> SubalgebraDescriptor {
    let mut c = center;
    let mut f = Vec::new();
    for &m in parts {
        let (z, t) = so_factors(m);
        c += z;
        f.extend(t);
    }
    SubalgebraDescriptor::new(c, f, Source::PiSystemI)
}

/// Rows of the table of maximal regular reductive subalgebras of B_l and D_l,
/// one per node k, as (label, dim).
pub fn regular_table(ty: CartanType) -> Option<Vec<(String, usize)>> {
    let l = ty.rank;
    let rows: Vec<SubalgebraDescriptor> = match ty.family {
        Family::B => (1..=l)
            .map(|k| match k {
                1 => so_desc(1, &[2 * l - 1]),
                k if k < l => so_desc(0, &[2 * k, 2 * (l - k) + 1]),
                _ => so_desc(0, &[2 * l]),
            })
            .collect(),
        Family::D => (1..=l)
            .map(|k| {
                if k + 1 >= l {
                    SubalgebraDescriptor::new(1, vec![CartanType::a(l - 1)], Source::PiSystemI)
                } else if k == 1 {
                    so_desc(1, &[2 * l - 2])
                } else {
                    so_desc(0, &[2 * k, 2 * (l - k)])
                }
            })
            .collect(),
        _ => return None,
    };
    Some(rows.iter().map(|d| (d.label(), d.dim)).collect())
}

/// Levi factor of the maximal parabolic at node k of B_l or D_l, as (label,
/// dim) with the dimension taken from the closed formula of the table.
pub fn levi_table(ty: CartanType, k: usize) -> Option<(String, usize)> {
    let l = ty.rank;
    if k == 0 || k > l {
        return None;
    }
    let a = |m: usize| {
        if m == 0 {
            vec![]
        } else {
            vec![CartanType::a(m)]
        }
    };
    let (desc, dim) = match ty.family {
        Family::B => match k {
            1 => (so_desc(1, &[2 * l - 1]), binom2(2 * l - 1) + 1),
            k if k < l => {
                let d = so_desc(0, &[2 * (l - k) + 1]);
                let f = [a(k - 1), d.factors.clone()].concat();
                (
                    SubalgebraDescriptor::new(1 + d.center, f, Source::Levi),
                    k * k + binom2(2 * l - 2 * k + 1),
                )
            }
            _ => (SubalgebraDescriptor::new(1, a(l - 1), Source::Levi), l * l),
        },
        Family::D => {
            if k + 1 >= l {
                (SubalgebraDescriptor::new(1, a(l - 1), Source::Levi), l * l)
            } else if k == 1 {
                (so_desc(1, &[2 * l - 2]), binom2(2 * l - 2) + 1)
            } else {
                let d = so_desc(0, &[2 * (l - k)]);
                let f = [a(k - 1), d.factors.clone()].concat();
                (
                    SubalgebraDescriptor::new(1 + d.center, f, Source::Levi),
                    k * k + binom2(2 * l - 2 * k),
                )
            }
        }
        _ => return None,
    };
    Some((desc.label(), dim))
}

/// Retained candidates of the Riemannian audit: so(n-1), C x so(n-2) for
/// n = 5 or n >= 7, gl(l) in so(2l) for l = 2, 3, gl(2) in so(5).
pub fn admissible_expected(n: usize) -> Vec<(String, usize)> {
    let mut out = vec![so_desc(0, &[n - 1])];
    if n == 5 || n >= 7 {
        out.push(so_desc(1, &[n - 2]));
    }
    if n == 4 || n == 6 {
        out.push(SubalgebraDescriptor::new(
            1,
            vec![CartanType::a(n / 2 - 1)],
            Source::Levi,
        ));
    }
    if n == 5 {
        out.push(SubalgebraDescriptor::new(
            1,
            vec![CartanType::a(1)],
            Source::Levi,
        ));
    }
    let mut v: Vec<(String, usize)> = out.iter().map(|d| (d.label(), d.dim)).collect();
    v.sort();
    v
}

/// (type, 1-based fundamental index) pairs of the three lists.
pub fn rep_type_lists() -> Vec<(CartanType, usize, RepType)> {
    let mut v = vec![
        (CartanType::b(3), 3, RepType::Orthogonal),
        (CartanType::b(4), 4, RepType::Orthogonal),
        (CartanType::G2, 1, RepType::Orthogonal),
        (CartanType::F4, 4, RepType::Orthogonal),
    ];
    v.extend((3..=8).map(|l| (CartanType::c(l), 2, RepType::Orthogonal)));
    v.push((CartanType::a(5), 3, RepType::Symplectic));
    v.extend([2, 5, 6].map(|l| (CartanType::b(l), l, RepType::Symplectic)));
    v.extend((3..=8).map(|l| (CartanType::c(l), 1, RepType::Symplectic)));
    v.extend([
        (CartanType::c(3), 3, RepType::Symplectic),
        (CartanType::d(6), 5, RepType::Symplectic),
        (CartanType::d(6), 6, RepType::Symplectic),
        (CartanType::e(7), 7, RepType::Symplectic),
        (CartanType::d(5), 4, RepType::NotSelfDual),
        (CartanType::d(5), 5, RepType::NotSelfDual),
        (CartanType::d(7), 6, RepType::NotSelfDual),
        (CartanType::d(7), 7, RepType::NotSelfDual),
        (CartanType::e(6), 1, RepType::NotSelfDual),
    ]);
    v
}
