use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Scalar;

use super::{CartanType, Family, RootSystem};

/// Highest weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&r| r >= 0)
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        if self.0.len() != rs.rank() {
            return Err(Error::InvalidArgument(format!(
                "weight of length {} for rank {}",
                self.0.len(),
                rs.rank()
            )));
        }
        if !self.is_dominant() {
            return Err(Error::InvalidArgument(format!(
                "weight {self} is not dominant"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// (lambda, alpha) for lambda in fundamental coordinates, alpha in simple-root
/// coordinates; uses (omega_i, alpha_j) = delta_ij (alpha_j, alpha_j) / 2.
fn pair(rs: &RootSystem, lambda: &[Scalar], alpha: &[i64]) -> Scalar {
    let g = rs.gram();
    (0..alpha.len())
        .filter(|&j| alpha[j] != 0 && !lambda[j].is_zero())
        .map(|j| &lambda[j] * &Scalar::int(alpha[j]) * &g[j][j] / Scalar::int(2))
        .sum()
}

/// Weyl dimension formula.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    lambda.check(rs)?;
    let rho: Vec<Scalar> = vec![Scalar::ONE; rs.rank()];
    let shifted: Vec<Scalar> = lambda.0.iter().map(|&r| Scalar::int(r + 1)).collect();
    let mut acc = Scalar::ONE;
    for alpha in rs.positive_roots() {
        acc = acc * pair(rs, &shifted, alpha) / pair(rs, &rho, alpha);
    }
    debug_assert!(acc.is_integer());
    Ok(acc.numer().to_biguint().expect("positive dimension"))
}

/// Highest weight of the dual representation, -w0(lambda).
pub fn dual(rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
    lambda.check(rs)?;
    let ty = rs.cartan_type();
    let l = ty.rank;
    let mut out = lambda.0.clone();
    match ty.family {
        Family::A => out.reverse(),
        Family::D if l % 2 == 1 => out.swap(l - 2, l - 1),
        Family::E if l == 6 => {
            out.swap(0, 5);
            out.swap(2, 4);
        }
        _ => {}
    }
    Ok(Weight(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepType {
    Orthogonal,
    Symplectic,
    NotSelfDual,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Orthogonal => "orthogonal",
            RepType::Symplectic => "symplectic",
            RepType::NotSelfDual => "not-self-dual",
        })
    }
}

/// Linear combination of the r_i whose parity decides orthogonal versus
/// symplectic for a self-dual irrep; None where every self-dual irrep is
/// orthogonal. Indices are 1-based.
pub fn parity_indices(ty: CartanType) -> Option<Vec<usize>> {
    let l = ty.rank;
    match ty.family {
        Family::A if l % 4 == 1 => Some(vec![l.div_ceil(2)]),
        Family::B if l % 4 == 1 || l % 4 == 2 => Some(vec![l]),
        Family::C => Some((1..=l).step_by(2).collect()),
        Family::D if l % 4 == 2 => Some(vec![l - 1, l]),
        Family::E if l == 7 => Some(vec![2, 5, 7]),
        _ => None,
    }
}

pub fn rep_type(rs: &RootSystem, lambda: &Weight) -> Result<RepType> {
    if dual(rs, lambda)? != *lambda {
        return Ok(RepType::NotSelfDual);
    }
    let odd = parity_indices(rs.cartan_type())
        .map(|idx| idx.iter().map(|&i| lambda.0[i - 1]).sum::<i64>() % 2 != 0)
        .unwrap_or(false);
    Ok(if odd {
        RepType::Symplectic
    } else {
        RepType::Orthogonal
    })
}

/// Coefficients of 2 rho^vee in the simple coroots. For a self-dual irrep the
/// invariant form is symmetric exactly when <lambda, 2 rho^vee> is even.
pub fn two_rho_coroot(rs: &RootSystem) -> Vec<i64> {
    let l = rs.rank();
    let g = rs.gram();
    let mut out = vec![Scalar::ZERO; l];
    for alpha in rs.positive_roots() {
        // alpha^vee = 2 alpha / (alpha, alpha) = sum_j alpha_j (alpha_j,alpha_j)/(alpha,alpha) alpha_j^vee
        let norm = rs.inner(alpha, alpha);
        for j in 0..l {
            if alpha[j] != 0 {
                out[j] = &out[j] + &(Scalar::int(alpha[j]) * &g[j][j] / &norm);
            }
        }
    }
    out.iter()
        .map(|x| x.to_i64().expect("integral coroot sum"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(ty: CartanType, w: &[i64]) -> u64 {
        let rs = RootSystem::new(ty);
        let d = weyl_dim(&rs, &Weight(w.to_vec())).unwrap();
        d.try_into().unwrap()
    }

    #[test]
    fn standard_dimensions() {
        assert_eq!(dim(CartanType::G2, &[1, 0]), 7);
        assert_eq!(dim(CartanType::G2, &[0, 1]), 14);
        assert_eq!(dim(CartanType::F4, &[0, 0, 0, 1]), 26);
        assert_eq!(dim(CartanType::e(6), &[1, 0, 0, 0, 0, 0]), 27);
        assert_eq!(dim(CartanType::e(7), &[0, 0, 0, 0, 0, 0, 1]), 56);
        assert_eq!(dim(CartanType::e(7), &[1, 0, 0, 0, 0, 0, 0]), 133);
        assert_eq!(dim(CartanType::e(8), &[0, 0, 0, 0, 0, 0, 0, 1]), 248);
        assert_eq!(dim(CartanType::b(3), &[0, 0, 1]), 8);
        assert_eq!(dim(CartanType::a(2), &[1, 1]), 8);
    }

    #[test]
    fn rejects_bad_weights() {
        let rs = RootSystem::new(CartanType::b(3));
        assert!(weyl_dim(&rs, &Weight(vec![1, 0])).is_err());
        assert!(weyl_dim(&rs, &Weight(vec![1, -1, 0])).is_err());
    }

    #[test]
    fn parity_table_agrees_with_coroot_sum() {
        let mut types = vec![
            CartanType::G2,
            CartanType::F4,
            CartanType::e(6),
            CartanType::e(7),
            CartanType::e(8),
        ];
        for l in 1..=9 {
            types.push(CartanType::a(l));
        }
        for l in 2..=9 {
            types.extend([CartanType::b(l), CartanType::c(l), CartanType::d(l)]);
        }
        for ty in types {
            let rs = RootSystem::new(ty);
            let tr = two_rho_coroot(&rs);
            for i in 1..=ty.rank {
                let w = Weight::fundamental(ty.rank, i);
                if dual(&rs, &w).unwrap() != w {
                    continue;
                }
                let sym = tr[i - 1] % 2 != 0;
                let got = rep_type(&rs, &w).unwrap();
                assert_eq!(got == RepType::Symplectic, sym, "{ty} fundamental {i}");
            }
        }
    }
}
