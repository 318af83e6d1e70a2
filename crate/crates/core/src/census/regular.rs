use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{recognize, CartanType, RootSystem};

use super::{Source, SubalgebraDescriptor};

/// Levi factor of the maximal parabolic obtained by crossing node k (1-based).
pub fn levi_factor(ty: CartanType, k: usize) -> Result<SubalgebraDescriptor> {
    let rs = RootSystem::new(ty);
    let l = rs.rank();
    if k == 0 || k > l {
        return Err(Error::InvalidArgument(format!(
            "node {k} out of range for {ty}"
        )));
    }
    let nodes: Vec<Vec<i64>> = (0..l).filter(|&i| i != k - 1).map(|i| unit(l, i)).collect();
    let factors = recognize(&rs.cartan_of(&nodes)).expect("subdiagram of a Dynkin diagram");
    Ok(SubalgebraDescriptor::new(1, factors, Source::Levi))
}

fn unit(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PiKind {
    /// N = simple roots without alpha_k, for a mark n_k = 1.
    I,
    /// N = extended simple roots without alpha_k, for a mark n_k > 1.
    II,
}

/// A pi-system together with the closed root subsystem it spans.
#[derive(Clone, Debug, Serialize)]
pub struct PiSystem {
    pub k: usize,
    pub kind: PiKind,
    /// Coefficient of alpha_k in the highest root.
    pub mark: i64,
    pub nodes: Vec<Vec<i64>>,
    /// All roots (both signs) of the subsystem.
    pub gamma: Vec<Vec<i64>>,
    pub descriptor: SubalgebraDescriptor,
}

pub fn pi_systems(rs: &RootSystem) -> Vec<PiSystem> {
    let l = rs.rank();
    let Some(hr) = rs.highest_root() else {
        // reducible (D2): only the Levi type systems exist
        return (1..=l)
            .map(|k| {
                let nodes: Vec<Vec<i64>> =
                    (0..l).filter(|&i| i != k - 1).map(|i| unit(l, i)).collect();
                let gamma = rs.roots().into_iter().filter(|r| r[k - 1] == 0).collect();
                let factors = recognize(&rs.cartan_of(&nodes)).unwrap();
                PiSystem {
                    k,
                    kind: PiKind::I,
                    mark: 1,
                    nodes,
                    gamma,
                    descriptor: SubalgebraDescriptor::new(1, factors, Source::PiSystemI),
                }
            })
            .collect();
    };
    let lowest: Vec<i64> = hr.iter().map(|x| -x).collect();
    (1..=l)
        .map(|k| {
            let mark = hr[k - 1];
            let (kind, nodes, center, source) = if mark == 1 {
                let nodes: Vec<Vec<i64>> =
                    (0..l).filter(|&i| i != k - 1).map(|i| unit(l, i)).collect();
                (PiKind::I, nodes, 1, Source::PiSystemI)
            } else {
                let mut nodes = vec![lowest.clone()];
                nodes.extend((0..l).filter(|&i| i != k - 1).map(|i| unit(l, i)));
                (PiKind::II, nodes, 0, Source::PiSystemII)
            };
            // type I: m_k = 0; type II: m_k = 0 mod n_k
            let modulus = if mark == 1 { i64::MAX } else { mark };
            let gamma = rs
                .roots()
                .into_iter()
                .filter(|r| r[k - 1] % modulus == 0)
                .collect();
            let factors = recognize(&rs.cartan_of(&nodes)).expect("pi-system of finite type");
            PiSystem {
                k,
                kind,
                mark,
                nodes,
                gamma,
                descriptor: SubalgebraDescriptor::new(center, factors, source),
            }
        })
        .collect()
}

/// One descriptor per node, from the pi-system of type I or II at that node.
pub fn max_regular_reductive(rs: &RootSystem) -> Vec<SubalgebraDescriptor> {
    pi_systems(rs).into_iter().map(|p| p.descriptor).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn labels(ty: CartanType) -> Vec<String> {
        max_regular_reductive(&RootSystem::new(ty))
            .iter()
            .map(|d| d.label())
            .collect()
    }

    #[test]
    fn d5_and_g2_and_b2() {
        assert_eq!(
            labels(CartanType::d(5)),
            [
                "T1 x D4",
                "A1 x A1 x A3",
                "A1 x A1 x A3",
                "T1 x A4",
                "T1 x A4"
            ]
        );
        assert_eq!(labels(CartanType::G2), ["A2", "A1 x A1"]);
        assert_eq!(labels(CartanType::b(2)), ["T1 x A1", "A1 x A1"]);
    }

    #[test]
    fn levi_examples() {
        let d = levi_factor(CartanType::b(4), 2).unwrap();
        assert_eq!((d.label().as_str(), d.dim), ("T1 x A1 x B2", 14));
        assert_eq!(levi_factor(CartanType::b(2), 1).unwrap().dim, 4);
        assert!(levi_factor(CartanType::b(2), 3).is_err());
        assert!(levi_factor(CartanType::b(2), 0).is_err());
    }

    // Gamma is closed and symmetric, has the expected rank, matches the
    // Weyl-group closure of N, and its size matches the recognized type.
    #[test]
    fn pi_system_invariants_all_types() {
        let mut types = vec![
            CartanType::G2,
            CartanType::F4,
            CartanType::e(6),
            CartanType::e(7),
            CartanType::e(8),
        ];
        for l in 1..=8 {
            types.push(CartanType::a(l));
        }
        for l in 2..=8 {
            types.extend([CartanType::b(l), CartanType::c(l)]);
        }
        for l in 3..=8 {
            types.push(CartanType::d(l));
        }
        for ty in types {
            let rs = RootSystem::new(ty);
            let all = rs.root_set();
            for p in pi_systems(&rs) {
                let gamma: HashSet<Vec<i64>> = p.gamma.iter().cloned().collect();
                for a in &p.gamma {
                    let neg: Vec<i64> = a.iter().map(|x| -x).collect();
                    assert!(gamma.contains(&neg), "{ty} k={} not symmetric", p.k);
                    for b in &p.gamma {
                        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if all.contains(&s) {
                            assert!(gamma.contains(&s), "{ty} k={} not closed", p.k);
                        }
                    }
                }
                let orbit = reflection_closure(&rs, &p.nodes);
                assert_eq!(orbit, gamma, "{ty} k={}", p.k);
                let d = &p.descriptor;
                let expected_rank = match p.kind {
                    PiKind::I => ty.rank - 1,
                    PiKind::II => ty.rank,
                };
                assert_eq!(d.semisimple_rank(), expected_rank);
                assert_eq!(d.center + d.semisimple_rank(), ty.rank);
                assert_eq!(d.dim, ty.rank + gamma.len(), "{ty} k={}", p.k);
            }
        }
    }

    fn reflection_closure(rs: &RootSystem, nodes: &[Vec<i64>]) -> HashSet<Vec<i64>> {
        let mut set: HashSet<Vec<i64>> = nodes.iter().cloned().collect();
        let mut frontier: Vec<Vec<i64>> = nodes.to_vec();
        while let Some(b) = frontier.pop() {
            for a in nodes {
                let c = crate::exact::Scalar::int(2) * rs.inner(&b, a) / rs.inner(a, a);
                let c = c.to_i64().unwrap();
                let r: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - c * y).collect();
                if set.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
        set
    }
}
