use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::exact::Scalar;

use super::{CartanType, Family};

/// Root system realized in Bourbaki's epsilon coordinates. Roots are stored as
/// integer coefficient vectors over the simple roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    simple: Vec<Vec<Scalar>>,
    gram: Vec<Vec<Scalar>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
}

fn eps(dim: usize, terms: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; dim];
    for (i, c) in terms {
        v[*i] = &v[*i] + c;
    }
    v
}

fn one() -> Scalar {
    Scalar::ONE
}

fn mone() -> Scalar {
    Scalar::int(-1)
}

fn half(s: i64) -> Scalar {
    Scalar::new(s, 2)
}

fn simple_roots(ty: CartanType) -> Vec<Vec<Scalar>> {
    let l = ty.rank;
    // e_i - e_{i+1}, 0-based
    let diff = |dim: usize, i: usize| eps(dim, &[(i, one()), (i + 1, mone())]);
    match ty.family {
        Family::A => (0..l).map(|i| diff(l + 1, i)).collect(),
        Family::B => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i)).collect();
            s.push(eps(l, &[(l - 1, one())]));
            s
        }
        Family::C => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i)).collect();
            s.push(eps(l, &[(l - 1, Scalar::int(2))]));
            s
        }
        Family::D => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i)).collect();
            s.push(eps(l, &[(l - 2, one()), (l - 1, one())]));
            s
        }
        Family::G => vec![
            eps(3, &[(0, one()), (1, mone())]),
            eps(3, &[(0, Scalar::int(-2)), (1, one()), (2, one())]),
        ],
        Family::F => vec![
            eps(4, &[(1, one()), (2, mone())]),
            eps(4, &[(2, one()), (3, mone())]),
            eps(4, &[(3, one())]),
            eps(
                4,
                &[(0, half(1)), (1, half(-1)), (2, half(-1)), (3, half(-1))],
            ),
        ],
        Family::E => {
            let mut s = vec![
                (0..8)
                    .map(|i| if i == 0 || i == 7 { half(1) } else { half(-1) })
                    .collect(),
                eps(8, &[(0, one()), (1, one())]),
                eps(8, &[(0, mone()), (1, one())]),
            ];
            for i in 1..6 {
                s.push(eps(8, &[(i, mone()), (i + 1, one())]));
            }
            s.truncate(l);
            s
        }
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystem {
    pub fn new(ty: CartanType) -> RootSystem {
        let simple = simple_roots(ty);
        let l = ty.rank;
        let gram: Vec<Vec<Scalar>> = (0..l)
            .map(|i| (0..l).map(|j| dot(&simple[i], &simple[j])).collect())
            .collect();
        let cartan = cartan_from_gram(&gram);
        let positive = positive_roots(&cartan);
        RootSystem {
            ty,
            simple,
            gram,
            cartan,
            positive,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn simple_roots_eps(&self) -> &[Vec<Scalar>] {
        &self.simple
    }

    /// (alpha_i, alpha_j) in the epsilon realization.
    pub fn gram(&self) -> &[Vec<Scalar>] {
        &self.gram
    }

    /// a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots, sorted by height then lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut all = self.positive.clone();
        all.extend(
            self.positive
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        all
    }

    pub fn root_set(&self) -> HashSet<Vec<i64>> {
        self.roots().into_iter().collect()
    }

    /// Unique root of maximal height; None when the system is reducible (D2).
    pub fn highest_root(&self) -> Option<Vec<i64>> {
        let h = |r: &Vec<i64>| r.iter().sum::<i64>();
        let max = self.positive.iter().map(h).max()?;
        let top: Vec<_> = self.positive.iter().filter(|r| h(r) == max).collect();
        (top.len() == 1).then(|| top[0].clone())
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Scalar {
        let mut acc = Scalar::ZERO;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y != 0 {
                    acc = acc + Scalar::int(x * y) * &self.gram[i][j];
                }
            }
        }
        acc
    }

    /// Cartan matrix of an arbitrary list of roots.
    pub fn cartan_of(&self, roots: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let gram: Vec<Vec<Scalar>> = roots
            .iter()
            .map(|a| roots.iter().map(|b| self.inner(a, b)).collect())
            .collect();
        cartan_from_gram(&gram)
    }
}

pub(crate) fn cartan_from_gram(gram: &[Vec<Scalar>]) -> Vec<Vec<i64>> {
    let l = gram.len();
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let v = Scalar::int(2) * &gram[i][j] / &gram[j][j];
                    v.to_i64().expect("integral Cartan entry")
                })
                .collect()
        })
        .collect()
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let simple: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
    while let Some(b) = queue.pop_front() {
        for i in 0..l {
            if b == simple[i] {
                continue;
            }
            // <b, alpha_i^vee> = sum_j b_j a_ji
            let pairing: i64 = (0..l).map(|j| b[j] * cartan[j][i]).sum();
            let mut r = b.clone();
            r[i] -= pairing;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    out
}
