use super::{CartanType, RootSystem};

fn reference_types(rank: usize) -> Vec<CartanType> {
    let mut out = vec![CartanType::a(rank)];
    if rank >= 2 {
        out.push(CartanType::b(rank));
    }
    if rank >= 3 {
        out.push(CartanType::c(rank));
    }
    if rank >= 4 {
        out.push(CartanType::d(rank));
    }
    match rank {
        2 => out.push(CartanType::G2),
        4 => out.push(CartanType::F4),
        6..=8 => out.push(CartanType::e(rank)),
        _ => {}
    }
    out
}

/// Connected components of the Dynkin graph, as sorted index lists.
pub fn components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Whether `a` equals `b` after a simultaneous permutation of rows and columns.
pub fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let profile = |m: &[Vec<i64>], i: usize| {
        let mut row: Vec<i64> = m[i].clone();
        row.sort_unstable();
        let mut col: Vec<i64> = (0..m.len()).map(|j| m[j][i]).collect();
        col.sort_unstable();
        (row, col)
    };
    let pa: Vec<_> = (0..n).map(|i| profile(a, i)).collect();
    let pb: Vec<_> = (0..n).map(|i| profile(b, i)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        pa: &[(Vec<i64>, Vec<i64>)],
        pb: &[(Vec<i64>, Vec<i64>)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.len();
        if k == n {
            return true;
        }
        for t in 0..n {
            if used[t] || pa[k] != pb[t] {
                continue;
            }
            if (0..k).any(|j| a[k][j] != b[t][perm[j]] || a[j][k] != b[perm[j]][t]) {
                continue;
            }
            perm[k] = t;
            used[t] = true;
            if go(k + 1, a, b, pa, pb, perm, used) {
                return true;
            }
            used[t] = false;
        }
        false
    }
    go(0, a, b, &pa, &pb, &mut perm, &mut used)
}

/// Canonical simple types of a Cartan matrix of a (possibly reducible) root
/// system, sorted.
pub fn recognize(cartan: &[Vec<i64>]) -> Option<Vec<CartanType>> {
    let mut out = Vec::new();
    for comp in components(cartan) {
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        let ty = reference_types(comp.len())
            .into_iter()
            .find(|t| isomorphic(&sub, RootSystem::new(*t).cartan()))?;
        out.push(ty);
    }
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shuffled(m: &[Vec<i64>], p: &[usize]) -> Vec<Vec<i64>> {
        p.iter()
            .map(|&i| p.iter().map(|&j| m[i][j]).collect())
            .collect()
    }

    #[test]
    fn recognizes_permuted_matrices() {
        let e7 = RootSystem::new(CartanType::e(7));
        let p = [6, 2, 4, 0, 1, 5, 3];
        assert_eq!(
            recognize(&shuffled(e7.cartan(), &p)),
            Some(vec![CartanType::e(7)])
        );
        let b4 = RootSystem::new(CartanType::b(4));
        assert_eq!(
            recognize(&shuffled(b4.cartan(), &[3, 1, 0, 2])),
            Some(vec![CartanType::b(4)])
        );
        let c4 = RootSystem::new(CartanType::c(4));
        assert_eq!(recognize(c4.cartan()), Some(vec![CartanType::c(4)]));
    }

    #[test]
    fn aliases_are_canonical() {
        for (alias, want) in [
            (CartanType::c(2), vec![CartanType::b(2)]),
            (CartanType::d(2), vec![CartanType::a(1), CartanType::a(1)]),
            (CartanType::d(3), vec![CartanType::a(3)]),
        ] {
            assert_eq!(recognize(RootSystem::new(alias).cartan()), Some(want));
        }
    }
}
