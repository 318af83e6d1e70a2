use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ExactMatrix, Scalar};

/// Univariate polynomial over Q, coefficients from low to high degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| Scalar::int(v)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    /// x - r
    pub fn linear(r: &Scalar) -> Poly {
        Poly::new(vec![-r, Scalar::ONE])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::ZERO, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lead().recip().unwrap())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = d.lead().recip().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![Scalar::ZERO; self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] * &inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * dc);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Scalar::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn square_free(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Primitive integer multiple with positive leading coefficient.
    pub fn primitive(&self) -> Vec<BigInt> {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(&c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if self.lead().signum() < 0 { -1 } else { 1 };
        ints.into_iter().map(|c| c / &g * sign).collect()
    }

    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].divrem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&Scalar::int(-1)));
        }
        seq
    }

    /// Distinct real roots.
    pub fn real_root_count(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.square_free().sturm_sequence();
        let at = |neg: bool| -> Vec<i32> {
            seq.iter()
                .map(|p| {
                    let s = p.lead().signum();
                    if neg && p.degree().unwrap_or(0) % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                })
                .collect()
        };
        changes(&at(true)) - changes(&at(false))
    }

    /// Distinct rational roots in increasing order.
    ///
    /// The square-free part is scaled to a monic integer polynomial in
    /// y = a x, whose rational roots are integers; those are isolated on unit
    /// intervals by Sturm bisection and confirmed by exact evaluation.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        let Some(d) = self.square_free().degree() else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let c = self.square_free().primitive();
        let a = c[d].clone();
        let mut mon = Vec::with_capacity(d + 1);
        let mut pow = BigInt::from(1);
        for i in (0..d).rev() {
            mon.push((i, &c[i] * &pow));
            pow *= &a;
        }
        let mut coeffs = vec![Scalar::ZERO; d + 1];
        for (i, v) in mon {
            coeffs[i] = Scalar::from_bigint(v);
        }
        coeffs[d] = Scalar::ONE;
        let m = Poly::new(coeffs);
        let bound: BigInt = m.coeffs.iter().map(|x| x.numer().abs()).max().unwrap() + 1;
        let seq = m.sturm_sequence();
        let mut found = Vec::new();
        isolate(&m, &seq, -bound.clone(), bound, &mut found);
        let a = Scalar::from_bigint(a);
        let mut roots: Vec<Scalar> = found
            .into_iter()
            .map(|y| Scalar::from_bigint(y) / &a)
            .collect();
        roots.sort();
        roots
    }

    /// Multiplicity of r as a root.
    pub fn multiplicity(&self, r: &Scalar) -> usize {
        let lin = Poly::linear(r);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, rem) = p.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }
}

fn changes(signs: &[i32]) -> usize {
    let nz: Vec<i32> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sturm_at(seq: &[Poly], x: &BigInt) -> usize {
    let x = Scalar::from_bigint(x.clone());
    changes(&seq.iter().map(|p| p.eval(&x).signum()).collect::<Vec<_>>())
}

// integer roots of m in (lo, hi]
fn isolate(m: &Poly, seq: &[Poly], lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>) {
    let count = sturm_at(seq, &lo) - sturm_at(seq, &hi);
    if count == 0 {
        return;
    }
    if &hi - &lo == BigInt::from(1) {
        if m.eval(&Scalar::from_bigint(hi.clone())).is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid = (&lo + &hi).div_floor(&BigInt::from(2));
    isolate(m, seq, lo, mid.clone(), out);
    isolate(m, seq, mid, hi, out);
}

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
pub fn charpoly(a: &ExactMatrix) -> Poly {
    assert!(a.is_square());
    let n = a.rows();
    let mut c = vec![Scalar::ZERO; n + 1];
    c[n] = Scalar::ONE;
    let mut m = ExactMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&m);
        for i in 0..n {
            next[(i, i)] = &next[(i, i)] + &c[n - k + 1];
        }
        m = next;
        let t = a.mul(&m).trace();
        c[n - k] = -(t / Scalar::int(k as i64));
    }
    Poly::new(c)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_roots(roots: &[Scalar]) -> Poly {
        roots
            .iter()
            .fold(Poly::from_ints(&[1]), |p, r| p.mul(&Poly::linear(r)))
    }

    #[test]
    fn charpoly_small() {
        let a = ExactMatrix::from_ints(&[&[2, 1], &[1, 2]]);
        assert_eq!(charpoly(&a), Poly::from_ints(&[3, -4, 1]));
        let rot = ExactMatrix::from_ints(&[&[0, -1], &[1, 0]]);
        let p = charpoly(&rot);
        assert!(p.rational_roots().is_empty());
        assert_eq!(p.real_root_count(), 0);
    }

    #[test]
    fn irrational_real_roots_are_counted_but_not_returned() {
        let p = Poly::from_ints(&[-2, 0, 1]).mul(&Poly::from_ints(&[-3, 1]));
        assert_eq!(p.real_root_count(), 3);
        assert_eq!(p.rational_roots(), vec![Scalar::int(3)]);
    }

    proptest! {
        #[test]
        fn recovers_rational_roots(nums in proptest::collection::vec((-40i64..40, 1i64..7), 1..6),
                                   extra in 0usize..3) {
            let roots: Vec<Scalar> = nums.iter().map(|&(n, d)| Scalar::new(n, d)).collect();
            let mut p = from_roots(&roots);
            // irreducible quadratic factors contribute no rational roots
            for k in 0..extra {
                p = p.mul(&Poly::from_ints(&[k as i64 + 1, 0, 1]));
            }
            p = p.scale(&Scalar::new(-7, 3));
            let mut expected = roots.clone();
            expected.sort();
            expected.dedup();
            prop_assert_eq!(p.rational_roots(), expected.clone());
            prop_assert_eq!(p.real_root_count(), expected.len());
            for r in &roots {
                prop_assert_eq!(p.multiplicity(r), roots.iter().filter(|x| *x == r).count());
            }
        }

        #[test]
        fn charpoly_vanishes_at_eigenvalue(vals in proptest::collection::vec(-5i64..6, 16)) {
            let a = ExactMatrix::from_fn(4, 4, |i, j| Scalar::int(vals[4 * i + j]));
            let p = charpoly(&a);
            prop_assert_eq!(p.degree(), Some(4));
            prop_assert_eq!(p.coeffs()[0].clone(), a.determinant());
            for r in p.rational_roots() {
                let shifted = a.sub(&ExactMatrix::identity(4).scale(&r));
                prop_assert!(shifted.determinant().is_zero());
            }
        }
    }
}
