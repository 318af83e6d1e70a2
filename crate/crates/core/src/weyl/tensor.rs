use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::census::binom2;
use crate::error::{Error, Result};
use crate::exact::{Scalar, SparseVec};
use crate::lie::MetricForm;

/// Index bookkeeping for the canonical basis of symmetric pairs of 2-forms:
/// pairs (i<j) ordered lexicographically, elements (P, Q) with P <= Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLayout {
    n: usize,
    pair_of: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    elements: Vec<(usize, usize)>,
}

impl TensorLayout {
    pub fn new(n: usize) -> TensorLayout {
        let mut pair_of = vec![usize::MAX; n * n];
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pair_of[i * n + j] = pairs.len();
                pairs.push((i, j));
            }
        }
        let m = pairs.len();
        let mut elements = Vec::with_capacity(m * (m + 1) / 2);
        for p in 0..m {
            for q in p..m {
                elements.push((p, q));
            }
        }
        TensorLayout {
            n,
            pair_of,
            pairs,
            elements,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of canonical components, m(m+1)/2 with m = binom(n,2).
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Index of the pair (i, j), i < j.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        self.pair_of[i * self.n + j]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Canonical index and sign of the component (a, b, c, d); None if it
    /// vanishes by antisymmetry.
    pub fn locate(&self, a: usize, b: usize, c: usize, d: usize) -> Option<(usize, bool)> {
        if a == b || c == d {
            return None;
        }
        let (p, s1) = if a < b {
            (self.pair(a, b), false)
        } else {
            (self.pair(b, a), true)
        };
        let (q, s2) = if c < d {
            (self.pair(c, d), false)
        } else {
            (self.pair(d, c), true)
        };
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Some((self.index_of(p, q), s1 ^ s2))
    }

    /// Canonical index when (a,b,c,d) is itself canonical.
    pub fn canonical_index(&self, a: usize, b: usize, c: usize, d: usize) -> Option<usize> {
        if a < b && c < d {
            let (p, q) = (self.pair(a, b), self.pair(c, d));
            (p <= q).then(|| self.index_of(p, q))
        } else {
            None
        }
    }

    fn index_of(&self, p: usize, q: usize) -> usize {
        let m = self.pairs.len();
        // rows 0..p contribute m, m-1, ..., m-p+1 elements
        p * m - p * p.saturating_sub(1) / 2 + (q - p)
    }

    /// The canonical representative (a, b, c, d) of an index.
    pub fn indices(&self, k: usize) -> [usize; 4] {
        let (p, q) = self.elements[k];
        let (a, b) = self.pairs[p];
        let (c, d) = self.pairs[q];
        [a, b, c, d]
    }

    /// All positions (with sign) holding the component of index k.
    pub fn positions(&self, k: usize) -> Vec<([usize; 4], bool)> {
        let [a, b, c, d] = self.indices(k);
        let mut out = Vec::with_capacity(8);
        let mut firsts = vec![([a, b], [c, d])];
        if (a, b) != (c, d) {
            firsts.push(([c, d], [a, b]));
        }
        for ([x, y], [z, w]) in firsts {
            out.push(([x, y, z, w], false));
            out.push(([y, x, z, w], true));
            out.push(([x, y, w, z], true));
            out.push(([y, x, w, z], false));
        }
        out
    }
}

/// Covariant 4-tensor with the pair symmetries, stored by its canonical
/// components phi_{abcd} (a<b, c<d, (a,b) <= (c,d)).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorW {
    n: usize,
    coeffs: Vec<Scalar>,
}

impl TensorW {
    pub fn zero(n: usize) -> TensorW {
        let len = binom2(binom2(n) + 1);
        TensorW {
            n,
            coeffs: vec![Scalar::ZERO; len],
        }
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Scalar>) -> Result<TensorW> {
        let want = binom2(binom2(n) + 1);
        if coeffs.len() != want {
            return Err(Error::Shape(format!(
                "{} coefficients for n={n}, expected {want}",
                coeffs.len()
            )));
        }
        Ok(TensorW { n, coeffs })
    }

    pub fn from_sparse(n: usize, v: &SparseVec<Scalar>) -> TensorW {
        let len = binom2(binom2(n) + 1);
        TensorW {
            n,
            coeffs: v.to_dense(len),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn to_sparse(&self) -> SparseVec<Scalar> {
        SparseVec::from_dense(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// phi_{abcd} for arbitrary indices.
    pub fn component(
        &self,
        layout: &TensorLayout,
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    ) -> Scalar {
        match layout.locate(a, b, c, d) {
            None => Scalar::ZERO,
            Some((k, neg)) => {
                if neg {
                    -self.coeffs[k].clone()
                } else {
                    self.coeffs[k].clone()
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorW {
        TensorW {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &TensorW) -> TensorW {
        assert_eq!(self.n, other.n);
        TensorW {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Whether self = c * other for some rational c (zero counts only
    /// against zero).
    pub fn proportional_to(&self, other: &TensorW) -> Option<Scalar> {
        if self.n != other.n {
            return None;
        }
        let k = other.coeffs.iter().position(|x| !x.is_zero());
        match k {
            None => self.is_zero().then_some(Scalar::ZERO),
            Some(k) => {
                let c = &self.coeffs[k] / &other.coeffs[k];
                (*self == other.scale(&c)).then_some(c)
            }
        }
    }

    /// Plain text: one `i j k l : value` line per nonzero canonical component.
    pub fn to_text(&self) -> String {
        let layout = TensorLayout::new(self.n);
        let mut out = String::new();
        for (k, v) in self.coeffs.iter().enumerate() {
            if !v.is_zero() {
                let [a, b, c, d] = layout.indices(k);
                out.push_str(&format!("{a} {b} {c} {d} : {v}\n"));
            }
        }
        out
    }

    /// Inverse of `to_text`; blank lines and `#` comments are skipped, and
    /// every entry must be a canonical representative given once.
    pub fn from_text(n: usize, text: &str) -> Result<TensorW> {
        let layout = TensorLayout::new(n);
        let mut t = TensorW::zero(n);
        let mut seen = vec![false; layout.len()];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let (idx, val) = line
                .split_once(':')
                .ok_or_else(|| bad("expected `i j k l : value`"))?;
            let idx: Vec<usize> = idx
                .split_whitespace()
                .map(|s| s.parse::<usize>().map_err(|_| bad("bad index")))
                .collect::<Result<_>>()?;
            let [a, b, c, d] =
                <[usize; 4]>::try_from(idx).map_err(|_| bad("expected four indices"))?;
            if [a, b, c, d].iter().any(|&i| i >= n) {
                return Err(bad("index out of range"));
            }
            let k = layout
                .canonical_index(a, b, c, d)
                .ok_or_else(|| bad("not a canonical representative"))?;
            if std::mem::replace(&mut seen[k], true) {
                return Err(bad("duplicate entry"));
            }
            t.coeffs[k] = Scalar::from_str(val.trim()).map_err(|_| bad("bad rational"))?;
        }
        Ok(t)
    }
}

impl serde::Serialize for TensorW {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let layout = TensorLayout::new(self.n());
        let entries: Vec<(String, String)> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| {
                let [a, b, c, d] = layout.indices(k);
                (format!("{a} {b} {c} {d}"), v.to_string())
            })
            .collect();
        let mut st = s.serialize_struct("TensorW", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Dense covariant 4-tensor, used to assemble the explicit tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense4 {
    n: usize,
    data: Vec<Scalar>,
}

/// Dense 2-form.
pub type TwoForm = Vec<Scalar>;

/// omega^a wedge omega^b with the projector convention: components +-1/2.
pub fn wedge(n: usize, a: usize, b: usize) -> TwoForm {
    let mut w = vec![Scalar::ZERO; n * n];
    let h = Scalar::new(1, 2);
    w[a * n + b] = &w[a * n + b] + &h;
    w[b * n + a] = &w[b * n + a] - &h;
    w
}

pub fn add_forms(a: &TwoForm, b: &TwoForm) -> TwoForm {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Dense4 {
    pub fn zero(n: usize) -> Dense4 {
        Dense4 {
            n,
            data: vec![Scalar::ZERO; n * n * n * n],
        }
    }

    fn at(&self, a: usize, b: usize, c: usize, d: usize) -> &Scalar {
        let n = self.n;
        &self.data[((a * n + b) * n + c) * n + d]
    }

    /// Symmetric product (x y + y x)/2 of two 2-forms.
    pub fn sym(n: usize, x: &TwoForm, y: &TwoForm) -> Dense4 {
        let mut t = Dense4::zero(n);
        let h = Scalar::new(1, 2);
        for p in 0..n * n {
            for q in 0..n * n {
                let v = &x[p] * &y[q] + &y[p] * &x[q];
                if !v.is_zero() {
                    t.data[p * n * n + q] = v * &h;
                }
            }
        }
        t
    }

    pub fn square(n: usize, x: &TwoForm) -> Dense4 {
        Dense4::sym(n, x, x)
    }

    pub fn add(&self, o: &Dense4) -> Dense4 {
        Dense4 {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Dense4 {
        Dense4 {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Skew-symmetrization over slots 2, 3, 4 as a projector (1/6 sum).
    pub fn skew234(&self) -> Dense4 {
        let n = self.n;
        let mut t = Dense4::zero(n);
        let sixth = Scalar::new(1, 6);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let s = self.at(a, b, c, d) + self.at(a, c, d, b) + self.at(a, d, b, c)
                            - self.at(a, c, b, d)
                            - self.at(a, b, d, c)
                            - self.at(a, d, c, b);
                        t.data[((a * n + b) * n + c) * n + d] = s * &sixth;
                    }
                }
            }
        }
        t
    }

    /// Canonical components, after checking the pair symmetries.
    pub fn to_tensor(&self) -> Result<TensorW> {
        let n = self.n;
        let layout = TensorLayout::new(n);
        let mut t = TensorW::zero(n);
        for k in 0..layout.len() {
            let [a, b, c, d] = layout.indices(k);
            t.coeffs[k] = self.at(a, b, c, d).clone();
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if *self.at(a, b, c, d) != t.component(&layout, a, b, c, d) {
                            return Err(Error::NotWeyl(format!(
                                "pair symmetry fails at ({a},{b},{c},{d})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TensorKind {
    /// (omega^0 wedge omega^1)^2, null in the null-pairs form.
    NullPlane,
    Riem1,
    /// Needs even n = 2l.
    Riem2,
    Lor,
    SoNMinus2,
}

impl TensorKind {
    pub const ALL: [TensorKind; 5] = [
        TensorKind::NullPlane,
        TensorKind::Riem1,
        TensorKind::Riem2,
        TensorKind::Lor,
        TensorKind::SoNMinus2,
    ];

    /// The form each tensor is written for.
    pub fn natural_form(self, n: usize) -> Result<MetricForm> {
        match self {
            TensorKind::NullPlane => MetricForm::null_pairs(n),
            TensorKind::Riem1 | TensorKind::Riem2 => Ok(MetricForm::riemannian(n)),
            TensorKind::Lor | TensorKind::SoNMinus2 => MetricForm::lightcone(n),
        }
    }
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TensorKind::NullPlane => "null-plane",
            TensorKind::Riem1 => "riem1",
            TensorKind::Riem2 => "riem2",
            TensorKind::Lor => "lor",
            TensorKind::SoNMinus2 => "so-n-minus-2",
        })
    }
}

impl FromStr for TensorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<TensorKind> {
        TensorKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown tensor kind {s:?}")))
    }
}

/// Normalization of the skew-symmetrization over slots 2, 3, 4 in I3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkewReading {
    /// (1/6) sum over permutations with signs.
    Projector,
    /// Plain signed sum over the six permutations.
    Sum,
    /// No skew-symmetrization at all.
    Unskewed,
}

impl SkewReading {
    pub const ALL: [SkewReading; 3] = [
        SkewReading::Projector,
        SkewReading::Sum,
        SkewReading::Unskewed,
    ];
}

/// I1 - (2l-1)(I2 + 2 I3) on R^{2l} with I3 read as `reading`. Fails when
/// the reading breaks the pair symmetries.
pub fn riem2_reading(n: usize, reading: SkewReading) -> Result<TensorW> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "riem2 needs even n >= 4, got {n}"
        )));
    }
    let l = n / 2;
    let sq = |a: usize, b: usize| Dense4::square(n, &wedge(n, a, b));
    let mut i1 = Dense4::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            i1 = i1.add(&sq(i, j));
        }
    }
    let k = (0..l).fold(vec![Scalar::ZERO; n * n], |acc, a| {
        add_forms(&acc, &wedge(n, a, a + l))
    });
    let i2 = Dense4::square(n, &k);
    let mut raw = Dense4::zero(n);
    for a in 0..l {
        for b in a + 1..l {
            raw = raw.add(&Dense4::sym(n, &wedge(n, a, b), &wedge(n, a + l, b + l)));
        }
    }
    let i3 = match reading {
        SkewReading::Projector => raw.skew234(),
        SkewReading::Sum => raw.skew234().scale(&Scalar::int(6)),
        SkewReading::Unskewed => raw,
    };
    let c = Scalar::int(-(2 * l as i64 - 1));
    i1.add(&i2.add(&i3.scale(&Scalar::int(2))).scale(&c))
        .to_tensor()
}

/// The explicit tensors in ambient dimension n (0-based indices).
pub fn make_tensor(kind: TensorKind, n: usize) -> Result<TensorW> {
    let invalid = |msg: String| Err(Error::InvalidArgument(msg));
    let sq = |a: usize, b: usize| Dense4::square(n, &wedge(n, a, b));
    let int = |v: i64| Scalar::int(v);
    let t = match kind {
        TensorKind::NullPlane => {
            if n < 4 {
                return invalid(format!("null-plane needs n >= 4, got {n}"));
            }
            sq(0, 1)
        }
        TensorKind::Riem1 => {
            if n < 5 {
                return invalid(format!("riem1 needs n >= 5, got {n}"));
            }
            let mut t = sq(0, 1).scale(&int(binom2(n - 2) as i64));
            let c = Scalar::new(-(n as i64 - 3), 2);
            for i in 0..2 {
                for a in 2..n {
                    t = t.add(&sq(i, a).scale(&c));
                }
            }
            for a in 2..n {
                for b in a + 1..n {
                    t = t.add(&sq(a, b));
                }
            }
            t
        }
        TensorKind::Riem2 => return riem2_reading(n, SkewReading::Projector),
        TensorKind::Lor => {
            if n < 4 {
                return invalid(format!("lor needs n >= 4, got {n}"));
            }
            let mut t = sq(1, n - 1).scale(&int(-(n as i64 - 3)));
            for i in 2..n - 1 {
                t = t.add(&sq(i, n - 1));
            }
            t
        }
        TensorKind::SoNMinus2 => {
            if n < 4 {
                return invalid(format!("so-n-minus-2 needs n >= 4, got {n}"));
            }
            let mut t = sq(0, n - 1).scale(&int(binom2(n - 2) as i64));
            let c = int(n as i64 - 3);
            for i in 1..n - 1 {
                t = t.add(&Dense4::sym(n, &wedge(n, 0, i), &wedge(n, n - 1, i)).scale(&c));
            }
            for i in 1..n - 1 {
                for j in i + 1..n - 1 {
                    t = t.add(&sq(i, j).scale(&int(-1)));
                }
            }
            t
        }
    };
    t.to_tensor()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_roundtrip() {
        for n in 2..8 {
            let l = TensorLayout::new(n);
            assert_eq!(l.len(), binom2(binom2(n) + 1));
            for k in 0..l.len() {
                let [a, b, c, d] = l.indices(k);
                assert_eq!(l.canonical_index(a, b, c, d), Some(k));
                assert_eq!(l.locate(b, a, c, d), Some((k, true)));
                assert_eq!(l.locate(c, d, a, b), Some((k, false)));
                assert_eq!(l.locate(d, c, b, a), Some((k, false)));
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let t = make_tensor(TensorKind::Riem1, 6).unwrap();
        let back = TensorW::from_text(6, &t.to_text()).unwrap();
        assert_eq!(back, t);
        assert!(TensorW::from_text(4, "1 0 2 3 : 1").is_err());
        assert!(TensorW::from_text(4, "0 1 2 3 : 1\n0 1 2 3 : 2").is_err());
        assert!(TensorW::from_text(4, "0 1 2 9 : 1").is_err());
        assert_eq!(
            TensorW::from_text(4, "# empty\n\n").unwrap(),
            TensorW::zero(4)
        );
    }

    #[test]
    fn riem1_leading_coefficient() {
        // a square of a wedge has component 1/4 at its own slot
        let t = make_tensor(TensorKind::Riem1, 7).unwrap();
        let l = TensorLayout::new(7);
        assert_eq!(
            t.component(&l, 0, 1, 0, 1) * Scalar::int(4),
            Scalar::int(10)
        );
    }

    #[test]
    fn lor4_pattern() {
        let t = make_tensor(TensorKind::Lor, 4).unwrap();
        let l = TensorLayout::new(4);
        let q = Scalar::new(1, 4);
        assert_eq!(t.component(&l, 1, 3, 1, 3), -q.clone());
        assert_eq!(t.component(&l, 2, 3, 2, 3), q);
        assert_eq!(t.coeffs().iter().filter(|c| !c.is_zero()).count(), 2);
    }
}
