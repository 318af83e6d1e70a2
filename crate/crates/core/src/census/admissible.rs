use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{
    rep_type, so_factors, sp_factors, weyl_dim, CartanType, RepType, RootSystem, Weight,
};

use super::{levi_factor, Source, SubalgebraDescriptor};

pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    Riemannian,
    Lorentzian,
    OtherSignature,
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Case> {
        match s {
            "riemannian" => Ok(Case::Riemannian),
            "lorentzian" => Ok(Case::Lorentzian),
            "other-signature" | "other" => Ok(Case::OtherSignature),
            _ => Err(Error::Parse(format!("unknown case {s:?}"))),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Riemannian => "riemannian",
            Case::Lorentzian => "lorentzian",
            Case::OtherSignature => "other-signature",
        })
    }
}

/// Submaximal symmetry bounds: `c` bounds conformal symmetry dimension,
/// `c0 = c - n` bounds the stabilizer, `s` and `u` are the submaximal
/// dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n: usize,
    pub case: Case,
    pub c: usize,
    pub c0: usize,
    pub s: usize,
    pub u: usize,
}

pub fn bounds(n: usize, case: Case) -> Result<Bounds> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "bounds need n >= 4, got {n}"
        )));
    }
    let c0 = match case {
        Case::Riemannian if n == 4 || n == 6 => n * n / 4,
        Case::Riemannian => binom2(n - 2) + 1,
        Case::Lorentzian => binom2(n - 2) + 2,
        Case::OtherSignature => binom2(n - 2) + 4,
    };
    let c = c0 + n;
    Ok(Bounds {
        n,
        case,
        c,
        c0,
        s: c,
        u: c,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "kebab-case")]
pub enum Verdict {
    Retained,
    BelowThreshold,
    /// Conjugate, or equivalent under an automorphism of so(n), to the named
    /// candidate.
    Equivalent(String),
    /// Excluded by a cited result rather than by computation here.
    Cited(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub name: String,
    pub descriptor: SubalgebraDescriptor,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibleReport {
    pub n: usize,
    pub c0: usize,
    /// Every candidate considered, sorted by decreasing dimension then name.
    pub candidates: Vec<Candidate>,
    pub cited: Vec<String>,
}

impl AdmissibleReport {
    pub fn retained(&self) -> Vec<&Candidate> {
        self.candidates
            .iter()
            .filter(|c| c.verdict == Verdict::Retained)
            .collect()
    }

    pub fn rejected(&self) -> Vec<&Candidate> {
        self.candidates
            .iter()
            .filter(|c| c.verdict != Verdict::Retained)
            .collect()
    }

    pub fn find(&self, name: &str) -> Option<&Candidate> {
        self.candidates.iter().find(|c| c.name == name)
    }
}

pub const DEFAULT_CAP: usize = 14;

/// Orthogonal irreps of simple algebras with dim V < dim f < dim so(V), the
/// finite list the screen draws from, restricted to dim V = n.
fn irreducible_simple(n: usize) -> Vec<(CartanType, Weight)> {
    let mut list = vec![
        (CartanType::b(3), Weight::fundamental(3, 3)),
        (CartanType::b(4), Weight::fundamental(4, 4)),
        (CartanType::G2, Weight::fundamental(2, 1)),
        (CartanType::F4, Weight::fundamental(4, 4)),
    ];
    // dim of (C_l, lambda_2) is binom(2l, 2) - 1, increasing in l
    let mut l = 3;
    while binom2(2 * l) - 1 <= n {
        list.push((CartanType::c(l), Weight::fundamental(l, 2)));
        l += 1;
    }
    list.into_iter()
        .filter(|(ty, w)| {
            let rs = RootSystem::new(*ty);
            debug_assert_eq!(rep_type(&rs, w).unwrap(), RepType::Orthogonal);
            weyl_dim(&rs, w).unwrap() == BigUint::from(n)
        })
        .collect()
}

fn block_name(k: usize, n: usize) -> String {
    if k == 1 {
        format!("so({})", n - 1)
    } else {
        format!("so({k}) x so({})", n - k)
    }
}

/// Audit of the reductive subalgebras of so(n, C) large enough to matter for
/// the Riemannian bound.
pub fn admissible_report(n: usize) -> Result<AdmissibleReport> {
    admissible_report_capped(n, DEFAULT_CAP)
}

pub fn admissible_report_capped(n: usize, cap: usize) -> Result<AdmissibleReport> {
    if n < 5 || n > cap {
        return Err(Error::InvalidArgument(format!(
            "admissible_report needs 5 <= n <= {cap}, got {n}"
        )));
    }
    let c0 = bounds(n, Case::Riemannian)?.c0;
    let screen = |d: &SubalgebraDescriptor| {
        if d.dim >= c0 {
            Verdict::Retained
        } else {
            Verdict::BelowThreshold
        }
    };
    let mut out = Vec::new();

    for k in 1..=n / 2 {
        let (c1, f1) = so_factors(k);
        let (c2, f2) = so_factors(n - k);
        let d = SubalgebraDescriptor::new(c1 + c2, [f1, f2].concat(), Source::ReducibleBlock);
        let verdict = screen(&d);
        out.push(Candidate {
            name: block_name(k, n),
            descriptor: d,
            verdict,
        });
    }

    let ty = if n % 2 == 1 {
        CartanType::b((n - 1) / 2)
    } else {
        CartanType::d(n / 2)
    };
    let l = ty.rank;
    for k in 1..=l {
        let d = levi_factor(ty, k)?;
        let name = format!("levi({ty}, k={k})");
        let verdict = if k == 1 {
            Verdict::Equivalent(block_name(2, n))
        } else if n % 2 == 0 && k == l && l >= 3 {
            // diagram automorphism swapping the two spinor nodes
            if l == 4 {
                Verdict::Equivalent(block_name(2, n))
            } else {
                Verdict::Equivalent(format!("levi({ty}, k={})", l - 1))
            }
        } else if n == 8 && k == 3 {
            // triality moves node 3 to node 1
            Verdict::Equivalent(block_name(2, n))
        } else {
            screen(&d)
        };
        out.push(Candidate {
            name,
            descriptor: d,
            verdict,
        });
    }

    for d1 in 2..=n {
        if n % d1 != 0 {
            continue;
        }
        let d2 = n / d1;
        if d1 > d2 {
            break;
        }
        if d1 >= 3 {
            let (c1, f1) = so_factors(d1);
            let (c2, f2) = so_factors(d2);
            let d =
                SubalgebraDescriptor::new(c1 + c2, [f1, f2].concat(), Source::IrreducibleNonsimple);
            let verdict = screen(&d);
            out.push(Candidate {
                name: format!("so({d1}) x so({d2}) in so({d1}*{d2})"),
                descriptor: d,
                verdict,
            });
        }
        if d1 % 2 == 0 && d2 % 2 == 0 && (d1, d2) != (2, 2) {
            let f = [sp_factors(d1 / 2), sp_factors(d2 / 2)].concat();
            let d = SubalgebraDescriptor::new(0, f, Source::IrreducibleNonsimple);
            let verdict = screen(&d);
            out.push(Candidate {
                name: format!("sp({d1}) x sp({d2}) in so({d1}*{d2})"),
                descriptor: d,
                verdict,
            });
        }
    }

    for (ty, w) in irreducible_simple(n) {
        let d = SubalgebraDescriptor::new(0, vec![ty], Source::IrreducibleSimple);
        let name = format!("({ty}, {w})");
        let verdict = match screen(&d) {
            Verdict::BelowThreshold => Verdict::BelowThreshold,
            _ if ty == CartanType::b(3) => Verdict::Equivalent(block_name(1, n)),
            _ if ty == CartanType::G2 => Verdict::Cited(
                "g2 in so(7) annihilates no nonzero Weyl tensor; its reductive subalgebras have dim <= 8 < c0(7)".into(),
            ),
            v => v,
        };
        out.push(Candidate {
            name,
            descriptor: d,
            verdict,
        });
    }

    out.sort_by(|a, b| {
        b.descriptor
            .dim
            .cmp(&a.descriptor.dim)
            .then_with(|| a.name.cmp(&b.name))
    });
    let cited = vec![
        "irreducible simple candidates are drawn from the classified list of orthogonal irreps with dim V < dim f < dim so(V); completeness of that list is not re-derived".into(),
        "S-subalgebras of g2 have dimension at most 3".into(),
    ];
    Ok(AdmissibleReport {
        n,
        c0,
        candidates: out,
        cited,
    })
}
