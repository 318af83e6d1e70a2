//! The ten acceptance criteria as groups of checks.

use crate::error::{Error, Result};
use crate::lie::{MetricForm, SubalgebraSpec};
use crate::roots::{CartanType, Weight};
use crate::weyl::TensorKind;

use super::checks::{
    admissible_checks, enumerate_regular_checks, fixed_g2, fixed_r1, fixed_so_n_minus_1,
    fixed_so_n_minus_2, irrep_dim_checks, levi_checks, no_lines, null_plane, realforms_checks,
    rep_type_checks, riem2_line, s_unique_line, six_candidates, so_n_minus_2, stabilizer_checks,
    weyl_space_dim,
};
use super::oracle::rep_type_lists;
use super::props::{property_checks, PROPERTY_INSTANCES};
use super::{Check, Outcome, Provenance};

pub const DEFAULT_MAX_N: usize = 10;

/// Criterion numbers with short titles.
pub const CRITERIA: [(usize, &str); 10] = [
    (1, "Weyl-space dimensions"),
    (2, "Riemannian stabilizers"),
    (3, "Lorentzian stabilizers"),
    (4, "Other-signature stabilizer"),
    (5, "Branching trivial-factor counts"),
    (6, "Exclusion sweep"),
    (7, "Census tables"),
    (8, "Irrep dimensions and types"),
    (9, "Real forms"),
    (10, "Property suites"),
];

#[derive(Debug)]
pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

fn weyl_dims(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        out.push(weyl_space_dim(MetricForm::riemannian(n)));
        out.extend(MetricForm::lightcone(n).map(weyl_space_dim));
        out.extend(MetricForm::null_pairs(n).map(weyl_space_dim));
    }
    out
}

fn riemannian_stabilizers(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in (5..=max_n).filter(|&n| n != 6) {
        out.extend(stabilizer_checks(TensorKind::Riem1, n)?);
    }
    for l in 2..=(max_n / 2).min(4) {
        out.extend(stabilizer_checks(TensorKind::Riem2, 2 * l)?);
    }
    if max_n >= 10 {
        // visible but submaximal: only the dimension is claimed
        out.push(
            Check::new("co-riem2-dim", Provenance::ClosedForm, || {
                let so = crate::lie::RealLieAlgebra::so(&MetricForm::riemannian(10));
                let co = crate::weyl::co_stabilizer(
                    &crate::weyl::make_tensor(TensorKind::Riem2, 10)?,
                    &so,
                )?;
                Ok(Outcome::new(25, co.algebra.dim()))
            })
            .param("n", 10),
        );
        out.push(riem2_line(5));
    }
    Ok(out)
}

fn lorentzian_stabilizers(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        out.extend(stabilizer_checks(TensorKind::Lor, n)?);
        out.push(s_unique_line(n));
    }
    Ok(out)
}

fn branching(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 5..=max_n {
        out.push(fixed_so_n_minus_1(n));
        out.push(fixed_so_n_minus_2(n));
        out.push(fixed_r1(n));
        if n == 7 {
            out.push(fixed_g2());
        }
    }
    out
}

fn exclusions(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    if max_n >= 6 {
        out.extend(six_candidates().into_iter().map(no_lines));
    }
    for n in 5..=max_n {
        out.push(no_lines(SubalgebraSpec::SoR1 { n }));
        out.push(so_n_minus_2(n));
    }
    out
}

fn census(max_n: usize) -> Result<Vec<Check>> {
    let mut out = enumerate_regular_checks(CartanType::G2)?;
    for l in 2..=8 {
        for ty in [CartanType::b(l), CartanType::d(l)] {
            out.extend(enumerate_regular_checks(ty)?);
            for k in 1..=l {
                out.extend(levi_checks(ty, k)?);
            }
        }
    }
    for n in 5..=max_n {
        out.extend(admissible_checks(n));
    }
    Ok(out)
}

fn irreps() -> Result<Vec<Check>> {
    let mut types = Vec::new();
    for l in 1..=8 {
        types.push(CartanType::a(l));
    }
    for l in 2..=8 {
        types.push(CartanType::b(l));
    }
    for l in 3..=8 {
        types.push(CartanType::c(l));
    }
    for l in 4..=8 {
        types.push(CartanType::d(l));
    }
    let mut out = Vec::new();
    for ty in types {
        for k in 1..=ty.rank {
            out.extend(irrep_dim_checks(ty, Weight::fundamental(ty.rank, k))?);
        }
    }
    for (ty, k, _) in rep_type_lists() {
        out.extend(rep_type_checks(ty, Weight::fundamental(ty.rank, k))?);
    }
    Ok(out)
}

fn real_forms() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for l in 2..=6 {
        out.extend(realforms_checks(l)?);
    }
    Ok(out)
}

pub fn criterion(number: usize, max_n: usize) -> Result<Criterion> {
    if max_n < 4 {
        return Err(Error::InvalidArgument(format!(
            "max n must be at least 4, got {max_n}"
        )));
    }
    let title = CRITERIA
        .iter()
        .find(|(k, _)| *k == number)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::InvalidArgument(format!("no criterion {number}")))?;
    let checks = match number {
        1 => weyl_dims(max_n),
        2 => riemannian_stabilizers(max_n)?,
        3 => lorentzian_stabilizers(max_n)?,
        4 => (4..max_n).map(null_plane).collect(),
        5 => branching(max_n),
        6 => exclusions(max_n),
        7 => census(max_n)?,
        8 => irreps()?,
        9 => real_forms()?,
        _ => (4..=max_n.min(8))
            .flat_map(|n| property_checks(n, PROPERTY_INSTANCES))
            .collect(),
    };
    Ok(Criterion {
        number,
        title,
        checks,
    })
}

/// All criteria at the given dimension cap.
pub fn acceptance(max_n: usize) -> Result<Vec<Criterion>> {
    CRITERIA.iter().map(|(k, _)| criterion(*k, max_n)).collect()
}
