//! Check builders behind the report subcommands.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::census::{
    admissible_report_capped, binom2, levi_factor, max_regular_reductive, DEFAULT_CAP,
};
use crate::error::{Error, Result};
use crate::lie::{
    construct_real, rotation, Chirality, MetricForm, RealLieAlgebra, SixCandidate, SubalgebraSpec,
};
use crate::realforms::{enumerate_real_forms, sl_centralizer_span};
use crate::roots::{rep_type, weyl_dim, CartanType, RootSystem, Weight};
use crate::weyl::{
    co_stabilizer, fixed_space, invariant_lines, make_tensor, riem2_reading, weyl_dim_formula,
    SkewReading, TensorKind, WeylSpace,
};

use super::oracle::{
    admissible_expected, fundamental_dim_closed_form, levi_table, regular_table,
    rep_type_by_coroot, rep_type_lists, weyl_dim_eps,
};
use super::{Check, Outcome, Provenance};

fn big(v: BigUint) -> Value {
    match u64::try_from(&v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg()))
    }
}

/// so(m) on the indices `idx`, inside the algebra of `form`.
fn block(form: &MetricForm, idx: std::ops::Range<usize>, label: String) -> Result<RealLieAlgebra> {
    let n = form.dim();
    let idx: Vec<usize> = idx.collect();
    let mut basis = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            basis.push(rotation(n, i, j));
        }
    }
    RealLieAlgebra::new(n, basis, Some(form.gram().clone()), label)
}

pub(crate) fn weyl_space_dim(form: MetricForm) -> Check {
    let (n, label) = (form.dim(), form.label());
    Check::new("weyl-space-dim", Provenance::ClosedForm, move || {
        Ok(Outcome::new(
            weyl_dim_formula(n),
            WeylSpace::new(&form)?.dim(),
        ))
    })
    .param("n", n)
    .param("form", label)
}

/// Dimension of co(phi) and whether it equals the named subalgebra.
fn co_equals(kind: TensorKind, n: usize, spec: SubalgebraSpec) -> Check {
    Check::new(format!("co-{kind}"), Provenance::ClosedForm, move || {
        let form = kind.natural_form(n)?;
        let co = co_stabilizer(&make_tensor(kind, n)?, &RealLieAlgebra::so(&form))?;
        let target = construct_real(spec)?;
        let equals = if co.algebra.span_eq(&target) {
            spec.to_string()
        } else {
            "different".to_string()
        };
        Ok(Outcome::new(
            json!({ "dim": spec.expected_dim(), "equals": spec.to_string() }),
            json!({ "dim": co.algebra.dim(), "equals": equals }),
        ))
    })
    .param("n", n)
}

fn fixed_dim(
    name: &str,
    n: usize,
    provenance: Provenance,
    expected: usize,
    build: fn(usize) -> Result<(RealLieAlgebra, MetricForm)>,
) -> Check {
    Check::new(name, provenance, move || {
        let (alg, form) = build(n)?;
        Ok(Outcome::new(
            expected,
            fixed_space(&alg, &WeylSpace::new(&form)?)?.len(),
        ))
    })
    .param("n", n)
}

pub(crate) fn fixed_so_n_minus_1(n: usize) -> Check {
    fixed_dim("fixed-so(n-1)", n, Provenance::ClosedForm, 0, |n| {
        let f = MetricForm::riemannian(n);
        Ok((block(&f, 1..n, format!("so({})", n - 1))?, f))
    })
}

pub(crate) fn fixed_so_n_minus_2(n: usize) -> Check {
    fixed_dim("fixed-so(n-2)", n, Provenance::ClosedForm, 1, |n| {
        let f = MetricForm::riemannian(n);
        Ok((block(&f, 2..n, format!("so({})", n - 2))?, f))
    })
}

pub(crate) fn fixed_g2() -> Check {
    fixed_dim("fixed-g2", 7, Provenance::ClosedForm, 0, |_| {
        Ok((
            construct_real(SubalgebraSpec::G2)?,
            MetricForm::riemannian(7),
        ))
    })
}

pub(crate) fn fixed_r1(n: usize) -> Check {
    let expected = (n - 1) * (n - 2) / 2 - 1;
    fixed_dim("fixed-r1", n, Provenance::ClosedForm, expected, |n| {
        Ok((
            construct_real(SubalgebraSpec::R1 { n })?,
            MetricForm::lightcone(n)?,
        ))
    })
}

/// Shape of the invariant-line answer: sizes of the common eigenspaces and
/// the completeness flag.
fn lines_shape(alg: &RealLieAlgebra, form: &MetricForm) -> Result<Value> {
    let lines = invariant_lines(alg, &WeylSpace::new(form)?)?;
    let sizes: Vec<usize> = lines.spaces.iter().map(|s| s.basis.len()).collect();
    Ok(json!({ "spaces": sizes, "complete": lines.complete }))
}

pub(crate) fn no_lines(spec: SubalgebraSpec) -> Check {
    Check::new("no-invariant-line", Provenance::ClosedForm, move || {
        let alg = construct_real(spec)?;
        Ok(Outcome::new(
            json!({ "spaces": [], "complete": true }),
            lines_shape(&alg, &spec.form()?)?,
        ))
    })
    .param("algebra", spec.to_string())
}

pub(crate) fn s_unique_line(n: usize) -> Check {
    Check::new("s-unique-line", Provenance::ClosedForm, move || {
        let s = construct_real(SubalgebraSpec::S { n })?;
        let w = WeylSpace::new(&MetricForm::lightcone(n)?)?;
        let lines = invariant_lines(&s, &w)?;
        let lor = make_tensor(TensorKind::Lor, n)?;
        let spans_lor = lines
            .unique_line()
            .map(|l| lor.proportional_to(l).is_some())
            .unwrap_or(false);
        let sizes: Vec<usize> = lines.spaces.iter().map(|s| s.basis.len()).collect();
        Ok(Outcome::new(
            json!({ "spaces": [1], "complete": true, "spans_lor": true }),
            json!({ "spaces": sizes, "complete": lines.complete, "spans_lor": spans_lor }),
        ))
    })
    .param("n", n)
}

/// The projector reading of riem2 spans the u(l)-fixed line.
pub(crate) fn riem2_line(l: usize) -> Check {
    Check::new("riem2-fixed-line", Provenance::Oracle, move || {
        let n = 2 * l;
        let u = construct_real(SubalgebraSpec::Unitary { l })?;
        let fixed = fixed_space(&u, &WeylSpace::new(&MetricForm::riemannian(n))?)?;
        let t = riem2_reading(n, SkewReading::Projector)?;
        let ratio = fixed.first().and_then(|f| t.proportional_to(f));
        Ok(Outcome::new(
            json!({ "fixed_dim": 1, "ratio": "1/4" }),
            json!({ "fixed_dim": fixed.len(), "ratio": ratio }),
        ))
    })
    .param("l", l)
}

pub(crate) fn null_plane(n: usize) -> Check {
    Check::new("co-null-plane", Provenance::ClosedForm, move || {
        let form = MetricForm::null_pairs(n)?;
        let co = co_stabilizer(&make_tensor(TensorKind::NullPlane, n)?, &RealLieAlgebra::so(&form))?;
        let p2 = construct_real(SubalgebraSpec::P2 { n })?;
        let plane: Vec<Vec<crate::Scalar>> = [n - 2, n - 1]
            .iter()
            .map(|&i| (0..n).map(|j| if i == j { crate::Scalar::ONE } else { crate::Scalar::ZERO }).collect())
            .collect();
        let (stabilizes, _) = co.algebra.stabilizes_subspace(&plane);
        Ok(Outcome::new(
            json!({ "dim": binom2(n - 2) + 4, "equals_p2": true, "stabilizes_null_plane": true }),
            json!({ "dim": co.algebra.dim(), "equals_p2": co.algebra.span_eq(&p2), "stabilizes_null_plane": stabilizes }),
        ))
    })
    .param("n", n)
    .param("signature", format!("2,{}", n - 2))
}

/// co of the so(n-2)-invariant Lorentzian tensor contains so(n-2) but not r1.
pub(crate) fn so_n_minus_2(n: usize) -> Check {
    Check::new("co-so-n-minus-2", Provenance::ClosedForm, move || {
        let form = MetricForm::lightcone(n)?;
        let co = co_stabilizer(&make_tensor(TensorKind::SoNMinus2, n)?, &RealLieAlgebra::so(&form))?;
        let so = block(&form, 1..n - 1, format!("so({})", n - 2))?;
        let r1 = construct_real(SubalgebraSpec::R1 { n })?;
        Ok(Outcome::new(
            json!({ "contains_so(n-2)": true, "contains_r1": false }),
            json!({ "contains_so(n-2)": co.algebra.contains_all(&so), "contains_r1": co.algebra.contains_all(&r1) }),
        ))
    })
    .param("n", n)
}

pub(crate) fn co_so_n_minus_2_dim(n: usize) -> Check {
    Check::new("co-so-n-minus-2-dim", Provenance::Oracle, move || {
        let form = MetricForm::lightcone(n)?;
        let co = co_stabilizer(
            &make_tensor(TensorKind::SoNMinus2, n)?,
            &RealLieAlgebra::so(&form),
        )?;
        Ok(Outcome::new(binom2(n - 2) + 1, co.algebra.dim()))
    })
    .param("n", n)
}

pub(crate) fn admissible_checks(n: usize) -> Vec<Check> {
    let retained = Check::new("admissible-retained", Provenance::ClosedForm, move || {
        let r = admissible_report_capped(n, DEFAULT_CAP.max(n))?;
        let mut got: Vec<(String, usize)> = r
            .retained()
            .iter()
            .map(|c| (c.descriptor.label(), c.descriptor.dim))
            .collect();
        got.sort();
        Ok(Outcome::new(admissible_expected(n), got))
    })
    .param("n", n);
    let gap = Check::new("admissible-gap", Provenance::ClosedForm, move || {
        let r = admissible_report_capped(n, DEFAULT_CAP.max(n))?;
        let (lo, hi) = (binom2(n - 1), binom2(n));
        let inside: Vec<&str> = r
            .candidates
            .iter()
            .filter(|c| c.descriptor.dim > lo && c.descriptor.dim < hi)
            .map(|c| c.name.as_str())
            .collect();
        Ok(Outcome::new(Vec::<String>::new(), inside))
    })
    .param("n", n);
    vec![retained, gap]
}

pub fn riemannian_report(n: usize) -> Result<Vec<Check>> {
    need(n >= 4, || {
        format!("the Riemannian report needs n >= 4, got {n}")
    })?;
    let mut out = vec![weyl_space_dim(MetricForm::riemannian(n))];
    if n >= 5 {
        out.extend(admissible_checks(n));
        out.push(co_equals(
            TensorKind::Riem1,
            n,
            SubalgebraSpec::Block { k: 2, n },
        ));
        out.push(fixed_so_n_minus_1(n));
        out.push(fixed_so_n_minus_2(n));
    }
    if n % 2 == 0 {
        out.push(co_equals(
            TensorKind::Riem2,
            n,
            SubalgebraSpec::Unitary { l: n / 2 },
        ));
        out.push(riem2_line(n / 2));
    }
    if n == 7 {
        out.push(fixed_g2());
    }
    Ok(out)
}

pub(crate) fn six_candidates() -> Vec<SubalgebraSpec> {
    let mut out = Vec::new();
    for candidate in [
        SixCandidate::GradedSo3,
        SixCandidate::So2So3,
        SixCandidate::GradedSo2So3,
    ] {
        for chirality in [Chirality::R, Chirality::L] {
            out.push(SubalgebraSpec::Six {
                candidate,
                chirality,
            });
        }
    }
    out
}

pub fn lorentzian_report(n: usize) -> Result<Vec<Check>> {
    need(n >= 4, || {
        format!("the Lorentzian report needs n >= 4, got {n}")
    })?;
    let mut out = vec![weyl_space_dim(MetricForm::lightcone(n)?)];
    out.push(
        Check::new("p1-dim", Provenance::ClosedForm, move || {
            let c0 = binom2(n - 2) + 2;
            Ok(Outcome::new(
                c0 + n - 3,
                construct_real(SubalgebraSpec::P1 { n })?.dim(),
            ))
        })
        .param("n", n),
    );
    out.push(fixed_r1(n));
    out.push(no_lines(SubalgebraSpec::P1 { n }));
    out.push(co_equals(TensorKind::Lor, n, SubalgebraSpec::S { n }));
    out.push(s_unique_line(n));
    if n >= 5 {
        out.push(no_lines(SubalgebraSpec::SoR1 { n }));
        out.push(so_n_minus_2(n));
    }
    if n == 6 {
        out.extend(six_candidates().into_iter().map(no_lines));
    }
    Ok(out)
}

pub fn stabilizer_checks(kind: TensorKind, n: usize) -> Result<Vec<Check>> {
    make_tensor(kind, n)?;
    Ok(match kind {
        TensorKind::NullPlane => vec![null_plane(n)],
        TensorKind::Riem1 => vec![co_equals(kind, n, SubalgebraSpec::Block { k: 2, n })],
        TensorKind::Riem2 => vec![
            co_equals(kind, n, SubalgebraSpec::Unitary { l: n / 2 }),
            riem2_line(n / 2),
        ],
        TensorKind::Lor => vec![co_equals(kind, n, SubalgebraSpec::S { n })],
        TensorKind::SoNMinus2 => vec![so_n_minus_2(n), co_so_n_minus_2_dim(n)],
    })
}

fn check_weight(ty: CartanType, w: &Weight) -> Result<()> {
    need(w.0.len() == ty.rank, || {
        format!(
            "{ty} needs {} weight coordinates, got {}",
            ty.rank,
            w.0.len()
        )
    })?;
    need(w.is_dominant(), || format!("weight {w} is not dominant"))
}

fn fundamental_index(w: &Weight) -> Option<usize> {
    let nonzero: Vec<usize> = (0..w.0.len()).filter(|&i| w.0[i] != 0).collect();
    (nonzero.len() == 1 && w.0[nonzero[0]] == 1).then(|| nonzero[0] + 1)
}

pub fn irrep_dim_checks(ty: CartanType, w: Weight) -> Result<Vec<Check>> {
    check_weight(ty, &w)?;
    let table = fundamental_index(&w).and_then(|k| fundamental_dim_closed_form(ty, k));
    let prov = if table.is_some() {
        Provenance::ClosedForm
    } else {
        Provenance::Oracle
    };
    let label = w.to_string();
    Ok(vec![Check::new("irrep-dim", prov, move || {
        let rs = RootSystem::new(ty);
        let expected = match &table {
            Some(d) => d.clone(),
            None => weyl_dim_eps(&rs, &w)?,
        };
        Ok(Outcome::new(big(expected), big(weyl_dim(&rs, &w)?)))
    })
    .param("type", ty)
    .param("weight", label)])
}

pub fn rep_type_checks(ty: CartanType, w: Weight) -> Result<Vec<Check>> {
    check_weight(ty, &w)?;
    let listed = fundamental_index(&w).and_then(|k| {
        rep_type_lists()
            .into_iter()
            .find(|(t, i, _)| *t == ty && *i == k)
            .map(|(_, _, r)| r)
    });
    let prov = if listed.is_some() {
        Provenance::ClosedForm
    } else {
        Provenance::Oracle
    };
    let label = w.to_string();
    Ok(vec![Check::new("rep-type", prov, move || {
        let rs = RootSystem::new(ty);
        let expected = match listed {
            Some(r) => r,
            None => rep_type_by_coroot(&rs, &w)?,
        };
        Ok(Outcome::new(expected, rep_type(&rs, &w)?))
    })
    .param("type", ty)
    .param("weight", label)])
}

/// Dimension rank + |Gamma| of the regular subalgebra at node k, counting
/// roots directly: m_k = 0 when the mark is 1, m_k = 0 mod mark otherwise.
fn regular_dims_by_counting(rs: &RootSystem) -> Vec<usize> {
    let l = rs.rank();
    let pos = rs.positive_roots();
    let Some(hr) = rs.highest_root() else {
        return (0..l)
            .map(|k| l + 2 * pos.iter().filter(|r| r[k] == 0).count())
            .collect();
    };
    (0..l)
        .map(|k| {
            let m = hr[k];
            let count = pos
                .iter()
                .filter(|r| if m == 1 { r[k] == 0 } else { r[k] % m == 0 })
                .count();
            l + 2 * count
        })
        .collect()
}

pub fn enumerate_regular_checks(ty: CartanType) -> Result<Vec<Check>> {
    let mut out = vec![Check::new("regular-dims", Provenance::Oracle, move || {
        let rs = RootSystem::new(ty);
        let got: Vec<usize> = max_regular_reductive(&rs).iter().map(|d| d.dim).collect();
        Ok(Outcome::new(regular_dims_by_counting(&rs), got))
    })
    .param("type", ty)];
    let table: Option<Vec<(String, usize)>> = if ty == CartanType::G2 {
        Some(vec![("A2".into(), 8), ("A1 x A1".into(), 6)])
    } else {
        regular_table(ty)
    };
    if let Some(expected) = table {
        out.push(
            Check::new("regular-table", Provenance::ClosedForm, move || {
                let got: Vec<(String, usize)> = max_regular_reductive(&RootSystem::new(ty))
                    .iter()
                    .map(|d| (d.label(), d.dim))
                    .collect();
                Ok(Outcome::new(&expected, got))
            })
            .param("type", ty),
        );
    }
    Ok(out)
}

pub fn levi_checks(ty: CartanType, k: usize) -> Result<Vec<Check>> {
    need(k >= 1 && k <= ty.rank, || {
        format!("node {k} out of range for {ty}")
    })?;
    let mut out = vec![Check::new("levi-dim", Provenance::Oracle, move || {
        let rs = RootSystem::new(ty);
        let zero = rs.positive_roots().iter().filter(|r| r[k - 1] == 0).count();
        Ok(Outcome::new(ty.rank + 2 * zero, levi_factor(ty, k)?.dim))
    })
    .param("type", ty)
    .param("k", k)];
    if let Some(expected) = levi_table(ty, k) {
        out.push(
            Check::new("levi-table", Provenance::ClosedForm, move || {
                let d = levi_factor(ty, k)?;
                Ok(Outcome::new(&expected, (d.label(), d.dim)))
            })
            .param("type", ty)
            .param("k", k),
        );
    }
    Ok(out)
}

fn pair_set(items: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    items
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// Subalgebra and ambient labels of the published tables for l = 2, 3.
fn published_pairs(l: usize) -> Option<BTreeSet<(String, String)>> {
    match l {
        2 => Some(pair_set(&[
            ("u(2)", "so(4)"),
            ("u(1,1)", "so(2,2)"),
            ("gl(1,H)", "u*(2,H)"),
            ("u(2)", "u*(2,H)"),
            ("u(1,1)", "u*(2,H)"),
            ("gl(2,R)", "so(2,2)"),
        ])),
        3 => Some(pair_set(&[
            ("u(3)", "so(6)"),
            ("u(1,2)", "so(2,4)"),
            ("u(3)", "u*(3,H)"),
            ("u(1,2)", "u*(3,H)"),
            ("gl(3,R)", "so(3,3)"),
        ])),
        _ => None,
    }
}

pub fn realforms_checks(l: usize) -> Result<Vec<Check>> {
    need(l >= 2, || format!("real forms need rank >= 2, got {l}"))?;
    let mut out = Vec::new();
    if let Some(expected) = published_pairs(l) {
        out.push(
            Check::new("realform-pairs", Provenance::ClosedForm, move || {
                let t = enumerate_real_forms(l)?;
                let got: BTreeSet<(String, String)> = t
                    .pairs
                    .iter()
                    .map(|p| (p.subalgebra.clone(), p.ambient.clone()))
                    .collect();
                Ok(Outcome::new(
                    json!({ "count": expected.len(), "pairs": &expected }),
                    json!({ "count": t.pairs.len(), "pairs": got }),
                ))
            })
            .param("l", l),
        );
    }
    if l == 4 {
        out.push(
            Check::new("realform-ambients", Provenance::ClosedForm, move || {
                let t = enumerate_real_forms(l)?;
                let got: BTreeSet<&str> = t.pairs.iter().map(|p| p.ambient.as_str()).collect();
                let iso = |label: &str| {
                    t.rows.iter().find(|r| r.ambient.label == label).map(|r| (r.ambient.real_dim, r.ambient.trace_signature))
                };
                let same = iso("so(2,6)").is_some() && iso("so(2,6)") == iso("u*(4,H)");
                Ok(Outcome::new(
                    json!({ "ambients": ["so(2,6)", "so(4,4)", "so(8)", "u*(4,H)"], "so(2,6)~u*(4,H)": true }),
                    json!({ "ambients": got, "so(2,6)~u*(4,H)": same }),
                ))
            })
            .param("l", l),
        );
        out.push(
            Check::new("lorentzian-surrogate", Provenance::ClosedForm, move || {
                let t = enumerate_real_forms(l)?;
                let s = t.surrogate.as_ref().ok_or_else(|| Error::Unsupported("no surrogate at l = 4".into()))?;
                let blocks: Vec<Value> = s
                    .blocks
                    .iter()
                    .map(|b| json!({ "invariants": b.complex_invariants, "perfect_derived": b.derived_perfect }))
                    .collect();
                let want = json!({ "invariants": [16, 1, 15], "perfect_derived": true });
                Ok(Outcome::new(
                    json!({ "ambient": "so(1,7)", "blocks": [want.clone(), want], "pass": true }),
                    json!({ "ambient": s.ambient, "blocks": blocks, "pass": s.pass }),
                ))
            })
            .param("l", l),
        );
    }
    out.push(
        Check::new("lorentzian-verdict", Provenance::ClosedForm, move || {
            let t = enumerate_real_forms(l)?;
            let unidentified = t
                .pairs
                .iter()
                .filter(|p| p.subalgebra == "unidentified")
                .count();
            Ok(Outcome::new(
                json!({ "lorentzian": l == 4, "unidentified": 0 }),
                json!({ "lorentzian": t.lorentzian, "unidentified": unidentified }),
            ))
        })
        .param("l", l),
    );
    if l == 3 {
        out.push(sl3_centralizer());
    }
    Ok(out)
}

pub(crate) fn sl3_centralizer() -> Check {
    Check::new("sl3-centralizer-span", Provenance::ClosedForm, || {
        let c = sl_centralizer_span(3)?;
        Ok(Outcome::new(
            json!({ "sl_dim": 8, "centralizer_dim": 1, "span_dim": 9, "equals_gl": true }),
            json!({ "sl_dim": c.sl_dim, "centralizer_dim": c.centralizer_dim, "span_dim": c.span_dim, "equals_gl": c.equals_gl }),
        ))
    })
    .param("l", 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::run_checks;

    #[test]
    fn small_reports_pass() {
        let mut checks = riemannian_report(5).unwrap();
        checks.extend(stabilizer_checks(TensorKind::Lor, 6).unwrap());
        checks.extend(irrep_dim_checks(CartanType::c(3), Weight(vec![0, 1, 0])).unwrap());
        checks.extend(enumerate_regular_checks(CartanType::G2).unwrap());
        let r = run_checks(&checks, false).unwrap();
        assert!(r.passed(), "{}", r.to_table());
    }

    #[test]
    fn usage_errors() {
        assert!(riemannian_report(3).is_err());
        assert!(irrep_dim_checks(CartanType::c(3), Weight(vec![0, 1])).is_err());
        assert!(levi_checks(CartanType::b(3), 4).is_err());
        assert!(stabilizer_checks(TensorKind::Riem2, 7).is_err());
        assert!(realforms_checks(1).is_err());
    }
}
