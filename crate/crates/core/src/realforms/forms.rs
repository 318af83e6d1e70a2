use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{signature as signature_of, ExactMatrix, Gaussian, GaussianMatrix};
use crate::lie::{AlgebraInvariants, MetricForm, RealLieAlgebra};
use crate::roots::{so_factors, CartanType};

use super::involution::{ambient_so, gl_embedding, Involution, InvolutionFamily};

/// Real form of so(2l, C) fixed by sigma = theta tau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbientForm {
    pub label: String,
    /// Sign of M conj(M) for the real structure v -> M conj(v).
    pub structure_sign: i32,
    /// Signature of the form on the real points, when the sign is +1.
    pub signature: Option<(usize, usize)>,
    /// Real dimension of the sigma-fixed points of so(2l, C).
    pub real_dim: usize,
    /// Signature of Re tr(XY) on the sigma-fixed points.
    pub trace_signature: (usize, usize, usize),
    /// Whether dim and trace signature match the closed forms for the label.
    pub consistent: bool,
}

/// Closed-form (dim, trace signature) of so(p,q) and of u*(l,H).
pub fn ambient_closed_form(
    l: usize,
    signature: Option<(usize, usize)>,
) -> (usize, (usize, usize, usize)) {
    let c2 = |m: usize| m * m.saturating_sub(1) / 2;
    let dim = c2(2 * l);
    match signature {
        Some((p, q)) => (dim, (p * q, c2(p) + c2(q), 0)),
        None => (dim, (l * (l - 1), l * l, 0)),
    }
}

fn ambient_invariants(
    theta: &Involution,
    signature: Option<(usize, usize)>,
) -> Result<(usize, (usize, usize, usize), bool)> {
    let fixed = theta
        .anti_involution()
        .fixed_points(ambient_so(theta.rank())?.basis());
    let d = fixed.len();
    let mut gram = ExactMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..=i {
            let t = fixed[i].mul(&fixed[j]).trace().re;
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    let sig = signature_of(&gram);
    Ok((
        d,
        sig,
        ambient_closed_form(theta.rank(), signature) == (d, sig),
    ))
}

/// A real form identified by its invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealFormId {
    pub label: String,
    pub invariants: AlgebraInvariants,
}

fn so_label(p: usize, q: usize) -> String {
    if p.min(q) == 0 {
        format!("so({})", p + q)
    } else {
        format!("so({},{})", p.min(q), p.max(q))
    }
}

pub fn lorentzian_label(l: usize) -> String {
    so_label(1, 2 * l - 1)
}

/// Real points of v -> M conj(v), as complex vectors, when M conj(M) = 1.
fn real_points(m: &GaussianMatrix) -> Vec<Vec<Gaussian>> {
    let n = m.rows();
    let (p, q) = (m.real_part(), m.imag_part());
    let id = ExactMatrix::identity(n);
    // (P - I) x + Q y = 0, Q x - (P + I) y = 0
    let sys = ExactMatrix::blocks(&p.sub(&id), &q, &q, &p.add(&id).neg());
    sys.kernel()
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|i| Gaussian::new(v[i].clone(), v[i + n].clone()))
                .collect()
        })
        .collect()
}

/// Identifies the ambient real form so(p,q) or u*(l,H) cut out by sigma.
pub fn ambient_real_form(theta: &Involution) -> Result<AmbientForm> {
    let l = theta.rank();
    let sigma = theta.anti_involution();
    let m = sigma.matrix();
    let mm = m.mul(&m.conj());
    let id = GaussianMatrix::identity(2 * l);
    if mm == id.neg() {
        let (real_dim, trace_signature, consistent) = ambient_invariants(theta, None)?;
        return Ok(AmbientForm {
            label: format!("u*({l},H)"),
            structure_sign: -1,
            signature: None,
            real_dim,
            trace_signature,
            consistent,
        });
    }
    if mm != id {
        return Err(Error::NotCompatible(format!(
            "{}: M conj(M) is not +-1",
            theta.family()
        )));
    }
    let pts = real_points(m);
    if pts.len() != 2 * l {
        return Err(Error::NotCompatible(format!(
            "{}: {} real points, expected {}",
            theta.family(),
            pts.len(),
            2 * l
        )));
    }
    let g = MetricForm::isotropic_pair(l)?.gram().complexify();
    let w = GaussianMatrix::from_columns(2 * l, &pts);
    let restricted = w.transpose().mul(&g).mul(&w);
    if !restricted.is_real() {
        return Err(Error::NotCompatible(format!(
            "{}: form is not real on the real points",
            theta.family()
        )));
    }
    let (pp, qq, z) = signature_of(&restricted.real_part());
    debug_assert_eq!(z, 0);
    let (real_dim, trace_signature, consistent) = ambient_invariants(theta, Some((pp, qq)))?;
    Ok(AmbientForm {
        label: so_label(pp, qq),
        structure_sign: 1,
        signature: Some((pp, qq)),
        real_dim,
        trace_signature,
        consistent,
    })
}

/// sigma-fixed real form of the embedded gl(l, C), as a real algebra of
/// 2l x 2l matrices via its (faithful) action on V.
pub fn subalgebra_real_form(theta: &Involution) -> Result<RealLieAlgebra> {
    let l = theta.rank();
    let gl = gl_embedding(l)?;
    let sigma = theta.anti_involution();
    if !sigma.preserves(&gl) {
        return Err(Error::NotCompatible(format!(
            "{}: sigma does not preserve gl({l},C)",
            theta.family()
        )));
    }
    let fixed = sigma.fixed_points(gl.basis());
    let idx: Vec<usize> = (0..l).collect();
    let basis: Vec<ExactMatrix> = fixed
        .iter()
        .map(|x| x.submatrix(&idx, &idx).realify())
        .collect();
    RealLieAlgebra::new(
        2 * l,
        basis,
        None,
        format!("gl({l},C)^sigma[{}]", theta.family()),
    )
}

/// Closed-form invariants of the real forms of gl(l, C), with labels.
pub fn gl_real_form_candidates(l: usize) -> Vec<RealFormId> {
    let mut out = Vec::new();
    let d = l * l;
    for q in 0..=l / 2 {
        let p = l - q;
        let label = if q == 0 {
            format!("u({l})")
        } else {
            format!("u({q},{p})")
        };
        out.push(RealFormId {
            label,
            invariants: AlgebraInvariants {
                dim: d,
                center: 1,
                derived: d - 1,
                trace_signature: (2 * p * q, p * p + q * q, 0),
                center_sign: Some(-1),
            },
        });
    }
    out.push(RealFormId {
        label: format!("gl({l},R)"),
        invariants: AlgebraInvariants {
            dim: d,
            center: 1,
            derived: d - 1,
            trace_signature: (l * (l + 1) / 2, l * (l - 1) / 2, 0),
            center_sign: Some(1),
        },
    });
    if l % 2 == 0 {
        let k = l / 2;
        out.push(RealFormId {
            label: format!("gl({k},H)"),
            invariants: AlgebraInvariants {
                dim: d,
                center: 1,
                derived: d - 1,
                trace_signature: (2 * k * k - k, 2 * k * k + k, 0),
                center_sign: Some(1),
            },
        });
    }
    out
}

/// Label of a real form of gl(l, C) from its invariants, or "unidentified".
pub fn identify_gl_form(l: usize, inv: &AlgebraInvariants) -> RealFormId {
    let label = gl_real_form_candidates(l)
        .into_iter()
        .find(|c| c.invariants == *inv)
        .map_or_else(|| "unidentified".to_string(), |c| c.label);
    RealFormId {
        label,
        invariants: inv.clone(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RealFormRow {
    pub family: InvolutionFamily,
    pub family_label: String,
    pub theta_square: i32,
    pub swaps: bool,
    pub commutes_with_compact: bool,
    pub ambient: AmbientForm,
    pub subalgebra: RealFormId,
}

pub fn classify_family(l: usize, family: InvolutionFamily) -> Result<RealFormRow> {
    let theta = Involution::new(l, family)?;
    let commutes = theta.commutes_with_compact()?;
    if !commutes {
        return Err(Error::NotCompatible(format!(
            "{family}: theta does not commute with the compact form"
        )));
    }
    let ambient = ambient_real_form(&theta)?;
    let sub = subalgebra_real_form(&theta)?;
    let subalgebra = identify_gl_form(l, &sub.algebra_invariants());
    Ok(RealFormRow {
        family,
        family_label: family.to_string(),
        theta_square: theta.square_sign(),
        swaps: theta.swaps(),
        commutes_with_compact: commutes,
        ambient,
        subalgebra,
    })
}

/// Distinct (ambient, subalgebra) pair with the families realizing it.
#[derive(Clone, Debug, Serialize)]
pub struct RealFormPair {
    pub ambient: String,
    pub subalgebra: String,
    pub invariants: AlgebraInvariants,
    pub families: Vec<String>,
}

/// Block-diagonal real subalgebras of so(1, 2l-1) whose complexification
/// has the invariants of gl(l, C).
#[derive(Clone, Debug, Serialize)]
pub struct Surrogate {
    pub ambient: String,
    pub blocks: Vec<SurrogateBlock>,
    /// (dim, center, derived) of gl(l, C).
    pub target: (usize, usize, usize),
    pub target_types: Vec<CartanType>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurrogateBlock {
    pub label: String,
    pub real_dim: usize,
    pub complex_invariants: (usize, usize, usize),
    pub derived_perfect: bool,
    pub center: usize,
    pub semisimple_types: Vec<CartanType>,
}

fn block_algebra(
    so: &RealLieAlgebra,
    form: &MetricForm,
    blocks: &[&[usize]],
    label: &str,
) -> Result<RealLieAlgebra> {
    let n = form.dim();
    let gi = form.inverse_gram();
    let mut gens = Vec::new();
    for b in blocks {
        for (x, &i) in b.iter().enumerate() {
            for &j in &b[x + 1..] {
                gens.push(gi.mul(&ExactMatrix::unit(n, i, j).sub(&ExactMatrix::unit(n, j, i))));
            }
        }
    }
    so.subalgebra(gens, label)
}

/// The l = 4 surrogate: so(6) x so(1,1) and so(1,5) x so(2) inside so(1,7)
/// in the diagonal form with seven positive entries. The semisimple parts
/// are of type D3 = A3, matching sl(4, C).
pub fn lorentzian_surrogate(l: usize) -> Result<Surrogate> {
    if l != 4 {
        return Err(Error::Unsupported(format!(
            "block surrogate is only defined for l = 4, got {l}"
        )));
    }
    let form = MetricForm::diagonal(7, 1);
    let so = RealLieAlgebra::so(&form);
    let gl = gl_embedding(l)?;
    let target = gl.structure_invariants();
    let target_types = CartanType::a(l - 1).canonical();
    // (label, index blocks, block sizes)
    type BlockSpec<'a> = (&'a str, Vec<&'a [usize]>, [usize; 2]);
    let specs: [BlockSpec; 2] = [
        (
            "so(6) x so(1,1)",
            vec![&[0, 1, 2, 3, 4, 5], &[6, 7]],
            [6, 2],
        ),
        (
            "so(1,5) x so(2)",
            vec![&[2, 3, 4, 5, 6, 7], &[0, 1]],
            [6, 2],
        ),
    ];
    let mut blocks = Vec::new();
    for (label, idx, sizes) in specs {
        let alg = block_algebra(&so, &form, &idx, label)?;
        let c = alg.complexify();
        let complex_invariants = c.structure_invariants();
        let der = c.derived();
        let derived_perfect = der.derived().dim() == der.dim() && der.center().dim() == 0;
        let mut center = 0;
        let mut semisimple_types = Vec::new();
        for m in sizes {
            let (z, t) = so_factors(m);
            center += z;
            semisimple_types.extend(t);
        }
        semisimple_types.sort();
        blocks.push(SurrogateBlock {
            label: label.to_string(),
            real_dim: alg.dim(),
            complex_invariants,
            derived_perfect,
            center,
            semisimple_types,
        });
    }
    let pass = blocks.iter().all(|b| {
        b.complex_invariants == target
            && b.derived_perfect
            && b.center == target.1
            && b.semisimple_types == target_types
    });
    Ok(Surrogate {
        ambient: so.label().to_string(),
        blocks,
        target,
        target_types,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RealFormTable {
    pub l: usize,
    pub rows: Vec<RealFormRow>,
    pub pairs: Vec<RealFormPair>,
    /// Some family yields so(1, 2l-1).
    pub lorentzian_from_families: bool,
    pub surrogate: Option<Surrogate>,
    pub lorentzian: bool,
}

/// All families for rank l, deduplicated by (ambient, subalgebra invariants).
pub fn enumerate_real_forms(l: usize) -> Result<RealFormTable> {
    if l < 2 {
        return Err(Error::InvalidArgument(format!(
            "real forms are tabulated for l >= 2, got {l}"
        )));
    }
    let rows: Vec<RealFormRow> = InvolutionFamily::all(l)
        .into_par_iter()
        .map(|f| classify_family(l, f))
        .collect::<Result<_>>()?;
    let mut pairs: Vec<RealFormPair> = Vec::new();
    let mut seen: BTreeMap<(String, String), usize> = BTreeMap::new();
    for r in &rows {
        let key = (
            r.ambient.label.clone(),
            format!("{:?}", r.subalgebra.invariants),
        );
        match seen.get(&key) {
            Some(&i) => pairs[i].families.push(r.family_label.clone()),
            None => {
                seen.insert(key, pairs.len());
                pairs.push(RealFormPair {
                    ambient: r.ambient.label.clone(),
                    subalgebra: r.subalgebra.label.clone(),
                    invariants: r.subalgebra.invariants.clone(),
                    families: vec![r.family_label.clone()],
                });
            }
        }
    }
    let lor = lorentzian_label(l);
    let lorentzian_from_families = pairs.iter().any(|p| p.ambient == lor);
    let surrogate = if l == 4 {
        Some(lorentzian_surrogate(l)?)
    } else {
        None
    };
    let lorentzian = lorentzian_from_families || surrogate.as_ref().is_some_and(|s| s.pass);
    Ok(RealFormTable {
        l,
        rows,
        pairs,
        lorentzian_from_families,
        surrogate,
        lorentzian,
    })
}

/// Real dimension of the sigma-fixed points of so(2l, C).
pub fn ambient_fixed_dim(theta: &Involution) -> Result<usize> {
    Ok(theta
        .anti_involution()
        .fixed_dim(ambient_so(theta.rank())?.basis()))
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerCheck {
    pub sl_dim: usize,
    pub centralizer_dim: usize,
    pub span_dim: usize,
    pub equals_gl: bool,
}

/// span(sl(l) + z_{so(2l,C)}(sl(l))) against the embedded gl(l, C).
pub fn sl_centralizer_span(l: usize) -> Result<CentralizerCheck> {
    let so = ambient_so(l)?;
    let sl = crate::lie::construct_complex(crate::lie::SubalgebraSpec::SlComplex { l })?;
    let z = so.centralizer_of(&sl)?;
    let mut gens: Vec<GaussianMatrix> = sl.basis().to_vec();
    gens.extend(z.basis().iter().cloned());
    let span =
        crate::lie::ComplexLieAlgebra::spanned_by(2 * l, gens, so.form().cloned(), "sl + z(sl)")?;
    let gl = gl_embedding(l)?;
    Ok(CentralizerCheck {
        sl_dim: sl.dim(),
        centralizer_dim: z.dim(),
        span_dim: span.dim(),
        equals_gl: span.span_eq(&gl),
    })
}
