use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::icc::{fc_witness, icc_affine_cyclic};
use super::lattice::{is_invariant, LatticeIndex};
use crate::cocycle::{
    coboundary_witness, finf_extend, finf_generator, gamma1_cocycle, gamma1_obstruction, verify_relations, CocycleSpec,
    FinfWindow,
};
use crate::error::{Error, Result};
use crate::exact::scalar::mod_floor;
use crate::exact::{int, IntMatrix, Integer, LatticeBasis};
use crate::matgroups::{classify_sl2, sl2_box, CongruenceKind, Sl2Class};

/// Cap on the number of elements enumerated when testing whether a linear
/// part is finite.
pub const FINITE_CLOSURE_CAP: usize = 24;

/// Radius of the box of `SL_2(Z)` searched for elements the `Γ1(N)` cocycle
/// could extend to.
pub const OBSTRUCTION_BOX: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubgroupDescriptor {
    /// `L ⋊ <linear_gens>`.
    FullLatticeSemidirect {
        lattice: LatticeBasis,
        linear_gens: Vec<IntMatrix>,
    },
    /// `{(c(g), g) : g in S}`.
    GraphSubgroup { spec: CocycleSpec },
    /// `Z^2 ⋊ <g>`, or `Z^2 ⋊ <g, -I>`.
    CyclicLinear { g: IntMatrix, with_minus_identity: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    Case1,
    Case2,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub evidence: Value,
}

impl Check {
    fn new(name: &str, verdict: Verdict, evidence: Value) -> Self {
        Check {
            name: name.into(),
            verdict,
            evidence,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub case: Case,
    pub checks: Vec<Check>,
}

impl ClassificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Elements of the group generated by `gens`, if it has at most `cap` of
/// them.
pub fn finite_closure(gens: &[IntMatrix], cap: usize) -> Result<Option<Vec<IntMatrix>>> {
    let Some(first) = gens.first() else {
        return Ok(Some(vec![]));
    };
    let n = first.require_square()?;
    for g in gens {
        g.require_size(n)?;
        g.require_unimodular()?;
    }
    let id = IntMatrix::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let h = &elements[i] * g;
            if seen.insert(h.clone()) {
                if elements.len() == cap {
                    return Ok(None);
                }
                elements.push(h);
            }
        }
        i += 1;
    }
    Ok(Some(elements))
}

fn sl2_class_evidence(g: &IntMatrix) -> Result<Value> {
    let class = classify_sl2(g)?;
    let mut ev = json!({ "g": g, "class": class.name(), "trace": g.trace().to_string() });
    match class {
        Sl2Class::Elliptic { order } => ev["order"] = json!(order),
        Sl2Class::Parabolic { sign } => ev["sign"] = json!(sign),
        Sl2Class::Hyperbolic => {}
    }
    Ok(ev)
}

/// Amenability of the linear part on the declared forms: finite, or cyclic
/// up to `±I`.
fn linear_part_check(gens: &[IntMatrix]) -> Result<Check> {
    let minus = IntMatrix::scalar(2, int(-1));
    let essential: Vec<&IntMatrix> = gens.iter().filter(|g| !g.is_identity() && **g != minus).collect();
    if let Some(elements) = finite_closure(gens, FINITE_CLOSURE_CAP)? {
        return Ok(Check::new(
            "linear_part",
            Verdict::Pass,
            json!({ "form": "finite", "order": elements.len(), "cap": FINITE_CLOSURE_CAP }),
        ));
    }
    if let [g] = essential[..] {
        if g.rows() == 2 {
            return Ok(Check::new(
                "linear_part",
                Verdict::Pass,
                json!({ "form": "virtually_cyclic", "generator": sl2_class_evidence(g)? }),
            ));
        }
    }
    Ok(Check::new(
        "linear_part",
        Verdict::Unknown,
        json!({ "form": "undeclared", "generators": essential.len(), "cap": FINITE_CLOSURE_CAP }),
    ))
}

fn icc_check(g: &IntMatrix) -> Result<Check> {
    match icc_affine_cyclic(g) {
        Ok(icc) => Ok(Check::new(
            "icc",
            pass_if(icc),
            json!({ "trace": g.trace().to_string(), "fixed_vector": fc_witness(g)? }),
        )),
        Err(Error::FiniteOrder(k)) => Ok(Check::new(
            "icc",
            Verdict::Fail,
            json!({ "trace": g.trace().to_string(), "finite_order": k }),
        )),
        Err(e) => Err(e),
    }
}

fn lattice_checks(lattice: &LatticeBasis, gens: &[IntMatrix], checks: &mut Vec<Check>) -> bool {
    let offender = gens
        .iter()
        .enumerate()
        .find(|(_, g)| !is_invariant(lattice, std::slice::from_ref(g)));
    let invariant = offender.is_none();
    checks.push(Check::new(
        "lattice_invariance",
        pass_if(invariant),
        match offender {
            None => json!({ "generators": gens.len() }),
            Some((i, g)) => json!({ "generator_index": i, "generator": g }),
        },
    ));
    let full = lattice.is_full_rank();
    checks.push(Check::new(
        "full_rank",
        pass_if(full),
        json!({ "rank": lattice.rank(), "dim": lattice.dim(), "index": LatticeIndex::of(lattice) }),
    ));
    invariant && full
}

fn classify_semidirect(lattice: &LatticeBasis, gens: &[IntMatrix]) -> Result<ClassificationReport> {
    for g in gens {
        g.require_size(lattice.dim())?;
        g.require_det(1)?;
    }
    let mut checks = vec![];
    let case1 = lattice_checks(lattice, gens, &mut checks);
    checks.push(linear_part_check(gens)?);
    let minus = IntMatrix::scalar(2, int(-1));
    let essential: Vec<&IntMatrix> = gens.iter().filter(|g| !g.is_identity() && **g != minus).collect();
    match essential[..] {
        [g] if g.rows() == 2 => checks.push(icc_check(g)?),
        _ => checks.push(Check::new(
            "icc",
            Verdict::Unknown,
            json!({ "reason": "not cyclic up to ±I" }),
        )),
    }
    Ok(ClassificationReport {
        case: if case1 { Case::Case1 } else { Case::Unknown },
        checks,
    })
}

fn classify_cyclic(g: &IntMatrix, with_minus_identity: bool) -> Result<ClassificationReport> {
    g.require_size(2)?;
    g.require_det(1)?;
    let mut gens = vec![g.clone()];
    if with_minus_identity {
        gens.push(IntMatrix::scalar(2, int(-1)));
    }
    let mut checks = vec![];
    let case1 = lattice_checks(&LatticeBasis::standard(2), &gens, &mut checks);
    checks.push(Check::new(
        "linear_part",
        Verdict::Pass,
        json!({ "form": "virtually_cyclic", "generator": sl2_class_evidence(g)? }),
    ));
    checks.push(icc_check(g)?);
    Ok(ClassificationReport {
        case: if case1 { Case::Case1 } else { Case::Unknown },
        checks,
    })
}

/// `N` when the spec is the `Γ1(N)` cocycle on `T`, `[[1,0],[N,1]]`.
fn detect_gamma1(spec: &CocycleSpec) -> Result<Option<u64>> {
    let [_, lower] = spec.generators() else {
        return Ok(None);
    };
    let Ok(level) = u64::try_from(&lower[(1, 0)]) else {
        return Ok(None);
    };
    let Ok(kind) = CongruenceKind::gamma1(level) else {
        return Ok(None);
    };
    if kind.sampling_generators() != spec.generators() {
        return Ok(None);
    }
    for (g, v) in spec.generators().iter().zip(spec.values()) {
        if gamma1_cocycle(level, g)? != *v {
            return Ok(None);
        }
    }
    Ok(Some(level))
}

/// The window `k -> c(g_k)` when every generator is an `F∞` generator `g_k`.
fn detect_finf(spec: &CocycleSpec) -> Result<Option<FinfWindow>> {
    if spec.is_empty() {
        return Ok(None);
    }
    let mut entries = vec![];
    for (g, v) in spec.generators().iter().zip(spec.values()) {
        let shifted = &g[(1, 1)] - int(1);
        if mod_floor(&shifted, &int(4)) != Integer::ZERO {
            return Ok(None);
        }
        let k = shifted / int(4);
        if finf_generator(&k) != *g {
            return Ok(None);
        }
        entries.push((k, v.clone()));
    }
    Ok(FinfWindow::new(entries).ok())
}

fn gamma1_obstruction_check(level: u64) -> Result<Check> {
    // the cocycle extends to s exactly when ξ - sξ is integral; the
    // obstruction holds when that happens only inside Γ1(N)
    let kind = CongruenceKind::gamma1(level)?;
    let mut checked = 0usize;
    let mut counterexample = None;
    for s in sl2_box(OBSTRUCTION_BOX) {
        checked += 1;
        if gamma1_obstruction(level, &s)? != kind.contains(&s)? {
            counterexample = Some(s);
            break;
        }
    }
    Ok(Check::new(
        "gamma1_obstruction",
        pass_if(counterexample.is_none()),
        json!({ "level": level, "box": OBSTRUCTION_BOX, "checked": checked, "counterexample": counterexample }),
    ))
}

fn finf_check(window: &FinfWindow) -> Result<Check> {
    let ks: Vec<i64> = window.indices().filter_map(|k| i64::try_from(k).ok()).collect();
    let span = ks.last().unwrap() - ks.first().unwrap();
    let mut obstructed = vec![];
    let mut consistent = vec![];
    for n in (-span..=span).filter(|&n| n != 0) {
        match finf_extend(&int(n), window) {
            Ok(None) => obstructed.push(n),
            Ok(Some(u)) => consistent.push(json!({ "n": n, "u": u.iter().map(|x| x.to_string()).collect::<Vec<_>>() })),
            Err(Error::MalformedWindow(_)) => {}
            Err(e) => return Err(e),
        }
    }
    // a consistent window does not prove that the cocycle extends
    let verdict = if !obstructed.is_empty() && consistent.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Unknown
    };
    Ok(Check::new(
        "finf_obstruction",
        verdict,
        json!({ "window": window, "obstructed": obstructed, "consistent": consistent }),
    ))
}

fn classify_graph(spec: &CocycleSpec) -> Result<ClassificationReport> {
    let mut checks = vec![];
    if spec.relators().is_empty() {
        checks.push(Check::new("relators", Verdict::Unknown, json!({ "relators": 0 })));
    } else {
        let ok = verify_relations(spec)?;
        checks.push(Check::new(
            "relators",
            pass_if(ok),
            json!({ "relators": spec.relators().len() }),
        ));
    }
    match coboundary_witness(spec) {
        Ok(Some(w)) => checks.push(Check::new(
            "rational_coboundary",
            Verdict::Pass,
            json!({ "witness": w }),
        )),
        Ok(None) => checks.push(Check::new(
            "rational_coboundary",
            Verdict::Fail,
            json!({ "reason": "inconsistent" }),
        )),
        Err(Error::Underdetermined) => checks.push(Check::new(
            "rational_coboundary",
            Verdict::Unknown,
            json!({ "reason": "underdetermined" }),
        )),
        Err(e) => return Err(e),
    }
    let mut matched = false;
    if let Some(level) = detect_gamma1(spec)? {
        matched = true;
        checks.push(gamma1_obstruction_check(level)?);
    }
    if let Some(window) = detect_finf(spec)? {
        matched = true;
        checks.push(finf_check(&window)?);
    }
    if !matched {
        checks.push(Check::new(
            "obstruction",
            Verdict::Unknown,
            json!({ "reason": "no known family" }),
        ));
    }
    checks.push(Check::new(
        "maximality",
        Verdict::Unknown,
        json!({ "reason": "not decidable" }),
    ));
    Ok(ClassificationReport {
        case: Case::Case2,
        checks,
    })
}

/// Evidence for the two shapes of maximal subgroups with the Haagerup
/// property in `Z^2 ⋊ SL_2(Z)`. Maximality is never asserted.
pub fn classify_subgroup(d: &SubgroupDescriptor) -> Result<ClassificationReport> {
    let mut report = match d {
        SubgroupDescriptor::FullLatticeSemidirect { lattice, linear_gens } => {
            classify_semidirect(lattice, linear_gens)?
        }
        SubgroupDescriptor::GraphSubgroup { spec } => return classify_graph(spec),
        SubgroupDescriptor::CyclicLinear { g, with_minus_identity } => classify_cyclic(g, *with_minus_identity)?,
    };
    report.checks.push(Check::new(
        "maximality",
        Verdict::Unknown,
        json!({ "reason": "not decidable" }),
    ));
    Ok(report)
}
