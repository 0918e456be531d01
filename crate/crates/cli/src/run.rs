//! Suite selection, execution and reporting.
//!
//! Reports are deterministic: line order is fixed by the construction order
//! of each suite and suites run in a canonical order per instance, so two
//! runs with different worker counts emit byte-identical JSON.

use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use ydcheck_core::adjoint::{
    adjoint_braiding_suite, adjoint_yd_modules, bd_shortcuts, build_adjoint, example_shortcuts,
    frobenius_shortcuts,
};
use ydcheck_core::projection::{
    bd_wbha, build_projected_module, check_entwining, check_projection, entwining_from_projection,
    ProjectedModule, Projection,
};
use ydcheck_core::wbha::{
    check_antipode, check_wbb, derived_identity_suite, weak_hopf_specialization_report, Wbha,
};
use ydcheck_core::weak_op::{check_wo, derived_wo_suite, WeakOperatorQuad};
use ydcheck_core::wyb::check_wyb;
use ydcheck_core::yd::{
    base_object, delta_tensor, nabla_tensor, unit_constraints, verify_coherence, yd_module_report,
    yd_morphism_product, yd_self_wyb, YdModule,
};
use ydcheck_core::{CoreError, Field, PrimeField, Rationals, Report, Status};

use crate::instance::{load_instance, InstanceKind, LoadedInstance};
use crate::schema::LoadError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Wyb,
    Wbb,
    Antipode,
    Derived,
    Wo,
    Yd,
    Monoidal,
    Projection,
    Entwining,
    Adjoint,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Wyb,
        Suite::Wbb,
        Suite::Antipode,
        Suite::Derived,
        Suite::Wo,
        Suite::Yd,
        Suite::Monoidal,
        Suite::Projection,
        Suite::Entwining,
        Suite::Adjoint,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Wyb => "wyb",
            Suite::Wbb => "wbb",
            Suite::Antipode => "antipode",
            Suite::Derived => "derived",
            Suite::Wo => "wo",
            Suite::Yd => "yd",
            Suite::Monoidal => "monoidal",
            Suite::Projection => "projection",
            Suite::Entwining => "entwining",
            Suite::Adjoint => "adjoint",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .iter()
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldChoice {
    Rationals,
    Prime(u64),
}

impl FromStr for FieldChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "Q" {
            return Ok(FieldChoice::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p.parse().map_err(|_| format!("bad prime in {s:?}"))?;
            return Ok(FieldChoice::Prime(p));
        }
        Err(format!("field must be Q or Fp:<p>, got {s:?}"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Text,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("format must be text or json, got {other:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub field: FieldChoice,
    pub instances: Vec<String>,
    pub suites: Vec<Suite>,
    pub parallelism: usize,
    pub report_format: ReportFormat,
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.suites.is_empty() {
            return Err("suite list must be non-empty".into());
        }
        if self.instances.is_empty() {
            return Err("instance list must be non-empty".into());
        }
        if let FieldChoice::Prime(p) = self.field {
            if !ydcheck_core::field::is_prime_u64(p) {
                return Err(format!("{p} is not prime"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteRun {
    pub instance: String,
    pub suite: &'static str,
    #[serde(flatten)]
    pub report: Report,
    #[serde(skip)]
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub info: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub field: String,
    pub runs: Vec<SuiteRun>,
    pub summary: Summary,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for run in &self.runs {
            out.push_str(&format!(
                "== {} :: {} ({:.1} ms)\n",
                run.instance, run.suite, run.wall_ms
            ));
            for line in &run.report.lines {
                let status = match line.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skip",
                    Status::Info => "info",
                };
                out.push_str(&format!("  [{status}] {}", line.id));
                if let Some(w) = &line.witness {
                    out.push_str(&format!(
                        "  at ({},{}): {} vs {}",
                        w.row, w.col, w.lhs, w.rhs
                    ));
                }
                if let Some(n) = &line.note {
                    out.push_str(&format!("  ({n})"));
                }
                out.push('\n');
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} skipped, {} info\n",
            self.summary.pass, self.summary.fail, self.summary.skipped, self.summary.info
        ));
        out
    }
}

/// Run the configured suites. Identity ordering inside every suite is fixed
/// by construction; the worker count only affects wall time.
pub fn run_suites(cfg: &SuiteConfig) -> Result<RunReport, LoadError> {
    cfg.validate().map_err(|detail| LoadError::Validation {
        what: "configuration".into(),
        detail,
    })?;
    match cfg.field {
        FieldChoice::Rationals => run_over(Rationals, cfg),
        FieldChoice::Prime(p) => {
            let field = PrimeField::new(p)?;
            run_over(field, cfg)
        }
    }
}

fn run_over<F: Field>(field: F, cfg: &SuiteConfig) -> Result<RunReport, LoadError> {
    let instances: Vec<LoadedInstance<F>> = cfg
        .instances
        .iter()
        .map(|name| load_instance(&field, name))
        .collect::<Result<_, _>>()?;

    let mut suites = cfg.suites.clone();
    suites.sort();
    suites.dedup();

    let jobs: Vec<(usize, usize)> = (0..instances.len())
        .flat_map(|i| (0..suites.len()).map(move |s| (i, s)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| LoadError::Validation {
            what: "worker pool".into(),
            detail: e.to_string(),
        })?;
    let runs: Vec<SuiteRun> = pool.install(|| {
        use rayon::prelude::*;
        jobs.par_iter()
            .map(|&(i, s)| {
                let started = Instant::now();
                let report = run_suite(suites[s], &instances[i]);
                SuiteRun {
                    instance: instances[i].name.clone(),
                    suite: suites[s].name(),
                    report,
                    wall_ms: started.elapsed().as_secs_f64() * 1e3,
                }
            })
            .collect()
    });

    let mut summary = Summary {
        pass: 0,
        fail: 0,
        skipped: 0,
        info: 0,
    };
    for run in &runs {
        let (p, f, s, i) = run.report.counts();
        summary.pass += p;
        summary.fail += f;
        summary.skipped += s;
        summary.info += i;
    }
    Ok(RunReport {
        field: field.name(),
        runs,
        summary,
    })
}

/// Dispatch one suite on one instance.
pub fn run_suite<F: Field>(suite: Suite, instance: &LoadedInstance<F>) -> Report {
    match &instance.kind {
        InstanceKind::Algebra { wbha, frobenius } => algebra_suite(suite, wbha, frobenius.as_ref()),
        InstanceKind::Projection { projection } => projection_suite(suite, projection),
        InstanceKind::Module { module } => module_suite(suite, module),
    }
}

fn skip_all(rep: &mut Report, id: &str, why: &str) {
    rep.skipped(id, why);
}

/// A derived construction that refuses to run is a skip when the antipode is
/// legitimately singular, and a detection (fail) otherwise: the construction
/// identities of a valid instance cannot fail.
fn derived_construction_outcome(rep: &mut Report, id: &str, e: CoreError) {
    match &e {
        CoreError::SingularAntipode { .. } => rep.skipped(id, &e.to_string()),
        other => rep.fail(id, other.witness(), Some(other.to_string())),
    }
}

fn algebra_suite<F: Field>(
    suite: Suite,
    d: &Arc<Wbha<F>>,
    frobenius: Option<&ydcheck_core::groupoid::FrobeniusSeparableAlgebra<F>>,
) -> Report {
    let mut rep = Report::new();
    match suite {
        Suite::Wyb => {
            rep.merge(check_wyb(&d.wyb));
        }
        Suite::Wbb => {
            rep.merge(check_wbb(d));
            rep.merge_prefixed("1.4(1):", weak_hopf_specialization_report(d));
        }
        Suite::Antipode => {
            rep.merge(check_antipode(d));
        }
        Suite::Derived => {
            rep.merge(derived_identity_suite(d));
        }
        Suite::Wo => {
            match WeakOperatorQuad::from_wyb(d.clone()) {
                Ok(w) => {
                    rep.merge_prefixed("tt':", check_wo(&w));
                    rep.merge_prefixed("tt':", derived_wo_suite(&w));
                    rep.merge_prefixed("dual:", check_wo(&w.dual()));
                }
                Err(e) => rep.fail("tt'", None, Some(e.to_string())),
            }
            if d.is_symmetric() {
                for carrier in corpus_carriers(d) {
                    match WeakOperatorQuad::flips(d.clone(), &carrier) {
                        Ok(w) => {
                            let tag = format!("flip[{}]:", carrier.label());
                            rep.merge_prefixed(&tag, check_wo(&w));
                            rep.merge_prefixed(&tag, derived_wo_suite(&w));
                        }
                        Err(e) => rep.fail("flip", None, Some(e.to_string())),
                    }
                }
            } else {
                skip_all(&mut rep, "flip-quadruples", "operator is not the flip");
            }
        }
        Suite::Yd => match corpus_modules(d) {
            Ok(modules) => {
                for (tag, module) in &modules {
                    rep.merge_prefixed(&format!("{tag}:"), yd_module_report(module));
                }
                for (tag_m, m) in &modules {
                    for (tag_n, n) in &modules {
                        rep.eq(
                            &format!("Prop2.16[{tag_m},{tag_n}]"),
                            &nabla_tensor(m, n),
                            &delta_tensor(m, n),
                        );
                    }
                }
            }
            Err(e) => derived_construction_outcome(&mut rep, "corpus", e),
        },
        Suite::Monoidal => match monoidal_report(d) {
            Ok(r) => rep.merge(r),
            Err(e) => derived_construction_outcome(&mut rep, "monoidal:build", e),
        },
        Suite::Projection => {
            let p = Projection::trivial(d.clone());
            rep.merge_prefixed("trivial:", check_projection(&p));
            match build_projected_module(&p) {
                Ok(pm) => {
                    rep.eq("trivial:q-idem", &(&pm.q * &pm.q), &pm.q);
                    match base_object(d) {
                        Ok(dl) => {
                            let same = pm.yd.carrier.dim() == dl.carrier.dim()
                                && pm.yd.action.same_entries(&dl.action)
                                && pm.yd.coaction.same_entries(&dl.coaction)
                                && pm.yd.wo.r.same_entries(&dl.wo.r)
                                && pm.yd.wo.s.same_entries(&dl.wo.s);
                            rep.iff("trivial:B_D=D_L", same, true);
                        }
                        Err(e) => rep.skipped("trivial:B_D=D_L", &e.to_string()),
                    }
                    match bd_wbha(&pm) {
                        Ok(bd) => {
                            rep.merge_prefixed("B_D-wbha:", check_wbb(&bd));
                            rep.merge_prefixed("B_D-wbha:", check_antipode(&bd));
                            let expected =
                                &(&pm.split.proj * &pm.projection.total.pi_l) * &pm.split.inj;
                            rep.eq("B_D-wbha:PiL-conjugated", &bd.pi_l, &expected);
                        }
                        Err(e) => rep.fail("B_D-wbha", e.witness(), Some(e.to_string())),
                    }
                }
                Err(e) => derived_construction_outcome(&mut rep, "trivial:build", e),
            }
        }
        Suite::Entwining => {
            let p = Projection::trivial(d.clone());
            match build_projected_module(&p) {
                Ok(pm) => rep.merge(entwining_report(&pm)),
                Err(e) => derived_construction_outcome(&mut rep, "entwining:build", e),
            }
        }
        Suite::Adjoint => {
            rep.merge(adjoint_report(d));
            if let Some(frob) = frobenius {
                match frobenius_shortcuts(frob, d) {
                    Ok(r) => rep.merge(r),
                    Err(e) => rep.fail("4.2(iii)", None, Some(e.to_string())),
                }
            }
        }
    }
    rep
}

fn corpus_carriers<F: Field>(d: &Arc<Wbha<F>>) -> Vec<ydcheck_core::SpaceObject> {
    let mut out = vec![d.carrier().clone()];
    if let Ok(modules) = corpus_modules(d) {
        out.extend(modules.into_iter().map(|(_, m)| m.carrier));
    }
    out
}

/// The canonical Yetter-Drinfeld modules derived from an algebra instance:
/// the base object, the module of the trivial projection, and the two
/// adjoint images.
fn corpus_modules<F: Field>(d: &Arc<Wbha<F>>) -> Result<Vec<(String, YdModule<F>)>, CoreError> {
    let mut out = Vec::new();
    let dl = base_object(d)?;
    out.push(("D_L".to_string(), dl));
    let pm = build_projected_module(&Projection::trivial(d.clone()))?;
    out.push(("B_D".to_string(), pm.yd));
    let adj = build_adjoint(d)?;
    let (ma, mc) = adjoint_yd_modules(&adj)?;
    out.push(("Om^a".to_string(), ma));
    out.push(("Om^c".to_string(), mc));
    Ok(out)
}

fn monoidal_report<F: Field>(d: &Arc<Wbha<F>>) -> Result<Report, CoreError> {
    let mut rep = Report::new();
    if d.carrier().dim() == 0 {
        rep.info("monoidal", "zero-dimensional instance; nothing to verify");
        return Ok(rep);
    }
    let modules = corpus_modules(d)?;
    let dl = &modules[0].1;
    rep.merge_prefixed("[D_L^4]:", verify_coherence(dl, dl, dl, dl)?);

    // Mixed sample, capped so outsized instances stay interactive.
    let (bd, oa, oc) = (&modules[1].1, &modules[2].1, &modules[3].1);
    let mixed_budget = dl.carrier.dim() * bd.carrier.dim() * oa.carrier.dim() * oc.carrier.dim();
    if mixed_budget <= 4096 && mixed_budget > 0 {
        rep.merge_prefixed("[mix]:", verify_coherence(dl, bd, oa, oc)?);
    } else {
        rep.skipped("[mix]:pentagon", "mixed sample too large or degenerate");
    }

    let units = unit_constraints(dl)?;
    rep.merge_prefixed("units[D_L]:", units.report.clone());

    // Functoriality of the morphism product on the unit constraints.
    let (l, li) = (&units.left, &units.left_inv);
    let (r, ri) = (&units.right, &units.right_inv);
    let composite = yd_morphism_product(li, ri)?.compose(&yd_morphism_product(l, r)?)?;
    let direct = yd_morphism_product(&li.compose(l)?, &ri.compose(r)?)?;
    rep.eq("Eq(140)", &composite.map, &direct.map);

    if d.is_symmetric() {
        let braid = ydcheck_core::yd::symmetric_case_braiding(dl, oa)?;
        rep.merge_prefixed("tau[D_L,Om^a]:", braid.report.clone());
        let wyb = yd_self_wyb(dl)?;
        rep.merge_prefixed("t[D_L,D_L]:", check_wyb(&wyb));
    } else {
        rep.skipped("tau", "base is not symmetric; no braiding is constructed");
    }
    Ok(rep)
}

fn adjoint_report<F: Field>(d: &Arc<Wbha<F>>) -> Report {
    let mut rep = Report::new();
    let adj = match build_adjoint(d) {
        Ok(adj) => adj,
        Err(e) => {
            rep.fail("build_adjoint", e.witness(), Some(e.to_string()));
            return rep;
        }
    };
    rep.eq("omega_a-idem", &(&adj.omega_a * &adj.omega_a), &adj.omega_a);
    rep.eq("omega_c-idem", &(&adj.omega_c * &adj.omega_c), &adj.omega_c);
    rep.merge(adjoint_braiding_suite(&adj));
    match adjoint_yd_modules(&adj) {
        Ok((ma, mc)) => {
            rep.merge_prefixed("Om^a:", ydcheck_core::yd::check_yd(&ma));
            rep.merge_prefixed("Om^c:", ydcheck_core::yd::check_yd(&mc));
        }
        Err(e) => derived_construction_outcome(&mut rep, "Om^x-modules", e),
    }
    match example_shortcuts(d) {
        Ok(r) => rep.merge(r),
        Err(CoreError::PredicateNotSatisfied(why)) => rep.skipped("4.2(ii)", &why),
        Err(e) => rep.fail("4.2(ii)", None, Some(e.to_string())),
    }
    rep
}

fn entwining_report<F: Field>(pm: &ProjectedModule<F>) -> Report {
    let mut rep = Report::new();
    match entwining_from_projection(pm) {
        Ok((s_struct, r_struct)) => {
            rep.merge_prefixed("s:", check_entwining(&s_struct));
            rep.merge_prefixed("r:", check_entwining(&r_struct));
            rep.eq(
                "s∘s'=Delta_RR",
                &(&pm.yd.wo.s * &pm.yd.wo.s_prime),
                &s_struct.delta_rr,
            );
        }
        Err(e) => rep.fail("entwining", None, Some(e.to_string())),
    }
    rep
}

fn projection_suite<F: Field>(suite: Suite, p: &Projection<F>) -> Report {
    let mut rep = Report::new();
    match suite {
        Suite::Projection => {
            rep.merge(check_projection(p));
            match build_projected_module(p) {
                Ok(pm) => {
                    rep.eq("q-idem", &(&pm.q * &pm.q), &pm.q);
                    rep.merge_prefixed("B_D:", yd_module_report(&pm.yd));
                }
                Err(e) => derived_construction_outcome(&mut rep, "build", e),
            }
        }
        Suite::Entwining => match build_projected_module(p) {
            Ok(pm) => rep.merge(entwining_report(&pm)),
            Err(e) => derived_construction_outcome(&mut rep, "build", e),
        },
        Suite::Yd => match build_projected_module(p) {
            Ok(pm) => rep.merge_prefixed("B_D:", yd_module_report(&pm.yd)),
            Err(e) => derived_construction_outcome(&mut rep, "build", e),
        },
        Suite::Adjoint => match projected_wbha(p) {
            Ok((pm, bd)) => {
                rep.merge(adjoint_report(&bd));
                match bd_shortcuts(&pm, &bd) {
                    Ok(r) => rep.merge(r),
                    Err(e) => rep.fail("4.2(iv)", None, Some(e.to_string())),
                }
            }
            Err(e) => rep.fail("B_D-wbha", e.witness(), Some(e.to_string())),
        },
        // The remaining suites act on the induced weak braided Hopf
        // structure of B_D, which is the interesting braided instance.
        _ => match projected_wbha(p) {
            Ok((_, bd)) => rep.merge(algebra_suite(suite, &bd, None)),
            Err(e) => rep.fail("B_D-wbha", e.witness(), Some(e.to_string())),
        },
    }
    rep
}

fn projected_wbha<F: Field>(
    p: &Projection<F>,
) -> Result<(ProjectedModule<F>, Arc<Wbha<F>>), CoreError> {
    let pm = build_projected_module(p)?;
    let bd = bd_wbha(&pm)?;
    Ok((pm, Arc::new(bd)))
}

fn module_suite<F: Field>(suite: Suite, m: &YdModule<F>) -> Report {
    let mut rep = Report::new();
    match suite {
        Suite::Yd => rep.merge(yd_module_report(m)),
        Suite::Wo => {
            rep.merge(check_wo(&m.wo));
            rep.merge(derived_wo_suite(&m.wo));
        }
        Suite::Monoidal => match verify_coherence(m, m, m, m) {
            Ok(r) => rep.merge(r),
            Err(e) => derived_construction_outcome(&mut rep, "coherence", e),
        },
        _ => rep.merge(algebra_suite(suite, &m.base, None)),
    }
    rep
}
