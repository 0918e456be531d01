//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`) and enforcing its runtime
//! budget. Everything runs over exact rationals.

use std::sync::Arc;
use std::time::{Duration, Instant};

use ydcheck_cli::instance::{InstanceKind, LoadedInstance};
use ydcheck_cli::run::{run_suite, run_suites, FieldChoice, ReportFormat, Suite, SuiteConfig};
use ydcheck_core::adjoint::{adjoint_braiding_suite, adjoint_yd_modules, build_adjoint};
use ydcheck_core::field::{Field, Rationals};
use ydcheck_core::groupoid::{
    exact_factorization_operator, groupoid_algebra, ExactFactorization, Groupoid,
};
use ydcheck_core::projection::{
    bd_wbha, build_projected_module, check_entwining, entwining_from_projection,
    groupoid_product_projection, Projection,
};
use ydcheck_core::wbha::{check_antipode, check_wbb, derived_identity_suite, Wbha};
use ydcheck_core::weak_op::{check_wo, derived_wo_suite, WeakOperatorQuad};
use ydcheck_core::wyb::{
    check_wyb, wyb_algebra_idempotent, wyb_coalgebra_idempotent, WeakYangBaxter,
};
use ydcheck_core::yd::{
    assoc_constraint, base_object, check_yd, delta_tensor, nabla_tensor, symmetric_case_braiding,
    unit_constraints, verify_coherence, yd_module_report, yd_morphism_product, YdModule,
};
use ydcheck_core::{Morphism, Report, Status};

fn q() -> Rationals {
    Rationals
}

fn rg2() -> Arc<Wbha<Rationals>> {
    Arc::new(groupoid_algebra(q(), &Groupoid::full(2)).unwrap())
}

fn z2() -> Arc<Wbha<Rationals>> {
    Arc::new(groupoid_algebra(q(), &Groupoid::cyclic(2)).unwrap())
}

fn criterion(n: usize, name: &str, budget: Duration, body: impl FnOnce() -> Result<(), String>) {
    let started = Instant::now();
    let outcome = body();
    let elapsed = started.elapsed();
    match &outcome {
        Ok(()) => println!("criterion {n} ({name}): PASS in {elapsed:.2?}"),
        Err(e) => println!("criterion {n} ({name}): FAIL - {e}"),
    }
    if let Err(e) = outcome {
        panic!("criterion {n} failed: {e}");
    }
    assert!(
        elapsed <= budget,
        "criterion {n} exceeded its runtime budget: {elapsed:.2?} > {budget:?}"
    );
}

fn all_pass(what: &str, rep: &Report) -> Result<(), String> {
    match rep.first_failure() {
        None => Ok(()),
        Some(line) => Err(format!("{what}: {line:?}")),
    }
}

#[test]
fn criterion_1_groupoid_weak_hopf() {
    criterion(
        1,
        "groupoid weak Hopf algebra",
        Duration::from_secs(5),
        || {
            let d = rg2();
            all_pass("check_wbb", &check_wbb(&d))?;
            all_pass("check_antipode", &check_antipode(&d))?;
            all_pass("derived_identity_suite", &derived_identity_suite(&d))?;

            // Basis order E11, E12, E21, E22. Π^L(E_ij) = E_ii, Π^R(E_ij) = E_jj,
            // λ(E_ij) = E_ji, entrywise.
            let dd = d.carrier().clone();
            let expect = |entries: &[(usize, usize)]| {
                Morphism::from_triplets(
                    q(),
                    dd.clone(),
                    dd.clone(),
                    entries.iter().map(|&(r, c)| (r, c, q().one())),
                )
                .unwrap()
            };
            let pi_l_expected = expect(&[(0, 0), (0, 1), (3, 2), (3, 3)]);
            let pi_r_expected = expect(&[(0, 0), (3, 1), (0, 2), (3, 3)]);
            let lambda_expected = expect(&[(0, 0), (2, 1), (1, 2), (3, 3)]);
            if d.pi_l != pi_l_expected {
                return Err("Π^L does not match E_ij -> E_ii".into());
            }
            if d.pi_r != pi_r_expected {
                return Err("Π^R does not match E_ij -> E_jj".into());
            }
            if d.antipode != lambda_expected {
                return Err("λ does not match E_ij -> E_ji".into());
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_2_weak_yang_baxter_operators() {
    criterion(
        2,
        "weak Yang-Baxter operators",
        Duration::from_secs(5),
        || {
            let d = rg2();
            let z = z2();

            all_pass("flip on RG", &check_wyb(&d.wyb))?;

            let ef = ExactFactorization::identities_and_all(Groupoid::full(2))
                .map_err(|e| e.to_string())?;
            let omega = exact_factorization_operator(q(), &ef).map_err(|e| e.to_string())?;
            all_pass("exact factorization Ω", &check_wyb(&omega))?;

            for (what, wyb) in [
                ("Ω = η⊗(μ∘c) on Z/2", wyb_algebra_idempotent(&z.algebra)),
                (
                    "Ω' = ε⊗(c∘δ) on Z/2",
                    wyb_coalgebra_idempotent(&z.coalgebra),
                ),
                ("Ω = η⊗(μ∘c) on RG", wyb_algebra_idempotent(&d.algebra)),
                ("Ω' = ε⊗(c∘δ) on RG", wyb_coalgebra_idempotent(&d.coalgebra)),
            ] {
                let wyb = wyb.map_err(|e| format!("{what}: {e}"))?;
                all_pass(what, &check_wyb(&wyb))?;
                // The operator and its partner are interchangeable.
                all_pass(&format!("{what}, swapped"), &check_wyb(&wyb.swapped()))?;
            }
            all_pass("flip on RG, swapped", &check_wyb(&d.wyb.swapped()))?;
            all_pass(
                "exact factorization Ω, swapped",
                &check_wyb(&omega.swapped()),
            )?;
            Ok(())
        },
    );
}

#[test]
fn criterion_3_weak_operator_suite() {
    criterion(3, "weak operator suite", Duration::from_secs(30), || {
        let d = rg2();
        let w = WeakOperatorQuad::from_wyb(d.clone()).map_err(|e| e.to_string())?;
        all_pass("(t,t',t,t') axioms", &check_wo(&w))?;
        let derived = derived_wo_suite(&w);
        all_pass("(t,t',t,t') derived", &derived)?;
        if derived.lines.iter().any(|l| l.status == Status::Skipped) {
            return Err("λ is an involution, yet rows were skipped".into());
        }
        for module in corpus_modules(&d)? {
            let flips =
                WeakOperatorQuad::flips(d.clone(), &module.carrier).map_err(|e| e.to_string())?;
            all_pass(
                &format!("flip quadruple on {}", module.carrier),
                &check_wo(&flips),
            )?;
            all_pass(
                &format!("flip derived on {}", module.carrier),
                &derived_wo_suite(&flips),
            )?;
        }
        Ok(())
    });
}

/// D_L, B_D from the trivial and the product-groupoid projections, and the
/// two adjoint images, all over the full 2-object groupoid algebra.
fn corpus_modules(d: &Arc<Wbha<Rationals>>) -> Result<Vec<YdModule<Rationals>>, String> {
    let mut out = Vec::new();
    out.push(base_object(d).map_err(|e| e.to_string())?);
    let trivial =
        build_projected_module(&Projection::trivial(d.clone())).map_err(|e| e.to_string())?;
    out.push(trivial.yd);
    let product = groupoid_product_projection(q(), &Groupoid::full(2), &Groupoid::cyclic(2))
        .map_err(|e| e.to_string())?;
    let product = build_projected_module(&product).map_err(|e| e.to_string())?;
    out.push(product.yd);
    let adj = build_adjoint(d).map_err(|e| e.to_string())?;
    let (ma, mc) = adjoint_yd_modules(&adj).map_err(|e| e.to_string())?;
    out.push(ma);
    out.push(mc);
    Ok(out)
}

#[test]
fn criterion_4_yd_core() {
    criterion(4, "Yetter-Drinfeld core", Duration::from_secs(60), || {
        let d = rg2();
        let modules = corpus_modules(&d)?;
        for m in &modules {
            all_pass(&format!("yd conditions on {}", m.carrier), &check_yd(m))?;
            all_pass(
                &format!("full report on {}", m.carrier),
                &yd_module_report(m),
            )?;
        }

        // The Prop 2.8 equivalence must hold as truth values on corrupted
        // variants as well: disturb each module's coaction and action.
        for m in &modules {
            if m.carrier.dim() == 0 {
                continue;
            }
            let mut coaction = m.coaction.clone();
            let last_row = coaction.target().dim() - 1;
            coaction.set_entry(last_row, 0, q().from_int(1));
            let corrupted = YdModule::new(
                m.base.clone(),
                m.carrier.clone(),
                m.action.clone(),
                coaction,
                m.wo.clone(),
            )
            .map_err(|e| e.to_string())?;
            let rep = check_yd(&corrupted);
            if rep.line("yd-equiv").unwrap().status != Status::Pass {
                return Err(format!(
                    "Prop 2.8 biconditional broken on corrupted {}",
                    m.carrier
                ));
            }
        }

        // ∇_{M⊗N} = Δ_{M⊗N} entrywise for every ordered corpus pair.
        for m in &modules {
            for n in &modules {
                if nabla_tensor(m, n) != delta_tensor(m, n) {
                    return Err(format!("∇ and Δ differ on ({}, {})", m.carrier, n.carrier));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_monoidal_coherence() {
    criterion(5, "monoidal coherence", Duration::from_secs(60), || {
        let d = rg2();
        let modules = corpus_modules(&d)?;
        let dl = &modules[0];
        let (oa, oc) = (&modules[3], &modules[4]);

        // Pentagon on a quadruple and triangle on a triple, homogeneous and
        // mixed.
        all_pass(
            "coherence on D_L^4",
            &verify_coherence(dl, dl, dl, dl).map_err(|e| e.to_string())?,
        )?;
        all_pass(
            "coherence on (D_L, Om^a, Om^c, D_L)",
            &verify_coherence(dl, oa, oc, dl).map_err(|e| e.to_string())?,
        )?;

        // Unit and associativity constraints compose to identities exactly.
        for m in [dl, oa, oc] {
            let units = unit_constraints(m).map_err(|e| e.to_string())?;
            all_pass(&format!("unit constraints on {}", m.carrier), &units.report)?;
        }
        let assoc = assoc_constraint(dl, oa, oc).map_err(|e| e.to_string())?;
        all_pass("associativity constraint", &assoc.report)?;

        // Functoriality of the morphism product on corpus morphisms.
        let units = unit_constraints(dl).map_err(|e| e.to_string())?;
        let (l, li) = (&units.left, &units.left_inv);
        let (r, ri) = (&units.right, &units.right_inv);
        let lhs = yd_morphism_product(li, ri)
            .and_then(|a| yd_morphism_product(l, r).and_then(|b| a.compose(&b)))
            .map_err(|e| e.to_string())?;
        let rhs = li
            .compose(l)
            .and_then(|a| ri.compose(r).map(|b| (a, b)))
            .and_then(|(a, b)| yd_morphism_product(&a, &b))
            .map_err(|e| e.to_string())?;
        if lhs.map != rhs.map {
            return Err("Eq(140) functoriality fails".into());
        }

        // Naturality spot-check of the symmetric-case braiding:
        // τ_{M',N'} ∘ (γ×φ) = (φ×γ) ∘ τ_{M,N} with γ the left unit
        // constraint of D_L and φ the identity.
        let gamma = &units.left; // (D_L×D_L) → D_L
        let phi = ydcheck_core::yd::YdMorphism::identity(dl);
        let tau_source = symmetric_case_braiding(&gamma.from, dl).map_err(|e| e.to_string())?;
        let tau_target = symmetric_case_braiding(dl, dl).map_err(|e| e.to_string())?;
        all_pass("braiding inverses (source pair)", &tau_source.report)?;
        all_pass("braiding inverses (target pair)", &tau_target.report)?;
        let nat_lhs = tau_target
            .tau
            .compose(&yd_morphism_product(gamma, &phi).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let nat_rhs = yd_morphism_product(&phi, gamma)
            .map_err(|e| e.to_string())?
            .compose(&tau_source.tau)
            .map_err(|e| e.to_string())?;
        if nat_lhs.map != nat_rhs.map {
            return Err("braiding naturality fails on the unit constraint".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_6_projections_and_entwining() {
    criterion(
        6,
        "projections and entwining",
        Duration::from_secs(30),
        || {
            let d = rg2();
            let pm = build_projected_module(&Projection::trivial(d.clone()))
                .map_err(|e| e.to_string())?;
            if (&pm.q * &pm.q) != pm.q {
                return Err("q is not idempotent".into());
            }
            let dl = base_object(&d).map_err(|e| e.to_string())?;
            let same = pm.yd.carrier.dim() == dl.carrier.dim()
                && pm.yd.action.same_entries(&dl.action)
                && pm.yd.coaction.same_entries(&dl.coaction)
                && pm.yd.wo.r.same_entries(&dl.wo.r)
                && pm.yd.wo.r_prime.same_entries(&dl.wo.r_prime)
                && pm.yd.wo.s.same_entries(&dl.wo.s)
                && pm.yd.wo.s_prime.same_entries(&dl.wo.s_prime);
            if !same {
                return Err("trivial projection does not reproduce the base object".into());
            }

            for pm in [
                pm,
                build_projected_module(
                    &groupoid_product_projection(q(), &Groupoid::full(2), &Groupoid::cyclic(2))
                        .map_err(|e| e.to_string())?,
                )
                .map_err(|e| e.to_string())?,
            ] {
                let (s_struct, r_struct) =
                    entwining_from_projection(&pm).map_err(|e| e.to_string())?;
                all_pass("s-pair entwining", &check_entwining(&s_struct))?;
                all_pass("r-pair entwining", &check_entwining(&r_struct))?;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_adjoint_suite() {
    criterion(7, "adjoint suite", Duration::from_secs(30), || {
        let d = rg2();
        // build_adjoint verifies idempotence and both closed forms.
        let adj = build_adjoint(&d).map_err(|e| e.to_string())?;
        all_pass("braiding suite on RG", &adjoint_braiding_suite(&adj))?;

        // One genuinely braided instance.
        let pm =
            build_projected_module(&Projection::trivial(d.clone())).map_err(|e| e.to_string())?;
        let bd = Arc::new(bd_wbha(&pm).map_err(|e| e.to_string())?);
        if bd.is_symmetric() {
            return Err("B_D instance is unexpectedly symmetric".into());
        }
        let adj_bd = build_adjoint(&bd).map_err(|e| e.to_string())?;
        all_pass(
            "braiding suite on braided B_D",
            &adjoint_braiding_suite(&adj_bd),
        )?;

        // Ω^a(RG) has one dimension per loop arrow; ω^c = id.
        let loops = 2;
        if adj.split_a.image.dim() != loops {
            return Err(format!(
                "Ω^a carrier dimension {} differs from the loop count {loops}",
                adj.split_a.image.dim()
            ));
        }
        if !adj.omega_c.is_identity() {
            return Err("ω^c of the groupoid algebra is not the identity".into());
        }

        // Hopf degeneration on the group algebra.
        let z = z2();
        let adj_z = build_adjoint(&z).map_err(|e| e.to_string())?;
        if !adj_z.omega_a.is_identity() || !adj_z.omega_c.is_identity() {
            return Err("Hopf degeneration ω^a = ω^c = id fails on Z/2".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_8_mutation_sensitivity() {
    criterion(8, "mutation sensitivity", Duration::from_secs(60), || {
        let d = rg2();
        // Over a flip base some suites are λ-independent (the quadruple
        // idempotents are identities), so corruptions are also tried on the
        // braided instance, where every structural morphism matters.
        let pm =
            build_projected_module(&Projection::trivial(d.clone())).map_err(|e| e.to_string())?;
        let bd = Arc::new(bd_wbha(&pm).map_err(|e| e.to_string())?);

        // Rebuild a base with one structural morphism corrupted in one
        // entry. Candidate entries are tried in order until one produces a
        // failing row: the criterion asks for existence.
        let corrupt_base = |base: &Arc<Wbha<Rationals>>,
                            which: &str,
                            row: usize,
                            col: usize|
         -> Arc<Wbha<Rationals>> {
            let bump = q().from_int(2);
            let mut algebra = base.algebra.clone();
            let mut coalgebra = base.coalgebra.clone();
            let mut wyb = base.wyb.clone();
            let mut antipode = base.antipode.clone();
            match which {
                "mu" => algebra.mult.set_entry(row, col, bump),
                "delta" => coalgebra.comult.set_entry(row, col, bump),
                "lambda" => antipode.set_entry(row, col, bump),
                "t" => {
                    let mut t = wyb.t.clone();
                    t.set_entry(row, col, bump);
                    wyb = WeakYangBaxter::new(
                        wyb.carrier.clone(),
                        t,
                        wyb.t_prime.clone(),
                        wyb.nabla.clone(),
                    )
                    .unwrap();
                }
                other => panic!("unknown morphism {other}"),
            }
            Arc::new(Wbha::new(algebra, coalgebra, wyb, antipode).unwrap())
        };

        let candidates = [(0usize, 0usize), (0, 1), (1, 0), (2, 3)];
        let suite_matrix: &[(Suite, &[&str])] = &[
            (Suite::Wyb, &["t"]),
            (Suite::Wbb, &["mu", "delta", "t"]),
            (Suite::Antipode, &["mu", "delta", "lambda", "t"]),
            (Suite::Derived, &["mu", "delta", "lambda", "t"]),
            (Suite::Wo, &["mu", "delta", "lambda", "t"]),
            (Suite::Yd, &["mu", "delta", "lambda", "t"]),
            (Suite::Monoidal, &["mu", "delta", "lambda", "t"]),
            (Suite::Projection, &["mu", "delta", "lambda", "t"]),
            (Suite::Entwining, &["mu", "delta", "lambda", "t"]),
            (Suite::Adjoint, &["mu", "delta", "lambda", "t"]),
        ];
        for (suite, morphisms) in suite_matrix {
            for which in *morphisms {
                let mut detected = false;
                'search: for base in [&d, &bd] {
                    for &(row, col) in &candidates {
                        if row >= base.carrier().dim() || col >= base.carrier().dim() {
                            continue;
                        }
                        let corrupted = LoadedInstance {
                            name: format!("corrupt-{which}"),
                            kind: InstanceKind::Algebra {
                                wbha: corrupt_base(base, which, row, col),
                                frobenius: None,
                            },
                        };
                        let rep = run_suite(*suite, &corrupted);
                        if rep
                            .failures()
                            .any(|l| l.witness.is_some() || l.note.is_some())
                        {
                            detected = true;
                            break 'search;
                        }
                    }
                }
                if !detected {
                    return Err(format!(
                        "suite {} never fails under single-entry corruption of {which}",
                        suite.name()
                    ));
                }
            }
        }

        // Module-level morphisms: r, s, φ, ϱ through the wo and yd suites.
        let dl = base_object(&d).map_err(|e| e.to_string())?;
        let corrupt_module = |which: &str| -> LoadedInstance<Rationals> {
            let bump = q().from_int(2);
            let mut action = dl.action.clone();
            let mut coaction = dl.coaction.clone();
            let mut r = dl.wo.r.clone();
            let mut s = dl.wo.s.clone();
            match which {
                "phi" => action.set_entry(0, 0, bump),
                "rho" => coaction.set_entry(coaction.target().dim() - 1, 0, bump),
                "r" => r.set_entry(0, 0, bump),
                "s" => s.set_entry(0, 0, bump),
                other => panic!("unknown morphism {other}"),
            }
            let wo = WeakOperatorQuad::new(
                d.clone(),
                dl.carrier.clone(),
                r,
                dl.wo.r_prime.clone(),
                s,
                dl.wo.s_prime.clone(),
            )
            .unwrap();
            LoadedInstance {
                name: format!("corrupt-{which}"),
                kind: InstanceKind::Module {
                    module: YdModule::new(d.clone(), dl.carrier.clone(), action, coaction, wo)
                        .unwrap(),
                },
            }
        };
        for (suite, which) in [
            (Suite::Wo, "r"),
            (Suite::Wo, "s"),
            (Suite::Yd, "phi"),
            (Suite::Yd, "rho"),
            (Suite::Yd, "r"),
            (Suite::Yd, "s"),
        ] {
            let rep = run_suite(suite, &corrupt_module(which));
            if !rep.failures().any(|l| l.witness.is_some()) {
                return Err(format!(
                    "suite {} missed the corruption of {which}",
                    suite.name()
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_9_report_determinism() {
    criterion(9, "report determinism", Duration::from_secs(120), || {
        let config = |jobs: usize| SuiteConfig {
            field: FieldChoice::Rationals,
            instances: vec![
                "full_groupoid_2".into(),
                "z2_group".into(),
                "trivial_groupoid".into(),
                "proj_product_fg2_z2".into(),
            ],
            suites: Suite::ALL.to_vec(),
            parallelism: jobs,
            report_format: ReportFormat::Json,
        };
        let serial = run_suites(&config(1)).map_err(|e| e.to_string())?;
        let parallel = run_suites(&config(4)).map_err(|e| e.to_string())?;
        if serial.to_json() != parallel.to_json() {
            return Err("JSON reports differ across parallelism settings".into());
        }
        if serial.summary.fail != 0 {
            return Err(format!(
                "{} failures on the clean corpus",
                serial.summary.fail
            ));
        }
        Ok(())
    });
}
