//! Projections of weak braided Hopf algebras, the induced Yetter-Drinfeld
//! module on the split image of `q = id ∧ (f∘λ∘g)`, morphisms between
//! projections, and invertible weak entwining structures.

use std::sync::Arc;

use crate::algebra::{convolution, expect_boundary, Algebra, Coalgebra};
use crate::error::CoreError;
use crate::field::Field;
use crate::groupoid::{groupoid_algebra, Groupoid};
use crate::morphism::Morphism;
use crate::report::Report;
use crate::split::{split_idempotent, SplitIdempotent};
use crate::wbha::{check_antipode, check_wbb, wbha_morphism_report, Wbha};
use crate::weak_op::WeakOperatorQuad;
use crate::wyb::WeakYangBaxter;
use crate::yd::{nabla_tensor, yd_module_report, YdModule, YdMorphism};

/// A projection `(B, f, g)` for `D`: a split pair of weak-braided-Hopf
/// morphisms whose composite `f∘g` commutes with the operator of `B` on
/// both sides.
#[derive(Clone, Debug)]
pub struct Projection<F: Field> {
    pub base: Arc<Wbha<F>>,
    pub total: Arc<Wbha<F>>,
    pub f: Morphism<F>,
    pub g: Morphism<F>,
}

impl<F: Field> Projection<F> {
    pub fn new(
        base: Arc<Wbha<F>>,
        total: Arc<Wbha<F>>,
        f: Morphism<F>,
        g: Morphism<F>,
    ) -> Result<Self, CoreError> {
        expect_boundary("projection f", &f, base.carrier(), total.carrier())?;
        expect_boundary("projection g", &g, total.carrier(), base.carrier())?;
        Ok(Projection { base, total, f, g })
    }

    /// The projection `(D, id, id)`, whose induced module is the base
    /// object.
    pub fn trivial(base: Arc<Wbha<F>>) -> Self {
        let id = base.id();
        Projection {
            total: base.clone(),
            base,
            f: id.clone(),
            g: id,
        }
    }
}

/// All defining conditions of a projection, one line each: both structure
/// maps are morphisms of weak braided Hopf algebras, `g∘f = id`, and the
/// operator commutations (i)/(ii) for both operators, with the equivalence
/// claimed for the primed pair recorded as a biconditional.
pub fn check_projection<F: Field>(p: &Projection<F>) -> Report {
    let mut rep = Report::new();
    rep.merge_prefixed("f:", wbha_morphism_report(&p.f, &p.base, &p.total));
    rep.merge_prefixed("g:", wbha_morphism_report(&p.g, &p.total, &p.base));
    rep.eq("g∘f=id", &(&p.g * &p.f), &p.base.id());

    let fg = &p.f * &p.g;
    let id_b = p.total.id();
    let t = p.total.t();
    let tp = p.total.t_prime();
    let i_holds = rep.eq("(i)", &(&id_b.tensor(&fg) * t), &(t * &fg.tensor(&id_b)));
    let ii_holds = rep.eq("(ii)", &(&fg.tensor(&id_b) * t), &(t * &id_b.tensor(&fg)));
    let i_prime = (&id_b.tensor(&fg) * tp) == (tp * &fg.tensor(&id_b));
    let ii_prime = (&fg.tensor(&id_b) * tp) == (tp * &id_b.tensor(&fg));
    rep.iff(
        "(i)+(ii) iff primed",
        i_holds && ii_holds,
        i_prime && ii_prime,
    );
    rep
}

/// The Yetter-Drinfeld module induced by a projection, together with the
/// idempotent `q`, its splitting and the algebra/coalgebra structures that
/// live on the image.
#[derive(Clone, Debug)]
pub struct ProjectedModule<F: Field> {
    pub projection: Projection<F>,
    pub q: Morphism<F>,
    pub split: SplitIdempotent<F>,
    pub algebra: Algebra<F>,
    pub coalgebra: Coalgebra<F>,
    pub yd: YdModule<F>,
}

/// Build the module on `B_D = Im(q)`, `q = id_B ∧ (f∘λ_D∘g)`. Every
/// construction identity is verified; the first failure is fatal and names
/// the identity.
pub fn build_projected_module<F: Field>(
    p: &Projection<F>,
) -> Result<ProjectedModule<F>, CoreError> {
    let check = check_projection(p);
    if let Some(line) = check.first_failure() {
        return Err(CoreError::ProjectionInvalid {
            what: line.id.clone(),
            witness: line.witness.clone(),
        });
    }
    let b = &p.total;
    let d = &p.base;

    let fld = b.field().clone();
    let f_lam_g = &(&p.f * &d.antipode) * &p.g;
    let q = convolution(&b.id(), &f_lam_g, &b.algebra, &b.coalgebra)?;
    if let Some((row, col, lhs, rhs)) = (&q * &q).first_diff(&q) {
        return Err(CoreError::ProjectionInvalid {
            what: "q idempotent".into(),
            witness: Some(crate::report::Witness {
                row,
                col,
                lhs: fld.render(&lhs),
                rhs: fld.render(&rhs),
            }),
        });
    }
    let split = split_idempotent(&q, &format!("{}_D", b.carrier().label()))?;
    let (pr, inj) = (&split.proj, &split.inj);

    let mut rep = Report::new();
    rep.eq("ε_B∘q=ε_B", &(b.counit() * &q), b.counit());
    rep.eq("η_B=q∘η_B", b.unit(), &(&q * b.unit()));

    let algebra = Algebra::new(
        split.image.clone(),
        pr * b.unit(),
        &(pr * b.mult()) * &inj.tensor(inj),
    )?;
    let coalgebra = Coalgebra::new(
        split.image.clone(),
        b.counit() * inj,
        &pr.tensor(pr) * &(b.comult() * inj),
    )?;

    let action = &(pr * b.mult()) * &p.f.tensor(inj);
    let coaction = &p.g.tensor(pr) * &(b.comult() * inj);

    let r = &(&p.g.tensor(pr) * b.t()) * &inj.tensor(&p.f);
    let r_prime = &(&pr.tensor(&p.g) * b.t_prime()) * &p.f.tensor(inj);
    let s = &(&pr.tensor(&p.g) * b.t()) * &p.f.tensor(inj);
    let s_prime = &(&p.g.tensor(pr) * b.t_prime()) * &inj.tensor(&p.f);
    let quad = WeakOperatorQuad::new(d.clone(), split.image.clone(), r, r_prime, s, s_prime)?;
    let yd = YdModule::new(d.clone(), split.image.clone(), action, coaction, quad)?;

    rep.merge(yd_module_report(&yd));
    if let Some(line) = rep.first_failure() {
        return Err(CoreError::ProjectionInvalid {
            what: line.id.clone(),
            witness: line.witness.clone(),
        });
    }

    Ok(ProjectedModule {
        projection: p.clone(),
        q,
        split,
        algebra,
        coalgebra,
        yd,
    })
}

/// A morphism of projections `h : (B, f, g) → (B', f', g')` induces the
/// Yetter-Drinfeld morphism `p'∘h∘i` between the projected modules.
pub fn induced_projection_morphism<F: Field>(
    h: &Morphism<F>,
    from: &ProjectedModule<F>,
    to: &ProjectedModule<F>,
) -> Result<YdMorphism<F>, CoreError> {
    let morphism_check = wbha_morphism_report(h, &from.projection.total, &to.projection.total);
    if let Some(line) = morphism_check.first_failure() {
        return Err(CoreError::NotProjectionMorphism(format!(
            "h is not a WBHA morphism: {}",
            line.id
        )));
    }
    if (h * &from.projection.f) != to.projection.f {
        return Err(CoreError::NotProjectionMorphism("h∘f = f' fails".into()));
    }
    if (&to.projection.g * h) != from.projection.g {
        return Err(CoreError::NotProjectionMorphism("g'∘h = g fails".into()));
    }
    let map = &(&to.split.proj * h) * &from.split.inj;
    YdMorphism::new(&from.yd, &to.yd, map)
}

/// The object `B_D` as a weak braided Hopf algebra: the conjugated operator
/// of the total algebra gives a crossing which, together with the tensor
/// idempotent of the induced module, completes to a weak Yang-Baxter
/// operator. For every non-trivial projection this yields an instance whose
/// operator is not a flip.
pub fn bd_wbha<F: Field>(pm: &ProjectedModule<F>) -> Result<Wbha<F>, CoreError> {
    let b = &pm.projection.total;
    let (p, i) = (&pm.split.proj, &pm.split.inj);
    let id_bd = Morphism::identity(b.field().clone(), &pm.split.image);

    let crossing = &p.tensor(p) * &(b.t() * &i.tensor(i));
    let t = &(&pm.yd.action.tensor(&id_bd) * &pm.projection.base.id().tensor(&crossing))
        * &pm.yd.coaction.tensor(&id_bd);
    let nabla = nabla_tensor(&pm.yd, &pm.yd);
    let wyb = WeakYangBaxter::from_t_and_nabla(pm.split.image.clone(), t, nabla)?;

    let f_g = &pm.projection.f * &pm.projection.g;
    let antipode = &(p * b.mult()) * &(&f_g.tensor(&b.antipode) * &(b.comult() * i));

    let wbha = Wbha::new(pm.algebra.clone(), pm.coalgebra.clone(), wyb, antipode)?;
    let mut rep = check_wbb(&wbha);
    rep.merge(check_antipode(&wbha));
    if let Some(line) = rep.first_failure() {
        return Err(CoreError::ProjectionInvalid {
            what: format!("B_D structure: {}", line.id),
            witness: line.witness.clone(),
        });
    }
    Ok(wbha)
}

/// A weak entwining structure: an algebra, a coalgebra and a pair of
/// crossing maps, with the canonical idempotents cached.
#[derive(Clone, Debug)]
pub struct EntwiningStructure<F: Field> {
    pub algebra: Algebra<F>,
    pub coalgebra: Coalgebra<F>,
    /// `Ψ_RR : C⊗A → A⊗C`
    pub psi_rr: Morphism<F>,
    /// `Ψ_LL : A⊗C → C⊗A`
    pub psi_ll: Morphism<F>,
    pub e_rr: Morphism<F>,
    pub e_ll: Morphism<F>,
    pub delta_rr: Morphism<F>,
    pub nabla_rr: Morphism<F>,
    pub delta_ll: Morphism<F>,
    pub nabla_ll: Morphism<F>,
}

impl<F: Field> EntwiningStructure<F> {
    pub fn new(
        algebra: Algebra<F>,
        coalgebra: Coalgebra<F>,
        psi_rr: Morphism<F>,
        psi_ll: Morphism<F>,
    ) -> Result<Self, CoreError> {
        let a = &algebra.carrier;
        let c = &coalgebra.carrier;
        expect_boundary("Ψ_RR", &psi_rr, &c.tensor(a), &a.tensor(c))?;
        expect_boundary("Ψ_LL", &psi_ll, &a.tensor(c), &c.tensor(a))?;
        let id_a = algebra.id();
        let id_c = coalgebra.id();
        let e_rr = &(&id_a.tensor(&coalgebra.counit) * &psi_rr) * &id_c.tensor(&algebra.unit);
        let e_ll = &(&coalgebra.counit.tensor(&id_a) * &psi_ll) * &algebra.unit.tensor(&id_c);
        let delta_rr = &(&algebra.mult.tensor(&id_c) * &id_a.tensor(&psi_rr))
            * &id_a.tensor(&id_c).tensor(&algebra.unit);
        let nabla_rr = &(&id_c.tensor(&id_a).tensor(&coalgebra.counit) * &id_c.tensor(&psi_rr))
            * &coalgebra.comult.tensor(&id_a);
        let delta_ll = &(&id_c.tensor(&algebra.mult) * &psi_ll.tensor(&id_a))
            * &algebra.unit.tensor(&id_c).tensor(&id_a);
        let nabla_ll = &(&coalgebra.counit.tensor(&id_a).tensor(&id_c) * &psi_ll.tensor(&id_c))
            * &id_a.tensor(&coalgebra.comult);
        Ok(EntwiningStructure {
            algebra,
            coalgebra,
            psi_rr,
            psi_ll,
            e_rr,
            e_ll,
            delta_rr,
            nabla_rr,
            delta_ll,
            nabla_ll,
        })
    }
}

/// The right-right axioms Eq(141)–Eq(144), their left-left mirrors,
/// idempotence of the four canonical endomorphisms, and the invertibility
/// conditions `Ψ_LL∘Ψ_RR = Δ_LL`, `Ψ_RR∘Ψ_LL = Δ_RR`.
pub fn check_entwining<F: Field>(e: &EntwiningStructure<F>) -> Report {
    let mut rep = Report::new();
    let id_a = e.algebra.id();
    let id_c = e.coalgebra.id();
    let (mu, eta) = (&e.algebra.mult, &e.algebra.unit);
    let (eps, delta) = (&e.coalgebra.counit, &e.coalgebra.comult);
    let (rr, ll) = (&e.psi_rr, &e.psi_ll);

    rep.eq(
        "Eq(141)",
        &(&(&mu.tensor(&id_c) * &id_a.tensor(rr)) * &rr.tensor(&id_a)),
        &(rr * &id_c.tensor(mu)),
    );
    rep.eq(
        "Eq(142)",
        &(rr * &id_c.tensor(eta)),
        &(&e.e_rr.tensor(&id_c) * delta),
    );
    rep.eq(
        "Eq(143)",
        &(&id_a.tensor(delta) * rr),
        &(&(&rr.tensor(&id_c) * &id_c.tensor(rr)) * &delta.tensor(&id_a)),
    );
    rep.eq(
        "Eq(144)",
        &(&id_a.tensor(eps) * rr),
        &(mu * &e.e_rr.tensor(&id_a)),
    );

    rep.eq(
        "Eq(141)LL",
        &(ll * &mu.tensor(&id_c)),
        &(&(&id_c.tensor(mu) * &ll.tensor(&id_a)) * &id_a.tensor(ll)),
    );
    rep.eq(
        "Eq(142)LL",
        &(ll * &eta.tensor(&id_c)),
        &(&id_c.tensor(&e.e_ll) * delta),
    );
    rep.eq(
        "Eq(143)LL",
        &(&delta.tensor(&id_a) * ll),
        &(&(&id_c.tensor(ll) * &ll.tensor(&id_c)) * &id_a.tensor(delta)),
    );
    rep.eq(
        "Eq(144)LL",
        &(&eps.tensor(&id_a) * ll),
        &(mu * &id_a.tensor(&e.e_ll)),
    );

    rep.eq("Delta_RR-idem", &(&e.delta_rr * &e.delta_rr), &e.delta_rr);
    rep.eq("nabla_RR-idem", &(&e.nabla_rr * &e.nabla_rr), &e.nabla_rr);
    rep.eq("Delta_LL-idem", &(&e.delta_ll * &e.delta_ll), &e.delta_ll);
    rep.eq("nabla_LL-idem", &(&e.nabla_ll * &e.nabla_ll), &e.nabla_ll);

    rep.eq("Def3.9(ii)-LL", &(ll * rr), &e.delta_ll);
    rep.eq("Def3.9(ii)-RR", &(rr * ll), &e.delta_rr);
    rep
}

/// The two invertible weak entwining structures carried by a projected
/// module: one from the `s`-pair and one from the `r`-pair of its weak
/// operator.
pub fn entwining_from_projection<F: Field>(
    pm: &ProjectedModule<F>,
) -> Result<(EntwiningStructure<F>, EntwiningStructure<F>), CoreError> {
    let coalg_d = pm.projection.base.coalgebra.clone();
    let s_structure = EntwiningStructure::new(
        pm.algebra.clone(),
        coalg_d.clone(),
        pm.yd.wo.s.clone(),
        pm.yd.wo.s_prime.clone(),
    )?;
    let r_structure = EntwiningStructure::new(
        pm.algebra.clone(),
        coalg_d,
        pm.yd.wo.r_prime.clone(),
        pm.yd.wo.r.clone(),
    )?;
    Ok((s_structure, r_structure))
}

/// The split inclusion of a groupoid algebra into the algebra of a product
/// with a group: `f(σ) = (σ, e)`, `g((σ, h)) = σ`.
pub fn groupoid_product_projection<F: Field>(
    field: F,
    left: &Groupoid,
    group: &Groupoid,
) -> Result<Projection<F>, CoreError> {
    if group.objects.len() != 1 {
        return Err(CoreError::ProjectionInvalid {
            what: "the second factor must have a single object".into(),
            witness: None,
        });
    }
    let product = Groupoid::product(left, group);
    let base = Arc::new(groupoid_algebra(field.clone(), left)?);
    let total = Arc::new(groupoid_algebra(field.clone(), &product)?);
    let nb = group.arrows.len();
    let e = group.identities[&0];
    let one = field.one();
    let f = Morphism::from_triplets(
        field.clone(),
        base.carrier().clone(),
        total.carrier().clone(),
        (0..left.arrows.len()).map(|sa| (sa * nb + e, sa, one.clone())),
    )?;
    let g = Morphism::from_triplets(
        field.clone(),
        total.carrier().clone(),
        base.carrier().clone(),
        (0..left.arrows.len())
            .flat_map(|sa| (0..nb).map(move |tb| (sa, sa * nb + tb)))
            .map(|(r, c)| (r, c, one.clone())),
    )?;
    Projection::new(base, total, f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, Rationals};
    use crate::report::Status;
    use crate::weak_op::check_lemma21;
    use crate::yd::{base_object, check_yd};

    fn q() -> Rationals {
        Rationals
    }

    fn rg2() -> Arc<Wbha<Rationals>> {
        Arc::new(groupoid_algebra(q(), &Groupoid::full(2)).unwrap())
    }

    fn product_projection() -> Projection<Rationals> {
        groupoid_product_projection(q(), &Groupoid::full(2), &Groupoid::cyclic(2)).unwrap()
    }

    #[test]
    fn trivial_projection_checks_out() {
        let p = Projection::trivial(rg2());
        let rep = check_projection(&p);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn trivial_projection_reproduces_base_object() {
        let base = rg2();
        let p = Projection::trivial(base.clone());
        let pm = build_projected_module(&p).unwrap();
        // q = id ∧ λ = Π^L for the trivial projection.
        assert_eq!(pm.q, base.pi_l);
        let dl = base_object(&base).unwrap();
        assert_eq!(pm.yd.carrier.dim(), dl.carrier.dim());
        assert!(pm.yd.action.same_entries(&dl.action));
        assert!(pm.yd.coaction.same_entries(&dl.coaction));
        assert!(pm.yd.wo.r.same_entries(&dl.wo.r));
        assert!(pm.yd.wo.r_prime.same_entries(&dl.wo.r_prime));
        assert!(pm.yd.wo.s.same_entries(&dl.wo.s));
        assert!(pm.yd.wo.s_prime.same_entries(&dl.wo.s_prime));
    }

    #[test]
    fn product_groupoid_projection_builds() {
        let p = product_projection();
        let rep = check_projection(&p);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let pm = build_projected_module(&p).unwrap();
        // q(E_ij, h) = (E_ii, h): rank 4.
        assert_eq!(pm.yd.carrier.dim(), 4);
        assert!(check_yd(&pm.yd).passed());
    }

    #[test]
    fn scaled_g_is_rejected() {
        let base = rg2();
        let p = Projection::trivial(base.clone());
        let bad = Projection::new(
            base.clone(),
            base,
            p.f.clone(),
            p.g.scaled(&q().from_int(2)),
        )
        .unwrap();
        let rep = check_projection(&bad);
        assert_eq!(rep.line("g∘f=id").unwrap().status, Status::Fail);
        assert!(matches!(
            build_projected_module(&bad),
            Err(CoreError::ProjectionInvalid { .. })
        ));
    }

    #[test]
    fn bd_wbha_is_braided() {
        // The induced weak braided Hopf structure on B_D has an operator
        // that is not the flip: a genuinely braided corpus instance.
        let p = Projection::trivial(rg2());
        let pm = build_projected_module(&p).unwrap();
        let bd = bd_wbha(&pm).unwrap();
        assert!(!bd.is_symmetric());
        assert!(crate::wyb::check_wyb(&bd.wyb).passed());
        let rep = crate::wbha::derived_identity_suite(&bd);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        // Π^L of B_D is the conjugated Π^L of B.
        let expected = &(&pm.split.proj * &pm.projection.total.pi_l) * &pm.split.inj;
        assert_eq!(bd.pi_l, expected);
    }

    #[test]
    fn lemma21_both_sides_false_on_braided_instance() {
        // Over the braided B_D structure the quadruple idempotents are not
        // identities, so an action corrupted outside the image breaks both
        // sides of the Lemma 2.1 biconditional at once.
        let p = Projection::trivial(rg2());
        let pm = build_projected_module(&p).unwrap();
        let bd = Arc::new(bd_wbha(&pm).unwrap());
        let w = WeakOperatorQuad::from_wyb(bd.clone()).unwrap();
        assert!(!w.nabla_s.is_identity());
        // One corruption in a kernel column of ∇_s (falsifies absorption) and
        // one in an image column (falsifies the unit normalization).
        let mut broken_action = bd.mult().clone();
        broken_action.set_entry(0, 1, q().one());
        broken_action.set_entry(0, 3, q().from_int(2));
        let module = crate::algebra::ModuleStructure::new(
            bd.algebra.clone(),
            bd.carrier().clone(),
            broken_action.clone(),
        )
        .unwrap();
        let comodule = crate::algebra::ComoduleStructure::new(
            bd.coalgebra.clone(),
            bd.carrier().clone(),
            bd.comult().clone(),
        )
        .unwrap();
        // Both sides of (i-1) must be false for this corruption.
        assert!((&broken_action * &w.nabla_s) != broken_action);
        let rep = check_lemma21(&w, &module, &comodule);
        let line = rep.line("Lemma2.1(i-1)").unwrap();
        assert_eq!(line.status, Status::Pass);
        assert!(line.note.as_ref().unwrap().contains("fail"));
    }

    #[test]
    fn entwining_structures_from_projection() {
        let p = product_projection();
        let pm = build_projected_module(&p).unwrap();
        let (s_struct, r_struct) = entwining_from_projection(&pm).unwrap();
        let rep = check_entwining(&s_struct);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let rep = check_entwining(&r_struct);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        // s∘s′ = Δ_RR as a standalone identity.
        assert_eq!(&pm.yd.wo.s * &pm.yd.wo.s_prime, s_struct.delta_rr);
    }

    #[test]
    fn flip_entwining_on_group_algebra() {
        // A bialgebra-style trivial case: both crossings are the flip and
        // every canonical idempotent is the identity.
        let z = Arc::new(groupoid_algebra(q(), &Groupoid::cyclic(2)).unwrap());
        let c = Morphism::flip(q(), z.carrier(), z.carrier());
        let e =
            EntwiningStructure::new(z.algebra.clone(), z.coalgebra.clone(), c.clone(), c).unwrap();
        let rep = check_entwining(&e);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        assert_eq!(e.e_rr, z.unit() * z.counit());
        assert!(e.delta_rr.is_identity());
        assert!(e.nabla_ll.is_identity());
    }

    #[test]
    fn corrupted_entwining_detected() {
        let p = Projection::trivial(rg2());
        let pm = build_projected_module(&p).unwrap();
        let (s_struct, _) = entwining_from_projection(&pm).unwrap();
        let mut bad_rr = s_struct.psi_rr.clone();
        bad_rr.set_entry(0, 1, q().from_int(3));
        let bad = EntwiningStructure::new(
            s_struct.algebra.clone(),
            s_struct.coalgebra.clone(),
            bad_rr,
            s_struct.psi_ll.clone(),
        )
        .unwrap();
        let rep = check_entwining(&bad);
        assert!(!rep.passed());
    }

    #[test]
    fn induced_morphism_from_projection_automorphism() {
        // Swap the two objects of the left factor; this carries the product
        // projection to a twisted one and induces a non-identity morphism
        // between the projected modules.
        let p = product_projection();
        let pm = build_projected_module(&p).unwrap();

        let product = Groupoid::product(&Groupoid::full(2), &Groupoid::cyclic(2));
        let swap_name = |name: &str| -> String {
            // (Eij,h) -> (Eσ(i)σ(j),h) with σ = (1 2)
            let inner = &name[1..name.len() - 1];
            let (e, h) = inner.split_once(',').unwrap();
            let i = &e[1..2];
            let j = &e[2..3];
            let sw = |x: &str| if x == "1" { "2" } else { "1" };
            format!("(E{}{},{})", sw(i), sw(j), h)
        };
        let n = product.arrows.len();
        let mut alpha = Morphism::zero(
            q(),
            pm.projection.total.carrier().clone(),
            pm.projection.total.carrier().clone(),
        );
        for idx in 0..n {
            let target = product
                .arrow_index(&swap_name(&product.arrows[idx].name))
                .unwrap();
            alpha.set_entry(target, idx, q().one());
        }
        let base_g = Groupoid::full(2);
        let mut swap_d = Morphism::zero(
            q(),
            pm.projection.base.carrier().clone(),
            pm.projection.base.carrier().clone(),
        );
        for idx in 0..4 {
            let name = &base_g.arrows[idx].name;
            let sw = |x: &str| if x == "1" { "2" } else { "1" };
            let target_name = format!("E{}{}", sw(&name[1..2]), sw(&name[2..3]));
            swap_d.set_entry(base_g.arrow_index(&target_name).unwrap(), idx, q().one());
        }

        let twisted = Projection::new(
            pm.projection.base.clone(),
            pm.projection.total.clone(),
            &alpha * &pm.projection.f,
            &swap_d * &pm.projection.g,
        )
        .unwrap();
        assert!(check_projection(&twisted).passed());
        let pm2 = build_projected_module(&twisted).unwrap();
        let ydm = induced_projection_morphism(&alpha, &pm, &pm2).unwrap();
        assert!(!ydm.map.is_identity());

        // A map failing h∘f = f' is rejected.
        let err = induced_projection_morphism(&pm.projection.total.id(), &pm, &pm2);
        assert!(matches!(err, Err(CoreError::NotProjectionMorphism(_))));
    }
}
