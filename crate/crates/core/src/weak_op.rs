//! Weak operators between an object `M` and a weak braided Hopf algebra `D`:
//! quadruples `(r, r′, s, s′)` of crossings satisfying the compatibility
//! conditions (c1)–(c5), together with the derived identities Eq(34)–Eq(111)
//! and the (co)module compatibility predicates.

use std::sync::Arc;

use crate::algebra::{expect_boundary, ComoduleStructure, ModuleStructure};
use crate::error::CoreError;
use crate::field::Field;
use crate::morphism::Morphism;
use crate::object::SpaceObject;
use crate::report::Report;
use crate::split::SplitIdempotent;
use crate::wbha::Wbha;

/// An `(M, D)` weak operator quadruple with its four cached idempotents.
#[derive(Clone, Debug)]
pub struct WeakOperatorQuad<F: Field> {
    pub base: Arc<Wbha<F>>,
    pub carrier: SpaceObject,
    /// `r : M⊗D → D⊗M`
    pub r: Morphism<F>,
    /// `r′ : D⊗M → M⊗D`
    pub r_prime: Morphism<F>,
    /// `s : D⊗M → M⊗D`
    pub s: Morphism<F>,
    /// `s′ : M⊗D → D⊗M`
    pub s_prime: Morphism<F>,
    /// `∇_r = r′∘r`
    pub nabla_r: Morphism<F>,
    /// `∇_{r′} = r∘r′`
    pub nabla_r_prime: Morphism<F>,
    /// `∇_s = s′∘s`
    pub nabla_s: Morphism<F>,
    /// `∇_{s′} = s∘s′`
    pub nabla_s_prime: Morphism<F>,
}

impl<F: Field> WeakOperatorQuad<F> {
    pub fn new(
        base: Arc<Wbha<F>>,
        carrier: SpaceObject,
        r: Morphism<F>,
        r_prime: Morphism<F>,
        s: Morphism<F>,
        s_prime: Morphism<F>,
    ) -> Result<Self, CoreError> {
        let d = base.carrier().clone();
        let md = carrier.tensor(&d);
        let dm = d.tensor(&carrier);
        expect_boundary("weak operator r", &r, &md, &dm)?;
        expect_boundary("weak operator r'", &r_prime, &dm, &md)?;
        expect_boundary("weak operator s", &s, &dm, &md)?;
        expect_boundary("weak operator s'", &s_prime, &md, &dm)?;
        let nabla_r = r_prime.compose(&r)?;
        let nabla_r_prime = r.compose(&r_prime)?;
        let nabla_s = s_prime.compose(&s)?;
        let nabla_s_prime = s.compose(&s_prime)?;
        Ok(WeakOperatorQuad {
            base,
            carrier,
            r,
            r_prime,
            s,
            s_prime,
            nabla_r,
            nabla_r_prime,
            nabla_s,
            nabla_s_prime,
        })
    }

    /// The `(D, D)` quadruple `(t, t′, t, t′)` carried by the operator of
    /// the base itself.
    pub fn from_wyb(base: Arc<Wbha<F>>) -> Result<Self, CoreError> {
        let carrier = base.carrier().clone();
        let (t, tp) = (base.t().clone(), base.t_prime().clone());
        WeakOperatorQuad::new(base, carrier, t.clone(), tp.clone(), t, tp)
    }

    /// The flip quadruple, a weak operator for any object over a symmetric
    /// base.
    pub fn flips(base: Arc<Wbha<F>>, carrier: &SpaceObject) -> Result<Self, CoreError> {
        let field = base.field().clone();
        let d = base.carrier();
        let md_flip = Morphism::flip(field.clone(), carrier, d);
        let dm_flip = Morphism::flip(field, d, carrier);
        WeakOperatorQuad::new(
            base,
            carrier.clone(),
            md_flip.clone(),
            dm_flip.clone(),
            dm_flip,
            md_flip,
        )
    }

    /// The standard quadruple on the image of a split idempotent of the
    /// base carrier: conjugate `t` and `t′` by the splitting.
    pub fn on_image(base: Arc<Wbha<F>>, split: &SplitIdempotent<F>) -> Result<Self, CoreError> {
        let id = base.id();
        let (p, i) = (&split.proj, &split.inj);
        let r = &(&id.tensor(p) * base.t()) * &i.tensor(&id);
        let r_prime = &(&p.tensor(&id) * base.t_prime()) * &id.tensor(i);
        let s = &(&p.tensor(&id) * base.t()) * &id.tensor(i);
        let s_prime = &(&id.tensor(p) * base.t_prime()) * &i.tensor(&id);
        WeakOperatorQuad::new(base, split.image.clone(), r, r_prime, s, s_prime)
    }

    /// The dual quadruple `(s′, s, r′, r)`, a weak operator iff the original
    /// is.
    pub fn dual(&self) -> Self {
        let mut out = self.clone();
        out.r = self.s_prime.clone();
        out.r_prime = self.s.clone();
        out.s = self.r_prime.clone();
        out.s_prime = self.r.clone();
        out.nabla_r = self.nabla_s_prime.clone();
        out.nabla_r_prime = self.nabla_s.clone();
        out.nabla_s = self.nabla_r_prime.clone();
        out.nabla_s_prime = self.nabla_r.clone();
        out
    }

    pub fn field(&self) -> &F {
        self.r.field()
    }

    pub fn id_m(&self) -> Morphism<F> {
        Morphism::identity(self.field().clone(), &self.carrier)
    }
}

/// The axiom report for a weak operator: (c1) with both operators, the mixed
/// Yang-Baxter equations (c2), both closed forms of each idempotent (c3),
/// (co)multiplication compatibility (c4) and antipode compatibility (c5).
/// The versions of (c2) with the two operators interchanged are not part of
/// the definition; whether they happen to hold is reported as information.
pub fn check_wo<F: Field>(w: &WeakOperatorQuad<F>) -> Report {
    let mut rep = Report::new();
    let b = &*w.base;
    let id_d = b.id();
    let id_m = w.id_m();
    let (r, rp, s, sp) = (&w.r, &w.r_prime, &w.s, &w.s_prime);
    let (mu, delta, eta, eps) = (b.mult(), b.comult(), b.unit(), b.counit());
    let lam = &b.antipode;
    let td = |x: &Morphism<F>| x.tensor(&id_d);
    let dt = |x: &Morphism<F>| id_d.tensor(x);
    let tm = |x: &Morphism<F>| x.tensor(&id_m);
    let mt = |x: &Morphism<F>| id_m.tensor(x);

    for (suffix, t) in [("", b.t()), ("'", b.t_prime())] {
        rep.eq(
            &format!("c1-1{suffix}"),
            &(&(&dt(r) * &td(r)) * &mt(t)),
            &(&(&tm(t) * &dt(r)) * &td(r)),
        );
        rep.eq(
            &format!("c1-2{suffix}"),
            &(&(&td(rp) * &dt(rp)) * &tm(t)),
            &(&(&mt(t) * &td(rp)) * &dt(rp)),
        );
        rep.eq(
            &format!("c1-3{suffix}"),
            &(&(&td(s) * &dt(s)) * &tm(t)),
            &(&(&mt(t) * &td(s)) * &dt(s)),
        );
        rep.eq(
            &format!("c1-4{suffix}"),
            &(&(&dt(sp) * &td(sp)) * &mt(t)),
            &(&(&tm(t) * &dt(sp)) * &td(sp)),
        );
    }

    let (t, tp) = (b.t(), b.t_prime());
    rep.eq(
        "c2-1",
        &(&(&td(rp) * &dt(s)) * &tm(t)),
        &(&(&mt(t) * &td(s)) * &dt(rp)),
    );
    rep.eq(
        "c2-2",
        &(&(&td(s) * &dt(rp)) * &tm(tp)),
        &(&(&mt(tp) * &td(rp)) * &dt(s)),
    );
    rep.eq(
        "c2-3",
        &(&(&dt(sp) * &td(r)) * &mt(t)),
        &(&(&tm(t) * &dt(r)) * &td(sp)),
    );
    rep.eq(
        "c2-4",
        &(&(&dt(r) * &td(sp)) * &mt(tp)),
        &(&(&tm(tp) * &dt(sp)) * &td(r)),
    );

    // (c3): each ∇ has a counit-style and a unit-style closed form.
    let eps_m_r = &eps.tensor(&id_m) * r; // (ε⊗M)∘r : M⊗D → M
    let m_eps_rp = &id_m.tensor(eps) * rp; // (M⊗ε)∘r′ : D⊗M → M
    let m_eps_s = &id_m.tensor(eps) * s;
    let eps_m_sp = &eps.tensor(&id_m) * sp;
    let rp_eta = rp * &eta.tensor(&id_m); // r′∘(η⊗M) : M → M⊗D
    let r_eta = r * &id_m.tensor(eta); // r∘(M⊗η) : M → D⊗M
    let sp_eta = sp * &id_m.tensor(eta); // s′∘(M⊗η) : M → D⊗M
    let s_eta = s * &eta.tensor(&id_m); // s∘(η⊗M) : M → M⊗D
    rep.eq("c3-1a", &w.nabla_r, &(&eps_m_r.tensor(&id_d) * &mt(delta)));
    rep.eq("c3-1b", &w.nabla_r, &(&mt(mu) * &rp_eta.tensor(&id_d)));
    rep.eq("c3-2a", &w.nabla_r_prime, &(&dt(&m_eps_rp) * &tm(delta)));
    rep.eq("c3-2b", &w.nabla_r_prime, &(&tm(mu) * &dt(&r_eta)));
    rep.eq("c3-3a", &w.nabla_s, &(&dt(&m_eps_s) * &tm(delta)));
    rep.eq("c3-3b", &w.nabla_s, &(&tm(mu) * &dt(&sp_eta)));
    rep.eq(
        "c3-4a",
        &w.nabla_s_prime,
        &(&eps_m_sp.tensor(&id_d) * &mt(delta)),
    );
    rep.eq("c3-4b", &w.nabla_s_prime, &(&mt(mu) * &s_eta.tensor(&id_d)));

    rep.eq("c4-1", &(r * &mt(mu)), &(&(&tm(mu) * &dt(r)) * &td(r)));
    rep.eq("c4-2", &(rp * &tm(mu)), &(&(&mt(mu) * &td(rp)) * &dt(rp)));
    rep.eq(
        "c4-3",
        &(&(&dt(r) * &td(r)) * &mt(delta)),
        &(&tm(delta) * r),
    );
    rep.eq(
        "c4-4",
        &(&(&td(rp) * &dt(rp)) * &tm(delta)),
        &(&mt(delta) * rp),
    );
    rep.eq("c4-5", &(s * &tm(mu)), &(&(&mt(mu) * &td(s)) * &dt(s)));
    rep.eq("c4-6", &(sp * &mt(mu)), &(&(&tm(mu) * &dt(sp)) * &td(sp)));
    rep.eq(
        "c4-7",
        &(&(&td(s) * &dt(s)) * &tm(delta)),
        &(&mt(delta) * s),
    );
    rep.eq(
        "c4-8",
        &(&(&dt(sp) * &td(sp)) * &mt(delta)),
        &(&tm(delta) * sp),
    );

    rep.eq("c5-1", &(&mt(lam) * &w.nabla_r), &(&w.nabla_r * &mt(lam)));
    rep.eq(
        "c5-2",
        &(&tm(lam) * &w.nabla_r_prime),
        &(&w.nabla_r_prime * &tm(lam)),
    );
    rep.eq("c5-3", &(&tm(lam) * &w.nabla_s), &(&w.nabla_s * &tm(lam)));
    rep.eq(
        "c5-4",
        &(&mt(lam) * &w.nabla_s_prime),
        &(&w.nabla_s_prime * &mt(lam)),
    );

    let swapped_holds = {
        let a = (&(&td(rp) * &dt(s)) * &tm(tp)) == (&(&mt(tp) * &td(s)) * &dt(rp));
        let b2 = (&(&td(s) * &dt(rp)) * &tm(t)) == (&(&mt(t) * &td(rp)) * &dt(s));
        let c = (&(&dt(sp) * &td(r)) * &mt(tp)) == (&(&tm(tp) * &dt(r)) * &td(sp));
        let d = (&(&dt(r) * &td(sp)) * &mt(t)) == (&(&tm(t) * &dt(sp)) * &td(r));
        a && b2 && c && d
    };
    rep.info(
        "c2:swapped",
        if swapped_holds {
            "swapped mixed equations hold"
        } else {
            "swapped mixed equations fail"
        },
    );

    rep
}

/// The derived-identity suite: Remark 1.10 (Eq(34)–Eq(57)), idempotence and
/// cancellation (Prop 1.11, Eq(58)–Eq(61)), the idempotent/operator
/// exchange rules (Props 1.12–1.14, Eq(62)–Eq(77), with both operators
/// where stated), the unit/counit exchange (Prop 1.16, Eq(78)–Eq(81)), the
/// projection commutations for all four projections (Props 1.17–1.18,
/// Eq(82)–Eq(91)), the antipode commutations (Prop 1.19, Eq(92)–Eq(95),
/// with inverse variants) and the closed idempotent forms Eq(96)–Eq(111),
/// the last two groups gated on antipode invertibility.
pub fn derived_wo_suite<F: Field>(w: &WeakOperatorQuad<F>) -> Report {
    let mut rep = Report::new();
    let b = &*w.base;
    let id_d = b.id();
    let id_m = w.id_m();
    let (r, rp, s, sp) = (&w.r, &w.r_prime, &w.s, &w.s_prime);
    let (nr, nrp, ns, nsp) = (&w.nabla_r, &w.nabla_r_prime, &w.nabla_s, &w.nabla_s_prime);
    let (mu, delta, eta, eps) = (b.mult(), b.comult(), b.unit(), b.counit());
    let nab = b.nabla_dd();
    let lam = &b.antipode;
    let td = |x: &Morphism<F>| x.tensor(&id_d);
    let dt = |x: &Morphism<F>| id_d.tensor(x);
    let tm = |x: &Morphism<F>| x.tensor(&id_m);
    let mt = |x: &Morphism<F>| id_m.tensor(x);

    rep.eq(
        "Eq(34)",
        &(&(&dt(r) * &td(r)) * &mt(nab)),
        &(&(&tm(nab) * &dt(r)) * &td(r)),
    );
    rep.eq(
        "Eq(35)",
        &(&(&td(rp) * &dt(rp)) * &tm(nab)),
        &(&(&mt(nab) * &td(rp)) * &dt(rp)),
    );
    rep.eq(
        "Eq(36)",
        &(&(&dt(r) * &td(sp)) * &mt(nab)),
        &(&(&tm(nab) * &dt(r)) * &td(sp)),
    );
    rep.eq(
        "Eq(37)",
        &(&(&td(s) * &dt(rp)) * &tm(nab)),
        &(&(&mt(nab) * &td(s)) * &dt(rp)),
    );

    rep.eq("Eq(38)-1", &(&mt(eps) * nr), &(&eps.tensor(&id_m) * r));
    rep.eq("Eq(38)-2", &(&eps.tensor(&id_m) * nrp), &(&mt(eps) * rp));
    rep.eq("Eq(39)-1", &(nr * &mt(eta)), &(rp * &eta.tensor(&id_m)));
    rep.eq("Eq(39)-2", &(nrp * &eta.tensor(&id_m)), &(r * &mt(eta)));
    rep.eq("Eq(40)", &(nr * &mt(mu)), &(&mt(mu) * &td(nr)));
    rep.eq("Eq(41)", &(nrp * &tm(mu)), &(&tm(mu) * &dt(nrp)));
    rep.eq("Eq(42)", &(&td(nr) * &mt(delta)), &(&mt(delta) * nr));
    rep.eq("Eq(43)", &(&dt(nrp) * &tm(delta)), &(&tm(delta) * nrp));
    rep.eq(
        "Eq(44)",
        &(&(&dt(nr) * &td(r)) * &mt(delta)),
        &(&td(r) * &mt(delta)),
    );
    rep.eq(
        "Eq(45)",
        &(&(&td(nrp) * &dt(rp)) * &tm(delta)),
        &(&dt(rp) * &tm(delta)),
    );

    rep.eq(
        "Eq(46)",
        &(&(&td(s) * &dt(s)) * &tm(nab)),
        &(&(&mt(nab) * &td(s)) * &dt(s)),
    );
    rep.eq(
        "Eq(47)",
        &(&(&dt(sp) * &td(sp)) * &mt(nab)),
        &(&(&tm(nab) * &dt(sp)) * &td(sp)),
    );
    rep.eq(
        "Eq(48)",
        &(&(&td(rp) * &dt(s)) * &tm(nab)),
        &(&(&mt(nab) * &td(rp)) * &dt(s)),
    );
    rep.eq(
        "Eq(49)",
        &(&(&dt(sp) * &td(r)) * &mt(nab)),
        &(&(&tm(nab) * &dt(sp)) * &td(r)),
    );

    rep.eq("Eq(50)-1", &(&eps.tensor(&id_m) * ns), &(&mt(eps) * s));
    rep.eq("Eq(50)-2", &(&mt(eps) * nsp), &(&eps.tensor(&id_m) * sp));
    rep.eq("Eq(51)-1", &(nsp * &mt(eta)), &(s * &eta.tensor(&id_m)));
    rep.eq("Eq(51)-2", &(ns * &eta.tensor(&id_m)), &(sp * &mt(eta)));
    rep.eq("Eq(52)", &(ns * &tm(mu)), &(&tm(mu) * &dt(ns)));
    rep.eq("Eq(53)", &(nsp * &mt(mu)), &(&mt(mu) * &td(nsp)));
    rep.eq("Eq(54)", &(&dt(ns) * &tm(delta)), &(&tm(delta) * ns));
    rep.eq("Eq(55)", &(&td(nsp) * &mt(delta)), &(&mt(delta) * nsp));
    rep.eq(
        "Eq(56)",
        &(&(&dt(nsp) * &td(sp)) * &mt(delta)),
        &(&td(sp) * &mt(delta)),
    );
    rep.eq(
        "Eq(57)",
        &(&(&td(ns) * &dt(s)) * &tm(delta)),
        &(&dt(s) * &tm(delta)),
    );

    rep.eq("Prop1.11-nabla_r", &(nr * nr), nr);
    rep.eq("Prop1.11-nabla_r'", &(nrp * nrp), nrp);
    rep.eq("Prop1.11-nabla_s", &(ns * ns), ns);
    rep.eq("Prop1.11-nabla_s'", &(nsp * nsp), nsp);
    rep.eq_all("Eq(58)", &[r, &(nrp * r), &(r * nr)]);
    rep.eq_all("Eq(59)", &[rp, &(rp * nrp), &(nr * rp)]);
    rep.eq_all("Eq(60)", &[s, &(nsp * s), &(s * ns)]);
    rep.eq_all("Eq(61)", &[sp, &(sp * nsp), &(ns * sp)]);

    for (suffix, t) in [("", b.t()), ("'", b.t_prime())] {
        rep.eq(
            &format!("Eq(62){suffix}"),
            &(&(&dt(nr) * &td(r)) * &mt(t)),
            &(&(&td(r) * &mt(t)) * &td(nr)),
        );
        rep.eq(
            &format!("Eq(63){suffix}"),
            &(&(&tm(t) * &dt(r)) * &td(nrp)),
            &(&(&dt(nrp) * &tm(t)) * &dt(r)),
        );
        rep.eq(
            &format!("Eq(64){suffix}"),
            &(&(&td(nrp) * &dt(rp)) * &tm(t)),
            &(&(&dt(rp) * &tm(t)) * &dt(nrp)),
        );
        rep.eq(
            &format!("Eq(65){suffix}"),
            &(&(&mt(t) * &td(rp)) * &dt(nr)),
            &(&(&td(nr) * &mt(t)) * &td(rp)),
        );
        rep.eq(
            &format!("Eq(66){suffix}"),
            &(&(&td(ns) * &dt(s)) * &tm(t)),
            &(&(&dt(s) * &tm(t)) * &dt(ns)),
        );
        rep.eq(
            &format!("Eq(67){suffix}"),
            &(&(&mt(t) * &td(s)) * &dt(nsp)),
            &(&(&td(nsp) * &mt(t)) * &td(s)),
        );
        rep.eq(
            &format!("Eq(68){suffix}"),
            &(&(&dt(nsp) * &td(sp)) * &mt(t)),
            &(&(&td(sp) * &mt(t)) * &td(nsp)),
        );
        rep.eq(
            &format!("Eq(69){suffix}"),
            &(&(&tm(t) * &dt(sp)) * &td(ns)),
            &(&(&dt(ns) * &tm(t)) * &dt(sp)),
        );
    }

    let (t, tp) = (b.t(), b.t_prime());
    rep.eq(
        "Eq(70)",
        &(&(&tm(t) * &dt(r)) * &td(ns)),
        &(&(&dt(ns) * &tm(t)) * &dt(r)),
    );
    rep.eq(
        "Eq(71)",
        &(&(&td(r) * &mt(t)) * &td(nsp)),
        &(&(&dt(nsp) * &td(r)) * &mt(t)),
    );
    rep.eq(
        "Eq(72)",
        &(&(&td(sp) * &mt(tp)) * &td(nr)),
        &(&(&dt(nr) * &td(sp)) * &mt(tp)),
    );
    rep.eq(
        "Eq(73)",
        &(&(&tm(tp) * &dt(sp)) * &td(nrp)),
        &(&(&dt(nrp) * &tm(tp)) * &dt(sp)),
    );

    for (suffix, u) in [("", t), ("'", tp)] {
        rep.eq(
            &format!("Eq(74){suffix}"),
            &(&(&td(r) * &mt(u)) * &td(rp)),
            &(&(&dt(rp) * &tm(u)) * &dt(r)),
        );
        rep.eq(
            &format!("Eq(75){suffix}"),
            &(&(&dt(s) * &tm(u)) * &dt(sp)),
            &(&(&td(sp) * &mt(u)) * &td(s)),
        );
    }
    rep.eq(
        "Eq(76)",
        &(&(&td(r) * &mt(t)) * &td(s)),
        &(&(&dt(s) * &tm(t)) * &dt(r)),
    );
    rep.eq(
        "Eq(77)",
        &(&(&td(sp) * &mt(tp)) * &td(rp)),
        &(&(&dt(rp) * &tm(tp)) * &dt(sp)),
    );

    let delta_eta = b.delta_eta();
    let eps_mu = b.eps_mu();
    rep.eq(
        "Eq(78)",
        &(&td(r) * &mt(&delta_eta)),
        &(&dt(rp) * &delta_eta.tensor(&id_m)),
    );
    rep.eq(
        "Eq(79)",
        &(&eps_mu.tensor(&id_m) * &dt(r)),
        &(&mt(&eps_mu) * &td(rp)),
    );
    rep.eq(
        "Eq(80)",
        &(&td(sp) * &mt(&delta_eta)),
        &(&dt(s) * &delta_eta.tensor(&id_m)),
    );
    rep.eq(
        "Eq(81)",
        &(&eps_mu.tensor(&id_m) * &dt(sp)),
        &(&mt(&eps_mu) * &td(s)),
    );

    for (tag, pi) in [
        ("", &b.pi_l),
        (":PiR", &b.pi_r),
        (":PibarL", &b.pibar_l),
        (":PibarR", &b.pibar_r),
    ] {
        rep.eq(&format!("Eq(82){tag}"), &(&mt(pi) * nr), &(nr * &mt(pi)));
        rep.eq(&format!("Eq(83){tag}"), &(&tm(pi) * nrp), &(nrp * &tm(pi)));
        rep.eq(&format!("Eq(84){tag}"), &(&tm(pi) * ns), &(ns * &tm(pi)));
        rep.eq(&format!("Eq(85){tag}"), &(&mt(pi) * nsp), &(nsp * &mt(pi)));
        rep.eq(&format!("Eq(86){tag}"), &(&tm(pi) * r), &(r * &mt(pi)));
        rep.eq(&format!("Eq(87){tag}"), &(&mt(pi) * rp), &(rp * &tm(pi)));
        rep.eq(&format!("Eq(88){tag}"), &(&mt(pi) * s), &(s * &tm(pi)));
        rep.eq(&format!("Eq(89){tag}"), &(&tm(pi) * sp), &(sp * &mt(pi)));
    }

    rep.eq_all(
        "Eq(91)",
        &[
            &(&mt(&b.pi_l) * nr),
            &(rp * &(&tm(&b.pi_l) * r)),
            &(nr * &mt(&b.pi_l)),
        ],
    );

    rep.eq("Eq(92)", &(&tm(lam) * r), &(r * &mt(lam)));
    rep.eq("Eq(93)", &(&mt(lam) * rp), &(rp * &tm(lam)));
    rep.eq("Eq(94)", &(&mt(lam) * s), &(s * &tm(lam)));
    rep.eq("Eq(95)", &(&tm(lam) * sp), &(sp * &mt(lam)));

    match &b.antipode_inv {
        Some(li) => {
            rep.eq("Eq(92):inv", &(&tm(li) * r), &(r * &mt(li)));
            rep.eq("Eq(93):inv", &(&mt(li) * rp), &(rp * &tm(li)));
            rep.eq("Eq(94):inv", &(&mt(li) * s), &(s * &tm(li)));
            rep.eq("Eq(95):inv", &(&tm(li) * sp), &(sp * &mt(li)));

            let mu_t = mu * t;
            let mu_tp = mu * tp;
            let t_delta = t * delta;
            let tp_delta = tp * delta;
            let eta_md = eta.tensor(&id_m).tensor(&id_d); // M⊗D → D⊗M⊗D
            let dm_eta = id_d.tensor(&id_m).tensor(eta); // D⊗M → D⊗M⊗D
            let eps_md = eps.tensor(&id_m).tensor(&id_d); // D⊗M⊗D → M⊗D
            let dm_eps = id_d.tensor(&id_m).tensor(eps); // D⊗M⊗D → D⊗M
            rep.eq("Eq(96)", nr, &(&(&mt(&mu_t) * &td(rp)) * &eta_md));
            rep.eq("Eq(97)", nr, &(&(&mt(&mu_tp) * &td(rp)) * &eta_md));
            rep.eq("Eq(98)", nr, &(&(&eps_md * &td(r)) * &mt(&t_delta)));
            rep.eq("Eq(99)", nr, &(&(&eps_md * &td(r)) * &mt(&tp_delta)));
            rep.eq("Eq(100)", nrp, &(&(&tm(&mu_t) * &dt(r)) * &dm_eta));
            rep.eq("Eq(101)", nrp, &(&(&tm(&mu_tp) * &dt(r)) * &dm_eta));
            rep.eq(
                "Eq(102)",
                nrp,
                &(&(&dm_eps * &dt(rp)) * &t_delta.tensor(&id_m)),
            );
            rep.eq(
                "Eq(103)",
                nrp,
                &(&(&dm_eps * &dt(rp)) * &tp_delta.tensor(&id_m)),
            );
            rep.eq("Eq(104)", ns, &(&(&tm(&mu_t) * &dt(sp)) * &dm_eta));
            rep.eq("Eq(105)", ns, &(&(&tm(&mu_tp) * &dt(sp)) * &dm_eta));
            rep.eq(
                "Eq(106)",
                ns,
                &(&(&dm_eps * &dt(s)) * &t_delta.tensor(&id_m)),
            );
            rep.eq(
                "Eq(107)",
                ns,
                &(&(&dm_eps * &dt(s)) * &tp_delta.tensor(&id_m)),
            );
            rep.eq("Eq(108)", nsp, &(&(&mt(&mu_t) * &td(s)) * &eta_md));
            rep.eq("Eq(109)", nsp, &(&(&mt(&mu_tp) * &td(s)) * &eta_md));
            rep.eq("Eq(110)", nsp, &(&(&eps_md * &td(sp)) * &mt(&t_delta)));
            rep.eq("Eq(111)", nsp, &(&(&eps_md * &td(sp)) * &mt(&tp_delta)));
        }
        None => {
            for id in ["Eq(92):inv", "Eq(93):inv", "Eq(94):inv", "Eq(95):inv"] {
                rep.skipped(id, "antipode not invertible");
            }
            for n in 96..=111 {
                rep.skipped(&format!("Eq({n})"), "antipode not invertible");
            }
        }
    }

    rep
}

/// Definition 2.2(i): compatibility of the quadruple with a module action.
pub fn check_module_compat<F: Field>(
    w: &WeakOperatorQuad<F>,
    m: &ModuleStructure<F>,
) -> Result<Report, CoreError> {
    if m.carrier != w.carrier {
        return Err(CoreError::ObjectMismatch {
            context: "module compatibility".into(),
            left: format!("{:?}", m.carrier),
            right: format!("{:?}", w.carrier),
        });
    }
    let b = &*w.base;
    let id_d = b.id();
    let id_m = w.id_m();
    let (r, rp, s, sp) = (&w.r, &w.r_prime, &w.s, &w.s_prime);
    let (t, tp) = (b.t(), b.t_prime());
    let phi = &m.action;
    let tm = |x: &Morphism<F>| x.tensor(&id_m);
    let dt = |x: &Morphism<F>| id_d.tensor(x);

    let mut rep = Report::new();
    rep.eq(
        "i-1",
        &(r * &phi.tensor(&id_d)),
        &(&(&dt(phi) * &tm(t)) * &dt(r)),
    );
    rep.eq(
        "i-2",
        &(rp * &dt(phi)),
        &(&(&phi.tensor(&id_d) * &dt(rp)) * &tm(tp)),
    );
    rep.eq(
        "i-3",
        &(sp * &phi.tensor(&id_d)),
        &(&(&dt(phi) * &tm(tp)) * &dt(sp)),
    );
    rep.eq(
        "i-4",
        &(s * &dt(phi)),
        &(&(&phi.tensor(&id_d) * &dt(s)) * &tm(t)),
    );
    Ok(rep)
}

/// Definition 2.2(ii): compatibility of the quadruple with a comodule
/// coaction.
pub fn check_comodule_compat<F: Field>(
    w: &WeakOperatorQuad<F>,
    c: &ComoduleStructure<F>,
) -> Result<Report, CoreError> {
    if c.carrier != w.carrier {
        return Err(CoreError::ObjectMismatch {
            context: "comodule compatibility".into(),
            left: format!("{:?}", c.carrier),
            right: format!("{:?}", w.carrier),
        });
    }
    let b = &*w.base;
    let id_d = b.id();
    let id_m = w.id_m();
    let (r, rp, s, sp) = (&w.r, &w.r_prime, &w.s, &w.s_prime);
    let (t, tp) = (b.t(), b.t_prime());
    let rho = &c.coaction;
    let tm = |x: &Morphism<F>| x.tensor(&id_m);
    let dt = |x: &Morphism<F>| id_d.tensor(x);

    let mut rep = Report::new();
    rep.eq(
        "ii-1",
        &(&dt(rho) * r),
        &(&(&tm(t) * &dt(r)) * &rho.tensor(&id_d)),
    );
    rep.eq(
        "ii-2",
        &(&rho.tensor(&id_d) * rp),
        &(&(&dt(rp) * &tm(tp)) * &dt(rho)),
    );
    rep.eq(
        "ii-3",
        &(&dt(rho) * sp),
        &(&(&tm(tp) * &dt(sp)) * &rho.tensor(&id_d)),
    );
    rep.eq(
        "ii-4",
        &(&rho.tensor(&id_d) * s),
        &(&(&dt(s) * &tm(t)) * &dt(rho)),
    );
    Ok(rep)
}

/// Lemma 2.1: the four if-and-only-if pairs relating absorption of the
/// quadruple idempotents by a (co)action to a unit/counit normalization.
/// Each line records whether the two sides have the same truth value.
pub fn check_lemma21<F: Field>(
    w: &WeakOperatorQuad<F>,
    m: &ModuleStructure<F>,
    c: &ComoduleStructure<F>,
) -> Report {
    let b = &*w.base;
    let id_m = w.id_m();
    let (eta, eps) = (b.unit(), b.counit());
    let phi = &m.action;
    let rho = &c.coaction;
    let mt = |x: &Morphism<F>| id_m.tensor(x);

    let mut rep = Report::new();
    rep.iff(
        "Lemma2.1(i-1)",
        (phi * &w.nabla_s) == *phi,
        (&(phi * &w.s_prime) * &mt(eta)).is_identity(),
    );
    rep.iff(
        "Lemma2.1(i-2)",
        (phi * &w.nabla_r_prime) == *phi,
        (&(phi * &w.r) * &mt(eta)).is_identity(),
    );
    rep.iff(
        "Lemma2.1(ii-1)",
        (&w.nabla_s * rho) == *rho,
        (&(&mt(eps) * &w.s) * rho).is_identity(),
    );
    rep.iff(
        "Lemma2.1(ii-2)",
        (&w.nabla_r_prime * rho) == *rho,
        (&(&mt(eps) * &w.r_prime) * rho).is_identity(),
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Coalgebra};
    use crate::field::{Field, Rationals};
    use crate::groupoid::{groupoid_algebra, Groupoid};
    use crate::report::Status;

    fn q() -> Rationals {
        Rationals
    }

    fn rg2() -> Arc<Wbha<Rationals>> {
        Arc::new(groupoid_algebra(q(), &Groupoid::full(2)).unwrap())
    }

    #[test]
    fn operator_quadruple_on_base_passes() {
        let w = WeakOperatorQuad::from_wyb(rg2()).unwrap();
        let rep = check_wo(&w);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn flip_quadruple_passes_for_any_carrier() {
        let m = SpaceObject::with_dim("M", 3);
        let w = WeakOperatorQuad::flips(rg2(), &m).unwrap();
        let rep = check_wo(&w);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let derived = derived_wo_suite(&w);
        assert!(derived.passed(), "{:?}", derived.first_failure());
    }

    #[test]
    fn derived_suite_passes_on_base_quadruple() {
        let w = WeakOperatorQuad::from_wyb(rg2()).unwrap();
        let rep = derived_wo_suite(&w);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        // λ is an involution for groupoid algebras, so nothing is skipped.
        assert!(rep.lines.iter().all(|l| l.status != Status::Skipped));
    }

    #[test]
    fn duality_of_quadruples() {
        // A quadruple is a weak operator iff its dual is: the verdicts
        // agree on a valid instance and on a corrupted one.
        let base = rg2();
        let w = WeakOperatorQuad::from_wyb(base.clone()).unwrap();
        assert!(check_wo(&w).passed());
        assert!(check_wo(&w.dual()).passed());

        let mut r = w.r.clone();
        r.set_entry(0, 0, q().from_int(3));
        let broken = WeakOperatorQuad::new(
            base,
            w.carrier.clone(),
            r,
            w.r_prime.clone(),
            w.s.clone(),
            w.s_prime.clone(),
        )
        .unwrap();
        assert!(!check_wo(&broken).passed());
        assert!(!check_wo(&broken.dual()).passed());
    }

    #[test]
    fn corrupted_s_detected_with_witness() {
        let base = rg2();
        let orig = WeakOperatorQuad::from_wyb(base.clone()).unwrap();
        let mut s = orig.s.clone();
        s.set_entry(0, 1, q().from_int(1));
        let w = WeakOperatorQuad::new(
            base,
            orig.carrier.clone(),
            orig.r.clone(),
            orig.r_prime.clone(),
            s,
            orig.s_prime.clone(),
        )
        .unwrap();
        let rep = check_wo(&w);
        assert!(!rep.passed());
        assert!(rep.failures().any(|l| l.witness.is_some()));
    }

    #[test]
    fn regular_structures_compatible_and_lemma21_holds() {
        let base = rg2();
        let w = WeakOperatorQuad::from_wyb(base.clone()).unwrap();
        let module = ModuleStructure::new(
            base.algebra.clone(),
            base.carrier().clone(),
            base.mult().clone(),
        )
        .unwrap();
        let comodule = ComoduleStructure::new(
            base.coalgebra.clone(),
            base.carrier().clone(),
            base.comult().clone(),
        )
        .unwrap();
        assert!(check_module_compat(&w, &module).unwrap().passed());
        assert!(check_comodule_compat(&w, &comodule).unwrap().passed());
        let rep = check_lemma21(&w, &module, &comodule);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn lemma21_detects_broken_action_over_symmetric_base() {
        // Over a symmetric base the quadruple idempotents are identities, so
        // the left side of each module biconditional holds vacuously and a
        // broken action shows up as a mismatch of the two sides. The
        // both-sides-false case needs a genuinely braided base and is
        // exercised on the projection-induced instance.
        let base = rg2();
        let w = WeakOperatorQuad::from_wyb(base.clone()).unwrap();
        let zero_action = Morphism::zero(
            q(),
            base.carrier().tensor(base.carrier()),
            base.carrier().clone(),
        );
        let module =
            ModuleStructure::new(base.algebra.clone(), base.carrier().clone(), zero_action)
                .unwrap();
        let comodule = ComoduleStructure::new(
            base.coalgebra.clone(),
            base.carrier().clone(),
            base.comult().clone(),
        )
        .unwrap();
        let rep = check_lemma21(&w, &module, &comodule);
        assert_eq!(rep.line("Lemma2.1(i-1)").unwrap().status, Status::Fail);
        assert_eq!(rep.line("Lemma2.1(ii-1)").unwrap().status, Status::Pass);
    }

    #[test]
    fn closed_forms_skipped_without_invertible_antipode() {
        // Z/2-shaped structure with a rank-1 antipode; only the gating logic
        // is under test.
        let d = SpaceObject::new("X", vec!["e".into(), "g".into()]).unwrap();
        let k = SpaceObject::unit();
        let f = q();
        let unit = Morphism::from_triplets(f, k.clone(), d.clone(), [(0, 0, f.one())]).unwrap();
        let mut mult = Morphism::zero(f, d.tensor(&d), d.clone());
        for (r, c) in [(0, 0), (1, 1), (1, 2), (0, 3)] {
            mult.set_entry(r, c, f.one());
        }
        let mut counit = Morphism::zero(f, d.clone(), k);
        counit.set_entry(0, 0, f.one());
        counit.set_entry(0, 1, f.one());
        let mut comult = Morphism::zero(f, d.clone(), d.tensor(&d));
        comult.set_entry(0, 0, f.one());
        comult.set_entry(3, 1, f.one());
        let mut lam = Morphism::zero(f, d.clone(), d.clone());
        lam.set_entry(0, 0, f.one());
        lam.set_entry(0, 1, f.one());
        let wbha = Wbha::new(
            Algebra::new(d.clone(), unit, mult).unwrap(),
            Coalgebra::new(d.clone(), counit, comult).unwrap(),
            crate::wyb::WeakYangBaxter::flip(f, &d).unwrap(),
            lam,
        )
        .unwrap();
        assert!(!wbha.has_invertible_antipode());
        let w = WeakOperatorQuad::from_wyb(Arc::new(wbha)).unwrap();
        let rep = derived_wo_suite(&w);
        let skipped = rep
            .lines
            .iter()
            .filter(|l| l.status == Status::Skipped)
            .count();
        assert_eq!(skipped, 20);
    }
}
