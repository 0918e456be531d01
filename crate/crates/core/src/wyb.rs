//! Weak Yang-Baxter operators: a pair `(t, t′)` on `D⊗D` that is mutually
//! inverse on the image of an associated idempotent `∇`, plus constructors
//! for the idempotent examples (interchange-idempotents, algebra and
//! coalgebra crossings).

use crate::algebra::{expect_boundary, Algebra, Coalgebra};
use crate::error::CoreError;
use crate::field::Field;
use crate::morphism::Morphism;
use crate::object::SpaceObject;
use crate::report::Report;
use crate::split::{split_idempotent, SplitIdempotent};

/// `(t, t′, ∇)` on a carrier `D`, with the splitting of `∇` cached.
#[derive(Clone, Debug)]
pub struct WeakYangBaxter<F: Field> {
    pub carrier: SpaceObject,
    pub t: Morphism<F>,
    pub t_prime: Morphism<F>,
    pub nabla: Morphism<F>,
    pub split: SplitIdempotent<F>,
}

impl<F: Field> WeakYangBaxter<F> {
    /// Shape-checks the data and splits `∇`; the axioms themselves are the
    /// business of [`check_wyb`].
    pub fn new(
        carrier: SpaceObject,
        t: Morphism<F>,
        t_prime: Morphism<F>,
        nabla: Morphism<F>,
    ) -> Result<Self, CoreError> {
        let sq = carrier.tensor(&carrier);
        expect_boundary("wyb t", &t, &sq, &sq)?;
        expect_boundary("wyb t'", &t_prime, &sq, &sq)?;
        expect_boundary("wyb nabla", &nabla, &sq, &sq)?;
        let split = split_idempotent(&nabla, &format!("({0}×{0})", carrier.label()))?;
        Ok(WeakYangBaxter {
            carrier,
            t,
            t_prime,
            nabla,
            split,
        })
    }

    /// The symmetric operator: `t = t′ = flip`, `∇ = id`.
    pub fn flip(field: F, carrier: &SpaceObject) -> Result<Self, CoreError> {
        let fl = Morphism::flip(field.clone(), carrier, carrier);
        let id = Morphism::identity(field, &carrier.tensor(carrier));
        WeakYangBaxter::new(carrier.clone(), fl.clone(), fl, id)
    }

    /// Completes `(t, ∇)` to a weak Yang-Baxter operator by inverting
    /// `p∘t∘i` on the image of `∇`, which is exactly what axiom (a3) demands
    /// of `t′`.
    pub fn from_t_and_nabla(
        carrier: SpaceObject,
        t: Morphism<F>,
        nabla: Morphism<F>,
    ) -> Result<Self, CoreError> {
        let split = split_idempotent(&nabla, &format!("({0}×{0})", carrier.label()))?;
        let absorbed = t.compose(&nabla)?;
        if !absorbed.same_entries(&t) || !nabla.compose(&t)?.same_entries(&t) {
            return Err(CoreError::WybAxiomViolation {
                identity: "a2-4".into(),
            });
        }
        let restricted = split.proj.compose(&t)?.compose(&split.inj)?;
        let inv = restricted
            .inverse()
            .map_err(|_| CoreError::WybAxiomViolation {
                identity: "a3-1".into(),
            })?;
        let t_prime = split.inj.compose(&inv)?.compose(&split.proj)?;
        WeakYangBaxter::new(carrier, t, t_prime, nabla)
    }

    /// The operator with `t` and `t′` exchanged, for the swap-symmetry check.
    pub fn swapped(&self) -> Self {
        let mut out = self.clone();
        std::mem::swap(&mut out.t, &mut out.t_prime);
        out
    }

    pub fn field(&self) -> &F {
        self.t.field()
    }

    pub fn is_flip(&self) -> bool {
        let fl = Morphism::flip(self.field().clone(), &self.carrier, &self.carrier);
        self.t.same_entries(&fl) && self.t_prime.same_entries(&fl)
    }
}

/// An idempotent `Ω` satisfying the interchange identity
/// `(Ω⊗D)∘(D⊗Ω) = (D⊗Ω)∘(Ω⊗D)` is a weak Yang-Baxter operator with
/// `t = t′ = ∇ = Ω`.
pub fn wyb_from_idempotent<F: Field>(
    carrier: SpaceObject,
    omega: &Morphism<F>,
) -> Result<WeakYangBaxter<F>, CoreError> {
    let field = omega.field().clone();
    let square = omega.compose(omega)?;
    if let Some((row, col, lhs, rhs)) = square.first_diff(omega) {
        return Err(CoreError::NotIdempotent {
            row,
            col,
            square: field.render(&lhs),
            original: field.render(&rhs),
        });
    }
    let id = Morphism::identity(field.clone(), &carrier);
    let lhs = &omega.tensor(&id) * &id.tensor(omega);
    let rhs = &id.tensor(omega) * &omega.tensor(&id);
    if let Some((row, col, l, r)) = lhs.first_diff(&rhs) {
        return Err(CoreError::Eq12Violation {
            row,
            col,
            lhs: field.render(&l),
            rhs: field.render(&r),
        });
    }
    WeakYangBaxter::new(carrier, omega.clone(), omega.clone(), omega.clone())
}

/// `Ω = η ⊗ (μ ∘ flip)` for an algebra in the symmetric ambient category.
/// This one fails the interchange identity yet is a weak Yang-Baxter
/// operator, so it gets its own constructor with a full axiom check.
pub fn wyb_algebra_idempotent<F: Field>(a: &Algebra<F>) -> Result<WeakYangBaxter<F>, CoreError> {
    let field = a.field().clone();
    let fl = Morphism::flip(field, &a.carrier, &a.carrier);
    let omega = a.unit.tensor(&(&a.mult * &fl));
    let wyb = WeakYangBaxter::new(a.carrier.clone(), omega.clone(), omega.clone(), omega)?;
    let rep = check_wyb(&wyb);
    match rep.first_failure() {
        None => Ok(wyb),
        Some(line) => Err(CoreError::WybAxiomViolation {
            identity: line.id.clone(),
        }),
    }
}

/// `Ω′ = ε ⊗ (flip ∘ δ)` for a coalgebra in the symmetric ambient category.
pub fn wyb_coalgebra_idempotent<F: Field>(
    c: &Coalgebra<F>,
) -> Result<WeakYangBaxter<F>, CoreError> {
    let field = c.field().clone();
    let fl = Morphism::flip(field, &c.carrier, &c.carrier);
    let omega = c.counit.tensor(&(&fl * &c.comult));
    let wyb = WeakYangBaxter::new(c.carrier.clone(), omega.clone(), omega.clone(), omega)?;
    let rep = check_wyb(&wyb);
    match rep.first_failure() {
        None => Ok(wyb),
        Some(line) => Err(CoreError::WybAxiomViolation {
            identity: line.id.clone(),
        }),
    }
}

/// The full axiom report: (a1), (a2-1)–(a2-4), (a3-1), (a3-2), the mutual
/// absorption `t′∘t = t∘t′ = ∇` and the four mixed shuffles Eq(3)–Eq(6).
///
/// The idempotent conditions (a2-1)/(a2-2) are the sandwiched exchange
/// rules, the form under which the unit-crossing idempotents of an algebra
/// or coalgebra qualify even though they fail the plain interchange
/// identity; the plain interchange is exactly the extra hypothesis of the
/// idempotent constructor.
pub fn check_wyb<F: Field>(w: &WeakYangBaxter<F>) -> Report {
    let mut rep = Report::new();
    let field = w.field().clone();
    let id = Morphism::identity(field, &w.carrier);
    let (t, tp, nabla) = (&w.t, &w.t_prime, &w.nabla);
    let td = |x: &Morphism<F>| x.tensor(&id); // x ⊗ D
    let dt = |x: &Morphism<F>| id.tensor(x); // D ⊗ x

    rep.eq(
        "a1",
        &(&(&td(t) * &dt(t)) * &td(t)),
        &(&(&dt(t) * &td(t)) * &dt(t)),
    );
    rep.eq("a2-idem", &(nabla * nabla), nabla);
    rep.eq(
        "a2-1",
        &(&(&dt(nabla) * &td(t)) * &dt(t)),
        &(&(&td(t) * &dt(t)) * &td(nabla)),
    );
    rep.eq(
        "a2-2",
        &(&(&td(nabla) * &dt(t)) * &td(t)),
        &(&(&dt(t) * &td(t)) * &dt(nabla)),
    );
    rep.eq("a2-3", &(t * nabla), t);
    rep.eq("a2-4", &(nabla * t), t);

    let (p, i) = (&w.split.proj, &w.split.inj);
    let restricted = &(p * t) * i;
    let restricted_prime = &(p * tp) * i;
    let id_image = Morphism::identity(w.field().clone(), &w.split.image);
    rep.eq("a3-1-left", &(&restricted_prime * &restricted), &id_image);
    rep.eq("a3-1-right", &(&restricted * &restricted_prime), &id_image);
    rep.eq_all("a3-2", &[&(tp * nabla), &(nabla * tp), tp]);

    rep.eq_all("Eq(2)", &[&(tp * t), &(t * tp), nabla]);
    rep.eq(
        "Eq(3)",
        &(&(&dt(t) * &td(t)) * &dt(tp)),
        &(&(&td(tp) * &dt(t)) * &td(t)),
    );
    rep.eq(
        "Eq(4)",
        &(&(&td(t) * &dt(t)) * &td(tp)),
        &(&(&dt(tp) * &td(t)) * &dt(t)),
    );
    rep.eq(
        "Eq(5)",
        &(&(&dt(tp) * &td(tp)) * &dt(t)),
        &(&(&td(t) * &dt(tp)) * &td(tp)),
    );
    rep.eq(
        "Eq(6)",
        &(&(&td(tp) * &dt(tp)) * &td(t)),
        &(&(&dt(t) * &td(tp)) * &dt(tp)),
    );
    rep
}
