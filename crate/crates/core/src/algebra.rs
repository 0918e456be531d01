//! Algebras, coalgebras, (co)modules and convolution, with exact axiom
//! predicates.
//!
//! Axioms are checked lazily by the `check_*` functions rather than enforced
//! at construction: the adjoint-action machinery deliberately builds
//! non-unital "actions" and needs the raw structures.

use crate::error::CoreError;
use crate::field::Field;
use crate::morphism::Morphism;
use crate::object::SpaceObject;
use crate::report::Report;

/// `(A, η, μ)`: a unit `K → A` and a product `A⊗A → A`.
#[derive(Clone, Debug)]
pub struct Algebra<F: Field> {
    pub carrier: SpaceObject,
    pub unit: Morphism<F>,
    pub mult: Morphism<F>,
}

impl<F: Field> Algebra<F> {
    pub fn new(
        carrier: SpaceObject,
        unit: Morphism<F>,
        mult: Morphism<F>,
    ) -> Result<Self, CoreError> {
        expect_boundary("algebra unit", &unit, &SpaceObject::unit(), &carrier)?;
        expect_boundary("algebra mult", &mult, &carrier.tensor(&carrier), &carrier)?;
        Ok(Algebra {
            carrier,
            unit,
            mult,
        })
    }

    pub fn field(&self) -> &F {
        self.mult.field()
    }

    pub fn id(&self) -> Morphism<F> {
        Morphism::identity(self.field().clone(), &self.carrier)
    }
}

/// `(D, ε, δ)`: a counit `D → K` and a coproduct `D → D⊗D`.
#[derive(Clone, Debug)]
pub struct Coalgebra<F: Field> {
    pub carrier: SpaceObject,
    pub counit: Morphism<F>,
    pub comult: Morphism<F>,
}

impl<F: Field> Coalgebra<F> {
    pub fn new(
        carrier: SpaceObject,
        counit: Morphism<F>,
        comult: Morphism<F>,
    ) -> Result<Self, CoreError> {
        expect_boundary("coalgebra counit", &counit, &carrier, &SpaceObject::unit())?;
        expect_boundary(
            "coalgebra comult",
            &comult,
            &carrier,
            &carrier.tensor(&carrier),
        )?;
        Ok(Coalgebra {
            carrier,
            counit,
            comult,
        })
    }

    pub fn field(&self) -> &F {
        self.comult.field()
    }

    pub fn id(&self) -> Morphism<F> {
        Morphism::identity(self.field().clone(), &self.carrier)
    }
}

/// A left module `(M, φ)` over an algebra: `φ : D⊗M → M`.
#[derive(Clone, Debug)]
pub struct ModuleStructure<F: Field> {
    pub base: Algebra<F>,
    pub carrier: SpaceObject,
    pub action: Morphism<F>,
}

impl<F: Field> ModuleStructure<F> {
    pub fn new(
        base: Algebra<F>,
        carrier: SpaceObject,
        action: Morphism<F>,
    ) -> Result<Self, CoreError> {
        expect_boundary(
            "module action",
            &action,
            &base.carrier.tensor(&carrier),
            &carrier,
        )?;
        Ok(ModuleStructure {
            base,
            carrier,
            action,
        })
    }
}

/// A left comodule `(M, ϱ)` over a coalgebra: `ϱ : M → D⊗M`.
#[derive(Clone, Debug)]
pub struct ComoduleStructure<F: Field> {
    pub base: Coalgebra<F>,
    pub carrier: SpaceObject,
    pub coaction: Morphism<F>,
}

impl<F: Field> ComoduleStructure<F> {
    pub fn new(
        base: Coalgebra<F>,
        carrier: SpaceObject,
        coaction: Morphism<F>,
    ) -> Result<Self, CoreError> {
        expect_boundary(
            "comodule coaction",
            &coaction,
            &carrier,
            &base.carrier.tensor(&carrier),
        )?;
        Ok(ComoduleStructure {
            base,
            carrier,
            coaction,
        })
    }
}

pub(crate) fn expect_boundary<F: Field>(
    context: &str,
    m: &Morphism<F>,
    source: &SpaceObject,
    target: &SpaceObject,
) -> Result<(), CoreError> {
    if m.source() != source || m.target() != target {
        return Err(CoreError::ObjectMismatch {
            context: context.into(),
            left: format!("{:?} -> {:?}", m.source(), m.target()),
            right: format!("{source:?} -> {target:?}"),
        });
    }
    Ok(())
}

/// Unitality (both sides) and associativity.
pub fn check_algebra<F: Field>(a: &Algebra<F>) -> Report {
    let mut rep = Report::new();
    let id = a.id();
    let (unit, mult) = (&a.unit, &a.mult);
    rep.eq("unit-right", &(mult * &id.tensor(unit)), &id);
    rep.eq("unit-left", &(mult * &unit.tensor(&id)), &id);
    rep.eq(
        "assoc",
        &(mult * &id.tensor(mult)),
        &(mult * &mult.tensor(&id)),
    );
    rep
}

/// Counitality (both sides) and coassociativity.
pub fn check_coalgebra<F: Field>(c: &Coalgebra<F>) -> Report {
    let mut rep = Report::new();
    let id = c.id();
    let (counit, comult) = (&c.counit, &c.comult);
    rep.eq("counit-left", &(&counit.tensor(&id) * comult), &id);
    rep.eq("counit-right", &(&id.tensor(counit) * comult), &id);
    rep.eq(
        "coassoc",
        &(&comult.tensor(&id) * comult),
        &(&id.tensor(comult) * comult),
    );
    rep
}

/// `φ∘(η⊗M) = id` and `φ∘(D⊗φ) = φ∘(μ⊗M)`.
pub fn check_module<F: Field>(m: &ModuleStructure<F>) -> Report {
    let mut rep = Report::new();
    let id_m = Morphism::identity(m.action.field().clone(), &m.carrier);
    let id_d = m.base.id();
    let phi = &m.action;
    rep.eq("module-unit", &(phi * &m.base.unit.tensor(&id_m)), &id_m);
    rep.eq(
        "module-assoc",
        &(phi * &id_d.tensor(phi)),
        &(phi * &m.base.mult.tensor(&id_m)),
    );
    rep
}

/// `(ε⊗M)∘ϱ = id` and `(D⊗ϱ)∘ϱ = (δ⊗M)∘ϱ`.
pub fn check_comodule<F: Field>(m: &ComoduleStructure<F>) -> Report {
    let mut rep = Report::new();
    let id_m = Morphism::identity(m.coaction.field().clone(), &m.carrier);
    let id_d = m.base.id();
    let rho = &m.coaction;
    rep.eq(
        "comodule-counit",
        &(&m.base.counit.tensor(&id_m) * rho),
        &id_m,
    );
    rep.eq(
        "comodule-coassoc",
        &(&id_d.tensor(rho) * rho),
        &(&m.base.comult.tensor(&id_m) * rho),
    );
    rep
}

/// Convolution `α ∧ β = μ_A ∘ (α⊗β) ∘ δ_B` of morphisms `B → A`.
pub fn convolution<F: Field>(
    alpha: &Morphism<F>,
    beta: &Morphism<F>,
    a: &Algebra<F>,
    c: &Coalgebra<F>,
) -> Result<Morphism<F>, CoreError> {
    expect_boundary("convolution lhs", alpha, &c.carrier, &a.carrier)?;
    expect_boundary("convolution rhs", beta, &c.carrier, &a.carrier)?;
    a.mult.compose(&alpha.tensor(beta))?.compose(&c.comult)
}

/// Whether `f : M → N` is a morphism of left modules: `φ_N∘(D⊗f) = f∘φ_M`.
pub fn is_module_morphism<F: Field>(
    f: &Morphism<F>,
    from: &ModuleStructure<F>,
    to: &ModuleStructure<F>,
) -> bool {
    let id_d = from.base.id();
    (&to.action * &id_d.tensor(f)) == (f * &from.action)
}

/// Whether `f : M → N` is a morphism of left comodules: `ϱ_N∘f = (D⊗f)∘ϱ_M`.
pub fn is_comodule_morphism<F: Field>(
    f: &Morphism<F>,
    from: &ComoduleStructure<F>,
    to: &ComoduleStructure<F>,
) -> bool {
    let id_d = from.base.id();
    (&to.coaction * f) == (&id_d.tensor(f) * &from.coaction)
}
