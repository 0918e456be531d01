//! Concrete instance generators: finite groupoids and their algebras, exact
//! factorizations and their crossing idempotents, and separable Frobenius
//! algebras with the induced weak Hopf structure on `A⊗A`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::algebra::{Algebra, Coalgebra};
use crate::error::CoreError;
use crate::field::Field;
use crate::morphism::Morphism;
use crate::object::SpaceObject;
use crate::report::Report;
use crate::wbha::Wbha;
use crate::wyb::{wyb_from_idempotent, WeakYangBaxter};

#[derive(Clone, Debug)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite groupoid given by explicit tables. Construction does not
/// validate; [`validate_groupoid`] checks every invariant by enumeration.
/// The declaration order of `arrows` fixes the basis order of the groupoid
/// algebra and hence all downstream matrices.
#[derive(Clone, Debug)]
pub struct Groupoid {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    /// `(later, first) -> later ∘ first`, for `s(later) = t(first)`.
    pub compose: BTreeMap<(usize, usize), usize>,
    /// object index -> identity arrow index
    pub identities: BTreeMap<usize, usize>,
    /// arrow index -> inverse arrow index
    pub inverses: BTreeMap<usize, usize>,
}

impl Groupoid {
    /// The groupoid with `n` objects and one invertible arrow between each
    /// ordered pair; its algebra is the algebra of `n×n` matrix units.
    pub fn full(n: usize) -> Groupoid {
        let objects: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        let mut index = BTreeMap::new();
        for i in 1..=n {
            for j in 1..=n {
                // E_ij : j -> i, so that E_ij ∘ E_jk = E_ik mirrors matrix units.
                index.insert((i, j), arrows.len());
                arrows.push(Arrow {
                    name: format!("E{i}{j}"),
                    src: j - 1,
                    tgt: i - 1,
                });
            }
        }
        let mut compose = BTreeMap::new();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    compose.insert((index[&(i, j)], index[&(j, k)]), index[&(i, k)]);
                }
            }
        }
        let identities = (0..n).map(|x| (x, index[&(x + 1, x + 1)])).collect();
        let inverses = index
            .iter()
            .map(|(&(i, j), &a)| (a, index[&(j, i)]))
            .collect();
        Groupoid {
            name: format!("full_groupoid_{n}"),
            objects,
            arrows,
            compose,
            identities,
            inverses,
        }
    }

    /// The cyclic group of order `n` as a one-object groupoid.
    pub fn cyclic(n: usize) -> Groupoid {
        assert!(n >= 1);
        let arrows: Vec<Arrow> = (0..n)
            .map(|k| Arrow {
                name: if k == 0 { "e".into() } else { format!("g{k}") },
                src: 0,
                tgt: 0,
            })
            .collect();
        let mut compose = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                compose.insert((a, b), (a + b) % n);
            }
        }
        let inverses = (0..n).map(|a| (a, (n - a) % n)).collect();
        Groupoid {
            name: format!("z{n}_group"),
            objects: vec!["*".into()],
            arrows,
            compose,
            identities: BTreeMap::from([(0, 0)]),
            inverses,
        }
    }

    pub fn trivial() -> Groupoid {
        let mut g = Groupoid::cyclic(1);
        g.name = "trivial_groupoid".into();
        g
    }

    pub fn empty() -> Groupoid {
        Groupoid {
            name: "empty_groupoid".into(),
            objects: vec![],
            arrows: vec![],
            compose: BTreeMap::new(),
            identities: BTreeMap::new(),
            inverses: BTreeMap::new(),
        }
    }

    /// Product groupoid: objects and arrows are pairs, everything acts
    /// componentwise.
    pub fn product(a: &Groupoid, b: &Groupoid) -> Groupoid {
        let objects: Vec<String> = a
            .objects
            .iter()
            .flat_map(|x| b.objects.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let nb = b.arrows.len();
        let obj = |xa: usize, xb: usize| xa * b.objects.len() + xb;
        let arrows: Vec<Arrow> = a
            .arrows
            .iter()
            .flat_map(|s| {
                b.arrows.iter().map(move |t| Arrow {
                    name: format!("({},{})", s.name, t.name),
                    src: obj(s.src, t.src),
                    tgt: obj(s.tgt, t.tgt),
                })
            })
            .collect();
        let mut compose = BTreeMap::new();
        for (&(a1, a2), &ar) in &a.compose {
            for (&(b1, b2), &br) in &b.compose {
                compose.insert((a1 * nb + b1, a2 * nb + b2), ar * nb + br);
            }
        }
        let identities = a
            .identities
            .iter()
            .flat_map(|(&xa, &ia)| {
                b.identities
                    .iter()
                    .map(move |(&xb, &ib)| (obj(xa, xb), ia * nb + ib))
            })
            .collect();
        let inverses = a
            .inverses
            .iter()
            .flat_map(|(&sa, &ia)| {
                b.inverses
                    .iter()
                    .map(move |(&sb, &ib)| (sa * nb + sb, ia * nb + ib))
            })
            .collect();
        Groupoid {
            name: format!("{}x{}", a.name, b.name),
            objects,
            arrows,
            compose,
            identities,
            inverses,
        }
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The underlying space of the groupoid algebra, one basis vector per
    /// arrow in declaration order.
    pub fn algebra_object(&self) -> Result<SpaceObject, CoreError> {
        SpaceObject::new(
            format!("R[{}]", self.name),
            self.arrows.iter().map(|a| a.name.clone()).collect(),
        )
    }
}

/// Check every groupoid invariant by enumeration.
pub fn validate_groupoid(g: &Groupoid) -> Report {
    let mut rep = Report::new();
    let n = g.arrows.len();

    let mut names = HashSet::new();
    let dup = g.arrows.iter().find(|a| !names.insert(&a.name));
    match dup {
        None => rep.pass("arrow-names-distinct"),
        Some(a) => rep.fail(
            "arrow-names-distinct",
            None,
            Some(format!("duplicate {}", a.name)),
        ),
    }

    let stray = g
        .arrows
        .iter()
        .find(|a| a.src >= g.objects.len() || a.tgt >= g.objects.len());
    match stray {
        None => rep.pass("arrow-endpoints"),
        Some(a) => rep.fail(
            "arrow-endpoints",
            None,
            Some(format!("{} endpoints out of range", a.name)),
        ),
    }

    // Composition defined exactly on composable pairs, with correct endpoints.
    let mut bad = None;
    'outer: for t in 0..n {
        for s in 0..n {
            let composable = g.arrows[t].src == g.arrows[s].tgt;
            match g.compose.get(&(t, s)) {
                Some(&r) => {
                    if !composable {
                        bad = Some(format!(
                            "{}∘{} defined but not composable",
                            g.arrows[t].name, g.arrows[s].name
                        ));
                        break 'outer;
                    }
                    if r >= n
                        || g.arrows[r].tgt != g.arrows[t].tgt
                        || g.arrows[r].src != g.arrows[s].src
                    {
                        bad = Some(format!(
                            "{}∘{} has wrong endpoints",
                            g.arrows[t].name, g.arrows[s].name
                        ));
                        break 'outer;
                    }
                }
                None => {
                    if composable {
                        bad = Some(format!(
                            "{}∘{} missing from table",
                            g.arrows[t].name, g.arrows[s].name
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    match bad {
        None => rep.pass("compose-table"),
        Some(msg) => rep.fail("compose-table", None, Some(msg)),
    }

    let mut assoc_bad = None;
    'triples: for a in 0..n {
        for b in 0..n {
            let Some(&ab) = g.compose.get(&(a, b)) else {
                continue;
            };
            for c in 0..n {
                let Some(&bc) = g.compose.get(&(b, c)) else {
                    continue;
                };
                if g.compose.get(&(ab, c)) != g.compose.get(&(a, bc)) {
                    assoc_bad = Some(format!(
                        "({0}∘{1})∘{2} differs from {0}∘({1}∘{2})",
                        g.arrows[a].name, g.arrows[b].name, g.arrows[c].name
                    ));
                    break 'triples;
                }
            }
        }
    }
    match assoc_bad {
        None => rep.pass("assoc"),
        Some(msg) => rep.fail("assoc", None, Some(msg)),
    }

    let mut id_bad = None;
    for x in 0..g.objects.len() {
        match g.identities.get(&x) {
            None => {
                id_bad = Some(format!("object {} has no identity", g.objects[x]));
                break;
            }
            Some(&i) => {
                if i >= n || g.arrows[i].src != x || g.arrows[i].tgt != x {
                    id_bad = Some(format!("identity of {} has wrong endpoints", g.objects[x]));
                    break;
                }
            }
        }
    }
    if id_bad.is_none() {
        for s in 0..n {
            let idt = g.identities.get(&g.arrows[s].tgt).copied();
            let ids = g.identities.get(&g.arrows[s].src).copied();
            if idt.and_then(|i| g.compose.get(&(i, s)).copied()) != Some(s)
                || ids.and_then(|i| g.compose.get(&(s, i)).copied()) != Some(s)
            {
                id_bad = Some(format!("identities not neutral on {}", g.arrows[s].name));
                break;
            }
        }
    }
    match id_bad {
        None => rep.pass("identities"),
        Some(msg) => rep.fail("identities", None, Some(msg)),
    }

    let mut inv_bad = None;
    for s in 0..n {
        match g.inverses.get(&s) {
            None => {
                inv_bad = Some(format!("{} has no inverse", g.arrows[s].name));
                break;
            }
            Some(&i) => {
                let left = g.compose.get(&(i, s)).copied();
                let right = g.compose.get(&(s, i)).copied();
                if i >= n
                    || left != g.identities.get(&g.arrows[s].src).copied()
                    || right != g.identities.get(&g.arrows[s].tgt).copied()
                {
                    inv_bad = Some(format!("inverse of {} fails", g.arrows[s].name));
                    break;
                }
            }
        }
    }
    match inv_bad {
        None => rep.pass("inverses"),
        Some(msg) => rep.fail("inverses", None, Some(msg)),
    }

    rep
}

/// The groupoid algebra as a weak Hopf algebra: product is
/// composition-or-zero, unit is the sum of the identity arrows, every arrow
/// is grouplike, the antipode inverts arrows, and the operator is the flip.
pub fn groupoid_algebra<F: Field>(field: F, g: &Groupoid) -> Result<Wbha<F>, CoreError> {
    let validation = validate_groupoid(g);
    if let Some(line) = validation.first_failure() {
        return Err(CoreError::InvalidGroupoid(format!(
            "{}: {}",
            line.id,
            line.note.clone().unwrap_or_default()
        )));
    }
    let d = g.algebra_object()?;
    let k = SpaceObject::unit();
    let n = g.arrows.len();
    let one = field.one();

    let unit = Morphism::from_triplets(
        field.clone(),
        k.clone(),
        d.clone(),
        g.identities.values().map(|&i| (i, 0, one.clone())),
    )?;
    let mult = Morphism::from_triplets(
        field.clone(),
        d.tensor(&d),
        d.clone(),
        g.compose
            .iter()
            .map(|(&(t, s), &r)| (r, t * n + s, one.clone())),
    )?;
    let counit = Morphism::from_triplets(
        field.clone(),
        d.clone(),
        k,
        (0..n).map(|s| (0, s, one.clone())),
    )?;
    let comult = Morphism::from_triplets(
        field.clone(),
        d.clone(),
        d.tensor(&d),
        (0..n).map(|s| (s * n + s, s, one.clone())),
    )?;
    let antipode = Morphism::from_triplets(
        field.clone(),
        d.clone(),
        d.clone(),
        g.inverses.iter().map(|(&s, &i)| (i, s, one.clone())),
    )?;

    let algebra = Algebra::new(d.clone(), unit, mult)?;
    let coalgebra = Coalgebra::new(d.clone(), counit, comult)?;
    let wyb = WeakYangBaxter::flip(field, &d)?;
    Wbha::new(algebra, coalgebra, wyb, antipode)
}

/// An exact factorization of a groupoid: two wide subgroupoids such that
/// every arrow decomposes uniquely as (horizontal) ∘ (vertical).
#[derive(Clone, Debug)]
pub struct ExactFactorization {
    pub groupoid: Groupoid,
    pub h_arrows: BTreeSet<usize>,
    pub v_arrows: BTreeSet<usize>,
    /// Per arrow: the unique `(σ_H, σ_V)` with `σ = σ_H ∘ σ_V`.
    pub decomposition: Vec<(usize, usize)>,
}

impl ExactFactorization {
    pub fn new(groupoid: Groupoid, h_names: &[&str], v_names: &[&str]) -> Result<Self, CoreError> {
        let validation = validate_groupoid(&groupoid);
        if let Some(line) = validation.first_failure() {
            return Err(CoreError::InvalidGroupoid(line.id.clone()));
        }
        let resolve = |names: &[&str]| -> Result<BTreeSet<usize>, CoreError> {
            names
                .iter()
                .map(|n| {
                    groupoid.arrow_index(n).ok_or_else(|| {
                        CoreError::NotExactFactorization(format!("unknown arrow {n}"))
                    })
                })
                .collect()
        };
        let h_arrows = resolve(h_names)?;
        let v_arrows = resolve(v_names)?;

        for (set, tag) in [(&h_arrows, "H"), (&v_arrows, "V")] {
            for &i in groupoid.identities.values() {
                if !set.contains(&i) {
                    return Err(CoreError::NotExactFactorization(format!(
                        "{tag} is not wide: missing identity {}",
                        groupoid.arrows[i].name
                    )));
                }
            }
            for &a in set.iter() {
                let inv = groupoid.inverses[&a];
                if !set.contains(&inv) {
                    return Err(CoreError::NotExactFactorization(format!(
                        "{tag} not closed under inverses at {}",
                        groupoid.arrows[a].name
                    )));
                }
                for &b in set.iter() {
                    if let Some(&c) = groupoid.compose.get(&(a, b)) {
                        if !set.contains(&c) {
                            return Err(CoreError::NotExactFactorization(format!(
                                "{tag} not closed under composition at {}∘{}",
                                groupoid.arrows[a].name, groupoid.arrows[b].name
                            )));
                        }
                    }
                }
            }
        }

        let mut decomposition = Vec::with_capacity(groupoid.arrows.len());
        for s in 0..groupoid.arrows.len() {
            let mut found: Option<(usize, usize)> = None;
            for &h in &h_arrows {
                for &v in &v_arrows {
                    if groupoid.compose.get(&(h, v)) == Some(&s) {
                        if let Some((h0, v0)) = found {
                            return Err(CoreError::NotExactFactorization(format!(
                                "{} decomposes as {}∘{} and as {}∘{}",
                                groupoid.arrows[s].name,
                                groupoid.arrows[h0].name,
                                groupoid.arrows[v0].name,
                                groupoid.arrows[h].name,
                                groupoid.arrows[v].name
                            )));
                        }
                        found = Some((h, v));
                    }
                }
            }
            match found {
                Some(p) => decomposition.push(p),
                None => {
                    return Err(CoreError::NotExactFactorization(format!(
                        "{} has no decomposition",
                        groupoid.arrows[s].name
                    )))
                }
            }
        }
        Ok(ExactFactorization {
            groupoid,
            h_arrows,
            v_arrows,
            decomposition,
        })
    }

    /// The factorization with horizontal part the identities and vertical
    /// part the whole groupoid.
    pub fn identities_and_all(groupoid: Groupoid) -> Result<Self, CoreError> {
        let ids: Vec<String> = groupoid
            .identities
            .values()
            .map(|&i| groupoid.arrows[i].name.clone())
            .collect();
        let all: Vec<String> = groupoid.arrows.iter().map(|a| a.name.clone()).collect();
        let h: Vec<&str> = ids.iter().map(|s| s.as_str()).collect();
        let v: Vec<&str> = all.iter().map(|s| s.as_str()).collect();
        ExactFactorization::new(groupoid, &h, &v)
    }
}

/// The crossing `Ω(σ⊗τ) = σ_H ⊗ τ_V` of an exact factorization, as a weak
/// Yang-Baxter operator with `t = t′ = ∇ = Ω`.
pub fn exact_factorization_operator<F: Field>(
    field: F,
    ef: &ExactFactorization,
) -> Result<WeakYangBaxter<F>, CoreError> {
    let d = ef.groupoid.algebra_object()?;
    let n = ef.groupoid.arrows.len();
    let one = field.one();
    let mut triplets = Vec::with_capacity(n * n);
    for s in 0..n {
        let sh = ef.decomposition[s].0;
        for t in 0..n {
            let tv = ef.decomposition[t].1;
            triplets.push((sh * n + tv, s * n + t, one.clone()));
        }
    }
    let omega = Morphism::from_triplets(field, d.tensor(&d), d.tensor(&d), triplets)?;
    wyb_from_idempotent(d, &omega)
}

/// A separable Frobenius algebra: compatible algebra and coalgebra
/// structures with `μ∘δ = id`, all verified at construction.
#[derive(Clone, Debug)]
pub struct FrobeniusSeparableAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    pub coalgebra: Coalgebra<F>,
}

impl<F: Field> FrobeniusSeparableAlgebra<F> {
    pub fn new(algebra: Algebra<F>, coalgebra: Coalgebra<F>) -> Result<Self, CoreError> {
        if algebra.carrier != coalgebra.carrier {
            return Err(CoreError::NotSeparableFrobenius("carriers differ".into()));
        }
        let fail = |what: &str| CoreError::NotSeparableFrobenius(what.to_string());
        if !crate::algebra::check_algebra(&algebra).passed() {
            return Err(fail("algebra axioms"));
        }
        if !crate::algebra::check_coalgebra(&coalgebra).passed() {
            return Err(fail("coalgebra axioms"));
        }
        let id = algebra.id();
        let (mu, delta) = (&algebra.mult, &coalgebra.comult);
        let frob_mid = delta * mu;
        if (&mu.tensor(&id) * &id.tensor(delta)) != frob_mid {
            return Err(fail("Frobenius law (left)"));
        }
        if (&id.tensor(mu) * &delta.tensor(&id)) != frob_mid {
            return Err(fail("Frobenius law (right)"));
        }
        if !(mu * delta).is_identity() {
            return Err(fail("separability"));
        }
        Ok(FrobeniusSeparableAlgebra { algebra, coalgebra })
    }

    /// `M_n` with trace-form counit scaled so that `μ∘δ = id`:
    /// `ε = n·tr`, `δ(E_ij) = (1/n) Σ_k E_ik ⊗ E_kj`.
    pub fn matrix_units(field: F, n: usize) -> Result<Self, CoreError> {
        let labels = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| format!("E{i}{j}")))
            .collect::<Vec<_>>();
        let a = SpaceObject::new(format!("M{n}"), labels)?;
        let k = SpaceObject::unit();
        let dim = n * n;
        let one = field.one();
        let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);

        let unit = Morphism::from_triplets(
            field.clone(),
            k.clone(),
            a.clone(),
            (1..=n).map(|i| (idx(i, i), 0, one.clone())),
        )?;
        let mut mult_triplets = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                for l in 1..=n {
                    // E_ij · E_jl = E_il
                    mult_triplets.push((idx(i, l), idx(i, j) * dim + idx(j, l), one.clone()));
                }
            }
        }
        let mult = Morphism::from_triplets(field.clone(), a.tensor(&a), a.clone(), mult_triplets)?;

        let n_scalar = field.from_int(n as i64);
        let counit = Morphism::from_triplets(
            field.clone(),
            a.clone(),
            k,
            (1..=n).map(|i| (0, idx(i, i), n_scalar.clone())),
        )?;
        let n_inv = field.inv(&n_scalar)?;
        let mut comult_triplets = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                for kk in 1..=n {
                    comult_triplets.push((idx(i, kk) * dim + idx(kk, j), idx(i, j), n_inv.clone()));
                }
            }
        }
        let comult =
            Morphism::from_triplets(field.clone(), a.clone(), a.tensor(&a), comult_triplets)?;

        FrobeniusSeparableAlgebra::new(
            Algebra::new(a.clone(), unit, mult)?,
            Coalgebra::new(a, counit, comult)?,
        )
    }
}

/// The weak Hopf algebra on `A⊗A` induced by a separable Frobenius algebra
/// in the symmetric ambient category.
pub fn frobenius_weak_hopf<F: Field>(
    a: &FrobeniusSeparableAlgebra<F>,
) -> Result<Wbha<F>, CoreError> {
    let field = a.algebra.field().clone();
    let c = Morphism::flip(field.clone(), &a.algebra.carrier, &a.algebra.carrier);
    let id = a.algebra.id();
    let (mu, eta) = (&a.algebra.mult, &a.algebra.unit);
    let (eps, delta) = (&a.coalgebra.counit, &a.coalgebra.comult);
    let carrier = a.algebra.carrier.tensor(&a.algebra.carrier);

    let unit = eta.tensor(eta);
    let mult = &(mu * &c).tensor(mu) * &id.tensor(&c).tensor(&id);
    let counit = eps * mu;
    let delta_eta = delta * eta;
    let comult = id.tensor(&delta_eta).tensor(&id);
    // λ = (ε_{A⊗A} ⊗ A⊗A) ∘ (A⊗c⊗A) ∘ ((δ∘η) ⊗ c)
    let antipode =
        &(&counit.tensor(&id).tensor(&id) * &id.tensor(&c).tensor(&id)) * &delta_eta.tensor(&c);

    let algebra = Algebra::new(carrier.clone(), unit, mult)?;
    let coalgebra = Coalgebra::new(carrier.clone(), counit, comult)?;
    let wyb = WeakYangBaxter::flip(field, &carrier)?;
    Wbha::new(algebra, coalgebra, wyb, antipode)
}

/// The closed form of the target projection on `A⊗A`:
/// `Π^L = (((ε∘μ)⊗A) ∘ (A⊗c) ∘ (δ⊗A)) ⊗ η`.
pub fn frobenius_pi_l_formula<F: Field>(a: &FrobeniusSeparableAlgebra<F>) -> Morphism<F> {
    let field = a.algebra.field().clone();
    let c = Morphism::flip(field, &a.algebra.carrier, &a.algebra.carrier);
    let id = a.algebra.id();
    let eps_mu = &a.coalgebra.counit * &a.algebra.mult;
    let first = &(&eps_mu.tensor(&id) * &id.tensor(&c)) * &a.coalgebra.comult.tensor(&id);
    first.tensor(&a.algebra.unit)
}
