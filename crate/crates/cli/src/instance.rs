//! Instance loading: builtin corpus names and structure files.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use ydcheck_core::algebra::{Algebra, Coalgebra};
use ydcheck_core::groupoid::{
    groupoid_algebra, validate_groupoid, Arrow, FrobeniusSeparableAlgebra, Groupoid,
};
use ydcheck_core::projection::{groupoid_product_projection, Projection};
use ydcheck_core::weak_op::WeakOperatorQuad;
use ydcheck_core::wyb::WeakYangBaxter;
use ydcheck_core::yd::YdModule;
use ydcheck_core::{Field, Morphism, SpaceObject, Wbha};

use crate::schema::{
    parse_matrix, parse_vector, GroupoidFile, InstanceFile, LoadError, ProjectionFile,
    QuadrupleFile, WbhaFile, YdModuleFile,
};

pub use ydcheck_core::wbha::Wbha as CoreWbha;

#[derive(Clone)]
pub struct LoadedInstance<F: Field> {
    pub name: String,
    pub kind: InstanceKind<F>,
}

#[derive(Clone)]
#[allow(clippy::large_enum_variant)]
pub enum InstanceKind<F: Field> {
    /// A weak braided Hopf algebra, with provenance retained when it came
    /// from a separable Frobenius algebra.
    Algebra {
        wbha: Arc<Wbha<F>>,
        frobenius: Option<FrobeniusSeparableAlgebra<F>>,
    },
    Projection {
        projection: Projection<F>,
    },
    Module {
        module: YdModule<F>,
    },
}

pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "full_groupoid_2",
        "full_groupoid_3",
        "z2_group",
        "z3_group",
        "trivial_groupoid",
        "empty_groupoid",
        "frobenius_m2",
        "proj_trivial_fg2",
        "proj_product_fg2_z2",
    ]
}

fn algebra_instance<F: Field>(name: &str, wbha: Wbha<F>) -> LoadedInstance<F> {
    LoadedInstance {
        name: name.to_string(),
        kind: InstanceKind::Algebra {
            wbha: Arc::new(wbha),
            frobenius: None,
        },
    }
}

fn builtin<F: Field>(field: &F, name: &str) -> Result<Option<LoadedInstance<F>>, LoadError> {
    let inst = match name {
        "full_groupoid_2" => {
            algebra_instance(name, groupoid_algebra(field.clone(), &Groupoid::full(2))?)
        }
        "full_groupoid_3" => {
            algebra_instance(name, groupoid_algebra(field.clone(), &Groupoid::full(3))?)
        }
        "z2_group" => {
            algebra_instance(name, groupoid_algebra(field.clone(), &Groupoid::cyclic(2))?)
        }
        "z3_group" => {
            algebra_instance(name, groupoid_algebra(field.clone(), &Groupoid::cyclic(3))?)
        }
        "trivial_groupoid" => {
            algebra_instance(name, groupoid_algebra(field.clone(), &Groupoid::trivial())?)
        }
        "empty_groupoid" => {
            algebra_instance(name, groupoid_algebra(field.clone(), &Groupoid::empty())?)
        }
        "frobenius_m2" => {
            let frob = FrobeniusSeparableAlgebra::matrix_units(field.clone(), 2)?;
            let wbha = ydcheck_core::groupoid::frobenius_weak_hopf(&frob)?;
            LoadedInstance {
                name: name.to_string(),
                kind: InstanceKind::Algebra {
                    wbha: Arc::new(wbha),
                    frobenius: Some(frob),
                },
            }
        }
        "proj_trivial_fg2" => {
            let base = Arc::new(groupoid_algebra(field.clone(), &Groupoid::full(2))?);
            LoadedInstance {
                name: name.to_string(),
                kind: InstanceKind::Projection {
                    projection: Projection::trivial(base),
                },
            }
        }
        "proj_product_fg2_z2" => {
            let projection = groupoid_product_projection(
                field.clone(),
                &Groupoid::full(2),
                &Groupoid::cyclic(2),
            )?;
            LoadedInstance {
                name: name.to_string(),
                kind: InstanceKind::Projection { projection },
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(inst))
}

/// Resolve an instance reference: builtin corpus name or path to a
/// structure file.
pub fn load_instance<F: Field>(field: &F, reference: &str) -> Result<LoadedInstance<F>, LoadError> {
    if let Some(inst) = builtin(field, reference)? {
        return Ok(inst);
    }
    let path = Path::new(reference);
    if !path.exists() {
        return Err(LoadError::Validation {
            what: reference.to_string(),
            detail: "not a builtin instance and no such file".to_string(),
        });
    }
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: reference.to_string(),
        source,
    })?;
    let file: InstanceFile = serde_json::from_str(&text).map_err(|source| LoadError::Parse {
        path: reference.to_string(),
        source,
    })?;
    match file {
        InstanceFile::Groupoid(g) => load_groupoid(field, g),
        InstanceFile::Wbha(w) => load_wbha(field, w),
        InstanceFile::YdModule(m) => load_yd_module(field, m),
        InstanceFile::Projection(p) => load_projection(field, p),
    }
}

fn load_groupoid<F: Field>(field: &F, file: GroupoidFile) -> Result<LoadedInstance<F>, LoadError> {
    let object_index: BTreeMap<&str, usize> = file
        .objects
        .iter()
        .enumerate()
        .map(|(i, o)| (o.as_str(), i))
        .collect();
    let arrow_index: BTreeMap<&str, usize> = file
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.name.as_str(), i))
        .collect();
    let obj = |label: &str| {
        object_index
            .get(label)
            .copied()
            .ok_or_else(|| LoadError::Validation {
                what: file.name.clone(),
                detail: format!("unknown object {label}"),
            })
    };
    let arr = |label: &str| {
        arrow_index
            .get(label)
            .copied()
            .ok_or_else(|| LoadError::Validation {
                what: file.name.clone(),
                detail: format!("unknown arrow {label}"),
            })
    };

    let arrows = file
        .arrows
        .iter()
        .map(|a| {
            Ok(Arrow {
                name: a.name.clone(),
                src: obj(&a.src)?,
                tgt: obj(&a.tgt)?,
            })
        })
        .collect::<Result<Vec<_>, LoadError>>()?;
    let mut compose = BTreeMap::new();
    for [later, first, result] in &file.compose {
        compose.insert((arr(later)?, arr(first)?), arr(result)?);
    }
    let mut identities = BTreeMap::new();
    for (o, a) in &file.identities {
        identities.insert(obj(o)?, arr(a)?);
    }
    let mut inverses = BTreeMap::new();
    for (a, b) in &file.inverses {
        inverses.insert(arr(a)?, arr(b)?);
    }
    let groupoid = Groupoid {
        name: file.name.clone(),
        objects: file.objects,
        arrows,
        compose,
        identities,
        inverses,
    };
    let validation = validate_groupoid(&groupoid);
    if let Some(line) = validation.first_failure() {
        return Err(LoadError::Validation {
            what: groupoid.name.clone(),
            detail: format!("{}: {}", line.id, line.note.clone().unwrap_or_default()),
        });
    }
    Ok(algebra_instance(
        &file.name.clone(),
        groupoid_algebra(field.clone(), &groupoid)?,
    ))
}

fn load_wbha<F: Field>(field: &F, file: WbhaFile) -> Result<LoadedInstance<F>, LoadError> {
    let d = SpaceObject::new(file.name.clone(), file.basis.clone())?;
    let k = SpaceObject::unit();
    let dd = d.tensor(&d);

    let unit_col = parse_vector(field, "unit", &file.unit)?;
    let unit = Morphism::from_triplets(
        field.clone(),
        k.clone(),
        d.clone(),
        unit_col.into_iter().enumerate().map(|(r, v)| (r, 0, v)),
    )?;
    let counit_row = parse_vector(field, "counit", &file.counit)?;
    let counit = Morphism::from_triplets(
        field.clone(),
        d.clone(),
        k,
        counit_row.into_iter().enumerate().map(|(c, v)| (0, c, v)),
    )?;
    let mult = parse_matrix(field, "mult", &file.mult, &dd, &d)?;
    let comult = parse_matrix(field, "comult", &file.comult, &d, &dd)?;
    let antipode = parse_matrix(field, "antipode", &file.antipode, &d, &d)?;

    let wyb = match (&file.t, &file.t_prime, &file.nabla) {
        (None, None, None) => WeakYangBaxter::flip(field.clone(), &d)?,
        (Some(t), Some(tp), Some(nab)) => WeakYangBaxter::new(
            d.clone(),
            parse_matrix(field, "t", t, &dd, &dd)?,
            parse_matrix(field, "t_prime", tp, &dd, &dd)?,
            parse_matrix(field, "nabla", nab, &dd, &dd)?,
        )?,
        (Some(t), None, Some(nab)) => WeakYangBaxter::from_t_and_nabla(
            d.clone(),
            parse_matrix(field, "t", t, &dd, &dd)?,
            parse_matrix(field, "nabla", nab, &dd, &dd)?,
        )?,
        _ => {
            return Err(LoadError::Validation {
                what: file.name,
                detail: "operator data must be absent, (t, nabla), or (t, t_prime, nabla)".into(),
            })
        }
    };
    let wbha = Wbha::new(
        Algebra::new(d.clone(), unit, mult)?,
        Coalgebra::new(d, counit, comult)?,
        wyb,
        antipode,
    )?;
    Ok(algebra_instance(&file.name, wbha))
}

fn load_yd_module<F: Field>(field: &F, file: YdModuleFile) -> Result<LoadedInstance<F>, LoadError> {
    let base = match load_instance(field, &file.base)?.kind {
        InstanceKind::Algebra { wbha, .. } => wbha,
        _ => {
            return Err(LoadError::Validation {
                what: file.name,
                detail: "base must resolve to a weak braided Hopf algebra instance".into(),
            })
        }
    };
    let carrier = SpaceObject::new(file.name.clone(), file.carrier.clone())?;
    let dm = base.carrier().tensor(&carrier);
    let action = parse_matrix(field, "action", &file.action, &dm, &carrier)?;
    let coaction = parse_matrix(field, "coaction", &file.coaction, &carrier, &dm)?;
    let quad = match &file.quadruple {
        QuadrupleFile::Directive(word) if word == "flip" => {
            WeakOperatorQuad::flips(base.clone(), &carrier)?
        }
        QuadrupleFile::Directive(word) => {
            return Err(LoadError::Validation {
                what: file.name,
                detail: format!("unknown quadruple directive {word:?}"),
            })
        }
        QuadrupleFile::Explicit {
            r,
            r_prime,
            s,
            s_prime,
        } => {
            let md = carrier.tensor(base.carrier());
            let dm2 = base.carrier().tensor(&carrier);
            WeakOperatorQuad::new(
                base.clone(),
                carrier.clone(),
                parse_matrix(field, "r", r, &md, &dm2)?,
                parse_matrix(field, "r_prime", r_prime, &dm2, &md)?,
                parse_matrix(field, "s", s, &dm2, &md)?,
                parse_matrix(field, "s_prime", s_prime, &md, &dm2)?,
            )?
        }
    };
    let module = YdModule::new(base, carrier, action, coaction, quad)?;
    Ok(LoadedInstance {
        name: file.name,
        kind: InstanceKind::Module { module },
    })
}

fn load_projection<F: Field>(
    field: &F,
    file: ProjectionFile,
) -> Result<LoadedInstance<F>, LoadError> {
    let resolve = |reference: &str| -> Result<Arc<Wbha<F>>, LoadError> {
        match load_instance(field, reference)?.kind {
            InstanceKind::Algebra { wbha, .. } => Ok(wbha),
            _ => Err(LoadError::Validation {
                what: file.name.clone(),
                detail: format!("{reference} must resolve to a weak braided Hopf algebra"),
            }),
        }
    };
    let base = resolve(&file.base)?;
    let total = resolve(&file.total)?;
    let f = parse_matrix(field, "f", &file.f, base.carrier(), total.carrier())?;
    let g = parse_matrix(field, "g", &file.g, total.carrier(), base.carrier())?;
    let projection = Projection::new(base, total, f, g)?;
    Ok(LoadedInstance {
        name: file.name,
        kind: InstanceKind::Projection { projection },
    })
}
