//! Every invariant the constructions promise, as named pass/fail checks
//! with witnesses. `check_model` runs all of them that apply to a document.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::action::{
    action_groupoid_with_limit, check_hom_action_laws, embed_slice_co, embed_slice_contra,
    slice_source_functor, ActionGroupoid,
};
use crate::coset::{coset_action_groupoid_with_limit, coset_relation, sliced_coset_groupoid};
use crate::error::Result;
use crate::functor::Functor;
use crate::gdsl::Model;
use crate::groupoid::{Groupoid, ObjId};
use crate::kernel::induced_functor;
use crate::slice::{is_zero_object, slice};
use crate::subgroupoid::Subgroupoid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    /// What failed, named in the entity's own vocabulary.
    pub witness: Option<String>,
}

impl Check {
    fn new(suite: &str, name: impl Into<String>, outcome: std::result::Result<(), String>) -> Check {
        Check {
            suite: suite.to_string(),
            name: name.into(),
            passed: outcome.is_ok(),
            witness: outcome.err(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn same_maps(a: &Functor, b: &Functor) -> std::result::Result<(), String> {
    if a.object_map() != b.object_map() {
        return Err("object maps differ".into());
    }
    match (0..a.morphism_map().len()).find(|&i| a.morphism_map()[i] != b.morphism_map()[i]) {
        Some(i) => Err(format!(
            "images of {} differ",
            a.source().morphism_name(crate::groupoid::MorId(i))
        )),
        None => Ok(()),
    }
}

fn laws(f: &Functor) -> std::result::Result<(), String> {
    match f.law_violations().first() {
        Some(v) => Err(v.describe(f.source())),
        None => Ok(()),
    }
}

/// Axioms, the hom action, and for every object the slice and embedding
/// checks.
pub fn groupoid_suite(g: &Arc<Groupoid>, limit: usize) -> Result<Vec<Check>> {
    let mut out = vec![
        Check::new(
            "groupoid",
            format!("{}: axioms", g.name()),
            g.to_raw()
                .validate()
                .map(|_| ())
                .map_err(|vs| g.to_raw().describe(&vs[0])),
        ),
        Check::new("action", format!("{}: hom action laws", g.name()), check_hom_action_laws(g)),
    ];
    let action = action_groupoid_with_limit(g.clone(), limit)?;
    out.push(Check::new(
        "action",
        format!("{}: G//G axioms", g.name()),
        action
            .groupoid()
            .to_raw()
            .validate()
            .map(|_| ())
            .map_err(|vs| action.groupoid().to_raw().describe(&vs[0])),
    ));
    out.push(Check::new(
        "action",
        format!("{}: source functor", g.name()),
        laws(&action.source_functor()),
    ));
    let per_object: Vec<Vec<Check>> = g
        .objects()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&x| {
            let mut checks = slice_suite(g, x);
            checks.extend(embedding_suite(g, x, &action));
            checks
        })
        .collect();
    out.extend(per_object.into_iter().flatten());
    Ok(out)
}

/// Exactly one triangle between any two slice objects, counted in the base,
/// and `id_X` is a zero object.
pub fn slice_suite(g: &Arc<Groupoid>, x: ObjId) -> Vec<Check> {
    let s = slice(g.clone(), x).expect("object of g");
    let label = format!("{}/{}", g.name(), g.object_name(x));
    let mut unique = Ok(());
    'outer: for &f in s.base_objects() {
        for &f2 in s.base_objects() {
            let triangles: Vec<_> = g
                .hom(g.source(f), g.source(f2))
                .filter(|&u| g.comp(f2, u) == f)
                .collect();
            let stored = s.hom(f, f2).expect("slice objects").underlying;
            if triangles != [stored] {
                unique = Err(format!(
                    "{} triangles from {} to {}",
                    triangles.len(),
                    g.morphism_name(f),
                    g.morphism_name(f2)
                ));
                break 'outer;
            }
        }
    }
    let zero = s.zero_object();
    let zero_ok = if zero.object != g.identity(x) {
        Err(format!("zero object is {}", g.morphism_name(zero.object)))
    } else if !is_zero_object(s.groupoid(), s.object_of(zero.object).expect("id_X")) {
        Err("id_X is not initial and terminal".into())
    } else {
        Ok(())
    };
    vec![
        Check::new("slice", format!("{label}: unique triangles"), unique),
        Check::new("slice", format!("{label}: zero object"), zero_ok),
    ]
}

/// `ι_X` and `ι_X*` are functors, injective on objects, full and faithful,
/// and the source functors agree along `ι_X*`.
pub fn embedding_suite(g: &Arc<Groupoid>, x: ObjId, action: &ActionGroupoid) -> Vec<Check> {
    let s = slice(g.clone(), x).expect("object of g");
    let op = Arc::new(s.groupoid().opposite());
    let label = format!("{}/{}", g.name(), g.object_name(x));
    let mut out = Vec::new();
    for (which, iota) in [
        ("iota", embed_slice_contra(&s, action)),
        ("iota*", embed_slice_co(&s, op.clone(), action)),
    ] {
        out.push(Check::new("embedding", format!("{label}: {which} functor laws"), laws(&iota)));
        out.push(Check::new(
            "embedding",
            format!("{label}: {which} injective on objects"),
            iota.check_injective_on_objects().map_err(|(a, b)| {
                format!(
                    "{} and {} collide",
                    iota.source().object_name(a),
                    iota.source().object_name(b)
                )
            }),
        ));
        out.push(Check::new(
            "embedding",
            format!("{label}: {which} full"),
            iota.check_full().map_err(|w| {
                format!(
                    "{} is not hit",
                    iota.target().morphism_name(w.missed)
                )
            }),
        ));
        out.push(Check::new(
            "embedding",
            format!("{label}: {which} faithful"),
            iota.check_faithful().map_err(|w| {
                format!(
                    "{} and {} collide",
                    iota.source().morphism_name(w.first),
                    iota.source().morphism_name(w.second)
                )
            }),
        ));
    }
    // ι_X(⟨g⟩∘⟨g′⟩) = ι_X(⟨g′⟩)∘ι_X(⟨g⟩) in G⫽G, spelled out on pairs.
    let iota = embed_slice_contra(&s, action);
    let sg = s.groupoid();
    let ag = action.groupoid();
    let mut contra = Ok(());
    'outer: for t in sg.morphisms() {
        for &t2 in sg.outgoing(sg.target(t)) {
            let lhs = iota.on_morphism(sg.comp(t2, t));
            let rhs = ag.comp(iota.on_morphism(t), iota.on_morphism(t2));
            if lhs != rhs {
                contra = Err(format!(
                    "fails at ({}, {})",
                    sg.morphism_name(t2),
                    sg.morphism_name(t)
                ));
                break 'outer;
            }
        }
    }
    out.push(Check::new(
        "embedding",
        format!("{label}: iota contravariant on composites"),
        contra,
    ));
    let leg = embed_slice_co(&s, op.clone(), action)
        .then(&action.source_functor())
        .map_err(|e| e.to_string())
        .and_then(|composite| same_maps(&composite, &slice_source_functor(&s, op)));
    out.push(Check::new("embedding", format!("{label}: s . iota* = s"), leg));
    out
}

/// Coset relation, `ρ_H`, `(H:G)⫽G`, `π_H` and, for every object, the
/// sliced coset groupoid.
pub fn subgroupoid_suite(h: &Subgroupoid, label: &str, limit: usize) -> Result<Vec<Check>> {
    let g = h.parent();
    let rel = coset_relation(h);
    let mut out = vec![
        Check::new("coset", format!("{label}: equivalence"), rel.check_equivalence()),
        Check::new(
            "coset",
            format!("{label}: uniform class sources"),
            rel.check_uniform_sources()
                .map_err(|f| format!("{} has the wrong source", g.morphism_name(f))),
        ),
        Check::new("coset", format!("{label}: rho laws"), rel.check_rho_laws()),
    ];
    let coset = coset_action_groupoid_with_limit(&rel, limit)?;
    let action = action_groupoid_with_limit(g.clone(), limit)?;
    out.push(Check::new(
        "coset",
        format!("{label}: (H:G)//G axioms"),
        coset
            .groupoid()
            .to_raw()
            .validate()
            .map(|_| ())
            .map_err(|vs| coset.groupoid().to_raw().describe(&vs[0])),
    ));
    let pi = coset.projection(&action);
    out.push(Check::new("coset", format!("{label}: pi functor laws"), laws(&pi)));
    out.push(Check::new(
        "coset",
        format!("{label}: pi surjective on morphisms"),
        pi.check_surjective_on_morphisms()
            .map_err(|u| format!("{} has no preimage", pi.target().morphism_name(u))),
    ));
    out.push(Check::new(
        "coset",
        format!("{label}: pi surjective on objects"),
        pi.check_surjective_on_objects()
            .map_err(|y| format!("{} has no preimage", pi.target().object_name(y))),
    ));
    out.push(Check::new(
        "coset",
        format!("{label}: s . pi = s"),
        pi.then(&coset.source_functor())
            .map_err(|e| e.to_string())
            .and_then(|composite| same_maps(&composite, &action.source_functor())),
    ));
    if h.len() == g.object_count() {
        out.push(Check::new(
            "coset",
            format!("{label}: identities give an isomorphism"),
            pi.check_isomorphism(),
        ));
    }
    for x in g.objects() {
        let s = slice(g.clone(), x).expect("object of g");
        let op = Arc::new(s.groupoid().opposite());
        let sliced = sliced_coset_groupoid(&coset, &action, &s, op)?;
        let inclusion = &sliced.inclusion;
        let ok = if !sliced.groupoid.is_connected() {
            Err("not connected".to_string())
        } else {
            laws(inclusion).and_then(|_| {
                inclusion.check_full().map_err(|w| {
                    format!("{} is missing", coset.groupoid().morphism_name(w.missed))
                })
            })
        };
        out.push(Check::new(
            "coset",
            format!("{label} at {}: sliced coset groupoid connected and full", g.object_name(x)),
            ok,
        ));
    }
    Ok(out)
}

/// Functor laws, and at every object the kernel properties, the
/// image/partition and the image of the identity.
pub fn functor_suite(f: &Functor, label: &str) -> Result<Vec<Check>> {
    let mut out = vec![Check::new("functor", format!("{label}: laws"), laws(f))];
    let g = f.source();
    for x in g.objects() {
        let fx = induced_functor(f, x)?;
        let at = format!("{label} at {}", g.object_name(x));
        let props = fx.check_kernel_properties();
        let props_ok = if props.hold() {
            Ok(())
        } else if let Some(&m) = props.source_mismatches.first() {
            Err(format!("F s({}) is not F X", g.morphism_name(m)))
        } else if let Some(&m) = props.to_zero_mismatches.first() {
            Err(format!("triangle {} -> id_X does not map to the zero triangle", g.morphism_name(m)))
        } else {
            let p = props
                .pairs
                .iter()
                .find(|p| !p.maps_to_identity || !p.connecting_in_kernel)
                .expect("some pair fails");
            Err(format!(
                "pair ({}, {}) fails",
                g.morphism_name(p.f),
                g.morphism_name(p.g)
            ))
        };
        out.push(Check::new("kernel", format!("{at}: kernel properties"), props_ok));
        let partition = fx.image_and_partition();
        out.push(Check::new(
            "kernel",
            format!("{at}: image and partition"),
            fx.check_partition(&partition),
        ));
        let lemma = fx.check_image_of_identity();
        out.push(Check::new(
            "kernel",
            format!("{at}: full at X implies F id_X = id_FX"),
            if !lemma.full_at() || lemma.preserves_identity {
                Ok(())
            } else {
                Err("full at X but F id_X is not the identity".into())
            },
        ));
    }
    Ok(out)
}

/// Runs every applicable suite over the entities of a document, in
/// declaration order.
pub fn check_model(model: &Model, limit: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for (_, g) in model.groupoids() {
        checks.extend(groupoid_suite(g, limit)?);
    }
    for (name, f) in model.functors() {
        checks.extend(functor_suite(f, name)?);
    }
    for (name, h) in model.subgroupoids() {
        checks.extend(subgroupoid_suite(h, name, limit)?);
    }
    Ok(SuiteReport { checks })
}
