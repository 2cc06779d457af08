//! The action groupoid `G⫽G` of the right action of `G` on itself by
//! precomposition, the embeddings of slices into it, and the source functors.

use std::sync::Arc;

use crate::error::Result;
use crate::functor::{Functor, Variance};
use crate::groupoid::{Groupoid, MorId, Morphism, ObjId, DEFAULT_SIZE_LIMIT};
use crate::slice::SliceGroupoid;

/// `Hom(X, −)`: every morphism with source `X`, ascending.
pub fn hom_action(g: &Groupoid, x: ObjId) -> Result<Vec<MorId>> {
    g.check_object(x)?;
    Ok(g.outgoing(x).to_vec())
}

/// The map `Hom(Y, −) → Hom(X, −)`, `h ↦ h∘f`, induced by `f: X → Y`.
/// Returned as `(h, h∘f)` pairs in the order of `Hom(Y, −)`.
pub fn hom_action_map(g: &Groupoid, f: MorId) -> Result<Vec<(MorId, MorId)>> {
    g.check_morphism(f)?;
    Ok(g
        .outgoing(g.target(f))
        .iter()
        .map(|&h| (h, g.comp(h, f)))
        .collect())
}

/// Checks `map(id) = id` and `map(g′∘g) = map(g)∘map(g′)` for all composable pairs.
pub fn check_hom_action_laws(g: &Groupoid) -> std::result::Result<(), String> {
    let apply = |f: MorId, h: MorId| g.comp(h, f);
    for x in g.objects() {
        let id = g.identity(x);
        if let Some(&h) = g.outgoing(x).iter().find(|&&h| apply(id, h) != h) {
            return Err(format!(
                "Hom(?,-)(id_{}) moves {}",
                g.object_name(x),
                g.morphism_name(h)
            ));
        }
    }
    for f in g.morphisms() {
        for &f2 in g.outgoing(g.target(f)) {
            let composite = g.comp(f2, f);
            for &h in g.outgoing(g.target(f2)) {
                if apply(composite, h) != apply(f, apply(f2, h)) {
                    return Err(format!(
                        "Hom(?,-) is not contravariant at ({}, {}) on {}",
                        g.morphism_name(f2),
                        g.morphism_name(f),
                        g.morphism_name(h)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// `G⫽G`. Objects are the morphisms of `G` (same ids). Morphisms are pairs
/// `(g, f)` with `t(f) = s(g)`, going `g → g∘f`, ordered by `(g, f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionGroupoid {
    base: Arc<Groupoid>,
    groupoid: Arc<Groupoid>,
    pairs: Vec<(MorId, MorId)>,
    /// First pair id for each `g`.
    offsets: Vec<usize>,
}

pub fn action_groupoid(base: Arc<Groupoid>) -> Result<ActionGroupoid> {
    action_groupoid_with_limit(base, DEFAULT_SIZE_LIMIT)
}

pub fn action_groupoid_with_limit(base: Arc<Groupoid>, limit: usize) -> Result<ActionGroupoid> {
    let g = &*base;
    let mut offsets = Vec::with_capacity(g.morphism_count() + 1);
    let mut total = 0;
    for h in g.morphisms() {
        offsets.push(total);
        total += g.incoming(g.source(h)).len();
    }
    offsets.push(total);
    g.guard_size(total, limit)?;

    let mut pairs = Vec::with_capacity(total);
    let mut morphisms = Vec::with_capacity(total);
    for h in g.morphisms() {
        for &f in g.incoming(g.source(h)) {
            pairs.push((h, f));
            morphisms.push(Morphism {
                name: format!("({},{})", g.morphism_name(h), g.morphism_name(f)),
                source: ObjId(h.0),
                target: ObjId(g.comp(h, f).0),
            });
        }
    }
    let index = |h: MorId, f: MorId| {
        let pos = g
            .incoming(g.source(h))
            .binary_search(&f)
            .expect("f ends at the source of h");
        MorId(offsets[h.0] + pos)
    };
    let groupoid = Groupoid::assemble(
        format!("{0}//{0}", g.name()),
        g.morphisms().map(|h| g.morphism_name(h).to_string()).collect(),
        morphisms,
        |second, first| {
            // (h∘f, f′)∘(h, f) = (h, f∘f′)
            let (h, f) = pairs[first.0];
            let (_, f2) = pairs[second.0];
            index(h, g.comp(f, f2))
        },
        g.morphisms().map(|h| index(h, g.identity(g.source(h)))).collect(),
        pairs
            .iter()
            .map(|&(h, f)| index(g.comp(h, f), g.inverse(f)))
            .collect(),
    );
    Ok(ActionGroupoid {
        base,
        groupoid: Arc::new(groupoid),
        pairs,
        offsets,
    })
}

impl ActionGroupoid {
    pub fn base(&self) -> &Arc<Groupoid> {
        &self.base
    }

    pub fn groupoid(&self) -> &Arc<Groupoid> {
        &self.groupoid
    }

    /// The pair `(g, f)` behind an action morphism.
    pub fn pair(&self, m: MorId) -> (MorId, MorId) {
        self.pairs[m.0]
    }

    /// Id of the action morphism `(g, f)`, if `t(f) = s(g)`.
    pub fn morphism_of(&self, g: MorId, f: MorId) -> Option<MorId> {
        let b = &*self.base;
        if g.0 >= b.morphism_count() || f.0 >= b.morphism_count() {
            return None;
        }
        b.incoming(b.source(g))
            .binary_search(&f)
            .ok()
            .map(|pos| MorId(self.offsets[g.0] + pos))
    }

    /// Object of `G⫽G` standing for the base morphism `g`.
    pub fn object_of(&self, g: MorId) -> ObjId {
        ObjId(g.0)
    }

    /// The source functor `G⫽G → G`: `g ↦ s(g)`, `(g, f) ↦ f⁻¹`.
    pub fn source_functor(&self) -> Functor {
        let b = &*self.base;
        Functor::trusted(
            self.groupoid.clone(),
            self.base.clone(),
            Variance::Covariant,
            b.morphisms().map(|g| b.source(g)).collect(),
            self.pairs.iter().map(|&(_, f)| b.inverse(f)).collect(),
        )
    }
}

/// `ι_X: G/X → G⫽G`, contravariant: `f ↦ f`, `⟨g⟩: f → f′ ↦ (f′, g): f′ → f`.
pub fn embed_slice_contra(slice: &SliceGroupoid, action: &ActionGroupoid) -> Functor {
    let (objects, morphisms) = embedding_maps(slice, action);
    Functor::trusted(
        slice.groupoid().clone(),
        action.groupoid().clone(),
        Variance::Contravariant,
        objects,
        morphisms,
    )
}

/// `ι_X*: (G/X)^op → G⫽G`, covariant, with the same assignments as `ι_X`.
/// `opposite_slice` must be `slice.groupoid().opposite()`.
pub fn embed_slice_co(
    slice: &SliceGroupoid,
    opposite_slice: Arc<Groupoid>,
    action: &ActionGroupoid,
) -> Functor {
    let (objects, morphisms) = embedding_maps(slice, action);
    Functor::trusted(
        opposite_slice,
        action.groupoid().clone(),
        Variance::Covariant,
        objects,
        morphisms,
    )
}

fn embedding_maps(slice: &SliceGroupoid, action: &ActionGroupoid) -> (Vec<ObjId>, Vec<MorId>) {
    assert!(
        Arc::ptr_eq(slice.base(), action.base()) || **slice.base() == **action.base(),
        "slice and action groupoid over different bases"
    );
    let objects = slice
        .base_objects()
        .iter()
        .map(|&f| action.object_of(f))
        .collect();
    let morphisms = slice
        .morphisms()
        .map(|t| {
            action
                .morphism_of(t.to, t.underlying)
                .expect("t(g) = s(f′) for a slice triangle")
        })
        .collect();
    (objects, morphisms)
}

/// The source functor `(G/X)^op → G`: `f ↦ s(f)`, `⟨g⟩ ↦ g⁻¹`.
pub fn slice_source_functor(slice: &SliceGroupoid, opposite_slice: Arc<Groupoid>) -> Functor {
    let b = slice.base();
    Functor::trusted(
        opposite_slice,
        b.clone(),
        Variance::Covariant,
        slice.base_objects().iter().map(|&f| b.source(f)).collect(),
        slice.morphisms().map(|t| b.inverse(t.underlying)).collect(),
    )
}
