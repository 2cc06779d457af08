//! The slice groupoid `G/X`.
//!
//! Objects are the morphisms `f: Y → X` of `G`. A morphism `f → f′` is a
//! commuting triangle carrying an underlying `g` with `f = f′∘g`. In a
//! groupoid there is exactly one, with `g = f′⁻¹∘f`.
//!
//! Triangles compose by pasting: `f → f′` followed by `f′ → f″` has
//! underlying `g′∘g`. Written left to right this is `⟨g⟩ then ⟨g′⟩`; the
//! groupoid table of the slice uses the same "first argument last" order as
//! everywhere else, so `slice.comp(⟨g′⟩, ⟨g⟩) = ⟨g′∘g⟩`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, MorId, Morphism, ObjId};

/// A triangle `from → to` over the apex, with `from = to ∘ underlying`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SliceMorphism {
    /// Id in the slice groupoid.
    pub id: MorId,
    /// Base morphism acting as the domain object.
    pub from: MorId,
    /// Base morphism acting as the codomain object.
    pub to: MorId,
    /// Base morphism making the triangle commute.
    pub underlying: MorId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceGroupoid {
    base: Arc<Groupoid>,
    apex: ObjId,
    groupoid: Arc<Groupoid>,
    /// Base morphism of each slice object, ascending.
    objects: Vec<MorId>,
    /// Underlying base morphism of each slice morphism.
    underlying: Vec<MorId>,
}

/// Builds `G/X`. Objects are ordered by base id; the morphism `i → j`
/// between slice objects has id `i·n + j`.
pub fn slice(base: Arc<Groupoid>, apex: ObjId) -> Result<SliceGroupoid> {
    base.check_object(apex)?;
    let objects: Vec<MorId> = base.incoming(apex).to_vec();
    let n = objects.len();
    let g = &*base;
    let mut morphisms = Vec::with_capacity(n * n);
    let mut underlying = Vec::with_capacity(n * n);
    for (i, &f) in objects.iter().enumerate() {
        for (j, &f2) in objects.iter().enumerate() {
            let u = g.comp(g.inverse(f2), f);
            morphisms.push(Morphism {
                name: format!("<{}>:{}->{}", g.morphism_name(u), g.morphism_name(f), g.morphism_name(f2)),
                source: ObjId(i),
                target: ObjId(j),
            });
            underlying.push(u);
        }
    }
    let id = |i: usize, j: usize| MorId(i * n + j);
    let groupoid = Groupoid::assemble(
        format!("{}/{}", g.name(), g.object_name(apex)),
        objects.iter().map(|&f| g.morphism_name(f).to_string()).collect(),
        morphisms,
        |second, first| id(first.0 / n, second.0 % n),
        (0..n).map(|i| id(i, i)).collect(),
        (0..n * n).map(|k| id(k % n, k / n)).collect(),
    );
    Ok(SliceGroupoid {
        base,
        apex,
        groupoid: Arc::new(groupoid),
        objects,
        underlying,
    })
}

impl SliceGroupoid {
    pub fn base(&self) -> &Arc<Groupoid> {
        &self.base
    }

    pub fn apex(&self) -> ObjId {
        self.apex
    }

    pub fn groupoid(&self) -> &Arc<Groupoid> {
        &self.groupoid
    }

    /// Base morphisms serving as objects, ascending.
    pub fn base_objects(&self) -> &[MorId] {
        &self.objects
    }

    pub fn base_morphism_of(&self, x: ObjId) -> MorId {
        self.objects[x.0]
    }

    /// Slice object for a base morphism into the apex.
    pub fn object_of(&self, f: MorId) -> Result<ObjId> {
        self.objects
            .binary_search(&f)
            .map(ObjId)
            .map_err(|_| Error::UnknownObject(format!("{f} is not a morphism into the apex")))
    }

    pub fn underlying(&self, m: MorId) -> MorId {
        self.underlying[m.0]
    }

    pub fn morphism(&self, m: MorId) -> SliceMorphism {
        let n = self.objects.len();
        SliceMorphism {
            id: m,
            from: self.objects[m.0 / n],
            to: self.objects[m.0 % n],
            underlying: self.underlying[m.0],
        }
    }

    pub fn morphisms(&self) -> impl Iterator<Item = SliceMorphism> + '_ {
        self.groupoid.morphisms().map(|m| self.morphism(m))
    }

    /// The unique triangle `f → f′`.
    pub fn hom(&self, f: MorId, f2: MorId) -> Result<SliceMorphism> {
        let (i, j) = (self.object_of(f)?, self.object_of(f2)?);
        Ok(self.morphism(MorId(i.0 * self.objects.len() + j.0)))
    }

    /// Pastes `first: f → f′` and `second: f′ → f″` into `f → f″` with
    /// underlying `g′∘g`, computed in the base.
    pub fn paste(&self, first: SliceMorphism, second: SliceMorphism) -> Result<SliceMorphism> {
        if first.to != second.from {
            return Err(Error::NotComposable {
                g: self.groupoid.morphism_name(second.id).to_string(),
                f: self.groupoid.morphism_name(first.id).to_string(),
            });
        }
        let underlying = self.base.comp(second.underlying, first.underlying);
        let id = self.hom(first.from, second.to)?.id;
        Ok(SliceMorphism {
            id,
            from: first.from,
            to: second.to,
            underlying,
        })
    }

    /// `id_X` with its triangles `⟨g⁻¹⟩: id_X → g` and `⟨g⟩: g → id_X`.
    pub fn zero_object(&self) -> ZeroObject {
        let zero = self.base.identity(self.apex);
        let into = self
            .objects
            .iter()
            .map(|&g| self.hom(zero, g).expect("apex identity is an object"))
            .collect();
        let out_of = self
            .objects
            .iter()
            .map(|&g| self.hom(g, zero).expect("apex identity is an object"))
            .collect();
        ZeroObject {
            object: zero,
            from_zero: into,
            to_zero: out_of,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroObject {
    /// `id_X`, as a base morphism.
    pub object: MorId,
    /// One triangle `id_X → g` per slice object `g`, in object order.
    pub from_zero: Vec<SliceMorphism>,
    /// One triangle `g → id_X` per slice object `g`, in object order.
    pub to_zero: Vec<SliceMorphism>,
}

/// Whether `z` is initial and terminal: exactly one morphism to and from every object.
pub fn is_zero_object(g: &Groupoid, z: ObjId) -> bool {
    g.objects()
        .all(|a| g.hom(z, a).count() == 1 && g.hom(a, z).count() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic, disjoint_union, pair_groupoid};
    use crate::groupoid::connected_component;

    fn names(s: &SliceGroupoid) -> Vec<&str> {
        s.base_objects()
            .iter()
            .map(|&f| s.base().morphism_name(f))
            .collect()
    }

    #[test]
    fn pair_groupoid_slice() {
        let s = slice(Arc::new(pair_groupoid(2)), ObjId(0)).unwrap();
        assert_eq!(names(&s), vec!["id_O1", "p2_1"]);
        assert_eq!(s.groupoid().morphism_count(), 4);
        assert_eq!(s.zero_object().object, MorId(0));
    }

    #[test]
    fn z4_slice_homs() {
        let z4 = Arc::new(cyclic(4));
        let m = |n: &str| z4.morphism_by_name(n).unwrap();
        let s = slice(z4.clone(), ObjId(0)).unwrap();
        assert_eq!(s.groupoid().object_count(), 4);
        assert_eq!(s.groupoid().morphism_count(), 16);
        assert_eq!(s.hom(m("a"), m("a3")).unwrap().underlying, m("a2"));
        for f in s.base_objects().to_vec() {
            assert_eq!(s.hom(f, f).unwrap().underlying, z4.identity(ObjId(0)));
            assert_eq!(s.hom(f, m("e")).unwrap().underlying, f);
        }
        let zero = s.zero_object();
        assert_eq!(zero.object, m("e"));
        assert_eq!(zero.from_zero[1].underlying, m("a3"));
    }

    #[test]
    fn pasting() {
        let z4 = Arc::new(cyclic(4));
        let m = |n: &str| z4.morphism_by_name(n).unwrap();
        let s = slice(z4.clone(), ObjId(0)).unwrap();
        // e → a3 has underlying a, a3 → a has underlying a2
        let first = s.hom(m("e"), m("a3")).unwrap();
        let second = s.hom(m("a3"), m("a")).unwrap();
        assert_eq!((first.underlying, second.underlying), (m("a"), m("a2")));
        let pasted = s.paste(first, second).unwrap();
        assert_eq!(pasted.underlying, m("a3"));
        assert_eq!(pasted, s.hom(m("e"), m("a")).unwrap());
        let back = s.hom(m("a3"), m("e")).unwrap();
        assert_eq!(s.paste(first, back).unwrap(), s.hom(m("e"), m("e")).unwrap());
        assert!(s.paste(second, second).is_err());
    }

    #[test]
    fn slices_ignore_other_components() {
        let g = Arc::new(disjoint_union(&cyclic(2), &cyclic(3)));
        let s = slice(g.clone(), ObjId(0)).unwrap();
        assert_eq!(s.groupoid().object_count(), 2);
        let comp = connected_component(&g, ObjId(0)).unwrap();
        let s2 = slice(Arc::new(comp.groupoid), ObjId(0)).unwrap();
        assert_eq!(s.groupoid().to_raw().objects, s2.groupoid().to_raw().objects);
    }

    #[test]
    fn unknown_apex() {
        assert!(slice(Arc::new(cyclic(2)), ObjId(1)).is_err());
    }
}
