//! The functor `F_X: G/X → H/F X` induced by `F: G → H`, its kernel, its
//! image, and the partition of `G/X` into preimage classes.
//!
//! Kernel and image are plain collections of slice objects. Image members are
//! compared on the nose, as morphisms of `H`.

use serde::Serialize;

use crate::error::Result;
use crate::functor::{Functor, Variance};
use crate::groupoid::{MorId, ObjId};
use crate::slice::{slice, SliceGroupoid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedFunctor {
    base: Functor,
    apex: ObjId,
    source: SliceGroupoid,
    target: SliceGroupoid,
    functor: Functor,
}

/// Builds `F_X`: `f ↦ F f` on objects and `⟨g⟩ ↦ ⟨F g⟩` on triangles.
pub fn induced_functor(base: &Functor, apex: ObjId) -> Result<InducedFunctor> {
    assert_eq!(base.variance(), Variance::Covariant, "slices need a covariant functor");
    let source = slice(base.source().clone(), apex)?;
    let target = slice(base.target().clone(), base.on_object(apex))?;
    let objects = source
        .base_objects()
        .iter()
        .map(|&f| {
            target
                .object_of(base.on_morphism(f))
                .expect("F f has target F X")
        })
        .collect();
    let morphisms = source
        .morphisms()
        .map(|t| {
            let image = target
                .hom(base.on_morphism(t.from), base.on_morphism(t.to))
                .expect("F preserves targets");
            debug_assert_eq!(image.underlying, base.on_morphism(t.underlying));
            image.id
        })
        .collect();
    let functor = Functor::trusted(
        source.groupoid().clone(),
        target.groupoid().clone(),
        Variance::Covariant,
        objects,
        morphisms,
    );
    Ok(InducedFunctor {
        base: base.clone(),
        apex,
        source,
        target,
        functor,
    })
}

/// Verdict for "full at X implies F id_X = id_{F X}".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageOfIdentity {
    /// `None` when `F` is full at `X`; otherwise an uncovered loop at `F X`.
    pub not_full_witness: Option<MorId>,
    pub preserves_identity: bool,
}

impl ImageOfIdentity {
    pub fn full_at(&self) -> bool {
        self.not_full_witness.is_none()
    }

    /// The implication itself.
    pub fn holds(&self) -> bool {
        !self.full_at() || self.preserves_identity
    }
}

/// Per pair `(f, g)` of kernel members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelPair {
    pub f: MorId,
    pub g: MorId,
    /// `g⁻¹∘f`, underlying the triangle `f → g`.
    pub connecting: MorId,
    /// `F_X ⟨g⁻¹∘f⟩` is the identity triangle at `id_{F X}`.
    pub maps_to_identity: bool,
    /// Recorded only; the connecting morphism need not end at the apex.
    pub connecting_in_kernel: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelProperties {
    /// Members `f: Y → X` with `F Y ≠ F X`.
    pub source_mismatches: Vec<MorId>,
    /// Members `f` with `F_X ⟨f⟩` not the identity triangle at `id_{F X}`.
    pub to_zero_mismatches: Vec<MorId>,
    pub pairs: Vec<KernelPair>,
}

impl KernelProperties {
    pub fn hold(&self) -> bool {
        self.source_mismatches.is_empty()
            && self.to_zero_mismatches.is_empty()
            && self.pairs.iter().all(|p| p.maps_to_identity)
    }
}

/// Image members with their preimage classes, paired by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImagePartition {
    /// Distinct `F f`, ascending by id in `H`.
    pub image: Vec<MorId>,
    /// `classes[i]` is the preimage of `image[i]`, ascending by id in `G`.
    pub classes: Vec<Vec<MorId>>,
}

impl ImagePartition {
    /// Classes are nonempty, disjoint, cover `objects`, map onto their image
    /// member, and there are as many classes as image members.
    pub fn check(&self, objects: &[MorId], image_of: impl Fn(MorId) -> MorId) -> std::result::Result<(), String> {
        if self.classes.len() != self.image.len() {
            return Err(format!(
                "{} classes for {} image members",
                self.classes.len(),
                self.image.len()
            ));
        }
        let mut seen: Vec<MorId> = Vec::new();
        for (class, &target) in self.classes.iter().zip(&self.image) {
            if class.is_empty() {
                return Err("empty class".into());
            }
            for &f in class {
                if image_of(f) != target {
                    return Err(format!("{f} is in the wrong class"));
                }
                if seen.contains(&f) {
                    return Err(format!("{f} is in two classes"));
                }
                seen.push(f);
            }
        }
        seen.sort_unstable();
        let mut all = objects.to_vec();
        all.sort_unstable();
        if seen != all {
            return Err("classes do not cover the slice".into());
        }
        Ok(())
    }
}

impl InducedFunctor {
    pub fn base(&self) -> &Functor {
        &self.base
    }

    pub fn apex(&self) -> ObjId {
        self.apex
    }

    pub fn source(&self) -> &SliceGroupoid {
        &self.source
    }

    pub fn target(&self) -> &SliceGroupoid {
        &self.target
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    /// `F f`, for a base morphism `f` into the apex.
    pub fn on_object(&self, f: MorId) -> MorId {
        self.base.on_morphism(f)
    }

    /// `id_{F X}`, the zero object of the codomain slice.
    pub fn target_zero(&self) -> MorId {
        self.target.base().identity(self.target.apex())
    }

    pub fn check_image_of_identity(&self) -> ImageOfIdentity {
        let x = self.apex;
        ImageOfIdentity {
            not_full_witness: self
                .base
                .is_full_at(x)
                .expect("apex is an object")
                .err(),
            preserves_identity: self.base.on_morphism(self.base.source().identity(x))
                == self.target_zero(),
        }
    }

    /// Slice objects sent to `id_{F X}`, ascending. May be empty.
    pub fn kernel(&self) -> Vec<MorId> {
        let zero = self.target_zero();
        self.source
            .base_objects()
            .iter()
            .copied()
            .filter(|&f| self.on_object(f) == zero)
            .collect()
    }

    pub fn check_kernel_properties(&self) -> KernelProperties {
        let kernel = self.kernel();
        let g = self.base.source();
        let fx = self.base.on_object(self.apex);
        let zero = self.target_zero();
        let zero_triangle = self
            .target
            .hom(zero, zero)
            .expect("zero is an object")
            .id;
        let apex_id = g.identity(self.apex);
        let image_of_triangle = |from: MorId, to: MorId| {
            let t = self.source.hom(from, to).expect("kernel members are slice objects");
            self.functor.on_morphism(t.id)
        };
        let source_mismatches = kernel
            .iter()
            .copied()
            .filter(|&f| self.base.on_object(g.source(f)) != fx)
            .collect();
        let to_zero_mismatches = kernel
            .iter()
            .copied()
            .filter(|&f| image_of_triangle(f, apex_id) != zero_triangle)
            .collect();
        let mut pairs = Vec::new();
        for &f in &kernel {
            for &h in &kernel {
                let connecting = g.comp(g.inverse(h), f);
                let triangle = self.source.hom(f, h).expect("kernel members are slice objects");
                debug_assert_eq!(triangle.underlying, connecting);
                pairs.push(KernelPair {
                    f,
                    g: h,
                    connecting,
                    maps_to_identity: self.functor.on_morphism(triangle.id) == zero_triangle,
                    connecting_in_kernel: g.target(connecting) == self.apex
                        && self.on_object(connecting) == zero,
                });
            }
        }
        KernelProperties {
            source_mismatches,
            to_zero_mismatches,
            pairs,
        }
    }

    pub fn image_and_partition(&self) -> ImagePartition {
        let mut image: Vec<MorId> = self
            .source
            .base_objects()
            .iter()
            .map(|&f| self.on_object(f))
            .collect();
        image.sort_unstable();
        image.dedup();
        let classes = image
            .iter()
            .map(|&u| {
                self.source
                    .base_objects()
                    .iter()
                    .copied()
                    .filter(|&f| self.on_object(f) == u)
                    .collect()
            })
            .collect();
        ImagePartition { image, classes }
    }

    /// Shortcut for the partition check against this functor.
    pub fn check_partition(&self, partition: &ImagePartition) -> std::result::Result<(), String> {
        partition.check(self.source.base_objects(), |f| self.on_object(f))
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::builders::{cyclic, pair_groupoid};

    fn mod2() -> Functor {
        Functor::from_homomorphism(Arc::new(cyclic(4)), Arc::new(cyclic(2)), &[0, 1, 0, 1]).unwrap()
    }

    fn trivial_z2() -> Functor {
        let z2 = Arc::new(cyclic(2));
        Functor::from_homomorphism(z2.clone(), z2, &[0, 0]).unwrap()
    }

    fn names(fx: &InducedFunctor, ids: &[MorId]) -> Vec<String> {
        ids.iter()
            .map(|&f| fx.base().source().morphism_name(f).to_string())
            .collect()
    }

    #[test]
    fn mod2_kernel_and_partition() {
        let fx = induced_functor(&mod2(), ObjId(0)).unwrap();
        assert_eq!(fx.source().groupoid().object_count(), 4);
        assert_eq!(fx.target().groupoid().object_count(), 2);
        assert_eq!(names(&fx, &fx.kernel()), vec!["e", "a2"]);
        let p = fx.image_and_partition();
        assert_eq!(p.image, vec![MorId(0), MorId(1)]);
        assert_eq!(names(&fx, &p.classes[0]), vec!["e", "a2"]);
        assert_eq!(names(&fx, &p.classes[1]), vec!["a", "a3"]);
        fx.check_partition(&p).unwrap();
        let props = fx.check_kernel_properties();
        assert!(props.hold());
        assert_eq!(props.pairs.len(), 4);
        let v = fx.check_image_of_identity();
        assert!(v.full_at() && v.preserves_identity);
    }

    #[test]
    fn identity_functor_kernel_is_apex_identity() {
        let p = Arc::new(pair_groupoid(3));
        let fx = induced_functor(&Functor::identity(p.clone()), ObjId(1)).unwrap();
        assert_eq!(fx.kernel(), vec![p.identity(ObjId(1))]);
        assert_eq!(fx.functor(), &Functor::identity(fx.source().groupoid().clone()));
        let part = fx.image_and_partition();
        assert!(part.classes.iter().all(|c| c.len() == 1));
        assert_eq!(part.classes.len(), 3);
    }

    #[test]
    fn trivial_map_collapses() {
        let fx = induced_functor(&trivial_z2(), ObjId(0)).unwrap();
        assert!(fx.functor().object_map().iter().all(|&x| x == ObjId(0)));
        assert_eq!(fx.kernel(), vec![MorId(0), MorId(1)]);
        let part = fx.image_and_partition();
        assert_eq!(part.classes, vec![vec![MorId(0), MorId(1)]]);
        let v = fx.check_image_of_identity();
        assert_eq!(v.not_full_witness, Some(MorId(1)));
        assert!(v.preserves_identity && v.holds());
        let props = fx.check_kernel_properties();
        let pair = props
            .pairs
            .iter()
            .find(|p| p.f == MorId(1) && p.g == MorId(0))
            .unwrap();
        assert!(pair.maps_to_identity && pair.connecting_in_kernel);
    }

    #[test]
    fn partition_check_rejects_bad_partitions() {
        let fx = induced_functor(&mod2(), ObjId(0)).unwrap();
        let mut p = fx.image_and_partition();
        p.classes[1].push(MorId(0));
        assert!(fx.check_partition(&p).is_err());
        let mut p = fx.image_and_partition();
        p.classes[1].pop();
        assert!(fx.check_partition(&p).is_err());
        let mut p = fx.image_and_partition();
        p.image.pop();
        assert!(fx.check_partition(&p).is_err());
    }
}
