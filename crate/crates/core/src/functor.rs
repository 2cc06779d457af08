//! Functors between finite groupoids, stored as explicit object and
//! morphism maps, with brute-force checks for the usual properties.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::{connected_component, Groupoid, MorId, ObjId};

/// Whether a functor preserves or reverses the direction of morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    pub fn then(self, other: Variance) -> Variance {
        if self == other {
            Variance::Covariant
        } else {
            Variance::Contravariant
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum FunctorViolation {
    NotTotalOnObject { object: ObjId },
    NotTotalOnMorphism { morphism: MorId },
    UnknownImage { morphism: Option<MorId>, object: Option<ObjId> },
    EndpointMismatch { morphism: MorId },
    CompositionViolation { g: MorId, f: MorId },
    IdentityViolation { object: ObjId },
}

impl FunctorViolation {
    pub fn kind(&self) -> &'static str {
        match self {
            FunctorViolation::NotTotalOnObject { .. }
            | FunctorViolation::NotTotalOnMorphism { .. } => "NotTotal",
            FunctorViolation::UnknownImage { .. } => "UnresolvedReference",
            FunctorViolation::EndpointMismatch { .. } => "EndpointMismatch",
            FunctorViolation::CompositionViolation { .. } => "CompositionViolation",
            FunctorViolation::IdentityViolation { .. } => "IdentityViolation",
        }
    }

    pub fn describe(&self, source: &Groupoid) -> String {
        let m = |f: MorId| source.morphism_name(f).to_string();
        let o = |x: ObjId| source.object_name(x).to_string();
        match *self {
            FunctorViolation::NotTotalOnObject { object } => {
                format!("NotTotal: no image for object {}", o(object))
            }
            FunctorViolation::NotTotalOnMorphism { morphism } => {
                format!("NotTotal: no image for morphism {}", m(morphism))
            }
            FunctorViolation::UnknownImage { morphism, object } => match (morphism, object) {
                (Some(f), _) => format!("UnresolvedReference: image of {} is not in the target", m(f)),
                (_, Some(x)) => format!("UnresolvedReference: image of {} is not in the target", o(x)),
                _ => "UnresolvedReference".into(),
            },
            FunctorViolation::EndpointMismatch { morphism } => format!(
                "EndpointMismatch: image of {} does not connect the images of its endpoints",
                m(morphism)
            ),
            FunctorViolation::CompositionViolation { g, f } => {
                format!("CompositionViolation: F({} . {}) differs from F({}) . F({})", m(g), m(f), m(g), m(f))
            }
            FunctorViolation::IdentityViolation { object } => {
                format!("IdentityViolation: F(id_{0}) is not id_F({0})", o(object))
            }
        }
    }
}

/// Witness that a functor is not full: nothing in `Hom(from, to)` maps onto `missed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NotFull {
    pub from: ObjId,
    pub to: ObjId,
    pub missed: MorId,
}

/// Witness that a functor is not faithful: two parallel morphisms with one image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NotFaithful {
    pub first: MorId,
    pub second: MorId,
}

/// A validated functor. Contravariant functors send `f: a → b` to `F f: F b → F a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    source: Arc<Groupoid>,
    target: Arc<Groupoid>,
    variance: Variance,
    objects: Vec<ObjId>,
    morphisms: Vec<MorId>,
}

impl Functor {
    /// Validates possibly partial maps. Witnesses are listed in ascending id order.
    pub fn validate(
        source: Arc<Groupoid>,
        target: Arc<Groupoid>,
        variance: Variance,
        objects: Vec<Option<ObjId>>,
        morphisms: Vec<Option<MorId>>,
    ) -> std::result::Result<Functor, Vec<FunctorViolation>> {
        let mut violations = Vec::new();
        if objects.len() != source.object_count() || morphisms.len() != source.morphism_count() {
            return Err(vec![FunctorViolation::UnknownImage {
                morphism: None,
                object: None,
            }]);
        }
        for (x, img) in objects.iter().enumerate() {
            match img {
                None => violations.push(FunctorViolation::NotTotalOnObject { object: ObjId(x) }),
                Some(y) if y.0 >= target.object_count() => {
                    violations.push(FunctorViolation::UnknownImage {
                        morphism: None,
                        object: Some(ObjId(x)),
                    })
                }
                _ => {}
            }
        }
        for (f, img) in morphisms.iter().enumerate() {
            match img {
                None => violations.push(FunctorViolation::NotTotalOnMorphism { morphism: MorId(f) }),
                Some(u) if u.0 >= target.morphism_count() => {
                    violations.push(FunctorViolation::UnknownImage {
                        morphism: Some(MorId(f)),
                        object: None,
                    })
                }
                _ => {}
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        let functor = Functor {
            source,
            target,
            variance,
            objects: objects.into_iter().map(|x| x.expect("total")).collect(),
            morphisms: morphisms.into_iter().map(|f| f.expect("total")).collect(),
        };
        let violations = functor.law_violations();
        if violations.is_empty() {
            Ok(functor)
        } else {
            Err(violations)
        }
    }

    /// Validates total covariant maps.
    pub fn new(
        source: Arc<Groupoid>,
        target: Arc<Groupoid>,
        objects: Vec<ObjId>,
        morphisms: Vec<MorId>,
    ) -> std::result::Result<Functor, Vec<FunctorViolation>> {
        Self::validate(
            source,
            target,
            Variance::Covariant,
            objects.into_iter().map(Some).collect(),
            morphisms.into_iter().map(Some).collect(),
        )
    }

    /// For maps produced by the constructions in this crate.
    pub(crate) fn trusted(
        source: Arc<Groupoid>,
        target: Arc<Groupoid>,
        variance: Variance,
        objects: Vec<ObjId>,
        morphisms: Vec<MorId>,
    ) -> Functor {
        let functor = Functor {
            source,
            target,
            variance,
            objects,
            morphisms,
        };
        debug_assert!(functor.law_violations().is_empty());
        functor
    }

    pub fn identity(g: Arc<Groupoid>) -> Functor {
        let objects = g.objects().collect();
        let morphisms = g.morphisms().collect();
        Functor::trusted(g.clone(), g, Variance::Covariant, objects, morphisms)
    }

    /// Functor laws, checked exhaustively; empty when they all hold.
    pub fn law_violations(&self) -> Vec<FunctorViolation> {
        let (s, t) = (&*self.source, &*self.target);
        let mut out = Vec::new();
        for f in s.morphisms() {
            let (a, b) = self.image_endpoints(s.source(f), s.target(f));
            let u = self.morphisms[f.0];
            if t.source(u) != a || t.target(u) != b {
                out.push(FunctorViolation::EndpointMismatch { morphism: f });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in s.objects() {
            if self.morphisms[s.identity(x).0] != t.identity(self.objects[x.0]) {
                out.push(FunctorViolation::IdentityViolation { object: x });
            }
        }
        for f in s.morphisms() {
            for &g in s.outgoing(s.target(f)) {
                let (fg, ff) = (self.morphisms[g.0], self.morphisms[f.0]);
                let expected = match self.variance {
                    Variance::Covariant => t.comp(fg, ff),
                    Variance::Contravariant => t.comp(ff, fg),
                };
                if self.morphisms[s.comp(g, f).0] != expected {
                    out.push(FunctorViolation::CompositionViolation { g, f });
                }
            }
        }
        out
    }

    fn image_endpoints(&self, a: ObjId, b: ObjId) -> (ObjId, ObjId) {
        let (fa, fb) = (self.objects[a.0], self.objects[b.0]);
        match self.variance {
            Variance::Covariant => (fa, fb),
            Variance::Contravariant => (fb, fa),
        }
    }

    pub fn source(&self) -> &Arc<Groupoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Groupoid> {
        &self.target
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[MorId] {
        &self.morphisms
    }

    pub fn on_object(&self, x: ObjId) -> ObjId {
        self.objects[x.0]
    }

    pub fn on_morphism(&self, f: MorId) -> MorId {
        self.morphisms[f.0]
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(Error::FunctorMismatch);
        }
        Functor::validate(
            self.source.clone(),
            other.target.clone(),
            self.variance.then(other.variance),
            self.objects.iter().map(|&x| Some(other.on_object(x))).collect(),
            self.morphisms.iter().map(|&f| Some(other.on_morphism(f))).collect(),
        )
        .map_err(|_| Error::FunctorMismatch)
    }

    /// Same maps between the same groupoids with the variance flipped and the
    /// source replaced by its opposite.
    pub fn on_opposite_source(&self, opposite_source: Arc<Groupoid>) -> Functor {
        let variance = match self.variance {
            Variance::Covariant => Variance::Contravariant,
            Variance::Contravariant => Variance::Covariant,
        };
        Functor::trusted(
            opposite_source,
            self.target.clone(),
            variance,
            self.objects.clone(),
            self.morphisms.clone(),
        )
    }

    /// `F(f⁻¹) = F(f)⁻¹` for every `f`; returns the first failure.
    pub fn check_preserves_inverses(&self) -> std::result::Result<(), MorId> {
        match self.source.morphisms().find(|&f| {
            self.on_morphism(self.source.inverse(f)) != self.target.inverse(self.on_morphism(f))
        }) {
            Some(f) => Err(f),
            None => Ok(()),
        }
    }

    /// Every hom-set map is surjective.
    pub fn check_full(&self) -> std::result::Result<(), NotFull> {
        let (s, t) = (&*self.source, &*self.target);
        for a in s.objects() {
            for b in s.objects() {
                let (fa, fb) = self.image_endpoints(a, b);
                let hit: Vec<MorId> = s.hom(a, b).map(|f| self.on_morphism(f)).collect();
                if let Some(missed) = t.hom(fa, fb).find(|u| !hit.contains(u)) {
                    return Err(NotFull {
                        from: a,
                        to: b,
                        missed,
                    });
                }
            }
        }
        Ok(())
    }

    /// Every hom-set map is injective.
    pub fn check_faithful(&self) -> std::result::Result<(), NotFaithful> {
        let s = &*self.source;
        for a in s.objects() {
            for b in s.objects() {
                let hom: Vec<MorId> = s.hom(a, b).collect();
                for (i, &f) in hom.iter().enumerate() {
                    if let Some(&g) = hom[i + 1..]
                        .iter()
                        .find(|&&g| self.on_morphism(g) == self.on_morphism(f))
                    {
                        return Err(NotFaithful { first: f, second: g });
                    }
                }
            }
        }
        Ok(())
    }

    /// Every target object is isomorphic to some image object; otherwise the
    /// first target object that is not.
    pub fn check_essentially_surjective(&self) -> std::result::Result<(), ObjId> {
        let t = &*self.target;
        let mut reached = vec![false; t.object_count()];
        for &y in &self.objects {
            if !reached[y.0] {
                for z in t.component_objects(y) {
                    reached[z.0] = true;
                }
            }
        }
        match reached.iter().position(|&r| !r) {
            Some(y) => Err(ObjId(y)),
            None => Ok(()),
        }
    }

    pub fn check_injective_on_objects(&self) -> std::result::Result<(), (ObjId, ObjId)> {
        let mut first = vec![None; self.target.object_count()];
        for (x, &y) in self.objects.iter().enumerate() {
            if let Some(prev) = first[y.0] {
                return Err((ObjId(prev), ObjId(x)));
            }
            first[y.0] = Some(x);
        }
        Ok(())
    }

    pub fn check_surjective_on_objects(&self) -> std::result::Result<(), ObjId> {
        let mut hit = vec![false; self.target.object_count()];
        for &y in &self.objects {
            hit[y.0] = true;
        }
        match hit.iter().position(|&h| !h) {
            Some(y) => Err(ObjId(y)),
            None => Ok(()),
        }
    }

    /// Every target morphism is the image of some source morphism. This is
    /// the sense in which a projection onto a quotient is "full"; hom-set
    /// fullness is strictly stronger and usually fails for quotients.
    pub fn check_surjective_on_morphisms(&self) -> std::result::Result<(), MorId> {
        let mut hit = vec![false; self.target.morphism_count()];
        for &u in &self.morphisms {
            hit[u.0] = true;
        }
        match hit.iter().position(|&h| !h) {
            Some(u) => Err(MorId(u)),
            None => Ok(()),
        }
    }

    /// Bijective on objects and morphisms; with the functor laws this makes
    /// the map an isomorphism of composition tables.
    pub fn check_isomorphism(&self) -> std::result::Result<(), String> {
        self.check_injective_on_objects()
            .map_err(|(a, b)| format!("objects {} and {} collide", a.0, b.0))?;
        self.check_surjective_on_objects()
            .map_err(|y| format!("object {} is not hit", y.0))?;
        let mut hit = vec![false; self.target.morphism_count()];
        for (f, &u) in self.morphisms.iter().enumerate() {
            if std::mem::replace(&mut hit[u.0], true) {
                return Err(format!("morphism {f} collides with an earlier one"));
            }
        }
        match hit.iter().position(|&h| !h) {
            Some(u) => Err(format!("morphism {u} is not hit")),
            None => Ok(()),
        }
    }

    /// The loop map `Mor(X,X) → Mor(F X, F X)` is surjective. Otherwise the
    /// smallest uncovered loop at `F X`.
    pub fn is_full_at(&self, x: ObjId) -> Result<std::result::Result<(), MorId>> {
        self.source.check_object(x)?;
        let fx = self.on_object(x);
        let hit: Vec<MorId> = self.source.hom(x, x).map(|f| self.on_morphism(f)).collect();
        Ok(match self.target.hom(fx, fx).find(|u| !hit.contains(u)) {
            Some(u) => Err(u),
            None => Ok(()),
        })
    }

    /// Restriction to the component of `x`, landing in the component of `F x`.
    pub fn restrict_to_component(&self, x: ObjId) -> Result<Functor> {
        let src = connected_component(&self.source, x)?;
        let tgt = connected_component(&self.target, self.on_object(x))?;
        let objects = src
            .objects
            .iter()
            .map(|&y| {
                tgt.object_from_parent(self.on_object(y))
                    .expect("functors preserve connectedness")
            })
            .collect();
        let morphisms = src
            .morphisms
            .iter()
            .map(|&f| {
                tgt.morphism_from_parent(self.on_morphism(f))
                    .expect("functors preserve connectedness")
            })
            .collect();
        Ok(Functor::trusted(
            Arc::new(src.groupoid),
            Arc::new(tgt.groupoid),
            self.variance,
            objects,
            morphisms,
        ))
    }

    /// Functor from a group homomorphism given as an element map, between
    /// one-object groupoids whose morphism ids follow element order.
    pub fn from_homomorphism(
        source: Arc<Groupoid>,
        target: Arc<Groupoid>,
        map: &[usize],
    ) -> std::result::Result<Functor, Vec<FunctorViolation>> {
        Functor::new(
            source,
            target,
            vec![ObjId(0)],
            map.iter().map(|&i| MorId(i)).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic, disjoint_union, pair_groupoid};

    fn mod2() -> Functor {
        let z4 = Arc::new(cyclic(4));
        let z2 = Arc::new(cyclic(2));
        Functor::from_homomorphism(z4, z2, &[0, 1, 0, 1]).unwrap()
    }

    fn trivial_z2() -> Functor {
        let z2 = Arc::new(cyclic(2));
        Functor::from_homomorphism(z2.clone(), z2, &[0, 0]).unwrap()
    }

    #[test]
    fn validation_examples() {
        mod2();
        trivial_z2();
        Functor::identity(Arc::new(pair_groupoid(3)));
        let z4 = Arc::new(cyclic(4));
        let z2 = Arc::new(cyclic(2));
        let err = Functor::from_homomorphism(z4.clone(), z2.clone(), &[0, 1, 1, 1]).unwrap_err();
        assert!(err
            .iter()
            .all(|v| matches!(v, FunctorViolation::CompositionViolation { .. })));
        let err = Functor::validate(
            z4,
            z2,
            Variance::Covariant,
            vec![Some(ObjId(0))],
            vec![Some(MorId(0)), None, Some(MorId(0)), Some(MorId(1))],
        )
        .unwrap_err();
        assert_eq!(err, vec![FunctorViolation::NotTotalOnMorphism { morphism: MorId(1) }]);
    }

    #[test]
    fn endpoint_mismatch() {
        let p = Arc::new(pair_groupoid(2));
        let err = Functor::new(
            p.clone(),
            p.clone(),
            vec![ObjId(0), ObjId(1)],
            vec![MorId(0), MorId(2), MorId(2), MorId(3)],
        )
        .unwrap_err();
        assert_eq!(err, vec![FunctorViolation::EndpointMismatch { morphism: MorId(1) }]);
    }

    #[test]
    fn fullness_examples() {
        assert_eq!(mod2().is_full_at(ObjId(0)).unwrap(), Ok(()));
        assert_eq!(trivial_z2().is_full_at(ObjId(0)).unwrap(), Err(MorId(1)));
        let id = Functor::identity(Arc::new(pair_groupoid(2)));
        assert!(id.check_full().is_ok() && id.check_faithful().is_ok());
        assert!(id.check_essentially_surjective().is_ok());
        let t = trivial_z2();
        assert_eq!(
            t.check_full(),
            Err(NotFull { from: ObjId(0), to: ObjId(0), missed: MorId(1) })
        );
        assert_eq!(
            t.check_faithful(),
            Err(NotFaithful { first: MorId(0), second: MorId(1) })
        );
    }

    #[test]
    fn inclusion_of_component_is_not_essentially_surjective() {
        let z2 = Arc::new(cyclic(2));
        let u = Arc::new(disjoint_union(&cyclic(2), &pair_groupoid(2)));
        let inc = Functor::new(z2, u, vec![ObjId(0)], vec![MorId(0), MorId(1)]).unwrap();
        assert_eq!(inc.check_essentially_surjective(), Err(ObjId(1)));
        assert!(inc.check_full().is_ok() && inc.check_faithful().is_ok());
    }

    #[test]
    fn restriction_of_identity_is_identity_of_component() {
        let g = Arc::new(disjoint_union(&cyclic(3), &pair_groupoid(2)));
        let id = Functor::identity(g.clone());
        for x in g.objects() {
            let r = id.restrict_to_component(x).unwrap();
            let comp = connected_component(&g, x).unwrap();
            assert_eq!(r, Functor::identity(Arc::new(comp.groupoid)));
        }
        let p = Functor::identity(Arc::new(pair_groupoid(2)));
        assert_eq!(p.restrict_to_component(ObjId(1)).unwrap(), p);
    }

    #[test]
    fn composite_is_valid() {
        let m = mod2();
        let t = trivial_z2();
        let c = m.then(&t).unwrap();
        assert!(c.morphism_map().iter().all(|&u| u == MorId(0)));
        assert!(t.then(&m).is_err());
    }
}
