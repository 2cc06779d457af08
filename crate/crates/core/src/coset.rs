//! Coset spaces of a wide subgroupoid `H ⊆ G` and the groupoids built on them.
//!
//! `g ∼ g′` iff `s(g) = s(g′)` and `g′ = h∘g` for some `h` in `H`. The
//! source of a class is well defined; its target is not, and is not exposed.

use std::sync::Arc;

use serde::Serialize;

use crate::action::{embed_slice_co, ActionGroupoid};
use crate::error::Result;
use crate::functor::{Functor, Variance};
use crate::groupoid::{Groupoid, MorId, Morphism, ObjId, DEFAULT_SIZE_LIMIT};
use crate::slice::SliceGroupoid;
use crate::subgroupoid::Subgroupoid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetClass {
    /// Smallest member id.
    pub representative: MorId,
    /// Ascending.
    pub members: Vec<MorId>,
    pub source: ObjId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRelation {
    sub: Subgroupoid,
    classes: Vec<CosetClass>,
    class_of: Vec<usize>,
}

/// Partitions `Mor(G)` into `∼_H` classes, ordered by representative.
pub fn coset_relation(sub: &Subgroupoid) -> CosetRelation {
    let g = &**sub.parent();
    let mut class_of = vec![usize::MAX; g.morphism_count()];
    let mut classes = Vec::new();
    for f in g.morphisms() {
        if class_of[f.0] != usize::MAX {
            continue;
        }
        let mut members: Vec<MorId> = g
            .outgoing(g.target(f))
            .iter()
            .filter(|&&h| sub.contains(h))
            .map(|&h| g.comp(h, f))
            .collect();
        members.sort_unstable();
        members.dedup();
        for m in &members {
            class_of[m.0] = classes.len();
        }
        classes.push(CosetClass {
            representative: members[0],
            members,
            source: g.source(f),
        });
    }
    CosetRelation {
        sub: sub.clone(),
        classes,
        class_of,
    }
}

impl CosetRelation {
    pub fn parent(&self) -> &Arc<Groupoid> {
        self.sub.parent()
    }

    pub fn subgroupoid(&self) -> &Subgroupoid {
        &self.sub
    }

    pub fn classes(&self) -> &[CosetClass] {
        &self.classes
    }

    pub fn class_of(&self, f: MorId) -> usize {
        self.class_of[f.0]
    }

    /// `s([g])`.
    pub fn class_source(&self, class: usize) -> ObjId {
        self.classes[class].source
    }

    /// The relation straight from its definition.
    pub fn related_by_definition(&self, a: MorId, b: MorId) -> bool {
        let g = &**self.parent();
        g.source(a) == g.source(b)
            && g.hom(g.target(a), g.target(b))
                .any(|h| self.sub.contains(h) && g.comp(h, a) == b)
    }

    /// Reflexivity, symmetry and transitivity of the defining relation, and
    /// agreement of the computed classes with it. Exhaustive.
    pub fn check_equivalence(&self) -> std::result::Result<(), String> {
        let g = &**self.parent();
        let m = g.morphism_count();
        let related: Vec<Vec<bool>> = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| self.related_by_definition(MorId(a), MorId(b)))
                    .collect()
            })
            .collect();
        let name = |i: usize| g.morphism_name(MorId(i));
        for a in 0..m {
            if !related[a][a] {
                return Err(format!("not reflexive at {}", name(a)));
            }
            for b in 0..m {
                if related[a][b] != (self.class_of[a] == self.class_of[b]) {
                    return Err(format!("classes disagree on ({}, {})", name(a), name(b)));
                }
                if related[a][b] && !related[b][a] {
                    return Err(format!("not symmetric at ({}, {})", name(a), name(b)));
                }
                if related[a][b] {
                    if let Some(c) = (0..m).find(|&c| related[b][c] && !related[a][c]) {
                        return Err(format!(
                            "not transitive at ({}, {}, {})",
                            name(a),
                            name(b),
                            name(c)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every member of a class has the class's source.
    pub fn check_uniform_sources(&self) -> std::result::Result<(), MorId> {
        let g = &**self.parent();
        for class in &self.classes {
            if let Some(&f) = class.members.iter().find(|&&f| g.source(f) != class.source) {
                return Err(f);
            }
        }
        Ok(())
    }

    /// `ρ_H(X)`: classes with source `X`, ascending.
    pub fn rho_object(&self, x: ObjId) -> Result<Vec<usize>> {
        self.parent().check_object(x)?;
        Ok((0..self.classes.len())
            .filter(|&c| self.classes[c].source == x)
            .collect())
    }

    /// `ρ_H(g): ρ_H(Y) → ρ_H(X)` for `g: X → Y`, `[f] ↦ [f∘g]`, as
    /// `(class, image class)` pairs in the order of `ρ_H(Y)`.
    pub fn rho_map(&self, g: MorId) -> Result<Vec<(usize, usize)>> {
        let p = &**self.parent();
        p.check_morphism(g)?;
        Ok(self
            .rho_object(p.target(g))?
            .into_iter()
            .map(|c| (c, self.class_of(p.comp(self.classes[c].representative, g))))
            .collect())
    }

    /// Well-definedness of `ρ_H(g)` on every member of every class, and the
    /// contravariant functor laws. Exhaustive.
    pub fn check_rho_laws(&self) -> std::result::Result<(), String> {
        let p = &**self.parent();
        for g in p.morphisms() {
            for class in self.classes.iter().filter(|c| c.source == p.target(g)) {
                let images: Vec<usize> = class
                    .members
                    .iter()
                    .map(|&f| self.class_of(p.comp(f, g)))
                    .collect();
                if images.iter().any(|&c| c != images[0]) {
                    return Err(format!(
                        "rho_H({}) is not well defined on [{}]",
                        p.morphism_name(g),
                        p.morphism_name(class.representative)
                    ));
                }
            }
        }
        let apply = |g: MorId, c: usize| self.class_of(p.comp(self.classes[c].representative, g));
        for x in p.objects() {
            let id = p.identity(x);
            for c in self.rho_object(x).expect("known object") {
                if apply(id, c) != c {
                    return Err(format!("rho_H(id_{}) is not the identity", p.object_name(x)));
                }
            }
        }
        for g in p.morphisms() {
            for &g2 in p.outgoing(p.target(g)) {
                let composite = p.comp(g2, g);
                for c in self.rho_object(p.target(g2)).expect("known object") {
                    if apply(composite, c) != apply(g, apply(g2, c)) {
                        return Err(format!(
                            "rho_H is not contravariant at ({}, {})",
                            p.morphism_name(g2),
                            p.morphism_name(g)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Classes containing a morphism with target `x`, ascending.
    pub fn classes_meeting(&self, x: ObjId) -> Vec<usize> {
        let p = &**self.parent();
        let mut out: Vec<usize> = p.incoming(x).iter().map(|&f| self.class_of(f)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn class_name(&self, class: usize) -> String {
        format!("[{}]", self.parent().morphism_name(self.classes[class].representative))
    }
}

/// `(H:G)⫽G`: objects are the classes; morphisms `([g], f): [g] → [g∘f]`
/// for `t(f) = s([g])`, ordered by `(class, f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetActionGroupoid {
    relation: CosetRelation,
    groupoid: Arc<Groupoid>,
    pairs: Vec<(usize, MorId)>,
    offsets: Vec<usize>,
}

pub fn coset_action_groupoid(relation: &CosetRelation) -> Result<CosetActionGroupoid> {
    coset_action_groupoid_with_limit(relation, DEFAULT_SIZE_LIMIT)
}

pub fn coset_action_groupoid_with_limit(
    relation: &CosetRelation,
    limit: usize,
) -> Result<CosetActionGroupoid> {
    let g = &**relation.parent();
    let classes = relation.classes();
    let mut offsets = Vec::with_capacity(classes.len() + 1);
    let mut total = 0;
    for c in classes {
        offsets.push(total);
        total += g.incoming(c.source).len();
    }
    offsets.push(total);
    g.guard_size(total, limit)?;

    let act = |c: usize, f: MorId| relation.class_of(g.comp(classes[c].representative, f));
    let mut pairs = Vec::with_capacity(total);
    let mut morphisms = Vec::with_capacity(total);
    for (c, class) in classes.iter().enumerate() {
        for &f in g.incoming(class.source) {
            pairs.push((c, f));
            morphisms.push(Morphism {
                name: format!("({},{})", relation.class_name(c), g.morphism_name(f)),
                source: ObjId(c),
                target: ObjId(act(c, f)),
            });
        }
    }
    let index = |c: usize, f: MorId| {
        let pos = g
            .incoming(classes[c].source)
            .binary_search(&f)
            .expect("f ends at the source of the class");
        MorId(offsets[c] + pos)
    };
    let groupoid = Groupoid::assemble(
        format!("({}:{1})//{1}", relation.subgroupoid_label(), g.name()),
        (0..classes.len()).map(|c| relation.class_name(c)).collect(),
        morphisms,
        |second, first| {
            let (c, f) = pairs[first.0];
            let (_, f2) = pairs[second.0];
            index(c, g.comp(f, f2))
        },
        (0..classes.len())
            .map(|c| index(c, g.identity(classes[c].source)))
            .collect(),
        pairs
            .iter()
            .map(|&(c, f)| index(act(c, f), g.inverse(f)))
            .collect(),
    );
    Ok(CosetActionGroupoid {
        relation: relation.clone(),
        groupoid: Arc::new(groupoid),
        pairs,
        offsets,
    })
}

impl CosetRelation {
    fn subgroupoid_label(&self) -> String {
        let p = self.parent();
        match self.sub.len() {
            n if n == p.object_count() => "1".to_string(),
            n if n == p.morphism_count() => p.name().to_string(),
            _ => "H".to_string(),
        }
    }
}

impl CosetActionGroupoid {
    pub fn relation(&self) -> &CosetRelation {
        &self.relation
    }

    pub fn groupoid(&self) -> &Arc<Groupoid> {
        &self.groupoid
    }

    pub fn pair(&self, m: MorId) -> (usize, MorId) {
        self.pairs[m.0]
    }

    pub fn morphism_of(&self, class: usize, f: MorId) -> Option<MorId> {
        let g = &**self.relation.parent();
        let c = self.relation.classes().get(class)?;
        g.incoming(c.source)
            .binary_search(&f)
            .ok()
            .map(|pos| MorId(self.offsets[class] + pos))
    }

    /// `[g] ↦ s(g)`, `([g], f) ↦ f⁻¹`.
    pub fn source_functor(&self) -> Functor {
        let g = self.relation.parent();
        Functor::trusted(
            self.groupoid.clone(),
            g.clone(),
            Variance::Covariant,
            self.relation.classes().iter().map(|c| c.source).collect(),
            self.pairs.iter().map(|&(_, f)| g.inverse(f)).collect(),
        )
    }

    /// `π_H: G⫽G → (H:G)⫽G`, `f ↦ [f]`, `(g, f) ↦ ([g], f)`.
    pub fn projection(&self, action: &ActionGroupoid) -> Functor {
        let rel = &self.relation;
        let base = action.base();
        Functor::trusted(
            action.groupoid().clone(),
            self.groupoid.clone(),
            Variance::Covariant,
            base.morphisms().map(|f| ObjId(rel.class_of(f))).collect(),
            action
                .groupoid()
                .morphisms()
                .map(|m| {
                    let (g, f) = action.pair(m);
                    self.morphism_of(rel.class_of(g), f)
                        .expect("t(f) = s(g) = s([g])")
                })
                .collect(),
        )
    }
}

/// `(H:G/X)⫽G`: the full subgroupoid of `(H:G)⫽G` on the image of
/// `π_H ∘ ι_X*`, i.e. the classes containing some morphism into `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicedCosetGroupoid {
    pub groupoid: Arc<Groupoid>,
    /// Class index of each object, ascending.
    pub classes: Vec<usize>,
    /// Id in `(H:G)⫽G` of each morphism.
    pub morphisms: Vec<MorId>,
    /// `π_H^X = π_H ∘ ι_X*`, landing in `(H:G)⫽G`.
    pub composite: Functor,
    /// Inclusion into `(H:G)⫽G`.
    pub inclusion: Functor,
}

pub fn sliced_coset_groupoid(
    coset: &CosetActionGroupoid,
    action: &ActionGroupoid,
    slice: &SliceGroupoid,
    opposite_slice: Arc<Groupoid>,
) -> Result<SlicedCosetGroupoid> {
    let iota = embed_slice_co(slice, opposite_slice, action);
    let composite = iota.then(&coset.projection(action))?;
    let mut objects: Vec<ObjId> = composite.object_map().to_vec();
    objects.sort_unstable();
    objects.dedup();
    let parent = coset.groupoid();
    let name = format!("{}|{}", parent.name(), slice.base().object_name(slice.apex()));
    let (groupoid, morphisms) = parent.full_subgroupoid(name, &objects);
    let groupoid = Arc::new(groupoid);
    let inclusion = Functor::trusted(
        groupoid.clone(),
        parent.clone(),
        Variance::Covariant,
        objects.clone(),
        morphisms.clone(),
    );
    Ok(SlicedCosetGroupoid {
        groupoid,
        classes: objects.into_iter().map(|x| x.0).collect(),
        morphisms,
        composite,
        inclusion,
    })
}

/// With `H` the identities every class is a singleton; this is the map
/// `G⫽G → (H:G)⫽G`, `g ↦ [g]`, `(g, f) ↦ ([g], f)`. Check it with
/// [`Functor::check_isomorphism`].
pub fn singleton_class_map(coset: &CosetActionGroupoid, action: &ActionGroupoid) -> Functor {
    coset.projection(action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::action_groupoid;
    use crate::builders::{cyclic, pair_groupoid};
    use crate::slice::slice;

    fn class_names(rel: &CosetRelation) -> Vec<Vec<&str>> {
        let g = rel.parent();
        rel.classes()
            .iter()
            .map(|c| c.members.iter().map(|&f| g.morphism_name(f)).collect())
            .collect()
    }

    #[test]
    fn relation_examples() {
        let p = Arc::new(pair_groupoid(2));
        let rel = coset_relation(&Subgroupoid::identities(p.clone()));
        assert!(rel.classes().iter().all(|c| c.members.len() == 1));
        let rel = coset_relation(&Subgroupoid::whole(p.clone()));
        assert_eq!(class_names(&rel), vec![vec!["id_O1", "p1_2"], vec!["p2_1", "id_O2"]]);
        assert_eq!(rel.class_source(0), ObjId(0));
        assert_eq!(rel.class_source(1), ObjId(1));
        rel.check_equivalence().unwrap();
        assert_eq!(rel.rho_object(ObjId(0)).unwrap(), vec![0]);

        let z4 = Arc::new(cyclic(4));
        let a2 = z4.morphism_by_name("a2").unwrap();
        let rel = coset_relation(&Subgroupoid::generated_by(z4.clone(), [a2]));
        assert_eq!(class_names(&rel), vec![vec!["e", "a2"], vec!["a", "a3"]]);
        let a = z4.morphism_by_name("a").unwrap();
        assert_eq!(rel.rho_map(a).unwrap(), vec![(0, 1), (1, 0)]);
        let e = z4.identity(ObjId(0));
        assert_eq!(rel.rho_map(e).unwrap(), vec![(0, 0), (1, 1)]);
        rel.check_rho_laws().unwrap();
        rel.check_uniform_sources().unwrap();
    }

    #[test]
    fn coset_groupoid_counts_and_projection() {
        let p = Arc::new(pair_groupoid(2));
        let rel = coset_relation(&Subgroupoid::whole(p.clone()));
        let cg = coset_action_groupoid(&rel).unwrap();
        assert_eq!(cg.groupoid().object_count(), 2);
        assert_eq!(cg.groupoid().morphism_count(), 4);
        let act = action_groupoid(p.clone()).unwrap();
        let pi = cg.projection(&act);
        assert!(pi.law_violations().is_empty());
        assert!(pi.check_surjective_on_morphisms().is_ok());
        assert!(pi.check_surjective_on_objects().is_ok());
        // id_O1 and p1_2 share a class but have no morphism between them
        let witness = pi.check_full().unwrap_err();
        assert_eq!(pi.target().hom(pi.on_object(witness.from), pi.on_object(witness.to)).count(), 1);
        assert_eq!(act.groupoid().object_count(), 4);

        let z4 = Arc::new(cyclic(4));
        let a2 = z4.morphism_by_name("a2").unwrap();
        let rel = coset_relation(&Subgroupoid::generated_by(z4.clone(), [a2]));
        let cg = coset_action_groupoid(&rel).unwrap();
        assert_eq!(
            (cg.groupoid().object_count(), cg.groupoid().morphism_count()),
            (2, 8)
        );
    }

    #[test]
    fn identities_give_the_action_groupoid_back() {
        let g = Arc::new(crate::builders::direct_product(&cyclic(2), &pair_groupoid(2)));
        let rel = coset_relation(&Subgroupoid::identities(g.clone()));
        let cg = coset_action_groupoid(&rel).unwrap();
        let act = action_groupoid(g.clone()).unwrap();
        singleton_class_map(&cg, &act).check_isomorphism().unwrap();
    }

    #[test]
    fn sliced_examples() {
        let p = Arc::new(pair_groupoid(2));
        let act = action_groupoid(p.clone()).unwrap();
        let s = slice(p.clone(), ObjId(0)).unwrap();
        let op = Arc::new(s.groupoid().opposite());
        let rel = coset_relation(&Subgroupoid::identities(p.clone()));
        let cg = coset_action_groupoid(&rel).unwrap();
        let sc = sliced_coset_groupoid(&cg, &act, &s, op.clone()).unwrap();
        let names: Vec<&str> = sc.groupoid.objects().map(|x| sc.groupoid.object_name(x)).collect();
        assert_eq!(names, vec!["[id_O1]", "[p2_1]"]);
        assert!(sc.groupoid.is_connected());

        let rel = coset_relation(&Subgroupoid::whole(p.clone()));
        let cg = coset_action_groupoid(&rel).unwrap();
        let sc = sliced_coset_groupoid(&cg, &act, &s, op).unwrap();
        assert_eq!(sc.classes, vec![0, 1]);

        let z4 = Arc::new(cyclic(4));
        let a2 = z4.morphism_by_name("a2").unwrap();
        let act = action_groupoid(z4.clone()).unwrap();
        let s = slice(z4.clone(), ObjId(0)).unwrap();
        let rel = coset_relation(&Subgroupoid::generated_by(z4.clone(), [a2]));
        let cg = coset_action_groupoid(&rel).unwrap();
        let sc = sliced_coset_groupoid(&cg, &act, &s, Arc::new(s.groupoid().opposite())).unwrap();
        assert_eq!(sc.groupoid.object_count(), 2);
    }
}
