//! Wide subgroupoids: morphism subsets containing every identity and closed
//! under composition and inverses.

use std::sync::Arc;

use serde::Serialize;

use crate::groupoid::{Groupoid, MorId, ObjId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum SubgroupoidViolation {
    NotWide { object: ObjId },
    NotClosedUnderComposition { g: MorId, f: MorId },
    NotClosedUnderInverse { morphism: MorId },
    UnknownMorphism { morphism: MorId },
}

impl SubgroupoidViolation {
    pub fn kind(&self) -> &'static str {
        match self {
            SubgroupoidViolation::NotWide { .. } => "NotWide",
            SubgroupoidViolation::NotClosedUnderComposition { .. } => "NotClosedUnderComposition",
            SubgroupoidViolation::NotClosedUnderInverse { .. } => "NotClosedUnderInverse",
            SubgroupoidViolation::UnknownMorphism { .. } => "UnresolvedReference",
        }
    }

    pub fn describe(&self, g: &Groupoid) -> String {
        match *self {
            SubgroupoidViolation::NotWide { object } => {
                format!("NotWide: identity of {} is missing", g.object_name(object))
            }
            SubgroupoidViolation::NotClosedUnderComposition { g: a, f } => format!(
                "NotClosedUnderComposition: {} . {} is missing",
                g.morphism_name(a),
                g.morphism_name(f)
            ),
            SubgroupoidViolation::NotClosedUnderInverse { morphism } => format!(
                "NotClosedUnderInverse: inverse of {} is missing",
                g.morphism_name(morphism)
            ),
            SubgroupoidViolation::UnknownMorphism { morphism } => {
                format!("UnresolvedReference: {morphism}")
            }
        }
    }
}

/// A validated wide subgroupoid of `parent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroupoid {
    parent: Arc<Groupoid>,
    member: Vec<bool>,
}

impl Subgroupoid {
    /// Checks wideness and closure of `morphisms`, reporting every violation.
    pub fn new(
        parent: Arc<Groupoid>,
        morphisms: impl IntoIterator<Item = MorId>,
    ) -> Result<Self, Vec<SubgroupoidViolation>> {
        let mut member = vec![false; parent.morphism_count()];
        let mut violations = Vec::new();
        for f in morphisms {
            match member.get_mut(f.0) {
                Some(slot) => *slot = true,
                None => violations.push(SubgroupoidViolation::UnknownMorphism { morphism: f }),
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        for x in parent.objects() {
            if !member[parent.identity(x).0] {
                violations.push(SubgroupoidViolation::NotWide { object: x });
            }
        }
        for f in parent.morphisms().filter(|f| member[f.0]) {
            for &g in parent.outgoing(parent.target(f)) {
                if member[g.0] && !member[parent.comp(g, f).0] {
                    violations.push(SubgroupoidViolation::NotClosedUnderComposition { g, f });
                }
            }
        }
        for f in parent.morphisms().filter(|f| member[f.0]) {
            if !member[parent.inverse(f).0] {
                violations.push(SubgroupoidViolation::NotClosedUnderInverse { morphism: f });
            }
        }
        if violations.is_empty() {
            Ok(Subgroupoid { parent, member })
        } else {
            Err(violations)
        }
    }

    /// Only the identities.
    pub fn identities(parent: Arc<Groupoid>) -> Self {
        let member = closure_mask(&parent, std::iter::empty());
        Subgroupoid { parent, member }
    }

    /// Every morphism.
    pub fn whole(parent: Arc<Groupoid>) -> Self {
        let member = vec![true; parent.morphism_count()];
        Subgroupoid { parent, member }
    }

    /// Smallest wide subgroupoid containing `generators`.
    pub fn generated_by(parent: Arc<Groupoid>, generators: impl IntoIterator<Item = MorId>) -> Self {
        let member = closure_mask(&parent, generators);
        Subgroupoid { parent, member }
    }

    pub(crate) fn from_mask_unchecked(parent: Arc<Groupoid>, member: Vec<bool>) -> Self {
        Subgroupoid { parent, member }
    }

    pub fn parent(&self) -> &Arc<Groupoid> {
        &self.parent
    }

    pub fn contains(&self, f: MorId) -> bool {
        self.member[f.0]
    }

    pub fn mask(&self) -> &[bool] {
        &self.member
    }

    /// Member morphisms, ascending.
    pub fn morphisms(&self) -> Vec<MorId> {
        self.parent.morphisms().filter(|f| self.member[f.0]).collect()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Member names, ascending by id.
    pub fn names(&self) -> Vec<String> {
        self.morphisms()
            .into_iter()
            .map(|f| self.parent.morphism_name(f).to_string())
            .collect()
    }

    /// The subgroupoid as a groupoid in its own right (same objects).
    pub fn to_groupoid(&self, name: String) -> Groupoid {
        let objects: Vec<ObjId> = self.parent.objects().collect();
        self.parent.restricted(name, &objects, &self.morphisms())
    }
}

/// Membership mask of the wide subgroupoid generated by `generators`.
pub(crate) fn closure_mask(g: &Groupoid, generators: impl IntoIterator<Item = MorId>) -> Vec<bool> {
    let mut member = vec![false; g.morphism_count()];
    let mut queue: Vec<MorId> = g.objects().map(|x| g.identity(x)).collect();
    queue.extend(generators);
    let mut members = Vec::new();
    while let Some(f) = queue.pop() {
        if member[f.0] {
            continue;
        }
        member[f.0] = true;
        members.push(f);
        queue.push(g.inverse(f));
        // close against every member seen so far, on both sides
        for &h in &members {
            if g.source(h) == g.target(f) {
                queue.push(g.comp(h, f));
            }
            if g.source(f) == g.target(h) {
                queue.push(g.comp(f, h));
            }
        }
    }
    member
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic, pair_groupoid};

    #[test]
    fn trivial_and_whole_are_valid() {
        for g in [cyclic(4), pair_groupoid(3)] {
            let g = Arc::new(g);
            let ids: Vec<MorId> = g.objects().map(|x| g.identity(x)).collect();
            assert!(Subgroupoid::new(g.clone(), ids).is_ok());
            assert!(Subgroupoid::new(g.clone(), g.morphisms()).is_ok());
            assert_eq!(Subgroupoid::identities(g.clone()).len(), g.object_count());
            assert_eq!(Subgroupoid::whole(g.clone()).len(), g.morphism_count());
        }
    }

    #[test]
    fn missing_inverse_is_reported() {
        let p = Arc::new(pair_groupoid(2));
        let f = p.morphism_by_name("p1_2").unwrap();
        let err = Subgroupoid::new(p.clone(), [MorId(0), MorId(3), f]).unwrap_err();
        assert_eq!(
            err,
            vec![SubgroupoidViolation::NotClosedUnderInverse { morphism: f }]
        );
    }

    #[test]
    fn not_wide_and_not_closed() {
        let z4 = Arc::new(cyclic(4));
        let a = z4.morphism_by_name("a").unwrap();
        let err = Subgroupoid::new(z4.clone(), [a]).unwrap_err();
        assert_eq!(err[0], SubgroupoidViolation::NotWide { object: ObjId(0) });
        assert!(err
            .iter()
            .any(|v| matches!(v, SubgroupoidViolation::NotClosedUnderComposition { .. })));
    }

    #[test]
    fn generated_closure() {
        let z4 = Arc::new(cyclic(4));
        let a2 = z4.morphism_by_name("a2").unwrap();
        let h = Subgroupoid::generated_by(z4.clone(), [a2]);
        assert_eq!(h.names(), vec!["e", "a2"]);
        let a = z4.morphism_by_name("a").unwrap();
        assert_eq!(Subgroupoid::generated_by(z4.clone(), [a]).len(), 4);
        let sub = h.to_groupoid("H".into());
        sub.to_raw().validate().unwrap();
        assert_eq!(sub.morphism_count(), 2);
    }
}
