//! Desk-scale search over wide subgroupoids `K ⊆ G` for one whose sliced
//! coset classes match the image of an induced functor.
//!
//! The criterion tested: the rule `[f] ↦ F_X f` (over slice objects `f`) is
//! well defined on the classes of `(K:G/X)⫽G` and is a bijection onto
//! `im F_X`. This is one reading of "analogous to the coset space of a
//! kernel"; the report says so and decides nothing beyond it.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::coset::coset_relation;
use crate::error::{Error, Result};
use crate::functor::Functor;
use crate::groupoid::{Groupoid, MorId, ObjId};
use crate::kernel::induced_functor;
use crate::subgroupoid::{closure_mask, Subgroupoid};

pub const CRITERION: &str = "the rule [f] -> F_X f on classes meeting the apex is well defined and bijective onto im F_X (one reading of the question; experimental, not a proof)";

/// Every wide subgroupoid of `g`, ordered by size and then by membership
/// mask. Fails once more than `budget` have been found.
pub fn wide_subgroupoids(g: &Arc<Groupoid>, budget: usize) -> Result<Vec<Subgroupoid>> {
    let start = closure_mask(g, std::iter::empty());
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = vec![start];
    let mut i = 0;
    while i < queue.len() {
        let current = queue[i].clone();
        for f in g.morphisms() {
            if current[f.0] {
                continue;
            }
            let gens = current
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| MorId(k))
                .chain(std::iter::once(f));
            let next = closure_mask(g, gens);
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                queue.push(next);
            }
        }
        i += 1;
    }
    queue.sort_by(|a, b| {
        let count = |m: &Vec<bool>| m.iter().filter(|&&x| x).count();
        count(a).cmp(&count(b)).then_with(|| b.cmp(a))
    });
    Ok(queue
        .into_iter()
        .map(|mask| Subgroupoid::from_mask_unchecked(g.clone(), mask))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassImage {
    /// `[f]`, named by its representative.
    pub class: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    /// Morphisms of `K`, ascending by id.
    pub members: Vec<String>,
    pub satisfied: bool,
    /// Class-to-image pairing when satisfied.
    pub bijection: Vec<ClassImage>,
    /// Why the pairing fails, when it does.
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExploreReport {
    pub functor: String,
    pub apex: String,
    pub criterion: String,
    pub candidates_examined: usize,
    pub image: Vec<String>,
    pub candidates: Vec<Candidate>,
    /// Members of each satisfying `K`.
    pub satisfying: Vec<Vec<String>>,
}

pub fn explore_question(
    functor: &Functor,
    name: &str,
    apex: ObjId,
    budget: usize,
) -> Result<ExploreReport> {
    let g = functor.source().clone();
    let h = functor.target().clone();
    let fx = induced_functor(functor, apex)?;
    let image = fx.image_and_partition().image;
    let subs = wide_subgroupoids(&g, budget)?;
    let candidates: Vec<Candidate> = subs
        .par_iter()
        .map(|k| evaluate(&g, &h, functor, apex, &image, k))
        .collect();
    let satisfying = candidates
        .iter()
        .filter(|c| c.satisfied)
        .map(|c| c.members.clone())
        .collect();
    Ok(ExploreReport {
        functor: name.to_string(),
        apex: g.object_name(apex).to_string(),
        criterion: CRITERION.to_string(),
        candidates_examined: candidates.len(),
        image: image.iter().map(|&u| h.morphism_name(u).to_string()).collect(),
        candidates,
        satisfying,
    })
}

fn evaluate(
    g: &Groupoid,
    h: &Groupoid,
    functor: &Functor,
    apex: ObjId,
    image: &[MorId],
    k: &Subgroupoid,
) -> Candidate {
    let rel = coset_relation(k);
    let classes = rel.classes_meeting(apex);
    let mut assigned: Vec<Option<(MorId, MorId)>> = vec![None; rel.classes().len()];
    let mut failure = None;
    for &f in g.incoming(apex) {
        let c = rel.class_of(f);
        let u = functor.on_morphism(f);
        match assigned[c] {
            Some((first, v)) if v != u => {
                failure = Some(format!(
                    "not well defined: {} and {} share a class but map to {} and {}",
                    g.morphism_name(first),
                    g.morphism_name(f),
                    h.morphism_name(v),
                    h.morphism_name(u)
                ));
                break;
            }
            Some(_) => {}
            None => assigned[c] = Some((f, u)),
        }
    }
    if failure.is_none() {
        let mut owner: Vec<Option<usize>> = vec![None; h.morphism_count()];
        for &c in &classes {
            let (_, u) = assigned[c].expect("class meets the apex");
            if let Some(prev) = owner[u.0] {
                failure = Some(format!(
                    "not injective: {} and {} both map to {}",
                    rel.class_name(prev),
                    rel.class_name(c),
                    h.morphism_name(u)
                ));
                break;
            }
            owner[u.0] = Some(c);
        }
        if failure.is_none() && classes.len() != image.len() {
            failure = Some(format!("{} classes for {} image members", classes.len(), image.len()));
        }
    }
    let satisfied = failure.is_none();
    let bijection = if satisfied {
        classes
            .iter()
            .map(|&c| ClassImage {
                class: rel.class_name(c),
                image: h
                    .morphism_name(assigned[c].expect("class meets the apex").1)
                    .to_string(),
            })
            .collect()
    } else {
        Vec::new()
    };
    Candidate {
        members: k.names(),
        satisfied,
        bijection,
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic, pair_groupoid, CayleyTable};

    #[test]
    fn subgroupoid_counts() {
        // subgroups of Z4: 3; of S3: 6; of Q8: 6
        assert_eq!(wide_subgroupoids(&Arc::new(cyclic(4)), 100).unwrap().len(), 3);
        let s3 = Arc::new(CayleyTable::symmetric3().to_groupoid().unwrap());
        assert_eq!(wide_subgroupoids(&s3, 100).unwrap().len(), 6);
        let q8 = Arc::new(CayleyTable::quaternion().to_groupoid().unwrap());
        assert_eq!(wide_subgroupoids(&q8, 100).unwrap().len(), 6);
        // wide subgroupoids of P2: identities or everything
        assert_eq!(wide_subgroupoids(&Arc::new(pair_groupoid(2)), 100).unwrap().len(), 2);
        assert!(matches!(
            wide_subgroupoids(&s3, 3),
            Err(Error::BudgetExceeded { budget: 3 })
        ));
    }

    #[test]
    fn mod2_finds_the_kernel() {
        let f = Functor::from_homomorphism(Arc::new(cyclic(4)), Arc::new(cyclic(2)), &[0, 1, 0, 1])
            .unwrap();
        let report = explore_question(&f, "F", ObjId(0), 10_000).unwrap();
        assert_eq!(report.candidates_examined, 3);
        assert_eq!(report.satisfying, vec![vec!["e".to_string(), "a2".to_string()]]);
    }

    #[test]
    fn identity_and_trivial() {
        let p = Arc::new(pair_groupoid(3));
        // every morphism into O1 has its own source, so classes never merge
        // there and all five wide subgroupoids qualify
        let report = explore_question(&Functor::identity(p), "id", ObjId(0), 10_000).unwrap();
        assert_eq!(report.candidates_examined, 5);
        assert_eq!(report.satisfying.len(), 5);
        assert_eq!(report.satisfying[0], vec!["id_O1", "id_O2", "id_O3"]);

        let z3 = Arc::new(cyclic(3));
        let report = explore_question(&Functor::identity(z3), "id", ObjId(0), 10_000).unwrap();
        assert_eq!(report.satisfying, vec![vec!["e"]]);

        let z2 = Arc::new(cyclic(2));
        let t = Functor::from_homomorphism(z2.clone(), z2, &[0, 0]).unwrap();
        let report = explore_question(&t, "t", ObjId(0), 10_000).unwrap();
        assert_eq!(report.satisfying, vec![vec!["e", "a"]]);
        let failed = &report.candidates[0];
        assert!(failed.failure.as_deref().unwrap().starts_with("not injective"));
    }
}
