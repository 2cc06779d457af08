//! Seeded random instances for property tests: groups of order ≤ 8 times
//! pair groupoids on ≤ 4 objects, optionally the disjoint union of two.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::builders::{direct_product, disjoint_union, pair_groupoid, CayleyTable};
use crate::functor::Functor;
use crate::groupoid::{Groupoid, MorId, ObjId, RawGroupoid};
use crate::subgroupoid::{closure_mask, Subgroupoid};

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_group(rng: &mut Rng8) -> CayleyTable {
    CayleyTable::small_groups()
        .choose(rng)
        .expect("library is nonempty")
        .clone()
}

/// `group × P_n` with a random group and `1 ≤ n ≤ 4`.
pub fn random_connected(rng: &mut Rng8) -> (CayleyTable, usize, Groupoid) {
    let group = random_group(rng);
    let n = rng.gen_range(1..=4);
    let g = direct_product(&group.to_groupoid().expect("library groups"), &pair_groupoid(n));
    (group, n, g)
}

/// A connected instance, or with probability ½ the union of two.
pub fn random_groupoid(rng: &mut Rng8) -> Groupoid {
    let (_, _, g) = random_connected(rng);
    if rng.gen_bool(0.5) {
        let (_, _, h) = random_connected(rng);
        disjoint_union(&g, &h)
    } else {
        g
    }
}

/// Closure of a few random morphisms together with all identities.
pub fn random_wide_subgroupoid(g: &Arc<Groupoid>, rng: &mut Rng8) -> Subgroupoid {
    let k = rng.gen_range(0..=3);
    let gens: Vec<MorId> = (0..k)
        .map(|_| MorId(rng.gen_range(0..g.morphism_count())))
        .collect();
    Subgroupoid::from_mask_unchecked(g.clone(), closure_mask(g, gens))
}

/// Corrupts one composition entry: the result is replaced by another
/// morphism, one with the same endpoints when there is a choice. A
/// groupoid with a single morphism has no other value, so the entry is
/// dropped instead.
pub fn mutate(raw: &RawGroupoid, rng: &mut Rng8) -> RawGroupoid {
    let mut out = raw.clone();
    let k = rng.gen_range(0..out.compositions.len());
    let (_, _, h) = out.compositions[k];
    let count = raw.morphisms.len();
    if count == 1 {
        out.compositions.remove(k);
        return out;
    }
    let endpoints = |m: MorId| (raw.morphisms[m.0].source, raw.morphisms[m.0].target);
    let parallel: Vec<MorId> = (0..count)
        .map(MorId)
        .filter(|&m| m != h && endpoints(m) == endpoints(h))
        .collect();
    let replacement = match parallel.choose(rng) {
        Some(&m) => m,
        None => MorId((h.0 + rng.gen_range(1..count)) % count),
    };
    out.compositions[k].2 = replacement;
    out
}

/// `φ × σ : A × P_n → B × P_m` for a random homomorphism `φ` and a random
/// object map `σ`, which extends uniquely to the pair groupoids.
pub fn random_functor(rng: &mut Rng8) -> Functor {
    let (a, n, src) = random_connected(rng);
    let b = random_group(rng);
    let m = rng.gen_range(1..=4);
    let tgt = direct_product(&b.to_groupoid().expect("library groups"), &pair_groupoid(m));
    let homs = a.homomorphisms_to(&b);
    let phi = homs.choose(rng).expect("the trivial map always exists").clone();
    let sigma: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
    let (pn, pm) = (n * n, m * m);
    let morphisms = src
        .morphisms()
        .map(|f| {
            let (x, p) = (f.0 / pn, f.0 % pn);
            let (i, j) = (p / n, p % n);
            Some(MorId(phi[x] * pm + sigma[i] * m + sigma[j]))
        })
        .collect();
    let objects = (0..n).map(|i| Some(ObjId(sigma[i]))).collect();
    Functor::validate(
        Arc::new(src),
        Arc::new(tgt),
        crate::functor::Variance::Covariant,
        objects,
        morphisms,
    )
    .expect("products of functors are functors")
}
