mod common;

use std::sync::Arc;

use gslice::coset::coset_relation;
use gslice::kernel::induced_functor;
use gslice::{Functor, MorId, ObjId, Subgroupoid};

fn ids(v: &[MorId]) -> Vec<usize> {
    v.iter().map(|m| m.0).collect()
}

#[test]
fn case_maps_are_homomorphisms() {
    for (a, b, map) in common::homomorphism_cases() {
        assert!(common::is_homomorphism(&a.table, &b.table, &map), "{} -> {}", a.name, b.name);
    }
}

#[test]
fn kernel_and_partition_match_reference() {
    for (a, b, map) in common::homomorphism_cases() {
        let ga = Arc::new(a.to_groupoid().unwrap());
        let gb = Arc::new(b.to_groupoid().unwrap());
        let f = Functor::from_homomorphism(ga.clone(), gb, &map).unwrap();
        let fx = induced_functor(&f, ObjId(0)).unwrap();
        let label = format!("{} -> {}", a.name, b.name);

        let kernel = common::kernel(&b.table, &map);
        assert_eq!(ids(&fx.kernel()), kernel, "{label}");

        let partition = fx.image_and_partition();
        let fibres = common::fibres(&map);
        assert_eq!(ids(&partition.image), fibres.iter().map(|p| p.0).collect::<Vec<_>>(), "{label}");
        let classes: Vec<Vec<usize>> = partition.classes.iter().map(|c| ids(c)).collect();
        assert_eq!(classes, fibres.into_iter().map(|p| p.1).collect::<Vec<_>>(), "{label}");

        // The fibres are the right cosets of the kernel, and the library's
        // coset classes for the kernel agree with both.
        let mut cosets = common::right_cosets(&a.table, &kernel);
        let mut sorted = classes.clone();
        sorted.sort();
        cosets.sort();
        assert_eq!(sorted, cosets, "{label}");
        let k = Subgroupoid::new(ga, kernel.iter().map(|&i| MorId(i))).unwrap();
        let rel = coset_relation(&k);
        let mut lib: Vec<Vec<usize>> = rel.classes().iter().map(|c| ids(&c.members)).collect();
        lib.sort();
        assert_eq!(lib, cosets, "{label}");
        assert!(fx.check_kernel_properties().hold(), "{label}");
    }
}

#[test]
fn cosets_of_every_subgroup_match_reference() {
    use gslice::builders::CayleyTable;
    use gslice::explore::wide_subgroupoids;
    for group in CayleyTable::small_groups() {
        let g = Arc::new(group.to_groupoid().unwrap());
        for h in wide_subgroupoids(&g, 10_000).unwrap() {
            let members = ids(&h.morphisms());
            let rel = coset_relation(&h);
            let lib: Vec<Vec<usize>> = rel.classes().iter().map(|c| ids(&c.members)).collect();
            assert_eq!(lib, common::right_cosets(&group.table, &members), "{} {members:?}", group.name);
        }
    }
}
