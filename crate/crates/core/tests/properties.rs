mod common;

use std::sync::Arc;

use proptest::prelude::*;

use gslice::gdsl;
use gslice::gen::{mutate, random_functor, random_groupoid, random_wide_subgroupoid, rng};
use gslice::kernel::induced_functor;
use gslice::slice::{is_zero_object, slice};
use gslice::suite::subgroupoid_suite;
use gslice::DEFAULT_SIZE_LIMIT;

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn generated_groupoids_validate(seed in any::<u64>()) {
        let g = random_groupoid(&mut rng(seed));
        prop_assert!(g.to_raw().validate().is_ok());
    }

    #[test]
    fn single_mutations_are_rejected(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_groupoid(&mut r);
        prop_assert!(mutate(&g.to_raw(), &mut r).validate().is_err());
    }

    #[test]
    fn slices_have_unique_triangles_and_a_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = Arc::new(random_groupoid(&mut r));
        for x in g.objects() {
            let s = slice(g.clone(), x).unwrap();
            let objs = common::into(&g, x);
            prop_assert_eq!(s.base_objects(), &objs[..]);
            for &f in &objs {
                for &f2 in &objs {
                    prop_assert_eq!(common::triangles(&g, f, f2), 1);
                }
            }
            let zero = s.object_of(g.identity(x)).unwrap();
            prop_assert!(is_zero_object(s.groupoid(), zero));
        }
    }

    #[test]
    fn coset_suite_passes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = Arc::new(random_groupoid(&mut r));
        prop_assume!(g.morphism_count() <= 64);
        let h = random_wide_subgroupoid(&g, &mut r);
        let checks = subgroupoid_suite(&h, "H", DEFAULT_SIZE_LIMIT).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        prop_assert!(failed.is_empty(), "{:?}", failed);
    }

    #[test]
    fn full_at_apex_preserves_the_identity(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed));
        for x in f.source().objects() {
            let fx = induced_functor(&f, x).unwrap();
            prop_assert!(fx.check_image_of_identity().holds());
            prop_assert!(fx.check_kernel_properties().hold());
            prop_assert!(fx.check_partition(&fx.image_and_partition()).is_ok());
        }
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let g = random_groupoid(&mut rng(seed));
        let text = gdsl::serialize_groupoid(&g);
        let model = gdsl::load(&text).unwrap();
        prop_assert_eq!(&**model.groupoid(g.name()).unwrap(), &g);
        prop_assert_eq!(gdsl::serialize(&gdsl::parse(&text).unwrap()), text);
    }
}
