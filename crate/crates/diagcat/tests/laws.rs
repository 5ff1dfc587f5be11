//! Cross-module law tests over seed-generated diagrams: the structural
//! invariants that every fixture-level suite relies on, exercised as
//! properties.

use diagcat::base::{self, Backend, ModelClasses};
use diagcat::diagram::{
    braiding_diag, mapping_object, nat_trans_enumerate, tensor_diag, NatTrans,
};
use diagcat::fixtures;
use diagcat::gen::{self, Budget};
use diagcat::kan::yoneda_reduction;
use diagcat::reedy::{pushout_product_base, reedy_cof_verdict};
use diagcat::rng::SplitMix64;
use proptest::prelude::*;

fn small_fixture(idx: usize) -> fixtures::FixtureEntry {
    let names = ["walking-arrow", "commutative-square", "pushout-corner", "discrete-3"];
    fixtures::by_name(names[idx % names.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The constraint-search mapping object and the brute-force
    /// enumeration agree element-by-element on arbitrary seeds.
    #[test]
    fn mapping_object_matches_enumeration(seed in 0u64..5000, fix in 0usize..4) {
        let entry = small_fixture(fix);
        let mut rng = SplitMix64::new(seed);
        let budget = Budget::default();
        let x = gen::random_diagram(&entry.cat, Backend::FinSet, &budget, &mut rng).unwrap();
        let y = gen::random_diagram(&entry.cat, Backend::FinSet, &budget, &mut rng).unwrap();
        let m = mapping_object(&x, &y).unwrap();
        let listed = nat_trans_enumerate(&x, &y).unwrap();
        prop_assert_eq!(m.magnitude(), listed.len());
        for (k, n) in listed.iter().enumerate() {
            prop_assert_eq!(m.index_of_nat_trans(n), Some(k));
        }
    }

    /// The coend reduction is a natural isomorphism on every generated
    /// diagram, not just the fixture set.
    #[test]
    fn coend_reduction_holds_on_random_diagrams(seed in 0u64..5000, fix in 0usize..4) {
        let entry = small_fixture(fix);
        let mut rng = SplitMix64::new(seed);
        let budget = Budget::default();
        let x = gen::random_diagram(&entry.cat, Backend::FinSet, &budget, &mut rng).unwrap();
        let red = yoneda_reduction(&x).unwrap();
        prop_assert!(red.is_natural_iso());
    }

    /// Braiding of the objectwise product squares to the identity.
    #[test]
    fn braiding_is_involutive(seed in 0u64..5000, fix in 0usize..4) {
        let entry = small_fixture(fix);
        let mut rng = SplitMix64::new(seed);
        let budget = Budget::default();
        let x = gen::random_diagram(&entry.cat, Backend::FinSet, &budget, &mut rng).unwrap();
        let y = gen::random_diagram(&entry.cat, Backend::FinSet, &budget, &mut rng).unwrap();
        let b = braiding_diag(&x, &y).unwrap();
        let back = braiding_diag(&y, &x).unwrap();
        let round = back.compose_after(&b).unwrap();
        prop_assert_eq!(round, NatTrans::identity(&tensor_diag(&x, &y).unwrap()));
    }

    /// Pushout products of injections stay injective in both backends.
    #[test]
    fn pushout_product_preserves_injections(seed in 0u64..5000) {
        let mut rng = SplitMix64::new(seed);
        let f = gen::random_injection(Backend::FinSet, rng.range(0, 2), rng.range(2, 3), &mut rng);
        let g = gen::random_injection(Backend::FinSet, rng.range(0, 2), rng.range(2, 3), &mut rng);
        let pp = pushout_product_base(&f, &g).unwrap();
        prop_assert!(base::is_injective(&pp));
        let fv = gen::random_injection(Backend::FinVect, rng.range(0, 2), rng.range(2, 3), &mut rng);
        let gv = gen::random_injection(Backend::FinVect, rng.range(0, 2), rng.range(2, 3), &mut rng);
        let ppv = pushout_product_base(&fv, &gv).unwrap();
        prop_assert!(base::is_injective(&ppv));
    }

    /// Inclusions into sums are Reedy cofibrations on every seed.
    #[test]
    fn sum_inclusions_are_reedy_cofibrations(seed in 0u64..5000, fix in 0usize..3) {
        let entry = small_fixture(fix); // reedy-carrying fixtures only
        let reedy = entry.reedy.clone().unwrap();
        let mut rng = SplitMix64::new(seed);
        let budget = Budget::default();
        let classes = ModelClasses::standard(Backend::FinSet);
        let x = gen::random_diagram(&entry.cat, Backend::FinSet, &budget, &mut rng).unwrap();
        let f = gen::random_cofibration_into_sum(&x, &budget, &mut rng).unwrap();
        let (is_cof, _) = reedy_cof_verdict(&reedy, &f, &classes).unwrap();
        prop_assert!(is_cof);
    }
}
