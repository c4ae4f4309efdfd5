//! Randomized properties of association: involution, label equivariance,
//! and the conic criterion for self-association in the plane.

use galekit_core::gale::{associate, is_self_associated};
use galekit_core::gen::generate_config;
use galekit_core::projective::{equivalent, PointConfiguration, ProjectivePoint};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SHAPES: [(usize, usize); 5] = [(1, 5), (2, 6), (2, 9), (3, 8), (5, 9)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn association_is_an_involution(shape in 0..SHAPES.len(), seed in any::<u64>()) {
        let (n, m) = SHAPES[shape];
        let config = generate_config(n, m, seed, 50).unwrap();
        let once = associate(&config).unwrap();
        prop_assert_eq!(once.target.n(), m - n - 2);
        let twice = associate(&once.target).unwrap();
        prop_assert!(equivalent(&config, &twice.target).unwrap());
    }

    #[test]
    fn association_commutes_with_relabelling(
        shape in 0..SHAPES.len(),
        seed in any::<u64>(),
        perm_seed in any::<u64>(),
    ) {
        let (n, m) = SHAPES[shape];
        let config = generate_config(n, m, seed, 50).unwrap();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(perm_seed));

        let shuffled_then_associated = associate(&config.permuted(&perm).unwrap()).unwrap();
        let associated_then_shuffled = associate(&config).unwrap().target.permuted(&perm).unwrap();
        prop_assert!(equivalent(
            &shuffled_then_associated.target,
            &associated_then_shuffled
        )
        .unwrap());
    }

    #[test]
    fn certificate_annihilates_the_coordinate_matrix(
        shape in 0..SHAPES.len(),
        seed in any::<u64>(),
    ) {
        let (n, m) = SHAPES[shape];
        let config = generate_config(n, m, seed, 50).unwrap();
        let result = associate(&config).unwrap();
        let a = config.coordinate_matrix();
        prop_assert!(a.mul(&result.certificate.transpose()).unwrap().is_zero());
    }

    #[test]
    fn six_points_on_a_conic_are_self_associated(params in prop::collection::btree_set(-60i64..=60, 6)) {
        let points: Vec<ProjectivePoint> = params
            .iter()
            .map(|&t| ProjectivePoint::from_integers(&[1, t, t * t]).unwrap())
            .collect();
        let config = PointConfiguration::new(2, points).unwrap();
        prop_assert!(is_self_associated(&config).unwrap());
    }

    #[test]
    fn generic_sextuples_are_not_self_associated(seed in any::<u64>()) {
        let config = generate_config(2, 6, seed, 50).unwrap();
        prop_assert!(!is_self_associated(&config).unwrap());
    }
}
