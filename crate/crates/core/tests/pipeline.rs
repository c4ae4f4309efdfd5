//! End-to-end runs through the whole chain: eight general plane points,
//! the ninth base point of their cubic pencil, the quintic witness, and the
//! lift to P^5 where the Weddle criterion takes over.

use galekit_core::gen::generate_config;
use galekit_core::linsys::{
    coble_sextic_witness, ninth_base_point, quintic_witness, solve_system, weddle_membership,
    BaseCondition,
};
use galekit_core::projective::{veronese, ProjectivePoint};
use galekit_core::rational::Rational;
use galekit_core::Error;
use num_bigint::BigInt;
use num_traits::Zero;

/// First `count` seeds (from 0 upward) whose generated octet admits a ninth
/// base point.  Deterministic: same count, same seeds, same points.
fn octets_with_ninth(count: usize) -> Vec<(Vec<ProjectivePoint>, ProjectivePoint)> {
    let mut found = Vec::new();
    for seed in 0..200 {
        if found.len() == count {
            break;
        }
        let config = match generate_config(2, 8, seed, 9) {
            Ok(c) => c,
            Err(_) => continue,
        };
        if let Ok(ninth) = ninth_base_point(config.points()) {
            found.push((config.points().to_vec(), ninth));
        }
    }
    assert_eq!(
        found.len(),
        count,
        "not enough generic octets in seed range"
    );
    found
}

fn cubic_dimension(points: &[ProjectivePoint]) -> usize {
    let conditions = points
        .iter()
        .map(|p| BaseCondition::simple(p.clone()))
        .collect();
    solve_system(2, 3, conditions).unwrap().dimension()
}

#[test]
fn ninth_point_completes_the_pencil_and_feeds_the_quintic() {
    for (eight, ninth) in octets_with_ninth(3) {
        assert!(!eight.contains(&ninth));

        let mut nine = eight.clone();
        nine.push(ninth.clone());
        assert_eq!(cubic_dimension(&eight), 2);
        assert_eq!(cubic_dimension(&nine), 2, "ninth point must cost no rank");

        let (dim, basis) = quintic_witness(&nine).unwrap();
        assert_eq!(dim, 1);
        let f = &basis[0];

        let at_ninth = ninth.rational_coords();
        for a in 0..=2u32 {
            for b in 0..=2u32 - a {
                let c = 2 - a - b;
                let second = f.partial_multi(&[a, b, c]);
                assert!(second.eval(&at_ninth).is_zero());
            }
        }
        for p in &eight {
            let coords = p.rational_coords();
            assert!(f.eval(&coords).is_zero());
            let a = p.coords();
            let b = ninth.coords();
            let line = [
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ];
            let dir = [
                &line[1] * &a[2] - &line[2] * &a[1],
                &line[2] * &a[0] - &line[0] * &a[2],
                &line[0] * &a[1] - &line[1] * &a[0],
            ];
            let mut along = Rational::zero();
            for (v, d) in dir.iter().enumerate() {
                let grad = f.partial(v).eval(&coords);
                along += grad * Rational::from(d.clone());
            }
            assert!(
                along.is_zero(),
                "quintic must be tangent to the pencil line"
            );
        }
    }
}

#[test]
fn lifted_base_points_land_on_the_weddle_locus() {
    for (eight, ninth) in octets_with_ninth(2) {
        let lifted: Vec<ProjectivePoint> = eight.iter().map(|p| veronese(p, 2)).collect();
        let lifted_ninth = veronese(&ninth, 2);

        assert!(weddle_membership(&lifted, &lifted_ninth).unwrap());

        let mut nine = lifted.clone();
        nine.push(lifted_ninth);
        assert!(matches!(
            coble_sextic_witness(&nine),
            Err(Error::NinthPointOnWeddle)
        ));

        // A generic tenth point does not see the pencil.
        let stray = ProjectivePoint::from_integers(&[5, -7, 11]).unwrap();
        assert!(!eight.contains(&stray) && stray != ninth);
        assert!(!weddle_membership(&lifted, &veronese(&stray, 2)).unwrap());

        // Off the Veronese surface entirely: perturb one coordinate.
        let mut raw: Vec<BigInt> = veronese(&stray, 2).coords().to_vec();
        raw[3] += 1;
        let off = ProjectivePoint::from_bigints(&raw).unwrap();
        assert!(!weddle_membership(&lifted, &off).unwrap());
    }
}

#[test]
fn coble_cubic_vanishes_on_the_associated_points() {
    use galekit_core::gale::associate;
    use galekit_core::projective::PointConfiguration;

    let plane = generate_config(2, 9, 41, 30).unwrap();
    let lifted: Vec<ProjectivePoint> = plane.points().iter().map(|p| veronese(p, 2)).collect();
    let cubic = coble_sextic_witness(&lifted).unwrap();

    let config = PointConfiguration::new(5, lifted).unwrap();
    let assoc = associate(&config).unwrap();
    for p in assoc.target.points() {
        assert!(cubic.eval(&p.rational_coords()).is_zero());
    }
}
