//! The Cremona action on point configurations.
//!
//! The standard Cremona transformation T of P^n inverts each coordinate
//! (projectively: coordinate i of the image is the product of all the other
//! coordinates).  The group from the lattice module acts birationally on
//! m-tuples: transposition letters permute the points, and the letter s_0
//! normalizes the first n+2 points to the standard frame and then applies T
//! to everything from the unit point on.  Each step is only defined on an
//! open locus, so the action is exposed as words, not group elements, and a
//! failing step reports its position in the word.

use crate::projective::{equivalent, frame_transform, PointConfiguration, ProjectivePoint};
use crate::weyl;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CremonaWord {
    pub n: usize,
    pub m: usize,
    letters: Vec<usize>,
}

impl CremonaWord {
    pub fn new(n: usize, m: usize, letters: Vec<usize>) -> Result<Self> {
        for &letter in &letters {
            if letter >= m {
                return Err(Error::LetterOutOfRange { letter, m });
            }
        }
        Ok(Self { n, m, letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }
}

/// T(z_0, ..., z_n): coordinate i of the output is the product of the z_j
/// with j != i.  Defined when at most one coordinate vanishes; a single
/// zero coordinate is sent to the matching coordinate point.
pub fn standard_cremona(p: &ProjectivePoint, n: usize) -> Result<ProjectivePoint> {
    if p.ambient_dim() != n {
        return Err(Error::Shape(format!(
            "point lies in P^{}, expected P^{}",
            p.ambient_dim(),
            n
        )));
    }
    let coords = p.coords();
    let zero_count = coords
        .iter()
        .filter(|c| c.sign() == num_bigint::Sign::NoSign)
        .count();
    if zero_count >= 2 {
        return Err(Error::IndeterminacyLocus);
    }
    let out: Vec<num_bigint::BigInt> = (0..coords.len())
        .map(|i| {
            coords
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, c)| c)
                .product()
        })
        .collect();
    ProjectivePoint::from_bigints(&out)
}

fn apply_letter(config: &PointConfiguration, letter: usize) -> Result<PointConfiguration> {
    let n = config.n();
    let m = config.len();
    if letter >= m {
        return Err(Error::LetterOutOfRange { letter, m });
    }
    if letter >= 1 {
        return Ok(config.swapped(letter - 1, letter));
    }
    // s_0: move the first n+2 points onto the standard frame, then apply T
    // from the unit point on.  T fixes the unit point, so the image is
    // (coordinate points, unit point, T(p_{n+3}), ..., T(p_m)).
    let f = frame_transform(config)?;
    let normalized = f.apply_config(config)?;
    let mut points = normalized.points().to_vec();
    for p in points.iter_mut().skip(n + 1) {
        *p = standard_cremona(p, n)?;
    }
    PointConfiguration::new(n, points)
}

/// Apply a word letter by letter, first letter first.  Any step leaving the
/// locus where the action is defined reports the step index and letter.
pub fn cr_apply(word: &CremonaWord, config: &PointConfiguration) -> Result<PointConfiguration> {
    let m = config.len();
    if word.n != config.n() || word.m != m {
        return Err(Error::Shape(format!(
            "word on {} points in P^{}, configuration has {} in P^{}",
            word.m,
            word.n,
            m,
            config.n()
        )));
    }
    if m < word.n + 3 {
        return Err(Error::WrongPointCount {
            need: word.n + 3,
            got: m,
        });
    }
    let mut current = config.clone();
    for (step, &letter) in word.letters.iter().enumerate() {
        current = apply_letter(&current, letter).map_err(|source| Error::WordStep {
            step,
            letter,
            source: Box::new(source),
        })?;
    }
    Ok(current)
}

/// For m = n+3: does the group element indexed by the even subset J act
/// trivially on this configuration's orbit?
pub fn kernel_check(j_set: &[usize], config: &PointConfiguration) -> Result<bool> {
    let n = config.n();
    if config.len() != n + 3 {
        return Err(Error::WrongPointCount {
            need: n + 3,
            got: config.len(),
        });
    }
    let letters = weyl::w_word(j_set, n)?;
    let word = CremonaWord::new(n, n + 3, letters)?;
    let image = cr_apply(&word, config)?;
    equivalent(config, &image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::ConfigGenerator;

    fn word(n: usize, m: usize, letters: &[usize]) -> CremonaWord {
        CremonaWord::new(n, m, letters.to_vec()).unwrap()
    }

    #[test]
    fn cremona_fixes_the_unit_point() {
        let unit = ProjectivePoint::from_integers(&[1, 1, 1, 1]).unwrap();
        assert_eq!(standard_cremona(&unit, 3).unwrap(), unit);
    }

    #[test]
    fn cremona_inverts_coordinates() {
        let p = ProjectivePoint::from_integers(&[1, 2, 3]).unwrap();
        let expect = ProjectivePoint::from_integers(&[6, 3, 2]).unwrap();
        assert_eq!(standard_cremona(&p, 2).unwrap(), expect);
    }

    #[test]
    fn cremona_is_an_involution_on_the_torus() {
        let p = ProjectivePoint::from_integers(&[2, -3, 5, 7]).unwrap();
        let image = standard_cremona(&p, 3).unwrap();
        assert_eq!(standard_cremona(&image, 3).unwrap(), p);
    }

    #[test]
    fn cremona_indeterminacy_and_single_zero() {
        let bad = ProjectivePoint::from_integers(&[0, 0, 1]).unwrap();
        assert!(matches!(
            standard_cremona(&bad, 2),
            Err(Error::IndeterminacyLocus)
        ));
        let edge = ProjectivePoint::from_integers(&[0, 1, 2]).unwrap();
        assert_eq!(
            standard_cremona(&edge, 2).unwrap(),
            ProjectivePoint::from_integers(&[1, 0, 0]).unwrap()
        );
    }

    #[test]
    fn transposition_letters_swap_points() {
        let config = ConfigGenerator::new(3, 20).config(2, 5).unwrap();
        let out = cr_apply(&word(2, 5, &[1]), &config).unwrap();
        assert_eq!(out.points()[0], config.points()[1]);
        assert_eq!(out.points()[1], config.points()[0]);
        assert_eq!(out.points()[2..], config.points()[2..]);
        let back = cr_apply(&word(2, 5, &[1, 1]), &config).unwrap();
        assert_eq!(back, config);
    }

    #[test]
    fn s0_twice_returns_to_the_orbit() {
        let config = ConfigGenerator::new(9, 20).config(2, 5).unwrap();
        let out = cr_apply(&word(2, 5, &[0, 0]), &config).unwrap();
        assert!(equivalent(&config, &out).unwrap());
    }

    #[test]
    fn s0_on_collinear_frame_reports_the_step() {
        let config = PointConfiguration::new(
            2,
            vec![
                ProjectivePoint::from_integers(&[1, 0, 0]).unwrap(),
                ProjectivePoint::from_integers(&[0, 1, 0]).unwrap(),
                ProjectivePoint::from_integers(&[1, 1, 0]).unwrap(),
                ProjectivePoint::from_integers(&[1, 1, 1]).unwrap(),
                ProjectivePoint::from_integers(&[1, 2, 3]).unwrap(),
            ],
        )
        .unwrap();
        match cr_apply(&word(2, 5, &[1, 0]), &config) {
            Err(Error::WordStep {
                step: 1,
                letter: 0,
                source,
            }) => {
                assert!(matches!(*source, Error::DegenerateSubset(_)))
            }
            other => panic!("expected a step-1 failure, got {other:?}"),
        }
    }

    #[test]
    fn worked_example_reciprocal_point() {
        // Configuration (e_0, e_1, e_2, unit, a) with a = (2, 3, 5).  The
        // word [s_4, s_0] first swaps the last two points, then normalizes
        // (1,1,1) into the frame slot, which sends a's old slot to
        // (1/2, 1/3, 1/5) = (15, 10, 6); applying T there restores a, so the
        // whole word returns the input exactly.
        let a = ProjectivePoint::from_integers(&[2, 3, 5]).unwrap();
        let config = PointConfiguration::new(
            2,
            vec![
                ProjectivePoint::coordinate_point(0, 2),
                ProjectivePoint::coordinate_point(1, 2),
                ProjectivePoint::coordinate_point(2, 2),
                ProjectivePoint::unit_point(2),
                a,
            ],
        )
        .unwrap();

        let swapped = cr_apply(&word(2, 5, &[4]), &config).unwrap();
        let f = frame_transform(&swapped).unwrap();
        let mid = f.apply_config(&swapped).unwrap();
        assert_eq!(
            mid.points()[4],
            ProjectivePoint::from_integers(&[15, 10, 6]).unwrap()
        );

        let out = cr_apply(&word(2, 5, &[4, 0]), &config).unwrap();
        assert_eq!(out, config);
    }

    #[test]
    fn words_followed_by_their_reverses_act_trivially() {
        let mut g = ConfigGenerator::new(21, 20);
        let config = g.config(2, 5).unwrap();
        for letters in [vec![0usize, 2, 0], vec![3, 0, 1], vec![0, 4, 0, 4]] {
            let mut round: Vec<usize> = letters.clone();
            round.extend(letters.iter().rev());
            let out = cr_apply(&word(2, 5, &round), &config).unwrap();
            assert!(equivalent(&config, &out).unwrap(), "word {letters:?}");
        }
    }

    #[test]
    fn diagram_relations_hold_on_configurations() {
        let config = ConfigGenerator::new(33, 20).config(2, 6).unwrap();
        // s_0 commutes with every transposition except s_{n+1}.
        for i in [1usize, 2, 4, 5] {
            let ab = cr_apply(&word(2, 6, &[0, i]), &config).unwrap();
            let ba = cr_apply(&word(2, 6, &[i, 0]), &config).unwrap();
            assert!(equivalent(&ab, &ba).unwrap(), "letter {i}");
        }
        let aba = cr_apply(&word(2, 6, &[0, 3, 0]), &config).unwrap();
        let bab = cr_apply(&word(2, 6, &[3, 0, 3]), &config).unwrap();
        assert!(equivalent(&aba, &bab).unwrap());
    }

    #[test]
    fn kernel_subsets_act_trivially() {
        let config = ConfigGenerator::new(5, 20).config(2, 5).unwrap();
        for j in weyl::even_subsets(2) {
            assert!(kernel_check(&j, &config).unwrap(), "J = {j:?}");
        }
        let space = ConfigGenerator::new(6, 20).config(3, 6).unwrap();
        assert!(kernel_check(&[5, 6], &space).unwrap());
    }

    #[test]
    fn non_kernel_words_move_generic_configurations() {
        let config = ConfigGenerator::new(7, 20).config(2, 5).unwrap();
        let out = cr_apply(&word(2, 5, &[1]), &config).unwrap();
        assert!(!equivalent(&config, &out).unwrap());
    }

    #[test]
    fn kernel_check_needs_exactly_n_plus_3_points() {
        let config = ConfigGenerator::new(8, 20).config(2, 6).unwrap();
        assert!(matches!(
            kernel_check(&[4, 5], &config),
            Err(Error::WrongPointCount { need: 5, got: 6 })
        ));
    }

    #[test]
    fn letters_must_be_in_range() {
        assert!(matches!(
            CremonaWord::new(2, 5, vec![5]),
            Err(Error::LetterOutOfRange { letter: 5, m: 5 })
        ));
    }
}
