use rathyp_core::cyclo::{
    default_multipliers, degrees_triple, find_deg2_representative, sqrt3, verify_euclidean_triangle, CycNum,
    DEFAULT_ANGLE_SWEEP, DEGREE_TWO_CLASSES,
};
use rathyp_core::relations::{build_quad_relation, build_triangle_relation, quad_relation_symmetric};
use rathyp_core::trig::AngleQ;

const TRIANGLE: &str = include_str!("golden/triangle_relation.txt");
const QUAD: &str = include_str!("golden/quad_relation.txt");

#[test]
fn triangle_relation_matches_frozen_dump() {
    let rel = build_triangle_relation().unwrap();
    assert_eq!(rel.body.dump(), TRIANGLE);
    assert_eq!(rel.body.term_count(), 25);
    assert!(!rel.steps.is_empty());
}

#[test]
fn quad_relation_matches_frozen_dump() {
    let rel = build_quad_relation().unwrap();
    assert_eq!(rel.body.dump(), QUAD);
    assert_eq!(rel.body.term_count(), 1041);
    assert!(quad_relation_symmetric(&rel));
    assert!(!rel.steps.is_empty());
}

#[test]
fn right_fifteen_degree_representative_is_proportional_to_reference() {
    let triple = degrees_triple([15, 75, 90]).unwrap();
    let rep = find_deg2_representative(&triple, &default_multipliers()).unwrap().unwrap();
    let s3 = sqrt3();
    let one = CycNum::one();
    let reference = [&s3 - &one, &s3 + &one, &CycNum::from_int(2) * &rathyp_core::cyclo::sqrt2()];
    let ratio = rep.sides[0].checked_div(&reference[0]).unwrap();
    assert!(ratio.is_rational());
    for (s, r) in rep.sides.iter().zip(&reference) {
        assert_eq!(s.checked_div(r).unwrap(), ratio);
    }
}

#[test]
fn every_degree_two_class_has_a_representative_with_matching_angles() {
    for d in DEGREE_TWO_CLASSES {
        let triple = degrees_triple(d).unwrap();
        let rep = find_deg2_representative(&triple, &default_multipliers())
            .unwrap()
            .unwrap_or_else(|| panic!("no representative for {d:?}"));
        assert!(rep.degrees.iter().all(|&k| k <= 2));
        let angles = verify_euclidean_triangle(&rep.sides, DEFAULT_ANGLE_SWEEP).unwrap();
        let got: Vec<AngleQ> = angles.iter().map(|a| a.unwrap()).collect();
        assert_eq!(got, triple.to_vec(), "{d:?}");
    }
}

#[test]
fn twenty_sixty_hundred_has_no_representative() {
    let triple = degrees_triple([20, 60, 100]).unwrap();
    assert!(find_deg2_representative(&triple, &default_multipliers()).unwrap().is_none());
}
