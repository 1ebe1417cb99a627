//! Classes of n-gons through three independent routes: the isomorphism
//! search on concrete networks, canonical ±-forms, and Burnside's lemma.

use isotemporal::counting::burnside_class_count;
use isotemporal::enumeration::{enumerate_footprints, FootprintMode};
use isotemporal::forms::CycleOrientation;
use isotemporal::{enumerate_pm_classes, line_graph_orientation, NGon, PmForm};
use itertools::Itertools;

#[test]
fn isomorphism_search_agrees_with_canonical_forms_for_pentagons() {
    let gons: Vec<NGon> = (1..=5u32)
        .permutations(5)
        .map(|r| NGon::from_ranks(&r).unwrap())
        .collect();
    let keys: Vec<PmForm> = gons
        .iter()
        .map(|g| PmForm::from_orientation(&line_graph_orientation(g)).canonical())
        .collect();
    for i in 0..gons.len() {
        for j in (i..gons.len()).step_by(7) {
            let same = gons[i].find_temporal_isomorphism(&gons[j]).is_some();
            assert_eq!(
                same,
                keys[i] == keys[j],
                "{:?} vs {:?}",
                gons[i].ranks(),
                gons[j].ranks()
            );
        }
    }
}

#[test]
fn isomorphism_search_agrees_with_canonical_forms_for_sampled_hexagons() {
    let gons: Vec<NGon> = (1..=6u32)
        .permutations(6)
        .step_by(11)
        .map(|r| NGon::from_ranks(&r).unwrap())
        .collect();
    for (a, b) in gons.iter().tuple_combinations().step_by(13) {
        let ka = PmForm::from_orientation(&line_graph_orientation(a)).canonical();
        let kb = PmForm::from_orientation(&line_graph_orientation(b)).canonical();
        assert_eq!(a.find_temporal_isomorphism(b).is_some(), ka == kb);
    }
}

#[test]
fn census_matches_burnside() {
    for n in 3..=14usize {
        let census = enumerate_pm_classes(n, 20).unwrap();
        assert_eq!(
            burnside_class_count(n as u64).unwrap(),
            census.classes.len() as u64,
            "n = {n}"
        );
    }
}

#[test]
fn every_orientation_lands_in_exactly_one_class() {
    for n in 3..=10usize {
        let census = enumerate_pm_classes(n, 20).unwrap();
        let reps: Vec<&PmForm> = census.classes.iter().map(|c| &c.form).collect();
        for mask in 1..(1u64 << n) - 1 {
            let p = PmForm::from_orientation(&CycleOrientation::from_mask(n, mask).unwrap());
            assert_eq!(reps.iter().filter(|r| ***r == p.canonical()).count(), 1);
        }
    }
}

#[test]
fn footprint_sweep_small_values() {
    assert_eq!(
        enumerate_footprints(6, FootprintMode::Rotation)
            .unwrap()
            .count,
        7
    );
    assert_eq!(
        enumerate_footprints(5, FootprintMode::Rotation)
            .unwrap()
            .count,
        3
    );
    assert_eq!(
        enumerate_footprints(4, FootprintMode::RotationAndReflection)
            .unwrap()
            .count,
        3
    );
}
