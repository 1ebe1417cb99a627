//! Exhaustive sweeps that check the closed formulas independently.
//!
//! The class census walks every acyclic orientation of the n-cycle, the
//! labeling oracle walks every rank labeling of the n-gon and groups them by
//! temporal isomorphism, and the footprint oracle walks every edge subset.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;
use std::thread;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::counting::{self, CountError, ExactCount};
use crate::forms::{CycleOrientation, Footprint, PmForm};
use crate::network::NGon;
use crate::symmetry::{detect_symmetries, SymmetryProfile, SymmetrySignature};

/// Default largest n for the class census.
pub const DEFAULT_CAP: usize = 20;
/// Largest n for the factorial labeling oracle.
pub const LABELING_CAP: usize = 8;
/// Largest n for the footprint subset sweep.
pub const FOOTPRINT_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("CapExceeded: n = {n} is above the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("TooSmall: n = {0}, need n >= 3")]
    TooSmall(usize),
    #[error(transparent)]
    Count(#[from] CountError),
}

fn check_range(n: usize, cap: usize) -> Result<(), EnumerationError> {
    if n < 3 {
        return Err(EnumerationError::TooSmall(n));
    }
    if n > cap || n > 63 {
        return Err(EnumerationError::CapExceeded {
            n,
            cap: cap.min(63),
        });
    }
    Ok(())
}

/// One isotemporal class: its canonical ±-form, how many of the `2^n - 2`
/// forms fall in it, and its symmetries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub form: PmForm,
    pub orbit_size: u64,
    pub profile: SymmetryProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCensus {
    pub n: usize,
    /// Ordered by canonical form.
    pub classes: Vec<ClassEntry>,
    pub total_forms: u64,
    pub by_symmetry_combination: BTreeMap<SymmetrySignature, u64>,
}

impl ClassCensus {
    fn from_buckets(n: usize, buckets: BTreeMap<PmForm, u64>) -> Self {
        let classes: Vec<ClassEntry> = buckets
            .into_iter()
            .map(|(form, orbit_size)| {
                let profile = detect_symmetries(&form);
                ClassEntry {
                    form,
                    orbit_size,
                    profile,
                }
            })
            .collect();
        let total_forms = classes.iter().map(|c| c.orbit_size).sum();
        let mut by_symmetry_combination = BTreeMap::new();
        for c in &classes {
            *by_symmetry_combination
                .entry(c.profile.signature())
                .or_insert(0) += 1;
        }
        Self {
            n,
            classes,
            total_forms,
            by_symmetry_combination,
        }
    }

    /// Distinct footprints, up to rotation and reflection, of classes with a
    /// mirror axis.
    pub fn mirror_footprints(&self) -> BTreeSet<Footprint> {
        self.classes
            .iter()
            .filter(|c| c.profile.has_mirror())
            .map(|c| c.form.footprint().canonical())
            .collect()
    }

    pub fn skewed_rotational_classes(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| c.profile.has_skewed_rotational())
            .count()
    }

    /// Classes with skewed rotational symmetry and any reflective symmetry.
    pub fn skewed_reflective_classes(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| {
                c.profile.has_skewed_rotational()
                    && (c.profile.has_mirror() || c.profile.has_skewed_mirror())
            })
            .count()
    }

    /// The classes sharing each footprint, footprints taken up to rotation
    /// and reflection.
    pub fn classes_per_footprint(&self) -> BTreeMap<Footprint, Vec<&ClassEntry>> {
        let mut map: BTreeMap<Footprint, Vec<&ClassEntry>> = BTreeMap::new();
        for c in &self.classes {
            map.entry(c.form.footprint().canonical())
                .or_default()
                .push(c);
        }
        map
    }
}

/// Canonical-form buckets for the orientations whose bit masks lie in `masks`.
pub fn sweep_orientations(n: usize, masks: Range<u64>) -> BTreeMap<PmForm, u64> {
    let full = (1u64 << n) - 1;
    let mut buckets = BTreeMap::new();
    for mask in masks {
        if mask == 0 || mask == full {
            continue;
        }
        let o = CycleOrientation::from_mask(n, mask).expect("non-constant orientation");
        *buckets
            .entry(PmForm::from_orientation(&o).canonical())
            .or_insert(0) += 1;
    }
    buckets
}

fn merge(mut into: BTreeMap<PmForm, u64>, from: BTreeMap<PmForm, u64>) -> BTreeMap<PmForm, u64> {
    for (k, v) in from {
        *into.entry(k).or_insert(0) += v;
    }
    into
}

/// Buckets all `2^n - 2` ±-forms of the n-gon by canonical form.
pub fn enumerate_pm_classes(n: usize, cap: usize) -> Result<ClassCensus, EnumerationError> {
    check_range(n, cap)?;
    Ok(ClassCensus::from_buckets(
        n,
        sweep_orientations(n, 0..1u64 << n),
    ))
}

/// [`enumerate_pm_classes`] with the sweep split by leading bits over `threads`
/// workers. The result does not depend on `threads`.
pub fn enumerate_pm_classes_parallel(
    n: usize,
    cap: usize,
    threads: usize,
) -> Result<ClassCensus, EnumerationError> {
    check_range(n, cap)?;
    let parts = threads.clamp(1, 1 << n.min(10)).next_power_of_two();
    let width = (1u64 << n) / parts as u64;
    let buckets = thread::scope(|s| {
        let handles: Vec<_> = (0..parts as u64)
            .map(|k| s.spawn(move || sweep_orientations(n, k * width..(k + 1) * width)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .fold(BTreeMap::new(), merge)
    });
    Ok(ClassCensus::from_buckets(n, buckets))
}

/// Groups all n! rank labelings of the n-gon by temporal isomorphism, using
/// only the temporal-path definition, and returns the number of groups.
pub fn brute_force_class_count_via_labelings(n: usize) -> Result<ExactCount, EnumerationError> {
    check_range(n, LABELING_CAP)?;
    let mut representatives: Vec<NGon> = Vec::new();
    for ranks in (1..=n as u32).permutations(n) {
        let gon = NGon::from_ranks(&ranks).expect("a permutation labels an n-gon");
        if !representatives
            .iter()
            .any(|rep| rep.find_temporal_isomorphism(&gon).is_some())
        {
            representatives.push(gon);
        }
    }
    Ok(ExactCount::from(representatives.len() as u64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FootprintMode {
    Rotation,
    RotationAndReflection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FootprintOrbits {
    pub count: u64,
    /// The least bit mask of each orbit, ascending.
    pub representatives: Vec<Footprint>,
}

fn reverse_bits(mask: u64, n: usize) -> u64 {
    mask.reverse_bits() >> (64 - n)
}

/// Orbits of even, nonempty subsets of `Z_n` under rotations, or under
/// rotations and reflections.
pub fn enumerate_footprints(
    n: usize,
    mode: FootprintMode,
) -> Result<FootprintOrbits, EnumerationError> {
    check_range(n, FOOTPRINT_CAP)?;
    let full = (1u64 << n) - 1;
    let rotate = |m: u64, r: usize| {
        if r == 0 {
            m
        } else {
            ((m >> r) | (m << (n - r))) & full
        }
    };
    let mut representatives = Vec::new();
    for mask in 1..=full {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let least_rotation = (1..n).all(|r| rotate(mask, r) >= mask);
        let least = least_rotation
            && match mode {
                FootprintMode::Rotation => true,
                FootprintMode::RotationAndReflection => {
                    let mirrored = reverse_bits(mask, n);
                    (0..n).all(|r| rotate(mirrored, r) >= mask)
                }
            };
        if least {
            representatives.push(Footprint::from_mask(n, mask).expect("even, nonempty"));
        }
    }
    Ok(FootprintOrbits {
        count: representatives.len() as u64,
        representatives,
    })
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub n: u64,
    pub check: String,
    pub formula: String,
    pub oracle: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub entries: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest n given the class census; checks that need it are skipped above.
    pub census_cap: usize,
    pub labeling_cap: usize,
    pub footprint_cap: usize,
    pub threads: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            census_cap: DEFAULT_CAP,
            labeling_cap: LABELING_CAP,
            footprint_cap: FOOTPRINT_CAP,
            threads: 1,
        }
    }
}

fn entry(
    n: usize,
    check: &str,
    formula: Result<ExactCount, CountError>,
    oracle: impl ToString,
) -> CheckResult {
    let oracle = oracle.to_string();
    let (formula, pass) = match formula {
        Ok(v) => {
            let v = v.to_string();
            let pass = v == oracle;
            (v, pass)
        }
        Err(e) => (e.to_string(), false),
    };
    CheckResult {
        n: n as u64,
        check: check.to_string(),
        formula,
        oracle,
        pass,
    }
}

/// Compares every closed formula against its oracle for each n in `range`.
///
/// Per n: the class count against the census, the footprint count against
/// the subset sweep, the census total against `2^n - 2`, the class count
/// against the labeling oracle (small n), and for even n the mirror and
/// skewed-rotational subterms against the census.
pub fn verify(range: Range<usize>, options: VerifyOptions) -> VerificationReport {
    let mut entries = Vec::new();
    for n in range.start.max(3)..range.end {
        let n64 = n as u64;
        let census = if n <= options.census_cap {
            enumerate_pm_classes_parallel(n, options.census_cap, options.threads).ok()
        } else {
            None
        };
        if let Some(c) = &census {
            entries.push(entry(
                n,
                "isotemporal_class_count",
                counting::isotemporal_class_count(n64),
                c.classes.len(),
            ));
        }
        if n <= options.footprint_cap {
            if let Ok(fp) = enumerate_footprints(n, FootprintMode::Rotation) {
                entries.push(entry(
                    n,
                    "footprint_count",
                    counting::footprint_count(n64),
                    fp.count,
                ));
            }
        }
        if let Some(c) = &census {
            entries.push(entry(
                n,
                "census_total",
                Ok(ExactCount::from((1u64 << n) - 2)),
                c.total_forms,
            ));
        }
        if n <= options.labeling_cap {
            if let Ok(count) = brute_force_class_count_via_labelings(n) {
                entries.push(entry(
                    n,
                    "labeling_oracle",
                    counting::isotemporal_class_count(n64),
                    count,
                ));
            }
        }
        if let (Some(c), true) = (&census, n % 2 == 0) {
            entries.push(entry(
                n,
                "mirror_footprint_count",
                counting::mirror_footprint_count(n64),
                c.mirror_footprints().len(),
            ));
            entries.push(entry(
                n,
                "skewed_rotational_form_count",
                counting::skewed_rotational_form_count(n64),
                c.skewed_rotational_classes(),
            ));
        }
    }
    VerificationReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_census() {
        let c = enumerate_pm_classes(3, DEFAULT_CAP).unwrap();
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].form.to_string(), "+-0");
        assert_eq!(c.classes[0].orbit_size, 6);
        assert_eq!(c.total_forms, 6);
    }

    #[test]
    fn square_census() {
        let c = enumerate_pm_classes(4, DEFAULT_CAP).unwrap();
        let got: Vec<(String, u64)> = c
            .classes
            .iter()
            .map(|e| (e.form.to_string(), e.orbit_size))
            .collect();
        assert_eq!(
            got,
            [
                ("+-+-".to_string(), 2),
                ("+-00".to_string(), 8),
                ("+0-0".to_string(), 4)
            ]
        );
        assert_eq!(c.total_forms, 14);
    }

    #[test]
    fn pentagon_census() {
        assert_eq!(
            enumerate_pm_classes(5, DEFAULT_CAP).unwrap().classes.len(),
            3
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_pm_classes(25, DEFAULT_CAP).unwrap_err(),
            EnumerationError::CapExceeded { n: 25, cap: 20 }
        );
        assert_eq!(
            enumerate_pm_classes(2, DEFAULT_CAP).unwrap_err(),
            EnumerationError::TooSmall(2)
        );
        assert!(brute_force_class_count_via_labelings(9).is_err());
        assert!(enumerate_footprints(25, FootprintMode::Rotation).is_err());
    }

    #[test]
    fn parallel_sweep_matches_serial() {
        for n in [5, 8, 11] {
            let serial = enumerate_pm_classes(n, DEFAULT_CAP).unwrap();
            for threads in [1, 3, 4, 16] {
                assert_eq!(
                    enumerate_pm_classes_parallel(n, DEFAULT_CAP, threads).unwrap(),
                    serial
                );
            }
        }
    }

    #[test]
    fn labeling_oracle_small() {
        let counts: Vec<u64> = (3..=7)
            .map(|n| {
                brute_force_class_count_via_labelings(n)
                    .unwrap()
                    .to_u64()
                    .unwrap()
            })
            .collect();
        assert_eq!(counts, [1, 3, 3, 8, 9]);
    }

    #[test]
    fn footprint_orbits() {
        let rot = |n| {
            enumerate_footprints(n, FootprintMode::Rotation)
                .unwrap()
                .count
        };
        let dih = |n| {
            enumerate_footprints(n, FootprintMode::RotationAndReflection)
                .unwrap()
                .count
        };
        assert_eq!(rot(6), 7);
        assert_eq!(rot(5), 3);
        assert_eq!(dih(4), 3);
        assert_eq!(
            enumerate_footprints(4, FootprintMode::Rotation)
                .unwrap()
                .representatives
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>(),
            ["{0,1}", "{0,2}", "{0,1,2,3}"]
        );
    }

    #[test]
    fn verify_shapes() {
        let report = verify(3..4, VerifyOptions::default());
        assert_eq!(report.entries.len(), 4);
        assert!(report.all_pass());
        assert!(verify(5..5, VerifyOptions::default()).entries.is_empty());
        let json = serde_json::to_value(&report).unwrap();
        assert!(json.is_array());
        assert_eq!(json[0]["n"], 3);
        assert_eq!(json[0]["formula"], "1");
    }
}
