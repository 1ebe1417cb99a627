//! Mirror, skewed mirror, rotational and skewed rotational symmetry of ±-forms.
//!
//! Axis naming: for even n an edge axis crosses `e_a` and `e_(a+n/2)` and is
//! named by `a < n/2`; a vertex axis crosses `v_i` and `v_(i+n/2)` and is named
//! by `i < n/2`. For odd n every axis crosses one edge and the opposite vertex;
//! it is named by the edge and reported among the edge axes, so the vertex
//! axis sets stay empty. Vertex `v_i` sits between `e_(i-1)` and `e_i`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::forms::{dihedral_index, Footprint, PmForm, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SymmetryProfile {
    pub mirror_edge_axes: BTreeSet<usize>,
    pub skewed_mirror_edge_axes: BTreeSet<usize>,
    /// Always empty for valid forms; kept so the claim can be checked rather
    /// than assumed. Not part of the JSON report.
    #[serde(skip)]
    pub mirror_vertex_axes: BTreeSet<usize>,
    pub skewed_mirror_vertex_axes: BTreeSet<usize>,
    pub rotational_folds: BTreeSet<usize>,
    pub skewed_rotational_folds: BTreeSet<usize>,
    pub negation_isomorphic: bool,
}

impl SymmetryProfile {
    pub fn has_mirror(&self) -> bool {
        !self.mirror_edge_axes.is_empty() || !self.mirror_vertex_axes.is_empty()
    }

    pub fn has_skewed_mirror(&self) -> bool {
        !self.skewed_mirror_edge_axes.is_empty() || !self.skewed_mirror_vertex_axes.is_empty()
    }

    pub fn has_rotational(&self) -> bool {
        !self.rotational_folds.is_empty()
    }

    pub fn has_skewed_rotational(&self) -> bool {
        !self.skewed_rotational_folds.is_empty()
    }

    pub fn signature(&self) -> SymmetrySignature {
        SymmetrySignature {
            mirror: self.has_mirror(),
            skewed_mirror: self.has_skewed_mirror(),
            rotational: self.has_rotational(),
            skewed_rotational: self.has_skewed_rotational(),
        }
    }

    /// Number of dihedral elements fixing the form: the rotation subgroup has
    /// order equal to the largest rotational fold, and each mirror axis
    /// contributes one reflection.
    pub fn stabilizer_order(&self) -> usize {
        self.rotational_folds.iter().max().copied().unwrap_or(1)
            + self.mirror_edge_axes.len()
            + self.mirror_vertex_axes.len()
    }
}

/// Which of the four symmetry kinds are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymmetrySignature {
    pub mirror: bool,
    pub skewed_mirror: bool,
    pub rotational: bool,
    pub skewed_rotational: bool,
}

impl SymmetrySignature {
    /// Packs the flags as bits `MSRK`, mirror in the high bit.
    pub fn bits(&self) -> u8 {
        (u8::from(self.mirror) << 3)
            | (u8::from(self.skewed_mirror) << 2)
            | (u8::from(self.rotational) << 1)
            | u8::from(self.skewed_rotational)
    }

    pub fn from_bits(bits: u8) -> Self {
        Self {
            mirror: bits & 8 != 0,
            skewed_mirror: bits & 4 != 0,
            rotational: bits & 2 != 0,
            skewed_rotational: bits & 1 != 0,
        }
    }
}

/// `MSRK` with `-` for each absent kind, e.g. `M-R-`.
impl fmt::Display for SymmetrySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |on: bool, c: char| if on { c } else { '-' };
        write!(
            f,
            "{}{}{}{}",
            flag(self.mirror, 'M'),
            flag(self.skewed_mirror, 'S'),
            flag(self.rotational, 'R'),
            flag(self.skewed_rotational, 'K')
        )
    }
}

#[derive(Clone, Copy)]
enum Relation {
    Equal,
    Opposite,
}

impl Relation {
    fn holds(self, a: Sign, b: Sign) -> bool {
        match self {
            Relation::Equal => a == b,
            Relation::Opposite => a == b.negate(),
        }
    }
}

fn edge_axis(p: &PmForm, a: usize, rel: Relation) -> bool {
    let a = a as isize;
    (0..=p.len() as isize / 2).all(|k| rel.holds(p.at(a - k), p.at(a + k)))
}

fn vertex_axis(p: &PmForm, i: usize, rel: Relation) -> bool {
    let i = i as isize;
    (1..=p.len() as isize / 2).all(|a| rel.holds(p.at(i - a), p.at(i + a - 1)))
}

fn rotation_fold(p: &PmForm, d: usize, rel: Relation) -> bool {
    let n = p.len();
    let shift = n / d;
    (0..n).all(|j| rel.holds(p.labels()[j], p.labels()[(j + shift) % n]))
}

/// Divisors of `n` greater than one.
fn folds(n: usize) -> impl Iterator<Item = usize> {
    (2..=n).filter(move |d| n.is_multiple_of(*d))
}

pub fn detect_symmetries(p: &PmForm) -> SymmetryProfile {
    let n = p.len();
    let edge_axes = if n.is_multiple_of(2) { n / 2 } else { n };
    let vertex_axes = if n.is_multiple_of(2) { n / 2 } else { 0 };
    let pick = |count: usize, test: &dyn Fn(usize) -> bool| -> BTreeSet<usize> {
        (0..count).filter(|&a| test(a)).collect()
    };
    SymmetryProfile {
        mirror_edge_axes: pick(edge_axes, &|a| edge_axis(p, a, Relation::Equal)),
        skewed_mirror_edge_axes: pick(edge_axes, &|a| edge_axis(p, a, Relation::Opposite)),
        mirror_vertex_axes: pick(vertex_axes, &|i| vertex_axis(p, i, Relation::Equal)),
        skewed_mirror_vertex_axes: pick(vertex_axes, &|i| vertex_axis(p, i, Relation::Opposite)),
        rotational_folds: folds(n)
            .filter(|&d| rotation_fold(p, d, Relation::Equal))
            .collect(),
        skewed_rotational_folds: folds(n)
            .filter(|&d| rotation_fold(p, d, Relation::Opposite))
            .collect(),
        negation_isomorphic: is_negation_isomorphic(p),
    }
}

/// Whether some rotation or reflection carries `p` onto its negation.
/// Decided by trying all 2n dihedral maps.
pub fn is_negation_isomorphic(p: &PmForm) -> bool {
    let n = p.len();
    let labels = p.labels();
    (0..2 * n)
        .any(|g| (0..n).all(|i| labels[dihedral_index(n, i, g % n, g >= n)] == labels[i].negate()))
}

/// Folds `d > 1` for which rotating the footprint by `n/d` fixes it.
pub fn footprint_rotational_folds(fp: &Footprint) -> BTreeSet<usize> {
    let n = fp.n();
    folds(n)
        .filter(|&d| (0..n).all(|i| fp.contains(i) == fp.contains(i + n / d)))
        .collect()
}

/// Whether one of the n reflections fixes the footprint.
pub fn footprint_has_reflection(fp: &Footprint) -> bool {
    (0..fp.n()).any(|r| fp.dihedral_transform(r, true) == *fp)
}
