//! Cycle orientations, ±-forms and footprints of temporal n-gons.
//!
//! Edges are indexed from 0 here; `e_0` joins the first two vertices of the
//! cycle. Orientation bit `i` is set when edge `i` happens before edge `i + 1`,
//! i.e. the line-graph arrow between them points toward `i + 1`.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::network::NGon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("TooShort: an n-gon needs n >= 3, got {0}")]
    TooShort(usize),
    #[error("NoPlus: a form needs at least one '+'")]
    NoPlus,
    #[error("AlternationViolated: nonzero labels must alternate '+' and '-' (position {0})")]
    AlternationViolated(usize),
    #[error("InvalidSymbol: {0:?} is not one of '+', '-', '0'")]
    InvalidSymbol(char),
    #[error("Unrealizable: an orientation with all arrows the same way is a directed cycle")]
    Unrealizable,
    #[error("InvalidFootprint: {0}")]
    InvalidFootprint(String),
}

/// A ±-label. The derived order (`Plus < Minus < Zero`) is the one used for
/// canonical forms, and agrees with the ASCII order of `'+' '-' '0'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Result<Sign, FormError> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' | '\u{2212}' => Ok(Sign::Minus),
            '0' => Ok(Sign::Zero),
            other => Err(FormError::InvalidSymbol(other)),
        }
    }
}

/// Directions of the n arrows of an n-gon's line graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleOrientation {
    bits: Vec<bool>,
}

impl CycleOrientation {
    pub fn new(bits: Vec<bool>) -> Result<Self, FormError> {
        if bits.len() < 3 {
            return Err(FormError::TooShort(bits.len()));
        }
        if bits.iter().all(|&b| b == bits[0]) {
            return Err(FormError::Unrealizable);
        }
        Ok(Self { bits })
    }

    /// Bit `i` taken from bit `i` of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self, FormError> {
        Self::new((0..n).map(|i| mask >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn to_mask(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |m, (i, &b)| m | (u64::from(b) << i))
    }
}

/// The orientation of an n-gon's directed line graph.
pub fn line_graph_orientation(gon: &NGon) -> CycleOrientation {
    let r = gon.ranks();
    let n = r.len();
    CycleOrientation {
        bits: (0..n).map(|i| r[i] < r[(i + 1) % n]).collect(),
    }
}

/// A valid ±-form: nonzero labels alternate `+`, `-` around the cycle and at
/// least one `+` is present.
///
/// Ordering is lexicographic from position 0 with `+ < - < 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PmForm {
    labels: Vec<Sign>,
}

impl PmForm {
    /// Checks the ±-form invariants.
    pub fn new(labels: Vec<Sign>) -> Result<Self, FormError> {
        if labels.len() < 3 {
            return Err(FormError::TooShort(labels.len()));
        }
        if !labels.contains(&Sign::Plus) {
            return Err(FormError::NoPlus);
        }
        let nonzero: Vec<usize> = (0..labels.len())
            .filter(|&i| !labels[i].is_zero())
            .collect();
        for (k, &i) in nonzero.iter().enumerate() {
            let next = nonzero[(k + 1) % nonzero.len()];
            if labels[next] == labels[i] {
                return Err(FormError::AlternationViolated(next));
            }
        }
        Ok(Self { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Sign] {
        &self.labels
    }

    /// Label of edge `i`, taken cyclically.
    pub fn at(&self, i: isize) -> Sign {
        self.labels[i.rem_euclid(self.labels.len() as isize) as usize]
    }

    /// `+` marks an edge later than both neighbours, `-` one earlier than both.
    pub fn from_orientation(o: &CycleOrientation) -> PmForm {
        let bits = o.bits();
        let n = bits.len();
        let labels = (0..n)
            .map(|a| match (bits[(a + n - 1) % n], bits[a]) {
                (true, false) => Sign::Plus,
                (false, true) => Sign::Minus,
                _ => Sign::Zero,
            })
            .collect();
        PmForm { labels }
    }

    /// The unique orientation with this ±-form: after a `-` times increase
    /// until the next `+`, after a `+` they decrease until the next `-`.
    pub fn orientation(&self) -> CycleOrientation {
        let n = self.len();
        let last = (0..n)
            .rev()
            .map(|i| self.labels[i])
            .find(|s| !s.is_zero())
            .expect("a valid form has a nonzero label");
        let mut rising = last == Sign::Minus;
        let bits = self
            .labels
            .iter()
            .map(|&s| {
                match s {
                    Sign::Minus => rising = true,
                    Sign::Plus => rising = false,
                    Sign::Zero => {}
                }
                rising
            })
            .collect();
        CycleOrientation { bits }
    }

    pub fn footprint(&self) -> Footprint {
        Footprint {
            members: self.labels.iter().map(|s| !s.is_zero()).collect(),
        }
    }

    /// A rank labeling `1..=n` with this ±-form.
    ///
    /// Ranks are handed out in increasing order, each time to the
    /// lowest-indexed edge all of whose earlier neighbours are already ranked.
    pub fn realize(&self) -> NGon {
        let n = self.len();
        let bits = self.orientation().bits;
        // e_(i-1) precedes e_i when bit i-1 is set; e_(i+1) precedes e_i when bit i is clear
        let mut waiting: Vec<u8> = (0..n)
            .map(|i| u8::from(bits[(i + n - 1) % n]) + u8::from(!bits[i]))
            .collect();
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&i| waiting[i] == 0).map(Reverse).collect();
        let mut ranks = vec![0u32; n];
        let mut next_rank = 1;
        while let Some(Reverse(i)) = ready.pop() {
            ranks[i] = next_rank;
            next_rank += 1;
            let (left, right) = ((i + n - 1) % n, (i + 1) % n);
            if bits[i] {
                waiting[right] -= 1;
                if waiting[right] == 0 {
                    ready.push(Reverse(right));
                }
            }
            if !bits[left] {
                waiting[left] -= 1;
                if waiting[left] == 0 {
                    ready.push(Reverse(left));
                }
            }
        }
        debug_assert_eq!(next_rank as usize, n + 1);
        NGon::from_ranks(&ranks).expect("ranks of a cycle form a valid n-gon")
    }

    /// Position `i` of the result carries the old label at `i + rot`, or at
    /// `rot - i` when `reflect` is set (indices mod n).
    pub fn dihedral_transform(&self, rot: usize, reflect: bool) -> PmForm {
        let n = self.len();
        let labels = (0..n)
            .map(|i| self.labels[dihedral_index(n, i, rot, reflect)])
            .collect();
        PmForm { labels }
    }

    pub fn negate(&self) -> PmForm {
        PmForm {
            labels: self.labels.iter().map(|s| s.negate()).collect(),
        }
    }

    /// The least of the 2n dihedral images.
    pub fn canonical(&self) -> PmForm {
        let (rot, reflect) = self.canonical_transform();
        self.dihedral_transform(rot, reflect)
    }

    /// Some `(rot, reflect)` taking this form to its canonical form.
    pub fn canonical_transform(&self) -> (usize, bool) {
        let n = self.len();
        let mut best = (0, false);
        for g in 1..2 * n {
            let cand = (g % n, g >= n);
            if self.compare_images(cand, best) == Ordering::Less {
                best = cand;
            }
        }
        best
    }

    fn compare_images(&self, a: (usize, bool), b: (usize, bool)) -> Ordering {
        let n = self.len();
        (0..n)
            .map(|i| {
                self.labels[dihedral_index(n, i, a.0, a.1)]
                    .cmp(&self.labels[dihedral_index(n, i, b.0, b.1)])
            })
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// All 2n dihedral images, rotations first.
    pub fn dihedral_images(&self) -> impl Iterator<Item = PmForm> + '_ {
        let n = self.len();
        (0..2 * n).map(move |g| self.dihedral_transform(g % n, g >= n))
    }
}

#[inline]
pub(crate) fn dihedral_index(n: usize, i: usize, rot: usize, reflect: bool) -> usize {
    if reflect {
        (rot % n + n - i) % n
    } else {
        (i + rot) % n
    }
}

impl fmt::Display for PmForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.labels
            .iter()
            .try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for PmForm {
    type Err = FormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let labels = s
            .trim()
            .chars()
            .map(Sign::from_char)
            .collect::<Result<Vec<_>, _>>()?;
        PmForm::new(labels)
    }
}

impl Serialize for PmForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PmForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Edge positions carrying a nonzero label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Footprint {
    members: Vec<bool>,
}

impl Footprint {
    /// A footprint on `n` edges; it must have an even, nonzero number of positions.
    pub fn new(n: usize, positions: &[usize]) -> Result<Self, FormError> {
        let mut members = vec![false; n];
        for &p in positions {
            if p >= n {
                return Err(FormError::InvalidFootprint(format!(
                    "position {p} out of 0..{n}"
                )));
            }
            if std::mem::replace(&mut members[p], true) {
                return Err(FormError::InvalidFootprint(format!(
                    "position {p} repeated"
                )));
            }
        }
        let k = positions.len();
        if k == 0 || k % 2 == 1 {
            return Err(FormError::InvalidFootprint(format!(
                "{k} positions; a footprint has an even number, at least 2"
            )));
        }
        Ok(Self { members })
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self, FormError> {
        let positions: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        Self::new(n, &positions)
    }

    /// Number of edges of the host n-gon.
    pub fn n(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i % self.n()]
    }

    pub fn positions(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.members[i]).collect()
    }

    pub fn dihedral_transform(&self, rot: usize, reflect: bool) -> Footprint {
        let n = self.n();
        Footprint {
            members: (0..n)
                .map(|i| self.members[dihedral_index(n, i, rot, reflect)])
                .collect(),
        }
    }

    /// The least dihedral image, comparing membership flags from position 0.
    pub fn canonical(&self) -> Footprint {
        let n = self.n();
        (0..2 * n)
            .map(|g| self.dihedral_transform(g % n, g >= n))
            .min()
            .expect("n >= 1")
    }

    /// The ±-form on this footprint whose lowest-indexed member is a `+`.
    pub fn labeling(&self) -> PmForm {
        let mut sign = Sign::Plus;
        let labels = self
            .members
            .iter()
            .map(|&m| {
                if m {
                    let s = sign;
                    sign = sign.negate();
                    s
                } else {
                    Sign::Zero
                }
            })
            .collect();
        PmForm { labels }
    }
}

impl fmt::Display for Footprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.positions().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
