//! Young-diagram primitives.
//!
//! Coordinates are 1-based `(row, col)` in English notation: row 1 is the
//! top row and `(1, 1)` is the corner box. Residues are `(col - row) mod ell`
//! and ladder `k` is the set of positions `(r, c)` with
//! `r + (ell - 1)(c - 1) = k`, so that `(k, 1)` is its bottom position.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The integer `ell >= 2` fixing residues, ladders and rim-hook length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Modulus(usize);

impl Modulus {
    pub fn new(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::ModulusTooSmall { ell, min: 2 });
        }
        Ok(Modulus(ell))
    }

    pub fn ell(self) -> usize {
        self.0
    }

    /// Fails unless `ell >= min`.
    pub fn require_at_least(self, min: usize) -> Result<Self> {
        if self.0 < min {
            Err(Error::ModulusTooSmall { ell: self.0, min })
        } else {
            Ok(self)
        }
    }

    /// Every residue `0..ell` in increasing order.
    pub fn residues(self) -> impl Iterator<Item = Residue> {
        (0..self.0).map(Residue)
    }

    /// Reduces an arbitrary integer into `[0, ell)`.
    pub fn residue_of(self, value: i64) -> Residue {
        Residue(value.rem_euclid(self.0 as i64) as usize)
    }

    /// The residue `-i mod ell`.
    pub fn negate(self, i: Residue) -> Residue {
        Residue((self.0 - i.0 % self.0) % self.0)
    }

    /// Positions of ladder `k`, from the bottom `(k, 1)` to the top.
    pub fn ladder_positions(self, k: LadderIndex) -> impl Iterator<Item = BoxPos> {
        let step = self.0 - 1;
        let k = k.0;
        (0..)
            .map_while(move |t: usize| {
                let drop = step * t;
                (drop < k).then(|| BoxPos::new(k - drop, t + 1))
            })
    }

    /// Residue shared by all positions of ladder `k`, namely `(1 - k) mod ell`.
    pub fn ladder_residue(self, k: LadderIndex) -> Residue {
        self.residue_of(1 - k.0 as i64)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue class modulo `ell`, always normalised into `[0, ell)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Residue(pub usize);

impl Residue {
    pub fn value(self) -> usize {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index `k >= 1` of the ladder through `(k, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LadderIndex(pub usize);

/// A 1-based `(row, col)` position in or next to a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoxPos {
    pub row: usize,
    pub col: usize,
}

impl BoxPos {
    pub const fn new(row: usize, col: usize) -> Self {
        BoxPos { row, col }
    }

    pub fn residue(self, m: Modulus) -> Residue {
        m.residue_of(self.col as i64 - self.row as i64)
    }

    pub fn ladder(self, m: Modulus) -> LadderIndex {
        LadderIndex(self.row + (m.ell() - 1) * (self.col - 1))
    }

    /// The reflected position `(col, row)`.
    pub fn transpose(self) -> Self {
        BoxPos::new(self.col, self.row)
    }

    /// True iff the two positions share an edge.
    pub fn is_edge_adjacent(self, other: BoxPos) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

impl fmt::Display for BoxPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Residue `(col - row) mod ell` of a position.
pub fn residue(b: BoxPos, m: Modulus) -> Residue {
    b.residue(m)
}

/// Index of the ladder containing a position.
pub fn ladder_index(b: BoxPos, m: Modulus) -> LadderIndex {
    b.ladder(m)
}

/// An integer partition stored as its positive parts in weakly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    /// Builds a partition from per-row box counts, or `None` if the rows are
    /// not weakly decreasing. Trailing zero rows are dropped; an interior zero
    /// row followed by a nonzero one is rejected.
    pub(crate) fn from_row_lengths(mut rows: Vec<usize>) -> Option<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return None;
        }
        Some(Partition { parts: rows })
    }

    /// Builds the partition whose diagram is exactly `boxes`, if the set is a
    /// Young diagram (left-justified rows of weakly decreasing length).
    pub fn from_boxes<I: IntoIterator<Item = BoxPos>>(boxes: I) -> Option<Self> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for b in boxes {
            if b.row == 0 || b.col == 0 {
                return None;
            }
            if rows.len() < b.row {
                rows.resize(b.row, Vec::new());
            }
            rows[b.row - 1].push(b.col);
        }
        let mut lengths = Vec::with_capacity(rows.len());
        for mut cols in rows {
            cols.sort_unstable();
            if cols.iter().enumerate().any(|(k, &c)| c != k + 1) {
                return None;
            }
            lengths.push(cols.len());
        }
        Partition::from_row_lengths(lengths)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based); zero beyond the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` (1-based); zero beyond the first row.
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.partition_point(|&p| p >= col)
    }

    pub fn contains(&self, b: BoxPos) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.row_len(b.row)
    }

    /// All boxes, row by row, left to right.
    pub fn boxes(&self) -> impl Iterator<Item = BoxPos> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| BoxPos::new(r + 1, c)))
    }

    pub fn transpose(&self) -> Partition {
        let width = self.row_len(1);
        Partition {
            parts: (1..=width).map(|c| self.col_len(c)).collect(),
        }
    }

    fn check_box(&self, b: BoxPos) -> Result<()> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(Error::BoxNotInDiagram {
                pos: b,
                partition: self.clone(),
            })
        }
    }

    pub fn arm(&self, b: BoxPos) -> Result<usize> {
        self.check_box(b)?;
        Ok(self.row_len(b.row) - b.col)
    }

    pub fn leg(&self, b: BoxPos) -> Result<usize> {
        self.check_box(b)?;
        Ok(self.col_len(b.col) - b.row)
    }

    pub fn hook_length(&self, b: BoxPos) -> Result<usize> {
        self.check_box(b)?;
        Ok(self.hook(b))
    }

    /// Hook length of a box known to be in the diagram.
    pub(crate) fn hook(&self, b: BoxPos) -> usize {
        self.row_len(b.row) - b.col + self.col_len(b.col) - b.row + 1
    }

    /// Arm of a box known to be in the diagram.
    pub(crate) fn arm_of(&self, b: BoxPos) -> usize {
        self.row_len(b.row) - b.col
    }

    /// Leg of a box known to be in the diagram.
    pub(crate) fn leg_of(&self, b: BoxPos) -> usize {
        self.col_len(b.col) - b.row
    }

    /// Hook lengths as a grid matching the diagram's row lengths.
    pub fn hook_grid(&self) -> Vec<Vec<usize>> {
        (1..=self.len())
            .map(|r| {
                (1..=self.row_len(r))
                    .map(|c| self.hook(BoxPos::new(r, c)))
                    .collect()
            })
            .collect()
    }

    /// True iff no part value occurs `ell` or more times.
    pub fn is_regular(&self, m: Modulus) -> bool {
        self.parts
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() < m.ell())
    }

    /// Positions whose addition yields a partition, top row first.
    pub fn addable(&self) -> Vec<BoxPos> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| BoxPos::new(r, self.row_len(r) + 1))
            .collect()
    }

    /// Boxes whose removal yields a partition, top row first.
    pub fn removable(&self) -> Vec<BoxPos> {
        (1..=self.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| BoxPos::new(r, self.row_len(r)))
            .collect()
    }

    /// Addable positions of residue `i`, sorted by row.
    pub fn addable_boxes(&self, i: Residue, m: Modulus) -> Vec<BoxPos> {
        self.addable()
            .into_iter()
            .filter(|b| b.residue(m) == i)
            .collect()
    }

    /// Removable boxes of residue `i`, sorted by row.
    pub fn removable_boxes(&self, i: Residue, m: Modulus) -> Vec<BoxPos> {
        self.removable()
            .into_iter()
            .filter(|b| b.residue(m) == i)
            .collect()
    }

    /// `self` with the box `b` added, if that is still a partition.
    pub fn add_box(&self, b: BoxPos) -> Option<Partition> {
        if b.row == 0 || b.col != self.row_len(b.row) + 1 {
            return None;
        }
        if b.row > 1 && self.row_len(b.row - 1) < b.col {
            return None;
        }
        let mut parts = self.parts.clone();
        if b.row > parts.len() {
            parts.push(1);
        } else {
            parts[b.row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// `self` with the box `b` removed, if that is still a partition.
    pub fn remove_box(&self, b: BoxPos) -> Option<Partition> {
        if !self.contains(b) || b.col != self.row_len(b.row) || self.row_len(b.row + 1) >= b.col {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[b.row - 1] -= 1;
        if parts[b.row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// Dominance comparison. `None` means incomparable, which includes
    /// partitions of different sizes.
    pub fn dominance_compare(&self, other: &Partition) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        let (mut le, mut ge) = (true, true);
        for r in 1..=rows {
            a += self.row_len(r);
            b += other.row_len(r);
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// Number of boxes of each residue, indexed by residue.
    pub fn residue_content(&self, m: Modulus) -> Vec<usize> {
        let mut content = vec![0; m.ell()];
        for b in self.boxes() {
            content[b.residue(m).value()] += 1;
        }
        content
    }

    /// Number of boxes on each ladder; index `k - 1` holds ladder `k`.
    pub fn ladder_counts(&self, m: Modulus) -> Vec<usize> {
        let mut counts: Vec<usize> = Vec::new();
        for b in self.boxes() {
            let k = b.ladder(m).0;
            if counts.len() < k {
                counts.resize(k, 0);
            }
            counts[k - 1] += 1;
        }
        counts
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// Partitions of `n` with at most `max_len` parts.
    pub fn all_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
        Partition::all_of_size(n)
            .into_iter()
            .filter(|p| p.len() <= max_len)
            .collect()
    }

    /// Renders the canonical string form, e.g. `3,2,2` or `empty`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

fn fill_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("empty");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Accepts `3,2^2,1^5`, optionally wrapped in parentheses, and `empty` for
/// the empty partition. Exponents expand to repeated parts.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() || inner == "empty" || inner == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in inner.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), Some(e.trim())),
                None => (token, None),
            };
            let value: usize = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {token:?} in {s:?}")))?;
            if value == 0 {
                return Err(Error::Parse(format!("zero part in {s:?}")));
            }
            let count: usize = match exp {
                Some(e) => e
                    .parse()
                    .ok()
                    .filter(|&c| c > 0)
                    .ok_or_else(|| Error::Parse(format!("bad exponent in {token:?}")))?,
                None => 1,
            };
            parts.extend(std::iter::repeat_n(value, count));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Builds a partition from literal parts; panics on invalid input. Intended
/// for tests and examples.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}
