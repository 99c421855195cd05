//! Crystal operators on partitions.
//!
//! Two models share the same signature machinery and differ only in the
//! order in which addable and removable `i`-boxes are read:
//!
//! * classical: bottom row to top row;
//! * ladder: ladder by ladder from left to right, top to bottom within a ladder.
//!
//! After cancelling adjacent `-+` pairs the word reads `+..+-..-`. The good
//! box is the leftmost surviving `-` and the cogood box the rightmost
//! surviving `+`.

use std::fmt;

use serde::Serialize;

use crate::partition::{BoxPos, Modulus, Partition, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// One letter of a signature: `Plus` on an addable box, `Minus` on a removable one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignatureEntry {
    pub sign: Sign,
    #[serde(rename = "box")]
    pub pos: BoxPos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReadingOrder {
    /// Strictly decreasing row.
    Classical,
    /// Increasing ladder, increasing row within a ladder.
    Ladder,
    /// Increasing ladder, decreasing row within a ladder. Agrees with
    /// `Classical` on regular partitions.
    LadderBottomUp,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SignatureWord {
    pub entries: Vec<SignatureEntry>,
    pub order: ReadingOrder,
}

impl SignatureWord {
    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        self.entries.iter().map(|e| e.sign)
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.signs().filter(|&s| s == sign).count()
    }

    pub fn boxes(&self) -> Vec<BoxPos> {
        self.entries.iter().map(|e| e.pos).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for SignatureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

/// Addable and removable `i`-boxes, unordered.
fn signature_entries(lambda: &Partition, i: Residue, m: Modulus) -> Vec<SignatureEntry> {
    let plus = lambda
        .addable_boxes(i, m)
        .into_iter()
        .map(|pos| SignatureEntry { sign: Sign::Plus, pos });
    let minus = lambda
        .removable_boxes(i, m)
        .into_iter()
        .map(|pos| SignatureEntry { sign: Sign::Minus, pos });
    plus.chain(minus).collect()
}

/// The `i`-signature read in the given order.
pub fn signature_in_order(lambda: &Partition, i: Residue, m: Modulus, order: ReadingOrder) -> SignatureWord {
    let mut entries = signature_entries(lambda, i, m);
    match order {
        ReadingOrder::Classical => {
            entries.sort_by(|a, b| b.pos.row.cmp(&a.pos.row));
            // the two row-end positions of a row differ in residue
            assert!(
                entries.windows(2).all(|w| w[0].pos.row != w[1].pos.row),
                "two {i}-boxes of {lambda} share a row"
            );
        }
        ReadingOrder::Ladder => entries.sort_by_key(|e| (e.pos.ladder(m), e.pos.row)),
        ReadingOrder::LadderBottomUp => {
            entries.sort_by_key(|e| (e.pos.ladder(m), std::cmp::Reverse(e.pos.row)))
        }
    }
    SignatureWord { entries, order }
}

pub fn i_signature(lambda: &Partition, i: Residue, m: Modulus) -> SignatureWord {
    signature_in_order(lambda, i, m, ReadingOrder::Classical)
}

pub fn ladder_i_signature(lambda: &Partition, i: Residue, m: Modulus) -> SignatureWord {
    signature_in_order(lambda, i, m, ReadingOrder::Ladder)
}

/// Cancels adjacent `-+` pairs until none remain.
pub fn reduce(word: &SignatureWord) -> SignatureWord {
    let mut kept: Vec<SignatureEntry> = Vec::with_capacity(word.entries.len());
    for &entry in &word.entries {
        match (entry.sign, kept.last()) {
            (Sign::Plus, Some(top)) if top.sign == Sign::Minus => {
                kept.pop();
            }
            _ => kept.push(entry),
        }
    }
    SignatureWord {
        entries: kept,
        order: word.order,
    }
}

/// Leftmost surviving `-` of a reduced word.
fn good(reduced: &SignatureWord) -> Option<BoxPos> {
    reduced.entries.iter().find(|e| e.sign == Sign::Minus).map(|e| e.pos)
}

/// Rightmost surviving `+` of a reduced word.
fn cogood(reduced: &SignatureWord) -> Option<BoxPos> {
    reduced.entries.iter().rev().find(|e| e.sign == Sign::Plus).map(|e| e.pos)
}

/// Which reading order drives the operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrystalModel {
    Classical,
    Ladder,
}

impl CrystalModel {
    pub fn order(self) -> ReadingOrder {
        match self {
            CrystalModel::Classical => ReadingOrder::Classical,
            CrystalModel::Ladder => ReadingOrder::Ladder,
        }
    }

    pub fn signature(self, lambda: &Partition, i: Residue, m: Modulus) -> SignatureWord {
        signature_in_order(lambda, i, m, self.order())
    }

    pub fn reduced(self, lambda: &Partition, i: Residue, m: Modulus) -> SignatureWord {
        reduce(&self.signature(lambda, i, m))
    }

    pub fn good_box(self, lambda: &Partition, i: Residue, m: Modulus) -> Option<BoxPos> {
        good(&self.reduced(lambda, i, m))
    }

    pub fn cogood_box(self, lambda: &Partition, i: Residue, m: Modulus) -> Option<BoxPos> {
        cogood(&self.reduced(lambda, i, m))
    }

    pub fn f(self, lambda: &Partition, i: Residue, m: Modulus) -> Option<Partition> {
        let b = self.cogood_box(lambda, i, m)?;
        Some(lambda.add_box(b).expect("cogood box is addable"))
    }

    pub fn e(self, lambda: &Partition, i: Residue, m: Modulus) -> Option<Partition> {
        let b = self.good_box(lambda, i, m)?;
        Some(lambda.remove_box(b).expect("good box is removable"))
    }

    pub fn epsilon(self, lambda: &Partition, i: Residue, m: Modulus) -> usize {
        self.reduced(lambda, i, m).count(Sign::Minus)
    }

    pub fn phi(self, lambda: &Partition, i: Residue, m: Modulus) -> usize {
        self.reduced(lambda, i, m).count(Sign::Plus)
    }
}

impl fmt::Display for CrystalModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrystalModel::Classical => "classical",
            CrystalModel::Ladder => "ladder",
        })
    }
}

pub fn f_tilde(lambda: &Partition, i: Residue, m: Modulus) -> Option<Partition> {
    CrystalModel::Classical.f(lambda, i, m)
}

pub fn e_tilde(lambda: &Partition, i: Residue, m: Modulus) -> Option<Partition> {
    CrystalModel::Classical.e(lambda, i, m)
}

pub fn f_hat(lambda: &Partition, i: Residue, m: Modulus) -> Option<Partition> {
    CrystalModel::Ladder.f(lambda, i, m)
}

pub fn e_hat(lambda: &Partition, i: Residue, m: Modulus) -> Option<Partition> {
    CrystalModel::Ladder.e(lambda, i, m)
}

pub fn epsilon(lambda: &Partition, i: Residue, m: Modulus) -> usize {
    CrystalModel::Classical.epsilon(lambda, i, m)
}

pub fn phi(lambda: &Partition, i: Residue, m: Modulus) -> usize {
    CrystalModel::Classical.phi(lambda, i, m)
}

pub fn epsilon_hat(lambda: &Partition, i: Residue, m: Modulus) -> usize {
    CrystalModel::Ladder.epsilon(lambda, i, m)
}

pub fn phi_hat(lambda: &Partition, i: Residue, m: Modulus) -> usize {
    CrystalModel::Ladder.phi(lambda, i, m)
}

/// Position classes relative to a diagram, one per case `a` through `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BoxType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
}

impl BoxType {
    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }
}

impl fmt::Display for BoxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Membership with row 0 and column 0 treated as part of every diagram.
fn inside(lambda: &Partition, row: usize, col: usize) -> bool {
    row == 0 || col == 0 || col <= lambda.row_len(row)
}

/// The type of position `(row, col)`, where `row, col >= 0`.
pub fn box_type(lambda: &Partition, row: usize, col: usize) -> BoxType {
    if inside(lambda, row, col) {
        let below = inside(lambda, row + 1, col);
        let right = inside(lambda, row, col + 1);
        if inside(lambda, row + 1, col + 1) {
            BoxType::A
        } else if below && right {
            BoxType::B
        } else if col > 0 && below {
            BoxType::C
        } else if right {
            BoxType::D
        } else if !below {
            BoxType::E
        } else {
            // only column 0 with an empty row to its right reaches here
            BoxType::F
        }
    } else {
        match box_type(lambda, row - 1, col - 1) {
            BoxType::E => BoxType::G,
            BoxType::C => BoxType::H,
            BoxType::D => BoxType::I,
            BoxType::B => BoxType::J,
            _ => BoxType::K,
        }
    }
}

/// Number of boxes of each residue, indexed by residue.
pub fn residue_content(lambda: &Partition, m: Modulus) -> Vec<usize> {
    lambda.residue_content(m)
}
