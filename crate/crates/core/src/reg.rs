//! Ladder regularization, locked boxes and deregularization.
//!
//! Regularization pushes every box to the top of its ladder. Partitions with
//! the same image form a regularization class; its dominance-largest member
//! is the regular one and its dominance-smallest member is found by sliding
//! the unlocked boxes of any member down their ladders.

use std::collections::HashSet;

use serde::Serialize;

use crate::crystal::{e_tilde, epsilon, f_tilde};
use crate::error::{Error, Result};
use crate::jm::is_jm;
use crate::partition::{BoxPos, LadderIndex, Modulus, Partition, Residue};

/// The regular partition in the class of `lambda`.
pub fn regularize(lambda: &Partition, m: Modulus) -> Partition {
    let mut boxes = Vec::with_capacity(lambda.size());
    for (k, &count) in lambda.ladder_counts(m).iter().enumerate() {
        let ladder: Vec<BoxPos> = m.ladder_positions(LadderIndex(k + 1)).collect();
        boxes.extend_from_slice(&ladder[ladder.len() - count..]);
    }
    Partition::from_boxes(boxes).expect("top-of-ladder arrangement is a partition")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LockLabel {
    /// Locked through the box above (or the first row) and the ladder-gap rule.
    LockedI,
    /// Locked only because a locked box lies further right in the row.
    LockedII,
    Unlocked,
}

impl LockLabel {
    pub fn is_locked(self) -> bool {
        self != LockLabel::Unlocked
    }
}

/// Lock label of every box, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LockLabels {
    rows: Vec<Vec<LockLabel>>,
}

impl LockLabels {
    pub fn get(&self, b: BoxPos) -> Option<LockLabel> {
        self.rows.get(b.row.checked_sub(1)?)?.get(b.col.checked_sub(1)?).copied()
    }

    pub fn rows(&self) -> &[Vec<LockLabel>] {
        &self.rows
    }

    pub fn locked_boxes(&self) -> Vec<BoxPos> {
        self.boxes_where(LockLabel::is_locked)
    }

    pub fn unlocked_boxes(&self) -> Vec<BoxPos> {
        self.boxes_where(|l| !l.is_locked())
    }

    pub fn all_locked(&self) -> bool {
        self.rows.iter().flatten().all(|l| l.is_locked())
    }

    fn boxes_where(&self, keep: impl Fn(LockLabel) -> bool) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                if keep(label) {
                    out.push(BoxPos::new(r + 1, c + 1));
                }
            }
        }
        out
    }
}

/// True iff every empty position below `x` on its ladder has an empty
/// position directly above it.
fn ladder_gaps_covered(lambda: &Partition, x: BoxPos, m: Modulus) -> bool {
    let step = m.ell() - 1;
    (1..x.col).all(|t| {
        let below = BoxPos::new(x.row + step * t, x.col - t);
        lambda.contains(below) || !lambda.contains(BoxPos::new(below.row - 1, below.col))
    })
}

/// Labels each box by iterating the two locking rules to their fixpoint.
pub fn lock_labels(lambda: &Partition, m: Modulus) -> LockLabels {
    let gaps: Vec<Vec<bool>> = (1..=lambda.len())
        .map(|r| {
            (1..=lambda.row_len(r))
                .map(|c| ladder_gaps_covered(lambda, BoxPos::new(r, c), m))
                .collect()
        })
        .collect();
    let mut locked: Vec<Vec<bool>> = gaps.iter().map(|row| vec![false; row.len()]).collect();
    let type_one = |locked: &Vec<Vec<bool>>, r: usize, c: usize| {
        gaps[r][c] && (r == 0 || locked[r - 1][c])
    };
    loop {
        let mut changed = false;
        for r in 0..locked.len() {
            // a locked box locks everything to its left, so scan right to left
            let mut seen = false;
            for c in (0..locked[r].len()).rev() {
                let now = seen || type_one(&locked, r, c);
                if now && !locked[r][c] {
                    locked[r][c] = true;
                    changed = true;
                }
                seen |= locked[r][c];
            }
        }
        if !changed {
            break;
        }
    }
    let rows = (0..locked.len())
        .map(|r| {
            (0..locked[r].len())
                .map(|c| {
                    if type_one(&locked, r, c) {
                        LockLabel::LockedI
                    } else if locked[r][c] {
                        LockLabel::LockedII
                    } else {
                        LockLabel::Unlocked
                    }
                })
                .collect()
        })
        .collect();
    LockLabels { rows }
}

/// The dominance-smallest member of the class of `lambda`: locked boxes stay,
/// unlocked boxes drop to the lowest free positions of their own ladder.
pub fn deregularize(lambda: &Partition, m: Modulus) -> Result<Partition> {
    let labels = lock_labels(lambda, m);
    let locked: HashSet<BoxPos> = labels.locked_boxes().into_iter().collect();
    let mut unlocked_per_ladder = vec![0usize; lambda.ladder_counts(m).len()];
    for b in labels.unlocked_boxes() {
        unlocked_per_ladder[b.ladder(m).0 - 1] += 1;
    }
    let mut boxes: Vec<BoxPos> = locked.iter().copied().collect();
    for (k, &count) in unlocked_per_ladder.iter().enumerate() {
        boxes.extend(
            m.ladder_positions(LadderIndex(k + 1))
                .filter(|b| !locked.contains(b))
                .take(count),
        );
    }
    let result = Partition::from_boxes(boxes)
        .ok_or_else(|| Error::Invariant(format!("sliding the unlocked boxes of {lambda} breaks the diagram")))?;
    if !lock_labels(&result, m).all_locked() {
        return Err(Error::Invariant(format!(
            "deregularization of {lambda} gave {result}, which still has unlocked boxes"
        )));
    }
    Ok(result)
}

/// A regularization class, with its regular and its fully locked member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegClass {
    pub representative_regular: Partition,
    pub smallest: Partition,
    /// In decreasing lexicographic order.
    pub members: Vec<Partition>,
}

/// Every partition of `|lambda|` with the same regularization.
pub fn reg_class(lambda: &Partition, m: Modulus) -> Result<RegClass> {
    let target = regularize(lambda, m);
    let counts = lambda.ladder_counts(m);
    let members: Vec<Partition> = Partition::all_of_size(lambda.size())
        .into_iter()
        .filter(|mu| mu.ladder_counts(m) == counts && regularize(mu, m) == target)
        .collect();
    Ok(RegClass {
        smallest: deregularize(lambda, m)?,
        representative_regular: target,
        members,
    })
}

/// True iff no box has hook length `ell * arm`.
pub fn is_ladder_node(lambda: &Partition, m: Modulus) -> bool {
    lambda
        .boxes()
        .all(|b| lambda.hook(b) != m.ell() * lambda.arm_of(b))
}

/// No box with `ell | h`, `arm < (ell-1) leg` and `leg < (ell-1) arm`.
///
/// Both inequalities must hold for a box to be forbidden; requiring only one
/// would forbid every hook divisible by `ell` and leave nothing but cores.
pub fn is_l_partition(lambda: &Partition, m: Modulus) -> Result<bool> {
    let ell = m.require_at_least(3)?.ell();
    Ok(lambda.boxes().all(|b| {
        let (arm, leg) = (lambda.arm_of(b), lambda.leg_of(b));
        lambda.hook(b) % ell != 0 || arm >= (ell - 1) * leg || leg >= (ell - 1) * arm
    }))
}

/// Equivalent form: no box with `ell | h` and `h / ell <= min(arm, leg)`.
pub fn is_l_partition_lyle(lambda: &Partition, m: Modulus) -> Result<bool> {
    let ell = m.require_at_least(3)?.ell();
    Ok(lambda.boxes().all(|b| {
        let h = lambda.hook(b);
        h % ell != 0 || h / ell > lambda.arm_of(b).min(lambda.leg_of(b))
    }))
}

/// Regular, and the fully locked member of its class is JM.
pub fn is_weak_ell_partition(lambda: &Partition, m: Modulus) -> Result<bool> {
    let m = m.require_at_least(3)?;
    if !lambda.is_regular(m) {
        return Err(Error::NotRegular(lambda.clone()));
    }
    is_jm(&deregularize(lambda, m)?, m)
}

/// Which residue to peel off first when several have `epsilon > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResidueChoice {
    #[default]
    Smallest,
    Largest,
}

pub fn mullineux(lambda: &Partition, m: Modulus) -> Result<Partition> {
    mullineux_with(lambda, m, ResidueChoice::Smallest)
}

/// Peels boxes off with `e_i` down to the empty partition, then rebuilds
/// with `f_{-i}` in reverse.
pub fn mullineux_with(lambda: &Partition, m: Modulus, choice: ResidueChoice) -> Result<Partition> {
    let m = m.require_at_least(3)?;
    if !lambda.is_regular(m) {
        return Err(Error::NotRegular(lambda.clone()));
    }
    let mut path: Vec<Residue> = Vec::with_capacity(lambda.size());
    let mut current = lambda.clone();
    while !current.is_empty() {
        let mut candidates = m.residues().filter(|&i| epsilon(&current, i, m) > 0);
        let i = match choice {
            ResidueChoice::Smallest => candidates.next(),
            ResidueChoice::Largest => candidates.last(),
        }
        .ok_or_else(|| Error::Invariant(format!("nonempty regular {current} has no good box")))?;
        current = e_tilde(&current, i, m).expect("epsilon > 0 gives a good box");
        path.push(i);
    }
    let mut image = Partition::empty();
    for &i in path.iter().rev() {
        image = f_tilde(&image, m.negate(i), m)
            .ok_or_else(|| Error::Invariant(format!("f_{} vanishes on {image}", m.negate(i))))?;
    }
    Ok(image)
}
