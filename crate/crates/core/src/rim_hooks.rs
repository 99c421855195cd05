//! Removable rim hooks, cores and weights.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{BoxPos, Modulus, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HookShape {
    Horizontal,
    Vertical,
    Neither,
}

/// A removable rim hook. Boxes run from the northeast end to the southwest end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RimHook {
    boxes: Vec<BoxPos>,
    shape: HookShape,
}

impl RimHook {
    /// Builds a hook from an explicit box list, classifying its shape. Whether
    /// it is actually removable from a given partition is checked by
    /// [`remove_rim_hook`].
    pub fn from_boxes(mut boxes: Vec<BoxPos>) -> Self {
        // northeast first: top row first, rightmost first within a row
        boxes.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
        boxes.dedup();
        let shape = classify(&boxes);
        RimHook { boxes, shape }
    }

    pub fn boxes(&self) -> &[BoxPos] {
        &self.boxes
    }

    pub fn shape(&self) -> HookShape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn northeast(&self) -> BoxPos {
        self.boxes[0]
    }

    pub fn southwest(&self) -> BoxPos {
        self.boxes[self.boxes.len() - 1]
    }

    pub fn is_horizontal(&self) -> bool {
        self.shape == HookShape::Horizontal
    }

    pub fn is_vertical(&self) -> bool {
        self.shape == HookShape::Vertical
    }

    /// The reflected hook, as it sits in the transposed diagram.
    pub fn transpose(&self) -> RimHook {
        RimHook::from_boxes(self.boxes.iter().map(|b| b.transpose()).collect())
    }

    fn contains(&self, b: BoxPos) -> bool {
        self.boxes.contains(&b)
    }
}

fn classify(boxes: &[BoxPos]) -> HookShape {
    let Some(first) = boxes.first() else {
        return HookShape::Neither;
    };
    if boxes.len() > 1 && boxes.iter().all(|b| b.row == first.row) {
        HookShape::Horizontal
    } else if boxes.len() > 1 && boxes.iter().all(|b| b.col == first.col) {
        HookShape::Vertical
    } else {
        HookShape::Neither
    }
}

/// The rim hook cut out by the hook of box `(row, col)`: the rim boxes from
/// `(row, lambda_row)` down to the bottom of column `col`.
fn rim_hook_at(lambda: &Partition, corner: BoxPos) -> RimHook {
    let bottom = lambda.col_len(corner.col);
    let mut boxes = Vec::new();
    for r in corner.row..=bottom {
        let lo = if r == bottom {
            corner.col
        } else {
            lambda.row_len(r + 1).max(corner.col)
        };
        for c in (lo..=lambda.row_len(r)).rev() {
            boxes.push(BoxPos::new(r, c));
        }
    }
    RimHook::from_boxes(boxes)
}

/// Every removable `ell`-rim hook of `lambda`, ordered by the row of the
/// northeast box.
pub fn removable_rim_hooks(lambda: &Partition, m: Modulus) -> Vec<RimHook> {
    let ell = m.ell();
    let mut hooks = Vec::new();
    for r in 1..=lambda.len() {
        // hook lengths strictly decrease along a row, so at most one match
        for c in 1..=lambda.row_len(r) {
            let h = lambda.hook(BoxPos::new(r, c));
            if h == ell {
                hooks.push(rim_hook_at(lambda, BoxPos::new(r, c)));
                break;
            }
            if h < ell {
                break;
            }
        }
    }
    hooks
}

/// Removes `hook` from `lambda`, failing if it is not one of its removable
/// rim hooks.
pub fn remove_rim_hook(lambda: &Partition, hook: &RimHook) -> Result<Partition> {
    if hook.is_empty() {
        return Err(Error::InvalidHook(lambda.clone()));
    }
    let m = Modulus::new(hook.len()).map_err(|_| Error::InvalidHook(lambda.clone()))?;
    let ne = hook.northeast();
    if !lambda.contains(ne) || ne.col != lambda.row_len(ne.row) {
        return Err(Error::InvalidHook(lambda.clone()));
    }
    let known = removable_rim_hooks(lambda, m)
        .into_iter()
        .find(|h| h.northeast() == ne)
        .filter(|h| h.boxes == hook.boxes)
        .ok_or_else(|| Error::InvalidHook(lambda.clone()))?;
    Ok(strip(lambda, &known))
}

fn strip(lambda: &Partition, hook: &RimHook) -> Partition {
    let mut rows = lambda.parts().to_vec();
    for b in hook.boxes() {
        rows[b.row - 1] -= 1;
    }
    Partition::from_row_lengths(rows).expect("removing a rim hook leaves a partition")
}

/// Core and weight of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreResult {
    pub core: Partition,
    pub weight: usize,
}

/// Strips removable hooks, northeast-most row first, until none remain.
pub fn ell_core(lambda: &Partition, m: Modulus) -> CoreResult {
    let mut current = lambda.clone();
    let mut weight = 0;
    while let Some(hook) = removable_rim_hooks(&current, m).into_iter().next() {
        current = strip(&current, &hook);
        weight += 1;
    }
    CoreResult {
        core: current,
        weight,
    }
}

/// True iff no hook length is divisible by `ell`.
pub fn is_core(lambda: &Partition, m: Modulus) -> bool {
    lambda.boxes().all(|b| lambda.hook(b) % m.ell() != 0)
}

/// True iff some box of `a` shares an edge with some box of `b`.
pub fn adjacent(a: &RimHook, b: &RimHook) -> Result<bool> {
    if a.boxes().iter().any(|x| b.contains(*x)) {
        return Err(Error::OverlappingHooks);
    }
    Ok(a
        .boxes()
        .iter()
        .any(|x| b.boxes().iter().any(|y| x.is_edge_adjacent(*y))))
}

/// `lambda` with `hook` removed; `hook` must come from [`removable_rim_hooks`]
/// on the same partition.
pub(crate) fn without_hook(lambda: &Partition, hook: &RimHook) -> Partition {
    strip(lambda, hook)
}
