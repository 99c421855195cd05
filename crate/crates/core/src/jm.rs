//! Classification, decomposition and counting of `(ell,0)`-JM partitions.
//!
//! A partition is JM when it has no box `(a,b)` with `ell | h(a,b)` together
//! with a box `(a,y)` in the same row and a box `(x,b)` in the same column
//! whose hook lengths are both prime to `ell`. Every JM partition is built
//! from a small core `mu` by stacking `r` rows and `s` columns that grow by
//! `ell - 1`, then gluing horizontal hooks onto the first `r + 1` rows and
//! vertical hooks onto the first `s + 1` columns; [`JmDecomposition`] records
//! that data.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{BoxPos, Modulus, Partition};
use crate::rim_hooks::{adjacent, ell_core, is_core, removable_rim_hooks, without_hook, HookShape};

/// The data `(mu, r, s, rho, sigma)` of a JM partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct JmDecomposition {
    pub mu: Partition,
    pub r: usize,
    pub s: usize,
    pub rho: Partition,
    pub sigma: Partition,
}

/// Boxes `(a,b)`, `(a,y)`, `(x,b)` certifying that a partition is not JM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FayersWitness {
    pub base: BoxPos,
    pub rowmate: BoxPos,
    pub colmate: BoxPos,
}

fn jm_modulus(m: Modulus) -> Result<Modulus> {
    m.require_at_least(3)
}

/// True iff in every column the hook lengths are either all divisible by
/// `ell` or none are.
pub fn star_condition(lambda: &Partition, m: Modulus) -> bool {
    let ell = m.ell();
    (1..=lambda.row_len(1)).all(|c| {
        let mut divisible = (1..=lambda.col_len(c)).map(|r| lambda.hook(BoxPos::new(r, c)) % ell == 0);
        let first = divisible.next().unwrap_or(true);
        divisible.all(|d| d == first)
    })
}

/// `ell`-partition test straight from the rim-hook definition: regular, and
/// no non-horizontal removable hook appears after stripping any sequence of
/// horizontal hooks.
pub fn is_ell_partition(lambda: &Partition, m: Modulus) -> bool {
    fn only_horizontal(
        lambda: &Partition,
        m: Modulus,
        memo: &mut HashMap<Partition, bool>,
    ) -> bool {
        if let Some(&known) = memo.get(lambda) {
            return known;
        }
        let hooks = removable_rim_hooks(lambda, m);
        let ok = hooks.iter().all(|h| h.is_horizontal())
            && hooks
                .iter()
                .all(|h| only_horizontal(&without_hook(lambda, h), m, memo));
        memo.insert(lambda.clone(), ok);
        ok
    }
    lambda.is_regular(m) && only_horizontal(lambda, m, &mut HashMap::new())
}

/// The lexicographically first witness by `(a, b, y, x)`, or `None` when
/// `lambda` is JM.
pub fn fayers_witness(lambda: &Partition, m: Modulus) -> Result<Option<FayersWitness>> {
    let ell = jm_modulus(m)?.ell();
    let divisible = |b: BoxPos| lambda.hook(b) % ell == 0;
    for base in lambda.boxes() {
        if !divisible(base) {
            continue;
        }
        let Some(y) = (1..=lambda.row_len(base.row)).find(|&y| !divisible(BoxPos::new(base.row, y))) else {
            continue;
        };
        let Some(x) = (1..=lambda.col_len(base.col)).find(|&x| !divisible(BoxPos::new(x, base.col))) else {
            continue;
        };
        return Ok(Some(FayersWitness {
            base,
            rowmate: BoxPos::new(base.row, y),
            colmate: BoxPos::new(x, base.col),
        }));
    }
    Ok(None)
}

pub fn is_jm(lambda: &Partition, m: Modulus) -> Result<bool> {
    Ok(fayers_witness(lambda, m)?.is_none())
}

/// Generalized `ell`-partition test by memoised search over every sequence of
/// horizontal and vertical hook removals.
pub fn is_generalized_ell_partition(lambda: &Partition, m: Modulus) -> Result<bool> {
    let m = jm_modulus(m)?;
    let mut memo = HashMap::new();
    Ok(generalized(lambda, m, &mut memo))
}

fn generalized(lambda: &Partition, m: Modulus, memo: &mut HashMap<Partition, bool>) -> bool {
    if let Some(&known) = memo.get(lambda) {
        return known;
    }
    let hooks = removable_rim_hooks(lambda, m);
    let ok = hooks.iter().all(|h| h.shape() != HookShape::Neither)
        && hooks.iter().all(|first| {
            let rest = without_hook(lambda, first);
            let opposite = match first.shape() {
                HookShape::Vertical => HookShape::Horizontal,
                _ => HookShape::Vertical,
            };
            removable_rim_hooks(&rest, m)
                .iter()
                .filter(|second| second.shape() == opposite)
                .all(|second| !adjacent(first, second).expect("hooks of nested diagrams are disjoint"))
        })
        && hooks.iter().all(|h| generalized(&without_hook(lambda, h), m, memo));
    memo.insert(lambda.clone(), ok);
    ok
}

/// Number of leading rows of `kappa` whose successive differences are `ell - 1`.
fn leading_steps(kappa: &Partition, m: Modulus) -> usize {
    let step = m.ell() - 1;
    let mut r = 0;
    while kappa.row_len(r + 1) > 0 && kappa.row_len(r + 1) == kappa.row_len(r + 2) + step {
        r += 1;
    }
    r
}

/// `(mu, r, s)` for an `ell`-core: strip the leading `ell - 1` staircases of
/// rows and columns.
fn core_skeleton(core: &Partition, m: Modulus) -> (Partition, usize, usize) {
    let r = leading_steps(core, m);
    let s = leading_steps(&core.transpose(), m);
    let mu: Vec<usize> = core.parts()[r.min(core.len())..]
        .iter()
        .map(|&p| p.saturating_sub(s))
        .collect();
    let mu = Partition::from_row_lengths(mu).expect("rows stay weakly decreasing");
    (mu, r, s)
}

/// Reads off `(mu, r, s, rho, sigma)` by stripping horizontal hooks top row
/// first, then vertical hooks leftmost column first, and checks the result
/// rebuilds `lambda`.
pub fn decompose_jm(lambda: &Partition, m: Modulus) -> Result<JmDecomposition> {
    if !is_jm(lambda, m)? {
        return Err(Error::NotJm(lambda.clone()));
    }
    let mut rho: Vec<usize> = Vec::new();
    let mut sigma: Vec<usize> = Vec::new();
    let mut current = lambda.clone();
    loop {
        let hooks = removable_rim_hooks(&current, m);
        let next = hooks
            .iter()
            .find(|h| h.is_horizontal())
            .or_else(|| hooks.iter().find(|h| h.is_vertical()));
        let Some(hook) = next else {
            if !hooks.is_empty() {
                return Err(Error::Invariant(format!(
                    "JM partition {lambda} reached {current} with a bent rim hook"
                )));
            }
            break;
        };
        let (counts, index) = if hook.is_horizontal() {
            (&mut rho, hook.northeast().row)
        } else {
            (&mut sigma, hook.northeast().col)
        };
        if counts.len() < index {
            counts.resize(index, 0);
        }
        counts[index - 1] += 1;
        current = without_hook(&current, hook);
    }
    let (mu, r, s) = core_skeleton(&current, m);
    let to_partition = |v: Vec<usize>| {
        Partition::new(v).map_err(|e| Error::Invariant(format!("hook counts of {lambda} are not a partition: {e}")))
    };
    let dec = JmDecomposition {
        mu,
        r,
        s,
        rho: to_partition(rho)?,
        sigma: to_partition(sigma)?,
    };
    if compose_jm(&dec, m)? != *lambda {
        return Err(Error::Invariant(format!("decomposition of {lambda} does not rebuild it")));
    }
    Ok(dec)
}

fn validate(dec: &JmDecomposition, m: Modulus) -> Result<()> {
    let step = m.ell() - 1;
    let invalid = |why: &str| Err(Error::InvalidDecomposition(why.to_string()));
    if !is_core(&dec.mu, m) {
        return invalid("mu is not a core");
    }
    if dec.mu.row_len(1) - dec.mu.row_len(2) >= step {
        return invalid("mu_1 - mu_2 must be less than ell - 1");
    }
    if dec.mu.col_len(1) - dec.mu.col_len(2) >= step {
        return invalid("mu'_1 - mu'_2 must be less than ell - 1");
    }
    if dec.rho.len() > dec.r + 1 {
        return invalid("rho has more than r + 1 parts");
    }
    if dec.sigma.len() > dec.s + 1 {
        return invalid("sigma has more than s + 1 parts");
    }
    if dec.mu.is_empty() && dec.rho.row_len(dec.r + 1) > 0 && dec.sigma.row_len(dec.s + 1) > 0 {
        return invalid("with empty mu, rho_{r+1} or sigma_{s+1} must vanish");
    }
    Ok(())
}

/// The core `(mu, r, s, empty, empty)`.
fn skeleton_core(mu: &Partition, r: usize, s: usize, m: Modulus) -> Partition {
    let step = m.ell() - 1;
    let top = s + mu.row_len(1);
    let mut rows: Vec<usize> = (1..=r).rev().map(|k| top + k * step).collect();
    rows.extend(mu.parts().iter().map(|&p| s + p));
    for width in (1..=s).rev() {
        rows.extend(std::iter::repeat_n(width, step));
    }
    Partition::from_row_lengths(rows).expect("skeleton rows are weakly decreasing")
}

/// Builds the JM partition with the given decomposition.
pub fn compose_jm(dec: &JmDecomposition, m: Modulus) -> Result<Partition> {
    let m = jm_modulus(m)?;
    validate(dec, m)?;
    let ell = m.ell();
    let kappa = skeleton_core(&dec.mu, dec.r, dec.s, m);

    let mut rows = kappa.parts().to_vec();
    if rows.len() < dec.r + 1 {
        rows.resize(dec.r + 1, 0);
    }
    for (k, &count) in dec.rho.parts().iter().enumerate() {
        rows[k] += count * ell;
    }
    let glued = Partition::from_row_lengths(rows)
        .ok_or_else(|| Error::InvalidDecomposition("horizontal hooks do not fit".into()))?;

    let mut cols = glued.transpose().parts().to_vec();
    if cols.len() < dec.s + 1 {
        cols.resize(dec.s + 1, 0);
    }
    for (k, &count) in dec.sigma.parts().iter().enumerate() {
        cols[k] += count * ell;
    }
    let glued = Partition::from_row_lengths(cols)
        .ok_or_else(|| Error::InvalidDecomposition("vertical hooks do not fit".into()))?;
    Ok(glued.transpose())
}

/// Number of partitions of `n` with at most `k` parts, for all `n <= max`.
fn bounded_partition_counts(k: usize, max: usize) -> Vec<u64> {
    // p_k(n) = sum over partitions into parts of size at most k (conjugation)
    let mut counts = vec![0u64; max + 1];
    counts[0] = 1;
    for part in 1..=k {
        for n in part..=max {
            counts[n] += counts[n - part];
        }
    }
    counts
}

/// Pairs `(alpha, beta)` with `len(alpha) <= a`, `len(beta) <= b` and
/// `|alpha| + |beta| = w`.
fn bounded_pairs(a: usize, b: usize, w: usize) -> u64 {
    let pa = bounded_partition_counts(a, w);
    let pb = bounded_partition_counts(b, w);
    (0..=w).map(|k| pa[k] * pb[w - k]).sum()
}

/// Number of JM partitions with core `core` and weight `w`.
///
/// When the core's skeleton `mu` is empty, the two families (free `rho_{r+1}`,
/// free `sigma_{s+1}`) overlap in the fillings where both vanish; those are
/// counted once.
pub fn count_jm(core: &Partition, w: usize, m: Modulus) -> Result<u64> {
    let m = jm_modulus(m)?;
    if !is_core(core, m) {
        return Err(Error::NotACore(core.clone()));
    }
    let (mu, r, s) = core_skeleton(core, m);
    if !mu.is_empty() {
        return Ok(bounded_pairs(r + 1, s + 1, w));
    }
    Ok(bounded_pairs(r + 1, s, w) + bounded_pairs(r, s + 1, w) - bounded_pairs(r, s, w))
}

/// The literal two-term sum for cores with empty skeleton, without removing
/// the overlap. Kept to document the discrepancy with [`count_jm`].
pub fn count_jm_two_term_sum(core: &Partition, w: usize, m: Modulus) -> Result<Option<u64>> {
    let m = jm_modulus(m)?;
    if !is_core(core, m) {
        return Err(Error::NotACore(core.clone()));
    }
    let (mu, r, s) = core_skeleton(core, m);
    Ok(mu.is_empty().then(|| bounded_pairs(r + 1, s, w) + bounded_pairs(r, s + 1, w)))
}

/// All JM partitions with the given core and weight, in decreasing
/// lexicographic order.
pub fn enumerate_jm(core: &Partition, w: usize, m: Modulus) -> Result<Vec<Partition>> {
    let m = jm_modulus(m)?;
    if !is_core(core, m) {
        return Err(Error::NotACore(core.clone()));
    }
    let (mu, r, s) = core_skeleton(core, m);
    let mut out = Vec::new();
    for horizontal in 0..=w {
        for rho in Partition::all_with_max_len(horizontal, r + 1) {
            for sigma in Partition::all_with_max_len(w - horizontal, s + 1) {
                if mu.is_empty() && rho.row_len(r + 1) > 0 && sigma.row_len(s + 1) > 0 {
                    continue;
                }
                let dec = JmDecomposition {
                    mu: mu.clone(),
                    r,
                    s,
                    rho: rho.clone(),
                    sigma,
                };
                let lambda = compose_jm(&dec, m)?;
                if !is_jm(&lambda, m)? {
                    return Err(Error::Invariant(format!("composed {lambda} is not JM")));
                }
                let check = ell_core(&lambda, m);
                if check.core != *core || check.weight != w {
                    return Err(Error::Invariant(format!(
                        "composed {lambda} has core {} and weight {}",
                        check.core, check.weight
                    )));
                }
                out.push(lambda);
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn m(ell: usize) -> Modulus {
        Modulus::new(ell).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn star_examples() {
        assert!(star_condition(&partition![6, 4], m(3)));
        assert!(!star_condition(&partition![6, 4], m(2)));
        assert!(star_condition(&partition![1], m(5)));
    }

    #[test]
    fn ell_partition_examples() {
        assert!(is_ell_partition(&partition![6, 4], m(3)));
        assert!(is_ell_partition(&partition![5, 4, 1], m(2)));
        assert!(!is_ell_partition(&partition![5, 4, 1], m(3)));
        for ell in [2, 4, 5, 6, 7] {
            assert!(!is_ell_partition(&partition![6, 4], m(ell)), "ell = {ell}");
        }
        for ell in 8..12 {
            assert!(is_ell_partition(&partition![6, 4], m(ell)), "ell = {ell}");
        }
        for ell in [3, 4, 5, 7] {
            assert!(!is_ell_partition(&partition![5, 4, 1], m(ell)), "ell = {ell}");
        }
    }

    #[test]
    fn witness_examples() {
        let w = fayers_witness(&partition![3, 1, 1, 1], m(3)).unwrap().unwrap();
        assert_eq!(
            w,
            FayersWitness {
                base: BoxPos::new(1, 1),
                rowmate: BoxPos::new(1, 2),
                colmate: BoxPos::new(3, 1),
            }
        );
        let lam = partition![3, 1, 1, 1];
        assert_eq!(lam.hook(w.base), 6);
        assert_eq!(lam.hook(w.rowmate), 2);
        // (2,1) has hook 3, so the first usable colmate is one row lower
        assert_eq!(lam.hook(w.colmate), 2);
        assert_eq!(fayers_witness(&p("10,8,3,2^2,1^5"), m(3)), Ok(None));
        assert_eq!(fayers_witness(&Partition::empty(), m(3)), Ok(None));
    }

    #[test]
    fn jm_needs_ell_at_least_three() {
        let err = Error::ModulusTooSmall { ell: 2, min: 3 };
        assert_eq!(is_jm(&partition![2], m(2)), Err(err.clone()));
        assert_eq!(is_generalized_ell_partition(&partition![2], m(2)), Err(err.clone()));
        assert_eq!(count_jm(&Partition::empty(), 1, m(2)), Err(err));
    }

    #[test]
    fn jm_examples() {
        assert_eq!(is_jm(&partition![9, 4], m(3)), Ok(true));
        assert_eq!(is_jm(&partition![3, 1, 1, 1], m(3)), Ok(false));
        assert_eq!(is_jm(&partition![5, 4, 1], m(6)), Ok(true));
    }

    #[test]
    fn generalized_examples() {
        assert_eq!(is_generalized_ell_partition(&partition![3, 1, 1, 1], m(3)), Ok(false));
        assert_eq!(is_generalized_ell_partition(&p("10,8,3,2^2,1^5"), m(3)), Ok(true));
        assert_eq!(is_generalized_ell_partition(&Partition::empty(), m(3)), Ok(true));
    }

    #[test]
    fn decompose_examples() {
        let big = p("15,10,8,6,2,2,2,2,2,1,1,1,1,1");
        let expected = JmDecomposition {
            mu: partition![1],
            r: 3,
            s: 2,
            rho: partition![2, 1, 1, 1],
            sigma: partition![2, 1],
        };
        assert_eq!(decompose_jm(&big, m(3)), Ok(expected.clone()));
        assert_eq!(compose_jm(&expected, m(3)), Ok(big));

        assert_eq!(
            decompose_jm(&partition![3, 1], m(3)),
            Ok(JmDecomposition {
                mu: partition![1],
                r: 1,
                s: 0,
                rho: Partition::empty(),
                sigma: Partition::empty(),
            })
        );
        let trivial = JmDecomposition {
            mu: Partition::empty(),
            r: 0,
            s: 0,
            rho: Partition::empty(),
            sigma: Partition::empty(),
        };
        assert_eq!(decompose_jm(&Partition::empty(), m(3)), Ok(trivial.clone()));
        assert_eq!(compose_jm(&trivial, m(3)), Ok(Partition::empty()));
    }

    #[test]
    fn compose_twelve_one() {
        let dec = JmDecomposition {
            mu: partition![1],
            r: 1,
            s: 0,
            rho: partition![3],
            sigma: Partition::empty(),
        };
        assert_eq!(compose_jm(&dec, m(3)), Ok(partition![12, 1]));
        assert_eq!(decompose_jm(&partition![12, 1], m(3)), Ok(dec));
    }

    #[test]
    fn decompose_rejects_non_jm() {
        assert_eq!(
            decompose_jm(&partition![3, 1, 1, 1], m(3)),
            Err(Error::NotJm(partition![3, 1, 1, 1]))
        );
    }

    #[test]
    fn compose_rejects_bad_data() {
        let base = JmDecomposition {
            mu: partition![3, 1],
            r: 1,
            s: 0,
            rho: partition![3],
            sigma: Partition::empty(),
        };
        // (3,1) has a leading step of ell - 1
        assert!(matches!(compose_jm(&base, m(3)), Err(Error::InvalidDecomposition(_))));
        let too_long = JmDecomposition {
            mu: partition![1],
            rho: partition![1, 1, 1],
            ..base.clone()
        };
        assert!(matches!(compose_jm(&too_long, m(3)), Err(Error::InvalidDecomposition(_))));
        let both_free = JmDecomposition {
            mu: Partition::empty(),
            r: 0,
            s: 0,
            rho: partition![1],
            sigma: partition![1],
        };
        assert!(matches!(compose_jm(&both_free, m(3)), Err(Error::InvalidDecomposition(_))));
        let not_core = JmDecomposition {
            mu: partition![3],
            r: 0,
            s: 0,
            rho: Partition::empty(),
            sigma: Partition::empty(),
        };
        assert!(matches!(compose_jm(&not_core, m(3)), Err(Error::InvalidDecomposition(_))));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_jm(&partition![3, 1], 3, m(3)), Ok(6));
        assert_eq!(count_jm(&partition![3, 1], 0, m(3)), Ok(1));
        assert_eq!(count_jm(&Partition::empty(), 0, m(3)), Ok(1));
        assert_eq!(count_jm(&partition![3, 1], 1, m(3)), Ok(2));
        assert_eq!(count_jm(&partition![3], 1, m(3)), Err(Error::NotACore(partition![3])));
    }

    #[test]
    fn enumerate_examples() {
        let expected: Vec<Partition> = ["12,1", "9,4", "9,1^4", "6,4,1^3", "6,1^7", "3,1^10"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(enumerate_jm(&partition![3, 1], 3, m(3)), Ok(expected));
        assert_eq!(enumerate_jm(&partition![2, 1], 0, m(4)), Ok(vec![partition![2, 1]]));
        assert_eq!(
            enumerate_jm(&Partition::empty(), 1, m(3)),
            Ok(vec![partition![3], partition![1, 1, 1]])
        );
    }
}
