use std::collections::HashSet;

use ladder_core::*;
use proptest::prelude::*;

fn partition_strategy(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn modulus_strategy(lo: usize) -> impl Strategy<Value = Modulus> {
    (lo..=6usize).prop_map(|ell| Modulus::new(ell).unwrap())
}

fn sign_word_strategy() -> impl Strategy<Value = SignatureWord> {
    prop::collection::vec(any::<bool>(), 0..24).prop_map(|bits| SignatureWord {
        entries: bits
            .into_iter()
            .enumerate()
            .map(|(k, plus)| SignatureEntry {
                sign: if plus { Sign::Plus } else { Sign::Minus },
                pos: BoxPos::new(k + 1, 1),
            })
            .collect(),
        order: ReadingOrder::Classical,
    })
}

/// Deletes the first adjacent `-+` pair until none is left.
fn rewrite_reduce(word: &SignatureWord) -> SignatureWord {
    let mut entries = word.entries.clone();
    while let Some(k) = entries
        .windows(2)
        .position(|w| w[0].sign == Sign::Minus && w[1].sign == Sign::Plus)
    {
        entries.drain(k..k + 2);
    }
    SignatureWord { entries, order: word.order }
}

fn iterate<F: Fn(&Partition) -> Option<Partition>>(lambda: &Partition, op: F) -> usize {
    let mut count = 0;
    let mut current = lambda.clone();
    while let Some(next) = op(&current) {
        current = next;
        count += 1;
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hook_is_arm_plus_leg_plus_one(lambda in partition_strategy(9, 9)) {
        let conj = lambda.transpose();
        for b in lambda.boxes() {
            let h = lambda.hook_length(b).unwrap();
            prop_assert_eq!(h, lambda.arm(b).unwrap() + lambda.leg(b).unwrap() + 1);
            prop_assert_eq!(h, conj.hook_length(b.transpose()).unwrap());
        }
        prop_assert_eq!(conj.transpose(), lambda);
    }

    #[test]
    fn text_round_trip(lambda in partition_strategy(9, 9)) {
        let text = lambda.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), lambda);
    }

    #[test]
    fn residues_are_constant_on_ladders(m in modulus_strategy(2), k in 1usize..40) {
        let ladder = LadderIndex(k);
        for b in m.ladder_positions(ladder) {
            prop_assert_eq!(b.ladder(m), ladder);
            prop_assert_eq!(b.residue(m), m.ladder_residue(ladder));
        }
    }

    #[test]
    fn corners_split_by_residue(lambda in partition_strategy(9, 9), m in modulus_strategy(2)) {
        let added: usize = m.residues().map(|i| lambda.addable_boxes(i, m).len()).sum();
        let removed: usize = m.residues().map(|i| lambda.removable_boxes(i, m).len()).sum();
        prop_assert_eq!(added, lambda.addable().len());
        prop_assert_eq!(removed, lambda.removable().len());
        prop_assert_eq!(residue_content(&lambda, m).iter().sum::<usize>(), lambda.size());
    }

    #[test]
    fn stack_reduction_matches_rewriting(word in sign_word_strategy()) {
        let reduced = reduce(&word);
        prop_assert_eq!(&reduced, &rewrite_reduce(&word));
        let signs: Vec<Sign> = reduced.signs().collect();
        let first_minus = signs.iter().position(|&s| s == Sign::Minus).unwrap_or(signs.len());
        prop_assert!(signs[first_minus..].iter().all(|&s| s == Sign::Minus));
    }

    #[test]
    fn operators_are_mutually_inverse(lambda in partition_strategy(8, 8), m in modulus_strategy(2)) {
        for model in [CrystalModel::Classical, CrystalModel::Ladder] {
            for i in m.residues() {
                if let Some(up) = model.f(&lambda, i, m) {
                    prop_assert_eq!(model.e(&up, i, m), Some(lambda.clone()));
                    let added: Vec<BoxPos> = up.boxes().filter(|b| !lambda.contains(*b)).collect();
                    prop_assert_eq!(added.len(), 1);
                    prop_assert_eq!(added[0].residue(m), i);
                }
                if let Some(down) = model.e(&lambda, i, m) {
                    prop_assert_eq!(model.f(&down, i, m), Some(lambda.clone()));
                }
            }
        }
    }

    #[test]
    fn counters_are_string_lengths(lambda in partition_strategy(7, 7), m in modulus_strategy(2)) {
        for model in [CrystalModel::Classical, CrystalModel::Ladder] {
            for i in m.residues() {
                prop_assert_eq!(model.epsilon(&lambda, i, m), iterate(&lambda, |q| model.e(q, i, m)));
                prop_assert_eq!(model.phi(&lambda, i, m), iterate(&lambda, |q| model.f(q, i, m)));
            }
        }
    }

    #[test]
    fn regular_signature_reads_along_ladders(lambda in partition_strategy(9, 12), m in modulus_strategy(2)) {
        prop_assume!(lambda.is_regular(m));
        for i in m.residues() {
            let classical = i_signature(&lambda, i, m);
            let ladders = signature_in_order(&lambda, i, m, ReadingOrder::LadderBottomUp);
            prop_assert_eq!(classical.entries, ladders.entries);
        }
    }

    #[test]
    fn box_types_mark_corners(lambda in partition_strategy(8, 8)) {
        let removable: HashSet<BoxPos> = lambda.removable().into_iter().collect();
        let addable: HashSet<BoxPos> = lambda.addable().into_iter().collect();
        for row in 0..=lambda.len() + 2 {
            for col in 0..=lambda.row_len(1) + 2 {
                let t = box_type(&lambda, row, col);
                let pos = BoxPos::new(row, col);
                let real = row > 0 && col > 0;
                prop_assert_eq!(t == BoxType::E && real, removable.contains(&pos), "{} at {}", t, pos);
                prop_assert_eq!(t == BoxType::J && real, addable.contains(&pos), "{} at {}", t, pos);
            }
        }
    }

    #[test]
    fn removal_order_does_not_matter(lambda in partition_strategy(9, 9), m in modulus_strategy(2), picks in prop::collection::vec(any::<prop::sample::Index>(), 12)) {
        let expected = ell_core(&lambda, m);
        let mut current = lambda.clone();
        let mut weight = 0;
        let mut picks = picks.into_iter().cycle();
        loop {
            let hooks = removable_rim_hooks(&current, m);
            if hooks.is_empty() {
                break;
            }
            let hook = &hooks[picks.next().unwrap().index(hooks.len())];
            current = remove_rim_hook(&current, hook).unwrap();
            weight += 1;
        }
        prop_assert_eq!(CoreResult { core: current, weight }, expected);
    }

    #[test]
    fn core_tests_agree(lambda in partition_strategy(9, 9), m in modulus_strategy(2)) {
        let divisible = lambda.boxes().any(|b| lambda.hook_length(b).unwrap() % m.ell() == 0);
        prop_assert_eq!(is_core(&lambda, m), removable_rim_hooks(&lambda, m).is_empty());
        prop_assert_eq!(is_core(&lambda, m), !divisible);
    }

    #[test]
    fn hook_shape_flips_under_transpose(lambda in partition_strategy(9, 9), m in modulus_strategy(2)) {
        let conj = lambda.transpose();
        let conj_hooks = removable_rim_hooks(&conj, m);
        for hook in removable_rim_hooks(&lambda, m) {
            let mirrored = hook.transpose();
            prop_assert!(conj_hooks.contains(&mirrored));
            prop_assert_eq!(hook.is_horizontal(), mirrored.is_vertical());
        }
    }

    #[test]
    fn regularization_laws(lambda in partition_strategy(8, 10), m in modulus_strategy(2)) {
        let reg = regularize(&lambda, m);
        prop_assert!(reg.is_regular(m));
        prop_assert_eq!(reg.size(), lambda.size());
        prop_assert_eq!(reg.ladder_counts(m), lambda.ladder_counts(m));
        prop_assert_eq!(regularize(&reg, m), reg.clone());
        prop_assert_eq!(lambda.is_regular(m), reg == lambda);

        let low = deregularize(&lambda, m).unwrap();
        prop_assert_eq!(low.ladder_counts(m), lambda.ladder_counts(m));
        prop_assert_eq!(regularize(&low, m), reg.clone());
        prop_assert_eq!(deregularize(&reg, m).unwrap(), low.clone());
        prop_assert_eq!(deregularize(&low, m).unwrap(), low.clone());
        prop_assert!(lock_labels(&low, m).all_locked());
        prop_assert!(is_ladder_node(&low, m));
    }

    #[test]
    fn locks_propagate_up_and_left(lambda in partition_strategy(9, 10), m in modulus_strategy(2)) {
        let labels = lock_labels(&lambda, m);
        for b in labels.locked_boxes() {
            if b.row > 1 {
                prop_assert!(labels.get(BoxPos::new(b.row - 1, b.col)).unwrap().is_locked());
            }
            if labels.get(b) == Some(LockLabel::LockedII) {
                let right = (b.col + 1..=lambda.row_len(b.row))
                    .any(|c| labels.get(BoxPos::new(b.row, c)).unwrap().is_locked());
                prop_assert!(right);
            }
        }
    }

    #[test]
    fn jm_signatures_do_not_cancel(lambda in partition_strategy(9, 9), m in modulus_strategy(3)) {
        prop_assume!(is_jm(&lambda, m).unwrap());
        for i in m.residues() {
            let word = ladder_i_signature(&lambda, i, m);
            prop_assert_eq!(reduce(&word), word);
        }
    }
}
