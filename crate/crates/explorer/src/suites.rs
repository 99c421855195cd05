//! Exhaustive verification suites.
//!
//! Each suite walks every relevant partition up to a size bound and records
//! one check per claim. Work is split across threads per partition, and the
//! per-partition reports are merged in input order so the output is stable.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use ladder_core::*;
use rayon::prelude::*;

use crate::graph::{build_crystal, regular_partition_counts, string_through};
use crate::report::VerificationReport;

fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all_of_size).collect()
}

/// Runs `check` on every item in parallel and merges the results in order.
fn for_each<T: Sync>(
    report: &mut VerificationReport,
    items: &[T],
    check: impl Fn(&mut VerificationReport, &T) + Sync,
) {
    let parts: Vec<VerificationReport> = items
        .par_iter()
        .map(|item| {
            let mut local = report.scratch();
            check(&mut local, item);
            local
        })
        .collect();
    for part in parts {
        report.absorb(part);
    }
}

fn show(p: &Option<Partition>) -> String {
    p.as_ref().map_or_else(|| "absent".to_string(), Partition::to_string)
}

/// Checks that the string ends stay in a class and the interior mostly
/// leaves it: `f^phi` and `e^eps` land in the class, `f^k` for `0 < k < phi - 1`
/// and `e^k` for `1 < k < eps` do not.
fn string_end_checks(
    report: &mut VerificationReport,
    name: &str,
    lambda: &Partition,
    m: Modulus,
    model: CrystalModel,
    in_class: &dyn Fn(&Partition) -> bool,
) {
    for i in m.residues() {
        let res = Some(i.value());
        let phi = model.phi(lambda, i, m);
        let mut current = lambda.clone();
        for k in 1..=phi {
            current = model.f(&current, i, m).expect("phi counts the f-string");
            if k == phi {
                report.expect(&format!("{name}_f_top_stays"), lambda, res, in_class(&current));
            } else if k + 1 < phi {
                report.expect(&format!("{name}_f_interior_leaves"), lambda, res, !in_class(&current));
            }
        }
        let eps = model.epsilon(lambda, i, m);
        let mut current = lambda.clone();
        for k in 1..=eps {
            current = model.e(&current, i, m).expect("epsilon counts the e-string");
            if k == eps {
                report.expect(&format!("{name}_e_top_stays"), lambda, res, in_class(&current));
            } else if k > 1 {
                report.expect(&format!("{name}_e_interior_leaves"), lambda, res, !in_class(&current));
            }
        }
    }
}

fn weak(lambda: &Partition, m: Modulus) -> bool {
    lambda.is_regular(m) && is_weak_ell_partition(lambda, m).expect("regular input")
}

/// String-end theorems for the three classes, node membership of JM
/// partitions, L-partitions and cores, and the Mullineux identity on
/// L-partitions, over all partitions of size at most `nmax`.
pub fn theorem_suite(m: Modulus, nmax: usize) -> Result<VerificationReport> {
    let m = m.require_at_least(3)?;
    let mut report = VerificationReport::new("theorems", m.ell()).with_param("nmax", nmax);
    let all = partitions_up_to(nmax);
    for_each(&mut report, &all, |r, lambda| {
        if is_ell_partition(lambda, m) {
            string_end_checks(r, "ell_partition", lambda, m, CrystalModel::Classical, &|q| is_ell_partition(q, m));
        }
        let jm = is_jm(lambda, m).expect("ell >= 3");
        if jm {
            string_end_checks(r, "jm", lambda, m, CrystalModel::Ladder, &|q| is_jm(q, m).expect("ell >= 3"));
            r.expect("jm_is_ladder_node", lambda, None, is_ladder_node(lambda, m));
        }
        if weak(lambda, m) {
            string_end_checks(r, "weak", lambda, m, CrystalModel::Classical, &|q| weak(q, m));
        }
        if is_l_partition(lambda, m).expect("ell >= 3") {
            r.expect("l_partition_is_ladder_node", lambda, None, is_ladder_node(lambda, m));
            let image = mullineux(&regularize(lambda, m), m).map(|p| p.to_string());
            r.expect_eq(
                "mullineux_of_regularized",
                lambda,
                None,
                Ok(regularize(&lambda.transpose(), m).to_string()),
                image,
            );
        }
        if is_core(lambda, m) {
            r.expect("core_is_ladder_node", lambda, None, is_ladder_node(lambda, m));
        }
    });
    Ok(report)
}

/// Regularization intertwines the two crystals on every ladder node up to
/// `depth`: operators commute with it and the string counters agree.
pub fn verify_isomorphism(m: Modulus, depth: usize) -> VerificationReport {
    let mut report = VerificationReport::new("isomorphism", m.ell()).with_param("depth", depth);
    let ladder = build_crystal(m, depth, CrystalModel::Ladder);
    let classical = build_crystal(m, depth, CrystalModel::Classical);
    for (n, (lad, cla)) in ladder.levels.iter().zip(&classical.levels).enumerate() {
        let mut image: Vec<Partition> = lad.iter().map(|p| regularize(p, m)).collect();
        image.sort_unstable_by(|a, b| b.cmp(a));
        image.dedup();
        report.expect_eq("regularize_bijects_level", format!("level {n}"), None, cla, &image);
        let mut lowered: Vec<Partition> = cla
            .iter()
            .map(|p| deregularize(p, m).expect("deregularization succeeds"))
            .collect();
        lowered.sort_unstable_by(|a, b| b.cmp(a));
        report.expect_eq("ladder_level_is_deregularized", format!("level {n}"), None, lad, &lowered);
    }
    let nodes: Vec<Partition> = ladder.nodes().cloned().collect();
    for_each(&mut report, &nodes, |r, lambda| {
        let reg = regularize(lambda, m);
        for i in m.residues() {
            let res = Some(i.value());
            let lift = |p: Option<Partition>| show(&p.map(|q| regularize(&q, m)));
            r.expect_eq("f_commutes", lambda, res, show(&f_tilde(&reg, i, m)), lift(f_hat(lambda, i, m)));
            r.expect_eq("e_commutes", lambda, res, show(&e_tilde(&reg, i, m)), lift(e_hat(lambda, i, m)));
            r.expect_eq("phi_agrees", lambda, res, phi(&reg, i, m), phi_hat(lambda, i, m));
            r.expect_eq("epsilon_agrees", lambda, res, epsilon(&reg, i, m), epsilon_hat(lambda, i, m));
        }
    });
    report
}

/// Graph shape, node classification, operator inverses, the isomorphism
/// with the classical crystal and (for `ell >= 3`) the theorem suite.
pub fn crystal_suite(m: Modulus, depth: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("crystal", m.ell()).with_param("depth", depth);
    let expected_sizes = regular_partition_counts(m, depth);
    for model in [CrystalModel::Classical, CrystalModel::Ladder] {
        let graph = build_crystal(m, depth, model);
        report.expect_eq(&format!("{model}_level_sizes"), "empty", None, &expected_sizes, &graph.level_sizes());
        let mut in_edges: BTreeMap<(&Partition, usize), usize> = BTreeMap::new();
        for edge in &graph.edges {
            *in_edges.entry((&edge.target, edge.residue.value())).or_default() += 1;
            let added: Vec<BoxPos> = edge.target.boxes().filter(|b| !edge.source.contains(*b)).collect();
            let ok = added.len() == 1 && added[0].residue(m) == edge.residue;
            report.expect(&format!("{model}_edge_adds_residue_box"), &edge.target, Some(edge.residue.value()), ok);
        }
        for lambda in graph.nodes() {
            let mut any = lambda.is_empty();
            for i in m.residues() {
                let count = in_edges.get(&(lambda, i.value())).copied().unwrap_or(0);
                let eps = model.epsilon(lambda, i, m);
                report.expect_eq(&format!("{model}_in_edges"), lambda, Some(i.value()), usize::from(eps > 0), count);
                any |= count > 0;
            }
            report.expect(&format!("{model}_reachable"), lambda, None, any);
        }
        let nodes: Vec<Partition> = graph.nodes().cloned().collect();
        let expected: Vec<Partition> = partitions_up_to(depth)
            .into_iter()
            .filter(|p| match model {
                CrystalModel::Classical => p.is_regular(m),
                CrystalModel::Ladder => is_ladder_node(p, m),
            })
            .collect();
        let mut sorted = nodes.clone();
        sorted.sort();
        let mut expected_sorted = expected;
        expected_sorted.sort();
        report.expect_eq(&format!("{model}_node_set"), "all", None, expected_sorted, sorted);
    }

    let all = partitions_up_to(depth);
    for_each(&mut report, &all, |r, lambda| {
        for model in [CrystalModel::Classical, CrystalModel::Ladder] {
            for i in m.residues() {
                let res = Some(i.value());
                if let Some(up) = model.f(lambda, i, m) {
                    r.expect_eq(&format!("{model}_e_undoes_f"), lambda, res, show(&Some(lambda.clone())), show(&model.e(&up, i, m)));
                }
                if let Some(down) = model.e(lambda, i, m) {
                    r.expect_eq(&format!("{model}_f_undoes_e"), lambda, res, show(&Some(lambda.clone())), show(&model.f(&down, i, m)));
                }
            }
        }
    });

    report.absorb(verify_isomorphism(m, depth));
    if m.ell() >= 3 {
        report.absorb(theorem_suite(m, depth)?);
    }
    Ok(report)
}

/// Pairs of characterizations that must agree on every partition up to `nmax`.
pub fn equivalence_suite(m: Modulus, nmax: usize) -> Result<VerificationReport> {
    let m = m.require_at_least(3)?;
    let mut report = VerificationReport::new("equivalence", m.ell()).with_param("nmax", nmax);
    let all = partitions_up_to(nmax);
    for_each(&mut report, &all, |r, lambda| {
        let jm = is_jm(lambda, m).expect("ell >= 3");
        let generalized = is_generalized_ell_partition(lambda, m).expect("ell >= 3");
        r.expect_eq("jm_iff_generalized", lambda, None, jm, generalized);
        r.expect_eq(
            "ell_partition_iff_regular_star",
            lambda,
            None,
            lambda.is_regular(m) && star_condition(lambda, m),
            is_ell_partition(lambda, m),
        );
        r.expect_eq(
            "l_partition_forms_agree",
            lambda,
            None,
            is_l_partition_lyle(lambda, m).expect("ell >= 3"),
            is_l_partition(lambda, m).expect("ell >= 3"),
        );
        let node = is_ladder_node(lambda, m);
        r.expect_eq("node_iff_all_locked", lambda, None, node, lock_labels(lambda, m).all_locked());
        let fixed = deregularize(lambda, m).map(|s| s == *lambda);
        r.expect_eq("node_iff_deregularize_fixed", lambda, None, Ok(node), fixed);
    });
    Ok(report)
}

fn dominates(a: &Partition, b: &Partition) -> bool {
    matches!(a.dominance_compare(b), Some(Ordering::Greater | Ordering::Equal))
}

/// Regularization classes up to `nmax`: extremes in dominance order,
/// idempotence, the composition laws and ladder-count preservation.
pub fn regularization_suite(m: Modulus, nmax: usize) -> VerificationReport {
    let mut report = VerificationReport::new("regularization", m.ell()).with_param("nmax", nmax);
    let mut classes: Vec<Vec<Partition>> = Vec::new();
    for n in 0..=nmax {
        let mut by_counts: BTreeMap<Vec<usize>, Vec<Partition>> = BTreeMap::new();
        for p in Partition::all_of_size(n) {
            by_counts.entry(p.ladder_counts(m)).or_default().push(p);
        }
        classes.extend(by_counts.into_values());
    }
    for_each(&mut report, &classes, |r, class| {
        let top = regularize(&class[0], m);
        let bottom = deregularize(&class[0], m);
        let regular: Vec<&Partition> = class.iter().filter(|p| p.is_regular(m)).collect();
        r.expect_eq("one_regular_member", &class[0], None, vec![&top], regular);
        let Ok(bottom) = bottom else {
            r.expect_eq("deregularize_succeeds", &class[0], None, Ok(()), bottom.map(|_| ()));
            return;
        };
        for lambda in class {
            let reg = regularize(lambda, m);
            let low = deregularize(lambda, m);
            r.expect_eq("same_regularization", lambda, None, &top, &reg);
            r.expect_eq("same_deregularization", lambda, None, Ok(bottom.clone()), low.clone());
            r.expect("regularization_dominates", lambda, None, dominates(&top, lambda));
            r.expect("deregularization_is_dominated", lambda, None, dominates(lambda, &bottom));
            r.expect_eq("regularize_idempotent", lambda, None, &reg, &regularize(&reg, m));
            r.expect_eq("ladder_counts_kept", lambda, None, lambda.ladder_counts(m), reg.ladder_counts(m));
            r.expect_eq("ladder_counts_kept_low", lambda, None, lambda.ladder_counts(m), bottom.ladder_counts(m));
            r.expect_eq("regularize_after_deregularize", lambda, None, &reg, &regularize(&bottom, m));
            r.expect_eq("deregularize_after_regularize", lambda, None, Ok(bottom.clone()), deregularize(&reg, m));
            r.expect_eq("deregularize_idempotent", lambda, None, Ok(bottom.clone()), deregularize(&bottom, m));
        }
        r.expect("smallest_all_locked", &bottom, None, lock_labels(&bottom, m).all_locked());
    });
    report
}

/// The Mullineux map on regular partitions up to `nmax`, and its agreement
/// with transpose-then-regularize exactly on L-partitions.
pub fn mullineux_suite(m: Modulus, nmax: usize) -> Result<VerificationReport> {
    let m = m.require_at_least(3)?;
    let mut report = VerificationReport::new("mullineux", m.ell()).with_param("nmax", nmax);
    let all = partitions_up_to(nmax);
    for_each(&mut report, &all, |r, lambda| {
        if lambda.is_regular(m) {
            let image = mullineux(lambda, m).expect("regular input");
            r.expect("image_regular", lambda, None, image.is_regular(m));
            r.expect_eq("size_kept", lambda, None, lambda.size(), image.size());
            r.expect_eq("involution", lambda, None, Ok(lambda.clone()), mullineux(&image, m));
            r.expect_eq(
                "choice_independent",
                lambda,
                None,
                Ok(image.clone()),
                mullineux_with(lambda, m, ResidueChoice::Largest),
            );
            for i in m.residues() {
                r.expect_eq("epsilon_negated", lambda, Some(i.value()), epsilon(lambda, i, m), epsilon(&image, m.negate(i), m));
            }
        }
        let l_partition = is_l_partition(lambda, m).expect("ell >= 3");
        let agrees = mullineux(&regularize(lambda, m), m).expect("regular input") == regularize(&lambda.transpose(), m);
        r.expect_eq("transpose_rule_iff_l_partition", lambda, None, l_partition, agrees);
    });
    Ok(report)
}

/// The worked examples, reproduced exactly.
pub fn golden_suite() -> VerificationReport {
    let m = Modulus::new(3).expect("3 is a valid modulus");
    let p = |s: &str| -> Partition { s.parse().expect("golden inputs parse") };
    let ps = |items: &[&str]| -> Vec<Partition> { items.iter().map(|s| p(s)).collect() };
    let mut r = VerificationReport::new("golden", 3);

    let lambda = p("2,2,2,1,1,1");
    r.expect_eq("regularize", &lambda, None, p("3,3,2,1"), regularize(&lambda, m));
    let class = reg_class(&lambda, m).map(|c| c.members);
    let mut expected = ps(&["2,2,2,1,1,1", "2,2,2,2,1", "3,2,1,1,1,1", "3,2,2,2", "3,3,1,1,1", "3,3,2,1"]);
    expected.sort_unstable_by(|a, b| b.cmp(a));
    r.expect_eq("reg_class", &lambda, None, Ok(expected), class);

    let lambda = p("6,5,4,3,1,1");
    r.expect_eq("deregularize", &lambda, None, Ok(p("3,3,2,2,2,2,2,1,1,1,1")), deregularize(&lambda, m));
    let map: Vec<String> = lock_labels(&lambda, m)
        .rows()
        .iter()
        .map(|row| row.iter().map(|l| if l.is_locked() { 'L' } else { 'U' }).collect())
        .collect();
    r.expect_eq("lock_map", &lambda, None, vec!["LLLUUU", "LLLUU", "LLUU", "LLU", "L", "L"], map.iter().map(String::as_str).collect());

    let lambda = p("8,5,4,1");
    let one = Residue(1);
    r.expect_eq("f_tilde", &lambda, Some(1), Some(p("8,5,4,2")), f_tilde(&lambda, one, m));
    r.expect_eq("e_tilde", &lambda, Some(1), Some(p("7,5,4,1")), e_tilde(&lambda, one, m));
    r.expect_eq("e_tilde_twice", &lambda, Some(1), None, e_tilde(&lambda, one, m).and_then(|q| e_tilde(&q, one, m)));
    r.expect_eq("f_tilde_twice", &lambda, Some(1), None, f_tilde(&lambda, one, m).and_then(|q| f_tilde(&q, one, m)));
    r.expect_eq("counters", &lambda, Some(1), (1, 1), (epsilon(&lambda, one, m), phi(&lambda, one, m)));
    let string: Vec<Partition> = string_through(&lambda, one, m, CrystalModel::Classical).nodes().cloned().collect();
    r.expect_eq("one_string", &lambda, Some(1), ps(&["7,5,4,1", "8,5,4,1", "8,5,4,2"]), string);
    r.expect_eq("signature", &lambda, Some(1), "+-+-".to_string(), i_signature(&lambda, one, m).to_string());

    let lambda = p("5,3,1,1,1,1,1");
    let two = Residue(2);
    let mut chain = Vec::new();
    let mut current = Some(lambda.clone());
    for _ in 0..5 {
        current = current.and_then(|q| f_hat(&q, two, m));
        chain.push(show(&current));
    }
    r.expect_eq(
        "f_hat_chain",
        &lambda,
        Some(2),
        vec!["6,3,1,1,1,1,1", "6,3,1,1,1,1,1,1", "6,4,1,1,1,1,1,1", "6,4,2,1,1,1,1,1", "absent"],
        chain.iter().map(String::as_str).collect(),
    );
    let boxes = ladder_i_signature(&lambda, two, m).boxes();
    r.expect_eq(
        "ladder_signature",
        &lambda,
        Some(2),
        vec![BoxPos::new(3, 2), BoxPos::new(2, 4), BoxPos::new(8, 1), BoxPos::new(1, 6)],
        boxes,
    );

    let lambda = p("2,1,1,1");
    let up = f_hat(&lambda, two, m);
    r.expect_eq("square_f_hat", &lambda, Some(2), Some(p("2,1,1,1,1")), up.clone());
    r.expect_eq("square_regularize_top", &lambda, Some(2), p("3,2,1"), regularize(&up.unwrap_or_default(), m));
    r.expect_eq("square_regularize_left", &lambda, Some(2), p("2,2,1"), regularize(&lambda, m));
    r.expect_eq("square_f_tilde", &lambda, Some(2), Some(p("3,2,1")), f_tilde(&p("2,2,1"), two, m));

    let big = p("15,10,8,6,2,2,2,2,2,1,1,1,1,1");
    let dec = JmDecomposition { mu: p("1"), r: 3, s: 2, rho: p("2,1,1,1"), sigma: p("2,1") };
    r.expect_eq("decompose", &big, None, Ok(dec.clone()), decompose_jm(&big, m));
    r.expect_eq("compose", &big, None, Ok(big.clone()), compose_jm(&dec, m));

    let core = p("3,1");
    r.expect_eq("count_jm", &core, None, Ok(6), count_jm(&core, 3, m));
    r.expect_eq(
        "enumerate_jm",
        &core,
        None,
        Ok(ps(&["12,1", "9,4", "9,1,1,1,1", "6,4,1,1,1", "6,1,1,1,1,1,1,1", "3,1,1,1,1,1,1,1,1,1,1"])),
        enumerate_jm(&core, 3, m),
    );

    let lambda = p("10,8,3,2^2,1^5");
    let grid: Vec<Vec<usize>> = vec![
        vec![19, 13, 10, 8, 7, 6, 5, 4, 2, 1],
        vec![16, 10, 7, 5, 4, 3, 2, 1],
        vec![10, 4, 1],
        vec![8, 2],
        vec![7, 1],
        vec![5],
        vec![4],
        vec![3],
        vec![2],
        vec![1],
    ];
    r.expect_eq("hook_grid", &lambda, None, grid, lambda.hook_grid());
    r.expect_eq("example_is_jm", &lambda, None, Ok(true), is_jm(&lambda, m));
    r.expect_eq("example_is_generalized", &lambda, None, Ok(true), is_generalized_ell_partition(&lambda, m));

    let lambda = p("4,2,1,1");
    let types: Vec<String> = (0..=6)
        .map(|row| (0..=6).map(|col| box_type(&lambda, row, col).letter()).collect())
        .collect();
    let expected = ["aaaabdd", "aabdeji", "abejigk", "acjgkkk", "behkkkk", "fjgkkkk", "fkkkkkk"];
    r.expect_eq("box_types", &lambda, None, expected.to_vec(), types.iter().map(String::as_str).collect());

    let lambda = p("6,5,3,3,2,2,1");
    r.expect_eq("two_signature", &lambda, Some(2), "+---".to_string(), i_signature(&lambda, two, m).to_string());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ell: usize) -> Modulus {
        Modulus::new(ell).unwrap()
    }

    #[test]
    fn golden_passes() {
        let report = golden_suite();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn small_suites_pass() {
        for report in [
            crystal_suite(m(3), 6).unwrap(),
            equivalence_suite(m(3), 8).unwrap(),
            regularization_suite(m(3), 8),
            mullineux_suite(m(3), 7).unwrap(),
            verify_isomorphism(m(4), 6),
        ] {
            assert!(report.passed(), "{report}");
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn empty_bounds_are_vacuous() {
        let report = theorem_suite(m(3), 0).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn jm_suites_need_ell_three() {
        assert!(theorem_suite(m(2), 4).is_err());
        assert!(equivalence_suite(m(2), 4).is_err());
    }
}
