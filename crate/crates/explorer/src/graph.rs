//! Crystal graphs grown from the empty partition.

use ladder_core::{CrystalModel, Modulus, Partition, Residue};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub source: Partition,
    pub target: Partition,
    pub residue: Residue,
}

/// Nodes grouped into ranks, plus residue-labelled edges.
///
/// For a full crystal, `levels[n]` holds the nodes of size `n`, sorted in
/// decreasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub ell: usize,
    pub model: CrystalModel,
    pub levels: Vec<Vec<Partition>>,
    pub edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn node_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Partition> {
        self.levels.iter().flatten()
    }
}

/// Breadth-first closure of the empty partition under every `f_i` of
/// `model`, through partitions of size `depth`. Each level is expanded in
/// parallel and then sorted, so the result does not depend on scheduling.
pub fn build_crystal(m: Modulus, depth: usize, model: CrystalModel) -> CrystalGraph {
    let mut levels = vec![vec![Partition::empty()]];
    let mut edges = Vec::new();
    for _ in 0..depth {
        let frontier = levels.last().expect("at least one level");
        let expanded: Vec<Vec<Edge>> = frontier
            .par_iter()
            .map(|lambda| {
                m.residues()
                    .filter_map(|i| {
                        model.f(lambda, i, m).map(|target| Edge {
                            source: lambda.clone(),
                            target,
                            residue: i,
                        })
                    })
                    .collect()
            })
            .collect();
        let mut next: Vec<Partition> = expanded.iter().flatten().map(|e| e.target.clone()).collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        next.dedup();
        edges.extend(expanded.into_iter().flatten());
        levels.push(next);
    }
    CrystalGraph {
        ell: m.ell(),
        model,
        levels,
        edges,
    }
}

/// The `i`-string through `lambda`: from its highest element down to its
/// lowest, one node per rank.
pub fn string_through(lambda: &Partition, i: Residue, m: Modulus, model: CrystalModel) -> CrystalGraph {
    let mut top = lambda.clone();
    while let Some(up) = model.e(&top, i, m) {
        top = up;
    }
    let mut levels = vec![vec![top.clone()]];
    let mut edges = Vec::new();
    let mut current = top;
    while let Some(next) = model.f(&current, i, m) {
        edges.push(Edge {
            source: current,
            target: next.clone(),
            residue: i,
        });
        levels.push(vec![next.clone()]);
        current = next;
    }
    CrystalGraph {
        ell: m.ell(),
        model,
        levels,
        edges,
    }
}

/// Number of `ell`-regular partitions of each size up to `max`.
pub fn regular_partition_counts(m: Modulus, max: usize) -> Vec<usize> {
    (0..=max)
        .map(|n| Partition::all_of_size(n).iter().filter(|p| p.is_regular(m)).count())
        .collect()
}
