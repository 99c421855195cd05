//! Combinatorics of partitions relative to a modulus `ell`: rim hooks and
//! cores, JM partitions, the classical and ladder crystal operators, and
//! ladder regularization with its inverse on locked diagrams.

pub mod crystal;
pub mod error;
pub mod jm;
pub mod partition;
pub mod reg;
pub mod rim_hooks;

pub use crystal::{
    box_type, e_hat, e_tilde, epsilon, epsilon_hat, f_hat, f_tilde, i_signature, ladder_i_signature,
    phi, phi_hat, reduce, residue_content, signature_in_order, BoxType, CrystalModel, ReadingOrder,
    Sign, SignatureEntry, SignatureWord,
};
pub use error::{Error, Result};
pub use jm::{
    compose_jm, count_jm, decompose_jm, enumerate_jm, fayers_witness, is_ell_partition,
    is_generalized_ell_partition, is_jm, star_condition, FayersWitness, JmDecomposition,
};
pub use partition::{ladder_index, residue, BoxPos, LadderIndex, Modulus, Partition, Residue};
pub use reg::{
    deregularize, is_ladder_node, is_l_partition, is_l_partition_lyle, is_weak_ell_partition,
    lock_labels, mullineux, mullineux_with, reg_class, regularize, LockLabel, LockLabels, RegClass,
    ResidueChoice,
};
pub use rim_hooks::{
    adjacent, ell_core, is_core, remove_rim_hook, removable_rim_hooks, CoreResult, HookShape,
    RimHook,
};
