//! Decorated trees: plane trees labeled on leaves only.
//!
//! For a leaf `f` attached to a node of depth `d`:
//!
//! 1. `-1 <= label(f) <= d - 1`;
//! 2. every internal node `u` of depth `d > 0` has a descendant leaf with
//!    label below `d - 1`;
//! 3. if a leaf `f` in the subtree of a non-root node `u` has label equal to
//!    the depth of `u`'s parent, every leaf of that subtree before `f` in
//!    prefix order has a label at least that depth.
//!
//! Contracting every leaf into its parent (label plus one) turns the family
//! `RS_n` (n+1 internal nodes, n+1 leaves, each internal node with a leaf as
//! first child) into sticky trees with n edges.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::plane_tree::{NodeId, PlaneTree};
use crate::sticky::StickyTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecoratedError {
    /// Labels must be present exactly on leaves.
    LabelShape { node: NodeId },
    /// Condition 1 for leaves fails.
    LeafRange { leaf: NodeId, label: i64, depth: usize },
    /// Condition 2 for leaves fails: no descendant leaf is small enough.
    NoWitnessLeaf { node: NodeId },
    /// Condition 3 for leaves fails in the subtree of `child`.
    LeafOrder { child: NodeId, witness: NodeId, offender: NodeId },
    /// Not a member of `RS_n`.
    NotInRs,
    /// The sticky tree has an internal node that is not primary.
    InternalNotPrimary { node: NodeId },
    UnknownNode { node: NodeId },
}

impl fmt::Display for DecoratedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecoratedError::LabelShape { node } => {
                write!(f, "node {node}: labels belong exactly on leaves")
            }
            DecoratedError::LeafRange { leaf, label, depth } => {
                write!(f, "leaf {leaf} at depth {depth} has label {label} out of range")
            }
            DecoratedError::NoWitnessLeaf { node } => {
                write!(f, "internal node {node} has no small-labeled descendant leaf")
            }
            DecoratedError::LeafOrder { child, witness, offender } => write!(
                f,
                "leaf {offender} precedes {witness} in the subtree of {child} with a smaller label"
            ),
            DecoratedError::NotInRs => write!(f, "tree is not in the contractible family"),
            DecoratedError::InternalNotPrimary { node } => {
                write!(f, "internal node {node} is not primary")
            }
            DecoratedError::UnknownNode { node } => write!(f, "unknown node id {node}"),
        }
    }
}

impl core::error::Error for DecoratedError {}

/// A validated decorated tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedTree {
    shape: PlaneTree,
    /// `Some` exactly at leaves.
    leaf_labels: Vec<Option<i64>>,
}

impl DecoratedTree {
    pub fn validate(shape: PlaneTree, leaf_labels: Vec<Option<i64>>) -> Result<Self, DecoratedError> {
        let n = shape.node_count();
        if leaf_labels.len() != n {
            return Err(DecoratedError::LabelShape { node: leaf_labels.len().min(n) });
        }
        for v in 0..n {
            if shape.is_leaf(v) != leaf_labels[v].is_some() {
                return Err(DecoratedError::LabelShape { node: v });
            }
        }
        // leaf range: -1 <= label <= depth(parent) - 1, i.e. depth(leaf) - 2
        for v in 0..n {
            if let Some(l) = leaf_labels[v] {
                let d = shape.depth_of(v);
                // a root leaf has no attachment depth; only the singleton
                if d == 0 {
                    continue;
                }
                if l < -1 || l > d as i64 - 2 {
                    return Err(DecoratedError::LeafRange { leaf: v, label: l, depth: d });
                }
            }
        }
        // witness leaves for internal nodes
        for u in 1..n {
            if shape.is_leaf(u) {
                continue;
            }
            let d = shape.depth_of(u) as i64;
            let found = (u..shape.subtree_end(u))
                .any(|w| leaf_labels[w].is_some_and(|l| l < d - 1));
            if !found {
                return Err(DecoratedError::NoWitnessLeaf { node: u });
            }
        }
        // prefix-order guard per non-root subtree
        for u in 1..n {
            let d = shape.depth_of(u) as i64 - 1; // depth of u's parent
            let mut offender = None;
            for w in u..shape.subtree_end(u) {
                let Some(l) = leaf_labels[w] else { continue };
                if l == d {
                    if let Some(o) = offender {
                        return Err(DecoratedError::LeafOrder { child: u, witness: w, offender: o });
                    }
                }
                if offender.is_none() && l < d {
                    offender = Some(w);
                }
            }
        }
        Ok(DecoratedTree { shape, leaf_labels })
    }

    pub fn shape(&self) -> &PlaneTree {
        &self.shape
    }

    pub fn leaf_labels(&self) -> &[Option<i64>] {
        &self.leaf_labels
    }

    pub fn leaf_label(&self, v: NodeId) -> Option<i64> {
        self.leaf_labels[v]
    }

    /// Member of `RS_n`: n+1 internal nodes, n+1 leaves, every internal node
    /// with a leaf as first child.
    pub fn in_rs(&self) -> bool {
        let n = self.shape.node_count();
        let leaves = (0..n).filter(|&v| self.shape.is_leaf(v)).count();
        if n != 2 * leaves {
            return false;
        }
        (0..n).filter(|&v| !self.shape.is_leaf(v)).all(|u| {
            self.shape
                .children(u)
                .first()
                .is_some_and(|&c| self.shape.is_leaf(c))
        })
    }

    /// First leaf in prefix order of the subtree of `u` with a label below
    /// `depth(u) - 1`.
    pub fn certificate_leaf(&self, u: NodeId) -> Result<NodeId, DecoratedError> {
        if u >= self.shape.node_count() {
            return Err(DecoratedError::UnknownNode { node: u });
        }
        if u == 0 || self.shape.is_leaf(u) {
            return Err(DecoratedError::LabelShape { node: u });
        }
        let d = self.shape.depth_of(u) as i64;
        (u..self.shape.subtree_end(u))
            .find(|&w| self.leaf_labels[w].is_some_and(|l| l < d - 1))
            .ok_or(DecoratedError::NoWitnessLeaf { node: u })
    }

    /// For each leaf, the number of internal nodes it certifies; `None` on
    /// internal nodes.
    pub fn certificate_counts(&self) -> Vec<Option<usize>> {
        let n = self.shape.node_count();
        let mut counts: Vec<Option<usize>> = (0..n)
            .map(|v| self.shape.is_leaf(v).then_some(0))
            .collect();
        for u in 1..n {
            if !self.shape.is_leaf(u) {
                let f = self.certificate_leaf(u).expect("valid decorated tree");
                *counts[f].as_mut().unwrap() += 1;
            }
        }
        counts
    }

    /// Deletes every leaf and moves its label, plus one, onto its parent.
    pub fn contract(&self) -> Result<StickyTree, DecoratedError> {
        if !self.in_rs() {
            return Err(DecoratedError::NotInRs);
        }
        let n = self.shape.node_count();
        let mut new_id = vec![usize::MAX; n];
        let mut parents: Vec<Option<NodeId>> = Vec::new();
        let mut labels: Vec<usize> = Vec::new();
        for v in 0..n {
            if self.shape.is_leaf(v) {
                continue;
            }
            new_id[v] = parents.len();
            parents.push(self.shape.parent(v).map(|p| new_id[p]));
            // in RS_n the only leaf child is the first one
            let f = self.shape.children(v)[0];
            labels.push((self.leaf_labels[f].unwrap() + 1) as usize);
        }
        let shape = PlaneTree::from_parents(&parents).expect("internal nodes keep prefix order");
        Ok(StickyTree::validate(shape, labels).expect("contraction of a decorated tree is sticky"))
    }
}

/// Inverse of [`DecoratedTree::contract`]: give every node a new first-child
/// leaf carrying its label minus one.
pub fn expand(tree: &StickyTree) -> DecoratedTree {
    let shape = tree.shape();
    let mut parents: Vec<Option<NodeId>> = Vec::new();
    let mut labels: Vec<Option<i64>> = Vec::new();
    fn walk(
        shape: &PlaneTree,
        tree: &StickyTree,
        v: NodeId,
        parent_new: Option<NodeId>,
        parents: &mut Vec<Option<NodeId>>,
        labels: &mut Vec<Option<i64>>,
    ) {
        let id = parents.len();
        parents.push(parent_new);
        labels.push(None);
        parents.push(Some(id));
        labels.push(Some(tree.label(v) as i64 - 1));
        for &c in shape.children(v) {
            walk(shape, tree, c, Some(id), parents, labels);
        }
    }
    walk(shape, tree, 0, None, &mut parents, &mut labels);
    let shape = PlaneTree::from_parents(&parents).expect("expansion keeps prefix order");
    DecoratedTree::validate(shape, labels).expect("expansion of a sticky tree is decorated")
}

/// For a sticky tree whose internal nodes are all primary: drop internal
/// labels, subtract one from leaf labels, keep the shape.
pub fn sync_sticky_to_decorated(tree: &StickyTree) -> Result<DecoratedTree, DecoratedError> {
    let shape = tree.shape();
    for v in 1..shape.node_count() {
        if !shape.is_leaf(v) && !tree.is_primary(v) {
            return Err(DecoratedError::InternalNotPrimary { node: v });
        }
    }
    let labels: Vec<Option<i64>> = (0..shape.node_count())
        .map(|v| shape.is_leaf(v).then(|| tree.label(v) as i64 - 1))
        .collect();
    DecoratedTree::validate(shape.clone(), labels)
}

/// Inverse of [`sync_sticky_to_decorated`]: leaves get their label plus one,
/// internal nodes their depth.
pub fn decorated_to_sync_sticky(tree: &DecoratedTree) -> Result<StickyTree, DecoratedError> {
    let shape = tree.shape();
    let labels: Vec<usize> = (0..shape.node_count())
        .map(|v| match tree.leaf_label(v) {
            Some(l) => (l + 1) as usize,
            None => shape.depth_of(v),
        })
        .collect();
    StickyTree::validate(shape.clone(), labels)
        .map_err(|_| DecoratedError::InternalNotPrimary { node: 0 })
}
