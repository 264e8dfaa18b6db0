//! Sticky trees: plane trees with node labels subject to three conditions.
//!
//! For a node `u` of depth `d`:
//!
//! 1. `0 <= label(u) <= d` (so the root is labeled 0);
//! 2. if `d > 0`, some node `v` in the subtree of `u` (possibly `u` itself)
//!    has `label(v) < d`;
//! 3. if some `v` in the subtree of `u` has `label(v) = d`, then every node
//!    of that subtree before `v` in prefix order has a label at least `d`.
//!
//! A non-root node is *primary* when its label equals its depth, *derived*
//! otherwise.  The *certificate* of a non-root node `u` is the first node in
//! prefix order of its subtree whose label is below the depth of `u`; a
//! derived node is its own certificate.  The certificate-counting function
//! `c` records how many nodes each node certifies; labels can be recovered
//! from the shape and `c` alone, which is what makes the Tamari-interval and
//! forest-flow maps invertible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::plane_tree::{NodeId, PlaneTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeClass {
    Root,
    Primary,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StickyError {
    /// Label vector length differs from the node count.
    LabelCount { expected: usize, got: usize },
    /// Condition 1 fails at `node`.
    Condition1 { node: NodeId, label: usize, depth: usize },
    /// Condition 2 fails at `node`: no subtree label is below its depth.
    Condition2 { node: NodeId },
    /// Condition 3 fails: `offender` precedes `witness` in the subtree of
    /// `ancestor` with a label below the depth of `ancestor`, while `witness`
    /// carries exactly that depth as label.
    Condition3 { ancestor: NodeId, witness: NodeId, offender: NodeId },
    UnknownNode { node: NodeId },
    /// The root has no certificate.
    RootCertificate,
}

impl fmt::Display for StickyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StickyError::LabelCount { expected, got } => {
                write!(f, "expected {expected} labels, got {got}")
            }
            StickyError::Condition1 { node, label, depth } => {
                write!(f, "condition 1: node {node} of depth {depth} has label {label}")
            }
            StickyError::Condition2 { node } => {
                write!(f, "condition 2: subtree of node {node} has no label below its depth")
            }
            StickyError::Condition3 { ancestor, witness, offender } => write!(
                f,
                "condition 3: node {offender} precedes {witness} in the subtree of {ancestor} with a smaller label"
            ),
            StickyError::UnknownNode { node } => write!(f, "unknown node id {node}"),
            StickyError::RootCertificate => write!(f, "the root has no certificate"),
        }
    }
}

impl core::error::Error for StickyError {}

/// Errors of [`StickyTree::recover_labels`]: the `(shape, counts)` pair is
/// not the certificate profile of any sticky tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecoverError {
    /// Counts must sum to the number of non-root nodes.
    CountSum { expected: usize, got: usize },
    /// `node` must certify more pending primary nodes than exist.
    Underflow { node: NodeId },
    /// `node` would certify `demand`, which is not one of its ancestors.
    StaleDemand { node: NodeId, demand: NodeId },
    /// `demand` is primary but nothing in its subtree certifies it.
    Uncertified { demand: NodeId },
    /// The recovered labeling does not reproduce the requested counts.
    NotInImage,
}

impl fmt::Display for RecoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecoverError::CountSum { expected, got } => {
                write!(f, "counts sum to {got}, expected {expected}")
            }
            RecoverError::Underflow { node } => {
                write!(f, "node {node} certifies more primary nodes than are pending")
            }
            RecoverError::StaleDemand { node, demand } => {
                write!(f, "node {node} cannot certify {demand}, which is not an ancestor")
            }
            RecoverError::Uncertified { demand } => {
                write!(f, "primary node {demand} is never certified")
            }
            RecoverError::NotInImage => write!(f, "counts are not a certificate profile"),
        }
    }
}

impl core::error::Error for RecoverError {}

/// A validated sticky tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StickyTree {
    shape: PlaneTree,
    labels: Vec<usize>,
}

impl StickyTree {
    /// Checks Conditions 1-3 and wraps the pair on success.
    pub fn validate(shape: PlaneTree, labels: Vec<usize>) -> Result<Self, StickyError> {
        let n = shape.node_count();
        if labels.len() != n {
            return Err(StickyError::LabelCount { expected: n, got: labels.len() });
        }
        // Condition 1
        for v in 0..n {
            let d = shape.depth_of(v);
            if labels[v] > d {
                return Err(StickyError::Condition1 { node: v, label: labels[v], depth: d });
            }
        }
        // Condition 3, one prefix sweep: for every ancestor `a` of the
        // current node, remember the first strictly smaller label seen in its
        // subtree so far.
        let mut active: Vec<(NodeId, Option<NodeId>)> = Vec::new(); // (ancestor, first offender)
        for v in 0..n {
            while let Some(&(a, _)) = active.last() {
                if shape.is_ancestor(a, v) {
                    break;
                }
                active.pop();
            }
            for &(a, offender) in &active {
                if labels[v] == shape.depth_of(a) {
                    if let Some(offender) = offender {
                        return Err(StickyError::Condition3 { ancestor: a, witness: v, offender });
                    }
                }
            }
            for entry in active.iter_mut() {
                if entry.1.is_none() && labels[v] < shape.depth_of(entry.0) {
                    entry.1 = Some(v);
                }
            }
            let self_offender = (labels[v] < shape.depth_of(v)).then_some(v);
            active.push((v, self_offender));
        }
        // Condition 2
        let tree = StickyTree { shape, labels };
        for v in 1..n {
            let d = tree.shape.depth_of(v);
            let end = tree.shape.subtree_end(v);
            if !(v..end).any(|w| tree.labels[w] < d) {
                return Err(StickyError::Condition2 { node: v });
            }
        }
        Ok(tree)
    }

    pub fn shape(&self) -> &PlaneTree {
        &self.shape
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: NodeId) -> usize {
        self.labels[v]
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.shape.edge_count()
    }

    pub fn classify(&self, v: NodeId) -> Result<NodeClass, StickyError> {
        if v >= self.shape.node_count() {
            return Err(StickyError::UnknownNode { node: v });
        }
        Ok(if v == 0 {
            NodeClass::Root
        } else if self.labels[v] == self.shape.depth_of(v) {
            NodeClass::Primary
        } else {
            NodeClass::Derived
        })
    }

    pub fn is_primary(&self, v: NodeId) -> bool {
        v != 0 && self.labels[v] == self.shape.depth_of(v)
    }

    pub fn primary_count(&self) -> usize {
        (1..self.shape.node_count()).filter(|&v| self.is_primary(v)).count()
    }

    /// First node in prefix order of the subtree of `v` with a label below
    /// the depth of `v`.  Guaranteed to exist by Condition 2; a derived node
    /// is its own certificate.
    pub fn certificate(&self, v: NodeId) -> Result<NodeId, StickyError> {
        if v == 0 {
            return Err(StickyError::RootCertificate);
        }
        if v >= self.shape.node_count() {
            return Err(StickyError::UnknownNode { node: v });
        }
        let d = self.shape.depth_of(v);
        (v..self.shape.subtree_end(v))
            .find(|&w| self.labels[w] < d)
            .ok_or(StickyError::Condition2 { node: v })
    }

    /// `c(v)` for each non-root node `v`, indexed by `v - 1` in prefix order.
    /// `c(v) = 0` iff `v` is primary, and the counts sum to the number of
    /// non-root nodes.
    pub fn certificate_counts(&self) -> Vec<usize> {
        let n = self.size();
        let mut counts = vec![0usize; n];
        for v in 1..=n {
            let c = self.certificate(v).expect("non-root node");
            counts[c - 1] += 1;
        }
        counts
    }

    /// Rebuilds the unique sticky tree with the given shape and certificate
    /// counts, processing nodes in prefix order against a stack of pending
    /// primary demands.
    pub fn recover_labels(shape: &PlaneTree, counts: &[usize]) -> Result<Self, RecoverError> {
        let n = shape.edge_count();
        let total: usize = counts.iter().sum();
        if counts.len() != n || total != n {
            return Err(RecoverError::CountSum { expected: n, got: total });
        }
        let mut labels = vec![0usize; n + 1];
        let mut pending: Vec<NodeId> = Vec::new(); // primary nodes awaiting a certificate
        for v in 1..=n {
            // demands whose subtree is already closed can never be met
            if let Some(&d) = pending.iter().find(|&&d| !shape.is_ancestor(d, v)) {
                return Err(RecoverError::Uncertified { demand: d });
            }
            if counts[v - 1] == 0 {
                labels[v] = shape.depth_of(v);
                pending.push(v);
            } else {
                for _ in 0..counts[v - 1] - 1 {
                    let demand = pending.pop().ok_or(RecoverError::Underflow { node: v })?;
                    if !shape.is_ancestor(demand, v) {
                        return Err(RecoverError::StaleDemand { node: v, demand });
                    }
                }
                labels[v] = match pending.last() {
                    Some(&demand) if shape.is_ancestor(demand, v) => shape.depth_of(demand),
                    _ => 0,
                };
            }
        }
        if let Some(&demand) = pending.first() {
            return Err(RecoverError::Uncertified { demand });
        }
        let tree = StickyTree::validate(shape.clone(), labels)
            .map_err(|_| RecoverError::NotInImage)?;
        if tree.certificate_counts() != counts {
            return Err(RecoverError::NotInImage);
        }
        Ok(tree)
    }

    /// Length of the leftmost branch (edges from the root down first
    /// children).
    pub fn leftmost_branch_len(&self) -> usize {
        self.shape.leftmost_branch(0).len() - 1
    }

    /// Length of the rightmost branch.
    pub fn rightmost_branch_len(&self) -> usize {
        self.shape.rightmost_branch(0).len() - 1
    }
}

/// Every sticky tree with `n` edges, enumerated shape by shape with labels
/// assigned in prefix order under Condition 1-3 pruning.
pub fn enumerate_sticky(n: usize) -> Vec<StickyTree> {
    let mut out = Vec::new();
    for shape in PlaneTree::enumerate(n) {
        let mut labels = vec![0usize; n + 1];
        assign(&shape, 1, &mut labels, &mut out);
    }
    out
}

fn assign(shape: &PlaneTree, v: NodeId, labels: &mut Vec<usize>, out: &mut Vec<StickyTree>) {
    let total = shape.node_count();
    if v == total {
        out.push(StickyTree { shape: shape.clone(), labels: labels.clone() });
        return;
    }
    'label: for label in 0..=shape.depth_of(v) {
        // Condition 3 against every ancestor with this label as its depth
        let mut a = shape.parent(v);
        while let Some(anc) = a {
            let d = shape.depth_of(anc);
            if label == d && (anc..v).any(|w| labels[w] < d) {
                continue 'label;
            }
            a = shape.parent(anc);
        }
        labels[v] = label;
        // Condition 2 for every subtree closing at this node
        let mut u = v;
        let mut ok = true;
        while u > 0 {
            if shape.subtree_end(u) == v + 1 {
                let d = shape.depth_of(u);
                if !(u..=v).any(|w| labels[w] < d) {
                    ok = false;
                    break;
                }
            }
            match shape.parent(u) {
                Some(p) if shape.subtree_end(p) == v + 1 => u = p,
                _ => break,
            }
        }
        if ok {
            assign(shape, v + 1, labels, out);
        }
    }
}
