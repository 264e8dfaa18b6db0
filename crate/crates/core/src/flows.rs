//! Closed flows on ordered forests.
//!
//! A flow assigns an integer input `>= -1` to every node so that every
//! subtree sum (outgoing rate) is nonnegative; it is closed when every root's
//! rate is zero.  Certificate counts of a sticky tree, shifted down by one,
//! give a closed flow on the forest left after deleting the tree's root.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dyck::DyckPath;
use crate::plane_tree::{NodeId, PlaneTree};
use crate::sticky::{RecoverError, StickyTree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowError {
    /// Input vector of tree `tree` does not match its node count.
    ShapeMismatch { tree: usize },
    /// Input below -1.
    InputTooSmall { tree: usize, node: NodeId },
    /// Negative outgoing rate at a node.
    NegativeRate { tree: usize, node: NodeId },
    /// A root has nonzero outgoing rate.
    OpenRoot { tree: usize, rate: i64 },
    /// Counting cap exceeded.
    TooLarge { nodes: usize },
}

impl fmt::Display for FlowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlowError::ShapeMismatch { tree } => {
                write!(f, "tree {tree} and its input vector disagree in size")
            }
            FlowError::InputTooSmall { tree, node } => {
                write!(f, "node {node} of tree {tree} has input below -1")
            }
            FlowError::NegativeRate { tree, node } => {
                write!(f, "node {node} of tree {tree} has negative outgoing rate")
            }
            FlowError::OpenRoot { tree, rate } => {
                write!(f, "root of tree {tree} has outgoing rate {rate}, expected 0")
            }
            FlowError::TooLarge { nodes } => {
                write!(f, "forest of {nodes} nodes exceeds the counting cap")
            }
        }
    }
}

impl core::error::Error for FlowError {}

/// A validated closed flow: per-tree inputs in prefix order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForestFlow {
    forest: Vec<PlaneTree>,
    inputs: Vec<Vec<i64>>,
}

impl ForestFlow {
    /// Checks the flow and closedness conditions.
    pub fn validate(forest: Vec<PlaneTree>, inputs: Vec<Vec<i64>>) -> Result<Self, FlowError> {
        if forest.len() != inputs.len() {
            return Err(FlowError::ShapeMismatch { tree: forest.len().min(inputs.len()) });
        }
        for (t, (tree, input)) in forest.iter().zip(&inputs).enumerate() {
            if input.len() != tree.node_count() {
                return Err(FlowError::ShapeMismatch { tree: t });
            }
            for (v, &x) in input.iter().enumerate() {
                if x < -1 {
                    return Err(FlowError::InputTooSmall { tree: t, node: v });
                }
            }
            for v in (0..tree.node_count()).rev() {
                let rate: i64 = (v..tree.subtree_end(v)).map(|w| input[w]).sum();
                if rate < 0 {
                    return Err(FlowError::NegativeRate { tree: t, node: v });
                }
                if v == 0 && rate != 0 {
                    return Err(FlowError::OpenRoot { tree: t, rate });
                }
            }
        }
        Ok(ForestFlow { forest, inputs })
    }

    pub fn forest(&self) -> &[PlaneTree] {
        &self.forest
    }

    pub fn inputs(&self) -> &[Vec<i64>] {
        &self.inputs
    }

    pub fn node_count(&self) -> usize {
        self.forest.iter().map(PlaneTree::node_count).sum()
    }

    /// Number of nodes with input -1.
    pub fn negative_input_count(&self) -> usize {
        self.inputs.iter().flatten().filter(|&&x| x == -1).count()
    }

    /// Reverses the forest order and every child order; an involution that
    /// preserves closedness.
    pub fn mirror(&self) -> ForestFlow {
        let mut forest = Vec::with_capacity(self.forest.len());
        let mut inputs = Vec::with_capacity(self.inputs.len());
        for (tree, input) in self.forest.iter().zip(&self.inputs).rev() {
            let (mirrored, perm) = mirror_with_order(tree);
            forest.push(mirrored);
            inputs.push(perm.iter().map(|&old| input[old]).collect());
        }
        ForestFlow::validate(forest, inputs).expect("mirroring preserves closedness")
    }
}

/// Mirrors a tree and returns the map from new prefix ids to old ones.
fn mirror_with_order(tree: &PlaneTree) -> (PlaneTree, Vec<NodeId>) {
    let mut parents: Vec<Option<NodeId>> = Vec::with_capacity(tree.node_count());
    let mut order: Vec<NodeId> = Vec::with_capacity(tree.node_count());
    fn walk(
        tree: &PlaneTree,
        v: NodeId,
        parent_new: Option<NodeId>,
        parents: &mut Vec<Option<NodeId>>,
        order: &mut Vec<NodeId>,
    ) {
        let id = parents.len();
        parents.push(parent_new);
        order.push(v);
        for &c in tree.children(v).iter().rev() {
            walk(tree, c, Some(id), parents, order);
        }
    }
    walk(tree, 0, None, &mut parents, &mut order);
    (PlaneTree::from_parents(&parents).unwrap(), order)
}

/// Certificate counts minus one, on the forest under the root.
pub fn sticky_to_flow(tree: &StickyTree) -> ForestFlow {
    let counts = tree.certificate_counts();
    let mut forest = Vec::new();
    let mut inputs = Vec::new();
    for &c in tree.shape().children(0) {
        forest.push(tree.shape().subtree(c));
        inputs.push(
            (c..tree.shape().subtree_end(c))
                .map(|v| counts[v - 1] as i64 - 1)
                .collect(),
        );
    }
    ForestFlow::validate(forest, inputs).expect("certificate counts give a closed flow")
}

/// Inverse of [`sticky_to_flow`]: re-attach a root, counts = inputs + 1,
/// recover the labels.
pub fn flow_to_sticky(flow: &ForestFlow) -> Result<StickyTree, RecoverError> {
    let mut parents: Vec<Option<NodeId>> = vec![None];
    let mut counts: Vec<usize> = Vec::new();
    for (tree, input) in flow.forest().iter().zip(flow.inputs()) {
        let offset = parents.len();
        for v in 0..tree.node_count() {
            parents.push(Some(tree.parent(v).map_or(0, |p| p + offset)));
            counts.push((input[v] + 1) as usize);
        }
    }
    let shape = PlaneTree::from_parents(&parents).expect("forest concatenation is prefix-ordered");
    StickyTree::recover_labels(&shape, &counts)
}

/// Forest obtained from the contour tree of `word` by removing its root.
pub fn forest_of_dyck(word: &DyckPath) -> Vec<PlaneTree> {
    let tree = PlaneTree::from_contour(word);
    tree.children(0).iter().map(|&c| tree.subtree(c)).collect()
}

const COUNT_CAP: usize = 12;

/// Number of closed flows on the forest, by dynamic programming over
/// outgoing rates.  In a closed flow the rate of a child is at most the rate
/// of its parent plus one, so the search space per node stays tiny.
pub fn count_closed_flows(forest: &[PlaneTree]) -> Result<u128, FlowError> {
    let nodes: usize = forest.iter().map(PlaneTree::node_count).sum();
    if nodes > COUNT_CAP {
        return Err(FlowError::TooLarge { nodes });
    }
    // ways(v, r) = number of flows on the subtree of v whose rate at v is r
    fn ways(tree: &PlaneTree, v: NodeId, rate: usize) -> u128 {
        // distribute child rates with total at most rate + 1 (input >= -1)
        let mut by_sum = vec![0u128; rate + 2];
        by_sum[0] = 1;
        for &c in tree.children(v) {
            let mut next = vec![0u128; rate + 2];
            for s in 0..=rate + 1 {
                if by_sum[s] == 0 {
                    continue;
                }
                for r in 0..=(rate + 1 - s) {
                    next[s + r] += by_sum[s] * ways(tree, c, r);
                }
            }
            by_sum = next;
        }
        by_sum.iter().sum()
    }
    Ok(forest.iter().map(|t| ways(t, 0, 0)).product())
}
